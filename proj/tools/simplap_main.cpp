// Command line front end: inspects weighted complexes stored as JSON
// documents, computes Laplacian spectra, balance certificates and
// eigenvalue bounds, runs the combining constructions, and re-checks the
// spectral theory on any input (`verify`).
//
// Exit codes: 0 success, 1 a `verify` check failed, 2 malformed input or
// violated precondition.

#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "simplap/simplap.hpp"

using namespace simplap;
using nlohmann::ordered_json;

namespace {

struct Options {
  std::string format = "text";
  std::string out_path;
};

void emit(const Options& opt, const std::string& payload) {
  if (opt.out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream f(opt.out_path, std::ios::binary);
  if (!f) throw DocumentError("cannot write to " + opt.out_path);
  f << payload;
}

std::string render_face(const LoadedComplex& lc, const Face& f) {
  std::string s = "{";
  for (std::size_t k = 0; k < f.size(); ++k) {
    if (k > 0) s += ",";
    s += lc.labels.at(static_cast<std::size_t>(f[k]));
  }
  return s + "}";
}

ordered_json face_labels_json(const LoadedComplex& lc, const Face& f) {
  ordered_json arr = ordered_json::array();
  for (Vertex v : f) arr.push_back(lc.labels.at(static_cast<std::size_t>(v)));
  return arr;
}

/// Parses a comma separated label list into a face, preserving the given
/// label order in `order` (needed for positional gluing maps).
Face face_from_labels(const LoadedComplex& lc, const std::string& csv,
                      std::vector<Vertex>* order = nullptr) {
  std::map<std::string, Vertex> id;
  for (std::size_t k = 0; k < lc.labels.size(); ++k)
    id[lc.labels[k]] = static_cast<Vertex>(k);
  Face f;
  std::string cur;
  std::istringstream in(csv);
  while (std::getline(in, cur, ',')) {
    auto it = id.find(cur);
    if (it == id.end())
      throw DocumentError("unknown vertex label '" + cur + "' in '" + csv + "'");
    f.push_back(it->second);
    if (order) order->push_back(it->second);
  }
  if (csv.empty() || csv.back() == ',')
    throw DocumentError("malformed face '" + csv + "'");
  return make_face(std::move(f));
}

int parse_level(const LoadedComplex& lc, int level, int max_valid) {
  if (level < 0 || level > max_valid)
    throw DocumentError("level " + std::to_string(level) +
                        " out of range 0.." + std::to_string(max_valid) +
                        " for '" + lc.name + "'");
  return level;
}

LaplacianKind kind_from_string(const std::string& s) {
  if (s == "up") return LaplacianKind::up;
  if (s == "down") return LaplacianKind::down;
  if (s == "full") return LaplacianKind::full;
  if (s == "signless_up") return LaplacianKind::signless_up;
  if (s == "signless_down") return LaplacianKind::signless_down;
  throw DocumentError("unknown laplacian kind '" + s + "'");
}

// ---------------------------------------------------------------------------
// Subcommand bodies.
// ---------------------------------------------------------------------------

int cmd_info(const Options& opt, const LoadedComplex& lc) {
  const auto& K = lc.complex;
  if (opt.format == "json") {
    ordered_json j;
    j["name"] = lc.name;
    j["dimension"] = K.dim();
    ordered_json counts = ordered_json::object();
    for (int d = -1; d <= K.dim(); ++d)
      counts[std::to_string(d)] = K.faces_of_dim(d).size();
    j["face_counts"] = counts;
    ordered_json facets = ordered_json::array();
    std::vector<Face> fs = K.facets();
    std::sort(fs.begin(), fs.end(), face_order_less);
    for (const Face& f : fs) facets.push_back(face_labels_json(lc, f));
    j["facets"] = facets;
    j["weight_source"] = lc.weight_source;
    ordered_json conn = ordered_json::array();
    for (int i = 0; i <= K.dim(); ++i)
      if (is_path_connected(K, i)) conn.push_back(i);
    j["connected_levels"] = conn;
    emit(opt, j.dump(2) + "\n");
    return 0;
  }
  std::ostringstream out;
  out << "name: " << lc.name << "\n";
  out << "dimension: " << K.dim() << "\n";
  for (int d = -1; d <= K.dim(); ++d)
    out << "faces of dim " << d << ": " << K.faces_of_dim(d).size() << "\n";
  out << "facets:";
  std::vector<Face> fs = K.facets();
  std::sort(fs.begin(), fs.end(), face_order_less);
  for (const Face& f : fs) out << " " << render_face(lc, f);
  out << "\n";
  out << "weights: " << lc.weight_source << "\n";
  out << "connected levels:";
  for (int i = 0; i <= K.dim(); ++i)
    if (is_path_connected(K, i)) out << " " << i;
  out << "\n";
  emit(opt, out.str());
  return 0;
}

int cmd_spectrum(const Options& opt, const LoadedComplex& lc, int level,
                 const std::string& kind_name) {
  LaplacianKind kind = kind_from_string(kind_name);
  const bool down_kind =
      kind == LaplacianKind::down || kind == LaplacianKind::signless_down;
  parse_level(lc, level, down_kind ? lc.complex.dim() : lc.complex.dim() - 1);
  auto spec = eigenvalues(
      laplacian(lc.complex, level, lc.weights, lc.orientation, kind));
  if (opt.format == "json") {
    ordered_json j;
    j["name"] = lc.name;
    j["kind"] = kind_name;
    j["level"] = level;
    ordered_json vals = ordered_json::array();
    for (double v : spec.values) vals.push_back(fmt_g12(v));
    j["eigenvalues"] = vals;
    j["lambda_max"] = fmt_g12(spec.values.back());
    emit(opt, j.dump(2) + "\n");
    return 0;
  }
  std::ostringstream out;
  out << "kind: " << kind_name << "\n";
  out << "level: " << level << "\n";
  out << "eigenvalues:";
  for (double v : spec.values) out << " " << fmt_g12(v);
  out << "\n";
  out << "lambda_max: " << fmt_g12(spec.values.back()) << "\n";
  emit(opt, out.str());
  return 0;
}

int cmd_balance(const Options& opt, const LoadedComplex& lc, int level) {
  parse_level(lc, level, lc.complex.dim() - 1);
  auto G = incidence_signed_graph(lc.complex, level, lc.orientation);
  auto cert = is_balanced(G);
  if (!verify_certificate(G, cert))
    throw std::logic_error("internal error: certificate failed verification");
  if (opt.format == "json") {
    ordered_json j;
    j["name"] = lc.name;
    j["level"] = level;
    j["balanced"] = cert.balanced;
    if (cert.balanced) {
      ordered_json pot = ordered_json::array();
      for (const auto& [f, t] : cert.potential) {
        ordered_json e;
        e["face"] = face_labels_json(lc, f);
        e["sign"] = t;
        pot.push_back(e);
      }
      j["potential"] = pot;
    } else {
      ordered_json cyc = ordered_json::array();
      for (const Face& f : cert.negative_cycle)
        cyc.push_back(face_labels_json(lc, f));
      j["negative_cycle"] = cyc;
      j["cycle_sign"] = cycle_sign(G, cert.negative_cycle);
    }
    emit(opt, j.dump(2) + "\n");
    return 0;
  }
  std::ostringstream out;
  out << "level: " << level << "\n";
  out << "balanced: " << (cert.balanced ? "yes" : "no") << "\n";
  if (cert.balanced) {
    out << "potential:";
    for (const auto& [f, t] : cert.potential)
      out << " " << render_face(lc, f) << (t > 0 ? ":+1" : ":-1");
    out << "\n";
  } else {
    out << "negative cycle:";
    for (const Face& f : cert.negative_cycle) out << " " << render_face(lc, f);
    out << "\n";
    out << "cycle sign: " << cycle_sign(G, cert.negative_cycle) << "\n";
  }
  emit(opt, out.str());
  return 0;
}

int cmd_bounds(const Options& opt, const LoadedComplex& lc, int level) {
  parse_level(lc, level, lc.complex.dim() - 1);
  auto r = equality_report(lc.complex, level, lc.weights, lc.orientation);
  const bool unit = lc.weight_source == "unit";
  if (opt.format == "json") {
    ordered_json j;
    j["name"] = lc.name;
    j["level"] = level;
    j["lambda_max_up"] = fmt_g12(r.lambda_max_up);
    j["lambda_max_signless"] = fmt_g12(r.lambda_max_signless);
    j["degree_sum_bound"] = fmt_g12(r.degree_sum_bound);
    j["hj_bound"] = fmt_g12(r.hj_bound);
    j["dr_bound"] = fmt_g12(r.dr_bound);
    j["dr_bound_applies"] = unit;
    j["balanced"] = r.balanced;
    j["equality_holds"] = r.equality_holds;
    j["degree_bound_attained"] = r.degree_bound_attained;
    j["row_sums_constant"] = r.row_sums_constant;
    emit(opt, j.dump(2) + "\n");
    return 0;
  }
  std::ostringstream out;
  out << "level: " << level << "\n";
  out << "lambda_max(up): " << fmt_g12(r.lambda_max_up) << "\n";
  out << "lambda_max(signless): " << fmt_g12(r.lambda_max_signless) << "\n";
  out << "degree-sum bound: " << fmt_g12(r.degree_sum_bound) << "\n";
  out << "degree+dim bound: " << fmt_g12(r.hj_bound) << "\n";
  out << "vertex-count bound: " << fmt_g12(r.dr_bound)
      << (unit ? "" : " (unit weights only; not applicable)") << "\n";
  out << "balanced: " << (r.balanced ? "yes" : "no") << "\n";
  out << "equality holds: " << (r.equality_holds ? "yes" : "no") << "\n";
  out << "degree bound attained: " << (r.degree_bound_attained ? "yes" : "no")
      << "\n";
  out << "row sums constant: " << (r.row_sums_constant ? "yes" : "no") << "\n";
  emit(opt, out.str());
  return 0;
}

int cmd_betti(const Options& opt, const LoadedComplex& lc) {
  auto betti = betti_numbers(lc.complex);
  std::vector<int> harmonic;
  for (int i = 0; i <= lc.complex.dim(); ++i)
    harmonic.push_back(harmonic_dimension(lc.complex, i, lc.weights));
  const bool match = betti == harmonic;
  if (opt.format == "json") {
    ordered_json j;
    j["name"] = lc.name;
    j["betti"] = betti;
    j["harmonic"] = harmonic;
    j["match"] = match;
    emit(opt, j.dump(2) + "\n");
    return 0;
  }
  std::ostringstream out;
  out << "betti:";
  for (int b : betti) out << " " << b;
  out << "\nharmonic:";
  for (int h : harmonic) out << " " << h;
  out << "\nmatch: " << (match ? "yes" : "no") << "\n";
  emit(opt, out.str());
  return 0;
}

// -- constructions ----------------------------------------------------------

std::string fresh_label(std::string base, std::set<std::string>& used) {
  while (used.count(base)) base += "'";
  used.insert(base);
  return base;
}

/// Embeds doc2's vertices after doc1's (ids shifted by |V1|) and returns the
/// combined label list, suffixing doc2 labels with ' on collision.
std::vector<std::string> combined_labels(const LoadedComplex& a,
                                         const LoadedComplex& b) {
  std::set<std::string> used;
  std::vector<std::string> labels;
  for (const std::string& s : a.labels) labels.push_back(fresh_label(s, used));
  for (const std::string& s : b.labels) labels.push_back(fresh_label(s, used));
  return labels;
}

SimplicialComplex shifted(const LoadedComplex& lc, int shift) {
  std::vector<Face> facets;
  for (const Face& f : lc.complex.facets()) {
    Face g = f;
    for (Vertex& v : g) v += shift;
    facets.push_back(g);
  }
  return SimplicialComplex::from_facets(facets);
}

int cmd_wedge(const Options& opt, const LoadedComplex& a, const LoadedComplex& b,
              const std::string& face1_csv, const std::string& face2_csv,
              const std::string& map_csv) {
  std::vector<Vertex> order1, order2;
  WedgeSpec spec;
  spec.k1 = a.complex;
  spec.k2 = shifted(b, static_cast<int>(a.labels.size()));
  spec.f1 = face_from_labels(a, face1_csv, &order1);
  {
    Face f2 = face_from_labels(b, face2_csv, &order2);
    for (Vertex& v : f2) v += static_cast<int>(a.labels.size());
    for (Vertex& v : order2) v += static_cast<int>(a.labels.size());
    spec.f2 = f2;
  }
  if (map_csv.empty()) {
    if (order1.size() != order2.size())
      throw DocumentError("face1 and face2 have different sizes");
    for (std::size_t k = 0; k < order1.size(); ++k)
      spec.phi.emplace_back(order1[k], order2[k]);
  } else {
    std::istringstream in(map_csv);
    std::string pair;
    while (std::getline(in, pair, ',')) {
      auto colon = pair.find(':');
      if (colon == std::string::npos)
        throw DocumentError("map entries look like LABEL1:LABEL2, got '" +
                            pair + "'");
      Face u = face_from_labels(a, pair.substr(0, colon));
      Face v = face_from_labels(b, pair.substr(colon + 1));
      if (u.size() != 1 || v.size() != 1)
        throw DocumentError("map entries pair single vertices, got '" + pair + "'");
      spec.phi.emplace_back(u[0], v[0] + static_cast<int>(a.labels.size()));
    }
  }
  SimplicialComplex W = wedge_sum(spec);
  emit(opt, serialize_document("wedge(" + a.name + "," + b.name + ")",
                               combined_labels(a, b), W));
  return 0;
}

int cmd_join(const Options& opt, const LoadedComplex& a, const LoadedComplex& b) {
  SimplicialComplex J = join(a.complex, shifted(b, static_cast<int>(a.labels.size())));
  emit(opt, serialize_document("join(" + a.name + "," + b.name + ")",
                               combined_labels(a, b), J));
  return 0;
}

int cmd_product(const Options& opt, const LoadedComplex& a, const LoadedComplex& b) {
  for (const auto* lc : {&a, &b})
    for (const std::string& s : lc->labels)
      if (s.find('|') != std::string::npos)
        throw DocumentError("product factors must not use '|' in labels: '" +
                            s + "'");
  auto P = cartesian_product(a.complex, a.weights, b.complex, b.weights);
  std::vector<std::string> labels;
  for (const auto& [u, v] : P.vertex_pairs)
    labels.push_back(a.labels.at(static_cast<std::size_t>(u)) + "|" +
                     b.labels.at(static_cast<std::size_t>(v)));
  emit(opt, serialize_document("product(" + a.name + "," + b.name + ")", labels,
                               P.complex, &P.weights));
  return 0;
}

int cmd_duplicate(const Options& opt, const LoadedComplex& lc,
                  const std::string& motif_csv) {
  MotifSpec spec;
  spec.k = lc.complex;
  Face m = face_from_labels(lc, motif_csv);  // reuse label parsing
  spec.motif_vertices.assign(m.begin(), m.end());
  auto R = duplicate_motif(spec);
  std::set<std::string> used(lc.labels.begin(), lc.labels.end());
  std::vector<std::string> labels = lc.labels;
  std::map<Vertex, Vertex> primed_of;
  for (const auto& [orig, prime] : R.primed) primed_of[prime] = orig;
  for (Vertex v = static_cast<Vertex>(lc.labels.size());; ++v) {
    auto it = primed_of.find(v);
    if (it == primed_of.end()) break;
    labels.push_back(fresh_label(
        lc.labels.at(static_cast<std::size_t>(it->second)) + "'", used));
  }
  emit(opt, serialize_document("duplicate(" + lc.name + ")", labels, R.complex));
  return 0;
}

// -- verify -----------------------------------------------------------------

int cmd_verify(const Options& opt, const LoadedComplex& lc, int level) {
  const auto& K = lc.complex;
  const bool unit = lc.weight_source == "unit";
  std::ostringstream out;
  std::vector<std::string> violations;

  std::vector<int> levels;
  if (level >= 0) {
    parse_level(lc, level, K.dim() - 1);
    levels.push_back(level);
  } else {
    for (int i = 0; i <= K.dim() - 1; ++i) levels.push_back(i);
  }

  for (int i = 0; i <= K.dim() - 1; ++i) {
    Eigen::MatrixXi prod = coboundary_matrix(K, i, lc.orientation).mat *
                           coboundary_matrix(K, i - 1, lc.orientation).mat;
    if (prod.cwiseAbs().maxCoeff() != 0)
      violations.push_back("coboundary composition at level " +
                           std::to_string(i) + " is nonzero");
  }

  for (int i : levels) {
    auto G = incidence_signed_graph(K, i, lc.orientation);
    auto cert = is_balanced(G);
    if (!verify_certificate(G, cert))
      violations.push_back("level " + std::to_string(i) +
                           ": balance certificate failed verification");
    if (!is_path_connected(K, i)) {
      out << "level " << i << ": skipped (incidence graph disconnected)\n";
      continue;
    }
    auto r = equality_report(K, i, lc.weights, lc.orientation);
    out << "level " << i << ": lambda_up=" << fmt_g12(r.lambda_max_up)
        << " lambda_signless=" << fmt_g12(r.lambda_max_signless)
        << " ds=" << fmt_g12(r.degree_sum_bound)
        << " hj=" << fmt_g12(r.hj_bound)
        << " balanced=" << (r.balanced ? "yes" : "no")
        << " equality=" << (r.equality_holds ? "yes" : "no") << "\n";
    if (r.lambda_max_up > r.lambda_max_signless + 1e-8)
      violations.push_back("level " + std::to_string(i) +
                           ": lambda_max(up) exceeds lambda_max(signless)");
    if (r.lambda_max_signless > r.degree_sum_bound + 1e-9)
      violations.push_back("level " + std::to_string(i) +
                           ": lambda_max(signless) exceeds the degree-sum bound");
    if (r.degree_sum_bound > r.hj_bound + 1e-9)
      violations.push_back("level " + std::to_string(i) +
                           ": degree-sum bound exceeds the degree+dim bound");
    if (unit && r.lambda_max_up > r.dr_bound + 1e-9)
      violations.push_back("level " + std::to_string(i) +
                           ": lambda_max(up) exceeds the vertex-count bound");
    if (r.equality_holds != r.balanced)
      violations.push_back(
          "level " + std::to_string(i) +
          ": spectral equality and balance disagree (equality=" +
          (r.equality_holds ? "yes" : "no") +
          ", balanced=" + (r.balanced ? "yes" : "no") + ")");
  }

  if (violations.empty()) {
    out << "all checks passed\n";
    emit(opt, out.str());
    return 0;
  }
  for (const std::string& v : violations) out << "VIOLATION: " << v << "\n";
  out << "offending document:\n"
      << serialize_document(lc.name, lc.labels, K, &lc.weights, &lc.orientation);
  emit(opt, out.str());
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Laplacian spectra, balance and bounds for weighted complexes"};
  app.require_subcommand(1);
  app.fallthrough();  // allow --format/--out after the subcommand name

  Options opt;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--out", opt.out_path, "Write output to a file");

  std::string doc1, doc2, kind = "up", weights_override, face1_csv, face2_csv,
                          map_csv, motif_csv;
  int level = -1;

  auto* info = app.add_subcommand("info", "Summarize a complex document");
  info->add_option("document", doc1)->required();

  auto* spectrum = app.add_subcommand("spectrum", "Laplacian eigenvalues");
  spectrum->add_option("document", doc1)->required();
  spectrum->add_option("--level", level, "Chain level i")->required();
  spectrum->add_option("--kind", kind, "Laplacian kind")
      ->check(CLI::IsMember(
          {"up", "down", "full", "signless_up", "signless_down"}))
      ->capture_default_str();
  spectrum->add_option("--weights", weights_override,
                       "Override the document weighting")
      ->check(CLI::IsMember({"unit", "normalized"}));

  auto* balance = app.add_subcommand(
      "balance", "Decide balance of the level-i incidence graph");
  balance->add_option("document", doc1)->required();
  balance->add_option("--level", level)->required();

  auto* bounds = app.add_subcommand(
      "bounds", "Largest-eigenvalue bounds and the equality test");
  bounds->add_option("document", doc1)->required();
  bounds->add_option("--level", level)->required();
  bounds->add_option("--weights", weights_override)
      ->check(CLI::IsMember({"unit", "normalized"}));

  auto* betti = app.add_subcommand(
      "betti", "Reduced homology ranks and harmonic dimensions");
  betti->add_option("document", doc1)->required();

  auto* wedge = app.add_subcommand("wedge", "Glue two complexes along a face");
  wedge->add_option("document1", doc1)->required();
  wedge->add_option("document2", doc2)->required();
  wedge->add_option("--face1", face1_csv, "Face of document1 (labels, comma separated)")
      ->required();
  wedge->add_option("--face2", face2_csv, "Face of document2")->required();
  wedge->add_option("--map", map_csv,
                    "Identification map LABEL1:LABEL2,...; defaults to pairing "
                    "--face1 and --face2 positionally");

  auto* join_cmd = app.add_subcommand("join", "Join of two complexes");
  join_cmd->add_option("document1", doc1)->required();
  join_cmd->add_option("document2", doc2)->required();

  auto* product = app.add_subcommand("product", "Cartesian product over the vertex grid");
  product->add_option("document1", doc1)->required();
  product->add_option("document2", doc2)->required();

  auto* duplicate = app.add_subcommand("duplicate", "Duplicate a motif");
  duplicate->add_option("document", doc1)->required();
  duplicate->add_option("--motif-vertices", motif_csv,
                        "Vertex labels spanning the motif, comma separated")
      ->required();

  auto* verify = app.add_subcommand(
      "verify", "Re-check the eigenvalue inequalities and balance equivalence");
  verify->add_option("document", doc1)->required();
  verify->add_option("--level", level, "Only this level (default: all)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (info->parsed()) return cmd_info(opt, load_document_file(doc1));
    if (spectrum->parsed())
      return cmd_spectrum(opt, load_document_file(doc1, weights_override),
                          level, kind);
    if (balance->parsed()) return cmd_balance(opt, load_document_file(doc1), level);
    if (bounds->parsed())
      return cmd_bounds(opt, load_document_file(doc1, weights_override), level);
    if (betti->parsed()) return cmd_betti(opt, load_document_file(doc1));
    if (wedge->parsed())
      return cmd_wedge(opt, load_document_file(doc1), load_document_file(doc2),
                       face1_csv, face2_csv, map_csv);
    if (join_cmd->parsed())
      return cmd_join(opt, load_document_file(doc1), load_document_file(doc2));
    if (product->parsed())
      return cmd_product(opt, load_document_file(doc1), load_document_file(doc2));
    if (duplicate->parsed())
      return cmd_duplicate(opt, load_document_file(doc1), motif_csv);
    if (verify->parsed()) return cmd_verify(opt, load_document_file(doc1), level);
  } catch (const DocumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
