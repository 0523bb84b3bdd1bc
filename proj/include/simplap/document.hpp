#pragma once

/**
 * JSON documents describing weighted, oriented complexes.
 *
 * Layout:
 *   {
 *     "name": "two_triangles",
 *     "vertices": ["0", "1", "2", "3"],            // optional, fixes order
 *     "facets": [["0","1","2"], ["1","2","3"]],
 *     "weights": {"": "12", "0": "2", "0,1": "1", ...},   // optional
 *     "weight_preset": "unit" | "normalized",              // optional
 *     "orientation_flips": [["0","1"]]                      // optional
 *   }
 *
 * Vertex labels are arbitrary strings without commas (non-negative JSON
 * integers are accepted and treated as their decimal strings).  The label
 * order — explicit via "vertices", otherwise numeric when every label is a
 * number and lexicographic when not — defines the canonical vertex order
 * used for orientations.  Weight keys are comma-joined sorted labels, the
 * empty key naming the empty face; values are decimal strings (shortest
 * round-trip form on output, so reloading reproduces the doubles exactly).
 */

#include <charconv>
#include <cctype>
#include <cstdio>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "simplap/chain.hpp"
#include "simplap/complex.hpp"

namespace simplap {

struct DocumentError : std::runtime_error {
  DocumentError(const std::string& msg, const std::string& where = "")
      : std::runtime_error(where.empty() ? msg : msg + " (" + where + ")"),
        location(where) {}
  std::string location;
};

struct LoadedComplex {
  std::string name;
  std::vector<std::string> labels;  // vertex id v <-> labels[v]
  SimplicialComplex complex;
  WeightFunction weights;
  std::string weight_source;  // "unit", "normalized" or "explicit"
  OrientationAssignment orientation;
};

/// Shortest decimal string that parses back to exactly this double.
inline std::string weight_decimal(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, end);
}

/// Fixed 12-significant-digit rendering used for every numeric report.
inline std::string fmt_g12(double v) {
  if (v == 0.0) v = 0.0;  // normalize -0
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

namespace detail {

inline std::string label_of(const nlohmann::json& j, const std::string& where) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s.empty()) throw DocumentError("vertex labels must be nonempty", where);
    if (s.find(',') != std::string::npos)
      throw DocumentError("vertex labels must not contain ','", where);
    return s;
  }
  if (j.is_number_unsigned())
    return std::to_string(j.get<unsigned long long>());
  throw DocumentError("vertex labels must be strings or non-negative integers",
                      where);
}

inline bool all_numeric(const std::set<std::string>& labels) {
  for (const std::string& s : labels) {
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

inline double parse_weight_value(const nlohmann::json& j, const std::string& where) {
  double v = 0.0;
  if (j.is_number()) {
    v = j.get<double>();
  } else if (j.is_string()) {
    const std::string s = j.get<std::string>();
    const char* b = s.c_str();
    char* e = nullptr;
    v = std::strtod(b, &e);
    if (e != b + s.size() || s.empty())
      throw DocumentError("weight value is not a decimal number: '" + s + "'", where);
  } else {
    throw DocumentError("weight values must be decimal strings or numbers", where);
  }
  if (!std::isfinite(v) || !(v > 0.0))
    throw DocumentError("weights must be positive and finite", where);
  return v;
}

}  // namespace detail

/// Parses a document and realizes the complex, weights and orientation.
/// `weight_override` ("unit" or "normalized"), when nonempty, replaces
/// whatever weighting the document specifies.
inline LoadedComplex load_document_text(const std::string& text,
                                        const std::string& weight_override = "") {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DocumentError(std::string("invalid JSON: ") + e.what(),
                        "byte " + std::to_string(e.byte));
  }
  if (!doc.is_object()) throw DocumentError("document root must be an object");

  LoadedComplex out;
  out.name = doc.value("name", std::string{});
  if (!doc.contains("facets") || !doc["facets"].is_array())
    throw DocumentError("document needs a 'facets' array");

  // Collect raw facets and the label universe.
  std::vector<std::vector<std::string>> raw_facets;
  std::set<std::string> label_set;
  {
    std::size_t idx = 0;
    for (const auto& jf : doc["facets"]) {
      const std::string where = "facets[" + std::to_string(idx) + "]";
      if (!jf.is_array()) throw DocumentError("facets must be arrays of labels", where);
      std::vector<std::string> facet;
      for (const auto& jl : jf) facet.push_back(detail::label_of(jl, where));
      for (const std::string& s : facet) label_set.insert(s);
      raw_facets.push_back(std::move(facet));
      ++idx;
    }
  }

  // Resolve the vertex order.
  if (doc.contains("vertices")) {
    if (!doc["vertices"].is_array())
      throw DocumentError("'vertices' must be an array of labels");
    std::set<std::string> given;
    for (const auto& jl : doc["vertices"]) {
      std::string s = detail::label_of(jl, "vertices");
      if (!given.insert(s).second)
        throw DocumentError("duplicate vertex label '" + s + "' in 'vertices'");
      out.labels.push_back(s);
    }
    if (given != label_set)
      throw DocumentError(
          "'vertices' must list exactly the labels used by 'facets'");
  } else {
    out.labels.assign(label_set.begin(), label_set.end());
    if (detail::all_numeric(label_set)) {
      std::sort(out.labels.begin(), out.labels.end(),
                [](const std::string& a, const std::string& b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  return a < b;  // equal length: numeric == lexicographic
                });
    }
  }
  std::map<std::string, Vertex> id;
  for (std::size_t k = 0; k < out.labels.size(); ++k)
    id[out.labels[k]] = static_cast<Vertex>(k);

  auto face_of_labels = [&](const std::vector<std::string>& labels,
                            const std::string& where) {
    Face f;
    f.reserve(labels.size());
    for (const std::string& s : labels) {
      auto it = id.find(s);
      if (it == id.end())
        throw DocumentError("unknown vertex label '" + s + "'", where);
      f.push_back(it->second);
    }
    try {
      return make_face(std::move(f));
    } catch (const std::invalid_argument& e) {
      throw DocumentError(e.what(), where);
    }
  };

  std::vector<Face> facets;
  for (std::size_t k = 0; k < raw_facets.size(); ++k)
    facets.push_back(face_of_labels(raw_facets[k], "facets[" + std::to_string(k) + "]"));
  out.complex = SimplicialComplex::from_facets(facets);

  // Weights: explicit map XOR preset XOR default unit.
  const bool has_map = doc.contains("weights");
  const bool has_preset = doc.contains("weight_preset");
  if (has_map && has_preset)
    throw DocumentError("'weights' and 'weight_preset' are mutually exclusive");
  std::string source = "unit";
  if (has_preset) {
    source = doc["weight_preset"].get<std::string>();
    if (source != "unit" && source != "normalized")
      throw DocumentError("unknown weight_preset '" + source + "'");
  } else if (has_map) {
    source = "explicit";
  }
  if (!weight_override.empty()) {
    if (weight_override != "unit" && weight_override != "normalized")
      throw DocumentError("unknown weight override '" + weight_override + "'");
    source = weight_override;
  }

  if (source == "unit") {
    out.weights = unit_weights(out.complex);
  } else if (source == "normalized") {
    out.weights = normalized_weights(out.complex);
  } else {
    if (!doc["weights"].is_object())
      throw DocumentError("'weights' must be an object keyed by faces");
    bool has_empty = false;
    for (const auto& [key, value] : doc["weights"].items()) {
      const std::string where = "weights['" + key + "']";
      if (key.empty()) {
        out.weights.set(Face{}, detail::parse_weight_value(value, where));
        has_empty = true;
        continue;
      }
      std::vector<std::string> parts;
      std::string cur;
      for (char c : key) {
        if (c == ',') {
          parts.push_back(cur);
          cur.clear();
        } else {
          cur += c;
        }
      }
      parts.push_back(cur);
      Face f = face_of_labels(parts, where);
      if (!out.complex.contains(f))
        throw DocumentError("weight given for a face outside the complex", where);
      out.weights.set(f, detail::parse_weight_value(value, where));
    }
    for (int d = 0; d <= out.complex.dim(); ++d)
      for (const Face& f : out.complex.faces_of_dim(d))
        if (!out.weights.defined_for(f))
          throw DocumentError("explicit weights must cover every face; missing " +
                              face_to_string(f));
    if (!has_empty) {
      double total = 0.0;
      for (const Face& v : out.complex.faces_of_dim(0))
        total += out.weights.at(v);
      out.weights.set(Face{}, total);
    }
  }
  out.weight_source = source;

  if (doc.contains("orientation_flips")) {
    if (!doc["orientation_flips"].is_array())
      throw DocumentError("'orientation_flips' must be an array of faces");
    std::vector<Face> flips;
    std::size_t idx = 0;
    for (const auto& jf : doc["orientation_flips"]) {
      const std::string where = "orientation_flips[" + std::to_string(idx) + "]";
      if (!jf.is_array()) throw DocumentError("flip entries must be faces", where);
      std::vector<std::string> labels;
      for (const auto& jl : jf) labels.push_back(detail::label_of(jl, where));
      Face f = face_of_labels(labels, where);
      if (!out.complex.contains(f) || face_dim(f) < 0)
        throw DocumentError("flip of a face outside the complex", where);
      flips.push_back(std::move(f));
      ++idx;
    }
    try {
      out.orientation = OrientationAssignment::from_flips(flips);
    } catch (const std::invalid_argument& e) {
      throw DocumentError(e.what(), "orientation_flips");
    }
  }
  return out;
}

inline LoadedComplex load_document_file(const std::string& path,
                                        const std::string& weight_override = "") {
  std::FILE* fp = std::fopen(path.c_str(), "rb");
  if (!fp) throw DocumentError("cannot open file: " + path);
  std::string text;
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof(buf), fp)) > 0) text.append(buf, got);
  std::fclose(fp);
  return load_document_text(text, weight_override);
}

/// Serializes a complex back into the document format with deterministic
/// key and face order.  Weights and orientation sections appear only when
/// supplied.
inline std::string serialize_document(const std::string& name,
                                      const std::vector<std::string>& labels,
                                      const SimplicialComplex& K,
                                      const WeightFunction* weights = nullptr,
                                      const OrientationAssignment* orientation = nullptr) {
  nlohmann::ordered_json doc;
  doc["name"] = name;
  auto face_labels = [&](const Face& f) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (Vertex v : f) arr.push_back(labels.at(static_cast<std::size_t>(v)));
    return arr;
  };
  nlohmann::ordered_json verts = nlohmann::ordered_json::array();
  for (const Face& f : K.faces_of_dim(0))
    verts.push_back(labels.at(static_cast<std::size_t>(f[0])));
  doc["vertices"] = verts;

  std::vector<Face> facets = K.facets();
  std::sort(facets.begin(), facets.end(), face_order_less);
  nlohmann::ordered_json jf = nlohmann::ordered_json::array();
  for (const Face& f : facets) jf.push_back(face_labels(f));
  doc["facets"] = jf;

  if (weights) {
    nlohmann::ordered_json jw = nlohmann::ordered_json::object();
    for (int d = -1; d <= K.dim(); ++d) {
      for (const Face& f : K.faces_of_dim(d)) {
        std::string key;
        for (std::size_t k = 0; k < f.size(); ++k) {
          if (k > 0) key += ",";
          key += labels.at(static_cast<std::size_t>(f[k]));
        }
        jw[key] = weight_decimal(weights->at(f));
      }
    }
    doc["weights"] = jw;
  }
  if (orientation && !orientation->is_canonical()) {
    std::vector<Face> flips(orientation->flipped_faces().begin(),
                            orientation->flipped_faces().end());
    std::sort(flips.begin(), flips.end(), face_order_less);
    nlohmann::ordered_json ja = nlohmann::ordered_json::array();
    for (const Face& f : flips) ja.push_back(face_labels(f));
    doc["orientation_flips"] = ja;
  }
  return doc.dump(2) + "\n";
}

}  // namespace simplap
