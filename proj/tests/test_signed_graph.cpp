#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace simplap;
using fixtures::simplex;

namespace {

int count_negative(const SignedGraph& G) {
  int n = 0;
  for (const auto& e : G.edges)
    if (e.sign == -1) ++n;
  return n;
}

}  // namespace

TEST_CASE("incidence graph of a triangle at level 0") {
  OrientationAssignment o;
  auto G = incidence_signed_graph(fixtures::hollow_triangle(), 0, o);
  REQUIRE(G.left.size() == 3);
  REQUIRE(G.right.size() == 3);
  REQUIRE(G.edges.size() == 6);
  // Each edge {a,b} meets {b} with sign +1 and {a} with sign -1.
  CHECK(count_negative(G) == 3);
  for (const auto& e : G.edges) {
    const Face& v = G.left[static_cast<std::size_t>(e.u)];
    const Face& f = G.right[static_cast<std::size_t>(e.v)];
    CHECK(e.sign == incidence_sign(v, f, o));
  }
  auto cert = is_balanced(G);
  CHECK_FALSE(cert.balanced);
  CHECK(verify_certificate(G, cert));
  CHECK(cycle_sign(G, cert.negative_cycle) == -1);
}

TEST_CASE("incidence graph of a full triangle at level 1 is a signed star") {
  OrientationAssignment o;
  auto G = incidence_signed_graph(fixtures::full_triangle(), 1, o);
  REQUIRE(G.left.size() == 3);   // edges, lex: {0,1},{0,2},{1,2}
  REQUIRE(G.right.size() == 1);  // the triangle
  REQUIRE(G.edges.size() == 3);
  CHECK(G.edges[0].sign == +1);
  CHECK(G.edges[1].sign == -1);
  CHECK(G.edges[2].sign == +1);
  auto cert = is_balanced(G);
  CHECK(cert.balanced);
  CHECK(verify_certificate(G, cert));
  CHECK(cert.potential.size() == 4);
}

TEST_CASE("vertex ids and face lookups") {
  OrientationAssignment o;
  auto G = incidence_signed_graph(fixtures::two_triangles(), 1, o);
  CHECK(G.num_vertices() == 7);
  CHECK(G.vertex_id({0, 1}) == 0);
  CHECK(G.vertex_id({0, 1, 2}) == 5);
  CHECK(G.face_of(6) == Face{1, 2, 3});
  CHECK_THROWS_AS(G.vertex_id({0, 3}), std::invalid_argument);
  CHECK_THROWS_AS(G.face_of(7), std::out_of_range);
  CHECK_THROWS_AS(incidence_signed_graph(fixtures::two_triangles(), 2, o),
                  std::invalid_argument);
}

TEST_CASE("balance certificates") {
  OrientationAssignment o;
  SECTION("balanced: the potential explains every edge sign") {
    auto G = incidence_signed_graph(fixtures::p3(), 0, o);
    auto cert = is_balanced(G);
    REQUIRE(cert.balanced);
    CHECK(cert.negative_cycle.empty());
    for (const auto& e : G.edges) {
      int tu = cert.potential.at(G.left[static_cast<std::size_t>(e.u)]);
      int tv = cert.potential.at(G.right[static_cast<std::size_t>(e.v)]);
      CHECK(e.sign == tu * tv);
    }
    CHECK(verify_certificate(G, cert));
  }
  SECTION("unbalanced: the witness cycle has negative sign product") {
    auto G = incidence_signed_graph(simplex(2), 0, o);
    auto cert = is_balanced(G);
    REQUIRE_FALSE(cert.balanced);
    REQUIRE(cert.negative_cycle.size() >= 4);
    CHECK(cycle_sign(G, cert.negative_cycle) == -1);
    CHECK(verify_certificate(G, cert));
  }
  SECTION("tampered certificates fail verification") {
    auto G = incidence_signed_graph(fixtures::p3(), 0, o);
    auto cert = is_balanced(G);
    cert.potential[{1}] = -cert.potential[{1}];
    CHECK_FALSE(verify_certificate(G, cert));

    auto H = incidence_signed_graph(simplex(2), 0, o);
    auto bad = is_balanced(H);
    bad.negative_cycle.clear();
    CHECK_FALSE(verify_certificate(H, bad));
    bad.negative_cycle = {Face{0}, Face{5}};  // not even adjacent
    CHECK_FALSE(verify_certificate(H, bad));
  }
}

TEST_CASE("cycle sign evaluation") {
  OrientationAssignment o;
  auto G = incidence_signed_graph(fixtures::hollow_triangle(), 0, o);
  // Walk the hexagon {0},{0,1},{1},{1,2},{2},{0,2}.
  std::vector<Face> hexagon = {{0}, {0, 1}, {1}, {1, 2}, {2}, {0, 2}};
  CHECK(cycle_sign(G, hexagon) == -1);
  CHECK_THROWS_AS(cycle_sign(G, {Face{0}}), std::invalid_argument);
  CHECK_THROWS_WITH(cycle_sign(G, {Face{0}, Face{1, 2}}),
                    Catch::Matchers::ContainsSubstring("adjacent"));
}

TEST_CASE("switching") {
  OrientationAssignment o;
  auto G = incidence_signed_graph(fixtures::two_triangles(), 0, o);

  SECTION("switching twice restores the graph") {
    auto S = switch_signs(G, {Face{1}, Face{1, 2}});
    CHECK_FALSE(S == G);
    CHECK(switch_signs(S, {Face{1}, Face{1, 2}}) == G);
  }
  SECTION("switching preserves the balance verdict") {
    auto S = switch_signs(G, {Face{0}, Face{2}, Face{0, 1}});
    CHECK(is_balanced(S).balanced == is_balanced(G).balanced);
    CHECK(brute_force_balance(S) == brute_force_balance(G));
  }
  SECTION("switching the negative part of a potential clears all signs") {
    auto P = incidence_signed_graph(fixtures::p3(), 0, o);
    auto cert = is_balanced(P);
    REQUIRE(cert.balanced);
    std::vector<Face> S;
    for (const auto& [f, t] : cert.potential)
      if (t == -1) S.push_back(f);
    auto cleared = switch_signs(P, S);
    CHECK(count_negative(cleared) == 0);
  }
  SECTION("unknown faces are rejected") {
    CHECK_THROWS_AS(switch_signs(G, {Face{9}}), std::invalid_argument);
  }
}

TEST_CASE("reorienting a face is the same as switching it") {
  std::mt19937 rng(20240909);
  for (int t = 0; t < 20; ++t) {
    auto K = fixtures::random_complex(rng);
    if (K.dim() < 1) continue;
    auto o = fixtures::random_orientation(rng, K);
    std::uniform_int_distribution<int> lvl(0, K.dim() - 1);
    const int i = lvl(rng);
    const auto& pool_lo = K.faces_of_dim(i);
    const auto& pool_hi = K.faces_of_dim(i + 1);
    std::uniform_int_distribution<int> side(0, 1);
    Face f;
    if (side(rng) == 0) {
      std::uniform_int_distribution<int> pick(0, static_cast<int>(pool_lo.size()) - 1);
      f = pool_lo[static_cast<std::size_t>(pick(rng))];
    } else {
      std::uniform_int_distribution<int> pick(0, static_cast<int>(pool_hi.size()) - 1);
      f = pool_hi[static_cast<std::size_t>(pick(rng))];
    }
    auto left = incidence_signed_graph(K, i, reorient(o, f));
    auto right = switch_signs(incidence_signed_graph(K, i, o), {f});
    CHECK(left == right);
  }
}

TEST_CASE("potential-based and exhaustive balance checks agree") {
  std::mt19937 rng(20240910);
  int checked = 0;
  for (int t = 0; t < 80; ++t) {
    auto K = fixtures::random_complex(rng, 6, 3);
    auto o = fixtures::random_orientation(rng, K);
    for (int i = 0; i <= K.dim() - 1; ++i) {
      auto G = incidence_signed_graph(K, i, o);
      if (G.edges.size() > 64) continue;
      auto cert = is_balanced(G);
      CHECK(cert.balanced == brute_force_balance(G));
      CHECK(verify_certificate(G, cert));
      ++checked;
    }
  }
  CHECK(checked > 60);
}

TEST_CASE("the exhaustive check refuses oversized graphs") {
  std::vector<Face> edges;
  for (int a = 0; a < 12; ++a)
    for (int b = a + 1; b < 12; ++b) edges.push_back({a, b});
  auto K = SimplicialComplex::from_facets(edges);
  OrientationAssignment o;
  auto G = incidence_signed_graph(K, 0, o);  // 132 incidences
  CHECK_THROWS_AS(brute_force_balance(G), std::invalid_argument);
  CHECK_FALSE(is_balanced(G).balanced);  // the BFS check has no size limit
}

TEST_CASE("level-0 balance is bipartiteness of the underlying graph") {
  std::mt19937 rng(20240911);
  for (int t = 0; t < 40; ++t) {
    auto K = fixtures::random_connected_graph(rng, 2 + t % 7);
    OrientationAssignment o;
    auto G = incidence_signed_graph(K, 0, o);
    CHECK(is_balanced(G).balanced == fixtures::graph_bipartite(K));
  }
}

TEST_CASE("full simplexes are unbalanced two levels below their dimension") {
  OrientationAssignment o;
  for (int k = 2; k <= 6; ++k) {
    auto K = simplex(k);
    auto G = incidence_signed_graph(K, k - 2, o);
    auto cert = is_balanced(G);
    CHECK_FALSE(cert.balanced);
    CHECK(verify_certificate(G, cert));

    auto cycle = fixtures::simplex_negative_cycle(k);
    CHECK(cycle.size() == (k % 2 == 1 ? 2 * static_cast<std::size_t>(k)
                                      : 2 * static_cast<std::size_t>(k) + 2));
    CHECK(cycle_sign(G, cycle) == -1);
  }
}

TEST_CASE("largest eigenvalues of the full simplex split by exactly the parity gap") {
  OrientationAssignment o;
  for (int k = 2; k <= 6; ++k) {
    auto K = simplex(k);
    auto w = unit_weights(K);
    double lam = lambda_max(K, k - 2, w, o, LaplacianKind::up);
    double q = lambda_max(K, k - 2, w, o, LaplacianKind::signless_up);
    CHECK(lam == Catch::Approx(k + 1.0).margin(1e-6));
    CHECK(q == Catch::Approx(2.0 * k).margin(1e-6));
  }
}
