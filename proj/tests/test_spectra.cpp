#include <catch2/catch_amalgamated.hpp>

#include <Eigen/Dense>
#include <random>

#include "helpers.hpp"
#include "simplap/homology.hpp"

using namespace simplap;
using fixtures::close_multiset;
using fixtures::spectrum_of;

namespace {

Eigen::MatrixXd random_symmetric(std::mt19937& rng, int n) {
  std::normal_distribution<double> g(0.0, 1.0);
  Eigen::MatrixXd A(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) A(r, c) = g(rng);
  return 0.5 * (A + A.transpose());
}

}  // namespace

TEST_CASE("jacobi eigensolver") {
  std::mt19937 rng(20240904);

  SECTION("reconstructs random symmetric matrices") {
    for (int n = 1; n <= 12; ++n) {
      Eigen::MatrixXd A = random_symmetric(rng, n);
      auto R = jacobi_eigensymm(A);
      REQUIRE(R.eigenvalues.size() == n);
      Eigen::MatrixXd recon = R.eigenvectors *
                              R.eigenvalues.asDiagonal() *
                              R.eigenvectors.transpose();
      CHECK((recon - A).norm() < 1e-9);
      CHECK((R.eigenvectors.transpose() * R.eigenvectors -
             Eigen::MatrixXd::Identity(n, n))
                .norm() < 1e-9);
      for (int k = 1; k < n; ++k)
        CHECK(R.eigenvalues[k - 1] <= R.eigenvalues[k]);
    }
  }
  SECTION("agrees with Eigen's solver") {
    for (int t = 0; t < 20; ++t) {
      Eigen::MatrixXd A = random_symmetric(rng, 2 + t % 9);
      auto R = jacobi_eigensymm(A);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ref(A);
      CHECK((R.eigenvalues - ref.eigenvalues()).cwiseAbs().maxCoeff() < 1e-9);
    }
  }
  SECTION("degenerate shapes") {
    CHECK(jacobi_eigensymm(Eigen::MatrixXd::Zero(3, 3)).eigenvalues ==
          Eigen::VectorXd::Zero(3));
    CHECK(jacobi_eigensymm(Eigen::MatrixXd(0, 0)).eigenvalues.size() == 0);
    Eigen::MatrixXd one(1, 1);
    one << -5.0;
    CHECK(jacobi_eigensymm(one).eigenvalues[0] == -5.0);
  }
  SECTION("input validation") {
    CHECK_THROWS_AS(jacobi_eigensymm(Eigen::MatrixXd::Zero(2, 3)),
                    std::invalid_argument);
    Eigen::MatrixXd bad = Eigen::MatrixXd::Zero(2, 2);
    bad(0, 1) = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(jacobi_eigensymm(bad), std::invalid_argument);
  }
  SECTION("non-symmetric input is symmetrized") {
    Eigen::MatrixXd A(2, 2);
    A << 1, 3, 1, 1;
    Eigen::MatrixXd S = 0.5 * (A + A.transpose());
    CHECK(jacobi_eigensymm(A).eigenvalues == jacobi_eigensymm(S).eigenvalues);
  }
}

TEST_CASE("level-0 spectra of small graphs") {
  OrientationAssignment o;
  auto spec = [&](const SimplicialComplex& K, LaplacianKind kind) {
    return spectrum_of(K, 0, unit_weights(K), o, kind);
  };
  CHECK(close_multiset(spec(SimplicialComplex::from_facets({{0, 1}}),
                            LaplacianKind::up),
                       {0, 2}, 1e-9));
  CHECK(close_multiset(spec(fixtures::hollow_triangle(), LaplacianKind::up),
                       {0, 3, 3}, 1e-9));
  CHECK(close_multiset(
      spec(fixtures::hollow_triangle(), LaplacianKind::signless_up),
      {1, 1, 4}, 1e-9));
  CHECK(close_multiset(spec(fixtures::p3(), LaplacianKind::up), {0, 1, 3}, 1e-9));
  CHECK(close_multiset(spec(fixtures::p3(), LaplacianKind::signless_up),
                       {0, 1, 3}, 1e-9));
  CHECK(close_multiset(spec(fixtures::c4(), LaplacianKind::up), {0, 2, 2, 4},
                       1e-9));
  CHECK(close_multiset(spec(fixtures::c4(), LaplacianKind::signless_up),
                       {0, 2, 2, 4}, 1e-9));
}

TEST_CASE("higher-level spectra") {
  OrientationAssignment o;
  auto T = fixtures::tetrahedron();
  CHECK(lambda_max(T, 1, unit_weights(T), o, LaplacianKind::up) ==
        Catch::Approx(4.0).margin(1e-9));
  auto P = fixtures::p3();
  CHECK(close_multiset(spectrum_of(P, 1, unit_weights(P), o, LaplacianKind::down),
                       {1, 3}, 1e-9));
}

TEST_CASE("level validation flows through to spectra") {
  auto P = fixtures::p3();
  auto w = unit_weights(P);
  OrientationAssignment o;
  CHECK_THROWS_AS(lambda_max(P, 1, w, o, LaplacianKind::up),
                  std::invalid_argument);
  CHECK_THROWS_AS(degree_sum_bound(P, 1, w), std::invalid_argument);
  CHECK_THROWS_AS(hj_bound(P, 2, w), std::invalid_argument);
}

TEST_CASE("upper bounds on the largest up eigenvalue") {
  auto unit = [](const SimplicialComplex& K) { return unit_weights(K); };
  auto P = fixtures::p3();
  CHECK(degree_sum_bound(P, 0, unit(P)) == Catch::Approx(3.0));
  CHECK(hj_bound(P, 0, unit(P)) == Catch::Approx(4.0));
  auto H = fixtures::hollow_triangle();
  CHECK(degree_sum_bound(H, 0, unit(H)) == Catch::Approx(4.0));
  CHECK(hj_bound(H, 0, unit(H)) == Catch::Approx(4.0));
  auto F = fixtures::full_triangle();
  CHECK(degree_sum_bound(F, 1, unit(F)) == Catch::Approx(3.0));
  CHECK(hj_bound(F, 1, unit(F)) == Catch::Approx(3.0));
  CHECK(dr_bound(fixtures::tetrahedron()) == 4.0);
  CHECK(dr_bound(SimplicialComplex{}) == 0.0);
}

TEST_CASE("bound chain on random weighted complexes") {
  std::mt19937 rng(20240905);
  for (int t = 0; t < 40; ++t) {
    auto K = fixtures::random_complex(rng);
    auto w = (t % 2 == 0) ? unit_weights(K) : fixtures::random_weights(rng, K);
    auto o = fixtures::random_orientation(rng, K);
    for (int i = 0; i <= K.dim() - 1; ++i) {
      INFO("level " << i);
      double lam = lambda_max(K, i, w, o, LaplacianKind::up);
      double q = lambda_max(K, i, w, o, LaplacianKind::signless_up);
      double ds = degree_sum_bound(K, i, w);
      double hj = hj_bound(K, i, w);
      CHECK(lam <= q + 1e-9);
      CHECK(q <= ds + 1e-9);
      CHECK(ds <= hj + 1e-9);
    }
  }
}

TEST_CASE("all Laplacian spectra are nonnegative") {
  std::mt19937 rng(20240906);
  for (int t = 0; t < 25; ++t) {
    auto K = fixtures::random_complex(rng, 7, 3);
    auto w = fixtures::random_weights(rng, K);
    auto o = fixtures::random_orientation(rng, K);
    for (int i = 0; i <= K.dim(); ++i) {
      if (i <= K.dim() - 1) {
        CHECK(spectrum_of(K, i, w, o, LaplacianKind::up).front() >= -1e-9);
        CHECK(spectrum_of(K, i, w, o, LaplacianKind::full).front() >= -1e-9);
        CHECK(spectrum_of(K, i, w, o, LaplacianKind::signless_up).front() >=
              -1e-9);
      }
      CHECK(spectrum_of(K, i, w, o, LaplacianKind::down).front() >= -1e-9);
    }
  }
}

TEST_CASE("spectra do not depend on the orientation") {
  std::mt19937 rng(20240907);
  for (int t = 0; t < 10; ++t) {
    auto K = fixtures::random_complex(rng);
    auto w = fixtures::random_weights(rng, K);
    OrientationAssignment base;
    auto other = fixtures::random_orientation(rng, K);
    for (int i = 0; i <= K.dim() - 1; ++i) {
      for (auto kind : {LaplacianKind::up, LaplacianKind::full}) {
        CHECK(close_multiset(spectrum_of(K, i, w, base, kind),
                             spectrum_of(K, i, w, other, kind), 1e-8));
      }
    }
    for (int i = 0; i <= K.dim(); ++i)
      CHECK(close_multiset(spectrum_of(K, i, w, base, LaplacianKind::down),
                           spectrum_of(K, i, w, other, LaplacianKind::down),
                           1e-8));
  }
}

TEST_CASE("up spectrum at level i matches down spectrum at level i+1 away from zero") {
  std::mt19937 rng(20240908);
  std::vector<SimplicialComplex> pool = {fixtures::tetrahedron(),
                                         fixtures::two_triangles()};
  for (int t = 0; t < 15; ++t) pool.push_back(fixtures::random_complex(rng, 7, 3));
  for (const auto& K : pool) {
    auto w = fixtures::random_weights(rng, K);
    auto o = fixtures::random_orientation(rng, K);
    for (int i = 0; i <= K.dim() - 1; ++i) {
      auto up = spectrum_of(K, i, w, o, LaplacianKind::up);
      auto down = spectrum_of(K, i + 1, w, o, LaplacianKind::down);
      const int rank = bareiss_rank(coboundary_matrix(K, i, o).mat);
      // Both lists are ascending; the last `rank` entries are the shared
      // nonzero eigenvalues of D^T W D and D W D^T respectively.
      REQUIRE(static_cast<int>(up.size()) >= rank);
      REQUIRE(static_cast<int>(down.size()) >= rank);
      for (int k = 0; k < rank; ++k) {
        double a = up[up.size() - 1 - static_cast<std::size_t>(k)];
        double b = down[down.size() - 1 - static_cast<std::size_t>(k)];
        CHECK(a == Catch::Approx(b).margin(1e-7));
      }
    }
  }
}

TEST_CASE("equality reports") {
  OrientationAssignment o;
  SECTION("a path attains the degree-sum bound with equality") {
    auto P = fixtures::p3();
    auto r = equality_report(P, 0, unit_weights(P), o);
    CHECK(r.lambda_max_up == Catch::Approx(3.0).margin(1e-9));
    CHECK(r.lambda_max_signless == Catch::Approx(3.0).margin(1e-9));
    CHECK(r.degree_sum_bound == Catch::Approx(3.0));
    CHECK(r.hj_bound == Catch::Approx(4.0));
    CHECK(r.dr_bound == 3.0);
    CHECK(r.balanced);
    CHECK(r.equality_holds);
    CHECK(r.degree_bound_attained);
    CHECK(r.row_sums_constant);
  }
  SECTION("an even cycle") {
    auto C = fixtures::c4();
    auto r = equality_report(C, 0, unit_weights(C), o);
    CHECK(r.lambda_max_up == Catch::Approx(4.0).margin(1e-9));
    CHECK(r.balanced);
    CHECK(r.equality_holds);
    CHECK(r.degree_bound_attained);
  }
  SECTION("an odd cycle separates the two largest eigenvalues") {
    auto H = fixtures::hollow_triangle();
    auto r = equality_report(H, 0, unit_weights(H), o);
    CHECK(r.lambda_max_up == Catch::Approx(3.0).margin(1e-9));
    CHECK(r.lambda_max_signless == Catch::Approx(4.0).margin(1e-9));
    CHECK_FALSE(r.balanced);
    CHECK_FALSE(r.equality_holds);
    CHECK_FALSE(r.degree_bound_attained);
    CHECK(r.row_sums_constant);  // constant row sums alone do not suffice
  }
  SECTION("disconnected levels are rejected") {
    auto K = fixtures::two_disjoint_edges();
    CHECK_THROWS_WITH(equality_report(K, 0, unit_weights(K), o),
                      Catch::Matchers::ContainsSubstring("components"));
  }
}
