#include "oracles.hpp"
#include "surfalg/sp_rep.hpp"
#include "surfalg/torelli_h1.hpp"

#include <doctest.h>

#include <random>

using namespace surfalg;

TEST_CASE("boolean polynomial algebra") {
  CHECK(bool_dimension(3, 2) == 22);
  CHECK(bool_dimension(3, 2, false) == 21);
  CHECK(bool_dimension(2, 3) == 15);
  CHECK(bool_basis(2, 1) == std::vector<Monomial>{0, 1, 2, 4, 8});
  const BoolPoly x = BoolPoly::monomial(2, 1, 1), y = BoolPoly::monomial(2, 1, 4);
  CHECK((x * x) == BoolPoly::monomial(2, 2, 1));  // idempotent
  CHECK((x * y).to_string() == "a1b1");
  CHECK((x + x).is_zero());
  CHECK(monomial_name(2, 0) == "1");
  CHECK_THROWS_AS(BoolPoly::monomial(2, 1, 3), std::invalid_argument);
  CHECK_THROWS_AS(BoolPoly::monomial(2, 3, 16), std::invalid_argument);
}

TEST_CASE("element a") {
  const BoolPoly a = element_a(3);
  CHECK(a.to_string() == "a1b1 + a2b2 + a3b3");
  CHECK(a.degree() == 2);
  for (int x : q_map(a)) CHECK(x == 0);
}

TEST_CASE("q is a surjection killing degree two") {
  for (int g : {2, 3, 4}) {
    const IntMatrix q = q_matrix(g);
    CHECK(q.rows() == binomial(2 * g, 3));
    CHECK(q.cols() == bool_dimension(g, 3));
    CHECK(q_is_surjective(g));
    CHECK(oracle::rank_mod(q, 2) == q.rows());
    for (Monomial m : bool_basis(g, 2)) {
      const auto v = q_map(BoolPoly::monomial(g, 3, m));
      for (int x : v) CHECK(x == 0);
    }
  }
  BoolPoly quartic(2, 4);
  quartic.toggle(15);
  CHECK_THROWS_AS(q_map(quartic), std::invalid_argument);
}

TEST_CASE("pullback invariants against the split exact sequence") {
  // 0 -> ker q -> D -> Lambda^3 H -> 0 splits, so D = Z^T + (Z/2)^{dim ker q}.
  for (int g : {2, 3}) {
    const IntMatrix q = q_matrix(g);
    const std::size_t kernel = q.cols() - oracle::rank_mod(q, 2);
    CHECK(kernel == bool_dimension(g, 2));
    const PullbackGroup d1 = pullback_d1(g), d3 = pullback_d3(g);
    CHECK(d1.invariants == FgAbGroup{q.rows(), std::vector<Int>(kernel, 2)});
    CHECK(d3.invariants == FgAbGroup{q.rows(), std::vector<Int>(kernel - 1, 2)});
    CHECK(d1.reconstructed_q);
  }
  CHECK(pullback_d1(2).invariants.to_string() == "Z^4 + (Z/2)^11");
  CHECK(pullback_d1(3).invariants.to_string() == "Z^20 + (Z/2)^22");
  CHECK(pullback_d3(3).invariants.to_string() == "Z^20 + (Z/2)^21");
  CHECK_THROWS_AS(pullback_d1(1), std::invalid_argument);
  CHECK_THROWS_AS(pullback_d1(6), ResourceBound);
}

TEST_CASE("pullback elements and projections") {
  std::mt19937_64 rng(12);
  const int g = 2;
  const auto basis = bool_basis(g, 3);
  for (int t = 0; t < 50; ++t) {
    BoolPoly p(g, 3);
    for (Monomial m : basis)
      if (rng() % 2) p.toggle(m);
    const auto qp = q_map(p);
    std::vector<Int> v(qp.size());
    for (std::size_t s = 0; s < v.size(); ++s) v[s] = qp[s] + 2 * (static_cast<long>(rng() % 9) - 4);
    const auto coords = pullback_element(g, p, v);
    const auto [p2, v2] = pullback_projections(g, coords);
    CHECK(p2 == p);
    CHECK(v2 == v);
    if (!qp.empty() && qp[0] == 0) {
      v[0] += 1;
      CHECK_THROWS_AS(pullback_element(g, p, v), std::invalid_argument);
    }
  }
  CHECK(pullback_projection_surjective(2));
  CHECK(pullback_projection_surjective(3));
}
