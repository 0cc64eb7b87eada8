#include "oracles.hpp"
#include "surfalg/free_lie.hpp"
#include "surfalg/nilpotent_group.hpp"

#include <doctest.h>

#include <random>

using namespace surfalg;

TEST_CASE("group words reduce freely") {
  const GroupWord a = GroupWord::generator(letter_a(1)), b = GroupWord::generator(letter_b(1));
  CHECK((a * a.inverse()).is_identity());
  CHECK(group_commutator(a, b).size() == 4);
  CHECK(surface_relator(2).size() == 8);
  CHECK(GroupWord({1, 2, -2, -1, 3}) == GroupWord({3}));
  CHECK_THROWS_AS(GroupWord({0}), std::invalid_argument);
  std::mt19937_64 rng(1);
  for (int t = 0; t < 50; ++t) {
    const GroupWord w = random_group_word(rng, 3, 10);
    CHECK(w.letters() == oracle::free_reduce(w.letters()));
  }
}

TEST_CASE("relator expands to one") {
  for (int g : {2, 3})
    for (std::size_t k = 1; k <= 5; ++k) {
      CAPTURE(g);
      CAPTURE(k);
      CHECK(expand(g, surface_relator(g), k).is_one());
    }
}

TEST_CASE("free expansion of the relator starts with omega") {
  const auto ctx = MagnusContext::get(2, 3);
  const FreePoly e = ctx->expand_free(surface_relator(2));
  FreePoly omega;
  for (int i = 1; i <= 2; ++i) {
    omega.add_term(Word({letter_a(i), letter_b(i)}), 1);
    omega.add_term(Word({letter_b(i), letter_a(i)}), -1);
  }
  CHECK(e.component(0) == FreePoly::one());
  CHECK(e.component(1).is_zero());
  CHECK(e.component(2) == omega);
}

TEST_CASE("expansion is multiplicative") {
  std::mt19937_64 rng(41);
  for (int g : {2, 3}) {
    const auto ctx = MagnusContext::get(g, 4);
    for (int t = 0; t < 30; ++t) {
      const GroupWord u = random_group_word(rng, g, 6), v = random_group_word(rng, g, 6);
      CHECK(ctx->expand(u * v) == ctx->multiply(ctx->expand(u), ctx->expand(v)));
      CHECK(ctx->expand(u * u.inverse()).is_one());
      CHECK(ctx->multiply(ctx->expand(u), ctx->expand(u.inverse())).is_one());
    }
  }
}

TEST_CASE("commutators of weight j lie in gamma_j") {
  for (std::size_t j = 1; j <= 4; ++j)
    for (const auto& h : hall_basis(4, j)) {
      const auto s = expand(2, commutator_word(h.word), 4);
      for (std::size_t d = 1; d < j; ++d) CHECK(s.terms.component(d).is_zero());
    }
}

TEST_CASE("quotients by the lower central series") {
  const GroupWord a = GroupWord::generator(letter_a(1)), b = GroupWord::generator(letter_b(1));
  CHECK(equal_in_quotient(2, a * b, b * a, 1));
  CHECK_FALSE(equal_in_quotient(2, a * b, b * a, 2));
  // [a1,b1][a2,b2] = 1, so [a1,b1] = [b2,a2].
  const GroupWord a2 = GroupWord::generator(letter_a(2)), b2 = GroupWord::generator(letter_b(2));
  CHECK(equal_in_quotient(2, group_commutator(a, b), group_commutator(b2, a2), 4));
  CHECK_FALSE(equal_in_quotient(2, group_commutator(a, b), group_commutator(a2, b2), 2));
  CHECK_THROWS_AS(equal_in_quotient(2, a, b, 0), std::invalid_argument);
}

TEST_CASE("layer ranks match the surface Lie algebra") {
  const std::vector<std::size_t> g2{4, 5, 16, 45};
  for (std::size_t j = 1; j <= 4; ++j) CHECK(layer_leading_rank(2, j) == g2[j - 1]);
  CHECK(layer_leading_rank(3, 3) == 64);
}

TEST_CASE("center of the nilpotent quotient is the top layer") {
  for (std::size_t k = 2; k <= 5; ++k) {
    CAPTURE(k);
    const auto r = center_of_quotient(2, k);
    CHECK(r.pass);
    CHECK(r.layers.size() == k);
    CHECK(r.layers.back().central);
  }
  for (std::size_t k = 2; k <= 4; ++k) CHECK(center_of_quotient(3, k).pass);
  CHECK_THROWS_AS(center_of_quotient(2, 1), std::invalid_argument);
}

TEST_CASE("identity for [PG, N] against a stack reduction oracle") {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 200; ++t) {
    const GroupWord p = random_group_word(rng, 2, 6), gw = random_group_word(rng, 2, 6),
                    n = random_group_word(rng, 2, 6);
    CHECK(verify_identity_viii(p, gw, n));
    using oracle::cat;
    using oracle::inverse;
    const auto P = p.letters(), G = gw.letters(), N = n.letters();
    const auto pg = cat({P, G});
    const auto lhs = oracle::free_reduce(cat({pg, N, inverse(pg), inverse(N)}));
    const auto conj = cat({P, G, inverse(P)});
    const auto rhs = oracle::free_reduce(cat({P, G, N, inverse(P), inverse(N), P, inverse(G), inverse(P), conj, N,
                                              inverse(conj), inverse(N)}));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("expansion argument errors") {
  CHECK_THROWS_AS(MagnusContext::get(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(MagnusContext::get(2, 9), ResourceBound);
  CHECK_THROWS_AS(expand(2, GroupWord::generator(letter_a(3)), 2), std::invalid_argument);
}
