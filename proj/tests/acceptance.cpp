// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 on any failure.
#include "oracles.hpp"
#include "surfalg/enveloping.hpp"
#include "surfalg/nilpotent_group.hpp"
#include "surfalg/sp_rep.hpp"
#include "surfalg/suites.hpp"
#include "surfalg/surface_lie.hpp"
#include "surfalg/torelli_h1.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace surfalg;

namespace {

struct Result {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

int failures = 0;

void criterion(int id, const std::string& title, double budget_s, const std::function<Result()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Result r;
  try {
    r = body();
  } catch (const std::exception& e) {
    r.ok = false;
    r.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs > budget_s) r.require(false, "over time budget");
  if (!r.ok) ++failures;
  std::printf("%s  [%2d] %s  (%.2fs of %.0fs)%s%s\n", r.ok ? "PASS" : "FAIL", id, title.c_str(), secs, budget_s,
              r.detail.empty() ? "" : "  ", r.detail.c_str());
  std::fflush(stdout);
}

std::string str(const Int& x) { return x.get_str(); }

nlohmann::json strip(nlohmann::json j) {
  for (auto& c : j["checks"]) c.erase("runtime_ms");
  j.erase("version");
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string golden_dir = argc > 1 ? argv[1] : SURFALG_GOLDEN_DIR;

  criterion(1, "surface Lie algebra ranks", 60, [] {
    Result r;
    const auto g2 = SurfaceAlgebra::build(2, 5);
    const auto expected = oracle::peel_off(oracle::hilbert_series(2, 5), 5);
    for (std::size_t d = 1; d <= 5; ++d)
      r.require(Int(static_cast<unsigned long>(g2.rank(d))) == expected[d - 1],
                "g=2 d=" + std::to_string(d) + " rank " + std::to_string(g2.rank(d)) + " vs " + str(expected[d - 1]));
    const auto g3 = SurfaceAlgebra::build(3, 3);
    const std::vector<std::size_t> known{6, 14, 64};
    for (std::size_t d = 1; d <= 3; ++d)
      r.require(g3.rank(d) == known[d - 1], "g=3 d=" + std::to_string(d) + " rank " + std::to_string(g3.rank(d)));
    return r;
  });

  criterion(2, "center certification by Lie and group routes", 600, [] {
    Result r;
    for (auto [g, k] : {std::pair{2, std::size_t{5}}, std::pair{3, std::size_t{4}}}) {
      const auto alg = SurfaceAlgebra::build(g, k);
      for (std::size_t d = 1; d + 1 <= k; ++d)
        r.require(center_in_degree(alg, d).rows() == 0,
                  "Lie route g=" + std::to_string(g) + " d=" + std::to_string(d) + " has center");
      for (std::size_t q = 2; q <= k; ++q) {
        const auto rep = center_of_quotient(g, q);
        r.require(rep.pass, "group route g=" + std::to_string(g) + " k=" + std::to_string(q));
        for (const auto& l : rep.layers)
          r.require(l.central == (l.layer == q), "layer " + std::to_string(l.layer) + " of k=" + std::to_string(q));
      }
    }
    return r;
  });

  criterion(3, "enveloping algebra Hilbert function and center", 120, [] {
    Result r;
    for (int g : {1, 2, 3})
      for (std::size_t d = 0; d <= 4; ++d) {
        const Int brute = static_cast<unsigned long>(oracle::brute_reduced_count(g, d));
        r.require(hilbert_dimension(g, d) == brute, "hilbert g=" + std::to_string(g) + " d=" + std::to_string(d));
      }
    const std::vector<Int> known{1, 6, 35, 204};
    for (std::size_t d = 0; d < 4; ++d) r.require(hilbert_dimension(3, d) == known[d], "g=3 d=" + std::to_string(d));
    for (int g : {2, 3})
      for (std::size_t d = 1; d <= 4; ++d)
        r.require(center_in_degree_assoc(g, d).rows() == 0,
                  "center g=" + std::to_string(g) + " d=" + std::to_string(d));
    return r;
  });

  criterion(4, "relator keystone", 60, [] {
    Result r;
    for (int g : {2, 3})
      for (std::size_t k = 1; k <= 5; ++k)
        r.require(expand(g, surface_relator(g), k).is_one(), "g=" + std::to_string(g) + " K=" + std::to_string(k));
    return r;
  });

  criterion(5, "exterior cube decomposition and equivariance", 60, [] {
    Result r;
    std::mt19937_64 rng(2024);
    for (int g : {2, 3}) {
      const SymplecticSpace h(g);
      const std::size_t n = exterior_triples(h.dimension()).size();
      std::size_t subsets = 0;
      oracle::for_each_subset(h.dimension(), 3, [&](const std::vector<std::size_t>&) { ++subsets; });
      r.require(n == subsets, "dimension " + std::to_string(n));
      const IntMatrix c = contraction_matrix(h);
      r.require(n - oracle::rational_rank(c) == n - 2 * g, "kernel dimension");
      r.require(left_kernel(c.transpose()).rows() == n - 2 * g, "kernel lattice rank");
      const auto gens = sp_generators(g);
      std::vector<IntMatrix> actions;
      for (const auto& s : gens) {
        actions.push_back(lambda3_action(s.matrix));
        r.require(c * actions.back() == s.matrix * c, "generator equivariance");
      }
      for (int t = 0; t < 1000; ++t) {
        std::vector<Int> v(n);
        for (auto& x : v) x = static_cast<long>(rng() % 21) - 10;
        const std::size_t i = rng() % gens.size();
        const auto lhs = mul(c, std::span<const Int>(mul(actions[i], std::span<const Int>(v))));
        const auto rhs = mul(gens[i].matrix, std::span<const Int>(mul(c, std::span<const Int>(v))));
        if (lhs != rhs) {
          r.require(false, "random vector equivariance");
          break;
        }
      }
    }
    return r;
  });

  criterion(6, "commutant dimension at genus 3", 300, [] {
    Result r;
    const auto rep = commutant_report(3);
    r.require(rep.certified, "not certified");
    r.require(commutant_dimension(3) == 2, "dimension " + std::to_string(rep.dimension));
    r.require(rep.modular_upper_bound == 2 && rep.explicit_lower_bound == 2, "bounds disagree");
    // Exact rank of the full commutation system over Z.
    const std::size_t n = 20;
    std::vector<std::vector<Int>> rows;
    for (const auto& s : sp_generators(3)) {
      const IntMatrix a = lambda3_action(s.matrix);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
          std::vector<Int> row(n * n);
          for (std::size_t t = 0; t < n; ++t) {
            row[i * n + t] += a(t, k);
            row[t * n + k] -= a(i, t);
          }
          rows.push_back(std::move(row));
        }
    }
    const std::size_t exact = n * n - rank(IntMatrix::from_rows(rows, n * n));
    r.require(exact == 2, "exact kernel dimension " + std::to_string(exact));
    return r;
  });

  criterion(7, "Johnson image is a partial basis", 10, [] {
    Result r;
    for (int g : {2, 3}) {
      const IntMatrix j = johnson_image(g);
      r.require(rank(j) == static_cast<std::size_t>(2 * g), "rank");
      for (const auto& d : snf_invariants(j)) r.require(d == 1, "non-unit invariant factor");
      r.require(oracle::rows_span_summand(j), "maximal minors not coprime");
    }
    return r;
  });

  criterion(8, "invariant summand roundtrip", 60, [] {
    Result r;
    std::mt19937_64 rng(77);
    const IntMatrix j = johnson_image(3);
    r.require(summand_correspondence_roundtrip(j, 3).holds(), "Johnson summand");
    for (int t = 0; t < 100; ++t) {
      const IntMatrix v = random_unimodular(rng, j.rows(), 12) * j;
      if (!summand_correspondence_roundtrip(v, 3).holds()) {
        r.require(false, "random instance " + std::to_string(t));
        break;
      }
    }
    return r;
  });

  criterion(9, "summand transfer property", 60, [] {
    Result r;
    std::mt19937_64 rng(99);
    std::size_t premises = 0, counterexamples = 0, disagreements = 0;
    while (premises < 1000) {
      const std::size_t m = 1 + rng() % 3, n = m + rng() % 3;
      IntMatrix inner(n, m), outer(n, n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < m; ++k) inner(i, k) = static_cast<long>(rng() % 5) - 2;
        for (std::size_t k = 0; k < n; ++k) outer(i, k) = static_cast<long>(rng() % 5) - 2;
      }
      const auto t = verify_summand_transfer(inner, outer);
      const bool premise = oracle::rows_span_summand((outer * inner).transpose());
      disagreements += premise != t.composite_is_full_rank_summand;
      if (!premise) continue;
      ++premises;
      const bool inner_ok = oracle::rows_span_summand(inner.transpose());
      counterexamples += !inner_ok || !t.implication_holds();
    }
    r.require(counterexamples == 0, std::to_string(counterexamples) + " counterexamples");
    r.require(disagreements == 0, std::to_string(disagreements) + " oracle disagreements");
    return r;
  });

  criterion(10, "Torelli abelianization pullbacks", 120, [] {
    Result r;
    for (int g : {2, 3}) {
      const std::size_t t = binomial(2 * g, 3);
      const std::size_t b2 = 1 + 2 * g + binomial(2 * g, 2);
      r.require(pullback_d1(g).invariants == FgAbGroup{t, std::vector<Int>(b2, 2)}, "D1 g=" + std::to_string(g));
      r.require(pullback_d3(g).invariants == FgAbGroup{t, std::vector<Int>(b2 - 1, 2)}, "D3 g=" + std::to_string(g));
      RunConfig c;
      c.genus = g;
      c.max_degree = 2;
      c.trials = 10;
      c.suites = {"torelli-h1"};
      bool caveat = false;
      for (const auto& rec : run(c).checks)
        caveat = caveat || (rec.name == "torelli-h1/q-reconstruction-caveat" && rec.status == Status::Pass &&
                            rec.actual.find("reconstructed") != std::string::npos);
      r.require(caveat, "reconstructed-q caveat missing from report");
    }
    return r;
  });

  criterion(11, "commutator identity on random words", 10, [] {
    Result r;
    std::mt19937_64 rng(11);
    for (int t = 0; t < 1000; ++t) {
      const GroupWord p = random_group_word(rng, 3, 10), gw = random_group_word(rng, 3, 10),
                      n = random_group_word(rng, 3, 10);
      using oracle::cat;
      using oracle::inverse;
      const auto P = p.letters(), G = gw.letters(), N = n.letters();
      const auto conj = cat({P, G, inverse(P)});
      const auto lhs = oracle::free_reduce(cat({P, G, N, inverse(G), inverse(P), inverse(N)}));
      const auto rhs = oracle::free_reduce(
          cat({P, G, N, inverse(P), inverse(N), P, inverse(G), inverse(P), conj, N, inverse(conj), inverse(N)}));
      if (!verify_identity_viii(p, gw, n) || lhs != rhs) {
        r.require(false, "trial " + std::to_string(t));
        break;
      }
    }
    return r;
  });

  criterion(12, "report determinism and golden files", 600, [&] {
    Result r;
    for (auto [g, k] : {std::pair{2, std::size_t{5}}, std::pair{3, std::size_t{4}}}) {
      RunConfig c;
      c.genus = g;
      c.max_degree = k;
      c.suites = known_suites();
      const std::string tag = "g" + std::to_string(g) + "_k" + std::to_string(k);
      const auto first = run(c).to_json(), second = run(c).to_json();
      r.require(strip(first).dump() == strip(second).dump(), tag + " not deterministic");
      std::ifstream f(golden_dir + "/report_" + tag + ".json");
      if (!f) {
        r.require(false, "missing golden " + tag);
        continue;
      }
      const auto golden = nlohmann::json::parse(f);
      const auto diffs = golden_diff(golden, first);
      for (const auto& d : diffs) r.require(false, tag + ": " + d);
    }
    return r;
  });

  std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
