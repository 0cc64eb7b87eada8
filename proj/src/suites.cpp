#include "surfalg/suites.hpp"

#include "surfalg/enveloping.hpp"
#include "surfalg/free_lie.hpp"
#include "surfalg/int_linalg.hpp"
#include "surfalg/nilpotent_group.hpp"
#include "surfalg/sp_rep.hpp"
#include "surfalg/surface_lie.hpp"
#include "surfalg/torelli_h1.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <future>
#include <map>
#include <optional>
#include <random>
#include <sstream>

namespace surfalg {

std::string status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
  }
  return "?";
}

const std::vector<std::string>& known_suites() {
  static const std::vector<std::string> names{
      "lie-center",   "enveloping",    "nilpotent",      "sp-decomposition", "johnson-image",
      "torelli-h1",   "lemma-summand", "identity-viii",  "index-formula"};
  return names;
}

void validate(const RunConfig& c) {
  if (c.suites.empty()) throw ConfigError("no suites selected");
  for (const auto& s : c.suites)
    if (std::find(known_suites().begin(), known_suites().end(), s) == known_suites().end())
      throw ConfigError("unknown suite: " + s);
  if (c.genus < 2) throw ConfigError("genus must be >= 2");
  if (c.genus > 8) throw ConfigError("genus must be <= 8");
  if (c.max_degree < 2) throw ConfigError("max-degree must be >= 2");
  if (c.report_format != "json" && c.report_format != "text")
    throw ConfigError("report format must be json or text");
}

long euler_index(long chi_sub, long chi_ambient) {
  if (chi_sub == 0) throw std::domain_error("euler_index: subgroup characteristic is zero");
  if (chi_sub > 0) throw std::domain_error("euler_index: subgroup characteristic must be negative");
  if (chi_ambient % chi_sub != 0)
    throw std::domain_error("euler_index: " + std::to_string(chi_ambient) + " is not divisible by " +
                            std::to_string(chi_sub));
  const long index = chi_ambient / chi_sub;
  if (index < 1) throw std::domain_error("euler_index: non-positive index");
  return index;
}

namespace {

struct Outcome {
  Status status;
  std::string expected;
  std::string actual;
};

Outcome verdict(bool ok, std::string expected, std::string actual) {
  return {ok ? Status::Pass : Status::Fail, std::move(expected), std::move(actual)};
}

template <class T>
Outcome equal(const T& expected, const T& actual) {
  std::ostringstream e, a;
  e << std::boolalpha << expected;
  a << std::boolalpha << actual;
  return verdict(expected == actual, e.str(), a.str());
}

class Recorder {
 public:
  void check(std::string name, std::string anchor, const std::function<Outcome()>& body) {
    CheckRecord r;
    r.name = std::move(name);
    r.paper_anchor = std::move(anchor);
    const auto start = std::chrono::steady_clock::now();
    try {
      Outcome o = body();
      r.status = o.status;
      r.expected = std::move(o.expected);
      r.actual = std::move(o.actual);
    } catch (const ResourceBound& e) {
      r.status = Status::Skipped;
      r.actual = std::string("resource bound: ") + e.what();
    } catch (const std::exception& e) {
      r.status = Status::Fail;
      r.actual = std::string("error: ") + e.what();
    }
    r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    records.push_back(std::move(r));
  }
  void skip(std::string name, std::string anchor, std::string reason) {
    CheckRecord r;
    r.name = std::move(name);
    r.paper_anchor = std::move(anchor);
    r.status = Status::Skipped;
    r.actual = std::move(reason);
    records.push_back(std::move(r));
  }
  std::vector<CheckRecord> records;
};

std::uint64_t suite_seed(std::uint64_t seed, const std::string& suite) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : suite) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return seed ^ h;
}

template <class V>
std::string join(const V& v) {
  std::ostringstream os;
  os << '[';
  bool first = true;
  for (const auto& x : v) {
    os << (first ? "" : ",") << x;
    first = false;
  }
  os << ']';
  return os.str();
}

// Coefficients of 1 / (1 - 2g t + t^2).
std::vector<Int> hilbert_recurrence(int genus, std::size_t max_degree) {
  std::vector<Int> c{1};
  if (max_degree >= 1) c.push_back(2 * genus);
  while (c.size() <= max_degree) c.push_back(2 * genus * c[c.size() - 1] - c[c.size() - 2]);
  return c;
}

// Ranks r_k with prod (1 - t^k)^{-r_k} = sum c_d t^d, peeled degree by degree.
std::vector<std::size_t> peel_ranks(const std::vector<Int>& c, std::size_t max_degree) {
  std::vector<std::size_t> ranks;
  for (std::size_t k = 1; k <= max_degree; ++k) {
    const auto partial = pbw_series(ranks, k);
    const Int r = c[k] - partial[k];
    ranks.push_back(r.get_ui());
  }
  return ranks;
}

constexpr const char* kCenterAnchor = "Z(gamma_1/gamma_{k+1}) = gamma_k/gamma_{k+1}";
constexpr const char* kLabuteAnchor = "gr(pi_1) = free Lie algebra on 2g generators / (sum [a_i,b_i])";
constexpr const char* kEnvelopingAnchor = "U(Lambda) = A_2g / (sum a_i b_i - b_i a_i); HH^0 = Z";

std::vector<CheckRecord> lie_center(const RunConfig& c) {
  Recorder rec;
  const int g = c.genus;
  const std::size_t k = c.max_degree;
  const std::size_t n = 2 * static_cast<std::size_t>(g);
  rec.check("lie-center/free-lie-dimensions", kLabuteAnchor, [&] {
    std::vector<std::size_t> witt, hall;
    for (std::size_t d = 1; d <= k; ++d) {
      witt.push_back(witt_dimension(n, d));
      hall.push_back(hall_basis(n, d).size());
    }
    return equal(join(witt), join(hall));
  });

  std::optional<SurfaceAlgebra> alg;
  rec.check("lie-center/build", kLabuteAnchor, [&] {
    alg = SurfaceAlgebra::build(g, k);
    return verdict(true, "built", "built to degree " + std::to_string(k));
  });
  if (!alg) return rec.records;

  const auto expected = peel_ranks(hilbert_recurrence(g, k), k);
  for (std::size_t d = 1; d <= k; ++d)
    rec.check("lie-center/rank-d" + std::to_string(d), kLabuteAnchor,
              [&] { return equal(expected[d - 1], alg->rank(d)); });
  rec.check("lie-center/ideal-saturated", kLabuteAnchor, [&] {
    std::vector<std::string> status;
    bool ok = true;
    for (std::size_t d = 1; d <= k; ++d) {
      ok = ok && alg->degree(d).quotient_is_free;
      status.push_back(alg->degree(d).quotient_is_free ? "free" : "torsion");
    }
    return verdict(ok, "all free", join(status));
  });
  for (std::size_t d = 1; d + 1 <= k; ++d)
    rec.check("lie-center/center-d" + std::to_string(d), kCenterAnchor,
              [&] { return equal<std::size_t>(0, center_in_degree(*alg, d).rows()); });
  rec.check("lie-center/center-theorem", kCenterAnchor, [&] {
    const auto r = verify_center_theorem(*alg);
    return verdict(r.pass, "pass for 1 <= d <= " + std::to_string(k - 1), r.pass ? "pass" : "fail");
  });
  return rec.records;
}

std::vector<CheckRecord> enveloping_suite(const RunConfig& c) {
  Recorder rec;
  const int g = c.genus;
  const std::size_t k = c.max_degree;
  const std::size_t top = std::max<std::size_t>(k, 4);
  const auto rec_dims = hilbert_recurrence(g, top);
  rec.check("enveloping/no-self-overlap", kEnvelopingAnchor, [&] {
    const auto rule = RelationRule::homogeneous(g);
    return verdict(!rule->leading_word_self_overlaps(), "leading word " + rule->leading_word().to_string() + " has no self-overlap",
                   rule->leading_word_self_overlaps() ? "overlap" : "leading word " + rule->leading_word().to_string() + " has no self-overlap");
  });
  rec.check("enveloping/normal-form-golden", kEnvelopingAnchor, [&] {
    const Word lead({letter_b(g), letter_a(g)});
    FreePoly expected = FreePoly::word(Word({letter_a(g), letter_b(g)}));
    for (int i = 1; i < g; ++i) {
      expected.add_term(Word({letter_a(i), letter_b(i)}), 1);
      expected.add_term(Word({letter_b(i), letter_a(i)}), -1);
    }
    return equal(expected.to_string(), reduce(g, FreePoly::word(lead)).to_string());
  });
  for (std::size_t d = 0; d <= top; ++d)
    rec.check("enveloping/hilbert-d" + std::to_string(d), kEnvelopingAnchor, [&] {
      const Int words = static_cast<unsigned long>(reduced_words(g, d).size());
      const Int dim = hilbert_dimension(g, d);
      return verdict(words == rec_dims[d] && dim == rec_dims[d], rec_dims[d].get_str(),
                     dim.get_str() + " (enumerated " + words.get_str() + ")");
    });
  const std::size_t assoc_top = std::min<std::size_t>(k, 4);
  for (std::size_t d = 1; d <= assoc_top; ++d)
    rec.check("enveloping/center-assoc-d" + std::to_string(d), kEnvelopingAnchor,
              [&] { return equal<std::size_t>(0, center_in_degree_assoc(g, d).rows()); });
  rec.check("enveloping/pbw-consistency", "U preserves cokernels: PBW series of Lambda = Hilbert series of A_2g/(omega)", [&] {
    const auto alg = SurfaceAlgebra::build(g, k);
    const auto r = pbw_consistency(alg, k);
    return verdict(r.pass, join(r.series_side), join(r.product_side));
  });
  return rec.records;
}

std::vector<CheckRecord> nilpotent_suite(const RunConfig& c) {
  Recorder rec;
  const int g = c.genus;
  const std::size_t k = c.max_degree;
  const GroupWord relator = surface_relator(g);
  for (std::size_t t = 1; t <= k; ++t)
    rec.check("nilpotent/relator-keystone-K" + std::to_string(t), "prod_i [a_i,b_i] = 1 in pi_1", [&] {
      const auto s = expand(g, relator, t);
      return equal(std::string("1"), s.terms.to_string());
    });
  rec.check("nilpotent/relator-rotations-and-conjugates", "prod_i [a_i,b_i] = 1 in pi_1", [&] {
    std::mt19937_64 rng(suite_seed(c.seed, "nilpotent/conjugates"));
    std::size_t checked = 0, ok = 0;
    const auto& letters = relator.letters();
    for (std::size_t r = 0; r < letters.size(); ++r) {
      std::vector<int> rotated(letters.begin() + r, letters.end());
      rotated.insert(rotated.end(), letters.begin(), letters.begin() + r);
      ++checked;
      ok += expand(g, GroupWord(rotated), k).is_one();
    }
    ++checked;
    ok += expand(g, relator.inverse(), k).is_one();
    const std::size_t conj = std::min<std::size_t>(c.trials, 50);
    for (std::size_t i = 0; i < conj; ++i) {
      const GroupWord w = random_group_word(rng, g, 6);
      ++checked;
      ok += expand(g, w * relator * w.inverse(), k).is_one();
    }
    return equal(std::to_string(checked) + " of " + std::to_string(checked),
                 std::to_string(ok) + " of " + std::to_string(checked));
  });
  rec.check("nilpotent/abelianization", "xyx^-1y^-1 in gamma_{k+1}", [&] {
    const GroupWord ab = GroupWord::generator(letter_a(1)) * GroupWord::generator(letter_b(1));
    const GroupWord ba = GroupWord::generator(letter_b(1)) * GroupWord::generator(letter_a(1));
    const bool k1 = equal_in_quotient(g, ab, ba, 1);
    const bool k2 = equal_in_quotient(g, ab, ba, 2);
    return equal(std::string("k=1: equal, k=2: distinct"),
                 std::string(k1 ? "k=1: equal" : "k=1: distinct") + (k2 ? ", k=2: equal" : ", k=2: distinct"));
  });

  std::optional<SurfaceAlgebra> alg;
  try {
    alg = SurfaceAlgebra::build(g, k);
  } catch (const ResourceBound&) {
  }
  for (std::size_t j = 1; j <= k; ++j)
    rec.check("nilpotent/layer-rank-j" + std::to_string(j), kLabuteAnchor, [&] {
      if (!alg) throw ResourceBound("surface algebra unavailable");
      return equal(alg->rank(j), layer_leading_rank(g, j));
    });
  bool agree = true;
  for (std::size_t q = 2; q <= k; ++q)
    rec.check("nilpotent/center-of-quotient-k" + std::to_string(q), kCenterAnchor, [&] {
      const auto r = center_of_quotient(g, q);
      std::vector<std::size_t> central;
      for (const auto& l : r.layers)
        if (l.central) central.push_back(l.layer);
      agree = agree && r.pass;
      return verdict(r.pass, "central layers " + join(std::vector<std::size_t>{q}), "central layers " + join(central));
    });
  rec.check("nilpotent/agreement-with-lie-center", kCenterAnchor, [&] {
    if (!alg) throw ResourceBound("surface algebra unavailable");
    const bool lie = verify_center_theorem(*alg).pass;
    return verdict(lie && agree, "both routes pass", std::string("lie route ") + (lie ? "pass" : "fail") +
                                                        ", group route " + (agree ? "pass" : "fail"));
  });
  return rec.records;
}

std::vector<CheckRecord> sp_suite(const RunConfig& c) {
  Recorder rec;
  const int g = c.genus;
  const SymplecticSpace h(g);
  const std::size_t dim = binomial(h.dimension(), 3);
  const auto gens = sp_generators(g);
  constexpr const char* kDecomp = "Lambda^3 H_Q = H_Q + Lambda^3 H_Q / H_Q";
  rec.check("sp-decomposition/generators-preserve-form", "Sp(2g,Z) generated by the five elementary families", [&] {
    std::size_t ok = 0;
    for (const auto& s : gens) ok += preserves_form(h, s.matrix);
    return equal(std::to_string(2 * g * g) + " generators", std::to_string(ok) + " generators");
  });
  rec.check("sp-decomposition/lambda3-unimodular", "Sp acts on Lambda^3 H_Z", [&] {
    std::size_t ok = 0;
    for (const auto& s : gens) ok += abs(determinant(lambda3_action(s.matrix))) == 1;
    return equal(gens.size(), ok);
  });
  rec.check("sp-decomposition/lambda3-dimension", kDecomp, [&] { return equal(binomial(2 * g, 3), dim); });
  const IntMatrix contr = contraction_matrix(h);
  rec.check("sp-decomposition/contraction-kernel-dimension", "dim Lambda^3 H_Q / H_Q = binom(2g,3) - 2g", [&] {
    const std::size_t kernel = dim - rank(contr);
    const std::size_t lattice = left_kernel(contr.transpose()).rows();
    return verdict(kernel == dim - h.dimension() && lattice == kernel, std::to_string(dim - h.dimension()),
                   std::to_string(kernel) + " (lattice basis " + std::to_string(lattice) + ")");
  });
  rec.check("sp-decomposition/contraction-equivariance-generators", kDecomp, [&] {
    std::size_t ok = 0;
    for (const auto& s : gens) ok += contr * lambda3_action(s.matrix) == s.matrix * contr;
    return equal(gens.size(), ok);
  });
  rec.check("sp-decomposition/contraction-equivariance-random", kDecomp, [&] {
    std::mt19937_64 rng(suite_seed(c.seed, "sp-decomposition/equivariance"));
    std::vector<IntMatrix> actions;
    for (const auto& s : gens) actions.push_back(lambda3_action(s.matrix));
    std::size_t ok = 0;
    for (std::size_t t = 0; t < c.trials; ++t) {
      std::vector<Int> v(dim);
      for (auto& x : v) x = static_cast<long>(rng() % 11) - 5;
      const std::size_t which = rng() % gens.size();
      const auto lhs = mul(contr, std::span<const Int>(mul(actions[which], std::span<const Int>(v))));
      const auto rhs = mul(gens[which].matrix, std::span<const Int>(mul(contr, std::span<const Int>(v))));
      ok += lhs == rhs;
    }
    return equal(c.trials, ok);
  });
  rec.check("sp-decomposition/direct-sum-over-Q", kDecomp, [&] {
    // image(theta ^ -) and ker(contraction) together span Lambda^3 H_Q.
    const IntMatrix section = theta_wedge_matrix(h).transpose();
    const IntMatrix kernel = left_kernel(contr.transpose());
    return equal(dim, rank(section.stacked(kernel)));
  });
  if (g >= 3) {
    rec.check("sp-decomposition/commutant-dimension", "exactly one Sp(2g,Q)-invariant 2g-dimensional subspace", [&] {
      const auto r = commutant_report(g);
      return verdict(r.certified && r.dimension == 2, "2",
                     std::to_string(r.dimension) + " (mod-p upper bound " + std::to_string(r.modular_upper_bound) +
                         ", explicit lower bound " + std::to_string(r.explicit_lower_bound) + ")");
    });
  } else {
    rec.skip("sp-decomposition/commutant-dimension", "exactly one Sp(2g,Q)-invariant 2g-dimensional subspace",
             "requires genus >= 3");
  }
  return rec.records;
}

std::vector<CheckRecord> johnson_suite(const RunConfig& c) {
  Recorder rec;
  constexpr const char* kTau = "tau(a_i) = theta ^ a_i";
  constexpr const char* kPartial = "image of the standard generators of P is a partial basis";
  std::vector<int> genera{2, 3};
  if (c.genus > 3) genera.push_back(c.genus);
  for (int g : genera) {
    const std::string tag = "johnson-image/g" + std::to_string(g);
    const IntMatrix j = johnson_image(g);
    rec.check(tag + "/rank", kTau, [&] { return equal<std::size_t>(2 * g, rank(j)); });
    rec.check(tag + "/unit-invariant-factors", kPartial, [&] {
      const auto d = snf_invariants(j);
      return equal(join(std::vector<Int>(2 * g, 1)), join(d));
    });
    rec.check(tag + "/theta-wedge-a1-support", kTau, [&] {
      const SymplecticSpace h(g);
      const std::size_t n = h.dimension();
      std::vector<std::string> expected, actual;
      for (int i = 2; i <= g; ++i) {
        std::array<std::size_t, 3> t{h.index_a(1), h.index_a(i), h.index_b(i)};
        std::sort(t.begin(), t.end());
        expected.push_back(h.label(t[0]) + "^" + h.label(t[1]) + "^" + h.label(t[2]));
      }
      const auto& triples = exterior_triples(n);
      bool units = true;
      for (std::size_t t = 0; t < triples.size(); ++t)
        if (j(0, t) != 0) {
          actual.push_back(h.label(triples[t][0]) + "^" + h.label(triples[t][1]) + "^" + h.label(triples[t][2]));
          units = units && abs(j(0, t)) == 1;
        }
      std::sort(expected.begin(), expected.end());
      std::sort(actual.begin(), actual.end());
      return verdict(units && expected == actual, join(expected), join(actual) + (units ? "" : " (non-unit)"));
    });
  }
  return rec.records;
}

std::vector<CheckRecord> torelli_suite(const RunConfig& c) {
  Recorder rec;
  const int g = c.genus;
  constexpr const char* kH1 = "H_1(I;Z) = Lambda^3 H_Z + B_2/<a>, B_2/<a> 2-torsion";
  constexpr const char* kD1 = "H_1(IA;Z) = Lambda^3 H_Z + B_2 via pullback";
  const std::size_t t = binomial(2 * g, 3);
  const std::size_t b2 = bool_dimension(g, 2);
  rec.check("torelli-h1/q-reconstruction-caveat", "q: B_3 -> Lambda^3 H_Z (x) Z/2, surjective Sp-equivariant", [&] {
    return verdict(q_is_surjective(g), "reconstructed q (cubic xyz -> x^y^z, degree <= 2 -> 0) is surjective",
                   q_is_surjective(g) ? "reconstructed q (cubic xyz -> x^y^z, degree <= 2 -> 0) is surjective"
                                      : "reconstructed q is not surjective");
  });
  rec.check("torelli-h1/bool-dimensions", "B_i = boolean polynomials of degree <= i", [&] {
    std::vector<std::size_t> e{bool_dimension(g, 1), bool_dimension(g, 2), bool_dimension(g, 3)};
    std::vector<std::size_t> a{bool_basis(g, 1).size(), bool_basis(g, 2).size(), bool_basis(g, 3).size()};
    return equal(join(e), join(a));
  });
  rec.check("torelli-h1/element-a", "a = sum_i a_i b_i, sigma(T_boundary) = a", [&] {
    const BoolPoly a = element_a(g);
    const bool order_two = !a.is_zero() && (a + a).is_zero();
    return verdict(order_two, "nonzero of order 2", a.to_string() + (order_two ? " (order 2)" : ""));
  });
  rec.check("torelli-h1/d1-invariants", kD1, [&] {
    FgAbGroup e{t, std::vector<Int>(b2, 2)};
    return equal(e.to_string(), pullback_d1(g).invariants.to_string());
  });
  rec.check("torelli-h1/d3-invariants", kH1, [&] {
    FgAbGroup e{t, std::vector<Int>(b2 - 1, 2)};
    return equal(e.to_string(), pullback_d3(g).invariants.to_string());
  });
  rec.check("torelli-h1/constant-convention", kH1, [&] {
    const auto d1 = pullback_d1(g).invariants.elementary_two_rank();
    const auto d3 = pullback_d3(g).invariants.elementary_two_rank();
    std::ostringstream e, a;
    e << "with constants: D1 2^" << b2 << ", D3 2^" << b2 - 1 << "; without constants: D1 2^" << b2 - 1
      << ", D3 2^" << b2 - 2;
    a << "with constants: D1 2^" << d1 << ", D3 2^" << d3 << "; without constants: D1 2^" << d1 - 1
      << ", D3 2^" << d3 - 1;
    return equal(e.str(), a.str());
  });
  rec.check("torelli-h1/projection-surjective", "D -> Lambda^3 H is onto", [&] {
    return equal(true, pullback_projection_surjective(g));
  });
  rec.check("torelli-h1/pullback-spot-check", "D = {(a,b) : psi_1(a) = psi_2(b)}", [&] {
    std::mt19937_64 rng(suite_seed(c.seed, "torelli-h1/spot"));
    const auto basis = bool_basis(g, 3);
    std::size_t ok = 0;
    const std::size_t trials = std::min<std::size_t>(c.trials, 200);
    for (std::size_t i = 0; i < trials; ++i) {
      BoolPoly p(g, 3);
      for (Monomial m : basis)
        if (rng() % 2) p.toggle(m);
      const auto qp = q_map(p);
      std::vector<Int> v(t);
      for (std::size_t s = 0; s < t; ++s) v[s] = qp[s] + 2 * (static_cast<long>(rng() % 7) - 3);
      const auto coords = pullback_element(g, p, v);
      const auto [p2, v2] = pullback_projections(g, coords);
      const auto qp2 = q_map(p2);
      bool commutes = true;
      for (std::size_t s = 0; s < t; ++s) commutes = commutes && mpz_even_p(Int(v2[s] - qp2[s]).get_mpz_t());
      ok += p2 == p && v2 == v && commutes;
    }
    return equal(trials, ok);
  });
  rec.check("torelli-h1/a-killed-in-d3", "<a> = (<T_boundary>[I,I])/[I,I] = Z/2", [&] {
    const PullbackGroup d3 = pullback_d3(g);
    const IntMatrix arow = d3.relations.row_block(d3.relations.rows() - 1, d3.relations.rows());
    const PullbackGroup d1 = pullback_d1(g);
    const bool nonzero_in_d1 = !same_row_span(d1.relations, d1.relations.stacked(arow));
    const bool zero_in_d3 = same_row_span(d3.relations, d3.relations.stacked(arow));
    return verdict(nonzero_in_d1 && zero_in_d3, "nonzero in D1, zero in D3",
                   std::string(nonzero_in_d1 ? "nonzero" : "zero") + " in D1, " + (zero_in_d3 ? "zero" : "nonzero") + " in D3");
  });
  return rec.records;
}

std::vector<CheckRecord> lemma_suite(const RunConfig& c) {
  Recorder rec;
  const int g = c.genus;
  constexpr const char* kCorr = "invariant Q-subspaces <-> invariant Z-direct summands";
  constexpr const char* kTransfer = "L_2 = L_3 L_1, L_2(Z^{2g}) summand => L_1(Z^{2g}) summand";
  const IntMatrix j = johnson_image(g);
  rec.check("lemma-summand/roundtrip-johnson", kCorr, [&] {
    const auto r = summand_correspondence_roundtrip(j, g);
    return verdict(r.holds(), "invariant summand, roundtrip identity",
                   std::string(r.invariant ? "invariant" : "not invariant") + (r.summand ? " summand" : " non-summand") +
                       (r.holds() ? ", roundtrip identity" : ", roundtrip failed"));
  });
  rec.check("lemma-summand/roundtrip-full-module", kCorr, [&] {
    const std::size_t n = binomial(2 * g, 3);
    return equal(true, summand_correspondence_roundtrip(IntMatrix::identity(n), g).holds());
  });
  rec.check("lemma-summand/roundtrip-random-unimodular", kCorr, [&] {
    std::mt19937_64 rng(suite_seed(c.seed, "lemma/unimodular"));
    constexpr std::size_t instances = 100;
    std::size_t ok = 0;
    for (std::size_t i = 0; i < instances; ++i) {
      const IntMatrix u = random_unimodular(rng, j.rows(), 12);
      ok += summand_correspondence_roundtrip(u * j, g).holds();
    }
    return equal(instances, ok);
  });
  rec.check("lemma-summand/transfer-property", kTransfer, [&] {
    std::mt19937_64 rng(suite_seed(c.seed, "lemma/transfer"));
    std::size_t premises = 0, counterexamples = 0, attempts = 0;
    while (premises < c.trials && attempts < 200 * c.trials + 1000) {
      ++attempts;
      const std::size_t m = 1 + rng() % 3;
      const std::size_t n = m + rng() % 3;
      IntMatrix inner(n, m), outer(n, n);
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t s = 0; s < m; ++s) inner(r, s) = static_cast<long>(rng() % 5) - 2;
        for (std::size_t s = 0; s < n; ++s) outer(r, s) = static_cast<long>(rng() % 5) - 2;
      }
      const auto t = verify_summand_transfer(inner, outer);
      if (!t.composite_is_full_rank_summand) continue;
      ++premises;
      if (!t.implication_holds()) ++counterexamples;
    }
    return verdict(premises >= c.trials && counterexamples == 0,
                   std::to_string(c.trials) + " premises, 0 counterexamples",
                   std::to_string(premises) + " premises, " + std::to_string(counterexamples) + " counterexamples");
  });
  return rec.records;
}

std::vector<CheckRecord> identity_suite(const RunConfig& c) {
  Recorder rec;
  rec.check("identity-viii/random-triples", "[PG,N] subset P[G,N]", [&] {
    std::mt19937_64 rng(suite_seed(c.seed, "identity-viii"));
    std::size_t ok = 0;
    for (std::size_t i = 0; i < c.trials; ++i) {
      const GroupWord p = random_group_word(rng, c.genus, 8);
      const GroupWord gw = random_group_word(rng, c.genus, 8);
      const GroupWord n = random_group_word(rng, c.genus, 8);
      ok += verify_identity_viii(p, gw, n);
    }
    return equal(c.trials, ok);
  });
  rec.check("identity-viii/degenerate", "[PG,N] subset P[G,N]", [&] {
    const GroupWord a = GroupWord::generator(letter_a(1)), b = GroupWord::generator(letter_b(1));
    const bool ok = verify_identity_viii(GroupWord(), a, b) && verify_identity_viii(a, b, GroupWord()) &&
                    verify_identity_viii(a, GroupWord(), b);
    return equal(true, ok);
  });
  return rec.records;
}

std::vector<CheckRecord> index_suite(const RunConfig& c) {
  Recorder rec;
  constexpr const char* kIndex = "[N:P] chi(Sigma) = chi(Gamma)";
  const long chi = 2 - 2L * c.genus;
  rec.check("index-formula/equal-characteristics", kIndex, [&] { return equal(1L, euler_index(chi, chi)); });
  rec.check("index-formula/triple-cover", kIndex, [&] { return equal(3L, euler_index(-2, -6)); });
  rec.check("index-formula/non-divisible", kIndex, [&] {
    try {
      euler_index(-4, -6);
      return verdict(false, "non-divisibility error", "no error");
    } catch (const std::domain_error&) {
      return verdict(true, "non-divisibility error", "non-divisibility error");
    }
  });
  return rec.records;
}

}  // namespace

std::vector<CheckRecord> run_suite(const std::string& suite, const RunConfig& config) {
  if (suite == "lie-center") return lie_center(config);
  if (suite == "enveloping") return enveloping_suite(config);
  if (suite == "nilpotent") return nilpotent_suite(config);
  if (suite == "sp-decomposition") return sp_suite(config);
  if (suite == "johnson-image") return johnson_suite(config);
  if (suite == "torelli-h1") return torelli_suite(config);
  if (suite == "lemma-summand") return lemma_suite(config);
  if (suite == "identity-viii") return identity_suite(config);
  if (suite == "index-formula") return index_suite(config);
  throw ConfigError("unknown suite: " + suite);
}

Report run(const RunConfig& config) {
  validate(config);
  std::vector<std::string> ordered;
  for (const auto& s : known_suites())
    if (std::find(config.suites.begin(), config.suites.end(), s) != config.suites.end()) ordered.push_back(s);

  std::vector<std::future<std::vector<CheckRecord>>> jobs;
  for (const auto& s : ordered) jobs.push_back(std::async(std::launch::async, run_suite, s, std::cref(config)));
  Report r;
  r.config = config;
  r.config.suites = ordered;
  for (auto& j : jobs) {
    auto recs = j.get();
    r.checks.insert(r.checks.end(), std::make_move_iterator(recs.begin()), std::make_move_iterator(recs.end()));
  }
  return r;
}

bool Report::all_passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.status == Status::Fail; });
}

nlohmann::json Report::to_json() const {
  nlohmann::json j;
  j["config"] = {{"genus", config.genus},           {"max_degree", config.max_degree},
                 {"suites", config.suites},         {"report_format", config.report_format},
                 {"seed", config.seed},             {"trials", config.trials}};
  j["version"] = version;
  j["schema"] = kReportSchema;
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks)
    j["checks"].push_back({{"name", c.name},
                           {"paper_anchor", c.paper_anchor},
                           {"status", status_name(c.status)},
                           {"expected", c.expected},
                           {"actual", c.actual},
                           {"runtime_ms", c.runtime_ms}});
  return j;
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << version << "  genus=" << config.genus << " max_degree=" << config.max_degree << " seed=" << config.seed
     << " trials=" << config.trials << '\n';
  std::size_t pass = 0, fail = 0, skip = 0;
  for (const auto& c : checks) {
    std::string tag = c.status == Status::Pass ? "PASS" : c.status == Status::Fail ? "FAIL" : "SKIP";
    (c.status == Status::Pass ? pass : c.status == Status::Fail ? fail : skip)++;
    os << tag << "  " << c.name << "  expected=" << c.expected << "  actual=" << c.actual << '\n';
  }
  os << pass << " passed, " << fail << " failed, " << skip << " skipped\n";
  return os.str();
}

std::vector<std::string> golden_diff(const nlohmann::json& expected, const nlohmann::json& actual) {
  std::vector<std::string> diffs;
  std::map<std::string, nlohmann::json> got;
  for (const auto& c : actual.at("checks")) got[c.at("name").get<std::string>()] = c;
  std::size_t seen = 0;
  for (const auto& c : expected.at("checks")) {
    const auto name = c.at("name").get<std::string>();
    auto it = got.find(name);
    if (it == got.end()) {
      diffs.push_back("missing check " + name);
      continue;
    }
    ++seen;
    for (const char* field : {"status", "expected", "actual", "paper_anchor"})
      if (c.at(field) != it->second.at(field))
        diffs.push_back(name + ": " + field + " " + c.at(field).dump() + " != " + it->second.at(field).dump());
  }
  if (seen != got.size()) diffs.push_back("report has checks absent from the golden file");
  if (expected.at("config") != actual.at("config")) diffs.push_back("config differs");
  return diffs;
}

}  // namespace surfalg
