#include "surfalg/sp_rep.hpp"

#include <map>
#include <mutex>

namespace surfalg {

SymplecticSpace::SymplecticSpace(int genus) : genus_(genus) {
  if (genus < 1) throw std::invalid_argument("SymplecticSpace: genus >= 1");
  const std::size_t g = static_cast<std::size_t>(genus);
  form_ = IntMatrix(2 * g, 2 * g);
  for (std::size_t i = 0; i < g; ++i) {
    form_(i, g + i) = 1;
    form_(g + i, i) = -1;
  }
}

std::string SymplecticSpace::label(std::size_t index) const {
  const std::size_t g = static_cast<std::size_t>(genus_);
  if (index >= 2 * g) throw std::out_of_range("SymplecticSpace::label");
  return index < g ? "a" + std::to_string(index + 1) : "b" + std::to_string(index - g + 1);
}

Int SymplecticSpace::pairing(std::span<const Int> u, std::span<const Int> v) const {
  const auto jv = mul(form_, v);
  Int s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * jv[i];
  return s;
}

std::vector<std::size_t> SymplecticSpace::interleaved_order() const {
  std::vector<std::size_t> order;
  for (int i = 1; i <= genus_; ++i) {
    order.push_back(index_a(i));
    order.push_back(index_b(i));
  }
  return order;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

const std::vector<Triple>& exterior_triples(std::size_t n) {
  static std::mutex m;
  static std::map<std::size_t, std::vector<Triple>> cache;
  std::lock_guard lock(m);
  auto& t = cache[n];
  if (t.empty() && n >= 3)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k) t.push_back({i, j, k});
  return t;
}

std::size_t triple_index(std::size_t n, Triple t) {
  const auto& all = exterior_triples(n);
  auto it = std::lower_bound(all.begin(), all.end(), t);
  if (it == all.end() || *it != t) throw std::invalid_argument("triple_index: not increasing");
  return static_cast<std::size_t>(it - all.begin());
}

std::vector<Int> unit_vector(std::size_t n, std::size_t i) {
  std::vector<Int> v(n);
  v.at(i) = 1;
  return v;
}

ExtVector wedge(std::span<const Int> u, std::span<const Int> v, std::span<const Int> w) {
  const std::size_t n = u.size();
  if (v.size() != n || w.size() != n) throw std::invalid_argument("wedge: length mismatch");
  ExtVector out{n, std::vector<Int>(binomial(n, 3))};
  const auto& triples = exterior_triples(n);
  for (std::size_t t = 0; t < triples.size(); ++t) {
    const auto [p, q, r] = triples[t];
    // 3x3 minor of the columns (u v w) on rows p, q, r.
    out.coords[t] = u[p] * (v[q] * w[r] - v[r] * w[q]) - v[p] * (u[q] * w[r] - u[r] * w[q]) +
                    w[p] * (u[q] * v[r] - u[r] * v[q]);
  }
  return out;
}

std::string family_name(SpFamily f) {
  switch (f) {
    case SpFamily::UpperDiagonal: return "upper-diagonal";
    case SpFamily::LowerDiagonal: return "lower-diagonal";
    case SpFamily::LowerSymmetric: return "lower-symmetric";
    case SpFamily::UpperSymmetric: return "upper-symmetric";
    case SpFamily::Block: return "block";
  }
  return "?";
}

bool preserves_form(const SymplecticSpace& h, const IntMatrix& m) {
  return m.transpose() * h.form() * m == h.form();
}

SpGenerator make_sp_generator(int genus, SpFamily family, std::size_t i, std::size_t j) {
  const std::size_t g = static_cast<std::size_t>(genus);
  if (i >= g || j >= g) throw std::invalid_argument("make_sp_generator: index out of range");
  IntMatrix m = IntMatrix::identity(2 * g);
  switch (family) {
    case SpFamily::UpperDiagonal: m(i, g + i) = 1; break;
    case SpFamily::LowerDiagonal: m(g + i, i) = 1; break;
    case SpFamily::LowerSymmetric:
      if (i == j) throw std::invalid_argument("make_sp_generator: need i != j");
      m(g + i, j) = 1;
      m(g + j, i) = 1;
      break;
    case SpFamily::UpperSymmetric:
      if (i == j) throw std::invalid_argument("make_sp_generator: need i != j");
      m(i, g + j) = 1;
      m(j, g + i) = 1;
      break;
    case SpFamily::Block:
      if (i == j) throw std::invalid_argument("make_sp_generator: need i != j");
      m(i, j) = 1;
      m(g + j, g + i) = -1;
      break;
  }
  if (!preserves_form(SymplecticSpace(genus), m))
    throw std::logic_error("make_sp_generator: matrix does not preserve the form");
  return {family, i, j, std::move(m)};
}

std::vector<SpGenerator> sp_generators(int genus) {
  const std::size_t g = static_cast<std::size_t>(genus);
  std::vector<SpGenerator> out;
  for (std::size_t i = 0; i < g; ++i) out.push_back(make_sp_generator(genus, SpFamily::UpperDiagonal, i, i));
  for (std::size_t i = 0; i < g; ++i) out.push_back(make_sp_generator(genus, SpFamily::LowerDiagonal, i, i));
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = i + 1; j < g; ++j)
      out.push_back(make_sp_generator(genus, SpFamily::LowerSymmetric, i, j));
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = i + 1; j < g; ++j)
      out.push_back(make_sp_generator(genus, SpFamily::UpperSymmetric, i, j));
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j)
      if (i != j) out.push_back(make_sp_generator(genus, SpFamily::Block, i, j));
  return out;
}

IntMatrix lambda3_action(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("lambda3_action: not square");
  const std::size_t n = m.rows();
  const auto& triples = exterior_triples(n);
  IntMatrix out(triples.size(), triples.size());
  for (std::size_t t = 0; t < triples.size(); ++t) {
    const auto [i, j, k] = triples[t];
    const auto col = [&](std::size_t c) {
      std::vector<Int> v(n);
      for (std::size_t r = 0; r < n; ++r) v[r] = m(r, c);
      return v;
    };
    const ExtVector image = wedge(col(i), col(j), col(k));
    for (std::size_t s = 0; s < triples.size(); ++s) out(s, t) = image.coords[s];
  }
  return out;
}

IntMatrix contraction_matrix(const SymplecticSpace& h) {
  const std::size_t n = h.dimension();
  const auto& triples = exterior_triples(n);
  const IntMatrix& j = h.form();
  IntMatrix c(n, triples.size());
  for (std::size_t t = 0; t < triples.size(); ++t) {
    const auto [x, y, z] = triples[t];
    c(z, t) += j(x, y);
    c(y, t) -= j(x, z);
    c(x, t) += j(y, z);
  }
  return c;
}

std::vector<Int> contraction(const ExtVector& v, const SymplecticSpace& h) {
  if (v.n != h.dimension()) throw std::invalid_argument("contraction: dimension mismatch");
  return mul(contraction_matrix(h), std::span<const Int>(v.coords));
}

IntMatrix theta_wedge_matrix(const SymplecticSpace& h) {
  const std::size_t n = h.dimension();
  IntMatrix s(binomial(n, 3), n);
  for (std::size_t c = 0; c < n; ++c) {
    const ExtVector v = theta_wedge(h, unit_vector(n, c));
    for (std::size_t r = 0; r < v.coords.size(); ++r) s(r, c) = v.coords[r];
  }
  return s;
}

ExtVector theta_wedge(const SymplecticSpace& h, std::span<const Int> v) {
  const std::size_t n = h.dimension();
  ExtVector out{n, std::vector<Int>(binomial(n, 3))};
  for (int i = 1; i <= h.genus(); ++i) {
    const ExtVector term = wedge(unit_vector(n, h.index_a(i)), unit_vector(n, h.index_b(i)), v);
    for (std::size_t t = 0; t < out.coords.size(); ++t) out.coords[t] += term.coords[t];
  }
  return out;
}

IntMatrix johnson_image(int genus) {
  if (genus < 2) throw std::invalid_argument("johnson_image: genus >= 2");
  const SymplecticSpace h(genus);
  const std::size_t n = h.dimension();
  IntMatrix rows(n, binomial(n, 3));
  const auto order = h.interleaved_order();
  for (std::size_t r = 0; r < n; ++r) {
    const ExtVector v = theta_wedge(h, unit_vector(n, order[r]));
    for (std::size_t t = 0; t < v.coords.size(); ++t) rows(r, t) = v.coords[t];
  }
  return rows;
}

namespace {

// Flattened entries of X commuting with A: (X A - A X)_{rs} = 0.
void append_commutation_rows(const IntMatrix& a, SparseIntMatrix& sys) {
  const std::size_t n = a.rows();
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t s = 0; s < n; ++s) {
      std::map<std::size_t, Int> row;
      for (std::size_t t = 0; t < n; ++t) {
        if (a(t, s) != 0) row[r * n + t] += a(t, s);
        if (a(r, t) != 0) row[t * n + s] -= a(r, t);
      }
      SparseRow sparse;
      for (auto& [c, v] : row)
        if (v != 0) sparse.emplace_back(c, v);
      if (!sparse.empty()) sys.rows.push_back(std::move(sparse));
    }
}

}  // namespace

CommutantReport commutant_report(int genus) {
  if (genus < 2) throw std::invalid_argument("commutant_dimension: genus >= 2");
  const SymplecticSpace h(genus);
  const std::size_t n = binomial(h.dimension(), 3);
  if (n > 120) throw ResourceBound("commutant_dimension: module too large");

  std::vector<IntMatrix> actions;
  for (const auto& gen : sp_generators(genus)) actions.push_back(lambda3_action(gen.matrix));

  SparseIntMatrix sys;
  sys.cols = n * n;
  for (const auto& a : actions) append_commutation_rows(a, sys);

  CommutantReport rep;
  rep.modular_upper_bound = n * n - rank_mod_p(sys);

  // Known members of the commutant.
  const IntMatrix projector = theta_wedge_matrix(h) * contraction_matrix(h);
  std::vector<IntMatrix> known{IntMatrix::identity(n), projector};
  std::vector<std::vector<Int>> flat;
  for (const auto& x : known) {
    bool commutes = true;
    for (const auto& a : actions) commutes = commutes && (x * a == a * x);
    if (!commutes) continue;
    std::vector<Int> f;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) f.push_back(x(r, c));
    flat.push_back(std::move(f));
  }
  rep.explicit_lower_bound = rank(IntMatrix::from_rows(flat, n * n));

  if (rep.explicit_lower_bound == rep.modular_upper_bound) {
    rep.dimension = rep.modular_upper_bound;
    rep.certified = true;
  } else if (n <= 20) {
    rep.dimension = n * n - rank(sys.to_dense());
    rep.certified = true;
  } else {
    rep.dimension = rep.modular_upper_bound;
    rep.certified = false;
  }
  return rep;
}

std::size_t commutant_dimension(int genus) {
  const CommutantReport r = commutant_report(genus);
  if (!r.certified) throw ResourceBound("commutant_dimension: could not certify exactly");
  return r.dimension;
}

bool is_sp_invariant(const IntMatrix& v, int genus) {
  const SymplecticSpace h(genus);
  const std::size_t n = binomial(h.dimension(), 3);
  if (v.cols() != n) throw std::invalid_argument("is_sp_invariant: wrong ambient dimension");
  if (v.rows() == 0) return true;
  for (const auto& gen : sp_generators(genus)) {
    const IntMatrix images = v * lambda3_action(gen.matrix).transpose();
    if (!same_row_span(v, v.stacked(images))) return false;
  }
  return true;
}

RoundtripReport summand_correspondence_roundtrip(const IntMatrix& v, int genus) {
  const SymplecticSpace h(genus);
  const std::size_t n = binomial(h.dimension(), 3);
  if (v.cols() != n) throw std::invalid_argument("roundtrip: wrong ambient dimension");
  RoundtripReport r;
  r.invariant = is_sp_invariant(v, genus);
  r.summand = is_direct_summand(v, n);
  // f(V) = V (x) Q, g(W) = integral points of W = saturation.
  const IntMatrix integral = saturate(v, n);
  const std::size_t rv = rank(v);
  r.rational_span_preserved = rank(integral) == rv && rank(integral.stacked(v)) == rv;
  r.integral_points_match = same_row_span(integral, v);
  return r;
}

IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, std::size_t steps) {
  IntMatrix u = IntMatrix::identity(n);
  if (n < 2) return u;
  for (std::size_t s = 0; s < steps; ++s) {
    const std::size_t i = rng() % n;
    std::size_t j = rng() % (n - 1);
    if (j >= i) ++j;
    const long q = static_cast<long>(rng() % 5) - 2;
    for (std::size_t c = 0; c < n; ++c) u(i, c) += q * u(j, c);
    if (rng() % 4 == 0)
      for (std::size_t c = 0; c < n; ++c) u(i, c) = -u(i, c);
  }
  return u;
}

}  // namespace surfalg
