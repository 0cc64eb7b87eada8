#include "surfalg/surface_lie.hpp"

namespace surfalg {

namespace {

constexpr std::size_t kMaxFreeDimension = 20000;

SurfaceAlgebra::Degree make_degree(std::size_t n, std::size_t d,
                                   const std::vector<std::vector<Int>>& span) {
  SurfaceAlgebra::Degree deg;
  deg.free_dimension = n;
  IntMatrix gens = IntMatrix::from_rows(span, n);
  if (gens.rows() > 0) {
    HnfResult h = hnf_no_transform(gens);
    deg.ideal = h.basis();
    deg.ideal_invariants = snf_invariants(deg.ideal);
  } else {
    deg.ideal = IntMatrix(0, n);
  }
  deg.quotient_is_free = true;
  for (const auto& x : deg.ideal_invariants)
    if (x != 0 && x != 1) deg.quotient_is_free = false;

  std::vector<std::size_t> pivots;
  bool unit_pivots = true;
  for (std::size_t i = 0; i < deg.ideal.rows(); ++i) {
    std::size_t c = 0;
    while (deg.ideal(i, c) == 0) ++c;
    pivots.push_back(c);
    if (deg.ideal(i, c) != 1) unit_pivots = false;
  }
  const std::size_t r = pivots.size();
  const std::size_t q = n - r;

  if (unit_pivots) {
    deg.pivot_complement = true;
    std::vector<std::size_t> non_pivots;
    for (std::size_t k = 0, p = 0; k < n; ++k) {
      if (p < r && pivots[p] == k) {
        ++p;
        continue;
      }
      non_pivots.push_back(k);
    }
    deg.projection = IntMatrix(n, q);
    deg.lift = IntMatrix(q, n);
    for (std::size_t j = 0; j < q; ++j) {
      deg.projection(non_pivots[j], j) = 1;
      deg.lift(j, non_pivots[j]) = 1;
    }
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < q; ++j)
        deg.projection(pivots[i], j) = -deg.ideal(i, non_pivots[j]);
    return deg;
  }

  // Unimodular complement from the Smith form: u * B * v = [I 0].
  if (!deg.quotient_is_free)
    throw std::logic_error("surface algebra: ideal is not saturated in degree " +
                           std::to_string(d));
  SnfResult s = snf(deg.ideal);
  const IntMatrix vinv = unimodular_inverse(s.v);
  deg.projection = IntMatrix(n, q);
  deg.lift = IntMatrix(q, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < q; ++j) {
      deg.projection(k, j) = s.v(k, r + j);
      deg.lift(j, k) = vinv(r + j, k);
    }
  return deg;
}

}  // namespace

SurfaceAlgebra SurfaceAlgebra::build(int genus, std::size_t max_degree) {
  if (genus < 2) throw std::invalid_argument("SurfaceAlgebra: genus must be >= 2");
  if (max_degree < 1) throw std::invalid_argument("SurfaceAlgebra: max_degree must be >= 1");
  const std::size_t n = 2 * static_cast<std::size_t>(genus);
  if (n > kMaxLetters) throw ResourceBound("SurfaceAlgebra: too many generators");
  for (std::size_t d = 1; d <= max_degree; ++d)
    if (witt_dimension(n, d) > kMaxFreeDimension)
      throw ResourceBound("SurfaceAlgebra: degree " + std::to_string(d) +
                          " too large for " + std::to_string(n) + " generators");

  auto data = std::make_shared<Data>();
  data->genus = genus;

  LieElement omega(n);
  for (int i = 1; i <= genus; ++i)
    omega += bracket(LieElement::generator(n, letter_a(i)), LieElement::generator(n, letter_b(i)));

  for (std::size_t d = 1; d <= max_degree; ++d) {
    std::vector<std::vector<Int>> span;
    if (d == 2) {
      span.push_back(dense_coords(omega, 2));
    } else if (d >= 3) {
      const Degree& prev = data->degrees[d - 2];
      for (std::size_t x = 0; x < n; ++x) {
        const LieElement gx = LieElement::generator(n, static_cast<Letter>(x));
        for (std::size_t i = 0; i < prev.ideal.rows(); ++i) {
          const LieElement r = from_dense(n, d - 1, prev.ideal.row(i));
          span.push_back(dense_coords(bracket(gx, r), d));
        }
      }
    }
    Degree deg = make_degree(witt_dimension(n, d), d, span);
    if (deg.pivot_complement) {
      const auto basis = hall_basis(n, d);
      for (std::size_t j = 0; j < deg.rank(); ++j)
        for (std::size_t k = 0; k < deg.free_dimension; ++k)
          if (deg.lift(j, k) == 1) deg.quotient_words.push_back(basis[k].word);
    }
    data->degrees.push_back(std::move(deg));
  }
  SurfaceAlgebra alg;
  alg.data_ = std::move(data);
  return alg;
}

const SurfaceAlgebra::Degree& SurfaceAlgebra::degree(std::size_t d) const {
  if (d < 1 || d > data_->degrees.size())
    throw std::out_of_range("SurfaceAlgebra: degree " + std::to_string(d) + " out of range");
  return data_->degrees[d - 1];
}

LieElement SurfaceAlgebra::omega() const {
  const std::size_t n = generators();
  LieElement w(n);
  for (int i = 1; i <= genus(); ++i)
    w += bracket(LieElement::generator(n, letter_a(i)), LieElement::generator(n, letter_b(i)));
  return w;
}

std::vector<Int> SurfaceAlgebra::project(const LieElement& x, std::size_t d) const {
  const auto v = dense_coords(x, d);
  return mul(std::span<const Int>(v), degree(d).projection);
}

LieElement SurfaceAlgebra::lift(std::span<const Int> coords, std::size_t d) const {
  const auto v = mul(coords, degree(d).lift);
  return from_dense(generators(), d, v);
}

bool SurfaceAlgebra::in_ideal(const LieElement& x, std::size_t d) const {
  for (const auto& c : project(x, d))
    if (c != 0) return false;
  return true;
}

bool GradedElement::is_zero() const {
  for (const auto& c : components)
    for (const auto& x : c)
      if (x != 0) return false;
  return true;
}

GradedElement graded_basis_element(const SurfaceAlgebra& alg, std::size_t d, std::size_t i) {
  GradedElement e;
  e.components.resize(alg.max_degree());
  for (std::size_t k = 1; k <= alg.max_degree(); ++k) e.components[k - 1].resize(alg.rank(k));
  if (i >= alg.rank(d)) throw std::out_of_range("graded_basis_element: index out of range");
  e.components[d - 1][i] = 1;
  return e;
}

GradedElement bracket(const SurfaceAlgebra& alg, const GradedElement& x, const GradedElement& y) {
  const std::size_t k = alg.max_degree();
  if (x.components.size() != k || y.components.size() != k)
    throw std::invalid_argument("bracket: graded element shape mismatch");
  GradedElement out;
  out.components.resize(k);
  for (std::size_t d = 1; d <= k; ++d) out.components[d - 1].resize(alg.rank(d));
  for (std::size_t i = 1; i <= k; ++i)
    for (std::size_t j = 1; i + j <= k; ++j) {
      const LieElement lx = alg.lift(x.components[i - 1], i);
      const LieElement ly = alg.lift(y.components[j - 1], j);
      if (lx.is_zero() || ly.is_zero()) continue;
      const auto p = alg.project(bracket(lx, ly), i + j);
      for (std::size_t t = 0; t < p.size(); ++t) out.components[i + j - 1][t] += p[t];
    }
  return out;
}

IntMatrix center_in_degree(const SurfaceAlgebra& alg, std::size_t d) {
  if (d < 1 || d + 1 > alg.max_degree())
    throw std::out_of_range("center_in_degree: need 1 <= d and d + 1 <= max_degree");
  const std::size_t n = alg.generators();
  const std::size_t rows = alg.rank(d), next = alg.rank(d + 1);
  IntMatrix m(rows, n * next);
  std::vector<Int> unit(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    unit.assign(rows, 0);
    unit[i] = 1;
    const LieElement x = alg.lift(unit, d);
    for (std::size_t g = 0; g < n; ++g) {
      const auto p =
          alg.project(bracket(x, LieElement::generator(n, static_cast<Letter>(g))), d + 1);
      for (std::size_t t = 0; t < next; ++t) m(i, g * next + t) = p[t];
    }
  }
  return left_kernel_certified(m);
}

CenterReport verify_center_theorem(const SurfaceAlgebra& alg) {
  CenterReport r;
  r.pass = true;
  for (std::size_t d = 1; d + 1 <= alg.max_degree(); ++d) {
    const IntMatrix c = center_in_degree(alg, d);
    r.entries.push_back({d, alg.rank(d), c.rows()});
    if (c.rows() != 0) r.pass = false;
  }
  return r;
}

}  // namespace surfalg
