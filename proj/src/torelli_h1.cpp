#include "surfalg/torelli_h1.hpp"

#include "surfalg/sp_rep.hpp"

#include <algorithm>
#include <bit>

namespace surfalg {

namespace {

void check_genus(int genus) {
  if (genus < 1 || genus > 8) throw std::invalid_argument("boolean polynomials: genus in [1, 8]");
}

std::vector<std::size_t> monomial_vars(Monomial m) {
  std::vector<std::size_t> v;
  for (std::size_t i = 0; i < 32; ++i)
    if (m & (1u << i)) v.push_back(i);
  return v;
}

std::size_t basis_position(int genus, int bound, Monomial m) {
  const auto basis = bool_basis(genus, bound);
  auto it = std::find(basis.begin(), basis.end(), m);
  if (it == basis.end()) throw std::invalid_argument("monomial outside the basis");
  return static_cast<std::size_t>(it - basis.begin());
}

}  // namespace

int monomial_degree(Monomial m) { return std::popcount(m); }

std::string monomial_name(int genus, Monomial m) {
  if (m == 0) return "1";
  const SymplecticSpace h(genus);
  std::string s;
  for (auto v : monomial_vars(m)) s += h.label(v);
  return s;
}

std::vector<Monomial> bool_basis(int genus, int max_degree) {
  check_genus(genus);
  if (max_degree < 0) throw std::invalid_argument("bool_basis: degree bound >= 0");
  const std::size_t n = 2 * static_cast<std::size_t>(genus);
  std::vector<Monomial> out;
  for (int d = 0; d <= max_degree && d <= static_cast<int>(n); ++d) {
    std::vector<Monomial> layer;
    for (Monomial m = 0; m < (1u << n); ++m)
      if (monomial_degree(m) == d) layer.push_back(m);
    std::sort(layer.begin(), layer.end(),
              [](Monomial x, Monomial y) { return monomial_vars(x) < monomial_vars(y); });
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

std::size_t bool_dimension(int genus, int max_degree, bool include_constant) {
  std::size_t total = 0;
  for (int d = include_constant ? 0 : 1; d <= max_degree; ++d)
    total += binomial(2 * static_cast<std::size_t>(genus), static_cast<std::size_t>(d));
  return total;
}

BoolPoly::BoolPoly(int genus, int degree_bound) : genus_(genus), bound_(degree_bound) {
  check_genus(genus);
}

BoolPoly BoolPoly::monomial(int genus, int degree_bound, Monomial m) {
  BoolPoly p(genus, degree_bound);
  p.toggle(m);
  return p;
}

int BoolPoly::degree() const {
  int d = 0;
  for (Monomial m : support_) d = std::max(d, monomial_degree(m));
  return d;
}

void BoolPoly::toggle(Monomial m) {
  if (m >= (1u << (2 * genus_))) throw std::invalid_argument("BoolPoly: variable out of range");
  if (monomial_degree(m) > bound_) throw std::invalid_argument("BoolPoly: degree exceeds bound");
  if (!support_.erase(m)) support_.insert(m);
}

BoolPoly& BoolPoly::operator+=(const BoolPoly& o) {
  if (genus_ != o.genus_) throw std::invalid_argument("BoolPoly: genus mismatch");
  bound_ = std::max(bound_, o.bound_);
  for (Monomial m : o.support_) toggle(m);
  return *this;
}

BoolPoly operator*(const BoolPoly& a, const BoolPoly& b) {
  if (a.genus_ != b.genus_) throw std::invalid_argument("BoolPoly: genus mismatch");
  BoolPoly r(a.genus_, a.bound_ + b.bound_);
  for (Monomial x : a.support_)
    for (Monomial y : b.support_) r.toggle(x | y);
  return r;
}

std::vector<int> BoolPoly::coords(int bound) const {
  const auto basis = bool_basis(genus_, bound);
  std::vector<int> v(basis.size());
  for (Monomial m : support_) v[basis_position(genus_, bound, m)] = 1;
  return v;
}

std::string BoolPoly::to_string() const {
  if (support_.empty()) return "0";
  std::vector<Monomial> ms(support_.begin(), support_.end());
  std::sort(ms.begin(), ms.end(), [](Monomial x, Monomial y) {
    if (monomial_degree(x) != monomial_degree(y)) return monomial_degree(x) < monomial_degree(y);
    return monomial_vars(x) < monomial_vars(y);
  });
  std::string s;
  for (std::size_t i = 0; i < ms.size(); ++i) s += (i ? " + " : "") + monomial_name(genus_, ms[i]);
  return s;
}

BoolPoly element_a(int genus) {
  const SymplecticSpace h(genus);
  BoolPoly a(genus, 2);
  for (int i = 1; i <= genus; ++i)
    a.toggle((1u << h.index_a(i)) | (1u << h.index_b(i)));
  return a;
}

std::vector<int> q_map(const BoolPoly& p) {
  if (p.degree() > 3) throw std::invalid_argument("q_map: degree > 3");
  const std::size_t n = 2 * static_cast<std::size_t>(p.genus());
  std::vector<int> v(binomial(n, 3));
  for (Monomial m : p.support()) {
    if (monomial_degree(m) != 3) continue;
    const auto vars = monomial_vars(m);
    v[triple_index(n, {vars[0], vars[1], vars[2]})] ^= 1;
  }
  return v;
}

IntMatrix q_matrix(int genus) {
  const auto basis = bool_basis(genus, 3);
  const std::size_t n = 2 * static_cast<std::size_t>(genus);
  IntMatrix q(binomial(n, 3), basis.size());
  for (std::size_t c = 0; c < basis.size(); ++c) {
    const auto image = q_map(BoolPoly::monomial(genus, 3, basis[c]));
    for (std::size_t r = 0; r < image.size(); ++r) q(r, c) = image[r];
  }
  return q;
}

bool q_is_surjective(int genus) {
  const IntMatrix q = q_matrix(genus);
  return rank_mod2(q) == q.rows();
}

PullbackGroup pullback_d1(int genus) {
  if (genus < 2) throw std::invalid_argument("pullback_d1: genus >= 2");
  if (genus > 5) throw ResourceBound("pullback_d1: genus too large");
  const IntMatrix q = q_matrix(genus);
  PullbackGroup d;
  d.genus = genus;
  d.boolean_generators = q.cols();
  d.free_generators = q.rows();
  const std::size_t nb = d.boolean_generators, nt = d.free_generators;
  // (2 e_m, 0) = 2 (e_m, Q e_m) - sum_t Q_tm (0, 2 e_t)
  d.relations = IntMatrix(nb, nb + nt);
  for (std::size_t m = 0; m < nb; ++m) {
    d.relations(m, m) = 2;
    for (std::size_t t = 0; t < nt; ++t) d.relations(m, nb + t) = -q(t, m);
  }
  d.invariants = cokernel(d.relations);
  return d;
}

PullbackGroup pullback_d3(int genus) {
  PullbackGroup d = pullback_d1(genus);
  const BoolPoly a = element_a(genus);
  for (int x : q_map(a))
    if (x) throw std::logic_error("pullback_d3: q(a) != 0, (a, 0) is not in D");
  // (a, 0) = sum_{m in a} (e_m, Q e_m) since Q a = 0.
  IntMatrix row(1, d.boolean_generators + d.free_generators);
  const auto ca = a.coords(3);
  for (std::size_t m = 0; m < ca.size(); ++m) row(0, m) = ca[m];
  d.relations = d.relations.stacked(row);
  d.invariants = cokernel(d.relations);
  return d;
}

std::vector<Int> pullback_element(int genus, const BoolPoly& p, std::span<const Int> v) {
  const IntMatrix q = q_matrix(genus);
  const std::size_t nb = q.cols(), nt = q.rows();
  if (v.size() != nt) throw std::invalid_argument("pullback_element: wrong vector length");
  const auto x = p.coords(3);
  std::vector<Int> coords(nb + nt);
  for (std::size_t m = 0; m < nb; ++m) coords[m] = x[m];
  for (std::size_t t = 0; t < nt; ++t) {
    Int qx = 0;
    for (std::size_t m = 0; m < nb; ++m) qx += q(t, m) * x[m];
    Int diff = v[t] - qx;
    if (!mpz_even_p(diff.get_mpz_t()))
      throw std::invalid_argument("pullback_element: q(p) != v mod 2");
    coords[nb + t] = diff / 2;
  }
  return coords;
}

std::pair<BoolPoly, std::vector<Int>> pullback_projections(int genus, std::span<const Int> coords) {
  const IntMatrix q = q_matrix(genus);
  const std::size_t nb = q.cols(), nt = q.rows();
  if (coords.size() != nb + nt) throw std::invalid_argument("pullback_projections: length");
  const auto basis = bool_basis(genus, 3);
  BoolPoly p(genus, 3);
  std::vector<Int> v(nt);
  for (std::size_t m = 0; m < nb; ++m) {
    if (mpz_odd_p(coords[m].get_mpz_t())) p.toggle(basis[m]);
    for (std::size_t t = 0; t < nt; ++t) v[t] += coords[m] * q(t, m);
  }
  for (std::size_t t = 0; t < nt; ++t) v[t] += 2 * coords[nb + t];
  return {p, v};
}

bool pullback_projection_surjective(int genus) {
  const IntMatrix q = q_matrix(genus);
  const std::size_t nb = q.cols(), nt = q.rows();
  // Images of the lattice basis in Lambda^3 H.
  IntMatrix images(nb + nt, nt);
  for (std::size_t m = 0; m < nb; ++m)
    for (std::size_t t = 0; t < nt; ++t) images(m, t) = q(t, m);
  for (std::size_t t = 0; t < nt; ++t) images(nb + t, t) = 2;
  return rank(images) == nt && is_direct_summand(images, nt);
}

}  // namespace surfalg
