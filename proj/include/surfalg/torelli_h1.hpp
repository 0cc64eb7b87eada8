#pragma once

#include "surfalg/int_linalg.hpp"

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace surfalg {

/// Squarefree monomial over the 2g idempotent indeterminates, as a bit mask.
/// Bit positions follow the symplectic coordinates a_1..a_g, b_1..b_g.
using Monomial = std::uint32_t;

int monomial_degree(Monomial m);
std::string monomial_name(int genus, Monomial m);

/// All squarefree monomials of degree <= i including 1, ordered by degree
/// then lexicographically by variable index.
std::vector<Monomial> bool_basis(int genus, int max_degree);
std::size_t bool_dimension(int genus, int max_degree, bool include_constant = true);

/// Z/2 polynomial in idempotent indeterminates with degree <= bound.
class BoolPoly {
 public:
  BoolPoly(int genus, int degree_bound);
  static BoolPoly monomial(int genus, int degree_bound, Monomial m);

  int genus() const { return genus_; }
  int degree_bound() const { return bound_; }
  const std::set<Monomial>& support() const { return support_; }
  bool is_zero() const { return support_.empty(); }
  int degree() const;
  void toggle(Monomial m);

  BoolPoly& operator+=(const BoolPoly& o);
  friend BoolPoly operator+(BoolPoly a, const BoolPoly& b) { return a += b; }
  /// x^2 = x; the degree bound of the product is the sum of the bounds.
  friend BoolPoly operator*(const BoolPoly& a, const BoolPoly& b);
  friend bool operator==(const BoolPoly&, const BoolPoly&) = default;

  /// Coordinates over bool_basis(genus, bound).
  std::vector<int> coords(int bound) const;
  std::string to_string() const;

 private:
  int genus_;
  int bound_;
  std::set<Monomial> support_;
};

/// a = sum_i a_i b_i in B_2.
BoolPoly element_a(int genus);

/// q: B_3 -> Lambda^3 H (x) Z/2, cubic monomials xyz -> x^y^z and lower-degree
/// monomials -> 0. Reconstructed map; satisfies the surjectivity and
/// kernel-contains-B_2 properties used by the pullback computations.
std::vector<int> q_map(const BoolPoly& p);
/// 0/1 matrix of q, rows = exterior triples, columns = bool_basis(genus, 3).
IntMatrix q_matrix(int genus);
bool q_is_surjective(int genus);

/// Fiber product D = {(p, v) in B_3 x Lambda^3 H : q(p) = v mod 2} presented as
/// a quotient of the lattice D~ = {(x, v) in Z^N x Z^T : Qx = v mod 2} with
/// basis (e_m, Q e_m), (0, 2 e_t), by the subgroup 2Z^N x 0 (and, for D3,
/// the class of (a, 0)).
struct PullbackGroup {
  int genus = 0;
  std::size_t boolean_generators = 0;  // N = dim B_3
  std::size_t free_generators = 0;     // T = C(2g, 3)
  IntMatrix relations;                 // rows over the N + T lattice basis
  FgAbGroup invariants;
  bool reconstructed_q = true;
};

PullbackGroup pullback_d1(int genus);
PullbackGroup pullback_d3(int genus);

/// Lattice coordinates of a compatible pair; throws if q(p) != v mod 2.
std::vector<Int> pullback_element(int genus, const BoolPoly& p, std::span<const Int> v);
/// (p, v) from lattice coordinates.
std::pair<BoolPoly, std::vector<Int>> pullback_projections(int genus, std::span<const Int> coords);
/// Image of D in Lambda^3 H is all of Lambda^3 H.
bool pullback_projection_surjective(int genus);

}  // namespace surfalg
