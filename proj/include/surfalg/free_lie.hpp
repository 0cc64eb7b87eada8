#pragma once

#include "surfalg/int_linalg.hpp"
#include "surfalg/words.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace surfalg {

/// Lyndon word together with its standard bracketing. The standard
/// factorization w = uv takes v to be the longest proper Lyndon suffix, and
/// the Lie monomial is P(w) = [P(u), P(v)].
struct HallWord {
  Word word;
  std::size_t degree() const { return word.size(); }
  std::string bracketing() const;
  friend auto operator<=>(const HallWord&, const HallWord&) = default;
};

bool is_lyndon(const Word& w);
/// (u, v) with w = uv and v the longest proper Lyndon suffix; w must be a
/// Lyndon word of length >= 2.
std::pair<Word, Word> standard_factorization(const Word& w);

/// Lyndon words of the given length over n letters, lexicographic order.
std::vector<HallWord> hall_basis(std::size_t n, std::size_t degree);
/// Necklace (Witt) formula (1/d) sum_{e|d} mu(e) n^{d/e}.
std::size_t witt_dimension(std::size_t n, std::size_t degree);

/// Element of the free Lie ring on n generators in Lyndon-basis coordinates.
/// The algebra handle is the generator count; the basis convention is fixed.
class LieElement {
 public:
  using Coords = std::map<Word, Int>;  // key: Lyndon word

  LieElement() = default;
  explicit LieElement(std::size_t n) : n_(n) {}
  static LieElement generator(std::size_t n, Letter x);
  static LieElement basis_element(std::size_t n, const Word& lyndon, const Int& c = 1);

  std::size_t generators() const { return n_; }
  const Coords& coords() const { return coords_; }
  bool is_zero() const { return coords_.empty(); }
  Int coefficient(const Word& lyndon) const;
  void add_term(const Word& lyndon, const Int& c);
  LieElement component(std::size_t degree) const;
  /// Degree when homogeneous and nonzero, 0 otherwise.
  std::size_t homogeneous_degree() const;

  LieElement& operator+=(const LieElement& o);
  LieElement& operator-=(const LieElement& o);
  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
  friend LieElement operator*(const Int& s, const LieElement& a);
  friend bool operator==(const LieElement&, const LieElement&) = default;

  std::string to_string() const;

 private:
  void check_same_algebra(const LieElement& o) const;
  std::size_t n_ = 0;
  Coords coords_;
};

/// Image of a Lyndon basis element P(w) in the free associative ring.
/// Cached per word; safe under concurrent first access.
const FreePoly& lyndon_polynomial(const Word& lyndon);

FreePoly to_associative(const LieElement& x);
/// Inverse of to_associative on Lie polynomials; throws std::domain_error
/// when p is not a Lie polynomial.
LieElement from_associative(std::size_t n, const FreePoly& p);

LieElement bracket(const LieElement& x, const LieElement& y);

/// Coordinates of a homogeneous element of degree d as a dense vector over
/// hall_basis(n, d).
std::vector<Int> dense_coords(const LieElement& x, std::size_t degree);
LieElement from_dense(std::size_t n, std::size_t degree, std::span<const Int> v);
/// Position of a Lyndon word in hall_basis(n, |w|).
std::size_t hall_index(std::size_t n, const Word& lyndon);

}  // namespace surfalg
