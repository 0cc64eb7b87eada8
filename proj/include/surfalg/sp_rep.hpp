#pragma once

#include "surfalg/int_linalg.hpp"

#include <array>
#include <random>
#include <string>
#include <vector>

namespace surfalg {

/// H = Z^{2g} with coordinates ordered a_1..a_g, b_1..b_g and the form
/// J = (0 I; -I 0), so omega(a_i, b_i) = 1.
class SymplecticSpace {
 public:
  explicit SymplecticSpace(int genus);

  int genus() const { return genus_; }
  std::size_t dimension() const { return 2 * static_cast<std::size_t>(genus_); }
  const IntMatrix& form() const { return form_; }
  std::string label(std::size_t index) const;
  std::size_t index_a(int i) const { return static_cast<std::size_t>(i - 1); }
  std::size_t index_b(int i) const { return static_cast<std::size_t>(genus_ + i - 1); }
  Int pairing(std::span<const Int> u, std::span<const Int> v) const;
  /// Basis vectors in the order a_1, b_1, ..., a_g, b_g.
  std::vector<std::size_t> interleaved_order() const;

 private:
  int genus_;
  IntMatrix form_;
};

using Triple = std::array<std::size_t, 3>;

/// Index triples i < j < k in lexicographic order.
const std::vector<Triple>& exterior_triples(std::size_t n);
std::size_t triple_index(std::size_t n, Triple t);
std::size_t binomial(std::size_t n, std::size_t k);

/// Coordinates over exterior_triples(n).
struct ExtVector {
  std::size_t n = 0;
  std::vector<Int> coords;
  friend bool operator==(const ExtVector&, const ExtVector&) = default;
};

ExtVector wedge(std::span<const Int> u, std::span<const Int> v, std::span<const Int> w);
std::vector<Int> unit_vector(std::size_t n, std::size_t i);

enum class SpFamily {
  UpperDiagonal,   // (I  e_ii ; 0 I)
  LowerDiagonal,   // (I 0 ; e_ii I)
  LowerSymmetric,  // (I 0 ; e_ij + e_ji  I)
  UpperSymmetric,  // (I  e_ij + e_ji ; 0 I)
  Block,           // (I + e_ij  0 ; 0  I - e_ji)
};

std::string family_name(SpFamily f);

struct SpGenerator {
  SpFamily family;
  std::size_t i = 0;
  std::size_t j = 0;
  IntMatrix matrix;
};

/// lambda = 1 instances of the five families over all valid index pairs:
/// 2g + 2*C(g,2) + g(g-1) = 2g^2 matrices. Each preserves the form.
std::vector<SpGenerator> sp_generators(int genus);
SpGenerator make_sp_generator(int genus, SpFamily family, std::size_t i, std::size_t j);
bool preserves_form(const SymplecticSpace& h, const IntMatrix& m);

/// Action of M on Lambda^3 H acting on column vectors:
/// e_i^e_j^e_k -> M e_i ^ M e_j ^ M e_k.
IntMatrix lambda3_action(const IntMatrix& m);

/// x^y^z -> omega(x,y) z - omega(x,z) y + omega(y,z) x, as a 2g x C(2g,3) matrix.
IntMatrix contraction_matrix(const SymplecticSpace& h);
std::vector<Int> contraction(const ExtVector& v, const SymplecticSpace& h);
/// theta = sum_i a_i ^ b_i
IntMatrix theta_wedge_matrix(const SymplecticSpace& h);
ExtVector theta_wedge(const SymplecticSpace& h, std::span<const Int> v);

/// Rows theta^a_1, theta^b_1, ..., theta^a_g, theta^b_g.
IntMatrix johnson_image(int genus);

struct CommutantReport {
  std::size_t dimension = 0;
  std::size_t modular_upper_bound = 0;
  std::size_t explicit_lower_bound = 0;  // from identity and theta^ o contraction
  bool certified = false;                 // bounds agree or exact fallback used
};

CommutantReport commutant_report(int genus);
std::size_t commutant_dimension(int genus);

struct RoundtripReport {
  bool invariant = false;
  bool summand = false;
  bool rational_span_preserved = false;  // W_Z (x) Q = V (x) Q
  bool integral_points_match = false;    // W_Z = V
  bool holds() const {
    return invariant && summand && rational_span_preserved && integral_points_match;
  }
};

/// True iff the row span of v is invariant under every generator's action.
bool is_sp_invariant(const IntMatrix& v, int genus);
RoundtripReport summand_correspondence_roundtrip(const IntMatrix& v, int genus);

/// Random unimodular n x n matrix from a product of elementary operations.
IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, std::size_t steps);

}  // namespace surfalg
