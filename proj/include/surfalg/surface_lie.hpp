#pragma once

#include "surfalg/free_lie.hpp"
#include "surfalg/int_linalg.hpp"

#include <memory>
#include <vector>

namespace surfalg {

/// The graded Lie ring Lambda = L_2g / (omega), omega = sum_i [a_i, b_i],
/// truncated at max_degree. Immutable once built; copies share data.
class SurfaceAlgebra {
 public:
  struct Degree {
    std::size_t free_dimension = 0;
    IntMatrix ideal;                 // Hermite basis of the ideal, rows over hall_basis
    std::vector<Int> ideal_invariants;  // SNF factors of the ideal span
    bool quotient_is_free = false;   // all nonzero ideal invariants are 1
    bool pivot_complement = false;   // quotient basis = non-pivot Lyndon words
    std::vector<Word> quotient_words;  // set when pivot_complement
    IntMatrix projection;            // free_dimension x rank
    IntMatrix lift;                  // rank x free_dimension
    std::size_t rank() const { return lift.rows(); }
  };

  /// Throws ResourceBound when the free component is too large.
  static SurfaceAlgebra build(int genus, std::size_t max_degree);

  int genus() const { return data_->genus; }
  std::size_t generators() const { return 2 * static_cast<std::size_t>(data_->genus); }
  std::size_t max_degree() const { return data_->degrees.size(); }
  /// Throws std::out_of_range unless 1 <= d <= max_degree.
  std::size_t rank(std::size_t d) const { return degree(d).rank(); }
  const Degree& degree(std::size_t d) const;

  LieElement omega() const;
  /// Coordinates in the chosen basis of Lambda_d of a degree-d free Lie element.
  std::vector<Int> project(const LieElement& x, std::size_t d) const;
  /// Free Lie representative of a Lambda_d coordinate vector.
  LieElement lift(std::span<const Int> coords, std::size_t d) const;
  /// True iff the degree-d free Lie element lies in the ideal.
  bool in_ideal(const LieElement& x, std::size_t d) const;

 private:
  struct Data {
    int genus = 0;
    std::vector<Degree> degrees;
  };
  std::shared_ptr<const Data> data_;
};

/// Element of Lambda as per-degree coordinate vectors (index d-1 holds degree d).
struct GradedElement {
  std::vector<std::vector<Int>> components;
  bool is_zero() const;
  friend bool operator==(const GradedElement&, const GradedElement&) = default;
};

GradedElement graded_basis_element(const SurfaceAlgebra& alg, std::size_t d, std::size_t i);
/// Bracket in Lambda; components beyond max_degree are dropped.
GradedElement bracket(const SurfaceAlgebra& alg, const GradedElement& x, const GradedElement& y);

/// Basis (rows over the Lambda_d basis) of {x in Lambda_d : [x, Lambda_1] = 0}.
/// Requires d + 1 <= max_degree.
IntMatrix center_in_degree(const SurfaceAlgebra& alg, std::size_t d);

struct CenterReport {
  struct Entry {
    std::size_t degree;
    std::size_t rank;
    std::size_t center_rank;
  };
  std::vector<Entry> entries;
  bool pass = false;
};

/// center_in_degree over 1 <= d <= max_degree - 1; passes iff all are empty.
CenterReport verify_center_theorem(const SurfaceAlgebra& alg);

}  // namespace surfalg
