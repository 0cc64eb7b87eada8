#pragma once

#include "surfalg/free_lie.hpp"
#include "surfalg/int_linalg.hpp"
#include "surfalg/words.hpp"

#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

namespace surfalg {

class SurfaceAlgebra;

/// Single rewrite rule  b_g a_g -> replacement  on Z<a1,b1,...,ag,bg>.
///
/// The homogeneous rule realizes the quotient by omega = sum_i (a_i b_i - b_i a_i).
/// A filtered rule realizes the quotient by an element whose lowest-degree
/// part is omega (possibly with higher-degree terms), inside the algebra
/// truncated above a fixed degree. In both cases the leading word has no
/// self-overlap, so the rule is confluent and normal forms decide congruence.
class RelationRule {
 public:
  static std::shared_ptr<const RelationRule> homogeneous(int genus);
  /// `relation` must have zero constant and linear part, degree-2 part equal
  /// to +-omega; words longer than max_degree are discarded.
  static std::shared_ptr<const RelationRule> filtered(int genus, const FreePoly& relation,
                                                      std::size_t max_degree);

  int genus() const { return genus_; }
  const Word& leading_word() const { return lead_; }
  /// leading_word is congruent to this polynomial.
  const FreePoly& replacement() const { return replacement_; }
  const FreePoly& relation() const { return relation_; }
  std::optional<std::size_t> truncation() const { return truncation_; }

  /// Whether a proper suffix of the leading word equals a proper prefix.
  bool leading_word_self_overlaps() const;

  FreePoly reduce(const FreePoly& p) const;
  FreePoly reduce_word(const Word& w) const;
  bool is_reduced(const Word& w) const;

 private:
  RelationRule(int genus, FreePoly relation, std::optional<std::size_t> truncation);

  int genus_;
  Word lead_;
  FreePoly relation_;
  FreePoly replacement_;
  std::optional<std::size_t> truncation_;
  mutable std::mutex cache_mutex_;
  mutable std::unordered_map<Word, FreePoly, WordHash> cache_;
};

/// omega_assoc = sum_i (a_i b_i - b_i a_i).
FreePoly omega_assoc(int genus);

/// Element of A_2g / (omega), stored in reduced form.
class NcPoly {
 public:
  explicit NcPoly(int genus);
  NcPoly(int genus, const FreePoly& raw);

  int genus() const { return genus_; }
  const FreePoly& terms() const { return terms_; }
  bool is_zero() const { return terms_.is_zero(); }

  NcPoly& operator+=(const NcPoly& o);
  NcPoly& operator-=(const NcPoly& o);
  friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
  friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
  friend NcPoly operator*(const NcPoly& a, const NcPoly& b);
  friend bool operator==(const NcPoly&, const NcPoly&) = default;

  std::string to_string() const { return terms_.to_string(); }

 private:
  void check(const NcPoly& o) const;
  int genus_;
  FreePoly terms_;
};

/// Normal form modulo (omega).
NcPoly reduce(int genus, const FreePoly& p);

/// Reduced words of length d (words avoiding the factor b_g a_g), in order.
std::vector<Word> reduced_words(int genus, std::size_t degree);
/// Number of reduced words of length d.
Int hilbert_dimension(int genus, std::size_t degree);

/// Basis (rows over reduced_words(genus, d)) of the degree-d elements that
/// commute with every generator modulo (omega).
IntMatrix center_in_degree_assoc(int genus, std::size_t degree);

struct PbwReport {
  bool pass = false;
  std::vector<Int> product_side;  // from Lie ranks
  std::vector<Int> series_side;   // from reduced-word counts
};

/// Compares prod_k (1 - t^k)^{-rank(Lambda_k)} with sum_d hilbert_dimension(g, d) t^d
/// up to t^max_degree.
PbwReport pbw_consistency(const SurfaceAlgebra& alg, std::size_t max_degree);

/// Coefficients of prod_{k} (1 - t^k)^{-ranks[k-1]} up to t^max_degree.
std::vector<Int> pbw_series(std::span<const std::size_t> ranks, std::size_t max_degree);

/// Image of a Lie element in A_2g / (omega).
NcPoly enveloping_image(int genus, const LieElement& x);

}  // namespace surfalg
