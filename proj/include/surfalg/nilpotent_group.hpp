#pragma once

#include "surfalg/enveloping.hpp"
#include "surfalg/words.hpp"

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

namespace surfalg {

/// Freely reduced word in the free group on 2g letters. Letters are stored
/// signed: +(x+1) for the generator x and -(x+1) for its inverse.
class GroupWord {
 public:
  GroupWord() = default;
  explicit GroupWord(const std::vector<int>& signed_letters);
  static GroupWord generator(Letter x);
  static GroupWord inverse_generator(Letter x);

  const std::vector<int>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }
  GroupWord inverse() const;

  friend GroupWord operator*(const GroupWord& a, const GroupWord& b);
  friend bool operator==(const GroupWord&, const GroupWord&) = default;

  std::string to_string() const;

 private:
  std::vector<int> letters_;
};

/// x y x^-1 y^-1
GroupWord group_commutator(const GroupWord& x, const GroupWord& y);
/// prod_i [a_i, b_i]
GroupWord surface_relator(int genus);
/// Left-normed group commutator following the standard bracketing of a
/// Lyndon word.
GroupWord commutator_word(const Word& lyndon);
/// Uniformly random reduced word of length at most max_length over 2g letters.
GroupWord random_group_word(std::mt19937_64& rng, int genus, std::size_t max_length);

/// Truncated expansion x -> 1 + x of a group element, reduced modulo the
/// ideal generated by expand(surface relator) - 1, which realizes the
/// completed group ring of the surface group. Its lowest-degree part is
/// omega, so the associated graded ring is A_2g / (omega).
struct MagnusSeries {
  std::size_t truncation = 0;
  FreePoly terms;  // constant term 1
  bool is_one() const { return terms == FreePoly::one(); }
  friend bool operator==(const MagnusSeries&, const MagnusSeries&) = default;
};

/// Expansion context for a fixed genus and truncation degree. Contexts are
/// immutable and shared.
class MagnusContext {
 public:
  static std::shared_ptr<const MagnusContext> get(int genus, std::size_t truncation);

  int genus() const { return genus_; }
  std::size_t truncation() const { return truncation_; }
  const RelationRule& rule() const { return *rule_; }

  MagnusSeries expand(const GroupWord& w) const;
  /// Free (unreduced) truncated expansion.
  FreePoly expand_free(const GroupWord& w) const;
  MagnusSeries multiply(const MagnusSeries& a, const MagnusSeries& b) const;

 private:
  MagnusContext(int genus, std::size_t truncation);
  int genus_;
  std::size_t truncation_;
  std::shared_ptr<const RelationRule> rule_;
};

MagnusSeries expand(int genus, const GroupWord& w, std::size_t truncation);

/// u == v in pi_1 / gamma_{k+1}, decided by expand(u v^-1, k) == 1.
bool equal_in_quotient(int genus, const GroupWord& u, const GroupWord& v, std::size_t k);

struct LayerVerdict {
  std::size_t layer = 0;          // j: cosets of gamma_j / gamma_{j+1}
  std::size_t spanning_words = 0;
  std::size_t leading_rank = 0;   // rank of degree-j leading terms
  std::size_t commutator_rank = 0;  // rank of degree-(j+1) terms of [w, generators]
  bool central = false;           // the layer contains a nontrivial central class
};

struct QuotientCenterReport {
  int genus = 0;
  std::size_t k = 0;
  std::vector<LayerVerdict> layers;  // j = 1..k
  /// Exactly the top layer gamma_k / gamma_{k+1} is central.
  bool pass = false;
};

/// Decides, layer by layer, which classes of pi_1 / gamma_{k+1} are central.
QuotientCenterReport center_of_quotient(int genus, std::size_t k);

/// Rank of the degree-j leading terms of the expansions of the commutator
/// words of all Lyndon words of length j.
std::size_t layer_leading_rank(int genus, std::size_t j);

/// [p*gw, n] == (p gw n p^-1 n^-1 p gw^-1 p^-1)((p gw p^-1) n (p gw p^-1)^-1 n^-1)
/// as freely reduced words.
bool verify_identity_viii(const GroupWord& p, const GroupWord& gw, const GroupWord& n);

}  // namespace surfalg
