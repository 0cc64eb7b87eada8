#pragma once

#include "surfalg/int_linalg.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace surfalg {

/// Letter indices follow the project-wide order a1 < b1 < a2 < b2 < ... :
/// letter 2(i-1) is a_i and letter 2i-1 is b_i.
using Letter = std::uint8_t;

inline constexpr std::size_t kMaxWordLength = 15;
inline constexpr std::size_t kMaxLetters = 16;

inline constexpr Letter letter_a(int i) { return static_cast<Letter>(2 * (i - 1)); }
inline constexpr Letter letter_b(int i) { return static_cast<Letter>(2 * i - 1); }

std::string letter_name(Letter x);

/// Positive word over at most 16 letters and length at most 15, packed four
/// bits per letter with the first letter most significant. Ordering is
/// degree-lexicographic: shorter words first, then lexicographic.
class Word {
 public:
  Word() = default;
  explicit Word(const std::vector<Letter>& letters);
  static Word letter(Letter x);

  std::size_t size() const { return len_; }
  bool empty() const { return len_ == 0; }
  Letter operator[](std::size_t i) const {
    return static_cast<Letter>((code_ >> (4 * (len_ - 1 - i))) & 0xF);
  }
  Word concat(const Word& other) const;
  /// Letters [begin, end).
  Word sub(std::size_t begin, std::size_t end) const;
  std::vector<Letter> letters() const;
  std::uint64_t code() const { return code_; }

  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.len_ <=> b.len_; c != 0) return c;
    return a.code_ <=> b.code_;
  }

 private:
  std::uint64_t code_ = 0;
  std::uint8_t len_ = 0;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    return std::hash<std::uint64_t>{}(w.code() * 31 + w.size());
  }
};

/// Element of the free associative ring Z<x_1..x_n>, no zero coefficients.
class FreePoly {
 public:
  using Terms = std::map<Word, Int>;

  FreePoly() = default;
  static FreePoly one();
  static FreePoly word(const Word& w, const Int& c = 1);
  static FreePoly letter(Letter x) { return word(Word::letter(x)); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Int coefficient(const Word& w) const;
  void add_term(const Word& w, const Int& c);

  FreePoly& operator+=(const FreePoly& o);
  FreePoly& operator-=(const FreePoly& o);
  FreePoly operator-() const;
  friend FreePoly operator+(FreePoly a, const FreePoly& b) { return a += b; }
  friend FreePoly operator-(FreePoly a, const FreePoly& b) { return a -= b; }
  friend FreePoly operator*(const FreePoly& a, const FreePoly& b);
  friend FreePoly operator*(const Int& s, const FreePoly& a);
  friend bool operator==(const FreePoly&, const FreePoly&) = default;

  /// Product dropping every word longer than max_degree.
  static FreePoly truncated_product(const FreePoly& a, const FreePoly& b,
                                    std::size_t max_degree);
  FreePoly truncated(std::size_t max_degree) const;
  /// Homogeneous component of the given degree.
  FreePoly component(std::size_t degree) const;
  std::size_t max_degree() const;

  std::string to_string() const;

 private:
  Terms terms_;
};

inline FreePoly commutator(const FreePoly& a, const FreePoly& b) { return a * b - b * a; }

}  // namespace surfalg
