#include "surfalg/words.hpp"

#include <sstream>

namespace surfalg {

std::string letter_name(Letter x) {
  return std::string(x % 2 == 0 ? "a" : "b") + std::to_string(x / 2 + 1);
}

Word::Word(const std::vector<Letter>& letters) {
  if (letters.size() > kMaxWordLength) throw ResourceBound("Word: length exceeds 15");
  for (Letter x : letters) {
    if (x >= kMaxLetters) throw ResourceBound("Word: letter index exceeds 15");
    code_ = (code_ << 4) | x;
  }
  len_ = static_cast<std::uint8_t>(letters.size());
}

Word Word::letter(Letter x) { return Word(std::vector<Letter>{x}); }

Word Word::concat(const Word& other) const {
  if (len_ + other.len_ > kMaxWordLength) throw ResourceBound("Word: length exceeds 15");
  Word w;
  w.code_ = (code_ << (4 * other.len_)) | other.code_;
  w.len_ = static_cast<std::uint8_t>(len_ + other.len_);
  return w;
}

Word Word::sub(std::size_t begin, std::size_t end) const {
  Word w;
  w.len_ = static_cast<std::uint8_t>(end - begin);
  const std::size_t drop = len_ - end;
  w.code_ = w.len_ == 0 ? 0 : (code_ >> (4 * drop)) & ((1ULL << (4 * w.len_)) - 1);
  return w;
}

std::vector<Letter> Word::letters() const {
  std::vector<Letter> out(len_);
  for (std::size_t i = 0; i < len_; ++i) out[i] = (*this)[i];
  return out;
}

std::string Word::to_string() const {
  if (len_ == 0) return "1";
  std::string s;
  for (std::size_t i = 0; i < len_; ++i) {
    if (i) s += '*';
    s += letter_name((*this)[i]);
  }
  return s;
}

FreePoly FreePoly::one() { return word(Word{}); }

FreePoly FreePoly::word(const Word& w, const Int& c) {
  FreePoly p;
  p.add_term(w, c);
  return p;
}

Int FreePoly::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Int(0) : it->second;
}

void FreePoly::add_term(const Word& w, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

FreePoly& FreePoly::operator+=(const FreePoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

FreePoly& FreePoly::operator-=(const FreePoly& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

FreePoly FreePoly::operator-() const {
  FreePoly r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

FreePoly operator*(const FreePoly& a, const FreePoly& b) {
  return FreePoly::truncated_product(a, b, kMaxWordLength);
}

FreePoly operator*(const Int& s, const FreePoly& a) {
  if (s == 0) return {};
  FreePoly r = a;
  for (auto& [w, c] : r.terms_) c *= s;
  return r;
}

FreePoly FreePoly::truncated_product(const FreePoly& a, const FreePoly& b,
                                     std::size_t max_degree) {
  FreePoly r;
  for (const auto& [u, x] : a.terms_) {
    if (u.size() > max_degree) continue;
    for (const auto& [v, y] : b.terms_) {
      if (u.size() + v.size() > max_degree) continue;
      r.add_term(u.concat(v), x * y);
    }
  }
  return r;
}

FreePoly FreePoly::truncated(std::size_t max_degree) const {
  FreePoly r;
  for (const auto& [w, c] : terms_)
    if (w.size() <= max_degree) r.terms_.emplace_hint(r.terms_.end(), w, c);
  return r;
}

FreePoly FreePoly::component(std::size_t degree) const {
  FreePoly r;
  for (const auto& [w, c] : terms_)
    if (w.size() == degree) r.terms_.emplace_hint(r.terms_.end(), w, c);
  return r;
}

std::size_t FreePoly::max_degree() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.size();
}

std::string FreePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    Int m = abs(c);
    if (w.empty()) {
      os << m;
    } else {
      if (m != 1) os << m << "*";
      os << w.to_string();
    }
  }
  return os.str();
}

}  // namespace surfalg
