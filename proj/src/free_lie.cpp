#include "surfalg/free_lie.hpp"

#include <mutex>
#include <sstream>
#include <unordered_map>

namespace surfalg {

constexpr std::size_t kMaxBasisSize = 2'000'000;

namespace {

// Plain lexicographic comparison (a proper prefix is smaller).
bool lex_less(const Word& a, const Word& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return a.size() < b.size();
}

struct BasisTable {
  std::vector<HallWord> words;
  std::unordered_map<Word, std::size_t, WordHash> index;
};

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

const BasisTable& basis_table(std::size_t n, std::size_t degree) {
  static std::map<std::pair<std::size_t, std::size_t>, BasisTable> tables;
  {
    std::lock_guard lock(registry_mutex());
    auto it = tables.find({n, degree});
    if (it != tables.end()) return it->second;
  }
  if (n == 0 || n > kMaxLetters) throw ResourceBound("hall_basis: unsupported generator count");
  if (degree == 0 || degree > kMaxWordLength) throw ResourceBound("hall_basis: unsupported degree");
  if (witt_dimension(n, degree) > kMaxBasisSize) throw ResourceBound("hall_basis: basis too large");

  // Duval's enumeration of Lyndon words of length <= degree.
  BasisTable t;
  std::vector<int> w{-1};
  while (!w.empty()) {
    ++w.back();
    const std::size_t m = w.size();
    if (m == degree) {
      std::vector<Letter> letters(w.begin(), w.end());
      t.words.push_back(HallWord{Word(letters)});
    }
    while (w.size() < degree) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == static_cast<int>(n) - 1) w.pop_back();
  }
  for (std::size_t i = 0; i < t.words.size(); ++i) t.index.emplace(t.words[i].word, i);

  std::lock_guard lock(registry_mutex());
  return tables.try_emplace({n, degree}, std::move(t)).first->second;
}

int mobius(std::size_t k) {
  int mu = 1;
  for (std::size_t p = 2; p * p <= k; ++p) {
    if (k % p) continue;
    k /= p;
    if (k % p == 0) return 0;
    mu = -mu;
  }
  if (k > 1) mu = -mu;
  return mu;
}

}  // namespace

bool is_lyndon(const Word& w) {
  if (w.empty()) return false;
  for (std::size_t i = 1; i < w.size(); ++i)
    if (!lex_less(w, w.sub(i, w.size()))) return false;
  return true;
}

std::pair<Word, Word> standard_factorization(const Word& w) {
  if (w.size() < 2 || !is_lyndon(w))
    throw std::invalid_argument("standard_factorization: need a Lyndon word of length >= 2");
  for (std::size_t i = 1; i < w.size(); ++i) {
    Word v = w.sub(i, w.size());
    if (is_lyndon(v)) return {w.sub(0, i), v};
  }
  throw std::logic_error("standard_factorization: unreachable");
}

std::string HallWord::bracketing() const {
  if (word.size() == 1) return letter_name(word[0]);
  auto [u, v] = standard_factorization(word);
  return "[" + HallWord{u}.bracketing() + "," + HallWord{v}.bracketing() + "]";
}

std::vector<HallWord> hall_basis(std::size_t n, std::size_t degree) {
  return basis_table(n, degree).words;
}

std::size_t hall_index(std::size_t n, const Word& lyndon) {
  const auto& t = basis_table(n, lyndon.size());
  auto it = t.index.find(lyndon);
  if (it == t.index.end()) throw std::invalid_argument("hall_index: not a basis word");
  return it->second;
}

std::size_t witt_dimension(std::size_t n, std::size_t degree) {
  if (n == 0 || degree == 0) throw std::invalid_argument("witt_dimension: n, degree >= 1");
  Int sum = 0;
  for (std::size_t e = 1; e <= degree; ++e) {
    if (degree % e) continue;
    const int mu = mobius(e);
    if (mu == 0) continue;
    Int p;
    mpz_ui_pow_ui(p.get_mpz_t(), n, degree / e);
    sum += mu * p;
  }
  sum /= static_cast<unsigned long>(degree);
  if (!sum.fits_ulong_p()) throw ResourceBound("witt_dimension: overflow");
  return sum.get_ui();
}

const FreePoly& lyndon_polynomial(const Word& lyndon) {
  static std::mutex m;
  static std::unordered_map<Word, FreePoly, WordHash> cache;
  {
    std::lock_guard lock(m);
    auto it = cache.find(lyndon);
    if (it != cache.end()) return it->second;
  }
  FreePoly p;
  if (lyndon.size() == 1) {
    p = FreePoly::word(lyndon);
  } else {
    auto [u, v] = standard_factorization(lyndon);
    p = commutator(lyndon_polynomial(u), lyndon_polynomial(v));
  }
  std::lock_guard lock(m);
  return cache.try_emplace(lyndon, std::move(p)).first->second;
}

LieElement LieElement::generator(std::size_t n, Letter x) {
  if (x >= n) throw std::invalid_argument("LieElement::generator: index out of range");
  return basis_element(n, Word::letter(x));
}

LieElement LieElement::basis_element(std::size_t n, const Word& lyndon, const Int& c) {
  LieElement e(n);
  e.add_term(lyndon, c);
  return e;
}

Int LieElement::coefficient(const Word& lyndon) const {
  auto it = coords_.find(lyndon);
  return it == coords_.end() ? Int(0) : it->second;
}

void LieElement::add_term(const Word& lyndon, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = coords_.try_emplace(lyndon, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coords_.erase(it);
  }
}

LieElement LieElement::component(std::size_t degree) const {
  LieElement r(n_);
  for (const auto& [w, c] : coords_)
    if (w.size() == degree) r.coords_.emplace_hint(r.coords_.end(), w, c);
  return r;
}

std::size_t LieElement::homogeneous_degree() const {
  if (coords_.empty()) return 0;
  const std::size_t d = coords_.begin()->first.size();
  return coords_.rbegin()->first.size() == d ? d : 0;
}

void LieElement::check_same_algebra(const LieElement& o) const {
  if (n_ != o.n_) throw std::invalid_argument("LieElement: algebra handle mismatch");
}

LieElement& LieElement::operator+=(const LieElement& o) {
  check_same_algebra(o);
  for (const auto& [w, c] : o.coords_) add_term(w, c);
  return *this;
}

LieElement& LieElement::operator-=(const LieElement& o) {
  check_same_algebra(o);
  for (const auto& [w, c] : o.coords_) add_term(w, -c);
  return *this;
}

LieElement operator*(const Int& s, const LieElement& a) {
  LieElement r(a.n_);
  if (s == 0) return r;
  r.coords_ = a.coords_;
  for (auto& [w, c] : r.coords_) c *= s;
  return r;
}

std::string LieElement::to_string() const {
  if (coords_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : coords_) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    if (abs(c) != 1) os << abs(c) << "*";
    os << HallWord{w}.bracketing();
  }
  return os.str();
}

FreePoly to_associative(const LieElement& x) {
  FreePoly p;
  for (const auto& [w, c] : x.coords()) p += c * lyndon_polynomial(w);
  return p;
}

LieElement from_associative(std::size_t n, const FreePoly& p) {
  // P(w) = w + (lexicographically larger words of the same length), so the
  // smallest surviving word is always the next Lyndon coordinate.
  LieElement out(n);
  FreePoly rest = p;
  while (!rest.is_zero()) {
    const auto& [w, c] = *rest.terms().begin();
    if (w.empty() || !is_lyndon(w))
      throw std::domain_error("from_associative: not a Lie polynomial (" + w.to_string() + ")");
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w[i] >= n) throw std::domain_error("from_associative: letter out of range");
    const Word lead = w;
    const Int coef = c;
    out.add_term(lead, coef);
    rest -= coef * lyndon_polynomial(lead);
  }
  return out;
}

LieElement bracket(const LieElement& x, const LieElement& y) {
  if (x.generators() != y.generators())
    throw std::invalid_argument("bracket: algebra handle mismatch");
  if (x.is_zero() || y.is_zero()) return LieElement(x.generators());
  return from_associative(x.generators(), commutator(to_associative(x), to_associative(y)));
}

std::vector<Int> dense_coords(const LieElement& x, std::size_t degree) {
  std::vector<Int> v(witt_dimension(x.generators(), degree));
  for (const auto& [w, c] : x.coords()) {
    if (w.size() != degree) throw std::invalid_argument("dense_coords: element not in degree");
    v[hall_index(x.generators(), w)] = c;
  }
  return v;
}

LieElement from_dense(std::size_t n, std::size_t degree, std::span<const Int> v) {
  const auto& t = basis_table(n, degree);
  if (v.size() != t.words.size()) throw std::invalid_argument("from_dense: length mismatch");
  LieElement x(n);
  for (std::size_t i = 0; i < v.size(); ++i) x.add_term(t.words[i].word, v[i]);
  return x;
}

}  // namespace surfalg
