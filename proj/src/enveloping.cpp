#include "surfalg/enveloping.hpp"

#include "surfalg/surface_lie.hpp"

#include <map>

namespace surfalg {

namespace {

void check_genus(int genus) {
  if (genus < 1 || 2 * static_cast<std::size_t>(genus) > kMaxLetters)
    throw std::invalid_argument("genus must be in [1, 8]");
}

Word leading_word_for(int genus) {
  return Word(std::vector<Letter>{letter_b(genus), letter_a(genus)});
}

}  // namespace

FreePoly omega_assoc(int genus) {
  check_genus(genus);
  FreePoly w;
  for (int i = 1; i <= genus; ++i) {
    w.add_term(Word({letter_a(i), letter_b(i)}), 1);
    w.add_term(Word({letter_b(i), letter_a(i)}), -1);
  }
  return w;
}

RelationRule::RelationRule(int genus, FreePoly relation, std::optional<std::size_t> truncation)
    : genus_(genus), lead_(leading_word_for(genus)), relation_(std::move(relation)),
      truncation_(truncation) {
  if (relation_.component(0).terms().size() || relation_.component(1).terms().size())
    throw std::invalid_argument("RelationRule: relation must start in degree 2");
  const FreePoly quadratic = relation_.component(2);
  const Int c = relation_.coefficient(lead_);
  if (!(quadratic == omega_assoc(genus) || quadratic == -omega_assoc(genus)))
    throw std::invalid_argument("RelationRule: degree-2 part must be +-omega");
  // relation = c*lead + rest  =>  lead == -c*rest  (c = +-1)
  FreePoly rest = relation_;
  rest.add_term(lead_, -c);
  replacement_ = -c * rest;
  if (truncation_) replacement_ = replacement_.truncated(*truncation_);
  if (leading_word_self_overlaps())
    throw std::logic_error("RelationRule: leading word overlaps itself; rule not confluent");
}

std::shared_ptr<const RelationRule> RelationRule::homogeneous(int genus) {
  check_genus(genus);
  static std::mutex m;
  static std::map<int, std::shared_ptr<const RelationRule>> rules;
  std::lock_guard lock(m);
  auto& slot = rules[genus];
  if (!slot) slot.reset(new RelationRule(genus, omega_assoc(genus), std::nullopt));
  return slot;
}

std::shared_ptr<const RelationRule> RelationRule::filtered(int genus, const FreePoly& relation,
                                                           std::size_t max_degree) {
  check_genus(genus);
  if (max_degree < 2) throw std::invalid_argument("RelationRule::filtered: max_degree >= 2");
  return std::shared_ptr<const RelationRule>(
      new RelationRule(genus, relation.truncated(max_degree), max_degree));
}

bool RelationRule::leading_word_self_overlaps() const {
  const std::size_t n = lead_.size();
  for (std::size_t k = 1; k < n; ++k)
    if (lead_.sub(n - k, n) == lead_.sub(0, k)) return true;
  return false;
}

bool RelationRule::is_reduced(const Word& w) const {
  for (std::size_t i = 0; i + lead_.size() <= w.size(); ++i)
    if (w.sub(i, i + lead_.size()) == lead_) return false;
  return true;
}

FreePoly RelationRule::reduce_word(const Word& w) const {
  if (truncation_ && w.size() > *truncation_) return {};
  {
    std::lock_guard lock(cache_mutex_);
    auto it = cache_.find(w);
    if (it != cache_.end()) return it->second;
  }
  FreePoly out;
  std::size_t pos = w.size();
  for (std::size_t i = 0; i + lead_.size() <= w.size(); ++i)
    if (w.sub(i, i + lead_.size()) == lead_) {
      pos = i;
      break;
    }
  if (pos == w.size()) {
    out = FreePoly::word(w);
  } else {
    const Word prefix = w.sub(0, pos);
    const Word suffix = w.sub(pos + lead_.size(), w.size());
    const std::size_t outer = prefix.size() + suffix.size();
    for (const auto& [r, c] : replacement_.terms()) {
      if (truncation_ && outer + r.size() > *truncation_) continue;
      if (outer + r.size() > kMaxWordLength) throw ResourceBound("reduce: word too long");
      out += c * reduce_word(prefix.concat(r).concat(suffix));
    }
  }
  std::lock_guard lock(cache_mutex_);
  return cache_.try_emplace(w, std::move(out)).first->second;
}

FreePoly RelationRule::reduce(const FreePoly& p) const {
  FreePoly out;
  for (const auto& [w, c] : p.terms()) {
    if (is_reduced(w)) {
      if (!truncation_ || w.size() <= *truncation_) out.add_term(w, c);
    } else {
      out += c * reduce_word(w);
    }
  }
  return out;
}

NcPoly::NcPoly(int genus) : genus_(genus) { check_genus(genus); }

NcPoly::NcPoly(int genus, const FreePoly& raw)
    : genus_(genus), terms_(RelationRule::homogeneous(genus)->reduce(raw)) {}

void NcPoly::check(const NcPoly& o) const {
  if (genus_ != o.genus_) throw std::invalid_argument("NcPoly: genus mismatch");
}

NcPoly& NcPoly::operator+=(const NcPoly& o) {
  check(o);
  terms_ += o.terms_;
  return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& o) {
  check(o);
  terms_ -= o.terms_;
  return *this;
}

NcPoly operator*(const NcPoly& a, const NcPoly& b) {
  a.check(b);
  return NcPoly(a.genus_, a.terms_ * b.terms_);
}

NcPoly reduce(int genus, const FreePoly& p) { return NcPoly(genus, p); }

std::vector<Word> reduced_words(int genus, std::size_t degree) {
  check_genus(genus);
  if (degree > kMaxWordLength) throw ResourceBound("reduced_words: degree too large");
  const Letter bg = letter_b(genus), ag = letter_a(genus);
  const Letter n = static_cast<Letter>(2 * genus);
  std::vector<Word> out;
  std::vector<Letter> cur;
  // Depth-first in lexicographic order, pruning b_g a_g.
  auto rec = [&](auto&& self) -> void {
    if (cur.size() == degree) {
      out.emplace_back(cur);
      return;
    }
    for (Letter x = 0; x < n; ++x) {
      if (!cur.empty() && cur.back() == bg && x == ag) continue;
      cur.push_back(x);
      self(self);
      cur.pop_back();
    }
  };
  rec(rec);
  return out;
}

Int hilbert_dimension(int genus, std::size_t degree) {
  check_genus(genus);
  // Automaton counting words avoiding b_g a_g: state = "last letter is b_g".
  Int ends_other = 1, ends_bg = 0;
  const long n = 2L * genus;
  for (std::size_t d = 0; d < degree; ++d) {
    Int next_bg = ends_other + ends_bg;
    Int next_other = ends_other * (n - 1) + ends_bg * (n - 2);
    ends_bg = next_bg;
    ends_other = next_other;
  }
  return ends_other + ends_bg;
}

IntMatrix center_in_degree_assoc(int genus, std::size_t degree) {
  if (degree < 1) throw std::invalid_argument("center_in_degree_assoc: degree >= 1");
  if (degree + 1 > 8) throw ResourceBound("center_in_degree_assoc: degree too large");
  const auto rule = RelationRule::homogeneous(genus);
  const auto rows = reduced_words(genus, degree);
  const auto cols = reduced_words(genus, degree + 1);
  std::unordered_map<Word, std::size_t, WordHash> col_index;
  for (std::size_t i = 0; i < cols.size(); ++i) col_index.emplace(cols[i], i);

  const std::size_t gens = 2 * static_cast<std::size_t>(genus);
  SparseIntMatrix m;
  m.cols = gens * cols.size();
  m.rows.reserve(rows.size());
  for (const auto& x : rows) {
    SparseRow row;
    for (std::size_t i = 0; i < gens; ++i) {
      const Word gi = Word::letter(static_cast<Letter>(i));
      FreePoly c = rule->reduce(FreePoly::word(x.concat(gi)) - FreePoly::word(gi.concat(x)));
      for (const auto& [w, v] : c.terms()) row.emplace_back(i * cols.size() + col_index.at(w), v);
    }
    std::sort(row.begin(), row.end(),
              [](const auto& l, const auto& r) { return l.first < r.first; });
    m.rows.push_back(std::move(row));
  }
  if (rank_mod_p(m) == rows.size()) return IntMatrix(0, rows.size());
  if (rows.size() * m.cols > 4'000'000)
    throw ResourceBound("center_in_degree_assoc: exact kernel too large");
  return left_kernel(m.to_dense());
}

std::vector<Int> pbw_series(std::span<const std::size_t> ranks, std::size_t max_degree) {
  std::vector<Int> s(max_degree + 1);
  s[0] = 1;
  for (std::size_t k = 1; k <= ranks.size() && k <= max_degree; ++k)
    for (std::size_t rep = 0; rep < ranks[k - 1]; ++rep)
      for (std::size_t d = k; d <= max_degree; ++d) s[d] += s[d - k];
  return s;
}

PbwReport pbw_consistency(const SurfaceAlgebra& alg, std::size_t max_degree) {
  if (max_degree > alg.max_degree())
    throw std::out_of_range("pbw_consistency: algebra not built to this degree");
  std::vector<std::size_t> ranks;
  for (std::size_t d = 1; d <= max_degree; ++d) ranks.push_back(alg.rank(d));
  PbwReport r;
  r.product_side = pbw_series(ranks, max_degree);
  for (std::size_t d = 0; d <= max_degree; ++d)
    r.series_side.push_back(hilbert_dimension(alg.genus(), d));
  r.pass = r.product_side == r.series_side;
  return r;
}

NcPoly enveloping_image(int genus, const LieElement& x) {
  if (x.generators() != 2 * static_cast<std::size_t>(genus))
    throw std::invalid_argument("enveloping_image: generator count != 2g");
  return NcPoly(genus, to_associative(x));
}

}  // namespace surfalg
