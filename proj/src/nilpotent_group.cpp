#include "surfalg/nilpotent_group.hpp"

#include "surfalg/free_lie.hpp"

#include <map>
#include <mutex>
#include <unordered_map>

namespace surfalg {

GroupWord::GroupWord(const std::vector<int>& signed_letters) {
  for (int x : signed_letters) {
    if (x == 0 || std::abs(x) > static_cast<int>(kMaxLetters))
      throw std::invalid_argument("GroupWord: letter out of range");
    if (!letters_.empty() && letters_.back() == -x) {
      letters_.pop_back();
    } else {
      letters_.push_back(x);
    }
  }
}

GroupWord GroupWord::generator(Letter x) { return GroupWord({static_cast<int>(x) + 1}); }
GroupWord GroupWord::inverse_generator(Letter x) { return GroupWord({-(static_cast<int>(x) + 1)}); }

GroupWord GroupWord::inverse() const {
  GroupWord w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(-*it);
  return w;
}

GroupWord operator*(const GroupWord& a, const GroupWord& b) {
  GroupWord w = a;
  for (int x : b.letters_) {
    if (!w.letters_.empty() && w.letters_.back() == -x) {
      w.letters_.pop_back();
    } else {
      w.letters_.push_back(x);
    }
  }
  return w;
}

std::string GroupWord::to_string() const {
  if (letters_.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) s += ' ';
    const int x = letters_[i];
    s += letter_name(static_cast<Letter>(std::abs(x) - 1));
    if (x < 0) s += "^-1";
  }
  return s;
}

GroupWord group_commutator(const GroupWord& x, const GroupWord& y) {
  return x * y * x.inverse() * y.inverse();
}

GroupWord surface_relator(int genus) {
  if (genus < 1) throw std::invalid_argument("surface_relator: genus >= 1");
  GroupWord r;
  for (int i = 1; i <= genus; ++i)
    r = r * group_commutator(GroupWord::generator(letter_a(i)), GroupWord::generator(letter_b(i)));
  return r;
}

GroupWord commutator_word(const Word& lyndon) {
  if (lyndon.size() == 1) return GroupWord::generator(lyndon[0]);
  auto [u, v] = standard_factorization(lyndon);
  return group_commutator(commutator_word(u), commutator_word(v));
}

GroupWord random_group_word(std::mt19937_64& rng, int genus, std::size_t max_length) {
  const int n = 2 * genus;
  const std::size_t len = rng() % (max_length + 1);
  std::vector<int> letters;
  while (letters.size() < len) {
    int x = static_cast<int>(rng() % (2 * n));
    x = x < n ? x + 1 : -(x - n + 1);
    if (!letters.empty() && letters.back() == -x) continue;
    letters.push_back(x);
  }
  return GroupWord(letters);
}

namespace {

FreePoly letter_series(int signed_letter, std::size_t truncation) {
  const Word x = Word::letter(static_cast<Letter>(std::abs(signed_letter) - 1));
  FreePoly s = FreePoly::one();
  if (signed_letter > 0) {
    if (truncation >= 1) s.add_term(x, 1);
    return s;
  }
  // (1 + x)^-1 = sum_k (-x)^k
  Word power;
  for (std::size_t k = 1; k <= truncation; ++k) {
    power = power.concat(x);
    s.add_term(power, k % 2 ? -1 : 1);
  }
  return s;
}

}  // namespace

MagnusContext::MagnusContext(int genus, std::size_t truncation)
    : genus_(genus), truncation_(truncation) {
  if (truncation >= 2) {
    FreePoly rel = expand_free(surface_relator(genus));
    rel -= FreePoly::one();
    rule_ = RelationRule::filtered(genus, rel, truncation);
  }
}

std::shared_ptr<const MagnusContext> MagnusContext::get(int genus, std::size_t truncation) {
  if (genus < 1 || 2 * static_cast<std::size_t>(genus) > kMaxLetters)
    throw std::invalid_argument("MagnusContext: genus out of range");
  if (truncation < 1) throw std::invalid_argument("MagnusContext: truncation >= 1");
  if (truncation > 8) throw ResourceBound("MagnusContext: truncation too large");
  static std::mutex m;
  static std::map<std::pair<int, std::size_t>, std::shared_ptr<const MagnusContext>> contexts;
  std::lock_guard lock(m);
  auto& slot = contexts[{genus, truncation}];
  if (!slot) slot.reset(new MagnusContext(genus, truncation));
  return slot;
}

FreePoly MagnusContext::expand_free(const GroupWord& w) const {
  FreePoly s = FreePoly::one();
  for (int x : w.letters())
    s = FreePoly::truncated_product(s, letter_series(x, truncation_), truncation_);
  return s;
}

MagnusSeries MagnusContext::multiply(const MagnusSeries& a, const MagnusSeries& b) const {
  FreePoly p = FreePoly::truncated_product(a.terms, b.terms, truncation_);
  if (rule_) p = rule_->reduce(p);
  return {truncation_, std::move(p)};
}

MagnusSeries MagnusContext::expand(const GroupWord& w) const {
  MagnusSeries s{truncation_, FreePoly::one()};
  for (int x : w.letters()) {
    const Letter l = static_cast<Letter>(std::abs(x) - 1);
    if (l >= 2 * static_cast<std::size_t>(genus_))
      throw std::invalid_argument("expand: letter outside the surface group generators");
    s = multiply(s, MagnusSeries{truncation_, letter_series(x, truncation_)});
  }
  return s;
}

MagnusSeries expand(int genus, const GroupWord& w, std::size_t truncation) {
  return MagnusContext::get(genus, truncation)->expand(w);
}

bool equal_in_quotient(int genus, const GroupWord& u, const GroupWord& v, std::size_t k) {
  if (k < 1) throw std::invalid_argument("equal_in_quotient: k >= 1");
  return expand(genus, u * v.inverse(), k).is_one();
}

namespace {

struct SeriesPair {
  MagnusSeries forward;
  MagnusSeries inverse;
};

// Expansions of the commutator word of a Lyndon word and of its inverse,
// assembled through multiplicativity along the standard bracketing.
class CommutatorSeries {
 public:
  explicit CommutatorSeries(const MagnusContext& ctx) : ctx_(ctx) {}

  const SeriesPair& get(const Word& lyndon) {
    auto it = memo_.find(lyndon);
    if (it != memo_.end()) return it->second;
    SeriesPair p;
    if (lyndon.size() == 1) {
      const Letter x = lyndon[0];
      p.forward = ctx_.expand(GroupWord::generator(x));
      p.inverse = ctx_.expand(GroupWord::inverse_generator(x));
    } else {
      auto [u, v] = standard_factorization(lyndon);
      const SeriesPair su = get(u);
      const SeriesPair sv = get(v);
      // [u,v] = u v u^-1 v^-1 and [u,v]^-1 = v u v^-1 u^-1
      p.forward = ctx_.multiply(ctx_.multiply(su.forward, sv.forward),
                                ctx_.multiply(su.inverse, sv.inverse));
      p.inverse = ctx_.multiply(ctx_.multiply(sv.forward, su.forward),
                                ctx_.multiply(sv.inverse, su.inverse));
    }
    return memo_.emplace(lyndon, std::move(p)).first->second;
  }

  MagnusSeries commutator_with_generator(const Word& lyndon, Letter x) {
    const SeriesPair& w = get(lyndon);
    const SeriesPair& g = get(Word::letter(x));
    return ctx_.multiply(ctx_.multiply(w.forward, g.forward), ctx_.multiply(w.inverse, g.inverse));
  }

 private:
  const MagnusContext& ctx_;
  std::unordered_map<Word, SeriesPair, WordHash> memo_;
};

std::vector<Int> component_coords(const FreePoly& p, std::size_t degree,
                                  const std::unordered_map<Word, std::size_t, WordHash>& index) {
  std::vector<Int> v(index.size());
  for (const auto& [w, c] : p.terms())
    if (w.size() == degree) v[index.at(w)] = c;
  return v;
}

std::unordered_map<Word, std::size_t, WordHash> word_index(int genus, std::size_t degree) {
  std::unordered_map<Word, std::size_t, WordHash> index;
  const auto words = reduced_words(genus, degree);
  for (std::size_t i = 0; i < words.size(); ++i) index.emplace(words[i], i);
  return index;
}

}  // namespace

std::size_t layer_leading_rank(int genus, std::size_t j) {
  const auto ctx = MagnusContext::get(genus, j);
  CommutatorSeries series(*ctx);
  const auto index = word_index(genus, j);
  const auto basis = hall_basis(2 * static_cast<std::size_t>(genus), j);
  std::vector<std::vector<Int>> rows;
  for (const auto& h : basis) rows.push_back(component_coords(series.get(h.word).forward.terms, j, index));
  return rank(IntMatrix::from_rows(rows, index.size()));
}

QuotientCenterReport center_of_quotient(int genus, std::size_t k) {
  if (k < 2) throw std::invalid_argument("center_of_quotient: k >= 2");
  const std::size_t n = 2 * static_cast<std::size_t>(genus);
  for (std::size_t j = 1; j <= k; ++j)
    if (witt_dimension(n, j) > 5000) throw ResourceBound("center_of_quotient: layer too large");

  QuotientCenterReport report;
  report.genus = genus;
  report.k = k;
  for (std::size_t j = 1; j <= k; ++j) {
    LayerVerdict v;
    v.layer = j;
    const auto basis = hall_basis(n, j);
    v.spanning_words = basis.size();
    const auto lead_index = word_index(genus, j);

    if (j == k) {
      // Every top-layer class commutes with the generators modulo gamma_{k+1}.
      const auto top = MagnusContext::get(genus, k);
      CommutatorSeries series(*top);
      std::vector<std::vector<Int>> lead_rows;
      bool all = true;
      for (const auto& h : basis) {
        lead_rows.push_back(component_coords(series.get(h.word).forward.terms, j, lead_index));
        for (std::size_t x = 0; x < n && all; ++x)
          all = series.commutator_with_generator(h.word, static_cast<Letter>(x)).is_one();
      }
      v.leading_rank = rank(IntMatrix::from_rows(lead_rows, lead_index.size()));
      v.central = all;
      report.layers.push_back(v);
      continue;
    }

    // Leading terms and first-order commutators live in degrees j and j+1.
    const auto ctx = MagnusContext::get(genus, j + 1);
    CommutatorSeries series(*ctx);
    const auto next_index = word_index(genus, j + 1);
    std::vector<std::vector<Int>> lead_rows, comm_rows;
    for (const auto& h : basis) {
      lead_rows.push_back(component_coords(series.get(h.word).forward.terms, j, lead_index));
      std::vector<Int> row;
      row.reserve(n * next_index.size());
      for (std::size_t x = 0; x < n; ++x) {
        const MagnusSeries c = series.commutator_with_generator(h.word, static_cast<Letter>(x));
        for (std::size_t d = 1; d <= j; ++d)
          if (!c.terms.component(d).is_zero())
            throw std::logic_error("center_of_quotient: commutator expansion has low-degree terms");
        auto part = component_coords(c.terms, j + 1, next_index);
        row.insert(row.end(), part.begin(), part.end());
      }
      comm_rows.push_back(std::move(row));
    }
    v.leading_rank = rank(IntMatrix::from_rows(lead_rows, lead_index.size()));
    v.commutator_rank =
        rank_with_upper_bound(IntMatrix::from_rows(comm_rows, n * next_index.size()), v.leading_rank);
    // A class of gamma_j / gamma_{j+1} is central iff its first-order
    // commutators all vanish, i.e. the commutator map loses rank.
    v.central = v.commutator_rank < v.leading_rank;
    report.layers.push_back(v);
  }
  report.pass = true;
  for (const auto& v : report.layers)
    if (v.central != (v.layer == k)) report.pass = false;
  return report;
}

bool verify_identity_viii(const GroupWord& p, const GroupWord& gw, const GroupWord& n) {
  const GroupWord pg = p * gw;
  const GroupWord lhs = group_commutator(pg, n);
  const GroupWord first = p * gw * n * p.inverse() * n.inverse() * p * gw.inverse() * p.inverse();
  const GroupWord conj = p * gw * p.inverse();
  const GroupWord second = conj * n * conj.inverse() * n.inverse();
  return lhs == first * second;
}

}  // namespace surfalg
