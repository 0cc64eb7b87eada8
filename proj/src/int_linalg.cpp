#include "surfalg/int_linalg.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace surfalg {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("IntMatrix: ragged rows");
    for (long x : r) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(std::size_t rows, std::size_t cols,
                              std::span<const Int> d) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < d.size() && i < rows && i < cols; ++i) m(i, i) = d[i];
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows,
                               std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      throw std::invalid_argument("IntMatrix::from_rows: row length mismatch");
    std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + i * cols);
  }
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::row_block(std::size_t begin, std::size_t end) const {
  if (begin > end || end > rows_) throw std::out_of_range("IntMatrix::row_block");
  IntMatrix m(end - begin, cols_);
  std::copy(data_.begin() + begin * cols_, data_.begin() + end * cols_,
            m.data_.begin());
  return m;
}

IntMatrix IntMatrix::stacked(const IntMatrix& below) const {
  if (rows_ == 0) return below;
  if (below.rows_ == 0) return *this;
  if (below.cols_ != cols_) throw std::invalid_argument("IntMatrix::stacked");
  IntMatrix m(rows_ + below.rows_, cols_);
  std::copy(data_.begin(), data_.end(), m.data_.begin());
  std::copy(below.data_.begin(), below.data_.end(), m.data_.begin() + data_.size());
  return m;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Int& x) { return x == 0; });
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("IntMatrix: product shape mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Int& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (b(k, j) != 0) c(i, j) += x * b(k, j);
    }
  return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("IntMatrix: sum shape mismatch");
  IntMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("IntMatrix: difference shape mismatch");
  IntMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
  return c;
}

IntMatrix operator*(const Int& s, const IntMatrix& a) {
  IntMatrix c = a;
  for (auto& x : c.data_) x *= s;
  return c;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j);
  }
  os << ']';
  return os.str();
}

std::vector<Int> mul(std::span<const Int> x, const IntMatrix& a) {
  if (x.size() != a.rows()) throw std::invalid_argument("mul: shape mismatch");
  std::vector<Int> y(a.cols());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) y[j] += x[i] * a(i, j);
  }
  return y;
}

std::vector<Int> mul(const IntMatrix& a, std::span<const Int> x) {
  if (x.size() != a.cols()) throw std::invalid_argument("mul: shape mismatch");
  std::vector<Int> y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (x[j] != 0) y[i] += a(i, j) * x[j];
  return y;
}

std::size_t SnfResult::rank() const {
  return static_cast<std::size_t>(
      std::count_if(d.begin(), d.end(), [](const Int& x) { return x != 0; }));
}

long FgAbGroup::elementary_two_rank() const {
  for (const auto& t : torsion)
    if (t != 2) return -1;
  return static_cast<long>(torsion.size());
}

std::string FgAbGroup::to_string() const {
  std::ostringstream os;
  os << "Z^" << free_rank;
  long two = elementary_two_rank();
  if (two > 0) {
    os << " + (Z/2)^" << two;
  } else {
    for (const auto& t : torsion) os << " + Z/" << t;
  }
  return os.str();
}

namespace {

int cmpabs(const Int& x, const Int& y) { return mpz_cmpabs(x.get_mpz_t(), y.get_mpz_t()); }

// Elementary operations on a working matrix, optionally mirrored onto the
// left transform (rows) and right transform (columns).
struct Reducer {
  IntMatrix a;
  IntMatrix* left = nullptr;       // accumulates row operations
  IntMatrix* left_inv = nullptr;   // inverse of left
  IntMatrix* right = nullptr;      // accumulates column operations

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < a.cols(); ++c) swap(a(i, c), a(j, c));
    if (left)
      for (std::size_t c = 0; c < left->cols(); ++c) swap((*left)(i, c), (*left)(j, c));
    if (left_inv)
      for (std::size_t r = 0; r < left_inv->rows(); ++r)
        swap((*left_inv)(r, i), (*left_inv)(r, j));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < a.rows(); ++r) swap(a(r, i), a(r, j));
    if (right)
      for (std::size_t r = 0; r < right->rows(); ++r) swap((*right)(r, i), (*right)(r, j));
  }
  // row_i += q * row_j
  void add_row(std::size_t i, std::size_t j, const Int& q, std::size_t from_col = 0) {
    if (q == 0) return;
    for (std::size_t c = from_col; c < a.cols(); ++c)
      if (a(j, c) != 0) a(i, c) += q * a(j, c);
    if (left)
      for (std::size_t c = 0; c < left->cols(); ++c)
        if ((*left)(j, c) != 0) (*left)(i, c) += q * (*left)(j, c);
    if (left_inv)
      for (std::size_t r = 0; r < left_inv->rows(); ++r)
        if ((*left_inv)(r, i) != 0) (*left_inv)(r, j) -= q * (*left_inv)(r, i);
  }
  // col_i += q * col_j
  void add_col(std::size_t i, std::size_t j, const Int& q) {
    if (q == 0) return;
    for (std::size_t r = 0; r < a.rows(); ++r)
      if (a(r, j) != 0) a(r, i) += q * a(r, j);
    if (right)
      for (std::size_t r = 0; r < right->rows(); ++r)
        if ((*right)(r, j) != 0) (*right)(r, i) += q * (*right)(r, j);
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) = -a(i, c);
    if (left)
      for (std::size_t c = 0; c < left->cols(); ++c) (*left)(i, c) = -(*left)(i, c);
    if (left_inv)
      for (std::size_t r = 0; r < left_inv->rows(); ++r)
        (*left_inv)(r, i) = -(*left_inv)(r, i);
  }
};

Int tdiv(const Int& x, const Int& y) {
  Int q;
  mpz_tdiv_q(q.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return q;
}

Int fdiv(const Int& x, const Int& y) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return q;
}

SnfResult run_snf(const IntMatrix& input, bool track) {
  const std::size_t m = input.rows(), n = input.cols();
  IntMatrix u, v;
  Reducer red{input};
  if (track) {
    u = IntMatrix::identity(m);
    v = IntMatrix::identity(n);
    red.left = &u;
    red.right = &v;
  }
  IntMatrix& a = red.a;
  const std::size_t limit = std::min(m, n);
  std::vector<Int> d;
  d.reserve(limit);

  for (std::size_t t = 0; t < limit; ++t) {
    // Minimal-absolute-value pivot in the trailing block.
    std::size_t pi = m, pj = n;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j) {
        if (a(i, j) == 0) continue;
        if (pi == m || cmpabs(a(i, j), a(pi, pj)) < 0) { pi = i; pj = j; }
      }
    if (pi == m) break;
    red.swap_rows(t, pi);
    red.swap_cols(t, pj);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a(i, t) == 0) continue;
        red.add_row(i, t, -tdiv(a(i, t), a(t, t)), t);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a(t, j) == 0) continue;
        red.add_col(j, t, -tdiv(a(t, j), a(t, t)));
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) {
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < m; ++i)
          if (a(i, t) != 0 && cmpabs(a(i, t), a(bi, bj)) < 0) { bi = i; bj = t; }
        for (std::size_t j = t + 1; j < n; ++j)
          if (a(t, j) != 0 && cmpabs(a(t, j), a(bi, bj)) < 0) { bi = t; bj = j; }
        red.swap_rows(t, bi);
        red.swap_cols(t, bj);
        continue;
      }
      // Enforce the divisibility chain.
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (a(i, j) != 0 && !mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == m) break;
      red.add_row(t, bad, 1);
    }
    if (a(t, t) < 0) red.negate_row(t);
    d.push_back(a(t, t));
  }
  d.resize(limit);  // trailing zeros
  SnfResult res;
  res.d = std::move(d);
  if (track) {
    res.u = std::move(u);
    res.v = std::move(v);
  }
  return res;
}

HnfResult run_hnf(const IntMatrix& input, bool track, bool reduce_above) {
  const std::size_t m = input.rows(), n = input.cols();
  IntMatrix u, uinv;
  Reducer red{input};
  if (track) {
    u = IntMatrix::identity(m);
    uinv = IntMatrix::identity(m);
    red.left = &u;
    red.left_inv = &uinv;
  }
  IntMatrix& a = red.a;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    for (;;) {
      std::size_t best = m;
      for (std::size_t i = r; i < m; ++i)
        if (a(i, c) != 0 && (best == m || cmpabs(a(i, c), a(best, c)) < 0)) best = i;
      if (best == m) break;
      red.swap_rows(r, best);
      bool clean = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (a(i, c) == 0) continue;
        red.add_row(i, r, -tdiv(a(i, c), a(r, c)), c);
        if (a(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (r >= m || a(r, c) == 0) continue;
    if (a(r, c) < 0) red.negate_row(r);
    if (reduce_above)
      for (std::size_t i = 0; i < r; ++i)
        if (a(i, c) != 0) red.add_row(i, r, -fdiv(a(i, c), a(r, c)), c);
    pivots.push_back(c);
    ++r;
  }
  HnfResult res;
  res.h = std::move(red.a);
  res.pivots = std::move(pivots);
  if (track) {
    res.transform = std::move(u);
    res.transform_inverse = std::move(uinv);
  }
  return res;
}

std::uint64_t mod_reduce(const Int& x, std::uint64_t p) {
  Int r;
  mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), p);
  return r.get_ui();
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = (unsigned __int128)r * b % p;
    b = (unsigned __int128)b * b % p;
    e >>= 1;
  }
  return r;
}

using ModRow = std::vector<std::pair<std::size_t, std::uint64_t>>;

// row -= c * pivot, both sorted by column.
ModRow axpy(const ModRow& row, std::uint64_t c, const ModRow& pivot, std::uint64_t p) {
  ModRow out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 0, j = 0;
  const std::uint64_t neg = (p - c) % p;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.push_back(row[i++]);
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      out.emplace_back(pivot[j].first, (unsigned __int128)neg * pivot[j].second % p);
      ++j;
    } else {
      std::uint64_t v = (row[i].second + (unsigned __int128)neg * pivot[j].second % p) % p;
      if (v) out.emplace_back(row[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

SnfResult snf(const IntMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0)
    throw std::invalid_argument("snf: matrix must have at least one row and column");
  return run_snf(a, true);
}

std::vector<Int> snf_invariants(const IntMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return {};
  // Echelon first so the SNF pass works on a matrix with few rows.
  HnfResult e = run_hnf(a, false, false);
  if (e.rank() == 0) return std::vector<Int>(std::min(a.rows(), a.cols()));
  std::vector<Int> d = run_snf(e.basis(), false).d;
  d.resize(std::min(a.rows(), a.cols()));
  return d;
}

HnfResult hnf(const IntMatrix& a) { return run_hnf(a, true, true); }
HnfResult hnf_no_transform(const IntMatrix& a) { return run_hnf(a, false, true); }

std::size_t rank(const IntMatrix& a) {
  if (a.empty()) return 0;
  return run_hnf(a, false, false).rank();
}

Int determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant: not square");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IntMatrix m = a;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t s = k + 1;
      while (s < n && m(s, k) == 0) ++s;
      if (s == n) return 0;
      for (std::size_t c = 0; c < n; ++c) swap(m(k, c), m(s, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

bool is_direct_summand(const IntMatrix& span_gens, std::size_t ambient_rank) {
  if (span_gens.cols() != ambient_rank)
    throw std::invalid_argument("is_direct_summand: generator length != ambient rank");
  if (span_gens.rows() == 0) return true;
  for (const auto& x : snf_invariants(span_gens))
    if (x != 0 && x != 1) return false;
  return true;
}

IntMatrix saturate(const IntMatrix& span_gens, std::size_t ambient_rank) {
  if (span_gens.cols() != ambient_rank)
    throw std::invalid_argument("saturate: generator length != ambient rank");
  if (span_gens.rows() == 0) return IntMatrix(0, ambient_rank);
  // U * A^T = H  =>  A = H^T * (U^{-1})^T; the first r columns of U^{-1}
  // span the rational hull of rowspan(A) inside a unimodular basis.
  HnfResult t = hnf(span_gens.transpose());
  const std::size_t r = t.rank();
  IntMatrix basis(r, ambient_rank);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < ambient_rank; ++j) basis(i, j) = t.transform_inverse(j, i);
  return hnf_no_transform(basis).basis();
}

bool same_row_span(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.cols()) return false;
  IntMatrix ha = a.rows() ? hnf_no_transform(a).basis() : IntMatrix(0, a.cols());
  IntMatrix hb = b.rows() ? hnf_no_transform(b).basis() : IntMatrix(0, b.cols());
  return ha == hb;
}

IntMatrix left_kernel(const IntMatrix& a) {
  if (a.rows() == 0) return IntMatrix(0, 0);
  if (a.cols() == 0) return IntMatrix::identity(a.rows());
  HnfResult h = hnf(a);
  const std::size_t r = h.rank();
  if (r == a.rows()) return IntMatrix(0, a.rows());
  return hnf_no_transform(h.transform.row_block(r, a.rows())).basis();
}

FgAbGroup cokernel(const IntMatrix& a) {
  FgAbGroup g;
  if (a.rows() == 0 || a.cols() == 0) {
    g.free_rank = a.cols();
    return g;
  }
  std::size_t nonzero = 0;
  for (const auto& x : snf_invariants(a)) {
    if (x == 0) continue;
    ++nonzero;
    if (x != 1) g.torsion.push_back(x);
  }
  g.free_rank = a.cols() - nonzero;
  return g;
}

IntMatrix unimodular_inverse(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("unimodular_inverse: not square");
  HnfResult h = hnf(a);
  if (!(h.h == IntMatrix::identity(a.rows())))
    throw std::invalid_argument("unimodular_inverse: matrix is not unimodular");
  return h.transform;
}

SummandTransfer verify_summand_transfer(const IntMatrix& inner, const IntMatrix& outer) {
  if (outer.cols() != inner.rows())
    throw std::invalid_argument("verify_summand_transfer: composite undefined");
  const IntMatrix composite = outer * inner;
  SummandTransfer s;
  s.composite_is_full_rank_summand =
      rank(composite) == inner.cols() &&
      is_direct_summand(composite.transpose(), composite.rows());
  s.inner_is_summand = is_direct_summand(inner.transpose(), inner.rows());
  return s;
}

IntMatrix SparseIntMatrix::to_dense() const {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& [c, v] : rows[i]) m(i, c) = v;
  return m;
}

SparseRow to_sparse(std::span<const Int> dense) {
  SparseRow r;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (dense[i] != 0) r.emplace_back(i, dense[i]);
  return r;
}

std::size_t rank_mod_p(const SparseIntMatrix& a, std::uint64_t p) {
  std::unordered_map<std::size_t, ModRow> pivots;
  for (const auto& src : a.rows) {
    ModRow row;
    row.reserve(src.size());
    for (const auto& [c, v] : src)
      if (auto x = mod_reduce(v, p)) row.emplace_back(c, x);
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) {
        const std::uint64_t inv = pow_mod(row.front().second, p - 2, p);
        for (auto& [c, v] : row) v = (unsigned __int128)v * inv % p;
        pivots.emplace(row.front().first, std::move(row));
        break;
      }
      row = axpy(row, row.front().second, it->second, p);
    }
  }
  return pivots.size();
}

std::size_t rank_mod_p(const IntMatrix& a, std::uint64_t p) {
  SparseIntMatrix s;
  s.cols = a.cols();
  s.rows.reserve(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) s.rows.push_back(to_sparse(a.row(i)));
  return rank_mod_p(s, p);
}

std::size_t rank_mod2(const IntMatrix& a) {
  const std::size_t words = (a.cols() + 63) / 64;
  std::vector<std::vector<std::uint64_t>> rows(a.rows(), std::vector<std::uint64_t>(words));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (mpz_odd_p(a(i, j).get_mpz_t())) rows[i][j / 64] |= 1ULL << (j % 64);
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < rows.size(); ++c) {
    const std::uint64_t bit = 1ULL << (c % 64);
    std::size_t s = r;
    while (s < rows.size() && !(rows[s][c / 64] & bit)) ++s;
    if (s == rows.size()) continue;
    std::swap(rows[r], rows[s]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != r && (rows[i][c / 64] & bit))
        for (std::size_t w = 0; w < words; ++w) rows[i][w] ^= rows[r][w];
    ++r;
  }
  return r;
}

IntMatrix left_kernel_certified(const IntMatrix& a) {
  if (a.rows() > 0 && rank_mod_p(a) == a.rows()) return IntMatrix(0, a.rows());
  return left_kernel(a);
}

std::size_t rank_with_upper_bound(const IntMatrix& a, std::size_t upper) {
  const std::size_t r = rank_mod_p(a);
  if (r == upper) return r;
  return rank(a);
}

}  // namespace surfalg
