#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace surfalg {

using Int = mpz_class;

/// Thrown when a computation would exceed the desk-scale limits this library
/// is sized for (word length, matrix size, degree).
class ResourceBound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense matrix of arbitrary-precision integers, row-major.
/// The shape is fixed at construction.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(std::size_t rows, std::size_t cols,
                            std::span<const Int> d);
  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows,
                             std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  const Int& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::span<const Int> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::vector<Int> row_vector(std::size_t r) const {
    return {data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_};
  }

  IntMatrix transpose() const;
  /// Rows [begin, end) as a fresh matrix.
  IntMatrix row_block(std::size_t begin, std::size_t end) const;
  /// Vertical concatenation; column counts must agree.
  IntMatrix stacked(const IntMatrix& below) const;
  bool is_zero() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const Int& s, const IntMatrix& a);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

/// Row vector times matrix.
std::vector<Int> mul(std::span<const Int> x, const IntMatrix& a);
/// Matrix times column vector.
std::vector<Int> mul(const IntMatrix& a, std::span<const Int> x);

/// u * A * v = diag(d), with d[i] | d[i+1] and d[i] >= 0.
struct SnfResult {
  std::vector<Int> d;  // length min(rows, cols)
  IntMatrix u;
  IntMatrix v;
  std::size_t rank() const;
};

/// Row-style Hermite normal form: transform * A = h, where the first
/// `pivots.size()` rows of h are in echelon form with positive pivots and
/// entries above each pivot reduced into [0, pivot). Remaining rows are zero.
struct HnfResult {
  IntMatrix h;
  IntMatrix transform;
  IntMatrix transform_inverse;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  std::size_t rank() const { return pivots.size(); }
  /// The nonzero rows of h.
  IntMatrix basis() const { return h.row_block(0, pivots.size()); }
};

/// Finitely generated abelian group Z^free_rank + sum Z/t_i.
struct FgAbGroup {
  std::size_t free_rank = 0;
  std::vector<Int> torsion;  // each > 1, divisibility chain
  /// Number of Z/2 factors when the torsion is elementary 2-torsion; -1 otherwise.
  long elementary_two_rank() const;
  std::string to_string() const;
  friend bool operator==(const FgAbGroup&, const FgAbGroup&) = default;
};

SnfResult snf(const IntMatrix& a);
/// Invariant factors only, without tracking the unimodular transforms.
std::vector<Int> snf_invariants(const IntMatrix& a);
HnfResult hnf(const IntMatrix& a);
/// Same as hnf(a).basis() but without tracking transforms.
HnfResult hnf_no_transform(const IntMatrix& a);

std::size_t rank(const IntMatrix& a);
Int determinant(const IntMatrix& a);

/// True iff the row span of span_gens is a direct summand of Z^ambient_rank.
bool is_direct_summand(const IntMatrix& span_gens, std::size_t ambient_rank);
/// Basis (in Hermite form) of the smallest direct summand containing the
/// row span of span_gens.
IntMatrix saturate(const IntMatrix& span_gens, std::size_t ambient_rank);
/// True iff the two row spans are equal as Z-modules.
bool same_row_span(const IntMatrix& a, const IntMatrix& b);
/// Basis of { x : x * a = 0 } in Hermite form; rows of length a.rows().
IntMatrix left_kernel(const IntMatrix& a);
/// Z^cols / rowspan(a).
FgAbGroup cokernel(const IntMatrix& a);
/// Inverse of a unimodular matrix; throws if det != +-1.
IntMatrix unimodular_inverse(const IntMatrix& a);

struct SummandTransfer {
  bool composite_is_full_rank_summand = false;
  bool inner_is_summand = false;
  /// The implication "composite full-rank summand => inner summand".
  bool implication_holds() const {
    return !composite_is_full_rank_summand || inner_is_summand;
  }
};

/// For linear maps acting on column vectors, inner: Z^m -> Z^n and
/// outer: Z^n -> Z^p, checks whether image(outer*inner) is a rank-m direct
/// summand and whether image(inner) is a direct summand.
SummandTransfer verify_summand_transfer(const IntMatrix& inner,
                                        const IntMatrix& outer);

// ---------------------------------------------------------------------------
// Sparse rows and modular rank.

using SparseRow = std::vector<std::pair<std::size_t, Int>>;  // sorted by column

struct SparseIntMatrix {
  std::size_t cols = 0;
  std::vector<SparseRow> rows;
  IntMatrix to_dense() const;
};

inline constexpr std::uint64_t kDefaultPrime = 2147483629ULL;  // < 2^31

/// Rank over Z/p. For p prime this is a lower bound for the rank over Q.
std::size_t rank_mod_p(const SparseIntMatrix& a, std::uint64_t p = kDefaultPrime);
std::size_t rank_mod_p(const IntMatrix& a, std::uint64_t p = kDefaultPrime);
/// Rank over Z/2 of a dense matrix, using packed bit rows.
std::size_t rank_mod2(const IntMatrix& a);

/// Left kernel, certified empty by modular rank when possible before falling
/// back to the exact computation.
IntMatrix left_kernel_certified(const IntMatrix& a);
/// Exact rank of a, given a known upper bound; short-circuits when the
/// modular rank already attains the bound.
std::size_t rank_with_upper_bound(const IntMatrix& a, std::size_t upper);

SparseRow to_sparse(std::span<const Int> dense);

}  // namespace surfalg
