#ifndef GMPI_LINALG_HPP
#define GMPI_LINALG_HPP

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gmpi {

using Rational = mpq_class;

// Column-major sparse matrix over Q. Each column keeps its nonzero entries
// sorted by row; zeros are never stored.
class SparseMatrix {
 public:
  using Entry = std::pair<int, Rational>;

  SparseMatrix() = default;
  SparseMatrix(int rows, int cols) : rows_(rows), columns_(static_cast<std::size_t>(cols)) {}

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return static_cast<int>(columns_.size()); }

  const std::vector<Entry>& column(int c) const { return columns_.at(c); }
  Rational at(int r, int c) const;
  void set(int r, int c, const Rational& v);
  void add(int r, int c, const Rational& v);

  void scale_column(int c, const Rational& f);
  void scale_row(int r, const Rational& f);

  bool is_zero() const noexcept;
  std::size_t nonzeros() const noexcept;

  static SparseMatrix identity(int n);

  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

 private:
  int rows_ = 0;
  std::vector<std::vector<Entry>> columns_;
};

// a * b, where a is (m x k) and b is (k x n).
SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b);

// Row-major dense matrix over Q.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  Rational& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Rational& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  static DenseMatrix from_sparse(const SparseMatrix& m);
  bool is_zero() const;

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b);

// Exact rank by Gaussian elimination over Q.
int rank(DenseMatrix m);

// Solve a x = b with a fixed pivot rule: reduced row echelon form computed
// left to right, free variables set to zero. nullopt when inconsistent.
std::optional<std::vector<Rational>> solve(DenseMatrix a, std::vector<Rational> b);

// Arithmetic in F_p for the Mersenne prime p = 2^61 - 1. Used only as a
// lower bound on ranks over Q; see RestrictedHomology.
namespace modp {

inline constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

std::uint64_t mul(std::uint64_t a, std::uint64_t b);
std::uint64_t inverse(std::uint64_t a);
// The image of q in F_p, or nullopt if p divides the denominator.
std::optional<std::uint64_t> reduce(const Rational& q);

// Rank of a dense row-major matrix over F_p; destroys `m`.
int rank(std::vector<std::uint64_t>& m, int rows, int cols);

}  // namespace modp

std::string to_string(const Rational& q);

}  // namespace gmpi

#endif  // GMPI_LINALG_HPP
