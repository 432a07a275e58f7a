#include "gmpi/linalg.hpp"

#include <algorithm>
#include <map>

#include "gmpi/error.hpp"

namespace gmpi {

namespace {

auto find_row(std::vector<SparseMatrix::Entry>& col, int r) {
  return std::lower_bound(col.begin(), col.end(), r, [](const auto& e, int row) { return e.first < row; });
}

}  // namespace

Rational SparseMatrix::at(int r, int c) const {
  const auto& col = columns_.at(c);
  auto it = std::lower_bound(col.begin(), col.end(), r, [](const auto& e, int row) { return e.first < row; });
  if (it != col.end() && it->first == r) return it->second;
  return 0;
}

void SparseMatrix::set(int r, int c, const Rational& v) {
  if (r < 0 || r >= rows_) throw InvariantViolation("sparse row index out of range");
  auto& col = columns_.at(c);
  auto it = find_row(col, r);
  const bool present = it != col.end() && it->first == r;
  if (v == 0) {
    if (present) col.erase(it);
  } else if (present) {
    it->second = v;
  } else {
    col.insert(it, {r, v});
  }
}

void SparseMatrix::add(int r, int c, const Rational& v) {
  if (v == 0) return;
  if (r < 0 || r >= rows_) throw InvariantViolation("sparse row index out of range");
  auto& col = columns_.at(c);
  auto it = find_row(col, r);
  if (it != col.end() && it->first == r) {
    it->second += v;
    if (it->second == 0) col.erase(it);
  } else {
    col.insert(it, {r, v});
  }
}

void SparseMatrix::scale_column(int c, const Rational& f) {
  if (f == 0) {
    columns_.at(c).clear();
    return;
  }
  for (auto& e : columns_.at(c)) e.second *= f;
}

void SparseMatrix::scale_row(int r, const Rational& f) {
  for (int c = 0; c < cols(); ++c) {
    auto& col = columns_[c];
    auto it = find_row(col, r);
    if (it == col.end() || it->first != r) continue;
    if (f == 0) {
      col.erase(it);
    } else {
      it->second *= f;
    }
  }
}

bool SparseMatrix::is_zero() const noexcept {
  return std::all_of(columns_.begin(), columns_.end(), [](const auto& c) { return c.empty(); });
}

std::size_t SparseMatrix::nonzeros() const noexcept {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

SparseMatrix SparseMatrix::identity(int n) {
  SparseMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.columns_[i].push_back({i, 1});
  return m;
}

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols() != b.rows()) throw InvariantViolation("sparse product dimension mismatch");
  SparseMatrix out(a.rows(), b.cols());
  std::map<int, Rational> acc;
  for (int c = 0; c < b.cols(); ++c) {
    acc.clear();
    for (const auto& [k, bv] : b.column(c)) {
      for (const auto& [r, av] : a.column(k)) acc[r] += av * bv;
    }
    for (const auto& [r, v] : acc) {
      if (v != 0) out.set(r, c, v);
    }
  }
  return out;
}

DenseMatrix DenseMatrix::from_sparse(const SparseMatrix& m) {
  DenseMatrix d(m.rows(), m.cols());
  for (int c = 0; c < m.cols(); ++c) {
    for (const auto& [r, v] : m.column(c)) d(r, c) = v;
  }
  return d;
}

bool DenseMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return q == 0; });
}

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) throw InvariantViolation("dense product dimension mismatch");
  DenseMatrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (int j = 0; j < b.cols(); ++j) {
        if (b(k, j) != 0) out(i, j) += a(i, k) * b(k, j);
      }
    }
  }
  return out;
}

int rank(DenseMatrix m) {
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int pivot = -1;
    for (int i = r; i < m.rows(); ++i) {
      if (m(i, c) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != r) {
      for (int j = c; j < m.cols(); ++j) std::swap(m(pivot, j), m(r, j));
    }
    for (int i = r + 1; i < m.rows(); ++i) {
      if (m(i, c) == 0) continue;
      const Rational f = m(i, c) / m(r, c);
      for (int j = c; j < m.cols(); ++j) {
        if (m(r, j) != 0) m(i, j) -= f * m(r, j);
      }
    }
    ++r;
  }
  return r;
}

std::optional<std::vector<Rational>> solve(DenseMatrix a, std::vector<Rational> b) {
  if (static_cast<int>(b.size()) != a.rows()) throw InvariantViolation("solve: right-hand side length mismatch");
  const int rows = a.rows(), cols = a.cols();
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i) {
      if (a(i, c) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != r) {
      for (int j = 0; j < cols; ++j) std::swap(a(pivot, j), a(r, j));
      std::swap(b[pivot], b[r]);
    }
    const Rational inv = 1 / a(r, c);
    for (int j = c; j < cols; ++j) a(r, j) *= inv;
    b[r] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      for (int j = c; j < cols; ++j) {
        if (a(r, j) != 0) a(i, j) -= f * a(r, j);
      }
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (int i = r; i < rows; ++i) {
    if (b[i] != 0) return std::nullopt;
  }
  std::vector<Rational> x(static_cast<std::size_t>(cols));
  for (int i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
  return x;
}

namespace modp {

std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(p & kPrime);
  std::uint64_t hi = static_cast<std::uint64_t>(p >> 61);
  std::uint64_t s = lo + hi;
  if (s >= kPrime) s -= kPrime;
  return s;
}

std::uint64_t inverse(std::uint64_t a) {
  // Fermat: a^(p-2).
  std::uint64_t result = 1, base = a, e = kPrime - 2;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

namespace {

std::uint64_t reduce_integer(const mpz_class& z) {
  mpz_class r = z % mpz_class(static_cast<unsigned long>(kPrime));
  if (r < 0) r += static_cast<unsigned long>(kPrime);
  return r.get_ui();
}

}  // namespace

std::optional<std::uint64_t> reduce(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) {
    const long v = q.get_num().get_si();
    if (v >= 0) return static_cast<std::uint64_t>(v) % kPrime;
    return kPrime - (static_cast<std::uint64_t>(-(v + 1)) + 1) % kPrime;
  }
  const std::uint64_t den = reduce_integer(q.get_den());
  if (den == 0) return std::nullopt;
  return mul(reduce_integer(q.get_num()), inverse(den));
}

int rank(std::vector<std::uint64_t>& m, int rows, int cols) {
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i) {
      if (m[static_cast<std::size_t>(i) * cols + c] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    auto row = [&](int i) { return m.begin() + static_cast<std::ptrdiff_t>(i) * cols; };
    if (pivot != r) std::swap_ranges(row(pivot) + c, row(pivot) + cols, row(r) + c);
    const std::uint64_t inv = inverse(row(r)[c]);
    for (int i = r + 1; i < rows; ++i) {
      const std::uint64_t lead = row(i)[c];
      if (lead == 0) continue;
      const std::uint64_t f = mul(lead, inv);
      for (int j = c; j < cols; ++j) {
        const std::uint64_t sub = mul(f, row(r)[j]);
        std::uint64_t& x = row(i)[j];
        x = x >= sub ? x - sub : x + kPrime - sub;
      }
    }
    ++r;
  }
  return r;
}

}  // namespace modp

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace gmpi
