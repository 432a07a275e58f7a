#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "gmpi/complex.hpp"
#include "gmpi/error.hpp"

namespace gmpi {

FreeComplex taylor_complex(const MonomialIdeal& ideal, std::size_t max_generators) {
  if (ideal.is_zero()) throw InputError("the zero ideal has no Taylor resolution here");
  if (ideal.is_unit()) throw InputError("resolution of the unit ideal requested");
  return taylor_complex(ideal.context(), ideal.gens(), max_generators);
}

FreeComplex taylor_complex(const VariableContext& ctx, std::span<const ExponentVector> gens,
                           std::size_t max_generators) {
  if (gens.empty()) throw InputError("the zero ideal has no Taylor resolution here");
  const std::size_t r = gens.size();
  if (r > max_generators) {
    throw SizeLimitExceeded("Taylor complex on " + std::to_string(r) + " generators exceeds the cap of " +
                            std::to_string(max_generators));
  }
  const std::size_t subsets = std::size_t{1} << r;
  const auto n = static_cast<std::size_t>(ctx.num_vars());
  for (const auto& g : gens) {
    if (g.size() != n) throw ContextMismatch("generator length does not match the context");
    if (g.is_zero()) throw InputError("resolution of the unit ideal requested");
  }

  std::vector<std::vector<ExponentVector>> shifts(r + 1);
  std::vector<std::vector<std::uint32_t>> masks(r + 1);
  std::vector<int> index_of(subsets);
  std::vector<ExponentVector> lcms(subsets);
  lcms[0] = ExponentVector(n);
  for (std::size_t m = 1; m < subsets; ++m) {
    const int low = std::countr_zero(m);
    lcms[m] = lcm(lcms[m & (m - 1)], gens[low]);
  }
  for (std::uint32_t m = 0; m < subsets; ++m) {
    const auto k = static_cast<std::size_t>(std::popcount(m));
    index_of[m] = static_cast<int>(masks[k].size());
    masks[k].push_back(m);
    shifts[k].push_back(lcms[m]);
  }

  std::vector<SparseMatrix> diffs;
  for (std::size_t k = 1; k <= r; ++k) {
    SparseMatrix d(static_cast<int>(masks[k - 1].size()), static_cast<int>(masks[k].size()));
    for (std::size_t c = 0; c < masks[k].size(); ++c) {
      const std::uint32_t m = masks[k][c];
      int sign = 1;
      for (std::size_t t = 0; t < r; ++t) {
        if (!(m & (1u << t))) continue;
        d.set(index_of[m & ~(1u << t)], static_cast<int>(c), sign);
        sign = -sign;
      }
    }
    diffs.push_back(std::move(d));
  }
  return FreeComplex(ctx, std::move(shifts), std::move(diffs));
}

namespace {

// Mutable sparse differential with row and column access.
struct Workspace {
  std::vector<std::map<int, Rational>> cols;
  std::vector<std::set<int>> rows;

  Workspace(const SparseMatrix& m) : cols(static_cast<std::size_t>(m.cols())), rows(static_cast<std::size_t>(m.rows())) {
    for (int c = 0; c < m.cols(); ++c) {
      for (const auto& [r, v] : m.column(c)) {
        cols[c].emplace(r, v);
        rows[r].insert(c);
      }
    }
  }

  void drop_column(int c) {
    for (const auto& [r, v] : cols[c]) rows[r].erase(c);
    cols[c].clear();
  }

  void drop_row(int r) {
    for (int c : rows[r]) cols[c].erase(r);
    rows[r].clear();
  }

  void subtract(int r, int c, const Rational& v) {
    auto [it, inserted] = cols[c].try_emplace(r, 0);
    it->second -= v;
    if (it->second == 0) {
      cols[c].erase(it);
      rows[r].erase(c);
    } else if (inserted) {
      rows[r].insert(c);
    }
  }
};

}  // namespace

FreeComplex minimalize_complex(FreeComplex complex) {
  const int p = complex.length();
  if (p < 1) return complex;
  std::vector<Workspace> work;
  work.reserve(static_cast<std::size_t>(p));
  for (int i = 1; i <= p; ++i) work.emplace_back(complex.scalars(i));
  std::vector<std::vector<char>> alive(static_cast<std::size_t>(p) + 1);
  for (int i = 0; i <= p; ++i) alive[i].assign(static_cast<std::size_t>(complex.rank(i)), 1);

  auto cancel = [&](int i, int r, int c) {
    Workspace& w = work[i - 1];
    const Rational u = w.cols[c].at(r);
    std::vector<std::pair<int, Rational>> alpha, beta;
    for (const auto& [rr, v] : w.cols[c]) {
      if (rr != r) alpha.emplace_back(rr, v);
    }
    for (int cc : w.rows[r]) {
      if (cc != c) beta.emplace_back(cc, w.cols[cc].at(r));
    }
    w.drop_column(c);
    w.drop_row(r);
    for (const auto& [cc, b] : beta) {
      const Rational scaled = b / u;
      for (const auto& [rr, a] : alpha) w.subtract(rr, cc, a * scaled);
    }
    if (i < p) work[i].drop_row(c);
    if (i > 1) work[i - 2].drop_column(r);
    alive[i][c] = 0;
    alive[i - 1][r] = 0;
  };

  for (int i = 1; i <= p; ++i) {
    const auto& src = complex.shifts(i);
    const auto& dst = complex.shifts(i - 1);
    bool changed = true;
    while (changed) {
      changed = false;
      for (int r = 0; r < complex.rank(i - 1); ++r) {
        if (!alive[i - 1][r]) continue;
        for (int c : work[i - 1].rows[r]) {
          if (src[c] == dst[r]) {
            cancel(i, r, c);
            changed = true;
            break;
          }
        }
      }
    }
  }

  // Compact the surviving basis elements, keeping their relative order.
  std::vector<std::vector<int>> new_index(static_cast<std::size_t>(p) + 1);
  std::vector<std::vector<ExponentVector>> shifts(static_cast<std::size_t>(p) + 1);
  for (int i = 0; i <= p; ++i) {
    new_index[i].assign(alive[i].size(), -1);
    for (std::size_t j = 0; j < alive[i].size(); ++j) {
      if (!alive[i][j]) continue;
      new_index[i][j] = static_cast<int>(shifts[i].size());
      shifts[i].push_back(complex.shifts(i)[j]);
    }
  }
  int top = p;
  while (top > 0 && shifts[top].empty()) --top;
  shifts.resize(static_cast<std::size_t>(top) + 1);
  std::vector<SparseMatrix> diffs;
  for (int i = 1; i <= top; ++i) {
    SparseMatrix d(static_cast<int>(shifts[i - 1].size()), static_cast<int>(shifts[i].size()));
    for (std::size_t c = 0; c < alive[i].size(); ++c) {
      if (!alive[i][c]) continue;
      for (const auto& [r, v] : work[i - 1].cols[c]) d.set(new_index[i - 1][r], new_index[i][c], v);
    }
    diffs.push_back(std::move(d));
  }
  return normalize_generator_scalars(FreeComplex(complex.context(), std::move(shifts), std::move(diffs)));
}

FreeComplex normalize_generator_scalars(FreeComplex complex) {
  if (complex.length() < 1 || complex.rank(0) != 1 || !complex.shifts(0).front().is_zero()) return complex;
  SparseMatrix& d1 = complex.mutable_scalars(1);
  for (int j = 0; j < d1.cols(); ++j) {
    const Rational c = d1.at(0, j);
    if (c == 0 || c == 1) continue;
    d1.scale_column(j, 1 / c);
    if (complex.length() >= 2) complex.mutable_scalars(2).scale_row(j, c);
  }
  return complex;
}

FreeComplex minimal_resolution(const MonomialIdeal& ideal, std::size_t max_generators) {
  return minimalize_complex(taylor_complex(ideal, max_generators));
}

std::vector<DenseMatrix> scalar_matrices(const FreeComplex& minimal) {
  if (!minimal.is_minimal()) throw InputError("scalar matrices requested for a non-minimal complex");
  std::vector<DenseMatrix> out;
  for (int i = 1; i <= minimal.length(); ++i) out.push_back(DenseMatrix::from_sparse(minimal.scalars(i)));
  return out;
}

ScalarExactness scalar_complex_exactness(std::span<const DenseMatrix> lambdas, std::span<const int> betti) {
  const int p = static_cast<int>(lambdas.size());
  if (static_cast<int>(betti.size()) != p + 1) throw InvariantViolation("scalar complex: need b_0..b_p");
  for (int i = 2; i <= p; ++i) {
    if (!multiply(lambdas[i - 2], lambdas[i - 1]).is_zero()) return {false, i - 1};
  }
  std::vector<int> ranks(static_cast<std::size_t>(p) + 2, 0);
  for (int i = 1; i <= p; ++i) ranks[i] = rank(lambdas[i - 1]);
  for (int i = 0; i <= p; ++i) {
    if (betti[i] != ranks[i] + ranks[i + 1]) return {false, i};
  }
  return {};
}

IdealResolution ideal_resolution(const MonomialIdeal& ideal, std::size_t max_generators) {
  const auto& ctx = ideal.context();
  if (ideal.is_unit()) {
    return {ideal, FreeComplex(ctx, {{ExponentVector(static_cast<std::size_t>(ctx.num_vars()))}}, {}), {Rational(1)}};
  }
  const FreeComplex quotient = minimal_resolution(ideal, max_generators);
  std::vector<std::vector<ExponentVector>> shifts;
  std::vector<SparseMatrix> diffs;
  for (int i = 1; i <= quotient.length(); ++i) shifts.push_back(quotient.shifts(i));
  for (int i = 2; i <= quotient.length(); ++i) diffs.push_back(quotient.scalars(i));
  std::vector<Rational> augmentation;
  for (int j = 0; j < quotient.rank(1); ++j) augmentation.push_back(quotient.scalars(1).at(0, j));
  return {ideal, FreeComplex(ctx, std::move(shifts), std::move(diffs)), std::move(augmentation)};
}

}  // namespace gmpi
