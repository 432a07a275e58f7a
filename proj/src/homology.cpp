#include <algorithm>
#include <unordered_set>

#include "gmpi/complex.hpp"
#include "gmpi/error.hpp"

namespace gmpi {

std::vector<int> StrandComplex::dimensions() const {
  std::vector<int> d;
  for (const auto& b : basis) d.push_back(static_cast<int>(b.size()));
  return d;
}

StrandComplex strand(const FreeComplex& complex, const ExponentVector& b) {
  StrandComplex s;
  s.degree = b;
  const int p = complex.length();
  s.basis.resize(static_cast<std::size_t>(std::max(p, 0)) + 1);
  std::vector<std::vector<int>> local(s.basis.size());
  for (int i = 0; i <= p; ++i) {
    local[i].assign(static_cast<std::size_t>(complex.rank(i)), -1);
    for (int j = 0; j < complex.rank(i); ++j) {
      if (divides(complex.shifts(i)[j], b)) {
        local[i][j] = static_cast<int>(s.basis[i].size());
        s.basis[i].push_back(j);
      }
    }
  }
  for (int i = 1; i <= p; ++i) {
    DenseMatrix m(static_cast<int>(s.basis[i - 1].size()), static_cast<int>(s.basis[i].size()));
    for (std::size_t c = 0; c < s.basis[i].size(); ++c) {
      for (const auto& [r, v] : complex.scalars(i).column(s.basis[i][c])) {
        if (local[i - 1][r] < 0) throw InvariantViolation("strand is not a subcomplex (inhomogeneous entry)");
        m(local[i - 1][r], static_cast<int>(c)) = v;
      }
    }
    s.maps.push_back(std::move(m));
  }
  return s;
}

std::vector<int> homology_dimensions(const StrandComplex& s) {
  const std::vector<int> dims = s.dimensions();
  const int p = static_cast<int>(dims.size()) - 1;
  std::vector<int> ranks(dims.size() + 1, 0);
  for (int i = 1; i <= p; ++i) ranks[i] = rank(s.maps[i - 1]);
  std::vector<int> h;
  for (int i = 0; i <= p; ++i) h.push_back(dims[i] - ranks[i] - ranks[i + 1]);
  return h;
}

RestrictedHomology::RestrictedHomology(std::vector<int> dims, std::vector<SparseMatrix> maps)
    : dims_(std::move(dims)), maps_(std::move(maps)) {
  if (maps_.size() + 1 != dims_.size() && !(dims_.empty() && maps_.empty())) {
    throw InvariantViolation("restricted homology: one map per positive position required");
  }
  for (const auto& m : maps_) {
    std::vector<std::vector<ModEntry>> cols(static_cast<std::size_t>(m.cols()));
    for (int c = 0; c < m.cols(); ++c) {
      for (const auto& [r, v] : m.column(c)) {
        auto red = modp::reduce(v);
        if (!red) {
          mod_ok_ = false;
          continue;
        }
        if (*red != 0) cols[c].push_back({r, *red});
      }
    }
    mod_cols_.push_back(std::move(cols));
  }
}

std::vector<int> RestrictedHomology::homology(const std::vector<std::vector<int>>& selected) const {
  if (!mod_ok_) return exact_homology(selected);
  const int p = static_cast<int>(dims_.size()) - 1;
  std::vector<int> n(dims_.size());
  for (int i = 0; i <= p; ++i) n[i] = static_cast<int>(selected[i].size());
  std::vector<int> ranks(dims_.size() + 1, 0);
  std::vector<int> local;
  std::vector<std::uint64_t> buf;
  for (int i = 1; i <= p; ++i) {
    const int rows = n[i - 1], cols = n[i];
    if (rows == 0 || cols == 0) continue;
    local.assign(static_cast<std::size_t>(dims_[i - 1]), -1);
    for (int k = 0; k < rows; ++k) local[selected[i - 1][k]] = k;
    buf.assign(static_cast<std::size_t>(rows) * cols, 0);
    for (int c = 0; c < cols; ++c) {
      for (const auto& e : mod_cols_[i - 1][selected[i][c]]) {
        if (local[e.row] >= 0) buf[static_cast<std::size_t>(local[e.row]) * cols + c] = e.value;
      }
    }
    ranks[i] = modp::rank(buf, rows, cols);
  }
  for (int i = 1; i <= p; ++i) {
    if (n[i] != ranks[i] + ranks[i + 1]) return exact_homology(selected);
  }
  std::vector<int> h(dims_.size(), 0);
  h[0] = n[0] - ranks[1];
  return h;
}

std::vector<int> RestrictedHomology::exact_homology(const std::vector<std::vector<int>>& selected) const {
  const int p = static_cast<int>(dims_.size()) - 1;
  std::vector<int> ranks(dims_.size() + 1, 0);
  std::vector<int> local;
  for (int i = 1; i <= p; ++i) {
    const int rows = static_cast<int>(selected[i - 1].size()), cols = static_cast<int>(selected[i].size());
    if (rows == 0 || cols == 0) continue;
    local.assign(static_cast<std::size_t>(dims_[i - 1]), -1);
    for (int k = 0; k < rows; ++k) local[selected[i - 1][k]] = k;
    DenseMatrix m(rows, cols);
    for (int c = 0; c < cols; ++c) {
      for (const auto& [r, v] : maps_[i - 1].column(selected[i][c])) {
        if (local[r] >= 0) m(local[r], c) = v;
      }
    }
    ranks[i] = rank(std::move(m));
  }
  std::vector<int> h;
  for (int i = 0; i <= p; ++i) h.push_back(static_cast<int>(selected[i].size()) - ranks[i] - ranks[i + 1]);
  return h;
}

std::vector<ExponentVector> lcm_lattice(std::span<const ExponentVector> atoms, std::size_t length, std::size_t cap) {
  std::vector<ExponentVector> elems{ExponentVector(length)};
  std::unordered_set<ExponentVector, ExponentVectorHash> seen{elems.front()};
  std::unordered_set<ExponentVector, ExponentVectorHash> done_atoms;
  for (const auto& a : atoms) {
    if (!done_atoms.insert(a).second) continue;
    const std::size_t current = elems.size();
    for (std::size_t k = 0; k < current; ++k) {
      ExponentVector l = lcm(elems[k], a);
      if (seen.insert(l).second) {
        elems.push_back(std::move(l));
        if (elems.size() > cap) {
          throw SizeLimitExceeded("lcm lattice exceeds " + std::to_string(cap) + " elements");
        }
      }
    }
  }
  return elems;
}

namespace {

bool degree_then_lex(const ExponentVector& a, const ExponentVector& b) {
  const int da = a.total_degree(), db = b.total_degree();
  return da != db ? da < db : a < b;
}

std::vector<ExponentVector> box_points(const ExponentVector& bound) {
  std::vector<ExponentVector> out;
  ExponentVector cur(bound.size());
  while (true) {
    out.push_back(cur);
    std::size_t k = 0;
    while (k < bound.size() && cur[k] == bound[k]) cur[k++] = 0;
    if (k == bound.size()) break;
    ++cur[k];
  }
  return out;
}

constexpr std::size_t kAutoBoxLimit = 4096;

}  // namespace

ExactnessReport exactness_check(const FreeComplex& complex, const MonomialIdeal& expect_h0, ScanMode mode) {
  ExactnessReport report;
  if (!(complex.context() == expect_h0.context())) throw ContextMismatch("complex and ideal over different contexts");
  for (int i = 1; i <= complex.length(); ++i) {
    if (auto bad = complex.differential(i).first_inhomogeneous_entry()) {
      report.ok = false;
      report.position = i;
      report.witness = complex.shifts(i)[bad->second];
      report.reason = "inhomogeneous differential entry";
      return report;
    }
  }
  if (!complex.squares_to_zero()) {
    report.ok = false;
    report.reason = "differential does not square to zero";
    return report;
  }

  std::vector<ExponentVector> atoms = complex.all_shifts();
  atoms.insert(atoms.end(), expect_h0.gens().begin(), expect_h0.gens().end());
  const auto n = static_cast<std::size_t>(complex.context().num_vars());
  ExponentVector bound(n);
  for (const auto& a : atoms) bound = lcm(bound, a);

  double box_size = 1;
  for (int v : bound) box_size *= v + 1;
  const bool use_box = mode == ScanMode::kBox || (mode == ScanMode::kAuto && box_size <= kAutoBoxLimit);
  std::vector<ExponentVector> degrees = use_box ? box_points(bound) : lcm_lattice(atoms, n);
  std::sort(degrees.begin(), degrees.end(), degree_then_lex);

  std::vector<int> dims;
  std::vector<SparseMatrix> maps;
  for (int i = 0; i <= complex.length(); ++i) dims.push_back(complex.rank(i));
  for (int i = 1; i <= complex.length(); ++i) maps.push_back(complex.scalars(i));
  const RestrictedHomology homology(std::move(dims), std::move(maps));

  std::vector<std::vector<int>> selected(static_cast<std::size_t>(complex.length()) + 1);
  for (const auto& b : degrees) {
    for (int i = 0; i <= complex.length(); ++i) {
      selected[i].clear();
      for (int j = 0; j < complex.rank(i); ++j) {
        if (divides(complex.shifts(i)[j], b)) selected[i].push_back(j);
      }
    }
    const std::vector<int> h = homology.homology(selected);
    ++report.degrees_checked;
    const int expected_h0 = expect_h0.contains(b) ? 0 : 1;
    if (h[0] != expected_h0) {
      report.ok = false;
      report.position = 0;
      report.witness = b;
      report.reason = "H_0 has dimension " + std::to_string(h[0]) + ", expected " + std::to_string(expected_h0);
      return report;
    }
    for (std::size_t i = 1; i < h.size(); ++i) {
      if (h[i] != 0) {
        report.ok = false;
        report.position = static_cast<int>(i);
        report.witness = b;
        report.reason = "homology of dimension " + std::to_string(h[i]) + " in position " + std::to_string(i);
        return report;
      }
    }
  }
  return report;
}

int strand_euler_characteristic(const FreeComplex& complex, const ExponentVector& b) {
  int chi = 0;
  for (int i = 0; i <= complex.length(); ++i) {
    int count = 0;
    for (const auto& s : complex.shifts(i)) count += divides(s, b) ? 1 : 0;
    chi += (i % 2 == 0) ? count : -count;
  }
  return chi;
}

int BettiTable::max_position() const {
  int m = -1;
  for (const auto& [key, v] : graded) m = std::max(m, key.first);
  return m;
}

std::optional<int> BettiTable::top_degree(int k) const {
  std::optional<int> t;
  for (const auto& [key, v] : graded) {
    if (key.first == k) t = std::max(t.value_or(key.second), key.second);
  }
  return t;
}

std::optional<int> BettiTable::bottom_degree(int k) const {
  std::optional<int> t;
  for (const auto& [key, v] : graded) {
    if (key.first == k) t = std::min(t.value_or(key.second), key.second);
  }
  return t;
}

int BettiTable::total(int k) const {
  int s = 0;
  for (const auto& [key, v] : graded) s += key.first == k ? v : 0;
  return s;
}

BettiTable betti_table(const FreeComplex& minimal) {
  if (!minimal.is_minimal()) throw InputError("Betti numbers requested for a non-minimal complex");
  BettiTable t;
  for (int i = 0; i <= minimal.length(); ++i) {
    for (const auto& s : minimal.shifts(i)) {
      ++t.graded[{i, s.total_degree()}];
      ++t.multigraded[{i, s}];
    }
  }
  return t;
}

int regularity(const BettiTable& table, bool of_ideal) {
  std::optional<int> reg;
  for (int k = of_ideal ? 1 : 0; k <= table.max_position(); ++k) {
    if (auto t = table.top_degree(k)) {
      const int shift = of_ideal ? k - 1 : k;
      reg = std::max(reg.value_or(*t - shift), *t - shift);
    }
  }
  if (!reg) throw InputError("regularity of an empty Betti table");
  return *reg;
}

int projective_dimension(const BettiTable& table) { return table.max_position(); }

bool is_linear_resolution(const BettiTable& table, int d) {
  bool any = false;
  for (const auto& [key, v] : table.graded) {
    if (key.first == 0) continue;
    any = true;
    if (key.second != d + key.first - 1) return false;
  }
  return any;
}

}  // namespace gmpi
