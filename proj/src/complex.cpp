#include "gmpi/complex.hpp"

#include "gmpi/error.hpp"

namespace gmpi {

const std::vector<ExponentVector> FreeComplex::kEmpty{};

MonomialMatrix::MonomialMatrix(std::vector<ExponentVector> rows, std::vector<ExponentVector> cols)
    : row_shifts(std::move(rows)),
      col_shifts(std::move(cols)),
      scalars(static_cast<int>(row_shifts.size()), static_cast<int>(col_shifts.size())) {}

MonomialMatrix::MonomialMatrix(std::vector<ExponentVector> rows, std::vector<ExponentVector> cols, SparseMatrix s)
    : row_shifts(std::move(rows)), col_shifts(std::move(cols)), scalars(std::move(s)) {
  if (scalars.rows() != static_cast<int>(row_shifts.size()) || scalars.cols() != static_cast<int>(col_shifts.size())) {
    throw InvariantViolation("monomial matrix shape does not match its shifts");
  }
}

std::optional<std::pair<int, int>> MonomialMatrix::first_inhomogeneous_entry() const {
  for (int c = 0; c < cols(); ++c) {
    for (const auto& [r, v] : scalars.column(c)) {
      if (!divides(row_shifts[r], col_shifts[c])) return std::pair{r, c};
    }
  }
  return std::nullopt;
}

std::optional<std::pair<int, int>> MonomialMatrix::first_unit_entry() const {
  for (int c = 0; c < cols(); ++c) {
    for (const auto& [r, v] : scalars.column(c)) {
      if (row_shifts[r] == col_shifts[c]) return std::pair{r, c};
    }
  }
  return std::nullopt;
}

bool MonomialMatrix::is_homogeneous() const { return !first_inhomogeneous_entry().has_value(); }

bool MonomialMatrix::lies_in_maximal_ideal() const {
  return is_homogeneous() && !first_unit_entry().has_value();
}

MonomialMatrix compose(const MonomialMatrix& a, const MonomialMatrix& b) {
  if (a.col_shifts != b.row_shifts) throw InvariantViolation("composed maps do not share a middle module");
  return MonomialMatrix(a.row_shifts, b.col_shifts, multiply(a.scalars, b.scalars));
}

FreeComplex::FreeComplex(VariableContext ctx, std::vector<std::vector<ExponentVector>> shifts,
                         std::vector<SparseMatrix> diffs)
    : ctx_(std::move(ctx)), shifts_(std::move(shifts)), diffs_(std::move(diffs)) {
  if (shifts_.empty() ? !diffs_.empty() : diffs_.size() + 1 != shifts_.size()) {
    throw InvariantViolation("free complex needs one differential per positive position");
  }
  for (const auto& pos : shifts_) {
    for (const auto& s : pos) {
      if (static_cast<int>(s.size()) != ctx_.num_vars()) throw ContextMismatch("shift length differs from context");
    }
  }
  for (std::size_t i = 0; i < diffs_.size(); ++i) {
    if (diffs_[i].rows() != static_cast<int>(shifts_[i].size()) ||
        diffs_[i].cols() != static_cast<int>(shifts_[i + 1].size())) {
      throw InvariantViolation("differential " + std::to_string(i + 1) + " has the wrong shape");
    }
  }
}

int FreeComplex::rank(int i) const {
  if (i < 0 || i > length()) return 0;
  return static_cast<int>(shifts_[i].size());
}

const std::vector<ExponentVector>& FreeComplex::shifts(int i) const {
  if (i < 0 || i > length()) return kEmpty;
  return shifts_[i];
}

const SparseMatrix& FreeComplex::scalars(int i) const {
  if (i < 1 || i > length()) throw InvariantViolation("no differential at position " + std::to_string(i));
  return diffs_[i - 1];
}

MonomialMatrix FreeComplex::differential(int i) const {
  if (i < 1 || i > length()) return MonomialMatrix(shifts(i - 1), shifts(i));
  return MonomialMatrix(shifts_[i - 1], shifts_[i], diffs_[i - 1]);
}

bool FreeComplex::is_homogeneous() const {
  for (int i = 1; i <= length(); ++i) {
    if (!differential(i).is_homogeneous()) return false;
  }
  return true;
}

bool FreeComplex::is_minimal() const {
  for (int i = 1; i <= length(); ++i) {
    if (!differential(i).lies_in_maximal_ideal()) return false;
  }
  return true;
}

bool FreeComplex::squares_to_zero() const {
  if (!is_homogeneous()) return false;
  for (int i = 2; i <= length(); ++i) {
    if (!multiply(diffs_[i - 2], diffs_[i - 1]).is_zero()) return false;
  }
  return true;
}

std::vector<ExponentVector> FreeComplex::all_shifts() const {
  std::vector<ExponentVector> out;
  for (const auto& pos : shifts_) out.insert(out.end(), pos.begin(), pos.end());
  return out;
}

}  // namespace gmpi
