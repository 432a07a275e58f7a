#include <functional>

#include "gmpi/complex.hpp"
#include "gmpi/error.hpp"

namespace gmpi {

ChainMap identity_map(const FreeComplex& complex) {
  ChainMap f;
  for (int i = 0; i <= complex.length(); ++i) {
    f.components.emplace_back(complex.shifts(i), complex.shifts(i), SparseMatrix::identity(complex.rank(i)));
  }
  return f;
}

ChainMap zero_map(const FreeComplex& source, const FreeComplex& target) {
  ChainMap f;
  for (int i = 0; i <= source.length(); ++i) f.components.emplace_back(target.shifts(i), source.shifts(i));
  return f;
}

ChainMap compose(const ChainMap& outer, const ChainMap& inner) {
  ChainMap f;
  for (std::size_t i = 0; i < inner.components.size(); ++i) {
    const MonomialMatrix& b = inner.components[i];
    if (i < outer.components.size()) {
      f.components.push_back(compose(outer.components[i], b));
    } else if (b.rows() == 0) {
      f.components.emplace_back(std::vector<ExponentVector>{}, b.col_shifts);
    } else {
      throw InvariantViolation("composed chain maps do not line up");
    }
  }
  return f;
}

bool equal_maps(const ChainMap& a, const ChainMap& b) {
  const std::size_t n = std::max(a.components.size(), b.components.size());
  for (std::size_t i = 0; i < n; ++i) {
    const bool in_a = i < a.components.size(), in_b = i < b.components.size();
    if (in_a && in_b) {
      if (a.components[i].row_shifts != b.components[i].row_shifts ||
          a.components[i].col_shifts != b.components[i].col_shifts ||
          !(a.components[i].scalars == b.components[i].scalars)) {
        return false;
      }
    } else if (in_a ? !a.components[i].scalars.is_zero() : !b.components[i].scalars.is_zero()) {
      return false;
    }
  }
  return true;
}

bool is_chain_map(const ChainMap& f, const FreeComplex& source, const FreeComplex& target) {
  if (static_cast<int>(f.components.size()) != source.length() + 1) return false;
  for (int i = 0; i <= source.length(); ++i) {
    const auto& c = f.components[i];
    if (c.col_shifts != source.shifts(i) || c.row_shifts != target.shifts(i) || !c.is_homogeneous()) return false;
  }
  for (int i = 1; i <= source.length(); ++i) {
    const MonomialMatrix lhs = compose(target.differential(i), f.components[i]);
    const MonomialMatrix rhs = compose(f.components[i - 1], source.differential(i));
    if (!(lhs.scalars == rhs.scalars)) return false;
  }
  return true;
}

ChainMap lift_chain_map(const IdealResolution& source, const IdealResolution& target) {
  const FreeComplex& src = source.complex;
  const FreeComplex& tgt = target.complex;
  if (!(src.context() == tgt.context())) throw ContextMismatch("lift between resolutions over different rings");

  ChainMap f;
  MonomialMatrix phi0(tgt.shifts(0), src.shifts(0));
  for (int c = 0; c < src.rank(0); ++c) {
    const ExponentVector& g = src.shifts(0)[c];
    int chosen = -1;
    for (int h = 0; h < tgt.rank(0); ++h) {
      if (divides(tgt.shifts(0)[h], g)) {
        chosen = h;
        break;
      }
    }
    if (chosen < 0) {
      throw InvariantViolation("generator " + to_string(src.context(), g) + " is not in the target ideal " +
                               target.ideal.to_string());
    }
    phi0.scalars.set(chosen, c, source.augmentation[c] / target.augmentation[chosen]);
  }
  f.components.push_back(std::move(phi0));

  for (int i = 1; i <= src.length(); ++i) {
    MonomialMatrix phi(tgt.shifts(i), src.shifts(i));
    const SparseMatrix rhs = multiply(f.components[i - 1].scalars, src.scalars(i));
    for (int e = 0; e < src.rank(i); ++e) {
      const auto& column = rhs.column(e);
      if (column.empty()) continue;
      if (i > tgt.length()) throw InvariantViolation("lift: target resolution too short for a nonzero obstruction");
      const ExponentVector& s = src.shifts(i)[e];
      std::vector<int> unknowns, equations, row_local(static_cast<std::size_t>(tgt.rank(i - 1)), -1);
      for (int j = 0; j < tgt.rank(i); ++j) {
        if (divides(tgt.shifts(i)[j], s)) unknowns.push_back(j);
      }
      for (int r = 0; r < tgt.rank(i - 1); ++r) {
        if (divides(tgt.shifts(i - 1)[r], s)) {
          row_local[r] = static_cast<int>(equations.size());
          equations.push_back(r);
        }
      }
      DenseMatrix a(static_cast<int>(equations.size()), static_cast<int>(unknowns.size()));
      for (std::size_t u = 0; u < unknowns.size(); ++u) {
        for (const auto& [r, v] : tgt.scalars(i).column(unknowns[u])) {
          if (row_local[r] >= 0) a(row_local[r], static_cast<int>(u)) = v;
        }
      }
      std::vector<Rational> b(equations.size());
      for (const auto& [r, v] : column) {
        if (row_local[r] < 0) throw InvariantViolation("lift: inhomogeneous obstruction");
        b[row_local[r]] = v;
      }
      auto x = solve(std::move(a), std::move(b));
      if (!x) throw InvariantViolation("lift: strand system has no solution in degree " + to_string(s));
      for (std::size_t u = 0; u < unknowns.size(); ++u) phi.scalars.set(unknowns[u], e, (*x)[u]);
    }
    f.components.push_back(std::move(phi));
  }
  return f;
}

TensorBasis::TensorBasis(std::vector<const FreeComplex*> factors) : factors_(std::move(factors)) {
  for (const auto* f : factors_) length_ += std::max(f->length(), 0);
  tuples_.resize(static_cast<std::size_t>(length_) + 1);
  lookup_.resize(tuples_.size());
  const std::size_t n = factors_.size();
  std::vector<int> positions(n, 0);

  // Positions in lexicographic order, then indices in lexicographic order.
  std::function<void(std::size_t, int)> place = [&](std::size_t l, int used) {
    if (l == n) {
      std::vector<int> tuple(2 * n, 0);
      for (std::size_t m = 0; m < n; ++m) {
        if (factors_[m]->rank(positions[m]) == 0) return;
        tuple[2 * m] = positions[m];
      }
      while (true) {
        lookup_[used].emplace(tuple, static_cast<int>(tuples_[used].size()));
        tuples_[used].push_back(tuple);
        std::size_t m = n;
        while (m > 0) {
          --m;
          if (++tuple[2 * m + 1] < factors_[m]->rank(positions[m])) break;
          tuple[2 * m + 1] = 0;
          if (m == 0) return;
        }
        if (n == 0) return;
      }
    }
    for (int q = 0; q <= factors_[l]->length(); ++q) {
      positions[l] = q;
      place(l + 1, used + q);
    }
  };
  place(0, 0);
}

int TensorBasis::index_of(int k, const std::vector<int>& tuple) const {
  auto it = lookup_.at(k).find(tuple);
  if (it == lookup_[k].end()) throw InvariantViolation("tensor basis tuple not found");
  return it->second;
}

namespace {

ExponentVector tuple_shift(const TensorBasis& basis, const std::vector<int>& tuple, const VariableContext& full) {
  ExponentVector s(static_cast<std::size_t>(full.num_vars()));
  for (std::size_t l = 0; l < basis.factors().size(); ++l) {
    const auto& local = basis.factors()[l]->shifts(tuple[2 * l])[tuple[2 * l + 1]];
    s = s + embed_block(local, full, static_cast<int>(l));
  }
  return s;
}

std::vector<ExponentVector> position_shifts(const TensorBasis& basis, int k, const VariableContext& full) {
  std::vector<ExponentVector> out;
  if (k < 0 || k > basis.length()) return out;
  for (const auto& t : basis.tuples(k)) out.push_back(tuple_shift(basis, t, full));
  return out;
}

void check_factors(const TensorBasis& basis, const VariableContext& full) {
  if (static_cast<int>(basis.factors().size()) != full.num_blocks()) {
    throw ContextMismatch("tensor product needs one factor per block");
  }
  for (int l = 0; l < full.num_blocks(); ++l) {
    if (!(basis.factors()[l]->context() == full.block_context(l))) {
      throw ContextMismatch("tensor factor " + std::to_string(l) + " is not over its block");
    }
  }
}

}  // namespace

FreeComplex tensor_product(const TensorBasis& basis, const VariableContext& full) {
  check_factors(basis, full);
  const std::size_t n = basis.factors().size();
  std::vector<std::vector<ExponentVector>> shifts;
  for (int k = 0; k <= basis.length(); ++k) shifts.push_back(position_shifts(basis, k, full));
  std::vector<SparseMatrix> diffs;
  for (int k = 1; k <= basis.length(); ++k) {
    SparseMatrix d(static_cast<int>(basis.tuples(k - 1).size()), static_cast<int>(basis.tuples(k).size()));
    for (std::size_t c = 0; c < basis.tuples(k).size(); ++c) {
      const auto& tuple = basis.tuples(k)[c];
      int preceding = 0;
      for (std::size_t l = 0; l < n; ++l) {
        const int pl = tuple[2 * l];
        if (pl >= 1) {
          const Rational sign = (preceding % 2 == 0) ? 1 : -1;
          for (const auto& [r, v] : basis.factors()[l]->scalars(pl).column(tuple[2 * l + 1])) {
            std::vector<int> target = tuple;
            target[2 * l] = pl - 1;
            target[2 * l + 1] = r;
            d.add(basis.index_of(k - 1, target), static_cast<int>(c), sign * v);
          }
        }
        preceding += pl;
      }
    }
    diffs.push_back(std::move(d));
  }
  return FreeComplex(full, std::move(shifts), std::move(diffs));
}

ChainMap tensor_product(std::span<const ChainMap* const> maps, const TensorBasis& source, const TensorBasis& target,
                        const VariableContext& full) {
  check_factors(source, full);
  check_factors(target, full);
  const std::size_t n = maps.size();
  if (n != source.factors().size() || n != target.factors().size()) {
    throw InvariantViolation("tensor of chain maps: factor count mismatch");
  }
  ChainMap f;
  for (int k = 0; k <= source.length(); ++k) {
    MonomialMatrix comp(position_shifts(target, k, full), position_shifts(source, k, full));
    for (std::size_t c = 0; c < source.tuples(k).size(); ++c) {
      const auto& tuple = source.tuples(k)[c];
      // Image of each factor: list of (target index, scalar) at the same position.
      std::vector<const std::vector<SparseMatrix::Entry>*> images(n);
      bool zero = false;
      for (std::size_t l = 0; l < n; ++l) {
        const int pl = tuple[2 * l];
        const auto& comps = maps[l]->components;
        if (pl >= static_cast<int>(comps.size()) || comps[pl].rows() == 0) {
          zero = true;
          break;
        }
        images[l] = &comps[pl].scalars.column(tuple[2 * l + 1]);
        if (images[l]->empty()) {
          zero = true;
          break;
        }
      }
      if (zero) continue;
      std::vector<std::size_t> choice(n, 0);
      while (true) {
        std::vector<int> image_tuple = tuple;
        Rational coeff = 1;
        for (std::size_t l = 0; l < n; ++l) {
          const auto& [r, v] = (*images[l])[choice[l]];
          image_tuple[2 * l + 1] = r;
          coeff *= v;
        }
        comp.scalars.add(target.index_of(k, image_tuple), static_cast<int>(c), coeff);
        std::size_t l = n;
        bool done = true;
        while (l > 0) {
          --l;
          if (++choice[l] < images[l]->size()) {
            done = false;
            break;
          }
          choice[l] = 0;
        }
        if (done) break;
      }
    }
    f.components.push_back(std::move(comp));
  }
  return f;
}

}  // namespace gmpi
