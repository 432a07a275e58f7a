#include "gmpi/construction.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "gmpi/error.hpp"

namespace gmpi {

void SubstitutionFamily::set(int block, int degree, MonomialIdeal ideal) {
  ideals_.insert_or_assign({block, degree}, std::move(ideal));
}

const MonomialIdeal& SubstitutionFamily::at(int block, int degree) const {
  auto it = ideals_.find({block, degree});
  if (it == ideals_.end()) {
    throw InvariantViolation("no substitution ideal for block " + std::to_string(block) + ", degree " +
                             std::to_string(degree));
  }
  return it->second;
}

std::vector<int> DegreeLadder::with_zero(int block) const {
  std::vector<int> out = degrees.at(block);
  if (out.empty() || out.front() != 0) out.insert(out.begin(), 0);
  return out;
}

namespace {

std::string block_label(const VariableContext& ring, int block, int degree) {
  return "block '" + ring.block(block).name + "' degree " + std::to_string(degree);
}

}  // namespace

GmpiInstance GmpiInstance::validate(MonomialIdeal inducing, VariableContext ring, SubstitutionFamily family,
                                    NestingPolicy policy, std::size_t max_taylor) {
  using Kind = ValidationError::Kind;
  const int n = ring.num_blocks();
  const VariableContext& s_ctx = inducing.context();
  if (s_ctx.num_vars() != n || s_ctx.num_blocks() != n) {
    throw ValidationError(Kind::kShape,
                          "inducing ideal has " + std::to_string(s_ctx.num_vars()) + " variables but T has " +
                              std::to_string(n) + " blocks",
                          "");
  }
  if (!inducing.is_proper_nonzero()) {
    throw ValidationError(Kind::kImproperIdeal, "inducing ideal must be proper and nonzero", inducing.to_string());
  }
  for (const auto& [key, ideal] : family.entries()) {
    const auto [l, d] = key;
    if (l < 0 || l >= n) {
      throw ValidationError(Kind::kShape, "substitution for nonexistent block " + std::to_string(l), "");
    }
    const std::string label = block_label(ring, l, d);
    if (!(ideal.context() == ring.block_context(l))) {
      throw ValidationError(Kind::kShape, "substitution ideal for " + label + " is not over that block", label);
    }
    if (d == 0) {
      if (!ideal.is_unit()) {
        throw ValidationError(Kind::kWrongDegree, "degree-0 substitution must be the unit ideal", label);
      }
      continue;
    }
    if (d < 0 || !ideal.is_proper_nonzero()) {
      throw ValidationError(Kind::kImproperIdeal, "substitution ideal for " + label + " must be proper and nonzero",
                            label);
    }
    for (const auto& g : ideal.gens()) {
      if (g.total_degree() != d) {
        throw ValidationError(Kind::kWrongDegree,
                              "substitution ideal for " + label + " has a generator of degree " +
                                  std::to_string(g.total_degree()),
                              to_string(ideal.context(), g));
      }
    }
  }

  GmpiInstance inst;
  inst.ladder_.degrees.resize(static_cast<std::size_t>(n));
  for (int l = 0; l < n; ++l) {
    std::set<int> ds;
    for (const auto& g : inducing.gens()) ds.insert(g[l]);
    inst.ladder_.degrees[l].assign(ds.begin(), ds.end());
    for (int d : ds) {
      if (d > 0 && !family.has(l, d)) {
        throw ValidationError(Kind::kMissingDegree, "no substitution ideal for " + block_label(ring, l, d),
                              ring.block(l).name + ":" + std::to_string(d));
      }
    }
    if (policy == NestingPolicy::kBypass) continue;
    for (int hi : ds) {
      for (int lo : ds) {
        if (lo >= hi || lo == 0) continue;
        const MonomialIdeal& big = family.at(l, lo);
        for (const auto& g : family.at(l, hi).gens()) {
          if (!big.contains(g)) {
            throw ValidationError(Kind::kNestingViolation,
                                  "nesting violated in block '" + ring.block(l).name + "': L_{" + std::to_string(hi) +
                                      "} is not contained in L_{" + std::to_string(lo) + "}",
                                  to_string(big.context(), g) + " ∉ " + big.to_string());
          }
        }
      }
    }
  }

  inst.inducing_ = std::move(inducing);
  inst.ring_ = std::move(ring);
  inst.family_ = std::move(family);
  inst.ideal_ = MonomialIdeal::zero(inst.ring_);
  for (const auto& g : inst.inducing_.gens()) {
    inst.summands_.push_back(inst.product_ideal(g));
    inst.ideal_ = sum(inst.ideal_, inst.summands_.back());
  }
  inst.resolution_ = minimal_resolution(inst.inducing_, max_taylor);
  inst.lambdas_ = scalar_matrices(inst.resolution_);
  return inst;
}

MonomialIdeal GmpiInstance::substitution(int block, int degree) const {
  if (degree == 0) return MonomialIdeal::unit(ring_.block_context(block));
  return family_.at(block, degree);
}

MonomialIdeal GmpiInstance::product_ideal(const ExponentVector& block_degrees) const {
  if (static_cast<int>(block_degrees.size()) != num_blocks()) throw ContextMismatch("block degree vector length");
  MonomialIdeal acc = MonomialIdeal::unit(ring_);
  for (int l = 0; l < num_blocks(); ++l) acc = product(acc, embed_block(substitution(l, block_degrees[l]), ring_, l));
  return acc;
}

StarComplex build_star_complex(const GmpiInstance& instance) {
  const FreeComplex& f = instance.inducing_resolution();
  StarComplex star;
  star.ring = instance.ring();
  star.lambdas = instance.lambdas();
  for (int i = 0; i <= f.length(); ++i) star.shifts.push_back(f.shifts(i));
  star.ideals.push_back({MonomialIdeal::unit(instance.ring())});
  if (f.length() < 1) return star;

  std::vector<MonomialIdeal> first;
  const auto& gens = instance.inducing().gens();
  for (const auto& a : f.shifts(1)) {
    auto it = std::find(gens.begin(), gens.end(), a);
    if (it == gens.end()) throw InvariantViolation("position-1 shift " + to_string(a) + " is not a generator of I");
    first.push_back(instance.summands()[static_cast<std::size_t>(it - gens.begin())]);
  }
  star.ideals.push_back(std::move(first));

  for (int i = 2; i <= f.length(); ++i) {
    const DenseMatrix& lambda = instance.lambdas()[i - 1];
    std::vector<MonomialIdeal> level;
    for (int j = 0; j < lambda.cols(); ++j) {
      std::vector<MonomialIdeal> parts;
      for (int k = 0; k < lambda.rows(); ++k) {
        if (lambda(k, j) != 0) parts.push_back(star.ideals[i - 1][k]);
      }
      level.push_back(intersect(instance.ring(), parts));
    }
    star.ideals.push_back(std::move(level));
  }
  return star;
}

ExactnessReport star_acyclicity(const StarComplex& star, const MonomialIdeal& target) {
  ExactnessReport report;
  const int p = star.length();
  for (int i = 1; i <= p; ++i) {
    const DenseMatrix& lambda = star.lambdas[i - 1];
    for (int j = 0; j < lambda.cols(); ++j) {
      for (int k = 0; k < lambda.rows(); ++k) {
        if (lambda(k, j) == 0) continue;
        for (const auto& g : star.ideals[i][j].gens()) {
          if (!star.ideals[i - 1][k].contains(g)) {
            report.ok = false;
            report.position = i;
            report.witness = g;
            report.reason = "map not well defined: L_{" + std::to_string(i) + "," + std::to_string(j + 1) +
                            "} is not inside L_{" + std::to_string(i - 1) + "," + std::to_string(k + 1) + "}";
            return report;
          }
        }
      }
    }
  }
  for (int i = 2; i <= p; ++i) {
    if (!multiply(star.lambdas[i - 2], star.lambdas[i - 1]).is_zero()) {
      report.ok = false;
      report.position = i;
      report.reason = "scalar matrices do not compose to zero";
      return report;
    }
  }

  std::vector<ExponentVector> atoms = target.gens();
  for (int i = 1; i <= p; ++i) {
    for (const auto& ideal : star.ideals[i]) atoms.insert(atoms.end(), ideal.gens().begin(), ideal.gens().end());
  }
  std::vector<ExponentVector> degrees =
      lcm_lattice(atoms, static_cast<std::size_t>(star.ring.num_vars()));
  std::sort(degrees.begin(), degrees.end(), [](const ExponentVector& a, const ExponentVector& b) {
    const int da = a.total_degree(), db = b.total_degree();
    return da != db ? da < db : a < b;
  });

  std::vector<int> dims{1};
  std::vector<SparseMatrix> maps;
  for (int i = 1; i <= p; ++i) {
    dims.push_back(static_cast<int>(star.ideals[i].size()));
    const DenseMatrix& lambda = star.lambdas[i - 1];
    SparseMatrix m(lambda.rows(), lambda.cols());
    for (int j = 0; j < lambda.cols(); ++j) {
      for (int k = 0; k < lambda.rows(); ++k) m.set(k, j, lambda(k, j));
    }
    maps.push_back(std::move(m));
  }
  const RestrictedHomology homology(dims, std::move(maps));
  std::vector<std::vector<int>> selected(static_cast<std::size_t>(p) + 1);
  selected[0] = {0};
  for (const auto& b : degrees) {
    for (int i = 1; i <= p; ++i) {
      selected[i].clear();
      for (int j = 0; j < dims[i]; ++j) {
        if (star.ideals[i][j].contains(b)) selected[i].push_back(j);
      }
    }
    const auto h = homology.homology(selected);
    ++report.degrees_checked;
    const int expected_h0 = target.contains(b) ? 0 : 1;
    for (int i = 0; i <= p; ++i) {
      const int want = i == 0 ? expected_h0 : 0;
      if (h[i] != want) {
        report.ok = false;
        report.position = i;
        report.witness = b;
        report.reason = "star complex homology of dimension " + std::to_string(h[i]) + " in position " +
                        std::to_string(i) + " (expected " + std::to_string(want) + ")";
        return report;
      }
    }
  }
  return report;
}

BlockResolutions::BlockResolutions(const GmpiInstance& instance, std::size_t max_taylor) {
  for (int l = 0; l < instance.num_blocks(); ++l) {
    for (int d : instance.ladder().with_zero(l)) {
      BlockResolution b;
      b.block = l;
      b.degree = d;
      b.resolution = ideal_resolution(instance.substitution(l, d), max_taylor);
      b.projdim = b.resolution.length();
      b.linear = true;
      for (int k = 0; k <= b.resolution.length(); ++k) {
        for (const auto& s : b.resolution.complex.shifts(k)) {
          if (s.total_degree() != d + k) b.linear = false;
        }
      }
      entries_.emplace(std::pair{l, d}, std::move(b));
    }
  }
}

const BlockResolution& BlockResolutions::at(int block, int degree) const {
  auto it = entries_.find({block, degree});
  if (it == entries_.end()) {
    throw InvariantViolation("no block resolution for block " + std::to_string(block) + ", degree " +
                             std::to_string(degree));
  }
  return it->second;
}

bool BlockResolutions::all_linear() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.second.linear; });
}

ComparisonMaps::ComparisonMaps(const GmpiInstance& instance, const BlockResolutions& blocks) {
  for (int l = 0; l < instance.num_blocks(); ++l) {
    ladders_.push_back(instance.ladder().with_zero(l));
    const auto& ladder = ladders_.back();
    for (int d : ladder) identity_.emplace(std::pair{l, d}, identity_map(blocks.at(l, d).resolution.complex));
    for (std::size_t k = 1; k < ladder.size(); ++k) {
      rho_.emplace(std::pair{l, static_cast<int>(k)},
                   lift_chain_map(blocks.at(l, ladder[k]).resolution, blocks.at(l, ladder[k - 1]).resolution));
    }
  }
}

const ChainMap& ComparisonMaps::rho(int block, int ladder_index) const {
  auto it = rho_.find({block, ladder_index});
  if (it == rho_.end()) throw InvariantViolation("no comparison map at that ladder step");
  return it->second;
}

ChainMap ComparisonMaps::between(int block, int from_degree, int to_degree) const {
  const auto& ladder = ladders_.at(block);
  auto from = std::find(ladder.begin(), ladder.end(), from_degree);
  auto to = std::find(ladder.begin(), ladder.end(), to_degree);
  if (from == ladder.end() || to == ladder.end() || from < to) {
    throw InvariantViolation("comparison from degree " + std::to_string(from_degree) + " to " +
                             std::to_string(to_degree) + " does not run down the ladder");
  }
  if (from == to) return identity_.at({block, from_degree});
  int k = static_cast<int>(from - ladder.begin());
  const int stop = static_cast<int>(to - ladder.begin());
  ChainMap f = rho(block, k);
  for (--k; k > stop; --k) f = compose(rho(block, k), f);
  return f;
}

ChainMap ComparisonMaps::tau(const GmpiInstance& instance, const BlockResolutions& blocks, int i, int block, int k,
                             int j) const {
  const FreeComplex& f = instance.inducing_resolution();
  const ExponentVector& source = f.shifts(i).at(j);
  const ExponentVector& target = f.shifts(i - 1).at(k);
  if (instance.lambdas().at(i - 1)(k, j) == 0) {
    return zero_map(blocks.at(block, source[block]).resolution.complex,
                    blocks.at(block, target[block]).resolution.complex);
  }
  return between(block, source[block], target[block]);
}

DoubleComplex build_double_complex(const GmpiInstance& instance, const BlockResolutions& blocks,
                                   const ComparisonMaps& maps) {
  const FreeComplex& f = instance.inducing_resolution();
  const VariableContext& ring = instance.ring();
  const int n = instance.num_blocks();
  DoubleComplex d;
  d.ring = ring;
  d.lambdas = instance.lambdas();
  std::vector<std::vector<TensorBasis>> bases;
  for (int c = 0; c <= f.length(); ++c) {
    d.column_shifts.push_back(f.shifts(c));
    d.columns.emplace_back();
    d.augmentations.emplace_back();
    bases.emplace_back();
    for (const auto& a : f.shifts(c)) {
      std::vector<const FreeComplex*> factors;
      for (int l = 0; l < n; ++l) factors.push_back(&blocks.at(l, a[l]).resolution.complex);
      TensorBasis basis(factors);
      d.columns[c].push_back(tensor_product(basis, ring));
      std::vector<Rational> aug;
      for (const auto& tuple : basis.tuples(0)) {
        Rational x = 1;
        for (int l = 0; l < n; ++l) x *= blocks.at(l, a[l]).resolution.augmentation[tuple[2 * l + 1]];
        aug.push_back(x);
      }
      d.augmentations[c].push_back(std::move(aug));
      bases[c].push_back(std::move(basis));
    }
  }
  d.sigma.resize(d.columns.size());
  for (int c = 1; c <= f.length(); ++c) {
    const DenseMatrix& lambda = d.lambdas[c - 1];
    for (int s = 0; s < lambda.cols(); ++s) {
      for (int k = 0; k < lambda.rows(); ++k) {
        if (lambda(k, s) == 0) continue;
        std::vector<ChainMap> taus;
        for (int l = 0; l < n; ++l) taus.push_back(maps.tau(instance, blocks, c, l, k, s));
        std::vector<const ChainMap*> ptrs;
        for (const auto& t : taus) ptrs.push_back(&t);
        ChainMap sigma = tensor_product(ptrs, bases[c][s], bases[c - 1][k], ring);
        for (auto& comp : sigma.components) {
          for (int col = 0; col < comp.cols(); ++col) comp.scalars.scale_column(col, lambda(k, s));
        }
        d.sigma[c].emplace(std::pair{k, s}, std::move(sigma));
      }
    }
  }
  return d;
}

namespace {

void add_into(SparseMatrix& acc, const SparseMatrix& m) {
  for (int c = 0; c < m.cols(); ++c) {
    for (const auto& [r, v] : m.column(c)) acc.add(r, c, v);
  }
}

std::string summand_label(int c, int s) { return "G^(" + std::to_string(c) + "," + std::to_string(s + 1) + ")"; }

}  // namespace

Verdict sigma_squares_to_zero(const DoubleComplex& d) {
  for (int c = 2; c < d.num_columns(); ++c) {
    for (int s = 0; s < static_cast<int>(d.columns[c].size()); ++s) {
      for (int q = 0; q < static_cast<int>(d.columns[c - 2].size()); ++q) {
        const FreeComplex& src = d.columns[c][s];
        const FreeComplex& dst = d.columns[c - 2][q];
        for (int r = 0; r <= src.length(); ++r) {
          SparseMatrix acc(dst.rank(r), src.rank(r));
          for (int k = 0; k < static_cast<int>(d.columns[c - 1].size()); ++k) {
            auto first = d.sigma[c].find({k, s});
            auto second = d.sigma[c - 1].find({q, k});
            if (first == d.sigma[c].end() || second == d.sigma[c - 1].end()) continue;
            if (r >= static_cast<int>(second->second.components.size())) continue;
            add_into(acc, multiply(second->second.components[r].scalars, first->second.components[r].scalars));
          }
          if (!acc.is_zero()) {
            return {false, summand_label(c, s) + " -> " + summand_label(c - 2, q) + " in row " + std::to_string(r)};
          }
        }
      }
    }
  }
  return {};
}

Verdict sigma_minimality(const DoubleComplex& d) {
  for (int c = 1; c < d.num_columns(); ++c) {
    for (const auto& [key, map] : d.sigma[c]) {
      for (std::size_t r = 0; r < map.components.size(); ++r) {
        const auto& comp = map.components[r];
        auto bad = comp.first_unit_entry();
        if (!bad) bad = comp.first_inhomogeneous_entry();
        if (bad) {
          return {false, summand_label(c, key.second) + " -> " + summand_label(c - 1, key.first) + " row " +
                             std::to_string(r) + " entry at shift " + to_string(d.ring, comp.col_shifts[bad->second])};
        }
      }
    }
  }
  return {};
}

Verdict sigma_chain_maps(const DoubleComplex& d) {
  for (int c = 1; c < d.num_columns(); ++c) {
    for (const auto& [key, map] : d.sigma[c]) {
      if (!is_chain_map(map, d.columns[c][key.second], d.columns[c - 1][key.first])) {
        return {false, summand_label(c, key.second) + " -> " + summand_label(c - 1, key.first)};
      }
    }
  }
  return {};
}

Verdict sigma_covers_star(const DoubleComplex& d) {
  for (int c = 1; c < d.num_columns(); ++c) {
    const DenseMatrix& lambda = d.lambdas[c - 1];
    for (int s = 0; s < lambda.cols(); ++s) {
      for (int k = 0; k < lambda.rows(); ++k) {
        auto it = d.sigma[c].find({k, s});
        const auto& src_aug = d.augmentations[c][s];
        const auto& dst_aug = d.augmentations[c - 1][k];
        for (std::size_t x = 0; x < src_aug.size(); ++x) {
          Rational image = 0;
          if (it != d.sigma[c].end()) {
            for (const auto& [y, v] : it->second.components[0].scalars.column(static_cast<int>(x))) {
              image += v * dst_aug[y];
            }
          }
          if (image != lambda(k, s) * src_aug[x]) {
            return {false, summand_label(c, s) + " -> " + summand_label(c - 1, k) + " generator " +
                               std::to_string(x + 1)};
          }
        }
      }
    }
  }
  return {};
}

FreeComplex total_complex(const DoubleComplex& d) {
  const int columns = d.num_columns();
  int top = 0;
  for (int c = 0; c < columns; ++c) {
    for (const auto& g : d.columns[c]) top = std::max(top, c + g.length());
  }
  // offset[c][s][r]: first index of D(r, c, s) inside Tot_{r + c}.
  std::vector<std::vector<std::vector<int>>> offset(static_cast<std::size_t>(columns));
  std::vector<std::vector<ExponentVector>> shifts(static_cast<std::size_t>(top) + 1);
  for (int c = 0; c < columns; ++c) {
    for (const auto& g : d.columns[c]) offset[c].emplace_back(static_cast<std::size_t>(g.length()) + 1, -1);
  }
  for (int k = 0; k <= top; ++k) {
    for (int c = 0; c <= std::min(k, columns - 1); ++c) {
      for (std::size_t s = 0; s < d.columns[c].size(); ++s) {
        const FreeComplex& g = d.columns[c][s];
        const int r = k - c;
        if (r > g.length()) continue;
        offset[c][s][r] = static_cast<int>(shifts[k].size());
        shifts[k].insert(shifts[k].end(), g.shifts(r).begin(), g.shifts(r).end());
      }
    }
  }
  std::vector<SparseMatrix> diffs;
  for (int k = 1; k <= top; ++k) {
    SparseMatrix m(static_cast<int>(shifts[k - 1].size()), static_cast<int>(shifts[k].size()));
    for (int c = 0; c <= std::min(k, columns - 1); ++c) {
      for (std::size_t s = 0; s < d.columns[c].size(); ++s) {
        const FreeComplex& g = d.columns[c][s];
        const int r = k - c;
        if (r > g.length()) continue;
        const int base = offset[c][s][r];
        for (int j = 0; j < g.rank(r); ++j) {
          if (r >= 1) {
            for (const auto& [rr, v] : g.scalars(r).column(j)) m.add(offset[c][s][r - 1] + rr, base + j, v);
          }
          if (c >= 1) {
            const Rational sign = (r % 2 == 0) ? 1 : -1;
            for (const auto& [key, sigma] : d.sigma[c]) {
              if (key.second != static_cast<int>(s) || r >= static_cast<int>(sigma.components.size())) continue;
              const auto& comp = sigma.components[r];
              if (comp.rows() == 0) continue;
              const int target = offset[c - 1][key.first][r];
              for (const auto& [t, v] : comp.scalars.column(j)) m.add(target + t, base + j, sign * v);
            }
          }
        }
      }
    }
    diffs.push_back(std::move(m));
  }
  return FreeComplex(d.ring, std::move(shifts), std::move(diffs));
}

GmpiConstruction::GmpiConstruction(GmpiInstance instance, ConstructionOptions options)
    : instance_(std::move(instance)), options_(options) {
  star_ = build_star_complex(instance_);
  blocks_ = BlockResolutions(instance_, options_.max_taylor);
  maps_ = ComparisonMaps(instance_, blocks_);
  double_ = build_double_complex(instance_, blocks_, maps_);
  total_ = total_complex(double_);
  if (options_.verify_total) {
    if (!total_.squares_to_zero()) throw InvariantViolation("Tot(D): differential does not square to zero");
    if (!total_.is_minimal()) throw InvariantViolation("Tot(D): differential has a unit entry");
    exactness_ = exactness_check(total_, instance_.ideal(), options_.scan);
    if (!exactness_.ok) {
      throw InvariantViolation("Tot(D) does not resolve T/L: " + exactness_.reason + " at degree " +
                               (exactness_.witness ? to_string(instance_.ring(), *exactness_.witness) : "?"));
    }
  }
  betti_ = betti_table(total_);
  inducing_betti_ = betti_table(instance_.inducing_resolution());
}

RegularityResult gmpi_regularity(const GmpiConstruction& c) {
  RegularityResult r;
  r.reg_inducing = regularity(c.inducing_betti(), true);
  r.reg_total = regularity(c.betti(), true);
  r.hypothesis = c.hypothesis_holds();
  return r;
}

ProjdimResult gmpi_projdim(const GmpiConstruction& c) {
  ProjdimResult r;
  const FreeComplex& f = c.instance().inducing_resolution();
  for (int i = 1; i <= f.length(); ++i) {
    for (const auto& a : f.shifts(i)) {
      int sum = i;
      for (int l = 0; l < c.instance().num_blocks(); ++l) sum += c.blocks().at(l, a[l]).projdim;
      r.formula = std::max(r.formula, sum);
    }
  }
  r.from_total = projective_dimension(c.betti());
  return r;
}

LinearityResult gmpi_linearity(const GmpiConstruction& c) {
  LinearityResult r;
  const int di = c.instance().inducing().generation_degree();
  const int dl = c.instance().ideal().generation_degree();
  r.inducing_linear = di > 0 && is_linear_resolution(c.inducing_betti(), di);
  r.total_linear = dl > 0 && is_linear_resolution(c.betti(), dl);
  r.hypothesis = c.hypothesis_holds();
  return r;
}

Verdict top_degree_formula(const GmpiConstruction& c) {
  const BettiTable& total = c.betti();
  const BettiTable& inducing = c.inducing_betti();
  for (int k = 0; k + 1 <= total.max_position(); ++k) {
    std::optional<int> expected;
    for (int i = 0; i <= k; ++i) {
      if (auto t = inducing.top_degree(i + 1)) expected = std::max(expected.value_or(*t + k - i), *t + k - i);
    }
    if (total.top_degree(k + 1) != expected) {
      return {false, "t_" + std::to_string(k) + "(L) = " + std::to_string(total.top_degree(k + 1).value_or(-1)) +
                         ", formula gives " + std::to_string(expected.value_or(-1))};
    }
  }
  return {};
}

}  // namespace gmpi
