#ifndef GMPI_CONSTRUCTION_HPP
#define GMPI_CONSTRUCTION_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gmpi/complex.hpp"
#include "gmpi/monomial.hpp"

namespace gmpi {

// Substitution ideals L_{l,d}, each over the variables of block l alone.
class SubstitutionFamily {
 public:
  void set(int block, int degree, MonomialIdeal ideal);
  bool has(int block, int degree) const { return ideals_.count({block, degree}) != 0; }
  const MonomialIdeal& at(int block, int degree) const;
  const std::map<std::pair<int, int>, MonomialIdeal>& entries() const noexcept { return ideals_; }

 private:
  std::map<std::pair<int, int>, MonomialIdeal> ideals_;
};

// Per block l, the sorted distinct block degrees a_1(l), ..., a_m(l).
struct DegreeLadder {
  std::vector<std::vector<int>> degrees;

  // The ladder with degree 0 prepended (L_{l,0} is the unit ideal); this is
  // the chain the comparison maps walk down, ending at F_0 = S.
  std::vector<int> with_zero(int block) const;
};

enum class NestingPolicy {
  kEnforce,
  // Skips the containment check; only for building counterexample fixtures.
  kBypass,
};

// Inducing ideal I in S = K[x_1..x_n], the ring T with n variable blocks and
// a validated substitution family. Holds the derived L_j, L and the minimal
// resolution of S/I with its scalar matrices.
class GmpiInstance {
 public:
  // Validates the family: coverage of every block degree, single-degree
  // generation, and L_{l,d} <= L_{l,d'} for d >= d'. Throws ValidationError
  // with a witness on failure.
  static GmpiInstance validate(MonomialIdeal inducing, VariableContext ring, SubstitutionFamily family,
                               NestingPolicy policy = NestingPolicy::kEnforce,
                               std::size_t max_taylor = kDefaultTaylorCap);

  const MonomialIdeal& inducing() const noexcept { return inducing_; }
  const VariableContext& ring() const noexcept { return ring_; }
  const SubstitutionFamily& family() const noexcept { return family_; }
  const DegreeLadder& ladder() const noexcept { return ladder_; }

  // L_j, aligned with inducing().gens().
  const std::vector<MonomialIdeal>& summands() const noexcept { return summands_; }
  const MonomialIdeal& ideal() const noexcept { return ideal_; }

  const FreeComplex& inducing_resolution() const noexcept { return resolution_; }
  const std::vector<DenseMatrix>& lambdas() const noexcept { return lambdas_; }
  int num_blocks() const noexcept { return ring_.num_blocks(); }

  // L_{l,d} over block l; the unit ideal when d == 0.
  MonomialIdeal substitution(int block, int degree) const;
  // prod_l L_{l, a(l)} inside T for a vector of block degrees.
  MonomialIdeal product_ideal(const ExponentVector& block_degrees) const;

 private:
  GmpiInstance() = default;

  MonomialIdeal inducing_;
  VariableContext ring_;
  SubstitutionFamily family_;
  DegreeLadder ladder_;
  std::vector<MonomialIdeal> summands_;
  MonomialIdeal ideal_;
  FreeComplex resolution_;
  std::vector<DenseMatrix> lambdas_;
};

// F*: position 0 is T, position i >= 1 the ideals L_{i1..i beta_i}, maps are
// the scalar matrices.
struct StarComplex {
  VariableContext ring;
  std::vector<std::vector<ExponentVector>> shifts;  // a_ij from the resolution of S/I
  std::vector<std::vector<MonomialIdeal>> ideals;
  std::vector<DenseMatrix> lambdas;  // lambda^(i) at index i - 1

  int length() const noexcept { return static_cast<int>(ideals.size()) - 1; }
};

// L_{1j} = L_j; L_{ij} is the intersection of L_{i-1,k} over the rows k with
// lambda^(i)_{kj} != 0.
StarComplex build_star_complex(const GmpiInstance& instance);

// Well-definedness, lambda lambda = 0 and strand exactness of F* with
// H_0 = T/L, scanning the lcm lattice of every generator involved.
ExactnessReport star_acyclicity(const StarComplex& star, const MonomialIdeal& target);

struct BlockResolution {
  int block = 0;
  int degree = 0;
  IdealResolution resolution;
  bool linear = false;  // degree-linear resolution
  int projdim = 0;      // projective dimension of the ideal L_{l,d}
};

// One minimal resolution per (block, ladder degree), degree 0 included.
class BlockResolutions {
 public:
  BlockResolutions() = default;
  BlockResolutions(const GmpiInstance& instance, std::size_t max_taylor = kDefaultTaylorCap);

  const BlockResolution& at(int block, int degree) const;
  const std::map<std::pair<int, int>, BlockResolution>& entries() const noexcept { return entries_; }
  // Every substitution ideal with positive degree has a linear resolution.
  bool all_linear() const;

 private:
  std::map<std::pair<int, int>, BlockResolution> entries_;
};

// The comparison maps rho between consecutive ladder degrees and their
// composites tau. Each rho is lifted exactly once.
class ComparisonMaps {
 public:
  ComparisonMaps() = default;
  ComparisonMaps(const GmpiInstance& instance, const BlockResolutions& blocks);

  // rho: H^(l, ladder[k]) -> H^(l, ladder[k-1]) on the zero-extended ladder.
  const ChainMap& rho(int block, int ladder_index) const;
  std::size_t num_rho() const noexcept { return rho_.size(); }
  // Identity when the degrees agree, otherwise the composite of consecutive
  // rhos. Throws InvariantViolation if either degree is off the ladder or
  // from < to.
  ChainMap between(int block, int from_degree, int to_degree) const;
  // tau_i^(l,kj): zero if lambda^(i)_{kj} = 0, else between(a_ij(l), a_{i-1,k}(l)).
  ChainMap tau(const GmpiInstance& instance, const BlockResolutions& blocks, int i, int block, int k, int j) const;

 private:
  std::vector<std::vector<int>> ladders_;
  std::map<std::pair<int, int>, ChainMap> rho_;
  std::map<std::pair<int, int>, ChainMap> identity_;
};

// Columns G^(c) = direct sum over s of G^(c,s) = tensor_l H^(l, a_cs(l));
// horizontal maps sigma_c^(k,s) = lambda^(c)_{ks} (tau (x) ... (x) tau).
struct DoubleComplex {
  VariableContext ring;
  std::vector<std::vector<ExponentVector>> column_shifts;
  std::vector<std::vector<FreeComplex>> columns;
  std::vector<std::vector<std::vector<Rational>>> augmentations;  // row-0 augmentation per summand
  // sigma[c] for c >= 1: (target summand k, source summand s) -> chain map.
  std::vector<std::map<std::pair<int, int>, ChainMap>> sigma;
  std::vector<DenseMatrix> lambdas;

  int num_columns() const noexcept { return static_cast<int>(columns.size()); }
};

DoubleComplex build_double_complex(const GmpiInstance& instance, const BlockResolutions& blocks,
                                   const ComparisonMaps& maps);

struct Verdict {
  bool ok = true;
  std::string witness;
};

// sigma_{c-1} o sigma_c = 0 for every column.
Verdict sigma_squares_to_zero(const DoubleComplex& d);
// Every sigma entry has a monomial factor of positive degree.
Verdict sigma_minimality(const DoubleComplex& d);
// Every sigma component commutes with the column differentials.
Verdict sigma_chain_maps(const DoubleComplex& d);
// In row 0, augmentation o sigma = d* o augmentation.
Verdict sigma_covers_star(const DoubleComplex& d);

// Tot(D)_k = direct sum of D(row, column) over row + column = k; the
// differential is vertical + (-1)^row * horizontal.
FreeComplex total_complex(const DoubleComplex& d);

struct ConstructionOptions {
  std::size_t max_taylor = kDefaultTaylorCap;
  // Assert d o d = 0, minimality and exactness of Tot(D) while building.
  bool verify_total = true;
  ScanMode scan = ScanMode::kAuto;
};

// The full pipeline for one instance.
class GmpiConstruction {
 public:
  explicit GmpiConstruction(GmpiInstance instance, ConstructionOptions options = {});

  const GmpiInstance& instance() const noexcept { return instance_; }
  const StarComplex& star() const noexcept { return star_; }
  const BlockResolutions& blocks() const noexcept { return blocks_; }
  const ComparisonMaps& comparisons() const noexcept { return maps_; }
  const DoubleComplex& double_complex() const noexcept { return double_; }
  const FreeComplex& total() const noexcept { return total_; }
  const ExactnessReport& total_exactness() const noexcept { return exactness_; }
  const ConstructionOptions& options() const noexcept { return options_; }
  // Graded Betti table of T/L read off Tot(D).
  const BettiTable& betti() const noexcept { return betti_; }
  const BettiTable& inducing_betti() const noexcept { return inducing_betti_; }
  bool hypothesis_holds() const { return blocks_.all_linear(); }

 private:
  GmpiInstance instance_;
  ConstructionOptions options_;
  StarComplex star_;
  BlockResolutions blocks_;
  ComparisonMaps maps_;
  DoubleComplex double_;
  FreeComplex total_;
  ExactnessReport exactness_;
  BettiTable betti_;
  BettiTable inducing_betti_;
};

struct RegularityResult {
  int reg_inducing = 0;
  int reg_total = 0;
  bool hypothesis = false;
  bool equal() const noexcept { return reg_inducing == reg_total; }
};
RegularityResult gmpi_regularity(const GmpiConstruction& c);

struct ProjdimResult {
  int formula = 0;     // max over (i, j) of sum_l pd L_{l,a_ij(l)} + i
  int from_total = 0;  // read off Tot(D)
};
ProjdimResult gmpi_projdim(const GmpiConstruction& c);

struct LinearityResult {
  bool inducing_linear = false;
  bool total_linear = false;
  bool hypothesis = false;
};
LinearityResult gmpi_linearity(const GmpiConstruction& c);

// t_k(L) = max{k + t_0(I), (k-1) + t_1(I), ..., t_k(I)} with ideal indexing.
Verdict top_degree_formula(const GmpiConstruction& c);

}  // namespace gmpi

#endif  // GMPI_CONSTRUCTION_HPP
