#ifndef GMPI_COMPLEX_HPP
#define GMPI_COMPLEX_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gmpi/linalg.hpp"
#include "gmpi/monomial.hpp"

namespace gmpi {

// Default cap on |G(I)| for Taylor-based resolutions (2^14 subsets).
inline constexpr std::size_t kDefaultTaylorCap = 14;

// Multihomogeneous map between multigraded free modules. Entry (r, c) is
// scalars(r, c) * x^(col_shift[c] - row_shift[r]); the monomial factor is
// implied by the shifts and must be a genuine monomial.
struct MonomialMatrix {
  std::vector<ExponentVector> row_shifts;
  std::vector<ExponentVector> col_shifts;
  SparseMatrix scalars;

  MonomialMatrix() = default;
  MonomialMatrix(std::vector<ExponentVector> rows, std::vector<ExponentVector> cols);
  MonomialMatrix(std::vector<ExponentVector> rows, std::vector<ExponentVector> cols, SparseMatrix s);

  int rows() const noexcept { return scalars.rows(); }
  int cols() const noexcept { return scalars.cols(); }
  ExponentVector factor(int r, int c) const { return col_shifts[c] - row_shifts[r]; }

  // Every stored entry has row_shift <= col_shift.
  bool is_homogeneous() const;
  // Every stored entry has a monomial factor of positive degree.
  bool lies_in_maximal_ideal() const;
  // First stored entry violating homogeneity (resp. minimality), if any.
  std::optional<std::pair<int, int>> first_inhomogeneous_entry() const;
  std::optional<std::pair<int, int>> first_unit_entry() const;
};

// a o b for b : A -> B and a : B -> C. Shifts must line up.
MonomialMatrix compose(const MonomialMatrix& a, const MonomialMatrix& b);

// Finite complex of multigraded free modules F_p -> ... -> F_0.
class FreeComplex {
 public:
  FreeComplex() = default;
  // `diffs[i - 1]` is the differential F_i -> F_{i-1}.
  FreeComplex(VariableContext ctx, std::vector<std::vector<ExponentVector>> shifts, std::vector<SparseMatrix> diffs);

  const VariableContext& context() const noexcept { return ctx_; }
  // Index p of the last position (-1 for the empty complex).
  int length() const noexcept { return static_cast<int>(shifts_.size()) - 1; }
  int rank(int i) const;
  const std::vector<ExponentVector>& shifts(int i) const;
  const SparseMatrix& scalars(int i) const;
  MonomialMatrix differential(int i) const;

  // Mutable access, used to build corrupted fixtures in tests.
  SparseMatrix& mutable_scalars(int i) { return diffs_.at(i - 1); }
  std::vector<ExponentVector>& mutable_shifts(int i) { return shifts_.at(i); }

  bool is_homogeneous() const;
  bool is_minimal() const;
  // diff(i-1) o diff(i) == 0 for all i, computed symbolically.
  bool squares_to_zero() const;
  // All shifts, every position.
  std::vector<ExponentVector> all_shifts() const;

 private:
  VariableContext ctx_;
  std::vector<std::vector<ExponentVector>> shifts_;
  std::vector<SparseMatrix> diffs_;
  static const std::vector<ExponentVector> kEmpty;
};

FreeComplex taylor_complex(const MonomialIdeal& ideal, std::size_t max_generators = kDefaultTaylorCap);
// Taylor complex on an explicit generator order; `gens` must be a minimal
// generating set of a proper nonzero ideal.
FreeComplex taylor_complex(const VariableContext& ctx, std::span<const ExponentVector> gens,
                           std::size_t max_generators = kDefaultTaylorCap);

// Cancels unit entries (nonzero scalar, zero monomial factor) one at a time
// until none remain. Scan order: lowest position first, then (row, col)
// lexicographically within repeated passes. A cyclic quotient resolution is
// returned with generator scalars normalized to 1.
FreeComplex minimalize_complex(FreeComplex complex);

// Rescale position-1 basis elements so every entry of diff(1) is 1. Only
// meaningful when F_0 is a single copy of the ring in degree 0.
FreeComplex normalize_generator_scalars(FreeComplex complex);

// minimalize_complex(taylor_complex(ideal)).
FreeComplex minimal_resolution(const MonomialIdeal& ideal, std::size_t max_generators = kDefaultTaylorCap);

// lambda^(i) for i = 1..p, returned at index i - 1.
std::vector<DenseMatrix> scalar_matrices(const FreeComplex& minimal);

// True iff the scalar complex 0 -> K^b_p -> ... -> K^b_1 -> K -> 0 is exact:
// rank l^(i) + rank l^(i+1) = b_i for i >= 1 and rank l^(1) = 1.
// `betti` holds b_0 .. b_p.
struct ScalarExactness {
  bool exact = true;
  int failing_position = -1;
};
ScalarExactness scalar_complex_exactness(std::span<const DenseMatrix> lambdas, std::span<const int> betti);

// Degree-b strand: basis elements with shift <= b and the scalar maps
// between them.
struct StrandComplex {
  ExponentVector degree;
  std::vector<std::vector<int>> basis;  // indices into each position
  std::vector<DenseMatrix> maps;        // maps[i - 1]: basis[i] -> basis[i - 1]
  std::vector<int> dimensions() const;
};
StrandComplex strand(const FreeComplex& complex, const ExponentVector& b);
std::vector<int> homology_dimensions(const StrandComplex& s);

// Homology of coordinate subcomplexes of one fixed complex of Q-vector
// spaces. Ranks are computed modulo a large prime first; when that already
// shows exactness in every positive position the ranks over Q must agree
// (rank_p <= rank_Q and rank_Q(d_i) + rank_Q(d_{i+1}) <= dim), otherwise the
// computation is repeated exactly. Requires each restriction to be a
// subcomplex of a complex with d o d = 0 over Q.
class RestrictedHomology {
 public:
  RestrictedHomology(std::vector<int> dims, std::vector<SparseMatrix> maps);
  // selected[i]: sorted basis indices at position i.
  std::vector<int> homology(const std::vector<std::vector<int>>& selected) const;

 private:
  struct ModEntry {
    int row;
    std::uint64_t value;
  };
  std::vector<int> exact_homology(const std::vector<std::vector<int>>& selected) const;

  std::vector<int> dims_;
  std::vector<SparseMatrix> maps_;                          // maps_[i - 1]: i -> i - 1
  std::vector<std::vector<std::vector<ModEntry>>> mod_cols_;  // per map, per column
  bool mod_ok_ = true;
};

// All lcms of subsets of `atoms`, including the zero vector for the empty
// subset. Throws SizeLimitExceeded beyond `cap` elements.
std::vector<ExponentVector> lcm_lattice(std::span<const ExponentVector> atoms, std::size_t length,
                                        std::size_t cap = 400000);

enum class ScanMode { kAuto, kBox, kLcmLattice };

struct ExactnessReport {
  bool ok = true;
  std::optional<ExponentVector> witness;
  int position = -1;
  std::string reason;
  std::size_t degrees_checked = 0;
};

// Checks that `complex` resolves S/expect_h0: strand homology vanishes in
// positive positions and H_0 at degree b is K iff x^b is not in expect_h0.
// kBox scans every b in [0, B] for B the lcm of all shifts and generators;
// kLcmLattice scans the lcm lattice of the same set, which realizes every
// distinct strand. kAuto picks the box when it is small.
ExactnessReport exactness_check(const FreeComplex& complex, const MonomialIdeal& expect_h0,
                                ScanMode mode = ScanMode::kAuto);

// Alternating sum of strand dimensions at b.
int strand_euler_characteristic(const FreeComplex& complex, const ExponentVector& b);

// Graded and multigraded Betti numbers of a minimal resolution of S/I.
struct BettiTable {
  std::map<std::pair<int, int>, int> graded;
  std::map<std::pair<int, ExponentVector>, int> multigraded;

  int max_position() const;
  // t_k: largest internal degree in position k, if the position is nonzero.
  std::optional<int> top_degree(int k) const;
  std::optional<int> bottom_degree(int k) const;
  int total(int k) const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

BettiTable betti_table(const FreeComplex& minimal);
// reg computed from a quotient-indexed table; of_ideal selects reg I
// (= reg S/I + 1) rather than reg S/I.
int regularity(const BettiTable& table, bool of_ideal = true);
int projective_dimension(const BettiTable& table);
// Every nonzero beta_{k, j}(I) sits at j = d + k.
bool is_linear_resolution(const BettiTable& table, int d);

// Minimal resolution of an ideal J (not of S/J): position 0 carries the
// generators, `augmentation[g]` is the scalar c with e_g -> c x^{shift}.
struct IdealResolution {
  MonomialIdeal ideal;
  FreeComplex complex;
  std::vector<Rational> augmentation;

  int length() const noexcept { return complex.length(); }
};

IdealResolution ideal_resolution(const MonomialIdeal& ideal, std::size_t max_generators = kDefaultTaylorCap);

// Degree-0 chain map; components[i] maps source position i to target position i.
struct ChainMap {
  std::vector<MonomialMatrix> components;
};

ChainMap identity_map(const FreeComplex& complex);
ChainMap compose(const ChainMap& outer, const ChainMap& inner);
ChainMap zero_map(const FreeComplex& source, const FreeComplex& target);
bool equal_maps(const ChainMap& a, const ChainMap& b);
// target.d o f_i == f_{i-1} o source.d for every i, and every component
// homogeneous.
bool is_chain_map(const ChainMap& f, const FreeComplex& source, const FreeComplex& target);

// Chain map extending the inclusion source.ideal <= target.ideal. Each
// source generator goes to the first target generator dividing it; higher
// components solve the degree-e strand system of the target differential
// with a fixed-pivot echelon solve.
ChainMap lift_chain_map(const IdealResolution& source, const IdealResolution& target);

// Tensor product of complexes over disjoint variable blocks. Factor l lives
// over full.block_context(l); Koszul signs on the differential.
class TensorBasis {
 public:
  explicit TensorBasis(std::vector<const FreeComplex*> factors);

  int length() const noexcept { return length_; }
  // Tuples at total position k, each tuple flattened as (pos_1, idx_1, ..., pos_n, idx_n).
  const std::vector<std::vector<int>>& tuples(int k) const { return tuples_.at(k); }
  int index_of(int k, const std::vector<int>& tuple) const;
  const std::vector<const FreeComplex*>& factors() const noexcept { return factors_; }

 private:
  std::vector<const FreeComplex*> factors_;
  int length_ = 0;
  std::vector<std::vector<std::vector<int>>> tuples_;
  std::vector<std::map<std::vector<int>, int>> lookup_;
};

FreeComplex tensor_product(const TensorBasis& basis, const VariableContext& full);
// f_1 (x) ... (x) f_n, no signs (every f_l has degree 0).
ChainMap tensor_product(std::span<const ChainMap* const> maps, const TensorBasis& source,
                        const TensorBasis& target, const VariableContext& full);

}  // namespace gmpi

#endif  // GMPI_COMPLEX_HPP
