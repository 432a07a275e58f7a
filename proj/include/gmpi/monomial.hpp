#ifndef GMPI_MONOMIAL_HPP
#define GMPI_MONOMIAL_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gmpi {

// Named, block-partitioned variable set. Block i holds variables
// x_{i,1..m_i}; variables are flattened block after block.
class VariableContext {
 public:
  struct Block {
    std::string name;
    int size = 1;
    friend bool operator==(const Block&, const Block&) = default;
  };

  VariableContext() = default;
  explicit VariableContext(std::vector<Block> blocks);

  // n blocks of size one named x1..xn (or x,y,z for n <= 3).
  static VariableContext standard(int n);
  // Blocks of the given sizes, named x1, x2, ... (or x,y,z for n <= 3).
  static VariableContext with_block_sizes(std::span<const int> sizes);

  int num_blocks() const noexcept { return static_cast<int>(blocks_.size()); }
  int num_vars() const noexcept { return num_vars_; }
  const Block& block(int i) const { return blocks_.at(i); }
  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  int block_size(int i) const { return blocks_.at(i).size; }
  int offset(int i) const { return offsets_.at(i); }

  int flat_index(int block, int position) const;
  std::pair<int, int> block_position(int flat) const;

  // Context of block i alone, as a one-block context of the same name.
  VariableContext block_context(int i) const;

  std::string variable_name(int flat) const;

  friend bool operator==(const VariableContext& a, const VariableContext& b) {
    return a.blocks_ == b.blocks_;
  }

 private:
  std::vector<Block> blocks_;
  std::vector<int> offsets_;
  std::vector<int> owner_;  // flat index -> block
  int num_vars_ = 0;
};

// A point of N^N: a monomial exponent or a multidegree.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t n) : e_(n, 0) {}
  ExponentVector(std::initializer_list<int> values);
  explicit ExponentVector(std::vector<int> values);

  std::size_t size() const noexcept { return e_.size(); }
  int operator[](std::size_t i) const { return e_[i]; }
  int& operator[](std::size_t i) { return e_[i]; }
  const std::vector<int>& values() const noexcept { return e_; }
  auto begin() const noexcept { return e_.begin(); }
  auto end() const noexcept { return e_.end(); }

  int total_degree() const noexcept;
  bool is_zero() const noexcept;

  // Componentwise sum (monomial product).
  ExponentVector operator+(const ExponentVector& other) const;
  // Componentwise difference; throws unless other divides *this.
  ExponentVector operator-(const ExponentVector& other) const;

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  // Plain lexicographic comparison of the exponent lists.
  friend auto operator<=>(const ExponentVector& a, const ExponentVector& b) {
    return a.e_ <=> b.e_;
  }

 private:
  std::vector<int> e_;
};

struct ExponentVectorHash {
  std::size_t operator()(const ExponentVector& v) const noexcept;
};

// Canonical generator order: lexicographic with x_1 > x_2 > ..., largest
// first, so (x^2, xy, y^2) is already sorted.
inline bool canonical_before(const ExponentVector& a, const ExponentVector& b) { return a > b; }

bool divides(const ExponentVector& a, const ExponentVector& b);
ExponentVector lcm(const ExponentVector& a, const ExponentVector& b);
ExponentVector gcd(const ExponentVector& a, const ExponentVector& b);
int block_degree(const VariableContext& ctx, const ExponentVector& a, int block);
// Vector of block degrees (a(1), ..., a(n)).
ExponentVector block_degrees(const VariableContext& ctx, const ExponentVector& a);

std::string to_string(const VariableContext& ctx, const ExponentVector& a);
std::string to_string(const ExponentVector& a);

// Monomial ideal given by its minimal generating set, sorted canonically.
// The zero ideal has no generators; the unit ideal has the zero vector.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  // Minimalizes `gens`; throws ContextMismatch on a length mismatch.
  MonomialIdeal(VariableContext ctx, std::vector<ExponentVector> gens);

  static MonomialIdeal unit(VariableContext ctx);
  static MonomialIdeal zero(VariableContext ctx);

  const VariableContext& context() const noexcept { return ctx_; }
  const std::vector<ExponentVector>& gens() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept;
  bool is_proper_nonzero() const noexcept { return !is_zero() && !is_unit(); }

  bool contains(const ExponentVector& m) const;
  bool contains(const MonomialIdeal& other) const;

  // The common degree of all generators, or -1 if mixed or zero ideal.
  int generation_degree() const noexcept;

  std::string to_string() const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.ctx_ == b.ctx_ && a.gens_ == b.gens_;
  }

 private:
  VariableContext ctx_;
  std::vector<ExponentVector> gens_;
};

// Inclusion-minimal antichain of `gens` under divisibility, canonically sorted.
std::vector<ExponentVector> minimal_generators(std::vector<ExponentVector> gens);
MonomialIdeal minimalize(const VariableContext& ctx, std::vector<ExponentVector> gens);

bool membership(const ExponentVector& m, const MonomialIdeal& ideal);
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
// n-ary intersection; the empty intersection is the unit ideal of ctx.
MonomialIdeal intersect(const VariableContext& ctx, std::span<const MonomialIdeal> ideals);

// Embed an ideal over block `block` alone into the full context.
MonomialIdeal embed_block(const MonomialIdeal& block_ideal, const VariableContext& full, int block);
ExponentVector embed_block(const ExponentVector& v, const VariableContext& full, int block);
// The block-`block` coordinates of v.
ExponentVector restrict_block(const ExponentVector& v, const VariableContext& full, int block);

}  // namespace gmpi

#endif  // GMPI_MONOMIAL_HPP
