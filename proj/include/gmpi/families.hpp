#ifndef GMPI_FAMILIES_HPP
#define GMPI_FAMILIES_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "gmpi/construction.hpp"

namespace gmpi {

// All squarefree monomials of degree d in the variables of ctx.
MonomialIdeal squarefree_veronese(const VariableContext& ctx, int d);
// All monomials of degree d in the variables of ctx.
MonomialIdeal power_of_maximal(const VariableContext& ctx, int d);
// The first `count` degree-d monomials in lex order, closed under
// x_i m / x_j for i < j.
MonomialIdeal lex_segment_stable(const VariableContext& ctx, int d, int count);

// Inducing ideal of the path-ideal example: x^j with sum j = t and
// 0 <= j_i <= min(floor((t + 1) / 2), caps_i).
MonomialIdeal veronese_type(std::span<const int> caps, int t);

// Path ideal I_t of the complete multipartite graph with the given part
// sizes, by enumerating vertex sequences (t vertices per path).
MonomialIdeal path_ideal_direct(std::span<const int> parts, int t);
// The same ideal as a GMPI: veronese_type inducing ideal, squarefree
// Veronese substitutions.
GmpiInstance path_ideal_instance(std::span<const int> parts, int t);

struct PathIdealComparison {
  MonomialIdeal direct;
  MonomialIdeal via_gmpi;
  bool agree() const { return direct == via_gmpi; }
};
PathIdealComparison path_ideal_complete_multipartite(std::span<const int> parts, int t);

// I = (x^d, x^delta) with squarefree Veronese substitutions on blocks of
// the given sizes, so L = I_{d_1} J_{d_2} ... + I_{delta_1} J_{delta_2} ...
GmpiInstance mixed_product_instance(std::span<const int> sizes, std::span<const int> d,
                                    std::span<const int> delta);
// Every x_l^a replaced by the a-th power of the block's maximal ideal.
GmpiInstance expansion_instance(const MonomialIdeal& inducing, std::span<const int> sizes);

enum class FamilyKind { kSquarefreeVeronese, kPowerOfMaximal, kLexSegment };

// Parses the tags "squarefree-veronese", "power-of-maximal", "lex-segment".
FamilyKind parse_family_kind(const std::string& tag);
std::string family_tag(FamilyKind kind);

// One degree-monotone family of substitution ideals over a block.
// kLexSegment uses L_d = lex_segment_stable(d0, count) * m^(d - d0).
struct BlockFamily {
  FamilyKind kind = FamilyKind::kPowerOfMaximal;
  int count = 1;     // kLexSegment only
  int base_degree = 1;  // kLexSegment only

  MonomialIdeal ideal(const VariableContext& block, int d) const;
};

// Fills in L_{l,d} for every positive ladder degree of every block.
SubstitutionFamily substitutions_from(const VariableContext& ring, const MonomialIdeal& inducing,
                                      std::span<const BlockFamily> families);

struct RandomBounds {
  int max_blocks = 3;
  int max_block_size = 4;
  int max_block_degree = 3;
  int max_generators = 5;  // |G(I)| >= 2 whenever this allows
  std::size_t max_ideal_generators = 14;  // cap on |G(L)| and on each |G(L_{l,d})|
};

struct RandomInstance {
  std::uint64_t seed = 0;
  GmpiInstance instance;
  std::vector<BlockFamily> families;
};

// Deterministic in `seed`. Every substitution ideal is checked to have a
// linear resolution; draws that break a bound are redrawn from the same
// generator.
RandomInstance random_instance(std::uint64_t seed, const RandomBounds& bounds = {});

}  // namespace gmpi

#endif  // GMPI_FAMILIES_HPP
