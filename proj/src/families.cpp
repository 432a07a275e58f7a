#include "gmpi/families.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "gmpi/error.hpp"

namespace gmpi {

namespace {

void for_each_composition(int vars, int d, const std::function<bool(int, int)>& allowed,
                          const std::function<void(const ExponentVector&)>& emit) {
  ExponentVector cur(static_cast<std::size_t>(vars));
  std::function<void(int, int)> go = [&](int v, int left) {
    if (v == vars - 1) {
      if (!allowed(v, left)) return;
      cur[v] = left;
      emit(cur);
      cur[v] = 0;
      return;
    }
    for (int e = left; e >= 0; --e) {
      if (!allowed(v, e)) continue;
      cur[v] = e;
      go(v + 1, left - e);
    }
    cur[v] = 0;
  };
  if (vars > 0) go(0, d);
}

std::vector<ExponentVector> monomials_of_degree(int vars, int d) {
  std::vector<ExponentVector> out;
  for_each_composition(vars, d, [](int, int) { return true; }, [&](const ExponentVector& e) { out.push_back(e); });
  return out;
}

bool linear_at(const MonomialIdeal& ideal, int d) {
  return is_linear_resolution(betti_table(minimal_resolution(ideal)), d);
}

}  // namespace

MonomialIdeal squarefree_veronese(const VariableContext& ctx, int d) {
  if (d < 0 || d > ctx.num_vars()) {
    throw InputError("squarefree Veronese needs 0 <= d <= " + std::to_string(ctx.num_vars()));
  }
  std::vector<ExponentVector> gens;
  for_each_composition(ctx.num_vars(), d, [](int, int e) { return e <= 1; },
                       [&](const ExponentVector& e) { gens.push_back(e); });
  return MonomialIdeal(ctx, std::move(gens));
}

MonomialIdeal power_of_maximal(const VariableContext& ctx, int d) {
  if (d < 0) throw InputError("power of the maximal ideal needs d >= 0");
  return MonomialIdeal(ctx, monomials_of_degree(ctx.num_vars(), d));
}

MonomialIdeal lex_segment_stable(const VariableContext& ctx, int d, int count) {
  if (d < 1) throw InputError("lex segment needs d >= 1");
  std::vector<ExponentVector> all = monomials_of_degree(ctx.num_vars(), d);
  std::sort(all.begin(), all.end(), canonical_before);
  if (count < 1 || count > static_cast<int>(all.size())) {
    throw InputError("lex segment count must lie in 1.." + std::to_string(all.size()));
  }
  std::set<ExponentVector> closed(all.begin(), all.begin() + count);
  std::vector<ExponentVector> queue(closed.begin(), closed.end());
  while (!queue.empty()) {
    ExponentVector m = queue.back();
    queue.pop_back();
    for (std::size_t j = 1; j < m.size(); ++j) {
      if (m[j] == 0) continue;
      for (std::size_t i = 0; i < j; ++i) {
        ExponentVector next = m;
        --next[j];
        ++next[i];
        if (closed.insert(next).second) queue.push_back(next);
      }
    }
  }
  return MonomialIdeal(ctx, {closed.begin(), closed.end()});
}

MonomialIdeal veronese_type(std::span<const int> caps, int t) {
  if (caps.empty()) throw InputError("Veronese-type ideal needs at least one variable");
  if (t < 1) throw InputError("Veronese-type ideal needs t >= 1");
  const int bound = (t + 1) / 2;
  std::vector<ExponentVector> gens;
  for_each_composition(static_cast<int>(caps.size()), t,
                       [&](int v, int e) { return e <= std::min(bound, caps[v]); },
                       [&](const ExponentVector& e) { gens.push_back(e); });
  if (gens.empty()) throw InputError("no exponent vector satisfies the Veronese-type bounds");
  return MonomialIdeal(VariableContext::standard(static_cast<int>(caps.size())), std::move(gens));
}

MonomialIdeal path_ideal_direct(std::span<const int> parts, int t) {
  if (t < 2) throw InputError("path ideals need t >= 2");
  const VariableContext ctx = VariableContext::with_block_sizes(parts);
  const int n = ctx.num_vars();
  std::vector<int> part_of(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) part_of[v] = ctx.block_position(v).first;

  std::set<ExponentVector> found;
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  ExponentVector cur(static_cast<std::size_t>(n));
  std::function<void(int, int)> extend = [&](int last, int len) {
    if (len == t) {
      found.insert(cur);
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v] || (last >= 0 && part_of[v] == part_of[last])) continue;
      used[v] = 1;
      cur[v] = 1;
      extend(v, len + 1);
      used[v] = 0;
      cur[v] = 0;
    }
  };
  extend(-1, 0);
  if (found.empty()) throw InputError("the graph has no path on " + std::to_string(t) + " vertices");
  return MonomialIdeal(ctx, {found.begin(), found.end()});
}

GmpiInstance path_ideal_instance(std::span<const int> parts, int t) {
  if (t < 2) throw InputError("path ideals need t >= 2");
  const MonomialIdeal inducing = veronese_type(parts, t);
  const VariableContext ring = VariableContext::with_block_sizes(parts);
  const std::vector<BlockFamily> families(parts.size(), BlockFamily{FamilyKind::kSquarefreeVeronese});
  return GmpiInstance::validate(inducing, ring, substitutions_from(ring, inducing, families));
}

PathIdealComparison path_ideal_complete_multipartite(std::span<const int> parts, int t) {
  return {path_ideal_direct(parts, t), path_ideal_instance(parts, t).ideal()};
}

GmpiInstance mixed_product_instance(std::span<const int> sizes, std::span<const int> d,
                                    std::span<const int> delta) {
  if (d.size() != sizes.size() || delta.size() != sizes.size()) {
    throw InputError("mixed product: degree vectors must have one entry per block");
  }
  const int n = static_cast<int>(sizes.size());
  const MonomialIdeal inducing(VariableContext::standard(n),
                               {ExponentVector(std::vector<int>(d.begin(), d.end())),
                                ExponentVector(std::vector<int>(delta.begin(), delta.end()))});
  const VariableContext ring = VariableContext::with_block_sizes(sizes);
  const std::vector<BlockFamily> families(sizes.size(), BlockFamily{FamilyKind::kSquarefreeVeronese});
  return GmpiInstance::validate(inducing, ring, substitutions_from(ring, inducing, families));
}

GmpiInstance expansion_instance(const MonomialIdeal& inducing, std::span<const int> sizes) {
  const VariableContext ring = VariableContext::with_block_sizes(sizes);
  const std::vector<BlockFamily> families(sizes.size(), BlockFamily{FamilyKind::kPowerOfMaximal});
  return GmpiInstance::validate(inducing, ring, substitutions_from(ring, inducing, families));
}

FamilyKind parse_family_kind(const std::string& tag) {
  if (tag == "squarefree-veronese") return FamilyKind::kSquarefreeVeronese;
  if (tag == "power-of-maximal") return FamilyKind::kPowerOfMaximal;
  if (tag == "lex-segment") return FamilyKind::kLexSegment;
  throw InputError("unknown substitution family '" + tag + "'");
}

std::string family_tag(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::kSquarefreeVeronese:
      return "squarefree-veronese";
    case FamilyKind::kPowerOfMaximal:
      return "power-of-maximal";
    case FamilyKind::kLexSegment:
      return "lex-segment";
  }
  return "";
}

MonomialIdeal BlockFamily::ideal(const VariableContext& block, int d) const {
  if (d == 0) return MonomialIdeal::unit(block);
  switch (kind) {
    case FamilyKind::kSquarefreeVeronese:
      return squarefree_veronese(block, d);
    case FamilyKind::kPowerOfMaximal:
      return power_of_maximal(block, d);
    case FamilyKind::kLexSegment:
      if (d < base_degree) {
        throw InputError("lex-segment family starts at degree " + std::to_string(base_degree));
      }
      return product(lex_segment_stable(block, base_degree, count), power_of_maximal(block, d - base_degree));
  }
  throw InputError("unknown family kind");
}

SubstitutionFamily substitutions_from(const VariableContext& ring, const MonomialIdeal& inducing,
                                      std::span<const BlockFamily> families) {
  if (static_cast<int>(families.size()) != ring.num_blocks()) {
    throw InputError("one substitution family per block required");
  }
  SubstitutionFamily out;
  for (const auto& g : inducing.gens()) {
    if (static_cast<int>(g.size()) != ring.num_blocks()) throw InputError("inducing ideal has the wrong length");
    for (int l = 0; l < ring.num_blocks(); ++l) {
      if (g[l] > 0 && !out.has(l, g[l])) out.set(l, g[l], families[l].ideal(ring.block_context(l), g[l]));
    }
  }
  return out;
}

RandomInstance random_instance(std::uint64_t seed, const RandomBounds& bounds) {
  std::mt19937_64 rng(seed);
  auto draw = [&](int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); };
  for (int attempt = 0; attempt < 100000; ++attempt) {
    const int n = 1 + draw(bounds.max_blocks);
    std::vector<int> sizes;
    for (int l = 0; l < n; ++l) sizes.push_back(1 + draw(bounds.max_block_size));
    const int k = std::min(bounds.max_generators, 2 + draw(bounds.max_generators - 1));
    std::vector<ExponentVector> gens;
    for (int g = 0; g < k; ++g) {
      ExponentVector e(static_cast<std::size_t>(n));
      while (e.is_zero()) {
        for (int l = 0; l < n; ++l) e[l] = draw(bounds.max_block_degree + 1);
      }
      gens.push_back(e);
    }
    const MonomialIdeal inducing(VariableContext::standard(n), gens);
    if (inducing.size() < std::min<std::size_t>(2, gens.size())) continue;
    const VariableContext ring = VariableContext::with_block_sizes(sizes);

    std::vector<BlockFamily> families;
    for (int l = 0; l < n; ++l) {
      int low = 0, high = 0;
      for (const auto& g : inducing.gens()) {
        if (g[l] > 0) low = low == 0 ? g[l] : std::min(low, g[l]);
        high = std::max(high, g[l]);
      }
      BlockFamily f{static_cast<FamilyKind>(draw(3))};
      if (f.kind == FamilyKind::kSquarefreeVeronese && high > sizes[l]) f.kind = FamilyKind::kPowerOfMaximal;
      if (f.kind == FamilyKind::kLexSegment) {
        f.base_degree = std::max(low, 1);
        const int available = static_cast<int>(monomials_of_degree(sizes[l], f.base_degree).size());
        f.count = 1 + draw(available);
      }
      families.push_back(f);
    }

    const SubstitutionFamily family = substitutions_from(ring, inducing, families);
    bool ok = true;
    for (const auto& [key, ideal] : family.entries()) {
      if (ideal.size() > bounds.max_ideal_generators || !linear_at(ideal, key.second)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    GmpiInstance inst = GmpiInstance::validate(inducing, ring, family);
    if (inst.ideal().size() > bounds.max_ideal_generators) continue;
    return RandomInstance{seed, std::move(inst), std::move(families)};
  }
  throw InvariantViolation("random_instance: no admissible draw for seed " + std::to_string(seed));
}

}  // namespace gmpi
