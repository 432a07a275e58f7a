#ifndef GMPI_TESTS_SUPPORT_HPP
#define GMPI_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "gmpi/monomial.hpp"

namespace gmpi::test {

inline MonomialIdeal ideal(const VariableContext& ctx, std::vector<ExponentVector> gens) {
  return MonomialIdeal(ctx, std::move(gens));
}

inline ExponentVector random_vector(std::mt19937_64& rng, std::size_t n, int max_degree) {
  ExponentVector v(n);
  int budget = static_cast<int>(rng() % static_cast<std::uint64_t>(max_degree + 1));
  while (budget-- > 0) ++v[rng() % n];
  return v;
}

inline std::vector<ExponentVector> random_vectors(std::mt19937_64& rng, std::size_t count, std::size_t n,
                                                  int max_degree) {
  std::vector<ExponentVector> out;
  while (out.size() < count) {
    ExponentVector v = random_vector(rng, n, max_degree);
    if (!v.is_zero()) out.push_back(v);
  }
  return out;
}

// Every point of the box [0, bound].
inline std::vector<ExponentVector> box(const ExponentVector& bound) {
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

// Membership by scanning generators, independent of MonomialIdeal::contains.
inline bool in_span(const std::vector<ExponentVector>& gens, const ExponentVector& m) {
  for (const auto& g : gens) {
    bool ok = true;
    for (std::size_t i = 0; i < m.size(); ++i) ok = ok && g[i] <= m[i];
    if (ok) return true;
  }
  return false;
}

// Divisibility-minimal elements of a set, by pairwise scan.
inline std::vector<ExponentVector> minimal_elements(const std::vector<ExponentVector>& set) {
  std::vector<ExponentVector> out;
  for (const auto& a : set) {
    bool minimal = true;
    for (const auto& b : set) {
      if (a == b) continue;
      bool divides = true;
      for (std::size_t i = 0; i < a.size(); ++i) divides = divides && b[i] <= a[i];
      if (divides) minimal = false;
    }
    if (minimal && std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
  }
  std::sort(out.begin(), out.end(), canonical_before);
  return out;
}

// Rank over F_p, p = 1000003, for small integer matrices.
inline int rank_mod_p(std::vector<std::vector<std::int64_t>> m) {
  constexpr std::int64_t p = 1000003;
  auto power = [](std::int64_t a, std::int64_t e) {
    std::int64_t r = 1;
    a %= p;
    for (; e > 0; e >>= 1, a = a * a % p) {
      if (e & 1) r = r * a % p;
    }
    return r;
  };
  int rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(m.size()); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.size() && ((m[pivot][c] % p) + p) % p == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    const std::int64_t inv = power(((m[rank][c] % p) + p) % p, p - 2);
    for (auto& x : m[rank]) x = ((x % p) + p) % p * inv % p;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == static_cast<std::size_t>(rank)) continue;
      const std::int64_t f = ((m[r][c] % p) + p) % p;
      if (f == 0) continue;
      for (std::size_t k = 0; k < cols; ++k) m[r][k] = ((m[r][k] - f * m[rank][k]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

// Multigraded Betti numbers of S/I from the reduced homology of the upper
// Koszul simplicial complexes K^b = {F squarefree : x^(b - F) in I}:
// beta_{k, b}(S/I) = dim H~_{k-2}(K^b). Degrees b range over the lcm lattice.
inline std::map<std::pair<int, ExponentVector>, int> koszul_betti(const std::vector<ExponentVector>& gens) {
  const std::size_t n = gens.front().size();
  std::vector<ExponentVector> lattice{ExponentVector(n)};
  for (const auto& g : gens) {
    const std::size_t size = lattice.size();
    for (std::size_t i = 0; i < size; ++i) {
      ExponentVector l = lattice[i];
      for (std::size_t v = 0; v < n; ++v) l[v] = std::max(l[v], g[v]);
      if (std::find(lattice.begin(), lattice.end(), l) == lattice.end()) lattice.push_back(l);
    }
  }
  std::map<std::pair<int, ExponentVector>, int> out;
  out[{0, ExponentVector(n)}] = 1;
  for (const auto& b : lattice) {
    if (b.is_zero()) continue;
    // faces[j + 1]: faces of dimension j, as bitmasks.
    std::vector<std::vector<unsigned>> faces(n + 1);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      ExponentVector m = b;
      bool ok = true;
      for (std::size_t v = 0; v < n; ++v) {
        if (mask >> v & 1u) {
          if (m[v] == 0) ok = false;
          else --m[v];
        }
      }
      if (ok && in_span(gens, m)) faces[static_cast<std::size_t>(__builtin_popcount(mask))].push_back(mask);
    }
    // boundary from size s to size s - 1
    auto boundary_rank = [&](std::size_t s) {
      if (s == 0 || s > n || faces[s].empty() || faces[s - 1].empty()) return 0;
      std::vector<std::vector<std::int64_t>> m(faces[s - 1].size(), std::vector<std::int64_t>(faces[s].size()));
      for (std::size_t c = 0; c < faces[s].size(); ++c) {
        int sign = 1;
        for (std::size_t v = 0; v < n; ++v) {
          if (!(faces[s][c] >> v & 1u)) continue;
          const unsigned sub = faces[s][c] & ~(1u << v);
          const auto it = std::find(faces[s - 1].begin(), faces[s - 1].end(), sub);
          if (it != faces[s - 1].end()) m[static_cast<std::size_t>(it - faces[s - 1].begin())][c] = sign;
          sign = -sign;
        }
      }
      return rank_mod_p(std::move(m));
    };
    for (std::size_t s = 0; s <= n; ++s) {
      const int h = static_cast<int>(faces[s].size()) - boundary_rank(s) - boundary_rank(s + 1);
      if (h > 0) out[{static_cast<int>(s) + 1, b}] = h;
    }
  }
  return out;
}

}  // namespace gmpi::test

#endif  // GMPI_TESTS_SUPPORT_HPP
