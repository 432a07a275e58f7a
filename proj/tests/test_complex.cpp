#include <doctest.h>

#include <algorithm>
#include <random>

#include "gmpi/complex.hpp"
#include "gmpi/error.hpp"
#include "support.hpp"

using namespace gmpi;
using gmpi::test::ideal;

namespace {

const VariableContext kX = VariableContext::standard(1);
const VariableContext kXY = VariableContext::standard(2);
const VariableContext kXYZ = VariableContext::standard(3);

std::vector<int> ranks(const FreeComplex& c) {
  std::vector<int> out;
  for (int i = 0; i <= c.length(); ++i) out.push_back(c.rank(i));
  return out;
}

std::vector<int> betti_totals(const FreeComplex& c) { return ranks(c); }

MonomialIdeal m2() { return ideal(kXY, {{2, 0}, {1, 1}, {0, 2}}); }

}  // namespace

TEST_CASE("taylor complex of a principal ideal") {
  const auto T = taylor_complex(ideal(kX, {{1}}));
  CHECK(ranks(T) == std::vector<int>{1, 1});
  CHECK(T.shifts(1) == std::vector<ExponentVector>{{1}});
  CHECK(T.squares_to_zero());
  CHECK(exactness_check(T, ideal(kX, {{1}})).ok);
}

TEST_CASE("taylor complex of (x, y) is the Koszul complex") {
  const auto T = taylor_complex(ideal(kXY, {{1, 0}, {0, 1}}));
  CHECK(ranks(T) == std::vector<int>{1, 2, 1});
  CHECK(T.shifts(2) == std::vector<ExponentVector>{{1, 1}});
  CHECK(T.is_minimal());
  CHECK(T.squares_to_zero());
}

TEST_CASE("taylor complex versus minimal resolution") {
  const auto I = ideal(kXY, {{2, 0}, {1, 1}, {0, 3}});
  const auto T = taylor_complex(I);
  CHECK(ranks(T) == std::vector<int>{1, 3, 3, 1});
  CHECK_FALSE(T.is_minimal());
  CHECK(exactness_check(T, I).ok);
  const auto F = minimal_resolution(I);
  CHECK(ranks(F) == std::vector<int>{1, 3, 2});
  CHECK(F.is_minimal());
  CHECK(F.squares_to_zero());
  CHECK(exactness_check(F, I).ok);
  auto shifts = F.shifts(2);
  std::sort(shifts.begin(), shifts.end());
  CHECK(shifts == std::vector<ExponentVector>{{1, 3}, {2, 1}});
}

TEST_CASE("taylor complex rejects oversized or degenerate input") {
  std::vector<ExponentVector> gens;
  for (int i = 0; i <= 15; ++i) gens.push_back({i, 15 - i});
  CHECK_THROWS_AS(taylor_complex(ideal(kXY, gens)), SizeLimitExceeded);
  CHECK_THROWS_AS(taylor_complex(ideal(kXY, gens), 15), SizeLimitExceeded);
  const std::vector<ExponentVector> zero{{0, 0}};
  CHECK_THROWS(taylor_complex(kXY, zero));
}

TEST_CASE("minimal resolutions agree with the simplicial Koszul oracle") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 40; ++trial) {
    const auto gens = test::random_vectors(rng, 2 + rng() % 4, 3, 4);
    const auto I = minimalize(kXYZ, gens);
    if (!I.is_proper_nonzero()) continue;
    const auto F = minimal_resolution(I);
    CAPTURE(I.to_string());
    CHECK(F.is_minimal());
    CHECK(F.squares_to_zero());
    CHECK(exactness_check(F, I).ok);
    CHECK(betti_table(F).multigraded == test::koszul_betti(I.gens()));
  }
}

TEST_CASE("betti numbers do not depend on generator order") {
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 15; ++trial) {
    const auto I = minimalize(kXYZ, test::random_vectors(rng, 4, 3, 4));
    if (!I.is_proper_nonzero()) continue;
    const auto expected = betti_table(minimal_resolution(I));
    std::vector<ExponentVector> order = I.gens();
    for (int k = 0; k < 4; ++k) {
      std::shuffle(order.begin(), order.end(), rng);
      CHECK(betti_table(minimalize_complex(taylor_complex(kXYZ, order))) == expected);
    }
  }
}

TEST_CASE("scalar matrices") {
  const auto F = minimal_resolution(m2());
  const auto lambdas = scalar_matrices(F);
  REQUIRE(lambdas.size() == 2);
  for (int c = 0; c < lambdas[0].cols(); ++c) CHECK(lambdas[0](0, c) == 1);
  CHECK(multiply(lambdas[0], lambdas[1]).is_zero());
  const auto b = betti_totals(F);
  CHECK(scalar_complex_exactness(lambdas, b).exact);

  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 20; ++trial) {
    const auto I = minimalize(kXYZ, test::random_vectors(rng, 4, 3, 4));
    if (!I.is_proper_nonzero()) continue;
    const auto G = minimal_resolution(I);
    const auto ls = scalar_matrices(G);
    for (int c = 0; c < ls[0].cols(); ++c) CHECK(ls[0](0, c) == 1);
    for (std::size_t i = 0; i + 1 < ls.size(); ++i) CHECK(multiply(ls[i], ls[i + 1]).is_zero());
    CHECK(scalar_complex_exactness(ls, betti_totals(G)).exact);
  }
}

TEST_CASE("scalar exactness detects a broken matrix") {
  const auto F = minimal_resolution(ideal(kXYZ, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  auto lambdas = scalar_matrices(F);
  const auto b = betti_totals(F);
  lambdas[1] = DenseMatrix(lambdas[1].rows(), lambdas[1].cols());
  const auto verdict = scalar_complex_exactness(lambdas, b);
  CHECK_FALSE(verdict.exact);
  CHECK(verdict.failing_position >= 1);
}

TEST_CASE("strands") {
  const auto F = minimal_resolution(m2());
  const auto s = strand(F, {1, 1});
  CHECK(s.dimensions() == std::vector<int>{1, 1, 0});
  CHECK(homology_dimensions(s) == std::vector<int>{0, 0, 0});
  const auto t = strand(F, {1, 0});
  CHECK(t.dimensions() == std::vector<int>{1, 0, 0});
  CHECK(homology_dimensions(t) == std::vector<int>{1, 0, 0});
  const auto u = strand(F, {2, 2});
  CHECK(u.dimensions() == std::vector<int>{1, 3, 2});
  CHECK(homology_dimensions(u) == std::vector<int>{0, 0, 0});
}

TEST_CASE("euler characteristic of strands matches membership") {
  std::mt19937_64 rng(109);
  for (int trial = 0; trial < 15; ++trial) {
    const auto gens = test::random_vectors(rng, 3, 3, 3);
    const auto I = minimalize(kXYZ, gens);
    if (!I.is_proper_nonzero()) continue;
    const auto F = minimal_resolution(I);
    for (const auto& b : test::box({4, 4, 4})) {
      CHECK(strand_euler_characteristic(F, b) == (test::in_span(gens, b) ? 0 : 1));
    }
  }
}

TEST_CASE("exactness check finds a corrupted differential") {
  const auto I = ideal(kXYZ, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  auto F = minimal_resolution(I);
  for (const auto mode : {ScanMode::kAuto, ScanMode::kBox, ScanMode::kLcmLattice}) {
    CHECK(exactness_check(F, I, mode).ok);
  }
  SparseMatrix& d2 = F.mutable_scalars(2);
  SparseMatrix zeroed(d2.rows(), d2.cols());
  for (int c = 1; c < d2.cols(); ++c) {
    for (const auto& [r, v] : d2.column(c)) zeroed.set(r, c, v);
  }
  d2 = zeroed;
  F.mutable_scalars(3) = SparseMatrix(F.rank(2), F.rank(3));
  REQUIRE(F.squares_to_zero());
  for (const auto mode : {ScanMode::kBox, ScanMode::kLcmLattice}) {
    const auto report = exactness_check(F, I, mode);
    CHECK_FALSE(report.ok);
    REQUIRE(report.witness.has_value());
    CHECK(report.position >= 1);
    CHECK(homology_dimensions(strand(F, *report.witness))[report.position] > 0);
  }
  CHECK_FALSE(exactness_check(minimal_resolution(I), ideal(kXYZ, {{1, 0, 0}, {0, 1, 0}})).ok);
}

TEST_CASE("lcm lattice") {
  const std::vector<ExponentVector> atoms{{1, 0}, {0, 1}};
  auto L = lcm_lattice(atoms, 2);
  std::sort(L.begin(), L.end());
  CHECK(L == std::vector<ExponentVector>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  std::vector<ExponentVector> many;
  for (int i = 0; i < 12; ++i) many.push_back({i, 11 - i});
  CHECK_THROWS_AS(lcm_lattice(many, 2, 10), SizeLimitExceeded);
}

TEST_CASE("betti tables, regularity and projective dimension") {
  const auto b = betti_table(minimal_resolution(m2()));
  CHECK(b.graded == std::map<std::pair<int, int>, int>{{{0, 0}, 1}, {{1, 2}, 3}, {{2, 3}, 2}});
  CHECK(b.max_position() == 2);
  CHECK(b.top_degree(1) == 2);
  CHECK(b.bottom_degree(2) == 3);
  CHECK(b.total(1) == 3);
  CHECK_FALSE(b.top_degree(3).has_value());

  auto reg = [](const MonomialIdeal& I) { return regularity(betti_table(minimal_resolution(I))); };
  auto pd = [](const MonomialIdeal& I) { return projective_dimension(betti_table(minimal_resolution(I))); };
  CHECK(reg(ideal(kXY, {{1, 0}, {0, 1}})) == 1);
  CHECK(reg(m2()) == 2);
  CHECK(regularity(betti_table(minimal_resolution(m2())), false) == 1);
  CHECK(reg(ideal(kXY, {{2, 1}, {1, 2}})) == 3);
  CHECK(reg(ideal(kXY, {{2, 0}, {0, 2}})) == 3);
  CHECK(pd(ideal(kXY, {{1, 0}})) == 1);
  CHECK(pd(m2()) == 2);
  for (int n = 1; n <= 4; ++n) {
    const auto ctx = VariableContext::standard(n);
    std::vector<ExponentVector> vars;
    for (int i = 0; i < n; ++i) {
      ExponentVector v(n);
      v[i] = 1;
      vars.push_back(v);
    }
    const auto K = betti_table(minimal_resolution(ideal(ctx, vars)));
    CHECK(projective_dimension(K) == n);
    CHECK(regularity(K) == 1);
  }
}

TEST_CASE("linear resolutions") {
  CHECK(is_linear_resolution(betti_table(minimal_resolution(m2())), 2));
  CHECK_FALSE(is_linear_resolution(betti_table(minimal_resolution(m2())), 1));
  CHECK_FALSE(is_linear_resolution(betti_table(minimal_resolution(ideal(kXY, {{2, 0}, {0, 2}}))), 2));
  CHECK(is_linear_resolution(betti_table(minimal_resolution(ideal(kXY, {{2, 1}}))), 3));
  CHECK(is_linear_resolution(betti_table(minimal_resolution(ideal(kXY, {{2, 1}, {1, 2}}))), 3));
}

TEST_CASE("ideal resolutions carry the generators at position 0") {
  const auto R = ideal_resolution(m2());
  CHECK(R.complex.shifts(0) == m2().gens());
  CHECK(R.length() == 1);
  for (const auto& a : R.augmentation) CHECK(a != 0);
  CHECK(R.complex.squares_to_zero());
}

TEST_CASE("lifting an inclusion") {
  const auto m = ideal(kXY, {{1, 0}, {0, 1}});
  const auto source = ideal_resolution(m2());
  const auto target = ideal_resolution(m);
  const ChainMap f = lift_chain_map(source, target);
  CHECK(is_chain_map(f, source.complex, target.complex));
  const MonomialMatrix& f0 = f.components.at(0);
  REQUIRE(f0.rows() == 2);
  REQUIRE(f0.cols() == 3);
  // Columns x^2, xy, y^2; rows x, y.
  CHECK(f0.scalars.column(0).size() == 1);
  CHECK(f0.scalars.column(0)[0].first == 0);
  CHECK(f0.scalars.column(1).size() == 1);
  CHECK(f0.scalars.column(1)[0].first == 0);
  CHECK(f0.factor(0, 1) == ExponentVector{0, 1});
  CHECK(f0.scalars.column(2).size() == 1);
  CHECK(f0.scalars.column(2)[0].first == 1);
  // Augmentations commute with the inclusion.
  for (int c = 0; c < 3; ++c) {
    const auto& [r, v] = f0.scalars.column(c)[0];
    CHECK(target.augmentation[r] * v == source.augmentation[c]);
  }

  const ChainMap id = lift_chain_map(source, source);
  CHECK(equal_maps(id, identity_map(source.complex)));
}

TEST_CASE("lifts compose and are chain maps on random nested ideals") {
  std::mt19937_64 rng(113);
  for (int trial = 0; trial < 15; ++trial) {
    const auto J = minimalize(kXYZ, test::random_vectors(rng, 3, 3, 2));
    if (!J.is_proper_nonzero()) continue;
    const auto I = product(J, ideal(kXYZ, {{1, 0, 0}, {0, 1, 1}}));
    const auto K = product(I, ideal(kXYZ, {{0, 0, 1}, {0, 1, 0}}));
    const auto rJ = ideal_resolution(J), rI = ideal_resolution(I), rK = ideal_resolution(K);
    const auto f = lift_chain_map(rI, rJ), g = lift_chain_map(rK, rI);
    CHECK(is_chain_map(f, rI.complex, rJ.complex));
    CHECK(is_chain_map(g, rK.complex, rI.complex));
    CHECK(is_chain_map(compose(f, g), rK.complex, rJ.complex));
  }
}

TEST_CASE("chain map check rejects a broken map") {
  const auto source = ideal_resolution(m2());
  const auto target = ideal_resolution(ideal(kXY, {{1, 0}, {0, 1}}));
  ChainMap f = lift_chain_map(source, target);
  REQUIRE(f.components.size() >= 2);
  f.components[1].scalars = SparseMatrix(f.components[1].rows(), f.components[1].cols());
  CHECK_FALSE(is_chain_map(f, source.complex, target.complex));
  CHECK(equal_maps(zero_map(source.complex, target.complex), zero_map(source.complex, target.complex)));
}

TEST_CASE("monomial matrices") {
  MonomialMatrix a({{1, 0}}, {{1, 1}, {2, 0}});
  a.scalars.set(0, 0, 1);
  a.scalars.set(0, 1, -1);
  CHECK(a.is_homogeneous());
  CHECK(a.lies_in_maximal_ideal());
  MonomialMatrix b({{1, 0}}, {{1, 0}, {0, 1}});
  b.scalars.set(0, 0, 1);
  CHECK_FALSE(b.lies_in_maximal_ideal());
  CHECK(b.first_unit_entry() == std::pair{0, 0});
  b.scalars.set(0, 1, 1);
  CHECK_FALSE(b.is_homogeneous());
  CHECK(b.first_inhomogeneous_entry() == std::pair{0, 1});
}

TEST_CASE("tensor products over disjoint blocks") {
  const std::vector<int> sizes{1, 1};
  const auto full = VariableContext::with_block_sizes(sizes);
  const auto fx = minimal_resolution(ideal(full.block_context(0), {{1}}));
  const auto fy = minimal_resolution(ideal(full.block_context(1), {{2}}));
  const TensorBasis basis({&fx, &fy});
  const auto T = tensor_product(basis, full);
  CHECK(ranks(T) == std::vector<int>{1, 2, 1});
  CHECK(T.squares_to_zero());
  CHECK(T.is_minimal());
  CHECK(exactness_check(T, ideal(full, {{1, 0}, {0, 2}})).ok);

  const std::vector<int> wide{2, 2};
  const auto ctx = VariableContext::with_block_sizes(wide);
  const auto a = minimal_resolution(ideal(ctx.block_context(0), {{2, 0}, {1, 1}, {0, 2}}));
  const auto b = minimal_resolution(ideal(ctx.block_context(1), {{1, 0}, {0, 1}}));
  const TensorBasis ab({&a, &b});
  const auto P = tensor_product(ab, ctx);
  CHECK(P.squares_to_zero());
  CHECK(exactness_check(P, sum(embed_block(ideal(ctx.block_context(0), {{2, 0}, {1, 1}, {0, 2}}), ctx, 0),
                                embed_block(ideal(ctx.block_context(1), {{1, 0}, {0, 1}}), ctx, 1)))
            .ok);
  for (int k = 0; k <= ab.length(); ++k) {
    for (std::size_t t = 0; t < ab.tuples(k).size(); ++t) CHECK(ab.index_of(k, ab.tuples(k)[t]) == static_cast<int>(t));
  }

  const ChainMap ia = identity_map(a), ib = identity_map(b);
  const ChainMap* maps[] = {&ia, &ib};
  CHECK(equal_maps(tensor_product(maps, ab, ab, ctx), identity_map(P)));
}
