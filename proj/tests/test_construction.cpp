#include <doctest.h>

#include <functional>
#include <string>

#include "gmpi/construction.hpp"
#include "gmpi/error.hpp"
#include "gmpi/families.hpp"
#include "gmpi/verify.hpp"
#include "support.hpp"

using namespace gmpi;
using gmpi::test::ideal;

namespace {

VariableContext blocks(std::vector<int> sizes) { return VariableContext::with_block_sizes(sizes); }

ValidationError::Kind validation_kind(const std::function<void()>& f, std::string* witness = nullptr) {
  try {
    f();
  } catch (const ValidationError& e) {
    if (witness) *witness = e.witness();
    return e.kind();
  }
  FAIL("no ValidationError thrown");
  return ValidationError::Kind::kShape;
}

// I = (x, y) with L_{l,1} the maximal ideal of each block of size 2.
GmpiInstance koszul_instance() {
  const auto T = blocks({2, 2});
  SubstitutionFamily f;
  f.set(0, 1, ideal(T.block_context(0), {{1, 0}, {0, 1}}));
  f.set(1, 1, ideal(T.block_context(1), {{1, 0}, {0, 1}}));
  return GmpiInstance::validate(ideal(VariableContext::standard(2), {{1, 0}, {0, 1}}), T, f);
}

GmpiInstance twisted_expansion() {
  const std::vector<int> sizes{2, 2};
  return expansion_instance(ideal(VariableContext::standard(2), {{2, 1}, {1, 2}}), sizes);
}

void check_against_oracle(const GmpiConstruction& c) {
  CAPTURE(c.instance().ideal().to_string());
  CHECK(c.total().squares_to_zero());
  CHECK(c.total().is_minimal());
  CHECK(c.total_exactness().ok);
  const auto expected = test::koszul_betti(c.instance().ideal().gens());
  CHECK(c.betti().multigraded == expected);
  CHECK(betti_table(c.total()).multigraded == expected);
}

}  // namespace

TEST_CASE("validation rejects malformed families") {
  using Kind = ValidationError::Kind;
  const auto S = VariableContext::standard(2);
  const auto T = blocks({2, 1});
  const auto x = T.block_context(0), y = T.block_context(1);

  SUBCASE("improper inducing ideal") {
    SubstitutionFamily f;
    CHECK(validation_kind([&] { GmpiInstance::validate(MonomialIdeal::unit(S), T, f); }) == Kind::kImproperIdeal);
    CHECK(validation_kind([&] { GmpiInstance::validate(MonomialIdeal::zero(S), T, f); }) == Kind::kImproperIdeal);
  }
  SUBCASE("shape") {
    SubstitutionFamily f;
    CHECK(validation_kind([&] {
            GmpiInstance::validate(ideal(VariableContext::standard(3), {{1, 0, 0}}), T, f);
          }) == Kind::kShape);
    f.set(0, 1, ideal(y, {{1}}));
    CHECK(validation_kind([&] { GmpiInstance::validate(ideal(S, {{1, 0}}), T, f); }) == Kind::kShape);
  }
  SUBCASE("missing degree") {
    SubstitutionFamily f;
    f.set(0, 2, ideal(x, {{2, 0}}));
    std::string witness;
    CHECK(validation_kind([&] { GmpiInstance::validate(ideal(S, {{2, 0}, {0, 1}}), T, f); }, &witness) ==
          Kind::kMissingDegree);
    CHECK(witness == "y:1");
  }
  SUBCASE("wrong degree") {
    SubstitutionFamily f;
    f.set(0, 1, ideal(x, {{2, 0}}));
    f.set(1, 1, ideal(y, {{1}}));
    CHECK(validation_kind([&] { GmpiInstance::validate(ideal(S, {{1, 0}, {0, 1}}), T, f); }) == Kind::kWrongDegree);
  }
  SUBCASE("improper substitution") {
    SubstitutionFamily f;
    f.set(0, 1, MonomialIdeal::unit(x));
    f.set(1, 1, ideal(y, {{1}}));
    CHECK(validation_kind([&] { GmpiInstance::validate(ideal(S, {{1, 0}, {0, 1}}), T, f); }) ==
          Kind::kImproperIdeal);
  }
  SUBCASE("nesting") {
    SubstitutionFamily f;
    f.set(0, 2, ideal(x, {{2, 0}}));
    f.set(0, 1, ideal(x, {{0, 1}}));
    f.set(1, 1, ideal(y, {{1}}));
    f.set(1, 2, ideal(y, {{2}}));
    const auto I = ideal(S, {{2, 0}, {1, 1}, {0, 2}});
    std::string witness;
    CHECK(validation_kind([&] { GmpiInstance::validate(I, T, f); }, &witness) == Kind::kNestingViolation);
    CHECK(witness.find("x1^2") != std::string::npos);
    CHECK(witness.find("(x2)") != std::string::npos);
    CHECK_NOTHROW(GmpiInstance::validate(I, T, f, NestingPolicy::kBypass));
  }
}

TEST_CASE("derived ideals") {
  const auto inst = koszul_instance();
  const auto T = inst.ring();
  CHECK(inst.summands().size() == 2);
  CHECK(inst.ideal() == ideal(T, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}));
  CHECK(inst.substitution(0, 0).is_unit());
  CHECK(inst.ladder().with_zero(0) == std::vector<int>{0, 1});
  CHECK(inst.product_ideal({1, 1}) == ideal(T, {{1, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 1, 0}, {0, 1, 0, 1}}));
}

TEST_CASE("star complex of the Koszul instance") {
  const auto inst = koszul_instance();
  const auto star = build_star_complex(inst);
  REQUIRE(star.length() == 2);
  CHECK(star.ideals[1][0] == inst.summands()[0]);
  CHECK(star.ideals[1][1] == inst.summands()[1]);
  CHECK(star.ideals[2][0] == intersect(inst.summands()[0], inst.summands()[1]));
  CHECK(star_acyclicity(star, inst.ideal()).ok);
  CHECK_FALSE(star_acyclicity(star, sum(inst.ideal(), ideal(inst.ring(), {{0, 0, 0, 0}}))).ok);
}

TEST_CASE("star ideals are the products of substitution ideals") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const auto inst = random_instance(seed).instance;
    const auto star = build_star_complex(inst);
    for (int i = 1; i <= star.length(); ++i) {
      for (std::size_t j = 0; j < star.ideals[i].size(); ++j) {
        CHECK(star.ideals[i][j] == inst.product_ideal(star.shifts[i][j]));
      }
    }
    CHECK(star_acyclicity(star, inst.ideal()).ok);
  }
}

TEST_CASE("block resolutions include the unit ideal") {
  const auto inst = twisted_expansion();
  const BlockResolutions br(inst);
  CHECK(br.entries().size() == 6);
  const auto& unit = br.at(0, 0);
  CHECK(unit.resolution.complex.rank(0) == 1);
  CHECK(unit.resolution.length() == 0);
  CHECK(br.all_linear());
  const auto& m2 = br.at(1, 2);
  CHECK(m2.linear);
  CHECK(m2.projdim == 1);
  CHECK(m2.resolution.complex.rank(0) == 3);
  CHECK_THROWS(br.at(0, 3));
}

TEST_CASE("comparison maps") {
  const auto inst = twisted_expansion();
  const BlockResolutions br(inst);
  const ComparisonMaps maps(inst, br);
  CHECK(maps.num_rho() == 4);
  for (int l = 0; l < 2; ++l) {
    for (int k = 1; k <= 2; ++k) {
      const auto& src = br.at(l, inst.ladder().with_zero(l)[k]);
      const auto& dst = br.at(l, inst.ladder().with_zero(l)[k - 1]);
      CHECK(is_chain_map(maps.rho(l, k), src.resolution.complex, dst.resolution.complex));
    }
    CHECK(equal_maps(maps.between(l, 2, 2), identity_map(br.at(l, 2).resolution.complex)));
    CHECK(equal_maps(maps.between(l, 2, 1), maps.rho(l, 2)));
    CHECK(equal_maps(maps.between(l, 2, 0), compose(maps.rho(l, 1), maps.rho(l, 2))));
  }
  CHECK_THROWS_AS(maps.between(0, 1, 2), InvariantViolation);
  CHECK_THROWS_AS(maps.between(0, 3, 1), InvariantViolation);
}

TEST_CASE("tau follows the scalar matrices") {
  const auto inst = twisted_expansion();
  const BlockResolutions br(inst);
  const ComparisonMaps maps(inst, br);
  const auto& F = inst.inducing_resolution();
  const auto& lambda = inst.lambdas();
  for (int i = 1; i <= F.length(); ++i) {
    for (int k = 0; k < F.rank(i - 1); ++k) {
      for (int j = 0; j < F.rank(i); ++j) {
        for (int l = 0; l < 2; ++l) {
          const ChainMap t = maps.tau(inst, br, i, l, k, j);
          const int from = F.shifts(i)[j][l], to = F.shifts(i - 1)[k][l];
          if (lambda[i - 1](k, j) == 0) {
            CHECK(equal_maps(t, zero_map(br.at(l, from).resolution.complex, br.at(l, to).resolution.complex)));
          } else {
            CHECK(equal_maps(t, maps.between(l, from, to)));
          }
        }
      }
    }
  }
}

TEST_CASE("double complex of the expansion instance") {
  const auto inst = twisted_expansion();
  const BlockResolutions br(inst);
  const ComparisonMaps maps(inst, br);
  const auto D = build_double_complex(inst, br, maps);
  CHECK(D.num_columns() == inst.inducing_resolution().length() + 1);
  CHECK(sigma_squares_to_zero(D).ok);
  CHECK(sigma_minimality(D).ok);
  CHECK(sigma_chain_maps(D).ok);
  CHECK(sigma_covers_star(D).ok);
  for (const auto& column : D.columns) {
    for (const auto& g : column) CHECK(g.squares_to_zero());
  }
  const auto tot = total_complex(D);
  CHECK(tot.squares_to_zero());
  CHECK(tot.is_minimal());
  CHECK(exactness_check(tot, inst.ideal()).ok);
}

TEST_CASE("expansion of (x^2 y, x y^2)") {
  const GmpiConstruction c(twisted_expansion());
  CHECK(c.instance().ideal().size() == 12);
  check_against_oracle(c);
  CHECK(c.betti().graded ==
        std::map<std::pair<int, int>, int>{{{0, 0}, 1}, {{1, 3}, 12}, {{2, 4}, 23}, {{3, 5}, 16}, {{4, 6}, 4}});
  const auto reg = gmpi_regularity(c);
  CHECK(reg.reg_inducing == 3);
  CHECK(reg.reg_total == 3);
  CHECK(reg.hypothesis);
  const auto pd = gmpi_projdim(c);
  CHECK(pd.formula == 4);
  CHECK(pd.from_total == 4);
  const auto lin = gmpi_linearity(c);
  CHECK(lin.inducing_linear);
  CHECK(lin.total_linear);
  CHECK(top_degree_formula(c).ok);
}

TEST_CASE("a principal inducing ideal gives a tensor product") {
  const std::vector<int> sizes{2, 3};
  const GmpiConstruction c(expansion_instance(ideal(VariableContext::standard(2), {{2, 1}}), sizes));
  CHECK(c.instance().inducing_resolution().length() == 1);
  CHECK(c.double_complex().num_columns() == 2);
  CHECK(c.double_complex().sigma.at(1).empty() == false);
  check_against_oracle(c);
  CHECK(c.instance().ideal() ==
        product(embed_block(power_of_maximal(c.instance().ring().block_context(0), 2), c.instance().ring(), 0),
                embed_block(power_of_maximal(c.instance().ring().block_context(1), 1), c.instance().ring(), 1)));
  CHECK(gmpi_regularity(c).equal());
}

TEST_CASE("non-linear inducing ideal") {
  const std::vector<int> sizes{2, 2};
  const GmpiConstruction c(expansion_instance(ideal(VariableContext::standard(2), {{2, 0}, {0, 2}}), sizes));
  check_against_oracle(c);
  const auto lin = gmpi_linearity(c);
  CHECK_FALSE(lin.inducing_linear);
  CHECK_FALSE(lin.total_linear);
  CHECK(gmpi_regularity(c).reg_total == 3);
}

TEST_CASE("mixed products") {
  const std::vector<int> sizes{3, 3}, d{2, 1}, delta{1, 2};
  const GmpiConstruction c(mixed_product_instance(sizes, d, delta));
  check_against_oracle(c);
  const auto reg = gmpi_regularity(c);
  CHECK(reg.reg_total == 3);
  CHECK(reg.reg_inducing == 3);
  CHECK(gmpi_projdim(c).formula == gmpi_projdim(c).from_total);
}

TEST_CASE("random instances agree with the oracle") {
  for (std::uint64_t seed : {2u, 5u, 8u, 13u}) {
    CAPTURE(seed);
    const GmpiConstruction c(random_instance(seed).instance);
    check_against_oracle(c);
    CHECK(gmpi_regularity(c).equal());
    CHECK(gmpi_projdim(c).formula == gmpi_projdim(c).from_total);
    const auto lin = gmpi_linearity(c);
    CHECK(lin.inducing_linear == lin.total_linear);
    CHECK(top_degree_formula(c).ok);
  }
}

TEST_CASE("a broken nesting surfaces when building the total complex") {
  const auto T = blocks({2, 1});
  SubstitutionFamily f;
  f.set(0, 2, ideal(T.block_context(0), {{2, 0}}));
  f.set(0, 1, ideal(T.block_context(0), {{0, 1}}));
  f.set(1, 1, ideal(T.block_context(1), {{1}}));
  f.set(1, 2, ideal(T.block_context(1), {{2}}));
  auto inst = GmpiInstance::validate(ideal(VariableContext::standard(2), {{2, 0}, {1, 1}, {0, 2}}), T, f,
                                     NestingPolicy::kBypass);
  CHECK_THROWS(GmpiConstruction(inst));
  ConstructionOptions lax;
  lax.verify_total = false;
  bool any_failure = false;
  try {
    const GmpiConstruction c(inst, lax);
    any_failure = !c.total().squares_to_zero() || !star_acyclicity(c.star(), inst.ideal()).ok ||
                  !sigma_chain_maps(c.double_complex()).ok ||
                  !exactness_check(c.total(), inst.ideal()).ok;
  } catch (const Error&) {
    any_failure = true;
  }
  CHECK(any_failure);
}

TEST_CASE("a linear inducing ideal with squarefree Veronese substitutions") {
  const auto T = blocks({3, 3});
  const MonomialIdeal m2 = ideal(VariableContext::standard(2), {{2, 0}, {1, 1}, {0, 2}});
  const std::vector<BlockFamily> fams{{FamilyKind::kSquarefreeVeronese}, {FamilyKind::kSquarefreeVeronese}};
  const GmpiConstruction c(GmpiInstance::validate(m2, T, substitutions_from(T, m2, fams)));
  check_against_oracle(c);
  const auto lin = gmpi_linearity(c);
  CHECK(lin.inducing_linear);
  CHECK(lin.total_linear);
  CHECK(gmpi_regularity(c).reg_total == 2);
}
