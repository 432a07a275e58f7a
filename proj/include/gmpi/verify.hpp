#ifndef GMPI_VERIFY_HPP
#define GMPI_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "gmpi/construction.hpp"
#include "gmpi/families.hpp"

namespace gmpi {

enum class CheckStatus { kPass, kFail, kHypothesisUnmet, kSkipped };

// "PASS", "FAIL", "HYPOTHESIS-UNMET", "SKIPPED".
std::string to_string(CheckStatus status);

struct CheckReport {
  std::string check;
  CheckStatus status = CheckStatus::kPass;
  nlohmann::json detail = nlohmann::json::object();
  std::string witness;

  bool passed() const noexcept { return status == CheckStatus::kPass; }
};

nlohmann::json to_json(const CheckReport& report);

// betti_table(minimalize(taylor(L))), independent of the GMPI pipeline.
BettiTable oracle_betti(const MonomialIdeal& ideal, std::size_t max_generators = kDefaultTaylorCap);

CheckReport check_theorem_regularity(const GmpiConstruction& c);
CheckReport check_pd_formula(const GmpiConstruction& c);
CheckReport check_betti_equivalence(const GmpiConstruction& c);
CheckReport check_linearity(const GmpiConstruction& c);

// Individual structure checks on raw data, so each can be pointed at a
// corrupted fixture.
CheckReport check_scalar_exactness(const std::vector<DenseMatrix>& lambdas, const FreeComplex& resolution);
CheckReport check_lcm_shifts(const FreeComplex& resolution);
CheckReport check_block_degree_realization(const FreeComplex& resolution, const MonomialIdeal& inducing);
CheckReport check_product_equals_intersection(const StarComplex& star, const GmpiInstance& instance);
CheckReport check_sigma_minimality(const DoubleComplex& d);
CheckReport check_sigma_squares(const DoubleComplex& d);
CheckReport check_star_acyclicity(const StarComplex& star, const MonomialIdeal& target);

// Every structure check on a built construction, plus the sigma chain-map,
// row-0 cover, Tot(D) and top-degree checks.
std::vector<CheckReport> check_structure_lemmas(const GmpiConstruction& c);

struct SelfCheckOptions {
  std::uint64_t seed = 0;
  int permutations = 5;
  int euler_degrees = 100;
};
// d o d = 0 on every complex of the construction and on the oracle,
// Betti invariance under generator permutations of the Taylor input, and
// the Euler characteristic identity at random multidegrees.
std::vector<CheckReport> check_engine(const GmpiConstruction& c, const SelfCheckOptions& options);

// All of the above on one construction.
std::vector<CheckReport> run_all_checks(const GmpiConstruction& c, const SelfCheckOptions& options = {});

struct InstanceReport {
  std::uint64_t seed = 0;
  std::vector<CheckReport> checks;
  bool passed() const;
};

// Builds the construction and runs every check. A build failure is
// reported as a FAIL line named "construction", followed by the checks that
// need only the instance and its star complex.
InstanceReport verify_instance(const GmpiInstance& instance, const ConstructionOptions& options = {},
                               std::uint64_t seed = 0);

// The pinned acceptance seeds.
std::vector<std::uint64_t> pinned_seeds();

std::vector<InstanceReport> run_suite(const std::vector<std::uint64_t>& seeds, const ConstructionOptions& options = {});

}  // namespace gmpi

#endif  // GMPI_VERIFY_HPP
