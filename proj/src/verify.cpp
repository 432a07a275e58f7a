#include "gmpi/verify.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "gmpi/error.hpp"

namespace gmpi {

using nlohmann::json;

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::kPass:
      return "PASS";
    case CheckStatus::kFail:
      return "FAIL";
    case CheckStatus::kHypothesisUnmet:
      return "HYPOTHESIS-UNMET";
    case CheckStatus::kSkipped:
      return "SKIPPED";
  }
  return "";
}

json to_json(const CheckReport& report) {
  json j = {{"check", report.check}, {"status", to_string(report.status)}, {"detail", report.detail}};
  if (!report.witness.empty()) j["witness"] = report.witness;
  return j;
}

namespace {

CheckReport pass(std::string name) { return {std::move(name), CheckStatus::kPass, json::object(), ""}; }

CheckReport fail(std::string name, std::string witness) {
  return {std::move(name), CheckStatus::kFail, json::object(), std::move(witness)};
}

json graded_json(const BettiTable& t) {
  json rows = json::array();
  for (const auto& [key, v] : t.graded) rows.push_back({key.first, key.second, v});
  return rows;
}

bool oracle_feasible(const GmpiConstruction& c) {
  return c.instance().ideal().size() <= c.options().max_taylor;
}

// The oracle resolution of L, memoized for the most recent ideal.
const FreeComplex& oracle_resolution(const GmpiConstruction& c) {
  thread_local MonomialIdeal last;
  thread_local FreeComplex cached;
  thread_local bool valid = false;
  if (!valid || !(last == c.instance().ideal())) {
    valid = false;
    cached = minimal_resolution(c.instance().ideal(), c.options().max_taylor);
    last = c.instance().ideal();
    valid = true;
  }
  return cached;
}

std::string shift_label(int i, int j) { return "a_{" + std::to_string(i) + "," + std::to_string(j + 1) + "}"; }

CheckReport verdict_report(std::string name, const Verdict& v) {
  return v.ok ? pass(std::move(name)) : fail(std::move(name), v.witness);
}

}  // namespace

BettiTable oracle_betti(const MonomialIdeal& ideal, std::size_t max_generators) {
  return betti_table(minimal_resolution(ideal, max_generators));
}

CheckReport check_theorem_regularity(const GmpiConstruction& c) {
  const RegularityResult r = gmpi_regularity(c);
  CheckReport report = pass("regularity");
  report.detail = {{"reg_I", r.reg_inducing}, {"reg_L_tot", r.reg_total}, {"hypothesis", r.hypothesis}};
  bool agree = r.equal();
  if (oracle_feasible(c)) {
    const int oracle = regularity(betti_table(oracle_resolution(c)), true);
    report.detail["reg_L_oracle"] = oracle;
    agree = agree && oracle == r.reg_total;
  }
  if (!r.hypothesis) {
    report.status = CheckStatus::kHypothesisUnmet;
  } else if (!agree) {
    report.status = CheckStatus::kFail;
    report.witness = "reg I = " + std::to_string(r.reg_inducing) + ", reg L = " + std::to_string(r.reg_total);
  }
  return report;
}

CheckReport check_pd_formula(const GmpiConstruction& c) {
  const ProjdimResult r = gmpi_projdim(c);
  CheckReport report = pass("pd-formula");
  report.detail = {{"formula", r.formula}, {"pd_tot", r.from_total}};
  bool agree = r.formula == r.from_total;
  if (oracle_feasible(c)) {
    const int oracle = projective_dimension(betti_table(oracle_resolution(c)));
    report.detail["pd_oracle"] = oracle;
    agree = agree && oracle == r.formula;
  }
  if (!agree) {
    report.status = CheckStatus::kFail;
    report.witness = "formula " + std::to_string(r.formula) + ", Tot(D) " + std::to_string(r.from_total);
  }
  return report;
}

CheckReport check_betti_equivalence(const GmpiConstruction& c) {
  CheckReport report = pass("betti-equivalence");
  if (!oracle_feasible(c)) {
    report.status = CheckStatus::kSkipped;
    report.detail["reason"] = "|G(L)| = " + std::to_string(c.instance().ideal().size()) + " exceeds the oracle cap";
    return report;
  }
  const BettiTable oracle = betti_table(oracle_resolution(c));
  report.detail = {{"tot", graded_json(c.betti())}, {"oracle", graded_json(oracle)}};
  if (oracle.graded != c.betti().graded) {
    report.status = CheckStatus::kFail;
    report.witness = "graded tables differ";
  } else if (oracle.multigraded != c.betti().multigraded) {
    report.status = CheckStatus::kFail;
    for (const auto& [key, v] : oracle.multigraded) {
      auto it = c.betti().multigraded.find(key);
      if (it == c.betti().multigraded.end() || it->second != v) {
        report.witness = "multidegree " + to_string(c.instance().ring(), key.second) + " in position " +
                         std::to_string(key.first);
        break;
      }
    }
    if (report.witness.empty()) report.witness = "Tot(D) has extra multigraded entries";
  }
  return report;
}

CheckReport check_linearity(const GmpiConstruction& c) {
  const LinearityResult r = gmpi_linearity(c);
  CheckReport report = pass("linearity");
  report.detail = {{"I_linear", r.inducing_linear}, {"L_linear", r.total_linear}, {"hypothesis", r.hypothesis}};
  if (!r.hypothesis) {
    report.status = CheckStatus::kHypothesisUnmet;
  } else if (r.inducing_linear != r.total_linear) {
    report.status = CheckStatus::kFail;
    report.witness = std::string("I ") + (r.inducing_linear ? "linear" : "not linear") + ", L " +
                     (r.total_linear ? "linear" : "not linear");
  }
  return report;
}

CheckReport check_scalar_exactness(const std::vector<DenseMatrix>& lambdas, const FreeComplex& resolution) {
  const std::string name = "scalar-complex-exactness";
  if (!lambdas.empty()) {
    const DenseMatrix& first = lambdas.front();
    for (int j = 0; j < first.cols(); ++j) {
      if (first.rows() != 1 || first(0, j) != 1) return fail(name, "lambda^(1) is not the all-ones row");
    }
  }
  std::vector<int> betti;
  for (int i = 0; i <= resolution.length(); ++i) betti.push_back(resolution.rank(i));
  if (static_cast<int>(lambdas.size()) != resolution.length()) return fail(name, "wrong number of scalar matrices");
  for (int i = 0; i < static_cast<int>(lambdas.size()); ++i) {
    if (lambdas[i].rows() != betti[i] || lambdas[i].cols() != betti[i + 1]) {
      return fail(name, "lambda^(" + std::to_string(i + 1) + ") has the wrong shape");
    }
  }
  const ScalarExactness e = scalar_complex_exactness(lambdas, betti);
  if (!e.exact) return fail(name, "position " + std::to_string(e.failing_position));
  return pass(name);
}

CheckReport check_lcm_shifts(const FreeComplex& resolution) {
  const std::string name = "lcm-shifts";
  if (resolution.length() < 2) {
    CheckReport r = pass(name);
    r.detail["vacuous"] = true;
    return r;
  }
  const auto n = static_cast<std::size_t>(resolution.context().num_vars());
  for (int i = 2; i <= resolution.length(); ++i) {
    for (int j = 0; j < resolution.rank(i); ++j) {
      ExponentVector l(n);
      for (const auto& [k, v] : resolution.scalars(i).column(j)) l = lcm(l, resolution.shifts(i - 1)[k]);
      if (l != resolution.shifts(i)[j]) {
        return fail(name, shift_label(i, j) + " = " + to_string(resolution.shifts(i)[j]) + " but the lcm is " +
                              to_string(l));
      }
    }
  }
  return pass(name);
}

CheckReport check_block_degree_realization(const FreeComplex& resolution, const MonomialIdeal& inducing) {
  const std::string name = "block-degree-realization";
  const int n = inducing.context().num_vars();
  std::vector<std::set<int>> seen(static_cast<std::size_t>(n));
  for (const auto& g : inducing.gens()) {
    for (int l = 0; l < n; ++l) seen[l].insert(g[l]);
  }
  for (int i = 1; i <= resolution.length(); ++i) {
    for (int j = 0; j < resolution.rank(i); ++j) {
      const ExponentVector& a = resolution.shifts(i)[j];
      for (int l = 0; l < n; ++l) {
        if (!seen[l].count(a[l])) {
          return fail(name, shift_label(i, j) + "(" + std::to_string(l + 1) + ") = " + std::to_string(a[l]) +
                                " is not a block degree of a generator");
        }
      }
    }
  }
  return pass(name);
}

CheckReport check_product_equals_intersection(const StarComplex& star, const GmpiInstance& instance) {
  const std::string name = "product-equals-intersection";
  for (int i = 1; i <= star.length(); ++i) {
    for (std::size_t j = 0; j < star.ideals[i].size(); ++j) {
      const MonomialIdeal expected = instance.product_ideal(star.shifts[i][j]);
      if (!(star.ideals[i][j] == expected)) {
        return fail(name, "L_{" + std::to_string(i) + "," + std::to_string(j + 1) + "} = " +
                              star.ideals[i][j].to_string() + " but the product is " + expected.to_string());
      }
    }
  }
  return pass(name);
}

CheckReport check_sigma_minimality(const DoubleComplex& d) {
  return verdict_report("sigma-minimality", sigma_minimality(d));
}

CheckReport check_sigma_squares(const DoubleComplex& d) {
  return verdict_report("sigma-squares-to-zero", sigma_squares_to_zero(d));
}

CheckReport check_star_acyclicity(const StarComplex& star, const MonomialIdeal& target) {
  const ExactnessReport e = star_acyclicity(star, target);
  CheckReport r = pass("star-acyclicity");
  r.detail["degrees_checked"] = e.degrees_checked;
  if (!e.ok) {
    r.status = CheckStatus::kFail;
    r.witness = e.reason;
    if (e.witness) r.witness += " at degree " + to_string(star.ring, *e.witness);
  }
  return r;
}

std::vector<CheckReport> check_structure_lemmas(const GmpiConstruction& c) {
  const GmpiInstance& inst = c.instance();
  std::vector<CheckReport> out;
  out.push_back(check_scalar_exactness(inst.lambdas(), inst.inducing_resolution()));
  out.push_back(check_lcm_shifts(inst.inducing_resolution()));
  out.push_back(check_block_degree_realization(inst.inducing_resolution(), inst.inducing()));
  out.push_back(check_product_equals_intersection(c.star(), inst));
  out.push_back(check_sigma_minimality(c.double_complex()));
  out.push_back(check_sigma_squares(c.double_complex()));
  out.push_back(check_star_acyclicity(c.star(), inst.ideal()));
  out.push_back(verdict_report("sigma-chain-maps", sigma_chain_maps(c.double_complex())));
  out.push_back(verdict_report("sigma-covers-star", sigma_covers_star(c.double_complex())));

  const FreeComplex& tot = c.total();
  out.push_back(tot.squares_to_zero() ? pass("tot-squares-to-zero") : fail("tot-squares-to-zero", "d o d != 0"));
  out.push_back(tot.is_minimal() ? pass("tot-minimal") : fail("tot-minimal", "unit entry in the differential"));
  const ExactnessReport e =
      c.options().verify_total ? c.total_exactness() : exactness_check(tot, inst.ideal(), c.options().scan);
  CheckReport exact = pass("tot-exactness");
  exact.detail["degrees_checked"] = e.degrees_checked;
  if (!e.ok) {
    exact.status = CheckStatus::kFail;
    exact.witness = e.reason + (e.witness ? " at degree " + to_string(inst.ring(), *e.witness) : "");
  }
  out.push_back(std::move(exact));

  CheckReport top = verdict_report("top-degree-formula", top_degree_formula(c));
  if (!c.hypothesis_holds() && top.status == CheckStatus::kFail) top.status = CheckStatus::kHypothesisUnmet;
  out.push_back(std::move(top));
  return out;
}

std::vector<CheckReport> check_engine(const GmpiConstruction& c, const SelfCheckOptions& options) {
  std::vector<CheckReport> out;
  const GmpiInstance& inst = c.instance();
  const bool oracle = oracle_feasible(c);
  const FreeComplex oracle_res = oracle ? oracle_resolution(c) : FreeComplex{};

  {
    std::vector<std::pair<std::string, const FreeComplex*>> complexes;
    complexes.emplace_back("resolution of S/I", &inst.inducing_resolution());
    for (const auto& [key, b] : c.blocks().entries()) {
      complexes.emplace_back("H^(" + std::to_string(key.first + 1) + "," + std::to_string(key.second) + ")",
                             &b.resolution.complex);
    }
    const auto& columns = c.double_complex().columns;
    for (std::size_t col = 0; col < columns.size(); ++col) {
      for (std::size_t s = 0; s < columns[col].size(); ++s) {
        complexes.emplace_back("G^(" + std::to_string(col) + "," + std::to_string(s + 1) + ")", &columns[col][s]);
      }
    }
    complexes.emplace_back("Tot(D)", &c.total());
    if (oracle) complexes.emplace_back("oracle", &oracle_res);
    CheckReport r = pass("d-squared-zero");
    r.detail["complexes"] = complexes.size();
    for (const auto& [label, cx] : complexes) {
      if (!cx->squares_to_zero()) {
        r.status = CheckStatus::kFail;
        r.witness = label;
        break;
      }
    }
    out.push_back(std::move(r));
  }

  std::mt19937_64 rng(options.seed);
  {
    CheckReport r = pass("permutation-invariance");
    std::vector<const MonomialIdeal*> ideals{&inst.inducing()};
    if (oracle) ideals.push_back(&inst.ideal());
    for (const MonomialIdeal* ideal : ideals) {
      const BettiTable base =
          betti_table(ideal == &inst.ideal() ? oracle_res : minimal_resolution(*ideal, c.options().max_taylor));
      std::vector<ExponentVector> gens = ideal->gens();
      for (int k = 0; k < options.permutations && r.passed(); ++k) {
        std::shuffle(gens.begin(), gens.end(), rng);
        const BettiTable t =
            betti_table(minimalize_complex(taylor_complex(ideal->context(), gens, c.options().max_taylor)));
        if (!(t == base)) {
          r.status = CheckStatus::kFail;
          r.witness = "Betti table changes for " + ideal->to_string() + " under permutation " + std::to_string(k + 1);
        }
      }
    }
    r.detail["permutations"] = options.permutations;
    out.push_back(std::move(r));
  }

  {
    CheckReport r = pass("euler-characteristic");
    const FreeComplex& tot = c.total();
    ExponentVector bound(static_cast<std::size_t>(inst.ring().num_vars()));
    for (const auto& s : tot.all_shifts()) bound = lcm(bound, s);
    for (int k = 0; k < options.euler_degrees && r.passed(); ++k) {
      ExponentVector b(bound.size());
      for (std::size_t v = 0; v < b.size(); ++v) b[v] = static_cast<int>(rng() % static_cast<std::uint64_t>(bound[v] + 2));
      const int expected = inst.ideal().contains(b) ? 0 : 1;
      for (const FreeComplex* cx : {&tot, oracle ? &oracle_res : &tot}) {
        const int chi = strand_euler_characteristic(*cx, b);
        if (chi != expected) {
          r.status = CheckStatus::kFail;
          r.witness = "degree " + to_string(inst.ring(), b) + ": chi = " + std::to_string(chi);
          break;
        }
      }
    }
    r.detail["degrees"] = options.euler_degrees;
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<CheckReport> run_all_checks(const GmpiConstruction& c, const SelfCheckOptions& options) {
  std::vector<CheckReport> out{check_theorem_regularity(c), check_pd_formula(c), check_betti_equivalence(c),
                               check_linearity(c)};
  for (auto& r : check_structure_lemmas(c)) out.push_back(std::move(r));
  for (auto& r : check_engine(c, options)) out.push_back(std::move(r));
  return out;
}

bool InstanceReport::passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const CheckReport& r) { return r.status == CheckStatus::kFail; });
}

InstanceReport verify_instance(const GmpiInstance& instance, const ConstructionOptions& options, std::uint64_t seed) {
  InstanceReport report;
  report.seed = seed;
  try {
    const GmpiConstruction c(instance, options);
    report.checks = run_all_checks(c, SelfCheckOptions{seed});
  } catch (const Error& e) {
    report.checks.push_back(fail("construction", e.what()));
    report.checks.push_back(check_scalar_exactness(instance.lambdas(), instance.inducing_resolution()));
    report.checks.push_back(check_lcm_shifts(instance.inducing_resolution()));
    report.checks.push_back(check_block_degree_realization(instance.inducing_resolution(), instance.inducing()));
    try {
      const StarComplex star = build_star_complex(instance);
      report.checks.push_back(check_product_equals_intersection(star, instance));
      report.checks.push_back(check_star_acyclicity(star, instance.ideal()));
    } catch (const Error& star_error) {
      report.checks.push_back(fail("star-acyclicity", star_error.what()));
    }
  }
  return report;
}

std::vector<std::uint64_t> pinned_seeds() {
  std::vector<std::uint64_t> seeds(20);
  std::iota(seeds.begin(), seeds.end(), std::uint64_t{1});
  return seeds;
}

std::vector<InstanceReport> run_suite(const std::vector<std::uint64_t>& seeds, const ConstructionOptions& options) {
  std::vector<InstanceReport> out;
  for (std::uint64_t seed : seeds) {
    RandomInstance r = random_instance(seed);
    out.push_back(verify_instance(r.instance, options, seed));
  }
  return out;
}

}  // namespace gmpi
