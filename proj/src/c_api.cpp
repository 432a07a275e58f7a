#include "gmpi/gmpi.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <optional>
#include <string>

#include "gmpi/error.hpp"
#include "gmpi/io.hpp"
#include "gmpi/verify.hpp"

struct gmpi_ideal {
  gmpi::MonomialIdeal value;
};

struct gmpi_resolution {
  gmpi::FreeComplex complex;
  gmpi::BettiTable betti;
};

struct gmpi_instance {
  gmpi::GmpiInstance value;
  std::size_t max_taylor;
};

struct gmpi_construction {
  gmpi::GmpiConstruction value;
};

namespace {

thread_local std::string last_error;

gmpi_status fail(gmpi_status s, const std::string& message) {
  last_error = message;
  return s;
}

template <class F>
gmpi_status guard(F&& f) {
  try {
    last_error.clear();
    f();
    return GMPI_OK;
  } catch (const gmpi::ValidationError& e) {
    std::string msg = e.what();
    if (!e.witness().empty()) msg += " (witness: " + e.witness() + ")";
    return fail(GMPI_ERR_VALIDATION, msg);
  } catch (const gmpi::InputError& e) {
    return fail(GMPI_ERR_INPUT, e.what());
  } catch (const gmpi::SizeLimitExceeded& e) {
    return fail(GMPI_ERR_SIZE_LIMIT, e.what());
  } catch (const gmpi::ContextMismatch& e) {
    return fail(GMPI_ERR_CONTEXT, e.what());
  } catch (const gmpi::InvariantViolation& e) {
    return fail(GMPI_ERR_INVARIANT, e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(GMPI_ERR_INPUT, std::string("invalid JSON: ") + e.what());
  } catch (const std::exception& e) {
    return fail(GMPI_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(GMPI_ERR_INTERNAL, "unknown error");
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::size_t cap_or(int requested, std::size_t fallback) {
  return requested > 0 ? static_cast<std::size_t>(requested) : fallback;
}

#define GMPI_REQUIRE(ptr) \
  if (!(ptr)) return fail(GMPI_ERR_NULL_ARGUMENT, "null argument: " #ptr)

nlohmann::json reports_json(const std::vector<gmpi::CheckReport>& reports) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : reports) out.push_back(gmpi::to_json(r));
  return out;
}

}  // namespace

extern "C" {

const char* gmpi_last_error(void) { return last_error.c_str(); }

const char* gmpi_status_name(gmpi_status status) {
  switch (status) {
    case GMPI_OK:
      return "ok";
    case GMPI_ERR_INPUT:
      return "input error";
    case GMPI_ERR_VALIDATION:
      return "validation error";
    case GMPI_ERR_SIZE_LIMIT:
      return "size limit exceeded";
    case GMPI_ERR_CONTEXT:
      return "context mismatch";
    case GMPI_ERR_INVARIANT:
      return "invariant violation";
    case GMPI_ERR_NULL_ARGUMENT:
      return "null argument";
    case GMPI_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

void gmpi_free_string(char* s) { std::free(s); }

gmpi_status gmpi_ideal_from_json(const char* json, gmpi_ideal** out) {
  GMPI_REQUIRE(json);
  GMPI_REQUIRE(out);
  return guard([&] {
    *out = new gmpi_ideal{gmpi::ideal_from_json(nlohmann::json::parse(json))};
  });
}

gmpi_status gmpi_ideal_to_json(const gmpi_ideal* ideal, char** out) {
  GMPI_REQUIRE(ideal);
  GMPI_REQUIRE(out);
  return guard([&] { *out = dup_string(gmpi::ideal_to_json(ideal->value).dump()); });
}

gmpi_status gmpi_ideal_num_generators(const gmpi_ideal* ideal, size_t* out) {
  GMPI_REQUIRE(ideal);
  GMPI_REQUIRE(out);
  *out = ideal->value.size();
  return GMPI_OK;
}

void gmpi_ideal_free(gmpi_ideal* ideal) { delete ideal; }

gmpi_status gmpi_resolve(const gmpi_ideal* ideal, int max_taylor, gmpi_resolution** out) {
  GMPI_REQUIRE(ideal);
  GMPI_REQUIRE(out);
  return guard([&] {
    gmpi::FreeComplex c = gmpi::minimal_resolution(ideal->value, cap_or(max_taylor, gmpi::kDefaultTaylorCap));
    gmpi::BettiTable b = gmpi::betti_table(c);
    *out = new gmpi_resolution{std::move(c), std::move(b)};
  });
}

gmpi_status gmpi_resolution_betti_text(const gmpi_resolution* res, char** out) {
  GMPI_REQUIRE(res);
  GMPI_REQUIRE(out);
  return guard([&] { *out = dup_string(gmpi::betti_triangle(res->betti)); });
}

gmpi_status gmpi_resolution_betti_json(const gmpi_resolution* res, char** out) {
  GMPI_REQUIRE(res);
  GMPI_REQUIRE(out);
  return guard([&] { *out = dup_string(gmpi::betti_to_json(res->betti).dump()); });
}

gmpi_status gmpi_resolution_regularity(const gmpi_resolution* res, int* out) {
  GMPI_REQUIRE(res);
  GMPI_REQUIRE(out);
  return guard([&] { *out = gmpi::regularity(res->betti, true); });
}

gmpi_status gmpi_resolution_projdim(const gmpi_resolution* res, int* out) {
  GMPI_REQUIRE(res);
  GMPI_REQUIRE(out);
  *out = gmpi::projective_dimension(res->betti);
  return GMPI_OK;
}

void gmpi_resolution_free(gmpi_resolution* res) { delete res; }

gmpi_status gmpi_instance_from_json(const char* json, int max_taylor, gmpi_instance** out) {
  GMPI_REQUIRE(json);
  GMPI_REQUIRE(out);
  return guard([&] {
    gmpi::InstanceDocument doc = gmpi::parse_instance_document(nlohmann::json::parse(json));
    if (max_taylor > 0) doc.options["max_taylor"] = max_taylor;
    const std::size_t cap = gmpi::max_taylor_option(doc);
    *out = new gmpi_instance{gmpi::build_instance(doc), cap};
  });
}

gmpi_status gmpi_instance_to_json(const gmpi_instance* inst, char** out) {
  GMPI_REQUIRE(inst);
  GMPI_REQUIRE(out);
  return guard([&] { *out = dup_string(gmpi::to_json(gmpi::document_from(inst->value)).dump()); });
}

gmpi_status gmpi_random_instance(uint64_t seed, gmpi_instance** out) {
  GMPI_REQUIRE(out);
  return guard([&] { *out = new gmpi_instance{gmpi::random_instance(seed).instance, gmpi::kDefaultTaylorCap}; });
}

gmpi_status gmpi_instance_ideal(const gmpi_instance* inst, gmpi_ideal** out) {
  GMPI_REQUIRE(inst);
  GMPI_REQUIRE(out);
  return guard([&] { *out = new gmpi_ideal{inst->value.ideal()}; });
}

void gmpi_instance_free(gmpi_instance* inst) { delete inst; }

gmpi_status gmpi_construct(const gmpi_instance* inst, int max_taylor, gmpi_construction** out) {
  GMPI_REQUIRE(inst);
  GMPI_REQUIRE(out);
  return guard([&] {
    gmpi::ConstructionOptions options;
    options.max_taylor = cap_or(max_taylor, inst->max_taylor);
    *out = new gmpi_construction{gmpi::GmpiConstruction(inst->value, options)};
  });
}

gmpi_status gmpi_construction_summary_json(const gmpi_construction* c, char** out) {
  GMPI_REQUIRE(c);
  GMPI_REQUIRE(out);
  return guard([&] {
    const auto& con = c->value;
    const gmpi::RegularityResult reg = gmpi::gmpi_regularity(con);
    const gmpi::ProjdimResult pd = gmpi::gmpi_projdim(con);
    const gmpi::LinearityResult lin = gmpi::gmpi_linearity(con);
    nlohmann::json j = {{"I", gmpi::generator_strings(con.instance().inducing())},
                        {"L", gmpi::generator_strings(con.instance().ideal())},
                        {"betti", gmpi::betti_to_json(con.betti())},
                        {"reg_I", reg.reg_inducing},
                        {"reg_L", reg.reg_total},
                        {"pd", pd.from_total},
                        {"pd_formula", pd.formula},
                        {"I_linear", lin.inducing_linear},
                        {"L_linear", lin.total_linear},
                        {"hypothesis", reg.hypothesis}};
    *out = dup_string(j.dump());
  });
}

gmpi_status gmpi_construction_betti_text(const gmpi_construction* c, char** out) {
  GMPI_REQUIRE(c);
  GMPI_REQUIRE(out);
  return guard([&] { *out = dup_string(gmpi::betti_triangle(c->value.betti())); });
}

gmpi_status gmpi_construction_check(const gmpi_construction* c, uint64_t seed, char** report_json, int* all_passed) {
  GMPI_REQUIRE(c);
  GMPI_REQUIRE(report_json);
  GMPI_REQUIRE(all_passed);
  return guard([&] {
    gmpi::InstanceReport report{seed, gmpi::run_all_checks(c->value, gmpi::SelfCheckOptions{seed})};
    *all_passed = report.passed() ? 1 : 0;
    *report_json = dup_string(reports_json(report.checks).dump());
  });
}

void gmpi_construction_free(gmpi_construction* c) { delete c; }

gmpi_status gmpi_instance_check(const gmpi_instance* inst, int max_taylor, uint64_t seed, char** report_json,
                                int* all_passed) {
  GMPI_REQUIRE(inst);
  GMPI_REQUIRE(report_json);
  GMPI_REQUIRE(all_passed);
  return guard([&] {
    gmpi::ConstructionOptions options;
    options.max_taylor = cap_or(max_taylor, inst->max_taylor);
    const gmpi::InstanceReport report = gmpi::verify_instance(inst->value, options, seed);
    *all_passed = report.passed() ? 1 : 0;
    *report_json = dup_string(reports_json(report.checks).dump());
  });
}

gmpi_status gmpi_family_json(const char* request_json, char** out) {
  GMPI_REQUIRE(request_json);
  GMPI_REQUIRE(out);
  return guard([&] { *out = dup_string(gmpi::emit_family(nlohmann::json::parse(request_json)).dump()); });
}

gmpi_status gmpi_run_suite(const uint64_t* seeds, size_t num_seeds, char** report_json, int* all_passed) {
  GMPI_REQUIRE(report_json);
  GMPI_REQUIRE(all_passed);
  return guard([&] {
    const std::vector<std::uint64_t> list =
        seeds ? std::vector<std::uint64_t>(seeds, seeds + num_seeds) : gmpi::pinned_seeds();
    nlohmann::json out = nlohmann::json::array();
    bool ok = true;
    for (const auto& r : gmpi::run_suite(list)) {
      ok = ok && r.passed();
      out.push_back({{"seed", r.seed}, {"passed", r.passed()}, {"checks", reports_json(r.checks)}});
    }
    *all_passed = ok ? 1 : 0;
    *report_json = dup_string(out.dump());
  });
}

}  // extern "C"
