#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "gmpi/gmpi.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitInputError = 2;

struct CString {
  char* p = nullptr;
  ~CString() { gmpi_free_string(p); }
  std::string str() const { return p ? p : ""; }
};

template <class T, void (*Free)(T*)>
struct Handle {
  T* p = nullptr;
  ~Handle() { Free(p); }
};

using Ideal = Handle<gmpi_ideal, gmpi_ideal_free>;
using Resolution = Handle<gmpi_resolution, gmpi_resolution_free>;
using Instance = Handle<gmpi_instance, gmpi_instance_free>;
using Construction = Handle<gmpi_construction, gmpi_construction_free>;

struct Failure {
  int code;
};

void check(gmpi_status s) {
  if (s == GMPI_OK) return;
  std::cerr << "error (" << gmpi_status_name(s) << "): " << gmpi_last_error() << "\n";
  const bool input = s == GMPI_ERR_INPUT || s == GMPI_ERR_VALIDATION || s == GMPI_ERR_SIZE_LIMIT ||
                     s == GMPI_ERR_CONTEXT || s == GMPI_ERR_NULL_ARGUMENT;
  throw Failure{input ? kExitInputError : kExitCheckFailure};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot read " << path << "\n";
    throw Failure{kExitInputError};
  }
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "error: cannot write " << out_path << "\n";
    throw Failure{kExitInputError};
  }
  out << text;
}

// Pretty JSON; short nested values stay on one line.
void pretty(const nlohmann::json& j, int indent, std::ostringstream& out) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  const std::string inner(static_cast<std::size_t>(indent) + 2, ' ');
  const bool compact = indent > 0 && j.dump().size() <= 60;
  if (j.is_object() && !j.empty() && !compact) {
    out << "{\n";
    std::size_t i = 0;
    for (const auto& [k, v] : j.items()) {
      out << inner << nlohmann::json(k).dump() << ": ";
      pretty(v, indent + 2, out);
      out << (++i < j.size() ? ",\n" : "\n");
    }
    out << pad << "}";
  } else if (j.is_array() && !j.empty() && !compact &&
             std::any_of(j.begin(), j.end(), [](const auto& v) { return v.is_structured(); })) {
    out << "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out << inner;
      pretty(j[i], indent + 2, out);
      out << (i + 1 < j.size() ? ",\n" : "\n");
    }
    out << pad << "]";
  } else {
    out << j.dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
  }
}

std::string pretty(const nlohmann::json& j) {
  std::ostringstream out;
  pretty(j, 0, out);
  out << "\n";
  return out.str();
}

std::string join_generators(const nlohmann::json& gens) {
  std::string s = "(";
  for (std::size_t i = 0; i < gens.size(); ++i) s += (i ? ", " : "") + gens[i].get<std::string>();
  return s + ")";
}

std::string check_lines(const nlohmann::json& checks) {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << c.at("status").get<std::string>() << "  " << c.at("check").get<std::string>();
    if (c.contains("witness")) out << "  [" << c.at("witness").get<std::string>() << "]";
    if (!c.at("detail").empty()) out << "  " << c.at("detail").dump();
    out << "\n";
  }
  return out.str();
}

struct Common {
  bool json = false;
  int max_taylor = 0;
  std::string out;
};

int cmd_resolve(const std::string& path, const Common& opt) {
  Ideal ideal;
  check(gmpi_ideal_from_json(read_file(path).c_str(), &ideal.p));
  Resolution res;
  check(gmpi_resolve(ideal.p, opt.max_taylor, &res.p));
  int reg = 0, pd = 0;
  check(gmpi_resolution_regularity(res.p, &reg));
  check(gmpi_resolution_projdim(res.p, &pd));
  if (opt.json) {
    CString betti;
    check(gmpi_resolution_betti_json(res.p, &betti.p));
    nlohmann::json j = {{"betti", nlohmann::json::parse(betti.str())}, {"reg", reg}, {"pd", pd}};
    emit(pretty(j), opt.out);
  } else {
    CString text;
    check(gmpi_resolution_betti_text(res.p, &text.p));
    emit(text.str() + "reg " + std::to_string(reg) + "\npd " + std::to_string(pd) + "\n", opt.out);
  }
  return kExitPass;
}

int cmd_gmpi(const std::string& path, bool run_checks, std::uint64_t seed, const Common& opt) {
  Instance inst;
  check(gmpi_instance_from_json(read_file(path).c_str(), opt.max_taylor, &inst.p));
  Construction con;
  const gmpi_status built = gmpi_construct(inst.p, opt.max_taylor, &con.p);
  if (built == GMPI_ERR_INVARIANT && run_checks) {
    CString report;
    int passed = 0;
    check(gmpi_instance_check(inst.p, opt.max_taylor, seed, &report.p, &passed));
    const nlohmann::json checks = nlohmann::json::parse(report.str());
    if (opt.json) {
      emit(pretty({{"checks", checks}, {"passed", passed == 1}}), opt.out);
    } else {
      emit(check_lines(checks) + (passed ? "PASS\n" : "FAIL\n"), opt.out);
    }
    return passed ? kExitPass : kExitCheckFailure;
  }
  check(built);
  CString summary_str;
  check(gmpi_construction_summary_json(con.p, &summary_str.p));
  nlohmann::json summary = nlohmann::json::parse(summary_str.str());

  nlohmann::json checks;
  int passed = 1;
  if (run_checks) {
    CString report;
    check(gmpi_construction_check(con.p, seed, &report.p, &passed));
    checks = nlohmann::json::parse(report.str());
  }

  if (opt.json) {
    if (run_checks) {
      summary["checks"] = checks;
      summary["passed"] = passed == 1;
    }
    emit(pretty(summary), opt.out);
  } else {
    CString betti;
    check(gmpi_construction_betti_text(con.p, &betti.p));
    std::ostringstream out;
    out << "I = " << join_generators(summary["I"]) << "\n";
    out << "L = " << join_generators(summary["L"]) << "\n";
    out << "|G(L)| = " << summary["L"].size() << "\n";
    out << "Betti table of T/L:\n" << betti.str();
    out << "reg I = " << summary["reg_I"] << ", reg L = " << summary["reg_L"];
    if (!summary["hypothesis"].get<bool>()) out << " (substitutions not all linear)";
    out << "\npd T/L = " << summary["pd"] << " (formula " << summary["pd_formula"] << ")\n";
    if (run_checks) out << check_lines(checks) << (passed ? "PASS" : "FAIL") << "\n";
    emit(out.str(), opt.out);
  }
  return passed ? kExitPass : kExitCheckFailure;
}

struct FamilyArgs {
  std::string tag;
  int m = 0;
  std::vector<int> d;
  int count = 1;
  int t = 0;
  std::vector<int> caps, parts, sizes, delta;
  std::string inducing;
  std::uint64_t seed = 0;
};

std::vector<std::vector<int>> parse_vectors(const std::string& s) {
  std::vector<std::vector<int>> out;
  std::stringstream outer(s);
  std::string item;
  while (std::getline(outer, item, ';')) {
    std::vector<int> v;
    std::stringstream inner(item);
    std::string x;
    while (std::getline(inner, x, ',')) {
      try {
        v.push_back(std::stoi(x));
      } catch (const std::exception&) {
        std::cerr << "error: cannot parse '" << x << "' in --inducing\n";
        throw Failure{kExitInputError};
      }
    }
    out.push_back(v);
  }
  return out;
}

int cmd_family(const FamilyArgs& a, const Common& opt) {
  nlohmann::json request = {{"family", a.tag}};
  if (a.m) request["m"] = a.m;
  if (a.d.size() == 1 && a.tag != "mixed-product") request["d"] = a.d.front();
  if (!a.d.empty() && a.tag == "mixed-product") request["d"] = a.d;
  request["count"] = a.count;
  if (a.t) request["t"] = a.t;
  if (!a.caps.empty()) request["caps"] = a.caps;
  if (!a.parts.empty()) request["parts"] = a.parts;
  if (!a.sizes.empty()) request["sizes"] = a.sizes;
  if (!a.delta.empty()) request["delta"] = a.delta;
  if (!a.inducing.empty()) request["inducing"] = parse_vectors(a.inducing);
  request["seed"] = a.seed;
  CString out;
  check(gmpi_family_json(request.dump().c_str(), &out.p));
  emit(pretty(nlohmann::json::parse(out.str())), opt.out);
  return kExitPass;
}

int cmd_verify(const std::vector<std::uint64_t>& seeds, const Common& opt) {
  CString report;
  int passed = 0;
  check(gmpi_run_suite(seeds.empty() ? nullptr : seeds.data(), seeds.size(), &report.p, &passed));
  const nlohmann::json suite = nlohmann::json::parse(report.str());
  if (opt.json) {
    emit(pretty(suite), opt.out);
  } else {
    std::ostringstream out;
    for (const auto& inst : suite) {
      out << "seed " << inst["seed"] << ": " << (inst["passed"].get<bool>() ? "PASS" : "FAIL") << "\n";
      for (const auto& c : inst["checks"]) {
        if (c["status"] == "FAIL") out << check_lines(nlohmann::json::array({c}));
      }
    }
    out << (passed ? "PASS" : "FAIL") << " (" << suite.size() << " instances)\n";
    emit(out.str(), opt.out);
  }
  return passed ? kExitPass : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized mixed product ideals: resolutions and invariant checks"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", common.json, "Machine-readable output");
    sub->add_option("--max-taylor", common.max_taylor, "Generator cap for Taylor resolutions")
        ->check(CLI::Range(1, 24));
    sub->add_option("--out", common.out, "Write output to this file");
  };

  std::string path;
  auto* resolve = app.add_subcommand("resolve", "Minimal resolution and Betti table of an ideal document");
  resolve->add_option("path", path, "Ideal JSON document")->required();
  add_common(resolve);

  bool run_checks = false;
  std::uint64_t seed = 0;
  auto* gmpi = app.add_subcommand("gmpi", "Build L and Tot(D) from an instance document");
  gmpi->add_option("path", path, "Instance JSON document")->required();
  gmpi->add_flag("--check", run_checks, "Run every verification check");
  gmpi->add_option("--seed", seed, "Seed for randomized self-checks");
  add_common(gmpi);

  FamilyArgs fam;
  auto* family = app.add_subcommand("family", "Emit a family ideal or instance document");
  family->add_option("tag", fam.tag, "Family tag")
      ->required()
      ->check(CLI::IsMember({"squarefree-veronese", "power-of-maximal", "lex-segment", "veronese-type",
                             "path-ideal", "mixed-product", "expansion", "random"}));
  family->add_option("--m", fam.m, "Number of variables");
  family->add_option("--d", fam.d, "Degree (a list for mixed-product)")->delimiter(',');
  family->add_option("--count", fam.count, "Lex-segment length");
  family->add_option("--t", fam.t, "Path length in vertices / Veronese-type degree");
  family->add_option("--caps", fam.caps, "Veronese-type exponent caps")->delimiter(',');
  family->add_option("--parts", fam.parts, "Part sizes of the multipartite graph")->delimiter(',');
  family->add_option("--sizes", fam.sizes, "Block sizes")->delimiter(',');
  family->add_option("--delta", fam.delta, "Second degree vector for mixed-product")->delimiter(',');
  family->add_option("--inducing", fam.inducing, "Inducing generators for expansion, e.g. 2,1;1,2");
  family->add_option("--seed", fam.seed, "Seed for the random family");
  add_common(family);

  std::vector<std::uint64_t> seeds;
  auto* verify = app.add_subcommand("verify", "Run the seeded acceptance suite");
  verify->add_option("--seed", seeds, "Seeds to run (default: the pinned suite)");
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInputError;
  }

  try {
    if (*resolve) return cmd_resolve(path, common);
    if (*gmpi) return cmd_gmpi(path, run_checks, seed, common);
    if (*family) return cmd_family(fam, common);
    if (*verify) return cmd_verify(seeds, common);
  } catch (const Failure& f) {
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
