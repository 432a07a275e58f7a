#ifndef GMPI_IO_HPP
#define GMPI_IO_HPP

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "gmpi/construction.hpp"

namespace gmpi {

// {"variables": ["x", "y"], "generators": [[1, 0], [0, 2]]}. A document
// with "blocks" instead of "variables" is read over that block context.
MonomialIdeal ideal_from_json(const nlohmann::json& doc);
nlohmann::json ideal_to_json(const MonomialIdeal& ideal);

// Generators as strings in the context's variable names.
nlohmann::json generator_strings(const MonomialIdeal& ideal);

// The instance file format:
//   "blocks":          [{"name": "x", "size": 2}, ...]
//   "inducing_ideal":  [[2, 1], [1, 2]]       (one entry per block)
//   "substitutions":   {"x:2": [[2, 0], ...] | {"family": tag, ...}, ...}
//   "options":         {"max_taylor": 14, "nesting": "enforce" | "bypass"}
struct InstanceDocument {
  VariableContext ring;
  std::vector<ExponentVector> inducing;
  nlohmann::json substitutions = nlohmann::json::object();
  nlohmann::json options = nlohmann::json::object();
};

// Schema check and parse; throws InputError naming the offending key.
InstanceDocument parse_instance_document(const nlohmann::json& doc);
nlohmann::json to_json(const InstanceDocument& doc);

std::size_t max_taylor_option(const InstanceDocument& doc);
// Expands family shorthands and validates. Throws ValidationError or
// InputError.
GmpiInstance build_instance(const InstanceDocument& doc);
// Explicit-generator document for an instance.
InstanceDocument document_from(const GmpiInstance& instance);

// Macaulay2-style triangle: rows are strands j - k, columns homological
// positions, "." for zero.
std::string betti_triangle(const BettiTable& table);
// {"graded": [[k, j, beta], ...], "multigraded": [[k, [exps], beta], ...]}
nlohmann::json betti_to_json(const BettiTable& table);

// Emits a family ideal or instance document from a request such as
// {"family": "path-ideal", "parts": [2, 2], "t": 2}. Tags:
// squarefree-veronese, power-of-maximal, lex-segment (m, d[, count]),
// veronese-type (caps, t), path-ideal (parts, t), mixed-product
// (sizes, d, delta), expansion (sizes, inducing), random (seed).
nlohmann::json emit_family(const nlohmann::json& request);

}  // namespace gmpi

#endif  // GMPI_IO_HPP
