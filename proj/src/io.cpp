#include "gmpi/io.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "gmpi/error.hpp"
#include "gmpi/families.hpp"

namespace gmpi {

using nlohmann::json;

namespace {

template <class F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed JSON document: ") + e.what());
  }
}

const json& require(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) throw InputError(std::string("missing key '") + key + "'");
  return obj.at(key);
}

int read_int(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw InputError(where + " must be an integer");
  return v.get<int>();
}

std::vector<int> read_ints(const json& v, const std::string& where) {
  if (!v.is_array()) throw InputError(where + " must be an array of integers");
  std::vector<int> out;
  for (const auto& x : v) out.push_back(read_int(x, where));
  return out;
}

ExponentVector read_vector(const json& v, std::size_t length, const std::string& where) {
  std::vector<int> e = read_ints(v, where);
  if (e.size() != length) {
    throw InputError(where + " has length " + std::to_string(e.size()) + ", expected " + std::to_string(length));
  }
  for (int x : e) {
    if (x < 0) throw InputError(where + " has a negative exponent");
  }
  return ExponentVector(std::move(e));
}

std::vector<ExponentVector> read_vectors(const json& v, std::size_t length, const std::string& where) {
  if (!v.is_array()) throw InputError(where + " must be an array of exponent vectors");
  std::vector<ExponentVector> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(read_vector(v[i], length, where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

VariableContext read_blocks(const json& v) {
  if (!v.is_array() || v.empty()) throw InputError("'blocks' must be a nonempty array");
  std::vector<VariableContext::Block> blocks;
  std::set<std::string> names;
  for (const auto& b : v) {
    if (!b.is_object() || !b.contains("name") || !b.at("name").is_string()) {
      throw InputError("each block needs a string 'name'");
    }
    const std::string name = b.at("name").get<std::string>();
    const int size = b.contains("size") ? read_int(b.at("size"), "block size") : 1;
    if (size < 1) throw InputError("block '" + name + "' must have size >= 1");
    if (name.empty() || !names.insert(name).second) throw InputError("block names must be nonempty and distinct");
    blocks.push_back({name, size});
  }
  return VariableContext(std::move(blocks));
}

json blocks_json(const VariableContext& ctx) {
  json out = json::array();
  for (const auto& b : ctx.blocks()) out.push_back({{"name", b.name}, {"size", b.size}});
  return out;
}

json vectors_json(const std::vector<ExponentVector>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(v.values());
  return out;
}

int block_index(const VariableContext& ring, const std::string& name) {
  for (int l = 0; l < ring.num_blocks(); ++l) {
    if (ring.block(l).name == name) return l;
  }
  throw InputError("substitution key names unknown block '" + name + "'");
}

std::pair<int, int> parse_key(const VariableContext& ring, const std::string& key) {
  const auto colon = key.rfind(':');
  if (colon == std::string::npos) throw InputError("substitution key '" + key + "' is not of the form block:degree");
  const int l = block_index(ring, key.substr(0, colon));
  int d = 0;
  try {
    std::size_t used = 0;
    d = std::stoi(key.substr(colon + 1), &used);
    if (used != key.size() - colon - 1) throw std::invalid_argument(key);
  } catch (const std::exception&) {
    throw InputError("substitution key '" + key + "' has a non-integer degree");
  }
  return {l, d};
}

}  // namespace

MonomialIdeal ideal_from_json(const json& doc) {
  return guarded([&] {
    if (!doc.is_object()) throw InputError("an ideal document must be a JSON object");
    VariableContext ctx;
    if (doc.contains("blocks")) {
      ctx = read_blocks(doc.at("blocks"));
    } else {
      const json& vars = require(doc, "variables");
      if (!vars.is_array() || vars.empty()) throw InputError("'variables' must be a nonempty array");
      json blocks = json::array();
      for (const auto& v : vars) {
        if (!v.is_string()) throw InputError("variable names must be strings");
        blocks.push_back({{"name", v}, {"size", 1}});
      }
      ctx = read_blocks(blocks);
    }
    return MonomialIdeal(
        ctx, read_vectors(require(doc, "generators"), static_cast<std::size_t>(ctx.num_vars()), "generators"));
  });
}

json ideal_to_json(const MonomialIdeal& ideal) {
  const VariableContext& ctx = ideal.context();
  json doc;
  const bool flat = std::all_of(ctx.blocks().begin(), ctx.blocks().end(), [](const auto& b) { return b.size == 1; });
  if (flat) {
    json names = json::array();
    for (const auto& b : ctx.blocks()) names.push_back(b.name);
    doc["variables"] = names;
  } else {
    doc["blocks"] = blocks_json(ctx);
  }
  doc["generators"] = vectors_json(ideal.gens());
  return doc;
}

json generator_strings(const MonomialIdeal& ideal) {
  json out = json::array();
  for (const auto& g : ideal.gens()) out.push_back(to_string(ideal.context(), g));
  return out;
}

InstanceDocument parse_instance_document(const json& doc) {
  return guarded([&] {
    if (!doc.is_object()) throw InputError("an instance document must be a JSON object");
    for (const auto& [key, value] : doc.items()) {
      if (key != "blocks" && key != "inducing_ideal" && key != "substitutions" && key != "options") {
        throw InputError("unknown key '" + key + "' in instance document");
      }
    }
    InstanceDocument out;
    out.ring = read_blocks(require(doc, "blocks"));
    out.inducing = read_vectors(require(doc, "inducing_ideal"), static_cast<std::size_t>(out.ring.num_blocks()),
                                "inducing_ideal");
    if (out.inducing.empty()) throw InputError("'inducing_ideal' must have at least one generator");
    const json& subs = require(doc, "substitutions");
    if (!subs.is_object()) throw InputError("'substitutions' must be an object");
    for (const auto& [key, value] : subs.items()) {
      const auto [l, d] = parse_key(out.ring, key);
      if (value.is_array()) {
        read_vectors(value, static_cast<std::size_t>(out.ring.block_size(l)), "substitution " + key);
      } else if (value.is_object()) {
        if (!value.contains("family") || !value.at("family").is_string()) {
          throw InputError("substitution " + key + " needs a string 'family'");
        }
        parse_family_kind(value.at("family").get<std::string>());
      } else {
        throw InputError("substitution " + key + " must be a generator list or a family object");
      }
      (void)d;
    }
    out.substitutions = subs;
    if (doc.contains("options")) {
      out.options = doc.at("options");
      if (!out.options.is_object()) throw InputError("'options' must be an object");
      if (out.options.contains("max_taylor")) {
        const int cap = read_int(out.options.at("max_taylor"), "options.max_taylor");
        if (cap < 1 || cap > 24) throw InputError("options.max_taylor must lie in 1..24");
      }
      if (out.options.contains("nesting")) {
        const json& n = out.options.at("nesting");
        if (!n.is_string() || (n != "enforce" && n != "bypass")) {
          throw InputError("options.nesting must be \"enforce\" or \"bypass\"");
        }
      }
    }
    return out;
  });
}

json to_json(const InstanceDocument& doc) {
  json out = {{"blocks", blocks_json(doc.ring)},
              {"inducing_ideal", vectors_json(doc.inducing)},
              {"substitutions", doc.substitutions}};
  if (!doc.options.empty()) out["options"] = doc.options;
  return out;
}

std::size_t max_taylor_option(const InstanceDocument& doc) {
  if (doc.options.contains("max_taylor")) return doc.options.at("max_taylor").get<std::size_t>();
  return kDefaultTaylorCap;
}

GmpiInstance build_instance(const InstanceDocument& doc) {
  return guarded([&] {
    SubstitutionFamily family;
    for (const auto& [key, value] : doc.substitutions.items()) {
      const auto [l, d] = parse_key(doc.ring, key);
      const VariableContext block = doc.ring.block_context(l);
      if (value.is_array()) {
        family.set(l, d, MonomialIdeal(block, read_vectors(value, static_cast<std::size_t>(block.num_vars()), key)));
      } else {
        BlockFamily f{parse_family_kind(value.at("family").get<std::string>())};
        f.count = value.contains("count") ? read_int(value.at("count"), key + ".count") : 1;
        f.base_degree = value.contains("base_degree") ? read_int(value.at("base_degree"), key + ".base_degree") : d;
        family.set(l, d, f.ideal(block, d));
      }
    }
    const bool bypass = doc.options.contains("nesting") && doc.options.at("nesting") == "bypass";
    const MonomialIdeal inducing(VariableContext::standard(doc.ring.num_blocks()), doc.inducing);
    return GmpiInstance::validate(inducing, doc.ring, std::move(family),
                                  bypass ? NestingPolicy::kBypass : NestingPolicy::kEnforce, max_taylor_option(doc));
  });
}

InstanceDocument document_from(const GmpiInstance& instance) {
  InstanceDocument doc;
  doc.ring = instance.ring();
  doc.inducing = instance.inducing().gens();
  for (const auto& [key, ideal] : instance.family().entries()) {
    doc.substitutions[instance.ring().block(key.first).name + ":" + std::to_string(key.second)] =
        vectors_json(ideal.gens());
  }
  return doc;
}

std::string betti_triangle(const BettiTable& table) {
  const int top = table.max_position();
  if (top < 0) return "";
  int low = 0, high = 0;
  bool first = true;
  for (const auto& [key, v] : table.graded) {
    const int row = key.second - key.first;
    low = first ? row : std::min(low, row);
    high = first ? row : std::max(high, row);
    first = false;
  }
  std::vector<std::string> labels{"", "total:"};
  std::vector<std::vector<std::string>> cells(static_cast<std::size_t>(top) + 1);
  for (int k = 0; k <= top; ++k) {
    cells[k].push_back(std::to_string(k));
    cells[k].push_back(std::to_string(table.total(k)));
  }
  for (int row = low; row <= high; ++row) {
    labels.push_back(std::to_string(row) + ":");
    for (int k = 0; k <= top; ++k) {
      auto it = table.graded.find({k, k + row});
      cells[k].push_back(it == table.graded.end() ? "." : std::to_string(it->second));
    }
  }
  std::size_t label_width = 0;
  for (const auto& l : labels) label_width = std::max(label_width, l.size());
  std::ostringstream out;
  for (std::size_t r = 0; r < labels.size(); ++r) {
    out << std::string(label_width - labels[r].size(), ' ') << labels[r];
    for (int k = 0; k <= top; ++k) {
      std::size_t w = 0;
      for (const auto& c : cells[k]) w = std::max(w, c.size());
      out << ' ' << std::string(w - cells[k][r].size(), ' ') << cells[k][r];
    }
    out << '\n';
  }
  return out.str();
}

json betti_to_json(const BettiTable& table) {
  json graded = json::array(), multi = json::array();
  for (const auto& [key, v] : table.graded) graded.push_back({key.first, key.second, v});
  for (const auto& [key, v] : table.multigraded) multi.push_back({key.first, key.second.values(), v});
  return {{"graded", graded}, {"multigraded", multi}};
}

json emit_family(const json& request) {
  return guarded([&]() -> json {
    const json& tag_json = require(request, "family");
    if (!tag_json.is_string()) throw InputError("'family' must be a string");
    const std::string tag = tag_json.get<std::string>();
    auto num = [&](const char* key) { return read_int(require(request, key), key); };
    auto list = [&](const char* key) { return read_ints(require(request, key), key); };

    if (tag == "squarefree-veronese" || tag == "power-of-maximal" || tag == "lex-segment") {
      const int m = num("m");
      if (m < 1) throw InputError("m must be >= 1");
      const VariableContext ctx = VariableContext::standard(m);
      if (tag == "squarefree-veronese") return ideal_to_json(squarefree_veronese(ctx, num("d")));
      if (tag == "power-of-maximal") return ideal_to_json(power_of_maximal(ctx, num("d")));
      return ideal_to_json(lex_segment_stable(ctx, num("d"), num("count")));
    }
    if (tag == "veronese-type") return ideal_to_json(veronese_type(list("caps"), num("t")));
    if (tag == "path-ideal") {
      const std::vector<int> parts = list("parts");
      if (parts.empty() || std::any_of(parts.begin(), parts.end(), [](int p) { return p < 1; })) {
        throw InputError("parts must be a nonempty list of positive sizes");
      }
      const PathIdealComparison cmp = path_ideal_complete_multipartite(parts, num("t"));
      if (!cmp.agree()) {
        throw InvariantViolation("path enumeration gives " + cmp.direct.to_string() + " but the GMPI gives " +
                                 cmp.via_gmpi.to_string());
      }
      return ideal_to_json(cmp.direct);
    }
    if (tag == "mixed-product") {
      return to_json(document_from(mixed_product_instance(list("sizes"), list("d"), list("delta"))));
    }
    if (tag == "expansion") {
      const std::vector<int> sizes = list("sizes");
      const MonomialIdeal inducing(VariableContext::standard(static_cast<int>(sizes.size())),
                                   read_vectors(require(request, "inducing"), sizes.size(), "inducing"));
      return to_json(document_from(expansion_instance(inducing, sizes)));
    }
    if (tag == "random") {
      const json& s = require(request, "seed");
      if (!s.is_number_unsigned() && !s.is_number_integer()) throw InputError("seed must be an integer");
      return to_json(document_from(random_instance(s.get<std::uint64_t>()).instance));
    }
    throw InputError("unknown family '" + tag + "'");
  });
}

}  // namespace gmpi
