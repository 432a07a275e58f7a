#include "gmpi/monomial.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <sstream>

#include "gmpi/error.hpp"

namespace gmpi {

namespace {

std::string default_block_name(int i, int n) {
  if (n <= 3) return std::string(1, "xyz"[i]);
  return "x" + std::to_string(i + 1);
}

void require_same_length(const ExponentVector& a, const ExponentVector& b) {
  if (a.size() != b.size()) {
    throw ContextMismatch("exponent vectors of length " + std::to_string(a.size()) + " and " +
                          std::to_string(b.size()));
  }
}

void require_same_context(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (!(a.context() == b.context())) throw ContextMismatch("ideals over different variable contexts");
}

}  // namespace

VariableContext::VariableContext(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw InputError("a variable context needs at least one block");
  for (int i = 0; i < num_blocks(); ++i) {
    if (blocks_[i].size < 1) throw InputError("block '" + blocks_[i].name + "' has size < 1");
    offsets_.push_back(num_vars_);
    for (int k = 0; k < blocks_[i].size; ++k) owner_.push_back(i);
    num_vars_ += blocks_[i].size;
  }
}

VariableContext VariableContext::standard(int n) {
  std::vector<int> ones(static_cast<std::size_t>(std::max(n, 0)), 1);
  return with_block_sizes(ones);
}

VariableContext VariableContext::with_block_sizes(std::span<const int> sizes) {
  std::vector<Block> blocks;
  const int n = static_cast<int>(sizes.size());
  for (int i = 0; i < n; ++i) blocks.push_back({default_block_name(i, n), sizes[i]});
  return VariableContext(std::move(blocks));
}

int VariableContext::flat_index(int block, int position) const {
  if (block < 0 || block >= num_blocks() || position < 0 || position >= blocks_[block].size) {
    throw InputError("variable (" + std::to_string(block) + "," + std::to_string(position) +
                     ") out of range");
  }
  return offsets_[block] + position;
}

std::pair<int, int> VariableContext::block_position(int flat) const {
  const int b = owner_.at(flat);
  return {b, flat - offsets_[b]};
}

VariableContext VariableContext::block_context(int i) const { return VariableContext({blocks_.at(i)}); }

std::string VariableContext::variable_name(int flat) const {
  auto [b, p] = block_position(flat);
  if (blocks_[b].size == 1) return blocks_[b].name;
  return blocks_[b].name + std::to_string(p + 1);
}

ExponentVector::ExponentVector(std::initializer_list<int> values) : ExponentVector(std::vector<int>(values)) {}

ExponentVector::ExponentVector(std::vector<int> values) : e_(std::move(values)) {
  for (int v : e_) {
    if (v < 0) throw InputError("negative exponent");
  }
}

int ExponentVector::total_degree() const noexcept {
  int d = 0;
  for (int v : e_) d += v;
  return d;
}

bool ExponentVector::is_zero() const noexcept {
  return std::all_of(e_.begin(), e_.end(), [](int v) { return v == 0; });
}

ExponentVector ExponentVector::operator+(const ExponentVector& other) const {
  require_same_length(*this, other);
  ExponentVector r(size());
  for (std::size_t i = 0; i < size(); ++i) {
    assert(e_[i] <= std::numeric_limits<int>::max() - other.e_[i]);
    r.e_[i] = e_[i] + other.e_[i];
  }
  return r;
}

ExponentVector ExponentVector::operator-(const ExponentVector& other) const {
  require_same_length(*this, other);
  ExponentVector r(size());
  for (std::size_t i = 0; i < size(); ++i) {
    if (e_[i] < other.e_[i]) throw InvariantViolation("monomial quotient with negative exponent");
    r.e_[i] = e_[i] - other.e_[i];
  }
  return r;
}

std::size_t ExponentVectorHash::operator()(const ExponentVector& v) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (int x : v) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ull;
  return h;
}

bool divides(const ExponentVector& a, const ExponentVector& b) {
  require_same_length(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

ExponentVector lcm(const ExponentVector& a, const ExponentVector& b) {
  require_same_length(a, b);
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

ExponentVector gcd(const ExponentVector& a, const ExponentVector& b) {
  require_same_length(a, b);
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::min(a[i], b[i]);
  return r;
}

int block_degree(const VariableContext& ctx, const ExponentVector& a, int block) {
  if (static_cast<int>(a.size()) != ctx.num_vars()) throw ContextMismatch("vector length differs from context");
  int d = 0;
  for (int k = 0; k < ctx.block_size(block); ++k) d += a[ctx.offset(block) + k];
  return d;
}

ExponentVector block_degrees(const VariableContext& ctx, const ExponentVector& a) {
  ExponentVector r(static_cast<std::size_t>(ctx.num_blocks()));
  for (int b = 0; b < ctx.num_blocks(); ++b) r[b] = block_degree(ctx, a, b);
  return r;
}

std::string to_string(const VariableContext& ctx, const ExponentVector& a) {
  if (static_cast<int>(a.size()) != ctx.num_vars()) return to_string(a);
  std::string out;
  for (int v = 0; v < ctx.num_vars(); ++v) {
    if (a[v] == 0) continue;
    out += ctx.variable_name(v);
    if (a[v] > 1) out += "^" + std::to_string(a[v]);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const ExponentVector& a) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
  os << ')';
  return os.str();
}

std::vector<ExponentVector> minimal_generators(std::vector<ExponentVector> gens) {
  // Low total degree first: a divisor always precedes what it divides.
  std::sort(gens.begin(), gens.end(), [](const ExponentVector& a, const ExponentVector& b) {
    const int da = a.total_degree(), db = b.total_degree();
    return da != db ? da < db : a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<ExponentVector> kept;
  for (auto& g : gens) {
    bool redundant = false;
    for (const auto& k : kept) {
      if (divides(k, g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(std::move(g));
  }
  std::sort(kept.begin(), kept.end(), canonical_before);
  return kept;
}

MonomialIdeal::MonomialIdeal(VariableContext ctx, std::vector<ExponentVector> gens) : ctx_(std::move(ctx)) {
  for (const auto& g : gens) {
    if (static_cast<int>(g.size()) != ctx_.num_vars()) {
      throw ContextMismatch("generator " + gmpi::to_string(g) + " does not match a context of " +
                            std::to_string(ctx_.num_vars()) + " variables");
    }
  }
  gens_ = minimal_generators(std::move(gens));
}

MonomialIdeal MonomialIdeal::unit(VariableContext ctx) {
  const auto n = static_cast<std::size_t>(ctx.num_vars());
  return MonomialIdeal(std::move(ctx), {ExponentVector(n)});
}

MonomialIdeal MonomialIdeal::zero(VariableContext ctx) { return MonomialIdeal(std::move(ctx), {}); }

bool MonomialIdeal::is_unit() const noexcept { return gens_.size() == 1 && gens_.front().is_zero(); }

bool MonomialIdeal::contains(const ExponentVector& m) const {
  for (const auto& g : gens_) {
    if (divides(g, m)) return true;
  }
  return false;
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  require_same_context(*this, other);
  return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const auto& g) { return contains(g); });
}

int MonomialIdeal::generation_degree() const noexcept {
  if (gens_.empty()) return -1;
  const int d = gens_.front().total_degree();
  for (const auto& g : gens_) {
    if (g.total_degree() != d) return -1;
  }
  return d;
}

std::string MonomialIdeal::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ", ";
    out += gmpi::to_string(ctx_, gens_[i]);
  }
  return out + ")";
}

MonomialIdeal minimalize(const VariableContext& ctx, std::vector<ExponentVector> gens) {
  return MonomialIdeal(ctx, std::move(gens));
}

bool membership(const ExponentVector& m, const MonomialIdeal& ideal) { return ideal.contains(m); }

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_context(a, b);
  std::vector<ExponentVector> out;
  out.reserve(a.size() * b.size());
  for (const auto& g : a.gens()) {
    for (const auto& h : b.gens()) out.push_back(g + h);
  }
  return MonomialIdeal(a.context(), std::move(out));
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_context(a, b);
  std::vector<ExponentVector> out = a.gens();
  out.insert(out.end(), b.gens().begin(), b.gens().end());
  return MonomialIdeal(a.context(), std::move(out));
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_context(a, b);
  std::vector<ExponentVector> out;
  out.reserve(a.size() * b.size());
  for (const auto& g : a.gens()) {
    for (const auto& h : b.gens()) out.push_back(lcm(g, h));
  }
  return MonomialIdeal(a.context(), std::move(out));
}

MonomialIdeal intersect(const VariableContext& ctx, std::span<const MonomialIdeal> ideals) {
  MonomialIdeal acc = MonomialIdeal::unit(ctx);
  for (const auto& j : ideals) acc = intersect(acc, j);
  return acc;
}

ExponentVector embed_block(const ExponentVector& v, const VariableContext& full, int block) {
  if (static_cast<int>(v.size()) != full.block_size(block)) {
    throw ContextMismatch("vector of length " + std::to_string(v.size()) + " does not fit block " +
                          full.block(block).name);
  }
  ExponentVector out(static_cast<std::size_t>(full.num_vars()));
  for (std::size_t k = 0; k < v.size(); ++k) out[full.offset(block) + k] = v[k];
  return out;
}

MonomialIdeal embed_block(const MonomialIdeal& block_ideal, const VariableContext& full, int block) {
  if (!(block_ideal.context() == full.block_context(block))) {
    throw ContextMismatch("ideal is not over block '" + full.block(block).name + "'");
  }
  std::vector<ExponentVector> gens;
  for (const auto& g : block_ideal.gens()) gens.push_back(embed_block(g, full, block));
  return MonomialIdeal(full, std::move(gens));
}

ExponentVector restrict_block(const ExponentVector& v, const VariableContext& full, int block) {
  if (static_cast<int>(v.size()) != full.num_vars()) throw ContextMismatch("vector length differs from context");
  ExponentVector out(static_cast<std::size_t>(full.block_size(block)));
  for (int k = 0; k < full.block_size(block); ++k) out[k] = v[full.offset(block) + k];
  return out;
}

}  // namespace gmpi
