#include "famloc/ring.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "famloc/errors.hpp"
#include "famloc/polynomial.hpp"

namespace famloc {

// ---------------------------------------------------------------- Monomial

unsigned Monomial::total_degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), 0u);
}

unsigned Monomial::degree_in(std::span<const std::size_t> vars) const {
  unsigned d = 0;
  for (auto v : vars) d += exps_[v];
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i)
    r.exps_[i] = std::max(exps_[i], other.exps_[i]);
  return r;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= divisor.exps_[i];
  return r;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto e : exps_) {
    h ^= e + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

// ---------------------------------------------------------------- TermOrder

TermOrder::TermOrder(std::vector<Block> blocks, std::size_t nvars)
    : blocks_(std::move(blocks)), nvars_(nvars) {
  std::vector<int> seen(nvars, 0);
  for (const auto& b : blocks_)
    for (auto v : b.vars) {
      if (v >= nvars || seen[v]++) throw PreconditionError("term order: bad variable index");
    }
  for (auto s : seen)
    if (!s) throw PreconditionError("term order must cover every variable");
  std::erase_if(blocks_, [](const Block& b) { return b.vars.empty(); });
}

TermOrder TermOrder::lex(std::vector<std::size_t> vars, std::size_t nvars) {
  return TermOrder({Block{Kind::Lex, std::move(vars)}}, nvars);
}

TermOrder TermOrder::grevlex(std::vector<std::size_t> vars, std::size_t nvars) {
  return TermOrder({Block{Kind::Grevlex, std::move(vars)}}, nvars);
}

std::strong_ordering TermOrder::compare(const Monomial& a, const Monomial& b) const {
  for (const auto& block : blocks_) {
    if (block.kind == Kind::Lex) {
      for (auto v : block.vars)
        if (a[v] != b[v]) return a[v] <=> b[v];
    } else {
      unsigned da = 0, db = 0;
      for (auto v : block.vars) {
        da += a[v];
        db += b[v];
      }
      if (da != db) return da <=> db;
      for (auto it = block.vars.rbegin(); it != block.vars.rend(); ++it)
        if (a[*it] != b[*it]) return b[*it] <=> a[*it];
    }
  }
  return std::strong_ordering::equal;
}

bool TermOrder::operator==(const TermOrder& other) const {
  if (nvars_ != other.nvars_ || blocks_.size() != other.blocks_.size()) return false;
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    if (blocks_[i].kind != other.blocks_[i].kind || blocks_[i].vars != other.blocks_[i].vars)
      return false;
  return true;
}

// ---------------------------------------------------------------- RingSpec

namespace {

std::vector<std::size_t> iota_range(std::size_t from, std::size_t to) {
  std::vector<std::size_t> v(to - from);
  std::iota(v.begin(), v.end(), from);
  return v;
}

// Moves a term list between rings by symbol name.
std::vector<Term> reindex_terms(const std::vector<Term>& terms, const RingSpec& from,
                                const RingSpec& to) {
  std::vector<std::size_t> map(from.nvars());
  std::vector<bool> ok(from.nvars(), false);
  for (std::size_t i = 0; i < from.nvars(); ++i) {
    if (auto j = to.index_of(from.name(i))) {
      map[i] = *j;
      ok[i] = true;
    }
  }
  std::vector<Term> out;
  out.reserve(terms.size());
  for (const auto& t : terms) {
    Monomial m(to.nvars());
    for (std::size_t i = 0; i < from.nvars(); ++i) {
      if (t.monomial[i] == 0) continue;
      if (!ok[i]) throw RingMismatch("symbol '" + from.name(i) + "' missing in target ring");
      m.set(map[i], t.monomial[i]);
    }
    out.push_back({std::move(m), t.coefficient});
  }
  return out;
}

bool terms_use_only(const std::vector<Term>& terms, const std::vector<bool>& allowed) {
  for (const auto& t : terms)
    for (std::size_t i = 0; i < t.monomial.size(); ++i)
      if (t.monomial[i] != 0 && !allowed[i]) return false;
  return true;
}

}  // namespace

Ring RingSpec::make(std::vector<std::string> params, std::vector<std::string> main,
                    std::vector<std::string> aux) {
  std::shared_ptr<RingSpec> r(new RingSpec());
  r->params_ = std::move(params);
  r->main_ = std::move(main);
  r->aux_ = std::move(aux);
  r->finish();
  return r;
}

void RingSpec::finish() {
  symbols_.clear();
  symbols_.insert(symbols_.end(), params_.begin(), params_.end());
  symbols_.insert(symbols_.end(), main_.begin(), main_.end());
  symbols_.insert(symbols_.end(), aux_.begin(), aux_.end());
  std::set<std::string> uniq(symbols_.begin(), symbols_.end());
  if (uniq.size() != symbols_.size())
    throw PreconditionError("ring symbols must be pairwise distinct");
  for (const auto& s : symbols_)
    if (s.empty()) throw PreconditionError("empty ring symbol");
  default_order_ = fiber_order(*this, TermOrder::Kind::Grevlex);
}

Ring RingSpec::with_relations(const std::vector<Polynomial>& relations) const {
  std::shared_ptr<RingSpec> r(new RingSpec());
  r->params_ = params_;
  r->main_ = main_;
  r->aux_ = aux_;
  r->finish();
  for (const auto& rel : relations) {
    if (!rel.ring()->same_symbols(*this))
      throw RingMismatch("relation uses symbols not declared in the ring");
    if (rel.is_zero()) continue;
    r->relations_.push_back(normalize(rel).terms());
  }
  return r;
}

std::optional<std::size_t> RingSpec::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < symbols_.size(); ++i)
    if (symbols_[i] == name) return i;
  return std::nullopt;
}

std::size_t RingSpec::require_index(std::string_view name) const {
  if (auto i = index_of(name)) return *i;
  throw PreconditionError("unknown symbol '" + std::string(name) + "'");
}

VarBlock RingSpec::block_of(std::size_t index) const {
  if (index < params_.size()) return VarBlock::Parameter;
  if (index < params_.size() + main_.size()) return VarBlock::Main;
  return VarBlock::Aux;
}

std::vector<std::size_t> RingSpec::param_indices() const { return iota_range(0, params_.size()); }

std::vector<std::size_t> RingSpec::main_indices() const {
  return iota_range(params_.size(), params_.size() + main_.size());
}

std::vector<std::size_t> RingSpec::aux_indices() const {
  return iota_range(params_.size() + main_.size(), symbols_.size());
}

std::vector<std::size_t> RingSpec::fiber_indices() const {
  return iota_range(params_.size(), symbols_.size());
}

std::vector<Polynomial> RingSpec::relations() const {
  std::vector<Polynomial> out;
  auto self = shared_from_this();
  for (const auto& terms : relations_) out.emplace_back(self, terms);
  return out;
}

Ring RingSpec::param_ring() const {
  std::shared_ptr<RingSpec> r(new RingSpec());
  r->params_ = params_;
  r->finish();
  std::vector<bool> allowed(nvars(), false);
  for (std::size_t i = 0; i < params_.size(); ++i) allowed[i] = true;
  for (const auto& rel : relations_)
    if (terms_use_only(rel, allowed)) r->relations_.push_back(reindex_terms(rel, *this, *r));
  return r;
}

Ring RingSpec::fiber_ring() const {
  std::shared_ptr<RingSpec> r(new RingSpec());
  r->main_ = main_;
  r->aux_ = aux_;
  r->finish();
  std::vector<bool> allowed(nvars(), true);
  for (std::size_t i = 0; i < params_.size(); ++i) allowed[i] = false;
  for (const auto& rel : relations_)
    if (terms_use_only(rel, allowed)) r->relations_.push_back(reindex_terms(rel, *this, *r));
  return r;
}

Ring RingSpec::with_extra(VarBlock block, const std::vector<std::string>& names) const {
  auto p = params_;
  auto m = main_;
  auto a = aux_;
  auto& dst = block == VarBlock::Parameter ? p : block == VarBlock::Main ? m : a;
  dst.insert(dst.end(), names.begin(), names.end());
  return retag(std::move(p), std::move(m), std::move(a));
}

Ring RingSpec::retag(std::vector<std::string> params, std::vector<std::string> main,
                     std::vector<std::string> aux) const {
  std::shared_ptr<RingSpec> r(new RingSpec());
  r->params_ = std::move(params);
  r->main_ = std::move(main);
  r->aux_ = std::move(aux);
  r->finish();
  for (const auto& rel : relations_) r->relations_.push_back(reindex_terms(rel, *this, *r));
  return r;
}

Ring RingSpec::without(const std::vector<std::string>& names) const {
  auto drop = [&](std::vector<std::string> v) {
    std::erase_if(v, [&](const std::string& s) {
      return std::find(names.begin(), names.end(), s) != names.end();
    });
    return v;
  };
  std::shared_ptr<RingSpec> r(new RingSpec());
  r->params_ = drop(params_);
  r->main_ = drop(main_);
  r->aux_ = drop(aux_);
  r->finish();
  std::vector<bool> allowed(nvars(), true);
  for (const auto& n : names)
    if (auto i = index_of(n)) allowed[*i] = false;
  for (const auto& rel : relations_)
    if (terms_use_only(rel, allowed)) r->relations_.push_back(reindex_terms(rel, *this, *r));
  return r;
}

std::string RingSpec::fresh_symbol(std::string_view base) const {
  std::string candidate(base);
  for (int k = 2; index_of(candidate); ++k) candidate = std::string(base) + "_" + std::to_string(k);
  return candidate;
}

bool RingSpec::same_symbols(const RingSpec& other) const {
  return params_ == other.params_ && main_ == other.main_ && aux_ == other.aux_;
}

bool RingSpec::operator==(const RingSpec& other) const {
  if (!same_symbols(other) || relations_.size() != other.relations_.size()) return false;
  for (std::size_t i = 0; i < relations_.size(); ++i) {
    const auto& a = relations_[i];
    const auto& b = other.relations_[i];
    if (a.size() != b.size()) return false;
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a[j].monomial != b[j].monomial || a[j].coefficient != b[j].coefficient) return false;
  }
  return true;
}

std::string RingSpec::describe() const {
  std::ostringstream os;
  auto list = [&](const char* label, const std::vector<std::string>& v) {
    os << label << "[";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << "]";
  };
  list("params", params_);
  list(" main", main_);
  list(" aux", aux_);
  if (!relations_.empty()) {
    os << " relations[";
    auto rels = relations();
    for (std::size_t i = 0; i < rels.size(); ++i) os << (i ? ", " : "") << rels[i].to_string();
    os << "]";
  }
  return os.str();
}

bool rings_equal(const Ring& a, const Ring& b) { return a == b || *a == *b; }

void require_same_ring(const Ring& a, const Ring& b, std::string_view op) {
  if (!rings_equal(a, b))
    throw RingMismatch(std::string(op) + ": ring mismatch (" + a->describe() + " vs " +
                       b->describe() + ")");
}

TermOrder grevlex_order(const RingSpec& ring) {
  return TermOrder::grevlex(iota_range(0, ring.nvars()), ring.nvars());
}

TermOrder lex_order(const RingSpec& ring) {
  return TermOrder::lex(iota_range(0, ring.nvars()), ring.nvars());
}

TermOrder elimination_order(const RingSpec& ring, const std::vector<std::size_t>& outer) {
  std::vector<bool> in_outer(ring.nvars(), false);
  for (auto v : outer) in_outer[v] = true;
  std::vector<std::size_t> inner;
  std::vector<std::size_t> sorted_outer;
  for (std::size_t i = 0; i < ring.nvars(); ++i) (in_outer[i] ? sorted_outer : inner).push_back(i);
  return TermOrder({{TermOrder::Kind::Grevlex, sorted_outer}, {TermOrder::Kind::Grevlex, inner}},
                   ring.nvars());
}

TermOrder fiber_order(const RingSpec& ring, TermOrder::Kind fiber_kind) {
  return TermOrder({{fiber_kind, ring.fiber_indices()},
                    {TermOrder::Kind::Grevlex, ring.param_indices()}},
                   ring.nvars());
}

}  // namespace famloc
