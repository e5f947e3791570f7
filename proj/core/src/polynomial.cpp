#include "famloc/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "famloc/errors.hpp"

namespace famloc {

namespace {

void sort_and_combine(std::vector<Term>& terms, const TermOrder& order) {
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return order.greater(a.monomial, b.monomial);
  });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coefficient += t.coefficient;
    } else {
      out.push_back(std::move(t));
    }
  }
  std::erase_if(out, [](const Term& t) { return sgn(t.coefficient) == 0; });
  terms = std::move(out);
}

std::vector<Term> merge_add(const std::vector<Term>& a, const std::vector<Term>& b, int sign,
                            const TermOrder& order) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    if (i == a.size()) {
      out.push_back(b[j++]);
      if (sign < 0) out.back().coefficient = -out.back().coefficient;
      continue;
    }
    auto c = order.compare(a[i].monomial, b[j].monomial);
    if (c == std::strong_ordering::greater) {
      out.push_back(a[i++]);
    } else if (c == std::strong_ordering::less) {
      out.push_back(b[j++]);
      if (sign < 0) out.back().coefficient = -out.back().coefficient;
    } else {
      Rational s = sign > 0 ? Rational(a[i].coefficient + b[j].coefficient)
                            : Rational(a[i].coefficient - b[j].coefficient);
      if (sgn(s) != 0) out.push_back({a[i].monomial, s});
      ++i;
      ++j;
    }
  }
  return out;
}

std::vector<std::ptrdiff_t> index_map(const RingSpec& from, const RingSpec& to) {
  std::vector<std::ptrdiff_t> map(from.nvars(), -1);
  for (std::size_t i = 0; i < from.nvars(); ++i)
    if (auto j = to.index_of(from.name(i))) map[i] = static_cast<std::ptrdiff_t>(*j);
  return map;
}

}  // namespace

std::string to_string(const Rational& c) {
  Rational r(c);
  r.canonicalize();
  return r.get_str();
}

Polynomial::Polynomial(Ring ring, std::vector<Term> terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
  canonicalize();
}

void Polynomial::canonicalize() {
  for (auto& t : terms_) {
    if (t.monomial.size() != ring_->nvars())
      throw PreconditionError("monomial arity does not match ring");
    t.coefficient.canonicalize();
  }
  sort_and_combine(terms_, ring_->default_order());
}

Polynomial Polynomial::constant(Ring ring, const Rational& c) {
  std::size_t n = ring->nvars();
  return Polynomial(std::move(ring), {Term{Monomial(n), c}});
}

Polynomial Polynomial::variable(Ring ring, std::string_view name) {
  Monomial m(ring->nvars());
  m.set(ring->require_index(name), 1);
  return Polynomial(std::move(ring), {Term{std::move(m), 1}});
}

Polynomial Polynomial::monomial(Ring ring, Monomial m, const Rational& c) {
  return Polynomial(std::move(ring), {Term{std::move(m), c}});
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one());
}

Rational Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coefficient;
  return 0;
}

unsigned Polynomial::total_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.total_degree());
  return d;
}

unsigned Polynomial::degree_in(std::span<const std::size_t> vars) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree_in(vars));
  return d;
}

bool Polynomial::uses_variable(std::size_t index) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return t.monomial[index] != 0; });
}

bool Polynomial::uses_only(std::span<const std::size_t> vars) const {
  std::vector<bool> ok(ring_->nvars(), false);
  for (auto v : vars) ok[v] = true;
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < ok.size(); ++i)
      if (t.monomial[i] != 0 && !ok[i]) return false;
  return true;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coefficient = -t.coefficient;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_ring(ring_, other.ring_, "add");
  terms_ = merge_add(terms_, other.terms_, +1, ring_->default_order());
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_ring(ring_, other.ring_, "subtract");
  terms_ = merge_add(terms_, other.terms_, -1, ring_->default_order());
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.ring_, b.ring_, "multiply");
  if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(a.size() * b.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) acc[s.monomial * t.monomial] += s.coefficient * t.coefficient;
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (sgn(c) != 0) terms.push_back({m, c});
  Polynomial r(a.ring_);
  const auto& order = a.ring_->default_order();
  std::sort(terms.begin(), terms.end(),
            [&](const Term& x, const Term& y) { return order.greater(x.monomial, y.monomial); });
  r.terms_ = std::move(terms);
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coefficient *= c;
  return *this;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

Polynomial Polynomial::mul_monomial(const Monomial& m, const Rational& c) const {
  Polynomial r(ring_);
  if (sgn(c) == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.monomial * m, t.coefficient * c});
  return r;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != ring_->nvars()) throw PreconditionError("evaluate: point has wrong arity");
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational v = t.coefficient;
    for (std::size_t i = 0; i < point.size() && sgn(v) != 0; ++i) {
      for (std::uint32_t k = 0; k < t.monomial[i]; ++k) v *= point[i];
    }
    sum += v;
  }
  return sum;
}

bool Polynomial::operator==(const Polynomial& other) const {
  if (!rings_equal(ring_, other.ring_) || terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].monomial != other.terms_[i].monomial ||
        terms_[i].coefficient != other.terms_[i].coefficient)
      return false;
  return true;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coefficient;
    bool neg = sgn(c) < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool unit = (c == 1);
    if (t.monomial.is_one()) {
      os << famloc::to_string(c);
      continue;
    }
    if (!unit) os << famloc::to_string(c) << "*";
    bool first_var = true;
    for (std::size_t i = 0; i < t.monomial.size(); ++i) {
      if (t.monomial[i] == 0) continue;
      if (!first_var) os << "*";
      first_var = false;
      os << ring_->name(i);
      if (t.monomial[i] > 1) os << "^" << t.monomial[i];
    }
  }
  return os.str();
}

// ---------------------------------------------------------------- free functions

Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }

Polynomial multiply(const Polynomial& p, const Polynomial& q) { return p * q; }

Polynomial apply_map(const Polynomial& p, const std::map<std::string, Polynomial>& images,
                     const Ring& target) {
  const auto& ring = *p.ring();
  std::vector<const Polynomial*> image_of(ring.nvars(), nullptr);
  for (std::size_t i = 0; i < ring.nvars(); ++i) {
    auto it = images.find(ring.name(i));
    if (it != images.end()) {
      require_same_ring(it->second.ring(), target, "apply_map image");
      image_of[i] = &it->second;
    }
  }
  // Cache of powers per variable.
  std::vector<std::vector<Polynomial>> powers(ring.nvars());
  auto power = [&](std::size_t i, std::uint32_t e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial::constant(target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * *image_of[i]);
    return cache[e];
  };
  Polynomial result(target);
  for (const auto& t : p.terms()) {
    Polynomial term = Polynomial::constant(target, t.coefficient);
    for (std::size_t i = 0; i < ring.nvars(); ++i) {
      if (t.monomial[i] == 0) continue;
      if (!image_of[i])
        throw PreconditionError("apply_map: no image for symbol '" + ring.name(i) + "'");
      term *= power(i, t.monomial[i]);
    }
    result += term;
  }
  return result;
}

Polynomial embed(const Polynomial& p, const Ring& target) {
  if (rings_equal(p.ring(), target)) return Polynomial(target, p.terms());
  auto map = index_map(*p.ring(), *target);
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    Monomial m(target->nvars());
    for (std::size_t i = 0; i < map.size(); ++i) {
      if (t.monomial[i] == 0) continue;
      if (map[i] < 0)
        throw RingMismatch("embed: symbol '" + p.ring()->name(i) + "' missing in target ring");
      m.set(static_cast<std::size_t>(map[i]), t.monomial[i]);
    }
    terms.push_back({std::move(m), t.coefficient});
  }
  return Polynomial(target, std::move(terms));
}

Polynomial homogenize(const Polynomial& p, std::string_view h) {
  const auto& ring = *p.ring();
  auto hi = ring.index_of(h);
  if (!hi || ring.block_of(*hi) != VarBlock::Aux)
    throw PreconditionError("homogenize: '" + std::string(h) + "' is not an aux variable");
  if (p.uses_variable(*hi))
    throw PreconditionError("homogenize: '" + std::string(h) + "' occurs in the polynomial");
  auto fiber = ring.fiber_indices();
  unsigned d = p.degree_in(fiber);
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    Monomial m = t.monomial;
    m.set(*hi, d - t.monomial.degree_in(fiber));
    terms.push_back({std::move(m), t.coefficient});
  }
  return Polynomial(p.ring(), std::move(terms));
}

Polynomial dehomogenize(const Polynomial& p, std::string_view h) {
  auto hi = p.ring()->require_index(h);
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    Monomial m = t.monomial;
    m.set(hi, 0);
    terms.push_back({std::move(m), t.coefficient});
  }
  return Polynomial(p.ring(), std::move(terms));
}

bool is_homogeneous(const Polynomial& p, std::span<const std::size_t> vars) {
  if (p.is_zero()) return true;
  unsigned d = p.terms().front().monomial.degree_in(vars);
  return std::all_of(p.terms().begin(), p.terms().end(),
                     [&](const Term& t) { return t.monomial.degree_in(vars) == d; });
}

std::pair<Monomial, Rational> leading_term(const Polynomial& p, const TermOrder& o) {
  if (p.is_zero()) throw PreconditionError("leading_term of the zero polynomial");
  const Term* best = &p.terms().front();
  for (const auto& t : p.terms())
    if (o.greater(t.monomial, best->monomial)) best = &t;
  return {best->monomial, best->coefficient};
}

Polynomial normalize(const Polynomial& p) {
  if (p.is_zero()) return p;
  Integer den = 1;
  Integer num = 0;
  for (const auto& t : p.terms()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coefficient.get_den_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.coefficient.get_num_mpz_t());
  }
  Rational scale(den, num);
  scale.canonicalize();
  if (sgn(p.terms().front().coefficient) < 0) scale = -scale;
  if (scale == 1) return p;
  return p * scale;
}

Polynomial substitute_values(const Polynomial& p,
                             const std::vector<std::pair<std::size_t, Rational>>& values,
                             const Ring& target) {
  std::vector<const Rational*> value_of(p.ring()->nvars(), nullptr);
  for (const auto& [i, v] : values) value_of[i] = &v;
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) {
    Rational c = t.coefficient;
    Monomial m = t.monomial;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!value_of[i] || m[i] == 0) continue;
      for (std::uint32_t k = 0; k < m[i]; ++k) c *= *value_of[i];
      m.set(i, 0);
    }
    if (sgn(c) != 0) terms.push_back({std::move(m), c});
  }
  return embed(Polynomial(p.ring(), std::move(terms)), target);
}

std::vector<std::pair<Monomial, Polynomial>> coefficients_in(
    const Polynomial& p, std::span<const std::size_t> vars, const Ring& coeff_ring) {
  std::map<Monomial, std::vector<Term>> groups;
  for (const auto& t : p.terms()) {
    Monomial pattern(t.monomial.size());
    Monomial rest = t.monomial;
    for (auto v : vars) {
      pattern.set(v, t.monomial[v]);
      rest.set(v, 0);
    }
    groups[pattern].push_back({std::move(rest), t.coefficient});
  }
  std::vector<std::pair<Monomial, Polynomial>> out;
  out.reserve(groups.size());
  for (auto& [pattern, terms] : groups)
    out.emplace_back(pattern, embed(Polynomial(p.ring(), std::move(terms)), coeff_ring));
  return out;
}

}  // namespace famloc
