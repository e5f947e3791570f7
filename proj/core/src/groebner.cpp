#include "famloc/groebner.hpp"

#include <algorithm>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <unordered_map>

#include "famloc/errors.hpp"

namespace famloc {

Ideal::Ideal(Ring ring, std::vector<Polynomial> generators) : ring_(std::move(ring)) {
  gens_.reserve(generators.size());
  for (auto& g : generators) {
    require_same_ring(ring_, g.ring(), "ideal");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

std::vector<Polynomial> Ideal::generators_with_relations() const {
  auto out = gens_;
  for (auto& r : ring_->relations()) out.push_back(std::move(r));
  return out;
}

Ideal Ideal::with(const Polynomial& p) const {
  auto g = gens_;
  g.push_back(p);
  return Ideal(ring_, std::move(g));
}

Ideal Ideal::with(const std::vector<Polynomial>& ps) const {
  auto g = gens_;
  g.insert(g.end(), ps.begin(), ps.end());
  return Ideal(ring_, std::move(g));
}

std::string Ideal::to_string() const {
  std::ostringstream os;
  os << "<";
  for (std::size_t i = 0; i < gens_.size(); ++i) os << (i ? ", " : "") << gens_[i].to_string();
  os << ">";
  return os.str();
}

bool GroebnerBasis::is_unit() const {
  return elements.size() == 1 && elements.front().is_constant() && !elements.front().is_zero();
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(elements.size());
  for (const auto& e : elements) out.push_back(leading_term(e, order).first);
  return out;
}

// Integer (fraction-free) rows, terms sorted descending in the working order.
struct ITerm {
  Monomial m;
  Integer c;
};
using IPoly = std::vector<ITerm>;

struct PreparedBasis {
  TermOrder order;
  std::vector<IPoly> rows;
};

namespace {

void make_primitive(IPoly& p, Rational* scale = nullptr) {
  if (p.empty()) return;
  Integer g = 0;
  for (const auto& t : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
    if (g == 1) break;
  }
  if (sgn(p.front().c) < 0) g = -g;
  if (g == 1) return;
  for (auto& t : p) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
  if (scale) *scale /= Rational(g);
}

IPoly to_ipoly(const Polynomial& p, const TermOrder& order, Rational* scale = nullptr) {
  IPoly out;
  if (p.is_zero()) return out;
  Integer den = 1;
  for (const auto& t : p.terms())
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coefficient.get_den_mpz_t());
  out.reserve(p.size());
  for (const auto& t : p.terms())
    out.push_back({t.monomial, t.coefficient.get_num() * (den / t.coefficient.get_den())});
  std::sort(out.begin(), out.end(),
            [&](const ITerm& a, const ITerm& b) { return order.greater(a.m, b.m); });
  if (scale) *scale = Rational(den);
  make_primitive(out, scale);
  return out;
}

Polynomial from_ipoly(const IPoly& p, const Ring& ring, const Rational& scale) {
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p) {
    Rational c(t.c);
    c *= scale;
    terms.push_back({t.m, std::move(c)});
  }
  return Polynomial(ring, std::move(terms));
}

Polynomial monic(const IPoly& p, const Ring& ring) {
  if (p.empty()) return Polynomial(ring);
  Rational s(Integer(1), p.front().c);
  s.canonicalize();
  return from_ipoly(p, ring, s);
}

// Merges two descending term lists, adding coefficients of equal monomials.
IPoly merge(IPoly a, IPoly b, const TermOrder& order) {
  IPoly out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(std::move(a[i++]));
    } else if (i == a.size()) {
      out.push_back(std::move(b[j++]));
    } else {
      auto c = order.compare(a[i].m, b[j].m);
      if (c == std::strong_ordering::greater) {
        out.push_back(std::move(a[i++]));
      } else if (c == std::strong_ordering::less) {
        out.push_back(std::move(b[j++]));
      } else {
        a[i].c += b[j].c;
        if (sgn(a[i].c) != 0) out.push_back(std::move(a[i]));
        ++i;
        ++j;
      }
    }
  }
  return out;
}

// a*p with p[at] removed, minus b*q*g without its leading term.
IPoly reduction_step(const IPoly& p, std::size_t at, const Integer& a, const IPoly& g,
                     const Monomial& q, const Integer& b, const TermOrder& order) {
  IPoly out;
  out.reserve(p.size() + g.size());
  for (std::size_t i = 0; i < at; ++i) out.push_back({p[i].m, p[i].c * a});
  std::size_t i = at + 1, j = 1;
  Monomial gm;
  bool have_gm = false;
  while (i < p.size() || j < g.size()) {
    if (j < g.size() && !have_gm) {
      gm = g[j].m * q;
      have_gm = true;
    }
    if (j == g.size()) {
      out.push_back({p[i].m, p[i].c * a});
      ++i;
      continue;
    }
    if (i == p.size()) {
      out.push_back({std::move(gm), -(g[j].c * b)});
      have_gm = false;
      ++j;
      continue;
    }
    auto c = order.compare(p[i].m, gm);
    if (c == std::strong_ordering::greater) {
      out.push_back({p[i].m, p[i].c * a});
      ++i;
    } else if (c == std::strong_ordering::less) {
      out.push_back({std::move(gm), -(g[j].c * b)});
      have_gm = false;
      ++j;
    } else {
      Integer v = p[i].c * a - g[j].c * b;
      if (sgn(v) != 0) out.push_back({p[i].m, std::move(v)});
      have_gm = false;
      ++i;
      ++j;
    }
  }
  return out;
}

// Reduces f by the rows; the result r satisfies r = k*f mod rows with k
// accumulated into *scale when given. With full=false only the leading term
// is reduced.
IPoly reduce(IPoly f, const std::vector<const IPoly*>& rows, const TermOrder& order, bool full,
             Rational* scale = nullptr) {
  std::size_t at = 0;
  unsigned steps = 0;
  while (at < f.size()) {
    const IPoly* divisor = nullptr;
    for (const auto* g : rows) {
      if (g->front().m.divides(f[at].m)) {
        divisor = g;
        break;
      }
    }
    if (!divisor) {
      if (!full) break;
      ++at;
      continue;
    }
    Integer h;
    mpz_gcd(h.get_mpz_t(), f[at].c.get_mpz_t(), divisor->front().c.get_mpz_t());
    Integer a = divisor->front().c / h;
    Integer b = f[at].c / h;
    if (sgn(a) < 0) {
      a = -a;
      b = -b;
    }
    Monomial q = f[at].m.quotient(divisor->front().m);
    f = reduction_step(f, at, a, *divisor, q, b, order);
    if (scale) *scale *= Rational(a);
    if (++steps % 16 == 0) make_primitive(f, scale);
  }
  make_primitive(f, scale);
  return f;
}

IPoly spoly(const IPoly& f, const IPoly& g, const TermOrder& order) {
  Monomial l = f.front().m.lcm(g.front().m);
  Monomial qf = l.quotient(f.front().m);
  Monomial qg = l.quotient(g.front().m);
  Integer h;
  mpz_gcd(h.get_mpz_t(), f.front().c.get_mpz_t(), g.front().c.get_mpz_t());
  Integer a = g.front().c / h;
  Integer b = f.front().c / h;
  IPoly left, right;
  left.reserve(f.size());
  right.reserve(g.size());
  for (std::size_t k = 1; k < f.size(); ++k) left.push_back({f[k].m * qf, f[k].c * a});
  for (std::size_t k = 1; k < g.size(); ++k) right.push_back({g[k].m * qg, -(g[k].c * b)});
  IPoly out = merge(std::move(left), std::move(right), order);
  make_primitive(out);
  return out;
}

struct CriticalPair {
  std::size_t i, j;
  Monomial lcm;
  unsigned degree;
};

class Engine {
 public:
  explicit Engine(const TermOrder& order) : order_(order) {}

  // Returns false once a unit was found.
  bool add_input(IPoly f) {
    f = reduce(std::move(f), active_rows(), order_, true);
    if (f.empty()) return true;
    unsigned sugar = total_degree(f);
    return insert(std::move(f), sugar);
  }

  bool run() {
    while (!pairs_.empty()) {
      auto best = std::min_element(pairs_.begin(), pairs_.end(),
                                   [&](const CriticalPair& a, const CriticalPair& b) {
                                     if (a.degree != b.degree) return a.degree < b.degree;
                                     return order_.greater(b.lcm, a.lcm);
                                   });
      CriticalPair p = *best;
      pairs_.erase(best);
      IPoly s = spoly(polys_[p.i], polys_[p.j], order_);
      s = reduce(std::move(s), active_rows(), order_, true);
      if (s.empty()) continue;
      unsigned sugar = std::max(p.degree, total_degree(s));
      if (!insert(std::move(s), sugar)) return false;
    }
    return true;
  }

  bool unit() const { return unit_; }

  // Minimal basis with fully reduced tails.
  std::vector<IPoly> reduced_basis() const {
    std::vector<IPoly> basis;
    for (std::size_t i = 0; i < polys_.size(); ++i)
      if (active_[i]) basis.push_back(polys_[i]);
    std::sort(basis.begin(), basis.end(), [&](const IPoly& a, const IPoly& b) {
      return order_.greater(b.front().m, a.front().m);
    });
    for (std::size_t i = 0; i < basis.size(); ++i) {
      std::vector<const IPoly*> others;
      for (std::size_t j = 0; j < basis.size(); ++j)
        if (j != i) others.push_back(&basis[j]);
      // Leading term is irreducible by minimality; reduce the tail only.
      IPoly tail(basis[i].begin() + 1, basis[i].end());
      IPoly head{basis[i].front()};
      Rational k = 1;
      tail = reduce(std::move(tail), others, order_, true, &k);
      // head*k + tail keeps the element in the ideal up to the scale k.
      Integer num = k.get_num(), den = k.get_den();
      head.front().c *= num;
      for (auto& t : tail) t.c *= den;
      IPoly merged = std::move(head);
      merged.insert(merged.end(), std::make_move_iterator(tail.begin()),
                    std::make_move_iterator(tail.end()));
      make_primitive(merged);
      basis[i] = std::move(merged);
    }
    return basis;
  }

 private:
  std::vector<const IPoly*> active_rows() const {
    std::vector<const IPoly*> rows;
    for (std::size_t i = 0; i < polys_.size(); ++i)
      if (active_[i]) rows.push_back(&polys_[i]);
    return rows;
  }

  static unsigned total_degree(const IPoly& f) {
    unsigned d = 0;
    for (const auto& t : f) d = std::max(d, t.m.total_degree());
    return d;
  }

  // Gebauer-Moeller update with the new element h; pairs carry sugar degrees.
  bool insert(IPoly h, unsigned sugar) {
    if (h.front().m.is_one()) {
      unit_ = true;
      polys_.assign(1, IPoly{{h.front().m, Integer(1)}});
      active_.assign(1, true);
      sugar_.assign(1, 0);
      pairs_.clear();
      return false;
    }
    std::size_t k = polys_.size();
    const Monomial& lh = h.front().m;

    std::vector<CriticalPair> fresh;
    for (std::size_t i = 0; i < k; ++i) {
      if (!active_[i]) continue;
      Monomial l = polys_[i].front().m.lcm(lh);
      unsigned li = l.total_degree();
      unsigned d = std::max(sugar_[i] + li - polys_[i].front().m.total_degree(),
                            sugar + li - lh.total_degree());
      fresh.push_back({i, k, std::move(l), d});
    }
    std::vector<bool> keep(fresh.size(), true);
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      bool coprime = polys_[fresh[a].i].front().m.coprime(lh);
      if (coprime) continue;
      for (std::size_t b = 0; b < fresh.size(); ++b) {
        if (a == b || !keep[b]) continue;
        if (fresh[b].lcm.divides(fresh[a].lcm) && !(fresh[a].lcm == fresh[b].lcm && b > a)) {
          keep[a] = false;
          break;
        }
      }
    }
    std::vector<CriticalPair> accepted;
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      if (!keep[a]) continue;
      if (polys_[fresh[a].i].front().m.coprime(lh)) continue;
      accepted.push_back(std::move(fresh[a]));
    }

    std::vector<CriticalPair> kept;
    kept.reserve(pairs_.size() + accepted.size());
    for (auto& p : pairs_) {
      if (lh.divides(p.lcm)) {
        Monomial li = polys_[p.i].front().m.lcm(lh);
        Monomial lj = polys_[p.j].front().m.lcm(lh);
        if (!(li == p.lcm) && !(lj == p.lcm)) continue;
      }
      kept.push_back(std::move(p));
    }
    for (auto& p : accepted) kept.push_back(std::move(p));
    pairs_ = std::move(kept);

    for (std::size_t i = 0; i < k; ++i)
      if (active_[i] && lh.divides(polys_[i].front().m)) active_[i] = false;
    polys_.push_back(std::move(h));
    active_.push_back(true);
    sugar_.push_back(sugar);
    return true;
  }

  TermOrder order_;
  bool unit_ = false;
  std::vector<IPoly> polys_;
  std::vector<bool> active_;
  std::vector<unsigned> sugar_;
  std::vector<CriticalPair> pairs_;
};

std::string order_key(const TermOrder& o) {
  std::ostringstream os;
  for (const auto& b : o.blocks()) {
    os << (b.kind == TermOrder::Kind::Lex ? 'L' : 'G');
    for (auto v : b.vars) os << v << ',';
    os << ';';
  }
  return os.str();
}

struct CacheEntry {
  std::vector<std::vector<Term>> elements;
};

class BasisCache {
 public:
  std::optional<CacheEntry> find(const std::string& key) {
    std::lock_guard lock(mutex_);
    auto it = map_.find(key);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }
  void clear() {
    std::lock_guard lock(mutex_);
    map_.clear();
  }
  void store(const std::string& key, CacheEntry entry) {
    std::lock_guard lock(mutex_);
    if (map_.size() >= kCapacity) map_.clear();
    map_.emplace(key, std::move(entry));
  }

 private:
  static constexpr std::size_t kCapacity = 20000;
  std::mutex mutex_;
  std::unordered_map<std::string, CacheEntry> map_;
};

BasisCache& cache() {
  static BasisCache c;
  return c;
}

std::shared_ptr<const PreparedBasis> prepare(const std::vector<Polynomial>& elements,
                                             const TermOrder& order) {
  auto prepared = std::make_shared<PreparedBasis>();
  prepared->order = order;
  for (const auto& e : elements) prepared->rows.push_back(to_ipoly(e, order));
  return prepared;
}

// Order change for a zero-dimensional ideal by linear algebra on normal
// forms. Returns nothing when the ideal is not zero-dimensional or the
// quotient is larger than `cap`.
std::optional<std::vector<Polynomial>> fglm(const GroebnerBasis& from, const TermOrder& to,
                                            std::size_t cap) {
  const Ring& ring = from.ring;
  std::size_t n = ring->nvars();
  auto leads = from.leading_monomials();
  for (std::size_t i = 0; i < n; ++i) {
    bool pure = std::any_of(leads.begin(), leads.end(), [&](const Monomial& m) {
      if (m[i] == 0) return false;
      for (std::size_t k = 0; k < n; ++k)
        if (k != i && m[k] != 0) return false;
      return true;
    });
    if (!pure) return std::nullopt;
  }
  auto standard = [&](const Monomial& m) {
    return std::none_of(leads.begin(), leads.end(),
                        [&](const Monomial& l) { return l.divides(m); });
  };
  std::map<Monomial, std::size_t> index;
  std::vector<Monomial> frontier{Monomial(n)};
  index.emplace(Monomial(n), 0);
  while (!frontier.empty()) {
    Monomial m = std::move(frontier.back());
    frontier.pop_back();
    for (std::size_t i = 0; i < n; ++i) {
      Monomial next = m;
      next.set(i, m[i] + 1);
      if (!standard(next) || index.count(next)) continue;
      if (index.size() >= cap) return std::nullopt;
      index.emplace(next, index.size());
      frontier.push_back(std::move(next));
    }
  }
  std::size_t dim = index.size();
  auto to_vector = [&](const Polynomial& p) {
    std::vector<Rational> v(dim);
    for (const auto& t : p.terms()) v[index.at(t.monomial)] = t.coefficient;
    return v;
  };

  struct Row {
    std::vector<Rational> v;
    std::size_t pivot;
    Polynomial combination;
  };
  std::vector<Row> rows;
  auto less = [&](const Monomial& a, const Monomial& b) { return to.greater(b, a); };
  std::set<Monomial, decltype(less)> candidates(less);
  candidates.insert(Monomial(n));
  std::map<Monomial, Polynomial> forms;
  std::vector<Monomial> new_leads;
  std::vector<Polynomial> out;
  while (!candidates.empty()) {
    Monomial m = *candidates.begin();
    candidates.erase(candidates.begin());
    if (std::any_of(new_leads.begin(), new_leads.end(),
                    [&](const Monomial& l) { return l.divides(m); }))
      continue;
    Polynomial form(ring);
    if (m.is_one()) {
      form = Polynomial::constant(ring, 1);
    } else {
      for (std::size_t i = 0; i < n; ++i) {
        if (m[i] == 0) continue;
        Monomial prev = m;
        prev.set(i, m[i] - 1);
        auto it = forms.find(prev);
        if (it == forms.end()) continue;
        Monomial xi(n);
        xi.set(i, 1);
        form = normal_form(it->second.mul_monomial(xi, 1), from);
        break;
      }
    }
    std::vector<Rational> v = to_vector(form);
    Polynomial combination = Polynomial::monomial(ring, m);
    for (const auto& row : rows) {
      if (v[row.pivot] == 0) continue;
      Rational f = v[row.pivot] / row.v[row.pivot];
      for (std::size_t k = row.pivot; k < dim; ++k)
        if (row.v[k] != 0) v[k] -= f * row.v[k];
      combination -= row.combination * f;
    }
    auto nz = std::find_if(v.begin(), v.end(), [](const Rational& x) { return x != 0; });
    if (nz == v.end()) {
      out.push_back(std::move(combination));
      new_leads.push_back(m);
      continue;
    }
    auto pivot = static_cast<std::size_t>(nz - v.begin());
    rows.push_back({std::move(v), pivot, std::move(combination)});
    forms.emplace(m, std::move(form));
    for (std::size_t i = 0; i < n; ++i) {
      Monomial next = m;
      next.set(i, m[i] + 1);
      candidates.insert(std::move(next));
    }
  }
  return out;
}

constexpr std::size_t kFglmCap = 5000;

std::vector<std::size_t> indices_of(const RingSpec& ring, const std::vector<std::string>& names) {
  std::vector<std::size_t> out;
  for (const auto& n : names) out.push_back(ring.require_index(n));
  return out;
}

}  // namespace

GroebnerBasis buchberger(const Ideal& I, const TermOrder& o, GroebnerOptions options) {
  const Ring& ring = I.ring();
  if (o.nvars() != ring->nvars()) throw PreconditionError("term order arity does not match ring");
  auto gens = I.generators_with_relations();

  std::ostringstream key;
  key << ring->describe() << '|' << order_key(o) << '|' << options.stop_on_unit;
  for (const auto& g : gens) key << '|' << g.to_string();
  std::string k = key.str();

  GroebnerBasis result{ring, o, {}, true, nullptr};
  if (auto hit = options.use_cache ? cache().find(k) : std::nullopt) {
    for (auto& terms : hit->elements) result.elements.emplace_back(ring, std::move(terms));
    result.prepared = prepare(result.elements, o);
    return result;
  }

  auto finish = [&]() {
    CacheEntry entry;
    for (const auto& e : result.elements) entry.elements.push_back(e.terms());
    if (options.use_cache) cache().store(k, std::move(entry));
    result.prepared = prepare(result.elements, o);
    return result;
  };
  // Non-degree orders go through grevlex first; zero-dimensional ideals are
  // then converted by linear algebra, which avoids coefficient swell.
  TermOrder base_order = grevlex_order(*ring);
  if (!options.stop_on_unit && !(o == base_order)) {
    GroebnerOptions inner;
    inner.use_cache = options.use_cache;
    auto base = buchberger(I, base_order, inner);
    if (base.is_unit()) {
      result.elements.push_back(Polynomial::constant(ring, 1));
      return finish();
    }
    if (auto converted = fglm(base, o, kFglmCap)) {
      result.elements = std::move(*converted);
      return finish();
    }
  }

  Engine engine(o);
  std::vector<IPoly> inputs;
  for (const auto& g : gens) inputs.push_back(to_ipoly(g, o));
  // Small generators first: they reduce the others.
  std::stable_sort(inputs.begin(), inputs.end(), [&](const IPoly& a, const IPoly& b) {
    return o.greater(b.front().m, a.front().m);
  });
  bool ok = true;
  for (auto& f : inputs) {
    if (!engine.add_input(std::move(f))) {
      ok = false;
      break;
    }
  }
  if (ok && !engine.unit()) engine.run();

  if (engine.unit()) {
    result.elements.push_back(Polynomial::constant(ring, 1));
  } else {
    for (const auto& row : engine.reduced_basis()) result.elements.push_back(monic(row, ring));
  }
  return finish();
}

void clear_groebner_cache() { cache().clear(); }

GroebnerBasis buchberger(const Ideal& I) { return buchberger(I, grevlex_order(*I.ring())); }

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& B) {
  require_same_ring(f.ring(), B.ring, "normal_form");
  if (f.is_zero()) return f;
  auto prepared = B.prepared && B.prepared->order == B.order ? B.prepared
                                                             : prepare(B.elements, B.order);
  std::vector<const IPoly*> rows;
  for (const auto& r : prepared->rows) rows.push_back(&r);
  Rational k;
  IPoly r = to_ipoly(f, B.order, &k);
  r = reduce(std::move(r), rows, B.order, true, &k);
  Rational inv = 1 / k;
  return from_ipoly(r, f.ring(), inv);
}

bool ideal_membership(const Polynomial& f, const Ideal& I) {
  require_same_ring(f.ring(), I.ring(), "ideal_membership");
  if (f.is_zero()) return true;
  return normal_form(f, buchberger(I)).is_zero();
}

bool radical_membership(const Polynomial& f, const Ideal& I) {
  require_same_ring(f.ring(), I.ring(), "radical_membership");
  if (f.is_zero()) return true;
  if (f.is_constant()) return contains_unit(I);
  auto gb = buchberger(I, grevlex_order(*I.ring()), {.stop_on_unit = true});
  if (gb.is_unit() || normal_form(f, gb).is_zero()) return true;
  const Ring& ring = I.ring();
  std::string w = ring->fresh_symbol("w");
  Ring ext = ring->with_extra(VarBlock::Aux, {w});
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(embed(g, ext));
  Polynomial wf = Polynomial::variable(ext, w) * embed(f, ext);
  gens.push_back(Polynomial::constant(ext, 1) - wf);
  auto big = buchberger(Ideal(ext, std::move(gens)), grevlex_order(*ext), {.stop_on_unit = true});
  return big.is_unit();
}

bool radical_contains(const Ideal& big, const Ideal& small) {
  require_same_ring(big.ring(), small.ring(), "radical_contains");
  for (const auto& g : small.generators())
    if (!radical_membership(g, big)) return false;
  return true;
}

bool contains_unit(const Ideal& I) {
  return buchberger(I, grevlex_order(*I.ring()), {.stop_on_unit = true}).is_unit();
}

bool ideals_equal(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring(), "ideals_equal");
  auto a = buchberger(I);
  auto b = buchberger(J);
  if (a.elements.size() != b.elements.size()) return false;
  for (std::size_t i = 0; i < a.elements.size(); ++i)
    if (!(a.elements[i] == b.elements[i])) return false;
  return true;
}

Ideal eliminate(const Ideal& I, const std::vector<std::string>& drop) {
  const Ring& ring = I.ring();
  auto outer = indices_of(*ring, drop);
  Ring target = ring->without(drop);
  if (outer.empty()) {
    auto gb = buchberger(I);
    return Ideal(target, gb.elements);
  }
  auto gb = buchberger(I, elimination_order(*ring, outer));
  std::vector<Polynomial> kept;
  for (const auto& e : gb.elements) {
    bool uses = false;
    for (auto v : outer) uses = uses || e.uses_variable(v);
    if (!uses) kept.push_back(embed(e, target));
  }
  return Ideal(target, std::move(kept));
}

Ideal ring_map_kernel(const std::map<std::string, Polynomial>& images, const Ring& source,
                      const Ring& target) {
  std::vector<std::string> renamed;
  Ring probe = target;
  for (const auto& s : source->symbols()) {
    std::string name = probe->fresh_symbol(s);
    probe = probe->with_extra(VarBlock::Aux, {name});
    renamed.push_back(name);
  }
  Ring graph = probe;
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < source->nvars(); ++i) {
    auto it = images.find(source->name(i));
    if (it == images.end())
      throw PreconditionError("ring_map_kernel: missing image for " + source->name(i));
    require_same_ring(it->second.ring(), target, "ring_map_kernel");
    gens.push_back(Polynomial::variable(graph, renamed[i]) - embed(it->second, graph));
  }
  Ideal elim = eliminate(Ideal(graph, std::move(gens)), target->symbols());
  std::map<std::string, Polynomial> back;
  for (std::size_t i = 0; i < source->nvars(); ++i)
    back.emplace(renamed[i], Polynomial::variable(source, source->name(i)));
  std::vector<Polynomial> out;
  for (const auto& g : elim.generators()) out.push_back(apply_map(g, back, source));
  return Ideal(source, std::move(out));
}

int monomial_ideal_dimension(const std::vector<Monomial>& lead,
                             const std::vector<std::size_t>& vars) {
  if (vars.size() > 64) throw PreconditionError("too many variables for dimension search");
  std::vector<std::uint64_t> supports;
  for (const auto& m : lead) {
    std::uint64_t s = 0;
    for (std::size_t k = 0; k < vars.size(); ++k)
      if (m[vars[k]] > 0) s |= std::uint64_t{1} << k;
    if (s == 0) return -1;
    supports.push_back(s);
  }
  std::sort(supports.begin(), supports.end());
  supports.erase(std::unique(supports.begin(), supports.end()), supports.end());
  int n = static_cast<int>(vars.size());
  int best = 0;
  auto allowed = [&](std::uint64_t set) {
    for (auto s : supports)
      if ((s & set) == s) return false;
    return true;
  };
  // Include/exclude search with a size bound.
  auto dfs = [&](auto&& self, int k, std::uint64_t set, int size) -> void {
    if (size + (n - k) <= best) return;
    if (k == n) {
      best = size;
      return;
    }
    std::uint64_t with = set | (std::uint64_t{1} << k);
    if (allowed(with)) self(self, k + 1, with, size + 1);
    self(self, k + 1, set, size);
  };
  dfs(dfs, 0, 0, 0);
  return best;
}

int ideal_dimension(const Ideal& I) {
  auto gb = buchberger(I);
  if (gb.is_unit()) return -1;
  std::vector<std::size_t> all(I.ring()->nvars());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return monomial_ideal_dimension(gb.leading_monomials(), all);
}

Ideal saturate(const Ideal& I, const Polynomial& f) {
  require_same_ring(I.ring(), f.ring(), "saturate");
  const Ring& ring = I.ring();
  if (f.is_zero()) return Ideal::unit(ring);
  if (f.is_constant()) return I;
  std::string w = ring->fresh_symbol("w");
  Ring ext = ring->with_extra(VarBlock::Aux, {w});
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(embed(g, ext));
  gens.push_back(Polynomial::constant(ext, 1) - Polynomial::variable(ext, w) * embed(f, ext));
  Ideal elim = eliminate(Ideal(ext, std::move(gens)), {w});
  std::vector<Polynomial> out;
  for (const auto& g : elim.generators()) out.push_back(embed(g, ring));
  return Ideal(ring, std::move(out));
}

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring(), "ideal_sum");
  return I.with(J.generators());
}

Ideal ideal_product(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring(), "ideal_product");
  std::vector<Polynomial> out;
  for (const auto& a : I.generators())
    for (const auto& b : J.generators()) out.push_back(a * b);
  return Ideal(I.ring(), std::move(out));
}

Ideal ideal_intersection(const Ideal& I, const Ideal& J) {
  require_same_ring(I.ring(), J.ring(), "ideal_intersection");
  const Ring& ring = I.ring();
  if (I.has_no_generators() || J.has_no_generators()) return Ideal(ring);
  std::string w = ring->fresh_symbol("w");
  Ring ext = ring->with_extra(VarBlock::Aux, {w});
  Polynomial wv = Polynomial::variable(ext, w);
  Polynomial one_minus = Polynomial::constant(ext, 1) - wv;
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(wv * embed(g, ext));
  for (const auto& g : J.generators()) gens.push_back(one_minus * embed(g, ext));
  Ideal elim = eliminate(Ideal(ext, std::move(gens)), {w});
  std::vector<Polynomial> out;
  for (const auto& g : elim.generators()) out.push_back(embed(g, ring));
  return Ideal(ring, std::move(out));
}

bool all_spairs_reduce_to_zero(const GroebnerBasis& B) {
  std::vector<IPoly> rows;
  for (const auto& e : B.elements) rows.push_back(to_ipoly(e, B.order));
  std::vector<const IPoly*> ptrs;
  for (const auto& r : rows) ptrs.push_back(&r);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      IPoly s = spoly(rows[i], rows[j], B.order);
      if (!reduce(std::move(s), ptrs, B.order, true).empty()) return false;
    }
  }
  return true;
}

bool is_reduced_basis(const GroebnerBasis& B) {
  auto lead = B.leading_monomials();
  for (std::size_t i = 0; i < B.elements.size(); ++i) {
    if (leading_term(B.elements[i], B.order).second != 1) return false;
    for (std::size_t j = 0; j < B.elements.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : B.elements[i].terms())
        if (lead[j].divides(t.monomial)) return false;
    }
  }
  return true;
}

}  // namespace famloc
