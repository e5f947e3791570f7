#include "famloc/cgs.hpp"

#include <algorithm>
#include <optional>

#include "famloc/errors.hpp"

namespace famloc {

namespace {

// Polynomial in the fiber variables with coefficients in the parameter ring.
// Monomials keep the arity of the input ring with parameter exponents zero.
struct PTerm {
  Monomial m;
  Polynomial c;
};
using PPoly = std::vector<PTerm>;

struct PairEntry {
  std::size_t i, j;
  Monomial lcm;
  unsigned degree;
};

struct Branch {
  Ideal E;
  std::vector<Polynomial> N;
  Polynomial prodN;
  std::vector<PPoly> G;
  std::vector<bool> active;
  std::vector<PairEntry> pairs;
  std::vector<PPoly> pending;
  std::optional<PPoly> current;
  unsigned depth = 0;
  bool unit = false;
};

class SystemBuilder {
 public:
  SystemBuilder(const Ideal& I, TermOrder::Kind kind, CgsOptions options)
      : ring_(I.ring()),
        pring_(I.ring()->param_ring()),
        order_(fiber_order(*I.ring(), kind)),
        fiber_(I.ring()->fiber_indices()),
        options_(options) {}

  std::vector<Segment> run(const Ideal& I) {
    Branch root{Ideal(pring_), {}, Polynomial::constant(pring_, 1), {}, {}, {}, {}, {}, 0, false};
    std::vector<bool> param_only(ring_->nvars(), false);
    for (auto i : ring_->param_indices()) param_only[i] = true;
    auto uses_fiber = [&](const Polynomial& p) {
      for (auto v : fiber_)
        if (p.uses_variable(v)) return true;
      return false;
    };
    for (const auto& g : I.generators()) root.pending.push_back(to_ppoly(g));
    for (const auto& rel : ring_->relations())
      if (uses_fiber(rel)) root.pending.push_back(to_ppoly(rel));
    std::reverse(root.pending.begin(), root.pending.end());

    std::vector<Segment> out;
    stack_.push_back(std::move(root));
    while (!stack_.empty()) {
      Branch b = std::move(stack_.back());
      stack_.pop_back();
      if (auto seg = process(b)) out.push_back(std::move(*seg));
    }
    std::sort(out.begin(), out.end(), [](const Segment& a, const Segment& b) {
      return key(a) < key(b);
    });
    return out;
  }

 private:
  static std::string key(const Segment& s) {
    return s.condition.closed.to_string() + "|" + s.condition.off.to_string();
  }

  PPoly to_ppoly(const Polynomial& p) const {
    PPoly out;
    for (auto& [m, c] : coefficients_in(p, fiber_, pring_)) out.push_back({m, std::move(c)});
    sort_terms(out);
    return out;
  }

  void sort_terms(PPoly& p) const {
    std::sort(p.begin(), p.end(),
              [&](const PTerm& a, const PTerm& b) { return order_.greater(a.m, b.m); });
  }

  Polynomial from_ppoly(const PPoly& p) const {
    std::vector<Term> terms;
    std::size_t np = ring_->nparams();
    for (const auto& t : p) {
      for (const auto& ct : t.c.terms()) {
        Monomial m = t.m;
        for (std::size_t i = 0; i < np; ++i) m.set(i, ct.monomial[i]);
        terms.push_back({std::move(m), ct.coefficient});
      }
    }
    return Polynomial(ring_, std::move(terms));
  }

  // a*h - b*q*g, terms merged in order.
  PPoly combine(const Polynomial& a, const PPoly& h, const Polynomial& b, const Monomial& q,
                const PPoly& g) const {
    PPoly out;
    out.reserve(h.size() + g.size());
    std::size_t i = 0, j = 0;
    bool a_one = a.is_constant() && a.constant_term() == 1;
    while (i < h.size() || j < g.size()) {
      std::strong_ordering c = std::strong_ordering::equal;
      Monomial gm;
      if (j < g.size()) gm = g[j].m * q;
      if (j == g.size()) {
        c = std::strong_ordering::greater;
      } else if (i == h.size()) {
        c = std::strong_ordering::less;
      } else {
        c = order_.compare(h[i].m, gm);
      }
      if (c == std::strong_ordering::greater) {
        out.push_back({h[i].m, a_one ? h[i].c : a * h[i].c});
        ++i;
      } else if (c == std::strong_ordering::less) {
        out.push_back({std::move(gm), -(b * g[j].c)});
        ++j;
      } else {
        Polynomial v = (a_one ? h[i].c : a * h[i].c) - b * g[j].c;
        if (!v.is_zero()) out.push_back({h[i].m, std::move(v)});
        ++i;
        ++j;
      }
    }
    return out;
  }

  PPoly shift(const PPoly& p, const Monomial& q) const {
    PPoly out;
    out.reserve(p.size());
    for (const auto& t : p) out.push_back({t.m * q, t.c});
    return out;
  }

  // Coefficients reduced modulo E, zero terms dropped, rational content removed.
  void clean(PPoly& h, const GroebnerBasis& gbE) const {
    PPoly out;
    out.reserve(h.size());
    for (auto& t : h) {
      Polynomial c = gbE.elements.empty() && !pring_->has_relations() ? t.c
                                                                     : normal_form(t.c, gbE);
      if (!c.is_zero()) out.push_back({std::move(t.m), std::move(c)});
    }
    h = std::move(out);
    if (h.empty()) return;
    Integer num = 0, den = 1;
    for (const auto& t : h) {
      for (const auto& ct : t.c.terms()) {
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), ct.coefficient.get_num_mpz_t());
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), ct.coefficient.get_den_mpz_t());
      }
    }
    Rational scale(den, num);
    scale.canonicalize();
    if (sgn(h.front().c.terms().front().coefficient) < 0) scale = -scale;
    if (scale != 1)
      for (auto& t : h) t.c *= scale;
  }

  enum class Decision { Zero, NonZero };

  GroebnerBasis gb_of(const Ideal& E) const { return buchberger(E); }

  // Decides whether the coefficient c vanishes on the branch, splitting the
  // branch when neither holds everywhere.
  Decision decide(Branch& b, const Polynomial& c, const PPoly& h) {
    if (c.is_zero()) return Decision::Zero;
    if (c.is_constant()) return Decision::NonZero;
    if (radical_membership(c * b.prodN, b.E)) return Decision::Zero;
    if (radical_membership(b.prodN, b.E.with(c))) return Decision::NonZero;
    if (b.depth + 1 > options_.max_branch_depth)
      throw ResourceCapExceeded("comprehensive Groebner system: branch depth exceeds " +
                                std::to_string(options_.max_branch_depth));
    Branch alt = b;
    alt.E = b.E.with(c);
    alt.depth = b.depth + 1;
    alt.current = h;
    stack_.push_back(std::move(alt));
    b.N.push_back(c);
    b.prodN = b.prodN * c;
    b.depth += 1;
    return Decision::NonZero;
  }

  const PPoly* divisor_for(const Branch& b, const Monomial& m) const {
    for (std::size_t k = 0; k < b.G.size(); ++k)
      if (b.active[k] && b.G[k].front().m.divides(m)) return &b.G[k];
    return nullptr;
  }

  PPoly reduce_by(const PPoly& h, std::size_t at, const PPoly& g) const {
    const Polynomial& lg = g.front().c;
    Monomial q = h[at].m.quotient(g.front().m);
    if (lg.is_constant()) {
      Polynomial one = Polynomial::constant(pring_, 1);
      return combine(one, h, h[at].c * (Rational(1) / lg.constant_term()), q, g);
    }
    return combine(lg, h, h[at].c, q, g);
  }

  // Reduces the current polynomial; returns it when it must join the basis.
  std::optional<PPoly> reduce_current(Branch& b) {
    PPoly h = std::move(*b.current);
    b.current.reset();
    GroebnerBasis gbE = gb_of(b.E);
    for (;;) {
      clean(h, gbE);
      if (h.empty()) return std::nullopt;
      if (decide(b, h.front().c, h) == Decision::Zero) {
        b.E = b.E.with(h.front().c);
        gbE = gb_of(b.E);
        h.erase(h.begin());
        continue;
      }
      const PPoly* g = divisor_for(b, h.front().m);
      if (!g) break;
      h = reduce_by(h, 0, *g);
    }
    for (std::size_t at = 1; at < h.size();) {
      const PPoly* g = divisor_for(b, h[at].m);
      if (!g) {
        ++at;
        continue;
      }
      h = reduce_by(h, at, *g);
      clean(h, gbE);
    }
    return h;
  }

  void insert(Branch& b, PPoly h) {
    if (h.front().m.is_one()) {
      b.unit = true;
      b.G.assign(1, std::move(h));
      b.active.assign(1, true);
      b.pairs.clear();
      b.pending.clear();
      return;
    }
    std::size_t k = b.G.size();
    const Monomial lh = h.front().m;
    std::vector<PairEntry> fresh;
    for (std::size_t i = 0; i < k; ++i) {
      if (!b.active[i]) continue;
      Monomial l = b.G[i].front().m.lcm(lh);
      unsigned d = l.total_degree();
      fresh.push_back({i, k, std::move(l), d});
    }
    std::vector<bool> keep(fresh.size(), true);
    for (std::size_t x = 0; x < fresh.size(); ++x) {
      if (b.G[fresh[x].i].front().m.coprime(lh)) continue;
      for (std::size_t y = 0; y < fresh.size(); ++y) {
        if (x == y || !keep[y]) continue;
        if (fresh[y].lcm.divides(fresh[x].lcm) && !(fresh[x].lcm == fresh[y].lcm && y > x)) {
          keep[x] = false;
          break;
        }
      }
    }
    std::vector<PairEntry> kept;
    for (auto& p : b.pairs) {
      if (lh.divides(p.lcm)) {
        Monomial li = b.G[p.i].front().m.lcm(lh);
        Monomial lj = b.G[p.j].front().m.lcm(lh);
        if (!(li == p.lcm) && !(lj == p.lcm)) continue;
      }
      kept.push_back(std::move(p));
    }
    for (std::size_t x = 0; x < fresh.size(); ++x)
      if (keep[x] && !b.G[fresh[x].i].front().m.coprime(lh)) kept.push_back(std::move(fresh[x]));
    b.pairs = std::move(kept);
    for (std::size_t i = 0; i < k; ++i)
      if (b.active[i] && lh.divides(b.G[i].front().m)) b.active[i] = false;
    b.G.push_back(std::move(h));
    b.active.push_back(true);
  }

  PPoly spoly(const PPoly& f, const PPoly& g) const {
    Monomial l = f.front().m.lcm(g.front().m);
    PPoly sf = shift(f, l.quotient(f.front().m));
    Monomial qg = l.quotient(g.front().m);
    return combine(g.front().c, sf, f.front().c, qg, g);
  }

  std::optional<Segment> process(Branch& b) {
    for (;;) {
      if (b.current) {
        if (auto h = reduce_current(b)) insert(b, std::move(*h));
        if (b.unit) break;
        continue;
      }
      if (!b.pending.empty()) {
        b.current = std::move(b.pending.back());
        b.pending.pop_back();
        continue;
      }
      if (b.pairs.empty()) break;
      auto best = std::min_element(b.pairs.begin(), b.pairs.end(),
                                   [&](const PairEntry& x, const PairEntry& y) {
                                     if (x.degree != y.degree) return x.degree < y.degree;
                                     return order_.greater(y.lcm, x.lcm);
                                   });
      PairEntry p = *best;
      b.pairs.erase(best);
      b.current = spoly(b.G[p.i], b.G[p.j]);
    }
    return finish(b);
  }

  std::optional<Segment> finish(Branch& b) {
    LocallyClosedPiece condition{b.E, b.N.empty() ? Ideal::unit(pring_)
                                                  : Ideal(pring_, {normalize(b.prodN)})};
    if (is_empty(condition)) return std::nullopt;
    auto gbE = gb_of(b.E);
    std::vector<Polynomial> closed;
    auto rel = buchberger(Ideal(pring_));
    for (const auto& e : gbE.elements)
      if (!normal_form(e, rel).is_zero()) closed.push_back(normalize(e));
    condition.closed = Ideal(pring_, std::move(closed));
    if (!b.N.empty()) {
      Polynomial off = normal_form(b.prodN, gbE);
      condition.off = Ideal(pring_, {normalize(off)});
    }

    Segment seg{std::move(condition), {}, {}, {}};
    if (b.unit) {
      seg.basis.push_back(Polynomial::constant(ring_, 1));
      seg.leading_monomials.push_back(Monomial(ring_->nvars()));
      seg.leading_coefficients.push_back(Polynomial::constant(pring_, 1));
      return seg;
    }
    std::vector<PPoly> basis;
    for (std::size_t i = 0; i < b.G.size(); ++i)
      if (b.active[i]) basis.push_back(b.G[i]);
    std::sort(basis.begin(), basis.end(), [&](const PPoly& x, const PPoly& y) {
      return order_.greater(y.front().m, x.front().m);
    });
    for (std::size_t i = 0; i < basis.size(); ++i) {
      PPoly h = basis[i];
      for (std::size_t at = 1; at < h.size();) {
        const PPoly* g = nullptr;
        for (std::size_t j = 0; j < basis.size(); ++j)
          if (j != i && basis[j].front().m.divides(h[at].m)) g = &basis[j];
        if (!g) {
          ++at;
          continue;
        }
        h = reduce_by(h, at, *g);
        clean(h, gbE);
      }
      basis[i] = std::move(h);
    }
    for (const auto& h : basis) {
      seg.basis.push_back(from_ppoly(h));
      seg.leading_monomials.push_back(h.front().m);
      seg.leading_coefficients.push_back(h.front().c);
    }
    return seg;
  }

  Ring ring_;
  Ring pring_;
  TermOrder order_;
  std::vector<std::size_t> fiber_;
  CgsOptions options_;
  std::vector<Branch> stack_;
};

}  // namespace

ConstructibleSet GroebnerSystem::cover() const {
  Ring p = input.ring()->param_ring();
  std::vector<LocallyClosedPiece> pieces;
  for (const auto& s : segments) pieces.push_back(s.condition);
  return ConstructibleSet(p, std::move(pieces));
}

GroebnerSystem relative_reduced_gb(const Ideal& I, TermOrder::Kind fiber_kind,
                                   CgsOptions options) {
  if (I.ring()->nparams() == 0)
    throw PreconditionError("relative_reduced_gb needs a ring with parameters");
  SystemBuilder builder(I, fiber_kind, options);
  GroebnerSystem system{I, fiber_kind, fiber_order(*I.ring(), fiber_kind), {}};
  system.segments = builder.run(I);
  return system;
}

Ideal specialize_ideal(const Ideal& I, std::span<const Rational> point) {
  const Ring& r = I.ring();
  if (point.size() != r->nparams())
    throw PreconditionError("parameter point has the wrong number of coordinates");
  Ring fiber = r->fiber_ring();
  std::vector<std::pair<std::size_t, Rational>> values;
  for (std::size_t i = 0; i < point.size(); ++i) values.emplace_back(i, point[i]);
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(substitute_values(g, values, fiber));
  for (const auto& rel : r->relations()) {
    Polynomial s = substitute_values(rel, values, fiber);
    bool param_only = true;
    for (auto v : r->fiber_indices()) param_only = param_only && !rel.uses_variable(v);
    if (!param_only) gens.push_back(std::move(s));
  }
  return Ideal(fiber, std::move(gens));
}

std::vector<Polynomial> specialize_basis(const GroebnerSystem& system, const Segment& seg,
                                         std::span<const Rational> point) {
  if (!sample_membership(seg.condition, point))
    throw PreconditionError("point lies outside the segment condition");
  const Ring& r = system.input.ring();
  Ring fiber = r->fiber_ring();
  TermOrder fo = fiber_order(*fiber, system.fiber_kind);
  std::vector<std::pair<std::size_t, Rational>> values;
  for (std::size_t i = 0; i < point.size(); ++i) values.emplace_back(i, point[i]);
  std::vector<Polynomial> out;
  for (const auto& b : seg.basis) {
    Polynomial s = substitute_values(b, values, fiber);
    if (s.is_zero()) continue;
    Rational lc = leading_term(s, fo).second;
    out.push_back(s * (Rational(1) / lc));
  }
  return out;
}

}  // namespace famloc
