#include "famloc/locus.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "famloc/errors.hpp"

namespace famloc {

namespace {

using Row = std::vector<Polynomial>;

// Scales a row to integer coefficients without common content.
void make_row_primitive(Row& row) {
  Integer num = 0, den = 1;
  bool any = false;
  for (const auto& e : row) {
    for (const auto& t : e.terms()) {
      mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.coefficient.get_num_mpz_t());
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coefficient.get_den_mpz_t());
      any = true;
    }
  }
  if (!any) return;
  Rational scale(den, num);
  scale.canonicalize();
  if (scale == 1) return;
  for (auto& e : row)
    if (!e.is_zero()) e *= scale;
}

// Splits a domain piece into pieces whose off part is a single polynomial or <1>.
std::vector<std::pair<Ideal, std::optional<Polynomial>>> domain_parts(
    const LocallyClosedPiece& domain) {
  std::vector<std::pair<Ideal, std::optional<Polynomial>>> out;
  if (domain.is_closed()) {
    out.emplace_back(domain.closed, std::nullopt);
  } else {
    for (const auto& g : domain.off.generators()) out.emplace_back(domain.closed, g);
  }
  return out;
}

struct ElimBranch {
  Ideal E;
  Polynomial prodN;
  bool has_off = false;
  std::vector<Row> rows;
  std::vector<bool> used;
  std::size_t col = 0;
  unsigned depth = 0;
};

class EliminationSolver {
 public:
  EliminationSolver(const AnsatzSystem& sys, const LocusOptions& options)
      : sys_(sys), options_(options) {}

  std::vector<LocallyClosedPiece> run(const Ideal& closed, const std::optional<Polynomial>& off) {
    const Ring& r = sys_.ring;
    ElimBranch root{closed, off ? *off : Polynomial::constant(r, 1), off.has_value(), {}, {}, 0,
                    0};
    for (std::size_t i = 0; i < sys_.rows(); ++i) {
      Row row = sys_.A[i];
      row.push_back(sys_.b[i]);
      root.rows.push_back(std::move(row));
    }
    root.used.assign(root.rows.size(), false);
    std::vector<LocallyClosedPiece> out;
    stack_.push_back(std::move(root));
    while (!stack_.empty()) {
      ElimBranch b = std::move(stack_.back());
      stack_.pop_back();
      if (auto p = process(b)) out.push_back(std::move(*p));
    }
    return out;
  }

 private:
  enum class State { Zero, NonZero, Unknown };

  State classify(const ElimBranch& b, const Polynomial& e) const {
    if (e.is_zero()) return State::Zero;
    if (e.is_constant()) return State::NonZero;
    if (radical_membership(e * b.prodN, b.E)) return State::Zero;
    if (radical_membership(b.prodN, b.E.with(e))) return State::NonZero;
    return State::Unknown;
  }

  void reduce_row(Row& row, const GroebnerBasis& gb) const {
    for (auto& e : row)
      if (!e.is_zero()) e = normal_form(e, gb);
    make_row_primitive(row);
  }

  std::optional<LocallyClosedPiece> process(ElimBranch& b) {
    const Ring& r = sys_.ring;
    std::size_t ncols = sys_.cols();
    GroebnerBasis gb = buchberger(b.E);
    if (gb.is_unit()) return std::nullopt;
    for (auto& row : b.rows) reduce_row(row, gb);
    for (; b.col < ncols; ++b.col) {
      std::size_t c = b.col;
      std::optional<std::size_t> pivot;
      // Constant pivots first, then entries known to be nonzero.
      for (std::size_t i = 0; i < b.rows.size() && !pivot; ++i)
        if (!b.used[i] && !b.rows[i][c].is_zero() && b.rows[i][c].is_constant()) pivot = i;
      std::vector<std::size_t> unknown;
      if (!pivot) {
        std::vector<std::size_t> cand;
        for (std::size_t i = 0; i < b.rows.size(); ++i)
          if (!b.used[i] && !b.rows[i][c].is_zero()) cand.push_back(i);
        std::stable_sort(cand.begin(), cand.end(), [&](std::size_t x, std::size_t y) {
          return b.rows[x][c].size() < b.rows[y][c].size();
        });
        for (auto i : cand) {
          State s = classify(b, b.rows[i][c]);
          if (s == State::NonZero) {
            pivot = i;
            break;
          }
          if (s == State::Zero) {
            b.rows[i][c] = Polynomial(r);
          } else {
            unknown.push_back(i);
          }
        }
      }
      if (!pivot && !unknown.empty()) {
        if (b.depth + 1 > options_.max_branch_depth)
          throw ResourceCapExceeded("linear solvability: branch depth exceeds " +
                                    std::to_string(options_.max_branch_depth));
        std::size_t i = unknown.front();
        const Polynomial e = b.rows[i][c];
        ElimBranch alt = b;
        alt.E = b.E.with(e);
        alt.depth = b.depth + 1;
        stack_.push_back(std::move(alt));
        b.prodN = b.has_off ? b.prodN * e : e;
        b.has_off = true;
        b.depth += 1;
        pivot = i;
      }
      if (!pivot) continue;
      std::size_t p = *pivot;
      b.used[p] = true;
      const Polynomial piv = b.rows[p][c];
      for (std::size_t i = 0; i < b.rows.size(); ++i) {
        if (b.used[i] || b.rows[i][c].is_zero()) continue;
        Polynomial factor = b.rows[i][c];
        Row& row = b.rows[i];
        if (piv.is_constant()) {
          Polynomial scaled = factor * (Rational(1) / piv.constant_term());
          for (std::size_t k = c; k <= ncols; ++k)
            if (!b.rows[p][k].is_zero()) row[k] -= scaled * b.rows[p][k];
        } else {
          for (std::size_t k = c; k <= ncols; ++k) {
            if (!row[k].is_zero()) row[k] = piv * row[k];
            if (!b.rows[p][k].is_zero()) row[k] -= factor * b.rows[p][k];
          }
        }
        reduce_row(row, gb);
      }
    }
    std::vector<Polynomial> closed = b.E.generators();
    for (std::size_t i = 0; i < b.rows.size(); ++i)
      if (!b.used[i] && !b.rows[i][ncols].is_zero()) closed.push_back(b.rows[i][ncols]);
    LocallyClosedPiece piece{Ideal(r, std::move(closed)),
                             b.has_off ? Ideal(r, {b.prodN}) : Ideal::unit(r)};
    if (is_empty(piece)) return std::nullopt;
    return piece;
  }

  const AnsatzSystem& sys_;
  LocusOptions options_;
  std::vector<ElimBranch> stack_;
};

// All k x k minors of M (rows x cols), by Laplace expansion along the first
// row of each subset with memoization over (row set, column set).
class MinorTable {
 public:
  MinorTable(const std::vector<Row>& M, Ring ring) : M_(M), ring_(std::move(ring)) {
    if (M_.size() > 63 || (!M_.empty() && M_.front().size() > 63))
      throw ResourceCapExceeded("minor expansion supports at most 63 rows and columns");
  }

  std::vector<Polynomial> minors(std::size_t k) {
    std::vector<Polynomial> out;
    if (k == 0) return {Polynomial::constant(ring_, 1)};
    std::size_t m = M_.size(), n = M_.empty() ? 0 : M_.front().size();
    if (k > m || k > n) return out;
    for (auto rs : subsets(m, k))
      for (auto cs : subsets(n, k)) {
        Polynomial d = minor(rs, cs);
        if (!d.is_zero()) out.push_back(std::move(d));
      }
    return out;
  }

 private:
  static std::vector<std::uint64_t> subsets(std::size_t n, std::size_t k) {
    std::vector<std::uint64_t> out;
    auto rec = [&](auto&& self, std::size_t start, std::size_t left, std::uint64_t acc) -> void {
      if (left == 0) {
        out.push_back(acc);
        return;
      }
      for (std::size_t i = start; i + left <= n; ++i)
        self(self, i + 1, left - 1, acc | (std::uint64_t{1} << i));
    };
    rec(rec, 0, k, 0);
    if (out.size() > kMaxSubsets) throw ResourceCapExceeded("too many minors to enumerate");
    return out;
  }

  Polynomial minor(std::uint64_t rs, std::uint64_t cs) {
    auto key = std::make_pair(rs, cs);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Polynomial out(ring_);
    if (rs == 0) {
      out = Polynomial::constant(ring_, 1);
    } else {
      std::size_t r0 = static_cast<std::size_t>(__builtin_ctzll(rs));
      std::uint64_t rest = rs & (rs - 1);
      int sign = 1;
      for (std::size_t c = 0; c < 64; ++c) {
        if (!(cs & (std::uint64_t{1} << c))) continue;
        const Polynomial& e = M_[r0][c];
        if (!e.is_zero()) {
          Polynomial sub = minor(rest, cs & ~(std::uint64_t{1} << c));
          if (!sub.is_zero()) {
            if (sign > 0) out += e * sub;
            else out -= e * sub;
          }
        }
        sign = -sign;
      }
    }
    memo_.emplace(key, out);
    return out;
  }

  static constexpr std::size_t kMaxSubsets = 200000;
  const std::vector<Row>& M_;
  Ring ring_;
  std::map<std::pair<std::uint64_t, std::uint64_t>, Polynomial> memo_;
};

ConstructibleSet minors_locus(const AnsatzSystem& sys, const LocallyClosedPiece& domain,
                              const LocusOptions& options) {
  const Ring& r = sys.ring;
  std::size_t m = sys.rows(), n = sys.cols();
  std::size_t top = std::min(m, n);
  if (top + 1 > options.max_minor_size && std::min(m, n + 1) > options.max_minor_size)
    throw ResourceCapExceeded("linear solvability: minors up to size " +
                              std::to_string(std::min(m, n + 1)) + " exceed the cap of " +
                              std::to_string(options.max_minor_size));
  std::vector<Row> aug;
  for (std::size_t i = 0; i < m; ++i) {
    Row row = sys.A[i];
    row.push_back(sys.b[i]);
    aug.push_back(std::move(row));
  }
  MinorTable plain(sys.A, r), full(aug, r);
  ConstructibleSet out(r);
  for (std::size_t k = 0; k <= top; ++k) {
    Ideal closed(r, full.minors(k + 1));
    Ideal off(r, plain.minors(k));
    out = unite(out, ConstructibleSet::piece(closed, off));
  }
  return intersect(out, ConstructibleSet(r, {domain}));
}

void monomials_of_degree(const std::vector<std::size_t>& vars, std::size_t nvars, unsigned d,
                         std::vector<Monomial>& out) {
  Monomial m(nvars);
  auto rec = [&](auto&& self, std::size_t k, unsigned left) -> void {
    if (k + 1 == vars.size()) {
      m.set(vars[k], left);
      out.push_back(m);
      m.set(vars[k], 0);
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      m.set(vars[k], e);
      self(self, k + 1, left - e);
    }
    m.set(vars[k], 0);
  };
  if (vars.empty()) {
    if (d == 0) out.push_back(m);
    return;
  }
  rec(rec, 0, d);
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Ideal to_param_ring(const Ideal& J, const Ring& P) {
  std::vector<Polynomial> gens;
  for (const auto& g : J.generators()) gens.push_back(embed(g, P));
  return Ideal(P, std::move(gens));
}

bool radically_equal(const Ideal& a, const Ideal& b) {
  return radical_contains(a, b) && radical_contains(b, a);
}

DimLocusTrace run_trial(const Ideal& I, int d, std::uint64_t seed, const DimLocusOptions& opt,
                        Ideal& locus) {
  const Ring& R = I.ring();
  Ring P = R->param_ring();
  auto fiber = R->fiber_indices();
  std::vector<std::string> fiber_names;
  for (auto v : fiber) fiber_names.push_back(R->name(v));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> draw(-opt.height, opt.height - 1);
  auto coefficient = [&] {
    int v = draw(rng);
    return v >= 0 ? v + 1 : v;
  };

  DimLocusTrace trace;
  trace.seed = seed;
  Ideal B(P);
  trace.iterates.push_back(B);
  for (unsigned it = 0; it < opt.max_iterations; ++it) {
    // d random affine forms; solve them for d fiber variables and substitute.
    std::size_t nf = fiber.size();
    std::vector<std::vector<Rational>> M(static_cast<std::size_t>(d), std::vector<Rational>(nf + 1));
    std::vector<Polynomial> forms;
    for (int k = 0; k < d; ++k) {
      Polynomial form(R);
      for (std::size_t j = 0; j <= nf; ++j) {
        M[k][j] = coefficient();
        if (j < nf) form += Polynomial::variable(R, fiber_names[j]) * M[k][j];
        else form += Polynomial::constant(R, M[k][j]);
      }
      forms.push_back(form);
    }
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < nf && row < M.size(); ++col) {
      std::size_t sel = row;
      while (sel < M.size() && M[sel][col] == 0) ++sel;
      if (sel == M.size()) continue;
      std::swap(M[sel], M[row]);
      Rational inv = 1 / M[row][col];
      for (auto& v : M[row]) v *= inv;
      for (std::size_t k = 0; k < M.size(); ++k) {
        if (k == row || M[k][col] == 0) continue;
        Rational f = M[k][col];
        for (std::size_t j = 0; j <= nf; ++j) M[k][j] -= f * M[row][j];
      }
      pivot_col.push_back(col);
      ++row;
    }
    // The solved variables leave the ring; the rest are eliminated.
    std::vector<std::string> solved, remaining;
    for (auto c : pivot_col) solved.push_back(fiber_names[c]);
    for (const auto& name : fiber_names)
      if (std::find(solved.begin(), solved.end(), name) == solved.end()) remaining.push_back(name);
    Ring S = R->without(solved);
    std::map<std::string, Polynomial> images;
    for (const auto& s : S->symbols()) images.emplace(s, Polynomial::variable(S, s));
    for (std::size_t k = 0; k < pivot_col.size(); ++k) {
      // x_pivot = -(sum of the other entries) - constant
      Polynomial expr = Polynomial::constant(S, -M[k][nf]);
      for (std::size_t j = 0; j < nf; ++j) {
        if (j == pivot_col[k] || M[k][j] == 0) continue;
        expr -= Polynomial::variable(S, fiber_names[j]) * M[k][j];
      }
      images.emplace(fiber_names[pivot_col[k]], expr);
    }
    std::vector<Polynomial> gens;
    for (const auto& g : I.generators_with_relations()) gens.push_back(apply_map(g, images, S));
    Ideal sliced(S, std::move(gens));
    Ideal J = to_param_ring(eliminate(sliced, remaining), P);
    trace.forms.push_back(std::move(forms));
    bool stable = radical_contains(B, J);
    B = B.with(J.generators());
    B = Ideal(P, buchberger(B).elements);
    trace.iterates.push_back(B);
    if (stable) break;
  }
  locus = B;
  return trace;
}

struct OrderGreater {
  const TermOrder* order;
  bool operator()(const Monomial& a, const Monomial& b) const { return order->greater(a, b); }
};

}  // namespace

std::vector<Polynomial> parametric_remainder(const Polynomial& f, const GroebnerSystem& system,
                                             const Segment& segment) {
  const Ring& R = system.input.ring();
  require_same_ring(R, f.ring(), "parametric_remainder");
  Ring P = R->param_ring();
  auto fiber = R->fiber_indices();
  GroebnerBasis gbE = buchberger(segment.condition.closed);
  auto reduce = [&](Polynomial c) {
    return c.is_zero() ? c : normal_form(c, gbE);
  };
  using PMap = std::map<Monomial, Polynomial, OrderGreater>;
  OrderGreater cmp{&system.order};
  auto to_map = [&](const Polynomial& p) {
    PMap m(cmp);
    for (auto& [pattern, coeff] : coefficients_in(p, fiber, P)) m.emplace(pattern, std::move(coeff));
    return m;
  };
  std::vector<PMap> basis;
  for (const auto& g : segment.basis) basis.push_back(to_map(g));

  PMap r(cmp);
  for (auto& [m, c] : to_map(f)) {
    Polynomial rc = reduce(c);
    if (!rc.is_zero()) r.emplace(m, std::move(rc));
  }
  auto it = r.begin();
  while (it != r.end()) {
    Monomial m = it->first;
    std::size_t j = 0;
    while (j < basis.size() && !segment.leading_monomials[j].divides(m)) ++j;
    if (j == basis.size()) {
      ++it;
      continue;
    }
    Polynomial c = it->second;
    const Polynomial& lc = segment.leading_coefficients[j];
    Monomial q = m.quotient(segment.leading_monomials[j]);
    Polynomial scale = c;
    if (lc.is_constant()) {
      scale *= Rational(1) / lc.constant_term();
    } else {
      for (auto& [mm, cc] : r) cc = reduce(cc * lc);
    }
    for (const auto& [gm, gc] : basis[j]) {
      Monomial target = q * gm;
      auto [slot, inserted] = r.try_emplace(target, Polynomial(P));
      slot->second = reduce(slot->second - scale * gc);
    }
    // Content removal keeps coefficient sizes in check.
    Row row;
    for (auto& [mm, cc] : r) row.push_back(std::move(cc));
    make_row_primitive(row);
    std::size_t k = 0;
    for (auto& [mm, cc] : r) cc = std::move(row[k++]);
    for (auto e = r.begin(); e != r.end();) e = e->second.is_zero() ? r.erase(e) : std::next(e);
    it = r.upper_bound(m);
  }
  std::vector<Polynomial> out;
  for (auto& [m, c] : r) out.push_back(normalize(c));
  return out;
}

ConstructibleSet linear_solvability_locus(const AnsatzSystem& system,
                                          const LocallyClosedPiece& domain,
                                          const LocusOptions& options) {
  const Ring& r = system.ring;
  require_same_ring(r, domain.ring(), "linear_solvability_locus");
  for (const auto& row : system.A)
    if (row.size() != system.cols())
      throw PreconditionError("ansatz matrix rows have inconsistent lengths");
  if (system.A.size() != system.b.size())
    throw PreconditionError("ansatz matrix and right-hand side disagree in length");
  if (options.method == SolvabilityMethod::Minors) return minors_locus(system, domain, options);
  std::vector<LocallyClosedPiece> pieces;
  for (const auto& [closed, off] : domain_parts(domain)) {
    EliminationSolver solver(system, options);
    for (auto& p : solver.run(closed, off)) pieces.push_back(std::move(p));
  }
  return ConstructibleSet(r, std::move(pieces));
}

ConstructibleSet linear_solvability_locus(const AnsatzSystem& system,
                                          const LocusOptions& options) {
  LocallyClosedPiece whole{Ideal(system.ring), Ideal::unit(system.ring)};
  return linear_solvability_locus(system, whole, options);
}

AnsatzSystem build_ansatz(const Polynomial& f, const std::vector<Polynomial>& basis) {
  const Ring& R = f.ring();
  Ring P = R->param_ring();
  std::string h = R->fresh_symbol("x0");
  Ring R0 = R->with_extra(VarBlock::Aux, {h});
  auto fiber = R0->fiber_indices();

  AnsatzSystem sys{P, {}, {}, {}, {}};
  Polynomial fh = homogenize(embed(f, R0), h);
  if (fh.is_zero()) return sys;
  unsigned d = fh.degree_in(fiber);

  std::map<Monomial, std::size_t> row_of;
  auto row_index = [&](const Monomial& m) {
    auto [it, inserted] = row_of.emplace(m, sys.row_monomials.size());
    if (inserted) {
      sys.row_monomials.push_back(m);
      for (auto& row : sys.A) row.push_back(Polynomial(P));
      sys.b.push_back(Polynomial(P));
    }
    return it->second;
  };
  // Columns are stored transposed first, then turned into rows.
  std::vector<std::vector<std::pair<std::size_t, Polynomial>>> columns;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    require_same_ring(R, basis[j].ring(), "build_ansatz");
    if (basis[j].is_zero()) continue;
    Polynomial gh = homogenize(embed(basis[j], R0), h);
    unsigned dj = gh.degree_in(fiber);
    if (dj > d) continue;
    std::vector<Monomial> mults;
    monomials_of_degree(fiber, R0->nvars(), d - dj, mults);
    for (const auto& a : mults) {
      std::vector<std::pair<std::size_t, Polynomial>> col;
      Polynomial shifted = gh.mul_monomial(a, 1);
      for (auto& [pattern, coeff] : coefficients_in(shifted, fiber, P))
        col.emplace_back(row_index(pattern), std::move(coeff));
      columns.push_back(std::move(col));
      sys.columns.emplace_back(j, a);
    }
  }
  std::vector<std::pair<std::size_t, Polynomial>> rhs;
  for (auto& [pattern, coeff] : coefficients_in(fh, fiber, P))
    rhs.emplace_back(row_index(pattern), std::move(coeff));

  std::size_t nrows = sys.row_monomials.size();
  sys.A.assign(nrows, Row(columns.size(), Polynomial(P)));
  sys.b.assign(nrows, Polynomial(P));
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (auto& [i, coeff] : columns[c]) sys.A[i][c] = std::move(coeff);
  for (auto& [i, coeff] : rhs) sys.b[i] = std::move(coeff);
  return sys;
}

ConstructibleSet containment_locus(const Ideal& I1, const Ideal& I2,
                                   const LocusOptions& options) {
  require_same_ring(I1.ring(), I2.ring(), "containment_locus");
  const Ring& R = I1.ring();
  if (R->nparams() == 0) throw PreconditionError("containment_locus needs parameters");
  Ring P = R->param_ring();
  if (I1.has_no_generators()) return ConstructibleSet::full(P);
  CgsOptions cgs_options;
  cgs_options.max_branch_depth = options.max_branch_depth;
  auto system = relative_reduced_gb(I2, TermOrder::Kind::Grevlex, cgs_options);
  ConstructibleSet result(P);
  for (const auto& seg : system.segments) {
    if (options.containment == ContainmentMethod::NormalForm) {
      std::vector<Polynomial> closed = seg.condition.closed.generators();
      for (const auto& f : I1.generators())
        for (auto& c : parametric_remainder(f, system, seg)) closed.push_back(std::move(c));
      LocallyClosedPiece piece{Ideal(P, std::move(closed)), seg.condition.off};
      if (!is_empty(piece)) result = unite(result, ConstructibleSet(P, {piece}));
      continue;
    }
    ConstructibleSet acc(P, {seg.condition});
    for (const auto& f : I1.generators()) {
      AnsatzSystem sys = build_ansatz(f, seg.basis);
      acc = intersect(acc, linear_solvability_locus(sys, seg.condition, options));
      if (acc.pieces().empty()) break;
    }
    result = unite(result, acc);
  }
  return simplify(result);
}

ConstructibleSet coincidence_locus(const Ideal& I1, const Ideal& I2,
                                   const LocusOptions& options) {
  auto a = containment_locus(I1, I2, options);
  if (a.pieces().empty()) return a;
  return simplify(intersect(a, containment_locus(I2, I1, options)));
}

DimLocusResult fiber_dim_locus(const Ideal& I, int d, const DimLocusOptions& options) {
  const Ring& R = I.ring();
  Ring P = R->param_ring();
  int nf = static_cast<int>(R->fiber_indices().size());
  if (d < 0 || d > nf)
    throw PreconditionError("fiber dimension bound must lie between 0 and the number of fiber "
                            "variables");
  DimLocusResult result{Ideal(P), false, {}};
  unsigned trials = std::max(1u, options.trials);
  std::vector<Ideal> loci;
  std::uint64_t state = options.seed;
  for (unsigned t = 0; t < trials; ++t) {
    state = splitmix64(state);
    Ideal locus(P);
    result.traces.push_back(run_trial(I, d, state, options, locus));
    loci.push_back(std::move(locus));
  }
  for (std::size_t t = 1; t < loci.size(); ++t)
    if (!radically_equal(loci[0], loci[t])) result.low_confidence = true;
  result.locus = loci[0];
  // An unlucky form only enlarges a trial's locus, so disagreeing trials are
  // combined by intersecting their zero sets.
  if (result.low_confidence) {
    std::vector<Polynomial> gens;
    for (const auto& l : loci)
      for (const auto& g : l.generators()) gens.push_back(g);
    result.locus = Ideal(P, buchberger(Ideal(P, std::move(gens))).elements);
  }
  return result;
}

int generic_fiber_dimension(const Ideal& I) {
  const Ring& R = I.ring();
  Ring P = R->param_ring();
  auto gb = buchberger(I, fiber_order(*R, TermOrder::Kind::Grevlex));
  auto fiber = R->fiber_indices();
  std::vector<Monomial> lead;
  for (const auto& e : gb.elements) {
    Monomial m = leading_term(e, gb.order).first;
    bool pure_param = true;
    for (auto v : fiber) pure_param = pure_param && m[v] == 0;
    if (pure_param) {
      if (!ideal_membership(embed(e, P), Ideal(P))) return -1;
      continue;
    }
    lead.push_back(std::move(m));
  }
  return monomial_ideal_dimension(lead, fiber);
}

MaxDimLocus max_fiber_dim_locus(const Ideal& I, const DimLocusOptions& options) {
  const Ring& R = I.ring();
  Ring P = R->param_ring();
  int total = ideal_dimension(I);
  if (total < 0) return {-1, DimLocusResult{Ideal::unit(P), false, {}}};
  int top = std::min(total, static_cast<int>(R->fiber_indices().size()));
  for (int d = top; d >= 0; --d) {
    auto r = fiber_dim_locus(I, d, options);
    if (!contains_unit(r.locus)) return {d, std::move(r)};
  }
  return {-1, DimLocusResult{Ideal::unit(P), false, {}}};
}

DimLocusResult containment_locus_prime(const Ideal& I1, const Ideal& I2,
                                       const DimLocusOptions& options) {
  require_same_ring(I1.ring(), I2.ring(), "containment_locus_prime");
  int d = generic_fiber_dimension(I1);
  if (d < 0) throw PreconditionError("the generic fiber of the first family is empty");
  return fiber_dim_locus(ideal_sum(I1, I2), d, options);
}

}  // namespace famloc
