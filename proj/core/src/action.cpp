#include "famloc/action.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "famloc/errors.hpp"

namespace famloc {

namespace {

std::string fresh_name(const std::string& base, std::vector<std::string>& taken) {
  std::string c = base;
  for (int k = 2; std::find(taken.begin(), taken.end(), c) != taken.end(); ++k)
    c = base + "_" + std::to_string(k);
  taken.push_back(c);
  return c;
}

Ring with_embedded_relations(Ring base, const std::vector<Polynomial>& rels) {
  if (rels.empty()) return base;
  std::vector<Polynomial> moved;
  for (const auto& r : rels) moved.push_back(embed(r, base));
  return base->with_relations(moved);
}

std::map<std::string, Polynomial> moved_map(const std::map<std::string, Polynomial>& m,
                                            const Ring& target) {
  std::map<std::string, Polynomial> out;
  for (const auto& [k, v] : m) out.emplace(k, embed(v, target));
  return out;
}

// Ring with the parameters of both actions and the shared main variables.
Ring combined_ring(const ActionSpec& a, const ActionSpec& b) {
  std::vector<std::string> params = a.ring->params();
  for (const auto& p : b.ring->params()) {
    if (std::find(params.begin(), params.end(), p) != params.end())
      throw PreconditionError("group coordinate '" + p + "' is used by both actions");
    params.push_back(p);
  }
  if (a.ring->main_vars() != b.ring->main_vars())
    throw PreconditionError("actions act on different variables");
  Ring base = RingSpec::make(params, a.ring->main_vars());
  std::vector<Polynomial> rels = a.ring->relations();
  for (auto& r : b.ring->relations()) rels.push_back(r);
  return with_embedded_relations(base, rels);
}

bool vanishes_at(const Ideal& I, const std::vector<Rational>& point) {
  for (const auto& g : I.generators_with_relations())
    if (g.evaluate(point) != 0) return false;
  return true;
}

Polynomial polynomial_determinant(const std::vector<std::vector<Polynomial>>& M) {
  std::size_t n = M.size();
  if (n == 1) return M[0][0];
  Polynomial out(M[0][0].ring());
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<Polynomial>> sub;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Polynomial> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(M[r][k]);
      sub.push_back(std::move(row));
    }
    Polynomial term = M[0][c] * polynomial_determinant(sub);
    if (c % 2 == 0) out += term;
    else out -= term;
  }
  return out;
}

}  // namespace

ActionSpec torus_action(const std::vector<std::string>& vars,
                        const std::vector<std::string>& avoid) {
  std::vector<std::string> taken = vars;
  taken.insert(taken.end(), avoid.begin(), avoid.end());
  std::vector<std::string> ts, ss;
  for (std::size_t i = 0; i < vars.size(); ++i) ts.push_back(fresh_name("t" + std::to_string(i + 1), taken));
  for (std::size_t i = 0; i < vars.size(); ++i) ss.push_back(fresh_name("s" + std::to_string(i + 1), taken));
  std::vector<std::string> params = ts;
  params.insert(params.end(), ss.begin(), ss.end());
  Ring base = RingSpec::make(params, vars);
  std::vector<Polynomial> rels;
  for (std::size_t i = 0; i < vars.size(); ++i)
    rels.push_back(Polynomial::variable(base, ts[i]) * Polynomial::variable(base, ss[i]) -
                   Polynomial::constant(base, 1));
  Ring R = with_embedded_relations(base, rels);
  ActionSpec act{R, {}, {}, std::vector<Rational>(params.size(), Rational(1))};
  for (std::size_t i = 0; i < vars.size(); ++i) {
    auto x = Polynomial::variable(R, vars[i]);
    act.forward.emplace(vars[i], Polynomial::variable(R, ts[i]) * x);
    act.inverse.emplace(vars[i], Polynomial::variable(R, ss[i]) * x);
  }
  return act;
}

ActionSpec gl_action(const std::vector<std::string>& vars) {
  std::size_t n = vars.size();
  if (n == 0) throw PreconditionError("GL action needs at least one variable");
  std::vector<std::string> taken = vars;
  std::vector<std::vector<std::string>> g(n, std::vector<std::string>(n));
  std::vector<std::string> params;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::string base = n <= 9 ? "g" + std::to_string(i + 1) + std::to_string(j + 1)
                                : "g" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
      g[i][j] = fresh_name(base, taken);
      params.push_back(g[i][j]);
    }
  std::string D = fresh_name("D", taken);
  params.push_back(D);
  Ring base = RingSpec::make(params, vars);
  std::vector<std::vector<Polynomial>> M(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) M[i].push_back(Polynomial::variable(base, g[i][j]));
  Polynomial det = polynomial_determinant(M);
  Ring R = with_embedded_relations(
      base, {det * Polynomial::variable(base, D) - Polynomial::constant(base, 1)});

  std::vector<std::vector<Polynomial>> MR(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) MR[i].push_back(Polynomial::variable(R, g[i][j]));
  std::vector<Rational> identity;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) identity.emplace_back(i == j ? 1 : 0);
  identity.emplace_back(1);
  ActionSpec act{R, {}, {}, identity};
  auto Dv = Polynomial::variable(R, D);
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial fwd(R), inv(R);
    for (std::size_t j = 0; j < n; ++j) {
      fwd += MR[i][j] * Polynomial::variable(R, vars[j]);
      // adj(g)[i][j] = (-1)^(i+j) det(g without row j and column i)
      Polynomial cof = Polynomial::constant(R, 1);
      if (n > 1) {
        std::vector<std::vector<Polynomial>> sub;
        for (std::size_t r = 0; r < n; ++r) {
          if (r == j) continue;
          std::vector<Polynomial> row;
          for (std::size_t c = 0; c < n; ++c)
            if (c != i) row.push_back(MR[r][c]);
          sub.push_back(std::move(row));
        }
        cof = polynomial_determinant(sub);
      }
      if ((i + j) % 2 == 1) cof = -cof;
      inv += Dv * cof * Polynomial::variable(R, vars[j]);
    }
    act.forward.emplace(vars[i], std::move(fwd));
    act.inverse.emplace(vars[i], std::move(inv));
  }
  return act;
}

ActionSpec trivial_action(const std::vector<std::string>& vars) {
  Ring R = RingSpec::make({}, vars);
  ActionSpec act{R, {}, {}, {}};
  for (const auto& v : vars) {
    act.forward.emplace(v, Polynomial::variable(R, v));
    act.inverse.emplace(v, Polynomial::variable(R, v));
  }
  return act;
}

bool action_is_consistent(const ActionSpec& act) {
  const Ring& R = act.ring;
  std::map<std::string, Polynomial> inv = act.inverse;
  for (const auto& p : R->params()) inv.emplace(p, Polynomial::variable(R, p));
  auto gb = buchberger(Ideal(R));
  std::vector<std::pair<std::size_t, Rational>> at_identity;
  auto params = R->param_indices();
  if (act.identity.size() != params.size()) return false;
  for (std::size_t k = 0; k < params.size(); ++k) at_identity.emplace_back(params[k], act.identity[k]);
  Ring F = R->fiber_ring();
  for (const auto& v : R->main_vars()) {
    auto fwd = act.forward.find(v);
    if (fwd == act.forward.end() || !act.inverse.count(v)) return false;
    Polynomial composed = apply_map(fwd->second, inv, R);
    if (!normal_form(composed - Polynomial::variable(R, v), gb).is_zero()) return false;
    if (!(substitute_values(fwd->second, at_identity, F) == Polynomial::variable(F, v)))
      return false;
  }
  return true;
}

Ideal orbit_ideal(const Ideal& I, const ActionSpec& act) {
  const Ring& R = I.ring();
  if (R->nparams() != 0) throw PreconditionError("orbit_ideal expects a parameter-free ideal");
  std::map<std::string, Polynomial> images;
  for (const auto& s : R->symbols()) {
    auto it = act.inverse.find(s);
    if (it == act.inverse.end())
      throw PreconditionError("the action does not move variable '" + s + "'");
    images.emplace(s, it->second);
  }
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators_with_relations()) gens.push_back(apply_map(g, images, act.ring));
  return Ideal(act.ring, std::move(gens));
}

StabilizerResult stabilizer_locus(const Ideal& I, const ActionSpec& t_act,
                                  const ActionSpec& g_act, const DimLocusOptions& options) {
  Ring C = combined_ring(t_act, g_act);
  Ideal X2g = orbit_ideal(I, g_act);
  std::vector<Polynomial> x2, x1;
  auto t_inverse = moved_map(t_act.inverse, C);
  for (const auto& p : C->params()) t_inverse.emplace(p, Polynomial::variable(C, p));
  for (const auto& g : X2g.generators()) {
    x2.push_back(embed(g, C));
    x1.push_back(apply_map(x2.back(), t_inverse, C));
  }
  // One containment suffices: a translate contained in the ideal equals it.
  auto Y = containment_locus(Ideal(C, x1), Ideal(C, x2));
  Ideal closure = closure_ideal(Y);
  Ring Rt = closure.ring()->retag(g_act.ring->params(), t_act.ring->params(), {});
  std::vector<Polynomial> gens;
  for (const auto& g : closure.generators()) gens.push_back(embed(g, Rt));
  auto m = max_fiber_dim_locus(Ideal(Rt, std::move(gens)), options);
  Ring G = g_act.group_ring();
  std::vector<Polynomial> locus;
  for (const auto& g : m.result.locus.generators()) locus.push_back(embed(g, G));
  return {m.dimension, Ideal(G, std::move(locus)), m.result.low_confidence};
}

IntegerMatrix lattice_from_binomials(const Ideal& J) {
  const Ring& R = J.ring();
  IntegerMatrix out;
  if (J.has_no_generators()) return out;
  auto gb = buchberger(J);
  for (const auto& e : gb.elements) {
    const auto& t = e.terms();
    if (t.size() != 2 || t[0].coefficient + t[1].coefficient != 0 ||
        abs(t[0].coefficient) != 1)
      throw PreconditionError("not a difference of monomials: " + e.to_string());
    std::vector<Integer> row;
    for (std::size_t v = 0; v < R->nvars(); ++v)
      row.emplace_back(Integer(t[0].monomial[v]) - Integer(t[1].monomial[v]));
    out.push_back(std::move(row));
  }
  return out;
}

IntegerMatrix matrix_product(const IntegerMatrix& A, const IntegerMatrix& B) {
  std::size_t m = A.size(), k = B.size(), n = B.empty() ? 0 : B.front().size();
  IntegerMatrix out(m, std::vector<Integer>(n, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (A[i][l] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) out[i][j] += A[i][l] * B[l][j];
    }
  return out;
}

Integer integer_determinant(const IntegerMatrix& M) {
  std::size_t n = M.size();
  if (n == 0) return 1;
  IntegerMatrix A = M;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (A[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && A[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(A[k], A[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = A[i][j] * A[k][k] - A[i][k] * A[k][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        A[i][j] = std::move(v);
      }
    prev = A[k][k];
  }
  return sign * A[n - 1][n - 1];
}

namespace {

IntegerMatrix identity_matrix(std::size_t n) {
  IntegerMatrix I(n, std::vector<Integer>(n, 0));
  for (std::size_t i = 0; i < n; ++i) I[i][i] = 1;
  return I;
}

}  // namespace

SnfResult smith_normal_form(const IntegerMatrix& M) {
  std::size_t m = M.size(), n = M.empty() ? 0 : M.front().size();
  for (const auto& row : M)
    if (row.size() != n) throw PreconditionError("ragged integer matrix");
  SnfResult r{identity_matrix(m), M, identity_matrix(n), 0};
  auto& D = r.D;
  auto& U = r.U;
  auto& V = r.V;
  auto swap_rows = [&](std::size_t a, std::size_t b) {
    std::swap(D[a], D[b]);
    std::swap(U[a], U[b]);
  };
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    for (auto& row : D) std::swap(row[a], row[b]);
    for (auto& row : V) std::swap(row[a], row[b]);
  };
  // row_a -= q row_b
  auto row_sub = [&](std::size_t a, std::size_t b, const Integer& q) {
    for (std::size_t j = 0; j < n; ++j) D[a][j] -= q * D[b][j];
    for (std::size_t j = 0; j < m; ++j) U[a][j] -= q * U[b][j];
  };
  auto col_sub = [&](std::size_t a, std::size_t b, const Integer& q) {
    for (std::size_t i = 0; i < m; ++i) D[i][a] -= q * D[i][b];
    for (std::size_t i = 0; i < n; ++i) V[i][a] -= q * V[i][b];
  };

  std::size_t t = 0;
  for (; t < std::min(m, n); ++t) {
    // Smallest nonzero entry of the remaining block goes to (t, t).
    bool found = false;
    std::size_t bi = t, bj = t;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (D[i][j] != 0 && (!found || abs(D[i][j]) < abs(D[bi][bj]))) {
          found = true;
          bi = i;
          bj = j;
        }
    if (!found) break;
    swap_rows(t, bi);
    swap_cols(t, bj);
    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (D[i][t] == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), D[i][t].get_mpz_t(), D[t][t].get_mpz_t());
        row_sub(i, t, q);
        if (D[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (D[t][j] == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), D[t][j].get_mpz_t(), D[t][t].get_mpz_t());
        col_sub(j, t, q);
        if (D[t][j] != 0) clean = false;
      }
      if (!clean) {
        // A smaller remainder appeared in row or column t; move it to the pivot.
        std::size_t pi = t, pj = t;
        for (std::size_t i = t + 1; i < m; ++i)
          if (D[i][t] != 0 && abs(D[i][t]) < abs(D[pi][pj])) {
            pi = i;
            pj = t;
          }
        for (std::size_t j = t + 1; j < n; ++j)
          if (D[t][j] != 0 && abs(D[t][j]) < abs(D[pi][pj])) {
            pi = t;
            pj = j;
          }
        swap_rows(t, pi);
        swap_cols(t, pj);
        continue;
      }
      // Divisibility: fold an offending row into row t and repeat.
      std::optional<std::size_t> bad;
      for (std::size_t i = t + 1; i < m && !bad; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (D[i][j] % D[t][t] != 0) {
            bad = i;
            break;
          }
      if (!bad) break;
      row_sub(t, *bad, Integer(-1));
    }
    if (D[t][t] < 0) {
      for (auto& v : D[t]) v = -v;
      for (auto& v : U[t]) v = -v;
    }
  }
  r.rank = t;
  if (!snf_postconditions_hold(M, r)) throw std::logic_error("Smith normal form check failed");
  return r;
}

bool snf_postconditions_hold(const IntegerMatrix& M, const SnfResult& r) {
  std::size_t m = M.size(), n = M.empty() ? 0 : M.front().size();
  if (r.U.size() != m || r.V.size() != n || r.D.size() != m) return false;
  if (matrix_product(matrix_product(r.U, M), r.V) != r.D) return false;
  if (abs(integer_determinant(r.U)) != 1 || abs(integer_determinant(r.V)) != 1) return false;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && r.D[i][j] != 0) return false;
      if (i == j && r.D[i][j] < 0) return false;
    }
  std::size_t k = std::min(m, n);
  for (std::size_t i = 0; i < k; ++i) {
    bool nonzero = r.D[i][i] != 0;
    if (nonzero != (i < r.rank)) return false;
    if (i + 1 < k && nonzero && r.D[i + 1][i + 1] % r.D[i][i] != 0) return false;
  }
  return true;
}

Ideal torus_stabilizer_ideal(const Ideal& I) {
  const Ring& R = I.ring();
  if (R->nparams() != 0) throw PreconditionError("torus stabilizer expects a parameter-free ideal");
  auto T = torus_action(R->symbols());
  Ideal X1 = orbit_ideal(I, T);
  std::vector<Polynomial> x2;
  for (const auto& g : I.generators_with_relations()) x2.push_back(embed(g, T.ring));
  auto Y = containment_locus(X1, Ideal(T.ring, std::move(x2)));
  Ideal closure = closure_ideal(Y);
  std::size_t n = R->nvars();
  const auto& params = T.ring->params();
  std::vector<std::string> ts(params.begin(), params.begin() + static_cast<std::ptrdiff_t>(n));
  std::vector<std::string> ss(params.begin() + static_cast<std::ptrdiff_t>(n), params.end());
  // Work with the torus coordinates as main variables.
  Ring Rt = closure.ring()->retag({}, params, {});
  std::vector<Polynomial> gens;
  for (const auto& g : closure.generators()) gens.push_back(embed(g, Rt));
  Ideal onlyt = eliminate(Ideal(Rt, std::move(gens)), ss);
  Polynomial prod = Polynomial::constant(onlyt.ring(), 1);
  for (const auto& t : ts) prod *= Polynomial::variable(onlyt.ring(), t);
  Ideal sat = saturate(onlyt, prod);
  return Ideal(sat.ring(), buchberger(sat).elements);
}

std::optional<std::vector<Rational>> find_group_point(const Ideal& locus,
                                                      const std::vector<Rational>& identity,
                                                      std::uint64_t seed, unsigned attempts) {
  const Ring& R = locus.ring();
  std::size_t n = R->nvars();
  if (identity.size() == n && vanishes_at(locus, identity)) return identity;
  if (contains_unit(locus)) return std::nullopt;
  std::mt19937_64 rng(seed);
  std::vector<Rational> point(n);
  Ideal K = locus;
  std::vector<int> values{1, -1, 2, -2, 3, -3, 0, 4, -4, 5, -5};
  unsigned budget = attempts;
  for (std::size_t c = 0; c < n; ++c) {
    auto xc = Polynomial::variable(R, R->name(c));
    std::vector<std::size_t> others;
    for (std::size_t k = 0; k < n; ++k)
      if (k != c) others.push_back(k);
    auto gb = buchberger(K, elimination_order(*R, others));
    bool fixed = false;
    for (const auto& e : gb.elements) {
      bool only_c = true;
      for (auto k : others) only_c = only_c && !e.uses_variable(k);
      if (only_c && e.total_degree() == 1) {
        // monic: x_c + v
        point[c] = -e.constant_term();
        fixed = true;
        break;
      }
    }
    if (!fixed) {
      std::vector<int> order = values;
      std::shuffle(order.begin() + 2, order.end(), rng);
      for (int v : order) {
        if (budget == 0) return std::nullopt;
        --budget;
        if (!contains_unit(K.with(xc - Polynomial::constant(R, v)))) {
          point[c] = v;
          fixed = true;
          break;
        }
      }
    }
    if (!fixed) return std::nullopt;
    K = K.with(xc - Polynomial::constant(R, point[c]));
  }
  if (!vanishes_at(locus, point)) return std::nullopt;
  return point;
}

GradingResult grading_of_ideal(const Ideal& I, const ActionSpec& g_act,
                               const GradingOptions& options) {
  const Ring& R = I.ring();
  if (R->nparams() != 0) throw PreconditionError("grading expects a parameter-free ideal");
  Ring G = g_act.group_ring();
  GradingResult out{std::nullopt, Ideal(G), 0, {}, std::nullopt, {}, false};
  std::vector<Rational> gamma;
  if (G->nvars() > 0) {
    auto T = torus_action(R->symbols(), g_act.ring->params());
    auto st = stabilizer_locus(I, T, g_act, options.dim);
    out.locus = st.locus;
    out.low_confidence = st.low_confidence;
    out.rank = st.dimension;
    if (options.point) {
      if (options.point->size() != G->nvars() || !vanishes_at(st.locus, *options.point))
        throw PreconditionError("the given group element is not in the maximal stabilizer locus");
      gamma = *options.point;
    } else if (auto p = find_group_point(st.locus, g_act.identity, options.dim.seed,
                                         options.witness_attempts)) {
      gamma = *p;
    } else {
      return out;
    }
    out.witness = gamma;
    Ideal spec = specialize_ideal(orbit_ideal(I, g_act), gamma);
    std::vector<Polynomial> gens;
    for (const auto& g : spec.generators()) gens.push_back(embed(g, R));
    out.transformed = Ideal(R, std::move(gens));
  } else {
    out.witness = gamma;
    out.transformed = I;
  }
  Ideal K = torus_stabilizer_ideal(*out.transformed);
  out.lattice = lattice_from_binomials(K);
  std::size_t n = R->nvars();
  IntegerMatrix L = out.lattice;
  std::size_t rank = 0;
  IntegerMatrix V = [&] {
    IntegerMatrix I(n, std::vector<Integer>(n, 0));
    for (std::size_t i = 0; i < n; ++i) I[i][i] = 1;
    return I;
  }();
  if (!L.empty()) {
    auto snf = smith_normal_form(L);
    rank = snf.rank;
    V = snf.V;
  }
  out.rank = static_cast<int>(n - rank);
  for (std::size_t i = 0; i < n; ++i)
    out.degrees.emplace_back(V[i].begin() + static_cast<std::ptrdiff_t>(rank), V[i].end());
  return out;
}

}  // namespace famloc
