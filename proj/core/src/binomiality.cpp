#include "famloc/binomiality.hpp"

#include <algorithm>

#include "famloc/errors.hpp"

namespace famloc {

namespace {

struct ElementCoefficients {
  std::vector<Polynomial> nonleading;
};

std::vector<ElementCoefficients> nonleading_coefficients(const GroebnerSystem& sys,
                                                         const Segment& seg) {
  const Ring& R = sys.input.ring();
  Ring P = R->param_ring();
  auto fiber = R->fiber_indices();
  std::vector<ElementCoefficients> out;
  for (std::size_t j = 0; j < seg.basis.size(); ++j) {
    ElementCoefficients e;
    for (auto& [pattern, coeff] : coefficients_in(seg.basis[j], fiber, P))
      if (pattern != seg.leading_monomials[j]) e.nonleading.push_back(std::move(coeff));
    out.push_back(std::move(e));
  }
  return out;
}

bool has_nonzero_constant(const std::vector<Polynomial>& ps) {
  return std::any_of(ps.begin(), ps.end(), [](const Polynomial& p) { return p.is_constant(); });
}

// Depth-first walk over one kept nonleading monomial per element.
void enumerate_choices(const std::vector<ElementCoefficients>& elems, std::size_t j,
                       std::vector<Polynomial>& closed, const LocallyClosedPiece& condition,
                       std::vector<LocallyClosedPiece>& out) {
  const Ring& P = condition.ring();
  if (j == elems.size()) {
    out.push_back({Ideal(P, closed), condition.off});
    return;
  }
  const auto& nl = elems[j].nonleading;
  if (nl.size() <= 1) {
    enumerate_choices(elems, j + 1, closed, condition, out);
    return;
  }
  for (std::size_t keep = 0; keep < nl.size(); ++keep) {
    std::vector<Polynomial> extra;
    for (std::size_t k = 0; k < nl.size(); ++k)
      if (k != keep) extra.push_back(nl[k]);
    if (has_nonzero_constant(extra)) continue;
    std::size_t mark = closed.size();
    closed.insert(closed.end(), extra.begin(), extra.end());
    LocallyClosedPiece trial{Ideal(P, closed), condition.off};
    if (!is_empty(trial)) enumerate_choices(elems, j + 1, closed, condition, out);
    closed.erase(closed.begin() + static_cast<std::ptrdiff_t>(mark), closed.end());
  }
}

ConstructibleSet point_answer(const Ring& R, bool yes) {
  Ring P = R->param_ring();
  return yes ? ConstructibleSet::full(P) : ConstructibleSet::empty(P);
}

TermOrder fiber_order_for(const Ring& R, TermOrder::Kind kind) { return fiber_order(*R, kind); }

bool all_at_most(const GroebnerBasis& gb, std::size_t terms) {
  return std::all_of(gb.elements.begin(), gb.elements.end(),
                     [&](const Polynomial& g) { return g.size() <= terms; });
}

}  // namespace

ConstructibleSet binomial_locus(const Ideal& I, const BinomialOptions& options) {
  const Ring& R = I.ring();
  if (R->nparams() == 0)
    return point_answer(R, all_at_most(buchberger(I, fiber_order_for(R, options.fiber_kind)), 2));
  auto sys = relative_reduced_gb(I, options.fiber_kind, {options.max_branch_depth});
  Ring P = R->param_ring();
  std::vector<LocallyClosedPiece> pieces;
  for (const auto& seg : sys.segments) {
    auto elems = nonleading_coefficients(sys, seg);
    std::vector<Polynomial> closed = seg.condition.closed.generators();
    enumerate_choices(elems, 0, closed, seg.condition, pieces);
  }
  return simplify(ConstructibleSet(P, std::move(pieces)));
}

ConstructibleSet monomial_locus(const Ideal& I, const BinomialOptions& options) {
  const Ring& R = I.ring();
  if (R->nparams() == 0)
    return point_answer(R, all_at_most(buchberger(I, fiber_order_for(R, options.fiber_kind)), 1));
  auto sys = relative_reduced_gb(I, options.fiber_kind, {options.max_branch_depth});
  Ring P = R->param_ring();
  std::vector<LocallyClosedPiece> pieces;
  for (const auto& seg : sys.segments) {
    std::vector<Polynomial> closed = seg.condition.closed.generators();
    bool impossible = false;
    for (auto& e : nonleading_coefficients(sys, seg)) {
      impossible = impossible || has_nonzero_constant(e.nonleading);
      closed.insert(closed.end(), e.nonleading.begin(), e.nonleading.end());
    }
    if (impossible) continue;
    LocallyClosedPiece piece{Ideal(P, std::move(closed)), seg.condition.off};
    if (!is_empty(piece)) pieces.push_back(std::move(piece));
  }
  return simplify(ConstructibleSet(P, std::move(pieces)));
}

TensorSquare tensor_square(const Ring& R) {
  std::vector<std::string> taken = R->symbols();
  auto copy_name = [&](const std::string& v) {
    std::string base = v + "_";
    std::string c = base;
    for (int k = 2; std::find(taken.begin(), taken.end(), c) != taken.end(); ++k)
      c = base + std::to_string(k);
    taken.push_back(c);
    return c;
  };
  std::vector<std::string> main_copies, aux_copies;
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& v : R->main_vars()) {
    main_copies.push_back(copy_name(v));
    pairs.emplace_back(v, main_copies.back());
  }
  for (const auto& v : R->aux_vars()) {
    aux_copies.push_back(copy_name(v));
    pairs.emplace_back(v, aux_copies.back());
  }
  Ring T = R->with_extra(VarBlock::Main, main_copies)->with_extra(VarBlock::Aux, aux_copies);
  TensorSquare ts{T, {}, {}, {}};
  for (const auto& p : R->params()) {
    auto v = Polynomial::variable(T, p);
    ts.first.emplace(p, v);
    ts.second.emplace(p, v);
    ts.diagonal.emplace(p, v);
  }
  for (const auto& [v, c] : pairs) {
    auto x = Polynomial::variable(T, v), y = Polynomial::variable(T, c);
    ts.first.emplace(v, x);
    ts.second.emplace(v, y);
    ts.diagonal.emplace(v, x * y);
  }
  return ts;
}

Ideal diagonal_image(const Ideal& I) {
  auto ts = tensor_square(I.ring());
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(apply_map(g, ts.diagonal, ts.ring));
  return Ideal(ts.ring, std::move(gens));
}

Ideal doubled_ideal(const Ideal& I) {
  const Ring& R = I.ring();
  auto ts = tensor_square(R);
  auto fiber = R->fiber_indices();
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) {
    gens.push_back(apply_map(g, ts.first, ts.ring));
    gens.push_back(apply_map(g, ts.second, ts.ring));
  }
  // Relations carry over to the first copy with the ring; the second copy
  // needs its own.
  for (const auto& rel : R->relations()) {
    bool touches_fiber = std::any_of(fiber.begin(), fiber.end(),
                                     [&](std::size_t v) { return rel.uses_variable(v); });
    if (touches_fiber) gens.push_back(apply_map(rel, ts.second, ts.ring));
  }
  return Ideal(ts.ring, std::move(gens));
}

bool is_unital(const Ideal& I) {
  if (I.ring()->nparams() != 0)
    throw PreconditionError("is_unital expects a parameter-free ideal");
  auto gb = buchberger(doubled_ideal(I));
  Ideal diag = diagonal_image(I);
  for (const auto& g : diag.generators())
    if (!normal_form(g, gb).is_zero()) return false;
  return true;
}

ConstructibleSet unital_locus(const Ideal& I, const LocusOptions& options) {
  const Ring& R = I.ring();
  if (R->nparams() == 0) return point_answer(R, is_unital(I));
  return containment_locus(diagonal_image(I), doubled_ideal(I), options);
}

DimLocusResult unital_locus_prime(const Ideal& I, const DimLocusOptions& options) {
  return containment_locus_prime(doubled_ideal(I), diagonal_image(I), options);
}

bool is_unital_at_point(const Ideal& I, std::span<const Rational> point) {
  if (I.ring()->nparams() == 0) {
    if (!point.empty()) throw PreconditionError("point given for a parameter-free ideal");
    return is_unital(I);
  }
  return is_unital(specialize_ideal(I, point));
}

}  // namespace famloc
