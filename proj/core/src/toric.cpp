#include "famloc/toric.hpp"

#include <algorithm>
#include <functional>

#include "famloc/errors.hpp"

namespace famloc {

std::vector<Monomial> veronese_monomials(const Ring& ring, unsigned d) {
  auto vars = ring->main_indices();
  std::vector<Monomial> out;
  Monomial m(ring->nvars());
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t k, unsigned left) {
    if (k + 1 == vars.size()) {
      m.set(vars[k], left);
      out.push_back(m);
      return;
    }
    for (unsigned e = left + 1; e-- > 0;) {
      m.set(vars[k], e);
      rec(k + 1, left - e);
    }
    m.set(vars[k], 0);
  };
  if (!vars.empty()) rec(0, d);
  return out;
}

Ideal veronese_ideal(const Ideal& I, unsigned d, const std::vector<std::string>& names) {
  const Ring& R = I.ring();
  if (R->nparams() != 0 || !R->aux_vars().empty())
    throw PreconditionError("veronese expects an ideal in main variables only");
  if (d == 0) throw PreconditionError("veronese degree must be at least 1");
  auto mains = R->main_indices();
  for (const auto& g : I.generators_with_relations())
    if (!is_homogeneous(g, mains))
      throw PreconditionError("veronese expects a homogeneous ideal: " + g.to_string());
  auto monos = veronese_monomials(R, d);
  std::vector<std::string> vs = names;
  if (vs.empty()) {
    if (d == 1) vs = R->main_vars();
    else
      for (std::size_t k = 0; k < monos.size(); ++k) vs.push_back("v" + std::to_string(k));
  }
  if (vs.size() != monos.size())
    throw PreconditionError("veronese of degree " + std::to_string(d) + " needs " +
                            std::to_string(monos.size()) + " variable names");
  Ring S = RingSpec::make({}, vs);
  Ring T = I.has_no_generators() ? R : R->with_relations(I.generators_with_relations());
  std::map<std::string, Polynomial> images;
  for (std::size_t k = 0; k < monos.size(); ++k)
    images.emplace(vs[k], Polynomial::monomial(T, monos[k]));
  Ideal K = ring_map_kernel(images, S, T);
  std::vector<Polynomial> gens;
  for (const auto& g : buchberger(K).elements) gens.push_back(embed(g, S));
  return Ideal(S, std::move(gens));
}

std::string to_string(ToricVerdict v) {
  switch (v) {
    case ToricVerdict::Toric: return "toric";
    case ToricVerdict::NotToric: return "not-toric";
    case ToricVerdict::LocusOnly: return "locus-only";
  }
  return "";
}

ToricCheckResult projective_toric_check(const Ideal& I, const ToricOptions& options) {
  ToricCheckResult out{ToricVerdict::LocusOnly,
                       veronese_ideal(I, options.veronese_degree, options.names), std::nullopt,
                       std::nullopt, std::nullopt, false};
  const Ideal& V = out.embedded;
  std::size_t n = V.ring()->nvars();
  // Already unital: the identity is a witness.
  if (is_unital(V)) {
    std::vector<Rational> id;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) id.emplace_back(i == j ? 1 : 0);
    id.emplace_back(1);
    out.verdict = ToricVerdict::Toric;
    out.witness = id;
    out.transformed = V;
    return out;
  }
  if (n > options.max_gl_size)
    throw ResourceCapExceeded("toric check needs GL_" + std::to_string(n) +
                              " but the cap is GL_" + std::to_string(options.max_gl_size));
  auto G = gl_action(V.ring()->main_vars());
  Ideal O = orbit_ideal(V, G);
  auto L = unital_locus_prime(O, options.dim);
  out.low_confidence = L.low_confidence;
  Ring GR = G.group_ring();
  std::vector<Polynomial> gens;
  for (const auto& g : L.locus.generators()) gens.push_back(embed(g, GR));
  Ideal locus(GR, std::move(gens));
  out.locus = locus;
  if (contains_unit(locus)) {
    out.verdict = ToricVerdict::NotToric;
    return out;
  }
  std::optional<std::vector<Rational>> gamma;
  if (options.point) {
    if (options.point->size() != GR->nvars())
      throw PreconditionError("the given group element has the wrong number of coordinates");
    gamma = options.point;
  } else {
    gamma = find_group_point(locus, G.identity, options.dim.seed, options.witness_attempts);
  }
  if (!gamma) return out;
  Ideal spec = specialize_ideal(O, *gamma);
  std::vector<Polynomial> tg;
  for (const auto& g : spec.generators()) tg.push_back(embed(g, V.ring()));
  Ideal transformed(V.ring(), std::move(tg));
  // A closure point may miss the open unital part; then only the locus is reported.
  if (!is_unital(transformed)) {
    if (options.point) throw PreconditionError("the given group element does not make the ideal unital");
    return out;
  }
  out.verdict = ToricVerdict::Toric;
  out.witness = gamma;
  out.transformed = std::move(transformed);
  return out;
}

}  // namespace famloc
