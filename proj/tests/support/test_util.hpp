#pragma once

#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "famloc/errors.hpp"
#include "famloc/groebner.hpp"
#include "famloc/parse.hpp"

namespace famloc::testing {

inline Polynomial poly(const Ring& r, const std::string& text) { return parse_polynomial(text, r); }

inline Ideal ideal(const Ring& r, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> ps;
  for (const char* g : gens) ps.push_back(poly(r, g));
  return Ideal(r, std::move(ps));
}

inline Ideal ideal(const Ring& r, const std::vector<std::string>& gens) {
  std::vector<Polynomial> ps;
  for (const auto& g : gens) ps.push_back(poly(r, g));
  return Ideal(r, std::move(ps));
}

/// Random polynomial with small integer coefficients in the given variables.
inline Polynomial random_poly(std::mt19937_64& rng, const Ring& r,
                              const std::vector<std::size_t>& vars, unsigned max_deg,
                              unsigned max_terms, int coeff_bound = 5) {
  std::uniform_int_distribution<int> coef(-coeff_bound, coeff_bound);
  std::uniform_int_distribution<unsigned> deg(0, max_deg);
  std::uniform_int_distribution<unsigned> count(1, max_terms);
  std::uniform_int_distribution<std::size_t> pick(0, vars.size() - 1);
  std::vector<Term> terms;
  unsigned n = count(rng);
  for (unsigned k = 0; k < n; ++k) {
    Monomial m(r->nvars());
    unsigned d = deg(rng);
    for (unsigned e = 0; e < d && !vars.empty(); ++e) {
      std::size_t v = vars[pick(rng)];
      m.set(v, m[v] + 1);
    }
    int c = coef(rng);
    if (c == 0) c = 1;
    terms.push_back({m, Rational(c)});
  }
  return Polynomial(r, std::move(terms));
}

inline std::vector<Rational> random_point(std::mt19937_64& rng, std::size_t n, int bound = 7) {
  std::uniform_int_distribution<int> v(-bound, bound);
  std::vector<Rational> p;
  for (std::size_t i = 0; i < n; ++i) p.emplace_back(v(rng));
  return p;
}

}  // namespace famloc::testing
