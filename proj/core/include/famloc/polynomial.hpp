#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "famloc/ring.hpp"

namespace famloc {

/// Sparse polynomial with exact rational coefficients. Terms are kept sorted
/// descending in the ring's default order with no zero coefficients.
class Polynomial {
 public:
  explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}
  Polynomial(Ring ring, std::vector<Term> terms);

  static Polynomial constant(Ring ring, const Rational& c);
  static Polynomial variable(Ring ring, std::string_view name);
  static Polynomial monomial(Ring ring, Monomial m, const Rational& c = 1);

  const Ring& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term value (0 if absent).
  Rational constant_term() const;

  unsigned total_degree() const;
  unsigned degree_in(std::span<const std::size_t> vars) const;
  bool uses_variable(std::size_t index) const;
  bool uses_only(std::span<const std::size_t> vars) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

  Polynomial pow(unsigned e) const;
  Polynomial mul_monomial(const Monomial& m, const Rational& c) const;

  /// Evaluates at a point given for every ring variable.
  Rational evaluate(std::span<const Rational> point) const;

  bool operator==(const Polynomial& other) const;

  /// Canonical serialization, descending in the default order, e.g.
  /// "x^2 - 3/2*x*y + 1".
  std::string to_string() const;

 private:
  void canonicalize();

  Ring ring_;
  std::vector<Term> terms_;
};

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial multiply(const Polynomial& p, const Polynomial& q);

/// Ring homomorphism defined by images of the symbols of p's ring. Symbols
/// missing from `images` must not occur in p.
Polynomial apply_map(const Polynomial& p, const std::map<std::string, Polynomial>& images,
                     const Ring& target);

/// Moves p into `target` by symbol name.
Polynomial embed(const Polynomial& p, const Ring& target);

/// Homogenizes with respect to the fiber (main+aux) variables using aux
/// variable h.
Polynomial homogenize(const Polynomial& p, std::string_view h);
/// Sets h = 1.
Polynomial dehomogenize(const Polynomial& p, std::string_view h);
bool is_homogeneous(const Polynomial& p, std::span<const std::size_t> vars);

/// Maximal term under o.
std::pair<Monomial, Rational> leading_term(const Polynomial& p, const TermOrder& o);

/// Integer-content-free, denominator-free multiple with positive leading
/// coefficient (leading in the default order).
Polynomial normalize(const Polynomial& p);

/// Substitutes values for a subset of variables (by ring index) and moves the
/// result to `target` by symbol name.
Polynomial substitute_values(const Polynomial& p,
                             const std::vector<std::pair<std::size_t, Rational>>& values,
                             const Ring& target);

/// Coefficients of p viewed as a polynomial in `vars` with coefficients in the
/// remaining variables: map from the exponent pattern on `vars` (other
/// exponents zeroed) to the coefficient, moved to `coeff_ring` by name.
std::vector<std::pair<Monomial, Polynomial>> coefficients_in(
    const Polynomial& p, std::span<const std::size_t> vars, const Ring& coeff_ring);

std::string to_string(const Rational& c);

}  // namespace famloc
