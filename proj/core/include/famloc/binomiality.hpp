#pragma once

#include <map>
#include <span>
#include <string>

#include "famloc/cgs.hpp"
#include "famloc/locus.hpp"

namespace famloc {

struct BinomialOptions {
  TermOrder::Kind fiber_kind = TermOrder::Kind::Grevlex;
  unsigned max_branch_depth = 64;
};

/// Points of the parameter space where the fiber's reduced basis consists of
/// polynomials with at most two terms.
ConstructibleSet binomial_locus(const Ideal& I, const BinomialOptions& options = {});
/// Points where the fiber's reduced basis consists of monomials.
ConstructibleSet monomial_locus(const Ideal& I, const BinomialOptions& options = {});

/// The ring with a second copy of every fiber variable. `first` and `second`
/// send the fiber variables of the original ring to the two copies;
/// `diagonal` sends x to x*x'.
struct TensorSquare {
  Ring ring;
  std::map<std::string, Polynomial> first;
  std::map<std::string, Polynomial> second;
  std::map<std::string, Polynomial> diagonal;
};

TensorSquare tensor_square(const Ring& ring);
Ideal diagonal_image(const Ideal& I);
/// I in the first copy plus I (and the fiber relations) in the second copy.
Ideal doubled_ideal(const Ideal& I);

/// Points where the fiber ideal is unital: the diagonal image lies in the
/// doubled ideal.
ConstructibleSet unital_locus(const Ideal& I, const LocusOptions& options = {});
/// Closed variant for families with prime fibers.
DimLocusResult unital_locus_prime(const Ideal& I, const DimLocusOptions& options = {});
bool is_unital_at_point(const Ideal& I, std::span<const Rational> point);
bool is_unital(const Ideal& I);

}  // namespace famloc
