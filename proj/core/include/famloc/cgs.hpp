#pragma once

#include <span>
#include <vector>

#include "famloc/constructible.hpp"

namespace famloc {

/// One segment of a relative reduced Groebner system. The basis lives in the
/// input ring; leading coefficients live in the parameter ring and do not
/// vanish anywhere on the condition.
struct Segment {
  LocallyClosedPiece condition;
  std::vector<Polynomial> basis;
  std::vector<Monomial> leading_monomials;
  std::vector<Polynomial> leading_coefficients;
};

struct GroebnerSystem {
  Ideal input;
  TermOrder::Kind fiber_kind = TermOrder::Kind::Grevlex;
  /// Order on the input ring: fiber variables by fiber_kind above the
  /// parameters.
  TermOrder order;
  std::vector<Segment> segments;

  /// Union of the segment conditions.
  ConstructibleSet cover() const;
};

struct CgsOptions {
  /// Maximum number of case splits along one branch.
  unsigned max_branch_depth = 64;
};

/// Relative reduced Groebner system of I over its parameter ring.
GroebnerSystem relative_reduced_gb(const Ideal& I,
                                   TermOrder::Kind fiber_kind = TermOrder::Kind::Grevlex,
                                   CgsOptions options = {});

/// Fiber ideal at a parameter point: generators and every ring relation with
/// the parameters substituted, in the fiber ring.
Ideal specialize_ideal(const Ideal& I, std::span<const Rational> point);

/// Basis of the segment at a point of its condition, each element monic.
/// Throws PreconditionError outside the condition.
std::vector<Polynomial> specialize_basis(const GroebnerSystem& system, const Segment& seg,
                                         std::span<const Rational> point);

}  // namespace famloc
