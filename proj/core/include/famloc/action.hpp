#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "famloc/locus.hpp"

namespace famloc {

/// A group acting on affine space, given concretely. `ring` has the group
/// coordinates as parameters (with the group relations) and the acted-on
/// variables as main variables. `forward` and `inverse` give the images of
/// each main variable under the action and under its inverse.
struct ActionSpec {
  Ring ring;
  std::map<std::string, Polynomial> forward;
  std::map<std::string, Polynomial> inverse;
  /// Identity element as a point of the group coordinates.
  std::vector<Rational> identity;

  Ring group_ring() const { return ring->param_ring(); }
  std::size_t group_dimension_bound() const { return ring->nparams(); }
};

/// Diagonal torus x_i -> t_i x_i with inverse coordinates s_i and relations
/// t_i s_i - 1.
ActionSpec torus_action(const std::vector<std::string>& vars,
                        const std::vector<std::string>& avoid = {});
/// GL_n acting by x -> g x; coordinates g<i><j> and D with det(g) D - 1.
ActionSpec gl_action(const std::vector<std::string>& vars);
/// The trivial group (no coordinates).
ActionSpec trivial_action(const std::vector<std::string>& vars);
/// Checks forward(inverse(x)) = x modulo the group relations and that the
/// forward map is the identity at the identity point.
bool action_is_consistent(const ActionSpec& act);

/// Orbit family of a parameter-free ideal: generators mapped through the
/// inverse images, living in act.ring. Its fiber over g is I translated by g.
Ideal orbit_ideal(const Ideal& I, const ActionSpec& act);

struct StabilizerResult {
  int dimension = -1;
  /// Points of G where the stabilizer in T has maximal dimension, as an
  /// ideal of G's coordinate ring.
  Ideal locus;
  bool low_confidence = false;
};

StabilizerResult stabilizer_locus(const Ideal& I, const ActionSpec& t_act,
                                  const ActionSpec& g_act, const DimLocusOptions& options = {});

using IntegerMatrix = std::vector<std::vector<Integer>>;

struct SnfResult {
  IntegerMatrix U, D, V;
  std::size_t rank = 0;
};

/// Rows a - b for generators t^a - t^b of a reduced basis. Throws
/// PreconditionError if some generator is not a difference of monomials.
IntegerMatrix lattice_from_binomials(const Ideal& J);

/// U M V = D with U, V unimodular and D diagonal, each diagonal entry
/// dividing the next. The postconditions are verified on every call.
SnfResult smith_normal_form(const IntegerMatrix& M);
bool snf_postconditions_hold(const IntegerMatrix& M, const SnfResult& r);
Integer integer_determinant(const IntegerMatrix& M);
IntegerMatrix matrix_product(const IntegerMatrix& A, const IntegerMatrix& B);

struct GradingResult {
  /// Chosen group element, if a rational one was found.
  std::optional<std::vector<Rational>> witness;
  /// Maximal-stabilizer locus in G's coordinate ring.
  Ideal locus;
  int rank = 0;
  /// Degree of each variable in Z^rank.
  std::vector<std::vector<Integer>> degrees;
  /// I translated by the inverse of the witness; the grading applies to it.
  std::optional<Ideal> transformed;
  IntegerMatrix lattice;
  bool low_confidence = false;
};

struct GradingOptions {
  DimLocusOptions dim;
  std::optional<std::vector<Rational>> point;
  unsigned witness_attempts = 64;
};

GradingResult grading_of_ideal(const Ideal& I, const ActionSpec& g_act,
                               const GradingOptions& options = {});

/// Maximal torus stabilizer of a parameter-free ideal as a binomial ideal in
/// the torus coordinates t_i (Laurent-saturated).
Ideal torus_stabilizer_ideal(const Ideal& I);

/// Searches a rational point of V(locus) in the group: identity first, then
/// coordinates fixed one at a time.
std::optional<std::vector<Rational>> find_group_point(const Ideal& locus,
                                                      const std::vector<Rational>& identity,
                                                      std::uint64_t seed, unsigned attempts);

}  // namespace famloc
