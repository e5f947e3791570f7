#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "famloc/cgs.hpp"
#include "famloc/constructible.hpp"

namespace famloc {

/// Linear system A*c = b with entries in a parameter ring. Rows of an ansatz
/// are indexed by monomials, columns by (basis element, multiplier monomial).
struct AnsatzSystem {
  Ring ring;
  std::vector<std::vector<Polynomial>> A;
  std::vector<Polynomial> b;
  std::vector<Monomial> row_monomials;
  std::vector<std::pair<std::size_t, Monomial>> columns;

  std::size_t rows() const { return b.size(); }
  std::size_t cols() const { return A.empty() ? 0 : A.front().size(); }
};

enum class SolvabilityMethod {
  /// Fraction-free elimination that splits on undecided pivots.
  Elimination,
  /// Union over r of V(minors_{r+1}(A|b)) \ V(minors_r(A)).
  Minors,
};

/// How containment is decided on each segment of the Groebner system of I2:
/// by a parametric normal form against the segment basis, or through the
/// homogenized ansatz and its solvability locus.
enum class ContainmentMethod { NormalForm, Ansatz };

struct LocusOptions {
  ContainmentMethod containment = ContainmentMethod::NormalForm;
  SolvabilityMethod method = SolvabilityMethod::Elimination;
  /// Largest minor size the Minors method may expand.
  unsigned max_minor_size = 8;
  /// Case splits allowed along one branch (elimination and CGS).
  unsigned max_branch_depth = 64;
};

/// Parameter points where A*c = b has a solution over the residue field,
/// restricted to `domain`.
ConstructibleSet linear_solvability_locus(const AnsatzSystem& system,
                                          const LocallyClosedPiece& domain,
                                          const LocusOptions& options = {});
ConstructibleSet linear_solvability_locus(const AnsatzSystem& system,
                                          const LocusOptions& options = {});

/// Ansatz for f in the homogenized span of `basis` in degree deg(f): the
/// homogenizing variable is added internally. Entries live in the parameter
/// ring of f's ring.
AnsatzSystem build_ansatz(const Polynomial& f, const std::vector<Polynomial>& basis);

/// Remainder of f against a segment basis by pseudo-division: every
/// coefficient is a parameter polynomial, reduced modulo the segment's closed
/// ideal. At a point of the segment, f(p) lies in I(p) iff all of them vanish.
std::vector<Polynomial> parametric_remainder(const Polynomial& f, const GroebnerSystem& system,
                                             const Segment& segment);

/// Points p with I1(p) contained in I2(p).
ConstructibleSet containment_locus(const Ideal& I1, const Ideal& I2,
                                   const LocusOptions& options = {});
/// Points p with I1(p) = I2(p).
ConstructibleSet coincidence_locus(const Ideal& I1, const Ideal& I2,
                                   const LocusOptions& options = {});

struct DimLocusTrace {
  std::uint64_t seed = 0;
  /// B_0, B_1, ... in the parameter ring.
  std::vector<Ideal> iterates;
  /// Affine forms used in each iteration, in the input ring.
  std::vector<std::vector<Polynomial>> forms;
};

struct DimLocusResult {
  Ideal locus;
  bool low_confidence = false;
  std::vector<DimLocusTrace> traces;
};

struct DimLocusOptions {
  std::uint64_t seed = 1;
  unsigned trials = 3;
  /// Coefficients of the random forms are drawn from {-H..H} \ {0}.
  int height = 50;
  unsigned max_iterations = 64;
};

/// Ideal of (the closure of) the parameter points whose fiber has dimension
/// at least d. Probabilistic; independent trials must agree up to radical or
/// the result is flagged low-confidence.
DimLocusResult fiber_dim_locus(const Ideal& I, int d, const DimLocusOptions& options = {});

struct MaxDimLocus {
  int dimension = -1;
  DimLocusResult result;
};

/// Largest d with a nonempty fiber_dim_locus, with that locus; (-1, <1>) for
/// families with no points.
MaxDimLocus max_fiber_dim_locus(const Ideal& I, const DimLocusOptions& options = {});

/// Fiber dimension of I over the generic point of the parameter space; -1
/// when the generic fiber is empty.
int generic_fiber_dimension(const Ideal& I);

/// For families I1 with prime fibers: the closed locus where V(I1(p)) lies in
/// V(I2(p)), computed as fiber_dim_locus(I1 + I2, generic dim of I1).
DimLocusResult containment_locus_prime(const Ideal& I1, const Ideal& I2,
                                       const DimLocusOptions& options = {});

}  // namespace famloc
