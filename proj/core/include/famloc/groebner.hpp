#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "famloc/polynomial.hpp"

namespace famloc {

/// Finite generator list in a ring. Zero generators are dropped on
/// construction. The ring's relations are implicitly part of every ideal.
class Ideal {
 public:
  explicit Ideal(Ring ring) : ring_(std::move(ring)) {}
  Ideal(Ring ring, std::vector<Polynomial> generators);

  static Ideal unit(Ring ring) { return Ideal(ring, {Polynomial::constant(ring, 1)}); }

  const Ring& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool has_no_generators() const { return gens_.empty(); }

  /// Generators plus the ring's relations.
  std::vector<Polynomial> generators_with_relations() const;

  Ideal with(const Polynomial& p) const;
  Ideal with(const std::vector<Polynomial>& ps) const;

  /// "<g1, g2, ...>" using canonical polynomial serialization.
  std::string to_string() const;

 private:
  Ring ring_;
  std::vector<Polynomial> gens_;
};

struct PreparedBasis;

struct GroebnerBasis {
  Ring ring;
  TermOrder order;
  std::vector<Polynomial> elements;
  bool reduced = true;
  /// Integer rows used for fast repeated reduction; filled by buchberger.
  std::shared_ptr<const PreparedBasis> prepared;

  bool is_unit() const;
  std::vector<Monomial> leading_monomials() const;
};

struct GroebnerOptions {
  /// Stop as soon as a nonzero constant appears; the result is then {1}.
  bool stop_on_unit = false;
  /// Reuse and record bases in the process-wide cache.
  bool use_cache = true;
};

/// Reduced Groebner basis (monic elements) of I plus the ring relations.
GroebnerBasis buchberger(const Ideal& I, const TermOrder& o, GroebnerOptions options = {});
/// Same under plain grevlex on all ring variables.
GroebnerBasis buchberger(const Ideal& I);
/// Drops every basis recorded by earlier calls.
void clear_groebner_cache();

/// Remainder of f on division by B; zero iff f lies in the ideal of B.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& B);

bool ideal_membership(const Polynomial& f, const Ideal& I);
/// f vanishes on V(I) over the algebraic closure (Rabinowitsch).
bool radical_membership(const Polynomial& f, const Ideal& I);
/// Every generator of `small` lies in the radical of `big`.
bool radical_contains(const Ideal& big, const Ideal& small);
/// 1 lies in I (with relations), i.e. V(I) is empty.
bool contains_unit(const Ideal& I);
/// Equal as ideals (same reduced basis under the default order).
bool ideals_equal(const Ideal& I, const Ideal& J);

/// I intersected with the subring without the dropped symbols. The result
/// lives in ring().without(drop).
Ideal eliminate(const Ideal& I, const std::vector<std::string>& drop);

/// Kernel of source -> target given by images of the source symbols,
/// computed from the graph ideal plus target relations.
Ideal ring_map_kernel(const std::map<std::string, Polynomial>& images, const Ring& source,
                      const Ring& target);

/// Krull dimension of ring/I over all ring variables; -1 for the unit ideal.
int ideal_dimension(const Ideal& I);
/// Dimension of the monomial ideal generated by `lead` in the listed
/// variables (maximal independent set).
int monomial_ideal_dimension(const std::vector<Monomial>& lead,
                             const std::vector<std::size_t>& vars);

/// I : f^infinity.
Ideal saturate(const Ideal& I, const Polynomial& f);
Ideal ideal_sum(const Ideal& I, const Ideal& J);
Ideal ideal_product(const Ideal& I, const Ideal& J);
Ideal ideal_intersection(const Ideal& I, const Ideal& J);

/// Invariant checks used by tests and the acceptance suite.
bool all_spairs_reduce_to_zero(const GroebnerBasis& B);
bool is_reduced_basis(const GroebnerBasis& B);

}  // namespace famloc
