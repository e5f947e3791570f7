#pragma once

#include <span>
#include <string>
#include <vector>

#include "famloc/groebner.hpp"

namespace famloc {

/// V(closed) minus V(off). off = <1> encodes the plain closed set V(closed);
/// off with no generators is the empty piece.
struct LocallyClosedPiece {
  Ideal closed;
  Ideal off;

  const Ring& ring() const { return closed.ring(); }
  bool is_closed() const;
};

/// Finite union of locally closed pieces of a parameter space. The ring's
/// relations (if any) cut out the ambient space.
class ConstructibleSet {
 public:
  explicit ConstructibleSet(Ring ring) : ring_(std::move(ring)) {}
  ConstructibleSet(Ring ring, std::vector<LocallyClosedPiece> pieces);

  static ConstructibleSet empty(Ring ring) { return ConstructibleSet(std::move(ring)); }
  static ConstructibleSet full(Ring ring);
  /// V(I).
  static ConstructibleSet closed(const Ideal& I);
  /// Complement of V(F).
  static ConstructibleSet open(const Ideal& F);
  /// V(I) \ V(F).
  static ConstructibleSet piece(const Ideal& I, const Ideal& F);

  const Ring& ring() const { return ring_; }
  const std::vector<LocallyClosedPiece>& pieces() const { return pieces_; }

  /// "V(g1, ...) \ V(h1, ...)" pieces joined by " ∪ "; "∅" when there are no
  /// pieces.
  std::string to_string() const;

 private:
  Ring ring_;
  std::vector<LocallyClosedPiece> pieces_;
};

ConstructibleSet unite(const ConstructibleSet& A, const ConstructibleSet& B);
ConstructibleSet intersect(const ConstructibleSet& A, const ConstructibleSet& B);
ConstructibleSet complement(const ConstructibleSet& A);
ConstructibleSet difference(const ConstructibleSet& A, const ConstructibleSet& B);

bool is_empty(const LocallyClosedPiece& piece);
bool is_empty(const ConstructibleSet& A);
/// B is a subset of A.
bool contains(const ConstructibleSet& A, const ConstructibleSet& B);
bool equals(const ConstructibleSet& A, const ConstructibleSet& B);

/// Literal membership of a rational point given in parameter order.
bool sample_membership(const LocallyClosedPiece& piece, std::span<const Rational> point);
bool sample_membership(const ConstructibleSet& A, std::span<const Rational> point);

/// Same set, tidier presentation: empty pieces dropped, closed parts reduced,
/// pieces with equal closed parts merged, redundant pieces removed, sorted.
ConstructibleSet simplify(const ConstructibleSet& A);

/// Ideal of the Zariski closure (up to radical).
Ideal closure_ideal(const ConstructibleSet& A);

}  // namespace famloc
