#pragma once

#include <optional>
#include <string>
#include <vector>

#include "famloc/action.hpp"
#include "famloc/binomiality.hpp"

namespace famloc {

/// Ideal of the degree-d Veronese re-embedding of Proj(R/I): the kernel of
/// the map sending one new variable to each degree-d monomial (monomials in
/// descending lex order). New variables are named `names` if given, else
/// v0, v1, ... For d = 1 and no names the original variable names are kept.
/// Throws PreconditionError for non-homogeneous I or d = 0.
Ideal veronese_ideal(const Ideal& I, unsigned d, const std::vector<std::string>& names = {});

/// Degree-d monomials in the ring's main variables, descending lex.
std::vector<Monomial> veronese_monomials(const Ring& ring, unsigned d);

enum class ToricVerdict { Toric, NotToric, LocusOnly };

struct ToricOptions {
  unsigned veronese_degree = 1;
  std::vector<std::string> names;
  DimLocusOptions dim;
  /// Largest n allowed for the GL_n orbit (n^2 + 1 group coordinates).
  std::size_t max_gl_size = 3;
  std::optional<std::vector<Rational>> point;
  unsigned witness_attempts = 64;
};

struct ToricCheckResult {
  ToricVerdict verdict;
  /// The re-embedded ideal.
  Ideal embedded;
  /// Unital locus in the GL coordinates (empty ring when the shortcut applied).
  std::optional<Ideal> locus;
  std::optional<std::vector<Rational>> witness;
  /// The embedded ideal translated by the witness; unital.
  std::optional<Ideal> transformed;
  bool low_confidence;
};

/// Decides whether some linear change of coordinates makes the re-embedded
/// ideal unital. The caller guarantees a prime ideal whose quotient is normal
/// and projectively normal in the chosen degree. Throws ResourceCapExceeded
/// when the embedding needs GL_n with n above options.max_gl_size.
ToricCheckResult projective_toric_check(const Ideal& I, const ToricOptions& options = {});

std::string to_string(ToricVerdict v);

}  // namespace famloc
