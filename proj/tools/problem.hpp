#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "famloc/action.hpp"

namespace famloc::cli {

enum class ActionKind { Explicit, Torus, GL, Trivial };

struct ActionDecl {
  std::string name;
  ActionKind kind = ActionKind::Explicit;
  /// Explicit actions only.
  std::vector<std::string> params;
  std::vector<std::string> relations;
  std::vector<Rational> identity;
  std::vector<std::pair<std::string, std::string>> forward;
  std::vector<std::pair<std::string, std::string>> inverse;

  ActionSpec spec;
};

struct IdealDecl {
  std::string name;
  /// Generator texts in canonical form; empty for orbits.
  std::vector<std::string> generators;
  /// Orbit declarations: source ideal and action names.
  std::optional<std::pair<std::string, std::string>> orbit;

  Ideal ideal;
};

struct ProblemFile {
  std::vector<std::string> params, vars, aux;
  std::vector<std::string> relations;
  std::vector<IdealDecl> ideals;
  std::vector<ActionDecl> actions;

  Ring ring;

  const IdealDecl& ideal(std::string_view name) const;
  const ActionDecl& action(std::string_view name) const;
  bool has_ideal(std::string_view name) const;
  bool has_action(std::string_view name) const;
};

/// Throws ParseError with the 1-based line and column of the problem.
ProblemFile parse_problem(std::string_view text);
/// Canonical text that parses back to an equal problem.
std::string render_problem(const ProblemFile& p);
bool operator==(const ProblemFile& a, const ProblemFile& b);

/// "1, -2, 3/4" -> rationals. Throws ParseError.
std::vector<Rational> parse_point(std::string_view text);

}  // namespace famloc::cli
