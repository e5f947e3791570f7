#pragma once

#include <string>
#include <vector>

namespace famloc::testing {

struct ParametricCase {
  std::vector<std::string> params;
  std::vector<std::string> vars;
  std::vector<std::string> gens;
};

// Parametric ideals with at most 3 parameters and 4 variables.
inline const std::vector<ParametricCase>& cgs_corpus() {
  static const std::vector<ParametricCase> corpus{
      {{"c"}, {"x"}, {"c*x - 1"}},
      {{"c"}, {"x", "y"}, {"x^2 + c*x*y + y^2"}},
      {{"a", "b"}, {"x", "y"}, {"a*x + b*y", "x*y - 1"}},
      {{"a", "b"}, {"x", "y"}, {"a*x^2 + b", "b*y - a"}},
      {{"s", "t"}, {"x"}, {"s*x - t"}},
      {{"a"}, {"x", "y"}, {"x^2 - a*y", "a*x*y - 1"}},
      {{"a", "b", "c"}, {"x"}, {"a*x^2 + b*x + c"}},
      {{"a", "b"}, {"x", "y", "z"}, {"x - a*y", "y - b*z", "x*z - 1"}},
      {{"a"}, {"x", "y"}, {"x*y - a", "x^2 - y^2"}},
      {{"a", "b"}, {"x", "y"}, {"a*x*y + b*x", "b*y^2 - a"}},
      {{"u", "v"}, {"x", "y"}, {"u*x + v*y - 1", "v*x - u*y"}},
      {{"a"}, {"x", "y", "z"}, {"x*y - z^2", "a*x - y"}},
      {{"a", "b"}, {"x", "y"}, {"x^3 - a", "y^2 - b"}},
      {{"a", "b", "c"}, {"x", "y"}, {"a*x + b*y - c", "x^2 + y^2 - 1"}},
      {{"p", "q"}, {"x", "y"}, {"x^2 + p*x + q", "y^2 + q*y + p"}},
      {{"a"}, {"x", "y", "z", "w"}, {"x*w - y*z", "a*x - z", "a*y - w"}},
      {{"a", "b"}, {"x", "y"}, {"(a - b)*x", "(a + b)*y", "x*y"}},
      {{"s"}, {"x", "y"}, {"s*x^2 + y^2 - 1", "x - s*y"}},
      {{"a", "b"}, {"x", "y", "z"}, {"a*x - b*y", "b*y - z", "x + y + z"}},
      {{"t"}, {"x", "y"}, {"t*x^2 - y", "t^2*y - x"}},
      {{"a", "b"}, {"x"}, {"(a*x - 1)*(b*x - 1)"}},
      {{"a", "b", "c"}, {"x", "y"}, {"a*x + b*y", "b*x + c*y"}},
      {{"a"}, {"x", "y"}, {"x^2 + y^2 - a", "x*y - 1"}},
      {{"a", "b"}, {"x", "y", "z"}, {"x*y - a*z", "y*z - b*x", "x*z - y"}},
      {{"c"}, {"x", "y", "z", "w"}, {"x - c*y", "y - c*z", "z - c*w", "w^2 - c"}},
  };
  return corpus;
}

}  // namespace famloc::testing
