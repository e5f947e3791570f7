#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "famloc/cgs.hpp"
#include "famloc/constructible.hpp"

namespace famloc::testing {

/// Rational points of a piece found by scanning a box of small fractions in
/// random order. Returns at most `want` points.
inline std::vector<std::vector<Rational>> points_in(const LocallyClosedPiece& piece,
                                                    std::size_t want, std::mt19937_64& rng,
                                                    int bound = 5) {
  std::size_t n = piece.ring()->nvars();
  std::vector<Rational> values;
  for (int den = 1; den <= 2; ++den)
    for (int num = -bound * den; num <= bound * den; ++num) {
      Rational v(num, den);
      v.canonicalize();
      if (std::find(values.begin(), values.end(), v) == values.end()) values.push_back(v);
    }
  std::vector<std::vector<Rational>> candidates{{}};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::vector<Rational>> next;
    for (const auto& c : candidates)
      for (const auto& v : values) {
        auto d = c;
        d.push_back(v);
        next.push_back(std::move(d));
      }
    candidates = std::move(next);
  }
  std::shuffle(candidates.begin(), candidates.end(), rng);
  std::vector<std::vector<Rational>> out;
  for (auto& c : candidates) {
    if (out.size() >= want) break;
    if (sample_membership(piece, c)) out.push_back(std::move(c));
  }
  return out;
}

inline std::vector<std::string> sorted_strings(const std::vector<Polynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  std::sort(out.begin(), out.end());
  return out;
}

/// Specialization oracle: the segment basis at each sampled point equals a
/// from-scratch reduced basis of the specialized ideal. Returns the number of
/// points checked, or -1 on the first disagreement.
inline int check_segment_specialization(const GroebnerSystem& system, const Segment& seg,
                                        std::size_t want, std::mt19937_64& rng) {
  auto pts = points_in(seg.condition, want, rng);
  Ring fiber = system.input.ring()->fiber_ring();
  TermOrder fo = fiber_order(*fiber, system.fiber_kind);
  int checked = 0;
  for (const auto& p : pts) {
    auto spec = specialize_basis(system, seg, p);
    auto direct = buchberger(specialize_ideal(system.input, p), fo);
    if (sorted_strings(spec) != sorted_strings(direct.elements)) return -1;
    ++checked;
  }
  return checked;
}

}  // namespace famloc::testing
