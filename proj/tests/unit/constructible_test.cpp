#include <doctest.h>

#include <random>

#include "famloc/constructible.hpp"
#include "test_util.hpp"

using namespace famloc;
using famloc::testing::ideal;
using famloc::testing::poly;

namespace {

Ring params() { return RingSpec::make({"s", "t"}, {}); }

std::vector<Rational> pt(long s, long t) { return {Rational(s), Rational(t)}; }

// Linear-ish generators with small integer roots, so integer sample points
// hit every kind of piece.
Polynomial random_factor(std::mt19937_64& rng, const Ring& r) {
  std::uniform_int_distribution<int> kind(0, 3), c(-2, 2);
  int a = c(rng);
  std::string as = std::to_string(a);
  switch (kind(rng)) {
    case 0: return poly(r, "s - (" + as + ")");
    case 1: return poly(r, "t - (" + as + ")");
    case 2: return poly(r, "s - t - (" + as + ")");
    default: return poly(r, "(s - (" + as + "))*(t - (" + std::to_string(c(rng)) + "))");
  }
}

ConstructibleSet random_set(std::mt19937_64& rng, const Ring& r) {
  std::uniform_int_distribution<int> npieces(0, 2), ngens(0, 2), off_kind(0, 2);
  std::vector<LocallyClosedPiece> pieces;
  int n = npieces(rng);
  for (int k = 0; k < n; ++k) {
    std::vector<Polynomial> closed, off;
    int g = ngens(rng);
    for (int i = 0; i < g; ++i) closed.push_back(random_factor(rng, r));
    int ok = off_kind(rng);
    if (ok == 0) {
      off.push_back(poly(r, "1"));
    } else {
      for (int i = 0; i < ok; ++i) off.push_back(random_factor(rng, r));
    }
    pieces.push_back({Ideal(r, closed), Ideal(r, off)});
  }
  return ConstructibleSet(r, std::move(pieces));
}

std::vector<std::vector<Rational>> grid() {
  std::vector<std::vector<Rational>> out;
  for (long s = -3; s <= 3; ++s)
    for (long t = -3; t <= 3; ++t) out.push_back(pt(s, t));
  return out;
}

}  // namespace

TEST_CASE("union") {
  auto r = params();
  auto A = ConstructibleSet::closed(ideal(r, {"s"}));
  auto E = ConstructibleSet::empty(r);
  CHECK(equals(unite(A, E), A));
  CHECK(is_empty(unite(E, E)));
  auto U = unite(A, ConstructibleSet::closed(ideal(r, {"t"})));
  CHECK(sample_membership(U, pt(0, 1)));
}

TEST_CASE("intersection") {
  auto r = params();
  auto A = ConstructibleSet::piece(ideal(r, {"t"}), ideal(r, {"s"}));
  CHECK(is_empty(intersect(A, ConstructibleSet::closed(ideal(r, {"s"})))));
  CHECK(equals(intersect(A, ConstructibleSet::full(r)), A));
  CHECK(sample_membership(intersect(A, ConstructibleSet::closed(ideal(r, {"s - 1"}))), pt(1, 0)));
}

TEST_CASE("complement") {
  auto r = params();
  CHECK(equals(complement(ConstructibleSet::empty(r)), ConstructibleSet::full(r)));
  CHECK(is_empty(complement(ConstructibleSet::full(r))));
  auto one = RingSpec::make({"t"}, {});
  CHECK(sample_membership(complement(ConstructibleSet::closed(ideal(one, {"t"}))),
                          std::vector<Rational>{Rational(1)}));
}

TEST_CASE("emptiness") {
  auto r = RingSpec::make({"x"}, {});
  CHECK(is_empty(ConstructibleSet::piece(ideal(r, {"1"}), ideal(r, {"x"}))));
  auto st = params();
  CHECK_FALSE(is_empty(ConstructibleSet::piece(ideal(st, {"t"}), ideal(st, {"s"}))));
  CHECK(is_empty(ConstructibleSet::piece(ideal(r, {"x^2"}), ideal(r, {"x"}))));
}

TEST_CASE("containment and equality") {
  auto r = params();
  auto A = ConstructibleSet::piece(ideal(r, {"t"}), ideal(r, {"s"}));
  CHECK(equals(A, A));
  CHECK(contains(ConstructibleSet::closed(ideal(r, {"t"})),
                 ConstructibleSet::closed(ideal(r, {"s", "t"}))));
  auto x = RingSpec::make({"x"}, {});
  CHECK(equals(ConstructibleSet::piece(ideal(x, {"x"}), ideal(x, {"x"})),
               ConstructibleSet::empty(x)));
}

TEST_CASE("sample membership") {
  auto r = params();
  auto A = ConstructibleSet::piece(ideal(r, {"t"}), ideal(r, {"s"}));
  CHECK(sample_membership(A, pt(1, 0)));
  CHECK_FALSE(sample_membership(A, pt(0, 0)));
  CHECK(sample_membership(ConstructibleSet::full(r), pt(5, -3)));
  CHECK_THROWS_AS(sample_membership(A, std::vector<Rational>{Rational(1)}), PreconditionError);
}

TEST_CASE("rendering") {
  auto r = params();
  CHECK(ConstructibleSet::piece(ideal(r, {"t"}), ideal(r, {"s"})).to_string() == "V(t) \\ V(s)");
  CHECK(ConstructibleSet::full(r).to_string() == "V(0)");
  CHECK(ConstructibleSet::empty(r).to_string() == "∅");
  auto u = simplify(unite(ConstructibleSet::piece(ideal(r, {"t"}), ideal(r, {"s"})),
                          ConstructibleSet::piece(ideal(r, {"s"}), ideal(r, {"t"}))));
  CHECK(u.to_string() == "(V(s) \\ V(t)) ∪ (V(t) \\ V(s))");
}

TEST_CASE("simplify keeps the set and tidies it") {
  auto r = params();
  auto A = unite(ConstructibleSet::piece(ideal(r, {"t"}), ideal(r, {"s"})),
                 ConstructibleSet::closed(ideal(r, {"s", "t"})));
  auto S = simplify(A);
  CHECK(equals(S, A));
  CHECK(S.to_string() == "V(t)");
  auto B = ConstructibleSet::piece(ideal(r, {"s^2", "t"}), ideal(r, {"s + t", "1 + s"}));
  CHECK(simplify(B).to_string() == "V(t, s^2)");
}

TEST_CASE("closure ideal") {
  auto r = params();
  auto A = ConstructibleSet::piece(ideal(r, {"s*t"}), ideal(r, {"s"}));
  CHECK(ideals_equal(closure_ideal(A), ideal(r, {"t"})));
  CHECK(contains_unit(closure_ideal(ConstructibleSet::empty(r))));
}

TEST_CASE("property: pointwise semantics of union, intersection, complement") {
  std::mt19937_64 rng(31);
  auto r = params();
  auto pts = grid();
  for (int k = 0; k < 40; ++k) {
    auto A = random_set(rng, r);
    auto B = random_set(rng, r);
    auto U = unite(A, B), I = intersect(A, B), C = complement(A), S = simplify(A);
    for (const auto& p : pts) {
      bool a = sample_membership(A, p), b = sample_membership(B, p);
      CHECK(sample_membership(U, p) == (a || b));
      CHECK(sample_membership(I, p) == (a && b));
      CHECK(sample_membership(C, p) == !a);
      CHECK(sample_membership(S, p) == a);
    }
  }
}

TEST_CASE("property: emptiness agrees with samples") {
  std::mt19937_64 rng(32);
  auto r = params();
  auto pts = grid();
  for (int k = 0; k < 60; ++k) {
    auto A = random_set(rng, r);
    bool hit = false;
    for (const auto& p : pts) hit = hit || sample_membership(A, p);
    if (is_empty(A)) CHECK_FALSE(hit);
    if (hit) CHECK_FALSE(is_empty(A));
  }
}

TEST_CASE("property: containment is reflexive and transitive") {
  std::mt19937_64 rng(33);
  auto r = params();
  for (int k = 0; k < 30; ++k) {
    auto A = random_set(rng, r);
    auto B = unite(A, random_set(rng, r));
    auto C = unite(B, random_set(rng, r));
    CHECK(contains(A, A));
    CHECK(contains(B, A));
    CHECK(contains(C, B));
    CHECK(contains(C, A));
    auto X = random_set(rng, r), Y = random_set(rng, r), Z = random_set(rng, r);
    if (contains(Y, X) && contains(Z, Y)) CHECK(contains(Z, X));
  }
}
