#include <doctest.h>

#include <random>

#include "famloc/binomiality.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace famloc;
using famloc::testing::ideal;
using famloc::testing::poly;

namespace {

bool binomial_at(const Ideal& I, const std::vector<Rational>& p, std::size_t terms = 2) {
  Ideal f = specialize_ideal(I, p);
  auto gb = buchberger(f, fiber_order(*f.ring(), TermOrder::Kind::Grevlex));
  for (const auto& g : gb.elements)
    if (g.size() > terms) return false;
  return true;
}

const std::vector<std::string> kExample{"x*z", "z*(z - 1)", "z*(y - 2)", "x*(x - 1)",
                                        "x*(y - 1)"};

}  // namespace

TEST_CASE("binomial locus of x^2 + c*x*y + y^2") {
  auto r = RingSpec::make({"c"}, {"x", "y"});
  auto L = binomial_locus(ideal(r, {"x^2 + c*x*y + y^2"}));
  CHECK(L.to_string() == "V(c)");
}

TEST_CASE("monomial locus examples") {
  auto r = RingSpec::make({"c"}, {"x", "y"});
  CHECK(monomial_locus(ideal(r, {"x + c*y"})).to_string() == "V(c)");
  CHECK(monomial_locus(ideal(r, {"x*y"})).to_string() == "V(0)");
  CHECK(monomial_locus(ideal(r, {"x - 1"})).to_string() == "∅");
}

TEST_CASE("monomial ideals are binomial everywhere") {
  auto r = RingSpec::make({"c"}, {"x", "y"});
  CHECK(binomial_locus(ideal(r, {"x^2", "x*y^3"})).to_string() == "V(0)");
}

TEST_CASE("parameter-free example ideal is binomial but not unital") {
  auto r = RingSpec::make({}, {"x", "y", "z"});
  auto I = ideal(r, kExample);
  CHECK(binomial_locus(I).to_string() == "V(0)");
  CHECK(unital_locus(I).to_string() == "∅");
  CHECK_FALSE(is_unital(I));
  // The coordinate change y -> y + z makes it unital.
  std::map<std::string, Polynomial> shift{{"x", poly(r, "x")}, {"y", poly(r, "y + z")},
                                          {"z", poly(r, "z")}};
  std::vector<Polynomial> moved;
  for (const auto& g : I.generators()) moved.push_back(apply_map(g, shift, r));
  CHECK(is_unital_at_point(Ideal(r, moved), std::vector<Rational>{}));
}

TEST_CASE("diagonal image") {
  auto r = RingSpec::make({"s"}, {"x", "y"});
  auto D = diagonal_image(ideal(r, {"x^2*y - s*y", "x*y"}));
  const auto& T = D.ring();
  CHECK(D.generators()[0] == poly(T, "x^2*x_^2*y*y_ - s*y*y_"));
  CHECK(D.generators()[1] == poly(T, "x*x_*y*y_"));
  CHECK(diagonal_image(Ideal(r)).has_no_generators());
}

TEST_CASE("property: coideal expansion identity") {
  // D(x^a - x^b) = x^a (x'^a - x'^b) + (x^a - x^b) x'^b
  std::mt19937_64 rng(3);
  auto r = RingSpec::make({}, {"x", "y", "z"});
  auto ts = tensor_square(r);
  std::uniform_int_distribution<int> e(0, 3);
  for (int trial = 0; trial < 50; ++trial) {
    Monomial a(3), b(3);
    for (std::size_t i = 0; i < 3; ++i) {
      a.set(i, e(rng));
      b.set(i, e(rng));
    }
    auto xa = Polynomial::monomial(r, a), xb = Polynomial::monomial(r, b);
    auto f = xa - xb;
    auto lhs = apply_map(f, ts.diagonal, ts.ring);
    auto rhs = apply_map(xa, ts.first, ts.ring) * apply_map(f, ts.second, ts.ring) +
               apply_map(f, ts.first, ts.ring) * apply_map(xb, ts.second, ts.ring);
    CHECK((lhs - rhs).is_zero());
  }
}

TEST_CASE("is_unital_at_point examples") {
  auto r = RingSpec::make({}, {"x", "y"});
  std::vector<Rational> none;
  CHECK(is_unital_at_point(ideal(r, {"x*y - 1"}), none));
  CHECK_FALSE(is_unital_at_point(ideal(r, {"x + y - 1"}), none));
  CHECK(is_unital_at_point(ideal(r, {"x - 1"}), none));
}

TEST_CASE("shear orbit is unital exactly at a = 2") {
  auto r = RingSpec::make({"a"}, {"x", "y"});
  auto I = ideal(r, {"x*y + (2 - a)*y^2 - 1"});
  auto L = unital_locus(I);
  CHECK(L.to_string() == "V(a - 2)");
  for (int a : {0, 1, 2, 3})
    CHECK(is_unital_at_point(I, std::vector<Rational>{Rational(a)}) == (a == 2));
  auto closed = unital_locus_prime(I);
  CHECK(ideals_equal(closed.locus, ideal(r->param_ring(), {"a - 2"})));
}

TEST_CASE("property: binomial locus matches pointwise reduced bases") {
  std::mt19937_64 rng(17);
  auto r = RingSpec::make({"s", "t"}, {"x", "y"});
  std::vector<std::size_t> all{0, 1, 2, 3};
  for (int trial = 0; trial < 15; ++trial) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 2; ++k) gens.push_back(famloc::testing::random_poly(rng, r, all, 2, 3, 3));
    Ideal I(r, gens);
    auto B = binomial_locus(I);
    auto M = monomial_locus(I);
    auto U = unital_locus(I);
    CHECK(contains(B, M));
    std::uniform_int_distribution<int> d(-2, 2);
    for (int k = 0; k < 12; ++k) {
      std::vector<Rational> p{Rational(d(rng)), Rational(d(rng))};
      CHECK_MESSAGE(sample_membership(B, p) == binomial_at(I, p), I.to_string());
      CHECK(sample_membership(M, p) == binomial_at(I, p, 1));
      CHECK(sample_membership(U, p) == is_unital_at_point(I, p));
      if (sample_membership(U, p)) CHECK(sample_membership(B, p));
    }
  }
}
