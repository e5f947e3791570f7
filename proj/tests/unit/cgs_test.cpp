#include <doctest.h>

#include <random>

#include "cgs_corpus.hpp"
#include "famloc/cgs.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace famloc;
using famloc::testing::ideal;
using famloc::testing::poly;

TEST_CASE("c*x - 1 splits at c = 0") {
  auto r = RingSpec::make({"c"}, {"x"});
  auto sys = relative_reduced_gb(ideal(r, {"c*x - 1"}));
  REQUIRE(sys.segments.size() == 2);
  auto pr = r->param_ring();
  CHECK(equals(sys.cover(), ConstructibleSet::full(pr)));
  std::vector<Rational> one{Rational(1)}, zero{Rational(0)}, two{Rational(2)};
  for (const auto& seg : sys.segments) {
    if (sample_membership(seg.condition, zero)) {
      REQUIRE(seg.basis.size() == 1);
      CHECK(seg.basis[0] == poly(r, "1"));
    } else {
      REQUIRE(seg.basis.size() == 1);
      CHECK(seg.basis[0] == poly(r, "c*x - 1"));
      auto fiber = r->fiber_ring();
      CHECK(specialize_basis(sys, seg, one)[0] == poly(fiber, "x - 1"));
      CHECK(specialize_basis(sys, seg, two)[0] == poly(fiber, "x - 1/2"));
      CHECK_THROWS_AS(specialize_basis(sys, seg, zero), PreconditionError);
    }
  }
}

TEST_CASE("parameter-free ideal gives one segment") {
  auto r = RingSpec::make({"c"}, {"x", "y"});
  auto I = ideal(r, {"x^2 - y", "x*y - 1"});
  auto sys = relative_reduced_gb(I);
  REQUIRE(sys.segments.size() == 1);
  CHECK(equals(sys.cover(), ConstructibleSet::full(r->param_ring())));
  auto direct = buchberger(I, sys.order);
  CHECK(famloc::testing::sorted_strings(sys.segments[0].basis) ==
        famloc::testing::sorted_strings(direct.elements));
  auto fiber = r->fiber_ring();
  auto spec = specialize_basis(sys, sys.segments[0], std::vector<Rational>{Rational(3)});
  auto fiber_basis = buchberger(specialize_ideal(I, std::vector<Rational>{Rational(3)}),
                                fiber_order(*fiber, TermOrder::Kind::Grevlex));
  CHECK(famloc::testing::sorted_strings(spec) ==
        famloc::testing::sorted_strings(fiber_basis.elements));
}

TEST_CASE("monic generator never branches") {
  auto r = RingSpec::make({"c"}, {"x", "y"});
  auto sys = relative_reduced_gb(ideal(r, {"x^2 + c*x*y + y^2"}));
  REQUIRE(sys.segments.size() == 1);
  CHECK(sys.segments[0].basis[0] == poly(r, "x^2 + c*x*y + y^2"));
  CHECK(sys.segments[0].condition.is_closed());
}

TEST_CASE("recorded leading coefficients do not vanish on their segments") {
  auto r = RingSpec::make({"a", "b"}, {"x", "y"});
  auto sys = relative_reduced_gb(ideal(r, {"a*x + b*y", "x*y - 1"}));
  for (const auto& seg : sys.segments) {
    CHECK_FALSE(is_empty(seg.condition));
    for (const auto& lc : seg.leading_coefficients)
      CHECK_FALSE(radical_membership(lc, seg.condition.closed));
  }
}

TEST_CASE("branch depth cap is reported") {
  auto r = RingSpec::make({"a", "b"}, {"x"});
  CgsOptions options;
  options.max_branch_depth = 0;
  CHECK_THROWS_AS(relative_reduced_gb(ideal(r, {"(a*x - 1)*(b*x - 1)"}),
                                      TermOrder::Kind::Grevlex, options),
                  ResourceCapExceeded);
}

TEST_CASE("property: corpus systems cover and specialize soundly") {
  std::mt19937_64 rng(41);
  const auto& corpus = famloc::testing::cgs_corpus();
  for (std::size_t k = 0; k < corpus.size(); k += 1) {
    const auto& c = corpus[k];
    auto r = RingSpec::make(c.params, c.vars);
    std::vector<Polynomial> gens;
    for (const auto& g : c.gens) gens.push_back(poly(r, g));
    for (auto kind : {TermOrder::Kind::Grevlex, TermOrder::Kind::Lex}) {
      auto sys = relative_reduced_gb(Ideal(r, gens), kind);
      CAPTURE(k);
      CHECK(equals(sys.cover(), ConstructibleSet::full(r->param_ring())));
      for (const auto& seg : sys.segments)
        CHECK(famloc::testing::check_segment_specialization(sys, seg, 8, rng) >= 0);
    }
  }
}
