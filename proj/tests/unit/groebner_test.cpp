#include <doctest.h>

#include <random>

#include "test_util.hpp"

using namespace famloc;
using famloc::testing::ideal;
using famloc::testing::poly;

namespace {

// Substitution oracle for the twisted cubic: (x, y, z) = (t, t^2, t^3).
bool vanishes_on_twisted_cubic(const Polynomial& p) {
  auto line = RingSpec::make({}, {"t"});
  std::map<std::string, Polynomial> images{
      {"x", poly(line, "t")}, {"y", poly(line, "t^2")}, {"z", poly(line, "t^3")}};
  return apply_map(p, images, line).is_zero();
}

}  // namespace

TEST_CASE("buchberger on the twisted cubic") {
  auto r = RingSpec::make({}, {"x", "y", "z"});
  auto I = ideal(r, {"x^2 - y", "x^3 - z"});
  auto B = buchberger(I, lex_order(*r));
  CHECK(all_spairs_reduce_to_zero(B));
  CHECK(is_reduced_basis(B));
  for (const auto& e : B.elements) CHECK(vanishes_on_twisted_cubic(e));
  CHECK(vanishes_on_twisted_cubic(poly(r, "y^3 - z^2")));
  CHECK(normal_form(poly(r, "y^3 - z^2"), B).is_zero());
  CHECK(ideal_membership(poly(r, "y^3 - z^2"), I));
}

TEST_CASE("buchberger trivial cases") {
  auto r = RingSpec::make({}, {"x", "y"});
  auto unit = buchberger(ideal(r, {"1"}));
  CHECK(unit.is_unit());
  auto dup = buchberger(ideal(r, {"x", "x"}));
  REQUIRE(dup.elements.size() == 1);
  CHECK(dup.elements[0] == poly(r, "x"));
  CHECK(buchberger(Ideal(r)).elements.empty());
  CHECK(buchberger(ideal(r, {"x*y - 1", "x"})).is_unit());
}

TEST_CASE("normal form") {
  auto r = RingSpec::make({}, {"x", "y"});
  auto B = buchberger(ideal(r, {"x^2 - y", "x*y - 1"}));
  auto f = poly(r, "x^5 + 3*x*y^2 - 7/2*y + 1");
  auto n = normal_form(f, B);
  CHECK(normal_form(n, B) == n);
  CHECK(normal_form(poly(r, "(x^2 - y)*(x + 3)"), B).is_zero());
  CHECK(ideal_membership(f - n, ideal(r, {"x^2 - y", "x*y - 1"})));
}

TEST_CASE("membership") {
  auto r = RingSpec::make({}, {"x", "y"});
  CHECK_FALSE(ideal_membership(poly(r, "x"), ideal(r, {"x^2"})));
  CHECK(ideal_membership(poly(r, "x^2"), ideal(r, {"x"})));
}

TEST_CASE("radical membership") {
  auto r = RingSpec::make({}, {"x", "y"});
  CHECK(radical_membership(poly(r, "x"), ideal(r, {"x^2"})));
  CHECK_FALSE(radical_membership(poly(r, "y"), ideal(r, {"x^2"})));
  CHECK(radical_membership(poly(r, "x + y"), ideal(r, {"x^2 + 2*x*y + y^2"})));
  CHECK(radical_membership(poly(r, "x"), ideal(r, {"1"})));
}

TEST_CASE("elimination") {
  auto r = RingSpec::make({}, {"t", "x", "y"});
  auto E = eliminate(ideal(r, {"x - t^2", "y - t^3"}), {"t"});
  REQUIRE(E.generators().size() == 1);
  const auto& g = E.generators()[0];
  CHECK(g.total_degree() == 3);
  auto line = RingSpec::make({}, {"t"});
  CHECK(apply_map(g, {{"x", poly(line, "t^2")}, {"y", poly(line, "t^3")}}, line).is_zero());
  CHECK(ideals_equal(E, ideal(E.ring(), {"y^2 - x^3"})));

  auto I = ideal(r, {"x - t^2", "y*t - 1"});
  CHECK(ideals_equal(eliminate(I, {}), I));

  auto h = RingSpec::make({}, {"t", "x"});
  CHECK(eliminate(ideal(h, {"t*x - 1"}), {"t"}).has_no_generators());
}

TEST_CASE("ring map kernels") {
  auto src = RingSpec::make({}, {"x", "y"});
  auto line = RingSpec::make({}, {"t"});
  auto K = ring_map_kernel({{"x", poly(line, "t^2")}, {"y", poly(line, "t^3")}}, src, line);
  CHECK(ideals_equal(K, ideal(src, {"y^2 - x^3"})));

  std::map<std::string, Polynomial> id{{"x", poly(src, "x")}, {"y", poly(src, "y")}};
  CHECK(ring_map_kernel(id, src, src).has_no_generators());

  // Laurent target: Y = V(t1*t2 - t3^2) in the 3-torus, monomial map t_i -> t_i.
  auto torus = RingSpec::make({}, {"t1", "t2", "t3"}, {"s1", "s2", "s3"});
  torus = torus->with_relations({poly(torus, "t1*s1 - 1"), poly(torus, "t2*s2 - 1"),
                                 poly(torus, "t3*s3 - 1")});
  auto target = torus->with_relations({poly(torus, "t1*s1 - 1"), poly(torus, "t2*s2 - 1"),
                                       poly(torus, "t3*s3 - 1"), poly(torus, "t1*t2 - t3^2")});
  auto u = RingSpec::make({}, {"t1", "t2", "t3"});
  auto J = ring_map_kernel(
      {{"t1", poly(target, "t1")}, {"t2", poly(target, "t2")}, {"t3", poly(target, "t3")}}, u,
      target);
  CHECK(ideals_equal(J, ideal(u, {"t1*t2 - t3^2"})));
}

TEST_CASE("ideal dimension") {
  auto r = RingSpec::make({}, {"x", "y", "z"});
  CHECK(ideal_dimension(ideal(r, {"x*y - z^2"})) == 2);
  CHECK(ideal_dimension(Ideal(r)) == 3);
  CHECK(ideal_dimension(ideal(r, {"1"})) == -1);
  CHECK(ideal_dimension(ideal(r, {"x - y^2", "z"})) == 1);
}

TEST_CASE("saturation") {
  auto r = RingSpec::make({}, {"x", "t"});
  CHECK(ideals_equal(saturate(ideal(r, {"x*t"}), poly(r, "t")), ideal(r, {"x"})));
  auto I = ideal(r, {"x^2 - t", "t^3"});
  CHECK(ideals_equal(saturate(I, poly(r, "1")), I));
  CHECK(ideals_equal(saturate(ideal(r, {"x^2*(x - 1)"}), poly(r, "x")), ideal(r, {"x - 1"})));
}

TEST_CASE("sum, product and intersection") {
  auto r = RingSpec::make({}, {"x", "y"});
  CHECK(ideals_equal(ideal_intersection(ideal(r, {"x"}), ideal(r, {"y"})), ideal(r, {"x*y"})));
  auto I = ideal(r, {"x^2 - y"});
  CHECK(ideals_equal(ideal_sum(I, Ideal(r)), I));
  CHECK(ideals_equal(ideal_product(ideal(r, {"x"}), ideal(r, {"x"})), ideal(r, {"x^2"})));
}

TEST_CASE("relations are part of every ideal") {
  auto r = RingSpec::make({}, {"t"}, {"s"});
  r = r->with_relations({poly(r, "t*s - 1")});
  CHECK(ideal_membership(poly(r, "2*s - 1"), ideal(r, {"t - 2"})));
  CHECK_FALSE(ideal_membership(poly(r, "t*s"), ideal(r, {"t - 2"})));
  CHECK(contains_unit(ideal(r, {"t"})));
}

TEST_CASE("property: every basis passes the S-pair check") {
  std::mt19937_64 rng(21);
  auto r = RingSpec::make({}, {"x", "y", "z"});
  std::vector<TermOrder> orders{grevlex_order(*r), lex_order(*r)};
  for (int k = 0; k < 40; ++k) {
    std::vector<Polynomial> gens;
    for (int g = 0; g < 3; ++g) gens.push_back(famloc::testing::random_poly(rng, r, {0, 1, 2}, 2, 3));
    for (const auto& o : orders) {
      auto B = buchberger(Ideal(r, gens), o);
      CHECK(all_spairs_reduce_to_zero(B));
      CHECK(is_reduced_basis(B));
      for (const auto& g : gens) CHECK(normal_form(g, B).is_zero());
    }
  }
}

TEST_CASE("property: normal form zero iff adding f leaves the basis unchanged") {
  std::mt19937_64 rng(22);
  auto r = RingSpec::make({}, {"x", "y"});
  for (int k = 0; k < 60; ++k) {
    std::vector<Polynomial> gens{famloc::testing::random_poly(rng, r, {0, 1}, 2, 3),
                                 famloc::testing::random_poly(rng, r, {0, 1}, 2, 3)};
    Ideal I(r, gens);
    auto B = buchberger(I);
    Polynomial f = (k % 2 == 0) ? famloc::testing::random_poly(rng, r, {0, 1}, 2, 2) * gens[0] +
                                      famloc::testing::random_poly(rng, r, {0, 1}, 1, 2) * gens[1]
                                : famloc::testing::random_poly(rng, r, {0, 1}, 2, 3);
    auto B2 = buchberger(I.with(f));
    bool same = B.elements.size() == B2.elements.size();
    for (std::size_t i = 0; same && i < B.elements.size(); ++i)
      same = B.elements[i] == B2.elements[i];
    CHECK(normal_form(f, B).is_zero() == same);
  }
}

TEST_CASE("property: eliminate drops symbols and stays inside the ideal") {
  std::mt19937_64 rng(23);
  auto r = RingSpec::make({}, {"t", "x", "y"});
  for (int k = 0; k < 25; ++k) {
    std::vector<Polynomial> gens{famloc::testing::random_poly(rng, r, {0, 1, 2}, 2, 3),
                                 famloc::testing::random_poly(rng, r, {0, 1, 2}, 2, 3)};
    Ideal I(r, gens);
    auto E = eliminate(I, {"t"});
    for (const auto& g : E.generators()) {
      CHECK_FALSE(g.ring()->index_of("t").has_value());
      CHECK(ideal_membership(embed(g, r), I));
    }
  }
}

TEST_CASE("property: radical and ideal membership agree for squarefree univariate generators") {
  std::mt19937_64 rng(24);
  std::uniform_int_distribution<int> root(-4, 4);
  auto r = RingSpec::make({}, {"x", "y"});
  for (int k = 0; k < 40; ++k) {
    int a = root(rng), b = root(rng), c = root(rng);
    if (a == b) b = a + 1;
    auto I = Ideal(r, {poly(r, "(x - " + std::to_string(a) + ")*(x - " + std::to_string(b) + ")"),
                       poly(r, "y - " + std::to_string(c))});
    auto f = famloc::testing::random_poly(rng, r, {0, 1}, 2, 3);
    CHECK(radical_membership(f, I) == ideal_membership(f, I));
  }
}

TEST_CASE("property: monomial ideal dimension matches brute force") {
  std::mt19937_64 rng(25);
  std::uniform_int_distribution<std::uint32_t> e(0, 2);
  std::uniform_int_distribution<int> nv(1, 6), ng(0, 4);
  for (int k = 0; k < 200; ++k) {
    std::size_t n = static_cast<std::size_t>(nv(rng));
    std::vector<Monomial> lead;
    int count = ng(rng);
    for (int g = 0; g < count; ++g) {
      Monomial m(n);
      for (std::size_t i = 0; i < n; ++i) m.set(i, e(rng));
      lead.push_back(m);
    }
    std::vector<std::size_t> vars(n);
    for (std::size_t i = 0; i < n; ++i) vars[i] = i;
    int brute = -1;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      bool independent = true;
      for (const auto& m : lead) {
        bool inside = true;
        for (std::size_t i = 0; i < n; ++i)
          if (m[i] > 0 && !(mask & (1u << i))) inside = false;
        if (inside) independent = false;
      }
      if (independent) brute = std::max(brute, __builtin_popcount(mask));
    }
    CHECK(monomial_ideal_dimension(lead, vars) == brute);
  }
}
