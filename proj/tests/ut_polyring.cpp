#include "doctest.h"

#include "fpltri/polyring.hpp"

#include <vector>

using namespace fpltri;

TEST_CASE("monomial packing round trips") {
  std::vector<int> e{0, 2, 4};
  CHECK(mono_exps(mono_of(e), 3) == e);
  CHECK(mono_total(mono_of(e)) == 6);
  CHECK(mono_exp(mono_unit(1, 5), 1) == 5);
  CHECK(mono_exp(mono_unit(1, 5), 0) == 0);
}

TEST_CASE("caps prune products above the window") {
  Caps caps = Caps::uniform(2, 1, 1);  // at most degree one, total one
  MPoly<Int> f(2);
  f.add_term(mono_of({1, 0}), Int(1));
  f.add_term(mono_of({0, 1}), Int(1));
  MPoly<Int> g = mul(f, f, caps);
  // Every product monomial has total degree two and is pruned.
  CHECK(g.terms().empty());

  Caps wide = Caps::uniform(2, 2, 4);
  MPoly<Int> h = mul(f, f, wide);
  CHECK(h.coefficient(mono_of({2, 0})) == 1);
  CHECK(h.coefficient(mono_of({1, 1})) == 2);
  CHECK(h.coefficient(mono_of({0, 2})) == 1);
}

TEST_CASE("vandermonde is the alternating staircase sum") {
  Caps caps = Caps::uniform(3, 2, 3);
  MPoly<Rat> v = vandermonde<Rat>(3, caps);
  CHECK(v.coefficient(mono_of({0, 1, 2})) == 1);
  CHECK(v.coefficient(mono_of({1, 0, 2})) == -1);
  CHECK(v.coefficient(mono_of({2, 1, 0})) == -1);
  CHECK(v.coefficient(mono_of({1, 1, 1})) == 0);

  // Swapping two variables flips the sign.
  MPoly<Rat> w = permute_vars(v, {1, 0, 2});
  w.scale(Rat(-1));
  CHECK(v == w);

  // The full antisymmetrizer reproduces it from the staircase monomial.
  MPoly<Rat> mono = MPoly<Rat>::monomial(3, mono_of({0, 1, 2}), Rat(1));
  MPoly<Rat> a = antisymmetrize(mono);
  a.scale(Rat(6));
  CHECK(a == v);
}

TEST_CASE("antisymmetrize kills symmetric monomials") {
  MPoly<Rat> mono = MPoly<Rat>::monomial(3, mono_of({1, 1, 1}), Rat(5));
  CHECK(antisymmetrize(mono).terms().empty());
}

TEST_CASE("loop weight and binomial powers expand correctly") {
  Caps caps = Caps::uniform(2, 2, 4);
  MPoly<Int> w = loop_weight<Int>(2, Int(7), caps);  // 1 + t u_1 + u_0 u_1
  CHECK(w.coefficient(mono_of({0, 0})) == 1);
  CHECK(w.coefficient(mono_of({0, 1})) == 7);
  CHECK(w.coefficient(mono_of({1, 1})) == 1);
  CHECK(w.coefficient(mono_of({1, 0})) == 0);

  MPoly<Int> p = one_plus_u_power<Int>(2, 2, caps);  // (1+u_0)^2 (1+u_1)^2
  CHECK(p.coefficient(mono_of({1, 1})) == 4);
  CHECK(p.coefficient(mono_of({2, 2})) == 1);
  CHECK(p.coefficient(mono_of({0, 2})) == 1);
  CHECK(is_symmetric(p));
  CHECK_FALSE(is_symmetric(w));
}
