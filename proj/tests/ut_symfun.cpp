#include "doctest.h"

#include "fixture.hpp"
#include "fpltri/symfun.hpp"

#include <vector>

using namespace fpltri;

TEST_CASE("schur polynomials match tableau expansions") {
  Caps caps = Caps::uniform(2, 2, 4);
  MPoly<Int> box = schur<Int>(Diagram::parse("0,2"), caps);  // u_0 + u_1
  CHECK(box.coefficient(mono_of({1, 0})) == 1);
  CHECK(box.coefficient(mono_of({0, 1})) == 1);
  CHECK(box.coefficient(mono_of({1, 1})) == 0);

  // Shapes outside the staircase go through the raw partition entry point.
  const MPoly<Int>& row2 = schur_poly({2}, 2, caps);
  CHECK(row2.coefficient(mono_of({2, 0})) == 1);
  CHECK(row2.coefficient(mono_of({1, 1})) == 1);
  CHECK(row2.coefficient(mono_of({0, 2})) == 1);

  const MPoly<Int>& col2 = schur_poly({1, 1}, 2, caps);
  CHECK(col2.coefficient(mono_of({1, 1})) == 1);
  CHECK(col2.coefficient(mono_of({2, 0})) == 0);
  CHECK(is_symmetric(row2));
}

TEST_CASE("littlewood richardson coefficients satisfy pieri examples") {
  Diagram empty = Diagram::parse("0,1,2");
  Diagram ya = Diagram::parse("0,1,3");
  Diagram yb = Diagram::parse("0,2,3");
  Diagram yc = Diagram::parse("0,1,4");
  Diagram yd = Diagram::parse("0,2,4");

  // s_box * s_box = s_row + s_column
  CHECK(lr_coefficient(ya, ya, yc) == 1);
  CHECK(lr_coefficient(ya, ya, yb) == 1);
  CHECK(lr_coefficient(ya, ya, ya) == 0);
  CHECK(lr_coefficient(ya, ya, yd) == 0);

  // s_box * s_column and s_box * s_row both contain the staircase once
  CHECK(lr_coefficient(ya, yb, yd) == 1);
  CHECK(lr_coefficient(ya, yc, yd) == 1);

  for (const auto& d : enumerate_basis(3)) {
    CHECK(lr_coefficient(empty, d, d) == 1);
    CHECK(lr_coefficient(d, empty, d) == 1);
  }
}

TEST_CASE("schur expansion inverts schur construction") {
  auto basis = enumerate_basis(3);
  Caps caps = Caps::staircase(3);
  for (size_t j = 0; j < basis.size(); ++j) {
    auto coeffs = schur_expand(schur<Int>(basis[j], caps), basis);
    for (size_t i = 0; i < basis.size(); ++i)
      CHECK(coeffs[i] == (i == j ? 1 : 0));
  }

  // Product expansion agrees with the LR coefficients inside the window.
  MPoly<Int> prod = mul(schur<Int>(basis[1], caps), schur<Int>(basis[1], caps), caps);
  auto coeffs = schur_expand(prod, basis);
  for (size_t i = 0; i < basis.size(); ++i)
    CHECK(coeffs[i] == lr_coefficient(basis[1], basis[1], basis[i]));
}

TEST_CASE("hook content product evaluates the classical formulas") {
  Diagram ya = Diagram::parse("0,1,3");
  Diagram yb = Diagram::parse("0,2,3");
  Diagram yc = Diagram::parse("0,1,4");
  Diagram yd = Diagram::parse("0,2,4");
  Rat x(5);
  CHECK(hook_content(ya, x) == x);
  CHECK(hook_content(yc, x) == x * (x + 1) / 2);
  CHECK(hook_content(yb, x) == x * (x - 1) / 2);
  CHECK(hook_content(yd, x) == (x - 1) * x * (x + 1) / 3);

  // Transposed diagrams evaluated at -2, the reduction vector at k = 0.
  std::vector<Rat> v;
  for (const auto& d : enumerate_basis(3)) v.push_back(hook_content(d.transpose(), Rat(-2)));
  CHECK(v == std::vector<Rat>({Rat(1), Rat(-2), Rat(1), Rat(3), Rat(-2)}));
}

TEST_CASE("involution matrix matches the committed fixture and squares to one") {
  auto basis = enumerate_basis(3);
  Mat<Int> phi = involution_matrix<Int>(3, Int(1), basis);
  auto fix = fixture::load("appendix_d.json");
  CHECK(phi == fixture::as_matrix(fix["data"]["phi"]));

  Mat<TPoly> phi_t = involution_matrix<TPoly>(3, TPoly::t(), enumerate_basis(3));
  CHECK(phi_t * phi_t == Mat<TPoly>::identity(5));
}

TEST_CASE("tilde schur leads with the transpose") {
  auto basis = enumerate_basis(3);
  Caps caps = Caps::staircase(3);
  for (const auto& d : basis) {
    auto col = schur_expand(tilde_schur(d, Int(1), caps), basis);
    for (size_t i = 0; i < basis.size(); ++i) {
      if (basis[i] == d.transpose())
        CHECK(col[i] == 1);
      else if (!basis[i].contains(d.transpose()))
        CHECK(col[i] == 0);
    }
  }
}
