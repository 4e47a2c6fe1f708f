#include "doctest.h"

#include "fixture.hpp"
#include "fpltri/bracket.hpp"

#include <vector>

using namespace fpltri;

TEST_CASE("psi at size two is one and t") {
  BracketContext<TPoly> br(2, TPoly::t());
  auto psi = br.psi_vector();
  REQUIRE(psi.size() == 2);
  CHECK(psi[0] == TPoly(1));
  CHECK(psi[1] == TPoly::t());
}

TEST_CASE("psi at size three matches the committed vector") {
  BracketContext<Int> br(3, Int(1));
  auto psi = br.psi_vector();
  auto fix = fixture::load("appendix_d.json");
  CHECK(psi == fixture::as_vector(fix["data"]["psi_upper"]));
  CHECK(br.psi_shifted(0) == psi);
}

TEST_CASE("symbolic psi specializes to every rational sample") {
  BracketContext<TPoly> sym(3, TPoly::t());
  auto psi_t = sym.psi_vector();
  for (const Rat& tv : {Rat(1), Rat(0), Rat(2), Rat(1) / 2}) {
    BracketContext<Rat> num(3, tv);
    auto psi_n = num.psi_vector();
    for (size_t i = 0; i < psi_t.size(); ++i) CHECK(psi_t[i].eval(tv) == psi_n[i]);
  }
}

TEST_CASE("a bar matrices reproduce the committed tables") {
  BracketContext<Int> br(3, Int(1));
  auto fix = fixture::load("appendix_d.json");
  for (const auto& alpha : br.basis()) {
    Mat<Int> found = br.a_bar_matrix(alpha);
    CHECK(found == fixture::as_matrix(fix["data"]["a_bar"][alpha.str()]));
  }
}

TEST_CASE("a matrix of the empty diagram reproduces the committed table") {
  BracketContext<Int> br(3, Int(1));
  auto fix = fixture::load("appendix_d.json");
  CHECK(br.a_matrix(Diagram::empty(3)) == fixture::as_matrix(fix["data"]["a_empty"]));
}

TEST_CASE("tensor slices agree with the matrix views") {
  BracketContext<Int> br(3, Int(1));
  auto tensor = br.a_tensor();
  const auto& basis = br.basis();
  int sz = static_cast<int>(basis.size());
  for (int a : {0, 4}) {
    Mat<Int> bar = br.a_bar_matrix(basis[a]);
    for (int i = 0; i < sz; ++i)
      for (int j = 0; j < sz; ++j) CHECK(tensor[i][j][a] == bar(i, j));
  }
}

TEST_CASE("bracket of one extracts psi components") {
  BracketContext<Int> br(3, Int(1));
  MPoly<Int> one = MPoly<Int>::constant(3, Int(1));
  CHECK(br.bracket(one, br.basis()[0].seq()) == 1);
  CHECK(br.bracket(one, br.basis()[4].seq()) == 2);
}

TEST_CASE("extended extraction rejects negative exponents") {
  BracketContext<Int> br(2, Int(1));
  CHECK(br.compute_A_ext(Diagram::empty(2), {-1, 2}) == 0);
  // On a basis sequence it reduces to the empty-tilde column of A.
  CHECK(br.compute_A_ext(Diagram::empty(2), {0, 2}) ==
        br.compute_A(Diagram::empty(2), Diagram::parse("0,2"), Diagram::empty(2)));
}

TEST_CASE("closed form for the staircase matches the largest a bar table") {
  auto basis = enumerate_basis(3);
  auto fix = fixture::load("appendix_d.json");
  Mat<Int> want = fixture::as_matrix(fix["data"]["a_bar"]["0,2,4"]);
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = 0; j < basis.size(); ++j)
      CHECK(compute_A_largest(basis[i], basis[j]) ==
            want(static_cast<int>(i), static_cast<int>(j)));
}
