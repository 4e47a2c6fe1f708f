#include "doctest.h"

#include "fpltri/combinat.hpp"

#include <vector>

using namespace fpltri;

TEST_CASE("basis is graded by box count, catalan many diagrams") {
  auto b2 = enumerate_basis(2);
  REQUIRE(b2.size() == 2);
  CHECK(b2[0].str() == "0,1");
  CHECK(b2[1].str() == "0,2");

  auto b3 = enumerate_basis(3);
  REQUIRE(b3.size() == 5);
  CHECK(b3[0].str() == "0,1,2");
  CHECK(b3[1].str() == "0,1,3");
  CHECK(b3[2].str() == "0,2,3");
  CHECK(b3[3].str() == "0,1,4");
  CHECK(b3[4].str() == "0,2,4");
  for (size_t i = 0; i + 1 < b3.size(); ++i)
    CHECK(b3[i].boxes() <= b3[i + 1].boxes());

  for (int n = 1; n <= 6; ++n)
    CHECK(enumerate_basis(n).size() == static_cast<size_t>(catalan(n)));
  CHECK(catalan(0) == 1);
  CHECK(catalan(7) == 429);
}

TEST_CASE("partition conversions round trip") {
  Diagram d = Diagram::parse("0,2,4");
  CHECK(d.partition() == std::vector<int>({2, 1, 0}));
  CHECK(d.boxes() == 3);
  CHECK(Diagram::from_partition(3, {2, 1}) == d);
  CHECK(Diagram::staircase(3) == d);
  CHECK(Diagram::column(3, 2) == Diagram::parse("0,2,3"));
  CHECK(Diagram::empty(3) == Diagram::parse("0,1,2"));
  for (const auto& b : enumerate_basis(4))
    CHECK(Diagram::from_partition(4, b.partition()) == b);
}

TEST_CASE("transpose conjugates the partition") {
  CHECK(Diagram::parse("0,1,4").transpose() == Diagram::parse("0,2,3"));
  CHECK(Diagram::parse("0,2,3").transpose() == Diagram::parse("0,1,4"));
  CHECK(Diagram::parse("0,1,3").transpose() == Diagram::parse("0,1,3"));
  CHECK(Diagram::parse("0,2,4").transpose() == Diagram::parse("0,2,4"));
  for (const auto& d : enumerate_basis(4)) {
    CHECK(d.transpose().transpose() == d);
    CHECK(d.transpose().boxes() == d.boxes());
  }
}

TEST_CASE("containment follows componentwise partition order") {
  auto b = enumerate_basis(3);
  CHECK(b[4].contains(b[0]));
  CHECK(b[4].contains(b[2]));
  CHECK(b[4].contains(b[3]));
  CHECK_FALSE(b[2].contains(b[3]));  // column vs row, incomparable
  CHECK_FALSE(b[3].contains(b[2]));
  for (const auto& d : b) {
    CHECK(d.contains(b[0]));
    CHECK(d.contains(d));
  }
}

TEST_CASE("diagrams map to noncrossing link patterns") {
  auto basis = enumerate_basis(3);
  auto pats = basis_patterns(basis);
  REQUIRE(pats.size() == 5);
  CHECK(pats[0].str() == "(0,5)(1,4)(2,3)");
  CHECK(pats[1].str() == "(0,5)(1,2)(3,4)");
  CHECK(pats[2].str() == "(0,1)(2,5)(3,4)");
  CHECK(pats[3].str() == "(0,3)(1,2)(4,5)");
  CHECK(pats[4].str() == "(0,1)(2,3)(4,5)");
  for (size_t i = 0; i < basis.size(); ++i) {
    CHECK(pats[i].noncrossing());
    CHECK(pats[i].to_diagram() == basis[i]);
    CHECK(LinkPattern::from_diagram(basis[i]) == pats[i]);
  }
}

TEST_CASE("rotation and mirror act on patterns") {
  auto p2 = basis_patterns(enumerate_basis(2));
  CHECK(p2[0].rotate() == p2[1]);
  CHECK(p2[1].rotate() == p2[0]);

  auto p3 = basis_patterns(enumerate_basis(3));
  CHECK(p3[2].mirror() == p3[3]);  // column and row shapes swap
  CHECK(p3[3].mirror() == p3[2]);
  CHECK(p3[0].mirror() == p3[0]);

  LinkPattern q = p3[1];
  for (int i = 0; i < 6; ++i) q = q.rotate();
  CHECK(q == p3[1]);
  for (const auto& p : p3) CHECK(p.mirror().mirror() == p);
}

TEST_CASE("embedding prepends a staircase and wraps arches around") {
  CHECK(Diagram::parse("0,2,4").embed(1) == Diagram::parse("0,1,3,5"));
  CHECK(Diagram::parse("0,1").embed(1) == Diagram::parse("0,1,2"));

  auto p2 = basis_patterns(enumerate_basis(2));
  auto p3 = basis_patterns(enumerate_basis(3));
  CHECK(p2[0].embed() == p3[0]);  // nested stays nested

  // Pattern-side embedding agrees with diagram-side embedding.
  for (const auto& d : enumerate_basis(3))
    CHECK(LinkPattern::from_diagram(d).embed() == LinkPattern::from_diagram(d.embed(1)));
}

TEST_CASE("string forms parse back") {
  for (const auto& d : enumerate_basis(4)) CHECK(Diagram::parse(d.str()) == d);
  CHECK(basis_index(enumerate_basis(3), Diagram::parse("0,1,4")) == 3);
}
