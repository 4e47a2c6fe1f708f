#include "doctest.h"

#include "fpltri/fpl.hpp"
#include "fpltri/opalgebra.hpp"
#include "fpltri/tlmodel.hpp"

#include <map>
#include <vector>

using namespace fpltri;
using namespace fpltri::fpl;

TEST_CASE("square enumeration counts alternating sign matrices") {
  Int expected[] = {Int(0), Int(1), Int(2), Int(7), Int(42)};
  for (int n = 1; n <= 4; ++n) CHECK(square_total(n) == expected[n]);
}

TEST_CASE("square counts by connectivity match the loop model ground state") {
  for (int n = 1; n <= 3; ++n) {
    auto counts = enumerate_square(n);
    auto pats = basis_patterns(enumerate_basis(n));
    auto gs = ground_state(n);
    REQUIRE(counts.size() == pats.size());
    for (size_t i = 0; i < pats.size(); ++i) {
      auto it = counts.find(pats[i]);
      REQUIRE(it != counts.end());
      CHECK(it->second == gs[i]);
      CHECK(it->first.noncrossing());
    }
  }
}

TEST_CASE("square counts are invariant under boundary rotation") {
  for (int n = 2; n <= 4; ++n) {
    auto counts = enumerate_square(n);
    for (const auto& [pat, cnt] : counts) {
      auto it = counts.find(pat.rotate());
      REQUIRE(it != counts.end());
      CHECK(it->second == cnt);
    }
  }
}

TEST_CASE("triangle totals at desk scale") {
  CHECK(triangle_total(1) == 1);
  CHECK(triangle_total(2) == 5);
  CHECK(triangle_total(3) == 109);
}

TEST_CASE("smallest triangle carries empty diagrams and a single arch") {
  auto counts = enumerate_triangle(1);
  REQUIRE(counts.size() == 1);
  const auto& [key, cnt] = *counts.begin();
  CHECK(key.sigma == Diagram::empty(1));
  CHECK(key.tau == Diagram::empty(1));
  CHECK(key.pi == basis_patterns(enumerate_basis(1))[0]);
  CHECK(cnt == 1);
}

TEST_CASE("triangle boundary patterns stay noncrossing") {
  for (const auto& [key, cnt] : enumerate_triangle(3)) {
    CHECK(key.pi.noncrossing());
    CHECK(cnt > 0);
  }
}

TEST_CASE("triangle counts with empty sides match the oracle row") {
  auto counts = enumerate_triangle(3);
  auto basis = enumerate_basis(3);
  auto pats = basis_patterns(basis);
  Diagram empty = Diagram::empty(3);
  std::vector<Int> row;
  for (const auto& p : pats) {
    auto it = counts.find(TriKey{empty, empty, p});
    row.push_back(it == counts.end() ? Int(0) : it->second);
  }
  CHECK(row == std::vector<Int>({Int(1), Int(4), Int(6), Int(6), Int(17)}));
}

TEST_CASE("triangle enumeration matches the bracket tensor") {
  for (int n = 1; n <= 3; ++n) {
    auto counts = enumerate_triangle(n);
    OpContext<Int> ctx(n, Int(1));
    const auto& basis = ctx.basis();
    auto pats = basis_patterns(basis);
    auto tensor = ctx.bracket().a_tensor();
    Mat<Int> pinv = ctx.p_inverse();
    int sz = ctx.size();

    Int covered = 0;
    for (int s = 0; s < sz; ++s)
      for (int t = 0; t < sz; ++t)
        for (int p = 0; p < sz; ++p) {
          Int want = 0;
          for (int a = 0; a < sz; ++a) want += tensor[s][t][a] * pinv(a, p);
          auto it = counts.find(TriKey{basis[s], basis[t], pats[p]});
          Int got = it == counts.end() ? Int(0) : it->second;
          CHECK(got == want);
          covered += got;
        }
    // Every enumerated configuration lands in some cell.
    CHECK(covered == triangle_total(n));
  }
}
