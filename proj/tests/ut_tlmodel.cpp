#include "doctest.h"

#include "fixture.hpp"
#include "fpltri/tlmodel.hpp"

#include <vector>

using namespace fpltri;

TEST_CASE("generator matrices match the committed tables") {
  auto basis = enumerate_basis(3);
  auto fix = fixture::load("appendix_c.json");
  const char* names[] = {"e1", "e2", "e3", "e4", "e5", "e6"};
  for (int i = 1; i <= 6; ++i)
    CHECK(e_matrix(i, basis) == fixture::as_matrix(fix["data"][names[i - 1]]));
}

TEST_CASE("generators are idempotent at loop weight one") {
  auto basis = enumerate_basis(3);
  for (int i = 1; i <= 6; ++i) {
    Mat<Int> e = e_matrix(i, basis);
    CHECK(e * e == e);
  }
}

TEST_CASE("hamiltonian is the generator sum and matches the table") {
  auto basis = enumerate_basis(3);
  auto fix = fixture::load("appendix_c.json");
  Mat<Int> h = hamiltonian(3, basis);
  CHECK(h == fixture::as_matrix(fix["data"]["hamiltonian"]));

  Mat<Int> sum(5, 5);
  for (int i = 1; i <= 6; ++i) sum = sum + e_matrix(i, basis);
  CHECK(h == sum);
}

TEST_CASE("ground state is the normalized perron frobenius vector") {
  auto fix = fixture::load("appendix_c.json");
  auto gs3 = ground_state(3);
  CHECK(gs3 == fixture::as_vector(fix["data"]["ground_state"]));
  CHECK(ground_state(1) == std::vector<Int>({Int(1)}));
  CHECK(ground_state(2) == std::vector<Int>({Int(1), Int(1)}));

  // Eigenvector of H with eigenvalue 2n, all entries positive.
  for (int n = 2; n <= 4; ++n) {
    auto basis = enumerate_basis(n);
    auto gs = ground_state(n);
    auto image = hamiltonian(n, basis).apply(gs);
    for (size_t i = 0; i < gs.size(); ++i) {
      CHECK(gs[i] > 0);
      CHECK(image[i] == Int(2 * n) * gs[i]);
    }
  }
}

TEST_CASE("total ground state weight counts alternating sign matrices") {
  Int expected[] = {Int(1), Int(1), Int(2), Int(7), Int(42), Int(429)};
  for (int n = 1; n <= 5; ++n) {
    Int total = 0;
    for (const auto& v : ground_state(n)) total += v;
    CHECK(total == expected[n]);
  }
}

TEST_CASE("generator action joins neighbouring points") {
  auto basis = enumerate_basis(2);
  auto pats = basis_patterns(basis);
  // e_1 joins points 0 and 1: the nested pattern maps to the side by side one.
  CHECK(apply_e(1, pats[0]) == pats[1]);
  CHECK(apply_e(1, pats[1]) == pats[1]);
}
