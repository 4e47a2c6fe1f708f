// Acceptance gate. Each numbered criterion prints exactly one PASS/FAIL line
// with its wall time; the exit code is the number of failed criteria.
#include "fixture.hpp"
#include "fpltri/bracket.hpp"
#include "fpltri/harness.hpp"
#include "fpltri/opalgebra.hpp"
#include "fpltri/tlmodel.hpp"

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

using namespace fpltri;
using harness::Report;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

int failed_total = 0;

void line(int id, const std::string& name, bool pass, double secs,
          const std::string& detail = "") {
  std::printf("%s %d %s (%.3f s)%s%s\n", pass ? "PASS" : "FAIL", id, name.c_str(), secs,
              detail.empty() ? "" : ": ", detail.c_str());
  if (!pass) ++failed_total;
}

std::string failing_checks(const Report& r) {
  std::string s;
  for (const auto& c : r.checks)
    if (!c.pass) s += (s.empty() ? "" : ", ") + c.name;
  return s;
}

// Criterion 1: the printed size-3 loop model data, reproduced in under a
// second.
void criterion_appendix_c() {
  auto start = std::chrono::steady_clock::now();
  bool ok = true;
  std::string bad;
  auto fix = fixture::load("appendix_c.json");
  auto basis = enumerate_basis(3);
  const char* names[] = {"e1", "e2", "e3", "e4", "e5", "e6"};
  for (int i = 1; i <= 6; ++i)
    if (e_matrix(i, basis) != fixture::as_matrix(fix["data"][names[i - 1]])) {
      ok = false;
      bad = names[i - 1];
    }
  if (hamiltonian(3, basis) != fixture::as_matrix(fix["data"]["hamiltonian"])) {
    ok = false;
    bad = "hamiltonian";
  }
  if (ground_state(3) != fixture::as_vector(fix["data"]["ground_state"])) {
    ok = false;
    bad = "ground_state";
  }
  double secs = seconds_since(start);
  if (secs >= 1.0) {
    ok = false;
    bad = "over time budget";
  }
  line(1, "appendix-c-reproduction", ok, secs, bad);
}

// Criterion 2: the printed size-3 bracket side data, bit exact in under ten
// seconds.
void criterion_appendix_d() {
  auto start = std::chrono::steady_clock::now();
  bool ok = true;
  std::string bad;
  auto check = [&](bool pass, const char* what) {
    if (!pass) {
      ok = false;
      bad = what;
    }
  };
  auto fix = fixture::load("appendix_d.json");
  OpContext<Int> ctx(3, Int(1));
  const auto& basis = ctx.basis();

  check(ctx.psi() == fixture::as_vector(fix["data"]["psi_upper"]), "psi");
  for (const auto& alpha : basis)
    check(ctx.bracket().a_bar_matrix(alpha) ==
              fixture::as_matrix(fix["data"]["a_bar"][alpha.str()]),
          "a_bar");
  check(ctx.a_empty() == fixture::as_matrix(fix["data"]["a_empty"]), "a_empty");
  check(ctx.p_matrix() == fixture::as_matrix(fix["data"]["p"]), "p");
  for (const auto& lambda : basis) {
    check(ctx.lr_matrix(lambda) == fixture::as_matrix(fix["data"]["lr"][lambda.str()]),
          "lr");
    check(ctx.c_matrix(lambda.partition()) ==
              fixture::as_matrix(fix["data"]["c"][lambda.str()]),
          "c");
  }
  check(ctx.big_c() == fixture::as_matrix(fix["data"]["c_total"]), "c_total");
  check(ctx.phi() == fixture::as_matrix(fix["data"]["phi"]), "phi");

  double secs = seconds_since(start);
  if (secs >= 10.0) {
    ok = false;
    bad = "over time budget";
  }
  line(2, "appendix-d-reproduction", ok, secs, bad);
}

// Criteria 3 through 8 run the harness suites at the sizes the gate fixes.
void criterion_suite(int id, const std::string& name, const Report& r, double secs,
                     double budget = 0) {
  bool ok = r.all_pass();
  std::string bad = failing_checks(r);
  if (budget > 0 && secs >= budget) {
    ok = false;
    bad += (bad.empty() ? "" : ", ") + std::string("over time budget");
  }
  line(id, name, ok, secs, bad);
}

// Criterion 9: the performance envelope, far below its ceilings on any
// commodity machine.
void criterion_performance() {
  auto start = std::chrono::steady_clock::now();
  Report all = harness::verify_all(4);
  double all_secs = seconds_since(start);

  auto t5 = std::chrono::steady_clock::now();
  BracketContext<Int> br(5, Int(1));
  auto tensor = br.a_tensor();
  double tensor_secs = seconds_since(t5);

  auto slice = br.psi_shifted(4);
  bool slice_ok = true;
  for (size_t a = 0; a < slice.size(); ++a)
    if (tensor[0][0][a] != slice[a]) slice_ok = false;

  bool ok = all.all_pass() && all_secs < 300.0 && tensor_secs < 600.0 && slice_ok;
  char buf[96];
  std::snprintf(buf, sizeof(buf), "verify all %.3f s, size-5 tensor %.3f s", all_secs,
                tensor_secs);
  std::string detail = buf;
  if (!slice_ok) detail += ", tensor slice mismatch";
  if (!all.all_pass()) detail += ", " + failing_checks(all);
  line(9, "performance-envelope", ok, all_secs + tensor_secs, detail);
}

}  // namespace

int main() {
  criterion_appendix_c();
  criterion_appendix_d();

  auto timed = [](auto&& fn) {
    auto start = std::chrono::steady_clock::now();
    Report r = fn();
    return std::make_pair(r, seconds_since(start));
  };

  {
    // The default window is [-3, n+3] per size, with the k = 0 pin at n = 3.
    auto [r, secs] = timed([] { return harness::verify_summation(4); });
    criterion_suite(3, "summation-identity", r, secs);
  }
  {
    auto [r, secs] = timed([] { return harness::verify_rs(4); });
    criterion_suite(4, "razumov-stroganov-desk-scale", r, secs, 120.0);
  }
  {
    auto [r, secs] = timed([] { return harness::verify_conjecture1(3); });
    criterion_suite(5, "triangle-conjecture-desk-scale", r, secs);
  }
  {
    auto [r, secs] = timed([] { return harness::verify_lemmas(4); });
    criterion_suite(6, "lemma-suite", r, secs);
  }
  {
    auto [r, secs] = timed([] { return harness::verify_matrices(3); });
    criterion_suite(7, "matrix-suite", r, secs);
  }
  {
    auto [r, secs] = timed([] { return harness::verify_recurrences(4); });
    criterion_suite(8, "recurrence-suite", r, secs);
  }

  criterion_performance();

  if (failed_total == 0)
    std::printf("all 9 criteria passed\n");
  else
    std::printf("%d of 9 criteria FAILED\n", failed_total);
  return failed_total;
}
