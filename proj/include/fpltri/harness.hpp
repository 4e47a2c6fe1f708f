#pragma once

#include <string>
#include <vector>

namespace fpltri::harness {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

struct Report {
  std::vector<Check> checks;

  void add(const std::string& name, bool pass, const std::string& detail = "");
  void merge(const Report& other);
  bool all_pass() const;
  int failures() const;
};

// Ground state entries match the square grid counts classwise and in total.
Report verify_rs(int nmax);

// Triangle counts match the bracket tensor pushed through the change of
// basis, with the pinned small-size tables as prerequisites.
Report verify_conjecture1(int nmax);

// The two-parameter summation identity over the content-hook evaluations,
// for every basis sequence, m = 0..2 and k in [-3, n+3].
Report verify_summation(int nmax);

// Same identity over an explicit k window shared by all sizes.
Report verify_summation(int nmax, int k_lo, int k_hi);

// Degree, support and equality-case properties of the A values, plus the
// involution and intertwining identities.
Report verify_lemmas(int nmax);

// Operator identities: the change of basis, K columns, the two c_z routes,
// the reflection operator and the Jacobi-Trudi determinant.
Report verify_matrices(int nmax);

// Size and shift recurrences at t = 1 and the closed recursion at rational t.
Report verify_recurrences(int nmax);

Report verify_all(int nmax);

// Render as one line per check, "PASS name" or "FAIL name detail".
std::string render(const Report& report);

}  // namespace fpltri::harness
