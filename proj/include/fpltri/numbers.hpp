#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace fpltri {

// Exact arithmetic backend. Kept behind typedefs so the backend can be
// swapped without touching call sites.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

std::string to_string(const Int& v);
std::string to_string(const Rat& v);  // "p" or "p/q", q > 0
Rat parse_rat(const std::string& s);  // accepts "p" and "p/q"

Int binom(long long m, long long k);  // C(m,k), zero for k < 0 or m < k

// Univariate polynomial in t over Int, the coefficient ring used when t is
// kept symbolic.
class TPoly {
 public:
  TPoly() = default;
  TPoly(int v);
  TPoly(const Int& v);
  static TPoly t();

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Int coeff(int k) const;

  TPoly& operator+=(const TPoly& o);
  TPoly& operator-=(const TPoly& o);
  TPoly operator-() const;
  friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
  friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
  friend TPoly operator*(const TPoly& a, const TPoly& b);
  TPoly& operator*=(const TPoly& o);
  friend bool operator==(const TPoly& a, const TPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const TPoly& a, const TPoly& b) { return !(a == b); }

  Rat eval(const Rat& tv) const;
  std::string str() const;  // canonical "t^2-2*t+1" form, "0" when zero

 private:
  std::vector<Int> c_;  // c_[k] multiplies t^k; trailing zeros trimmed
  void trim();
};

// Uniform scalar rendering for JSON and reports.
std::string scalar_str(const Int& v);
std::string scalar_str(const Rat& v);
std::string scalar_str(const TPoly& v);

inline bool is_zero(const Int& v) { return v == 0; }
inline bool is_zero(const Rat& v) { return v == 0; }
inline bool is_zero(const TPoly& v) { return v.is_zero(); }

}  // namespace fpltri
