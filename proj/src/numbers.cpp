#include "fpltri/numbers.hpp"

#include <sstream>
#include <stdexcept>

namespace fpltri {

std::string to_string(const Int& v) { return v.str(); }

std::string to_string(const Rat& v) {
  Int num = boost::multiprecision::numerator(v);
  Int den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(Int(s));
  Int num(s.substr(0, slash));
  Int den(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("rational with zero denominator: " + s);
  return Rat(num) / Rat(den);
}

Int binom(long long m, long long k) {
  if (k < 0) return 0;
  if (k == 0) return 1;  // holds for every m, negative included
  if (m < k) return 0;
  k = std::min(k, m - k);
  Int r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= (m - k + i);
    r /= i;
  }
  return r;
}

TPoly::TPoly(int v) {
  if (v != 0) c_.push_back(Int(v));
}

TPoly::TPoly(const Int& v) {
  if (v != 0) c_.push_back(v);
}

TPoly TPoly::t() {
  TPoly p;
  p.c_ = {Int(0), Int(1)};
  return p;
}

Int TPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
  return c_[k];
}

void TPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

TPoly& TPoly::operator+=(const TPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

TPoly& TPoly::operator-=(const TPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

TPoly TPoly::operator-() const {
  TPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

TPoly operator*(const TPoly& a, const TPoly& b) {
  TPoly r;
  if (a.c_.empty() || b.c_.empty()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Int(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  r.trim();
  return r;
}

TPoly& TPoly::operator*=(const TPoly& o) {
  *this = *this * o;
  return *this;
}

Rat TPoly::eval(const Rat& tv) const {
  Rat r = 0;
  for (size_t i = c_.size(); i-- > 0;) r = r * tv + Rat(c_[i]);
  return r;
}

std::string TPoly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (size_t i = c_.size(); i-- > 0;) {
    const Int& c = c_[i];
    if (c == 0) continue;
    Int a = boost::multiprecision::abs(c);
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? "-" : "+");
    }
    if (i == 0) {
      out << a.str();
    } else {
      if (a != 1) out << a.str() << "*";
      out << "t";
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

std::string scalar_str(const Int& v) { return v.str(); }
std::string scalar_str(const Rat& v) { return to_string(v); }
std::string scalar_str(const TPoly& v) { return v.str(); }

}  // namespace fpltri
