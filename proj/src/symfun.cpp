#include "fpltri/symfun.hpp"

#include <algorithm>
#include <map>

namespace fpltri {

namespace {

struct SchurKey {
  std::vector<int> lambda;
  int nvars;
  std::array<int, kMaxVars> var;
  int total;
  bool operator<(const SchurKey& o) const {
    if (lambda != o.lambda) return lambda < o.lambda;
    if (nvars != o.nvars) return nvars < o.nvars;
    if (var != o.var) return var < o.var;
    return total < o.total;
  }
};

// Fill the shape cell by cell in row-major order: weakly increasing along
// rows, strictly increasing down columns, entries in 1..m. Exponents only
// grow, so cap violations prune the branch.
void ssyt_fill(const std::vector<int>& lambda, int m, const Caps& caps, int r, int c,
               std::vector<std::vector<int>>& tab, std::vector<int>& count, int total,
               MPoly<Int>& out) {
  if (r == static_cast<int>(lambda.size())) {
    Mono mono = 0;
    for (int v = 0; v < m; ++v) mono |= mono_unit(v, count[v]);
    out.add_term(mono, Int(1));
    return;
  }
  if (c == lambda[r]) {
    ssyt_fill(lambda, m, caps, r + 1, 0, tab, count, total, out);
    return;
  }
  int lo = 1;
  if (c > 0) lo = std::max(lo, tab[r][c - 1]);
  if (r > 0) lo = std::max(lo, tab[r - 1][c] + 1);
  if (caps.total >= 0 && total + 1 > caps.total) return;
  for (int v = lo; v <= m; ++v) {
    if (count[v - 1] + 1 > caps.var[v - 1]) continue;
    tab[r][c] = v;
    ++count[v - 1];
    ssyt_fill(lambda, m, caps, r, c + 1, tab, count, total + 1, out);
    --count[v - 1];
  }
}

}  // namespace

const MPoly<Int>& schur_poly(const std::vector<int>& lambda_in, int nvars, const Caps& caps) {
  std::vector<int> lambda = lambda_in;
  while (!lambda.empty() && lambda.back() == 0) lambda.pop_back();

  static std::map<SchurKey, MPoly<Int>> cache;
  SchurKey key{lambda, nvars, caps.var, caps.total};
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  MPoly<Int> p(nvars);
  if (static_cast<int>(lambda.size()) <= nvars) {
    std::vector<std::vector<int>> tab;
    for (int part : lambda) tab.emplace_back(part, 0);
    std::vector<int> count(nvars, 0);
    ssyt_fill(lambda, nvars, caps, 0, 0, tab, count, 0, p);
  }
  return cache.emplace(std::move(key), std::move(p)).first->second;
}

Int lr_coefficient(const Diagram& sigma, const Diagram& tau, const Diagram& rho) {
  int n = sigma.n();
  if (tau.n() != n || rho.n() != n) throw std::invalid_argument("size mismatch");
  Caps caps = Caps::staircase(n);
  const MPoly<Int>& s = schur_poly(sigma.partition(), n, caps);
  const auto& rs = rho.seq();

  std::vector<int> perm = tau.seq();
  std::sort(perm.begin(), perm.end());
  Int total = 0;
  do {
    std::vector<int> want(n);
    bool valid = true;
    for (int i = 0; i < n && valid; ++i) {
      want[i] = rs[i] - perm[i];
      if (want[i] < 0) valid = false;
    }
    if (!valid) continue;
    Int c = s.coefficient(mono_of(want));
    if (c == 0) continue;
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inv;
    total += (inv % 2 == 0) ? c : -c;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

Rat hook_content(const Diagram& sigma, const Rat& x) {
  std::vector<int> lambda = sigma.partition();
  std::vector<int> conj = sigma.transpose().partition();
  Rat r = 1;
  for (size_t i = 0; i < lambda.size(); ++i)
    for (int j = 0; j < lambda[i]; ++j) {
      int content = j - static_cast<int>(i);
      int hook = lambda[i] + conj[j] - static_cast<int>(i) - j - 1;
      r *= (Rat(content) + x) / Rat(hook);
    }
  return r;
}

}  // namespace fpltri
