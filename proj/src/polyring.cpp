#include "fpltri/polyring.hpp"

#include <algorithm>
#include <numeric>

namespace fpltri {

MPoly<Rat> antisymmetrize(const MPoly<Rat>& p) {
  int n = p.nvars();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  MPoly<Rat> sum(n);
  Int count = 0;
  do {
    // Parity of the permutation by counting inversions.
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inv;
    MPoly<Rat> img = permute_vars(p, perm);
    if (inv % 2) img.scale(Rat(-1));
    sum += img;
    ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  sum.scale(Rat(1) / Rat(count));
  return sum;
}

}  // namespace fpltri
