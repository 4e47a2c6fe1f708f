#include "fpltri/tlmodel.hpp"

#include <stdexcept>

namespace fpltri {

LinkPattern apply_e(int i, const LinkPattern& p) {
  int np = p.points();
  if (i < 1 || i > np) throw std::invalid_argument("generator index out of range");
  int a = i - 1;
  int b = i % np;
  if (p.partner(a) == b) return p;
  std::vector<int> partner = p.partners();
  int pa = partner[a];
  int pb = partner[b];
  partner[a] = b;
  partner[b] = a;
  partner[pa] = pb;
  partner[pb] = pa;
  return LinkPattern(std::move(partner));
}

Mat<Int> e_matrix(int i, const std::vector<Diagram>& basis) {
  auto pats = basis_patterns(basis);
  int sz = static_cast<int>(basis.size());
  Mat<Int> m(sz, sz);
  for (int j = 0; j < sz; ++j) {
    LinkPattern img = apply_e(i, pats[j]);
    int row = basis_index(basis, img.to_diagram());
    m(row, j) += 1;
  }
  return m;
}

Mat<Int> hamiltonian(int n, const std::vector<Diagram>& basis) {
  int sz = static_cast<int>(basis.size());
  Mat<Int> h(sz, sz);
  for (int i = 1; i <= 2 * n; ++i) h = h + e_matrix(i, basis);
  return h;
}

std::vector<Int> ground_state(int n) {
  auto basis = enumerate_basis(n);
  Mat<Int> h = hamiltonian(n, basis);
  Mat<Rat> m = convert_mat<Int, Rat>(h);
  for (int i = 0; i < m.rows(); ++i) m(i, i) -= Rat(2 * n);
  return nullspace_vector(m);
}

}  // namespace fpltri
