#pragma once

#include <vector>

#include "fpltri/combinat.hpp"
#include "fpltri/matrix.hpp"
#include "fpltri/numbers.hpp"

namespace fpltri {

// Temperley-Lieb generator e_i at loop weight 1 acting on link patterns,
// i = 1..2n with e_{2n} joining points 2n-1 and 0.
LinkPattern apply_e(int i, const LinkPattern& p);

// Matrix of e_i in the basis order: column pi holds the image, i.e.
// E(pi', pi) = 1 when e_i maps pi to pi'.
Mat<Int> e_matrix(int i, const std::vector<Diagram>& basis);

// H = sum of the 2n generators.
Mat<Int> hamiltonian(int n, const std::vector<Diagram>& basis);

// Ground state of H at eigenvalue 2n: the one-dimensional kernel of
// H - 2n, normalized to coprime positive integers.
std::vector<Int> ground_state(int n);

}  // namespace fpltri
