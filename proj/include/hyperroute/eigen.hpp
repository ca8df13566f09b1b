#pragma once

#include <vector>

namespace hyperroute {

/// Eigenvalues of a dense symmetric matrix (row-major n*n), sorted
/// descending. Householder tridiagonalization followed by implicit-shift
/// QL, eigenvalues only. The input buffer is consumed as workspace.
std::vector<double> symmetric_eigenvalues(std::vector<double> a, int n);

/// Cyclic Jacobi rotation eigensolver. Much slower than
/// symmetric_eigenvalues; kept as an independent cross-check oracle.
std::vector<double> jacobi_eigenvalues(std::vector<double> a, int n);

}  // namespace hyperroute
