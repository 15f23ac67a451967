#pragma once

// Tiny dense SPD solver for the active-set Gram systems (n <= 3 in
// practice, but written for general small n). Cholesky without pivoting,
// explicit residual, and a 1-norm condition estimate from the explicit
// inverse -- cheap at these sizes and deterministic.

#include <vector>

namespace teich {

// Factor A = L L^T (row-major, n x n). Returns false if a pivot is
// non-positive (A not numerically SPD).
bool cholesky_factor(int n, const std::vector<double>& A, std::vector<double>& L);

// Solve L L^T x = b.
void cholesky_solve(int n, const std::vector<double>& L, const std::vector<double>& b,
                    std::vector<double>& x);

// Infinity norm of A x - b.
double residual_inf(int n, const std::vector<double>& A, const std::vector<double>& x,
                    const std::vector<double>& b);

// 1-norm condition number ||A||_1 ||A^-1||_1 with A^-1 built column by
// column from the factorization.
double condition_1norm(int n, const std::vector<double>& A, const std::vector<double>& L);

struct SpdSolveResult {
  bool ok = false;           // factorization succeeded
  std::vector<double> x;
  double residual = 0.0;     // inf-norm of A x - b
  double condition = 0.0;    // 1-norm condition estimate
};

SpdSolveResult solve_spd(int n, const std::vector<double>& A, const std::vector<double>& b);

} // namespace teich
