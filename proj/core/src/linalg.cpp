#include "teichflow/linalg.hpp"

#include <cmath>

namespace teich {

bool cholesky_factor(int n, const std::vector<double>& A, std::vector<double>& L) {
  L.assign(size_t(n) * n, 0.0);
  for (int j = 0; j < n; ++j) {
    double diag = A[size_t(j) * n + j];
    for (int k = 0; k < j; ++k) diag -= L[size_t(j) * n + k] * L[size_t(j) * n + k];
    if (!(diag > 0.0)) return false;
    double ljj = std::sqrt(diag);
    L[size_t(j) * n + j] = ljj;
    for (int i = j + 1; i < n; ++i) {
      double s = A[size_t(i) * n + j];
      for (int k = 0; k < j; ++k) s -= L[size_t(i) * n + k] * L[size_t(j) * n + k];
      L[size_t(i) * n + j] = s / ljj;
    }
  }
  return true;
}

void cholesky_solve(int n, const std::vector<double>& L, const std::vector<double>& b,
                    std::vector<double>& x) {
  std::vector<double> y(n);
  for (int i = 0; i < n; ++i) {
    double s = b[i];
    for (int k = 0; k < i; ++k) s -= L[size_t(i) * n + k] * y[k];
    y[i] = s / L[size_t(i) * n + i];
  }
  x.assign(n, 0.0);
  for (int i = n - 1; i >= 0; --i) {
    double s = y[i];
    for (int k = i + 1; k < n; ++k) s -= L[size_t(k) * n + i] * x[k];
    x[i] = s / L[size_t(i) * n + i];
  }
}

double residual_inf(int n, const std::vector<double>& A, const std::vector<double>& x,
                    const std::vector<double>& b) {
  double r = 0.0;
  for (int i = 0; i < n; ++i) {
    double s = -b[i];
    for (int j = 0; j < n; ++j) s += A[size_t(i) * n + j] * x[j];
    r = std::max(r, std::abs(s));
  }
  return r;
}

double condition_1norm(int n, const std::vector<double>& A, const std::vector<double>& L) {
  double na = 0.0;
  for (int j = 0; j < n; ++j) {
    double col = 0.0;
    for (int i = 0; i < n; ++i) col += std::abs(A[size_t(i) * n + j]);
    na = std::max(na, col);
  }
  double ni = 0.0;
  std::vector<double> e(n), col(n);
  for (int j = 0; j < n; ++j) {
    std::fill(e.begin(), e.end(), 0.0);
    e[j] = 1.0;
    cholesky_solve(n, L, e, col);
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += std::abs(col[i]);
    ni = std::max(ni, s);
  }
  return na * ni;
}

SpdSolveResult solve_spd(int n, const std::vector<double>& A, const std::vector<double>& b) {
  SpdSolveResult out;
  std::vector<double> L;
  if (!cholesky_factor(n, A, L)) return out;
  out.ok = true;
  cholesky_solve(n, L, b, out.x);
  out.residual = residual_inf(n, A, out.x, b);
  out.condition = condition_1norm(n, A, L);
  return out;
}

} // namespace teich
