#pragma once

// Floating-point adjacency spectrum, used as an independent cross-check of
// the exact spectral computations.

#include <algorithm>
#include <cmath>
#include <functional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "drg/error.hpp"
#include "drg/graph.hpp"

namespace drg {

inline constexpr int kMaxNumericSpectrum = 5000;

/// Adjacency eigenvalues in decreasing order.
inline std::vector<double> adjacency_spectrum_numeric(const Graph& g) {
  if (g.n() > kMaxNumericSpectrum)
    throw CapExceeded("numeric spectrum limited to " + std::to_string(kMaxNumericSpectrum) + " vertices");
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(g.n(), g.n());
  for (int v = 0; v < g.n(); ++v)
    for (int w : g.neighbors(v)) A(v, w) = 1.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(A, Eigen::EigenvaluesOnly);
  std::vector<double> ev(solver.eigenvalues().data(), solver.eigenvalues().data() + g.n());
  std::sort(ev.begin(), ev.end(), std::greater<>());
  return ev;
}

/// Groups a sorted spectrum into (value, multiplicity) pairs within `tol`.
inline std::vector<std::pair<double, int>> group_spectrum(const std::vector<double>& ev, double tol = 1e-6) {
  std::vector<std::pair<double, int>> out;
  for (double x : ev) {
    if (!out.empty() && std::abs(out.back().first - x) <= tol) {
      ++out.back().second;
    } else {
      out.emplace_back(x, 1);
    }
  }
  return out;
}

}  // namespace drg
