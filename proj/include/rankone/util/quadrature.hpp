#ifndef RANKONE_UTIL_QUADRATURE_HPP
#define RANKONE_UTIL_QUADRATURE_HPP

#include <complex>
#include <functional>
#include <vector>

namespace rankone {

struct QuadRule {
    std::vector<double> nodes;    // on [-1, 1]
    std::vector<double> weights;  // sum = 2
};

// Gauss-Legendre rule of the given order (number of nodes). Cached.
const QuadRule& gauss_legendre(int order);

// Nodes/weights mapped to [a, b].
QuadRule gauss_legendre_on(int order, double a, double b);

// Fixed-order composite integration of f over [a,b] with n panels.
double integrate_panels(const std::function<double(double)>& f, double a, double b,
                        int order, int panels);
std::complex<double> integrate_panels_c(
    const std::function<std::complex<double>(double)>& f, double a, double b, int order,
    int panels);

// Adaptive bisection with a Gauss-Legendre estimate per panel. Subdivides
// until the local order/2*order estimates agree to rel_tol.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double rel_tol = 1e-10, int max_depth = 24);
std::complex<double> integrate_adaptive_c(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    double rel_tol = 1e-10, int max_depth = 24);

// Pairwise (cascade) summation; deterministic and accurate for node sums.
double pairwise_sum(const std::vector<double>& v);
std::complex<double> pairwise_sum(const std::vector<std::complex<double>>& v);

}  // namespace rankone

#endif
