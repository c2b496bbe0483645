#include "rankone/util/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace rankone {

namespace {

QuadRule build_gauss_legendre(int n) {
    QuadRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    // Newton on Legendre P_n, Chebyshev initial guesses.
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / pp;
            x -= dx;
            if (std::fabs(dx) < 1e-15) break;
        }
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
    return rule;
}

std::map<int, QuadRule>& rule_cache() {
    static std::map<int, QuadRule> cache;
    return cache;
}
std::mutex cache_mutex;

template <typename T>
T gl_estimate(const std::function<T(double)>& f, double a, double b, const QuadRule& r) {
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    T s{};
    for (std::size_t i = 0; i < r.nodes.size(); ++i)
        s += r.weights[i] * f(mid + half * r.nodes[i]);
    return s * half;
}

template <typename T>
T adaptive(const std::function<T(double)>& f, double a, double b, double rel_tol,
           int depth, int max_depth, double scale) {
    const QuadRule& lo = gauss_legendre(8);
    const QuadRule& hi = gauss_legendre(16);
    const T coarse = gl_estimate(f, a, b, lo);
    const T fine = gl_estimate(f, a, b, hi);
    const double err = std::abs(fine - coarse);
    if (err <= rel_tol * std::max(scale, std::abs(fine)) || depth >= max_depth)
        return fine;
    const double mid = 0.5 * (a + b);
    return adaptive(f, a, mid, rel_tol, depth + 1, max_depth, scale) +
           adaptive(f, mid, b, rel_tol, depth + 1, max_depth, scale);
}

}  // namespace

const QuadRule& gauss_legendre(int order) {
    if (order < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = rule_cache().find(order);
    if (it == rule_cache().end())
        it = rule_cache().emplace(order, build_gauss_legendre(order)).first;
    return it->second;
}

QuadRule gauss_legendre_on(int order, double a, double b) {
    const QuadRule& base = gauss_legendre(order);
    QuadRule r;
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    r.nodes.reserve(base.nodes.size());
    r.weights.reserve(base.nodes.size());
    for (std::size_t i = 0; i < base.nodes.size(); ++i) {
        r.nodes.push_back(mid + half * base.nodes[i]);
        r.weights.push_back(half * base.weights[i]);
    }
    return r;
}

double integrate_panels(const std::function<double(double)>& f, double a, double b,
                        int order, int panels) {
    const QuadRule& r = gauss_legendre(order);
    std::vector<double> parts;
    parts.reserve(panels);
    const double h = (b - a) / panels;
    for (int p = 0; p < panels; ++p)
        parts.push_back(gl_estimate<double>(f, a + p * h, a + (p + 1) * h, r));
    return pairwise_sum(parts);
}

std::complex<double> integrate_panels_c(
    const std::function<std::complex<double>(double)>& f, double a, double b, int order,
    int panels) {
    const QuadRule& r = gauss_legendre(order);
    std::vector<std::complex<double>> parts;
    parts.reserve(panels);
    const double h = (b - a) / panels;
    for (int p = 0; p < panels; ++p)
        parts.push_back(gl_estimate<std::complex<double>>(f, a + p * h, a + (p + 1) * h, r));
    return pairwise_sum(parts);
}

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double rel_tol, int max_depth) {
    return adaptive<double>(f, a, b, rel_tol, 0, max_depth, 0.0);
}

std::complex<double> integrate_adaptive_c(
    const std::function<std::complex<double>(double)>& f, double a, double b,
    double rel_tol, int max_depth) {
    return adaptive<std::complex<double>>(f, a, b, rel_tol, 0, max_depth, 0.0);
}

double pairwise_sum(const std::vector<double>& v) {
    std::function<double(std::size_t, std::size_t)> rec = [&](std::size_t lo,
                                                              std::size_t hi) -> double {
        if (hi - lo <= 4) {
            double s = 0.0;
            for (std::size_t i = lo; i < hi; ++i) s += v[i];
            return s;
        }
        const std::size_t mid = lo + (hi - lo) / 2;
        return rec(lo, mid) + rec(mid, hi);
    };
    return v.empty() ? 0.0 : rec(0, v.size());
}

std::complex<double> pairwise_sum(const std::vector<std::complex<double>>& v) {
    std::function<std::complex<double>(std::size_t, std::size_t)> rec =
        [&](std::size_t lo, std::size_t hi) -> std::complex<double> {
        if (hi - lo <= 4) {
            std::complex<double> s{};
            for (std::size_t i = lo; i < hi; ++i) s += v[i];
            return s;
        }
        const std::size_t mid = lo + (hi - lo) / 2;
        return rec(lo, mid) + rec(mid, hi);
    };
    return v.empty() ? std::complex<double>{} : rec(0, v.size());
}

}  // namespace rankone
