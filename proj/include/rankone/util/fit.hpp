#ifndef RANKONE_UTIL_FIT_HPP
#define RANKONE_UTIL_FIT_HPP

#include <cmath>
#include <stdexcept>
#include <vector>

namespace rankone {

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double residual_rms = 0.0;
};

inline LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    if (n < 2 || y.size() != n) throw std::invalid_argument("fit_line: need >= 2 points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    LineFit f;
    const double d = n * sxx - sx * sx;
    f.slope = (n * sxy - sx * sy) / d;
    f.intercept = (sy - f.slope * sx) / n;
    double rss = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double r = y[i] - (f.slope * x[i] + f.intercept);
        rss += r * r;
    }
    f.residual_rms = std::sqrt(rss / n);
    return f;
}

// slope of log|y| against log(x); pairs with y == 0 are skipped
inline LineFit fit_loglog(const std::vector<double>& x, const std::vector<double>& y) {
    std::vector<double> lx, ly;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (y[i] == 0.0 || x[i] <= 0.0) continue;
        lx.push_back(std::log(x[i]));
        ly.push_back(std::log(std::fabs(y[i])));
    }
    return fit_line(lx, ly);
}

// Richardson extrapolation of f(h), f(h/2), ... assuming error ~ C h^order.
struct RichardsonResult {
    double value = 0.0;
    double error_estimate = 0.0;
    bool stabilized = false;
};

// samples[i] = A(h / 2^i); assumes error expansion C1 h^order + C2 h^(order+step) + ...
inline RichardsonResult richardson(const std::vector<double>& samples, double order,
                                   double order_step = 1.0) {
    if (samples.size() < 2) throw std::invalid_argument("richardson: need >= 2 samples");
    const std::size_t n = samples.size();
    std::vector<double> row = samples;
    double prev = samples.back();
    for (std::size_t level = 1; level < n; ++level) {
        const double w = std::pow(2.0, order + (level - 1) * order_step);
        for (std::size_t i = 0; i + level < n; ++i)
            row[i] = (w * row[i + 1] - row[i]) / (w - 1.0);
        if (level + 1 < n) prev = row[0];
    }
    RichardsonResult r;
    r.value = row[0];
    r.error_estimate = std::fabs(row[0] - prev);
    const double scale = std::max(1.0, std::fabs(r.value));
    r.stabilized = r.error_estimate <= 1e-6 * scale;
    return r;
}

}  // namespace rankone

#endif
