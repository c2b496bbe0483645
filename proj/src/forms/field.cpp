#include "rankone/forms/field.hpp"

#include <cmath>

namespace rankone {

Field field_with_fd_gradient(const ModelSpace& s,
                             std::function<Cplx(const Point&)> value, double h_rel) {
    Field f;
    f.value = value;
    const int d = s.dim();
    f.gradient = [value, d, h_rel](const Point& pt) {
        std::vector<Cplx> g(d);
        for (int k = 0; k < d; ++k) {
            const double h = h_rel * pt.y;
            auto at = [&](int step) {
                Point pp = pt;
                if (k + 1 == d)
                    pp.y += step * h;
                else
                    pp.x[k] += step * h;
                return value(pp);
            };
            g[k] = (-at(2) + 8.0 * at(1) - 8.0 * at(-1) + at(-2)) / (12.0 * h);
        }
        return g;
    };
    return f;
}

Field field_character(const ModelSpace& s, const SpectralParameter& snu) {
    Field f;
    const Cplx mu = snu.rho + snu.nu;
    const int d = s.dim();
    f.value = [mu](const Point& pt) { return std::pow(Cplx(pt.y, 0.0), mu); };
    f.gradient = [mu, d](const Point& pt) {
        std::vector<Cplx> g(d, Cplx{});
        g[d - 1] = mu * std::pow(Cplx(pt.y, 0.0), mu - 1.0);
        return g;
    };
    return f;
}

Field field_poisson_kernel(const ModelSpace& s, const BoundaryPoint& b,
                           const SpectralParameter& snu) {
    Field f;
    const Vec omega = boundary_to_sphere(s, b);
    f.value = [&s, omega, snu](const Point& pt) {
        return poisson_kernel_sphere(s, omega, pt, snu);
    };
    f.gradient = [&s, omega, snu](const Point& pt) {
        return poisson_kernel_gradient(s, omega, pt, snu);
    };
    return f;
}

Field field_q_kernel(const ModelSpace& s, std::shared_ptr<const RadialProfile> profile,
                     const Point& center) {
    Field f;
    f.value = [&s, profile, center](const Point& pt) {
        return q_kernel(s, *profile, center, pt);
    };
    f.gradient = [&s, profile, center](const Point& pt) {
        return q_kernel_gradient2(s, *profile, center, pt);
    };
    return f;
}

Field field_poisson_transform(const ModelSpace& s,
                              std::shared_ptr<const BoundaryFunction> phi,
                              const SpectralParameter& snu) {
    Field f;
    f.value = [&s, phi, snu](const Point& pt) {
        return poisson_transform(s, *phi, pt, snu);
    };
    f.gradient = [&s, phi, snu](const Point& pt) {
        return poisson_transform_gradient(s, *phi, pt, snu);
    };
    return f;
}

}  // namespace rankone
