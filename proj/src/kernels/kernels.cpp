#include "rankone/kernels/kernels.hpp"

#include <cmath>
#include <stdexcept>

#include "rankone/util/gamma.hpp"

namespace rankone {

double factor_J(const ModelSpace& s, const GroupElement& g, const BoundaryPoint& b) {
    const Vec xi = embed_boundary(s, b);
    const Vec img = g.matrix() * xi;
    return img[0] + img[1];  // 2 u_0 of the image
}

double factor_J_sphere(const ModelSpace& s, const GroupElement& g, const Vec& omega) {
    (void)s;
    const Vec xi = sphere_to_null(omega);
    const Vec img = g.matrix() * xi;
    return img[0] + img[1];
}

namespace {

double poisson_pairing(const Vec& u_pt, const Vec& xi) {
    // -2 Q(u, xi) for the u_0 = 1/2 normalized null vector xi
    return -2.0 * minkowski(u_pt, xi);
}

}  // namespace

Cplx poisson_kernel_sphere(const ModelSpace& s, const Vec& omega, const Point& pt,
                           const SpectralParameter& snu) {
    const Vec u = embed_point(s, pt);
    const double pairing = poisson_pairing(u, sphere_to_null(omega));
    return std::pow(Cplx(pairing, 0.0), -(snu.rho + snu.nu));
}

Cplx poisson_kernel(const ModelSpace& s, const BoundaryPoint& b, const Point& pt,
                    const SpectralParameter& snu) {
    const Vec u = embed_point(s, pt);
    const double pairing = poisson_pairing(u, embed_boundary(s, b));
    return std::pow(Cplx(pairing, 0.0), -(snu.rho + snu.nu));
}

std::vector<Cplx> poisson_kernel_gradient(const ModelSpace& s, const Vec& omega,
                                          const Point& pt, const SpectralParameter& snu) {
    const Vec u = embed_point(s, pt);
    const Vec xi = sphere_to_null(omega);
    const double pairing = poisson_pairing(u, xi);
    const Mat jac = embed_jacobian(s, pt);
    const int d = s.dim();
    const Cplx outer =
        -(snu.rho + snu.nu) * std::pow(Cplx(pairing, 0.0), -(snu.rho + snu.nu) - 1.0);
    std::vector<Cplx> grad(d);
    for (int col = 0; col < d; ++col) {
        Vec du(jac.rows());
        for (std::size_t r = 0; r < jac.rows(); ++r) du[r] = jac(r, col);
        grad[col] = outer * poisson_pairing(du, xi);
    }
    return grad;
}

Cplx poisson_kernel_line(const ModelSpace& s, const Vec& xb, const Point& pt,
                         const SpectralParameter& snu) {
    // shift pt so that the boundary base point moves to the chart origin
    const Vec shifted = s.n_compose(s.n_inverse(xb), pt.x);
    const double quartic = s.iwasawa_quartic(shifted, pt.y);
    return std::pow(Cplx(pt.y, 0.0), snu.rho + snu.nu) *
           std::pow(Cplx(quartic, 0.0), -(snu.rho + snu.nu) / 2.0);
}

BoundaryFunction tau_action(const ModelSpace& s, const GroupElement& g,
                            const SpectralParameter& snu, const BoundaryFunction& f) {
    const GroupElement ginv = g.inverse();
    auto grid = f.grid_ptr();
    std::vector<Cplx> vals(grid->size());
    for (std::size_t i = 0; i < grid->size(); ++i) {
        const Vec& omega = grid->omega[i];
        Vec img = ginv.matrix() * sphere_to_null(omega);
        const double j = img[0] + img[1];  // J(g^-1, b)
        // renormalize the image ray to u_0 = 1/2 and read its sphere point
        Vec omega_img(s.dim());
        const std::size_t d = omega_img.size();
        omega_img[d - 1] = (img[1] - img[0]) / j;
        for (std::size_t k = 0; k + 1 < d; ++k) omega_img[k] = 2.0 * img[2 + k] / j;
        vals[i] = std::pow(Cplx(j, 0.0), -(snu.rho + snu.nu)) * f.evaluate(omega_img);
    }
    BoundaryFunction out(s, grid, std::move(vals), f.smoothness());
    for (const BoundaryPoint& b : f.singular_set())
        out.singular_set().push_back(g.act_boundary(s, b));
    return out;
}

CFunctionValue c_function(Cplx nu, const ModelSpace& s) {
    const double p = s.p(), q = s.q();
    CFunctionValue r;
    if (gamma_is_pole(nu)) {  // Gamma(nu) pole: nu in Z_{<=0}
        r.pole = true;
        r.value = Cplx(INFINITY, 0.0);
        return r;
    }
    const Cplx lg = (s.rho() - nu) * std::log(2.0) +
                    log_gamma(Cplx((p + q + 1.0) / 2.0, 0.0)) + log_gamma(nu) -
                    log_gamma((p / 2.0 + 1.0 + nu) / 2.0) -
                    log_gamma((p / 2.0 + q + nu) / 2.0);
    r.value = std::exp(lg);
    return r;
}

Cplx resolvent_constant(Cplx nu, const ModelSpace& s) {
    if (s.q() != 0)
        throw std::domain_error(
            "resolvent_constant: normalization derived for the q = 0 instances only");
    return M_PI * twonu_c(nu, s);
}

Cplx twonu_c(Cplx nu, const ModelSpace& s) {
    const double p = s.p(), q = s.q();
    // 2 nu Gamma(nu) = 2 Gamma(nu + 1) removes the pole at nu = 0
    const Cplx lg = (s.rho() - nu) * std::log(2.0) + std::log(2.0) +
                    log_gamma(Cplx((p + q + 1.0) / 2.0, 0.0)) + log_gamma(nu + 1.0) -
                    log_gamma((p / 2.0 + 1.0 + nu) / 2.0) -
                    log_gamma((p / 2.0 + q + nu) / 2.0);
    return std::exp(lg);
}

}  // namespace rankone
