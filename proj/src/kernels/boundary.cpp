#include "rankone/kernels/boundary.hpp"

#include <cmath>
#include <stdexcept>

#include "rankone/util/quadrature.hpp"

namespace rankone {

Vec boundary_to_sphere(const ModelSpace& s, const BoundaryPoint& b) {
    const int d = s.dim();
    Vec omega(d, 0.0);
    if (b.infinite) {
        omega[d - 1] = 1.0;
        return omega;
    }
    double nrm2 = 0.0;
    for (double v : b.x) nrm2 += v * v;
    const double scale = 1.0 / (1.0 + nrm2);
    for (int i = 0; i < d - 1; ++i) omega[i] = 2.0 * b.x[i] * scale;
    omega[d - 1] = (nrm2 - 1.0) * scale;
    return omega;
}

BoundaryPoint sphere_to_boundary(const ModelSpace& s, const Vec& omega) {
    const int d = s.dim();
    const double denom = 1.0 - omega[d - 1];
    if (denom <= 1e-14) return BoundaryPoint::infinity(s.nx());
    Vec x(d - 1);
    for (int i = 0; i < d - 1; ++i) x[i] = omega[i] / denom;
    return BoundaryPoint::finite(std::move(x));
}

Vec sphere_to_null(const Vec& omega) {
    const std::size_t d = omega.size();
    Vec u(d + 1);
    // u_0 = 1/2, u_d = omega_d / 2 in light-cone coordinates
    u[0] = 0.5 * (1.0 - omega[d - 1]);
    u[1] = 0.5 * (1.0 + omega[d - 1]);
    for (std::size_t i = 0; i + 1 < d; ++i) u[2 + i] = 0.5 * omega[i];
    return u;
}

BoundaryGrid::BoundaryGrid(const ModelSpace& s, int nt, int np)
    : n_theta(nt), n_phi(s.dim() == 2 ? 1 : np) {
    const int d = s.dim();
    if (d == 2) {
        omega.reserve(n_theta);
        weight.assign(n_theta, 1.0 / n_theta);
        for (int k = 0; k < n_theta; ++k) {
            const double th = 2.0 * M_PI * (k + 0.5) / n_theta;
            omega.push_back({std::sin(th), std::cos(th)});
        }
    } else if (d == 3) {
        const QuadRule& gl = gauss_legendre(n_theta);
        omega.reserve(static_cast<std::size_t>(n_theta) * n_phi);
        weight.reserve(omega.capacity());
        for (int i = 0; i < n_theta; ++i) {
            const double mu = gl.nodes[i];
            const double st = std::sqrt(std::max(0.0, 1.0 - mu * mu));
            for (int j = 0; j < n_phi; ++j) {
                const double ph = 2.0 * M_PI * (j + 0.5) / n_phi;
                omega.push_back({st * std::cos(ph), st * std::sin(ph), mu});
                weight.push_back(gl.weights[i] / (2.0 * n_phi));
            }
        }
    } else {
        throw std::domain_error("BoundaryGrid: only d = 2, 3 boundary grids are built");
    }
}

std::shared_ptr<const BoundaryGrid> make_boundary_grid(const ModelSpace& s, int n) {
    if (s.dim() == 2) return std::make_shared<BoundaryGrid>(s, n > 0 ? n : 257, 1);
    const int nt = n > 0 ? n : 40;
    return std::make_shared<BoundaryGrid>(s, nt, 2 * nt);
}

BoundaryFunction::BoundaryFunction(const ModelSpace& s,
                                   std::shared_ptr<const BoundaryGrid> grid,
                                   std::vector<Cplx> values, Smoothness tag)
    : space_(&s), grid_(std::move(grid)), values_(std::move(values)), tag_(tag) {
    if (values_.size() != grid_->size())
        throw std::invalid_argument("BoundaryFunction: wrong number of samples");
}

namespace {

// Fully normalized associated Legendre values P_l^m(x), l = m..L, with
// 2 pi * int P^2 dx = 1; the standard stable recurrences.
void normalized_legendre(int L, int m, double x, std::vector<double>& out) {
    out.assign(L + 1 - m, 0.0);
    const double somx2 = std::sqrt(std::max(0.0, 1.0 - x * x));
    double pmm = std::sqrt(1.0 / (4.0 * M_PI));
    for (int k = 1; k <= m; ++k)
        pmm *= -std::sqrt((2.0 * k + 1.0) / (2.0 * k)) * somx2;
    out[0] = pmm;
    if (L == m) return;
    double pm1 = x * std::sqrt(2.0 * m + 3.0) * pmm;
    out[1] = pm1;
    double pm2 = pmm;
    for (int l = m + 2; l <= L; ++l) {
        const double a = std::sqrt((4.0 * l * l - 1.0) / (l * l - m * m));
        const double b =
            std::sqrt(((l - 1.0) * (l - 1.0) - m * m) / (4.0 * (l - 1.0) * (l - 1.0) - 1.0));
        const double pl = a * (x * pm1 - b * pm2);
        out[l - m] = pl;
        pm2 = pm1;
        pm1 = pl;
    }
}

Cplx eval_fourier(const std::vector<Cplx>& coeff, double theta) {
    const int n = static_cast<int>(coeff.size());
    Cplx s = 0.0;
    for (int m = 0; m < n; ++m) {
        const double freq = m - n / 2;
        s += coeff[m] * std::exp(Cplx(0.0, freq * theta));
    }
    return s;
}

}  // namespace

void BoundaryFunction::build_interpolant() const {
    const int nt = grid_->n_theta, np = grid_->n_phi;
    if (space_->dim() == 2) {
        fourier_.assign(nt, Cplx{});
        for (int m = 0; m < nt; ++m) {
            Cplx c = 0.0;
            for (int k = 0; k < nt; ++k) {
                const double th = 2.0 * M_PI * (k + 0.5) / nt;
                const double freq = m - nt / 2;
                c += values_[k] * std::exp(Cplx(0.0, -freq * th));
            }
            fourier_[m] = c / static_cast<double>(nt);
        }
        interp_ready_ = true;
        return;
    }
    // d = 3: project onto the orthonormal basis P_l^{|m|}(mu) e^{i m phi};
    // the Gauss-Legendre x uniform grid makes the projections exact for
    // band-limited functions up to degree n_theta - 1.
    const int L = nt - 1;
    const QuadRule& gl = gauss_legendre(nt);
    sph_.assign(2 * L + 1, std::vector<Cplx>(L + 1, Cplx{}));
    // phi transform per mu-row, then Legendre projection per frequency
    std::vector<std::vector<Cplx>> row_fourier(nt, std::vector<Cplx>(np));
    for (int i = 0; i < nt; ++i)
        for (int m = 0; m < np; ++m) {
            Cplx c = 0.0;
            for (int j = 0; j < np; ++j) {
                const double ph = 2.0 * M_PI * (j + 0.5) / np;
                const double freq = m - np / 2;
                c += values_[i * np + j] * std::exp(Cplx(0.0, -freq * ph));
            }
            row_fourier[i][m] = c / static_cast<double>(np);
        }
    std::vector<double> leg;
    for (int m = -L; m <= L; ++m) {
        const int am = std::abs(m);
        const int col = m + np / 2;
        if (col < 0 || col >= np) continue;
        for (int i = 0; i < nt; ++i) {
            normalized_legendre(L, am, gl.nodes[i], leg);
            // a_{lm} = 4 pi int f conj(B) db = 2 pi int_{-1}^{1} c_m(mu) P dm
            for (int l = am; l <= L; ++l)
                sph_[m + L][l] += 2.0 * M_PI * gl.weights[i] * row_fourier[i][col] *
                                  leg[l - am];
        }
    }
    interp_ready_ = true;
}

Cplx BoundaryFunction::evaluate(const Vec& omega) const {
    if (!interp_ready_) build_interpolant();
    const int d = space_->dim();
    if (d == 2) {
        const double th = std::atan2(omega[0], omega[1]);
        return eval_fourier(fourier_, th);
    }
    const double mu = std::min(1.0, std::max(-1.0, omega[2]));
    const double ph = std::atan2(omega[1], omega[0]);
    const int L = grid_->n_theta - 1;
    Cplx s = 0.0;
    std::vector<double> leg;
    for (int m = -L; m <= L; ++m) {
        const int am = std::abs(m);
        normalized_legendre(L, am, mu, leg);
        Cplx part = 0.0;
        for (int l = am; l <= L; ++l) part += sph_[m + L][l] * leg[l - am];
        s += part * std::exp(Cplx(0.0, m * ph));
    }
    return s;
}

Cplx BoundaryFunction::evaluate(const BoundaryPoint& b) const {
    return evaluate(boundary_to_sphere(*space_, b));
}

Cplx BoundaryFunction::integral() const {
    std::vector<Cplx> parts(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i)
        parts[i] = values_[i] * grid_->weight[i];
    return pairwise_sum(parts);
}

}  // namespace rankone
