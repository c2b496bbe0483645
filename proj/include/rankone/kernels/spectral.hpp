#ifndef RANKONE_KERNELS_SPECTRAL_HPP
#define RANKONE_KERNELS_SPECTRAL_HPP

#include <cmath>
#include <complex>

#include "rankone/space/model_space.hpp"

namespace rankone {

// Spectral parameter nu with the derived eigenvalue rho^2 - nu^2 and the
// exceptional-set flags that gate several constructions.
struct SpectralParameter {
    Cplx nu;
    double rho;

    SpectralParameter(Cplx nu_, const ModelSpace& s) : nu(nu_), rho(s.rho()) {}
    SpectralParameter(Cplx nu_, double rho_) : nu(nu_), rho(rho_) {}

    Cplx eigenvalue() const { return rho * rho - nu * nu; }

    bool in_half_integers(double tol = 1e-12) const {
        if (std::fabs(nu.imag()) > tol) return false;
        const double twice = 2.0 * nu.real();
        return std::fabs(twice - std::round(twice)) <= tol;
    }

    // nu in (1/2) Z_{<= -1}, the excluded set of the germ machinery
    bool in_excluded_set(double tol = 1e-12) const {
        return in_half_integers(tol) && nu.real() <= -0.5 + tol;
    }

    bool abs_re_lt_rho() const { return std::fabs(nu.real()) < rho; }
};

}  // namespace rankone

#endif
