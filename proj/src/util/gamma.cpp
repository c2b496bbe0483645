#include "rankone/util/gamma.hpp"

namespace rankone {

namespace {

const double kLanczosG = 7.0;
const double kLanczos[9] = {
    0.99999999999980993,    676.5203681218851,     -1259.1392167224028,
    771.32342877765313,     -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,   9.9843695780195716e-6, 1.5056327351493116e-7};

Cplx log_gamma_core(Cplx z) {
    // valid for Re(z) > 0.5
    z -= 1.0;
    Cplx x = kLanczos[0];
    for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + Cplx(i, 0.0));
    const Cplx t = z + kLanczosG + 0.5;
    return 0.5 * std::log(2.0 * M_PI) + (z + 0.5) * std::log(t) - t + std::log(x);
}

}  // namespace

Cplx log_gamma(Cplx z) {
    if (z.real() < 0.5) {
        // log Gamma(z) = log(pi / sin(pi z)) - log Gamma(1 - z)
        return std::log(M_PI) - std::log(std::sin(M_PI * z)) - log_gamma_core(1.0 - z);
    }
    return log_gamma_core(z);
}

Cplx gamma_fn(Cplx z) { return std::exp(log_gamma(z)); }

bool gamma_is_pole(Cplx z, double tol) {
    if (std::fabs(z.imag()) > tol) return false;
    const double r = z.real();
    if (r > 0.5) return false;
    return std::fabs(r - std::round(r)) <= tol;
}

}  // namespace rankone
