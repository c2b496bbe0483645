#ifndef RANKONE_UTIL_GAMMA_HPP
#define RANKONE_UTIL_GAMMA_HPP

#include <cmath>
#include <complex>

namespace rankone {

using Cplx = std::complex<double>;

// Lanczos approximation (g = 7, 9 terms), relative error below 1e-13 on the
// right half plane; reflection formula elsewhere.
Cplx log_gamma(Cplx z);
Cplx gamma_fn(Cplx z);

// true if z is within tol of a pole of Gamma (non-positive integer)
bool gamma_is_pole(Cplx z, double tol = 1e-12);

}  // namespace rankone

#endif
