#include "rankone/space/metric.hpp"

#include <cmath>

namespace rankone {

MetricMatrix metric_at(const ModelSpace& s, const Point& pt) {
    const int p = s.p(), q = s.q(), d = s.dim();
    const double y = pt.y;
    const double y2 = y * y, y4 = y2 * y2;
    const Mat c = s.c_matrix(pt.x);

    MetricMatrix m;
    m.g = Mat(d, d);
    // block (1,1): y^-2 I_p + y^-4 C C^t
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) {
            double cc = 0.0;
            for (int l = 0; l < q; ++l) cc += c(i, l) * c(j, l);
            m.g(i, j) = (i == j ? 1.0 / y2 : 0.0) + cc / y4;
        }
    // blocks (1,2), (2,1): -y^-4 C
    for (int i = 0; i < p; ++i)
        for (int l = 0; l < q; ++l) {
            m.g(i, p + l) = -c(i, l) / y4;
            m.g(p + l, i) = -c(i, l) / y4;
        }
    // block (2,2): y^-4 I_q
    for (int l = 0; l < q; ++l) m.g(p + l, p + l) = 1.0 / y4;
    // y-direction
    m.g(d - 1, d - 1) = 1.0 / y2;

    m.g_inv = Mat(d, d);
    for (int i = 0; i < p; ++i) {
        m.g_inv(i, i) = y2;
        for (int l = 0; l < q; ++l) {
            m.g_inv(i, p + l) = y2 * c(i, l);
            m.g_inv(p + l, i) = y2 * c(i, l);
        }
    }
    for (int l = 0; l < q; ++l)
        for (int k = 0; k < q; ++k) {
            double cc = 0.0;
            for (int i = 0; i < p; ++i) cc += c(i, l) * c(i, k);
            m.g_inv(p + l, p + k) = (l == k ? y4 : 0.0) + y2 * cc;
        }
    m.g_inv(d - 1, d - 1) = y2;

    m.sqrt_det = std::pow(y, -2.0 * s.rho() - 1.0);
    return m;
}

}  // namespace rankone
