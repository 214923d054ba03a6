#ifndef UNIENERGY_QUADRATURE_HPP
#define UNIENERGY_QUADRATURE_HPP

#include <functional>

namespace unienergy {

struct QuadratureResult {
    double value = 0.0;
    double err = 0.0;
    bool converged = true;
    int intervals = 0;
};

// Adaptive Gauss-Kronrod (G7, K15) on [a, b]. Bisects the interval with the
// largest error estimate until the total is below tol or the interval
// budget runs out.
QuadratureResult integrate_gk(const std::function<double(double)>& f, double a, double b,
                              double tol, int max_intervals = 4000);

// Integral over [0, inf) through the map x = t / (1 - t).
QuadratureResult integrate_half_line(const std::function<double(double)>& f, double tol,
                                     int max_intervals = 4000);

}  // namespace unienergy

#endif
