#ifndef UNIENERGY_ENERGY_HPP
#define UNIENERGY_ENERGY_HPP

#include <string>
#include <vector>

#include "unienergy/charpoly.hpp"
#include "unienergy/families.hpp"
#include "unienergy/graph.hpp"

namespace unienergy {

enum class EnergyMethod { EigenSum, CoulsonIntegral };

struct EnergyValue {
    double value = 0.0;
    EnergyMethod method = EnergyMethod::EigenSum;
    double err_estimate = 0.0;
};

// Default quadrature tolerance; UNIENERGY_TOL overrides.
double default_energy_tolerance();

// Sum of |eigenvalue| over the adjacency spectrum (dense symmetric solve,
// n <= 2048). The authoritative energy.
EnergyValue energy_eigen(const LabeledGraph& g);

// Coulson integral on the b-sequence:
//   E = (1/2pi) Int dx/x^2 ln[(sum b_{2i} x^{2i})^2 + (sum b_{2i+1} x^{2i+1})^2].
// Applies to unicyclic or bipartite graphs.
EnergyValue energy_coulson(const LabeledGraph& g, double tol = -1.0);

// Signed difference E(g1) - E(g2) by the log-ratio integral
//   (1/pi) Int log|phi(g1, ix) / phi(g2, ix)| dx,
// with the nullity-difference log singularity at 0 integrated analytically.
double energy_difference_coulson(const LabeledGraph& g1, const LabeledGraph& g2,
                                 double tol = -1.0);

// Closed-form machinery on the imaginary axis: the quadratic roots
//   Z1/Z2 of z^2 + (x^2+1) z + x^2, the A/D family combination
// coefficients, and the order 6/8 magnitude polynomials.
namespace closedform {

double z1(double x);
double z2(double x);
// Real-axis roots of y^2 - (x^2-1) y + x^2; defined where x^4 - 6x^2 + 1 >= 0.
double y1(double x);
double y2(double x);

double f6(double x);
double f8(double x);
double g6(double x);
double g8(double x);

// Combination coefficients evaluated at ix (real-valued).
double a1_ix(double x);
double a2_ix(double x);
double b1_ix(double x);
double b2_ix(double x);

}  // namespace closedform

// phi(A_n, ix) or phi(D_n, ix) as a real number via the closed form.
// x != 0 (DomainError); family A or D, even n >= 6.
double closedform_eval(Family family, int n, double x);

// Integral over the real line of (A2(ix)/B2(ix) - 1) -- the limiting
// integrand of the A-vs-D energy comparison -- plus the sign conditions
// A1 B2 - A2 B1 < 0 and A1 B2 + A2 B1 > 0 at each sample point.
struct TailProbeSample {
    double x;
    double diff_value;   // A1 B2 - A2 B1
    double sum_value;    // A1 B2 + A2 B1
    bool diff_negative;
    bool sum_positive;
};

struct TailProbeReport {
    double integral = 0.0;
    double err = 0.0;
    bool signs_ok = true;
    std::vector<TailProbeSample> samples;
};

TailProbeReport ad_tail_probe(const std::vector<double>& x_samples, double tol = -1.0);

}  // namespace unienergy

#endif
