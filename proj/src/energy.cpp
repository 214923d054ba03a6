#include "unienergy/energy.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>

#include "unienergy/quadrature.hpp"

namespace unienergy {

double default_energy_tolerance() {
    if (const char* s = std::getenv("UNIENERGY_TOL")) {
        char* end = nullptr;
        double v = std::strtod(s, &end);
        if (end != s && v > 0) return v;
    }
    return 1e-8;
}

namespace {

double resolve_tol(double tol) { return tol > 0 ? tol : default_energy_tolerance(); }

}  // namespace

EnergyValue energy_eigen(const LabeledGraph& g) {
    if (g.n > 2048) throw Error(ErrorCode::SizeLimit, "dense eigensolve limited to n <= 2048");
    if (g.n == 0) return {0.0, EnergyMethod::EigenSum, 0.0};
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(g.n, g.n);
    for (auto [u, v] : g.edges) {
        a(u, v) = 1.0;
        a(v, u) = 1.0;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
    double sum = 0.0, amax = 0.0;
    for (int i = 0; i < g.n; ++i) {
        double l = solver.eigenvalues()[i];
        sum += std::abs(l);
        amax = std::max(amax, std::abs(l));
    }
    double eps = std::numeric_limits<double>::epsilon();
    double err = 16.0 * g.n * eps * std::max(1.0, amax);
    return {sum, EnergyMethod::EigenSum, err};
}

// ---------------------------------------------------------------------------
// Coulson integral on the b-sequence
// ---------------------------------------------------------------------------

namespace {

struct BParts {
    std::vector<double> even;       // even[i] = b_{2i}
    std::vector<double> even_tail;  // even[1..], for the log1p form near 0
    std::vector<double> odd;        // odd[i]  = b_{2i+1}
    int n = 0;
};

BParts split_b(const CoefficientSequence& s) {
    BParts p;
    p.n = s.order();
    for (int i = 0; 2 * i <= p.n; ++i) p.even.push_back(s.b[2 * i].convert_to<double>());
    for (int i = 0; 2 * i + 1 <= p.n; ++i) p.odd.push_back(s.b[2 * i + 1].convert_to<double>());
    p.even_tail.assign(p.even.begin() + 1, p.even.end());
    return p;
}

double horner(const std::vector<double>& c, double y) {
    double r = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * y + *it;
    return r;
}

double horner_rev(const std::vector<double>& c, double y) {
    double r = 0.0;
    for (double v : c) r = r * y + v;
    return r;
}

// ln[(sum b_{2i} x^{2i})^2 + (sum b_{2i+1} x^{2i+1})^2] / x^2, stable for
// both tails. b_0 = 1 keeps the log argument >= 1 for x > 0.
double coulson_integrand(const BParts& p, double x) {
    double x2 = x * x;
    if (x <= 1.0) {
        // log1p form avoids cancellation as x -> 0.
        double se_minus_1 = x2 * horner(p.even_tail, x2);
        double so = x * horner(p.odd, x2);
        double u = se_minus_1 * (se_minus_1 + 2.0) + so * so;
        return std::log1p(u) / x2;
    }
    // Scale by x^{-2M}, M = floor(n/2): even part becomes a polynomial in
    // w = 1/x^2, the odd part x * w^{M-K} * poly(w).
    double w = 1.0 / x2;
    int m = static_cast<int>(p.even.size()) - 1;
    int k = static_cast<int>(p.odd.size()) - 1;
    double se_s = horner_rev(p.even, w);
    double so_s = 0.0;
    if (k >= 0) {
        so_s = x * std::pow(w, m - k) * horner_rev(p.odd, w);
    }
    double mag = se_s * se_s + so_s * so_s;
    return (4.0 * m * std::log(x) + std::log(mag)) / x2;
}

}  // namespace

EnergyValue energy_coulson(const LabeledGraph& g, double tol) {
    double t = resolve_tol(tol);
    CoefficientSequence s = b_sequence(g);
    if (g.n == 0) return {0.0, EnergyMethod::CoulsonIntegral, 0.0};
    BParts parts = split_b(s);
    auto f = [&parts](double x) { return coulson_integrand(parts, x); };
    QuadratureResult q = integrate_half_line(f, t * M_PI);
    if (!q.converged)
        throw Error(ErrorCode::NonConvergent, "Coulson quadrature did not reach tolerance");
    double value = q.value / M_PI;
    double err = q.err / M_PI + 64.0 * g.n * std::numeric_limits<double>::epsilon() * std::max(1.0, value);
    return {value, EnergyMethod::CoulsonIntegral, err};
}

// ---------------------------------------------------------------------------
// Pairwise difference by the log-ratio integral
// ---------------------------------------------------------------------------

namespace {

// |phi(G, ix)|^2 is an even polynomial in x with exact integer coefficients:
// with phi = sum a_j x^{n-j},
//   |phi(ix)|^2 = (sum_{j even} (-1)^{j/2} a_j x^{n-j})^2
//               + (sum_{j odd} (-1)^{(j-1)/2} a_j x^{n-j})^2.
// Returned descending: coeff[i] multiplies x^{2(n-i)}.
std::vector<BigInt> phi_ix_squared(const CharPoly& p) {
    int n = p.order();
    std::vector<BigInt> re(n + 1, BigInt(0)), im(n + 1, BigInt(0));
    for (int j = 0; j <= n; ++j) {
        if (j % 2 == 0) {
            re[j] = (j % 4 == 0) ? p.a[j] : -p.a[j];
        } else {
            im[j] = (j % 4 == 1) ? p.a[j] : -p.a[j];
        }
    }
    // Convolutions in the descending-power representation: index i of the
    // square multiplies x^{2n - 2i}... products of x^{n-j1} x^{n-j2} land at
    // j1 + j2, even in both squares.
    std::vector<BigInt> out(2 * n + 1, BigInt(0));
    for (int j1 = 0; j1 <= n; ++j1) {
        if (re[j1] != 0)
            for (int j2 = 0; j2 <= n; ++j2)
                if (re[j2] != 0) out[j1 + j2] += re[j1] * re[j2];
        if (im[j1] != 0)
            for (int j2 = 0; j2 <= n; ++j2)
                if (im[j2] != 0) out[j1 + j2] += im[j1] * im[j2];
    }
    // Odd positions cancel identically; keep x^{2(n-i)} entries.
    std::vector<BigInt> even_coeffs;
    for (int i = 0; i <= 2 * n; i += 2) even_coeffs.push_back(out[i]);
    return even_coeffs;  // size n+1, descending in x^2
}

struct MagPoly {
    std::vector<double> asc;  // ascending from the constant term of the reduced poly
    int nullity = 0;          // trailing zero count = adjacency nullity
};

MagPoly make_mag(const CharPoly& p) {
    auto c = phi_ix_squared(p);
    MagPoly m;
    int last = static_cast<int>(c.size()) - 1;
    while (last > 0 && c[last] == 0) --last;
    m.nullity = static_cast<int>(c.size()) - 1 - last;
    for (int i = last; i >= 0; --i) m.asc.push_back(c[i].convert_to<double>());
    return m;
}

// log|phi(G, ix)| - eta log x for x in (0, 1]; the reduced polynomial has a
// nonzero constant term so this is smooth at 0.
double log_mag_reduced(const MagPoly& m, double x) {
    double x2 = x * x;
    return 0.5 * std::log(horner(m.asc, x2));
}

}  // namespace

double energy_difference_coulson(const LabeledGraph& g1, const LabeledGraph& g2, double tol) {
    if (g1.n != g2.n) throw Error(ErrorCode::MismatchedOrder, "graphs must have the same order");
    double t = resolve_tol(tol);
    if (g1.n == 0) return 0.0;

    CharPoly p1 = charpoly_recursive(g1);
    CharPoly p2 = charpoly_recursive(g2);
    if (p1 == p2) return 0.0;

    MagPoly m1 = make_mag(p1);
    MagPoly m2 = make_mag(p2);
    int dnull = m1.nullity - m2.nullity;

    // (0,1]: integrate the smooth part; the dnull * log x part integrates
    // to -dnull exactly.
    auto near = [&](double x) { return log_mag_reduced(m1, x) - log_mag_reduced(m2, x); };
    QuadratureResult qa = integrate_gk(near, 0.0, 1.0, t * M_PI / 4.0);

    // [1, inf): x = 1/u. With w = u^2, x^{-2n} |phi(G, ix)|^2 = sum c_i w^i
    // where c is the descending coefficient array of |phi(ix)|^2 (c_0 = 1).
    // The ratio goes through log1p of the exact difference polynomial, whose
    // constant term cancels exactly, so the u -> 0 tail loses no precision.
    auto c1 = phi_ix_squared(p1);
    auto c2 = phi_ix_squared(p2);
    std::vector<double> q2poly, dpoly;
    for (std::size_t i = 0; i < c2.size(); ++i) {
        q2poly.push_back(c2[i].convert_to<double>());
        dpoly.push_back(BigInt(c1[i] - c2[i]).convert_to<double>());
    }
    auto far = [&](double u) {
        if (u == 0.0) return 0.0;
        double w = u * u;
        double q2 = horner(q2poly, w);
        double dl = horner(dpoly, w);
        return 0.5 * std::log1p(dl / q2) / (u * u);
    };
    QuadratureResult qb = integrate_gk(far, 0.0, 1.0, t * M_PI / 4.0);

    if (!qa.converged || !qb.converged)
        throw Error(ErrorCode::NonConvergent, "log-ratio quadrature did not reach tolerance");

    double half_line = qa.value - dnull + qb.value;
    return 2.0 / M_PI * half_line;
}

// ---------------------------------------------------------------------------
// Closed forms on the imaginary axis
// ---------------------------------------------------------------------------

namespace closedform {

double z2(double x) {
    double x2 = x * x;
    return 0.5 * (-x2 - 1.0 - std::sqrt(x2 * x2 + 6.0 * x2 + 1.0));
}

double z1(double x) {
    // Z1 Z2 = -x^2; dividing avoids the cancellation in the + root.
    return -(x * x) / z2(x);
}

double y1(double x) {
    double x2 = x * x;
    double disc = x2 * x2 - 6.0 * x2 + 1.0;
    if (disc < 0) throw Error(ErrorCode::DomainError, "y1 undefined where x^4 - 6x^2 + 1 < 0");
    return 0.5 * (x2 - 1.0 + std::sqrt(disc));
}

double y2(double x) {
    double x2 = x * x;
    double disc = x2 * x2 - 6.0 * x2 + 1.0;
    if (disc < 0) throw Error(ErrorCode::DomainError, "y2 undefined where x^4 - 6x^2 + 1 < 0");
    return 0.5 * (x2 - 1.0 - std::sqrt(disc));
}

double f6(double x) {
    double y = x * x;
    return ((y + 6.0) * y + 6.0) * y;
}

double f8(double x) {
    double y = x * x;
    return (((y + 8.0) * y + 16.0) * y + 6.0) * y;
}

double g6(double x) {
    double y = x * x;
    return ((y + 6.0) * y + 5.0) * y + 1.0;
}

double g8(double x) {
    double y = x * x;
    return (((y + 8.0) * y + 15.0) * y + 8.0) * y + 1.0;
}

double a1_ix(double x) {
    double zz1 = z1(x);
    return (f8(x) + z2(x) * f6(x)) / (zz1 * zz1 * (zz1 * zz1 + x * x));
}

double a2_ix(double x) {
    double zz2 = z2(x);
    return (f8(x) + z1(x) * f6(x)) / (zz2 * zz2 * (zz2 * zz2 + x * x));
}

double b1_ix(double x) {
    double zz1 = z1(x);
    return (g8(x) + z2(x) * g6(x)) / (zz1 * zz1 * (zz1 * zz1 + x * x));
}

double b2_ix(double x) {
    double zz2 = z2(x);
    return (g8(x) + z1(x) * g6(x)) / (zz2 * zz2 * (zz2 * zz2 + x * x));
}

}  // namespace closedform

double closedform_eval(Family family, int n, double x) {
    if (family != Family::A && family != Family::D)
        throw Error(ErrorCode::InvalidOrder, "closed form covers the A and D families");
    if (n < 6 || n % 2 != 0) throw Error(ErrorCode::InvalidOrder, "closed form needs even n >= 6");
    if (x == 0.0) throw Error(ErrorCode::DomainError, "closed form evaluated away from x = 0");
    double c1 = family == Family::A ? closedform::a1_ix(x) : closedform::b1_ix(x);
    double c2 = family == Family::A ? closedform::a2_ix(x) : closedform::b2_ix(x);
    int p = n / 2;
    return c1 * std::pow(closedform::z1(x), p) + c2 * std::pow(closedform::z2(x), p);
}

TailProbeReport ad_tail_probe(const std::vector<double>& x_samples, double tol) {
    double t = resolve_tol(tol);
    TailProbeReport rep;

    // (A2/B2 - 1)(ix) = (f8 - g8 + Z1 (f6 - g6)) / (g8 + Z1 g6); even in x.
    auto integrand = [](double x) {
        double x2 = x * x;
        double zz1 = closedform::z1(x);
        double num = (x2 * x2 - 2.0 * x2 - 1.0) + zz1 * (x2 - 1.0);
        double den = closedform::g8(x) + zz1 * closedform::g6(x);
        return num / den;
    };
    QuadratureResult q = integrate_half_line(integrand, t);
    if (!q.converged) throw Error(ErrorCode::NonConvergent, "tail-ratio quadrature did not converge");
    rep.integral = 2.0 * q.value;
    rep.err = 2.0 * q.err;

    for (double x : x_samples) {
        if (x == 0.0) continue;
        double diff = closedform::a1_ix(x) * closedform::b2_ix(x) -
                      closedform::a2_ix(x) * closedform::b1_ix(x);
        double sum = closedform::a1_ix(x) * closedform::b2_ix(x) +
                     closedform::a2_ix(x) * closedform::b1_ix(x);
        TailProbeSample s{x, diff, sum, diff < 0.0, sum > 0.0};
        rep.signs_ok = rep.signs_ok && s.diff_negative && s.sum_positive;
        rep.samples.push_back(s);
    }
    return rep;
}

}  // namespace unienergy
