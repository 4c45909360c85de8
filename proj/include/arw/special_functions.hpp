#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace arw {

inline constexpr double kPi = std::numbers::pi;

/// Standard Gaussian density.
inline double normal_pdf(double t) {
    return std::exp(-0.5 * t * t) / std::sqrt(2.0 * kPi);
}

/// Standard Gaussian distribution function, evaluated through erfc so the
/// tails keep full relative accuracy.
inline double normal_cdf(double t) {
    return 0.5 * std::erfc(-t / std::numbers::sqrt2);
}

/// 1 - Phi(t) without cancellation.
inline double normal_sf(double t) {
    return 0.5 * std::erfc(t / std::numbers::sqrt2);
}

/// Probabilists' Hermite polynomial H_q(t) via the three-term recurrence
/// H_{q+1}(t) = t H_q(t) - q H_{q-1}(t).
inline double hermite(int q, double t) {
    if (q < 0) throw std::invalid_argument("hermite: negative order");
    if (q > 64) throw std::invalid_argument("hermite: order above recurrence guard 64");
    double h0 = 1.0;
    if (q == 0) return h0;
    double h1 = t;
    for (int k = 1; k < q; ++k) {
        double h2 = t * h1 - static_cast<double>(k) * h0;
        h0 = h1;
        h1 = h2;
    }
    return h1;
}

// Bessel J0. Power series below x = 12, Hankel asymptotic expansion with
// optimal truncation beyond; absolute error stays under 1e-9 on |x| <= 1e3
// (the power-series/asymptotic crossover at 8 leaves ~4e-9 of truncation
// error, so the series is kept up to 12 where both branches are clean).
inline double bessel_j0(double x) {
    x = std::fabs(x);
    if (!(x <= 1e3)) throw std::invalid_argument("bessel_j0: |x| above supported range 1e3");
    if (x < 12.0) {
        const double q = 0.25 * x * x;
        double term = 1.0, sum = 1.0;
        for (int k = 1; k <= 80; ++k) {
            term *= -q / (static_cast<double>(k) * k);
            sum += term;
            if (std::fabs(term) < 1e-18 * std::max(1.0, std::fabs(sum))) break;
        }
        return sum;
    }
    // J0(x) ~ sqrt(2/(pi x)) [P cos(x - pi/4) - Q sin(x - pi/4)] with
    // P = 1 - t2 + t4 - ..., Q = -t1 + t3 - ..., t_m = ((2m-1)!!)^2 / (m! (8x)^m).
    const double ix = 1.0 / (8.0 * x);
    double p = 0.0, q = 0.0;
    double term = 1.0, prev = 1.0;
    for (int m = 0; m < 60; ++m) {
        if (m % 2 == 0) {
            p += ((m / 2) % 2 == 0) ? term : -term;
        } else {
            q += (((m - 1) / 2) % 2 == 0) ? -term : term;
        }
        const double next = term * (2.0 * m + 1.0) * (2.0 * m + 1.0) / (m + 1.0) * ix;
        if (std::fabs(next) > prev) break;  // smallest-term truncation
        prev = std::fabs(next);
        term = next;
    }
    const double chi = x - 0.25 * kPi;
    return std::sqrt(2.0 / (kPi * x)) * (p * std::cos(chi) - q * std::sin(chi));
}

/// p_N(x) = sum_{j=0}^{N} (-1)^j (-1)^N C(N,j) (2j+1)!/(j!)^2 x^j, the
/// polynomial behind the Hermite expansion of the planar Euclidean norm.
/// The swinging-factorial ratios are exact in double up to N = 32.
inline double swinging_polynomial(int n, double x) {
    if (n < 0 || n > 32) throw std::invalid_argument("swinging_polynomial: N outside [0,32]");
    // c_j = C(N,j) (2j+1)!/(j!)^2; Horner in x with signs folded in.
    std::vector<double> c(static_cast<size_t>(n) + 1);
    double binom = 1.0;   // C(N,j)
    double swing = 1.0;   // (2j+1)!/(j!)^2
    for (int j = 0; j <= n; ++j) {
        c[static_cast<size_t>(j)] = binom * swing;
        binom *= static_cast<double>(n - j) / (j + 1.0);
        swing *= 2.0 * (2.0 * j + 3.0) / (j + 1.0);
    }
    double acc = 0.0;
    for (int j = n; j >= 0; --j) {
        double sj = (j % 2 == 0) ? 1.0 : -1.0;
        acc = acc * x + sj * c[static_cast<size_t>(j)];
    }
    return (n % 2 == 0) ? acc : -acc;
}

/// Nodes and weights of N-point Gauss-Legendre quadrature on [a, b],
/// computed by Newton iteration on the Legendre recurrence.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

inline QuadratureRule gauss_legendre(int n, double a, double b) {
    QuadratureRule rule;
    rule.nodes.resize(static_cast<size_t>(n));
    rule.weights.resize(static_cast<size_t>(n));
    const int mid = (n + 1) / 2;
    const double xm = 0.5 * (b + a), xl = 0.5 * (b - a);
    for (int i = 0; i < mid; ++i) {
        double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            double dz = p0 / pp;
            z -= dz;
            if (std::fabs(dz) < 1e-15) break;
        }
        rule.nodes[static_cast<size_t>(i)] = xm - xl * z;
        rule.nodes[static_cast<size_t>(n - 1 - i)] = xm + xl * z;
        double w = 2.0 * xl / ((1.0 - z * z) * pp * pp);
        rule.weights[static_cast<size_t>(i)] = w;
        rule.weights[static_cast<size_t>(n - 1 - i)] = w;
    }
    return rule;
}

/// Integrate f over [a, b] with a composite 24-point Gauss-Legendre rule.
template <typename F>
double integrate(F&& f, double a, double b, int panels = 8) {
    static const QuadratureRule unit = gauss_legendre(24, 0.0, 1.0);
    double total = 0.0;
    const double width = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
        const double lo = a + p * width;
        for (size_t i = 0; i < unit.nodes.size(); ++i) {
            total += width * unit.weights[i] * f(lo + width * unit.nodes[i]);
        }
    }
    return total;
}

}  // namespace arw
