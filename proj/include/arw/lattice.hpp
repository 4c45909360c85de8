#pragma once

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdint>
#include <numeric>
#include <vector>

#include "arw/errors.hpp"
#include "arw/special_functions.hpp"

namespace arw {

/// One lattice point of the frequency set: x1^2 + x2^2 = n.
struct LatticePoint {
    long long x1 = 0;
    long long x2 = 0;

    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

/// Exact integer square root (largest s with s*s <= v).
inline long long isqrt(long long v) {
    if (v < 0) return -1;
    auto s = static_cast<long long>(std::sqrt(static_cast<double>(v)));
    while (s > 0 && s * s > v) --s;
    while ((s + 1) * (s + 1) <= v) ++s;
    return s;
}

inline bool is_perfect_square(long long v) {
    if (v < 0) return false;
    const long long s = isqrt(v);
    return s * s == v;
}

/// The frequency set of an energy level: every integer pair of squared norm
/// n, its positive half, and the arithmetic scalars every formula feeds on.
struct FrequencySet {
    long long n = 0;
    std::vector<LatticePoint> points;    // all of the set, lexicographic
    std::vector<LatticePoint> half_set;  // x2 > 0, plus (sqrt(n), 0) for square n
    int multiplicity = 0;
    double mu4 = 0.0;                    // fourth Fourier coefficient of the angular measure
    long long mu4_numerator = 0;         // exact value as mu4_numerator / (n^2 multiplicity)
    double energy = 0.0;                 // 4 pi^2 n

    bool degenerate() const { return std::fabs(1.0 - mu4) < 1e-9 || std::fabs(1.0 + mu4) < 1e-9; }
};

/// Enumerate the frequency set by scanning x1 in [-floor(sqrt n), floor(sqrt n)]
/// and testing n - x1^2 for squareness. Throws NotSumOfTwoSquares when empty.
inline FrequencySet enumerate_frequencies(long long n) {
    if (n < 1) throw std::invalid_argument("enumerate_frequencies: n must be >= 1");
    FrequencySet fs;
    fs.n = n;
    const long long r = isqrt(n);
    for (long long x1 = -r; x1 <= r; ++x1) {
        const long long rem = n - x1 * x1;
        const long long s = isqrt(rem);
        if (s * s != rem) continue;
        if (s == 0) {
            fs.points.push_back({x1, 0});
        } else {
            fs.points.push_back({x1, -s});
            fs.points.push_back({x1, s});
        }
    }
    if (fs.points.empty()) throw NotSumOfTwoSquares(n);
    std::sort(fs.points.begin(), fs.points.end());
    fs.multiplicity = static_cast<int>(fs.points.size());
    for (const auto& p : fs.points) {
        if (p.x2 > 0) fs.half_set.push_back(p);
    }
    if (r * r == n) fs.half_set.push_back({r, 0});
    std::sort(fs.half_set.begin(), fs.half_set.end());

    // Re[(x1 + i x2)^4] = x1^4 - 6 x1^2 x2^2 + x2^4; the imaginary part
    // vanishes by the sign symmetry of the set.
    long long num = 0;
    for (const auto& p : fs.points) {
        const long long a = p.x1 * p.x1, b = p.x2 * p.x2;
        num += a * a - 6 * a * b + b * b;
    }
    fs.mu4_numerator = num;
    fs.mu4 = static_cast<double>(num) /
             (static_cast<double>(n) * static_cast<double>(n) * fs.multiplicity);
    fs.energy = 4.0 * kPi * kPi * static_cast<double>(n);
    return fs;
}

/// mu_hat(4) recomputed from the points, asserting that the imaginary part
/// of the defining sum is below 1e-12 of its scale.
inline double mu_hat_4(const FrequencySet& fs) {
    double re = 0.0, im = 0.0;
    for (const auto& p : fs.points) {
        const auto x = static_cast<double>(p.x1), y = static_cast<double>(p.x2);
        // (x + iy)^4
        re += x * x * x * x - 6.0 * x * x * y * y + y * y * y * y;
        im += 4.0 * x * x * x * y - 4.0 * x * y * y * y;
    }
    const double scale = static_cast<double>(fs.n) * static_cast<double>(fs.n) * fs.multiplicity;
    if (std::fabs(im) / scale >= 1e-12) {
        throw std::logic_error("mu_hat_4: imaginary part failed to cancel");
    }
    return re / scale;
}

/// Exact sum over the set of x1^p x2^q, 128-bit accumulation with an
/// overflow check on every multiply.
inline long long moment_sum(const FrequencySet& fs, int p, int q) {
    if (p < 0 || q < 0) throw std::invalid_argument("moment_sum: negative exponent");
    __int128 acc = 0;
    for (const auto& pt : fs.points) {
        __int128 term = 1;
        auto mul_checked = [](__int128 a, long long b) {
            __int128 out;
            if (__builtin_mul_overflow(a, static_cast<__int128>(b), &out)) throw MomentOverflow();
            return out;
        };
        for (int i = 0; i < p; ++i) term = mul_checked(term, pt.x1);
        for (int i = 0; i < q; ++i) term = mul_checked(term, pt.x2);
        if (__builtin_add_overflow(acc, term, &acc)) throw MomentOverflow();
    }
    if (acc > static_cast<__int128>(INT64_MAX) || acc < static_cast<__int128>(INT64_MIN)) {
        throw MomentOverflow();
    }
    return static_cast<long long>(acc);
}

/// |S_m(n)|: m-tuples of frequencies summing to zero, by exhaustive
/// enumeration of the first m-1 slots and a sorted lookup of the complement.
inline long long spectral_correlations(const FrequencySet& fs, int m) {
    if (m != 3 && m != 4) throw std::invalid_argument("spectral_correlations: m must be 3 or 4");
    const auto& pts = fs.points;  // sorted, so binary search is valid
    auto contains = [&pts](long long x1, long long x2) {
        return std::binary_search(pts.begin(), pts.end(), LatticePoint{x1, x2});
    };
    long long count = 0;
    if (m == 3) {
        for (const auto& a : pts)
            for (const auto& b : pts)
                if (contains(-(a.x1 + b.x1), -(a.x2 + b.x2))) ++count;
    } else {
        for (const auto& a : pts)
            for (const auto& b : pts)
                for (const auto& c : pts)
                    if (contains(-(a.x1 + b.x1 + c.x1), -(a.x2 + b.x2 + c.x2))) ++count;
    }
    return count;
}

}  // namespace arw
