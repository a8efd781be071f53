#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace scfec {

inline constexpr double kPi = 3.14159265358979323846;

// Power ratio conversions (10*log10 convention throughout).
inline double db_to_lin(double db) { return std::pow(10.0, db / 10.0); }
inline double lin_to_db(double lin) { return 10.0 * std::log10(lin); }

/// Binary entropy in bits, with h2(0) = h2(1) = 0.
inline double h2(double p) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("h2: p outside [0,1]");
    if (p == 0.0 || p == 1.0) return 0.0;
    return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

/// Gaussian tail probability Q(x) = P(N(0,1) > x).
inline double qfunc(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

/// Inverse of qfunc on (0, 1).
double qfunc_inv(double p);

/// phi(lambda; t) = 1 - sum_{i=0}^{t} lambda^i/i! * exp(-lambda), the upper
/// tail of a Poisson(lambda) variable beyond t. Evaluated through the
/// regularized incomplete gamma function so large lambda stays stable.
double poisson_tail(double lambda, int t);

struct GaussHermite {
    std::vector<double> nodes;    // roots of H_n
    std::vector<double> weights;  // weights for integral f(x) exp(-x^2) dx
};

/// Gauss-Hermite rule of order n (physicists' weight exp(-x^2)).
const GaussHermite& gauss_hermite(int n);

/// Expectation of f under N(mean, var) using an n-point Gauss-Hermite rule.
template <typename F>
double gauss_hermite_mean(double mean, double var, int n, F&& f) {
    const GaussHermite& gh = gauss_hermite(n);
    const double scale = std::sqrt(2.0 * var);
    double acc = 0.0;
    for (std::size_t k = 0; k < gh.nodes.size(); ++k)
        acc += gh.weights[k] * f(mean + scale * gh.nodes[k]);
    return acc / std::sqrt(kPi);
}

/// Running bit-error tally with the standard binomial error estimate.
struct ErrorCounter {
    std::uint64_t errors = 0;
    std::uint64_t total = 0;

    void add(std::uint64_t err, std::uint64_t n) {
        errors += err;
        total += n;
    }
    double rate() const { return total ? double(errors) / double(total) : 0.0; }
    double std_error() const {
        if (total == 0) return 0.0;
        double p = rate();
        return std::sqrt(p * (1.0 - p) / double(total));
    }
};

/// FNV-1a 64-bit hash, used for deterministic config digests.
inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

/// Derives a decorrelated stream seed from a master seed (splitmix64 step).
inline std::uint64_t stream_seed(std::uint64_t master, std::uint64_t stream) {
    std::uint64_t z = master + 0x9e3779b97f4a7c15ull * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

}  // namespace scfec
