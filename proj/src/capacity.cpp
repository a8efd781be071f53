#include "scfec/capacity.hpp"

#include "scfec/math_util.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace scfec {

double bicm_capacity(const Constellation& c, double snr_db) {
    std::vector<double> mi = c.bit_mutual_info(snr_db);
    return std::accumulate(mi.begin(), mi.end(), 0.0);
}

double ber_constrained_bicm_capacity(const Constellation& c, double snr_db, double target_ber) {
    if (!(target_ber > 0.0) || !(target_ber < 0.5))
        throw std::invalid_argument("ber_constrained_bicm_capacity: target outside (0, 0.5)");
    return bicm_capacity(c, snr_db) / (1.0 - h2(target_ber));
}

double bsc_capacity_avg(const std::vector<double>& p) {
    if (p.empty()) throw std::invalid_argument("bsc_capacity_avg: empty p");
    double sum = 0.0;
    for (double v : p) {
        if (v < 0.0 || v > 0.5) throw std::invalid_argument("bsc_capacity_avg: p outside [0, 0.5]");
        sum += v;
    }
    return 1.0 - h2(sum / double(p.size()));
}

namespace {

// Bisection on a nondecreasing function of SNR.
template <typename F>
double solve_increasing(F&& f, double target, double lo, double hi) {
    if (f(hi) < target) throw std::invalid_argument("capacity target unreachable in bracket");
    for (int it = 0; it < 60 && hi - lo > 1e-4; ++it) {
        double mid = 0.5 * (lo + hi);
        (f(mid) < target ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

double snr_for_bicm_capacity(const Constellation& c, double target_bits, double lo_db, double hi_db) {
    return solve_increasing([&](double s) { return bicm_capacity(c, s); }, target_bits, lo_db, hi_db);
}

double snr_for_bsc_capacity(const Constellation& c, double rate, double lo_db, double hi_db) {
    auto cap = [&](double s) { return bsc_capacity_avg(c.bit_crossover_probs(s)); };
    return solve_increasing(cap, rate, lo_db, hi_db);
}

}  // namespace scfec
