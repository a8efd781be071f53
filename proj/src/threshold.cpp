#include "scfec/threshold.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace scfec {

ThresholdResult find_threshold(const std::function<double(double)>& ber_of_snr_db,
                               const ThresholdOptions& opt) {
    if (!(opt.hi_db > opt.lo_db) || !(opt.tol_db > 0.0))
        throw std::invalid_argument("find_threshold: bad bracket or tolerance");

    ThresholdResult res;
    double lo = opt.lo_db, hi = opt.hi_db;
    double ber_lo = ber_of_snr_db(lo);
    double ber_hi = ber_of_snr_db(hi);
    if (!(ber_lo >= opt.target_ber) || !(ber_hi <= opt.target_ber)) {
        res.bracket_ok = false;
        res.snr_db = std::nan("");
        return res;
    }
    res.bracket_ok = true;

    if (opt.monotonicity_samples > 1) {
        // Scan for increases and pick the widest (largest SNR) crossing so a
        // non-monotone analysis still yields a conservative threshold.
        int n = opt.monotonicity_samples;
        std::vector<double> snr(n), ber(n);
        for (int i = 0; i < n; ++i) {
            snr[i] = lo + (hi - lo) * i / (n - 1);
            ber[i] = (i == 0) ? ber_lo : (i == n - 1 ? ber_hi : ber_of_snr_db(snr[i]));
        }
        for (int i = 1; i < n; ++i)
            if (ber[i] > ber[i - 1] * (1.0 + 1e-9)) res.monotone_ok = false;
        for (int i = n - 1; i >= 1; --i)
            if (ber[i - 1] >= opt.target_ber && ber[i] <= opt.target_ber) {
                lo = snr[i - 1];
                hi = snr[i];
                break;
            }
    }

    while (hi - lo > opt.tol_db) {
        double mid = 0.5 * (lo + hi);
        if (ber_of_snr_db(mid) >= opt.target_ber)
            lo = mid;
        else
            hi = mid;
    }
    res.snr_db = 0.5 * (lo + hi);
    return res;
}

}  // namespace scfec
