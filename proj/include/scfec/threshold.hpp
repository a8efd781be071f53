#pragma once

#include <functional>

namespace scfec {

struct ThresholdOptions {
    double target_ber = 1e-5;
    double lo_db = 0.0;
    double hi_db = 6.0;
    double tol_db = 0.01;
    /// Coarse pre-scan points used to detect non-monotone behavior; 0 skips
    /// the scan (pure endpoint-validated bisection).
    int monotonicity_samples = 0;
};

struct ThresholdResult {
    double snr_db = 0.0;
    bool bracket_ok = false;   // target BER crossed inside the bracket
    bool monotone_ok = true;   // sampled BER was nonincreasing in SNR
};

/// Smallest SNR where a nonincreasing BER(SNR) analysis reaches the target,
/// located by bisection to tol_db. If the sampled curve is non-monotone the
/// result carries monotone_ok = false and the widest (largest-SNR) crossing.
ThresholdResult find_threshold(const std::function<double(double)>& ber_of_snr_db,
                               const ThresholdOptions& opt);

}  // namespace scfec
