#pragma once

#include "scfec/constellation.hpp"

#include <vector>

namespace scfec {

/// BICM capacity sum_i I(b_i; r) in bits per 4D symbol.
double bicm_capacity(const Constellation& c, double snr_db);

/// BICM capacity scaled by the rate adjustment 1/(1 - h2(target_ber)) for a
/// residual bit error rate target, applied on the code-rate axis.
double ber_constrained_bicm_capacity(const Constellation& c, double snr_db, double target_ber);

/// Capacity of the BSC with averaged crossover probability, bits per coded bit.
double bsc_capacity_avg(const std::vector<double>& p);

/// Smallest SNR (dB) where bicm_capacity reaches target_bits per 4D symbol.
double snr_for_bicm_capacity(const Constellation& c, double target_bits,
                             double lo_db = -10.0, double hi_db = 40.0);

/// Smallest SNR (dB) where 1 - h2(mean crossover) reaches the code rate.
double snr_for_bsc_capacity(const Constellation& c, double rate,
                            double lo_db = -10.0, double hi_db = 40.0);

}  // namespace scfec
