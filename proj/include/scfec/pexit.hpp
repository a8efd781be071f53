#pragma once

#include "scfec/base_matrix.hpp"
#include "scfec/bitmapper.hpp"
#include "scfec/constellation.hpp"

#include <vector>

namespace scfec {

/// Channel seen by a protograph column: a mixture of consistent-Gaussian bit
/// channels, one branch per protection level with allocation weight a_{i,j}.
struct MixtureBranch {
    double weight;
    double mi;
};
using ColumnMixture = std::vector<MixtureBranch>;

/// Builds the per-column mixtures from an allocation matrix and a channel
/// profile; branches with equal MI merge. Columns of A must be stochastic.
std::vector<ColumnMixture> channel_mi_per_column(const BitMapper& mapper,
                                                 const ChannelProfile& profile);

struct PexitConfig {
    int W = 5;
    int l_max = 10;
    int start_position = -1;  // tailbiting window start; -1 means memory ms
    bool record_trajectory = false;
};

struct PexitTrajectoryPoint {
    int window_index;
    int position;
    double ber;
};

struct PexitResult {
    std::vector<double> position_ber;  // targeted-symbol BER, frozen per position
    double avg_ber = 0.0;
    std::vector<PexitTrajectoryPoint> trajectory;
};

/// Protograph EXIT density evolution under the sliding-window schedule of the
/// finite-length decoder. Each mixture branch runs through the VN update
/// separately; branch outputs combine as error probabilities weighted by the
/// allocation, then convert back to a single message MI.
PexitResult pexit_window_run(const BaseMatrix& base, const std::vector<ColumnMixture>& channels,
                             const PexitConfig& cfg);

/// Predicted BER as a function of SNR for one code / constellation /
/// allocation, ready for threshold bisection.
double pexit_ber(const BaseMatrix& base, const Constellation& c, const BitMapper& mapper,
                 double snr_db, const PexitConfig& cfg);

}  // namespace scfec
