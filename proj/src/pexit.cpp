#include "scfec/pexit.hpp"

#include "scfec/jfun.hpp"
#include "scfec/math_util.hpp"
#include "scfec/window.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace scfec {

std::vector<ColumnMixture> channel_mi_per_column(const BitMapper& mapper,
                                                 const ChannelProfile& profile) {
    mapper.validate();
    if (static_cast<int>(profile.mi.size()) != mapper.m)
        throw std::invalid_argument("channel_mi_per_column: dimension mismatch");
    std::vector<ColumnMixture> out(mapper.n_cols);
    for (int j = 0; j < mapper.n_cols; ++j) {
        ColumnMixture mix;
        for (int i = 0; i < mapper.m; ++i) {
            double w = mapper.at(i, j);
            if (w <= 0.0) continue;
            bool merged = false;
            for (auto& b : mix)
                if (std::abs(b.mi - profile.mi[i]) < 1e-12) {
                    b.weight += w;
                    merged = true;
                    break;
                }
            if (!merged) mix.push_back({w, profile.mi[i]});
        }
        out[j] = std::move(mix);
    }
    return out;
}

namespace {

struct Entry {
    int row, col, mult;
};

// Error probability of a consistent-Gaussian message with MI i under the
// all-zero convention.
double mi_to_pe(double mi) { return qfunc(jinv(std::min(mi, jfun_max_mi())) / 2.0); }

// The branch-combination rule: mix error probabilities, read back as one
// consistent-Gaussian message.
double pe_to_mi(double pe) {
    if (pe <= 0.0) return jfun_max_mi();
    if (pe >= 0.5) return 0.0;
    return jfun(2.0 * qfunc_inv(pe));
}

}  // namespace

PexitResult pexit_window_run(const BaseMatrix& base, const std::vector<ColumnMixture>& channels,
                             const PexitConfig& cfg) {
    const int T = base.spatial_len();
    const int kp = base.kp();
    const int jp = base.jp();
    if (static_cast<int>(channels.size()) != base.cols())
        throw std::invalid_argument("pexit: one channel mixture per protograph column required");
    if (cfg.W >= T) throw std::invalid_argument("pexit: W >= T");
    for (const auto& mix : channels) {
        double sum = 0.0;
        for (const auto& b : mix) sum += b.weight;
        if (std::abs(sum - 1.0) > 1e-9)
            throw std::invalid_argument("pexit: mixture weights must sum to 1");
    }

    // Flatten nonzero protograph entries; parallel edges ride along as
    // multiplicities (an entry p contributes p statistically identical edges).
    std::vector<Entry> entries;
    std::vector<std::vector<int>> col_entries(base.cols()), row_entries(base.rows());
    for (int r = 0; r < base.rows(); ++r)
        for (int c = 0; c < base.cols(); ++c)
            if (int p = base.entry(r, c); p > 0) {
                col_entries[c].push_back(static_cast<int>(entries.size()));
                row_entries[r].push_back(static_cast<int>(entries.size()));
                entries.push_back({r, c, p});
            }

    const std::size_t ne = entries.size();
    std::vector<double> ivc(ne), icv(ne, 0.0);

    // Channel-only initial message per column.
    std::vector<double> init_mi(base.cols());
    for (int c = 0; c < base.cols(); ++c) {
        double pe = 0.0;
        for (const auto& b : channels[c]) pe += b.weight * mi_to_pe(b.mi);
        init_mi[c] = pe_to_mi(pe);
    }
    for (std::size_t e = 0; e < ne; ++e) ivc[e] = init_mi[entries[e].col];

    PexitResult res;
    res.position_ber.assign(T, 0.0);
    std::vector<std::uint8_t> decided(T, 0);

    int start = cfg.start_position >= 0 ? cfg.start_position : base.memory();
    auto targets = window_targets(base.mode(), T, cfg.W, start);
    const int cn_pos_count = base.rows() / jp;

    auto column_app_pe = [&](int c) {
        double s = 0.0;
        for (int e : col_entries[c]) {
            double v = jinv(icv[e]);
            s += entries[e].mult * v * v;
        }
        double pe = 0.0;
        for (const auto& b : channels[c]) {
            double sc = jinv(b.mi);
            pe += b.weight * qfunc(std::sqrt(s + sc * sc) / 2.0);
        }
        return pe;
    };

    for (std::size_t window_index = 0; window_index < targets.size(); ++window_index) {
        int t = targets[window_index];
        auto vn_pos = window_vn_positions(base.mode(), T, cfg.W, t);
        auto cn_pos = window_cn_positions(base.mode(), T, cfg.W, t, cn_pos_count);
        std::vector<int> active_cols, active_rows;
        for (int p : vn_pos)
            if (!decided[p])
                for (int c = p * kp; c < (p + 1) * kp; ++c) active_cols.push_back(c);
        for (int p : cn_pos)
            for (int r = p * jp; r < (p + 1) * jp; ++r) active_rows.push_back(r);

        // Pipeline fill: observations stream in one position at a time, so the
        // decoder has already run l_max iterations on each growing prefix of
        // the first window before the first decision is due.
        int rounds = (window_index == 0) ? cfg.W : 1;
        for (int iter = 0; iter < rounds * cfg.l_max; ++iter) {
            // CN update.
            for (int r : active_rows) {
                double total = 0.0;
                for (int e : row_entries[r]) {
                    double v = jinv(1.0 - ivc[e]);
                    total += entries[e].mult * v * v;
                }
                for (int e : row_entries[r]) {
                    double v = jinv(1.0 - ivc[e]);
                    double s = std::max(total - v * v, 0.0);
                    icv[e] = 1.0 - jfun(std::sqrt(s));
                }
            }
            // VN update with per-branch propagation.
            for (int c : active_cols) {
                double total = 0.0;
                for (int e : col_entries[c]) {
                    double v = jinv(icv[e]);
                    total += entries[e].mult * v * v;
                }
                for (int e : col_entries[c]) {
                    double v = jinv(icv[e]);
                    double s = std::max(total - v * v, 0.0);
                    double pe = 0.0;
                    for (const auto& b : channels[c]) {
                        double sc = jinv(b.mi);
                        pe += b.weight * qfunc(std::sqrt(s + sc * sc) / 2.0);
                    }
                    ivc[e] = pe_to_mi(pe);
                }
            }
        }

        double pos_pe = 0.0;
        for (int c = t * kp; c < (t + 1) * kp; ++c) pos_pe += column_app_pe(c);
        pos_pe /= kp;
        res.position_ber[t] = pos_pe;
        if (window_visit_is_final(base.mode(), cfg.W, window_index)) decided[t] = 1;
        if (cfg.record_trajectory)
            res.trajectory.push_back({static_cast<int>(window_index), t, pos_pe});
    }

    double avg = 0.0;
    for (double v : res.position_ber) avg += v;
    res.avg_ber = avg / T;
    return res;
}

double pexit_ber(const BaseMatrix& base, const Constellation& c, const BitMapper& mapper,
                 double snr_db, const PexitConfig& cfg) {
    ChannelProfile prof = make_channel_profile(c, snr_db);
    auto channels = channel_mi_per_column(mapper, prof);
    return pexit_window_run(base, channels, cfg).avg_ber;
}

}  // namespace scfec
