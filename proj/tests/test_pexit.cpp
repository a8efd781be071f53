#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "scfec/base_matrix.hpp"
#include "scfec/bitmapper.hpp"
#include "scfec/constellation.hpp"
#include "scfec/pexit.hpp"
#include "scfec/threshold.hpp"

#include <algorithm>
#include <cmath>

using namespace scfec;

namespace {

BaseMatrix example2(CouplingMode mode, int T = 20) {
    return BaseMatrix({{2, 2}, {1, 1}}, 1, 2, T, mode);
}

double example2_threshold(CouplingMode mode, double lo, double hi) {
    Constellation qpsk = Constellation::pm_qam(2);
    BaseMatrix base = example2(mode);
    BitMapper uni = baseline_mapper(4, base.cols(), "scldpc");
    PexitConfig cfg;
    cfg.W = 10;
    cfg.l_max = 7;
    ThresholdOptions opt;
    opt.lo_db = lo;
    opt.hi_db = hi;
    auto res = find_threshold(
        [&](double s) { return pexit_ber(base, qpsk, uni, s, cfg); }, opt);
    REQUIRE(res.bracket_ok);
    return res.snr_db;
}

}  // namespace

TEST_CASE("channel mixtures: weights, merging, validation") {
    Constellation c16 = Constellation::pm_qam(4);
    ChannelProfile prof = make_channel_profile(c16, 9.0);

    BitMapper uni = baseline_mapper(8, 6, "scgldpc");
    auto mix = channel_mi_per_column(uni, prof);
    REQUIRE(static_cast<int>(mix.size()) == 6);
    // Two protection levels -> two merged branches of weight 1/2 each.
    for (const auto& col : mix) {
        REQUIRE(col.size() == 2);
        for (const auto& b : col) CHECK(b.weight == doctest::Approx(0.5));
    }
    // Uniform columns all identical.
    CHECK(mix[0][0].mi == doctest::Approx(mix[5][0].mi));

    BitMapper bad = uni;
    bad.at(0, 0) = 0.9;  // break the column sum
    CHECK_THROWS_AS(channel_mi_per_column(bad, prof), std::invalid_argument);
}

TEST_CASE("one-hot column on the best bit beats the uniform column") {
    Constellation c16 = Constellation::pm_qam(4);
    ChannelProfile prof = make_channel_profile(c16, 8.0);
    int best = static_cast<int>(std::max_element(prof.mi.begin(), prof.mi.end()) - prof.mi.begin());

    BitMapper uni = baseline_mapper(8, 1, "scgldpc");
    BitMapper hot = uni;
    for (int i = 0; i < 8; ++i) hot.at(i, 0) = (i == best) ? 1.0 : 0.0;

    auto mu = channel_mi_per_column(uni, prof)[0];
    auto mh = channel_mi_per_column(hot, prof)[0];
    auto mean_mi = [](const ColumnMixture& m) {
        double s = 0.0;
        for (const auto& b : m) s += b.weight * b.mi;
        return s;
    };
    CHECK(mean_mi(mh) > mean_mi(mu));
}

TEST_CASE("pexit: high SNR drives every position below target") {
    Constellation qpsk = Constellation::pm_qam(2);
    for (auto mode : {CouplingMode::terminated, CouplingMode::tailbiting}) {
        BaseMatrix base = example2(mode);
        BitMapper uni = baseline_mapper(4, base.cols(), "scldpc");
        PexitConfig cfg;
        cfg.W = 10;
        cfg.l_max = 7;
        double ber = pexit_ber(base, qpsk, uni, 6.0, cfg);
        CHECK(ber < 1e-12);
    }
}

TEST_CASE("pexit thresholds reproduce the windowed decoding example") {
    double term = example2_threshold(CouplingMode::terminated, -0.5, 2.5);
    double tail = example2_threshold(CouplingMode::tailbiting, -0.5, 2.5);
    CHECK(std::abs(term - 0.82) <= 0.1);
    CHECK(std::abs(tail - 1.19) <= 0.1);
    CHECK(term < tail);
}

TEST_CASE("pexit degradation: worse channel never helps") {
    Constellation qpsk = Constellation::pm_qam(2);
    BaseMatrix base = example2(CouplingMode::terminated);
    BitMapper uni = baseline_mapper(4, base.cols(), "scldpc");
    PexitConfig cfg;
    cfg.W = 10;
    cfg.l_max = 7;
    double prev = 1.0;
    for (double snr = 0.0; snr <= 2.5; snr += 0.25) {
        double ber = pexit_ber(base, qpsk, uni, snr, cfg);
        CHECK(ber <= prev + 1e-12);
        prev = ber;
    }
}

TEST_CASE("terminated wave: chain ends converge before the middle") {
    Constellation qpsk = Constellation::pm_qam(2);
    BaseMatrix base = example2(CouplingMode::terminated);
    BitMapper uni = baseline_mapper(4, base.cols(), "scldpc");
    PexitConfig cfg;
    cfg.W = 10;
    cfg.l_max = 7;
    // Slightly above the terminated threshold.
    ChannelProfile prof = make_channel_profile(qpsk, 0.87);
    auto channels = channel_mi_per_column(uni, prof);
    auto res = pexit_window_run(base, channels, cfg);
    int T = base.spatial_len();
    double mid = *std::max_element(res.position_ber.begin() + T / 4,
                                   res.position_ber.end() - T / 4);
    CHECK(res.position_ber.front() <= 1e-5);
    CHECK(res.position_ber.back() <= 1e-5);
    CHECK(res.position_ber.front() <= mid);
    CHECK(res.position_ber.back() <= mid);
}

TEST_CASE("uniform allocation over a single protection level is allocation-invariant") {
    // PM-QPSK has one protection level, so any column-stochastic A yields the
    // same analysis as the uniform one.
    Constellation qpsk = Constellation::pm_qam(2);
    BaseMatrix base = example2(CouplingMode::tailbiting);
    BitMapper uni = baseline_mapper(4, base.cols(), "scldpc");
    BitMapper skew = uni;
    for (int j = 0; j < skew.n_cols; ++j) {
        skew.at(0, j) = 0.7;
        skew.at(1, j) = 0.3;
        skew.at(2, j) = 0.0;
        skew.at(3, j) = 0.0;
    }
    PexitConfig cfg;
    cfg.W = 10;
    cfg.l_max = 7;
    double a = pexit_ber(base, qpsk, uni, 1.3, cfg);
    double b = pexit_ber(base, qpsk, skew, 1.3, cfg);
    CHECK(a == doctest::Approx(b).epsilon(1e-12));
}

TEST_CASE("pexit rejects W >= T and bad mixtures") {
    Constellation qpsk = Constellation::pm_qam(2);
    BaseMatrix base = example2(CouplingMode::terminated, 5);
    BitMapper uni = baseline_mapper(4, base.cols(), "scldpc");
    PexitConfig cfg;
    cfg.W = 5;
    cfg.l_max = 7;
    CHECK_THROWS_AS(pexit_ber(base, qpsk, uni, 1.0, cfg), std::invalid_argument);
}
