#include "scfec/constellation.hpp"

#include "scfec/math_util.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace scfec {

namespace {

bool is_pow2(int x) { return x > 0 && (x & (x - 1)) == 0; }

int ilog2(int x) {
    int b = 0;
    while ((1 << b) < x) ++b;
    return b;
}

// Stable log(sum(exp(v))) over the values accumulated so far.
struct LogSum {
    double max = -std::numeric_limits<double>::infinity();
    double acc = 0.0;
    void add(double v) {
        if (v > max) {
            acc = acc * std::exp(max - v) + 1.0;
            max = v;
        } else {
            acc += std::exp(v - max);
        }
    }
    double value() const { return max + std::log(acc); }
};

}  // namespace

Constellation Constellation::pm_qam(int order_per_dim) {
    if (!is_pow2(order_per_dim) || order_per_dim < 2)
        throw std::invalid_argument("pm_qam: order per dimension must be a power of two >= 2");
    Constellation c;
    c.pam_order_ = order_per_dim;
    c.bits_per_dim_ = ilog2(order_per_dim);
    c.m_ = 4 * c.bits_per_dim_;

    // Levels +-1, +-3, ... scaled so that two real dimensions carry unit
    // energy per polarization: delta^2 (L^2-1)/3 = 1/2.
    const int L = order_per_dim;
    const double delta = std::sqrt(3.0 / (2.0 * (double(L) * L - 1.0)));
    c.levels_.resize(L);
    c.labels_.resize(L);
    for (int i = 0; i < L; ++i) {
        c.levels_[i] = delta * (2 * i - (L - 1));
        // Binary-reflected Gray code, enumerated from the positive end so
        // that bit 0 sits on positive coordinates (positive LLR <=> bit 0).
        int k = L - 1 - i;
        c.labels_[i] = static_cast<std::uint32_t>(k ^ (k >> 1));
    }
    return c;
}

std::uint32_t Constellation::pam_label(int level_index) const { return labels_[level_index]; }

Symbol4D Constellation::modulate(const std::uint8_t* bits) const {
    Symbol4D s{};
    for (int d = 0; d < 4; ++d) {
        std::uint32_t gray = 0;
        for (int b = 0; b < bits_per_dim_; ++b)
            gray = (gray << 1) | (bits[d * bits_per_dim_ + b] & 1u);
        // Invert the Gray map by prefix XOR, then mirror (labels run from the
        // positive end).
        std::uint32_t k = gray;
        for (std::uint32_t shift = 1; shift < static_cast<std::uint32_t>(bits_per_dim_); shift <<= 1)
            k ^= k >> shift;
        s[d] = levels_[pam_order_ - 1 - static_cast<int>(k)];
    }
    return s;
}

int Constellation::detect_level(double r) const {
    // Uniformly spaced levels: nearest index by rounding.
    const double delta = levels_[1] - levels_[0];
    int idx = static_cast<int>(std::lround((r - levels_[0]) / delta));
    return std::clamp(idx, 0, pam_order_ - 1);
}

void Constellation::hard_detect(const Symbol4D& r, std::uint8_t* bits) const {
    for (int d = 0; d < 4; ++d) {
        std::uint32_t label = labels_[detect_level(r[d])];
        for (int b = 0; b < bits_per_dim_; ++b)
            bits[d * bits_per_dim_ + b] = (label >> (bits_per_dim_ - 1 - b)) & 1u;
    }
}

double Constellation::noise_sigma_per_dim(double snr_db) {
    return std::sqrt(1.0 / (2.0 * db_to_lin(snr_db)));
}

Symbol4D Constellation::add_noise(const Symbol4D& s, double snr_db, std::mt19937_64& rng) const {
    std::normal_distribution<double> n(0.0, noise_sigma_per_dim(snr_db));
    Symbol4D r;
    for (int d = 0; d < 4; ++d) r[d] = s[d] + n(rng);
    return r;
}

void Constellation::llr_per_dim(double r, double sigma2, double* out) const {
    const double inv2s2 = 1.0 / (2.0 * sigma2);
    for (int b = 0; b < bits_per_dim_; ++b) {
        LogSum num, den;  // bit 0 vs bit 1 subsets
        for (int i = 0; i < pam_order_; ++i) {
            double d = r - levels_[i];
            double metric = -d * d * inv2s2;
            if ((labels_[i] >> (bits_per_dim_ - 1 - b)) & 1u)
                den.add(metric);
            else
                num.add(metric);
        }
        out[b] = num.value() - den.value();
    }
}

void Constellation::llr(const Symbol4D& r, double snr_db, double* out) const {
    const double sigma2 = 1.0 / (2.0 * db_to_lin(snr_db));
    for (int d = 0; d < 4; ++d) llr_per_dim(r[d], sigma2, out + d * bits_per_dim_);
}

std::vector<double> Constellation::bit_crossover_probs(double snr_db) const {
    const double sigma = noise_sigma_per_dim(snr_db);
    const int L = pam_order_;
    const double delta = (L > 1) ? levels_[1] - levels_[0] : 1.0;

    // P(detect level j | sent level i) over the interval decision regions.
    auto region_prob = [&](int i, int j) {
        double plo = (j == 0) ? 1.0 : qfunc((levels_[j] - 0.5 * delta - levels_[i]) / sigma);
        double phi = (j == L - 1) ? 0.0 : qfunc((levels_[j] + 0.5 * delta - levels_[i]) / sigma);
        return plo - phi;
    };

    std::vector<double> per_dim(bits_per_dim_, 0.0);
    for (int b = 0; b < bits_per_dim_; ++b) {
        double p = 0.0;
        for (int i = 0; i < L; ++i)
            for (int j = 0; j < L; ++j) {
                if (j == i) continue;
                std::uint32_t diff = labels_[i] ^ labels_[j];
                if ((diff >> (bits_per_dim_ - 1 - b)) & 1u) p += region_prob(i, j);
            }
        per_dim[b] = p / L;
    }

    std::vector<double> out(m_);
    for (int i = 0; i < m_; ++i) out[i] = per_dim[i % bits_per_dim_];
    return out;
}

std::vector<double> Constellation::bit_mutual_info(double snr_db) const {
    const double sigma2 = 1.0 / (2.0 * db_to_lin(snr_db));
    const double sigma = std::sqrt(sigma2);
    const int L = pam_order_;
    const int gh_order = 96;

    std::vector<double> llrs(bits_per_dim_);
    std::vector<double> per_dim(bits_per_dim_, 0.0);
    const GaussHermite& gh = gauss_hermite(gh_order);
    const double inv_sqrt_pi = 1.0 / std::sqrt(kPi);

    // I_i = 1 - E[log2(1 + exp(-(1-2b) L_i))] with the exact LLR; average
    // over sent levels and the Gaussian noise via Gauss-Hermite.
    for (int i = 0; i < L; ++i) {
        for (std::size_t k = 0; k < gh.nodes.size(); ++k) {
            double r = levels_[i] + std::sqrt(2.0) * sigma * gh.nodes[k];
            llr_per_dim(r, sigma2, llrs.data());
            double w = gh.weights[k] * inv_sqrt_pi / L;
            for (int b = 0; b < bits_per_dim_; ++b) {
                int bit = (labels_[i] >> (bits_per_dim_ - 1 - b)) & 1u;
                double signed_llr = bit ? -llrs[b] : llrs[b];
                double loss;  // log2(1 + exp(-signed_llr)), stable both ways
                if (signed_llr > 0)
                    loss = std::log1p(std::exp(-signed_llr)) / std::log(2.0);
                else
                    loss = (-signed_llr + std::log1p(std::exp(signed_llr))) / std::log(2.0);
                per_dim[b] += w * loss;
            }
        }
    }

    std::vector<double> out(m_);
    for (int i = 0; i < m_; ++i) {
        double v = 1.0 - per_dim[i % bits_per_dim_];
        out[i] = std::clamp(v, 0.0, 1.0);
    }
    return out;
}

void Constellation::dump(std::ostream& os) const {
    const std::size_t count = std::size_t(1) << m_;
    std::vector<std::uint8_t> bits(m_);
    for (std::size_t idx = 0; idx < count; ++idx) {
        for (int b = 0; b < m_; ++b) bits[b] = (idx >> (m_ - 1 - b)) & 1u;
        Symbol4D s = modulate(bits.data());
        os << idx;
        for (double v : s) os << ' ' << v;
        for (int b = 0; b < m_; ++b) os << ' ' << int(bits[b]);
        os << '\n';
    }
}

ChannelProfile make_channel_profile(const Constellation& c, double snr_db) {
    if (!std::isfinite(snr_db)) throw std::invalid_argument("make_channel_profile: non-finite SNR");
    ChannelProfile prof;
    prof.snr_db = snr_db;
    prof.p = c.bit_crossover_probs(snr_db);
    prof.mi = c.bit_mutual_info(snr_db);
    return prof;
}

std::vector<std::uint8_t> make_scrambler(std::size_t n, std::mt19937_64& rng) {
    std::vector<std::uint8_t> bits(n);
    std::uniform_int_distribution<int> coin(0, 1);
    for (auto& b : bits) b = static_cast<std::uint8_t>(coin(rng));
    return bits;
}

void symmetrize(std::vector<std::uint8_t>& bits, const std::vector<std::uint8_t>& scrambler) {
    if (bits.size() != scrambler.size()) throw std::invalid_argument("symmetrize: length mismatch");
    for (std::size_t i = 0; i < bits.size(); ++i) bits[i] ^= scrambler[i];
}

void desymmetrize_hard(std::vector<std::uint8_t>& bits, const std::vector<std::uint8_t>& scrambler) {
    symmetrize(bits, scrambler);
}

void desymmetrize_llr(std::vector<double>& llrs, const std::vector<std::uint8_t>& scrambler) {
    if (llrs.size() != scrambler.size()) throw std::invalid_argument("desymmetrize: length mismatch");
    for (std::size_t i = 0; i < llrs.size(); ++i)
        if (scrambler[i]) llrs[i] = -llrs[i];
}

}  // namespace scfec
