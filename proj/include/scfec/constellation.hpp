#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <random>
#include <vector>

namespace scfec {

/// One polarization-multiplexed channel use: (xI, xQ, yI, yQ).
using Symbol4D = std::array<double, 4>;

/// Polarization-multiplexed square-QAM constellation built as the Cartesian
/// product of four identical Gray-labeled PAM constellations, one per real
/// dimension. Average energy is one per polarization, so the SNR rho is the
/// per-polarization Es/N0 of the discrete-time AWGN channel.
///
/// Label layout: bit i of the m-bit symbol label belongs to real dimension
/// i / bits_per_dim and is bit i % bits_per_dim (MSB first) of that
/// dimension's Gray label. Bits at the same within-dimension index share a
/// protection level.
class Constellation {
  public:
    /// order_per_dim is the PAM order per real dimension: 2 for PM-QPSK,
    /// 4 for PM-16-QAM, 8 for PM-64-QAM, 16 for PM-256-QAM.
    static Constellation pm_qam(int order_per_dim);

    int bits_per_symbol() const { return m_; }               // m
    int bits_per_dim() const { return bits_per_dim_; }       // log2(order)
    int pam_order() const { return pam_order_; }
    int num_protection_classes() const { return bits_per_dim_; }
    int protection_class(int bit_index) const { return bit_index % bits_per_dim_; }

    const std::vector<double>& pam_levels() const { return levels_; }

    /// Gray label (MSB-first packed) of PAM level index 0..L-1.
    std::uint32_t pam_label(int level_index) const;

    /// Maps m bits (one 4D symbol worth) to a symbol.
    Symbol4D modulate(const std::uint8_t* bits) const;

    /// Minimum-distance detection; writes m hard bits.
    void hard_detect(const Symbol4D& r, std::uint8_t* bits) const;

    /// Exact bitwise LLRs factorized per real dimension. Positive LLR means
    /// bit 0 is more likely. snr_db is rho in dB.
    void llr(const Symbol4D& r, double snr_db, double* out) const;

    /// Per-dimension noise std for a given rho (per-polarization Es/N0 = rho,
    /// unit symbol energy per polarization -> sigma^2 = 1/(2 rho) per dim).
    static double noise_sigma_per_dim(double snr_db);

    Symbol4D add_noise(const Symbol4D& s, double snr_db, std::mt19937_64& rng) const;

    /// BSC crossover probability of each of the m bits under hard detection,
    /// in closed form (Gaussian tail sums over PAM decision boundaries).
    std::vector<double> bit_crossover_probs(double snr_db) const;

    /// Per-bit mutual information I(b_i; r) in bits, by Gauss-Hermite
    /// quadrature per real dimension.
    std::vector<double> bit_mutual_info(double snr_db) const;

    /// Line-delimited dump: index, 4 coordinates, label bits.
    void dump(std::ostream& os) const;

  private:
    Constellation() = default;

    // Per-dimension helpers; level index is position in ascending order.
    int detect_level(double r) const;
    void llr_per_dim(double r, double sigma2, double* out) const;

    int m_ = 0;
    int pam_order_ = 0;
    int bits_per_dim_ = 0;
    std::vector<double> levels_;          // ascending PAM coordinates
    std::vector<std::uint32_t> labels_;   // Gray label per level index
};

/// Channel quality summary of the m parallel bit channels at one SNR:
/// crossover probabilities p_i for hard detection and per-bit mutual
/// informations I_i for soft detection.
struct ChannelProfile {
    double snr_db = 0.0;
    std::vector<double> p;   // size m, within [0, 0.5]
    std::vector<double> mi;  // size m, within [0, 1]
};

ChannelProfile make_channel_profile(const Constellation& c, double snr_db);

/// Symmetrization scrambler: XOR of i.i.d. uniform bits before mapping, sign
/// flip of LLRs (or XOR of hard bits) after demapping. Makes all-zero-codeword
/// simulation statistics match random-codeword transmission.
std::vector<std::uint8_t> make_scrambler(std::size_t n, std::mt19937_64& rng);
void symmetrize(std::vector<std::uint8_t>& bits, const std::vector<std::uint8_t>& scrambler);
void desymmetrize_hard(std::vector<std::uint8_t>& bits, const std::vector<std::uint8_t>& scrambler);
void desymmetrize_llr(std::vector<double>& llrs, const std::vector<std::uint8_t>& scrambler);

}  // namespace scfec
