#pragma once

#include "scfec/gf2m.hpp"

#include <cstdint>
#include <vector>

namespace scfec {

/// Shortened primitive t-error-correcting BCH code over GF(2^nu) with
/// parameters (n, k) = (2^nu - 1 - s, 2^nu - nu t - 1 - s). Shortening fixes
/// the s leading information bits of the parent cyclic code to zero; they are
/// not transmitted and the decoder never flips them. Codeword layout is
/// systematic with parity in positions 0..nu*t-1 and information above.
class BchCode {
  public:
    BchCode(int nu, int t, int s);

    int nu() const { return nu_; }
    int t() const { return t_; }
    int s() const { return s_; }
    int n() const { return n_; }                    // shortened length
    int k() const { return k_; }
    int full_length() const { return full_n_; }     // 2^nu - 1
    double rate() const { return double(k_) / n_; }
    const Gf2m& field() const { return field_; }
    const std::vector<std::uint8_t>& generator() const { return gen_; }

    std::vector<std::uint8_t> encode(const std::vector<std::uint8_t>& info) const;

    /// Syndromes S_1..S_2t of a (shortened) word; all zero iff codeword.
    std::vector<int> syndromes(const std::vector<std::uint8_t>& word) const;

    struct BddResult {
        bool success = false;
        int flips = 0;
    };

    /// Bounded-distance decoding in place: succeeds iff a codeword lies
    /// within Hamming distance t of the input, in which case the word becomes
    /// exactly that codeword (possibly a miscorrection). Shortened positions
    /// are outside the flippable range, so an error locator pointing there
    /// reports failure. flip_positions, when given, receives the positions
    /// changed on success.
    BddResult bdd_decode(std::vector<std::uint8_t>& word,
                         std::vector<int>* flip_positions = nullptr) const;

  private:
    int nu_, t_, s_, n_, k_, full_n_;
    Gf2m field_;
    std::vector<std::uint8_t> gen_;  // generator coefficients, gen_[0] = x^0 term
};

}  // namespace scfec
