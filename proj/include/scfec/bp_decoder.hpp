#pragma once

#include "scfec/lifted_code.hpp"

#include <cstdint>
#include <vector>

namespace scfec {

struct BpWindowConfig {
    int W = 5;
    int l_max = 10;
    double clip = 50.0;       // message magnitude bound; clipping keeps signs
    int start_position = -1;  // tailbiting window start; -1 means memory ms
};

/// Windowed sum-product decoder with a flooding schedule. One instance is
/// single-threaded and reusable across frames; the code structure is shared.
/// Messages in the window overlap are retained when the window slides, and
/// decided positions freeze.
class BpWindowDecoder {
  public:
    explicit BpWindowDecoder(const LiftedCode& code);

    /// llrs: one channel LLR per coded bit (positive = bit 0). Returns hard
    /// decisions, finalized position by position as the window passes.
    std::vector<std::uint8_t> decode(const std::vector<double>& llrs, const BpWindowConfig& cfg);

  private:
    const LiftedCode& code_;
    std::vector<double> msg_vc_, msg_cv_;  // per edge, indexed like cn_adj
    std::vector<double> ch_;
    std::vector<double> tanh_buf_, prefix_buf_;
};

}  // namespace scfec
