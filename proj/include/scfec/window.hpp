#pragma once

#include "scfec/base_matrix.hpp"

#include <stdexcept>
#include <vector>

namespace scfec {

/// Sliding-window decoding schedule shared by the finite-length decoders and
/// the density evolution analyses. Targets are 0-based spatial positions in
/// decision order: terminated chains sweep 0..T-1 once; tailbiting chains
/// start at the coupling memory (the first window needs positions 0..ms+W-1
/// received), wrap around, and revisit the first W-1 targets, whose kept
/// LLRs are refreshed and whose decisions only then become final.
inline std::vector<int> window_targets(CouplingMode mode, int T, int W, int start) {
    if (W < 1 || W >= T) throw std::invalid_argument("window: need 1 <= W < T");
    if (mode == CouplingMode::terminated) {
        std::vector<int> order(T);
        for (int i = 0; i < T; ++i) order[i] = i;
        return order;
    }
    std::vector<int> order(T + W - 1);
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = (start + int(i)) % T;
    return order;
}

/// Whether the window at index i of the schedule finalizes its target.
inline bool window_visit_is_final(CouplingMode mode, int W, std::size_t i) {
    return mode == CouplingMode::terminated || i + 1 >= static_cast<std::size_t>(W);
}

/// VN positions covered by the window at target t.
inline std::vector<int> window_vn_positions(CouplingMode mode, int T, int W, int t) {
    std::vector<int> pos;
    pos.reserve(W);
    for (int i = 0; i < W; ++i) {
        int p = t + i;
        if (mode == CouplingMode::tailbiting)
            p %= T;
        else if (p >= T)
            break;
        pos.push_back(p);
    }
    return pos;
}

/// CN positions active at target t: the W rows t..t+W-1, clipped to the
/// cn_pos_count rows that exist (T for tailbiting, T + memory terminated).
/// The termination rows at the bottom enter once the window reaches them.
inline std::vector<int> window_cn_positions(CouplingMode mode, int T, int W, int t,
                                            int cn_pos_count) {
    std::vector<int> pos;
    pos.reserve(W);
    for (int i = 0; i < W; ++i) {
        int p = t + i;
        if (mode == CouplingMode::tailbiting)
            p %= T;
        else if (p >= cn_pos_count)
            break;
        pos.push_back(p);
    }
    return pos;
}

}  // namespace scfec
