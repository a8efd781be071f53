#include "scfec/bp_decoder.hpp"

#include "scfec/window.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace scfec {

BpWindowDecoder::BpWindowDecoder(const LiftedCode& code) : code_(code) {
    msg_vc_.resize(code_.num_edges());
    msg_cv_.resize(code_.num_edges());
    ch_.resize(code_.n());
    int max_deg = 0;
    for (int cn = 0; cn < code_.r(); ++cn)
        max_deg = std::max<int>(max_deg, code_.cn_ptr()[cn + 1] - code_.cn_ptr()[cn]);
    tanh_buf_.resize(max_deg);
    prefix_buf_.resize(max_deg);
}

std::vector<std::uint8_t> BpWindowDecoder::decode(const std::vector<double>& llrs,
                                                  const BpWindowConfig& cfg) {
    const int T = code_.spatial_len();
    if (static_cast<int>(llrs.size()) != code_.n())
        throw std::invalid_argument("bp decode: LLR length mismatch");
    if (cfg.W >= T) throw std::invalid_argument("bp decode: W >= T, use full BP instead");
    if (cfg.W < 1 || cfg.l_max < 1) throw std::invalid_argument("bp decode: bad W or l_max");
    for (double v : llrs)
        if (!std::isfinite(v)) throw std::invalid_argument("bp decode: non-finite LLR");

    const double clip = cfg.clip;
    for (int vn = 0; vn < code_.n(); ++vn) ch_[vn] = std::clamp(llrs[vn], -clip, clip);

    const auto& cn_ptr = code_.cn_ptr();
    const auto& vn_ptr = code_.vn_ptr();
    const auto& vn_edges = code_.vn_edges();
    const int bits_per_pos = code_.lifting_factor() * code_.kp();
    const int cns_per_pos = code_.lifting_factor() * code_.jp();

    for (int vn = 0; vn < code_.n(); ++vn)
        for (int k = vn_ptr[vn]; k < vn_ptr[vn + 1]; ++k) msg_vc_[vn_edges[k]] = ch_[vn];
    std::fill(msg_cv_.begin(), msg_cv_.end(), 0.0);

    std::vector<std::uint8_t> decided(T, 0);
    std::vector<std::uint8_t> out(code_.n(), 0);

    int start = cfg.start_position >= 0 ? cfg.start_position : code_.memory();
    auto targets = window_targets(code_.mode(), T, cfg.W, start);

    for (std::size_t window_index = 0; window_index < targets.size(); ++window_index) {
        int t = targets[window_index];
        auto vn_pos = window_vn_positions(code_.mode(), T, cfg.W, t);
        auto cn_pos = window_cn_positions(code_.mode(), T, cfg.W, t, code_.cn_positions());
        std::vector<int> active;
        for (int p : vn_pos)
            if (!decided[p]) active.push_back(p);

        // Pipeline fill: the decoder has already iterated on every growing
        // prefix of the first window while its observations streamed in.
        int rounds = (window_index == 0) ? cfg.W : 1;
        for (int iter = 0; iter < rounds * cfg.l_max; ++iter) {
            // CN update: extrinsic tanh products via forward/backward scans.
            for (int p : cn_pos) {
                for (int cn = p * cns_per_pos; cn < (p + 1) * cns_per_pos; ++cn) {
                    int lo = cn_ptr[cn], hi = cn_ptr[cn + 1];
                    int deg = hi - lo;
                    double fwd = 1.0;
                    for (int k = 0; k < deg; ++k) {
                        double tk = std::tanh(0.5 * msg_vc_[lo + k]);
                        tanh_buf_[k] = tk;
                        prefix_buf_[k] = fwd;  // product of tanh before k
                        fwd *= tk;
                    }
                    double bwd = 1.0;
                    for (int k = deg - 1; k >= 0; --k) {
                        double prod = prefix_buf_[k] * bwd;
                        prod = std::clamp(prod, -(1.0 - 1e-15), 1.0 - 1e-15);
                        msg_cv_[lo + k] = std::clamp(2.0 * std::atanh(prod), -clip, clip);
                        bwd *= tanh_buf_[k];
                    }
                }
            }
            // VN update over undecided window positions.
            for (int p : active) {
                for (int vn = p * bits_per_pos; vn < (p + 1) * bits_per_pos; ++vn) {
                    double total = ch_[vn];
                    for (int k = vn_ptr[vn]; k < vn_ptr[vn + 1]; ++k) total += msg_cv_[vn_edges[k]];
                    for (int k = vn_ptr[vn]; k < vn_ptr[vn + 1]; ++k) {
                        int e = vn_edges[k];
                        msg_vc_[e] = std::clamp(total - msg_cv_[e], -clip, clip);
                    }
                }
            }
        }

        // A-posteriori decision for the targeted position; tailbiting revisits
        // of the first targets refresh their kept LLRs and overwrite this.
        for (int vn = t * bits_per_pos; vn < (t + 1) * bits_per_pos; ++vn) {
            double app = ch_[vn];
            for (int k = vn_ptr[vn]; k < vn_ptr[vn + 1]; ++k) app += msg_cv_[vn_edges[k]];
            out[vn] = app < 0.0 ? 1 : 0;
        }
        if (window_visit_is_final(code_.mode(), cfg.W, window_index)) decided[t] = 1;
    }
    return out;
}

}  // namespace scfec
