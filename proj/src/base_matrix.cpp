#include "scfec/base_matrix.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace scfec {

std::string to_string(CouplingMode m) {
    return m == CouplingMode::terminated ? "terminated" : "tailbiting";
}

CouplingMode coupling_mode_from_string(const std::string& s) {
    if (s == "terminated") return CouplingMode::terminated;
    if (s == "tailbiting") return CouplingMode::tailbiting;
    throw std::invalid_argument("unknown coupling mode: " + s);
}

BaseMatrix::BaseMatrix(std::vector<std::vector<int>> blocks, int jp, int kp,
                       int spatial_len, CouplingMode mode)
    : blocks_(std::move(blocks)), jp_(jp), kp_(kp), T_(spatial_len), mode_(mode) {
    if (jp_ < 1 || kp_ < 1) throw std::invalid_argument("BaseMatrix: block dims must be positive");
    if (blocks_.empty()) throw std::invalid_argument("BaseMatrix: no component blocks");
    ms_ = static_cast<int>(blocks_.size()) - 1;
    for (const auto& b : blocks_) {
        if (static_cast<int>(b.size()) != jp_ * kp_)
            throw std::invalid_argument("BaseMatrix: inconsistent block sizes");
        for (int v : b)
            if (v < 0) throw std::invalid_argument("BaseMatrix: negative entry");
    }
    if (T_ < 1) throw std::invalid_argument("BaseMatrix: spatial length must be >= 1");
    if (mode_ == CouplingMode::tailbiting && T_ <= ms_)
        throw std::invalid_argument("BaseMatrix: tailbiting requires T > ms");

    // (J,K) regularity of the stacked blocks.
    std::vector<int> col_sum(kp_, 0), row_sum(jp_, 0);
    for (const auto& b : blocks_)
        for (int r = 0; r < jp_; ++r)
            for (int c = 0; c < kp_; ++c) {
                col_sum[c] += b[r * kp_ + c];
                row_sum[r] += b[r * kp_ + c];
            }
    for (int c = 1; c < kp_; ++c)
        if (col_sum[c] != col_sum[0])
            throw std::invalid_argument("BaseMatrix: stacked blocks have unequal column weights");
    for (int r = 1; r < jp_; ++r)
        if (row_sum[r] != row_sum[0])
            throw std::invalid_argument("BaseMatrix: stacked blocks have unequal row weights");

    rows_ = (mode_ == CouplingMode::terminated ? T_ + ms_ : T_) * jp_;
    entries_.assign(std::size_t(rows_) * cols(), 0);
    for (int pos = 0; pos < T_; ++pos)
        for (int i = 0; i <= ms_; ++i) {
            int row_block = pos + i;
            if (mode_ == CouplingMode::tailbiting) row_block %= T_;
            for (int r = 0; r < jp_; ++r)
                for (int c = 0; c < kp_; ++c)
                    entries_[std::size_t(row_block * jp_ + r) * cols() + (pos * kp_ + c)] +=
                        blocks_[i][r * kp_ + c];
        }
}

int BaseMatrix::max_entry() const {
    int mx = 0;
    for (int v : entries_) mx = std::max(mx, v);
    return mx;
}

int BaseMatrix::row_weight(int r) const {
    int s = 0;
    for (int c = 0; c < cols(); ++c) s += entry(r, c);
    return s;
}

int BaseMatrix::col_weight(int c) const {
    int s = 0;
    for (int r = 0; r < rows_; ++r) s += entry(r, c);
    return s;
}

double BaseMatrix::design_rate() const {
    double base = 1.0 - double(jp_) / double(kp_);
    if (mode_ == CouplingMode::tailbiting) return base;
    return base - double(ms_) * jp_ / (double(T_) * kp_);
}

void BaseMatrix::save(std::ostream& os) const {
    os << "basematrix " << rows_ << ' ' << cols() << ' ' << to_string(mode_) << ' ' << T_ << ' '
       << jp_ << ' ' << kp_ << ' ' << ms_ << '\n';
    for (int r = 0; r < rows_; ++r) {
        bool first = true;
        for (int c = 0; c < cols(); ++c)
            for (int k = 0; k < entry(r, c); ++k) {
                if (!first) os << ' ';
                os << c;
                first = false;
            }
        os << '\n';
    }
}

BaseMatrix BaseMatrix::load(std::istream& is) {
    std::string tag, mode_str;
    int rows, cols, T, jp, kp, ms;
    if (!(is >> tag >> rows >> cols >> mode_str >> T >> jp >> kp >> ms) || tag != "basematrix")
        throw std::invalid_argument("BaseMatrix::load: bad header");
    CouplingMode mode = coupling_mode_from_string(mode_str);
    is.ignore();

    // Recover the component blocks from the first column block; the band
    // layout places P_i at row block i for position 0 (T > ms guarantees the
    // tailbiting wrap does not alias into it).
    std::vector<std::vector<int>> entries(rows, std::vector<int>(cols, 0));
    for (int r = 0; r < rows; ++r) {
        std::string line;
        if (!std::getline(is, line)) throw std::invalid_argument("BaseMatrix::load: truncated");
        std::istringstream ls(line);
        int c;
        while (ls >> c) {
            if (c < 0 || c >= cols) throw std::invalid_argument("BaseMatrix::load: bad column index");
            ++entries[r][c];
        }
    }
    std::vector<std::vector<int>> blocks(ms + 1, std::vector<int>(jp * kp, 0));
    for (int i = 0; i <= ms; ++i)
        for (int r = 0; r < jp; ++r)
            for (int c = 0; c < kp; ++c) blocks[i][r * kp + c] = entries[i * jp + r][c];
    return BaseMatrix(std::move(blocks), jp, kp, T, mode);
}

}  // namespace scfec
