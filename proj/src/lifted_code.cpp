#include "scfec/lifted_code.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace scfec {

namespace {

// p permutations of 0..M-1 that are pairwise disjoint: pi_k(r) != pi_l(r)
// for every r. Start from independent uniform permutations and repair
// collisions by swapping with a random other slot.
std::vector<std::vector<int>> disjoint_permutations(int M, int p, std::mt19937_64& rng) {
    std::vector<std::vector<int>> perms(p, std::vector<int>(M));
    for (auto& perm : perms) {
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
    }
    if (p == 1) return perms;
    std::uniform_int_distribution<int> pick(0, M - 1);
    for (;;) {
        bool clean = true;
        for (int r = 0; r < M; ++r) {
            for (int k = 1; k < p; ++k)
                for (int l = 0; l < k; ++l)
                    if (perms[k][r] == perms[l][r]) {
                        int r2 = pick(rng);
                        std::swap(perms[k][r], perms[k][r2]);
                        clean = false;
                    }
        }
        if (clean) return perms;
    }
}

}  // namespace

LiftedCode::LiftedCode(const BaseMatrix& base, int lifting_factor, std::mt19937_64& rng)
    : M_(lifting_factor),
      T_(base.spatial_len()),
      ms_(base.memory()),
      kp_(base.kp()),
      jp_(base.jp()),
      mode_(base.mode()) {
    if (M_ < 1) throw std::invalid_argument("lift: lifting factor must be >= 1");
    if (M_ < base.max_entry())
        throw std::invalid_argument("lift: lifting factor below the largest base entry");
    n_ = base.cols() * M_;
    r_ = base.rows() * M_;

    std::vector<std::int32_t> cn_deg(r_, 0);
    for (int br = 0; br < base.rows(); ++br) {
        int w = base.row_weight(br);
        for (int k = 0; k < M_; ++k) cn_deg[br * M_ + k] = w;
    }
    cn_ptr_.resize(r_ + 1);
    cn_ptr_[0] = 0;
    for (int i = 0; i < r_; ++i) cn_ptr_[i + 1] = cn_ptr_[i] + cn_deg[i];
    cn_adj_.assign(cn_ptr_[r_], -1);

    std::vector<std::int32_t> fill(r_, 0);
    for (int br = 0; br < base.rows(); ++br)
        for (int bc = 0; bc < base.cols(); ++bc) {
            int p = base.entry(br, bc);
            if (p == 0) continue;
            auto perms = disjoint_permutations(M_, p, rng);
            for (int k = 0; k < p; ++k)
                for (int rr = 0; rr < M_; ++rr) {
                    int cn = br * M_ + rr;
                    int vn = bc * M_ + perms[k][rr];
                    cn_adj_[cn_ptr_[cn] + fill[cn]++] = vn;
                }
        }

    vn_ptr_.assign(n_ + 1, 0);
    for (std::int32_t vn : cn_adj_) ++vn_ptr_[vn + 1];
    for (int i = 0; i < n_; ++i) vn_ptr_[i + 1] += vn_ptr_[i];
    vn_edges_.resize(cn_adj_.size());
    std::vector<std::int32_t> vfill(n_, 0);
    for (std::int32_t e = 0; e < static_cast<std::int32_t>(cn_adj_.size()); ++e) {
        std::int32_t vn = cn_adj_[e];
        vn_edges_[vn_ptr_[vn] + vfill[vn]++] = e;
    }
}

bool LiftedCode::is_codeword(const std::vector<std::uint8_t>& bits) const {
    if (static_cast<int>(bits.size()) != n_) return false;
    for (int cn = 0; cn < r_; ++cn) {
        int parity = 0;
        for (int e = cn_ptr_[cn]; e < cn_ptr_[cn + 1]; ++e) parity ^= bits[cn_adj_[e]] & 1;
        if (parity) return false;
    }
    return true;
}

void LiftedCode::save(std::ostream& os) const {
    os << "liftedcode " << r_ << ' ' << n_ << ' ' << to_string(mode_) << ' ' << T_ << ' ' << M_
       << ' ' << jp_ << ' ' << kp_ << ' ' << ms_ << '\n';
    for (int cn = 0; cn < r_; ++cn) {
        for (int e = cn_ptr_[cn]; e < cn_ptr_[cn + 1]; ++e) {
            if (e != cn_ptr_[cn]) os << ' ';
            os << cn_adj_[e];
        }
        os << '\n';
    }
}

Gf2Encoder::Gf2Encoder(const LiftedCode& code) : n_(code.n()) {
    const int r = code.r();
    const int words = (n_ + 63) / 64;
    rows_.assign(r, std::vector<std::uint64_t>(words, 0));
    for (int cn = 0; cn < r; ++cn)
        for (int e = code.cn_ptr()[cn]; e < code.cn_ptr()[cn + 1]; ++e) {
            int vn = code.cn_adj()[e];
            rows_[cn][vn / 64] ^= (1ull << (vn % 64));
        }

    // Gauss-Jordan to RREF.
    std::vector<char> is_pivot(n_, 0);
    int row = 0;
    for (int col = 0; col < n_ && row < r; ++col) {
        int sel = -1;
        for (int i = row; i < r; ++i)
            if ((rows_[i][col / 64] >> (col % 64)) & 1) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        std::swap(rows_[row], rows_[sel]);
        for (int i = 0; i < r; ++i) {
            if (i == row) continue;
            if ((rows_[i][col / 64] >> (col % 64)) & 1)
                for (int w = 0; w < words; ++w) rows_[i][w] ^= rows_[row][w];
        }
        pivot_cols_.push_back(col);
        is_pivot[col] = 1;
        ++row;
    }
    rank_ = row;
    rows_.resize(rank_);
    for (int c = 0; c < n_; ++c)
        if (!is_pivot[c]) free_cols_.push_back(c);
}

std::vector<std::uint8_t> Gf2Encoder::encode(const std::vector<std::uint8_t>& info) const {
    if (static_cast<int>(info.size()) != dimension())
        throw std::invalid_argument("Gf2Encoder::encode: wrong info length");
    std::vector<std::uint8_t> c(n_, 0);
    for (std::size_t i = 0; i < free_cols_.size(); ++i) c[free_cols_[i]] = info[i] & 1;
    // In RREF each pivot row reads pivot + sum(free bits on that row) = 0.
    for (int i = 0; i < rank_; ++i) {
        int parity = 0;
        for (std::size_t k = 0; k < free_cols_.size(); ++k) {
            int col = free_cols_[k];
            if ((rows_[i][col / 64] >> (col % 64)) & 1) parity ^= c[col];
        }
        c[pivot_cols_[i]] = static_cast<std::uint8_t>(parity);
    }
    return c;
}

}  // namespace scfec
