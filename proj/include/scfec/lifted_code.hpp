#pragma once

#include "scfec/base_matrix.hpp"

#include <cstdint>
#include <iosfwd>
#include <random>
#include <vector>

namespace scfec {

/// Binary parity-check matrix obtained by lifting a protograph: every base
/// entry p becomes the sum of p disjoint random M x M permutation matrices,
/// so each block keeps exactly p ones per row and column and the Tanner
/// graph has no duplicate edges. Coded bit j*M..(j+1)*M-1 originates from
/// protograph column j. Immutable after construction and shareable across
/// decoder instances.
class LiftedCode {
  public:
    LiftedCode(const BaseMatrix& base, int lifting_factor, std::mt19937_64& rng);

    int n() const { return n_; }  // coded bits
    int r() const { return r_; }  // checks
    int lifting_factor() const { return M_; }
    int spatial_len() const { return T_; }
    int memory() const { return ms_; }
    int kp() const { return kp_; }
    int jp() const { return jp_; }
    CouplingMode mode() const { return mode_; }

    int column_origin(int vn) const { return vn / M_; }
    int vn_position(int vn) const { return vn / (M_ * kp_); }
    int cn_position(int cn) const { return cn / (M_ * jp_); }
    int cn_positions() const { return r_ / (M_ * jp_); }

    // Edge e is an index into cn_adj; edges of a CN are contiguous.
    int num_edges() const { return static_cast<int>(cn_adj_.size()); }
    const std::vector<std::int32_t>& cn_adj() const { return cn_adj_; }
    const std::vector<std::int32_t>& cn_ptr() const { return cn_ptr_; }
    const std::vector<std::int32_t>& vn_edges() const { return vn_edges_; }
    const std::vector<std::int32_t>& vn_ptr() const { return vn_ptr_; }

    bool is_codeword(const std::vector<std::uint8_t>& bits) const;

    /// Sparse text format: header (dims, mode, T, M), then per-check lines of
    /// bit indices.
    void save(std::ostream& os) const;

  private:
    int n_ = 0, r_ = 0, M_ = 0, T_ = 0, ms_ = 0, kp_ = 0, jp_ = 0;
    CouplingMode mode_ = CouplingMode::terminated;
    std::vector<std::int32_t> cn_adj_;   // VN index per edge, grouped by CN
    std::vector<std::int32_t> cn_ptr_;   // size r+1
    std::vector<std::int32_t> vn_edges_; // edge ids grouped by VN
    std::vector<std::int32_t> vn_ptr_;   // size n+1
};

/// Dense GF(2) encoder for small instances (test and tooling scale). The
/// parity-check matrix is reduced to RREF once; information bits ride on the
/// non-pivot columns. A rank-deficient H simply yields extra free columns,
/// i.e. dimension() = n - rank(H).
class Gf2Encoder {
  public:
    explicit Gf2Encoder(const LiftedCode& code);

    int dimension() const { return n_ - rank_; }
    int rank() const { return rank_; }

    /// info must have dimension() bits; returns a codeword with H c = 0.
    std::vector<std::uint8_t> encode(const std::vector<std::uint8_t>& info) const;

  private:
    int n_ = 0, rank_ = 0;
    std::vector<int> pivot_cols_;              // per reduced row
    std::vector<int> free_cols_;
    std::vector<std::vector<std::uint64_t>> rows_;  // RREF rows as bitsets
};

}  // namespace scfec
