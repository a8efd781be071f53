#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace scfec {

enum class CouplingMode { terminated, tailbiting };

std::string to_string(CouplingMode m);
CouplingMode coupling_mode_from_string(const std::string& s);

/// Protograph of a spatially coupled LDPC code: component blocks P_0..P_ms
/// (each Jp x Kp, nonnegative integers) tiled along the diagonal over T
/// spatial positions. Terminated codes get ms extra row blocks at the bottom;
/// tailbiting codes wrap the overhang around (requires T > ms).
class BaseMatrix {
  public:
    /// blocks[i] holds P_i in row-major Jp x Kp layout. The stacked blocks
    /// must have constant column and row sums (the (J,K)-regularity of the
    /// uncoupled ensemble).
    BaseMatrix(std::vector<std::vector<int>> blocks, int jp, int kp,
               int spatial_len, CouplingMode mode);

    int rows() const { return rows_; }
    int cols() const { return T_ * kp_; }
    int entry(int r, int c) const { return entries_[std::size_t(r) * cols() + c]; }
    int spatial_len() const { return T_; }
    int memory() const { return ms_; }
    int jp() const { return jp_; }
    int kp() const { return kp_; }
    CouplingMode mode() const { return mode_; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }

    int max_entry() const;
    int row_weight(int r) const;
    int col_weight(int c) const;

    /// 0-based spatial position of a protograph column / row.
    int col_position(int c) const { return c / kp_; }
    int row_position(int r) const { return r / jp_; }

    double design_rate() const;

    /// Sparse text format: header line, then one line of column indices per
    /// row (indices repeated per entry multiplicity).
    void save(std::ostream& os) const;
    static BaseMatrix load(std::istream& is);

  private:
    std::vector<std::vector<int>> blocks_;
    std::vector<int> entries_;
    int jp_ = 0, kp_ = 0, ms_ = 0, T_ = 0, rows_ = 0;
    CouplingMode mode_ = CouplingMode::terminated;
};

}  // namespace scfec
