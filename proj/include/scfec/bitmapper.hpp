#pragma once

#include "scfec/constellation.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace scfec {

/// Allocation of coded bits to modulation bits: a_{i,j} is the fraction of
/// the coded bits of column j (a spatial position for SC-GLDPC codes, a
/// protograph column for SC-LDPC codes) carried by modulation bit i. Columns
/// are stochastic. family is "scldpc" or "scgldpc".
struct BitMapper {
    int m = 0;
    int n_cols = 0;
    std::string family;
    std::vector<double> a;  // row-major m x n_cols

    double at(int i, int j) const { return a[std::size_t(i) * n_cols + j]; }
    double& at(int i, int j) { return a[std::size_t(i) * n_cols + j]; }

    void validate() const;  // throws on range or column-sum violations

    void save(std::ostream& os, std::uint64_t seed = 0) const;
    static BitMapper load(std::istream& is);
};

/// Uniform allocation a_{i,j} = 1/m: the threshold-level model of the
/// sequential baseline mapper.
BitMapper baseline_mapper(int m, int n_cols, const std::string& family);

/// Effective BSC crossover per column, eps_j = sum_i a_{i,j} p_i.
std::vector<double> effective_eps(const BitMapper& mapper, const ChannelProfile& profile);

/// Largest-remainder rounding of bits_per_column * a per column; every column
/// sums to exactly bits_per_column and no entry moves by one bit or more.
std::vector<std::vector<int>> round_to_finite(const BitMapper& mapper, int bits_per_column);

/// Index assignment induced by a rounded allocation: returns perm with
/// perm[k*m + i] = coded-bit index feeding modulation bit i of symbol k.
/// Within a column, coded bits fill the modulation-bit streams in row order.
/// If rounding leaves the streams slightly uneven, the last symbols draw the
/// leftovers from the longest remaining stream.
std::vector<int> mapper_symbol_assignment(const std::vector<std::vector<int>>& counts,
                                          int bits_per_column);

/// Buffering cost of a mapper in spatial positions: the encoder emits one
/// position at a time and a symbol leaves once all its m bits exist, so the
/// backlog after position P is (P+1) - m * min_i cum_i(P). Returns the
/// maximum backlog over the chain (0 for the baseline mapper).
double buffer_requirement(const BitMapper& mapper, int spatial_len);

}  // namespace scfec
