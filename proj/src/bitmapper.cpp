#include "scfec/bitmapper.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace scfec {

void BitMapper::validate() const {
    if (m < 1 || n_cols < 1 || static_cast<int>(a.size()) != m * n_cols)
        throw std::invalid_argument("BitMapper: bad dimensions");
    for (int j = 0; j < n_cols; ++j) {
        double sum = 0.0;
        for (int i = 0; i < m; ++i) {
            double v = at(i, j);
            if (v < -1e-12 || v > 1.0 + 1e-12)
                throw std::invalid_argument("BitMapper: entry outside [0,1]");
            sum += v;
        }
        if (std::abs(sum - 1.0) > 1e-9)
            throw std::invalid_argument("BitMapper: column does not sum to 1");
    }
}

void BitMapper::save(std::ostream& os, std::uint64_t seed) const {
    os << "bitmapper " << m << ' ' << n_cols << ' ' << family << ' ' << seed << '\n';
    os.precision(17);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n_cols; ++j) os << (j ? " " : "") << at(i, j);
        os << '\n';
    }
}

BitMapper BitMapper::load(std::istream& is) {
    std::string tag;
    BitMapper mp;
    std::uint64_t seed;
    if (!(is >> tag >> mp.m >> mp.n_cols >> mp.family >> seed) || tag != "bitmapper")
        throw std::invalid_argument("BitMapper::load: bad header");
    mp.a.resize(std::size_t(mp.m) * mp.n_cols);
    for (auto& v : mp.a)
        if (!(is >> v)) throw std::invalid_argument("BitMapper::load: truncated");
    mp.validate();
    return mp;
}

BitMapper baseline_mapper(int m, int n_cols, const std::string& family) {
    if (m < 1 || n_cols < 1) throw std::invalid_argument("baseline_mapper: bad dimensions");
    BitMapper mp;
    mp.m = m;
    mp.n_cols = n_cols;
    mp.family = family;
    mp.a.assign(std::size_t(m) * n_cols, 1.0 / m);
    return mp;
}

std::vector<double> effective_eps(const BitMapper& mapper, const ChannelProfile& profile) {
    mapper.validate();
    if (static_cast<int>(profile.p.size()) != mapper.m)
        throw std::invalid_argument("effective_eps: profile/mapper dimension mismatch");
    std::vector<double> eps(mapper.n_cols, 0.0);
    for (int j = 0; j < mapper.n_cols; ++j) {
        double e = 0.0;
        for (int i = 0; i < mapper.m; ++i) e += mapper.at(i, j) * profile.p[i];
        eps[j] = e;
    }
    return eps;
}

std::vector<std::vector<int>> round_to_finite(const BitMapper& mapper, int bits_per_column) {
    mapper.validate();
    if (bits_per_column < 1) throw std::invalid_argument("round_to_finite: bits_per_column < 1");
    std::vector<std::vector<int>> counts(mapper.m, std::vector<int>(mapper.n_cols, 0));
    for (int j = 0; j < mapper.n_cols; ++j) {
        int assigned = 0;
        std::vector<std::pair<double, int>> rema(mapper.m);
        for (int i = 0; i < mapper.m; ++i) {
            double exact = bits_per_column * mapper.at(i, j);
            int fl = static_cast<int>(std::floor(exact));
            counts[i][j] = fl;
            assigned += fl;
            rema[i] = {exact - fl, i};
        }
        std::sort(rema.begin(), rema.end(),
                  [](const auto& x, const auto& y) { return x.first > y.first; });
        for (int k = 0; k < bits_per_column - assigned; ++k) ++counts[rema[k].second][j];
    }
    return counts;
}

std::vector<int> mapper_symbol_assignment(const std::vector<std::vector<int>>& counts,
                                          int bits_per_column) {
    const int m = static_cast<int>(counts.size());
    if (m < 1) throw std::invalid_argument("mapper_symbol_assignment: empty counts");
    const int n_cols = static_cast<int>(counts[0].size());
    // Emit coded bits column by column into the m modulation-bit streams.
    std::vector<std::vector<int>> streams(m);
    int bit = 0;
    for (int j = 0; j < n_cols; ++j) {
        for (int i = 0; i < m; ++i)
            for (int k = 0; k < counts[i][j]; ++k) streams[i].push_back(bit++);
        int col_total = 0;
        for (int i = 0; i < m; ++i) col_total += counts[i][j];
        if (col_total != bits_per_column)
            throw std::invalid_argument("mapper_symbol_assignment: column sums mismatch");
    }
    const int total = bit;
    if (total % m != 0)
        throw std::invalid_argument("mapper_symbol_assignment: total bits not divisible by m");
    const int symbols = total / m;
    std::vector<int> spent(m, 0);
    std::vector<int> perm(total);
    for (int k = 0; k < symbols; ++k)
        for (int i = 0; i < m; ++i) {
            int src = i;
            if (spent[src] >= static_cast<int>(streams[src].size())) {
                // Rounded streams can run short by a few bits; steal from the
                // longest remaining stream.
                int best = -1, slack = -1;
                for (int s = 0; s < m; ++s) {
                    int left = static_cast<int>(streams[s].size()) - spent[s];
                    if (left > slack) {
                        slack = left;
                        best = s;
                    }
                }
                src = best;
            }
            perm[k * m + i] = streams[src][spent[src]++];
        }
    return perm;
}

double buffer_requirement(const BitMapper& mapper, int spatial_len) {
    mapper.validate();
    if (spatial_len < 1 || mapper.n_cols % spatial_len != 0)
        throw std::invalid_argument("buffer_requirement: spatial length must divide columns");
    const int cols_per_pos = mapper.n_cols / spatial_len;
    std::vector<double> cum(mapper.m, 0.0);
    double worst = 0.0;
    for (int p = 0; p < spatial_len; ++p) {
        for (int j = p * cols_per_pos; j < (p + 1) * cols_per_pos; ++j)
            for (int i = 0; i < mapper.m; ++i) cum[i] += mapper.at(i, j);
        double min_cum = *std::min_element(cum.begin(), cum.end());
        double backlog = (p + 1) - mapper.m * min_cum / cols_per_pos;
        worst = std::max(worst, backlog);
    }
    return worst;
}

}  // namespace scfec
