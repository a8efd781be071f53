#include "scfec/jfun.hpp"

#include "scfec/math_util.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace scfec {

namespace {

constexpr double kSigmaMax = 14.0;
constexpr int kTableSize = 8192;

double mi_loss(double llr) {
    // log2(1 + exp(-llr)), stable for both signs.
    if (llr > 0) return std::log1p(std::exp(-llr)) / std::log(2.0);
    return (-llr + std::log1p(std::exp(llr))) / std::log(2.0);
}

struct Table {
    std::vector<double> val;  // J at sigma = i * step
    double step;

    Table() {
        step = kSigmaMax / (kTableSize - 1);
        val.resize(kTableSize);
        val[0] = 0.0;
        for (int i = 1; i < kTableSize; ++i) {
            double sigma = i * step;
            double j = 1.0 - gauss_hermite_mean(0.5 * sigma * sigma, sigma * sigma, 96, mi_loss);
            val[i] = std::clamp(j, 0.0, 1.0 - 1e-15);
        }
        // Quadrature noise at the saturated tail can flatten the table; force
        // strict monotonicity so inversion stays well defined.
        for (int i = 1; i < kTableSize; ++i)
            if (val[i] <= val[i - 1]) val[i] = std::nextafter(val[i - 1], 1.0);
    }
};

const Table& table() {
    static Table t;
    return t;
}

}  // namespace

double jfun_max_sigma() { return kSigmaMax; }

double jfun_max_mi() { return table().val.back(); }

double jfun(double sigma) {
    if (!(sigma >= 0.0)) throw std::invalid_argument("jfun: sigma must be >= 0");
    const Table& t = table();
    if (sigma >= kSigmaMax) return t.val.back();
    double pos = sigma / t.step;
    int i = static_cast<int>(pos);
    double frac = pos - i;
    return t.val[i] + frac * (t.val[i + 1] - t.val[i]);
}

double jinv(double mi) {
    if (!(mi >= 0.0) || mi >= 1.0) throw std::invalid_argument("jinv: MI outside [0,1)");
    const Table& t = table();
    if (mi >= t.val.back()) return kSigmaMax;
    if (mi <= 0.0) return 0.0;
    // Binary search for the bracketing segment, then invert the linear piece.
    auto it = std::lower_bound(t.val.begin(), t.val.end(), mi);
    int i = static_cast<int>(it - t.val.begin());
    if (i == 0) return 0.0;
    double lo = t.val[i - 1], hi = t.val[i];
    double frac = (mi - lo) / (hi - lo);
    return (i - 1 + frac) * t.step;
}

double jfun_quadrature(double sigma) {
    if (!(sigma >= 0.0)) throw std::invalid_argument("jfun_quadrature: sigma must be >= 0");
    if (sigma == 0.0) return 0.0;
    return 1.0 - gauss_hermite_mean(0.5 * sigma * sigma, sigma * sigma, 128, mi_loss);
}

}  // namespace scfec
