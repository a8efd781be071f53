#include "scfec/gf2m.hpp"

#include <stdexcept>

namespace scfec {

namespace {

// Primitive polynomials in the usual minimal-weight convention.
int primitive_poly(int m) {
    switch (m) {
        case 2: return 0x7;      // x^2 + x + 1
        case 3: return 0xB;      // x^3 + x + 1
        case 4: return 0x13;     // x^4 + x + 1
        case 5: return 0x25;     // x^5 + x^2 + 1
        case 6: return 0x43;     // x^6 + x + 1
        case 7: return 0x89;     // x^7 + x^3 + 1
        case 8: return 0x11D;    // x^8 + x^4 + x^3 + x^2 + 1
        case 9: return 0x211;    // x^9 + x^4 + 1
        case 10: return 0x409;   // x^10 + x^3 + 1
        case 11: return 0x805;   // x^11 + x^2 + 1
        case 12: return 0x1053;  // x^12 + x^6 + x^4 + x + 1
        case 13: return 0x201B;  // x^13 + x^4 + x^3 + x + 1
        case 14: return 0x4443;  // x^14 + x^10 + x^6 + x + 1
        case 15: return 0x8003;  // x^15 + x + 1
        case 16: return 0x1100B; // x^16 + x^12 + x^3 + x + 1
        default: throw std::invalid_argument("Gf2m: unsupported extension degree");
    }
}

}  // namespace

Gf2m::Gf2m(int m) : m_(m) {
    int poly = primitive_poly(m);
    order_ = (1 << m_) - 1;
    exp_.resize(2 * order_);
    log_.assign(order_ + 1, -1);
    int x = 1;
    for (int i = 0; i < order_; ++i) {
        exp_[i] = x;
        exp_[i + order_] = x;
        log_[x] = i;
        x <<= 1;
        if (x & (1 << m_)) x ^= poly;
    }
    if (x != 1) throw std::logic_error("Gf2m: polynomial is not primitive");
}

int Gf2m::inv(int a) const {
    if (a == 0) throw std::invalid_argument("Gf2m: inverse of zero");
    return exp_[order_ - log_[a]];
}

int Gf2m::log(int a) const {
    if (a == 0) throw std::invalid_argument("Gf2m: log of zero");
    return log_[a];
}

bool Gf2m::check_tables() const {
    for (int a = 1; a <= order_; ++a) {
        long long e = static_cast<long long>(log_[a]) * order_ % order_;
        if (exp_[e] != 1 && order_ > 1) {
            // a^(2^m-1) = alpha^(log(a) * (2^m-1)) must be alpha^0 = 1.
            return false;
        }
    }
    return true;
}

}  // namespace scfec
