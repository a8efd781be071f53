#pragma once

#include <cstdint>
#include <vector>

namespace scfec {

/// GF(2^m) arithmetic through log/antilog tables over a fixed primitive
/// polynomial per extension degree (recorded in the implementation for
/// reproducibility). Elements are integers 0..2^m-1 in polynomial basis.
class Gf2m {
  public:
    explicit Gf2m(int m);

    int m() const { return m_; }
    int order() const { return order_; }  // multiplicative order 2^m - 1

    int mul(int a, int b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }
    int inv(int a) const;
    int div(int a, int b) const { return mul(a, inv(b)); }
    /// alpha^e for any integer e (reduced mod 2^m - 1).
    int alpha_pow(long long e) const {
        long long r = e % order_;
        if (r < 0) r += order_;
        return exp_[r];
    }
    int log(int a) const;  // discrete log of a nonzero element

    /// Table self-test: every nonzero element satisfies a^(2^m - 1) = 1.
    bool check_tables() const;

  private:
    int m_ = 0;
    int order_ = 0;
    std::vector<int> exp_;  // size 2*order, doubled to skip reductions
    std::vector<int> log_;
};

}  // namespace scfec
