#include "scfec/bch.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace scfec {

BchCode::BchCode(int nu, int t, int s)
    : nu_(nu), t_(t), s_(s), field_(nu) {
    if (t < 1) throw std::invalid_argument("BchCode: t must be >= 1");
    if (s < 0) throw std::invalid_argument("BchCode: s must be >= 0");
    full_n_ = (1 << nu_) - 1;
    n_ = full_n_ - s_;
    k_ = (1 << nu_) - nu_ * t_ - 1 - s_;
    if (k_ < 1) throw std::invalid_argument("BchCode: parameters leave no information bits");

    // Generator = lcm of the minimal polynomials of alpha..alpha^2t, i.e. the
    // product over the distinct cyclotomic cosets they cover.
    std::set<int> seen;
    std::vector<std::vector<int>> cosets;
    for (int j = 1; j <= 2 * t_; ++j) {
        int r = j % full_n_;
        if (seen.count(r)) continue;
        std::vector<int> coset;
        int c = r;
        do {
            coset.push_back(c);
            seen.insert(c);
            c = (2 * c) % full_n_;
        } while (c != r);
        cosets.push_back(std::move(coset));
    }

    // Multiply out prod (x - alpha^c) over GF(2^nu); the result must be binary.
    std::vector<int> g{1};
    for (const auto& coset : cosets)
        for (int c : coset) {
            std::vector<int> next(g.size() + 1, 0);
            int root = field_.alpha_pow(c);
            for (std::size_t i = 0; i < g.size(); ++i) {
                next[i + 1] ^= g[i];                       // x * g
                next[i] ^= field_.mul(g[i], root);         // root * g
            }
            g = std::move(next);
        }
    gen_.resize(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (g[i] != 0 && g[i] != 1) throw std::logic_error("BchCode: generator is not binary");
        gen_[i] = static_cast<std::uint8_t>(g[i]);
    }
    if (static_cast<int>(gen_.size()) - 1 != nu_ * t_)
        throw std::invalid_argument(
            "BchCode: minimal polynomials collapse, (n,k) formula does not hold for these "
            "parameters");
}

std::vector<std::uint8_t> BchCode::encode(const std::vector<std::uint8_t>& info) const {
    if (static_cast<int>(info.size()) != k_)
        throw std::invalid_argument("BchCode::encode: wrong info length");
    const int deg = nu_ * t_;
    // Systematic cyclic encoding: codeword = info * x^deg + (info * x^deg mod g),
    // with the s shortened information positions fixed to zero and dropped.
    std::vector<std::uint8_t> reg(deg, 0);
    for (int i = k_ - 1; i >= 0; --i) {
        std::uint8_t fb = static_cast<std::uint8_t>(info[i] ^ reg[deg - 1]);
        for (int j = deg - 1; j > 0; --j)
            reg[j] = static_cast<std::uint8_t>(reg[j - 1] ^ (fb & gen_[j]));
        reg[0] = static_cast<std::uint8_t>(fb & gen_[0]);
    }
    std::vector<std::uint8_t> cw(n_);
    std::copy(reg.begin(), reg.end(), cw.begin());
    std::copy(info.begin(), info.end(), cw.begin() + deg);
    return cw;
}

std::vector<int> BchCode::syndromes(const std::vector<std::uint8_t>& word) const {
    if (static_cast<int>(word.size()) != n_)
        throw std::invalid_argument("BchCode::syndromes: wrong word length");
    std::vector<int> syn(2 * t_, 0);
    for (int i = 0; i < n_; ++i) {
        if (!word[i]) continue;
        for (int j = 0; j < 2 * t_; ++j)
            syn[j] ^= field_.alpha_pow(static_cast<long long>(j + 1) * i);
    }
    return syn;
}

BchCode::BddResult BchCode::bdd_decode(std::vector<std::uint8_t>& word,
                                       std::vector<int>* flip_positions) const {
    if (flip_positions) flip_positions->clear();
    std::vector<int> syn = syndromes(word);
    if (std::all_of(syn.begin(), syn.end(), [](int v) { return v == 0; }))
        return {true, 0};

    // Berlekamp-Massey for the error locator Lambda.
    std::vector<int> C{1}, B{1};
    int L = 0, shift = 1, b = 1;
    for (int nIt = 0; nIt < 2 * t_; ++nIt) {
        int d = syn[nIt];
        for (int i = 1; i <= L && i < static_cast<int>(C.size()); ++i)
            d ^= field_.mul(C[i], syn[nIt - i]);
        if (d == 0) {
            ++shift;
        } else if (2 * L <= nIt) {
            std::vector<int> T = C;
            int coef = field_.div(d, b);
            if (static_cast<int>(C.size()) < static_cast<int>(B.size()) + shift)
                C.resize(B.size() + shift, 0);
            for (std::size_t i = 0; i < B.size(); ++i)
                C[i + shift] ^= field_.mul(coef, B[i]);
            L = nIt + 1 - L;
            B = std::move(T);
            b = d;
            shift = 1;
        } else {
            int coef = field_.div(d, b);
            if (static_cast<int>(C.size()) < static_cast<int>(B.size()) + shift)
                C.resize(B.size() + shift, 0);
            for (std::size_t i = 0; i < B.size(); ++i)
                C[i + shift] ^= field_.mul(coef, B[i]);
            ++shift;
        }
    }
    while (!C.empty() && C.back() == 0) C.pop_back();
    int degree = static_cast<int>(C.size()) - 1;
    if (L > t_ || degree != L) return {false, 0};

    // Chien search over the transmitted positions only; the shortened prefix
    // can never hold an error.
    std::vector<int> terms(degree + 1);
    for (int j = 0; j <= degree; ++j) terms[j] = C[j];
    std::vector<int> roots;
    for (int i = 0; i < n_ && static_cast<int>(roots.size()) <= degree; ++i) {
        // terms[j] currently holds C_j * alpha^{-j i}.
        int sum = 0;
        for (int j = 0; j <= degree; ++j) sum ^= terms[j];
        if (sum == 0) roots.push_back(i);
        for (int j = 1; j <= degree; ++j)
            terms[j] = field_.mul(terms[j], field_.alpha_pow(-j));
    }
    if (static_cast<int>(roots.size()) != degree) return {false, 0};

    for (int pos : roots) {
        word[pos] ^= 1;
        if (flip_positions) flip_positions->push_back(pos);
    }
    return {true, degree};
}

}  // namespace scfec
