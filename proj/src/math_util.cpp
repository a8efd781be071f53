#include "scfec/math_util.hpp"

#include <boost/math/special_functions/erf.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <Eigen/Dense>

#include <map>
#include <mutex>

namespace scfec {

double qfunc_inv(double p) {
    if (!(p > 0.0) || !(p < 1.0)) throw std::invalid_argument("qfunc_inv: p outside (0,1)");
    return std::sqrt(2.0) * boost::math::erfc_inv(2.0 * p);
}

double poisson_tail(double lambda, int t) {
    if (lambda < 0.0) throw std::invalid_argument("poisson_tail: lambda < 0");
    if (t < 0) throw std::invalid_argument("poisson_tail: t < 0");
    if (lambda == 0.0) return 0.0;
    // 1 - Q(t+1, lambda) = P(t+1, lambda), the regularized lower gamma.
    return boost::math::gamma_p(double(t) + 1.0, lambda);
}

namespace {

GaussHermite compute_gauss_hermite(int n) {
    // Golub-Welsch: nodes are eigenvalues of the symmetric tridiagonal Jacobi
    // matrix with off-diagonals sqrt(k/2); weights from first eigenvector
    // components scaled by sqrt(pi).
    Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(n, n);
    for (int k = 1; k < n; ++k) {
        double b = std::sqrt(k / 2.0);
        jac(k, k - 1) = b;
        jac(k - 1, k) = b;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jac);
    GaussHermite gh;
    gh.nodes.resize(n);
    gh.weights.resize(n);
    const double sqrt_pi = std::sqrt(kPi);
    for (int k = 0; k < n; ++k) {
        gh.nodes[k] = es.eigenvalues()(k);
        double v0 = es.eigenvectors()(0, k);
        gh.weights[k] = sqrt_pi * v0 * v0;
    }
    return gh;
}

}  // namespace

const GaussHermite& gauss_hermite(int n) {
    if (n < 1) throw std::invalid_argument("gauss_hermite: n < 1");
    static std::mutex mtx;
    static std::map<int, GaussHermite> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, compute_gauss_hermite(n)).first;
    return it->second;
}

}  // namespace scfec
