#pragma once

namespace scfec {

/// Mutual information of a consistent-Gaussian LLR message N(sigma^2/2,
/// sigma^2) with its bit. Strictly increasing from jfun(0) = 0 towards 1.
/// Table-driven; the table is built once from Gauss-Hermite quadrature of
/// the MI integral. Arguments above the table end saturate.
double jfun(double sigma);

/// Inverse of jfun on [0, jfun_max_mi()); larger MIs clamp to jfun_max_sigma().
double jinv(double mi);

double jfun_max_sigma();
double jfun_max_mi();

/// Direct quadrature evaluation of the same integral, kept as an independent
/// cross-check path for the table.
double jfun_quadrature(double sigma);

}  // namespace scfec
