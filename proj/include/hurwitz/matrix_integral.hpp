#pragma once
#include <vector>

#include "hurwitz/pq_series.hpp"

// Closed determinant formulas for the two matrix integrals attached to the
// weights G = 1/(1 - d1 z) and G = (1 + c1 z)/(1 - d1 z), and their
// gamma-truncated series counterparts for cross-checking.  The series side
// evaluates  sum_N gamma^N sum_{lambda |- N, rows <= n} r_lambda s_lambda(a)
// s_lambda(b)  with the content-product r at beta = -1/(n d1), where the
// geometric factors resum in closed form; Schur values come from the
// character expansion over power sums.
namespace hurwitz {

struct SpectralPair {
    int n = 0;
    std::vector<double> a, b; // eigenvalues of the two matrices
};

// t_i = (1/i) sum_k a_k^i and s_i likewise for b, for 1 <= i <= iMax;
// index 0 of each returned vector is unused padding.
std::pair<std::vector<double>, std::vector<double>> trace_power_sums(
    const SpectralPair& p, int iMax);

// (prod_{k<n} k!) det(e^{gamma n a_i b_j}) / ((n gamma)^{n(n-1)/2} Vdm(a) Vdm(b)).
// Coincident eigenvalues, or gamma = 0 with n > 1, raise SingularityError.
double hciz_closed(const SpectralPair& p, double gamma);

// The linear-over-linear weight integral:
//   (prod_{k<n} k! / (1 - n(1 + d1/c1))_k)
//   * det[(1 - z a_i b_j)^(n(1+d1/c1) - 1)] / (z^{n(n-1)/2} Vdm(a) Vdm(b)),
// with z = -gamma c1/d1.  Requires c1, d1 nonzero and |z a_i b_j| < 1.
double ho_closed(const SpectralPair& p, double c1, double d1, double gamma);

// Literal numeric specialization of a tau coefficient table:
// sum over stored keys of gamma^N * (beta-series at betaVal, c = cVals,
// d = dVals) * prod_i tr(A^{mu_i}) * prod_j tr(B^{nu_j}).
double tau_specialize(const PQSeries& tau, const SpectralPair& p,
                      const std::vector<Rat>& cVals, const std::vector<Rat>& dVals,
                      const Rat& betaVal, double gammaVal);

// gamma-truncated trace series at the determinant specializations; the
// content products are resummed exactly, so these converge as NMax grows
// (unlike a beta-truncated table evaluated at beta = -1/(n d1)).
double hciz_series(const SpectralPair& p, double gamma, int NMax);
double ho_series(const SpectralPair& p, double c1, double d1, double gamma, int NMax);

struct HcizReport {
    int n = 0;
    double gamma = 0;
    double lhs = 0;    // closed determinant value
    double rhs = 0;    // truncated series value
    double rel_err = 0;
    int NMax = 0;
};

HcizReport hciz_vs_series(const SpectralPair& p, double gamma, int NMax);
HcizReport ho_vs_series(const SpectralPair& p, double c1, double d1, double gamma,
                        int NMax);

} // namespace hurwitz
