#pragma once
#include <vector>

#include "hurwitz/pq_series.hpp"
#include "hurwitz/weight_gen.hpp"

// The hypergeometric tau-function of a rational weight G, materialized as its
// coefficient table on the double power-sum basis: the (N, mu, nu) entry is
// the beta-series  sum_lambda r_lambda chi_lambda(mu) chi_lambda(nu) /
// (z_mu z_nu),  whose beta^d coefficient is the weighted Hurwitz number
// H^d(mu, nu).  Taking log turns the table into its connected counterpart.
namespace hurwitz {

struct GSeries {
    WeightGenSpec g;
    int dMax = 0;
    std::vector<ParamPoly> taylor; // Taylor coefficients g_0 .. g_dMax of G(z)
};

// g_i = sum_{j=0}^{i} e_j(c_1..c_L) h_{i-j}(d_1..d_M), with g_0 = 1.
GSeries g_coeffs(const WeightGenSpec& g, int dMax);

// r_j = G(j beta) = sum_i g_i j^i beta^i, truncated past beta^dMax.
BetaSeries r_j(const WeightGenSpec& g, int j, int dMax);

// Content product r_lambda = prod_{(i,j) in lambda} r_{j-i}.
BetaSeries r_lambda(const WeightGenSpec& g, const Partition& lambda, int dMax);

// Full coefficient table for N <= NMax; the parallel variant splits the
// (mu, nu) pairs of each N across threads and merges into fixed slots, so it
// is bit-identical to the serial reference.
PQSeries tau_table(const WeightGenSpec& g, int NMax, int dMax);
PQSeries tau_table_parallel(const WeightGenSpec& g, int NMax, int dMax);

// pq_log of the table; beta^d coefficients are the connected numbers.
PQSeries connected_table(const PQSeries& tau);

} // namespace hurwitz
