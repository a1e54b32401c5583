#pragma once
#include <map>

#include "hurwitz/beta_series.hpp"
#include "hurwitz/partition.hpp"

// The double power-sum algebra: elements are finite sums of gamma^N p_mu q_nu
// with BetaSeries coefficients, where mu and nu are partitions of N.  Keys are
// ordered by N ascending, then mu and nu in reverse lexicographic order, so a
// map walk visits entries in the order tables are printed.  gamma is nilpotent
// past the truncation degree Nmax, which makes log and exp finite sums.
namespace hurwitz {

struct PQKey {
    int N = 0;
    Partition mu, nu;
    bool operator==(const PQKey& o) const { return N == o.N && mu == o.mu && nu == o.nu; }
};

struct PQKeyLess {
    bool operator()(const PQKey& a, const PQKey& b) const {
        if (a.N != b.N)
            return a.N < b.N;
        if (a.mu != b.mu)
            return RevlexLess{}(a.mu, b.mu);
        return RevlexLess{}(a.nu, b.nu);
    }
};

class PQSeries {
  public:
    PQSeries(int L, int M, int betaOrder, int Nmax)
        : L_(L), M_(M), betaOrder_(betaOrder), Nmax_(Nmax) {}

    int L() const { return L_; }
    int M() const { return M_; }
    int beta_order() const { return betaOrder_; }
    int Nmax() const { return Nmax_; }

    const std::map<PQKey, BetaSeries, PQKeyLess>& entries() const { return entries_; }
    // Returns the coefficient of gamma^N p_mu q_nu; absent keys read as zero.
    BetaSeries entry(const PQKey& key) const;
    // Validates that mu, nu are partitions of key.N; drops keys past Nmax and
    // erases entries that cancel to zero.
    void add_entry(const PQKey& key, const BetaSeries& value);
    void set_entry(const PQKey& key, const BetaSeries& value);

    PQSeries& operator+=(const PQSeries& o);
    PQSeries& operator-=(const PQSeries& o);
    PQSeries& operator*=(const Rat& s);
    friend PQSeries operator+(PQSeries a, const PQSeries& b) { return a += b; }
    friend PQSeries operator-(PQSeries a, const PQSeries& b) { return a -= b; }
    bool operator==(const PQSeries& o) const;

    static PQSeries one(int L, int M, int betaOrder, int Nmax);

  private:
    void require_compatible(const PQSeries& o) const;
    int L_, M_, betaOrder_, Nmax_;
    std::map<PQKey, BetaSeries, PQKeyLess> entries_;
    friend PQSeries pq_mul(const PQSeries&, const PQSeries&);
};

// Product in the algebra: gamma exponents add, power sums concatenate
// (p_mu p_mu' = p_{mu union mu'}), coefficients multiply as beta-series.
PQSeries pq_mul(const PQSeries& a, const PQSeries& b);

// log of a series with constant term 1, computed as the finite alternating
// sum over powers of (T - 1); exp of a series with constant term 0.  These
// are mutually inverse on their domains.
PQSeries pq_log(const PQSeries& t);
PQSeries pq_exp(const PQSeries& s);

} // namespace hurwitz
