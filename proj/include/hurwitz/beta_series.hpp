#pragma once
#include <vector>

#include "hurwitz/param_poly.hpp"

// Truncated power series in beta with ParamPoly coefficients, used for the
// genus expansion of weighted counts: coeffs_[d] multiplies beta^d, and
// everything of degree > order is discarded.  All coefficients share one
// (L,M) context.
namespace hurwitz {

class BetaSeries {
  public:
    BetaSeries(int L, int M, int order)
        : order_(order), coeffs_(order + 1, ParamPoly(L, M)) {}

    int order() const { return order_; }
    int L() const { return coeffs_[0].L(); }
    int M() const { return coeffs_[0].M(); }
    const ParamPoly& coeff(int d) const;
    void set_coeff(int d, const ParamPoly& p);

    BetaSeries& operator+=(const BetaSeries& o);
    BetaSeries& operator-=(const BetaSeries& o);
    BetaSeries& operator*=(const Rat& s);
    friend BetaSeries operator+(BetaSeries a, const BetaSeries& b) { return a += b; }
    friend BetaSeries operator-(BetaSeries a, const BetaSeries& b) { return a -= b; }
    friend BetaSeries operator*(BetaSeries a, const Rat& s) { return a *= s; }
    bool operator==(const BetaSeries& o) const;
    bool is_zero() const;

    // Exact evaluation at a rational point (c,d,beta).
    Rat eval(const std::vector<Rat>& cVals, const std::vector<Rat>& dVals,
             const Rat& beta) const;

  private:
    void require_compatible(const BetaSeries& o) const;
    int order_;
    std::vector<ParamPoly> coeffs_;
};

// Cauchy product truncated at min(a.order, b.order).
BetaSeries series_mul(const BetaSeries& a, const BetaSeries& b);

} // namespace hurwitz
