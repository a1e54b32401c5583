#include "hurwitz/beta_series.hpp"

#include "hurwitz/errors.hpp"

namespace hurwitz {

const ParamPoly& BetaSeries::coeff(int d) const {
    if (d < 0 || d > order_)
        throw DomainError("beta-degree outside series order");
    return coeffs_[d];
}

void BetaSeries::set_coeff(int d, const ParamPoly& p) {
    if (d < 0 || d > order_)
        throw DomainError("beta-degree outside series order");
    if (p.L() != L() || p.M() != M())
        throw DimensionError("coefficient has mismatched (L,M) context");
    coeffs_[d] = p;
}

void BetaSeries::require_compatible(const BetaSeries& o) const {
    if (L() != o.L() || M() != o.M())
        throw DimensionError("mixed (L,M) parameter contexts");
    if (order_ != o.order_)
        throw DimensionError("mixed series truncation orders");
}

BetaSeries& BetaSeries::operator+=(const BetaSeries& o) {
    require_compatible(o);
    for (int d = 0; d <= order_; ++d)
        coeffs_[d] += o.coeffs_[d];
    return *this;
}

BetaSeries& BetaSeries::operator-=(const BetaSeries& o) {
    require_compatible(o);
    for (int d = 0; d <= order_; ++d)
        coeffs_[d] -= o.coeffs_[d];
    return *this;
}

BetaSeries& BetaSeries::operator*=(const Rat& s) {
    for (auto& p : coeffs_)
        p *= s;
    return *this;
}

bool BetaSeries::operator==(const BetaSeries& o) const {
    return order_ == o.order_ && coeffs_ == o.coeffs_;
}

bool BetaSeries::is_zero() const {
    for (const auto& p : coeffs_)
        if (!p.is_zero())
            return false;
    return true;
}

Rat BetaSeries::eval(const std::vector<Rat>& cVals, const std::vector<Rat>& dVals,
                     const Rat& beta) const {
    // Horner evaluation keeps the number of big-rational multiplies linear.
    Rat out = 0;
    for (int d = order_; d >= 0; --d)
        out = out * beta + coeffs_[d].eval(cVals, dVals);
    return out;
}

BetaSeries series_mul(const BetaSeries& a, const BetaSeries& b) {
    if (a.L() != b.L() || a.M() != b.M())
        throw DimensionError("mixed (L,M) parameter contexts");
    int order = std::min(a.order(), b.order());
    BetaSeries out(a.L(), a.M(), order);
    for (int d = 0; d <= order; ++d) {
        ParamPoly acc(a.L(), a.M());
        for (int i = 0; i <= d; ++i)
            acc += a.coeff(i) * b.coeff(d - i);
        out.set_coeff(d, acc);
    }
    return out;
}

} // namespace hurwitz
