#pragma once
#include <map>
#include <string>
#include <vector>

#include "hurwitz/rational.hpp"

// Sparse polynomials in the weight parameters c_1..c_L, d_1..d_M with exact
// rational coefficients.  The (L,M) context is fixed per value; mixing
// contexts is a dimension error, never a silent promotion.  Terms live in a
// std::map keyed by the exponent vector (c-exponents then d-exponents), so
// iteration order — and therefore serialization — is deterministic.
namespace hurwitz {

using Expo = std::vector<int>; // length L+M, nonnegative entries

class ParamPoly {
  public:
    ParamPoly() = default;
    ParamPoly(int L, int M) : L_(L), M_(M) {}

    static ParamPoly zero(int L, int M) { return ParamPoly(L, M); }
    static ParamPoly constant(int L, int M, const Rat& value);
    static ParamPoly monomial(int L, int M, const Expo& e, const Rat& coeff);
    // Single parameter c_i (kind 'c') or d_i (kind 'd'), 1-based index.
    static ParamPoly param(int L, int M, char kind, int index);

    int L() const { return L_; }
    int M() const { return M_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Expo, Rat>& terms() const { return terms_; }

    // Merging insert; drops the term if the sum cancels.
    void add_term(const Expo& e, const Rat& coeff);
    Rat coeff(const Expo& e) const;

    ParamPoly& operator+=(const ParamPoly& o);
    ParamPoly& operator-=(const ParamPoly& o);
    ParamPoly& operator*=(const Rat& s);
    friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
    friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
    friend ParamPoly operator*(ParamPoly a, const Rat& s) { return a *= s; }
    friend ParamPoly operator*(const Rat& s, ParamPoly a) { return a *= s; }
    friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
    bool operator==(const ParamPoly& o) const;

    Rat eval(const std::vector<Rat>& cVals, const std::vector<Rat>& dVals) const;
    double eval_double(const std::vector<double>& cVals, const std::vector<double>& dVals) const;

    // "c1^2*d1" style rendering for messages and test diagnostics.
    std::string to_string() const;

  private:
    void require_same_context(const ParamPoly& o) const;
    int L_ = 0, M_ = 0;
    std::map<Expo, Rat> terms_;
};

inline ParamPoly poly_mul(const ParamPoly& a, const ParamPoly& b) { return a * b; }

} // namespace hurwitz
