#include "hurwitz/param_poly.hpp"

#include <sstream>

#include "hurwitz/errors.hpp"

namespace hurwitz {

ParamPoly ParamPoly::constant(int L, int M, const Rat& value) {
    ParamPoly p(L, M);
    p.add_term(Expo(L + M, 0), value);
    return p;
}

ParamPoly ParamPoly::monomial(int L, int M, const Expo& e, const Rat& coeff) {
    if (static_cast<int>(e.size()) != L + M)
        throw DimensionError("monomial exponent vector has wrong length");
    for (int x : e)
        if (x < 0)
            throw DomainError("negative exponent in monomial");
    ParamPoly p(L, M);
    p.add_term(e, coeff);
    return p;
}

ParamPoly ParamPoly::param(int L, int M, char kind, int index) {
    if (kind != 'c' && kind != 'd')
        throw DomainError("parameter kind must be 'c' or 'd'");
    int bound = (kind == 'c') ? L : M;
    if (index < 1 || index > bound)
        throw DomainError("parameter index out of range for context");
    Expo e(L + M, 0);
    e[(kind == 'c' ? 0 : L) + index - 1] = 1;
    ParamPoly p(L, M);
    p.add_term(e, 1);
    return p;
}

void ParamPoly::add_term(const Expo& e, const Rat& coeff) {
    if (static_cast<int>(e.size()) != L_ + M_)
        throw DimensionError("exponent vector length does not match (L,M) context");
    if (coeff == 0)
        return;
    auto [it, fresh] = terms_.emplace(e, coeff);
    if (!fresh) {
        it->second += coeff;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Rat ParamPoly::coeff(const Expo& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

void ParamPoly::require_same_context(const ParamPoly& o) const {
    if (L_ != o.L_ || M_ != o.M_)
        throw DimensionError("mixed (L,M) parameter contexts");
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
    require_same_context(o);
    for (const auto& [e, q] : o.terms_)
        add_term(e, q);
    return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
    require_same_context(o);
    for (const auto& [e, q] : o.terms_)
        add_term(e, -q);
    return *this;
}

ParamPoly& ParamPoly::operator*=(const Rat& s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, q] : terms_)
        q *= s;
    return *this;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
    a.require_same_context(b);
    ParamPoly out(a.L_, a.M_);
    Expo e(a.L_ + a.M_);
    for (const auto& [ea, qa] : a.terms_)
        for (const auto& [eb, qb] : b.terms_) {
            for (size_t k = 0; k < e.size(); ++k)
                e[k] = ea[k] + eb[k];
            out.add_term(e, qa * qb);
        }
    return out;
}

bool ParamPoly::operator==(const ParamPoly& o) const {
    return L_ == o.L_ && M_ == o.M_ && terms_ == o.terms_;
}

Rat ParamPoly::eval(const std::vector<Rat>& cVals, const std::vector<Rat>& dVals) const {
    if (static_cast<int>(cVals.size()) != L_ || static_cast<int>(dVals.size()) != M_)
        throw DimensionError("evaluation point does not match (L,M) context");
    Rat out = 0;
    for (const auto& [e, q] : terms_) {
        Rat term = q;
        for (int i = 0; i < L_; ++i)
            if (e[i] != 0)
                term *= rat_pow(cVals[i], e[i]);
        for (int j = 0; j < M_; ++j)
            if (e[L_ + j] != 0)
                term *= rat_pow(dVals[j], e[L_ + j]);
        out += term;
    }
    return out;
}

double ParamPoly::eval_double(const std::vector<double>& cVals,
                              const std::vector<double>& dVals) const {
    if (static_cast<int>(cVals.size()) != L_ || static_cast<int>(dVals.size()) != M_)
        throw DimensionError("evaluation point does not match (L,M) context");
    double out = 0;
    for (const auto& [e, q] : terms_) {
        double term = q.get_d();
        for (int i = 0; i < L_; ++i)
            for (int k = 0; k < e[i]; ++k)
                term *= cVals[i];
        for (int j = 0; j < M_; ++j)
            for (int k = 0; k < e[L_ + j]; ++k)
                term *= dVals[j];
        out += term;
    }
    return out;
}

std::string ParamPoly::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, q] : terms_) {
        Rat a = q;
        if (!first)
            os << (a < 0 ? " - " : " + ");
        else if (a < 0)
            os << "-";
        first = false;
        if (a < 0)
            a = -a;
        bool bare = true; // no variable part yet
        auto emit = [&](char kind, int idx, int pow) {
            if (pow == 0)
                return;
            if (!bare)
                os << "*";
            os << kind << idx;
            if (pow > 1)
                os << "^" << pow;
            bare = false;
        };
        std::string coeff = rat_to_string(a);
        bool coeffShown = false;
        if (coeff != "1") {
            os << coeff;
            coeffShown = true;
            bare = false;
        }
        for (int i = 0; i < L_; ++i)
            emit('c', i + 1, e[i]);
        for (int j = 0; j < M_; ++j)
            emit('d', j + 1, e[L_ + j]);
        if (bare && !coeffShown)
            os << "1";
    }
    return os.str();
}

} // namespace hurwitz
