#include "hurwitz/pq_series.hpp"

#include "hurwitz/errors.hpp"

namespace hurwitz {

namespace {

void require_key_valid(const PQKey& key) {
    require_partition(key.mu);
    require_partition(key.nu);
    if (key.N < 0)
        throw DomainError("negative gamma-degree in key");
    if (weight(key.mu) != key.N || weight(key.nu) != key.N)
        throw DomainError("key partitions must both have weight N");
}

} // namespace

BetaSeries PQSeries::entry(const PQKey& key) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? BetaSeries(L_, M_, betaOrder_) : it->second;
}

void PQSeries::add_entry(const PQKey& key, const BetaSeries& value) {
    require_key_valid(key);
    if (value.L() != L_ || value.M() != M_ || value.order() != betaOrder_)
        throw DimensionError("entry value has mismatched context or order");
    if (key.N > Nmax_)
        return; // nilpotent past the truncation degree
    auto it = entries_.find(key);
    if (it == entries_.end()) {
        if (!value.is_zero())
            entries_.emplace(key, value);
        return;
    }
    it->second += value;
    if (it->second.is_zero())
        entries_.erase(it);
}

void PQSeries::set_entry(const PQKey& key, const BetaSeries& value) {
    require_key_valid(key);
    if (value.L() != L_ || value.M() != M_ || value.order() != betaOrder_)
        throw DimensionError("entry value has mismatched context or order");
    if (key.N > Nmax_)
        return;
    entries_.erase(key);
    if (!value.is_zero())
        entries_.emplace(key, value);
}

void PQSeries::require_compatible(const PQSeries& o) const {
    if (L_ != o.L_ || M_ != o.M_)
        throw DimensionError("mixed (L,M) parameter contexts");
    if (betaOrder_ != o.betaOrder_ || Nmax_ != o.Nmax_)
        throw DimensionError("mixed truncation orders");
}

PQSeries& PQSeries::operator+=(const PQSeries& o) {
    require_compatible(o);
    for (const auto& [k, v] : o.entries_)
        add_entry(k, v);
    return *this;
}

PQSeries& PQSeries::operator-=(const PQSeries& o) {
    require_compatible(o);
    for (const auto& [k, v] : o.entries_) {
        BetaSeries neg = v;
        neg *= Rat(-1);
        add_entry(k, neg);
    }
    return *this;
}

PQSeries& PQSeries::operator*=(const Rat& s) {
    if (s == 0) {
        entries_.clear();
        return *this;
    }
    for (auto& [k, v] : entries_)
        v *= s;
    return *this;
}

bool PQSeries::operator==(const PQSeries& o) const {
    return L_ == o.L_ && M_ == o.M_ && betaOrder_ == o.betaOrder_ && Nmax_ == o.Nmax_ &&
           entries_ == o.entries_;
}

PQSeries PQSeries::one(int L, int M, int betaOrder, int Nmax) {
    PQSeries u(L, M, betaOrder, Nmax);
    BetaSeries c(L, M, betaOrder);
    c.set_coeff(0, ParamPoly::constant(L, M, 1));
    u.set_entry(PQKey{0, {}, {}}, c);
    return u;
}

PQSeries pq_mul(const PQSeries& a, const PQSeries& b) {
    a.require_compatible(b);
    PQSeries out(a.L_, a.M_, a.betaOrder_, a.Nmax_);
    for (const auto& [ka, va] : a.entries_) {
        if (ka.N > a.Nmax_)
            continue;
        for (const auto& [kb, vb] : b.entries_) {
            if (ka.N + kb.N > a.Nmax_)
                continue;
            PQKey k{ka.N + kb.N, union_partitions(ka.mu, kb.mu),
                    union_partitions(ka.nu, kb.nu)};
            out.add_entry(k, series_mul(va, vb));
        }
    }
    return out;
}

PQSeries pq_log(const PQSeries& t) {
    PQSeries u = t; // u = t - 1
    {
        BetaSeries c0 = t.entry(PQKey{0, {}, {}});
        BetaSeries unit(t.L(), t.M(), t.beta_order());
        unit.set_coeff(0, ParamPoly::constant(t.L(), t.M(), 1));
        if (!(c0 == unit))
            throw DomainError("pq_log requires constant term 1");
        u -= PQSeries::one(t.L(), t.M(), t.beta_order(), t.Nmax());
    }
    // Every key of u has N >= 1, so u^k dies past k = Nmax and the log
    // series  sum (-1)^{k+1} u^k / k  terminates.
    PQSeries out(t.L(), t.M(), t.beta_order(), t.Nmax());
    PQSeries power = u;
    for (int k = 1; k <= t.Nmax(); ++k) {
        PQSeries term = power;
        term *= rat((k % 2 == 1) ? 1 : -1, k);
        out += term;
        if (k < t.Nmax())
            power = pq_mul(power, u);
    }
    return out;
}

PQSeries pq_exp(const PQSeries& s) {
    if (!s.entry(PQKey{0, {}, {}}).is_zero())
        throw DomainError("pq_exp requires constant term 0");
    PQSeries out = PQSeries::one(s.L(), s.M(), s.beta_order(), s.Nmax());
    PQSeries power = s;
    Rat invFact = 1;
    for (int k = 1; k <= s.Nmax(); ++k) {
        invFact /= k;
        PQSeries term = power;
        term *= invFact;
        out += term;
        if (k < s.Nmax())
            power = pq_mul(power, s);
    }
    return out;
}

} // namespace hurwitz
