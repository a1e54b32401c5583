#include "hurwitz/tau.hpp"

#include "hurwitz/characters.hpp"
#include "hurwitz/errors.hpp"

namespace hurwitz {

namespace {

// Elementary symmetric e_j in the c-parameters of an (L,M) context.
ParamPoly elementary_sym(int L, int M, int j) {
    ParamPoly out(L, M);
    if (j < 0 || j > L)
        return out;
    std::vector<int> pick;
    auto rec = [&](auto&& self, int from) -> void {
        if (static_cast<int>(pick.size()) == j) {
            Expo e(L + M, 0);
            for (int i : pick)
                e[i] = 1;
            out.add_term(e, 1);
            return;
        }
        for (int i = from; i < L; ++i) {
            pick.push_back(i);
            self(self, i + 1);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

// Complete homogeneous h_k in the d-parameters.
ParamPoly complete_hom(int L, int M, int k) {
    ParamPoly out(L, M);
    if (k < 0)
        return out;
    std::vector<int> pick;
    auto rec = [&](auto&& self, int from) -> void {
        if (static_cast<int>(pick.size()) == k) {
            Expo e(L + M, 0);
            for (int i : pick)
                e[L + i] += 1;
            out.add_term(e, 1);
            return;
        }
        for (int i = from; i < M; ++i) {
            pick.push_back(i);
            self(self, i);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

} // namespace

GSeries g_coeffs(const WeightGenSpec& g, int dMax) {
    require_valid(g);
    if (dMax < 0)
        throw DomainError("Taylor order must be nonnegative");
    GSeries out{g, dMax, {}};
    out.taylor.reserve(dMax + 1);
    for (int i = 0; i <= dMax; ++i) {
        ParamPoly gi(g.L, g.M);
        for (int j = 0; j <= i; ++j)
            gi += elementary_sym(g.L, g.M, j) * complete_hom(g.L, g.M, i - j);
        out.taylor.push_back(gi);
    }
    return out;
}

BetaSeries r_j(const WeightGenSpec& g, int j, int dMax) {
    GSeries gs = g_coeffs(g, dMax);
    BetaSeries out(g.L, g.M, dMax);
    Rat jPow = 1;
    for (int i = 0; i <= dMax; ++i) {
        out.set_coeff(i, gs.taylor[i] * jPow);
        jPow *= j;
    }
    return out;
}

BetaSeries r_lambda(const WeightGenSpec& g, const Partition& lambda, int dMax) {
    require_partition(lambda);
    BetaSeries out(g.L, g.M, dMax);
    out.set_coeff(0, ParamPoly::constant(g.L, g.M, 1));
    for (int c : contents(lambda))
        out = series_mul(out, r_j(g, c, dMax));
    return out;
}

namespace {

// Shared worker: the (mu, nu) entries of one gamma-degree N.
std::vector<BetaSeries> entries_for_N(const WeightGenSpec& g, int N, int dMax,
                                      bool parallel) {
    const CharTable& table = char_table(N);
    const auto& parts = table.parts();
    const int p = static_cast<int>(parts.size());

    // r_j repeats across shapes; contents lie in [-(N-1), N-1].
    std::vector<BetaSeries> rByContent;
    rByContent.reserve(2 * N - 1);
    for (int c = -(N - 1); c <= N - 1; ++c)
        rByContent.push_back(r_j(g, c, dMax));
    std::vector<BetaSeries> rlam;
    rlam.reserve(p);
    for (const auto& lambda : parts) {
        BetaSeries r(g.L, g.M, dMax);
        r.set_coeff(0, ParamPoly::constant(g.L, g.M, 1));
        for (int c : contents(lambda))
            r = series_mul(r, rByContent[c + N - 1]);
        rlam.push_back(std::move(r));
    }
    std::vector<Rat> z(p);
    for (int i = 0; i < p; ++i)
        z[i] = z_mu(parts[i]);

    std::vector<BetaSeries> out(static_cast<size_t>(p) * p, BetaSeries(g.L, g.M, dMax));
    const std::ptrdiff_t pairs = static_cast<std::ptrdiff_t>(p) * p;
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (std::ptrdiff_t idx = 0; idx < pairs; ++idx) {
        const int mi = static_cast<int>(idx / p);
        const int ni = static_cast<int>(idx % p);
        BetaSeries acc(g.L, g.M, dMax);
        for (int li = 0; li < p; ++li) {
            const long chi = static_cast<long>(table.value(li, mi)) * table.value(li, ni);
            if (chi == 0)
                continue;
            BetaSeries term = rlam[li];
            term *= Rat(chi);
            acc += term;
        }
        acc *= 1 / (z[mi] * z[ni]);
        out[idx] = std::move(acc);
    }
    return out;
}

PQSeries build_table(const WeightGenSpec& g, int NMax, int dMax, bool parallel) {
    require_valid(g);
    if (NMax < 0 || dMax < 0)
        throw DomainError("truncation orders must be nonnegative");
    PQSeries out(g.L, g.M, dMax, NMax);
    BetaSeries unit(g.L, g.M, dMax);
    unit.set_coeff(0, ParamPoly::constant(g.L, g.M, 1));
    out.set_entry(PQKey{0, {}, {}}, unit);
    for (int N = 1; N <= NMax; ++N) {
        const auto& parts = char_table(N).parts();
        const int p = static_cast<int>(parts.size());
        std::vector<BetaSeries> block = entries_for_N(g, N, dMax, parallel);
        for (int mi = 0; mi < p; ++mi)
            for (int ni = 0; ni < p; ++ni)
                out.set_entry(PQKey{N, parts[mi], parts[ni]},
                              block[static_cast<size_t>(mi) * p + ni]);
    }
    return out;
}

} // namespace

PQSeries tau_table(const WeightGenSpec& g, int NMax, int dMax) {
    return build_table(g, NMax, dMax, false);
}

PQSeries tau_table_parallel(const WeightGenSpec& g, int NMax, int dMax) {
    return build_table(g, NMax, dMax, true);
}

PQSeries connected_table(const PQSeries& tau) {
    return pq_log(tau);
}

} // namespace hurwitz
