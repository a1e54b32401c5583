#include <doctest.h>

#include <vector>

#include "hurwitz/errors.hpp"
#include "hurwitz/hurwitz_numbers.hpp"
#include "hurwitz/tau.hpp"

using namespace hurwitz;

namespace {

const WeightGenSpec g01{0, 1, std::nullopt, std::nullopt};
const WeightGenSpec g11{1, 1, std::nullopt, std::nullopt};
const WeightGenSpec g30{3, 0, std::nullopt, std::nullopt};

ParamPoly c_(int L, int M, int i) { return ParamPoly::param(L, M, 'c', i); }
ParamPoly d_(int L, int M, int i) { return ParamPoly::param(L, M, 'd', i); }

Partition conjugate(const Partition& la) {
    Partition out;
    for (int col = 1; !la.empty() && col <= la[0]; ++col) {
        int cnt = 0;
        for (int part : la)
            if (part >= col)
                ++cnt;
        out.push_back(cnt);
    }
    return out;
}

} // namespace

TEST_CASE("Taylor coefficients of the weight generating function") {
    // G = (1 + c1 z)/(1 - d1 z): g_i = e_i-contributions c1 d1^(i-1) + d1^i.
    const auto gs = g_coeffs(g11, 3);
    CHECK(gs.taylor[0] == ParamPoly::constant(1, 1, Rat(1)));
    CHECK(gs.taylor[1] == c_(1, 1, 1) + d_(1, 1, 1));
    CHECK(gs.taylor[2] == c_(1, 1, 1) * d_(1, 1, 1) + d_(1, 1, 1) * d_(1, 1, 1));
    // Pure polynomial weight: G = (1+c1 z)(1+c2 z)(1+c3 z), g_i = e_i(c).
    const auto gp = g_coeffs(g30, 4);
    CHECK(gp.taylor[1] == c_(3, 0, 1) + c_(3, 0, 2) + c_(3, 0, 3));
    CHECK(gp.taylor[3] == c_(3, 0, 1) * c_(3, 0, 2) * c_(3, 0, 3));
    CHECK(gp.taylor[4].is_zero());
}

TEST_CASE("content factors r_j are truncated geometric series") {
    const BetaSeries r1 = r_j(g01, 1, 2);
    CHECK(r1.coeff(0) == ParamPoly::constant(0, 1, Rat(1)));
    CHECK(r1.coeff(1) == d_(0, 1, 1));
    CHECK(r1.coeff(2) == d_(0, 1, 1) * d_(0, 1, 1));
    const BetaSeries rm1 = r_j(g01, -1, 2);
    CHECK(rm1.coeff(1) == d_(0, 1, 1) * Rat(-1));
    CHECK(rm1.coeff(2) == d_(0, 1, 1) * d_(0, 1, 1));
    const BetaSeries r0 = r_j(g01, 0, 2);
    CHECK(r0.coeff(0) == ParamPoly::constant(0, 1, Rat(1)));
    CHECK(r0.coeff(1).is_zero());
}

TEST_CASE("content product over a single row") {
    // lambda = (3): contents 0, 1, 2 give 1 + 3 d1 B + 7 d1^2 B^2.
    const BetaSeries r = r_lambda(g01, {3}, 2);
    CHECK(r.coeff(0) == ParamPoly::constant(0, 1, Rat(1)));
    CHECK(r.coeff(1) == d_(0, 1, 1) * Rat(3));
    CHECK(r.coeff(2) == d_(0, 1, 1) * d_(0, 1, 1) * Rat(7));
}

TEST_CASE("conjugating the shape flips the sign of beta in r_lambda") {
    for (int N = 1; N <= 4; ++N)
        for (const auto& la : partitions_of(N)) {
            const BetaSeries a = r_lambda(g11, la, 3);
            const BetaSeries b = r_lambda(g11, conjugate(la), 3);
            for (int d = 0; d <= 3; ++d)
                CHECK(a.coeff(d) == b.coeff(d) * (d % 2 == 0 ? Rat(1) : Rat(-1)));
        }
}

TEST_CASE("tau table fixtures") {
    const PQSeries tau = tau_table(g01, 3, 2);
    // Empty key: the constant term of the exponential-type series is 1.
    CHECK(tau.entry({0, {}, {}}).coeff(0) == ParamPoly::constant(0, 1, Rat(1)));
    // N = 1: single shape (1), r = 1, z = 1.
    CHECK(tau.entry({1, {1}, {1}}).coeff(0) == ParamPoly::constant(0, 1, Rat(1)));
    CHECK(tau.entry({1, {1}, {1}}).coeff(1).is_zero());
    // The ((3),(2,1)) entry at beta^1 is d1.
    CHECK(tau.entry({3, {3}, {2, 1}}).coeff(1) == d_(0, 1, 1));
    CHECK(tau.entry({3, {3}, {2, 1}}).coeff(0).is_zero());
}

TEST_CASE("tau coefficients equal weighted Hurwitz numbers (small sweep)") {
    for (const auto& g : {g01, g11}) {
        const PQSeries tau = tau_table(g, 3, 2);
        for (int N = 1; N <= 3; ++N)
            for (const auto& mu : partitions_of(N))
                for (const auto& nu : partitions_of(N))
                    for (int d = 0; d <= 2; ++d)
                        CHECK(tau.entry({N, mu, nu}).coeff(d) ==
                              weighted_hurwitz(g, d, mu, nu));
    }
}

TEST_CASE("connected table fixtures at beta^0") {
    const PQSeries conn = connected_table(tau_table(g01, 4, 0));
    const Expo none{0};
    CHECK(conn.entry({2, {1, 1}, {1, 1}}).coeff(0).coeff(none) == Rat(0));
    CHECK(conn.entry({2, {2}, {2}}).coeff(0).coeff(none) == rat(1, 2));
    // Transitive enumeration agrees on every weight-4 key.
    for (int N = 1; N <= 4; ++N)
        for (const auto& mu : partitions_of(N))
            for (const auto& nu : partitions_of(N))
                CHECK(conn.entry({N, mu, nu}).coeff(0).coeff(none) ==
                      pure_hurwitz_bruteforce({mu, nu}, true));
}

TEST_CASE("parallel tau table is bit-identical to the serial reference") {
    CHECK(tau_table_parallel(g11, 4, 3) == tau_table(g11, 4, 3));
    CHECK(tau_table_parallel(g30, 3, 3) == tau_table(g30, 3, 3));
}

TEST_CASE("tau table validates truncation parameters") {
    CHECK_THROWS_AS((void)tau_table(g01, -1, 0), DomainError);
    CHECK_THROWS_AS((void)tau_table(g01, 1, -1), DomainError);
    CHECK_THROWS_AS((void)tau_table(WeightGenSpec{-2, 1, {}, {}}, 1, 1), DomainError);
}
