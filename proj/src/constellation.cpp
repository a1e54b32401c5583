#include "hurwitz/constellation.hpp"

#include <algorithm>
#include <map>

#include "hurwitz/errors.hpp"

namespace hurwitz {

int Spectrum::total_squares() const {
    int t = 0;
    for (int j : J)
        t += j;
    return t;
}

namespace {

void require_spectrum(const Spectrum& sp) {
    if (sp.L < 0)
        throw DomainError("spectrum needs L >= 0");
    for (int j : sp.J)
        if (j < 0)
            throw DomainError("spectrum multiplicities must be nonnegative");
}

} // namespace

std::vector<CFLabel> cf_slots(const Spectrum& spectrum) {
    require_spectrum(spectrum);
    std::vector<CFLabel> slots;
    slots.push_back({0, 0}); // black
    for (int i = 1; i <= spectrum.L; ++i)
        slots.push_back({i, 0});
    for (int colour = 1; colour <= spectrum.M(); ++colour)
        for (int j = 1; j <= spectrum.J[colour - 1]; ++j)
            slots.push_back({colour, j});
    slots.push_back({spectrum.L + 1, 0}); // white
    return slots;
}

const Permutation& Constellation::factor(const CFLabel& label) const {
    const auto slots = cf_slots(spectrum);
    for (size_t i = 0; i < slots.size(); ++i)
        if (slots[i] == label)
            return factors[i];
    throw DomainError("no such slot in this spectrum");
}

Constellation make_constellation(const Spectrum& spectrum,
                                 std::vector<Permutation> factors) {
    const auto slots = cf_slots(spectrum);
    if (factors.size() != slots.size())
        throw ValidationError("factor count does not match the slot count");
    for (const auto& g : factors)
        require_permutation(g);
    const int N = static_cast<int>(factors[0].size());
    if (N < 1)
        throw ValidationError("constellations need degree N >= 1");
    for (const auto& g : factors)
        if (static_cast<int>(g.size()) != N)
            throw DimensionError("factors act on different point counts");

    Permutation prod = identity_perm(N);
    for (const auto& g : factors)
        prod = compose(prod, g);
    if (!is_identity(prod))
        throw ValidationError("CF-ordered product is not the identity");
    for (size_t i = 0; i < slots.size(); ++i)
        if (slots[i].flavour > 0 && is_identity(factors[i]))
            throw ValidationError("identity permutation in a square slot");
    return Constellation{N, spectrum, std::move(factors)};
}

ClassKey class_key(const Constellation& c) {
    ClassKey key;
    key.reserve(c.factors.size());
    for (const auto& g : c.factors)
        key.push_back(cycle_type(g));
    return key;
}

std::pair<int, std::optional<int>> euler_genus(const ClassKey& key) {
    if (key.size() < 2)
        throw DomainError("class key needs at least the black and white slots");
    const int N = weight(key.front());
    for (const auto& p : key) {
        require_partition(p);
        if (weight(p) != N)
            throw DimensionError("class-key profiles have mixed weights");
    }
    int d = 0;
    for (size_t i = 1; i + 1 < key.size(); ++i)
        d += colength(key[i]);
    const int chi =
        part_count(key.back()) + part_count(key.front()) - d;
    std::optional<int> genus;
    if (chi % 2 == 0)
        genus = (2 - chi) / 2;
    return {chi, genus};
}

ConstellationWeight weight_from_key(const Spectrum& spectrum, const ClassKey& key) {
    const auto slots = cf_slots(spectrum);
    if (key.size() != slots.size())
        throw DimensionError("class key does not match the spectrum's slots");
    const int N = weight(key.front());
    const int L = spectrum.L;
    const int M = spectrum.M();

    Expo e(L + M, 0);
    int d = 0, squareColengths = 0;
    for (size_t i = 1; i + 1 < key.size(); ++i) {
        const int col = colength(key[i]);
        d += col;
        if (slots[i].flavour == 0) {
            e[slots[i].colour - 1] += col; // round middle: c_colour
        } else {
            e[L + slots[i].colour - 1] += col; // square: d_colour
            squareColengths += col;
        }
    }
    const int sign = (spectrum.total_squares() + squareColengths) % 2 == 0 ? 1 : -1;
    ConstellationWeight out;
    out.N = N;
    out.d = d;
    out.mu = key.back();
    out.nu = key.front();
    out.w = ParamPoly::monomial(L, M, e, rat(sign, factorial(N)));
    return out;
}

ConstellationWeight constellation_weight(const Constellation& c, int dMaxContext) {
    if (dMaxContext < 0)
        throw DomainError("beta-truncation context must be nonnegative");
    return weight_from_key(c.spectrum, class_key(c));
}

namespace {

Int enumeration_cost(int N, const Spectrum& sp) {
    const Int f = factorial(N);
    Int cost = f; // black slot
    for (int i = 0; i < sp.L; ++i)
        cost *= f;
    for (int s = 0; s < sp.total_squares(); ++s)
        cost *= f - 1;
    return cost;
}

using EmitFn = std::function<void(const std::vector<Permutation>&, int)>;

// Fills slots depth..k-2 and solves the white slot.  cur already holds the
// first `depth` factors, prefix is their CF-ordered product, dSoFar the
// middle colength committed so far.  Subtrees that must exceed dCap (when
// dCap >= 0) are pruned: colengths only grow along a branch.
void enumerate_tail(const std::vector<CFLabel>& slots,
                    const std::vector<Permutation>& all, int dCap,
                    std::vector<Permutation>& cur, const Permutation& prefix,
                    int dSoFar, const EmitFn& emit) {
    const size_t k = slots.size();
    const size_t depth = cur.size();
    if (depth == k - 1) {
        cur.push_back(inverse_perm(prefix));
        emit(cur, dSoFar);
        cur.pop_back();
        return;
    }
    const bool square = slots[depth].flavour > 0;
    const bool middle = depth >= 1;
    for (const auto& h : all) {
        if (square && is_identity(h))
            continue;
        const int dNext = dSoFar + (middle ? perm_colength(h) : 0);
        if (dCap >= 0 && dNext > dCap)
            continue;
        cur.push_back(h);
        enumerate_tail(slots, all, dCap, cur, compose(prefix, h), dNext, emit);
        cur.pop_back();
    }
}

void check_enumeration_bound(int N, const Spectrum& sp, long long workBound) {
    if (workBound <= 0)
        throw DomainError("work bound must be positive");
    Int cost = enumeration_cost(N, sp);
    if (cost > Int(static_cast<long>(workBound)))
        throw CapacityError("constellation enumeration cost " + cost.get_str() +
                            " exceeds work bound " + std::to_string(workBound));
}

} // namespace

void enumerate_constellations(int N, const Spectrum& spectrum, int dTarget,
                              const std::function<void(const Constellation&)>& f,
                              long long workBound) {
    if (N < 1)
        throw DomainError("enumeration needs N >= 1");
    if (dTarget < 0)
        throw DomainError("colength target must be nonnegative");
    require_spectrum(spectrum);
    check_enumeration_bound(N, spectrum, workBound);

    const auto slots = cf_slots(spectrum);
    const auto all = all_permutations(N);
    std::vector<Permutation> cur;
    cur.reserve(slots.size());
    enumerate_tail(slots, all, dTarget, cur, identity_perm(N), 0,
                   [&](const std::vector<Permutation>& factors, int d) {
                       if (d != dTarget)
                           return;
                       f(Constellation{N, spectrum, factors});
                   });
}

std::vector<Constellation> enumerate_constellations_vec(int N, const Spectrum& spectrum,
                                                        int dTarget, long long workBound) {
    std::vector<Constellation> out;
    enumerate_constellations(
        N, spectrum, dTarget, [&](const Constellation& c) { out.push_back(c); },
        workBound);
    return out;
}

namespace {

// Signed tallies per ((mu, nu), monomial exponent vector); merging these is
// commutative, so the parallel path reproduces the serial result exactly.
using ExpoCounts = std::map<Expo, long long>;
using AccMap = std::map<std::pair<Partition, Partition>, ExpoCounts>;

void merge_acc(AccMap& into, const AccMap& from) {
    for (const auto& [key, counts] : from)
        for (const auto& [e, c] : counts)
            into[key][e] += c;
}

// One constellation's contribution: +-1 at its monomial.
void tally(AccMap& acc, const std::vector<CFLabel>& slots, int L, int M,
           const std::vector<Permutation>& factors, int /*d*/) {
    Expo e(L + M, 0);
    int squareColengths = 0, squares = 0;
    for (size_t i = 1; i + 1 < slots.size(); ++i) {
        const int col = perm_colength(factors[i]);
        if (slots[i].flavour == 0) {
            e[slots[i].colour - 1] += col;
        } else {
            e[L + slots[i].colour - 1] += col;
            squareColengths += col;
            ++squares;
        }
    }
    const long long sign = (squares + squareColengths) % 2 == 0 ? 1 : -1;
    acc[{cycle_type(factors.back()), cycle_type(factors.front())}][e] += sign;
}

// All spectra with l(J) = M and |J| <= budget (each square adds at least one
// unit of colength, so larger |J| cannot meet the beta cutoff).
std::vector<Spectrum> spectra_within(int L, int M, int budget) {
    std::vector<Spectrum> out;
    std::vector<int> J(M, 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == M) {
            out.push_back(Spectrum{L, J});
            return;
        }
        for (int j = 0; j <= left; ++j) {
            J[pos] = j;
            self(self, pos + 1, left - j);
        }
        J[pos] = 0;
    };
    rec(rec, 0, budget);
    return out;
}

PQSeries assemble(const AccMap& acc, int N, int L, int M, int dMax) {
    PQSeries out(L, M, dMax, N);
    const Int nFact = factorial(N);
    for (const auto& [key, counts] : acc) {
        std::vector<ParamPoly> byDegree(dMax + 1, ParamPoly(L, M));
        for (const auto& [e, c] : counts) {
            if (c == 0)
                continue;
            int deg = 0;
            for (int x : e)
                deg += x;
            byDegree[deg].add_term(e, rat(Int(static_cast<long>(c)), nFact));
        }
        BetaSeries bs(L, M, dMax);
        for (int d = 0; d <= dMax; ++d)
            bs.set_coeff(d, byDegree[d]);
        out.add_entry(PQKey{N, key.first, key.second}, bs);
    }
    return out;
}

PQSeries sum_weights_impl(int N, int L, int M, int dMax, long long workBound,
                          bool parallel) {
    if (N < 1)
        throw DomainError("weight summation needs N >= 1");
    if (L < 0 || M < 0 || dMax < 0)
        throw DomainError("L, M and dMax must be nonnegative");

    const auto all = all_permutations(N);
    AccMap acc;
    for (const Spectrum& sp : spectra_within(L, M, dMax)) {
        check_enumeration_bound(N, sp, workBound);
        const auto slots = cf_slots(sp);
        if (!parallel) {
            std::vector<Permutation> cur;
            cur.reserve(slots.size());
            enumerate_tail(slots, all, dMax, cur, identity_perm(N), 0,
                           [&](const std::vector<Permutation>& factors, int d) {
                               tally(acc, slots, L, M, factors, d);
                           });
            continue;
        }
#pragma omp parallel
        {
            AccMap local;
            std::vector<Permutation> cur;
            cur.reserve(slots.size());
#pragma omp for schedule(dynamic) nowait
            for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(all.size()); ++i) {
                cur.assign(1, all[i]);
                enumerate_tail(slots, all, dMax, cur, all[i], 0,
                               [&](const std::vector<Permutation>& factors, int d) {
                                   tally(local, slots, L, M, factors, d);
                               });
            }
#pragma omp critical
            merge_acc(acc, local);
        }
    }
    return assemble(acc, N, L, M, dMax);
}

} // namespace

PQSeries sum_constellation_weights(int N, int L, int M, int dMax, long long workBound) {
    return sum_weights_impl(N, L, M, dMax, workBound, false);
}

PQSeries sum_constellation_weights_parallel(int N, int L, int M, int dMax,
                                            long long workBound) {
    return sum_weights_impl(N, L, M, dMax, workBound, true);
}

Census constellation_census(int N, const Spectrum& spectrum, int dMaxFilter,
                            long long workBound) {
    if (N < 1)
        throw DomainError("census needs N >= 1");
    require_spectrum(spectrum);
    const auto slots = cf_slots(spectrum);

    std::map<ClassKey, long long> counts;
    Census out;
    if (enumeration_cost(N, spectrum) <= Int(static_cast<long>(workBound))) {
        out.method = "enumeration";
        const auto all = all_permutations(N);
        std::vector<Permutation> cur;
        cur.reserve(slots.size());
        enumerate_tail(slots, all, dMaxFilter, cur, identity_perm(N), 0,
                       [&](const std::vector<Permutation>& factors, int) {
                           ClassKey key;
                           key.reserve(factors.size());
                           for (const auto& g : factors)
                               key.push_back(cycle_type(g));
                           ++counts[key];
                       });
    } else {
        // Per-class route: the number of factorizations with fixed slot
        // profiles is N! times the character-sum Hurwitz number.
        out.method = "class-formula";
        const auto parts = partitions_of(N);
        const Int nFact = factorial(N);
        ClassKey key(slots.size());
        auto rec = [&](auto&& self, size_t i) -> void {
            if (i == slots.size()) {
                int d = 0;
                for (size_t s = 1; s + 1 < key.size(); ++s)
                    d += colength(key[s]);
                if (dMaxFilter >= 0 && d > dMaxFilter)
                    return;
                Rat cnt = Rat(nFact) * pure_hurwitz_char(key);
                if (cnt == 0)
                    return;
                counts[key] = static_cast<long long>(cnt.get_num().get_si());
                return;
            }
            for (const auto& p : parts) {
                if (slots[i].flavour > 0 && is_trivial(p))
                    continue;
                key[i] = p;
                self(self, i + 1);
            }
        };
        rec(rec, 0);
    }

    for (const auto& [key, count] : counts) {
        CensusRow row;
        row.key = key;
        row.count = count;
        auto [chi, genus] = euler_genus(key);
        row.chi = chi;
        row.genus = genus;
        row.weight = weight_from_key(spectrum, key).w;
        out.rows.push_back(std::move(row));
    }
    return out;
}

} // namespace hurwitz
