#include "hurwitz/hurwitz_numbers.hpp"

#include <algorithm>
#include <numeric>

#include "hurwitz/characters.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/permutation.hpp"

namespace hurwitz {

void require_valid(const WeightGenSpec& g) {
    if (g.L < 0 || g.M < 0)
        throw DomainError("parameter counts L, M must be nonnegative");
    if (g.cNumeric && static_cast<int>(g.cNumeric->size()) != g.L)
        throw DimensionError("numeric c-values must have length L");
    if (g.dNumeric && static_cast<int>(g.dNumeric->size()) != g.M)
        throw DimensionError("numeric d-values must have length M");
}

namespace {

// Shared validation: k >= 1 profiles, each a partition, common weight N >= 1.
int common_weight(const ProfileTuple& profiles) {
    if (profiles.empty())
        throw DomainError("need at least one ramification profile");
    for (const auto& p : profiles)
        require_partition(p);
    int N = weight(profiles[0]);
    for (const auto& p : profiles)
        if (weight(p) != N)
            throw DimensionError("profiles have mixed weights");
    if (N < 1)
        throw DomainError("profiles must partition N >= 1");
    return N;
}

// The tuple count is invariant under permuting the profiles (adjacent factors
// swap via h_i h_{i+1} = h_{i+1} (h_{i+1}^{-1} h_i h_{i+1}), preserving cycle
// types, the identity product and transitivity), so the solved-for slot may
// be chosen freely: moving the largest class last minimizes the enumerated
// prefix and is what the cost guard charges for.
ProfileTuple largest_class_last(const ProfileTuple& profiles) {
    size_t best = 0;
    for (size_t i = 1; i < profiles.size(); ++i)
        if (class_size(profiles[i]) > class_size(profiles[best]))
            best = i;
    ProfileTuple out;
    out.reserve(profiles.size());
    for (size_t i = 0; i < profiles.size(); ++i)
        if (i != best)
            out.push_back(profiles[i]);
    out.push_back(profiles[best]);
    return out;
}

void check_brute_bound(const ProfileTuple& profiles, int N, long long workBound) {
    if (workBound <= 0)
        throw DomainError("work bound must be positive");
    Int cost = factorial(N);
    for (size_t i = 0; i + 1 < profiles.size(); ++i)
        cost *= class_size(profiles[i]);
    if (cost > Int(static_cast<long>(workBound)))
        throw CapacityError("brute-force cost " + cost.get_str() +
                            " exceeds work bound " + std::to_string(workBound));
}

struct BruteForce {
    const ProfileTuple& profiles;
    bool connectedOnly;
    long long count = 0;
    std::vector<Permutation> chosen; // factors fixed so far (tracked only when needed)

    // Enumerates factors for slots depth..k-2 on top of their running
    // product, then solves the final factor and checks its class.
    void run(size_t depth, const Permutation& prefix) {
        const size_t k = profiles.size();
        if (depth == k - 1) {
            Permutation last = inverse_perm(prefix);
            if (cycle_type(last) != profiles[depth])
                return;
            if (connectedOnly) {
                chosen.push_back(std::move(last));
                bool ok = is_transitive(chosen);
                chosen.pop_back();
                if (!ok)
                    return;
            }
            ++count;
            return;
        }
        for_each_in_class(profiles[depth], [&](const Permutation& h) {
            if (connectedOnly)
                chosen.push_back(h);
            run(depth + 1, compose(prefix, h));
            if (connectedOnly)
                chosen.pop_back();
        });
    }
};

} // namespace

Rat pure_hurwitz_char(const ProfileTuple& profiles) {
    const int N = common_weight(profiles);
    const int k = static_cast<int>(profiles.size());
    const CharTable& table = char_table(N);

    std::vector<int> cols(k);
    Rat invZ = 1;
    for (int i = 0; i < k; ++i) {
        cols[i] = table.index_of(profiles[i]);
        invZ /= z_mu(profiles[i]);
    }

    Rat total = 0;
    const auto& parts = table.parts();
    for (size_t l = 0; l < parts.size(); ++l) {
        Int chiProd = 1;
        for (int i = 0; i < k && chiProd != 0; ++i)
            chiProd *= static_cast<long>(table.value(static_cast<int>(l), cols[i]));
        if (chiProd == 0)
            continue;
        total += rat_pow(Rat(hook_product(parts[l])), k - 2) * Rat(chiProd);
    }
    return total * invZ;
}

Rat pure_hurwitz_bruteforce(const ProfileTuple& profilesIn, bool connectedOnly,
                            long long workBound) {
    const int N = common_weight(profilesIn);
    const ProfileTuple profiles = largest_class_last(profilesIn);
    check_brute_bound(profiles, N, workBound);
    BruteForce bf{profiles, connectedOnly, 0, {}};
    bf.run(0, identity_perm(N));
    return Rat(Int(static_cast<long>(bf.count))) / Rat(factorial(N));
}

Rat pure_hurwitz_bruteforce_parallel(const ProfileTuple& profilesIn, bool connectedOnly,
                                     long long workBound) {
    const int N = common_weight(profilesIn);
    const ProfileTuple profiles = largest_class_last(profilesIn);
    check_brute_bound(profiles, N, workBound);
    if (profiles.size() == 1)
        return pure_hurwitz_bruteforce(profiles, connectedOnly, workBound);

    std::vector<Permutation> first;
    first.reserve(static_cast<size_t>(class_size(profiles[0]).get_ui()));
    for_each_in_class(profiles[0], [&](const Permutation& h) { first.push_back(h); });

    long long total = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : total)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(first.size()); ++i) {
        BruteForce bf{profiles, connectedOnly, 0, {}};
        if (connectedOnly)
            bf.chosen.push_back(first[i]);
        bf.run(1, first[i]);
        total += bf.count;
    }
    return Rat(Int(static_cast<long>(total))) / Rat(factorial(N));
}

namespace {

// All length-k assignments of exponents to index tuples, literal form of the
// weight sum: the index tuple runs over subsets/multisets, sigma permutes it.
void for_each_increasing(int low, int high, int len, bool strict, std::vector<int>& cur,
                         const std::function<void(const std::vector<int>&)>& f) {
    if (static_cast<int>(cur.size()) == len) {
        f(cur);
        return;
    }
    for (int v = low; v <= high; ++v) {
        cur.push_back(v);
        for_each_increasing(strict ? v + 1 : v, high, len, strict, cur, f);
        cur.pop_back();
    }
}

ParamPoly symmetrized_index_sum(const std::vector<int>& exps, int paramCount, char kind,
                                int L, int M, bool strict) {
    // sum over index tuples (strictly or weakly increasing in {1..paramCount})
    // and permutations sigma of   prod_i  var_{idx[sigma(i)]} ^ exps[i].
    const int k = static_cast<int>(exps.size());
    ParamPoly out(L, M);
    std::vector<int> idx;
    std::vector<int> sigma(k);
    for_each_increasing(1, paramCount, k, strict, idx, [&](const std::vector<int>& a) {
        std::iota(sigma.begin(), sigma.end(), 0);
        do {
            Expo e(L + M, 0);
            for (int i = 0; i < k; ++i)
                e[(kind == 'c' ? 0 : L) + a[sigma[i]] - 1] += exps[i];
            out.add_term(e, 1);
        } while (std::next_permutation(sigma.begin(), sigma.end()));
    });
    return out;
}

} // namespace

ParamPoly weight_Wcal(const ProfileTuple& muList, const ProfileTuple& nuList,
                      const WeightGenSpec& g) {
    require_valid(g);
    int commonN = -1;
    for (const auto* list : {&muList, &nuList})
        for (const auto& p : *list) {
            require_partition(p);
            if (is_trivial(p))
                throw DomainError("weight lists must contain nontrivial profiles only");
            if (commonN == -1)
                commonN = weight(p);
            else if (weight(p) != commonN)
                throw DimensionError("weight-list profiles have mixed weights");
        }

    const int l = static_cast<int>(muList.size());
    const int m = static_cast<int>(nuList.size());
    if (l > g.L)
        return ParamPoly(g.L, g.M); // no strictly increasing index choice exists

    std::vector<int> cExp(l), dExp(m);
    int dMinus = 0;
    for (int i = 0; i < l; ++i)
        cExp[i] = colength(muList[i]);
    for (int j = 0; j < m; ++j)
        dMinus += dExp[j] = colength(nuList[j]);

    ParamPoly cPart = symmetrized_index_sum(cExp, g.L, 'c', g.L, g.M, /*strict=*/true);
    ParamPoly dPart = symmetrized_index_sum(dExp, g.M, 'd', g.L, g.M, /*strict=*/false);
    Rat prefactor = rat(Int((dMinus - m) % 2 == 0 ? 1 : -1),
                        Int(factorial(l) * factorial(m)));
    return cPart * dPart * prefactor;
}

namespace {

// Weakly increasing index tuples into `parts` whose colengths sum to exactly
// `target`, at most maxLen entries.  Every part has colength >= 1.
void multisets_with_colength(const std::vector<int>& colengths, int target, int maxLen,
                             size_t from, std::vector<int>& cur,
                             const std::function<void(const std::vector<int>&)>& f) {
    if (target == 0) {
        f(cur);
        return;
    }
    if (static_cast<int>(cur.size()) == maxLen)
        return;
    for (size_t i = from; i < colengths.size(); ++i) {
        if (colengths[i] > target)
            continue;
        cur.push_back(static_cast<int>(i));
        multisets_with_colength(colengths, target - colengths[i], maxLen, i, cur, f);
        cur.pop_back();
    }
}

// Number of distinct orderings of a weakly increasing index tuple.
Rat ordering_count(const std::vector<int>& idx) {
    Int total = factorial(static_cast<int>(idx.size()));
    size_t i = 0;
    while (i < idx.size()) {
        size_t j = i;
        while (j < idx.size() && idx[j] == idx[i])
            ++j;
        total /= factorial(static_cast<int>(j - i));
        i = j;
    }
    return Rat(total);
}

} // namespace

ParamPoly weighted_hurwitz(const WeightGenSpec& g, int d, const Partition& mu,
                           const Partition& nu) {
    require_valid(g);
    require_partition(mu);
    require_partition(nu);
    if (weight(mu) != weight(nu))
        throw DimensionError("mu and nu must partition the same N");
    const int N = weight(mu);
    if (N < 1)
        throw DomainError("weighted Hurwitz numbers need N >= 1");
    if (d < 0)
        throw DomainError("colength budget d must be nonnegative");

    std::vector<Partition> nontrivial;
    std::vector<int> colengths;
    for (const auto& p : partitions_of(N))
        if (!is_trivial(p)) {
            nontrivial.push_back(p);
            colengths.push_back(colength(p));
        }

    auto tuple_of = [&](const std::vector<int>& idx) {
        ProfileTuple t;
        t.reserve(idx.size());
        for (int i : idx)
            t.push_back(nontrivial[i]);
        return t;
    };

    ParamPoly total(g.L, g.M);
    for (int dPlus = 0; dPlus <= d; ++dPlus) {
        const int dMinus = d - dPlus;
        if (g.M == 0 && dMinus > 0)
            continue; // no d-parameters: the nu-side weight sum is empty
        std::vector<int> curA, curB;
        multisets_with_colength(
            colengths, dPlus, std::min(g.L, dPlus), 0, curA,
            [&](const std::vector<int>& aIdx) {
                ProfileTuple aSide = tuple_of(aIdx);
                Rat multA = ordering_count(aIdx);
                multisets_with_colength(
                    colengths, dMinus, dMinus, 0, curB,
                    [&](const std::vector<int>& bIdx) {
                        ProfileTuple bSide = tuple_of(bIdx);
                        ParamPoly w = weight_Wcal(aSide, bSide, g);
                        if (w.is_zero())
                            return;
                        ProfileTuple all = aSide;
                        all.insert(all.end(), bSide.begin(), bSide.end());
                        all.push_back(mu);
                        all.push_back(nu);
                        Rat h = pure_hurwitz_char(all);
                        if (h == 0)
                            return;
                        total += w * (h * multA * ordering_count(bIdx));
                    });
            });
    }
    return total;
}

Rat monotone_coefficient(const ParamPoly& h, int j, int d) {
    if (h.L() != 1 || h.M() != 1)
        throw DimensionError("monotone extraction needs an (L,M) = (1,1) context");
    if (j < 0 || d - j < 0)
        return Rat(0);
    return h.coeff(Expo{j, d - j});
}

} // namespace hurwitz
