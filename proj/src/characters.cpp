#include "hurwitz/characters.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <utility>

#include "hurwitz/errors.hpp"

namespace hurwitz {

namespace {

// Beta-numbers for lambda with r slots: lambda_i + (r - 1 - i), kept sorted
// ascending.  The empty shape on r slots is {0, 1, ..., r-1}.
std::vector<int> beta_numbers(const Partition& lambda, int r) {
    std::vector<int> beta(r);
    for (int i = 0; i < r; ++i) {
        int part = i < static_cast<int>(lambda.size()) ? lambda[i] : 0;
        beta[i] = part + (r - 1 - i);
    }
    std::sort(beta.begin(), beta.end());
    return beta;
}

struct MNEvaluator {
    const Partition& mu;
    std::map<std::pair<std::vector<int>, size_t>, long long> memo;

    long long eval(std::vector<int> beta, size_t k) {
        if (k == mu.size())
            return 1; // weights match, so the remaining shape is empty
        auto key = std::make_pair(beta, k);
        if (auto it = memo.find(key); it != memo.end())
            return it->second;
        const int s = mu[k];
        long long total = 0;
        for (size_t i = 0; i < beta.size(); ++i) {
            int b = beta[i];
            if (b < s)
                continue;
            int target = b - s;
            if (std::binary_search(beta.begin(), beta.end(), target))
                continue;
            int height = 0; // occupied values strictly between target and b
            for (size_t j = 0; j < i; ++j)
                if (beta[j] > target)
                    ++height;
            std::vector<int> next = beta;
            next[i] = target;
            std::sort(next.begin(), next.end());
            long long sub = eval(std::move(next), k + 1);
            total += (height % 2 == 0) ? sub : -sub;
        }
        memo.emplace(std::move(key), total);
        return total;
    }
};

} // namespace

long long character(const Partition& lambda, const Partition& mu) {
    require_partition(lambda);
    require_partition(mu);
    if (weight(lambda) != weight(mu))
        throw DomainError("character arguments must partition the same N");
    if (lambda.empty())
        return 1; // trivial character of S_0
    MNEvaluator ev{mu, {}};
    return ev.eval(beta_numbers(lambda, static_cast<int>(lambda.size())), 0);
}

CharTable::CharTable(int N) : N_(N) {
    if (N < 0)
        throw DomainError("character table needs N >= 0");
    parts_ = partitions_of(N);
    const int p = static_cast<int>(parts_.size());
    chi_.assign(p, std::vector<long long>(p, 0));
    for (int l = 0; l < p; ++l)
        for (int m = 0; m < p; ++m)
            chi_[l][m] = character(parts_[l], parts_[m]);
    identityIdx_ = p - 1; // (1^N) is last in revlex order
}

int CharTable::index_of(const Partition& p) const {
    require_partition(p);
    if (weight(p) != N_)
        throw DomainError("partition does not have weight N");
    auto it = std::lower_bound(parts_.begin(), parts_.end(), p, RevlexLess{});
    if (it == parts_.end() || *it != p)
        throw DomainError("partition not found in table");
    return static_cast<int>(it - parts_.begin());
}

long long CharTable::value(const Partition& lambda, const Partition& mu) const {
    return chi_[index_of(lambda)][index_of(mu)];
}

const CharTable& char_table(int N) {
    static std::mutex lock;
    static std::map<int, std::unique_ptr<CharTable>> cache;
    std::lock_guard<std::mutex> guard(lock);
    auto it = cache.find(N);
    if (it == cache.end())
        it = cache.emplace(N, std::make_unique<CharTable>(N)).first;
    return *it->second;
}

} // namespace hurwitz
