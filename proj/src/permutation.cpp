#include "hurwitz/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "hurwitz/errors.hpp"

namespace hurwitz {

bool is_valid_permutation(const Permutation& g) {
    std::vector<char> seen(g.size(), 0);
    for (int im : g) {
        if (im < 0 || im >= static_cast<int>(g.size()) || seen[im]) return false;
        seen[im] = 1;
    }
    return true;
}

void require_permutation(const Permutation& g) {
    if (!is_valid_permutation(g)) throw ValidationError("image array is not a bijection");
}

Permutation identity_perm(int n) {
    Permutation e(n);
    std::iota(e.begin(), e.end(), 0);
    return e;
}

bool is_identity(const Permutation& g) {
    for (size_t i = 0; i < g.size(); ++i)
        if (g[i] != static_cast<int>(i)) return false;
    return true;
}

Permutation inverse_perm(const Permutation& g) {
    Permutation inv(g.size());
    for (size_t i = 0; i < g.size(); ++i) inv[g[i]] = static_cast<int>(i);
    return inv;
}

Partition cycle_type(const Permutation& g) {
    Partition type;
    std::vector<char> seen(g.size(), 0);
    for (size_t start = 0; start < g.size(); ++start) {
        if (seen[start]) continue;
        int len = 0;
        for (int x = static_cast<int>(start); !seen[x]; x = g[x]) {
            seen[x] = 1;
            ++len;
        }
        type.push_back(len);
    }
    std::sort(type.begin(), type.end(), std::greater<int>());
    return type;
}

int perm_colength(const Permutation& g) {
    int cycles = 0;
    std::vector<char> seen(g.size(), 0);
    for (size_t start = 0; start < g.size(); ++start) {
        if (seen[start]) continue;
        ++cycles;
        for (int x = static_cast<int>(start); !seen[x]; x = g[x]) seen[x] = 1;
    }
    return static_cast<int>(g.size()) - cycles;
}

namespace {

// Builds every permutation of type mu exactly once: the next cycle always
// starts at the smallest unused point, which kills the reordering redundancy
// among equal-length cycles; the remaining cycle entries run over ordered
// choices of the other points.
void class_rec(int N, std::vector<int>& remainingParts, Permutation& img,
               std::vector<char>& used, int placed,
               const std::function<void(const Permutation&)>& f) {
    if (placed == N) {
        f(img);
        return;
    }
    int start = 0;
    while (used[start]) ++start;
    used[start] = 1;

    int prevLen = 0;
    for (size_t pi = 0; pi < remainingParts.size(); ++pi) {
        int len = remainingParts[pi];
        if (len == prevLen) continue; // one cycle length per distinct value
        prevLen = len;
        remainingParts.erase(remainingParts.begin() + pi);

        // Fill the cycle start -> x1 -> ... -> x_{len-1} -> start.
        std::vector<int> cyc;
        cyc.push_back(start);
        auto fill = [&](auto&& self, int prev, int left) -> void {
            if (left == 0) {
                img[prev] = start;
                class_rec(N, remainingParts, img, used, placed + len, f);
                img[prev] = -1;
                return;
            }
            for (int x = 0; x < N; ++x) {
                if (used[x]) continue;
                used[x] = 1;
                img[prev] = x;
                self(self, x, left - 1);
                img[prev] = -1;
                used[x] = 0;
            }
        };
        fill(fill, start, len - 1);

        remainingParts.insert(remainingParts.begin() + pi, len);
    }
    used[start] = 0;
}

} // namespace

void for_each_in_class(const Partition& mu, const std::function<void(const Permutation&)>& f) {
    require_partition(mu);
    int N = weight(mu);
    std::vector<int> parts(mu.begin(), mu.end());
    Permutation img(N, -1);
    std::vector<char> used(N, 0);
    class_rec(N, parts, img, used, 0, f);
}

std::vector<Permutation> class_elements(const Partition& mu) {
    if (weight(mu) > 8)
        throw CapacityError("class_elements materializes only N <= 8; stream with "
                            "for_each_in_class for larger N");
    std::vector<Permutation> out;
    out.reserve(class_size(mu).get_ui());
    for_each_in_class(mu, [&](const Permutation& g) { out.push_back(g); });
    return out;
}

Permutation canonical_of_type(const Partition& mu) {
    require_partition(mu);
    Permutation g(weight(mu));
    int base = 0;
    for (int len : mu) {
        for (int i = 0; i < len; ++i) g[base + i] = base + (i + 1) % len;
        base += len;
    }
    return g;
}

bool is_transitive(const std::vector<Permutation>& gs) {
    if (gs.empty()) return false;
    size_t n = gs[0].size();
    for (const auto& g : gs)
        if (g.size() != n) throw DimensionError("is_transitive: mixed degrees");
    if (n == 1) return true;
    std::vector<char> inOrbit(n, 0);
    std::vector<int> stack{0};
    inOrbit[0] = 1;
    size_t found = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (const auto& g : gs) {
            // Generators are bijections, so forward images alone close the orbit
            // partition; inverses never reach new points.
            int y = g[x];
            if (!inOrbit[y]) {
                inOrbit[y] = 1;
                ++found;
                stack.push_back(y);
            }
        }
    }
    return found == n;
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<Permutation> out;
    Permutation g = identity_perm(n);
    do {
        out.push_back(g);
    } while (std::next_permutation(g.begin(), g.end()));
    return out;
}

} // namespace hurwitz
