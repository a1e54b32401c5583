#pragma once
#include <functional>
#include <vector>

#include "hurwitz/partition.hpp"

// Permutations of {0..N-1} as image arrays (external I/O is 1-based).
// Products compose right-to-left: (a*b)(x) = a(b(x)), i.e. b acts first.
namespace hurwitz {

using Permutation = std::vector<int>;

bool is_valid_permutation(const Permutation& g);
void require_permutation(const Permutation& g);

Permutation identity_perm(int n);
bool is_identity(const Permutation& g);

inline Permutation compose(const Permutation& a, const Permutation& b) {
    Permutation ab(a.size());
    for (size_t x = 0; x < b.size(); ++x) ab[x] = a[b[x]];
    return ab;
}

Permutation inverse_perm(const Permutation& g);

Partition cycle_type(const Permutation& g);

// N - (#cycles of g): the minimal number of transpositions expressing g.
int perm_colength(const Permutation& g);

// Streams every permutation of cycle type mu exactly once (N!/z_mu of them).
void for_each_in_class(const Partition& mu, const std::function<void(const Permutation&)>& f);

// Materialized class.  Guarded at N <= 8: beyond that |cyc(mu)| can reach
// N!/N and the caller should stream via for_each_in_class instead.
std::vector<Permutation> class_elements(const Partition& mu);

// Canonical representative: consecutive cycles (0 1 .. mu_1-1)(mu_1 ..) ...
Permutation canonical_of_type(const Partition& mu);

// Single orbit on {0..N-1} under the generated group (orbit closure of 0).
bool is_transitive(const std::vector<Permutation>& gs);

// All N! permutations in lexicographic image order.
std::vector<Permutation> all_permutations(int n);

} // namespace hurwitz
