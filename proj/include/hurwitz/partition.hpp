#pragma once
#include <string>
#include <vector>

#include "hurwitz/rational.hpp"

// Integer partitions with the combinatorial attributes the character and
// weight formulas consume: z_mu, hook products, contents, colength.
// A partition is stored as its weakly decreasing positive parts; the empty
// partition (weight 0) is valid.
namespace hurwitz {

using Partition = std::vector<int>;

bool is_valid_partition(const Partition& p);
void require_partition(const Partition& p);

inline int weight(const Partition& p) {
    int w = 0;
    for (int part : p) w += part;
    return w;
}

inline int part_count(const Partition& p) { return static_cast<int>(p.size()); }

// Colength |mu| - l(mu): the transposition distance of a permutation of that
// cycle type from the identity.  Drives every branch-point degree count.
inline int colength(const Partition& p) { return weight(p) - part_count(p); }

// Trivial means all parts equal 1 (the class of the identity); the empty
// partition counts as trivial.
inline bool is_trivial(const Partition& p) {
    for (int part : p)
        if (part != 1) return false;
    return true;
}

// All partitions of N, each once, in reverse-lexicographic order:
// (N) first, (1^N) last.
std::vector<Partition> partitions_of(int N);

// Order matching partitions_of: a precedes b iff a > b lexicographically.
// Used for every partition-keyed map so iteration order is deterministic.
struct RevlexLess {
    bool operator()(const Partition& a, const Partition& b) const { return a > b; }
};

// z_mu = prod_i m_i! i^{m_i} over multiplicities m_i of part size i;
// equals N! / |cyc(mu)|.
Rat z_mu(const Partition& mu);

// |cyc(mu)| = N!/z_mu as an exact integer.
Int class_size(const Partition& mu);

// Product of all hook lengths of the Young diagram.
Int hook_product(const Partition& la);

// Multiset {j - i : (i,j) a box of la} in row-major order.
std::vector<int> contents(const Partition& la);

// Multiset union of parts, re-sorted weakly decreasing (p_mu p_nu = p_{mu u nu}).
Partition union_partitions(const Partition& a, const Partition& b);

// "(2,1)" / "()" — used in error messages and CLI parsing round-trips.
std::string partition_to_string(const Partition& p);
Partition partition_from_string(const std::string& s);

} // namespace hurwitz
