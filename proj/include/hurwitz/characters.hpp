#pragma once
#include <vector>

#include "hurwitz/partition.hpp"

// Irreducible characters of the symmetric group, computed by the
// Murnaghan-Nakayama rule on beta-numbers.  A border strip of size s is
// removable iff some beta-number b has b >= s and b - s unoccupied; its sign
// is (-1)^(number of occupied values strictly between b-s and b).  Values fit
// comfortably in long long for every N this project can reach (they are
// bounded by the largest irreducible dimension).
namespace hurwitz {

// chi_lambda evaluated on the class of cycle type mu; |lambda| must equal |mu|.
long long character(const Partition& lambda, const Partition& mu);

// Dense character table of S_N with rows (shapes) and columns (classes) both
// in reverse lexicographic order, matching partitions_of.
class CharTable {
  public:
    explicit CharTable(int N);

    int N() const { return N_; }
    const std::vector<Partition>& parts() const { return parts_; }
    int index_of(const Partition& p) const; // throws DomainError if not a partition of N
    long long value(int lambdaIdx, int muIdx) const { return chi_[lambdaIdx][muIdx]; }
    long long value(const Partition& lambda, const Partition& mu) const;
    long long dimension(int lambdaIdx) const { return chi_[lambdaIdx][identityIdx_]; }

  private:
    int N_;
    int identityIdx_; // column of the class (1^N)
    std::vector<Partition> parts_;
    std::vector<std::vector<long long>> chi_;
};

// Process-wide cache; tables are built once per N under a lock and are
// immutable afterwards, so concurrent readers need no synchronization.
const CharTable& char_table(int N);

} // namespace hurwitz
