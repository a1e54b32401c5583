#pragma once
#include <vector>

#include "hurwitz/param_poly.hpp"
#include "hurwitz/partition.hpp"
#include "hurwitz/weight_gen.hpp"

// Pure and weighted double Hurwitz numbers.
//
// The pure number H(mu^(1), ..., mu^(k)) counts tuples (h_1, ..., h_k) with
// h_i of cycle type mu^(i) and h_1 h_2 ... h_k = identity, divided by N!.
// Two independent routes are provided: the character sum
//   sum_{lambda |- N} hook(lambda)^{k-2} prod_i chi_lambda(mu^(i)) / z_{mu^(i)}
// and literal enumeration.  The weighted number H^d attaches the symmetrized
// weight W to every tuple of extra branch profiles of total colength d.
namespace hurwitz {

using ProfileTuple = std::vector<Partition>;

inline constexpr long long kDefaultWorkBound = 100'000'000; // elementary compositions

// Character route; exact for any k >= 1 (k = number of profiles).
Rat pure_hurwitz_char(const ProfileTuple& profiles);

// Enumeration route: iterates the conjugacy classes of all but the last
// profile and solves the last factor from the product constraint.  The cost
// guard is N! * prod(class sizes of all but one profile) <= workBound.
// connectedOnly keeps only tuples generating a transitive subgroup.
Rat pure_hurwitz_bruteforce(const ProfileTuple& profiles, bool connectedOnly,
                            long long workBound = kDefaultWorkBound);
// Same contract, OpenMP over the first profile's class; exact merge.
Rat pure_hurwitz_bruteforce_parallel(const ProfileTuple& profiles, bool connectedOnly,
                                     long long workBound = kDefaultWorkBound);

// The symmetrized weight W_G(muList; nuList): prefactor
// (-1)^(sum_j colength(nu^(j)) - m) / (l! m!), summed over strictly
// increasing a-indices in {1..L}, weakly increasing b-indices in {1..M} and
// both permutation groups, of prod c_{a_i}^{colength(mu^(sigma(i)))} *
// prod d_{b_j}^{colength(nu^(sigma'(j)))}.  Empty lists give 1; more mu-parts
// than L gives the empty sum 0.
ParamPoly weight_Wcal(const ProfileTuple& muList, const ProfileTuple& nuList,
                      const WeightGenSpec& g);

// H^d_G(mu, nu): sum over unordered collections of nontrivial branch
// profiles (split into a c-side of at most L and a d-side) with total
// colength d, of orbit-size multiplicity x W x pure Hurwitz number of the
// full tuple.  d = 0 reduces to H(mu, nu).
ParamPoly weighted_hurwitz(const WeightGenSpec& g, int d, const Partition& mu,
                           const Partition& nu);

// Coefficient of c_1^j d_1^(d-j) in an (L,M) = (1,1) polynomial; out-of-range
// exponents read as 0.
Rat monotone_coefficient(const ParamPoly& h, int j, int d);

} // namespace hurwitz
