#pragma once
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hurwitz/hurwitz_numbers.hpp"
#include "hurwitz/param_poly.hpp"
#include "hurwitz/partition.hpp"
#include "hurwitz/permutation.hpp"
#include "hurwitz/pq_series.hpp"

// Doubly labelled constellations, stored as factorizations of the identity
// indexed by CF-ordered slots:
//   (0,0) black, (1,0)..(L,0) round middles, (1,1)..(M,J_M) squares,
//   (L+1,0) white.
// The CF-ordered product (rightmost factor acting first) must be the
// identity; square factors must not be the identity; round middles may be.
// All N!-fold labelling redundancy is kept and divided out by the 1/N! in
// the weight, which makes "class count = N! x Hurwitz number" a direct test.
namespace hurwitz {

struct CFLabel {
    int colour = 0;
    int flavour = 0; // 0 for round/black/white, 1..J_colour for squares
    bool operator==(const CFLabel& o) const {
        return colour == o.colour && flavour == o.flavour;
    }
};

struct Spectrum {
    int L = 0;
    std::vector<int> J; // J_1..J_M, entries >= 0 (a colour may be unused)
    int M() const { return static_cast<int>(J.size()); }
    int total_squares() const;
};

// The full CF-ordered slot list; throws DomainError on invalid spectra.
std::vector<CFLabel> cf_slots(const Spectrum& spectrum);

struct Constellation {
    int N = 0;
    Spectrum spectrum;
    std::vector<Permutation> factors; // aligned with cf_slots(spectrum)
    const Permutation& factor(const CFLabel& label) const;
};

// Validates slot count, shared degree, the identity product and square
// nontriviality; throws ValidationError on violations.
Constellation make_constellation(const Spectrum& spectrum,
                                 std::vector<Permutation> factors);

// Cycle types per slot, in slot order: (nu, rounds, squares, mu).
using ClassKey = std::vector<Partition>;
ClassKey class_key(const Constellation& c);

// chi = len(mu) + len(nu) - d with d the total colength of the middle slots;
// the genus (2 - chi)/2 is reported only when chi is even.
std::pair<int, std::optional<int>> euler_genus(const ClassKey& key);

struct ConstellationWeight {
    int N = 0;  // gamma exponent
    int d = 0;  // beta exponent: total middle-slot colength
    Partition mu, nu;
    ParamPoly w; // includes the 1/N! normalization and the sign
};

// The weight of one constellation:
//   w = (1/N!) (-1)^(|J| + sum of square colengths)
//       * prod_i c_i^(colength of round (i,0)) * prod_i d_i^(total colength
//         of colour-i squares).
// dMaxContext is the beta-truncation the caller assembles into; terms with
// d > dMaxContext are still returned and dropped by the caller.
ConstellationWeight constellation_weight(const Constellation& c, int dMaxContext);

// Weight computed from the class key alone (weights are class functions).
ConstellationWeight weight_from_key(const Spectrum& spectrum, const ClassKey& key);

// Every constellation with the given spectrum and middle colength dTarget,
// exactly once: all permutations in the non-final slots (squares skip the
// identity), final slot solved from the product.  Cost guard:
// N!^(L+1) * (N!-1)^|J| <= workBound, else CapacityError.
void enumerate_constellations(int N, const Spectrum& spectrum, int dTarget,
                              const std::function<void(const Constellation&)>& f,
                              long long workBound = kDefaultWorkBound);
std::vector<Constellation> enumerate_constellations_vec(
    int N, const Spectrum& spectrum, int dTarget,
    long long workBound = kDefaultWorkBound);

// Sum of constellation weights over all spectra with l(J) = M, |J| <= dMax
// and all constellations of middle colength <= dMax, as a PQSeries keyed
// (N, mu, nu).  Must reproduce tau_table(G, N, dMax) on weight-N keys.
PQSeries sum_constellation_weights(int N, int L, int M, int dMax,
                                   long long workBound = kDefaultWorkBound);
// OpenMP over the black slot within each spectrum; exact merge, identical
// output.
PQSeries sum_constellation_weights_parallel(int N, int L, int M, int dMax,
                                            long long workBound = kDefaultWorkBound);

struct CensusRow {
    ClassKey key;
    long long count = 0;
    int chi = 0;
    std::optional<int> genus;
    ParamPoly weight;
};

struct Census {
    // "enumeration" when within the work bound, else "class-formula"
    // (count = N! x character-sum Hurwitz number per key).
    std::string method;
    std::vector<CensusRow> rows;
};

// Per-class tally for one spectrum; dMaxFilter < 0 disables the d cut.
Census constellation_census(int N, const Spectrum& spectrum, int dMaxFilter,
                            long long workBound = kDefaultWorkBound);

} // namespace hurwitz
