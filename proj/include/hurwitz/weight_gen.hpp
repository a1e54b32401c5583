#pragma once
#include <optional>
#include <vector>

#include "hurwitz/rational.hpp"

// A rational weight generating function G(z) = prod_i (1 + c_i z) / prod_j
// (1 - d_j z), described by the parameter counts (L, M) and, optionally, by
// numeric values for the parameters.  Most of the library works symbolically
// and only reads L and M; the numeric fields feed specializations.
namespace hurwitz {

struct WeightGenSpec {
    int L = 0;
    int M = 0;
    std::optional<std::vector<Rat>> cNumeric; // length L when present
    std::optional<std::vector<Rat>> dNumeric; // length M when present
};

// Throws DomainError on negative counts, DimensionError on numeric-length
// mismatch.
void require_valid(const WeightGenSpec& g);

} // namespace hurwitz
