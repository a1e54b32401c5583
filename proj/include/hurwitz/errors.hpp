#pragma once
#include <stdexcept>

// Error taxonomy shared across the library.  The CLI maps these onto its
// exit-code contract (usage -> 2, capacity -> 3, failed verification -> 4).
namespace hurwitz {

// Operands built over incompatible contexts (mixed (L,M), mixed weights, ...).
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Input outside an operation's mathematical domain (trivial profile where a
// nontrivial one is required, log of a series without constant term 1, ...).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// A constructed object violates its own invariants (factor product not the
// identity, identity in a square slot, non-descending partition, ...).
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Estimated work exceeds the configured bound; the computation was refused,
// not attempted and aborted.
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Numeric evaluation at a pole or with a vanishing denominator.
struct SingularityError : std::domain_error {
    using std::domain_error::domain_error;
};

} // namespace hurwitz
