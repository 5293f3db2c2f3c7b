#ifndef SPINOR_ERRORS_HPP
#define SPINOR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace spinor {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Satake data violates a defining constraint (product relation, unit modulus,
// reality certification, divisor bound).
struct ConstraintViolation : Error { using Error::Error; };

// A trace parameter falls outside [-2, 2].
struct OutOfRange : Error { using Error::Error; };

// Recovered local data is incompatible with unit-modulus Satake parameters
// (Maass-space-like or corrupted input).
struct NonRamanujan : Error { using Error::Error; };

// Binary series operation on series of unequal truncation order.
struct OrderMismatch : Error { using Error::Error; };

// Series division by a series with (numerically) vanishing constant term.
struct NonUnitDivisor : Error { using Error::Error; };

// A distinctness hypothesis fails: spectral values collide within the gate.
struct Degenerate : Error { using Error::Error; };

// A prime required by the computation has no local data in the form.
struct MissingPrime : Error { using Error::Error; };

// A cutoff exceeds the module guardrail.
struct CutoffTooLarge : Error { using Error::Error; };

// Exclusion-set members share a common factor.
struct NotCoprime : Error { using Error::Error; };

// Exclusion-set members are not strictly increasing.
struct NotSorted : Error { using Error::Error; };

// The exclusion set is materialized to a bound smaller than the query window.
struct BoundTooSmall : Error { using Error::Error; };

// Progression residue class is not coprime to the exclusion set.
struct BadResidue : Error { using Error::Error; };

// Malformed form file; message carries the line number.
struct ParseError : Error { using Error::Error; };

// Filesystem failure while reading or writing a form file.
struct IOError : Error { using Error::Error; };

} // namespace spinor

#endif
