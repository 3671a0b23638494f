#pragma once

#include <string>

#include "dsrng/dseq.hpp"
#include "dsrng/numtheory.hpp"

namespace dsrng {

/// Reduced proper fraction a/N with factored denominator, representing a
/// purely periodic digit sequence: the pattern of period L in base b equals
/// V / (b^L - 1) with V the pattern read as a base-b integer.
struct RationalSeq {
    Int numerator;
    Int denominator;
    Factorization denominator_factors;
    bool factored = false;  // false when N exceeded the factoring bound
    uint64_t base = 2;

    /// Reduce a/n, validate the invariants (0 < a < N after reduction,
    /// gcd(base, N) = 1), and factor the denominator when it is in range.
    /// An out-of-range denominator degrades gracefully: the fraction is
    /// returned unfactored with `factored` false.
    static RationalSeq make(const Int& a, const Int& n, uint64_t base);

    std::string to_text() const;           // "a/N"
    std::string to_factored_text() const;  // "a / (p1^e1 · p2 · ...)"
};

/// Map one period of a digit pattern to its reduced rational form.
/// Rejects the all-zero pattern (no positive numerator exists) and the
/// all-(b-1) pattern (its value equals the denominator, so no proper
/// fraction reproduces it).
RationalSeq sequence_to_rational(const DigitSequence& pattern);

/// First `count` digits of the base-b expansion of a/N by long division.
/// declared_period is multiplicative_order(base, N), computed when N is
/// within the supported factoring range and left unset otherwise.
DigitSequence rational_to_sequence(const RationalSeq& r, uint64_t count);

}  // namespace dsrng
