#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dsrng/numtheory.hpp"

namespace dsrng {

// Digits are stored one per byte, which bounds the supported base.
inline constexpr uint64_t kMaxDigitBase = 256;
// Default cap on materializing one full period.
inline constexpr uint64_t kDefaultDigitCap = uint64_t(1) << 24;

/// Finite digit string with its base and, when known, the period it repeats
/// with when extended.
struct DigitSequence {
    uint64_t base = 2;
    std::vector<uint8_t> digits;
    std::optional<uint64_t> declared_period;

    /// Concatenated ascii digits for bases <= 10, space-separated decimal
    /// digit values otherwise.
    std::string to_text() const;
};

/// One prime-reciprocal sequence: the base-b expansion of 1/p. Digit and bit
/// indices start at 1, so bit i corresponds to exponent i in the parity form.
struct DSeqSpec {
    Int p;
    Int base;

    DSeqSpec(Int prime, Int b);  // throws std::domain_error on an invalid spec
};

/// (2^i mod p) mod 2: the i-th bit of the binary expansion of 1/p. Requires
/// base 2 (std::invalid_argument otherwise) and i >= 1.
int bit_at(const DSeqSpec& spec, uint64_t i);

/// Exactly one full period of the base-b expansion of 1/p by long division:
/// r0 = 1, digit_i = (b * r_{i-1}) div p, r_i = (b * r_{i-1}) mod p.
DigitSequence digits_one_period(const DSeqSpec& spec, uint64_t max_digits = kDefaultDigitCap);

/// multiplicative_order(base, p); always divides p - 1.
Int period(const DSeqSpec& spec);

/// True iff the period equals p - 1 (base is a primitive root of p).
bool is_max_length(const DSeqSpec& spec);

/// Checks that bits in the second half of the period complement the first
/// half. Defined only for maximum-length base-2 specs; anything else is a
/// contract violation (std::invalid_argument), not a false result.
bool half_complement_holds(const DSeqSpec& spec, uint64_t max_digits = kDefaultDigitCap);

struct ExpansionRatio {
    double value;     // (p - 1) / log2(p)
    bool max_length;  // advisory: whether 2 is a primitive root of p
};

/// Element-count expansion of the binary d-sequence relative to the bits
/// needed to represent p.
ExpansionRatio expansion_ratio(const Int& p);

/// Window kernels: bits start .. start+count-1 (1-indexed) of the binary
/// d-sequence of p. The parallel kernel seeds each chunk with one modular
/// exponentiation and doubles the residue within the chunk; the serial
/// version is the reference implementation kept for tests and benchmarks.
/// Requires odd 3 <= p < 2^62 and start >= 1.
std::vector<uint8_t> dseq_bits_window(uint64_t p, uint64_t start, uint64_t count);
std::vector<uint8_t> dseq_bits_window_serial(uint64_t p, uint64_t start, uint64_t count);

/// Streaming long-division digit source; O(1) state, used by the CLI so
/// large counts never materialize.
class DigitStream {
  public:
    explicit DigitStream(const DSeqSpec& spec);
    uint8_t next();

  private:
    bool fast_;
    uint64_t p_u64_ = 0, base_u64_ = 0, rem_u64_ = 1;
    Int p_, base_, rem_;
};

}  // namespace dsrng
