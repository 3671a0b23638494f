#pragma once

#include <cstdint>
#include <vector>

#include "dsrng/dseq.hpp"

namespace dsrng {

// Cap on the analytic-bound window minimal_period materializes.
inline constexpr uint64_t kDefaultPeriodWindowCap = uint64_t(1) << 26;

enum class CombineMode { xor_sum, splice };
enum class SpliceOrder { concatenate, interleave };

/// Two or more binary d-sequences combined into one stream. A single
/// component is allowed for degenerate period measurements; duplicate
/// primes are rejected (a stream XORed with itself is all zeros).
struct CombinedSpec {
    std::vector<DSeqSpec> components;
    CombineMode mode = CombineMode::xor_sum;

    CombinedSpec(std::vector<DSeqSpec> comps, CombineMode m);
};

/// Bit i of the output is the XOR over components of bit i, for i = 1..count.
DigitSequence xor_stream(const CombinedSpec& spec, uint64_t count);

/// lcm(p1 - 1, p2 - 1): the analytic period bound of the mod-2 sum.
Int period_bound(const Int& p1, const Int& p2);
/// Generalization: lcm over all components of (p_i - 1).
Int period_bound(const std::vector<DSeqSpec>& components);

/// Smallest divisor d of the analytic bound B such that the first B bits of
/// the XOR stream repeat with period d, found against a materialized window.
uint64_t minimal_period(const CombinedSpec& spec,
                        uint64_t window_cap = kDefaultPeriodWindowCap);

/// Splice component sequences into one stream. concatenate emits one full
/// period of each component in turn, cyclically; interleave emits bit i of
/// each component in round-robin. Both are extensions with defined semantics;
/// output length is exactly `count`.
DigitSequence splice(const std::vector<DSeqSpec>& components, SpliceOrder order,
                     uint64_t count, uint64_t max_digits = kDefaultDigitCap);

/// XOR window kernels over several primes (parallel + serial reference).
/// Bits start .. start+count-1, 1-indexed.
std::vector<uint8_t> xor_bits_window(const std::vector<uint64_t>& primes, uint64_t start,
                                     uint64_t count);
std::vector<uint8_t> xor_bits_window_serial(const std::vector<uint64_t>& primes,
                                            uint64_t start, uint64_t count);

}  // namespace dsrng
