#include "dsrng/dseq.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace dsrng {

namespace {

using u64 = uint64_t;

constexpr u64 kKernelPrimeBound = u64(1) << 62;  // doubling step needs 2r < 2^64
constexpr u64 kKernelChunk = u64(1) << 14;

void check_kernel_args(u64 p, u64 start) {
    if (p < 3 || (p & 1) == 0 || p >= kKernelPrimeBound)
        throw std::domain_error("bits window: need an odd 3 <= p < 2^62");
    if (start < 1) throw std::domain_error("bits window: indices start at 1");
}

bool fits_u64(const Int& n) {
    return n >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64;
}

}  // namespace

std::string DigitSequence::to_text() const {
    std::string out;
    if (base <= 10) {
        out.reserve(digits.size());
        for (uint8_t d : digits) out.push_back(static_cast<char>('0' + d));
        return out;
    }
    std::ostringstream os;
    for (size_t i = 0; i < digits.size(); ++i) {
        if (i) os << ' ';
        os << static_cast<unsigned>(digits[i]);
    }
    return os.str();
}

DSeqSpec::DSeqSpec(Int prime, Int b) : p(std::move(prime)), base(std::move(b)) {
    if (p < 3 || mpz_even_p(p.get_mpz_t()) || !is_probable_prime(p))
        throw std::domain_error("d-sequence: p must be an odd prime");
    if (base < 2) throw std::domain_error("d-sequence: base must be >= 2");
    if (base > static_cast<unsigned long>(kMaxDigitBase))
        throw std::domain_error("d-sequence: bases above 256 are not supported");
    if (gcd(base, p) != 1) throw std::domain_error("d-sequence: gcd(base, p) must be 1");
}

int bit_at(const DSeqSpec& spec, uint64_t i) {
    if (spec.base != 2) throw std::invalid_argument("bit_at: spec must have base 2");
    if (i < 1) throw std::domain_error("bit_at: indices start at 1");
    if (fits_u64(spec.p)) {
        const u64 p = mpz_get_ui(spec.p.get_mpz_t());
        return static_cast<int>(mod_exp_u64(2, i, p) & 1);
    }
    Int r = mod_exp(Int(2), Int(static_cast<unsigned long>(i)), spec.p);
    return mpz_odd_p(r.get_mpz_t()) ? 1 : 0;
}

Int period(const DSeqSpec& spec) { return multiplicative_order(spec.base, spec.p); }

bool is_max_length(const DSeqSpec& spec) { return period(spec) == spec.p - 1; }

DigitSequence digits_one_period(const DSeqSpec& spec, uint64_t max_digits) {
    const Int ord = period(spec);
    if (ord > static_cast<unsigned long>(max_digits))
        throw std::domain_error("digits_one_period: period exceeds the digit cap");
    const u64 len = mpz_get_ui(ord.get_mpz_t());

    DigitSequence seq;
    seq.base = mpz_get_ui(spec.base.get_mpz_t());
    seq.declared_period = len;
    seq.digits.reserve(len);

    // b * r stays below 2^64 for p < 2^56 since b <= 256.
    if (fits_u64(spec.p) && mpz_sizeinbase(spec.p.get_mpz_t(), 2) <= 56) {
        const u64 p = mpz_get_ui(spec.p.get_mpz_t());
        const u64 b = mpz_get_ui(spec.base.get_mpz_t());
        u64 r = 1;
        for (u64 i = 0; i < len; ++i) {
            const u64 t = b * r;
            seq.digits.push_back(static_cast<uint8_t>(t / p));
            r = t % p;
        }
        return seq;
    }

    Int r = 1;
    for (u64 i = 0; i < len; ++i) {
        Int t = spec.base * r;
        Int digit = t / spec.p;
        seq.digits.push_back(static_cast<uint8_t>(mpz_get_ui(digit.get_mpz_t())));
        r = t % spec.p;
    }
    return seq;
}

bool half_complement_holds(const DSeqSpec& spec, uint64_t max_digits) {
    if (spec.base != 2)
        throw std::invalid_argument("half_complement_holds: spec must have base 2");
    if (!is_max_length(spec))
        throw std::invalid_argument(
            "half_complement_holds: the property is defined only for maximum-length specs");
    const Int length = spec.p - 1;
    if (length > static_cast<unsigned long>(max_digits))
        throw std::domain_error("half_complement_holds: period exceeds the digit cap");

    const u64 n = mpz_get_ui(length.get_mpz_t());
    const u64 p = mpz_get_ui(spec.p.get_mpz_t());
    const auto bits = dseq_bits_window(p, 1, n);
    const u64 half = n / 2;
    for (u64 i = 0; i < half; ++i) {
        if (bits[i] == bits[i + half]) return false;
    }
    return true;
}

ExpansionRatio expansion_ratio(const Int& p) {
    if (p < 3 || mpz_even_p(p.get_mpz_t()) || !is_probable_prime(p))
        throw std::domain_error("expansion_ratio: p must be an odd prime");
    const double pd = p.get_d();
    ExpansionRatio r;
    r.value = (pd - 1.0) / std::log2(pd);
    r.max_length = is_primitive_root(Int(2), p);
    return r;
}

std::vector<uint8_t> dseq_bits_window_serial(uint64_t p, uint64_t start, uint64_t count) {
    check_kernel_args(p, start);
    std::vector<uint8_t> out(count);
    u64 r = mod_exp_u64(2, start, p);
    for (u64 i = 0; i < count; ++i) {
        out[i] = static_cast<uint8_t>(r & 1);
        r <<= 1;
        if (r >= p) r -= p;
    }
    return out;
}

std::vector<uint8_t> dseq_bits_window(uint64_t p, uint64_t start, uint64_t count) {
    check_kernel_args(p, start);
    std::vector<uint8_t> out(count);
    const int64_t chunks = static_cast<int64_t>((count + kKernelChunk - 1) / kKernelChunk);
#pragma omp parallel for schedule(static)
    for (int64_t c = 0; c < chunks; ++c) {
        const u64 offset = static_cast<u64>(c) * kKernelChunk;
        const u64 len = std::min(kKernelChunk, count - offset);
        u64 r = mod_exp_u64(2, start + offset, p);
        for (u64 j = 0; j < len; ++j) {
            out[offset + j] = static_cast<uint8_t>(r & 1);
            r <<= 1;
            if (r >= p) r -= p;
        }
    }
    return out;
}

DigitStream::DigitStream(const DSeqSpec& spec) : p_(spec.p), base_(spec.base), rem_(1) {
    fast_ = fits_u64(spec.p) && mpz_sizeinbase(spec.p.get_mpz_t(), 2) <= 56;
    if (fast_) {
        p_u64_ = mpz_get_ui(spec.p.get_mpz_t());
        base_u64_ = mpz_get_ui(spec.base.get_mpz_t());
    }
}

uint8_t DigitStream::next() {
    if (fast_) {
        const u64 t = base_u64_ * rem_u64_;
        const u64 digit = t / p_u64_;
        rem_u64_ = t % p_u64_;
        return static_cast<uint8_t>(digit);
    }
    Int t = base_ * rem_;
    Int digit = t / p_;
    rem_ = t % p_;
    return static_cast<uint8_t>(mpz_get_ui(digit.get_mpz_t()));
}

}  // namespace dsrng
