#include "dsrng/rational.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dsrng {

namespace {

bool fits_u64(const Int& n) {
    return n >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64;
}

}  // namespace

RationalSeq RationalSeq::make(const Int& a, const Int& n, uint64_t base) {
    if (base < 2 || base > kMaxDigitBase)
        throw std::domain_error("rational: base must be in [2, 256]");
    if (n < 1) throw std::domain_error("rational: denominator must be positive");
    if (a < 1) throw std::domain_error("rational: numerator must be positive");

    const Int g = gcd(a, n);
    RationalSeq r;
    r.numerator = a / g;
    r.denominator = n / g;
    r.base = base;
    if (r.numerator >= r.denominator)
        throw std::domain_error("rational: fraction must be proper (a < N)");
    if (gcd(Int(static_cast<unsigned long>(base)), r.denominator) != 1)
        throw std::domain_error(
            "rational: gcd(base, N) != 1, expansion would not be purely periodic");

    if (fits_u64(r.denominator)) {
        r.denominator_factors = factorize(r.denominator);
        r.factored = true;
    } else {
        r.denominator_factors = Factorization{r.denominator, {}};
        r.factored = false;
    }
    return r;
}

std::string RationalSeq::to_text() const {
    std::ostringstream os;
    os << numerator << '/' << denominator;
    return os.str();
}

std::string RationalSeq::to_factored_text() const {
    std::ostringstream os;
    os << numerator << " / (";
    if (!factored) {
        os << denominator;
    } else {
        bool first = true;
        for (const auto& [p, e] : denominator_factors.factors) {
            if (!first) os << " · ";
            os << p;
            if (e > 1) os << '^' << e;
            first = false;
        }
    }
    os << ')';
    return os.str();
}

RationalSeq sequence_to_rational(const DigitSequence& pattern) {
    const uint64_t base = pattern.base;
    if (base < 2 || base > kMaxDigitBase)
        throw std::domain_error("sequence_to_rational: base must be in [2, 256]");
    const size_t length = pattern.digits.size();
    if (length == 0) throw std::domain_error("sequence_to_rational: empty pattern");
    if (pattern.declared_period && *pattern.declared_period != length)
        throw std::domain_error(
            "sequence_to_rational: pattern must contain exactly one declared period");

    bool all_zero = true, all_top = true;
    for (uint8_t d : pattern.digits) {
        if (d >= base)
            throw std::domain_error("sequence_to_rational: digit out of range for base");
        all_zero = all_zero && d == 0;
        all_top = all_top && d == base - 1;
    }
    if (all_zero)
        throw std::domain_error("sequence_to_rational: all-zero pattern has no positive value");
    if (all_top)
        throw std::domain_error(
            "sequence_to_rational: pattern value equals the denominator, no proper fraction");

    Int value = 0;
    for (uint8_t d : pattern.digits) value = value * static_cast<unsigned long>(base) + d;

    Int denominator;
    mpz_ui_pow_ui(denominator.get_mpz_t(), static_cast<unsigned long>(base),
                  static_cast<unsigned long>(length));
    denominator -= 1;
    return RationalSeq::make(value, denominator, base);
}

DigitSequence rational_to_sequence(const RationalSeq& r, uint64_t count) {
    if (r.numerator < 1 || r.numerator >= r.denominator)
        throw std::domain_error("rational_to_sequence: fraction must satisfy 0 < a < N");
    if (r.base < 2 || r.base > kMaxDigitBase)
        throw std::domain_error("rational_to_sequence: base must be in [2, 256]");
    const Int base(static_cast<unsigned long>(r.base));
    if (gcd(base, r.denominator) != 1)
        throw std::domain_error(
            "rational_to_sequence: gcd(base, N) != 1, expansion is not purely periodic");

    DigitSequence seq;
    seq.base = r.base;
    seq.digits.reserve(count);
    Int rem = r.numerator;
    for (uint64_t i = 0; i < count; ++i) {
        Int t = rem * base;
        Int digit = t / r.denominator;
        seq.digits.push_back(static_cast<uint8_t>(mpz_get_ui(digit.get_mpz_t())));
        rem = t % r.denominator;
    }
    if (fits_u64(r.denominator))
        seq.declared_period =
            mpz_get_ui(multiplicative_order(base, r.denominator).get_mpz_t());
    return seq;
}

}  // namespace dsrng
