#ifndef PGNL_NUMERIC_HPP
#define PGNL_NUMERIC_HPP

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "pgnl/errors.hpp"

namespace pgnl {

using Int = std::int64_t;
using BigInt = mpz_class;
using Rational = mpq_class;

// Integer extended by the formal symbol +infinity, with the conventions
// t <= inf and t + inf = inf. Used for valuations and empty minima.
class ExtInt {
public:
    constexpr ExtInt() = default;
    constexpr ExtInt(long v) : inf_(false), v_(v) {}

    static constexpr ExtInt infinity() {
        ExtInt e;
        e.inf_ = true;
        return e;
    }

    constexpr bool is_infinite() const { return inf_; }

    long value() const {
        if (inf_) throw InternalError("ExtInt: value() on infinity");
        return v_;
    }

    // value() with infinity clamped to `cap`; handy for loop bounds.
    constexpr long value_or(long cap) const { return inf_ ? cap : v_; }

    friend constexpr bool operator==(ExtInt a, ExtInt b) {
        return a.inf_ == b.inf_ && (a.inf_ || a.v_ == b.v_);
    }
    friend constexpr bool operator<(ExtInt a, ExtInt b) {
        if (a.inf_) return false;
        if (b.inf_) return true;
        return a.v_ < b.v_;
    }
    friend constexpr bool operator<=(ExtInt a, ExtInt b) { return a < b || a == b; }
    friend constexpr bool operator>(ExtInt a, ExtInt b) { return b < a; }
    friend constexpr bool operator>=(ExtInt a, ExtInt b) { return b <= a; }

    friend constexpr ExtInt operator+(ExtInt a, long t) {
        return a.inf_ ? a : ExtInt(a.v_ + t);
    }
    friend constexpr ExtInt min(ExtInt a, ExtInt b) { return a < b ? a : b; }

private:
    bool inf_ = true;
    long v_ = 0;
};

// p-adic valuation; ord(0) = infinity.
ExtInt ord_p(const BigInt& x, long p);
ExtInt ord_p(const Rational& x, long p);

// x * p^{-ord_p(x)} for x != 0 (a p-adic unit written as a rational).
Rational unit_part(const Rational& x, long p);

// Residue of a rational with p-free denominator modulo `modulus` (a p-power),
// in [0, modulus).
long residue_mod(const Rational& x, long modulus);

// Legendre symbol (a/p) for odd prime p.
int legendre_symbol(const BigInt& a, long p);

// (2/x): the Legendre symbol at 2 extended to rationals via the Hilbert
// symbol. Zero unless x is a 2-adic unit, in which case +1 iff x = +-1 mod 8.
int kronecker_two(const Rational& x);

bool is_prime(long n);
std::vector<long> primes_up_to(long n);

// Exact floor square root of n >= 0.
Int isqrt(Int n);

// p^e as BigInt.
BigInt pow_int(long p, unsigned long e);

// Divisor sum sigma(n) by trial division; independent arithmetic used by the
// four-squares cross-check.
Int divisor_sigma(Int n);

} // namespace pgnl

#endif
