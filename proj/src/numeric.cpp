#include "pgnl/numeric.hpp"

#include <cmath>

namespace pgnl {

ExtInt ord_p(const BigInt& x, long p) {
    if (x == 0) return ExtInt::infinity();
    BigInt tmp;
    mp_bitcnt_t v = mpz_remove(tmp.get_mpz_t(), x.get_mpz_t(), BigInt(p).get_mpz_t());
    return ExtInt(static_cast<long>(v));
}

ExtInt ord_p(const Rational& x, long p) {
    if (x == 0) return ExtInt::infinity();
    return ExtInt(ord_p(BigInt(x.get_num()), p).value() -
                  ord_p(BigInt(x.get_den()), p).value());
}

Rational unit_part(const Rational& x, long p) {
    if (x == 0) throw DomainError("unit_part: zero has no unit part");
    long v = ord_p(x, p).value();
    Rational u(x);
    BigInt pw = pow_int(p, static_cast<unsigned long>(v >= 0 ? v : -v));
    if (v >= 0)
        u /= Rational(pw);
    else
        u *= Rational(pw);
    u.canonicalize();
    return u;
}

long residue_mod(const Rational& x, long modulus) {
    BigInt num(x.get_num()), den(x.get_den()), mod(modulus);
    BigInt dinv;
    if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t()) == 0)
        throw DomainError("residue_mod: denominator not invertible");
    BigInt r = (num * dinv) % mod;
    if (r < 0) r += mod;
    return r.get_si();
}

int legendre_symbol(const BigInt& a, long p) {
    if (p < 3 || !is_prime(p) || p % 2 == 0)
        throw DomainError("legendre_symbol: p must be an odd prime");
    return mpz_legendre(a.get_mpz_t(), BigInt(p).get_mpz_t());
}

int kronecker_two(const Rational& x) {
    if (x == 0 || ord_p(x, 2) != ExtInt(0)) return 0;
    long r = residue_mod(x, 8);
    return (r == 1 || r == 7) ? 1 : -1;
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<long> primes_up_to(long n) {
    std::vector<long> out;
    if (n < 2) return out;
    std::vector<bool> composite(static_cast<std::size_t>(n) + 1, false);
    for (long i = 2; i <= n; ++i) {
        if (composite[static_cast<std::size_t>(i)]) continue;
        out.push_back(i);
        for (long j = i * i; j <= n; j += i) composite[static_cast<std::size_t>(j)] = true;
    }
    return out;
}

Int isqrt(Int n) {
    if (n < 0) throw DomainError("isqrt: negative argument");
    if (n == 0) return 0;
    Int r = static_cast<Int>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r > n / r) --r;
    while ((r + 1) <= n / (r + 1)) ++r;
    return r;
}

BigInt pow_int(long p, unsigned long e) {
    BigInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(p), e);
    return out;
}

Int divisor_sigma(Int n) {
    if (n <= 0) throw DomainError("divisor_sigma: n must be positive");
    Int total = 1;
    for (Int d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        Int power = 1, geom = 1;
        while (n % d == 0) {
            n /= d;
            power *= d;
            geom += power;
        }
        total *= geom;
    }
    if (n > 1) total *= 1 + n;
    return total;
}

} // namespace pgnl
