#include "fptlab/rational.hpp"

#include <stdexcept>

namespace fptlab {

Rational make_rational(const Int& num, const Int& den)
{
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational make_rational(long num, long den)
{
    return make_rational(Int(num), Int(den));
}

Rational parse_rational(std::string_view text)
{
    const std::string s(text);
    if (s.empty() || s.find_first_not_of("-0123456789/") != std::string::npos)
        throw std::invalid_argument("malformed rational: '" + s + "'");
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("malformed rational: '" + s + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("rational with zero denominator: '" + s + "'");
    q.canonicalize();
    return q;
}

Int floor_rational(const Rational& q)
{
    Int out;
    mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return out;
}

Int ceil_rational(const Rational& q)
{
    Int out;
    mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return out;
}

bool is_integer(const Rational& q)
{
    return q.get_den() == 1;
}

Int pow_int(const Int& base, unsigned long exp)
{
    Int out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

std::string to_string(const Rational& q)
{
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m)
{
    std::uint64_t r = 1;
    a %= m;
    while (e > 0) {
        if (e & 1)
            r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace

bool is_prime_u64(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == q)
            return true;
        if (n % q == 0)
            return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This witness set decides primality for every n < 2^64.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

Prime::Prime(std::uint64_t value) : value_(value)
{
    if (value >= (std::uint64_t(1) << 62))
        throw std::invalid_argument("prime too large (must be < 2^62): " + std::to_string(value));
    if (!is_prime_u64(value))
        throw std::invalid_argument("not a prime: " + std::to_string(value));
}

} // namespace fptlab
