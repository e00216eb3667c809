#ifndef FPTLAB_TESTS_ORACLES_HPP
#define FPTLAB_TESTS_ORACLES_HPP

// Brute-force reference computations for the test suite. Everything here is
// deliberately naive and independent of the library's fast paths: full
// unreduced products, long-division digit extraction, linear scans.

#include <cstdint>
#include <map>
#include <vector>

#include "fptlab/poly.hpp"
#include "fptlab/rational.hpp"

namespace fptlab::testing {

/// Unreduced product, exponent vectors and an ordered map only.
inline Polynomial naive_multiply(const Polynomial& a, const Polynomial& b)
{
    std::map<Monomial, std::uint64_t> acc;
    const std::uint64_t p = a.p().value();
    for (const Term& ta : a.terms())
        for (const Term& tb : b.terms()) {
            Monomial m(ta.mono.size());
            for (std::size_t v = 0; v < m.size(); ++v)
                m[v] = ta.mono[v] + tb.mono[v];
            acc[m] = (acc[m] + ta.coeff * tb.coeff) % p;
        }
    std::vector<Term> terms;
    for (auto& [mono, coeff] : acc)
        if (coeff != 0)
            terms.push_back(Term{mono, coeff});
    return Polynomial::from_terms(a.p(), a.nvars(), std::move(terms));
}

/// f^a with no reduction at all.
inline Polynomial naive_pow_full(const Polynomial& f, std::int64_t a)
{
    Polynomial acc = Polynomial::one(f.p(), f.nvars());
    for (std::int64_t i = 0; i < a; ++i)
        acc = naive_multiply(acc, f);
    return acc;
}

/// Membership of g in m^[p^e] by direct scan of the unreduced polynomial.
inline bool naive_in_frobenius_power(const Polynomial& g, int e)
{
    const Exponent bound = frobenius_degree(g.p(), e);
    for (const Term& t : g.terms()) {
        bool some_big = false;
        for (Exponent x : t.mono)
            if (x >= bound)
                some_big = true;
        if (!some_big)
            return false;
    }
    return true;
}

/// nu(p^e) via full (unreduced) powers, each reduced exactly once by the
/// membership scan. Incremental products keep this affordable for e <= 2.
inline std::int64_t naive_nu(const Polynomial& f, int e)
{
    const Exponent pe = frobenius_degree(f.p(), e);
    Polynomial power = Polynomial::one(f.p(), f.nvars());
    std::int64_t best = 0;
    for (std::int64_t a = 1; a <= pe - 1; ++a) {
        power = naive_multiply(power, f);
        if (naive_in_frobenius_power(power, e))
            break;
        best = a;
    }
    return best;
}

/// Base-p digits of alpha by stateful long division: multiply the running
/// tail by p and peel the integer part, keeping tails in (0,1] so the
/// expansion never terminates.
inline std::vector<std::int64_t> longdiv_digits(const Rational& alpha, Prime p, int depth)
{
    std::vector<std::int64_t> digits;
    if (alpha == 0)
        return std::vector<std::int64_t>(static_cast<std::size_t>(depth), 0);
    Rational tail = alpha;
    for (int d = 0; d < depth; ++d) {
        Rational scaled = tail * Rational(Int(p.value()));
        Int digit;
        if (is_integer(scaled)) {
            digit = scaled.get_num() - 1;
            tail = 1;
        } else {
            digit = floor_rational(scaled);
            tail = scaled - Rational(digit);
        }
        digits.push_back(digit.get_si());
    }
    return digits;
}

} // namespace fptlab::testing

#endif
