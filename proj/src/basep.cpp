#include "fptlab/basep.hpp"

#include <stdexcept>

#include "fptlab/errors.hpp"

namespace fptlab {

namespace {

void check_unit_interval(const Rational& alpha, const char* where)
{
    if (alpha < 0 || alpha > 1)
        throw std::domain_error(std::string(where) + ": alpha must lie in [0,1], got " + to_string(alpha));
}

void check_depth(int depth, const char* where)
{
    if (depth < 1)
        throw std::domain_error(std::string(where) + ": depth must be >= 1");
}

} // namespace

Expansion expand(const Rational& alpha, Prime p, int depth)
{
    check_unit_interval(alpha, "expand");
    check_depth(depth, "expand");

    Expansion out{alpha, p, depth, {}, Rational(0), Rational(0)};
    out.digits.reserve(static_cast<std::size_t>(depth));

    if (alpha == 0) {
        out.digits.assign(static_cast<std::size_t>(depth), 0);
        return out; // <0>_e = 0 by convention
    }

    const Int pz(p.value());
    Rational scaled = alpha;     // p^d * alpha
    Int prev_ceil = 1;           // ceil(p^0 * alpha) = 1 on (0,1]
    for (int d = 1; d <= depth; ++d) {
        scaled *= pz;
        const Int cur_ceil = ceil_rational(scaled);
        const Int digit = cur_ceil - pz * prev_ceil + pz - 1;
        internal_check(digit >= 0 && digit < pz, "base-p digit out of range");
        out.digits.push_back(digit.get_si());
        prev_ceil = cur_ceil;
    }
    // ceil(p^e a) = p^e <a>_e + 1, so the truncation falls out of the last ceil.
    const Int pe = pow_int(pz, static_cast<unsigned long>(depth));
    out.truncation = make_rational(prev_ceil - 1, pe);
    out.tail = alpha - out.truncation;
    internal_check(out.tail > 0 && out.tail <= make_rational(Int(1), pe), "tail outside (0, 1/p^e]");
    return out;
}

Rational truncation(const Rational& alpha, Prime p, int e)
{
    check_unit_interval(alpha, "truncation");
    check_depth(e, "truncation");
    if (alpha == 0)
        return Rational(0);
    const Int pe = pow_int(Int(p.value()), static_cast<unsigned long>(e));
    return make_rational(ceil_rational(alpha * Rational(pe)) - 1, pe);
}

Rational repeat_value(const Rational& alpha, Prime p, int e)
{
    const Int pe = pow_int(Int(p.value()), static_cast<unsigned long>(e));
    return truncation(alpha, p, e) * make_rational(pe, pe - 1);
}

FrobeniusRounding frobenius_rounding(const Rational& alpha, Prime p, int e)
{
    if (alpha <= 0 || alpha > 1)
        throw std::domain_error("frobenius_rounding: alpha must lie in (0,1], got " + to_string(alpha));
    check_depth(e, "frobenius_rounding");

    const Int pe = pow_int(Int(p.value()), static_cast<unsigned long>(e));
    FrobeniusRounding out;
    out.ceil_pe = ceil_rational(alpha * Rational(pe));
    out.floor_pem1 = floor_rational(alpha * Rational(pe - 1));
    out.ceil_pem1 = ceil_rational(alpha * Rational(pe - 1));

    // ceil(p^e a) = p^e <a>_e + 1 and the floor/ceil of (p^e - 1) a stay
    // within one of p^e <a>_e.
    const Int scaled_trunc = out.ceil_pe - 1;
    internal_check(out.floor_pem1 >= scaled_trunc - 1 && out.floor_pem1 <= scaled_trunc,
                   "floor((p^e-1)a) strays from p^e <a>_e");
    internal_check(out.ceil_pem1 >= scaled_trunc && out.ceil_pem1 <= scaled_trunc + 1,
                   "ceil((p^e-1)a) strays from p^e <a>_e");
    return out;
}

std::optional<int> periodicity_order(const Rational& alpha, Prime p, int d_max)
{
    check_unit_interval(alpha, "periodicity_order");
    check_depth(d_max, "periodicity_order");

    const Int den = alpha.get_den();
    if (den == 1)
        return 1; // (p - 1) * alpha is integral for integral alpha
    Int g;
    mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), Int(p.value()).get_mpz_t());
    if (g != 1)
        return std::nullopt;
    Int cur(1);
    for (int d = 1; d <= d_max; ++d) {
        cur = cur * Int(p.value()) % den;
        if (cur == 1)
            return d;
    }
    return std::nullopt;
}

} // namespace fptlab
