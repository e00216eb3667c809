#include "fptlab/poly_kernel.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include <omp.h>

namespace fptlab {

namespace {

// Term-product count above which the packed kernel spreads the left operand
// across OpenMP threads.
constexpr std::size_t kParallelWork = std::size_t(1) << 15;

// Exponent count below which pow_reduced multiplies by the base iteratively
// (cheap: every product is small x base) instead of square-and-multiply
// (squares large intermediates).
constexpr std::int64_t kIteratedPowLimit = 4096;

struct DescLex {
    bool operator()(const Monomial& a, const Monomial& b) const { return monomial_before(a, b); }
};

int field_bits(Exponent bound)
{
    // Fields must hold 2*(bound-1) so a product of two reduced exponents
    // never carries into the next field.
    const std::uint64_t maxval = 2 * static_cast<std::uint64_t>(bound) - 1;
    return std::bit_width(maxval);
}

} // namespace

bool packable(const Polynomial& a, Exponent bound)
{
    if (bound < 1)
        return false;
    return field_bits(bound) * a.nvars() <= 62 && a.max_exponent() < bound;
}

Polynomial multiply_reduced_serial(const Polynomial& a, const Polynomial& b, Exponent bound)
{
    if (a.p() != b.p() || a.nvars() != b.nvars())
        throw std::domain_error("polynomial ring mismatch");
    const std::uint64_t p = a.p().value();
    std::map<Monomial, std::uint64_t, DescLex> acc;
    Monomial prod(static_cast<std::size_t>(a.nvars()));
    for (const Term& ta : a.terms()) {
        for (const Term& tb : b.terms()) {
            bool survives = true;
            for (std::size_t v = 0; v < prod.size(); ++v) {
                prod[v] = ta.mono[v] + tb.mono[v];
                if (prod[v] >= bound) {
                    survives = false;
                    break;
                }
            }
            if (!survives)
                continue;
            auto [it, inserted] = acc.try_emplace(prod, 0);
            it->second = (it->second + ta.coeff * tb.coeff) % p;
        }
    }
    std::vector<Term> terms;
    terms.reserve(acc.size());
    for (auto& [mono, coeff] : acc)
        if (coeff != 0)
            terms.push_back(Term{mono, coeff});
    return Polynomial::from_terms(a.p(), a.nvars(), std::move(terms));
}

namespace {

// Variable 0 occupies the highest bit field so that descending key order is
// exactly the canonical descending-lex term order.
std::uint64_t pack_monomial(const Monomial& m, int bits)
{
    std::uint64_t key = 0;
    for (Exponent e : m)
        key = (key << bits) | static_cast<std::uint64_t>(e);
    return key;
}

Monomial unpack_monomial(std::uint64_t key, int bits, int nvars)
{
    Monomial m(static_cast<std::size_t>(nvars));
    const std::uint64_t mask = (std::uint64_t(1) << bits) - 1;
    for (int v = nvars - 1; v >= 0; --v) {
        m[static_cast<std::size_t>(v)] = static_cast<Exponent>(key & mask);
        key >>= bits;
    }
    return m;
}

bool key_survives(std::uint64_t key, int bits, int nvars, std::uint64_t bound)
{
    const std::uint64_t mask = (std::uint64_t(1) << bits) - 1;
    for (int v = 0; v < nvars; ++v) {
        if ((key & mask) >= bound)
            return false;
        key >>= bits;
    }
    return true;
}

} // namespace

Polynomial multiply_reduced_packed(const Polynomial& a, const Polynomial& b, Exponent bound, bool threads_on)
{
    if (a.p() != b.p() || a.nvars() != b.nvars())
        throw std::domain_error("polynomial ring mismatch");
    if (!packable(a, bound) || !packable(b, bound))
        return multiply_reduced_serial(a, b, bound);

    const std::uint64_t p = a.p().value();
    const int nvars = a.nvars();
    const int bits = field_bits(bound);
    const std::uint64_t ubound = static_cast<std::uint64_t>(bound);

    std::vector<std::pair<std::uint64_t, std::uint64_t>> pa, pb;
    pa.reserve(a.terms().size());
    pb.reserve(b.terms().size());
    for (const Term& t : a.terms())
        pa.emplace_back(pack_monomial(t.mono, bits), t.coeff);
    for (const Term& t : b.terms())
        pb.emplace_back(pack_monomial(t.mono, bits), t.coeff);

    const std::size_t work = pa.size() * pb.size();
    const bool parallel = threads_on && work >= kParallelWork && omp_get_max_threads() > 1;

    std::vector<std::unordered_map<std::uint64_t, std::uint64_t>> partials(
        static_cast<std::size_t>(parallel ? omp_get_max_threads() : 1));

#pragma omp parallel if (parallel)
    {
        auto& local = partials[static_cast<std::size_t>(parallel ? omp_get_thread_num() : 0)];
#pragma omp for schedule(static)
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(pa.size()); ++i) {
            const auto [ka, ca] = pa[static_cast<std::size_t>(i)];
            for (const auto& [kb, cb] : pb) {
                const std::uint64_t key = ka + kb;
                if (!key_survives(key, bits, nvars, ubound))
                    continue;
                auto [it, inserted] = local.try_emplace(key, 0);
                it->second = (it->second + ca * cb) % p;
            }
        }
    }

    // Merge by sorting: the canonical order needs a sort anyway, and a
    // linear combine over the sorted pairs is much cheaper than feeding the
    // partial maps into one another.
    std::size_t total = 0;
    for (const auto& partial : partials)
        total += partial.size();
    std::vector<std::pair<std::uint64_t, std::uint64_t>> flat;
    flat.reserve(total);
    for (const auto& partial : partials)
        flat.insert(flat.end(), partial.begin(), partial.end());
    std::sort(flat.begin(), flat.end(), [](const auto& x, const auto& y) { return x.first > y.first; });

    std::vector<Term> terms;
    terms.reserve(flat.size());
    for (std::size_t i = 0; i < flat.size();) {
        const std::uint64_t key = flat[i].first;
        std::uint64_t coeff = 0;
        for (; i < flat.size() && flat[i].first == key; ++i)
            coeff = (coeff + flat[i].second) % p;
        if (coeff != 0)
            terms.push_back(Term{unpack_monomial(key, bits, nvars), coeff});
    }
    return Polynomial::from_terms(a.p(), nvars, std::move(terms));
}

Polynomial multiply_reduced(const Polynomial& a, const Polynomial& b, Exponent bound, Exec exec)
{
    switch (exec) {
    case Exec::Serial:
        return multiply_reduced_serial(a, b, bound);
    case Exec::Parallel:
        return multiply_reduced_packed(a, b, bound, true);
    case Exec::Auto:
    default:
        return multiply_reduced_packed(a, b, bound, true);
    }
}

Polynomial pow_reduced(const Polynomial& f, std::int64_t a, int e, Exec exec)
{
    if (a < 0)
        throw std::domain_error("negative exponent in pow_reduced");
    const Exponent bound = frobenius_degree(f.p(), e);
    if (a == 0)
        return Polynomial::one(f.p(), f.nvars());

    const Polynomial base = reduce_frobenius(f, e);
    if (base.is_zero())
        return base;
    if (a == 1)
        return base;

    if (a <= kIteratedPowLimit) {
        Polynomial acc = base;
        for (std::int64_t i = 1; i < a && !acc.is_zero(); ++i)
            acc = multiply_reduced(acc, base, bound, exec);
        return acc;
    }

    // Square-and-multiply for large exponents (supports stay small there or
    // the computation is infeasible regardless).
    Polynomial acc = Polynomial::one(f.p(), f.nvars());
    Polynomial sq = base;
    std::int64_t rest = a;
    while (rest > 0 && !sq.is_zero()) {
        if (rest & 1) {
            acc = multiply_reduced(acc, sq, bound, exec);
            if (acc.is_zero())
                return acc;
        }
        rest >>= 1;
        if (rest > 0)
            sq = multiply_reduced(sq, sq, bound, exec);
    }
    if (sq.is_zero() && rest > 0)
        return Polynomial(f.p(), f.nvars());
    return acc;
}

} // namespace fptlab
