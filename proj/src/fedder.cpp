#include "fptlab/fedder.hpp"

#include <limits>
#include <stdexcept>

#include "fptlab/errors.hpp"

namespace fptlab {

FedderOracle::FedderOracle(Polynomial f, Exec exec) : f_(std::move(f)), exec_(exec)
{
    if (f_.is_zero())
        throw std::domain_error("fpt is undefined for the zero polynomial");
    if (f_.has_constant_term())
        throw std::domain_error("f must vanish at the origin (zero constant term); units have no fpt");
}

bool FedderOracle::splits(std::int64_t a, int e) const
{
    return !in_frobenius_power(pow_reduced(f_, a, e, exec_), e);
}

std::int64_t nu(const SplitOracle& oracle, int e)
{
    const Exponent pe = frobenius_degree(oracle.p(), e);
    std::int64_t lo = 0;
    std::int64_t hi = pe - 1;
    while (lo < hi) {
        const std::int64_t mid = lo + (hi - lo + 1) / 2;
        if (oracle.splits(mid, e))
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

std::int64_t nu(const Polynomial& f, int e, Exec exec)
{
    return nu(FedderOracle(f, exec), e);
}

namespace {

void push_level(NuTable& table, std::int64_t level_nu)
{
    const auto p = static_cast<std::int64_t>(table.p.value());
    const std::int64_t prev = table.nu.empty() ? 0 : table.nu.back();
    const std::int64_t digit = level_nu - p * prev;
    internal_check(digit >= 0 && digit <= p - 1, "nu digit outside [0, p-1]");
    table.nu.push_back(level_nu);
    table.digits.push_back(digit);
}

} // namespace

NuTable nu_sequence(const SplitOracle& oracle, int depth)
{
    if (depth < 1)
        throw std::domain_error("nu_sequence depth must be >= 1");
    frobenius_degree(oracle.p(), depth); // reject unrepresentable p^depth up front

    NuTable table{oracle.p(), depth, {}, {}, std::nullopt};
    const auto p = static_cast<std::int64_t>(oracle.p().value());
    std::int64_t prev = 0;
    for (int e = 1; e <= depth; ++e) {
        const std::int64_t base = p * prev;
        std::int64_t found = -1;
        for (std::int64_t a = base + p - 1; a >= base; --a) {
            if (oracle.splits(a, e)) {
                found = a;
                break;
            }
        }
        internal_check(found >= 0, "no splitting exponent in the digit window");
        push_level(table, found);
        prev = found;
    }
    return table;
}

NuTable nu_sequence(const Polynomial& f, int depth, Exec exec)
{
    FedderOracle oracle(f, exec); // validates f
    if (depth < 1)
        throw std::domain_error("nu_sequence depth must be >= 1");
    frobenius_degree(f.p(), depth);

    NuTable table{f.p(), depth, {}, {}, f};
    const auto p = static_cast<std::int64_t>(f.p().value());

    // power = f^{nu(p^e)} reduced mod m^[p^e], carried across levels.
    Polynomial power = Polynomial::one(f.p(), f.nvars());
    for (int e = 1; e <= depth; ++e) {
        const Exponent bound = frobenius_degree(f.p(), e);
        const Polynomial base = reduce_frobenius(f, e);
        Polynomial cur = e == 1 ? std::move(power) : frobenius_image(power);
        internal_check(!cur.is_zero(), "lifted power vanished");
        const std::int64_t window_base = p * (table.nu.empty() ? 0 : table.nu.back());
        std::int64_t level_nu = window_base;
        for (std::int64_t j = 1; j <= p - 1; ++j) {
            Polynomial next = multiply_reduced(cur, base, bound, exec);
            if (next.is_zero())
                break;
            cur = std::move(next);
            level_nu = window_base + j;
        }
        push_level(table, level_nu);
        power = std::move(cur);
    }
    return table;
}

Polynomial frobenius_image(const Polynomial& g)
{
    const auto p = static_cast<Exponent>(g.p().value());
    std::vector<Term> terms;
    terms.reserve(g.terms().size());
    for (const Term& t : g.terms()) {
        Monomial m(t.mono.size());
        for (std::size_t v = 0; v < m.size(); ++v) {
            if (t.mono[v] > std::numeric_limits<Exponent>::max() / p)
                throw std::domain_error("exponent overflow in Frobenius image");
            m[v] = t.mono[v] * p;
        }
        terms.push_back(Term{std::move(m), t.coeff});
    }
    return Polynomial::from_terms(g.p(), g.nvars(), std::move(terms));
}

} // namespace fptlab
