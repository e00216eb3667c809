#include "fptlab/fpt.hpp"

#include <stdexcept>

#include "fptlab/errors.hpp"

namespace fptlab {

namespace {

// Detects a minimal period ell whose block fills the last 3*ell digits, then
// extends the periodic tail as far back as it matches. Returns the
// eventually-periodic extrapolated value.
std::optional<Rational> periodic_extrapolation(const NuTable& table)
{
    const auto& d = table.digits;
    const int depth = static_cast<int>(d.size());
    const Int p(table.p.value());
    for (int ell = 1; 3 * ell <= depth; ++ell) {
        bool repeats = true;
        for (int i = depth - 2 * ell; i < depth && repeats; ++i)
            repeats = d[static_cast<std::size_t>(i)] == d[static_cast<std::size_t>(i - ell)];
        if (!repeats)
            continue;
        int start = depth - 3 * ell; // first index of the periodic tail
        while (start > 0 && d[static_cast<std::size_t>(start - 1)] == d[static_cast<std::size_t>(start - 1 + ell)])
            --start;
        // value = <fpt>_start + block / (p^start (p^ell - 1))
        Int block(0);
        for (int i = 0; i < ell; ++i)
            block = block * p + Int(d[static_cast<std::size_t>(start + i)]);
        Rational head(0);
        if (start > 0)
            head = make_rational(Int(table.nu[static_cast<std::size_t>(start - 1)]),
                                 pow_int(p, static_cast<unsigned long>(start)));
        const Int pstart = pow_int(p, static_cast<unsigned long>(start));
        const Int pell = pow_int(p, static_cast<unsigned long>(ell));
        return head + make_rational(block, pstart * (pell - 1));
    }
    return std::nullopt;
}

FptApproximation assemble(NuTable table)
{
    const Int p(table.p.value());
    std::vector<Rational> truncations;
    truncations.reserve(table.nu.size());

    Rational certified(0);
    Rational prev_lo(0), prev_hi(1);
    for (int e = 1; e <= table.depth; ++e) {
        const Int pe = pow_int(p, static_cast<unsigned long>(e));
        const Int nu_e(table.nu[static_cast<std::size_t>(e - 1)]);
        const Rational tr = make_rational(nu_e, pe);
        const Rational hi = make_rational(nu_e + 1, pe);
        internal_check(tr >= prev_lo && hi <= prev_hi, "fpt bounds failed to nest");
        prev_lo = tr;
        prev_hi = hi;
        truncations.push_back(tr);
        const Rational cert_e = make_rational(nu_e, pe - 1);
        if (cert_e > certified)
            certified = cert_e;
    }
    internal_check(certified <= prev_hi, "certified lower bound above the upper bound");
    internal_check(prev_hi <= 1, "fpt upper bound above 1");

    const std::optional<Rational> guess = periodic_extrapolation(table);
    std::optional<GuessStatus> guess_status;
    if (guess)
        guess_status = (*guess == certified) ? GuessStatus::CertifiedLowerBound : GuessStatus::UncertifiedGuess;
    return FptApproximation{std::move(table), std::move(truncations), prev_lo, prev_hi,
                            certified,        guess,                  guess_status};
}

} // namespace

FptApproximation approximate(const Polynomial& f, int depth, Exec exec)
{
    return assemble(nu_sequence(f, depth, exec));
}

FptApproximation approximate(const SplitOracle& oracle, int depth)
{
    return assemble(nu_sequence(oracle, depth));
}

FptApproximation approximate_from_table(NuTable table)
{
    return assemble(std::move(table));
}

RationalCandidate rational_candidate(const FptApproximation& approx, int d_max)
{
    if (d_max < 1)
        throw std::domain_error("d_max must be >= 1");

    Rational candidate = approx.certified_lower;
    if (approx.guess && *approx.guess > candidate)
        candidate = *approx.guess;

    bool truncations_match = candidate >= 0 && candidate <= 1;
    if (truncations_match) {
        for (int e = 1; e <= approx.table.depth; ++e) {
            if (truncation(candidate, approx.table.p, e) != approx.truncations[static_cast<std::size_t>(e - 1)]) {
                truncations_match = false;
                break;
            }
        }
    }

    // candidate <= fpt is certified only for candidate == certified_lower;
    // combined with fpt <= upper, equality against the upper bound pins
    // candidate == fpt exactly.
    const bool pinched = candidate == approx.certified_lower && candidate == approx.upper;
    if (pinched && truncations_match && periodicity_order(candidate, approx.table.p, d_max).has_value())
        return {candidate, CandidateStatus::ExactCertified};
    if (truncations_match)
        return {candidate, CandidateStatus::ConsistentAtDepth};
    return {candidate, CandidateStatus::LowerBoundOnly};
}

SpecialValues special_values(const Polynomial& f, int probe_depth, Exec exec)
{
    if (probe_depth < 1)
        throw std::domain_error("probe depth must be >= 1");
    FedderOracle oracle(f, exec);

    SpecialValues out{std::nullopt, false};
    out.is_one = nu(oracle, 1) == static_cast<std::int64_t>(f.p().value()) - 1;
    for (int e = 1; e <= probe_depth; ++e) {
        // fpt > 0 iff R f^{1/p^e} <= R^{1/p^e} splits for some e.
        if (oracle.splits(1, e)) {
            out.positive_witness = e;
            break;
        }
    }
    return out;
}

} // namespace fptlab
