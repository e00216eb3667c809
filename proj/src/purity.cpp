#include "fptlab/purity.hpp"

#include <stdexcept>

#include "fptlab/basep.hpp"
#include "fptlab/errors.hpp"

namespace fptlab {

namespace {

PurityVerdict undecided(PurityFlavor flavor, int depth)
{
    return PurityVerdict{flavor, PurityOutcome::Undecided, std::nullopt, "", depth};
}

PurityVerdict decided(PurityFlavor flavor, PurityOutcome outcome, int witness, std::string certificate, int depth)
{
    return PurityVerdict{flavor, outcome, witness, std::move(certificate), depth};
}

void check_chain(const PurityClassification& c)
{
    const bool strong_holds = c.strong.outcome == PurityOutcome::Holds;
    const bool sharp_holds = c.sharp.outcome == PurityOutcome::Holds;
    const bool fpure_holds = c.f_pure.outcome == PurityOutcome::Holds;
    const bool sharp_fails = c.sharp.outcome == PurityOutcome::Fails;
    const bool fpure_fails = c.f_pure.outcome == PurityOutcome::Fails;
    internal_check(!(strong_holds && sharp_fails), "strong holds but sharp fails");
    internal_check(!(sharp_holds && fpure_fails), "sharp holds but F-pure fails");
    internal_check(!(strong_holds && fpure_fails), "strong holds but F-pure fails");
    internal_check(!(fpure_holds && fpure_fails), "contradictory F-pure verdicts");
}

} // namespace

PurityClassification classify_table(const NuTable& table, const Rational& lambda)
{
    if (lambda < 0)
        throw std::domain_error("pairs require lambda >= 0");
    const int depth = table.depth;

    if (lambda > 1) {
        const char* reason = "lambda > 1: no pair is F-pure there";
        PurityClassification out{
            decided(PurityFlavor::FPure, PurityOutcome::Fails, 0, reason, depth),
            decided(PurityFlavor::Strong, PurityOutcome::Fails, 0, reason, depth),
            decided(PurityFlavor::Sharp, PurityOutcome::Fails, 0, reason, depth),
        };
        out.f_pure.witness.reset();
        out.strong.witness.reset();
        out.sharp.witness.reset();
        return out;
    }

    PurityClassification out{
        undecided(PurityFlavor::FPure, depth),
        undecided(PurityFlavor::Strong, depth),
        undecided(PurityFlavor::Sharp, depth),
    };

    const Int p(table.p.value());
    std::optional<int> above_upper; // first level certifying lambda > fpt
    for (int e = 1; e <= depth; ++e) {
        const Int pe = pow_int(p, static_cast<unsigned long>(e));
        const Int nu_e(table.nu[static_cast<std::size_t>(e - 1)]);

        if (!above_upper && lambda > make_rational(nu_e + 1, pe))
            above_upper = e;

        if (out.strong.outcome == PurityOutcome::Undecided) {
            if (nu_e >= ceil_rational(lambda * Rational(pe)))
                out.strong = decided(PurityFlavor::Strong, PurityOutcome::Holds, e,
                                     "nu(p^e) >= ceil(p^e lambda)", depth);
            else if (above_upper)
                out.strong = decided(PurityFlavor::Strong, PurityOutcome::Fails, *above_upper,
                                     "lambda > (nu(p^e)+1)/p^e >= fpt", depth);
        }
        if (out.sharp.outcome == PurityOutcome::Undecided) {
            if (nu_e >= ceil_rational(lambda * Rational(pe - 1)))
                out.sharp = decided(PurityFlavor::Sharp, PurityOutcome::Holds, e,
                                    "nu(p^e) >= ceil((p^e-1) lambda)", depth);
            else if (above_upper)
                out.sharp = decided(PurityFlavor::Sharp, PurityOutcome::Fails, *above_upper,
                                    "lambda > (nu(p^e)+1)/p^e >= fpt", depth);
        }
        if (out.f_pure.outcome == PurityOutcome::Undecided) {
            if (lambda <= make_rational(nu_e, pe - 1))
                out.f_pure = decided(PurityFlavor::FPure, PurityOutcome::Holds, e,
                                     "lambda <= nu(p^e)/(p^e-1), a certified lower bound for fpt", depth);
            else if (nu_e < floor_rational(lambda * Rational(pe - 1)))
                out.f_pure = decided(PurityFlavor::FPure, PurityOutcome::Fails, e,
                                     "nu(p^e) < floor((p^e-1) lambda): the defining inclusion fails", depth);
        }
    }
    // No definitional witness for F-purity either way, but lambda exceeds a
    // certified upper bound for fpt; purity at the threshold makes F-purity
    // equivalent to lambda <= fpt, so this still decides it.
    if (out.f_pure.outcome == PurityOutcome::Undecided && above_upper)
        out.f_pure = decided(PurityFlavor::FPure, PurityOutcome::Fails, *above_upper,
                             "lambda > (nu(p^e)+1)/p^e >= fpt", depth);

    check_chain(out);
    return out;
}

PurityClassification classify(const SplitOracle& oracle, const Rational& lambda, int depth)
{
    return classify_table(nu_sequence(oracle, depth), lambda);
}

PurityClassification classify(const Polynomial& f, const Rational& lambda, int depth, Exec exec)
{
    return classify_table(nu_sequence(f, depth, exec), lambda);
}

PurityClassification classify_at_threshold(const Rational& fpt, Prime p, int d_max)
{
    if (fpt < 0 || fpt > 1)
        throw std::domain_error("fpt must lie in [0,1], got " + to_string(fpt));
    if (d_max < 1)
        throw std::domain_error("d_max must be >= 1");

    PurityClassification out{
        decided(PurityFlavor::FPure, PurityOutcome::Holds, 0, "F-purity holds at the threshold itself", d_max),
        decided(PurityFlavor::Strong, PurityOutcome::Fails, 0,
                "ceil(p^e fpt) = nu(p^e) + 1 at every level, so no level splits", d_max),
        undecided(PurityFlavor::Sharp, d_max),
    };
    out.f_pure.witness.reset();
    out.strong.witness.reset();

    const Int den = fpt.get_den();
    Int g;
    mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), Int(p.value()).get_mpz_t());
    if (g != 1) {
        out.sharp = decided(PurityFlavor::Sharp, PurityOutcome::Fails, 0,
                            "denominator of fpt is divisible by p, so (p^e-1) fpt is never an integer", d_max);
        out.sharp.witness.reset();
    } else {
        const std::optional<int> order = periodicity_order(fpt, p, d_max);
        if (order) {
            out.sharp = decided(PurityFlavor::Sharp, PurityOutcome::Holds, *order,
                                "(p^e-1) fpt is an integer at e = ord_p(denominator)", d_max);
        } else {
            out.sharp = decided(PurityFlavor::Sharp, PurityOutcome::Holds, 0,
                                "denominator of fpt is coprime to p; the witness level exceeds d_max", d_max);
            out.sharp.witness.reset();
        }
    }
    check_chain(out);
    return out;
}

} // namespace fptlab
