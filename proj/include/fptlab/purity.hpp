#ifndef FPTLAB_PURITY_HPP
#define FPTLAB_PURITY_HPP

#include <optional>
#include <string>

#include "fptlab/fedder.hpp"

namespace fptlab {

enum class PurityFlavor { FPure, Strong, Sharp };
enum class PurityOutcome { Holds, Fails, Undecided };

struct PurityVerdict {
    PurityFlavor flavor;
    PurityOutcome outcome;
    std::optional<int> witness; // level e backing a holds/fails outcome
    std::string certificate;    // human-readable reason, non-empty unless undecided
    int depth_used;
};

struct PurityClassification {
    PurityVerdict f_pure;
    PurityVerdict strong;
    PurityVerdict sharp;
};

/// Classifies the pair (R, f^lambda) for all three purity flavors by witness
/// search through levels e <= depth:
///   strong holds   iff some nu(p^e) >= ceil(p^e lambda)
///   sharp holds    iff some nu(p^e) >= ceil((p^e-1) lambda)
///   F-pure fails   iff some nu(p^e) <  floor((p^e-1) lambda)
///   F-pure holds   if lambda <= nu(p^e)/(p^e-1) for some e (then lambda is
///                  below a certified lower bound for fpt)
///   strong/sharp fail if lambda > (nu(p^e)+1)/p^e for some e (then
///                  lambda > fpt)
/// Anything without a witness is reported undecided at this depth; in
/// particular sharp F-purity at lambda = fpt with (p^e-1) fpt never integral
/// is genuinely semi-decidable here — classify_at_threshold is the escape
/// hatch when the exact threshold is known.
///
/// lambda must be >= 0; lambda > 1 short-circuits to fails for every flavor.
PurityClassification classify(const Polynomial& f, const Rational& lambda, int depth, Exec exec = Exec::Auto);
PurityClassification classify(const SplitOracle& oracle, const Rational& lambda, int depth);

/// Verdicts from an already-computed table (no oracle calls).
PurityClassification classify_table(const NuTable& table, const Rational& lambda);

/// Purity of (R, f^fpt) assuming the supplied rational IS the exact
/// threshold: F-pure always holds, strong always fails, and sharp holds iff
/// the denominator of fpt is coprime to p (equivalently (p^e-1) fpt is an
/// integer for some e; the witness level is reported when the multiplicative
/// order is at most d_max).
PurityClassification classify_at_threshold(const Rational& fpt, Prime p, int d_max);

} // namespace fptlab

#endif
