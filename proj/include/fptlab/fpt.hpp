#ifndef FPTLAB_FPT_HPP
#define FPTLAB_FPT_HPP

#include <optional>
#include <vector>

#include "fptlab/basep.hpp"
#include "fptlab/fedder.hpp"

namespace fptlab {

enum class GuessStatus {
    CertifiedLowerBound, // the extrapolation coincides with certified_lower
    UncertifiedGuess,
};

// Nested bounds on fpt(f) assembled from a nu table. The e-th truncation of
// the true threshold is nu(p^e)/p^e, so
//   lower = <fpt>_E < fpt <= <fpt>_E + 1/p^E = upper,
// and every nu(p^e)/(p^e - 1) is a certified lower bound.
struct FptApproximation {
    NuTable table;
    std::vector<Rational> truncations; // nu(p^e)/p^e for e = 1..E
    Rational lower;                    // strict
    Rational upper;                    // inclusive
    Rational certified_lower;          // max over e of nu(p^e)/(p^e - 1)
    std::optional<Rational> guess;     // period extrapolation of the digits
    std::optional<GuessStatus> guess_status;
};

/// Runs nu_sequence to the given depth and assembles all bounds. The guess
/// is populated only when the digit string ends in at least three full
/// repetitions of a minimal period, and is never more than a guess unless it
/// coincides with certified_lower.
FptApproximation approximate(const Polynomial& f, int depth, Exec exec = Exec::Auto);

/// Same, over an abstract splitting oracle.
FptApproximation approximate(const SplitOracle& oracle, int depth);

/// Assembles the bounds from an already-computed table (e.g. cached values).
FptApproximation approximate_from_table(NuTable table);

enum class CandidateStatus {
    ExactCertified,   // candidate provably equals fpt
    ConsistentAtDepth, // all truncations up to depth E match
    LowerBoundOnly,
};

struct RationalCandidate {
    Rational candidate;
    CandidateStatus status;
};

/// Best rational candidate for fpt: max(certified_lower, guess). Exactness
/// is certified only when the certified lower bound pinches against the
/// upper bound (which forces candidate = fpt); in practice that happens
/// exactly at fpt = 1, and every other exact claim stays a status, never an
/// assertion.
RationalCandidate rational_candidate(const FptApproximation& approx, int d_max);

// positive_witness is a level e with nu(p^e) >= 1 (so fpt > 0); its absence
// after probing means "undecided", never "fpt = 0". is_one is a complete
// decision: fpt = 1 iff nu(p) = p - 1.
struct SpecialValues {
    std::optional<int> positive_witness;
    bool is_one;

    bool positive() const { return positive_witness.has_value(); }
};

SpecialValues special_values(const Polynomial& f, int probe_depth = 6, Exec exec = Exec::Auto);

} // namespace fptlab

#endif
