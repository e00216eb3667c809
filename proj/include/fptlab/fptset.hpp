#ifndef FPTLAB_FPTSET_HPP
#define FPTLAB_FPTSET_HPP

#include <optional>
#include <string>
#include <vector>

#include "fptlab/rational.hpp"

namespace fptlab {

// Open interval (lo, hi).
struct Interval {
    Rational lo;
    Rational hi;

    Rational length() const { return hi - lo; }
    bool contains(const Rational& x) const { return x > lo && x < hi; }

    friend bool operator==(const Interval& a, const Interval& b) { return a.lo == b.lo && a.hi == b.hi; }
};

// The p^e - 1 disjoint open intervals (k/p^e, k/(p^e - 1)), k = 1..p^e-1,
// that no F-pure threshold of characteristic p can enter. The beta = 1
// interval falls outside (0,1) and is clipped away.
struct ForbiddenIntervalSet {
    Prime p;
    int level;
    std::vector<Interval> intervals; // sorted by left endpoint
};

/// Full clipped interval list for a level. Enumeration only; levels with
/// more than 2^21 intervals are refused.
ForbiddenIntervalSet forbidden_intervals(Prime p, int level);

struct AdmissibilityReport {
    bool admissible; // "no exclusion found up to depth", never membership
    std::optional<int> level;
    std::optional<Interval> interval;
};

/// Exclusion test: lambda can only be an F-pure threshold if
/// lambda >= repeat(lambda, e) for every e. The first violating level is
/// returned together with the forbidden interval containing lambda.
AdmissibilityReport admissible(const Rational& lambda, Prime p, int depth);

/// Exact sum of the interval lengths at one level; equals 1/2 for every p, e.
Rational measure(Prime p, int level);

enum class RenderFormat { Ascii, Svg };

/// Number-line figure of the forbidden intervals, one row per level, tick
/// labels at multiples of 1/p^max(levels). Deterministic for fixed inputs.
std::string render(Prime p, const std::vector<int>& levels, RenderFormat format);

} // namespace fptlab

#endif
