#ifndef FPTLAB_BASEP_HPP
#define FPTLAB_BASEP_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "fptlab/rational.hpp"

namespace fptlab {

// Non-terminating base-p expansion data of alpha in [0,1], truncated at a
// finite depth. For alpha in (0,1] the digits are the unique expansion whose
// digits are not eventually all zero; alpha = 0 carries all-zero digits by
// convention.
struct Expansion {
    Rational alpha;
    Prime p;
    int depth;                        // e >= 1
    std::vector<std::int64_t> digits; // a_1..a_e, each in [0, p-1]
    Rational truncation;              // <alpha>_e = sum of a_d / p^d
    Rational tail;                    // alpha - <alpha>_e
};

/// Digits, truncation and tail of alpha to the given depth.
///
/// Each digit is computed independently from the closed form
/// a_d = ceil(p^d a) - p ceil(p^(d-1) a) + p - 1, valid on (0,1].
/// Throws std::domain_error for alpha outside [0,1] or depth < 1.
Expansion expand(const Rational& alpha, Prime p, int depth);

/// <alpha>_e without the digit vector.
Rational truncation(const Rational& alpha, Prime p, int e);

/// <alpha>_e * p^e / (p^e - 1): the value whose expansion repeats the first
/// e digits of alpha forever.
Rational repeat_value(const Rational& alpha, Prime p, int e);

struct FrobeniusRounding {
    Int ceil_pe;    // ceil(p^e a)
    Int floor_pem1; // floor((p^e - 1) a)
    Int ceil_pem1;  // ceil((p^e - 1) a)
};

/// The three rounded multiples tied to <alpha>_e. Requires alpha in (0,1];
/// the defining identities fail at alpha = 0, so it is rejected.
FrobeniusRounding frobenius_rounding(const Rational& alpha, Prime p, int e);

/// Smallest d <= d_max with (p^d - 1) * alpha integral, i.e. the
/// multiplicative order of p modulo the reduced denominator of alpha.
/// Empty when the denominator shares a factor with p or the order
/// exceeds d_max.
std::optional<int> periodicity_order(const Rational& alpha, Prime p, int d_max);

} // namespace fptlab

#endif
