#ifndef FPTLAB_FEDDER_HPP
#define FPTLAB_FEDDER_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "fptlab/poly.hpp"

namespace fptlab {

// Splitting test for R * f^(a/p^e) <= R^(1/p^e). The results downstream hold
// over any F-pure ring; only the regular local case (polynomial ring at the
// origin) has an effective test, shipped below as FedderOracle.
class SplitOracle {
public:
    virtual ~SplitOracle() = default;

    virtual Prime p() const = 0;

    /// Does R * f^(a/p^e) <= R^(1/p^e) split over R?
    virtual bool splits(std::int64_t a, int e) const = 0;
};

// Fedder membership test: the inclusion splits iff f^a lies outside
// m^[p^e] = (x_1^{p^e}, ..., x_n^{p^e}).
class FedderOracle final : public SplitOracle {
public:
    /// Requires f nonzero with zero constant term (a non-unit of the local
    /// ring); throws std::domain_error otherwise.
    explicit FedderOracle(Polynomial f, Exec exec = Exec::Auto);

    Prime p() const override { return f_.p(); }
    bool splits(std::int64_t a, int e) const override;

    const Polynomial& poly() const { return f_; }

private:
    Polynomial f_;
    Exec exec_;
};

// nu_f(p^1..p^E) with the digits a_e = nu(p^e) - p*nu(p^(e-1)). Every digit
// lies in [0, p-1]; a violation is an oracle inconsistency and throws.
struct NuTable {
    Prime p;
    int depth;
    std::vector<std::int64_t> nu;
    std::vector<std::int64_t> digits;
    std::optional<Polynomial> f; // present when built from a polynomial
};

/// nu(p^e) = max{a in [0, p^e-1] : splits(a, e)} by binary search; the
/// predicate is monotone because m^[p^e] is an ideal.
std::int64_t nu(const SplitOracle& oracle, int e);
std::int64_t nu(const Polynomial& f, int e, Exec exec = Exec::Auto);

/// Digit-by-digit table: level e+1 only searches the p candidates
/// a in [p*nu(p^e), p*nu(p^e) + p - 1].
NuTable nu_sequence(const SplitOracle& oracle, int depth);

/// Same table via the Fedder fast path: the reduced power f^{nu(p^e)} is
/// carried across levels through the Frobenius (freshman's dream), so each
/// level costs at most p-1 small multiplications.
NuTable nu_sequence(const Polynomial& f, int depth, Exec exec = Exec::Auto);

/// Image of g under the Frobenius r -> r^p: exponents scale by p,
/// coefficients are fixed by Fermat.
Polynomial frobenius_image(const Polynomial& g);

} // namespace fptlab

#endif
