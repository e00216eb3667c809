#ifndef FPTLAB_TESTS_CORPUS_HPP
#define FPTLAB_TESTS_CORPUS_HPP

// Deterministic random inputs shared by the property tests and the
// acceptance suite: polynomials with <= 3 variables, total degree <= 6,
// p in {2,3,5}, and rationals in (0,1] with bounded denominator.

#include <cstdint>
#include <random>
#include <vector>

#include "fptlab/poly.hpp"
#include "fptlab/rational.hpp"

namespace fptlab::testing {

inline constexpr std::uint64_t kCorpusSeed = 20250809;

struct CorpusEntry {
    Polynomial f;
    int max_depth; // e <= 3, or 4 when p = 2
};

/// Nonzero polynomial with zero constant term: 1..5 monomials of total
/// degree 1..6 in 1..3 variables.
inline Polynomial random_polynomial(std::mt19937_64& rng, Prime p)
{
    std::uniform_int_distribution<int> nvars_dist(1, 3);
    std::uniform_int_distribution<int> nterms_dist(1, 5);
    std::uniform_int_distribution<std::uint64_t> coeff_dist(1, p.value() - 1);

    const int nvars = nvars_dist(rng);
    while (true) {
        std::vector<Term> terms;
        const int nterms = nterms_dist(rng);
        for (int t = 0; t < nterms; ++t) {
            Monomial mono(static_cast<std::size_t>(nvars), 0);
            std::uniform_int_distribution<int> deg_dist(1, 6);
            int degree = deg_dist(rng);
            std::uniform_int_distribution<int> var_dist(0, nvars - 1);
            for (int d = 0; d < degree; ++d)
                ++mono[static_cast<std::size_t>(var_dist(rng))];
            terms.push_back(Term{std::move(mono), coeff_dist(rng)});
        }
        Polynomial f = Polynomial::from_terms(p, nvars, std::move(terms));
        if (!f.is_zero())
            return f;
    }
}

inline std::vector<CorpusEntry> polynomial_corpus(std::size_t count, std::uint64_t seed = kCorpusSeed)
{
    std::mt19937_64 rng(seed);
    const std::uint64_t primes[] = {2, 3, 5};
    std::vector<CorpusEntry> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const Prime p(primes[i % 3]);
        Polynomial f = random_polynomial(rng, p);
        out.push_back(CorpusEntry{std::move(f), p.value() == 2 ? 4 : 3});
    }
    return out;
}

/// Rational in (0,1] with denominator <= max_den.
inline Rational random_unit_rational(std::mt19937_64& rng, std::uint64_t max_den = 1000000)
{
    std::uniform_int_distribution<std::uint64_t> den_dist(1, max_den);
    const std::uint64_t den = den_dist(rng);
    std::uniform_int_distribution<std::uint64_t> num_dist(1, den);
    return make_rational(Int(num_dist(rng)), Int(den));
}

} // namespace fptlab::testing

#endif
