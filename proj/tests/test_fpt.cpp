#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fptlab/fpt.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace fptlab;
namespace ft = fptlab::testing;

namespace {

class TableOracle final : public SplitOracle {
public:
    TableOracle(Prime p, std::vector<std::int64_t> nu) : p_(p), nu_(std::move(nu)) {}
    Prime p() const override { return p_; }
    bool splits(std::int64_t a, int e) const override
    {
        return a <= nu_[static_cast<std::size_t>(e - 1)];
    }

private:
    Prime p_;
    std::vector<std::int64_t> nu_;
};

} // namespace

TEST_CASE("approximate x^2 over F_2 to depth 3")
{
    const FptApproximation ap = approximate(parse_polynomial("x^2", Prime(2)), 3);
    CHECK(ap.truncations ==
          std::vector<Rational>{Rational(0), make_rational(1, 4), make_rational(3, 8)});
    CHECK(ap.lower == make_rational(3, 8));
    CHECK(ap.upper == make_rational(1, 2));
    CHECK(ap.certified_lower == make_rational(3, 7));
    CHECK_FALSE(ap.guess.has_value()); // digits 0,1,1: no three repetitions yet
}

TEST_CASE("approximate xy over F_2: certified lower bound reaches 1")
{
    const FptApproximation ap = approximate(parse_polynomial("x*y", Prime(2)), 3);
    CHECK(ap.truncations ==
          std::vector<Rational>{make_rational(1, 2), make_rational(3, 4), make_rational(7, 8)});
    CHECK(ap.certified_lower == 1);
    REQUIRE(ap.guess.has_value());
    CHECK(*ap.guess == 1);
    CHECK(ap.guess_status == GuessStatus::CertifiedLowerBound);
}

TEST_CASE("approximate x^p over F_p brackets 1/p to within 1/p^E")
{
    for (std::uint64_t pv : {2ull, 3ull, 5ull}) {
        const Prime p(pv);
        const int depth = 6;
        const FptApproximation ap =
            approximate(parse_polynomial("x^" + std::to_string(pv), p), depth);
        const Int pE = pow_int(Int(pv), depth);
        CHECK(ap.upper - ap.lower == make_rational(Int(1), pE));
        CHECK(ap.lower < make_rational(1, static_cast<long>(pv)));
        CHECK(ap.upper >= make_rational(1, static_cast<long>(pv)));
        // truncations are (p^(e-1) - 1)/p^e
        for (int e = 1; e <= depth; ++e) {
            const Int pe = pow_int(Int(pv), static_cast<unsigned long>(e));
            const Int pem1 = pow_int(Int(pv), static_cast<unsigned long>(e - 1));
            CHECK(ap.truncations[static_cast<std::size_t>(e - 1)] == make_rational(pem1 - 1, pe));
        }
    }
}

TEST_CASE("nested bounds across the corpus")
{
    for (const auto& entry : ft::polynomial_corpus(20, 41)) {
        const FptApproximation ap = approximate(entry.f, entry.max_depth);
        for (int e = 1; e < entry.max_depth; ++e) {
            const Int pe = pow_int(Int(entry.f.p().value()), static_cast<unsigned long>(e));
            const Int pe1 = pow_int(Int(entry.f.p().value()), static_cast<unsigned long>(e + 1));
            const Rational lo = ap.truncations[static_cast<std::size_t>(e - 1)];
            const Rational hi = lo + make_rational(Int(1), pe);
            const Rational lo_next = ap.truncations[static_cast<std::size_t>(e)];
            const Rational hi_next = lo_next + make_rational(Int(1), pe1);
            CHECK(lo_next >= lo);
            CHECK(hi_next <= hi);
        }
        CHECK(ap.certified_lower <= ap.upper);
        CHECK(ap.upper <= 1);
        for (const Rational& t : ap.truncations) {
            CHECK(t >= 0);
            CHECK(t < 1);
        }
    }
}

TEST_CASE("rational_candidate: pinch at 1 is exact-certified")
{
    const auto rc = rational_candidate(approximate(parse_polynomial("x*y", Prime(2)), 3), 10);
    CHECK(rc.candidate == 1);
    CHECK(rc.status == CandidateStatus::ExactCertified);
}

TEST_CASE("rational_candidate: x^2 over F_2 guesses 1/2 but cannot certify")
{
    const auto rc = rational_candidate(approximate(parse_polynomial("x^2", Prime(2)), 8), 10);
    CHECK(rc.candidate == make_rational(1, 2));
    CHECK(rc.status == CandidateStatus::ConsistentAtDepth);
}

TEST_CASE("rational_candidate: x^2 + y^3 over F_7 at depth 2")
{
    const auto rc = rational_candidate(approximate(parse_polynomial("x^2+y^3", Prime(7)), 2), 10);
    CHECK(rc.candidate == make_rational(5, 6));
    CHECK(rc.status == CandidateStatus::ConsistentAtDepth);
}

TEST_CASE("incoherent oracle tables are rejected, not reported")
{
    // Digits 1,2,0 over F_3 put the repeat bound 5/8 above the upper bound
    // 16/27; no F-pure pair produces such a table, and assembling it must
    // fail loudly instead of emitting impossible bounds.
    const TableOracle oracle(Prime(3), {1, 5, 15});
    CHECK_THROWS_AS(approximate(oracle, 3), std::logic_error);
}

TEST_CASE("coherent tables always yield truncation-consistent candidates")
{
    // For a table satisfying the repeat bounds, an upward digit deviation
    // from the argmax block would promote a later repeat above it, and a
    // downward deviation would break certified <= upper. So the candidate's
    // truncations always match and lower-bound-only stays a defensive state.
    for (const auto& entry : ft::polynomial_corpus(30, 44)) {
        const auto rc = rational_candidate(approximate(entry.f, entry.max_depth), 10);
        CHECK(rc.status != CandidateStatus::LowerBoundOnly);
    }
}

TEST_CASE("guess flags: all-(p-1) digits vs a genuinely uncertified guess")
{
    const FptApproximation half = approximate(parse_polynomial("x^2", Prime(2)), 8);
    REQUIRE(half.guess.has_value());
    CHECK(*half.guess == make_rational(1, 2));
    CHECK(half.guess_status == GuessStatus::UncertifiedGuess); // 1/2 > 127/255

    // digits 0,1,1,0,1,1,... guess after two full periods plus one: needs 9 digits
    const TableOracle oracle(Prime(2), {0, 1, 3, 6, 13, 27, 54, 109, 219});
    const FptApproximation ap = approximate(oracle, 9);
    REQUIRE(ap.guess.has_value());
    CHECK(*ap.guess == make_rational(3, 7)); // 0.011011... in base 2
    CHECK(ap.guess_status == GuessStatus::CertifiedLowerBound);
}

TEST_CASE("special_values frozen examples")
{
    const SpecialValues a = special_values(parse_polynomial("x*y", Prime(5)));
    CHECK(a.positive_witness == 1);
    CHECK(a.is_one);

    const SpecialValues b = special_values(parse_polynomial("x^2", Prime(2)));
    CHECK(b.positive_witness == 2);
    CHECK_FALSE(b.is_one);

    const SpecialValues c = special_values(parse_polynomial("x^3", Prime(3)));
    CHECK_FALSE(c.is_one);
    CHECK(c.positive_witness == 2);

    // 2^5 = 32 < 50: positivity is undecided at probe depth 5, never "false"
    const SpecialValues d = special_values(parse_polynomial("x^50", Prime(2)), 5);
    CHECK_FALSE(d.positive());
    const SpecialValues e = special_values(parse_polynomial("x^50", Prime(2)), 6);
    CHECK(e.positive_witness == 6);
}

TEST_CASE("certified lower bounds are witnessed by the splitting oracle at multiple levels")
{
    // For alpha = nu(p^d)/(p^d - 1): (p^d - 1) alpha is integral and
    // f^{p^d <alpha>_d} survives; the same must hold at level 2d.
    for (const auto& entry : ft::polynomial_corpus(12, 43)) {
        const Prime p = entry.f.p();
        if (p.value() > 3)
            continue; // keep 2d affordable
        const int d = 2;
        const std::int64_t nu_d = nu(entry.f, d);
        const Rational alpha = make_rational(Int(nu_d), pow_int(Int(p.value()), d) - 1);
        const FedderOracle oracle(entry.f);
        for (int mult = 1; mult <= 2; ++mult) {
            const int level = mult * d;
            const Rational tr = truncation(alpha, p, level);
            const Int scaled = Int(tr * Rational(pow_int(Int(p.value()), static_cast<unsigned long>(level))));
            CHECK(oracle.splits(scaled.get_si(), level));
        }
    }
}
