#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fptlab/fedder.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace fptlab;
namespace ft = fptlab::testing;

namespace {

// Oracle with prescribed nu values (splits(a, e) iff a <= nu[e-1]); used to
// exercise the generic paths without a polynomial behind them.
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

// Deliberately broken oracle: nothing splits at any level.
class NothingSplits final : public SplitOracle {
public:
    explicit NothingSplits(Prime p) : p_(p) {}
    Prime p() const override { return p_; }
    bool splits(std::int64_t, int) const override { return false; }

private:
    Prime p_;
};

} // namespace

TEST_CASE("nu of a monomial power: nu(x^p, p^e) = p^(e-1) - 1")
{
    for (std::uint64_t pv : {2ull, 3ull, 5ull}) {
        const Prime p(pv);
        const Polynomial f = parse_polynomial("x^" + std::to_string(pv), p);
        std::int64_t pe = 1;
        for (int e = 1; e <= 4; ++e) {
            CHECK(nu(f, e) == pe - 1); // pe = p^(e-1)
            pe *= static_cast<std::int64_t>(pv);
        }
    }
}

TEST_CASE("nu frozen examples")
{
    CHECK(nu(parse_polynomial("x*y", Prime(3)), 1) == 2);
    CHECK(nu(parse_polynomial("x^2+y^3", Prime(7)), 1) == 5);
    CHECK(nu(parse_polynomial("x^2+y^3", Prime(7)), 2) == 40);
}

TEST_CASE("nu rejects units and zero")
{
    CHECK_THROWS_AS(nu(parse_polynomial("x + 1", Prime(3)), 1), std::domain_error);
    CHECK_THROWS_AS(FedderOracle(Polynomial(Prime(3), 1)), std::domain_error);
}

TEST_CASE("nu_sequence frozen examples")
{
    const NuTable a = nu_sequence(parse_polynomial("x^2", Prime(2)), 3);
    CHECK(a.nu == std::vector<std::int64_t>{0, 1, 3});
    CHECK(a.digits == std::vector<std::int64_t>{0, 1, 1});

    const NuTable b = nu_sequence(parse_polynomial("x*y", Prime(2)), 3);
    CHECK(b.nu == std::vector<std::int64_t>{1, 3, 7});
    CHECK(b.digits == std::vector<std::int64_t>{1, 1, 1});

    const NuTable c = nu_sequence(parse_polynomial("x^2+y^3", Prime(7)), 2);
    CHECK(c.nu == std::vector<std::int64_t>{5, 40});
    CHECK(c.digits == std::vector<std::int64_t>{5, 5});
}

TEST_CASE("fast path, generic window path and binary search all agree")
{
    const auto corpus = ft::polynomial_corpus(24, 31);
    for (const auto& entry : corpus) {
        const int depth = entry.max_depth - 1; // keep the slow oracle path affordable
        const NuTable fast = nu_sequence(entry.f, depth);
        const FedderOracle oracle(entry.f);
        const NuTable windowed = nu_sequence(oracle, depth);
        CHECK(fast.nu == windowed.nu);
        CHECK(fast.digits == windowed.digits);
        for (int e = 1; e <= depth; ++e)
            CHECK(fast.nu[static_cast<std::size_t>(e - 1)] == nu(oracle, e));
    }
}

TEST_CASE("digit range invariant holds across the corpus")
{
    const auto corpus = ft::polynomial_corpus(30, 32);
    for (const auto& entry : corpus) {
        const NuTable t = nu_sequence(entry.f, entry.max_depth);
        const auto p = static_cast<std::int64_t>(entry.f.p().value());
        for (std::int64_t d : t.digits) {
            CHECK(d >= 0);
            CHECK(d <= p - 1);
        }
    }
}

TEST_CASE("Fedder base case: nu(f,1) = p-1 iff f^(p-1) survives, by brute force")
{
    std::mt19937_64 rng(33);
    const std::uint64_t primes[] = {2, 3, 5};
    for (int trial = 0; trial < 30; ++trial) {
        const Prime p(primes[static_cast<std::size_t>(trial) % 3]);
        Polynomial f = ft::random_polynomial(rng, p);
        const bool splits_top =
            !ft::naive_in_frobenius_power(ft::naive_pow_full(f, static_cast<std::int64_t>(p.value()) - 1), 1);
        CHECK((nu(f, 1) == static_cast<std::int64_t>(p.value()) - 1) == splits_top);
    }
}

TEST_CASE("abstract oracles drive the generic machinery")
{
    // digits 1,2,0 over F_3: nu = 1, 5, 15
    const TableOracle oracle(Prime(3), {1, 5, 15});
    const NuTable t = nu_sequence(oracle, 3);
    CHECK(t.nu == std::vector<std::int64_t>{1, 5, 15});
    CHECK(t.digits == std::vector<std::int64_t>{1, 2, 0});
    CHECK(nu(oracle, 3) == 15);
    CHECK_FALSE(t.f.has_value());
}

TEST_CASE("an oracle with no splitting exponent is rejected, not clamped")
{
    const NothingSplits broken(Prime(3));
    CHECK_THROWS_AS(nu_sequence(broken, 1), std::logic_error);
}

TEST_CASE("frobenius_image scales exponents by p and keeps coefficients")
{
    const Polynomial f = parse_polynomial("2*x^2*y + z^3", Prime(5));
    const Polynomial img = frobenius_image(f);
    CHECK(img == parse_polynomial("2*x^10*y^5 + z^15", Prime(5)));
    // matches the p-th power computed naively (freshman's dream)
    CHECK(img == ft::naive_pow_full(f, 5));
}
