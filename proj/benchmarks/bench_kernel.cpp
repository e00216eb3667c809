// Kernel benchmark: serial reference vs packed kernel (1 thread and OpenMP)
// on the multiplications that dominate nu computations, plus the two
// nu_sequence strategies end to end.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include <omp.h>

#include "fptlab/fedder.hpp"
#include "fptlab/poly.hpp"
#include "fptlab/poly_kernel.hpp"

using namespace fptlab;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration_cast<std::chrono::duration<double>>(std::chrono::steady_clock::now() - start)
        .count();
}

Polynomial power_by(const Polynomial& f, int k, Exponent bound,
                    const std::function<Polynomial(const Polynomial&, const Polynomial&)>& mul)
{
    Polynomial acc = Polynomial::one(f.p(), f.nvars());
    for (int i = 0; i < k; ++i)
        acc = mul(acc, f);
    (void)bound;
    return acc;
}

void bench_multiply(const char* label, const Polynomial& f, int reps, int e)
{
    const Exponent bound = frobenius_degree(f.p(), e);

    struct Variant {
        const char* name;
        std::function<Polynomial(const Polynomial&, const Polynomial&)> mul;
    };
    const std::vector<Variant> variants = {
        {"serial reference", [&](const Polynomial& a, const Polynomial& b) {
             return multiply_reduced_serial(a, b, bound);
         }},
        {"packed, 1 thread", [&](const Polynomial& a, const Polynomial& b) {
             return multiply_reduced_packed(a, b, bound, false);
         }},
        {"packed, OpenMP  ", [&](const Polynomial& a, const Polynomial& b) {
             return multiply_reduced_packed(a, b, bound, true);
         }},
    };

    std::printf("%s (e=%d, %d multiplications)\n", label, e, reps);
    std::size_t support = 0;
    double base_time = 0;
    for (const auto& variant : variants) {
        const auto start = std::chrono::steady_clock::now();
        const Polynomial result = power_by(f, reps, bound, variant.mul);
        const double elapsed = seconds_since(start);
        if (base_time == 0)
            base_time = elapsed;
        support = result.terms().size();
        std::printf("  %-18s %8.3f s   speedup %5.2fx\n", variant.name, elapsed,
                    base_time / (elapsed > 0 ? elapsed : 1e-9));
    }
    std::printf("  final support: %zu terms\n\n", support);
}

void bench_nu(const char* label, const Polynomial& f, int depth)
{
    std::printf("%s: nu to depth %d\n", label, depth);

    auto start = std::chrono::steady_clock::now();
    const NuTable fast = nu_sequence(f, depth);
    std::printf("  incremental nu_sequence   %8.3f s\n", seconds_since(start));

    start = std::chrono::steady_clock::now();
    const FedderOracle oracle(f);
    const NuTable windowed = nu_sequence(oracle, depth);
    std::printf("  window search (recompute) %8.3f s\n", seconds_since(start));

    start = std::chrono::steady_clock::now();
    std::vector<std::int64_t> direct;
    for (int e = 1; e <= depth; ++e)
        direct.push_back(nu(f, e));
    std::printf("  independent binary search %8.3f s\n", seconds_since(start));

    if (fast.nu != windowed.nu || fast.nu != direct)
        std::printf("  MISMATCH between strategies!\n");
    std::printf("  nu: ");
    for (std::int64_t v : fast.nu)
        std::printf("%lld ", static_cast<long long>(v));
    std::printf("\n\n");
}

} // namespace

int main()
{
    std::printf("fptlab kernel benchmark (max threads: %d)\n\n", omp_get_max_threads());

    // Exponents picked so the multinomial coefficients survive mod p
    // (124 = 444 in base 5, 80 = 2222 in base 3) and the support stays large.
    const Polynomial dense5 = parse_polynomial("x + y + z + x*y*z + x^2*y", Prime(5));
    bench_multiply("dense 3-variable polynomial over F_5", dense5, 124, 3);

    const Polynomial dense3 = parse_polynomial("x + y + z + x*y + y*z", Prime(3));
    bench_multiply("dense 3-variable polynomial over F_3", dense3, 80, 4);

    bench_nu("f = x^2 + y^3 over F_7", parse_polynomial("x^2+y^3", Prime(7)), 3);
    bench_nu("f = x^3 + x*y^2 + z^5 over F_5", parse_polynomial("x^3 + x*y^2 + z^5", Prime(5)), 3);
    return 0;
}
