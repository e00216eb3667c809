#ifndef FPTLAB_POLY_HPP
#define FPTLAB_POLY_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fptlab/errors.hpp"
#include "fptlab/rational.hpp"

namespace fptlab {

using Exponent = std::int64_t;

// Exponent vector; length equals the polynomial's variable count.
using Monomial = std::vector<Exponent>;

struct Term {
    Monomial mono;
    std::uint64_t coeff; // in [1, p-1]
};

/// true when a precedes b in the canonical term order (descending
/// lexicographic on exponent vectors).
bool monomial_before(const Monomial& a, const Monomial& b);

// Sparse multivariate polynomial over F_p. Terms are kept in canonical order
// (descending lex), coefficients reduced into [1, p-1], no zero terms. The
// zero polynomial has an empty term list. Polynomial arithmetic requires
// p < 2^31 so coefficient products fit a machine word.
class Polynomial {
public:
    Polynomial(Prime p, int nvars); // zero polynomial

    static Polynomial constant(Prime p, int nvars, std::uint64_t value);
    static Polynomial one(Prime p, int nvars) { return constant(p, nvars, 1); }

    /// Collects like terms, reduces coefficients mod p, drops zeros, sorts.
    static Polynomial from_terms(Prime p, int nvars, std::vector<Term> terms);

    Prime p() const { return p_; }
    int nvars() const { return nvars_; }
    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool has_constant_term() const;
    Exponent max_exponent() const;
    std::int64_t total_degree() const;

    /// Canonical text form, e.g. "x^2*y + 3*y^5"; "0" for the zero polynomial.
    std::string str() const;

    friend bool operator==(const Polynomial& a, const Polynomial& b);
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

private:
    Prime p_;
    int nvars_;
    std::vector<Term> terms_;
};

/// Parses the grammar
///   poly   := term ('+' term)*
///   term   := coeff ('*' factor)* | factor ('*' factor)*
///   factor := var ('^' nat)?
///   var    := 'x' | 'y' | 'z' | 'x' nat
/// with insignificant whitespace. 'x','y','z' alias 'x1','x2','x3'. The
/// variable count is the largest index used (at least min_nvars). Throws
/// ParseError on syntax errors and std::domain_error if every term vanishes
/// mod p (the zero polynomial is rejected as input).
Polynomial parse_polynomial(std::string_view text, Prime p, int min_nvars = 0);

/// p^e as a checked Exponent; throws std::domain_error on overflow (> 2^62).
Exponent frobenius_degree(Prime p, int e);

/// Membership of g in m^[p^e] = (x_1^{p^e}, ..., x_n^{p^e}): every monomial
/// must have some exponent >= p^e. The zero polynomial is a member.
bool in_frobenius_power(const Polynomial& g, int e);

/// Normal form of g modulo m^[p^e]: drops every monomial with any
/// exponent >= p^e.
Polynomial reduce_frobenius(const Polynomial& g, int e);

enum class Exec {
    Auto,     // packed kernel, OpenMP when the term-product count is large
    Serial,   // generic reference path, single-threaded
    Parallel, // packed kernel, OpenMP forced on
};

/// a * b with every product monomial discarded as soon as some exponent
/// reaches `bound`. Inputs must already be reduced below `bound`.
Polynomial multiply_reduced(const Polynomial& a, const Polynomial& b, Exponent bound, Exec exec = Exec::Auto);

/// f^a reduced modulo m^[p^e]. Reduction is applied to f first and after
/// every intermediate product, so supports never exceed p^(e*nvars).
Polynomial pow_reduced(const Polynomial& f, std::int64_t a, int e, Exec exec = Exec::Auto);

} // namespace fptlab

#endif
