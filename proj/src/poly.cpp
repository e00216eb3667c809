#include "fptlab/poly.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <stdexcept>

namespace fptlab {

bool monomial_before(const Monomial& a, const Monomial& b)
{
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Polynomial::Polynomial(Prime p, int nvars) : p_(p), nvars_(nvars)
{
    if (nvars < 1)
        throw std::domain_error("polynomial needs at least one variable");
    if (p.value() >= (std::uint64_t(1) << 31))
        throw std::domain_error("polynomial arithmetic requires p < 2^31");
}

Polynomial Polynomial::constant(Prime p, int nvars, std::uint64_t value)
{
    Polynomial out(p, nvars);
    value %= p.value();
    if (value != 0)
        out.terms_.push_back(Term{Monomial(static_cast<std::size_t>(nvars), 0), value});
    return out;
}

Polynomial Polynomial::from_terms(Prime p, int nvars, std::vector<Term> terms)
{
    // Exponents are capped so that sums of two of them (kernel products) and
    // total degrees stay well inside int64.
    constexpr Exponent kMaxExponent = Exponent(1) << 56;
    Polynomial out(p, nvars);
    for (const Term& t : terms) {
        if (t.mono.size() != static_cast<std::size_t>(nvars))
            throw std::domain_error("term arity does not match variable count");
        for (Exponent e : t.mono) {
            if (e < 0)
                throw std::domain_error("negative exponent");
            if (e > kMaxExponent)
                throw std::domain_error("exponent exceeds 2^56");
        }
    }
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return monomial_before(a.mono, b.mono); });
    const std::uint64_t pv = p.value();
    for (Term& t : terms) {
        const std::uint64_t c = t.coeff % pv;
        if (c == 0)
            continue;
        if (!out.terms_.empty() && out.terms_.back().mono == t.mono) {
            std::uint64_t merged = (out.terms_.back().coeff + c) % pv;
            if (merged == 0)
                out.terms_.pop_back();
            else
                out.terms_.back().coeff = merged;
        } else {
            out.terms_.push_back(Term{t.mono, c});
        }
    }
    return out;
}

bool Polynomial::has_constant_term() const
{
    if (terms_.empty())
        return false;
    const Monomial& last = terms_.back().mono; // constant sorts last in descending lex
    return std::all_of(last.begin(), last.end(), [](Exponent e) { return e == 0; });
}

Exponent Polynomial::max_exponent() const
{
    Exponent m = 0;
    for (const Term& t : terms_)
        for (Exponent e : t.mono)
            m = std::max(m, e);
    return m;
}

std::int64_t Polynomial::total_degree() const
{
    std::int64_t deg = -1; // convention for the zero polynomial
    for (const Term& t : terms_) {
        std::int64_t d = 0;
        for (Exponent e : t.mono)
            d += e;
        deg = std::max(deg, d);
    }
    return deg;
}

namespace {

std::string variable_name(int index, int nvars)
{
    if (nvars <= 3) {
        static const char* names[] = {"x", "y", "z"};
        return names[index];
    }
    return "x" + std::to_string(index + 1);
}

} // namespace

std::string Polynomial::str() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (i > 0)
            out += " + ";
        const Term& t = terms_[i];
        bool constant = true;
        std::string factors;
        for (int v = 0; v < nvars_; ++v) {
            const Exponent e = t.mono[static_cast<std::size_t>(v)];
            if (e == 0)
                continue;
            if (!factors.empty())
                factors += "*";
            factors += variable_name(v, nvars_);
            if (e > 1)
                factors += "^" + std::to_string(e);
            constant = false;
        }
        if (constant) {
            out += std::to_string(t.coeff);
        } else if (t.coeff == 1) {
            out += factors;
        } else {
            out += std::to_string(t.coeff) + "*" + factors;
        }
    }
    return out;
}

bool operator==(const Polynomial& a, const Polynomial& b)
{
    if (a.p_ != b.p_ || a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size())
        return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].coeff != b.terms_[i].coeff || a.terms_[i].mono != b.terms_[i].mono)
            return false;
    return true;
}

namespace {

// Recursive-descent parser for the polynomial grammar. Tracks byte offsets
// for error reporting.
class PolyParser {
public:
    PolyParser(std::string_view text, Prime p) : text_(text), p_(p) {}

    Polynomial run(int min_nvars)
    {
        std::vector<std::pair<std::vector<std::pair<int, Exponent>>, std::uint64_t>> raw_terms;
        int max_var = min_nvars; // 1-based count
        skip_ws();
        if (eof())
            fail("empty polynomial");
        while (true) {
            raw_terms.push_back(parse_term(max_var));
            skip_ws();
            if (eof())
                break;
            expect('+');
        }
        const int nvars = std::max(max_var, 1);
        std::vector<Term> terms;
        terms.reserve(raw_terms.size());
        for (auto& [factors, coeff] : raw_terms) {
            Monomial mono(static_cast<std::size_t>(nvars), 0);
            for (auto [var, exp] : factors) {
                auto& slot = mono[static_cast<std::size_t>(var)];
                if (exp > std::numeric_limits<Exponent>::max() - slot)
                    fail("exponent overflow");
                slot += exp;
            }
            terms.push_back(Term{std::move(mono), coeff});
        }
        Polynomial out = Polynomial::from_terms(p_, nvars, std::move(terms));
        if (out.is_zero())
            throw std::domain_error("polynomial is zero mod " + std::to_string(p_.value()));
        return out;
    }

private:
    std::string_view text_;
    Prime p_;
    std::size_t pos_ = 0;

    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    void skip_ws()
    {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek())))
            ++pos_;
    }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void expect(char c)
    {
        if (eof() || peek() != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    std::uint64_t parse_nat()
    {
        skip_ws();
        if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
            fail("expected a number");
        std::uint64_t value = 0;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
            const std::uint64_t digit = static_cast<std::uint64_t>(peek() - '0');
            if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10)
                fail("number too large");
            value = value * 10 + digit;
            ++pos_;
        }
        return value;
    }

    // var := 'x' | 'y' | 'z' | 'x' nat; returns the 0-based variable index.
    int parse_var(int& max_var)
    {
        skip_ws();
        if (eof())
            fail("expected a variable");
        const char c = peek();
        int index;
        if (c == 'y') {
            index = 1;
            ++pos_;
        } else if (c == 'z') {
            index = 2;
            ++pos_;
        } else if (c == 'x') {
            ++pos_;
            if (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
                const std::uint64_t n = parse_nat();
                if (n == 0)
                    fail("variable index must be >= 1");
                if (n > 64)
                    fail("variable index too large (max 64)");
                index = static_cast<int>(n) - 1;
            } else {
                index = 0;
            }
        } else {
            fail("expected a variable");
        }
        max_var = std::max(max_var, index + 1);
        return index;
    }

    std::pair<int, Exponent> parse_factor(int& max_var)
    {
        const int var = parse_var(max_var);
        Exponent exp = 1;
        skip_ws();
        if (!eof() && peek() == '^') {
            ++pos_;
            skip_ws();
            const std::uint64_t n = parse_nat();
            if (n > std::uint64_t(std::numeric_limits<Exponent>::max()))
                fail("exponent too large");
            exp = static_cast<Exponent>(n);
        }
        return {var, exp};
    }

    std::pair<std::vector<std::pair<int, Exponent>>, std::uint64_t> parse_term(int& max_var)
    {
        skip_ws();
        std::uint64_t coeff = 1;
        std::vector<std::pair<int, Exponent>> factors;
        if (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = parse_nat();
        } else {
            factors.push_back(parse_factor(max_var));
        }
        while (true) {
            skip_ws();
            if (eof() || peek() != '*')
                break;
            ++pos_;
            factors.push_back(parse_factor(max_var));
        }
        return {std::move(factors), coeff};
    }
};

} // namespace

Polynomial parse_polynomial(std::string_view text, Prime p, int min_nvars)
{
    return PolyParser(text, p).run(min_nvars);
}

Exponent frobenius_degree(Prime p, int e)
{
    if (e < 1)
        throw std::domain_error("Frobenius level must be >= 1");
    const Exponent limit = Exponent(1) << 62;
    Exponent out = 1;
    for (int i = 0; i < e; ++i) {
        if (out > limit / static_cast<Exponent>(p.value()))
            throw std::domain_error("p^e exceeds 2^62");
        out *= static_cast<Exponent>(p.value());
    }
    return out;
}

bool in_frobenius_power(const Polynomial& g, int e)
{
    const Exponent bound = frobenius_degree(g.p(), e);
    for (const Term& t : g.terms()) {
        bool has_big = false;
        for (Exponent x : t.mono)
            if (x >= bound) {
                has_big = true;
                break;
            }
        if (!has_big)
            return false;
    }
    return true;
}

Polynomial reduce_frobenius(const Polynomial& g, int e)
{
    const Exponent bound = frobenius_degree(g.p(), e);
    std::vector<Term> kept;
    for (const Term& t : g.terms()) {
        bool survives = true;
        for (Exponent x : t.mono)
            if (x >= bound) {
                survives = false;
                break;
            }
        if (survives)
            kept.push_back(t);
    }
    return Polynomial::from_terms(g.p(), g.nvars(), std::move(kept));
}

} // namespace fptlab
