#include "fptlab/fptset.hpp"

#include <algorithm>
#include <stdexcept>

#include "fptlab/basep.hpp"
#include "fptlab/errors.hpp"

namespace fptlab {

namespace {

constexpr long kMaxIntervals = 1L << 21;

Int level_degree(Prime p, int level, const char* where)
{
    if (level < 1)
        throw std::domain_error(std::string(where) + ": level must be >= 1");
    return pow_int(Int(p.value()), static_cast<unsigned long>(level));
}

void check_enumerable(const Int& pe, const char* where)
{
    if (pe - 1 > kMaxIntervals)
        throw std::domain_error(std::string(where) + ": level has more than 2^21 intervals; refusing to enumerate");
}

Interval interval_at(const Int& pe, long k)
{
    return Interval{make_rational(Int(k), pe), make_rational(Int(k), pe - 1)};
}

} // namespace

ForbiddenIntervalSet forbidden_intervals(Prime p, int level)
{
    const Int pe = level_degree(p, level, "forbidden_intervals");
    check_enumerable(pe, "forbidden_intervals");
    const long count = static_cast<long>(pe.get_si()) - 1;
    ForbiddenIntervalSet out{p, level, {}};
    out.intervals.reserve(static_cast<std::size_t>(count));
    for (long k = 1; k <= count; ++k)
        out.intervals.push_back(interval_at(pe, k));
    return out;
}

AdmissibilityReport admissible(const Rational& lambda, Prime p, int depth)
{
    if (lambda < 0 || lambda > 1)
        throw std::domain_error("admissible: lambda must lie in [0,1], got " + to_string(lambda));
    if (depth < 1)
        throw std::domain_error("admissible: depth must be >= 1");
    for (int e = 1; e <= depth; ++e) {
        const Rational beta = truncation(lambda, p, e);
        const Int pe = pow_int(Int(p.value()), static_cast<unsigned long>(e));
        const Rational rep = beta * make_rational(pe, pe - 1);
        if (lambda < rep) {
            // lambda sits strictly inside (beta, p^e/(p^e-1) beta)
            return AdmissibilityReport{false, e, Interval{beta, rep}};
        }
    }
    return AdmissibilityReport{true, std::nullopt, std::nullopt};
}

Rational measure(Prime p, int level)
{
    const Int pe = level_degree(p, level, "measure");
    check_enumerable(pe, "measure");
    const long count = static_cast<long>(pe.get_si()) - 1;
    Rational total(0);
    for (long k = 1; k <= count; ++k)
        total += interval_at(pe, k).length();
    return total;
}

namespace {

// round(scale * q) via integer arithmetic, half away from zero.
Int scaled_round(const Rational& q, long scale)
{
    const Rational s = q * Rational(scale);
    Int out;
    // floor(s + 1/2) = floor((2 num + den) / (2 den)) for den > 0
    Int twice_num = 2 * s.get_num() + s.get_den();
    mpz_fdiv_q(out.get_mpz_t(), twice_num.get_mpz_t(), Int(2 * s.get_den()).get_mpz_t());
    return out;
}

// Fixed-point decimal string of scale * q with up to 3 decimals, exact
// integers printed bare. Keeps the renderers free of floating point.
std::string coord(const Rational& q, long scale)
{
    const Rational s = q * Rational(scale);
    if (is_integer(s))
        return s.get_num().get_str();
    const Int milli = scaled_round(s, 1000);
    Int whole = milli / 1000;
    Int frac = milli % 1000;
    if (frac < 0) {
        frac += 1000;
        whole -= 1;
    }
    std::string fs = frac.get_str();
    fs.insert(fs.begin(), 3 - fs.size(), '0');
    while (!fs.empty() && fs.back() == '0')
        fs.pop_back();
    return whole.get_str() + "." + fs;
}

std::vector<std::pair<Rational, std::string>> tick_marks(Prime p, int max_level)
{
    std::vector<std::pair<Rational, std::string>> ticks;
    const Int pm = pow_int(Int(p.value()), static_cast<unsigned long>(max_level));
    if (pm > 64) {
        for (long k = 0; k <= 4; ++k) {
            const Rational t = make_rational(k, 4);
            ticks.emplace_back(t, to_string(t));
        }
        return ticks;
    }
    for (long k = 0; k <= pm.get_si(); ++k) {
        const Rational t = make_rational(Int(k), pm);
        ticks.emplace_back(t, to_string(t));
    }
    return ticks;
}

std::string render_ascii(Prime p, const std::vector<int>& levels)
{
    constexpr int kWidth = 80; // axis columns
    std::string out;
    const int max_level = *std::max_element(levels.begin(), levels.end());

    const auto column = [](const Rational& x) {
        return static_cast<int>(scaled_round(x, kWidth - 1).get_si());
    };

    for (int level : levels) {
        const ForbiddenIntervalSet set = forbidden_intervals(p, level);
        std::string row(kWidth, '.');
        for (const Interval& iv : set.intervals) {
            int lc = column(iv.lo);
            int rc = std::max(column(iv.hi), lc + 1);
            rc = std::min(rc, kWidth - 1);
            lc = std::min(lc, kWidth - 2);
            for (int c = lc + 1; c < rc; ++c)
                row[static_cast<std::size_t>(c)] = '=';
            row[static_cast<std::size_t>(lc)] = '(';
            row[static_cast<std::size_t>(rc)] = ')';
        }
        std::string label = "e=" + std::to_string(level);
        label.resize(5, ' ');
        out += label + row + "\n";
    }

    // axis with tick marks and as many labels as fit
    std::string axis(kWidth, '-');
    std::string labels(kWidth, ' ');
    for (const auto& [t, text] : tick_marks(p, max_level)) {
        const int c = column(t);
        axis[static_cast<std::size_t>(c)] = '+';
        const int end = c + static_cast<int>(text.size());
        if (end > kWidth)
            continue;
        bool free = true;
        for (int i = std::max(0, c - 1); i < std::min(kWidth, end + 1) && free; ++i)
            free = labels[static_cast<std::size_t>(i)] == ' ';
        if (!free)
            continue;
        labels.replace(static_cast<std::size_t>(c), text.size(), text);
    }
    out += std::string(5, ' ') + axis + "\n";
    out += std::string(5, ' ') + labels + "\n";
    return out;
}

std::string render_svg(Prime p, const std::vector<int>& levels)
{
    constexpr long kScale = 1000; // [0,1] -> [0,1000]
    const int max_level = *std::max_element(levels.begin(), levels.end());
    const int rows = static_cast<int>(levels.size());
    const int height = 40 * rows + 60;

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1100\" height=\"" + std::to_string(height) +
           "\" viewBox=\"-60 0 1120 " + std::to_string(height) + "\">\n";

    for (int i = 0; i < rows; ++i) {
        const int level = levels[static_cast<std::size_t>(i)];
        const int y = 40 * (i + 1);
        const std::string ys = std::to_string(y);
        svg += "  <g class=\"level\" data-level=\"" + std::to_string(level) + "\">\n";
        svg += "    <text x=\"-55\" y=\"" + std::to_string(y + 4) + "\" font-size=\"14\">e=" +
               std::to_string(level) + "</text>\n";
        svg += "    <line x1=\"0\" y1=\"" + ys + "\" x2=\"1000\" y2=\"" + ys +
               "\" stroke=\"black\" stroke-dasharray=\"2,4\"/>\n";
        const ForbiddenIntervalSet set = forbidden_intervals(p, level);
        for (const Interval& iv : set.intervals) {
            const std::string x1 = coord(iv.lo, kScale);
            const std::string x2 = coord(iv.hi, kScale);
            svg += "    <line x1=\"" + x1 + "\" y1=\"" + ys + "\" x2=\"" + x2 + "\" y2=\"" + ys +
                   "\" stroke=\"blue\" stroke-width=\"2\"/>\n";
            svg += "    <circle cx=\"" + x1 + "\" cy=\"" + ys + "\" r=\"4\" fill=\"white\" stroke=\"blue\"/>\n";
            svg += "    <circle cx=\"" + x2 + "\" cy=\"" + ys + "\" r=\"4\" fill=\"white\" stroke=\"blue\"/>\n";
        }
        svg += "  </g>\n";
    }

    const int axis_y = 40 * rows + 20;
    svg += "  <line x1=\"0\" y1=\"" + std::to_string(axis_y) + "\" x2=\"1000\" y2=\"" + std::to_string(axis_y) +
           "\" stroke=\"black\"/>\n";
    for (const auto& [t, text] : tick_marks(p, max_level)) {
        const std::string x = coord(t, kScale);
        svg += "  <line x1=\"" + x + "\" y1=\"" + std::to_string(axis_y - 4) + "\" x2=\"" + x + "\" y2=\"" +
               std::to_string(axis_y + 4) + "\" stroke=\"black\"/>\n";
        svg += "  <text x=\"" + x + "\" y=\"" + std::to_string(axis_y + 20) +
               "\" font-size=\"12\" text-anchor=\"middle\">" + text + "</text>\n";
    }
    svg += "</svg>\n";
    return svg;
}

} // namespace

std::string render(Prime p, const std::vector<int>& levels, RenderFormat format)
{
    if (levels.empty())
        throw std::domain_error("render: need at least one level");
    for (int level : levels)
        if (level < 1)
            throw std::domain_error("render: levels must be >= 1");
    return format == RenderFormat::Ascii ? render_ascii(p, levels) : render_svg(p, levels);
}

} // namespace fptlab
