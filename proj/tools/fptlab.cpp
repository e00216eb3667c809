// fptlab: F-pure thresholds of hypersurfaces over F_p, exactly.
//
// Subcommands: nu, fpt, classify, intervals, render, certify.
// Exit codes: 0 success, 2 input error, 3 undecided outcome under --strict.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fptlab/basep.hpp"
#include "fptlab/cache.hpp"
#include "fptlab/errors.hpp"
#include "fptlab/fedder.hpp"
#include "fptlab/fpt.hpp"
#include "fptlab/fptset.hpp"
#include "fptlab/poly.hpp"
#include "fptlab/purity.hpp"
#include "fptlab/rational.hpp"

namespace {

using nlohmann::ordered_json;
using namespace fptlab;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitUndecided = 3;

struct Options {
    std::uint64_t prime = 0;
    std::string poly;
    int depth = 8;
    std::string lambda;
    std::vector<int> levels;
    std::string format = "text";
    std::string cache_path;
    bool no_cache = false;
    bool strict = false;
    bool trace = false;
    bool allow_any_lambda = false;
    bool at_threshold = false;
    int d_max = 20;
};

ordered_json rational_json(const Rational& q)
{
    return ordered_json{{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

ordered_json interval_json(const Interval& iv)
{
    return ordered_json{{"lo", rational_json(iv.lo)}, {"hi", rational_json(iv.hi)}};
}

const char* outcome_name(PurityOutcome o)
{
    switch (o) {
    case PurityOutcome::Holds:
        return "holds";
    case PurityOutcome::Fails:
        return "fails";
    default:
        return "undecided";
    }
}

const char* status_name(CandidateStatus s)
{
    switch (s) {
    case CandidateStatus::ExactCertified:
        return "exact-certified";
    case CandidateStatus::ConsistentAtDepth:
        return "consistent-at-depth";
    default:
        return "lower-bound-only";
    }
}

ordered_json verdict_json(const PurityVerdict& v)
{
    ordered_json j;
    j["outcome"] = outcome_name(v.outcome);
    if (v.witness)
        j["witness"] = *v.witness;
    else
        j["witness"] = nullptr;
    j["certificate"] = v.certificate;
    j["depth_used"] = v.depth_used;
    return j;
}

std::string verdict_text(const char* name, const PurityVerdict& v)
{
    std::string line = std::string(name) + ": " + outcome_name(v.outcome);
    if (v.witness)
        line += " (witness e=" + std::to_string(*v.witness) + ")";
    if (!v.certificate.empty())
        line += "  [" + v.certificate + "]";
    return line;
}

// Cache path precedence: --no-cache > --cache PATH > FPTLAB_CACHE > default.
std::optional<std::filesystem::path> resolve_cache_path(const Options& opt)
{
    if (opt.no_cache)
        return std::nullopt;
    if (!opt.cache_path.empty())
        return std::filesystem::path(opt.cache_path);
    if (const char* env = std::getenv("FPTLAB_CACHE"); env != nullptr && *env != '\0')
        return std::filesystem::path(env);
    if (const char* home = std::getenv("HOME"); home != nullptr && *home != '\0')
        return std::filesystem::path(home) / ".cache" / "fptlab" / "nu-cache.jsonl";
    return std::nullopt;
}

// Fills a NuTable through the cache; the underlying nu_sequence runs at most
// once per invocation, and only when some level is missing.
NuTable cached_nu_table(const Polynomial& f, int depth, const Options& opt)
{
    const auto path = resolve_cache_path(opt);
    if (!path)
        return nu_sequence(f, depth);

    NuCache cache(*path, opt.trace);
    std::optional<NuTable> computed;
    NuTable table{f.p(), depth, {}, {}, f};
    for (int e = 1; e <= depth; ++e) {
        const std::int64_t value = cache.lookup_or_compute(f, e, [&] {
            if (!computed)
                computed = nu_sequence(f, depth);
            return computed->nu[static_cast<std::size_t>(e - 1)];
        });
        const std::int64_t prev = table.nu.empty() ? 0 : table.nu.back();
        const std::int64_t digit = value - static_cast<std::int64_t>(f.p().value()) * prev;
        if (digit < 0 || digit > static_cast<std::int64_t>(f.p().value()) - 1) {
            // Cached values violating the digit range mean a corrupt or
            // tampered cache; recompute from scratch instead of trusting it.
            std::cerr << "fptlab: warning: cache for " << f.str() << " is inconsistent at e=" << e
                      << "; recomputing without it\n";
            return nu_sequence(f, depth);
        }
        table.nu.push_back(value);
        table.digits.push_back(digit);
    }
    return table;
}

Polynomial parse_poly_arg(const Options& opt, Prime p)
{
    if (opt.poly.empty())
        throw std::invalid_argument("--poly is required");
    return parse_polynomial(opt.poly, p);
}

Rational parse_lambda_arg(const Options& opt)
{
    if (opt.lambda.empty())
        throw std::invalid_argument("--lambda is required (as \"num/den\")");
    const Rational lambda = parse_rational(opt.lambda);
    if (lambda < 0)
        throw std::invalid_argument("lambda must be >= 0");
    if (lambda > 1 && !opt.allow_any_lambda)
        throw std::invalid_argument("lambda > 1 (pass --allow-any-lambda to classify anyway)");
    return lambda;
}

int run_nu(const Options& opt)
{
    const Prime p(opt.prime);
    const Polynomial f = parse_poly_arg(opt, p);
    const NuTable table = cached_nu_table(f, opt.depth, opt);

    if (opt.format == "json") {
        ordered_json j;
        j["command"] = "nu";
        j["p"] = p.value();
        j["poly"] = f.str();
        j["depth"] = opt.depth;
        j["nu"] = table.nu;
        j["digits"] = table.digits;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "nu table for f = " << f.str() << " over F_" << p.value() << "\n";
        for (int e = 1; e <= opt.depth; ++e)
            std::cout << "  e=" << e << "  nu(p^e)=" << table.nu[static_cast<std::size_t>(e - 1)]
                      << "  digit=" << table.digits[static_cast<std::size_t>(e - 1)] << "\n";
    }
    return kExitOk;
}

int run_fpt(const Options& opt)
{
    const Prime p(opt.prime);
    const Polynomial f = parse_poly_arg(opt, p);
    FptApproximation approx = approximate_from_table(cached_nu_table(f, opt.depth, opt));
    const RationalCandidate cand = rational_candidate(approx, opt.d_max);

    if (opt.format == "json") {
        ordered_json j;
        j["command"] = "fpt";
        j["p"] = p.value();
        j["poly"] = f.str();
        j["depth"] = opt.depth;
        j["nu"] = approx.table.nu;
        j["digits"] = approx.table.digits;
        ordered_json truncs = ordered_json::array();
        for (const Rational& t : approx.truncations)
            truncs.push_back(rational_json(t));
        j["truncations"] = truncs;
        j["lower"] = rational_json(approx.lower);
        j["upper"] = rational_json(approx.upper);
        j["certified_lower"] = rational_json(approx.certified_lower);
        if (approx.guess) {
            j["guess"] = rational_json(*approx.guess);
            j["guess_status"] = approx.guess_status == GuessStatus::CertifiedLowerBound
                                    ? "certified-lower-bound"
                                    : "uncertified-guess";
        } else {
            j["guess"] = nullptr;
            j["guess_status"] = nullptr;
        }
        j["candidate"] = rational_json(cand.candidate);
        j["candidate_status"] = status_name(cand.status);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "fpt approximation for f = " << f.str() << " over F_" << p.value() << " (depth " << opt.depth
                  << ")\n";
        for (std::size_t i = 0; i < approx.truncations.size(); ++i)
            std::cout << "  <fpt>_" << (i + 1) << " = " << to_string(approx.truncations[i]) << "\n";
        std::cout << "  bounds: " << to_string(approx.lower) << " < fpt <= " << to_string(approx.upper) << "\n";
        std::cout << "  certified lower bound: " << to_string(approx.certified_lower) << "\n";
        if (approx.guess)
            std::cout << "  periodic guess: " << to_string(*approx.guess)
                      << (approx.guess_status == GuessStatus::CertifiedLowerBound ? " (certified-lower-bound)"
                                                                                  : " (uncertified-guess)")
                      << "\n";
        std::cout << "  candidate: " << to_string(cand.candidate) << " [" << status_name(cand.status) << "]\n";
    }
    return kExitOk;
}

int run_classify(const Options& opt)
{
    const Prime p(opt.prime);
    const Rational lambda = parse_lambda_arg(opt);

    PurityClassification cls{
        PurityVerdict{PurityFlavor::FPure, PurityOutcome::Undecided, std::nullopt, "", 0},
        PurityVerdict{PurityFlavor::Strong, PurityOutcome::Undecided, std::nullopt, "", 0},
        PurityVerdict{PurityFlavor::Sharp, PurityOutcome::Undecided, std::nullopt, "", 0},
    };
    std::string poly_text;
    if (opt.at_threshold) {
        if (lambda > 1)
            throw std::invalid_argument("--at-threshold requires the exact fpt in [0,1]");
        cls = classify_at_threshold(lambda, p, opt.d_max);
    } else {
        const Polynomial f = parse_poly_arg(opt, p);
        poly_text = f.str();
        cls = classify_table(cached_nu_table(f, opt.depth, opt), lambda);
    }

    if (opt.format == "json") {
        ordered_json j;
        j["command"] = "classify";
        j["p"] = p.value();
        if (opt.at_threshold)
            j["mode"] = "at-threshold";
        else
            j["poly"] = poly_text;
        j["lambda"] = rational_json(lambda);
        if (!opt.at_threshold)
            j["depth"] = opt.depth;
        j["verdicts"] = ordered_json{{"f-pure", verdict_json(cls.f_pure)},
                                     {"strong", verdict_json(cls.strong)},
                                     {"sharp", verdict_json(cls.sharp)}};
        std::cout << j.dump(2) << "\n";
    } else {
        if (opt.at_threshold)
            std::cout << "purity of (R, f^fpt) with fpt = " << to_string(lambda) << " over F_" << p.value() << "\n";
        else
            std::cout << "purity of (R, f^lambda), f = " << poly_text << ", lambda = " << to_string(lambda)
                      << " over F_" << p.value() << "\n";
        std::cout << "  " << verdict_text("f-pure", cls.f_pure) << "\n";
        std::cout << "  " << verdict_text("strong", cls.strong) << "\n";
        std::cout << "  " << verdict_text("sharp", cls.sharp) << "\n";
    }

    const bool any_undecided = cls.f_pure.outcome == PurityOutcome::Undecided ||
                               cls.strong.outcome == PurityOutcome::Undecided ||
                               cls.sharp.outcome == PurityOutcome::Undecided;
    return (opt.strict && any_undecided) ? kExitUndecided : kExitOk;
}

int run_intervals(const Options& opt)
{
    const Prime p(opt.prime);
    const int level = opt.levels.empty() ? 1 : opt.levels.front();
    const ForbiddenIntervalSet set = forbidden_intervals(p, level);
    const Rational total = measure(p, level);

    if (opt.format == "json") {
        ordered_json j;
        j["command"] = "intervals";
        j["p"] = p.value();
        j["level"] = level;
        j["count"] = set.intervals.size();
        j["measure"] = rational_json(total);
        ordered_json arr = ordered_json::array();
        for (const Interval& iv : set.intervals)
            arr.push_back(interval_json(iv));
        j["intervals"] = arr;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "forbidden intervals for FPT_" << p.value() << ", level e=" << level << " ("
                  << set.intervals.size() << " intervals, total length " << to_string(total) << ")\n";
        for (const Interval& iv : set.intervals)
            std::cout << "  (" << to_string(iv.lo) << ", " << to_string(iv.hi) << ")\n";
    }
    return kExitOk;
}

int run_render(const Options& opt)
{
    const Prime p(opt.prime);
    const std::vector<int> levels = opt.levels.empty() ? std::vector<int>{1, 2, 3} : opt.levels;
    const RenderFormat fmt = opt.format == "svg" ? RenderFormat::Svg : RenderFormat::Ascii;
    std::cout << render(p, levels, fmt);
    return kExitOk;
}

int run_certify(const Options& opt)
{
    const Prime p(opt.prime);
    const Polynomial f = parse_poly_arg(opt, p);
    FptApproximation approx = approximate_from_table(cached_nu_table(f, opt.depth, opt));
    const RationalCandidate cand = rational_candidate(approx, opt.d_max);
    const AdmissibilityReport adm = admissible(cand.candidate, p, opt.depth);

    if (opt.format == "json") {
        ordered_json j;
        j["command"] = "certify";
        j["p"] = p.value();
        j["poly"] = f.str();
        j["depth"] = opt.depth;
        j["candidate"] = rational_json(cand.candidate);
        j["status"] = status_name(cand.status);
        j["certified_lower"] = rational_json(approx.certified_lower);
        j["upper"] = rational_json(approx.upper);
        j["admissible_up_to_depth"] = adm.admissible;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "rational candidate for fpt(" << f.str() << ") over F_" << p.value() << " at depth "
                  << opt.depth << "\n";
        std::cout << "  candidate: " << to_string(cand.candidate) << "\n";
        std::cout << "  status: " << status_name(cand.status) << "\n";
        std::cout << "  certified lower bound: " << to_string(approx.certified_lower) << ", upper bound: "
                  << to_string(approx.upper) << "\n";
        std::cout << "  admissible through level " << opt.depth << ": " << (adm.admissible ? "yes" : "no") << "\n";
    }
    return (opt.strict && cand.status != CandidateStatus::ExactCertified) ? kExitUndecided : kExitOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact F-pure thresholds of hypersurfaces over F_p"};
    app.set_version_flag("--version", std::string("fptlab ") + kToolVersion);
    app.require_subcommand(1);

    Options opt;

    const auto add_common = [&](CLI::App* cmd, bool needs_poly) {
        cmd->add_option("--prime", opt.prime, "characteristic p (prime)")->required();
        cmd->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"text", "json", "svg", "ascii"}));
        if (needs_poly) {
            cmd->add_option("--poly", opt.poly, "polynomial over F_p, e.g. \"x^2+y^3\"");
            cmd->add_option("--depth", opt.depth, "number of levels e to compute")->check(CLI::PositiveNumber);
            cmd->add_option("--cache", opt.cache_path, "nu cache file (JSON lines)");
            cmd->add_flag("--no-cache", opt.no_cache, "disable the nu cache");
            cmd->add_flag("--trace", opt.trace, "log cache hits/misses to stderr");
        }
    };

    CLI::App* nu_cmd = app.add_subcommand("nu", "print the nu table of f");
    add_common(nu_cmd, true);

    CLI::App* fpt_cmd = app.add_subcommand("fpt", "bracket fpt(f) and propose a rational candidate");
    add_common(fpt_cmd, true);
    fpt_cmd->add_option("--d-max", opt.d_max, "periodicity search bound")->check(CLI::PositiveNumber);

    CLI::App* classify_cmd = app.add_subcommand("classify", "purity verdicts for the pair (R, f^lambda)");
    add_common(classify_cmd, true);
    classify_cmd->add_option("--lambda", opt.lambda, "parameter as \"num/den\"")->required();
    classify_cmd->add_flag("--at-threshold", opt.at_threshold,
                           "treat --lambda as the exact fpt (no --poly needed)");
    classify_cmd->add_flag("--allow-any-lambda", opt.allow_any_lambda, "accept lambda > 1");
    classify_cmd->add_option("--d-max", opt.d_max, "periodicity search bound (at-threshold mode)")
        ->check(CLI::PositiveNumber);
    classify_cmd->add_flag("--strict", opt.strict, "exit 3 when any verdict is undecided");

    CLI::App* intervals_cmd = app.add_subcommand("intervals", "forbidden intervals of FPT_p at one level");
    add_common(intervals_cmd, false);
    intervals_cmd->add_option("--level", opt.levels, "level e");

    CLI::App* render_cmd = app.add_subcommand("render", "number-line figure of forbidden intervals");
    add_common(render_cmd, false);
    render_cmd->add_option("--level", opt.levels, "level e (repeatable)");

    CLI::App* certify_cmd = app.add_subcommand("certify", "rational candidate report for fpt(f)");
    add_common(certify_cmd, true);
    certify_cmd->add_option("--d-max", opt.d_max, "periodicity search bound")->check(CLI::PositiveNumber);
    certify_cmd->add_flag("--strict", opt.strict, "exit 3 unless the candidate is exact-certified");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitInput;
    }

    try {
        if (app.got_subcommand(nu_cmd))
            return run_nu(opt);
        if (app.got_subcommand(fpt_cmd))
            return run_fpt(opt);
        if (app.got_subcommand(classify_cmd))
            return run_classify(opt);
        if (app.got_subcommand(intervals_cmd))
            return run_intervals(opt);
        if (app.got_subcommand(render_cmd))
            return run_render(opt);
        if (app.got_subcommand(certify_cmd))
            return run_certify(opt);
    } catch (const ParseError& e) {
        std::cerr << "fptlab: error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "fptlab: error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::domain_error& e) {
        std::cerr << "fptlab: error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "fptlab: internal error: " << e.what() << "\n";
        return 1;
    }
    return kExitInput;
}
