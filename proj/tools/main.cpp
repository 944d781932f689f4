#include <cstdint>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "fixspace/moments.hpp"
#include "fixspace/rsdist.hpp"
#include "fixspace/sampler.hpp"
#include "fixspace/suites.hpp"

using namespace fixspace;
using Json = nlohmann::ordered_json;

namespace {

enum class Format { Json, Csv, Human };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string family;
    std::string sign;
    int n = -1;
    std::int64_t q = 0;
    long k = 0;
    long j = 1;
    int n_max = -1;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    bool seed_given = false;
    std::size_t degree = 0;
    std::string tolerance = "1/1000000";
    std::string suite;
    std::string format = "human";
    unsigned workers = 1;
    bool uniformity = false;
    bool list = false;
};

unsigned default_workers() {
    if (const char* env = std::getenv("FIXSPACE_WORKERS")) {
        try {
            const long w = std::stol(env);
            if (w >= 1) return static_cast<unsigned>(w);
        } catch (const std::exception&) {
        }
        std::cerr << "warning: ignoring FIXSPACE_WORKERS=" << env << '\n';
    }
    return 1;
}

Json rational_json(const Rational& r) { return Json{{"num", r.num().get_str()}, {"den", r.den().get_str()}}; }

Json interval_json(const IntervalReal& i) {
    return Json{{"lower", rational_json(i.lower())}, {"upper", rational_json(i.upper())}};
}

Format parse_format(const std::string& s) {
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    return Format::Human;
}

Family family_of(const Options& o) {
    if (o.family.empty()) throw UsageError("--family is required");
    std::string name = o.family;
    if (name == "o-even" || name == "o") {
        if (o.sign.empty()) throw UsageError("--family " + name + " needs --sign + or -");
        name = o.sign == "+" ? "o+" : "o-";
    }
    Family f;
    try {
        f = parse_family(name);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (!o.sign.empty()) {
        const bool plus = o.sign == "+";
        if ((f == Family::OEvenPlus && !plus) || (f == Family::OEvenMinus && plus) ||
            (f != Family::OEvenPlus && f != Family::OEvenMinus))
            throw UsageError("--sign " + o.sign + " does not fit family " + o.family);
    }
    return f;
}

Json sign_json(Family f) {
    if (f == Family::OEvenPlus) return "+";
    if (f == Family::OEvenMinus) return "-";
    return nullptr;
}

GroupSpec spec_of(const Options& o) {
    if (o.n < 0) throw UsageError("--n is required");
    if (o.q == 0) throw UsageError("--q is required");
    const GroupSpec spec{family_of(o), o.n, o.q};
    try {
        validate(spec);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    return spec;
}

void require_q(const Options& o, Family f) {
    if (o.q == 0) throw UsageError("--q is required");
    try {
        validate({f, min_rank(f), o.q});
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

Json spec_header(const GroupSpec& s) {
    return Json{{"family", family_name(s.family)}, {"n", s.n}, {"q", s.q}, {"sign", sign_json(s.family)}};
}

std::string decimal(const Rational& r) {
    std::ostringstream os;
    os << std::setprecision(10) << r.to_double();
    return os.str();
}

// Every command renders into a string first so that a failure never leaves partial output.
using Rendered = std::pair<std::string, int>;

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Rendered cmd_dist(const Options& o, Format fmt) {
    const GroupSpec spec = spec_of(o);
    const FixDist d = distribution(spec);
    std::ostringstream os;
    if (fmt == Format::Json) {
        Json j = spec_header(spec);
        Json probs = Json::array();
        for (std::size_t k = 0; k < d.probs.size(); ++k) {
            Json row{{"k", k}};
            row.update(rational_json(d.probs[k]));
            probs.push_back(row);
        }
        j["probs"] = probs;
        return {dump(j), 0};
    }
    if (fmt == Format::Csv) {
        os << "k,num,den\n";
        for (std::size_t k = 0; k < d.probs.size(); ++k) os << k << ',' << d.probs[k].num() << ',' << d.probs[k].den() << '\n';
        return {os.str(), 0};
    }
    os << describe(spec) << ", order " << group_order(spec) << "\n";
    for (std::size_t k = 0; k < d.probs.size(); ++k)
        os << "  k=" << k << "  " << d.probs[k] << "  ~ " << decimal(d.probs[k]) << '\n';
    return {os.str(), 0};
}

Rendered cmd_limit(const Options& o, Format fmt) {
    const Family f = family_of(o);
    require_q(o, f);
    if (o.k < 0) throw UsageError("--k must be >= 0");
    Rational tol;
    try {
        tol = Rational::parse(o.tolerance);
    } catch (const std::exception&) {
        throw UsageError("--tolerance must be a rational like 1/1000000");
    }
    if (tol.sign() <= 0) throw UsageError("--tolerance must be positive");
    const IntervalReal I = limit_dist(f, o.q, o.k, tol);
    if (fmt == Format::Json) {
        Json j{{"family", family_name(f)}, {"q", o.q}, {"k", o.k}, {"tolerance", rational_json(tol)},
               {"interval", interval_json(I)}};
        return {dump(j), 0};
    }
    std::ostringstream os;
    if (fmt == Format::Csv) {
        os << "k,lower_num,lower_den,upper_num,upper_den\n"
           << o.k << ',' << I.lower().num() << ',' << I.lower().den() << ',' << I.upper().num() << ','
           << I.upper().den() << '\n';
        return {os.str(), 0};
    }
    os << "limit P(dim = " << o.k << ") for " << family_name(f) << ", q=" << o.q << " in [" << decimal(I.lower())
       << ", " << decimal(I.upper()) << "], width <= " << tol << '\n';
    return {os.str(), 0};
}

Rendered cmd_moment(const Options& o, Format fmt) {
    const GroupSpec spec = spec_of(o);
    if (o.j < 0) throw UsageError("--j must be >= 0");
    const MomentReport r = moment_report(spec, o.j);
    const int threshold = stabilization_threshold(spec.family, o.j);
    if (fmt == Format::Json) {
        Json j = spec_header(spec);
        j["j"] = o.j;
        j["value"] = rational_json(r.value);
        j["limit"] = rational_json(r.limit);
        j["stabilized"] = r.stabilized;
        j["threshold"] = threshold;
        return {dump(j), 0};
    }
    std::ostringstream os;
    if (fmt == Format::Csv) {
        os << "j,num,den,limit_num,limit_den,stabilized\n"
           << o.j << ',' << r.value.num() << ',' << r.value.den() << ',' << r.limit.num() << ',' << r.limit.den()
           << ',' << (r.stabilized ? "true" : "false") << '\n';
        return {os.str(), 0};
    }
    os << r.value << '\n';
    return {os.str(), 0};
}

Rendered cmd_stabilize(const Options& o, Format fmt) {
    const Family f = family_of(o);
    require_q(o, f);
    if (o.j < 0) throw UsageError("--j must be >= 0");
    if (o.n_max < 0) throw UsageError("--n-max is required");
    const int threshold = stabilization_threshold(f, o.j);
    if (o.n_max < threshold)
        throw UsageError("--n-max must be at least the threshold " + std::to_string(threshold));
    const ScanReport scan = stabilization_scan(f, o.q, o.j, o.n_max);
    if (fmt == Format::Json) {
        Json rows = Json::array();
        for (const auto& r : scan.rows)
            rows.push_back(Json{{"n", r.spec.n}, {"moment", rational_json(r.value)}, {"equals_limit", r.stabilized}});
        Json j{{"family", family_name(f)}, {"q", o.q}, {"j", o.j}, {"rows", rows}, {"limit", rational_json(scan.limit)},
               {"threshold", scan.threshold}};
        j["minimal_stable_n"] = scan.minimal_stable_n ? Json(*scan.minimal_stable_n) : Json(nullptr);
        return {dump(j), 0};
    }
    std::ostringstream os;
    if (fmt == Format::Csv) {
        os << "n,num,den,equals_limit\n";
        for (const auto& r : scan.rows)
            os << r.spec.n << ',' << r.value.num() << ',' << r.value.den() << ',' << (r.stabilized ? "true" : "false") << '\n';
        return {os.str(), 0};
    }
    os << family_name(f) << ", q=" << o.q << ", j=" << o.j << ": limit " << scan.limit << ", threshold n >= "
       << scan.threshold << '\n';
    for (const auto& r : scan.rows) os << "  n=" << r.spec.n << "  " << r.value << (r.stabilized ? "  =" : "  !=") << '\n';
    if (scan.minimal_stable_n) os << "stable from n=" << *scan.minimal_stable_n << '\n';
    return {os.str(), 0};
}

Rendered cmd_verify(const Options& o, Format fmt) {
    if (o.suite.empty()) throw UsageError("--suite is required");
    const std::uint64_t seed = o.seed_given ? o.seed : 1;
    SuiteResult result;
    if (o.suite == "identities") result = run_identity_suite(seed);
    else if (o.suite == "series") result = run_series_suite(o.degree ? o.degree : 12);
    else if (o.suite == "orthopoly") result = run_orthopoly_suite();
    else if (o.suite == "randomized-n") result = run_randomized_suite(o.degree ? o.degree : 10);
    else if (o.suite == "oracle") result = run_oracle_suite();
    else throw UsageError("unknown suite '" + o.suite + "'");
    const int code = result.passed() ? 0 : 1;
    if (fmt == Format::Json) {
        Json checks = Json::array();
        for (const auto& c : result.checks)
            checks.push_back(Json{{"label", c.label}, {"instances", c.instances}, {"passed", c.passed}, {"detail", c.detail}});
        return {dump(Json{{"suite", result.name}, {"seed", seed}, {"passed", result.passed()}, {"checks", checks}}), code};
    }
    std::ostringstream os;
    if (fmt == Format::Csv) {
        os << "label,instances,passed\n";
        for (const auto& c : result.checks) os << '"' << c.label << "\"," << c.instances << ',' << (c.passed ? "true" : "false") << '\n';
        return {os.str(), code};
    }
    for (const auto& c : result.checks) {
        os << (c.passed ? "PASS " : "FAIL ") << c.label << " (" << c.instances << ")";
        if (!c.passed) os << ": " << c.detail;
        os << '\n';
    }
    os << result.name << ": " << (result.passed() ? "all passed" : "FAILED") << '\n';
    return {os.str(), code};
}

Rendered cmd_sample(const Options& o, Format fmt) {
    const GroupSpec spec = spec_of(o);
    if (o.trials == 0) throw UsageError("--trials must be >= 1");
    if (!o.seed_given) throw UsageError("--seed is required");
    if (o.workers == 0) throw UsageError("--workers must be >= 1");
    try {
        (void)GroupModel(spec);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (o.uniformity) {
        if (!is_enumerable(spec)) throw UsageError("--uniformity needs a group of order <= 20000");
        const UniformityReport r = sampler_uniformity(spec, o.trials, o.seed, o.workers);
        const int code = r.passed ? 0 : 1;
        if (fmt == Format::Json) {
            Json j = spec_header(spec);
            j["order"] = r.order;
            j["trials"] = r.trials;
            j["seed"] = r.seed;
            j["workers"] = o.workers;
            j["counts"] = r.counts;
            j["chi_square"] = r.chi_square;
            j["degrees_of_freedom"] = r.degrees_of_freedom;
            j["chi_square_limit"] = r.chi_square_limit;
            j["max_abs_z"] = r.max_abs_z;
            j["passed"] = r.passed;
            return {dump(j), code};
        }
        std::ostringstream os;
        if (fmt == Format::Csv) {
            os << "element,count\n";
            for (std::size_t i = 0; i < r.counts.size(); ++i) os << i << ',' << r.counts[i] << '\n';
            return {os.str(), code};
        }
        os << describe(spec) << ": " << r.trials << " samples over " << r.order << " elements, chi2 " << r.chi_square
           << " (dof " << r.degrees_of_freedom << ", limit " << r.chi_square_limit << "), max |z| " << r.max_abs_z
           << (r.passed ? ", uniform" : ", NOT uniform") << '\n';
        return {os.str(), code};
    }
    const SampleReport r = empirical_fixdist(spec, o.trials, o.seed, o.workers);
    if (fmt == Format::Json) {
        Json j = spec_header(spec);
        j["trials"] = r.trials;
        j["seed"] = r.seed;
        j["workers"] = r.workers;
        Json counts = Json::array();
        for (std::size_t k = 0; k < r.counts.size(); ++k)
            counts.push_back(Json{{"k", k}, {"count", r.counts[k]}, {"exact", rational_json(r.exact[k])}});
        j["counts"] = counts;
        j["max_abs_dev"] = r.max_abs_dev;
        j["chi_square"] = r.chi_square;
        j["degrees_of_freedom"] = r.degrees_of_freedom;
        j["within_tolerance"] = r.within_tolerance;
        return {dump(j), 0};
    }
    std::ostringstream os;
    if (fmt == Format::Csv) {
        os << "k,count,exact_num,exact_den\n";
        for (std::size_t k = 0; k < r.counts.size(); ++k)
            os << k << ',' << r.counts[k] << ',' << r.exact[k].num() << ',' << r.exact[k].den() << '\n';
        return {os.str(), 0};
    }
    os << describe(spec) << ", " << r.trials << " samples, seed " << r.seed << ", " << r.workers << " worker(s)\n";
    for (std::size_t k = 0; k < r.counts.size(); ++k)
        os << "  k=" << k << "  " << r.counts[k] << "  freq " << static_cast<double>(r.counts[k]) / static_cast<double>(r.trials)
           << "  exact " << decimal(r.exact[k]) << '\n';
    os << "max |dev| " << r.max_abs_dev << ", chi2 " << r.chi_square << " (dof " << r.degrees_of_freedom << ")"
       << (r.within_tolerance ? ", within 5 sigma" : ", OUTSIDE 5 sigma") << '\n';
    return {os.str(), 0};
}

Rendered cmd_enumerate(const Options& o, Format fmt) {
    const GroupSpec spec = spec_of(o);
    std::vector<FqMatrix> elements;
    try {
        elements = enumerate_group(spec);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    } catch (const EnumerationLimitError& e) {
        throw UsageError(e.what());
    }
    std::vector<std::uint64_t> hist(static_cast<std::size_t>(module_dimension(spec)) + 1, 0);
    for (const auto& g : elements) ++hist[fixed_space_dim(g)];
    if (fmt == Format::Json) {
        Json j = spec_header(spec);
        j["order"] = elements.size();
        Json h = Json::array();
        for (std::size_t k = 0; k < hist.size(); ++k) h.push_back(Json{{"k", k}, {"count", hist[k]}});
        j["histogram"] = h;
        if (o.list) {
            Json list = Json::array();
            for (const auto& g : elements) {
                Json rows = Json::array();
                for (std::size_t r = 0; r < g.rows(); ++r) {
                    Json row = Json::array();
                    for (std::size_t c = 0; c < g.cols(); ++c) row.push_back(g.F().format(g(r, c)));
                    rows.push_back(row);
                }
                list.push_back(rows);
            }
            j["elements"] = list;
        }
        return {dump(j), 0};
    }
    std::ostringstream os;
    if (fmt == Format::Csv) {
        os << "k,count\n";
        for (std::size_t k = 0; k < hist.size(); ++k) os << k << ',' << hist[k] << '\n';
        return {os.str(), 0};
    }
    os << describe(spec) << ": " << elements.size() << " elements\n";
    for (std::size_t k = 0; k < hist.size(); ++k) os << "  k=" << k << "  " << hist[k] << '\n';
    if (o.list)
        for (const auto& g : elements) os << g.str() << '\n';
    return {os.str(), 0};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fixed-space statistics of finite classical groups"};
    app.require_subcommand(1);
    Options o;
    o.workers = default_workers();

    const auto add_group = [&](CLI::App* sub, bool with_n) {
        sub->add_option("--family", o.family, "gl, u, sp, o-odd, o+, o- (or o-even with --sign)");
        sub->add_option("--sign", o.sign, "+ or - for even orthogonal groups")->check(CLI::IsMember({"+", "-"}));
        if (with_n) sub->add_option("--n", o.n, "rank")->check(CLI::NonNegativeNumber);
        sub->add_option("--q", o.q, "field order (prime power)");
    };
    const auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "json, csv or human")->check(CLI::IsMember({"json", "csv", "human"}));
    };

    auto* dist = app.add_subcommand("dist", "exact fixed-space distribution");
    add_group(dist, true);
    add_format(dist);

    auto* limit = app.add_subcommand("limit", "interval for the n -> infinity probability");
    add_group(limit, false);
    limit->add_option("--k", o.k, "fixed-space dimension");
    limit->add_option("--tolerance", o.tolerance, "interval width bound, as a rational");
    add_format(limit);

    auto* mom = app.add_subcommand("moment", "E[(number of fixed vectors)^j]");
    add_group(mom, true);
    mom->add_option("--j", o.j, "moment order");
    add_format(mom);

    auto* stab = app.add_subcommand("stabilize", "scan moments against their limit");
    add_group(stab, false);
    stab->add_option("--j", o.j, "moment order");
    stab->add_option("--n-max", o.n_max, "largest rank scanned");
    add_format(stab);

    auto* verify = app.add_subcommand("verify", "run an exact property suite");
    verify->add_option("--suite", o.suite, "identities, series, orthopoly, randomized-n, oracle")
        ->check(CLI::IsMember({"identities", "series", "orthopoly", "randomized-n", "oracle"}));
    verify->add_option("--seed", o.seed, "seed for random instances");
    verify->add_option("--degree", o.degree, "series truncation degree");
    add_format(verify);

    auto* sample = app.add_subcommand("sample", "Monte Carlo fixed-space histogram");
    add_group(sample, true);
    sample->add_option("--trials", o.trials, "number of samples");
    sample->add_option("--seed", o.seed, "generator seed");
    sample->add_option("--workers", o.workers, "worker threads (default $FIXSPACE_WORKERS or 1)");
    sample->add_flag("--uniformity", o.uniformity, "chi-square of element counts against the enumerated group");
    add_format(sample);

    auto* enumerate = app.add_subcommand("enumerate", "list a small group and its fixed-space histogram");
    add_group(enumerate, true);
    enumerate->add_flag("--list", o.list, "include every element");
    add_format(enumerate);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    o.seed_given = verify->count("--seed") > 0 || sample->count("--seed") > 0;
    const Format fmt = parse_format(o.format);

    try {
        Rendered out;
        if (*dist) out = cmd_dist(o, fmt);
        else if (*limit) out = cmd_limit(o, fmt);
        else if (*mom) out = cmd_moment(o, fmt);
        else if (*stab) out = cmd_stabilize(o, fmt);
        else if (*verify) out = cmd_verify(o, fmt);
        else if (*sample) out = cmd_sample(o, fmt);
        else out = cmd_enumerate(o, fmt);
        std::cout << out.first;
        return out.second;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
