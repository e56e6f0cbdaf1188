#include "ribbonroots/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "ribbonroots/descent.hpp"
#include "ribbonroots/errors.hpp"
#include "ribbonroots/excited.hpp"
#include "ribbonroots/io.hpp"
#include "ribbonroots/roots.hpp"
#include "ribbonroots/sqci.hpp"
#include "ribbonroots/verify.hpp"

namespace ribbonroots {

namespace {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GlobalOptions {
    bool json = false;
    std::uint64_t seed = kDefaultSeed;
    int jobs = 1;
    std::string budget;
    int syt_budget = kDefaultSytBudget;
    int perm_budget = kDefaultPermutationBudget;
};

// "syt=20,perm=10"; either key may be omitted.
void apply_budget(GlobalOptions& g) {
    if (g.budget.empty()) return;
    std::stringstream ss(g.budget);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw DomainError("budget entries look like syt=20 or perm=10");
        const std::string key = item.substr(0, eq);
        int value = 0;
        try {
            value = std::stoi(item.substr(eq + 1));
        } catch (const std::exception&) {
            throw DomainError("budget value for '" + key + "' is not an integer");
        }
        if (value < 1) throw DomainError("budget values must be positive");
        if (key == "syt") g.syt_budget = value;
        else if (key == "perm") g.perm_budget = value;
        else throw DomainError("unknown budget key '" + key + "'");
    }
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open " + path + " for writing");
    f << contents;
    f.close();
    if (!f) throw IoError("failed writing " + path);
}

std::string complex_text(std::complex<double> z) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(6) << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
    return os.str();
}

std::string join(const std::vector<std::string>& parts, const char* sep = ", ") {
    std::string out;
    for (const auto& p : parts) out += (out.empty() ? "" : sep) + p;
    return out;
}

template <class T>
std::string join_numbers(const std::vector<T>& xs) {
    std::vector<std::string> parts;
    for (const auto& x : xs) {
        if constexpr (std::is_same_v<T, BigInt>) parts.push_back(x.get_str());
        else parts.push_back(std::to_string(x));
    }
    return "(" + join(parts) + ")";
}

int cmd_descent(const GlobalOptions& g, const std::string& set_text, const std::vector<int>& evals, std::ostream& out) {
    const DescentSet I = parse_descent_set(set_text);
    json report = descent_report(I);
    bool ok = true;
    json evaluations = json::array();
    const RationalPolynomial d = descent_polynomial(I);
    for (int n : evals) {
        if (n < 0) throw DomainError("--eval needs a nonnegative N");
        json e = {{"n", n}, {"value", d(Rational(n)).get_str()}};
        // The polynomial counts permutations only for N > m.
        if (n > (I.empty() ? 0 : I.max()) && n <= g.perm_budget && n >= 1) {
            const BigInt brute = brute_force_descent_count(I, n, g.perm_budget);
            e["brute_force"] = brute.get_str();
            e["matches"] = d(Rational(n)) == Rational(brute);
            ok = ok && e["matches"].get<bool>();
        }
        evaluations.push_back(e);
    }
    report["evaluations"] = evaluations;
    report["version"] = kVersion;

    if (g.json) {
        out << report.dump() << '\n';
        return ok ? kExitOk : kExitCheckFailed;
    }
    out << "descent set: " << to_string(I) << '\n';
    if (!I.empty()) {
        const SkewShape shape = ribbon_from_descent_set(I);
        out << "ribbon: " << to_string(shape) << '\n';
        const NewtonForm nf = excitation_factor(shape);
        out << "alpha: " << join_numbers(alpha_vector(shape.outer())) << '\n';
        out << "C: " << join_numbers(nf.coeffs) << '\n';
        out << "T(t) = (" << to_string(trivial_part(shape, I) * Rational(common_denominator(trivial_part(shape, I))), "t")
            << ")/" << common_denominator(trivial_part(shape, I)).get_str() << '\n';
        out << "E(t) = " << to_string(nf.to_monomial(), "t") << '\n';
    }
    out << "d(N) = " << to_string(d, "N") << '\n';
    for (const json& e : evaluations) {
        out << "d(" << e["n"].get<int>() << ") = " << e["value"].get<std::string>();
        if (e.contains("brute_force"))
            out << "  [permutation scan: " << e["brute_force"].get<std::string>()
                << (e["matches"].get<bool>() ? ", match]" : ", MISMATCH]");
        out << '\n';
    }
    return ok ? kExitOk : kExitCheckFailed;
}

int cmd_excited(const GlobalOptions& g, const std::string& shape_text, std::ostream& out) {
    const json j = json::parse(shape_text, nullptr, false);
    if (j.is_discarded()) throw DomainError("--shape must be JSON like {\"outer\":[3,3,3],\"inner\":[2,2]}");
    const SkewShape shape = shape_from_json(j);
    const std::vector<ExcitedDiagram> diagrams = enumerate_excited(shape);
    const BigInt naruse = naruse_count(shape).value;
    json result = {{"shape", to_json(shape)}, {"naruse", naruse.get_str()}, {"version", kVersion}};
    json list = json::array();
    for (const ExcitedDiagram& d : diagrams)
        list.push_back({{"cells", format_cells(d.cells)}, {"weight", diagram_weight(d, shape.outer()).get_str()}});
    result["diagrams"] = list;
    bool ok = true;
    if (shape.size() <= g.syt_budget) {
        const BigInt brute = brute_force_count(shape, g.syt_budget).value;
        result["brute_force"] = brute.get_str();
        ok = brute == naruse;
        result["matches"] = ok;
    }
    if (g.json) {
        out << result.dump() << '\n';
        return ok ? kExitOk : kExitCheckFailed;
    }
    for (const ExcitedDiagram& d : diagrams)
        out << format_cells(d.cells) << "  weight " << diagram_weight(d, shape.outer()).get_str() << '\n';
    out << diagrams.size() << " excited diagrams; naruse count " << naruse.get_str() << '\n';
    if (result.contains("brute_force"))
        out << "brute force count " << result["brute_force"].get<std::string>() << (ok ? " (match)" : " (MISMATCH)")
            << '\n';
    else
        out << "brute force skipped: size " << shape.size() << " exceeds budget " << g.syt_budget << '\n';
    return ok ? kExitOk : kExitCheckFailed;
}

int cmd_sqci(const GlobalOptions& g, const std::string& lambda, const std::string& circles,
             const std::string& squares, std::optional<int> k, bool no_push, std::ostream& out) {
    const SqciDiagram d(parse_partition(lambda), parse_cells(circles), parse_cells(squares));
    json result = {{"lambda", d.ambient().parts()}, {"weight", sqci_weight(d).get_str()}, {"version", kVersion}};
    bool ok = true;
    if (k) {
        const InequalityVerdict v = no_push ? check_slice_without_push(d, *k) : check_slice_and_push(d, *k);
        result["k"] = *k;
        result["push"] = !no_push;
        result["lhs"] = v.lhs.get_str();
        result["rhs"] = v.rhs.get_str();
        result["holds"] = v.holds;
        ok = v.holds;
    }
    if (g.json) {
        out << result.dump() << '\n';
        return ok ? kExitOk : kExitCheckFailed;
    }
    out << "weight " << result["weight"].get<std::string>() << '\n';
    if (k)
        out << "lhs " << result["lhs"].get<std::string>() << " rhs " << result["rhs"].get<std::string>() << " verdict "
            << (ok ? "lhs >= rhs" : "lhs < rhs") << '\n';
    return ok ? kExitOk : kExitCheckFailed;
}

int cmd_roots(const GlobalOptions& g, const std::string& set_text, const std::string& csv, const std::string& svg,
              bool print, std::ostream& out) {
    const DescentSet I = parse_descent_set(set_text);
    if (I.empty()) throw DomainError("d of the empty set is constant and has no roots");
    const int m = I.max();
    const RootBoundsVerdict v = check_main_bounds(I);
    const std::vector<PlotRoot> roots = plot_roots(v, m);
    if (!csv.empty()) write_file(csv, roots_csv(roots, m));
    if (!svg.empty()) write_file(svg, roots_svg(roots, m));
    if (!print) return v.holds ? kExitOk : kExitCheckFailed;

    if (g.json) {
        json list = json::array();
        for (std::size_t i = 0; i < roots.size(); ++i)
            list.push_back({{"re", roots[i].z.real()},
                            {"im", roots[i].z.imag()},
                            {"exact", static_cast<bool>(v.report.exact[i])},
                            {"error_bound", v.report.error_bounds[i]},
                            {"modulus_ok", roots[i].modulus_ok},
                            {"real_part_ok", roots[i].real_part_ok}});
        json checks = json::array();
        for (const BoundCheck& c : v.checks) checks.push_back({{"name", c.name}, {"holds", c.holds}, {"margin", c.margin}});
        out << json{{"set", to_json(I)}, {"roots", list}, {"checks", checks}, {"holds", v.holds}, {"version", kVersion}}.dump()
            << '\n';
    } else {
        out << "roots of d_" << to_string(I) << ":\n";
        for (std::size_t i = 0; i < roots.size(); ++i)
            out << "  " << complex_text(roots[i].z) << (v.report.exact[i] ? "  (exact)" : "") << '\n';
        for (const BoundCheck& c : v.checks)
            out << c.name << ": " << (c.holds ? "holds" : "FAILS") << " (margin " << c.margin << ")\n";
    }
    return v.holds ? kExitOk : kExitCheckFailed;
}

int cmd_plot(const GlobalOptions& g, const std::string& set_text, const std::string& csv, const std::string& svg,
             std::ostream& out) {
    if (csv.empty() && svg.empty()) {
        // No output files: the SVG goes to stdout.
        const DescentSet I = parse_descent_set(set_text);
        if (I.empty()) throw DomainError("d of the empty set is constant and has no roots");
        const RootBoundsVerdict v = check_main_bounds(I);
        out << roots_svg(plot_roots(v, I.max()), I.max());
        return v.holds ? kExitOk : kExitCheckFailed;
    }
    return cmd_roots(g, set_text, csv, svg, false, out);
}

int cmd_verify(const GlobalOptions& g, SweepConfig cfg, const std::vector<std::string>& suites,
               const std::string& lambda, const std::string& circles, const std::string& squares, int k,
               std::ostream& out) {
    cfg.seed = g.seed;
    cfg.jobs = g.jobs;
    cfg.syt_budget = g.syt_budget;
    cfg.perm_budget = g.perm_budget;
    cfg.oracle_max_size = std::min(cfg.oracle_max_size, cfg.syt_budget);
    cfg.validate();

    std::vector<SuiteResult> results;
    for (const std::string& name : suites.empty() ? suite_names() : suites) {
        if (name == "sap") {
            if (lambda.empty() || circles.empty()) throw DomainError("suite sap needs --lambda and --circles");
            results.push_back(suite_slice_and_push_instance(
                SqciDiagram(parse_partition(lambda), parse_cells(circles), parse_cells(squares)), k));
        } else {
            results.push_back(run_suite(name, cfg));
        }
    }
    bool ok = true;
    for (const SuiteResult& r : results) ok = ok && r.passed;

    if (g.json) {
        json report = {{"version", kVersion}, {"seed", cfg.seed}, {"max_m", cfg.max_m}, {"passed", ok}};
        json list = json::array();
        for (const SuiteResult& r : results) list.push_back(to_json(r));
        report["suites"] = list;
        out << report.dump(2) << '\n';
    } else {
        out << "ribbonroots " << kVersion << " seed " << cfg.seed << " max_m " << cfg.max_m << '\n';
        for (const SuiteResult& r : results) {
            out << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.checks << " checks";
            if (r.failures) out << ", " << r.failures << " failures";
            out << ")";
            if (r.details.contains("lhs")) out << " lhs " << r.details["lhs"].get<std::string>() << " rhs " << r.details["rhs"].get<std::string>();
            if (r.details.contains("unpushed_lhs"))
                out << " unpushed " << r.details["unpushed_lhs"].get<std::string>() << " < "
                    << r.details["unpushed_rhs"].get<std::string>() << " (expected failure)";
            out << '\n';
            for (const std::string& w : r.witnesses) out << "  witness: " << w << '\n';
        }
    }
    return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Descent polynomials, excited diagrams and root bounds", "ribbonroots"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kVersion));

    GlobalOptions g;
    app.add_flag("--json", g.json, "Machine-readable JSON output");
    app.add_option("--seed", g.seed, "Random seed (RIBBONROOTS_SEED overrides)");
    app.add_option("--jobs", g.jobs, "Worker threads for sweeps")->check(CLI::PositiveNumber);
    app.add_option("--budget", g.budget, "Oracle caps, e.g. syt=20,perm=10");

    std::string set_text, shape_text, lambda, circles, squares, csv, svg;
    std::vector<int> evals;
    std::optional<int> slice_k;
    bool no_push = false;
    std::vector<std::string> suites;
    SweepConfig cfg;
    int sap_k = 0;

    auto* descent = app.add_subcommand("descent", "Descent polynomial of a descent set");
    descent->add_option("--set", set_text, "Descent set, e.g. 3,5")->required();
    descent->add_option("--eval", evals, "Evaluate d(N); checked against a permutation scan when small");

    auto* excited = app.add_subcommand("excited", "Excited diagrams of a skew shape");
    excited->add_option("--shape", shape_text, R"(Skew shape as {"outer":[...],"inner":[...]})")->required();

    auto* sqci = app.add_subcommand("sqci", "Weight of a circle-and-square diagram");
    sqci->add_option("--lambda", lambda, "Ambient partition, e.g. 5,5,4,3,2")->required();
    sqci->add_option("--circles", circles, "Circle cells row:col,...");
    sqci->add_option("--squares", squares, "Square cells row:col,...");
    sqci->add_option("--slice", slice_k, "Compare against the slice at column k");
    sqci->add_flag("--no-push", no_push, "Slice without pushing the right part");

    auto* roots = app.add_subcommand("roots", "Roots of d_I with bound verdicts");
    roots->add_option("--set", set_text, "Descent set")->required();
    roots->add_option("--csv", csv, "Write the root table as CSV");
    roots->add_option("--svg", svg, "Write a plot as SVG");

    auto* plot = app.add_subcommand("plot", "Plot the roots of d_I");
    plot->add_option("--set", set_text, "Descent set")->required();
    plot->add_option("--csv", csv, "CSV output path");
    plot->add_option("--svg", svg, "SVG output path (stdout when no path is given)");

    auto* verify = app.add_subcommand("verify", "Run the verification suites");
    verify->add_option("--suite", suites, "Suite names (default: all); 'sap' checks one instance");
    verify->add_option("--max-m", cfg.max_m, "Descent sets range over subsets of [1..max_m]");
    verify->add_option("--lambda", lambda, "sap: ambient partition");
    verify->add_option("--circles", circles, "sap: circle cells");
    verify->add_option("--squares", squares, "sap: square cells");
    verify->add_option("--k", sap_k, "sap: slice column");
    verify->add_option("--sap-max-size", cfg.sap_max_size, "Exhaustive slice-and-push bound on |lambda|");

    for (auto* sub : {descent, excited, sqci, roots, plot, verify}) sub->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (const char* env = std::getenv("RIBBONROOTS_SEED"); env && *env) {
            try {
                std::size_t pos = 0;
                g.seed = std::stoull(env, &pos);
                if (env[pos] != '\0') throw std::invalid_argument(env);
            } catch (const std::exception&) {
                throw DomainError(std::string("RIBBONROOTS_SEED is not an unsigned integer: ") + env);
            }
        }
        apply_budget(g);

        if (*descent) return cmd_descent(g, set_text, evals, out);
        if (*excited) return cmd_excited(g, shape_text, out);
        if (*sqci) return cmd_sqci(g, lambda, circles, squares, slice_k, no_push, out);
        if (*roots) return cmd_roots(g, set_text, csv, svg, true, out);
        if (*plot) return cmd_plot(g, set_text, csv, svg, out);
        if (*verify) return cmd_verify(g, cfg, suites, lambda, circles, squares, sap_k, out);
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const NumericalError& e) {
        err << "error: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const ConsistencyError& e) {
        err << "check failed: " << e.what() << '\n';
        return kExitCheckFailed;
    }
    return kExitUsage;
}

}  // namespace ribbonroots
