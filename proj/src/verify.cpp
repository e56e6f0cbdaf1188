#include "ribbonroots/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "ribbonroots/descent.hpp"
#include "ribbonroots/errors.hpp"
#include "ribbonroots/excited.hpp"
#include "ribbonroots/roots.hpp"

namespace ribbonroots {

using nlohmann::json;

namespace {

constexpr std::size_t kMaxWitnesses = 10;

// Per-instance outcome collected by the parallel sweeps and folded in index order.
struct Outcome {
    bool ok = true;
    std::string witness;
    double metric = std::numeric_limits<double>::infinity();
};

void fold(SuiteResult& r, const std::vector<Outcome>& outcomes, const char* metric_name) {
    double best = std::numeric_limits<double>::infinity();
    for (const Outcome& o : outcomes) {
        ++r.checks;
        if (!o.ok) r.fail(o.witness);
        best = std::min(best, o.metric);
    }
    if (metric_name && std::isfinite(best)) r.details[metric_name] = best;
}

double as_double(const Rational& q) { return static_cast<double>(to_long_double(q)); }

std::vector<DescentSet> sweep_sets(int max_m) { return nonempty_subsets(max_m); }

std::string cells_text(const std::vector<Cell>& cells) {
    std::string out;
    for (const Cell& c : cells) out += (out.empty() ? "" : ",") + to_string(c);
    return "{" + out + "}";
}

std::string describe(const SqciDiagram& d, int k) {
    return "lambda=" + to_string(d.ambient()) + " D=" + cells_text(d.circles()) + " F=" + cells_text(d.squares()) +
           " k=" + std::to_string(k);
}

}  // namespace

void SweepConfig::validate() const {
    if (max_m < 1) throw DomainError("max_m must be at least 1");
    if (max_m > 16) throw ResourceError("max_m above 16 is outside the supported sweep size");
    if (jobs < 1) throw DomainError("jobs must be at least 1");
    if (syt_budget < 1 || perm_budget < 1) throw DomainError("budgets must be positive");
    if (perm_budget > 12) throw ResourceError("permutation budget above 12 is too large to scan");
    if (oracle_max_size > syt_budget) throw DomainError("oracle_max_size exceeds the SYT brute-force budget");
    if (sap_max_size < 1 || oracle_max_size < 1 || lemma_a_max_k < 2) throw DomainError("sweep sizes must be positive");
    if (sap_random_instances < 0 || square_instances < 0 || oracle_shapes < 0 || perturbed_instances < 0 ||
        lemma_a2_samples < 1)
        throw DomainError("instance counts must be nonnegative");
}

void SuiteResult::fail(std::string witness) {
    passed = false;
    ++failures;
    if (witnesses.size() < kMaxWitnesses) witnesses.push_back(std::move(witness));
}

SkewShape random_skew_shape(std::mt19937_64& rng, int max_parts, int max_part, int max_size) {
    std::uniform_int_distribution<int> part(0, max_part);
    for (;;) {
        std::vector<int> lambda(static_cast<std::size_t>(max_parts));
        for (int& p : lambda) p = part(rng);
        std::sort(lambda.rbegin(), lambda.rend());
        std::vector<int> mu(lambda.size());
        int cap = max_part;
        for (std::size_t i = 0; i < lambda.size(); ++i) {
            cap = std::min(cap, lambda[i]);
            mu[i] = std::uniform_int_distribution<int>(0, cap)(rng);
            cap = mu[i];
        }
        SkewShape s{Partition(lambda), Partition(mu)};
        if (s.size() >= 1 && s.size() <= max_size) return s;
    }
}

std::vector<SqciDiagram> slice_and_push_family(int max_size) {
    std::vector<SqciDiagram> out;
    for (int n = 1; n <= max_size; ++n) {
        for (const Partition& lambda : partitions_of(n)) {
            for (int s = 1; s < n; ++s) {
                for (const Partition& mu : partitions_of(s)) {
                    const std::vector<Cell> base = mu.cells();
                    for (int dr = 0; dr < lambda.length(); ++dr) {
                        for (int dc = 0; dc < lambda.row(1); ++dc) {
                            std::vector<Cell> moved;
                            bool legal = true;
                            for (const Cell& c : base) {
                                const Cell t{c.row + dr, c.col + dc};
                                if (!lambda.contains(Cell{t.row + 1, t.col + 1})) {
                                    legal = false;
                                    break;
                                }
                                moved.push_back(t);
                            }
                            if (legal) out.emplace_back(lambda, std::move(moved), std::vector<Cell>{});
                        }
                    }
                }
            }
        }
    }
    return out;
}

SuiteResult suite_naruse(const SweepConfig& cfg) {
    SuiteResult r{"naruse"};
    {
        const SkewShape shape{Partition{3, 3, 3}, Partition{2, 2}};
        std::vector<BigInt> weights;
        for (const ExcitedDiagram& d : enumerate_excited(shape)) weights.push_back(diagram_weight(d, shape.outer()));
        std::sort(weights.rbegin(), weights.rend());
        const std::vector<BigInt> expected{240, 80, 40, 40, 20, 12};
        ++r.checks;
        if (weights != expected) r.fail("excited weights of (3,3,3)/(2,2)");
        ++r.checks;
        if (naruse_count(shape).value != 6) r.fail("naruse count of (3,3,3)/(2,2)");
    }

    std::mt19937_64 rng(cfg.seed);
    std::vector<SkewShape> shapes;
    for (int i = 0; i < cfg.oracle_shapes; ++i) shapes.push_back(random_skew_shape(rng, 5, 6, cfg.oracle_max_size));
    const auto outcomes = parallel_map<Outcome>(shapes.size(), cfg.jobs, [&](std::size_t i) {
        const SkewShape& s = shapes[i];
        Outcome o;
        const BigInt lhs = naruse_count(s).value;
        const BigInt rhs = brute_force_count(s, cfg.syt_budget).value;
        o.ok = lhs == rhs;
        if (!o.ok) o.witness = to_string(s) + ": naruse " + lhs.get_str() + " vs brute force " + rhs.get_str();
        return o;
    });
    fold(r, outcomes, nullptr);
    r.details["random_shapes"] = shapes.size();

    // Straight shapes: excited sum collapses to the hook length formula.
    long straight = 0;
    for (int n = 1; n <= 8; ++n)
        for (const Partition& p : partitions_of(n)) {
            ++r.checks;
            ++straight;
            if (naruse_count(SkewShape{p, Partition()}).value != frt_count(p).value)
                r.fail("hook length formula disagrees on " + to_string(p));
        }
    r.details["straight_shapes"] = straight;
    return r;
}

SuiteResult suite_ratio_monotonicity(const SweepConfig& cfg) {
    SuiteResult r{"ratio-monotonicity"};
    const auto sets = sweep_sets(cfg.max_m);
    const auto outcomes = parallel_map<Outcome>(sets.size(), cfg.jobs, [&](std::size_t i) {
        const NewtonForm nf = excitation_factor(ribbon_from_descent_set(sets[i]));
        const MonotonicityVerdict v = check_coefficient_monotonicity(nf);
        Outcome o;
        o.ok = v.holds;
        for (std::size_t d = 0; d + 1 < v.ratios.size(); ++d) o.metric = std::min(o.metric, as_double(v.ratios[d] - v.ratios[d + 1]));
        if (!o.ok) o.witness = to_string(sets[i]);
        return o;
    });
    fold(r, outcomes, "min_consecutive_gap");
    r.details["sets"] = sets.size();
    return r;
}

SuiteResult suite_refined_chains(const SweepConfig& cfg) {
    SuiteResult r{"refined-chains"};
    const auto sets = sweep_sets(cfg.max_m);
    const auto verdicts = parallel_map<CorollaryVerdict>(sets.size(), cfg.jobs, [&](std::size_t i) {
        return check_refined_corollaries(ribbon_from_descent_set(sets[i]));
    });
    std::map<std::string, long> chains;
    long vacuous = 0;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        if (verdicts[i].vacuous) ++vacuous;
        for (const ChainCheck& c : verdicts[i].chains) {
            ++r.checks;
            ++chains[c.kind];
            if (!c.holds) r.fail(to_string(sets[i]) + " " + c.kind + " chain at i=" + std::to_string(c.index));
        }
    }
    r.details["chains"] = chains;
    r.details["sets_without_applicable_chain"] = vacuous;
    return r;
}

SuiteResult suite_sqci_coefficients(const SweepConfig& cfg) {
    SuiteResult r{"sqci-coefficients"};
    const auto sets = sweep_sets(cfg.max_m);
    const auto outcomes = parallel_map<Outcome>(sets.size(), cfg.jobs, [&](std::size_t i) {
        const SkewShape shape = ribbon_from_descent_set(sets[i]);
        Outcome o;
        o.ok = excitation_factor(shape).coeffs == lemma33_coefficients(shape);
        if (!o.ok) o.witness = to_string(sets[i]);
        return o;
    });
    fold(r, outcomes, nullptr);
    r.details["sets"] = sets.size();
    return r;
}

SuiteResult suite_descent_oracle(const SweepConfig& cfg) {
    SuiteResult r{"descent-oracle"};
    const auto sets = sweep_sets(cfg.max_m);
    // One scan of S_n serves every descent set.
    std::map<int, std::vector<BigInt>> histograms;
    const int top = std::min(cfg.max_m + 3, cfg.perm_budget);
    for (int n = 2; n <= top; ++n) histograms[n] = descent_set_histogram(n, cfg.perm_budget);

    long evaluations = 0;
    const auto outcomes = parallel_map<Outcome>(sets.size(), cfg.jobs, [&](std::size_t i) {
        const DescentSet& I = sets[i];
        const int m = I.max();
        const RationalPolynomial d = descent_polynomial(I);
        Outcome o;
        std::string why;
        if (d.degree() != m) why += " degree " + std::to_string(d.degree());
        for (int x : I.elements())
            if (d(Rational(x)) != 0) why += " nonzero at " + std::to_string(x);
        for (int n = m + 1; n <= std::min(m + 3, cfg.perm_budget); ++n) {
            const BigInt expected = histograms.at(n)[descent_mask(I)];
            if (d(Rational(n)) != Rational(expected)) why += " d(" + std::to_string(n) + ") != " + expected.get_str();
        }
        if (!check_shifted_positivity(I).holds) why += " shifted coefficients or d(I;0)";
        const SkewShape shape = ribbon_from_descent_set(I);
        for (int t = 1; t <= 3; ++t) {
            const SkewShape extended{extend_first_row(shape.outer(), t), shape.inner()};
            if (ribbon_count_via_hooks(shape, t) != Rational(naruse_count(extended).value))
                why += " hook evaluation at t=" + std::to_string(t);
        }
        o.ok = why.empty();
        if (!o.ok) o.witness = to_string(I) + ":" + why;
        return o;
    });
    fold(r, outcomes, nullptr);
    for (const DescentSet& I : sets) evaluations += std::max(0, std::min(I.max() + 3, cfg.perm_budget) - I.max());
    r.details["sets"] = sets.size();
    r.details["brute_force_evaluations"] = evaluations;
    return r;
}

SuiteResult suite_square_relation(const SweepConfig& cfg) {
    SuiteResult r{"square-relation"};
    std::mt19937_64 rng(cfg.seed + 1);
    for (int n = 0; n < cfg.square_instances; ++n) {
        Partition lambda;
        std::vector<Cell> cells;
        // A cell strictly southeast of the top-left corner fixes the rectangle.
        std::vector<std::pair<Cell, Cell>> rects;
        while (rects.empty()) {
            const std::vector<Partition> pool = partitions_of(std::uniform_int_distribution<int>(4, 12)(rng));
            lambda = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
            cells = lambda.cells();
            for (const Cell& a : cells)
                for (const Cell& b : cells)
                    if (b.row > a.row && b.col > a.col) rects.emplace_back(a, b);
        }
        const auto [a, b] = rects[std::uniform_int_distribution<std::size_t>(0, rects.size() - 1)(rng)];
        std::vector<Cell> squares;
        const int f = std::uniform_int_distribution<int>(0, 3)(rng);
        for (int j = 0; j < f; ++j) squares.push_back(cells[std::uniform_int_distribution<std::size_t>(0, cells.size() - 1)(rng)]);
        ++r.checks;
        if (!check_square_relation(squares, lambda, {a.row, b.row, a.col, b.col}))
            r.fail(to_string(lambda) + " corners " + to_string(a) + "," + to_string(b));
    }
    return r;
}

SuiteResult suite_slice_and_push(const SweepConfig& cfg) {
    SuiteResult r{"slice-and-push"};
    const std::vector<SqciDiagram> family = slice_and_push_family(cfg.sap_max_size);
    long equalities = 0;
    const auto exhaustive = parallel_map<Outcome>(family.size(), cfg.jobs, [&](std::size_t i) {
        const SqciDiagram& d = family[i];
        Outcome o;
        long eq = 0;
        for (int k = 0; k <= d.ambient().row(1); ++k) {
            const InequalityVerdict v = check_slice_and_push(d, k);
            if (v.lhs == v.rhs) ++eq;
            if (!v.holds && o.ok) {
                o.ok = false;
                o.witness = describe(d, k) + ": " + v.lhs.get_str() + " < " + v.rhs.get_str();
            }
        }
        o.metric = static_cast<double>(eq);
        return o;
    });
    for (const Outcome& o : exhaustive) {
        ++r.checks;
        if (!o.ok) r.fail(o.witness);
        equalities += static_cast<long>(o.metric);
    }
    r.details["exhaustive_diagrams"] = family.size();
    r.details["exhaustive_equalities"] = equalities;

    std::mt19937_64 rng(cfg.seed + 2);
    double min_ratio = std::numeric_limits<double>::infinity();
    for (int n = 0; n < cfg.sap_random_instances && !family.empty(); ++n) {
        const SqciDiagram& base = family[std::uniform_int_distribution<std::size_t>(0, family.size() - 1)(rng)];
        const std::vector<Cell> cells = base.ambient().cells();
        std::vector<Cell> squares;
        const int f = std::uniform_int_distribution<int>(1, 3)(rng);
        for (int j = 0; j < f; ++j) squares.push_back(cells[std::uniform_int_distribution<std::size_t>(0, cells.size() - 1)(rng)]);
        const SqciDiagram d(base.ambient(), base.circles(), std::move(squares));
        const int k = std::uniform_int_distribution<int>(0, d.ambient().row(1))(rng);
        const InequalityVerdict v = check_slice_and_push(d, k);
        ++r.checks;
        if (!v.holds) r.fail(describe(d, k) + ": " + v.lhs.get_str() + " < " + v.rhs.get_str());
        if (v.rhs != 0) min_ratio = std::min(min_ratio, as_double(Rational(v.lhs, v.rhs)));
    }
    r.details["random_instances"] = cfg.sap_random_instances;
    if (std::isfinite(min_ratio)) r.details["random_min_ratio"] = min_ratio;
    return r;
}

SuiteResult suite_slice_and_push_instance(const SqciDiagram& d, int k) {
    SuiteResult r{"sap"};
    const InequalityVerdict v = check_slice_and_push(d, k);
    ++r.checks;
    r.details["lambda"] = d.ambient().parts();
    r.details["k"] = k;
    r.details["lhs"] = v.lhs.get_str();
    r.details["rhs"] = v.rhs.get_str();
    r.details["holds"] = v.holds;
    if (!v.holds) r.fail(describe(d, k));
    return r;
}

SuiteResult suite_no_push_witness() {
    SuiteResult r{"no-push-witness"};
    const SqciDiagram d(Partition{4, 3}, {{1, 1}, {1, 2}}, {});
    const InequalityVerdict without = check_slice_without_push(d, 1);
    const InequalityVerdict with = check_slice_and_push(d, 1);
    r.details["unpushed_lhs"] = without.lhs.get_str();
    r.details["unpushed_rhs"] = without.rhs.get_str();
    r.details["unpushed_holds"] = without.holds;
    r.details["pushed_rhs"] = with.rhs.get_str();
    r.details["pushed_holds"] = with.holds;
    r.details["expected_failure"] = true;
    ++r.checks;
    if (!(without.lhs == 27 && without.rhs == 28 && !without.holds))
        r.fail("unpushed inequality did not fail as 27 < 28");
    ++r.checks;
    if (!with.holds) r.fail("pushed inequality failed on the same diagram");
    return r;
}

SuiteResult suite_main_bounds(const SweepConfig& cfg) {
    SuiteResult r{"main-bounds"};
    const auto sets = sweep_sets(cfg.max_m);
    const auto verdicts = parallel_map<RootBoundsVerdict>(sets.size(), cfg.jobs,
                                                           [&](std::size_t i) { return check_main_bounds(sets[i]); });
    std::map<std::string, double> margins;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        ++r.checks;
        for (const BoundCheck& c : verdicts[i].checks) {
            auto [it, fresh] = margins.emplace(c.name, c.margin);
            if (!fresh) it->second = std::min(it->second, c.margin);
            if (!c.holds) r.fail(to_string(sets[i]) + " violates " + c.name + " by " + std::to_string(-c.margin));
        }
    }
    r.details["sets"] = sets.size();
    r.details["min_margins"] = margins;
    return r;
}

SuiteResult suite_d10_plot() {
    SuiteResult r{"d10-plot"};
    const std::vector<std::complex<double>> plotted = {
        {-1, 0},
        {0.123556, -2.080159}, {0.123556, 2.080159},
        {2.852828, -3.469780}, {2.852828, 3.469780},
        {6.147172, -3.469780}, {6.147172, 3.469780},
        {8.876444, -2.080159}, {8.876444, 2.080159},
        {10, 0},
    };
    const RootReport report = find_roots(descent_polynomial(DescentSet({10})));
    std::vector<std::complex<double>> left = report.roots;
    double worst = 0;
    ++r.checks;
    if (left.size() != plotted.size()) r.fail("expected 10 roots, found " + std::to_string(left.size()));
    for (const auto& p : plotted) {
        if (left.empty()) break;
        auto best = std::min_element(left.begin(), left.end(),
                                     [&](auto a, auto b) { return std::abs(a - p) < std::abs(b - p); });
        const double err = std::max(std::abs(best->real() - p.real()), std::abs(best->imag() - p.imag()));
        worst = std::max(worst, err);
        ++r.checks;
        if (err > 1e-4) r.fail("plotted root (" + std::to_string(p.real()) + "," + std::to_string(p.imag()) + ") off by " + std::to_string(err));
        left.erase(best);
    }
    r.details["max_abs_error"] = worst;
    r.details["tolerance"] = 1e-4;
    return r;
}

SuiteResult suite_excitation_bounds(const SweepConfig& cfg) {
    SuiteResult r{"excitation-bounds"};
    const auto sets = sweep_sets(cfg.max_m);
    const auto verdicts = parallel_map<RootBoundsVerdict>(sets.size(), cfg.jobs, [&](std::size_t i) {
        return check_excitation_bounds(ribbon_from_descent_set(sets[i]));
    });
    std::map<std::string, double> margins;
    long vacuous = 0;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        ++r.checks;
        if (verdicts[i].vacuous) ++vacuous;
        for (const BoundCheck& c : verdicts[i].checks) {
            auto [it, fresh] = margins.emplace(c.name, c.margin);
            if (!fresh) it->second = std::min(it->second, c.margin);
            if (!c.holds) r.fail(to_string(sets[i]) + " violates " + c.name + " by " + std::to_string(-c.margin));
        }
    }
    r.details["sets"] = sets.size();
    r.details["constant_factors"] = vacuous;
    r.details["min_margins"] = margins;
    return r;
}

SuiteResult suite_root_bridge(const SweepConfig& cfg) {
    SuiteResult r{"root-bridge"};
    const auto sets = sweep_sets(cfg.max_m);
    const auto outcomes = parallel_map<Outcome>(sets.size(), cfg.jobs, [&](std::size_t i) {
        const DescentSet& I = sets[i];
        const BridgeVerdict b = check_root_bridge(I);
        Outcome o;
        o.metric = -b.max_mismatch;
        std::string why;
        if (!b.holds) why += " roots of d_I are not I plus shifted roots of E (mismatch " + std::to_string(b.max_mismatch) + ")";
        if (!b.factor_set_matches) why += " factor set";
        // Excitation bounds imply the main bounds.
        if (check_excitation_bounds(ribbon_from_descent_set(I)).holds && !check_main_bounds(I).holds)
            why += " excitation bounds hold but main bounds fail";
        o.ok = why.empty();
        if (!o.ok) o.witness = to_string(I) + ":" + why;
        return o;
    });
    fold(r, outcomes, nullptr);
    double worst = 0;
    for (const Outcome& o : outcomes) worst = std::max(worst, -o.metric);
    r.details["max_mismatch"] = worst;
    r.details["sets"] = sets.size();
    return r;
}

SuiteResult suite_shift_poly_roots(const SweepConfig& cfg) {
    SuiteResult r{"shift-poly-roots"};
    json per_k = json::array();
    for (int k = 2; k <= cfg.lemma_a_max_k; ++k) {
        const LemmaA1Verdict v = check_lemma_a1(k);
        ++r.checks;
        if (!v.holds) r.fail("k=" + std::to_string(k));
        json flagged = json::array();
        for (const auto& z : v.flagged) flagged.push_back({z.real(), z.imag()});
        per_k.push_back({{"k", k},
                         {"margin_plus_one", v.margin_plus_one},
                         {"margin_plus_k", v.margin_plus_k},
                         {"strict", v.strict},
                         {"flagged", flagged}});
    }
    r.details["per_k"] = per_k;
    return r;
}

SuiteResult suite_shift_poly_boundary(const SweepConfig& cfg) {
    SuiteResult r{"shift-poly-boundary"};
    json per_k = json::array();
    for (int k = 1; k <= cfg.lemma_a_max_k; ++k) {
        const LemmaA2Verdict v = check_lemma_a2(k, cfg.lemma_a2_samples);
        ++r.checks;
        if (!v.holds)
            r.fail("k=" + std::to_string(k) + " |P(z)| below (k-1)! at z=" + std::to_string(v.witness.real()) + "+" +
                   std::to_string(v.witness.imag()) + "i");
        per_k.push_back({{"k", k}, {"min_ratio", v.min_ratio}, {"samples", v.samples_checked}});
    }
    r.details["per_k"] = per_k;

    const InteriorBoundVerdict interior = check_appendix_a_interior_bound(7, 5, 5, cfg.lemma_a2_samples);
    json coeffs = json::array();
    for (const BigInt& c : interior.shifted_coefficients) coeffs.push_back(c.get_str());
    const std::vector<BigInt> expected{1008, 192, 44, 20, -3, -2, 1};
    ++r.checks;
    if (!interior.holds || interior.shifted_coefficients != expected || interior.triangle_bound != 1932)
        r.fail("k=7 interior bound");
    r.details["k7_interior"] = {{"shifted_coefficients", coeffs},
                                {"triangle_bound", interior.triangle_bound.get_str()},
                                {"min_sampled", interior.min_sampled}};
    return r;
}

SuiteResult suite_perturbation(const SweepConfig& cfg) {
    SuiteResult r{"perturbation"};
    std::mt19937_64 rng(cfg.seed + 3);
    std::vector<PerturbedPolynomial> instances;
    for (int i = 0; i < cfg.perturbed_instances; ++i) instances.push_back(random_perturbed(rng));
    const auto outcomes = parallel_map<Outcome>(instances.size(), cfg.jobs, [&](std::size_t i) {
        const PerturbationVerdict v = check_perturbation_lemma(instances[i]);
        Outcome o;
        o.ok = v.holds;
        o.metric = v.bound - v.max_modulus;
        if (!o.ok) {
            std::string a;
            for (int x : instances[i].a) a += (a.empty() ? "" : ",") + std::to_string(x);
            o.witness = "a=(" + a + ") max |z| " + std::to_string(v.max_modulus) + " > " + std::to_string(v.bound);
        }
        return o;
    });
    fold(r, outcomes, "min_margin");
    r.details["random_instances"] = instances.size();

    json sharp = json::array();
    for (int k : {3, 5, 7}) {
        for (int c : {0, 1, 4}) {
            PerturbedPolynomial pp;
            for (int i = 1; i <= k; ++i) {
                pp.a.push_back(c + i);
                pp.g.emplace_back(i);
            }
            const PerturbationVerdict v = check_perturbation_lemma(pp);
            ++r.checks;
            if (!v.holds || !v.sharpness_family || !v.sharpness_root)
                r.fail("sharpness family k=" + std::to_string(k) + " offset " + std::to_string(c));
            sharp.push_back({{"k", k}, {"a_k", c + k}, {"root_at_minus_a_k_minus_1", v.sharpness_root}});
        }
    }
    r.details["sharpness"] = sharp;
    return r;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "naruse",     "ratio-monotonicity",      "refined-chains",       "sqci-coefficients",   "descent-oracle", "square-relation",
        "slice-and-push", "no-push-witness", "main-bounds", "d10-plot", "excitation-bounds", "root-bridge",
        "shift-poly-roots",   "shift-poly-boundary",    "perturbation"};
    return names;
}

SuiteResult run_suite(const std::string& name, const SweepConfig& cfg) {
    if (name == "naruse") return suite_naruse(cfg);
    if (name == "ratio-monotonicity") return suite_ratio_monotonicity(cfg);
    if (name == "refined-chains") return suite_refined_chains(cfg);
    if (name == "sqci-coefficients") return suite_sqci_coefficients(cfg);
    if (name == "descent-oracle") return suite_descent_oracle(cfg);
    if (name == "square-relation") return suite_square_relation(cfg);
    if (name == "slice-and-push") return suite_slice_and_push(cfg);
    if (name == "no-push-witness") return suite_no_push_witness();
    if (name == "main-bounds") return suite_main_bounds(cfg);
    if (name == "d10-plot") return suite_d10_plot();
    if (name == "excitation-bounds") return suite_excitation_bounds(cfg);
    if (name == "root-bridge") return suite_root_bridge(cfg);
    if (name == "shift-poly-roots") return suite_shift_poly_roots(cfg);
    if (name == "shift-poly-boundary") return suite_shift_poly_boundary(cfg);
    if (name == "perturbation") return suite_perturbation(cfg);
    throw DomainError("unknown suite '" + name + "'");
}

json to_json(const SuiteResult& r) {
    return {{"name", r.name},
            {"passed", r.passed},
            {"checks", r.checks},
            {"failures", r.failures},
            {"details", r.details},
            {"witnesses", r.witnesses}};
}

}  // namespace ribbonroots
