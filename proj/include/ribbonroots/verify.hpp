#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"
#include "ribbonroots/shapes.hpp"
#include "ribbonroots/sqci.hpp"

namespace ribbonroots {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr std::uint64_t kDefaultSeed = 20190917;

struct SweepConfig {
    int max_m = 7;               // descent sets range over nonempty subsets of [1..max_m]
    std::uint64_t seed = kDefaultSeed;
    int jobs = 1;
    int syt_budget = 20;         // brute_force_count cap
    int perm_budget = 10;        // brute_force_descent_count cap
    int sap_max_size = 10;       // exhaustive slice-and-push sweep over |lambda| <= this
    int sap_random_instances = 1000;
    int square_instances = 1000;
    int oracle_shapes = 200;     // random skew shapes for Naruse vs brute force
    int oracle_max_size = 12;
    int lemma_a_max_k = 12;
    int lemma_a2_samples = 4096;
    int perturbed_instances = 500;

    void validate() const;
};

struct SuiteResult {
    SuiteResult() = default;
    explicit SuiteResult(std::string suite) : name(std::move(suite)) {}

    std::string name;
    bool passed = true;
    long checks = 0;
    long failures = 0;
    nlohmann::json details = nlohmann::json::object();
    std::vector<std::string> witnesses;  // first few failing instances

    void fail(std::string witness);
};

/// Runs fn(i) for i in [0, count) on up to `jobs` threads; results keep index order.
template <class T>
std::vector<T> parallel_map(std::size_t count, int jobs, const std::function<T(std::size_t)>& fn);

/// Random lambda with at most max_parts parts, each <= max_part, and mu inside it
/// with |lambda/mu| <= max_size.
SkewShape random_skew_shape(std::mt19937_64& rng, int max_parts, int max_part, int max_size);

/// Every (D, F=∅) with D = D(mu) translated inside lambda so that each circle keeps its
/// southeast neighbour, for every lambda with |lambda| <= max_size and nonempty mu.
std::vector<SqciDiagram> slice_and_push_family(int max_size);

SuiteResult suite_naruse(const SweepConfig& cfg);
SuiteResult suite_ratio_monotonicity(const SweepConfig& cfg);
SuiteResult suite_refined_chains(const SweepConfig& cfg);
SuiteResult suite_sqci_coefficients(const SweepConfig& cfg);
SuiteResult suite_descent_oracle(const SweepConfig& cfg);
SuiteResult suite_square_relation(const SweepConfig& cfg);
SuiteResult suite_slice_and_push(const SweepConfig& cfg);
/// A single slice-and-push instance.
SuiteResult suite_slice_and_push_instance(const SqciDiagram& d, int k);
SuiteResult suite_no_push_witness();
SuiteResult suite_main_bounds(const SweepConfig& cfg);
/// The ten roots of d_{10} against the published plot, to 1e-4.
SuiteResult suite_d10_plot();
SuiteResult suite_excitation_bounds(const SweepConfig& cfg);
SuiteResult suite_root_bridge(const SweepConfig& cfg);
SuiteResult suite_shift_poly_roots(const SweepConfig& cfg);
SuiteResult suite_shift_poly_boundary(const SweepConfig& cfg);
SuiteResult suite_perturbation(const SweepConfig& cfg);

/// Suite names accepted by run_suite, in default run order.
const std::vector<std::string>& suite_names();
SuiteResult run_suite(const std::string& name, const SweepConfig& cfg);

nlohmann::json to_json(const SuiteResult& r);

}  // namespace ribbonroots

#include "ribbonroots/parallel.ipp"
