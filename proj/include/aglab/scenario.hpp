#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "aglab/convergence.hpp"
#include "aglab/synthesis.hpp"
#include "aglab/union_builder.hpp"

namespace aglab {

/// Raised for malformed experiment configs; the CLI maps it to exit code 2.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

struct Tolerances {
    double identity = 1e-10;
    double certify = 1e-3;
    double conclusion = 1e-6;
    double hypothesis = 1e-6;
};

/// Declarative description of one experiment. All randomness flows from
/// the single seed, making every output reproducible byte for byte.
struct ExperimentConfig {
    std::string name = "custom";
    GroupPtr group;
    std::string scenario = "point-set";  // point-set | subgroup |
                                         // arithmetic-progression |
                                         // discrete-sphere | union | custom
    std::vector<int> set_s;              // S (certificate scenarios)
    std::vector<int> set_t;              // optional T (limit experiment)
    std::vector<int> set_s1, set_s2;     // union scenarios
    std::vector<int> radii;              // ball chain (non-increasing)
    std::vector<std::vector<int>> explicit_chain;
    Tolerances tol;
    double epsilon = 0.05;
    int smoothing_radius = 32;
    std::uint64_t seed = 1;
    int trials = 100;
    int k_count = 64;
    KSchedule schedule = KSchedule::Dyadic;
    std::string generator = "scaling";  // scaling | anorm-drift | phase-jump
};

/// Parse and schema-validate a JSON config. Syntax errors are reported
/// with line and column; schema errors name the offending key.
ExperimentConfig parse_config(const std::string& json_text, const std::string& origin);
ExperimentConfig load_config_file(const std::string& path);

const std::vector<std::string>& builtin_scenario_names();
ExperimentConfig builtin_scenario(const std::string& name);

// Deterministic smooth test data -------------------------------------------

/// Periodized product Gaussian centered at `center`.
GFunction gaussian_function(const GroupPtr& g, int center, double sigma);

/// Random combination of translated Gaussians, corrected by a
/// well-conditioned interpolation at the constraint points so it vanishes
/// exactly on `zeros`; normalized to unit A-norm. Bump centers keep word
/// distance >= min_dist from the constraint set.
GFunction smooth_vanishing_function(const GroupPtr& g, const SubsetIndex& zeros,
                                    std::mt19937_64& rng, int bump_count, double sigma,
                                    int min_dist);

/// Materialized data for a certificate-style scenario.
struct ScenarioData {
    GFunction u;
    SubsetIndex S;
    SubsetIndex T;
    NeighborhoodFamily family;
};

ScenarioData build_scenario_data(const ExperimentConfig& cfg);

// Runners (the CLI wraps exactly these) -------------------------------------
// Exit code semantics: 0 pass, 1 invariant failure. Config errors throw
// ConfigError before any runner starts (exit 2 in the CLI).

enum class OutputFormat { Both, JsonOnly, CsvOnly };

int run_identities(const ExperimentConfig& cfg, const std::string& out_dir,
                   OutputFormat fmt = OutputFormat::Both);
int run_certificate(const ExperimentConfig& cfg, const std::string& out_dir,
                    OutputFormat fmt = OutputFormat::Both);
int run_convergence(const ExperimentConfig& cfg, const std::string& out_dir,
                    OutputFormat fmt = OutputFormat::Both);
int run_union(const ExperimentConfig& cfg, const std::string& out_dir,
              OutputFormat fmt = OutputFormat::Both);

}  // namespace aglab
