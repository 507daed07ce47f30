#include "aglab/scenario.hpp"

#include <json.hpp>

#include <Eigen/LU>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace aglab {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

// --- config parsing --------------------------------------------------------

std::pair<int, int> line_col_of(const std::string& text, std::size_t byte) {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

[[noreturn]] void fail(const std::string& origin, const std::string& what) {
    throw ConfigError(origin + ": " + what);
}

std::vector<int> int_list(const json& j, const std::string& origin, const std::string& key) {
    if (!j.is_array()) fail(origin, "key '" + key + "' must be an array of integers");
    std::vector<int> out;
    for (const auto& v : j) {
        if (!v.is_number_integer()) fail(origin, "key '" + key + "' must contain integers");
        out.push_back(v.get<int>());
    }
    return out;
}

GroupPtr parse_group(const json& j, const std::string& origin) {
    if (!j.is_object()) fail(origin, "key 'group' must be an object");
    if (j.contains("abelian")) {
        auto factors = int_list(j.at("abelian"), origin, "group.abelian");
        for (int f : factors)
            if (f < 1) fail(origin, "key 'group.abelian': factor sizes must be positive");
        return Group::abelian(factors);
    }
    if (j.contains("builtin")) {
        const std::string name = j.at("builtin").get<std::string>();
        if (name == "cyclic") {
            if (!j.contains("n")) fail(origin, "builtin 'cyclic' needs key 'n'");
            return Group::cyclic(j.at("n").get<int>());
        }
        if (name == "dihedral") {
            if (!j.contains("n")) fail(origin, "builtin 'dihedral' needs key 'n'");
            return Group::dihedral(j.at("n").get<int>());
        }
        if (name == "symmetric-3" || name == "s3") return Group::symmetric3();
        fail(origin, "unknown builtin group '" + name + "'");
    }
    if (j.contains("table")) {
        const auto& t = j.at("table");
        if (!t.is_array()) fail(origin, "key 'group.table' must be a matrix");
        std::vector<std::vector<int>> table;
        for (const auto& row : t) table.push_back(int_list(row, origin, "group.table"));
        try {
            return Group::from_table(std::move(table));
        } catch (const std::invalid_argument& e) {
            fail(origin, std::string("key 'group.table': ") + e.what());
        }
    }
    fail(origin, "key 'group' needs one of 'abelian', 'builtin', 'table'");
}

const std::vector<std::string> kScenarioKinds = {
    "point-set", "subgroup", "arithmetic-progression", "discrete-sphere", "union", "custom"};
const std::vector<std::string> kGenerators = {"scaling", "anorm-drift", "phase-jump"};

}  // namespace

ExperimentConfig parse_config(const std::string& text, const std::string& origin) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        auto [line, col] = line_col_of(text, e.byte > 0 ? e.byte - 1 : 0);
        fail(origin, "line " + std::to_string(line) + ", column " + std::to_string(col) +
                         ": " + e.what());
    }
    if (!j.is_object()) fail(origin, "top level must be an object");

    static const std::vector<std::string> known = {
        "name",    "group",  "scenario",   "sets",    "chain",      "tolerances", "epsilon",
        "smoothing_radius", "seed", "trials", "k_count", "k_schedule", "generator"};
    for (auto it = j.begin(); it != j.end(); ++it)
        if (std::find(known.begin(), known.end(), it.key()) == known.end())
            fail(origin, "unknown key '" + it.key() + "'");

    ExperimentConfig cfg;
    if (j.contains("name")) cfg.name = j.at("name").get<std::string>();
    if (!j.contains("group")) fail(origin, "missing required key 'group'");
    cfg.group = parse_group(j.at("group"), origin);
    const int order = cfg.group->order();

    if (j.contains("scenario")) {
        cfg.scenario = j.at("scenario").get<std::string>();
        if (std::find(kScenarioKinds.begin(), kScenarioKinds.end(), cfg.scenario) ==
            kScenarioKinds.end())
            fail(origin, "unknown scenario kind '" + cfg.scenario + "'");
    }

    auto check_elements = [&](std::vector<int>& v, const std::string& key) {
        for (int e : v)
            if (e < 0 || e >= order)
                fail(origin, "key '" + key + "': element " + std::to_string(e) +
                                 " out of range for group order " + std::to_string(order));
    };
    if (j.contains("sets")) {
        const auto& sets = j.at("sets");
        if (!sets.is_object()) fail(origin, "key 'sets' must be an object");
        if (sets.contains("S")) cfg.set_s = int_list(sets.at("S"), origin, "sets.S");
        if (sets.contains("T")) cfg.set_t = int_list(sets.at("T"), origin, "sets.T");
        if (sets.contains("S1")) cfg.set_s1 = int_list(sets.at("S1"), origin, "sets.S1");
        if (sets.contains("S2")) cfg.set_s2 = int_list(sets.at("S2"), origin, "sets.S2");
        check_elements(cfg.set_s, "sets.S");
        check_elements(cfg.set_t, "sets.T");
        check_elements(cfg.set_s1, "sets.S1");
        check_elements(cfg.set_s2, "sets.S2");
    }

    if (j.contains("chain")) {
        const auto& chain = j.at("chain");
        if (!chain.is_object()) fail(origin, "key 'chain' must be an object");
        if (chain.contains("radii")) {
            cfg.radii = int_list(chain.at("radii"), origin, "chain.radii");
            for (std::size_t i = 0; i < cfg.radii.size(); ++i) {
                if (cfg.radii[i] < 0) fail(origin, "key 'chain.radii': negative radius");
                if (i > 0 && cfg.radii[i] > cfg.radii[i - 1])
                    fail(origin, "key 'chain.radii': radii must be non-increasing");
            }
        }
        if (chain.contains("explicit")) {
            for (const auto& row : chain.at("explicit")) {
                auto elems = int_list(row, origin, "chain.explicit");
                check_elements(elems, "chain.explicit");
                cfg.explicit_chain.push_back(std::move(elems));
            }
        }
        if (cfg.radii.empty() && cfg.explicit_chain.empty())
            fail(origin, "key 'chain' needs 'radii' or 'explicit'");
    }

    if (j.contains("tolerances")) {
        const auto& t = j.at("tolerances");
        if (!t.is_object()) fail(origin, "key 'tolerances' must be an object");
        auto pick = [&](const char* key, double& slot) {
            if (t.contains(key)) {
                slot = t.at(key).get<double>();
                if (slot <= 0) fail(origin, std::string("key 'tolerances.") + key + "' must be positive");
            }
        };
        pick("identity", cfg.tol.identity);
        pick("certify", cfg.tol.certify);
        pick("conclusion", cfg.tol.conclusion);
        pick("hypothesis", cfg.tol.hypothesis);
    }

    if (j.contains("epsilon")) {
        cfg.epsilon = j.at("epsilon").get<double>();
        if (cfg.epsilon < 0) fail(origin, "key 'epsilon' must be >= 0");
    }
    if (j.contains("smoothing_radius")) {
        cfg.smoothing_radius = j.at("smoothing_radius").get<int>();
        if (cfg.smoothing_radius < 1) fail(origin, "key 'smoothing_radius' must be >= 1");
    }
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("trials")) {
        cfg.trials = j.at("trials").get<int>();
        if (cfg.trials < 0) fail(origin, "key 'trials' must be >= 0");
    }
    if (j.contains("k_count")) {
        cfg.k_count = j.at("k_count").get<int>();
        if (cfg.k_count < 1) fail(origin, "key 'k_count' must be >= 1");
    }
    if (j.contains("k_schedule")) {
        const std::string s = j.at("k_schedule").get<std::string>();
        if (s == "linear")
            cfg.schedule = KSchedule::Linear;
        else if (s == "dyadic")
            cfg.schedule = KSchedule::Dyadic;
        else
            fail(origin, "key 'k_schedule' must be 'linear' or 'dyadic'");
    }
    if (j.contains("generator")) {
        cfg.generator = j.at("generator").get<std::string>();
        if (std::find(kGenerators.begin(), kGenerators.end(), cfg.generator) == kGenerators.end())
            fail(origin, "unknown generator '" + cfg.generator + "'");
    }
    return cfg;
}

ExperimentConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(path + ": cannot open config file");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str(), path);
}

// --- builtin scenario library ----------------------------------------------

const std::vector<std::string>& builtin_scenario_names() {
    static const std::vector<std::string> names = {
        "point-on-Z256",   "subgroup-on-Z256", "ap-on-Z256",        "sphere-on-Z16cubed",
        "union-on-Z256",   "rinf-on-Z256",     "convergence-on-Z64", "identities-on-Z2xZ4"};
    return names;
}

ExperimentConfig builtin_scenario(const std::string& name) {
    ExperimentConfig cfg;
    cfg.name = name;
    if (name == "point-on-Z256") {
        cfg.group = Group::cyclic(256);
        cfg.scenario = "point-set";
        cfg.set_s = {0};
        cfg.radii = {64, 32, 16, 8, 4, 2, 1};
        cfg.seed = 2024;
        return cfg;
    }
    if (name == "subgroup-on-Z256") {
        cfg.group = Group::cyclic(256);
        cfg.scenario = "subgroup";
        for (int s = 0; s < 256; s += 2) cfg.set_s.push_back(s);
        cfg.radii = {3, 2, 1, 0};
        cfg.seed = 2025;
        return cfg;
    }
    if (name == "ap-on-Z256") {
        cfg.group = Group::cyclic(256);
        cfg.scenario = "arithmetic-progression";
        for (int s = 8; s < 256; s += 32) cfg.set_s.push_back(s);
        cfg.radii = {8, 4, 2, 1, 0};
        cfg.seed = 2026;
        return cfg;
    }
    if (name == "sphere-on-Z16cubed") {
        cfg.group = Group::abelian({16, 16, 16});
        cfg.scenario = "discrete-sphere";
        // Lattice points with |x|² = R² for R² = 25, signed coordinates.
        for (int idx = 0; idx < cfg.group->order(); ++idx) {
            auto c = cfg.group->coords(idx);
            int norm2 = 0;
            for (std::size_t
                     jdim = 0;
                 jdim < c.size(); ++jdim) {
                const int signedc = std::min(c[jdim], 16 - c[jdim]);
                norm2 += signedc * signedc;
            }
            if (norm2 == 25) cfg.set_s.push_back(idx);
        }
        cfg.radii = {2, 1, 0};
        cfg.seed = 2027;
        return cfg;
    }
    if (name == "union-on-Z256") {
        cfg.group = Group::cyclic(256);
        cfg.scenario = "union";
        for (int s = 62; s <= 66; ++s) cfg.set_s1.push_back(s);
        for (int s = 190; s <= 194; ++s) cfg.set_s2.push_back(s);
        cfg.epsilon = 0.05;
        cfg.smoothing_radius = 16;
        cfg.seed = 2028;
        return cfg;
    }
    if (name == "rinf-on-Z256") {
        cfg.group = Group::cyclic(256);
        cfg.scenario = "point-set";
        cfg.set_s = {0};
        cfg.set_t = {64};
        cfg.radii = {64, 32, 16, 8, 4, 2, 1};
        cfg.seed = 2029;
        return cfg;
    }
    if (name == "convergence-on-Z64") {
        cfg.group = Group::cyclic(64);
        cfg.scenario = "custom";
        cfg.k_count = 64;
        cfg.schedule = KSchedule::Dyadic;
        cfg.generator = "scaling";
        cfg.tol.conclusion = 1e-4;
        cfg.seed = 2030;
        return cfg;
    }
    if (name == "identities-on-Z2xZ4") {
        cfg.group = Group::abelian({2, 4});
        cfg.scenario = "custom";
        cfg.trials = 100;
        cfg.seed = 2031;
        return cfg;
    }
    throw ConfigError("unknown builtin scenario '" + name + "'");
}

// --- smooth test data -------------------------------------------------------

GFunction gaussian_function(const GroupPtr& g, int center, double sigma) {
    if (!g->is_abelian_backend())
        throw std::invalid_argument("gaussian_function: abelian backend required");
    if (sigma <= 0) throw std::invalid_argument("gaussian_function: sigma must be positive");
    const auto& factors = g->factors();
    auto cc = g->coords(center);
    Vec v(g->order());
    for (int x = 0; x < g->order(); ++x) {
        auto cx = g->coords(x);
        double val = 1.0;
        for (std::size_t jdim = 0; jdim < factors.size(); ++jdim) {
            const int n = factors[jdim];
            const double d = cx[jdim] - cc[jdim];
            double theta = 0.0;
            for (int m = -3; m <= 3; ++m) {
                const double t = d + m * static_cast<double>(n);
                theta += std::exp(-t * t / (2.0 * sigma * sigma));
            }
            val *= theta;
        }
        v[x] = val;
    }
    return GFunction(g, std::move(v));
}

GFunction smooth_vanishing_function(const GroupPtr& g, const SubsetIndex& zeros,
                                    std::mt19937_64& rng, int bump_count, double sigma,
                                    int min_dist) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    const int n = g->order();

    if (zeros.size() > n / 8) {
        // Dense constraint set: modulate the complement instead of
        // interpolating (a comb construction vanishing on the set).
        GFunction u = GFunction::zero(g);
        for (int b = 0; b < bump_count; ++b) {
            std::uniform_int_distribution<int> pick(0, n - 1);
            GFunction bump_fn = gaussian_function(g, pick(rng), sigma);
            u += cxd(gauss(rng), gauss(rng)) * bump_fn;
        }
        for (int z : zeros.elements()) u[z] = 0.0;
        const double an = a_norm(u);
        if (an > 0) u *= cxd(1.0 / an, 0.0);
        return u;
    }

    std::vector<int> candidates;
    int dist = min_dist;
    while (true) {
        candidates.clear();
        for (int x = 0; x < n; ++x)
            if (zeros.is_empty() || zeros.distance_to(x) >= dist) candidates.push_back(x);
        if (static_cast<int>(candidates.size()) >= bump_count || dist == 0) break;
        dist /= 2;
    }
    if (candidates.empty()) throw std::invalid_argument("smooth_vanishing_function: no room for bumps");

    GFunction u = GFunction::zero(g);
    for (int b = 0; b < bump_count; ++b) {
        std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
        GFunction bump_fn = gaussian_function(g, candidates[pick(rng)], sigma);
        u += cxd(gauss(rng), gauss(rng)) * bump_fn;
    }

    if (!zeros.is_empty()) {
        // Exact interpolation correction with Gaussians anchored at the
        // constraint points; the system is diagonally dominant.
        const int m = zeros.size();
        std::vector<GFunction> basis;
        basis.reserve(m);
        for (int z : zeros.elements()) basis.push_back(gaussian_function(g, z, sigma));
        Mat mat(m, m);
        Vec rhs(m);
        for (int a = 0; a < m; ++a) {
            rhs[a] = u[zeros.elements()[a]];
            for (int b = 0; b < m; ++b) mat(a, b) = basis[b][zeros.elements()[a]];
        }
        Vec beta = mat.partialPivLu().solve(rhs);
        for (int b = 0; b < m; ++b) u -= beta[b] * basis[b];
        for (int z : zeros.elements()) u[z] = 0.0;
    }
    const double an = a_norm(u);
    if (an > 0) u *= cxd(1.0 / an, 0.0);
    return u;
}

ScenarioData build_scenario_data(const ExperimentConfig& cfg) {
    if (!cfg.group) throw ConfigError(cfg.name + ": no group");
    SubsetIndex S(cfg.group, cfg.set_s.empty() ? std::vector<int>{0} : cfg.set_s);
    SubsetIndex T(cfg.group, cfg.set_t);

    NeighborhoodFamily family;
    if (!cfg.explicit_chain.empty()) {
        std::vector<SubsetIndex> chain;
        for (const auto& row : cfg.explicit_chain) chain.emplace_back(cfg.group, row);
        family = NeighborhoodFamily::from_chain(S, std::move(chain));
    } else {
        std::vector<int> radii = cfg.radii;
        if (radii.empty()) radii = {4, 2, 1, 0};
        family = NeighborhoodFamily::from_radii(S, radii);
    }

    std::mt19937_64 rng(cfg.seed);
    SubsetIndex constraints = S.union_with(T);
    const int n = cfg.group->order();
    const double sigma = std::max(2.0, n >= 256 ? 8.0 : n / 16.0);
    const int min_dist = std::max(8, n / 4);
    GFunction u = smooth_vanishing_function(cfg.group, constraints, rng, 6, sigma, min_dist);
    return ScenarioData{std::move(u), std::move(S), std::move(T), std::move(family)};
}

// --- runners ----------------------------------------------------------------

namespace {

void write_file(const std::string& dir, const std::string& name, const std::string& content) {
    std::filesystem::create_directories(dir);
    std::ofstream out(dir + "/" + name, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + dir + "/" + name);
    out << content;
}

bool want_json(OutputFormat f) { return f != OutputFormat::CsvOnly; }
bool want_csv(OutputFormat f) { return f != OutputFormat::JsonOnly; }

}  // namespace

int run_identities(const ExperimentConfig& cfg, const std::string& out_dir, OutputFormat fmt) {
    AppendixReport appendix = verify_appendix(cfg.group, cfg.trials, cfg.seed, cfg.tol.identity);

    // Canonical-decomposition property suite on unit-norm random inputs.
    std::mt19937_64 rng(cfg.seed + 1);
    double worst_polar = 0.0, worst_podeco = 0.0, worst_anorm = 0.0, worst_recon = 0.0,
           worst_cnorm = 0.0;
    bool p_all_posdef = true;
    for (int t = 0; t < cfg.trials; ++t) {
        GFunction u = GFunction::random(cfg.group, rng);
        const double n2 = norm2(u);
        if (n2 > 0) u *= cxd(1.0 / n2, 0.0);

        PolarDecomposition pd = polar(u);
        p_all_posdef = p_all_posdef && is_positive_definite(pd.p);
        worst_polar = std::max(worst_polar, norm_inf(tilde_fn(u) - act_left(pd.A, pd.p)));
        worst_podeco = std::max(worst_podeco, norm_inf(pd.p - pd.A.check().apply(u)));
        worst_anorm = std::max(worst_anorm, std::abs(a_norm(u) - a_norm(pd.p)));

        CanonicalRep rep = canonical_rep(u);
        worst_recon = std::max(worst_recon, norm_inf(u - convolve(rep.d, rep.c)));
        const double pe = pd.p[cfg.group->identity()].real();
        const double cn = norm2(rep.c);
        worst_cnorm = std::max(worst_cnorm, std::abs(cn * cn - pe));
        worst_cnorm = std::max(worst_cnorm, std::abs(pe - a_norm(u)));
    }
    const double tol = cfg.tol.identity;
    const bool canonical_pass = p_all_posdef && worst_polar <= tol && worst_podeco <= tol &&
                                worst_anorm <= tol && worst_recon <= tol && worst_cnorm <= tol;

    ordered_json j;
    j["scenario"] = cfg.name;
    j["appendix"] = json::parse(appendix.to_json());
    j["canonical"] = {{"trials", cfg.trials},
                      {"absolute_value_positive_definite", p_all_posdef},
                      {"polar_residual", worst_polar},
                      {"podeco_residual", worst_podeco},
                      {"anorm_gap", worst_anorm},
                      {"reconstruction_residual", worst_recon},
                      {"cnorm_identity_gap", worst_cnorm},
                      {"pass", canonical_pass}};
    const bool pass = appendix.pass && canonical_pass;
    j["pass"] = pass;
    if (want_json(fmt)) write_file(out_dir, "identities.json", j.dump(2) + "\n");
    return pass ? 0 : 1;
}

int run_certificate(const ExperimentConfig& cfg, const std::string& out_dir, OutputFormat fmt) {
    ScenarioData data = build_scenario_data(cfg);
    CertificateTrace trace = residual_certificate(data.u, data.S, data.family, cfg.tol.certify);
    ReconstructResult recon = reconstruct_sequence(data.u, data.S, data.family);

    bool invariants_ok = trace.monotone && recon.all_vanish && recon.all_bounded;

    ordered_json j;
    j["scenario"] = cfg.name;
    j["verdict"] = json::parse(trace.verdict_json());
    j["reconstruct"] = {{"all_vanish", recon.all_vanish},
                        {"all_bounded", recon.all_bounded},
                        {"a_dist", recon.a_dist},
                        {"a_bound", recon.a_bound}};
    if (!data.T.is_empty()) {
        CertificateTrace rinf = r_infinity_experiment(data.u, data.S, data.T, data.family,
                                                      cfg.tol.certify);
        invariants_ok = invariants_ok && rinf.monotone;
        j["r_infinity"] = json::parse(rinf.verdict_json());
        if (want_csv(fmt)) write_file(out_dir, "rinf.csv", rinf.to_csv());
    }
    j["invariants_ok"] = invariants_ok;
    if (want_csv(fmt)) write_file(out_dir, "certificate.csv", trace.to_csv());
    if (want_json(fmt)) write_file(out_dir, "certificate.json", j.dump(2) + "\n");
    return invariants_ok ? 0 : 1;
}

int run_convergence(const ExperimentConfig& cfg, const std::string& out_dir, OutputFormat fmt) {
    std::mt19937_64 rng(cfg.seed);
    GFunction u = GFunction::random(cfg.group, rng);
    const double an = a_norm(u);
    if (an > 0) u *= cxd(1.0 / an, 0.0);

    std::vector<double> ks = k_grid(cfg.k_count, cfg.schedule);
    std::vector<GFunction> seq;
    if (cfg.generator == "scaling") {
        GFunction pert = GFunction::random(cfg.group, rng);
        const double pn = a_norm(pert);
        if (pn > 0) pert *= cxd(1.0 / pn, 0.0);
        seq = scaling_sequence(u, pert, ks);
    } else if (cfg.generator == "anorm-drift") {
        std::uniform_int_distribution<int> pick(1, cfg.group->order() - 1);
        seq = anorm_drift_sequence(u, pick(rng), 0.7, ks);
    } else {
        seq = phase_jump_sequence(u, 1.0, cfg.k_count);
    }

    ConvergenceOptions opts;
    opts.conclusion_tol = cfg.tol.conclusion;
    opts.hypothesis_tol = cfg.tol.hypothesis;
    ConvergenceTrace trace = verify_l2l2(u, seq, opts, ks);

    ordered_json j;
    j["scenario"] = cfg.name;
    j["generator"] = cfg.generator;
    j["hyp_anorm"] = trace.hyp_anorm;
    j["hyp_l2"] = trace.hyp_l2;
    j["hyp_weak"] = trace.hyp_weak;
    j["hypotheses_hold"] = trace.hypotheses_hold;
    j["concluded"] = trace.concluded;
    j["tail_monotone_c"] = trace.tail_monotone_c;
    j["tail_monotone_d"] = trace.tail_monotone_d;
    j["pass"] = trace.pass;
    if (want_csv(fmt)) write_file(out_dir, "convergence.csv", trace.to_csv());
    if (want_json(fmt)) write_file(out_dir, "convergence.json", j.dump(2) + "\n");
    return trace.pass ? 0 : 1;
}

int run_union(const ExperimentConfig& cfg, const std::string& out_dir, OutputFormat fmt) {
    if (cfg.set_s1.empty() || cfg.set_s2.empty())
        throw ConfigError(cfg.name + ": union scenario needs sets.S1 and sets.S2");
    SubsetIndex S1(cfg.group, cfg.set_s1);
    SubsetIndex S2(cfg.group, cfg.set_s2);

    std::mt19937_64 rng(cfg.seed);
    const int n = cfg.group->order();
    const double sigma = std::max(2.0, n >= 256 ? 8.0 : n / 16.0);
    GFunction u = smooth_vanishing_function(cfg.group, S1.union_with(S2), rng, 6, sigma,
                                            std::max(8, n / 6));
    ApproxOracle oracle = default_oracle(cfg.group, cfg.smoothing_radius);
    UnionReport construct = union_construct(oracle, oracle, S1, S2, u, cfg.epsilon);

    GFunction u_k1 = smooth_vanishing_function(cfg.group, S1, rng, 6, sigma, std::max(8, n / 6));
    UnionReport decompose = decompose_from_union(oracle, oracle, S1, S2, u_k1, cfg.epsilon);

    ordered_json j;
    j["scenario"] = cfg.name;
    j["construct"] = json::parse(construct.to_json());
    j["decompose"] = json::parse(decompose.to_json());
    const bool pass = construct.success && decompose.success;
    j["pass"] = pass;
    if (want_json(fmt)) write_file(out_dir, "union.json", j.dump(2) + "\n");
    return pass ? 0 : 1;
}

}  // namespace aglab
