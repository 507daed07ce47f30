#include "aglab/appendix.hpp"

#include <json.hpp>

#include <stdexcept>

namespace aglab {

namespace {

GFunction unit_random(const GroupPtr& g, std::mt19937_64& rng) {
    GFunction f = GFunction::random(g, rng);
    const double n = norm2(f);
    if (n > 0) f *= cxd(1.0 / n, 0.0);
    return f;
}

double diff_inf(const GFunction& a, const GFunction& b) { return norm_inf(a - b); }

}  // namespace

AppendixReport verify_appendix(const GroupPtr& g, int trials, std::uint64_t seed,
                               double tolerance) {
    if (trials < 0) throw std::invalid_argument("verify_appendix: trials must be >= 0");
    AppendixReport report;
    report.trials = trials;
    report.tolerance = tolerance;
    const char* names[8] = {"leri",      "check", "tilde", "tista",
                            "inversion", "eyac",  "leey",  "l2ag"};
    for (int i = 0; i < 8; ++i) report.identities[i].name = names[i];

    std::mt19937_64 rng(seed);
    for (int trial = 0; trial < trials; ++trial) {
        GFunction f = unit_random(g, rng);
        GFunction gg = unit_random(g, rng);
        VNOperator T = VNOperator::random(g, rng);
        GFunction u = coefficient(f, gg);
        auto& res = report.identities;

        // leri
        double r = diff_inf(act_left(T, u), coefficient(T.apply(f), gg));
        r = std::max(r, diff_inf(act_right(u, T), coefficient(f, T.adjoint().apply(gg))));
        res[0].max_residual = std::max(res[0].max_residual, r);

        // check
        r = diff_inf(check_fn(u), coefficient(bar_fn(gg), bar_fn(f)));
        res[1].max_residual = std::max(res[1].max_residual, r);

        // tilde
        r = diff_inf(tilde_fn(u), coefficient(gg, f));
        res[2].max_residual = std::max(res[2].max_residual, r);

        // tista: compare actions on a probe vector.
        GFunction h = unit_random(g, rng);
        r = diff_inf(T.check().apply(h), T.bar().adjoint().apply(h));
        res[3].max_residual = std::max(res[3].max_residual, r);

        // inversion, both forms
        r = diff_inf(tilde_fn(act_right(u, T)), act_left(T.adjoint(), tilde_fn(u)));
        r = std::max(r, diff_inf(tilde_fn(act_left(T, u)), act_right(tilde_fn(u), T.adjoint())));
        res[4].max_residual = std::max(res[4].max_residual, r);

        // eyac: density route vs coefficient route
        r = diff_inf(act_eymard(T, u), coefficient(f, T.bar().apply(gg)));
        res[5].max_residual = std::max(res[5].max_residual, r);

        // leey: density route for T∘u vs coefficient route for u·Ť
        r = diff_inf(act_eymard(T, u), coefficient(f, T.check().adjoint().apply(gg)));
        res[6].max_residual = std::max(res[6].max_residual, r);

        // l2ag: pointwise operator application vs module action
        r = diff_inf(T.apply(u), act_right(u, T.check()));
        res[7].max_residual = std::max(res[7].max_residual, r);
    }

    for (auto& id : report.identities) {
        id.pass = id.max_residual <= tolerance;
        report.pass = report.pass && id.pass;
    }
    return report;
}

std::string AppendixReport::to_json() const {
    nlohmann::ordered_json j;
    j["trials"] = trials;
    j["tolerance"] = tolerance;
    j["pass"] = pass;
    for (const auto& id : identities)
        j["identities"][id.name] = {{"max_residual", id.max_residual}, {"pass", id.pass}};
    return j.dump(2) + "\n";
}

}  // namespace aglab
