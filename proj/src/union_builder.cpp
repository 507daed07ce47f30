#include "aglab/union_builder.hpp"

#include <json.hpp>

#include <stdexcept>

namespace aglab {

namespace {

std::vector<int> radius_grid(int r0) {
    std::vector<int> grid;
    int r = std::max(1, r0);
    while (r > 1) {
        grid.push_back(r);
        r /= 2;
    }
    grid.push_back(1);
    return grid;
}

/// Independent re-check of the oracle contract; returns an error string on
/// violation.
std::string verify_oracle_result(const SubsetIndex& S, const SubsetIndex& T,
                                 const GFunction& f, double eps, const OracleResult& res) {
    if (!in_kernel(res.g, S.ball(res.neighborhood_radius)))
        return "returned g does not vanish on the reported neighborhood of S";
    if (!in_kernel(res.g, T)) return "returned g does not vanish on T";
    if (a_norm(f - res.g) >= eps) return "returned g misses the A-norm target";
    return "";
}

}  // namespace

BumpFunction bump(const GroupPtr& g, const SubsetIndex& ones, const SubsetIndex& zeros) {
    require_same_group(g, ones.group(), "bump");
    require_same_group(g, zeros.group(), "bump");
    if (ones.is_empty()) {
        BumpFunction b{GFunction::zero(g), ones, zeros, 0.0};
        return b;
    }
    if (!ones.ball(1).intersect(zeros).is_empty())
        throw std::invalid_argument("bump: ball(ones, 1) meets the zero set");

    // gap = distance from the ones-region to the zero set (∞ when empty).
    int gap = -1;
    for (int z : zeros.elements()) {
        const int d = ones.distance_to(z);
        if (gap < 0 || d < gap) gap = d;
    }
    Vec v(g->order());
    for (int x = 0; x < g->order(); ++x) {
        const int d = ones.distance_to(x);
        double val;
        if (gap < 0)
            val = 1.0;  // no zero constraints
        else
            val = std::max(0.0, 1.0 - static_cast<double>(d) / gap);
        v[x] = val;
    }
    GFunction w(g, std::move(v));
    BumpFunction b{w, ones, zeros, a_norm(w)};
    return b;
}

ApproxOracle default_oracle(const GroupPtr& g, int smoothing_radius) {
    if (!g->is_abelian_backend())
        throw std::invalid_argument("default_oracle: lattice (abelian) group required");
    if (smoothing_radius < 1)
        throw std::invalid_argument("default_oracle: smoothing radius must be >= 1");
    return [g, smoothing_radius](const SubsetIndex& S, const SubsetIndex& T, const GFunction& f,
                                 double eps) -> OracleResult {
        OracleResult res;
        require_same_group(g, f.group(), "default_oracle");
        if (!in_kernel(f, S.union_with(T))) {
            res.message = "f does not vanish on S ∪ T";
            return res;
        }
        if (S.is_empty()) {
            res.g = f;
            res.a_dist = 0.0;
            res.neighborhood_radius = smoothing_radius;
            res.success = eps > 0.0;
            if (!res.success) res.message = "strict inequality unattainable at eps = 0";
            return res;
        }
        for (int r : radius_grid(smoothing_radius)) {
            BumpFunction w = bump(g, S.ball(r), S.ball(2 * r).complement());
            GFunction cut = pointwise_mul(f, w.w);
            const double err = a_norm(cut);
            GFunction candidate = f - cut;
            if (err < eps && in_kernel(candidate, T)) {
                res.g = std::move(candidate);
                res.a_dist = err;
                res.neighborhood_radius = r;
                res.success = true;
                return res;
            }
        }
        res.message = "no admissible radius in the grid reaches the target";
        return res;
    };
}

UnionReport union_construct(const ApproxOracle& oracle1, const ApproxOracle& oracle2,
                            const SubsetIndex& S1, const SubsetIndex& S2, const GFunction& u,
                            double eps) {
    require_same_group(S1.group(), S2.group(), "union_construct");
    require_same_group(S1.group(), u.group(), "union_construct");
    if (!in_kernel(u, S1.union_with(S2)))
        throw std::invalid_argument("union_construct: u does not vanish on S1 ∪ S2");

    UnionReport report;
    report.bound = 2.0 * eps;
    report.result = GFunction::zero(u.group());

    OracleResult r1 = oracle1(S1, null_set(u), u, eps);
    if (!r1.success) {
        report.failure_stage = "oracle1: " + r1.message;
        return report;
    }
    if (auto err = verify_oracle_result(S1, null_set(u), u, eps, r1); !err.empty()) {
        report.failure_stage = "oracle1 postcondition: " + err;
        return report;
    }
    report.radius1 = r1.neighborhood_radius;

    GFunction u2 = r1.g;
    if (S1.elements() == S2.elements()) {
        report.radius2 = r1.neighborhood_radius;  // single oracle call suffices
    } else {
        OracleResult r2 = oracle2(S2, null_set(r1.g), r1.g, eps);
        if (!r2.success) {
            report.failure_stage = "oracle2: " + r2.message;
            return report;
        }
        if (auto err = verify_oracle_result(S2, null_set(r1.g), r1.g, eps, r2); !err.empty()) {
            report.failure_stage = "oracle2 postcondition: " + err;
            return report;
        }
        report.radius2 = r2.neighborhood_radius;
        u2 = r2.g;
    }

    report.a_dist = a_norm(u - u2);
    report.bound_verified = report.a_dist < report.bound;
    report.vanishing_verified =
        in_kernel(u2, S1.ball(report.radius1).union_with(S2.ball(report.radius2)));
    report.result = std::move(u2);
    report.success = report.bound_verified && report.vanishing_verified;
    if (!report.success) report.failure_stage = "verification";
    return report;
}

UnionReport decompose_from_union(const ApproxOracle& oracle_intersection,
                                 const ApproxOracle& oracle_union, const SubsetIndex& S1,
                                 const SubsetIndex& S2, const GFunction& u, double eps) {
    require_same_group(S1.group(), S2.group(), "decompose_from_union");
    require_same_group(S1.group(), u.group(), "decompose_from_union");
    if (!in_kernel(u, S1))
        throw std::invalid_argument("decompose_from_union: u does not vanish on S1");

    UnionReport report;
    report.bound = 2.0 * eps;
    report.result = GFunction::zero(u.group());

    OracleResult rg = oracle_intersection(S1.intersect(S2), null_set(u), u, eps);
    if (!rg.success) {
        report.failure_stage = "intersection oracle: " + rg.message;
        return report;
    }
    if (auto err = verify_oracle_result(S1.intersect(S2), null_set(u), u, eps, rg);
        !err.empty()) {
        report.failure_stage = "intersection oracle postcondition: " + err;
        return report;
    }
    const GFunction& g_fn = rg.g;

    SubsetIndex C = S2.intersect(supp_set(g_fn));
    GFunction w = GFunction::zero(u.group());
    if (!C.is_empty()) {
        try {
            w = bump(u.group(), C, S1.ball(1)).w;
        } catch (const std::invalid_argument& e) {
            report.failure_stage = std::string("bump construction: ") + e.what();
            return report;
        }
    }
    GFunction wg = pointwise_mul(w, g_fn);
    GFunction h = g_fn - wg;  // vanishes on C and on null(g) ⊇ S1, hence on S1 ∪ S2

    OracleResult rgp = oracle_union(S1.union_with(S2), null_set(h), h, eps);
    if (!rgp.success) {
        report.failure_stage = "union oracle: " + rgp.message;
        return report;
    }
    if (auto err = verify_oracle_result(S1.union_with(S2), null_set(h), h, eps, rgp);
        !err.empty()) {
        report.failure_stage = "union oracle postcondition: " + err;
        return report;
    }

    GFunction result = rgp.g + wg;
    report.radius1 = C.is_empty() ? rgp.neighborhood_radius : std::min(1, rgp.neighborhood_radius);
    report.radius2 = rgp.neighborhood_radius;
    report.a_dist = a_norm(u - result);
    report.bound_verified = report.a_dist < report.bound;
    // g' vanishes near S1 ∪ S2 and w·g vanishes on ball(S1, 1).
    report.vanishing_verified = in_kernel(result, S1.ball(report.radius1)) &&
                                in_kernel(result, null_set(u));
    report.result = std::move(result);
    report.success = report.bound_verified && report.vanishing_verified;
    if (!report.success) report.failure_stage = "verification";
    return report;
}

std::string UnionReport::to_json() const {
    nlohmann::ordered_json j;
    j["success"] = success;
    j["a_dist"] = a_dist;
    j["bound"] = bound;
    j["radius1"] = radius1;
    j["radius2"] = radius2;
    j["bound_verified"] = bound_verified;
    j["vanishing_verified"] = vanishing_verified;
    j["failure_stage"] = failure_stage;
    return j.dump(2) + "\n";
}

}  // namespace aglab
