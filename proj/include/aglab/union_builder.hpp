#pragma once

#include <functional>
#include <string>

#include "aglab/synthesis.hpp"

namespace aglab {

/// Result of one approximation-oracle call: g ∈ j(S) ∩ k(T) with
/// ‖f−g‖_A < ε. neighborhood_radius reports the ball around S on which g
/// vanishes; postconditions are re-verified by the callers, never trusted.
struct OracleResult {
    GFunction g;
    double a_dist = 0.0;
    int neighborhood_radius = 0;
    bool success = false;
    std::string message;
};

/// Contract: (S, T, f ∈ k(S∪T), ε) → g ∈ j(S) ∩ k(T), ‖f−g‖_A < ε.
using ApproxOracle = std::function<OracleResult(const SubsetIndex& S, const SubsetIndex& T,
                                                const GFunction& f, double eps)>;

/// w = 1 on `ones`, w = 0 on `zeros`, linearly interpolated in the word
/// metric in between (a distance tent; for a single point this is the
/// Fejér triangle). Both constraint sets are met exactly.
/// Precondition: ball(ones, 1) ∩ zeros = ∅.
struct BumpFunction {
    GFunction w;
    SubsetIndex ones;
    SubsetIndex zeros;
    double a_norm_value = 0.0;
};

BumpFunction bump(const GroupPtr& g, const SubsetIndex& ones, const SubsetIndex& zeros);

/// Cutoff-multiplication oracle on lattice groups: g = f·(1 − w_r) with
/// w_r a bump equal to 1 on ball(S, r) and supported in ball(S, 2r),
/// searching r downward over the geometric grid {r₀, r₀/2, ..., 1} until
/// ‖f·w_r‖_A < ε. Failure (no admissible radius) is reported, not silent.
ApproxOracle default_oracle(const GroupPtr& g, int smoothing_radius);

struct UnionReport {
    GFunction result;
    double a_dist = 0.0;
    double bound = 0.0;  // 2ε
    int radius1 = 0;
    int radius2 = 0;
    bool success = false;
    std::string failure_stage;
    bool bound_verified = false;
    bool vanishing_verified = false;
    std::string to_json() const;
};

/// Two-stage construction: u₁ ∈ j(S₁)∩k(null u) from oracle₁, then
/// u₂ ∈ j(S₂)∩k(null u₁) from oracle₂; u₂ vanishes near S₁ ∪ S₂ and
/// ‖u−u₂‖_A < 2ε. Requires u ∈ k(S₁∪S₂).
UnionReport union_construct(const ApproxOracle& oracle1, const ApproxOracle& oracle2,
                            const SubsetIndex& S1, const SubsetIndex& S2, const GFunction& u,
                            double eps);

/// The converse direction: from an S₁∩S₂ oracle and an S₁∪S₂ oracle build
/// g' + w·g ∈ j(S₁) ∩ k(null u) with ‖u − (g'+wg)‖_A < 2ε, via
/// C = S₂ ∩ supp(g), a bump w (1 on C, 0 near S₁) and h = g − gw.
/// Requires u ∈ k(S₁).
UnionReport decompose_from_union(const ApproxOracle& oracle_intersection,
                                 const ApproxOracle& oracle_union, const SubsetIndex& S1,
                                 const SubsetIndex& S2, const GFunction& u, double eps);

}  // namespace aglab
