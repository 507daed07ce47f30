#pragma once

#include "aglab/gfunction.hpp"

namespace aglab {

/// Function on the dual of a finite abelian group, indexed by characters in
/// the same mixed-radix index space as the group itself.
///
/// Conventions (pinned by the identity tests):
///   χ_ξ(s) = exp(2πi Σ_j ξ_j s_j / n_j)
///   f̂(ξ)  = Σ_s f(s) conj(χ_ξ(s))          (forward)
///   f(s)   = (1/N) Σ_ξ f̂(ξ) χ_ξ(s)         (inverse)
/// so that (f∗g)ˆ = f̂·ĝ, Plancherel reads ⟨f,g⟩ = (1/N) Σ f̂ conj(ĝ),
/// and f is positive definite iff f̂ ≥ 0.
class DualFunction {
public:
    DualFunction() = default;
    DualFunction(GroupPtr group, Vec values);

    const GroupPtr& group() const { return group_; }
    int size() const { return static_cast<int>(values_.size()); }
    const Vec& values() const { return values_; }
    Vec& values() { return values_; }
    cxd operator[](int i) const { return values_[i]; }
    cxd& operator[](int i) { return values_[i]; }

private:
    GroupPtr group_;
    Vec values_;
};

DualFunction fourier(const GFunction& f);
GFunction inv_fourier(const DualFunction& F);

/// Plancherel pairing (1/N) Σ_ξ F(ξ) conj(G(ξ)).
cxd plancherel_inner(const DualFunction& F, const DualFunction& G);

/// χ_ξ evaluated at s.
cxd character_value(const Group& g, int xi, int s);

/// Index of the character ξ ↦ conj(χ_ξ), i.e. the dual inverse -ξ.
int dual_negate(const Group& g, int xi);

}  // namespace aglab
