#pragma once

#include <string>

#include "aglab/vn.hpp"

namespace aglab {

/// Dense matrix of the right-convolution operator f ↦ f∗b,
/// entries R[t][s] = b(s⁻¹ t). Hermitian iff b = b̃, PSD iff b is of
/// positive type.
Mat right_conv_matrix(const GFunction& b);

/// Positive definiteness test: b̂ ≥ −tol entrywise on the abelian
/// backend, min eigenvalue of the right-convolution matrix ≥ −tol in
/// general; tol = tol_scale·‖f‖_∞.
bool is_positive_definite(const GFunction& f, double tol_scale = 1e-10);

/// The positive square root: the unique function c of positive type with
/// c∗c = c∗c̃ = p. Abelian backend: ĉ = √p̂; general: c = R_p^{1/2} δ_e.
/// Throws if p is not positive definite.
GFunction positive_sqrt(const GFunction& p);

/// Polar decomposition data of ũ: the unique pair (A, p) with A a partial
/// isometry in VN(G), p positive definite, ũ = A·p, p = A*·ũ and
/// ‖u‖_A = ‖p‖_A. On the kernel of the absolute value A is extended by
/// zero (minimal partial isometry).
struct PolarDecomposition {
    GFunction u;   // the decomposed element
    GFunction p;   // absolute value, positive definite
    VNOperator A;  // partial isometry
};

PolarDecomposition polar(const GFunction& u);

/// Canonical representation u(s) = ⟨d, λ(s)c⟩ = (d∗c)(s) with
/// c = positive_sqrt(p) of positive type and d = Ā(c), so that
/// ‖c‖₂² = ‖d‖₂² = p(e) = ‖u‖_A. On the abelian backend d̂ = ψ·ĉ with
/// ψ = û/|û| on supp(ĉ) and ψ = 0 off it.
struct CanonicalRep {
    GFunction c;
    GFunction d;
    Vec psi;            // abelian backend only
    bool has_psi = false;
};

CanonicalRep canonical_rep(const GFunction& u);

/// Monte-Carlo check of right positivity: ⟨η∗p, η⟩ ≥ 0 for unit-norm
/// random η and positive definite p.
struct RightPositivityReport {
    int trials = 0;
    double min_real = 0.0;
    double max_abs_imag = 0.0;
    bool pass = true;
    std::string to_json() const;
};

RightPositivityReport right_positivity_check(const GFunction& p, int trials,
                                             std::uint64_t seed = 7);

/// Smallest singular value of f ↦ f∗p + i·f. Always ≥ 1 for positive
/// definite p (eigenvalues p̂(ξ)+i have modulus ≥ 1), which witnesses the
/// density of {f∗p + if}.
double density_check(const GFunction& p);

}  // namespace aglab
