#pragma once

#include "aglab/fourier.hpp"
#include "aglab/gfunction.hpp"

namespace aglab {

/// Operator in the group von Neumann algebra VN(G) = span{λ(t)}.
///
/// Two backends:
///  - abelian symbol m: acts as (Tf)ˆ = m·f̂, i.e. eigenvalue m(ξ) on χ_ξ;
///  - general dense matrix commuting with all right translations.
class VNOperator {
public:
    static VNOperator identity(const GroupPtr& g);
    static VNOperator lambda(const GroupPtr& g, int t);
    static VNOperator from_symbol(const GroupPtr& g, Vec symbol);
    /// `validate` checks commutation with right translations (residual 1e-10).
    static VNOperator from_matrix(const GroupPtr& g, Mat m, bool validate = true);
    /// Random contraction: random symbol, or a random combination of
    /// left translations, normalized to unit operator norm.
    static VNOperator random(const GroupPtr& g, std::mt19937_64& rng);

    const GroupPtr& group() const { return group_; }
    bool is_symbol() const { return is_symbol_; }
    const Vec& symbol() const;
    const Mat& matrix() const;

    GFunction apply(const GFunction& f) const;
    VNOperator adjoint() const;    // T*
    VNOperator bar() const;        // T̄(f) = conj(T(conj f))
    VNOperator check() const;      // Ť, the linear involution ⟨Ť,u⟩ = ⟨T,ǔ⟩
    VNOperator compose(const VNOperator& other) const;  // this ∘ other
    VNOperator scaled(cxd a) const;
    VNOperator plus(const VNOperator& other) const;
    double op_norm() const;

    /// Max residual ‖Tρ(x) − ρ(x)T‖_F over right translations ρ(x)
    /// (matrix backend; 0 by construction for symbols).
    double vn_membership_residual() const;

private:
    VNOperator() = default;
    GroupPtr group_;
    bool is_symbol_ = true;
    Vec symbol_;
    Mat matrix_;
};

/// Density of u in VN(G): D_u = (1/N) Σ_t u(t) λ(t⁻¹), the unique element
/// of VN(G) with tr(λ(s) D_u) = u(s). Realizes the duality A(G)* ≃ VN(G)
/// via ⟨u, T⟩ = tr(T D_u).
Mat vn_density(const GFunction& u);
/// Abelian fast form: eigenvalue of D_u on χ_ξ, namely (1/N) û(−ξ).
Vec vn_density_symbol(const GFunction& u);
/// Inverse of vn_density: u(s) = tr(λ(s) D).
GFunction function_from_density(const GroupPtr& g, const Mat& density);
GFunction function_from_density_symbol(const GroupPtr& g, const Vec& sym);

/// Duality pairing ⟨u, T⟩ = tr(T D_u); equals ⟨Tf, g⟩ for u = γ_{f,g}.
cxd vn_pairing(const GFunction& u, const VNOperator& T);

/// γ_{f,g}(t) = ⟨λ(t)f, g⟩ = (ḡ∗f̌)(t).
GFunction coefficient(const GFunction& f, const GFunction& g);

/// ‖u‖_{A(G)} = inf{‖f‖₂‖g‖₂ : u = ḡ∗f̌}: (1/N)Σ|û| on the abelian
/// backend, trace norm of D_u in general.
double a_norm(const GFunction& u);

// Module actions of VN(G) on A(G):
//   ⟨S, T·u⟩ = ⟨ST, u⟩   realized as  D_{T·u} = T D_u,
//   ⟨S, u·T⟩ = ⟨TS, u⟩   realized as  D_{u·T} = D_u T,
// and Eymard's action T∘u with ⟨S, T∘u⟩ = ⟨ŤS, u⟩, i.e. D_{T∘u} = D_u Ť.
GFunction act_left(const VNOperator& T, const GFunction& u);
GFunction act_right(const GFunction& u, const VNOperator& T);
GFunction act_eymard(const VNOperator& T, const GFunction& u);

VNOperator check_op(const VNOperator& T);
VNOperator bar_op(const VNOperator& T);

}  // namespace aglab
