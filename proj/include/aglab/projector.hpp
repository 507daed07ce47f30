#pragma once

#include <optional>
#include <string>

#include "aglab/gfunction.hpp"
#include "aglab/subset.hpp"

namespace aglab {

/// Diagnostics of one projection solve onto Λ(S·c) = span{λ(s)c : s ∈ S}.
/// residual_norm is ‖P_{S·c}(d)‖₂, the quantity driving all certificates.
struct ProjectionReport {
    double residual_norm = 0.0;
    int gram_rank = 0;
    double gram_condition = 0.0;
    std::string solver;  // "dense-pseudoinverse" | "iterative"
    int iterations = 0;
    double tolerance_achieved = 0.0;
    bool fallback = false;
    std::string to_json() const;
};

/// Gram[i,j] = ⟨λ(s_j)c, λ(s_i)c⟩ = p(s_j⁻¹ s_i) with p = c∗c̃.
Mat gram_matrix(const GFunction& c, const SubsetIndex& S);

/// b_i = ⟨d, λ(s_i)c⟩, i.e. (d∗c̃) sampled on S. When (c, d) come from a
/// canonical representation these are exactly the values u(s_i).
Vec translate_inner_vector(const GFunction& c, const GFunction& d, const SubsetIndex& S);

/// Orthogonal projection of d onto Λ(S·c) via the Gram normal equations,
/// rank-deficient systems handled by a spectral pseudoinverse with relative
/// cutoff 1e-10·λ_max.
std::pair<GFunction, ProjectionReport> project(const GFunction& c, const GFunction& d,
                                               const SubsetIndex& S);

/// Conjugate-gradient solve of the same system with FFT-accelerated Gram
/// matvecs (abelian backend). Falls back to the dense path on stagnation
/// or when max_iter is exhausted; the report records the fallback.
std::pair<GFunction, ProjectionReport> project_fast(const GFunction& c, const GFunction& d,
                                                    const SubsetIndex& S, double tol = 1e-10,
                                                    int max_iter = 0);

/// Duality check ‖P_{S·c}(d)‖₂ ≤ ‖ψ‖_∞ ‖P_{S⁻¹·d}(c)‖₂ for d̂ = ψ·ĉ;
/// equality when |ψ| = 1 on supp(ĉ).
struct LtwoLemmaReport {
    double lhs = 0.0;
    double rhs = 0.0;
    double psi_bound = 0.0;
    bool pass = false;
    std::string to_json() const;
};

/// d is built as d̂ = ψ·ĉ from the supplied symbol ψ.
LtwoLemmaReport check_ltwo_lemma(const GFunction& c, const Vec& psi, const SubsetIndex& S);

/// Variant taking an explicit d; throws unless d̂ = ψ·ĉ for some bounded ψ
/// (in particular d̂ must vanish wherever ĉ does).
LtwoLemmaReport check_ltwo_lemma(const GFunction& c, const GFunction& d, double psi_bound,
                                 const SubsetIndex& S);

}  // namespace aglab
