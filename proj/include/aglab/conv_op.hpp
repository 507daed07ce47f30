#pragma once

#include <memory>
#include <vector>

#include "aglab/decomposition.hpp"

namespace aglab {

/// The right-convolution operator ρ(b): f ↦ f∗b. Diagonal backend on
/// abelian groups (eigenvalue b̂(ξ) on χ_ξ), dense matrix otherwise.
class ConvOperator {
public:
    explicit ConvOperator(GFunction b);

    const GFunction& kernel() const { return b_; }
    const GroupPtr& group() const { return b_.group(); }
    bool is_diagonal() const { return diagonal_; }
    const Vec& eigenvalues() const;  // diagonal backend: b̂
    const Mat& dense() const;

    GFunction apply(const GFunction& f) const;
    bool is_psd() const { return is_positive_definite(b_); }

    /// Real spectrum of a Hermitian (b = b̃) operator, clipped at 0 from
    /// below for PSD use.
    std::vector<double> real_spectrum() const;

private:
    GFunction b_;
    bool diagonal_;
    Vec eigs_;
    mutable std::shared_ptr<Mat> dense_;
};

/// ρ(p)^{1/2} = ρ(positive_sqrt(p)); throws on non-PSD input.
ConvOperator sqrt_op(const ConvOperator& op);

/// Exact inverse of ρ(b) ± i·I. For PSD b the operator norm is ≤ 1.
class ResolventOp {
public:
    ResolventOp(const ConvOperator& op, int sign);
    GFunction apply(const GFunction& f) const;
    double op_norm() const;
    int sign() const { return sign_; }

private:
    GroupPtr group_;
    int sign_;
    bool diagonal_;
    Vec inv_eigs_;
    Mat inv_dense_;
};

ResolventOp resolvent(const ConvOperator& op, int sign);

/// The spectral split of the square root: with
///   h(t) = √t − t (t ≤ 1), 0 (t ≥ 1)  and  q(t) = 1 (t ≤ 1), 1/√t (t ≥ 1)
/// one has √t = h(t) + q(t)·t, both functions in C₀([0,∞)), ‖q‖_∞ = 1.
/// Returns (h(op), q(op)) as right-convolution operators.
double hq_h(double t);
double hq_q(double t);
std::pair<ConvOperator, ConvOperator> hq_split(const ConvOperator& op);

/// Approximates q by a polynomial in the two resolvents (x±i)^{-1} and
/// compares q(op)f against the polynomial evaluated by repeated resolvent
/// solves. The fit is least-squares on the joint spectrum of the operators;
/// epsilon_fit is the max fit error there, grid_sup_error the sup over a
/// dense grid on [0, spectral_radius] (diagnostic only). The verified
/// contract is err ≤ 3·epsilon_fit·‖f‖₂ (plus a roundoff floor).
struct SWProbeReport {
    int degree = 0;
    double spectral_radius = 0.0;
    double epsilon_fit = 0.0;
    double grid_sup_error = 0.0;
    std::vector<double> op_errors;
    double bound = 0.0;
    bool pass_claimed = false;
    bool pass = false;
};

SWProbeReport stone_weierstrass_probe(const std::vector<ConvOperator>& ops,
                                      const GFunction& f, int degree);

}  // namespace aglab
