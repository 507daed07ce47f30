#pragma once

#include <Eigen/Dense>
#include <random>

#include "aglab/group.hpp"

namespace aglab {

using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

/// Complex-valued function on a finite group; the carrier for elements of
/// C(G), L²(G) and A(G), which all coincide here. Haar measure is counting
/// measure, so every integral below is a plain sum over the group.
class GFunction {
public:
    GFunction() = default;
    GFunction(GroupPtr group, Vec values);

    static GFunction zero(const GroupPtr& g);
    static GFunction constant(const GroupPtr& g, cxd value);
    static GFunction delta(const GroupPtr& g, int t);
    /// Independent standard complex Gaussian entries.
    static GFunction random(const GroupPtr& g, std::mt19937_64& rng);

    const GroupPtr& group() const { return group_; }
    int size() const { return static_cast<int>(values_.size()); }
    const Vec& values() const { return values_; }
    Vec& values() { return values_; }
    cxd operator[](int i) const { return values_[i]; }
    cxd& operator[](int i) { return values_[i]; }

    GFunction& operator+=(const GFunction& o);
    GFunction& operator-=(const GFunction& o);
    GFunction& operator*=(cxd a);

private:
    GroupPtr group_;
    Vec values_;
};

GFunction operator+(GFunction a, const GFunction& b);
GFunction operator-(GFunction a, const GFunction& b);
GFunction operator*(cxd a, GFunction f);

/// Pointwise product (the multiplication of A(G) as a function algebra).
GFunction pointwise_mul(const GFunction& a, const GFunction& b);

// The four involutions: ǔ(s) = u(s⁻¹), ũ(s) = conj(u(s⁻¹)), ū = conj(u),
// u* = conj(u(s⁻¹)) Δ(s⁻¹). Finite groups are unimodular (Δ ≡ 1), so
// star_fn coincides with tilde_fn; both are kept for interface parity.
GFunction check_fn(const GFunction& f);
GFunction tilde_fn(const GFunction& f);
GFunction bar_fn(const GFunction& f);
GFunction star_fn(const GFunction& f);

/// Left translation (λ(t)f)(s) = f(t⁻¹ s).
GFunction translate(int t, const GFunction& f);

/// ⟨f, g⟩ = Σ_s f(s) conj(g(s)); conjugate-linear in the second argument.
cxd inner(const GFunction& f, const GFunction& g);
double norm2(const GFunction& f);
double norm1(const GFunction& f);
double norm_inf(const GFunction& f);

/// (f∗g)(t) = Σ_s f(s) g(s⁻¹ t). Fast transform on the abelian backend,
/// dense double sum otherwise.
GFunction convolve(const GFunction& f, const GFunction& g);

}  // namespace aglab
