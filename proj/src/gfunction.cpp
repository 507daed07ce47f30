#include "aglab/gfunction.hpp"

#include <stdexcept>

#include "aglab/fourier.hpp"

namespace aglab {

GFunction::GFunction(GroupPtr group, Vec values) : group_(std::move(group)), values_(std::move(values)) {
    if (!group_) throw std::invalid_argument("GFunction: null group");
    if (values_.size() != group_->order())
        throw std::invalid_argument("GFunction: value vector length must equal group order");
}

GFunction GFunction::zero(const GroupPtr& g) {
    return GFunction(g, Vec::Zero(g->order()));
}

GFunction GFunction::constant(const GroupPtr& g, cxd value) {
    return GFunction(g, Vec::Constant(g->order(), value));
}

GFunction GFunction::delta(const GroupPtr& g, int t) {
    if (t < 0 || t >= g->order()) throw std::invalid_argument("delta: element out of range");
    Vec v = Vec::Zero(g->order());
    v[t] = 1.0;
    return GFunction(g, std::move(v));
}

GFunction GFunction::random(const GroupPtr& g, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Vec v(g->order());
    for (int i = 0; i < g->order(); ++i) v[i] = cxd(gauss(rng), gauss(rng));
    return GFunction(g, std::move(v));
}

GFunction& GFunction::operator+=(const GFunction& o) {
    require_same_group(group_, o.group_, "GFunction::operator+=");
    values_ += o.values_;
    return *this;
}

GFunction& GFunction::operator-=(const GFunction& o) {
    require_same_group(group_, o.group_, "GFunction::operator-=");
    values_ -= o.values_;
    return *this;
}

GFunction& GFunction::operator*=(cxd a) {
    values_ *= a;
    return *this;
}

GFunction operator+(GFunction a, const GFunction& b) { return a += b; }
GFunction operator-(GFunction a, const GFunction& b) { return a -= b; }
GFunction operator*(cxd a, GFunction f) { return f *= a; }

GFunction pointwise_mul(const GFunction& a, const GFunction& b) {
    require_same_group(a.group(), b.group(), "pointwise_mul");
    return GFunction(a.group(), a.values().cwiseProduct(b.values()));
}

GFunction check_fn(const GFunction& f) {
    const auto& g = f.group();
    Vec v(f.size());
    for (int s = 0; s < f.size(); ++s) v[s] = f[g->inv(s)];
    return GFunction(g, std::move(v));
}

GFunction tilde_fn(const GFunction& f) {
    const auto& g = f.group();
    Vec v(f.size());
    for (int s = 0; s < f.size(); ++s) v[s] = std::conj(f[g->inv(s)]);
    return GFunction(g, std::move(v));
}

GFunction bar_fn(const GFunction& f) {
    return GFunction(f.group(), f.values().conjugate());
}

GFunction star_fn(const GFunction& f) {
    return tilde_fn(f);  // Δ ≡ 1
}

GFunction translate(int t, const GFunction& f) {
    const auto& g = f.group();
    if (t < 0 || t >= g->order()) throw std::invalid_argument("translate: element out of range");
    const int ti = g->inv(t);
    Vec v(f.size());
    for (int s = 0; s < f.size(); ++s) v[s] = f[g->mul(ti, s)];
    return GFunction(g, std::move(v));
}

cxd inner(const GFunction& f, const GFunction& g) {
    require_same_group(f.group(), g.group(), "inner");
    return f.values().cwiseProduct(g.values().conjugate()).sum();
}

double norm2(const GFunction& f) { return f.values().norm(); }
double norm1(const GFunction& f) { return f.values().cwiseAbs().sum(); }
double norm_inf(const GFunction& f) {
    return f.size() == 0 ? 0.0 : f.values().cwiseAbs().maxCoeff();
}

GFunction convolve(const GFunction& f, const GFunction& g) {
    require_same_group(f.group(), g.group(), "convolve");
    const auto& grp = f.group();
    const int n = grp->order();
    if (grp->is_abelian_backend()) {
        DualFunction fh = fourier(f);
        DualFunction gh = fourier(g);
        fh.values() = fh.values().cwiseProduct(gh.values());
        return inv_fourier(fh);
    }
    Vec out = Vec::Zero(n);
    for (int s = 0; s < n; ++s) {
        const cxd fs = f[s];
        if (fs == cxd(0.0, 0.0)) continue;
        const int si = grp->inv(s);
        for (int t = 0; t < n; ++t) out[t] += fs * g[grp->mul(si, t)];
    }
    return GFunction(grp, std::move(out));
}

}  // namespace aglab
