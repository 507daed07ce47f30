#include "aglab/vn.hpp"

#include <Eigen/SVD>

#include <stdexcept>

namespace aglab {

namespace {

void require_dense_ok(const Group& g, const char* where) {
    if (g.order() > Group::dense_limit)
        throw std::invalid_argument(std::string(where) + ": group order exceeds dense limit");
}

Mat lambda_matrix(const Group& g, int t) {
    const int n = g.order();
    Mat m = Mat::Zero(n, n);
    for (int b = 0; b < n; ++b) m(g.mul(t, b), b) = 1.0;
    return m;
}

double largest_singular_value(const Mat& m) {
    if (m.rows() <= 128) return Eigen::JacobiSVD<Mat>(m).singularValues()(0);
    return Eigen::BDCSVD<Mat>(m).singularValues()(0);
}

}  // namespace

VNOperator VNOperator::identity(const GroupPtr& g) {
    if (g->is_abelian_backend()) return from_symbol(g, Vec::Ones(g->order()));
    return from_matrix(g, Mat::Identity(g->order(), g->order()), false);
}

VNOperator VNOperator::lambda(const GroupPtr& g, int t) {
    if (t < 0 || t >= g->order()) throw std::invalid_argument("lambda: element out of range");
    if (g->is_abelian_backend()) {
        Vec sym(g->order());
        for (int xi = 0; xi < g->order(); ++xi) sym[xi] = std::conj(character_value(*g, xi, t));
        return from_symbol(g, std::move(sym));
    }
    require_dense_ok(*g, "VNOperator::lambda");
    return from_matrix(g, lambda_matrix(*g, t), false);
}

VNOperator VNOperator::from_symbol(const GroupPtr& g, Vec symbol) {
    if (!g->is_abelian_backend())
        throw std::invalid_argument("from_symbol: abelian backend required");
    if (symbol.size() != g->order())
        throw std::invalid_argument("from_symbol: symbol length must equal group order");
    VNOperator op;
    op.group_ = g;
    op.is_symbol_ = true;
    op.symbol_ = std::move(symbol);
    return op;
}

VNOperator VNOperator::from_matrix(const GroupPtr& g, Mat m, bool validate) {
    require_dense_ok(*g, "VNOperator::from_matrix");
    if (m.rows() != g->order() || m.cols() != g->order())
        throw std::invalid_argument("from_matrix: matrix must be N×N");
    VNOperator op;
    op.group_ = g;
    op.is_symbol_ = false;
    op.matrix_ = std::move(m);
    if (validate) {
        double res = op.vn_membership_residual();
        double scale = std::max(1.0, op.matrix_.norm());
        if (res > 1e-10 * scale)
            throw std::invalid_argument("from_matrix: operator does not commute with right translations");
    }
    return op;
}

VNOperator VNOperator::random(const GroupPtr& g, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    if (g->is_abelian_backend()) {
        Vec sym(g->order());
        for (int i = 0; i < g->order(); ++i) sym[i] = cxd(gauss(rng), gauss(rng));
        double m = sym.cwiseAbs().maxCoeff();
        if (m > 0) sym /= m;
        return from_symbol(g, std::move(sym));
    }
    require_dense_ok(*g, "VNOperator::random");
    const int n = g->order();
    Mat m = Mat::Zero(n, n);
    for (int t = 0; t < n; ++t) {
        const cxd a(gauss(rng), gauss(rng));
        for (int b = 0; b < n; ++b) m(g->mul(t, b), b) += a;
    }
    double nrm = largest_singular_value(m);
    if (nrm > 0) m /= nrm;
    return from_matrix(g, std::move(m), false);
}

const Vec& VNOperator::symbol() const {
    if (!is_symbol_) throw std::logic_error("VNOperator: not a symbol backend");
    return symbol_;
}

const Mat& VNOperator::matrix() const {
    if (is_symbol_) throw std::logic_error("VNOperator: not a matrix backend");
    return matrix_;
}

GFunction VNOperator::apply(const GFunction& f) const {
    require_same_group(group_, f.group(), "VNOperator::apply");
    if (is_symbol_) {
        DualFunction fh = fourier(f);
        fh.values() = symbol_.cwiseProduct(fh.values());
        return inv_fourier(fh);
    }
    return GFunction(f.group(), matrix_ * f.values());
}

VNOperator VNOperator::adjoint() const {
    if (is_symbol_) return from_symbol(group_, symbol_.conjugate());
    return from_matrix(group_, matrix_.adjoint(), false);
}

VNOperator VNOperator::bar() const {
    if (is_symbol_) {
        Vec sym(symbol_.size());
        for (int xi = 0; xi < symbol_.size(); ++xi)
            sym[xi] = std::conj(symbol_[dual_negate(*group_, xi)]);
        return from_symbol(group_, std::move(sym));
    }
    return from_matrix(group_, matrix_.conjugate(), false);
}

VNOperator VNOperator::check() const {
    if (is_symbol_) {
        Vec sym(symbol_.size());
        for (int xi = 0; xi < symbol_.size(); ++xi)
            sym[xi] = symbol_[dual_negate(*group_, xi)];
        return from_symbol(group_, std::move(sym));
    }
    return from_matrix(group_, matrix_.transpose(), false);
}

VNOperator VNOperator::compose(const VNOperator& other) const {
    require_same_group(group_, other.group_, "VNOperator::compose");
    if (is_symbol_ != other.is_symbol_)
        throw std::invalid_argument("VNOperator::compose: backend mismatch");
    if (is_symbol_) return from_symbol(group_, symbol_.cwiseProduct(other.symbol_));
    return from_matrix(group_, matrix_ * other.matrix_, false);
}

VNOperator VNOperator::scaled(cxd a) const {
    if (is_symbol_) return from_symbol(group_, a * symbol_);
    return from_matrix(group_, a * matrix_, false);
}

VNOperator VNOperator::plus(const VNOperator& other) const {
    require_same_group(group_, other.group_, "VNOperator::plus");
    if (is_symbol_ != other.is_symbol_)
        throw std::invalid_argument("VNOperator::plus: backend mismatch");
    if (is_symbol_) return from_symbol(group_, symbol_ + other.symbol_);
    return from_matrix(group_, matrix_ + other.matrix_, false);
}

double VNOperator::op_norm() const {
    if (is_symbol_) return symbol_.size() == 0 ? 0.0 : symbol_.cwiseAbs().maxCoeff();
    return largest_singular_value(matrix_);
}

double VNOperator::vn_membership_residual() const {
    if (is_symbol_) return 0.0;
    const auto& g = *group_;
    const int n = g.order();
    double worst = 0.0;
    Mat rho = Mat::Zero(n, n);
    for (int x = 0; x < n; ++x) {
        rho.setZero();
        for (int b = 0; b < n; ++b) rho(g.mul(b, g.inv(x)), b) = 1.0;  // ρ(x)f(t) = f(tx)
        worst = std::max(worst, (matrix_ * rho - rho * matrix_).norm());
    }
    return worst;
}

Mat vn_density(const GFunction& u) {
    const auto& g = *u.group();
    require_dense_ok(g, "vn_density");
    const int n = g.order();
    Mat d(n, n);
    const double scale = 1.0 / n;
    for (int a = 0; a < n; ++a) {
        const int ai = g.inv(a);
        for (int b = 0; b < n; ++b) d(a, b) = scale * u[g.mul(b, ai)];
    }
    return d;
}

Vec vn_density_symbol(const GFunction& u) {
    const auto& g = u.group();
    DualFunction uh = fourier(u);
    Vec sym(g->order());
    for (int xi = 0; xi < g->order(); ++xi)
        sym[xi] = uh[dual_negate(*g, xi)] / static_cast<double>(g->order());
    return sym;
}

GFunction function_from_density(const GroupPtr& g, const Mat& density) {
    const int n = g->order();
    Vec v = Vec::Zero(n);
    for (int s = 0; s < n; ++s) {
        cxd acc = 0.0;
        for (int b = 0; b < n; ++b) acc += density(b, g->mul(s, b));
        v[s] = acc;
    }
    return GFunction(g, std::move(v));
}

GFunction function_from_density_symbol(const GroupPtr& g, const Vec& sym) {
    const int n = g->order();
    Vec uh(n);
    for (int xi = 0; xi < n; ++xi)
        uh[xi] = sym[dual_negate(*g, xi)] * static_cast<double>(n);
    return inv_fourier(DualFunction(g, std::move(uh)));
}

cxd vn_pairing(const GFunction& u, const VNOperator& T) {
    require_same_group(u.group(), T.group(), "vn_pairing");
    if (T.is_symbol())
        return T.symbol().cwiseProduct(vn_density_symbol(u)).sum();
    return (T.matrix() * vn_density(u)).trace();
}

GFunction coefficient(const GFunction& f, const GFunction& g) {
    require_same_group(f.group(), g.group(), "coefficient");
    const auto& grp = f.group();
    const int n = grp->order();
    if (grp->is_abelian_backend()) {
        DualFunction fh = fourier(f);
        DualFunction gh = fourier(g);
        Vec v(n);
        for (int xi = 0; xi < n; ++xi) {
            const int neg = dual_negate(*grp, xi);
            v[xi] = fh[neg] * std::conj(gh[neg]);
        }
        return inv_fourier(DualFunction(grp, std::move(v)));
    }
    Vec v = Vec::Zero(n);
    for (int t = 0; t < n; ++t) {
        const int ti = grp->inv(t);
        cxd acc = 0.0;
        for (int x = 0; x < n; ++x) acc += f[grp->mul(ti, x)] * std::conj(g[x]);
        v[t] = acc;
    }
    return GFunction(grp, std::move(v));
}

double a_norm(const GFunction& u) {
    const auto& g = u.group();
    if (g->is_abelian_backend()) {
        DualFunction uh = fourier(u);
        return uh.values().cwiseAbs().sum() / static_cast<double>(g->order());
    }
    Mat d = vn_density(u);
    if (d.rows() <= 128) return Eigen::JacobiSVD<Mat>(d).singularValues().sum();
    return Eigen::BDCSVD<Mat>(d).singularValues().sum();
}

GFunction act_left(const VNOperator& T, const GFunction& u) {
    require_same_group(T.group(), u.group(), "act_left");
    if (T.is_symbol()) {
        // (T·u)ˆ(ξ) = m(−ξ) û(ξ), from D_{T·u} = T D_u on eigenvalues.
        DualFunction uh = fourier(u);
        Vec v(uh.size());
        for (int xi = 0; xi < uh.size(); ++xi)
            v[xi] = T.symbol()[dual_negate(*u.group(), xi)] * uh[xi];
        return inv_fourier(DualFunction(u.group(), std::move(v)));
    }
    return function_from_density(u.group(), T.matrix() * vn_density(u));
}

GFunction act_right(const GFunction& u, const VNOperator& T) {
    require_same_group(T.group(), u.group(), "act_right");
    if (T.is_symbol()) {
        DualFunction uh = fourier(u);
        Vec v(uh.size());
        for (int xi = 0; xi < uh.size(); ++xi)
            v[xi] = uh[xi] * T.symbol()[dual_negate(*u.group(), xi)];
        return inv_fourier(DualFunction(u.group(), std::move(v)));
    }
    return function_from_density(u.group(), vn_density(u) * T.matrix());
}

GFunction act_eymard(const VNOperator& T, const GFunction& u) {
    return act_right(u, T.check());
}

VNOperator check_op(const VNOperator& T) { return T.check(); }
VNOperator bar_op(const VNOperator& T) { return T.bar(); }

}  // namespace aglab
