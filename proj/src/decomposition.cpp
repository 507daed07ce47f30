#include "aglab/decomposition.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <json.hpp>

#include <stdexcept>

namespace aglab {

namespace {

// Relative cutoff deciding the support of a spectrum / singular values.
constexpr double kSupportCutoff = 1e-13;

Eigen::SelfAdjointEigenSolver<Mat> hermitian_eig(const Mat& m) {
    Mat h = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<Mat> es(h);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("hermitian eigendecomposition failed");
    return es;
}

}  // namespace

Mat right_conv_matrix(const GFunction& b) {
    const auto& g = *b.group();
    if (g.order() > Group::dense_limit)
        throw std::invalid_argument("right_conv_matrix: group order exceeds dense limit");
    const int n = g.order();
    Mat r(n, n);
    for (int s = 0; s < n; ++s) {
        const int si = g.inv(s);
        for (int t = 0; t < n; ++t) r(t, s) = b[g.mul(si, t)];
    }
    return r;
}

bool is_positive_definite(const GFunction& f, double tol_scale) {
    const double tol = tol_scale * norm_inf(f);
    const auto& g = f.group();
    if (g->is_abelian_backend()) {
        DualFunction fh = fourier(f);
        for (int xi = 0; xi < fh.size(); ++xi) {
            if (std::abs(fh[xi].imag()) > tol) return false;
            if (fh[xi].real() < -tol) return false;
        }
        return true;
    }
    if (norm_inf(f - tilde_fn(f)) > tol) return false;
    Mat r = right_conv_matrix(f);
    auto es = hermitian_eig(r);
    return es.eigenvalues().minCoeff() >= -tol;
}

GFunction positive_sqrt(const GFunction& p) {
    if (!is_positive_definite(p))
        throw std::invalid_argument("positive_sqrt: input is not positive definite");
    const auto& g = p.group();
    if (g->is_abelian_backend()) {
        DualFunction ph = fourier(p);
        Vec ch(ph.size());
        for (int xi = 0; xi < ph.size(); ++xi)
            ch[xi] = std::sqrt(std::max(0.0, ph[xi].real()));
        return inv_fourier(DualFunction(g, std::move(ch)));
    }
    auto es = hermitian_eig(right_conv_matrix(p));
    Vec sq = es.eigenvalues().cwiseMax(0.0).cwiseSqrt().cast<cxd>();
    // c = R_p^{1/2} δ_e: first column of the operator square root.
    Vec c = es.eigenvectors() * sq.cwiseProduct(es.eigenvectors().adjoint().col(0));
    return GFunction(g, std::move(c));
}

PolarDecomposition polar(const GFunction& u) {
    const auto& g = u.group();
    if (g->is_abelian_backend()) {
        DualFunction uh = fourier(u);
        const double cutoff = kSupportCutoff * (uh.size() ? uh.values().cwiseAbs().maxCoeff() : 0.0);
        Vec ph(uh.size());
        Vec asym(uh.size());
        for (int xi = 0; xi < uh.size(); ++xi) {
            const double mag = std::abs(uh[xi]);
            ph[xi] = mag;
            // eigenvalue of A on χ_ξ is the phase of (ũ)ˆ(−ξ) = conj(û(−ξ))
            const cxd z = std::conj(uh[dual_negate(*g, xi)]);
            asym[xi] = std::abs(z) > cutoff ? z / std::abs(z) : cxd(0.0, 0.0);
        }
        GFunction p = inv_fourier(DualFunction(g, std::move(ph)));
        return PolarDecomposition{u, std::move(p), VNOperator::from_symbol(g, std::move(asym))};
    }

    Mat dt = vn_density(tilde_fn(u));
    Eigen::JacobiSVD<Mat> svd(dt, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    const double cutoff = sv.size() ? kSupportCutoff * sv(0) : 0.0;
    int rank = 0;
    while (rank < sv.size() && sv(rank) > cutoff) ++rank;
    Mat ur = svd.matrixU().leftCols(rank);
    Mat vr = svd.matrixV().leftCols(rank);
    Mat a = ur * vr.adjoint();
    Mat pd = vr * sv.head(rank).asDiagonal() * vr.adjoint();
    GFunction p = function_from_density(g, pd);
    return PolarDecomposition{u, std::move(p), VNOperator::from_matrix(g, std::move(a), false)};
}

CanonicalRep canonical_rep(const GFunction& u) {
    PolarDecomposition pd = polar(u);
    GFunction c = positive_sqrt(pd.p);
    GFunction d = pd.A.bar().apply(c);
    CanonicalRep rep{std::move(c), std::move(d), Vec(), false};
    const auto& g = u.group();
    if (g->is_abelian_backend()) {
        // ψ = û/|û| on the support of ĉ, zero off it.
        DualFunction uh = fourier(u);
        const double cutoff = kSupportCutoff * (uh.size() ? uh.values().cwiseAbs().maxCoeff() : 0.0);
        Vec psi(uh.size());
        for (int xi = 0; xi < uh.size(); ++xi) {
            const double mag = std::abs(uh[xi]);
            psi[xi] = mag > cutoff ? uh[xi] / mag : cxd(0.0, 0.0);
        }
        rep.psi = std::move(psi);
        rep.has_psi = true;
    }
    return rep;
}

RightPositivityReport right_positivity_check(const GFunction& p, int trials, std::uint64_t seed) {
    if (!is_positive_definite(p))
        throw std::invalid_argument("right_positivity_check: p is not positive definite");
    RightPositivityReport report;
    report.trials = trials;
    std::mt19937_64 rng(seed);
    double min_real = trials > 0 ? std::numeric_limits<double>::infinity() : 0.0;
    double max_imag = 0.0;
    for (int i = 0; i < trials; ++i) {
        GFunction eta = GFunction::random(p.group(), rng);
        const double n = norm2(eta);
        if (n > 0) eta *= cxd(1.0 / n, 0.0);
        const cxd v = inner(convolve(eta, p), eta);
        min_real = std::min(min_real, v.real());
        max_imag = std::max(max_imag, std::abs(v.imag()));
    }
    report.min_real = min_real;
    report.max_abs_imag = max_imag;
    report.pass = min_real >= -1e-10 && max_imag <= 1e-10;
    return report;
}

std::string RightPositivityReport::to_json() const {
    nlohmann::ordered_json j;
    j["trials"] = trials;
    j["min_real"] = min_real;
    j["max_abs_imag"] = max_abs_imag;
    j["pass"] = pass;
    return j.dump(2) + "\n";
}

double density_check(const GFunction& p) {
    if (!is_positive_definite(p))
        throw std::invalid_argument("density_check: p is not positive definite");
    const auto& g = p.group();
    if (g->is_abelian_backend()) {
        DualFunction ph = fourier(p);
        double min_mod = std::numeric_limits<double>::infinity();
        for (int xi = 0; xi < ph.size(); ++xi)
            min_mod = std::min(min_mod, std::abs(cxd(ph[xi].real(), 1.0)));
        return min_mod;
    }
    Mat m = right_conv_matrix(p) + cxd(0.0, 1.0) * Mat::Identity(p.size(), p.size());
    Eigen::JacobiSVD<Mat> svd(m);
    return svd.singularValues().minCoeff();
}

}  // namespace aglab
