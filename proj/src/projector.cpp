#include "aglab/projector.hpp"

#include <Eigen/Eigenvalues>
#include <json.hpp>

#include <stdexcept>

#include "aglab/fourier.hpp"

namespace aglab {

namespace {

GFunction scatter(const GroupPtr& g, const SubsetIndex& S, const Vec& a) {
    Vec v = Vec::Zero(g->order());
    for (int i = 0; i < S.size(); ++i) v[S.elements()[i]] = a[i];
    return GFunction(g, std::move(v));
}

ProjectionReport empty_report(const char* solver) {
    ProjectionReport r;
    r.solver = solver;
    return r;
}

std::pair<GFunction, ProjectionReport> assemble(const GFunction& c, const SubsetIndex& S,
                                                const Vec& a, ProjectionReport report) {
    GFunction alpha = scatter(c.group(), S, a);
    GFunction projection = convolve(alpha, c);
    report.residual_norm = norm2(projection);
    return {std::move(projection), std::move(report)};
}

}  // namespace

Mat gram_matrix(const GFunction& c, const SubsetIndex& S) {
    require_same_group(c.group(), S.group(), "gram_matrix");
    const auto& g = *c.group();
    GFunction p = convolve(c, tilde_fn(c));
    Mat gram(S.size(), S.size());
    for (int i = 0; i < S.size(); ++i)
        for (int j = 0; j < S.size(); ++j)
            gram(i, j) = p[g.mul(g.inv(S.elements()[j]), S.elements()[i])];
    return gram;
}

Vec translate_inner_vector(const GFunction& c, const GFunction& d, const SubsetIndex& S) {
    require_same_group(c.group(), d.group(), "translate_inner_vector");
    require_same_group(c.group(), S.group(), "translate_inner_vector");
    GFunction b_all = convolve(d, tilde_fn(c));
    Vec b(S.size());
    for (int i = 0; i < S.size(); ++i) b[i] = b_all[S.elements()[i]];
    return b;
}

std::pair<GFunction, ProjectionReport> project(const GFunction& c, const GFunction& d,
                                               const SubsetIndex& S) {
    if (S.is_empty())
        return {GFunction::zero(c.group()), empty_report("dense-pseudoinverse")};

    Mat gram = gram_matrix(c, S);
    Vec b = translate_inner_vector(c, d, S);

    Eigen::SelfAdjointEigenSolver<Mat> es(gram);
    if (es.info() != Eigen::Success) throw std::runtime_error("project: eigensolver failed");
    const auto& ev = es.eigenvalues();
    const double lambda_max = ev.size() ? ev.maxCoeff() : 0.0;
    const double cutoff = 1e-10 * lambda_max;

    ProjectionReport report = empty_report("dense-pseudoinverse");
    double lambda_min_kept = 0.0;
    Vec y = es.eigenvectors().adjoint() * b;
    for (int i = 0; i < ev.size(); ++i) {
        if (ev[i] > cutoff && ev[i] > 0.0) {
            y[i] /= ev[i];
            ++report.gram_rank;
            if (lambda_min_kept == 0.0 || ev[i] < lambda_min_kept) lambda_min_kept = ev[i];
        } else {
            y[i] = 0.0;
        }
    }
    report.gram_condition = lambda_min_kept > 0.0 ? lambda_max / lambda_min_kept : 0.0;
    Vec a = es.eigenvectors() * y;
    const double bn = b.norm();
    report.tolerance_achieved = bn > 0 ? (gram * a - b).norm() / bn : 0.0;
    return assemble(c, S, a, std::move(report));
}

std::pair<GFunction, ProjectionReport> project_fast(const GFunction& c, const GFunction& d,
                                                    const SubsetIndex& S, double tol,
                                                    int max_iter) {
    if (!c.group()->is_abelian_backend())
        throw std::invalid_argument("project_fast: abelian backend required");
    if (S.is_empty()) return {GFunction::zero(c.group()), empty_report("iterative")};
    if (max_iter <= 0) max_iter = 4 * S.size();

    const auto& g = c.group();
    GFunction p = convolve(c, tilde_fn(c));
    DualFunction ph = fourier(p);
    Vec b = translate_inner_vector(c, d, S);

    // Gram matvec through one FFT convolution with p.
    auto matvec = [&](const Vec& a) {
        GFunction alpha = scatter(g, S, a);
        DualFunction ah = fourier(alpha);
        ah.values() = ah.values().cwiseProduct(ph.values());
        GFunction beta = inv_fourier(ah);
        Vec out(S.size());
        for (int i = 0; i < S.size(); ++i) out[i] = beta[S.elements()[i]];
        return out;
    };

    ProjectionReport report = empty_report("iterative");
    const double bn = b.norm();
    if (bn == 0.0) return assemble(c, S, Vec::Zero(S.size()), std::move(report));

    Vec x = Vec::Zero(S.size());
    Vec r = b;
    Vec dir = r;
    double rho = r.squaredNorm();
    double best = std::sqrt(rho) / bn;
    int since_improvement = 0;
    bool converged = false;

    for (int it = 0; it < max_iter; ++it) {
        Vec ad = matvec(dir);
        const cxd denom_c = dir.dot(ad);  // Hermitian PSD: real, >= 0
        const double denom = denom_c.real();
        if (denom <= 0.0) break;
        const double alpha = rho / denom;
        x += alpha * dir;
        r -= alpha * ad;
        const double rho_new = r.squaredNorm();
        report.iterations = it + 1;
        const double rel = std::sqrt(rho_new) / bn;
        if (rel < best * 0.999) {
            best = rel;
            since_improvement = 0;
        } else if (++since_improvement > 50) {
            break;  // stagnation
        }
        if (rel <= tol) {
            converged = true;
            break;
        }
        dir = r + (rho_new / rho) * dir;
        rho = rho_new;
    }
    report.tolerance_achieved = r.norm() / bn;

    if (!converged) {
        auto dense = project(c, d, S);
        dense.second.solver = "iterative";
        dense.second.fallback = true;
        dense.second.iterations = report.iterations;
        return dense;
    }
    return assemble(c, S, x, std::move(report));
}

namespace {

LtwoLemmaReport run_ltwo(const GFunction& c, const GFunction& d, double psi_bound,
                         const SubsetIndex& S) {
    LtwoLemmaReport rep;
    rep.psi_bound = psi_bound;
    rep.lhs = project(c, d, S).second.residual_norm;
    rep.rhs = project(d, c, S.inverse_set()).second.residual_norm;
    rep.pass = rep.lhs <= psi_bound * rep.rhs + 1e-9;
    return rep;
}

}  // namespace

LtwoLemmaReport check_ltwo_lemma(const GFunction& c, const Vec& psi, const SubsetIndex& S) {
    if (!c.group()->is_abelian_backend())
        throw std::invalid_argument("check_ltwo_lemma: abelian backend required");
    if (psi.size() != c.size())
        throw std::invalid_argument("check_ltwo_lemma: psi length must equal group order");
    DualFunction ch = fourier(c);
    const double cutoff = ch.size() ? 1e-13 * ch.values().cwiseAbs().maxCoeff() : 0.0;
    Vec dh(ch.size());
    double psi_bound = 0.0;
    for (int xi = 0; xi < ch.size(); ++xi) {
        dh[xi] = psi[xi] * ch[xi];
        if (std::abs(ch[xi]) > cutoff) psi_bound = std::max(psi_bound, std::abs(psi[xi]));
    }
    GFunction d = inv_fourier(DualFunction(c.group(), std::move(dh)));
    return run_ltwo(c, d, psi_bound, S);
}

LtwoLemmaReport check_ltwo_lemma(const GFunction& c, const GFunction& d, double psi_bound,
                                 const SubsetIndex& S) {
    if (!c.group()->is_abelian_backend())
        throw std::invalid_argument("check_ltwo_lemma: abelian backend required");
    require_same_group(c.group(), d.group(), "check_ltwo_lemma");
    DualFunction ch = fourier(c);
    DualFunction dh = fourier(d);
    const double c_cut = ch.size() ? 1e-13 * ch.values().cwiseAbs().maxCoeff() : 0.0;
    const double d_cut = dh.size() ? 1e-10 * std::max(1.0, dh.values().cwiseAbs().maxCoeff()) : 0.0;
    for (int xi = 0; xi < ch.size(); ++xi) {
        if (std::abs(ch[xi]) <= c_cut) {
            if (std::abs(dh[xi]) > d_cut)
                throw std::invalid_argument(
                    "check_ltwo_lemma: d̂ is not a multiple of ĉ on supp(ĉ)");
        } else if (std::abs(dh[xi] / ch[xi]) > psi_bound * (1.0 + 1e-9) + 1e-12) {
            throw std::invalid_argument("check_ltwo_lemma: |d̂/ĉ| exceeds the stated bound");
        }
    }
    return run_ltwo(c, d, psi_bound, S);
}

std::string ProjectionReport::to_json() const {
    nlohmann::ordered_json j;
    j["residual_norm"] = residual_norm;
    j["gram_rank"] = gram_rank;
    j["gram_condition"] = gram_condition;
    j["solver"] = solver;
    j["iterations"] = iterations;
    j["tolerance_achieved"] = tolerance_achieved;
    j["fallback"] = fallback;
    return j.dump(2) + "\n";
}

std::string LtwoLemmaReport::to_json() const {
    nlohmann::ordered_json j;
    j["lhs"] = lhs;
    j["rhs"] = rhs;
    j["psi_bound"] = psi_bound;
    j["pass"] = pass;
    return j.dump(2) + "\n";
}

}  // namespace aglab
