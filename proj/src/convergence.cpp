#include "aglab/convergence.hpp"

#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "aglab/synthesis.hpp"

namespace aglab {

namespace {

bool tail_monotone(const std::vector<double>& xs) {
    if (xs.size() < 4) return true;
    const std::size_t start = xs.size() - xs.size() / 4;
    for (std::size_t i = std::max<std::size_t>(start, 1); i < xs.size(); ++i)
        if (xs[i] > 1.1 * xs[i - 1] + 1e-14) return false;
    return true;
}

std::string fmt(double v) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

ConvergenceTrace run_trace(const GFunction& u, const std::vector<GFunction>& u_seq,
                           const ConvergenceOptions& opts,
                           const std::vector<double>& k_labels) {
    for (const auto& uk : u_seq) require_same_group(u.group(), uk.group(), "convergence");
    if (!k_labels.empty() && k_labels.size() != u_seq.size())
        throw std::invalid_argument("convergence: k label list has wrong length");

    ConvergenceTrace tr;
    const auto& g = u.group();
    const double u_anorm = a_norm(u);
    CanonicalRep rep = canonical_rep(u);
    GFunction p = convolve(rep.c, rep.c);

    std::mt19937_64 rng(opts.probe_seed);
    std::vector<GFunction> probes;
    for (int j = 0; j < opts.random_probes; ++j) {
        GFunction e = GFunction::random(g, rng);
        const double n = norm2(e);
        if (n > 0) e *= cxd(1.0 / n, 0.0);
        probes.push_back(std::move(e));
    }

    for (std::size_t k = 0; k < u_seq.size(); ++k) {
        const GFunction& uk = u_seq[k];
        tr.k_labels.push_back(k_labels.empty() ? static_cast<double>(k + 1) : k_labels[k]);
        tr.u_diff_a.push_back(a_norm(uk - u));
        tr.u_diff_l2.push_back(norm2(uk - u));
        tr.anorm_gap.push_back(std::abs(a_norm(uk) - u_anorm));

        CanonicalRep rk = canonical_rep(uk);
        GFunction pk = convolve(rk.c, rk.c);
        GFunction pdiff = pk - p;
        double gap = norm_inf(pdiff);  // all δ_t probes at once
        for (const auto& e : probes) gap = std::max(gap, std::abs(inner(pdiff, e)));
        tr.p_weak_gap.push_back(gap);

        tr.c_diff.push_back(norm2(rk.c - rep.c));
        tr.d_diff.push_back(norm2(rk.d - rep.d));
    }

    if (!u_seq.empty()) {
        tr.hyp_anorm = tr.anorm_gap.back() <= opts.hypothesis_tol;
        tr.hyp_l2 = tr.u_diff_l2.back() <= opts.hypothesis_tol;
        tr.hyp_weak = tr.p_weak_gap.back() <= opts.hypothesis_tol;
        tr.hypotheses_hold = tr.hyp_anorm && tr.hyp_l2 && tr.hyp_weak;
        tr.concluded = tr.c_diff.back() <= opts.conclusion_tol &&
                       tr.d_diff.back() <= opts.conclusion_tol;
        tr.pass = !tr.hypotheses_hold || tr.concluded;
        tr.tail_monotone_c = tail_monotone(tr.c_diff);
        tr.tail_monotone_d = tail_monotone(tr.d_diff);
    } else {
        tr.pass = true;
    }
    return tr;
}

}  // namespace

ConvergenceTrace verify_l2l2(const GFunction& u, const std::vector<GFunction>& u_seq,
                             const ConvergenceOptions& opts,
                             const std::vector<double>& k_labels) {
    return run_trace(u, u_seq, opts, k_labels);
}

ConvergenceTrace verify_ckak(const GFunction& u, const std::vector<GFunction>& u_seq,
                             const SubsetIndex& support_bound, const ConvergenceOptions& opts,
                             const std::vector<double>& k_labels) {
    for (const auto& uk : u_seq)
        if (!supp_set(uk).subset_of(support_bound))
            throw std::invalid_argument("verify_ckak: support violation");
    ConvergenceTrace tr = run_trace(u, u_seq, opts, k_labels);
    if (!u_seq.empty()) {
        // Only A(G)-convergence plus the common support is hypothesised.
        tr.hyp_anorm = tr.u_diff_a.back() <= opts.hypothesis_tol;
        tr.hyp_l2 = true;
        tr.hyp_weak = true;
        tr.hypotheses_hold = tr.hyp_anorm;
        tr.pass = !tr.hypotheses_hold || tr.concluded;
    }
    return tr;
}

std::string ConvergenceTrace::to_csv() const {
    std::ostringstream os;
    os << "k,u_diff_a,u_diff_l2,p_weak_gap,c_diff,d_diff,anorm_gap\n";
    for (std::size_t i = 0; i < c_diff.size(); ++i) {
        os << fmt(k_labels[i]) << ',' << fmt(u_diff_a[i]) << ',' << fmt(u_diff_l2[i]) << ','
           << fmt(p_weak_gap[i]) << ',' << fmt(c_diff[i]) << ',' << fmt(d_diff[i]) << ','
           << fmt(anorm_gap[i]) << '\n';
    }
    return os.str();
}

std::vector<double> k_grid(int count, KSchedule schedule) {
    if (count < 1) throw std::invalid_argument("k_grid: count must be >= 1");
    std::vector<double> ks(count);
    for (int j = 0; j < count; ++j)
        ks[j] = schedule == KSchedule::Linear ? static_cast<double>(j + 1)
                                              : std::ldexp(1.0, j + 1);  // 2^(j+1)
    return ks;
}

std::vector<GFunction> scaling_sequence(const GFunction& u, const GFunction& perturbation,
                                        const std::vector<double>& ks) {
    require_same_group(u.group(), perturbation.group(), "scaling_sequence");
    std::vector<GFunction> seq;
    seq.reserve(ks.size());
    for (double k : ks) {
        GFunction uk = u;
        uk *= cxd(1.0 - 1.0 / k, 0.0);
        GFunction pert = perturbation;
        pert *= cxd(1.0 / (k * k), 0.0);
        seq.push_back(uk + pert);
    }
    return seq;
}

std::vector<GFunction> anorm_drift_sequence(const GFunction& u, int t, double theta,
                                            const std::vector<double>& ks) {
    std::vector<GFunction> seq;
    seq.reserve(ks.size());
    GFunction spike = GFunction::delta(u.group(), t);
    const cxd phase(std::cos(theta), std::sin(theta));
    for (double k : ks) {
        GFunction pert = spike;
        pert *= phase / k;
        seq.push_back(u + pert);
    }
    return seq;
}

std::vector<GFunction> phase_jump_sequence(const GFunction& u, double theta, int count) {
    std::vector<GFunction> seq;
    seq.reserve(count);
    GFunction rotated = u;
    rotated *= cxd(std::cos(theta), std::sin(theta));
    for (int j = 0; j < count; ++j) seq.push_back(rotated);
    return seq;
}

}  // namespace aglab
