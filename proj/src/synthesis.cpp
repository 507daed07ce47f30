#include "aglab/synthesis.hpp"

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "aglab/fourier.hpp"

namespace aglab {

namespace {

std::string fmt(double v) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

void finalize_trace(CertificateTrace& tr, double certify_tol) {
    if (tr.entries.empty()) return;
    tr.final_residual = tr.entries.back().residual;
    for (std::size_t i = 1; i < tr.entries.size(); ++i)
        if (tr.entries[i].residual > tr.entries[i - 1].residual + 1e-9) tr.monotone = false;

    int count = 0;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < tr.entries.size(); ++i) {
        if (tr.entries[i].residual <= 1e-300) continue;
        const double x = static_cast<double>(i);
        const double y = std::log10(tr.entries[i].residual);
        sx += x; sy += y; sxx += x * x; sxy += x * y;
        ++count;
    }
    const double denom = count * sxx - sx * sx;
    tr.decay_slope = (count >= 2 && denom != 0.0) ? (count * sxy - sx * sy) / denom : 0.0;

    tr.certified = tr.final_residual <= certify_tol;
    if (tr.open_question_experiment)
        tr.verdict = "open-question experiment: estimate reported, no ground-truth claim";
    else
        tr.verdict = tr.certified ? "certified" : "not certified at this resolution";
}

}  // namespace

double vanish_threshold(const GFunction& f) { return 1e-12 * norm_inf(f); }

SubsetIndex null_set(const GFunction& f) {
    const double thr = vanish_threshold(f);
    std::vector<int> idx;
    for (int s = 0; s < f.size(); ++s)
        if (std::abs(f[s]) <= thr) idx.push_back(s);
    return SubsetIndex(f.group(), std::move(idx));
}

SubsetIndex supp_set(const GFunction& f) { return null_set(f).complement(); }

bool in_kernel(const GFunction& f, const SubsetIndex& E) {
    require_same_group(f.group(), E.group(), "in_kernel");
    const double thr = vanish_threshold(f);
    for (int s : E.elements())
        if (std::abs(f[s]) > thr) return false;
    return true;
}

bool in_j(const GFunction& f, const SubsetIndex& E, int radius) {
    return in_kernel(f, E.ball(radius));
}

GFunction zero_on(const GFunction& f, const SubsetIndex& E) {
    require_same_group(f.group(), E.group(), "zero_on");
    GFunction out = f;
    for (int s : E.elements()) out[s] = 0.0;
    return out;
}

CertificateTrace residual_certificate(const GFunction& u, const SubsetIndex& S,
                                      const NeighborhoodFamily& family, double certify_tol,
                                      const std::vector<GFunction>& c_seq) {
    require_same_group(u.group(), S.group(), "residual_certificate");
    if (!in_kernel(u, S))
        throw std::invalid_argument("residual_certificate: u does not vanish on S");
    if (!c_seq.empty() && c_seq.size() != family.chain.size())
        throw std::invalid_argument("residual_certificate: c sequence length mismatch");

    CanonicalRep rep = canonical_rep(u);
    CertificateTrace tr;
    for (std::size_t k = 0; k < family.chain.size(); ++k) {
        const GFunction& ck = c_seq.empty() ? rep.c : c_seq[k];
        auto [proj, prep] = project(ck, rep.d, family.chain[k]);
        CertificateEntry e;
        e.k_label = static_cast<double>(k + 1);
        e.set_size = family.chain[k].size();
        e.residual = prep.residual_norm;
        e.gram_rank = prep.gram_rank;
        e.gram_condition = prep.gram_condition;
        tr.entries.push_back(e);
    }
    finalize_trace(tr, certify_tol);
    return tr;
}

ReconstructResult reconstruct_sequence(const GFunction& u, const SubsetIndex& S,
                                       const NeighborhoodFamily& family) {
    require_same_group(u.group(), S.group(), "reconstruct_sequence");
    if (!in_kernel(u, S))
        throw std::invalid_argument("reconstruct_sequence: u does not vanish on S");

    CanonicalRep rep = canonical_rep(u);
    const double c_norm = norm2(rep.c);
    ReconstructResult result;
    for (const auto& sk : family.chain) {
        auto [proj, prep] = project(rep.c, rep.d, sk);
        GFunction dk = rep.d - proj;
        GFunction uk = convolve(dk, rep.c);  // ⟨d_k, λ(s)c⟩ since c = c̃

        double sup = 0.0;
        for (int s : sk.elements()) sup = std::max(sup, std::abs(uk[s]));
        const double dist = a_norm(u - uk);
        const double bound = c_norm * norm2(rep.d - dk);

        result.sup_on_chain_set.push_back(sup);
        result.a_dist.push_back(dist);
        result.a_bound.push_back(bound);
        result.all_vanish = result.all_vanish && sup <= 1e-10 * std::max(1.0, norm_inf(uk));
        result.all_bounded = result.all_bounded && dist <= bound + 1e-9;
        result.sequence.push_back(std::move(uk));
    }
    return result;
}

SkukisReport skukis_pipeline(const GFunction& u, const std::vector<GFunction>& u_seq,
                             const std::vector<SubsetIndex>& s_chain,
                             const std::vector<GFunction>& localizers) {
    if (!u.group()->is_abelian_backend())
        throw std::invalid_argument("skukis_pipeline: abelian backend required");
    if (u_seq.size() != s_chain.size())
        throw std::invalid_argument("skukis_pipeline: sequence and chain length mismatch");
    if (localizers.empty()) throw std::invalid_argument("skukis_pipeline: no localizers");

    SkukisReport report;
    for (std::size_t i = 0; i < localizers.size(); ++i) {
        require_same_group(u.group(), localizers[i].group(), "skukis_pipeline");
        const double an = a_norm(localizers[i]);
        if (an > 1.0 + 1e-9) {
            report.violations.push_back("localizer " + std::to_string(i) +
                                        " has A-norm " + fmt(an) + " > 1");
            report.preconditions_ok = false;
        }
    }
    std::vector<bool> vanish_ok(u_seq.size(), true);
    for (std::size_t k = 0; k < u_seq.size(); ++k) {
        require_same_group(u.group(), u_seq[k].group(), "skukis_pipeline");
        if (!in_kernel(u_seq[k], s_chain[k])) {
            report.violations.push_back("u_k does not vanish on S_k at k=" + std::to_string(k));
            report.preconditions_ok = false;
            vanish_ok[k] = false;
        }
    }

    CanonicalRep rep = canonical_rep(u);
    std::vector<double> lhs(s_chain.size());
    for (std::size_t k = 0; k < s_chain.size(); ++k)
        lhs[k] = project(rep.c, rep.d, s_chain[k]).second.residual_norm;

    for (std::size_t i = 0; i < localizers.size(); ++i) {
        GFunction ui = pointwise_mul(localizers[i], u);
        CanonicalRep ri = canonical_rep(ui);
        const double t1 = norm2(rep.c - ri.c);
        const double t2 = norm2(rep.d - ri.d);
        for (std::size_t k = 0; k < u_seq.size(); ++k) {
            SkukisRow row;
            row.i = static_cast<int>(i);
            row.k_label = static_cast<double>(k + 1);
            row.lhs = lhs[k];
            if (!vanish_ok[k]) {
                row.skipped = true;  // flagged, no bound claimed
                report.rows.push_back(row);
                continue;
            }
            GFunction uki = pointwise_mul(localizers[i], u_seq[k]);
            CanonicalRep rki = canonical_rep(uki);
            row.conv_c = norm2(rki.c - ri.c);
            row.conv_d = norm2(rki.d - ri.d);
            row.anchor = project(rki.c, rki.d, s_chain[k]).second.residual_norm;
            row.mixed = project(ri.c, ri.d, s_chain[k]).second.residual_norm;
            row.bound_rhs = t1 + t2 + row.mixed;
            row.bound_ok = row.lhs <= row.bound_rhs + 1e-9;
            report.rows.push_back(row);
        }
    }
    if (!report.rows.empty()) {
        const auto& last = report.rows.back();
        report.final_bound_ok = !last.skipped && last.bound_ok;
    }
    return report;
}

CertificateTrace r_infinity_experiment(const GFunction& u, const SubsetIndex& S,
                                       const SubsetIndex& T, const NeighborhoodFamily& family,
                                       double certify_tol) {
    require_same_group(u.group(), T.group(), "r_infinity_experiment");
    if (!in_kernel(u, S.union_with(T)))
        throw std::invalid_argument("r_infinity_experiment: u does not vanish on S ∪ T");

    CanonicalRep rep = canonical_rep(u);
    CertificateTrace tr;
    tr.open_question_experiment = true;
    for (std::size_t k = 0; k < family.chain.size(); ++k) {
        SubsetIndex set = family.chain[k].union_with(T);
        auto [proj, prep] = project(rep.c, rep.d, set);
        CertificateEntry e;
        e.k_label = static_cast<double>(k + 1);
        e.set_size = set.size();
        e.residual = prep.residual_norm;
        e.gram_rank = prep.gram_rank;
        e.gram_condition = prep.gram_condition;
        tr.entries.push_back(e);
    }
    finalize_trace(tr, certify_tol);
    return tr;
}

GFunction fejer_kernel(const GroupPtr& g, int m) {
    if (!g->is_abelian_backend())
        throw std::invalid_argument("fejer_kernel: abelian backend required");
    if (m < 1) throw std::invalid_argument("fejer_kernel: width must be >= 1");
    const auto& factors = g->factors();
    const int n = g->order();
    Vec vh(n);
    double total = 0.0;
    for (int xi = 0; xi < n; ++xi) {
        auto cx = g->coords(xi);
        double w = 1.0;
        for (std::size_t j = 0; j < factors.size(); ++j) {
            const int dist = std::min(cx[j], factors[j] - cx[j]);
            w *= std::max(0.0, 1.0 - static_cast<double>(dist) / m);
        }
        vh[xi] = w;
        total += w;
    }
    Vec scaled = vh * (static_cast<double>(n) / total);
    return inv_fourier(DualFunction(g, std::move(scaled)));
}

std::vector<GFunction> fejer_localizers(const GroupPtr& g, int count) {
    if (count < 1) throw std::invalid_argument("fejer_localizers: count must be >= 1");
    int max_factor = 1;
    for (int f : g->factors()) max_factor = std::max(max_factor, f);
    std::vector<GFunction> out;
    int width = std::max(1, max_factor / 2);
    for (int i = 0; i < count; ++i) {
        if (i == count - 1) width = 1;  // last localizer is the constant 1
        out.push_back(fejer_kernel(g, width));
        width = std::max(1, width / 2);
    }
    return out;
}

std::string CertificateTrace::to_csv() const {
    std::ostringstream os;
    os << "k,set_size,residual,gram_rank,gram_condition\n";
    for (const auto& e : entries)
        os << fmt(e.k_label) << ',' << e.set_size << ',' << fmt(e.residual) << ','
           << e.gram_rank << ',' << fmt(e.gram_condition) << '\n';
    return os.str();
}

std::string CertificateTrace::verdict_json() const {
    nlohmann::ordered_json j;
    j["final_residual"] = final_residual;
    j["decay_slope"] = decay_slope;
    j["monotone"] = monotone;
    j["certified"] = certified;
    j["open_question_experiment"] = open_question_experiment;
    j["verdict"] = verdict;
    return j.dump(2) + "\n";
}

std::string SkukisReport::to_json() const {
    nlohmann::ordered_json j;
    j["preconditions_ok"] = preconditions_ok;
    j["violations"] = violations;
    j["final_bound_ok"] = final_bound_ok;
    auto rows_json = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        rows_json.push_back({{"i", r.i},
                             {"k", r.k_label},
                             {"lhs", r.lhs},
                             {"conv_c", r.conv_c},
                             {"conv_d", r.conv_d},
                             {"anchor", r.anchor},
                             {"mixed", r.mixed},
                             {"bound_rhs", r.bound_rhs},
                             {"bound_ok", r.bound_ok},
                             {"skipped", r.skipped}});
    }
    j["rows"] = rows_json;
    return j.dump(2) + "\n";
}

}  // namespace aglab
