#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aglab/decomposition.hpp"
#include "aglab/projector.hpp"

namespace aglab {

// Hull/kernel machinery. One vanishing policy everywhere: a value counts
// as zero below 1e-12·‖f‖_∞.
double vanish_threshold(const GFunction& f);
SubsetIndex null_set(const GFunction& f);
SubsetIndex supp_set(const GFunction& f);
/// f ∈ k(E): f vanishes on E.
bool in_kernel(const GFunction& f, const SubsetIndex& E);
/// f ∈ j(E) at the given neighborhood radius: f vanishes on ball(E, radius).
bool in_j(const GFunction& f, const SubsetIndex& E, int radius);
/// Projector onto the kernel constraint: zeroes f on E.
GFunction zero_on(const GFunction& f, const SubsetIndex& E);

/// Residual trace r_k = ‖P_{S_k·c}(d)‖₂ along a neighborhood chain. The
/// verdict is one-sided: either "certified" (r_K below tolerance) or
/// "inconclusive at this resolution" - never a negative claim, since every
/// subset of a finite group is trivially spectral and only decay across
/// resolutions carries meaning.
struct CertificateEntry {
    double k_label = 0.0;
    int set_size = 0;
    double residual = 0.0;
    int gram_rank = 0;
    double gram_condition = 0.0;
};

struct CertificateTrace {
    std::vector<CertificateEntry> entries;
    double final_residual = 0.0;
    double decay_slope = 0.0;  // least-squares slope of log10(r_k)
    bool monotone = true;      // non-increasing within 1e-9
    bool certified = false;
    bool open_question_experiment = false;
    std::string verdict;

    std::string to_csv() const;
    std::string verdict_json() const;
};

/// Certificate for u ∈ k(S) along the chain; uses the fixed c from the
/// canonical representation unless a sequence c_k is supplied.
CertificateTrace residual_certificate(const GFunction& u, const SubsetIndex& S,
                                      const NeighborhoodFamily& family,
                                      double certify_tol = 1e-3,
                                      const std::vector<GFunction>& c_seq = {});

/// The reconstruction u_k(s) = ⟨d − P_{S_k·c}(d), λ(s)c⟩: vanishes on S_k
/// exactly and satisfies ‖u−u_k‖_A ≤ ‖c‖₂·r_k. Both facts are re-verified
/// per k and recorded.
struct ReconstructResult {
    std::vector<GFunction> sequence;
    std::vector<double> sup_on_chain_set;  // max |u_k| on S_k
    std::vector<double> a_dist;            // ‖u − u_k‖_A
    std::vector<double> a_bound;           // ‖c−c_k‖₂‖d_k‖₂ + ‖c_k‖₂‖d−d_k‖₂
    bool all_vanish = true;
    bool all_bounded = true;
};

ReconstructResult reconstruct_sequence(const GFunction& u, const SubsetIndex& S,
                                       const NeighborhoodFamily& family);

/// Localizer pipeline: forms u_k^i = v_i·u_k, takes canonical
/// representations, and checks the triangle chain
///   ‖P_{S_k·c}(d)‖₂ ≤ ‖c−c^i‖₂ + ‖d−d^i‖₂ + ‖P_{S_k·c^i}(d^i)‖₂
/// term by term.
struct SkukisRow {
    int i = 0;
    double k_label = 0.0;
    double lhs = 0.0;        // ‖P_{S_k·c}(d)‖
    double conv_c = 0.0;     // ‖c_k^i − c^i‖
    double conv_d = 0.0;     // ‖d_k^i − d^i‖
    double anchor = 0.0;     // ‖P_{S_k·c_k^i}(d_k^i)‖, ≈ 0 by construction
    double mixed = 0.0;      // ‖P_{S_k·c^i}(d^i)‖
    double bound_rhs = 0.0;  // ‖c−c^i‖ + ‖d−d^i‖ + mixed
    bool bound_ok = false;
    bool skipped = false;    // precondition violated at this k
};

struct SkukisReport {
    std::vector<SkukisRow> rows;
    std::vector<std::string> violations;
    bool preconditions_ok = true;
    bool final_bound_ok = false;
    std::string to_json() const;
};

SkukisReport skukis_pipeline(const GFunction& u, const std::vector<GFunction>& u_seq,
                             const std::vector<SubsetIndex>& s_chain,
                             const std::vector<GFunction>& localizers);

/// The decreasing-chain experiment r_k = ‖P_{(ball(S,r_k) ∪ T)·c}(d)‖₂ for
/// u vanishing on S ∪ T. Reports the stabilized value as an estimate of the
/// limit; the verdict never encodes an expected answer.
CertificateTrace r_infinity_experiment(const GFunction& u, const SubsetIndex& S,
                                       const SubsetIndex& T, const NeighborhoodFamily& family,
                                       double certify_tol = 1e-3);

/// Fejér kernel: dual-side triangle of half-width m on each cyclic factor,
/// normalized to value 1 at the identity. Positive definite with
/// ‖·‖_A = 1; width m = 1 gives the constant-one function.
GFunction fejer_kernel(const GroupPtr& g, int m);
/// Decreasing-width Fejér family ending at the constant 1 (A-norm 1 each).
std::vector<GFunction> fejer_localizers(const GroupPtr& g, int count);

}  // namespace aglab
