#pragma once

#include <array>
#include <string>

#include "aglab/vn.hpp"

namespace aglab {

/// Machine check of the eight VN(G)-module identities on random data:
///   leri       T·γ_{f,g} = γ_{T(f),g}  and  γ_{f,g}·T = γ_{f,T*(g)}
///   check      (γ_{f,g})ˇ = γ_{ḡ,f̄}
///   tilde      (γ_{f,g})˜ = γ_{g,f}
///   tista      Ť = T̄*
///   inversion  (u·T)˜ = T*·ũ  and  (T·u)˜ = ũ·T*
///   eyac       T∘γ_{f,g} = γ_{f,T̄(g)}
///   leey       T∘u = u·Ť
///   l2ag       T(u) = u·Ť  (operator applied pointwise to u ∈ L²)
/// Each identity is evaluated through two distinct computational routes
/// (module action on densities vs direct coefficient manipulation).
struct IdentityResult {
    std::string name;
    double max_residual = 0.0;
    bool pass = true;
};

struct AppendixReport {
    std::array<IdentityResult, 8> identities;
    int trials = 0;
    double tolerance = 1e-10;
    bool pass = true;

    std::string to_json() const;
};

AppendixReport verify_appendix(const GroupPtr& g, int trials, std::uint64_t seed = 2024,
                               double tolerance = 1e-10);

}  // namespace aglab
