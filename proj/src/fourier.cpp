#include "aglab/fourier.hpp"

#include <fftw3.h>

#include <mutex>
#include <numbers>
#include <stdexcept>

namespace aglab {

namespace {

// FFTW plan creation is not thread-safe; execution on distinct buffers is.
std::mutex fftw_plan_mutex;

Vec multidim_dft(const Group& g, const Vec& in, int sign) {
    const auto& factors = g.factors();
    const int n = g.order();
    Vec out(n);
    std::vector<int> dims(factors.begin(), factors.end());
    // fftw_complex is bit-compatible with std::complex<double>.
    auto* in_ptr = const_cast<fftw_complex*>(reinterpret_cast<const fftw_complex*>(in.data()));
    auto* out_ptr = reinterpret_cast<fftw_complex*>(out.data());
    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(fftw_plan_mutex);
        plan = fftw_plan_dft(static_cast<int>(dims.size()), dims.data(), in_ptr, out_ptr,
                             sign, FFTW_ESTIMATE | FFTW_PRESERVE_INPUT);
    }
    if (!plan) throw std::runtime_error("fftw plan creation failed");
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(fftw_plan_mutex);
        fftw_destroy_plan(plan);
    }
    return out;
}

}  // namespace

DualFunction::DualFunction(GroupPtr group, Vec values)
    : group_(std::move(group)), values_(std::move(values)) {
    if (!group_) throw std::invalid_argument("DualFunction: null group");
    if (!group_->is_abelian_backend())
        throw std::invalid_argument("DualFunction requires an abelian group");
    if (values_.size() != group_->order())
        throw std::invalid_argument("DualFunction: value vector length must equal group order");
}

DualFunction fourier(const GFunction& f) {
    const auto& g = f.group();
    if (!g->is_abelian_backend())
        throw std::invalid_argument("fourier: abelian backend required");
    return DualFunction(g, multidim_dft(*g, f.values(), FFTW_FORWARD));
}

GFunction inv_fourier(const DualFunction& F) {
    const auto& g = F.group();
    Vec v = multidim_dft(*g, F.values(), FFTW_BACKWARD);
    v /= static_cast<double>(g->order());
    return GFunction(g, std::move(v));
}

cxd plancherel_inner(const DualFunction& F, const DualFunction& G) {
    require_same_group(F.group(), G.group(), "plancherel_inner");
    return F.values().cwiseProduct(G.values().conjugate()).sum() /
           static_cast<double>(F.group()->order());
}

cxd character_value(const Group& g, int xi, int s) {
    const auto& factors = g.factors();
    double phase = 0.0;
    auto cs = g.coords(s);
    auto cx = g.coords(xi);
    for (std::size_t j = 0; j < factors.size(); ++j)
        phase += static_cast<double>(cx[j]) * static_cast<double>(cs[j]) / factors[j];
    phase *= 2.0 * std::numbers::pi;
    return cxd(std::cos(phase), std::sin(phase));
}

int dual_negate(const Group& g, int xi) {
    return g.inv(xi);  // same mixed-radix negation
}

}  // namespace aglab
