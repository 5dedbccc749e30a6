// Per-slot channel hot path. Compiled with fast-math so the Box-Muller and
// softplus loops vectorize; results feed statistical aggregates, while the
// reference build_rate_matrix stays on strict double math.

#include <cmath>
#include <cstdint>

#include "slicesched/channel.hpp"

namespace slicesched {

namespace {
constexpr float kTwoPiF = 6.28318530717958647692f;
constexpr float kLn10Over10F = 0.230258509299404568f;
// Beyond this, log(1+e^y) == y to float precision and expf would overflow.
constexpr float kSoftplusCap = 60.0f;
}  // namespace

void draw_shadowing_field(std::mt19937_64& rng, double sigma_db, size_t n,
                          std::vector<float>& psi_db) {
    psi_db.resize(n + 1);  // one slack slot for the odd-count Box-Muller pair
    const size_t pairs = (n + 1) / 2;
    const float sigma = static_cast<float>(sigma_db);

    // Two 24-bit uniforms per engine draw; u1 lies in (0,1] so the log is finite.
    static thread_local std::vector<float> u1, u2;
    u1.resize(pairs);
    u2.resize(pairs);
    for (size_t i = 0; i < pairs; ++i) {
        const uint64_t w = rng();
        u1[i] = static_cast<float>((w >> 40) + 1) * 0x1p-24f;
        u2[i] = static_cast<float>((w >> 16) & 0xFFFFFFu) * 0x1p-24f;
    }
    for (size_t i = 0; i < pairs; ++i) {
        const float rad = sigma * std::sqrt(-2.0f * std::log(u1[i]));
        const float ang = kTwoPiF * u2[i];
        psi_db[2 * i] = rad * std::cos(ang);
        psi_db[2 * i + 1] = rad * std::sin(ang);
    }
    psi_db.resize(n);
}

void rate_matrix_from_field(const LinkSnrTable& table, const std::vector<int>& mo_of_ue,
                            const std::vector<float>& psi_db, double bandwidth_hz,
                            RateMatrix& out, std::vector<float>& scratch) {
    const size_t n = table.ln_snr0.size();
    scratch.resize(n);
    const float* snr = table.ln_snr0.data();
    const float* psi = psi_db.data();
    float* rate = scratch.data();

    for (size_t i = 0; i < n; ++i) {
        float y = snr[i] - kLn10Over10F * psi[i];
        y = y > kSoftplusCap ? kSoftplusCap : y;
        rate[i] = std::log(1.0f + std::exp(y));
    }

    const double scale = bandwidth_hz / std::log(2.0) / 1e9;  // Gbps per nat
    const int n_sites = table.n_sites;
    for (int i = 0; i < out.rows(); ++i)
        for (int k = 0; k < n_sites; ++k) out(i, k) = 0.0;
    for (int u = 0; u < table.n_ues; ++u) {
        double* row = out.row(mo_of_ue[u]);
        const float* r = rate + static_cast<size_t>(u) * n_sites;
        for (int k = 0; k < n_sites; ++k) row[k] += r[k];
    }
    for (int i = 0; i < out.rows(); ++i) {
        double* row = out.row(i);
        for (int k = 0; k < n_sites; ++k) row[k] *= scale;
    }
}

}  // namespace slicesched
