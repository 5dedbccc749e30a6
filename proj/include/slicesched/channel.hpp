#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "slicesched/domain.hpp"
#include "slicesched/geometry.hpp"

namespace slicesched {

// Per-UE transmit power. kPerUe drives every UE-eNodeB link at the full
// eNodeB budget; kSharedPerSite splits the budget across the UEs associated
// with the serving site.
enum class PowerPolicy { kPerUe, kSharedPerSite };

struct ChannelParams {
    double carrier_ghz = 2.0;             // informational only
    double bandwidth_per_ue_hz = 5e6;
    double tx_power_dbm = 46.0;
    double noise_psd_dbm_hz = -179.0;
    double shadow_sigma_db = 8.0;
    PowerPolicy power = PowerPolicy::kPerUe;
};

// Links shorter than this are clamped; sub-meter UE-eNodeB distances are not
// meaningful in a macro-cell model.
inline constexpr double kMinLinkKm = 1e-3;

inline double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

// Macro-cell loss at 2 GHz: 128 + 37.6*log10(d_km) + shadowing, in dB.
double path_loss_db(double d_km, double shadow_db);

// Zero-mean Gaussian in dB (log-normal in linear scale).
double draw_shadowing(std::mt19937_64& rng, double sigma_db);

// B*log2(1 + P*gain/(N0*B)), in bit/s.
double shannon_rate(double bandwidth_hz, double tx_power_w, double gain_linear,
                    double noise_psd_w_hz);

// ln of the per-link SNR at zero shadowing, row-major [ue][site].
// Precomputed once per replication; only shadowing varies per slot.
struct LinkSnrTable {
    int n_ues = 0, n_sites = 0;
    std::vector<float> ln_snr0;
};

LinkSnrTable precompute_link_snr(const UePlacement& placement,
                                 const DistrictLayout& layout,
                                 const ChannelParams& params);

// Fills psi_db with n zero-mean Gaussian dB samples. The bulk generator pairs
// two 24-bit uniforms from each engine output through a Box-Muller transform,
// filling pairs in order; it exists so the per-slot field vectorizes.
void draw_shadowing_field(std::mt19937_64& rng, double sigma_db, size_t n,
                          std::vector<float>& psi_db);

// R(i,k) = sum over MO i's UEs of their Shannon rate on the link to eNodeB k,
// in Gbps. Every UE of the MO counts toward every site: a granted eNodeB
// serves the MO's whole district-wide UE population.
RateMatrix build_rate_matrix(const Scenario& scenario, const UePlacement& placement,
                             const DistrictLayout& layout,
                             const std::vector<float>& psi_db,
                             const ChannelParams& params);

// Hot-path equivalent of build_rate_matrix working from the precomputed SNR
// table; float kernel, double accumulation.
void rate_matrix_from_field(const LinkSnrTable& table, const std::vector<int>& mo_of_ue,
                            const std::vector<float>& psi_db, double bandwidth_hz,
                            RateMatrix& out, std::vector<float>& scratch);

}  // namespace slicesched
