#include "slicesched/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace slicesched {

double path_loss_db(double d_km, double shadow_db) {
    if (d_km <= 0) throw std::invalid_argument("path loss: distance must be positive");
    return 128.0 + 37.6 * std::log10(d_km) + shadow_db;
}

double draw_shadowing(std::mt19937_64& rng, double sigma_db) {
    if (sigma_db < 0) throw std::invalid_argument("shadowing: negative sigma");
    if (sigma_db == 0) return 0.0;
    std::normal_distribution<double> dist(0.0, sigma_db);
    return dist(rng);
}

double shannon_rate(double bandwidth_hz, double tx_power_w, double gain_linear,
                    double noise_psd_w_hz) {
    if (bandwidth_hz <= 0) throw std::invalid_argument("shannon rate: bandwidth must be positive");
    if (noise_psd_w_hz <= 0) throw std::invalid_argument("shannon rate: noise PSD must be positive");
    if (tx_power_w <= 0) throw std::invalid_argument("shannon rate: power must be positive");
    if (gain_linear < 0) throw std::invalid_argument("shannon rate: negative gain");
    return bandwidth_hz * std::log2(1.0 + tx_power_w * gain_linear /
                                              (noise_psd_w_hz * bandwidth_hz));
}

LinkSnrTable precompute_link_snr(const UePlacement& placement,
                                 const DistrictLayout& layout,
                                 const ChannelParams& params) {
    const int n_ues = placement.n_ues();
    const int n_sites = layout.n_sites();
    const double n0 = dbm_to_watts(params.noise_psd_dbm_hz);
    const double site_power_w = dbm_to_watts(params.tx_power_dbm);

    LinkSnrTable table;
    table.n_ues = n_ues;
    table.n_sites = n_sites;
    table.ln_snr0.resize(static_cast<size_t>(n_ues) * n_sites);
    const double ln10_over_10 = std::log(10.0) / 10.0;

    for (int u = 0; u < n_ues; ++u) {
        double p_u = site_power_w;
        if (params.power == PowerPolicy::kSharedPerSite)
            p_u /= placement.ues_per_site[placement.site_of_ue[u]];
        const double base = std::log(p_u / (n0 * params.bandwidth_per_ue_hz));
        for (int k = 0; k < n_sites; ++k) {
            const double dx = placement.pos[u].x - layout.sites[k].x;
            const double dy = placement.pos[u].y - layout.sites[k].y;
            const double d = std::max(std::hypot(dx, dy), kMinLinkKm);
            const double loss_db = path_loss_db(d, 0.0);
            table.ln_snr0[static_cast<size_t>(u) * n_sites + k] =
                static_cast<float>(base - loss_db * ln10_over_10);
        }
    }
    return table;
}

RateMatrix build_rate_matrix(const Scenario& scenario, const UePlacement& placement,
                             const DistrictLayout& layout,
                             const std::vector<float>& psi_db,
                             const ChannelParams& params) {
    const int n_ues = placement.n_ues();
    const int n_sites = layout.n_sites();
    if (psi_db.size() != static_cast<size_t>(n_ues) * n_sites)
        throw std::invalid_argument("rate matrix: shadowing field has wrong shape");

    const double n0 = dbm_to_watts(params.noise_psd_dbm_hz);
    const double site_power_w = dbm_to_watts(params.tx_power_dbm);
    RateMatrix rates(scenario.mo_count(), n_sites, 0.0);

    for (int u = 0; u < n_ues; ++u) {
        double p_u = site_power_w;
        if (params.power == PowerPolicy::kSharedPerSite)
            p_u /= placement.ues_per_site[placement.site_of_ue[u]];
        double* row = rates.row(placement.mo_of_ue[u]);
        for (int k = 0; k < n_sites; ++k) {
            const double dx = placement.pos[u].x - layout.sites[k].x;
            const double dy = placement.pos[u].y - layout.sites[k].y;
            const double d = std::max(std::hypot(dx, dy), kMinLinkKm);
            const double loss = path_loss_db(d, psi_db[static_cast<size_t>(u) * n_sites + k]);
            row[k] += shannon_rate(params.bandwidth_per_ue_hz, p_u,
                                   db_to_linear(-loss), n0) / 1e9;
        }
    }
    return rates;
}

}  // namespace slicesched
