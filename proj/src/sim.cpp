#include "slicesched/sim.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace slicesched {

namespace {

constexpr uint64_t kGolden = 0x9E3779B97F4A7C15ull;

uint64_t mix64(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Independent sub-streams per randomness source, so switching one source on
// or off never perturbs the others.
enum StreamTag : uint64_t { kPlacementStream = 1, kShadowingStream = 2, kDemandStream = 3 };

std::mt19937_64 stream_rng(uint64_t replication_seed, StreamTag tag) {
    return std::mt19937_64(mix64(replication_seed ^ (kGolden * tag)));
}

}  // namespace

void validate_sim_config(const SimConfig& config) {
    if (config.n_replications < 1)
        throw std::invalid_argument("sim: need at least one replication");
    if (config.n_slots < 1) throw std::invalid_argument("sim: need at least one slot");
    if (config.demand_period < 1)
        throw std::invalid_argument("sim: demand period must be at least one slot");
    if (config.tau <= 1.0) throw std::invalid_argument("sim: tau must exceed 1");
    if (config.layout.n_sites != config.scenario.n_enodebs)
        throw std::invalid_argument("sim: layout site count does not match scenario");
}

uint64_t derive_seed(uint64_t master_seed, uint64_t replication_index) {
    return mix64(master_seed + kGolden * (replication_index + 1));
}

ReplicationResult run_replication(const SimConfig& config, int replication_index,
                                  bool keep_trace, const SlotObserver& observer) {
    validate_sim_config(config);
    const Scenario& sc = config.scenario;
    const int n_mos = sc.mo_count();

    DistrictLayout layout = generate_layout(config.layout.n_sites, config.layout.radius_km,
                                            config.layout.intersite_km);
    if (n_mos == 3 && config.layout.n_sites == 31) {
        layout.labels_demand = label_static(layout, {12, 18, 1});
        layout.labels_ue = label_static(layout, {9, 16, 6});
    }

    ReplicationResult result;
    result.replication = replication_index;
    result.seed = derive_seed(config.master_seed, replication_index);

    auto place_rng = stream_rng(result.seed, kPlacementStream);
    auto shadow_rng = stream_rng(result.seed, kShadowingStream);
    auto demand_rng = stream_rng(result.seed, kDemandStream);

    const UePlacement placement = place_ues(sc, layout, place_rng);
    const LinkSnrTable table = precompute_link_snr(placement, layout, config.channel);
    const size_t n_pairs = table.ln_snr0.size();

    SchedulerState state = SchedulerState::initial(n_mos, sc.n_enodebs, config.tau);
    DemandVector omega(n_mos);
    RateMatrix rates(n_mos, sc.n_enodebs);
    std::vector<float> psi_db, scratch;
    const std::vector<int> qos = sc.qos_set();
    const std::vector<int> be = sc.best_effort_set();

    result.records.reserve(config.n_slots);
    if (keep_trace) result.trace.reserve(config.n_slots);

    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int slot = 0; slot < config.n_slots; ++slot) {
        if (slot % config.demand_period == 0) {
            for (const auto& mo : sc.mos) {
                if (mo.qos_aware()) {
                    auto [lo, hi] = *mo.demand_range;
                    omega.omega[mo.id] = lo + (hi - lo) * unit(demand_rng);
                } else {
                    omega.omega[mo.id] = DemandVector::kNoDemand;
                }
            }
        }
        draw_shadowing_field(shadow_rng, config.channel.shadow_sigma_db, n_pairs, psi_db);
        rate_matrix_from_field(table, placement.mo_of_ue, psi_db,
                               config.channel.bandwidth_per_ue_hz, rates, scratch);

        AssignmentVector phi;
        switch (config.scheduler) {
            case SchedulerKind::kMaxMinFair:
                phi = assign_mmf(rates, omega, qos, be);
                break;
            case SchedulerKind::kStaticDemand:
            case SchedulerKind::kStaticUe:
                phi = assign_static(config.scheduler, layout);
                break;
            default:
                phi = assign_argmax(config.scheduler, rates, state, omega, sc.mos,
                                    config.pf, config.refresh);
        }

        SlotRecord rec;
        rec.slot = slot;
        rec.per_mo_rate_gbps = per_mo_rate(phi, rates);
        rec.omega = omega;
        rec.sites_per_mo.assign(n_mos, 0);
        for (int k = 0; k < phi.size(); ++k)
            if (phi.phi[k] != AssignmentVector::kUnassigned) ++rec.sites_per_mo[phi.phi[k]];
        rec.fairness = jain_fairness(rec.per_mo_rate_gbps);
        if (!qos.empty()) rec.satisfied = satisfied_ratio(rec.per_mo_rate_gbps, omega, qos);

        if (observer) observer(slot, rates, omega, phi);
        state = update_avg_rate(std::move(state), rates, phi);
        state = advance_rr(std::move(state));
        if (keep_trace) result.trace.push_back(phi);
        result.records.push_back(std::move(rec));
    }
    return result;
}

int resolve_thread_cap(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("SLICE_SCHED_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

MonteCarloResult run_monte_carlo(const SimConfig& config, int n_threads,
                                 bool keep_records) {
    validate_sim_config(config);
    const int reps = config.n_replications;
    const int threads = std::min(resolve_thread_cap(n_threads), reps);

    std::vector<ReplicationResult> results(reps);
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int i = next.fetch_add(1); i < reps; i = next.fetch_add(1))
            results[i] = run_replication(config, i);
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    std::vector<ReplicationStats> stats;
    stats.reserve(reps);
    for (const auto& r : results) stats.push_back(time_average(r.records));

    MonteCarloResult out;
    out.summary = across_replications(stats);
    if (keep_records) out.replications = std::move(results);
    return out;
}

}  // namespace slicesched
