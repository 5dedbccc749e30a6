#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "slicesched/channel.hpp"
#include "slicesched/domain.hpp"
#include "slicesched/geometry.hpp"
#include "slicesched/metrics.hpp"
#include "slicesched/schedulers.hpp"

namespace slicesched {

struct LayoutParams {
    int n_sites = 31;
    double radius_km = 35.0;
    double intersite_km = 11.0;
};

struct SimConfig {
    Scenario scenario;
    LayoutParams layout;
    ChannelParams channel;
    SchedulerKind scheduler = SchedulerKind::kMaxMinFair;
    RefreshPolicy refresh = RefreshPolicy::kPerAssignment;
    PfParams pf;
    double tau = 50.0;
    int n_replications = 200;
    int n_slots = 1000;
    int demand_period = 50;
    uint64_t master_seed = 1;
};

void validate_sim_config(const SimConfig& config);

// splitmix64-style avalanche of master_seed + GOLDEN*(index+1); injective in
// the index for a fixed master seed, so derived seeds never collide.
uint64_t derive_seed(uint64_t master_seed, uint64_t replication_index);

struct ReplicationResult {
    int replication = 0;
    uint64_t seed = 0;
    std::vector<SlotRecord> records;
    std::vector<AssignmentVector> trace;  // per-slot phi when requested
};

// Called after each slot with that slot's inputs and outcome.
using SlotObserver =
    std::function<void(int slot, const RateMatrix&, const DemandVector&,
                       const AssignmentVector&)>;

// One seeded replication: UEs placed once, shadowing redrawn every slot,
// demands redrawn every demand_period slots starting at slot 0.
ReplicationResult run_replication(const SimConfig& config, int replication_index,
                                  bool keep_trace = false,
                                  const SlotObserver& observer = {});

struct MonteCarloResult {
    MetricSummary summary;
    std::vector<ReplicationResult> replications;
};

// 0 = resolve from SLICE_SCHED_THREADS, falling back to the hardware.
int resolve_thread_cap(int requested = 0);

// Replications run as independent tasks; results are merged by replication
// index, so the aggregate does not depend on execution order.
MonteCarloResult run_monte_carlo(const SimConfig& config, int n_threads = 0,
                                 bool keep_records = true);

}  // namespace slicesched
