#pragma once

#include <optional>
#include <span>
#include <vector>

#include "slicesched/domain.hpp"

namespace slicesched {

// rate_i = sum of R(i,k) over the eNodeBs assigned to MO i. Unassigned
// columns contribute to nobody.
std::vector<double> per_mo_rate(const AssignmentVector& phi, const RateMatrix& rates);

// Jain's index (sum r)^2 / (M * sum r^2) in [1/M, 1]. An all-zero vector is
// perfectly equal by convention and maps to 1.
double jain_fairness(const std::vector<double>& rates);

// Fraction of QoS-aware MOs whose rate meets their current demand.
double satisfied_ratio(const std::vector<double>& rates, const DemandVector& omega,
                       const std::vector<int>& qos_set);

struct SlotRecord {
    int slot = 0;
    std::vector<double> per_mo_rate_gbps;
    DemandVector omega;
    std::vector<int> sites_per_mo;
    double fairness = 0.0;
    std::optional<double> satisfied;  // empty when there is no QoS MO

    bool operator==(const SlotRecord&) const = default;
};

// Time averages of one replication.
struct ReplicationStats {
    double fairness = 0.0;
    double total_rate_gbps = 0.0;
    std::optional<double> satisfied;
};

struct MetricSummary {
    double fairness_mean = 0.0, fairness_std = 0.0;
    double rate_gbps_mean = 0.0, rate_gbps_std = 0.0;
    std::optional<double> satisfied_mean, satisfied_std;
};

ReplicationStats time_average(std::span<const SlotRecord> records);

// Replication-level mean and population standard deviation per metric.
MetricSummary across_replications(std::span<const ReplicationStats> stats);

MetricSummary aggregate(const std::vector<std::vector<SlotRecord>>& per_replication);

}  // namespace slicesched
