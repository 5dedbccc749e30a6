#pragma once

#include <string>
#include <vector>

#include "slicesched/domain.hpp"
#include "slicesched/geometry.hpp"

namespace slicesched {

enum class SchedulerKind {
    kRoundRobin,
    kBlindEqualThroughput,
    kMaxThroughput,
    kProportionalFair,
    kMaxMinFair,
    kRateGuarantee,
    kStaticDemand,
    kStaticUe,
};

// Order used by "--scheduler all" and the summary table.
const std::vector<SchedulerKind>& all_scheduler_kinds();
std::string scheduler_name(SchedulerKind kind);
SchedulerKind parse_scheduler(const std::string& name);
bool scheduler_uses_metric(SchedulerKind kind);

// Whether average-rate dependent metrics are recomputed after every eNodeB
// grant (provisional lambda) or once per allocation interval.
enum class RefreshPolicy { kPerAssignment, kPerInterval };

RefreshPolicy parse_refresh(const std::string& name);
std::string refresh_name(RefreshPolicy policy);

struct PfParams {
    double alpha = 1.0;
    double gamma = 0.8;
};

// U'(lambda) = omega/lambda + beta*exp(-beta*(lambda-omega)/omega), the
// marginal of the rate-guarantee utility.
double rg_marginal_utility(double lambda_gbps, double omega_gbps, double beta);

// One metric matrix for the metric-driven schedulers (RR, BET, MT, PF, RG).
MetricMatrix compute_metric(SchedulerKind kind, const RateMatrix& rates,
                            const SchedulerState& state, const DemandVector& omega,
                            const std::vector<MobileOperator>& mos,
                            const PfParams& pf);

// Column-wise argmax, ties to the lowest MO index.
AssignmentVector assign_argmax(const MetricMatrix& metric);

// Full assignment pass for a metric scheduler. Under kPerAssignment the
// lambda-dependent metrics (BET, PF, RG) see a provisional average that
// folds in rates already granted this interval, scaled by 1/tau like the
// smoothing recursion.
AssignmentVector assign_argmax(SchedulerKind kind, const RateMatrix& rates,
                               const SchedulerState& state, const DemandVector& omega,
                               const std::vector<MobileOperator>& mos,
                               const PfParams& pf, RefreshPolicy refresh);

// Max-min fair procedure: QoS MOs in ascending demand order greedily take
// their best remaining eNodeB until satisfied; if the pool runs dry the
// unsatisfied MOs' grants are redistributed round robin; leftovers go round
// robin to best-effort MOs. Columns stay unassigned only when every QoS MO
// is satisfied and there is no best-effort MO.
AssignmentVector assign_mmf(const RateMatrix& rates, const DemandVector& omega,
                            const std::vector<int>& qos_set,
                            const std::vector<int>& be_set);

AssignmentVector assign_static(SchedulerKind kind, const DistrictLayout& layout);

// lambda_i <- (1 - 1/tau)*lambda_i + granted_rate_i/tau, with the indicator
// matrix rebuilt from the just-completed interval's assignment.
SchedulerState update_avg_rate(SchedulerState state, const RateMatrix& rates,
                               const AssignmentVector& phi);

// Rotates the cyclic allocation pattern once per interval.
SchedulerState advance_rr(SchedulerState state);

}  // namespace slicesched
