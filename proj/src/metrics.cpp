#include "slicesched/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace slicesched {

std::vector<double> per_mo_rate(const AssignmentVector& phi, const RateMatrix& rates) {
    if (phi.size() != rates.cols())
        throw std::invalid_argument("per-MO rate: assignment length does not match matrix");
    std::vector<double> out(rates.rows(), 0.0);
    for (int k = 0; k < phi.size(); ++k) {
        const int mo = phi.phi[k];
        if (mo == AssignmentVector::kUnassigned) continue;
        out[mo] += rates(mo, k);
    }
    return out;
}

double jain_fairness(const std::vector<double>& rates) {
    if (rates.empty()) throw std::invalid_argument("fairness: empty rate vector");
    double sum = 0.0, sum_sq = 0.0;
    for (double r : rates) {
        sum += r;
        sum_sq += r * r;
    }
    if (sum_sq == 0.0) return 1.0;  // all zero: perfectly equal by convention
    return sum * sum / (static_cast<double>(rates.size()) * sum_sq);
}

double satisfied_ratio(const std::vector<double>& rates, const DemandVector& omega,
                       const std::vector<int>& qos_set) {
    if (qos_set.empty()) throw std::invalid_argument("satisfied ratio: no QoS-aware MOs");
    int met = 0;
    for (int mo : qos_set)
        if (rates[mo] >= omega.omega[mo]) ++met;
    return static_cast<double>(met) / static_cast<double>(qos_set.size());
}

ReplicationStats time_average(std::span<const SlotRecord> records) {
    if (records.empty()) throw std::invalid_argument("time average: no records");
    ReplicationStats st;
    double sat_sum = 0.0;
    int sat_n = 0;
    for (const auto& rec : records) {
        st.fairness += rec.fairness;
        double total = 0.0;
        for (double r : rec.per_mo_rate_gbps) total += r;
        st.total_rate_gbps += total;
        if (rec.satisfied) {
            sat_sum += *rec.satisfied;
            ++sat_n;
        }
    }
    st.fairness /= static_cast<double>(records.size());
    st.total_rate_gbps /= static_cast<double>(records.size());
    if (sat_n > 0) st.satisfied = sat_sum / sat_n;
    return st;
}

MetricSummary across_replications(std::span<const ReplicationStats> stats) {
    if (stats.empty()) throw std::invalid_argument("aggregate: no replications");
    const double n = static_cast<double>(stats.size());
    MetricSummary s;
    double sat_sum = 0.0, sat_sq = 0.0;
    int sat_n = 0;
    for (const auto& st : stats) {
        s.fairness_mean += st.fairness;
        s.rate_gbps_mean += st.total_rate_gbps;
        if (st.satisfied) {
            sat_sum += *st.satisfied;
            sat_sq += *st.satisfied * *st.satisfied;
            ++sat_n;
        }
    }
    s.fairness_mean /= n;
    s.rate_gbps_mean /= n;
    double var_f = 0.0, var_r = 0.0;
    for (const auto& st : stats) {
        var_f += (st.fairness - s.fairness_mean) * (st.fairness - s.fairness_mean);
        var_r += (st.total_rate_gbps - s.rate_gbps_mean) *
                 (st.total_rate_gbps - s.rate_gbps_mean);
    }
    s.fairness_std = std::sqrt(var_f / n);
    s.rate_gbps_std = std::sqrt(var_r / n);
    if (sat_n > 0) {
        const double mean = sat_sum / sat_n;
        s.satisfied_mean = mean;
        s.satisfied_std = std::sqrt(std::max(0.0, sat_sq / sat_n - mean * mean));
    }
    return s;
}

MetricSummary aggregate(const std::vector<std::vector<SlotRecord>>& per_replication) {
    std::vector<ReplicationStats> stats;
    stats.reserve(per_replication.size());
    for (const auto& records : per_replication) stats.push_back(time_average(records));
    return across_replications(stats);
}

}  // namespace slicesched
