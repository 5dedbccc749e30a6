#include "slicesched/schedulers.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace slicesched {

const std::vector<SchedulerKind>& all_scheduler_kinds() {
    static const std::vector<SchedulerKind> kinds = {
        SchedulerKind::kRoundRobin,      SchedulerKind::kBlindEqualThroughput,
        SchedulerKind::kMaxThroughput,   SchedulerKind::kProportionalFair,
        SchedulerKind::kMaxMinFair,      SchedulerKind::kRateGuarantee,
        SchedulerKind::kStaticDemand,    SchedulerKind::kStaticUe,
    };
    return kinds;
}

std::string scheduler_name(SchedulerKind kind) {
    switch (kind) {
        case SchedulerKind::kRoundRobin: return "rr";
        case SchedulerKind::kBlindEqualThroughput: return "bet";
        case SchedulerKind::kMaxThroughput: return "mt";
        case SchedulerKind::kProportionalFair: return "pf";
        case SchedulerKind::kMaxMinFair: return "mmf";
        case SchedulerKind::kRateGuarantee: return "rg";
        case SchedulerKind::kStaticDemand: return "static-demand";
        case SchedulerKind::kStaticUe: return "static-ue";
    }
    throw std::invalid_argument("unknown scheduler kind");
}

SchedulerKind parse_scheduler(const std::string& name) {
    for (SchedulerKind k : all_scheduler_kinds())
        if (scheduler_name(k) == name) return k;
    throw std::invalid_argument("unknown scheduler '" + name + "'");
}

bool scheduler_uses_metric(SchedulerKind kind) {
    switch (kind) {
        case SchedulerKind::kRoundRobin:
        case SchedulerKind::kBlindEqualThroughput:
        case SchedulerKind::kMaxThroughput:
        case SchedulerKind::kProportionalFair:
        case SchedulerKind::kRateGuarantee:
            return true;
        default:
            return false;
    }
}

RefreshPolicy parse_refresh(const std::string& name) {
    if (name == "per-assignment") return RefreshPolicy::kPerAssignment;
    if (name == "per-interval") return RefreshPolicy::kPerInterval;
    throw std::invalid_argument("unknown refresh policy '" + name + "'");
}

std::string refresh_name(RefreshPolicy policy) {
    return policy == RefreshPolicy::kPerAssignment ? "per-assignment" : "per-interval";
}

double rg_marginal_utility(double lambda_gbps, double omega_gbps, double beta) {
    if (lambda_gbps <= 0) throw std::invalid_argument("rg utility: lambda must be positive");
    if (omega_gbps <= 0) throw std::invalid_argument("rg utility: omega must be positive");
    return omega_gbps / lambda_gbps +
           beta * std::exp(-beta * (lambda_gbps - omega_gbps) / omega_gbps);
}

namespace {

// Marginal-utility weight for one MO under the rate-guarantee metric.
// Best-effort MOs have no demand; they degrade to a proportional-fair
// leftover rule with a 1 Gbps nominal demand and beta = 0.
double rg_weight(const MobileOperator& mo, const DemandVector& omega, double lambda) {
    if (mo.qos_aware()) return rg_marginal_utility(lambda, omega.omega[mo.id], mo.beta);
    return rg_marginal_utility(lambda, 1.0, 0.0);
}

double metric_value(SchedulerKind kind, const RateMatrix& rates,
                    const std::vector<double>& lambda, const DemandVector& omega,
                    const std::vector<MobileOperator>& mos, const PfParams& pf,
                    int rr_offset, int i, int k) {
    switch (kind) {
        case SchedulerKind::kRoundRobin:
            return i == (k + rr_offset) % static_cast<int>(lambda.size()) ? 1.0 : 0.0;
        case SchedulerKind::kBlindEqualThroughput:
            return 1.0 / lambda[i];
        case SchedulerKind::kMaxThroughput:
            return rates(i, k);
        case SchedulerKind::kProportionalFair:
            return std::pow(rates(i, k), pf.alpha) / std::pow(lambda[i], pf.gamma);
        case SchedulerKind::kRateGuarantee:
            return rates(i, k) * rg_weight(mos[i], omega, lambda[i]);
        default:
            throw std::invalid_argument("scheduler has no metric form");
    }
}

void check_metric_inputs(SchedulerKind kind, const RateMatrix& rates,
                         const std::vector<double>& lambda) {
    if (rates.rows() == 0 || rates.cols() == 0)
        throw std::invalid_argument("metric: empty rate matrix");
    for (double l : lambda)
        if (!(l > 0)) throw std::invalid_argument("metric: lambda must be positive");
    if (kind != SchedulerKind::kRoundRobin && kind != SchedulerKind::kBlindEqualThroughput)
        for (int i = 0; i < rates.rows(); ++i)
            for (int k = 0; k < rates.cols(); ++k)
                if (!std::isfinite(rates(i, k)))
                    throw std::invalid_argument("metric: non-finite rate entry");
}

bool lambda_dependent(SchedulerKind kind) {
    return kind == SchedulerKind::kBlindEqualThroughput ||
           kind == SchedulerKind::kProportionalFair ||
           kind == SchedulerKind::kRateGuarantee;
}

}  // namespace

MetricMatrix compute_metric(SchedulerKind kind, const RateMatrix& rates,
                            const SchedulerState& state, const DemandVector& omega,
                            const std::vector<MobileOperator>& mos,
                            const PfParams& pf) {
    if (!scheduler_uses_metric(kind))
        throw std::invalid_argument("scheduler '" + scheduler_name(kind) +
                                    "' has no metric form");
    check_metric_inputs(kind, rates, state.lambda);
    MetricMatrix m(rates.rows(), rates.cols());
    for (int i = 0; i < rates.rows(); ++i)
        for (int k = 0; k < rates.cols(); ++k)
            m(i, k) = metric_value(kind, rates, state.lambda, omega, mos, pf,
                                   state.rr_offset, i, k);
    return m;
}

AssignmentVector assign_argmax(const MetricMatrix& metric) {
    if (metric.rows() == 0 || metric.cols() == 0)
        throw std::invalid_argument("argmax: empty metric matrix");
    AssignmentVector phi(metric.cols());
    for (int k = 0; k < metric.cols(); ++k) {
        int best = 0;
        for (int i = 1; i < metric.rows(); ++i)
            if (metric(i, k) > metric(best, k)) best = i;
        phi.phi[k] = best;
    }
    return phi;
}

AssignmentVector assign_argmax(SchedulerKind kind, const RateMatrix& rates,
                               const SchedulerState& state, const DemandVector& omega,
                               const std::vector<MobileOperator>& mos,
                               const PfParams& pf, RefreshPolicy refresh) {
    if (refresh == RefreshPolicy::kPerInterval || !lambda_dependent(kind))
        return assign_argmax(compute_metric(kind, rates, state, omega, mos, pf));

    check_metric_inputs(kind, rates, state.lambda);
    // Provisional average: the smoothing recursion evaluated with the rates
    // granted so far this interval.
    std::vector<double> lam(state.lambda);
    for (double& l : lam) l *= 1.0 - 1.0 / state.tau;
    AssignmentVector phi(rates.cols());
    for (int k = 0; k < rates.cols(); ++k) {
        int best = 0;
        double best_m = metric_value(kind, rates, lam, omega, mos, pf, state.rr_offset, 0, k);
        for (int i = 1; i < rates.rows(); ++i) {
            const double m = metric_value(kind, rates, lam, omega, mos, pf, state.rr_offset, i, k);
            if (m > best_m) {
                best_m = m;
                best = i;
            }
        }
        phi.phi[k] = best;
        lam[best] += rates(best, k) / state.tau;
    }
    return phi;
}

AssignmentVector assign_mmf(const RateMatrix& rates, const DemandVector& omega,
                            const std::vector<int>& qos_set,
                            const std::vector<int>& be_set) {
    const int n_sites = rates.cols();
    AssignmentVector phi(n_sites);
    std::vector<bool> free(n_sites, true);
    int n_free = n_sites;

    auto best_site = [&](int mo) {
        int best = -1;
        for (int k = 0; k < n_sites; ++k)
            if (free[k] && (best < 0 || rates(mo, k) > rates(mo, best))) best = k;
        return best;
    };
    auto grant = [&](int mo, int site) {
        phi.phi[site] = mo;
        free[site] = false;
        --n_free;
    };

    std::vector<int> order(qos_set);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (omega.omega[a] != omega.omega[b]) return omega.omega[a] < omega.omega[b];
        return a < b;
    });

    std::vector<double> got(rates.rows(), 0.0);
    bool exhausted = false;
    for (int mo : order) {
        while (got[mo] < omega.omega[mo] && n_free > 0) {
            const int k = best_site(mo);
            got[mo] += rates(mo, k);
            grant(mo, k);
        }
        if (got[mo] < omega.omega[mo]) {
            exhausted = true;
            break;
        }
    }

    if (exhausted) {
        // Reclaim what the unsatisfied MOs hold and spread it evenly: each
        // pass every still-unsatisfied MO takes its best remaining site.
        std::vector<int> unsat;
        for (int mo : order)
            if (got[mo] < omega.omega[mo]) unsat.push_back(mo);
        for (int k = 0; k < n_sites; ++k) {
            const int owner = phi.phi[k];
            if (owner != AssignmentVector::kUnassigned &&
                std::find(unsat.begin(), unsat.end(), owner) != unsat.end()) {
                phi.phi[k] = AssignmentVector::kUnassigned;
                free[k] = true;
                ++n_free;
            }
        }
        for (int mo : unsat) got[mo] = 0.0;
        while (n_free > 0 && !unsat.empty()) {
            for (auto it = unsat.begin(); it != unsat.end() && n_free > 0;) {
                const int mo = *it;
                const int k = best_site(mo);
                got[mo] += rates(mo, k);
                grant(mo, k);
                it = got[mo] >= omega.omega[mo] ? unsat.erase(it) : it + 1;
            }
        }
    }

    while (n_free > 0 && !be_set.empty()) {
        for (int mo : be_set) {
            if (n_free == 0) break;
            grant(mo, best_site(mo));
        }
    }
    return phi;
}

AssignmentVector assign_static(SchedulerKind kind, const DistrictLayout& layout) {
    const std::vector<int>* labels = nullptr;
    if (kind == SchedulerKind::kStaticDemand)
        labels = &layout.labels_demand;
    else if (kind == SchedulerKind::kStaticUe)
        labels = &layout.labels_ue;
    else
        throw std::invalid_argument("assign_static: not a static scheduler");
    if (labels->empty())
        throw std::invalid_argument("assign_static: layout carries no '" +
                                    scheduler_name(kind) + "' labels");
    AssignmentVector phi(layout.n_sites());
    phi.phi = *labels;
    return phi;
}

SchedulerState update_avg_rate(SchedulerState state, const RateMatrix& rates,
                               const AssignmentVector& phi) {
    if (state.tau <= 1.0) throw std::invalid_argument("update: tau must exceed 1");
    const double keep = 1.0 - 1.0 / state.tau;
    std::vector<double> granted(state.lambda.size(), 0.0);
    state.delta = Matrix(rates.rows(), rates.cols(), 0.0);
    for (int k = 0; k < phi.size(); ++k) {
        const int mo = phi.phi[k];
        if (mo == AssignmentVector::kUnassigned) continue;
        granted[mo] += rates(mo, k);
        state.delta(mo, k) = 1.0;
    }
    for (size_t i = 0; i < state.lambda.size(); ++i)
        state.lambda[i] = keep * state.lambda[i] + granted[i] / state.tau;
    return state;
}

SchedulerState advance_rr(SchedulerState state) {
    state.rr_offset = (state.rr_offset + 1) % static_cast<int>(state.lambda.size());
    return state;
}

}  // namespace slicesched
