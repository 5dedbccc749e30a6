#include "slicesched/domain.hpp"

namespace slicesched {

std::vector<int> Scenario::qos_set() const {
    std::vector<int> out;
    for (const auto& mo : mos)
        if (mo.qos_aware()) out.push_back(mo.id);
    return out;
}

std::vector<int> Scenario::best_effort_set() const {
    std::vector<int> out;
    for (const auto& mo : mos)
        if (!mo.qos_aware()) out.push_back(mo.id);
    return out;
}

Scenario validate_scenario(std::vector<MobileOperator> mos, int n_enodebs,
                           double radius_km) {
    if (mos.empty()) throw std::invalid_argument("scenario: empty MO set");
    if (n_enodebs < 1) throw std::invalid_argument("scenario: need at least one eNodeB");
    if (radius_km < 0) throw std::invalid_argument("scenario: negative district radius");
    for (size_t i = 0; i < mos.size(); ++i) {
        auto& mo = mos[i];
        mo.id = static_cast<int>(i);
        const std::string tag = "MO-" + std::to_string(i + 1);
        if (mo.ue_count <= 0)
            throw std::invalid_argument("scenario: " + tag + ": ue_count must be positive");
        if (mo.beta < 0)
            throw std::invalid_argument("scenario: " + tag + ": negative beta");
        if (mo.qos_aware()) {
            if (!mo.demand_range)
                throw std::invalid_argument("scenario: " + tag +
                                            ": QoS-aware MO without demand range");
            auto [lo, hi] = *mo.demand_range;
            if (lo < 0 || lo >= hi)
                throw std::invalid_argument("scenario: " + tag +
                                            ": demand range must satisfy 0 <= low < high");
        } else if (mo.demand_range) {
            throw std::invalid_argument("scenario: " + tag +
                                        ": best-effort MO with a demand range");
        }
    }
    Scenario s;
    s.mos = std::move(mos);
    s.n_enodebs = n_enodebs;
    s.radius_km = radius_km;
    return s;
}

SchedulerState SchedulerState::initial(int n_mos, int n_enodebs, double tau) {
    if (tau <= 1.0) throw std::invalid_argument("scheduler state: tau must exceed 1");
    SchedulerState st;
    st.lambda.assign(n_mos, kLambdaInitGbps);
    st.tau = tau;
    st.rr_offset = 0;
    st.delta = Matrix(n_mos, n_enodebs, 0.0);
    return st;
}

}  // namespace slicesched
