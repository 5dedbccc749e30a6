#include "doctest.h"
#include "slicesched/domain.hpp"
#include "test_support.hpp"

using namespace slicesched;

namespace {

MobileOperator qos_mo(int ues, double beta, double lo, double hi) {
    MobileOperator mo;
    mo.kind = MoKind::kQosAware;
    mo.ue_count = ues;
    mo.beta = beta;
    mo.demand_range = {{lo, hi}};
    return mo;
}

MobileOperator be_mo(int ues) {
    MobileOperator mo;
    mo.kind = MoKind::kBestEffort;
    mo.ue_count = ues;
    return mo;
}

}  // namespace

TEST_CASE("paper scenario validates") {
    const Scenario s = validate_scenario(
        {qos_mo(300, 10.0, 0, 8), qos_mo(500, 9.5, 0, 12), be_mo(200)}, 31, 35.0);
    CHECK(s.mo_count() == 3);
    CHECK(s.n_enodebs == 31);
    CHECK(s.qos_set() == std::vector<int>{0, 1});
    CHECK(s.best_effort_set() == std::vector<int>{2});
    CHECK(s.mos[0].id == 0);
    CHECK(s.mos[2].id == 2);
}

TEST_CASE("degenerate single best-effort scenario is legal") {
    const Scenario s = validate_scenario({be_mo(1)}, 1, 1.0);
    CHECK(s.qos_set().empty());
    CHECK(s.best_effort_set() == std::vector<int>{0});
}

TEST_CASE("malformed scenarios are rejected") {
    CHECK_THROWS_AS(validate_scenario({qos_mo(10, 1.0, 5, 2)}, 3, 10.0),
                    std::invalid_argument);  // low >= high
    CHECK_THROWS_AS(validate_scenario({}, 3, 10.0), std::invalid_argument);
    CHECK_THROWS_AS(validate_scenario({be_mo(5)}, 0, 10.0), std::invalid_argument);
    CHECK_THROWS_AS(validate_scenario({qos_mo(10, -1.0, 0, 5)}, 3, 10.0),
                    std::invalid_argument);
    MobileOperator no_range;
    no_range.kind = MoKind::kQosAware;
    no_range.ue_count = 10;
    CHECK_THROWS_AS(validate_scenario({no_range}, 3, 10.0), std::invalid_argument);
    CHECK_THROWS_AS(validate_scenario({be_mo(0)}, 3, 10.0), std::invalid_argument);
}

TEST_CASE("scheduler state starts division safe") {
    const auto st = SchedulerState::initial(3, 31, 50.0);
    for (double l : st.lambda) CHECK(l == kLambdaInitGbps);
    CHECK(st.rr_offset == 0);
    CHECK(st.delta.rows() == 3);
    CHECK(st.delta.cols() == 31);
    CHECK_THROWS_AS(SchedulerState::initial(3, 31, 1.0), std::invalid_argument);
}

TEST_CASE("demand vector sentinel round trip") {
    auto d = test_support::make_demands({4.0, DemandVector::kNoDemand, 0.0});
    CHECK(d.has_demand(0));
    CHECK_FALSE(d.has_demand(1));
    CHECK(d.has_demand(2));  // zero demand is still a demand
}
