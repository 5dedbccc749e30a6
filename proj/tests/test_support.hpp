#pragma once

#include <initializer_list>
#include <vector>

#include "slicesched/config.hpp"
#include "slicesched/domain.hpp"

namespace test_support {

inline slicesched::Scenario paper_scenario() {
    return slicesched::default_config().scenario;
}

inline slicesched::Matrix make_matrix(std::initializer_list<std::initializer_list<double>> rows) {
    const int r = static_cast<int>(rows.size());
    const int c = static_cast<int>(rows.begin()->size());
    slicesched::Matrix m(r, c);
    int i = 0;
    for (const auto& row : rows) {
        int k = 0;
        for (double v : row) m(i, k++) = v;
        ++i;
    }
    return m;
}

inline slicesched::DemandVector make_demands(std::initializer_list<double> values) {
    slicesched::DemandVector d;
    d.omega.assign(values);
    return d;
}

}  // namespace test_support
