#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace slicesched {

// Average-rate warm start so 1/lambda and R/lambda^gamma metrics are finite
// in slot 0. The smoothing filter forgets it within a few time constants.
inline constexpr double kLambdaInitGbps = 0.001;

enum class MoKind { kQosAware, kBestEffort };

struct MobileOperator {
    int id = 0;                 // 0-based index; user-facing output is 1-based
    MoKind kind = MoKind::kBestEffort;
    int ue_count = 0;
    double beta = 0.0;          // rate-guarantee aggressiveness constant
    std::optional<std::pair<double, double>> demand_range;  // Gbps, QoS only

    bool qos_aware() const { return kind == MoKind::kQosAware; }
};

// Immutable description of one district-level allocation problem.
struct Scenario {
    std::vector<MobileOperator> mos;
    int n_enodebs = 0;
    double radius_km = 0.0;

    int mo_count() const { return static_cast<int>(mos.size()); }
    std::vector<int> qos_set() const;
    std::vector<int> best_effort_set() const;
};

Scenario validate_scenario(std::vector<MobileOperator> mos, int n_enodebs,
                           double radius_km);

// Dense row-major MO x eNodeB matrix. Rows are MOs, columns are eNodeBs.
class Matrix {
  public:
    Matrix() = default;
    Matrix(int rows, int cols, double fill = 0.0)
        : rows_(rows), cols_(cols), v_(static_cast<size_t>(rows) * cols, fill) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    double& operator()(int i, int k) { return v_[static_cast<size_t>(i) * cols_ + k]; }
    double operator()(int i, int k) const { return v_[static_cast<size_t>(i) * cols_ + k]; }
    double* row(int i) { return v_.data() + static_cast<size_t>(i) * cols_; }
    const double* row(int i) const { return v_.data() + static_cast<size_t>(i) * cols_; }
    bool operator==(const Matrix&) const = default;

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<double> v_;
};

using RateMatrix = Matrix;    // achievable rates, Gbps
using MetricMatrix = Matrix;  // scheduler metrics

// Per-MO demand in Gbps; best-effort entries hold kNoDemand. The sentinel
// never leaks into files: CSV writers emit the literal "BE".
struct DemandVector {
    static constexpr double kNoDemand = -1.0;
    std::vector<double> omega;

    DemandVector() = default;
    explicit DemandVector(int n) : omega(n, kNoDemand) {}
    int size() const { return static_cast<int>(omega.size()); }
    bool has_demand(int i) const { return omega[i] >= 0.0; }
    bool operator==(const DemandVector&) const = default;
};

// Owner MO per eNodeB. kUnassigned may appear only when the max-min fair
// scheduler runs out of takers; CSV writers emit "none" for it.
struct AssignmentVector {
    static constexpr int kUnassigned = -1;
    std::vector<int> phi;

    AssignmentVector() = default;
    explicit AssignmentVector(int n) : phi(n, kUnassigned) {}
    int size() const { return static_cast<int>(phi.size()); }
    bool operator==(const AssignmentVector&) const = default;
};

// Smoothed average rates plus the scheduler cursors carried across intervals.
// Owned by exactly one replication; never shared between threads.
struct SchedulerState {
    std::vector<double> lambda;  // Gbps
    double tau = 50.0;           // smoothing time constant, slots (> 1)
    int rr_offset = 0;
    Matrix delta;                // previous-interval indicator, one 1 per column

    static SchedulerState initial(int n_mos, int n_enodebs, double tau);
};

}  // namespace slicesched
