#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "slicesched/domain.hpp"
#include "slicesched/geometry.hpp"

namespace slicesched {

struct CsvError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Shortest round-trippable decimal representation.
std::string format_double(double v);

std::vector<std::string> split_csv_line(const std::string& line);

// Wide rate-matrix form: header "mo_id,e1,...,eK", one row per MO, Gbps.
RateMatrix read_rate_matrix_csv(std::istream& in);
void write_rate_matrix_csv(const RateMatrix& rates, std::ostream& out);

// Header "mo_id,demand_gbps"; best-effort rows carry the literal "BE".
DemandVector read_demand_csv(std::istream& in);
void write_demand_csv(const DemandVector& omega, std::ostream& out);

// Header "enodeb_id,mo_id"; 1-based ids, "none" for unassigned columns.
void write_assignment_csv(const AssignmentVector& phi, std::ostream& out);
AssignmentVector read_assignment_csv(std::istream& in);

}  // namespace slicesched
