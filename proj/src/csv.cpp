#include "slicesched/csv.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>

namespace slicesched {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            cells.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    cells.push_back(cur);
    return cells;
}

namespace {

bool trimmed_empty(const std::string& s) {
    for (char c : s)
        if (c != ' ' && c != '\t' && c != '\r') return false;
    return true;
}

double parse_cell_number(const std::string& cell, int line) {
    size_t used = 0;
    double v = 0;
    try {
        v = std::stod(cell, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != cell.size() || !std::isfinite(v))
        throw CsvError("csv line " + std::to_string(line) + ": bad number '" + cell + "'");
    return v;
}

std::string read_header(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) throw CsvError("csv: missing header row");
    if (!header.empty() && header.back() == '\r') header.pop_back();
    return header;
}

}  // namespace

RateMatrix read_rate_matrix_csv(std::istream& in) {
    const std::string header = read_header(in);
    const auto cols = split_csv_line(header);
    if (cols.size() < 2 || cols[0] != "mo_id")
        throw CsvError("rate csv: header must be mo_id,e1,...,eK");
    const int n_sites = static_cast<int>(cols.size()) - 1;

    std::vector<std::vector<double>> rows;
    std::string raw;
    int line = 1;
    while (std::getline(in, raw)) {
        ++line;
        if (trimmed_empty(raw)) continue;
        const auto cells = split_csv_line(raw);
        if (static_cast<int>(cells.size()) != n_sites + 1)
            throw CsvError("rate csv line " + std::to_string(line) + ": expected " +
                           std::to_string(n_sites + 1) + " cells, got " +
                           std::to_string(cells.size()));
        std::vector<double> row;
        for (int k = 0; k < n_sites; ++k) {
            const double v = parse_cell_number(cells[k + 1], line);
            if (v < 0) throw CsvError("rate csv line " + std::to_string(line) + ": negative rate");
            row.push_back(v);
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw CsvError("rate csv: no data rows");
    RateMatrix m(static_cast<int>(rows.size()), n_sites);
    for (size_t i = 0; i < rows.size(); ++i)
        for (int k = 0; k < n_sites; ++k) m(static_cast<int>(i), k) = rows[i][k];
    return m;
}

void write_rate_matrix_csv(const RateMatrix& rates, std::ostream& out) {
    out << "mo_id";
    for (int k = 0; k < rates.cols(); ++k) out << ",e" << k + 1;
    out << "\n";
    for (int i = 0; i < rates.rows(); ++i) {
        out << i + 1;
        for (int k = 0; k < rates.cols(); ++k) out << ',' << format_double(rates(i, k));
        out << "\n";
    }
}

DemandVector read_demand_csv(std::istream& in) {
    const std::string header = read_header(in);
    if (split_csv_line(header) != std::vector<std::string>{"mo_id", "demand_gbps"})
        throw CsvError("demand csv: header must be mo_id,demand_gbps");
    std::vector<double> omega;
    std::string raw;
    int line = 1;
    while (std::getline(in, raw)) {
        ++line;
        if (trimmed_empty(raw)) continue;
        const auto cells = split_csv_line(raw);
        if (cells.size() != 2)
            throw CsvError("demand csv line " + std::to_string(line) + ": expected 2 cells");
        if (cells[1] == "BE") {
            omega.push_back(DemandVector::kNoDemand);
        } else {
            const double v = parse_cell_number(cells[1], line);
            if (v < 0)
                throw CsvError("demand csv line " + std::to_string(line) + ": negative demand");
            omega.push_back(v);
        }
    }
    if (omega.empty()) throw CsvError("demand csv: no data rows");
    DemandVector d;
    d.omega = std::move(omega);
    return d;
}

void write_demand_csv(const DemandVector& omega, std::ostream& out) {
    out << "mo_id,demand_gbps\n";
    for (int i = 0; i < omega.size(); ++i) {
        out << i + 1 << ',';
        if (omega.has_demand(i))
            out << format_double(omega.omega[i]);
        else
            out << "BE";
        out << "\n";
    }
}

void write_assignment_csv(const AssignmentVector& phi, std::ostream& out) {
    out << "enodeb_id,mo_id\n";
    for (int k = 0; k < phi.size(); ++k) {
        out << k + 1 << ',';
        if (phi.phi[k] == AssignmentVector::kUnassigned)
            out << "none";
        else
            out << phi.phi[k] + 1;
        out << "\n";
    }
}

AssignmentVector read_assignment_csv(std::istream& in) {
    const std::string header = read_header(in);
    if (split_csv_line(header) != std::vector<std::string>{"enodeb_id", "mo_id"})
        throw CsvError("assignment csv: header must be enodeb_id,mo_id");
    std::vector<int> phi;
    std::string raw;
    int line = 1;
    while (std::getline(in, raw)) {
        ++line;
        if (trimmed_empty(raw)) continue;
        const auto cells = split_csv_line(raw);
        if (cells.size() != 2)
            throw CsvError("assignment csv line " + std::to_string(line) + ": expected 2 cells");
        if (cells[1] == "none") {
            phi.push_back(AssignmentVector::kUnassigned);
        } else {
            const int mo = static_cast<int>(parse_cell_number(cells[1], line));
            if (mo < 1)
                throw CsvError("assignment csv line " + std::to_string(line) + ": bad mo_id");
            phi.push_back(mo - 1);
        }
    }
    AssignmentVector out_phi;
    out_phi.phi = std::move(phi);
    return out_phi;
}

}  // namespace slicesched
