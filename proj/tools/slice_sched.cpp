// slice-sched: shared-EPS eNodeB slicing simulator.
//
// Subcommands:
//   simulate  Monte-Carlo run(s), writes summary.csv (+ per-slot dump)
//   figure    experiment presets fig4..fig7, writes bar/time-series CSVs
//   assign    one-shot assignment from rate/demand CSVs
//   layout    district geometry export

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "slicesched/config.hpp"
#include "slicesched/csv.hpp"
#include "slicesched/sim.hpp"

namespace ss = slicesched;

namespace {

constexpr int kExitConfig = 1;
constexpr int kExitIo = 2;

struct CommonFlags {
    std::string config_path;
    std::string scheduler = "";
    std::optional<int> runs, slots;
    std::optional<uint64_t> seed;
    std::string out_dir = ".";
};

ss::SimConfig load_config(const CommonFlags& flags) {
    ss::SimConfig cfg = flags.config_path.empty() ? ss::default_config()
                                                  : ss::parse_config_file(flags.config_path);
    if (flags.runs) cfg.n_replications = *flags.runs;
    if (flags.slots) cfg.n_slots = *flags.slots;
    if (flags.seed) cfg.master_seed = *flags.seed;
    ss::validate_sim_config(cfg);
    return cfg;
}

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::ios_base::failure("cannot open '" + path.string() + "' for writing");
    return out;
}

std::vector<ss::SchedulerKind> scheduler_list(const std::string& name) {
    if (name == "all" || name.empty()) return ss::all_scheduler_kinds();
    return {ss::parse_scheduler(name)};
}

void write_summary_row(std::ostream& out, const std::string& name,
                       const ss::MetricSummary& s) {
    out << name << ',' << ss::format_double(s.fairness_mean) << ','
        << ss::format_double(s.fairness_std) << ',' << ss::format_double(s.rate_gbps_mean)
        << ',' << ss::format_double(s.rate_gbps_std) << ','
        << (s.satisfied_mean ? ss::format_double(*s.satisfied_mean) : "n/a") << ','
        << (s.satisfied_std ? ss::format_double(*s.satisfied_std) : "n/a") << "\n";
}

void dump_slots(std::ostream& out, const std::string& scheduler,
                const std::vector<ss::ReplicationResult>& reps, bool header) {
    if (header)
        out << "replication,slot,scheduler,mo,rate_gbps,demand_gbps,assigned_sites,"
               "fairness,satisfied_ratio\n";
    for (const auto& rep : reps) {
        for (const auto& rec : rep.records) {
            for (size_t mo = 0; mo < rec.per_mo_rate_gbps.size(); ++mo) {
                out << rep.replication << ',' << rec.slot << ',' << scheduler << ','
                    << mo + 1 << ',' << ss::format_double(rec.per_mo_rate_gbps[mo]) << ',';
                if (rec.omega.has_demand(static_cast<int>(mo)))
                    out << ss::format_double(rec.omega.omega[mo]);
                else
                    out << "BE";
                out << ',' << rec.sites_per_mo[mo] << ',' << ss::format_double(rec.fairness)
                    << ',' << (rec.satisfied ? ss::format_double(*rec.satisfied) : "n/a")
                    << "\n";
            }
        }
    }
}

int cmd_simulate(const CommonFlags& flags, bool dump) {
    ss::SimConfig cfg = load_config(flags);
    std::filesystem::create_directories(flags.out_dir);
    auto summary = open_out(std::filesystem::path(flags.out_dir) / "summary.csv");
    summary << "scheduler,fairness_mean,fairness_std,rate_gbps_mean,rate_gbps_std,"
               "satisfied_mean,satisfied_std\n";
    std::ofstream slots_out;
    if (dump) slots_out = open_out(std::filesystem::path(flags.out_dir) / "slots.csv");

    bool first = true;
    for (ss::SchedulerKind kind : scheduler_list(flags.scheduler)) {
        cfg.scheduler = kind;
        const ss::MonteCarloResult result = ss::run_monte_carlo(cfg, 0, dump);
        write_summary_row(summary, ss::scheduler_name(kind), result.summary);
        if (dump) {
            dump_slots(slots_out, ss::scheduler_name(kind), result.replications, first);
            first = false;
        }
    }
    return 0;
}

int cmd_figure(const std::string& preset, const CommonFlags& flags,
               const std::string& scheds) {
    ss::SimConfig cfg = load_config(flags);
    std::filesystem::create_directories(flags.out_dir);
    const std::filesystem::path dir(flags.out_dir);

    if (preset == "fig7") {
        // Single max-min fair replication: the demand-tracking time series.
        cfg.scheduler = ss::SchedulerKind::kMaxMinFair;
        cfg.n_replications = 1;
        const ss::ReplicationResult rep = ss::run_replication(cfg, 0);
        auto out = open_out(dir / "fig7_timeseries.csv");
        out << "slot,mo,rate_gbps,demand_gbps\n";
        for (const auto& rec : rep.records) {
            for (size_t mo = 0; mo < rec.per_mo_rate_gbps.size(); ++mo) {
                out << rec.slot << ',' << mo + 1 << ','
                    << ss::format_double(rec.per_mo_rate_gbps[mo]) << ',';
                if (rec.omega.has_demand(static_cast<int>(mo)))
                    out << ss::format_double(rec.omega.omega[mo]);
                else
                    out << "BE";
                out << "\n";
            }
        }
        return 0;
    }

    std::string metric, file;
    if (preset == "fig4") {
        metric = "fairness";
        file = "fig4_fairness.csv";
    } else if (preset == "fig5") {
        metric = "rate_gbps";
        file = "fig5_rate_gbps.csv";
    } else if (preset == "fig6") {
        metric = "satisfied_ratio";
        file = "fig6_satisfied_ratio.csv";
    } else {
        throw ss::ConfigError("unknown figure preset '" + preset + "'");
    }

    auto out = open_out(dir / file);
    out << "scheduler,mean,std\n";
    for (ss::SchedulerKind kind : scheduler_list(scheds)) {
        cfg.scheduler = kind;
        const ss::MetricSummary s = ss::run_monte_carlo(cfg, 0, false).summary;
        out << ss::scheduler_name(kind) << ',';
        if (metric == "fairness")
            out << ss::format_double(s.fairness_mean) << ',' << ss::format_double(s.fairness_std);
        else if (metric == "rate_gbps")
            out << ss::format_double(s.rate_gbps_mean) << ',' << ss::format_double(s.rate_gbps_std);
        else
            out << (s.satisfied_mean ? ss::format_double(*s.satisfied_mean) : "n/a") << ','
                << (s.satisfied_std ? ss::format_double(*s.satisfied_std) : "n/a");
        out << "\n";
    }
    return 0;
}

int cmd_assign(const std::string& rates_path, const std::string& demands_path,
               const std::string& scheduler, const std::string& out_path,
               const std::string& refresh, double tau, double alpha, double gamma) {
    std::ifstream rates_in(rates_path);
    if (!rates_in) throw std::ios_base::failure("cannot open '" + rates_path + "'");
    std::ifstream demands_in(demands_path);
    if (!demands_in) throw std::ios_base::failure("cannot open '" + demands_path + "'");

    const ss::RateMatrix rates = ss::read_rate_matrix_csv(rates_in);
    const ss::DemandVector omega = ss::read_demand_csv(demands_in);
    if (omega.size() != rates.rows())
        throw ss::ConfigError("dimension mismatch: rate matrix is " +
                              std::to_string(rates.rows()) + "x" +
                              std::to_string(rates.cols()) + ", demand vector has " +
                              std::to_string(omega.size()) + " entries");

    const ss::SchedulerKind kind = ss::parse_scheduler(scheduler);
    std::vector<ss::MobileOperator> mos;
    std::vector<int> qos, be;
    for (int i = 0; i < omega.size(); ++i) {
        ss::MobileOperator mo;
        mo.id = i;
        mo.ue_count = 1;
        if (omega.has_demand(i)) {
            mo.kind = ss::MoKind::kQosAware;
            mo.demand_range = {{0.0, std::max(1.0, omega.omega[i] * 2)}};
            qos.push_back(i);
        } else {
            mo.kind = ss::MoKind::kBestEffort;
            be.push_back(i);
        }
        mos.push_back(mo);
    }

    ss::AssignmentVector phi;
    if (kind == ss::SchedulerKind::kMaxMinFair) {
        phi = ss::assign_mmf(rates, omega, qos, be);
    } else if (!ss::scheduler_uses_metric(kind)) {
        throw ss::ConfigError("scheduler '" + scheduler +
                              "' needs a district layout; one-shot assignment supports "
                              "rr, bet, mt, pf, rg and mmf");
    } else {
        const auto state = ss::SchedulerState::initial(rates.rows(), rates.cols(), tau);
        phi = ss::assign_argmax(kind, rates, state, omega, mos, ss::PfParams{alpha, gamma},
                                ss::parse_refresh(refresh));
    }

    auto out = open_out(out_path);
    ss::write_assignment_csv(phi, out);
    return 0;
}

int cmd_layout(int sites, double radius, double intersite, const std::string& out_path,
               std::vector<int> counts_demand, std::vector<int> counts_ue) {
    ss::DistrictLayout layout = ss::generate_layout(sites, radius, intersite);
    if (counts_demand.empty() && sites == 31) counts_demand = {12, 18, 1};
    if (counts_ue.empty() && sites == 31) counts_ue = {9, 16, 6};
    if (counts_demand.empty() || counts_ue.empty())
        throw ss::ConfigError("layout: non-paper site counts need --counts-demand and "
                              "--counts-ue");
    layout.labels_demand = ss::label_static(layout, counts_demand);
    layout.labels_ue = ss::label_static(layout, counts_ue);
    auto out = open_out(out_path);
    ss::write_layout_csv(layout, out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Shared-EPS eNodeB slicing simulator"};
    app.require_subcommand(1);

    CommonFlags flags;
    bool dump = false;
    auto add_common = [&](CLI::App* cmd, bool with_scheduler) {
        cmd->add_option("--config", flags.config_path, "configuration file");
        if (with_scheduler)
            cmd->add_option("--scheduler", flags.scheduler,
                            "rr|bet|mt|pf|mmf|rg|static-demand|static-ue|all");
        cmd->add_option("--runs", flags.runs, "Monte-Carlo replications");
        cmd->add_option("--slots", flags.slots, "slots per replication");
        cmd->add_option("--seed", flags.seed, "master seed");
        cmd->add_option("--out-dir", flags.out_dir, "output directory");
    };

    auto* simulate = app.add_subcommand("simulate", "run the Monte-Carlo experiment");
    add_common(simulate, true);
    simulate->add_flag("--dump-slots", dump, "also write the per-slot CSV");

    std::string preset, fig_scheds;
    auto* figure = app.add_subcommand("figure", "experiment presets fig4..fig7");
    figure->add_option("preset", preset, "fig4|fig5|fig6|fig7")->required();
    add_common(figure, false);
    figure->add_option("--schedulers", fig_scheds, "scheduler subset (default: all)");

    std::string rates_path, demands_path, assign_sched = "mt", assign_out = "phi.csv";
    std::string assign_refresh = "per-assignment";
    double assign_tau = 50.0, assign_alpha = 1.0, assign_gamma = 0.8;
    auto* assign = app.add_subcommand("assign", "one-shot eNodeB assignment");
    assign->add_option("--rates", rates_path, "rate matrix CSV")->required();
    assign->add_option("--demands", demands_path, "demand vector CSV")->required();
    assign->add_option("--scheduler", assign_sched, "rr|bet|mt|pf|mmf|rg");
    assign->add_option("--out", assign_out, "assignment CSV output");
    assign->add_option("--refresh", assign_refresh, "per-assignment|per-interval");
    assign->add_option("--tau", assign_tau, "smoothing time constant");
    assign->add_option("--alpha", assign_alpha, "PF rate exponent");
    assign->add_option("--gamma", assign_gamma, "PF fairness exponent");

    int lay_sites = 31;
    double lay_radius = 35.0, lay_intersite = 11.0;
    std::string lay_out = "layout.csv";
    std::vector<int> lay_counts_demand, lay_counts_ue;
    auto* layout = app.add_subcommand("layout", "export district geometry");
    layout->add_option("--sites", lay_sites, "eNodeB count");
    layout->add_option("--radius", lay_radius, "district radius, km");
    layout->add_option("--intersite", lay_intersite, "inter-site distance, km");
    layout->add_option("--out", lay_out, "layout CSV output");
    layout->add_option("--counts-demand", lay_counts_demand, "demand-based site counts");
    layout->add_option("--counts-ue", lay_counts_ue, "UE-based site counts");

    CLI11_PARSE(app, argc, argv);

    try {
        if (simulate->parsed()) return cmd_simulate(flags, dump);
        if (figure->parsed()) return cmd_figure(preset, flags, fig_scheds);
        if (assign->parsed())
            return cmd_assign(rates_path, demands_path, assign_sched, assign_out,
                              assign_refresh, assign_tau, assign_alpha, assign_gamma);
        if (layout->parsed())
            return cmd_layout(lay_sites, lay_radius, lay_intersite, lay_out,
                              lay_counts_demand, lay_counts_ue);
    } catch (const std::ios_base::failure& e) {
        std::cerr << "slice-sched: " << e.what() << "\n";
        return kExitIo;
    } catch (const ss::CsvError& e) {
        std::cerr << "slice-sched: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "slice-sched: " << e.what() << "\n";
        return kExitConfig;
    }
    return 0;
}
