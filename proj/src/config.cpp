#include "slicesched/config.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

namespace slicesched {

namespace {

struct MoDraft {
    int ue_count = 0;
    std::optional<double> demand_low, demand_high;
    double beta = 0.0;
};

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_number(const std::string& value, int line) {
    size_t used = 0;
    double v = 0;
    try {
        v = std::stod(value, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != value.size() || !std::isfinite(v))
        throw ConfigError("config line " + std::to_string(line) + ": bad number '" +
                          value + "'");
    return v;
}

int parse_int(const std::string& value, int line) {
    const double v = parse_number(value, line);
    if (v != std::floor(v))
        throw ConfigError("config line " + std::to_string(line) + ": expected integer, got '" +
                          value + "'");
    return static_cast<int>(v);
}

uint64_t parse_seed(const std::string& value, int line) {
    size_t used = 0;
    uint64_t v = 0;
    try {
        v = std::stoull(value, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != value.size())
        throw ConfigError("config line " + std::to_string(line) + ": bad seed '" + value + "'");
    return v;
}

}  // namespace

SimConfig default_config() {
    SimConfig cfg;
    MobileOperator mo1{0, MoKind::kQosAware, 300, 10.0, {{0.0, 8.0}}};
    MobileOperator mo2{1, MoKind::kQosAware, 500, 9.5, {{0.0, 12.0}}};
    MobileOperator mo3{2, MoKind::kBestEffort, 200, 0.0, std::nullopt};
    cfg.scenario = validate_scenario({mo1, mo2, mo3}, 31, 35.0);
    cfg.layout = LayoutParams{};
    cfg.channel = ChannelParams{};
    cfg.scheduler = SchedulerKind::kMaxMinFair;
    cfg.refresh = RefreshPolicy::kPerAssignment;
    cfg.pf = PfParams{};
    cfg.tau = 50.0;
    cfg.n_replications = 200;
    cfg.n_slots = 1000;
    cfg.demand_period = 50;
    cfg.master_seed = 1;
    return cfg;
}

SimConfig parse_config(std::istream& in) {
    std::vector<MoDraft> mos = {{300, 0.0, 8.0, 10.0}, {500, 0.0, 12.0, 9.5}, {200, {}, {}, 0.0}};
    SimConfig cfg = default_config();

    using Handler = std::function<void(const std::string&, int)>;
    std::map<std::string, Handler> handlers;

    for (size_t i = 0; i < mos.size(); ++i) {
        const std::string p = "mos." + std::to_string(i + 1) + ".";
        auto demand_field = [&mos, i](std::optional<double> MoDraft::* field) {
            return [&mos, i, field](const std::string& v, int line) {
                if (v == "none")
                    mos[i].*field = std::nullopt;
                else
                    mos[i].*field = parse_number(v, line);
            };
        };
        handlers[p + "ue_count"] = [&mos, i](const std::string& v, int line) {
            mos[i].ue_count = parse_int(v, line);
        };
        handlers[p + "demand_low_gbps"] = demand_field(&MoDraft::demand_low);
        handlers[p + "demand_high_gbps"] = demand_field(&MoDraft::demand_high);
        handlers[p + "beta"] = [&mos, i](const std::string& v, int line) {
            mos[i].beta = parse_number(v, line);
        };
    }
    handlers["enodebs.count"] = [&](const std::string& v, int line) {
        cfg.layout.n_sites = parse_int(v, line);
    };
    handlers["district.radius_km"] = [&](const std::string& v, int line) {
        cfg.layout.radius_km = parse_number(v, line);
    };
    handlers["district.intersite_km"] = [&](const std::string& v, int line) {
        cfg.layout.intersite_km = parse_number(v, line);
    };
    handlers["channel.bandwidth_per_ue_mhz"] = [&](const std::string& v, int line) {
        cfg.channel.bandwidth_per_ue_hz = parse_number(v, line) * 1e6;
    };
    handlers["channel.tx_power_dbm"] = [&](const std::string& v, int line) {
        cfg.channel.tx_power_dbm = parse_number(v, line);
    };
    handlers["channel.noise_psd_dbm_hz"] = [&](const std::string& v, int line) {
        cfg.channel.noise_psd_dbm_hz = parse_number(v, line);
    };
    handlers["channel.shadow_sigma_db"] = [&](const std::string& v, int line) {
        cfg.channel.shadow_sigma_db = parse_number(v, line);
    };
    handlers["sched.kind"] = [&](const std::string& v, int line) {
        try {
            cfg.scheduler = parse_scheduler(v);
        } catch (const std::exception& e) {
            throw ConfigError("config line " + std::to_string(line) + ": " + e.what());
        }
    };
    handlers["sched.refresh"] = [&](const std::string& v, int line) {
        try {
            cfg.refresh = parse_refresh(v);
        } catch (const std::exception& e) {
            throw ConfigError("config line " + std::to_string(line) + ": " + e.what());
        }
    };
    handlers["sched.tau"] = [&](const std::string& v, int line) { cfg.tau = parse_number(v, line); };
    handlers["sched.alpha"] = [&](const std::string& v, int line) {
        cfg.pf.alpha = parse_number(v, line);
    };
    handlers["sched.gamma"] = [&](const std::string& v, int line) {
        cfg.pf.gamma = parse_number(v, line);
    };
    handlers["sim.replications"] = [&](const std::string& v, int line) {
        cfg.n_replications = parse_int(v, line);
    };
    handlers["sim.slots"] = [&](const std::string& v, int line) {
        cfg.n_slots = parse_int(v, line);
    };
    handlers["sim.demand_period"] = [&](const std::string& v, int line) {
        cfg.demand_period = parse_int(v, line);
    };
    handlers["sim.seed"] = [&](const std::string& v, int line) {
        cfg.master_seed = parse_seed(v, line);
    };

    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        const std::string text = trim(raw);
        if (text.empty()) continue;
        const auto eq = text.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(line) +
                              ": expected 'key = value', got '" + text + "'");
        const std::string key = trim(text.substr(0, eq));
        const std::string value = trim(text.substr(eq + 1));
        const auto it = handlers.find(key);
        if (it == handlers.end())
            throw ConfigError("config line " + std::to_string(line) + ": unknown key '" +
                              key + "'");
        if (value.empty())
            throw ConfigError("config line " + std::to_string(line) + ": key '" + key +
                              "' has no value");
        it->second(value, line);
    }

    std::vector<MobileOperator> built;
    for (size_t i = 0; i < mos.size(); ++i) {
        const auto& d = mos[i];
        if (d.demand_low.has_value() != d.demand_high.has_value())
            throw ConfigError("config: mos." + std::to_string(i + 1) +
                              ": demand_low_gbps and demand_high_gbps must be set together");
        MobileOperator mo;
        mo.ue_count = d.ue_count;
        mo.beta = d.beta;
        if (d.demand_low) {
            mo.kind = MoKind::kQosAware;
            mo.demand_range = {{*d.demand_low, *d.demand_high}};
        } else {
            mo.kind = MoKind::kBestEffort;
        }
        built.push_back(mo);
    }
    try {
        cfg.scenario = validate_scenario(std::move(built), cfg.layout.n_sites,
                                         cfg.layout.radius_km);
        validate_sim_config(cfg);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    return cfg;
}

SimConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open '" + path + "'");
    return parse_config(in);
}

}  // namespace slicesched
