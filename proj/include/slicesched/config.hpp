#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "slicesched/sim.hpp"

namespace slicesched {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The paper scenario: three MOs (300/500/200 UEs, demands unif(0,8) and
// unif(0,12) Gbps plus one best-effort), 31 eNodeBs in a 35 km district.
SimConfig default_config();

// Plain-text "key = value" configuration; '#' starts a comment. Unknown keys
// are hard errors reported with their line number. Every key has a default,
// so an empty file yields default_config().
SimConfig parse_config(std::istream& in);
SimConfig parse_config_file(const std::string& path);

}  // namespace slicesched
