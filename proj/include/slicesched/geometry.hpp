#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <vector>

#include "slicesched/domain.hpp"

namespace slicesched {

struct Vec2 {
    double x = 0.0, y = 0.0;
    bool operator==(const Vec2&) const = default;
};

struct DistrictLayout {
    double radius_km = 0.0;
    std::vector<Vec2> sites;          // ordered by (distance from origin, angle)
    std::vector<int> labels_demand;   // per-site MO index, demand-based baseline
    std::vector<int> labels_ue;       // per-site MO index, UE-based baseline

    int n_sites() const { return static_cast<int>(sites.size()); }
};

// The n_sites points of the hexagonal lattice (one axis horizontal, origin
// anchored) closest to the district center. Ties on distance break by polar
// angle in [0, 2pi), then by lattice generation order. Deterministic.
// With strict=true a site falling outside radius_km is an error.
DistrictLayout generate_layout(int n_sites, double radius_km, double intersite_km,
                               bool strict = false);

// Weighted round robin over the (already distance/angle sorted) sites so each
// MO receives exactly counts[i] sites, spatially interleaved.
std::vector<int> label_static(const DistrictLayout& layout,
                              const std::vector<int>& counts);

struct UePlacement {
    std::vector<Vec2> pos;        // all UEs, grouped by MO in id order
    std::vector<int> mo_of_ue;
    std::vector<int> site_of_ue;  // strongest mean gain = nearest site
    std::vector<int> ues_per_site;

    int n_ues() const { return static_cast<int>(pos.size()); }
};

// Area-uniform positions on the district disk (radius = R*sqrt(u)); each UE
// is associated with the site of highest mean channel gain at placement.
UePlacement place_ues(const Scenario& scenario, const DistrictLayout& layout,
                      std::mt19937_64& rng);

// site_id,x_km,y_km,label_demand,label_ue (labels are 1-based MO ids)
void write_layout_csv(const DistrictLayout& layout, std::ostream& out);

}  // namespace slicesched
