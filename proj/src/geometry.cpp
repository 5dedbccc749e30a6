#include "slicesched/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace slicesched {

namespace {

constexpr double kTwoPi = 6.283185307179586476925;

struct LatticePoint {
    long long norm2_units;  // m*m + m*n + n*n, exact in lattice units
    double angle;           // [0, 2*pi)
    int gen_order;
    Vec2 pos;
};

}  // namespace

DistrictLayout generate_layout(int n_sites, double radius_km, double intersite_km,
                               bool strict) {
    if (n_sites < 1) throw std::invalid_argument("layout: need at least one site");
    if (intersite_km <= 0) throw std::invalid_argument("layout: intersite must be positive");

    // A window of rings large enough to contain the n closest lattice points.
    const int w = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n_sites)))) + 2;
    const double half = 0.5, root3half = std::sqrt(3.0) / 2.0;

    std::vector<LatticePoint> pts;
    pts.reserve(static_cast<size_t>(2 * w + 1) * (2 * w + 1));
    int order = 0;
    for (int n = -w; n <= w; ++n) {
        for (int m = -w; m <= w; ++m) {
            const double x = intersite_km * (m + n * half);
            const double y = intersite_km * (n * root3half);
            double ang = std::atan2(y, x);
            if (ang < 0) ang += kTwoPi;
            const long long norm2 =
                static_cast<long long>(m) * m + static_cast<long long>(m) * n +
                static_cast<long long>(n) * n;
            pts.push_back({norm2, (norm2 == 0) ? 0.0 : ang, order++, {x, y}});
        }
    }
    std::sort(pts.begin(), pts.end(), [](const LatticePoint& a, const LatticePoint& b) {
        if (a.norm2_units != b.norm2_units) return a.norm2_units < b.norm2_units;
        if (a.angle != b.angle) return a.angle < b.angle;
        return a.gen_order < b.gen_order;
    });
    if (static_cast<size_t>(n_sites) > pts.size())
        throw std::invalid_argument("layout: lattice window too small");

    DistrictLayout layout;
    layout.radius_km = radius_km;
    layout.sites.reserve(n_sites);
    for (int i = 0; i < n_sites; ++i) {
        const auto& p = pts[i];
        if (strict && std::hypot(p.pos.x, p.pos.y) > radius_km + 1e-12)
            throw std::invalid_argument("layout: site outside district radius");
        layout.sites.push_back(p.pos);
    }
    return layout;
}

std::vector<int> label_static(const DistrictLayout& layout,
                              const std::vector<int>& counts) {
    const int n = layout.n_sites();
    long long total = 0;
    for (int c : counts) {
        if (c < 0) throw std::invalid_argument("labels: negative count");
        total += c;
    }
    if (total != n)
        throw std::invalid_argument("labels: counts sum to " + std::to_string(total) +
                                    ", expected " + std::to_string(n));

    // Smooth weighted round robin; the quota guard keeps counts exact.
    std::vector<long long> credit(counts.size(), 0);
    std::vector<int> taken(counts.size(), 0);
    std::vector<int> labels(n, 0);
    for (int s = 0; s < n; ++s) {
        int best = -1;
        for (size_t i = 0; i < counts.size(); ++i) {
            credit[i] += counts[i];
            if (taken[i] < counts[i] && (best < 0 || credit[i] > credit[best]))
                best = static_cast<int>(i);
        }
        labels[s] = best;
        credit[best] -= total;
        ++taken[best];
    }
    return labels;
}

UePlacement place_ues(const Scenario& scenario, const DistrictLayout& layout,
                      std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    UePlacement p;
    int total = 0;
    for (const auto& mo : scenario.mos) total += mo.ue_count;
    p.pos.reserve(total);
    p.mo_of_ue.reserve(total);
    p.site_of_ue.reserve(total);
    p.ues_per_site.assign(layout.n_sites(), 0);

    for (const auto& mo : scenario.mos) {
        for (int u = 0; u < mo.ue_count; ++u) {
            const double r = scenario.radius_km * std::sqrt(unit(rng));
            const double th = kTwoPi * unit(rng);
            const Vec2 pos{r * std::cos(th), r * std::sin(th)};
            int best = 0;
            double best_d2 = std::numeric_limits<double>::infinity();
            for (int k = 0; k < layout.n_sites(); ++k) {
                const double dx = pos.x - layout.sites[k].x;
                const double dy = pos.y - layout.sites[k].y;
                const double d2 = dx * dx + dy * dy;
                if (d2 < best_d2) {
                    best_d2 = d2;
                    best = k;
                }
            }
            p.pos.push_back(pos);
            p.mo_of_ue.push_back(mo.id);
            p.site_of_ue.push_back(best);
            ++p.ues_per_site[best];
        }
    }
    return p;
}

void write_layout_csv(const DistrictLayout& layout, std::ostream& out) {
    out << "site_id,x_km,y_km,label_demand,label_ue\n";
    char buf[128];
    for (int k = 0; k < layout.n_sites(); ++k) {
        std::snprintf(buf, sizeof buf, "%d,%.9g,%.9g,%d,%d\n", k + 1,
                      layout.sites[k].x, layout.sites[k].y,
                      layout.labels_demand.empty() ? 0 : layout.labels_demand[k] + 1,
                      layout.labels_ue.empty() ? 0 : layout.labels_ue[k] + 1);
        out << buf;
    }
}

}  // namespace slicesched
