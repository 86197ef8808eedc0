#include "pmc/sweep.hpp"

#include "pmc/errors.hpp"

#include <algorithm>
#include <cmath>

namespace pmc {

void validate_grid(const Grid& grid)
{
    if (grid.nu < 5 || grid.nv < 5) throw InvalidArgument("grid needs at least 5 points per direction");
    if (!(grid.margin >= 0.0 && grid.margin < 0.5)) throw InvalidArgument("grid margin must lie in [0, 0.5)");
}

std::vector<GridPoint> grid_points(const Domain& domain, const Grid& grid)
{
    validate_grid(grid);
    const double lu = domain.u1 - domain.u0;
    const double lv = domain.v1 - domain.v0;
    const double su = lu * (1.0 - 2.0 * grid.margin) / (grid.nu - 1);
    const double sv = lv * (1.0 - 2.0 * grid.margin) / (grid.nv - 1);
    std::vector<GridPoint> pts;
    pts.reserve(static_cast<std::size_t>(grid.nu) * static_cast<std::size_t>(grid.nv));
    for (int i = 0; i < grid.nu; ++i)
        for (int j = 0; j < grid.nv; ++j)
            pts.push_back({i, j, std::min(domain.u1, domain.u0 + grid.margin * lu + i * su),
                           std::min(domain.v1, domain.v0 + grid.margin * lv + j * sv)});
    return pts;
}

Reduction reduce_abs(const std::vector<double>& values)
{
    Reduction r;
    double sum = 0.0;
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (std::isnan(values[k])) continue;
        const double a = std::abs(values[k]);
        if (r.count == 0 || a > r.max_abs) {
            r.max_abs = a;
            r.argmax = k;
        }
        sum += a;
        ++r.count;
    }
    if (r.count > 0) r.mean_abs = sum / static_cast<double>(r.count);
    return r;
}

} // namespace pmc
