#pragma once

// Grid sweeps over a chart domain. The parallel kernel and the serial
// reference produce identical vectors in grid order; reductions run serially
// over that order so results do not depend on the thread count.

#include "pmc/surface.hpp"

#include <cstddef>
#include <exception>
#include <type_traits>
#include <vector>

namespace pmc {

inline constexpr int kDefaultGridSize = 33;
inline constexpr double kDefaultMargin = 0.02;

struct Grid {
    int nu = kDefaultGridSize;
    int nv = kDefaultGridSize;
    double margin = kDefaultMargin;
};

struct GridPoint {
    int i = 0;
    int j = 0;
    double u = 0.0;
    double v = 0.0;
};

enum class Execution { serial, parallel };

// Throws InvalidArgument unless nu, nv >= 5 and 0 <= margin < 0.5.
void validate_grid(const Grid& grid);

// Row-major over (u, v): index = i * nv + j.
std::vector<GridPoint> grid_points(const Domain& domain, const Grid& grid);

template <class Fn>
auto sweep_serial(const std::vector<GridPoint>& pts, Fn&& fn)
{
    using R = std::invoke_result_t<Fn&, const GridPoint&>;
    std::vector<R> out;
    out.reserve(pts.size());
    for (const auto& p : pts) out.push_back(fn(p));
    return out;
}

template <class Fn>
auto sweep_parallel(const std::vector<GridPoint>& pts, Fn&& fn)
{
    using R = std::invoke_result_t<Fn&, const GridPoint&>;
    static_assert(std::is_default_constructible_v<R>, "sweep results must be default constructible");
    const auto n = static_cast<long>(pts.size());
    std::vector<R> out(pts.size());
    std::vector<std::exception_ptr> errors(pts.size());
#pragma omp parallel for schedule(static)
    for (long k = 0; k < n; ++k) {
        const auto idx = static_cast<std::size_t>(k);
        try {
            out[idx] = fn(pts[idx]);
        } catch (...) {
            errors[idx] = std::current_exception();
        }
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

template <class Fn>
auto sweep(const std::vector<GridPoint>& pts, Fn&& fn, Execution ex = Execution::parallel)
{
    if (ex == Execution::serial) return sweep_serial(pts, std::forward<Fn>(fn));
    return sweep_parallel(pts, std::forward<Fn>(fn));
}

struct Reduction {
    double max_abs = 0.0;
    double mean_abs = 0.0;
    std::size_t argmax = 0;
    std::size_t count = 0; // finite samples
};

// Ordered reduction of |values|; NaN entries are treated as skipped points.
Reduction reduce_abs(const std::vector<double>& values);

} // namespace pmc
