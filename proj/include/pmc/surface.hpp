#pragma once

#include "pmc/jet.hpp"
#include "pmc/spaceform.hpp"

#include <functional>
#include <map>
#include <string>

namespace pmc {

using Params = std::map<std::string, double>;

struct Domain {
    double u0 = 0.0;
    double u1 = 1.0;
    double v0 = 0.0;
    double v1 = 1.0;

    [[nodiscard]] bool contains(double u, double v) const noexcept
    {
        return u >= u0 && u <= u1 && v >= v0 && v <= v1;
    }
};

// Flat coordinates of the immersion as jets of the chart variables.
using ChartFn = std::function<JetVec(const Jet2& u, const Jet2& v)>;

struct SurfaceSpec {
    std::string catalog_id;
    Params params;
    Domain domain;
    AmbientModel ambient;
    ChartFn chart;
};

} // namespace pmc
