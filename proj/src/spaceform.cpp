#include "pmc/spaceform.hpp"

#include "pmc/errors.hpp"

#include <cmath>
#include <string>

namespace pmc {

AmbientModel make_ambient(double kappa, int n)
{
    if (n < 2) throw InvalidArgument("space-form dimension must be >= 2, got " + std::to_string(n));
    if (!std::isfinite(kappa)) throw InvalidArgument("kappa must be finite");
    AmbientModel model;
    model.kappa = kappa;
    model.n = n;
    model.flat_dim = kappa == 0.0 ? n + 1 : n + 2;
    model.signature.assign(static_cast<std::size_t>(model.flat_dim), 1);
    if (kappa < 0.0) model.signature[0] = -1;
    model.t_index = model.flat_dim - 1;
    return model;
}

template <typename T>
T flat_inner(const AmbientModel& model, std::span<const T> x, std::span<const T> y)
{
    if (x.size() != static_cast<std::size_t>(model.flat_dim) || y.size() != x.size()) {
        throw InvalidArgument("vector length does not match flat dimension " +
                              std::to_string(model.flat_dim));
    }
    T acc(0.0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (model.signature[i] < 0) {
            acc -= x[i] * y[i];
        } else {
            acc += x[i] * y[i];
        }
    }
    return acc;
}

template <typename T>
T space_inner(const AmbientModel& model, std::span<const T> x, std::span<const T> y)
{
    if (x.size() != static_cast<std::size_t>(model.flat_dim) || y.size() != x.size()) {
        throw InvalidArgument("vector length does not match flat dimension " +
                              std::to_string(model.flat_dim));
    }
    T acc(0.0);
    for (std::size_t i = 0; i < static_cast<std::size_t>(model.t_index); ++i) {
        if (model.signature[i] < 0) {
            acc -= x[i] * y[i];
        } else {
            acc += x[i] * y[i];
        }
    }
    return acc;
}

template double flat_inner<double>(const AmbientModel&, std::span<const double>, std::span<const double>);
template Jet2 flat_inner<Jet2>(const AmbientModel&, std::span<const Jet2>, std::span<const Jet2>);
template double space_inner<double>(const AmbientModel&, std::span<const double>, std::span<const double>);
template Jet2 space_inner<Jet2>(const AmbientModel&, std::span<const Jet2>, std::span<const Jet2>);

double flat_inner(const AmbientModel& model, const std::vector<double>& x, const std::vector<double>& y)
{
    return flat_inner<double>(model, std::span<const double>(x), std::span<const double>(y));
}

Jet2 flat_inner(const AmbientModel& model, const JetVec& x, const JetVec& y)
{
    return flat_inner<Jet2>(model, std::span<const Jet2>(x), std::span<const Jet2>(y));
}

double constraint_residual(const AmbientModel& model, std::span<const double> p)
{
    if (!model.curved()) throw InvalidArgument("constraint_residual is undefined for kappa = 0");
    return space_inner<double>(model, p, p) - 1.0 / model.kappa;
}

std::vector<double> project_tangent_unchecked(const AmbientModel& model, std::span<const double> p,
                                              std::span<const double> w)
{
    std::vector<double> out(w.begin(), w.end());
    if (!model.curved()) return out;
    const double s = model.kappa * space_inner<double>(model, w, p);
    for (int i = 0; i < model.t_index; ++i) {
        out[static_cast<std::size_t>(i)] -= s * p[static_cast<std::size_t>(i)];
    }
    return out;
}

std::vector<double> project_to_product_tangent(const AmbientModel& model, std::span<const double> p,
                                               std::span<const double> w)
{
    if (w.size() != static_cast<std::size_t>(model.flat_dim)) {
        throw InvalidArgument("vector length does not match flat dimension");
    }
    if (model.curved() && std::abs(constraint_residual(model, p)) > kConstraintTolerance) {
        throw ConstraintViolationError("point is off the space-form model");
    }
    return project_tangent_unchecked(model, p, w);
}

JetVec project_tangent(const AmbientModel& model, const JetVec& p, const JetVec& w)
{
    JetVec out = w;
    if (!model.curved()) return out;
    const Jet2 s = model.kappa * space_inner<Jet2>(model, std::span<const Jet2>(w), std::span<const Jet2>(p));
    for (std::size_t i = 0; i < static_cast<std::size_t>(model.t_index); ++i) out[i] -= s * p[i];
    return out;
}

std::vector<double> vertical_axis(const AmbientModel& model)
{
    std::vector<double> e(static_cast<std::size_t>(model.flat_dim), 0.0);
    e[static_cast<std::size_t>(model.t_index)] = 1.0;
    return e;
}

} // namespace pmc
