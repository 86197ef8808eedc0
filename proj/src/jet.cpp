#include "pmc/jet.hpp"

#include "pmc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace pmc {

namespace {

constexpr double kDomainTolerance = 1e-12;

void check_order(int order)
{
    if (order < 0 || order > kMaxJetOrder) {
        throw InvalidArgument("jet order must lie in [0, 4], got " + std::to_string(order));
    }
}

// f(a) = sum_k f^(k)(a0) / k! (a - a0)^k, truncated at a.order().
Jet2 compose(const Jet2& a, const std::array<double, kMaxJetOrder + 1>& derivs)
{
    const int order = a.order();
    Jet2 h = a;
    h.set_coeff(0, 0, 0.0);
    Jet2 result = Jet2::constant(derivs[0], order);
    Jet2 power = Jet2::constant(1.0, order);
    double factorial = 1.0;
    for (int k = 1; k <= order; ++k) {
        power *= h;
        factorial *= k;
        result += power * (derivs[static_cast<std::size_t>(k)] / factorial);
    }
    return result;
}

} // namespace

Jet2 Jet2::constant(double value, int order)
{
    check_order(order);
    Jet2 j;
    j.c_[0] = value;
    j.order_ = order;
    return j;
}

Jet2 Jet2::variable(Var which, double value, int order)
{
    Jet2 j = constant(value, order);
    if (order >= 1) {
        j.c_[which == Var::u ? index(1, 0) : index(0, 1)] = 1.0;
    }
    return j;
}

double Jet2::coeff(int i, int j) const
{
    if (i < 0 || j < 0 || i + j > order_) return 0.0;
    return c_[index(i, j)];
}

void Jet2::set_coeff(int i, int j, double value)
{
    if (i < 0 || j < 0 || i + j > order_) {
        throw JetOrderError("coefficient (" + std::to_string(i) + "," + std::to_string(j) +
                            ") outside jet of order " + std::to_string(order_));
    }
    c_[index(i, j)] = value;
}

double Jet2::partial(int i, int j) const
{
    if (i < 0 || j < 0 || i + j > order_) {
        throw JetOrderError("partial of total order " + std::to_string(i + j) +
                            " requested from jet of order " + std::to_string(order_));
    }
    double scale = 1.0;
    for (int k = 2; k <= i; ++k) scale *= k;
    for (int k = 2; k <= j; ++k) scale *= k;
    return scale * c_[index(i, j)];
}

Jet2 Jet2::derivative(Var which) const
{
    if (order_ == 0) throw JetOrderError("cannot differentiate an order-0 jet");
    Jet2 d;
    d.order_ = order_ - 1;
    for (int deg = 0; deg <= d.order_; ++deg) {
        for (int j = 0; j <= deg; ++j) {
            const int i = deg - j;
            d.c_[index(i, j)] = which == Var::u ? (i + 1) * c_[index(i + 1, j)]
                                                : (j + 1) * c_[index(i, j + 1)];
        }
    }
    return d;
}

Jet2 Jet2::truncated(int order) const
{
    check_order(order);
    if (order >= order_) return *this;
    Jet2 t = *this;
    t.order_ = order;
    std::fill(t.c_.begin() + static_cast<std::ptrdiff_t>(coefficient_count(order)), t.c_.end(), 0.0);
    return t;
}

Jet2& Jet2::operator+=(const Jet2& rhs) noexcept
{
    const int order = std::min(order_, rhs.order_);
    const std::size_t n = coefficient_count(order);
    for (std::size_t k = 0; k < n; ++k) c_[k] += rhs.c_[k];
    for (std::size_t k = n; k < kCapacity; ++k) c_[k] = 0.0;
    order_ = order;
    return *this;
}

Jet2& Jet2::operator-=(const Jet2& rhs) noexcept
{
    const int order = std::min(order_, rhs.order_);
    const std::size_t n = coefficient_count(order);
    for (std::size_t k = 0; k < n; ++k) c_[k] -= rhs.c_[k];
    for (std::size_t k = n; k < kCapacity; ++k) c_[k] = 0.0;
    order_ = order;
    return *this;
}

Jet2& Jet2::operator*=(const Jet2& rhs) noexcept
{
    const int order = std::min(order_, rhs.order_);
    std::array<double, kCapacity> out{};
    for (int deg = 0; deg <= order; ++deg) {
        for (int j = 0; j <= deg; ++j) {
            const int i = deg - j;
            double acc = 0.0;
            for (int k = 0; k <= i; ++k) {
                for (int l = 0; l <= j; ++l) {
                    acc += c_[index(k, l)] * rhs.c_[index(i - k, j - l)];
                }
            }
            out[index(i, j)] = acc;
        }
    }
    c_ = out;
    order_ = order;
    return *this;
}

Jet2& Jet2::operator/=(const Jet2& rhs) { return *this *= reciprocal(rhs); }

Jet2& Jet2::operator*=(double s) noexcept
{
    for (auto& x : c_) x *= s;
    return *this;
}

Jet2& Jet2::operator/=(double s) noexcept
{
    for (auto& x : c_) x /= s;
    return *this;
}

Jet2 reciprocal(const Jet2& a)
{
    const double x = a.value();
    if (std::abs(x) <= kDomainTolerance) {
        throw JetDomainError("division by a jet with vanishing constant term");
    }
    const double r = 1.0 / x;
    return compose(a, {r, -r * r, 2 * r * r * r, -6 * r * r * r * r, 24 * r * r * r * r * r});
}

Jet2 sin(const Jet2& a)
{
    const double s = std::sin(a.value());
    const double c = std::cos(a.value());
    return compose(a, {s, c, -s, -c, s});
}

Jet2 cos(const Jet2& a)
{
    const double s = std::sin(a.value());
    const double c = std::cos(a.value());
    return compose(a, {c, -s, -c, s, c});
}

Jet2 sinh(const Jet2& a)
{
    const double s = std::sinh(a.value());
    const double c = std::cosh(a.value());
    return compose(a, {s, c, s, c, s});
}

Jet2 cosh(const Jet2& a)
{
    const double s = std::sinh(a.value());
    const double c = std::cosh(a.value());
    return compose(a, {c, s, c, s, c});
}

Jet2 exp(const Jet2& a)
{
    const double e = std::exp(a.value());
    return compose(a, {e, e, e, e, e});
}

Jet2 log(const Jet2& a)
{
    const double x = a.value();
    if (x <= kDomainTolerance) throw JetDomainError("log of a jet with non-positive constant term");
    const double r = 1.0 / x;
    return compose(a, {std::log(x), r, -r * r, 2 * r * r * r, -6 * r * r * r * r});
}

Jet2 pow(const Jet2& a, double p)
{
    const double x = a.value();
    if (x <= kDomainTolerance && p != std::floor(p)) {
        throw JetDomainError("fractional power of a jet with non-positive constant term");
    }
    if (std::abs(x) <= kDomainTolerance && p < 0) {
        throw JetDomainError("negative power of a jet with vanishing constant term");
    }
    std::array<double, kMaxJetOrder + 1> d{};
    double coef = 1.0;
    for (int k = 0; k <= kMaxJetOrder; ++k) {
        d[static_cast<std::size_t>(k)] = coef == 0.0 ? 0.0 : coef * std::pow(x, p - k);
        coef *= (p - k);
    }
    return compose(a, d);
}

Jet2 sqrt(const Jet2& a)
{
    if (a.value() <= kDomainTolerance) {
        throw JetDomainError("sqrt of a jet with non-positive constant term");
    }
    return pow(a, 0.5);
}

JetVec derivative(const JetVec& w, Var which)
{
    JetVec d;
    d.reserve(w.size());
    for (const auto& x : w) d.push_back(x.derivative(which));
    return d;
}

std::vector<double> values(const JetVec& w)
{
    std::vector<double> out;
    out.reserve(w.size());
    for (const auto& x : w) out.push_back(x.value());
    return out;
}

} // namespace pmc
