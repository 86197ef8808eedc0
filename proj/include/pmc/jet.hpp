#pragma once

/**
 * Truncated bivariate Taylor polynomials ("jets").
 *
 * A Jet2 of order N stores the coefficients c_ij of u^i v^j, i + j <= N, of a
 * smooth function expanded around a chart point. Arithmetic truncates to the
 * smaller order of its operands, so every composite quantity carries exact
 * (to roundoff) partial derivatives up to its order. Partials are recovered
 * as d^{i+j} / du^i dv^j = i! j! c_ij.
 *
 * Constants are carried at the maximum order so they never truncate an
 * expression they take part in.
 */

#include <array>
#include <cstddef>
#include <vector>

namespace pmc {

inline constexpr int kMaxJetOrder = 4;

enum class Var { u, v };

class Jet2 {
  public:
    static constexpr std::size_t kCapacity = (kMaxJetOrder + 1) * (kMaxJetOrder + 2) / 2;

    constexpr Jet2() noexcept = default;
    constexpr Jet2(double value) noexcept { c_[0] = value; } // NOLINT: implicit constant jet

    static Jet2 constant(double value, int order = kMaxJetOrder);
    static Jet2 variable(Var which, double value, int order);

    [[nodiscard]] int order() const noexcept { return order_; }
    [[nodiscard]] double value() const noexcept { return c_[0]; }
    [[nodiscard]] std::size_t size() const noexcept { return coefficient_count(order_); }

    // Raw Taylor coefficient of u^i v^j; zero when i + j exceeds the order.
    [[nodiscard]] double coeff(int i, int j) const;
    void set_coeff(int i, int j, double value);

    // Partial derivative d^{i+j} / du^i dv^j at the expansion point.
    [[nodiscard]] double partial(int i, int j) const;

    // First partial as a jet of order - 1.
    [[nodiscard]] Jet2 derivative(Var which) const;

    [[nodiscard]] Jet2 truncated(int order) const;

    Jet2& operator+=(const Jet2& rhs) noexcept;
    Jet2& operator-=(const Jet2& rhs) noexcept;
    Jet2& operator*=(const Jet2& rhs) noexcept;
    Jet2& operator/=(const Jet2& rhs);
    Jet2& operator*=(double s) noexcept;
    Jet2& operator/=(double s) noexcept;

    friend Jet2 operator-(Jet2 a) noexcept
    {
        for (auto& x : a.c_) x = -x;
        return a;
    }

    static constexpr std::size_t coefficient_count(int order) noexcept
    {
        return static_cast<std::size_t>((order + 1) * (order + 2) / 2);
    }
    static constexpr std::size_t index(int i, int j) noexcept
    {
        const int d = i + j;
        return static_cast<std::size_t>(d * (d + 1) / 2 + j);
    }

  private:
    std::array<double, kCapacity> c_{};
    int order_ = kMaxJetOrder;
};

inline Jet2 operator+(Jet2 a, const Jet2& b) noexcept { return a += b; }
inline Jet2 operator-(Jet2 a, const Jet2& b) noexcept { return a -= b; }
inline Jet2 operator*(Jet2 a, const Jet2& b) noexcept { return a *= b; }
inline Jet2 operator/(Jet2 a, const Jet2& b) { return a /= b; }
inline Jet2 operator+(Jet2 a, double b) noexcept { return a += Jet2(b); }
inline Jet2 operator+(double a, Jet2 b) noexcept { return b += Jet2(a); }
inline Jet2 operator-(Jet2 a, double b) noexcept { return a -= Jet2(b); }
inline Jet2 operator-(double a, const Jet2& b) noexcept { return Jet2(a) -= b; }
inline Jet2 operator*(Jet2 a, double s) noexcept { return a *= s; }
inline Jet2 operator*(double s, Jet2 a) noexcept { return a *= s; }
inline Jet2 operator/(Jet2 a, double s) noexcept { return a /= s; }
inline Jet2 operator/(double a, const Jet2& b) { return Jet2(a) /= b; }

Jet2 sin(const Jet2& a);
Jet2 cos(const Jet2& a);
Jet2 sinh(const Jet2& a);
Jet2 cosh(const Jet2& a);
Jet2 exp(const Jet2& a);
Jet2 log(const Jet2& a);
Jet2 sqrt(const Jet2& a);
Jet2 pow(const Jet2& a, double p);
Jet2 reciprocal(const Jet2& a);

// Flat-space vector whose components are jets.
using JetVec = std::vector<Jet2>;

JetVec derivative(const JetVec& w, Var which);
std::vector<double> values(const JetVec& w);

} // namespace pmc
