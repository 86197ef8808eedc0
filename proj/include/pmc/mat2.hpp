#pragma once

#include "pmc/jet.hpp"

#include <array>
#include <type_traits>

namespace pmc {

// Row-major 2x2 matrix over double or Jet2. For endomorphisms in a chart
// basis, m(a, b) is the a-th component of the image of the b-th basis vector.
template <typename T>
struct Mat2 {
    std::array<std::array<T, 2>, 2> m{};

    T& operator()(int r, int c) { return m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; }
    const T& operator()(int r, int c) const
    {
        return m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    }

    static Mat2 identity()
    {
        Mat2 out;
        out(0, 0) = T(1.0);
        out(0, 1) = T(0.0);
        out(1, 0) = T(0.0);
        out(1, 1) = T(1.0);
        return out;
    }

    [[nodiscard]] T trace() const { return (*this)(0, 0) + (*this)(1, 1); }
    [[nodiscard]] T det() const { return (*this)(0, 0) * (*this)(1, 1) - (*this)(0, 1) * (*this)(1, 0); }

    [[nodiscard]] Mat2 transposed() const
    {
        Mat2 out = *this;
        out(0, 1) = (*this)(1, 0);
        out(1, 0) = (*this)(0, 1);
        return out;
    }

    [[nodiscard]] Mat2 inverse() const
    {
        const T d = det();
        Mat2 out;
        out(0, 0) = (*this)(1, 1) / d;
        out(0, 1) = -(*this)(0, 1) / d;
        out(1, 0) = -(*this)(1, 0) / d;
        out(1, 1) = (*this)(0, 0) / d;
        return out;
    }

    Mat2& operator+=(const Mat2& o)
    {
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) (*this)(r, c) += o(r, c);
        return *this;
    }
    Mat2& operator-=(const Mat2& o)
    {
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) (*this)(r, c) -= o(r, c);
        return *this;
    }
    template <typename S>
    Mat2& operator*=(const S& s)
    {
        for (auto& row : m)
            for (auto& x : row) x *= s;
        return *this;
    }

    friend Mat2 operator+(Mat2 a, const Mat2& b) { return a += b; }
    friend Mat2 operator-(Mat2 a, const Mat2& b) { return a -= b; }
    friend Mat2 operator*(const Mat2& a, const Mat2& b)
    {
        Mat2 out;
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) out(r, c) = a(r, 0) * b(0, c) + a(r, 1) * b(1, c);
        return out;
    }
    template <typename S>
    friend Mat2 operator*(Mat2 a, const S& s)
        requires(!std::is_same_v<S, Mat2>)
    {
        return a *= s;
    }
    template <typename S>
    friend Mat2 operator*(const S& s, Mat2 a)
        requires(!std::is_same_v<S, Mat2>)
    {
        return a *= s;
    }
};

using Mat2d = Mat2<double>;
using Mat2j = Mat2<Jet2>;

inline Mat2d values(const Mat2j& a)
{
    Mat2d out;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) out(r, c) = a(r, c).value();
    return out;
}

inline Mat2j derivative(const Mat2j& a, Var which)
{
    Mat2j out;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) out(r, c) = a(r, c).derivative(which);
    return out;
}

// Matrix applied to chart components of a tangent vector.
template <typename T>
std::array<T, 2> mat_apply(const Mat2<T>& a, const std::array<T, 2>& x)
{
    return {a(0, 0) * x[0] + a(0, 1) * x[1], a(1, 0) * x[0] + a(1, 1) * x[1]};
}

// Bilinear form x^T b y.
template <typename T>
T bilinear(const Mat2<T>& b, const std::array<T, 2>& x, const std::array<T, 2>& y)
{
    return x[0] * (b(0, 0) * y[0] + b(0, 1) * y[1]) + x[1] * (b(1, 0) * y[0] + b(1, 1) * y[1]);
}

} // namespace pmc
