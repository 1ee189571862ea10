#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace h2xr {

// Minimal fixed-size linear algebra over the Minkowski space R^{1,2}.
// Scalar is templated so hot paths (orbit scans) can run in long double.
template <typename T>
struct Vec3T {
    T x1{}, x2{}, x3{};

    constexpr T& operator[](std::size_t i) { return i == 0 ? x1 : (i == 1 ? x2 : x3); }
    constexpr const T& operator[](std::size_t i) const { return i == 0 ? x1 : (i == 1 ? x2 : x3); }

    friend constexpr Vec3T operator+(Vec3T a, Vec3T b) { return {a.x1 + b.x1, a.x2 + b.x2, a.x3 + b.x3}; }
    friend constexpr Vec3T operator-(Vec3T a, Vec3T b) { return {a.x1 - b.x1, a.x2 - b.x2, a.x3 - b.x3}; }
    friend constexpr Vec3T operator*(T s, Vec3T a) { return {s * a.x1, s * a.x2, s * a.x3}; }
};

// Minkowski bilinear form of signature (+,-,-).
template <typename T>
constexpr T mink(Vec3T<T> a, Vec3T<T> b) {
    return a.x1 * b.x1 - a.x2 * b.x2 - a.x3 * b.x3;
}

template <typename T>
struct Mat3T {
    std::array<T, 9> m{};  // row major

    constexpr T& operator()(std::size_t r, std::size_t c) { return m[3 * r + c]; }
    constexpr const T& operator()(std::size_t r, std::size_t c) const { return m[3 * r + c]; }

    static constexpr Mat3T identity() {
        Mat3T I;
        I.m = {1, 0, 0, 0, 1, 0, 0, 0, 1};
        return I;
    }

    friend constexpr Mat3T operator*(const Mat3T& a, const Mat3T& b) {
        Mat3T r;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j) + a(i, 2) * b(2, j);
        return r;
    }

    friend constexpr Vec3T<T> operator*(const Mat3T& a, Vec3T<T> v) {
        return {a(0, 0) * v.x1 + a(0, 1) * v.x2 + a(0, 2) * v.x3,
                a(1, 0) * v.x1 + a(1, 1) * v.x2 + a(1, 2) * v.x3,
                a(2, 0) * v.x1 + a(2, 1) * v.x2 + a(2, 2) * v.x3};
    }
};

// Inverse of a Lorentz matrix: M^{-1} = J M^T J with J = diag(-1,1,1).
// Exact for isometries, and avoids a general 3x3 solve.
template <typename T>
constexpr Mat3T<T> lorentz_inverse(const Mat3T<T>& a) {
    Mat3T<T> r;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            T s = (i == 0 ? T(-1) : T(1)) * (j == 0 ? T(-1) : T(1));
            r(i, j) = s * a(j, i);
        }
    return r;
}

template <typename T>
T max_abs_diff(const Mat3T<T>& a, const Mat3T<T>& b) {
    T w = 0;
    for (std::size_t i = 0; i < 9; ++i) w = std::max(w, std::abs(a.m[i] - b.m[i]));
    return w;
}

using Vec3 = Vec3T<double>;
using Mat3 = Mat3T<double>;

}  // namespace h2xr
