#pragma once

#include "stairkvol/ring.hpp"

namespace stairkvol {

/// Exact planar vector with ring-element coordinates.
struct Vec2 {
    RingElement x, y;

    Vec2() = default;
    Vec2(RingElement px, RingElement py) : x(std::move(px)), y(std::move(py)) {}

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator-() const { return {-x, -y}; }
    bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Vec2& o) const { return !(*this == o); }

    bool is_zero() const { return x.is_zero() && y.is_zero(); }
    RingElement norm2() const { return x * x + y * y; }
};

inline RingElement cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline RingElement dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline int cross_sign(const Vec2& a, const Vec2& b) { return cross(a, b).sign(); }
inline int dot_sign(const Vec2& a, const Vec2& b) { return dot(a, b).sign(); }

/// Same ray from the origin: parallel with positive dot product.
inline bool same_direction(const Vec2& a, const Vec2& b) {
    return cross_sign(a, b) == 0 && dot_sign(a, b) > 0;
}

/// Exact rational scalar num/den over the ring, den kept positive.
struct QScalar {
    RingElement num, den;

    QScalar() = default;
    explicit QScalar(RingElement n) : num(std::move(n)), den(n_one(num.spec())) {}
    QScalar(RingElement n, RingElement d) : num(std::move(n)), den(std::move(d)) {
        int s = den.sign();
        if (s == 0) throw std::invalid_argument("QScalar: zero denominator");
        if (s < 0) { num = -num; den = -den; }
    }

    static RingElement n_one(const RingSpec& s) { return RingElement(s, 1); }

    int sign() const { return num.sign(); }
    QScalar operator+(const QScalar& o) const {
        return QScalar(num * o.den + o.num * den, den * o.den);
    }
    QScalar operator-(const QScalar& o) const {
        return QScalar(num * o.den - o.num * den, den * o.den);
    }
    QScalar operator*(const QScalar& o) const { return QScalar(num * o.num, den * o.den); }
    QScalar operator-() const { QScalar r = *this; r.num = -r.num; return r; }
    bool operator==(const QScalar& o) const { return (num * o.den - o.num * den).is_zero(); }
    bool operator<(const QScalar& o) const { return (num * o.den - o.num * den).sign() < 0; }
    bool operator<=(const QScalar& o) const { return (num * o.den - o.num * den).sign() <= 0; }

    double approx() const { return num.approx() / den.approx(); }
};

/// Exact rational point (shared denominator), den kept positive.
struct QVec2 {
    RingElement x_num, y_num, den;

    QVec2() = default;
    explicit QVec2(const Vec2& v)
        : x_num(v.x), y_num(v.y), den(RingElement(v.x.spec(), 1)) {}
    QVec2(RingElement xn, RingElement yn, RingElement d)
        : x_num(std::move(xn)), y_num(std::move(yn)), den(std::move(d)) {
        int s = den.sign();
        if (s == 0) throw std::invalid_argument("QVec2: zero denominator");
        if (s < 0) { x_num = -x_num; y_num = -y_num; den = -den; }
    }

    QVec2 operator+(const Vec2& t) const {
        return QVec2(x_num + t.x * den, y_num + t.y * den, den);
    }
    QVec2 operator-(const Vec2& t) const {
        return QVec2(x_num - t.x * den, y_num - t.y * den, den);
    }
    bool operator==(const QVec2& o) const {
        return (x_num * o.den - o.x_num * den).is_zero() &&
               (y_num * o.den - o.y_num * den).is_zero();
    }
    bool operator!=(const QVec2& o) const { return !(*this == o); }

    bool equals_point(const Vec2& p) const {
        return (x_num - p.x * den).is_zero() && (y_num - p.y * den).is_zero();
    }

    QScalar x() const { return QScalar(x_num, den); }
    QScalar y() const { return QScalar(y_num, den); }
};

/// Difference of two rational points as a rational vector (num pair, den).
struct QDiff {
    RingElement dx, dy, den;   // (dx/den, dy/den), den > 0
};

inline QDiff qdiff(const QVec2& a, const QVec2& b) {
    // b - a
    return QDiff{b.x_num * a.den - a.x_num * b.den,
                 b.y_num * a.den - a.y_num * b.den, a.den * b.den};
}

}  // namespace stairkvol
