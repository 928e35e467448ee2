#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstring>
#include <limits>
#include <string>

#include "finsler/errors.hpp"

namespace finsler {

// Multi-index of differentiation over the four jet variables, ordered
// (y1, y2, x1, x2).  E.g. {1, 2, 0, 0} means d^3 / dy1 dy2^2.
using MultiIndex = std::array<int, 4>;

enum Var : int { kY1 = 0, kY2 = 1, kX1 = 2, kX2 = 3 };

// Truncation orders per variable group: total degree over (y1, y2) is capped
// by `y`, total degree over (x1, x2) by `x`.
struct JetCaps {
    int y = 4;
    int x = 2;
    friend bool operator==(const JetCaps&, const JetCaps&) = default;
};

inline JetCaps min_caps(JetCaps a, JetCaps b) {
    return {std::min(a.y, b.y), std::min(a.x, b.x)};
}

// Truncated multivariate Taylor value in (y1, y2, x1, x2).
//
// Coefficients are stored densely in a rectangular layout indexed by the per
// variable degrees (a1, a2, b1, b2); entries violating the total-degree caps
// are kept at zero.  Arithmetic is exact truncated-Taylor algebra, so sums,
// products and compositions of smooth functions carry correctly rounded
// partial derivatives up to the caps.  The y-group supports total degree up
// to 6 (the metric integral composition needs the headroom internally); the
// public default caps are (4, 2).
class Jet {
  public:
    static constexpr int kMaxY = 6;
    static constexpr int kMaxX = 2;
    static constexpr int kStorage = (kMaxY + 1) * (kMaxY + 1) * (kMaxX + 1) * (kMaxX + 1);

    // Constants carry the full caps, so combining them with any jet under the
    // min-caps rule never truncates the other operand.
    Jet() : Jet(0.0) {}

    explicit Jet(double value, JetCaps caps = JetCaps{kMaxY, kMaxX}) : caps_(checked(caps)) {
        c_.fill(0.0);
        c_[0] = value;
    }

    // Coordinate function seeded with a unit first-order coefficient.
    static Jet variable(double value, Var var, JetCaps caps = JetCaps{}) {
        Jet j(value, caps);
        const int group_cap = (var == kY1 || var == kY2) ? caps.y : caps.x;
        if (group_cap < 1) throw CapTooSmall("cannot seed a variable with group cap 0");
        MultiIndex mi{0, 0, 0, 0};
        mi[var] = 1;
        j.c_[j.index(mi)] = 1.0;
        return j;
    }

    JetCaps caps() const { return caps_; }
    double value() const { return c_[0]; }

    // Raw Taylor coefficient (partial derivative divided by the factorials).
    double coeff(const MultiIndex& mi) const {
        check_within_caps(mi);
        return c_[index(mi)];
    }

    // True partial derivative for the given multi-index.
    double partial(const MultiIndex& mi) const {
        double f = 1.0;
        for (int k : mi)
            for (int i = 2; i <= k; ++i) f *= i;
        return coeff(mi) * f;
    }

    Jet truncated(JetCaps caps) const {
        caps = min_caps(caps, caps_);
        if (caps == caps_) return *this;
        Jet out(0.0, caps);
        for_each_index(caps, [&](int a1, int a2, int b1, int b2) {
            out.c_[out.index4(a1, a2, b1, b2)] = c_[index4(a1, a2, b1, b2)];
        });
        return out;
    }

    Jet operator-() const {
        Jet out = *this;
        for (double& v : out.c_) v = -v;
        return out;
    }

    friend Jet operator+(const Jet& a, const Jet& b) {
        return zipped(a, b, [](double x, double y) { return x + y; });
    }
    friend Jet operator-(const Jet& a, const Jet& b) {
        return zipped(a, b, [](double x, double y) { return x - y; });
    }

    friend Jet operator*(const Jet& a, const Jet& b) {
        const JetCaps caps = min_caps(a.caps_, b.caps_);
        const Jet at = a.truncated(caps);
        const Jet bt = b.truncated(caps);
        Jet out(0.0, caps);
        for_each_index(caps, [&](int a1, int a2, int b1, int b2) {
            double acc = 0.0;
            for (int i1 = 0; i1 <= a1; ++i1)
                for (int i2 = 0; i2 <= a2; ++i2)
                    for (int j1 = 0; j1 <= b1; ++j1)
                        for (int j2 = 0; j2 <= b2; ++j2)
                            acc += at.c_[at.index4(i1, i2, j1, j2)] *
                                   bt.c_[bt.index4(a1 - i1, a2 - i2, b1 - j1, b2 - j2)];
            out.c_[out.index4(a1, a2, b1, b2)] = acc;
        });
        return out;
    }

    friend Jet operator/(const Jet& a, const Jet& b) { return a * reciprocal(b); }

    friend Jet operator+(const Jet& a, double s) {
        Jet out = a;
        out.c_[0] += s;
        return out;
    }
    friend Jet operator+(double s, const Jet& a) { return a + s; }
    friend Jet operator-(const Jet& a, double s) { return a + (-s); }
    friend Jet operator-(double s, const Jet& a) { return -a + s; }
    friend Jet operator*(const Jet& a, double s) {
        Jet out = a;
        for (double& v : out.c_) v *= s;
        return out;
    }
    friend Jet operator*(double s, const Jet& a) { return a * s; }
    friend Jet operator/(const Jet& a, double s) {
        if (s == 0.0) throw DomainError("division by zero");
        return a * (1.0 / s);
    }
    friend Jet operator/(double s, const Jet& a) { return reciprocal(a) * s; }

    Jet& operator+=(const Jet& b) { return *this = *this + b; }
    Jet& operator-=(const Jet& b) { return *this = *this - b; }
    Jet& operator*=(const Jet& b) { return *this = *this * b; }
    Jet& operator/=(const Jet& b) { return *this = *this / b; }
    Jet& operator+=(double s) { return *this = *this + s; }
    Jet& operator-=(double s) { return *this = *this - s; }
    Jet& operator*=(double s) { return *this = *this * s; }
    Jet& operator/=(double s) { return *this = *this / s; }

    // Comparisons act on the value part, as usual for forward-mode AD types.
    friend bool operator<(const Jet& a, const Jet& b) { return a.value() < b.value(); }
    friend bool operator>(const Jet& a, const Jet& b) { return a.value() > b.value(); }
    friend bool operator<=(const Jet& a, const Jet& b) { return a.value() <= b.value(); }
    friend bool operator>=(const Jet& a, const Jet& b) { return a.value() >= b.value(); }
    friend bool operator==(const Jet& a, const Jet& b) { return a.value() == b.value(); }
    friend bool operator!=(const Jet& a, const Jet& b) { return a.value() != b.value(); }

    // f(g) for analytic f, given the scaled derivatives c[k] = f^(k)(g0)/k!.
    // The nilpotent part h = g - g0 has vanishing powers beyond the total
    // degree cap, so Horner evaluation over the jet algebra is exact.
    static Jet compose(const Jet& g, const double* coeffs, int order) {
        Jet h = g;
        h.c_[0] = 0.0;
        Jet out(coeffs[order], g.caps_);
        for (int k = order - 1; k >= 0; --k) out = out * h + coeffs[k];
        return out;
    }

    int max_total_order() const { return caps_.y + caps_.x; }

    // Jet of the partial derivative d/d var, one group order lower.
    friend Jet derivative_jet(const Jet& j, Var var) {
        const bool y_group = (var == kY1 || var == kY2);
        JetCaps caps = j.caps_;
        (y_group ? caps.y : caps.x) -= 1;
        if ((y_group ? caps.y : caps.x) < 0)
            throw CapTooSmall("derivative_jet: group cap already 0");
        Jet out(0.0, caps);
        for_each_index(caps, [&](int a1, int a2, int b1, int b2) {
            MultiIndex mi{a1, a2, b1, b2};
            mi[var] += 1;
            out.c_[out.index4(a1, a2, b1, b2)] = (mi[var]) * j.c_[j.index(mi)];
        });
        return out;
    }

    friend Jet sqrt(const Jet& g) {
        const double g0 = g.value();
        if (!(g0 > 0.0)) throw DomainError("sqrt of nonpositive jet value " + std::to_string(g0));
        const int n = g.max_total_order();
        std::array<double, kMaxY + kMaxX + 1> c;
        c[0] = std::sqrt(g0);
        for (int k = 1; k <= n; ++k) c[k] = c[k - 1] * (1.5 - k) / (k * g0);
        return compose(g, c.data(), n);
    }

    friend Jet exp(const Jet& g) {
        const int n = g.max_total_order();
        std::array<double, kMaxY + kMaxX + 1> c;
        c[0] = std::exp(g.value());
        for (int k = 1; k <= n; ++k) c[k] = c[k - 1] / k;
        return compose(g, c.data(), n);
    }

    friend Jet log(const Jet& g) {
        const double g0 = g.value();
        if (!(g0 > 0.0)) throw DomainError("log of nonpositive jet value " + std::to_string(g0));
        const int n = g.max_total_order();
        std::array<double, kMaxY + kMaxX + 1> c;
        c[0] = std::log(g0);
        for (int k = 1; k <= n; ++k) c[k] = (k == 1 ? 1.0 / g0 : -c[k - 1] * (k - 1) / (k * g0));
        return compose(g, c.data(), n);
    }

    friend Jet reciprocal(const Jet& g) {
        const double g0 = g.value();
        if (g0 == 0.0) throw DomainError("division by jet with zero value");
        const int n = g.max_total_order();
        std::array<double, kMaxY + kMaxX + 1> c;
        c[0] = 1.0 / g0;
        for (int k = 1; k <= n; ++k) c[k] = -c[k - 1] / g0;
        return compose(g, c.data(), n);
    }

    // Integer power; negative exponents require a nonzero value part.
    friend Jet pow(const Jet& g, int e) {
        if (e < 0) return reciprocal(pow(g, -e));
        if (e == 0) return Jet(1.0, g.caps());
        const int n = g.max_total_order();
        const double g0 = g.value();
        std::array<double, kMaxY + kMaxX + 1> c;
        for (int k = 0; k <= n; ++k) {
            if (k > e) {
                c[k] = 0.0;
                continue;
            }
            double binom = 1.0;
            for (int i = 0; i < k; ++i) binom *= static_cast<double>(e - i) / (i + 1);
            c[k] = binom * ipow(g0, e - k);
        }
        return compose(g, c.data(), n);
    }

    friend Jet abs(const Jet& g) { return g.value() < 0.0 ? -g : g; }

  private:
    static JetCaps checked(JetCaps caps) {
        if (caps.y < 0 || caps.y > kMaxY || caps.x < 0 || caps.x > kMaxX)
            throw CapTooSmall("jet caps out of supported range");
        return caps;
    }

    static double ipow(double base, int e) {
        double out = 1.0, b = base;
        for (; e > 0; e >>= 1, b *= b)
            if (e & 1) out *= b;
        return out;
    }

    void check_within_caps(const MultiIndex& mi) const {
        if (mi[0] < 0 || mi[1] < 0 || mi[2] < 0 || mi[3] < 0)
            throw CapTooSmall("negative multi-index entry");
        if (mi[0] + mi[1] > caps_.y)
            throw CapTooSmall("y-order " + std::to_string(mi[0] + mi[1]) + " exceeds cap " +
                              std::to_string(caps_.y));
        if (mi[2] + mi[3] > caps_.x)
            throw CapTooSmall("x-order " + std::to_string(mi[2] + mi[3]) + " exceeds cap " +
                              std::to_string(caps_.x));
    }

    int index4(int a1, int a2, int b1, int b2) const {
        const int sy = caps_.y + 1, sx = caps_.x + 1;
        return ((a1 * sy + a2) * sx + b1) * sx + b2;
    }
    int index(const MultiIndex& mi) const { return index4(mi[0], mi[1], mi[2], mi[3]); }

    template <class F>
    static void for_each_index(JetCaps caps, F&& f) {
        for (int a1 = 0; a1 <= caps.y; ++a1)
            for (int a2 = 0; a2 <= caps.y - a1; ++a2)
                for (int b1 = 0; b1 <= caps.x; ++b1)
                    for (int b2 = 0; b2 <= caps.x - b1; ++b2) f(a1, a2, b1, b2);
    }

    template <class Op>
    static Jet zipped(const Jet& a, const Jet& b, Op op) {
        const JetCaps caps = min_caps(a.caps_, b.caps_);
        const Jet at = a.truncated(caps);
        const Jet bt = b.truncated(caps);
        Jet out(0.0, caps);
        const int n = (caps.y + 1) * (caps.y + 1) * (caps.x + 1) * (caps.x + 1);
        for (int i = 0; i < n; ++i) out.c_[i] = op(at.c_[i], bt.c_[i]);
        return out;
    }

    JetCaps caps_;
    std::array<double, kStorage> c_;
};

// Seeds the four coordinate functions at (x, y) as jets.
struct CoordinateJets {
    Jet y1, y2, x1, x2;
};

inline CoordinateJets lift(double x1, double x2, double y1, double y2, JetCaps caps = JetCaps{}) {
    CoordinateJets j{Jet(y1, caps), Jet(y2, caps), Jet(x1, caps), Jet(x2, caps)};
    if (caps.y >= 1) {
        j.y1 = Jet::variable(y1, kY1, caps);
        j.y2 = Jet::variable(y2, kY2, caps);
    }
    if (caps.x >= 1) {
        j.x1 = Jet::variable(x1, kX1, caps);
        j.x2 = Jet::variable(x2, kX2, caps);
    }
    return j;
}

}  // namespace finsler

namespace Eigen {

// Minimal trait glue so Vec2<Jet>/Mat2<Jet> work, in the style of ceres::Jet.
template <>
struct NumTraits<finsler::Jet> {
    using Real = finsler::Jet;
    using NonInteger = finsler::Jet;
    using Nested = finsler::Jet;
    using Literal = double;

    static inline Real epsilon() { return Real(std::numeric_limits<double>::epsilon()); }
    static inline Real dummy_precision() { return Real(1e-12); }
    static inline Real highest() { return Real(std::numeric_limits<double>::max()); }
    static inline Real lowest() { return Real(-std::numeric_limits<double>::max()); }
    static inline int digits10() { return std::numeric_limits<double>::digits10; }

    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        ReadCost = 1,
        AddCost = 8,
        MulCost = 32,
        RequireInitialization = 1
    };
};

template <typename BinaryOp>
struct ScalarBinaryOpTraits<finsler::Jet, double, BinaryOp> {
    using ReturnType = finsler::Jet;
};
template <typename BinaryOp>
struct ScalarBinaryOpTraits<double, finsler::Jet, BinaryOp> {
    using ReturnType = finsler::Jet;
};

}  // namespace Eigen
