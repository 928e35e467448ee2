#pragma once

#include <cmath>

#include "finsler/errors.hpp"
#include "finsler/jet.hpp"
#include "finsler/types.hpp"

namespace finsler {

// Base invariants r, u, s, w, cross at a tangent vector.  w is formed as
// |cross| / u, which is exact where y is parallel to x and avoids the
// cancellation in sqrt(r^2 - s^2) near s = +-r.
inline ScalarTriple scalar_triple(const Point2& x, const Direction2& y) {
    const double u = std::hypot(y(0), y(1));
    if (u <= 0.0) throw ZeroDirection();
    ScalarTriple t;
    t.r = std::hypot(x(0), x(1));
    t.u = u;
    t.s = (x(0) * y(0) + x(1) * y(1)) / u;
    t.cross = x(0) * y(1) - x(1) * y(0);
    t.w = std::abs(t.cross) / u;
    return t;
}

// Left-minus-right residuals of the three algebraic identities
//   u s             = x1 y1 + x2 y2
//   u sqrt(r^2-s^2) = x1 y2 - x2 y1
//   u^2 s sqrt(r^2-s^2) = x1^2 y1 y2 - x1 x2 y1^2 + x1 x2 y2^2 - x2^2 y1 y2
// evaluated with the defining square root (not the stabilised w), so the
// residuals measure the identities rather than restating them.  Only valid
// on the positive-orientation cone.
struct IdentityResiduals {
    double res4 = 0;
    double res5 = 0;
    double res6 = 0;
};

inline IdentityResiduals identity_residuals(const Point2& x, const Direction2& y) {
    const double u = std::hypot(y(0), y(1));
    if (u <= 0.0) throw ZeroDirection();
    const double cross = x(0) * y(1) - x(1) * y(0);
    if (!(cross > 0.0)) throw OrientationViolation(cross);

    const double r = std::hypot(x(0), x(1));
    const double s = (x(0) * y(0) + x(1) * y(1)) / u;
    const double w_def = std::sqrt(std::max(0.0, (r - s) * (r + s)));

    IdentityResiduals res;
    res.res4 = u * s - (x(0) * y(0) + x(1) * y(1));
    res.res5 = u * w_def - cross;
    res.res6 = u * u * s * w_def - (x(0) * x(0) * y(0) * y(1) - x(0) * x(1) * y(0) * y(0) +
                                    x(0) * x(1) * y(1) * y(1) - x(1) * x(1) * y(0) * y(1));
    return res;
}

// Generic-scalar invariants for formula evaluation on jets.  Restricted to
// the cone cross > 0, where sqrt(r^2 - s^2) is smooth and equals cross / u.
template <class Scalar>
struct TripleT {
    Scalar r, u, s, w, cross;
};

template <class Scalar>
TripleT<Scalar> scalar_triple_t(const Vec2<Scalar>& x, const Vec2<Scalar>& y) {
    using std::sqrt;
    TripleT<Scalar> t{Scalar(), Scalar(), Scalar(), Scalar(), Scalar()};
    t.u = sqrt(y(0) * y(0) + y(1) * y(1));
    t.r = sqrt(x(0) * x(0) + x(1) * x(1));
    t.s = (x(0) * y(0) + x(1) * y(1)) / t.u;
    t.cross = x(0) * y(1) - x(1) * y(0);
    t.w = sqrt((t.r - t.s) * (t.r + t.s));
    return t;
}

}  // namespace finsler
