#pragma once

#include <Eigen/Core>

namespace finsler {

template <class Scalar>
using Vec2 = Eigen::Matrix<Scalar, 2, 1>;

template <class Scalar>
using Mat2 = Eigen::Matrix<Scalar, 2, 2>;

using Vec2d = Vec2<double>;
using Mat2d = Mat2<double>;

// Position on the punctured plane; r = |x| must be positive wherever
// r-dependent quantities are formed.
using Point2 = Vec2d;

// Tangent coordinates; must be nonzero.
using Direction2 = Vec2d;

// The invariants of a spherically symmetric structure at (x, y):
//   r = |x|, u = |y|, s = <x,y>/u, w = sqrt(r^2 - s^2), cross = x1*y2 - x2*y1.
// They satisfy u*s = <x,y>, u*w = |cross| and s^2 + w^2 = r^2.
struct ScalarTriple {
    double r = 0;
    double u = 0;
    double s = 0;
    double w = 0;
    double cross = 0;
};

}  // namespace finsler
