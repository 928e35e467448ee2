#pragma once

#include <array>
#include <functional>
#include <vector>

#include "finsler/jet.hpp"
#include "finsler/types.hpp"

namespace finsler {

// Scalar field over phase space, f(x, y) -> real.
using ScalarField = std::function<double(const Vec2d& x, const Vec2d& y)>;

// Central finite-difference step sizes balancing truncation against roundoff
// for the stencils below.
inline double fd_step(int order) { return order <= 2 ? 1e-5 : 1e-3; }

namespace detail {

// Central stencils per derivative order, offsets in units of h.
struct Stencil {
    std::vector<std::pair<int, double>> taps;  // (offset, weight)
    int scale_power;                           // divide by h^scale_power
};

inline const Stencil& central_stencil(int order) {
    static const std::array<Stencil, 5> table = {{
        {{{0, 1.0}}, 0},
        {{{-1, -0.5}, {1, 0.5}}, 1},
        {{{-1, 1.0}, {0, -2.0}, {1, 1.0}}, 2},
        {{{-2, -0.5}, {-1, 1.0}, {1, -1.0}, {2, 0.5}}, 3},
        {{{-2, 1.0}, {-1, -4.0}, {0, 6.0}, {1, -4.0}, {2, 1.0}}, 4},
    }};
    return table.at(order);
}

inline double fd_recurse(const ScalarField& f, Vec2d x, Vec2d y, const MultiIndex& d, int var,
                         double h) {
    if (var == 4) return f(x, y);
    const int order = d[var];
    if (order == 0) return fd_recurse(f, x, y, d, var + 1, h);
    const Stencil& st = central_stencil(order);
    double acc = 0.0;
    for (auto [offset, weight] : st.taps) {
        Vec2d xs = x, ys = y;
        double& coord = (var == kY1)   ? ys(0)
                        : (var == kY2) ? ys(1)
                        : (var == kX1) ? xs(0)
                                       : xs(1);
        coord += offset * h;
        acc += weight * fd_recurse(f, xs, ys, d, var + 1, h);
    }
    double scale = 1.0;
    for (int i = 0; i < st.scale_power; ++i) scale *= h;
    return acc / scale;
}

}  // namespace detail

// Central finite-difference estimate of the mixed partial `d` of f at (x, y).
// Independent of the jet algebra; used to cross-check every jet route.
inline double fd_oracle(const ScalarField& f, const Vec2d& x, const Vec2d& y, const MultiIndex& d,
                        double h) {
    return detail::fd_recurse(f, x, y, d, 0, h);
}

inline double fd_oracle(const ScalarField& f, const Vec2d& x, const Vec2d& y, const MultiIndex& d) {
    int total = d[0] + d[1] + d[2] + d[3];
    return fd_oracle(f, x, y, d, fd_step(total));
}

// Univariate variant for fields of a single parameter (e.g. s-derivatives).
inline double fd_oracle_1d(const std::function<double(double)>& f, double t, int order, double h) {
    const detail::Stencil& st = detail::central_stencil(order);
    double acc = 0.0;
    for (auto [offset, weight] : st.taps) acc += weight * f(t + offset * h);
    double scale = 1.0;
    for (int i = 0; i < st.scale_power; ++i) scale *= h;
    return acc / scale;
}

inline double fd_oracle_1d(const std::function<double(double)>& f, double t, int order) {
    return fd_oracle_1d(f, t, order, fd_step(order));
}

}  // namespace finsler
