// blocks.hpp - 2x2 block helpers shared by the correlation routines

#pragma once

#include "ness/types.hpp"

namespace ness::detail {

struct Blocks {
    Mat2 a;
    Mat2 b;
    Mat2 c;  // upper-right block, <x_a x_b>
};

inline Blocks split(const Mat4& sigma)
{
    return {sigma.topLeftCorner<2, 2>(), sigma.bottomRightCorner<2, 2>(),
            sigma.topRightCorner<2, 2>()};
}

// adj(M) = det(M) M^-1
inline Mat2 adjugate(const Mat2& m)
{
    Mat2 r;
    r << m(1, 1), -m(0, 1), -m(1, 0), m(0, 0);
    return r;
}

// T = tr(adj(a) c adj(b) c^T); det sigma = I1 I2 + I3^2 - T.
inline double cross_trace(const Blocks& s)
{
    return (adjugate(s.a) * s.c * adjugate(s.b) * s.c.transpose()).trace();
}

} // namespace ness::detail
