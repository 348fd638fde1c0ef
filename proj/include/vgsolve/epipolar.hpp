#ifndef VGSOLVE_EPIPOLAR_HPP
#define VGSOLVE_EPIPOLAR_HPP

#include <array>
#include <string>

#include "vgsolve/exact.hpp"
#include "vgsolve/rng.hpp"

namespace vg {

using Vec3 = std::array<BigInt, 3>;
using Vec4 = std::array<BigInt, 4>;
using Mat33 = std::array<std::array<BigInt, 3>, 3>;
using Mat34 = std::array<std::array<BigInt, 4>, 3>;

// All oracle computations are over exact integers, so every incidence check
// below is an equality, never a tolerance.

struct Camera {
    Mat34 matrix;
    Vec4 pinhole; // spans the null space of the matrix; exact
};

// Builds the camera and its pinhole (signed 3x3 minors); throws if rank < 3.
Camera make_camera(const Mat34& m);
// Uniform integer entries in [-bound, bound], resampled until rank 3.
Camera random_camera(Rng& rng, long bound = 9);

struct FundamentalMatrix {
    Mat33 m; // nonzero, defined up to scale, det exactly 0
};

// The 3x3 matrix of signed 4x4 minors of the two camera matrices; satisfies
// u1^T F u2 = 0 for projections u1, u2 of a common world point.
// Throws for identical pinholes (the matrix would vanish).
FundamentalMatrix fundamental(const Camera& p1, const Camera& p2);

// Image of camera j's pinhole in view i.
Vec3 epipole(const Camera& view, const Camera& other);

struct TripleEpipoles {
    Vec3 e12, e21, e13, e31, e23, e32; // e_ij = image of pinhole j in view i
};
TripleEpipoles triple_epipoles(const Camera& p1, const Camera& p2, const Camera& p3);

// The three bilinear compatibility forms of a fundamental-matrix triple; all
// exactly zero when the three matrices come from one camera triple with
// non-aligned pinholes.
std::array<BigInt, 3> triple_residuals(const FundamentalMatrix& f12, const FundamentalMatrix& f23,
                                       const FundamentalMatrix& f31, const TripleEpipoles& ep);

bool pinholes_aligned(const Vec4& a, const Vec4& b, const Vec4& c);
bool pinholes_coplanar(const Vec4& a, const Vec4& b, const Vec4& c, const Vec4& d);
bool proportional(const Vec3& a, const Vec3& b);
bool proportional4(const Vec4& a, const Vec4& b);

Vec3 cross(const Vec3& a, const Vec3& b);
BigInt dot(const Vec3& a, const Vec3& b);
Vec3 mat_vec(const Mat33& m, const Vec3& v);
Vec3 mat_tvec(const Mat33& m, const Vec3& v);
Vec3 project(const Camera& p, const Vec4& x);
BigInt det33(const Mat33& m);

struct GeometryCheck {
    bool verified = false;
    std::string degeneracy; // nonempty iff a precondition failed
};

// Epipole transfer behind move II: with arrows 1->2, 1->3 and solid edges
// 2-4, 3-4, the two transferred epipolar lines in image 4 intersect exactly
// in the image of pinhole 1. Degenerate configurations (aligned or coplanar
// pinholes) are flagged, not verified.
GeometryCheck verify_move_II(const std::array<Camera, 4>& cams);

// Three fixed pinhole images in both views pin the epipolar line homography:
// each image pair satisfies the epipolar constraint and the three epipolar
// line pairs are pairwise distinct. Flags coincident or undefined epipolar
// planes.
GeometryCheck verify_move_III(const std::array<Camera, 5>& cams);

} // namespace vg

#endif
