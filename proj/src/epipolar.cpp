#include "vgsolve/epipolar.hpp"

#include <stdexcept>

namespace vg {

namespace {

BigInt det3(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& d, const BigInt& e,
            const BigInt& f, const BigInt& g, const BigInt& h, const BigInt& i) {
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
}

BigInt det4_rows(const std::array<const BigInt*, 4>& r) {
    // Laplace expansion along the first row.
    BigInt out = 0;
    for (int j = 0; j < 4; j++) {
        if (r[0][j] == 0) continue;
        BigInt sub[3][3];
        for (int i = 1; i < 4; i++) {
            int cc = 0;
            for (int c = 0; c < 4; c++) {
                if (c == j) continue;
                sub[i - 1][cc++] = r[i][c];
            }
        }
        BigInt minor = det3(sub[0][0], sub[0][1], sub[0][2], sub[1][0], sub[1][1], sub[1][2],
                            sub[2][0], sub[2][1], sub[2][2]);
        out += (j % 2 == 0 ? minor : -minor) * r[0][j];
    }
    return out;
}

} // namespace

BigInt det33(const Mat33& m) {
    return det3(m[0][0], m[0][1], m[0][2], m[1][0], m[1][1], m[1][2], m[2][0], m[2][1], m[2][2]);
}

Camera make_camera(const Mat34& m) {
    Camera cam;
    cam.matrix = m;
    // Null vector by signed maximal minors of the 3x4 matrix.
    for (int k = 0; k < 4; k++) {
        BigInt sub[3][3];
        for (int i = 0; i < 3; i++) {
            int cc = 0;
            for (int c = 0; c < 4; c++) {
                if (c == k) continue;
                sub[i][cc++] = m[i][c];
            }
        }
        BigInt minor = det3(sub[0][0], sub[0][1], sub[0][2], sub[1][0], sub[1][1], sub[1][2],
                            sub[2][0], sub[2][1], sub[2][2]);
        cam.pinhole[k] = (k % 2 == 0) ? -minor : minor;
    }
    if (cam.pinhole[0] == 0 && cam.pinhole[1] == 0 && cam.pinhole[2] == 0 && cam.pinhole[3] == 0)
        throw std::invalid_argument("camera matrix must have rank 3");
    return cam;
}

Camera random_camera(Rng& rng, long bound) {
    for (;;) {
        Mat34 m;
        for (auto& row : m)
            for (auto& x : row) x = rng.uniform(-bound, bound);
        try {
            return make_camera(m);
        } catch (const std::invalid_argument&) {
            // rank-deficient draw; resample
        }
    }
}

FundamentalMatrix fundamental(const Camera& p1, const Camera& p2) {
    if (proportional4(p1.pinhole, p2.pinhole))
        throw std::invalid_argument("fundamental matrix undefined for identical pinholes");
    FundamentalMatrix f;
    for (int i = 0; i < 3; i++) {
        for (int l = 0; l < 3; l++) {
            // Rows of P1 except i, then rows of P2 except l, ascending.
            std::array<const BigInt*, 4> rows{};
            int k = 0;
            for (int r = 0; r < 3; r++)
                if (r != i) rows[k++] = p1.matrix[r].data();
            for (int r = 0; r < 3; r++)
                if (r != l) rows[k++] = p2.matrix[r].data();
            BigInt d = det4_rows(rows);
            f.m[i][l] = ((i + l) % 2 == 0) ? d : -d;
        }
    }
    return f;
}

Vec3 project(const Camera& p, const Vec4& x) {
    Vec3 out{};
    for (int i = 0; i < 3; i++) {
        BigInt acc = 0;
        for (int j = 0; j < 4; j++) acc += p.matrix[i][j] * x[j];
        out[i] = acc;
    }
    return out;
}

Vec3 epipole(const Camera& view, const Camera& other) { return project(view, other.pinhole); }

TripleEpipoles triple_epipoles(const Camera& p1, const Camera& p2, const Camera& p3) {
    TripleEpipoles ep;
    ep.e12 = epipole(p1, p2);
    ep.e21 = epipole(p2, p1);
    ep.e13 = epipole(p1, p3);
    ep.e31 = epipole(p3, p1);
    ep.e23 = epipole(p2, p3);
    ep.e32 = epipole(p3, p2);
    return ep;
}

namespace {

BigInt bilinear(const Vec3& a, const Mat33& m, const Vec3& b) {
    BigInt acc = 0;
    for (int i = 0; i < 3; i++)
        for (int j = 0; j < 3; j++) acc += a[i] * m[i][j] * b[j];
    return acc;
}

} // namespace

std::array<BigInt, 3> triple_residuals(const FundamentalMatrix& f12, const FundamentalMatrix& f23,
                                       const FundamentalMatrix& f31, const TripleEpipoles& ep) {
    return {bilinear(ep.e13, f12.m, ep.e23), bilinear(ep.e21, f23.m, ep.e31),
            bilinear(ep.e32, f31.m, ep.e12)};
}

bool pinholes_aligned(const Vec4& a, const Vec4& b, const Vec4& c) {
    // Aligned in P^3 iff the 3x4 stack has rank <= 2: all 3x3 minors vanish.
    for (int skip = 0; skip < 4; skip++) {
        BigInt sub[3][3];
        int cc = 0;
        for (int col = 0; col < 4; col++) {
            if (col == skip) continue;
            sub[0][cc] = a[col];
            sub[1][cc] = b[col];
            sub[2][cc] = c[col];
            cc++;
        }
        if (det3(sub[0][0], sub[0][1], sub[0][2], sub[1][0], sub[1][1], sub[1][2], sub[2][0],
                 sub[2][1], sub[2][2]) != 0)
            return false;
    }
    return true;
}

bool pinholes_coplanar(const Vec4& a, const Vec4& b, const Vec4& c, const Vec4& d) {
    std::array<const BigInt*, 4> rows{a.data(), b.data(), c.data(), d.data()};
    return det4_rows(rows) == 0;
}

bool proportional(const Vec3& a, const Vec3& b) {
    for (int i = 0; i < 3; i++)
        for (int j = i + 1; j < 3; j++)
            if (a[i] * b[j] != a[j] * b[i]) return false;
    return true;
}

bool proportional4(const Vec4& a, const Vec4& b) {
    for (int i = 0; i < 4; i++)
        for (int j = i + 1; j < 4; j++)
            if (a[i] * b[j] != a[j] * b[i]) return false;
    return true;
}

Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

BigInt dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec3 mat_vec(const Mat33& m, const Vec3& v) {
    Vec3 out{};
    for (int i = 0; i < 3; i++) out[i] = m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2];
    return out;
}

Vec3 mat_tvec(const Mat33& m, const Vec3& v) {
    Vec3 out{};
    for (int j = 0; j < 3; j++) out[j] = m[0][j] * v[0] + m[1][j] * v[1] + m[2][j] * v[2];
    return out;
}

namespace {

bool is_zero(const Vec3& v) { return v[0] == 0 && v[1] == 0 && v[2] == 0; }

} // namespace

GeometryCheck verify_move_II(const std::array<Camera, 4>& cams) {
    const Vec4& c1 = cams[0].pinhole;
    const Vec4& c2 = cams[1].pinhole;
    const Vec4& c3 = cams[2].pinhole;
    const Vec4& c4 = cams[3].pinhole;
    if (pinholes_aligned(c1, c2, c4)) return {false, "pinholes 1,2,4 aligned"};
    if (pinholes_aligned(c1, c3, c4)) return {false, "pinholes 1,3,4 aligned"};
    if (pinholes_coplanar(c1, c2, c3, c4)) return {false, "pinholes coplanar"};

    FundamentalMatrix f24 = fundamental(cams[1], cams[3]);
    FundamentalMatrix f34 = fundamental(cams[2], cams[3]);
    Vec3 e21 = epipole(cams[1], cams[0]);
    Vec3 e31 = epipole(cams[2], cams[0]);
    // Transfer: the epipolar line in image 4 of a point u2 in image 2 is
    // F24^T u2, under the convention u2^T F24 u4 = 0.
    Vec3 l41 = mat_tvec(f24.m, e21);
    Vec3 m41 = mat_tvec(f34.m, e31);
    if (is_zero(l41) || is_zero(m41)) return {false, "degenerate transfer line"};
    if (proportional(l41, m41)) return {false, "transfer lines coincide"};
    Vec3 meet = cross(l41, m41);
    Vec3 e41 = epipole(cams[3], cams[0]);
    GeometryCheck out;
    out.verified = !is_zero(meet) && proportional(meet, e41);
    return out;
}

GeometryCheck verify_move_III(const std::array<Camera, 5>& cams) {
    const Vec4& c1 = cams[0].pinhole;
    const Vec4& c2 = cams[1].pinhole;
    for (int i = 2; i < 5; i++)
        if (pinholes_aligned(c1, c2, cams[i].pinhole))
            return {false, "pinhole " + std::to_string(i + 1) + " on the line of pinholes 1,2"};
    for (int i = 2; i < 5; i++)
        for (int j = i + 1; j < 5; j++)
            if (pinholes_coplanar(c1, c2, cams[i].pinhole, cams[j].pinhole))
                return {false, "epipolar planes of pinholes " + std::to_string(i + 1) + "," +
                                   std::to_string(j + 1) + " coincide"};

    FundamentalMatrix f12 = fundamental(cams[0], cams[1]);
    Vec3 e12 = epipole(cams[0], cams[1]);
    Vec3 e21 = epipole(cams[1], cams[0]);
    std::array<Vec3, 3> lines1, lines2;
    for (int i = 2; i < 5; i++) {
        Vec3 u1 = epipole(cams[0], cams[i]);
        Vec3 u2 = epipole(cams[1], cams[i]);
        // Each image pair lies on corresponding epipolar lines.
        if (bilinear(u1, f12.m, u2) != 0) return {false, ""};
        lines1[i - 2] = cross(e12, u1);
        lines2[i - 2] = cross(e21, u2);
        if (is_zero(lines1[i - 2]) || is_zero(lines2[i - 2]))
            return {false, "image of pinhole " + std::to_string(i + 1) + " meets an epipole"};
    }
    for (int i = 0; i < 3; i++)
        for (int j = i + 1; j < 3; j++)
            if (proportional(lines1[i], lines1[j]) || proportional(lines2[i], lines2[j]))
                return {false, "epipolar line pairs not distinct"};
    return {true, ""};
}

} // namespace vg
