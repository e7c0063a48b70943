#include <cmath>

#include <Eigen/Geometry>
#include <gtest/gtest.h>

#include "evolab/core_geometry.hpp"
#include "evolab/errors.hpp"
#include "evolab/generators.hpp"

using namespace evolab;

namespace
{
Mat window(SphericalPolygon const& v, int start, int count)
{
    Mat out(v.dim(), count);
    for (int k = 0; k < count; ++k)
        out.col(k) = v.dir(start + k);
    return out;
}

template<class F>
ErrorCode code_of(F&& f)
{
    try
    {
        f();
    }
    catch (Error const& e)
    {
        return e.code();
    }
    ADD_FAILURE() << "no exception";
    return ErrorCode::Io;
}
}  // namespace

TEST(SphericalPolygon, RejectsBadInput)
{
    Mat dirs(2, 4);
    dirs << 1, 0, -1, 0,
            0, 1, 0, -1;
    EXPECT_NO_THROW(SphericalPolygon{dirs});

    Mat short_dirs = dirs.leftCols(3);
    EXPECT_EQ(code_of([&] { SphericalPolygon{short_dirs}; }), ErrorCode::InvalidParameter);

    Mat scaled = dirs;
    scaled.col(0) *= 2;
    EXPECT_EQ(code_of([&] { SphericalPolygon{scaled}; }), ErrorCode::InvalidParameter);

    Mat repeated = dirs;
    repeated.col(1) = repeated.col(0);
    EXPECT_EQ(code_of([&] { SphericalPolygon{repeated}; }), ErrorCode::NonGeneric);
}

TEST(Signature, MatchesDeterminants)
{
    for (int m : {2, 3, 4})
    {
        SphericalPolygon const v = random_spherical_polygon(m, m + 4, 11u + m);
        Signature const s = signature(v);
        for (int j = 0; j < v.size(); ++j)
        {
            double const det = window(v, j, m).determinant();
            EXPECT_NEAR(s.dets[j], det, 1e-14);
            EXPECT_EQ(s.signs[j], det > 0 ? 1 : -1);
        }
    }
}

TEST(Dual, NormalsArePositiveAndOrthogonal)
{
    for (int m : {2, 3, 4, 5})
    {
        for (std::uint64_t seed = 0; seed < 10; ++seed)
        {
            SphericalPolygon const v = random_spherical_polygon(m, m + 3, seed);
            SphericalPolygon const u = dual(v);
            for (int j = 0; j < v.size(); ++j)
            {
                EXPECT_NEAR(u.dir(j).norm(), 1.0, 1e-14);
                for (int k = 1; k < m; ++k)
                    EXPECT_NEAR(u.dir(j).dot(v.dir(j + k)), 0.0, 1e-13);
                Mat w(m, m);
                w.leftCols(m - 1) = window(v, j + 1, m - 1);
                w.col(m - 1) = u.dir(j);
                EXPECT_GT(w.determinant(), 0);
            }
        }
    }
}

TEST(Dual, PlanarCaseIsQuarterTurn)
{
    // For m = 2 the normal to v_{j+1} is v_{j+1} turned by +90 degrees.
    SphericalPolygon const v = random_spherical_polygon(2, 6, 3u);
    SphericalPolygon const u = dual(v);
    for (int j = 0; j < 6; ++j)
    {
        Eigen::Vector2d const expect(-v.dir(j + 1)(1), v.dir(j + 1)(0));
        EXPECT_LT((u.dir(j) - expect).norm(), 1e-14);
    }
}

TEST(Dual, SpaceCaseIsNormalizedCross)
{
    SphericalPolygon const v = random_spherical_polygon(3, 7, 8u);
    SphericalPolygon const u = dual(v);
    for (int j = 0; j < 7; ++j)
    {
        Eigen::Vector3d const a = v.dir(j + 1), b = v.dir(j + 2);
        EXPECT_LT((u.dir(j) - a.cross(b).normalized()).norm(), 1e-14);
    }
}

TEST(Dual, DoubleDualSignsFollowSignature)
{
    for (int m : {2, 3, 4})
    {
        for (std::uint64_t seed = 0; seed < 20; ++seed)
        {
            SphericalPolygon const v = random_spherical_polygon(m, m + 4, 100 + seed);
            Signature const s = signature(v);
            SphericalPolygon const w = dual(dual(v));
            std::vector<int> const eps = double_dual_signs(s, m);
            for (int j = 0; j < v.size(); ++j)
                EXPECT_LT((w.dir(j) - eps[j] * v.dir(j + m)).norm(), 1e-12) << m << ' ' << j;
            EXPECT_EQ(signature(dual(v)).signs, dual_signature_signs(s, m));
        }
    }
}

TEST(PvBasis, OrthonormalNullSpace)
{
    for (int m : {2, 3, 4})
    {
        SphericalPolygon const v = random_spherical_polygon(m, m + 5, 21u);
        PvBasis const b = pv_basis(v);
        ASSERT_EQ(b.dim(), 5);
        EXPECT_LT((v.dirs() * b.columns).cwiseAbs().maxCoeff(), 1e-13);
        EXPECT_LT((b.columns.transpose() * b.columns - Mat::Identity(5, 5)).cwiseAbs().maxCoeff(),
                  1e-13);
    }
}

TEST(SideVector, ClosureChecked)
{
    SphericalPolygon const v = random_spherical_polygon(3, 7, 5u);
    Vec x = Vec::Ones(7);
    EXPECT_EQ(code_of([&] { SideVector(v, x); }), ErrorCode::ClosureViolation);
}

TEST(Realize, RoundTripsThroughSideLengths)
{
    Rng rng(9);
    for (int m : {2, 3, 4})
    {
        SphericalPolygon const v = random_spherical_polygon(m, m + 4, rng);
        SideVector const x = random_side_vector(v, rng);
        Vec base = Vec::LinSpaced(m, -1, 2);
        VertexPolygon const p = realize(x, base);
        EXPECT_LT((p.vertex(0) - base).norm(), 1e-15);
        for (int j = 0; j < v.size(); ++j)
        {
            Vec const edge = p.vertex(j + 1) - p.vertex(j);
            EXPECT_LT((edge - x.x()[j] * v.dir(j)).norm(), 1e-12);
        }
        EXPECT_LT((side_lengths(v, p).x() - x.x()).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(Realize, MisalignedPolygonRejected)
{
    Rng rng(4);
    SphericalPolygon const v = random_spherical_polygon(3, 7, rng);
    Mat verts = realize(random_side_vector(v, rng)).verts();
    verts(0, 3) += 1e-3;
    EXPECT_EQ(code_of([&] { side_lengths(v, VertexPolygon(verts)); }), ErrorCode::NotAligned);
}

TEST(VertexPolygon, ShiftRelabels)
{
    Mat verts(2, 5);
    verts << 0, 1, 2, 3, 4,
             5, 6, 7, 8, 9;
    VertexPolygon const p(verts);
    VertexPolygon const s = p.shifted(2);
    EXPECT_EQ(s.vertex(0)(0), 2);
    EXPECT_EQ(s.vertex(4)(0), 1);
    EXPECT_EQ(p.shifted(-2).vertex(0)(0), 3);
    EXPECT_DOUBLE_EQ(p.centroid()(1), 7);
}

//---------------------------------------------------------------------------//
TEST(Isometry, RotationFixedPoint)
{
    double const a = 0.7;
    Mat q(2, 2);
    q << std::cos(a), -std::sin(a), std::sin(a), std::cos(a);
    Vec c(2);
    c << 1.5, -2;
    Isometry const s(q, c - q * c);
    EXPECT_LT((isometry_fixed_point(s) - c).norm(), 1e-14);
}

TEST(Isometry, TranslationHasNoFixedPoint)
{
    Vec t(3);
    t << 1, 2, 3;
    Isometry const s(Mat::Identity(3, 3), t);
    EXPECT_EQ(code_of([&] { isometry_fixed_point(s); }), ErrorCode::NoFixedPoint);
    Isometry const id(Mat::Identity(3, 3), Vec::Zero(3));
    EXPECT_EQ(code_of([&] { isometry_fixed_point(id); }), ErrorCode::NonUnique);
}

TEST(Isometry, ScrewMotionInvariantLine)
{
    Eigen::Vector3d const axis = Eigen::Vector3d(1, 2, 2).normalized();
    Eigen::Vector3d const point(0.5, -1, 3);
    Mat const q = Eigen::AngleAxisd(1.1, axis).toRotationMatrix();
    Vec const t = point - q * point + 0.8 * axis;
    Isometry const s(q, t);
    EXPECT_EQ(code_of([&] { isometry_fixed_point(s); }), ErrorCode::NoFixedPoint);
    Line const line = isometry_invariant_line(s);
    EXPECT_NEAR(std::abs(line.direction.dot(axis)), 1.0, 1e-12);
    Eigen::Vector3d const off = line.point - point;
    EXPECT_LT((off - off.dot(axis) * axis).norm(), 1e-12);
}

TEST(Isometry, ComposeAfterAppliesFirstThenSecond)
{
    Mat q = Eigen::AngleAxisd(0.3, Eigen::Vector3d::UnitZ()).toRotationMatrix();
    Isometry const a(q, Vec::Ones(3));
    Isometry const b(q.transpose(), Vec::LinSpaced(3, 0, 1));
    Vec const p = Vec::LinSpaced(3, -1, 4);
    EXPECT_LT((b.compose_after(a).apply(p) - b.apply(a.apply(p))).norm(), 1e-14);
    EXPECT_NEAR(a.orientation(), 1, 1e-14);
}

TEST(HyperplaneReflection, FixesWindowAndSwapsSides)
{
    Mat pts(3, 3);
    pts << 1, 0, 0,
           0, 1, 0,
           0, 0, 1;
    Isometry const s = hyperplane_reflection(pts);
    for (int k = 0; k < 3; ++k)
        EXPECT_LT((s.apply(pts.col(k)) - pts.col(k)).norm(), 1e-14);
    Vec const o = Vec::Zero(3);
    Vec const image = s.apply(o);
    EXPECT_LT((image - Vec::Constant(3, 2.0 / 3)).norm(), 1e-14);
    EXPECT_NEAR(s.orientation(), -1, 1e-14);

    Mat line(3, 3);
    line << 0, 1, 2,
            0, 1, 2,
            0, 1, 2;
    EXPECT_EQ(code_of([&] { hyperplane_reflection(line); }), ErrorCode::WindowDegenerate);
}
