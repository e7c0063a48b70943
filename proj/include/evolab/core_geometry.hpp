#pragma once

#include <vector>

#include <Eigen/Dense>

#include "evolab/errors.hpp"

namespace evolab
{

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

struct Tolerances
{
    double genericity = 1e-8;  //!< |det| of consecutive m-tuples of unit dirs
    double closure = 1e-9;     //!< |sum x_i v_i| relative to |x|_inf
    double alignment = 1e-8;   //!< off-axis edge component relative to edge scale
    double unit_norm = 1e-9;
    double eigen_one = 1e-8;   //!< |lambda - 1| threshold for isometries
    double orthogonality = 1e-9;
};

//! Cyclic index into [0, n).
inline int wrap(int i, int n)
{
    int r = i % n;
    return r < 0 ? r + n : r;
}

//---------------------------------------------------------------------------//
/*!
 * Cyclic sequence of n unit vectors in R^m, generic in the sense that every
 * cyclically consecutive m-tuple is linearly independent.
 *
 * Dense indexing: side j of a polygon with these directions runs from vertex
 * j to vertex j+1. The determinant window d_j covers dirs j..j+m-1.
 */
class SphericalPolygon
{
  public:
    explicit SphericalPolygon(Mat dirs, Tolerances const& tol = {});

    int dim() const { return static_cast<int>(dirs_.rows()); }
    int size() const { return static_cast<int>(dirs_.cols()); }
    Mat const& dirs() const { return dirs_; }
    auto dir(int i) const { return dirs_.col(wrap(i, size())); }

    //! det(v_start, ..., v_{start+count-1}) for count == dim().
    double window_det(int start) const;

  private:
    Mat dirs_;
};

struct Signature
{
    std::vector<int> signs;
    std::vector<double> dets;
};

//! Polygon in R^m; columns are vertices. Degenerate polygons are allowed.
class VertexPolygon
{
  public:
    VertexPolygon() = default;
    explicit VertexPolygon(Mat verts);

    int dim() const { return static_cast<int>(verts_.rows()); }
    int size() const { return static_cast<int>(verts_.cols()); }
    Mat const& verts() const { return verts_; }
    auto vertex(int i) const { return verts_.col(wrap(i, size())); }

    VertexPolygon translated(Vec const& c) const;
    //! Relabel so that vertex i of the result is vertex i+shift of this one.
    VertexPolygon shifted(int shift) const;
    Vec centroid() const;

  private:
    Mat verts_;
};

//! Signed side lengths of a polygon in P_v; closure is checked on creation.
class SideVector
{
  public:
    SideVector(SphericalPolygon base, Vec x, Tolerances const& tol = {});

    SphericalPolygon const& base() const { return base_; }
    Vec const& x() const { return x_; }
    double closure_residual() const;

  private:
    SphericalPolygon base_;
    Vec x_;
};

//! Orthonormal basis of P_v (null space of [v_0 ... v_{n-1}]), columns in R^n.
struct PvBasis
{
    SphericalPolygon base;
    Mat columns;

    int dim() const { return static_cast<int>(columns.cols()); }
    Vec coords(Vec const& x) const { return columns.transpose() * x; }
    Vec side_lengths(Vec const& c) const { return columns * c; }
};

//! x -> Q x + t
struct Isometry
{
    Mat Q;
    Vec t;

    Isometry(Mat q, Vec t, Tolerances const& tol = {});
    Vec apply(Vec const& p) const { return Q * p + t; }
    Isometry compose_after(Isometry const& first) const;
    double orientation() const;
};

struct Line
{
    Vec point;
    Vec direction;  //!< unit
};

Signature signature(SphericalPolygon const& v, Tolerances const& tol = {});

// u_j is the positive unit normal of span(v_{j+1}, ..., v_{j+m-1}):
// det(v_{j+1}, ..., v_{j+m-1}, u_j) > 0, hence sign(u_j . v_{j+m}) = s_{j+1}.
SphericalPolygon dual(SphericalPolygon const& v, Tolerances const& tol = {});

//! Sign vector with dual(dual(v))_j = eps_j v_{j+m}.
std::vector<int> double_dual_signs(Signature const& s, int m);
//! Predicted signature of dual(v) from the signature of v.
std::vector<int> dual_signature_signs(Signature const& s, int m);

PvBasis pv_basis(SphericalPolygon const& v, Tolerances const& tol = {});

VertexPolygon realize(SideVector const& x, Vec const& base);
VertexPolygon realize(SideVector const& x);
SideVector side_lengths(SphericalPolygon const& v,
                        VertexPolygon const& p,
                        Tolerances const& tol = {});

Vec isometry_fixed_point(Isometry const& sigma, Tolerances const& tol = {});
Line isometry_invariant_line(Isometry const& sigma, Tolerances const& tol = {});

//! Affine reflection in the hyperplane through the given m points (columns).
Isometry hyperplane_reflection(Mat const& points, double rank_tol = 1e-8);

}  // namespace evolab
