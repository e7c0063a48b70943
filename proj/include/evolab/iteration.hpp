#pragma once

#include <complex>
#include <filesystem>
#include <string>
#include <vector>

#include "evolab/pairing_spectrum.hpp"

namespace evolab
{

/*!
 * Sequence of normalized evolutes. frames[k] is the k-th evolute (frames[0]
 * is the input), translated to centroid 0 and scaled to max vertex norm 1.
 *
 * distance_same[k] compares frames[k+2] with frames[k] vertex by vertex,
 * after undoing the label shift of the second evolute; distance_flipped[k]
 * compares frames[k+2] with -frames[k].
 */
struct IterationTrace
{
    int dim = 0;
    std::vector<VertexPolygon> frames;
    std::vector<double> distance_same;
    std::vector<double> distance_flipped;
    DominantClass classification = DominantClass::Zero;
    std::complex<double> dominant;
    double subdominant_modulus = 0;
};

VertexPolygon normalize(VertexPolygon const& p);

//! max_j |a_j - b_j|
double shape_distance(VertexPolygon const& a, VertexPolygon const& b);

IterationTrace iterate(SphericalPolygon const& v,
                       VertexPolygon const& p0,
                       int steps,
                       Tolerances const& tol = {});

//! Frame k relabeled so that its sides line up with the sides of frame k mod 2.
VertexPolygon aligned_frame(IterationTrace const& trace, int k);

std::string trace_csv(IterationTrace const& trace);
//! Two coordinate-plane projections (x,y) and (x,z) of the chosen frames.
std::string trace_svg(IterationTrace const& trace, std::vector<int> const& frames);
std::string trace_json(IterationTrace const& trace);

struct ExportOptions
{
    bool csv = true;
    bool svg = true;
    bool json = true;
    std::vector<int> svg_frames;  //!< empty: every frame
};

//! Writes <stem>.csv, <stem>.svg, <stem>.json under dir.
std::vector<std::filesystem::path> export_trace(IterationTrace const& trace,
                                                std::filesystem::path const& dir,
                                                std::string const& stem,
                                                ExportOptions const& opts = {});

}  // namespace evolab
