#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "evolab/curves.hpp"
#include "evolab/pairing_spectrum.hpp"

namespace evolab
{

using json = nlohmann::json;

//! Shortest round-trip decimal form of a double.
std::string format_double(double x);

json to_json(Mat const& columns);  //!< array of columns
Mat matrix_from_json(json const& j, char const* what);
json vec_to_json(Vec const& v);
Vec vec_from_json(json const& j, char const* what);

json to_json(SphericalPolygon const& v);
json to_json(SideVector const& x);
json to_json(VertexPolygon const& p);
json to_json(Isometry const& s);
json to_json(PvBasis const& b);
json to_json(EvoluteMatrix const& e);
json to_json(Signature const& s);
json to_json(SpectrumReport const& r);
json to_json(SampledCurve const& c);

SphericalPolygon spherical_polygon_from_json(json const& j, Tolerances const& tol = {});
VertexPolygon vertex_polygon_from_json(json const& j);
SideVector side_vector_from_json(json const& j, Tolerances const& tol = {});
Isometry isometry_from_json(json const& j);

json read_json_file(std::filesystem::path const& path);
void write_text_file(std::filesystem::path const& path, std::string const& text);

}  // namespace evolab
