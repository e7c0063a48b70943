#include "evolab/io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>

namespace evolab
{
namespace
{
json complex_json(std::complex<double> z)
{
    return json::array({z.real(), z.imag()});
}

json profile_json(FourierProfile const& p)
{
    json terms = json::array();
    for (auto const& [j, cs] : p.terms)
        terms.push_back({j, cs.first, cs.second});
    return {{"q", p.q}, {"terms", terms}};
}
}  // namespace

std::string format_double(double x)
{
    std::array<char, 32> buf;
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    if (ec != std::errc{})
        throw Error(ErrorCode::Io, "cannot format number");
    return std::string(buf.data(), end);
}

json to_json(Mat const& columns)
{
    json out = json::array();
    for (Eigen::Index j = 0; j < columns.cols(); ++j)
    {
        json col = json::array();
        for (Eigen::Index i = 0; i < columns.rows(); ++i)
            col.push_back(columns(i, j));
        out.push_back(std::move(col));
    }
    return out;
}

Mat matrix_from_json(json const& j, char const* what)
{
    if (!j.is_array() || j.empty() || !j[0].is_array() || j[0].empty())
        throw Error(ErrorCode::Parse, std::string(what) + ": expected a nonempty array of columns");
    Eigen::Index const rows = static_cast<Eigen::Index>(j[0].size());
    Mat out(rows, static_cast<Eigen::Index>(j.size()));
    for (std::size_t c = 0; c < j.size(); ++c)
    {
        if (!j[c].is_array() || static_cast<Eigen::Index>(j[c].size()) != rows)
            throw Error(ErrorCode::Parse, std::string(what) + ": ragged columns");
        for (Eigen::Index r = 0; r < rows; ++r)
        {
            if (!j[c][r].is_number())
                throw Error(ErrorCode::Parse, std::string(what) + ": non-numeric entry");
            out(r, static_cast<Eigen::Index>(c)) = j[c][r].get<double>();
        }
    }
    return out;
}

json vec_to_json(Vec const& v)
{
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i)
        out.push_back(v[i]);
    return out;
}

Vec vec_from_json(json const& j, char const* what)
{
    if (!j.is_array() || j.empty())
        throw Error(ErrorCode::Parse, std::string(what) + ": expected a nonempty array");
    Vec out(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i)
    {
        if (!j[i].is_number())
            throw Error(ErrorCode::Parse, std::string(what) + ": non-numeric entry");
        out[static_cast<Eigen::Index>(i)] = j[i].get<double>();
    }
    return out;
}

json to_json(SphericalPolygon const& v)
{
    return {{"m", v.dim()}, {"n", v.size()}, {"directions", to_json(v.dirs())}};
}

json to_json(SideVector const& x)
{
    return {{"directions", to_json(x.base().dirs())}, {"side_lengths", vec_to_json(x.x())}};
}

json to_json(VertexPolygon const& p)
{
    return {{"m", p.dim()}, {"n", p.size()}, {"vertices", to_json(p.verts())}};
}

json to_json(Isometry const& s)
{
    return {{"Q", to_json(s.Q)}, {"t", vec_to_json(s.t)}};
}

json to_json(PvBasis const& b)
{
    return {{"directions", to_json(b.base.dirs())}, {"columns", to_json(b.columns)}};
}

json to_json(EvoluteMatrix const& e)
{
    json rows = json::array();
    for (Eigen::Index i = 0; i < e.matrix.rows(); ++i)
    {
        json row = json::array();
        for (Eigen::Index j = 0; j < e.matrix.cols(); ++j)
            row.push_back(e.matrix(i, j));
        rows.push_back(std::move(row));
    }
    return {{"source", to_json(e.source)},
            {"target", to_json(e.target)},
            {"source_basis", to_json(e.source_basis.columns)},
            {"target_basis", to_json(e.target_basis.columns)},
            {"matrix", rows}};
}

json to_json(Signature const& s)
{
    return {{"signs", s.signs}, {"dets", s.dets}};
}

json to_json(SpectrumReport const& r)
{
    json eig = json::array();
    for (auto z : r.eigenvalues)
        eig.push_back(complex_json(z));
    json pairs = json::array();
    for (auto const& p : r.pairs)
        pairs.push_back({{"first", complex_json(p.first)},
                         {"second", complex_json(p.second)},
                         {"gap", p.gap}});
    json unpaired = json::array();
    for (auto z : r.residual_unpaired)
        unpaired.push_back(complex_json(z));
    return {{"eigenvalues", eig},
            {"pairs", pairs},
            {"unpaired", unpaired},
            {"zero_count", r.zero_count},
            {"paired", r.paired},
            {"max_gap", r.max_gap},
            {"dominant", complex_json(r.dominant)},
            {"dominant_class", to_string(r.dominant_class)},
            {"subdominant_modulus", r.subdominant_modulus}};
}

json to_json(SampledCurve const& c)
{
    json out = {{"period", c.period},
                {"samples", c.size()},
                {"t", vec_to_json(c.t)},
                {"points", to_json(c.points)},
                {"rho", vec_to_json(c.rho)},
                {"sigma", c.sigma},
                {"cusp_indices", c.cusp_indices}};
    if (c.indicatrix)
        out["indicatrix"] = {{"r", c.indicatrix->r},
                             {"q", c.indicatrix->q},
                             {"phase", c.indicatrix->phase}};
    if (c.profile)
        out["profile"] = profile_json(*c.profile);
    return out;
}

SphericalPolygon spherical_polygon_from_json(json const& j, Tolerances const& tol)
{
    if (!j.is_object() || !j.contains("directions"))
        throw Error(ErrorCode::Parse, "spherical polygon: missing \"directions\"");
    return SphericalPolygon(matrix_from_json(j["directions"], "directions"), tol);
}

VertexPolygon vertex_polygon_from_json(json const& j)
{
    if (!j.is_object() || !j.contains("vertices"))
        throw Error(ErrorCode::Parse, "polygon: missing \"vertices\"");
    return VertexPolygon(matrix_from_json(j["vertices"], "vertices"));
}

SideVector side_vector_from_json(json const& j, Tolerances const& tol)
{
    if (!j.is_object() || !j.contains("directions") || !j.contains("side_lengths"))
        throw Error(ErrorCode::Parse, "side vector: need \"directions\" and \"side_lengths\"");
    return SideVector(SphericalPolygon(matrix_from_json(j["directions"], "directions"), tol),
                      vec_from_json(j["side_lengths"], "side_lengths"),
                      tol);
}

Isometry isometry_from_json(json const& j)
{
    if (!j.is_object() || !j.contains("Q") || !j.contains("t"))
        throw Error(ErrorCode::Parse, "isometry: need \"Q\" and \"t\"");
    return Isometry(matrix_from_json(j["Q"], "Q"), vec_from_json(j["t"], "t"));
}

json read_json_file(std::filesystem::path const& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::Io, "cannot open " + path.string());
    try
    {
        return json::parse(in);
    }
    catch (json::parse_error const& e)
    {
        throw Error(ErrorCode::Parse, path.string() + ": " + e.what());
    }
}

void write_text_file(std::filesystem::path const& path, std::string const& text)
{
    if (path.has_parent_path())
        std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(ErrorCode::Io, "cannot write " + path.string());
    out << text;
    if (!out)
        throw Error(ErrorCode::Io, "write failed for " + path.string());
}

}  // namespace evolab
