#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>

#include <gtest/gtest.h>

#include "evolab/errors.hpp"
#include "evolab/generators.hpp"
#include "evolab/io.hpp"

using namespace evolab;

namespace
{
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

std::filesystem::path scratch_dir(char const* name)
{
    auto dir = std::filesystem::temp_directory_path() / "evolab_test_io" / name;
    std::filesystem::remove_all(dir);
    return dir;
}
}  // namespace

TEST(FormatDouble, RoundTrips)
{
    Rng rng(11);
    std::uniform_real_distribution<double> u(-1e6, 1e6);
    for (int i = 0; i < 1000; ++i)
    {
        double const x = u(rng) * std::pow(10.0, i % 20 - 10);
        EXPECT_EQ(std::stod(format_double(x)), x);
    }
    EXPECT_EQ(format_double(0.5), "0.5");
    EXPECT_EQ(format_double(-2), "-2");
    EXPECT_EQ(format_double(0.1), "0.1");
}

TEST(JsonIo, PolygonsRoundTripExactly)
{
    Rng rng(12);
    SphericalPolygon const v = random_spherical_polygon(3, 7, rng);
    json const jv = json::parse(to_json(v).dump());
    EXPECT_EQ(jv["m"], 3);
    EXPECT_EQ(jv["n"], 7);
    EXPECT_EQ(spherical_polygon_from_json(jv).dirs(), v.dirs());

    VertexPolygon const p = random_polygon(v, rng);
    EXPECT_EQ(vertex_polygon_from_json(json::parse(to_json(p).dump())).verts(), p.verts());

    SideVector const x = random_side_vector(v, rng);
    SideVector const back = side_vector_from_json(json::parse(to_json(x).dump()));
    EXPECT_EQ(back.x(), x.x());
    EXPECT_EQ(back.base().dirs(), x.base().dirs());
}

TEST(JsonIo, MatrixIsArrayOfColumns)
{
    Mat m(2, 3);
    m << 1, 2, 3, 4, 5, 6;
    json const j = to_json(m);
    ASSERT_EQ(j.size(), 3u);
    EXPECT_EQ(j[1], json({2.0, 5.0}));
    EXPECT_EQ(matrix_from_json(j, "m"), m);
}

TEST(JsonIo, IsometryRoundTrip)
{
    Mat q(2, 2);
    q << 0, -1, 1, 0;
    Vec t(2);
    t << 0.25, -3;
    Isometry const s(q, t);
    Isometry const back = isometry_from_json(json::parse(to_json(s).dump()));
    EXPECT_EQ(back.Q, s.Q);
    EXPECT_EQ(back.t, s.t);
}

TEST(JsonIo, MalformedInputIsParseError)
{
    EXPECT_EQ(code_of([] { vertex_polygon_from_json(json{{"points", 1}}); }), ErrorCode::Parse);
    EXPECT_EQ(code_of([] { matrix_from_json(json::parse("[[1,2],[3]]"), "m"); }), ErrorCode::Parse);
    EXPECT_EQ(code_of([] { matrix_from_json(json::parse("[[1,\"a\"]]"), "m"); }), ErrorCode::Parse);
    EXPECT_EQ(code_of([] { vec_from_json(json::parse("[]"), "v"); }), ErrorCode::Parse);
    EXPECT_EQ(code_of([] { side_vector_from_json(json{{"directions", json::array()}}); }), ErrorCode::Parse);
}

TEST(JsonIo, ReadsAndWritesFiles)
{
    auto const dir = scratch_dir("files");
    write_text_file(dir / "nested" / "a.json", "{\"x\": [1, 2]}");
    EXPECT_EQ(read_json_file(dir / "nested" / "a.json")["x"][1], 2);
    write_text_file(dir / "bad.json", "{\"x\": ");
    EXPECT_EQ(code_of([&] { read_json_file(dir / "bad.json"); }), ErrorCode::Parse);
    EXPECT_EQ(code_of([&] { read_json_file(dir / "missing.json"); }), ErrorCode::Io);
}

TEST(JsonIo, CurveCarriesModel)
{
    SampledCurve const c = hypocycloid(0.6, 3, 1, 32);
    json const j = to_json(c);
    EXPECT_EQ(j["samples"], 32);
    EXPECT_EQ(j["cusp_indices"].size(), 6u);
    EXPECT_EQ(j["indicatrix"]["r"], 0.6);
    EXPECT_TRUE(j.contains("profile"));
    EXPECT_EQ(j["points"].size(), 32u);
}
