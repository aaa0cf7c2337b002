#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>

#include "sextic/grid.hpp"
#include "sextic/weierstrass.hpp"

using namespace sextic;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

}  // namespace

TEST_CASE("axis parsing") {
    const auto a = parse_axis("-1:1:5");
    CHECK(a.min == -1.0);
    CHECK(a.max == 1.0);
    CHECK(a.count == 5);
    CHECK(a.at(0) == -1.0);
    CHECK(a.at(4) == 1.0);
    CHECK(a.at(2) == 0.0);
    CHECK(parse_axis("0.5:2.5e0:2").max == 2.5);
    for (const char* bad : {"", "1:2", "a:1:3", "0:1:x", "0:1:2:3", "0:1:-2", "0:1:2.5"})
        CHECK_THROWS_AS(parse_axis(bad), usage_error);
}

TEST_CASE("grid validation") {
    GridSpec ok{parse_axis("0:1:2"), parse_axis("0:1:2"), FunctionId::q};
    CHECK_NOTHROW(ok.validate());
    CHECK(ok.size() == 4);
    GridSpec one{parse_axis("0:1:1"), parse_axis("0:1:2"), FunctionId::q};
    CHECK_THROWS_AS(one.validate(), usage_error);
    GridSpec flipped{parse_axis("1:0:3"), parse_axis("0:1:2"), FunctionId::q};
    CHECK_THROWS_AS(flipped.validate(), usage_error);
}

TEST_CASE("row-major ordering and CSV output") {
    const GridSpec spec{parse_axis("0.1:0.2:2"), parse_axis("0:0.1:2"), FunctionId::q};
    const auto samples = evaluate_grid(spec, 2);
    REQUIRE(samples.size() == 4);
    CHECK(samples[0].z == Complex(0.1, 0.0));
    CHECK(samples[1].z == Complex(0.2, 0.0));
    CHECK(samples[2].z == Complex(0.1, 0.1));
    CHECK(samples[3].z == Complex(0.2, 0.1));
    for (const auto& s : samples) {
        REQUIRE(s.kind == SampleKind::value);
        CHECK(std::abs(s.value - q_global(s.z).value()) == 0.0);
    }
    std::ostringstream csv;
    write_csv(csv, samples);
    const auto lines = lines_of(csv.str());
    REQUIRE(lines.size() == 5);
    CHECK(lines[0] == "re,im,val_re,val_im");
    CHECK(lines[1].rfind("0.10000000000000001,0,", 0) == 0);
}

TEST_CASE("poles and undefined points") {
    const GridSpec spec{parse_axis("-0.5:0.5:3"), parse_axis("-0.5:0.5:3"), FunctionId::wp};
    const auto samples = evaluate_grid(spec);
    CHECK(samples[4].z == Complex{});
    CHECK(samples[4].kind == SampleKind::infinity);
    std::ostringstream csv;
    write_csv(csv, samples);
    CHECK(lines_of(csv.str())[5] == "0,0,inf,inf");

    // Outside the band s is not evaluated.
    const GridSpec wide{parse_axis("0:1:2"), parse_axis("0:2:2"), FunctionId::s};
    const auto out = evaluate_grid(wide);
    CHECK(out[0].kind == SampleKind::value);
    CHECK(out[2].kind == SampleKind::undefined);
    std::ostringstream csv2;
    write_csv(csv2, out);
    CHECK(lines_of(csv2.str())[3] == "0,2,nan,nan");
}

TEST_CASE("thread count does not change the output") {
    const GridSpec spec{parse_axis("-3:3:9"), parse_axis("-0.5:0.5:5"), FunctionId::t};
    std::ostringstream a;
    std::ostringstream b;
    write_csv(a, evaluate_grid(spec, 1));
    write_csv(b, evaluate_grid(spec, 4));
    CHECK(a.str() == b.str());
}

TEST_CASE("domain colouring and PPM") {
    CHECK(domain_color({0.0, SampleKind::infinity, 0.0}) == std::array<std::uint8_t, 3>{255, 255, 255});
    CHECK(domain_color({0.0, SampleKind::undefined, 0.0}) == std::array<std::uint8_t, 3>{128, 128, 128});
    CHECK(domain_color({0.0, SampleKind::value, 0.0}) == std::array<std::uint8_t, 3>{0, 0, 0});
    const auto red = domain_color({0.0, SampleKind::value, 1.0});
    CHECK(red[0] > red[1]);
    CHECK(red[1] == red[2]);

    const GridSpec spec{parse_axis("-1:1:4"), parse_axis("-0.5:0.5:3"), FunctionId::q};
    const auto samples = evaluate_grid(spec);
    std::ostringstream img;
    write_ppm(img, spec, samples);
    const std::string bytes = img.str();
    const std::string header = "P6\n4 3\n255\n";
    REQUIRE(bytes.rfind(header, 0) == 0);
    CHECK(bytes.size() == header.size() + 4 * 3 * 3);
    // Top-left pixel is the first sample of the last (largest Im) row.
    const auto expect = domain_color(samples[8]);
    CHECK(static_cast<std::uint8_t>(bytes[header.size()]) == expect[0]);
}
