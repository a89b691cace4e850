#include "qecstab/codespec.hpp"
#include "qecstab/qchk.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>

using namespace qecstab;

TEST_CASE("named codes and parameterized families") {
    CHECK(build_code("steane").n() == 7);
    CHECK(build_code("shor").n() == 9);
    CHECK(build_code("bitflip").n() == 3);
    CHECK(build_code("phaseflip").k() == 1);
    CHECK(build_code("surface(3)").n() == 13);
    CHECK(build_code("toric(3)").k() == 2);
    CHECK(build_code("css(hamming74, hamming74)").k() == 1);
    CHECK(build_code("hgp(rep(3), rep(3))").n() == 13);
    CHECK(build_code("lp(3, [010], [110])").n() == 6);
    CHECK(build_code("concat(phaseflip, bitflip)").n() == 9);
    CHECK(build_code(" surface( 5 ) ").n() == 41);
}

TEST_CASE("qchk loading through the spec grammar") {
    const std::string path = "codespec_test_tmp.qchk";
    {
        std::ofstream out(path);
        out << "QCHK v1 n=2 r=1\n0011\n";
    }
    CHECK(build_code("qchk(" + path + ")").n() == 2);
    CHECK(build_code(path).n() == 2); // bare path with a '.'
    std::remove(path.c_str());
}

TEST_CASE("malformed specs are rejected") {
    CHECK_THROWS_AS(build_code("nosuchcode"), ValidationError);
    CHECK_THROWS_AS(build_code("surface"), ValidationError);
    CHECK_THROWS_AS(build_code("surface(a)"), ValidationError);
    CHECK_THROWS_AS(build_code("surface(3"), ValidationError);
    CHECK_THROWS_AS(build_code("css(rep(3))"), ValidationError);
    CHECK_THROWS_AS(build_code("lp(3, 010, 110)"), ValidationError);
    CHECK_THROWS_AS(build_code("hgp(nosuch, rep(3))"), ValidationError);
}
