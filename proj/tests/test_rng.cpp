#include "qecstab/rng.hpp"

#include <doctest.h>

using namespace qecstab;

// Known-answer vectors for Philox4x32-10 from the Random123 distribution.
TEST_CASE("philox4x32-10 known-answer vectors") {
    {
        const auto out = Philox::block({0, 0}, {0, 0, 0, 0});
        CHECK(out[0] == 0x6627e8d5u);
        CHECK(out[1] == 0xe169c58du);
        CHECK(out[2] == 0xbc57ac4cu);
        CHECK(out[3] == 0x9b00dbd8u);
    }
    {
        const auto out = Philox::block({0xffffffffu, 0xffffffffu},
                                       {0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu});
        CHECK(out[0] == 0x408f276du);
        CHECK(out[1] == 0x41c83b0eu);
        CHECK(out[2] == 0xa20bc7c6u);
        CHECK(out[3] == 0x6d5451fdu);
    }
    {
        const auto out = Philox::block({0xa4093822u, 0x299f31d0u},
                                       {0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u});
        CHECK(out[0] == 0xd16cfe09u);
        CHECK(out[1] == 0x94fdccebu);
        CHECK(out[2] == 0x5001e420u);
        CHECK(out[3] == 0x24126ea1u);
    }
}

// Frozen stream layout vectors (key = seed, counter = [stream, block]).
TEST_CASE("stream layout produces the expected word sequence") {
    Philox a(7, 0);
    CHECK(a.next_u32() == 0xf4607a2du);
    CHECK(a.next_u32() == 0xc009f9dcu);
    CHECK(a.next_u32() == 0x1d3aba42u);
    CHECK(a.next_u32() == 0x15edac82u);
    // next block (counter word 2 increments)
    CHECK(a.next_u32() == 0x7ebaed90u);
    CHECK(a.next_u32() == 0x2bf6d9afu);
    CHECK(a.next_u32() == 0x4fac3b2bu);
    CHECK(a.next_u32() == 0x39acec6cu);

    Philox b(7, 1);
    CHECK(b.next_u32() == 0x682e8e9bu);

    Philox c(0xdeadbeefcafef00dull, 12345);
    CHECK(c.next_u32() == 0x5242af41u);
}

TEST_CASE("doubles are uniform in [0,1) and reproducible") {
    Philox a(7, 0);
    CHECK(a.next_double() == doctest::Approx(0.7501522221031126).epsilon(1e-15));
    CHECK(a.next_double() == doctest::Approx(0.0856578653012815).epsilon(1e-15));

    Philox b(7, 0), c(7, 0);
    for (int i = 0; i < 1000; ++i) {
        const double x = b.next_double();
        CHECK(x == c.next_double());
        CHECK(x >= 0.0);
        CHECK(x < 1.0);
    }
    // different streams decorrelate
    Philox d(7, 2);
    bool differs = false;
    Philox e(7, 3);
    for (int i = 0; i < 8; ++i)
        differs |= d.next_u32() != e.next_u32();
    CHECK(differs);
}
