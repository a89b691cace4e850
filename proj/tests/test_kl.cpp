#include "qecstab/codes.hpp"
#include "qecstab/kl.hpp"

#include <doctest.h>

using namespace qecstab;

namespace {

std::vector<PauliOperator> weight_le_1(std::size_t n) {
    std::vector<PauliOperator> errs{PauliOperator::identity(n)};
    for (std::size_t q = 0; q < n; ++q)
        for (char L : {'X', 'Y', 'Z'})
            errs.push_back(PauliOperator::single(n, q, L));
    return errs;
}

} // namespace

TEST_CASE("bit-flip code passes with {I, X1, X2, X3} and fails once Z1 joins") {
    const auto bf = codes::bit_flip_code();
    std::vector<PauliOperator> errs{PauliOperator::identity(3)};
    for (std::size_t q = 0; q < 3; ++q)
        errs.push_back(PauliOperator::single(3, q, 'X'));

    const auto ok = kl_check(bf, errs);
    CHECK(ok.pass);
    CHECK(ok.max_deviation <= 1e-9);
    // c must be Hermitian on pass
    for (std::size_t i = 0; i < ok.m; ++i)
        for (std::size_t j = 0; j < ok.m; ++j)
            CHECK(std::abs(ok.c[i * ok.m + j] - std::conj(ok.c[j * ok.m + i])) < 1e-9);

    errs.push_back(PauliOperator::single(3, 0, 'Z')); // an undetectable logical phase
    CHECK_FALSE(kl_check(bf, errs).pass);
}

TEST_CASE("Steane passes with every error of weight <= 1") {
    const auto res = kl_check(codes::steane(), weight_le_1(7));
    CHECK(res.pass);
    CHECK(res.m == 22);
    CHECK(res.max_deviation <= 1e-9);
}

TEST_CASE("phase-flip code corrects single Z errors but not X") {
    const auto pf = codes::phase_flip_code();
    std::vector<PauliOperator> zs{PauliOperator::identity(3)};
    for (std::size_t q = 0; q < 3; ++q)
        zs.push_back(PauliOperator::single(3, q, 'Z'));
    CHECK(kl_check(pf, zs).pass);

    std::vector<PauliOperator> xs{PauliOperator::identity(3),
                                  PauliOperator::single(3, 0, 'X')};
    CHECK_FALSE(kl_check(pf, xs).pass);
}

TEST_CASE("size guard and dimension checks") {
    const auto t3 = codes::toric(3); // n = 18
    CHECK_THROWS_AS(kl_check(t3, {PauliOperator::identity(18)}), ResourceLimitError);
    CHECK_THROWS_AS(kl_check(codes::steane(), {PauliOperator::identity(6)}), ValidationError);
}

TEST_CASE("surface(2) passes its weight-0 set and detects the projector") {
    // d = 2 corrects t = 0 errors; the identity-only set is the trivial pass
    const auto s2 = codes::surface(2);
    const auto res = kl_check(s2, {PauliOperator::identity(5)});
    CHECK(res.pass);
}
