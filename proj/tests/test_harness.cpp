#include "qecstab/codes.hpp"
#include "qecstab/harness.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>

using namespace qecstab;

TEST_CASE("wilson interval basics") {
    double lo = 0, hi = 0;
    wilson_interval(0, 1000, lo, hi);
    CHECK(lo == 0.0);
    CHECK(hi > 0.0);
    CHECK(hi < 0.01);

    wilson_interval(28, 1000, lo, hi);
    CHECK(lo < 0.028);
    CHECK(hi > 0.028);
    CHECK(lo > 0.0);

    wilson_interval(1000, 1000, lo, hi);
    CHECK(hi == 1.0);
    CHECK(lo < 1.0);
}

TEST_CASE("identity channel produces zero failures") {
    const auto st = codes::steane();
    const auto ch = depolarizing(0.0);
    const MlCosetDecoder dec(st, depolarizing(0.01)); // decoder prior need not match
    const auto rec = run_point(st, ch, dec, 2000, 1, 2, 0.0);
    CHECK(rec.failures == 0);
    CHECK(rec.nonconverged == 0);
    CHECK(rec.ler == 0.0);
    CHECK(rec.ci_lo == 0.0);
}

TEST_CASE("run_point is reproducible and independent of the worker count") {
    const auto bf = codes::bit_flip_code();
    const auto ch = bit_flip(0.1);
    const MlCosetDecoder dec(bf, ch);
    const auto a = run_point(bf, ch, dec, 20000, 7, 1, 0.1);
    const auto b = run_point(bf, ch, dec, 20000, 7, 1, 0.1);
    const auto c = run_point(bf, ch, dec, 20000, 7, 3, 0.1);
    const auto d = run_point(bf, ch, dec, 20000, 7, 8, 0.1);
    CHECK(a.failures == b.failures);
    CHECK(a.failures == c.failures);
    CHECK(a.failures == d.failures);
    CHECK(a.nonconverged == d.nonconverged);
}

TEST_CASE("3-qubit bit-flip benchmark matches the closed form within 3 sigma") {
    const auto bf = codes::bit_flip_code();
    const double eps = 0.1;
    const auto ch = bit_flip(eps);
    const MlCosetDecoder dec(bf, ch);
    const std::uint64_t trials = 100000;
    const auto rec = run_point(bf, ch, dec, trials, 2024, 2, eps);
    const double p = 3 * eps * eps * (1 - eps) + eps * eps * eps;
    const double sigma = std::sqrt(p * (1 - p) / static_cast<double>(trials));
    CHECK(std::abs(rec.ler - p) < 3 * sigma);
    CHECK(rec.failures <= rec.trials);
}

TEST_CASE("wilson coverage: >= 90 of 100 seeds contain the analytic rate") {
    const auto bf = codes::bit_flip_code();
    const double eps = 0.1;
    const auto ch = bit_flip(eps);
    const MlCosetDecoder dec(bf, ch);
    const double p = 3 * eps * eps * (1 - eps) + eps * eps * eps;
    int covered = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto rec = run_point(bf, ch, dec, 10000, seed, 2, eps);
        if (rec.ci_lo <= p && p <= rec.ci_hi)
            ++covered;
    }
    CHECK(covered >= 90);
}

TEST_CASE("tallies reconcile: nonconverged trials are a subset of the failures") {
    // BP on surface(3) at strong noise produces genuine non-convergences.
    const auto s3 = codes::surface(3);
    const auto ch = depolarizing(0.15);
    const CssBpDecoder dec(s3, ch, {});
    const auto rec = run_point(s3, ch, dec, 4000, 5, 2, 0.15);
    CHECK(rec.failures <= rec.trials);
    CHECK(rec.nonconverged <= rec.failures);
    CHECK(rec.nonconverged > 0);
    CHECK(rec.ci_lo <= rec.ler);
    CHECK(rec.ler <= rec.ci_hi);
}

TEST_CASE("Steane under depolarizing(0.01) with ML coset stays below 1e-2") {
    const auto st = codes::steane();
    const auto ch = depolarizing(0.01);
    const MlCosetDecoder dec(st, ch);
    const auto rec = run_point(st, ch, dec, 100000, 11, 2, 0.01);
    CHECK(rec.ler < 0.01);
    CHECK(rec.nonconverged == 0);
}

TEST_CASE("surface(3) BP sweep is monotone nondecreasing in eps (3 sigma)") {
    ExperimentConfig cfg;
    cfg.code_spec = "surface(3)";
    cfg.channel = "depolarizing";
    cfg.eps = {0.001, 0.01, 0.05};
    cfg.decoder = "bp";
    cfg.trials = 20000;
    cfg.seed = 12;
    cfg.workers = 2;
    const auto sweep = run_sweep(codes::surface(3), cfg);
    REQUIRE(sweep.points.size() == 3);
    for (std::size_t i = 0; i + 1 < sweep.points.size(); ++i) {
        const auto& a = sweep.points[i];
        const auto& b = sweep.points[i + 1];
        const double n = static_cast<double>(cfg.trials);
        const double var = a.ler * (1 - a.ler) / n + b.ler * (1 - b.ler) / n;
        CHECK(a.ler <= b.ler + 3 * std::sqrt(var));
    }
}

TEST_CASE("run_sweep: point per eps in order; empty list rejected") {
    ExperimentConfig cfg;
    cfg.code_spec = "bitflip";
    cfg.channel = "bitflip";
    cfg.eps = {0.05, 0.1};
    cfg.decoder = "mlcoset";
    cfg.trials = 5000;
    cfg.seed = 3;
    cfg.workers = 2;
    const auto code = codes::bit_flip_code();
    const auto sweep = run_sweep(code, cfg);
    REQUIRE(sweep.points.size() == 2);
    CHECK(sweep.points[0].eps == 0.05);
    CHECK(sweep.points[1].eps == 0.1);
    CHECK(sweep.points[0].failures < sweep.points[1].failures);

    cfg.eps.clear();
    CHECK_THROWS_AS(run_sweep(code, cfg), ValidationError);
}

TEST_CASE("a single-eps sweep coincides with run_point") {
    ExperimentConfig cfg;
    cfg.code_spec = "bitflip";
    cfg.channel = "bitflip";
    cfg.eps = {0.1};
    cfg.decoder = "mlcoset";
    cfg.trials = 8000;
    cfg.seed = 21;
    cfg.workers = 2;
    const auto code = codes::bit_flip_code();
    const auto sweep = run_sweep(code, cfg);
    const auto ch = bit_flip(0.1);
    const MlCosetDecoder dec(code, ch);
    const auto point = run_point(code, ch, dec, cfg.trials, cfg.seed, 1, 0.1);
    REQUIRE(sweep.points.size() == 1);
    CHECK(sweep.points[0].failures == point.failures);
    CHECK(sweep.points[0].nonconverged == point.nonconverged);
    CHECK(sweep.points[0].ler == point.ler);
}

TEST_CASE("csv schema and deterministic formatting") {
    SweepResult sweep;
    TrialRecord r;
    r.eps = 0.05;
    r.trials = 1000;
    r.failures = 12;
    r.nonconverged = 3;
    r.ler = 0.012;
    r.ci_lo = 0.0069;
    r.ci_hi = 0.0208;
    r.seconds = 1.23456;
    sweep.points.push_back(r);

    std::ostringstream out;
    write_csv(out, sweep);
    CHECK(out.str() == "eps,trials,failures,nonconverged,ler,ci_lo,ci_hi,seconds\n"
                       "0.05,1000,12,3,0.012,0.0069,0.0208,0\n");

    std::ostringstream out2;
    write_csv(out2, sweep, true);
    CHECK(out2.str().find("1.23456") != std::string::npos);
}

TEST_CASE("make_channel dispatch and config validation") {
    CHECK(make_channel("depolarizing", 0.3).p_x == doctest::Approx(0.1));
    CHECK(make_channel("bitflip", 0.2).p_x == doctest::Approx(0.2));
    CHECK(make_channel("dephasing", 0.2).p_z == doctest::Approx(0.2));
    CHECK_THROWS_AS(make_channel("amplitude", 0.1), ValidationError);

    const auto bf = codes::bit_flip_code();
    const auto ch = bit_flip(0.1);
    const MlCosetDecoder dec(bf, ch);
    CHECK_THROWS_AS(run_point(bf, ch, dec, 0, 1, 1, 0.1), ValidationError);
}
