#include "qecstab/harness.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <thread>

namespace qecstab {

void wilson_interval(std::uint64_t failures, std::uint64_t trials, double& lo, double& hi) {
    if (trials == 0) {
        lo = 0.0;
        hi = 1.0;
        return;
    }
    const double z = 1.959963984540054; // 97.5% normal quantile
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(failures) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (p + z2 / (2.0 * n)) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
    lo = failures == 0 ? 0.0 : std::max(0.0, center - half);
    hi = failures == trials ? 1.0 : std::min(1.0, center + half);
}

PauliChannel make_channel(const std::string& name, double eps) {
    if (name == "depolarizing")
        return depolarizing(eps);
    if (name == "bitflip")
        return bit_flip(eps);
    if (name == "dephasing")
        return dephasing(eps);
    throw ValidationError("unknown channel '" + name +
                          "' (expected depolarizing, bitflip or dephasing)");
}

TrialRecord run_point(const StabilizerCode& code, const PauliChannel& ch, const Decoder& dec,
                      std::uint64_t trials, std::uint64_t seed, int workers, double eps,
                      std::uint64_t stream_base) {
    if (trials < 1)
        throw ValidationError("run_point: trials must be at least 1");
    const auto t0 = std::chrono::steady_clock::now();
    const int nw = std::max(1, workers);
    const std::size_t n = code.n();

    struct Tally {
        std::uint64_t failures = 0, nonconverged = 0;
    };
    std::vector<Tally> tallies(static_cast<std::size_t>(nw));

    auto run_range = [&](std::uint64_t lo, std::uint64_t hi, Tally& t) {
        for (std::uint64_t trial = lo; trial < hi; ++trial) {
            Philox rng(seed, stream_base + trial);
            const PauliOperator e = sample_error(ch, n, rng);
            const ClassifiedTrial out = decode_and_classify(code, e, dec);
            if (out.outcome == TrialOutcome::LogicalError)
                ++t.failures;
            if (!out.converged)
                ++t.nonconverged;
        }
    };

    if (nw == 1) {
        run_range(0, trials, tallies[0]);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(nw));
        for (int w = 0; w < nw; ++w) {
            const std::uint64_t lo = trials * static_cast<std::uint64_t>(w) /
                                     static_cast<std::uint64_t>(nw);
            const std::uint64_t hi = trials * static_cast<std::uint64_t>(w + 1) /
                                     static_cast<std::uint64_t>(nw);
            pool.emplace_back(run_range, lo, hi, std::ref(tallies[static_cast<std::size_t>(w)]));
        }
        for (auto& th : pool)
            th.join();
    }

    TrialRecord rec;
    rec.eps = eps;
    rec.trials = trials;
    for (const Tally& t : tallies) {
        rec.failures += t.failures;
        rec.nonconverged += t.nonconverged;
    }
    rec.ler = static_cast<double>(rec.failures) / static_cast<double>(trials);
    wilson_interval(rec.failures, trials, rec.ci_lo, rec.ci_hi);
    rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rec;
}

SweepResult run_sweep(const StabilizerCode& code, const ExperimentConfig& cfg) {
    if (cfg.eps.empty())
        throw ValidationError("run_sweep: eps list is empty");
    SweepResult result;
    for (std::size_t i = 0; i < cfg.eps.size(); ++i) {
        const PauliChannel ch = make_channel(cfg.channel, cfg.eps[i]);
        const auto dec = make_decoder(cfg.decoder, code, ch, cfg.bp);
        result.points.push_back(run_point(code, ch, *dec, cfg.trials, cfg.seed, cfg.workers,
                                          cfg.eps[i],
                                          static_cast<std::uint64_t>(i) << 48));
    }
    return result;
}

namespace {

std::string fmt10(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

} // namespace

void write_csv(std::ostream& out, const SweepResult& sweep, bool include_timing) {
    out << "eps,trials,failures,nonconverged,ler,ci_lo,ci_hi,seconds\n";
    for (const TrialRecord& r : sweep.points) {
        out << fmt10(r.eps) << ',' << r.trials << ',' << r.failures << ',' << r.nonconverged
            << ',' << fmt10(r.ler) << ',' << fmt10(r.ci_lo) << ',' << fmt10(r.ci_hi) << ','
            << fmt10(include_timing ? r.seconds : 0.0) << "\n";
    }
}

} // namespace qecstab
