#pragma once

#include "qecstab/decode.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace qecstab {

// One Monte Carlo point: logical error rate of (code, channel, decoder) at a
// fixed noise strength.
struct TrialRecord {
    double eps = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t failures = 0;     // logical errors, incl. non-converged trials
    std::uint64_t nonconverged = 0; // decoder failed to reproduce the syndrome
    double ler = 0.0;
    double ci_lo = 0.0, ci_hi = 0.0; // Wilson 95% interval
    double seconds = 0.0;            // wall time (reporting only, never in the tallies)
};

struct SweepResult {
    std::vector<TrialRecord> points;
};

struct ExperimentConfig {
    std::string code_spec;
    std::string channel = "depolarizing"; // depolarizing | bitflip | dephasing
    std::vector<double> eps;
    std::string decoder = "mlcoset"; // mlcoset | mlerror | bp | minsum
    BpOptions bp;
    std::uint64_t trials = 10000;
    std::uint64_t seed = 0;
    int workers = 1;
};

// Wilson score interval at 95% confidence.
void wilson_interval(std::uint64_t failures, std::uint64_t trials, double& lo, double& hi);

PauliChannel make_channel(const std::string& name, double eps);

// Runs `trials` independent trials. Trial t draws its errors from the
// dedicated counter stream (seed, stream_base + t), so the result is
// bit-identical for any worker count. eps is recorded in the output only.
TrialRecord run_point(const StabilizerCode& code, const PauliChannel& ch, const Decoder& dec,
                      std::uint64_t trials, std::uint64_t seed, int workers, double eps,
                      std::uint64_t stream_base = 0);

// One run_point per eps value, in input order; point i uses stream base
// i << 48 so points never share random streams.
SweepResult run_sweep(const StabilizerCode& code, const ExperimentConfig& cfg);

// Fixed schema: eps,trials,failures,nonconverged,ler,ci_lo,ci_hi,seconds with
// 10 significant digits. seconds is written as 0 unless include_timing is set,
// keeping the default output byte-reproducible.
void write_csv(std::ostream& out, const SweepResult& sweep, bool include_timing = false);

} // namespace qecstab
