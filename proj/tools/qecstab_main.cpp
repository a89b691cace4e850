#include "qecstab/codespec.hpp"
#include "qecstab/codes.hpp"
#include "qecstab/harness.hpp"
#include "qecstab/kl.hpp"
#include "qecstab/qchk.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>

namespace {

using namespace qecstab;

void cmd_construct(const std::string& spec, const std::string& out_path) {
    const StabilizerCode code = build_code(spec);
    if (out_path == "-") {
        write_qchk(std::cout, code.check());
    } else {
        write_qchk_file(out_path, code.check());
        std::cerr << "wrote " << out_path << " (n=" << code.n() << ", r=" << code.r() << ")\n";
    }
}

void cmd_params(const std::string& spec) {
    const StabilizerCode code = build_code(spec);
    std::cout << "n = " << code.n() << "\n"
              << "k = " << code.k() << "\n"
              << "r = " << code.r() << " (rank " << code.rank() << ")\n"
              << "css = " << (code.css_split() ? "yes" : "no") << "\n";
    std::map<std::size_t, std::size_t> hist;
    for (std::size_t i = 0; i < code.r(); ++i)
        ++hist[code.generator(i).weight()];
    std::cout << "generator weights:";
    for (const auto& [w, count] : hist)
        std::cout << " " << w << "x" << count;
    std::cout << "\n";
}

void cmd_logicals(const std::string& spec) {
    const StabilizerCode code = build_code(spec);
    const auto& pairs = code.logical_pairs();
    for (std::size_t j = 0; j < pairs.size(); ++j) {
        std::cout << "X[" << (j + 1) << "]: " << pairs[j].first.to_string() << "\n";
        std::cout << "Z[" << (j + 1) << "]: " << pairs[j].second.to_string() << "\n";
    }
    if (pairs.empty())
        std::cout << "k = 0: no logical operators\n";
}

void cmd_distance(const std::string& spec, std::size_t max_weight, std::size_t budget,
                  int workers) {
    const StabilizerCode code = build_code(spec);
    DistanceOptions opts;
    opts.budget = budget;
    opts.workers = workers;
    const auto res = code.min_distance(max_weight, opts);
    if (res)
        std::cout << "d = " << res->distance << " (witness: " << res->witness.to_string()
                  << ")\n";
    else
        std::cout << "no logical operator of weight <= " << max_weight << "\n";
}

void cmd_klcheck(const std::string& spec, std::size_t max_weight) {
    const StabilizerCode code = build_code(spec);
    std::vector<PauliOperator> errors{PauliOperator::identity(code.n())};
    const char letters[3] = {'X', 'Y', 'Z'};
    if (max_weight >= 1)
        for (std::size_t q = 0; q < code.n(); ++q)
            for (char L : letters)
                errors.push_back(PauliOperator::single(code.n(), q, L));
    if (max_weight >= 2) {
        for (std::size_t a = 0; a < code.n(); ++a)
            for (std::size_t b = a + 1; b < code.n(); ++b)
                for (char La : letters)
                    for (char Lb : letters)
                        errors.push_back(multiply(PauliOperator::single(code.n(), a, La),
                                                  PauliOperator::single(code.n(), b, Lb)));
    }
    if (max_weight >= 3)
        throw ValidationError("klcheck: error sets above weight 2 are not supported");
    const KlResult res = kl_check(code, errors);
    std::cout << (res.pass ? "PASS" : "FAIL") << " (errors=" << errors.size()
              << ", max deviation=" << res.max_deviation << ")\n";
    if (!res.pass)
        std::exit(3); // check ran fine, the verdict is negative
}

void cmd_simulate(const ExperimentConfig& cfg, const std::string& out_path, bool timing) {
    const StabilizerCode code = build_code(cfg.code_spec);
    const SweepResult sweep = run_sweep(code, cfg);
    if (out_path == "-") {
        write_csv(std::cout, sweep, timing);
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out)
            throw ValidationError("cannot open '" + out_path + "' for writing");
        write_csv(out, sweep, timing);
    }
    for (const auto& p : sweep.points)
        std::cerr << "eps=" << p.eps << " failures=" << p.failures << "/" << p.trials
                  << " ler=" << p.ler << " (" << p.seconds << " s)\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"stabilizer code toolkit: construction, logical structure, decoding, "
                 "Monte Carlo logical error rates"};
    app.require_subcommand(1);

    std::string spec, out_path = "-";
    std::size_t max_weight = 3, budget = 200'000'000;
    int workers = 1;

    auto* construct = app.add_subcommand("construct", "build a code and write QCHK v1");
    construct->add_option("--code", spec, "code constructor expression")->required();
    construct->add_option("-o,--out", out_path, "output path ('-' for stdout)");

    auto* params = app.add_subcommand("params", "print n, k and generator weights");
    params->add_option("--code", spec)->required();

    auto* logicals = app.add_subcommand("logicals", "print paired logical operators");
    logicals->add_option("--code", spec)->required();

    auto* distance = app.add_subcommand("distance", "brute-force minimum distance");
    distance->add_option("--code", spec)->required();
    distance->add_option("--max-weight", max_weight, "search weights 1..w");
    distance->add_option("--budget", budget, "candidate evaluation budget");
    distance->add_option("--workers", workers, "parallel workers");

    std::size_t kl_weight = 1;
    auto* klcheck = app.add_subcommand("klcheck", "dense Knill-Laflamme oracle");
    klcheck->add_option("--code", spec)->required();
    klcheck->add_option("--max-weight", kl_weight, "include all errors up to this weight");

    ExperimentConfig cfg;
    bool timing = false;
    auto* simulate = app.add_subcommand("simulate", "Monte Carlo logical error rate sweep");
    simulate->add_option("--code", cfg.code_spec, "code constructor expression")->required();
    simulate->add_option("--channel", cfg.channel, "depolarizing | bitflip | dephasing");
    simulate->add_option("--eps", cfg.eps, "noise parameter list")->required()->expected(-1);
    simulate->add_option("--decoder", cfg.decoder, "mlcoset | mlerror | bp | minsum");
    simulate->add_option("--trials", cfg.trials, "trials per point");
    simulate->add_option("--seed", cfg.seed, "master seed");
    simulate->add_option("--workers", cfg.workers, "parallel workers");
    simulate->add_option("--max-iter", cfg.bp.max_iter, "BP iteration cap");
    simulate->add_option("--norm", cfg.bp.min_sum_norm, "min-sum normalization factor");
    simulate->add_option("-o,--out", out_path, "CSV path ('-' for stdout)");
    simulate->add_flag("--timing", timing, "record wall time in the CSV (non-reproducible)");

    try {
        app.parse(argc, argv);
        if (construct->parsed())
            cmd_construct(spec, out_path);
        else if (params->parsed())
            cmd_params(spec);
        else if (logicals->parsed())
            cmd_logicals(spec);
        else if (distance->parsed())
            cmd_distance(spec, max_weight, budget, workers);
        else if (klcheck->parsed())
            cmd_klcheck(spec, kl_weight);
        else if (simulate->parsed())
            cmd_simulate(cfg, out_path, timing);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const ResourceLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
