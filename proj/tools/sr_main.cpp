// sr: classify phases and run the verification suites.
//
//   sr classify <files...> [--m 2] [--family] [--out dir]
//   sr verify --suite classify|decay|lemmas|all|<check> [--lambda-min-exp k]
//             [--lambda-max-exp k] [--seed s] [--tol t] [--out dir]

#include "sr/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    sr::cli::RunConfig cfg;
    CLI::App app{"Newton-polyhedron invariants, restriction exponents and desk-scale bound checks"};
    app.require_subcommand(1);
    std::string out = "out", m = "2";

    auto* classify = app.add_subcommand("classify", "one JSON report per polynomial file");
    classify->add_option("files", cfg.inputs, "files holding one polynomial each");
    classify->add_option("--m", m, "slope parameter m (rational)");
    classify->add_flag("--family", cfg.family, "also write the (A,B,n) family grid CSV");
    classify->add_option("--out", out, "output directory");
    classify->add_option("--threads", cfg.threads, "worker threads, 0 for all cores");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suites = "classify, decay, lemmas, all, or one check:";
    for (const auto& s : sr::cli::suite_members("all")) suites += " " + s;
    verify->add_option("--suite", cfg.suite, suites)->required();
    verify->add_option("--lambda-min-exp", cfg.lambda_min_exp, "smallest lambda = 2^k of the decay fits");
    verify->add_option("--lambda-max-exp", cfg.lambda_max_exp, "largest lambda = 2^k of the decay fits");
    verify->add_option("--seed", cfg.seed, "seed of the randomized checks");
    verify->add_option("--tol", cfg.tol, "relative quadrature tolerance");
    verify->add_option("--out", out, "output directory");
    verify->add_option("--threads", cfg.threads, "worker threads, 0 for all cores");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : sr::cli::input_error;
    }
    cfg.out_dir = out;
    try {
        cfg.m = sr::Rational::parse(m);
        if (*classify) return sr::cli::run_classify(cfg, std::cout);
        return sr::cli::run_verify(cfg, std::cout);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return sr::cli::input_error;
    }
}
