#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "delpezzo/commands.hpp"

int main(int argc, char **argv) {
    using namespace dp;
    CLI::App app{"Finite group actions on del Pezzo manifolds: lattice obstructions, certificates and realizations"};
    app.require_subcommand(1);
    app.fallthrough();

    EngineConfig cfg = EngineConfig::defaults();
    std::string report_path;
    std::string format = "table";
    std::string catalog_dir = cfg.catalog_dir.string();
    std::string cert_dir = cfg.certificate_dir.string();
    app.add_option("--report", report_path, "write the structured report to this path");
    app.add_option("--format", format, "standard output format")->check(CLI::IsMember({"table", "structured"}));
    app.add_option("--catalog", catalog_dir, "catalog directory");
    app.add_option("--certificates", cert_dir, "certificate directory");
    app.add_option("--max-components", cfg.search.max_components, "cap on fixed-set components (0: Betti bound)");
    app.add_option("--max-complexity", cfg.search.max_complexity, "cap on genus / crosscaps (0: Betti bound)");
    app.add_option("--split-cap", cfg.search.split_cap, "window for two-surface budget splits");
    app.add_option("--threads", cfg.search.threads, "worker threads");

    int n = 2;
    auto *classify = app.add_subcommand("classify", "classify finite subgroups for n = 2 or 3");
    classify->add_option("n,--n", n, "2 or 3")->required();

    std::string spec, focus;
    std::vector<std::string> witnesses;
    auto *obstruct = app.add_subcommand("obstruct", "branch search for a group spec file");
    obstruct->add_option("spec", spec, "group spec file")->required()->check(CLI::ExistingFile);
    obstruct->add_option("--focus", focus, "generator name of the focus involution");
    obstruct->add_option("--witness", witnesses, "generator names of commuting witnesses");

    std::string which;
    auto *flags = app.add_subcommand("complex-flags", "biholomorphic feasibility of the designated order-2 class");
    flags->add_option("n,--n", which, "0..8 or star")->required();

    int cox_n = 2;
    auto *coxeter = app.add_subcommand("coxeter", "Coxeter data of O+(n,1)(Z) for n = 2, 3");
    coxeter->add_option("n,--n", cox_n, "2 or 3")->required();

    auto *catalog = app.add_subcommand("catalog", "realization catalog");
    catalog->require_subcommand(1);
    auto *cat_list = catalog->add_subcommand("list", "list entries");
    auto *cat_verify = catalog->add_subcommand("verify", "run every entry check");

    std::string matrix_file;
    auto *decompose = app.add_subcommand("decompose", "(t,c,r) and fixed-set profiles of an involution");
    decompose->add_option("matrix", matrix_file, "matrix file")->required()->check(CLI::ExistingFile);

    std::string cert_file;
    auto *certificate = app.add_subcommand("certificate", "replay a certificate file");
    certificate->add_option("file", cert_file, "certificate file")->required()->check(CLI::ExistingFile);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : EXIT_REJECTED_INPUT;
    }
    cfg.catalog_dir = catalog_dir;
    cfg.certificate_dir = cert_dir;

    CommandResult res;
    try {
        if (*classify) res = cmd_classify(n, cfg);
        else if (*obstruct) res = cmd_obstruct(spec, focus, witnesses, cfg);
        else if (*flags) res = cmd_complex_flags(which, cfg);
        else if (*coxeter) res = cmd_coxeter(cox_n, cfg);
        else if (*cat_list) res = cmd_catalog_list(cfg);
        else if (*cat_verify) res = cmd_catalog_verify(cfg);
        else if (*decompose) res = cmd_decompose(matrix_file, cfg);
        else if (*certificate) res = cmd_certificate(cert_file, cfg);
    } catch (const InputError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_REJECTED_INPUT;
    }

    std::cout << (format == "structured" ? res.structured() : res.table);
    if (!report_path.empty()) {
        std::ofstream out(report_path);
        if (!out) {
            std::cerr << "error: cannot write " << report_path << "\n";
            return EXIT_REJECTED_INPUT;
        }
        out << res.structured();
    }
    return res.exit_code;
}
