#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "delpezzo/classify.hpp"

namespace dp {

constexpr const char *ENGINE_VERSION = "delpezzo-engine 1.0.0";

enum ExitCode { EXIT_COMPLETED = 0, EXIT_REJECTED_INPUT = 2, EXIT_UNDETERMINED = 3 };

struct EngineConfig {
    SearchOptions search;
    std::filesystem::path catalog_dir;
    std::filesystem::path certificate_dir;
    static EngineConfig defaults();
};

struct CommandResult {
    nlohmann::ordered_json report;
    std::string table;
    int exit_code = EXIT_COMPLETED;
    std::string structured() const { return report.dump(2) + "\n"; }
};

// Plain-text matrix input: a header line "basis <lattice> [<basis id>]" followed by integer rows.
struct MatrixInput {
    const LorentzianLattice *lattice = nullptr;
    std::string basis = "std";
    IMat matrix;
};
MatrixInput parse_matrix_input(const std::string &text, const std::string &source);

// Group spec: "lattice", "basis", then "generator NAME" blocks of rows; optional "focus" and "witness" lines.
struct GroupSpec {
    const LorentzianLattice *lattice = nullptr;
    std::string basis = "std";
    std::vector<std::pair<std::string, Isometry>> generators;
    std::string focus;
    std::vector<std::string> witnesses;
};
GroupSpec parse_group_spec(const std::string &text, const std::string &source);

CommandResult cmd_classify(int n, const EngineConfig &cfg);
CommandResult cmd_obstruct(const std::filesystem::path &spec, const std::string &focus,
                           const std::vector<std::string> &witnesses, const EngineConfig &cfg);
// which: "0".."8" or "star"
CommandResult cmd_complex_flags(const std::string &which, const EngineConfig &cfg);
CommandResult cmd_coxeter(int n, const EngineConfig &cfg);
CommandResult cmd_catalog_list(const EngineConfig &cfg);
CommandResult cmd_catalog_verify(const EngineConfig &cfg);
CommandResult cmd_decompose(const std::filesystem::path &matrix_file, const EngineConfig &cfg);
CommandResult cmd_certificate(const std::filesystem::path &file, const EngineConfig &cfg);

// designated order-2 class of the complex-flags command
Isometry designated_class(const std::string &which);

} // namespace dp
