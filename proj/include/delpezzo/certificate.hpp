#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "delpezzo/local_model.hpp"
#include "delpezzo/obstruction.hpp"
#include "delpezzo/textdoc.hpp"

namespace dp {

// Certificates replay a case analysis for a lifted action of a finite group G on a
// rational surface. Every step is checked against lattice data; leaves close by a
// tangent-representation contradiction, a zero class, or an unsolvable norm equation.
class CertificateLibrary {
public:
    void add(TextDoc doc);
    void load_directory(const std::filesystem::path &dir);
    const TextDoc *find(const std::string &name) const;
    std::vector<std::string> names() const;

private:
    std::map<std::string, TextDoc> docs_;
};

struct CertificateResult {
    std::string name;
    std::string claim;
    std::string lattice;
    bool accepted = false;
    int rejected_line = 0;
    std::string rejection;
    VerdictStatus status = VerdictStatus::Undetermined;
    std::optional<MatrixGroup> group;
    int steps = 0;
    int closed_leaves = 0;
    int concluded_leaves = 0;
    int open_leaves = 0;
    std::vector<std::string> trace;
    // lemma output: restriction of the fixed-set profile of one element
    std::optional<Isometry> concluded_element;
    std::vector<FixedSetProfile> concluded_profiles;
};

CertificateResult check_certificate(const TextDoc &doc, const CertificateLibrary &library,
                                    const SearchOptions &opt = {});

} // namespace dp
