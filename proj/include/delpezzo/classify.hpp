#pragma once

#include <string>
#include <vector>

#include "delpezzo/catalog.hpp"
#include "delpezzo/certificate.hpp"
#include "delpezzo/obstruction.hpp"

namespace dp {

// Names elements of a finite group as shortest words in named generators,
// with "-" for products with -I.
class ElementNamer {
public:
    ElementNamer(const MatrixGroup &group, std::vector<std::pair<std::string, Isometry>> generators);
    std::string name(const Isometry &g) const;
    // shortest-word order, used to pick canonical generating sets
    int rank(const Isometry &g) const;
    // a smallest generating set, earliest names first
    std::vector<Isometry> generating_set(const MatrixGroup &sub) const;
    std::string label(const MatrixGroup &sub) const;

private:
    std::vector<Isometry> order_;
    std::vector<std::string> names_;
};

struct ClassifyContext {
    const Catalog &catalog;
    const CertificateLibrary &certificates;
    SearchOptions options;
};

// Obstructed as soon as one involution, taken as focus with default witnesses, closes every branch.
// namer may be null; foci are then taken in matrix order.
Verdict search_all_foci(const MatrixGroup &g, const ElementNamer *namer, const SearchOptions &opt);

// n = 2: g must lie in G1 or G2; n = 3: g must lie in one of the maximal candidates
Verdict classify_finite_subgroup(const MatrixGroup &g, int n, const ClassifyContext &ctx);

struct ClassifiedGroup {
    std::string ambient;  // "G1", "G2", or the omitted simple root for n = 3
    std::string label;
    int order = 0;
    std::string fingerprint;
    std::vector<std::string> elements;
    MatrixGroup group;
    Verdict verdict;
};

struct Classification {
    int n = 0;
    std::vector<ClassifiedGroup> rows;
};

Classification classify_all(int n, const ClassifyContext &ctx);

// G1 = <A, B, -I> and G2 = <Phi, Psi, -I> on M2
MatrixGroup group_G1();
MatrixGroup group_G2();
ElementNamer namer_G1();
ElementNamer namer_G2();

} // namespace dp
