#pragma once

#include <optional>
#include <string>
#include <vector>

#include "delpezzo/isometry.hpp"

namespace dp {

// label 0 encodes m = infinity
constexpr int COXETER_INFINITY = 0;

struct CoxeterSystem {
    int n = 2;
    std::vector<IVec> simple_roots;
    std::vector<std::string> root_names;
    std::vector<std::vector<int>> labels;
    const LorentzianLattice &lattice() const { return LorentzianLattice::M(n); }
    Isometry reflection(int i) const { return Isometry::reflection(lattice(), simple_roots[i]); }
};

CoxeterSystem coxeter_system(int n);
std::string label_string(int m);

std::vector<std::vector<int>> pair_order_table(const CoxeterSystem &c);

struct GramCheck {
    bool pass = true;
    std::vector<std::string> lines;
    std::vector<std::string> failures;
};
GramCheck gram_consistency_check(const CoxeterSystem &c);

struct Parabolic {
    int omitted = -1;
    std::string omitted_name;
    MatrixGroup group;
    bool finite = false;
    std::optional<Isometry> infinite_witness;
    std::string witness_word;
    std::string witness_certificate;
};
Parabolic parabolic_subgroup(const CoxeterSystem &c, int omit);
Parabolic parabolic_subgroup(const CoxeterSystem &c, const std::string &omit_root);

struct Candidate {
    std::string omitted_name;
    MatrixGroup group;
};
std::vector<Candidate> maximal_finite_candidates(const CoxeterSystem &c, bool include_minus_identity);

} // namespace dp
