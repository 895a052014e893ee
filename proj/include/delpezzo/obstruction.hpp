#pragma once

#include <optional>
#include <string>
#include <vector>

#include "delpezzo/diophantine.hpp"
#include "delpezzo/equivariant.hpp"
#include "delpezzo/signature_defect.hpp"

namespace dp {

enum class VerdictStatus { Obstructed, ConsistentConstraints, RealizedByCatalog, Undetermined };
std::string status_name(VerdictStatus s);

struct Verdict {
    VerdictStatus status = VerdictStatus::Undetermined;
    std::vector<std::string> trace;
    std::string catalog_entry;
    std::optional<LatticeElement> witness;
    std::string note;
};

struct LiftHypothesis {
    MatrixGroup group;
    Isometry focus;
    std::vector<Isometry> commuting_witnesses;
    std::string focus_name;
    std::vector<std::string> witness_names;
};

// witnesses default to a generating set of the centralizer of focus, focus itself omitted
LiftHypothesis make_hypothesis(const MatrixGroup &group, const Isometry &focus);
void validate_hypothesis(const LiftHypothesis &h);

constexpr int SPLIT_CAP = 16;

struct SearchOptions {
    int max_components = 0;  // 0: widen to the Betti bound
    int max_complexity = 0;
    int split_cap = SPLIT_CAP;
    int threads = 1;
};

// profiles for an involution under the options; `truncated` is set when caps hide admissible profiles
std::vector<FixedSetProfile> admissible_profiles(const InvolutionDecomposition &d, const SearchOptions &opt,
                                                 bool *truncated = nullptr);

Verdict branch_search(const LiftHypothesis &h, const SearchOptions &opt = {});

struct SurfaceEquation {
    FixedSetProfile profile;
    Sublattice lattice;
    IMat gram;
    Integer target;
    bool nonzero = false;
    SolvabilityVerdict verdict;
    std::string text() const;
};

// Q([S],[S]) = budget for the single surface S of `profile`, treated as orientable, [S] in Fix(m)
SurfaceEquation single_surface_equation(const Isometry &m, const SignatureBudget &b, const FixedSetProfile &profile);

struct ProfileAssessment {
    FixedSetProfile profile;
    bool pruned = false;
    bool closed = false;
    bool unknown = false;
    std::optional<SurfaceEquation> equation;
    std::string note;
};

struct Order2Report {
    InvolutionDecomposition decomposition;
    SignatureBudget budget;
    std::string fixed_lattice;
    std::vector<ProfileAssessment> profiles;
    bool truncated = false;
    bool biholomorphic_feasible = true;
    std::string biholomorphic_reason;
    std::vector<std::string> closing_equations;
    std::optional<SurfaceEquation> orientable_variant;  // evaluated when parity excludes orientable surfaces
    bool anti_biholomorphic_feasible = true;
    std::string anti_biholomorphic_reason;
};

Order2Report order2_profile_report(const LorentzianLattice &L, const Isometry &m, const SearchOptions &opt = {});

} // namespace dp
