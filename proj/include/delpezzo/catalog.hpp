#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "delpezzo/equivariant.hpp"
#include "delpezzo/textdoc.hpp"

namespace dp {

enum class ConstructionKind { Section, Glue, EquivariantSum, BlowupAutomorphism };
std::string construction_name(ConstructionKind k);

struct ElementDef {
    std::string name;
    IMat matrix;  // canonical coordinates, validated by verify_entry
};

// local differential at a glue point, in a chart of the given orientation
struct TangentialRep {
    std::string piece;
    int orientation = 1;
    std::vector<std::string> elements;
    std::vector<IMat> matrices;  // 4x4 signed permutations
};

// X(H) = h_sign H, X(E_i) = signs[i] E_{perm[i]}
struct BlowupDescriptor {
    std::string element;
    int h_sign = 1;
    std::vector<int> perm;  // 1-based
    std::vector<int> signs;
};

struct PieceAction {
    std::string element;
    std::string summand;
    IMat matrix;  // in the summand's presentation basis
};

// Fixed set of an element on the whole manifold (piece empty) or on one glued piece.
// glue_component: kind of the component through the glue point; partial: only that component is known.
struct FixedClaim {
    std::string element;
    std::string piece;
    FixedSetProfile profile;
    std::optional<ComponentKind> glue_component;
    bool partial = false;
};

struct EntryFlag {
    std::string flag;
    std::string element;
};

struct RealizationEntry {
    std::string name;
    std::string source;
    std::string manifold;
    ConstructionKind kind = ConstructionKind::Section;
    std::string claimed_fingerprint;
    int claimed_order = 0;
    std::vector<ElementDef> elements;
    std::vector<std::string> generators;
    std::vector<std::pair<std::string, std::string>> relations;
    std::vector<std::pair<std::string, int>> element_orders;
    std::vector<std::pair<std::string, std::vector<IVec>>> summands;
    std::vector<PieceAction> pieces;
    std::vector<BlowupDescriptor> descriptors;
    std::vector<FixedClaim> fixed;
    std::vector<TangentialRep> tangents;
    std::optional<std::pair<std::string, std::vector<std::string>>> stabilizer;
    std::vector<EntryFlag> flags;
    std::string note;

    const LorentzianLattice &lattice() const { return lattice_by_name(manifold); }
    const ElementDef *element(const std::string &name) const;
    bool has_flag(const std::string &flag, const std::string &element = "") const;
};

RealizationEntry parse_entry(const TextDoc &doc);

struct CheckResult {
    std::string name;
    bool pass = true;
    std::string detail;
};

struct EntryReport {
    std::string entry;
    bool pass = true;
    std::vector<CheckResult> checks;
    std::vector<std::string> failures() const;
};

EntryReport verify_entry(const RealizationEntry &e);

// closed group of the entry; nullopt when the entry data is invalid
std::optional<MatrixGroup> entry_group(const RealizationEntry &e);
std::optional<Isometry> entry_element(const RealizationEntry &e, const std::string &name);

// An isometry of a lattice given by its gram matrix.
struct FormAction {
    IMat gram;
    IMat matrix;
};
// block sum on L1 + L2; throws InputError unless both preserve their forms
FormAction glue_action(const FormAction &a, const FormAction &b);

struct GlueCheck {
    bool pass = false;
    std::string detail;
    std::optional<IMat> conjugator;
};
// orientation-reversing signed-permutation equivalence of two tangential representations
GlueCheck glue_compatibility(const TangentialRep &r1, const TangentialRep &r2, bool forbid_minus_identity);

// connected sum of two fixed-set components
ComponentKind connected_sum(const ComponentKind &a, const ComponentKind &b);

RealizationEntry parametric_entry_Mn(int n);

class Catalog {
public:
    static Catalog load(const std::filesystem::path &dir);
    void add(RealizationEntry e);
    const std::vector<RealizationEntry> &entries() const { return entries_; }
    const RealizationEntry *find(const std::string &name) const;
    // first entry, in catalog order, whose group contains every element of g
    const RealizationEntry *realizing_entry(const MatrixGroup &g) const;

private:
    std::vector<RealizationEntry> entries_;
    std::vector<std::optional<MatrixGroup>> groups_;
};

} // namespace dp
