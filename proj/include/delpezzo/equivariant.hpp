#pragma once

#include <string>
#include <vector>

#include "delpezzo/isometry.hpp"

namespace dp {

struct InvolutionDecomposition {
    int t = 0;  // trivial summands
    int c = 0;  // sign summands
    int r = 0;  // regular summands
    int beta1() const { return c; }
    int beta02() const { return t + 2; }
    friend bool operator==(const InvolutionDecomposition &, const InvolutionDecomposition &) = default;
};

InvolutionDecomposition decompose_involution(const LorentzianLattice &L, const IMat &m);
InvolutionDecomposition decompose_involution(const Isometry &m);

enum class ComponentType { Orientable, Nonorientable, Point };

struct ComponentKind {
    ComponentType type = ComponentType::Point;
    int complexity = 0;  // genus, or number of crosscaps

    static ComponentKind point() { return {ComponentType::Point, 0}; }
    static ComponentKind orientable(int genus) { return {ComponentType::Orientable, genus}; }
    static ComponentKind nonorientable(int crosscaps) { return {ComponentType::Nonorientable, crosscaps}; }

    bool is_surface() const { return type != ComponentType::Point; }
    int beta0() const { return 1; }
    int beta1() const;
    int beta2() const { return is_surface() ? 1 : 0; }
    std::string name() const;
    friend bool operator==(const ComponentKind &, const ComponentKind &) = default;
    friend auto operator<=>(const ComponentKind &, const ComponentKind &) = default;
};

// Canonical order: orientable surfaces by genus, nonorientable by crosscaps, then points.
struct FixedSetProfile {
    std::vector<ComponentKind> components;

    void canonicalize();
    int size() const { return static_cast<int>(components.size()); }
    int surfaces() const;
    int points() const;
    bool all_orientable() const;
    bool has_nonorientable() const;
    int beta1() const;
    int beta02() const;
    std::string name() const;
    friend bool operator==(const FixedSetProfile &, const FixedSetProfile &) = default;
};

FixedSetProfile parse_profile(const std::string &text);

constexpr int DEFAULT_MAX_COMPONENTS = 4;
constexpr int DEFAULT_MAX_COMPLEXITY = 4;

std::vector<FixedSetProfile> enumerate_profiles(const InvolutionDecomposition &d,
                                                int max_components = DEFAULT_MAX_COMPONENTS,
                                                int max_complexity = DEFAULT_MAX_COMPLEXITY);

enum class NonzeroObligation { Obligatory, None };
NonzeroObligation nonzero_class_rule(const FixedSetProfile &profile, int component);

} // namespace dp
