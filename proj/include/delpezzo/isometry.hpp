#pragma once

#include <cstdint>
#include <memory>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "delpezzo/lattice.hpp"

namespace dp {

// Form-preserving integral automorphism, stored in canonical coordinates.
class Isometry {
public:
    Isometry(const LorentzianLattice &L, const IMat &m, const std::string &basis_id = "std");
    static Isometry identity(const LorentzianLattice &L);
    static Isometry minus_identity(const LorentzianLattice &L);
    static Isometry reflection(const LorentzianLattice &L, const IVec &v);
    static Isometry reflection(const LorentzianLattice &L, const std::string &expr);

    const LorentzianLattice &lattice() const { return *lattice_; }
    const IMat &matrix() const { return m_; }
    IMat matrix_in(const std::string &basis_id) const { return lattice_->matrix_to_basis(m_, basis_id); }
    int determinant_sign() const;

    Isometry operator*(const Isometry &o) const;
    Isometry operator-() const;
    Isometry inverse() const;
    bool is_identity() const;
    bool commutes_with(const Isometry &o) const { return *this * o == o * *this; }

    friend bool operator==(const Isometry &a, const Isometry &b);
    friend bool operator<(const Isometry &a, const Isometry &b) { return a.key() < b.key(); }
    std::vector<long long> key() const { return matrix_key(m_); }

private:
    Isometry(const LorentzianLattice &L, IMat m, bool) : lattice_(&L), m_(std::move(m)) {}
    const LorentzianLattice *lattice_;
    IMat m_;
};

// Diagnostic for a matrix that fails the gram identity; empty when it is an isometry.
std::optional<std::string> isometry_violation(const LorentzianLattice &L, const IMat &m);

struct ElementOrder {
    bool finite = true;
    int order = 1;
    Poly char_poly;
    std::vector<int> cyclotomic_indices;  // empty when a non-cyclotomic factor exists
    std::string certificate;
};

constexpr int ORDER_CAP = 12;
ElementOrder element_order(const Isometry &m);

Sublattice eigenlattice(const Isometry &m, int sign);

class MatrixGroup;

// Multiplication table of a finite group given by its sorted elements.
struct GroupTable {
    std::vector<Isometry> elements;
    std::vector<std::vector<int>> mul;
    std::vector<int> inv;
    int identity = 0;
    int order() const { return static_cast<int>(elements.size()); }
    int index_of(const Isometry &g) const;
};

class MatrixGroup {
public:
    MatrixGroup(const LorentzianLattice &L, std::vector<Isometry> generators);
    MatrixGroup(const LorentzianLattice &L, std::vector<Isometry> generators, std::vector<Isometry> elements);

    const LorentzianLattice &lattice() const { return *lattice_; }
    const std::vector<Isometry> &generators() const { return gens_; }
    bool closed() const { return elements_.has_value(); }
    const std::vector<Isometry> &elements() const;
    int order() const { return static_cast<int>(elements().size()); }
    bool contains(const Isometry &g) const;
    bool is_subgroup_of(const MatrixGroup &g) const;
    bool same_elements(const MatrixGroup &o) const;
    const GroupTable &table() const;

private:
    std::vector<Isometry> gens_;
    std::optional<std::vector<Isometry>> elements_;
    mutable std::shared_ptr<const GroupTable> table_;
    const LorentzianLattice *lattice_;
};

struct Closure {
    bool finite = false;
    std::optional<MatrixGroup> group;
    // populated on divergence when a word of infinite order is found
    std::optional<Isometry> infinite_witness;
    std::string witness_word;
};

constexpr int CLOSURE_CAP = 10000;
Closure close_group(const MatrixGroup &g, int cap = CLOSURE_CAP);
// closes the generated group; throws when it does not close within cap
MatrixGroup closed(const LorentzianLattice &L, const std::vector<Isometry> &generators, int cap = CLOSURE_CAP);

std::vector<MatrixGroup> enumerate_subgroups(const MatrixGroup &g);

struct Fingerprint {
    std::string label;
    int order = 0;
    bool abelian = false;
    std::vector<std::pair<int, int>> order_histogram;
    int center_order = 0;
    std::vector<int> abelianization;  // invariant factors
    int derived_order = 0;
    friend bool operator==(const Fingerprint &, const Fingerprint &) = default;
};

Fingerprint isomorphism_fingerprint(const MatrixGroup &g);
std::string abelian_label(const std::vector<int> &invariant_factors);

MatrixGroup conjugate(const MatrixGroup &g, const Isometry &by);

// centralizer of x inside a closed group
std::vector<Isometry> centralizer(const MatrixGroup &g, const Isometry &x);

} // namespace dp
