#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "delpezzo/linalg.hpp"

namespace dp {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LatticeElement {
    IVec coords;
    std::string basis_id = "std";
};

// Unimodular lattice with a canonical basis and optional alternative bases.
class LorentzianLattice {
public:
    LorentzianLattice(std::string name, IMat gram, std::vector<std::string> labels);

    // M_n = CP^2 # n(-CP^2), canonical basis (H, E1, ..., En)
    static const LorentzianLattice &M(int n);
    // M_* = S^2 x S^2, canonical basis (S1, S2)
    static const LorentzianLattice &Mstar();

    const std::string &name() const { return name_; }
    int rank() const { return static_cast<int>(gram_.rows()); }
    const IMat &gram() const { return gram_; }
    const std::vector<std::string> &labels() const { return labels_; }

    // columns of change are the new basis vectors in canonical coordinates
    void register_basis(const std::string &id, const IMat &change, std::vector<std::string> labels);
    bool has_basis(const std::string &id) const;
    const IMat &basis_matrix(const std::string &id) const;
    const std::vector<std::string> &basis_labels(const std::string &id) const;
    std::vector<std::string> basis_ids() const;

    IVec to_canonical(const LatticeElement &v) const;
    LatticeElement in_basis(const IVec &canonical, const std::string &id) const;
    // matrix of a canonical-basis endomorphism in basis id, and back
    IMat matrix_to_basis(const IMat &m, const std::string &id) const;
    IMat matrix_from_basis(const IMat &m, const std::string &id) const;

    // parses expressions such as "2H-E1-E2", "S1+S2", "Sigma", "0"
    IVec parse(const std::string &expr) const;
    std::string format(const IVec &canonical) const;
    std::string format_in(const IVec &canonical, const std::string &id) const;

    std::vector<std::string> convention_notes() const;

    // basis used when presenting sublattices and equations
    const std::string &preferred_basis() const { return preferred_; }
    void set_preferred_basis(const std::string &id) { preferred_ = id; }

private:
    struct Basis {
        IMat change;
        IMat inverse;
        std::vector<std::string> labels;
    };
    std::string name_;
    IMat gram_;
    std::vector<std::string> labels_;
    std::map<std::string, Basis> bases_;
    std::string preferred_ = "std";
};

// Saturated subgroup; basis columns in canonical coordinates, in canonical (Hermite) form.
class Sublattice {
public:
    Sublattice(const LorentzianLattice &ambient, const IMat &generators);
    static Sublattice zero(const LorentzianLattice &ambient);
    static Sublattice full(const LorentzianLattice &ambient);
    static Sublattice span(const LorentzianLattice &ambient, const std::vector<IVec> &vectors);

    const LorentzianLattice &ambient() const { return *ambient_; }
    const IMat &basis() const { return basis_; }
    // the generators as given when they already form a basis, otherwise the canonical basis
    const IMat &presentation() const { return presentation_; }
    int rank() const { return static_cast<int>(basis_.cols()); }
    IVec vector(int i) const { return basis_.col(i); }
    bool contains(const IVec &v) const;
    std::string format() const;
    std::string format_in(const std::string &basis_id) const;
    // same lattice, presented by the Hermite basis of its coordinates in basis_id
    Sublattice presented_in(const std::string &basis_id) const;

    friend bool operator==(const Sublattice &a, const Sublattice &b);

private:
    const LorentzianLattice *ambient_;
    IMat basis_;
    IMat presentation_;
};

Integer evaluate_form(const LorentzianLattice &L, const LatticeElement &v, const LatticeElement &w);
Integer form(const LorentzianLattice &L, const IVec &v, const IVec &w);

LatticeElement reflect(const LorentzianLattice &L, const LatticeElement &v, const LatticeElement &w);
IMat reflection_matrix(const LorentzianLattice &L, const IVec &v_canonical);
IMat reflection_matrix(const LorentzianLattice &L, const LatticeElement &v, const std::string &basis_id);

// kernel of (m - sign * I), m given in canonical coordinates
Sublattice eigenlattice(const LorentzianLattice &L, const IMat &m, int sign);
Sublattice intersect_sublattices(const Sublattice &a, const Sublattice &b);
// image of a sublattice under a canonical-basis automorphism
Sublattice image(const Sublattice &s, const IMat &m);

// Gram matrix in the presentation basis
IMat restricted_gram(const Sublattice &s);
Inertia restricted_signature(const LorentzianLattice &L, const Sublattice &s);

} // namespace dp
