#pragma once

#include <optional>
#include <string>

#include "delpezzo/lattice.hpp"

namespace dp {

struct NormEquation {
    Sublattice sublattice;
    Integer target;
    bool require_nonzero = true;
    std::optional<Sublattice> extra_membership;
};

enum class Solvability { Solvable, Unsolvable, Unknown };

enum class Reason {
    None,
    Sign,          // definite form, target of the wrong sign
    ZeroClass,     // definite form (or zero lattice), nonzero vector of norm 0 requested
    Definite,      // definite form, exhaustive search inside the norm bound
    Modular,       // no solution modulo `modulus`
    Descent,       // a^2 = D b^2 with v_p(D) odd
    Factorization, // split binary form, all divisor pairs checked
    PellWindow,    // nonsplit binary form, window of class representatives checked
};

struct SolvabilityVerdict {
    Solvability status = Solvability::Unknown;
    std::optional<LatticeElement> witness;  // canonical coordinates
    IVec coefficients;                       // witness in the sublattice basis
    Reason reason = Reason::None;
    Integer modulus;  // modulus for Modular, prime for Descent
    std::string detail;

    std::string reason_string() const;
    // short tag used by certificates: sign, zero_class, definite, modular, descent, factorization, pell
    std::string reason_tag() const;
};

std::string status_string(Solvability s);

// form on Z^r with the given Gram matrix
SolvabilityVerdict solve_form(const IMat &gram, const Integer &k, bool require_nonzero);
SolvabilityVerdict solve_norm_equation(const NormEquation &e);

// Gram of Q on the solution sublattice
IMat restricted_gram(const NormEquation &e);
Sublattice solution_sublattice(const NormEquation &e);

// "2a^2 - 4b^2" style rendering
std::string form_string(const IMat &gram);
// "a^2 = 2"; both sides negated when the leading coefficient is negative
std::string equation_string(const IMat &gram, const Integer &k);

constexpr long long PELL_WINDOW_LIMIT = 2000000;
constexpr long long TERNARY_BOX = 12;

} // namespace dp
