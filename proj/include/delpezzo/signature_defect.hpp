#pragma once

#include "delpezzo/equivariant.hpp"

namespace dp {

struct SignatureBudget {
    int sigma_M = 0;
    int sigma_quotient = 0;
    int budget = 0;  // 2 * sigma_quotient - sigma_M
    bool orientable_only = true;
};

int ambient_signature(const LorentzianLattice &L);
int quotient_signature(const LorentzianLattice &L, const Isometry &m);
SignatureBudget defect_budget(const LorentzianLattice &L, const Isometry &m);

enum class PruneVerdict { Keep, Discard };
PruneVerdict parity_prune(const SignatureBudget &b, const FixedSetProfile &profile);

} // namespace dp
