#include "delpezzo/signature_defect.hpp"

namespace dp {

namespace {

void require_involution(const Isometry &m) {
    if (!(m * m).is_identity()) throw InputError("matrix is not an involution");
}

} // namespace

int ambient_signature(const LorentzianLattice &L) { return inertia(L.gram()).signature(); }

int quotient_signature(const LorentzianLattice &L, const Isometry &m) {
    require_involution(m);
    return restricted_signature(L, eigenlattice(m, 1)).signature();
}

SignatureBudget defect_budget(const LorentzianLattice &L, const Isometry &m) {
    SignatureBudget b;
    b.sigma_M = ambient_signature(L);
    b.sigma_quotient = quotient_signature(L, m);
    b.budget = 2 * b.sigma_quotient - b.sigma_M;
    b.orientable_only = true;
    return b;
}

PruneVerdict parity_prune(const SignatureBudget &b, const FixedSetProfile &profile) {
    if (!profile.all_orientable()) return PruneVerdict::Keep;
    if (profile.surfaces() == 0 && b.budget != 0) return PruneVerdict::Discard;
    return PruneVerdict::Keep;
}

} // namespace dp
