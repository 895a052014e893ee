#include <doctest.h>

#include "delpezzo/signature_defect.hpp"

using namespace dp;

namespace {

const LorentzianLattice &M2() { return LorentzianLattice::M(2); }
Isometry R(const std::string &v) { return Isometry::reflection(M2(), v); }

} // namespace

TEST_CASE("quotient signatures and budgets for A and -AB") {
    Isometry A = R("E1-E2"), B = R("H-E1-E2");
    CHECK(ambient_signature(M2()) == -1);
    CHECK(quotient_signature(M2(), A) == 0);
    CHECK(quotient_signature(M2(), -(A * B)) == -2);
    SignatureBudget a = defect_budget(M2(), A);
    CHECK(a.budget == 1);
    SignatureBudget ab = defect_budget(M2(), -(A * B));
    CHECK(ab.budget == -3);
}

TEST_CASE("parity prune") {
    SignatureBudget b = defect_budget(M2(), R("E1-E2"));
    CHECK(parity_prune(b, parse_profile("[pt, pt, pt]")) == PruneVerdict::Discard);
    CHECK(parity_prune(b, parse_profile("[S^2, pt]")) == PruneVerdict::Keep);
}

TEST_CASE("budget of -I on M0 and Mstar") {
    const auto &M0 = LorentzianLattice::M(0);
    CHECK(defect_budget(M0, Isometry::minus_identity(M0)).sigma_M == 1);
    const auto &Ms = LorentzianLattice::Mstar();
    CHECK(ambient_signature(Ms) == 0);
}
