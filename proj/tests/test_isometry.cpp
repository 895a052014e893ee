#include <doctest.h>

#include "delpezzo/classify.hpp"

using namespace dp;

namespace {

const LorentzianLattice &M2() { return LorentzianLattice::M(2); }
Isometry R(const std::string &v) { return Isometry::reflection(M2(), v); }

} // namespace

TEST_CASE("isometry validation reports the failing entry") {
    auto err = isometry_violation(M2(), imat({{1, 0, 0}, {0, 0, 1}, {0, 1, 1}}));
    REQUIRE(err);
    CHECK(err->find("row 2, col 3") != std::string::npos);
    CHECK_THROWS_AS(Isometry(M2(), imat({{1, 0}, {0, 1}})), InputError);
}

TEST_CASE("S-basis matrices of A and B") {
    Isometry A = R("E1-E2"), B = R("H-E1-E2");
    // A swaps S1, S2 and fixes Sigma; B fixes S1, S2 and negates Sigma
    CHECK(equal(A.matrix_in("S"), imat({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}})));
    CHECK(equal(B.matrix_in("S"), imat({{1, 0, 0}, {0, 1, 0}, {0, 0, -1}})));
    CHECK(A.commutes_with(B));
}

TEST_CASE("element orders") {
    Isometry Phi = R("E2") * R("E1-E2");
    CHECK(equal(Phi.matrix(), imat({{1, 0, 0}, {0, 0, 1}, {0, -1, 0}})));
    ElementOrder o = element_order(Phi);
    CHECK(o.finite);
    CHECK(o.order == 4);
    CHECK(element_order(R("E1")).order == 2);
    ElementOrder inf = element_order(R("H-E1-E2") * R("E2"));
    CHECK_FALSE(inf.finite);
    CHECK_FALSE(inf.certificate.empty());
}

TEST_CASE("closure and subgroups") {
    MatrixGroup G1 = group_G1(), G2 = group_G2();
    CHECK(G1.order() == 8);
    CHECK(G2.order() == 16);
    auto subs = enumerate_subgroups(G1);
    int order4 = 0;
    for (const auto &s : subs) order4 += s.order() == 4;
    CHECK(subs.size() == 16);  // trivial, 7 of order 2, 7 of order 4, G1
    CHECK(order4 == 7);
    MatrixGroup cyc = closed(M2(), {R("E2") * R("E1-E2")});
    CHECK(enumerate_subgroups(cyc).size() == 3);
}

TEST_CASE("fingerprints") {
    CHECK(isomorphism_fingerprint(group_G1()).label == "(Z/2)^3");
    CHECK(isomorphism_fingerprint(group_G2()).label == "D4 x Z/2");
    CHECK(isomorphism_fingerprint(closed(M2(), {R("E1-E2"), Isometry::minus_identity(M2())})).label == "(Z/2)^2");
    CHECK(isomorphism_fingerprint(closed(M2(), {R("E2") * R("E1-E2")})).label == "Z/4");
    const auto &M3 = LorentzianLattice::M(3);
    MatrixGroup g = closed(M3, {Isometry::reflection(M3, "H-E1-E2-E3"), Isometry::reflection(M3, "E1-E2"),
                                Isometry::reflection(M3, "E2-E3"), Isometry::minus_identity(M3)});
    CHECK(g.order() == 24);
    CHECK(isomorphism_fingerprint(g).label == "Z/2 x S3 x Z/2");
}

TEST_CASE("conjugation and centralizers") {
    MatrixGroup G1 = group_G1();
    Isometry A = R("E1-E2");
    CHECK(centralizer(G1, A).size() == 8);
    MatrixGroup G2 = group_G2();
    Isometry Phi = R("E2") * R("E1-E2");
    CHECK(centralizer(G2, Phi).size() == 8);
    MatrixGroup h = closed(M2(), {A, -R("H-E1-E2")});
    MatrixGroup c = conjugate(h, R("E1"));
    CHECK(c.order() == 4);
    CHECK(isomorphism_fingerprint(c) == isomorphism_fingerprint(h));
}

TEST_CASE("element naming in G1 and G2") {
    ElementNamer n1 = namer_G1();
    CHECK(n1.name(-(R("E1-E2") * R("H-E1-E2"))) == "-AB");
    CHECK(n1.label(closed(M2(), {R("E1-E2"), Isometry::minus_identity(M2())})) == "<A,-I>");
    ElementNamer n2 = namer_G2();
    CHECK(n2.name(R("E2") * R("E1-E2")) == "Phi");
    CHECK(n2.name(Isometry::minus_identity(M2())) == "-I");
}
