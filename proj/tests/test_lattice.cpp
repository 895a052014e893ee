#include <doctest.h>

#include "delpezzo/lattice.hpp"
#include "oracles.hpp"

using namespace dp;

namespace {

IVec random_vec(std::mt19937 &rng, int n, int bound) {
    std::uniform_int_distribution<int> u(-bound, bound);
    IVec v(n);
    for (int i = 0; i < n; ++i) v(i) = u(rng);
    return v;
}

} // namespace

TEST_CASE("M_n forms and the S-basis of M2") {
    const auto &M2 = LorentzianLattice::M(2);
    CHECK(equal(M2.gram(), diagonal({1, -1, -1})));
    IVec s1 = M2.parse("S1"), s2 = M2.parse("S2"), sg = M2.parse("Sigma");
    CHECK(equal(s1, M2.parse("H-E1")));
    CHECK(form(M2, s1, s1) == Integer(0));
    CHECK(form(M2, s1, s2) == Integer(1));
    CHECK(form(M2, sg, sg) == Integer(-1));
    CHECK(form(M2, s1, sg) == Integer(0));
    CHECK(M2.format(M2.parse("2H-E1-E2")) == "2H-E1-E2");
    CHECK(M2.format_in(M2.parse("2H-E1-E2"), "S") == "S1+S2");
    const auto &Ms = LorentzianLattice::Mstar();
    CHECK(equal(Ms.gram(), imat({{0, 1}, {1, 0}})));
}

TEST_CASE("parse rejects unknown symbols") {
    CHECK_THROWS_AS(LorentzianLattice::M(2).parse("E3"), InputError);
    CHECK_THROWS_AS(LorentzianLattice::M(2).parse("H+*E1"), InputError);
}

TEST_CASE("reflections preserve the form and are involutive on random roots") {
    std::mt19937 rng(1234);
    int checked = 0;
    while (checked < 1200) {
        int n = 1 + static_cast<int>(rng() % 5);
        const auto &L = LorentzianLattice::M(n);
        IVec v = random_vec(rng, n + 1, 3);
        Integer q = form(L, v, v);
        if (!(q == Integer(1) || q == Integer(-1) || q == Integer(2) || q == Integer(-2))) continue;
        IVec x = random_vec(rng, n + 1, 6), y = random_vec(rng, n + 1, 6);
        LatticeElement V{v}, X{x}, Y{y};
        LatticeElement rx = reflect(L, V, X), ry = reflect(L, V, Y);
        CHECK(form(L, rx.coords, ry.coords) == form(L, x, y));
        CHECK(equal(reflect(L, V, rx).coords, x));
        CHECK(equal(reflect(L, V, V).coords, IVec(-v)));
        IMat R = reflection_matrix(L, v);
        CHECK(equal(IMat(R * R), identity(n + 1)));
        CHECK(equal(IMat(R.transpose() * L.gram() * R), L.gram()));
        ++checked;
    }
    CHECK(checked >= 1000);
}

TEST_CASE("reflection in a vector of unsupported norm is rejected") {
    const auto &L = LorentzianLattice::M(2);
    CHECK_THROWS_AS(reflection_matrix(L, L.parse("2H")), InputError);
    CHECK_THROWS_AS(reflection_matrix(L, L.parse("H-E1")), InputError);
}

TEST_CASE("eigenlattices of A = Ref(E1-E2) on M2") {
    const auto &L = LorentzianLattice::M(2);
    IMat A = reflection_matrix(L, L.parse("E1-E2"));
    Sublattice plus = eigenlattice(L, A, 1), minus = eigenlattice(L, A, -1);
    CHECK(plus.rank() == 2);
    CHECK(minus.rank() == 1);
    CHECK(plus.contains(L.parse("S1+S2")));
    CHECK(plus.contains(L.parse("Sigma")));
    CHECK(minus.contains(L.parse("E1-E2")));
    CHECK(restricted_signature(L, plus) == Inertia{1, 1, 0});
    CHECK(intersect_sublattices(plus, minus).rank() == 0);
}

TEST_CASE("restricted signature agrees with the Sturm oracle on random sublattices") {
    std::mt19937 rng(99);
    int checked = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        int n = 1 + trial % 4;
        const auto &L = LorentzianLattice::M(n);
        int k = 1 + static_cast<int>(rng() % (n + 1));
        std::vector<IVec> gens;
        for (int i = 0; i < k; ++i) gens.push_back(random_vec(rng, n + 1, 3));
        Sublattice s = Sublattice::span(L, gens);
        IMat g = restricted_gram(s);
        std::vector<std::vector<long long>> G(g.rows(), std::vector<long long>(g.cols()));
        for (int i = 0; i < g.rows(); ++i)
            for (int j = 0; j < g.cols(); ++j) G[i][j] = g(i, j).to_ll();
        auto expect = oracle::sturm_inertia(G);
        Inertia got = restricted_signature(L, s);
        CHECK(got.plus == expect.plus);
        CHECK(got.minus == expect.minus);
        CHECK(got.zero == expect.zero);
        ++checked;
    }
    CHECK(checked >= 1000);
}
