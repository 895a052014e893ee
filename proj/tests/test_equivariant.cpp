#include <doctest.h>

#include "delpezzo/equivariant.hpp"
#include "oracles.hpp"

using namespace dp;

TEST_CASE("decompose_involution recovers block counts of random conjugated involutions") {
    std::mt19937 rng(424242);
    int checked = 0;
    for (int trial = 0; trial < 1100; ++trial) {
        auto b = oracle::random_block_involution(rng, 6);
        const auto &L = LorentzianLattice::M(static_cast<int>(b.matrix.rows()) - 1);
        InvolutionDecomposition d = decompose_involution(L, b.matrix);
        INFO("t,c,r = " << b.t << "," << b.c << "," << b.r << " matrix " << matrix_string(b.matrix));
        CHECK(d.t == b.t);
        CHECK(d.c == b.c);
        CHECK(d.r == b.r);
        ++checked;
    }
    CHECK(checked >= 1000);
}

TEST_CASE("decompose_involution rejects non-involutions") {
    const auto &L = LorentzianLattice::M(2);
    CHECK_THROWS_AS(decompose_involution(L, imat({{1, 0, 0}, {0, 0, 1}, {0, -1, 0}})), InputError);
    CHECK_THROWS_AS(decompose_involution(L, identity(3)), InputError);
}

TEST_CASE("A on M2 has (t,c,r) = (1,0,1)") {
    const auto &L = LorentzianLattice::M(2);
    InvolutionDecomposition d = decompose_involution(L, imat({{1, 0, 0}, {0, 0, 1}, {0, 1, 0}}));
    CHECK(d == InvolutionDecomposition{1, 0, 1});
    CHECK(d.beta1() == 0);
    CHECK(d.beta02() == 3);
}

TEST_CASE("profile enumeration") {
    auto names = [](const std::vector<FixedSetProfile> &ps) {
        std::vector<std::string> out;
        for (const auto &p : ps) out.push_back(p.name());
        return out;
    };
    CHECK(names(enumerate_profiles({1, 0, 1})) == std::vector<std::string>{"[pt, pt, pt]", "[S^2, pt]"});
    CHECK(names(enumerate_profiles({1, 3, 0}, 2, 3)) == std::vector<std::string>{"[#3RP^2, pt]"});
    for (const auto &p : enumerate_profiles({2, 2, 1})) {
        CHECK(p.beta1() == 2);
        CHECK(p.beta02() == 4);
    }
    CHECK_THROWS_AS(enumerate_profiles({1, 0, 1}, 0, 1), InputError);
}

TEST_CASE("profile parsing and naming round trip") {
    for (std::string s : {"[S^2, pt]", "[#3RP^2, pt]", "[T^2]", "[#2T^2, RP^2, pt, pt]", "[S^2, S^2]"})
        CHECK(parse_profile(s).name() == s);
    CHECK(parse_profile("[pt, S^2]").name() == "[S^2, pt]");
    CHECK(parse_profile("[4pt]").size() == 4);
    CHECK_THROWS_AS(parse_profile("[K3]"), InputError);
}

TEST_CASE("nonzero-class rule needs two or more components") {
    CHECK(nonzero_class_rule(parse_profile("[S^2, pt]"), 0) == NonzeroObligation::Obligatory);
    CHECK(nonzero_class_rule(parse_profile("[T^2]"), 0) == NonzeroObligation::None);
    CHECK_THROWS_AS(nonzero_class_rule(parse_profile("[RP^2, pt]"), 0), InputError);
}
