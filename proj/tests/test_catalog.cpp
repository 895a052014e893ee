#include <doctest.h>

#include "delpezzo/catalog.hpp"
#include "oracles.hpp"

using namespace dp;

namespace {

Catalog shipped() { return Catalog::load(DP_DATA_DIR "/catalog"); }

} // namespace

TEST_CASE("every shipped and parametric entry verifies") {
    Catalog c = shipped();
    CHECK(c.entries().size() == 17);
    for (const auto &e : c.entries()) {
        EntryReport r = verify_entry(e);
        INFO(e.name);
        for (const auto &f : r.failures()) MESSAGE(f);
        CHECK(r.pass);
        CHECK(r.checks.size() > 0);
    }
    for (int n = 1; n <= 8; ++n) {
        RealizationEntry e = parametric_entry_Mn(n);
        INFO(e.name);
        CHECK(verify_entry(e).pass);
    }
}

TEST_CASE("single-entry corruptions are caught") {
    Catalog c = shipped();
    std::vector<std::string> survivors;
    int entries = 0, tried = 0;
    for (const auto &e : c.entries()) {
        tried += oracle::mutate_entry(e, survivors);
        ++entries;
    }
    for (int n = 1; n <= 3; ++n) {
        tried += oracle::mutate_entry(parametric_entry_Mn(n), survivors);
        ++entries;
    }
    for (const auto &s : survivors) MESSAGE("survived: " << s);
    CHECK(entries >= 10);
    CHECK(tried > 100);
    CHECK(survivors.empty());
}

TEST_CASE("claimed order and fingerprint are checked") {
    Catalog c = shipped();
    RealizationEntry e = c.entries().front();
    e.claimed_order += 1;
    CHECK_FALSE(verify_entry(e).pass);
    RealizationEntry f = c.entries().front();
    f.claimed_fingerprint = "Z/7";
    CHECK_FALSE(verify_entry(f).pass);
}

TEST_CASE("glue_action is a block sum") {
    FormAction a{imat({{1}}), imat({{-1}})};
    FormAction b{imat({{-1}}), imat({{1}})};
    FormAction s = glue_action(a, b);
    CHECK(equal(s.gram, diagonal({1, -1})));
    CHECK(equal(s.matrix, diagonal({-1, 1})));
    FormAction bad{imat({{1}}), imat({{2}})};
    CHECK_THROWS_AS(glue_action(a, bad), InputError);
}

TEST_CASE("glue compatibility") {
    TangentialRep r1{"X", 1, {"g"}, {diagonal({-1, -1, 1, 1})}};
    TangentialRep r2{"Y", 1, {"g"}, {diagonal({1, 1, -1, -1})}};
    GlueCheck ok = glue_compatibility(r1, r2, false);
    CHECK(ok.pass);
    REQUIRE(ok.conjugator);
    CHECK(determinant(*ok.conjugator) == Integer(-1));

    TangentialRep r3{"Y", 1, {"g"}, {diagonal({-1, 1, 1, 1})}};
    CHECK_FALSE(glue_compatibility(r1, r3, false).pass);  // different -1 multiplicity

    TangentialRep m1{"X", 1, {"g"}, {diagonal({-1, -1, -1, -1})}};
    CHECK_FALSE(glue_compatibility(m1, m1, true).pass);
}

TEST_CASE("connected sums of components") {
    CHECK(connected_sum(ComponentKind::orientable(1), ComponentKind::orientable(0)) == ComponentKind::orientable(1));
    CHECK(connected_sum(ComponentKind::orientable(1), ComponentKind::nonorientable(1)) ==
          ComponentKind::nonorientable(3));
    CHECK(connected_sum(ComponentKind::nonorientable(2), ComponentKind::nonorientable(1)) ==
          ComponentKind::nonorientable(3));
}

TEST_CASE("realizing entry picks a containing group") {
    Catalog c = shipped();
    const auto &L = LorentzianLattice::M(2);
    MatrixGroup g = closed(L, {Isometry::reflection(L, "E1-E2"), Isometry::minus_identity(L)});
    const RealizationEntry *e = c.realizing_entry(g);
    REQUIRE(e);
    auto eg = entry_group(*e);
    REQUIRE(eg);
    CHECK(g.is_subgroup_of(*eg));
}
