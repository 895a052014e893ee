#include <doctest.h>

#include <map>
#include <set>

#include "delpezzo/classify.hpp"

using namespace dp;

namespace {

struct Ctx {
    Catalog catalog = Catalog::load(DP_DATA_DIR "/catalog");
    CertificateLibrary certs;
    Ctx() { certs.load_directory(DP_DATA_DIR "/certificates"); }
    ClassifyContext get(int threads = 1) {
        SearchOptions o;
        o.threads = threads;
        return {catalog, certs, o};
    }
};

std::map<std::string, VerdictStatus> order4(const Classification &c) {
    std::map<std::string, VerdictStatus> out;
    for (const auto &r : c.rows)
        if (r.ambient == "G1" && r.order == 4) out[r.label] = r.verdict.status;
    return out;
}

} // namespace

TEST_CASE("n = 2 table") {
    Ctx ctx;
    Classification c = classify_all(2, ctx.get());
    auto o4 = order4(c);
    CHECK(o4.size() == 7);
    for (std::string l : {"<A,-B>", "<A,B>", "<-AB,-A>"}) CHECK(o4[l] == VerdictStatus::Obstructed);
    for (std::string l : {"<A,-I>", "<B,-B>", "<AB,-I>", "<AB,-B>"}) CHECK(o4[l] == VerdictStatus::RealizedByCatalog);

    const ClassifiedGroup *g2 = nullptr;
    for (const auto &r : c.rows)
        if (r.ambient == "G2" && r.order == 16) g2 = &r;
    REQUIRE(g2);
    CHECK(g2->fingerprint == "D4 x Z/2");
    CHECK(g2->verdict.status == VerdictStatus::RealizedByCatalog);
    for (const auto &r : c.rows) CHECK(r.verdict.status != VerdictStatus::Undetermined);
}

TEST_CASE("every element of G1 and G2 lies in a realized or obstructed-free subgroup") {
    Ctx ctx;
    Classification c = classify_all(2, ctx.get());
    for (const MatrixGroup &G : {group_G1(), group_G2()}) {
        for (const auto &x : G.elements()) {
            bool covered = false;
            for (const auto &r : c.rows)
                if (r.verdict.status == VerdictStatus::RealizedByCatalog && r.group.contains(x)) covered = true;
            CHECK(covered);
        }
    }
}

TEST_CASE("n = 3 candidates") {
    Ctx ctx;
    Classification c = classify_all(3, ctx.get());
    REQUIRE(c.rows.size() == 3);
    std::multiset<int> statuses;
    int realized = 0;
    for (const auto &r : c.rows) {
        if (r.verdict.status == VerdictStatus::RealizedByCatalog) {
            ++realized;
            CHECK(r.ambient == "omit E3");
        }
        CHECK(r.verdict.status != VerdictStatus::Undetermined);
        CHECK(r.verdict.status != VerdictStatus::ConsistentConstraints);
    }
    CHECK(realized == 1);
}

TEST_CASE("classification is independent of the thread count") {
    Ctx ctx;
    Classification a = classify_all(2, ctx.get(1)), b = classify_all(2, ctx.get(4));
    REQUIRE(a.rows.size() == b.rows.size());
    for (size_t i = 0; i < a.rows.size(); ++i) {
        CHECK(a.rows[i].label == b.rows[i].label);
        CHECK(a.rows[i].verdict.status == b.rows[i].verdict.status);
        CHECK(a.rows[i].verdict.trace == b.rows[i].verdict.trace);
    }
}

TEST_CASE("element names") {
    ElementNamer n = namer_G1();
    const auto &L = LorentzianLattice::M(2);
    Isometry A = Isometry::reflection(L, "E1-E2"), B = Isometry::reflection(L, "H-E1-E2");
    CHECK(n.name(A) == "A");
    CHECK(n.name(-B) == "-B");
    CHECK(n.name(A * B) == "AB");
    CHECK(n.name(Isometry::minus_identity(L)) == "-I");
    CHECK(n.label(closed(L, {A, -B})) == "<A,-B>");
}

TEST_CASE("groups outside the candidates are rejected as Undetermined") {
    Ctx ctx;
    const auto &L = LorentzianLattice::M(2);
    MatrixGroup g = closed(L, {Isometry::reflection(L, "E1")});
    Verdict v = classify_finite_subgroup(g, 2, ctx.get());
    CHECK(v.status != VerdictStatus::Obstructed);
}
