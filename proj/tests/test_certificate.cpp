#include <doctest.h>

#include <fstream>
#include <sstream>

#include "delpezzo/certificate.hpp"

using namespace dp;

namespace {

CertificateLibrary shipped() {
    CertificateLibrary lib;
    lib.load_directory(DP_DATA_DIR "/certificates");
    return lib;
}

std::string slurp(const std::string &name) {
    std::ifstream in(std::string(DP_DATA_DIR "/certificates/") + name + ".cert");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string replace_once(std::string s, const std::string &from, const std::string &to) {
    auto pos = s.find(from);
    REQUIRE(pos != std::string::npos);
    return s.replace(pos, from.size(), to);
}

CertificateResult run(const std::string &text) {
    CertificateLibrary lib = shipped();
    return check_certificate(parse_textdoc(text, "mutated.cert"), lib);
}

} // namespace

TEST_CASE("shipped certificates are accepted") {
    CertificateLibrary lib = shipped();
    REQUIRE(lib.names().size() == 3);
    for (const auto &n : lib.names()) {
        CertificateResult r = check_certificate(*lib.find(n), lib);
        INFO(n << ": line " << r.rejected_line << " " << r.rejection);
        CHECK(r.accepted);
        CHECK(r.open_leaves == 0);
    }
    CertificateResult s = check_certificate(*lib.find("sigma12_sigma23_R3"), lib);
    CHECK(s.status == VerdictStatus::Obstructed);
    REQUIRE(s.group);
    CHECK(s.group->order() == 48);
    CertificateResult lemma = check_certificate(*lib.find("no_isolated_points"), lib);
    REQUIRE(lemma.concluded_profiles.size() == 1);
    CHECK(lemma.concluded_profiles[0].name() == "[S^2, S^2]");
}

TEST_CASE("tampered certificates are rejected") {
    const std::string base = slurp("sigma12_sigma23_R3");
    REQUIRE(run(base).accepted);

    SUBCASE("second minus_identity_tangent") {
        CertificateResult r = run(replace_once(base, "minus_identity_tangent p c\n",
                                               "minus_identity_tangent p c\nminus_identity_tangent p s12\n"));
        CHECK_FALSE(r.accepted);
        CHECK(r.rejected_line > 0);
    }
    SUBCASE("wrong commute_action sign") {
        CHECK_FALSE(run(replace_once(base, "commute_action R3 F1 -", "commute_action R3 F1 +")).accepted);
    }
    SUBCASE("wrong close tag") {
        CHECK_FALSE(run(replace_once(base, "close zero_class", "close descent")).accepted);
    }
    SUBCASE("wrong intersection") {
        CHECK_FALSE(run(replace_once(base, "intersect F1 = Z{E3}", "intersect F1 = Z{E2}")).accepted);
    }
    SUBCASE("open leaf") {
        CertificateResult r = run(replace_once(base, "close zero_class\n", ""));
        CHECK_FALSE(r.accepted);
    }
    SUBCASE("wrong expected profile") {
        CHECK_FALSE(run(replace_once(base, "expect [#3RP^2, pt]", "expect [RP^2, pt]")).accepted);
    }
    SUBCASE("missing import") {
        CertificateLibrary empty;
        CHECK_FALSE(check_certificate(parse_textdoc(base, "x.cert"), empty).accepted);
    }
}

TEST_CASE("nonzero on a single-component profile is rejected") {
    const std::string text = R"(schema 1
kind certificate
name single_torus
lattice Mstar
claim obstructed
element m = -I
group m
decompose m
split_profile m
case [T^2] as S
  nonzero S
  close zero_class
end
case [#2RP^2]
  close zero_class
end
)";
    CertificateResult r = run(text);
    CHECK_FALSE(r.accepted);
    CHECK(r.rejection.find("nonzero") != std::string::npos);
}

TEST_CASE("local model of a rank-2 elementary abelian group") {
    const auto &L = LorentzianLattice::M(3);
    Isometry s12 = Isometry::reflection(L, "E1-E2"), r3 = Isometry::reflection(L, "E3");
    LocalModel m({s12, r3});
    CHECK(m.size() == 4);
    CHECK(m.index_of(s12 * r3) == 3);
    CHECK(m.index_of(Isometry::reflection(L, "E1")) == -1);
    LocalModel::Facts f;
    f.minus_identity = {3};
    for (const auto &a : m.consistent(f)) {
        CHECK(LocalModel::minus_count(a, 3) == 4);
        for (int x = 1; x < 4; ++x) CHECK(LocalModel::minus_count(a, x) % 2 == 0);
    }
}

TEST_CASE("tokenizer keeps bracketed groups") {
    CHECK(tokenize_line("intersect F1 = Z{H, E1+E2}") ==
          std::vector<std::string>{"intersect", "F1", "=", "Z{H, E1+E2}"});
    CHECK(tokenize_line("decompose c expect [#3RP^2, pt]") ==
          std::vector<std::string>{"decompose", "c", "expect", "[#3RP^2, pt]"});
    TextDoc d = parse_textdoc("# comment\nname x\n\nlattice M2\n", "t");
    CHECK(d.lines.size() == 2);
    CHECK(d.value("lattice") == "M2");
    CHECK(d.lines[1].number == 4);
}
