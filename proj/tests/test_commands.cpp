#include <doctest.h>

#include "delpezzo/commands.hpp"

using namespace dp;

namespace {

std::filesystem::path fixture(const std::string &name) { return std::filesystem::path(DP_TEST_DIR) / "fixtures" / name; }

} // namespace

TEST_CASE("matrix input parsing") {
    MatrixInput m = parse_matrix_input("# swap\nbasis M2\n1 0 0\n0 0 1\n0 1 0\n", "x.mat");
    CHECK(m.lattice->name() == "M2");
    CHECK(equal(m.matrix, imat({{1, 0, 0}, {0, 0, 1}, {0, 1, 0}})));
    CHECK_THROWS_AS(parse_matrix_input("basis M2\n1 0 0\n0 0\n0 1 0\n", "x.mat"), InputError);
    CHECK_THROWS_AS(parse_matrix_input("basis M9\n1\n", "x.mat"), InputError);
    CHECK_THROWS_AS(parse_matrix_input("1 0\n0 1\n", "x.mat"), InputError);
    try {
        parse_matrix_input("basis M2\n1 0 0\n0 0\n0 1 0\n", "x.mat");
    } catch (const InputError &e) {
        CHECK(std::string(e.what()).find("x.mat:3") != std::string::npos);
    }
}

TEST_CASE("group spec parsing") {
    GroupSpec s = parse_group_spec("lattice M2\ngenerator A\n1 0 0\n0 0 1\n0 1 0\nfocus A\n", "g");
    REQUIRE(s.generators.size() == 1);
    CHECK(s.focus == "A");
    try {
        parse_group_spec("lattice M2\ngenerator X\n1 0 0\n0 1 1\n0 0 1\n", "g");
        FAIL("accepted a non-isometry");
    } catch (const InputError &e) {
        CHECK(std::string(e.what()).find("not an isometry") != std::string::npos);
    }
}

TEST_CASE("obstruct fixtures and exit codes") {
    EngineConfig cfg = EngineConfig::defaults();
    CommandResult r = cmd_obstruct(fixture("A_minusB.group"), "", {}, cfg);
    CHECK(r.exit_code == EXIT_COMPLETED);
    CHECK(r.report["verdict"]["status"] == "Obstructed");
    CHECK(cmd_obstruct(fixture("A_minusI.group"), "", {}, cfg).report["verdict"]["status"] == "ConsistentConstraints");
    CHECK(cmd_obstruct(fixture("identity.group"), "", {}, cfg).report["verdict"]["status"] == "ConsistentConstraints");
    CommandResult u = cmd_obstruct(fixture("swap_M4.group"), "", {}, cfg);
    CHECK(u.report["verdict"]["status"] == "Undetermined");
    CHECK(u.exit_code == EXIT_UNDETERMINED);
    CHECK_THROWS_AS(cmd_obstruct(fixture("not_isometry.group"), "", {}, cfg), InputError);
    CHECK_THROWS_AS(cmd_obstruct(fixture("order4_focus.group"), "", {}, cfg), InputError);
    CHECK_THROWS_AS(cmd_obstruct(fixture("short_row.group"), "", {}, cfg), InputError);
}

TEST_CASE("decompose fixtures") {
    EngineConfig cfg = EngineConfig::defaults();
    CommandResult a = cmd_decompose(fixture("A_S_basis.mat"), cfg);
    CHECK(a.report["decomposition"]["t"] == 1);
    CHECK(a.report["decomposition"]["c"] == 0);
    CHECK(a.report["decomposition"]["r"] == 1);
    CHECK(a.report["budget"]["budget"] == 1);
    CHECK(cmd_decompose(fixture("minusAB.mat"), cfg).report["budget"]["budget"] == -3);
    CHECK_THROWS_AS(cmd_decompose(fixture("not_involution.mat"), cfg), InputError);
}

TEST_CASE("designated classes are involutions") {
    for (std::string w : {"0", "1", "2", "3", "4", "5", "6", "7", "8", "star"}) {
        Isometry c = designated_class(w);
        CHECK((c * c).is_identity());
    }
    CHECK_THROWS_AS(designated_class("9"), InputError);
    CHECK_THROWS_AS(designated_class("x"), InputError);
}

TEST_CASE("reports are deterministic") {
    EngineConfig cfg = EngineConfig::defaults();
    CHECK(cmd_classify(2, cfg).structured() == cmd_classify(2, cfg).structured());
    EngineConfig four = cfg;
    four.search.threads = 4;
    CHECK(cmd_classify(2, cfg).structured() == cmd_classify(2, four).structured());
    CHECK(cmd_obstruct(fixture("A_minusB.group"), "", {}, cfg).structured() ==
          cmd_obstruct(fixture("A_minusB.group"), "", {}, four).structured());
}

TEST_CASE("catalog commands") {
    EngineConfig cfg = EngineConfig::defaults();
    CommandResult v = cmd_catalog_verify(cfg);
    CHECK(v.report["pass"] == true);
    CHECK(v.exit_code == EXIT_COMPLETED);
    CHECK(cmd_catalog_list(cfg).report["entries"].size() == 17);
}
