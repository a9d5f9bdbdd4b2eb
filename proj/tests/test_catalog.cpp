#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qtr/catalog.hpp"
#include "qtr/cli.hpp"
#include "qtr/error.hpp"
#include "qtr/groupoid.hpp"
#include "qtr/twist.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

using namespace qtr;
using nlohmann::json;

namespace {

UniqueFactorization s3_uf() {
    return make_factorization(catalog_group("S3"), SubgroupRef{{0, 3, 4}}, SubgroupRef{{0, 1}});
}

struct CliResult {
    int code;
    std::string out, err;
    json parsed() const { return json::parse(out); }
};

CliResult cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("double of the trivial group and of Z2") {
    FiniteGroup triv = load_group({{0}}, "triv");
    UniqueFactorization ut = make_factorization(triv, SubgroupRef{{0}}, SubgroupRef{{0}});
    UniqueFactorization dt = build_double(ut);
    CHECK(dt.group.order == 1);

    FiniteGroup z2 = catalog_group("Z2");
    UniqueFactorization uz = make_factorization(z2, SubgroupRef{{0, 1}}, SubgroupRef{{0}});
    UniqueFactorization dz = build_double(uz);
    CHECK(dz.group.order == 4);
    CHECK(dz.plus.elements == std::vector<int>{0, 2});  // {(g+, e)}
    CHECK(dz.minus.elements == std::vector<int>{0, 3}); // diagonal
    // the double of Z2 is the Klein group
    CHECK(is_isomorphism(dz.group, catalog_group("V4"), {0, 1, 2, 3}));

    auto [xi, eta] = standard_double_qt(dz);
    CHECK(is_normal_qt(dz, xi)); // xi(g+, e) = (e, e)
    CHECK_FALSE(is_normal_qt(dz, eta));
    CHECK(classify(dz).size() == 4); // same count as the V4 classification
}

TEST_CASE("double of S3: orders, standard pair, cycle data, solution") {
    FiniteGroup s3 = catalog_group("S3");
    UniqueFactorization uf = s3_uf();
    UniqueFactorization dbl = build_double(uf);
    CHECK(dbl.group.order == 36);
    CHECK(dbl.np() == 6);
    CHECK(dbl.nm() == 6);

    auto [xi, eta] = standard_double_qt(dbl); // conditions asserted inside
    CHECK_FALSE(xi == eta);

    HopfData H = build_hopf(dbl);
    TensorElement R = build_R(dbl, xi, eta);
    CHECK(R.support_size() == 36);
    CHECK_FALSE(check_triangular(H, R, xi, eta));
    CHECK_FALSE(check_triangular_datum(dbl, xi)); // A = S3 is not abelian
    CHECK_FALSE(check_cocommutative(H));

    // the standard pair appears in the classification
    bool found = false;
    for (const auto& p : classify(dbl))
        if (p.xi == xi && p.eta == eta) found = true;
    CHECK(found);

    // cycle data: A = G x {e} with the S3 table, zeta(a) = (a_minus)^{-1},
    // conjugation action, F(a x| g) = a^{-1} x| ag
    CycleData cd = to_cycle_data(dbl, xi, eta);
    REQUIRE(cd.A.order == 6);
    REQUIRE(cd.Gm.order == 6);
    CHECK(cd.A.table == s3.table);
    CHECK(cd.Gm.table == s3.table);
    for (int a = 0; a < 6; ++a) CHECK(cd.zeta[a] == s3.inv(uf.pm_minus[a]));
    for (int x = 0; x < 6; ++x)
        for (int a = 0; a < 6; ++a) CHECK(cd.action[x][a] == s3.mul(s3.mul(x, a), s3.inv(x)));
    for (int a = 0; a < 6; ++a)
        for (int x = 0; x < 6; ++x) CHECK(cd.F[a * 6 + x] == s3.inv(a) * 6 + s3.mul(a, x));

    // pi(g+, g-) = g+ g-^{-1} is a bijection onto G, and the G~+ action on G
    // transported along pi is conjugation by the G- component
    std::vector<char> hit(6, 0);
    for (int t : dbl.plus.elements) {
        int pi = s3.mul(t / 6, s3.inv(t % 6));
        CHECK_FALSE(hit[pi]);
        hit[pi] = 1;
    }
    // pi is a 1-cocycle for the action u.a = u_minus a u_minus^{-1}:
    // pi(uv) = pi(u) * (u . pi(v))
    for (int t : dbl.plus.elements)
        for (int v : dbl.plus.elements) {
            int uv = dbl.group.mul(t, v);
            int pi_uv = s3.mul(uv / 6, s3.inv(uv % 6));
            int pi_v = s3.mul(v / 6, s3.inv(v % 6));
            int pi_u = s3.mul(t / 6, s3.inv(t % 6));
            int um = t % 6;
            CHECK(pi_uv == s3.mul(pi_u, s3.mul(um, s3.mul(pi_v, s3.inv(um)))));
        }

    // the 6-point solution satisfies the YBE on all 216 triples (asserted inside)
    SetSolution sol = set_solution(dbl, xi, eta);
    CHECK(sol.n == 6);

    // the regular gamma-set of the double gives a 36^2-point solution
    Groupoid gamma = build_gamma_plus(dbl);
    Groupoid g2 = product_groupoid(gamma, gamma);
    Bisection bR = to_bisection(g2, support_pairs(H, R));
    std::vector<int> reg = gamma_set_solution(gamma, bR, regular_gamma_set(gamma));
    CHECK(reg.size() == 36 * 36); // YBE on 36^3 triples asserted inside

    CHECK_FALSE(is_normal_qt(dbl, xi));

    // the star product on G~+ is the group G, transported along pi
    FiniteGroup star = star_product(dbl, xi);
    std::vector<int> pi_iso(6);
    for (int i = 0; i < 6; ++i) {
        int t = dbl.plus_at(i);
        pi_iso[i] = s3.mul(t / 6, s3.inv(t % 6));
    }
    CHECK(is_isomorphism(star, s3, pi_iso));
}

TEST_CASE("standard_double_qt rejects non-doubles") {
    UniqueFactorization uf = s3_uf();
    CHECK_THROWS_WITH_AS(standard_double_qt(uf), doctest::Contains("NotADouble"), DomainError);
    // order 4 = 2^2 but V4 = Z2 x Z2 with the wrong minus shape
    UniqueFactorization v4 = make_factorization(catalog_group("V4"), SubgroupRef{{0, 1}},
                                                SubgroupRef{{0, 2}});
    CHECK_THROWS_WITH_AS(standard_double_qt(v4), doctest::Contains("NotADouble"), DomainError);
}

TEST_CASE("group files: strict schema") {
    FiniteGroup z3 = catalog_group("Z3");
    std::string path = "/tmp/qtr_test_group.json";
    {
        std::ofstream f(path);
        f << group_to_json(z3);
    }
    FiniteGroup back = load_group_file(path);
    CHECK(back.order == 3);
    CHECK(back.table == z3.table);

    CHECK_THROWS_WITH_AS(parse_group_json(R"({"name":"x","order":1,"table":[[0]],"extra":1})"),
                         doctest::Contains("unknown field"), DomainError);
    CHECK_THROWS_WITH_AS(parse_group_json(R"({"name":"x","order":2,"table":[[0]]})"),
                         doctest::Contains("BadGroupFile"), DomainError);
    CHECK_THROWS_WITH_AS(parse_group_json("not json"), doctest::Contains("BadGroupFile"), DomainError);
    CHECK_THROWS_AS(load_group_file("/tmp/does_not_exist_qtr.json"), DomainError);
}

TEST_CASE("cli: group list and show") {
    CliResult r = cli({"group", "list"});
    REQUIRE(r.code == 0);
    json j = r.parsed();
    CHECK(j["groups"].size() >= 20);

    r = cli({"group", "show", "Z6"});
    REQUIRE(r.code == 0);
    CHECK(r.parsed()["order"] == 6);

    r = cli({"group", "show", "S3", "--format", "text"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("order: 6") != std::string::npos);
}

TEST_CASE("cli: homs and factorize") {
    CliResult r = cli({"homs", "S3", "--plus", "0,3,4", "--minus", "0,1"});
    REQUIRE(r.code == 0);
    CHECK(r.parsed()["homs"].size() == 1);

    r = cli({"factorize", "Z6"});
    REQUIRE(r.code == 0);
    CHECK(r.parsed()["factorizations"].size() == 4);
}

TEST_CASE("cli: classify with oracle and flags") {
    CliResult r = cli({"classify", "S3", "--plus", "0,3,4", "--minus", "0,1"});
    REQUIRE(r.code == 0);
    json j = r.parsed();
    REQUIRE(j["structures"].size() == 1);
    CHECK(j["structures"][0]["triangular"] == true);
    CHECK(j["structures"][0]["normal"] == true);
    CHECK(j["structures"][0]["ybe_verified"] == true);
    CHECK(j["structures"][0]["r_support_size"] == 9);

    r = cli({"classify", "V4", "--plus", "0,1", "--minus", "0,2", "--oracle", "--jobs", "2"});
    REQUIRE(r.code == 0);
    j = r.parsed();
    CHECK(j["structures"].size() == 4);
    CHECK(j["oracle_scanned"] == 256);
    CHECK(j["oracle_passing"] == 4);
    CHECK(j["oracle_agreement"] == true);

    r = cli({"classify", "V4", "--plus", "0,1", "--minus", "0,2", "--triangular-only"});
    REQUIRE(r.code == 0);
    CHECK(r.parsed()["structures"].size() == 2);

    // generator closure: 3 generates A3, 1 generates <t>
    r = cli({"classify", "S3", "--plus", "3", "--minus", "1", "--generators"});
    REQUIRE(r.code == 0);
    CHECK(r.parsed()["structures"].size() == 1);
}

TEST_CASE("cli: normalize") {
    CliResult r = cli({"normalize", "V4", "--plus", "0,1", "--minus", "0,2", "--xi", "1", "--eta", "0"});
    REQUIRE(r.code == 0);
    json j = r.parsed();
    CHECK(j["plus_prime"] == json::array({0, 3}));
    CHECK(j["xi_prime_index"] == 0);
    CHECK(j["eta_prime_image"] == json::array({0, 2}));
}

TEST_CASE("cli: double") {
    CliResult r = cli({"double", "S3", "--plus", "0,3,4", "--minus", "0,1", "--classify"});
    REQUIRE(r.code == 0);
    json j = r.parsed();
    CHECK(j["double_order"] == 36);
    CHECK(j["standard_xi_index"] >= 0);
    CHECK(j["standard_pair_classified"] == true);

    // default factorization: ({e}, G)
    r = cli({"double", "Z2"});
    REQUIRE(r.code == 0);
    CHECK(r.parsed()["double_order"] == 4);
}

TEST_CASE("cli: ybe-export in both formats") {
    CliResult r = cli({"ybe-export", "S3", "--plus", "0,3,4", "--minus", "0,1", "--xi", "0", "--eta", "0"});
    REQUIRE(r.code == 0);
    json j = r.parsed();
    CHECK(j["n"] == 3);
    REQUIRE(j["map"].size() == 9);
    for (int u = 0; u < 3; ++u)
        for (int v = 0; v < 3; ++v) CHECK(j["map"][u * 3 + v] == json::array({u, v}));

    r = cli({"ybe-export", "S3", "--plus", "0,3,4", "--minus", "0,1", "--xi", "0", "--eta", "0",
             "--format", "csv"});
    REQUIRE(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    int rows = 0;
    while (std::getline(lines, line)) {
        if (!line.empty()) ++rows;
    }
    CHECK(rows == 9);
    CHECK(r.out.substr(0, 8) == "0,0,0,0\n");
}

TEST_CASE("cli: verify-hopf") {
    CliResult r = cli({"verify-hopf", "Z6"});
    REQUIRE(r.code == 0);
    json j = r.parsed();
    CHECK(j["results"].size() == 4);
    for (const auto& res : j["results"]) CHECK(res["all_ok"] == true);

    r = cli({"verify-hopf", "S3", "--plus", "0,3,4", "--minus", "0,1"});
    REQUIRE(r.code == 0);
    CHECK(r.parsed()["results"][0]["all_ok"] == true);
}

TEST_CASE("cli: group file round trip") {
    std::string path = "/tmp/qtr_cli_group.json";
    {
        std::ofstream f(path);
        f << group_to_json(catalog_group("Z5"));
    }
    CliResult r = cli({"classify", path});
    REQUIRE(r.code == 0); // default factorization ({e}, Z5)
    CHECK(r.parsed()["order"] == 5);
}

TEST_CASE("cli: exit codes") {
    CliResult r = cli({"no-such-command"});
    CHECK(r.code == 2);
    CHECK_FALSE(r.err.empty());

    r = cli({"classify"});
    CHECK(r.code == 2);

    r = cli({"classify", "Z4", "--plus", "0,2", "--minus", "0,2"});
    CHECK(r.code == 1);
    CHECK(r.err.find("NotUniqueFactorization") != std::string::npos);

    r = cli({"classify", "Z4", "--plus", "0,x", "--minus", "0,2"});
    CHECK(r.code == 1);
    CHECK(r.err.find("BadElement") != std::string::npos);

    r = cli({"group", "show", "E8"});
    CHECK(r.code == 1);

    r = cli({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("qtriangle") != std::string::npos);
}
