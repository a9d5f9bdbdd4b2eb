#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qtr/catalog.hpp"
#include "qtr/error.hpp"
#include "qtr/factorization.hpp"

#include <set>

using namespace qtr;

namespace {

// oracle: (P, M) is a unique factorization iff the product map P x M -> G is bijective
bool uf_oracle(const FiniteGroup& G, const std::vector<int>& P, const std::vector<int>& M) {
    std::set<int> hit;
    for (int u : P)
        for (int x : M) hit.insert(G.mul(u, x));
    return static_cast<int>(hit.size()) == G.order && static_cast<int>(P.size() * M.size()) == G.order;
}

} // namespace

TEST_CASE("Z6 internal direct product has trivial actions") {
    FiniteGroup z6 = catalog_group("Z6");
    UniqueFactorization uf = make_factorization(z6, SubgroupRef{{0, 2, 4}}, SubgroupRef{{0, 3}});
    for (int x : uf.minus.elements)
        for (int u : uf.plus.elements) {
            CHECK(uf.lmp(x, u) == u);
            CHECK(uf.rmp(x, u) == x);
            CHECK(uf.lpm(u, x) == x);
            CHECK(uf.rpm(u, x) == u);
        }
    CHECK(verify_action_identities(uf));
}

TEST_CASE("S3 with normal G+ forces x^u = x and ^x u = x u x^{-1}") {
    FiniteGroup s3 = catalog_group("S3");
    UniqueFactorization uf = make_factorization(s3, SubgroupRef{{0, 3, 4}}, SubgroupRef{{0, 1}});
    for (int x : uf.minus.elements)
        for (int u : uf.plus.elements) {
            CHECK(uf.rmp(x, u) == x);
            CHECK(uf.lmp(x, u) == s3.mul(s3.mul(x, u), s3.inv(x)));
        }
    CHECK(verify_action_identities(uf));
}

TEST_CASE("equal subgroups are rejected") {
    FiniteGroup z4 = catalog_group("Z4");
    CHECK_THROWS_WITH_AS(make_factorization(z4, SubgroupRef{{0, 2}}, SubgroupRef{{0, 2}}),
                         doctest::Contains("NotUniqueFactorization"), DomainError);
}

TEST_CASE("factor tables round trip") {
    for (const char* name : {"Z6", "S3", "Q8", "D4"}) {
        FiniteGroup G = catalog_group(name);
        for (const auto& uf : find_factorizations(G)) {
            for (int g = 0; g < G.order; ++g) {
                CHECK(G.mul(uf.pm_plus[g], uf.pm_minus[g]) == g);
                CHECK(G.mul(uf.mp_minus[g], uf.mp_plus[g]) == g);
            }
            CHECK(verify_action_identities(uf));
        }
    }
}

TEST_CASE("find_factorizations agrees with the pairwise oracle") {
    FiniteGroup triv = load_group({{0}}, "triv");
    CHECK(find_factorizations(triv).size() == 1);

    FiniteGroup z6 = catalog_group("Z6");
    auto z6fs = find_factorizations(z6);
    auto subs = enumerate_subgroups(z6);
    int expected = 0;
    for (const auto& P : subs)
        for (const auto& M : subs)
            if (uf_oracle(z6, P.elements, M.elements)) ++expected;
    CHECK(static_cast<int>(z6fs.size()) == expected);

    // deterministic subgroup-enumeration order: ({0}, Z6) comes first
    CHECK(z6fs[0].plus.elements == std::vector<int>{0});
    CHECK(z6fs[0].minus.elements == std::vector<int>{0, 1, 2, 3, 4, 5});

    std::set<std::pair<std::vector<int>, std::vector<int>>> pairs;
    for (const auto& uf : z6fs) pairs.insert({uf.plus.elements, uf.minus.elements});
    CHECK(pairs.count({{0, 2, 4}, {0, 3}}) == 1);
    CHECK(pairs.count({{0, 3}, {0, 2, 4}}) == 1);
    CHECK(pairs.count({{0}, {0, 1, 2, 3, 4, 5}}) == 1);
    CHECK(pairs.count({{0, 1, 2, 3, 4, 5}, {0}}) == 1);

    FiniteGroup s3 = catalog_group("S3");
    auto s3fs = find_factorizations(s3);
    std::set<std::pair<std::vector<int>, std::vector<int>>> s3pairs;
    for (const auto& uf : s3fs) s3pairs.insert({uf.plus.elements, uf.minus.elements});
    // (A3, <t>) for each of the three transpositions 1, 2, 5, and the reverses
    for (int t : {1, 2, 5}) {
        CHECK(s3pairs.count({{0, 3, 4}, {0, t}}) == 1);
        CHECK(s3pairs.count({{0, t}, {0, 3, 4}}) == 1);
    }
    CHECK(s3fs.size() == 8);
}

TEST_CASE("corrupted action table is caught with a witness") {
    FiniteGroup s3 = catalog_group("S3");
    UniqueFactorization uf = make_factorization(s3, SubgroupRef{{0, 3, 4}}, SubgroupRef{{0, 1}});
    uf.act_lmp[1][1] = uf.plus.elements[(uf.plus_pos[uf.act_lmp[1][1]] + 1) % 3];
    std::string w;
    CHECK_FALSE(verify_action_identities(uf, &w));
    CHECK_FALSE(w.empty());
}

TEST_CASE("normal G+ forces the whole rmp table, across the catalog") {
    for (const char* name : {"Z8", "S3", "D4", "Z12", "Q8"}) {
        FiniteGroup G = catalog_group(name);
        for (const auto& uf : find_factorizations(G)) {
            if (!is_normal(G, uf.plus)) continue;
            for (int x : uf.minus.elements)
                for (int u : uf.plus.elements) {
                    CHECK(uf.rmp(x, u) == x);
                    CHECK(uf.lmp(x, u) == G.mul(G.mul(x, u), G.inv(x)));
                }
        }
    }
}
