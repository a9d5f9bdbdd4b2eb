#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qtr/catalog.hpp"
#include "qtr/error.hpp"
#include "qtr/hopf.hpp"

#include <random>

using namespace qtr;

namespace {

HopfData hopf_z6() {
    return build_hopf(make_factorization(catalog_group("Z6"), SubgroupRef{{0, 2, 4}}, SubgroupRef{{0, 3}}));
}

// G+ = A3 = {0,3,4}, G- = <021> = {0,1} in the one-line labeling
HopfData hopf_s3() {
    return build_hopf(make_factorization(catalog_group("S3"), SubgroupRef{{0, 3, 4}}, SubgroupRef{{0, 1}}));
}

TensorElement random_element(const HopfData& H, int arity, std::mt19937& rng) {
    std::uniform_int_distribution<int> coin(0, 3), elem(0, H.dim() - 1), num(-3, 3);
    TensorElement a;
    a.arity = arity;
    for (int t = 0; t < 5; ++t) {
        Tuple tup(arity);
        for (int s = 0; s < arity; ++s) tup[s] = elem(rng);
        a.add_term(tup, Rational(num(rng)));
    }
    return a;
}

} // namespace

TEST_CASE("unit of H(Z6;{0,2,4},{0,3}) is {0}+{2}+{4}") {
    HopfData H = hopf_z6();
    TensorElement one = unit_element(H, 1);
    TensorElement expect;
    expect.arity = 1;
    for (int u : {0, 2, 4}) expect.add_term({u}, Rational(1));
    CHECK(one == expect);
}

TEST_CASE("counit is the delta at trivial plus part") {
    HopfData H = hopf_s3();
    CHECK(H.counit[1] == 1); // the transposition lies in G-, so g+ = e
    CHECK(H.counit[0] == 1);
    CHECK(H.counit[3] == 0);
    CHECK(H.counit[4] == 0);
}

TEST_CASE("antipode sends every basis element to its inverse") {
    for (const auto& H : {hopf_z6(), hopf_s3()}) {
        for (int g = 0; g < H.dim(); ++g) CHECK(H.antipode[g] == H.uf.group.inv(g));
    }
}

TEST_CASE("comultiplication has |G+| distinct terms, structure constants are 0/1") {
    HopfData H = hopf_s3();
    for (int g = 0; g < H.dim(); ++g) {
        CHECK(H.comult[g].size() == 3);
        TensorElement d = slot_map(H, basis_element({g}), 0, StructureMap::Comult);
        CHECK(d.support_size() == 3); // no multiplicities collapse
        for (const auto& [t, c] : d.coeffs) CHECK(c.is_one());
    }
}

TEST_CASE("slot-wise product follows the delta rule") {
    HopfData H = hopf_s3();
    // {t}{t} = {t t_minus} = {e} for the transposition t = index 1
    TensorElement tt = product_k(H, basis_element({1}), basis_element({1}));
    CHECK(tt == basis_element({0}));
    // failing delta condition: gbar_plus of a 3-cycle is itself, != e
    CHECK(product_k(H, basis_element({3}), basis_element({1})).is_zero());
    // unit law in arity 2
    std::mt19937 rng(7);
    TensorElement a = random_element(H, 2, rng);
    CHECK(product_k(H, unit_element(H, 2), a) == a);
    CHECK(product_k(H, a, unit_element(H, 2)) == a);
}

TEST_CASE("product_k is associative on random sparse elements") {
    HopfData H = hopf_s3();
    std::mt19937 rng(42);
    for (int it = 0; it < 25; ++it) {
        TensorElement a = random_element(H, 2, rng), b = random_element(H, 2, rng),
                      c = random_element(H, 2, rng);
        CHECK(product_k(H, product_k(H, a, b), c) == product_k(H, a, product_k(H, b, c)));
    }
    CHECK_THROWS_WITH_AS(product_k(H, unit_element(H, 1), unit_element(H, 2)),
                         doctest::Contains("ArityMismatch"), DomainError);
}

TEST_CASE("counit and antipode slot maps") {
    HopfData H = hopf_z6();
    TensorElement u2 = unit_element(H, 2);
    CHECK(slot_map(H, u2, 0, StructureMap::Counit) == unit_element(H, 1));
    for (int g = 0; g < H.dim(); ++g) {
        TensorElement b = basis_element({g});
        TensorElement d = slot_map(H, b, 0, StructureMap::Comult);
        CHECK(slot_map(H, d, 0, StructureMap::Counit) == b);
        CHECK(slot_map(H, d, 1, StructureMap::Counit) == b);
        CHECK(slot_map(H, slot_map(H, b, 0, StructureMap::Antipode), 0, StructureMap::Antipode) == b);
    }
    CHECK_THROWS_WITH_AS(slot_map(H, u2, 5, StructureMap::Antipode), doctest::Contains("BadSlot"),
                         DomainError);
}

TEST_CASE("embed_slots pads with the unit") {
    HopfData H = hopf_s3();
    CHECK(embed_slots(H, unit_element(H, 1), 3, {1}) == unit_element(H, 3));
    std::mt19937 rng(3);
    TensorElement a;
    a.arity = 2;
    a.add_term({1, 3}, Rational(2));
    a.add_term({4, 0}, Rational(1));
    TensorElement e12 = embed_slots(H, a, 3, {0, 1});
    CHECK(e12.support_size() == a.support_size() * 3); // unit in slot 2 contributes |G+| terms
    CHECK(slot_map(H, e12, 2, StructureMap::Counit) == a);
    CHECK_THROWS_WITH_AS(embed_slots(H, a, 3, {1, 1}), doctest::Contains("BadPositions"), DomainError);
    CHECK_THROWS_WITH_AS(embed_slots(H, a, 1, {0, 1}), doctest::Contains("BadPositions"), DomainError);
}

TEST_CASE("tau_swap") {
    HopfData H = hopf_z6();
    CHECK(tau_swap(unit_element(H, 2), 0, 1) == unit_element(H, 2));
    TensorElement gh = basis_element({2, 3});
    CHECK(tau_swap(gh, 0, 1) == basis_element({3, 2}));
    CHECK(tau_swap(tau_swap(gh, 0, 1), 0, 1) == gh);
}

TEST_CASE("positivity") {
    HopfData H = hopf_z6();
    CHECK(is_positive(unit_element(H, 2)));
    TensorElement d;
    d.arity = 1;
    d.add_term({0}, Rational(1));
    d.add_term({3}, Rational(-1));
    CHECK_FALSE(is_positive(d));
}

TEST_CASE("inverse by linear solve") {
    HopfData H = hopf_z6();
    CHECK(invert_element(H, unit_element(H, 2)) == unit_element(H, 2));
    CHECK_THROWS_WITH_AS(invert_element(H, zero_element(2)), doctest::Contains("NotInvertible"),
                         DomainError);
    // a nontrivial invertible element: 2*unit minus a grouplike piece
    TensorElement a = unit_element(H, 1);
    TensorElement b;
    b.arity = 1;
    for (const auto& [t, c] : a.coeffs) b.add_term(t, Rational(2) * c);
    b.add_term({3}, Rational(1)); // {3} = minus part over base 0
    TensorElement binv = invert_element(H, b);
    CHECK(product_k(H, b, binv) == unit_element(H, 1));
    CHECK(product_k(H, binv, b) == unit_element(H, 1));
}

TEST_CASE("hopf axioms pass for the worked factorizations") {
    for (const auto& H : {hopf_z6(), hopf_s3()}) {
        AxiomReport rep = verify_hopf_axioms(H);
        CHECK(rep.all_ok());
        CHECK(rep.first_failure().empty());
    }
}

TEST_CASE("axioms pass for every factorization of small catalog groups") {
    for (const char* name : {"Z1", "Z4", "Z6", "V4", "S3", "Q8", "D4"}) {
        FiniteGroup G = catalog_group(name);
        for (const auto& uf : find_factorizations(G)) {
            AxiomReport rep = verify_hopf_axioms(build_hopf(uf));
            INFO(name, " plus size ", uf.np());
            CHECK(rep.all_ok());
        }
    }
}

TEST_CASE("all structure constants are 0 or 1") {
    for (const char* name : {"Z6", "V4", "S3", "Q8", "D4"}) {
        FiniteGroup G = catalog_group(name);
        for (const auto& uf : find_factorizations(G)) {
            HopfData H = build_hopf(uf);
            for (int g = 0; g < H.dim(); ++g) {
                // distinct comultiplication terms, each with coefficient one
                TensorElement d = slot_map(H, basis_element({g}), 0, StructureMap::Comult);
                CHECK(d.support_size() == uf.np());
                CHECK(is_positive(d));
                for (const auto& [t, c] : d.coeffs) CHECK(c.is_one());
            }
        }
    }
}

TEST_CASE("corrupted comultiplication entry fails coassociativity with a witness") {
    HopfData H = hopf_s3();
    H.comult[3][1].first = (H.comult[3][1].first + 1) % H.dim();
    AxiomReport rep = verify_hopf_axioms(H);
    CHECK_FALSE(rep.all_ok());
    CHECK_FALSE(rep.coassociativity.ok);
    CHECK_FALSE(rep.coassociativity.witness.empty());
}

TEST_CASE("tensor serialization round trip") {
    HopfData H = hopf_s3();
    std::mt19937 rng(11);
    for (int it = 0; it < 10; ++it) {
        TensorElement a = random_element(H, 2, rng);
        CHECK(tensor_from_json(tensor_to_json(a)) == a);
    }
    TensorElement q;
    q.arity = 1;
    q.add_term({2}, Rational(BigInt(-7), BigInt(3)));
    std::string js = tensor_to_json(q);
    CHECK(js.find("\"num\":\"-7\"") != std::string::npos);
    CHECK(js.find("\"den\":\"3\"") != std::string::npos);
    CHECK(tensor_from_json(js) == q);
    CHECK_THROWS_WITH_AS(tensor_from_json("[1,2"), doctest::Contains("BadTensor"), DomainError);
}
