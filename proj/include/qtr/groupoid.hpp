#pragma once

#include "qtr/hopf.hpp"

#include <functional>
#include <vector>

namespace qtr {

// Finite groupoid over base [0, base); total space [0, total).  The partial
// product is a function so that product groupoids stay cheap to materialize
// (alpha/beta/unit/inv tables only, never a total x total table).
struct Groupoid {
    int base = 0;
    int total = 0;
    std::vector<int> alpha, beta; // total -> base
    std::vector<int> unit;        // base -> total
    std::vector<int> inv;         // total -> total
    std::function<int(int, int)> mul_fn;

    // -1 when beta(g1) != alpha(g2)
    int compose(int g1, int g2) const { return beta[g1] == alpha[g2] ? mul_fn(g1, g2) : -1; }
};

// Asserts the groupoid axioms; associativity is checked exhaustively when
// total <= cap (it is componentwise for product groupoids).
void validate_groupoid(const Groupoid& G, int assoc_cap = 1000);

// Gamma_plus of a unique factorization: total space G over base G+ (local
// indices), alpha(g) = g_plus, beta(g) = gbar_plus, product (g,h) -> g h_minus,
// inverse g -> gbar_plus g_minus^{-1}.  Its linearization is the algebra
// structure of H(G;G+,G-).
Groupoid build_gamma_plus(const UniqueFactorization& uf);

// Componentwise product; element code g1 * B.total + g2, base code likewise.
Groupoid product_groupoid(const Groupoid& A, const Groupoid& B);

// Bisection stored as the graph of the map induced by alpha-bijectivity:
// graph[b] is the unique element of the bisection with alpha == b.
struct Bisection {
    std::vector<int> graph;

    friend bool operator==(const Bisection& a, const Bisection& b) { return a.graph == b.graph; }
};

std::vector<int> bisection_elements(const Bisection& L); // sorted element set

// alpha and beta restrict to bijections onto the base; asserted equal to the
// invertible-subset route with K = elementwise inverses.
bool is_bisection(const Groupoid& G, const std::vector<int>& subset);
Bisection to_bisection(const Groupoid& G, const std::vector<int>& subset); // NotABisection

// subset product {g1 g2 : beta(g1) == alpha(g2)}, sorted
std::vector<int> subset_product(const Groupoid& G, const std::vector<int>& A, const std::vector<int>& B);

Bisection unit_bisection(const Groupoid& G);
Bisection bisection_inverse(const Groupoid& G, const Bisection& L);
// the subset product of two bisections, which is again a bisection
Bisection bisection_product(const Groupoid& G, const Bisection& L1, const Bisection& L2);

// Support of a positive arity-2 element as a subset of Gamma x Gamma,
// element codes g * dim + h  (NotPositive).
std::vector<int> support_pairs(const HopfData& H, const TensorElement& a);

// R12 R13 R23 == R23 R13 R12 in the bisection group of Gamma^3, with
// R12 = R x E etc.  R is a bisection of Gamma x Gamma.
bool check_groupoid_ybe(const Groupoid& gamma, const Bisection& R);

// Set-theoretical solution on G+ x G+ (local indices):
//   R(u,v) = (u^eta(v), ^xi(u) v)
// map is stored row-major in (u,v).
struct SetSolution {
    int n = 0;
    std::vector<std::pair<int, int>> map;

    const std::pair<int, int>& at(int u, int v) const { return map[u * n + v]; }
};

// Builds the solution and asserts: bijectivity, the closed-form inverse
// (u,v) -> (^eta(v) u, v^xi(u)), the Yang-Baxter identity on all |G+|^3
// triples, the braid form, and agreement with the bisection action of
// support(R) on the unit Gamma-set.  Throws ConditionsFailed.
SetSolution set_solution(const UniqueFactorization& uf, const Homomorphism& xi, const Homomorphism& eta,
                         int jobs = 1);

// Left Gamma-set: J : X -> base, action act(g, x) defined when beta(g) == J(x).
struct GammaSet {
    int size = 0;
    std::vector<int> J;
    std::function<int(int, int)> act;
};

GammaSet unit_gamma_set(const Groupoid& G);    // X = base, J = id, g . beta(g) = alpha(g)
GammaSet regular_gamma_set(const Groupoid& G); // X = total, J = alpha, left product
void validate_gamma_set(const Groupoid& G, const GammaSet& X);

// Permutation of X x X (codes x*|X|+y) induced by the bisection action; the
// YBE on X^3 is asserted.  Throws NotAYBEBisection if R fails the groupoid YBE.
std::vector<int> gamma_set_solution(const Groupoid& gamma, const Bisection& R, const GammaSet& X);

// Group structure u*v = u (^xi(u^{-1}) v) on G+'s index set, isomorphic to
// G+' = {u xi(u^{-1})} via u -> u xi(u^{-1})  (NotAGroup).
FiniteGroup star_product(const UniqueFactorization& uf, const Homomorphism& xi);

// For a normal pair (trivial xi, eta): the solution is conjugation,
// R(u,v) = (v^{-1} * u * v, v) in the star product  (ConditionsFailed).
bool conjugate_form_check(const UniqueFactorization& uf, const Homomorphism& eta);

} // namespace qtr
