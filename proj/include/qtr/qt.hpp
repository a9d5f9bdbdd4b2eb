#pragma once

#include "qtr/hopf.hpp"

#include <string>
#include <vector>

namespace qtr {

// Positive quasi-triangular structure datum: a pair of homomorphisms
// xi, eta : G+ -> G- passing the ten condition equations.  Indices refer to
// the deterministic enumerate_homomorphisms order.
struct QTPair {
    int xi_index = -1;
    int eta_index = -1;
    Homomorphism xi, eta;
};

struct CondFlag {
    bool ok = true;
    std::string witness;
};

// The ten condition equations split into two equivalent blocks of five,
// plus the structural route (normality of the induced subgroups and the
// induced map F being an isomorphism).  The three routes agree for every
// input pair; that equivalence is itself asserted by the test suite.
struct ConditionReport {
    CondFlag eta_right, xi_left, eta_xi, eta_neg_p, xi_neg_p; // primary block
    CondFlag eta_left, xi_right, xi_eta, eta_neg, xi_neg;     // equivalent block
    bool plus_prime_normal = false;
    bool plus_dblprime_normal = false;
    bool f_is_isomorphism = false;

    bool primary_ok() const {
        return eta_right.ok && xi_left.ok && eta_xi.ok && eta_neg_p.ok && xi_neg_p.ok;
    }
    bool equivalent_ok() const {
        return eta_left.ok && xi_right.ok && xi_eta.ok && eta_neg.ok && xi_neg.ok;
    }
    bool structural_ok() const { return plus_prime_normal && plus_dblprime_normal && f_is_isomorphism; }
    bool all_ok() const { return primary_ok(); }
    std::string first_failure() const;
};

// Brute-force search point: a support of the bisection form with r == 1.
struct RCandidate {
    std::vector<int> phi, psi;   // row-major |G+| x |G+| tables, ambient G- values
    std::vector<Rational> r;     // all ones
    TensorElement R;
};

// Alternative description of a classified triple: a 1-cycle zeta of G- with
// coefficients in A plus an automorphism F of the semidirect product A x| G-.
struct CycleData {
    FiniteGroup A;
    FiniteGroup Gm;
    std::vector<std::vector<int>> action; // [x][a], G- acting on A by automorphisms
    std::vector<int> zeta;                // A -> G- (local indices)
    std::vector<int> F;                   // automorphism of A x| G-, index a*|Gm|+x
};

struct CycleTriple {
    UniqueFactorization uf;
    Homomorphism xi, eta;
};

ConditionReport check_pair_conditions(const UniqueFactorization& uf, const Homomorphism& xi,
                                      const Homomorphism& eta);

// R = sum over u,v in G+ of {u (eta(v)^u)^{-1}} (x) {v xi(u)}; exactly |G+|^2
// terms, all coefficients one.  Throws ConditionsFailed.
TensorElement build_R(const UniqueFactorization& uf, const Homomorphism& xi, const Homomorphism& eta);

struct QtCheck {
    bool ok = true;
    std::string failure;
    explicit operator bool() const { return ok; }
};

// Full quasi-triangularity check by exact tensor computation: counit axiom,
// both hexagon identities, the intertwiner identity on every basis element,
// and invertibility (candidate (S x id)R first, dense solve as fallback).
QtCheck verify_qt(const HopfData& H, const TensorElement& R, int jobs = 1);

// All (xi, eta) in Hom(G+,G-)^2 passing the conditions, ordered by
// (xi_index, eta_index).
std::vector<QTPair> classify(const UniqueFactorization& uf, int jobs = 1);

// Scans every support of the bisection form with r == 1 and keeps those
// passing verify_qt; independent of the condition equations.  Requires
// |G-|^(2|G+|^2) <= 1e7  (TooLarge).
std::vector<RCandidate> bruteforce_oracle(const UniqueFactorization& uf, int jobs = 1);

// (tau R) R == 1 (x) 1; asserted equal to (xi == eta).
bool check_triangular(const HopfData& H, const TensorElement& R, const Homomorphism& xi,
                      const Homomorphism& eta);

struct TriangularDatum {
    bool abelian_normal = false; // A = {u xi(u^{-1})} is an abelian normal subgroup
    bool identities = false;     // the two defining identities for xi alone
    bool agree() const { return abelian_normal == identities; }
};

TriangularDatum check_triangular_datum_routes(const UniqueFactorization& uf, const Homomorphism& xi);
// Both routes computed and required to agree (RouteMismatch otherwise).
bool check_triangular_datum(const UniqueFactorization& uf, const Homomorphism& xi);

// The correspondence between classified (G=G+G-, xi, eta) triples and
// (A x| G-, zeta, F) triples, in both directions.
CycleData to_cycle_data(const UniqueFactorization& uf, const Homomorphism& xi, const Homomorphism& eta);
CycleTriple from_cycle_data(const CycleData& cd); // InvalidCycleData

// 1-cycle law and the two F conditions; used by both directions.
bool validate_cycle_data(const CycleData& cd, std::string* witness = nullptr);

} // namespace qtr
