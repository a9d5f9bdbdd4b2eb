#pragma once

#include "qtr/qt.hpp"

#include <vector>

namespace qtr {

// Shift between two unique factorizations sharing G and G-:
// G+' = {sigma(u) u : u in G+}.  sigma is stored on local G+ indices with
// ambient G- values.
struct ShiftMap {
    UniqueFactorization uf;       // standard factorization G = G+ G-
    UniqueFactorization uf_prime; // shifted factorization G = G+' G-
    std::vector<int> sigma;

    int sigma_at(int u_ambient) const { return sigma[uf.plus_pos[u_ambient]]; }
};

// Quasi-isomorphism (phi, T) from H(G;G+',G-) to H(G;G+,G-):
// phi{sigma(u) u x}' = {u x}  and  T = sum {u sigma(v)} (x) {v}.
struct QuasiIso {
    ShiftMap shift;
    HopfData source; // H(G;G+',G-)
    HopfData target; // H(G;G+,G-)
    std::vector<int> phi;     // source basis -> target basis (a permutation of G)
    std::vector<int> phi_inv;
    TensorElement T, T_inv;   // elements of the target tensor square
};

// Solves sigma(u) u in G+' for sigma; asserts the subgroup condition
// sigma((u^sigma(v)) v) == sigma(u) (^u sigma(v)).
// Throws IncompatibleFactorizations when G or G- differ.
ShiftMap make_shift(const UniqueFactorization& uf, const UniqueFactorization& uf_prime);

// Builds (phi, T), verifies that phi is an algebra isomorphism, that it
// intertwines the two coproducts through conjugation by T, and the cocycle
// identity (T x 1)(Delta x id)T == (1 x T)(id x Delta)T.  T^{-1} uses the
// closed form sum {u sigma(v)^{-1}} (x) {v}, cross-checked by multiplication.
QuasiIso build_quasi_iso(const ShiftMap& shift);

struct NormalizeResult {
    UniqueFactorization uf_prime;
    Homomorphism xi_prime, eta_prime;
    int xi_prime_index = -1, eta_prime_index = -1; // indices in Hom(G+',G-)
    TensorElement R_prime;                         // over H(G;G+',G-)
    QuasiIso qi;
};

// Twists (xi, eta) by the shift sigma(u) = xi(u^{-1}) into a normal structure:
// xi' trivial and eta'(xi(v^{-1})v) = xi(v)^{-1} eta(v).  R' is computed by
// conjugation and pullback, then independently validated against build_R of
// the induced pair; both routes must agree.  Throws ConditionsFailed.
NormalizeResult normalize_qt(const UniqueFactorization& uf, const Homomorphism& xi, const Homomorphism& eta);

bool is_normal_qt(const UniqueFactorization& uf, const Homomorphism& xi);

// tau Delta{g} == Delta{g} for every basis element.
bool check_cocommutative(const HopfData& H);

} // namespace qtr
