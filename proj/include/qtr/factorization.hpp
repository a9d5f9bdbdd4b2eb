#pragma once

#include "qtr/group.hpp"

#include <string>
#include <vector>

namespace qtr {

// Unique factorization G = G+G-: every g is g_plus * g_minus and also
// gbar_minus * gbar_plus, uniquely.  Re-factoring mixed products defines the
// four mutual actions:
//   x * u == lmp(x,u) * rmp(x,u)   (lmp in G+, rmp in G-)
//   u * x == lpm(u,x) * rpm(u,x)   (lpm in G-, rpm in G+)
// for u in G+, x in G-.
struct UniqueFactorization {
    FiniteGroup group;
    SubgroupRef plus, minus;
    FiniteGroup plus_group, minus_group; // subgroup views on local indices

    std::vector<int> plus_pos, minus_pos; // ambient -> local index, -1 outside
    std::vector<int> pm_plus, pm_minus;   // g = pm_plus[g] * pm_minus[g]
    std::vector<int> mp_minus, mp_plus;   // g = mp_minus[g] * mp_plus[g]

    // action tables, local-indexed, ambient-valued
    std::vector<std::vector<int>> act_lmp; // [x][u] in G+
    std::vector<std::vector<int>> act_rmp; // [x][u] in G-
    std::vector<std::vector<int>> act_lpm; // [u][x] in G-
    std::vector<std::vector<int>> act_rpm; // [u][x] in G+

    int np() const { return plus.size(); }
    int nm() const { return minus.size(); }
    int plus_at(int i) const { return plus.elements[i]; }
    int minus_at(int i) const { return minus.elements[i]; }

    // ambient-argument accessors
    int lmp(int x, int u) const { return act_lmp[minus_pos[x]][plus_pos[u]]; }
    int rmp(int x, int u) const { return act_rmp[minus_pos[x]][plus_pos[u]]; }
    int lpm(int u, int x) const { return act_lpm[plus_pos[u]][minus_pos[x]]; }
    int rpm(int u, int x) const { return act_rpm[plus_pos[u]][minus_pos[x]]; }

    // homomorphism G+ -> G- applied to an ambient element of G+, ambient result
    int apply_pm_hom(const Homomorphism& h, int u) const {
        return minus.elements[h.image[plus_pos[u]]];
    }
};

// Builds all tables and asserts every invariant (factor round trips, the
// compatibility identities, the inverse identities).
// Throws NotASubgroup / NotUniqueFactorization.
UniqueFactorization make_factorization(const FiniteGroup& G, const SubgroupRef& P, const SubgroupRef& M);

// All ordered subgroup pairs (P, M) forming a unique factorization, in
// subgroup-enumeration order.  (P, M) and (M, P) are distinct entries.
std::vector<UniqueFactorization> find_factorizations(const FiniteGroup& G);

// Exhaustive check of the compatibility and inverse identities of the four
// actions; on failure *witness names the first violating instance.
bool verify_action_identities(const UniqueFactorization& uf, std::string* witness = nullptr);

} // namespace qtr
