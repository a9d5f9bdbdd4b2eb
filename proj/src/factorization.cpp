#include "qtr/factorization.hpp"

#include "qtr/error.hpp"

namespace qtr {

UniqueFactorization make_factorization(const FiniteGroup& G, const SubgroupRef& P, const SubgroupRef& M) {
    if (!is_subgroup(G, P.elements))
        throw DomainError("NotASubgroup", "G+ candidate is not a subgroup of " + G.name);
    if (!is_subgroup(G, M.elements))
        throw DomainError("NotASubgroup", "G- candidate is not a subgroup of " + G.name);

    const int n = G.order;
    if (P.size() * M.size() != n)
        throw DomainError("NotUniqueFactorization", "|G+|*|G-| = " + std::to_string(P.size()) + "*" +
                                                        std::to_string(M.size()) + " != |G| = " + std::to_string(n));

    UniqueFactorization uf;
    uf.group = G;
    uf.plus = P;
    uf.minus = M;
    uf.plus_group = subgroup_group(G, P);
    uf.minus_group = subgroup_group(G, M);

    uf.plus_pos.assign(n, -1);
    uf.minus_pos.assign(n, -1);
    for (int i = 0; i < P.size(); ++i) uf.plus_pos[P.elements[i]] = i;
    for (int i = 0; i < M.size(); ++i) uf.minus_pos[M.elements[i]] = i;

    uf.pm_plus.assign(n, -1);
    uf.pm_minus.assign(n, -1);
    for (int u : P.elements) {
        for (int x : M.elements) {
            int g = G.mul(u, x);
            if (uf.pm_plus[g] >= 0)
                throw DomainError("NotUniqueFactorization",
                                  "product collision: " + G.label(uf.pm_plus[g]) + "*" + G.label(uf.pm_minus[g]) +
                                      " = " + G.label(u) + "*" + G.label(x) + " = " + G.label(g));
            uf.pm_plus[g] = u;
            uf.pm_minus[g] = x;
        }
    }

    uf.mp_minus.assign(n, -1);
    uf.mp_plus.assign(n, -1);
    for (int x : M.elements) {
        for (int u : P.elements) {
            int g = G.mul(x, u);
            if (uf.mp_minus[g] >= 0)
                throw DomainError("NotUniqueFactorization", "minus-plus product collision at " + G.label(g));
            uf.mp_minus[g] = x;
            uf.mp_plus[g] = u;
        }
    }

    // actions read off the factor tables
    uf.act_lmp.assign(M.size(), std::vector<int>(P.size()));
    uf.act_rmp.assign(M.size(), std::vector<int>(P.size()));
    for (int xi = 0; xi < M.size(); ++xi) {
        for (int ui = 0; ui < P.size(); ++ui) {
            int g = G.mul(M.elements[xi], P.elements[ui]);
            uf.act_lmp[xi][ui] = uf.pm_plus[g];
            uf.act_rmp[xi][ui] = uf.pm_minus[g];
        }
    }
    uf.act_lpm.assign(P.size(), std::vector<int>(M.size()));
    uf.act_rpm.assign(P.size(), std::vector<int>(M.size()));
    for (int ui = 0; ui < P.size(); ++ui) {
        for (int xi = 0; xi < M.size(); ++xi) {
            int g = G.mul(P.elements[ui], M.elements[xi]);
            uf.act_lpm[ui][xi] = uf.mp_minus[g];
            uf.act_rpm[ui][xi] = uf.mp_plus[g];
        }
    }

    for (int g = 0; g < n; ++g) {
        if (G.mul(uf.pm_plus[g], uf.pm_minus[g]) != g || G.mul(uf.mp_minus[g], uf.mp_plus[g]) != g)
            throw DomainError("NotUniqueFactorization", "factor table round trip failed at " + G.label(g));
    }
    std::string w;
    if (!verify_action_identities(uf, &w))
        throw DomainError("NotUniqueFactorization", "action identities failed: " + w);
    return uf;
}

std::vector<UniqueFactorization> find_factorizations(const FiniteGroup& G) {
    std::vector<SubgroupRef> subs = enumerate_subgroups(G);
    std::vector<UniqueFactorization> out;
    for (const SubgroupRef& P : subs) {
        for (const SubgroupRef& M : subs) {
            if (P.size() * M.size() != G.order) continue;
            // unique factorization iff the product map is injective
            std::vector<char> hit(G.order, 0);
            bool ok = true;
            for (int u : P.elements) {
                for (int x : M.elements) {
                    int g = G.mul(u, x);
                    if (hit[g]) {
                        ok = false;
                        break;
                    }
                    hit[g] = 1;
                }
                if (!ok) break;
            }
            if (ok) out.push_back(make_factorization(G, P, M));
        }
    }
    return out;
}

bool verify_action_identities(const UniqueFactorization& uf, std::string* witness) {
    const FiniteGroup& G = uf.group;
    auto fail = [&](const std::string& what) {
        if (witness) *witness = what;
        return false;
    };

    // defining relations
    for (int x : uf.minus.elements)
        for (int u : uf.plus.elements) {
            if (G.mul(x, u) != G.mul(uf.lmp(x, u), uf.rmp(x, u)))
                return fail("x*u != lmp*rmp at x=" + G.label(x) + " u=" + G.label(u));
            if (G.mul(u, x) != G.mul(uf.lpm(u, x), uf.rpm(u, x)))
                return fail("u*x != lpm*rpm at u=" + G.label(u) + " x=" + G.label(x));
        }

    // compatibility identities
    for (int u : uf.plus.elements)
        for (int x : uf.minus.elements)
            for (int y : uf.minus.elements)
                // ^u(xy) = (^u x) (^(u^x) y)
                if (uf.lpm(u, G.mul(x, y)) != G.mul(uf.lpm(u, x), uf.lpm(uf.rpm(u, x), y)))
                    return fail("lpm(u,xy) identity at u=" + G.label(u) + " x=" + G.label(x) + " y=" + G.label(y));
    for (int v : uf.plus.elements)
        for (int u : uf.plus.elements)
            for (int x : uf.minus.elements) {
                // (vu)^x = v^(^u x) u^x
                if (uf.rpm(G.mul(v, u), x) != G.mul(uf.rpm(v, uf.lpm(u, x)), uf.rpm(u, x)))
                    return fail("rpm(vu,x) identity at v=" + G.label(v) + " u=" + G.label(u) + " x=" + G.label(x));
                // ^x(uv) = (^x u) (^(x^u) v)
                if (uf.lmp(x, G.mul(u, v)) != G.mul(uf.lmp(x, u), uf.lmp(uf.rmp(x, u), v)))
                    return fail("lmp(x,uv) identity at x=" + G.label(x) + " u=" + G.label(u) + " v=" + G.label(v));
            }
    for (int y : uf.minus.elements)
        for (int x : uf.minus.elements)
            for (int u : uf.plus.elements)
                // (yx)^u = y^(^x u) x^u
                if (uf.rmp(G.mul(y, x), u) != G.mul(uf.rmp(y, uf.lmp(x, u)), uf.rmp(x, u)))
                    return fail("rmp(yx,u) identity at y=" + G.label(y) + " x=" + G.label(x) + " u=" + G.label(u));

    // inverse identities
    for (int u : uf.plus.elements)
        for (int x : uf.minus.elements) {
            // (u^x)^{-1} = ^(x^{-1}) (u^{-1})
            if (G.inv(uf.rpm(u, x)) != uf.lmp(G.inv(x), G.inv(u)))
                return fail("inverse of rpm at u=" + G.label(u) + " x=" + G.label(x));
            // (^x u)^{-1} = (u^{-1})^(x^{-1})
            if (G.inv(uf.lmp(x, u)) != uf.rpm(G.inv(u), G.inv(x)))
                return fail("inverse of lmp at x=" + G.label(x) + " u=" + G.label(u));
            // (x^u)^{-1} = ^(u^{-1}) (x^{-1})
            if (G.inv(uf.rmp(x, u)) != uf.lpm(G.inv(u), G.inv(x)))
                return fail("inverse of rmp at x=" + G.label(x) + " u=" + G.label(u));
            // (^u x)^{-1} = (x^{-1})^(u^{-1})
            if (G.inv(uf.lpm(u, x)) != uf.rmp(G.inv(x), G.inv(u)))
                return fail("inverse of lpm at u=" + G.label(u) + " x=" + G.label(x));
        }
    return true;
}

} // namespace qtr
