#include "qtr/twist.hpp"

#include "qtr/error.hpp"

#include <algorithm>

namespace qtr {

ShiftMap make_shift(const UniqueFactorization& uf, const UniqueFactorization& uf_prime) {
    if (uf.group.table != uf_prime.group.table)
        throw DomainError("IncompatibleFactorizations", "the two factorizations live on different groups");
    if (!(uf.minus == uf_prime.minus))
        throw DomainError("IncompatibleFactorizations", "the two factorizations have different G-");

    const FiniteGroup& G = uf.group;
    ShiftMap s;
    s.uf = uf;
    s.uf_prime = uf_prime;
    s.sigma.assign(uf.np(), -1);
    // every g' in G+' is uniquely x*u with x in G-, u in G+; set sigma(u) = x
    for (int gp : uf_prime.plus.elements) {
        int u = uf.mp_plus[gp];
        int x = uf.mp_minus[gp];
        if (s.sigma[uf.plus_pos[u]] >= 0)
            throw DomainError("IncompatibleFactorizations", "G+' does not define a single-valued shift");
        s.sigma[uf.plus_pos[u]] = x;
    }
    for (int v : s.sigma)
        if (v < 0) throw DomainError("IncompatibleFactorizations", "G+' misses some G+ component");

    // subgroup condition: sigma((u^sigma(v)) v) == sigma(u) (^u sigma(v))
    for (int u : uf.plus.elements)
        for (int v : uf.plus.elements) {
            int sv = s.sigma_at(v);
            int lhs = s.sigma_at(G.mul(uf.rpm(u, sv), v));
            int rhs = G.mul(s.sigma_at(u), uf.lpm(u, sv));
            if (lhs != rhs)
                throw DomainError("IncompatibleFactorizations",
                                  "shift fails the subgroup condition at (u,v)=(" + G.label(u) + "," +
                                      G.label(v) + ")");
        }
    return s;
}

QuasiIso build_quasi_iso(const ShiftMap& shift) {
    const UniqueFactorization& uf = shift.uf;
    const UniqueFactorization& ufp = shift.uf_prime;
    const FiniteGroup& G = uf.group;
    const int n = G.order;

    QuasiIso q;
    q.shift = shift;
    q.source = build_hopf(ufp);
    q.target = build_hopf(uf);

    // phi{sigma(u) u x}' = {u x}
    q.phi.assign(n, -1);
    for (int g = 0; g < n; ++g) {
        int gp = ufp.pm_plus[g];        // sigma(u) u
        int x = ufp.pm_minus[g];
        int u = uf.mp_plus[gp];
        q.phi[g] = G.mul(u, x);
    }
    q.phi_inv.assign(n, -1);
    for (int g = 0; g < n; ++g) {
        if (q.phi[g] < 0 || q.phi_inv[q.phi[g]] >= 0)
            throw DomainError("InternalError", "phi is not a basis bijection");
        q.phi_inv[q.phi[g]] = g;
    }

    q.T.arity = 2;
    q.T_inv.arity = 2;
    for (int u : uf.plus.elements)
        for (int v : uf.plus.elements) {
            int sv = shift.sigma_at(v);
            q.T.coeffs.emplace(Tuple{G.mul(u, sv), v}, Rational(1));
            q.T_inv.coeffs.emplace(Tuple{G.mul(u, G.inv(sv)), v}, Rational(1));
        }
    TensorElement one2 = unit_element(q.target, 2);
    if (!(product_k(q.target, q.T, q.T_inv) == one2) || !(product_k(q.target, q.T_inv, q.T) == one2))
        throw DomainError("InternalError", "closed-form T^{-1} does not invert T");

    // phi is an algebra isomorphism
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h) {
            int p = q.source.mult[g][h];
            int lhs = p < 0 ? -1 : q.phi[p];
            int rhs = q.target.mult[q.phi[g]][q.phi[h]];
            if (lhs != rhs)
                throw DomainError("InternalError", "phi does not preserve multiplication at ({" + G.label(g) +
                                                       "}',{" + G.label(h) + "}')");
        }
    TensorElement unit_src = unit_element(q.source, 1);
    TensorElement unit_mapped = zero_element(1);
    for (const auto& [t, c] : unit_src.coeffs) unit_mapped.add_term({q.phi[t[0]]}, c);
    if (!(unit_mapped == unit_element(q.target, 1)))
        throw DomainError("InternalError", "phi does not preserve the unit");

    // (phi x phi) Delta'{g}' == T (Delta phi{g}') T^{-1}
    for (int g = 0; g < n; ++g) {
        TensorElement lhs = zero_element(2);
        for (const auto& [l, r] : q.source.comult[g]) lhs.add_term({q.phi[l], q.phi[r]}, Rational(1));
        TensorElement mid = slot_map(q.target, basis_element({q.phi[g]}), 0, StructureMap::Comult);
        TensorElement rhs = product_k(q.target, product_k(q.target, q.T, mid), q.T_inv);
        if (!(lhs == rhs))
            throw DomainError("InternalError", "coproduct intertwining fails at {" + G.label(g) + "}'");
    }

    // cocycle identity
    TensorElement lhs3 = product_k(q.target, embed_slots(q.target, q.T, 3, {0, 1}),
                                   slot_map(q.target, q.T, 0, StructureMap::Comult));
    TensorElement rhs3 = product_k(q.target, embed_slots(q.target, q.T, 3, {1, 2}),
                                   slot_map(q.target, q.T, 1, StructureMap::Comult));
    if (!(lhs3 == rhs3)) throw DomainError("InternalError", "cocycle identity fails for T");

    return q;
}

NormalizeResult normalize_qt(const UniqueFactorization& uf, const Homomorphism& xi, const Homomorphism& eta) {
    ConditionReport rep = check_pair_conditions(uf, xi, eta);
    if (!rep.all_ok()) throw DomainError("ConditionsFailed", rep.first_failure());

    const FiniteGroup& G = uf.group;
    auto xa = [&](int u) { return uf.apply_pm_hom(xi, u); };
    auto ea = [&](int u) { return uf.apply_pm_hom(eta, u); };

    // G+' = {xi(u^{-1}) u}
    std::vector<int> gp;
    for (int u : uf.plus.elements) gp.push_back(G.mul(xa(G.inv(u)), u));
    std::sort(gp.begin(), gp.end());

    NormalizeResult res;
    res.uf_prime = make_factorization(G, SubgroupRef{gp}, uf.minus);
    ShiftMap shift = make_shift(uf, res.uf_prime);
    for (int ui = 0; ui < uf.np(); ++ui)
        if (shift.sigma[ui] != xa(G.inv(uf.plus_at(ui))))
            throw DomainError("InternalError", "shift disagrees with sigma(u) = xi(u^{-1})");
    res.qi = build_quasi_iso(shift);

    // R' = (phi x phi)^{-1} ((tau T) R T^{-1})
    TensorElement R = build_R(uf, xi, eta);
    TensorElement conj = product_k(res.qi.target, product_k(res.qi.target, tau_swap(res.qi.T, 0, 1), R),
                                   res.qi.T_inv);
    res.R_prime.arity = 2;
    for (const auto& [t, c] : conj.coeffs)
        res.R_prime.coeffs.emplace(Tuple{res.qi.phi_inv[t[0]], res.qi.phi_inv[t[1]]}, c);

    // induced pair: xi' trivial, eta'(xi(v^{-1})v) = xi(v)^{-1} eta(v)
    res.xi_prime = trivial_homomorphism(res.uf_prime.plus_group, res.uf_prime.minus_group);
    res.eta_prime.image.assign(res.uf_prime.np(), -1);
    for (int v : uf.plus.elements) {
        int vp = G.mul(xa(G.inv(v)), v);
        res.eta_prime.image[res.uf_prime.plus_pos[vp]] = uf.minus_pos[G.mul(G.inv(xa(v)), ea(v))];
    }
    if (!is_homomorphism(res.uf_prime.plus_group, res.uf_prime.minus_group, res.eta_prime))
        throw DomainError("InternalError", "eta' is not a homomorphism");

    ConditionReport rep2 = check_pair_conditions(res.uf_prime, res.xi_prime, res.eta_prime);
    if (!rep2.all_ok())
        throw DomainError("InternalError", "normalized pair fails conditions: " + rep2.first_failure());

    // the conjugation route and the induced-pair route must agree
    if (!(build_R(res.uf_prime, res.xi_prime, res.eta_prime) == res.R_prime))
        throw DomainError("InternalError", "R' from conjugation disagrees with R' from the induced pair");
    QtCheck qc = verify_qt(res.qi.source, res.R_prime);
    if (!qc.ok) throw DomainError("InternalError", "R' fails verify_qt: " + qc.failure);

    std::vector<Homomorphism> homs =
        enumerate_homomorphisms(res.uf_prime.plus_group, res.uf_prime.minus_group);
    for (size_t i = 0; i < homs.size(); ++i) {
        if (homs[i] == res.xi_prime) res.xi_prime_index = static_cast<int>(i);
        if (homs[i] == res.eta_prime) res.eta_prime_index = static_cast<int>(i);
    }
    return res;
}

bool is_normal_qt(const UniqueFactorization& uf, const Homomorphism& xi) {
    return xi == trivial_homomorphism(uf.plus_group, uf.minus_group);
}

bool check_cocommutative(const HopfData& H) {
    for (int g = 0; g < H.dim(); ++g) {
        TensorElement d = slot_map(H, basis_element({g}), 0, StructureMap::Comult);
        if (!(tau_swap(d, 0, 1) == d)) return false;
    }
    return true;
}

} // namespace qtr
