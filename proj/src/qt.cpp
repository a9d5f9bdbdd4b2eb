#include "qtr/qt.hpp"

#include "qtr/error.hpp"
#include "qtr/parallel.hpp"

#include <algorithm>

namespace qtr {

namespace {

void require_pm_hom(const UniqueFactorization& uf, const Homomorphism& h, const char* which) {
    if (!is_homomorphism(uf.plus_group, uf.minus_group, h))
        throw DomainError("NotAHomomorphism", std::string(which) + " is not a homomorphism G+ -> G-");
}

std::vector<int> plus_prime_set(const UniqueFactorization& uf, const Homomorphism& xi) {
    const FiniteGroup& G = uf.group;
    std::vector<int> s;
    s.reserve(uf.np());
    for (int u : uf.plus.elements) s.push_back(G.mul(u, uf.apply_pm_hom(xi, G.inv(u))));
    std::sort(s.begin(), s.end());
    return s;
}

std::vector<int> plus_dblprime_set(const UniqueFactorization& uf, const Homomorphism& eta) {
    const FiniteGroup& G = uf.group;
    std::vector<int> s;
    s.reserve(uf.np());
    for (int u : uf.plus.elements) s.push_back(G.mul(uf.apply_pm_hom(eta, G.inv(u)), u));
    std::sort(s.begin(), s.end());
    return s;
}

} // namespace

std::string ConditionReport::first_failure() const {
    const std::pair<const CondFlag*, const char*> flags[] = {
        {&eta_right, "eta_right"}, {&xi_left, "xi_left"},   {&eta_xi, "eta_xi"},
        {&eta_neg_p, "eta_neg_p"}, {&xi_neg_p, "xi_neg_p"}, {&eta_left, "eta_left"},
        {&xi_right, "xi_right"},   {&xi_eta, "xi_eta"},     {&eta_neg, "eta_neg"},
        {&xi_neg, "xi_neg"},
    };
    for (auto [f, name] : flags)
        if (!f->ok) return std::string(name) + " fails at " + f->witness;
    return "";
}

ConditionReport check_pair_conditions(const UniqueFactorization& uf, const Homomorphism& xi,
                                      const Homomorphism& eta) {
    require_pm_hom(uf, xi, "xi");
    require_pm_hom(uf, eta, "eta");

    const FiniteGroup& G = uf.group;
    auto xa = [&](int u) { return uf.apply_pm_hom(xi, u); };
    auto ea = [&](int u) { return uf.apply_pm_hom(eta, u); };

    ConditionReport rep;
    auto check_uv = [&](CondFlag& flag, auto eq) {
        for (int u : uf.plus.elements)
            for (int v : uf.plus.elements)
                if (!eq(u, v)) {
                    flag.ok = false;
                    flag.witness = "(u,v)=(" + G.label(u) + "," + G.label(v) + ")";
                    return;
                }
    };
    auto check_xu = [&](CondFlag& flag, auto eq) {
        for (int x : uf.minus.elements)
            for (int u : uf.plus.elements)
                if (!eq(x, u)) {
                    flag.ok = false;
                    flag.witness = "(x,u)=(" + G.label(x) + "," + G.label(u) + ")";
                    return;
                }
    };

    // xi(u)^v == xi(u^eta(v))
    check_uv(rep.eta_right, [&](int u, int v) { return uf.rmp(xa(u), v) == xa(uf.rpm(u, ea(v))); });
    // ^u eta(v) == eta(^xi(u) v)
    check_uv(rep.xi_left, [&](int u, int v) { return uf.lpm(u, ea(v)) == ea(uf.lmp(xa(u), v)); });
    // uv == (^xi(u) v)(u^eta(v))
    check_uv(rep.eta_xi,
             [&](int u, int v) { return G.mul(u, v) == G.mul(uf.lmp(xa(u), v), uf.rpm(u, ea(v))); });
    // xi(^x u) x^u == x xi(u)
    check_xu(rep.eta_neg_p,
             [&](int x, int u) { return G.mul(xa(uf.lmp(x, u)), uf.rmp(x, u)) == G.mul(x, xa(u)); });
    // eta(^x u) x^u == x eta(u)
    check_xu(rep.xi_neg_p,
             [&](int x, int u) { return G.mul(ea(uf.lmp(x, u)), uf.rmp(x, u)) == G.mul(x, ea(u)); });

    // ^v xi(u) == xi(^eta(v) u)
    check_uv(rep.eta_left, [&](int u, int v) { return uf.lpm(v, xa(u)) == xa(uf.lmp(ea(v), u)); });
    // eta(v)^u == eta(v^xi(u))
    check_uv(rep.xi_right, [&](int u, int v) { return uf.rmp(ea(v), u) == ea(uf.rpm(v, xa(u))); });
    // uv == (^eta(u) v)(u^xi(v))
    check_uv(rep.xi_eta,
             [&](int u, int v) { return G.mul(u, v) == G.mul(uf.lmp(ea(u), v), uf.rpm(u, xa(v))); });
    // ^u x xi(u^x) == xi(u) x
    check_xu(rep.eta_neg,
             [&](int x, int u) { return G.mul(uf.lpm(u, x), xa(uf.rpm(u, x))) == G.mul(xa(u), x); });
    // ^u x eta(u^x) == eta(u) x
    check_xu(rep.xi_neg,
             [&](int x, int u) { return G.mul(uf.lpm(u, x), ea(uf.rpm(u, x))) == G.mul(ea(u), x); });

    // structural route: normality of G+' and G+'', F an isomorphism
    std::vector<int> gp = plus_prime_set(uf, xi);
    std::vector<int> gpp = plus_dblprime_set(uf, eta);
    bool gp_sub = is_subgroup(G, gp);
    bool gpp_sub = is_subgroup(G, gpp);
    rep.plus_prime_normal = gp_sub && is_normal(G, SubgroupRef{gp});
    rep.plus_dblprime_normal = gpp_sub && is_normal(G, SubgroupRef{gpp});

    // F(u xi(u^{-1})) = eta(u) u^{-1}; the preimage u is the G+ part of the argument
    rep.f_is_isomorphism = gp_sub && gpp_sub;
    if (rep.f_is_isomorphism) {
        auto F = [&](int a) {
            int u = uf.pm_plus[a];
            return G.mul(ea(u), G.inv(u));
        };
        for (int a : gp) {
            for (int b : gp) {
                int ab = G.mul(a, b);
                if (!std::binary_search(gp.begin(), gp.end(), ab) || F(ab) != G.mul(F(a), F(b))) {
                    rep.f_is_isomorphism = false;
                    break;
                }
            }
            if (!rep.f_is_isomorphism) break;
        }
    }
    return rep;
}

TensorElement build_R(const UniqueFactorization& uf, const Homomorphism& xi, const Homomorphism& eta) {
    ConditionReport rep = check_pair_conditions(uf, xi, eta);
    if (!rep.all_ok()) throw DomainError("ConditionsFailed", rep.first_failure());

    const FiniteGroup& G = uf.group;
    TensorElement R;
    R.arity = 2;
    for (int u : uf.plus.elements) {
        for (int v : uf.plus.elements) {
            int left = G.mul(u, G.inv(uf.rmp(uf.apply_pm_hom(eta, v), u)));
            int right = G.mul(v, uf.apply_pm_hom(xi, u));
            R.coeffs.emplace(Tuple{left, right}, Rational(1));
        }
    }
    if (R.support_size() != uf.np() * uf.np())
        throw DomainError("InternalError", "R must have exactly |G+|^2 distinct terms");
    return R;
}

QtCheck verify_qt(const HopfData& H, const TensorElement& R, int jobs) {
    if (R.arity != 2) throw DomainError("ArityMismatch", "quasi-triangular candidate must have arity 2");
    TensorElement one1 = unit_element(H, 1);

    if (!(slot_map(H, R, 0, StructureMap::Counit) == one1))
        return {false, "(eps x id)R != 1"};
    if (!(slot_map(H, R, 1, StructureMap::Counit) == one1))
        return {false, "(id x eps)R != 1"};

    TensorElement r13 = embed_slots(H, R, 3, {0, 2});
    if (!(slot_map(H, R, 0, StructureMap::Comult) == product_k(H, r13, embed_slots(H, R, 3, {1, 2}))))
        return {false, "(Delta x id)R != R13 R23"};
    if (!(slot_map(H, R, 1, StructureMap::Comult) == product_k(H, r13, embed_slots(H, R, 3, {0, 1}))))
        return {false, "(id x Delta)R != R13 R12"};

    // With the counit and hexagon identities in hand, a quasi-triangular R
    // must have (S x id)R as its inverse, so the candidate check is decisive;
    // the dense solve only ever runs on small non-classified inputs.
    TensorElement cand = slot_map(H, R, 0, StructureMap::Antipode);
    bool invertible = try_invert(H, R, &cand).has_value();
    if (!invertible) {
        long long d = 1;
        for (int s = 0; s < 2; ++s) d *= H.dim();
        if (d <= 2000) invertible = try_invert(H, R).has_value();
    }
    if (!invertible) return {false, "R is not invertible"};

    long long bad = par::first_failure(
        H.dim(),
        [&](long long g) {
            TensorElement d = slot_map(H, basis_element({static_cast<int>(g)}), 0, StructureMap::Comult);
            return product_k(H, tau_swap(d, 0, 1), R) == product_k(H, R, d);
        },
        jobs);
    if (bad >= 0)
        return {false, "tau Delta(g) R != R Delta(g) at g = " + H.uf.group.label(static_cast<int>(bad))};
    return {};
}

std::vector<QTPair> classify(const UniqueFactorization& uf, int jobs) {
    std::vector<Homomorphism> homs = enumerate_homomorphisms(uf.plus_group, uf.minus_group);
    const long long nh = static_cast<long long>(homs.size());
    std::vector<char> pass(nh * nh, 0);
    par::for_each_index(
        nh * nh,
        [&](long long idx) {
            const Homomorphism& xi = homs[idx / nh];
            const Homomorphism& eta = homs[idx % nh];
            pass[idx] = check_pair_conditions(uf, xi, eta).all_ok() ? 1 : 0;
        },
        jobs);
    std::vector<QTPair> out;
    for (long long idx = 0; idx < nh * nh; ++idx)
        if (pass[idx])
            out.push_back(QTPair{static_cast<int>(idx / nh), static_cast<int>(idx % nh),
                                 homs[idx / nh], homs[idx % nh]});
    return out;
}

std::vector<RCandidate> bruteforce_oracle(const UniqueFactorization& uf, int jobs) {
    const int np = uf.np(), nm = uf.nm();
    const int cells = 2 * np * np;
    long long total = 1;
    for (int i = 0; i < cells; ++i) {
        total *= nm;
        if (total > 10000000LL)
            throw DomainError("TooLarge", "oracle needs |G-|^(2|G+|^2) <= 1e7");
    }

    HopfData H = build_hopf(uf);
    const FiniteGroup& G = uf.group;
    std::vector<char> pass(total, 0);

    auto build_candidate = [&](long long c) {
        // base-|G-| digits: phi row-major, then psi row-major
        std::vector<int> digits(cells);
        for (int i = cells - 1; i >= 0; --i) {
            digits[i] = static_cast<int>(c % nm);
            c /= nm;
        }
        RCandidate cand;
        cand.phi.resize(np * np);
        cand.psi.resize(np * np);
        cand.r.assign(np * np, Rational(1));
        cand.R.arity = 2;
        for (int ui = 0; ui < np; ++ui) {
            for (int vi = 0; vi < np; ++vi) {
                int cell = ui * np + vi;
                cand.phi[cell] = uf.minus_at(digits[cell]);
                cand.psi[cell] = uf.minus_at(digits[np * np + cell]);
                Tuple t{G.mul(uf.plus_at(ui), cand.phi[cell]), G.mul(uf.plus_at(vi), cand.psi[cell])};
                cand.R.coeffs.emplace(std::move(t), Rational(1));
            }
        }
        return cand;
    };

    par::for_each_index(
        total, [&](long long c) { pass[c] = verify_qt(H, build_candidate(c).R, 1).ok ? 1 : 0; }, jobs);

    std::vector<RCandidate> out;
    for (long long c = 0; c < total; ++c)
        if (pass[c]) out.push_back(build_candidate(c));
    return out;
}

bool check_triangular(const HopfData& H, const TensorElement& R, const Homomorphism& xi,
                      const Homomorphism& eta) {
    bool tri = product_k(H, tau_swap(R, 0, 1), R) == unit_element(H, 2);
    if (tri != (xi == eta))
        throw DomainError("RouteMismatch", "(tau R)R == 1x1 disagrees with xi == eta");
    return tri;
}

TriangularDatum check_triangular_datum_routes(const UniqueFactorization& uf, const Homomorphism& xi) {
    require_pm_hom(uf, xi, "xi");
    const FiniteGroup& G = uf.group;
    auto xa = [&](int u) { return uf.apply_pm_hom(xi, u); };

    TriangularDatum d;
    std::vector<int> A = plus_prime_set(uf, xi);
    bool sub = is_subgroup(G, A);
    bool abelian = sub;
    if (sub)
        for (size_t i = 0; i < A.size() && abelian; ++i)
            for (size_t j = i + 1; j < A.size() && abelian; ++j)
                abelian = G.mul(A[i], A[j]) == G.mul(A[j], A[i]);
    d.abelian_normal = sub && abelian && is_normal(G, SubgroupRef{A});

    d.identities = true;
    for (int u : uf.plus.elements)
        for (int v : uf.plus.elements)
            if (G.mul(u, v) != G.mul(uf.lmp(xa(u), v), uf.rpm(u, xa(v)))) d.identities = false;
    for (int x : uf.minus.elements)
        for (int u : uf.plus.elements)
            if (G.mul(xa(uf.lmp(x, u)), uf.rmp(x, u)) != G.mul(x, xa(u))) d.identities = false;
    return d;
}

bool check_triangular_datum(const UniqueFactorization& uf, const Homomorphism& xi) {
    TriangularDatum d = check_triangular_datum_routes(uf, xi);
    if (!d.agree())
        throw DomainError("RouteMismatch", "abelian-normal route disagrees with the identity route");
    return d.abelian_normal;
}

bool validate_cycle_data(const CycleData& cd, std::string* witness) {
    auto fail = [&](const std::string& w) {
        if (witness) *witness = w;
        return false;
    };
    const int na = cd.A.order, nh = cd.Gm.order;
    if (static_cast<int>(cd.zeta.size()) != na) return fail("zeta has wrong size");
    for (int z : cd.zeta)
        if (z < 0 || z >= nh) return fail("zeta value out of range");
    if (static_cast<int>(cd.action.size()) != nh) return fail("action has wrong shape");

    // 1-cycle law: zeta(a) zeta(b) == zeta(a * (zeta(a)·b))
    for (int a = 0; a < na; ++a)
        for (int b = 0; b < na; ++b)
            if (cd.Gm.mul(cd.zeta[a], cd.zeta[b]) != cd.zeta[cd.A.mul(a, cd.action[cd.zeta[a]][b])])
                return fail("1-cycle law at (a,b)=(" + cd.A.label(a) + "," + cd.A.label(b) + ")");

    FiniteGroup S = semidirect_product(cd.A, cd.Gm, cd.action);
    if (static_cast<int>(cd.F.size()) != S.order) return fail("F has wrong size");
    if (!is_isomorphism(S, S, cd.F)) return fail("F is not an automorphism of A x| G-");
    for (int x = 0; x < nh; ++x)
        if (cd.F[cd.A.id() * nh + x] != cd.A.id() * nh + x) return fail("F does not fix G-");
    for (int a = 0; a < na; ++a) {
        int emb = a * nh + cd.Gm.id();
        if (S.mul(cd.F[emb], emb) / nh != cd.A.id()) return fail("F(a)a is not in G-");
    }
    return true;
}

CycleData to_cycle_data(const UniqueFactorization& uf, const Homomorphism& xi, const Homomorphism& eta) {
    ConditionReport rep = check_pair_conditions(uf, xi, eta);
    if (!rep.all_ok()) throw DomainError("ConditionsFailed", rep.first_failure());

    const FiniteGroup& G = uf.group;
    auto xa = [&](int u) { return uf.apply_pm_hom(xi, u); };
    auto ea = [&](int u) { return uf.apply_pm_hom(eta, u); };

    CycleData cd;
    SubgroupRef A_ref{plus_prime_set(uf, xi)};
    cd.A = subgroup_group(G, A_ref);
    cd.Gm = uf.minus_group;
    const int na = cd.A.order, nh = cd.Gm.order;

    std::vector<int> A_pos(G.order, -1);
    for (int i = 0; i < na; ++i) A_pos[A_ref.elements[i]] = i;

    cd.action.assign(nh, std::vector<int>(na));
    for (int xl = 0; xl < nh; ++xl) {
        int x = uf.minus_at(xl);
        for (int al = 0; al < na; ++al) {
            int img = G.mul(G.mul(x, A_ref.elements[al]), G.inv(x));
            cd.action[xl][al] = A_pos[img]; // in A because G+' is normal
        }
    }

    cd.zeta.assign(na, -1);
    for (int u : uf.plus.elements) {
        int a = G.mul(u, xa(G.inv(u)));
        cd.zeta[A_pos[a]] = uf.minus_pos[xa(u)];
    }

    // F on the abstract semidirect product, transported along (a,x) -> a*x
    UniqueFactorization uf_prime = make_factorization(G, A_ref, uf.minus);
    cd.F.assign(na * nh, -1);
    for (int al = 0; al < na; ++al) {
        int a = A_ref.elements[al];
        int u = uf.pm_plus[a]; // a == u xi(u^{-1})
        for (int xl = 0; xl < nh; ++xl) {
            int img = G.mul(G.mul(ea(u), G.inv(u)), uf.minus_at(xl));
            cd.F[al * nh + xl] = A_pos[uf_prime.pm_plus[img]] * nh + uf.minus_pos[uf_prime.pm_minus[img]];
        }
    }

    std::string w;
    if (!validate_cycle_data(cd, &w)) throw DomainError("InternalError", "cycle data invalid: " + w);
    return cd;
}

CycleTriple from_cycle_data(const CycleData& cd) {
    std::string w;
    FiniteGroup S;
    try {
        if (!validate_cycle_data(cd, &w)) throw DomainError("InvalidCycleData", w);
        S = semidirect_product(cd.A, cd.Gm, cd.action);
    } catch (const DomainError& e) {
        throw DomainError("InvalidCycleData", e.what());
    }
    const int na = cd.A.order, nh = cd.Gm.order;

    std::vector<int> gplus, gminus;
    for (int a = 0; a < na; ++a) gplus.push_back(a * nh + cd.zeta[a]);
    for (int x = 0; x < nh; ++x) gminus.push_back(cd.A.id() * nh + x);
    std::sort(gplus.begin(), gplus.end());
    std::sort(gminus.begin(), gminus.end());

    CycleTriple out;
    out.uf = make_factorization(S, SubgroupRef{gplus}, SubgroupRef{gminus});

    std::vector<int> Finv(S.order);
    for (int s = 0; s < S.order; ++s) Finv[cd.F[s]] = s;

    auto proj_local = [&](int s) { return out.uf.minus_pos[cd.A.id() * nh + s % nh]; };
    out.xi.image.resize(gplus.size());
    out.eta.image.resize(gplus.size());
    for (size_t i = 0; i < gplus.size(); ++i) {
        out.xi.image[i] = proj_local(gplus[i]);
        out.eta.image[i] = proj_local(Finv[gplus[i]]);
    }
    if (!is_homomorphism(out.uf.plus_group, out.uf.minus_group, out.xi) ||
        !is_homomorphism(out.uf.plus_group, out.uf.minus_group, out.eta))
        throw DomainError("InvalidCycleData", "induced xi or eta is not a homomorphism");
    if (!check_pair_conditions(out.uf, out.xi, out.eta).all_ok())
        throw DomainError("InvalidCycleData", "induced pair fails the condition equations");
    return out;
}

} // namespace qtr
