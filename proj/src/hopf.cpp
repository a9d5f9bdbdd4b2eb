#include "qtr/hopf.hpp"

#include "qtr/error.hpp"
#include "qtr/parallel.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace qtr {

void TensorElement::add_term(const Tuple& t, const Rational& c) {
    if (c.is_zero()) return;
    auto it = coeffs.find(t);
    if (it == coeffs.end()) {
        coeffs.emplace(t, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) coeffs.erase(it);
    }
}

HopfData build_hopf(const UniqueFactorization& uf) {
    HopfData H;
    H.uf = uf;
    const FiniteGroup& G = uf.group;
    const int n = G.order;

    H.mult.assign(n, std::vector<int>(n, -1));
    for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
            if (uf.mp_plus[g] == uf.pm_plus[h]) H.mult[g][h] = G.mul(g, uf.pm_minus[h]);

    H.comult.assign(n, {});
    for (int g = 0; g < n; ++g) {
        int gp = uf.pm_plus[g], gm = uf.pm_minus[g];
        for (int hp : uf.plus.elements) {
            int left = G.mul(G.mul(gp, G.inv(hp)), uf.lpm(hp, gm));
            int right = G.mul(hp, gm);
            H.comult[g].push_back({left, right});
        }
    }

    H.counit.assign(n, 0);
    for (int g = 0; g < n; ++g) H.counit[g] = uf.pm_plus[g] == G.id() ? 1 : 0;

    H.antipode.resize(n);
    for (int g = 0; g < n; ++g) H.antipode[g] = G.inv(g);
    return H;
}

TensorElement basis_element(const Tuple& t) {
    TensorElement a;
    a.arity = static_cast<int>(t.size());
    a.coeffs.emplace(t, Rational(1));
    return a;
}

TensorElement zero_element(int arity) {
    TensorElement a;
    a.arity = arity;
    return a;
}

TensorElement unit_element(const HopfData& H, int arity) {
    TensorElement a;
    a.arity = arity;
    Tuple t(arity, 0);
    const auto& plus = H.uf.plus.elements;
    // odometer over G+^arity
    std::vector<int> idx(arity, 0);
    while (true) {
        for (int s = 0; s < arity; ++s) t[s] = plus[idx[s]];
        a.coeffs.emplace(t, Rational(1));
        int pos = arity - 1;
        while (pos >= 0 && idx[pos] == static_cast<int>(plus.size()) - 1) idx[pos--] = 0;
        if (pos < 0) break;
        ++idx[pos];
    }
    return a;
}

TensorElement product_k(const HopfData& H, const TensorElement& a, const TensorElement& b) {
    if (a.arity != b.arity)
        throw DomainError("ArityMismatch", "product of arity " + std::to_string(a.arity) + " with arity " +
                                               std::to_string(b.arity));
    TensorElement r;
    r.arity = a.arity;
    Tuple t(a.arity);
    for (const auto& [ta, ca] : a.coeffs) {
        for (const auto& [tb, cb] : b.coeffs) {
            bool nonzero = true;
            for (int s = 0; s < a.arity; ++s) {
                int p = H.mult[ta[s]][tb[s]];
                if (p < 0) {
                    nonzero = false;
                    break;
                }
                t[s] = p;
            }
            if (nonzero) r.add_term(t, ca * cb);
        }
    }
    return r;
}

TensorElement slot_map(const HopfData& H, const TensorElement& a, int slot, StructureMap which) {
    if (slot < 0 || slot >= a.arity)
        throw DomainError("BadSlot", "slot " + std::to_string(slot) + " of arity " + std::to_string(a.arity));
    TensorElement r;
    switch (which) {
    case StructureMap::Comult: {
        r.arity = a.arity + 1;
        for (const auto& [t, c] : a.coeffs) {
            for (const auto& [left, right] : H.comult[t[slot]]) {
                Tuple s;
                s.reserve(r.arity);
                s.insert(s.end(), t.begin(), t.begin() + slot);
                s.push_back(left);
                s.push_back(right);
                s.insert(s.end(), t.begin() + slot + 1, t.end());
                r.add_term(s, c);
            }
        }
        break;
    }
    case StructureMap::Counit: {
        if (a.arity < 2) throw DomainError("BadSlot", "counit would drop arity below 1");
        r.arity = a.arity - 1;
        for (const auto& [t, c] : a.coeffs) {
            if (!H.counit[t[slot]]) continue;
            Tuple s;
            s.reserve(r.arity);
            s.insert(s.end(), t.begin(), t.begin() + slot);
            s.insert(s.end(), t.begin() + slot + 1, t.end());
            r.add_term(s, c);
        }
        break;
    }
    case StructureMap::Antipode: {
        r.arity = a.arity;
        for (const auto& [t, c] : a.coeffs) {
            Tuple s = t;
            s[slot] = H.antipode[t[slot]];
            r.add_term(s, c);
        }
        break;
    }
    }
    return r;
}

TensorElement embed_slots(const HopfData& H, const TensorElement& a, int k, const std::vector<int>& positions) {
    if (static_cast<int>(positions.size()) != a.arity || k < a.arity)
        throw DomainError("BadPositions", "need exactly one strictly increasing position per slot");
    for (size_t i = 0; i < positions.size(); ++i) {
        if (positions[i] < 0 || positions[i] >= k || (i > 0 && positions[i] <= positions[i - 1]))
            throw DomainError("BadPositions", "positions must be strictly increasing in [0,k)");
    }
    std::vector<int> rest;
    for (int s = 0; s < k; ++s)
        if (std::find(positions.begin(), positions.end(), s) == positions.end()) rest.push_back(s);

    const auto& plus = H.uf.plus.elements;
    TensorElement r;
    r.arity = k;
    const int nrest = static_cast<int>(rest.size());
    for (const auto& [t, c] : a.coeffs) {
        Tuple s(k, 0);
        for (int i = 0; i < a.arity; ++i) s[positions[i]] = t[i];
        std::vector<int> idx(nrest, 0);
        while (true) {
            for (int i = 0; i < nrest; ++i) s[rest[i]] = plus[idx[i]];
            r.add_term(s, c);
            if (nrest == 0) break;
            int pos = nrest - 1;
            while (pos >= 0 && idx[pos] == static_cast<int>(plus.size()) - 1) idx[pos--] = 0;
            if (pos < 0) break;
            ++idx[pos];
        }
    }
    return r;
}

TensorElement tau_swap(const TensorElement& a, int i, int j) {
    if (i < 0 || j < 0 || i >= a.arity || j >= a.arity)
        throw DomainError("BadSlot", "tau slots out of range");
    TensorElement r;
    r.arity = a.arity;
    for (const auto& [t, c] : a.coeffs) {
        Tuple s = t;
        std::swap(s[i], s[j]);
        r.coeffs.emplace(std::move(s), c);
    }
    return r;
}

bool is_positive(const TensorElement& a) {
    for (const auto& [t, c] : a.coeffs)
        if (!c.is_positive()) return false;
    return true;
}

namespace {

long long flat_index(const Tuple& t, int n) {
    long long idx = 0;
    for (int v : t) idx = idx * n + v;
    return idx;
}

Tuple unflat_index(long long idx, int n, int arity) {
    Tuple t(arity);
    for (int s = arity - 1; s >= 0; --s) {
        t[s] = static_cast<int>(idx % n);
        idx /= n;
    }
    return t;
}

// Solves a*x = unit by Gaussian elimination on the left-multiplication matrix.
std::optional<TensorElement> invert_by_solve(const HopfData& H, const TensorElement& a) {
    const int n = H.dim();
    long long d = 1;
    for (int s = 0; s < a.arity; ++s) d *= n;
    if (d > 2000)
        throw DomainError("TooLarge", "dense inversion needs a candidate inverse above 2000 unknowns, dim = " +
                                          std::to_string(d));
    const int dim = static_cast<int>(d);

    // columns: image of each basis tuple under left multiplication by a
    std::vector<std::vector<Rational>> M(dim, std::vector<Rational>(dim, Rational(0)));
    Tuple prod(a.arity);
    for (int col = 0; col < dim; ++col) {
        Tuple t = unflat_index(col, n, a.arity);
        for (const auto& [ta, ca] : a.coeffs) {
            bool nonzero = true;
            for (int s = 0; s < a.arity; ++s) {
                int p = H.mult[ta[s]][t[s]];
                if (p < 0) {
                    nonzero = false;
                    break;
                }
                prod[s] = p;
            }
            if (nonzero) {
                long long row = flat_index(prod, n);
                M[row][col] += ca;
            }
        }
    }
    std::vector<Rational> rhs(dim, Rational(0));
    for (const auto& [t, c] : unit_element(H, a.arity).coeffs) rhs[flat_index(t, n)] = c;

    // elimination with first-nonzero pivoting
    std::vector<int> pivot_col(dim, -1);
    int row = 0;
    for (int col = 0; col < dim && row < dim; ++col) {
        int pr = -1;
        for (int r = row; r < dim; ++r)
            if (!M[r][col].is_zero()) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        std::swap(M[pr], M[row]);
        std::swap(rhs[pr], rhs[row]);
        Rational inv_p = Rational(1) / M[row][col];
        for (int c2 = col; c2 < dim; ++c2) M[row][c2] *= inv_p;
        rhs[row] *= inv_p;
        for (int r = 0; r < dim; ++r) {
            if (r == row || M[r][col].is_zero()) continue;
            Rational f = M[r][col];
            for (int c2 = col; c2 < dim; ++c2) M[r][c2] -= f * M[row][c2];
            rhs[r] -= f * rhs[row];
        }
        pivot_col[row] = col;
        ++row;
    }
    // consistency: zero rows must have zero rhs
    for (int r = row; r < dim; ++r)
        if (!rhs[r].is_zero()) return std::nullopt;
    if (row < dim) return std::nullopt; // singular: a is not invertible

    TensorElement x;
    x.arity = a.arity;
    for (int r = 0; r < dim; ++r)
        if (!rhs[r].is_zero()) x.coeffs.emplace(unflat_index(pivot_col[r], n, a.arity), rhs[r]);
    return x;
}

} // namespace

std::optional<TensorElement> try_invert(const HopfData& H, const TensorElement& a, const TensorElement* candidate) {
    TensorElement unit = unit_element(H, a.arity);
    if (candidate) {
        if (candidate->arity != a.arity) throw DomainError("ArityMismatch", "candidate inverse arity mismatch");
        if (product_k(H, a, *candidate) == unit && product_k(H, *candidate, a) == unit) return *candidate;
        return std::nullopt;
    }
    auto x = invert_by_solve(H, a);
    if (!x) return std::nullopt;
    if (!(product_k(H, a, *x) == unit) || !(product_k(H, *x, a) == unit)) return std::nullopt;
    return x;
}

TensorElement invert_element(const HopfData& H, const TensorElement& a) {
    auto x = try_invert(H, a);
    if (!x) throw DomainError("NotInvertible", "element has no two-sided inverse");
    return *x;
}

std::string AxiomReport::first_failure() const {
    if (!associativity.ok) return "associativity: " + associativity.witness;
    if (!unitality.ok) return "unitality: " + unitality.witness;
    if (!coassociativity.ok) return "coassociativity: " + coassociativity.witness;
    if (!counitality.ok) return "counitality: " + counitality.witness;
    if (!comult_multiplicative.ok) return "comult multiplicative: " + comult_multiplicative.witness;
    if (!counit_multiplicative.ok) return "counit multiplicative: " + counit_multiplicative.witness;
    if (!antipode_axiom.ok) return "antipode: " + antipode_axiom.witness;
    return "";
}

AxiomReport verify_hopf_axioms(const HopfData& H, int jobs) {
    AxiomReport rep;
    const FiniteGroup& G = H.uf.group;
    const int n = H.dim();

    auto record = [&](AxiomCheck& flag, long long bad, auto describe) {
        if (bad >= 0) {
            flag.ok = false;
            flag.witness = describe(bad);
        }
    };

    // associativity on basis: ({g}{h}){k} == {g}({h}{k}), both sides 0 or basis
    long long bad = par::first_failure(
        static_cast<long long>(n) * n * n,
        [&](long long i) {
            int g = static_cast<int>(i / (n * n)), h = static_cast<int>((i / n) % n), k = static_cast<int>(i % n);
            int gh = H.mult[g][h], hk = H.mult[h][k];
            int lhs = gh < 0 ? -1 : H.mult[gh][k];
            int rhs = hk < 0 ? -1 : H.mult[g][hk];
            return lhs == rhs;
        },
        jobs);
    record(rep.associativity, bad, [&](long long i) {
        int g = static_cast<int>(i / (n * n)), h = static_cast<int>((i / n) % n), k = static_cast<int>(i % n);
        return "({" + G.label(g) + "}{" + G.label(h) + "}){" + G.label(k) + "} != {" + G.label(g) + "}({" +
               G.label(h) + "}{" + G.label(k) + "})";
    });

    TensorElement one = unit_element(H, 1);
    bad = par::first_failure(
        n,
        [&](long long g) {
            TensorElement b = basis_element({static_cast<int>(g)});
            return product_k(H, one, b) == b && product_k(H, b, one) == b;
        },
        jobs);
    record(rep.unitality, bad, [&](long long g) { return "1*{" + G.label(static_cast<int>(g)) + "} != itself"; });

    bad = par::first_failure(
        n,
        [&](long long g) {
            TensorElement d = slot_map(H, basis_element({static_cast<int>(g)}), 0, StructureMap::Comult);
            return slot_map(H, d, 0, StructureMap::Comult) == slot_map(H, d, 1, StructureMap::Comult);
        },
        jobs);
    record(rep.coassociativity, bad,
           [&](long long g) { return "(Delta x id)Delta != (id x Delta)Delta at {" + G.label(static_cast<int>(g)) + "}"; });

    bad = par::first_failure(
        n,
        [&](long long g) {
            TensorElement b = basis_element({static_cast<int>(g)});
            TensorElement d = slot_map(H, b, 0, StructureMap::Comult);
            return slot_map(H, d, 0, StructureMap::Counit) == b && slot_map(H, d, 1, StructureMap::Counit) == b;
        },
        jobs);
    record(rep.counitality, bad,
           [&](long long g) { return "(eps x id)Delta != id at {" + G.label(static_cast<int>(g)) + "}"; });

    // Delta({g}{h}) == Delta{g} Delta{h}; also Delta(1) == 1 x 1
    bad = par::first_failure(
        static_cast<long long>(n) * n,
        [&](long long i) {
            int g = static_cast<int>(i / n), h = static_cast<int>(i % n);
            int gh = H.mult[g][h];
            TensorElement lhs =
                gh < 0 ? zero_element(2) : slot_map(H, basis_element({gh}), 0, StructureMap::Comult);
            TensorElement rhs = product_k(H, slot_map(H, basis_element({g}), 0, StructureMap::Comult),
                                          slot_map(H, basis_element({h}), 0, StructureMap::Comult));
            return lhs == rhs;
        },
        jobs);
    record(rep.comult_multiplicative, bad, [&](long long i) {
        return "Delta({" + G.label(static_cast<int>(i / n)) + "}{" + G.label(static_cast<int>(i % n)) +
               "}) != Delta Delta product";
    });
    if (rep.comult_multiplicative.ok &&
        !(slot_map(H, one, 0, StructureMap::Comult) == unit_element(H, 2))) {
        rep.comult_multiplicative.ok = false;
        rep.comult_multiplicative.witness = "Delta(1) != 1 x 1";
    }

    bad = par::first_failure(
        static_cast<long long>(n) * n,
        [&](long long i) {
            int g = static_cast<int>(i / n), h = static_cast<int>(i % n);
            int gh = H.mult[g][h];
            int lhs = gh < 0 ? 0 : H.counit[gh];
            return lhs == (H.counit[g] & H.counit[h]);
        },
        jobs);
    record(rep.counit_multiplicative, bad, [&](long long i) {
        return "eps({" + G.label(static_cast<int>(i / n)) + "}{" + G.label(static_cast<int>(i % n)) +
               "}) != eps*eps";
    });

    // m(S x id)Delta{g} == eps{g} 1 == m(id x S)Delta{g}
    bad = par::first_failure(
        n,
        [&](long long gi) {
            int g = static_cast<int>(gi);
            TensorElement d = slot_map(H, basis_element({g}), 0, StructureMap::Comult);
            TensorElement expected = H.counit[g] ? one : zero_element(1);
            for (int side = 0; side < 2; ++side) {
                TensorElement sd = slot_map(H, d, side, StructureMap::Antipode);
                TensorElement m = zero_element(1);
                for (const auto& [t, c] : sd.coeffs) {
                    int p = H.mult[t[0]][t[1]];
                    if (p >= 0) m.add_term({p}, c);
                }
                if (!(m == expected)) return false;
            }
            return true;
        },
        jobs);
    record(rep.antipode_axiom, bad,
           [&](long long g) { return "m(S x id)Delta != unit eps at {" + G.label(static_cast<int>(g)) + "}"; });

    return rep;
}

std::string tensor_to_json(const TensorElement& a) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [t, c] : a.coeffs) // std::map iterates tuples lexicographically
        terms.push_back({{"tuple", t}, {"num", c.num().to_string()}, {"den", c.den().to_string()}});
    return nlohmann::json{{"arity", a.arity}, {"terms", terms}}.dump();
}

TensorElement tensor_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw DomainError("BadTensor", e.what());
    }
    if (!j.is_object() || !j.contains("arity") || !j.contains("terms"))
        throw DomainError("BadTensor", "expected {arity, terms}");
    TensorElement a;
    a.arity = j["arity"].get<int>();
    if (a.arity < 1) throw DomainError("BadTensor", "arity must be >= 1");
    for (const auto& rec : j["terms"]) {
        Tuple t = rec["tuple"].get<Tuple>();
        if (static_cast<int>(t.size()) != a.arity) throw DomainError("BadTensor", "tuple arity mismatch");
        Rational c(BigInt::from_string(rec["num"].get<std::string>()),
                   BigInt::from_string(rec["den"].get<std::string>()));
        a.add_term(t, c);
    }
    return a;
}

std::string tensor_to_string(const HopfData& H, const TensorElement& a) {
    if (a.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [t, c] : a.coeffs) {
        if (!first) os << " + ";
        first = false;
        if (!c.is_one()) os << c.to_string() << "*";
        for (size_t s = 0; s < t.size(); ++s) {
            if (s) os << "(x)";
            os << "{" << H.uf.group.label(t[s]) << "}";
        }
    }
    return os.str();
}

} // namespace qtr
