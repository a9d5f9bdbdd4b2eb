#include "qtr/group.hpp"

#include "qtr/error.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace qtr {

bool SubgroupRef::contains(int g) const {
    return std::binary_search(elements.begin(), elements.end(), g);
}

FiniteGroup load_group(const std::vector<std::vector<int>>& table, const std::string& name) {
    const int n = static_cast<int>(table.size());
    if (n == 0) throw DomainError("BadTable", "empty table");
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(table[i].size()) != n)
            throw DomainError("BadTable", "row " + std::to_string(i) + " is not length " + std::to_string(n));
        for (int j = 0; j < n; ++j) {
            if (table[i][j] < 0 || table[i][j] >= n)
                throw DomainError("BadTable", "entry (" + std::to_string(i) + "," + std::to_string(j) +
                                                  ") = " + std::to_string(table[i][j]) + " out of range");
        }
    }

    FiniteGroup G;
    G.name = name;
    G.order = n;
    G.table = table;

    int identity = -1;
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) ok = table[e][i] == i && table[i][e] == i;
        if (ok) {
            identity = e;
            break;
        }
    }
    if (identity < 0) throw DomainError("NoIdentity", "table has no two-sided identity");
    G.identity = identity;

    G.inverse.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (table[i][j] == identity && table[j][i] == identity) {
                G.inverse[i] = j;
                break;
            }
        }
        if (G.inverse[i] < 0)
            throw DomainError("NoInverse", "element " + std::to_string(i) + " has no two-sided inverse");
    }

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (table[table[i][j]][k] != table[i][table[j][k]])
                    throw DomainError("NotAssociative",
                                      "(" + std::to_string(i) + "*" + std::to_string(j) + ")*" + std::to_string(k) +
                                          " != " + std::to_string(i) + "*(" + std::to_string(j) + "*" +
                                          std::to_string(k) + ")");

    G.labels.resize(n);
    for (int i = 0; i < n; ++i) G.labels[i] = std::to_string(i);
    return G;
}

bool is_subgroup(const FiniteGroup& G, const std::vector<int>& sorted_elems) {
    if (sorted_elems.empty()) return false;
    if (!std::binary_search(sorted_elems.begin(), sorted_elems.end(), G.id())) return false;
    for (int a : sorted_elems) {
        if (a < 0 || a >= G.order) return false;
        if (!std::binary_search(sorted_elems.begin(), sorted_elems.end(), G.inv(a))) return false;
        for (int b : sorted_elems)
            if (!std::binary_search(sorted_elems.begin(), sorted_elems.end(), G.mul(a, b))) return false;
    }
    return true;
}

SubgroupRef generated_subgroup(const FiniteGroup& G, const std::vector<int>& gens) {
    std::set<int> cur{G.id()};
    for (int g : gens) {
        if (g < 0 || g >= G.order)
            throw DomainError("BadElement", "generator " + std::to_string(g) + " out of range");
        cur.insert(g);
    }
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<int> snapshot(cur.begin(), cur.end());
        for (int a : snapshot)
            for (int b : snapshot)
                if (cur.insert(G.mul(a, b)).second) grew = true;
    }
    SubgroupRef S;
    S.elements.assign(cur.begin(), cur.end());
    return S;
}

std::vector<SubgroupRef> enumerate_subgroups(const FiniteGroup& G) {
    if (G.order > 64)
        throw DomainError("TooLarge", "subgroup enumeration capped at ambient order 64, got " +
                                          std::to_string(G.order));
    // closure of generated subsets, memoized on the element set
    std::set<std::vector<int>> found;
    std::vector<std::vector<int>> frontier;
    SubgroupRef triv = generated_subgroup(G, {});
    found.insert(triv.elements);
    frontier.push_back(triv.elements);
    while (!frontier.empty()) {
        std::vector<int> H = frontier.back();
        frontier.pop_back();
        for (int g = 0; g < G.order; ++g) {
            if (std::binary_search(H.begin(), H.end(), g)) continue;
            std::vector<int> gens = H;
            gens.push_back(g);
            SubgroupRef K = generated_subgroup(G, gens);
            if (found.insert(K.elements).second) frontier.push_back(K.elements);
        }
    }
    std::vector<SubgroupRef> out;
    out.reserve(found.size());
    for (const auto& e : found) out.push_back(SubgroupRef{e});
    return out; // std::set iteration is already lexicographic
}

bool is_normal(const FiniteGroup& G, const SubgroupRef& S) {
    if (!is_subgroup(G, S.elements))
        throw DomainError("NotASubgroup", "element list is not a subgroup of " + G.name);
    for (int g = 0; g < G.order; ++g)
        for (int s : S.elements)
            if (!S.contains(G.mul(G.mul(g, s), G.inv(g)))) return false;
    return true;
}

FiniteGroup subgroup_group(const FiniteGroup& G, const SubgroupRef& S) {
    if (!is_subgroup(G, S.elements))
        throw DomainError("NotASubgroup", "element list is not a subgroup of " + G.name);
    const int m = S.size();
    std::vector<int> pos(G.order, -1);
    for (int i = 0; i < m; ++i) pos[S.elements[i]] = i;
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) t[i][j] = pos[G.mul(S.elements[i], S.elements[j])];
    FiniteGroup H = load_group(t, G.name + "-sub" + std::to_string(m));
    for (int i = 0; i < m; ++i) H.labels[i] = G.label(S.elements[i]);
    return H;
}

bool is_homomorphism(const FiniteGroup& A, const FiniteGroup& B, const Homomorphism& h) {
    if (static_cast<int>(h.image.size()) != A.order) return false;
    for (int v : h.image)
        if (v < 0 || v >= B.order) return false;
    if (h.image[A.id()] != B.id()) return false;
    for (int x = 0; x < A.order; ++x)
        for (int y = 0; y < A.order; ++y)
            if (h.image[A.mul(x, y)] != B.mul(h.image[x], h.image[y])) return false;
    return true;
}

Homomorphism trivial_homomorphism(const FiniteGroup& A, const FiniteGroup& B) {
    return Homomorphism{std::vector<int>(A.order, B.id())};
}

namespace {

// Greedy generating sequence together with, for each element, a word that
// reaches it (as: predecessor element, generator index).
struct GenWords {
    std::vector<int> gens;
    std::vector<int> from;    // element -> previous element (or -1 for identity)
    std::vector<int> via_gen; // element -> generator position used in the last step
};

GenWords generator_words(const FiniteGroup& A) {
    GenWords W;
    W.from.assign(A.order, -2);
    W.via_gen.assign(A.order, -1);
    W.from[A.id()] = -1;
    std::vector<int> reached{A.id()};
    while (static_cast<int>(reached.size()) < A.order) {
        int g = -1;
        for (int c = 0; c < A.order; ++c) {
            if (W.from[c] == -2) {
                g = c;
                break;
            }
        }
        int gi = static_cast<int>(W.gens.size());
        W.gens.push_back(g);
        W.from[g] = A.id();
        W.via_gen[g] = gi;
        reached.push_back(g);
        // close under right multiplication by all generators found so far
        bool grew = true;
        while (grew) {
            grew = false;
            for (size_t r = 0; r < reached.size(); ++r) {
                for (size_t k = 0; k < W.gens.size(); ++k) {
                    int nx = A.mul(reached[r], W.gens[k]);
                    if (W.from[nx] == -2) {
                        W.from[nx] = reached[r];
                        W.via_gen[nx] = static_cast<int>(k);
                        reached.push_back(nx);
                        grew = true;
                    }
                }
            }
        }
    }
    return W;
}

} // namespace

std::vector<Homomorphism> enumerate_homomorphisms(const FiniteGroup& A, const FiniteGroup& B) {
    GenWords W = generator_words(A);
    const int k = static_cast<int>(W.gens.size());
    std::set<std::vector<int>> images;

    std::vector<int> assign(k, 0);
    std::vector<int> img(A.order);
    while (true) {
        // extend the generator assignment along the stored words
        img.assign(A.order, -1);
        img[A.id()] = B.id();
        bool ok = true;
        // W.from is acyclic towards the identity, so a fixed-point sweep fills img
        for (int pass = 0; pass < A.order && ok; ++pass) {
            bool done = true;
            for (int a = 0; a < A.order; ++a) {
                if (img[a] >= 0) continue;
                int p = W.from[a];
                if (p >= 0 && img[p] >= 0) {
                    img[a] = B.mul(img[p], assign[W.via_gen[a]]);
                } else {
                    done = false;
                }
            }
            if (done) break;
        }
        for (int a = 0; a < A.order && ok; ++a) ok = img[a] >= 0;
        if (ok && is_homomorphism(A, B, Homomorphism{img})) images.insert(img);

        // next assignment
        int pos = k - 1;
        while (pos >= 0 && assign[pos] == B.order - 1) {
            assign[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++assign[pos];
    }

    std::vector<Homomorphism> out;
    out.reserve(images.size());
    for (const auto& im : images) out.push_back(Homomorphism{im});
    return out; // set order == lexicographic image order
}

FiniteGroup semidirect_product(const FiniteGroup& A, const FiniteGroup& H,
                               const std::vector<std::vector<int>>& action) {
    const int na = A.order, nh = H.order;
    if (static_cast<int>(action.size()) != nh)
        throw DomainError("ActionNotAutomorphic", "action table must have one row per element of " + H.name);
    for (int x = 0; x < nh; ++x) {
        const auto& ax = action[x];
        if (static_cast<int>(ax.size()) != na)
            throw DomainError("ActionNotAutomorphic", "action row " + std::to_string(x) + " has wrong length");
        std::vector<char> seen(na, 0);
        for (int a : ax) {
            if (a < 0 || a >= na || seen[a])
                throw DomainError("ActionNotAutomorphic", "action of " + std::to_string(x) + " is not a bijection");
            seen[a] = 1;
        }
        if (ax[A.id()] != A.id())
            throw DomainError("ActionNotAutomorphic", "action of " + std::to_string(x) + " moves the identity");
        for (int a = 0; a < na; ++a)
            for (int b = 0; b < na; ++b)
                if (ax[A.mul(a, b)] != A.mul(ax[a], ax[b]))
                    throw DomainError("ActionNotAutomorphic",
                                      "action of " + std::to_string(x) + " is not multiplicative at (" +
                                          std::to_string(a) + "," + std::to_string(b) + ")");
    }
    for (int a = 0; a < na; ++a)
        if (action[H.id()][a] != a)
            throw DomainError("ActionNotHomomorphic", "identity of " + H.name + " does not act trivially");
    for (int x = 0; x < nh; ++x)
        for (int y = 0; y < nh; ++y)
            for (int a = 0; a < na; ++a)
                if (action[H.mul(x, y)][a] != action[x][action[y][a]])
                    throw DomainError("ActionNotHomomorphic",
                                      "action is not a homomorphism at (" + std::to_string(x) + "," +
                                          std::to_string(y) + ")");

    // (a,x)(b,y) = (a·(x·b), xy)
    const int n = na * nh;
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < na; ++a)
        for (int x = 0; x < nh; ++x)
            for (int b = 0; b < na; ++b)
                for (int y = 0; y < nh; ++y)
                    t[a * nh + x][b * nh + y] = A.mul(a, action[x][b]) * nh + H.mul(x, y);
    FiniteGroup G = load_group(t, A.name + ":|" + H.name);
    for (int a = 0; a < na; ++a)
        for (int x = 0; x < nh; ++x) G.labels[a * nh + x] = "(" + A.label(a) + "|" + H.label(x) + ")";
    return G;
}

bool is_isomorphism(const FiniteGroup& G, const FiniteGroup& H, const std::vector<int>& iso) {
    if (G.order != H.order || static_cast<int>(iso.size()) != G.order) return false;
    std::vector<char> seen(H.order, 0);
    for (int v : iso) {
        if (v < 0 || v >= H.order || seen[v]) return false;
        seen[v] = 1;
    }
    for (int a = 0; a < G.order; ++a)
        for (int b = 0; b < G.order; ++b)
            if (iso[G.mul(a, b)] != H.mul(iso[a], iso[b])) return false;
    return true;
}

} // namespace qtr
