#include "qtr/catalog.hpp"

#include "qtr/error.hpp"
#include "qtr/qt.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace qtr {

namespace {

FiniteGroup cyclic(int n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    return load_group(t, "Z" + std::to_string(n));
}

// r^a s^b with index a + n*b, s r = r^{-1} s
FiniteGroup dihedral(int n) {
    const int m = 2 * n;
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < 2; ++d) {
                    int rot = b == 0 ? (a + c) % n : (a - c % n + n) % n;
                    t[a + n * b][c + n * d] = rot + n * ((b + d) % 2);
                }
    FiniteGroup G = load_group(t, "D" + std::to_string(n));
    for (int a = 0; a < n; ++a) {
        G.labels[a] = "r" + std::to_string(a);
        G.labels[a + n] = "r" + std::to_string(a) + "s";
    }
    return G;
}

// permutations of {0..k-1} in lexicographic one-line order, (fg)(i) = f(g(i))
FiniteGroup symmetric(int k, const std::string& name) {
    std::vector<std::vector<int>> perms;
    std::vector<int> p(k);
    for (int i = 0; i < k; ++i) p[i] = i;
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    const int n = static_cast<int>(perms.size());
    auto index_of = [&](const std::vector<int>& q) {
        return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
    };
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    std::vector<int> comp(k);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            for (int x = 0; x < k; ++x) comp[x] = perms[i][perms[j][x]];
            t[i][j] = index_of(comp);
        }
    FiniteGroup G = load_group(t, name);
    for (int i = 0; i < n; ++i) {
        std::string l;
        for (int x : perms[i]) l += std::to_string(x);
        G.labels[i] = l;
    }
    return G;
}

// {1, -1, i, -i, j, -j, k, -k}
FiniteGroup quaternion8() {
    auto enc = [](int axis, int sign) { return 2 * axis + (sign < 0 ? 1 : 0); };
    // (axis, sign) product of unit quaternions; axes 0=1, 1=i, 2=j, 3=k
    auto qmul = [&](int a, int b) {
        int ax = a / 2, bx = b / 2;
        int sign = (a % 2 ? -1 : 1) * (b % 2 ? -1 : 1);
        static const int axis_tab[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
        static const int sign_tab[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
        return enc(axis_tab[ax][bx], sign * sign_tab[ax][bx]);
    };
    std::vector<std::vector<int>> t(8, std::vector<int>(8));
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) t[a][b] = qmul(a, b);
    FiniteGroup G = load_group(t, "Q8");
    G.labels = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
    return G;
}

FiniteGroup klein4() {
    std::vector<std::vector<int>> t(4, std::vector<int>(4));
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) t[a][b] = a ^ b;
    FiniteGroup G = load_group(t, "V4");
    G.labels = {"e", "a", "b", "ab"};
    return G;
}

FiniteGroup direct_product(const FiniteGroup& A, const FiniteGroup& B, const std::string& name) {
    std::vector<std::vector<int>> action(B.order, std::vector<int>(A.order));
    for (int x = 0; x < B.order; ++x)
        for (int a = 0; a < A.order; ++a) action[x][a] = a;
    FiniteGroup G = semidirect_product(A, B, action);
    G.name = name;
    for (int a = 0; a < A.order; ++a)
        for (int x = 0; x < B.order; ++x)
            G.labels[a * B.order + x] = "(" + A.label(a) + "," + B.label(x) + ")";
    return G;
}

FiniteGroup atomic_catalog_group(const std::string& name) {
    if (name == "V4") return klein4();
    if (name == "Q8") return quaternion8();
    if (name == "S3") return symmetric(3, "S3");
    if (name == "S4") return symmetric(4, "S4");
    if (name.size() >= 2 && (name[0] == 'Z' || name[0] == 'D')) {
        int n = 0;
        for (size_t i = 1; i < name.size(); ++i) {
            if (name[i] < '0' || name[i] > '9') throw DomainError("UnknownGroup", "no catalog group " + name);
            n = n * 10 + (name[i] - '0');
        }
        if (n < 1 || n > 64) throw DomainError("UnknownGroup", "catalog order out of range in " + name);
        if (name[0] == 'Z') return cyclic(n);
        if (n < 3) throw DomainError("UnknownGroup", "dihedral catalog starts at D3");
        return dihedral(n);
    }
    throw DomainError("UnknownGroup", "no catalog group " + name);
}

} // namespace

std::vector<std::string> catalog_names() {
    std::vector<std::string> names;
    for (int n = 1; n <= 16; ++n) names.push_back("Z" + std::to_string(n));
    names.insert(names.end(), {"V4", "Q8", "S3", "S4"});
    for (int n = 3; n <= 8; ++n) names.push_back("D" + std::to_string(n));
    return names;
}

FiniteGroup catalog_group(const std::string& name) {
    size_t x = name.find('x');
    if (x == std::string::npos) return atomic_catalog_group(name);
    FiniteGroup A = atomic_catalog_group(name.substr(0, x));
    FiniteGroup B = catalog_group(name.substr(x + 1));
    return direct_product(A, B, name);
}

FiniteGroup resolve_group_spec(const std::string& spec) {
    if (spec.find('/') != std::string::npos || spec.find(".json") != std::string::npos)
        return load_group_file(spec);
    try {
        return catalog_group(spec);
    } catch (const DomainError&) {
        return load_group_file(spec);
    }
}

FiniteGroup parse_group_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw DomainError("BadGroupFile", e.what());
    }
    if (!j.is_object()) throw DomainError("BadGroupFile", "group file must be a JSON object");
    for (const auto& [key, val] : j.items())
        if (key != "name" && key != "order" && key != "table")
            throw DomainError("BadGroupFile", "unknown field \"" + key + "\"");
    if (!j.contains("name") || !j["name"].is_string())
        throw DomainError("BadGroupFile", "missing string field \"name\"");
    if (!j.contains("order") || !j["order"].is_number_integer())
        throw DomainError("BadGroupFile", "missing integer field \"order\"");
    if (!j.contains("table") || !j["table"].is_array())
        throw DomainError("BadGroupFile", "missing array field \"table\"");
    int n = j["order"].get<int>();
    std::vector<std::vector<int>> table;
    for (const auto& row : j["table"]) {
        if (!row.is_array()) throw DomainError("BadGroupFile", "table rows must be arrays");
        table.push_back(row.get<std::vector<int>>());
    }
    if (static_cast<int>(table.size()) != n)
        throw DomainError("BadGroupFile", "table size does not match \"order\"");
    return load_group(table, j["name"].get<std::string>());
}

FiniteGroup load_group_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("BadGroupFile", "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_group_json(ss.str());
}

std::string group_to_json(const FiniteGroup& G) {
    nlohmann::json j;
    j["name"] = G.name;
    j["order"] = G.order;
    j["table"] = G.table;
    return j.dump();
}

UniqueFactorization build_double(const UniqueFactorization& uf) {
    const FiniteGroup& G = uf.group;
    const int n = G.order;
    std::vector<std::vector<int>> t(n * n, std::vector<int>(n * n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) t[a * n + b][c * n + d] = G.mul(a, c) * n + G.mul(b, d);
    FiniteGroup dbl = load_group(t, uf.group.name + "xx" + uf.group.name);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) dbl.labels[a * n + b] = "(" + G.label(a) + "," + G.label(b) + ")";

    std::vector<int> plus, minus;
    for (int u : uf.plus.elements)
        for (int x : uf.minus.elements) plus.push_back(u * n + x);
    for (int g = 0; g < n; ++g) minus.push_back(g * n + g);
    std::sort(plus.begin(), plus.end());
    std::sort(minus.begin(), minus.end());
    return make_factorization(dbl, SubgroupRef{plus}, SubgroupRef{minus});
}

std::pair<Homomorphism, Homomorphism> standard_double_qt(const UniqueFactorization& dbl) {
    const int m = dbl.group.order;
    int n = 0;
    while (n * n < m) ++n;
    if (n * n != m) throw DomainError("NotADouble", "group order is not a square");

    // componentwise product under the pairing (a, b) -> a*n + b
    for (int g = 0; g < m; ++g)
        for (int h = 0; h < m; ++h) {
            int p = dbl.group.mul(g, h);
            int first = dbl.group.mul((g / n) * n, (h / n) * n) / n;
            int second = dbl.group.mul(g % n, h % n) % n;
            if (p != first * n + second)
                throw DomainError("NotADouble", "group is not a componentwise square");
        }
    for (int g : dbl.minus.elements)
        if (g / n != g % n) throw DomainError("NotADouble", "G~- is not the diagonal");

    Homomorphism xi, eta;
    xi.image.resize(dbl.np());
    eta.image.resize(dbl.np());
    for (int i = 0; i < dbl.np(); ++i) {
        int t = dbl.plus_at(i);
        xi.image[i] = dbl.minus_pos[(t % n) * n + (t % n)];
        eta.image[i] = dbl.minus_pos[(t / n) * n + (t / n)];
    }
    if (!is_homomorphism(dbl.plus_group, dbl.minus_group, xi) ||
        !is_homomorphism(dbl.plus_group, dbl.minus_group, eta))
        throw DomainError("NotADouble", "standard pair is not a homomorphism pair");

    // induced subgroups must be G x {e} and {e} x G
    const FiniteGroup& Gd = dbl.group;
    std::vector<int> gp, gpp;
    for (int u : dbl.plus.elements) {
        gp.push_back(Gd.mul(u, dbl.apply_pm_hom(xi, Gd.inv(u))));
        gpp.push_back(Gd.mul(dbl.apply_pm_hom(eta, Gd.inv(u)), u));
    }
    std::sort(gp.begin(), gp.end());
    std::sort(gpp.begin(), gpp.end());
    int e2 = Gd.id() % n;
    for (int a : gp)
        if (a % n != e2) throw DomainError("NotADouble", "G~+' is not G x {e}");
    for (int a : gpp)
        if (a / n != Gd.id() / n) throw DomainError("NotADouble", "G~+'' is not {e} x G");

    ConditionReport rep = check_pair_conditions(dbl, xi, eta);
    if (!rep.all_ok())
        throw DomainError("NotADouble", "standard pair fails conditions: " + rep.first_failure());
    return {xi, eta};
}

} // namespace qtr
