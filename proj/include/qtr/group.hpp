#pragma once

#include <string>
#include <vector>

namespace qtr {

// Finite group as an explicit multiplication table.  Elements are dense
// indices 0..order-1; the identity is located by the loader and need not
// be index 0.
struct FiniteGroup {
    std::string name;
    int order = 0;
    std::vector<std::vector<int>> table; // table[i][j] = i * j
    int identity = 0;
    std::vector<int> inverse;
    std::vector<std::string> labels;     // element labels, defaults to indices

    int mul(int a, int b) const { return table[a][b]; }
    int inv(int a) const { return inverse[a]; }
    int id() const { return identity; }
    const std::string& label(int a) const { return labels[a]; }
};

// Subgroup of an ambient group, as a strictly increasing list of element indices.
struct SubgroupRef {
    std::vector<int> elements;

    int size() const { return static_cast<int>(elements.size()); }
    bool contains(int g) const;

    friend bool operator==(const SubgroupRef& a, const SubgroupRef& b) {
        return a.elements == b.elements;
    }
};

// Group homomorphism between two groups given by tables (typically subgroup
// views).  image[i] is the index of the image of source element i in the
// target group.
struct Homomorphism {
    std::vector<int> image;

    friend bool operator==(const Homomorphism& a, const Homomorphism& b) {
        return a.image == b.image;
    }
};

// Validates the table and computes identity/inverses.  Throws DomainError
// with codes BadTable, NoIdentity, NoInverse, NotAssociative; the message
// names the first violating element or triple.
FiniteGroup load_group(const std::vector<std::vector<int>>& table, const std::string& name);

bool is_subgroup(const FiniteGroup& G, const std::vector<int>& sorted_elems);

// Closure of a generating set.
SubgroupRef generated_subgroup(const FiniteGroup& G, const std::vector<int>& gens);

// All subgroups, each sorted, the list sorted lexicographically.
// Ambient order is capped at 64 (TooLarge).
std::vector<SubgroupRef> enumerate_subgroups(const FiniteGroup& G);

// gSg^{-1} == S for all g.  Throws NotASubgroup.
bool is_normal(const FiniteGroup& G, const SubgroupRef& S);

// Subgroup materialized as a group on local indices 0..|S|-1.
FiniteGroup subgroup_group(const FiniteGroup& G, const SubgroupRef& S);

// Every homomorphism A -> B, ordered lexicographically by image table.
// This order is the public index used by the CLI and reports.
std::vector<Homomorphism> enumerate_homomorphisms(const FiniteGroup& A, const FiniteGroup& B);

bool is_homomorphism(const FiniteGroup& A, const FiniteGroup& B, const Homomorphism& h);

Homomorphism trivial_homomorphism(const FiniteGroup& A, const FiniteGroup& B);

// Semidirect product A x| H for an action of H on A by automorphisms,
// product (a,x)(b,y) = (a·(x·b), xy), index a*|H| + x.
// action[x][a] must be an automorphism for each x, with action[e] = id and
// action[xy] = action[x]∘action[y]  (ActionNotAutomorphic, ActionNotHomomorphic).
FiniteGroup semidirect_product(const FiniteGroup& A, const FiniteGroup& H,
                               const std::vector<std::vector<int>>& action);

// Table comparison up to a relabeling given explicitly: iso[a] in H for a in G.
bool is_isomorphism(const FiniteGroup& G, const FiniteGroup& H, const std::vector<int>& iso);

} // namespace qtr
