#pragma once

#include "qtr/factorization.hpp"
#include "qtr/group.hpp"

#include <string>
#include <utility>
#include <vector>

namespace qtr {

// Built-in groups: Z<n>, D<n> (dihedral of order 2n), S3, S4, Q8, V4.
// Products are spelled "AxB" (right-associated, e.g. Z2xZ2xZ2).  Permutation
// groups compose with the right factor acting first: (fg)(i) = f(g(i)).
std::vector<std::string> catalog_names();
FiniteGroup catalog_group(const std::string& name);

// Catalog name, product expression, or a path to a group file.
FiniteGroup resolve_group_spec(const std::string& spec);

// Group file: {"name": string, "order": n, "table": [[int;n];n]}, no other
// fields (BadGroupFile).
FiniteGroup load_group_file(const std::string& path);
FiniteGroup parse_group_json(const std::string& text);
std::string group_to_json(const FiniteGroup& G);

// Factorization of G x G with G~+ = {(g+, g-)} and G~- the diagonal; the
// Hopf algebra of this factorization is the Drinfeld double.
// Pair (a, b) has index a*|G| + b.
UniqueFactorization build_double(const UniqueFactorization& uf);

// The standard pair on a double: xi(g+, g-) = (g-, g-), eta(g+, g-) = (g+, g+).
// Requires an input of build_double's shape (NotADouble).
std::pair<Homomorphism, Homomorphism> standard_double_qt(const UniqueFactorization& dbl);

} // namespace qtr
