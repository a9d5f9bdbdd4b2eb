#pragma once

#include "qtr/factorization.hpp"
#include "qtr/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qtr {

using Tuple = std::vector<int>;

// Sparse exact-rational element of H^{(x)k}, indexed by k-tuples of group
// element indices.  Zero coefficients are never stored.
struct TensorElement {
    int arity = 1;
    std::map<Tuple, Rational> coeffs;

    bool is_zero() const { return coeffs.empty(); }
    int support_size() const { return static_cast<int>(coeffs.size()); }
    void add_term(const Tuple& t, const Rational& c);

    friend bool operator==(const TensorElement& a, const TensorElement& b) {
        return a.arity == b.arity && a.coeffs == b.coeffs;
    }
    friend bool operator!=(const TensorElement& a, const TensorElement& b) { return !(a == b); }
};

// The structure tensors of the Hopf algebra built from a unique factorization:
//   {g}{h}   = [gbar_plus == h_plus] {g * h_minus}
//   1        = sum over G+ of {u}
//   Delta{g} = sum over h+ in G+ of {g+ h+^{-1} (^{h+} g-)}  (x)  {h+ g-}
//   eps{g}   = [g+ == e]
//   S{g}     = {g^{-1}}
// Tables are plain data so tests can corrupt single entries.
struct HopfData {
    UniqueFactorization uf;
    std::vector<std::vector<int>> mult;                    // [g][h] -> product basis index or -1
    std::vector<std::vector<std::pair<int, int>>> comult;  // per basis element, list of (left, right)
    std::vector<char> counit;                              // eps{g} in {0,1}
    std::vector<int> antipode;

    int dim() const { return uf.group.order; }
};

enum class StructureMap { Comult, Counit, Antipode };

HopfData build_hopf(const UniqueFactorization& uf);

TensorElement basis_element(const Tuple& t);
TensorElement zero_element(int arity);
// unit of H^{(x)k}: sum over all k-tuples from G+
TensorElement unit_element(const HopfData& H, int arity);

// slot-wise bilinear product in H^{(x)k}  (ArityMismatch)
TensorElement product_k(const HopfData& H, const TensorElement& a, const TensorElement& b);

// apply Delta / eps / S to one slot; Delta raises arity by one, eps lowers it
// (arity must stay >= 1), S preserves it  (BadSlot)
TensorElement slot_map(const HopfData& H, const TensorElement& a, int slot, StructureMap which);

// place a's slots at the given strictly increasing positions of an arity-k
// element, unit in the remaining slots  (BadPositions)
TensorElement embed_slots(const HopfData& H, const TensorElement& a, int k, const std::vector<int>& positions);

TensorElement tau_swap(const TensorElement& a, int i, int j);

bool is_positive(const TensorElement& a);

// Two-sided inverse under product_k.  With a candidate: verified by
// multiplication.  Without: dense linear solve over the rationals, allowed
// for dim^arity <= 2000 unknowns (TooLarge above that).  Returns nullopt if
// not invertible.
std::optional<TensorElement> try_invert(const HopfData& H, const TensorElement& a,
                                        const TensorElement* candidate = nullptr);
// Same, but throws NotInvertible instead of returning nullopt.
TensorElement invert_element(const HopfData& H, const TensorElement& a);

struct AxiomCheck {
    bool ok = true;
    std::string witness;
};

struct AxiomReport {
    AxiomCheck associativity;
    AxiomCheck unitality;
    AxiomCheck coassociativity;
    AxiomCheck counitality;
    AxiomCheck comult_multiplicative;
    AxiomCheck counit_multiplicative;
    AxiomCheck antipode_axiom;

    bool all_ok() const {
        return associativity.ok && unitality.ok && coassociativity.ok && counitality.ok &&
               comult_multiplicative.ok && counit_multiplicative.ok && antipode_axiom.ok;
    }
    std::string first_failure() const;
};

// Exhaustive check of all Hopf axioms on basis elements (sufficient by
// linearity).  jobs > 1 runs the OpenMP kernel; the recorded witness is the
// first one in basis order either way.
AxiomReport verify_hopf_axioms(const HopfData& H, int jobs = 1);

std::string tensor_to_string(const HopfData& H, const TensorElement& a);

// list of {tuple:[int], num:"...", den:"..."} records in lexicographic tuple
// order; numerators and denominators are decimal strings
std::string tensor_to_json(const TensorElement& a);
TensorElement tensor_from_json(const std::string& text); // BadTensor

} // namespace qtr
