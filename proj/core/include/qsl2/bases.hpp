// Twisted canonical basis of V_i (x) V_j and Grothendieck-group shadows.
//
// The basis vector v_r \spadesuit v_s is
//
//     E^{(s)} F^{(i-r)} (v_i (x) v_0)                    if r+s <= j
//     F^{(i-r)} E^{(s)} (v_i (x) v_0)                    if r+s >= j
//
// with the closed standard-basis expansions
//
//     sum_{p >= 0} q^{p(p-s+j)} [p+r over p]   v_{r+p} (x) v_{s-p}   (r+s <= j)
//     sum_{p >= 0} q^{p(p+r)}   [j-s+p over p] v_{r+p} (x) v_{s-p}   (r+s >= j);
//
// on the wall r+s = j the two agree.  Both descriptions are computed and
// compared on every call.  The inverse expansion of a standard vector and
// the class identities [P] = sum [Delta] and [Delta] = [d over k][proper]
// live in the same weight lattice and are exposed as tagged expansions.

#pragma once

#include <qsl2/laurent.hpp>
#include <qsl2/tensor.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qsl2 {

// Coefficients of a vector or class in a named basis.
struct BasisExpansion {
    std::string basis;  // standard | twisted_canonical | proper_standard_class | projective_class
    std::map<MultiIndex, LaurentPoly> coefficients;  // nonzero entries only

    bool operator==(const BasisExpansion&) const = default;

    std::string str() const;  // "[0,1] + (1*q)*[1,0]"
    Json to_json() const;     // {"basis": ..., "terms": [{"index": ..., "coeff": ...}]}
};

// v_r spadesuit v_s in V_i (x) V_j, expanded in the standard basis.
TensorVector twisted_canonical(int r, int s, int i, int j);

// v_r (x) v_s as a twisted_canonical expansion; coefficients
// (-1)^g q^{g(j-s+1)} [r+g over g] (r+s <= j) or
// (-1)^g q^{g(r+1)} [j-s+g over g] (r+s >= j) at index (r+g, s-g).
BasisExpansion standard_in_twisted(int r, int s, int i, int j);

// [Delta-hat] = prod_i [d_i over k_i] [proper-standard-hat]: the product of
// balanced binomials for the block-weight list.
LaurentPoly standard_class_in_proper(const std::vector<std::pair<int, int>>& kd);

// [P-hat(r,i|s,j)] expanded in standard classes; the coefficients are the
// standard-basis coefficients of v_r spadesuit v_s.
BasisExpansion projective_class_in_standard(int r, int s, int i, int j);

}  // namespace qsl2
