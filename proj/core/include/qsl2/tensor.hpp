#pragma once

// Tensor products of the irreducible U_q(sl2)-modules V_d and the forms on them.
//
// V_n has standard basis v_0, ..., v_n with
//   K^{±1} v_i = q^{±(2i-n)} v_i,   E v_i = [i+1] v_{i+1},   F v_i = [n-i+1] v_{i-1},
// where vectors outside the range 0..n are zero.  A tensor product
// V_{d_1} ⊗ ... ⊗ V_{d_r} carries the U_q-action through the iterated
// comultiplication
//   Δ(E) = 1⊗E + E⊗K^{-1},   Δ(F) = K⊗F + F⊗1,   Δ(K^{∓1}) = K^{∓1}⊗K^{∓1}.
//
// Forms:
//   form_irr   on a single V_n: bilinear, <v_k, v_l>' = δ_{kl} q^{k(n-k)} qbinom(n,k).
//   form_eval  on any shape: anti-linear in the first slot, linear in the second,
//              <v_a, v^b> = δ_{ab} ∏ q^{a_i(d_i-a_i)} on dual standard vectors.
//   form_pair  on any shape: anti-linear in both slots, same basis values.
//   form_eval_bilinear: the bilinear extension of the same basis values; network
//              closures use it so monomial coefficients pass through unconjugated.

#include <map>
#include <string>
#include <vector>

#include "qsl2/laurent.hpp"

namespace qsl2 {

// Degrees (d_1, ..., d_r) of the tensor factors.  r = 0 is the trivial module.
using ModuleShape = std::vector<int>;

// Indices (a_1, ..., a_r), 0 <= a_i <= d_i, labelling v_a = v_{a_1} ⊗ ... ⊗ v_{a_r}.
using MultiIndex = std::vector<int>;

enum class Gen { E, F, K, Kinv };

// An element of V_{d_1} ⊗ ... ⊗ V_{d_r} with RationalQ coefficients.
// Zero coefficients are never stored.
class TensorVector {
public:
    TensorVector() = default;
    explicit TensorVector(ModuleShape shape) : shape_(std::move(shape)) {}

    // v_a: the standard basis vector with coefficient one.
    static TensorVector basis(ModuleShape shape, MultiIndex index);

    const ModuleShape& shape() const { return shape_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<MultiIndex, RationalQ>& terms() const { return terms_; }

    // Coefficient of v_index (zero if absent).  Throws std::invalid_argument
    // when the index does not fit the shape.
    RationalQ coeff(const MultiIndex& index) const;

    // Adds c * v_index, erasing the entry if the sum cancels.
    void add(const MultiIndex& index, const RationalQ& c);

    TensorVector& operator+=(const TensorVector& other);
    TensorVector& operator-=(const TensorVector& other);
    friend TensorVector operator+(TensorVector a, const TensorVector& b) { a += b; return a; }
    friend TensorVector operator-(TensorVector a, const TensorVector& b) { a -= b; return a; }
    TensorVector scaled(const RationalQ& c) const;
    TensorVector barred_coeffs() const;  // applies bar to every coefficient

    friend bool operator==(const TensorVector&, const TensorVector&) = default;

    // Human-readable form, e.g. "(q)*v[1,0] + v[0,1]"; terms in index order.
    std::string str() const;

    // {"shape":[d1,...],"terms":[{"index":[a1,...],"coeff":...}]} with terms
    // sorted lexicographically by index.
    Json to_json() const;
    static TensorVector from_json(const Json& j);

private:
    ModuleShape shape_;
    std::map<MultiIndex, RationalQ> terms_;
};

// Σ (2 a_i - d_i): the K-eigenvalue exponent of v_a.
int weight_exponent(const ModuleShape& shape, const MultiIndex& index);

// E, F, K or K^{-1} through the iterated comultiplication.
TensorVector act(Gen g, const TensorVector& v);

// Divided power E^{(r)} or F^{(r)}: act iterated r times, divided exactly by
// [r]!.  Only Gen::E and Gen::F are allowed.
TensorVector act_divided(Gen g, int r, const TensorVector& v);

// The same divided power computed through the divided-power comultiplication
//   Δ(E^{(r)}) = Σ_{r'+r''=r} q^{-r'r''} E^{(r')} ⊗ E^{(r'')} K^{-r'}
//   Δ(F^{(r)}) = Σ_{r'+r''=r} q^{-r'r''} F^{(r')} K^{r''} ⊗ F^{(r'')}
// applied recursively across the factors, with the single-factor values
//   E^{(r)} v_a = qbinom(a+r, r) v_{a+r},   F^{(r)} v_a = qbinom(d-a+r, r) v_{a-r}.
// Kept as an independent cross-check of act_divided.
TensorVector act_divided_comult(Gen g, int r, const TensorVector& v);

// Bilinear form on a single V_n, <v_k, v_l>' = δ_{kl} q^{k(n-k)} qbinom(n,k).
// Throws std::invalid_argument unless both vectors have shape (n).
RationalQ form_irr(const TensorVector& v, const TensorVector& w);

// Semi-linear evaluation form: anti-linear first slot, linear second.  On
// standard basis pairs <v_a, v_b> = δ_{ab} ∏ q^{a_i(d_i-a_i)} qbinom(d_i, a_i).
RationalQ form_eval(const TensorVector& v, const TensorVector& w);

// Bilinear extension of the same basis values (no bar on either slot).
RationalQ form_eval_bilinear(const TensorVector& v, const TensorVector& w);

// Pairing form: anti-linear in both slots, same basis values as form_eval.
RationalQ form_pair(const TensorVector& v, const TensorVector& w);

// v^k = qbinom(n,k)^{-1} v_k in V_n.  Throws std::invalid_argument out of range.
TensorVector dual_standard(int k, int n);

// Coefficient of v^a when v is expanded in the dual standard basis of its
// shape, i.e. coeff(v, a) * ∏ qbinom(d_i, a_i).
RationalQ dual_coefficient(const TensorVector& v, const MultiIndex& index);

}  // namespace qsl2
