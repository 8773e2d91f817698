// Fractional graded Euler characteristics of complete-intersection rings.
//
// A graded complete intersection with exterior generators in internal degrees
// g_1,...,g_a and polynomial generators (divided-power classes) in internal
// degrees r_1,...,r_b has minimal-resolution Poincare series
//
//     P(q,t) = prod_i (1 + q^{g_i} t) / prod_i (1 - q^{r_i} t^2),
//
// t recording the homological degree.  Substituting t = -1 gives a q-adically
// convergent series, the graded Euler characteristic of Ext; for the
// coinvariant algebra of sl_n (generators all in degree 2, relations in
// degrees 4, 6, ..., 2n) it equals 1/[[n]]!, and for the Grassmannian
// cohomology presentation it equals the inverse renormalized binomial.
//
// The ungraded (q = 1) homotopy-Lie data of a series with constant term 1 is
// its deviation profile: P(t) = prod_{m odd} (1+t^m)^{c_m} *
// prod_{m even} (1-t^m)^{-c_m}, extracted degree by degree; complete
// intersections have c_m = 0 for m >= 3.

#pragma once

#include <qsl2/laurent.hpp>

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace qsl2 {

// Power series in t with Laurent-polynomial q-coefficients, exact for all
// t-degrees < t_order.
class BigradedSeries {
public:
    explicit BigradedSeries(int t_order = 0) : coeffs_(std::max(t_order, 0)) {}
    explicit BigradedSeries(std::vector<LaurentPoly> coeffs) : coeffs_(std::move(coeffs)) {}

    static BigradedSeries one(int t_order);

    int t_order() const { return static_cast<int>(coeffs_.size()); }
    const LaurentPoly& coeff(int m) const;  // 0 <= m < t_order

    friend BigradedSeries operator*(const BigradedSeries& a, const BigradedSeries& b);
    bool operator==(const BigradedSeries&) const = default;

    std::string str() const;  // one line per t-degree
    Json to_json() const;     // {"t_order":..., "ranks": {"0":..., "1":...}}

private:
    std::vector<LaurentPoly> coeffs_;  // coeff of t^m
};

// Deviations c_1, c_2, ... of a t-series with constant term 1.
struct DeviationProfile {
    std::vector<Int> c;  // c[m-1] is the deviation c_m

    bool operator==(const DeviationProfile&) const = default;
};

// Generator/relation internal degrees of a complete intersection.
struct CIPresentation {
    std::vector<int> gen_degrees;
    std::vector<int> rel_degrees;
};

// Coinvariant algebra of sl_n: n-1 generators of degree 2, relations of
// degrees 4, 6, ..., 2n.
CIPresentation flag_presentation(int n);

// Cohomology of Gr(k, n): generators of degrees 2, 4, ..., 2k, relations of
// degrees 2(n-k+1), ..., 2n.
CIPresentation grassmannian_presentation(int k, int n);

// Expansion of prod (1+q^g t) / prod (1-q^r t^2) to the given t-order.
// Degrees must be positive and even.
BigradedSeries ci_poincare(const std::vector<int>& gen_degrees,
                           const std::vector<int>& rel_degrees, int t_order);

// The t = -1 specialization, exact below q^{q_order}.
LaurentSeries euler_inverse(const std::vector<int>& gen_degrees,
                            const std::vector<int>& rel_degrees, int q_order);

// Deviation extraction and the reverse product; reconstruct(deviations(p, M), M)
// agrees with p through t-degree M.
DeviationProfile deviations(const LaurentSeries& p, int M);
LaurentSeries reconstruct(const DeviationProfile& prof, int M);

// Graded dimension of H^*(Gr(k,n)), lowest degree zero: q^{k(n-k)} [n over k].
LaurentPoly grassmannian_poincare(int k, int n);

// Truncated series of 1 / prod_i grassmannian_poincare(k_i, d_i).
LaurentSeries standard_ext_euler(const std::vector<std::pair<int, int>>& kd, int q_order);

// Graded dimension of the standard module's endomorphism ring: the product
// of the Grassmannian Poincare polynomials.
LaurentPoly endring_graded_dim(const std::vector<std::pair<int, int>>& kd);

}  // namespace qsl2
