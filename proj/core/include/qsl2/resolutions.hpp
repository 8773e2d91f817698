// Projective-resolution combinatorics of the standard modules Delta(r,i|s,j).
//
// The minimal resolution 0 -> Q_l -> ... -> Q_1 -> Q_0 -> Delta -> 0 has
// Q_0 = P(r,i|s,j) and, for 1 <= m <= l,
//
//     Q_m = (+)_{n=0}^{s-m} P(r+m+n, i | s-m-n, j) ^ (+ a_{n,m})   (r+s <= j)
//     Q_m = (+)_{n=0}^{s-m} P(r+m+n, i | s-m-n, j) ^ (+ b_{n,m})   (r+s >  j)
//
// where a_{n,m} sums, over zero-free compositions (d_1,...,d_m) of m+n,
// the products binom(r+m+n, d_1) binom(r+m+n-d_1, d_2) ... and b_{n,m} is
// the same sum with r replaced by j-s.  Classes P(r',s') with r' > i are
// zero and are dropped; everything here is ungraded (q = 1).
//
// Alternating row sums telescope, via the identity
//     a_{n,1} - a_{n-1,2} + ... + (-1)^n a_{0,n+1} = (-1)^n binom(r+n+1, n+1),
// to [Delta] = sum_g (-1)^g binom(rho+g, g) [P(r+g, s-g)] with rho = r or j-s
// per branch, the inverse at q = 1 of the triangular [P] = sum [Delta] matrix.

#pragma once

#include <qsl2/bases.hpp>
#include <qsl2/laurent.hpp>
#include <qsl2/tensor.hpp>

#include <map>
#include <string>
#include <vector>

namespace qsl2 {

// The terms Q_0, ..., Q_l of the resolution; rows[m] maps (r', s') to the
// multiplicity of P(r',i|s',j) in Q_m.  Rows past the last surviving class
// are kept (empty) so the table always has exactly l+1 rows.
struct ResolutionTable {
    int r = 0;
    int s = 0;
    int i = 0;
    int j = 0;
    std::vector<std::map<MultiIndex, Int>> rows;

    bool operator==(const ResolutionTable&) const = default;

    std::string str() const;  // one "Q_m: a*P(r',s') + ..." line per row
    Json to_json() const;
};

// Multiplicity a_{n,m}^{r}: the composition sum above.  Computed by direct
// enumeration and checked on every call against the multinomial closed form
//     binom(r+m+n, m+n) * sum_{(d)} multinom(m+n; d_1,...,d_m).
// For m = 0 the empty composition gives a_{0,0} = 1 and a_{n,0} = 0 (n > 0).
// The trailing s argument is carried by the bookkeeping but unused.
Int a_num(int n, int m, int r, int s);

// b_{n,m}^{r,s} = a_{n,m} with r replaced by j-s (r is unused).
Int b_num(int n, int m, int r, int s, int j);

// sum_{m=1}^{n+1} (-1)^{m-1} a_{n+1-m,m}^{r}; the value is asserted equal to
// (-1)^n binom(r+n+1, n+1) before being returned.
Int alternating_sum_check(int n, int r, int s);

// Checks the recursion
//     a_{n,m}^{r,s} = sum_{g=0}^{n} binom(r+g+1, g+1) a_{n-g,m-1}^{r+g+1,s-g-1}
// and its b-analogue (same identity in rho = j-s; exercised at rho = s).
bool recursion_check(int n, int m, int r, int s);

// The table of the minimal resolution of Delta(r,i|s,j); l = s rows after
// row 0 in both branches, which is the only length compatible with the
// telescoping above (invalid classes vanish rather than shorten the table).
ResolutionTable resolution_table(int r, int s, int i, int j);

// [Delta(r,i|s,j)] = sum_g (-1)^g binom(rho+g, g) [P(r+g,i|s-g,j)] in the
// Grothendieck group at q = 1, rho = r if r+s <= j else j-s; coefficients
// are constant Laurent polynomials tagged basis "projective_class".
BasisExpansion delta_in_projectives(int r, int s, int i, int j);

}  // namespace qsl2
