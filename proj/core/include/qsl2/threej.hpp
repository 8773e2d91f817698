// Quantum 3j-symbols by several independent routes.
//
// For an admissible triple (i,j,k) write x = (i+k-j)/2, y = (j+k-i)/2,
// z = (i+j-k)/2.  The symbol C_{i,j}^k(r,s,t) is the coefficient of the
// dual standard vector v_t^* in A_{i,j}^k (v_r (x) v_s); it vanishes unless
// t = r+s-z.  The routes:
//
//   direct       evaluate the clasp intertwiner and read off the coefficient
//   quantum_sum  q^{-t(k-t)} sum_a (-1)^a q^{gamma_a - a}
//                    [z over a][x over r-a][y over j-s-a]
//   classical    the q=1 integer sum_a (-1)^a C(z,a) C(x,r-a) C(y,j-s-a),
//                a signed count of triangle line arrangements
//   twisted      the same coefficient on the twisted canonical vector
//                v_r spadesuit v_s instead of v_r (x) v_s
//   positivity   closed product form for the twisted route; up to the
//                global sign (-1)^z it lies in N[q,q^-1]
//   alternating  expand v_r (x) v_s back through the spadesuit basis and
//                sum the closed products
//
// All routes must agree where they overlap; the tests sweep them against
// each other.  hat_C evaluates the bent-strand network whose projection
// coefficient differs from C by the monomial
// c = (-q)^{-r} (-q)^{s-j} q^{r(i-r)} q^{s(j-s)}.

#pragma once

#include <qsl2/laurent.hpp>

#include <vector>

namespace qsl2 {

struct TriangleShape {
    int i = 0, j = 0, k = 0;
    int x = 0, y = 0, z = 0;

    bool operator==(const TriangleShape&) const = default;
};

// Checks parity and the triangle inequalities; throws admissibility_error
// naming the failed condition.
TriangleShape triangle_shape(int i, int j, int k);

// One equivalence class of triangle line arrangements: all arrangements
// sharing the count a of reoriented overlap lines.  multiplicity is the
// number of arrangements in the class, sign the common sign, weight the
// common q-exponent gamma_a.
struct ArrangementClass {
    int a = 0;
    Int multiplicity = 0;
    int sign = 1;
    int weight = 0;

    bool operator==(const ArrangementClass&) const = default;
};

// Classes with nonzero multiplicity, ascending in a; empty when t != r+s-z.
std::vector<ArrangementClass> arrangements(int i, int j, int k, int r, int s, int t);

RationalQ threej_direct(int i, int j, int k, int r, int s, int t);
LaurentPoly threej_quantum_sum(int i, int j, int k, int r, int s, int t);
Int threej_classical(int i, int j, int k, int r, int s, int t);
LaurentPoly threej_twisted(int i, int j, int k, int r, int s, int t);
LaurentPoly threej_positivity(int i, int j, int k, int r, int s, int t);
LaurentPoly threej_alternating(int i, int j, int k, int r, int s, int t);

// Coefficient read off the bent-strand network on (V_i, V_k, V_j); satisfies
// C = c * hat_C with the monomial c above (asserted on every call).
RationalQ hat_C(int i, int j, int k, int r, int s, int t);

}  // namespace qsl2
