#include <qsl2/threej.hpp>

#include <qsl2/bases.hpp>
#include <qsl2/networks.hpp>
#include <qsl2/tensor.hpp>

#include <stdexcept>
#include <utility>

namespace qsl2 {

namespace {

// Ordinary binomial coefficient; zero outside 0 <= k <= n.
Int cbinom(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    Int c = 1;
    for (int t = 1; t <= k; ++t)
        c = c * (n - k + t) / t;
    return c;
}

void check_indices(const TriangleShape& shape, int r, int s, int t) {
    if (r < 0 || r > shape.i || s < 0 || s > shape.j || t < 0 || t > shape.k)
        throw std::out_of_range("3j-symbol: weight index out of range");
}

// The q-exponent gamma_a carried by every arrangement in class a.
int gamma_weight(const TriangleShape& sh, int r, int s, int a) {
    const int x = sh.x, y = sh.y, z = sh.z, j = sh.j;
    return ((z - a) + (r - a)) * (y - s + z - a)
         + (r - a) * ((x - r + a) + (z - a))
         + a * (z - a)
         + (j - s - a) * (y - j + s + a);
}

int parity_sign(int e) { return e % 2 ? -1 : 1; }

// Closed product form of the twisted route, one branch of the wall.
LaurentPoly positivity_branch(const TriangleShape& sh, int r, int s, int t, int branch) {
    const int i = sh.i, j = sh.j, k = sh.k, x = sh.x, y = sh.y, z = sh.z;
    int eta;
    LaurentPoly binoms;
    if (branch == 1) {
        eta = s * (k - 2 * t + s) - (i - r) * (k - 2 * x + (i - r)) + x * y - z - t * (k - t);
        binoms = qbinom(k - t + s, s) * qbinom(t - s + i - r, t - s);
    } else {
        eta = -t * (k - t) - (i - r) * (k - 2 * x - 2 * s + (i - r)) - s * (2 * x - k + s)
            + x * y - z;
        binoms = qbinom(i - r + t, t) * qbinom(k - i + r - t + s, s);
    }
    LaurentPoly out = LaurentPoly::monomial(parity_sign(z), eta) * binoms;
    return out;
}

}  // namespace

TriangleShape triangle_shape(int i, int j, int k) {
    if (i < 0 || j < 0 || k < 0)
        throw admissibility_error("triangle shape: negative weight");
    if ((i + j + k) % 2)
        throw admissibility_error("triangle shape: i+j+k must be even");
    if (k > i + j || j > i + k || i > j + k)
        throw admissibility_error("triangle shape: triangle inequality fails");
    return {i, j, k, (i + k - j) / 2, (j + k - i) / 2, (i + j - k) / 2};
}

std::vector<ArrangementClass> arrangements(int i, int j, int k, int r, int s, int t) {
    const TriangleShape sh = triangle_shape(i, j, k);
    check_indices(sh, r, s, t);
    std::vector<ArrangementClass> out;
    if (t != r + s - sh.z)
        return out;
    const int global = parity_sign((i + j + k) / 2 + r + s);
    for (int a = 0; a <= sh.z; ++a) {
        Int mult = cbinom(sh.z, a) * cbinom(sh.x, r - a) * cbinom(sh.y, j - s - a);
        if (mult == 0)
            continue;
        out.push_back({a, mult, parity_sign(a) * global, gamma_weight(sh, r, s, a)});
    }
    return out;
}

RationalQ threej_direct(int i, int j, int k, int r, int s, int t) {
    const TriangleShape sh = triangle_shape(i, j, k);
    check_indices(sh, r, s, t);
    const TensorVector image =
        intertwiner_A(i, j, k).apply(TensorVector::basis({i, j}, {r, s}));
    RationalQ c = dual_coefficient(image, {t});
    if (!c.is_laurent())
        throw std::logic_error("3j-symbol: direct route left a denominator");
    return c;
}

LaurentPoly threej_quantum_sum(int i, int j, int k, int r, int s, int t) {
    const TriangleShape sh = triangle_shape(i, j, k);
    check_indices(sh, r, s, t);
    if (t != r + s - sh.z)
        return LaurentPoly();
    LaurentPoly sum;
    for (int a = 0; a <= sh.z; ++a) {
        LaurentPoly binoms =
            qbinom(sh.z, a) * qbinom(sh.x, r - a) * qbinom(sh.y, j - s - a);
        if (binoms.is_zero())
            continue;
        sum += LaurentPoly::monomial(parity_sign(a), gamma_weight(sh, r, s, a) - a) * binoms;
    }
    return LaurentPoly::monomial(1, -t * (k - t)) * sum;
}

Int threej_classical(int i, int j, int k, int r, int s, int t) {
    const TriangleShape sh = triangle_shape(i, j, k);
    check_indices(sh, r, s, t);
    if (t != r + s - sh.z)
        return 0;
    Int sum = 0;
    for (int a = 0; a <= sh.z; ++a)
        sum += parity_sign(a) * cbinom(sh.z, a) * cbinom(sh.x, r - a)
             * cbinom(sh.y, j - s - a);
    return sum;
}

LaurentPoly threej_twisted(int i, int j, int k, int r, int s, int t) {
    const TriangleShape sh = triangle_shape(i, j, k);
    check_indices(sh, r, s, t);
    const TensorVector image = intertwiner_A(i, j, k).apply(twisted_canonical(r, s, i, j));
    RationalQ c = dual_coefficient(image, {t});
    if (!c.is_laurent())
        throw std::logic_error("3j-symbol: twisted route left a denominator");
    return c.as_laurent();
}

LaurentPoly threej_positivity(int i, int j, int k, int r, int s, int t) {
    const TriangleShape sh = triangle_shape(i, j, k);
    check_indices(sh, r, s, t);
    if (t != r + s - sh.z)
        return LaurentPoly();
    if (r + s < j)
        return positivity_branch(sh, r, s, t, 1);
    if (r + s > j)
        return positivity_branch(sh, r, s, t, 2);
    LaurentPoly below = positivity_branch(sh, r, s, t, 1);
    LaurentPoly above = positivity_branch(sh, r, s, t, 2);
    if (!(below == above))
        throw std::logic_error("3j-symbol: positivity wall branches disagree");
    return below;
}

LaurentPoly threej_alternating(int i, int j, int k, int r, int s, int t) {
    const TriangleShape sh = triangle_shape(i, j, k);
    check_indices(sh, r, s, t);
    BasisExpansion e = standard_in_twisted(r, s, i, j);
    LaurentPoly sum;
    for (const auto& [index, c] : e.coefficients)
        sum += c * threej_positivity(i, j, k, index[0], index[1], t);
    return sum;
}

RationalQ hat_C(int i, int j, int k, int r, int s, int t) {
    const TriangleShape sh = triangle_shape(i, j, k);
    check_indices(sh, r, s, t);
    const int x = sh.x, y = sh.y, z = sh.z;
    const int n = i + j + k;
    // Bent-strand diagram on the blocks (V_i, V_k, V_j): x nested arcs join
    // the first two blocks, y nested arcs the last two, z arcs wrap around.
    std::vector<std::pair<int, int>> arcs;
    for (int m = 1; m <= x; ++m)
        arcs.emplace_back(z + m, i + x + 1 - m);
    for (int m = 1; m <= y; ++m)
        arcs.emplace_back(i + x + m, i + k + y + 1 - m);
    for (int m = 1; m <= z; ++m)
        arcs.emplace_back(m, n + 1 - m);
    const TensorVector w = apply_proj({i, k, j}, arc_state(n, arcs));
    RationalQ hat = dual_coefficient(w, {i - r, t, j - s});
    const int e = s - j - r;
    const LaurentPoly c = LaurentPoly::monomial(parity_sign(e), e + r * (i - r) + s * (j - s));
    if (!(RationalQ(c) * hat == threej_direct(i, j, k, r, s, t)))
        throw std::logic_error("3j-symbol: bent network disagrees with the direct route");
    return hat;
}

}  // namespace qsl2
