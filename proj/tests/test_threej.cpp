#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qsl2/threej.hpp>

#include <qsl2/bases.hpp>

#include <stdexcept>
#include <vector>

using qsl2::ArrangementClass;
using qsl2::Int;
using qsl2::LaurentPoly;
using qsl2::RationalQ;
using qsl2::TriangleShape;

namespace {

LaurentPoly q(int e = 1) { return LaurentPoly::q(e); }

Int binom(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    Int c = 1;
    for (int t = 1; t <= k; ++t)
        c = c * (n - k + t) / t;
    return c;
}

// All admissible (i,j,k,r,s,t) with the given bounds; t is forced by weight.
struct Tuple {
    int i, j, k, r, s, t;
};
std::vector<Tuple> sweep(int max_i, int max_j, int max_ij_sum) {
    std::vector<Tuple> out;
    for (int i = 0; i <= max_i; ++i)
        for (int j = 0; j <= max_j && i + j <= max_ij_sum; ++j)
            for (int k = (i + j) % 2; k <= i + j; k += 2) {
                if (k < i - j || k < j - i)
                    continue;
                const int z = (i + j - k) / 2;
                for (int r = 0; r <= i; ++r)
                    for (int s = 0; s <= j; ++s) {
                        const int t = r + s - z;
                        if (t < 0 || t > k)
                            continue;
                        out.push_back({i, j, k, r, s, t});
                    }
            }
    return out;
}

}  // namespace

TEST_CASE("triangle shape") {
    TriangleShape sh = qsl2::triangle_shape(4, 5, 5);
    CHECK(sh.x == 2);
    CHECK(sh.y == 3);
    CHECK(sh.z == 2);

    for (int n = 0; n <= 4; ++n) {
        TriangleShape nn0 = qsl2::triangle_shape(n, n, 0);
        CHECK(nn0.x == 0);
        CHECK(nn0.y == 0);
        CHECK(nn0.z == n);
    }

    CHECK_THROWS_AS(qsl2::triangle_shape(1, 1, 3), qsl2::admissibility_error);
    CHECK_THROWS_AS(qsl2::triangle_shape(1, 1, 1), qsl2::admissibility_error);
    CHECK_THROWS_AS(qsl2::triangle_shape(0, 0, 2), qsl2::admissibility_error);
    CHECK_THROWS_AS(qsl2::triangle_shape(-2, 1, 1), qsl2::admissibility_error);
}

TEST_CASE("arrangement classes") {
    // The showcase triangle: raw count 16, classes 1 - 12 + 3, weights 16, 9, 2.
    std::vector<ArrangementClass> cl = qsl2::arrangements(4, 5, 5, 2, 2, 2);
    REQUIRE(cl.size() == 3);
    CHECK(cl[0].a == 0);
    CHECK(cl[0].multiplicity == 1);
    CHECK(cl[0].weight == 16);
    CHECK(cl[1].a == 1);
    CHECK(cl[1].multiplicity == 12);
    CHECK(cl[1].weight == 9);
    CHECK(cl[2].a == 2);
    CHECK(cl[2].multiplicity == 3);
    CHECK(cl[2].weight == 2);
    Int raw = 0;
    Int signed_total = 0;
    for (const ArrangementClass& c : cl) {
        CHECK((c.sign == 1 || c.sign == -1));
        raw += c.multiplicity;
        signed_total += c.sign * c.multiplicity;
    }
    CHECK(raw == 16);
    // Global sign (-1)^{(i+j+k)/2 + r + s} relates the signed count to the
    // classical symbol: here (-1)^11 * (-8) = 8.
    CHECK(signed_total == 8);
    CHECK(qsl2::threej_classical(4, 5, 5, 2, 2, 2) == -8);

    std::vector<ArrangementClass> small = qsl2::arrangements(2, 2, 2, 1, 1, 1);
    REQUIRE(small.size() == 2);
    CHECK(small[0].a == 0);
    CHECK(small[0].weight == 3);
    CHECK(small[1].a == 1);
    CHECK(small[1].weight == 0);

    // Weight mismatch leaves no arrangements.
    CHECK(qsl2::arrangements(2, 2, 2, 0, 0, 0).empty());
    CHECK_THROWS_AS(qsl2::arrangements(1, 1, 3, 0, 0, 0), qsl2::admissibility_error);
    CHECK_THROWS_AS(qsl2::arrangements(2, 2, 2, 3, 0, 0), std::out_of_range);
}

TEST_CASE("direct route: pinned tables") {
    // C_{2,2}^2 at the seven admissible index triples.
    CHECK(qsl2::threej_direct(2, 2, 2, 1, 1, 1) == RationalQ(q(2) - q(-2)));
    CHECK(qsl2::threej_direct(2, 2, 2, 1, 0, 0) == RationalQ(-q(-1)));
    CHECK(qsl2::threej_direct(2, 2, 2, 2, 0, 1) == RationalQ(-q(-1)));
    CHECK(qsl2::threej_direct(2, 2, 2, 0, 1, 0) == RationalQ(q()));
    CHECK(qsl2::threej_direct(2, 2, 2, 2, 1, 2) == RationalQ(-q(-1)));
    CHECK(qsl2::threej_direct(2, 2, 2, 0, 2, 1) == RationalQ(q(-1)));
    CHECK(qsl2::threej_direct(2, 2, 2, 1, 2, 2) == RationalQ(q()));

    // C_{2,1}^1 at its four admissible triples.
    CHECK(qsl2::threej_direct(2, 1, 1, 2, 0, 1) == RationalQ(-q(-1)));
    CHECK(qsl2::threej_direct(2, 1, 1, 1, 0, 0) == RationalQ(-q(-1)));
    CHECK(qsl2::threej_direct(2, 1, 1, 1, 1, 1) == RationalQ(q()));
    CHECK(qsl2::threej_direct(2, 1, 1, 0, 1, 0) == RationalQ(1));

    // Weight mismatch vanishes.
    CHECK(qsl2::threej_direct(2, 2, 2, 0, 0, 0) == RationalQ(0));
    CHECK(qsl2::threej_direct(2, 2, 2, 2, 2, 1) == RationalQ(0));
}

TEST_CASE("quantum sum route agrees with the direct route") {
    CHECK(qsl2::threej_quantum_sum(2, 2, 2, 1, 1, 1) == q(2) - q(-2));
    CHECK(qsl2::threej_quantum_sum(2, 2, 2, 0, 1, 0) == q());
    CHECK(qsl2::threej_quantum_sum(2, 2, 2, 0, 0, 0) == LaurentPoly());

    // The (4,5,5) expansion specializes to -8 at q=1.
    CHECK(qsl2::threej_quantum_sum(4, 5, 5, 2, 2, 2).at_one() == -8);

    for (const Tuple& u : sweep(6, 6, 6)) {
        CHECK(RationalQ(qsl2::threej_quantum_sum(u.i, u.j, u.k, u.r, u.s, u.t))
              == qsl2::threej_direct(u.i, u.j, u.k, u.r, u.s, u.t));
    }
}

TEST_CASE("classical route") {
    CHECK(qsl2::threej_classical(4, 5, 5, 2, 2, 2) == -8);
    CHECK(qsl2::threej_classical(2, 2, 2, 1, 1, 1) == 0);

    // Collapsed sum for (n,n,0): a single surviving term (-1)^r C(n,r).
    for (int n = 0; n <= 5; ++n)
        for (int r = 0; r <= n; ++r) {
            Int want = binom(n, r);
            if (r % 2)
                want = -want;
            CHECK(qsl2::threej_classical(n, n, 0, r, n - r, 0) == want);
        }

    for (const Tuple& u : sweep(6, 6, 6)) {
        CHECK(qsl2::threej_classical(u.i, u.j, u.k, u.r, u.s, u.t)
              == qsl2::threej_quantum_sum(u.i, u.j, u.k, u.r, u.s, u.t).at_one());
    }
}

TEST_CASE("twisted and positivity routes") {
    // At the extreme weight the spadesuit vector is standard.
    CHECK(RationalQ(qsl2::threej_twisted(1, 1, 2, 1, 1, 2))
          == qsl2::threej_direct(1, 1, 2, 1, 1, 2));
    CHECK(qsl2::threej_twisted(1, 1, 2, 1, 1, 2) == LaurentPoly(1));

    // Wall case computed through the spadesuit expansion of v_1 (x) v_1.
    CHECK(qsl2::threej_twisted(2, 2, 2, 1, 1, 1) == -q(-2) - LaurentPoly(1));
    CHECK(qsl2::threej_positivity(2, 2, 2, 1, 1, 1) == -q(-2) - LaurentPoly(1));

    for (const Tuple& u : sweep(4, 4, 8)) {
        LaurentPoly d = qsl2::threej_positivity(u.i, u.j, u.k, u.r, u.s, u.t);
        CHECK(qsl2::threej_twisted(u.i, u.j, u.k, u.r, u.s, u.t) == d);
        // Up to the global sign (-1)^z the symbol lies in N[q,q^-1].
        if ((u.i + u.j - u.k) / 2 % 2)
            d = -d;
        CHECK(d.nonneg_coeffs());
    }
}

TEST_CASE("alternating route") {
    CHECK(qsl2::threej_alternating(2, 2, 2, 1, 1, 1) == q(2) - q(-2));
    CHECK(qsl2::threej_alternating(2, 2, 2, 1, 0, 0) == -q(-1));

    // Top weight r=i: the expansion has a single term.
    CHECK(qsl2::standard_in_twisted(2, 1, 2, 3).coefficients.size() == 1);
    CHECK(qsl2::threej_alternating(2, 3, 3, 2, 1, 2)
          == qsl2::threej_positivity(2, 3, 3, 2, 1, 2));

    for (const Tuple& u : sweep(3, 3, 6)) {
        CHECK(RationalQ(qsl2::threej_alternating(u.i, u.j, u.k, u.r, u.s, u.t))
              == qsl2::threej_direct(u.i, u.j, u.k, u.r, u.s, u.t));
    }
}

TEST_CASE("bent network coefficients") {
    // hat-C_{2,2}^2 table.
    CHECK(qsl2::hat_C(2, 2, 2, 1, 1, 1) == RationalQ(q(2) - q(-2)));
    CHECK(qsl2::hat_C(2, 2, 2, 1, 0, 0) == RationalQ(q()));
    CHECK(qsl2::hat_C(2, 2, 2, 2, 0, 1) == RationalQ(-q(3)));
    CHECK(qsl2::hat_C(2, 2, 2, 0, 1, 0) == RationalQ(-q()));
    CHECK(qsl2::hat_C(2, 2, 2, 2, 1, 2) == RationalQ(q()));
    CHECK(qsl2::hat_C(2, 2, 2, 0, 2, 1) == RationalQ(q(-1)));
    CHECK(qsl2::hat_C(2, 2, 2, 1, 2, 2) == RationalQ(-q()));

    // hat-C_{2,1}^1 table.
    CHECK(qsl2::hat_C(2, 1, 1, 2, 0, 1) == RationalQ(q(2)));
    CHECK(qsl2::hat_C(2, 1, 1, 1, 0, 0) == RationalQ(-1));
    CHECK(qsl2::hat_C(2, 1, 1, 1, 1, 1) == RationalQ(-q()));
    CHECK(qsl2::hat_C(2, 1, 1, 0, 1, 0) == RationalQ(1));

    // The constant relating C and hat-C is asserted inside hat_C; sweep a
    // range of shapes to exercise the assertion.
    for (const Tuple& u : sweep(3, 3, 6))
        CHECK_NOTHROW(qsl2::hat_C(u.i, u.j, u.k, u.r, u.s, u.t));
}
