#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "qsl2/laurent.hpp"
#include "qsl2/tensor.hpp"

using namespace qsl2;

namespace {

RationalQ qpow(int e) { return RationalQ(LaurentPoly::q(e)); }

// All shapes with given factor count bounds and total degree bound; used by
// the property sweeps.
std::vector<ModuleShape> shapes_up_to(int max_total, int max_factors) {
    std::vector<ModuleShape> out;
    std::vector<ModuleShape> frontier = {ModuleShape{}};
    for (int r = 1; r <= max_factors; ++r) {
        std::vector<ModuleShape> next;
        for (const auto& s : frontier) {
            int used = 0;
            for (int d : s) used += d;
            for (int d = 0; used + d <= max_total; ++d) {
                ModuleShape t = s;
                t.push_back(d);
                next.push_back(t);
                out.push_back(t);
            }
        }
        frontier = std::move(next);
    }
    return out;
}

// All multi-indices of a shape.
std::vector<MultiIndex> indices_of(const ModuleShape& shape) {
    std::vector<MultiIndex> out = {MultiIndex{}};
    for (int d : shape) {
        std::vector<MultiIndex> next;
        for (const auto& a : out)
            for (int i = 0; i <= d; ++i) {
                MultiIndex b = a;
                b.push_back(i);
                next.push_back(b);
            }
        out = std::move(next);
    }
    return out;
}

int total_degree(const ModuleShape& s) {
    int t = 0;
    for (int d : s) t += d;
    return t;
}

}  // namespace

TEST_CASE("single-factor actions") {
    auto v = [](int a) { return TensorVector::basis({2}, {a}); };
    CHECK(act(Gen::E, v(1)) == v(2).scaled(RationalQ(qint(2))));
    CHECK(act(Gen::E, v(2)).is_zero());
    CHECK(act(Gen::F, v(1)) == v(0).scaled(RationalQ(qint(2))));
    CHECK(act(Gen::K, v(0)) == v(0).scaled(qpow(-2)));
    CHECK(act(Gen::Kinv, v(0)) == v(0).scaled(qpow(2)));

    // E^{(2)} v_0 = v_2 in V_2: E^2 v_0 = [1][2] v_2, divided by [2]!.
    CHECK(act_divided(Gen::E, 2, v(0)) == v(2));
    CHECK(act_divided(Gen::E, 0, v(1)) == v(1));
    CHECK(act_divided(Gen::F, 2, v(2)) == v(0));
}

TEST_CASE("comultiplication on two factors") {
    const TensorVector v00 = TensorVector::basis({1, 1}, {0, 0});
    TensorVector expected({1, 1});
    expected.add({0, 1}, RationalQ(1));
    expected.add({1, 0}, qpow(1));
    CHECK(act(Gen::E, v00) == expected);

    // K acts group-like with the total weight.
    CHECK(act(Gen::K, TensorVector::basis({2, 3}, {2, 0})) ==
          TensorVector::basis({2, 3}, {2, 0}).scaled(qpow(-1)));
}

TEST_CASE("quantum sl2 relations hold on all shapes with total degree <= 6") {
    const RationalQ qminus = qpow(1) - qpow(-1);
    for (const auto& shape : shapes_up_to(6, 3)) {
        for (const auto& index : indices_of(shape)) {
            const TensorVector v = TensorVector::basis(shape, index);
            const TensorVector lhs = act(Gen::E, act(Gen::F, v)) - act(Gen::F, act(Gen::E, v));
            const TensorVector rhs =
                (act(Gen::K, v) - act(Gen::Kinv, v)).scaled(qminus.inv());
            CHECK(lhs == rhs);
            CHECK(act(Gen::K, act(Gen::E, act(Gen::Kinv, v))) ==
                  act(Gen::E, v).scaled(qpow(2)));
            CHECK(act(Gen::K, act(Gen::F, act(Gen::Kinv, v))) ==
                  act(Gen::F, v).scaled(qpow(-2)));
            CHECK(act(Gen::Kinv, act(Gen::K, v)) == v);
        }
    }
}

TEST_CASE("divided powers: iterated action agrees with divided comultiplication") {
    for (const auto& shape : shapes_up_to(5, 3)) {
        for (const auto& index : indices_of(shape)) {
            const TensorVector v = TensorVector::basis(shape, index);
            for (int r = 0; r <= 3; ++r) {
                CHECK(act_divided(Gen::E, r, v) == act_divided_comult(Gen::E, r, v));
                CHECK(act_divided(Gen::F, r, v) == act_divided_comult(Gen::F, r, v));
            }
        }
    }
}

TEST_CASE("weight conservation") {
    for (const auto& shape : shapes_up_to(5, 2)) {
        for (const auto& index : indices_of(shape)) {
            const TensorVector v = TensorVector::basis(shape, index);
            const TensorVector ev = act(Gen::E, v);
            for (const auto& [idx, c] : ev.terms())
                CHECK(weight_exponent(shape, idx) == weight_exponent(shape, index) + 2);
        }
    }
    // form_eval vanishes between different weight components.
    const TensorVector a = TensorVector::basis({1, 1}, {1, 0});
    const TensorVector b = TensorVector::basis({1, 1}, {1, 1});
    CHECK(form_eval(a, b).is_zero());
}

TEST_CASE("form_irr") {
    auto v = [](int k, int n) { return TensorVector::basis({n}, {k}); };
    for (int n = 0; n <= 6; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(form_irr(v(k, n), v(k, n)) == RationalQ(qbinom(n, k).shifted(k * (n - k))));
    CHECK(form_irr(v(0, 3), v(1, 3)).is_zero());
    for (int n = 0; n <= 6; ++n)
        for (int i = 0; i <= n; ++i)
            CHECK(form_irr(v(i, n), dual_standard(i, n)) == qpow(i * (n - i)));
    CHECK_THROWS_AS(form_irr(TensorVector::basis({1, 1}, {0, 0}),
                             TensorVector::basis({1, 1}, {0, 0})),
                    std::invalid_argument);
}

TEST_CASE("adjointness of E and F for the evaluation form") {
    // <v_{t+a}, E^{(a)} v_t> = <q^{2at-ak+a^2} F^{(a)} v_{t+a}, v_t> on V_k,
    // the scalar leaving the anti-linear slot as its bar.
    for (int k = 0; k <= 6; ++k) {
        for (int t = 0; t <= k; ++t) {
            for (int a = 0; t + a <= k; ++a) {
                const TensorVector vt = TensorVector::basis({k}, {t});
                const TensorVector vta = TensorVector::basis({k}, {t + a});
                const RationalQ lhs = form_eval(vta, act_divided(Gen::E, a, vt));
                const RationalQ rhs =
                    form_eval(act_divided(Gen::F, a, vta).scaled(qpow(2 * a * t - a * k + a * a)),
                              vt);
                CHECK(lhs == rhs);
                // F-version: <v_t, F^{(a)} v_{t+a}> = <q^{-2at+ak-a^2} E^{(a)} v_t, v_{t+a}>.
                const RationalQ lhs2 = form_eval(vt, act_divided(Gen::F, a, vta));
                const RationalQ rhs2 = form_eval(
                    act_divided(Gen::E, a, vt).scaled(qpow(-(2 * a * t - a * k + a * a))), vta);
                CHECK(lhs2 == rhs2);
            }
        }
    }
}

TEST_CASE("evaluation and pairing forms") {
    const ModuleShape shape{2, 1};
    for (const auto& a : indices_of(shape)) {
        const TensorVector va = TensorVector::basis(shape, a);
        TensorVector dual(shape);
        RationalQ inv_binom(1);
        for (size_t i = 0; i < shape.size(); ++i)
            inv_binom = inv_binom / RationalQ(qbinom(shape[i], a[i]));
        dual.add(a, inv_binom);  // v^a
        int diag = 0;
        for (size_t i = 0; i < shape.size(); ++i) diag += a[i] * (shape[i] - a[i]);
        CHECK(form_eval(va, dual) == qpow(diag));
        CHECK(form_pair(va, dual) == qpow(diag));
        for (const auto& b : indices_of(shape)) {
            if (a == b) continue;
            CHECK(form_eval(va, TensorVector::basis(shape, b)).is_zero());
        }
    }

    // Semi-linearity: anti-linear first slot, linear second slot.
    const TensorVector va = TensorVector::basis(shape, {1, 0});
    CHECK(form_eval(va.scaled(qpow(1)), va) == qpow(-1) * form_eval(va, va));
    CHECK(form_eval(va, va.scaled(qpow(1))) == qpow(1) * form_eval(va, va));
    CHECK(form_pair(va, va.scaled(qpow(1))) == qpow(-1) * form_pair(va, va));
    CHECK(form_eval_bilinear(va.scaled(qpow(1)), va) == qpow(1) * form_eval(va, va));
}

TEST_CASE("dual standard basis") {
    CHECK(dual_standard(1, 2) ==
          TensorVector::basis({2}, {1}).scaled(RationalQ(1) / RationalQ(qint(2))));
    CHECK(dual_standard(0, 4) == TensorVector::basis({4}, {0}));
    CHECK(dual_standard(2, 3) ==
          TensorVector::basis({3}, {2}).scaled(RationalQ(1) / RationalQ(qbinom(3, 2))));
    CHECK_THROWS_AS(dual_standard(4, 3), std::invalid_argument);
    CHECK(dual_coefficient(TensorVector::basis({3}, {2}), {2}) == RationalQ(qbinom(3, 2)));
}

TEST_CASE("tensor vector json and text") {
    TensorVector v({1, 1});
    v.add({0, 1}, RationalQ(1));
    v.add({1, 0}, qpow(1));
    CHECK(TensorVector::from_json(v.to_json()) == v);
    CHECK(v.to_json()["shape"].get<std::vector<int>>() == std::vector<int>{1, 1});
    CHECK(v.str() == "v[0,1] + (1*q)*v[1,0]");
    CHECK(TensorVector({2}).str() == "0");
    CHECK_THROWS_AS(TensorVector::basis({2}, {3}), std::invalid_argument);
    CHECK_THROWS_AS(v.coeff({0}), std::invalid_argument);
}
