#include <qsl2/bases.hpp>

#include <sstream>
#include <stdexcept>

namespace qsl2 {

namespace {

void check_weight(int r, int s, int i, int j) {
    if (i < 0 || j < 0)
        throw std::out_of_range("twisted basis: negative highest weight");
    if (r < 0 || r > i || s < 0 || s > j)
        throw std::out_of_range("twisted basis: index out of range");
}

// Closed standard-basis expansion; branch == 1 below the wall, 2 above.
// Summands whose first index would leave V_i are dropped.
TensorVector closed_sum(int r, int s, int i, int j, int branch) {
    const ModuleShape shape{i, j};
    TensorVector out(shape);
    const int pmax = branch == 1 ? s : i - r;
    for (int p = 0; p <= pmax; ++p) {
        if (r + p > i || s - p < 0)
            continue;
        LaurentPoly c = branch == 1
            ? LaurentPoly::monomial(1, p * (p - s + j)) * qbinom(p + r, p)
            : LaurentPoly::monomial(1, p * (p + r)) * qbinom(j - s + p, p);
        out.add({r + p, s - p}, RationalQ(c));
    }
    return out;
}

// Divided-power route: E^{(s)}F^{(i-r)} or F^{(i-r)}E^{(s)} on v_i (x) v_0.
TensorVector operator_route(int r, int s, int i, int j, int branch) {
    const ModuleShape shape{i, j};
    TensorVector v = TensorVector::basis(shape, {i, 0});
    if (branch == 1) {
        v = act_divided(Gen::F, i - r, v);
        v = act_divided(Gen::E, s, v);
    } else {
        v = act_divided(Gen::E, s, v);
        v = act_divided(Gen::F, i - r, v);
    }
    return v;
}

TensorVector twisted_branch(int r, int s, int i, int j, int branch) {
    TensorVector closed = closed_sum(r, s, i, j, branch);
    TensorVector applied = operator_route(r, s, i, j, branch);
    if (!(closed == applied))
        throw std::logic_error("twisted basis: operator and closed-sum routes disagree");
    return closed;
}

}  // namespace

std::string BasisExpansion::str() const {
    if (coefficients.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [index, c] : coefficients) {
        if (!first)
            os << " + ";
        first = false;
        if (!c.is_one())
            os << "(" << c.str() << ")*";
        os << "[";
        for (std::size_t k = 0; k < index.size(); ++k)
            os << (k ? "," : "") << index[k];
        os << "]";
    }
    return os.str();
}

Json BasisExpansion::to_json() const {
    Json terms = Json::array();
    for (const auto& [index, c] : coefficients) {
        Json term;
        term["index"] = index;
        term["coeff"] = c.to_json();
        terms.push_back(term);
    }
    Json out;
    out["basis"] = basis;
    out["terms"] = terms;
    return out;
}

TensorVector twisted_canonical(int r, int s, int i, int j) {
    check_weight(r, s, i, j);
    if (r + s < j)
        return twisted_branch(r, s, i, j, 1);
    if (r + s > j)
        return twisted_branch(r, s, i, j, 2);
    // On the wall both descriptions apply and must coincide.
    TensorVector below = twisted_branch(r, s, i, j, 1);
    TensorVector above = twisted_branch(r, s, i, j, 2);
    if (!(below == above))
        throw std::logic_error("twisted basis: wall branches disagree");
    return below;
}

BasisExpansion standard_in_twisted(int r, int s, int i, int j) {
    check_weight(r, s, i, j);
    BasisExpansion out;
    out.basis = "twisted_canonical";
    const bool below = r + s <= j;
    for (int g = 0; r + g <= i && s - g >= 0; ++g) {
        LaurentPoly c = below
            ? LaurentPoly::monomial(1, g * (j - s + 1)) * qbinom(r + g, g)
            : LaurentPoly::monomial(1, g * (r + 1)) * qbinom(j - s + g, g);
        if (g % 2)
            c = -c;
        if (!c.is_zero())
            out.coefficients[{r + g, s - g}] = c;
    }
    return out;
}

LaurentPoly standard_class_in_proper(const std::vector<std::pair<int, int>>& kd) {
    LaurentPoly out(1);
    for (const auto& [k, d] : kd) {
        if (d < 0 || k < 0 || k > d)
            throw std::out_of_range("standard class: weight out of range");
        out = out * qbinom(d, k);
    }
    return out;
}

BasisExpansion projective_class_in_standard(int r, int s, int i, int j) {
    TensorVector v = twisted_canonical(r, s, i, j);
    BasisExpansion out;
    out.basis = "standard";
    for (const auto& [index, c] : v.terms()) {
        if (!c.is_laurent())
            throw std::logic_error("projective class: non-polynomial coefficient");
        out.coefficients[index] = c.as_laurent();
    }
    return out;
}

}  // namespace qsl2
