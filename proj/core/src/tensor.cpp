#include "qsl2/tensor.hpp"

#include <sstream>
#include <stdexcept>

namespace qsl2 {

namespace {

void check_index(const ModuleShape& shape, const MultiIndex& index) {
    if (index.size() != shape.size())
        throw std::invalid_argument("tensor index rank mismatch");
    for (size_t i = 0; i < shape.size(); ++i)
        if (index[i] < 0 || index[i] > shape[i])
            throw std::invalid_argument("tensor index out of range");
}

void check_same_shape(const TensorVector& v, const TensorVector& w) {
    if (v.shape() != w.shape())
        throw std::invalid_argument("tensor shape mismatch");
}

}  // namespace

// ---------------------------------------------------------------- TensorVector

TensorVector TensorVector::basis(ModuleShape shape, MultiIndex index) {
    check_index(shape, index);
    TensorVector v(std::move(shape));
    v.terms_.emplace(std::move(index), RationalQ(1));
    return v;
}

RationalQ TensorVector::coeff(const MultiIndex& index) const {
    check_index(shape_, index);
    auto it = terms_.find(index);
    return it == terms_.end() ? RationalQ() : it->second;
}

void TensorVector::add(const MultiIndex& index, const RationalQ& c) {
    check_index(shape_, index);
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(index, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TensorVector& TensorVector::operator+=(const TensorVector& other) {
    check_same_shape(*this, other);
    for (const auto& [index, c] : other.terms_) add(index, c);
    return *this;
}

TensorVector& TensorVector::operator-=(const TensorVector& other) {
    check_same_shape(*this, other);
    for (const auto& [index, c] : other.terms_) add(index, -c);
    return *this;
}

TensorVector TensorVector::scaled(const RationalQ& c) const {
    TensorVector result(shape_);
    if (c.is_zero()) return result;
    for (const auto& [index, coeff] : terms_)
        result.terms_.emplace(index, coeff * c);
    return result;
}

TensorVector TensorVector::barred_coeffs() const {
    TensorVector result(shape_);
    for (const auto& [index, coeff] : terms_)
        result.terms_.emplace(index, coeff.barred());
    return result;
}

std::string TensorVector::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [index, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        if (c != RationalQ(1)) out << "(" << c.str() << ")*";
        out << "v[";
        for (size_t i = 0; i < index.size(); ++i) {
            if (i) out << ",";
            out << index[i];
        }
        out << "]";
    }
    return out.str();
}

Json TensorVector::to_json() const {
    Json j;
    j["shape"] = shape_;
    Json terms = Json::array();
    for (const auto& [index, c] : terms_) {
        Json term;
        term["index"] = index;
        term["coeff"] = c.to_json();
        terms.push_back(std::move(term));
    }
    j["terms"] = std::move(terms);
    return j;
}

TensorVector TensorVector::from_json(const Json& j) {
    TensorVector v(j.at("shape").get<ModuleShape>());
    for (const auto& term : j.at("terms"))
        v.add(term.at("index").get<MultiIndex>(), RationalQ::from_json(term.at("coeff")));
    return v;
}

int weight_exponent(const ModuleShape& shape, const MultiIndex& index) {
    int w = 0;
    for (size_t i = 0; i < shape.size(); ++i) w += 2 * index[i] - shape[i];
    return w;
}

// ---------------------------------------------------------------- actions

namespace {

// Weight exponent 2a-d of a single factor.
int factor_weight(int d, int a) { return 2 * a - d; }

// E v_a = [a+1] v_{a+1}, F v_a = [d-a+1] v_{a-1} on V_d.  Returns the
// coefficient and writes the shifted index; a zero result means the vector
// left the range 0..d.
LaurentPoly single_step(Gen g, int d, int a, int* out_index) {
    if (g == Gen::E) {
        if (a + 1 > d) return LaurentPoly();
        *out_index = a + 1;
        return qint(a + 1);
    }
    if (a - 1 < 0) return LaurentPoly();
    *out_index = a - 1;
    return qint(d - a + 1);
}

}  // namespace

TensorVector act(Gen g, const TensorVector& v) {
    const ModuleShape& shape = v.shape();
    TensorVector result(shape);
    const size_t r = shape.size();
    for (const auto& [index, c] : v.terms()) {
        if (g == Gen::K || g == Gen::Kinv) {
            int w = weight_exponent(shape, index);
            if (g == Gen::Kinv) w = -w;
            result.add(index, c * RationalQ(LaurentPoly::monomial(Int(1), w)));
            continue;
        }
        // Δ^{(r-1)}(E) = Σ_m 1^{⊗(m-1)} ⊗ E ⊗ (K^{-1})^{⊗(r-m)} and
        // Δ^{(r-1)}(F) = Σ_m K^{⊗(m-1)} ⊗ F ⊗ 1^{⊗(r-m)}.
        for (size_t m = 0; m < r; ++m) {
            int new_index = 0;
            LaurentPoly step = single_step(g, shape[m], index[m], &new_index);
            if (step.is_zero()) continue;
            int kexp = 0;
            if (g == Gen::E) {
                for (size_t l = m + 1; l < r; ++l)
                    kexp -= factor_weight(shape[l], index[l]);
            } else {
                for (size_t l = 0; l < m; ++l)
                    kexp += factor_weight(shape[l], index[l]);
            }
            MultiIndex target = index;
            target[m] = new_index;
            result.add(target, c * RationalQ(step.shifted(kexp)));
        }
    }
    return result;
}

TensorVector act_divided(Gen g, int r, const TensorVector& v) {
    if (g != Gen::E && g != Gen::F)
        throw std::invalid_argument("act_divided: generator must be E or F");
    if (r < 0) throw std::invalid_argument("act_divided: negative power");
    TensorVector result = v;
    for (int step = 0; step < r; ++step) result = act(g, result);
    if (r >= 2) result = result.scaled(RationalQ(1) / RationalQ(qfact(r)));
    return result;
}

namespace {

// E^{(r)} v_a = qbinom(a+r, r) v_{a+r}, F^{(r)} v_a = qbinom(d-a+r, r) v_{a-r}
// on a single factor V_d.
LaurentPoly single_divided(Gen g, int r, int d, int a, int* out_index) {
    if (g == Gen::E) {
        if (a + r > d) return LaurentPoly();
        *out_index = a + r;
        return qbinom(a + r, r);
    }
    if (a - r < 0) return LaurentPoly();
    *out_index = a - r;
    return qbinom(d - a + r, r);
}

// Applies E^{(r)} or F^{(r)} to the factors first.. of the basis vector
// `index` through the divided-power comultiplication, accumulating c * (...)
// into result.
void divided_comult_rec(Gen g, int r, const ModuleShape& shape, MultiIndex& index,
                        size_t first, const RationalQ& c, TensorVector& result) {
    const size_t rest = shape.size() - first;
    if (rest == 0) {
        if (r == 0) result.add(index, c);
        return;
    }
    if (rest == 1) {
        int new_index = 0;
        LaurentPoly step = single_divided(g, r, shape[first], index[first], &new_index);
        if (step.is_zero()) return;
        int old_index = index[first];
        index[first] = new_index;
        result.add(index, c * RationalQ(step));
        index[first] = old_index;
        return;
    }
    // Split off the first factor: r' acts on it, r'' on the remaining ones.
    for (int rp = 0; rp <= r; ++rp) {
        const int rpp = r - rp;
        int new_index = 0;
        LaurentPoly head = single_divided(g, rp, shape[first], index[first], &new_index);
        if (head.is_zero()) continue;
        // q^{-r'r''} from the comultiplication, plus the group-like tail: for
        // E the K^{-r'} acts on the remaining factors, for F the K^{r''} acts
        // on the first factor.  Both act before the divided power moves any
        // index, so the weights come from the input index.
        int kexp = -rp * rpp;
        if (g == Gen::E) {
            for (size_t l = first + 1; l < shape.size(); ++l)
                kexp -= rp * factor_weight(shape[l], index[l]);
        } else {
            kexp += rpp * factor_weight(shape[first], index[first]);
        }
        int old_index = index[first];
        index[first] = new_index;
        RationalQ scale(LaurentPoly::monomial(Int(1), kexp));
        divided_comult_rec(g, rpp, shape, index, first + 1, c * RationalQ(head) * scale,
                           result);
        index[first] = old_index;
    }
}

}  // namespace

TensorVector act_divided_comult(Gen g, int r, const TensorVector& v) {
    if (g != Gen::E && g != Gen::F)
        throw std::invalid_argument("act_divided_comult: generator must be E or F");
    if (r < 0) throw std::invalid_argument("act_divided_comult: negative power");
    const ModuleShape& shape = v.shape();
    TensorVector result(shape);
    for (const auto& [index, c] : v.terms()) {
        MultiIndex scratch = index;
        divided_comult_rec(g, r, shape, scratch, 0, c, result);
    }
    return result;
}

// ---------------------------------------------------------------- forms

namespace {

enum class Slot { linear, anti };

// Diagonal value ∏ q^{a_i(d_i-a_i)} qbinom(d_i, a_i) of the evaluation and
// pairing forms on (v_a, v_a); the quantum binomial enters because the second
// argument is a standard rather than dual standard basis vector.
LaurentPoly diagonal_value(const ModuleShape& shape, const MultiIndex& index) {
    LaurentPoly value(Int(1));
    for (size_t i = 0; i < shape.size(); ++i) {
        const int a = index[i];
        const int d = shape[i];
        value *= qbinom(d, a).shifted(a * (d - a));
    }
    return value;
}

RationalQ diagonal_form(const TensorVector& v, const TensorVector& w, Slot first,
                        Slot second) {
    check_same_shape(v, w);
    RationalQ total;
    for (const auto& [index, cv] : v.terms()) {
        auto it = w.terms().find(index);
        if (it == w.terms().end()) continue;
        RationalQ a = (first == Slot::anti) ? cv.barred() : cv;
        RationalQ b = (second == Slot::anti) ? it->second.barred() : it->second;
        total += a * b * RationalQ(diagonal_value(v.shape(), index));
    }
    return total;
}

}  // namespace

RationalQ form_irr(const TensorVector& v, const TensorVector& w) {
    check_same_shape(v, w);
    if (v.shape().size() != 1)
        throw std::invalid_argument("form_irr: vectors must live in a single V_n");
    const int n = v.shape()[0];
    RationalQ total;
    for (const auto& [index, cv] : v.terms()) {
        auto it = w.terms().find(index);
        if (it == w.terms().end()) continue;
        const int k = index[0];
        total += cv * it->second * RationalQ(qbinom(n, k).shifted(k * (n - k)));
    }
    return total;
}

RationalQ form_eval(const TensorVector& v, const TensorVector& w) {
    return diagonal_form(v, w, Slot::anti, Slot::linear);
}

RationalQ form_eval_bilinear(const TensorVector& v, const TensorVector& w) {
    return diagonal_form(v, w, Slot::linear, Slot::linear);
}

RationalQ form_pair(const TensorVector& v, const TensorVector& w) {
    return diagonal_form(v, w, Slot::anti, Slot::anti);
}

TensorVector dual_standard(int k, int n) {
    if (n < 0 || k < 0 || k > n)
        throw std::invalid_argument("dual_standard: index out of range");
    TensorVector v(ModuleShape{n});
    v.add(MultiIndex{k}, RationalQ(1) / RationalQ(qbinom(n, k)));
    return v;
}

RationalQ dual_coefficient(const TensorVector& v, const MultiIndex& index) {
    RationalQ c = v.coeff(index);
    LaurentPoly scale(Int(1));
    for (size_t i = 0; i < v.shape().size(); ++i)
        scale *= qbinom(v.shape()[i], index[i]);
    return c * RationalQ(scale);
}

}  // namespace qsl2
