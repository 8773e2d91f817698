#include <qsl2/eulerchar.hpp>

#include <sstream>
#include <stdexcept>

namespace qsl2 {

namespace {

void check_even_positive(const std::vector<int>& degrees) {
    for (int d : degrees)
        if (d <= 0 || d % 2)
            throw std::invalid_argument("complete intersection: degrees must be positive even");
}

// Generalized binomial C(e, a) for integer e (possibly negative), a >= 0.
Int gen_binom(const Int& e, int a) {
    Int c = 1;
    for (int t = 0; t < a; ++t)
        c = c * (e - t) / (t + 1);
    return c;
}

// (1 + sign t^m)^e truncated at t^order, e any integer.
LaurentSeries one_plus_tm_pow(int m, int sign, const Int& e, int order) {
    std::vector<Int> coeffs(order, 0);
    for (int a = 0; a * m < order; ++a) {
        Int c = gen_binom(e, a);
        if (sign < 0 && a % 2)
            c = -c;
        coeffs[a * m] = c;
    }
    return LaurentSeries::from_coeffs(0, std::move(coeffs), order);
}

}  // namespace

BigradedSeries BigradedSeries::one(int t_order) {
    BigradedSeries s(t_order);
    if (t_order > 0)
        s.coeffs_[0] = LaurentPoly(1);
    return s;
}

const LaurentPoly& BigradedSeries::coeff(int m) const {
    if (m < 0 || m >= t_order())
        throw std::out_of_range("bigraded series: t-degree beyond truncation");
    return coeffs_[m];
}

BigradedSeries operator*(const BigradedSeries& a, const BigradedSeries& b) {
    BigradedSeries out(std::min(a.t_order(), b.t_order()));
    for (int m = 0; m < out.t_order(); ++m)
        for (int p = 0; p <= m; ++p)
            out.coeffs_[m] += a.coeffs_[p] * b.coeffs_[m - p];
    return out;
}

std::string BigradedSeries::str() const {
    std::ostringstream os;
    for (int m = 0; m < t_order(); ++m)
        os << "t^" << m << ": " << coeffs_[m].str() << "\n";
    return os.str();
}

Json BigradedSeries::to_json() const {
    Json ranks = Json::object();
    for (int m = 0; m < t_order(); ++m)
        ranks[std::to_string(m)] = coeffs_[m].to_json();
    Json out;
    out["t_order"] = t_order();
    out["ranks"] = ranks;
    return out;
}

CIPresentation flag_presentation(int n) {
    if (n < 1)
        throw std::out_of_range("flag presentation: n must be at least 1");
    CIPresentation p;
    p.gen_degrees.assign(n - 1, 2);
    for (int j = 2; j <= n; ++j)
        p.rel_degrees.push_back(2 * j);
    return p;
}

CIPresentation grassmannian_presentation(int k, int n) {
    if (k < 0 || k > n)
        throw std::out_of_range("grassmannian presentation: need 0 <= k <= n");
    CIPresentation p;
    for (int j = 1; j <= k; ++j) {
        p.gen_degrees.push_back(2 * j);
        p.rel_degrees.push_back(2 * (n - k + j));
    }
    return p;
}

BigradedSeries ci_poincare(const std::vector<int>& gen_degrees,
                           const std::vector<int>& rel_degrees, int t_order) {
    check_even_positive(gen_degrees);
    check_even_positive(rel_degrees);
    BigradedSeries out = BigradedSeries::one(t_order);
    for (int g : gen_degrees) {
        std::vector<LaurentPoly> c(t_order);
        if (t_order > 0)
            c[0] = LaurentPoly(1);
        if (t_order > 1)
            c[1] = LaurentPoly::q(g);
        out = out * BigradedSeries(std::move(c));
    }
    for (int r : rel_degrees) {
        std::vector<LaurentPoly> c(t_order);
        for (int a = 0; 2 * a < t_order; ++a)
            c[2 * a] = LaurentPoly::q(r * a);
        out = out * BigradedSeries(std::move(c));
    }
    return out;
}

LaurentSeries euler_inverse(const std::vector<int>& gen_degrees,
                            const std::vector<int>& rel_degrees, int q_order) {
    // Every t in the product carries internal degree at least one, so the
    // t^m coefficient starts at q^m or higher and the alternating sum below
    // is exact once m reaches q_order.
    const BigradedSeries p = ci_poincare(gen_degrees, rel_degrees, q_order);
    LaurentPoly sum;
    for (int m = 0; m < p.t_order(); ++m) {
        if (m % 2)
            sum -= p.coeff(m);
        else
            sum += p.coeff(m);
    }
    return LaurentSeries(sum, q_order);
}

DeviationProfile deviations(const LaurentSeries& p, int M) {
    if (M < 0 || M >= p.order())
        throw std::out_of_range("deviations: M must lie below the series order");
    if (p.min_exp() < 0 || p.coeff(0) != 1)
        throw std::invalid_argument("deviations: series must have constant term 1");
    LaurentSeries qm = p.truncated(M + 1);
    DeviationProfile prof;
    for (int m = 1; m <= M; ++m) {
        const Int cm = qm.coeff(m);
        prof.c.push_back(cm);
        // Remove the degree-m factor: odd m divides by (1+t^m)^{c_m}, even m
        // multiplies by (1-t^m)^{c_m}.
        if (m % 2)
            qm = qm * one_plus_tm_pow(m, +1, -cm, M + 1);
        else
            qm = qm * one_plus_tm_pow(m, -1, cm, M + 1);
    }
    return prof;
}

LaurentSeries reconstruct(const DeviationProfile& prof, int M) {
    LaurentSeries out(LaurentPoly(1), M + 1);
    for (size_t idx = 0; idx < prof.c.size(); ++idx) {
        const int m = static_cast<int>(idx) + 1;
        if (m > M)
            break;
        if (m % 2)
            out = out * one_plus_tm_pow(m, +1, prof.c[idx], M + 1);
        else
            out = out * one_plus_tm_pow(m, -1, -prof.c[idx], M + 1);
    }
    return out;
}

LaurentPoly grassmannian_poincare(int k, int n) {
    if (k < 0 || k > n)
        throw std::out_of_range("grassmannian poincare: need 0 <= k <= n");
    return LaurentPoly::monomial(1, k * (n - k)) * qbinom(n, k);
}

LaurentSeries standard_ext_euler(const std::vector<std::pair<int, int>>& kd, int q_order) {
    LaurentPoly den(1);
    for (const auto& [k, d] : kd)
        den = den * grassmannian_poincare(k, d);
    return series_from_ratfun(RationalQ(LaurentPoly(1), den), q_order);
}

LaurentPoly endring_graded_dim(const std::vector<std::pair<int, int>>& kd) {
    LaurentPoly out(1);
    for (const auto& [k, d] : kd)
        out = out * grassmannian_poincare(k, d);
    return out;
}

}  // namespace qsl2
