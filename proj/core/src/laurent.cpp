#include "qsl2/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace qsl2 {

// ---------------------------------------------------------------- LaurentPoly

void LaurentPoly::set(int exp, const Int& c) {
    if (c == 0)
        terms_.erase(exp);
    else
        terms_[exp] = c;
}

LaurentPoly LaurentPoly::monomial(const Int& coeff, int exp) {
    LaurentPoly p;
    p.set(exp, coeff);
    return p;
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

int LaurentPoly::min_exp() const {
    if (is_zero()) throw std::logic_error("LaurentPoly: min_exp of zero");
    return terms_.begin()->first;
}

int LaurentPoly::max_exp() const {
    if (is_zero()) throw std::logic_error("LaurentPoly: max_exp of zero");
    return terms_.rbegin()->first;
}

Int LaurentPoly::coeff(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Int(0) : it->second;
}

bool LaurentPoly::nonneg_coeffs() const {
    for (const auto& [e, c] : terms_)
        if (c < 0) return false;
    return true;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, -c);
        } else {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            auto it = r.terms_.find(ea + eb);
            if (it == r.terms_.end()) {
                r.terms_.emplace(ea + eb, ca * cb);
            } else {
                it->second += ca * cb;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly LaurentPoly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("LaurentPoly::pow: negative exponent");
    LaurentPoly r(1);
    for (int i = 0; i < e; ++i) r *= *this;
    return r;
}

LaurentPoly LaurentPoly::shifted(int e) const {
    LaurentPoly r;
    for (const auto& [ex, c] : terms_) r.terms_.emplace(ex + e, c);
    return r;
}

LaurentPoly LaurentPoly::barred() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
    return r;
}

Int LaurentPoly::at_one() const {
    Int s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

std::string LaurentPoly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += c.str();
        if (e == 1)
            out += "*q";
        else if (e != 0)
            out += "*q^" + std::to_string(e);
    }
    return out;
}

namespace {

// Integer token at s[pos...]: optional '-', then digits. Advances pos.
Int parse_int_token(const std::string& s, size_t& pos, const char* what) {
    size_t begin = pos;
    if (pos < s.size() && s[pos] == '-') ++pos;
    size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == digits)
        throw parse_error(std::string("expected ") + what, -1, static_cast<int>(begin) + 1);
    return Int(s.substr(begin, pos - begin));
}

void skip_ws(const std::string& s, size_t& pos) {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

} // namespace

LaurentPoly LaurentPoly::parse(const std::string& text) {
    LaurentPoly result;
    size_t pos = 0;
    skip_ws(text, pos);
    if (pos == text.size()) throw parse_error("empty polynomial", -1, 1);
    while (true) {
        Int c = parse_int_token(text, pos, "integer coefficient");
        int e = 0;
        if (pos < text.size() && text[pos] == '*') {
            ++pos;
            if (pos >= text.size() || text[pos] != 'q')
                throw parse_error("expected 'q' after '*'", -1, static_cast<int>(pos) + 1);
            ++pos;
            e = 1;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                Int ee = parse_int_token(text, pos, "integer exponent");
                if (ee > 1000000 || ee < -1000000)
                    throw parse_error("exponent out of range", -1, static_cast<int>(pos));
                e = static_cast<int>(ee);
            }
        }
        result += monomial(c, e);
        skip_ws(text, pos);
        if (pos == text.size()) break;
        if (text[pos] != '+')
            throw parse_error("expected '+' between terms", -1, static_cast<int>(pos) + 1);
        ++pos;
        skip_ws(text, pos);
    }
    return result;
}

Json LaurentPoly::to_json() const {
    Json arr = Json::array();
    for (const auto& [e, c] : terms_) arr.push_back(Json::array({e, c.str()}));
    return arr;
}

LaurentPoly LaurentPoly::from_json(const Json& j) {
    if (!j.is_array()) throw parse_error("LaurentPoly JSON: expected array");
    LaurentPoly p;
    for (const auto& pair : j) {
        if (!pair.is_array() || pair.size() != 2)
            throw parse_error("LaurentPoly JSON: expected [exponent, coefficient] pair");
        int e = pair[0].get<int>();
        Int c(pair[1].get<std::string>());
        p += monomial(c, e);
    }
    return p;
}

// ------------------------------------------------ dense Z[q] helpers for gcd

namespace {

using ZP = std::vector<Int>; // ascending coefficients, no trailing zeros; empty = 0

void ztrim(ZP& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int zdeg(const ZP& p) { return static_cast<int>(p.size()) - 1; }

ZP to_dense(const LaurentPoly& p, int shift) {
    // p * q^{-shift} must be an ordinary polynomial
    ZP d;
    if (p.is_zero()) return d;
    d.assign(p.max_exp() - shift + 1, 0);
    for (const auto& [e, c] : p.terms()) d[e - shift] = c;
    return d;
}

LaurentPoly from_dense(const ZP& p, int shift) {
    LaurentPoly r;
    for (size_t i = 0; i < p.size(); ++i)
        if (p[i] != 0) r += LaurentPoly::monomial(p[i], static_cast<int>(i) + shift);
    return r;
}

Int zcontent(const ZP& p) {
    Int g = 0;
    for (const Int& c : p) g = boost::multiprecision::gcd(g, c);
    return g; // nonneg; 0 for the zero polynomial
}

ZP zscale_down(ZP p, const Int& d) {
    for (Int& c : p) c /= d;
    return p;
}

// Divide by content and force a positive leading coefficient.
ZP zprimitive(ZP p) {
    ztrim(p);
    if (p.empty()) return p;
    Int c = zcontent(p);
    if (p.back() < 0) c = -c;
    if (c != 1) p = zscale_down(std::move(p), c);
    return p;
}

// Pseudo-remainder: repeatedly cancel the top term, scaling by lc(b).
ZP zprem(ZP a, const ZP& b) {
    ztrim(a);
    const Int& lb = b.back();
    while (!a.empty() && zdeg(a) >= zdeg(b)) {
        Int la = a.back();
        int k = zdeg(a) - zdeg(b);
        for (Int& c : a) c *= lb;
        for (size_t i = 0; i < b.size(); ++i) a[i + k] -= la * b[i];
        ztrim(a);
    }
    return a;
}

// Primitive polynomial gcd over Z[q] (primitive PRS; inputs here are tiny).
ZP zgcd(ZP a, ZP b) {
    a = zprimitive(std::move(a));
    b = zprimitive(std::move(b));
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (zdeg(a) < zdeg(b)) std::swap(a, b);
    while (!b.empty()) {
        ZP r = zprimitive(zprem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Exact quotient a/b in Z[q]; logic_error if the division is not exact.
ZP zdiv_exact(ZP a, const ZP& b) {
    ztrim(a);
    if (b.empty()) throw std::logic_error("zdiv_exact: division by zero");
    if (a.empty()) return a;
    if (zdeg(a) < zdeg(b)) throw std::logic_error("zdiv_exact: not divisible");
    ZP quot(zdeg(a) - zdeg(b) + 1, Int(0));
    const Int& lb = b.back();
    for (int i = zdeg(a); i >= zdeg(b); --i) {
        if (a[i] == 0) continue;
        Int qc, rem;
        boost::multiprecision::divide_qr(a[i], lb, qc, rem);
        if (rem != 0) throw std::logic_error("zdiv_exact: not divisible");
        int k = i - zdeg(b);
        quot[k] = qc;
        for (size_t t = 0; t < b.size(); ++t) a[t + k] -= qc * b[t];
    }
    ztrim(a);
    if (!a.empty()) throw std::logic_error("zdiv_exact: nonzero remainder");
    return quot;
}

} // namespace

// ----------------------------------------------------------------- RationalQ

RationalQ::RationalQ(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    reduce();
}

void RationalQ::reduce() {
    if (den_.is_zero()) throw std::domain_error("RationalQ: zero denominator");
    if (num_.is_zero()) {
        den_ = LaurentPoly(1);
        return;
    }
    if (den_.is_one()) return;
    int a = num_.min_exp();
    int b = den_.min_exp();
    ZP n = to_dense(num_, a);
    ZP d = to_dense(den_, b);
    ZP g = zgcd(n, d);
    if (zdeg(g) > 0) {
        n = zdiv_exact(std::move(n), g);
        d = zdiv_exact(std::move(d), g);
    }
    Int cg = boost::multiprecision::gcd(zcontent(n), zcontent(d));
    if (d.back() < 0) cg = -cg;
    if (cg != 1) {
        n = zscale_down(std::move(n), cg);
        d = zscale_down(std::move(d), cg);
    }
    num_ = from_dense(n, a - b);
    den_ = from_dense(d, 0);
}

const LaurentPoly& RationalQ::as_laurent() const {
    if (!is_laurent())
        throw std::logic_error("RationalQ: not a Laurent polynomial: " + str());
    return num_;
}

RationalQ& RationalQ::operator+=(const RationalQ& o) {
    if (den_.is_one() && o.den_.is_one()) {
        num_ += o.num_;
        return *this;
    }
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    reduce();
    return *this;
}

RationalQ& RationalQ::operator-=(const RationalQ& o) {
    if (den_.is_one() && o.den_.is_one()) {
        num_ -= o.num_;
        return *this;
    }
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    reduce();
    return *this;
}

RationalQ& RationalQ::operator*=(const RationalQ& o) {
    num_ *= o.num_;
    if (den_.is_one() && o.den_.is_one()) return *this;
    den_ *= o.den_;
    reduce();
    return *this;
}

RationalQ& RationalQ::operator/=(const RationalQ& o) {
    if (o.is_zero()) throw std::domain_error("RationalQ: division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    reduce();
    return *this;
}

RationalQ RationalQ::operator-() const {
    RationalQ r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalQ RationalQ::inv() const {
    if (is_zero()) throw std::domain_error("RationalQ: inverse of zero");
    return RationalQ(den_, num_);
}

RationalQ RationalQ::barred() const { return RationalQ(num_.barred(), den_.barred()); }

std::string RationalQ::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

Json RationalQ::to_json() const {
    Json j;
    j["num"] = num_.to_json();
    j["den"] = den_.to_json();
    return j;
}

RationalQ RationalQ::from_json(const Json& j) {
    return RationalQ(LaurentPoly::from_json(j.at("num")), LaurentPoly::from_json(j.at("den")));
}

// -------------------------------------------------------------- LaurentSeries

LaurentSeries::LaurentSeries(const LaurentPoly& p, int order) : start_(order), order_(order) {
    if (p.is_zero() || p.min_exp() >= order) return;
    start_ = p.min_exp();
    coeffs_.assign(order_ - start_, Int(0));
    for (const auto& [e, c] : p.terms())
        if (e < order_) coeffs_[e - start_] = c;
    trim();
}

void LaurentSeries::trim() {
    size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
        start_ += static_cast<int>(lead);
    }
    if (coeffs_.empty()) start_ = order_;
}

Int LaurentSeries::coeff(int e) const {
    if (e >= order_) throw std::out_of_range("LaurentSeries: coefficient beyond truncation order");
    if (e < start_) return 0;
    return coeffs_[e - start_];
}

LaurentSeries LaurentSeries::truncated(int new_order) const {
    if (new_order > order_)
        throw std::invalid_argument("LaurentSeries: cannot extend truncation order");
    LaurentSeries r(new_order);
    if (start_ < new_order) {
        r.start_ = start_;
        r.coeffs_.assign(coeffs_.begin(), coeffs_.begin() + (new_order - start_));
        r.trim();
    }
    return r;
}

LaurentSeries LaurentSeries::shifted(int e) const {
    LaurentSeries r = *this;
    r.start_ += e;
    r.order_ += e;
    return r;
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
    int order = std::min(a.order_, b.order_);
    int start = std::min({a.start_, b.start_, order});
    LaurentSeries r(order);
    r.start_ = start;
    r.coeffs_.assign(order - start, Int(0));
    for (int e = start; e < order; ++e) {
        Int v = 0;
        if (e >= a.start_ && e < a.order_) v += a.coeffs_[e - a.start_];
        if (e >= b.start_ && e < b.order_) v += b.coeffs_[e - b.start_];
        r.coeffs_[e - start] = v;
    }
    r.trim();
    return r;
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }

LaurentSeries LaurentSeries::operator-() const {
    LaurentSeries r = *this;
    for (Int& c : r.coeffs_) c = -c;
    return r;
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    // A factor that is identically zero below its order contributes no terms;
    // its start equals its order, which the order formula below handles.
    int order = std::min(a.order_ + b.start_, b.order_ + a.start_);
    LaurentSeries r(order);
    int start = a.start_ + b.start_;
    if (start >= order) return r;
    r.start_ = start;
    r.coeffs_.assign(order - start, Int(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        int ea = a.start_ + static_cast<int>(i);
        for (size_t j = 0; j < b.coeffs_.size(); ++j) {
            int e = ea + b.start_ + static_cast<int>(j);
            if (e >= order) break;
            r.coeffs_[e - start] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    r.trim();
    return r;
}

bool LaurentSeries::matches(const LaurentPoly& p) const { return LaurentSeries(p, order_) == *this; }

std::string LaurentSeries::str() const {
    std::string out;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (!out.empty()) out += " + ";
        int e = start_ + static_cast<int>(i);
        out += coeffs_[i].str();
        if (e == 1)
            out += "*q";
        else if (e != 0)
            out += "*q^" + std::to_string(e);
    }
    std::string tail = "O(q^" + std::to_string(order_) + ")";
    return out.empty() ? tail : out + " + " + tail;
}

Json LaurentSeries::to_json() const {
    Json j;
    j["min_exp"] = start_;
    Json arr = Json::array();
    for (const Int& c : coeffs_) arr.push_back(c.str());
    j["coeffs"] = arr;
    j["order"] = order_;
    return j;
}

LaurentSeries LaurentSeries::from_coeffs(int start, std::vector<Int> coeffs, int order) {
    if (static_cast<int>(coeffs.size()) != order - start)
        throw std::invalid_argument("LaurentSeries: coefficient count must equal order - min_exp");
    LaurentSeries r(order);
    r.start_ = start;
    r.coeffs_ = std::move(coeffs);
    r.trim();
    return r;
}

// ------------------------------------------------------- quantum combinatorics

LaurentPoly qint(int n) {
    if (n < 0) throw std::invalid_argument("qint: negative argument");
    LaurentPoly p;
    for (int j = 0; j < n; ++j) p += LaurentPoly::q(n - 2 * j - 1);
    return p;
}

LaurentPoly qint_renorm(int n) {
    if (n < 0) throw std::invalid_argument("qint_renorm: negative argument");
    LaurentPoly p;
    for (int j = 0; j < n; ++j) p += LaurentPoly::q(2 * j);
    return p;
}

LaurentPoly qfact(int n) {
    if (n < 0) throw std::invalid_argument("qfact: negative argument");
    LaurentPoly p(1);
    for (int m = 2; m <= n; ++m) p *= qint(m);
    return p;
}

LaurentPoly qfact_renorm(int n) {
    if (n < 0) throw std::invalid_argument("qfact_renorm: negative argument");
    LaurentPoly p(1);
    for (int m = 2; m <= n; ++m) p *= qint_renorm(m);
    return p;
}

LaurentPoly qbinom(int n, int k) {
    if (k < 0 || n < 0 || k > n) return LaurentPoly();
    k = std::min(k, n - k);
    // Balanced Pascal rule: [m k] = q^{-k}[m-1 k] + q^{m-k}[m-1 k-1].
    std::vector<LaurentPoly> row(static_cast<size_t>(k) + 1);
    row[0] = LaurentPoly(1);
    for (int m = 1; m <= n; ++m)
        for (int t = std::min(k, m); t >= 1; --t)
            row[t] = row[t].shifted(-t) + row[t - 1].shifted(m - t);
    return row[k];
}

LaurentPoly qmultinom(int n, const std::vector<int>& parts) {
    if (n < 0) return LaurentPoly();
    LaurentPoly res(1);
    int rem = n;
    for (int p : parts) {
        res *= qbinom(rem, p); // zero when p < 0 or p > rem
        if (res.is_zero()) return res;
        rem -= p;
    }
    return res;
}

LaurentSeries series_from_ratfun(const RationalQ& r, int order) {
    if (r.is_zero()) return LaurentSeries(order);
    const LaurentPoly& den = r.den(); // canonical: den(0) != 0, exponents >= 0
    int a = r.num().min_exp();
    if (order <= a) return LaurentSeries(order);
    ZP n = to_dense(r.num(), a);
    ZP d = to_dense(den, 0);
    std::vector<Int> c(static_cast<size_t>(order - a));
    for (size_t m = 0; m < c.size(); ++m) {
        Int acc = m < n.size() ? n[m] : Int(0);
        size_t lmax = std::min(m, d.size() - 1);
        for (size_t l = 1; l <= lmax; ++l) acc -= d[l] * c[m - l];
        Int quot, rem;
        boost::multiprecision::divide_qr(acc, d[0], quot, rem);
        if (rem != 0)
            throw std::domain_error("series_from_ratfun: non-integral series coefficient");
        c[m] = quot;
    }
    return LaurentSeries::from_coeffs(a, std::move(c), order);
}

} // namespace qsl2
