#pragma once

// Exact arithmetic over Z[q,q^-1], its fraction field, and truncated formal
// Laurent series, plus the quantum combinatorics built on top of them:
//
//   [n]   = q^{n-1} + q^{n-3} + ... + q^{1-n}          (balanced quantum integer)
//   [[n]] = 1 + q^2 + ... + q^{2(n-1)} = q^{n-1}[n]    (renormalized)
//   [n]!, [[n]]!, [n brack k], quantum multinomials, and the bar involution
//   q -> q^-1.
//
// All coefficients are arbitrary-precision integers; quantum binomials
// overflow 64 bits already for moderate n.

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace qsl2 {

using Int  = boost::multiprecision::cpp_int;
using Json = nlohmann::ordered_json;

// Raised by the text parsers (polynomials, network files). Positions are
// 1-based; -1 means the coordinate is not meaningful for this error.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& msg, int line = -1, int col = -1)
        : std::runtime_error(msg), line_(line), col_(col) {}
    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_;
    int col_;
};

// Raised when a triple (i,j,k) fails the parity or triangle conditions, or
// an index is outside its module. The CLI maps this to its own exit code.
class admissibility_error : public std::runtime_error {
public:
    explicit admissibility_error(const std::string& msg) : std::runtime_error(msg) {}
};

// ---------------------------------------------------------------- LaurentPoly

// An element of Z[q,q^-1]: finite map exponent -> coefficient, no zeros stored.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long value) { set(0, Int(value)); }
    explicit LaurentPoly(const Int& value) { set(0, value); }

    static LaurentPoly monomial(const Int& coeff, int exp);
    static LaurentPoly q(int exp = 1) { return monomial(1, exp); }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    // Lowest/highest exponent with nonzero coefficient; throw on the zero poly.
    int min_exp() const;
    int max_exp() const;
    Int coeff(int exp) const;
    const std::map<int, Int>& terms() const { return terms_; }
    bool nonneg_coeffs() const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly operator-() const;
    bool operator==(const LaurentPoly& o) const = default;

    LaurentPoly pow(int e) const;          // e >= 0
    LaurentPoly shifted(int e) const;      // multiply by q^e
    LaurentPoly barred() const;            // q -> q^-1
    Int at_one() const;                    // evaluate at q = 1

    // Canonical text form: terms ascending by exponent, "c*q^e" with e=0
    // printed as "c" and e=1 as "c*q"; e.g. "-1*q^-2 + 3 + 2*q^4".
    std::string str() const;
    static LaurentPoly parse(const std::string& text);

    // JSON form: array of [exponent, coefficient-as-decimal-string], ascending.
    Json to_json() const;
    static LaurentPoly from_json(const Json& j);

private:
    std::map<int, Int> terms_;
    void set(int exp, const Int& c);
};

// ----------------------------------------------------------------- RationalQ

// An element of Q(q) in canonical reduced form:
//   * denominator is an ordinary polynomial (no negative exponents) with
//     nonzero constant term and positive leading coefficient;
//   * numerator and denominator share no non-unit factor in Z[q]
//     (polynomial gcd 1, integer contents coprime).
// Powers of q are pulled into the numerator, so equality is representational.
class RationalQ {
public:
    RationalQ() = default;                                   // zero
    RationalQ(long value) : num_(value) {}
    RationalQ(LaurentPoly num) : num_(std::move(num)) {}     // den = 1
    RationalQ(LaurentPoly num, LaurentPoly den);             // reduces

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_laurent() const { return den_.is_one(); }
    // Require den = 1 and return the numerator; logic_error otherwise.
    const LaurentPoly& as_laurent() const;

    RationalQ& operator+=(const RationalQ& o);
    RationalQ& operator-=(const RationalQ& o);
    RationalQ& operator*=(const RationalQ& o);
    RationalQ& operator/=(const RationalQ& o);               // domain_error on 0
    friend RationalQ operator+(RationalQ a, const RationalQ& b) { return a += b; }
    friend RationalQ operator-(RationalQ a, const RationalQ& b) { return a -= b; }
    friend RationalQ operator*(RationalQ a, const RationalQ& b) { return a *= b; }
    friend RationalQ operator/(RationalQ a, const RationalQ& b) { return a /= b; }
    RationalQ operator-() const;
    RationalQ inv() const;
    bool operator==(const RationalQ& o) const = default;

    RationalQ barred() const;

    std::string str() const;       // "num" or "(num)/(den)"
    Json to_json() const;          // {"num": ..., "den": ...}
    static RationalQ from_json(const Json& j);

private:
    LaurentPoly num_;
    LaurentPoly den_ = LaurentPoly(1);
    void reduce();
};

// -------------------------------------------------------------- LaurentSeries

// A truncated element of Z((q)): coefficients are exact for all exponents e
// with min_exp() <= e < order(); nothing is known at or beyond order().
// (Also reused for power series in t by the Euler-characteristic module.)
class LaurentSeries {
public:
    explicit LaurentSeries(int order = 40) : start_(order), order_(order) {}
    LaurentSeries(const LaurentPoly& p, int order);

    int order() const { return order_; }
    int min_exp() const { return start_; }
    bool is_zero() const { return coeffs_.empty(); }
    // Coefficient of q^e for e < order(); out_of_range beyond the truncation.
    Int coeff(int e) const;
    const std::vector<Int>& coeffs() const { return coeffs_; }

    LaurentSeries truncated(int new_order) const;
    LaurentSeries shifted(int e) const;

    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
    LaurentSeries operator-() const;
    bool operator==(const LaurentSeries& o) const = default;

    // Equality with a polynomial below the truncation order.
    bool matches(const LaurentPoly& p) const;

    std::string str() const;       // "... + O(q^order)"
    Json to_json() const;          // {"min_exp":..., "coeffs":[...], "order":...}

    static LaurentSeries from_coeffs(int start, std::vector<Int> coeffs, int order);

private:
    int start_;
    std::vector<Int> coeffs_;      // coeff of q^{start_ + i}
    int order_;
    void trim();
};

// ------------------------------------------------------- quantum combinatorics

LaurentPoly qint(int n);                       // [n], n >= 0
LaurentPoly qint_renorm(int n);                // [[n]]
LaurentPoly qfact(int n);                      // [n]!
LaurentPoly qfact_renorm(int n);               // [[n]]!
LaurentPoly qbinom(int n, int k);              // 0 when k < 0 or k > n
LaurentPoly qmultinom(int n, const std::vector<int>& parts);

inline LaurentPoly bar(const LaurentPoly& p) { return p.barred(); }
inline RationalQ bar(const RationalQ& r) { return r.barred(); }

// Expand a rational function as a Laurent series with all coefficients exact
// below `order`. Requires the expansion to have integer coefficients (true
// whenever the denominator's lowest coefficient is a unit, as for all
// renormalized quantum numbers); throws domain_error otherwise.
LaurentSeries series_from_ratfun(const RationalQ& r, int order = 40);

} // namespace qsl2
