#include <qsl2/resolutions.hpp>

#include <sstream>
#include <stdexcept>

namespace qsl2 {

namespace {

void check_range(int r, int s, int i, int j) {
    if (i < 0 || j < 0)
        throw std::out_of_range("resolution: negative highest weight");
    if (r < 0 || r > i || s < 0 || s > j)
        throw std::out_of_range("resolution: index out of range");
}

// binom(n, k) over the integers; zero outside 0 <= k <= n.
Int binom(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    Int out = 1;
    for (int t = 0; t < k; ++t)
        out = out * (n - t) / (t + 1);
    return out;
}

// sum over zero-free compositions (d_1,...,d_m) of `remaining` of the chain
// products binom(rho + remaining, d_1) binom(rho + remaining - d_1, d_2) ...
// At rho = 0 the chain telescopes to the multinomial multinom(remaining; d).
Int chain_sum(int rho, int remaining, int parts) {
    if (parts == 0)
        return remaining == 0 ? Int(1) : Int(0);
    Int out = 0;
    for (int d = 1; d + (parts - 1) <= remaining; ++d)
        out += binom(rho + remaining, d) * chain_sum(rho, remaining - d, parts - 1);
    return out;
}

// The composition sum for base rho, cross-checked against the closed form
// binom(rho + m + n, m + n) * sum_{(d)} multinom(m + n; d) on every call.
Int multiplicity(int rho, int n, int m) {
    if (n < 0 || m < 0)
        throw std::out_of_range("resolution: multiplicity index out of range");
    const Int value = chain_sum(rho, m + n, m);
    if (value != binom(rho + m + n, m + n) * chain_sum(0, m + n, m))
        throw std::logic_error("resolution: composition and closed forms disagree");
    return value;
}

}  // namespace

std::string ResolutionTable::str() const {
    std::ostringstream os;
    for (std::size_t m = 0; m < rows.size(); ++m) {
        os << "Q_" << m << ":";
        if (rows[m].empty())
            os << " 0";
        bool first = true;
        for (const auto& [index, mult] : rows[m]) {
            os << (first ? " " : " + ") << mult << "*P(" << index[0] << "," << index[1] << ")";
            first = false;
        }
        os << "\n";
    }
    return os.str();
}

Json ResolutionTable::to_json() const {
    Json rows_json = Json::array();
    for (const auto& row : rows) {
        Json row_json = Json::array();
        for (const auto& [index, mult] : row) {
            Json term;
            term["index"] = index;
            term["mult"] = mult.str();
            row_json.push_back(term);
        }
        rows_json.push_back(row_json);
    }
    Json out;
    out["r"] = r;
    out["s"] = s;
    out["i"] = i;
    out["j"] = j;
    out["rows"] = rows_json;
    return out;
}

Int a_num(int n, int m, int r, int s) {
    (void)s;
    return multiplicity(r, n, m);
}

Int b_num(int n, int m, int r, int s, int j) {
    (void)r;
    return multiplicity(j - s, n, m);
}

Int alternating_sum_check(int n, int r, int s) {
    if (n < 0)
        throw std::out_of_range("alternating sum: n must be nonnegative");
    Int sum = 0;
    for (int m = 1; m <= n + 1; ++m) {
        const Int term = a_num(n + 1 - m, m, r, s);
        sum += (m % 2) ? term : -term;
    }
    Int closed = binom(r + n + 1, n + 1);
    if (n % 2)
        closed = -closed;
    if (sum != closed)
        throw std::logic_error("alternating sum: closed form disagrees");
    return sum;
}

bool recursion_check(int n, int m, int r, int s) {
    if (n < 0 || m < 1)
        throw std::out_of_range("recursion check: need n >= 0 and m >= 1");
    // The a and b recursions are one identity in the base rho, stepped to
    // rho + g + 1 on the right; the b route is exercised at rho = j - s = s.
    Int rhs_a = 0;
    Int rhs_b = 0;
    for (int g = 0; g <= n; ++g) {
        rhs_a += binom(r + g + 1, g + 1) * a_num(n - g, m - 1, r + g + 1, s - g - 1);
        rhs_b += binom(s + g + 1, g + 1) * b_num(n - g, m - 1, r + g + 1, s - g - 1, 2 * s);
    }
    return a_num(n, m, r, s) == rhs_a && b_num(n, m, r, s, 2 * s) == rhs_b;
}

ResolutionTable resolution_table(int r, int s, int i, int j) {
    check_range(r, s, i, j);
    ResolutionTable out;
    out.r = r;
    out.s = s;
    out.i = i;
    out.j = j;
    out.rows.resize(s + 1);
    out.rows[0][{r, s}] = 1;
    // Rows run over 1 <= m <= l.  The printed range is garbled and the
    // stated l = r for the r+s > j branch cannot telescope down to the
    // binomial expansion (for (r,s,i,j) = (1,2,3,2) the coefficient of
    // [P(3,0)] needs the m = 2 row); l = s is forced in both branches,
    // with classes P(r', s'), r' > i, vanishing rather than shortening
    // the table.
    const bool below = r + s <= j;
    for (int m = 1; m <= s; ++m) {
        for (int n = 0; m + n <= s; ++n) {
            if (r + m + n > i)
                continue;
            out.rows[m][{r + m + n, s - m - n}] =
                below ? a_num(n, m, r, s) : b_num(n, m, r, s, j);
        }
    }
    return out;
}

BasisExpansion delta_in_projectives(int r, int s, int i, int j) {
    check_range(r, s, i, j);
    BasisExpansion out;
    out.basis = "projective_class";
    const int rho = r + s <= j ? r : j - s;
    for (int g = 0; r + g <= i && s - g >= 0; ++g) {
        Int c = binom(rho + g, g);
        if (g % 2)
            c = -c;
        out.coefficients[{r + g, s - g}] = LaurentPoly(c);
    }
    return out;
}

}  // namespace qsl2
