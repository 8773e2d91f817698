#include <qsl2/diagrams.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace qsl2 {

namespace {

void check_bits(const BitSeq& a) {
    for (int x : a)
        if (x != 0 && x != 1) throw std::invalid_argument("sequence entries must be 0 or 1");
}

}  // namespace

int stat_ones(const BitSeq& a) {
    check_bits(a);
    int k = 0;
    for (int x : a) k += x;
    return k;
}

int stat_l(const BitSeq& a) {
    check_bits(a);
    // Scan left to right: every 1 pairs with each 0 seen before it.
    int zeros = 0, l = 0;
    for (int x : a) {
        if (x == 0)
            ++zeros;
        else
            l += zeros;
    }
    return l;
}

int stat_b(const BitSeq& a) {
    const int n = static_cast<int>(a.size());
    const int k = stat_ones(a);
    return k * (n - k) - stat_l(a);
}

std::string CupDiagram::str() const {
    std::ostringstream out;
    out << "cups=";
    for (size_t i = 0; i < cups.size(); ++i) {
        if (i) out << ";";
        out << "(" << cups[i].first << "," << cups[i].second << ")";
    }
    out << " rays=";
    for (size_t i = 0; i < rays.size(); ++i) {
        if (i) out << ",";
        out << rays[i].first;
    }
    return out.str();
}

CupDiagram cup_diagram(const BitSeq& a) {
    check_bits(a);
    CupDiagram d;
    d.n = static_cast<int>(a.size());
    std::vector<int> open;  // positions of currently unmatched 1s
    for (int p = 1; p <= d.n; ++p) {
        if (a[p - 1] == 1) {
            open.push_back(p);
        } else if (open.empty()) {
            d.rays.emplace_back(p, RayDir::down);
        } else {
            d.cups.emplace_back(open.back(), p);
            open.pop_back();
        }
    }
    for (int p : open) d.rays.emplace_back(p, RayDir::up);
    std::sort(d.cups.begin(), d.cups.end());
    std::sort(d.rays.begin(), d.rays.end());
    return d;
}

int gk_dim(const BitSeq& a) {
    const int n = static_cast<int>(a.size());
    return n * (n - 1) / 2 - static_cast<int>(cup_diagram(a).cups.size());
}

int gk_dim_bimodule(const BitSeq& a) {
    const int n = static_cast<int>(a.size());
    return n * (n - 1) - 2 * static_cast<int>(cup_diagram(a).cups.size());
}

long isotypic_multiplicity(int n, int r) {
    if (n < 0 || r < 0 || 2 * r > n) throw std::out_of_range("need 0 <= r <= n/2");
    // Ballot count: sequences with r matched zeros, C(n,r) - C(n,r-1).
    auto choose = [](int m, int k) -> long {
        if (k < 0 || k > m) return 0;
        long c = 1;
        for (int i = 1; i <= k; ++i) c = c * (m - k + i) / i;
        return c;
    };
    return choose(n, r) - choose(n, r - 1);
}

LaurentPoly quantum_coset_identity_check(int m, int n) {
    if (m < 0 || n < 0) throw std::out_of_range("need m, n >= 0");
    LaurentPoly total;
    // Iterate over all subsets of size m of {0, ..., m+n-1} as positions of ones.
    BitSeq a(m + n, 0);
    std::fill(a.begin(), a.begin() + m, 1);
    std::sort(a.begin(), a.end());
    do {
        total += LaurentPoly::monomial(1, 2 * stat_b(a) - m * n);
    } while (std::next_permutation(a.begin(), a.end()));
    return total;
}

}  // namespace qsl2
