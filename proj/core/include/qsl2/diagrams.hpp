// Combinatorics of 0/1-sequences and their cup diagrams.
//
// A sequence a in {0,1}^n carries two statistics:
//
//     l(a) = #{ (i,j) : i < j, a_i < a_j }        (ascent pairs 0...1)
//     b(a) = |a|(n - |a|) - l(a)                  (|a| = number of ones)
//
// Reading 1 as an up arrow and 0 as a down arrow, successively matching
// arrow pairs "up before down" that are not separated by an unmatched arrow
// yields a planar diagram of cups (each joining a 1 on the left to a 0 on
// the right) and vertical rays.  The number of cups c drives the
// Gelfand-Kirillov dimensions n(n-1)/2 - c and n(n-1) - 2c.

#pragma once

#include <qsl2/laurent.hpp>

#include <string>
#include <utility>
#include <vector>

namespace qsl2 {

// 0/1-sequence; any other entry is rejected by the functions below.
using BitSeq = std::vector<int>;

// Number of ones |a|.
int stat_ones(const BitSeq& a);

// l(a) = number of pairs i < j with a_i < a_j.
int stat_l(const BitSeq& a);

// b(a) = |a|(n - |a|) - l(a).
int stat_b(const BitSeq& a);

enum class RayDir { up, down };

// Planar matching of a 0/1-sequence: non-crossing cups plus rays.
struct CupDiagram {
    int n = 0;
    std::vector<std::pair<int, int>> cups;      // (left, right), 1-based, sorted by left endpoint
    std::vector<std::pair<int, RayDir>> rays;   // unmatched positions, ascending

    bool operator==(const CupDiagram&) const = default;

    // "cups=(p1,p1');(p2,p2') rays=r1,r2"
    std::string str() const;
};

// Left-to-right matching: a 1 opens a cup, a 0 closes the innermost open
// one; 0s arriving with nothing open become down rays, leftover 1s up rays.
// The result agrees with matching adjacent pairs in any order.
CupDiagram cup_diagram(const BitSeq& a);

// n(n-1)/2 - c where c is the number of cups of cup_diagram(a).
int gk_dim(const BitSeq& a);

// n(n-1) - 2c.
int gk_dim_bimodule(const BitSeq& a);

// Number of cup diagrams on n points with exactly r cups (no crossings, no
// ray enclosed by a cup); equals the multiplicity of V_{n-2r} in V_1^{tensor n}.
long isotypic_multiplicity(int n, int r);

// Sum of q^{2 b(a) - mn} over all sequences with m ones and n zeros; equals
// the balanced binomial qbinom(m+n, m).
LaurentPoly quantum_coset_identity_check(int m, int n);

}  // namespace qsl2
