// Intertwiners of quantum sl2 as sparse matrices, and planar networks.
//
// The generators are the evaluation and coevaluation on two strands,
//
//     cup: 1 -> v_1 (x) v_0  -  q v_0 (x) v_1
//     cap: v_0 (x) v_1 -> 1,   v_1 (x) v_0 -> -q^{-1},   equal letters -> 0,
//
// the projection pi_n : V_1^{(x)n} -> V_n,  v_a -> q^{-l(a)} [n over |a|]^{-1} v_{|a|},
// the inclusion iota_n : V_n -> V_1^{(x)n},  v_k -> sum_{|a|=k} q^{b(a)} v_a,
// the Jones-Wenzl projector p_n = iota_n pi_n, and the clasp
//
//     A_{i,j}^k = pi_k . Phi_{i,j}^k . (iota_i (x) iota_j)
//
// where Phi contracts z = (i+j-k)/2 nested cap pairs between the two groups
// of strands.  Networks are stacked bottom-to-top from these generators and
// evaluated to sparse matrices; closed circles and theta graphs have closed
// formulas that the network evaluation must reproduce up to a monomial.

#pragma once

#include <qsl2/laurent.hpp>
#include <qsl2/tensor.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qsl2 {

// Sparse weight-graded linear map between tensor products of V_d's.
// Entries are stored per input index (column-major).
class Intertwiner {
public:
    Intertwiner() = default;
    Intertwiner(ModuleShape domain, ModuleShape codomain);

    static Intertwiner identity(const ModuleShape& shape);

    const ModuleShape& domain() const { return domain_; }
    const ModuleShape& codomain() const { return codomain_; }

    // Accumulates c into the (out, in) entry; zero entries are erased.
    void add(const MultiIndex& out, const MultiIndex& in, const RationalQ& c);
    RationalQ entry(const MultiIndex& out, const MultiIndex& in) const;

    // Columns keyed by input index; each column maps output index -> coefficient.
    const std::map<MultiIndex, std::map<MultiIndex, RationalQ>>& columns() const {
        return columns_;
    }

    TensorVector apply(const TensorVector& v) const;

    // Composition a * b applies b first.
    friend Intertwiner operator*(const Intertwiner& a, const Intertwiner& b);

    // Entry of a map between empty shapes, read as a scalar.
    RationalQ scalar() const;

    // True if every entry preserves the weight exponent.
    bool weight_graded() const;

    bool operator==(const Intertwiner&) const = default;

private:
    ModuleShape domain_;
    ModuleShape codomain_;
    std::map<MultiIndex, std::map<MultiIndex, RationalQ>> columns_;
};

// True when i+j+k is even and the triangle inequalities |i-j| <= k <= i+j hold.
bool admissible_triple(int i, int j, int k);

// Cap on strands i, i+1 of V_1^{(x)n} (1 <= i <= n-1), identity elsewhere.
Intertwiner cap_matrix(int i, int n);

// Cup inserting two new strands at positions i, i+1 (1 <= i <= n+1).
Intertwiner cup_matrix(int i, int n);

// Blockwise pi / iota for the shape d; proj . incl is the identity on V_d.
Intertwiner proj_matrix(const ModuleShape& d);
Intertwiner incl_matrix(const ModuleShape& d);

// Jones-Wenzl projector p_n on V_1^{(x)n}.
Intertwiner jw(int n);

// Blockwise p_{d_1} (x) ... (x) p_{d_m} on V_1^{(x)(d_1+...+d_m)}.
Intertwiner jw_blocks(const ModuleShape& d);

// Phi_{i,j}^k: z = (i+j-k)/2 nested caps, applied innermost-first at
// positions x+z, x+z-1, ..., x+1 where x = (i+k-j)/2.
Intertwiner phi(int i, int j, int k);

// The 3j intertwiner A_{i,j}^k : V_i (x) V_j -> V_k.
Intertwiner intertwiner_A(int i, int j, int k);

// Line-oriented network description; read bottom-to-top.
struct NetworkLayer {
    enum class Kind { cup, cap, proj, incl, jw };
    Kind kind;
    int pos = 0;              // cup/cap position
    ModuleShape blocks;       // proj/incl/jw block sizes
    int line = 0;             // source line, for diagnostics
};

struct NetworkExpr {
    ModuleShape input_shape;
    ModuleShape output_shape;
    std::vector<NetworkLayer> layers;
};

// Nested-arc state: the product of cups over the given (left, right) pairs,
// as a vector in V_1^{(x)n}.  Positions are 1-based and must partition 1..n.
TensorVector arc_state(int n, const std::vector<std::pair<int, int>>& arcs);

// Per-term application of pi_{d_1} (x) ... (x) pi_{d_m} to a strand vector
// and of iota_{d_1} (x) ... (x) iota_{d_m} to a block vector; these avoid
// materializing the full matrices on wide inputs.
TensorVector apply_proj(const ModuleShape& d, const TensorVector& v);
TensorVector apply_incl(const ModuleShape& d, const TensorVector& v);

// Grammar: `input <n>` followed by one generator per line:
// `cup <i>` | `cap <i>` | `proj <d1> <d2> ...` | `incl <d1> ...` | `jw <n1> ...`.
// `#` starts a comment.  Widths are checked while parsing; violations raise
// parse_error carrying the offending line.
NetworkExpr parse_network(const std::string& text);

// Ordered product of the layer matrices.
Intertwiner eval_network(const NetworkExpr& e);

// Closed theta value
//   (-1)^s [z]! [x]! [y]! [s+1]! / ([i]! [j]! [k]!),   s = (i+j+k)/2,
// and the network evaluation pairing the projected nested-arc state with
// itself under the bilinear form.  The two agree up to a sign and a power
// of q, which the caller may inspect via their quotient.
RationalQ theta_formula(int i, int j, int k);
RationalQ theta_network(int i, int j, int k);

// Value of the n-colored unknot, (-1)^n [n+1], computed as the network
// (caps) . (p_n (x) id^{(x)n}) . (nested cups).
RationalQ unknot_value(int n);

// Graded Euler characteristic counterpart [[n+1]] = 1 + q^2 + ... + q^{2n};
// satisfies q^{-n} [[n+1]] = (-1)^n unknot_value(n).
LaurentPoly unknot_ext_euler(int n);

}  // namespace qsl2
