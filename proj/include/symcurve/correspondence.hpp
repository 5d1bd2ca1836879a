#pragma once

// Cohomological correspondences between symmetric-power algebras of one
// curve: classes on A_m (x) A_n, their action, composition and transpose.

#include "symcurve/invariant.hpp"
#include "symcurve/symmpow.hpp"

#include <map>
#include <string>
#include <vector>

namespace symcurve {

/// Degreewise linear map between two algebras: matrices keyed by source
/// degree e, mapping A_X^e (columns) to A_Y^{e + degree_shift} (rows).
struct DegreewiseMap {
    AlgebraPtr source;
    AlgebraPtr target;
    int degree_shift = 0;
    std::map<int, Matrix> blocks;
};

/// A class in Corr^i((g,m), (g,n)): total degree 2(m+i) in the Kunneth
/// space. Block d has rows indexed by basis(source, d) and columns by
/// basis(target, 2(m+i) - d); entry (i, j) is the coefficient of a_i (x) b_j.
struct CorrClass {
    AlgebraPtr source;
    AlgebraPtr target;
    int shift = 0;
    std::map<int, Matrix> blocks;

    [[nodiscard]] int total_degree() const { return 2 * (source->power() + shift); }
    [[nodiscard]] int target_degree(int d) const { return total_degree() - d; }
    [[nodiscard]] bool is_zero() const;
    /// Nonzero pairs (a, b, coefficient), for display.
    [[nodiscard]] std::vector<std::string> terms() const;
};

CorrClass zero_corr(const AlgebraPtr& source, const AlgebraPtr& target, int shift);
CorrClass operator+(const CorrClass& a, const CorrClass& b);
CorrClass operator-(const CorrClass& a, const CorrClass& b);
CorrClass operator*(const Rational& s, const CorrClass& a);
bool operator==(const CorrClass& a, const CorrClass& b);

/// sum over d of dim A_m^d * dim A_n^{D-d}.
std::size_t kunneth_dimension(const SymPowAlgebra& x, const SymPowAlgebra& y, int total_degree);

/// Matrix of act(alpha) from A_X^e to A_Y^{e + 2 shift}.
Matrix act_matrix(const CorrClass& alpha, int e);
DegreewiseMap act_map(const CorrClass& alpha);
/// p_{Y*}(alpha . p_X^* x).
ClassRep act(const CorrClass& alpha, const ClassRep& x);

/// The unique class whose action is the given degreewise map.
CorrClass class_from_action(const DegreewiseMap& f);
/// Graph class of a degree-preserving map f*: A_X -> A_Y.
CorrClass graph_class(const DegreewiseMap& f_pullback);
CorrClass diagonal(const AlgebraPtr& a);

/// Contracts the middle factor with the pairing of Y; shifts add.
CorrClass compose(const CorrClass& alpha, const CorrClass& beta);
/// Swaps the factors with sign (-1)^{|a||b|}; shift becomes m - n + i.
CorrClass transpose(const CorrClass& alpha);

/// (id (x) f)(alpha) for f acting on the target factor.
CorrClass apply_on_target(const CorrClass& alpha, const DegreewiseMap& f);
/// (f (x) id)(beta) for f acting on the source factor.
CorrClass apply_on_source(const CorrClass& beta, const DegreewiseMap& f);

/// Degreewise pullback A_n -> A_m and pushforward A_m -> A_n, m <= n.
DegreewiseMap pullback_map(const AlgebraPtr& m, const AlgebraPtr& n);
DegreewiseMap pushforward_map(const AlgebraPtr& m, const AlgebraPtr& n);
DegreewiseMap identity_map(const AlgebraPtr& a);

/// Class of the image of the graph of pr_{n,m} under the quotient maps,
/// computed through the invariant models: its action is the transfer
/// x -> sum over S_n of sigma . (x (x) 1^{n-m}). Throws ResourceError when an
/// invariant model exceeds the budget.
CorrClass projection_corr(const AlgebraPtr& m, const AlgebraPtr& n, std::uint64_t budget = default_oracle_budget());

struct CollinoDegree {
    int degree = 0;             // source degree of the block
    std::size_t difference_rank = 0;
    std::size_t witness_dim = 0;  // dim of pushforward(A_{m-1}^{d-2}) in A_m^d
    bool member = false;
};

struct CollinoReport {
    int genus = 0;
    int m = 0;
    int n = 0;
    std::vector<CollinoDegree> degrees;
    /// act(difference) vanishes on ker(pullback A_m -> A_{m-1}).
    bool kills_pullback_kernel = false;
    [[nodiscard]] bool pass() const;
};

/// Tests that compose(Gamma, graph of pullback(m,n)) - diagonal(m) lies in
/// the image of pushforward(m-1,m) (x) id, where Gamma is the projection
/// correspondence divided by m!(n-m)!.
CollinoReport collino_membership(const AlgebraPtr& m, const AlgebraPtr& n,
                                 std::uint64_t budget = default_oracle_budget());

}  // namespace symcurve
