#include "symcurve/correspondence.hpp"

#include <sstream>

namespace symcurve {

namespace {

bool same_algebra(const SymPowAlgebra& a, const SymPowAlgebra& b) {
    return a.genus() == b.genus() && a.power() == b.power();
}

std::string label(const SymPowAlgebra& a) {
    return "(g=" + std::to_string(a.genus()) + ", n=" + std::to_string(a.power()) + ")";
}

void require_same(const SymPowAlgebra& a, const SymPowAlgebra& b, const char* what) {
    if (!same_algebra(a, b))
        throw OwnerMismatch(std::string(what) + ": " + label(a) + " vs " + label(b));
}

int sign_of(long exponent) { return exponent % 2 == 0 ? 1 : -1; }

const Matrix& block_or_throw(const CorrClass& a, int d) {
    auto it = a.blocks.find(d);
    if (it == a.blocks.end())
        throw std::logic_error("correspondence block missing for degree " + std::to_string(d));
    return it->second;
}

Matrix scaled(Matrix m, int sign) {
    if (sign < 0)
        m *= Rational(-1);
    return m;
}

}  // namespace

bool CorrClass::is_zero() const {
    for (const auto& [d, k] : blocks)
        if (!k.is_zero())
            return false;
    return true;
}

std::vector<std::string> CorrClass::terms() const {
    std::vector<std::string> out;
    for (const auto& [d, k] : blocks) {
        DegreeBasis left = source->basis(d);
        DegreeBasis right = target->basis(target_degree(d));
        for (std::size_t i = 0; i < k.rows(); ++i)
            for (std::size_t j = 0; j < k.cols(); ++j)
                if (!k(i, j).is_zero())
                    out.push_back(k(i, j).to_string() + " * (" +
                                  to_debug_string(Element::monomial(source->genus(), left.monomials[i])) + ") x (" +
                                  to_debug_string(Element::monomial(target->genus(), right.monomials[j])) + ")");
    }
    return out;
}

CorrClass zero_corr(const AlgebraPtr& source, const AlgebraPtr& target, int shift) {
    CorrClass c{source, target, shift, {}};
    for (int d = 0; d <= source->top_degree(); ++d) {
        const int t = c.target_degree(d);
        if (t < 0 || t > target->top_degree())
            continue;
        c.blocks.emplace(d, Matrix(source->dim(d), target->dim(t)));
    }
    return c;
}

namespace {

CorrClass combine(const CorrClass& a, const CorrClass& b, int sign) {
    require_same(*a.source, *b.source, "correspondence sum");
    require_same(*a.target, *b.target, "correspondence sum");
    if (a.shift != b.shift)
        throw std::invalid_argument("correspondence sum: shifts differ");
    CorrClass out = a;
    for (auto& [d, k] : out.blocks)
        k = sign > 0 ? k + block_or_throw(b, d) : k - block_or_throw(b, d);
    return out;
}

}  // namespace

CorrClass operator+(const CorrClass& a, const CorrClass& b) { return combine(a, b, 1); }
CorrClass operator-(const CorrClass& a, const CorrClass& b) { return combine(a, b, -1); }

CorrClass operator*(const Rational& s, const CorrClass& a) {
    CorrClass out = a;
    for (auto& [d, k] : out.blocks)
        k *= s;
    return out;
}

bool operator==(const CorrClass& a, const CorrClass& b) {
    return same_algebra(*a.source, *b.source) && same_algebra(*a.target, *b.target) && a.shift == b.shift &&
           a.blocks == b.blocks;
}

std::size_t kunneth_dimension(const SymPowAlgebra& x, const SymPowAlgebra& y, int total_degree) {
    std::size_t dim = 0;
    for (int d = 0; d <= x.top_degree(); ++d)
        dim += x.dim(d) * y.dim(total_degree - d);
    return dim;
}

Matrix act_matrix(const CorrClass& alpha, int e) {
    const int m2 = alpha.source->top_degree();
    const int t = e + 2 * alpha.shift;
    Matrix out(alpha.target->dim(t), alpha.source->dim(e));
    if (e < 0 || e > m2 || t < 0 || t > alpha.target->top_degree())
        return out;
    const Matrix& k = block_or_throw(alpha, m2 - e);
    Matrix p = alpha.source->pairing_matrix(m2 - e);
    return scaled(k.transpose() * p, sign_of(e));
}

DegreewiseMap act_map(const CorrClass& alpha) {
    DegreewiseMap f{alpha.source, alpha.target, 2 * alpha.shift, {}};
    for (int e = 0; e <= alpha.source->top_degree(); ++e)
        f.blocks.emplace(e, act_matrix(alpha, e));
    return f;
}

ClassRep act(const CorrClass& alpha, const ClassRep& x) {
    alpha.source->check_owner(x);
    ClassRep out{alpha.target->genus(), alpha.target->power(), Element(alpha.target->genus())};
    for (int e : x.value.degrees()) {
        Vector y = act_matrix(alpha, e).apply(alpha.source->coordinates(x, e));
        if (!y.empty())
            out.value += alpha.target->from_coordinates(e + 2 * alpha.shift, y).value;
    }
    return out;
}

CorrClass class_from_action(const DegreewiseMap& f) {
    if (f.degree_shift % 2 != 0)
        throw std::invalid_argument("class_from_action: odd degree shift");
    CorrClass c = zero_corr(f.source, f.target, f.degree_shift / 2);
    const int m2 = f.source->top_degree();
    for (auto& [d, k] : c.blocks) {
        const int e = m2 - d;
        auto it = f.blocks.find(e);
        if (it == f.blocks.end() || k.empty())
            continue;
        Matrix p = f.source->pairing_matrix(d);
        k = scaled(p.transpose().inverse() * it->second.transpose(), sign_of(e));
    }
    return c;
}

CorrClass graph_class(const DegreewiseMap& f_pullback) {
    if (f_pullback.degree_shift != 0)
        throw std::invalid_argument("graph_class: map must preserve degree");
    return class_from_action(f_pullback);
}

DegreewiseMap identity_map(const AlgebraPtr& a) {
    DegreewiseMap f{a, a, 0, {}};
    for (int e = 0; e <= a->top_degree(); ++e)
        f.blocks.emplace(e, Matrix::identity(a->dim(e)));
    return f;
}

CorrClass diagonal(const AlgebraPtr& a) { return class_from_action(identity_map(a)); }

CorrClass compose(const CorrClass& alpha, const CorrClass& beta) {
    require_same(*alpha.target, *beta.source, "compose: middle factor mismatch");
    const SymPowAlgebra& y = *alpha.target;
    CorrClass out = zero_corr(alpha.source, beta.target, alpha.shift + beta.shift);
    for (auto& [d, k] : out.blocks) {
        const int t = alpha.target_degree(d);
        if (t < 0 || t > y.top_degree() || k.empty())
            continue;
        auto ib = beta.blocks.find(y.top_degree() - t);
        if (ib == beta.blocks.end())
            continue;
        k = block_or_throw(alpha, d) * y.pairing_matrix(t) * ib->second;
    }
    return out;
}

CorrClass transpose(const CorrClass& alpha) {
    const int m = alpha.source->power();
    const int n = alpha.target->power();
    CorrClass out = zero_corr(alpha.target, alpha.source, m - n + alpha.shift);
    for (const auto& [d, k] : alpha.blocks) {
        const int t = alpha.target_degree(d);
        out.blocks[t] = scaled(k.transpose(), sign_of(static_cast<long>(d) * t));
    }
    return out;
}

CorrClass apply_on_target(const CorrClass& alpha, const DegreewiseMap& f) {
    require_same(*alpha.target, *f.source, "apply_on_target");
    if (f.degree_shift % 2 != 0)
        throw std::invalid_argument("apply_on_target: odd degree shift");
    CorrClass out = zero_corr(alpha.source, f.target, alpha.shift + f.degree_shift / 2);
    for (auto& [d, k] : out.blocks) {
        auto ia = alpha.blocks.find(d);
        auto iff = f.blocks.find(alpha.target_degree(d));
        if (ia == alpha.blocks.end() || iff == f.blocks.end() || k.empty())
            continue;
        k = ia->second * iff->second.transpose();
    }
    return out;
}

CorrClass apply_on_source(const CorrClass& beta, const DegreewiseMap& f) {
    require_same(*beta.source, *f.source, "apply_on_source");
    if (f.degree_shift % 2 != 0)
        throw std::invalid_argument("apply_on_source: odd degree shift");
    // Total degree grows by the degree shift; the shift is measured against
    // the new source dimension.
    const int total = beta.total_degree() + f.degree_shift;
    CorrClass out = zero_corr(f.target, beta.target, total / 2 - f.target->power());
    for (auto& [d, k] : out.blocks) {
        const int e = d - f.degree_shift;
        auto ib = beta.blocks.find(e);
        auto iff = f.blocks.find(e);
        if (ib == beta.blocks.end() || iff == f.blocks.end() || k.empty())
            continue;
        k = iff->second * ib->second;
    }
    return out;
}

DegreewiseMap pullback_map(const AlgebraPtr& m, const AlgebraPtr& n) {
    DegreewiseMap f{n, m, 0, {}};
    for (int e = 0; e <= n->top_degree(); ++e)
        f.blocks.emplace(e, pullback_matrix(*m, *n, e));
    return f;
}

DegreewiseMap pushforward_map(const AlgebraPtr& m, const AlgebraPtr& n) {
    DegreewiseMap f{m, n, 2 * (n->power() - m->power()), {}};
    for (int e = 0; e <= m->top_degree(); ++e)
        f.blocks.emplace(e, pushforward_matrix(*m, *n, e));
    return f;
}

CorrClass projection_corr(const AlgebraPtr& m, const AlgebraPtr& n, std::uint64_t budget) {
    if (m->genus() != n->genus())
        throw OwnerMismatch("projection_corr: different genus");
    if (m->power() > n->power())
        throw std::invalid_argument("projection_corr requires m <= n");
    InvariantModel small = InvariantModel::build(m->genus(), m->power(), budget);
    InvariantModel big = InvariantModel::build(n->genus(), n->power(), budget);
    ComparisonReport cm = comparison_map(*m, small);
    ComparisonReport cn = comparison_map(*n, big);
    if (!cm.bijective || !cn.bijective)
        throw std::logic_error("projection_corr: comparison map is not bijective");

    DegreewiseMap f{m, n, 0, {}};
    for (int e = 0; e <= m->top_degree(); ++e) {
        const auto& orbits = small.orbit_basis(e);
        Matrix transfer(big.orbit_basis(e).size(), orbits.size());
        for (std::size_t j = 0; j < orbits.size(); ++j) {
            InvariantElement x{{orbits[j], Rational(1)}};
            Vector col = big.coordinates(big.transfer_from(small, x), e);
            for (std::size_t i = 0; i < col.size(); ++i)
                transfer(i, j) = col[i];
        }
        const auto ue = static_cast<std::size_t>(e);
        f.blocks.emplace(e, cn.transport[ue].inverse() * transfer * cm.transport[ue]);
    }
    return class_from_action(f);
}

bool CollinoReport::pass() const {
    if (!kills_pullback_kernel)
        return false;
    for (const auto& d : degrees)
        if (!d.member)
            return false;
    return true;
}

CollinoReport collino_membership(const AlgebraPtr& m, const AlgebraPtr& n, std::uint64_t budget) {
    CollinoReport report;
    report.genus = m->genus();
    report.m = m->power();
    report.n = n->power();

    Rational norm = factorial(static_cast<unsigned>(m->power())) *
                    factorial(static_cast<unsigned>(n->power() - m->power()));
    CorrClass gamma = (Rational(1) / norm) * projection_corr(m, n, budget);
    CorrClass diff = compose(gamma, graph_class(pullback_map(m, n))) - diagonal(m);

    AlgebraPtr lower = m->power() > 0 ? SymPowAlgebra::build(m->genus(), m->power() - 1) : nullptr;
    for (const auto& [d, k] : diff.blocks) {
        CollinoDegree row;
        row.degree = d;
        row.difference_rank = k.rank();
        Subspace witness = Subspace::zero(m->dim(d));
        if (lower && d >= 2) {
            Matrix push = pushforward_matrix(*lower, *m, d - 2);
            if (push.cols() > 0)
                witness = Subspace::column_space(push);
        }
        row.witness_dim = witness.dim();
        row.member = true;
        for (std::size_t j = 0; j < k.cols(); ++j)
            if (!witness.contains(k.column(j)))
                row.member = false;
        report.degrees.push_back(row);
    }

    report.kills_pullback_kernel = true;
    for (int e = 0; e <= m->top_degree(); ++e) {
        Matrix kernel = Matrix::identity(m->dim(e));
        if (lower && lower->dim(e) > 0)
            kernel = pullback_matrix(*lower, *m, e).nullspace();
        Matrix a = act_matrix(diff, e);
        for (const auto& v : kernel.row_vectors()) {
            Vector image = a.apply(v);
            for (const auto& q : image)
                if (!q.is_zero())
                    report.kills_pullback_kernel = false;
        }
    }
    return report;
}

}  // namespace symcurve
