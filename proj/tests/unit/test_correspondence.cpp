#include "symcurve/correspondence.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <random>

using namespace symcurve;

namespace {

CorrClass random_corr(std::mt19937& rng, const AlgebraPtr& x, const AlgebraPtr& y, int shift) {
    CorrClass c = zero_corr(x, y, shift);
    for (auto& [d, block] : c.blocks)
        for (std::size_t i = 0; i < block.rows(); ++i)
            for (std::size_t j = 0; j < block.cols(); ++j)
                block(i, j) = testutil::random_rational(rng);
    return c;
}

bool same_action(const CorrClass& a, const CorrClass& b) {
    for (int e = 0; e <= 2 * a.source->power(); ++e)
        if (!(act_matrix(a, e) == act_matrix(b, e)))
            return false;
    return true;
}

}  // namespace

TEST_SUITE("correspondence") {
    TEST_CASE("kunneth dimension") {
        auto a = SymPowAlgebra::build(1, 1), b = SymPowAlgebra::build(1, 2);
        std::size_t expected = 0;
        for (int d = 0; d <= 4; ++d)
            if (d <= 2 && 4 - d <= 4)
                expected += a->dim(d) * b->dim(4 - d);
        CHECK(kunneth_dimension(*a, *b, 4) == expected);
    }

    TEST_CASE("diagonal is the identity") {
        for (int g = 0; g <= 2; ++g)
            for (int n = 0; n <= (g == 2 ? 2 : 3); ++n) {
                auto a = SymPowAlgebra::build(g, n);
                CorrClass delta = diagonal(a);
                for (int d = 0; d <= 2 * n; ++d)
                    for (std::size_t i = 0; i < a->dim(d); ++i)
                        CHECK(act(delta, a->basis_class(d, i)) == a->basis_class(d, i));
                CHECK(compose(delta, delta) == delta);
                CHECK(same_action(transpose(delta), delta));
                CHECK(graph_class(identity_map(a)) == delta);
            }
    }

    TEST_CASE("graph and transpose realize pullback and pushforward") {
        for (int g = 0; g <= 1; ++g)
            for (int n = 0; n <= 3; ++n)
                for (int m = 0; m <= n; ++m) {
                    auto am = SymPowAlgebra::build(g, m), an = SymPowAlgebra::build(g, n);
                    CorrClass gamma = graph_class(pullback_map(am, an));
                    for (int d = 0; d <= 2 * n; ++d)
                        for (std::size_t i = 0; i < an->dim(d); ++i) {
                            ClassRep x = an->basis_class(d, i);
                            CHECK(act(gamma, x) == pullback(*am, *an, x));
                        }
                    CorrClass op = transpose(gamma);
                    CHECK(op.shift == n - m);
                    for (int d = 0; d <= 2 * m; ++d)
                        for (std::size_t i = 0; i < am->dim(d); ++i) {
                            ClassRep y = am->basis_class(d, i);
                            CHECK(act(op, y) == pushforward(*am, *an, y));
                        }
                    CHECK(transpose(op) == gamma);
                }
    }

    TEST_CASE("composition laws on seeded classes") {
        std::mt19937 rng(20240601);
        auto a1 = SymPowAlgebra::build(1, 1), a2 = SymPowAlgebra::build(1, 2), a0 = SymPowAlgebra::build(1, 0);
        for (int trial = 0; trial < 3; ++trial) {
            CorrClass alpha = random_corr(rng, a1, a2, 0);
            CorrClass beta = random_corr(rng, a2, a0, 0);
            CorrClass gamma = random_corr(rng, a0, a1, 1);
            CHECK(compose(compose(alpha, beta), gamma) == compose(alpha, compose(beta, gamma)));
            CHECK(compose(diagonal(a1), alpha) == alpha);
            CHECK(compose(alpha, diagonal(a2)) == alpha);
            CHECK(transpose(transpose(alpha)) == alpha);
            CHECK(compose(alpha, beta).shift == alpha.shift + beta.shift);
            for (int e = 0; e <= 2; ++e)
                CHECK(act_matrix(compose(alpha, beta), e) == act_matrix(beta, e) * act_matrix(alpha, e));
            CHECK(same_action(transpose(compose(alpha, beta)), compose(transpose(beta), transpose(alpha))));
            CorrClass sum = alpha + alpha;
            CHECK(sum == Rational(2) * alpha);
            CHECK((sum - alpha) == alpha);
            auto x = a1->basis_class(1, 0);
            CorrClass other = random_corr(rng, a1, a2, 0);
            CHECK(act(alpha + other, x) == a2->add(act(alpha, x), act(other, x)));
        }
        CHECK_THROWS((void)compose(random_corr(rng, a1, a2, 0), random_corr(rng, a1, a2, 0)));
    }

    TEST_CASE("graph composition is functorial") {
        auto a0 = SymPowAlgebra::build(1, 0), a1 = SymPowAlgebra::build(1, 1), a3 = SymPowAlgebra::build(1, 3);
        CorrClass f = graph_class(pullback_map(a1, a3));
        CorrClass h = graph_class(pullback_map(a0, a1));
        CHECK(compose(f, h) == graph_class(pullback_map(a0, a3)));
    }

    TEST_CASE("graph composition matches the map applied to a factor") {
        std::mt19937 rng(9);
        auto a1 = SymPowAlgebra::build(1, 1), a2 = SymPowAlgebra::build(1, 2);
        CorrClass alpha = random_corr(rng, a1, a2, 0);
        DegreewiseMap f = pullback_map(a1, a2);
        CHECK(compose(alpha, graph_class(f)) == apply_on_target(alpha, f));
        CorrClass beta = random_corr(rng, a1, a2, 0);
        CHECK(compose(graph_class(f), beta) == apply_on_source(beta, pushforward_map(a1, a2)));
    }

    TEST_CASE("projection correspondence") {
        for (int g = 0; g <= 1; ++g)
            for (int n = 0; n <= 3; ++n) {
                auto a = SymPowAlgebra::build(g, n);
                CHECK(projection_corr(a, a) == factorial(static_cast<unsigned>(n)) * diagonal(a));
            }
        auto a1 = SymPowAlgebra::build(1, 1), a2 = SymPowAlgebra::build(1, 2);
        CorrClass p = projection_corr(a1, a2);
        CHECK(p.shift == 0);
        CHECK_FALSE(p.is_zero());
        CHECK_THROWS_AS((void)projection_corr(SymPowAlgebra::build(3, 6), SymPowAlgebra::build(3, 7)), ResourceError);
    }

    TEST_CASE("collino membership") {
        auto r = collino_membership(SymPowAlgebra::build(1, 1), SymPowAlgebra::build(1, 2));
        CHECK(r.pass());
        CHECK(collino_membership(SymPowAlgebra::build(1, 2), SymPowAlgebra::build(1, 3)).pass());
        for (int n = 0; n <= 3; ++n)
            for (int m = 0; m <= n; ++m)
                CHECK(collino_membership(SymPowAlgebra::build(0, m), SymPowAlgebra::build(0, n)).pass());
    }
}
