#include "symcurve/invariant.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace symcurve;

namespace {

std::vector<std::int64_t> macdonald_oracle(int g, int n) {
    std::vector<std::int64_t> out(static_cast<std::size_t>(2 * n + 1), 0);
    for (int k = 0; k <= std::min(n, 2 * g); ++k)
        for (int b = 0; k + b <= n; ++b)
            out[static_cast<std::size_t>(k + 2 * b)] += testutil::choose(2 * g, k);
    return out;
}

Word word(std::initializer_list<int> w) { return Word(w); }

}  // namespace

TEST_SUITE("invariant") {
    TEST_CASE("curve cohomology products") {
        CurveCohomology h{2};
        CHECK(h.product(1, 3) == std::pair<int, int>{1, h.point()});
        CHECK(h.product(3, 1) == std::pair<int, int>{-1, h.point()});
        CHECK(h.product(1, 2).first == 0);
        CHECK(h.product(1, 4).first == 0);
        CHECK(h.product(h.point(), 1).first == 0);
        CHECK(h.product(0, 2) == std::pair<int, int>{1, 2});
        CHECK(h.name(0) == "1");
        CHECK(h.name(1) == "a1");
        CHECK(h.name(4) == "b2");
        CHECK(h.name(5) == "p");
    }

    TEST_CASE("symmetrize examples") {
        CurveCohomology h{1};
        auto s = symmetrize(h, word({1, 0}));
        CHECK(s == TensorVector{{word({0, 1}), Rational(1)}, {word({1, 0}), Rational(1)}});
        CHECK(symmetrize(h, word({1, 1})).empty());
        auto p = symmetrize(h, word({3, 0}));
        CHECK(p == TensorVector{{word({0, 3}), Rational(1)}, {word({3, 0}), Rational(1)}});
        auto ab = symmetrize(h, word({1, 2}));
        CHECK(ab == TensorVector{{word({1, 2}), Rational(1)}, {word({2, 1}), Rational(-1)}});
    }

    TEST_CASE("sorting sign and permutation sign agree with a brute-force count") {
        CurveCohomology h{2};
        for (int code = 0; code < 6 * 6 * 6; ++code) {
            Word w{code % 6, (code / 6) % 6, code / 36};
            std::vector<int> odd_positions;
            for (int x : w)
                if (h.odd(x))
                    odd_positions.push_back(x);
            int expected = testutil::bubble_sign(odd_positions);
            CHECK(sorting_sign(h, w) == expected);
        }
        auto [sign, out] = permute_word(h, {1, 0}, word({1, 3}));
        CHECK(sign == -1);
        CHECK(out == word({3, 1}));
    }

    TEST_CASE("invariant betti examples and Macdonald") {
        CHECK(invariant_betti(1, 2) == std::vector<std::size_t>{1, 2, 2, 2, 1});
        CHECK(invariant_betti(2, 2) == std::vector<std::size_t>{1, 4, 7, 4, 1});
        for (int n = 0; n <= 6; ++n) {
            std::vector<std::size_t> pn(static_cast<std::size_t>(2 * n + 1), 0);
            for (int d = 0; d <= 2 * n; d += 2)
                pn[static_cast<std::size_t>(d)] = 1;
            CHECK(invariant_betti(0, n) == pn);
        }
        CHECK(macdonald_poincare(2, 2) == std::vector<std::int64_t>{1, 4, 7, 4, 1});
        CHECK(macdonald_poincare(2, 3) == std::vector<std::int64_t>{1, 4, 7, 8, 7, 4, 1});
        for (int g = 0; g <= 4; ++g) {
            CHECK(macdonald_poincare(g, 0) == std::vector<std::int64_t>{1});
            for (int n = 0; n <= 8; ++n)
                CHECK(macdonald_poincare(g, n) == macdonald_oracle(g, n));
        }
        for (int g = 0; g <= 2; ++g)
            for (int n = 0; n <= 4; ++n) {
                auto inv = invariant_betti(g, n);
                auto mac = macdonald_poincare(g, n);
                REQUIRE(inv.size() == mac.size());
                for (std::size_t d = 0; d < inv.size(); ++d)
                    CHECK(static_cast<std::int64_t>(inv[d]) == mac[d]);
            }
    }

    TEST_CASE("budget guard") {
        CHECK_THROWS_AS(InvariantModel::build(3, 7), ResourceError);
        CHECK_THROWS_AS(InvariantModel::build(1, 3, 10), ResourceError);
        CHECK_NOTHROW(InvariantModel::build(1, 3, 64));
    }

    TEST_CASE("transfer identity and closure") {
        for (int g = 0; g <= 2; ++g)
            for (int n = 1; n <= 3; ++n) {
                auto model = InvariantModel::build(g, n);
                const Rational nfact = factorial(static_cast<unsigned>(n));
                for (int d = 0; d <= 2 * n; ++d)
                    for (const Word& w : model.orbit_basis(d)) {
                        InvariantElement v{{w, Rational(1)}};
                        TensorVector t = model.expand(v);
                        CHECK(model.is_invariant(t));
                        TensorVector s = symmetrize(model.curve(), t);
                        TensorVector scaled;
                        for (const auto& [k, c] : t)
                            scaled[k] = c * nfact;
                        CHECK(s == scaled);
                        CHECK(model.from_tensor(t) == v);
                    }
                for (int d1 = 0; d1 <= 2 * n; ++d1)
                    for (int d2 = 0; d1 + d2 <= 2 * n; ++d2)
                        for (const Word& w1 : model.orbit_basis(d1))
                            for (const Word& w2 : model.orbit_basis(d2)) {
                                InvariantElement x{{w1, Rational(1)}}, y{{w2, Rational(1)}};
                                TensorVector prod = tensor_product(model.curve(), model.expand(x), model.expand(y));
                                CHECK(model.is_invariant(prod));
                                CHECK(model.expand(model.product(x, y)) == prod);
                            }
                CHECK(model.product(model.unit(), model.unit()) == model.unit());
            }
    }

    TEST_CASE("comparison map examples") {
        auto a11 = SymPowAlgebra::build(1, 1);
        auto m11 = InvariantModel::build(1, 1);
        Element beta = chern_classes(1).beta;
        std::vector<int> plus(2, 1);
        for (const auto& [w, c] : comparison_image(m11, plus, beta))
            CHECK(c.is_zero());
        for (int g = 0; g <= 2; ++g)
            for (int n = 0; n <= std::min(2 * g + 2, 4); ++n) {
                auto rep = comparison_map(*SymPowAlgebra::build(g, n), InvariantModel::build(g, n));
                CHECK(rep.pass());
                CHECK(rep.presentation_dims == rep.invariant_dims);
            }
        auto spec = symmetric_power_ideal(2, 2);
        auto m22 = InvariantModel::build(2, 2);
        auto rep22 = comparison_map(*SymPowAlgebra::build(2, 2), m22);
        REQUIRE(rep22.pass());
        for (int d = 0; d <= 4; ++d) {
            auto basis = degree_basis(2, d);
            for (const auto& v : ideal_degree_component(spec, d).basis()) {
                InvariantElement img = comparison_image(m22, rep22.generator_signs, basis.element(v));
                for (const auto& [w, c] : img)
                    CHECK(c.is_zero());
            }
        }
    }
}
