#include "symcurve/ideal.hpp"
#include "symcurve/jacobian.hpp"
#include "symcurve/symmpow.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <random>

using namespace symcurve;

TEST_SUITE("ideal") {
    TEST_CASE("ideal_degree_component examples") {
        auto colon1 = IdealSpec::colon(chern_classes(1).beta, 1);
        CHECK(ideal_degree_component(colon1, 0).dim() == 0);
        CHECK(ideal_degree_component(colon1, 1) == Subspace::full(2));

        auto p1 = IdealSpec::principal(chern_classes(1).beta, 1);
        Subspace c4 = ideal_degree_component(p1, 4);
        CHECK(c4.dim() == 1);
        auto basis = degree_basis(1, 4);
        Element expected = beta_shifted(1, 1);
        CHECK(c4.contains(basis.coordinates(expected)));
        CHECK(ideal_degree_component(p1, 3).dim() == 0);
        CHECK_THROWS(IdealSpec::colon(chern_classes(1).beta, 0));
    }

    TEST_CASE("build_quotient examples") {
        for (unsigned n = 0; n <= 5; ++n) {
            auto pres = build_quotient(IdealSpec::principal(chern_classes(0).beta, n + 1), 2 * static_cast<int>(n));
            std::vector<std::size_t> expected;
            for (unsigned d = 0; d <= 2 * n; ++d)
                expected.push_back(d % 2 == 0 ? 1 : 0);
            CHECK(pres.dimensions() == expected);
        }
        CHECK(build_quotient(IdealSpec::principal(chern_classes(1).beta, 0), 2).dimensions() ==
              std::vector<std::size_t>{1, 2, 1});
        CHECK(build_quotient(IdealSpec::colon(chern_classes(2).beta, 1), 4).dimensions() ==
              std::vector<std::size_t>{1, 4, 7, 4, 1});
    }

    TEST_CASE("reduce examples and idempotence") {
        auto pres = build_quotient(IdealSpec::principal(chern_classes(1).beta, 0), 2);
        Element th = build_jacobian(1).theta;
        CHECK(reduce(pres, Element::z(1)) == th);
        CHECK(reduce(pres, Element::z(1) - th).is_zero());
        CHECK(reduce(pres, th) == th);
        CHECK_THROWS_AS((void)reduce(pres, Element::z(1, 2)), std::out_of_range);

        std::mt19937 rng(5);
        for (int g = 0; g <= 2; ++g)
            for (int n = 0; n <= 4; ++n) {
                auto p = build_quotient(symmetric_power_ideal(g, n), 2 * n);
                for (int d = 0; d <= 2 * n; ++d) {
                    const auto& comp = p.component(d);
                    CHECK(comp.ideal.dim() + comp.normal_form.size() == comp.ambient.size());
                    Element x = testutil::random_homogeneous(rng, g, d);
                    Element y = testutil::random_homogeneous(rng, g, d);
                    CHECK(reduce(p, reduce(p, x)) == reduce(p, x));
                    CHECK(reduce(p, x + Rational(3) * y) == reduce(p, x) + Rational(3) * reduce(p, y));
                }
            }
    }

    TEST_CASE("nesting, pushforward compatibility and colon monotonicity") {
        for (int g = 0; g <= 2; ++g)
            for (int n = 0; n <= 2 * g + 2; ++n) {
                auto in = symmetric_power_ideal(g, n);
                for (int m = 0; m <= n; ++m) {
                    auto im = symmetric_power_ideal(g, m);
                    for (int d = 0; d <= 2 * n + 2; ++d)
                        CHECK(ideal_degree_component(im, d).contains(ideal_degree_component(in, d)));
                    for (int d = 0; d + 2 * (n - m) <= 2 * n + 2; ++d) {
                        auto zmap = multiplication_map(Element::z(g, static_cast<unsigned>(n - m)), d);
                        Subspace pushed = Subspace::column_space(
                            zmap.matrix * Matrix::from_columns(ideal_degree_component(im, d).basis(),
                                                               degree_dimension(g, d)));
                        if (ideal_degree_component(im, d).dim() > 0)
                            CHECK(ideal_degree_component(in, d + 2 * (n - m)).contains(pushed));
                    }
                }
            }
        Element beta = chern_classes(2).beta;
        for (unsigned a = 0; a <= 3; ++a)
            for (int d = 0; d <= 8; ++d)
                CHECK(colon_component(beta, a + 1, d).contains(colon_component(beta, a, d)));
    }

    TEST_CASE("kernel principality at n = 2g-1") {
        for (int g = 1; g <= 3; ++g) {
            Element beta = chern_classes(g).beta;
            auto principal = IdealSpec::principal(beta, 0);
            for (int d = 0; d <= 2 * (2 * g - 1); ++d)
                CHECK(colon_component(beta, 0, d) == ideal_degree_component(principal, d));
        }
    }

    TEST_CASE("ideal_generators generate the ideal") {
        for (int g = 1; g <= 2; ++g)
            for (int n = 0; n < 2 * g - 1; ++n) {
                auto spec = symmetric_power_ideal(g, n);
                auto gens = ideal_generators(spec, 2 * n + 2);
                for (int d = 0; d <= 2 * n + 2; ++d) {
                    Subspace span = Subspace::zero(degree_dimension(g, d));
                    for (const auto& x : gens) {
                        const int k = x.degree();
                        if (k > d)
                            continue;
                        auto f = multiplication_map(x, d - k);
                        span = span.sum(Subspace::column_space(f.matrix));
                    }
                    CHECK(span == ideal_degree_component(spec, d));
                }
            }
    }
}
