#include "symcurve/expr.hpp"
#include "symcurve/jacobian.hpp"
#include "symcurve/symmpow.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <random>

using namespace symcurve;

TEST_SUITE("expr") {
    TEST_CASE("parse basics") {
        CHECK(parse_expression("z - theta", 1) == Element::z(1) - build_jacobian(1).theta);
        CHECK(parse_expression("z \xE2\x88\x92 theta", 1) == parse_expression("z - theta", 1));
        CHECK(parse_expression("-e1", 1) == -Element::generator(1, 1));
        CHECK(parse_expression("(e1 + e2)^2", 1).is_zero());
        CHECK(parse_expression("3/6*z^2", 0) == Rational(1, 2) * Element::z(0, 2));
        CHECK(parse_expression("e2*e1", 1) == -parse_expression("e1*e2", 1));
        CHECK(parse_expression("2 - 3 + 1", 0).is_zero());
        CHECK(parse_expression("theta^0", 2) == Element::constant(2, 1));
    }

    TEST_CASE("parse errors carry the column") {
        auto column_of = [](const std::string& text, int genus) -> std::size_t {
            try {
                (void)parse_expression(text, genus);
            } catch (const ParseError& e) {
                return e.column();
            }
            return static_cast<std::size_t>(-1);
        };
        CHECK(column_of("e5", 2) == 0);
        CHECK(column_of("z + e0", 1) == 4);
        CHECK(column_of("(z + e1", 1) == 7);
        CHECK(column_of("z $ 1", 1) == 2);
        CHECK(column_of("1/", 1) == 2);
        CHECK(column_of("z^", 1) == 2);
        CHECK(column_of("", 1) == 0);
        CHECK(column_of("\xE2\x88\x92 w", 1) == 2);
        try {
            (void)parse_expression("z * * 2", 1);
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.diagnostic() == std::string("parse error: ") + e.what() + "\n  z * * 2\n      ^");
        }
    }

    TEST_CASE("render") {
        CHECK(render(Element(2)) == "0");
        CHECK(render(parse_expression("z^2 - 1/2*e1*e3*z", 2)) == "z^2 - 1/2*e1*e3*z");
        CHECK(render(parse_expression("-2*e1*e2 + z", 1)) == "z - 2*e1*e2");
        CHECK(render(parse_expression("-e1", 1)) == "-e1");
        CHECK(render(parse_expression("7/3", 1)) == "7/3");
        CHECK(render_beta(0) == "1");
        CHECK(render_beta(1) == "z - theta");
        CHECK(render_beta(2) == "z^2 - theta*z + 1/2*theta^2");
        CHECK(render_beta(3) == "z^3 - theta*z^2 + 1/2*theta^2*z - 1/6*theta^3");
        for (int g = 0; g <= 4; ++g)
            CHECK(parse_expression(render_beta(g), g) == chern_classes(g).beta);
    }

    TEST_CASE("round trip over seeded random elements") {
        std::mt19937 rng(20240601);
        int checked = 0;
        for (int trial = 0; trial < 10000; ++trial) {
            const int g = trial % 4;
            Element x = testutil::random_element(rng, g, 8, 1 + trial % 6);
            const std::string text = render(x);
            Element back = parse_expression(text, g);
            CHECK(back == x);
            CHECK(render(back) == text);
            ++checked;
        }
        CHECK(checked == 10000);
    }

    TEST_CASE("normal forms render and parse back") {
        auto a = SymPowAlgebra::build(2, 3);
        for (int d = 0; d <= 6; ++d)
            for (std::size_t i = 0; i < a->dim(d); ++i) {
                Element v = a->basis_class(d, i).value;
                CHECK(a->psi(parse_expression(render(v), 2)).value == v);
            }
    }
}
