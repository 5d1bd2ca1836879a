#include "symcurve/graded_module.hpp"
#include "symcurve/jacobian.hpp"
#include "symcurve/symmpow.hpp"

#include <doctest.h>

using namespace symcurve;

TEST_SUITE("graded_module") {
    TEST_CASE("ring module matches the ring") {
        for (int g = 0; g <= 2; ++g) {
            GradedModule r = ring_module(g, 12);
            for (int d = 0; d <= 12; ++d)
                CHECK(r.dim(d) == degree_dimension(g, d));
            for (int n = 0; n <= 2 * g + 2; ++n) {
                auto spec = symmetric_power_ideal(g, n);
                for (int d = 0; d <= 12; ++d)
                    CHECK(submodule_degree_component(r, spec, d) == ideal_degree_component(spec, d));
            }
        }
    }

    TEST_CASE("element action agrees with multiplication") {
        GradedModule r = ring_module(2, 8);
        Element th = build_jacobian(2).theta;
        for (int d = 0; d + 2 <= 8; ++d)
            CHECK(r.element_action(th, d) == multiplication_map(th, d).matrix);
    }

    TEST_CASE("shift and direct sum laws") {
        for (int g = 0; g <= 2; ++g) {
            GradedModule r = ring_module(g, 10);
            GradedModule s = shifted(r, 1);
            GradedModule two = direct_sum(r, r);
            CHECK(s.min_degree() == 1);
            for (int n = 0; n <= 2 * g + 2; ++n) {
                auto spec = symmetric_power_ideal(g, n);
                for (int d = 0; d <= 10; ++d) {
                    auto base = submodule_degree_component(r, spec, d).dim();
                    CHECK(submodule_degree_component(s, spec, d + 1).dim() == base);
                    CHECK(submodule_degree_component(two, spec, d).dim() == 2 * base);
                }
            }
        }
    }

    TEST_CASE("module colon on the ring") {
        GradedModule r = ring_module(1, 12);
        auto spec = IdealSpec::colon(chern_classes(1).beta, 1);
        for (int d = 0; d + 2 <= 12; ++d)
            CHECK(module_colon_component(r, spec, d) == ideal_degree_component(spec, d));
        CHECK_THROWS_AS((void)module_colon_component(r, spec, 11), std::out_of_range);
    }

    TEST_CASE("validation rejects inconsistent actions") {
        std::map<int, std::map<int, Matrix>> bad;
        bad[1][0] = Matrix(2, 2);
        CHECK_THROWS_AS(GradedModule(1, 0, {1, 2}, bad), ModuleError);

        std::map<int, std::map<int, Matrix>> not_square_zero;
        not_square_zero[1][0] = Matrix::from_rows({{1}}, 1);
        not_square_zero[1][1] = Matrix::from_rows({{1}}, 1);
        CHECK_THROWS_AS(GradedModule(1, 0, {1, 1, 1}, not_square_zero), ModuleError);
        CHECK_THROWS_AS(GradedModule(1, 0, {}, {}), ModuleError);
    }

    TEST_CASE("JSON round trip") {
        GradedModule r = shifted(ring_module(1, 5), 2);
        GradedModule back = module_from_json(module_to_json(r));
        CHECK(back.min_degree() == r.min_degree());
        CHECK(back.max_degree() == r.max_degree());
        CHECK(back.actions() == r.actions());
        CHECK(module_to_json(back) == module_to_json(r));
        CHECK_THROWS_AS(module_from_json("{"), ModuleError);
        CHECK_THROWS_AS(module_from_json(R"({"schema_version": 2, "genus": 0, "dims": [1]})"), ModuleError);
        CHECK_THROWS_AS(module_from_json(R"({"schema_version": 1, "genus": 1, "dims": [1, 1],
            "actions": [{"generator": "e9", "source_degree": 0, "matrix": [["1"]]}]})"),
                        ModuleError);
        GradedModule tiny = module_from_json(R"({"schema_version": 1, "genus": 0, "dims": [1, 0, 1],
            "actions": [{"generator": "z", "source_degree": 0, "matrix": [["1/2"]]}]})");
        CHECK(tiny.generator_action(GradedModule::z_index(0), 0) == Matrix::from_rows({{Rational(1, 2)}}, 1));
    }

    TEST_CASE("documented example parses") {
        GradedModule m = module_from_json(R"({
  "schema_version": 1,
  "genus": 1,
  "min_degree": 0,
  "dims": [1, 2, 2],
  "actions": [
    {"generator": "e1", "source_degree": 0, "matrix": [["1"], ["0"]]},
    {"generator": "z", "source_degree": 0, "matrix": [["0"], ["1"]]}
  ]
})");
        CHECK(m.dim(1) == 2);
        CHECK(m.generator_action(2, 0) == Matrix(2, 1));
    }
}
