// symcurve: Betti numbers, presentations, evaluation and verification suites
// for the cohomology rings of symmetric powers of a curve.

#include "symcurve/expr.hpp"
#include "symcurve/invariant.hpp"
#include "symcurve/symmpow.hpp"
#include "symcurve/verifier.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace {

using namespace symcurve;
using nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct Common {
    int genus = 0;
    int power = 0;
};

void check_range(const Common& c) {
    if (c.genus < 0 || c.genus > kMaxGenus)
        throw CLI::ValidationError("--genus", "must lie in 0.." + std::to_string(kMaxGenus));
    if (c.power < 0)
        throw CLI::ValidationError("--power", "must be nonnegative");
}

std::string cell(std::int64_t v) { return std::to_string(v); }

void print_table(std::ostream& os, const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& r : rows)
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (width.size() <= i)
                width.push_back(0);
            width[i] = std::max(width[i], r[i].size());
        }
    for (const auto& r : rows) {
        std::string line;
        for (std::size_t i = 0; i < r.size(); ++i) {
            line += r[i];
            if (i + 1 < r.size())
                line += std::string(width[i] - r[i].size() + 2, ' ');
        }
        os << line << "\n";
    }
}

int run_betti(const Common& c, bool oracle, const std::string& format) {
    check_range(c);
    AlgebraPtr a = SymPowAlgebra::build(c.genus, c.power);
    std::vector<std::size_t> pres = a->betti();
    std::vector<std::size_t> inv;
    std::vector<std::int64_t> mac;
    bool match = true;
    if (oracle) {
        inv = invariant_betti(c.genus, c.power);
        mac = macdonald_poincare(c.genus, c.power);
        for (std::size_t d = 0; d < pres.size(); ++d)
            match = match && inv[d] == pres[d] && static_cast<std::int64_t>(pres[d]) == mac[d];
    }
    auto row_match = [&](std::size_t d) {
        return inv[d] == pres[d] && static_cast<std::int64_t>(pres[d]) == mac[d];
    };

    if (format == "json") {
        ordered_json doc;
        doc["schema_version"] = 1;
        doc["genus"] = c.genus;
        doc["power"] = c.power;
        doc["presentation"] = pres;
        if (oracle) {
            doc["invariant"] = inv;
            doc["macdonald"] = mac;
            doc["match"] = match;
        }
        std::cout << doc.dump(2) << "\n";
    } else if (format == "csv") {
        for (std::size_t d = 0; d < pres.size(); ++d) {
            std::cout << d << "," << pres[d];
            if (oracle)
                std::cout << "," << inv[d] << "," << mac[d] << "," << (row_match(d) ? 1 : 0);
            std::cout << "\n";
        }
    } else {
        std::vector<std::vector<std::string>> rows;
        if (oracle)
            rows.push_back({"degree", "presentation", "invariant", "macdonald", "match"});
        else
            rows.push_back({"degree", "dim"});
        for (std::size_t d = 0; d < pres.size(); ++d) {
            std::vector<std::string> r{cell(static_cast<std::int64_t>(d)), cell(static_cast<std::int64_t>(pres[d]))};
            if (oracle) {
                r.push_back(cell(static_cast<std::int64_t>(inv[d])));
                r.push_back(cell(mac[d]));
                r.push_back(row_match(d) ? "yes" : "no");
            }
            rows.push_back(std::move(r));
        }
        print_table(std::cout, rows);
    }
    return match ? kExitPass : kExitCheckFailure;
}

int run_presentation(const Common& c, const std::string& format) {
    check_range(c);
    AlgebraPtr a = SymPowAlgebra::build(c.genus, c.power);
    const QuotientPresentation& pres = a->presentation();
    if (format == "table") {
        std::cout << "genus " << c.genus << ", power " << c.power << "\n";
        std::cout << "ideal " << to_string(pres.spec.kind) << " "
                  << (pres.spec.kind == IdealKind::Principal ? "(beta*z^" : "((beta):z^") << pres.spec.parameter
                  << (pres.spec.kind == IdealKind::Principal ? ")" : ")") << "\n";
        std::cout << "beta = " << render_beta(c.genus) << "\n";
        std::vector<std::vector<std::string>> rows{{"degree", "ambient", "ideal", "quotient", "normal form"}};
        for (int d = 0; d <= a->top_degree(); ++d) {
            const QuotientComponent& comp = pres.component(d);
            std::string nf;
            for (const auto& m : comp.normal_form.monomials)
                nf += (nf.empty() ? "" : " ") + render(Element::monomial(c.genus, m));
            rows.push_back({cell(d), cell(static_cast<std::int64_t>(comp.ambient.size())),
                            cell(static_cast<std::int64_t>(comp.ideal.dim())),
                            cell(static_cast<std::int64_t>(comp.normal_form.size())), nf});
        }
        print_table(std::cout, rows);
        return kExitPass;
    }
    ordered_json doc;
    doc["schema_version"] = 1;
    doc["genus"] = c.genus;
    doc["power"] = c.power;
    doc["ideal_kind"] = to_string(pres.spec.kind);
    doc["shift_or_exponent"] = pres.spec.parameter;
    doc["beta"] = render_beta(c.genus);
    ordered_json degrees = ordered_json::array();
    for (int d = 0; d <= a->top_degree(); ++d) {
        const QuotientComponent& comp = pres.component(d);
        ordered_json row;
        row["degree"] = d;
        row["dim_ambient"] = comp.ambient.size();
        row["dim_ideal"] = comp.ideal.dim();
        row["dim_quotient"] = comp.normal_form.size();
        ordered_json monos = ordered_json::array();
        for (const auto& m : comp.normal_form.monomials)
            monos.push_back(render(Element::monomial(c.genus, m)));
        row["normal_form_monomials"] = monos;
        degrees.push_back(row);
    }
    doc["degreewise"] = degrees;
    std::cout << doc.dump(2) << "\n";
    return kExitPass;
}

int run_eval(const Common& c, const std::string& text, bool integrate) {
    check_range(c);
    Element x = parse_expression(text, c.genus);
    AlgebraPtr a = SymPowAlgebra::build(c.genus, c.power);
    ClassRep cls = a->psi(x);
    if (integrate)
        std::cout << a->integrate(cls).to_string() << "\n";
    else
        std::cout << render(cls.value) << "\n";
    return kExitPass;
}

int run_verify(const Common& c, const std::string& suite, int max_power, const std::string& json_out) {
    check_range(c);
    if (!is_known_suite(suite))
        throw CLI::ValidationError("--suite", "unknown suite '" + suite + "'");
    if (max_power < 0)
        throw CLI::ValidationError("--max-power", "must be nonnegative");
    std::vector<CheckReport> reports = run_suite(suite, c.genus, max_power);
    std::cout << reports_to_text(reports);
    if (!json_out.empty()) {
        std::ofstream out(json_out);
        if (!out)
            throw std::runtime_error("cannot write " + json_out);
        out << reports_to_json(reports, suite, c.genus, max_power);
    }
    bool failed = false;
    bool partial = false;
    for (const auto& r : reports) {
        failed = failed || r.status == CheckStatus::Fail;
        partial = partial || r.status == CheckStatus::Partial;
    }
    if (failed)
        return kExitCheckFailure;
    return partial ? kExitResource : kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cohomology of symmetric powers of a curve"};
    app.require_subcommand(1);

    Common betti_args, pres_args, eval_args, verify_args;
    bool oracle = false;
    bool integrate = false;
    std::string betti_format = "table";
    std::string pres_format = "json";
    std::string expression;
    std::string suite = "all";
    int max_power = -1;
    std::string json_out;

    auto add_gn = [](CLI::App* sub, Common& c) {
        sub->add_option("-g,--genus", c.genus, "Genus of the curve")->required();
        sub->add_option("-n,--power", c.power, "Symmetric power")->required();
    };

    CLI::App* betti = app.add_subcommand("betti", "Degreewise dimensions of A_n");
    add_gn(betti, betti_args);
    betti->add_flag("--oracle", oracle, "Also compute the invariant and Macdonald oracles");
    betti->add_option("--format", betti_format, "Output format")->check(CLI::IsMember({"json", "csv", "table"}));

    CLI::App* presentation = app.add_subcommand("presentation", "Ideal and normal forms of A_n");
    add_gn(presentation, pres_args);
    presentation->add_option("--format", pres_format, "Output format")->check(CLI::IsMember({"json", "table"}));

    CLI::App* eval = app.add_subcommand("eval", "Normal form of an expression in A_n");
    add_gn(eval, eval_args);
    eval->add_option("expr", expression, "Expression over e<k>, theta, z and p/q")->required();
    eval->add_flag("--integrate", integrate, "Print the integral instead of the normal form");

    CLI::App* verify = app.add_subcommand("verify", "Run verification suites");
    verify->add_option("-g,--genus", verify_args.genus, "Genus of the curve")->required();
    verify->add_option("--suite", suite, "presentation, modules, oracles, correspondences or all")
        ->check(CLI::IsMember({"presentation", "modules", "oracles", "correspondences", "all"}));
    verify->add_option("--max-power", max_power, "Largest symmetric power (default 4)");
    verify->add_option("--json", json_out, "Write the JSON report to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*betti)
            return run_betti(betti_args, oracle, betti_format);
        if (*presentation)
            return run_presentation(pres_args, pres_format);
        if (*eval)
            return run_eval(eval_args, expression, integrate);
        if (*verify)
            return run_verify(verify_args, suite, max_power < 0 ? 4 : max_power, json_out);
    } catch (const ParseError& e) {
        std::cerr << e.diagnostic() << "\n";
        return kExitUsage;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ResourceError& e) {
        std::cerr << "resource budget exceeded: " << e.what() << "\n";
        return kExitResource;
    }
    return kExitUsage;
}
