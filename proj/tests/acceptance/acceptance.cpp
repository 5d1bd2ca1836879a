// Acceptance runner: one PASS/FAIL line per criterion, exit 0 iff all pass.

#include "symcurve/correspondence.hpp"
#include "symcurve/expr.hpp"
#include "symcurve/verifier.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

using namespace symcurve;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> failures;
    std::string summary;

    void expect(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (failures.size() < 8)
                failures.push_back(what);
        }
    }
    void absorb(const CheckReport& r) {
        expect(r.pass(), r.name + " status " + to_string(r.status));
        for (std::size_t i = 0; i < r.witnesses.size() && i < 3; ++i)
            expect(false, r.name + ": " + r.witnesses[i]);
    }
};

std::string gn(int g, int n) { return "g=" + std::to_string(g) + " n=" + std::to_string(n); }

long long choose(long long n, long long k) {
    if (k < 0 || k > n)
        return 0;
    long long r = 1;
    for (long long i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

std::vector<std::size_t> macdonald_triple_loop(int g, int n) {
    std::vector<std::size_t> out(static_cast<std::size_t>(2 * n + 1), 0);
    for (int k = 0; k <= n; ++k)
        for (int b = 0; k + b <= n; ++b)
            out[static_cast<std::size_t>(k + 2 * b)] += static_cast<std::size_t>(choose(2 * g, k));
    return out;
}

std::uint64_t ipow(std::uint64_t base, int e) {
    std::uint64_t r = 1;
    while (e-- > 0)
        r *= base;
    return r;
}

constexpr std::uint64_t kDefaultBudget = 300000;
constexpr std::uint64_t kRaisedBudget = 20000000;

Outcome criterion_betti() {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    int cases = 0;
    for (int g = 0; g <= 3; ++g)
        for (int n = 0; ipow(static_cast<std::uint64_t>(2 * g + 2), n) <= kDefaultBudget; ++n) {
            auto pres = SymPowAlgebra::build(g, n)->betti();
            auto inv = invariant_betti(g, n, kDefaultBudget);
            auto mac = macdonald_poincare(g, n);
            auto own = macdonald_triple_loop(g, n);
            std::vector<std::size_t> mac_sz(mac.begin(), mac.end());
            o.expect(pres == inv, gn(g, n) + ": presentation vs invariant");
            o.expect(pres == mac_sz, gn(g, n) + ": presentation vs Macdonald");
            o.expect(pres == own, gn(g, n) + ": presentation vs independent expansion");
            ++cases;
        }
    o.expect(SymPowAlgebra::build(2, 2)->betti() == std::vector<std::size_t>{1, 4, 7, 4, 1}, "g=2 n=2 values");
    o.expect(SymPowAlgebra::build(2, 3)->betti() == std::vector<std::size_t>{1, 4, 7, 8, 7, 4, 1}, "g=2 n=3 values");
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.expect(secs < 300.0, "took " + std::to_string(secs) + " s");
    std::ostringstream s;
    s << cases << " (g,n) cases in " << static_cast<int>(secs * 1000) << " ms";
    o.summary = s.str();
    return o;
}

Outcome criterion_exactness() {
    Outcome o;
    int colon = 0, principal = 0, compared = 0;
    for (int g = 0; g <= 3; ++g) {
        o.absorb(check_theorem_A(g, 2 * g + 2));
        for (int n = 0; n <= 2 * g + 2; ++n) {
            auto a = SymPowAlgebra::build(g, n);
            const IdealSpec& spec = a->ideal();
            const bool want_colon = n < 2 * g - 1;
            o.expect((spec.kind == IdealKind::Colon) == want_colon, gn(g, n) + ": ideal kind");
            (want_colon ? colon : principal)++;
            for (int d = 0; d <= 2 * n; ++d) {
                const std::size_t amb = degree_dimension(g, d);
                const std::size_t idl = ideal_degree_component(spec, d).dim();
                o.expect(a->dim(d) == amb - idl, gn(g, n) + " degree " + std::to_string(d));
            }
            const std::uint64_t budget = std::max(kDefaultBudget, std::min(kRaisedBudget, ipow(2 * g + 2, n)));
            auto cmp = comparison_map(*a, InvariantModel::build(g, n, budget));
            o.expect(cmp.kills_ideal, gn(g, n) + ": comparison does not kill I_n");
            o.expect(cmp.bijective, gn(g, n) + ": comparison not bijective");
            o.expect(cmp.multiplicative, gn(g, n) + ": comparison not multiplicative");
            ++compared;
        }
    }
    o.summary = std::to_string(colon) + " colon and " + std::to_string(principal) + " principal cases, " +
                std::to_string(compared) + " comparison maps";
    return o;
}

Outcome criterion_duality() {
    Outcome o;
    int matrices = 0;
    for (int g = 0; g <= 3; ++g)
        for (int n = 0; n <= 6; ++n) {
            auto a = SymPowAlgebra::build(g, n);
            for (int d = 0; d <= 2 * n; ++d) {
                o.expect(a->dim(d) == a->dim(2 * n - d), gn(g, n) + " degree " + std::to_string(d));
                Matrix p = a->pairing_matrix(d);
                o.expect(p.rows() == p.cols() && p.rank() == p.rows(), gn(g, n) + " pairing degree " + std::to_string(d));
                ++matrices;
            }
        }
    o.summary = std::to_string(matrices) + " pairing matrices";
    return o;
}

Outcome criterion_euler() {
    Outcome o;
    for (int g = 0; g <= 3; ++g)
        for (int n = 0; n <= 6; ++n) {
            auto b = SymPowAlgebra::build(g, n)->betti();
            long long chi = 0;
            for (std::size_t d = 0; d < b.size(); ++d)
                chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(b[d]);
            // Coefficient of t^n in (1-t)^{2g-2}; 1/(1-t)^2 for g = 0.
            long long expected = g == 0 ? n + 1 : (n % 2 == 0 ? 1 : -1) * choose(2 * g - 2, n);
            o.expect(chi == expected, gn(g, n) + ": chi " + std::to_string(chi) + " vs " + std::to_string(expected));
        }
    o.summary = "g <= 3, n <= 6";
    return o;
}

Outcome criterion_maps() {
    Outcome o;
    for (int g = 0; g <= 2; ++g) {
        o.absorb(check_theorem_A(g, 2 * g + 2));
        o.absorb(check_maps(g, 2 * g + 2));
        o.absorb(check_bundle_structure(g, 2 * g + 2));
    }
    o.summary = "g <= 2, m <= n <= 2g+2";
    return o;
}

Outcome criterion_correspondences() {
    Outcome o;
    for (int g = 0; g <= 1; ++g)
        o.absorb(check_correspondences(g, 3));
    o.absorb(check_correspondences(2, 2));
    o.summary = "g <= 1 with n <= 3, g = 2 with n <= 2";
    return o;
}

Outcome criterion_collino() {
    Outcome o;
    int pairs = 0;
    auto run = [&](int g, int n_max) {
        for (int n = 0; n <= n_max; ++n)
            for (int m = 0; m <= n; ++m) {
                auto r = collino_membership(SymPowAlgebra::build(g, m), SymPowAlgebra::build(g, n));
                o.expect(r.pass(), "g=" + std::to_string(g) + " m=" + std::to_string(m) + " n=" + std::to_string(n));
                ++pairs;
            }
    };
    run(0, 3);
    run(1, 3);
    run(2, 2);
    o.summary = std::to_string(pairs) + " (m,n) pairs";
    return o;
}

Outcome criterion_mattuck() {
    Outcome o;
    for (int g = 1; g <= 3; ++g) {
        auto r = verify_mattuck_chern(g);
        o.expect(r.checks.size() == static_cast<std::size_t>(g), "g=" + std::to_string(g) + ": check count");
        for (const auto& c : r.checks)
            o.expect(c.pass, "g=" + std::to_string(g) + " i=" + std::to_string(c.index) + ": " + render(c.expected) +
                                 " vs " + render(c.observed));
    }
    o.summary = "1 <= g <= 3";
    return o;
}

Outcome criterion_modules() {
    Outcome o;
    for (int g = 0; g <= 2; ++g)
        o.absorb(check_module_laws(g, 2 * g + 2));
    o.absorb(check_module_laws(3, 6));
    o.summary = "g <= 2 with n <= 2g+2, g = 3 with n <= 6";
    return o;
}

struct Run {
    int code = -1;
    std::string out;
};

Run run_cli(const std::string& args) {
    Run r;
    const std::string cmd = std::string("'") + SYMCURVE_CLI + "' " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return r;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), got);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Outcome criterion_cli() {
    Outcome o;
    const std::string golden = SYMCURVE_GOLDEN_DIR;
    struct Golden {
        std::string args;
        std::string file;
    };
    const std::vector<Golden> goldens = {
        {"betti --genus 2 --power 2 --format csv", "betti_g2_n2.csv"},
        {"betti --genus 0 --power 3", "betti_g0_n3.txt"},
        {"betti --genus 1 --power 2 --oracle", "betti_oracle_g1_n2.txt"},
        {"presentation --genus 1 --power 1 --format json", "presentation_g1_n1.json"},
        {"presentation --genus 1 --power 0 --format json", "presentation_g1_n0.json"},
        {"presentation --genus 0 --power 2 --format json", "presentation_g0_n2.json"},
        {"eval -g 1 -n 1 'z - theta'", "eval_zero.txt"},
        {"eval -g 1 -n 2 'z^2' --integrate", "eval_one.txt"},
        {"eval -g 2 -n 2 'e1*e1'", "eval_zero.txt"},
    };
    for (const auto& gf : goldens) {
        Run r = run_cli(gf.args);
        o.expect(r.code == 0, gf.args + ": exit " + std::to_string(r.code));
        o.expect(r.out == read_file(golden + "/" + gf.file), gf.args + ": output differs from " + gf.file);
    }
    o.expect(read_file(golden + "/betti_g2_n2.csv") == "0,1\n1,4\n2,7\n3,4\n4,1\n", "csv golden content");

    struct Code {
        std::string args;
        int code;
    };
    const std::vector<Code> codes = {
        {"verify --suite all --genus 1 --max-power 4", 0},
        {"verify --suite oracles --genus 2 --max-power 5", 0},
        {"verify --suite all --genus 0 --max-power 5", 0},
        {"betti --genus 1", 2},
        {"betti --genus 1 --power 1 --format xml", 2},
        {"eval -g 2 -n 2 '(z + e1'", 2},
        {"eval -g 1 -n 1 'e3'", 2},
        {"frobnicate", 2},
        {"betti --genus 3 --power 7 --oracle", 3},
    };
    for (const auto& c : codes) {
        Run r = run_cli(c.args);
        o.expect(r.code == c.code, c.args + ": exit " + std::to_string(r.code) + ", expected " + std::to_string(c.code));
    }

    std::mt19937 rng(20240601);
    int round_trips = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        const int g = trial % 4;
        std::uniform_int_distribution<int> deg(0, 8), num(-9, 9), den(1, 4), terms(1, 6);
        Element x(g);
        for (int t = terms(rng); t > 0; --t) {
            auto basis = degree_basis(g, deg(rng));
            if (basis.size() == 0)
                continue;
            std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
            x += Element::monomial(g, basis.monomials[pick(rng)], Rational(num(rng), den(rng)));
        }
        const std::string text = render(x);
        Element back = parse_expression(text, g);
        o.expect(back == x && render(back) == text, "round trip: " + text);
        ++round_trips;
    }
    o.summary = std::to_string(goldens.size()) + " golden outputs, " + std::to_string(codes.size()) + " exit codes, " +
                std::to_string(round_trips) + " round trips";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"triple Betti agreement", criterion_betti},
        {"presentation exactness and comparison map", criterion_exactness},
        {"Poincare duality", criterion_duality},
        {"Euler characteristic", criterion_euler},
        {"map identities", criterion_maps},
        {"correspondence laws", criterion_correspondences},
        {"Collino membership", criterion_collino},
        {"Chern consistency", criterion_mattuck},
        {"module specialization and laws", criterion_modules},
        {"CLI goldens, round trip and exit codes", criterion_cli},
    };
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.failures.push_back(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        all = all && o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first;
        if (!o.summary.empty())
            std::cout << " (" << o.summary << ")";
        std::cout << " [" << static_cast<int>(secs * 1000) << " ms]\n";
        for (const auto& f : o.failures)
            std::cout << "    " << f << "\n";
        std::cout.flush();
    }
    return all ? 0 : 1;
}
