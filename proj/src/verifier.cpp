#include "symcurve/verifier.hpp"

#include "symcurve/correspondence.hpp"
#include "symcurve/expr.hpp"
#include "symcurve/jacobian.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

namespace symcurve {

std::string to_string(CheckStatus s) {
    switch (s) {
    case CheckStatus::Pass:
        return "pass";
    case CheckStatus::Fail:
        return "fail";
    case CheckStatus::Partial:
        return "partial";
    }
    return "fail";
}

void CheckReport::expect(bool ok, const std::string& witness) {
    ++assertions;
    if (ok)
        return;
    status = CheckStatus::Fail;
    witnesses.push_back(witness);
}

void CheckReport::mark_partial(const std::string& why) {
    if (status == CheckStatus::Pass)
        status = CheckStatus::Partial;
    notes.push_back("partial: " + why);
}

namespace {

std::string gn(int g, int n) { return "g=" + std::to_string(g) + " n=" + std::to_string(n); }

std::string gmn(int g, int m, int n) {
    return "g=" + std::to_string(g) + " m=" + std::to_string(m) + " n=" + std::to_string(n);
}

std::vector<std::int64_t> to_int64(const std::vector<std::size_t>& v) {
    return {v.begin(), v.end()};
}

std::string dims_text(const std::vector<std::int64_t>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        out += (i ? "," : "") + std::to_string(v[i]);
    return out + ")";
}

CheckReport new_report(const std::string& name, int genus, int n_max) {
    CheckReport r;
    r.name = name;
    r.params = {{"genus", genus}, {"n_max", n_max}};
    return r;
}

class AlgebraCache {
public:
    explicit AlgebraCache(int genus) : genus_(genus) {}
    AlgebraPtr get(int n) {
        while (static_cast<int>(algebras_.size()) <= n)
            algebras_.push_back(SymPowAlgebra::build(genus_, static_cast<int>(algebras_.size())));
        return algebras_[static_cast<std::size_t>(n)];
    }

private:
    int genus_;
    std::vector<AlgebraPtr> algebras_;
};

ClassRep random_class(const SymPowAlgebra& a, std::mt19937& rng) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    Element x(a.genus());
    for (int d = 0; d <= a.top_degree(); ++d)
        for (const auto& m : a.basis(d).monomials)
            x += Element::monomial(a.genus(), m, Rational(coeff(rng)));
    return ClassRep{a.genus(), a.power(), x};
}

CorrClass random_corr(const AlgebraPtr& s, const AlgebraPtr& t, int shift, std::mt19937& rng) {
    std::uniform_int_distribution<int> coeff(-2, 2);
    CorrClass c = zero_corr(s, t, shift);
    for (auto& [d, k] : c.blocks)
        for (std::size_t i = 0; i < k.rows(); ++i)
            for (std::size_t j = 0; j < k.cols(); ++j)
                k(i, j) = Rational(coeff(rng));
    return c;
}

bool same_map(const DegreewiseMap& a, const DegreewiseMap& b) {
    return a.degree_shift == b.degree_shift && a.blocks == b.blocks;
}

DegreewiseMap compose_maps(const DegreewiseMap& first, const DegreewiseMap& second) {
    DegreewiseMap out{first.source, second.target, first.degree_shift + second.degree_shift, {}};
    for (const auto& [e, f] : first.blocks) {
        auto it = second.blocks.find(e + first.degree_shift);
        if (it != second.blocks.end())
            out.blocks.emplace(e, it->second * f);
        else
            out.blocks.emplace(e, Matrix(out.target->dim(e + out.degree_shift), f.cols()));
    }
    return out;
}

}  // namespace

CheckReport check_theorem_A(int genus, int n_max) {
    CheckReport r = new_report("theorem_A", genus, n_max);
    AlgebraCache cache(genus);
    for (int n = 0; n <= n_max; ++n) {
        const AlgebraPtr& a = cache.get(n);
        const QuotientPresentation& pres = a->presentation();
        const bool colon_branch = n < 2 * genus - 1;
        r.expect(pres.spec.kind == (colon_branch ? IdealKind::Colon : IdealKind::Principal),
                 gn(genus, n) + ": wrong ideal branch " + to_string(pres.spec.kind));
        const int expected_param = colon_branch ? 2 * genus - 1 - n : n - 2 * genus + 1;
        r.expect(static_cast<int>(pres.spec.parameter) == expected_param,
                 gn(genus, n) + ": ideal parameter " + std::to_string(pres.spec.parameter));

        DimensionTable ambient{"ambient", genus, n, {}}, ideal{"ideal", genus, n, {}}, quotient{"quotient", genus, n, {}};
        for (int d = 0; d <= 2 * n; ++d) {
            const QuotientComponent& c = pres.component(d);
            const auto amb = static_cast<std::int64_t>(degree_dimension(genus, d));
            const auto idl = static_cast<std::int64_t>(ideal_degree_component(pres.spec, d).dim());
            const auto quo = static_cast<std::int64_t>(c.normal_form.size());
            ambient.dims.push_back(amb);
            ideal.dims.push_back(idl);
            quotient.dims.push_back(quo);
            r.expect(quo == amb - idl, gn(genus, n) + " degree " + std::to_string(d) + ": quotient " +
                                           std::to_string(quo) + " != " + std::to_string(amb) + " - " +
                                           std::to_string(idl));
        }
        r.expect(quotient.dims.back() == 1, gn(genus, n) + ": top degree not one-dimensional");
        for (int d = 2 * n + 1; d <= 2 * n + 2; ++d)
            r.expect(ideal_degree_component(pres.spec, d).dim() == degree_dimension(genus, d),
                     gn(genus, n) + " degree " + std::to_string(d) + ": ideal misses part of R_d above 2n");
        r.tables.push_back(ambient);
        r.tables.push_back(ideal);
        r.tables.push_back(quotient);

        IdealSpec next = symmetric_power_ideal(genus, n + 1);
        for (int d = 0; d <= 2 * n; ++d) {
            Subspace inner = ideal_degree_component(next, d);
            r.expect(pres.component(d).ideal.contains(inner),
                     gn(genus, n) + " degree " + std::to_string(d) + ": I_{n+1} not contained in I_n");
        }

        ClassRep power = a->unit();
        for (int i = 0; i <= n + 1; ++i) {
            if (i <= n) {
                ClassRep expected = pushforward(*cache.get(n - i), *a, cache.get(n - i)->unit());
                r.expect(power == expected, gn(genus, n) + ": zeta^" + std::to_string(i) + " = " +
                                                render(power.value) + " but pushforward(" +
                                                std::to_string(n - i) + ",n,1) = " + render(expected.value));
            } else {
                r.expect(power.value.is_zero(), gn(genus, n) + ": zeta^{n+1} = " + render(power.value));
            }
            power = a->cup(power, a->zeta());
        }
    }
    return r;
}

CheckReport check_poincare_duality(int genus, int n_max) {
    CheckReport r = new_report("poincare_duality", genus, n_max);
    for (int n = 0; n <= n_max; ++n) {
        AlgebraPtr a = SymPowAlgebra::build(genus, n);
        for (int d = 0; d <= 2 * n; ++d) {
            r.expect(a->dim(d) == a->dim(2 * n - d), gn(genus, n) + " degree " + std::to_string(d) +
                                                          ": dim " + std::to_string(a->dim(d)) + " vs " +
                                                          std::to_string(a->dim(2 * n - d)));
            Matrix p = a->pairing_matrix(d);
            r.expect(p.rows() == p.cols() && p.rank() == p.rows(),
                     gn(genus, n) + " degree " + std::to_string(d) + ": pairing rank " + std::to_string(p.rank()) +
                         " of " + std::to_string(p.rows()));
        }
        r.expect(a->integrate(a->fundamental_class()).is_one(), gn(genus, n) + ": fundamental class does not integrate to 1");
    }
    return r;
}

CheckReport check_euler_characteristic(int genus, int n_max) {
    CheckReport r = new_report("euler_characteristic", genus, n_max);
    for (int n = 0; n <= n_max; ++n) {
        AlgebraPtr a = SymPowAlgebra::build(genus, n);
        Rational chi;
        for (int d = 0; d <= 2 * n; ++d)
            chi += Rational(static_cast<long>(a->dim(d)) * (d % 2 == 0 ? 1 : -1));
        Rational expected = genus == 0 ? Rational(n + 1)
                                       : Rational(n % 2 == 0 ? 1 : -1) * binomial(2 * genus - 2, n);
        r.expect(chi == expected, gn(genus, n) + ": chi = " + chi.to_string() + ", expected " + expected.to_string());
    }
    return r;
}

CheckReport check_maps(int genus, int n_max, const VerifyOptions& opts) {
    CheckReport r = new_report("maps", genus, n_max);
    AlgebraCache cache(genus);
    std::mt19937 rng(opts.seed);
    for (int n = 0; n <= n_max; ++n)
        for (int m = 0; m <= n; ++m) {
            const AlgebraPtr& am = cache.get(m);
            const AlgebraPtr& an = cache.get(n);
            const std::string tag = gmn(genus, m, n);
            Element zk = Element::z(genus, static_cast<unsigned>(n - m));

            for (int d = 0; d <= 2 * m; ++d) {
                const QuotientComponent& cm = am->presentation().component(d);
                const QuotientComponent& cn = an->presentation().component(d + 2 * (n - m));
                for (const auto& v : cm.ideal.basis()) {
                    Element moved = multiply(cm.ambient.element(v), zk);
                    r.expect(cn.ideal.contains(cn.ambient.coordinates(moved)),
                             tag + ": pushforward not well defined on " + render(cm.ambient.element(v)));
                }
            }

            ClassRep pulled_zeta = pullback(*am, *an, an->zeta());
            r.expect(pulled_zeta == am->zeta(), tag + ": pullback(zeta_n) = " + render(pulled_zeta.value));
            ClassRep zpow = an->psi(zk);
            ClassRep pushed_one = pushforward(*am, *an, am->unit());
            r.expect(pushed_one == zpow, tag + ": pushforward(1) = " + render(pushed_one.value) + " vs zeta^{n-m} = " +
                                             render(zpow.value));

            for (int trial = 0; trial < 3; ++trial) {
                ClassRep x = random_class(*am, rng);
                ClassRep y = random_class(*an, rng);
                ClassRep lhs = pushforward(*am, *an, am->cup(x, pullback(*am, *an, y)));
                ClassRep rhs = an->cup(pushforward(*am, *an, x), y);
                r.expect(lhs == rhs, tag + ": projection formula fails for x = " + render(x.value) +
                                         ", y = " + render(y.value));
                ClassRep zl = pullback(*am, *an, an->cup(an->zeta(), y));
                ClassRep zr = am->cup(am->zeta(), pullback(*am, *an, y));
                r.expect(zl == zr, tag + ": pullback not zeta-linear on y = " + render(y.value));
            }

            for (int d = 0; d <= 2 * m; ++d) {
                const std::size_t push_rank = pushforward_matrix(*am, *an, d).rank();
                r.expect(push_rank == am->dim(d), tag + " degree " + std::to_string(d) + ": pushforward rank " +
                                                      std::to_string(push_rank) + " < " + std::to_string(am->dim(d)));
                const std::size_t pull_rank = pullback_matrix(*am, *an, d).rank();
                r.expect(pull_rank == am->dim(d), tag + " degree " + std::to_string(d) + ": pullback rank " +
                                                      std::to_string(pull_rank) + " < " + std::to_string(am->dim(d)));
            }
        }
    return r;
}

CheckReport check_bundle_structure(int genus, int n_max) {
    CheckReport r = new_report("bundle_structure", genus, n_max);
    AlgebraCache cache(genus);
    const Element beta = chern_classes(genus).beta;
    for (int n = std::max(0, 2 * genus - 1); n <= n_max; ++n) {
        AlgebraPtr a = cache.get(n);
        for (int d = 0; d <= 2 * n; ++d) {
            std::vector<Vector> columns;
            for (int i = 0; i <= n - genus; ++i)
                for (const auto& m : exterior_basis(genus, d - 2 * i).monomials) {
                    Element x = multiply(Element::monomial(genus, m), Element::z(genus, static_cast<unsigned>(i)));
                    columns.push_back(a->coordinates(a->psi(x), d));
                }
            Matrix map = Matrix::from_columns(columns, a->dim(d));
            r.expect(map.rows() == map.cols() && map.rank() == map.rows(),
                     gn(genus, n) + " degree " + std::to_string(d) + ": sum of H(J) z^i is not a basis (" +
                         std::to_string(map.cols()) + " classes, rank " + std::to_string(map.rank()) + ", dim " +
                         std::to_string(map.rows()) + ")");
        }
    }
    if (genus >= 1) {
        IdealSpec edge = symmetric_power_ideal(genus, 2 * genus - 1);
        for (int d = 0; d <= 4 * genus; ++d)
            r.expect(ideal_degree_component(edge, d) == colon_component(beta, 0, d),
                     "g=" + std::to_string(genus) + " degree " + std::to_string(d) + ": I_{2g-1} != (beta)");
        for (int a = 0; a <= 2 * genus - 1; ++a)
            for (int b = a + 1; b <= 2 * genus - 1; ++b)
                for (int d = 0; d <= 2 * (2 * genus - 1); ++d)
                    r.expect(colon_component(beta, static_cast<unsigned>(b), d)
                                 .contains(colon_component(beta, static_cast<unsigned>(a), d)),
                             "g=" + std::to_string(genus) + " degree " + std::to_string(d) + ": (beta):z^" +
                                 std::to_string(a) + " not inside (beta):z^" + std::to_string(b));
    }
    for (int big = 0; big <= n_max; ++big)
        for (int mid = 0; mid <= big; ++mid)
            for (int low = 0; low <= mid; ++low) {
                AlgebraPtr al = cache.get(low), am = cache.get(mid), ab = cache.get(big);
                const std::string tag = "g=" + std::to_string(genus) + " " + std::to_string(low) + "<=" +
                                        std::to_string(mid) + "<=" + std::to_string(big);
                for (int d = 0; d <= 2 * low; ++d) {
                    r.expect(pullback_matrix(*al, *am, d) * pullback_matrix(*am, *ab, d) == pullback_matrix(*al, *ab, d),
                             tag + " degree " + std::to_string(d) + ": pullbacks do not compose");
                    r.expect(pushforward_matrix(*am, *ab, d + 2 * (mid - low)) * pushforward_matrix(*al, *am, d) ==
                                 pushforward_matrix(*al, *ab, d),
                             tag + " degree " + std::to_string(d) + ": pushforwards do not compose");
                }
            }
    return r;
}

CheckReport check_mattuck(int genus) {
    CheckReport r;
    r.name = "mattuck_chern";
    r.params = {{"genus", genus}};
    if (genus < 1)
        return r;
    MattuckReport m = verify_mattuck_chern(genus);
    for (const auto& c : m.checks)
        r.expect(c.pass, "g=" + std::to_string(genus) + " i=" + std::to_string(c.index) + ": u_i = " +
                             render(c.expected) + " but (-1)^i pi_*(1) = " + render(c.observed));
    return r;
}

CheckReport check_theorem_B(int n_max, const GradedModule& module, const std::string& label) {
    const int genus = module.genus();
    CheckReport r = new_report("theorem_B", genus, n_max);
    r.params.emplace_back("min_degree", module.min_degree());
    r.params.emplace_back("max_degree", module.max_degree());
    r.notes.push_back("module: " + label);
    for (int n = 0; n <= n_max; ++n) {
        IdealSpec spec = symmetric_power_ideal(genus, n);
        std::map<int, Subspace> parts;
        DimensionTable quotient{"quotient " + label, genus, n, {}};
        for (int d = module.min_degree(); d <= module.max_degree(); ++d) {
            parts.emplace(d, submodule_degree_component(module, spec, d));
            quotient.dims.push_back(static_cast<std::int64_t>(module.dim(d)) -
                                    static_cast<std::int64_t>(parts.at(d).dim()));
        }
        for (const auto& [d, nd] : parts) {
            for (int gen = 1; gen <= 2 * genus + 1; ++gen) {
                const int step = gen == GradedModule::z_index(genus) ? 2 : 1;
                if (!module.in_range(d + step))
                    continue;
                const Subspace& target = parts.at(d + step);
                Matrix act = module.generator_action(gen, d);
                for (const auto& v : nd.basis())
                    r.expect(target.contains(act.apply(v)), gn(genus, n) + " degree " + std::to_string(d) +
                                                                ": N_n not stable under generator " +
                                                                std::to_string(gen));
            }
        }
        r.tables.push_back(std::move(quotient));
    }
    return r;
}

CheckReport check_module_laws(int genus, int n_max) {
    CheckReport r = new_report("module_laws", genus, n_max);
    const int top = 2 * n_max;
    const int shift = 3;
    GradedModule ring = ring_module(genus, top);
    GradedModule moved = shifted(ring, shift);
    GradedModule twice = direct_sum(ring, ring);
    std::vector<CheckReport> subs{check_theorem_B(n_max, ring, "ring"), check_theorem_B(n_max, moved, "ring[3]"),
                                  check_theorem_B(n_max, twice, "ring+ring")};
    for (const auto& sub : subs) {
        r.assertions += sub.assertions;
        for (const auto& w : sub.witnesses)
            r.expect(false, w);
        for (const auto& t : sub.tables)
            r.tables.push_back(t);
    }
    for (int n = 0; n <= n_max; ++n) {
        AlgebraPtr a = SymPowAlgebra::build(genus, n);
        IdealSpec spec = symmetric_power_ideal(genus, n);
        std::vector<std::int64_t> expected = to_int64(a->betti());
        expected.resize(static_cast<std::size_t>(top + 1), 0);
        const auto un = static_cast<std::size_t>(n);
        const std::vector<std::int64_t>& from_ring = subs[0].tables[un].dims;
        const std::vector<std::int64_t>& from_moved = subs[1].tables[un].dims;
        const std::vector<std::int64_t>& from_twice = subs[2].tables[un].dims;
        std::vector<std::int64_t> doubled = expected;
        for (auto& v : doubled)
            v *= 2;
        r.expect(from_ring == expected,
                 gn(genus, n) + ": ring quotient " + dims_text(from_ring) + " vs presentation " + dims_text(expected));
        r.expect(from_moved == expected,
                 gn(genus, n) + ": shifted quotient " + dims_text(from_moved) + " vs " + dims_text(expected));
        r.expect(from_twice == doubled,
                 gn(genus, n) + ": direct sum quotient " + dims_text(from_twice) + " vs " + dims_text(doubled));
        if (spec.kind == IdealKind::Colon) {
            for (int d = 0; d + 2 * static_cast<int>(spec.parameter) <= top; ++d)
                r.expect(module_colon_component(ring, spec, d) == ideal_degree_component(spec, d),
                         gn(genus, n) + " degree " + std::to_string(d) + ": module colon differs from the ideal");
        }
    }
    return r;
}

CheckReport check_oracles(int genus, int n_max, const VerifyOptions& opts) {
    CheckReport r = new_report("oracles", genus, n_max);
    for (int n = 0; n <= n_max; ++n) {
        AlgebraPtr a = SymPowAlgebra::build(genus, n);
        auto pres = to_int64(a->betti());
        auto mac = macdonald_poincare(genus, n);
        r.tables.push_back({"presentation", genus, n, pres});
        r.tables.push_back({"macdonald", genus, n, mac});
        r.expect(pres == mac, gn(genus, n) + ": presentation " + dims_text(pres) + " vs macdonald " + dims_text(mac));
        try {
            InvariantModel model = InvariantModel::build(genus, n, opts.oracle_budget);
            auto inv = to_int64(model.betti());
            r.tables.push_back({"invariant", genus, n, inv});
            r.expect(pres == inv, gn(genus, n) + ": presentation " + dims_text(pres) + " vs invariant " + dims_text(inv));
            ComparisonReport cmp = comparison_map(*a, model);
            r.expect(cmp.kills_ideal, gn(genus, n) + ": comparison map does not kill I_n");
            r.expect(cmp.bijective, gn(genus, n) + ": comparison map not bijective");
            r.expect(cmp.multiplicative, gn(genus, n) + ": comparison map not multiplicative");
            if (!cmp.pass())
                for (const auto& w : cmp.witnesses)
                    r.witnesses.push_back(gn(genus, n) + ": " + w);
            r.notes.push_back(gn(genus, n) + ": comparison convention " + cmp.convention);
        } catch (const ResourceError& e) {
            r.mark_partial(gn(genus, n) + ": " + e.what());
        }
    }
    return r;
}

CheckReport check_correspondences(int genus, int n_max, const VerifyOptions& opts) {
    CheckReport r = new_report("correspondences", genus, n_max);
    AlgebraCache cache(genus);
    std::mt19937 rng(opts.seed);
    for (int n = 0; n <= n_max; ++n) {
        const AlgebraPtr& an = cache.get(n);
        const std::string tn = gn(genus, n);
        CorrClass diag = diagonal(an);
        r.expect(same_map(act_map(diag), identity_map(an)), tn + ": diagonal does not act as identity");
        r.expect(compose(diag, diag) == diag, tn + ": diagonal o diagonal != diagonal");
        r.expect(same_map(act_map(transpose(diag)), identity_map(an)), tn + ": transpose(diagonal) not identity");
        CorrClass beta = random_corr(an, an, 0, rng);
        r.expect(compose(diag, beta) == beta && compose(beta, diag) == beta, tn + ": diagonal not a two-sided unit");
        r.expect(transpose(transpose(beta)) == beta, tn + ": transpose is not an involution");

        for (int m = 0; m <= n; ++m) {
            const AlgebraPtr& am = cache.get(m);
            const std::string tag = gmn(genus, m, n);
            DegreewiseMap pull = pullback_map(am, an);
            DegreewiseMap push = pushforward_map(am, an);
            CorrClass graph = graph_class(pull);
            r.expect(same_map(act_map(graph), pull), tag + ": act(graph(pullback)) != pullback");
            r.expect(same_map(act_map(transpose(graph)), push), tag + ": act(transpose(graph)) != pushforward");
            r.expect(transpose(graph).shift == n - m, tag + ": transpose shift " + std::to_string(transpose(graph).shift));

            CorrClass a = random_corr(am, an, 0, rng);
            CorrClass b = random_corr(an, am, 0, rng);
            CorrClass c = random_corr(am, an, 0, rng);
            r.expect(compose(compose(a, b), c) == compose(a, compose(b, c)), tag + ": composition not associative");
            r.expect(same_map(act_map(compose(a, b)), compose_maps(act_map(a), act_map(b))),
                     tag + ": act(compose(a, b)) != act(b) o act(a)");
            r.expect(same_map(act_map(transpose(compose(a, b))), act_map(compose(transpose(b), transpose(a)))),
                     tag + ": transpose does not reverse composition");

            // (id x f)^* alpha and (f x id)_* beta with f the inclusion.
            CorrClass alpha = random_corr(am, an, 0, rng);
            CorrClass left = compose(alpha, graph);
            r.expect(left == apply_on_target(alpha, pull), tag + ": alpha o graph != (id x f*) alpha");
            r.expect(same_map(act_map(left), compose_maps(act_map(alpha), pull)),
                     tag + ": act(alpha o graph) != f* o act(alpha)");
            CorrClass beta2 = random_corr(am, an, 0, rng);
            CorrClass right = compose(graph, beta2);
            r.expect(right == apply_on_source(beta2, push), tag + ": graph o beta != (f_* x id) beta");
            r.expect(same_map(act_map(right), compose_maps(pull, act_map(beta2))),
                     tag + ": act(graph o beta) != act(beta) o f*");

            for (int k = n; k <= n_max; ++k) {
                const AlgebraPtr& ak = cache.get(k);
                CorrClass chained = compose(graph_class(pullback_map(an, ak)), graph);
                r.expect(chained == graph_class(pullback_map(am, ak)),
                         gmn(genus, m, n) + " N=" + std::to_string(k) + ": graphs of pullbacks do not compose");
            }

            for (int d = 0; d <= 2 * m; ++d) {
                r.expect(pushforward_matrix(*am, *an, d).rank() == am->dim(d),
                         tag + " degree " + std::to_string(d) + ": pushforward not injective");
                r.expect(pullback_matrix(*am, *an, d).rank() == am->dim(d),
                         tag + " degree " + std::to_string(d) + ": pullback not surjective");
            }

            try {
                if (m == n)
                    r.expect(projection_corr(am, an, opts.oracle_budget) == factorial(static_cast<unsigned>(n)) * diag,
                             tn + ": projection_corr(n,n) != n! diagonal");
                CollinoReport col = collino_membership(am, an, opts.oracle_budget);
                DimensionTable witness{"collino witness dims", genus, n, {}};
                for (const auto& row : col.degrees) {
                    witness.dims.push_back(static_cast<std::int64_t>(row.witness_dim));
                    r.expect(row.member, tag + " degree " + std::to_string(row.degree) +
                                             ": difference of rank " + std::to_string(row.difference_rank) +
                                             " not in pushforward image of dim " + std::to_string(row.witness_dim));
                }
                witness.label += " m=" + std::to_string(m);
                r.tables.push_back(witness);
                r.expect(col.kills_pullback_kernel, tag + ": collino difference does not kill ker(pullback)");
            } catch (const ResourceError& e) {
                r.mark_partial(tag + ": " + e.what());
            }
        }
    }
    return r;
}

bool is_known_suite(const std::string& suite) {
    return suite == "presentation" || suite == "modules" || suite == "oracles" || suite == "correspondences" ||
           suite == "all";
}

std::vector<CheckReport> run_suite(const std::string& suite, int genus, int n_max, const VerifyOptions& opts) {
    if (!is_known_suite(suite))
        throw std::invalid_argument("unknown suite '" + suite + "'");
    const bool all = suite == "all";
    std::vector<CheckReport> out;
    if (all || suite == "presentation") {
        out.push_back(check_theorem_A(genus, n_max));
        out.push_back(check_poincare_duality(genus, n_max));
        out.push_back(check_euler_characteristic(genus, n_max));
        out.push_back(check_maps(genus, n_max, opts));
        out.push_back(check_bundle_structure(genus, n_max));
        if (genus >= 1)
            out.push_back(check_mattuck(genus));
    }
    if (all || suite == "modules")
        out.push_back(check_module_laws(genus, n_max));
    if (all || suite == "oracles")
        out.push_back(check_oracles(genus, n_max, opts));
    if (all || suite == "correspondences")
        out.push_back(check_correspondences(genus, n_max, opts));
    return out;
}

std::string reports_to_json(const std::vector<CheckReport>& reports, const std::string& suite, int genus, int n_max) {
    using nlohmann::ordered_json;
    ordered_json doc;
    doc["schema_version"] = 1;
    doc["suite"] = suite;
    doc["genus"] = genus;
    doc["max_power"] = n_max;
    bool pass = true;
    ordered_json checks = ordered_json::array();
    for (const auto& r : reports) {
        pass = pass && r.pass();
        ordered_json c;
        c["name"] = r.name;
        ordered_json params = ordered_json::object();
        for (const auto& [k, v] : r.params)
            params[k] = v;
        c["params"] = params;
        c["status"] = to_string(r.status);
        c["assertions"] = r.assertions;
        c["witnesses"] = r.witnesses;
        c["notes"] = r.notes;
        ordered_json tables = ordered_json::array();
        for (const auto& t : r.tables)
            tables.push_back({{"label", t.label}, {"genus", t.genus}, {"power", t.power}, {"dims", t.dims}});
        c["tables"] = tables;
        checks.push_back(c);
    }
    doc["pass"] = pass;
    doc["checks"] = checks;
    return doc.dump(2) + "\n";
}

std::string reports_to_text(const std::vector<CheckReport>& reports) {
    std::ostringstream os;
    for (const auto& r : reports) {
        os << (r.pass() ? "PASS" : r.status == CheckStatus::Partial ? "PARTIAL" : "FAIL") << "  " << r.name;
        for (std::size_t i = 0; i < r.params.size(); ++i)
            os << (i ? ", " : " (") << r.params[i].first << "=" << r.params[i].second;
        os << (r.params.empty() ? "" : ")") << "  " << r.assertions << " assertions\n";
        for (const auto& w : r.witnesses)
            os << "    " << w << "\n";
        for (const auto& n : r.notes)
            if (n.rfind("partial", 0) == 0)
                os << "    " << n << "\n";
    }
    return os.str();
}

}  // namespace symcurve
