#include <doctest.h>

#include <algorithm>

#include "udom/bimodule.hpp"
#include "udom/checks.hpp"
#include "udom/errors.hpp"
#include "udom/homology.hpp"
#include "udom/structure.hpp"

#include "fixtures.hpp"

using namespace udom;

namespace {

RandomSuiteSpec small_spec() {
    RandomSuiteSpec spec;
    spec.n_random = 4;
    return spec;
}

void expect_all_pass(const BimoduleContext& ctx, const RandomSuiteSpec& spec) {
    for (const CheckResult& r : run_all_checkers(ctx, spec)) {
        INFO(r.id, ": ", r.witness);
        CHECK(r.verdict == Verdict::Pass);
        CHECK(r.cases > 0);
        CHECK(r.witness.empty());
    }
}

} // namespace

TEST_CASE("random modules are deterministic, bounded, and degenerate gracefully") {
    AlgebraPtr a = fixtures::alg1(101);
    CHECK(random_module(a, 5, 0).dim == 0);
    FdModule m1 = random_module(a, 42, 40);
    FdModule m2 = random_module(a, 42, 40);
    CHECK(m1.dim == m2.dim);
    CHECK(m1.act == m2.act);

    std::vector<std::size_t> dims;
    for (std::uint64_t s = 0; s < 20; ++s) {
        FdModule m = random_module(a, s, 40);
        CHECK(m.dim <= 40);
        dims.push_back(m.dim);
    }
    std::sort(dims.begin(), dims.end());
    CHECK(dims.front() < dims.back()); // the stream does vary
}

TEST_CASE("the module suite lists simples, projectives, injectives, then randoms") {
    AlgebraPtr a = fixtures::alg1(101);
    RandomSuiteSpec spec = small_spec();
    std::vector<Sample> suite = module_suite(a, spec);
    REQUIRE(suite.size() == 13);
    CHECK(suite[0].label == "simple-0");
    CHECK(suite[3].label == "proj-0");
    CHECK(suite[6].label == "inj-0");
    CHECK(suite[9].label == "random-0");
    CHECK(suite[0].mod.dim == 1);
    CHECK(suite[3].mod.dim == indec_projective(a, 0).dim);

    std::vector<Sample> again = module_suite(a, spec);
    for (std::size_t i = 0; i < suite.size(); ++i) {
        CHECK(suite[i].label == again[i].label);
        CHECK(suite[i].mod.act == again[i].mod.act);
    }
}

TEST_CASE("checker ids are sorted and unknown ids are rejected") {
    std::vector<std::string> ids = checker_ids();
    REQUIRE(ids.size() == 8);
    CHECK(std::is_sorted(ids.begin(), ids.end()));
    AlgebraPtr a = fixtures::semisimple3(101);
    BimoduleContext ctx = build_context(a, regular_module(a));
    CHECK_THROWS_AS(run_checker(ctx, "no-such-checker", small_spec()), InputError);
    CheckResult r = run_checker(ctx, ids.front(), small_spec());
    CHECK(r.id == ids.front());
}

TEST_CASE("every checker passes on the built-in examples with the regular bimodule") {
    for (auto make : {fixtures::alg1, fixtures::alg2}) {
        AlgebraPtr a = make(101);
        BimoduleContext ctx = build_context(a, regular_module(a));
        expect_all_pass(ctx, small_spec());
    }
}

TEST_CASE("every checker passes on the smaller regular contexts") {
    for (auto make : {fixtures::semisimple3, fixtures::linear_a3, fixtures::nakayama3}) {
        AlgebraPtr a = make(101);
        BimoduleContext ctx = build_context(a, regular_module(a));
        expect_all_pass(ctx, small_spec());
    }
}

TEST_CASE("every checker passes on non-regular faithfully balanced bimodules") {
    AlgebraPtr a = fixtures::alg1(101);
    FdModule cog = k_dual(regular_module(opposite(a)));
    expect_all_pass(build_context(a, cog), small_spec());

    FdModule p1 = indec_projective(a, 1);
    FdModule reg = regular_module(a);
    FdModule prog = direct_sum(a, {&p1, &reg}).mod;
    expect_all_pass(build_context(a, prog), small_spec());
}

TEST_CASE("mono-preservation stays coupled through propagated witnesses") {
    /* The first algebra genuinely violates torsion = kernel: count the suite
     * witnesses, then confirm the checker still reaches internal agreement by
     * transporting them across members (visible as extra processed cases). */
    AlgebraPtr a = fixtures::alg1(101);
    BimoduleContext ctx = build_context(a, regular_module(a));
    RandomSuiteSpec spec; // default 25 randoms, as the acceptance suite runs it

    std::size_t violations[2] = {0, 0};
    for (int side = 0; side < 2; ++side) {
        AlgebraPtr alg = side == 0 ? ctx.lambda : ctx.gamma_op;
        for (const Sample& s : module_suite(alg, spec)) {
            Biduality b = evaluation_map(ctx, s.mod);
            SubQuotient ker = kernel_of(s.mod, b.double_star.mod, b.sigma.mat);
            if (torsion_submodule(ctx, s.mod).mod.dim != ker.mod.dim) ++violations[side];
        }
    }
    CHECK(violations[0] == 7);
    CHECK(violations[1] == 9);

    CheckResult r = run_checker(ctx, "double-dual-mono-preservation", spec);
    CHECK(r.verdict == Verdict::Pass);
    CHECK(r.cases == 99); // 68 suite + 28 base monos + 3 transported witnesses
}

TEST_CASE("checker reports replay bit-for-bit") {
    AlgebraPtr a = fixtures::alg2(101);
    BimoduleContext ctx = build_context(a, regular_module(a));
    RandomSuiteSpec spec = small_spec();
    std::vector<CheckResult> x = run_all_checkers(ctx, spec);
    std::vector<CheckResult> y = run_all_checkers(ctx, spec);
    REQUIRE(x.size() == y.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        CHECK(x[i].id == y[i].id);
        CHECK(x[i].verdict == y[i].verdict);
        CHECK(x[i].witness == y[i].witness);
        CHECK(x[i].cases == y[i].cases);
        CHECK(x[i].ext_bound == y[i].ext_bound);
        CHECK(x[i].d_max == y[i].d_max);
        CHECK(x[i].seed == y[i].seed);
    }
}

TEST_CASE("extension modules carry the dimensions of the lifted-hom route") {
    AlgebraPtr a = fixtures::alg2(101);
    BimoduleContext ctx = build_context(a, regular_module(a));
    for (int side = 0; side < 2; ++side) {
        AlgebraPtr alg = side == 0 ? ctx.lambda : ctx.gamma_op;
        const FdModule& u = side == 0 ? ctx.u_left : ctx.u_right;
        for (std::size_t v = 0; v < block_count(alg); ++v) {
            FdModule s = simple_module(alg, v);
            std::vector<std::size_t> ex = ext_dims(s, u, 3);
            for (std::size_t i = 0; i <= 3; ++i)
                CHECK(ext_module_wrt_U(ctx, s, i).dim == ex[i]);
        }
    }
    CHECK(ext_module_wrt_U(ctx, zero_module(ctx.lambda), 2).dim == 0);
    CHECK(ext_module_wrt_U(ctx, indec_projective(ctx.lambda, 0), 1).dim == 0);
    CHECK(ext_module_wrt_U(ctx, indec_projective(ctx.lambda, 0), 0).dim ==
          dual_wrt_U(ctx, indec_projective(ctx.lambda, 0)).mod.dim);
}
