#include "doctest.h"

#include <algorithm>
#include <vector>

#include "fixtures.hpp"
#include "udom/errors.hpp"
#include "udom/structure.hpp"

using namespace udom;

namespace {

std::vector<std::size_t> sorted_dims(const AlgebraPtr& a, bool proj) {
    std::vector<std::size_t> d;
    for (std::size_t b = 0; b < block_count(a); ++b)
        d.push_back(proj ? indec_projective(a, b).dim : indec_injective(a, b).dim);
    std::sort(d.begin(), d.end());
    return d;
}

} // namespace

TEST_CASE("quiver structure: blocks, projectives, injectives, simples") {
    AlgebraPtr a = fixtures::alg1(101);
    const AlgebraStructure& st = structure_of(a);
    CHECK(st.radical.cols == 8);
    CHECK(st.complete_idem.size() == 3);
    CHECK(st.blocks.size() == 3);
    std::size_t pdims[3] = {4, 3, 4}, idims[3] = {4, 6, 1};
    for (std::size_t v = 0; v < 3; ++v) {
        CHECK(st.blocks[v].mult == 1);
        CHECK(indec_projective(a, v).dim == pdims[v]);
        CHECK(indec_injective(a, v).dim == idims[v]);
        CHECK(simple_module(a, v).dim == 1);
        // validate the block modules exactly
        FdModule P = indec_projective(a, v);
        CHECK_NOTHROW(FdModule(P.alg, P.dim, P.act, Validate::Full));
        FdModule I = indec_injective(a, v);
        CHECK(I.alg.get() == a.get());
        CHECK_NOTHROW(FdModule(I.alg, I.dim, I.act, Validate::Full));
        // top of the projective is the simple at its own block
        std::vector<std::size_t> tm = top_mults(P);
        for (std::size_t w = 0; w < 3; ++w) CHECK(tm[w] == (v == w ? 1 : 0));
        // socle of the injective is the simple at its own block
        std::vector<std::size_t> sm = socle_mults(I);
        for (std::size_t w = 0; w < 3; ++w) CHECK(sm[w] == (v == w ? 1 : 0));
    }
    AlgebraPtr b = fixtures::alg2(101);
    std::size_t pdims2[3] = {2, 3, 2}, idims2[3] = {2, 4, 1};
    for (std::size_t v = 0; v < 3; ++v) {
        CHECK(indec_projective(b, v).dim == pdims2[v]);
        CHECK(indec_injective(b, v).dim == idims2[v]);
    }
}

TEST_CASE("regular module decomposes into the indecomposable projectives") {
    for (AlgebraPtr a : {fixtures::alg1(101), fixtures::alg2(101)}) {
        FdModule p0 = indec_projective(a, 0), p1 = indec_projective(a, 1),
                 p2 = indec_projective(a, 2);
        DirectSum s = direct_sum(a, {&p0, &p1, &p2});
        CHECK(is_isomorphic(regular_module(a), s.mod) == Cert::Yes);
    }
}

TEST_CASE("charpoly-chain radical agrees with the arrow ideal at several primes") {
    for (std::uint32_t p : {2u, 3u, 5u, 101u, 32003u}) {
        for (auto make : {fixtures::alg1, fixtures::alg2}) {
            AlgebraPtr a = make(p);
            Mat chain = radical_by_charpoly_chain(*a);
            const Mat& quiver_rad = structure_of(a).radical;
            CHECK(chain.cols == quiver_rad.cols);
            CHECK(rank(Mat::hstack({chain, quiver_rad})) == quiver_rad.cols);
        }
    }
}

TEST_CASE("general structure path on a stripped table copy matches the quiver path") {
    for (std::uint32_t p : {5u, 101u}) {
        AlgebraPtr a = fixtures::alg1(p);
        AlgebraPtr t = fixtures::as_table(a);
        const AlgebraStructure& st = structure_of(t);
        CHECK(st.radical.cols == 8);
        CHECK(st.complete_idem.size() == 3);
        CHECK(st.blocks.size() == 3);
        // idempotents: orthogonal, idempotent, summing to one
        Mat sum(p, t->dim, 1);
        for (const Mat& e : st.complete_idem) {
            CHECK(t->is_idempotent(e));
            sum = sum + e;
        }
        CHECK(sum == t->one);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                if (i != j)
                    CHECK((t->left_mult_by(st.complete_idem[i]) * st.complete_idem[j])
                              .is_zero());
        CHECK(sorted_dims(t, true) == std::vector<std::size_t>{3, 4, 4});
        CHECK(sorted_dims(t, false) == std::vector<std::size_t>{1, 4, 6});
        // compact generators really generate
        CHECK(st.small_gens.cols < t->dim + 3);
    }
}

TEST_CASE("matrix algebra: semisimple with one block of multiplicity two") {
    AlgebraPtr m2 = fixtures::mat2(7);
    const AlgebraStructure& st = structure_of(m2);
    CHECK(st.radical.cols == 0);
    CHECK(st.complete_idem.size() == 2);
    CHECK(st.blocks.size() == 1);
    CHECK(st.blocks[0].mult == 2);
    CHECK(st.blocks[0].proj.dim == 2);
    CHECK(st.blocks[0].simple.dim == 2);
    CHECK(st.blocks[0].inj.dim == 2);
    CHECK(is_isomorphic(st.blocks[0].proj, st.blocks[0].simple) == Cert::Yes);
}

TEST_CASE("matrix algebra at p=2 splits via exhaustive corner search") {
    AlgebraPtr m2 = fixtures::mat2(2);
    const AlgebraStructure& st = structure_of(m2);
    CHECK(st.complete_idem.size() == 2);
    CHECK(st.blocks.size() == 1);
}

TEST_CASE("field extension blocks are reported, not mangled") {
    AlgebraPtr f4 = fixtures::f4();
    CHECK_THROWS_AS(structure_of(f4), NoRadicalRuleError);
}

TEST_CASE("local commutative algebra") {
    AlgebraPtr d = fixtures::dual_numbers(5);
    const AlgebraStructure& st = structure_of(d);
    CHECK(st.radical.cols == 1);
    CHECK(st.blocks.size() == 1);
    CHECK(st.blocks[0].proj.dim == 2);
    CHECK(st.blocks[0].simple.dim == 1);
}

TEST_CASE("projective generator coordinates recover the idempotent") {
    AlgebraPtr a = fixtures::alg2(101);
    const AlgebraStructure& st = structure_of(a);
    for (const BlockData& b : st.blocks) {
        CHECK(b.proj_basis * b.proj_gen == b.idem);
        // the generator generates: its orbit spans the projective
        SubQuotient sub = submodule_spanned(b.proj, b.proj_gen);
        CHECK(sub.mod.dim == b.proj.dim);
    }
}
