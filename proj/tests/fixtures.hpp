#pragma once

#include <cstdint>
#include <vector>

#include "udom/algebra.hpp"
#include "udom/examples.hpp"

/* Shared test fixtures.  The bound quiver algebras come from the library's
 * built-in example registry; the table algebras below exercise the general
 * structure machinery. */
namespace fixtures {

inline udom::Quiver braid_quiver() {
    udom::Quiver q;
    q.vertices = {"1", "2", "3"};
    q.arrows = {{"alpha", 0, 1}, {"beta", 1, 0}, {"gamma", 1, 2}};
    return q;
}

/* Relation: alpha beta alpha (walk 1->2->1->2). Dimension 11. */
inline udom::AlgebraPtr alg1(std::uint32_t p) { return udom::example_algebra_1(p); }

/* Relations: alpha gamma and alpha beta. Dimension 7. */
inline udom::AlgebraPtr alg2(std::uint32_t p) { return udom::example_algebra_2(p); }

/* Three isolated vertices: the semisimple algebra F_p x F_p x F_p. */
inline udom::AlgebraPtr semisimple3(std::uint32_t p) { return udom::semisimple_example(p); }

/* Hereditary linear quiver 1 -> 2 -> 3, dimension 6. */
inline udom::AlgebraPtr linear_a3(std::uint32_t p) { return udom::linear_a3_example(p); }

/* Cyclic quiver on three vertices with radical square zero: a self-injective
 * Nakayama algebra of dimension 6. */
inline udom::AlgebraPtr nakayama3(std::uint32_t p) { return udom::nakayama_example(p); }

/* Full 2x2 matrix algebra on the matrix-unit basis e11, e12, e21, e22. */
inline udom::AlgebraPtr mat2(std::uint32_t p) {
    using udom::Mat;
    auto rc = [](std::size_t i) { return std::pair<std::size_t, std::size_t>{i / 2, i % 2}; };
    std::vector<Mat> lm(4, Mat(p, 4, 4));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            auto [ri, ci] = rc(i);
            auto [rj, cj] = rc(j);
            if (ci == rj) lm[i].at(ri * 2 + cj, j) = 1;
        }
    Mat one(p, 4, 1);
    one.at(0, 0) = 1;
    one.at(3, 0) = 1;
    Mat gens(p, 4, 4);
    for (std::size_t i = 0; i < 4; ++i) gens.at(i, i) = 1;
    return udom::table_algebra(udom::Fp(p), {"e11", "e12", "e21", "e22"}, lm, one, gens);
}

/* The field with four elements as a two-dimensional algebra over F_2:
 * basis 1, w with w^2 = w + 1. */
inline udom::AlgebraPtr f4() {
    using udom::Mat;
    std::vector<Mat> lm(2, Mat(2, 2, 2));
    lm[0] = Mat::identity(2, 2);
    lm[1] = Mat::from_rows(2, {{0, 1}, {1, 1}}); // w*1 = w, w*w = 1 + w
    Mat one = Mat::unit_column(2, 2, 0);
    Mat gens = Mat::identity(2, 2);
    return udom::table_algebra(udom::Fp(2), {"one", "w"}, lm, one, gens);
}

/* F_p[x]/(x^2) on the basis 1, x. */
inline udom::AlgebraPtr dual_numbers(std::uint32_t p) {
    using udom::Mat;
    std::vector<Mat> lm(2, Mat(p, 2, 2));
    lm[0] = Mat::identity(p, 2);
    lm[1] = Mat::from_rows(p, {{0, 0}, {1, 0}});
    Mat one = Mat::unit_column(p, 2, 0);
    Mat gens = Mat::identity(p, 2);
    return udom::table_algebra(udom::Fp(p), {"one", "x"}, lm, one, gens);
}

/* Same multiplication table, but with the presentation stripped, forcing the
 * general structure machinery. */
inline udom::AlgebraPtr as_table(const udom::AlgebraPtr& a) {
    udom::Mat gens(a->field.p(), a->dim, a->dim);
    for (std::size_t i = 0; i < a->dim; ++i) gens.at(i, i) = 1;
    return udom::table_algebra(a->field, a->basis_names, a->left_mult, a->one, gens);
}

} // namespace fixtures
