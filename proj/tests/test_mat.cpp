#include "doctest.h"

#include <algorithm>

#include "udom/mat.hpp"
#include "udom/structure.hpp"

using namespace udom;

TEST_CASE("rref basics and rank") {
    Mat m = Mat::from_rows(101, {{1, 2, 3}, {2, 4, 6}, {0, 1, 1}});
    CHECK(rank(m) == 2);
    Rref r = rref(m);
    CHECK(r.pivots == std::vector<std::size_t>{0, 1});
    CHECK(r.m.at(0, 1) == 0); // reduced above pivots
}

TEST_CASE("kernel basis is canonical and annihilates") {
    Mat m = Mat::from_rows(7, {{1, 2, 3, 4}, {0, 1, 1, 1}});
    Mat k = kernel_basis(m);
    CHECK(k.cols == 2);
    CHECK((m * k).is_zero());
    // free coordinates carry 1
    CHECK(k.at(2, 0) == 1);
    CHECK(k.at(3, 0) == 0);
    CHECK(k.at(3, 1) == 1);
}

TEST_CASE("solve and try_solve") {
    Mat a = Mat::from_rows(101, {{1, 1}, {0, 1}, {1, 0}});
    Mat b = Mat::from_rows(101, {{3}, {2}, {1}});
    Mat x = solve(a, b);
    CHECK(a * x == b);
    Mat bad = Mat::from_rows(101, {{0}, {0}, {1}});
    CHECK(!try_solve(a, bad).has_value());
}

TEST_CASE("column_space returns original pivot columns") {
    Mat m = Mat::from_rows(5, {{1, 2, 0}, {2, 4, 1}});
    Mat c = column_space(m);
    CHECK(c.cols == 2);
    CHECK(c.at(0, 0) == 1);
    CHECK(c.at(1, 0) == 2);
    CHECK(c.at(0, 1) == 0);
}

TEST_CASE("complement and intersection") {
    Mat s = Mat::from_rows(101, {{1, 0}, {1, 1}, {0, 1}});
    Mat c = complement_of_columns(s, 3);
    CHECK(c.cols == 1);
    CHECK(rank(Mat::hstack({s, c})) == 3);

    Mat a = Mat::from_rows(101, {{1, 0}, {0, 1}, {0, 0}});
    Mat b = Mat::from_rows(101, {{0, 0}, {1, 0}, {0, 1}});
    Mat i = intersect_columns(a, b);
    CHECK(i.cols == 1);
    CHECK(i.at(0, 0) == 0);
    CHECK(i.at(2, 0) == 0);
    CHECK(i.at(1, 0) != 0);
}

TEST_CASE("kron matches the row-major pairing") {
    Mat a = Mat::from_rows(7, {{1, 2}, {3, 4}});
    Mat b = Mat::from_rows(7, {{0, 1}, {1, 0}});
    Mat k = Mat::kron(a, b);
    CHECK(k.rows == 4);
    // entry ((i,j),(u,v)) = a[i][u] b[j][v] with flattening (i,j) -> 2i+j
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t u = 0; u < 2; ++u)
                for (std::size_t v = 0; v < 2; ++v)
                    CHECK(k.at(2 * i + j, 2 * u + v) ==
                          Fp(7).mul(a.at(i, u), b.at(j, v)));
}

TEST_CASE("charpoly on triangular and companion matrices") {
    Mat t = Mat::from_rows(101, {{2, 5, 7}, {0, 3, 1}, {0, 0, 2}});
    // (x-2)^2 (x-3) = x^3 - 7x^2 + 16x - 12
    std::vector<std::uint32_t> cp = charpoly(t);
    Fp f(101);
    CHECK(cp[3] == 1);
    CHECK(cp[2] == f.reduce(-7));
    CHECK(cp[1] == 16);
    CHECK(cp[0] == f.reduce(-12));

    // companion matrix of x^3 + 4x + 9 (column convention)
    Mat c = Mat::from_rows(101, {{0, 0, -9}, {1, 0, -4}, {0, 1, 0}});
    std::vector<std::uint32_t> cp2 = charpoly(c);
    CHECK(cp2[0] == 9);
    CHECK(cp2[1] == 4);
    CHECK(cp2[2] == 0);
    CHECK(cp2[3] == 1);

    // nilpotent
    Mat n = Mat::from_rows(5, {{0, 1}, {0, 0}});
    std::vector<std::uint32_t> cp3 = charpoly(n);
    CHECK(cp3 == std::vector<std::uint32_t>{0, 0, 1});
}

TEST_CASE("charpoly at small p agrees with dense expansion on random 4x4") {
    // determinant of (xI - M) expanded by brute force over F_2 using
    // permutation sum, for a fixed matrix
    Mat m = Mat::from_rows(2, {{1, 0, 1, 1}, {0, 1, 1, 0}, {1, 1, 0, 1}, {0, 1, 1, 1}});
    std::vector<std::uint32_t> cp = charpoly(m);
    // evaluate det(xI - M) at all x in F_2 and compare with poly evaluation
    Fp f(2);
    for (std::uint32_t x = 0; x < 2; ++x) {
        Mat xm = Mat::identity(2, 4).scaled(x) - m;
        // det via rank of [xm | I] trick: use rref and track... simpler: 4x4 permanent-style
        std::uint32_t det = 0;
        std::size_t perm[4] = {0, 1, 2, 3};
        std::vector<std::size_t> idx(perm, perm + 4);
        std::sort(idx.begin(), idx.end());
        do {
            // sign irrelevant mod 2
            std::uint32_t prod = 1;
            for (std::size_t i = 0; i < 4; ++i) prod = f.mul(prod, xm.at(i, idx[i]));
            det = f.add(det, prod);
        } while (std::next_permutation(idx.begin(), idx.end()));
        std::uint32_t val = 0;
        for (std::size_t k = cp.size(); k-- > 0;) val = f.add(f.mul(val, x), cp[k]);
        CHECK(val == det);
    }
}
