#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

#include "udom/field.hpp"

namespace udom {

/* Dense matrix over F_p, row-major.  Every matrix carries its modulus;
 * mixing moduli in one operation is an internal error.  All reductions use
 * deterministic first-nonzero pivoting, so canonical bases (kernels, column
 * spaces, complements) are reproducible across runs and platforms. */
struct Mat {
    std::uint32_t p = 0;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::uint32_t> a; // row-major, values in [0, p)

    Mat() = default;
    Mat(std::uint32_t p_, std::size_t r, std::size_t c)
        : p(p_), rows(r), cols(c), a(r * c, 0) {}

    static Mat identity(std::uint32_t p, std::size_t n);
    /* Row-of-rows constructor used mostly by tests; entries may be any
     * signed integers and are reduced mod p. */
    static Mat from_rows(std::uint32_t p,
                         std::initializer_list<std::initializer_list<std::int64_t>> rows);
    static Mat unit_column(std::uint32_t p, std::size_t n, std::size_t i);

    std::uint32_t& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const std::uint32_t& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    bool is_zero() const noexcept;
    bool operator==(const Mat&) const = default;

    Mat transpose() const;
    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat scaled(std::uint32_t c) const;

    /* Column j as an n x 1 matrix. */
    Mat col(std::size_t j) const;
    Mat cols_selected(const std::vector<std::size_t>& idx) const;
    Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

    static Mat hstack(const std::vector<Mat>& parts);
    static Mat vstack(const std::vector<Mat>& parts);

    /* Kronecker product: (A kron B) acting on vec(x kron y). */
    static Mat kron(const Mat& A, const Mat& B);
};

struct Rref {
    Mat m;
    std::vector<std::size_t> pivots; // pivot column per nonzero row, increasing
};

/* Reduced row echelon form with first-nonzero pivot selection. */
Rref rref(Mat m);

std::size_t rank(const Mat& m);

/* Columns form the canonical basis of the right kernel {x : m x = 0}:
 * one column per free column of rref(m), with 1 in the free position. */
Mat kernel_basis(const Mat& m);

/* The pivot columns of m itself (not of its rref): a deterministic basis
 * of the column span. */
Mat column_space(const Mat& m);

/* Least-index solution X of A X = B, empty optional if inconsistent. */
std::optional<Mat> try_solve(const Mat& A, const Mat& B);

/* As try_solve but throws NoSolutionError when inconsistent. */
Mat solve(const Mat& A, const Mat& B);

bool in_column_span(const Mat& A, const Mat& B);

/* Basis of span(cols A) intersected with span(cols B). */
Mat intersect_columns(const Mat& A, const Mat& B);

/* Unit vectors completing span(cols S) to all of F^n; deterministic. */
Mat complement_of_columns(const Mat& S, std::size_t n);

} // namespace udom
