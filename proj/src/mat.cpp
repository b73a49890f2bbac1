#include "udom/mat.hpp"

#include <string>

namespace udom {

namespace {

void require_same_p(const Mat& x, const Mat& y, const char* op) {
    if (x.p != y.p) {
        throw InternalError(std::string("modulus mismatch in ") + op + ": " +
                            std::to_string(x.p) + " vs " + std::to_string(y.p));
    }
}

} // namespace

Mat Mat::identity(std::uint32_t p, std::size_t n) {
    Mat m(p, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Mat Mat::from_rows(std::uint32_t p,
                   std::initializer_list<std::initializer_list<std::int64_t>> rows) {
    Fp f(p);
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.begin()->size();
    Mat m(p, r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) throw InternalError("ragged row list in Mat::from_rows");
        std::size_t j = 0;
        for (std::int64_t v : row) m.at(i, j++) = f.reduce(v);
        ++i;
    }
    return m;
}

Mat Mat::unit_column(std::uint32_t p, std::size_t n, std::size_t i) {
    Mat m(p, n, 1);
    m.at(i, 0) = 1;
    return m;
}

bool Mat::is_zero() const noexcept {
    for (std::uint32_t v : a)
        if (v) return false;
    return true;
}

Mat Mat::transpose() const {
    Mat t(p, cols, rows);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
}

Mat Mat::operator*(const Mat& o) const {
    require_same_p(*this, o, "product");
    if (cols != o.rows) {
        throw InternalError("shape mismatch in product: " + std::to_string(rows) + "x" +
                            std::to_string(cols) + " * " + std::to_string(o.rows) + "x" +
                            std::to_string(o.cols));
    }
    Mat r(p, rows, o.cols);
    // Accumulate in 64 bits; p < 2^31 and realistic dims keep sums far from overflow.
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t k = 0; k < cols; ++k) {
            std::uint64_t f = at(i, k);
            if (!f) continue;
            const std::uint32_t* src = &o.a[k * o.cols];
            std::uint32_t* dst = &r.a[i * o.cols];
            for (std::size_t j = 0; j < o.cols; ++j) {
                dst[j] = static_cast<std::uint32_t>((dst[j] + f * src[j]) % p);
            }
        }
    }
    return r;
}

Mat Mat::operator+(const Mat& o) const {
    require_same_p(*this, o, "sum");
    if (rows != o.rows || cols != o.cols) throw InternalError("shape mismatch in sum");
    Fp f(p);
    Mat r(p, rows, cols);
    for (std::size_t i = 0; i < a.size(); ++i) r.a[i] = f.add(a[i], o.a[i]);
    return r;
}

Mat Mat::operator-(const Mat& o) const {
    require_same_p(*this, o, "difference");
    if (rows != o.rows || cols != o.cols) throw InternalError("shape mismatch in difference");
    Fp f(p);
    Mat r(p, rows, cols);
    for (std::size_t i = 0; i < a.size(); ++i) r.a[i] = f.sub(a[i], o.a[i]);
    return r;
}

Mat Mat::scaled(std::uint32_t c) const {
    Fp f(p);
    Mat r(p, rows, cols);
    for (std::size_t i = 0; i < a.size(); ++i) r.a[i] = f.mul(a[i], c);
    return r;
}

Mat Mat::col(std::size_t j) const { return cols_selected({j}); }

Mat Mat::cols_selected(const std::vector<std::size_t>& idx) const {
    Mat r(p, rows, idx.size());
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < idx.size(); ++k) r.at(i, k) = at(i, idx[k]);
    return r;
}

Mat Mat::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Mat r(p, nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) r.at(i, j) = at(r0 + i, c0 + j);
    return r;
}

Mat Mat::hstack(const std::vector<Mat>& parts) {
    if (parts.empty()) throw InternalError("hstack of nothing");
    std::size_t c = 0;
    for (const auto& m : parts) {
        require_same_p(parts.front(), m, "hstack");
        if (m.rows != parts.front().rows) throw InternalError("row mismatch in hstack");
        c += m.cols;
    }
    Mat r(parts.front().p, parts.front().rows, c);
    std::size_t off = 0;
    for (const auto& m : parts) {
        for (std::size_t i = 0; i < m.rows; ++i)
            for (std::size_t j = 0; j < m.cols; ++j) r.at(i, off + j) = m.at(i, j);
        off += m.cols;
    }
    return r;
}

Mat Mat::vstack(const std::vector<Mat>& parts) {
    if (parts.empty()) throw InternalError("vstack of nothing");
    std::size_t r = 0;
    for (const auto& m : parts) {
        require_same_p(parts.front(), m, "vstack");
        if (m.cols != parts.front().cols) throw InternalError("column mismatch in vstack");
        r += m.rows;
    }
    Mat out(parts.front().p, r, parts.front().cols);
    std::size_t off = 0;
    for (const auto& m : parts) {
        for (std::size_t i = 0; i < m.rows; ++i)
            for (std::size_t j = 0; j < m.cols; ++j) out.at(off + i, j) = m.at(i, j);
        off += m.rows;
    }
    return out;
}

Mat Mat::kron(const Mat& A, const Mat& B) {
    require_same_p(A, B, "kron");
    Fp f(A.p);
    Mat r(A.p, A.rows * B.rows, A.cols * B.cols);
    for (std::size_t i = 0; i < A.rows; ++i)
        for (std::size_t j = 0; j < A.cols; ++j) {
            std::uint32_t v = A.at(i, j);
            if (!v) continue;
            for (std::size_t k = 0; k < B.rows; ++k)
                for (std::size_t l = 0; l < B.cols; ++l)
                    r.at(i * B.rows + k, j * B.cols + l) = f.mul(v, B.at(k, l));
        }
    return r;
}

Rref rref(Mat m) {
    Fp f(m.p);
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
        // First nonzero entry at or below `row` decides the pivot (deterministic).
        std::size_t sel = row;
        while (sel < m.rows && m.at(sel, col) == 0) ++sel;
        if (sel == m.rows) continue;
        if (sel != row) {
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(row, j));
        }
        std::uint32_t s = f.inv(m.at(row, col));
        for (std::size_t j = col; j < m.cols; ++j) m.at(row, j) = f.mul(m.at(row, j), s);
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == row) continue;
            std::uint64_t c = m.at(i, col);
            if (!c) continue;
            std::uint64_t nc = m.p - c;
            for (std::size_t j = col; j < m.cols; ++j) {
                m.at(i, j) = static_cast<std::uint32_t>((m.at(i, j) + nc * m.at(row, j)) % m.p);
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Mat& m) { return rref(m).pivots.size(); }

Mat kernel_basis(const Mat& m) {
    Rref r = rref(m);
    Fp f(m.p);
    std::vector<bool> is_pivot(m.cols, false);
    for (std::size_t c : r.pivots) is_pivot[c] = true;
    std::size_t nfree = m.cols - r.pivots.size();
    Mat k(m.p, m.cols, nfree);
    std::size_t kj = 0;
    for (std::size_t c = 0; c < m.cols; ++c) {
        if (is_pivot[c]) continue;
        k.at(c, kj) = 1;
        for (std::size_t i = 0; i < r.pivots.size(); ++i) {
            k.at(r.pivots[i], kj) = f.neg(r.m.at(i, c));
        }
        ++kj;
    }
    return k;
}

Mat column_space(const Mat& m) { return m.cols_selected(rref(m).pivots); }

std::optional<Mat> try_solve(const Mat& A, const Mat& B) {
    require_same_p(A, B, "solve");
    if (A.rows != B.rows) throw InternalError("shape mismatch in solve");
    Rref r = rref(Mat::hstack({A, B}));
    Fp f(A.p);
    // Inconsistent iff some pivot lands in the B block.
    for (std::size_t c : r.pivots)
        if (c >= A.cols) return std::nullopt;
    Mat x(A.p, A.cols, B.cols);
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
        for (std::size_t j = 0; j < B.cols; ++j) x.at(r.pivots[i], j) = r.m.at(i, A.cols + j);
    return x;
}

Mat solve(const Mat& A, const Mat& B) {
    auto x = try_solve(A, B);
    if (!x) throw NoSolutionError("inconsistent linear system");
    return *x;
}

bool in_column_span(const Mat& A, const Mat& B) { return try_solve(A, B).has_value(); }

Mat intersect_columns(const Mat& A, const Mat& B) {
    require_same_p(A, B, "intersect");
    if (A.rows != B.rows) throw InternalError("shape mismatch in intersect");
    if (A.cols == 0 || B.cols == 0) return Mat(A.p, A.rows, 0);
    // Solutions of A x = B y give the intersection as {A x}.
    Mat neg_b = B.scaled(B.p - 1);
    Mat k = kernel_basis(Mat::hstack({A, neg_b}));
    Mat xs = k.block(0, 0, A.cols, k.cols);
    return column_space(A * xs);
}

Mat complement_of_columns(const Mat& S, std::size_t n) {
    Mat probe = S.cols == 0 ? Mat::identity(S.p == 0 ? 2 : S.p, n)
                            : Mat::hstack({S, Mat::identity(S.p, n)});
    if (S.cols == 0) return probe; // complement of {0} is everything
    Rref r = rref(probe);
    std::vector<std::size_t> take;
    for (std::size_t c : r.pivots)
        if (c >= S.cols) take.push_back(c - S.cols);
    Mat id = Mat::identity(S.p, n);
    return id.cols_selected(take);
}

} // namespace udom
