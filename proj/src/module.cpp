#include "udom/module.hpp"

#include <algorithm>
#include <random>

#include "udom/errors.hpp"
#include "udom/structure.hpp"

namespace udom {

namespace {

Mat act_of_coords(const std::vector<Mat>& act, const Mat& coords, std::uint32_t p,
                  std::size_t dim) {
    Mat res(p, dim, dim);
    Fp f(p);
    for (std::size_t k = 0; k < coords.rows; ++k) {
        std::uint32_t c = coords.at(k, 0);
        if (c == 0) continue;
        const Mat& M = act[k];
        for (std::size_t idx = 0; idx < res.a.size(); ++idx)
            res.a[idx] = f.add(res.a[idx], f.mul(c, M.a[idx]));
    }
    return res;
}

Mat apply_coords(const std::vector<Mat>& applied, const Mat& coords, std::uint32_t p,
                 std::size_t dim) {
    // Linear combination sum_k coords[k] * applied[k] of dim x 1 vectors.
    Mat res(p, dim, 1);
    Fp f(p);
    for (std::size_t k = 0; k < coords.rows; ++k) {
        std::uint32_t c = coords.at(k, 0);
        if (c == 0) continue;
        for (std::size_t r = 0; r < dim; ++r)
            res.a[r] = f.add(res.a[r], f.mul(c, applied[k].a[r]));
    }
    return res;
}

void validate_probes(const Algebra& a, const std::vector<Mat>& act, std::size_t dim) {
    if (dim == 0) return;
    std::mt19937_64 rng(0x70726f6265ULL ^ (std::uint64_t(a.dim) << 32) ^ dim);
    std::uniform_int_distribution<std::uint32_t> pick(0, a.field.p() - 1);
    const int probes = 3;
    for (int t = 0; t < probes; ++t) {
        Mat v(a.field.p(), dim, 1);
        for (std::size_t r = 0; r < dim; ++r) v.a[r] = pick(rng);
        std::vector<Mat> P(a.dim);
        for (std::size_t k = 0; k < a.dim; ++k) P[k] = act[k] * v;
        for (std::size_t g = 0; g < a.gens.cols; ++g) {
            Mat gc = a.gens.col(g);
            Mat wg = apply_coords(P, gc, a.field.p(), dim);
            for (std::size_t i = 0; i < a.dim; ++i) {
                Mat lhs = act[i] * wg;
                Mat prod = a.left_mult[i] * gc; // coordinates of b_i * g
                Mat rhs = apply_coords(P, prod, a.field.p(), dim);
                if (!(lhs == rhs))
                    throw InputError("module action incompatible with the algebra product");
            }
        }
    }
}

void validate_full(const Algebra& a, const std::vector<Mat>& act, std::size_t dim,
                   std::uint32_t p) {
    for (std::size_t g = 0; g < a.gens.cols; ++g) {
        Mat gc = a.gens.col(g);
        Mat actg = act_of_coords(act, gc, p, dim);
        for (std::size_t i = 0; i < a.dim; ++i) {
            Mat lhs = act[i] * actg;
            Mat prod = a.left_mult[i] * gc;
            Mat rhs = act_of_coords(act, prod, p, dim);
            if (!(lhs == rhs))
                throw InputError("module action incompatible with the algebra product");
        }
    }
}

} // namespace

FdModule::FdModule(AlgebraPtr a, std::size_t d, std::vector<Mat> actions, Validate v)
    : alg(std::move(a)), dim(d), act(std::move(actions)) {
    if (!alg) throw InternalError("module without algebra");
    if (act.size() != alg->dim)
        throw InputError("module needs one action matrix per basis element");
    std::uint32_t p = alg->field.p();
    for (const Mat& m : act)
        if (m.p != p || m.rows != dim || m.cols != dim)
            throw InputError("module action matrix has wrong shape or modulus");
    if (v == Validate::None) return;
    if (!(act_elem(alg->one) == Mat::identity(p, dim)))
        throw InputError("identity of the algebra must act as the identity matrix");
    if (v == Validate::Full)
        validate_full(*alg, act, dim, p);
    else
        validate_probes(*alg, act, dim);
}

Mat FdModule::act_elem(const Mat& coords) const {
    if (coords.rows != alg->dim || coords.cols != 1)
        throw InternalError("act_elem expects algebra coordinates");
    return act_of_coords(act, coords, alg->field.p(), dim);
}

FdModule regular_module(const AlgebraPtr& a) {
    return FdModule(a, a->dim, a->left_mult, Validate::None);
}

FdModule zero_module(const AlgebraPtr& a) {
    std::vector<Mat> act(a->dim, Mat(a->field.p(), 0, 0));
    return FdModule(a, 0, std::move(act), Validate::None);
}

FdModule k_dual(const FdModule& m) {
    AlgebraPtr op = opposite(m.alg);
    std::vector<Mat> act(op->dim);
    for (std::size_t i = 0; i < op->dim; ++i) act[i] = m.act[i].transpose();
    return FdModule(op, m.dim, std::move(act), Validate::None);
}

bool intertwines(const FdModule& src, const FdModule& dst, const Mat& f) {
    if (f.rows != dst.dim || f.cols != src.dim) return false;
    for (std::size_t i = 0; i < src.alg->dim; ++i)
        if (!(f * src.act[i] == dst.act[i] * f)) return false;
    return true;
}

ModuleMap::ModuleMap(FdModule s, FdModule d, Mat m)
    : src(std::move(s)), dst(std::move(d)), mat(std::move(m)) {
    if (src.alg.get() != dst.alg.get())
        throw InputError("module map endpoints live over different algebras");
    if (!intertwines(src, dst, mat))
        throw InputError("matrix does not commute with the module actions");
}

std::vector<Mat> hom_basis(const FdModule& m, const FdModule& n) {
    if (m.alg.get() != n.alg.get())
        throw InternalError("hom endpoints live over different algebras");
    std::uint32_t p = m.alg->field.p();
    if (m.dim == 0 || n.dim == 0) return {};
    const AlgebraStructure& st = structure_of(m.alg);
    const std::size_t K = st.complete_idem.size();

    // Change to bases adapted to the idempotent decomposition M = sum f_t M.
    std::vector<std::size_t> mOff(K), nOff(K), rm(K), rn(K);
    std::vector<Mat> mParts, nParts;
    std::size_t moff = 0, noff = 0;
    for (std::size_t t = 0; t < K; ++t) {
        Mat bm = column_space(m.act_elem(st.complete_idem[t]));
        Mat bn = column_space(n.act_elem(st.complete_idem[t]));
        mOff[t] = moff; nOff[t] = noff;
        rm[t] = bm.cols; rn[t] = bn.cols;
        moff += bm.cols; noff += bn.cols;
        mParts.push_back(std::move(bm));
        nParts.push_back(std::move(bn));
    }
    if (moff != m.dim || noff != n.dim)
        throw InternalError("idempotent decomposition does not fill the module");
    Mat Bm = Mat::hstack(mParts), Bn = Mat::hstack(nParts);
    Mat Xm = solve(Bm, Mat::identity(p, m.dim));
    Mat Xn = solve(Bn, Mat::identity(p, n.dim));

    std::vector<std::size_t> uoff(K);
    std::size_t U = 0;
    for (std::size_t t = 0; t < K; ++t) { uoff[t] = U; U += rm[t] * rn[t]; }
    if (U == 0) return {};

    // Block index lookups per adapted coordinate.
    std::vector<std::size_t> mBlk(m.dim), nBlk(n.dim);
    for (std::size_t t = 0; t < K; ++t) {
        for (std::size_t j = 0; j < rm[t]; ++j) mBlk[mOff[t] + j] = t;
        for (std::size_t i = 0; i < rn[t]; ++i) nBlk[nOff[t] + i] = t;
    }

    // One constraint block per non-idempotent generator.
    std::vector<Mat> rowsParts;
    Fp f(p);
    for (std::size_t g = K; g < st.small_gens.cols; ++g) {
        Mat gc = st.small_gens.col(g);
        Mat Gm = Xm * m.act_elem(gc) * Bm;
        Mat Gn = Xn * n.act_elem(gc) * Bn;
        Mat C(p, n.dim * m.dim, U);
        for (std::size_t r = 0; r < n.dim; ++r) {
            for (std::size_t c = 0; c < m.dim; ++c) {
                std::size_t row = r * m.dim + c;
                std::size_t t = mBlk[c], s = nBlk[r];
                std::size_t j = c - mOff[t];
                for (std::size_t i = 0; i < rn[t]; ++i) {
                    std::size_t u = uoff[t] + i * rm[t] + j;
                    C.at(row, u) = f.add(C.at(row, u), Gn.at(r, nOff[t] + i));
                }
                std::size_t i2 = r - nOff[s];
                for (std::size_t j2 = 0; j2 < rm[s]; ++j2) {
                    std::size_t u = uoff[s] + i2 * rm[s] + j2;
                    C.at(row, u) = f.sub(C.at(row, u), Gm.at(mOff[s] + j2, c));
                }
            }
        }
        rowsParts.push_back(std::move(C));
    }
    Mat ker = rowsParts.empty() ? Mat::identity(p, U)
                                : kernel_basis(Mat::vstack(rowsParts));

    std::vector<Mat> result;
    for (std::size_t v = 0; v < ker.cols; ++v) {
        Mat Phi(p, n.dim, m.dim);
        for (std::size_t t = 0; t < K; ++t)
            for (std::size_t i = 0; i < rn[t]; ++i)
                for (std::size_t j = 0; j < rm[t]; ++j)
                    Phi.at(nOff[t] + i, mOff[t] + j) = ker.at(uoff[t] + i * rm[t] + j, v);
        result.push_back(Bn * Phi * Xm);
    }
    return result;
}

SubQuotient sub_on_basis(const FdModule& m, const Mat& closed_basis) {
    std::uint32_t p = m.alg->field.p();
    std::size_t s = closed_basis.cols;
    std::vector<Mat> act(m.alg->dim);
    for (std::size_t i = 0; i < m.alg->dim; ++i) {
        if (s == 0) { act[i] = Mat(p, 0, 0); continue; }
        act[i] = solve(closed_basis, m.act[i] * closed_basis);
    }
    return {FdModule(m.alg, s, std::move(act), Validate::None), closed_basis};
}

SubQuotient kernel_of(const FdModule& src, const FdModule& dst, const Mat& f) {
    if (f.rows != dst.dim || f.cols != src.dim)
        throw InternalError("kernel_of: shape mismatch");
    return sub_on_basis(src, kernel_basis(f));
}

SubQuotient image_of(const FdModule& src, const FdModule& dst, const Mat& f) {
    if (f.rows != dst.dim || f.cols != src.dim)
        throw InternalError("image_of: shape mismatch");
    return sub_on_basis(dst, column_space(f));
}

SubQuotient cokernel_of(const FdModule& src, const FdModule& dst, const Mat& f) {
    if (f.rows != dst.dim || f.cols != src.dim)
        throw InternalError("cokernel_of: shape mismatch");
    return quotient_by(dst, column_space(f));
}

SubQuotient submodule_spanned(const FdModule& m, const Mat& vectors) {
    const AlgebraStructure& st = structure_of(m.alg);
    Mat span = column_space(vectors);
    for (;;) {
        std::vector<Mat> parts{span};
        for (std::size_t g = 0; g < st.small_gens.cols; ++g)
            parts.push_back(m.act_elem(st.small_gens.col(g)) * span);
        Mat bigger = column_space(Mat::hstack(parts));
        if (bigger.cols == span.cols) break;
        span = std::move(bigger);
    }
    return sub_on_basis(m, span);
}

SubQuotient quotient_by(const FdModule& m, const Mat& sub_basis) {
    std::uint32_t p = m.alg->field.p();
    Mat B = column_space(sub_basis);
    Mat C = complement_of_columns(B, m.dim);
    Mat full = Mat::hstack({B, C});
    Mat X = solve(full, Mat::identity(p, m.dim));
    Mat proj = X.block(B.cols, 0, C.cols, m.dim);
    std::vector<Mat> act(m.alg->dim);
    for (std::size_t i = 0; i < m.alg->dim; ++i) act[i] = proj * m.act[i] * C;
    return {FdModule(m.alg, C.cols, std::move(act), Validate::None), proj};
}

DirectSum direct_sum(const AlgebraPtr& a, const std::vector<const FdModule*>& parts) {
    std::uint32_t p = a->field.p();
    std::vector<std::size_t> offsets;
    std::size_t total = 0;
    for (const FdModule* m : parts) {
        if (m->alg.get() != a.get())
            throw InternalError("direct_sum: summand over a different algebra");
        offsets.push_back(total);
        total += m->dim;
    }
    std::vector<Mat> act(a->dim, Mat(p, total, total));
    for (std::size_t i = 0; i < a->dim; ++i)
        for (std::size_t k = 0; k < parts.size(); ++k) {
            const Mat& blk = parts[k]->act[i];
            for (std::size_t r = 0; r < blk.rows; ++r)
                for (std::size_t c = 0; c < blk.cols; ++c)
                    act[i].at(offsets[k] + r, offsets[k] + c) = blk.at(r, c);
        }
    return {FdModule(a, total, std::move(act), Validate::None), offsets};
}

Mat radical_vectors(const FdModule& m) {
    const AlgebraStructure& st = structure_of(m.alg);
    std::uint32_t p = m.alg->field.p();
    if (st.radical.cols == 0 || m.dim == 0) return Mat(p, m.dim, 0);
    std::vector<Mat> parts;
    for (std::size_t k = 0; k < st.radical.cols; ++k)
        parts.push_back(m.act_elem(st.radical.col(k)));
    return column_space(Mat::hstack(parts));
}

SubQuotient radical_submodule(const FdModule& m) {
    return sub_on_basis(m, radical_vectors(m));
}

SubQuotient top_of(const FdModule& m) { return quotient_by(m, radical_vectors(m)); }

SubQuotient socle_of(const FdModule& m) {
    const AlgebraStructure& st = structure_of(m.alg);
    std::uint32_t p = m.alg->field.p();
    if (st.radical.cols == 0 || m.dim == 0)
        return sub_on_basis(m, Mat::identity(p, m.dim));
    std::vector<Mat> parts;
    for (std::size_t k = 0; k < st.radical.cols; ++k)
        parts.push_back(m.act_elem(st.radical.col(k)));
    return sub_on_basis(m, kernel_basis(Mat::vstack(parts)));
}

namespace {

std::vector<std::size_t> block_mults(const FdModule& semisimple_part) {
    const AlgebraStructure& st = structure_of(semisimple_part.alg);
    std::vector<std::size_t> mults(st.blocks.size(), 0);
    std::vector<bool> seen(st.blocks.size(), false);
    for (std::size_t k = 0; k < st.complete_idem.size(); ++k) {
        std::size_t b = st.idem_block[k];
        if (seen[b]) continue; // one primitive idempotent per block suffices
        seen[b] = true;
        mults[b] = rank(semisimple_part.act_elem(st.complete_idem[k]));
    }
    return mults;
}

} // namespace

std::vector<std::size_t> top_mults(const FdModule& m) { return block_mults(top_of(m).mod); }

std::vector<std::size_t> socle_mults(const FdModule& m) {
    return block_mults(socle_of(m).mod);
}

std::vector<std::size_t> graded_dims(const FdModule& m) {
    const AlgebraStructure& st = structure_of(m.alg);
    std::vector<std::size_t> dims;
    for (const Mat& f : st.complete_idem) dims.push_back(rank(m.act_elem(f)));
    return dims;
}

bool is_essential_submodule(const FdModule& big, const Mat& sub_cols) {
    Mat soc = socle_of(big).map;
    if (soc.cols == 0) return true;
    return rank(Mat::hstack({sub_cols, soc})) == rank(sub_cols);
}

Cert is_isomorphic(const FdModule& m, const FdModule& n, std::uint64_t seed) {
    if (m.alg.get() != n.alg.get())
        throw InternalError("is_isomorphic: modules over different algebras");
    if (m.dim != n.dim) return Cert::No;
    if (m.dim == 0) return Cert::Yes;
    if (graded_dims(m) != graded_dims(n)) return Cert::No;
    if (top_mults(m) != top_mults(n)) return Cert::No;
    if (socle_mults(m) != socle_mults(n)) return Cert::No;

    std::vector<Mat> H = hom_basis(m, n);
    if (H.empty()) return Cert::No;
    std::uint32_t p = m.alg->field.p();
    std::size_t d = m.dim, h = H.size();
    auto invertible = [&](const Mat& f) { return rank(f) == d; };

    for (const Mat& f : H)
        if (invertible(f)) return Cert::Yes;
    {
        Mat s(p, d, d);
        for (const Mat& f : H) s = s + f;
        if (invertible(s)) return Cert::Yes;
    }
    std::mt19937_64 rng(seed ^ (std::uint64_t(d) << 40) ^ h);
    std::uniform_int_distribution<std::uint32_t> pick(0, p - 1);
    for (int t = 0; t < 256; ++t) {
        Mat s(p, d, d);
        for (const Mat& Hk : H) {
            std::uint32_t c = pick(rng);
            if (c) s = s + Hk.scaled(c);
        }
        if (invertible(s)) return Cert::Yes;
    }

    // Exact decision: the determinant of sum x_k H_k is a polynomial of
    // degree <= d in each variable, so a grid with min(p, d+1) values per
    // coordinate contains a nonzero point whenever the polynomial is
    // nonzero (and for min = p the grid is the whole space).
    std::uint64_t V = std::min<std::uint64_t>(p, d + 1);
    double total = 1;
    for (std::size_t k = 0; k < h && total <= 20001; ++k) total *= double(V);
    if (total > 20000) return Cert::Inconclusive;
    std::vector<std::uint32_t> digits(h, 0);
    for (;;) {
        std::size_t k = 0;
        while (k < h && digits[k] + 1 == V) { digits[k] = 0; ++k; }
        if (k == h) break;
        ++digits[k];
        Mat s(p, d, d);
        for (std::size_t j = 0; j < h; ++j)
            if (digits[j]) s = s + H[j].scaled(digits[j]);
        if (invertible(s)) return Cert::Yes;
    }
    return Cert::No;
}

namespace {

/* Weight decomposition of a module carrier along the complete primitive
 * idempotents: bases[e] spans f_e·V and coords[e] are the matching coordinate
 * rows of the inverse change of basis. */
struct WeightSplit {
    std::vector<Mat> bases, coords;
};

WeightSplit weight_split(const FdModule& v, const AlgebraStructure& st) {
    std::uint32_t p = v.alg->field.p();
    WeightSplit w;
    std::vector<Mat> parts;
    for (const Mat& e : st.complete_idem) {
        w.bases.push_back(column_space(v.act_elem(e)));
        parts.push_back(w.bases.back());
    }
    Mat full = parts.empty() ? Mat(p, v.dim, 0) : Mat::hstack(parts);
    if (full.cols != v.dim)
        throw InternalError("complete idempotents do not decompose the module");
    Mat X = v.dim == 0 ? Mat(p, 0, 0) : solve(full, Mat::identity(p, v.dim));
    std::size_t off = 0;
    for (const Mat& b : w.bases) {
        w.coords.push_back(X.block(off, 0, b.cols, v.dim));
        off += b.cols;
    }
    return w;
}

} // namespace

TensorSpace tensor_over(const FdModule& n_right, const FdModule& m_left) {
    AlgebraPtr a = m_left.alg;
    if (n_right.alg.get() != opposite(a).get())
        throw InternalError("tensor_over: right factor must live over the opposite algebra");
    std::uint32_t p = a->field.p();
    const AlgebraStructure& st = structure_of(a);
    std::size_t K = st.complete_idem.size();

    TensorSpace t;
    t.p = p;
    WeightSplit wn = weight_split(n_right, st), wm = weight_split(m_left, st);
    t.en = wn.bases;
    t.qn = wn.coords;
    t.em = wm.bases;
    t.qm = wm.coords;
    for (std::size_t e = 0; e < K; ++e) {
        t.goff.push_back(t.gdim);
        t.gdim += t.en[e].cols * t.em[e].cols;
    }
    if (t.gdim == 0) {
        t.projq = Mat(p, 0, 0);
        t.sectq = Mat(p, 0, 0);
        return t;
    }

    /* Split every non-idempotent generator into its nonzero weight-pure
     * pieces f_s·g·f_t; the pieces still generate over the idempotents, and
     * a pure piece only relates the (s, t) weight pair. */
    std::vector<Mat> relParts;
    for (std::size_t g = K; g < st.small_gens.cols; ++g) {
        Mat gc = st.small_gens.col(g);
        for (std::size_t s = 0; s < K; ++s) {
            for (std::size_t tt = 0; tt < K; ++tt) {
                Mat piece = a->left_mult_by(st.complete_idem[s]) *
                            (a->left_mult_by(gc) * st.complete_idem[tt]);
                if (piece.is_zero()) continue;
                std::size_t ns = t.en[s].cols, mt = t.em[tt].cols;
                if (ns == 0 || mt == 0) continue;
                // x·g landing in the t-weight of n; g·y landing in the s-weight of m
                Mat UN = t.qn[tt] * (n_right.act_elem(piece) * t.en[s]); // n_t x n_s
                Mat WM = t.qm[s] * (m_left.act_elem(piece) * t.em[tt]); // m_s x m_t
                Mat R(p, t.gdim, ns * mt);
                Fp F(p);
                for (std::size_t i = 0; i < ns; ++i) {
                    for (std::size_t j = 0; j < mt; ++j) {
                        std::size_t c = i * mt + j;
                        for (std::size_t i2 = 0; i2 < UN.rows; ++i2)
                            R.at(t.goff[tt] + i2 * mt + j, c) =
                                F.add(R.at(t.goff[tt] + i2 * mt + j, c), UN.at(i2, i));
                        for (std::size_t j2 = 0; j2 < WM.rows; ++j2)
                            R.at(t.goff[s] + i * t.em[s].cols + j2, c) =
                                F.sub(R.at(t.goff[s] + i * t.em[s].cols + j2, c), WM.at(j2, j));
                    }
                }
                relParts.push_back(R);
            }
        }
    }
    Mat RS = relParts.empty() ? Mat(p, t.gdim, 0) : column_space(Mat::hstack(relParts));
    Mat Cq = complement_of_columns(RS, t.gdim);
    Mat X = solve(Mat::hstack({RS, Cq}), Mat::identity(p, t.gdim));
    t.projq = X.block(RS.cols, 0, Cq.cols, t.gdim);
    t.sectq = Cq;
    t.dim = Cq.cols;
    return t;
}

Mat tensor_class(const TensorSpace& t, const Mat& x, const Mat& y) {
    Mat g(t.p, t.gdim, 1);
    for (std::size_t e = 0; e < t.en.size(); ++e) {
        Mat xe = t.qn[e] * x, ye = t.qm[e] * y;
        Fp F(t.p);
        for (std::size_t i = 0; i < xe.rows; ++i)
            for (std::size_t j = 0; j < ye.rows; ++j)
                g.at(t.goff[e] + i * ye.rows + j, 0) = F.mul(xe.at(i, 0), ye.at(j, 0));
    }
    return t.projq * g;
}

namespace {

/* Sandwiches a block-diagonal graded middle map dst.projq · MID · src.sectq
 * where the e-block of MID is kron(A_e, I) (right transport) or kron(I, B_e)
 * (left transport). */
Mat graded_sandwich(const TensorSpace& dst, const TensorSpace& src,
                    const std::vector<Mat>& blockN, const std::vector<Mat>& blockM) {
    std::uint32_t p = src.p;
    Mat mid(p, dst.gdim, src.dim);
    Fp F(p);
    for (std::size_t e = 0; e < src.en.size(); ++e) {
        std::size_t ns = src.en[e].cols, ms = src.em[e].cols;
        std::size_t nd = dst.en[e].cols, md = dst.em[e].cols;
        if (ns * ms == 0 || nd * md == 0) continue;
        const Mat& A = blockN[e]; // nd x ns
        const Mat& B = blockM[e]; // md x ms
        for (std::size_t c = 0; c < src.dim; ++c) {
            for (std::size_t i = 0; i < nd; ++i) {
                for (std::size_t j = 0; j < md; ++j) {
                    std::uint64_t acc = 0;
                    for (std::size_t i2 = 0; i2 < ns; ++i2) {
                        if (A.at(i, i2) == 0) continue;
                        std::uint64_t partial = 0;
                        for (std::size_t j2 = 0; j2 < ms; ++j2) {
                            std::uint32_t v = src.sectq.at(src.goff[e] + i2 * ms + j2, c);
                            if (v == 0 || B.at(j, j2) == 0) continue;
                            partial = (partial + static_cast<std::uint64_t>(v) * B.at(j, j2)) % p;
                        }
                        acc = (acc + partial * A.at(i, i2)) % p;
                    }
                    mid.at(dst.goff[e] + i * md + j, c) =
                        F.add(mid.at(dst.goff[e] + i * md + j, c), static_cast<std::uint32_t>(acc));
                }
            }
        }
    }
    return dst.projq * mid;
}

} // namespace

Mat tensor_transport_right(const TensorSpace& dst, const Mat& f, const TensorSpace& src) {
    std::vector<Mat> bn, bm;
    std::uint32_t p = src.p;
    for (std::size_t e = 0; e < src.en.size(); ++e) {
        bn.push_back(dst.qn[e] * (f * src.en[e]));
        bm.push_back(src.em[e].cols == dst.em[e].cols ? Mat::identity(p, src.em[e].cols)
                                                      : throw InternalError("tensor transport: left factors differ"));
    }
    return graded_sandwich(dst, src, bn, bm);
}

Mat tensor_transport_left(const TensorSpace& dst, const Mat& g, const TensorSpace& src) {
    std::vector<Mat> bn, bm;
    std::uint32_t p = src.p;
    for (std::size_t e = 0; e < src.en.size(); ++e) {
        if (src.en[e].cols != dst.en[e].cols)
            throw InternalError("tensor transport: right factors differ");
        bn.push_back(Mat::identity(p, src.en[e].cols));
        bm.push_back(dst.qm[e] * (g * src.em[e]));
    }
    return graded_sandwich(dst, src, bn, bm);
}

Mat tensor_aux_right(const TensorSpace& t, const Mat& op) {
    return tensor_transport_right(t, op, t);
}

Mat tensor_aux_left(const TensorSpace& t, const Mat& op) {
    return tensor_transport_left(t, op, t);
}

} // namespace udom
