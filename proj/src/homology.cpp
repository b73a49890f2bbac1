#include "udom/homology.hpp"

#include <string>

#include "udom/errors.hpp"

namespace udom {

std::string DimReport::str() const {
    return is_lower_bound ? ">= " + std::to_string(value) : std::to_string(value);
}

namespace {

Mat flat_of(const Mat& m) {
    Mat v(m.p, m.rows * m.cols, 1);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) v.at(i * m.cols + j, 0) = m.at(i, j);
    return v;
}

/* Column k is the flattening of ms[k]; flat_rows covers the empty case. */
Mat flat_cols(const std::vector<Mat>& ms, std::uint32_t p, std::size_t flat_rows) {
    Mat b(p, flat_rows, ms.size());
    for (std::size_t k = 0; k < ms.size(); ++k)
        for (std::size_t i = 0; i < ms[k].rows; ++i)
            for (std::size_t j = 0; j < ms[k].cols; ++j)
                b.at(i * ms[k].cols + j, k) = ms[k].at(i, j);
    return b;
}

Mat combine(const std::vector<Mat>& basis, const Mat& coeffs, std::uint32_t p,
            std::size_t rows, std::size_t cols) {
    Mat out(p, rows, cols);
    for (std::size_t k = 0; k < basis.size(); ++k)
        if (coeffs.at(k, 0) != 0) out = out + basis[k].scaled(coeffs.at(k, 0));
    return out;
}

} // namespace

ProjCover projective_cover(const FdModule& m) {
    const AlgebraPtr& a = m.alg;
    const std::uint32_t p = a->field.p();
    const AlgebraStructure& st = structure_of(a);
    const std::size_t nb = st.blocks.size();

    std::vector<std::size_t> mults(nb, 0);
    std::vector<const FdModule*> parts;
    std::vector<Mat> pieces;
    if (m.dim > 0) {
        SubQuotient top = top_of(m);
        for (std::size_t t = 0; t < nb; ++t) {
            const BlockData& bl = st.blocks[t];
            Mat F = m.act_elem(bl.idem);
            std::vector<std::size_t> piv = rref(top.map * F).pivots;
            mults[t] = piv.size();
            for (std::size_t j : piv) {
                Mat v = F.col(j);
                Mat W(p, m.dim, a->dim); // column k: act[k] applied to the generator
                for (std::size_t k = 0; k < a->dim; ++k) {
                    Mat wk = m.act[k] * v;
                    for (std::size_t r = 0; r < m.dim; ++r) W.at(r, k) = wk.at(r, 0);
                }
                pieces.push_back(W * bl.proj_basis);
                parts.push_back(&bl.proj);
            }
        }
    }
    DirectSum ds = direct_sum(a, parts);
    Mat onto = pieces.empty() ? Mat(p, m.dim, 0) : Mat::hstack(pieces);
    if (rank(onto) != m.dim) throw InternalError("projective cover is not surjective");
    return {ds.mod, ModuleMap(ds.mod, m, onto), mults};
}

InjEnvelope injective_envelope(const FdModule& m) {
    const AlgebraPtr& a = m.alg;
    const std::uint32_t p = a->field.p();
    const AlgebraStructure& st = structure_of(a);
    const std::size_t nb = st.blocks.size();

    std::vector<std::size_t> mults(nb, 0);
    if (m.dim == 0) {
        FdModule z = zero_module(a);
        return {z, ModuleMap(m, z, Mat(p, 0, 0)), mults};
    }

    SubQuotient soc = socle_of(m);
    std::vector<const FdModule*> parts;
    std::vector<Mat> srcs;        // per copy: a map simple -> m with image in the socle
    std::vector<std::size_t> cblock;
    std::vector<Mat> iota(nb);    // per block: the socle embedding simple -> injective
    for (std::size_t t = 0; t < nb; ++t) {
        const BlockData& bl = st.blocks[t];
        Mat FS = m.act_elem(bl.idem) * soc.map;
        std::vector<std::size_t> piv = rref(FS).pivots;
        if (piv.empty()) continue;
        std::vector<Mat> hb = hom_basis(bl.simple, bl.inj);
        if (hb.size() != 1) throw InternalError("indecomposable injective without simple socle");
        iota[t] = hb[0];
        mults[t] = piv.size();
        for (std::size_t j : piv) {
            SubQuotient sub = submodule_spanned(m, FS.col(j));
            if (sub.mod.dim != bl.simple.dim)
                throw InternalError("socle generator did not span a simple submodule");
            std::vector<Mat> h = hom_basis(bl.simple, sub.mod);
            if (h.size() != 1) throw InternalError("socle component is not simple");
            srcs.push_back(sub.map * h[0]);
            cblock.push_back(t);
            parts.push_back(&bl.inj);
        }
    }
    DirectSum ds = direct_sum(a, parts);

    /* Extend the socle isomorphism to all of m through the injectivity of the
     * target: solve for φ with φ·Φ = T where Φ collects the simple socle
     * components inside m and T the fixed socle embeddings of the summands. */
    std::vector<Mat> phiParts, tParts;
    for (std::size_t c = 0; c < srcs.size(); ++c) {
        phiParts.push_back(srcs[c]);
        Mat tc(p, ds.mod.dim, srcs[c].cols);
        const Mat& io = iota[cblock[c]];
        for (std::size_t i = 0; i < io.rows; ++i)
            for (std::size_t j = 0; j < io.cols; ++j)
                tc.at(ds.offsets[c] + i, j) = io.at(i, j);
        tParts.push_back(tc);
    }
    Mat Phi = phiParts.empty() ? Mat(p, m.dim, 0) : Mat::hstack(phiParts);
    Mat T = tParts.empty() ? Mat(p, ds.mod.dim, 0) : Mat::hstack(tParts);
    std::vector<Mat> H = hom_basis(m, ds.mod);
    std::vector<Mat> constrained;
    constrained.reserve(H.size());
    for (const Mat& h : H) constrained.push_back(h * Phi);
    Mat B = flat_cols(constrained, p, ds.mod.dim * Phi.cols);
    Mat c = solve(B, flat_of(T));
    Mat phi = combine(H, c, p, ds.mod.dim, m.dim);
    if (rank(phi) != m.dim) throw InternalError("envelope embedding is not injective");
    return {ds.mod, ModuleMap(m, ds.mod, phi), mults};
}

Resolution min_proj_resolution(const FdModule& m, std::size_t n) {
    Resolution r;
    r.kind = ResKind::Projective;
    r.base = m;
    r.length_computed = n;
    FdModule cur = m;
    Mat incl; // inclusion of the current syzygy into the previous term
    for (std::size_t k = 0; k <= n; ++k) {
        ProjCover c = projective_cover(cur);
        r.terms.push_back(c.proj);
        r.mults.push_back(c.mults);
        if (k == 0)
            r.augmentation = c.onto.mat;
        else
            r.differentials.emplace_back(c.proj, r.terms[k - 1], incl * c.onto.mat);
        SubQuotient ker = kernel_of(c.proj, cur, c.onto.mat);
        if (ker.mod.dim == 0) r.terminated = true;
        cur = ker.mod;
        incl = ker.map;
    }
    return r;
}

Resolution min_inj_resolution(const FdModule& m, std::size_t n) {
    Resolution r;
    r.kind = ResKind::Injective;
    r.base = m;
    r.length_computed = n;
    FdModule cur = m;
    Mat proj; // projection of the previous term onto the current cosyzygy
    for (std::size_t k = 0; k <= n; ++k) {
        InjEnvelope e = injective_envelope(cur);
        r.terms.push_back(e.env);
        r.mults.push_back(e.mults);
        if (k == 0)
            r.augmentation = e.into.mat;
        else
            r.differentials.emplace_back(r.terms[k - 1], e.env, e.into.mat * proj);
        SubQuotient co = cokernel_of(cur, e.env, e.into.mat);
        if (co.mod.dim == 0) r.terminated = true;
        cur = co.mod;
        proj = co.map;
    }
    return r;
}

bool is_exact_resolution(const Resolution& r) {
    std::size_t aug_rank = rank(r.augmentation);
    if (aug_rank != r.base.dim) return false; // surjective / injective augmentation
    for (std::size_t k = 0; k < r.differentials.size(); ++k) {
        const Mat& d = r.differentials[k].mat;
        Mat prev = k == 0 ? r.augmentation : r.differentials[k - 1].mat;
        Mat comp = r.kind == ResKind::Projective ? prev * d : d * prev;
        if (!comp.is_zero()) return false;
        if (rank(d) != r.terms[k].dim - rank(prev)) return false;
    }
    return true;
}

bool is_projective(const FdModule& m) {
    ProjCover c = projective_cover(m);
    return rank(c.onto.mat) == c.proj.dim;
}

bool is_injective(const FdModule& m) {
    return injective_envelope(m).env.dim == m.dim;
}

DimReport projective_dimension(const FdModule& m, std::size_t bound) {
    FdModule cur = m;
    for (std::size_t d = 0; d <= bound; ++d) {
        ProjCover c = projective_cover(cur);
        SubQuotient ker = kernel_of(c.proj, cur, c.onto.mat);
        if (ker.mod.dim == 0) return {d, false, bound};
        cur = ker.mod;
    }
    return {bound + 1, true, bound};
}

namespace {

/* Hom(P_•, n) in coordinates: hb[k] is the deterministic basis of
 * Hom(terms[k], n) and delta[k] the matrix of precomposition with the next
 * differential, Hom(terms[k], n) -> Hom(terms[k+1], n). */
struct HomChain {
    std::vector<std::vector<Mat>> hb;
    std::vector<Mat> delta;
};

HomChain hom_chain(const Resolution& res, const FdModule& n, std::size_t kmax) {
    HomChain hc;
    const std::uint32_t p = n.alg->field.p();
    for (std::size_t k = 0; k <= kmax; ++k) hc.hb.push_back(hom_basis(res.terms[k], n));
    for (std::size_t k = 0; k < kmax; ++k) {
        const Mat& d = res.differentials[k].mat;
        const auto& src = hc.hb[k];
        const auto& dst = hc.hb[k + 1];
        std::size_t flat_rows = n.dim * res.terms[k + 1].dim;
        std::vector<Mat> tgts;
        tgts.reserve(src.size());
        for (const Mat& f : src) tgts.push_back(f * d);
        if (dst.empty())
            hc.delta.push_back(Mat(p, 0, src.size()));
        else
            hc.delta.push_back(solve(flat_cols(dst, p, flat_rows), flat_cols(tgts, p, flat_rows)));
    }
    return hc;
}

} // namespace

std::vector<std::size_t> ext_dims(const FdModule& m, const FdModule& n, std::size_t i_max) {
    Resolution res = min_proj_resolution(m, i_max + 1);
    HomChain hc = hom_chain(res, n, i_max + 1);
    std::vector<std::size_t> out(i_max + 1);
    for (std::size_t i = 0; i <= i_max; ++i) {
        std::size_t ker = hc.hb[i].size() - rank(hc.delta[i]);
        std::size_t img = i == 0 ? 0 : rank(hc.delta[i - 1]);
        out[i] = ker - img;
    }
    return out;
}

FdModule hom_module(const FdModule& m, const FdModule& n, const AlgebraPtr& aux,
                    const std::vector<Mat>& aux_post) {
    const std::uint32_t p = n.alg->field.p();
    std::vector<Mat> H = hom_basis(m, n);
    if (H.empty()) return zero_module(aux);
    std::size_t flat_rows = n.dim * m.dim;
    Mat B = flat_cols(H, p, flat_rows);
    std::vector<Mat> acts;
    for (std::size_t b = 0; b < aux->dim; ++b) {
        std::vector<Mat> tr;
        tr.reserve(H.size());
        for (const Mat& h : H) tr.push_back(aux_post[b] * h);
        acts.push_back(solve(B, flat_cols(tr, p, flat_rows)));
    }
    return FdModule(aux, H.size(), acts, Validate::Generators);
}

FdModule hom_module_pre(const FdModule& m, const FdModule& n, const AlgebraPtr& aux,
                        const std::vector<Mat>& aux_pre) {
    const std::uint32_t p = n.alg->field.p();
    std::vector<Mat> H = hom_basis(m, n);
    if (H.empty()) return zero_module(aux);
    std::size_t flat_rows = n.dim * m.dim;
    Mat B = flat_cols(H, p, flat_rows);
    std::vector<Mat> acts;
    for (std::size_t b = 0; b < aux->dim; ++b) {
        std::vector<Mat> tr;
        tr.reserve(H.size());
        for (const Mat& h : H) tr.push_back(h * aux_pre[b]);
        acts.push_back(solve(B, flat_cols(tr, p, flat_rows)));
    }
    return FdModule(aux, H.size(), acts, Validate::Generators);
}

FdModule ext_module(const FdModule& m, const FdModule& n, std::size_t i,
                    const AlgebraPtr& aux, const std::vector<Mat>& aux_post) {
    const std::uint32_t p = n.alg->field.p();
    Resolution res = min_proj_resolution(m, i + 1);
    HomChain hc = hom_chain(res, n, i + 1);
    Mat K = kernel_basis(hc.delta[i]);
    if (K.cols == 0) return zero_module(aux);
    Mat S2 = i == 0 ? Mat(p, K.cols, 0) : solve(K, column_space(hc.delta[i - 1]));
    Mat B2 = column_space(S2);
    Mat Cq = complement_of_columns(B2, K.cols);
    if (Cq.cols == 0) return zero_module(aux);
    Mat X = solve(Mat::hstack({B2, Cq}), Mat::identity(p, K.cols));
    Mat projq = X.block(B2.cols, 0, Cq.cols, K.cols);

    const std::vector<Mat>& hb = hc.hb[i];
    std::size_t flat_rows = n.dim * res.terms[i].dim;
    Mat B = flat_cols(hb, p, flat_rows);
    Mat rep = K * Cq; // hom-space coordinates of the chosen representatives
    std::vector<Mat> repPhi;
    for (std::size_t c = 0; c < rep.cols; ++c)
        repPhi.push_back(combine(hb, rep.col(c), p, n.dim, res.terms[i].dim));
    std::vector<Mat> acts;
    for (std::size_t b = 0; b < aux->dim; ++b) {
        std::vector<Mat> tr;
        tr.reserve(repPhi.size());
        for (const Mat& f : repPhi) tr.push_back(aux_post[b] * f);
        Mat co = solve(B, flat_cols(tr, p, flat_rows));
        acts.push_back(projq * solve(K, co)); // stability of the kernel is forced
    }
    return FdModule(aux, Cq.cols, acts, Validate::Generators);
}

std::vector<std::size_t> tor_dims(const FdModule& n_right, const FdModule& m_left,
                                  std::size_t i_max) {
    Resolution res = min_proj_resolution(n_right, i_max + 1);
    std::vector<TensorSpace> T;
    for (std::size_t k = 0; k <= i_max + 1; ++k) T.push_back(tensor_over(res.terms[k], m_left));
    std::vector<Mat> delta; // delta[k-1]: T[k] -> T[k-1]
    for (std::size_t k = 1; k <= i_max + 1; ++k)
        delta.push_back(tensor_transport_right(T[k - 1], res.differentials[k - 1].mat, T[k]));
    std::vector<std::size_t> out(i_max + 1);
    out[0] = T[0].dim - rank(delta[0]);
    for (std::size_t i = 1; i <= i_max; ++i)
        out[i] = T[i].dim - rank(delta[i - 1]) - rank(delta[i]);
    return out;
}

} // namespace udom
