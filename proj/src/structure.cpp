#include "udom/structure.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>

#include "udom/errors.hpp"

namespace udom {

namespace {

/* ---------- polynomials over F_p: coefficients low-to-high, {} is zero ---- */

using Poly = std::vector<std::uint32_t>;

void ptrim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

std::size_t pdeg(const Poly& f) { return f.size() - 1; } // nonzero input only

Poly psub(const Poly& a, const Poly& b, Fp F) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = F.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    ptrim(r);
    return r;
}

Poly pscale(const Poly& a, std::uint32_t c, Fp F) {
    Poly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.mul(a[i], c);
    ptrim(r);
    return r;
}

Poly pmul(const Poly& a, const Poly& b, Fp F) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    }
    ptrim(r);
    return r;
}

Poly pmonic(Poly f, Fp F) {
    ptrim(f);
    if (f.empty() || f.back() == 1) return f;
    return pscale(f, F.inv(f.back()), F);
}

std::pair<Poly, Poly> pdivmod(Poly a, const Poly& b, Fp F) {
    if (b.empty()) throw InternalError("polynomial division by zero");
    ptrim(a);
    Poly q;
    std::uint32_t linv = F.inv(b.back());
    while (a.size() >= b.size()) {
        std::uint32_t c = F.mul(a.back(), linv);
        std::size_t shift = a.size() - b.size();
        if (q.size() < shift + 1) q.resize(shift + 1, 0);
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] = F.sub(a[shift + i], F.mul(c, b[i]));
        ptrim(a);
        if (a.empty()) break;
    }
    ptrim(q);
    return {q, a};
}

Poly pmod(const Poly& a, const Poly& b, Fp F) { return pdivmod(a, b, F).second; }

Poly pgcd(Poly a, Poly b, Fp F) {
    ptrim(a); ptrim(b);
    while (!b.empty()) {
        Poly r = pmod(a, b, F);
        a = std::move(b);
        b = std::move(r);
    }
    return pmonic(a, F);
}

Poly pmulmod(const Poly& a, const Poly& b, const Poly& m, Fp F) {
    return pmod(pmul(a, b, F), m, F);
}

Poly ppowmod(Poly base, std::uint64_t e, const Poly& m, Fp F) {
    Poly r{1};
    base = pmod(base, m, F);
    while (e) {
        if (e & 1) r = pmulmod(r, base, m, F);
        base = pmulmod(base, base, m, F);
        e >>= 1;
    }
    return r;
}

Poly ppow(Poly base, std::size_t e, Fp F) {
    Poly r{1};
    while (e) {
        if (e & 1) r = pmul(r, base, F);
        base = pmul(base, base, F);
        e >>= 1;
    }
    return r;
}

Poly pderiv(const Poly& f, Fp F) {
    if (f.size() <= 1) return {};
    Poly r(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i)
        r[i - 1] = F.mul(f[i], static_cast<std::uint32_t>(i % F.p()));
    ptrim(r);
    return r;
}

/* Inverse of a modulo m (coprime), by the extended Euclidean algorithm. */
Poly pinvmod(const Poly& a, const Poly& m, Fp F) {
    Poly r0 = m, r1 = pmod(a, m, F);
    Poly t0, t1{1};
    while (!r1.empty()) {
        auto [q, r2] = pdivmod(r0, r1, F);
        Poly t2 = psub(t0, pmul(q, t1, F), F);
        r0 = std::move(r1); r1 = std::move(r2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (r0.size() != 1) throw InternalError("polynomial inverse of non-coprime input");
    return pscale(t0, F.inv(r0[0]), F);
}

struct PFactor {
    Poly f;
    std::size_t mult = 1;
};

std::vector<Poly> split_equal_degree(Poly g, std::size_t d, Fp F, std::mt19937_64& rng);

/* Distinct-degree stage on a squarefree monic input. */
std::vector<Poly> split_squarefree(Poly f, Fp F, std::mt19937_64& rng) {
    std::vector<Poly> out;
    f = pmonic(f, F);
    if (f.size() <= 1) return out;
    Poly h{0, 1}; // x
    h = pmod(h, f, F);
    std::size_t d = 0;
    while (f.size() - 1 >= 2 * (d + 1)) {
        ++d;
        h = ppowmod(h, F.p(), f, F);
        Poly g = pgcd(psub(h, Poly{0, 1}, F), f, F);
        if (g.size() > 1) {
            for (Poly& q : split_equal_degree(g, d, F, rng)) out.push_back(std::move(q));
            f = pdivmod(f, g, F).first;
            h = pmod(h, f, F);
        }
    }
    if (f.size() > 1) out.push_back(f);
    return out;
}

/* g is a product of distinct irreducibles all of degree d. */
std::vector<Poly> split_equal_degree(Poly g, std::size_t d, Fp F, std::mt19937_64& rng) {
    g = pmonic(g, F);
    if (pdeg(g) == d) return {g};
    std::uint32_t p = F.p();

    if (p <= 13) {
        // Deterministic trial division over all monic polynomials of degree d.
        double count = 1;
        for (std::size_t i = 0; i < d && count < 2e6; ++i) count *= p;
        if (count >= 2e6) throw InternalError("equal-degree split out of range for small p");
        std::vector<Poly> out;
        std::vector<std::uint32_t> digits(d, 0);
        while (pdeg(g) > d) {
            Poly q(d + 1, 0);
            q[d] = 1;
            for (std::size_t i = 0; i < d; ++i) q[i] = digits[i];
            if (pmod(g, q, F).empty()) {
                out.push_back(q);
                g = pdivmod(g, q, F).first;
                continue; // same candidate may divide the rest? squarefree: no, but harmless
            }
            std::size_t k = 0;
            while (k < d && digits[k] + 1 == p) { digits[k] = 0; ++k; }
            if (k == d) throw InternalError("equal-degree trial division exhausted");
            ++digits[k];
        }
        out.push_back(g);
        return out;
    }

    // Cantor-Zassenhaus for odd p: exponent (p^d - 1) / 2.
    unsigned __int128 pd = 1;
    for (std::size_t i = 0; i < d; ++i) {
        pd *= p;
        if (pd > (unsigned __int128)1 << 62)
            throw InternalError("equal-degree split exponent out of range");
    }
    std::uint64_t E = static_cast<std::uint64_t>((pd - 1) / 2);
    std::uniform_int_distribution<std::uint32_t> pick(0, p - 1);
    for (int tries = 0; tries < 200; ++tries) {
        Poly r(pdeg(g), 0);
        for (auto& c : r) c = pick(rng);
        ptrim(r);
        if (r.empty()) continue;
        Poly u = pgcd(r, g, F);
        if (u.size() > 1 && pdeg(u) < pdeg(g)) {
            auto left = split_equal_degree(u, d, F, rng);
            auto right = split_equal_degree(pdivmod(g, u, F).first, d, F, rng);
            left.insert(left.end(), right.begin(), right.end());
            return left;
        }
        Poly b = ppowmod(r, E, g, F);
        u = pgcd(psub(b, Poly{1}, F), g, F);
        if (u.size() > 1 && pdeg(u) < pdeg(g)) {
            auto left = split_equal_degree(u, d, F, rng);
            auto right = split_equal_degree(pdivmod(g, u, F).first, d, F, rng);
            left.insert(left.end(), right.begin(), right.end());
            return left;
        }
    }
    throw InternalError("equal-degree splitting did not converge");
}

/* Full monic factorization into distinct irreducibles with multiplicities. */
std::vector<PFactor> factor_poly(Poly f, Fp F, std::mt19937_64& rng) {
    std::map<Poly, std::size_t> acc;
    struct Item { Poly f; std::size_t mult; };
    std::vector<Item> work{{pmonic(std::move(f), F), 1}};
    while (!work.empty()) {
        auto [g, mult] = std::move(work.back());
        work.pop_back();
        if (g.size() <= 1) continue;
        Poly gp = pderiv(g, F);
        if (gp.empty()) {
            // g = h(x^p) = h(x)^p over the prime field.
            Poly h((g.size() - 1) / F.p() + 1, 0);
            for (std::size_t i = 0; i < h.size(); ++i) h[i] = g[i * F.p()];
            work.push_back({std::move(h), mult * F.p()});
            continue;
        }
        Poly c = pgcd(g, gp, F);
        Poly w = pdivmod(g, c, F).first;
        std::size_t j = 1;
        while (w.size() > 1) {
            Poly y = pgcd(w, c, F);
            Poly z = pdivmod(w, y, F).first;
            if (z.size() > 1)
                for (Poly& q : split_squarefree(z, F, rng)) acc[q] += mult * j;
            c = pdivmod(c, y, F).first;
            w = std::move(y);
            ++j;
        }
        if (c.size() > 1) work.push_back({std::move(c), mult});
    }
    std::vector<PFactor> out;
    for (auto& [q, m] : acc) out.push_back({q, m});
    std::sort(out.begin(), out.end(), [](const PFactor& a, const PFactor& b) {
        if (a.f.size() != b.f.size()) return a.f.size() < b.f.size();
        return std::lexicographical_compare(a.f.rbegin(), a.f.rend(), b.f.rbegin(),
                                            b.f.rend());
    });
    return out;
}

} // namespace

/* ---------- characteristic polynomial via Hessenberg reduction ---------- */

std::vector<std::uint32_t> charpoly(const Mat& m) {
    if (m.rows != m.cols) throw InternalError("charpoly of non-square matrix");
    std::size_t n = m.rows;
    Fp F(m.p);
    Mat H = m;
    for (std::size_t col = 0; col + 2 < n; ++col) {
        std::size_t piv = n;
        for (std::size_t r = col + 1; r < n; ++r)
            if (H.at(r, col) != 0) { piv = r; break; }
        if (piv == n) continue;
        if (piv != col + 1) {
            for (std::size_t c = 0; c < n; ++c) std::swap(H.at(piv, c), H.at(col + 1, c));
            for (std::size_t r = 0; r < n; ++r) std::swap(H.at(r, piv), H.at(r, col + 1));
        }
        std::uint32_t pinv = F.inv(H.at(col + 1, col));
        for (std::size_t r = col + 2; r < n; ++r) {
            std::uint32_t f = F.mul(H.at(r, col), pinv);
            if (f == 0) continue;
            for (std::size_t c = 0; c < n; ++c)
                H.at(r, c) = F.sub(H.at(r, c), F.mul(f, H.at(col + 1, c)));
            for (std::size_t r2 = 0; r2 < n; ++r2)
                H.at(r2, col + 1) = F.add(H.at(r2, col + 1), F.mul(f, H.at(r2, r)));
        }
    }
    // Leading-principal-minor recurrence for an upper Hessenberg matrix.
    std::vector<Poly> P(n + 1);
    P[0] = {1};
    for (std::size_t k = 1; k <= n; ++k) {
        Poly t = pmul(P[k - 1], Poly{F.neg(H.at(k - 1, k - 1)), 1}, F);
        std::uint32_t prodsub = 1;
        for (std::size_t i = 1; i < k; ++i) {
            prodsub = F.mul(prodsub, H.at(k - i, k - i - 1));
            if (prodsub == 0) break;
            std::uint32_t coeff = F.mul(H.at(k - 1 - i, k - 1), prodsub);
            if (coeff) t = psub(t, pscale(P[k - 1 - i], coeff, F), F);
        }
        P[k] = std::move(t);
    }
    Poly res = P[n];
    res.resize(n + 1, 0);
    return res;
}

/* ---------- radical ------------------------------------------------------ */

Mat radical_by_charpoly_chain(const Algebra& a) {
    std::size_t n = a.dim;
    std::uint32_t p = a.field.p();
    Fp F(p);
    Mat R = Mat::identity(p, n);
    for (std::uint64_t pk = 1; pk <= n; pk *= p) {
        std::size_t k = R.cols;
        if (k == 0) break;
        Mat C(p, k, k);
        for (std::size_t yi = 0; yi < k; ++yi) {
            for (std::size_t xj = 0; xj < k; ++xj) {
                Mat xy = a.left_mult_by(R.col(xj)) * R.col(yi);
                std::vector<std::uint32_t> cp = charpoly(a.left_mult_by(xy));
                C.at(yi, xj) = cp[n - pk];
            }
        }
        R = R * kernel_basis(C);
    }
    return column_space(R);
}

/* ---------- structure (idempotents, blocks) ------------------------------ */

namespace {

struct SemisimpleQuotient {
    std::size_t s = 0;
    Mat lift;  // n x s: S-coords -> A-coords (unit-vector complement of the radical)
    Mat proj;  // s x n: A-coords -> S-coords
    std::vector<Mat> lmult; // left multiplication tables of S
    Mat one;
    Fp F;

    explicit SemisimpleQuotient(Fp f) : F(f) {}

    Mat mult(const Mat& x, const Mat& y) const {
        Mat acc(F.p(), s, 1);
        for (std::size_t k = 0; k < s; ++k) {
            std::uint32_t c = x.at(k, 0);
            if (c == 0) continue;
            Mat t = lmult[k] * y;
            for (std::size_t r = 0; r < s; ++r)
                acc.a[r] = F.add(acc.a[r], F.mul(c, t.a[r]));
        }
        return acc;
    }

    Mat left_mat(const Mat& x) const {
        Mat L(F.p(), s, s);
        for (std::size_t k = 0; k < s; ++k) {
            std::uint32_t c = x.at(k, 0);
            if (c == 0) continue;
            for (std::size_t idx = 0; idx < L.a.size(); ++idx)
                L.a[idx] = F.add(L.a[idx], F.mul(c, lmult[k].a[idx]));
        }
        return L;
    }

    Mat right_mat(const Mat& x) const {
        Mat R(F.p(), s, s);
        for (std::size_t j = 0; j < s; ++j) {
            Mat col = lmult[j] * x; // b_j * x
            for (std::size_t r = 0; r < s; ++r) R.at(r, j) = col.at(r, 0);
        }
        return R;
    }
};

SemisimpleQuotient make_quotient(const Algebra& a, const Mat& radical) {
    std::uint32_t p = a.field.p();
    SemisimpleQuotient Q(a.field);
    Q.lift = complement_of_columns(radical, a.dim);
    Q.s = Q.lift.cols;
    Mat full = Mat::hstack({Q.lift, radical});
    Mat X = solve(full, Mat::identity(p, a.dim));
    Q.proj = X.block(0, 0, Q.s, a.dim);
    Q.lmult.resize(Q.s);
    for (std::size_t i = 0; i < Q.s; ++i)
        Q.lmult[i] = Q.proj * a.left_mult_by(Q.lift.col(i)) * Q.lift;
    Q.one = Q.proj * a.one;
    return Q;
}

Poly corner_minpoly(const SemisimpleQuotient& Q, const Mat& unit, const Mat& w) {
    std::vector<Mat> pows{unit};
    Mat cur = unit;
    for (;;) {
        cur = Q.mult(cur, w);
        Mat Mk = Mat::hstack(pows);
        if (auto sol = try_solve(Mk, cur)) {
            Poly mu(pows.size() + 1, 0);
            mu[pows.size()] = 1;
            for (std::size_t i = 0; i < pows.size(); ++i) mu[i] = Q.F.neg(sol->at(i, 0));
            return mu;
        }
        pows.push_back(cur);
        if (pows.size() > Q.s + 1) throw InternalError("minimal polynomial did not close");
    }
}

Mat corner_eval(const SemisimpleQuotient& Q, const Poly& h, const Mat& unit, const Mat& w) {
    Mat acc(Q.F.p(), Q.s, 1);
    for (std::size_t k = h.size(); k-- > 0;) {
        acc = Q.mult(acc, w);
        if (h[k]) {
            for (std::size_t r = 0; r < Q.s; ++r)
                acc.a[r] = Q.F.add(acc.a[r], Q.F.mul(h[k], unit.a[r]));
        }
    }
    return acc;
}

/* Splits the identity of the semisimple quotient into primitive orthogonal
 * idempotents by refining corners along minimal-polynomial CRT idempotents.
 * Certifies non-split corners (field extensions of the prime field). */
std::vector<Mat> primitive_idempotents(const SemisimpleQuotient& Q) {
    std::mt19937_64 rng(0x7374727563743173ULL);
    std::uniform_int_distribution<std::uint32_t> pick(0, Q.F.p() - 1);
    std::vector<Mat> done;
    std::vector<Mat> work{Q.one};
    while (!work.empty()) {
        Mat e = work.back();
        work.pop_back();
        Mat B = column_space(Q.left_mat(e) * Q.right_mat(e));
        std::size_t k = B.cols;
        if (k == 0) throw InternalError("zero idempotent in splitting");
        if (k == 1) { done.push_back(std::move(e)); continue; }

        std::vector<Mat> cands;
        for (std::size_t j = 0; j < k; ++j) cands.push_back(B.col(j));
        double total = 1;
        for (std::size_t j = 0; j < k && total <= 4097; ++j) total *= Q.F.p();
        if (total <= 4096) {
            std::vector<std::uint32_t> digits(k, 0);
            for (;;) {
                std::size_t t = 0;
                while (t < k && digits[t] + 1 == Q.F.p()) { digits[t] = 0; ++t; }
                if (t == k) break;
                ++digits[t];
                Mat c(Q.F.p(), k, 1);
                for (std::size_t j = 0; j < k; ++j) c.at(j, 0) = digits[j];
                cands.push_back(B * c);
            }
        } else {
            for (int t = 0; t < 160; ++t) {
                Mat c(Q.F.p(), k, 1);
                for (std::size_t j = 0; j < k; ++j) c.at(j, 0) = pick(rng);
                cands.push_back(B * c);
            }
        }

        bool split = false;
        for (const Mat& w : cands) {
            Poly mu = corner_minpoly(Q, e, w);
            if (mu.size() <= 2) continue;
            std::vector<PFactor> factors = factor_poly(mu, Q.F, rng);
            if (factors.size() == 1) {
                if (factors[0].mult == 1 && pdeg(factors[0].f) == k)
                    throw NoRadicalRuleError(
                        "simple block is a proper field extension of the prime field");
                continue;
            }
            for (const PFactor& fa : factors) {
                Poly qi = ppow(fa.f, fa.mult, Q.F);
                Poly mi = pdivmod(mu, qi, Q.F).first;
                Poly inv = pinvmod(mi, qi, Q.F);
                Poly hi = pmod(pmul(mi, inv, Q.F), mu, Q.F);
                work.push_back(corner_eval(Q, hi, e, w));
            }
            split = true;
            break;
        }
        if (!split)
            throw NoRadicalRuleError("unable to split a corner into primitive idempotents");
    }
    std::reverse(done.begin(), done.end()); // stack order back to discovery order
    return done;
}

/* Newton iteration towards an exact idempotent from one modulo the radical. */
Mat lift_idempotent(const Algebra& a, Mat x) {
    std::uint32_t three = a.field.reduce(3), two = a.field.reduce(2);
    for (int iter = 0; iter < 64; ++iter) {
        Mat x2 = a.left_mult_by(x) * x;
        if (x2 == x) return x;
        Mat x3 = a.left_mult_by(x2) * x;
        x = x2.scaled(three) - x3.scaled(two);
    }
    throw InternalError("idempotent lifting did not converge");
}

std::vector<std::size_t> group_blocks(const SemisimpleQuotient& Q,
                                      const std::vector<Mat>& idemS) {
    std::size_t m = idemS.size();
    // Same block iff f_i S f_j != 0 (within the semisimple quotient).
    std::vector<std::vector<bool>> linked(m, std::vector<bool>(m, false));
    for (std::size_t i = 0; i < m; ++i) {
        Mat Li = Q.left_mat(idemS[i]);
        for (std::size_t j = 0; j < m; ++j)
            linked[i][j] = rank(Li * Q.right_mat(idemS[j])) > 0;
    }
    std::vector<std::size_t> blk(m, SIZE_MAX);
    std::size_t next = 0;
    for (std::size_t i = 0; i < m; ++i) {
        if (blk[i] != SIZE_MAX) continue;
        std::vector<std::size_t> stack{i};
        blk[i] = next;
        while (!stack.empty()) {
            std::size_t c = stack.back();
            stack.pop_back();
            for (std::size_t j = 0; j < m; ++j)
                if (blk[j] == SIZE_MAX && (linked[c][j] || linked[j][c])) {
                    blk[j] = next;
                    stack.push_back(j);
                }
        }
        ++next;
    }
    return blk;
}

Mat radical_square_complement(const Algebra& a, const Mat& radical) {
    std::uint32_t p = a.field.p();
    if (radical.cols == 0) return Mat(p, a.dim, 0);
    std::vector<Mat> parts;
    for (std::size_t i = 0; i < radical.cols; ++i)
        parts.push_back(a.left_mult_by(radical.col(i)) * radical);
    Mat rad2 = column_space(Mat::hstack(parts));
    // Columns of the radical that add new pivots beyond rad^2.
    Rref rr = rref(Mat::hstack({rad2, radical}));
    std::vector<Mat> found;
    for (std::size_t piv : rr.pivots)
        if (piv >= rad2.cols) found.push_back(radical.col(piv - rad2.cols));
    return found.empty() ? Mat(p, a.dim, 0) : Mat::hstack(found);
}

bool spans_by_products(const Algebra& a, const Mat& gens) {
    Mat span = column_space(Mat::hstack({a.one, gens}));
    for (;;) {
        std::vector<Mat> parts{span};
        for (std::size_t g = 0; g < gens.cols; ++g)
            parts.push_back(a.right_mult_by(gens.col(g)) * span);
        Mat bigger = column_space(Mat::hstack(parts));
        if (bigger.cols == span.cols) return span.cols == a.dim;
        span = std::move(bigger);
    }
}

AlgebraStructure build_structure(const AlgebraPtr& aptr) {
    const Algebra& a = *aptr;
    std::uint32_t p = a.field.p();
    AlgebraStructure st;

    std::vector<Mat> prim;
    if (a.quiver) {
        const QuiverData& qd = *a.quiver;
        std::vector<Mat> radcols;
        for (std::size_t i = 0; i < a.dim; ++i)
            if (!qd.paths[i].arrows.empty())
                radcols.push_back(Mat::unit_column(p, a.dim, i));
        st.radical = radcols.empty() ? Mat(p, a.dim, 0) : Mat::hstack(radcols);
        for (std::size_t v = 0; v < qd.e.size(); ++v) {
            prim.push_back(Mat::unit_column(p, a.dim, qd.e[v]));
            st.idem_block.push_back(v); // one block per vertex, multiplicity one
        }
        st.small_gens = a.gens;
    } else {
        st.radical = radical_by_charpoly_chain(a);
        SemisimpleQuotient Q = make_quotient(a, st.radical);
        std::vector<Mat> primS = primitive_idempotents(Q);

        // Lift to exact orthogonal idempotents of the algebra, one at a time,
        // conjugating each into the corner orthogonal to the previous ones.
        Mat ssum(p, a.dim, 1);
        for (std::size_t k = 0; k < primS.size(); ++k) {
            Mat x = Q.lift * primS[k];
            Mat oneMs = a.one - ssum;
            Mat y = a.right_mult_by(oneMs) * (a.left_mult_by(oneMs) * x);
            Mat e = lift_idempotent(a, y);
            prim.push_back(e);
            ssum = ssum + e;
        }
        if (!(ssum == a.one))
            throw InternalError("orthogonal idempotents do not sum to the identity");

        std::vector<Mat> idemS;
        for (const Mat& e : prim) idemS.push_back(Q.proj * e);
        st.idem_block = group_blocks(Q, idemS);

        std::size_t check = 0;
        std::size_t nblocks = *std::max_element(st.idem_block.begin(), st.idem_block.end()) + 1;
        std::vector<std::size_t> mult(nblocks, 0);
        for (std::size_t b : st.idem_block) ++mult[b];
        for (std::size_t b = 0; b < nblocks; ++b) check += mult[b] * mult[b];
        if (check != Q.s)
            throw NoRadicalRuleError("semisimple quotient is not split over the prime field");

        // Compact generating set: idempotents, radical generators, and one
        // pair of cross elements linking consecutive idempotents of each
        // non-basic block.
        std::vector<Mat> gcols = prim;
        Mat radgens = radical_square_complement(a, st.radical);
        for (std::size_t i = 0; i < radgens.cols; ++i) gcols.push_back(radgens.col(i));
        for (std::size_t b = 0; b < nblocks; ++b) {
            std::vector<std::size_t> members;
            for (std::size_t i = 0; i < prim.size(); ++i)
                if (st.idem_block[i] == b) members.push_back(i);
            for (std::size_t t = 0; t + 1 < members.size(); ++t) {
                std::size_t i = members[t], j = members[t + 1];
                Mat cij = column_space(Q.left_mat(idemS[i]) * Q.right_mat(idemS[j]));
                Mat cji = column_space(Q.left_mat(idemS[j]) * Q.right_mat(idemS[i]));
                if (cij.cols != 1 || cji.cols != 1)
                    throw InternalError("unexpected corner dimension between idempotents");
                Mat xb = cij.col(0);
                Mat y0 = cji.col(0);
                Mat z = Q.mult(xb, y0); // scalar multiple of idemS[i]
                Mat c = solve(idemS[i], z); // 1 x 1
                Mat yb = y0.scaled(a.field.inv(c.at(0, 0)));
                auto sandwich = [&](const Mat& sc, std::size_t fi, std::size_t fj) {
                    Mat lifted = Q.lift * sc;
                    return a.right_mult_by(prim[fj]) * (a.left_mult_by(prim[fi]) * lifted);
                };
                gcols.push_back(sandwich(xb, i, j));
                gcols.push_back(sandwich(yb, j, i));
            }
        }
        st.small_gens = Mat::hstack(gcols);
        if (!spans_by_products(a, st.small_gens)) {
            // Defensive fallback: keep the idempotent prefix, append the
            // whole basis.
            std::vector<Mat> cols = prim;
            for (std::size_t i = 0; i < a.dim; ++i)
                cols.push_back(Mat::unit_column(p, a.dim, i));
            st.small_gens = Mat::hstack(cols);
        }
    }
    st.complete_idem = prim;

    // Uniform block data from the complete idempotent list.
    std::size_t nblocks = st.idem_block.empty()
                              ? 0
                              : *std::max_element(st.idem_block.begin(), st.idem_block.end()) + 1;
    FdModule reg = regular_module(aptr);
    AlgebraPtr op = opposite(aptr);
    FdModule regop = regular_module(op);
    for (std::size_t b = 0; b < nblocks; ++b) {
        std::size_t first = SIZE_MAX, mult = 0;
        for (std::size_t i = 0; i < prim.size(); ++i)
            if (st.idem_block[i] == b) {
                if (first == SIZE_MAX) first = i;
                ++mult;
            }
        BlockData bd;
        bd.idem = prim[first];
        bd.mult = mult;
        bd.proj_basis = column_space(a.right_mult_by(bd.idem));
        SubQuotient projsq = sub_on_basis(reg, bd.proj_basis);
        bd.proj = projsq.mod;
        bd.proj_gen = solve(bd.proj_basis, bd.idem);

        // Simple top: quotient of the projective by radical * projective.
        std::vector<Mat> radparts;
        for (std::size_t k = 0; k < st.radical.cols; ++k) {
            Mat rc = solve(bd.proj_basis,
                           a.left_mult_by(st.radical.col(k)) * bd.proj_basis);
            radparts.push_back(std::move(rc));
        }
        Mat radP = radparts.empty() ? Mat(p, bd.proj.dim, 0)
                                    : column_space(Mat::hstack(radparts));
        bd.simple = quotient_by(bd.proj, radP).mod;

        bd.inj_basis = column_space(a.left_mult_by(bd.idem));
        FdModule fa_right = sub_on_basis(regop, bd.inj_basis).mod;
        bd.inj = k_dual(fa_right);
        st.blocks.push_back(std::move(bd));
    }
    return st;
}

} // namespace

const AlgebraStructure& structure_of(const AlgebraPtr& a) {
    if (!a->structure_cache)
        a->structure_cache = std::make_shared<const AlgebraStructure>(build_structure(a));
    return *a->structure_cache;
}

std::size_t block_count(const AlgebraPtr& a) { return structure_of(a).blocks.size(); }

FdModule simple_module(const AlgebraPtr& a, std::size_t block) {
    return structure_of(a).blocks.at(block).simple;
}

FdModule indec_projective(const AlgebraPtr& a, std::size_t block) {
    return structure_of(a).blocks.at(block).proj;
}

FdModule indec_injective(const AlgebraPtr& a, std::size_t block) {
    return structure_of(a).blocks.at(block).inj;
}

} // namespace udom
