#include "udom/algebra.hpp"

#include <algorithm>
#include <map>

#include "udom/errors.hpp"

namespace udom {

std::size_t Quiver::vertex_index(const std::string& name) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == name) return i;
    throw InputError("unknown vertex '" + name + "'");
}

std::size_t Quiver::arrow_index(const std::string& name) const {
    for (std::size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].name == name) return i;
    throw InputError("unknown arrow '" + name + "'");
}

std::string Path::label(const Quiver& q) const {
    if (arrows.empty()) return "e" + q.vertices[source];
    std::string s;
    for (std::size_t k = 0; k < arrows.size(); ++k) {
        if (k) s += "*";
        s += q.arrows[arrows[k]].name;
    }
    return s;
}

Mat Algebra::left_mult_by(const Mat& x) const {
    Mat m(field.p(), dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        std::uint32_t c = x.at(i, 0);
        if (!c) continue;
        m = m + left_mult[i].scaled(c);
    }
    return m;
}

Mat Algebra::right_mult_by(const Mat& x) const {
    Mat m(field.p(), dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
        Mat bj_x = left_mult[j] * x; // coords of b_j * x
        for (std::size_t i = 0; i < dim; ++i) m.at(i, j) = bj_x.at(i, 0);
    }
    return m;
}

bool Algebra::is_idempotent(const Mat& x) const { return left_mult_by(x) * x == x; }

namespace {

bool ends_with(const std::vector<std::size_t>& word, const std::vector<std::size_t>& tail) {
    if (word.size() < tail.size()) return false;
    return std::equal(tail.begin(), tail.end(), word.end() - tail.size());
}

bool has_relation_factor(const std::vector<std::size_t>& word,
                         const std::vector<std::vector<std::size_t>>& relations) {
    for (const auto& r : relations) {
        if (r.size() > word.size()) continue;
        for (std::size_t off = 0; off + r.size() <= word.size(); ++off) {
            if (std::equal(r.begin(), r.end(), word.begin() + off)) return true;
        }
    }
    return false;
}

void validate_quiver(const Quiver& q) {
    for (std::size_t i = 0; i < q.vertices.size(); ++i)
        for (std::size_t j = i + 1; j < q.vertices.size(); ++j)
            if (q.vertices[i] == q.vertices[j])
                throw InputError("duplicate vertex name '" + q.vertices[i] + "'");
    for (const auto& a : q.arrows) {
        if (a.src >= q.vertices.size() || a.tgt >= q.vertices.size())
            throw InputError("arrow '" + a.name + "' references a missing vertex");
    }
    for (std::size_t i = 0; i < q.arrows.size(); ++i)
        for (std::size_t j = i + 1; j < q.arrows.size(); ++j)
            if (q.arrows[i].name == q.arrows[j].name)
                throw InputError("duplicate arrow name '" + q.arrows[i].name + "'");
}

std::string word_text(const Quiver& q, const std::vector<std::size_t>& w) {
    Path p;
    p.source = w.empty() ? 0 : q.arrows[w.front()].src;
    p.arrows = w;
    return p.label(q);
}

} // namespace

AlgebraPtr path_algebra(const Quiver& q, const std::vector<std::vector<std::size_t>>& relations,
                        std::uint32_t p, std::size_t length_bound) {
    Fp field(p);
    validate_quiver(q);
    for (const auto& r : relations) {
        if (r.size() < 2)
            throw InvalidRelationError("relation '" + word_text(q, r) +
                                       "' is shorter than two arrows");
        for (std::size_t a : r)
            if (a >= q.arrows.size()) throw InvalidRelationError("relation uses a missing arrow");
        for (std::size_t k = 0; k + 1 < r.size(); ++k) {
            if (q.arrows[r[k]].tgt != q.arrows[r[k + 1]].src)
                throw InvalidRelationError("relation '" + word_text(q, r) +
                                           "' is not a composable path");
        }
    }

    // Enumerate surviving paths by length.  A word survives iff it contains
    // no relation word as a consecutive factor; since prefixes of survivors
    // survive, it is enough to test factors ending at the appended arrow.
    std::vector<Path> paths;
    for (std::size_t v = 0; v < q.vertices.size(); ++v) paths.push_back({v, {}});
    std::vector<Path> frontier = paths;
    std::size_t length = 0;
    while (!frontier.empty()) {
        ++length;
        if (length > length_bound) {
            throw NotAdmissibleError("paths survive beyond length bound " +
                                     std::to_string(length_bound) +
                                     "; relation ideal is not admissible");
        }
        std::vector<Path> next;
        for (const auto& path : frontier) {
            for (std::size_t ai = 0; ai < q.arrows.size(); ++ai) {
                if (q.arrows[ai].src != path.target(q)) continue;
                Path ext{path.source, path.arrows};
                ext.arrows.push_back(ai);
                bool killed = false;
                for (const auto& r : relations) {
                    if (ends_with(ext.arrows, r)) {
                        killed = true;
                        break;
                    }
                }
                if (!killed) next.push_back(std::move(ext));
            }
        }
        for (const auto& path : next) paths.push_back(path);
        frontier = std::move(next);
    }

    auto alg = std::make_shared<Algebra>(field);
    alg->dim = paths.size();
    std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> index;
    for (std::size_t i = 0; i < paths.size(); ++i) {
        alg->basis_names.push_back(paths[i].label(q));
        index[{paths[i].source, paths[i].arrows}] = i;
    }

    alg->left_mult.assign(alg->dim, Mat(p, alg->dim, alg->dim));
    for (std::size_t i = 0; i < alg->dim; ++i) {
        for (std::size_t j = 0; j < alg->dim; ++j) {
            if (paths[i].target(q) != paths[j].source) continue;
            std::vector<std::size_t> w = paths[i].arrows;
            w.insert(w.end(), paths[j].arrows.begin(), paths[j].arrows.end());
            if (has_relation_factor(w, relations)) continue;
            auto it = index.find({paths[i].source, w});
            if (it == index.end()) throw InternalError("product path missing from basis");
            alg->left_mult[i].at(it->second, j) = 1;
        }
    }

    QuiverData qd;
    qd.quiver = q;
    qd.relations = relations;
    qd.paths = paths;
    for (std::size_t v = 0; v < q.vertices.size(); ++v) qd.e.push_back(v);
    for (std::size_t ai = 0; ai < q.arrows.size(); ++ai) {
        qd.arrow_basis.push_back(index.at({q.arrows[ai].src, {ai}}));
    }
    alg->quiver = std::move(qd);

    alg->one = Mat(p, alg->dim, 1);
    for (std::size_t v = 0; v < q.vertices.size(); ++v) alg->one.at(v, 0) = 1;

    std::vector<Mat> gen_cols;
    for (std::size_t v = 0; v < q.vertices.size(); ++v)
        gen_cols.push_back(Mat::unit_column(p, alg->dim, v));
    for (std::size_t b : alg->quiver->arrow_basis)
        gen_cols.push_back(Mat::unit_column(p, alg->dim, b));
    alg->gens = Mat::hstack(gen_cols);
    return alg;
}

AlgebraPtr opposite(const AlgebraPtr& a) {
    if (auto cached = a->opposite_cache.lock()) return cached;

    auto op = std::make_shared<Algebra>(a->field);
    const std::uint32_t p = a->field.p();
    op->dim = a->dim;
    op->one = a->one;
    op->gens = a->gens;
    for (std::size_t i = 0; i < a->dim; ++i) {
        op->left_mult.push_back(a->right_mult_by(Mat::unit_column(p, a->dim, i)));
    }
    if (a->quiver) {
        const QuiverData& qd = *a->quiver;
        QuiverData rd;
        rd.quiver.vertices = qd.quiver.vertices;
        for (const auto& ar : qd.quiver.arrows)
            rd.quiver.arrows.push_back({ar.name, ar.tgt, ar.src});
        for (auto w : qd.relations) {
            std::reverse(w.begin(), w.end());
            rd.relations.push_back(std::move(w));
        }
        for (const auto& path : qd.paths) {
            Path rp;
            rp.source = path.target(qd.quiver);
            rp.arrows = path.arrows;
            std::reverse(rp.arrows.begin(), rp.arrows.end());
            rd.paths.push_back(std::move(rp));
        }
        rd.e = qd.e;
        rd.arrow_basis = qd.arrow_basis;
        for (const auto& path : rd.paths) op->basis_names.push_back(path.label(rd.quiver));
        op->quiver = std::move(rd);
    } else {
        op->basis_names = a->basis_names;
    }

    op->opposite_cache = a;
    a->opposite_cache = op;
    return op;
}

AlgebraPtr table_algebra(Fp field, std::vector<std::string> names, std::vector<Mat> left_mult,
                         Mat one, Mat gens) {
    auto alg = std::make_shared<Algebra>(field);
    alg->dim = names.size();
    alg->basis_names = std::move(names);
    alg->left_mult = std::move(left_mult);
    alg->one = std::move(one);
    alg->gens = std::move(gens);

    const std::size_t n = alg->dim;
    if (alg->left_mult.size() != n) throw InputError("multiplication table size mismatch");
    for (const auto& m : alg->left_mult)
        if (m.rows != n || m.cols != n || m.p != field.p())
            throw InputError("multiplication table entries have wrong shape");
    if (alg->one.rows != n || alg->one.cols != 1) throw InputError("identity has wrong shape");

    Mat id = Mat::identity(field.p(), n);
    if (alg->left_mult_by(alg->one) != id || alg->right_mult_by(alg->one) != id)
        throw InputError("claimed identity is not a two-sided unit");

    // Associativity of the table against every generator: L_{b_i} L_g = L_{b_i g}.
    for (std::size_t g = 0; g < alg->gens.cols; ++g) {
        Mat gc = alg->gens.col(g);
        Mat lg = alg->left_mult_by(gc);
        for (std::size_t i = 0; i < n; ++i) {
            Mat big = alg->left_mult[i] * gc;
            if (alg->left_mult[i] * lg != alg->left_mult_by(big))
                throw InputError("multiplication table is not associative on generators");
        }
    }

    // The generators together with 1 must span multiplicatively.
    Mat span = Mat::hstack({alg->one, alg->gens});
    std::size_t r = rank(span);
    for (;;) {
        std::vector<Mat> parts{span};
        for (std::size_t g = 0; g < alg->gens.cols; ++g)
            parts.push_back(alg->left_mult_by(alg->gens.col(g)) * span);
        Mat bigger = column_space(Mat::hstack(parts));
        if (bigger.cols == r) break;
        r = bigger.cols;
        span = bigger;
    }
    if (r != n) throw InputError("generators do not span the algebra");
    return alg;
}

} // namespace udom
