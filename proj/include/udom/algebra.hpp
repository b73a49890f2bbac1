#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "udom/mat.hpp"

namespace udom {

struct Arrow {
    std::string name;
    std::size_t src = 0;
    std::size_t tgt = 0;
};

struct Quiver {
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;

    std::size_t vertex_index(const std::string& name) const;
    std::size_t arrow_index(const std::string& name) const;
};

/* A path in traversal order: starting vertex plus the arrows walked, first
 * arrow first.  The empty arrow word is the idempotent at `source`. */
struct Path {
    std::size_t source = 0;
    std::vector<std::size_t> arrows;

    std::size_t target(const Quiver& q) const {
        return arrows.empty() ? source : q.arrows[arrows.back()].tgt;
    }
    std::string label(const Quiver& q) const;
};

struct QuiverData {
    Quiver quiver;
    std::vector<std::vector<std::size_t>> relations; // arrow-index words, traversal order
    std::vector<Path> paths;                         // basis element i is paths[i]
    std::vector<std::size_t> e;                      // basis index of each vertex idempotent
    std::vector<std::size_t> arrow_basis;            // basis index of each arrow
};

struct AlgebraStructure; // defined in structure.hpp, cached lazily

/* Finite-dimensional associative unital algebra over F_p with a fixed basis,
 * given by its left-multiplication matrices.  Products follow concatenation
 * order for paths: p*q means "walk p, then q", nonzero only when the target
 * of p is the source of q.  Consequently e_{s(b)} b = b = b e_{t(b)},
 * the left ideal (Algebra)e_v is spanned by paths ending at v, and
 * e_v(Algebra) by paths starting at v. */
struct Algebra {
    Fp field;
    std::size_t dim = 0;
    std::vector<std::string> basis_names;
    std::vector<Mat> left_mult; // left_mult[i]: coords of y |-> b_i * y
    Mat one;                    // dim x 1 coordinates of the identity
    Mat gens;                   // dim x g columns generating the algebra (with 1)
    std::optional<QuiverData> quiver;

    mutable std::shared_ptr<const AlgebraStructure> structure_cache;
    mutable std::weak_ptr<const Algebra> opposite_cache;

    explicit Algebra(Fp f) : field(f) {}

    /* Coordinates of b_i * b_j. */
    Mat basis_product(std::size_t i, std::size_t j) const { return left_mult[i].col(j); }

    /* Matrix of left multiplication by the element with coordinates x. */
    Mat left_mult_by(const Mat& x) const;

    /* Matrix of right multiplication by the element with coordinates x. */
    Mat right_mult_by(const Mat& x) const;

    bool is_idempotent(const Mat& x) const;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

/* Builds the bound quiver algebra kQ/I for the monomial admissible ideal I
 * generated by the relation words.  Relations are arrow-index words in
 * traversal order, each a composable path of length >= 2 (InvalidRelation
 * otherwise).  Basis paths are enumerated by length, shortest first, and a
 * word survives iff it contains no relation word as a consecutive factor.
 * Throws NotAdmissible if paths survive at length_bound. */
AlgebraPtr path_algebra(const Quiver& q, const std::vector<std::vector<std::size_t>>& relations,
                        std::uint32_t p, std::size_t length_bound = 32);

/* Opposite algebra on the same basis indices (b_i * b_j becomes b_j * b_i).
 * For a quiver algebra the presentation data is transported: arrows are
 * reversed and path words read backwards.  Cached: repeated calls on the
 * same algebra return the same object, and opposite(opposite(a)) is `a`. */
AlgebraPtr opposite(const AlgebraPtr& a);

/* General algebra from structure constants.  Validates that the claimed
 * identity is one, that generator products associate against the table, and
 * that the generators together with 1 span the algebra (multiplicative
 * closure). */
AlgebraPtr table_algebra(Fp field, std::vector<std::string> names, std::vector<Mat> left_mult,
                         Mat one, Mat gens);

} // namespace udom
