#pragma once

#include <cstdint>
#include <vector>

#include "udom/algebra.hpp"

namespace udom {

/* How much action-compatibility checking a module constructor performs.
 *   Generators — exact unit law plus deterministic probe vectors pushed
 *                through every (basis element, generator) pair; cheap and
 *                catches wiring mistakes in derived constructions.
 *   Full       — exact matrix identities act(b)·act(g) = act(b·g) for every
 *                basis element b and generator g, which by associativity of
 *                the algebra implies compatibility on all basis pairs.
 *                Used for externally ingested data and in tests.
 *   None       — shape checks only (for constructions whose compatibility
 *                is forced, e.g. block sums of validated modules). */
enum class Validate { None, Generators, Full };

struct FdModule {
    AlgebraPtr alg;
    std::size_t dim = 0;
    std::vector<Mat> act; // act[i]: action of basis element i, dim x dim

    FdModule() = default;
    FdModule(AlgebraPtr a, std::size_t d, std::vector<Mat> actions,
             Validate v = Validate::Generators);

    /* Action matrix of the algebra element with the given coordinates. */
    Mat act_elem(const Mat& coords) const;
    bool is_zero_module() const { return dim == 0; }
};

FdModule regular_module(const AlgebraPtr& a);
FdModule zero_module(const AlgebraPtr& a);

/* K-dual: left module over the opposite algebra, transposed actions. */
FdModule k_dual(const FdModule& m);

bool intertwines(const FdModule& src, const FdModule& dst, const Mat& f);

struct ModuleMap {
    FdModule src, dst;
    Mat mat; // dst.dim x src.dim

    ModuleMap() = default; // empty map between zero carriers
    ModuleMap(FdModule s, FdModule d, Mat m); // validates on the full basis
};

/* Deterministic basis of Hom(m, n): canonical kernel basis of the
 * intertwining system over the algebra's generating set, block-reduced by
 * the complete orthogonal idempotents. */
std::vector<Mat> hom_basis(const FdModule& m, const FdModule& n);

struct SubQuotient {
    FdModule mod;
    Mat map; // inclusion (submodule results) or projection (quotient results)
};

SubQuotient kernel_of(const FdModule& src, const FdModule& dst, const Mat& f);
SubQuotient image_of(const FdModule& src, const FdModule& dst, const Mat& f);
SubQuotient cokernel_of(const FdModule& src, const FdModule& dst, const Mat& f);

/* Smallest submodule containing the given vectors (closure under the
 * algebra generators), with its inclusion. */
SubQuotient submodule_spanned(const FdModule& m, const Mat& vectors);

/* Submodule on an action-closed column basis (no closure taken). */
SubQuotient sub_on_basis(const FdModule& m, const Mat& closed_basis);

/* Quotient by the span of the given columns (must be action-closed). */
SubQuotient quotient_by(const FdModule& m, const Mat& sub_basis);

struct DirectSum {
    FdModule mod;
    std::vector<std::size_t> offsets; // coordinate offset of each summand
};
DirectSum direct_sum(const AlgebraPtr& a, const std::vector<const FdModule*>& parts);

/* Columns spanning rad(A)·M. */
Mat radical_vectors(const FdModule& m);
SubQuotient radical_submodule(const FdModule& m);
SubQuotient top_of(const FdModule& m);     // quotient by the radical
SubQuotient socle_of(const FdModule& m);   // joint kernel of the radical action

/* Multiplicity of each simple block in top(m) / soc(m). */
std::vector<std::size_t> top_mults(const FdModule& m);
std::vector<std::size_t> socle_mults(const FdModule& m);

/* dim f·M per complete primitive idempotent f (the dimension vector for
 * quiver algebras). */
std::vector<std::size_t> graded_dims(const FdModule& m);

/* A submodule is essential iff it contains the socle (finite-dimensional
 * case: a submodule avoiding some simple socle summand misses it entirely). */
bool is_essential_submodule(const FdModule& big, const Mat& sub_cols);

enum class Cert { No, Yes, Inconclusive };

/* Isomorphism test: invariant screen (dimension, graded dimensions), then a
 * deterministic seeded search for an invertible hom combination, then an
 * exact evaluation grid when min(p, dim+1)^homdim is small enough to decide
 * the determinant polynomial.  Inconclusive only when the grid is infeasible
 * and the search fails. */
Cert is_isomorphic(const FdModule& m, const FdModule& n,
                   std::uint64_t seed = 0x75646f6dULL);

/* n ⊗_A m for a right module n (given over opposite(A)) and a left module m,
 * held in weight-graded coordinates: the relations for the complete primitive
 * idempotents cut the plain tensor product down to ⊕_e (n·e ⊗ e·m) of
 * dimension gdim (the Peirce reduction), and the relations for the remaining
 * generators are quotiented inside that space via projq/sectq.  The
 * tensor_class / tensor_transport / tensor_aux helpers produce coordinates of
 * pure tensors and of induced maps directly, so nothing ever materializes the
 * full (n.dim * m.dim)-sized ambient space. */
struct TensorSpace {
    std::uint32_t p = 0;
    std::size_t dim = 0;            // dimension of n ⊗_A m
    std::size_t gdim = 0;           // dimension of the graded middle space
    std::vector<Mat> en, qn;        // per idempotent: weight basis of n, coordinate rows
    std::vector<Mat> em, qm;        // per idempotent: weight basis of m, coordinate rows
    std::vector<std::size_t> goff;  // graded offset of each idempotent block
    Mat projq;                      // graded (gdim) -> tensor coordinates (dim)
    Mat sectq;                      // section: projq * sectq = identity
};

TensorSpace tensor_over(const FdModule& n_right, const FdModule& m_left);

/* Coordinates of the pure tensor x ⊗ y (x a column over n, y over m). */
Mat tensor_class(const TensorSpace& t, const Mat& x, const Mat& y);

/* Induced map (n ⊗ m) -> (n' ⊗ m) of f : n -> n' (map of right modules,
 * same left factor); src/dst are the tensor spaces of the two ends. */
Mat tensor_transport_right(const TensorSpace& dst, const Mat& f, const TensorSpace& src);

/* Induced map (n ⊗ m) -> (n ⊗ m') of g : m -> m' (same right factor). */
Mat tensor_transport_left(const TensorSpace& dst, const Mat& g, const TensorSpace& src);

/* Induced endomorphism of a commuting operator on one factor (an auxiliary
 * action that commutes with the algebra action on that factor). */
Mat tensor_aux_right(const TensorSpace& t, const Mat& op);
Mat tensor_aux_left(const TensorSpace& t, const Mat& op);

} // namespace udom
