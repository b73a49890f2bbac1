#pragma once

#include <cstdint>
#include <vector>

#include "udom/module.hpp"

namespace udom {

/* One simple block of the algebra: a primitive idempotent f together with
 * the indecomposable projective Af, the indecomposable injective D(fA), and
 * the simple top. */
struct BlockData {
    Mat idem;       // algebra coordinates of the primitive idempotent
    Mat proj_basis; // columns: basis of A·f inside A
    FdModule proj;
    Mat proj_gen;   // coordinates of f in proj's basis (generator of proj)
    Mat inj_basis;  // columns: basis of f·A inside A
    FdModule inj;   // K-dual of the right ideal f·A, as a left module
    FdModule simple;
    std::size_t mult = 1; // multiplicity of the block in the regular module
};

struct AlgebraStructure {
    Mat radical;                        // columns span the Jacobson radical
    std::vector<Mat> complete_idem;     // orthogonal primitive idempotents, sum 1
    std::vector<std::size_t> idem_block; // block index of each idempotent
    std::vector<BlockData> blocks;      // one entry per isomorphism class
    Mat small_gens;                     // columns: compact generating set
};

/* Computes (and caches on the algebra) radical, a complete set of primitive
 * orthogonal idempotents, and the block data.  Quiver algebras use the
 * arrow-ideal radical and vertex idempotents directly; table algebras go
 * through the characteristic-polynomial radical chain and idempotent
 * lifting.  Throws NoRadicalRuleError when a simple block is not a full
 * matrix algebra over the prime field (idempotent splitting impossible). */
const AlgebraStructure& structure_of(const AlgebraPtr& a);

/* Radical via the characteristic-polynomial chain: over F_p with p^l >= dim,
 * iterate R_{i+1} = {x in R_i : coefficient p^i of charpoly(L_{xy}) vanishes
 * for all y in R_i}; each step is linear on R_i and the chain lands on the
 * radical.  Exposed separately so tests can cross-check the quiver route. */
Mat radical_by_charpoly_chain(const Algebra& a);

std::size_t block_count(const AlgebraPtr& a);
FdModule simple_module(const AlgebraPtr& a, std::size_t block);
FdModule indec_projective(const AlgebraPtr& a, std::size_t block);
FdModule indec_injective(const AlgebraPtr& a, std::size_t block);

/* Dense characteristic polynomial mod p via Hessenberg reduction;
 * coefficients low-to-high, monic of degree m.rows. */
std::vector<std::uint32_t> charpoly(const Mat& m);

} // namespace udom
