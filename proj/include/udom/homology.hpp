#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "udom/structure.hpp"

namespace udom {

/* A homological dimension computed under a cutoff.  When the computation
 * exhausts the cutoff without settling, `is_lower_bound` is set and `value`
 * is the best certified lower bound; otherwise `value` is exact. */
struct DimReport {
    std::size_t value = 0;
    bool is_lower_bound = false;
    std::size_t bound_used = 0;

    std::string str() const;
    bool operator==(const DimReport&) const = default;
};

/* Projective cover P(m) ↠ m: one indecomposable projective summand per
 * simple summand of top(m); the map lifts a basis of the top, so its kernel
 * lies in rad P(m). */
struct ProjCover {
    FdModule proj;
    ModuleMap onto;                  // proj -> m, surjective
    std::vector<std::size_t> mults;  // copies of each indecomposable projective
};
ProjCover projective_cover(const FdModule& m);

/* Injective envelope m ↪ E(m): one indecomposable injective summand per
 * simple summand of soc(m); the embedding restricts to an isomorphism of
 * socles, hence is injective and essential. */
struct InjEnvelope {
    FdModule env;
    ModuleMap into;                  // m -> env, injective and essential
    std::vector<std::size_t> mults;  // copies of each indecomposable injective
};
InjEnvelope injective_envelope(const FdModule& m);

enum class ResKind { Projective, Injective };

/* Minimal resolution truncated after `length_computed + 1` terms.  Once a
 * (co)syzygy vanishes every later term is the zero module, and `terminated`
 * is set.  Projective kind: differentials[k] : terms[k+1] -> terms[k] and
 * augmentation : terms[0] -> base.  Injective kind: differentials[k] :
 * terms[k] -> terms[k+1] and augmentation : base -> terms[0]. */
struct Resolution {
    ResKind kind = ResKind::Projective;
    FdModule base;
    std::vector<FdModule> terms;
    std::vector<std::vector<std::size_t>> mults; // block multiplicities per term
    std::vector<ModuleMap> differentials;
    Mat augmentation;
    bool minimal = true;
    std::size_t length_computed = 0;
    bool terminated = false;
};

Resolution min_proj_resolution(const FdModule& m, std::size_t n);
Resolution min_inj_resolution(const FdModule& m, std::size_t n);

/* Exactness of the computed stretch (image = kernel at every inner spot,
 * augmentation surjective/injective as appropriate). */
bool is_exact_resolution(const Resolution& r);

bool is_projective(const FdModule& m);
bool is_injective(const FdModule& m);

/* Least d <= bound with the d-th syzygy projective, else ">= bound + 1". */
DimReport projective_dimension(const FdModule& m, std::size_t bound);

/* dim Ext^i(m, n) for i = 0..i_max, via Hom(P_•, n) over the minimal
 * projective resolution of m. */
std::vector<std::size_t> ext_dims(const FdModule& m, const FdModule& n,
                                  std::size_t i_max);

/* Hom(m, n) as a module over `aux`, acting by postcomposition: aux_post[b]
 * (one endomorphism of n's carrier per aux basis element, commuting with the
 * action on n) sends φ to aux_post[b]·φ. */
FdModule hom_module(const FdModule& m, const FdModule& n, const AlgebraPtr& aux,
                    const std::vector<Mat>& aux_post);

/* Hom(m, n) as a module over `aux`, acting by precomposition: φ ↦ φ·aux_pre[b].
 * The pre-matrices must be anti-multiplicative over aux (i.e. they form a
 * module structure on m's carrier over opposite(aux)). */
FdModule hom_module_pre(const FdModule& m, const FdModule& n, const AlgebraPtr& aux,
                        const std::vector<Mat>& aux_pre);

/* Ext^i(m, n) carrying the aux-module structure that postcomposition with
 * aux_post induces on cohomology. */
FdModule ext_module(const FdModule& m, const FdModule& n, std::size_t i,
                    const AlgebraPtr& aux, const std::vector<Mat>& aux_post);

/* dim Tor_i(n, m) for i = 0..i_max over a minimal projective resolution of
 * the right module n (given over opposite(A), tensored against the left
 * module m). */
std::vector<std::size_t> tor_dims(const FdModule& n_right, const FdModule& m_left,
                                  std::size_t i_max);

} // namespace udom
