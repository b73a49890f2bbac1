#pragma once

#include <optional>
#include <vector>

#include "udom/homology.hpp"

namespace udom {

struct BimoduleValidation {
    bool balanced_left = false;  // natural map Λ → End(U_Γ) bijective
    bool balanced_right = false; // natural map Γ → End(_ΛU)^op bijective
    bool actions_commute = false;
    std::size_t selforthogonal_verified_up_to = 0; // Ext^i(U,U) = 0 checked, both sides
    bool exact = false; // U projective on both sides: selforthogonality holds in all degrees
};

/* The working triple (Λ, Γ = End(_ΛU)^op, U).  Γ lives on the deterministic
 * Hom basis of End(_ΛU), so its multiplication table is reproducible
 * bit-for-bit; `u_right` is the same carrier as `u_left` with the evaluation
 * action of Γ, i.e. a left module over opposite(Γ) (= a right Γ-module).
 * The caches hold the injective envelope of U on each side together with its
 * star-dual Hom(U, E), the objects every torsion/dominant-dimension question
 * keeps coming back to. */
struct BimoduleContext {
    AlgebraPtr lambda;
    AlgebraPtr lambda_op;
    AlgebraPtr gamma;
    AlgebraPtr gamma_op;
    FdModule u_left;        // U over Λ
    FdModule u_right;       // U over opposite(Γ)
    std::vector<Mat> endo;  // End(_ΛU) matrices behind Γ's basis, in basis order
    BimoduleValidation validation;
    std::size_t ext_bound = 4;

    InjEnvelope env_left;   // injective envelope of u_left over Λ
    InjEnvelope env_right;  // injective envelope of u_right over opposite(Γ)
    FdModule costar_left;   // Hom_Λ(U, env_left.env) as a left Γ-module
    FdModule costar_right;  // Hom_{Γ-op}(U, env_right.env) as a right Λ-module

    /* Which side of the context a module lives on. */
    bool on_lambda_side(const FdModule& m) const { return m.alg.get() == lambda.get(); }
    bool on_gamma_side(const FdModule& m) const { return m.alg.get() == gamma_op.get(); }
};

/* Builds Γ on hom_basis(u, u), attaches the evaluation right action, and
 * certifies the definition: commuting actions, both natural maps bijective
 * (NotBalanced with kernel/cokernel dimensions otherwise), and
 * Ext^i(U, U) = 0 on both sides for 1 <= i <= ext_bound (NotSelforthogonal
 * with the first offending degree otherwise).  `exact` is set when U is
 * projective on both sides, in which case selforthogonality is a theorem in
 * every degree rather than a bounded check. */
BimoduleContext build_context(const AlgebraPtr& lambda, const FdModule& u,
                              std::size_t ext_bound = 4);

/* The mirrored context over (Γ^op, U): rebuilt honestly from scratch, so all
 * certificates are recomputed; involutive up to isomorphism. */
BimoduleContext side_swap(const BimoduleContext& ctx);

/* A module of homomorphisms that remembers the matrices behind its basis
 * vectors; the representatives drive evaluation maps, dualized maps, and the
 * coresolution certificate. */
struct DualModule {
    FdModule mod;
    std::vector<Mat> reps;
};

/* Hom(m, U) on the opposite side: left Λ-modules go to right Γ-modules
 * (postcomposition with the evaluation action) and right Γ-modules come back
 * to left Λ-modules. */
DualModule dual_wrt_U(const BimoduleContext& ctx, const FdModule& m);

/* Matrix of Hom(f, U) : dual(dst) → dual(src) for f : src → dst, in the
 * bases the two DualModules carry. */
Mat dual_of_map(const DualModule& src_dual, const DualModule& dst_dual, const Mat& f);

struct Biduality {
    DualModule star;        // Hom(m, U), other side
    DualModule double_star; // Hom(star, U), back on m's side
    ModuleMap sigma;        // m → double_star, x ↦ (f ↦ f(x))
};

/* Evaluation into the double dual; the ModuleMap constructor certifies that
 * sigma intertwines the actions. */
Biduality evaluation_map(const BimoduleContext& ctx, const FdModule& m);

/* Cokernel of Hom(d, U) over the minimal presentation P_1 --d--> P_0 ↠ m;
 * lands on the other side, vanishes exactly on projectives. */
FdModule transpose_U(const BimoduleContext& ctx, const FdModule& m);

/* Largest submodule with no nonzero map to the cached injective envelope of
 * U on m's side: the joint kernel of hom_basis(m, E).  Self-certifies that
 * the part admits no maps to E and that the quotient is cogenerated by E. */
SubQuotient torsion_submodule(const BimoduleContext& ctx, const FdModule& m);

/* True iff the joint kernel of hom_basis(m, c) vanishes, i.e. m embeds in a
 * finite power of c. */
bool is_cogenerated_by(const FdModule& m, const FdModule& c);

/* Trace criterion for m being a direct summand of a finite sum of copies of
 * u: id_m lies in the span of {f ∘ g} over f ∈ Hom(u, m), g ∈ Hom(m, u). */
bool is_in_add(const FdModule& m, const FdModule& u);

/* Hom(U, e) with the residual action of the other side: for e over Λ a left
 * Γ-module (precompose with the evaluation action), for e over opposite(Γ) a
 * right Λ-module. */
DualModule star_into(const BimoduleContext& ctx, const FdModule& e);

/* Ext^i(m, U) carrying the residual action of the other side, computed as the
 * i-th cohomology of the dualized minimal projective resolution; i = 0 is the
 * plain dual.  Its dimension agrees with ext_dims(m, U)[i] by construction of
 * a different route (cochain subquotient here, lifted hom solving there). */
FdModule ext_module_wrt_U(const BimoduleContext& ctx, const FdModule& m, std::size_t i);

/* Least i <= bound with Ext^i(m, U) ≠ 0 — degree 0 (Hom) counts — else
 * ">= bound + 1". */
DimReport grade_U(const BimoduleContext& ctx, const FdModule& m, std::size_t bound);

/* Number of initial terms of the minimal injective resolution of m that are
 * cogenerated by U; ">= d_max" when all computed terms pass. */
DimReport u_dominant_dimension(const BimoduleContext& ctx, const FdModule& m,
                               std::size_t d_max);

/* Certificate for the resolution dimension of an injective e: the minimal
 * projective resolution of Hom(U, e), tensored back with U, realized as an
 * explicit coresolution 0 → T_n → … → T_0 → e → 0 whose terms are certified
 * members of add U and whose exactness (including the evaluation
 * isomorphism U ⊗ Hom(U, e) ≅ e at the augmented end) is verified. */
struct AddUCoresolution {
    std::vector<FdModule> terms;  // T_0 … T_n on e's side
    std::vector<Mat> maps;        // maps[k] : T_{k+1} → T_k
    Mat onto;                     // T_0 → e
    bool evaluation_iso = false;  // U ⊗ Hom(U, e) → e bijective
    bool exact = false;
    bool terms_in_add_u = false;
    std::size_t length() const { return terms.empty() ? 0 : terms.size() - 1; }
};

struct UResolutionDim {
    DimReport dim; // projective dimension of Hom(U, e) on the other side
    std::optional<AddUCoresolution> certificate; // built when dim is exact and <= 2
};

/* Shortest add-U coresolution length of the injective module e, computed as
 * the projective dimension of star_into(e); NotInjective when e is not its
 * own injective envelope.  Small exact values come with the explicit
 * coresolution certificate. */
UResolutionDim u_resolution_dimension(const BimoduleContext& ctx, const FdModule& e,
                                      std::size_t bound);

/* QF-3 test: m cogenerates its own injective envelope. */
bool is_qf3(const BimoduleContext& ctx, const FdModule& m);

} // namespace udom
