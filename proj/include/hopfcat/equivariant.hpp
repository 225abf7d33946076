#pragma once

#include "hopfcat/catmod.hpp"

namespace hopfcat {

// A right C-module over an H-category C, with an H-module structure on each
// carrier satisfying h(M(f)(m)) = sum M(h2 f)(h1 m).
//
// These are the same thing as right modules over the smash product C#H, via
// M'(f # h)(m) = S^-1(h) (M(f)(m)) and back; both directions are implemented
// and round-trip exactly.
struct EquivModule {
    HCatPtr hcat;
    CatModule base;             // right module over hcat->base
    std::vector<HModule> hmod;  // per object
};

std::vector<std::string> validate_equivariant(const EquivModule& m);

// The smash correspondence, both directions.
CatModule to_smash_module(const EquivModule& m, CatPtr smash);
EquivModule from_smash_module(HCatPtr hcat, const CatModule& smash_module);

// h_X as an equivariant module: H acts on h_X(Y) = hom(Y, X) through the
// category action.
EquivModule representable_equiv(HCatPtr c, int obj);
EquivModule tensor_hmod(const HModule& v, const EquivModule& n);
EquivModule direct_sum_equiv(const std::vector<EquivModule>& parts);

// Hom_{Mod-C}(M, N) as an H-module via (h eta)(X)(m) = sum h1 eta(X)(S(h2) m),
// on the solver's basis. Invariants are returned both as coordinates and as
// morphisms; they coincide with the smash-side Hom space.
struct HomHAction {
    std::vector<ModuleMorphism> basis;  // basis of Hom_{Mod-C}(M, N)
    Matrix basis_matrix;                // vectorized basis columns
    HModule hmodule;                    // H-action in that basis
    Matrix invariant_coords;            // columns, coordinates in `basis`
    std::vector<ModuleMorphism> invariant_basis;
};
HomHAction hom_h_action(const EquivModule& m, const EquivModule& n);

// Smash-side Hom expressed in the same coordinates as hom_h_action's basis:
// the two subspaces are compared exactly (the invariants identity).
Matrix smash_hom_in_base_coords(const EquivModule& m, const EquivModule& n, CatPtr smash);

// M (x) H with ((M (x) H)(f'#h'))(m (x) h) = sum M(h1 f')(m) (x) h2 h'.
CatModule extend_scalars(const CatModule& m, const HCategory& hcat, CatPtr smash);

// The extension-of-scalars adjunction phi: Hom_{C#H}(M (x) H, N) ->
// Hom_C(M, N), phi(eta)(X)(m) = eta(X)(m (x) 1), with inverse
// eta(X)(m (x) h) = S^-1(h) xi(X)(m). Verified as exact two-sided inverses.
struct ExtensionAdjunction {
    int dim_smash_side = 0;
    int dim_plain_side = 0;
    Matrix phi;       // matrix from smash-side basis to plain-side basis
    Matrix phi_inv;   // matrix of the stated inverse construction
    bool two_sided_inverse = false;
};
ExtensionAdjunction extension_adjunction(const CatModule& m, const EquivModule& n, CatPtr smash);

// The tensor-hom adjunction phi: Hom_{C#H}(V (x) N, P) ->
// Hom_{H-Mod}(V, Hom_{Mod-C}(N, P)), phi(eta)(v)(X)(n) = eta(X)(v (x) n),
// with inverse nu(X)(v (x) n) = f(v)(X)(n).
struct TensorHomAdjunction {
    int dim_smash_side = 0;
    int dim_hlinear_side = 0;
    Matrix phi;
    Matrix phi_inv;
    bool two_sided_inverse = false;
};
TensorHomAdjunction tensor_hom_adjunction(const HModule& v, const EquivModule& n, const EquivModule& p,
                                          CatPtr smash);

// The finite-witness construction for eta in Hom_{Mod-C}(M, N): V = span(H eta)
// inside the Hom H-module, v = eta's coordinates, and the smash morphism
// eta_hat: V (x) M -> N with eta_hat(X)(v (x) m) = eta(X)(m). The reverse
// extraction xi_u(X)(m) = eta_hat(X)(v_u (x) m) spans H eta.
struct FiniteWitness {
    HModule v;                   // submodule of the Hom H-module
    Matrix v_embedding;          // columns: V's basis in Hom coordinates
    Vec v_element;               // eta's coordinates in V
    ModuleMorphism eta_hat;      // morphism of smash modules V (x) M -> N
    EquivModule tensor_source;   // V (x) M
    bool valid = false;
    std::vector<ModuleMorphism> extracted;  // the xi_u family
    bool extraction_spans_orbit = false;
};
FiniteWitness finite_witness(const EquivModule& m, const EquivModule& n, const ModuleMorphism& eta, CatPtr smash);

namespace fixtures {
// Over the dual-numbers category: the trivial module T (x acts by 0) and the
// regular module R = h_* with g(a + bx) = a - bx.
EquivModule trivial_over_dual_numbers(HCatPtr c2fix);
EquivModule regular_over_dual_numbers(HCatPtr c2fix);
// The trivial one-dimensional module over the one-object trivial category.
EquivModule trivial_over_point(HCatPtr c1);
}  // namespace fixtures

}  // namespace hopfcat
