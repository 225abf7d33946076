#pragma once

#include "hopfcat/catmod.hpp"

namespace hopfcat {

// A relative Hopf module over a right co-H-category D: a left D-module with a
// right H-comodule structure on each carrier satisfying
//   rho(M(f)(m)) = sum M(f0)(m0) (x) f1 m1.
struct RelHopfModule {
    CoHCatPtr dcat;
    CatModule base;                 // left module over dcat->base
    std::vector<HComodule> hcomod;  // per object
};

std::vector<std::string> validate_relhopf(const RelHopfModule& m);

// _Xh = Hom(X, -) with the hom-space coactions.
RelHopfModule representable_relhopf(CoHCatPtr d, int obj);
// N (x) W with (N (x) W)(f)(n (x) w) = N(f)(n) (x) w and the tensor coaction.
RelHopfModule tensor_comod(const RelHopfModule& n, const HComodule& w);
RelHopfModule direct_sum_relhopf(const std::vector<RelHopfModule>& parts);

// Basis of Hom in the relative Hopf category: naturality plus per-object
// H-colinearity, solved jointly.
Matrix colinearity_system(const RelHopfModule& m, const RelHopfModule& n);
Matrix relhopf_hom_matrix(const RelHopfModule& m, const RelHopfModule& n);
std::vector<ModuleMorphism> relhopf_hom_basis(const RelHopfModule& m, const RelHopfModule& n);

// Pointwise kernel of a colinear morphism, re-equipped with the restricted
// coactions and re-validated.
struct RelHopfKernel {
    RelHopfModule kernel;
    ModuleMorphism inclusion;
};
RelHopfKernel relhopf_kernel(const RelHopfModule& m, const RelHopfModule& n, const ModuleMorphism& eta);

// The finitely-generated witness of one element: the smallest coaction-closed
// subspace W containing it, and eta: _Xh (x) W -> M with eta(X)(id (x) m) = m.
struct GeneratorWitness {
    HComodule w;
    Matrix w_embedding;  // columns: W's basis inside M(obj)
    RelHopfModule cover;
    ModuleMorphism eta;
    bool valid = false;
};
GeneratorWitness generator_witness(const RelHopfModule& m, int obj, const Vec& element);

// The certifying epimorphism of finite generation: (+) _Xi h (x) W -> M.
struct FgCertificate {
    RelHopfModule cover;
    ModuleMorphism epi;
    std::vector<int> objects;
    int w_dim = 0;
    bool surjective = false;
};
FgCertificate fg_certificate(const RelHopfModule& m);

// Hom_{D-Mod}(M, N) with the coaction
//   rho(eta)(X)(m) = sum (eta(X)(m0))0 (x) S^-1(m1) (eta(X)(m0))1
// realized on the solver's basis, with every certificate the construction
// carries: comodule laws, agreement of the induced H*-action with the direct
// formula, coinvariants = colinear Hom, the tensor adjunction on the small
// comodule testers, and the finite-generation witness.
struct RationalHom {
    std::vector<ModuleMorphism> basis;  // basis of Hom_{D-Mod}(M, N)
    Matrix basis_matrix;
    HComodule comodule;
    Matrix coinvariant_coords;         // coordinates in `basis`
    bool hstar_action_matches = false; // direct H*-action equals the dualized coaction
    bool coinvariants_match_colinear = false;
    bool adjunction_ok = false;        // testers: trivial and grouplike lines
    FgCertificate fg;
};
RationalHom rational_hom(const RelHopfModule& m, const RelHopfModule& n);

// The dual-smash route: a relative Hopf module is a left module over
// smash_product(dualize_coh_category(D)) via N'(f # h*) (n) = N(f)(h* n).
CatModule relhopf_to_smash(const RelHopfModule& m, const HCategory& dual_cat, CatPtr smash);
RelHopfModule relhopf_from_smash(CoHCatPtr d, const HCategory& dual_cat, const CatModule& sm);
// Cross-check required before the route is trusted: the smash-side Hom equals
// the colinear Hom as subspaces of Hom_{D-Mod}(M, N).
bool relhopf_smash_route_agrees(const RelHopfModule& m, const RelHopfModule& n, const HCategory& dual_cat,
                                CatPtr smash);

namespace fixtures {
// Over the arrow co-H-category: M1(A) = K m0 of degree 1, M1(B) = K m1 of
// degree g, M1(alpha): m0 -> m1.
RelHopfModule m1_over_arrow(CoHCatPtr d1);
}  // namespace fixtures

}  // namespace hopfcat
