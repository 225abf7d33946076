#pragma once

#include "hopfcat/equivariant.hpp"
#include "hopfcat/relhopf.hpp"

namespace hopfcat {

// A cochain complex of modules over one category, degrees 0..n.
struct CatComplex {
    std::vector<CatModule> term;
    std::vector<ModuleMorphism> d;  // d[q]: term[q] -> term[q+1]
};
std::vector<std::string> validate_complex(const CatComplex& c);

// Truncated free resolution ... -> P_1 -> P_0 -> M -> 0. Every term is a sum
// of representables (plain contexts) or carries the tensor shape recorded in
// `shapes` (equivariant contexts). term_objects lists each term's
// representable summands in order; free morphisms out of a term are defined
// by images of the canonical generators at those objects.
struct FreeResolution {
    CatModule target;
    std::vector<CatModule> term;
    std::vector<std::vector<int>> term_objects;
    std::vector<ModuleMorphism> diff;  // diff[i]: term[i+1] -> term[i]
    ModuleMorphism augmentation;       // term[0] -> target
    std::vector<std::string> shapes;
};

FreeResolution free_resolution_plain(const CatModule& m, int length);
std::vector<std::string> verify_free_resolution(const FreeResolution& r);

// The morphism out of a sum of representables determined by one generator
// image per summand.
ModuleMorphism free_morphism(const CatModule& cover, const std::vector<int>& cover_objects,
                             const CatModule& target, const std::vector<Vec>& generator_images);

// Vector-space dual: flips variance, transposes every action matrix. An exact
// contravariant involution, so injectives are duals of projectives.
CatModule dual_module(const CatModule& m);
ModuleMorphism dual_morphism(const ModuleMorphism& eta);

struct InjectiveResolution {
    CatModule source;
    std::vector<CatModule> term;       // I^0..I^len
    std::vector<ModuleMorphism> diff;  // diff[k]: I^k -> I^{k+1}
    ModuleMorphism augmentation;       // source -> I^0
    bool certified = false;            // every term passed the lifting panel
};

InjectiveResolution injective_resolution(const CatModule& m, int length);
std::vector<std::string> verify_injective_resolution(const InjectiveResolution& r);
// Lifting criterion against a fixed panel: cyclic submodules of every
// representable generated by basis vectors and their pairwise sums. A sound
// re-verification; failures are real.
bool injective_by_lifting(const CatModule& candidate);
// Complete criterion at finite dimension: the dual module is projective, i.e.
// the free cover of the dual splits. Exact; this is what the resolution
// builder decides with, and certificates re-run the lifting panel on top.
bool injective_by_duality(const CatModule& candidate);

// Equivariant free resolution in Mod-(C#H): each term is V (x) (sum of h_X)
// converted to a smash module, the mandated shape.
struct SmashResolution {
    HCatPtr hcat;
    CatPtr smash;
    FreeResolution res;  // modules over `smash`
};
SmashResolution free_resolution_smash(const EquivModule& m, CatPtr smash, int length);

// Relative-Hopf free resolution: each term is (sum of _Xi h) (x) W.
struct RelHopfResolution {
    RelHopfModule target;
    std::vector<RelHopfModule> term;
    std::vector<ModuleMorphism> diff;
    ModuleMorphism augmentation;
    std::vector<std::string> shapes;
};
RelHopfResolution free_resolution_relhopf(const RelHopfModule& m, int length);
std::vector<std::string> verify_relhopf_resolution(const RelHopfResolution& r);

// Cochain complexes carrying H-structures on explicit bases.
struct HModuleComplex {
    std::vector<HModule> term;
    std::vector<Matrix> d;  // d[q]: term[q] -> term[q+1] in basis coordinates
};
struct HComoduleComplex {
    std::vector<HComodule> term;
    std::vector<Matrix> d;
};

// Hom_{Mod-C}(M, E^*) for an injective resolution E^* of N in Mod-(C#H),
// each term an H-module, differentials H-linear (verified).
HModuleComplex hom_complex_equivariant(const EquivModule& m, const EquivModule& n, CatPtr smash, int degree);
// Hom_{D-Mod}(M, E^*) for an injective resolution E^* in the relative Hopf
// category (through the verified dual-smash route), terms H-comodules.
HComoduleComplex hom_complex_relhopf(const RelHopfModule& m, const RelHopfModule& n, int degree);

// Ext computed two independent ways: through a free resolution of the source
// and through an injective resolution of the target. Disagreement is a hard
// error surfaced in `routes_agree` by callers that want a report instead.
struct ExtResult {
    std::vector<int> dims;                  // free route, q = 0..degree
    std::vector<int> dims_injective_route;  // q = 0..degree
    bool routes_agree = false;
    std::vector<HModule> h_structure;       // equivariant ambient (injective route basis)
    std::vector<HComodule> coh_structure;   // relative Hopf ambient
};

ExtResult ext_plain(const CatModule& m, const CatModule& n, int degree);
ExtResult ext_equivariant(const EquivModule& m, const EquivModule& n, CatPtr smash, int degree);
ExtResult ext_relhopf(const RelHopfModule& m, const RelHopfModule& n, int degree);

// R^p of invariants/coinvariants as Ext over H (resp. H*) from the trivial
// module; entry 0 equals the plain (co)invariants dimension.
std::vector<int> derived_invariants(const HModule& m, int degree);
std::vector<int> derived_coinvariants(const HComodule& m, int degree);

// One-object bridges used by the derived functors and the spectral grids.
CatModule hmodule_as_catmodule(const HModule& m, CatPtr one_object);
HModule catmodule_as_hmodule(const CatModule& m, HopfPtr h);

}  // namespace hopfcat
