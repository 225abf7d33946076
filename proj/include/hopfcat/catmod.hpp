#pragma once

#include "hopfcat/hcat.hpp"

namespace hopfcat {

// A module over a finite K-linear category: a K-linear functor to vector
// spaces, given by one carrier dimension per object and one matrix per hom
// basis element.
//
// Right modules are contravariant: f in hom(X,Y) acts by M(f): M(Y) -> M(X).
// Left modules are covariant: M(f): M(X) -> M(Y).
enum class Side { Right, Left };

struct CatModule {
    CatPtr category;
    Side side = Side::Right;
    std::vector<int> carrier;
    std::vector<std::vector<std::vector<Matrix>>> action;  // [x][y][basis index]

    int total_dim() const;
    // Matrix of M(f) for f given by coordinates in hom(x,y).
    Matrix act(int x, int y, const Vec& f) const;
};

std::vector<std::string> validate_cat_module(const CatModule& m);

// A natural transformation, one component matrix per object.
struct ModuleMorphism {
    std::vector<Matrix> component;  // [x]: M(x) -> N(x)
};

std::vector<std::string> validate_morphism(const CatModule& m, const CatModule& n, const ModuleMorphism& eta);

CatModule zero_module(CatPtr c, Side side);
// h_X = Hom(-, X) as a right module, or Hom(X, -) as a left module.
CatModule representable(CatPtr c, int obj, Side side);

struct DirectSum {
    CatModule module;
    std::vector<ModuleMorphism> injections;
    std::vector<ModuleMorphism> projections;
};
DirectSum direct_sum(const std::vector<CatModule>& parts);

// Morphism vectorization: components concatenated object by object, each in
// row-major order. Used to treat Hom spaces as coordinate spaces.
Vec morphism_coords(const CatModule& m, const CatModule& n, const ModuleMorphism& eta);
ModuleMorphism morphism_from_coords(const CatModule& m, const CatModule& n, const Vec& coords);
// The naturality constraint system; its kernel is Hom_{Mod-C}(M, N).
Matrix naturality_system(const CatModule& m, const CatModule& n);

// Basis of Hom(M, N) in the module category, solved exactly.
std::vector<ModuleMorphism> module_hom_basis(const CatModule& m, const CatModule& n);
// Same basis as columns of vectorized coordinates.
Matrix module_hom_matrix(const CatModule& m, const CatModule& n);

ModuleMorphism compose_morphisms(const ModuleMorphism& second, const ModuleMorphism& first);
bool morphism_is_zero(const ModuleMorphism& eta);

// Pointwise kernel and cokernel with induced actions; outputs are re-validated
// as functors.
struct KernelCokernel {
    CatModule kernel;
    ModuleMorphism inclusion;
    CatModule cokernel;
    ModuleMorphism projection;
};
KernelCokernel morphism_kernel_cokernel(const CatModule& m, const CatModule& n, const ModuleMorphism& eta);

// Greedy generating family in fixed basis order, with the certifying
// epimorphism from the matching sum of representables.
struct GeneratorSet {
    std::vector<std::pair<int, Vec>> elements;  // (object, element coordinates)
    CatModule cover;                            // direct sum of representables
    ModuleMorphism epi;                         // cover -> M, verified surjective
};
GeneratorSet generators(const CatModule& m);

// Submodule spanned by the given per-object columns, closed under the action
// (throws if not closed); returns the module plus its inclusion.
struct Submodule {
    CatModule module;
    ModuleMorphism inclusion;
};
Submodule submodule_from_basis(const CatModule& m, const std::vector<Matrix>& basis);

}  // namespace hopfcat
