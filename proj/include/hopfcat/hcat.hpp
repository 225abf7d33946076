#pragma once

#include "hopfcat/hrep.hpp"

namespace hopfcat {

// A finite K-linear category: finitely many objects, a chosen basis for every
// hom space, composition as an exact bilinear tensor.
//
// compose_t[x][y][z] maps hom(y,z) (x) hom(x,y) -> hom(x,z): the column at
// index a*dim_hom(x,y)+b is the composite (f_a : y->z) o (g_b : x->y). Zero
// hom spaces are stored as empty bases, never omitted.
struct LinCategory {
    FieldSpec field;
    std::vector<std::string> objects;
    std::vector<std::vector<std::vector<std::string>>> hom_labels;  // [x][y]
    std::vector<std::vector<std::vector<Matrix>>> compose_t;        // [x][y][z]
    std::vector<Vec> identity;                                      // [x], in hom(x,x)

    int n_objects() const { return static_cast<int>(objects.size()); }
    int hom_dim(int x, int y) const { return static_cast<int>(hom_labels[x][y].size()); }
    // f in hom(y,z), g in hom(x,y) -> f o g in hom(x,z)
    Vec compose(int x, int y, int z, const Vec& f, const Vec& g) const;
};

using CatPtr = std::shared_ptr<const LinCategory>;

std::vector<std::string> validate_category(const LinCategory& c);
bool same_structure(const LinCategory& a, const LinCategory& b);

// H acting on every hom space, composition H-equivariant:
// h(fg) = sum h1(f) h2(g), h(id) = eps(h) id.
struct HCategory {
    CatPtr base;
    HopfPtr hopf;
    std::vector<std::vector<std::vector<Matrix>>> action;  // [x][y][i]

    HModule hom_module(int x, int y) const;
};

using HCatPtr = std::shared_ptr<const HCategory>;

// H coacting on every hom space, composition H-coequivariant:
// rho(fg) = rho(f) rho(g), rho(id) = id (x) 1_H.
struct CoHCategory {
    CatPtr base;
    HopfPtr hopf;
    std::vector<std::vector<Matrix>> coaction;  // [x][y], shape (dim*n) x dim

    HComodule hom_comodule(int x, int y) const;
};

using CoHCatPtr = std::shared_ptr<const CoHCategory>;

std::vector<std::string> validate_h_category(const HCategory& c);
std::vector<std::string> validate_coh_category(const CoHCategory& d);

// Invariant (resp. coinvariant) subcategory: same objects, hom spaces cut to
// the (co)invariant subspaces, composition restricted and re-verified.
// embeddings[x][y] holds the chosen subspace basis in the original hom
// coordinates, so fixed hom spaces can be compared as subspaces.
struct FixedSubcategory {
    CatPtr cat;
    std::vector<std::vector<Matrix>> embeddings;
};

FixedSubcategory fixed_subcategory(const HCategory& c);
FixedSubcategory fixed_subcategory(const CoHCategory& d);

// A right co-H-category is the same thing as a left H*-category:
// h*(f) = sum f0 h*(f1), and back via rho(f) = sum e_i*(f) (x) e_i.
HCatPtr dualize_coh_category(const CoHCategory& d);
CoHCatPtr coh_from_dual_action(const HCategory& c, HopfPtr h);

// Smash product category C#H: same objects, hom(X,Y) (x) H with basis
// f_a # e_i at index a*n+i, twisted composition
// (f # h)(g # h') = sum f(h1 g) # (h2 h'), identities id_X # 1_H.
CatPtr smash_product(const HCategory& c);
// C#H carries a natural co-H-structure f#h -> sum (f#h1) (x) h2; this is an
// interpretation (validated), used nowhere in the derived-functor pipelines.
CoHCatPtr smash_coh_category(const HCategory& c);

// A finite-dimensional algebra as a one-object category; modules over it are
// then handled by the same machinery as every other context.
CatPtr algebra_as_category(FieldSpec f, const std::vector<std::vector<Vec>>& mult, const Vec& unit,
                           const std::vector<std::string>& basis_labels);
CatPtr hopf_as_category(const HopfAlgebra& h);

namespace fixtures {
// One object with End = K and the trivial H-action.
HCatPtr one_object_trivial(HopfPtr h);
// One object with End = K[x]/(x^2); over a 2-dim group algebra, g x = -x.
HCatPtr dual_numbers_c2(HopfPtr c2_like);
// Objects A, B with hom(A,B) = span{alpha}, hom(B,A) = 0; g alpha = -alpha.
HCatPtr two_object_arrow(HopfPtr c2_like);
// The same arrow category as a right co-H-category: rho(alpha) = alpha (x) g.
CoHCatPtr arrow_coh(HopfPtr c2_like);
}  // namespace fixtures

}  // namespace hopfcat
