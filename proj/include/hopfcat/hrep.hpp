#pragma once

#include "hopfcat/hopf.hpp"

namespace hopfcat {

// A finite-dimensional left H-module: one carrier-sized matrix per H basis
// element.
struct HModule {
    HopfPtr hopf;
    int dim = 0;
    std::vector<Matrix> action;

    Matrix act(const Vec& h_coords) const;  // action of an H element
    Matrix act_antipode(int i) const;       // action of S(e_i)
};

// A finite-dimensional right H-comodule. The coaction is a (dim*n) x dim
// matrix over the base field: column j holds rho(v_j) in the v-major basis
// of V (x) H, so row (a, i) = a*n + i.
struct HComodule {
    HopfPtr hopf;
    int dim = 0;
    Matrix coaction;
};

std::vector<std::string> validate_hmodule(const HModule& m);
std::vector<std::string> validate_hcomodule(const HComodule& m);

// Basis (as columns) of M^H = {m | hm = eps(h) m for all h}.
Matrix invariants(const HModule& m);
// Basis of M^coH = {m | rho(m) = m (x) 1_H}.
Matrix coinvariants(const HComodule& m);

// Diagonal action h(m (x) n) = sum h1 m (x) h2 n.
HModule tensor_hmodules(const HModule& a, const HModule& b);
// rho(m (x) n) = sum m0 (x) n0 (x) m1 n1.
HComodule tensor_hcomodules(const HComodule& a, const HComodule& b);

// Hom_K(V, W) with (h f)(v) = sum h1 f(S(h2) v). Basis element (a, b), at
// index a*dim(V)+b, is the map sending v_b to w_a. Its invariants are exactly
// the H-linear maps V -> W.
HModule hom_hmodule(const HModule& v, const HModule& w);
// Flatten a dim(W) x dim(V) map matrix into hom_hmodule coordinates and back.
Vec hom_coords_of_map(const Matrix& f);
Matrix map_of_hom_coords(const Vec& coords, int dim_w, int dim_v);

// Independent H-linearity solver: basis of {f | f a_V(h) = a_W(h) f for all
// h in the basis}, as columns of hom coordinates.
Matrix h_linear_maps(const HModule& v, const HModule& w);

// The comodule/H*-module dictionary: h* m = sum h*(m_1) m_0 turns a right
// H-comodule into a left module over dual_hopf(H) on the dual basis, and the
// reverse reading recovers the coaction. Both directions are exact inverses
// on structure matrices.
HModule comodule_to_dual_module(const HComodule& m, HopfPtr h_dual);
HComodule dual_module_to_comodule(const HModule& m, HopfPtr h);

// At finite dimension the locally finite part is all of M; the interesting
// output is the dimension of each cyclic submodule H m.
struct LocallyFinitePart {
    HModule part;
    std::vector<int> cyclic_dims;  // dim(H v_j) per basis vector
};
LocallyFinitePart locally_finite_part(const HModule& m);

// Small standard modules.
HModule trivial_hmodule(HopfPtr h, int dim = 1);
HModule regular_hmodule(HopfPtr h);                       // left regular representation
HModule scalar_character_module(HopfPtr h, const Vec& chi);  // 1-dim, e_i acts by chi[i]
HModule sign_module_c2(HopfPtr c2_like);                  // g acts by -1
HComodule trivial_hcomodule(HopfPtr h, int dim = 1);
HComodule grouplike_line(HopfPtr h, int grouplike_index);  // rho(v) = v (x) e_i

}  // namespace hopfcat
