#pragma once

#include <memory>

#include "hopfcat/exactlin.hpp"
#include "hopfcat/matrix.hpp"

namespace hopfcat {

// A finite-dimensional Hopf algebra by structure constants on a fixed basis.
//
// Conventions: mult[i][j] holds the coordinates of e_i * e_j; comult is the
// sparse tensor Delta(e_i) = sum c * e_left (x) e_right; the antipode matrix
// has S(e_j) as column j. Tensor coordinates are always left-major, so the
// pair (a, i) in H (x) H sits at index a*dim + i.
struct HopfAlgebra {
    struct ComultTerm {
        int left, right;
        Scalar coeff;
    };

    FieldSpec field;
    int dim = 0;
    std::vector<std::string> basis;
    std::vector<std::vector<Vec>> mult;
    Vec unit;
    std::vector<std::vector<ComultTerm>> comult;
    Vec counit;
    Matrix antipode;
    Matrix antipode_inv;

    Vec multiply(const Vec& a, const Vec& b) const;
    Scalar counit_of(const Vec& a) const;
    Matrix left_mult_matrix(const Vec& a) const;
    Matrix comult_dense() const;  // (dim*dim) x dim, column i = Delta(e_i)
    bool is_grouplike(int i) const;
};

using HopfPtr = std::shared_ptr<const HopfAlgebra>;

// Empty report iff all eight Hopf axiom families hold as exact identities:
// associativity, unit, coassociativity, counit, Delta and eps multiplicative,
// the antipode identities, and bijectivity of S.
std::vector<std::string> check_hopf(const HopfAlgebra& h);

// Structural equality of constants (labels ignored).
bool same_structure(const HopfAlgebra& a, const HopfAlgebra& b);

// Finite group presented by its multiplication table: table[i][j] is the
// index of g_i g_j.
struct GroupTable {
    std::vector<std::string> names;
    std::vector<std::vector<int>> table;
};

// Throws on a non-group table (missing identity, non-associative, no inverse).
void validate_group_table(const GroupTable& t);

HopfPtr group_algebra(FieldSpec f, const GroupTable& t);
HopfPtr dual_group_algebra(FieldSpec f, const GroupTable& t);
// The 4-dimensional algebra with g^2 = 1, x^2 = 0, xg = -gx,
// Delta(x) = x (x) 1 + g (x) x, S(x) = -gx. Constants are hard-coded; needs
// characteristic != 2.
HopfPtr sweedler_algebra(FieldSpec f);

// H* with the convolution product and dualized coproduct, on the dual basis.
HopfPtr dual_hopf(const HopfAlgebra& h);

// Recomputes S^-1 from S; throws "antipode not bijective" if S is singular.
Matrix antipode_inverse(const HopfAlgebra& h);

GroupTable cyclic_group_table(int order);

namespace fixtures {
HopfPtr rational_c2();   // Q[C2]
HopfPtr mod2_c2();       // F_2[C2]
HopfPtr sweedler_q();    // Sweedler algebra over Q
}  // namespace fixtures

}  // namespace hopfcat
