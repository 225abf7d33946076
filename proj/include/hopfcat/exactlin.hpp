#pragma once

#include <optional>

#include "hopfcat/matrix.hpp"

namespace hopfcat {

// Exact linear algebra over Q and F_p. Everything downstream (Hom solvers,
// resolutions, spectral-sequence pages) reduces to these primitives.
//
// Each kernel has a serial reference implementation and an OpenMP one. The
// pivot walk is identical in both (first nonzero entry in column order), row
// updates are independent and the arithmetic is exact, so both paths return
// bit-identical results; tests assert this and bench/ compares their speed.
enum class Exec { Serial, Parallel };

Exec default_exec();
void set_default_exec(Exec e);

struct RrefResult {
    Matrix r;                    // reduced row echelon form
    std::vector<int> pivot_cols;
    int rank = 0;
};

RrefResult rref(Matrix a, Exec ex = default_exec());
int rank(const Matrix& a, Exec ex = default_exec());

// Columns form a basis of ker(a); rank(result) = cols(a) - rank(a).
Matrix kernel_basis(const Matrix& a, Exec ex = default_exec());

// One exact solution of a*x = b (b may have several columns), or nullopt
// when some column of b lies outside im(a). Throws on a row-count mismatch.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b, Exec ex = default_exec());

Matrix inverse(const Matrix& a, Exec ex = default_exec());

bool in_column_span(const Matrix& span, const Matrix& vectors, Exec ex = default_exec());
bool same_column_span(const Matrix& a, const Matrix& b, Exec ex = default_exec());

// dim and representatives of span(z)/span(b); the reps are columns of z
// extending a basis of span(b) to span(z). Requires span(b) <= span(z),
// otherwise throws (an inconsistent complex upstream).
struct Subquotient {
    int dim = 0;
    Matrix reps;
};
Subquotient subquotient(const Matrix& z, const Matrix& b, Exec ex = default_exec());

// Quotient of K^ambient_dim by span(b): 'projection' maps ambient coordinates
// to quotient coordinates, 'reps' is a section picking standard basis vectors.
struct QuotientMap {
    Matrix projection;  // dim x ambient
    Matrix reps;        // ambient x dim
    int dim = 0;
};
QuotientMap quotient_map(const Matrix& b, int ambient_dim, Exec ex = default_exec());

}  // namespace hopfcat
