#include "hopfcat/exactlin.hpp"

#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hopfcat {

namespace {

std::atomic<Exec> g_exec{Exec::Parallel};

// Below these sizes the OpenMP fork costs more than the row work. Prime-field
// entries are single-limb, so the crossover sits much higher than for
// rationals, whose entries grow during elimination.
constexpr long kParallelThresholdRationals = 2048;
constexpr long kParallelThresholdPrime = 65536;

}  // namespace

Exec default_exec() { return g_exec.load(); }
void set_default_exec(Exec e) { g_exec.store(e); }

RrefResult rref(Matrix a, Exec ex) {
    const int rows = a.rows(), cols = a.cols();
    RrefResult out;
    out.pivot_cols.reserve(cols);

    const long threshold = a.field().kind == FieldSpec::Kind::Rationals ? kParallelThresholdRationals
                                                                        : kParallelThresholdPrime;
    [[maybe_unused]] const bool parallel = ex == Exec::Parallel && static_cast<long>(rows) * cols >= threshold;

    int lead = 0;
    for (int col = 0; col < cols && lead < rows; ++col) {
        int pivot = -1;
        for (int i = lead; i < rows; ++i)
            if (!a.at(i, col).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;

        if (pivot != lead)
            for (int j = col; j < cols; ++j) std::swap(a.at(lead, j), a.at(pivot, j));

        const Scalar inv = a.at(lead, col).inverse();
        for (int j = col; j < cols; ++j) a.at(lead, j) *= inv;

        // Full reduction: clear the pivot column everywhere else. Row updates
        // are independent, which is what the parallel path exploits.
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
        for (int i = 0; i < rows; ++i) {
            if (i == lead || a.at(i, col).is_zero()) continue;
            const Scalar factor = a.at(i, col);
            for (int j = col; j < cols; ++j)
                if (!a.at(lead, j).is_zero()) a.at(i, j) -= factor * a.at(lead, j);
        }

        out.pivot_cols.push_back(col);
        ++lead;
    }

    out.rank = static_cast<int>(out.pivot_cols.size());
    out.r = std::move(a);
    return out;
}

int rank(const Matrix& a, Exec ex) { return rref(a, ex).rank; }

Matrix kernel_basis(const Matrix& a, Exec ex) {
    const FieldSpec f = a.field();
    RrefResult rr = rref(a, ex);
    std::vector<bool> is_pivot(a.cols(), false);
    for (int c : rr.pivot_cols) is_pivot[c] = true;

    std::vector<int> free_cols;
    for (int c = 0; c < a.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    Matrix basis(f, a.cols(), static_cast<int>(free_cols.size()));
    for (int k = 0; k < static_cast<int>(free_cols.size()); ++k) {
        const int fc = free_cols[k];
        basis.at(fc, k) = Scalar::one(f);
        for (int p = 0; p < rr.rank; ++p) basis.at(rr.pivot_cols[p], k) = -rr.r.at(p, fc);
    }
    return basis;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b, Exec ex) {
    if (a.rows() != b.rows()) throw std::invalid_argument("solve: dimension mismatch");
    const FieldSpec f = a.field();
    RrefResult rr = rref(Matrix::hstack(a, b), ex);

    // A pivot landing in the b-block marks an inconsistent column.
    for (int c : rr.pivot_cols)
        if (c >= a.cols()) return std::nullopt;

    Matrix x(f, a.cols(), b.cols());
    for (int p = 0; p < rr.rank; ++p)
        for (int j = 0; j < b.cols(); ++j) x.at(rr.pivot_cols[p], j) = rr.r.at(p, a.cols() + j);
    return x;
}

Matrix inverse(const Matrix& a, Exec ex) {
    if (a.rows() != a.cols()) throw std::invalid_argument("inverse: not square");
    RrefResult rr = rref(Matrix::hstack(a, Matrix::identity(a.field(), a.rows())), ex);
    // All pivots must land inside the a-block, else a is singular.
    for (int i = 0; i < a.rows(); ++i)
        if (i >= static_cast<int>(rr.pivot_cols.size()) || rr.pivot_cols[i] != i)
            throw std::domain_error("inverse: singular matrix");
    Matrix inv(a.field(), a.rows(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.rows(); ++j) inv.at(i, j) = rr.r.at(i, a.cols() + j);
    return inv;
}

bool in_column_span(const Matrix& span, const Matrix& vectors, Exec ex) {
    if (vectors.cols() == 0) return true;
    if (span.rows() != vectors.rows()) throw std::invalid_argument("in_column_span: dimension mismatch");
    return rank(span, ex) == rank(Matrix::hstack(span, vectors), ex);
}

bool same_column_span(const Matrix& a, const Matrix& b, Exec ex) {
    if (a.rows() != b.rows()) throw std::invalid_argument("same_column_span: dimension mismatch");
    const int ra = rank(a, ex), rb = rank(b, ex);
    return ra == rb && rank(Matrix::hstack(a, b), ex) == ra;
}

Subquotient subquotient(const Matrix& z, const Matrix& b, Exec ex) {
    if (z.rows() != b.rows() && !(b.cols() == 0)) throw std::invalid_argument("subquotient: dimension mismatch");
    if (!in_column_span(z, b, ex))
        throw std::domain_error("subquotient: boundaries not contained in cycles (d*d != 0 upstream?)");

    // Pivot columns of [b | z] beyond the b-block are z-columns completing a
    // basis of span(b) to span(z); they represent a basis of the quotient.
    const Matrix stacked = b.cols() == 0 ? z : Matrix::hstack(b, z);
    RrefResult rr = rref(stacked, ex);
    const int b_cols = b.cols();

    Subquotient out;
    std::vector<int> chosen;
    for (int c : rr.pivot_cols)
        if (c >= b_cols) chosen.push_back(c - b_cols);
    out.reps = z.cols_subset(chosen);
    out.dim = static_cast<int>(chosen.size());
    return out;
}

QuotientMap quotient_map(const Matrix& b, int ambient_dim, Exec ex) {
    const FieldSpec f = b.field();
    if (b.cols() > 0 && b.rows() != ambient_dim) throw std::invalid_argument("quotient_map: dimension mismatch");

    // Complete span(b) to K^ambient by standard basis vectors, then read the
    // quotient coordinates off the inverse of the assembled basis.
    RrefResult rb = rref(b, ex);
    Matrix b_ind = b.cols_subset(rb.pivot_cols);
    Matrix stacked = Matrix::hstack(b_ind, Matrix::identity(f, ambient_dim));
    RrefResult rr = rref(stacked, ex);

    std::vector<int> rep_indices;
    for (int c : rr.pivot_cols)
        if (c >= b_ind.cols()) rep_indices.push_back(c - b_ind.cols());

    QuotientMap out;
    out.dim = static_cast<int>(rep_indices.size());
    out.reps = Matrix(f, ambient_dim, out.dim);
    for (int k = 0; k < out.dim; ++k) out.reps.at(rep_indices[k], k) = Scalar::one(f);

    Matrix basis = Matrix::hstack(b_ind, out.reps);  // invertible ambient x ambient
    Matrix inv = inverse(basis, ex);
    out.projection = Matrix(f, out.dim, ambient_dim);
    for (int i = 0; i < out.dim; ++i)
        for (int j = 0; j < ambient_dim; ++j) out.projection.at(i, j) = inv.at(b_ind.cols() + i, j);
    return out;
}

}  // namespace hopfcat
