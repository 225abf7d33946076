#include "hopfcat/hopf.hpp"

#include <sstream>

namespace hopfcat {

namespace {

std::string idx(const HopfAlgebra& h, int i) { return h.basis.size() > static_cast<size_t>(i) ? h.basis[i] : std::to_string(i); }

}  // namespace

Vec HopfAlgebra::multiply(const Vec& a, const Vec& b) const {
    Vec r = vec_zero(field, dim);
    for (int i = 0; i < dim; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; j < dim; ++j) {
            if (b[j].is_zero()) continue;
            const Scalar c = a[i] * b[j];
            for (int k = 0; k < dim; ++k)
                if (!mult[i][j][k].is_zero()) r[k] += c * mult[i][j][k];
        }
    }
    return r;
}

Scalar HopfAlgebra::counit_of(const Vec& a) const {
    Scalar s = Scalar::zero(field);
    for (int i = 0; i < dim; ++i) s += a[i] * counit[i];
    return s;
}

Matrix HopfAlgebra::left_mult_matrix(const Vec& a) const {
    Matrix m(field, dim, dim);
    for (int j = 0; j < dim; ++j) {
        Vec ej = vec_basis(field, dim, j);
        m.set_col(j, multiply(a, ej));
    }
    return m;
}

Matrix HopfAlgebra::comult_dense() const {
    Matrix m(field, dim * dim, dim);
    for (int i = 0; i < dim; ++i)
        for (const auto& t : comult[i]) m.at(t.left * dim + t.right, i) += t.coeff;
    return m;
}

bool HopfAlgebra::is_grouplike(int i) const {
    if (!counit[i].is_one()) return false;
    Matrix expected(field, dim * dim, 1);
    expected.at(i * dim + i, 0) = Scalar::one(field);
    Matrix actual(field, dim * dim, 1);
    for (const auto& t : comult[i]) actual.at(t.left * dim + t.right, 0) += t.coeff;
    return expected == actual;
}

std::vector<std::string> check_hopf(const HopfAlgebra& h) {
    std::vector<std::string> report;
    const FieldSpec f = h.field;
    const int n = h.dim;

    // Shape checks first; anything off here makes the axiom loops meaningless.
    if (static_cast<int>(h.mult.size()) != n) throw std::invalid_argument("check_hopf: mult tensor shape");
    for (const auto& row : h.mult) {
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("check_hopf: mult tensor shape");
        for (const auto& v : row)
            if (static_cast<int>(v.size()) != n) throw std::invalid_argument("check_hopf: mult tensor shape");
    }
    if (static_cast<int>(h.unit.size()) != n || static_cast<int>(h.counit.size()) != n ||
        static_cast<int>(h.comult.size()) != n || h.antipode.rows() != n || h.antipode.cols() != n ||
        h.antipode_inv.rows() != n || h.antipode_inv.cols() != n)
        throw std::invalid_argument("check_hopf: tensor dimension mismatch");

    auto basis_vec = [&](int i) { return vec_basis(f, n, i); };

    // (1) associativity
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Vec lhs = h.multiply(h.multiply(basis_vec(i), basis_vec(j)), basis_vec(k));
                Vec rhs = h.multiply(basis_vec(i), h.multiply(basis_vec(j), basis_vec(k)));
                if (lhs != rhs) {
                    report.push_back("associativity fails at (" + idx(h, i) + "," + idx(h, j) + "," + idx(h, k) + ")");
                }
            }

    // (2) unit laws
    for (int i = 0; i < n; ++i) {
        if (h.multiply(h.unit, basis_vec(i)) != basis_vec(i)) report.push_back("left unit law fails at " + idx(h, i));
        if (h.multiply(basis_vec(i), h.unit) != basis_vec(i)) report.push_back("right unit law fails at " + idx(h, i));
    }

    const Matrix delta = h.comult_dense();

    // (3) coassociativity: (Delta (x) id) Delta = (id (x) Delta) Delta
    {
        Matrix lhs(f, n * n * n, n), rhs(f, n * n * n, n);
        for (int i = 0; i < n; ++i)
            for (const auto& t : h.comult[i]) {
                for (const auto& u : h.comult[t.left]) lhs.at((u.left * n + u.right) * n + t.right, i) += t.coeff * u.coeff;
                for (const auto& u : h.comult[t.right]) rhs.at((t.left * n + u.left) * n + u.right, i) += t.coeff * u.coeff;
            }
        if (lhs != rhs) report.push_back("coassociativity fails");
    }

    // (4) counit laws: (eps (x) id) Delta = id = (id (x) eps) Delta
    for (int i = 0; i < n; ++i) {
        Vec left = vec_zero(f, n), right = vec_zero(f, n);
        for (const auto& t : h.comult[i]) {
            left[t.right] += h.counit[t.left] * t.coeff;
            right[t.left] += h.counit[t.right] * t.coeff;
        }
        if (left != basis_vec(i)) report.push_back("left counit law fails at " + idx(h, i));
        if (right != basis_vec(i)) report.push_back("right counit law fails at " + idx(h, i));
    }

    // (5) Delta is an algebra map: Delta(ab) = Delta(a)Delta(b), Delta(1) = 1 (x) 1
    {
        auto tensor_square_mult = [&](const Matrix& u, const Matrix& v) {
            // product in H (x) H of two columns of coordinates
            Matrix r(f, n * n, 1);
            for (int a = 0; a < n * n; ++a) {
                if (u.at(a, 0).is_zero()) continue;
                for (int b = 0; b < n * n; ++b) {
                    if (v.at(b, 0).is_zero()) continue;
                    const Scalar c = u.at(a, 0) * v.at(b, 0);
                    const int a1 = a / n, a2 = a % n, b1 = b / n, b2 = b % n;
                    for (int k1 = 0; k1 < n; ++k1) {
                        if (h.mult[a1][b1][k1].is_zero()) continue;
                        for (int k2 = 0; k2 < n; ++k2)
                            if (!h.mult[a2][b2][k2].is_zero())
                                r.at(k1 * n + k2, 0) += c * h.mult[a1][b1][k1] * h.mult[a2][b2][k2];
                    }
                }
            }
            return r;
        };
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Matrix lhs = Matrix::column(h.mult[i][j]);
                lhs = delta * lhs;
                Matrix rhs = tensor_square_mult(delta.cols_subset({i}), delta.cols_subset({j}));
                if (lhs != rhs) report.push_back("Delta not multiplicative at (" + idx(h, i) + "," + idx(h, j) + ")");
            }
        Matrix d1 = delta * Matrix::column(h.unit);
        Matrix unit_sq(f, n * n, 1);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) unit_sq.at(a * n + b, 0) = h.unit[a] * h.unit[b];
        if (d1 != unit_sq) report.push_back("Delta(1) != 1 (x) 1");
    }

    // (6) eps is an algebra map
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (h.counit_of(h.mult[i][j]) != h.counit[i] * h.counit[j])
                report.push_back("counit not multiplicative at (" + idx(h, i) + "," + idx(h, j) + ")");
    if (!h.counit_of(h.unit).is_one()) report.push_back("counit(1) != 1");

    // (7) antipode identities: sum S(h1) h2 = eps(h) 1 = sum h1 S(h2)
    for (int i = 0; i < n; ++i) {
        Vec lhs = vec_zero(f, n), rhs = vec_zero(f, n);
        for (const auto& t : h.comult[i]) {
            lhs = vec_add(lhs, vec_scaled(h.multiply(h.antipode.col(t.left), vec_basis(f, n, t.right)), t.coeff));
            rhs = vec_add(rhs, vec_scaled(h.multiply(vec_basis(f, n, t.left), h.antipode.col(t.right)), t.coeff));
        }
        Vec expected = vec_scaled(h.unit, h.counit[i]);
        if (lhs != expected) report.push_back("antipode identity S(h1)h2 = eps(h)1 fails at " + idx(h, i));
        if (rhs != expected) report.push_back("antipode identity h1S(h2) = eps(h)1 fails at " + idx(h, i));
    }

    // (8) S bijective with the stored inverse
    const Matrix id = Matrix::identity(f, n);
    if (h.antipode * h.antipode_inv != id || h.antipode_inv * h.antipode != id)
        report.push_back("antipode inverse is not a two-sided inverse");

    return report;
}

bool same_structure(const HopfAlgebra& a, const HopfAlgebra& b) {
    if (!(a.field == b.field) || a.dim != b.dim) return false;
    if (a.mult != b.mult || a.unit != b.unit || a.counit != b.counit) return false;
    if (a.comult_dense() != b.comult_dense()) return false;
    return a.antipode == b.antipode && a.antipode_inv == b.antipode_inv;
}

void validate_group_table(const GroupTable& t) {
    const int n = static_cast<int>(t.table.size());
    if (n == 0) throw std::invalid_argument("group table: empty");
    for (const auto& row : t.table) {
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("group table: not square");
        for (int v : row)
            if (v < 0 || v >= n) throw std::invalid_argument("group table: entry out of range");
    }
    int identity = -1;
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int j = 0; j < n; ++j) ok = ok && t.table[e][j] == j && t.table[j][e] == j;
        if (ok) {
            identity = e;
            break;
        }
    }
    if (identity < 0) throw std::invalid_argument("group table: no identity element");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (t.table[t.table[i][j]][k] != t.table[i][t.table[j][k]])
                    throw std::invalid_argument("group table: not associative");
    for (int i = 0; i < n; ++i) {
        bool has_inverse = false;
        for (int j = 0; j < n; ++j) has_inverse = has_inverse || (t.table[i][j] == identity && t.table[j][i] == identity);
        if (!has_inverse) throw std::invalid_argument("group table: missing inverse");
    }
}

namespace {

int table_identity(const GroupTable& t) {
    const int n = static_cast<int>(t.table.size());
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int j = 0; j < n; ++j) ok = ok && t.table[e][j] == j && t.table[j][e] == j;
        if (ok) return e;
    }
    throw std::invalid_argument("group table: no identity element");
}

int table_inverse(const GroupTable& t, int i) {
    const int e = table_identity(t);
    for (int j = 0; j < static_cast<int>(t.table.size()); ++j)
        if (t.table[i][j] == e) return j;
    throw std::invalid_argument("group table: missing inverse");
}

}  // namespace

HopfPtr group_algebra(FieldSpec f, const GroupTable& t) {
    validate_group_table(t);
    const int n = static_cast<int>(t.table.size());
    auto h = std::make_shared<HopfAlgebra>();
    h->field = f;
    h->dim = n;
    h->basis = t.names.empty() ? std::vector<std::string>(n) : t.names;
    if (t.names.empty())
        for (int i = 0; i < n; ++i) h->basis[i] = "g" + std::to_string(i);

    h->mult.assign(n, std::vector<Vec>(n, vec_zero(f, n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) h->mult[i][j][t.table[i][j]] = Scalar::one(f);

    h->unit = vec_basis(f, n, table_identity(t));
    h->comult.assign(n, {});
    for (int i = 0; i < n; ++i) h->comult[i].push_back({i, i, Scalar::one(f)});  // Delta(g) = g (x) g
    h->counit = Vec(n, Scalar::one(f));
    h->antipode = Matrix(f, n, n);
    for (int i = 0; i < n; ++i) h->antipode.at(table_inverse(t, i), i) = Scalar::one(f);  // S(g) = g^-1
    h->antipode_inv = inverse(h->antipode);
    return h;
}

HopfPtr dual_group_algebra(FieldSpec f, const GroupTable& t) { return dual_hopf(*group_algebra(f, t)); }

HopfPtr sweedler_algebra(FieldSpec f) {
    if (f.kind == FieldSpec::Kind::PrimeField && f.p == 2)
        throw std::invalid_argument("sweedler_algebra: needs characteristic != 2");
    const int n = 4;  // basis 1, g, x, gx
    auto h = std::make_shared<HopfAlgebra>();
    h->field = f;
    h->dim = n;
    h->basis = {"1", "g", "x", "gx"};
    const Scalar one = Scalar::one(f);
    const Scalar minus_one = -one;

    // row * col products in the basis order {1, g, x, gx}
    // g*g=1, g*x=gx, g*gx=x, x*g=-gx, x*x=0, x*gx=0, gx*g=-x, gx*x=0, gx*gx=0
    h->mult.assign(n, std::vector<Vec>(n, vec_zero(f, n)));
    auto set = [&](int i, int j, int k, const Scalar& c) { h->mult[i][j][k] = c; };
    for (int j = 0; j < n; ++j) set(0, j, j, one), set(j, 0, j, one);
    set(1, 1, 0, one);
    set(1, 2, 3, one);
    set(1, 3, 2, one);
    set(2, 1, 3, minus_one);
    set(3, 1, 2, minus_one);
    // x*x, x*gx, gx*x, gx*gx are all zero

    h->unit = vec_basis(f, n, 0);
    h->comult.assign(n, {});
    h->comult[0].push_back({0, 0, one});                                  // Delta(1) = 1 (x) 1
    h->comult[1].push_back({1, 1, one});                                  // Delta(g) = g (x) g
    h->comult[2].push_back({2, 0, one});                                  // Delta(x) = x (x) 1 + g (x) x
    h->comult[2].push_back({1, 2, one});
    h->comult[3].push_back({3, 1, one});                                  // Delta(gx) = gx (x) g + 1 (x) gx
    h->comult[3].push_back({0, 3, one});
    h->counit = {one, one, Scalar::zero(f), Scalar::zero(f)};

    // S(1)=1, S(g)=g, S(x)=-gx, S(gx)=x
    h->antipode = Matrix(f, n, n);
    h->antipode.at(0, 0) = one;
    h->antipode.at(1, 1) = one;
    h->antipode.at(3, 2) = minus_one;
    h->antipode.at(2, 3) = one;
    h->antipode_inv = inverse(h->antipode);
    return h;
}

HopfPtr dual_hopf(const HopfAlgebra& h) {
    const int n = h.dim;
    const FieldSpec f = h.field;
    auto d = std::make_shared<HopfAlgebra>();
    d->field = f;
    d->dim = n;
    d->basis.resize(n);
    for (int i = 0; i < n; ++i) d->basis[i] = h.basis[i] + "*";

    // convolution: coefficient of e_k* in e_i* e_j* is the (i,j) coefficient of Delta(e_k)
    d->mult.assign(n, std::vector<Vec>(n, vec_zero(f, n)));
    for (int k = 0; k < n; ++k)
        for (const auto& t : h.comult[k]) d->mult[t.left][t.right][k] += t.coeff;

    d->unit = h.counit;
    d->comult.assign(n, {});
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (!h.mult[i][j][k].is_zero()) d->comult[k].push_back({i, j, h.mult[i][j][k]});
    d->counit = h.unit;
    d->antipode = h.antipode.transpose();
    d->antipode_inv = h.antipode_inv.transpose();
    return d;
}

Matrix antipode_inverse(const HopfAlgebra& h) {
    try {
        return inverse(h.antipode);
    } catch (const std::domain_error&) {
        throw std::domain_error("antipode not bijective");
    }
}

GroupTable cyclic_group_table(int order) {
    GroupTable t;
    t.names.resize(order);
    t.table.assign(order, std::vector<int>(order));
    for (int i = 0; i < order; ++i) {
        t.names[i] = i == 0 ? "e" : (order == 2 ? "g" : "g" + std::to_string(i));
        for (int j = 0; j < order; ++j) t.table[i][j] = (i + j) % order;
    }
    return t;
}

namespace fixtures {

HopfPtr rational_c2() { return group_algebra(FieldSpec::rationals(), cyclic_group_table(2)); }
HopfPtr mod2_c2() { return group_algebra(FieldSpec::prime_field(2), cyclic_group_table(2)); }
HopfPtr sweedler_q() { return sweedler_algebra(FieldSpec::rationals()); }

}  // namespace fixtures

}  // namespace hopfcat
