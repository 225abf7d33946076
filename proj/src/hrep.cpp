#include "hopfcat/hrep.hpp"

namespace hopfcat {

Matrix HModule::act(const Vec& h_coords) const {
    Matrix r(hopf->field, dim, dim);
    for (int i = 0; i < hopf->dim; ++i)
        if (!h_coords[i].is_zero()) r = r + action[i].scaled(h_coords[i]);
    return r;
}

Matrix HModule::act_antipode(int i) const { return act(hopf->antipode.col(i)); }

std::vector<std::string> validate_hmodule(const HModule& m) {
    std::vector<std::string> report;
    const auto& h = *m.hopf;
    if (static_cast<int>(m.action.size()) != h.dim) throw std::invalid_argument("validate_hmodule: action count");
    for (const auto& a : m.action)
        if (a.rows() != m.dim || a.cols() != m.dim) throw std::invalid_argument("validate_hmodule: action shape");

    if (m.act(h.unit) != Matrix::identity(h.field, m.dim)) report.push_back("unit of H does not act as identity");

    for (int i = 0; i < h.dim; ++i)
        for (int j = 0; j < h.dim; ++j) {
            Matrix lhs = m.action[i] * m.action[j];
            Matrix rhs(h.field, m.dim, m.dim);
            for (int k = 0; k < h.dim; ++k)
                if (!h.mult[i][j][k].is_zero()) rhs = rhs + m.action[k].scaled(h.mult[i][j][k]);
            if (lhs != rhs)
                report.push_back("representation law fails at (" + h.basis[i] + "," + h.basis[j] + ")");
        }
    return report;
}

std::vector<std::string> validate_hcomodule(const HComodule& m) {
    std::vector<std::string> report;
    const auto& h = *m.hopf;
    const int n = h.dim, d = m.dim;
    if (m.coaction.rows() != d * n || m.coaction.cols() != d)
        throw std::invalid_argument("validate_hcomodule: coaction shape");

    // counit law: (id (x) eps) rho = id
    bool counit_ok = true;
    for (int j = 0; j < d && counit_ok; ++j)
        for (int a = 0; a < d && counit_ok; ++a) {
            Scalar s = Scalar::zero(h.field);
            for (int i = 0; i < n; ++i) s += h.counit[i] * m.coaction.at(a * n + i, j);
            Scalar expected = a == j ? Scalar::one(h.field) : Scalar::zero(h.field);
            if (s != expected) counit_ok = false;
        }
    if (!counit_ok) report.push_back("counit law fails");

    // coassociativity: (rho (x) id) rho = (id (x) Delta) rho in V (x) H (x) H
    Matrix lhs(h.field, d * n * n, d), rhs(h.field, d * n * n, d);
    for (int j = 0; j < d; ++j)
        for (int a = 0; a < d; ++a)
            for (int i = 0; i < n; ++i) {
                const Scalar& c = m.coaction.at(a * n + i, j);
                if (c.is_zero()) continue;
                for (int b = 0; b < d; ++b)
                    for (int k = 0; k < n; ++k) {
                        const Scalar& c2 = m.coaction.at(b * n + k, a);
                        if (!c2.is_zero()) lhs.at((b * n + k) * n + i, j) += c * c2;
                    }
                for (const auto& t : h.comult[i]) rhs.at((a * n + t.left) * n + t.right, j) += c * t.coeff;
            }
    if (lhs != rhs) report.push_back("coassociativity of the coaction fails");
    return report;
}

Matrix invariants(const HModule& m) {
    const auto& h = *m.hopf;
    Matrix stacked(h.field, 0, m.dim);
    for (int i = 0; i < h.dim; ++i) {
        Matrix block = m.action[i] - Matrix::identity(h.field, m.dim).scaled(h.counit[i]);
        stacked = stacked.rows() == 0 ? block : Matrix::vstack(stacked, block);
    }
    return kernel_basis(stacked);
}

Matrix coinvariants(const HComodule& m) {
    const auto& h = *m.hopf;
    const int n = h.dim, d = m.dim;
    Matrix triv(h.field, d * n, d);  // v_j -> v_j (x) 1_H
    for (int j = 0; j < d; ++j)
        for (int i = 0; i < n; ++i) triv.at(j * n + i, j) = h.unit[i];
    return kernel_basis(m.coaction - triv);
}

HModule tensor_hmodules(const HModule& a, const HModule& b) {
    if (a.hopf != b.hopf && !same_structure(*a.hopf, *b.hopf))
        throw std::invalid_argument("tensor_hmodules: mismatched Hopf algebras");
    const auto& h = *a.hopf;
    HModule r{a.hopf, a.dim * b.dim, {}};
    r.action.reserve(h.dim);
    for (int i = 0; i < h.dim; ++i) {
        Matrix m(h.field, r.dim, r.dim);
        for (const auto& t : h.comult[i])
            m = m + Matrix::kronecker(a.action[t.left], b.action[t.right]).scaled(t.coeff);
        r.action.push_back(std::move(m));
    }
    return r;
}

HComodule tensor_hcomodules(const HComodule& a, const HComodule& b) {
    if (a.hopf != b.hopf && !same_structure(*a.hopf, *b.hopf))
        throw std::invalid_argument("tensor_hcomodules: mismatched Hopf algebras");
    const auto& h = *a.hopf;
    const int n = h.dim, da = a.dim, db = b.dim;
    HComodule r{a.hopf, da * db, Matrix(h.field, da * db * n, da * db)};
    for (int j = 0; j < da; ++j)
        for (int l = 0; l < db; ++l)
            for (int p = 0; p < da; ++p)
                for (int i = 0; i < n; ++i) {
                    const Scalar& c1 = a.coaction.at(p * n + i, j);
                    if (c1.is_zero()) continue;
                    for (int q = 0; q < db; ++q)
                        for (int k = 0; k < n; ++k) {
                            const Scalar& c2 = b.coaction.at(q * n + k, l);
                            if (c2.is_zero()) continue;
                            const Scalar c = c1 * c2;
                            for (int s = 0; s < n; ++s)
                                if (!h.mult[i][k][s].is_zero())
                                    r.coaction.at((p * db + q) * n + s, j * db + l) += c * h.mult[i][k][s];
                        }
                }
    return r;
}

HModule hom_hmodule(const HModule& v, const HModule& w) {
    if (v.hopf != w.hopf && !same_structure(*v.hopf, *w.hopf))
        throw std::invalid_argument("hom_hmodule: mismatched Hopf algebras");
    const auto& h = *v.hopf;
    const int dv = v.dim, dw = w.dim;
    HModule r{v.hopf, dv * dw, {}};
    for (int i = 0; i < h.dim; ++i) {
        Matrix m(h.field, dv * dw, dv * dw);
        for (const auto& t : h.comult[i]) {
            const Matrix wp = w.action[t.left];
            const Matrix vs = v.act_antipode(t.right);
            // basis map E_(a,b): v_b -> w_a; its image under h is W_h1 E V_S(h2)
            for (int a = 0; a < dw; ++a)
                for (int b = 0; b < dv; ++b)
                    for (int a2 = 0; a2 < dw; ++a2) {
                        if (wp.at(a2, a).is_zero()) continue;
                        for (int b2 = 0; b2 < dv; ++b2)
                            if (!vs.at(b, b2).is_zero())
                                m.at(a2 * dv + b2, a * dv + b) += t.coeff * wp.at(a2, a) * vs.at(b, b2);
                    }
        }
        r.action.push_back(std::move(m));
    }
    return r;
}

Vec hom_coords_of_map(const Matrix& f) {
    Vec v = vec_zero(f.field(), f.rows() * f.cols());
    for (int a = 0; a < f.rows(); ++a)
        for (int b = 0; b < f.cols(); ++b) v[a * f.cols() + b] = f.at(a, b);
    return v;
}

Matrix map_of_hom_coords(const Vec& coords, int dim_w, int dim_v) {
    Matrix f(coords.empty() ? FieldSpec::rationals() : coords[0].field(), dim_w, dim_v);
    for (int a = 0; a < dim_w; ++a)
        for (int b = 0; b < dim_v; ++b) f.at(a, b) = coords[a * dim_v + b];
    return f;
}

Matrix h_linear_maps(const HModule& v, const HModule& w) {
    const auto& h = *v.hopf;
    const int dv = v.dim, dw = w.dim;
    // unknown f (dw x dv): f a_V(e_i) - a_W(e_i) f = 0, blocks stacked per i
    Matrix system(h.field, 0, dv * dw);
    for (int i = 0; i < h.dim; ++i) {
        Matrix block(h.field, dv * dw, dv * dw);
        for (int a = 0; a < dw; ++a)
            for (int b = 0; b < dv; ++b) {
                for (int c = 0; c < dv; ++c) block.at(a * dv + b, a * dv + c) += v.action[i].at(c, b);
                for (int c = 0; c < dw; ++c) block.at(a * dv + b, c * dv + b) -= w.action[i].at(a, c);
            }
        system = system.rows() == 0 ? block : Matrix::vstack(system, block);
    }
    return kernel_basis(system);
}

HModule comodule_to_dual_module(const HComodule& m, HopfPtr h_dual) {
    const int n = m.hopf->dim, d = m.dim;
    if (h_dual->dim != n) throw std::invalid_argument("comodule_to_dual_module: dual dimension mismatch");
    HModule r{h_dual, d, {}};
    for (int i = 0; i < n; ++i) {
        Matrix a(m.hopf->field, d, d);
        for (int j = 0; j < d; ++j)
            for (int p = 0; p < d; ++p) a.at(p, j) = m.coaction.at(p * n + i, j);
        r.action.push_back(std::move(a));
    }
    return r;
}

HComodule dual_module_to_comodule(const HModule& m, HopfPtr h) {
    const int n = h->dim, d = m.dim;
    if (static_cast<int>(m.action.size()) != n)
        throw std::invalid_argument("dual_module_to_comodule: dimension mismatch");
    HComodule r{h, d, Matrix(h->field, d * n, d)};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < d; ++j)
            for (int p = 0; p < d; ++p) r.coaction.at(p * n + i, j) = m.action[i].at(p, j);
    return r;
}

LocallyFinitePart locally_finite_part(const HModule& m) {
    LocallyFinitePart out{m, {}};
    const auto& h = *m.hopf;
    for (int j = 0; j < m.dim; ++j) {
        Matrix orbit(h.field, m.dim, h.dim);
        for (int i = 0; i < h.dim; ++i)
            for (int p = 0; p < m.dim; ++p) orbit.at(p, i) = m.action[i].at(p, j);
        out.cyclic_dims.push_back(rank(orbit));
    }
    return out;
}

HModule trivial_hmodule(HopfPtr h, int dim) {
    HModule r{h, dim, {}};
    for (int i = 0; i < h->dim; ++i) r.action.push_back(Matrix::identity(h->field, dim).scaled(h->counit[i]));
    return r;
}

HModule regular_hmodule(HopfPtr h) {
    HModule r{h, h->dim, {}};
    for (int i = 0; i < h->dim; ++i) r.action.push_back(h->left_mult_matrix(vec_basis(h->field, h->dim, i)));
    return r;
}

HModule scalar_character_module(HopfPtr h, const Vec& chi) {
    HModule r{h, 1, {}};
    for (int i = 0; i < h->dim; ++i) {
        Matrix a(h->field, 1, 1);
        a.at(0, 0) = chi[i];
        r.action.push_back(std::move(a));
    }
    return r;
}

HModule sign_module_c2(HopfPtr c2_like) {
    if (c2_like->dim != 2) throw std::invalid_argument("sign_module_c2: needs a 2-dimensional group algebra");
    return scalar_character_module(c2_like, {Scalar::one(c2_like->field), -Scalar::one(c2_like->field)});
}

HComodule trivial_hcomodule(HopfPtr h, int dim) {
    HComodule r{h, dim, Matrix(h->field, dim * h->dim, dim)};
    for (int j = 0; j < dim; ++j)
        for (int i = 0; i < h->dim; ++i) r.coaction.at(j * h->dim + i, j) = h->unit[i];
    return r;
}

HComodule grouplike_line(HopfPtr h, int grouplike_index) {
    if (!h->is_grouplike(grouplike_index))
        throw std::invalid_argument("grouplike_line: basis element is not grouplike");
    HComodule r{h, 1, Matrix(h->field, h->dim, 1)};
    r.coaction.at(grouplike_index, 0) = Scalar::one(h->field);
    return r;
}

}  // namespace hopfcat
