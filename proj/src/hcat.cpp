#include "hopfcat/hcat.hpp"

namespace hopfcat {

Vec LinCategory::compose(int x, int y, int z, const Vec& f, const Vec& g) const {
    const Matrix& t = compose_t[x][y][z];
    const int df = hom_dim(y, z), dg = hom_dim(x, y);
    if (static_cast<int>(f.size()) != df || static_cast<int>(g.size()) != dg)
        throw std::invalid_argument("compose: coordinate length mismatch");
    Vec r = vec_zero(field, hom_dim(x, z));
    for (int a = 0; a < df; ++a) {
        if (f[a].is_zero()) continue;
        for (int b = 0; b < dg; ++b) {
            if (g[b].is_zero()) continue;
            const Scalar c = f[a] * g[b];
            for (int k = 0; k < hom_dim(x, z); ++k)
                if (!t.at(k, a * dg + b).is_zero()) r[k] += c * t.at(k, a * dg + b);
        }
    }
    return r;
}

std::vector<std::string> validate_category(const LinCategory& c) {
    std::vector<std::string> report;
    const int n = c.n_objects();
    if (static_cast<int>(c.hom_labels.size()) != n || static_cast<int>(c.compose_t.size()) != n ||
        static_cast<int>(c.identity.size()) != n)
        throw std::invalid_argument("validate_category: table sizes");
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                const Matrix& t = c.compose_t[x][y][z];
                if (t.rows() != c.hom_dim(x, z) || t.cols() != c.hom_dim(y, z) * c.hom_dim(x, y))
                    throw std::invalid_argument("validate_category: compose tensor shape at (" + c.objects[x] + "," +
                                                c.objects[y] + "," + c.objects[z] + ")");
            }

    // identity laws
    for (int x = 0; x < n; ++x) {
        if (static_cast<int>(c.identity[x].size()) != c.hom_dim(x, x))
            throw std::invalid_argument("validate_category: identity length");
        for (int y = 0; y < n; ++y) {
            for (int b = 0; b < c.hom_dim(x, y); ++b) {
                Vec g = vec_basis(c.field, c.hom_dim(x, y), b);
                if (c.compose(x, x, y, g, c.identity[x]) != g)
                    report.push_back("right identity law fails on hom(" + c.objects[x] + "," + c.objects[y] + ")");
                if (c.compose(x, y, y, c.identity[y], g) != g)
                    report.push_back("left identity law fails on hom(" + c.objects[x] + "," + c.objects[y] + ")");
            }
        }
    }

    // associativity over all basis triples
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                for (int w = 0; w < n; ++w)
                    for (int a = 0; a < c.hom_dim(z, w); ++a)
                        for (int b = 0; b < c.hom_dim(y, z); ++b)
                            for (int e = 0; e < c.hom_dim(x, y); ++e) {
                                Vec f = vec_basis(c.field, c.hom_dim(z, w), a);
                                Vec g = vec_basis(c.field, c.hom_dim(y, z), b);
                                Vec k = vec_basis(c.field, c.hom_dim(x, y), e);
                                Vec lhs = c.compose(x, y, w, c.compose(y, z, w, f, g), k);
                                Vec rhs = c.compose(x, z, w, f, c.compose(x, y, z, g, k));
                                if (lhs != rhs)
                                    report.push_back("associativity fails over (" + c.objects[x] + "," + c.objects[y] +
                                                     "," + c.objects[z] + "," + c.objects[w] + ")");
                            }
    return report;
}

bool same_structure(const LinCategory& a, const LinCategory& b) {
    if (!(a.field == b.field) || a.n_objects() != b.n_objects()) return false;
    for (int x = 0; x < a.n_objects(); ++x) {
        if (a.identity[x] != b.identity[x]) return false;
        for (int y = 0; y < a.n_objects(); ++y) {
            if (a.hom_dim(x, y) != b.hom_dim(x, y)) return false;
            for (int z = 0; z < a.n_objects(); ++z)
                if (a.compose_t[x][y][z] != b.compose_t[x][y][z]) return false;
        }
    }
    return true;
}

HModule HCategory::hom_module(int x, int y) const { return HModule{hopf, base->hom_dim(x, y), action[x][y]}; }

HComodule CoHCategory::hom_comodule(int x, int y) const {
    return HComodule{hopf, base->hom_dim(x, y), coaction[x][y]};
}

std::vector<std::string> validate_h_category(const HCategory& c) {
    std::vector<std::string> report;
    const auto& b = *c.base;
    const auto& h = *c.hopf;
    const int n = b.n_objects();

    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            auto sub = validate_hmodule(c.hom_module(x, y));
            for (auto& line : sub)
                report.push_back("hom(" + b.objects[x] + "," + b.objects[y] + "): " + line);
        }

    // h(id_X) = eps(h) id_X
    for (int x = 0; x < n; ++x)
        for (int i = 0; i < h.dim; ++i)
            if (c.action[x][x][i] * Matrix::column(b.identity[x]) !=
                Matrix::column(b.identity[x]).scaled(h.counit[i]))
                report.push_back("identity of " + b.objects[x] + " is not H-fixed under " + h.basis[i]);

    // equivariant composition: h(fg) = sum h1(f) h2(g)
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                for (int i = 0; i < h.dim; ++i)
                    for (int a = 0; a < b.hom_dim(y, z); ++a)
                        for (int e = 0; e < b.hom_dim(x, y); ++e) {
                            Vec f = vec_basis(b.field, b.hom_dim(y, z), a);
                            Vec g = vec_basis(b.field, b.hom_dim(x, y), e);
                            Vec lhs = c.action[x][z][i] * b.compose(x, y, z, f, g);
                            Vec rhs = vec_zero(b.field, b.hom_dim(x, z));
                            for (const auto& t : h.comult[i]) {
                                Vec tf = c.action[y][z][t.left] * f;
                                Vec tg = c.action[x][y][t.right] * g;
                                rhs = vec_add(rhs, vec_scaled(b.compose(x, y, z, tf, tg), t.coeff));
                            }
                            if (lhs != rhs)
                                report.push_back("H-equivariance of composition fails over (" + b.objects[x] + "," +
                                                 b.objects[y] + "," + b.objects[z] + ") at " + h.basis[i]);
                        }
    return report;
}

std::vector<std::string> validate_coh_category(const CoHCategory& d) {
    std::vector<std::string> report;
    const auto& b = *d.base;
    const auto& h = *d.hopf;
    const int n = b.n_objects(), hd = h.dim;

    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            auto sub = validate_hcomodule(d.hom_comodule(x, y));
            for (auto& line : sub)
                report.push_back("hom(" + b.objects[x] + "," + b.objects[y] + "): " + line);
        }

    // rho(id_X) = id_X (x) 1_H
    for (int x = 0; x < n; ++x) {
        const int dx = b.hom_dim(x, x);
        Matrix expected(b.field, dx * hd, 1);
        for (int a = 0; a < dx; ++a)
            for (int i = 0; i < hd; ++i) expected.at(a * hd + i, 0) = b.identity[x][a] * h.unit[i];
        if (d.coaction[x][x] * Matrix::column(b.identity[x]) != expected)
            report.push_back("rho(id_" + b.objects[x] + ") != id (x) 1");
    }

    // coequivariant composition: rho(fg) = rho(f) rho(g)
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                for (int a = 0; a < b.hom_dim(y, z); ++a)
                    for (int e = 0; e < b.hom_dim(x, y); ++e) {
                        Vec f = vec_basis(b.field, b.hom_dim(y, z), a);
                        Vec g = vec_basis(b.field, b.hom_dim(x, y), e);
                        const int dxz = b.hom_dim(x, z);
                        Matrix lhs = d.coaction[x][z] * Matrix::column(b.compose(x, y, z, f, g));
                        Matrix rhs(b.field, dxz * hd, 1);
                        const Matrix rf = d.coaction[y][z] * Matrix::column(f);
                        const Matrix rg = d.coaction[x][y] * Matrix::column(g);
                        for (int p = 0; p < b.hom_dim(y, z); ++p)
                            for (int i = 0; i < hd; ++i) {
                                const Scalar& c1 = rf.at(p * hd + i, 0);
                                if (c1.is_zero()) continue;
                                for (int q = 0; q < b.hom_dim(x, y); ++q)
                                    for (int k = 0; k < hd; ++k) {
                                        const Scalar& c2 = rg.at(q * hd + k, 0);
                                        if (c2.is_zero()) continue;
                                        Vec comp = b.compose(x, y, z, vec_basis(b.field, b.hom_dim(y, z), p),
                                                             vec_basis(b.field, b.hom_dim(x, y), q));
                                        for (int t = 0; t < dxz; ++t) {
                                            if (comp[t].is_zero()) continue;
                                            for (int s = 0; s < hd; ++s)
                                                if (!h.mult[i][k][s].is_zero())
                                                    rhs.at(t * hd + s, 0) += c1 * c2 * comp[t] * h.mult[i][k][s];
                                        }
                                    }
                            }
                        if (lhs != rhs)
                            report.push_back("H-coequivariance of composition fails over (" + b.objects[x] + "," +
                                             b.objects[y] + "," + b.objects[z] + ")");
                    }
    return report;
}

namespace {

// Shared by both fixed_subcategory overloads once the subspace bases are
// chosen: restrict composition and identities, verifying closure.
FixedSubcategory restrict_category(const LinCategory& b, std::vector<std::vector<Matrix>> embeddings,
                                   const std::string& what) {
    const int n = b.n_objects();
    auto sub = std::make_shared<LinCategory>();
    sub->field = b.field;
    sub->objects = b.objects;
    sub->hom_labels.assign(n, std::vector<std::vector<std::string>>(n));
    sub->compose_t.assign(n, std::vector<std::vector<Matrix>>(n, std::vector<Matrix>(n)));
    sub->identity.resize(n);

    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int k = 0; k < embeddings[x][y].cols(); ++k)
                sub->hom_labels[x][y].push_back(what + std::to_string(k));

    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                const int dyz = embeddings[y][z].cols(), dxy = embeddings[x][y].cols();
                Matrix t(b.field, embeddings[x][z].cols(), dyz * dxy);
                for (int a = 0; a < dyz; ++a)
                    for (int e = 0; e < dxy; ++e) {
                        Vec comp = b.compose(x, y, z, embeddings[y][z].col(a), embeddings[x][y].col(e));
                        auto coords = solve(embeddings[x][z], Matrix::column(comp));
                        if (!coords)
                            throw std::domain_error("fixed subcategory: composition does not close on " + what +
                                                    " morphisms");
                        for (int r = 0; r < t.rows(); ++r) t.at(r, a * dxy + e) = coords->at(r, 0);
                    }
                sub->compose_t[x][y][z] = std::move(t);
            }

    for (int x = 0; x < n; ++x) {
        auto coords = solve(embeddings[x][x], Matrix::column(b.identity[x]));
        if (!coords) throw std::domain_error("fixed subcategory: identity is not " + what);
        sub->identity[x] = coords->col(0);
    }

    auto bad = validate_category(*sub);
    if (!bad.empty()) throw std::domain_error("fixed subcategory: restricted composition invalid: " + bad[0]);
    return FixedSubcategory{sub, std::move(embeddings)};
}

}  // namespace

FixedSubcategory fixed_subcategory(const HCategory& c) {
    const int n = c.base->n_objects();
    std::vector<std::vector<Matrix>> emb(n, std::vector<Matrix>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) emb[x][y] = invariants(c.hom_module(x, y));
    return restrict_category(*c.base, std::move(emb), "inv");
}

FixedSubcategory fixed_subcategory(const CoHCategory& d) {
    const int n = d.base->n_objects();
    std::vector<std::vector<Matrix>> emb(n, std::vector<Matrix>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) emb[x][y] = coinvariants(d.hom_comodule(x, y));
    return restrict_category(*d.base, std::move(emb), "coinv");
}

HCatPtr dualize_coh_category(const CoHCategory& d) {
    const auto& b = *d.base;
    const int n = b.n_objects();
    auto c = std::make_shared<HCategory>();
    c->base = d.base;
    c->hopf = dual_hopf(*d.hopf);
    c->action.assign(n, std::vector<std::vector<Matrix>>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            c->action[x][y] = comodule_to_dual_module(d.hom_comodule(x, y), c->hopf).action;
    return c;
}

CoHCatPtr coh_from_dual_action(const HCategory& c, HopfPtr h) {
    const auto& b = *c.base;
    const int n = b.n_objects();
    auto d = std::make_shared<CoHCategory>();
    d->base = c.base;
    d->hopf = h;
    d->coaction.assign(n, std::vector<Matrix>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            HModule m{c.hopf, b.hom_dim(x, y), c.action[x][y]};
            d->coaction[x][y] = dual_module_to_comodule(m, h).coaction;
        }
    return d;
}

CatPtr smash_product(const HCategory& c) {
    const auto& b = *c.base;
    const auto& h = *c.hopf;
    const int n = b.n_objects(), hd = h.dim;

    auto s = std::make_shared<LinCategory>();
    s->field = b.field;
    s->objects = b.objects;
    s->hom_labels.assign(n, std::vector<std::vector<std::string>>(n));
    s->compose_t.assign(n, std::vector<std::vector<Matrix>>(n, std::vector<Matrix>(n)));
    s->identity.resize(n);

    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int a = 0; a < b.hom_dim(x, y); ++a)
                for (int i = 0; i < hd; ++i)
                    s->hom_labels[x][y].push_back(b.hom_labels[x][y][a] + "#" + h.basis[i]);

    // (f # h)(g # h') = sum f(h1 g) # (h2 h')
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                const int dyz = b.hom_dim(y, z), dxy = b.hom_dim(x, y), dxz = b.hom_dim(x, z);
                Matrix t(b.field, dxz * hd, (dyz * hd) * (dxy * hd));
                for (int a = 0; a < dyz; ++a)
                    for (int i = 0; i < hd; ++i)
                        for (int e = 0; e < dxy; ++e)
                            for (int j = 0; j < hd; ++j) {
                                const int col = (a * hd + i) * (dxy * hd) + (e * hd + j);
                                for (const auto& u : h.comult[i]) {
                                    Vec tg = c.action[x][y][u.left] * vec_basis(b.field, dxy, e);
                                    Vec comp = b.compose(x, y, z, vec_basis(b.field, dyz, a), tg);
                                    const Vec& hh = h.mult[u.right][j];
                                    for (int r = 0; r < dxz; ++r) {
                                        if (comp[r].is_zero()) continue;
                                        for (int s2 = 0; s2 < hd; ++s2)
                                            if (!hh[s2].is_zero())
                                                t.at(r * hd + s2, col) += u.coeff * comp[r] * hh[s2];
                                    }
                                }
                            }
                s->compose_t[x][y][z] = std::move(t);
            }

    for (int x = 0; x < n; ++x) {
        Vec id = vec_zero(b.field, b.hom_dim(x, x) * hd);
        for (int a = 0; a < b.hom_dim(x, x); ++a)
            for (int i = 0; i < hd; ++i) id[a * hd + i] = b.identity[x][a] * h.unit[i];
        s->identity[x] = std::move(id);
    }
    return s;
}

CoHCatPtr smash_coh_category(const HCategory& c) {
    const auto& b = *c.base;
    const auto& h = *c.hopf;
    const int n = b.n_objects(), hd = h.dim;
    CatPtr s = smash_product(c);

    auto d = std::make_shared<CoHCategory>();
    d->base = s;
    d->hopf = c.hopf;
    d->coaction.assign(n, std::vector<Matrix>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const int dim = s->hom_dim(x, y);
            Matrix rho(b.field, dim * hd, dim);
            for (int a = 0; a < b.hom_dim(x, y); ++a)
                for (int i = 0; i < hd; ++i)
                    for (const auto& t : h.comult[i])
                        rho.at((a * hd + t.left) * hd + t.right, a * hd + i) += t.coeff;
            d->coaction[x][y] = std::move(rho);
        }
    return d;
}

CatPtr algebra_as_category(FieldSpec f, const std::vector<std::vector<Vec>>& mult, const Vec& unit,
                           const std::vector<std::string>& basis_labels) {
    const int d = static_cast<int>(mult.size());
    auto c = std::make_shared<LinCategory>();
    c->field = f;
    c->objects = {"*"};
    c->hom_labels = {{basis_labels}};
    Matrix t(f, d, d * d);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int k = 0; k < d; ++k) t.at(k, a * d + b) = mult[a][b][k];
    c->compose_t = {{{t}}};
    c->identity = {unit};
    return c;
}

CatPtr hopf_as_category(const HopfAlgebra& h) { return algebra_as_category(h.field, h.mult, h.unit, h.basis); }

namespace fixtures {

HCatPtr one_object_trivial(HopfPtr h) {
    auto base = std::make_shared<LinCategory>();
    base->field = h->field;
    base->objects = {"*"};
    base->hom_labels = {{{"id"}}};
    Matrix t(h->field, 1, 1);
    t.at(0, 0) = Scalar::one(h->field);
    base->compose_t = {{{t}}};
    base->identity = {Vec{Scalar::one(h->field)}};

    auto c = std::make_shared<HCategory>();
    c->base = base;
    c->hopf = h;
    c->action = {{{}}};
    for (int i = 0; i < h->dim; ++i) {
        Matrix a(h->field, 1, 1);
        a.at(0, 0) = h->counit[i];
        c->action[0][0].push_back(std::move(a));
    }
    return c;
}

HCatPtr dual_numbers_c2(HopfPtr c2_like) {
    const FieldSpec f = c2_like->field;
    auto base = std::make_shared<LinCategory>();
    base->field = f;
    base->objects = {"*"};
    base->hom_labels = {{{"1", "x"}}};
    // K[x]/(x^2): 1*1=1, 1*x=x*1=x, x*x=0
    Matrix t(f, 2, 4);
    t.at(0, 0 * 2 + 0) = Scalar::one(f);
    t.at(1, 0 * 2 + 1) = Scalar::one(f);
    t.at(1, 1 * 2 + 0) = Scalar::one(f);
    base->compose_t = {{{t}}};
    base->identity = {vec_basis(f, 2, 0)};

    auto c = std::make_shared<HCategory>();
    c->base = base;
    c->hopf = c2_like;
    Matrix e_act = Matrix::identity(f, 2);
    Matrix g_act = Matrix::identity(f, 2);
    g_act.at(1, 1) = -Scalar::one(f);  // g x = -x
    c->action = {{{e_act, g_act}}};
    return c;
}

namespace {

// Shared arrow-category skeleton: objects A, B, hom(A,B) = span{alpha}.
CatPtr arrow_base(FieldSpec f) {
    auto base = std::make_shared<LinCategory>();
    base->field = f;
    base->objects = {"A", "B"};
    base->hom_labels.assign(2, std::vector<std::vector<std::string>>(2));
    base->hom_labels[0][0] = {"idA"};
    base->hom_labels[1][1] = {"idB"};
    base->hom_labels[0][1] = {"alpha"};
    base->hom_labels[1][0] = {};
    base->compose_t.assign(2, std::vector<std::vector<Matrix>>(2, std::vector<Matrix>(2)));
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            for (int z = 0; z < 2; ++z)
                base->compose_t[x][y][z] =
                    Matrix(f, base->hom_dim(x, z), base->hom_dim(y, z) * base->hom_dim(x, y));
    auto one = Scalar::one(f);
    base->compose_t[0][0][0].at(0, 0) = one;  // idA o idA
    base->compose_t[1][1][1].at(0, 0) = one;  // idB o idB
    base->compose_t[0][0][1].at(0, 0) = one;  // alpha o idA
    base->compose_t[0][1][1].at(0, 0) = one;  // idB o alpha
    base->identity = {vec_basis(f, 1, 0), vec_basis(f, 1, 0)};
    return base;
}

}  // namespace

HCatPtr two_object_arrow(HopfPtr c2_like) {
    const FieldSpec f = c2_like->field;
    auto c = std::make_shared<HCategory>();
    c->base = arrow_base(f);
    c->hopf = c2_like;
    c->action.assign(2, std::vector<std::vector<Matrix>>(2));
    auto one = Scalar::one(f);
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) {
            const int d = c->base->hom_dim(x, y);
            Matrix e_act = Matrix::identity(f, d);
            Matrix g_act = Matrix::identity(f, d);
            if (x == 0 && y == 1) g_act.at(0, 0) = -one;  // g alpha = -alpha
            c->action[x][y] = {e_act, g_act};
        }
    return c;
}

CoHCatPtr arrow_coh(HopfPtr c2_like) {
    const FieldSpec f = c2_like->field;
    auto d = std::make_shared<CoHCategory>();
    d->base = arrow_base(f);
    d->hopf = c2_like;
    d->coaction.assign(2, std::vector<Matrix>(2));
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) {
            const int dim = d->base->hom_dim(x, y);
            Matrix rho(f, dim * 2, dim);
            for (int a = 0; a < dim; ++a) {
                // identities of degree e, alpha of degree g
                const int degree = (x == 0 && y == 1) ? 1 : 0;
                rho.at(a * 2 + degree, a) = Scalar::one(f);
            }
            d->coaction[x][y] = std::move(rho);
        }
    return d;
}

}  // namespace fixtures

}  // namespace hopfcat
