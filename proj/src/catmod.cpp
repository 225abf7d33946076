#include "hopfcat/catmod.hpp"

#include <numeric>

namespace hopfcat {

int CatModule::total_dim() const { return std::accumulate(carrier.begin(), carrier.end(), 0); }

Matrix CatModule::act(int x, int y, const Vec& f) const {
    const FieldSpec fl = category->field;
    const int rows = side == Side::Right ? carrier[x] : carrier[y];
    const int cols = side == Side::Right ? carrier[y] : carrier[x];
    Matrix r(fl, rows, cols);
    for (size_t a = 0; a < f.size(); ++a)
        if (!f[a].is_zero()) r = r + action[x][y][a].scaled(f[a]);
    return r;
}

std::vector<std::string> validate_cat_module(const CatModule& m) {
    std::vector<std::string> report;
    const auto& c = *m.category;
    const int n = c.n_objects();
    if (static_cast<int>(m.carrier.size()) != n || static_cast<int>(m.action.size()) != n)
        throw std::invalid_argument("validate_cat_module: table sizes");
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (static_cast<int>(m.action[x][y].size()) != c.hom_dim(x, y))
                throw std::invalid_argument("validate_cat_module: action count");
            const int rows = m.side == Side::Right ? m.carrier[x] : m.carrier[y];
            const int cols = m.side == Side::Right ? m.carrier[y] : m.carrier[x];
            for (const auto& a : m.action[x][y])
                if (a.rows() != rows || a.cols() != cols)
                    throw std::invalid_argument("validate_cat_module: action shape");
        }

    for (int x = 0; x < n; ++x)
        if (m.act(x, x, c.identity[x]) != Matrix::identity(c.field, m.carrier[x]))
            report.push_back("M(id_" + c.objects[x] + ") != identity");

    // composition law on all basis pairs
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                for (int a = 0; a < c.hom_dim(y, z); ++a)
                    for (int b = 0; b < c.hom_dim(x, y); ++b) {
                        Vec f = vec_basis(c.field, c.hom_dim(y, z), a);
                        Vec g = vec_basis(c.field, c.hom_dim(x, y), b);
                        Matrix of_composite = m.act(x, z, c.compose(x, y, z, f, g));
                        Matrix chained = m.side == Side::Right
                                             ? m.act(x, y, g) * m.act(y, z, f)   // M(fg) = M(g) M(f)
                                             : m.act(y, z, f) * m.act(x, y, g);  // M(fg) = M(f) M(g)
                        if (of_composite != chained)
                            report.push_back("functor law fails over (" + c.objects[x] + "," + c.objects[y] + "," +
                                             c.objects[z] + ")");
                    }
    return report;
}

std::vector<std::string> validate_morphism(const CatModule& m, const CatModule& n, const ModuleMorphism& eta) {
    std::vector<std::string> report;
    const auto& c = *m.category;
    if (m.side != n.side || (m.category != n.category && !same_structure(*m.category, *n.category)))
        throw std::invalid_argument("validate_morphism: incompatible modules");
    if (static_cast<int>(eta.component.size()) != c.n_objects())
        throw std::invalid_argument("validate_morphism: component count");
    for (int x = 0; x < c.n_objects(); ++x)
        if (eta.component[x].rows() != n.carrier[x] || eta.component[x].cols() != m.carrier[x])
            throw std::invalid_argument("validate_morphism: component shape");

    for (int x = 0; x < c.n_objects(); ++x)
        for (int y = 0; y < c.n_objects(); ++y)
            for (int a = 0; a < c.hom_dim(x, y); ++a) {
                Vec f = vec_basis(c.field, c.hom_dim(x, y), a);
                bool ok = m.side == Side::Right
                              ? eta.component[x] * m.act(x, y, f) == n.act(x, y, f) * eta.component[y]
                              : eta.component[y] * m.act(x, y, f) == n.act(x, y, f) * eta.component[x];
                if (!ok)
                    report.push_back("naturality fails on hom(" + c.objects[x] + "," + c.objects[y] + ") basis " +
                                     std::to_string(a));
            }
    return report;
}

CatModule zero_module(CatPtr c, Side side) {
    CatModule m;
    m.category = c;
    m.side = side;
    const int n = c->n_objects();
    m.carrier.assign(n, 0);
    m.action.assign(n, std::vector<std::vector<Matrix>>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            m.action[x][y].assign(c->hom_dim(x, y), Matrix(c->field, 0, 0));
    return m;
}

CatModule representable(CatPtr c, int obj, Side side) {
    const int n = c->n_objects();
    CatModule m;
    m.category = c;
    m.side = side;
    m.carrier.resize(n);
    for (int y = 0; y < n; ++y) m.carrier[y] = side == Side::Right ? c->hom_dim(y, obj) : c->hom_dim(obj, y);
    m.action.assign(n, std::vector<std::vector<Matrix>>(n));

    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const int hd = c->hom_dim(x, y);
            for (int a = 0; a < hd; ++a) {
                Vec f = vec_basis(c->field, hd, a);
                if (side == Side::Right) {
                    // h_obj(f): hom(y, obj) -> hom(x, obj), g -> g o f
                    Matrix mat(c->field, c->hom_dim(x, obj), c->hom_dim(y, obj));
                    for (int b = 0; b < c->hom_dim(y, obj); ++b)
                        mat.set_col(b, c->compose(x, y, obj, vec_basis(c->field, c->hom_dim(y, obj), b), f));
                    m.action[x][y].push_back(std::move(mat));
                } else {
                    // _obj h(f): hom(obj, x) -> hom(obj, y), g -> f o g
                    Matrix mat(c->field, c->hom_dim(obj, y), c->hom_dim(obj, x));
                    for (int b = 0; b < c->hom_dim(obj, x); ++b)
                        mat.set_col(b, c->compose(obj, x, y, f, vec_basis(c->field, c->hom_dim(obj, x), b)));
                    m.action[x][y].push_back(std::move(mat));
                }
            }
        }
    return m;
}

DirectSum direct_sum(const std::vector<CatModule>& parts) {
    if (parts.empty()) throw std::invalid_argument("direct_sum: no parts");
    const auto& c = *parts[0].category;
    const int n = c.n_objects();
    DirectSum out;
    out.module.category = parts[0].category;
    out.module.side = parts[0].side;
    out.module.carrier.assign(n, 0);
    for (const auto& p : parts)
        for (int x = 0; x < n; ++x) out.module.carrier[x] += p.carrier[x];

    out.module.action.assign(n, std::vector<std::vector<Matrix>>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int a = 0; a < c.hom_dim(x, y); ++a) {
                Matrix block = parts[0].action[x][y][a];
                for (size_t p = 1; p < parts.size(); ++p)
                    block = Matrix::direct_sum(block, parts[p].action[x][y][a]);
                out.module.action[x][y].push_back(std::move(block));
            }

    std::vector<int> offset(n, 0);
    for (const auto& p : parts) {
        ModuleMorphism inj, proj;
        for (int x = 0; x < n; ++x) {
            Matrix in(c.field, out.module.carrier[x], p.carrier[x]);
            Matrix pr(c.field, p.carrier[x], out.module.carrier[x]);
            for (int i = 0; i < p.carrier[x]; ++i) {
                in.at(offset[x] + i, i) = Scalar::one(c.field);
                pr.at(i, offset[x] + i) = Scalar::one(c.field);
            }
            inj.component.push_back(std::move(in));
            proj.component.push_back(std::move(pr));
        }
        out.injections.push_back(std::move(inj));
        out.projections.push_back(std::move(proj));
        for (int x = 0; x < n; ++x) offset[x] += p.carrier[x];
    }
    return out;
}

Vec morphism_coords(const CatModule& m, const CatModule& n, const ModuleMorphism& eta) {
    const int nobj = m.category->n_objects();
    Vec v;
    for (int x = 0; x < nobj; ++x)
        for (int i = 0; i < n.carrier[x]; ++i)
            for (int j = 0; j < m.carrier[x]; ++j) v.push_back(eta.component[x].at(i, j));
    if (v.empty()) return vec_zero(m.category->field, 0);
    return v;
}

ModuleMorphism morphism_from_coords(const CatModule& m, const CatModule& n, const Vec& coords) {
    const int nobj = m.category->n_objects();
    ModuleMorphism eta;
    size_t pos = 0;
    for (int x = 0; x < nobj; ++x) {
        Matrix comp(m.category->field, n.carrier[x], m.carrier[x]);
        for (int i = 0; i < n.carrier[x]; ++i)
            for (int j = 0; j < m.carrier[x]; ++j) comp.at(i, j) = coords[pos++];
        eta.component.push_back(std::move(comp));
    }
    return eta;
}

Matrix naturality_system(const CatModule& m, const CatModule& n) {
    const auto& c = *m.category;
    const FieldSpec fl = c.field;
    const int nobj = c.n_objects();
    if (m.side != n.side) throw std::invalid_argument("naturality_system: mixed sides");

    std::vector<int> offset(nobj, 0);
    int total = 0;
    for (int x = 0; x < nobj; ++x) {
        offset[x] = total;
        total += n.carrier[x] * m.carrier[x];
    }

    std::vector<Matrix> blocks;
    for (int x = 0; x < nobj; ++x)
        for (int y = 0; y < nobj; ++y)
            for (int a = 0; a < c.hom_dim(x, y); ++a) {
                Vec f = vec_basis(fl, c.hom_dim(x, y), a);
                // Right: eta(x) M(f) = N(f) eta(y); the unknown blocks are
                // eta(x) and eta(y). Left: eta(y) M(f) = N(f) eta(x).
                const int dst = m.side == Side::Right ? x : y;
                const int src = m.side == Side::Right ? y : x;
                const Matrix mf = m.act(x, y, f);  // M(src) -> M(dst)
                const Matrix nf = n.act(x, y, f);
                Matrix block(fl, n.carrier[dst] * m.carrier[src], total);
                for (int p = 0; p < n.carrier[dst]; ++p)
                    for (int q = 0; q < m.carrier[src]; ++q) {
                        const int row = p * m.carrier[src] + q;
                        for (int j = 0; j < m.carrier[dst]; ++j)
                            if (!mf.at(j, q).is_zero())
                                block.at(row, offset[dst] + p * m.carrier[dst] + j) += mf.at(j, q);
                        for (int i = 0; i < n.carrier[src]; ++i)
                            if (!nf.at(p, i).is_zero())
                                block.at(row, offset[src] + i * m.carrier[src] + q) -= nf.at(p, i);
                    }
                blocks.push_back(std::move(block));
            }

    Matrix system(fl, 0, total);
    for (auto& b : blocks) system = system.rows() == 0 ? b : Matrix::vstack(system, b);
    return system;
}

std::vector<ModuleMorphism> module_hom_basis(const CatModule& m, const CatModule& n) {
    Matrix basis = module_hom_matrix(m, n);
    std::vector<ModuleMorphism> out;
    for (int j = 0; j < basis.cols(); ++j) out.push_back(morphism_from_coords(m, n, basis.col(j)));
    return out;
}

Matrix module_hom_matrix(const CatModule& m, const CatModule& n) { return kernel_basis(naturality_system(m, n)); }

ModuleMorphism compose_morphisms(const ModuleMorphism& second, const ModuleMorphism& first) {
    ModuleMorphism r;
    for (size_t x = 0; x < first.component.size(); ++x)
        r.component.push_back(second.component[x] * first.component[x]);
    return r;
}

bool morphism_is_zero(const ModuleMorphism& eta) {
    for (const auto& comp : eta.component)
        if (!comp.is_zero()) return false;
    return true;
}

KernelCokernel morphism_kernel_cokernel(const CatModule& m, const CatModule& n, const ModuleMorphism& eta) {
    const auto& c = *m.category;
    const int nobj = c.n_objects();
    KernelCokernel out;

    std::vector<Matrix> ker(nobj), sect(nobj), proj(nobj);
    for (int x = 0; x < nobj; ++x) {
        ker[x] = kernel_basis(eta.component[x]);
        auto qm = quotient_map(eta.component[x], n.carrier[x]);
        proj[x] = qm.projection;
        sect[x] = qm.reps;
    }

    out.kernel.category = m.category;
    out.kernel.side = m.side;
    out.cokernel.category = m.category;
    out.cokernel.side = m.side;
    for (int x = 0; x < nobj; ++x) {
        out.kernel.carrier.push_back(ker[x].cols());
        out.cokernel.carrier.push_back(proj[x].rows());
        out.inclusion.component.push_back(ker[x]);
        out.projection.component.push_back(proj[x]);
    }

    out.kernel.action.assign(nobj, std::vector<std::vector<Matrix>>(nobj));
    out.cokernel.action.assign(nobj, std::vector<std::vector<Matrix>>(nobj));
    for (int x = 0; x < nobj; ++x)
        for (int y = 0; y < nobj; ++y)
            for (int a = 0; a < c.hom_dim(x, y); ++a) {
                Vec f = vec_basis(c.field, c.hom_dim(x, y), a);
                const int dst = m.side == Side::Right ? x : y;  // K(f): K(src) -> K(dst)
                const int src = m.side == Side::Right ? y : x;
                // induced kernel action: iota_dst K(f) = M(f) iota_src
                auto kf = solve(ker[dst], m.act(x, y, f) * ker[src]);
                if (!kf) throw std::domain_error("kernel action does not restrict (morphism not natural?)");
                out.kernel.action[x][y].push_back(*kf);
                // induced cokernel action through the chosen section
                out.cokernel.action[x][y].push_back(proj[dst] * n.act(x, y, f) * sect[src]);
            }

    auto bad = validate_cat_module(out.kernel);
    if (!bad.empty()) throw std::domain_error("kernel failed functor re-validation: " + bad[0]);
    bad = validate_cat_module(out.cokernel);
    if (!bad.empty()) throw std::domain_error("cokernel failed functor re-validation: " + bad[0]);
    return out;
}

GeneratorSet generators(const CatModule& m) {
    const auto& c = *m.category;
    const int nobj = c.n_objects();
    GeneratorSet out;

    // reached[y]: columns spanning what the chosen elements generate in M(y)
    std::vector<Matrix> reached(nobj);
    for (int y = 0; y < nobj; ++y) reached[y] = Matrix(c.field, m.carrier[y], 0);

    auto add_generator = [&](int x, const Vec& elem) {
        out.elements.emplace_back(x, elem);
        for (int y = 0; y < nobj; ++y) {
            const int hd = m.side == Side::Right ? c.hom_dim(y, x) : c.hom_dim(x, y);
            for (int b = 0; b < hd; ++b) {
                Vec f = vec_basis(c.field, hd, b);
                Matrix image = m.side == Side::Right ? Matrix::column(m.act(y, x, f) * elem)
                                                     : Matrix::column(m.act(x, y, f) * elem);
                if (!in_column_span(reached[y], image)) reached[y] = Matrix::hstack(reached[y], image);
            }
        }
    };

    for (int x = 0; x < nobj; ++x)
        for (int v = 0; v < m.carrier[x]; ++v) {
            Matrix cand = Matrix::basis_column(c.field, m.carrier[x], v);
            if (!in_column_span(reached[x], cand)) add_generator(x, cand.col(0));
        }

    if (out.elements.empty()) {
        out.cover = zero_module(m.category, m.side);
        for (int x = 0; x < nobj; ++x) out.epi.component.push_back(Matrix(c.field, m.carrier[x], 0));
        return out;
    }

    std::vector<CatModule> parts;
    for (const auto& [obj, elem] : out.elements) parts.push_back(representable(m.category, obj, m.side));
    DirectSum ds = direct_sum(parts);
    out.cover = ds.module;

    for (int y = 0; y < nobj; ++y) {
        Matrix comp(c.field, m.carrier[y], out.cover.carrier[y]);
        int col = 0;
        for (const auto& [obj, elem] : out.elements) {
            const int hd = m.side == Side::Right ? c.hom_dim(y, obj) : c.hom_dim(obj, y);
            for (int b = 0; b < hd; ++b) {
                Vec f = vec_basis(c.field, hd, b);
                Vec image = m.side == Side::Right ? m.act(y, obj, f) * elem : m.act(obj, y, f) * elem;
                comp.set_col(col++, image);
            }
        }
        out.epi.component.push_back(std::move(comp));
    }

    auto bad = validate_morphism(out.cover, m, out.epi);
    if (!bad.empty()) throw std::domain_error("generators: certifying map not natural: " + bad[0]);
    for (int y = 0; y < nobj; ++y)
        if (rank(out.epi.component[y]) != m.carrier[y])
            throw std::domain_error("generators: certifying map not surjective at " + c.objects[y]);
    return out;
}

Submodule submodule_from_basis(const CatModule& m, const std::vector<Matrix>& basis) {
    const auto& c = *m.category;
    const int nobj = c.n_objects();
    Submodule out;
    out.module.category = m.category;
    out.module.side = m.side;
    for (int x = 0; x < nobj; ++x) {
        out.module.carrier.push_back(basis[x].cols());
        out.inclusion.component.push_back(basis[x]);
    }
    out.module.action.assign(nobj, std::vector<std::vector<Matrix>>(nobj));
    for (int x = 0; x < nobj; ++x)
        for (int y = 0; y < nobj; ++y)
            for (int a = 0; a < c.hom_dim(x, y); ++a) {
                Vec f = vec_basis(c.field, c.hom_dim(x, y), a);
                const int dst = m.side == Side::Right ? x : y;
                const int src = m.side == Side::Right ? y : x;
                auto sub = solve(basis[dst], m.act(x, y, f) * basis[src]);
                if (!sub) throw std::domain_error("submodule_from_basis: span not action-stable");
                out.module.action[x][y].push_back(*sub);
            }
    auto bad = validate_cat_module(out.module);
    if (!bad.empty()) throw std::domain_error("submodule failed functor validation: " + bad[0]);
    return out;
}

}  // namespace hopfcat
