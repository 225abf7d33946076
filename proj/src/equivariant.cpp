#include "hopfcat/equivariant.hpp"

namespace hopfcat {

std::vector<std::string> validate_equivariant(const EquivModule& m) {
    std::vector<std::string> report;
    const auto& c = *m.hcat;
    const auto& b = *c.base;
    const auto& h = *c.hopf;
    const int nobj = b.n_objects();

    if (m.base.side != Side::Right) throw std::invalid_argument("validate_equivariant: base must be a right module");
    auto base_report = validate_cat_module(m.base);
    for (auto& line : base_report) report.push_back("base: " + line);
    for (int x = 0; x < nobj; ++x) {
        if (m.hmod[x].dim != m.base.carrier[x]) throw std::invalid_argument("validate_equivariant: carrier mismatch");
        auto hm_report = validate_hmodule(m.hmod[x]);
        for (auto& line : hm_report) report.push_back("H-module at " + b.objects[x] + ": " + line);
    }
    if (!report.empty()) return report;

    // compatibility: h(M(f)(m)) = sum M(h2 f)(h1 m), f in hom(x,y), m in M(y)
    for (int x = 0; x < nobj; ++x)
        for (int y = 0; y < nobj; ++y)
            for (int a = 0; a < b.hom_dim(x, y); ++a)
                for (int i = 0; i < h.dim; ++i)
                    for (int v = 0; v < m.base.carrier[y]; ++v) {
                        Vec f = vec_basis(b.field, b.hom_dim(x, y), a);
                        Vec mv = vec_basis(b.field, m.base.carrier[y], v);
                        Vec lhs = m.hmod[x].action[i] * (m.base.act(x, y, f) * mv);
                        Vec rhs = vec_zero(b.field, m.base.carrier[x]);
                        for (const auto& t : h.comult[i]) {
                            Vec tf = c.action[x][y][t.right] * f;     // h2 f
                            Vec tm = m.hmod[y].action[t.left] * mv;   // h1 m
                            rhs = vec_add(rhs, vec_scaled(m.base.act(x, y, tf) * tm, t.coeff));
                        }
                        if (lhs != rhs)
                            report.push_back("equivariance fails at hom(" + b.objects[x] + "," + b.objects[y] +
                                             ") basis " + std::to_string(a) + ", " + h.basis[i]);
                    }
    return report;
}

CatModule to_smash_module(const EquivModule& m, CatPtr smash) {
    const auto& c = *m.hcat;
    const auto& b = *c.base;
    const auto& h = *c.hopf;
    const int nobj = b.n_objects(), n = h.dim;

    CatModule out;
    out.category = smash;
    out.side = Side::Right;
    out.carrier = m.base.carrier;
    out.action.assign(nobj, std::vector<std::vector<Matrix>>(nobj));
    for (int x = 0; x < nobj; ++x)
        for (int y = 0; y < nobj; ++y)
            for (int a = 0; a < b.hom_dim(x, y); ++a) {
                const Matrix mf = m.base.action[x][y][a];  // M(f): M(y) -> M(x)
                for (int i = 0; i < n; ++i)
                    // M'(f # e_i) = S^-1(e_i) . (M(f) .)
                    out.action[x][y].push_back(m.hmod[x].act(h.antipode_inv.col(i)) * mf);
            }
    return out;
}

EquivModule from_smash_module(HCatPtr hcat, const CatModule& smash_module) {
    const auto& c = *hcat;
    const auto& b = *c.base;
    const auto& h = *c.hopf;
    const int nobj = b.n_objects(), n = h.dim;

    EquivModule out;
    out.hcat = hcat;
    out.base.category = c.base;
    out.base.side = Side::Right;
    out.base.carrier = smash_module.carrier;
    out.base.action.assign(nobj, std::vector<std::vector<Matrix>>(nobj));

    for (int x = 0; x < nobj; ++x)
        for (int y = 0; y < nobj; ++y)
            for (int a = 0; a < b.hom_dim(x, y); ++a) {
                // M(f) := M'(f # 1_H)
                Vec coords = vec_zero(b.field, b.hom_dim(x, y) * n);
                for (int i = 0; i < n; ++i) coords[a * n + i] = h.unit[i];
                out.base.action[x][y].push_back(smash_module.act(x, y, coords));
            }

    for (int x = 0; x < nobj; ++x) {
        HModule hm{c.hopf, smash_module.carrier[x], {}};
        for (int i = 0; i < n; ++i) {
            // h m := M'(id_X # S(h))(m)
            Vec coords = vec_zero(b.field, b.hom_dim(x, x) * n);
            for (int a2 = 0; a2 < b.hom_dim(x, x); ++a2)
                for (int j = 0; j < n; ++j) coords[a2 * n + j] = b.identity[x][a2] * h.antipode.at(j, i);
            hm.action.push_back(smash_module.act(x, x, coords));
        }
        out.hmod.push_back(std::move(hm));
    }
    return out;
}

EquivModule representable_equiv(HCatPtr c, int obj) {
    EquivModule out;
    out.hcat = c;
    out.base = representable(c->base, obj, Side::Right);
    for (int y = 0; y < c->base->n_objects(); ++y) out.hmod.push_back(c->hom_module(y, obj));
    return out;
}

EquivModule tensor_hmod(const HModule& v, const EquivModule& n) {
    const auto& c = *n.hcat;
    const auto& b = *c.base;
    const int nobj = b.n_objects();

    EquivModule out;
    out.hcat = n.hcat;
    out.base.category = c.base;
    out.base.side = Side::Right;
    for (int x = 0; x < nobj; ++x) out.base.carrier.push_back(v.dim * n.base.carrier[x]);
    out.base.action.assign(nobj, std::vector<std::vector<Matrix>>(nobj));
    for (int x = 0; x < nobj; ++x)
        for (int y = 0; y < nobj; ++y)
            for (int a = 0; a < b.hom_dim(x, y); ++a)
                out.base.action[x][y].push_back(
                    Matrix::kronecker(Matrix::identity(b.field, v.dim), n.base.action[x][y][a]));
    for (int x = 0; x < nobj; ++x) out.hmod.push_back(tensor_hmodules(v, n.hmod[x]));
    return out;
}

EquivModule direct_sum_equiv(const std::vector<EquivModule>& parts) {
    if (parts.empty()) throw std::invalid_argument("direct_sum_equiv: no parts");
    std::vector<CatModule> bases;
    for (const auto& p : parts) bases.push_back(p.base);
    EquivModule out;
    out.hcat = parts[0].hcat;
    out.base = direct_sum(bases).module;
    const int nobj = parts[0].hcat->base->n_objects();
    for (int x = 0; x < nobj; ++x) {
        HModule hm{parts[0].hcat->hopf, out.base.carrier[x], {}};
        for (int i = 0; i < parts[0].hcat->hopf->dim; ++i) {
            Matrix block = parts[0].hmod[x].action[i];
            for (size_t p = 1; p < parts.size(); ++p) block = Matrix::direct_sum(block, parts[p].hmod[x].action[i]);
            hm.action.push_back(std::move(block));
        }
        out.hmod.push_back(std::move(hm));
    }
    return out;
}

HomHAction hom_h_action(const EquivModule& m, const EquivModule& n) {
    const auto& c = *m.hcat;
    const auto& h = *c.hopf;
    const int nobj = c.base->n_objects();

    HomHAction out;
    out.basis = module_hom_basis(m.base, n.base);
    out.basis_matrix = module_hom_matrix(m.base, n.base);
    const int t_dim = static_cast<int>(out.basis.size());

    out.hmodule = HModule{c.hopf, t_dim, {}};
    for (int i = 0; i < h.dim; ++i) {
        Matrix act(c.base->field, t_dim, t_dim);
        for (int t = 0; t < t_dim; ++t) {
            // (h eta)(X) = sum h1 . eta(X) . S(h2)
            ModuleMorphism moved;
            for (int x = 0; x < nobj; ++x) moved.component.push_back(Matrix(c.base->field, n.base.carrier[x], m.base.carrier[x]));
            for (const auto& u : h.comult[i]) {
                const Vec s_right = h.antipode.col(u.right);
                for (int x = 0; x < nobj; ++x) {
                    Matrix term = n.hmod[x].action[u.left] * out.basis[t].component[x] * m.hmod[x].act(s_right);
                    moved.component[x] = moved.component[x] + term.scaled(u.coeff);
                }
            }
            auto coords = solve(out.basis_matrix, Matrix::column(morphism_coords(m.base, n.base, moved)));
            if (!coords) throw std::domain_error("hom_h_action: H does not preserve the Hom space (bug)");
            for (int r = 0; r < t_dim; ++r) act.at(r, t) = coords->at(r, 0);
        }
        out.hmodule.action.push_back(std::move(act));
    }

    auto bad = validate_hmodule(out.hmodule);
    if (!bad.empty()) throw std::domain_error("hom_h_action: induced action is not a representation: " + bad[0]);

    out.invariant_coords = invariants(out.hmodule);
    for (int j = 0; j < out.invariant_coords.cols(); ++j) {
        Vec combo = vec_zero(c.base->field, out.basis_matrix.rows());
        for (int t = 0; t < t_dim; ++t)
            combo = vec_add(combo, vec_scaled(out.basis_matrix.col(t), out.invariant_coords.at(t, j)));
        out.invariant_basis.push_back(morphism_from_coords(m.base, n.base, combo));
    }
    return out;
}

Matrix smash_hom_in_base_coords(const EquivModule& m, const EquivModule& n, CatPtr smash) {
    CatModule ms = to_smash_module(m, smash);
    CatModule ns = to_smash_module(n, smash);
    Matrix smash_basis = module_hom_matrix(ms, ns);  // same vectorization shape as base-side Hom
    Matrix base_basis = module_hom_matrix(m.base, n.base);
    auto coords = solve(base_basis, smash_basis);
    if (!coords) throw std::domain_error("smash Hom is not contained in the plain Hom (bug)");
    return *coords;
}

CatModule extend_scalars(const CatModule& m, const HCategory& hcat, CatPtr smash) {
    const auto& b = *hcat.base;
    const auto& h = *hcat.hopf;
    const int nobj = b.n_objects(), n = h.dim;
    if (m.side != Side::Right) throw std::invalid_argument("extend_scalars: right modules only");

    CatModule out;
    out.category = smash;
    out.side = Side::Right;
    for (int x = 0; x < nobj; ++x) out.carrier.push_back(m.carrier[x] * n);
    out.action.assign(nobj, std::vector<std::vector<Matrix>>(nobj));

    // ((M (x) H)(f' # h'))(m (x) h) = sum M(h1 f')(m) (x) h2 h'
    for (int x = 0; x < nobj; ++x)
        for (int y = 0; y < nobj; ++y)
            for (int bidx = 0; bidx < b.hom_dim(x, y); ++bidx)
                for (int j = 0; j < n; ++j) {
                    Matrix act(b.field, out.carrier[x], out.carrier[y]);
                    for (int i = 0; i < n; ++i)  // h = e_i on the source side
                        for (const auto& u : h.comult[i]) {
                            Vec tf = hcat.action[x][y][u.left] * vec_basis(b.field, b.hom_dim(x, y), bidx);
                            Matrix mf = m.act(x, y, tf);  // M(h1 f'): M(y) -> M(x)
                            const Vec& hh = h.mult[u.right][j];
                            for (int col = 0; col < m.carrier[y]; ++col)
                                for (int row = 0; row < m.carrier[x]; ++row) {
                                    if (mf.at(row, col).is_zero()) continue;
                                    for (int s = 0; s < n; ++s)
                                        if (!hh[s].is_zero())
                                            act.at(row * n + s, col * n + i) += u.coeff * mf.at(row, col) * hh[s];
                                }
                        }
                    out.action[x][y].push_back(std::move(act));
                }
    return out;
}

ExtensionAdjunction extension_adjunction(const CatModule& m, const EquivModule& n, CatPtr smash) {
    const auto& hcat = *n.hcat;
    const auto& b = *hcat.base;
    const auto& h = *hcat.hopf;
    const int nobj = b.n_objects(), hn = h.dim;
    const FieldSpec fl = b.field;

    CatModule mh = extend_scalars(m, hcat, smash);
    CatModule ns = to_smash_module(n, smash);

    Matrix smash_hom = module_hom_matrix(mh, ns);
    Matrix plain_hom = module_hom_matrix(m, n.base);

    ExtensionAdjunction out;
    out.dim_smash_side = smash_hom.cols();
    out.dim_plain_side = plain_hom.cols();

    // phi(eta)(X)(m) = eta(X)(m (x) 1_H)
    std::vector<Matrix> unit_embed(nobj);  // M(x) -> M(x) (x) H
    for (int x = 0; x < nobj; ++x) {
        Matrix e(fl, m.carrier[x] * hn, m.carrier[x]);
        for (int q = 0; q < m.carrier[x]; ++q)
            for (int i = 0; i < hn; ++i) e.at(q * hn + i, q) = h.unit[i];
        unit_embed[x] = std::move(e);
    }

    Matrix phi(fl, out.dim_plain_side, out.dim_smash_side);
    for (int t = 0; t < out.dim_smash_side; ++t) {
        ModuleMorphism eta = morphism_from_coords(mh, ns, smash_hom.col(t));
        ModuleMorphism composed;
        for (int x = 0; x < nobj; ++x) composed.component.push_back(eta.component[x] * unit_embed[x]);
        auto coords = solve(plain_hom, Matrix::column(morphism_coords(m, n.base, composed)));
        if (!coords) throw std::domain_error("extension adjunction: phi image outside Hom_C (bug)");
        for (int r = 0; r < out.dim_plain_side; ++r) phi.at(r, t) = coords->at(r, 0);
    }
    out.phi = phi;

    // inverse: eta(X)(m (x) e_i) = S^-1(e_i) xi(X)(m)
    Matrix phi_inv(fl, out.dim_smash_side, out.dim_plain_side);
    for (int t = 0; t < out.dim_plain_side; ++t) {
        ModuleMorphism xi = morphism_from_coords(m, n.base, plain_hom.col(t));
        ModuleMorphism eta;
        for (int x = 0; x < nobj; ++x) {
            Matrix comp(fl, n.base.carrier[x], m.carrier[x] * hn);
            for (int q = 0; q < m.carrier[x]; ++q)
                for (int i = 0; i < hn; ++i) {
                    Vec val = n.hmod[x].act(h.antipode_inv.col(i)) * (xi.component[x] * vec_basis(fl, m.carrier[x], q));
                    for (int r = 0; r < n.base.carrier[x]; ++r) comp.at(r, q * hn + i) = val[r];
                }
            eta.component.push_back(std::move(comp));
        }
        auto bad = validate_morphism(mh, ns, eta);
        if (!bad.empty()) throw std::domain_error("extension adjunction: inverse image not a smash morphism: " + bad[0]);
        auto coords = solve(smash_hom, Matrix::column(morphism_coords(mh, ns, eta)));
        if (!coords) throw std::domain_error("extension adjunction: inverse image outside smash Hom (bug)");
        for (int r = 0; r < out.dim_smash_side; ++r) phi_inv.at(r, t) = coords->at(r, 0);
    }
    out.phi_inv = phi_inv;

    out.two_sided_inverse = out.dim_smash_side == out.dim_plain_side &&
                            phi * phi_inv == Matrix::identity(fl, out.dim_plain_side) &&
                            phi_inv * phi == Matrix::identity(fl, out.dim_smash_side);
    return out;
}

TensorHomAdjunction tensor_hom_adjunction(const HModule& v, const EquivModule& n, const EquivModule& p,
                                          CatPtr smash) {
    const auto& hcat = *n.hcat;
    const auto& b = *hcat.base;
    const int nobj = b.n_objects();
    const FieldSpec fl = b.field;

    EquivModule vn = tensor_hmod(v, n);
    CatModule vns = to_smash_module(vn, smash);
    CatModule ps = to_smash_module(p, smash);
    Matrix left_hom = module_hom_matrix(vns, ps);

    HomHAction hom_np = hom_h_action(n, p);
    Matrix right_hom = h_linear_maps(v, hom_np.hmodule);  // maps V -> Hom, hom-coordinates

    TensorHomAdjunction out;
    out.dim_smash_side = left_hom.cols();
    out.dim_hlinear_side = right_hom.cols();
    const int t_dim = hom_np.hmodule.dim;

    // phi(eta)(v)(X)(m) = eta(X)(v (x) m): extract the v-block of each component
    Matrix phi(fl, out.dim_hlinear_side, out.dim_smash_side);
    for (int t = 0; t < out.dim_smash_side; ++t) {
        ModuleMorphism eta = morphism_from_coords(vns, ps, left_hom.col(t));
        Matrix f_map(fl, t_dim, v.dim);  // columns: image of v_u in Hom coordinates
        for (int u = 0; u < v.dim; ++u) {
            ModuleMorphism slice;
            for (int x = 0; x < nobj; ++x) {
                Matrix comp(fl, p.base.carrier[x], n.base.carrier[x]);
                for (int q = 0; q < n.base.carrier[x]; ++q)
                    comp.set_col(q, eta.component[x] * vec_basis(fl, vn.base.carrier[x], u * n.base.carrier[x] + q));
                slice.component.push_back(std::move(comp));
            }
            auto coords = solve(hom_np.basis_matrix, Matrix::column(morphism_coords(n.base, p.base, slice)));
            if (!coords) throw std::domain_error("tensor-hom adjunction: slice outside Hom (bug)");
            f_map.set_col(u, coords->col(0));
        }
        auto coords = solve(right_hom, Matrix::column(hom_coords_of_map(f_map)));
        if (!coords) throw std::domain_error("tensor-hom adjunction: phi image not H-linear (bug)");
        for (int r = 0; r < out.dim_hlinear_side; ++r) phi.at(r, t) = coords->at(r, 0);
    }
    out.phi = phi;

    // nu(X)(v (x) m) = f(v)(X)(m)
    Matrix phi_inv(fl, out.dim_smash_side, out.dim_hlinear_side);
    for (int t = 0; t < out.dim_hlinear_side; ++t) {
        Matrix f_map = map_of_hom_coords(right_hom.col(t), t_dim, v.dim);
        ModuleMorphism nu;
        for (int x = 0; x < nobj; ++x) {
            Matrix comp(fl, p.base.carrier[x], vn.base.carrier[x]);
            for (int u = 0; u < v.dim; ++u) {
                // morphism f(v_u) as a combination of the Hom basis
                ModuleMorphism fv;
                for (int x2 = 0; x2 < nobj; ++x2)
                    fv.component.push_back(Matrix(fl, p.base.carrier[x2], n.base.carrier[x2]));
                for (int s = 0; s < t_dim; ++s) {
                    if (f_map.at(s, u).is_zero()) continue;
                    for (int x2 = 0; x2 < nobj; ++x2)
                        fv.component[x2] = fv.component[x2] + hom_np.basis[s].component[x2].scaled(f_map.at(s, u));
                }
                for (int q = 0; q < n.base.carrier[x]; ++q)
                    comp.set_col(u * n.base.carrier[x] + q, fv.component[x] * vec_basis(fl, n.base.carrier[x], q));
            }
            nu.component.push_back(std::move(comp));
        }
        auto bad = validate_morphism(vns, ps, nu);
        if (!bad.empty()) throw std::domain_error("tensor-hom adjunction: nu not a smash morphism: " + bad[0]);
        auto coords = solve(left_hom, Matrix::column(morphism_coords(vns, ps, nu)));
        if (!coords) throw std::domain_error("tensor-hom adjunction: nu outside smash Hom (bug)");
        for (int r = 0; r < out.dim_smash_side; ++r) phi_inv.at(r, t) = coords->at(r, 0);
    }
    out.phi_inv = phi_inv;

    out.two_sided_inverse = out.dim_smash_side == out.dim_hlinear_side &&
                            phi * phi_inv == Matrix::identity(fl, out.dim_hlinear_side) &&
                            phi_inv * phi == Matrix::identity(fl, out.dim_smash_side);
    return out;
}

FiniteWitness finite_witness(const EquivModule& m, const EquivModule& n, const ModuleMorphism& eta, CatPtr smash) {
    const auto& hcat = *m.hcat;
    const auto& h = *hcat.hopf;
    const int nobj = hcat.base->n_objects();
    const FieldSpec fl = hcat.base->field;

    FiniteWitness out;
    HomHAction hom = hom_h_action(m, n);
    auto eta_coords = solve(hom.basis_matrix, Matrix::column(morphism_coords(m.base, n.base, eta)));
    if (!eta_coords) throw std::invalid_argument("finite_witness: eta is not a module morphism");

    // V = span(H eta) inside the Hom H-module
    Matrix orbit(fl, hom.hmodule.dim, h.dim);
    for (int i = 0; i < h.dim; ++i) orbit.set_col(i, hom.hmodule.action[i] * eta_coords->col(0));
    RrefResult rr = rref(orbit);
    out.v_embedding = orbit.cols_subset(rr.pivot_cols);

    out.v = HModule{hcat.hopf, out.v_embedding.cols(), {}};
    for (int i = 0; i < h.dim; ++i) {
        auto restricted = solve(out.v_embedding, hom.hmodule.action[i] * out.v_embedding);
        if (!restricted) throw std::domain_error("finite_witness: orbit span is not H-stable (bug)");
        out.v.action.push_back(*restricted);
    }
    auto bad_v = validate_hmodule(out.v);
    if (!bad_v.empty()) throw std::domain_error("finite_witness: V is not an H-module: " + bad_v[0]);

    auto v_elt = solve(out.v_embedding, *eta_coords);
    if (!v_elt) throw std::domain_error("finite_witness: eta not in its own orbit span (bug)");
    out.v_element = v_elt->col(0);

    // eta_hat(X)(xi_t (x) m) := xi_t(X)(m) for the chosen basis xi_t of V
    out.tensor_source = tensor_hmod(out.v, m);
    CatModule source_smash = to_smash_module(out.tensor_source, smash);
    CatModule target_smash = to_smash_module(n, smash);

    std::vector<ModuleMorphism> xi;  // the morphisms carried by V's basis
    for (int t = 0; t < out.v.dim; ++t) {
        Vec combo = vec_zero(fl, hom.basis_matrix.rows());
        for (int s = 0; s < hom.hmodule.dim; ++s)
            combo = vec_add(combo, vec_scaled(hom.basis_matrix.col(s), out.v_embedding.at(s, t)));
        xi.push_back(morphism_from_coords(m.base, n.base, combo));
    }

    for (int x = 0; x < nobj; ++x) {
        Matrix comp(fl, n.base.carrier[x], out.tensor_source.base.carrier[x]);
        for (int t = 0; t < out.v.dim; ++t)
            for (int q = 0; q < m.base.carrier[x]; ++q)
                comp.set_col(t * m.base.carrier[x] + q, xi[t].component[x] * vec_basis(fl, m.base.carrier[x], q));
        out.eta_hat.component.push_back(std::move(comp));
    }

    out.valid = validate_morphism(source_smash, target_smash, out.eta_hat).empty();

    // eta_hat(X)(v (x) m) = eta(X)(m)
    for (int x = 0; x < nobj && out.valid; ++x) {
        Matrix recovered(fl, n.base.carrier[x], m.base.carrier[x]);
        for (int q = 0; q < m.base.carrier[x]; ++q) {
            Vec arg = vec_zero(fl, out.tensor_source.base.carrier[x]);
            for (int t = 0; t < out.v.dim; ++t) arg[t * m.base.carrier[x] + q] = out.v_element[t];
            recovered.set_col(q, out.eta_hat.component[x] * arg);
        }
        if (recovered != eta.component[x]) out.valid = false;
    }

    // reverse extraction: xi_u(X)(m) = eta_hat(X)(v_u (x) m), spans H eta
    Matrix extracted_coords(fl, hom.hmodule.dim, out.v.dim);
    for (int u = 0; u < out.v.dim; ++u) {
        ModuleMorphism xi_u;
        for (int x = 0; x < nobj; ++x) {
            Matrix comp(fl, n.base.carrier[x], m.base.carrier[x]);
            for (int q = 0; q < m.base.carrier[x]; ++q) {
                Vec arg = vec_zero(fl, out.tensor_source.base.carrier[x]);
                arg[u * m.base.carrier[x] + q] = Scalar::one(fl);
                comp.set_col(q, out.eta_hat.component[x] * arg);
            }
            xi_u.component.push_back(std::move(comp));
        }
        auto coords = solve(hom.basis_matrix, Matrix::column(morphism_coords(m.base, n.base, xi_u)));
        if (!coords) throw std::domain_error("finite_witness: extracted map outside Hom (bug)");
        extracted_coords.set_col(u, coords->col(0));
        out.extracted.push_back(std::move(xi_u));
    }
    out.extraction_spans_orbit = in_column_span(extracted_coords, orbit);
    return out;
}

namespace fixtures {

EquivModule trivial_over_dual_numbers(HCatPtr c2fix) {
    EquivModule out;
    out.hcat = c2fix;
    out.base.category = c2fix->base;
    out.base.side = Side::Right;
    out.base.carrier = {1};
    const FieldSpec fl = c2fix->base->field;
    Matrix one = Matrix::identity(fl, 1);
    Matrix zero(fl, 1, 1);
    out.base.action = {{{one, zero}}};  // 1 acts by 1, x by 0
    out.hmod.push_back(trivial_hmodule(c2fix->hopf));
    return out;
}

EquivModule regular_over_dual_numbers(HCatPtr c2fix) {
    EquivModule out;
    out.hcat = c2fix;
    out.base = representable(c2fix->base, 0, Side::Right);
    out.hmod.push_back(c2fix->hom_module(0, 0));  // g(a + bx) = a - bx
    return out;
}

EquivModule trivial_over_point(HCatPtr c1) {
    EquivModule out;
    out.hcat = c1;
    out.base = representable(c1->base, 0, Side::Right);
    out.hmod.push_back(trivial_hmodule(c1->hopf));
    return out;
}

}  // namespace fixtures

}  // namespace hopfcat
