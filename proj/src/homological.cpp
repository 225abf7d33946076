#include "hopfcat/homological.hpp"

namespace hopfcat {

std::vector<std::string> validate_complex(const CatComplex& c) {
    std::vector<std::string> report;
    for (size_t q = 0; q < c.d.size(); ++q) {
        auto bad = validate_morphism(c.term[q], c.term[q + 1], c.d[q]);
        for (auto& line : bad) report.push_back("d[" + std::to_string(q) + "]: " + line);
    }
    for (size_t q = 0; q + 1 < c.d.size(); ++q)
        if (!morphism_is_zero(compose_morphisms(c.d[q + 1], c.d[q])))
            report.push_back("d*d != 0 at degree " + std::to_string(q));
    return report;
}

FreeResolution free_resolution_plain(const CatModule& m, int length) {
    FreeResolution out;
    out.target = m;
    CatModule cur = m;
    ModuleMorphism prev_inclusion;  // kernel of the previous cover into its term

    for (int i = 0; i <= length; ++i) {
        GeneratorSet gens = generators(cur);
        out.term.push_back(gens.cover);
        std::vector<int> objs;
        for (const auto& [obj, elem] : gens.elements) objs.push_back(obj);
        out.term_objects.push_back(objs);
        out.shapes.push_back("(+) of " + std::to_string(objs.size()) + " representables");

        if (i == 0) {
            out.augmentation = gens.epi;
        } else {
            out.diff.push_back(compose_morphisms(prev_inclusion, gens.epi));
        }
        if (i == length) break;

        auto kk = morphism_kernel_cokernel(gens.cover, cur, gens.epi);
        prev_inclusion = kk.inclusion;
        cur = kk.kernel;
    }
    return out;
}

namespace {

// exactness of im(next) = ker(into) by rank arithmetic, given into*next = 0
std::vector<std::string> check_exact_at(const ModuleMorphism& into, const ModuleMorphism& next,
                                        const std::string& where) {
    std::vector<std::string> report;
    for (size_t x = 0; x < into.component.size(); ++x) {
        if (!(into.component[x] * next.component[x]).is_zero()) {
            report.push_back(where + ": d*d != 0");
            continue;
        }
        int ker = into.component[x].cols() - rank(into.component[x]);
        int im = rank(next.component[x]);
        if (ker != im)
            report.push_back(where + ": homology has dimension " + std::to_string(ker - im) + " at object " +
                             std::to_string(x));
    }
    return report;
}

}  // namespace

std::vector<std::string> verify_free_resolution(const FreeResolution& r) {
    std::vector<std::string> report;
    for (size_t x = 0; x < r.augmentation.component.size(); ++x)
        if (rank(r.augmentation.component[x]) != r.target.carrier[x])
            report.push_back("augmentation not surjective at object " + std::to_string(x));
    if (!r.diff.empty()) {
        auto sub = check_exact_at(r.augmentation, r.diff[0], "degree 0");
        report.insert(report.end(), sub.begin(), sub.end());
    }
    for (size_t i = 0; i + 1 < r.diff.size(); ++i) {
        auto sub = check_exact_at(r.diff[i], r.diff[i + 1], "degree " + std::to_string(i + 1));
        report.insert(report.end(), sub.begin(), sub.end());
    }
    return report;
}

ModuleMorphism free_morphism(const CatModule& cover, const std::vector<int>& cover_objects,
                             const CatModule& target, const std::vector<Vec>& generator_images) {
    const auto& c = *cover.category;
    const int nobj = c.n_objects();
    const FieldSpec fl = c.field;
    ModuleMorphism out;
    for (int y = 0; y < nobj; ++y) {
        Matrix comp(fl, target.carrier[y], cover.carrier[y]);
        int col = 0;
        for (size_t k = 0; k < cover_objects.size(); ++k) {
            const int obj = cover_objects[k];
            const int hd = cover.side == Side::Right ? c.hom_dim(y, obj) : c.hom_dim(obj, y);
            for (int b = 0; b < hd; ++b) {
                Vec f = vec_basis(fl, hd, b);
                Vec image = cover.side == Side::Right ? target.act(y, obj, f) * generator_images[k]
                                                      : target.act(obj, y, f) * generator_images[k];
                comp.set_col(col++, image);
            }
        }
        out.component.push_back(std::move(comp));
    }
    return out;
}

CatModule dual_module(const CatModule& m) {
    CatModule out;
    out.category = m.category;
    out.side = m.side == Side::Right ? Side::Left : Side::Right;
    out.carrier = m.carrier;
    const int nobj = m.category->n_objects();
    out.action.assign(nobj, std::vector<std::vector<Matrix>>(nobj));
    for (int x = 0; x < nobj; ++x)
        for (int y = 0; y < nobj; ++y)
            for (const auto& a : m.action[x][y]) out.action[x][y].push_back(a.transpose());
    return out;
}

ModuleMorphism dual_morphism(const ModuleMorphism& eta) {
    ModuleMorphism out;
    for (const auto& comp : eta.component) out.component.push_back(comp.transpose());
    return out;
}

InjectiveResolution injective_resolution(const CatModule& m, int length) {
    InjectiveResolution out;
    out.source = m;
    CatModule cur = m;
    ModuleMorphism prev_projection;  // onto the previous cokernel

    for (int k = 0; k <= length; ++k) {
        CatModule term;
        ModuleMorphism embed;
        if (cur.total_dim() == 0 || injective_by_duality(cur)) {
            // already injective: the resolution stops here
            term = cur;
            for (int x = 0; x < cur.category->n_objects(); ++x)
                embed.component.push_back(Matrix::identity(cur.category->field, cur.carrier[x]));
        } else {
            // embed into the dual of a free cover of the dual
            GeneratorSet gens = generators(dual_module(cur));
            term = dual_module(gens.cover);
            embed = dual_morphism(gens.epi);
        }

        out.term.push_back(term);
        if (k == 0)
            out.augmentation = embed;
        else
            out.diff.push_back(compose_morphisms(embed, prev_projection));
        if (k == length) break;

        auto kk = morphism_kernel_cokernel(cur, term, embed);
        prev_projection = kk.projection;
        cur = kk.cokernel;
    }

    out.certified = true;
    for (const auto& i : out.term)
        out.certified = out.certified && injective_by_duality(i) && injective_by_lifting(i);
    return out;
}

std::vector<std::string> verify_injective_resolution(const InjectiveResolution& r) {
    std::vector<std::string> report;
    for (size_t x = 0; x < r.augmentation.component.size(); ++x)
        if (rank(r.augmentation.component[x]) != r.source.carrier[x])
            report.push_back("augmentation not injective at object " + std::to_string(x));
    if (!r.diff.empty())
        for (size_t x = 0; x < r.augmentation.component.size(); ++x) {
            if (!(r.diff[0].component[x] * r.augmentation.component[x]).is_zero()) {
                report.push_back("d0 * augmentation != 0");
                break;
            }
            int ker = r.diff[0].component[x].cols() - rank(r.diff[0].component[x]);
            if (ker != rank(r.augmentation.component[x]))
                report.push_back("not exact at I^0, object " + std::to_string(x));
        }
    for (size_t k = 0; k + 1 < r.diff.size(); ++k) {
        auto sub = check_exact_at(r.diff[k + 1], r.diff[k], "I^" + std::to_string(k + 1));
        report.insert(report.end(), sub.begin(), sub.end());
    }
    return report;
}

bool injective_by_lifting(const CatModule& candidate) {
    const auto& c = *candidate.category;
    const int nobj = c.n_objects();

    for (int obj = 0; obj < nobj; ++obj) {
        CatModule rep = representable(candidate.category, obj, candidate.side);
        Matrix hom_from_rep = module_hom_matrix(rep, candidate);

        // panel: cyclic submodules of the representable, generated by each
        // basis vector and by each pairwise sum of basis vectors
        for (int y = 0; y < nobj; ++y) {
            std::vector<Vec> seeds;
            for (int v = 0; v < rep.carrier[y]; ++v) seeds.push_back(vec_basis(c.field, rep.carrier[y], v));
            for (int v = 0; v < rep.carrier[y]; ++v)
                for (int w = v + 1; w < rep.carrier[y]; ++w)
                    seeds.push_back(vec_add(vec_basis(c.field, rep.carrier[y], v),
                                            vec_basis(c.field, rep.carrier[y], w)));

            for (const Vec& elem : seeds) {
                std::vector<Matrix> span(nobj);
                for (int z = 0; z < nobj; ++z) span[z] = Matrix(c.field, rep.carrier[z], 0);
                for (int z = 0; z < nobj; ++z) {
                    const int hd = rep.side == Side::Right ? c.hom_dim(z, y) : c.hom_dim(y, z);
                    for (int b = 0; b < hd; ++b) {
                        Vec f = vec_basis(c.field, hd, b);
                        Matrix img = Matrix::column(rep.side == Side::Right ? rep.act(z, y, f) * elem
                                                                            : rep.act(y, z, f) * elem);
                        if (!in_column_span(span[z], img)) span[z] = Matrix::hstack(span[z], img);
                    }
                }
                Submodule sub = submodule_from_basis(rep, span);
                Matrix hom_from_sub = module_hom_matrix(sub.module, candidate);
                if (hom_from_sub.cols() == 0) continue;

                // restriction Hom(rep, I) -> Hom(sub, I) must be onto
                Matrix coords_all(c.field, hom_from_sub.cols(), hom_from_rep.cols());
                for (int t = 0; t < hom_from_rep.cols(); ++t) {
                    ModuleMorphism eta = morphism_from_coords(rep, candidate, hom_from_rep.col(t));
                    ModuleMorphism res = compose_morphisms(eta, sub.inclusion);
                    auto coords = solve(hom_from_sub, Matrix::column(morphism_coords(sub.module, candidate, res)));
                    if (!coords) throw std::domain_error("injective_by_lifting: restriction leaves Hom (bug)");
                    coords_all.set_col(t, coords->col(0));
                }
                if (rank(coords_all) != hom_from_sub.cols()) return false;
            }
        }
    }
    return true;
}

bool injective_by_duality(const CatModule& candidate) {
    if (candidate.total_dim() == 0) return true;
    CatModule dual = dual_module(candidate);
    GeneratorSet gens = generators(dual);
    // dual is projective iff its free cover splits: some sigma with
    // epi o sigma = id
    Matrix sections = module_hom_matrix(dual, gens.cover);
    if (sections.cols() == 0) return dual.total_dim() == 0;
    Matrix id_coords;
    {
        ModuleMorphism ident;
        for (int x = 0; x < dual.category->n_objects(); ++x)
            ident.component.push_back(Matrix::identity(dual.category->field, dual.carrier[x]));
        id_coords = Matrix::column(morphism_coords(dual, dual, ident));
    }
    Matrix composed(dual.category->field, id_coords.rows(), sections.cols());
    for (int t = 0; t < sections.cols(); ++t) {
        ModuleMorphism sigma = morphism_from_coords(dual, gens.cover, sections.col(t));
        ModuleMorphism round = compose_morphisms(gens.epi, sigma);
        composed.set_col(t, morphism_coords(dual, dual, round));
    }
    return solve(composed, id_coords).has_value();
}

SmashResolution free_resolution_smash(const EquivModule& m, CatPtr smash, int length) {
    SmashResolution out;
    out.hcat = m.hcat;
    out.smash = smash;
    const auto& hcat = *m.hcat;
    const auto& h = *hcat.hopf;
    const FieldSpec fl = hcat.base->field;

    out.res.target = to_smash_module(m, smash);
    CatModule cur = out.res.target;
    ModuleMorphism prev_inclusion;

    for (int i = 0; i <= length; ++i) {
        EquivModule cur_equiv = from_smash_module(m.hcat, cur);
        GeneratorSet gens = generators(cur);  // over the smash category

        CatModule p;
        ModuleMorphism epi;
        std::vector<int> objs;
        if (gens.elements.empty()) {
            p = zero_module(smash, Side::Right);
            for (size_t x = 0; x < cur.carrier.size(); ++x)
                epi.component.push_back(Matrix(fl, cur.carrier[x], 0));
            out.res.shapes.push_back("0");
        } else {
            // V = (+) H m_i, cut to cyclic H-submodules of the carriers
            std::vector<Matrix> orbit_embed;
            std::vector<HModule> cyclic;
            std::vector<EquivModule> reps;
            for (const auto& [obj, elem] : gens.elements) {
                Matrix orbit(fl, cur.carrier[obj], h.dim);
                for (int j = 0; j < h.dim; ++j) orbit.set_col(j, cur_equiv.hmod[obj].action[j] * elem);
                Matrix emb = orbit.cols_subset(rref(orbit).pivot_cols);
                HModule v{hcat.hopf, emb.cols(), {}};
                for (int j = 0; j < h.dim; ++j) {
                    auto restricted = solve(emb, cur_equiv.hmod[obj].action[j] * emb);
                    if (!restricted) throw std::domain_error("free_resolution_smash: orbit not H-stable (bug)");
                    v.action.push_back(*restricted);
                }
                orbit_embed.push_back(emb);
                cyclic.push_back(std::move(v));
                reps.push_back(representable_equiv(m.hcat, obj));
                objs.push_back(obj);
            }
            HModule v_sum = cyclic[0];
            for (size_t k = 1; k < cyclic.size(); ++k) {
                HModule next{hcat.hopf, v_sum.dim + cyclic[k].dim, {}};
                for (int j = 0; j < h.dim; ++j)
                    next.action.push_back(Matrix::direct_sum(v_sum.action[j], cyclic[k].action[j]));
                v_sum = std::move(next);
            }
            EquivModule rep_sum = reps.size() == 1 ? reps[0] : direct_sum_equiv(reps);
            EquivModule p_equiv = tensor_hmod(v_sum, rep_sum);
            p = to_smash_module(p_equiv, smash);
            out.res.shapes.push_back("V(dim " + std::to_string(v_sum.dim) + ") (x) (+) of " +
                                     std::to_string(objs.size()) + " representables");

            // nu(Y)(v (x) (f_i)_i) = sum_i M(f_i # 1)(v_i)
            std::vector<int> v_offset(cyclic.size(), 0);
            for (size_t k = 1; k < cyclic.size(); ++k) v_offset[k] = v_offset[k - 1] + cyclic[k - 1].dim;
            const auto& b = *hcat.base;
            const int nobj = b.n_objects();
            for (int y = 0; y < nobj; ++y) {
                std::vector<int> rep_offset(objs.size(), 0);
                int acc = 0;
                for (size_t k = 0; k < objs.size(); ++k) {
                    rep_offset[k] = acc;
                    acc += b.hom_dim(y, objs[k]);
                }
                Matrix comp(fl, cur.carrier[y], v_sum.dim * acc);
                for (size_t k = 0; k < objs.size(); ++k) {
                    const int hd = b.hom_dim(y, objs[k]);
                    for (int t = 0; t < cyclic[k].dim; ++t)
                        for (int bidx = 0; bidx < hd; ++bidx) {
                            Vec img = cur_equiv.base.act(y, objs[k], vec_basis(fl, hd, bidx)) *
                                      orbit_embed[k].col(t);
                            comp.set_col((v_offset[k] + t) * acc + rep_offset[k] + bidx, img);
                        }
                }
                epi.component.push_back(std::move(comp));
            }

            auto bad = validate_morphism(p, cur, epi);
            if (!bad.empty()) throw std::domain_error("free_resolution_smash: cover map not natural: " + bad[0]);
            for (size_t x = 0; x < cur.carrier.size(); ++x)
                if (rank(epi.component[x]) != cur.carrier[x])
                    throw std::domain_error("free_resolution_smash: cover map not surjective");
        }

        out.res.term.push_back(p);
        out.res.term_objects.push_back(objs);
        if (i == 0)
            out.res.augmentation = epi;
        else
            out.res.diff.push_back(compose_morphisms(prev_inclusion, epi));
        if (i == length) break;

        auto kk = morphism_kernel_cokernel(p, cur, epi);
        prev_inclusion = kk.inclusion;
        cur = kk.kernel;
    }
    return out;
}

RelHopfResolution free_resolution_relhopf(const RelHopfModule& m, int length) {
    RelHopfResolution out;
    out.target = m;
    RelHopfModule cur = m;
    ModuleMorphism prev_inclusion;

    for (int i = 0; i <= length; ++i) {
        FgCertificate fg = fg_certificate(cur);
        if (!fg.surjective) throw std::domain_error("free_resolution_relhopf: certificate failed");
        out.term.push_back(fg.cover);
        out.shapes.push_back("((+) of " + std::to_string(fg.objects.size()) + " representables) (x) W(dim " +
                             std::to_string(fg.w_dim) + ")");
        if (i == 0)
            out.augmentation = fg.epi;
        else
            out.diff.push_back(compose_morphisms(prev_inclusion, fg.epi));
        if (i == length) break;

        RelHopfKernel kk = relhopf_kernel(fg.cover, cur, fg.epi);
        prev_inclusion = kk.inclusion;
        cur = kk.kernel;
    }
    return out;
}

std::vector<std::string> verify_relhopf_resolution(const RelHopfResolution& r) {
    std::vector<std::string> report;
    for (size_t x = 0; x < r.augmentation.component.size(); ++x)
        if (rank(r.augmentation.component[x]) != r.target.base.carrier[x])
            report.push_back("augmentation not surjective at object " + std::to_string(x));
    if (!r.diff.empty()) {
        auto sub = check_exact_at(r.augmentation, r.diff[0], "degree 0");
        report.insert(report.end(), sub.begin(), sub.end());
    }
    for (size_t i = 0; i + 1 < r.diff.size(); ++i) {
        auto sub = check_exact_at(r.diff[i], r.diff[i + 1], "degree " + std::to_string(i + 1));
        report.insert(report.end(), sub.begin(), sub.end());
    }
    for (const auto& t : r.term) {
        auto bad = validate_relhopf(t);
        for (auto& line : bad) report.push_back("term: " + line);
    }
    return report;
}

namespace {

// cohomology dims of a cochain complex given by matrices between coordinate
// spaces, reported for q = 0..reported (complex must extend one step further)
std::vector<int> complex_cohomology_dims(const std::vector<Matrix>& d, int reported) {
    std::vector<int> dims;
    for (int q = 0; q <= reported; ++q) {
        Matrix z = kernel_basis(d[q]);
        Matrix b = q == 0 ? Matrix(d[q].field(), d[q].cols(), 0) : d[q - 1];
        dims.push_back(subquotient(z, b).dim);
    }
    return dims;
}

// differential matrices of Hom(P_*, N) for a free resolution (precompose)
std::vector<Matrix> hom_from_resolution_diffs(const std::vector<CatModule>& p,
                                              const std::vector<ModuleMorphism>& diff, const CatModule& n,
                                              std::vector<Matrix>* bases_out) {
    std::vector<Matrix> bases;
    for (const auto& term : p) bases.push_back(module_hom_matrix(term, n));
    std::vector<Matrix> d;
    for (size_t q = 0; q + 1 < p.size(); ++q) {
        Matrix dm(n.category->field, bases[q + 1].cols(), bases[q].cols());
        for (int t = 0; t < bases[q].cols(); ++t) {
            ModuleMorphism eta = morphism_from_coords(p[q], n, bases[q].col(t));
            ModuleMorphism pre = compose_morphisms(eta, diff[q]);
            auto coords = solve(bases[q + 1], Matrix::column(morphism_coords(p[q + 1], n, pre)));
            if (!coords) throw std::domain_error("hom_from_resolution_diffs: image outside Hom (bug)");
            dm.set_col(t, coords->col(0));
        }
        d.push_back(std::move(dm));
    }
    if (bases_out) *bases_out = bases;
    return d;
}

// differential matrices of Hom(M, I^*) for an injective resolution (postcompose)
std::vector<Matrix> hom_into_resolution_diffs(const CatModule& m, const InjectiveResolution& ir,
                                              std::vector<Matrix>* bases_out) {
    std::vector<Matrix> bases;
    for (const auto& term : ir.term) bases.push_back(module_hom_matrix(m, term));
    std::vector<Matrix> d;
    for (size_t k = 0; k + 1 < ir.term.size(); ++k) {
        Matrix dm(m.category->field, bases[k + 1].cols(), bases[k].cols());
        for (int t = 0; t < bases[k].cols(); ++t) {
            ModuleMorphism xi = morphism_from_coords(m, ir.term[k], bases[k].col(t));
            ModuleMorphism post = compose_morphisms(ir.diff[k], xi);
            auto coords = solve(bases[k + 1], Matrix::column(morphism_coords(m, ir.term[k + 1], post)));
            if (!coords) throw std::domain_error("hom_into_resolution_diffs: image outside Hom (bug)");
            dm.set_col(t, coords->col(0));
        }
        d.push_back(std::move(dm));
    }
    if (bases_out) *bases_out = bases;
    return d;
}

// Subquotient of an H-module complex at degree q, with the inherited action.
HModule hmodule_subquotient(const std::vector<HModule>& terms, const std::vector<Matrix>& d, int q) {
    const HopfPtr hopf = terms[q].hopf;
    const FieldSpec fl = hopf->field;
    Matrix z = kernel_basis(d[q]);
    Matrix b = q == 0 ? Matrix(fl, d[q].cols(), 0) : d[q - 1];
    Subquotient sq = subquotient(z, b);

    Matrix b_ind = b.cols_subset(rref(b).pivot_cols);
    Matrix frame = b_ind.cols() == 0 ? sq.reps : Matrix::hstack(b_ind, sq.reps);
    HModule out{hopf, sq.dim, {}};
    for (int i = 0; i < hopf->dim; ++i) {
        Matrix acted = terms[q].action[i] * sq.reps;
        auto coords = solve(frame, acted);
        if (!coords) throw std::domain_error("hmodule_subquotient: action leaves cycles (differential not H-linear?)");
        Matrix act(fl, sq.dim, sq.dim);
        for (int r2 = 0; r2 < sq.dim; ++r2)
            for (int c2 = 0; c2 < sq.dim; ++c2) act.at(r2, c2) = coords->at(b_ind.cols() + r2, c2);
        out.action.push_back(std::move(act));
    }
    auto bad = validate_hmodule(out);
    if (!bad.empty()) throw std::domain_error("hmodule_subquotient: invalid induced action: " + bad[0]);
    return out;
}

// Same for H-comodule complexes.
HComodule hcomodule_subquotient(const std::vector<HComodule>& terms, const std::vector<Matrix>& d, int q) {
    const HopfPtr hopf = terms[q].hopf;
    const FieldSpec fl = hopf->field;
    const int n = hopf->dim;
    Matrix z = kernel_basis(d[q]);
    Matrix b = q == 0 ? Matrix(fl, d[q].cols(), 0) : d[q - 1];
    Subquotient sq = subquotient(z, b);

    Matrix b_ind = b.cols_subset(rref(b).pivot_cols);
    Matrix frame = b_ind.cols() == 0 ? sq.reps : Matrix::hstack(b_ind, sq.reps);
    Matrix rho(fl, sq.dim * n, sq.dim);
    for (int c2 = 0; c2 < sq.dim; ++c2) {
        Matrix coacted = terms[q].coaction * Matrix::column(sq.reps.col(c2));  // (t_q * n) x 1
        for (int s = 0; s < n; ++s) {
            Matrix slice(fl, terms[q].dim, 1);
            for (int a = 0; a < terms[q].dim; ++a) slice.at(a, 0) = coacted.at(a * n + s, 0);
            auto coords = solve(frame, slice);
            if (!coords) throw std::domain_error("hcomodule_subquotient: coaction leaves cycles");
            for (int r2 = 0; r2 < sq.dim; ++r2) rho.at(r2 * n + s, c2) = coords->at(b_ind.cols() + r2, 0);
        }
    }
    HComodule out{hopf, sq.dim, std::move(rho)};
    auto bad = validate_hcomodule(out);
    if (!bad.empty()) throw std::domain_error("hcomodule_subquotient: invalid induced coaction: " + bad[0]);
    return out;
}

}  // namespace

HModuleComplex hom_complex_equivariant(const EquivModule& m, const EquivModule& n, CatPtr smash, int degree) {
    InjectiveResolution ir = injective_resolution(to_smash_module(n, smash), degree + 1);
    if (!ir.certified) throw std::domain_error("hom_complex_equivariant: injective terms failed certification");
    auto bad_ir = verify_injective_resolution(ir);
    if (!bad_ir.empty()) throw std::domain_error("hom_complex_equivariant: resolution not exact: " + bad_ir[0]);

    HModuleComplex out;
    std::vector<HomHAction> homs;
    for (const auto& term : ir.term) {
        EquivModule e = from_smash_module(m.hcat, term);
        homs.push_back(hom_h_action(m, e));
        out.term.push_back(homs.back().hmodule);
    }
    for (size_t k = 0; k + 1 < ir.term.size(); ++k) {
        Matrix dm(m.hcat->base->field, homs[k + 1].basis_matrix.cols(), homs[k].basis_matrix.cols());
        for (int t = 0; t < homs[k].basis_matrix.cols(); ++t) {
            ModuleMorphism post = compose_morphisms(ir.diff[k], homs[k].basis[t]);
            EquivModule next = from_smash_module(m.hcat, ir.term[k + 1]);
            auto coords = solve(homs[k + 1].basis_matrix,
                                Matrix::column(morphism_coords(m.base, next.base, post)));
            if (!coords) throw std::domain_error("hom_complex_equivariant: image outside Hom (bug)");
            dm.set_col(t, coords->col(0));
        }
        // the differential must be H-linear
        for (int i = 0; i < m.hcat->hopf->dim; ++i)
            if (out.term[k + 1].action[i] * dm != dm * out.term[k].action[i])
                throw std::domain_error("hom_complex_equivariant: differential not H-linear");
        out.d.push_back(std::move(dm));
    }
    return out;
}

namespace {

// Hom_{D-Mod}(M, N) with the rational coaction on the solver's basis; the
// certificate-free core shared by hom_complex_relhopf.
struct HomComoduleCore {
    Matrix basis_matrix;
    std::vector<ModuleMorphism> basis;
    HComodule comodule;
};

HomComoduleCore hom_comodule_core(const RelHopfModule& m, const RelHopfModule& n) {
    RationalHom full = rational_hom(m, n);  // carries validation; reuse its data
    return HomComoduleCore{full.basis_matrix, full.basis, full.comodule};
}

}  // namespace

HComoduleComplex hom_complex_relhopf(const RelHopfModule& m, const RelHopfModule& n, int degree) {
    const auto& d = *m.dcat;
    HCatPtr dual_cat = dualize_coh_category(d);
    CatPtr smash = smash_product(*dual_cat);
    if (!relhopf_smash_route_agrees(m, n, *dual_cat, smash))
        throw std::domain_error("hom_complex_relhopf: dual-smash route failed its Hom cross-check");

    InjectiveResolution ir = injective_resolution(relhopf_to_smash(n, *dual_cat, smash), degree + 1);
    if (!ir.certified) throw std::domain_error("hom_complex_relhopf: injective terms failed certification");
    auto bad_ir = verify_injective_resolution(ir);
    if (!bad_ir.empty()) throw std::domain_error("hom_complex_relhopf: resolution not exact: " + bad_ir[0]);

    std::vector<RelHopfModule> terms;
    for (const auto& t : ir.term) {
        RelHopfModule e = relhopf_from_smash(m.dcat, *dual_cat, t);
        auto bad = validate_relhopf(e);
        if (!bad.empty()) throw std::domain_error("hom_complex_relhopf: converted term invalid: " + bad[0]);
        terms.push_back(std::move(e));
    }

    HComoduleComplex out;
    std::vector<HomComoduleCore> homs;
    for (const auto& e : terms) {
        homs.push_back(hom_comodule_core(m, e));
        out.term.push_back(homs.back().comodule);
    }
    const int hn = m.dcat->hopf->dim;
    for (size_t k = 0; k + 1 < terms.size(); ++k) {
        Matrix dm(m.dcat->base->field, homs[k + 1].basis_matrix.cols(), homs[k].basis_matrix.cols());
        for (int t = 0; t < homs[k].basis_matrix.cols(); ++t) {
            ModuleMorphism post = compose_morphisms(ir.diff[k], homs[k].basis[t]);
            auto coords = solve(homs[k + 1].basis_matrix,
                                Matrix::column(morphism_coords(m.base, terms[k + 1].base, post)));
            if (!coords) throw std::domain_error("hom_complex_relhopf: image outside Hom (bug)");
            dm.set_col(t, coords->col(0));
        }
        // the differential must be colinear: rho_{k+1} d = (d (x) id) rho_k
        const Matrix& rho_k = out.term[k].coaction;
        const Matrix& rho_k1 = out.term[k + 1].coaction;
        Matrix lhs = rho_k1 * dm;
        Matrix rhs(lhs.field(), lhs.rows(), lhs.cols());
        for (int c2 = 0; c2 < dm.cols(); ++c2)
            for (int a = 0; a < out.term[k].dim; ++a)
                for (int s = 0; s < hn; ++s) {
                    const Scalar& v = rho_k.at(a * hn + s, c2);
                    if (v.is_zero()) continue;
                    for (int p = 0; p < out.term[k + 1].dim; ++p)
                        if (!dm.at(p, a).is_zero()) rhs.at(p * hn + s, c2) += dm.at(p, a) * v;
                }
        if (lhs != rhs) throw std::domain_error("hom_complex_relhopf: differential not colinear");
        out.d.push_back(std::move(dm));
    }
    return out;
}

ExtResult ext_plain(const CatModule& m, const CatModule& n, int degree) {
    ExtResult out;

    FreeResolution fr = free_resolution_plain(m, degree + 1);
    auto bad_fr = verify_free_resolution(fr);
    if (!bad_fr.empty()) throw std::domain_error("ext_plain: free resolution not exact: " + bad_fr[0]);
    std::vector<Matrix> d_free = hom_from_resolution_diffs(fr.term, fr.diff, n, nullptr);
    out.dims = complex_cohomology_dims(d_free, degree);

    InjectiveResolution ir = injective_resolution(n, degree + 1);
    if (!ir.certified) throw std::domain_error("ext_plain: injective terms failed certification");
    auto bad_ir = verify_injective_resolution(ir);
    if (!bad_ir.empty()) throw std::domain_error("ext_plain: injective resolution not exact: " + bad_ir[0]);
    std::vector<Matrix> d_inj = hom_into_resolution_diffs(m, ir, nullptr);
    out.dims_injective_route = complex_cohomology_dims(d_inj, degree);

    out.routes_agree = out.dims == out.dims_injective_route;
    if (!out.routes_agree) throw std::domain_error("ext_plain: free and injective routes disagree");
    return out;
}

ExtResult ext_equivariant(const EquivModule& m, const EquivModule& n, CatPtr smash, int degree) {
    ExtResult out;

    // free route: shaped resolution in Mod-(C#H), Hom over the base category
    SmashResolution sr = free_resolution_smash(m, smash, degree + 1);
    auto bad_fr = verify_free_resolution(sr.res);
    if (!bad_fr.empty()) throw std::domain_error("ext_equivariant: smash resolution not exact: " + bad_fr[0]);

    std::vector<HModule> free_terms;
    std::vector<Matrix> free_bases;
    std::vector<HomHAction> free_homs;
    for (const auto& p : sr.res.term) {
        EquivModule pe = from_smash_module(m.hcat, p);
        free_homs.push_back(hom_h_action(pe, n));
        free_terms.push_back(free_homs.back().hmodule);
        free_bases.push_back(free_homs.back().basis_matrix);
    }
    std::vector<Matrix> d_free;
    for (size_t q = 0; q + 1 < sr.res.term.size(); ++q) {
        EquivModule pq1 = from_smash_module(m.hcat, sr.res.term[q + 1]);
        Matrix dm(m.hcat->base->field, free_bases[q + 1].cols(), free_bases[q].cols());
        for (int t = 0; t < free_bases[q].cols(); ++t) {
            ModuleMorphism pre = compose_morphisms(free_homs[q].basis[t], sr.res.diff[q]);
            auto coords = solve(free_bases[q + 1], Matrix::column(morphism_coords(pq1.base, n.base, pre)));
            if (!coords) throw std::domain_error("ext_equivariant: image outside Hom (bug)");
            dm.set_col(t, coords->col(0));
        }
        for (int i = 0; i < m.hcat->hopf->dim; ++i)
            if (free_terms[q + 1].action[i] * dm != dm * free_terms[q].action[i])
                throw std::domain_error("ext_equivariant: free-route differential not H-linear");
        d_free.push_back(std::move(dm));
    }
    std::vector<HModule> ext_free;
    for (int q = 0; q <= degree; ++q) {
        ext_free.push_back(hmodule_subquotient(free_terms, d_free, q));
        out.dims.push_back(ext_free.back().dim);
    }

    // injective route with the inherited H-structure
    HModuleComplex hc = hom_complex_equivariant(m, n, smash, degree);
    for (int q = 0; q <= degree; ++q) {
        out.h_structure.push_back(hmodule_subquotient(hc.term, hc.d, q));
        out.dims_injective_route.push_back(out.h_structure.back().dim);
    }

    out.routes_agree = out.dims == out.dims_injective_route;
    // the H-structures live on different bases; compare invariants dimensions
    for (int q = 0; q <= degree && out.routes_agree; ++q)
        if (invariants(ext_free[q]).cols() != invariants(out.h_structure[q]).cols()) out.routes_agree = false;
    if (!out.routes_agree) throw std::domain_error("ext_equivariant: free and injective routes disagree");
    return out;
}

ExtResult ext_relhopf(const RelHopfModule& m, const RelHopfModule& n, int degree) {
    ExtResult out;

    RelHopfResolution rr = free_resolution_relhopf(m, degree + 1);
    auto bad_fr = verify_relhopf_resolution(rr);
    if (!bad_fr.empty()) throw std::domain_error("ext_relhopf: resolution not exact: " + bad_fr[0]);

    std::vector<HComodule> free_terms;
    std::vector<Matrix> free_bases;
    std::vector<std::vector<ModuleMorphism>> free_hom_bases;
    for (const auto& p : rr.term) {
        RationalHom core = rational_hom(p, n);
        free_terms.push_back(core.comodule);
        free_bases.push_back(core.basis_matrix);
        free_hom_bases.push_back(core.basis);
    }
    std::vector<Matrix> d_free;
    const int hn = m.dcat->hopf->dim;
    for (size_t q = 0; q + 1 < rr.term.size(); ++q) {
        Matrix dm(m.dcat->base->field, free_bases[q + 1].cols(), free_bases[q].cols());
        for (int t = 0; t < free_bases[q].cols(); ++t) {
            ModuleMorphism pre = compose_morphisms(free_hom_bases[q][t], rr.diff[q]);
            auto coords = solve(free_bases[q + 1],
                                Matrix::column(morphism_coords(rr.term[q + 1].base, n.base, pre)));
            if (!coords) throw std::domain_error("ext_relhopf: image outside Hom (bug)");
            dm.set_col(t, coords->col(0));
        }
        // colinearity of the differential
        Matrix lhs = free_terms[q + 1].coaction * dm;
        Matrix rhs(lhs.field(), lhs.rows(), lhs.cols());
        for (int c2 = 0; c2 < dm.cols(); ++c2)
            for (int a = 0; a < free_terms[q].dim; ++a)
                for (int s = 0; s < hn; ++s) {
                    const Scalar& v = free_terms[q].coaction.at(a * hn + s, c2);
                    if (v.is_zero()) continue;
                    for (int p = 0; p < free_terms[q + 1].dim; ++p)
                        if (!dm.at(p, a).is_zero()) rhs.at(p * hn + s, c2) += dm.at(p, a) * v;
                }
        if (lhs != rhs) throw std::domain_error("ext_relhopf: free-route differential not colinear");
        d_free.push_back(std::move(dm));
    }
    std::vector<HComodule> ext_free;
    for (int q = 0; q <= degree; ++q) {
        ext_free.push_back(hcomodule_subquotient(free_terms, d_free, q));
        out.dims.push_back(ext_free.back().dim);
    }

    HComoduleComplex hc = hom_complex_relhopf(m, n, degree);
    for (int q = 0; q <= degree; ++q) {
        out.coh_structure.push_back(hcomodule_subquotient(hc.term, hc.d, q));
        out.dims_injective_route.push_back(out.coh_structure.back().dim);
    }

    out.routes_agree = out.dims == out.dims_injective_route;
    for (int q = 0; q <= degree && out.routes_agree; ++q)
        if (coinvariants(ext_free[q]).cols() != coinvariants(out.coh_structure[q]).cols())
            out.routes_agree = false;
    if (!out.routes_agree) throw std::domain_error("ext_relhopf: free and injective routes disagree");
    return out;
}

CatModule hmodule_as_catmodule(const HModule& m, CatPtr one_object) {
    CatModule out;
    out.category = one_object;
    out.side = Side::Left;
    out.carrier = {m.dim};
    out.action = {{m.action}};
    return out;
}

HModule catmodule_as_hmodule(const CatModule& m, HopfPtr h) {
    if (m.category->n_objects() != 1 || m.side != Side::Left)
        throw std::invalid_argument("catmodule_as_hmodule: expects a one-object left module");
    return HModule{h, m.carrier[0], m.action[0][0]};
}

std::vector<int> derived_invariants(const HModule& m, int degree) {
    CatPtr cat = hopf_as_category(*m.hopf);
    CatModule triv = hmodule_as_catmodule(trivial_hmodule(m.hopf), cat);
    CatModule target = hmodule_as_catmodule(m, cat);
    ExtResult ext = ext_plain(triv, target, degree);
    if (ext.dims[0] != invariants(m).cols())
        throw std::domain_error("derived_invariants: degree-0 term differs from the invariants dimension");
    return ext.dims;
}

std::vector<int> derived_coinvariants(const HComodule& m, int degree) {
    HopfPtr dual = dual_hopf(*m.hopf);
    CatPtr cat = hopf_as_category(*dual);
    CatModule triv = hmodule_as_catmodule(trivial_hmodule(dual), cat);
    CatModule target = hmodule_as_catmodule(comodule_to_dual_module(m, dual), cat);
    ExtResult ext = ext_plain(triv, target, degree);
    if (ext.dims[0] != coinvariants(m).cols())
        throw std::domain_error("derived_coinvariants: degree-0 term differs from the coinvariants dimension");
    return ext.dims;
}

}  // namespace hopfcat
