#include "hopfcat/taskdoc.hpp"

#include <sstream>

#include "json.hpp"

namespace hopfcat {

namespace {

using Json = nlohmann::ordered_json;

Scalar parse_scalar(const FieldSpec& f, const Json& j) {
    if (j.is_number_integer()) return Scalar::of(f, j.get<long>());
    if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
    throw std::invalid_argument("scalar entries must be integers or \"p/q\" strings");
}

Vec parse_vec(const FieldSpec& f, const Json& j) {
    Vec v;
    for (const auto& e : j) v.push_back(parse_scalar(f, e));
    return v;
}

Matrix parse_matrix(const FieldSpec& f, const Json& j) {
    const int rows = static_cast<int>(j.size());
    if (rows == 0) return Matrix(f, 0, 0);
    const int cols = static_cast<int>(j[0].size());
    Matrix m(f, rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (static_cast<int>(j[i].size()) != cols) throw std::invalid_argument("ragged matrix rows");
        for (int c = 0; c < cols; ++c) m.at(i, c) = parse_scalar(f, j[i][c]);
    }
    return m;
}

FieldSpec parse_field(const Json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "Q") return FieldSpec::rationals();
    if (kind == "Fp") return FieldSpec::prime_field(j.at("p").get<unsigned long>());
    throw std::invalid_argument("field.kind must be \"Q\" or \"Fp\"");
}

HopfPtr parse_hopf(const FieldSpec& f, const Json& j) {
    if (j.is_string()) {
        const std::string name = j.get<std::string>();
        if (name == "GroupAlgebraC2") return group_algebra(f, cyclic_group_table(2));
        if (name == "DualGroupAlgebraC2") return dual_group_algebra(f, cyclic_group_table(2));
        if (name == "Sweedler") return sweedler_algebra(f);
        throw std::invalid_argument("unknown hopf fixture '" + name + "'");
    }
    if (j.contains("group_algebra") || j.contains("dual_group_algebra")) {
        const Json& g = j.contains("group_algebra") ? j["group_algebra"] : j["dual_group_algebra"];
        GroupTable t;
        if (g.contains("names")) t.names = g["names"].get<std::vector<std::string>>();
        t.table = g.at("table").get<std::vector<std::vector<int>>>();
        if (t.names.empty()) t.names.resize(t.table.size());
        return j.contains("group_algebra") ? group_algebra(f, t) : dual_group_algebra(f, t);
    }
    if (j.contains("structure_constants")) {
        const Json& s = j["structure_constants"];
        auto h = std::make_shared<HopfAlgebra>();
        h->field = f;
        h->basis = s.at("basis").get<std::vector<std::string>>();
        h->dim = static_cast<int>(h->basis.size());
        for (const auto& row : s.at("mult")) {
            std::vector<Vec> r;
            for (const auto& cell : row) r.push_back(parse_vec(f, cell));
            h->mult.push_back(std::move(r));
        }
        h->unit = parse_vec(f, s.at("unit"));
        h->counit = parse_vec(f, s.at("counit"));
        for (const auto& terms : s.at("comult")) {
            std::vector<HopfAlgebra::ComultTerm> list;
            for (const auto& t : terms)
                list.push_back({t.at(0).get<int>(), t.at(1).get<int>(), parse_scalar(f, t.at(2))});
            h->comult.push_back(std::move(list));
        }
        h->antipode = parse_matrix(f, s.at("antipode"));
        h->antipode_inv = inverse(h->antipode);
        return h;
    }
    throw std::invalid_argument("hopf must be a fixture name or a constructor object");
}

int object_index(const LinCategory& c, const std::string& name) {
    for (int i = 0; i < c.n_objects(); ++i)
        if (c.objects[i] == name) return i;
    throw std::invalid_argument("unknown object '" + name + "'");
}

std::pair<int, int> parse_obj_pair(const LinCategory& c, const std::string& key) {
    auto colon = key.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("hom keys look like \"X:Y\"");
    return {object_index(c, key.substr(0, colon)), object_index(c, key.substr(colon + 1))};
}

void parse_explicit_category(const FieldSpec& f, HopfPtr hopf, const Json& j, HCatPtr& hcat, CoHCatPtr& dcat) {
    auto base = std::make_shared<LinCategory>();
    base->field = f;
    base->objects = j.at("objects").get<std::vector<std::string>>();
    const int n = base->n_objects();
    base->hom_labels.assign(n, std::vector<std::vector<std::string>>(n));
    for (const auto& [key, labels] : j.at("hom").items()) {
        auto [x, y] = parse_obj_pair(*base, key);
        base->hom_labels[x][y] = labels.get<std::vector<std::string>>();
    }
    base->compose_t.assign(n, std::vector<std::vector<Matrix>>(n, std::vector<Matrix>(n)));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                base->compose_t[x][y][z] = Matrix(f, base->hom_dim(x, z), base->hom_dim(y, z) * base->hom_dim(x, y));
    for (const auto& [key, tensor] : j.at("compose").items()) {
        auto first = key.find(':'), second = key.rfind(':');
        if (first == second) throw std::invalid_argument("compose keys look like \"X:Y:Z\"");
        int x = object_index(*base, key.substr(0, first));
        int y = object_index(*base, key.substr(first + 1, second - first - 1));
        int z = object_index(*base, key.substr(second + 1));
        // tensor[a][b] = coefficient vector of f_a o g_b
        const int dyz = base->hom_dim(y, z), dxy = base->hom_dim(x, y);
        for (int a = 0; a < dyz; ++a)
            for (int b = 0; b < dxy; ++b) {
                Vec coeffs = parse_vec(f, tensor.at(a).at(b));
                for (int k = 0; k < base->hom_dim(x, z); ++k) base->compose_t[x][y][z].at(k, a * dxy + b) = coeffs[k];
            }
    }
    base->identity.resize(n);
    for (const auto& [key, coords] : j.at("identity").items())
        base->identity[object_index(*base, key)] = parse_vec(f, coords);

    if (j.contains("action")) {
        auto c = std::make_shared<HCategory>();
        c->base = base;
        c->hopf = hopf;
        c->action.assign(n, std::vector<std::vector<Matrix>>(n));
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int i = 0; i < hopf->dim; ++i)
                    c->action[x][y].push_back(Matrix::identity(f, base->hom_dim(x, y)).scaled(hopf->counit[i]));
        for (const auto& [key, mats] : j["action"].items()) {
            auto [x, y] = parse_obj_pair(*base, key);
            c->action[x][y].clear();
            for (const auto& mat : mats) c->action[x][y].push_back(parse_matrix(f, mat));
        }
        hcat = c;
    } else if (j.contains("coaction")) {
        auto d = std::make_shared<CoHCategory>();
        d->base = base;
        d->hopf = hopf;
        d->coaction.assign(n, std::vector<Matrix>(n));
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) d->coaction[x][y] = trivial_hcomodule(hopf, base->hom_dim(x, y)).coaction;
        for (const auto& [key, mat] : j["coaction"].items()) {
            auto [x, y] = parse_obj_pair(*base, key);
            d->coaction[x][y] = parse_matrix(f, mat);
        }
        dcat = d;
    } else {
        throw std::invalid_argument("explicit categories need an \"action\" or \"coaction\" table");
    }
}

EquivModule named_equiv_fixture(HCatPtr hcat, const std::string& name) {
    const int nobj = hcat->base->n_objects();
    if (name == "trivial" || (name == "T" && nobj == 1 && hcat->base->hom_dim(0, 0) == 1))
        return fixtures::trivial_over_point(hcat);
    if (name == "T") return fixtures::trivial_over_dual_numbers(hcat);
    if (name == "R") return fixtures::regular_over_dual_numbers(hcat);
    if (name == "SignT")
        return tensor_hmod(sign_module_c2(hcat->hopf), fixtures::trivial_over_dual_numbers(hcat));
    if (name == "hA") return representable_equiv(hcat, 0);
    if (name == "hB" && nobj > 1) return representable_equiv(hcat, 1);
    throw std::invalid_argument("unknown module fixture '" + name + "' for this category");
}

RelHopfModule named_relhopf_fixture(CoHCatPtr dcat, const std::string& name) {
    if (name == "M1") return fixtures::m1_over_arrow(dcat);
    if (name == "M1g") {
        int g_index = -1;
        for (int i = 0; i < dcat->hopf->dim; ++i)
            if (dcat->hopf->is_grouplike(i) && vec_basis(dcat->hopf->field, dcat->hopf->dim, i) != dcat->hopf->unit)
                g_index = i;
        if (g_index < 0) throw std::invalid_argument("M1g needs a nontrivial grouplike");
        return tensor_comod(fixtures::m1_over_arrow(dcat), grouplike_line(dcat->hopf, g_index));
    }
    if (name == "hA") return representable_relhopf(dcat, 0);
    if (name == "hB") return representable_relhopf(dcat, 1);
    throw std::invalid_argument("unknown module fixture '" + name + "' for this category");
}

EquivModule parse_equiv_module(HCatPtr hcat, const Json& j) {
    if (j.is_string()) return named_equiv_fixture(hcat, j.get<std::string>());
    const auto& b = *hcat->base;
    const FieldSpec f = b.field;
    const int n = b.n_objects();
    EquivModule m;
    m.hcat = hcat;
    m.base.category = hcat->base;
    m.base.side = Side::Right;
    m.base.carrier.assign(n, 0);
    for (const auto& [key, dim] : j.at("carrier").items()) m.base.carrier[object_index(b, key)] = dim.get<int>();
    m.base.action.assign(n, std::vector<std::vector<Matrix>>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            m.base.action[x][y].assign(b.hom_dim(x, y), Matrix(f, m.base.carrier[x], m.base.carrier[y]));
    for (const auto& [key, mats] : j.at("action").items()) {
        auto [x, y] = parse_obj_pair(b, key);
        m.base.action[x][y].clear();
        for (const auto& mat : mats) m.base.action[x][y].push_back(parse_matrix(f, mat));
    }
    for (int x = 0; x < n; ++x) m.hmod.push_back(trivial_hmodule(hcat->hopf, m.base.carrier[x]));
    if (j.contains("hmodule"))
        for (const auto& [key, mats] : j["hmodule"].items()) {
            const int x = object_index(b, key);
            m.hmod[x].action.clear();
            for (const auto& mat : mats) m.hmod[x].action.push_back(parse_matrix(f, mat));
        }
    return m;
}

RelHopfModule parse_relhopf_module(CoHCatPtr dcat, const Json& j) {
    if (j.is_string()) return named_relhopf_fixture(dcat, j.get<std::string>());
    const auto& b = *dcat->base;
    const FieldSpec f = b.field;
    const int n = b.n_objects();
    RelHopfModule m;
    m.dcat = dcat;
    m.base.category = dcat->base;
    m.base.side = Side::Left;
    m.base.carrier.assign(n, 0);
    for (const auto& [key, dim] : j.at("carrier").items()) m.base.carrier[object_index(b, key)] = dim.get<int>();
    m.base.action.assign(n, std::vector<std::vector<Matrix>>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            m.base.action[x][y].assign(b.hom_dim(x, y), Matrix(f, m.base.carrier[y], m.base.carrier[x]));
    for (const auto& [key, mats] : j.at("action").items()) {
        auto [x, y] = parse_obj_pair(b, key);
        m.base.action[x][y].clear();
        for (const auto& mat : mats) m.base.action[x][y].push_back(parse_matrix(f, mat));
    }
    for (int x = 0; x < n; ++x) m.hcomod.push_back(trivial_hcomodule(dcat->hopf, m.base.carrier[x]));
    if (j.contains("hcomodule"))
        for (const auto& [key, mat] : j["hcomodule"].items()) {
            const int x = object_index(b, key);
            m.hcomod[x] = HComodule{dcat->hopf, m.base.carrier[x], parse_matrix(f, mat)};
        }
    return m;
}

}  // namespace

TaskDocument parse_task_document(const std::string& json_text) {
    Json j;
    try {
        j = Json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("JSON parse error: ") + e.what());
    }

    TaskDocument doc;
    doc.field = parse_field(j.at("field"));
    doc.hopf = parse_hopf(doc.field, j.at("hopf"));

    const Json& cat = j.at("category");
    if (cat.is_string()) {
        const std::string name = cat.get<std::string>();
        if (name == "C1") doc.hcat = fixtures::one_object_trivial(doc.hopf);
        else if (name == "C2fix") doc.hcat = fixtures::dual_numbers_c2(doc.hopf);
        else if (name == "C3") doc.hcat = fixtures::two_object_arrow(doc.hopf);
        else if (name == "D1") doc.dcat = fixtures::arrow_coh(doc.hopf);
        else throw std::invalid_argument("unknown category fixture '" + name + "'");
    } else {
        parse_explicit_category(doc.field, doc.hopf, cat, doc.hcat, doc.dcat);
    }

    if (j.contains("modules"))
        for (const auto& [name, spec] : j["modules"].items()) {
            doc.module_names.push_back(name);
            if (doc.hcat)
                doc.equiv_modules.emplace(name, parse_equiv_module(doc.hcat, spec));
            else
                doc.relhopf_modules.emplace(name, parse_relhopf_module(doc.dcat, spec));
        }

    if (j.contains("tasks"))
        for (const auto& t : j["tasks"]) {
            TaskDocument::Task task;
            task.op = t.at("op").get<std::string>();
            if (t.contains("source")) task.source = t["source"].get<std::string>();
            if (t.contains("target")) task.target = t["target"].get<std::string>();
            if (t.contains("context")) task.context = t["context"].get<std::string>();
            if (t.contains("theorem")) task.theorem = t["theorem"].get<std::string>();
            if (t.contains("degree")) task.degree = t["degree"].get<int>();
            if (t.contains("equivariant")) task.equivariant = t["equivariant"].get<bool>();
            if (t.contains("colinear")) task.colinear = t["colinear"].get<bool>();
            if (task.degree < 0) throw std::invalid_argument("task degree must be nonnegative");
            doc.tasks.push_back(std::move(task));
        }

    // referenced names must resolve
    for (const auto& t : doc.tasks)
        for (const std::string* name : {&t.source, &t.target})
            if (!name->empty() && doc.equiv_modules.find(*name) == doc.equiv_modules.end() &&
                doc.relhopf_modules.find(*name) == doc.relhopf_modules.end())
                throw std::invalid_argument("task references unknown module '" + *name + "'");
    return doc;
}

namespace {

struct ReportBuilder {
    std::ostringstream text;
    Json json = Json::object();
    Json sections = Json::array();
    bool any_fail = false;

    void begin(const TaskDocument& doc) {
        text << "field: " << doc.field.str() << "\n";
        text << "hopf: dim " << doc.hopf->dim << ", basis";
        for (const auto& b : doc.hopf->basis) text << " " << b;
        text << "\n";
        text << "category: " << (doc.hcat ? "H-action" : "H-coaction") << " on "
             << (doc.hcat ? doc.hcat->base->n_objects() : doc.dcat->base->n_objects()) << " object(s)\n";
        json["field"] = doc.field.str();
        json["hopf_dim"] = doc.hopf->dim;
        json["category_kind"] = doc.hcat ? "H-category" : "co-H-category";
    }

    Json& section(const std::string& kind) {
        sections.push_back(Json::object());
        sections.back()["task"] = kind;
        text << "\n== " << kind << " ==\n";
        return sections.back();
    }

    void verdict(Json& sec, const std::string& name, bool pass) {
        sec[name] = pass ? "pass" : "FAIL";
        text << name << ": " << (pass ? "pass" : "FAIL") << "\n";
        if (!pass) any_fail = true;
    }

    RunReport finish() {
        json["sections"] = sections;
        RunReport out;
        out.text = text.str();
        out.json = json.dump(2) + "\n";
        out.exit_code = any_fail ? 1 : 0;
        return out;
    }
};

void table_out(ReportBuilder& rb, Json& sec, const std::string& name,
               const std::vector<std::vector<int>>& table) {
    rb.text << name << " (rows p, cols q):\n";
    Json jt = Json::array();
    for (size_t p = 0; p < table.size(); ++p) {
        rb.text << "  p=" << p << ":";
        Json row = Json::array();
        for (size_t q = 0; q < table[p].size(); ++q) {
            rb.text << " " << table[p][q];
            Json cell = Json::object();
            cell["p"] = p;
            cell["q"] = q;
            cell["dim"] = table[p][q];
            row.push_back(cell);
        }
        rb.text << "\n";
        jt.push_back(row);
    }
    sec[name] = jt;
}

void dims_out(ReportBuilder& rb, Json& sec, const std::string& name, const std::vector<int>& dims) {
    rb.text << name << ":";
    for (int d : dims) rb.text << " " << d;
    rb.text << "\n";
    sec[name] = dims;
}

void do_check(const TaskDocument& doc, ReportBuilder& rb) {
    Json& sec = rb.section("check");
    rb.verdict(sec, "hopf_axioms", check_hopf(*doc.hopf).empty());
    if (doc.hcat) {
        rb.verdict(sec, "category_axioms", validate_category(*doc.hcat->base).empty());
        rb.verdict(sec, "h_structure", validate_h_category(*doc.hcat).empty());
    } else {
        rb.verdict(sec, "category_axioms", validate_category(*doc.dcat->base).empty());
        rb.verdict(sec, "h_structure", validate_coh_category(*doc.dcat).empty());
    }
    for (const auto& name : doc.module_names) {
        if (doc.hcat) {
            rb.verdict(sec, "module " + name, validate_equivariant(doc.equiv_modules.at(name)).empty());
        } else {
            rb.verdict(sec, "module " + name, validate_relhopf(doc.relhopf_modules.at(name)).empty());
        }
    }
}

void do_hom(const TaskDocument& doc, const TaskDocument::Task& t, ReportBuilder& rb) {
    Json& sec = rb.section("hom " + t.source + " -> " + t.target);
    if (doc.hcat) {
        const auto& m = doc.equiv_modules.at(t.source);
        const auto& n = doc.equiv_modules.at(t.target);
        Matrix hom = module_hom_matrix(m.base, n.base);
        dims_out(rb, sec, "hom_dim", {hom.cols()});
        if (t.equivariant) {
            HomHAction h = hom_h_action(m, n);
            dims_out(rb, sec, "invariant_hom_dim", {h.invariant_coords.cols()});
            CatPtr smash = smash_product(*doc.hcat);
            Matrix smash_side = smash_hom_in_base_coords(m, n, smash);
            rb.verdict(sec, "invariants_equal_smash_hom",
                       same_column_span(h.invariant_coords, smash_side) ||
                           (h.invariant_coords.cols() == 0 && smash_side.cols() == 0));
        }
    } else {
        const auto& m = doc.relhopf_modules.at(t.source);
        const auto& n = doc.relhopf_modules.at(t.target);
        Matrix hom = module_hom_matrix(m.base, n.base);
        dims_out(rb, sec, "hom_dim", {hom.cols()});
        if (t.colinear) {
            Matrix col = relhopf_hom_matrix(m, n);
            dims_out(rb, sec, "colinear_hom_dim", {col.cols()});
            RationalHom rh = rational_hom(m, n);
            rb.verdict(sec, "coinvariants_equal_colinear_hom", rh.coinvariants_match_colinear);
        }
    }
}

void do_ext(const TaskDocument& doc, const TaskDocument::Task& t, ReportBuilder& rb) {
    Json& sec = rb.section("ext " + t.source + " -> " + t.target + " in " + t.context);
    sec["degree"] = t.degree;
    if (doc.hcat) {
        const auto& m = doc.equiv_modules.at(t.source);
        const auto& n = doc.equiv_modules.at(t.target);
        CatPtr smash = smash_product(*doc.hcat);
        if (t.context == "Mod-C") {
            ExtResult e = ext_equivariant(m, n, smash, t.degree);
            dims_out(rb, sec, "ext_dims", e.dims);
            rb.verdict(sec, "free_injective_agree", e.routes_agree);
            std::vector<int> inv;
            for (const auto& hq : e.h_structure) inv.push_back(invariants(hq).cols());
            dims_out(rb, sec, "invariants_of_ext", inv);
        } else if (t.context == "Mod-C#H") {
            ExtResult e = ext_plain(to_smash_module(m, smash), to_smash_module(n, smash), t.degree);
            dims_out(rb, sec, "ext_dims", e.dims);
            rb.verdict(sec, "free_injective_agree", e.routes_agree);
        } else if (t.context == "H-Mod") {
            CatPtr one = hopf_as_category(*doc.hopf);
            ExtResult e = ext_plain(hmodule_as_catmodule(m.hmod[0], one), hmodule_as_catmodule(n.hmod[0], one),
                                    t.degree);
            dims_out(rb, sec, "ext_dims", e.dims);
            rb.verdict(sec, "free_injective_agree", e.routes_agree);
        } else {
            throw std::invalid_argument("ext context '" + t.context + "' needs a co-H-category or is unknown");
        }
    } else {
        const auto& m = doc.relhopf_modules.at(t.source);
        const auto& n = doc.relhopf_modules.at(t.target);
        if (t.context == "D-Mod") {
            ExtResult e = ext_relhopf(m, n, t.degree);
            dims_out(rb, sec, "ext_dims", e.dims);
            rb.verdict(sec, "free_injective_agree", e.routes_agree);
            std::vector<int> coin;
            for (const auto& cq : e.coh_structure) coin.push_back(coinvariants(cq).cols());
            dims_out(rb, sec, "coinvariants_of_ext", coin);
        } else if (t.context == "DM^H") {
            HCatPtr dual_cat = dualize_coh_category(*doc.dcat);
            CatPtr smash = smash_product(*dual_cat);
            if (!relhopf_smash_route_agrees(m, n, *dual_cat, smash))
                throw std::domain_error("dual-smash route failed its Hom cross-check");
            ExtResult e = ext_plain(relhopf_to_smash(m, *dual_cat, smash),
                                    relhopf_to_smash(n, *dual_cat, smash), t.degree);
            dims_out(rb, sec, "ext_dims", e.dims);
            rb.verdict(sec, "free_injective_agree", e.routes_agree);
        } else if (t.context == "Comod-H") {
            HopfPtr dual = dual_hopf(*doc.hopf);
            CatPtr one = hopf_as_category(*dual);
            ExtResult e = ext_plain(
                hmodule_as_catmodule(comodule_to_dual_module(m.hcomod[0], dual), one),
                hmodule_as_catmodule(comodule_to_dual_module(n.hcomod[0], dual), one), t.degree);
            dims_out(rb, sec, "ext_dims", e.dims);
            rb.verdict(sec, "free_injective_agree", e.routes_agree);
        } else {
            throw std::invalid_argument("ext context '" + t.context + "' needs an H-category or is unknown");
        }
    }
}

void do_ss(const TaskDocument& doc, const TaskDocument::Task& t, ReportBuilder& rb) {
    Json& sec = rb.section("ss " + t.theorem + " " + t.source + " -> " + t.target);
    sec["degree"] = t.degree;

    TheoremTag tag;
    if (t.theorem == "T3_15") tag = TheoremTag::T3_15;
    else if (t.theorem == "T4_18") tag = TheoremTag::T4_18;
    else if (t.theorem == "T4_19") tag = TheoremTag::T4_19;
    else if (t.theorem == "T5_9") tag = TheoremTag::T5_9;
    else if (t.theorem == "T5_17") tag = TheoremTag::T5_17;
    else throw std::invalid_argument("unknown theorem tag '" + t.theorem + "'");

    SpectralReport rep;
    if (doc.hcat)
        rep = grothendieck_ss(tag, doc.equiv_modules.at(t.source), doc.equiv_modules.at(t.target), t.degree);
    else
        rep = grothendieck_ss(tag, doc.relhopf_modules.at(t.source), doc.relhopf_modules.at(t.target), t.degree);

    sec["theorem"] = theorem_name(tag);
    table_out(rb, sec, "E2", rep.e2);
    table_out(rb, sec, "E2_from_grid", rep.e2_from_grid);
    rb.verdict(sec, "E2_routes_match", rep.e2_match);
    table_out(rb, sec, "E_inf", rep.e_inf);
    dims_out(rb, sec, "abutment", rep.abutment);
    Json verd = Json::array();
    for (size_t i = 0; i < rep.verdict.size(); ++i) {
        Json v = Json::object();
        v["t"] = rep.verdict_window[i];
        v["pass"] = static_cast<bool>(rep.verdict[i]);
        verd.push_back(v);
        rb.text << "t=" << rep.verdict_window[i] << ": " << (rep.verdict[i] ? "pass" : "FAIL") << "\n";
    }
    sec["convergence_by_degree"] = verd;
    rb.verdict(sec, "convergence", rep.converged);
    rb.verdict(sec, "edge_map_degree_0", rep.edge_ok);
    Json notes = Json::array();
    for (const auto& n : rep.notes) {
        notes.push_back(n);
        rb.text << "note: " << n << "\n";
    }
    sec["notes"] = notes;
}

RunReport run_tasks(const TaskDocument& doc, const std::vector<TaskDocument::Task>& tasks) {
    ReportBuilder rb;
    rb.begin(doc);
    for (const auto& t : tasks) {
        try {
            if (t.op == "check") do_check(doc, rb);
            else if (t.op == "hom") do_hom(doc, t, rb);
            else if (t.op == "ext") do_ext(doc, t, rb);
            else if (t.op == "ss") do_ss(doc, t, rb);
            else throw std::invalid_argument("unknown task op '" + t.op + "'");
        } catch (const std::domain_error& e) {
            Json& sec = rb.section("error");
            sec["message"] = e.what();
            rb.text << "computation error: " << e.what() << "\n";
            rb.any_fail = true;
        }
    }
    return rb.finish();
}

}  // namespace

RunReport run_document(const TaskDocument& doc) { return run_tasks(doc, doc.tasks); }

RunReport run_check(const TaskDocument& doc) {
    TaskDocument::Task t;
    t.op = "check";
    return run_tasks(doc, {t});
}

RunReport run_hom(const TaskDocument& doc, const std::string& source, const std::string& target, bool equivariant,
                  bool colinear) {
    TaskDocument::Task t;
    t.op = "hom";
    t.source = source;
    t.target = target;
    t.equivariant = equivariant;
    t.colinear = colinear;
    return run_tasks(doc, {t});
}

RunReport run_ext(const TaskDocument& doc, const std::string& source, const std::string& target,
                  const std::string& context, int degree) {
    TaskDocument::Task t;
    t.op = "ext";
    t.source = source;
    t.target = target;
    t.context = context;
    t.degree = degree;
    return run_tasks(doc, {t});
}

RunReport run_ss(const TaskDocument& doc, const std::string& theorem, const std::string& source,
                 const std::string& target, int degree) {
    TaskDocument::Task t;
    t.op = "ss";
    t.source = source;
    t.target = target;
    t.theorem = theorem;
    t.degree = degree;
    return run_tasks(doc, {t});
}

}  // namespace hopfcat
