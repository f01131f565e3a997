#include "permcx/json_io.hpp"

#include <fstream>
#include <sstream>

namespace permcx {

namespace {

const json& need(const json& j, const char* key, const char* what) {
    if (!j.is_object() || !j.contains(key))
        throw Error(std::string(what) + ": missing field '" + key + "'");
    return j.at(key);
}

int need_int(const json& j, const char* key, const char* what) {
    const json& v = need(j, key, what);
    if (!v.is_number_integer())
        throw Error(std::string(what) + ": field '" + key + "' must be an integer");
    return v.get<int>();
}

json cell_to_json(const Field& f, fq_t v) {
    if (f.e() == 1) return static_cast<int>(v);
    return json(f.coeffs(v));
}

fq_t cell_from_json(const Field& f, const json& j, const char* what) {
    if (j.is_number_integer()) return f.from_int(j.get<long long>());
    if (j.is_array()) {
        std::vector<int> c = j.get<std::vector<int>>();
        if (static_cast<int>(c.size()) != f.e())
            throw Error(std::string(what) + ": scalar coefficient vector must have length e");
        return f.from_coeffs(c);
    }
    throw Error(std::string(what) + ": scalar must be an integer or a coefficient vector");
}

} // namespace

json field_to_json(const Field& f) {
    json j;
    j["p"] = f.p();
    j["e"] = f.e();
    j["modulus"] = f.modulus();
    return j;
}

FieldPtr field_from_json(const json& j) {
    const int p = need_int(j, "p", "field");
    if (j.contains("modulus"))
        return Field::with_modulus(p, need(j, "modulus", "field").get<std::vector<int>>());
    const int e = j.contains("e") ? need_int(j, "e", "field") : 1;
    return Field::make(p, e);
}

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(cell_to_json(*m.field(), m.at(i, j)));
        rows.push_back(std::move(row));
    }
    json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["entries"] = std::move(rows);
    return j;
}

Matrix matrix_from_json(const json& j, const FieldPtr& field) {
    const int rows = need_int(j, "rows", "matrix");
    const int cols = need_int(j, "cols", "matrix");
    const json& entries = need(j, "entries", "matrix");
    if (!entries.is_array() || static_cast<int>(entries.size()) != rows)
        throw Error("matrix: 'entries' must hold one array per row");
    Matrix m(field, rows, cols);
    for (int i = 0; i < rows; ++i) {
        const json& row = entries.at(static_cast<std::size_t>(i));
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw Error("matrix: row " + std::to_string(i) + " must have 'cols' entries");
        for (int c = 0; c < cols; ++c)
            m.set(i, c, cell_from_json(*field, row.at(static_cast<std::size_t>(c)), "matrix"));
    }
    return m;
}

json scalar_to_json(const Scalar& s) {
    if (!s.field) throw Error("scalar: missing field");
    return json(s.field->coeffs(s.value));
}

json subgroup_to_json(const Subgroup& s) {
    json j;
    j["p"] = s.group().p;
    j["r"] = s.group().r;
    json basis = json::array();
    for (int i = 0; i < s.rank(); ++i) {
        json row = json::array();
        for (int c = 0; c < s.group().r; ++c) row.push_back(static_cast<int>(s.basis().at(i, c)));
        basis.push_back(std::move(row));
    }
    j["basis"] = std::move(basis);
    return j;
}

Subgroup subgroup_from_json(const json& j) {
    const ElemAbGroup g{need_int(j, "p", "subgroup"), need_int(j, "r", "subgroup")};
    const json& basis = need(j, "basis", "subgroup");
    if (!basis.is_array()) throw Error("subgroup: 'basis' must be an array of rows");
    std::vector<VecFp> rows;
    for (const auto& row : basis) {
        if (!row.is_array() || static_cast<int>(row.size()) != g.r)
            throw Error("subgroup: basis rows must have length r");
        rows.push_back(row.get<VecFp>());
    }
    return Subgroup::from_generators(g, rows);
}

json collection_to_json(const SubgroupCollection& h) {
    json j = json::array();
    for (const auto& s : h) j.push_back(subgroup_to_json(s));
    return j;
}

SubgroupCollection collection_from_json(const json& j) {
    if (!j.is_array()) throw Error("collection: expected an array of subgroups");
    SubgroupCollection h;
    for (const auto& s : j) h.push_back(subgroup_from_json(s));
    validate_collection(h);
    return h;
}

namespace {

json tag_to_json(const SummandTag& t) {
    json j;
    j["kind"] = kind_name(t.kind);
    j["multiplicity"] = t.multiplicity;
    j["begin"] = t.begin;
    j["end"] = t.end;
    if (t.subgroup) {
        json basis = json::array();
        for (int i = 0; i < t.subgroup->rank(); ++i) {
            json row = json::array();
            for (int c = 0; c < t.subgroup->group().r; ++c)
                row.push_back(static_cast<int>(t.subgroup->basis().at(i, c)));
            basis.push_back(std::move(row));
        }
        j["subgroup"] = std::move(basis);
    }
    return j;
}

SummandTag tag_from_json(const json& j, const ElemAbGroup& g) {
    SummandTag t;
    const std::string kind = need(j, "kind", "tag").get<std::string>();
    if (kind == "trivial")
        t.kind = SummandKind::trivial;
    else if (kind == "free")
        t.kind = SummandKind::free_module;
    else if (kind == "permutation")
        t.kind = SummandKind::permutation;
    else
        throw Error("tag: unknown kind '" + kind + "'");
    t.multiplicity = need_int(j, "multiplicity", "tag");
    t.begin = need_int(j, "begin", "tag");
    t.end = need_int(j, "end", "tag");
    if (t.kind == SummandKind::permutation) {
        const json& basis = need(j, "subgroup", "tag");
        std::vector<VecFp> rows;
        for (const auto& row : basis) rows.push_back(row.get<VecFp>());
        t.subgroup = Subgroup::from_generators(g, rows);
    }
    return t;
}

} // namespace

json module_to_json(const GModule& m) {
    json j;
    j["p"] = m.group.p;
    j["e"] = m.field->e();
    j["modulus"] = m.field->modulus();
    j["r"] = m.group.r;
    j["dim"] = m.dim;
    json action = json::array();
    for (const auto& a : m.action) action.push_back(matrix_to_json(a));
    j["action"] = std::move(action);
    if (m.tags) {
        json tags = json::array();
        for (const auto& t : *m.tags) tags.push_back(tag_to_json(t));
        j["tags"] = std::move(tags);
    } else {
        j["tags"] = nullptr;
    }
    return j;
}

GModule module_from_json(const json& j) {
    const int p = need_int(j, "p", "module");
    const FieldPtr field = j.contains("modulus")
                               ? Field::with_modulus(p, need(j, "modulus", "module").get<std::vector<int>>())
                               : Field::make(p, j.contains("e") ? need_int(j, "e", "module") : 1);
    const ElemAbGroup g{p, need_int(j, "r", "module")};
    GModule m{g, field, need_int(j, "dim", "module"), {}, std::nullopt};
    const json& action = need(j, "action", "module");
    if (!action.is_array() || static_cast<int>(action.size()) != g.r)
        throw Error("module: expected one action matrix per generator");
    for (const auto& a : action) m.action.push_back(matrix_from_json(a, field));
    if (j.contains("tags") && !j.at("tags").is_null()) {
        std::vector<SummandTag> tags;
        for (const auto& t : j.at("tags")) tags.push_back(tag_from_json(t, g));
        m.tags = std::move(tags);
    }
    validate_module(m);
    return m;
}

json map_to_json(const EquivariantMap& f) {
    json j;
    j["source"] = module_to_json(f.source);
    j["target"] = module_to_json(f.target);
    j["matrix"] = matrix_to_json(f.matrix);
    return j;
}

EquivariantMap map_from_json(const json& j) {
    EquivariantMap f{module_from_json(need(j, "source", "map")),
                     module_from_json(need(j, "target", "map")), Matrix()};
    f.matrix = matrix_from_json(need(j, "matrix", "map"), f.source.field);
    validate_map(f);
    return f;
}

json complex_to_json(const BoundedComplex& c) {
    json j;
    json modules = json::array();
    for (const auto& t : c.terms) modules.push_back(module_to_json(t));
    j["modules"] = std::move(modules);
    json diffs = json::array();
    for (const auto& d : c.diffs) diffs.push_back(matrix_to_json(d));
    j["differentials"] = std::move(diffs);
    return j;
}

BoundedComplex complex_from_json(const json& j) {
    BoundedComplex c;
    const json& modules = need(j, "modules", "complex");
    for (const auto& m : modules) c.terms.push_back(module_from_json(m));
    const json& diffs = need(j, "differentials", "complex");
    if (!c.terms.empty()) {
        for (const auto& d : diffs)
            c.diffs.push_back(matrix_from_json(d, c.terms[0].field));
    } else if (!diffs.empty()) {
        throw Error("complex: differentials without terms");
    }
    require_valid(c);
    return c;
}

json homotopy_to_json(const Homotopy& h) {
    json maps = json::array();
    for (const auto& m : h.maps) maps.push_back(matrix_to_json(m));
    json j;
    j["maps"] = std::move(maps);
    return j;
}

json chain_report_to_json(const ChainConditionReport& r) {
    json j;
    j["ok"] = r.ok;
    json v = json::array();
    for (const auto& p : r.violations)
        v.push_back(json::array({subgroup_to_json(p.sub), subgroup_to_json(p.super)}));
    j["violations"] = std::move(v);
    return j;
}

json exactness_to_json(const ExactnessReport& r) {
    json j;
    j["exact"] = r.exact;
    j["homology_dims"] = r.homology_dims;
    return j;
}

json criterion_report_to_json(const CollectionCriterionReport& r) {
    json j;
    j["membership"] = membership_name(r.membership);
    j["membership_detail"] = r.membership_detail;
    j["condition"] = chain_report_to_json(r.condition);
    j["exact"] = exactness_to_json(r.exactness);
    j["contractible"] = r.contractibility.contractible;
    j["verdict"] = verdict_name(r.verdict);
    if (r.contractibility.certificate)
        j["certificate"] = homotopy_to_json(*r.contractibility.certificate);
    return j;
}

json counterexample_to_json(const CounterexampleReport& r) {
    json j;
    j["pair"] = json::array({subgroup_to_json(r.sub), subgroup_to_json(r.super)});
    j["complex"] = complex_to_json(r.complex);
    j["exact"] = r.exact;
    j["contractible"] = r.contractible;
    return j;
}

json polyclass_to_json(const PolyClass& c) {
    json j;
    j["p"] = c.group().p;
    j["e"] = c.field()->e();
    j["modulus"] = c.field()->modulus();
    j["r"] = c.group().r;
    j["generator_degree"] = c.generator_degree();
    json terms = json::array();
    for (const auto& [exps, coef] : c.terms()) {
        json t;
        t["coeff"] = cell_to_json(*c.field(), coef);
        t["exponents"] = exps;
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

PolyClass polyclass_from_json(const json& j) {
    const int p = need_int(j, "p", "polyclass");
    const FieldPtr field =
        j.contains("modulus")
            ? Field::with_modulus(p, need(j, "modulus", "polyclass").get<std::vector<int>>())
            : Field::make(p, j.contains("e") ? need_int(j, "e", "polyclass") : 1);
    const ElemAbGroup g{p, need_int(j, "r", "polyclass")};
    PolyClass out(g, field);
    for (const auto& t : need(j, "terms", "polyclass")) {
        const auto exps = need(t, "exponents", "polyclass").get<std::vector<int>>();
        if (static_cast<int>(exps.size()) != g.r)
            throw Error("polyclass: exponent vector must have length r");
        PolyClass mono = PolyClass::constant(g, field, cell_from_json(*field, need(t, "coeff", "polyclass"), "polyclass"));
        for (int i = 0; i < g.r; ++i)
            for (int k = 0; k < exps[static_cast<std::size_t>(i)]; ++k)
                mono = mono * PolyClass::variable(g, field, i);
        out = out + mono;
    }
    return out;
}

json linear_form_product_to_json(const LinearFormProduct& pr) {
    json j;
    j["p"] = pr.group.p;
    j["e"] = pr.field->e();
    j["modulus"] = pr.field->modulus();
    j["r"] = pr.group.r;
    json factors = json::array();
    for (const auto& fac : pr.factors) {
        json f = json::array();
        for (fq_t c : fac) f.push_back(cell_to_json(*pr.field, c));
        factors.push_back(std::move(f));
    }
    j["factors"] = std::move(factors);
    return j;
}

LinearFormProduct linear_form_product_from_json(const json& j) {
    const int p = need_int(j, "p", "product");
    const FieldPtr field =
        j.contains("modulus")
            ? Field::with_modulus(p, need(j, "modulus", "product").get<std::vector<int>>())
            : Field::make(p, j.contains("e") ? need_int(j, "e", "product") : 1);
    const ElemAbGroup g{p, need_int(j, "r", "product")};
    LinearFormProduct out{g, field, {}};
    for (const auto& fac : need(j, "factors", "product")) {
        if (!fac.is_array() || static_cast<int>(fac.size()) != g.r)
            throw Error("product: each factor needs one coefficient per variable");
        std::vector<fq_t> coeffs;
        for (const auto& c : fac) coeffs.push_back(cell_from_json(*field, c, "product"));
        out.factors.push_back(std::move(coeffs));
    }
    return out;
}

json avoidance_to_json(const AvoidancePair& p) {
    json j;
    j["u"] = linear_form_product_to_json(p.u);
    j["v"] = linear_form_product_to_json(p.v);
    j["field_used"] = field_to_json(*p.field_used);
    return j;
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

json parse_json_text(const std::string& text, const std::string& origin) {
    try {
        return json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(origin + ": " + e.what());
    }
}

json parse_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_json_text(buf.str(), path);
}

} // namespace permcx
