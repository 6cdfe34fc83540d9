#include "wha_cli/model.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace wha::cli {

using nlohmann::json;

namespace {

const std::map<std::string, Kind> kKinds = {{"category", Kind::category},
                                            {"groupoid", Kind::groupoid},
                                            {"frobenius", Kind::frobenius},
                                            {"weak_bimonoid_raw", Kind::weak_bimonoid_raw}};

[[noreturn]] void fail(const std::string& where, const std::string& what) { throw SchemaError(what, where); }

const json& need(const json& obj, const std::string& key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) fail(where, "missing required field '" + key + "'");
    return *it;
}

void only_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
    for (const auto& [k, v] : obj.items())
        if (!allowed.count(k)) fail(where, "unknown field '" + k + "'");
}

std::string name_at(const json& v, const std::string& where) {
    if (!v.is_string()) fail(where, "expected a string");
    const std::string s = v.get<std::string>();
    if (s.empty()) fail(where, "empty name");
    for (unsigned char ch : s)
        if (ch < 0x21 || ch > 0x7e || ch == '|') fail(where, "names must be printable ASCII without spaces or '|'");
    return s;
}

Scalar scalar_at(Field f, const json& v, const std::string& where) {
    try {
        if (v.is_number_integer()) return Scalar::from_int(f, v.get<std::int64_t>());
        if (v.is_string()) return Scalar::parse(f, v.get<std::string>());
    } catch (const Error& e) {
        fail(where, e.what());
    }
    fail(where, "expected an integer or a fraction string");
}

std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') ++line, col = 1;
        else ++col;
    }
    return {line, col};
}

Bicharacter parse_grading(Field f, const json* g) {
    if (!g) return Bicharacter(f);
    const std::string w = "/grading";
    if (!g->is_object()) fail(w, "expected an object");
    only_keys(*g, {"cyclic", "chi"}, w);
    const json& cyc = need(*g, "cyclic", w);
    if (!cyc.is_array() || cyc.empty()) fail(w + "/cyclic", "expected a non-empty array of orders");
    std::vector<std::uint32_t> moduli;
    for (std::size_t i = 0; i < cyc.size(); ++i) {
        if (!cyc[i].is_number_integer() || cyc[i].get<std::int64_t>() < 1 || cyc[i].get<std::int64_t>() > 64)
            fail(w + "/cyclic/" + std::to_string(i), "cyclic order must be an integer in 1..64");
        moduli.push_back(cyc[i].get<std::uint32_t>());
    }
    const json& chi = need(*g, "chi", w);
    if (!chi.is_array() || chi.size() != moduli.size()) fail(w + "/chi", "expected a square table, one row per factor");
    std::vector<std::vector<Scalar>> gens;
    for (std::size_t i = 0; i < chi.size(); ++i) {
        const std::string wi = w + "/chi/" + std::to_string(i);
        if (!chi[i].is_array() || chi[i].size() != moduli.size()) fail(wi, "row has the wrong length");
        std::vector<Scalar> row;
        for (std::size_t j = 0; j < chi[i].size(); ++j) row.push_back(scalar_at(f, chi[i][j], wi + "/" + std::to_string(j)));
        gens.push_back(std::move(row));
    }
    try {
        return Bicharacter::from_generators(f, std::make_shared<const GradingGroup>(moduli), gens);
    } catch (const Error& e) {
        fail(w + "/chi", e.what());
    }
}

Space parse_basis(const json& b, const Bicharacter& chi) {
    const std::string w = "/basis";
    if (!b.is_array() || b.empty()) fail(w, "expected a non-empty array");
    const GroupPtr& group = chi.group();
    std::vector<std::string> labels;
    std::vector<std::uint32_t> grades;
    std::set<std::string> seen;
    for (std::size_t i = 0; i < b.size(); ++i) {
        const std::string wi = w + "/" + std::to_string(i);
        std::string label;
        std::uint32_t grade = 0;
        if (b[i].is_object()) {
            only_keys(b[i], {"label", "grade"}, wi);
            label = name_at(need(b[i], "label", wi), wi + "/label");
            if (auto it = b[i].find("grade"); it != b[i].end()) {
                if (!it->is_array() || it->size() != group->moduli().size())
                    fail(wi + "/grade", "grade must list one residue per cyclic factor");
                std::vector<std::uint32_t> res;
                for (std::size_t k = 0; k < it->size(); ++k) {
                    const json& r = (*it)[k];
                    if (!r.is_number_integer() || r.get<std::int64_t>() < 0 ||
                        r.get<std::int64_t>() >= group->moduli()[k])
                        fail(wi + "/grade/" + std::to_string(k), "residue out of range");
                    res.push_back(r.get<std::uint32_t>());
                }
                grade = group->encode(res);
            }
        } else {
            label = name_at(b[i], wi);
        }
        if (!seen.insert(label).second) fail(wi, "duplicate basis label '" + label + "'");
        labels.push_back(label);
        grades.push_back(grade);
    }
    return Space::atomic(labels, grades, group);
}

std::map<std::string, std::uint32_t> label_index(const Space& x) {
    std::map<std::string, std::uint32_t> out;
    for (std::uint32_t i = 0; i < x.dim(); ++i) out.emplace(x.label(i), i);
    return out;
}

LinMap parse_map(Field f, const json& entries, const Space& src, const Space& tgt, const std::string& where) {
    if (!entries.is_array()) fail(where, "expected an array of [out, in, value] entries");
    const auto in = label_index(src), out = label_index(tgt);
    std::vector<std::tuple<std::uint32_t, std::uint32_t, Scalar>> e;
    std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
    for (std::size_t k = 0; k < entries.size(); ++k) {
        const std::string wk = where + "/" + std::to_string(k);
        const json& t = entries[k];
        if (!t.is_array() || t.size() != 3 || !t[0].is_string() || !t[1].is_string())
            fail(wk, "expected [out-label, in-label, value]");
        auto oi = out.find(t[0].get<std::string>());
        if (oi == out.end()) fail(wk + "/0", "unknown output basis label '" + t[0].get<std::string>() + "'");
        auto ii = in.find(t[1].get<std::string>());
        if (ii == in.end()) fail(wk + "/1", "unknown input basis label '" + t[1].get<std::string>() + "'");
        if (!seen.emplace(oi->second, ii->second).second) fail(wk, "duplicate entry");
        Scalar v = scalar_at(f, t[2], wk + "/2");
        if (!v.is_zero()) e.emplace_back(oi->second, ii->second, std::move(v));
    }
    try {
        return LinMap::from_triples(f, src, tgt, e);
    } catch (const Error& ex) {
        fail(where, ex.what());
    }
}

FiniteCategoryPresentation parse_category(const json& doc, bool groupoid) {
    FiniteCategoryPresentation p;
    std::set<std::string> names;
    const json& objs = need(doc, "objects", "");
    if (!objs.is_array()) fail("/objects", "expected an array");
    for (std::size_t i = 0; i < objs.size(); ++i) {
        const std::string o = name_at(objs[i], "/objects/" + std::to_string(i));
        if (!names.insert(o).second) fail("/objects/" + std::to_string(i), "duplicate name '" + o + "'");
        p.objects.push_back(o);
    }
    std::set<std::string> objects(p.objects.begin(), p.objects.end());
    std::set<std::string> arrows;
    for (const auto& o : p.objects) {
        arrows.insert(identity_name(o));
        names.insert(identity_name(o));
    }
    const json& mors = need(doc, "morphisms", "");
    if (!mors.is_array()) fail("/morphisms", "expected an array");
    for (std::size_t i = 0; i < mors.size(); ++i) {
        const std::string wi = "/morphisms/" + std::to_string(i);
        if (!mors[i].is_object()) fail(wi, "expected {name, src, tgt}");
        only_keys(mors[i], {"name", "src", "tgt"}, wi);
        MorphismDecl d{name_at(need(mors[i], "name", wi), wi + "/name"), name_at(need(mors[i], "src", wi), wi + "/src"),
                       name_at(need(mors[i], "tgt", wi), wi + "/tgt")};
        if (!names.insert(d.name).second) fail(wi + "/name", "duplicate name '" + d.name + "'");
        if (!objects.count(d.src)) fail(wi + "/src", "unknown object '" + d.src + "'");
        if (!objects.count(d.tgt)) fail(wi + "/tgt", "unknown object '" + d.tgt + "'");
        arrows.insert(d.name);
        p.morphisms.push_back(d);
    }
    const json& comp = need(doc, "compose", "");
    if (!comp.is_array()) fail("/compose", "expected an array");
    for (std::size_t i = 0; i < comp.size(); ++i) {
        const std::string wi = "/compose/" + std::to_string(i);
        if (!comp[i].is_object()) fail(wi, "expected {first, second, result}");
        only_keys(comp[i], {"first", "second", "result"}, wi);
        const std::string f = name_at(need(comp[i], "first", wi), wi + "/first");
        const std::string g = name_at(need(comp[i], "second", wi), wi + "/second");
        const std::string r = name_at(need(comp[i], "result", wi), wi + "/result");
        for (const auto& [n, key] : {std::pair{f, "first"}, std::pair{g, "second"}, std::pair{r, "result"}})
            if (!arrows.count(n)) fail(wi + "/" + key, "unknown morphism '" + n + "'");
        if (!p.compose.emplace(std::pair{g, f}, r).second) fail(wi, "duplicate composite for this pair");
    }
    auto inv = doc.find("inverse");
    if (groupoid) {
        if (inv == doc.end()) fail("", "a groupoid needs an 'inverse' table");
        if (!inv->is_object()) fail("/inverse", "expected an object mapping morphism to inverse");
        std::map<std::string, std::string> table;
        for (const auto& [k, v] : inv->items()) {
            const std::string wk = "/inverse/" + k;
            name_at(json(k), wk);
            if (!arrows.count(k)) fail(wk, "unknown morphism '" + k + "'");
            const std::string target = name_at(v, wk);
            if (!arrows.count(target)) fail(wk, "unknown morphism '" + target + "'");
            table.emplace(k, target);
        }
        p.inverse = std::move(table);
    } else if (inv != doc.end()) {
        fail("/inverse", "only groupoid models carry an inverse table");
    }
    return p;
}

json scalar_json(const Scalar& s) { return s.str(); }

json map_json(const LinMap& m) {
    json out = json::array();
    for (std::uint32_t j = 0; j < m.src().dim(); ++j)
        for (const auto& [r, v] : m.column(j)) out.push_back(json::array({m.tgt().label(r), m.src().label(j), scalar_json(v)}));
    return out;
}

}  // namespace

const char* kind_name(Kind k) {
    switch (k) {
        case Kind::category: return "category";
        case Kind::groupoid: return "groupoid";
        case Kind::frobenius: return "frobenius";
        case Kind::weak_bimonoid_raw: return "weak_bimonoid_raw";
    }
    return "?";
}

ModelFile parse_model_text(const std::string& text, std::optional<Field> field_override) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        auto [line, col] = line_col(text, e.byte == 0 ? 0 : e.byte - 1);
        throw ParseError("malformed JSON at line " + std::to_string(line) + ", column " + std::to_string(col) + ": " +
                             e.what(),
                         line, col);
    }
    if (!doc.is_object()) fail("", "top level must be an object");
    ModelFile m;
    const json& ver = need(doc, "schema_version", "");
    if (!ver.is_number_integer() || ver.get<int>() != kSchemaVersion)
        fail("/schema_version", "unsupported schema_version (expected " + std::to_string(kSchemaVersion) + ")");
    const json& kind = need(doc, "kind", "");
    if (!kind.is_string() || !kKinds.count(kind.get<std::string>()))
        fail("/kind", "kind must be one of category, groupoid, frobenius, weak_bimonoid_raw");
    m.kind = kKinds.at(kind.get<std::string>());
    m.name = doc.contains("name") ? name_at(doc["name"], "/name") : std::string("model");

    Field f;
    const json& fj = need(doc, "field", "");
    if (!fj.is_string()) fail("/field", "expected \"Q\" or \"Fp:<p>\"");
    try {
        f = Field::parse(fj.get<std::string>());
    } catch (const Error& e) {
        fail("/field", e.what());
    }
    if (field_override) f = *field_override;

    const json* grading = doc.contains("grading") ? &doc["grading"] : nullptr;
    switch (m.kind) {
        case Kind::category:
        case Kind::groupoid:
            only_keys(doc, {"schema_version", "kind", "name", "field", "objects", "morphisms", "compose", "inverse"}, "");
            m.chi = Bicharacter(f);
            m.category = parse_category(doc, m.kind == Kind::groupoid);
            break;
        case Kind::frobenius:
        case Kind::weak_bimonoid_raw: {
            only_keys(doc, {"schema_version", "kind", "name", "field", "grading", "basis", "maps"}, "");
            m.chi = parse_grading(f, grading);
            m.basis = parse_basis(need(doc, "basis", ""), m.chi);
            const json& maps = need(doc, "maps", "");
            if (!maps.is_object()) fail("/maps", "expected an object");
            std::set<std::string> allowed = {"mu", "eta", "delta", "epsilon"};
            if (m.kind == Kind::weak_bimonoid_raw) allowed.insert({"nu", "nu_inv"});
            only_keys(maps, allowed, "/maps");
            const Space& a = *m.basis;
            const Space i = Space::unit();
            const std::map<std::string, std::pair<Space, Space>> shapes = {
                {"mu", {a * a, a}}, {"eta", {i, a}},   {"delta", {a, a * a}},
                {"epsilon", {a, i}}, {"nu", {a, a}}, {"nu_inv", {a, a}}};
            for (const char* req : {"mu", "eta", "delta", "epsilon"}) need(maps, req, "/maps");
            if (maps.contains("nu_inv") && !maps.contains("nu")) fail("/maps/nu_inv", "nu_inv given without nu");
            for (const auto& [k, v] : maps.items()) {
                const auto& [src, tgt] = shapes.at(k);
                m.maps.emplace(k, parse_map(f, v, src, tgt, "/maps/" + k));
            }
            break;
        }
    }
    return m;
}

ModelFile parse_model(const std::string& path, std::optional<Field> field_override) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read model file '" + path + "'", 0, 0);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_model_text(ss.str(), field_override);
}

json model_to_json(const ModelFile& m) {
    json doc;
    doc["schema_version"] = m.schema_version;
    doc["kind"] = kind_name(m.kind);
    doc["name"] = m.name;
    doc["field"] = m.field().name();
    if (m.category) {
        const auto& p = *m.category;
        doc["objects"] = p.objects;
        json mors = json::array();
        for (const auto& d : p.morphisms) mors.push_back({{"name", d.name}, {"src", d.src}, {"tgt", d.tgt}});
        doc["morphisms"] = mors;
        json comp = json::array();
        for (const auto& [gf, r] : p.compose) comp.push_back({{"first", gf.second}, {"second", gf.first}, {"result", r}});
        doc["compose"] = comp;
        if (p.inverse) doc["inverse"] = *p.inverse;
    }
    if (m.basis) {
        const GroupPtr& g = m.chi.group();
        if (!g->trivial()) {
            json chi = json::array();
            const auto& mod = g->moduli();
            for (std::size_t i = 0; i < mod.size(); ++i) {
                json row = json::array();
                for (std::size_t j = 0; j < mod.size(); ++j) {
                    std::vector<std::uint32_t> ei(mod.size(), 0), ej(mod.size(), 0);
                    ei[i] = 1 % mod[i];
                    ej[j] = 1 % mod[j];
                    row.push_back(scalar_json(m.chi(g->encode(ei), g->encode(ej))));
                }
                chi.push_back(row);
            }
            doc["grading"] = {{"cyclic", mod}, {"chi", chi}};
        }
        json basis = json::array();
        for (std::uint32_t i = 0; i < m.basis->dim(); ++i) {
            if (g->trivial()) basis.push_back(m.basis->label(i));
            else basis.push_back({{"label", m.basis->label(i)}, {"grade", g->decode(m.basis->grade(i))}});
        }
        doc["basis"] = basis;
        json maps = json::object();
        for (const auto& [k, v] : m.maps) maps[k] = map_json(v);
        doc["maps"] = maps;
    }
    return doc;
}

ModelFile raw_model(std::string name, const WeakBimonoidData& w, const std::optional<LinMap>& nu,
                    const std::optional<LinMap>& nu_inv) {
    // A carrier that is itself a tensor word is flattened to one atomic basis;
    // "|" in its labels becomes "." so the file stays readable.
    std::vector<std::string> labels;
    for (std::uint32_t i = 0; i < w.carrier.dim(); ++i) {
        std::string l = w.carrier.label(i);
        std::replace(l.begin(), l.end(), '|', '.');
        labels.push_back(l);
    }
    const Space a = Space::atomic(labels, w.carrier.grades(), w.carrier.group());
    const Field f = w.field();
    auto flat = [&](const LinMap& m, const Space& src, const Space& tgt) {
        return LinMap::from_columns(f, src, tgt, m.columns());
    };
    const Space i = Space::unit();
    ModelFile m;
    m.kind = Kind::weak_bimonoid_raw;
    m.name = std::move(name);
    m.chi = w.chi;
    m.basis = a;
    m.maps = {{"mu", flat(w.mu, a * a, a)},
              {"eta", flat(w.eta, i, a)},
              {"delta", flat(w.delta, a, a * a)},
              {"epsilon", flat(w.epsilon, a, i)}};
    if (nu) m.maps.emplace("nu", flat(*nu, a, a));
    if (nu && nu_inv) m.maps.emplace("nu_inv", flat(*nu_inv, a, a));
    return m;
}

ModelFile frobenius_model(std::string name, const FrobeniusData& fr) {
    ModelFile m;
    m.kind = Kind::frobenius;
    m.name = std::move(name);
    m.chi = fr.chi;
    m.basis = fr.carrier();
    m.maps = {{"mu", fr.monoid.mu}, {"eta", fr.monoid.eta}, {"delta", fr.comonoid.delta}, {"epsilon", fr.comonoid.epsilon}};
    return m;
}

ModelFile category_model(std::string name, const FiniteCategoryPresentation& p, Field f) {
    ModelFile m;
    m.kind = p.inverse ? Kind::groupoid : Kind::category;
    m.name = std::move(name);
    m.chi = Bicharacter(f);
    m.category = p;
    return m;
}

}  // namespace wha::cli
