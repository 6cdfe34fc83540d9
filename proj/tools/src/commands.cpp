#include "wha_cli/commands.hpp"

#include <chrono>
#include <functional>

#include "wha/cauchy.hpp"
#include "wha/comodules.hpp"
#include "wha/quantum.hpp"

namespace wha::cli {

namespace {

struct Loaded {
    WeakBimonoidData w;
    std::optional<WeakHopfData> supplied;  // groupoid inverse table, Frobenius square or file nu
    std::vector<Report> pre;               // Frobenius checks run before the square is built
    std::optional<FrobeniusSquare> square;
};

Report timed(const std::function<Report()>& f) {
    const auto t0 = std::chrono::steady_clock::now();
    Report r = f();
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    r.sort();
    return r;
}

std::string first_failure(const std::vector<Report>& rs) {
    for (const auto& r : rs)
        for (const auto& it : r.items)
            if (it.verdict == Verdict::fail) return r.suite + "/" + it.id;
    return "";
}

bool all_pass(const std::vector<Report>& rs) { return first_failure(rs).empty(); }

FrobeniusData frobenius_of(const ModelFile& m) {
    const Space& a = *m.basis;
    return FrobeniusData{m.chi, {a, m.maps.at("mu"), m.maps.at("eta")}, {a, m.maps.at("delta"), m.maps.at("epsilon")}};
}

Loaded load(const ModelFile& m) {
    switch (m.kind) {
        case Kind::category:
            return Loaded{category_algebra(*m.category, m.field()), std::nullopt, {}, std::nullopt};
        case Kind::groupoid: {
            WeakHopfData h = groupoid_algebra(*m.category, m.field());
            return Loaded{h.bimonoid, h, {}, std::nullopt};
        }
        case Kind::frobenius: {
            const FrobeniusData fr = frobenius_of(m);
            std::vector<Report> pre = {timed([&] { return check_separable_frobenius(fr); })};
            if (!pre[0].all_pass()) throw NotSeparable("not a separable Frobenius monoid: fails " + first_failure(pre));
            FrobeniusSquare sq = frobenius_square_full(fr);
            const WeakBimonoidData& w = sq.hopf.bimonoid;
            pre.push_back(timed([&] {
                Report r{"frobenius-square", {}, 0};
                r.items.push_back(compare_maps("closed_form.r", "r on R (x) R", sq.r_closed, w.r));
                r.items.push_back(compare_maps("closed_form.t", "t on R (x) R", sq.t_closed, w.t));
                return r;
            }));
            return Loaded{w, sq.hopf, std::move(pre), sq};
        }
        case Kind::weak_bimonoid_raw:
            break;
    }
    WeakBimonoidData w = WeakBimonoidData::make(m.chi, *m.basis, m.maps.at("mu"), m.maps.at("eta"),
                                                m.maps.at("delta"), m.maps.at("epsilon"));
    std::optional<WeakHopfData> h;
    if (auto nu = m.maps.find("nu"); nu != m.maps.end()) {
        std::optional<LinMap> inv;
        if (auto it = m.maps.find("nu_inv"); it != m.maps.end()) inv = it->second;
        h = WeakHopfData{w, nu->second, inv};
    }
    return Loaded{w, h, {}, std::nullopt};
}

std::vector<Report> bimonoid_suites(const WeakBimonoidData& w) {
    return {timed([&] { return check_monoid(w.monoid(), w.chi); }),
            timed([&] { return check_comonoid(w.comonoid(), w.chi); }),
            timed([&] { return check_weak_bimonoid(w); }), timed([&] { return check_st_properties(w); })};
}

Report skipped(const std::string& suite, const std::string& why) {
    return Report{suite, {Item{suite + ".skipped", "", Verdict::skipped, std::nullopt, why}}, 0};
}

// antipode-search report plus the weak Hopf data when an antipode is known
std::pair<Report, std::optional<WeakHopfData>> antipode(const Loaded& L, bool required) {
    Report r{"antipode-search", {}, 0};
    const auto t0 = std::chrono::steady_clock::now();
    std::optional<WeakHopfData> h;
    if (L.supplied) {
        h = L.supplied;
        r.items.push_back({"antipode.exists", "nu * 1 = t, 1 * nu = r, nu * 1 * nu = nu", Verdict::pass, std::nullopt,
                           "supplied by the model"});
    } else {
        AntipodeSearch s = search_antipode(L.w);
        if (s.nu) {
            h = WeakHopfData{L.w, *s.nu, std::nullopt};
            r.items.push_back({"antipode.exists", "nu * 1 = t, 1 * nu = r, nu * 1 * nu = nu", Verdict::pass,
                               std::nullopt, "found by exact linear solve"});
        } else {
            Witness wit = s.witness.value_or(Witness{"nu", "nu", "no solution", "solution"});
            r.items.push_back({"antipode.exists", "nu * 1 = t, 1 * nu = r, nu * 1 * nu = nu",
                               required ? Verdict::fail : Verdict::skipped,
                               required ? std::optional<Witness>(wit) : std::nullopt,
                               s.reason});
        }
    }
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return {r, h};
}

std::vector<Report> quantum_suites(const WeakBimonoidData& w, const std::optional<WeakHopfData>& h) {
    const QuantumCategoryData q = quantum_category(w);
    std::vector<Report> out = {timed([&] { return check_P(q); }), timed([&] { return check_coactions(q); }),
                               timed([&] { return check_quantum_category(q); })};
    if (h) out.push_back(timed([&] { return check_quantum_groupoid(quantum_groupoid(*h)); }));
    else out.push_back(skipped("quantum-groupoid", "no antipode"));
    return out;
}

void require_bimonoid(const WeakBimonoidData& w) {
    const auto rs = bimonoid_suites(w);
    if (!all_pass(rs)) throw PreconditionFailed("model is not a weak bimonoid: fails " + first_failure(rs));
}

void add(std::vector<Report>& to, std::vector<Report> rs) {
    for (auto& r : rs) to.push_back(std::move(r));
}

std::vector<Report> run_all(const Loaded& L) {
    std::vector<Report> out;
    auto bim = bimonoid_suites(L.w);
    const bool ok = all_pass(bim);
    add(out, bim);
    const std::string gate = "weak bimonoid axioms fail";
    if (!ok) {
        for (const char* s : {"antipode-search", "weak-hopf", "object-of-objects", "st-comonoid-morphisms", "comodules",
                              "quantum-P", "quantum-coactions", "quantum-category", "quantum-groupoid"})
            out.push_back(skipped(s, gate));
        return out;
    }
    auto [search, h] = antipode(L, false);
    out.push_back(search);
    out.push_back(h ? timed([&] { return check_weak_hopf(*h); }) : skipped("weak-hopf", "no antipode"));
    out.push_back(timed([&] { return check_object_of_objects(L.w); }));
    out.push_back(timed([&] { return check_st_comonoid_morphisms(L.w); }));
    out.push_back(timed([&] { return check_comodules(L.w, h ? &*h : nullptr); }));
    add(out, quantum_suites(L.w, h));
    return out;
}

}  // namespace

const std::vector<std::string>& command_names() {
    static const std::vector<std::string> names = {"check-bimonoid", "check-hopf",    "check-object-of-objects",
                                                   "check-comodules", "check-quantum", "build-frobenius-square",
                                                   "all"};
    return names;
}

RunResult run_command(const std::string& command, const ModelFile& model, bool timings) {
    RunResult res;
    ReportDocument& d = res.doc;
    d.command = command;
    d.model = model.name;
    d.kind = kind_name(model.kind);
    d.field = model.field().name();
    d.timings = timings;
    try {
        Loaded L = load(model);
        std::vector<Report> rs = L.pre;
        if (command == "check-bimonoid") {
            add(rs, bimonoid_suites(L.w));
        } else if (command == "check-hopf") {
            require_bimonoid(L.w);
            auto [search, h] = antipode(L, true);
            rs.push_back(search);
            if (h) rs.push_back(timed([&] { return check_weak_hopf(*h); }));
        } else if (command == "check-object-of-objects") {
            require_bimonoid(L.w);
            rs.push_back(timed([&] { return check_object_of_objects(L.w); }));
            rs.push_back(timed([&] { return check_st_comonoid_morphisms(L.w); }));
        } else if (command == "check-comodules") {
            require_bimonoid(L.w);
            auto [search, h] = antipode(L, false);
            rs.push_back(search);
            rs.push_back(timed([&] { return check_comodules(L.w, h ? &*h : nullptr); }));
        } else if (command == "check-quantum") {
            require_bimonoid(L.w);
            auto [search, h] = antipode(L, false);
            rs.push_back(search);
            add(rs, quantum_suites(L.w, h));
        } else if (command == "build-frobenius-square") {
            if (model.kind != Kind::frobenius)
                throw PreconditionFailed("build-frobenius-square needs a frobenius model, got " + d.kind);
            const WeakHopfData& h = *L.supplied;
            res.model_out = model_to_json(raw_model(model.name + "_square", h.bimonoid, h.nu, h.nu_inv));
        } else if (command == "all") {
            add(rs, run_all(L));
        } else {
            res.exit_code = kParse;
            res.error = "unknown command '" + command + "'";
            return res;
        }
        d.reports = std::move(rs);
    } catch (const PreconditionFailed& e) {
        res.exit_code = d.exit_code = kPrecondition;
        res.error = e.what();
        return res;
    }
    res.exit_code = d.exit_code = d.count(Verdict::fail) ? kVerification : kOk;
    return res;
}

}  // namespace wha::cli
