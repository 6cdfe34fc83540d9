#include "wha/constructions.hpp"

#include <chrono>
#include <set>

#include "wha/errors.hpp"

namespace wha {

namespace {

using Triples = std::vector<std::tuple<std::uint32_t, std::uint32_t, Scalar>>;

// All morphisms (identities first) with a total composition function.
struct CatIndex {
    std::vector<std::string> names;
    std::vector<std::string> src, tgt;
    std::map<std::string, std::uint32_t> index;
    const FiniteCategoryPresentation* p = nullptr;

    explicit CatIndex(const FiniteCategoryPresentation& pres) : p(&pres) {
        for (const auto& o : pres.objects) add(identity_name(o), o, o);
        for (const auto& m : pres.morphisms) add(m.name, m.src, m.tgt);
    }
    void add(const std::string& n, const std::string& s, const std::string& t) {
        index.emplace(n, static_cast<std::uint32_t>(names.size()));
        names.push_back(n);
        src.push_back(s);
        tgt.push_back(t);
    }
    bool is_identity(std::uint32_t i) const { return i < p->objects.size(); }
    std::optional<std::uint32_t> find(const std::string& n) const {
        auto it = index.find(n);
        if (it == index.end()) return std::nullopt;
        return it->second;
    }
    // g o f, or nullopt if not composable or missing from the table
    std::optional<std::uint32_t> comp(std::uint32_t g, std::uint32_t f) const {
        if (src[g] != tgt[f]) return std::nullopt;
        if (is_identity(g)) return f;
        if (is_identity(f)) return g;
        auto it = p->compose.find({names[g], names[f]});
        if (it == p->compose.end()) return std::nullopt;
        return find(it->second);
    }
};

Item item(const std::string& id, const std::string& citation) { return Item{id, citation, Verdict::pass, {}, {}}; }

void fail(Item& it, Witness w, std::string note = {}) {
    if (it.verdict == Verdict::fail) return;  // keep the first witness
    it.verdict = Verdict::fail;
    it.witness = std::move(w);
    it.note = std::move(note);
}

Scalar integer(Field f, long v) { return Scalar::from_int(f, v); }

}  // namespace

std::string identity_name(const std::string& object) { return "id_" + object; }

Report validate_category(const FiniteCategoryPresentation& p) {
    const auto t0 = std::chrono::steady_clock::now();
    Report rep{"category", {}, 0};

    Item names = item("category.names", "names are unique and endpoints are objects");
    std::set<std::string> seen_obj, seen;
    for (const auto& o : p.objects) {
        if (o.empty() || !seen_obj.insert(o).second) fail(names, {o, "-", "duplicate object", ""});
        seen.insert(identity_name(o));
    }
    for (const auto& m : p.morphisms) {
        if (m.name.empty() || !seen.insert(m.name).second) fail(names, {m.name, "-", "duplicate morphism", ""});
        if (!seen_obj.count(m.src) || !seen_obj.count(m.tgt)) fail(names, {m.name, "-", "unknown endpoint", ""});
    }
    rep.items.push_back(names);
    if (names.verdict == Verdict::fail) {
        rep.items.push_back(Item{"category.composition", "composition is total on composable pairs", Verdict::skipped,
                                 {}, "names invalid"});
        return rep;
    }

    CatIndex ix(p);
    const auto n = static_cast<std::uint32_t>(ix.names.size());

    Item total = item("category.composition", "composition is total on composable pairs");
    for (const auto& [key, val] : p.compose) {
        auto g = ix.find(key.first), f = ix.find(key.second), h = ix.find(val);
        if (!g || !f || !h || ix.is_identity(*g) || ix.is_identity(*f)) {
            fail(total, {key.first, key.second, val, "undeclared"}, "table entries name declared non-identity morphisms");
            continue;
        }
        if (ix.src[*g] != ix.tgt[*f]) fail(total, {key.first, key.second, val, "not composable"});
        else if (ix.src[*h] != ix.src[*f] || ix.tgt[*h] != ix.tgt[*g])
            fail(total, {key.first, key.second, val, ix.src[*f] + "->" + ix.tgt[*g]}, "result has wrong endpoints");
    }
    for (std::uint32_t g = 0; g < n; ++g)
        for (std::uint32_t f = 0; f < n; ++f)
            if (ix.src[g] == ix.tgt[f] && !ix.comp(g, f)) fail(total, {ix.names[g], ix.names[f], "missing", ""});
    rep.items.push_back(total);

    Item assoc = item("category.associativity", "composition is associative");
    if (total.verdict == Verdict::pass) {
        for (std::uint32_t h = 0; h < n; ++h)
            for (std::uint32_t g = 0; g < n; ++g) {
                auto hg = ix.comp(h, g);
                if (!hg) continue;
                for (std::uint32_t f = 0; f < n; ++f) {
                    auto gf = ix.comp(g, f);
                    if (!gf) continue;
                    auto l = ix.comp(h, *gf), r = ix.comp(*hg, f);
                    if (*l != *r)
                        fail(assoc, {ix.names[h] + "," + ix.names[g], ix.names[f], ix.names[*l], ix.names[*r]},
                             "h(gf) vs (hg)f");
                }
            }
    } else {
        assoc.verdict = Verdict::skipped;
        assoc.note = "composition not total";
    }
    rep.items.push_back(assoc);

    Item inv = item("groupoid.inverses", "every morphism has a two-sided inverse");
    if (!p.inverse) {
        inv.verdict = Verdict::skipped;
        inv.note = "no inverse table";
    } else if (total.verdict != Verdict::pass) {
        inv.verdict = Verdict::skipped;
        inv.note = "composition not total";
    } else {
        for (std::uint32_t f = static_cast<std::uint32_t>(p.objects.size()); f < n; ++f) {
            auto it = p.inverse->find(ix.names[f]);
            std::optional<std::uint32_t> g;
            if (it != p.inverse->end()) g = ix.find(it->second);
            if (!g) {
                fail(inv, {ix.names[f], "-", "no inverse", ""});
                continue;
            }
            auto gf = ix.comp(*g, f), fg = ix.comp(f, *g);
            const std::string id_s = identity_name(ix.src[f]), id_t = identity_name(ix.tgt[f]);
            if (!gf || ix.names[*gf] != id_s)
                fail(inv, {ix.names[*g], ix.names[f], gf ? ix.names[*gf] : "undefined", id_s});
            else if (!fg || ix.names[*fg] != id_t)
                fail(inv, {ix.names[f], ix.names[*g], fg ? ix.names[*fg] : "undefined", id_t});
        }
    }
    rep.items.push_back(inv);
    rep.sort();
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

bool is_valid_groupoid(const FiniteCategoryPresentation& p) {
    auto rep = validate_category(p);
    const Item* inv = rep.find("groupoid.inverses");
    return rep.all_pass() && inv && inv->verdict == Verdict::pass;
}

WeakBimonoidData category_algebra(const FiniteCategoryPresentation& p, Field field) {
    auto rep = validate_category(p);
    for (const auto& it : rep.items)
        if (it.id != "groupoid.inverses" && it.verdict != Verdict::pass)
            throw InvalidPresentation("presentation fails " + it.id + (it.note.empty() ? "" : ": " + it.note));

    CatIndex ix(p);
    const auto n = static_cast<std::uint32_t>(ix.names.size());
    const Space a = Space::atomic(ix.names);
    const Scalar one = Scalar::one(field);

    Triples mu, eta, delta, eps;
    for (std::uint32_t f = 0; f < n; ++f) {
        for (std::uint32_t g = 0; g < n; ++g)
            if (auto gf = ix.comp(g, f)) mu.emplace_back(*gf, f * n + g, one);  // f . g = g o f
        delta.emplace_back(f * n + f, f, one);
        eps.emplace_back(0, f, one);
    }
    for (std::uint32_t o = 0; o < p.objects.size(); ++o) eta.emplace_back(o, 0, one);

    return WeakBimonoidData::make(Bicharacter(field), a, LinMap::from_triples(field, a * a, a, mu),
                                  LinMap::from_triples(field, Space::unit(), a, eta),
                                  LinMap::from_triples(field, a, a * a, delta),
                                  LinMap::from_triples(field, a, Space::unit(), eps));
}

LinMap inverse_table_antipode(const FiniteCategoryPresentation& p, const WeakBimonoidData& w) {
    if (!p.inverse) throw NotAGroupoid("no inverse table");
    CatIndex ix(p);
    const Field field = w.field();
    Triples nu;
    for (std::uint32_t f = 0; f < ix.names.size(); ++f) {
        std::uint32_t g = f;
        if (!ix.is_identity(f)) {
            auto it = p.inverse->find(ix.names[f]);
            if (it == p.inverse->end() || !ix.find(it->second)) throw NotAGroupoid("no inverse for " + ix.names[f]);
            g = *ix.find(it->second);
        }
        nu.emplace_back(g, f, Scalar::one(field));
    }
    return LinMap::from_triples(field, w.carrier, w.carrier, nu);
}

WeakHopfData groupoid_algebra(const FiniteCategoryPresentation& p, Field field) {
    if (!p.inverse) throw NotAGroupoid("presentation has no inverse table");
    if (!is_valid_groupoid(p)) throw NotAGroupoid("inverse table is not valid");
    auto w = category_algebra(p, field);
    LinMap nu = inverse_table_antipode(p, w);
    return WeakHopfData{w, nu, nu};
}

FiniteCategoryPresentation walking_arrow() {
    return {{"A", "B"}, {{"f", "A", "B"}}, {}, std::nullopt};
}

FiniteCategoryPresentation walking_isomorphism() {
    FiniteCategoryPresentation p{{"A", "B"}, {{"f", "A", "B"}, {"finv", "B", "A"}}, {}, {}};
    p.compose[{"finv", "f"}] = identity_name("A");
    p.compose[{"f", "finv"}] = identity_name("B");
    p.inverse = std::map<std::string, std::string>{{"f", "finv"}, {"finv", "f"}};
    return p;
}

FiniteCategoryPresentation cyclic_groups_disjoint(const std::vector<std::uint32_t>& orders) {
    FiniteCategoryPresentation p;
    p.inverse.emplace();
    for (std::size_t k = 0; k < orders.size(); ++k) {
        const std::string obj = "o" + std::to_string(k);
        const std::uint32_t n = orders[k];
        p.objects.push_back(obj);
        auto name = [&](std::uint32_t j) {
            return j % n == 0 ? identity_name(obj) : "g" + std::to_string(k) + "_" + std::to_string(j % n);
        };
        for (std::uint32_t j = 1; j < n; ++j) {
            p.morphisms.push_back({name(j), obj, obj});
            (*p.inverse)[name(j)] = name(n - j);
        }
        for (std::uint32_t i = 1; i < n; ++i)
            for (std::uint32_t j = 1; j < n; ++j) p.compose[{name(i), name(j)}] = name(i + j);
    }
    return p;
}

FrobeniusData functions_frobenius(std::uint32_t n, Field field) {
    std::vector<std::string> labels;
    for (std::uint32_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i));
    const Space a = Space::atomic(labels);
    const Scalar one = Scalar::one(field);
    Triples mu, eta, delta, eps;
    for (std::uint32_t i = 0; i < n; ++i) {
        mu.emplace_back(i, i * n + i, one);
        eta.emplace_back(i, 0, one);
        delta.emplace_back(i * n + i, i, one);
        eps.emplace_back(0, i, one);
    }
    return FrobeniusData{Bicharacter(field),
                         {a, LinMap::from_triples(field, a * a, a, mu), LinMap::from_triples(field, Space::unit(), a, eta)},
                         {a, LinMap::from_triples(field, a, a * a, delta), LinMap::from_triples(field, a, Space::unit(), eps)}};
}

GroupTable cyclic_group(std::uint32_t n) {
    GroupTable g;
    for (std::uint32_t i = 0; i < n; ++i) {
        g.elements.push_back("g" + std::to_string(i));
        g.mul.emplace_back();
        for (std::uint32_t j = 0; j < n; ++j) g.mul.back().push_back((i + j) % n);
    }
    return g;
}

FrobeniusData group_frobenius(const GroupTable& g, Field field) {
    return group_frobenius(g, Bicharacter(field), std::vector<std::uint32_t>(g.elements.size(), 0));
}

FrobeniusData group_frobenius(const GroupTable& g, const Bicharacter& chi, const std::vector<std::uint32_t>& grades) {
    const Field field = chi.field();
    const auto n = static_cast<std::uint32_t>(g.elements.size());
    if (n == 0) throw InvalidPresentation("empty group");
    if (field.characteristic() != 0 && n % field.characteristic() == 0)
        throw BadCharacteristic("characteristic " + std::to_string(field.characteristic()) + " divides |G| = " +
                                std::to_string(n));
    if (grades.size() != n) throw InvalidPresentation("one grade per group element required");
    std::vector<std::uint32_t> inv(n, n);
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b)
            if (g.mul.at(a).at(b) == 0) inv[a] = b;
    for (std::uint32_t a = 0; a < n; ++a)
        if (inv[a] == n) throw InvalidPresentation("element " + g.elements[a] + " has no inverse");

    const Space a = Space::atomic(g.elements, grades, chi.group());
    const Scalar one = Scalar::one(field);
    const Scalar scale = Scalar::from_fraction(field, 1, n);
    Triples mu, eta{{0, 0, one}}, delta, eps{{0, 0, integer(field, n)}};
    for (std::uint32_t x = 0; x < n; ++x) {
        for (std::uint32_t y = 0; y < n; ++y) mu.emplace_back(g.mul[x][y], x * n + y, one);
        for (std::uint32_t h = 0; h < n; ++h) delta.emplace_back(h * n + g.mul[inv[h]][x], x, scale);
    }
    return FrobeniusData{chi,
                         {a, LinMap::from_triples(field, a * a, a, mu), LinMap::from_triples(field, Space::unit(), a, eta)},
                         {a, LinMap::from_triples(field, a, a * a, delta), LinMap::from_triples(field, a, Space::unit(), eps)}};
}

FrobeniusSquare frobenius_square_full(const FrobeniusData& R) {
    if (!is_separable(R)) throw NotSeparable("mu delta is not the identity");
    Env env{R.chi};
    env.add_object("R", R.carrier());
    env.add_generator("mu", R.monoid.mu);
    env.add_generator("eta", R.monoid.eta);
    env.add_generator("delta", R.comonoid.delta);
    env.add_generator("eps", R.comonoid.epsilon);
    // the curl and its mirror image; mutually inverse twists of R
    env.add_generator("curl", evaluate("(eta ; delta) R ; R c(R, R) ; (mu ; eps) R", env));
    env.add_generator("curlm", evaluate("R (eta ; delta) ; ci(R, R) R ; R (mu ; eps)", env));

    auto w = WeakBimonoidData::make(R.chi, R.carrier() * R.carrier(), evaluate("c(R R, R) R ; mu mu", env),
                                    evaluate("eta eta", env), evaluate("R (eta ; delta) R", env),
                                    evaluate("mu ; eps", env));
    LinMap nu = evaluate("c(R, R) ; curl R", env);
    LinMap nu_inv = evaluate("ci(R, R) ; R curlm", env);
    return FrobeniusSquare{WeakHopfData{std::move(w), std::move(nu), std::move(nu_inv)},
                           evaluate("c(R, R) ; curl R ; mu eta", env), evaluate("eta mu", env)};
}

WeakHopfData frobenius_square(const FrobeniusData& R) { return frobenius_square_full(R).hopf; }

}  // namespace wha
