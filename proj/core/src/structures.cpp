#include "wha/structures.hpp"

#include <chrono>

#include "wha/errors.hpp"
#include "wha/linalg.hpp"
#include "wha/registry.hpp"

namespace wha {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

LinMap id_of(const Space& x, Field f) { return LinMap::identity(f, x); }

Env base_env(const Bicharacter& chi, const Space& a) {
    Env env{chi};
    env.add_object("A", a);
    return env;
}

std::vector<IdentitySpec> concat(std::initializer_list<std::vector<IdentitySpec>> parts) {
    std::vector<IdentitySpec> out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

}  // namespace

LinMap FrobeniusData::rho() const { return compose(comonoid.delta, monoid.eta); }
LinMap FrobeniusData::sigma() const { return compose(comonoid.epsilon, monoid.mu); }

WeakBimonoidData WeakBimonoidData::make(Bicharacter chi, Space carrier, LinMap mu, LinMap eta, LinMap delta,
                                        LinMap epsilon) {
    const Field f = chi.field();
    LinMap zero(f, carrier, carrier);
    WeakBimonoidData w{std::move(chi), std::move(carrier), std::move(mu), std::move(eta), std::move(delta),
                       std::move(epsilon), zero, zero, zero};
    auto str = derive_stn(w);
    w.s = std::move(str.s);
    w.t = std::move(str.t);
    w.r = std::move(str.r);
    return w;
}

Env make_env(const MonoidData& m, const Bicharacter& chi) {
    Env env = base_env(chi, m.carrier);
    env.add_generator("mu", m.mu);
    env.add_generator("eta", m.eta);
    return env;
}

Env make_env(const ComonoidData& c, const Bicharacter& chi) {
    Env env = base_env(chi, c.carrier);
    env.add_generator("delta", c.delta);
    env.add_generator("eps", c.epsilon);
    return env;
}

Env make_env(const FrobeniusData& fr) {
    Env env = make_env(fr.monoid, fr.chi);
    env.add_generator("delta", fr.comonoid.delta);
    env.add_generator("eps", fr.comonoid.epsilon);
    return env;
}

Env make_env(const WeakBimonoidData& w) {
    Env env = base_env(w.chi, w.carrier);
    env.add_generator("mu", w.mu);
    env.add_generator("eta", w.eta);
    env.add_generator("delta", w.delta);
    env.add_generator("eps", w.epsilon);
    env.add_generator("s", w.s);
    env.add_generator("t", w.t);
    env.add_generator("r", w.r);
    return env;
}

Env make_env(const WeakHopfData& h) {
    Env env = make_env(h.bimonoid);
    env.add_generator("nu", h.nu);
    if (h.nu_inv) env.add_generator("nuinv", *h.nu_inv);
    return env;
}

Report check_monoid(const MonoidData& m, const Bicharacter& chi) {
    return check_identities("monoid", registry::monoid_axioms(), make_env(m, chi));
}
Report check_monoid(const MonoidData& m) { return check_monoid(m, Bicharacter(m.mu.field())); }

Report check_comonoid(const ComonoidData& c, const Bicharacter& chi) {
    return check_identities("comonoid", registry::comonoid_axioms(), make_env(c, chi));
}
Report check_comonoid(const ComonoidData& c) { return check_comonoid(c, Bicharacter(c.delta.field())); }

Report check_weak_bimonoid(const WeakBimonoidData& w) {
    return check_identities("weak-bimonoid", registry::weak_bimonoid_axioms(), make_env(w));
}

STR derive_stn(const WeakBimonoidData& w) {
    Env env = base_env(w.chi, w.carrier);
    env.add_generator("mu", w.mu);
    env.add_generator("eta", w.eta);
    env.add_generator("delta", w.delta);
    env.add_generator("eps", w.epsilon);
    return {evaluate(registry::kSource, env), evaluate(registry::kTarget, env),
            evaluate(registry::kRotatedTarget, env)};
}

Report check_st_properties(const WeakBimonoidData& w) {
    return check_identities("source-target",
                            concat({registry::source_properties(), registry::target_properties(),
                                    registry::source_target_interactions(), registry::rotated_target_properties()}),
                            make_env(w));
}

Report check_strict_bialgebra_laws(const WeakBimonoidData& w) {
    return check_identities("strict-bialgebra", registry::strict_bialgebra_laws(), make_env(w));
}

LinMap convolution(const LinMap& f, const LinMap& g, const WeakBimonoidData& w) {
    if (f.src() != w.carrier || f.tgt() != w.carrier || g.src() != w.carrier || g.tgt() != w.carrier)
        throw DomainMismatch("convolution of maps not A -> A");
    return compose(w.mu, compose(tensor(f, g), w.delta));
}

AntipodeSearch search_antipode(const WeakBimonoidData& w) {
    const Field fld = w.field();
    const Space& a = w.carrier;
    const std::uint32_t n = a.dim();
    const LinMap one = id_of(a, fld);
    const auto grades = a.grades();

    // unknown k is the (i, j) entry of nu; only grade-preserving entries
    std::vector<std::pair<std::uint32_t, std::uint32_t>> unknowns;
    for (std::uint32_t j = 0; j < n; ++j)
        for (std::uint32_t i = 0; i < n; ++i)
            if (grades[i] == grades[j]) unknowns.emplace_back(i, j);

    const std::uint32_t block = n * n;
    Dense m(fld, 2 * block, static_cast<std::uint32_t>(unknowns.size()));
    for (std::uint32_t k = 0; k < unknowns.size(); ++k) {
        auto [i, j] = unknowns[k];
        LinMap e = LinMap::from_triples(fld, a, a, {{i, j, Scalar::one(fld)}});
        LinMap left = convolution(e, one, w), right = convolution(one, e, w);
        for (std::uint32_t c = 0; c < n; ++c) {
            for (const auto& [row, v] : left.column(c)) m(c * n + row, k) = v;
            for (const auto& [row, v] : right.column(c)) m(block + c * n + row, k) = v;
        }
    }
    std::vector<Scalar> b(2 * block, Scalar::zero(fld));
    for (std::uint32_t c = 0; c < n; ++c) {
        for (const auto& [row, v] : w.t.column(c)) b[c * n + row] = v;
        for (const auto& [row, v] : w.r.column(c)) b[block + c * n + row] = v;
    }

    AntipodeSearch out;
    auto sol = solve_affine(m, b);
    if (!sol.particular) {
        out.reason = "no antipode exists: nu * 1 = t and 1 * nu = r have no common solution";
        Scalar yb = Scalar::zero(fld);
        std::optional<std::uint32_t> first;
        for (std::uint32_t q = 0; q < sol.certificate.size(); ++q) {
            if (sol.certificate[q].is_zero()) continue;
            if (!first) first = q;
            yb = yb + sol.certificate[q] * b[q];
        }
        if (first) {
            const std::uint32_t q = *first % block;
            const std::string eq = *first < block ? "nu*1=t" : "1*nu=r";
            out.witness = Witness{eq + ":" + a.label(q % n), a.label(q / n), "0", yb.str()};
        }
        return out;
    }
    out.solution_dim = sol.kernel.size();

    auto to_map = [&](const std::vector<Scalar>& x) {
        std::vector<std::tuple<std::uint32_t, std::uint32_t, Scalar>> e;
        for (std::uint32_t k = 0; k < x.size(); ++k)
            if (!x[k].is_zero()) e.emplace_back(unknowns[k].first, unknowns[k].second, x[k]);
        return LinMap::from_triples(fld, a, a, e);
    };
    const LinMap nu0 = to_map(*sol.particular);
    LinMap cand = convolution(convolution(nu0, one, w), nu0, w);

    WeakHopfData h{w, cand, std::nullopt};
    Report ax = check_identities("antipode", registry::antipode_axioms(), make_env(h));
    if (!ax.all_pass()) {
        for (const auto& it : ax.items)
            if (it.verdict == Verdict::fail) {
                out.reason = "no antipode exists: the only candidate fails " + it.id;
                out.witness = it.witness;
                break;
            }
        return out;
    }
    // every solution of the linear axioms must lead to the same candidate
    for (const auto& kv : sol.kernel) {
        LinMap other = nu0 + to_map(kv);
        if (convolution(convolution(other, one, w), other, w) != cand)
            throw Error("antipode candidate depends on the chosen linear solution");
    }
    out.nu = std::move(cand);
    return out;
}

std::optional<LinMap> find_antipode(const WeakBimonoidData& w) { return search_antipode(w).nu; }

Report check_weak_hopf(const WeakHopfData& h) {
    const auto t0 = Clock::now();
    Env env = make_env(h);
    auto specs = concat({registry::antipode_axioms(), registry::antipode_consequences()});
    if (h.nu_inv) {
        specs.push_back({"antipode.inverse.left", "nu^-1 nu = 1", {"nu ; nuinv", "A"}, ""});
        specs.push_back({"antipode.inverse.right", "nu nu^-1 = 1", {"nuinv ; nu", "A"}, ""});
    }
    Report r = check_identities("weak-hopf", specs, env);
    r.elapsed_ms = ms_since(t0);
    return r;
}

Report check_frobenius(const FrobeniusData& fr) {
    return check_identities("frobenius", registry::frobenius_axioms(), make_env(fr));
}

bool is_separable(const FrobeniusData& fr) {
    return compose(fr.monoid.mu, fr.comonoid.delta) == id_of(fr.carrier(), fr.field());
}

Report check_separable_frobenius(const FrobeniusData& fr) {
    return check_identities("separable-frobenius", concat({registry::frobenius_axioms(), registry::separability()}),
                            make_env(fr));
}

Report check_frobenius_morphism(const LinMap& f, const FrobeniusData& R, const FrobeniusData& S) {
    const auto t0 = Clock::now();
    Report rep{"frobenius-morphism", {}, 0};
    if (f.src() != R.carrier() || f.tgt() != S.carrier()) throw DomainMismatch("f is not a map R -> S");
    rep.items.push_back(compare_maps("morphism.mult", "f mu_R = mu_S (f x f)", compose(f, R.monoid.mu),
                                     compose(S.monoid.mu, tensor(f, f))));
    rep.items.push_back(compare_maps("morphism.unit", "f eta_R = eta_S", compose(f, R.monoid.eta), S.monoid.eta));
    rep.items.push_back(compare_maps("morphism.comult", "(f x f) delta_R = delta_S f",
                                     compose(tensor(f, f), R.comonoid.delta), compose(S.comonoid.delta, f)));
    rep.items.push_back(
        compare_maps("morphism.counit", "eps_S f = eps_R", compose(S.comonoid.epsilon, f), R.comonoid.epsilon));
    rep.sort();
    rep.elapsed_ms = ms_since(t0);
    return rep;
}

LinMap frobenius_inverse(const LinMap& f, const FrobeniusData& R, const FrobeniusData& S) {
    Report pre = check_frobenius_morphism(f, R, S);
    if (!pre.all_pass()) {
        for (const auto& it : pre.items)
            if (it.verdict == Verdict::fail) throw NotFrobeniusMorphism("f fails " + it.id);
    }
    const Field fld = R.field();
    const LinMap idR = id_of(R.carrier(), fld), idS = id_of(S.carrier(), fld);
    LinMap g = compose(tensor(idR, S.sigma()), compose(tensor({idR, f, idS}), tensor(R.rho(), idS)));
    LinMap mirror = compose(tensor(S.sigma(), idR), compose(tensor({idS, f, idR}), tensor(idS, R.rho())));
    if (g != mirror) throw Error("the two inverse formulas disagree");
    if (compose(g, f) != idR || compose(f, g) != idS) throw Error("inverse formula is not a two-sided inverse");
    return g;
}

}  // namespace wha
