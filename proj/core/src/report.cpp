#include "wha/report.hpp"

#include <algorithm>
#include <chrono>

#include "wha/errors.hpp"

namespace wha {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::skipped: return "skipped";
    }
    return "?";
}

bool Report::all_pass() const { return count(Verdict::fail) == 0; }

std::size_t Report::count(Verdict v) const {
    return static_cast<std::size_t>(std::count_if(items.begin(), items.end(), [v](const Item& i) { return i.verdict == v; }));
}

const Item* Report::find(const std::string& id) const {
    for (const auto& i : items)
        if (i.id == id) return &i;
    return nullptr;
}

void Report::sort() {
    std::stable_sort(items.begin(), items.end(), [](const Item& a, const Item& b) { return a.id < b.id; });
}

void Report::append(const Report& other) {
    items.insert(items.end(), other.items.begin(), other.items.end());
    elapsed_ms += other.elapsed_ms;
}

Witness witness_of(const Difference& d, const LinMap& shape) {
    return Witness{shape.tgt().label(d.row), shape.src().label(d.col), d.lhs.str(), d.rhs.str()};
}

Item compare_maps(const std::string& id, const std::string& citation, const LinMap& lhs, const LinMap& rhs) {
    Item item{id, citation, Verdict::pass, std::nullopt, {}};
    if (lhs.src() != rhs.src() || lhs.tgt() != rhs.tgt()) {
        item.verdict = Verdict::fail;
        item.note = "sides have different boundaries";
        item.witness = Witness{"-", "-", lhs.src().describe() + "->" + lhs.tgt().describe(),
                               rhs.src().describe() + "->" + rhs.tgt().describe()};
        return item;
    }
    if (auto d = lhs.first_difference(rhs)) {
        item.verdict = Verdict::fail;
        item.witness = witness_of(*d, lhs);
    }
    return item;
}

Item check_identity(const IdentitySpec& spec, const Env& env) {
    Item item{spec.id, spec.citation, Verdict::pass, std::nullopt, spec.note};
    try {
        std::vector<LinMap> vals;
        for (const auto& s : spec.sides) vals.push_back(evaluate(s, env));
        for (std::size_t k = 1; k < vals.size(); ++k) {
            Item c = compare_maps(spec.id, spec.citation, vals[0], vals[k]);
            if (c.verdict == Verdict::fail) {
                item.verdict = Verdict::fail;
                item.witness = c.witness;
                item.note = "side 1 vs side " + std::to_string(k + 1) + (c.note.empty() ? "" : ": " + c.note);
                break;
            }
        }
    } catch (const Error& e) {
        item.verdict = Verdict::fail;
        item.note = e.what();
        item.witness = Witness{"-", "-", "error", "error"};
    }
    return item;
}

Report check_identities(const std::string& suite, const std::vector<IdentitySpec>& specs, const Env& env) {
    const auto t0 = std::chrono::steady_clock::now();
    Report r{suite, {}, 0};
    for (const auto& s : specs) r.items.push_back(check_identity(s, env));
    r.sort();
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

}  // namespace wha
