#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wha/diagram.hpp"

namespace wha {

enum class Verdict { pass, fail, skipped };

const char* verdict_name(Verdict v);

// Where two sides of an identity first disagree.
struct Witness {
    std::string row;  // target basis label
    std::string col;  // source basis label
    std::string lhs;
    std::string rhs;

    bool operator==(const Witness&) const = default;
};

struct Item {
    std::string id;
    std::string citation;
    Verdict verdict = Verdict::pass;
    std::optional<Witness> witness;
    std::string note;

    bool operator==(const Item&) const = default;
};

struct Report {
    std::string suite;
    std::vector<Item> items;
    double elapsed_ms = 0;

    bool all_pass() const;  // no fail items
    std::size_t count(Verdict v) const;
    const Item* find(const std::string& id) const;
    void sort();
    void append(const Report& other);
};

Witness witness_of(const Difference& d, const LinMap& shape);

// Compares two maps with the same boundary and records the outcome.
Item compare_maps(const std::string& id, const std::string& citation, const LinMap& lhs, const LinMap& rhs);

// Identity given as two or more sides in the term syntax, all claimed equal.
struct IdentitySpec {
    std::string id;
    std::string citation;
    std::vector<std::string> sides;
    std::string note;  // e.g. elided unit/counit convention used in transcription
};

// Evaluates every side against env; the first disagreeing pair yields the
// witness. Unknown names or bad boundaries give a fail item with a note.
Item check_identity(const IdentitySpec& spec, const Env& env);
Report check_identities(const std::string& suite, const std::vector<IdentitySpec>& specs, const Env& env);

}  // namespace wha
