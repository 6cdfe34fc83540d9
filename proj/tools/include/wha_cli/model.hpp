#pragma once

#include <map>
#include <optional>
#include <string>

#include "json.hpp"
#include "wha/constructions.hpp"
#include "wha/errors.hpp"
#include "wha/structures.hpp"

namespace wha::cli {

inline constexpr int kSchemaVersion = 1;

// Malformed JSON; carries the 1-based line and column.
struct ParseError : Error {
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : Error(what), line(line), column(column) {}
    std::size_t line, column;
};

// Well-formed JSON that does not match the model schema; `where` is a JSON pointer.
struct SchemaError : Error {
    SchemaError(const std::string& what, std::string where) : Error((where.empty() ? "/" : where) + ": " + what), where(std::move(where)) {}
    std::string where;
};

enum class Kind { category, groupoid, frobenius, weak_bimonoid_raw };

const char* kind_name(Kind k);

struct ModelFile {
    int schema_version = kSchemaVersion;
    Kind kind = Kind::category;
    std::string name;
    Bicharacter chi{Field::rationals()};
    std::optional<FiniteCategoryPresentation> category;  // category, groupoid
    std::optional<Space> basis;                          // frobenius, weak_bimonoid_raw
    std::map<std::string, LinMap> maps;                  // mu, eta, delta, epsilon, nu, nu_inv

    Field field() const { return chi.field(); }
};

// A field override (the --field flag) replaces the file's field before any
// value is read; Fp:<p> is checked for primality here.
ModelFile parse_model_text(const std::string& text, std::optional<Field> field_override = std::nullopt);
ModelFile parse_model(const std::string& path, std::optional<Field> field_override = std::nullopt);

nlohmann::json model_to_json(const ModelFile& m);

// Raw model carrying a weak bimonoid and optionally its antipode pair.
ModelFile raw_model(std::string name, const WeakBimonoidData& w, const std::optional<LinMap>& nu = std::nullopt,
                    const std::optional<LinMap>& nu_inv = std::nullopt);
ModelFile frobenius_model(std::string name, const FrobeniusData& fr);
ModelFile category_model(std::string name, const FiniteCategoryPresentation& p, Field f);

}  // namespace wha::cli
