#include "wha_cli/report_json.hpp"

#include <sstream>

#include "wha_cli/model.hpp"

namespace wha::cli {

using nlohmann::json;

namespace {

Verdict verdict_from(const json& v, const std::string& where) {
    if (v == "pass") return Verdict::pass;
    if (v == "fail") return Verdict::fail;
    if (v == "skipped") return Verdict::skipped;
    throw SchemaError("verdict must be pass, fail or skipped", where);
}

template <class T>
T get(const json& obj, const char* key, const std::string& where) {
    if (!obj.is_object() || !obj.contains(key)) throw SchemaError(std::string("missing field '") + key + "'", where);
    try {
        return obj.at(key).get<T>();
    } catch (const json::exception& e) {
        throw SchemaError(e.what(), where + "/" + key);
    }
}

}  // namespace

std::size_t ReportDocument::count(Verdict v) const {
    std::size_t n = 0;
    for (const auto& r : reports) n += r.count(v);
    return n;
}

bool ReportDocument::operator==(const ReportDocument& o) const {
    if (schema_version != o.schema_version || command != o.command || model != o.model || kind != o.kind ||
        field != o.field || exit_code != o.exit_code || timings != o.timings || reports.size() != o.reports.size())
        return false;
    for (std::size_t i = 0; i < reports.size(); ++i) {
        if (reports[i].suite != o.reports[i].suite || reports[i].items != o.reports[i].items) return false;
        if (timings && reports[i].elapsed_ms != o.reports[i].elapsed_ms) return false;
    }
    return true;
}

json to_json(const ReportDocument& d) {
    json reports = json::array();
    for (const auto& r : d.reports) {
        json items = json::array();
        for (const auto& it : r.items) {
            json ji = {{"id", it.id}, {"citation", it.citation}, {"verdict", verdict_name(it.verdict)}};
            if (it.witness)
                ji["witness"] = {{"row", it.witness->row}, {"col", it.witness->col}, {"lhs", it.witness->lhs},
                                 {"rhs", it.witness->rhs}};
            if (!it.note.empty()) ji["note"] = it.note;
            items.push_back(std::move(ji));
        }
        json jr = {{"suite", r.suite}, {"items", std::move(items)}};
        if (d.timings) jr["elapsed_ms"] = r.elapsed_ms;
        reports.push_back(std::move(jr));
    }
    return {{"schema_version", d.schema_version},
            {"command", d.command},
            {"model", d.model},
            {"kind", d.kind},
            {"field", d.field},
            {"reports", std::move(reports)},
            {"summary",
             {{"pass", d.count(Verdict::pass)}, {"fail", d.count(Verdict::fail)}, {"skipped", d.count(Verdict::skipped)}}},
            {"exit_code", d.exit_code}};
}

ReportDocument report_from_json(const json& j) {
    ReportDocument d;
    d.schema_version = get<int>(j, "schema_version", "");
    if (d.schema_version != kReportSchemaVersion) throw SchemaError("unsupported schema_version", "/schema_version");
    d.command = get<std::string>(j, "command", "");
    d.model = get<std::string>(j, "model", "");
    d.kind = get<std::string>(j, "kind", "");
    d.field = get<std::string>(j, "field", "");
    d.exit_code = get<int>(j, "exit_code", "");
    const json& reports = j.at("reports");
    if (!reports.is_array()) throw SchemaError("expected an array", "/reports");
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const std::string wr = "/reports/" + std::to_string(i);
        Report r;
        r.suite = get<std::string>(reports[i], "suite", wr);
        if (reports[i].contains("elapsed_ms")) {
            d.timings = true;
            r.elapsed_ms = get<double>(reports[i], "elapsed_ms", wr);
        }
        const json& items = reports[i].at("items");
        for (std::size_t k = 0; k < items.size(); ++k) {
            const std::string wi = wr + "/items/" + std::to_string(k);
            Item it;
            it.id = get<std::string>(items[k], "id", wi);
            it.citation = get<std::string>(items[k], "citation", wi);
            it.verdict = verdict_from(items[k].at("verdict"), wi + "/verdict");
            if (items[k].contains("witness")) {
                const json& w = items[k]["witness"];
                const std::string ww = wi + "/witness";
                it.witness = Witness{get<std::string>(w, "row", ww), get<std::string>(w, "col", ww),
                                     get<std::string>(w, "lhs", ww), get<std::string>(w, "rhs", ww)};
            }
            if (items[k].contains("note")) it.note = get<std::string>(items[k], "note", wi);
            r.items.push_back(std::move(it));
        }
        d.reports.push_back(std::move(r));
    }
    return d;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string human_summary(const ReportDocument& d) {
    std::ostringstream os;
    os << d.command << " on " << d.model << " (" << d.kind << ", " << d.field << ")\n";
    for (const auto& r : d.reports) {
        os << "  " << r.suite << ": " << r.count(Verdict::pass) << " pass, " << r.count(Verdict::fail) << " fail";
        if (auto s = r.count(Verdict::skipped)) os << ", " << s << " skipped";
        os << "\n";
        for (const auto& it : r.items) {
            if (it.verdict == Verdict::pass) continue;
            os << "    " << verdict_name(it.verdict) << " " << it.id;
            if (it.witness)
                os << " at (" << it.witness->row << ", " << it.witness->col << "): " << it.witness->lhs
                   << " != " << it.witness->rhs;
            if (!it.note.empty()) os << " [" << it.note << "]";
            os << "\n";
        }
    }
    os << "total: " << d.count(Verdict::pass) << " pass, " << d.count(Verdict::fail) << " fail, "
       << d.count(Verdict::skipped) << " skipped; exit " << d.exit_code << "\n";
    return os.str();
}

}  // namespace wha::cli
