#include <gtest/gtest.h>

#include "gen.hpp"
#include "helpers.hpp"
#include "models.hpp"
#include "wha_cli/commands.hpp"
#include "wha_cli/model.hpp"
#include "wha_cli/report_json.hpp"

using namespace wha;
using namespace wha::cli;
using nlohmann::json;

namespace {

const Field Q = Field::rationals();

std::string model_path(const std::string& name) { return std::string(WHA_MODELS_DIR) + "/" + name; }

ModelFile reparse(const ModelFile& m) { return parse_model_text(model_to_json(m).dump()); }

json minimal_category() {
    return json::parse(R"({"schema_version": 1, "kind": "category", "field": "Q", "objects": ["A", "B"],
                           "morphisms": [{"name": "f", "src": "A", "tgt": "B"}], "compose": []})");
}

std::string schema_where(const json& doc) {
    try {
        parse_model_text(doc.dump());
    } catch (const SchemaError& e) {
        return e.where;
    }
    return "<accepted>";
}

// every fail has a witness, ids sorted within each suite
void expect_well_formed(const ReportDocument& d) {
    for (const auto& r : d.reports) {
        for (std::size_t i = 0; i < r.items.size(); ++i) {
            if (r.items[i].verdict == Verdict::fail) EXPECT_TRUE(r.items[i].witness.has_value()) << r.items[i].id;
            if (i) EXPECT_LE(r.items[i - 1].id, r.items[i].id) << r.suite;
        }
    }
    if (d.exit_code == kOk || d.exit_code == kVerification) EXPECT_EQ(d.exit_code == kOk, d.count(Verdict::fail) == 0);
}

}  // namespace

// ---- model files -----------------------------------------------------------

TEST(ModelParse, ShippedFiles) {
    auto g2 = parse_model(model_path("g2.json"));
    EXPECT_EQ(g2.kind, Kind::groupoid);
    EXPECT_EQ(g2.category->objects.size(), 2u);
    EXPECT_EQ(parse_model(model_path("walking_arrow.json")).kind, Kind::category);
    EXPECT_EQ(parse_model(model_path("z2_z3.json")).category->morphisms.size(), 3u);
    auto fr = parse_model(model_path("functions2.json"));
    EXPECT_EQ(fr.kind, Kind::frobenius);
    EXPECT_EQ(fr.basis->dim(), 2u);
}

TEST(ModelParse, ShippedFilesMatchConstructions) {
    EXPECT_EQ(groupoid_algebra(*parse_model(model_path("g2.json")).category, Q).nu,
              groupoid_algebra(walking_isomorphism(), Q).nu);
    auto fr = parse_model(model_path("functions2.json"));
    EXPECT_EQ(fr.maps.at("mu"), functions_frobenius(2, Q).monoid.mu);
    EXPECT_EQ(fr.maps.at("delta"), functions_frobenius(2, Q).comonoid.delta);
}

TEST(ModelParse, DuplicateMorphismNames) {
    json doc = minimal_category();
    doc["morphisms"].push_back({{"name", "f"}, {"src", "B"}, {"tgt", "A"}});
    EXPECT_EQ(schema_where(doc), "/morphisms/1/name");
    doc = minimal_category();
    doc["morphisms"][0]["name"] = "A";  // clashes with an object
    EXPECT_EQ(schema_where(doc), "/morphisms/0/name");
    doc = minimal_category();
    doc["morphisms"][0]["name"] = "id_A";
    EXPECT_EQ(schema_where(doc), "/morphisms/0/name");
}

TEST(ModelParse, SchemaViolations) {
    json doc = minimal_category();
    doc.erase("schema_version");
    EXPECT_EQ(schema_where(doc), "");
    doc = minimal_category();
    doc["schema_version"] = 2;
    EXPECT_EQ(schema_where(doc), "/schema_version");
    doc = minimal_category();
    doc["kind"] = "monoid";
    EXPECT_EQ(schema_where(doc), "/kind");
    doc = minimal_category();
    doc["extra"] = 1;
    EXPECT_EQ(schema_where(doc), "");
    doc = minimal_category();
    doc["objects"][1] = "B C";
    EXPECT_EQ(schema_where(doc), "/objects/1");
    doc = minimal_category();
    doc["morphisms"][0]["tgt"] = "Z";
    EXPECT_EQ(schema_where(doc), "/morphisms/0/tgt");
    doc = minimal_category();
    doc["compose"].push_back({{"first", "f"}, {"second", "g"}, {"result", "f"}});
    EXPECT_EQ(schema_where(doc), "/compose/0/second");
    doc = minimal_category();
    doc["inverse"] = json::object();
    EXPECT_EQ(schema_where(doc), "/inverse");
    doc = minimal_category();
    doc["kind"] = "groupoid";
    EXPECT_EQ(schema_where(doc), "");
    doc = minimal_category();
    doc["field"] = "Fp:9";
    EXPECT_EQ(schema_where(doc), "/field");
}

TEST(ModelParse, MatrixViolations) {
    json doc = model_to_json(frobenius_model("r", functions_frobenius(2, Q)));
    json bad = doc;
    bad["maps"]["mu"].push_back({"e0", "e0|e0", "2"});
    EXPECT_EQ(schema_where(bad), "/maps/mu/2");
    bad = doc;
    bad["maps"]["mu"][0][1] = "e0|e7";
    EXPECT_EQ(schema_where(bad), "/maps/mu/0/1");
    bad = doc;
    bad["maps"]["mu"][0][2] = "1/0";
    EXPECT_EQ(schema_where(bad), "/maps/mu/0/2");
    bad = doc;
    bad["maps"].erase("eta");
    EXPECT_EQ(schema_where(bad), "/maps");
    bad = doc;
    bad["maps"]["nu"] = json::array();  // only raw models carry an antipode
    EXPECT_EQ(schema_where(bad), "/maps");
    bad = doc;
    bad["basis"][1] = "e0";
    EXPECT_EQ(schema_where(bad), "/basis/1");
    bad = doc;
    bad["basis"][1] = "e|1";
    EXPECT_EQ(schema_where(bad), "/basis/1");
}

TEST(ModelParse, GradeViolationIsSchemaError) {
    std::vector<std::uint32_t> z4 = {0, 1, 2, 3};
    auto fr = group_frobenius(cyclic_group(4), th::z4_f5(), z4);
    json doc = model_to_json(frobenius_model("z4", fr));
    EXPECT_NO_THROW(parse_model_text(doc.dump()));
    doc["maps"]["epsilon"].push_back({"1", fr.carrier().label(1), "1"});
    EXPECT_EQ(schema_where(doc), "/maps/epsilon");
}

TEST(ModelParse, MalformedJsonReportsLineAndColumn) {
    try {
        parse_model_text("{\n  \"kind\": \"category\",\n  \"objects\": [1,,2]\n}");
        FAIL() << "accepted malformed JSON";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line, 3u);
        EXPECT_EQ(e.column, 17u);
    }
    EXPECT_THROW(parse_model("/nonexistent/model.json"), ParseError);
}

TEST(ModelParse, FieldOverride) {
    auto m = parse_model(model_path("functions2.json"), Field::parse("Fp:7"));
    EXPECT_EQ(m.field().name(), "Fp:7");
    EXPECT_EQ(m.maps.at("mu").field().name(), "Fp:7");
    EXPECT_THROW(Field::parse("Fp:15"), Error);
}

TEST(ModelParse, EmptyCategoryIsAccepted) {
    json doc = minimal_category();
    doc["objects"] = json::array();
    doc["morphisms"] = json::array();
    auto m = parse_model_text(doc.dump());
    EXPECT_EQ(run_command("all", m).exit_code, kOk);
}

TEST(ModelRoundTrip, ShippedAndConstructed) {
    for (const char* f : {"g2.json", "walking_arrow.json", "z2_z3.json", "functions2.json"}) {
        auto m = parse_model(model_path(f));
        EXPECT_EQ(model_to_json(reparse(m)), model_to_json(m)) << f;
    }
    std::vector<std::uint32_t> z4 = {0, 1, 2, 3};
    auto sq = frobenius_square(group_frobenius(cyclic_group(4), th::z4_f5(), z4));
    auto raw = raw_model("z4sq", sq.bimonoid, sq.nu, sq.nu_inv);
    auto back = reparse(raw);
    EXPECT_EQ(model_to_json(back), model_to_json(raw));
    EXPECT_EQ(back.field().name(), "Fp:5");
    EXPECT_FALSE(back.chi.group()->trivial());
    EXPECT_EQ(back.chi(1, 1), th::z4_f5()(1, 1));
    EXPECT_EQ(back.maps.at("delta").columns(), sq.bimonoid.delta.columns());
}

TEST(ModelRoundTripProperty, RandomRawModels) {
    for (int trial = 0; trial < 10; ++trial) {
        const int n = gen::uniform(1, 4);
        std::vector<std::string> labels;
        for (int i = 0; i < n; ++i) labels.push_back("b" + std::to_string(i));
        const Space a = Space::atomic(labels);
        const Field f = trial % 2 ? Q : Field::prime(7);
        auto w = WeakBimonoidData::make(Bicharacter(f), a, gen::graded_map(f, a * a, a), gen::graded_map(f, Space(), a),
                                        gen::graded_map(f, a, a * a), gen::graded_map(f, a, Space()));
        auto m = raw_model("r" + std::to_string(trial), w, gen::graded_map(f, a, a));
        auto back = reparse(m);
        for (const auto& [k, v] : m.maps) EXPECT_EQ(back.maps.at(k), v) << k;
        EXPECT_EQ(model_to_json(back).dump(), model_to_json(m).dump());
    }
}

// ---- commands and exit codes -----------------------------------------------

TEST(Commands, AllOnShippedGroupoidsPasses) {
    for (const char* f : {"g2.json", "z2_z3.json"}) {
        auto res = run_command("all", parse_model(model_path(f)));
        EXPECT_EQ(res.exit_code, kOk) << f;
        EXPECT_EQ(res.doc.count(Verdict::skipped), 0u) << f;
        EXPECT_GT(res.doc.count(Verdict::pass), 300u) << f;
        expect_well_formed(res.doc);
    }
}

TEST(Commands, WalkingArrowHasNoAntipode) {
    auto m = parse_model(model_path("walking_arrow.json"));
    auto res = run_command("check-hopf", m);
    EXPECT_EQ(res.exit_code, kVerification);
    ASSERT_EQ(res.doc.reports.size(), 1u);
    const Item* it = res.doc.reports[0].find("antipode.exists");
    ASSERT_NE(it, nullptr);
    EXPECT_EQ(it->verdict, Verdict::fail);
    EXPECT_TRUE(it->witness.has_value());
    EXPECT_NE(it->note.find("no antipode exists"), std::string::npos);
    // `all` treats the missing antipode as not applicable
    auto all = run_command("all", m);
    EXPECT_EQ(all.exit_code, kOk);
    EXPECT_EQ(all.doc.count(Verdict::skipped), 3u);
}

TEST(Commands, FrobeniusSquarePipeline) {
    auto m = parse_model(model_path("functions2.json"));
    auto built = run_command("build-frobenius-square", m);
    ASSERT_EQ(built.exit_code, kOk);
    ASSERT_TRUE(built.model_out.has_value());
    auto sq = parse_model_text(built.model_out->dump());
    EXPECT_EQ(sq.kind, Kind::weak_bimonoid_raw);
    EXPECT_EQ(sq.basis->dim(), 4u);
    EXPECT_TRUE(sq.maps.count("nu_inv"));
    auto all = run_command("all", sq);
    EXPECT_EQ(all.exit_code, kOk);
    EXPECT_EQ(all.doc.count(Verdict::skipped), 0u);
    // the frobenius kind runs the same suites on R (x) R directly
    EXPECT_EQ(run_command("all", m).exit_code, kOk);
}

TEST(Commands, BuildSquareNeedsFrobeniusKind) {
    auto res = run_command("build-frobenius-square", parse_model(model_path("g2.json")));
    EXPECT_EQ(res.exit_code, kPrecondition);
    EXPECT_FALSE(res.error.empty());
}

TEST(Commands, NonSeparableFrobeniusIsPrecondition) {
    auto fr = functions_frobenius(2, Q);
    fr.comonoid.delta = fr.comonoid.delta.scaled(Scalar::from_int(Q, 2));
    fr.comonoid.epsilon = fr.comonoid.epsilon.scaled(Scalar::from_fraction(Q, 1, 2));
    auto res = run_command("all", reparse(frobenius_model("scaled", fr)));
    EXPECT_EQ(res.exit_code, kPrecondition);
    EXPECT_NE(res.error.find("separab"), std::string::npos);
}

TEST(Commands, BrokenRawModelParsesThenFails) {
    auto h = groupoid_algebra(walking_isomorphism(), Q);
    auto w = h.bimonoid;
    // eta scaled by 2: the file is well-formed, the unit laws are not
    auto m = raw_model("broken", WeakBimonoidData::make(w.chi, w.carrier, w.mu, w.eta.scaled(Scalar::from_int(Q, 2)),
                                                        w.delta, w.epsilon));
    ModelFile back;
    ASSERT_NO_THROW(back = reparse(m));
    auto bim = run_command("check-bimonoid", back);
    EXPECT_EQ(bim.exit_code, kVerification);
    expect_well_formed(bim.doc);
    EXPECT_EQ(run_command("check-quantum", back).exit_code, kPrecondition);
    auto all = run_command("all", back);
    EXPECT_EQ(all.exit_code, kVerification);
    EXPECT_GT(all.doc.count(Verdict::skipped), 0u);
    expect_well_formed(all.doc);
}

TEST(Commands, WrongSuppliedAntipodeFails) {
    auto h = groupoid_algebra(walking_isomorphism(), Q);
    auto m = raw_model("idnu", h.bimonoid, LinMap::identity(Q, h.bimonoid.carrier));
    auto res = run_command("check-hopf", reparse(m));
    EXPECT_EQ(res.exit_code, kVerification);
    expect_well_formed(res.doc);
}

TEST(Commands, UnknownCommand) { EXPECT_EQ(run_command("frobnicate", parse_model(model_path("g2.json"))).exit_code, kParse); }

TEST(Commands, EverySingleCommandOnEveryShippedModel) {
    for (const char* f : {"g2.json", "walking_arrow.json", "z2_z3.json", "functions2.json"}) {
        auto m = parse_model(model_path(f));
        for (const auto& c : command_names()) {
            auto res = run_command(c, m);
            const bool hopf_on_arrow = c == "check-hopf" && std::string(f) == "walking_arrow.json";
            const bool build_on_category = c == "build-frobenius-square" && m.kind != Kind::frobenius;
            const int expected = hopf_on_arrow ? kVerification : build_on_category ? kPrecondition : kOk;
            EXPECT_EQ(res.exit_code, expected) << c << " " << f << " " << res.error;
            expect_well_formed(res.doc);
        }
    }
}

// ---- report JSON -------------------------------------------------------------

TEST(ReportJson, RoundTrip) {
    for (const char* f : {"g2.json", "walking_arrow.json"}) {
        for (bool timings : {false, true}) {
            auto res = run_command("all", parse_model(model_path(f)), timings);
            const json j = to_json(res.doc);
            const ReportDocument back = report_from_json(json::parse(dump(j)));
            EXPECT_EQ(back, res.doc);
            EXPECT_EQ(to_json(back), j);
        }
    }
    auto fail = run_command("check-hopf", parse_model(model_path("walking_arrow.json")));
    EXPECT_EQ(report_from_json(to_json(fail.doc)), fail.doc);
}

TEST(ReportJson, DeterministicWithoutTimings) {
    auto m = parse_model(model_path("z2_z3.json"));
    const std::string a = dump(to_json(run_command("all", m).doc));
    const std::string b = dump(to_json(run_command("all", m).doc));
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.find("elapsed_ms"), std::string::npos);
    EXPECT_NE(dump(to_json(run_command("all", m, true).doc)).find("elapsed_ms"), std::string::npos);
}

TEST(ReportJson, RejectsBadDocuments) {
    auto res = run_command("check-bimonoid", parse_model(model_path("g2.json")));
    json j = to_json(res.doc);
    j["reports"][0]["items"][0]["verdict"] = "maybe";
    EXPECT_THROW(report_from_json(j), SchemaError);
    j = to_json(res.doc);
    j["schema_version"] = 0;
    EXPECT_THROW(report_from_json(j), SchemaError);
    j = to_json(res.doc);
    j["reports"][0]["items"][0].erase("id");
    EXPECT_THROW(report_from_json(j), SchemaError);
}

TEST(ReportJson, HumanSummaryNamesFailures) {
    auto res = run_command("check-hopf", parse_model(model_path("walking_arrow.json")));
    const std::string s = human_summary(res.doc);
    EXPECT_NE(s.find("fail antipode.exists"), std::string::npos);
    EXPECT_NE(s.find("exit 3"), std::string::npos);
}
