#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "wha_cli/commands.hpp"

using namespace wha;
using namespace wha::cli;

namespace {

bool write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
    return static_cast<bool>(out);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Verify weak bimonoid, weak Hopf and quantum groupoid axioms on finite models"};
    std::string command, path, field_text, out_path;
    bool json_out = false, timings = false;
    app.add_option("command", command, "Command to run")->required()->check(CLI::IsMember(command_names()));
    app.add_option("model-file", path, "Model file (JSON)")->required();
    app.add_option("--field", field_text, "Override the model field: Q or Fp:<p>");
    app.add_flag("--json", json_out, "Write the JSON report to standard output");
    app.add_option("--out", out_path, "Write the JSON report (or the built model) to this path");
    app.add_flag("--timings", timings, "Include elapsed_ms per suite (makes reports nondeterministic)");
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kParse;
    }

    ModelFile model;
    try {
        std::optional<Field> field;
        if (!field_text.empty()) field = Field::parse(field_text);
        model = parse_model(path, field);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const SchemaError& e) {
        std::cerr << "schema error at " << e.what() << "\n";
        return kParse;
    } catch (const Error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParse;
    }

    RunResult res = run_command(command, model, timings);
    if (res.exit_code == kParse || res.exit_code == kPrecondition) {
        std::cerr << (res.exit_code == kParse ? "error: " : "precondition failed: ") << res.error << "\n";
        return res.exit_code;
    }

    if (res.model_out) {
        const std::string text = dump(*res.model_out);
        std::ostream& summary = out_path.empty() ? std::cerr : std::cout;
        summary << human_summary(res.doc);
        if (out_path.empty()) std::cout << text;
        else if (!write_file(out_path, text)) {
            std::cerr << "cannot write " << out_path << "\n";
            return kPrecondition;
        }
        return res.exit_code;
    }

    const std::string text = dump(to_json(res.doc));
    (json_out ? std::cerr : std::cout) << human_summary(res.doc);
    if (json_out) std::cout << text;
    if (!out_path.empty() && !write_file(out_path, text)) {
        std::cerr << "cannot write " << out_path << "\n";
        return kPrecondition;
    }
    return res.exit_code;
}
