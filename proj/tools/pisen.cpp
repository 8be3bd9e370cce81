#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "pisen/io.hpp"

using nlohmann::json;

namespace {

// exit codes: 0 success, 1 a verification check failed, 2 bad input
constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kBadInput = 2;

struct Options {
    std::string input;   // file path, "-" for stdin, or example name
    std::string format = "text";
    long long prime = 0;   // 0 = take from document
    long precision = 0;
    long slack = pisen::kDefaultSlack;
};

pisen::InputDocument load_document(const Options& opt) {
    std::string text;
    if (opt.input == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream in(opt.input);
        if (!in) throw pisen::input_error("cannot open " + opt.input);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw pisen::input_error(std::string("JSON parse error: ") + e.what());
    }
    pisen::InputDocument doc = pisen::parse_input(j);
    if (opt.prime > 0) doc.prime = opt.prime;
    if (opt.precision > 0) doc.precision = opt.precision;
    return doc;
}

void emit(const Options& opt, const json& j, const std::string& text) {
    if (opt.format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

int cmd_validate(const Options& opt) {
    const pisen::InputDocument doc = load_document(opt);
    if (!doc.phin) {
        // cocycle inputs are validated structurally inside the builder
        pisen::build_document(doc);
        emit(opt, json{{"ok", true}, {"issues", json::array()}}, "ok\n");
        return kOk;
    }
    const pisen::ValidationReport rep = pisen::validate(*doc.phin, doc.prime);
    json issues = json::array();
    std::ostringstream text;
    for (const auto& issue : rep.issues) {
        issues.push_back(json{{"code", issue.code},
                              {"message", issue.message},
                              {"indices", issue.indices}});
        text << issue.code << ": " << issue.message << "\n";
    }
    if (rep.ok()) text << "ok\n";
    emit(opt, json{{"ok", rep.ok()}, {"issues", std::move(issues)}}, text.str());
    return rep.ok() ? kOk : kCheckFailed;
}

int cmd_build(const Options& opt) {
    const pisen::InputDocument doc = load_document(opt);
    const pisen::BuildResult r = pisen::build_document(doc);
    emit(opt, pisen::module_to_json(r), pisen::module_to_text(r));
    return kOk;
}

int cmd_verify(const Options& opt) {
    const pisen::InputDocument doc = load_document(opt);
    const pisen::BuildResult r = pisen::build_document(doc);
    pisen::VerificationReport rep =
        pisen::full_report(r.mod, r.data ? &*r.data : nullptr, r.m, r.ctx, opt.slack);
    rep.input_digest = pisen::input_digest(doc);
    emit(opt, pisen::report_to_json(rep), pisen::report_to_text(rep));
    return rep.all_passed() ? kOk : kCheckFailed;
}

int cmd_example(const Options& opt, const std::string& name) {
    pisen::InputDocument doc = pisen::example_document(name);
    if (opt.prime > 0) doc.prime = opt.prime;
    if (opt.precision > 0) doc.precision = opt.precision;
    std::cout << pisen::input_to_json(doc).dump(2) << "\n";
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"differential modules of semi-stable p-adic representations"};
    app.require_subcommand(1);

    Options opt;
    std::string example_name;

    const auto add_common = [&](CLI::App* sub, bool needs_input) {
        if (needs_input)
            sub->add_option("input", opt.input, "input JSON file, or - for stdin")
                ->required();
        sub->add_option("--prime", opt.prime, "override the prime p");
        sub->add_option("--precision", opt.precision, "override the working precision M");
        sub->add_option("--format", opt.format, "text or json")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* validate = app.add_subcommand("validate", "check input data consistency");
    add_common(validate, true);
    CLI::App* build = app.add_subcommand("build", "construct the differential module");
    add_common(build, true);
    CLI::App* verify = app.add_subcommand("verify", "build and certify every identity");
    add_common(verify, true);
    verify->add_option("--slack", opt.slack, "digits of tolerance below M")
        ->check(CLI::Range(0L, 1000L));
    CLI::App* example = app.add_subcommand("example", "print a built-in input document");
    example->add_option("name", example_name, "tate-curve, tate-curve-cocycle, "
                        "crystalline:d, jordan:d, gapped")->required();
    example->add_option("--prime", opt.prime, "override the prime p");
    example->add_option("--precision", opt.precision, "override the working precision M");

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) return cmd_validate(opt);
        if (build->parsed()) return cmd_build(opt);
        if (verify->parsed()) return cmd_verify(opt);
        if (example->parsed()) return cmd_example(opt, example_name);
    } catch (const pisen::input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kBadInput;
    } catch (const pisen::relation_error& e) {
        std::cerr << "relation failure: " << e.what() << "\n";
        return kCheckFailed;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kCheckFailed;
    }
    return kBadInput;
}
