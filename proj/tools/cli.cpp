#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "rosa/lts.hpp"
#include "rosa/parser.hpp"

namespace rosa::cli {

namespace {

constexpr const char* kExitCodesHelp =
    "Exit codes:\n"
    "  0  success (including truncated builds, which warn on stderr)\n"
    "  1  usage or I/O error\n"
    "  2  lexical, syntax or validation error\n"
    "  3  unbound process variable or unguarded recursion\n";

std::string render(const Lts& lts, const CliArgs& args) {
    ExportOptions opts;
    opts.node_labels = args.labels;
    switch (args.format) {
        case Format::Text: return to_text(lts, opts);
        case Format::Dot: return to_dot(lts, opts);
        case Format::Json: return to_json(lts) + "\n";
    }
    return {};
}

bool read_input(const CliArgs& args, std::istream& in, std::string& source, std::ostream& err) {
    if (args.input == "-") {
        source.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
        return true;
    }
    std::ifstream file(args.input, std::ios::binary);
    if (!file) {
        err << "error: cannot open '" << args.input << "'\n";
        return false;
    }
    source.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
    return true;
}

}  // namespace

int run(const CliArgs& args, std::istream& in, std::ostream& out, std::ostream& err) {
    std::string source;
    if (!read_input(args, in, source, err)) return kExitUsage;

    try {
        DefinitionEnv env = parse_program(source);
        if (args.root) env.set_root(*args.root);
        if (args.check) return kExitOk;

        BuildConfig config;
        config.max_states = args.max_states;
        const Lts lts = build_lts(env, config);
        if (lts.truncated) {
            err << "warning: state limit of " << args.max_states
                << " reached; the LTS is incomplete\n";
        }

        const std::string artifact = render(lts, args);
        if (args.out) {
            std::ofstream file(*args.out, std::ios::binary);
            if (!file || !(file << artifact)) {
                err << "error: cannot write '" << *args.out << "'\n";
                return kExitUsage;
            }
        } else {
            out << artifact;
        }
        return kExitOk;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const DuplicateDefinition& e) {
        err << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const UnboundVariable& e) {
        err << "error: " << e.what() << '\n';
        return kExitSemantic;
    } catch (const UnguardedRecursion& e) {
        err << "error: " << e.what() << '\n';
        return kExitSemantic;
    }
}

std::optional<int> parse_args(int argc, const char* const* argv, CliArgs& args, std::ostream& out,
                              std::ostream& err) {
    CLI::App app{"Build the labelled transition system of a ROSA process", "rosa-lts"};
    app.footer(kExitCodesHelp);

    const std::map<std::string, Format> formats{
        {"text", Format::Text}, {"dot", Format::Dot}, {"json", Format::Json}};
    const std::map<std::string, NodeLabels> labels{
        {"id", NodeLabels::Id}, {"expr", NodeLabels::Expression}, {"both", NodeLabels::Both}};
    std::string format_name = "text";
    std::string labels_name = "both";

    app.add_option("input", args.input, "Program file, or - for stdin")->required();
    app.add_option("--format", format_name, "Output format (default: text)")
        ->check(CLI::IsMember({"text", "dot", "json"}))
        ->option_text("text|dot|json");
    app.add_option("--out", args.out, "Write the output to this file instead of stdout");
    app.add_option("--root", args.root, "Definition to analyse (default: main, else the last one)");
    app.add_option("--max-states", args.max_states, "Stop exploring after this many states")
        ->check(CLI::PositiveNumber);
    app.add_option("--labels", labels_name, "Node labels (default: both)")
        ->check(CLI::IsMember({"id", "expr", "both"}))
        ->option_text("id|expr|both");
    app.add_flag("--check", args.check, "Only parse and validate the program");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << "Run with --help for usage.\n";
        return kExitUsage;
    }
    args.format = formats.at(format_name);
    args.labels = labels.at(labels_name);
    return std::nullopt;
}

}  // namespace rosa::cli
