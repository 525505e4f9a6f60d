#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include <sys/wait.h>

#include "../tools/cli.hpp"

namespace rosa::cli {
namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run_on(const std::string& source, CliArgs args = {}) {
    std::istringstream in(source);
    std::ostringstream out, err;
    const int code = run(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::optional<int> parse(std::vector<const char*> argv, CliArgs& args, std::string* err_text = nullptr) {
    argv.insert(argv.begin(), "rosa-lts");
    std::ostringstream out, err;
    auto r = parse_args(static_cast<int>(argv.size()), argv.data(), args, out, err);
    if (err_text) *err_text = err.str();
    return r;
}

TEST(Run, TextForSyntaxTreeExample) {
    const auto r = run_on("<a,0.3>.0||{a,c}<b,inf>.0\n");
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_EQ(r.out,
              "#0 [action] <a,0.3>.0||{a,c}b.0\n"
              "#1 [deadlock] <a,0.3>.0||{a,c}0\n"
              "#0 -b,inf-> #1\n"
              "stats: nodes=2 edges=1 deadlock=1 success=0 truncated=false\n");
    EXPECT_TRUE(r.err.empty());
}

TEST(Run, SyntaxErrorIsTwoWithPosition) {
    CliArgs args;
    args.check = true;
    const auto r = run_on("P = a.", args);
    EXPECT_EQ(r.code, kExitParse);
    EXPECT_NE(r.err.find("1:7"), std::string::npos) << r.err;
    EXPECT_TRUE(r.out.empty());
}

TEST(Run, LexAndValidationErrorsAreTwo) {
    EXPECT_EQ(run_on("a.0 $").code, kExitParse);
    EXPECT_EQ(run_on("<a,0>.0").code, kExitParse);
    EXPECT_EQ(run_on("a.0*{1.5}b.0").code, kExitParse);
    EXPECT_EQ(run_on("P = a.0\nP = b.0\n").code, kExitParse);
}

TEST(Run, UnboundRootIsThree) {
    CliArgs args;
    args.root = "X";
    const auto r = run_on("P = a.0\n", args);
    EXPECT_EQ(r.code, kExitSemantic);
    EXPECT_NE(r.err.find("X"), std::string::npos);
}

TEST(Run, UnguardedRecursionIsThree) {
    EXPECT_EQ(run_on("P = P\n").code, kExitSemantic);
    EXPECT_EQ(run_on("P = a.0 + P\n").code, kExitSemantic);
}

TEST(Run, CheckProducesNoArtifact) {
    CliArgs args;
    args.check = true;
    const auto r = run_on("P = a.P\n", args);
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_TRUE(r.out.empty());
}

TEST(Run, RootOverrideSelectsDefinition) {
    CliArgs args;
    args.root = "Q";
    args.labels = NodeLabels::Expression;
    const auto r = run_on("Q = b.0\nP = a.0\n", args);
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("#0 [action] b.0"), std::string::npos) << r.out;
}

TEST(Run, DotForCaseStudyHasRedAndGreen) {
    CliArgs args;
    args.input = ROSA_TEST_DATA_DIR "/memorizing.rosa";
    args.format = Format::Dot;
    const auto r = run_on("", args);
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("fillcolor=\"red\""), std::string::npos);
    EXPECT_NE(r.out.find("fillcolor=\"green\""), std::string::npos);
}

TEST(Run, JsonEndsWithNewline) {
    CliArgs args;
    args.format = Format::Json;
    const auto r = run_on("0", args);
    EXPECT_EQ(r.out,
              "{\"root\":0,\"truncated\":false,\"nodes\":[{\"id\":0,\"kind\":\"success\",\"expr\":\"0\"}],"
              "\"edges\":[]}\n");
}

TEST(Run, OutFile) {
    const auto path = std::filesystem::temp_directory_path() / "rosa_cli_test_out.txt";
    std::filesystem::remove(path);
    CliArgs args;
    args.out = path.string();
    const auto r = run_on("a.0", args);
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_TRUE(r.out.empty());
    std::ifstream file(path);
    std::stringstream contents;
    contents << file.rdbuf();
    EXPECT_EQ(contents.str(), run_on("a.0").out);
    std::filesystem::remove(path);
}

TEST(Run, MissingInputFileIsOne) {
    CliArgs args;
    args.input = "/nonexistent/dir/input.rosa";
    EXPECT_EQ(run_on("", args).code, kExitUsage);
}

TEST(Run, TruncationWarnsOnStderrOnly) {
    CliArgs args;
    args.max_states = 10;
    const auto r = run_on("P = a.(P||{}b.0)\n", args);
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.err.find("warning"), std::string::npos);
    EXPECT_EQ(r.out.find("warning"), std::string::npos);
    EXPECT_NE(r.out.find("truncated=true"), std::string::npos);
}

TEST(Run, Idempotent) {
    CliArgs args;
    args.input = ROSA_TEST_DATA_DIR "/memorizing.rosa";
    for (Format f : {Format::Text, Format::Dot, Format::Json}) {
        args.format = f;
        EXPECT_EQ(run_on("", args).out, run_on("", args).out);
    }
}

TEST(ParseArgs, Defaults) {
    CliArgs args;
    EXPECT_EQ(parse({"in.rosa"}, args), std::nullopt);
    EXPECT_EQ(args.input, "in.rosa");
    EXPECT_EQ(args.format, Format::Text);
    EXPECT_EQ(args.max_states, 100000u);
    EXPECT_EQ(args.labels, NodeLabels::Both);
    EXPECT_FALSE(args.check);
}

TEST(ParseArgs, AllOptions) {
    CliArgs args;
    EXPECT_EQ(parse({"-", "--format", "json", "--out", "x.json", "--root", "M", "--max-states", "7",
                     "--labels", "id", "--check"},
                    args),
              std::nullopt);
    EXPECT_EQ(args.format, Format::Json);
    EXPECT_EQ(args.out, "x.json");
    EXPECT_EQ(args.root, "M");
    EXPECT_EQ(args.max_states, 7u);
    EXPECT_EQ(args.labels, NodeLabels::Id);
    EXPECT_TRUE(args.check);
}

TEST(ParseArgs, UsageErrorsAreOne) {
    CliArgs args;
    std::string err;
    EXPECT_EQ(parse({"in", "--format", "svg"}, args, &err), kExitUsage);
    EXPECT_FALSE(err.empty());
    CliArgs a2;
    EXPECT_EQ(parse({}, a2), kExitUsage);
    CliArgs a3;
    EXPECT_EQ(parse({"in", "--max-states", "0"}, a3), kExitUsage);
    CliArgs a4;
    EXPECT_EQ(parse({"in", "--bogus"}, a4), kExitUsage);
}

TEST(ParseArgs, HelpIsZero) {
    CliArgs args;
    EXPECT_EQ(parse({"--help"}, args), kExitOk);
}

#ifdef ROSA_LTS_EXE
TEST(Executable, ExitCodeForUnguardedRecursion) {
    const auto path = std::filesystem::temp_directory_path() / "rosa_cli_test_unguarded.rosa";
    {
        std::ofstream f(path);
        f << "P = P\n";
    }
    const std::string cmd = std::string{ROSA_LTS_EXE} + " " + path.string() + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    ASSERT_NE(status, -1);
    EXPECT_EQ(WEXITSTATUS(status), kExitSemantic);
    std::filesystem::remove(path);
}
#endif

}  // namespace
}  // namespace rosa::cli
