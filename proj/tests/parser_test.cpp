#include <gtest/gtest.h>

#include <fstream>
#include <iterator>

#include "rosa/parser.hpp"
#include "support/generators.hpp"

namespace rosa {
namespace {

std::vector<TokenKind> kinds(const std::vector<Token>& toks) {
    std::vector<TokenKind> out;
    for (const auto& t : toks) out.push_back(t.kind);
    return out;
}

using K = TokenKind;

TEST(Tokenize, ActionWithRate) {
    auto toks = tokenize("<a,0.3>.0");
    EXPECT_EQ(kinds(toks), (std::vector<K>{K::LAngle, K::Ident, K::Comma, K::Number, K::RAngle,
                                           K::Dot, K::Zero}));
    EXPECT_EQ(toks[1].lexeme, "a");
    EXPECT_EQ(toks[3].lexeme, "0.3");
    EXPECT_EQ(toks[6].position, (Position{1, 9}));
}

TEST(Tokenize, ProbabilisticChoice) {
    auto toks = tokenize("P*{0.25}Q");
    EXPECT_EQ(kinds(toks),
              (std::vector<K>{K::Ident, K::Star, K::LBrace, K::Number, K::RBrace, K::Ident}));
    EXPECT_EQ(toks[3].lexeme, "0.25");
}

TEST(Tokenize, Empty) { EXPECT_TRUE(tokenize("").empty()); }

TEST(Tokenize, ParBarInfCommentsAndPositions) {
    auto toks = tokenize("# header\n  A ||{x} <b,inf> # trailing\n- Q");
    EXPECT_EQ(kinds(toks), (std::vector<K>{K::Ident, K::ParBar, K::LBrace, K::Ident, K::RBrace,
                                           K::LAngle, K::Ident, K::Comma, K::Inf, K::RAngle,
                                           K::Minus, K::Ident}));
    EXPECT_EQ(toks[0].position, (Position{2, 3}));
    EXPECT_EQ(toks[10].position, (Position{3, 1}));
}

TEST(Tokenize, ZeroOnlyWhenStandalone) {
    EXPECT_EQ(kinds(tokenize("0")), (std::vector<K>{K::Zero}));
    EXPECT_EQ(kinds(tokenize("0.5")), (std::vector<K>{K::Number}));
    EXPECT_EQ(kinds(tokenize("10")), (std::vector<K>{K::Number}));
    EXPECT_EQ(kinds(tokenize("a.0.b")), (std::vector<K>{K::Ident, K::Dot, K::Zero, K::Dot, K::Ident}));
    EXPECT_EQ(kinds(tokenize("1e-05")), (std::vector<K>{K::Number}));
}

TEST(Tokenize, LexError) {
    try {
        tokenize("a.0 |\n b");
        FAIL() << "expected LexError";
    } catch (const LexError& e) {
        EXPECT_EQ(e.position(), (Position{1, 5}));
    }
    EXPECT_THROW(tokenize("a & b"), LexError);
}

TEST(ParseProcess, SyntaxTreeExampleHasParAtRoot) {
    Process p = parse_process("<a,0.3>.0||{a,c}<b,inf>.0");
    EXPECT_EQ(p, par({"a", "c"}, prefix("a", 0.3, nil()), prefix("b", nil())));
}

TEST(ParseProcess, PrefixNestsRight) {
    EXPECT_EQ(parse_process("a.b.0"), prefix("a", prefix("b", nil())));
}

TEST(ParseProcess, CaseStudyRoot) {
    Process p = parse_process("E;(C*{0.25}L)||{i}R");
    EXPECT_EQ(p, seq(var("E"), par({"i"}, prob_choice(0.25, var("C"), var("L")), var("R"))));
}

TEST(ParseProcess, ChoicesShareOneLevelLeftAssociative) {
    Process p = parse_process("a.P-b.Q+c.R");
    EXPECT_EQ(p, ext_choice(int_choice(prefix("a", var("P")), prefix("b", var("Q"))),
                            prefix("c", var("R"))));
}

TEST(ParseProcess, SeqRightAssociativeParLeftAssociative) {
    EXPECT_EQ(parse_process("A;B;C"), seq(var("A"), seq(var("B"), var("C"))));
    EXPECT_EQ(parse_process("A||{}B||{x}C"), par({"x"}, par({}, var("A"), var("B")), var("C")));
}

TEST(ParseProcess, BareRatedActionEndsInNil) {
    EXPECT_EQ(parse_process("<k,0.8>"), prefix("k", 0.8, nil()));
    EXPECT_EQ(parse_process("<a,inf>.0"), parse_process("a.0"));
}

TEST(ParseProcess, ParenthesesOverridePriorities) {
    EXPECT_EQ(parse_process("(A;B)||{}C"), par({}, seq(var("A"), var("B")), var("C")));
    EXPECT_EQ(parse_process("a.(B+C)"), prefix("a", ext_choice(var("B"), var("C"))));
}

TEST(ParseProcess, ValidationErrors) {
    EXPECT_THROW(parse_process("A*{1.5}B"), ValidationError);
    EXPECT_THROW(parse_process("<a,0>.0"), ValidationError);
    EXPECT_NO_THROW(parse_process("A*{0}B"));
    EXPECT_NO_THROW(parse_process("A*{1}B"));
    try {
        parse_process("A*{1.5}B");
    } catch (const ValidationError& e) {
        ASSERT_TRUE(e.position().has_value());
        EXPECT_EQ(*e.position(), (Position{1, 4}));
    }
}

TEST(ParseProcess, SyntaxErrors) {
    for (const char* bad : {"", "a.", "(A", "A)", "A+", "||{a}B", "A||{a B", "A||B", "<a,0.3",
                            "<a 0.3>", "0.a", "(A).b", "A*{inf}B", "inf", "A B", "<a,-1>"}) {
        EXPECT_THROW(parse_process(bad), Error) << bad;
    }
}

TEST(ParseProcess, ErrorAtEndOfInputPointsPastLastToken) {
    try {
        parse_process("P = a.");
        FAIL();
    } catch (const ParseError& e) {
        // `=` is unexpected in a bare process
        EXPECT_EQ(e.position(), (Position{1, 3}));
    }
    try {
        parse_process("a.");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), (Position{1, 3}));
        EXPECT_EQ(e.found(), "end of input");
    }
}

TEST(ParseProcess, RoundTripOnRandomTerms) {
    testing::ProcessGenerator::Options opts;
    opts.allow_vars = true;
    opts.arbitrary_numbers = true;
    opts.max_depth = 5;
    testing::ProcessGenerator gen(1234, opts);
    for (int i = 0; i < 1000; ++i) {
        Process p = gen.next();
        const std::string text = pretty_print(p);
        ASSERT_EQ(parse_process(text), p) << text;
    }
}

// For a looser operator o1 and a tighter o2, `x o1 y o2 z` puts o1 at the root,
// and so does `x o2 y o1 z`.
TEST(ParseProcess, PriorityConformance) {
    const std::vector<std::pair<int, std::string>> ops{
        {1, ";"}, {2, "||{a}"}, {3, "+"}, {3, "-"}, {3, "*{0.5}"}};
    auto root_level = [](const Process& p) {
        if (p.is<Seq>()) return 1;
        if (p.is<Par>()) return 2;
        if (p.is<ExtChoice>() || p.is<IntChoice>() || p.is<ProbChoice>()) return 3;
        return 4;
    };
    for (const auto& [l1, o1] : ops) {
        for (const auto& [l2, o2] : ops) {
            if (l1 >= l2) continue;
            EXPECT_EQ(root_level(parse_process("X" + o1 + "Y" + o2 + "Z")), l1) << o1 << o2;
            EXPECT_EQ(root_level(parse_process("X" + o2 + "Y" + o1 + "Z")), l1) << o2 << o1;
        }
        // prefix binds tighter than every binary operator
        EXPECT_EQ(root_level(parse_process("a.X" + o1 + "Y")), l1);
    }
}

TEST(ParseProcess, ErrorPositionsStayInsideTheSource) {
    testing::ProcessGenerator::Options opts;
    opts.allow_vars = true;
    testing::ProcessGenerator gen(99, opts);
    int errors = 0;
    for (int i = 0; i < 500; ++i) {
        std::string text = pretty_print(gen.next());
        // cut the text short or drop a character to make it (probably) malformed
        const std::size_t at = gen.pick(text.size());
        text = gen.coin(0.5) ? text.substr(0, at) : text.erase(at, 1);
        try {
            parse_process(text);
        } catch (const ParseError& e) {
            ++errors;
            EXPECT_EQ(e.position().line, 1u);
            EXPECT_GE(e.position().column, 1u);
            EXPECT_LE(e.position().column, text.size() + 1) << text;
        } catch (const ValidationError&) {
        }
    }
    EXPECT_GT(errors, 100);
}

TEST(ParseProgram, CaseStudyDefinitions) {
    std::ifstream in(ROSA_TEST_DATA_DIR "/memorizing.rosa");
    const std::string src{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    DefinitionEnv env = parse_program(src);
    EXPECT_EQ(env.root(), "M");
    EXPECT_EQ(env.bindings().size(), 5u);
    EXPECT_EQ(pretty_print(env.lookup("M")), "E;C*{0.25}L||{i}R");
    // the trailing bare `f` is an action constant
    EXPECT_EQ(pretty_print(env.lookup("E")),
              "<a,0.1>.b.(<c,0.2>.f.0||{f,i}<d,0.3>.f.0||{f,i}<e,0.4>.f.0)");
    EXPECT_EQ(env.lookup("C"), prefix("g", 0.5, prefix("h", prefix("i", 0.6, nil()))));
}

TEST(ParseProgram, SingleBareProcessIsMain) {
    DefinitionEnv env = parse_program("0");
    EXPECT_EQ(env.root(), "main");
    EXPECT_EQ(env.lookup("main"), nil());
}

TEST(ParseProgram, RootIsMainWhenPresent) {
    DefinitionEnv env = parse_program("main = P\nP = a.P\n");
    EXPECT_EQ(env.root(), "main");
}

TEST(ParseProgram, DuplicateDefinition) {
    EXPECT_THROW(parse_program("P = a.0\nP = b.0\n"), DuplicateDefinition);
    EXPECT_THROW(parse_program("a.0\nb.0\n"), DuplicateDefinition);
}

TEST(ParseProgram, UnboundVariables) {
    EXPECT_THROW(parse_program("M = X + a.0"), UnboundVariable);
    try {
        parse_program("P = a.0\nM = P || {} Q\n");
        FAIL();
    } catch (const UnboundVariable& e) {
        EXPECT_EQ(e.name(), "Q");
        ASSERT_TRUE(e.position().has_value());
        EXPECT_EQ(*e.position(), (Position{2, 13}));
    }
}

TEST(ParseProgram, ForwardAndRecursiveReferences) {
    DefinitionEnv env = parse_program("M = P ||{a} Q\nP = a.P\nQ = a.Q\n");
    EXPECT_EQ(env.root(), "Q");
    EXPECT_EQ(env.lookup("P"), prefix("a", var("P")));
}

TEST(ParseProgram, MalformedLine) {
    EXPECT_THROW(parse_program("P = a."), ParseError);
    EXPECT_THROW(parse_program("P ="), ParseError);
    EXPECT_THROW(parse_program("# only a comment\n"), ParseError);
}

}  // namespace
}  // namespace rosa
