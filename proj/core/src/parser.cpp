#include "rosa/parser.hpp"

#include <charconv>
#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <type_traits>
#include <utility>

namespace rosa {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_ident_start(char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
}
bool is_ident_char(char c) { return is_ident_start(c) || is_digit(c); }

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (i_ < src_.size()) {
            char c = src_[i_];
            if (c == '\n') {
                advance(1);
                continue;
            }
            if (c == ' ' || c == '\t' || c == '\r') {
                advance(1);
                continue;
            }
            if (c == '#') {
                while (i_ < src_.size() && src_[i_] != '\n') advance(1);
                continue;
            }
            Position start = pos_;
            if (is_ident_start(c)) {
                std::size_t j = i_;
                while (j < src_.size() && is_ident_char(src_[j])) ++j;
                std::string word(src_.substr(i_, j - i_));
                TokenKind kind = word == "inf" ? TokenKind::Inf : TokenKind::Ident;
                advance(j - i_);
                out.push_back({kind, std::move(word), start});
                continue;
            }
            if (is_digit(c)) {
                std::string num = lex_number();
                TokenKind kind = num == "0" ? TokenKind::Zero : TokenKind::Number;
                out.push_back({kind, std::move(num), start});
                continue;
            }
            if (c == '|' && i_ + 1 < src_.size() && src_[i_ + 1] == '|') {
                advance(2);
                out.push_back({TokenKind::ParBar, "||", start});
                continue;
            }
            std::optional<TokenKind> kind;
            switch (c) {
                case '.': kind = TokenKind::Dot; break;
                case ';': kind = TokenKind::Semi; break;
                case '-': kind = TokenKind::Minus; break;
                case '+': kind = TokenKind::Plus; break;
                case '*': kind = TokenKind::Star; break;
                case '<': kind = TokenKind::LAngle; break;
                case '>': kind = TokenKind::RAngle; break;
                case ',': kind = TokenKind::Comma; break;
                case '{': kind = TokenKind::LBrace; break;
                case '}': kind = TokenKind::RBrace; break;
                case '(': kind = TokenKind::LParen; break;
                case ')': kind = TokenKind::RParen; break;
                case '=': kind = TokenKind::Equals; break;
                default: break;
            }
            if (!kind) throw LexError(start, "'" + std::string(1, c) + "'");
            advance(1);
            out.push_back({*kind, std::string(1, c), start});
        }
        return out;
    }

private:
    // digits [ "." digits ] [ ("e"|"E") ["+"|"-"] digits ]
    std::string lex_number() {
        std::size_t j = i_;
        while (j < src_.size() && is_digit(src_[j])) ++j;
        if (j + 1 < src_.size() && src_[j] == '.' && is_digit(src_[j + 1])) {
            ++j;
            while (j < src_.size() && is_digit(src_[j])) ++j;
        }
        if (j < src_.size() && (src_[j] == 'e' || src_[j] == 'E')) {
            std::size_t k = j + 1;
            if (k < src_.size() && (src_[k] == '+' || src_[k] == '-')) ++k;
            if (k < src_.size() && is_digit(src_[k])) {
                while (k < src_.size() && is_digit(src_[k])) ++k;
                j = k;
            }
        }
        std::string num(src_.substr(i_, j - i_));
        advance(j - i_);
        return num;
    }

    void advance(std::size_t n) {
        for (std::size_t k = 0; k < n; ++k) {
            if (src_[i_] == '\n') {
                ++pos_.line;
                pos_.column = 1;
            } else {
                ++pos_.column;
            }
            ++i_;
        }
    }

    std::string_view src_;
    std::size_t i_ = 0;
    Position pos_{1, 1};
};

Position end_of(const Token& t) { return {t.position.line, t.position.column + t.lexeme.size()}; }

struct VarRef {
    std::string name;
    Position position;
};

class Parser {
public:
    Parser(std::span<const Token> tokens, Position eof) : toks_(tokens), eof_(eof) {}

    Process parse_all() {
        Process p = parse_seq();
        if (!at_end()) fail("an operator or end of input");
        return p;
    }

    const std::vector<VarRef>& var_refs() const { return refs_; }

private:
    bool at_end() const { return i_ >= toks_.size(); }
    bool peek(TokenKind k) const { return !at_end() && toks_[i_].kind == k; }

    [[noreturn]] void fail(const std::string& expected) const {
        if (at_end()) throw ParseError(eof_, expected, "end of input");
        const Token& t = toks_[i_];
        throw ParseError(t.position, expected, "'" + t.lexeme + "'");
    }

    const Token& expect(TokenKind k, const std::string& what) {
        if (!peek(k)) fail(what);
        return toks_[i_++];
    }

    Process parse_seq() {
        Process left = parse_par();
        if (peek(TokenKind::Semi)) {
            ++i_;
            return seq(std::move(left), parse_seq());
        }
        return left;
    }

    Process parse_par() {
        Process left = parse_choice();
        while (peek(TokenKind::ParBar)) {
            ++i_;
            expect(TokenKind::LBrace, "'{' after '||'");
            SyncSet sync;
            if (peek(TokenKind::Ident)) {
                sync.insert(ActionName{toks_[i_++].lexeme});
                while (peek(TokenKind::Comma)) {
                    ++i_;
                    sync.insert(ActionName{expect(TokenKind::Ident, "an action name").lexeme});
                }
            }
            expect(TokenKind::RBrace, "',' or '}' in synchronisation set");
            Process right = parse_choice();
            left = par(std::move(sync), std::move(left), std::move(right));
        }
        return left;
    }

    Process parse_choice() {
        Process left = parse_prefix();
        for (;;) {
            if (peek(TokenKind::Minus)) {
                ++i_;
                left = int_choice(std::move(left), parse_prefix());
            } else if (peek(TokenKind::Plus)) {
                ++i_;
                left = ext_choice(std::move(left), parse_prefix());
            } else if (peek(TokenKind::Star)) {
                ++i_;
                expect(TokenKind::LBrace, "'{' after '*'");
                if (!peek(TokenKind::Number) && !peek(TokenKind::Zero)) fail("a probability");
                const Token& num = toks_[i_++];
                double r = number_value(num);
                if (!(r >= 0.0 && r <= 1.0)) {
                    throw ValidationError("probability must lie in [0,1], got " + num.lexeme,
                                          num.position);
                }
                expect(TokenKind::RBrace, "'}' after probability");
                left = prob_choice(Probability{r}, std::move(left), parse_prefix());
            } else {
                return left;
            }
        }
    }

    // prefix := atom [ "." prefix ]; only action atoms may take a continuation.
    Process parse_prefix() {
        if (at_end()) fail("a process");
        const Token& t = toks_[i_];
        switch (t.kind) {
            case TokenKind::Zero:
                ++i_;
                if (peek(TokenKind::Dot)) fail("an operator after '0'");
                return nil();
            case TokenKind::Ident: {
                ++i_;
                if (peek(TokenKind::Dot)) {
                    ++i_;
                    return prefix(ActionName{t.lexeme}, Rate::infinite(), parse_prefix());
                }
                refs_.push_back({t.lexeme, t.position});
                return var(t.lexeme);
            }
            case TokenKind::LAngle: {
                ++i_;
                ActionName action{expect(TokenKind::Ident, "an action name").lexeme};
                expect(TokenKind::Comma, "','");
                Rate rate = Rate::infinite();
                if (peek(TokenKind::Inf)) {
                    ++i_;
                } else if (peek(TokenKind::Number) || peek(TokenKind::Zero)) {
                    const Token& num = toks_[i_++];
                    double v = number_value(num);
                    if (!(v > 0.0) || !std::isfinite(v)) {
                        throw ValidationError("rate must be a positive real number, got " +
                                                  num.lexeme,
                                              num.position);
                    }
                    rate = Rate::finite(v);
                } else {
                    fail("a rate or 'inf'");
                }
                expect(TokenKind::RAngle, "'>'");
                if (peek(TokenKind::Dot)) {
                    ++i_;
                    return prefix(std::move(action), rate, parse_prefix());
                }
                return prefix(std::move(action), rate, nil());
            }
            case TokenKind::LParen: {
                ++i_;
                Process inner = parse_seq();
                expect(TokenKind::RParen, "')'");
                if (peek(TokenKind::Dot)) fail("an operator after ')'");
                return inner;
            }
            default:
                fail("a process");
        }
    }

    static double number_value(const Token& t) {
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(t.lexeme.data(), t.lexeme.data() + t.lexeme.size(), v);
        if (ec != std::errc{} || ptr != t.lexeme.data() + t.lexeme.size()) {
            throw ValidationError("number out of range: " + t.lexeme, t.position);
        }
        return v;
    }

    std::span<const Token> toks_;
    Position eof_;
    std::size_t i_ = 0;
    std::vector<VarRef> refs_;
};

bool is_action_constant_name(const std::string& name) {
    return !name.empty() && name.front() >= 'a' && name.front() <= 'z';
}

// Replaces unbound lowercase variables by `name.0`.
Process resolve_constants(const Process& p, const DefinitionEnv& env) {
    return std::visit(
        [&](const auto& t) -> Process {
            using T = std::decay_t<decltype(t)>;
            if constexpr (std::is_same_v<T, Nil>) {
                return p;
            } else if constexpr (std::is_same_v<T, Var>) {
                if (env.contains(t.name)) return p;
                return prefix(ActionName{t.name}, Rate::infinite(), nil());
            } else if constexpr (std::is_same_v<T, Prefix>) {
                return prefix(t.action, t.rate, resolve_constants(t.next, env));
            } else if constexpr (std::is_same_v<T, Seq>) {
                return seq(resolve_constants(t.left, env), resolve_constants(t.right, env));
            } else if constexpr (std::is_same_v<T, IntChoice>) {
                return int_choice(resolve_constants(t.left, env), resolve_constants(t.right, env));
            } else if constexpr (std::is_same_v<T, ExtChoice>) {
                return ext_choice(resolve_constants(t.left, env), resolve_constants(t.right, env));
            } else if constexpr (std::is_same_v<T, ProbChoice>) {
                return prob_choice(t.prob, resolve_constants(t.left, env),
                                   resolve_constants(t.right, env));
            } else {
                return par(t.sync, resolve_constants(t.left, env), resolve_constants(t.right, env));
            }
        },
        p.node().term);
}

}  // namespace

std::string_view to_string(TokenKind kind) {
    switch (kind) {
        case TokenKind::Ident: return "IDENT";
        case TokenKind::Number: return "NUMBER";
        case TokenKind::Inf: return "INF";
        case TokenKind::Zero: return "ZERO";
        case TokenKind::Dot: return "DOT";
        case TokenKind::Semi: return "SEMI";
        case TokenKind::Minus: return "MINUS";
        case TokenKind::Plus: return "PLUS";
        case TokenKind::Star: return "STAR";
        case TokenKind::LAngle: return "LANGLE";
        case TokenKind::RAngle: return "RANGLE";
        case TokenKind::Comma: return "COMMA";
        case TokenKind::LBrace: return "LBRACE";
        case TokenKind::RBrace: return "RBRACE";
        case TokenKind::LParen: return "LPAREN";
        case TokenKind::RParen: return "RPAREN";
        case TokenKind::ParBar: return "PARBAR";
        case TokenKind::Equals: return "EQUALS";
    }
    return "?";
}

std::vector<Token> tokenize(std::string_view source) { return Lexer{source}.run(); }

Process parse_process(std::span<const Token> tokens) {
    Position eof = tokens.empty() ? Position{1, 1} : end_of(tokens.back());
    return Parser{tokens, eof}.parse_all();
}

Process parse_process(std::string_view source) {
    auto tokens = tokenize(source);
    return parse_process(tokens);
}

DefinitionEnv parse_program(std::string_view source) {
    const std::vector<Token> tokens = tokenize(source);

    struct Definition {
        std::string name;
        Position where;
        Process body;
    };
    std::vector<Definition> defs;
    std::vector<VarRef> refs;

    std::size_t i = 0;
    while (i < tokens.size()) {
        std::size_t j = i;
        while (j < tokens.size() && tokens[j].position.line == tokens[i].position.line) ++j;
        std::span<const Token> line(tokens.data() + i, j - i);

        std::string name{kMainName};
        Position where = line.front().position;
        if (line.size() >= 2 && line[0].kind == TokenKind::Ident &&
            line[1].kind == TokenKind::Equals) {
            name = line[0].lexeme;
            line = line.subspan(2);
            if (line.empty()) throw ParseError(end_of(tokens[i + 1]), "a process", "end of input");
        }
        Parser parser{line, end_of(line.back())};
        Process body = parser.parse_all();
        refs.insert(refs.end(), parser.var_refs().begin(), parser.var_refs().end());
        defs.push_back({std::move(name), where, std::move(body)});
        i = j;
    }

    if (defs.empty()) throw ParseError(Position{1, 1}, "a process definition", "end of input");

    DefinitionEnv names;
    for (const auto& d : defs) names.bind(d.name, nil(), d.where);
    for (const auto& r : refs) {
        if (!names.contains(r.name) && !is_action_constant_name(r.name)) {
            throw UnboundVariable(r.name, r.position);
        }
    }

    DefinitionEnv env;
    for (const auto& d : defs) env.bind(d.name, resolve_constants(d.body, names), d.where);
    if (env.contains(std::string{kMainName})) {
        env.set_root(std::string{kMainName});
    } else if (!defs.empty()) {
        env.set_root(defs.back().name);
    }
    return env;
}

}  // namespace rosa
