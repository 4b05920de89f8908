#include "scopefoil/syntax.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace scopefoil {

namespace {

enum class Tok {
    Ident,
    Lam,
    Fun,
    Check,
    Compute,
    First,
    Second,
    Universe,
    LParen,
    RParen,
    Comma,
    Dot,
    Colon,
    Semicolon,
    Arrow,
    Underscore,
    End,
};

struct Token {
    Tok kind;
    std::string text;
    SourcePos pos;
};

std::string describe(const Token& token) {
    return token.kind == Tok::End ? "end of input" : "'" + token.text + "'";
}

Tok keyword_kind(std::string_view word) {
    if (word == "lam") return Tok::Lam;
    if (word == "fun") return Tok::Fun;
    if (word == "check") return Tok::Check;
    if (word == "compute") return Tok::Compute;
    if (word == "first") return Tok::First;
    if (word == "second") return Tok::Second;
    if (word == "U") return Tok::Universe;
    return Tok::Ident;
}

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    std::vector<Token> run() {
        std::vector<Token> tokens;
        while (true) {
            skip_space_and_comments();
            const SourcePos start = pos_;
            if (at_end()) {
                tokens.push_back({Tok::End, "", start});
                return tokens;
            }
            const char c = peek();
            if (std::isalpha(static_cast<unsigned char>(c)) != 0) {
                std::string word;
                while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) != 0 || peek() == '_' ||
                                     peek() == '\'')) {
                    word.push_back(advance());
                }
                tokens.push_back({keyword_kind(word), word, start});
                continue;
            }
            if (c == '-' && peek(1) == '>') {
                advance();
                advance();
                tokens.push_back({Tok::Arrow, "->", start});
                continue;
            }
            const std::optional<Tok> symbol = symbol_kind(c);
            if (!symbol) {
                throw SyntaxError(start, "a token", std::string("'") + c + "'");
            }
            advance();
            tokens.push_back({*symbol, std::string(1, c), start});
        }
    }

private:
    static std::optional<Tok> symbol_kind(char c) {
        switch (c) {
            case '(': return Tok::LParen;
            case ')': return Tok::RParen;
            case ',': return Tok::Comma;
            case '.': return Tok::Dot;
            case ':': return Tok::Colon;
            case ';': return Tok::Semicolon;
            case '_': return Tok::Underscore;
            default: return std::nullopt;
        }
    }

    [[nodiscard]] bool at_end() const { return offset_ >= text_.size(); }
    [[nodiscard]] char peek(std::size_t ahead = 0) const {
        return offset_ + ahead < text_.size() ? text_[offset_ + ahead] : '\0';
    }

    char advance() {
        const char c = text_[offset_++];
        if (c == '\n') {
            ++pos_.line;
            pos_.column = 1;
        } else {
            ++pos_.column;
        }
        return c;
    }

    void skip_space_and_comments() {
        while (!at_end()) {
            if (std::isspace(static_cast<unsigned char>(peek())) != 0) {
                advance();
            } else if (peek() == '-' && peek(1) == '-') {
                while (!at_end() && peek() != '\n') {
                    advance();
                }
            } else if (peek() == '{' && peek(1) == '-') {
                const SourcePos start = pos_;
                advance();
                advance();
                while (!(peek() == '-' && peek(1) == '}')) {
                    if (at_end()) {
                        throw SyntaxError(start, "'-}' closing the comment", "end of input");
                    }
                    advance();
                }
                advance();
                advance();
            } else {
                return;
            }
        }
    }

    std::string_view text_;
    std::size_t offset_ = 0;
    SourcePos pos_;
};

class Parser {
public:
    explicit Parser(std::string_view text) : tokens_(Lexer(text).run()) {}

    Program program() {
        Program out;
        while (peek().kind != Tok::End) {
            out.commands.push_back(command());
            expect(Tok::Semicolon, "';'");
        }
        return out;
    }

    NaiveTerm whole_term() {
        NaiveTerm result = term();
        expect(Tok::End, "end of input");
        return result;
    }

    NaivePattern whole_pattern() {
        NaivePattern result = pattern();
        expect(Tok::End, "end of input");
        return result;
    }

private:
    const Token& peek() const { return tokens_[index_]; }

    Token next() {
        Token token = tokens_[index_];
        if (token.kind != Tok::End) {
            ++index_;
        }
        return token;
    }

    Token expect(Tok kind, const char* what) {
        if (peek().kind != kind) {
            throw SyntaxError(peek().pos, what, describe(peek()));
        }
        return next();
    }

    Command command() {
        const Token head = next();
        Command::Kind kind;
        if (head.kind == Tok::Check) {
            kind = Command::Kind::Check;
        } else if (head.kind == Tok::Compute) {
            kind = Command::Kind::Compute;
        } else {
            throw SyntaxError(head.pos, "'check' or 'compute'", describe(head));
        }
        NaiveTerm subject = term();
        expect(Tok::Colon, "':'");
        NaiveTerm type = term();
        return Command{kind, std::move(subject), std::move(type), head.pos};
    }

    NaiveTerm term() {
        if (peek().kind == Tok::Lam) {
            next();
            NaivePattern bound = pattern();
            expect(Tok::Dot, "'.'");
            return NaiveTerm::lam(std::move(bound), term());
        }
        if (peek().kind == Tok::Fun) {
            next();
            expect(Tok::LParen, "'('");
            NaivePattern bound = pattern();
            expect(Tok::Colon, "':'");
            NaiveTerm domain = term();
            expect(Tok::RParen, "')'");
            expect(Tok::Arrow, "'->'");
            return NaiveTerm::pi(std::move(bound), std::move(domain), term());
        }
        return application();
    }

    [[nodiscard]] bool starts_atom() const {
        const Tok kind = peek().kind;
        return kind == Tok::Ident || kind == Tok::Universe || kind == Tok::LParen;
    }

    NaiveTerm application() {
        NaiveTerm head = [&] {
            if (peek().kind == Tok::First) {
                next();
                return NaiveTerm::first(atom());
            }
            if (peek().kind == Tok::Second) {
                next();
                return NaiveTerm::second(atom());
            }
            return atom();
        }();
        while (starts_atom()) {
            head = NaiveTerm::app(std::move(head), atom());
        }
        return head;
    }

    NaiveTerm atom() {
        const Token token = next();
        switch (token.kind) {
            case Tok::Ident: return NaiveTerm::var(VarIdent{token.text});
            case Tok::Universe: return NaiveTerm::universe();
            case Tok::LParen: {
                NaiveTerm inner = term();
                if (peek().kind == Tok::Comma) {
                    next();
                    NaiveTerm right = term();
                    expect(Tok::RParen, "')'");
                    return NaiveTerm::pair(std::move(inner), std::move(right));
                }
                expect(Tok::RParen, "')' or ','");
                return inner;
            }
            default: throw SyntaxError(token.pos, "a term", describe(token));
        }
    }

    NaivePattern pattern() {
        const Token token = next();
        switch (token.kind) {
            case Tok::Underscore: return NaivePattern::wildcard();
            case Tok::Ident: return NaivePattern::var(VarIdent{token.text});
            case Tok::LParen: {
                NaivePattern left = pattern();
                expect(Tok::Comma, "','");
                NaivePattern right = pattern();
                expect(Tok::RParen, "')'");
                return NaivePattern::pair(std::move(left), std::move(right));
            }
            default: throw SyntaxError(token.pos, "a pattern", describe(token));
        }
    }

    std::vector<Token> tokens_;
    std::size_t index_ = 0;
};

template <typename... Fs>
struct Overloaded : Fs... {
    using Fs::operator()...;
};
template <typename... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

// Levels match the grammar: 0 = Term, 1 = Term1, 2 = Term2.
void print(std::string& out, const NaiveTerm& term, int level) {
    auto parens = [&](int own, auto&& body) {
        if (level > own) {
            out += '(';
            body();
            out += ')';
        } else {
            body();
        }
    };
    std::visit(Overloaded{
                   [&](const NaiveTerm::Var& v) { out += v.ident.text; },
                   [&](const NaiveTerm::Universe&) { out += 'U'; },
                   [&](const NaiveTerm::Pair& p) {
                       out += '(';
                       print(out, p.left, 0);
                       out += ", ";
                       print(out, p.right, 0);
                       out += ')';
                   },
                   [&](const NaiveTerm::First& f) {
                       parens(1, [&] {
                           out += "first ";
                           print(out, f.term, 2);
                       });
                   },
                   [&](const NaiveTerm::Second& s) {
                       parens(1, [&] {
                           out += "second ";
                           print(out, s.term, 2);
                       });
                   },
                   [&](const NaiveTerm::App& a) {
                       parens(1, [&] {
                           print(out, a.fun, 1);
                           out += ' ';
                           print(out, a.arg, 2);
                       });
                   },
                   [&](const NaiveTerm::Lam& l) {
                       parens(0, [&] {
                           out += "lam ";
                           out += pretty_pattern(l.pattern);
                           out += " . ";
                           print(out, l.body.term, 0);
                       });
                   },
                   [&](const NaiveTerm::Pi& p) {
                       parens(0, [&] {
                           out += "fun (";
                           out += pretty_pattern(p.pattern);
                           out += " : ";
                           print(out, p.domain, 0);
                           out += ") -> ";
                           print(out, p.codomain.term, 0);
                       });
                   },
               },
               term.node());
}

}  // namespace

SyntaxError::SyntaxError(SourcePos pos, std::string expected, std::string found)
    : Error(std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": syntax error: expected " +
            expected + ", found " + found),
      pos_(pos),
      expected_(std::move(expected)) {}

Program parse_program(std::string_view text) { return Parser(text).program(); }

NaiveTerm parse_term(std::string_view text) { return Parser(text).whole_term(); }

NaivePattern parse_pattern(std::string_view text) { return Parser(text).whole_pattern(); }

std::string pretty_pattern(const NaivePattern& pattern) {
    return std::visit(Overloaded{
                          [](const NaivePattern::Wildcard&) { return std::string("_"); },
                          [](const NaivePattern::Var& v) { return v.ident.text; },
                          [](const NaivePattern::Pair& p) {
                              return "(" + pretty_pattern(p.left) + ", " + pretty_pattern(p.right) + ")";
                          },
                      },
                      pattern.node());
}

std::string pretty_term(const NaiveTerm& term) {
    std::string out;
    print(out, term, 0);
    return out;
}

std::string pretty_program(const Program& program) {
    std::string out;
    for (const Command& command : program.commands) {
        out += command.kind == Command::Kind::Check ? "check " : "compute ";
        out += pretty_term(command.term);
        out += " : ";
        out += pretty_term(command.type);
        out += " ;\n";
    }
    return out;
}

}  // namespace scopefoil
