#include "modsem/parser.hpp"

#include <cctype>
#include <map>

#include "modsem/errors.hpp"

namespace modsem {

namespace {

enum class Tok { name, variable, number, implies, lparen, rparen, lbrace, rbrace, comma, dot, slash, end };

struct Token {
    Tok kind;
    std::string text;
    SourceLocation at;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_space();
            const SourceLocation at{line_, col_};
            if (pos_ >= src_.size()) {
                out.push_back({Tok::end, "", at});
                return out;
            }
            const char c = src_[pos_];
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::string word = take_word();
                const bool var = std::isupper(static_cast<unsigned char>(word[0])) || word[0] == '_';
                out.push_back({var ? Tok::variable : Tok::name, std::move(word), at});
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                out.push_back({Tok::number, take_word(), at});
            } else if (c == ':' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '-') {
                advance(2);
                out.push_back({Tok::implies, ":-", at});
            } else {
                Tok kind;
                switch (c) {
                case '(': kind = Tok::lparen; break;
                case ')': kind = Tok::rparen; break;
                case '{': kind = Tok::lbrace; break;
                case '}': kind = Tok::rbrace; break;
                case ',': kind = Tok::comma; break;
                case '.': kind = Tok::dot; break;
                case '/': kind = Tok::slash; break;
                default: throw ParseError(at.line, at.column, std::string("unexpected character '") + c + "'");
                }
                advance(1);
                out.push_back({kind, std::string(1, c), at});
            }
        }
    }

private:
    void advance(std::size_t n) {
        for (std::size_t i = 0; i < n; ++i, ++pos_) {
            if (src_[pos_] == '\n') {
                ++line_;
                col_ = 1;
            } else {
                ++col_;
            }
        }
    }

    void skip_space() {
        while (pos_ < src_.size()) {
            const char c = src_[pos_];
            if (c == '%') {
                while (pos_ < src_.size() && src_[pos_] != '\n') advance(1);
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance(1);
            } else {
                return;
            }
        }
    }

    std::string take_word() {
        const std::size_t begin = pos_;
        while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
            advance(1);
        return std::string(src_.substr(begin, pos_ - begin));
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

std::string describe(const Token& t) {
    return t.kind == Tok::end ? "end of input" : "'" + t.text + "'";
}

std::string at_prefix(const SourceLocation& at) {
    return std::to_string(at.line) + ":" + std::to_string(at.column) + ": ";
}

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    SourceProgram program() {
        SourceProgram out;
        while (peek().kind != Tok::end) {
            out.locations.push_back(peek().at);
            out.modules.push_back(module());
        }
        return out;
    }

    std::vector<Literal> literals() {
        std::vector<Literal> out;
        if (peek().kind == Tok::end) return out;
        out.push_back(literal());
        while (accept(Tok::comma)) out.push_back(literal());
        expect(Tok::end, "end of input");
        return out;
    }

    struct RuleAt {
        Rule rule;
        SourceLocation at;
    };
    std::map<std::string, std::vector<RuleAt>> rule_locations;

private:
    const Token& peek() const { return toks_[pos_]; }

    bool accept(Tok kind) {
        if (peek().kind != kind) return false;
        ++pos_;
        return true;
    }

    const Token& expect(Tok kind, const char* what) {
        if (peek().kind != kind)
            throw ParseError(peek().at.line, peek().at.column,
                             std::string("expected ") + what + ", found " + describe(peek()));
        return toks_[pos_++];
    }

    const Token& keyword(const char* word) {
        if (peek().kind != Tok::name || peek().text != word)
            throw ParseError(peek().at.line, peek().at.column,
                             std::string("expected '") + word + "', found " + describe(peek()));
        return toks_[pos_++];
    }

    Module module() {
        keyword("module");
        const std::string name =
            expect(peek().kind == Tok::variable ? Tok::variable : Tok::name, "module name").text;
        keyword("defines");
        PredicateSet defines;
        if (peek().kind != Tok::lbrace) {
            do {
                const std::string pred = expect(Tok::name, "predicate name").text;
                expect(Tok::slash, "'/'");
                const auto& n = expect(Tok::number, "arity");
                defines.insert({pred, static_cast<std::size_t>(std::stoul(n.text))});
            } while (accept(Tok::comma));
        }
        expect(Tok::lbrace, "'{'");
        std::vector<Rule> rules;
        while (!accept(Tok::rbrace)) {
            const SourceLocation at = peek().at;
            rules.push_back(rule());
            if (!defines.count(rules.back().head.symbol()))
                throw SemanticError(at_prefix(at) + "module " + name + ": head predicate " +
                                    to_string(rules.back().head.symbol()) + " of rule '" + to_string(rules.back()) +
                                    "' is not in its defines");
            rule_locations[name].push_back({rules.back(), at});
        }
        return Module(name, std::move(rules), std::move(defines));
    }

    Rule rule() {
        Rule r{atom(), {}};
        if (accept(Tok::implies)) {
            r.body.push_back(literal());
            while (accept(Tok::comma)) r.body.push_back(literal());
        }
        expect(Tok::dot, "'.'");
        return r;
    }

    Literal literal() {
        if (peek().kind == Tok::name && peek().text == "not" && toks_[pos_ + 1].kind == Tok::name) {
            ++pos_;
            return {false, atom()};
        }
        return {true, atom()};
    }

    Atom atom() {
        Atom a{expect(Tok::name, "predicate name").text, {}};
        if (accept(Tok::lparen)) {
            do {
                const Token& t = peek();
                if (t.kind == Tok::variable) a.args.push_back(Term::variable(t.text));
                else if (t.kind == Tok::name || t.kind == Tok::number) a.args.push_back(Term::constant(t.text));
                else throw ParseError(t.at.line, t.at.column, "expected a term, found " + describe(t));
                ++pos_;
            } while (accept(Tok::comma));
            expect(Tok::rparen, "')'");
        }
        return a;
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

void check_arities(const std::string& name, std::size_t arity, const SourceLocation& at,
                   std::map<std::string, std::size_t>& arities) {
    auto [it, inserted] = arities.emplace(name, arity);
    if (!inserted && it->second != arity)
        throw SemanticError(at_prefix(at) + "predicate " + name + " used with arity " + std::to_string(arity) +
                            " and " + std::to_string(it->second));
}

} // namespace

SourceProgram parse_program(std::string_view text) {
    Parser parser(Lexer(text).run());
    SourceProgram program = parser.program();

    std::map<std::string, std::size_t> arities;
    std::map<std::string, std::size_t> names;
    for (std::size_t i = 0; i < program.modules.size(); ++i) {
        const auto& m = program.modules[i];
        const auto& at = program.locations[i];
        if (!names.emplace(m.name(), i).second)
            throw SemanticError(at_prefix(at) + "duplicate module name " + m.name());
        for (const auto& sym : m.defines()) check_arities(sym.name, sym.arity, at, arities);
        for (const auto& [rule, rule_at] : parser.rule_locations[m.name()]) {
            check_arities(rule.head.predicate, rule.head.args.size(), rule_at, arities);
            for (const auto& l : rule.body) check_arities(l.atom.predicate, l.atom.args.size(), rule_at, arities);
            try {
                check_safety(rule);
            } catch (const SemanticError& e) {
                throw SemanticError(at_prefix(rule_at) + e.what());
            }
        }
    }
    return program;
}

std::vector<Literal> parse_literals(std::string_view text) {
    return Parser(Lexer(text).run()).literals();
}

std::string print_program(const SourceProgram& program) {
    std::string out;
    for (std::size_t i = 0; i < program.modules.size(); ++i) {
        if (i) out += "\n";
        out += to_string(program.modules[i]);
    }
    return out;
}

} // namespace modsem
