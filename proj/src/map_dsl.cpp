#include "hs/map_dsl.hpp"

#include <cctype>

namespace hs {

namespace {

enum class Tok { Map, Inverse, Ident, Int, Imag, Plus, Minus, Star, Caret, Slash, LParen, RParen, Comma, Equal, End };

struct Token {
    Tok kind;
    std::string text;
    int line = 1;
    int col = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    Token next() {
        skip_ws_and_comments();
        Token t;
        t.line = line_;
        t.col = col_;
        if (pos_ >= src_.size()) {
            t.kind = Tok::End;
            return t;
        }
        char c = src_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                advance();
            t.text = std::string(src_.substr(start, pos_ - start));
            if (t.text == "map") t.kind = Tok::Map;
            else if (t.text == "inverse") t.kind = Tok::Inverse;
            else if (t.text == "i") t.kind = Tok::Imag;
            else t.kind = Tok::Ident;
            return t;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) advance();
            t.kind = Tok::Int;
            t.text = std::string(src_.substr(start, pos_ - start));
            return t;
        }
        advance();
        switch (c) {
            case '+': t.kind = Tok::Plus; break;
            case '-': t.kind = Tok::Minus; break;
            case '*': t.kind = Tok::Star; break;
            case '^': t.kind = Tok::Caret; break;
            case '/': t.kind = Tok::Slash; break;
            case '(': t.kind = Tok::LParen; break;
            case ')': t.kind = Tok::RParen; break;
            case ',': t.kind = Tok::Comma; break;
            case '=': t.kind = Tok::Equal; break;
            default:
                throw ParseError(t.line, t.col, std::string("unexpected character '") + c + "'");
        }
        t.text = std::string(1, c);
        return t;
    }

private:
    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;

    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_ws_and_comments() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '#') {
                while (pos_ < src_.size() && src_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }
};

class Parser {
public:
    explicit Parser(std::string_view src) : lex_(src) { bump(); }

    std::vector<MapDefinition> parse_file() {
        std::vector<MapDefinition> defs;
        while (cur_.kind != Tok::End) defs.push_back(parse_map());
        if (defs.empty()) throw ParseError(cur_.line, cur_.col, "expected at least one 'map' declaration");
        return defs;
    }

    Polynomial parse_single_expr(const std::vector<std::string>& variables) {
        vars_.clear();
        for (std::size_t j = 0; j < variables.size(); ++j) vars_.emplace(variables[j], static_cast<int>(j));
        nvars_ = static_cast<int>(variables.size());
        Polynomial p = parse_expr();
        expect(Tok::End, "end of input");
        return p;
    }

private:
    Lexer lex_;
    Token cur_;
    std::map<std::string, int> vars_;
    int nvars_ = 0;

    void bump() { cur_ = lex_.next(); }

    [[noreturn]] void fail(const std::string& msg) {
        std::string got = cur_.kind == Tok::End ? "end of input" : "'" + cur_.text + "'";
        throw ParseError(cur_.line, cur_.col, msg + ", got " + got);
    }

    void expect(Tok k, const std::string& what) {
        if (cur_.kind != k) fail("expected " + what);
        if (k != Tok::End) bump();
    }

    MapDefinition parse_map() {
        expect(Tok::Map, "'map'");
        MapDefinition def;
        if (cur_.kind != Tok::Ident) fail("expected map name");
        def.name = cur_.text;
        bump();
        expect(Tok::LParen, "'('");
        vars_.clear();
        while (true) {
            if (cur_.kind == Tok::Imag)
                throw ParseError(cur_.line, cur_.col, "'i' is the imaginary unit and cannot be a variable");
            if (cur_.kind != Tok::Ident) fail("expected variable name");
            if (vars_.count(cur_.text)) throw ParseError(cur_.line, cur_.col, "duplicate variable '" + cur_.text + "'");
            int idx = static_cast<int>(def.variables.size());
            vars_.emplace(cur_.text, idx);
            def.variables.push_back(cur_.text);
            bump();
            if (cur_.kind == Tok::Comma) {
                bump();
                continue;
            }
            break;
        }
        expect(Tok::RParen, "')'");
        nvars_ = static_cast<int>(def.variables.size());
        expect(Tok::Equal, "'='");
        def.components = parse_tuple();
        if (def.components.size() != def.variables.size())
            fail("map must have as many components as variables (" +
                 std::to_string(def.variables.size()) + ")");
        if (cur_.kind == Tok::Inverse) {
            bump();
            expect(Tok::Equal, "'='");
            def.inverse_components = parse_tuple();
            if (def.inverse_components->size() != def.variables.size())
                fail("inverse must have as many components as variables");
        }
        return def;
    }

    std::vector<Polynomial> parse_tuple() {
        expect(Tok::LParen, "'('");
        std::vector<Polynomial> comps;
        comps.push_back(parse_expr());
        while (cur_.kind == Tok::Comma) {
            bump();
            comps.push_back(parse_expr());
        }
        expect(Tok::RParen, "')'");
        return comps;
    }

    Polynomial parse_expr() {
        Polynomial p = parse_term();
        while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
            bool minus = cur_.kind == Tok::Minus;
            bump();
            Polynomial q = parse_term();
            p = minus ? p - q : p + q;
        }
        return p;
    }

    Polynomial parse_term() {
        Polynomial p = parse_factor();
        while (cur_.kind == Tok::Star) {
            bump();
            p = p * parse_factor();
        }
        return p;
    }

    Polynomial parse_factor() {
        if (cur_.kind == Tok::Minus) {
            bump();
            return -parse_factor();
        }
        return parse_power();
    }

    Polynomial parse_power() {
        Polynomial base = parse_primary();
        if (cur_.kind == Tok::Caret) {
            bump();
            if (cur_.kind != Tok::Int) fail("expected non-negative integer exponent");
            if (cur_.text.size() > 9)
                throw ParseError(cur_.line, cur_.col, "exponent too large");
            unsigned long e = std::stoul(cur_.text);
            bump();
            return base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    Polynomial parse_primary() {
        switch (cur_.kind) {
            case Tok::Int: {
                BigInt n = BigInt::from_string(cur_.text);
                bump();
                if (cur_.kind == Tok::Slash) {
                    bump();
                    if (cur_.kind != Tok::Int) fail("expected denominator after '/'");
                    BigInt d = BigInt::from_string(cur_.text);
                    if (d.is_zero()) throw ParseError(cur_.line, cur_.col, "zero denominator");
                    bump();
                    return Polynomial::constant(nvars_, GaussianRational(BigRational(n, d)));
                }
                return Polynomial::constant(nvars_, GaussianRational(BigRational(n, BigInt(1))));
            }
            case Tok::Imag: {
                bump();
                return Polynomial::constant(nvars_, GaussianRational::i());
            }
            case Tok::Ident: {
                auto it = vars_.find(cur_.text);
                if (it == vars_.end())
                    throw ParseError(cur_.line, cur_.col, "unknown variable '" + cur_.text + "'");
                bump();
                return Polynomial::variable(nvars_, it->second);
            }
            case Tok::LParen: {
                bump();
                Polynomial p = parse_expr();
                expect(Tok::RParen, "')'");
                return p;
            }
            default:
                fail("expected a number, variable, 'i', or '('");
        }
    }
};

}  // namespace

PolyMap MapDefinition::to_polymap() const {
    PolyMap f(components);
    if (inverse_components) f.set_claimed_inverse(PolyMap(*inverse_components));
    return f;
}

std::vector<MapDefinition> parse_map_file(std::string_view text) {
    Parser p(text);
    return p.parse_file();
}

Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& variables) {
    Parser p(text);
    return p.parse_single_expr(variables);
}

std::string print_map(const MapDefinition& def) {
    std::string out = "map " + def.name + "(";
    for (std::size_t i = 0; i < def.variables.size(); ++i) {
        if (i) out += ", ";
        out += def.variables[i];
    }
    out += ") = (";
    for (std::size_t i = 0; i < def.components.size(); ++i) {
        if (i) out += ", ";
        out += def.components[i].to_string(def.variables);
    }
    out += ")";
    if (def.inverse_components) {
        out += " inverse = (";
        for (std::size_t i = 0; i < def.inverse_components->size(); ++i) {
            if (i) out += ", ";
            out += (*def.inverse_components)[i].to_string(def.variables);
        }
        out += ")";
    }
    return out;
}

const MapDefinition& find_map(const std::vector<MapDefinition>& defs, const std::string& name) {
    for (const auto& d : defs) {
        if (d.name == name) return d;
    }
    throw std::out_of_range("no map named '" + name + "' in file");
}

}  // namespace hs
