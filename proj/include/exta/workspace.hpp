#pragma once

// Line-oriented text format for the file-driven CLI. A document declares a
// dimension and a sequence of named objects; multivectors are sparse term
// lists (2.5*e13, bare numbers for scalars), extensors are row-major
// bracketed matrices, frames are brace-enclosed vector lists. Statements may
// span lines until brackets balance; '#' starts a comment.

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "exta/core.hpp"
#include "exta/extensors.hpp"
#include "exta/frame.hpp"
#include "exta/multivector.hpp"

namespace exta {

struct ParseError : Error {
    ParseError(int line_no, const std::string& message)
        : Error("parse error at line " + std::to_string(line_no) + ": " + message),
          line(line_no) {}

    int line;
};

struct ValidationError : Error {
    ValidationError(std::string object_name, const std::string& invariant_message,
                    bool singular_object = false)
        : Error("object '" + object_name + "': " + invariant_message),
          object(std::move(object_name)),
          singular(singular_object) {}

    std::string object;
    bool singular;
};

using WorkspaceObject =
    std::variant<Multivector, Frame, PqExtensor, GeneralExtensor, ElementaryKExtensor,
                 ComponentSet>;

struct WorkspaceEntry {
    std::string name;
    WorkspaceObject value;
    std::string frame_name; // set for component sets: the referenced frame
};

/// Named multivectors, frames and extensors sharing one dimension, in
/// declaration order.
struct Workspace {
    int dim = 0;
    std::vector<WorkspaceEntry> entries;

    const WorkspaceEntry* find(const std::string& name) const {
        for (const auto& e : entries) {
            if (e.name == name) return &e;
        }
        return nullptr;
    }

    void add(WorkspaceEntry entry) {
        if (find(entry.name) != nullptr) {
            throw ValidationError(entry.name, "name declared twice");
        }
        entries.push_back(std::move(entry));
    }
};

namespace ws_detail {

struct Token {
    enum Kind { word, number, symbol } kind;
    std::string text;
    double value = 0.0;
};

inline bool is_word_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
inline bool is_word_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

inline std::vector<Token> tokenize(const std::string& text, int line_no) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::string("={}[],;*").find(c) != std::string::npos) {
            out.push_back({Token::symbol, std::string(1, c)});
            ++i;
            continue;
        }
        if (c == '+' || c == '-') {
            const bool starts_number =
                i + 1 < text.size() &&
                (std::isdigit(static_cast<unsigned char>(text[i + 1])) || text[i + 1] == '.');
            if (!starts_number) {
                out.push_back({Token::symbol, std::string(1, c)});
                ++i;
                continue;
            }
        }
        if (c == '+' || c == '-' || c == '.' || std::isdigit(static_cast<unsigned char>(c))) {
            const char* start = text.c_str() + i;
            char* end = nullptr;
            const double v = std::strtod(start, &end);
            if (end == start) throw ParseError(line_no, "malformed number");
            if (!std::isfinite(v)) throw ParseError(line_no, "number out of range");
            Token t{Token::number, std::string(start, static_cast<std::size_t>(end - start))};
            t.value = v;
            out.push_back(std::move(t));
            i += static_cast<std::size_t>(end - start);
            continue;
        }
        if (is_word_start(c)) {
            std::size_t j = i;
            while (j < text.size() && is_word_char(text[j])) ++j;
            out.push_back({Token::word, text.substr(i, j - i)});
            i = j;
            continue;
        }
        throw ParseError(line_no, std::string("unexpected character '") + c + "'");
    }
    return out;
}

class TokenStream {
public:
    TokenStream(std::vector<Token> tokens, int line_no)
        : tokens_(std::move(tokens)), line_(line_no) {}

    bool done() const { return pos_ >= tokens_.size(); }
    int line() const { return line_; }

    const Token& peek() const {
        if (done()) throw ParseError(line_, "unexpected end of statement");
        return tokens_[pos_];
    }

    Token next() {
        Token t = peek();
        ++pos_;
        return t;
    }

    bool accept_symbol(const std::string& s) {
        if (!done() && tokens_[pos_].kind == Token::symbol && tokens_[pos_].text == s) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect_symbol(const std::string& s) {
        if (!accept_symbol(s)) throw ParseError(line_, "expected '" + s + "'");
    }

    std::string expect_word(const std::string& what) {
        if (done() || peek().kind != Token::word) throw ParseError(line_, "expected " + what);
        return next().text;
    }

    double expect_number(const std::string& what) {
        if (done() || peek().kind != Token::number) throw ParseError(line_, "expected " + what);
        return next().value;
    }

    int expect_int(const std::string& what) {
        const double v = expect_number(what);
        const int i = static_cast<int>(v);
        if (static_cast<double>(i) != v) throw ParseError(line_, what + " must be an integer");
        return i;
    }

private:
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    int line_;
};

/// Blade token: 'e' followed by digit-per-index (indices 1..9) or
/// underscore-separated indices for dimensions past nine.
inline std::optional<BladeMask> parse_blade_token(const std::string& word, int line_no) {
    if (word.size() < 2 || word[0] != 'e') return std::nullopt;
    const std::string body = word.substr(1);
    for (char c : body) {
        if (!std::isdigit(static_cast<unsigned char>(c)) && c != '_') return std::nullopt;
    }
    std::vector<int> indices;
    if (body.find('_') != std::string::npos) {
        std::size_t start = 0;
        while (start <= body.size()) {
            const std::size_t us = body.find('_', start);
            const std::string part = body.substr(start, us == std::string::npos ? us : us - start);
            if (part.empty()) throw ParseError(line_no, "empty blade index");
            indices.push_back(std::atoi(part.c_str()));
            if (us == std::string::npos) break;
            start = us + 1;
        }
    } else {
        for (char c : body) indices.push_back(c - '0');
    }
    BladeMask mask = 0;
    int prev = 0;
    for (int idx : indices) {
        if (idx < 1 || idx > kMaxDim) {
            throw ParseError(line_no, "blade index out of range in '" + word + "'");
        }
        if (idx <= prev) {
            throw ParseError(line_no, "blade indices must be strictly ascending in '" + word + "'");
        }
        prev = idx;
        mask |= BladeMask{1} << (idx - 1);
    }
    return mask;
}

/// Term-list multivector expression; stops at ';', '}' or end of tokens.
inline Multivector parse_mv_expr(TokenStream& ts, int dim, const std::string& object_name) {
    MultivectorBuilder b(dim);
    double sign = 1.0;
    bool saw_term = false;
    bool pending_sign = false;
    while (!ts.done()) {
        const Token& t = ts.peek();
        if (t.kind == Token::symbol && (t.text == ";" || t.text == "}")) break;
        if (t.kind == Token::symbol && (t.text == "+" || t.text == "-")) {
            ts.next();
            if (t.text == "-") sign = -sign;
            pending_sign = true;
            continue;
        }
        double coeff = sign;
        BladeMask mask = 0;
        bool have_value = false;
        if (t.kind == Token::number) {
            coeff = sign * ts.next().value;
            have_value = true;
            if (ts.accept_symbol("*")) {
                const std::string word = ts.expect_word("blade after '*'");
                const auto blade = parse_blade_token(word, ts.line());
                if (!blade) throw ParseError(ts.line(), "expected blade, got '" + word + "'");
                mask = *blade;
            }
        } else if (t.kind == Token::word) {
            const auto blade = parse_blade_token(t.text, ts.line());
            if (!blade) throw ParseError(ts.line(), "expected term, got '" + t.text + "'");
            ts.next();
            mask = *blade;
            have_value = true;
        } else {
            throw ParseError(ts.line(), "expected term, got '" + t.text + "'");
        }
        if (!have_value) throw ParseError(ts.line(), "malformed term");
        if (mask >= (BladeMask{1} << dim)) {
            throw ValidationError(object_name, "blade index exceeds the document dimension");
        }
        b.add(mask, coeff);
        sign = 1.0;
        saw_term = true;
        pending_sign = false;
    }
    if (!saw_term) throw ParseError(ts.line(), "empty multivector expression");
    if (pending_sign) throw ParseError(ts.line(), "dangling sign in multivector expression");
    return b.take();
}

inline std::vector<std::vector<double>> parse_matrix(TokenStream& ts) {
    std::vector<std::vector<double>> rows;
    ts.expect_symbol("[");
    for (;;) {
        ts.expect_symbol("[");
        std::vector<double> row;
        if (!ts.accept_symbol("]")) {
            for (;;) {
                row.push_back(ts.expect_number("matrix entry"));
                if (ts.accept_symbol("]")) break;
                ts.expect_symbol(",");
            }
        }
        rows.push_back(std::move(row));
        if (ts.accept_symbol("]")) break;
        ts.expect_symbol(",");
    }
    for (const auto& row : rows) {
        if (row.size() != rows.front().size()) throw ParseError(ts.line(), "ragged matrix rows");
    }
    return rows;
}

inline Matrix to_matrix(const std::vector<std::vector<double>>& rows) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

inline std::string fmt_num(double v) {
    if (v == 0.0) v = 0.0; // normalize negative zero
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

inline std::string blade_token(BladeMask mask) {
    const auto bits = mask_bits(mask);
    bool wide = false;
    for (int b : bits) {
        if (b + 1 > 9) wide = true;
    }
    std::string out = "e";
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (wide && i > 0) out += '_';
        out += std::to_string(bits[i] + 1);
    }
    return out;
}

inline std::string print_mv(const Multivector& x) {
    std::string out;
    for (BladeMask m = 0; m < x.size(); ++m) {
        const double c = x.coeff(m);
        if (c == 0.0) continue;
        if (out.empty()) {
            out += fmt_num(c);
        } else {
            out += c < 0 ? " - " : " + ";
            out += fmt_num(std::fabs(c));
        }
        if (m != 0) out += "*" + blade_token(m);
    }
    return out.empty() ? "0" : out;
}

inline std::string print_matrix(const Matrix& m) {
    std::string out = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i > 0) out += ", ";
        out += "[";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j > 0) out += ", ";
            out += fmt_num(m.at(i, j));
        }
        out += "]";
    }
    return out + "]";
}

inline const char* kind_token(ComponentKind kind, Variance variance) {
    switch (kind) {
        case ComponentKind::pq:
            return variance == Variance::covariant ? "pq_covariant" : "pq_contravariant";
        case ComponentKind::general:
            return variance == Variance::covariant ? "general_covariant"
                                                   : "general_contravariant";
        case ComponentKind::elementary:
            return variance == Variance::covariant ? "elementary_covariant"
                                                   : "elementary_contravariant";
    }
    return "?";
}

inline const char* kReservedWords[] = {"dim",        "mv",      "frame",     "extensor",
                                       "general",    "elementary", "components", nullptr};

inline void check_name(const std::string& name, int line_no) {
    for (const char** w = kReservedWords; *w != nullptr; ++w) {
        if (name == *w) throw ParseError(line_no, "'" + name + "' is a reserved word");
    }
    if (parse_blade_token(name, line_no).has_value()) {
        throw ParseError(line_no, "'" + name + "' is reserved for blades");
    }
}

} // namespace ws_detail

inline Workspace parse_workspace(std::string_view text) {
    using namespace ws_detail;

    // Gather logical statements: strip comments, join lines while brackets
    // are unbalanced.
    struct Statement {
        std::string text;
        int line;
    };
    std::vector<Statement> statements;
    {
        std::string current;
        int current_line = 0;
        int depth = 0;
        int line_no = 0;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            const std::size_t eol = text.find('\n', pos);
            std::string line(text.substr(pos, eol == std::string_view::npos ? eol : eol - pos));
            pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
            ++line_no;
            const std::size_t hash = line.find('#');
            if (hash != std::string::npos) line.resize(hash);
            for (char c : line) {
                if (c == '[' || c == '{') ++depth;
                if (c == ']' || c == '}') --depth;
            }
            if (current.empty()) current_line = line_no;
            current += line;
            current += ' ';
            if (depth > 0) continue;
            bool blank = true;
            for (char c : current) {
                if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
            }
            if (!blank) statements.push_back({current, current_line});
            current.clear();
            depth = 0;
        }
        if (depth > 0) throw ParseError(line_no, "unbalanced brackets at end of document");
    }

    if (statements.empty()) throw ParseError(1, "empty document");

    Workspace w;
    bool have_dim = false;
    for (const auto& stmt : statements) {
        TokenStream ts(tokenize(stmt.text, stmt.line), stmt.line);
        const std::string keyword = ts.expect_word("declaration keyword");

        if (keyword == "dim") {
            if (have_dim) throw ParseError(stmt.line, "dimension declared twice");
            const int n = ts.expect_int("dimension");
            if (n < 1 || n > kMaxDim) {
                throw ValidationError("dim", "dimension cap: n must be between 1 and " +
                                                 std::to_string(kMaxDim));
            }
            w.dim = n;
            have_dim = true;
            if (!ts.done()) throw ParseError(stmt.line, "trailing tokens after dimension");
            continue;
        }
        if (!have_dim) throw ParseError(stmt.line, "the document must declare 'dim' first");

        const std::string name = ts.expect_word("object name");
        check_name(name, stmt.line);
        ts.expect_symbol("=");

        try {
            if (keyword == "mv") {
                Multivector x = parse_mv_expr(ts, w.dim, name);
                w.add({name, std::move(x), {}});
            } else if (keyword == "frame") {
                ts.expect_symbol("{");
                std::vector<Multivector> vectors;
                for (;;) {
                    vectors.push_back(parse_mv_expr(ts, w.dim, name));
                    if (ts.accept_symbol("}")) break;
                    ts.expect_symbol(";");
                }
                w.add({name, Frame(std::move(vectors)), {}});
            } else if (keyword == "extensor") {
                int p = 1, q = 1;
                if (ts.peek().kind == Token::number) {
                    p = ts.expect_int("input grade");
                    q = ts.expect_int("output grade");
                }
                const auto rows = parse_matrix(ts);
                w.add({name, PqExtensor(w.dim, p, q, to_matrix(rows)), {}});
            } else if (keyword == "general") {
                const auto rows = parse_matrix(ts);
                w.add({name, GeneralExtensor(w.dim, to_matrix(rows)), {}});
            } else if (keyword == "elementary") {
                const int k = ts.expect_int("arity");
                const int q = ts.expect_int("output grade");
                const auto rows = parse_matrix(ts);
                w.add({name, ElementaryKExtensor(w.dim, k, q, to_matrix(rows)), {}});
            } else if (keyword == "components") {
                const std::string kind_word = ts.expect_word("component kind");
                ComponentKind kind;
                Variance variance;
                if (kind_word == "pq_covariant") {
                    kind = ComponentKind::pq;
                    variance = Variance::covariant;
                } else if (kind_word == "pq_contravariant") {
                    kind = ComponentKind::pq;
                    variance = Variance::contravariant;
                } else if (kind_word == "general_covariant") {
                    kind = ComponentKind::general;
                    variance = Variance::covariant;
                } else if (kind_word == "general_contravariant") {
                    kind = ComponentKind::general;
                    variance = Variance::contravariant;
                } else if (kind_word == "elementary_covariant") {
                    kind = ComponentKind::elementary;
                    variance = Variance::covariant;
                } else if (kind_word == "elementary_contravariant") {
                    kind = ComponentKind::elementary;
                    variance = Variance::contravariant;
                } else {
                    throw ParseError(stmt.line, "unknown component kind '" + kind_word + "'");
                }
                const std::string frame_name = ts.expect_word("frame name");
                const WorkspaceEntry* fe = w.find(frame_name);
                if (fe == nullptr || !std::holds_alternative<Frame>(fe->value)) {
                    throw ValidationError(name, "components reference the frame '" + frame_name +
                                                    "', which is not declared");
                }
                int p = 0, q = 0, k = 0;
                if (kind == ComponentKind::pq) {
                    p = ts.expect_int("input grade");
                    q = ts.expect_int("output grade");
                } else if (kind == ComponentKind::elementary) {
                    k = ts.expect_int("arity");
                    q = ts.expect_int("output grade");
                }
                const auto rows = parse_matrix(ts);
                ComponentSet cs{kind, variance, std::get<Frame>(fe->value), p, q, k,
                                to_matrix(rows)};
                // Shape validation mirrors reconstruction's requirements.
                const int n = w.dim;
                bool ok = true;
                if (kind == ComponentKind::pq) {
                    ok = p >= 0 && p <= n && q >= 0 && q <= n &&
                         cs.values.rows() == binomial(n, p) && cs.values.cols() == binomial(n, q);
                } else if (kind == ComponentKind::general) {
                    ok = cs.values.rows() == (std::size_t{1} << n) &&
                         cs.values.cols() == (std::size_t{1} << n);
                } else {
                    ok = k >= 1 && q >= 0 && q <= n &&
                         cs.values.rows() == ElementaryKExtensor::pow_dim(n, k) &&
                         cs.values.cols() == binomial(n, q);
                }
                if (!ok) throw ValidationError(name, "component values do not match the kind");
                w.add({name, std::move(cs), frame_name});
            } else {
                throw ParseError(stmt.line, "unknown declaration '" + keyword + "'");
            }
        } catch (const SingularFrame& e) {
            throw ValidationError(name, e.what(), true);
        } catch (const SingularExtensor& e) {
            throw ValidationError(name, e.what(), true);
        } catch (const ParseError&) {
            throw;
        } catch (const ValidationError&) {
            throw;
        } catch (const Error& e) {
            throw ValidationError(name, e.what());
        }
        if (!ts.done()) throw ParseError(stmt.line, "trailing tokens after declaration");
    }
    return w;
}

inline std::string print_workspace(const Workspace& w) {
    using namespace ws_detail;
    std::string out = "dim " + std::to_string(w.dim) + "\n";
    for (const auto& entry : w.entries) {
        if (const auto* mv = std::get_if<Multivector>(&entry.value)) {
            out += "mv " + entry.name + " = " + print_mv(*mv) + "\n";
        } else if (const auto* f = std::get_if<Frame>(&entry.value)) {
            out += "frame " + entry.name + " = { ";
            for (int k = 1; k <= f->dim(); ++k) {
                if (k > 1) out += " ; ";
                out += print_mv(f->vector(k));
            }
            out += " }\n";
        } else if (const auto* t = std::get_if<PqExtensor>(&entry.value)) {
            out += "extensor " + entry.name + " = ";
            if (t->p() != 1 || t->q() != 1) {
                out += std::to_string(t->p()) + " " + std::to_string(t->q()) + " ";
            }
            out += print_matrix(t->matrix()) + "\n";
        } else if (const auto* g = std::get_if<GeneralExtensor>(&entry.value)) {
            out += "general " + entry.name + " = " + print_matrix(g->matrix()) + "\n";
        } else if (const auto* l = std::get_if<ElementaryKExtensor>(&entry.value)) {
            out += "elementary " + entry.name + " = " + std::to_string(l->arity()) + " " +
                   std::to_string(l->q()) + " " + print_matrix(l->components()) + "\n";
        } else if (const auto* cs = std::get_if<ComponentSet>(&entry.value)) {
            out += "components " + entry.name + " = ";
            out += kind_token(cs->kind, cs->variance);
            out += " " + entry.frame_name;
            if (cs->kind == ComponentKind::pq) {
                out += " " + std::to_string(cs->p) + " " + std::to_string(cs->q);
            } else if (cs->kind == ComponentKind::elementary) {
                out += " " + std::to_string(cs->k) + " " + std::to_string(cs->q);
            }
            out += " " + print_matrix(cs->values) + "\n";
        }
    }
    return out;
}

} // namespace exta
