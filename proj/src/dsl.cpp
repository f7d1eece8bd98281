// Copyright 2026 The gcs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gcs/dsl.hpp"

#include <cctype>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

namespace gcs {

namespace {

// ---------------------------------------------------------------------------
// Line scanner

struct Token {
    enum class Kind { ident, number, angle, integer, punct, end };
    Kind kind = Kind::end;
    std::string text;
    Scalar number = 0;
    long long integer = 0;
    bool integral = false;  // number written without '.', 'e' or sign
    int column = 1;
};

class LineScanner {
  public:
    LineScanner(const std::string& text, int line_no)
        : text_(text), line_(line_no) {}

    const Token& peek() {
        if (!lookahead_) lookahead_ = scan();
        return *lookahead_;
    }

    Token next() {
        Token t = peek();
        lookahead_.reset();
        return t;
    }

    [[noreturn]] void fail(const std::string& message, const Token& at) const {
        int col = at.column;
        // Clamp to the last real character so the location always indexes
        // into the source line.
        if (text_.empty()) col = 1;
        else if (col > static_cast<int>(text_.size())) col = static_cast<int>(text_.size());
        throw ParseError(line_, col, "line " + std::to_string(line_) + ", column " +
                                         std::to_string(col) + ": " + message,
                         at.text);
    }

    int line() const { return line_; }

  private:
    Token scan() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
        Token t;
        t.column = static_cast<int>(pos_) + 1;
        if (pos_ >= text_.size() || text_[pos_] == '#') {
            t.kind = Token::Kind::end;
            return t;
        }
        const char c = text_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            t.kind = Token::Kind::ident;
            t.text = text_.substr(start, pos_ - start);
            return t;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '.') {
            return scan_number(t);
        }
        t.kind = Token::Kind::punct;
        t.text = std::string(1, c);
        ++pos_;
        return t;
    }

    Token scan_number(Token t) {
        const std::size_t start = pos_;
        if (text_[pos_] == '+' || text_[pos_] == '-') ++pos_;
        bool saw_digit = false, saw_dot = false, saw_exp = false;
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                saw_digit = true;
                ++pos_;
            } else if (c == '.' && !saw_dot && !saw_exp) {
                saw_dot = true;
                ++pos_;
            } else if ((c == 'e' || c == 'E') && saw_digit && !saw_exp) {
                saw_exp = true;
                ++pos_;
                if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
            } else {
                break;
            }
        }
        const std::string body = text_.substr(start, pos_ - start);
        if (!saw_digit) {
            t.kind = Token::Kind::punct;
            t.text = body.empty() ? std::string(1, text_[start]) : body;
            if (body.empty()) ++pos_;
            fail_number(t, "malformed number");
        }
        // from_chars takes no leading '+'.
        const std::string digits = body[0] == '+' ? body.substr(1) : body;
        Scalar value = 0;
        auto res = std::from_chars(digits.data(), digits.data() + digits.size(), value);
        if (res.ec != std::errc() || res.ptr != digits.data() + digits.size()) {
            t.text = body;
            fail_number(t, "malformed number '" + body + "'");
        }
        t.text = body;
        t.number = value;
        t.integral = !saw_dot && !saw_exp;
        if (t.integral) {
            long long iv = 0;
            auto ires = std::from_chars(digits.data(), digits.data() + digits.size(), iv);
            t.integral = ires.ec == std::errc() && ires.ptr == digits.data() + digits.size();
            t.integer = iv;
        }
        // Unit suffix: "30deg".
        if (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
            std::size_t spos = pos_;
            while (pos_ < text_.size() &&
                   std::isalpha(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            const std::string suffix = text_.substr(spos, pos_ - spos);
            if (suffix != "deg") {
                t.text = body + suffix;
                fail_number(t, "unknown unit suffix '" + suffix + "'");
            }
            t.kind = Token::Kind::angle;
            t.text = body + suffix;
            return t;
        }
        t.kind = Token::Kind::number;
        return t;
    }

    [[noreturn]] void fail_number(const Token& t, const std::string& msg) {
        fail(msg, t);
    }

    const std::string& text_;
    int line_;
    std::size_t pos_ = 0;
    std::optional<Token> lookahead_;
};

// ---------------------------------------------------------------------------
// Statement parser

class Parser {
  public:
    explicit Parser(const std::string& source) : source_(source) {}

    ConstructionProgram run(const std::string& name) {
        ConstructionProgram program;
        program.name = name;
        std::istringstream in(source_);
        std::string line;
        int line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            LineScanner scan(line, line_no);
            if (scan.peek().kind == Token::Kind::end) continue;
            parse_statement(scan, program);
            const Token& rest = scan.peek();
            if (rest.kind != Token::Kind::end)
                scan.fail("unexpected trailing input", rest);
        }
        return program;
    }

  private:
    Token expect_ident(LineScanner& scan, const char* what) {
        Token t = scan.next();
        if (t.kind != Token::Kind::ident)
            scan.fail(std::string("expected ") + what, t);
        return t;
    }

    void expect_punct(LineScanner& scan, char c) {
        Token t = scan.next();
        if (t.kind != Token::Kind::punct || t.text[0] != c)
            scan.fail(std::string("expected '") + c + "'", t);
    }

    Scalar expect_number(LineScanner& scan) {
        Token t = scan.next();
        if (t.kind != Token::Kind::number)
            scan.fail("expected a number", t);
        return t.number;
    }

    // Wrong argument counts are validation errors, not syntax errors.
    [[noreturn]] void arity_error(LineScanner& scan, const Token& at,
                                  const std::string& step_id, const char* op, int want) {
        throw ValidationError(step_id, "line " + std::to_string(scan.line()) +
                                           ", column " + std::to_string(at.column) + ": " +
                                           op + " expects " + std::to_string(want) +
                                           " argument(s)",
                              scan.line(), at.column);
    }

    // Separator between fixed-arity arguments: ',' continues, anything else
    // is either an arity problem (')' too early, ',' too late) or syntax.
    void expect_arg_sep(LineScanner& scan, const std::string& step_id, const char* op,
                        int want) {
        Token t = scan.next();
        if (t.kind == Token::Kind::punct && t.text[0] == ',') return;
        if (t.kind == Token::Kind::punct && t.text[0] == ')')
            arity_error(scan, t, step_id, op, want);
        scan.fail("expected ','", t);
    }

    void expect_arg_end(LineScanner& scan, const std::string& step_id, const char* op,
                        int want) {
        Token t = scan.next();
        if (t.kind == Token::Kind::punct && t.text[0] == ')') return;
        if (t.kind == Token::Kind::punct && t.text[0] == ',')
            arity_error(scan, t, step_id, op, want);
        scan.fail("expected ')'", t);
    }

    std::string expect_known_id(LineScanner& scan, const char* what) {
        Token t = expect_ident(scan, what);
        if (!declared_.count(t.text))
            throw ValidationError(t.text, "line " + std::to_string(scan.line()) +
                                              ", column " + std::to_string(t.column) +
                                              ": unknown reference '" + t.text + "'",
                                  scan.line(), t.column);
        return t.text;
    }

    void declare(LineScanner& scan, const Token& id_token) {
        if (declared_.count(id_token.text))
            throw ValidationError(id_token.text,
                                  "line " + std::to_string(scan.line()) + ", column " +
                                      std::to_string(id_token.column) + ": duplicate id '" +
                                      id_token.text + "'",
                                  scan.line(), id_token.column);
        declared_.insert(id_token.text);
    }

    void parse_statement(LineScanner& scan, ConstructionProgram& out) {
        Token head = expect_ident(scan, "a type keyword (point, line, ray, circle)");
        ObjectKind declared_kind;
        if (head.text == "point") declared_kind = ObjectKind::point;
        else if (head.text == "line") declared_kind = ObjectKind::line;
        else if (head.text == "ray") declared_kind = ObjectKind::ray;
        else if (head.text == "circle") declared_kind = ObjectKind::circle;
        else scan.fail("unknown statement type '" + head.text + "'", head);

        Token id = expect_ident(scan, "an identifier");
        expect_punct(scan, '=');

        Step step;
        step.id = id.text;

        const Token& rhs = scan.peek();
        if (rhs.kind == Token::Kind::punct && rhs.text[0] == '(') {
            if (declared_kind != ObjectKind::point)
                scan.fail("coordinate literals build points", rhs);
            scan.next();
            step.rule = StepRule::free_point;
            step.coords.x = expect_number(scan);
            expect_punct(scan, ',');
            step.coords.y = expect_number(scan);
            expect_punct(scan, ')');
        } else if (rhs.kind == Token::Kind::ident && rhs.text == "macro") {
            scan.next();
            Token name = expect_ident(scan, "a macro name");
            step.rule = StepRule::macro_call;
            step.macro_name = name.text;
            step.macro_result = declared_kind;
            step.macro_args = parse_macro_args(scan);
        } else {
            Token op = expect_ident(scan, "an operation");
            parse_operation(scan, op, declared_kind, step);
        }

        declare(scan, id);
        out.steps.push_back(std::move(step));
    }

    void parse_operation(LineScanner& scan, const Token& op, ObjectKind declared_kind,
                         Step& step) {
        auto check_kind = [&](ObjectKind required) {
            if (declared_kind != required)
                scan.fail("operation '" + op.text + "' yields a " +
                              std::string(kind_name(required)),
                          op);
        };

        if (op.text == "line") {
            check_kind(ObjectKind::line);
            step.rule = StepRule::line_through;
            parse_two_ids(scan, step, "line");
        } else if (op.text == "ray") {
            check_kind(ObjectKind::ray);
            step.rule = StepRule::ray_from;
            parse_two_ids(scan, step, "ray");
        } else if (op.text == "circle") {
            check_kind(ObjectKind::circle);
            expect_punct(scan, '(');
            step.inputs.push_back(expect_known_id(scan, "a point id"));
            expect_arg_sep(scan, step.id, "circle", 2);
            const Token second = scan.next();
            // `r=` starts the radius form; a bare `r` is an ordinary point id.
            if (second.kind == Token::Kind::ident && second.text == "r" &&
                scan.peek().kind == Token::Kind::punct && scan.peek().text[0] == '=') {
                scan.next();
                step.rule = StepRule::circle_center_radius;
                step.radius = expect_number(scan);
            } else {
                if (second.kind != Token::Kind::ident)
                    scan.fail("expected a point id or r=<num>", second);
                if (!declared_.count(second.text))
                    throw ValidationError(second.text,
                                          "line " + std::to_string(scan.line()) +
                                              ", column " + std::to_string(second.column) +
                                              ": unknown reference '" + second.text + "'",
                                          scan.line(), second.column);
                step.rule = StepRule::circle_center_point;
                step.inputs.push_back(second.text);
            }
            expect_arg_end(scan, step.id, "circle", 2);
        } else if (op.text == "intersect") {
            check_kind(ObjectKind::point);
            step.rule = StepRule::intersect;
            expect_punct(scan, '(');
            step.inputs.push_back(expect_known_id(scan, "an object id"));
            expect_arg_sep(scan, step.id, "intersect", 3);
            step.inputs.push_back(expect_known_id(scan, "an object id"));
            expect_arg_sep(scan, step.id, "intersect", 3);
            Token t = scan.next();
            if (t.kind != Token::Kind::number || !t.integral)
                scan.fail("expected a branch index", t);
            if (t.integer < 0)
                throw ValidationError(step.id, "line " + std::to_string(scan.line()) +
                                                   ", column " + std::to_string(t.column) +
                                                   ": negative branch index",
                                      scan.line(), t.column);
            step.branch = static_cast<int>(t.integer);
            expect_arg_end(scan, step.id, "intersect", 3);
        } else if (op.text == "midpoint") {
            check_kind(ObjectKind::point);
            step.rule = StepRule::midpoint;
            parse_two_ids(scan, step, "midpoint");
        } else if (op.text == "perp") {
            check_kind(ObjectKind::line);
            step.rule = StepRule::perpendicular_at;
            expect_punct(scan, '(');
            step.inputs.push_back(expect_known_id(scan, "a line id"));
            expect_arg_sep(scan, step.id, "perp", 2);
            Token at = expect_ident(scan, "'at'");
            if (at.text != "at") scan.fail("expected 'at='", at);
            expect_punct(scan, '=');
            step.inputs.push_back(expect_known_id(scan, "a point id"));
            expect_arg_end(scan, step.id, "perp", 2);
        } else if (op.text == "bisector") {
            check_kind(ObjectKind::line);
            step.rule = StepRule::perpendicular_bisector;
            parse_two_ids(scan, step, "bisector");
        } else {
            scan.fail("unknown operation '" + op.text + "'", op);
        }
    }

    void parse_two_ids(LineScanner& scan, Step& step, const char* op) {
        expect_punct(scan, '(');
        step.inputs.push_back(expect_known_id(scan, "an id"));
        expect_arg_sep(scan, step.id, op, 2);
        step.inputs.push_back(expect_known_id(scan, "an id"));
        expect_arg_end(scan, step.id, op, 2);
    }

    std::vector<MacroArg> parse_macro_args(LineScanner& scan) {
        std::vector<MacroArg> args;
        expect_punct(scan, '(');
        if (scan.peek().kind == Token::Kind::punct && scan.peek().text[0] == ')') {
            scan.next();
            return args;
        }
        while (true) {
            args.push_back(parse_macro_arg(scan));
            Token t = scan.next();
            if (t.kind == Token::Kind::punct && t.text[0] == ')') break;
            if (!(t.kind == Token::Kind::punct && t.text[0] == ','))
                scan.fail("expected ',' or ')'", t);
        }
        return args;
    }

    MacroArg parse_macro_arg(LineScanner& scan) {
        MacroArg arg;
        Token t = scan.next();
        if (t.kind == Token::Kind::ident) {
            // Either `key=value` or a bare object reference.
            if (scan.peek().kind == Token::Kind::punct && scan.peek().text[0] == '=') {
                scan.next();
                arg.key = t.text;
                Token v = scan.next();
                fill_value(scan, v, arg);
                return arg;
            }
            if (!declared_.count(t.text))
                throw ValidationError(t.text, "line " + std::to_string(scan.line()) +
                                                  ", column " + std::to_string(t.column) +
                                                  ": unknown reference '" + t.text + "'",
                                      scan.line(), t.column);
            arg.kind = MacroArg::Kind::ident;
            arg.ident = t.text;
            return arg;
        }
        fill_value(scan, t, arg);
        return arg;
    }

    void fill_value(LineScanner& scan, const Token& v, MacroArg& arg) {
        if (v.kind == Token::Kind::angle) {
            arg.kind = MacroArg::Kind::angle_deg;
            arg.number = v.number;
            return;
        }
        if (v.kind != Token::Kind::number)
            scan.fail("expected a value", v);
        // A ':' after an integer starts a ratio.
        if (v.integral && scan.peek().kind == Token::Kind::punct &&
            scan.peek().text[0] == ':') {
            arg.kind = MacroArg::Kind::ratio;
            arg.ratio.push_back(check_ratio_part(scan, v));
            while (scan.peek().kind == Token::Kind::punct && scan.peek().text[0] == ':') {
                scan.next();
                Token part = scan.next();
                if (part.kind != Token::Kind::number || !part.integral)
                    scan.fail("ratio parts must be integers", part);
                arg.ratio.push_back(check_ratio_part(scan, part));
            }
            return;
        }
        arg.kind = MacroArg::Kind::number;
        arg.number = v.number;
    }

    long long check_ratio_part(LineScanner& scan, const Token& t) {
        if (t.integer < 1)
            throw ValidationError("", "line " + std::to_string(scan.line()) + ", column " +
                                          std::to_string(t.column) +
                                          ": ratio parts must be at least 1",
                                  scan.line(), t.column);
        return t.integer;
    }

    const std::string& source_;
    std::set<std::string> declared_;
};

// ---------------------------------------------------------------------------
// Formatter

const char* statement_keyword(const Step& s) {
    switch (s.rule) {
        case StepRule::free_point:
        case StepRule::intersect:
        case StepRule::midpoint:
            return "point";
        case StepRule::line_through:
        case StepRule::perpendicular_at:
        case StepRule::perpendicular_bisector:
            return "line";
        case StepRule::ray_from:
            return "ray";
        case StepRule::circle_center_point:
        case StepRule::circle_center_radius:
            return "circle";
        case StepRule::macro_call:
            return kind_name(s.macro_result);
    }
    return "point";
}

std::string format_macro_arg(const MacroArg& a) {
    std::string out;
    if (!a.key.empty()) out = a.key + "=";
    switch (a.kind) {
        case MacroArg::Kind::ident:
            out += a.ident;
            break;
        case MacroArg::Kind::number:
            out += format_scalar(a.number);
            break;
        case MacroArg::Kind::angle_deg:
            out += format_scalar(a.number) + "deg";
            break;
        case MacroArg::Kind::ratio: {
            for (std::size_t i = 0; i < a.ratio.size(); ++i) {
                if (i) out += ":";
                out += std::to_string(a.ratio[i]);
            }
            break;
        }
    }
    return out;
}

}  // namespace

ConstructionProgram parse(const std::string& source, const std::string& name) {
    return Parser(source).run(name);
}

std::string format(const ConstructionProgram& program) {
    std::string out;
    for (const Step& s : program.steps) {
        out += statement_keyword(s);
        out += ' ';
        out += s.id;
        out += " = ";
        switch (s.rule) {
            case StepRule::free_point:
                out += "(" + format_scalar(s.coords.x) + ", " + format_scalar(s.coords.y) + ")";
                break;
            case StepRule::line_through:
                out += "line(" + s.inputs[0] + ", " + s.inputs[1] + ")";
                break;
            case StepRule::ray_from:
                out += "ray(" + s.inputs[0] + ", " + s.inputs[1] + ")";
                break;
            case StepRule::circle_center_point:
                out += "circle(" + s.inputs[0] + ", " + s.inputs[1] + ")";
                break;
            case StepRule::circle_center_radius:
                out += "circle(" + s.inputs[0] + ", r=" + format_scalar(s.radius) + ")";
                break;
            case StepRule::intersect:
                out += "intersect(" + s.inputs[0] + ", " + s.inputs[1] + ", " +
                       std::to_string(s.branch) + ")";
                break;
            case StepRule::midpoint:
                out += "midpoint(" + s.inputs[0] + ", " + s.inputs[1] + ")";
                break;
            case StepRule::perpendicular_at:
                out += "perp(" + s.inputs[0] + ", at=" + s.inputs[1] + ")";
                break;
            case StepRule::perpendicular_bisector:
                out += "bisector(" + s.inputs[0] + ", " + s.inputs[1] + ")";
                break;
            case StepRule::macro_call: {
                out += "macro " + s.macro_name + "(";
                for (std::size_t i = 0; i < s.macro_args.size(); ++i) {
                    if (i) out += ", ";
                    out += format_macro_arg(s.macro_args[i]);
                }
                out += ")";
                break;
            }
        }
        out += '\n';
    }
    return out;
}

}  // namespace gcs
