#include "agraded/problem.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace agraded {

std::string ParseError::str() const {
    std::ostringstream os;
    os << "line " << line << ", column " << column << ": " << message;
    return os.str();
}

namespace {

struct Line {
    std::size_t number;  // 1-based
    std::string text;    // comment stripped
};

std::vector<Line> split_lines(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    std::size_t no = 0;
    while (std::getline(in, raw)) {
        ++no;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        lines.push_back(Line{no, raw});
    }
    return lines;
}

bool blank(const std::string& s) {
    return s.find_first_not_of(" \t\r") == std::string::npos;
}

// Single-line scanner with 1-based column reporting.
class Scanner {
  public:
    Scanner(const Line& line) : line_(line) {}

    void skip_space() {
        while (pos_ < line_.text.size() &&
               (line_.text[pos_] == ' ' || line_.text[pos_] == '\t' ||
                line_.text[pos_] == '\r'))
            ++pos_;
    }

    bool at_end() {
        skip_space();
        return pos_ >= line_.text.size();
    }

    char peek() {
        skip_space();
        return pos_ < line_.text.size() ? line_.text[pos_] : '\0';
    }

    char take() {
        skip_space();
        return line_.text[pos_++];
    }

    std::size_t column() {
        skip_space();
        return pos_ + 1;
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError{line_.number, column(), msg};
    }

    std::string word() {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < line_.text.size() &&
               !std::isspace(static_cast<unsigned char>(line_.text[pos_])))
            ++pos_;
        return line_.text.substr(start, pos_ - start);
    }

    std::string identifier() {
        skip_space();
        std::size_t start = pos_;
        if (pos_ >= line_.text.size() ||
            !std::isalpha(static_cast<unsigned char>(line_.text[pos_])))
            fail("expected identifier");
        while (pos_ < line_.text.size() &&
               (std::isalnum(static_cast<unsigned char>(line_.text[pos_])) ||
                line_.text[pos_] == '_'))
            ++pos_;
        return line_.text.substr(start, pos_ - start);
    }

    mpz_class natural() {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < line_.text.size() &&
               std::isdigit(static_cast<unsigned char>(line_.text[pos_])))
            ++pos_;
        if (pos_ == start) fail("expected integer literal");
        return mpz_class(line_.text.substr(start, pos_ - start));
    }

    mpz_class integer() {
        skip_space();
        bool neg = false;
        if (peek() == '-') {
            take();
            neg = true;
        }
        mpz_class v = natural();
        return neg ? mpz_class(-v) : v;
    }

    const Line& line() const { return line_; }

  private:
    const Line& line_;
    std::size_t pos_ = 0;
};

// Recursive-descent expression parser over one `poly` line.
class ExprParser {
  public:
    ExprParser(Scanner& sc, const Ring& ring) : sc_(sc), ring_(ring) {}

    Polynomial parse() {
        Polynomial p = expr();
        if (!sc_.at_end()) sc_.fail("unexpected trailing input");
        return p;
    }

  private:
    Scanner& sc_;
    const Ring& ring_;

    Polynomial expr() {
        Polynomial acc = signed_term();
        while (sc_.peek() == '+' || sc_.peek() == '-') {
            char op = sc_.take();
            Polynomial t = term();
            acc = op == '+' ? acc + t : acc - t;
        }
        return acc;
    }

    Polynomial signed_term() {
        bool neg = false;
        while (sc_.peek() == '-' || sc_.peek() == '+') {
            if (sc_.take() == '-') neg = !neg;
        }
        Polynomial t = term();
        return neg ? -t : t;
    }

    Polynomial term() {
        Polynomial f = factor();
        while (sc_.peek() == '*') {
            sc_.take();
            f = f * factor();
        }
        return f;
    }

    Polynomial factor() {
        Polynomial base = atom();
        if (sc_.peek() == '^') {
            sc_.take();
            std::size_t col = sc_.column();
            if (!std::isdigit(static_cast<unsigned char>(sc_.peek())))
                throw ParseError{sc_.line().number, col,
                                 "malformed exponent: expected a nonnegative "
                                 "integer literal"};
            mpz_class e = sc_.natural();
            if (e > 100000)
                throw ParseError{sc_.line().number, col,
                                 "malformed exponent: too large"};
            base = power(base, e.get_ui());
        }
        return base;
    }

    Polynomial power(const Polynomial& base, unsigned long e) {
        Polynomial acc = Polynomial::one(ring_);
        Polynomial sq = base;
        while (e > 0) {
            if (e & 1) acc = acc * sq;
            e >>= 1;
            if (e) sq = sq * sq;
        }
        return acc;
    }

    Polynomial atom() {
        char c = sc_.peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class v = sc_.natural();
            return Polynomial::constant(
                ring_, Scalar::of_integer(ring_->field(), v));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t col = sc_.column();
            std::string name = sc_.identifier();
            std::size_t idx = ring_->index_of(name);
            if (idx == RingContext::npos)
                throw ParseError{sc_.line().number, col,
                                 "unknown variable '" + name + "'"};
            return Polynomial::variable(ring_, idx);
        }
        if (c == '(') {
            sc_.take();
            Polynomial p = expr();
            if (sc_.peek() != ')') sc_.fail("expected ')'");
            sc_.take();
            return p;
        }
        if (c == '-' || c == '+') return signed_term();
        sc_.fail("expected a number, variable or '('");
    }
};

}  // namespace

ProblemFile parse_problem(const std::string& text,
                          const MonomialOrder& order) {
    std::vector<Line> lines = split_lines(text);

    // first pass: the ring declaration
    std::vector<std::string> vars;
    bool have_vars = false;
    FieldSpec field;
    for (const Line& ln : lines) {
        if (blank(ln.text)) continue;
        Scanner sc(ln);
        std::string head = sc.word();
        if (head == "vars") {
            if (have_vars) sc.fail("duplicate vars declaration");
            while (!sc.at_end()) {
                std::size_t col = sc.column();
                std::string v = sc.identifier();
                if (std::find(vars.begin(), vars.end(), v) != vars.end())
                    throw ParseError{ln.number, col,
                                     "duplicate variable '" + v + "'"};
                vars.push_back(std::move(v));
            }
            if (vars.empty()) sc.fail("vars declaration needs at least one name");
            have_vars = true;
        } else if (head == "field") {
            std::string kind = sc.word();
            if (kind == "QQ") {
                field = FieldSpec{0};
            } else if (kind == "Fp") {
                std::size_t col = sc.column();
                mpz_class p = sc.natural();
                if (p >= (1u << 31) || !is_prime(p.get_ui()))
                    throw ParseError{ln.number, col,
                                     "modulus is not a prime below 2^31"};
                field = FieldSpec{static_cast<std::uint32_t>(p.get_ui())};
            } else {
                sc.fail("field must be QQ or Fp <prime>");
            }
            if (!sc.at_end()) sc.fail("unexpected trailing input");
        }
    }
    if (!have_vars) throw ParseError{1, 1, "missing vars declaration"};

    Ring ring = make_ring(vars, field, order);
    ProblemFile out{ring, {}, std::nullopt};

    // second pass: polynomials and the grading matrix
    for (std::size_t li = 0; li < lines.size(); ++li) {
        const Line& ln = lines[li];
        if (blank(ln.text)) continue;
        Scanner sc(ln);
        std::string head = sc.word();
        if (head == "vars" || head == "field") continue;
        if (head == "poly") {
            ExprParser ep(sc, ring);
            out.polynomials.push_back(ep.parse());
        } else if (head == "grading") {
            if (out.grading) sc.fail("duplicate grading declaration");
            mpz_class dz = sc.natural();
            std::size_t ncol = sc.column();
            mpz_class nz = sc.natural();
            if (!sc.at_end()) sc.fail("unexpected trailing input");
            std::size_t d = dz.get_ui(), n = nz.get_ui();
            if (n != vars.size())
                throw ParseError{ln.number, ncol,
                                 "grading width " + std::to_string(n) +
                                     " does not match " +
                                     std::to_string(vars.size()) +
                                     " variables"};
            std::vector<std::int64_t> entries;
            std::size_t rows_read = 0;
            while (rows_read < d) {
                ++li;
                if (li >= lines.size())
                    throw ParseError{ln.number, 1,
                                     "grading matrix: expected " +
                                         std::to_string(d) + " rows"};
                if (blank(lines[li].text)) continue;
                Scanner rs(lines[li]);
                for (std::size_t c = 0; c < n; ++c) {
                    if (rs.at_end()) rs.fail("grading row: expected " +
                                             std::to_string(n) + " entries");
                    entries.push_back(
                        static_cast<std::int64_t>(rs.integer().get_si()));
                }
                if (!rs.at_end()) rs.fail("grading row: too many entries");
                ++rows_read;
            }
            out.grading = GradingMatrix(d, n, std::move(entries));
        } else {
            Scanner err(ln);
            err.fail("unknown directive '" + head + "'");
        }
    }
    return out;
}

std::string print_problem(const ProblemFile& p) {
    std::ostringstream os;
    os << "vars";
    for (const auto& v : p.ring->variables()) os << " " << v;
    os << "\n";
    if (p.ring->field().is_rational())
        os << "field QQ\n";
    else
        os << "field Fp " << p.ring->field().p << "\n";
    for (const Polynomial& f : p.polynomials) os << "poly " << f.str() << "\n";
    if (p.grading) {
        os << "grading " << p.grading->rows() << " " << p.grading->cols()
           << "\n";
        for (std::size_t r = 0; r < p.grading->rows(); ++r) {
            for (std::size_t c = 0; c < p.grading->cols(); ++c)
                os << (c ? " " : "") << p.grading->at(r, c);
            os << "\n";
        }
    }
    return os.str();
}

}  // namespace agraded
