#include "lcslab/parse.hpp"

#include "lcslab/errors.hpp"

#include <json.hpp>

#include <cctype>
#include <sstream>

namespace lcslab {

namespace {

struct Cursor {
    const std::string& s;
    std::size_t pos = 0;
    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        if (pos >= s.size()) throw SyntaxError("unexpected end of input", pos);
        return s[pos];
    }
    char take() {
        char c = peek();
        ++pos;
        return c;
    }
    void expect(char c) {
        if (peek() != c) throw SyntaxError(std::string("expected '") + c + "'", pos);
        ++pos;
    }
    long integer() {
        skip_ws();
        std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
        std::size_t digits = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == digits) throw SyntaxError("expected an integer", start);
        return std::stol(s.substr(start, pos - start));
    }
};

// one slot of a Salamon string: list of (i, j, integer coefficient)
std::vector<std::tuple<int, int, long>> parse_slot(Cursor& cur) {
    std::vector<std::tuple<int, int, long>> terms;
    cur.skip_ws();
    // a bare "0" slot (only when followed by , or ))
    if (cur.peek() == '0') {
        std::size_t save = cur.pos;
        ++cur.pos;
        cur.skip_ws();
        if (cur.pos < cur.s.size() && (cur.s[cur.pos] == ',' || cur.s[cur.pos] == ')')) return terms;
        cur.pos = save;
    }
    bool first = true;
    while (true) {
        cur.skip_ws();
        long sign = 1;
        if (cur.peek() == '+' || cur.peek() == '-') {
            sign = cur.take() == '-' ? -1 : 1;
        } else if (!first) {
            break;
        }
        long coeff = 1;
        cur.skip_ws();
        // optional integer coefficient followed by '*', else digit pair
        if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
            std::size_t save = cur.pos;
            long v = cur.integer();
            cur.skip_ws();
            if (cur.pos < cur.s.size() && cur.s[cur.pos] == '*') {
                ++cur.pos;
                coeff = v;
            } else {
                cur.pos = save;
            }
        }
        int i, j;
        cur.skip_ws();
        if (cur.peek() == '[') { // extended [i,j] for indices >= 10
            cur.expect('[');
            i = static_cast<int>(cur.integer());
            cur.expect(',');
            j = static_cast<int>(cur.integer());
            cur.expect(']');
        } else {
            char a = cur.take();
            if (!std::isdigit(static_cast<unsigned char>(a)))
                throw SyntaxError("expected an index digit", cur.pos - 1);
            char b = cur.take();
            if (!std::isdigit(static_cast<unsigned char>(b)))
                throw SyntaxError("expected an index digit", cur.pos - 1);
            i = a - '0';
            j = b - '0';
        }
        terms.emplace_back(i, j, sign * coeff);
        first = false;
        cur.skip_ws();
        if (cur.pos >= cur.s.size() || (cur.s[cur.pos] != '+' && cur.s[cur.pos] != '-')) break;
    }
    return terms;
}

} // namespace

LieAlgebra parse_salamon(const std::string& text, const std::string& name) {
    Cursor cur{text};
    cur.expect('(');
    std::vector<std::vector<std::tuple<int, int, long>>> slots;
    while (true) {
        slots.push_back(parse_slot(cur));
        cur.skip_ws();
        if (cur.peek() == ',') {
            cur.take();
            continue;
        }
        cur.expect(')');
        break;
    }
    if (!cur.eof()) throw SyntaxError("trailing characters", cur.pos);
    int n = static_cast<int>(slots.size());
    if (n < 1 || n > LieAlgebra::max_dim)
        throw IndexOutOfRange("Salamon string needs 1 to 8 slots, got " + std::to_string(n));
    // c^k_{ij} = -(coefficient of e^{ij} in d e^k)
    std::vector<BracketEntry> entries;
    for (int k = 1; k <= n; ++k)
        for (const auto& [i, j, c] : slots[k - 1]) {
            if (i < 1 || j < 1 || i > n || j > n || i == j)
                throw IndexOutOfRange("index pair " + std::to_string(i) + "," + std::to_string(j) +
                                      " out of range for dimension " + std::to_string(n));
            if (i < j)
                entries.push_back({i, j, {{k, Rat(-c)}}});
            else
                entries.push_back({j, i, {{k, Rat(c)}}});
        }
    return LieAlgebra::validate(n, entries, name.empty() ? text : name);
}

std::optional<std::string> print_salamon(const LieAlgebra& g) {
    int n = g.dim();
    std::ostringstream os;
    os << "(";
    for (int k = 1; k <= n; ++k) {
        if (k > 1) os << ",";
        bool any = false;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                Rat coeff = -g.c(i, j, k); // d e^k coefficient of e^{ij}
                if (coeff.is_zero()) continue;
                if (!coeff.is_integer()) return std::nullopt;
                mpz_class v = coeff.num();
                if (any && v > 0) os << "+";
                if (v == -1)
                    os << "-";
                else if (v != 1)
                    os << v.get_str() << "*";
                os << i << j;
                any = true;
            }
        if (!any) os << "0";
    }
    os << ")";
    return os.str();
}

KForm parse_form(const std::string& text, int n, int degree, int display_offset) {
    Cursor cur{text};
    KForm out(n, degree);
    cur.skip_ws();
    if (cur.peek() == '0') {
        ++cur.pos;
        if (!cur.eof()) throw SyntaxError("trailing characters after 0", cur.pos);
        return out;
    }
    bool first = true;
    while (!cur.eof()) {
        long sign = 1;
        cur.skip_ws();
        if (cur.peek() == '+' || cur.peek() == '-') {
            sign = cur.take() == '-' ? -1 : 1;
        } else if (!first) {
            throw SyntaxError("expected '+' or '-'", cur.pos);
        }
        long coeff = 1;
        cur.skip_ws();
        if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
            coeff = cur.integer();
            cur.expect('*');
        }
        if (cur.take() != 'e') throw SyntaxError("expected a monomial 'e...'", cur.pos - 1);
        std::vector<int> idx;
        while (cur.pos < cur.s.size() && std::isdigit(static_cast<unsigned char>(cur.s[cur.pos]))) {
            int display = cur.s[cur.pos] - '0';
            int internal = display + 1 - display_offset;
            if (internal < 1 || internal > n)
                throw IndexOutOfRange("index " + std::to_string(display) +
                                      " out of range for dimension " + std::to_string(n));
            idx.push_back(internal);
            ++cur.pos;
        }
        if (static_cast<int>(idx.size()) != degree)
            throw SyntaxError("monomial of degree " + std::to_string(idx.size()) +
                                  " where degree " + std::to_string(degree) + " is required",
                              cur.pos);
        KForm term = KForm::monomial(n, idx, Rat(sign * coeff));
        out = out + term;
        first = false;
    }
    return out;
}

LieAlgebra algebra_from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw SyntaxError(std::string("invalid JSON: ") + e.what(), 0);
    }
    if (!j.contains("dim") || !j["dim"].is_number_integer())
        throw SyntaxError("JSON algebra needs an integer \"dim\"", 0);
    int n = j["dim"].get<int>();
    int offset = j.value("basis_offset", 1);
    if (offset != 0 && offset != 1) throw SyntaxError("basis_offset must be 0 or 1", 0);
    std::string name = j.value("name", std::string("json"));
    std::vector<BracketEntry> entries;
    for (const auto& b : j.value("brackets", nlohmann::json::array())) {
        int x = b.at("x").get<int>() + 1 - offset;
        int y = b.at("y").get<int>() + 1 - offset;
        BracketEntry e{x, y, {}};
        for (const auto& [key, val] : b.at("out").items()) {
            int k = std::stoi(key) + 1 - offset;
            Rat r = val.is_number_integer() ? Rat(val.get<long>())
                                            : Rat::from_string(val.get<std::string>());
            e.out.emplace_back(k, r);
        }
        if (x < 1 || y < 1 || x > n || y > n || x >= y)
            throw IndexOutOfRange("bracket indices out of range in JSON algebra");
        entries.push_back(std::move(e));
    }
    return LieAlgebra::validate(n, entries, name, offset);
}

std::string algebra_to_json_text(const LieAlgebra& g) {
    nlohmann::json j;
    j["dim"] = g.dim();
    j["basis_offset"] = g.display_offset();
    j["name"] = g.name();
    auto brackets = nlohmann::json::array();
    int off = g.display_offset();
    for (int i = 1; i <= g.dim(); ++i)
        for (int jx = i + 1; jx <= g.dim(); ++jx) {
            QVec v = g.basis_bracket(i, jx);
            if (is_zero(v)) continue;
            nlohmann::json out;
            for (int k = 0; k < g.dim(); ++k)
                if (!v[k].is_zero()) out[std::to_string(k + off)] = v[k].str();
            brackets.push_back({{"x", i - 1 + off}, {"y", jx - 1 + off}, {"out", out}});
        }
    j["brackets"] = brackets;
    return j.dump();
}

} // namespace lcslab
