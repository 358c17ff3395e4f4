#include "planar/io.hpp"

#include <charconv>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "planar/errors.hpp"

namespace planar {

namespace {

struct Token {
    std::string text;
    std::size_t column;
};

struct Line {
    std::size_t number;
    std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view raw = text.substr(start, end - start);
        ++number;
        if (!raw.empty() && raw.back() == '\r')
            raw.remove_suffix(1);
        if (auto hash = raw.find('#'); hash != std::string_view::npos)
            raw = raw.substr(0, hash);

        Line line{number, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t'))
                ++i;
            const std::size_t begin = i;
            while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t')
                ++i;
            if (i > begin)
                line.tokens.push_back({std::string(raw.substr(begin, i - begin)), begin + 1});
        }
        if (!line.tokens.empty())
            lines.push_back(std::move(line));
        if (end == text.size())
            break;
        start = end + 1;
    }
    return lines;
}

std::optional<Int> to_int(const std::string& s) {
    std::string_view v = s;
    if (!v.empty() && v.front() == '+')
        v.remove_prefix(1);
    Int out = 0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size() || v.empty())
        return std::nullopt;
    return out;
}

Int expect_int(const Line& line, std::size_t index, const char* what) {
    if (index >= line.tokens.size())
        throw ParseError(line.number, line.tokens.back().column, std::string("missing ") + what);
    const Token& t = line.tokens[index];
    const auto v = to_int(t.text);
    if (!v)
        throw ParseError(line.number, t.column, std::string("expected integer ") + what + ", got '" + t.text + "'");
    return *v;
}

int expect_sign(const Line& line, std::size_t index, const char* what) {
    if (index >= line.tokens.size())
        throw ParseError(line.number, line.tokens.back().column, std::string("missing ") + what);
    const Token& t = line.tokens[index];
    if (t.text == "+" || t.text == "+1" || t.text == "1")
        return 1;
    if (t.text == "-" || t.text == "-1")
        return -1;
    throw ParseError(line.number, t.column, std::string("expected ") + what + " '+' or '-', got '" + t.text + "'");
}

void expect_arity(const Line& line, std::size_t count) {
    if (line.tokens.size() > count)
        throw ParseError(line.number, line.tokens[count].column, "unexpected token '" + line.tokens[count].text + "'");
    if (line.tokens.size() < count)
        throw ParseError(line.number, line.tokens.back().column, "too few fields for '" + line.tokens[0].text + "'");
}

int to_hole(const Line& line, std::size_t index) {
    const Int v = expect_int(line, index, "hole index");
    if (v < 1 || v > 1'000'000)
        throw Error(Errc::HoleOutOfRange, "hole index " + std::to_string(v) + " on line " + std::to_string(line.number));
    return static_cast<int>(v);
}

}  // namespace

OpenBook parse_openbook(std::string_view text) {
    const auto lines = tokenize(text);
    if (lines.empty())
        throw ParseError(1, 1, "expected 'page <holes>'");
    const Line& head = lines.front();
    if (head.tokens[0].text != "page")
        throw ParseError(head.number, head.tokens[0].column, "expected 'page', got '" + head.tokens[0].text + "'");
    expect_arity(head, 2);
    const Int h = expect_int(head, 1, "hole count");
    if (h < 0 || h > 1'000'000)
        throw ParseError(head.number, head.tokens[1].column, "hole count out of range");

    OpenBook ob(make_page(static_cast<int>(h)));
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const Line& line = lines[k];
        if (line.tokens[0].text != "twist")
            throw ParseError(line.number, line.tokens[0].column, "expected 'twist', got '" + line.tokens[0].text + "'");
        const int sign = expect_sign(line, 1, "twist sign");
        if (line.tokens.size() < 3)
            throw Error(Errc::EmptyCurve, "twist on line " + std::to_string(line.number) + " encloses no holes");
        std::vector<int> holes;
        for (std::size_t i = 2; i < line.tokens.size(); ++i)
            holes.push_back(to_hole(line, i));
        ob = append_twist(ob, make_curve(ob.page(), std::move(holes)), sign);
    }
    return ob;
}

ContactSurgeryRecord parse_surgery(std::string_view text) {
    std::vector<SurgeryComponent> comps;
    std::map<std::pair<std::size_t, std::size_t>, std::pair<Int, std::size_t>> links;

    const auto lines = tokenize(text);
    for (const Line& line : lines) {
        const std::string& key = line.tokens[0].text;
        if (key == "comp") {
            expect_arity(line, 4);
            SurgeryComponent c;
            c.tb = expect_int(line, 1, "tb");
            c.rot = expect_int(line, 2, "rot");
            c.coeff = expect_sign(line, 3, "contact coefficient");
            comps.push_back(c);
        } else if (key == "lk") {
            expect_arity(line, 4);
            const Int i = expect_int(line, 1, "component index");
            const Int j = expect_int(line, 2, "component index");
            const Int v = expect_int(line, 3, "linking number");
            if (i < 1 || j < 1)
                throw ParseError(line.number, line.tokens[1].column, "component indices start at 1");
            if (i == j)
                throw ParseError(line.number, line.tokens[1].column, "a component has no linking number with itself");
            const auto key_ij = std::make_pair(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
            if (auto it = links.find(key_ij); it != links.end() && it->second.first != v)
                throw ParseError(line.number, line.tokens[3].column, "conflicting duplicate linking number");
            links[key_ij] = {v, line.number};
        } else {
            throw ParseError(line.number, line.tokens[0].column, "expected 'comp' or 'lk', got '" + key + "'");
        }
    }

    const std::size_t n = comps.size();
    IntMatrix m(n, n);
    std::vector<std::vector<bool>> seen(n, std::vector<bool>(n, false));
    for (const auto& [ij, value] : links) {
        const auto [i, j] = ij;
        if (i > n || j > n)
            throw ParseError(value.second, 1, "linking refers to component " + std::to_string(std::max(i, j)) +
                                                  " but only " + std::to_string(n) + " exist");
        m(i - 1, j - 1) = value.first;
        seen[i - 1][j - 1] = true;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (seen[i][j] && !seen[j][i])
                m(j, i) = m(i, j);
    return ContactSurgeryRecord(std::move(comps), std::move(m));
}

IntersectionForm parse_form(std::string_view text) {
    const auto lines = tokenize(text);
    if (lines.empty())
        throw ParseError(1, 1, "expected matrix size");
    const Line& head = lines.front();
    expect_arity(head, 1);
    const Int n = expect_int(head, 0, "matrix size");
    if (n < 0 || n > 4096)
        throw ParseError(head.number, head.tokens[0].column, "matrix size out of range");
    const auto size = static_cast<std::size_t>(n);
    if (lines.size() < size + 1)
        throw ParseError(lines.back().number + 1, 1, "expected " + std::to_string(size) + " matrix rows");

    IntMatrix m(size, size);
    for (std::size_t r = 0; r < size; ++r) {
        const Line& line = lines[r + 1];
        expect_arity(line, size);
        for (std::size_t c = 0; c < size; ++c)
            m(r, c) = expect_int(line, c, "matrix entry");
    }

    int boundary = 1;
    bool homology_sphere = false;
    for (std::size_t k = size + 1; k < lines.size(); ++k) {
        const Line& line = lines[k];
        const std::string& key = line.tokens[0].text;
        expect_arity(line, 2);
        if (key == "boundary") {
            const Int b = expect_int(line, 1, "boundary component count");
            if (b < 1 || b > 1'000'000)
                throw ParseError(line.number, line.tokens[1].column, "boundary component count must be positive");
            boundary = static_cast<int>(b);
        } else if (key == "homology-sphere") {
            const std::string& v = line.tokens[1].text;
            if (v != "true" && v != "false")
                throw ParseError(line.number, line.tokens[1].column, "expected 'true' or 'false'");
            homology_sphere = v == "true";
        } else {
            throw ParseError(line.number, line.tokens[0].column, "unexpected '" + key + "'");
        }
    }
    return IntersectionForm(std::move(m), boundary, homology_sphere);
}

std::string print_openbook(const OpenBook& ob) {
    std::string s = "page " + std::to_string(ob.holes()) + "\n";
    for (const auto& letter : ob.word()) {
        s += letter.sign > 0 ? "twist +" : "twist -";
        for (int h : letter.curve.enclosed())
            s += " " + std::to_string(h);
        s += "\n";
    }
    return s;
}

std::string print_surgery(const ContactSurgeryRecord& r) {
    std::string s;
    for (const auto& c : r.components())
        s += "comp " + std::to_string(c.tb) + " " + std::to_string(c.rot) + (c.coeff > 0 ? " +1\n" : " -1\n");
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = i + 1; j < r.size(); ++j)
            if (r.linking()(i, j) != 0)
                s += "lk " + std::to_string(i + 1) + " " + std::to_string(j + 1) + " " +
                     std::to_string(r.linking()(i, j)) + "\n";
    return s;
}

std::string print_form(const IntersectionForm& f) {
    const IntMatrix& m = f.matrix();
    std::string s = std::to_string(m.rows()) + "\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j)
            s += (j ? " " : "") + std::to_string(m(i, j));
        s += "\n";
    }
    s += "boundary " + std::to_string(f.boundary_components()) + "\n";
    s += std::string("homology-sphere ") + (f.boundary_is_homology_sphere() ? "true" : "false") + "\n";
    return s;
}

Document parse_document(std::string_view text) {
    const auto lines = tokenize(text);
    if (!lines.empty()) {
        const std::string& first = lines.front().tokens.front().text;
        if (first == "page")
            return {parse_openbook(text)};
        if (to_int(first))
            return {parse_form(text)};
    }
    return {parse_surgery(text)};
}

std::string print_document(const Document& d) {
    return std::visit(
        [](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, OpenBook>)
                return print_openbook(v);
            else if constexpr (std::is_same_v<T, ContactSurgeryRecord>)
                return print_surgery(v);
            else
                return print_form(v);
        },
        d.payload);
}

}  // namespace planar
