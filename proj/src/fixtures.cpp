#include "prym5/genus2.hpp"

#include <sstream>

namespace prym5 {

namespace {

std::vector<std::string> content_lines(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    std::vector<std::string> out;
    while (std::getline(is, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        out.push_back(line);
    }
    return out;
}

std::vector<long long> integers(const std::string& s) {
    std::istringstream is(s);
    std::vector<long long> out;
    std::string tok;
    while (is >> tok) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != tok.size()) throw std::invalid_argument("expected an integer, got '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

GF finite_field(const std::string& tag_line) {
    FieldTag tag = parse_field_tag(tag_line);
    if (tag.rational) throw std::invalid_argument("fixture must be over a finite field");
    return GF(tag.p, tag.k);
}

// "NAME: value" with the expected name.
std::string field_value(const std::string& line, const std::string& name) {
    auto colon = line.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("expected '" + name + ":' line");
    std::string key = line.substr(0, colon);
    key.erase(0, key.find_first_not_of(" \t"));
    key.erase(key.find_last_not_of(" \t") + 1);
    if (key != name) throw std::invalid_argument("expected '" + name + ":' line, got '" + key + "'");
    return line.substr(colon + 1);
}

}  // namespace

Genus2Fixture parse_genus2(const std::string& text) {
    auto lines = content_lines(text);
    if (lines.size() < 2 || lines.size() > 3)
        throw std::invalid_argument("genus-2 fixture needs a field tag, seven coefficients and an optional divisor");
    GF F = finite_field(lines[0]);
    auto c = integers(lines[1]);
    if (c.size() != 7) throw std::invalid_argument("genus-2 fixture needs seven coefficients f0..f6");
    std::vector<Fq> coeffs;
    for (auto v : c) coeffs.push_back(F.of(v));
    Genus2Fixture fx{make_genus2(F, coeffs), {}};
    if (lines.size() == 3) {
        std::istringstream is(lines[2]);
        std::string kind;
        is >> kind;
        if (kind == "2K+D") {
            std::string rest;
            std::getline(is, rest);
            auto d = integers(rest);
            if (d.size() != 4) throw std::invalid_argument("2K+D needs x1 y1 x2 y2");
            fx.divisor.kind = DivisorKind::two_k_plus_d;
            fx.divisor.D[0] = {false, F.of(d[0]), F.of(d[1])};
            fx.divisor.D[1] = {false, F.of(d[2]), F.of(d[3])};
        } else if (kind != "3K") {
            throw std::invalid_argument("divisor must be 3K or 2K+D, got '" + kind + "'");
        }
    }
    return fx;
}

EllipticUnion parse_elliptic_union(const std::string& text) {
    auto lines = content_lines(text);
    if (lines.size() != 5) throw std::invalid_argument("elliptic union fixture needs a tag, E1, P1, E2, P2");
    GF F = finite_field(lines[0]);
    auto point = [&](const std::string& line, const char* name) {
        auto v = integers(field_value(line, name));
        if (v.size() != 3) throw std::invalid_argument("marked point needs three coordinates");
        return PointF({F.of(v[0]), F.of(v[1]), F.of(v[2])});
    };
    PolyF E1 = parse_poly(F, 3, field_value(lines[1], "E1"));
    PolyF E2 = parse_poly(F, 3, field_value(lines[3], "E2"));
    return elliptic_union_web(E1, point(lines[2], "P1"), E2, point(lines[4], "P2"));
}

}  // namespace prym5
