#include "prym5/poly.hpp"

#include <cctype>

namespace prym5 {

namespace {

std::string strip(const std::string& s) {
    std::string r;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) r.push_back(c);
    return r;
}

// Split at top-level '+' after turning binary '-' into "+-".
std::vector<std::string> split_terms(const std::string& s) {
    std::string t;
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == '-' && depth == 0 && i > 0 && s[i - 1] != '+' && s[i - 1] != '*' && s[i - 1] != '^' &&
            s[i - 1] != '/')
            t.push_back('+');
        t.push_back(c);
    }
    if (depth != 0) throw std::invalid_argument("unbalanced parentheses in polynomial text");
    std::vector<std::string> out;
    std::string cur;
    depth = 0;
    for (char c : t) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == '+' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<std::string> split_factors(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == '*' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

long long parse_int(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty number");
    std::size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("bad integer '" + s + "'");
    return v;
}

Fq parse_gf_scalar(const GF& F, const std::string& s);

// Element of F written as a polynomial in the generator 'a'.
Fq parse_gf_element(const GF& F, const std::string& s) {
    Fq acc = F.zero();
    for (auto& term : split_terms(s)) {
        if (term.empty()) throw std::invalid_argument("empty term in field element");
        Fq t = F.one();
        bool neg = false;
        std::string body = term;
        if (body[0] == '-') {
            neg = true;
            body = body.substr(1);
        }
        for (auto& f : split_factors(body)) t = t * parse_gf_scalar(F, f);
        acc += neg ? -t : t;
    }
    return acc;
}

Fq parse_gf_scalar(const GF& F, const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty factor");
    if (s.front() == '(') {
        if (s.back() != ')') throw std::invalid_argument("bad parenthesised element '" + s + "'");
        return parse_gf_element(F, s.substr(1, s.size() - 2));
    }
    if (s[0] == 'a') {
        if (F.degree() == 1) throw std::invalid_argument("generator 'a' used in a prime field");
        if (s == "a") return F.gen();
        if (s.size() > 2 && s[1] == '^') return F.gen().pow(static_cast<std::uint64_t>(parse_int(s.substr(2))));
        throw std::invalid_argument("bad generator power '" + s + "'");
    }
    return F.of(parse_int(s));
}

Rational parse_q_scalar(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty factor");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigRational(BigInt(s)));
        BigInt num(s.substr(0, slash)), den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("bad rational '" + s + "'");
    }
}

template <class S, class Dom, class ParseScalar>
HomogPoly<S> parse_generic(Dom dom, int nvars, const std::string& text, int degree_if_zero, ParseScalar scalar) {
    std::string s = strip(text);
    if (s.empty()) throw std::invalid_argument("empty polynomial text");
    std::vector<typename HomogPoly<S>::Term> terms;
    int degree = -1;
    for (auto& term : split_terms(s)) {
        if (term.empty()) throw std::invalid_argument("empty term in '" + text + "'");
        S c = dom.one();
        bool neg = false;
        std::string body = term;
        if (body[0] == '-') {
            neg = true;
            body = body.substr(1);
        }
        Monomial m;
        for (auto& f : split_factors(body)) {
            if (f.size() >= 2 && f[0] == 'x' && std::isdigit(static_cast<unsigned char>(f[1]))) {
                auto caret = f.find('^');
                int var = static_cast<int>(parse_int(f.substr(1, caret == std::string::npos ? std::string::npos : caret - 1)));
                int e = caret == std::string::npos ? 1 : static_cast<int>(parse_int(f.substr(caret + 1)));
                if (var < 0 || var >= nvars) throw std::invalid_argument("variable x" + std::to_string(var) + " out of range");
                if (e < 0 || m.e[var] + e > 255) throw std::invalid_argument("bad exponent");
                m.e[var] = static_cast<std::uint8_t>(m.e[var] + e);
            } else {
                c = c * scalar(f);
            }
        }
        if (neg) c = -c;
        if (c.is_zero() && m.degree() == 0 && degree < 0) continue;  // a literal "0"
        if (degree < 0) degree = m.degree();
        if (m.degree() != degree) throw std::invalid_argument("polynomial is not homogeneous: '" + text + "'");
        terms.push_back({m, c});
    }
    if (degree < 0) degree = degree_if_zero;
    return HomogPoly<S>::from_terms(dom, nvars, degree, std::move(terms));
}

}  // namespace

std::string FieldTag::str() const {
    if (rational) return "QQ";
    if (k == 1) return "GF(" + std::to_string(p) + ")";
    return "GF(" + std::to_string(p) + "^" + std::to_string(k) + ")";
}

FieldTag parse_field_tag(const std::string& raw) {
    std::string s = strip(raw);
    FieldTag t;
    if (s == "QQ") {
        t.rational = true;
        return t;
    }
    if (s.size() < 5 || s.compare(0, 3, "GF(") != 0 || s.back() != ')')
        throw std::invalid_argument("bad field tag '" + raw + "'");
    std::string inner = s.substr(3, s.size() - 4);
    auto caret = inner.find('^');
    t.p = static_cast<unsigned>(parse_int(inner.substr(0, caret)));
    t.k = caret == std::string::npos ? 1 : static_cast<unsigned>(parse_int(inner.substr(caret + 1)));
    if (!is_prime(t.p) || t.p > 257 || t.k < 1 || t.k > 4) throw std::invalid_argument("unsupported field '" + raw + "'");
    return t;
}

PolyF parse_poly(const GF& F, int nvars, const std::string& text, int degree_if_zero) {
    return parse_generic<Fq>(F, nvars, text, degree_if_zero, [&](const std::string& f) { return parse_gf_scalar(F, f); });
}

PolyQ parse_poly(QQ q, int nvars, const std::string& text, int degree_if_zero) {
    return parse_generic<Rational>(q, nvars, text, degree_if_zero, parse_q_scalar);
}

std::string tagged(const PolyF& p) { return p.domain().tag() + ":" + p.str(); }
std::string tagged(const PolyQ& p) { return "QQ:" + p.str(); }

}  // namespace prym5
