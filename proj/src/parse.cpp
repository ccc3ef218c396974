#include "affinecodes/parse.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace afc {

namespace {

// ---- expression parser ------------------------------------------------------
// Value domain: sparse multivariate polynomials over R with unbounded
// exponents; box reduction happens at the end.

struct RawPoly {
    std::map<Exp, RElem> terms;  // nonzero coefficients only
};

struct ExprParser {
    const std::string& s;
    size_t pos = 0;
    size_t line;
    RingPtr ring;
    uint32_t nvars;  // 0: scalar-only; variable Xk allowed for k <= nvars
    bool allow_w;

    ExprParser(const std::string& text, size_t line_no, RingPtr r, uint32_t nv, bool w)
        : s(text), line(line_no), ring(std::move(r)), nvars(nv), allow_w(w) {}

    [[noreturn]] void fail(const std::string& msg, size_t at) const {
        throw ParseError(line, at + 1, msg);
    }

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    RawPoly constant(const RElem& c) const {
        RawPoly p;
        if (!c.is_zero()) p.terms[Exp(nvars, 0)] = c;
        return p;
    }

    RawPoly add(const RawPoly& a, const RawPoly& b, bool sub) const {
        RawPoly out = a;
        for (const auto& [e, c] : b.terms) {
            auto it = out.terms.find(e);
            RElem v = it == out.terms.end() ? ring->zero() : it->second;
            v = sub ? v - c : v + c;
            if (v.is_zero())
                out.terms.erase(e);
            else
                out.terms[e] = v;
        }
        return out;
    }

    RawPoly mul(const RawPoly& a, const RawPoly& b) const {
        RawPoly out;
        for (const auto& [ea, ca] : a.terms)
            for (const auto& [eb, cb] : b.terms) {
                RElem c = ca * cb;
                if (c.is_zero()) continue;
                Exp e = exp_add(ea, eb);
                auto it = out.terms.find(e);
                RElem v = it == out.terms.end() ? c : it->second + c;
                if (v.is_zero())
                    out.terms.erase(e);
                else
                    out.terms[e] = v;
            }
        return out;
    }

    RawPoly neg(const RawPoly& a) const {
        RawPoly out;
        for (const auto& [e, c] : a.terms) out.terms[e] = -c;
        return out;
    }

    RawPoly pow(const RawPoly& a, uint64_t k) const {
        RawPoly acc = constant(ring->one());
        for (uint64_t i = 0; i < k; ++i) acc = mul(acc, a);
        return acc;
    }

    uint64_t parse_uint() {
        skip_ws();
        size_t start = pos;
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            fail("expected a number", pos);
        uint64_t v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            if (v > (uint64_t(1) << 40)) fail("number too large", start);
            ++pos;
        }
        return v;
    }

    RawPoly parse_base() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of expression", pos);
        char c = s[pos];
        if (c == '(') {
            ++pos;
            RawPoly e = parse_expr();
            if (peek() != ')') fail("expected ')'", pos);
            ++pos;
            return e;
        }
        if (c == '-') {
            ++pos;
            return neg(parse_factor());
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return constant(ring->from_int(static_cast<int64_t>(parse_uint() % ring->pt())));
        if (c == 'X' || c == 'x') {
            size_t at = pos;
            ++pos;
            uint32_t idx = 1;
            if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
                uint64_t v = 0;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
                    v = v * 10 + (s[pos++] - '0');
                idx = static_cast<uint32_t>(v);
            }
            if (nvars == 0) fail("variables are not allowed here", at);
            if (idx < 1 || idx > nvars)
                fail("variable X" + std::to_string(idx) + " out of range (r = " +
                         std::to_string(nvars) + ")",
                     at);
            RawPoly p;
            Exp e(nvars, 0);
            e[idx - 1] = 1;
            p.terms[e] = ring->one();
            return p;
        }
        if (c == 'w' && allow_w) {
            ++pos;
            return constant(ring->gen());
        }
        fail(std::string("unexpected character '") + c + "'", pos);
    }

    RawPoly parse_factor() {
        RawPoly b = parse_base();
        skip_ws();
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            uint64_t k = parse_uint();
            if (k > 4096) fail("exponent too large", pos);
            return pow(b, k);
        }
        return b;
    }

    bool starts_factor() {
        char c = peek();
        return c == '(' || std::isdigit(static_cast<unsigned char>(c)) || c == 'X' || c == 'x' ||
               (allow_w && c == 'w');
    }

    RawPoly parse_term() {
        RawPoly acc = parse_factor();
        for (;;) {
            skip_ws();
            if (pos < s.size() && s[pos] == '*') {
                ++pos;
                acc = mul(acc, parse_factor());
            } else if (starts_factor()) {
                acc = mul(acc, parse_factor());  // juxtaposition
            } else {
                return acc;
            }
        }
    }

    RawPoly parse_expr() {
        RawPoly acc = parse_term();
        for (;;) {
            char c = peek();
            if (c == '+') {
                ++pos;
                acc = add(acc, parse_term(), false);
            } else if (c == '-') {
                ++pos;
                acc = add(acc, parse_term(), true);
            } else {
                return acc;
            }
        }
    }

    RawPoly run() {
        RawPoly e = parse_expr();
        skip_ws();
        if (pos != s.size()) fail("trailing input", pos);
        return e;
    }
};

}  // namespace

AElem parse_poly(const std::string& text, const AlgebraPtr& spec, size_t line_no) {
    ExprParser p(text, line_no, spec->ring(), spec->num_vars(), spec->ring()->d() > 1);
    RawPoly raw = p.run();
    AElem out(spec);
    for (const auto& [e, c] : raw.terms) {
        if (spec->in_box(e))
            out.set_coeff(e, out.coeff(e) + c);
        else
            out += spec->reduce_monomial(e) * c;
    }
    return out;
}

RPoly parse_modulus_poly(const std::string& text, const RingPtr& zpt, size_t line_no) {
    ExprParser p(text, line_no, zpt, 1, false);
    RawPoly raw = p.run();
    size_t deg = 0;
    for (const auto& [e, c] : raw.terms) deg = std::max<size_t>(deg, e[0]);
    std::vector<RElem> coeffs(deg + 1, zpt->zero());
    for (const auto& [e, c] : raw.terms) coeffs[e[0]] = c;
    return RPoly(zpt, std::move(coeffs));
}

std::vector<std::string> split_tuple(const std::string& text, size_t line_no) {
    size_t i = 0, n = text.size();
    while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= n || text[i] != '(') throw ParseError(line_no, i + 1, "expected '('");
    ++i;
    std::vector<std::string> parts;
    std::string cur;
    int depth = 0;
    for (; i < n; ++i) {
        char c = text[i];
        if (c == '(') ++depth;
        if (c == ')') {
            if (depth == 0) {
                parts.push_back(cur);
                ++i;
                while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
                if (i != n) throw ParseError(line_no, i + 1, "trailing input after ')'");
                return parts;
            }
            --depth;
        }
        if (c == ',' && depth == 0) {
            parts.push_back(cur);
            cur.clear();
            continue;
        }
        cur += c;
    }
    throw ParseError(line_no, n, "missing ')'");
}

namespace {

std::vector<std::string> words_of(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> out;
    std::string w;
    while (is >> w) out.push_back(w);
    return out;
}

uint64_t to_uint(const std::string& w, size_t line_no, const char* what) {
    try {
        size_t used = 0;
        uint64_t v = std::stoull(w, &used);
        if (used != w.size()) throw std::invalid_argument("junk");
        return v;
    } catch (...) {
        throw ParseError(line_no, 1, std::string("invalid ") + what + ": " + w);
    }
}

}  // namespace

SpecFile parse_spec(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    size_t line_no = 0;

    RingPtr ring;
    std::optional<uint32_t> vars;
    OrderKind okind = OrderKind::lex;
    std::optional<std::vector<uint32_t>> precedence;
    std::vector<std::pair<std::string, size_t>> rel_texts;
    std::optional<size_t> index;
    std::vector<std::pair<std::string, size_t>> gen_texts;
    bool saw_order = false;

    while (std::getline(is, line)) {
        ++line_no;
        if (auto h = line.find('#'); h != std::string::npos) line = line.substr(0, h);
        auto ws = words_of(line);
        if (ws.empty()) continue;
        const std::string& key = ws[0];

        if (key == "ring") {
            if (ring) throw ParseError(line_no, 1, "duplicate ring declaration");
            if (ws.size() < 2) throw ParseError(line_no, 1, "ring needs a kind (Z or GR)");
            if (ws[1] == "Z") {
                if (ws.size() != 4) throw ParseError(line_no, 1, "usage: ring Z <p> <t>");
                ring = ChainRing::make(to_uint(ws[2], line_no, "p"),
                                       static_cast<uint32_t>(to_uint(ws[3], line_no, "t")), 1);
            } else if (ws[1] == "GR") {
                if (ws.size() < 5) throw ParseError(line_no, 1, "usage: ring GR <p> <t> <d> [modulus]");
                uint64_t p = to_uint(ws[2], line_no, "p");
                uint32_t t = static_cast<uint32_t>(to_uint(ws[3], line_no, "t"));
                uint32_t d = static_cast<uint32_t>(to_uint(ws[4], line_no, "d"));
                if (ws.size() == 5) {
                    ring = ChainRing::make(p, t, d);
                } else {
                    std::string mod_text;
                    for (size_t i = 5; i < ws.size(); ++i) mod_text += ws[i];
                    RPoly mod = parse_modulus_poly(mod_text, ChainRing::make(p, t, 1), line_no);
                    std::vector<int64_t> coeffs;
                    for (int64_t i = 0; i <= mod.degree(); ++i)
                        coeffs.push_back(static_cast<int64_t>(mod.coeff(i).coeff(0)));
                    try {
                        ring = ChainRing::make(p, t, d, coeffs);
                    } catch (const std::invalid_argument& e) {
                        throw ParseError(line_no, 1, e.what());
                    }
                }
            } else {
                throw ParseError(line_no, 1, "ring kind must be Z or GR");
            }
        } else if (key == "order") {
            if (saw_order) throw ParseError(line_no, 1, "duplicate order declaration");
            saw_order = true;
            if (ws.size() < 2) throw ParseError(line_no, 1, "order needs a name");
            try {
                okind = order_kind_from_name(ws[1]);
            } catch (const std::invalid_argument& e) {
                throw ParseError(line_no, 1, e.what());
            }
            if (ws.size() == 3) {
                // X1>X2>... most significant first
                std::vector<uint32_t> prec;
                std::string spec_text = ws[2];
                std::istringstream ps(spec_text);
                std::string tok;
                while (std::getline(ps, tok, '>')) {
                    if (tok.size() < 2 || (tok[0] != 'X' && tok[0] != 'x'))
                        throw ParseError(line_no, 1, "bad precedence entry: " + tok);
                    prec.push_back(static_cast<uint32_t>(to_uint(tok.substr(1), line_no, "variable")) - 1);
                }
                precedence = std::move(prec);
            } else if (ws.size() > 3) {
                throw ParseError(line_no, 1, "precedence list must not contain spaces");
            }
        } else if (key == "vars") {
            if (vars) throw ParseError(line_no, 1, "duplicate vars declaration");
            if (ws.size() != 2) throw ParseError(line_no, 1, "usage: vars <r>");
            vars = static_cast<uint32_t>(to_uint(ws[1], line_no, "r"));
            if (*vars < 1 || *vars > 16) throw ParseError(line_no, 1, "vars out of range");
        } else if (key == "rel") {
            std::string rest = line.substr(line.find("rel") + 3);
            rel_texts.emplace_back(rest, line_no);
        } else if (key == "index") {
            if (index) throw ParseError(line_no, 1, "duplicate index declaration");
            if (ws.size() != 2) throw ParseError(line_no, 1, "usage: index <l>");
            index = to_uint(ws[1], line_no, "l");
            if (*index < 1 || *index > 64) throw ParseError(line_no, 1, "index out of range");
        } else if (key == "gen") {
            std::string rest = line.substr(line.find("gen") + 3);
            gen_texts.emplace_back(rest, line_no);
        } else {
            throw ParseError(line_no, 1, "unknown key: " + key);
        }
    }

    if (!ring) throw ParseError(line_no, 1, "missing ring declaration");
    if (!vars) throw ParseError(line_no, 1, "missing vars declaration");
    if (rel_texts.size() != *vars)
        throw ParseError(line_no, 1, "expected " + std::to_string(*vars) + " rel lines, got " +
                                         std::to_string(rel_texts.size()));
    if (!index) throw ParseError(line_no, 1, "missing index declaration");

    MonomialOrder order;
    order.kind = okind;
    if (precedence) {
        if (precedence->size() != *vars)
            throw ParseError(line_no, 1, "precedence arity mismatch");
        order.precedence = *precedence;
    } else {
        order = MonomialOrder::standard(okind, *vars);
    }

    // relations: each univariate in its own variable, monic
    std::vector<RPoly> rels;
    for (uint32_t j = 0; j < *vars; ++j) {
        auto [txt, ln] = rel_texts[j];
        ExprParser p(txt, ln, ring, *vars, ring->d() > 1);
        RawPoly raw = p.run();
        int64_t var = -1;
        size_t deg = 0;
        for (const auto& [e, c] : raw.terms) {
            for (uint32_t k = 0; k < *vars; ++k) {
                if (e[k] == 0) continue;
                if (var == -1) var = k;
                if (static_cast<int64_t>(k) != var)
                    throw ParseError(ln, 1, "relation mixes variables");
                deg = std::max<size_t>(deg, e[k]);
            }
        }
        if (var == -1 || static_cast<uint32_t>(var) != j)
            throw ParseError(ln, 1, "relation " + std::to_string(j + 1) + " must be univariate in X" +
                                        std::to_string(j + 1));
        std::vector<RElem> coeffs(deg + 1, ring->zero());
        for (const auto& [e, c] : raw.terms) coeffs[e[j]] = c;
        RPoly t(ring, std::move(coeffs));
        if (!t.is_monic()) throw ParseError(ln, 1, "relation must be monic");
        rels.push_back(std::move(t));
    }

    SpecFile sf;
    sf.ring = ring;
    try {
        sf.algebra = AlgebraSpec::make(ring, rels, order);
    } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, 1, e.what());
    }
    sf.index = *index;
    for (auto& [txt, ln] : gen_texts) {
        auto parts = split_tuple(txt, ln);
        if (parts.size() != sf.index)
            throw ParseError(ln, 1, "generator arity " + std::to_string(parts.size()) +
                                        " does not match index " + std::to_string(sf.index));
        Word w;
        for (const auto& part : parts) w.push_back(parse_poly(part, sf.algebra, ln));
        sf.generators.push_back(std::move(w));
    }
    return sf;
}

std::string print_spec(const SpecFile& sf) {
    std::ostringstream os;
    const auto& ring = *sf.ring;
    if (ring.d() == 1) {
        os << "ring Z " << ring.p() << " " << ring.t() << "\n";
    } else {
        os << "ring GR " << ring.p() << " " << ring.t() << " " << ring.d() << " ";
        RPoly mod = RPoly::from_ints(ChainRing::make(ring.p(), ring.t(), 1), [&] {
            std::vector<int64_t> c;
            for (uint64_t v : ring.modulus()) c.push_back(static_cast<int64_t>(v));
            return c;
        }());
        os << mod.to_string("X") << "\n";
    }
    const auto& spec = *sf.algebra;
    os << "order " << spec.order().name();
    os << " ";
    for (size_t i = 0; i < spec.order().precedence.size(); ++i)
        os << (i ? ">" : "") << "X" << (spec.order().precedence[i] + 1);
    os << "\n";
    os << "vars " << spec.num_vars() << "\n";
    for (uint32_t j = 0; j < spec.num_vars(); ++j)
        os << "rel " << spec.relations()[j].to_string("X" + std::to_string(j + 1)) << "\n";
    os << "index " << sf.index << "\n";
    for (const auto& g : sf.generators) os << "gen " << word_to_string(g) << "\n";
    return os.str();
}

std::string matrix_to_string(const std::vector<Word>& rows) {
    std::ostringstream os;
    for (const auto& r : rows) os << word_to_string(r) << "\n";
    return os.str();
}

}  // namespace afc
