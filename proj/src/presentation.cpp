#include "coho/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "coho/errors.hpp"

namespace coho {

void Presentation::refresh_derived() {
    degrees.clear();
    parity_odd.clear();
    for (const GeneratorInfo& g : gens) {
        degrees.push_back(g.degree);
        parity_odd.push_back(g.odd());
    }
    if (beta.size() < gens.size())
        beta.resize(gens.size());
    if (p1.size() < gens.size())
        p1.resize(gens.size());
}

int Presentation::gen_index(std::string_view name) const {
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (gens[i].name == name)
            return int(i);
    return -1;
}

namespace {

bool is_prime(Coeff n) {
    if (n < 2)
        return false;
    for (Coeff d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

bool valid_name(std::string_view s) {
    if (s.empty() || !(std::isalpha((unsigned char)s[0]) || s[0] == '_'))
        return false;
    std::size_t i = 0;
    while (i < s.size() && (std::isalnum((unsigned char)s[i]) || s[i] == '_'))
        ++i;
    while (i < s.size() && s[i] == '\'')
        ++i;
    return i == s.size();
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace((unsigned char)s.front()))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace((unsigned char)s.back()))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            parts.push_back(trim(s.substr(start, i - start)));
            start = i + 1;
        }
    }
    return parts;
}

/* One product term "c*g1^e1*g2*..."; factors Koszul-collected in written order. */
void parse_term(const Presentation& pres, std::string_view text, int line, PolyBuilder& acc) {
    auto fail = [&](const std::string& msg) -> void { throw ParseError(line, msg); };
    std::vector<std::string_view> factors = split(text, '*');
    Coeff coeff = 1;
    Monomial mon(pres.ngens());
    bool negative = false;
    bool first = true;
    for (std::string_view f : factors) {
        if (f.empty())
            fail("empty factor in term '" + std::string(text) + "'");
        if (first && std::isdigit((unsigned char)f[0])) {
            first = false;
            Coeff v = 0;
            for (char ch : f) {
                if (!std::isdigit((unsigned char)ch))
                    fail("bad coefficient '" + std::string(f) + "'");
                v = v * 10 + Coeff(ch - '0');
                if (v > 1000)
                    break;
            }
            if (v < 1 || v >= pres.p)
                fail("coefficient " + std::string(f) + " outside [1, " + std::to_string(pres.p) + ")");
            coeff = v;
            continue;
        }
        first = false;
        std::string_view name = f;
        Expo exp = 1;
        if (auto caret = f.find('^'); caret != std::string_view::npos) {
            name = trim(f.substr(0, caret));
            std::string_view es = trim(f.substr(caret + 1));
            if (es.empty())
                fail("missing exponent in '" + std::string(f) + "'");
            int v = 0;
            for (char ch : es) {
                if (!std::isdigit((unsigned char)ch))
                    fail("bad exponent '" + std::string(es) + "'");
                v = v * 10 + (ch - '0');
                if (v > 10000)
                    fail("exponent too large in '" + std::string(f) + "'");
            }
            if (v < 1)
                fail("exponent must be positive in '" + std::string(f) + "'");
            exp = Expo(v);
        }
        int gi = pres.gen_index(name);
        if (gi < 0)
            fail("unknown generator '" + std::string(name) + "'");
        if (pres.parity_odd[gi] && exp > 1)
            fail("odd generator '" + std::string(name) + "' squared");
        auto prod = mon_mul(mon, Monomial::generator(pres.ngens(), std::size_t(gi), exp),
                            pres.parity_odd);
        if (!prod)
            fail("odd generator '" + std::string(name) + "' squared");
        mon = std::move(prod->mon);
        negative = negative != prod->negative;
    }
    acc.add(std::move(mon), negative ? negm(coeff, pres.p) : coeff);
}

Polynomial parse_poly(const Presentation& pres, std::string_view text, int line) {
    text = trim(text);
    if (text == "0")
        return Polynomial();
    PolyBuilder acc(pres.p);
    for (std::string_view term : split(text, '+')) {
        if (term.empty())
            throw ParseError(line, "empty term in polynomial '" + std::string(text) + "'");
        parse_term(pres, term, line, acc);
    }
    return acc.build();
}

}  // namespace

Polynomial poly_from_string(const Presentation& pres, std::string_view text) {
    return parse_poly(pres, text, 0);
}

Presentation parse_presentation(std::string_view text) {
    Presentation pres;
    pres.p = 0;
    bool in_header = true;
    std::vector<std::string_view> lines = split(text, '\n');
    for (int ln = 1; ln <= int(lines.size()); ++ln) {
        std::string_view line = lines[std::size_t(ln - 1)];
        if (line.empty())
            continue;
        if (line[0] == '#') {
            if (in_header)
                pres.header.emplace_back(line);
            continue;
        }
        in_header = false;
        std::size_t sp = line.find(' ');
        std::string_view keyword = line.substr(0, sp);
        std::string_view rest = sp == std::string_view::npos ? std::string_view{} : trim(line.substr(sp + 1));
        if (keyword == "prime") {
            if (pres.p != 0)
                throw ParseError(ln, "duplicate prime line");
            int v = 0;
            std::istringstream is{std::string(rest)};
            if (!(is >> v) || v < 3 || v % 2 == 0 || !is_prime(Coeff(v)))
                throw ParseError(ln, "prime must be an odd prime >= 3, got '" + std::string(rest) + "'");
            pres.p = Coeff(v);
            continue;
        }
        if (pres.p == 0)
            throw ParseError(ln, "prime must be declared first");
        if (keyword == "generator") {
            auto wsp = rest.rfind(' ');
            if (wsp == std::string_view::npos)
                throw ParseError(ln, "expected 'generator <name> <degree>'");
            std::string_view name = trim(rest.substr(0, wsp));
            std::string_view ds = trim(rest.substr(wsp + 1));
            if (!valid_name(name))
                throw ParseError(ln, "bad generator name '" + std::string(name) + "'");
            if (pres.gen_index(name) >= 0)
                throw ParseError(ln, "duplicate generator '" + std::string(name) + "'");
            int deg = 0;
            for (char ch : ds) {
                if (!std::isdigit((unsigned char)ch))
                    throw ParseError(ln, "bad degree '" + std::string(ds) + "'");
                deg = deg * 10 + (ch - '0');
            }
            if (deg < 1)
                throw ParseError(ln, "generator degree must be >= 1");
            pres.gens.push_back({std::string(name), deg});
            pres.refresh_derived();
            continue;
        }
        if (keyword == "relation") {
            Polynomial q = parse_poly(pres, rest, ln);
            try {
                poly_degree(q, pres.degrees);
            } catch (const CohoError&) {
                throw ParseError(ln, "relation '" + std::string(rest) + "' is not homogeneous");
            }
            pres.relations.push_back(std::move(q));
            continue;
        }
        if (keyword == "beta" || keyword == "p1") {
            auto eq = rest.find('=');
            if (eq == std::string_view::npos)
                throw ParseError(ln, "expected '" + std::string(keyword) + " <gen> = <poly>'");
            std::string_view name = trim(rest.substr(0, eq));
            int gi = pres.gen_index(name);
            if (gi < 0)
                throw ParseError(ln, "unknown generator '" + std::string(name) + "'");
            Polynomial q = parse_poly(pres, rest.substr(eq + 1), ln);
            int want = keyword == "beta" ? pres.degrees[gi] + 1
                                         : pres.degrees[gi] + 2 * (int(pres.p) - 1);
            auto d = poly_degree(q, pres.degrees);
            if (d && *d != want)
                throw ParseError(ln, std::string(keyword) + "(" + std::string(name) +
                                         ") has degree " + std::to_string(*d) + ", expected " +
                                         std::to_string(want));
            auto& table = keyword == "beta" ? pres.beta : pres.p1;
            if (table[std::size_t(gi)])
                throw ParseError(ln, "duplicate " + std::string(keyword) + " entry for '" +
                                         std::string(name) + "'");
            table[std::size_t(gi)] = std::move(q);
            continue;
        }
        if (keyword == "bockstein") {
            std::istringstream is{std::string(rest)};
            int page = 0;
            std::string name;
            if (!(is >> page >> name) || page < 2)
                throw ParseError(ln, "expected 'bockstein <page>=2.. <gen> = <poly>'");
            int gi = pres.gen_index(name);
            if (gi < 0)
                throw ParseError(ln, "unknown generator '" + name + "'");
            auto eq = rest.find('=');
            if (eq == std::string_view::npos)
                throw ParseError(ln, "expected '=' in bockstein line");
            Polynomial q = parse_poly(pres, rest.substr(eq + 1), ln);
            auto d = poly_degree(q, pres.degrees);
            if (d && *d != pres.degrees[gi] + 1)
                throw ParseError(ln, "bockstein value for '" + name + "' has degree " +
                                         std::to_string(*d) + ", expected " +
                                         std::to_string(pres.degrees[gi] + 1));
            pres.higher.push_back({page, gi, std::move(q)});
            continue;
        }
        throw ParseError(ln, "unknown keyword '" + std::string(keyword) + "'");
    }
    if (pres.p == 0)
        throw ParseError(0, "missing prime line");
    pres.refresh_derived();
    return pres;
}

std::string mon_to_string(const Presentation& pres, const Monomial& m) {
    std::string out;
    for (std::size_t i = 0; i < m.e.size(); ++i) {
        if (!m.e[i])
            continue;
        if (!out.empty())
            out += '*';
        out += pres.gens[i].name;
        if (m.e[i] > 1) {
            out += '^';
            out += std::to_string(m.e[i]);
        }
    }
    return out;
}

std::string poly_to_string(const Presentation& pres, const Polynomial& q) {
    if (q.is_zero())
        return "0";
    std::string out;
    for (const Term& t : q.terms()) {
        if (!out.empty())
            out += " + ";
        std::string ms = mon_to_string(pres, t.mon);
        if (ms.empty()) {
            out += std::to_string(t.c);
        } else {
            if (t.c != 1) {
                out += std::to_string(t.c);
                out += '*';
            }
            out += ms;
        }
    }
    return out;
}

std::string serialize(const Presentation& pres) {
    std::string out;
    for (const std::string& h : pres.header) {
        out += h;
        out += '\n';
    }
    out += "prime " + std::to_string(pres.p) + "\n";
    for (const GeneratorInfo& g : pres.gens)
        out += "generator " + g.name + " " + std::to_string(g.degree) + "\n";
    for (const Polynomial& r : pres.relations)
        out += "relation " + poly_to_string(pres, r) + "\n";
    for (std::size_t i = 0; i < pres.ngens(); ++i)
        if (pres.beta[i])
            out += "beta " + pres.gens[i].name + " = " + poly_to_string(pres, *pres.beta[i]) + "\n";
    for (std::size_t i = 0; i < pres.ngens(); ++i)
        if (pres.p1[i])
            out += "p1 " + pres.gens[i].name + " = " + poly_to_string(pres, *pres.p1[i]) + "\n";
    std::vector<HigherBockstein> hs = pres.higher;
    std::stable_sort(hs.begin(), hs.end(), [](const HigherBockstein& a, const HigherBockstein& b) {
        return a.page != b.page ? a.page < b.page : a.gen < b.gen;
    });
    for (const HigherBockstein& h : hs)
        out += "bockstein " + std::to_string(h.page) + " " + pres.gens[std::size_t(h.gen)].name +
               " = " + poly_to_string(pres, h.value) + "\n";
    return out;
}

}  // namespace coho
