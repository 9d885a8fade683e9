#include "wlpoly/mpoly.hpp"

#include <json.hpp>

#include <algorithm>
#include <utility>

namespace wlpoly {

using ordered_json = nlohmann::ordered_json;

MPoly MPoly::variable(Var v) {
    Monomial m;
    switch (v) {
        case Var::x: m.x = 1; break;
        case Var::alpha: m.a = 1; break;
        case Var::beta: m.b = 1; break;
    }
    return monomial(m, Rat(1));
}

MPoly MPoly::monomial(const Monomial& m, const Rat& coeff) {
    MPoly p;
    if (coeff != 0) p.terms_.emplace(m, coeff);
    return p;
}

std::optional<int> MPoly::degree_x() const {
    if (terms_.empty()) return std::nullopt;
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.x);
    return d;
}

int MPoly::degree_in(Var v) const {
    int d = -1;
    for (const auto& [m, c] : terms_) {
        const int e = v == Var::x ? m.x : v == Var::alpha ? m.a : m.b;
        d = std::max(d, e);
    }
    return d;
}

Rat MPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

MPoly MPoly::coefficient_in_x(int k) const {
    MPoly out;
    for (const auto& [m, c] : terms_) {
        if (m.x == k) out.terms_.emplace(Monomial{0, m.a, m.b}, c);
    }
    return out;
}

bool MPoly::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first == Monomial{});
}

Rat MPoly::constant_value() const {
    return coeff(Monomial{});
}

bool MPoly::is_monic_in_x(int degree) const {
    return degree_x() == std::optional<int>(degree) &&
           coefficient_in_x(degree) == MPoly(1);
}

bool MPoly::integer_coefficients() const {
    for (const auto& [m, c] : terms_) {
        if (c.get_den() != 1) return false;
    }
    return true;
}

void MPoly::add_term(const Monomial& m, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MPoly MPoly::operator-() const {
    MPoly out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, Rat(-c));
    return out;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, Rat(-c));
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            out.add_term(Monomial{ma.x + mb.x, ma.a + mb.a, ma.b + mb.b},
                         Rat(ca * cb));
        }
    }
    return out;
}

MPoly& MPoly::operator*=(const MPoly& o) {
    *this = *this * o;
    return *this;
}

MPoly& MPoly::operator*=(const Rat& s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
}

MPoly& MPoly::operator/=(const Rat& s) {
    if (s == 0) throw std::invalid_argument("MPoly: division by zero scalar");
    return *this *= Rat(1 / s);
}

MPoly MPoly::derivative_x() const {
    MPoly out;
    for (const auto& [m, c] : terms_) {
        if (m.x == 0) continue;
        out.terms_.emplace(Monomial{m.x - 1, m.a, m.b}, Rat(c * m.x));
    }
    return out;
}

MPoly MPoly::substitute(Var v, const MPoly& value) const {
    std::map<int, MPoly> powers;
    powers.emplace(0, MPoly(1));
    const auto power = [&](int e) -> const MPoly& {
        auto it = powers.lower_bound(e);
        if (it != powers.end() && it->first == e) return it->second;
        // extend from the largest cached power below e
        --it;
        int have = it->first;
        MPoly acc = it->second;
        while (have < e) {
            acc *= value;
            ++have;
            powers.emplace(have, acc);
        }
        return powers.at(e);
    };
    MPoly out;
    for (const auto& [m, c] : terms_) {
        Monomial rest = m;
        int e = 0;
        switch (v) {
            case Var::x: e = m.x; rest.x = 0; break;
            case Var::alpha: e = m.a; rest.a = 0; break;
            case Var::beta: e = m.b; rest.b = 0; break;
        }
        out += monomial(rest, c) * power(e);
    }
    return out;
}

MPoly MPoly::pow(int exponent) const {
    if (exponent < 0) throw std::invalid_argument("MPoly::pow: negative exponent");
    MPoly out(1);
    for (int i = 0; i < exponent; ++i) out *= *this;
    return out;
}

namespace {

// Shared term-by-term printing; latex uses alpha/beta glyphs, no '*'.
struct PrintStyle {
    const char* name_a;
    const char* name_b;
    const char* name_x;
    const char* mul;
    bool brace_exponents;
    bool frac;
};

std::string print_terms(const MPoly& p, const PrintStyle& st) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const Monomial& m = it->first;
        const Rat& c = it->second;
        const bool neg = c < 0;
        const Rat mag = neg ? Rat(-c) : c;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        std::string factors;
        const auto add_factor = [&](const char* name, int e) {
            if (e == 0) return;
            if (!factors.empty()) factors += st.mul;
            factors += name;
            if (e > 1) {
                factors += "^";
                if (st.brace_exponents)
                    factors += "{" + std::to_string(e) + "}";
                else
                    factors += std::to_string(e);
            }
        };
        add_factor(st.name_a, m.a);
        add_factor(st.name_b, m.b);
        add_factor(st.name_x, m.x);
        std::string coeff_text;
        if (st.frac && mag.get_den() != 1) {
            coeff_text = "\\frac{" + mag.get_num().get_str() + "}{" +
                         mag.get_den().get_str() + "}";
        } else {
            coeff_text = rat_to_string(mag);
        }
        if (factors.empty()) {
            out += coeff_text;
        } else if (mag == 1) {
            out += factors;
        } else {
            out += coeff_text + st.mul + factors;
        }
    }
    return out;
}

} // namespace

std::string MPoly::to_human() const {
    return print_terms(*this, PrintStyle{"a", "b", "x", "*", false, false});
}

std::string MPoly::to_latex() const {
    return print_terms(*this,
                       PrintStyle{"\\alpha", "\\beta", "x", " ", true, true});
}

std::string MPoly::to_json() const {
    ordered_json terms = ordered_json::array();
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        ordered_json t;
        t["exp"] = {it->first.x, it->first.a, it->first.b};
        t["num"] = it->second.get_num().get_str();
        t["den"] = it->second.get_den().get_str();
        terms.push_back(std::move(t));
    }
    ordered_json j;
    j["terms"] = std::move(terms);
    return j.dump();
}

MPoly MPoly::from_json(const std::string& text) {
    const auto fail = [](const std::string& why) {
        return std::invalid_argument("MPoly::from_json: " + why);
    };
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw fail(e.what());
    }
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
        throw fail("expected {\"terms\": [...]}");
    MPoly out;
    for (const auto& t : j["terms"]) {
        if (!t.contains("exp") || !t["exp"].is_array() || t["exp"].size() != 3)
            throw fail("term without 3-entry exp");
        Monomial m{t["exp"][0].get<int>(), t["exp"][1].get<int>(),
                   t["exp"][2].get<int>()};
        if (m.x < 0 || m.a < 0 || m.b < 0) throw fail("negative exponent");
        const auto as_int = [&](const char* key) -> Int {
            const auto& v = t.at(key);
            if (v.is_string()) return Int(v.get<std::string>());
            if (v.is_number_integer()) return Int(v.get<long>());
            throw fail(std::string(key) + " must be a string");
        };
        out.add_term(m, make_rat(as_int("num"), as_int("den")));
    }
    return out;
}

MPoly exact_divide_integral(const MPoly& p, const Int& divisor) {
    if (divisor == 0)
        throw std::invalid_argument("exact_divide_integral: zero divisor");
    MPoly out;
    for (const auto& [m, c] : p.terms()) {
        if (c.get_den() != 1)
            throw InexactDivision("exact_divide_integral: non-integer coefficient");
        if (!mpz_divisible_p(c.get_num().get_mpz_t(), divisor.get_mpz_t()))
            throw InexactDivision("exact_divide_integral: remainder is nonzero");
        Int q;
        mpz_divexact(q.get_mpz_t(), c.get_num().get_mpz_t(),
                     divisor.get_mpz_t());
        out += MPoly::monomial(m, Rat(q));
    }
    return out;
}

} // namespace wlpoly
