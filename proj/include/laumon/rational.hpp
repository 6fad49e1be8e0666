#pragma once

// Exact arithmetic in the fraction field of sparse multivariate Laurent
// polynomials with integer coefficients.  Variables are identified by name
// ("q", "qb", "u1", ..., plus auxiliary "z.." / "t" variables); exponents may
// be negative.  Equality is decided by exact cross-multiplication, so no
// multivariate gcd is ever needed.  The only symbolic cancellation performed
// is univariate (used by limit_at_one).

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace laumon {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

using ExpMap = std::map<std::string, int>;

struct singular_evaluation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------- Monomial

struct Monomial {
    BigInt coeff{0};
    ExpMap exps;  // no zero-exponent entries

    Monomial() = default;
    explicit Monomial(BigInt c) : coeff(std::move(c)) {}
    Monomial(BigInt c, ExpMap e) : coeff(std::move(c)), exps(std::move(e)) {
        prune();
    }

    static Monomial var(const std::string& name, int exp = 1, BigInt c = 1) {
        Monomial m(std::move(c));
        if (exp != 0) m.exps[name] = exp;
        return m;
    }

    void prune() {
        for (auto it = exps.begin(); it != exps.end();)
            it = (it->second == 0) ? exps.erase(it) : std::next(it);
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r(coeff * o.coeff, exps);
        for (const auto& [v, e] : o.exps) {
            auto it = r.exps.find(v);
            if (it == r.exps.end()) r.exps[v] = e;
            else if (it->second + e == 0) r.exps.erase(it);
            else it->second += e;
        }
        return r;
    }

    Monomial inverse() const {
        if (!(coeff == 1 || coeff == -1))
            throw std::runtime_error("monomial inverse needs unit coefficient");
        Monomial r(coeff, {});
        for (const auto& [v, e] : exps) r.exps[v] = -e;
        return r;
    }

    // Halve every exponent; the box weights this is applied to always have
    // even exponents.
    Monomial sqrt() const {
        if (coeff != 1) throw std::runtime_error("monomial sqrt needs coefficient 1");
        Monomial r(BigInt(1), {});
        for (const auto& [v, e] : exps) {
            if (e % 2 != 0) throw std::runtime_error("monomial sqrt: odd exponent on " + v);
            r.exps[v] = e / 2;
        }
        return r;
    }

    bool is_trivial() const { return exps.empty(); }

    bool same_exponents(const Monomial& o) const { return exps == o.exps; }
};

// ------------------------------------------------------- LaurentPolynomial

class LaurentPolynomial {
  public:
    // exponent map -> nonzero coefficient; std::map gives the canonical
    // (lexicographic) term order for free.
    std::map<ExpMap, BigInt> terms;

    LaurentPolynomial() = default;
    explicit LaurentPolynomial(const BigInt& c) {
        if (c != 0) terms[{}] = c;
    }
    explicit LaurentPolynomial(const Monomial& m) {
        if (m.coeff != 0) terms[m.exps] = m.coeff;
    }

    static LaurentPolynomial var(const std::string& name, int exp = 1) {
        return LaurentPolynomial(Monomial::var(name, exp));
    }

    bool is_zero() const { return terms.empty(); }

    bool is_constant() const {
        return terms.empty() || (terms.size() == 1 && terms.begin()->first.empty());
    }

    void add_term(const ExpMap& e, const BigInt& c) {
        if (c == 0) return;
        auto it = terms.find(e);
        if (it == terms.end()) terms.emplace(e, c);
        else {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        }
    }

    LaurentPolynomial operator+(const LaurentPolynomial& o) const {
        LaurentPolynomial r = *this;
        for (const auto& [e, c] : o.terms) r.add_term(e, c);
        return r;
    }
    LaurentPolynomial operator-() const {
        LaurentPolynomial r = *this;
        for (auto& [e, c] : r.terms) c = -c;
        return r;
    }
    LaurentPolynomial operator-(const LaurentPolynomial& o) const {
        LaurentPolynomial r = *this;
        for (const auto& [e, c] : o.terms) r.add_term(e, -c);
        return r;
    }
    LaurentPolynomial operator*(const LaurentPolynomial& o) const {
        LaurentPolynomial r;
        for (const auto& [e1, c1] : terms)
            for (const auto& [e2, c2] : o.terms) {
                ExpMap e = e1;
                for (const auto& [v, k] : e2) {
                    auto it = e.find(v);
                    if (it == e.end()) e[v] = k;
                    else if (it->second + k == 0) e.erase(it);
                    else it->second += k;
                }
                r.add_term(e, c1 * c2);
            }
        return r;
    }
    LaurentPolynomial operator*(const Monomial& m) const {
        return *this * LaurentPolynomial(m);
    }

    bool operator==(const LaurentPolynomial& o) const { return terms == o.terms; }

    BigInt content() const {
        BigInt g = 0;
        for (const auto& [e, c] : terms) {
            g = boost::multiprecision::gcd(g, c);
            if (g == 1) break;
        }
        return g;
    }

    // Monomial m with m | every term (per-variable minimum of exponents over
    // all variables that appear; variables absent from a term count as 0).
    ExpMap monomial_content() const {
        ExpMap mc;
        if (terms.empty()) return mc;
        std::map<std::string, std::pair<int, size_t>> stat;  // var -> (min exp, #terms containing)
        for (const auto& [e, c] : terms)
            for (const auto& [v, k] : e) {
                auto it = stat.find(v);
                if (it == stat.end()) stat[v] = {k, 1};
                else {
                    it->second.first = std::min(it->second.first, k);
                    it->second.second++;
                }
            }
        for (const auto& [v, s] : stat) {
            int m = (s.second == terms.size()) ? s.first : std::min(s.first, 0);
            if (m != 0) mc[v] = m;
        }
        return mc;
    }

    void divide_exact_monomial(const ExpMap& mc) {
        if (mc.empty()) return;
        std::map<ExpMap, BigInt> out;
        for (const auto& [e, c] : terms) {
            ExpMap ne = e;
            for (const auto& [v, k] : mc) {
                auto it = ne.find(v);
                if (it == ne.end()) ne[v] = -k;
                else if (it->second == k) ne.erase(it);
                else it->second -= k;
            }
            out.emplace(std::move(ne), c);
        }
        terms = std::move(out);
    }

    void divide_exact_content(const BigInt& g) {
        if (g == 1) return;
        for (auto& [e, c] : terms) c /= g;
    }

    std::vector<std::string> variables() const {
        std::vector<std::string> vs;
        for (const auto& [e, c] : terms)
            for (const auto& [v, k] : e)
                if (std::find(vs.begin(), vs.end(), v) == vs.end()) vs.push_back(v);
        std::sort(vs.begin(), vs.end());
        return vs;
    }

    bool depends_on(const std::string& v) const {
        for (const auto& [e, c] : terms)
            if (e.count(v)) return true;
        return false;
    }

    int min_exponent(const std::string& v) const {
        int m = 0;
        bool first = true;
        for (const auto& [e, c] : terms) {
            auto it = e.find(v);
            int k = (it == e.end()) ? 0 : it->second;
            m = first ? k : std::min(m, k);
            first = false;
        }
        return m;
    }
    int max_exponent(const std::string& v) const {
        int m = 0;
        bool first = true;
        for (const auto& [e, c] : terms) {
            auto it = e.find(v);
            int k = (it == e.end()) ? 0 : it->second;
            m = first ? k : std::max(m, k);
            first = false;
        }
        return m;
    }
};

// --------------------------------------------------------- RationalFunction

class RationalFunction {
  public:
    LaurentPolynomial num;
    LaurentPolynomial den;  // never identically zero

    RationalFunction() : num(), den(BigInt(1)) {}
    RationalFunction(BigInt c) : num(std::move(c)), den(BigInt(1)) {}
    RationalFunction(int c) : num(BigInt(c)), den(BigInt(1)) {}
    explicit RationalFunction(const Monomial& m) : num(m), den(BigInt(1)) {}
    explicit RationalFunction(const BigRat& r)
        : num(BigInt(boost::multiprecision::numerator(r))),
          den(BigInt(boost::multiprecision::denominator(r))) {}
    RationalFunction(LaurentPolynomial n, LaurentPolynomial d)
        : num(std::move(n)), den(std::move(d)) {
        if (den.is_zero()) throw singular_evaluation("zero denominator");
        normalize();
    }

    static RationalFunction var(const std::string& name, int exp = 1) {
        return RationalFunction(Monomial::var(name, exp));
    }

    bool is_zero() const { return num.is_zero(); }

    void normalize() {
        if (num.is_zero()) {
            den = LaurentPolynomial(BigInt(1));
            return;
        }
        ExpMap mc = den.monomial_content();
        if (!mc.empty()) {
            den.divide_exact_monomial(mc);
            num.divide_exact_monomial(mc);
        }
        BigInt g = boost::multiprecision::gcd(num.content(), den.content());
        if (g > 1) {
            num.divide_exact_content(g);
            den.divide_exact_content(g);
        }
        if (den.terms.begin()->second < 0) {
            num = -num;
            den = -den;
        }
    }

    RationalFunction operator+(const RationalFunction& o) const {
        return RationalFunction(num * o.den + o.num * den, den * o.den);
    }
    RationalFunction operator-(const RationalFunction& o) const {
        return RationalFunction(num * o.den - o.num * den, den * o.den);
    }
    RationalFunction operator-() const {
        RationalFunction r = *this;
        r.num = -r.num;
        return r;
    }
    RationalFunction operator*(const RationalFunction& o) const {
        return RationalFunction(num * o.num, den * o.den);
    }
    RationalFunction operator/(const RationalFunction& o) const {
        if (o.num.is_zero()) throw singular_evaluation("division by zero function");
        return RationalFunction(num * o.den, den * o.num);
    }
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    RationalFunction inverse() const {
        if (num.is_zero()) throw singular_evaluation("inverse of zero function");
        return RationalFunction(den, num);
    }

    RationalFunction pow(int e) const {
        if (e == 0) return RationalFunction(1);
        RationalFunction base = (e > 0) ? *this : inverse();
        RationalFunction r(1);
        for (int k = std::abs(e); k > 0; --k) r *= base;
        return r;
    }

    bool equals(const RationalFunction& o) const {
        return num * o.den == o.num * den;
    }

    bool depends_on(const std::string& v) const {
        return num.depends_on(v) || den.depends_on(v);
    }

    std::vector<std::string> variables() const {
        auto vs = num.variables();
        for (auto& v : den.variables())
            if (std::find(vs.begin(), vs.end(), v) == vs.end()) vs.push_back(v);
        std::sort(vs.begin(), vs.end());
        return vs;
    }
};

inline RationalFunction operator*(const BigInt& c, const RationalFunction& f) {
    return RationalFunction(c) * f;
}

// --------------------------------------------------------------- substitute

inline LaurentPolynomial substitute(const LaurentPolynomial& p,
                                    const std::map<std::string, RationalFunction>& bind,
                                    LaurentPolynomial& den_out) {
    // Returns n with p(bindings) = n / den_out exactly.
    den_out = LaurentPolynomial(BigInt(1));
    RationalFunction acc(0);
    for (const auto& [e, c] : p.terms) {
        RationalFunction term((BigInt(c)));
        ExpMap rest;
        for (const auto& [v, k] : e) {
            auto it = bind.find(v);
            if (it == bind.end()) rest[v] = k;
            else term *= it->second.pow(k);
        }
        term *= RationalFunction(Monomial(BigInt(1), rest));
        acc += term;
    }
    den_out = acc.den;
    return acc.num;
}

inline RationalFunction substitute(const RationalFunction& f,
                                   const std::map<std::string, RationalFunction>& bind) {
    LaurentPolynomial dn, dd;
    LaurentPolynomial n = substitute(f.num, bind, dn);
    LaurentPolynomial d = substitute(f.den, bind, dd);
    if (d.is_zero()) throw singular_evaluation("substitution produced zero denominator");
    return RationalFunction(n * dd, d * dn);
}

// -------------------------------------------------------- evaluate_rational

inline BigRat evaluate_rational(const LaurentPolynomial& p,
                                const std::map<std::string, BigRat>& bind) {
    BigRat acc = 0;
    for (const auto& [e, c] : p.terms) {
        BigRat t(c);
        for (const auto& [v, k] : e) {
            auto it = bind.find(v);
            if (it == bind.end())
                throw std::runtime_error("unbound variable " + v + " in rational evaluation");
            if (it->second == 0 && k < 0) throw singular_evaluation("0 raised to negative power");
            BigRat base = it->second;
            BigRat pw = 1;
            for (int r = std::abs(k); r > 0; --r) pw *= base;
            if (k < 0) {
                if (pw == 0) throw singular_evaluation("zero to negative power");
                pw = BigRat(boost::multiprecision::denominator(pw), boost::multiprecision::numerator(pw));
            }
            t *= pw;
        }
        acc += t;
    }
    return acc;
}

inline BigRat evaluate_rational(const RationalFunction& f,
                                const std::map<std::string, BigRat>& bind) {
    BigRat d = evaluate_rational(f.den, bind);
    if (d == 0) throw singular_evaluation("denominator evaluates to zero");
    return evaluate_rational(f.num, bind) / d;
}

// ------------------------------------------------------------- limit_at_one
//
// Treat f as univariate in `t` with coefficients in the fraction field of the
// remaining variables, cancel the common univariate gcd of numerator and
// denominator, and substitute t = 1.  This is the exact mechanism behind the
// removable (1-1)-type cancellations in the localization formulas.

namespace detail {

// Univariate polynomial with RationalFunction coefficients, index = t-degree.
using UniPoly = std::vector<RationalFunction>;

inline UniPoly to_unipoly(const LaurentPolynomial& p, const std::string& t, int shift) {
    UniPoly u;
    for (const auto& [e, c] : p.terms) {
        auto it = e.find(t);
        int k = (it == e.end()) ? 0 : it->second;
        k += shift;
        ExpMap rest = e;
        rest.erase(t);
        if (k < 0) throw std::logic_error("to_unipoly: negative degree after shift");
        if ((int)u.size() <= k) u.resize(k + 1, RationalFunction(0));
        u[k] += RationalFunction(Monomial(c, rest));
    }
    while (!u.empty() && u.back().is_zero()) u.pop_back();
    return u;
}

inline int uni_deg(const UniPoly& p) { return (int)p.size() - 1; }

inline UniPoly uni_trim(UniPoly p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    return p;
}

inline UniPoly uni_mul(const UniPoly& a, const UniPoly& b) {
    if (a.empty() || b.empty()) return {};
    UniPoly r(a.size() + b.size() - 1, RationalFunction(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            if (!a[i].is_zero() && !b[j].is_zero()) r[i + j] += a[i] * b[j];
    return uni_trim(std::move(r));
}

inline UniPoly uni_rem(UniPoly a, const UniPoly& b) {
    // remainder of a by b (b nonzero), coefficients in the fraction field
    a = uni_trim(std::move(a));
    while (uni_deg(a) >= uni_deg(b) && !a.empty()) {
        RationalFunction q = a.back() / b.back();
        int shift = uni_deg(a) - uni_deg(b);
        for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= q * b[i];
        a.pop_back();
        a = uni_trim(std::move(a));
    }
    return a;
}

inline std::pair<UniPoly, UniPoly> uni_divmod(UniPoly a, const UniPoly& b) {
    a = uni_trim(std::move(a));
    UniPoly q(std::max<int>(0, uni_deg(a) - uni_deg(b) + 1), RationalFunction(0));
    while (uni_deg(a) >= uni_deg(b) && !a.empty()) {
        RationalFunction c = a.back() / b.back();
        int shift = uni_deg(a) - uni_deg(b);
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
        a.pop_back();
        a = uni_trim(std::move(a));
    }
    return {uni_trim(std::move(q)), a};
}

inline UniPoly uni_gcd(UniPoly a, UniPoly b) {
    a = uni_trim(std::move(a));
    b = uni_trim(std::move(b));
    while (!b.empty()) {
        UniPoly r = uni_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        RationalFunction lead = a.back();
        for (auto& c : a) c = c / lead;  // monic
    }
    return a;
}

inline RationalFunction uni_eval_at_one(const UniPoly& p) {
    RationalFunction r(0);
    for (const auto& c : p) r += c;
    return r;
}

}  // namespace detail

inline RationalFunction limit_at_one(const RationalFunction& f, const std::string& t) {
    if (!f.depends_on(t)) return f;
    int sn = -std::min(0, f.num.min_exponent(t));
    int sd = -std::min(0, f.den.min_exponent(t));
    detail::UniPoly n = detail::to_unipoly(f.num, t, sn);
    detail::UniPoly d = detail::to_unipoly(f.den, t, sd);
    // t^shift factors are units; their value at t=1 is 1, so the shifts need
    // no compensation.
    detail::UniPoly g = detail::uni_gcd(n, d);
    if (detail::uni_deg(g) > 0) {
        n = detail::uni_divmod(n, g).first;
        d = detail::uni_divmod(d, g).first;
    }
    RationalFunction dv = detail::uni_eval_at_one(d);
    if (dv.is_zero()) throw singular_evaluation("pole at " + t + " = 1 survives reduction");
    RationalFunction nv = detail::uni_eval_at_one(n);
    return nv / dv;
}

// ------------------------------------------------------------ serialization
//
// "num / den" with monomials printed as coeff*var^exp products in canonical
// order.  The denominator part is omitted when it equals 1.

inline std::string to_string(const Monomial& m) {
    std::ostringstream os;
    bool printed_coeff = false;
    if (m.exps.empty() || !(m.coeff == 1 || m.coeff == -1)) {
        os << m.coeff.str();
        printed_coeff = true;
    } else if (m.coeff == -1) {
        os << "-";
    }
    bool first = !printed_coeff;
    for (const auto& [v, e] : m.exps) {
        if (!first || printed_coeff) os << "*";
        os << v;
        if (e != 1) os << "^" << e;
        first = false;
    }
    return os.str();
}

inline std::string to_string(const LaurentPolynomial& p) {
    if (p.terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p.terms) {
        Monomial m(c, e);
        std::string s = to_string(m);
        if (first) {
            os << s;
        } else if (!s.empty() && s[0] == '-') {
            os << " - " << s.substr(1);
        } else {
            os << " + " << s;
        }
        first = false;
    }
    return os.str();
}

inline std::string to_string(const RationalFunction& f) {
    std::string n = to_string(f.num);
    if (f.den.is_constant() && !f.den.is_zero() && f.den.terms.begin()->second == 1 &&
        f.den.terms.size() == 1 && f.den.terms.begin()->first.empty())
        return n;
    return "(" + n + ") / (" + to_string(f.den) + ")";
}

// Parser for the serialization above.

namespace detail {

struct Parser {
    const std::string& s;
    size_t i = 0;
    explicit Parser(const std::string& str) : s(str) {}

    void skip_ws() {
        while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }

    BigInt parse_int() {
        skip_ws();
        size_t start = i;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
        if (start == i || (i == start + 1 && !std::isdigit((unsigned char)s[start])))
            throw std::runtime_error("parse error: integer expected at '" + s.substr(start) + "'");
        return BigInt(s.substr(start, i - start));
    }

    int parse_small_int() { return (int)parse_int().convert_to<long>(); }

    std::string parse_name() {
        skip_ws();
        size_t start = i;
        while (i < s.size() && (std::isalnum((unsigned char)s[i]) || s[i] == '_')) ++i;
        if (start == i) throw std::runtime_error("parse error: name expected");
        return s.substr(start, i - start);
    }

    Monomial parse_monomial(int sign) {
        Monomial m(BigInt(sign));
        bool saw_factor = false;
        skip_ws();
        if (i < s.size() && (std::isdigit((unsigned char)s[i]))) {
            m.coeff *= parse_int();
            saw_factor = true;
        }
        while (true) {
            skip_ws();
            if (saw_factor) {
                if (!eat('*')) break;
            }
            skip_ws();
            if (i >= s.size() || !std::isalpha((unsigned char)s[i])) {
                if (saw_factor) throw std::runtime_error("parse error: variable expected after '*'");
                break;
            }
            std::string v = parse_name();
            int e = 1;
            if (eat('^')) e = parse_small_int();
            auto it = m.exps.find(v);
            if (it == m.exps.end()) m.exps[v] = e;
            else it->second += e;
            saw_factor = true;
        }
        m.prune();
        return m;
    }

    LaurentPolynomial parse_poly() {
        LaurentPolynomial p;
        int sign = 1;
        if (eat('-')) sign = -1;
        else eat('+');
        while (true) {
            Monomial m = parse_monomial(sign);
            p.add_term(m.exps, m.coeff);
            skip_ws();
            if (eat('+')) sign = 1;
            else if (eat('-')) sign = -1;
            else break;
        }
        return p;
    }
};

}  // namespace detail

inline RationalFunction parse_rational(const std::string& s) {
    detail::Parser p(s);
    LaurentPolynomial num, den(BigInt(1));
    if (p.peek() == '(') {
        p.eat('(');
        num = p.parse_poly();
        if (!p.eat(')')) throw std::runtime_error("parse error: ')' expected");
        if (p.eat('/')) {
            if (!p.eat('(')) throw std::runtime_error("parse error: '(' expected");
            den = p.parse_poly();
            if (!p.eat(')')) throw std::runtime_error("parse error: ')' expected");
        }
    } else {
        num = p.parse_poly();
    }
    p.skip_ws();
    if (p.i != p.s.size()) throw std::runtime_error("parse error: trailing input '" + s.substr(p.i) + "'");
    return RationalFunction(num, den);
}

// ------------------------------------------------------------ random draws

class RationalSampler {
  public:
    explicit RationalSampler(uint64_t seed) : rng_(seed) {}

    BigRat small_rational(int max_num = 40, int max_den = 7) {
        std::uniform_int_distribution<int> dn(-max_num, max_num);
        std::uniform_int_distribution<int> dd(1, max_den);
        return BigRat(dn(rng_), dd(rng_));
    }

    // Nonzero rationals with distinct absolute values, handy for parameter
    // specializations where coincidences would create spurious poles.
    std::map<std::string, BigRat> distinct_values(const std::vector<std::string>& vars,
                                                  int max_num = 60, int max_den = 5) {
        std::map<std::string, BigRat> out;
        std::vector<BigRat> used;
        for (const auto& v : vars) {
            for (int tries = 0; tries < 1000; ++tries) {
                BigRat r = small_rational(max_num, max_den);
                if (r == 0) continue;
                bool clash = false;
                for (const auto& u : used)
                    if (u == r || u == -r) clash = true;
                if (!clash) {
                    out[v] = r;
                    used.push_back(r);
                    break;
                }
            }
            if (!out.count(v)) throw std::runtime_error("failed to sample distinct rationals");
        }
        return out;
    }

    std::mt19937_64& rng() { return rng_; }

  private:
    std::mt19937_64 rng_;
};

// equals with the probabilistic fast path: k random evaluations may prove
// inequality early; the exact cross-multiplication check stays authoritative.
inline bool equals_fastpath(const RationalFunction& f, const RationalFunction& g,
                            RationalSampler& sampler, int k = 3) {
    auto vars = f.variables();
    for (auto& v : g.variables())
        if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
    for (int trial = 0; trial < k; ++trial) {
        std::map<std::string, BigRat> bind;
        for (const auto& v : vars) bind[v] = sampler.small_rational();
        try {
            if (evaluate_rational(f, bind) != evaluate_rational(g, bind)) return false;
        } catch (const singular_evaluation&) {
            continue;  // unlucky draw, skip
        }
    }
    return f.equals(g);
}

}  // namespace laumon
