#include "skein/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace skein {

LaurentPoly::LaurentPoly(Int c) {
    if (c != 0) terms_.emplace(Mono{}, std::move(c));
}

LaurentPoly::LaurentPoly(const Mono& m, Int c) {
    if (c != 0) terms_.emplace(m, std::move(c));
}

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<Mono, Int>> ts) {
    for (const auto& [m, c] : ts) add_term(m, c);
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.is_unit() && terms_.begin()->second == 1;
}

void LaurentPoly::add_term(const Mono& m, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void LaurentPoly::add_scaled(const LaurentPoly& p, const Mono& m, const Int& c) {
    if (c == 0) return;
    for (const auto& [pm, pc] : p.terms_) add_term(pm * m, pc * c);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    const LaurentPoly& small = a.term_count() <= b.term_count() ? a : b;
    const LaurentPoly& big = a.term_count() <= b.term_count() ? b : a;
    for (const auto& [m, c] : small.terms_) out.add_scaled(big, m, c);
    return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Int& c) {
    if (c == 0) {
        terms_.clear();
    } else {
        for (auto& [m, coeff] : terms_) coeff *= c;
    }
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out(*this);
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

bool LaurentPoly::involves_x() const {
    for (const auto& [m, c] : terms_)
        if (m.x != 0) return true;
    return false;
}

bool LaurentPoly::involves_v() const {
    for (const auto& [m, c] : terms_)
        if (m.v != 0) return true;
    return false;
}

bool LaurentPoly::is_s_only() const { return !involves_x() && !involves_v(); }

LaurentPoly LaurentPoly::mirror_s() const {
    LaurentPoly out;
    for (const auto& [m, c] : terms_) out.add_term(Mono{-m.s, m.v, m.x}, c);
    return out;
}

LaurentPoly LaurentPoly::substitute_v_with_s_power(int power) const {
    LaurentPoly out;
    for (const auto& [m, c] : terms_) out.add_term(Mono{m.s + power * m.v, 0, m.x}, c);
    return out;
}

namespace {

void append_monomial(std::ostream& os, const Mono& m, const Int& abs_coeff) {
    bool coeff_printed = false;
    if (m.is_unit() || abs_coeff != 1) {
        os << abs_coeff.str();
        coeff_printed = true;
    }
    auto var = [&](const char* name, int e) {
        if (e == 0) return;
        if (coeff_printed) os << '*';
        os << name;
        if (e != 1) os << '^' << e;
        coeff_printed = true;
    };
    var("x", m.x);
    var("v", m.v);
    var("s", m.s);
}

}  // namespace

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        if (first) {
            if (c < 0) os << '-';
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        append_monomial(os, m, abs(c));
    }
    return os.str();
}

UniLaurent::UniLaurent(std::map<long, Int> ts) : terms_(std::move(ts)) {
    for (auto it = terms_.begin(); it != terms_.end();) {
        it = it->second == 0 ? terms_.erase(it) : std::next(it);
    }
}

std::string UniLaurent::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (first) {
            if (c < 0) os << '-';
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Int a = abs(c);
        if (e == 0 || a != 1) {
            os << a.str();
            if (e != 0) os << '*';
        }
        if (e != 0) {
            os << 'u';
            if (e != 1) os << '^' << e;
        }
    }
    return os.str();
}

LaurentPoly qint(int k) {
    if (k < 0) throw std::invalid_argument("qint: negative argument");
    LaurentPoly out;
    for (int e = k - 1; e >= 1 - k; e -= 2) out.add_term(Mono{e, 0, 0}, 1);
    return out;
}

LaurentPoly qfact(int k) {
    if (k < 0) throw std::invalid_argument("qfact: negative argument");
    LaurentPoly out(1);
    for (int i = 2; i <= k; ++i) out *= qint(i);
    return out;
}

std::optional<LaurentPoly> try_exact_div(const LaurentPoly& p, const LaurentPoly& q) {
    if (q.is_zero()) throw std::domain_error("exact_div: division by zero polynomial");
    if (p.is_zero()) return LaurentPoly();
    if (q.is_one()) return p;

    // Shift both operands into ordinary polynomials (non-negative exponents);
    // lex on (s, v, x) is then a monomial well-order and leading-term division
    // terminates.
    auto content = [](const LaurentPoly& f) {
        Mono lo = f.terms().begin()->first;
        for (const auto& [m, c] : f.terms()) {
            lo.s = std::min(lo.s, m.s);
            lo.v = std::min(lo.v, m.v);
            lo.x = std::min(lo.x, m.x);
        }
        return lo;
    };
    const Mono cp = content(p);
    const Mono cq = content(q);

    LaurentPoly rem;
    for (const auto& [m, c] : p.terms()) rem.add_term(m / cp, c);
    LaurentPoly div;
    for (const auto& [m, c] : q.terms()) div.add_term(m / cq, c);

    const auto& [lead_m, lead_c] = *div.terms().rbegin();
    LaurentPoly quot;
    while (!rem.is_zero()) {
        const auto& [rm, rc] = *rem.terms().rbegin();
        const Mono d = rm / lead_m;
        if (d.s < 0 || d.v < 0 || d.x < 0) return std::nullopt;
        if (rc % lead_c != 0) return std::nullopt;
        const Int coeff = rc / lead_c;
        quot.add_term(d, coeff);
        rem.add_scaled(div, d, -coeff);
    }

    LaurentPoly out;
    const Mono shift = cp / cq;
    for (const auto& [m, c] : quot.terms()) out.add_term(m * shift, c);
    return out;
}

LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q) {
    auto r = try_exact_div(p, q);
    if (!r) throw std::domain_error("exact_div: not divisible");
    return *r;
}

Int eval_s1(const LaurentPoly& p) {
    Int total = 0;
    for (const auto& [m, c] : p.terms()) {
        if (m.x != 0 || m.v != 0)
            throw std::domain_error("eval_s1: polynomial involves x or v");
        total += c;
    }
    return total;
}

UniLaurent substitute(const LaurentPoly& p, int N) {
    if (N < 1) throw std::invalid_argument("substitute: N must be >= 1");
    std::map<long, Int> out;
    for (const auto& [m, c] : p.terms()) {
        const long e = -static_cast<long>(m.x) - static_cast<long>(N) * N * m.v +
                       static_cast<long>(N) * m.s;
        auto [it, inserted] = out.try_emplace(e, c);
        if (!inserted) it->second += c;
    }
    return UniLaurent(std::move(out));
}

}  // namespace skein
