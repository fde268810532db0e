#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>

namespace skein {

using Int = boost::multiprecision::cpp_int;

// Exponent vector of a monomial x^a v^b s^c.  The lexicographic order on
// (s, v, x) is the canonical term order used for storage and printing.
struct Mono {
    int s = 0;
    int v = 0;
    int x = 0;

    friend constexpr auto operator<=>(const Mono&, const Mono&) = default;

    constexpr Mono operator*(const Mono& o) const { return {s + o.s, v + o.v, x + o.x}; }
    constexpr Mono operator/(const Mono& o) const { return {s - o.s, v - o.v, x - o.x}; }
    constexpr bool is_unit() const { return s == 0 && v == 0 && x == 0; }
};

// Laurent polynomial in x, v, s over arbitrary-precision integers.
// Zero coefficients are never stored, so the term map is canonical and
// equality is plain map equality.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(int c) : LaurentPoly(Int(c)) {}
    LaurentPoly(Int c);
    LaurentPoly(const Mono& m, Int c = 1);
    LaurentPoly(std::initializer_list<std::pair<Mono, Int>> ts);

    static LaurentPoly x(int e = 1) { return LaurentPoly(Mono{0, 0, e}); }
    static LaurentPoly v(int e = 1) { return LaurentPoly(Mono{0, e, 0}); }
    static LaurentPoly s(int e = 1) { return LaurentPoly(Mono{e, 0, 0}); }
    // z = s - s^-1
    static LaurentPoly z() { return LaurentPoly{{Mono{1, 0, 0}, 1}, {Mono{-1, 0, 0}, -1}}; }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Mono, Int>& terms() const { return terms_; }

    // += c * m * p, the fused update all inner loops go through
    void add_scaled(const LaurentPoly& p, const Mono& m, const Int& c);
    void add_term(const Mono& m, const Int& c);

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly& operator*=(const Int& c);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly operator-() const;

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    bool involves_x() const;
    bool involves_v() const;
    bool is_s_only() const;

    // image under s -> s^-1 (hooks are preserved, contents negated)
    LaurentPoly mirror_s() const;
    // image under v -> s^power; stays inside the ring
    LaurentPoly substitute_v_with_s_power(int power) const;

    // Terms are printed in descending (s, v, x) order, e.g. "v^-1*s^2 - v*s^-2".
    std::string to_string() const;

private:
    std::map<Mono, Int> terms_;
};

// Laurent polynomial in the single variable u = s^{1/N}; the codomain of the
// rank-N evaluation x -> u^-1, v -> u^{-N^2}, s -> u^N.
class UniLaurent {
public:
    UniLaurent() = default;
    explicit UniLaurent(std::map<long, Int> ts);

    const std::map<long, Int>& terms() const { return terms_; }
    friend bool operator==(const UniLaurent&, const UniLaurent&) = default;
    std::string to_string() const;

private:
    std::map<long, Int> terms_;
};

// Quantum integer [k] = (s^k - s^-k)/(s - s^-1), stored expanded as the
// balanced power sum s^{k-1} + s^{k-3} + ... + s^{1-k} so that s = 1 is a
// total evaluation.  Rejects negative k.
LaurentPoly qint(int k);

// Quantum factorial [k]! = [1][2]...[k]; [0]! = 1.
LaurentPoly qfact(int k);

// Exact division: returns r with r*q == p, or nullopt when no such r
// exists over the integer coefficient ring.
std::optional<LaurentPoly> try_exact_div(const LaurentPoly& p, const LaurentPoly& q);

// Throwing form; failure signals "not divisible" (always a bug indicator in
// the verified identities).
LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q);

// Sum of coefficients of a polynomial in s only; rejects terms with x or v.
Int eval_s1(const LaurentPoly& p);

// Evaluation at the rank-N point x = s^{-1/N}, v = s^{-N} in the finer
// variable u = s^{1/N}.
UniLaurent substitute(const LaurentPoly& p, int N);

}  // namespace skein
