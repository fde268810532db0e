#pragma once

#include "skein/laurent.hpp"

#include <string>

namespace skein {

// Quotient of two Laurent polynomials.  Equality is decided by
// cross-multiplication; no canonical form is maintained.  Reduction is
// opportunistic only: common integer/monomial content is stripped, and a
// quotient that happens to be polynomial is collapsed.
class RatFunc {
public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(int c) : num_(c), den_(1) {}
    RatFunc(LaurentPoly p) : num_(std::move(p)), den_(1) {}
    RatFunc(LaurentPoly num, LaurentPoly den);

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }

    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);

    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
    RatFunc operator-() const;

    // a/b == c/d iff a*d == c*b
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }

    bool involves_x() const { return num_.involves_x() || den_.involves_x(); }

    RatFunc substitute_v_with_s_power(int power) const;

    std::string to_string() const;

private:
    LaurentPoly num_;
    LaurentPoly den_;

    void reduce();
};

// Value of a disjoint null-homotopic loop, (v^-1 - v)/z.
RatFunc loop_factor();

}  // namespace skein
