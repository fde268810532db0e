#include "skein/ratfunc.hpp"

#include <stdexcept>
#include <utility>

namespace skein {

namespace {

Int coefficient_content(const LaurentPoly& p) {
    Int g = 0;
    for (const auto& [m, c] : p.terms()) g = gcd(g, c);
    return g;
}

LaurentPoly divide_coefficients(const LaurentPoly& p, const Int& g) {
    LaurentPoly out;
    for (const auto& [m, c] : p.terms()) out.add_term(m, c / g);
    return out;
}

}  // namespace

RatFunc::RatFunc(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::invalid_argument("RatFunc: zero denominator");
    reduce();
}

void RatFunc::reduce() {
    if (num_.is_zero()) {
        den_ = LaurentPoly(1);
        return;
    }
    if (!den_.is_one()) {
        if (auto q = try_exact_div(num_, den_)) {
            num_ = std::move(*q);
            den_ = LaurentPoly(1);
            return;
        }
    }
    Int g = gcd(coefficient_content(num_), coefficient_content(den_));
    // sign convention: leading denominator coefficient positive
    if (den_.terms().rbegin()->second < 0) g = -g;
    if (g != 1) {
        num_ = divide_coefficients(num_, g);
        den_ = divide_coefficients(den_, g);
    }
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
    if (den_ == o.den_) {
        num_ += o.num_;
    } else if (auto q = try_exact_div(o.den_, den_)) {
        num_ = num_ * *q + o.num_;
        den_ = o.den_;
    } else if (auto r = try_exact_div(den_, o.den_)) {
        num_ += o.num_ * *r;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    }
    reduce();
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    reduce();
    return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
    if (o.is_zero()) throw std::domain_error("RatFunc: division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    reduce();
    return *this;
}

RatFunc RatFunc::operator-() const {
    RatFunc out(*this);
    out.num_ = -out.num_;
    return out;
}

RatFunc RatFunc::substitute_v_with_s_power(int power) const {
    return RatFunc(num_.substitute_v_with_s_power(power),
                   den_.substitute_v_with_s_power(power));
}

std::string RatFunc::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

RatFunc loop_factor() {
    return RatFunc(LaurentPoly::v(-1) - LaurentPoly::v(1), LaurentPoly::z());
}

}  // namespace skein
