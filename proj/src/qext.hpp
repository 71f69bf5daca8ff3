#pragma once

#include <stdexcept>

#include "rational.hpp"

namespace cremona {

/// Element a + b sqrt(d) of a real or imaginary quadratic extension of Q.
/// d = 0 marks a plain rational (b = 0); mixed-d arithmetic is rejected.
class QuadExt {
public:
    QuadExt() : d_(0), a_(0), b_(0) {}
    QuadExt(Rational a) : d_(0), a_(a), b_(0) {}
    QuadExt(long long a) : d_(0), a_(a), b_(0) {}
    QuadExt(int d, Rational a, Rational b) : d_(d), a_(a), b_(b) { normalize(); }

    static QuadExt sqrt_of(int d) { return QuadExt(d, Rational(0), Rational(1)); }

    int d() const { return d_; }
    Rational a() const { return a_; }
    Rational b() const { return b_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const { return d_ == 0; }

    QuadExt conj() const { return QuadExt(d_, a_, -b_); }
    Rational norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }

    friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
        int d = join(x, y);
        return QuadExt(d, x.a_ + y.a_, x.b_ + y.b_);
    }
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
        int d = join(x, y);
        return QuadExt(d, x.a_ - y.a_, x.b_ - y.b_);
    }
    QuadExt operator-() const { return QuadExt(d_, -a_, -b_); }
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
        int d = join(x, y);
        return QuadExt(d, x.a_ * y.a_ + Rational(d) * x.b_ * y.b_,
                       x.a_ * y.b_ + x.b_ * y.a_);
    }
    friend QuadExt operator/(const QuadExt& x, const QuadExt& y) {
        if (y.is_zero()) throw std::domain_error("division by zero");
        Rational n = y.norm();
        if (n.is_zero()) throw std::domain_error("division by a zero-norm element");
        QuadExt num = x * y.conj();
        return QuadExt(num.d_, num.a_ / n, num.b_ / n);
    }
    QuadExt& operator+=(const QuadExt& o) { return *this = *this + o; }
    QuadExt& operator-=(const QuadExt& o) { return *this = *this - o; }
    QuadExt& operator*=(const QuadExt& o) { return *this = *this * o; }

    // normalization forces d = 0 whenever b = 0, so fieldwise compare works
    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

    std::string str() const {
        if (d_ == 0) return a_.str();
        return a_.str() + "+" + b_.str() + "*sqrt(" + std::to_string(d_) + ")";
    }

private:
    static int join(const QuadExt& x, const QuadExt& y) {
        if (x.d_ == 0) return y.d_;
        if (y.d_ == 0 || y.d_ == x.d_) return x.d_;
        throw std::invalid_argument("mixing different quadratic extensions");
    }

    void normalize() {
        if (b_.is_zero()) d_ = 0;
        else if (d_ == 0) throw std::invalid_argument("irrational part needs a nonzero d");
    }

    int d_;
    Rational a_, b_;
};

}  // namespace cremona
