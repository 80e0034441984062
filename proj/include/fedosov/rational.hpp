#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

#include "fedosov/errors.hpp"

namespace fedosov {

/// Gaussian rational: an element of Q(i) with exact arbitrary-precision parts.
///
/// GMP keeps mpq_class values canonical (lowest terms, positive denominator)
/// under arithmetic, so equality is plain component comparison.
class GaussRat {
public:
    GaussRat() : re_(0), im_(0) {}
    GaussRat(long n) : re_(n), im_(0) {}
    GaussRat(long num, long den) : re_(mpq_class(num, den)), im_(0) { re_.canonicalize(); }
    GaussRat(mpq_class re) : re_(std::move(re)), im_(0) {}
    GaussRat(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussRat i() { return GaussRat(mpq_class(0), mpq_class(1)); }
    static GaussRat make(long rn, long rd, long in, long id) {
        mpq_class r(rn, rd), m(in, id);
        r.canonicalize();
        m.canonicalize();
        return GaussRat(r, m);
    }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GaussRat conj() const { return GaussRat(re_, -im_); }

    GaussRat operator-() const { return GaussRat(-re_, -im_); }

    GaussRat& operator+=(const GaussRat& o) {
        re_ += o.re_;
        im_ += o.im_;
        return *this;
    }
    GaussRat& operator-=(const GaussRat& o) {
        re_ -= o.re_;
        im_ -= o.im_;
        return *this;
    }
    GaussRat& operator*=(const GaussRat& o) {
        mpq_class r = re_ * o.re_ - im_ * o.im_;
        mpq_class m = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(m);
        return *this;
    }

    friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
    friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }

    GaussRat inv() const {
        if (is_zero()) throw Error("GaussRat: division by zero");
        mpq_class n = re_ * re_ + im_ * im_;
        return GaussRat(re_ / n, -im_ / n);
    }
    friend GaussRat operator/(const GaussRat& a, const GaussRat& b) { return a * b.inv(); }

    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

    /// "p/q" (real) or "p/q+p'/q'i" rendering; exact round trip with parse().
    std::string str() const {
        if (is_real()) return re_.get_str();
        std::string s = sgn(re_) == 0 ? std::string() : re_.get_str();
        std::string ims = im_.get_str();
        if (!s.empty() && ims[0] != '-') s += "+";
        return s + ims + "i";
    }

    /// Parses the real part only ("p/q" / "p"); complex IO lives in json_io.
    static GaussRat parse_real(const std::string& s) {
        try {
            mpq_class q(s);
            q.canonicalize();
            return GaussRat(q);
        } catch (const std::invalid_argument&) {
            throw SchemaError("not a rational: '" + s + "'");
        }
    }

private:
    mpq_class re_, im_;
};

inline GaussRat operator*(long n, const GaussRat& a) { return GaussRat(n) * a; }

} // namespace fedosov
