#pragma once

#include <cstddef>
#include <vector>

#include "fedosov/function_ring.hpp"
#include "fedosov/rational.hpp"

namespace fedosov {

/// Polynomial in the homotopy parameter t with FunctionElement coefficients.
///
/// Satisfies the same coefficient-ring surface as FunctionElement, so the
/// whole Weyl machinery instantiates over it; integration and d/dt are the
/// extra homotopy operations. Trailing zero coefficients are trimmed, the
/// empty vector is the zero polynomial.
class TPoly {
public:
    TPoly() = default;
    explicit TPoly(FunctionElement c0) { c_.push_back(std::move(c0)); trim(); }
    explicit TPoly(std::vector<FunctionElement> cs) : c_(std::move(cs)) { trim(); }

    static TPoly zero() { return TPoly(); }

    const std::vector<FunctionElement>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int deg_t() const { return (int)c_.size() - 1; }

    const FunctionElement& coeff(std::size_t j) const { return c_[j]; }

    TPoly neg() const {
        TPoly r = *this;
        for (auto& c : r.c_) c = c.neg();
        return r;
    }

    TPoly scaled(const GaussRat& q) const {
        if (q.is_zero()) return TPoly();
        TPoly r = *this;
        for (auto& c : r.c_) c = c.scaled(q);
        r.trim();
        return r;
    }

    TPoly add(const TPoly& o) const {
        TPoly r;
        r.c_.resize(std::max(c_.size(), o.c_.size()));
        for (std::size_t j = 0; j < r.c_.size(); ++j) {
            if (j < c_.size() && j < o.c_.size())
                r.c_[j] = c_[j].add(o.c_[j]);
            else if (j < c_.size())
                r.c_[j] = c_[j];
            else
                r.c_[j] = o.c_[j];
        }
        r.trim();
        return r;
    }

    TPoly sub(const TPoly& o) const { return add(o.neg()); }

    static TPoly mul(const TPoly& a, const TPoly& b) {
        TPoly r;
        if (a.is_zero() || b.is_zero()) return r;
        r.c_.resize(a.c_.size() + b.c_.size() - 1,
                    FunctionElement::zero(a.c_[0].backend(), a.c_[0].dim()));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                if (b.c_[j].is_zero()) continue;
                r.c_[i + j] = r.c_[i + j].add(a.c_[i].mul(b.c_[j]));
            }
        }
        r.trim();
        return r;
    }

    TPoly mul(const TPoly& o) const { return mul(*this, o); }

    TPoly partial(int k) const {
        TPoly r = *this;
        for (auto& c : r.c_) c = c.partial(k);
        r.trim();
        return r;
    }

    /// d/dt.
    TPoly dt() const {
        TPoly r;
        for (std::size_t j = 1; j < c_.size(); ++j)
            r.c_.push_back(c_[j].scaled(GaussRat((long)j)));
        r.trim();
        return r;
    }

    /// Definite integral from 0 to t (raises t-degree by one).
    TPoly integrate_t() const {
        TPoly r;
        if (is_zero()) return r;
        r.c_.push_back(FunctionElement::zero(c_[0].backend(), c_[0].dim()));
        for (std::size_t j = 0; j < c_.size(); ++j)
            r.c_.push_back(c_[j].scaled(GaussRat(1, (long)(j + 1))));
        r.trim();
        return r;
    }

    TPoly truncated_t(int cap) const {
        TPoly r = *this;
        if ((int)r.c_.size() > cap + 1) r.c_.resize(cap + 1);
        r.trim();
        return r;
    }

    /// Substitutes t -> c0 + c1*t (exact affine reparameterization).
    TPoly compose_affine(const GaussRat& c0, const GaussRat& c1) const {
        TPoly r;
        // Horner: r <- r*(c0 + c1 t) + c_j, highest coefficient first
        for (std::size_t idx = c_.size(); idx-- > 0;) {
            r = r.scaled(c0).add(shift_up(r).scaled(c1));
            r = r.add(TPoly(c_[idx]));
        }
        return r;
    }

    FunctionElement eval(const GaussRat& t, Backend backend, int dim) const {
        FunctionElement acc = FunctionElement::zero(backend, dim);
        GaussRat p(1);
        for (std::size_t j = 0; j < c_.size(); ++j) {
            acc = acc.add(c_[j].scaled(p));
            p *= t;
        }
        return acc;
    }

    friend bool operator==(const TPoly& a, const TPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const TPoly& a, const TPoly& b) { return !(a == b); }

private:
    static TPoly shift_up(const TPoly& p) { // multiply by t
        TPoly r;
        if (p.is_zero()) return r;
        r.c_.push_back(FunctionElement::zero(p.c_[0].backend(), p.c_[0].dim()));
        for (const auto& c : p.c_) r.c_.push_back(c);
        r.trim();
        return r;
    }

    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<FunctionElement> c_;
};

} // namespace fedosov
