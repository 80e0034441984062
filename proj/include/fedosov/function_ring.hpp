#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <numeric>
#include <variant>
#include <vector>

#include "fedosov/errors.hpp"
#include "fedosov/fiber.hpp"

namespace fedosov {

/// Sentinel for "exact to all orders" (constants, torus data, exact zeros).
inline constexpr int kInfOrder = std::numeric_limits<int>::max() / 4;

inline int sat_add(int a, int b) {
    if (a >= kInfOrder || b >= kInfOrder) return kInfOrder;
    return std::min(a + b, kInfOrder);
}
inline int sat_sub(int a, int b) {
    if (a >= kInfOrder) return kInfOrder;
    if (b >= kInfOrder) return 0;
    return a - b;
}

enum class Backend { Jet, Torus };

/// Truncated Taylor jet at a basepoint.
///
/// `acc` is the trust horizon: coefficients of total order > acc are unknown,
/// so products truncate there. `usable` is the derivative meter; it only
/// decreases, and fn_partial refuses to run once it hits zero. Loading a jet
/// at order J sets both to J. The two drift apart under multiplication: the
/// truncation order follows min(val_a + acc_b, val_b + acc_a) while the meter
/// follows the conservative min(usable_a - val_b, usable_b - val_a).
class JetElement {
public:
    using Key = std::vector<std::uint8_t>; // exponent vector, length dim

    JetElement() = default;
    explicit JetElement(int dim, int order = kInfOrder)
        : dim_(dim), acc_(order), usable_(order) {}

    int dim() const { return dim_; }
    int acc() const { return acc_; }
    int usable() const { return usable_; }
    const std::map<Key, FiberValue>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    static int order_of(const Key& k) { return std::accumulate(k.begin(), k.end(), 0); }

    /// Lowest total order present; kInfOrder for the zero jet.
    int valuation() const {
        int v = kInfOrder;
        for (const auto& [k, c] : terms_) v = std::min(v, order_of(k));
        return v;
    }

    void set_budgets(int acc, int usable) {
        acc_ = acc;
        usable_ = usable;
    }

    void add_term(const Key& k, const FiberValue& v) {
        if ((int)k.size() != dim_) throw Error("jet term key has wrong dimension");
        if (order_of(k) > acc_) return;
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            if (!v.is_zero()) terms_.emplace(k, v);
        } else {
            it->second = it->second + v;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    const FiberValue* find(const Key& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? nullptr : &it->second;
    }

private:
    int dim_ = 0;
    int acc_ = kInfOrder;
    int usable_ = kInfOrder;
    std::map<Key, FiberValue> terms_;
};

/// Trigonometric polynomial on the 2pi-periodic torus: finitely many
/// exp(i k.x) modes with Q(i)-valued fiber coefficients. Reality is not
/// required. Exact under all ring operations and derivatives.
class TorusElement {
public:
    using Key = std::vector<std::int16_t>; // frequency vector, length dim

    TorusElement() = default;
    explicit TorusElement(int dim) : dim_(dim) {}

    int dim() const { return dim_; }
    const std::map<Key, FiberValue>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Key& k, const FiberValue& v) {
        if ((int)k.size() != dim_) throw Error("torus term key has wrong dimension");
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            if (!v.is_zero()) terms_.emplace(k, v);
        } else {
            it->second = it->second + v;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

private:
    int dim_ = 0;
    std::map<Key, FiberValue> terms_;
};

/// Element of the base function ring: one of the two exact backends.
class FunctionElement {
public:
    FunctionElement() : v_(JetElement{}) {}
    FunctionElement(JetElement j) : v_(std::move(j)) {}
    FunctionElement(TorusElement t) : v_(std::move(t)) {}

    static FunctionElement zero(Backend b, int dim) {
        if (b == Backend::Jet) return FunctionElement(JetElement(dim));
        return FunctionElement(TorusElement(dim));
    }

    static FunctionElement constant(Backend b, int dim, FiberValue v) {
        if (b == Backend::Jet) {
            JetElement j(dim);
            j.add_term(JetElement::Key(dim, 0), v);
            return FunctionElement(std::move(j));
        }
        TorusElement t(dim);
        t.add_term(TorusElement::Key(dim, 0), v);
        return FunctionElement(std::move(t));
    }

    static FunctionElement one(Backend b, int dim) {
        return constant(b, dim, FiberValue(GaussRat(1)));
    }

    Backend backend() const {
        return std::holds_alternative<JetElement>(v_) ? Backend::Jet : Backend::Torus;
    }
    int dim() const {
        return backend() == Backend::Jet ? jet().dim() : torus().dim();
    }
    const JetElement& jet() const { return std::get<JetElement>(v_); }
    JetElement& jet() { return std::get<JetElement>(v_); }
    const TorusElement& torus() const { return std::get<TorusElement>(v_); }
    TorusElement& torus() { return std::get<TorusElement>(v_); }

    bool is_zero() const {
        return backend() == Backend::Jet ? jet().is_zero() : torus().is_zero();
    }

    /// True when every coefficient is central (scalar multiple of identity).
    bool is_central() const {
        if (backend() == Backend::Jet) {
            for (const auto& [k, c] : jet().terms())
                if (!c.is_central()) return false;
        } else {
            for (const auto& [k, c] : torus().terms())
                if (!c.is_central()) return false;
        }
        return true;
    }

    /// Value at the basepoint: x = 0 on both backends.
    FiberValue at_basepoint() const {
        if (backend() == Backend::Jet) {
            const FiberValue* v = jet().find(JetElement::Key(jet().dim(), 0));
            return v ? *v : FiberValue(GaussRat(0));
        }
        FiberValue acc{GaussRat(0)};
        for (const auto& [k, c] : torus().terms()) acc = acc + c;
        return acc;
    }

    FunctionElement neg() const { return scaled(GaussRat(-1)); }

    FunctionElement scaled(const GaussRat& c) const {
        FunctionElement r = *this;
        if (c.is_zero()) return zero(backend(), dim());
        if (backend() == Backend::Jet) {
            JetElement out(jet().dim());
            out.set_budgets(jet().acc(), jet().usable());
            for (const auto& [k, v] : jet().terms()) out.add_term(k, v.scaled(c));
            r.v_ = std::move(out);
        } else {
            TorusElement out(torus().dim());
            for (const auto& [k, v] : torus().terms()) out.add_term(k, v.scaled(c));
            r.v_ = std::move(out);
        }
        return r;
    }

    FunctionElement add(const FunctionElement& o) const {
        require_compatible(o);
        if (backend() == Backend::Jet) {
            const JetElement &a = jet(), &b = o.jet();
            JetElement out(a.dim());
            out.set_budgets(std::min(a.acc(), b.acc()), std::min(a.usable(), b.usable()));
            if (a.is_zero()) out.set_budgets(b.acc(), b.usable());
            if (b.is_zero()) out.set_budgets(a.acc(), a.usable());
            for (const auto& [k, v] : a.terms()) out.add_term(k, v);
            for (const auto& [k, v] : b.terms()) out.add_term(k, v);
            return FunctionElement(std::move(out));
        }
        TorusElement out = torus();
        for (const auto& [k, v] : o.torus().terms()) out.add_term(k, v);
        return FunctionElement(std::move(out));
    }

    FunctionElement sub(const FunctionElement& o) const { return add(o.neg()); }

    static FunctionElement mul(const FunctionElement& a, const FunctionElement& b) {
        return a.mul(b);
    }

    /// Exact product with the factor-pairing table applied coefficientwise.
    FunctionElement mul(const FunctionElement& o) const {
        require_compatible(o);
        if (backend() == Backend::Jet) {
            const JetElement &a = jet(), &b = o.jet();
            if (a.is_zero() || b.is_zero()) return zero(Backend::Jet, a.dim());
            int va = a.valuation(), vb = b.valuation();
            int acc = std::min(sat_add(va, b.acc()), sat_add(vb, a.acc()));
            int usable = std::max(0, std::min(sat_sub(a.usable(), vb), sat_sub(b.usable(), va)));
            JetElement out(a.dim());
            out.set_budgets(acc, usable >= kInfOrder ? kInfOrder : usable);
            JetElement::Key key(a.dim());
            for (const auto& [ka, cva] : a.terms()) {
                int oa = JetElement::order_of(ka);
                for (const auto& [kb, cvb] : b.terms()) {
                    if (oa + JetElement::order_of(kb) > acc) continue;
                    for (int i = 0; i < a.dim(); ++i) key[i] = (std::uint8_t)(ka[i] + kb[i]);
                    out.add_term(key, fiber_mul(cva, cvb));
                }
            }
            return FunctionElement(std::move(out));
        }
        const TorusElement &a = torus(), &b = o.torus();
        TorusElement out(a.dim());
        TorusElement::Key key(a.dim());
        for (const auto& [ka, cva] : a.terms())
            for (const auto& [kb, cvb] : b.terms()) {
                for (int i = 0; i < a.dim(); ++i) key[i] = (std::int16_t)(ka[i] + kb[i]);
                out.add_term(key, fiber_mul(cva, cvb));
            }
        return FunctionElement(std::move(out));
    }

    /// Exact partial derivative along coordinate k.
    FunctionElement partial(int k) const {
        if (backend() == Backend::Jet) {
            const JetElement& a = jet();
            bool constant = true;
            for (const auto& [key, v] : a.terms())
                if (JetElement::order_of(key) > 0) constant = false;
            if (constant) return zero(Backend::Jet, a.dim());
            if (a.usable() < 1)
                throw InsufficientJetOrder(
                    "jet order budget exhausted: supply input jets to a higher order");
            JetElement out(a.dim());
            out.set_budgets(sat_sub(a.acc(), 1), sat_sub(a.usable(), 1));
            for (const auto& [key, v] : a.terms()) {
                if (key[k] == 0) continue;
                JetElement::Key nk = key;
                nk[k] -= 1;
                out.add_term(nk, v.scaled(GaussRat((long)key[k])));
            }
            return FunctionElement(std::move(out));
        }
        const TorusElement& a = torus();
        TorusElement out(a.dim());
        for (const auto& [key, v] : a.terms()) {
            if (key[k] == 0) continue;
            out.add_term(key, v.scaled(GaussRat(mpq_class(0), mpq_class((long)key[k]))));
        }
        return FunctionElement(std::move(out));
    }

    /// Torus integral in torus-volume units: the symbolic factor (2pi)^{2n}
    /// is divided out so the result stays in Q(i).
    FiberValue integrate() const {
        if (backend() != Backend::Torus)
            throw UnsupportedBackend("fn_integrate: torus backend only");
        const FiberValue* v = [&]() -> const FiberValue* {
            auto it = torus().terms().find(TorusElement::Key(torus().dim(), 0));
            return it == torus().terms().end() ? nullptr : &it->second;
        }();
        return v ? *v : FiberValue(GaussRat(0));
    }

    friend bool operator==(const FunctionElement& a, const FunctionElement& b) {
        if (a.backend() != b.backend()) return a.is_zero() && b.is_zero();
        if (a.backend() == Backend::Jet)
            return a.jet().dim() == b.jet().dim() && a.jet().terms() == b.jet().terms();
        return a.torus().dim() == b.torus().dim() && a.torus().terms() == b.torus().terms();
    }
    friend bool operator!=(const FunctionElement& a, const FunctionElement& b) {
        return !(a == b);
    }

private:
    void require_compatible(const FunctionElement& o) const {
        if (backend() != o.backend())
            throw BackendMismatch("jet and torus elements mixed in one operation");
        if (dim() != o.dim()) throw BackendMismatch("function ring dimension mismatch");
    }

    std::variant<JetElement, TorusElement> v_;
};

inline FunctionElement fn_mul(const FunctionElement& a, const FunctionElement& b) {
    return a.mul(b);
}
inline FunctionElement fn_partial(const FunctionElement& a, int k) { return a.partial(k); }
inline FiberValue fn_integrate(const FunctionElement& a) { return a.integrate(); }

} // namespace fedosov
