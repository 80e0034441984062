#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "fedosov/errors.hpp"
#include "fedosov/function_ring.hpp"
#include "fedosov/multi_index.hpp"
#include "fedosov/rational.hpp"

namespace fedosov {

/// Target space of a Weyl-bundle section: scalar-, endomorphism- or
/// vector-valued.
enum class Kind { C, E, B };

/// Kind pairing for fiberwise products, mirroring the fiber value table.
inline Kind pair_kind(Kind a, Kind b) {
    if (a == Kind::B && (b == Kind::B || b == Kind::E))
        throw IncompatiblePairing("kind pairing B*B / B*E undefined");
    if (a == Kind::B || b == Kind::B) return Kind::B;
    if (a == Kind::E || b == Kind::E) return Kind::E;
    return Kind::C;
}

/// Kind of a sum; C embeds into E.
inline Kind sum_kind(Kind a, Kind b) {
    if (a == b) return a;
    if (a == Kind::B || b == Kind::B)
        throw IncompatiblePairing("cannot add vector-valued and non-vector sections");
    return Kind::E;
}

struct WeylKey {
    int h = 0;              // power of the deformation parameter
    YIdx y;                 // sorted fiber multi-index
    std::uint32_t dx = 0;   // exterior factor bitmask

    int ydeg() const { return (int)y.size(); }
    int degree() const { return 2 * h + (int)y.size(); }
    int form_deg() const { return std::popcount(dx); }

    friend bool operator==(const WeylKey&, const WeylKey&) = default;
    friend bool operator<(const WeylKey& a, const WeylKey& b) {
        if (a.h != b.h) return a.h < b.h;
        if (a.y != b.y) return a.y < b.y;
        return a.dx < b.dx;
    }
};

/// Constant antisymmetric Poisson tensor (components of omega^{ij}), the
/// inverse of the Darboux symplectic matrix.
struct Poisson {
    int dim = 0;
    std::vector<GaussRat> up; // row-major
    std::vector<std::pair<int, int>> nonzero;

    Poisson() = default;
    Poisson(int d, std::vector<GaussRat> entries) : dim(d), up(std::move(entries)) {
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j)
                if (!at(i, j).is_zero()) nonzero.emplace_back(i, j);
    }
    const GaussRat& at(int i, int j) const { return up[(std::size_t)i * dim + j]; }
};

/// Truncated graded series in h, y and dx over a coefficient ring.
///
/// The coefficient type must provide is_zero, add, sub, neg, scaled(GaussRat),
/// mul (static order-preserving product), partial(k) and operator==; both
/// FunctionElement and TPoly<FunctionElement> qualify.
///
/// Monomials of Fedosov degree 2k + |y| above `trunc` are dropped on
/// insertion. Ordinary elements require h-powers k >= 0; elements with the
/// `extended` flag admit k < 0 as long as 2k + |y| >= 0 stays true.
template <class Coeff>
class WeylElementT {
public:
    WeylElementT() = default;
    WeylElementT(int dim, Kind kind, int trunc, bool extended = false)
        : dim_(dim), kind_(kind), trunc_(trunc), extended_(extended) {}

    int dim() const { return dim_; }
    Kind kind() const { return kind_; }
    int trunc() const { return trunc_; }
    bool extended() const { return extended_; }
    const std::map<WeylKey, Coeff>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void set_kind(Kind k) { kind_ = k; }
    WeylElementT with_extended(bool e) const {
        WeylElementT r(dim_, kind_, trunc_, e);
        for (const auto& [k, c] : terms_) r.add_term(k, c);
        return r;
    }
    WeylElementT with_trunc(int t) const {
        WeylElementT r(dim_, kind_, t, extended_);
        for (const auto& [k, c] : terms_) r.add_term(k, c);
        return r;
    }

    void add_term(const WeylKey& key, const Coeff& c) {
        if (c.is_zero()) return;
        if (key.degree() > trunc_) return;
        if (key.h < 0) {
            if (!extended_)
                throw ExtendedGradeViolation("negative h-power on a non-extended element");
            if (key.degree() < 0)
                throw ExtendedGradeViolation("monomial with 2k+|y| < 0");
        }
        if (key.dx >= (1u << dim_)) throw Error("dx index out of range");
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(key, c);
        } else {
            it->second = it->second.add(c);
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    /// Minimum of 2k + |y| over nonzero monomials; kInfOrder for zero.
    int degree() const {
        int d = kInfOrder;
        for (const auto& [k, c] : terms_) d = std::min(d, k.degree());
        return d;
    }

    int max_form_degree() const {
        int d = 0;
        for (const auto& [k, c] : terms_) d = std::max(d, k.form_deg());
        return d;
    }

    /// P_m: the part of Fedosov degree exactly m.
    WeylElementT graded_part(int m) const {
        WeylElementT r(dim_, kind_, trunc_, extended_);
        for (const auto& [k, c] : terms_)
            if (k.degree() == m) r.add_term(k, c);
        return r;
    }

    /// Drops monomials of degree above m (comparison helper near the
    /// truncation boundary for identities that lower degree).
    WeylElementT truncated_degree(int m) const {
        WeylElementT r(dim_, kind_, trunc_, extended_);
        for (const auto& [k, c] : terms_)
            if (k.degree() <= m) r.add_term(k, c);
        return r;
    }

    WeylElementT form_part(int p) const {
        WeylElementT r(dim_, kind_, trunc_, extended_);
        for (const auto& [k, c] : terms_)
            if (k.form_deg() == p) r.add_term(k, c);
        return r;
    }

    /// Part with no y and no dx factors, per h-power.
    std::map<int, Coeff> part_00() const {
        std::map<int, Coeff> r;
        for (const auto& [k, c] : terms_)
            if (k.y.empty() && k.dx == 0) r.emplace(k.h, c);
        return r;
    }

    WeylElementT neg() const {
        WeylElementT r(dim_, kind_, trunc_, extended_);
        for (const auto& [k, c] : terms_) r.terms_.emplace(k, c.neg());
        return r;
    }

    WeylElementT scaled(const GaussRat& q) const {
        WeylElementT r(dim_, kind_, trunc_, extended_);
        if (q.is_zero()) return r;
        for (const auto& [k, c] : terms_) r.add_term(k, c.scaled(q));
        return r;
    }

    WeylElementT add(const WeylElementT& o) const {
        require_same_space(o);
        WeylElementT r(dim_, sum_kind(kind_, o.kind_), std::min(trunc_, o.trunc_),
                       extended_ || o.extended_);
        for (const auto& [k, c] : terms_) r.add_term(k, c);
        for (const auto& [k, c] : o.terms_) r.add_term(k, c);
        return r;
    }
    WeylElementT sub(const WeylElementT& o) const { return add(o.neg()); }

    /// Multiplication by h^shift. Negative shifts require either the extended
    /// flag or exact cancellation of the offending part beforehand.
    WeylElementT shifted_h(int shift, bool make_extended = false) const {
        WeylElementT r(dim_, kind_, trunc_, extended_ || make_extended);
        for (const auto& [k, c] : terms_) {
            WeylKey nk = k;
            nk.h += shift;
            r.add_term(nk, c);
        }
        return r;
    }

    /// Fiberwise exterior differential of coefficients: dx^j wedge d_j(coeff).
    WeylElementT d_base() const {
        WeylElementT r(dim_, kind_, trunc_, extended_);
        for (const auto& [k, c] : terms_)
            for (int j = 0; j < dim_; ++j) {
                int sg = front_wedge_sign(j, k.dx);
                if (sg == 0) continue;
                Coeff dc = c.partial(j);
                if (dc.is_zero()) continue;
                WeylKey nk = k;
                nk.dx |= (1u << j);
                r.add_term(nk, sg == 1 ? dc : dc.neg());
            }
        return r;
    }

    /// delta a = dx^k wedge da/dy^k.
    WeylElementT delta() const {
        WeylElementT r(dim_, kind_, trunc_, extended_);
        for (const auto& [k, c] : terms_) {
            int prev = -1;
            for (std::size_t t = 0; t < k.y.size(); ++t) {
                int i = k.y[t];
                if (i == prev) continue; // one pass per distinct index
                prev = i;
                int sg = front_wedge_sign(i, k.dx);
                if (sg == 0) continue;
                int mult = y_mult(k.y, i);
                WeylKey nk{k.h, y_erase_one(k.y, i), k.dx | (1u << i)};
                r.add_term(nk, c.scaled(GaussRat((long)(sg * mult))));
            }
        }
        return r;
    }

    /// delta^{-1}, with weight 1/(p+q) on the (p-fold y, q-fold dx) part and
    /// zero on the p = q = 0 part.
    WeylElementT delta_inv() const {
        WeylElementT r(dim_, kind_, trunc_, extended_);
        for (const auto& [k, c] : terms_) {
            int q = k.form_deg();
            if (q == 0) continue;
            int p = k.ydeg();
            GaussRat w(1, p + q);
            std::uint32_t dx = k.dx;
            int pos = 0;
            while (dx) {
                int s = std::countr_zero(dx);
                dx &= dx - 1;
                int sg = (pos % 2 == 0) ? 1 : -1;
                WeylKey nk{k.h, y_insert(k.y, s), k.dx & ~(1u << s)};
                r.add_term(nk, c.scaled(sg == 1 ? w : -w));
                ++pos;
            }
        }
        return r;
    }

    friend bool operator==(const WeylElementT& a, const WeylElementT& b) {
        return a.dim_ == b.dim_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const WeylElementT& a, const WeylElementT& b) { return !(a == b); }

    void require_same_space(const WeylElementT& o) const {
        if (dim_ != o.dim_) throw Error("Weyl elements of different dimension");
    }

private:
    int dim_ = 0;
    Kind kind_ = Kind::C;
    int trunc_ = 0;
    bool extended_ = false;
    std::map<WeylKey, Coeff> terms_;
};

/// Fiberwise Moyal product: sum over m of
///   (-ih/2)^m / m! d^m_y a . omega^{i j} ... d^m_y b,
/// truncated at the common degree bound. Degree-additive on monomials, so a
/// whole term pair is skipped once its degree exceeds the truncation.
template <class Coeff>
WeylElementT<Coeff> moyal_mul(const WeylElementT<Coeff>& a, const WeylElementT<Coeff>& b,
                              const Poisson& om) {
    a.require_same_space(b);
    int trunc = std::min(a.trunc(), b.trunc());
    WeylElementT<Coeff> out(a.dim(), pair_kind(a.kind(), b.kind()), trunc,
                            a.extended() || b.extended());
    if (a.is_zero() || b.is_zero()) return out;

    const GaussRat minus_i_half = GaussRat(mpq_class(0), mpq_class(-1, 2));

    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) {
            int deg = ka.degree() + kb.degree();
            if (deg > trunc) continue;
            int sg0 = wedge_sign(ka.dx, kb.dx);
            if (sg0 == 0) continue;
            Coeff fab = Coeff::mul(ca, cb);
            if (fab.is_zero()) continue;
            std::uint32_t dx = ka.dx | kb.dx;
            int hbase = ka.h + kb.h;

            // states: surviving y parts of both factors with rational weight
            std::map<std::pair<YIdx, YIdx>, GaussRat> cur;
            cur.emplace(std::make_pair(ka.y, kb.y), GaussRat((long)sg0));
            GaussRat prefactor(1);
            for (int m = 0;; ++m) {
                if (m > 0) {
                    prefactor *= minus_i_half;
                    prefactor *= GaussRat(1, m);
                }
                for (const auto& [ys, w] : cur) {
                    WeylKey nk{hbase + m, y_merge(ys.first, ys.second), dx};
                    out.add_term(nk, fab.scaled(w * prefactor));
                }
                if (cur.empty()) break;
                // one more omega contraction
                std::map<std::pair<YIdx, YIdx>, GaussRat> next;
                for (const auto& [ys, w] : cur) {
                    for (const auto& [i, j] : om.nonzero) {
                        int mi = y_mult(ys.first, i);
                        if (mi == 0) continue;
                        int mj = y_mult(ys.second, j);
                        if (mj == 0) continue;
                        auto key = std::make_pair(y_erase_one(ys.first, i),
                                                  y_erase_one(ys.second, j));
                        GaussRat add = w * om.at(i, j) * GaussRat((long)(mi * mj));
                        auto it = next.find(key);
                        if (it == next.end())
                            next.emplace(std::move(key), std::move(add));
                        else
                            it->second += add;
                    }
                }
                cur = std::move(next);
                if (cur.empty()) break;
            }
        }
    }
    return out;
}

/// Graded commutator [a, b] = a.b - (-1)^{rs} b.a for form degrees r, s of
/// the homogeneous components, with an arbitrary product.
template <class Coeff, class Mul>
WeylElementT<Coeff> graded_commutator(const WeylElementT<Coeff>& a, const WeylElementT<Coeff>& b,
                                      Mul&& mul) {
    WeylElementT<Coeff> acc = mul(a, b);
    int pa = a.max_form_degree(), pb = b.max_form_degree();
    for (int ra = 0; ra <= pa; ++ra) {
        WeylElementT<Coeff> ar = a.form_part(ra);
        if (ar.is_zero()) continue;
        for (int rb = 0; rb <= pb; ++rb) {
            WeylElementT<Coeff> br = b.form_part(rb);
            if (br.is_zero()) continue;
            WeylElementT<Coeff> ba = mul(br, ar);
            acc = (ra * rb) % 2 == 0 ? acc.sub(ba) : acc.add(ba);
        }
    }
    return acc;
}

/// Converts coefficients; used to embed static elements into t-polynomial
/// ones and to evaluate the latter at a parameter value.
template <class B, class A, class F>
WeylElementT<B> map_coeffs(const WeylElementT<A>& a, F&& f) {
    WeylElementT<B> r(a.dim(), a.kind(), a.trunc(), a.extended());
    for (const auto& [k, c] : a.terms()) r.add_term(k, f(c));
    return r;
}

/// Embeds a function h-series (map h-power -> coefficient) as a y-free,
/// dx-free element.
template <class Coeff>
WeylElementT<Coeff> from_h_series(const std::map<int, Coeff>& hs, int dim, Kind kind, int trunc,
                                  bool extended = false) {
    WeylElementT<Coeff> r(dim, kind, trunc, extended);
    for (const auto& [h, c] : hs) r.add_term(WeylKey{h, {}, 0}, c);
    return r;
}

} // namespace fedosov
