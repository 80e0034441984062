#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "fedosov/errors.hpp"
#include "fedosov/rational.hpp"

namespace fedosov {

/// Value in a fiber of C, End(E) or E: a scalar, an r x r matrix, or an
/// r-component column vector over Q(i).
///
/// A scalar stands for the corresponding multiple of the identity wherever a
/// matrix is expected; central matrices are normalized back to scalars so that
/// centrality tests are structural.
class FiberValue {
public:
    enum class Tag { Scalar, Matrix, Vector };

    FiberValue() : tag_(Tag::Scalar), data_(1) {}
    explicit FiberValue(GaussRat s) : tag_(Tag::Scalar), data_{std::move(s)} {}

    static FiberValue scalar(GaussRat s) { return FiberValue(std::move(s)); }

    static FiberValue matrix(int rank, std::vector<GaussRat> rowmajor) {
        FiberValue v;
        if ((int)rowmajor.size() != rank * rank) throw Error("FiberValue: bad matrix size");
        v.tag_ = Tag::Matrix;
        v.rank_ = rank;
        v.data_ = std::move(rowmajor);
        return v.normalized();
    }

    static FiberValue vector(std::vector<GaussRat> comps) {
        FiberValue v;
        v.tag_ = Tag::Vector;
        v.rank_ = (int)comps.size();
        v.data_ = std::move(comps);
        return v;
    }

    static FiberValue identity(int rank) {
        return FiberValue(GaussRat(1)); // scalar 1 embeds as the identity
        (void)rank;
    }

    Tag tag() const { return tag_; }
    int rank() const { return rank_; }
    bool is_scalar() const { return tag_ == Tag::Scalar; }
    bool is_matrix() const { return tag_ == Tag::Matrix; }
    bool is_vector() const { return tag_ == Tag::Vector; }

    const GaussRat& scalar_value() const { return data_[0]; }
    const GaussRat& at(int i, int j) const { return data_[(std::size_t)i * rank_ + j]; }
    const GaussRat& at(int i) const { return data_[i]; }
    const std::vector<GaussRat>& data() const { return data_; }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!x.is_zero()) return false;
        return true;
    }

    /// Central values (scalars, and matrices that already collapsed to them).
    bool is_central() const { return tag_ == Tag::Scalar; }

    FiberValue operator-() const {
        FiberValue r = *this;
        for (auto& x : r.data_) x = -x;
        return r;
    }

    FiberValue scaled(const GaussRat& c) const {
        FiberValue r = *this;
        for (auto& x : r.data_) x *= c;
        return r.normalized();
    }

    friend FiberValue operator+(const FiberValue& a, const FiberValue& b) {
        if (a.tag_ == Tag::Scalar && b.tag_ == Tag::Scalar)
            return FiberValue(a.data_[0] + b.data_[0]);
        if (a.tag_ == Tag::Vector || b.tag_ == Tag::Vector) {
            if (a.tag_ != Tag::Vector || b.tag_ != Tag::Vector || a.rank_ != b.rank_)
                throw IncompatiblePairing("cannot add vector and non-vector fiber values");
            FiberValue r = a;
            for (int i = 0; i < a.rank_; ++i) r.data_[i] += b.data_[i];
            return r;
        }
        // matrix + matrix, possibly via scalar embedding
        const FiberValue& m = a.tag_ == Tag::Matrix ? a : b;
        FiberValue r = m;
        const FiberValue& o = (&m == &a) ? b : a;
        if (o.tag_ == Tag::Matrix) {
            if (o.rank_ != m.rank_) throw IncompatiblePairing("fiber rank mismatch");
            for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += o.data_[i];
        } else {
            for (int i = 0; i < m.rank_; ++i) r.data_[(std::size_t)i * m.rank_ + i] += o.data_[0];
        }
        return r.normalized();
    }

    friend FiberValue operator-(const FiberValue& a, const FiberValue& b) { return a + (-b); }

    friend bool operator==(const FiberValue& a, const FiberValue& b) {
        // normalized representation makes this structural; a zero vector still
        // differs from scalar zero, which only matters for is_zero() callers
        if (a.tag_ != b.tag_) return a.is_zero() && b.is_zero();
        return a.rank_ == b.rank_ && a.data_ == b.data_;
    }

private:
    FiberValue normalized() {
        if (tag_ == Tag::Matrix) {
            bool central = true;
            for (int i = 0; i < rank_ && central; ++i)
                for (int j = 0; j < rank_ && central; ++j) {
                    if (i == j) {
                        if (!(at(i, j) == at(0, 0))) central = false;
                    } else if (!at(i, j).is_zero()) {
                        central = false;
                    }
                }
            if (central) {
                GaussRat d = data_[0];
                tag_ = Tag::Scalar;
                rank_ = 0;
                data_.assign(1, d);
            }
        }
        return *this;
    }

    Tag tag_;
    int rank_ = 0;
    std::vector<GaussRat> data_;
};

/// The factor-pairing table. Defined pairings:
///   S*S->S, S*M->M, M*S->M, M*M->M, M*V->V, S*V->V, V*S->V.
/// Vector*Vector and Vector*Matrix have no meaning here.
inline FiberValue fiber_mul(const FiberValue& a, const FiberValue& b) {
    using Tag = FiberValue::Tag;
    if (a.tag() == Tag::Vector && (b.tag() == Tag::Vector || b.tag() == Tag::Matrix))
        throw IncompatiblePairing("fiber_mul: vector*vector / vector*matrix undefined");
    if (a.tag() == Tag::Scalar) return b.scaled(a.scalar_value());
    if (b.tag() == Tag::Scalar) return a.scaled(b.scalar_value());
    if (a.tag() == Tag::Matrix && b.tag() == Tag::Matrix) {
        if (a.rank() != b.rank()) throw IncompatiblePairing("fiber_mul: rank mismatch");
        int r = a.rank();
        std::vector<GaussRat> out((std::size_t)r * r);
        for (int i = 0; i < r; ++i)
            for (int k = 0; k < r; ++k) {
                const GaussRat& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (int j = 0; j < r; ++j) out[(std::size_t)i * r + j] += aik * b.at(k, j);
            }
        return FiberValue::matrix(r, std::move(out));
    }
    // Matrix * Vector
    if (a.rank() != b.rank()) throw IncompatiblePairing("fiber_mul: rank mismatch");
    int r = a.rank();
    std::vector<GaussRat> out(r);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) out[i] += a.at(i, j) * b.at(j);
    return FiberValue::vector(std::move(out));
}

/// Fiberwise trace; a scalar s embedded as s*Id has trace rank*s.
inline GaussRat fiber_trace(const FiberValue& a, int rank) {
    if (a.is_vector()) throw NotTraceable("fiber_trace of a vector value");
    if (a.is_scalar()) return GaussRat(rank) * a.scalar_value();
    GaussRat t;
    for (int i = 0; i < a.rank(); ++i) t += a.at(i, i);
    return t;
}

} // namespace fedosov
