#pragma once

#include <cstdint>
#include <vector>

#include "fedosov/function_ring.hpp"
#include "fedosov/weyl.hpp"

namespace fedosov {

/// Deterministic splitmix64 stream; identical across platforms so that
/// (config, seed) reproduces reports byte for byte.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : s_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (s_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

    long int_in(long lo, long hi) { return lo + (long)below((std::uint64_t)(hi - lo + 1)); }

    bool chance(int num, int den) { return (long)below((std::uint64_t)den) < num; }

    /// Small-denominator rational; denominators stay <= 8 to bound swell.
    GaussRat rat(long max_num = 4) {
        return GaussRat(int_in(-max_num, max_num), int_in(1, 8));
    }

    GaussRat gauss(long max_num = 4) {
        mpq_class re(int_in(-max_num, max_num), int_in(1, 8));
        mpq_class im(int_in(-max_num, max_num), int_in(1, 8));
        re.canonicalize();
        im.canonicalize();
        return GaussRat(re, im);
    }

    FiberValue scalar_value() { return FiberValue(gauss()); }

    FiberValue matrix_value(int rank) {
        std::vector<GaussRat> m;
        m.reserve((std::size_t)rank * rank);
        for (int i = 0; i < rank * rank; ++i) m.push_back(gauss(2));
        return FiberValue::matrix(rank, std::move(m));
    }

    FiberValue vector_value(int rank) {
        std::vector<GaussRat> v;
        v.reserve(rank);
        for (int i = 0; i < rank; ++i) v.push_back(gauss(2));
        return FiberValue::vector(std::move(v));
    }

    FiberValue fiber_value(Kind kind, int rank) {
        switch (kind) {
        case Kind::C: return scalar_value();
        case Kind::E: return matrix_value(rank);
        case Kind::B: return vector_value(rank);
        }
        return scalar_value();
    }

    /// Sparse random jet: a few low-order terms declared accurate to `order`.
    FunctionElement jet(int dim, Kind kind, int rank, int order, int nterms = 3,
                        int max_term_order = 2) {
        JetElement j(dim, order);
        for (int t = 0; t < nterms; ++t) {
            JetElement::Key k(dim, 0);
            int band = (int)below((std::uint64_t)max_term_order + 1);
            for (int b = 0; b < band; ++b) k[below((std::uint64_t)dim)]++;
            j.add_term(k, fiber_value(kind, rank));
        }
        return FunctionElement(std::move(j));
    }

    /// Sparse trigonometric polynomial with frequencies in [-max_freq, max_freq].
    FunctionElement torus(int dim, Kind kind, int rank, int nterms = 3, int max_freq = 1) {
        TorusElement t(dim);
        for (int n = 0; n < nterms; ++n) {
            TorusElement::Key k(dim, 0);
            for (int i = 0; i < dim; ++i) k[i] = (std::int16_t)int_in(-max_freq, max_freq);
            t.add_term(k, fiber_value(kind, rank));
        }
        return FunctionElement(std::move(t));
    }

    FunctionElement fun(Backend backend, int dim, Kind kind, int rank, int order) {
        return backend == Backend::Jet ? jet(dim, kind, rank, order) : torus(dim, kind, rank);
    }

    /// Random Weyl element with a handful of admissible monomials.
    WeylElementT<FunctionElement> weyl(Backend backend, int dim, Kind kind, int rank, int trunc,
                                       int order, int nterms = 4, int max_form = 2) {
        WeylElementT<FunctionElement> w(dim, kind, trunc);
        for (int t = 0; t < nterms; ++t) {
            WeylKey k;
            k.h = (int)below(3);
            int ydeg = (int)below(3);
            if (2 * k.h + ydeg > trunc) ydeg = std::max(0, trunc - 2 * k.h);
            for (int j = 0; j < ydeg; ++j) k.y = y_insert(k.y, (int)below((std::uint64_t)dim));
            int nf = (int)below((std::uint64_t)std::min(max_form, dim) + 1);
            for (int j = 0; j < nf; ++j) k.dx |= (1u << below((std::uint64_t)dim));
            w.add_term(k, fun(backend, dim, kind, rank, order));
        }
        return w;
    }

private:
    std::uint64_t s_;
};

} // namespace fedosov
