#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "fedosov/function_ring.hpp"
#include "fedosov/tpoly.hpp"
#include "fedosov/weyl.hpp"

namespace fedosov::testing {

using Weyl = WeylElementT<FunctionElement>;
using WeylT = WeylElementT<TPoly>;

inline GaussRat q(long n, long d = 1) { return GaussRat(n, d); }
inline GaussRat qi(long rn, long rd, long in, long id) { return GaussRat::make(rn, rd, in, id); }

inline FiberValue fv(long n, long d = 1) { return FiberValue(q(n, d)); }

/// Jet monomial c * x^midx at the given order budget.
inline FunctionElement jet_term(int dim, std::initializer_list<int> midx, FiberValue c,
                                int order = kInfOrder) {
    JetElement j(dim, order);
    JetElement::Key k;
    for (int e : midx) k.push_back((std::uint8_t)e);
    j.add_term(k, c);
    return FunctionElement(std::move(j));
}

inline FunctionElement jet_const(int dim, GaussRat c) {
    return FunctionElement::constant(Backend::Jet, dim, FiberValue(std::move(c)));
}

/// Torus mode c * exp(i k.x).
inline FunctionElement torus_term(int dim, std::initializer_list<int> freq, FiberValue c) {
    TorusElement t(dim);
    TorusElement::Key k;
    for (int f : freq) k.push_back((std::int16_t)f);
    t.add_term(k, c);
    return FunctionElement(std::move(t));
}

inline YIdx yv(std::initializer_list<int> is) {
    YIdx y;
    for (int i : is) y.push_back((std::uint8_t)i);
    return y;
}

inline std::uint32_t dxmask(std::initializer_list<int> is) {
    std::uint32_t m = 0;
    for (int i : is) m |= (1u << i);
    return m;
}

/// Single-monomial Weyl element with a constant rational coefficient.
inline Weyl wmono(int dim, Kind kind, int trunc, int h, std::initializer_list<int> ys,
                  std::initializer_list<int> dxs, GaussRat c, Backend backend = Backend::Jet) {
    Weyl w(dim, kind, trunc);
    w.add_term(WeylKey{h, yv(ys), dxmask(dxs)},
               FunctionElement::constant(backend, dim, FiberValue(std::move(c))));
    return w;
}

/// Standard 2n = 2 Poisson tensor with omega^{01} = 1 (spec's "omega^{12} = 1").
inline Poisson poisson2() {
    return Poisson(2, {q(0), q(1), q(-1), q(0)});
}

/// Block-diagonal Poisson tensor for 2n = 4: omega^{01} = omega^{23} = 1.
inline Poisson poisson4() {
    std::vector<GaussRat> up(16, q(0));
    up[0 * 4 + 1] = q(1);
    up[1 * 4 + 0] = q(-1);
    up[2 * 4 + 3] = q(1);
    up[3 * 4 + 2] = q(-1);
    return Poisson(4, std::move(up));
}

} // namespace fedosov::testing
