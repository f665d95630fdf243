"""Every named (co)cyclic module: the four classical examples over an algebra,
a coalgebra or a Hopf algebra with a modular pair, and the coefficient-bearing
modules C^alg, C_coalg, K together with their invariant / coinvariant parts.

Each operator matrix is assembled directly from structure constants, so that
a disagreement between two routes to the same module (say the closed-form K and
the hat-dual of C_coalg) shows up instead of being built in.

Algebras and coalgebras are duck-typed: anything with ``field``, ``dim``,
``mul``, ``one`` (algebra) or ``coproduct_legs``, ``eps`` (coalgebra) works,
and a :class:`HopfAlgebra` provides both.
"""

from __future__ import annotations

from itertools import product

from .cyclic import (
    ParaCocyclicModule,
    ParaCyclicModule,
    compare_modules,
    hat_dual,
    quotient,
    restrict,
)
from .errors import MismatchWithHatDual, NotInInvolution, SAYDViolation, ShapeMismatch
from .exactfield import Matrix
from .hopfcore import (
    HopfAlgebra,
    ModularPair,
    SAYDModule,
    h_tensor_quotient,
    invariant_chains,
    twisted_antipode,
    verify_sayd,
)
from .tensor import add_to, operator_matrix, outer

e = HopfAlgebra.basis


def _build(F, src, tgt, fn):
    return operator_matrix(F, src, tgt, fn)


def _require_pair(pair: ModularPair):
    if not pair.in_involution:
        raise NotInInvolution("the construction needs a modular pair in involution")


def _require_sayd(H: HopfAlgebra, M: SAYDModule):
    if M.variant != "LR":
        raise ShapeMismatch("coefficients must be a left module and right comodule (variant LR)")
    rep = verify_sayd(H, M)
    if not rep.ok:
        raise SAYDViolation("coefficient module fails %s" % sorted({c.name for c in rep.failures()}))


# the cyclic module of an algebra


def algebra_cyclic(A, N: int, name=None) -> ParaCyclicModule:
    """A_n = A^{(x)(n+1)}: faces multiply neighbours (the last wraps a_n a_0),
    degeneracies insert 1, tau moves the last factor to the front."""
    F, d = A.field, A.dim
    dims = lambda n: [d] * (n + 1)
    one = A.one

    def face(n, i):
        def fn(t):
            acc = {}
            if i < n:
                outer(1, [e(x) for x in t[:i]] + [A.mul(e(t[i]), e(t[i + 1]))] + [e(x) for x in t[i + 2:]], acc)
            else:
                outer(1, [A.mul(e(t[n]), e(t[0]))] + [e(x) for x in t[1:n]], acc)
            return acc
        return _build(F, dims(n), dims(n - 1), fn)

    def degen(n, i):
        return _build(F, dims(n), dims(n + 1), lambda t: _single(t[: i + 1], one, t[i + 1:]))

    faces = [[face(n, i) for i in range(n + 1)] if n else [] for n in range(N + 1)]
    degs = [[degen(n, i) for i in range(n + 1)] if n < N else [] for n in range(N + 1)]
    taus = [_build(F, dims(n), dims(n), lambda t: {(t[-1],) + t[:-1]: 1}) for n in range(N + 1)]
    return ParaCyclicModule(F, [d ** (n + 1) for n in range(N + 1)], faces, degs, taus, name=name or "A-natural")


def _single(before, vec, after):
    acc = {}
    outer(1, [e(x) for x in before] + [vec] + [e(x) for x in after], acc)
    return acc


# the cocyclic module of a coalgebra


def coalgebra_cocyclic(C, N: int, name=None) -> ParaCocyclicModule:
    """C^n = C^{(x)(n+1)}: cofaces comultiply one factor (the last one splits c_0
    and wraps its first leg to the end), codegeneracies apply the counit,
    t moves the first factor to the end."""
    F, d = C.field, C.dim
    dims = lambda n: [d] * (n + 1)

    def coface(n, i):
        def fn(t):
            acc = {}
            if i <= n:
                for (a, b), c in C.coproduct_legs(t[i], 2).items():
                    add_to(acc, t[:i] + (a, b) + t[i + 1:], c)
            else:
                for (a, b), c in C.coproduct_legs(t[0], 2).items():
                    add_to(acc, (b,) + t[1:] + (a,), c)
            return acc
        return _build(F, dims(n), dims(n + 1), fn)

    def codegen(n, i):
        def fn(t):
            c = C.eps(e(t[i + 1]))
            return {t[: i + 1] + t[i + 2:]: c} if c else {}
        return _build(F, dims(n), dims(n - 1), fn)

    cof = [[coface(n, i) for i in range(n + 2)] if n < N else [] for n in range(N + 1)]
    codeg = [[codegen(n, i) for i in range(n)] for n in range(N + 1)]
    ts = [_build(F, dims(n), dims(n), lambda t: {t[1:] + (t[0],): 1}) for n in range(N + 1)]
    return ParaCocyclicModule(F, [d ** (n + 1) for n in range(N + 1)], cof, codeg, ts, name=name or "C-natural")


# Connes-Moscovici


def connes_moscovici_cocyclic(H: HopfAlgebra, pair: ModularPair, N: int) -> ParaCocyclicModule:
    """Degree n is H^{(x)n} (k in degree 0)."""
    _require_pair(pair)
    F, d = H.field, H.dim
    dims = lambda n: [d] * n
    sigma = {i: pair.sigma[i, 0] for i in range(d) if pair.sigma[i, 0]}
    St = twisted_antipode(H, pair.delta).columns()

    def coface(n, i):
        def fn(t):
            acc = {}
            if i == 0:
                outer(1, [H.one] + [e(x) for x in t], acc)
            elif i <= n:
                for (a, b), c in H.coproduct_legs(t[i - 1], 2).items():
                    add_to(acc, t[: i - 1] + (a, b) + t[i:], c)
            else:
                outer(1, [e(x) for x in t] + [sigma], acc)
            return acc
        return _build(F, dims(n), dims(n + 1), fn)

    def codegen(n, i):
        def fn(t):
            c = H.eps(e(t[i]))
            return {t[:i] + t[i + 1:]: c} if c else {}
        return _build(F, dims(n), dims(n - 1), fn)

    def cyc(n):
        if n == 0:
            return Matrix.identity(F, 1)

        def fn(t):
            acc = {}
            right = [e(x) for x in t[1:]] + [sigma]
            for s, cs in St[t[0]].items():
                for legs, c in H.coproduct_legs(s, n).items():
                    outer(cs * c, [H.mul(e(a), r) for a, r in zip(legs, right)], acc)
            return acc
        return _build(F, dims(n), dims(n), fn)

    cof = [[coface(n, i) for i in range(n + 2)] if n < N else [] for n in range(N + 1)]
    codeg = [[codegen(n, i) for i in range(n)] for n in range(N + 1)]
    ts = [cyc(n) for n in range(N + 1)]
    return ParaCocyclicModule(F, [d ** n for n in range(N + 1)], cof, codeg, ts, name="CM" + pair.label(H))


# the cyclic module of a Hopf algebra with a modular pair


def kr_cyclic(H: HopfAlgebra, pair: ModularPair, N: int) -> ParaCyclicModule:
    """Degree n is H^{(x)n}; tau_n(h_1..h_n) = delta(h_n^(2)) sigma S(h_1^(1)...h_n^(1)) (x) h_1^(2) (x) ... (x) h_{n-1}^(2)."""
    _require_pair(pair)
    F, d = H.field, H.dim
    dims = lambda n: [d] * n
    sigma = {i: pair.sigma[i, 0] for i in range(d) if pair.sigma[i, 0]}
    delta = [pair.delta[0, i] for i in range(d)]

    def face(n, i):
        def fn(t):
            acc = {}
            if i == 0:
                c = H.eps(e(t[0]))
                if c:
                    acc[t[1:]] = c
            elif i < n:
                outer(1, [e(x) for x in t[: i - 1]] + [H.mul(e(t[i - 1]), e(t[i]))] + [e(x) for x in t[i + 1:]], acc)
            else:
                c = delta[t[-1]]
                if c:
                    acc[t[:-1]] = c
            return acc
        return _build(F, dims(n), dims(n - 1), fn)

    def degen(n, i):
        return _build(F, dims(n), dims(n + 1), lambda t: _single(t[:i], H.one, t[i:]))

    def cyc(n):
        if n == 0:
            return Matrix.identity(F, 1)

        def fn(t):
            acc = {}
            for terms in product(*(H.coproduct_legs(x, 2).items() for x in t)):
                coef = 1
                for _, c in terms:
                    coef *= c
                firsts = [e(ab[0]) for ab, _ in terms]
                seconds = [ab[1] for ab, _ in terms]
                coef *= delta[seconds[-1]]
                if not coef:
                    continue
                lead = H.mul(sigma, H.S(H.product(firsts)))
                outer(coef, [lead] + [e(x) for x in seconds[:-1]], acc)
            return acc
        return _build(F, dims(n), dims(n), fn)

    faces = [[face(n, i) for i in range(n + 1)] if n else [] for n in range(N + 1)]
    degs = [[degen(n, i) for i in range(n + 1)] if n < N else [] for n in range(N + 1)]
    taus = [cyc(n) for n in range(N + 1)]
    return ParaCyclicModule(F, [d ** n for n in range(N + 1)], faces, degs, taus, name="KR" + pair.label(H))


# coefficient-bearing modules


def alg_with_coefficients(H: HopfAlgebra, M: SAYDModule, N: int) -> ParaCyclicModule:
    """C_n = M (x) H^{(x)(n+1)}, paracyclic."""
    _require_sayd(H, M)
    F, d, m = H.field, H.dim, M.dim
    dims = lambda n: [m] + [d] * (n + 1)

    def face(n, i):
        def fn(t):
            mm, h = t[0], t[1:]
            acc = {}
            if i < n:
                outer(1, [e(mm)] + [e(x) for x in h[:i]] + [H.mul(e(h[i]), e(h[i + 1]))] + [e(x) for x in h[i + 2:]], acc)
            else:
                for (a, b), c in H.coproduct_legs(h[n], 2).items():
                    outer(c, [M.act(a, {mm: 1}), H.mul(e(b), e(h[0]))] + [e(x) for x in h[1:n]], acc)
            return acc
        return _build(F, dims(n), dims(n - 1), fn)

    def degen(n, i):
        return _build(F, dims(n), dims(n + 1), lambda t: _single(t[: i + 2], H.one, t[i + 2:]))

    def cyc(n):
        def fn(t):
            mm, h = t[0], t[1:]
            acc = {}
            for (a, b), c in H.coproduct_legs(h[n], 2).items():
                outer(c, [M.act(a, {mm: 1}), e(b)] + [e(x) for x in h[:n]], acc)
            return acc
        return _build(F, dims(n), dims(n), fn)

    faces = [[face(n, i) for i in range(n + 1)] if n else [] for n in range(N + 1)]
    degs = [[degen(n, i) for i in range(n + 1)] if n < N else [] for n in range(N + 1)]
    taus = [cyc(n) for n in range(N + 1)]
    return ParaCyclicModule(F, [m * d ** (n + 1) for n in range(N + 1)], faces, degs, taus, name="C_alg")


def _twisted_wrap(H: HopfAlgebra, M: SAYDModule, h0: int, mm: int) -> list:
    """[(vec in H, m0, coef)] for h0 S^{-1}(m^(1)) (x) m^(0)."""
    out = []
    for m0, g, c in M.coact(mm):
        out.append((H.mul(e(h0), H.Sinv(e(g))), m0, c))
    return out


def coalg_with_coefficients(H: HopfAlgebra, M: SAYDModule, N: int) -> ParaCocyclicModule:
    """C^n = H^{(x)(n+1)} (x) M, paracocyclic.  Needs S invertible."""
    _require_sayd(H, M)
    H.antipode_inv  # raises Singular early
    F, d, m = H.field, H.dim, M.dim
    dims = lambda n: [d] * (n + 1) + [m]

    def coface(n, i):
        def fn(t):
            h, mm = t[:-1], t[-1]
            acc = {}
            if i <= n:
                for (a, b), c in H.coproduct_legs(h[i], 2).items():
                    add_to(acc, h[:i] + (a, b) + h[i + 1:] + (mm,), c)
            else:
                for (a, b), c in H.coproduct_legs(h[0], 2).items():
                    for vec, m0, cc in _twisted_wrap(H, M, a, mm):
                        outer(c * cc, [e(b)] + [e(x) for x in h[1:]] + [vec, e(m0)], acc)
            return acc
        return _build(F, dims(n), dims(n + 1), fn)

    def codegen(n, i):
        def fn(t):
            c = H.eps(e(t[i + 1]))
            return {t[: i + 1] + t[i + 2:]: c} if c else {}
        return _build(F, dims(n), dims(n - 1), fn)

    def cyc(n):
        def fn(t):
            h, mm = t[:-1], t[-1]
            acc = {}
            for vec, m0, c in _twisted_wrap(H, M, h[0], mm):
                outer(c, [e(x) for x in h[1:]] + [vec, e(m0)], acc)
            return acc
        return _build(F, dims(n), dims(n), fn)

    cof = [[coface(n, i) for i in range(n + 2)] if n < N else [] for n in range(N + 1)]
    codeg = [[codegen(n, i) for i in range(n)] for n in range(N + 1)]
    ts = [cyc(n) for n in range(N + 1)]
    return ParaCocyclicModule(F, [m * d ** (n + 1) for n in range(N + 1)], cof, codeg, ts, name="C_coalg")


def k_closed_form(H: HopfAlgebra, M: SAYDModule, N: int) -> ParaCyclicModule:
    """K_n = H^{(x)(n+1)} (x) M straight from its displayed operators:
    counit on h_i, comultiplication of h_i, tau = h_n m^(1) (x) h_0..h_{n-1} (x) m^(0)."""
    _require_sayd(H, M)
    F, d, m = H.field, H.dim, M.dim
    dims = lambda n: [d] * (n + 1) + [m]

    def face(n, i):
        def fn(t):
            c = H.eps(e(t[i]))
            return {t[:i] + t[i + 1:]: c} if c else {}
        return _build(F, dims(n), dims(n - 1), fn)

    def degen(n, i):
        def fn(t):
            acc = {}
            for (a, b), c in H.coproduct_legs(t[i], 2).items():
                add_to(acc, t[:i] + (a, b) + t[i + 1:], c)
            return acc
        return _build(F, dims(n), dims(n + 1), fn)

    def cyc(n):
        def fn(t):
            h, mm = t[:-1], t[-1]
            acc = {}
            for m0, g, c in M.coact(mm):
                outer(c, [H.mul(e(h[n]), e(g))] + [e(x) for x in h[:n]] + [e(m0)], acc)
            return acc
        return _build(F, dims(n), dims(n), fn)

    faces = [[face(n, i) for i in range(n + 1)] if n else [] for n in range(N + 1)]
    degs = [[degen(n, i) for i in range(n + 1)] if n < N else [] for n in range(N + 1)]
    taus = [cyc(n) for n in range(N + 1)]
    return ParaCyclicModule(F, [m * d ** (n + 1) for n in range(N + 1)], faces, degs, taus, name="K")


def k_dual_module(H: HopfAlgebra, M: SAYDModule, N: int) -> ParaCyclicModule:
    """The closed-form K, after confirming it equals hat(C_coalg) matrix for matrix."""
    closed = k_closed_form(H, M, N)
    functorial = hat_dual(coalg_with_coefficients(H, M, N))
    rep = compare_modules(closed, functorial)
    if not rep.ok:
        raise MismatchWithHatDual("closed-form K differs from hat(C_coalg) at %s" % [(c.name, c.degree, c.index) for c in rep.failures()])
    return closed


# invariant and coinvariant parts


def invariant_inclusions(H: HopfAlgebra, M: SAYDModule, N: int) -> list:
    return [invariant_chains(H, M, n) for n in range(N + 1)]


def coinvariant_quotients(H: HopfAlgebra, M: SAYDModule, N: int) -> list:
    return [h_tensor_quotient(H, n, M) for n in range(N + 1)]


def invariant_cyclic(H: HopfAlgebra, M: SAYDModule, N: int) -> ParaCyclicModule:
    """C^H_n = M box_H H^{(x)(n+1)} with the restricted C^alg operators."""
    return restrict(alg_with_coefficients(H, M, N), invariant_inclusions(H, M, N), name="C^H")


def coinvariant_cocyclic(H: HopfAlgebra, M: SAYDModule, N: int) -> ParaCocyclicModule:
    """C^n_H = H^{(x)(n+1)} (x)_H M with the induced C_coalg operators."""
    return quotient(coalg_with_coefficients(H, M, N), coinvariant_quotients(H, M, N), name="C_H")


def invariant_k(H: HopfAlgebra, M: SAYDModule, N: int) -> ParaCyclicModule:
    """K^H: hat dual of the coinvariant module."""
    return hat_dual(coinvariant_cocyclic(H, M, N))


CONSTRUCTIONS = ("alg", "coalg", "cm", "kr", "calg", "ccoalg", "k", "invariant", "coinvariant")


__all__ = [
    "algebra_cyclic", "coalgebra_cocyclic", "connes_moscovici_cocyclic", "kr_cyclic",
    "alg_with_coefficients", "coalg_with_coefficients", "k_closed_form", "k_dual_module",
    "invariant_inclusions", "coinvariant_quotients", "invariant_cyclic", "coinvariant_cocyclic",
    "invariant_k", "CONSTRUCTIONS",
]
