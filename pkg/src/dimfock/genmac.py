"""Generalized Macdonald bases: eigenvectors of the zero mode of the first
current, unitriangular over products of ordinary Macdonald functions.

The canonical tuple order (larger elements first) is a linear extension of
the suffix-sum ordering, so the zero-mode matrix is triangular in it and
each eigenvector follows from a back-substitution divided by eigenvalue
differences; genericity of the point keeps those differences nonzero.
Also here: integral-form renormalizations, the exact q -> 0 limit through
the rational-function field, and generalized Jack functions from the
degenerate-limit differential operator.
"""

from __future__ import annotations

from fractions import Fraction

from . import linalg
from .combinat import (
    EMPTY,
    Partition,
    PartitionTuple,
    arm_leg,
    star_refined_lt,
    star_lt,
)
from .fock import (
    BosonModule,
    GeneratorFamily,
    apply_symfunc,
    operator_matrix,
    pbw_state,
    pbw_bra,
    state_add,
    state_scale,
    vacuum_bra,
)
from .scalars import PoleAtZero, eigenvalue_of
from .symfunc import SymFunc, macdonald_p, monomial_in_p

ZERO = Fraction(0)
ONE = Fraction(1)


class EigenvalueCollision(ArithmeticError):
    pass


def product_state(module, tup, func_per_component):
    """prod_i f_i(a^(i)_{-n}) |u> for symmetric functions f_i in the p basis."""
    state = module.vacuum()
    for i, f in enumerate(func_per_component):
        state = apply_symfunc(module, f, lambda n, _i=i: [(_i, ONE)], state)
    return state


def product_macdonald_state(module, tup, qval, tval):
    return product_state(
        module, tup, [macdonald_p(lam, qval, tval) for lam in tup.components]
    )


def product_monomial_state(module, tup):
    return product_state(module, tup, [monomial_in_p(lam) for lam in tup.components])


class GenMacBasis:
    """Level-n eigenbasis data for a generator family."""

    def __init__(self, level, family: GeneratorFamily, qval=None, tval=None):
        self.level = level
        self.family = family
        self.module = family.module
        self.point = family.module.point
        self.qval = qval if qval is not None else self.point.q
        self.tval = tval if tval is not None else self.point.t
        self.tuples = list(self.module.basis(level))
        self.index = {t: i for i, t in enumerate(self.tuples)}
        self._build()

    def _build(self):
        module, level = self.module, self.level
        monomials = list(module.basis(level))
        midx = {m: i for i, m in enumerate(monomials)}
        # product-Macdonald kets in monomial coordinates (columns)
        pmat = [[ZERO] * len(self.tuples) for _ in monomials]
        for j, tup in enumerate(self.tuples):
            st = product_macdonald_state(module, tup, self.qval, self.tval)
            for mono, c in st.items():
                pmat[midx[mono]][j] = c
        x0 = operator_matrix(self.family.x_mode(1, 0), module, level, level)
        pinv = linalg.inverse(pmat)
        x0_pp = linalg.mat_mul(pinv, linalg.mat_mul(x0, pmat))
        self.pmat = pmat
        self.x0_pp = x0_pp
        self.eigenvalues = [eigenvalue_of(t, self.point) for t in self.tuples]
        n = len(self.tuples)
        # triangularity in the canonical order: column j only feeds rows i >= j
        for j in range(n):
            for i in range(j):
                if x0_pp[i][j]:
                    raise AssertionError(
                        "zero mode not triangular: %r -> %r" % (self.tuples[j], self.tuples[i])
                    )
        # diagonal entries must match the closed-form eigenvalues
        for j in range(n):
            if x0_pp[j][j] != self.eigenvalues[j]:
                raise AssertionError("diagonal eigenvalue mismatch at %r" % (self.tuples[j],))
        # right eigenvectors, unitriangular over the product-Macdonald basis
        self.coeff = []
        for j in range(n):
            vec = [ZERO] * n
            vec[j] = ONE
            for i in range(j + 1, n):
                acc = ZERO
                for k in range(j, i):
                    if x0_pp[i][k] and vec[k]:
                        acc = acc + x0_pp[i][k] * vec[k]
                if acc:
                    denom = self.eigenvalues[j] - self.eigenvalues[i]
                    if not denom:
                        raise EigenvalueCollision(
                            "%r vs %r" % (self.tuples[j], self.tuples[i])
                        )
                    vec[i] = acc / denom
            self.coeff.append(vec)
        # Dual side: the zero mode is not self-adjoint for the monomial Gram,
        # so the bra expansion needs the right action on bra-products.
        grams = [module.monomial_gram(m) for m in monomials]
        rmat = [
            [pmat[v][j] * grams[v] for v in range(len(monomials))] for j in range(n)
        ]
        rx = linalg.mat_mul(rmat, x0)
        y = linalg.mat_mul(rx, linalg.inverse(rmat))
        for j in range(n):
            for i in range(j + 1, n):
                if y[j][i]:
                    raise AssertionError(
                        "dual action not triangular: %r -> %r"
                        % (self.tuples[j], self.tuples[i])
                    )
            if y[j][j] != self.eigenvalues[j]:
                raise AssertionError("dual diagonal mismatch at %r" % (self.tuples[j],))
        self.dual_coeff = []
        for j in range(n):
            vec = [ZERO] * n
            vec[j] = ONE
            for i in range(j - 1, -1, -1):
                acc = ZERO
                for k in range(i + 1, j + 1):
                    if y[k][i] and vec[k]:
                        acc = acc + vec[k] * y[k][i]
                if acc:
                    denom = self.eigenvalues[j] - self.eigenvalues[i]
                    if not denom:
                        raise EigenvalueCollision(
                            "%r vs %r" % (self.tuples[j], self.tuples[i])
                        )
                    vec[i] = acc / denom
            self.dual_coeff.append(vec)
        self._bra_rows = rmat
        self._states = {}
        self._monomials = monomials

    def transition(self, lam_tup, mu_tup):
        """Coefficient of the mu product-Macdonald vector inside P_lam."""
        return self.coeff[self.index[lam_tup]][self.index[mu_tup]]

    def dual_transition(self, lam_tup, mu_tup):
        return self.dual_coeff[self.index[lam_tup]][self.index[mu_tup]]

    def state(self, tup):
        """P_tup as a Fock state (monomial coordinates)."""
        if tup not in self._states:
            j = self.index[tup]
            coords = linalg.mat_vec(self.pmat, self.coeff[j])
            self._states[tup] = {
                m: c for m, c in zip(self._monomials, coords) if c
            }
        return self._states[tup]

    def dual_bra(self, tup):
        """<P_tup| as a functional on creation monomials."""
        j = self.index[tup]
        out = {}
        for nu_i, nu in enumerate(self._monomials):
            acc = ZERO
            for mu_i in range(len(self.tuples)):
                c = self.dual_coeff[j][mu_i]
                if c and self._bra_rows[mu_i][nu_i]:
                    acc = acc + c * self._bra_rows[mu_i][nu_i]
            if acc:
                out[nu] = acc
        return out

    def monomial_transition(self):
        """Transition matrix over products of monomial symmetric functions."""
        module = self.module
        mono_states = [product_monomial_state(module, t) for t in self.tuples]
        mmat = [[ZERO] * len(self.tuples) for _ in self._monomials]
        midx = {m: i for i, m in enumerate(self._monomials)}
        for j, st in enumerate(mono_states):
            for mono, c in st.items():
                mmat[midx[mono]][j] = c
        minv = linalg.inverse(mmat)
        rows = []
        for j in range(len(self.tuples)):
            coords = linalg.mat_vec(self.pmat, self.coeff[j])
            rows.append(linalg.mat_vec(minv, coords))
        return rows


def gen_macdonald(level, point, n_comp=None, module=None, crystal_normalized=False):
    """Generalized Macdonald basis at the given level."""
    if module is None:
        n_comp = n_comp or point.n_weights
        module = BosonModule(point, n_comp, point.u, max(level + 1, level), kind="qt")
    family = GeneratorFamily(module, crystal_normalized=crystal_normalized)
    return GenMacBasis(level, family)


# ---------------------------------------------------------------------------
# Integral forms


def _designated_index(tuples, level):
    target_last = Partition((1,) * level) if level else EMPTY
    for i, t in enumerate(tuples):
        if t[t.n_components - 1] == target_last and all(
            c == EMPTY for c in t.components[:-1]
        ):
            return i
    raise ValueError("designated column tuple not found")


class IntegralForms:
    """K and M-tilde renormalizations of a generalized Macdonald basis."""

    def __init__(self, basis: GenMacBasis):
        self.basis = basis
        module, family, level = basis.module, basis.family, basis.level
        self.tuples = basis.tuples
        monomials = basis._monomials
        midx = {m: i for i, m in enumerate(monomials)}
        # PBW vectors with reversed component order
        wmat = [[ZERO] * len(self.tuples) for _ in monomials]
        for j, tup in enumerate(self.tuples):
            st = pbw_state(tup, family, prime=True)
            for mono, c in st.items():
                wmat[midx[mono]][j] = c
        winv = linalg.inverse(wmat)
        des = _designated_index(self.tuples, level)
        self.alpha = {}
        self.k_norm = {}  # K = k_norm * P
        for tup in self.tuples:
            coords = linalg.mat_vec(basis.pmat, basis.coeff[basis.index[tup]])
            avec = linalg.mat_vec(winv, coords)
            a_des = avec[des]
            if not a_des:
                raise ArithmeticError("designated expansion coefficient vanishes at %r" % (tup,))
            self.alpha[tup] = [a / a_des for a in avec]
            self.k_norm[tup] = 1 / a_des
        # dual side: expand the dual eigenvector over reversed-order PBW bras
        bra_rows = []
        for tup in self.tuples:
            bra = pbw_bra(tup, family, prime=True)
            bra_rows.append([bra.get(m, ZERO) for m in monomials])
        self.beta = {}
        self.k_norm_dual = {}
        bmat = linalg.transpose(bra_rows)
        binv = linalg.inverse(bmat)
        for tup in self.tuples:
            j = basis.index[tup]
            dual = basis.dual_bra(tup)
            dvec = [dual.get(m, ZERO) for m in monomials]
            bvec = linalg.mat_vec(binv, dvec)
            b_des = bvec[des]
            if not b_des:
                raise ArithmeticError("designated dual coefficient vanishes at %r" % (tup,))
            self.beta[tup] = [b / b_des for b in bvec]
            self.k_norm_dual[tup] = 1 / b_des

    def k_state(self, tup):
        return state_scale(self.basis.state(tup), self.k_norm[tup])

    def k_bra(self, tup):
        return {
            m: c * self.k_norm_dual[tup] for m, c in self.basis.dual_bra(tup).items()
        }

    def alpha_table(self):
        return {
            tup: dict(zip(self.tuples, vec)) for tup, vec in self.alpha.items()
        }

    def m_tilde_state(self, tup):
        """The alternative renormalization built from Nekrasov factors."""
        from .nekrasov import nek_factor

        point = self.basis.point
        u = self.basis.module.weights
        scale = ONE
        n = tup.n_components
        for i in range(n):
            for j in range(i + 1, n):
                scale = scale * nek_factor(tup[j], tup[i], u[j] / u[i], point)
        q, t = point.q, point.t
        for lam in tup:
            for (bi, bj) in lam.cells():
                a, l = arm_leg(lam, bi, bj)
                scale = scale * (1 - q**a * t ** (l + 1))
        return state_scale(self.basis.state(tup), scale)


def integral_forms(basis: GenMacBasis) -> IntegralForms:
    return IntegralForms(basis)


# ---------------------------------------------------------------------------
# Crystal limit (q -> 0) through the rational-function field


def gen_hall_littlewood(level, sym_point, n_comp=2):
    """Transition tables of the q -> 0 limit, with pole detection.

    For two components the generators are taken in the crystal-normalized
    form (first boson rescaled by half powers of p), under which every
    zero-mode matrix entry is a rational function of q; the limit is exact
    evaluation at q = 0.  Returns (limit table, dual limit table, poles).
    """
    if not sym_point.is_symbolic_q:
        raise ValueError("needs a symbolic-q point")
    if n_comp == 1:
        return _gen_hl_rank1(level, sym_point)
    if n_comp != 2:
        raise ValueError("crystal limit implemented for one or two components")
    module = BosonModule(sym_point, 2, sym_point.u, level + 1, kind="qt")
    family = GeneratorFamily(module, crystal_normalized=True)
    basis = GenMacBasis(level, family)
    poles = []
    table = {}
    dual_table = {}
    for lam in basis.tuples:
        row = {}
        drow = {}
        for mu in basis.tuples:
            for store, val in ((row, basis.transition(lam, mu)),
                               (drow, basis.dual_transition(lam, mu))):
                try:
                    store[mu] = sym_point.at_crystal(val)
                except PoleAtZero:
                    store[mu] = None
                    poles.append((lam, mu))
        table[lam] = row
        dual_table[lam] = drow
    return table, dual_table, poles


def _gen_hl_rank1(level, sym_point):
    from .symfunc import hall_littlewood

    q, t = sym_point.q, sym_point.t
    table = {}
    poles = []
    for lam in [pt for pt in _rank1_tuples(level)]:
        mac = macdonald_p(lam[0], q, t)
        row = {}
        for mu in _rank1_tuples(level):
            val = _mono_coeff(mac, mu[0])
            try:
                row[mu] = sym_point.at_crystal(val)
            except PoleAtZero:
                row[mu] = None
                poles.append((lam, mu))
        table[lam] = row
    return table, table, poles


def _rank1_tuples(level):
    from .combinat import partitions

    return [PartitionTuple([lam]) for lam in partitions(level)]


def _mono_coeff(f: SymFunc, mu: Partition):
    from .symfunc import convert

    return convert(f, "m")[mu]


# ---------------------------------------------------------------------------
# Generalized Jack functions via the explicit differential operator


def _hbeta_apply(state, beta, uprime):
    """Apply the limit Hamiltonian on N-fold power-sum polynomials."""
    n_comp = len(uprime)
    out = {}

    def add(tup, c):
        if c:
            out[tup] = out.get(tup, ZERO) + c

    for tup, coeff in state.items():
        for i in range(n_comp):
            lam = tup[i]
            parts = lam.parts
            distinct = sorted(set(parts))
            # split: n m p_{n+m} d_n d_m ; the 1/2 cancels against ordered pairs
            for ai, n in enumerate(distinct):
                for m in distinct[ai:]:
                    if n == m:
                        mult = lam.mult(n)
                        ways = mult * (mult - 1) // 2
                        if not ways:
                            continue
                        c = coeff * Fraction(n * m) * ways
                    else:
                        c = coeff * Fraction(n * m) * lam.mult(n) * lam.mult(m)
                    rest = list(parts)
                    rest.remove(n)
                    rest.remove(m)
                    rest.append(n + m)
                    add(tup.replace(i, Partition(sorted(rest, reverse=True))), c)
            # join: beta (n+m) p_n p_m d_{n+m}; sum over splittings of each part
            for s in distinct:
                mult = lam.mult(s)
                for n in range(1, s // 2 + 1):
                    m = s - n
                    sym = 1 if n == m else 2
                    c = coeff * beta * Fraction(s) * mult * Fraction(sym, 2)
                    rest = list(parts)
                    rest.remove(s)
                    rest.extend([n, m])
                    add(tup.replace(i, Partition(sorted(rest, reverse=True))), c)
            # diagonal momentum-like terms
            for s in distinct:
                mult = lam.mult(s)
                c = coeff * (uprime[i] + (1 - beta) * Fraction(s, 2)) * s * mult
                add(tup, c)
            # inter-component flow from lower bosons
            for k in range(i):
                for s in distinct:
                    mult = lam.mult(s)
                    c = coeff * (1 - beta) * Fraction(s * s) * mult
                    rest = list(parts)
                    rest.remove(s)
                    new_i = Partition(sorted(rest, reverse=True))
                    target = tup.replace(i, new_i)
                    target = target.replace(
                        k, Partition(sorted(target[k].parts + (s,), reverse=True))
                    )
                    add(target, c)
    return out


def gen_jack(level, beta, uprime):
    """Generalized Jack transition matrix over products of monomials."""
    from .combinat import enumerate_tuples

    n_comp = len(uprime)
    tuples = list(enumerate_tuples(n_comp, level))
    # power-sum monomial basis of the same level
    monos = tuples
    midx = {m: i for i, m in enumerate(monos)}
    # m-products in power-sum coordinates
    mmat = [[ZERO] * len(tuples) for _ in monos]
    for j, tup in enumerate(tuples):
        st = {PartitionTuple([EMPTY] * n_comp): ONE}
        for i, lam in enumerate(tup):
            f = monomial_in_p(lam)
            nxt = {}
            for base, c in st.items():
                for plam, pc in f.coeffs.items():
                    merged = base.replace(
                        i, Partition(sorted(base[i].parts + plam.parts, reverse=True))
                    )
                    nxt[merged] = nxt.get(merged, ZERO) + c * pc
            st = nxt
        for mono, c in st.items():
            mmat[midx[mono]][j] = c
    minv = linalg.inverse(mmat)
    # operator matrix in the p-monomial basis, then over m-products
    hmat = [[ZERO] * len(monos) for _ in monos]
    for j, mono in enumerate(monos):
        img = _hbeta_apply({mono: ONE}, beta, uprime)
        for m2, c in img.items():
            hmat[midx[m2]][j] = c
    h_mm = linalg.mat_mul(minv, linalg.mat_mul(hmat, mmat))
    n = len(tuples)
    for j in range(n):
        for i in range(j):
            if h_mm[i][j]:
                raise AssertionError(
                    "limit Hamiltonian not triangular: %r -> %r" % (tuples[j], tuples[i])
                )
    eigvals = [h_mm[j][j] for j in range(n)]
    rows = []
    for j in range(n):
        vec = [ZERO] * n
        vec[j] = ONE
        for i in range(j + 1, n):
            acc = ZERO
            for k in range(j, i):
                if h_mm[i][k] and vec[k]:
                    acc = acc + h_mm[i][k] * vec[k]
            if acc:
                denom = eigvals[j] - eigvals[i]
                if not denom:
                    raise EigenvalueCollision("%r vs %r" % (tuples[j], tuples[i]))
            vec[i] = acc / denom if acc else ZERO
        rows.append(vec)
    return tuples, rows, eigvals


# ---------------------------------------------------------------------------
# Ordering-support checks


def ordering_vanishing_check(level, point, n_comp=3):
    """Support checks for the refined ordering.

    (a) positive modes of the plain dressed current send a Macdonald function
        to combinations over strictly contained partitions;
    (b) the generalized Macdonald transition vanishes outside the refined
        ordering (and in particular outside the plain suffix ordering).
    """
    from .combinat import partitions
    from .symfunc import macdonald_p as mp

    failures = []
    # (a) single-boson containment
    module = BosonModule(point, 1, [point.u[0]], level + 1, kind="qt")
    family = GeneratorFamily(module)
    eta = family._eta(0)
    for n in range(1, level + 1):
        for lam in partitions(level):
            st = apply_symfunc(module, mp(lam, point.q, point.t), lambda k: [(0, ONE)], module.vacuum())
            img = eta.mode_apply(n, st, module)
            tgt_level = level - n
            if tgt_level < 0:
                continue
            # expand over Macdonald functions of the target level
            basis = [m for m in partitions(tgt_level)]
            mat = [[ZERO] * len(basis) for _ in module.basis(tgt_level)]
            midx = {m: i for i, m in enumerate(module.basis(tgt_level))}
            for j, mu in enumerate(basis):
                stj = apply_symfunc(module, mp(mu, point.q, point.t), lambda k: [(0, ONE)], module.vacuum())
                for mono, c in stj.items():
                    mat[midx[mono]][j] = c
            vec = [img.get(m, ZERO) for m in module.basis(tgt_level)]
            coords = linalg.mat_vec(linalg.inverse(mat), vec)
            for mu, c in zip(basis, coords):
                if c and not lam.contains(mu):
                    failures.append(("eta-containment", lam, n, mu))
    # (b) transition support within the refined ordering
    basis = gen_macdonald(level, point, n_comp=n_comp)
    for lam in basis.tuples:
        for mu in basis.tuples:
            c = basis.transition(lam, mu)
            if lam != mu and c:
                if not star_refined_lt(mu, lam):
                    failures.append(("refined-support", lam, mu))
                if not star_lt(mu, lam):
                    failures.append(("plain-support", lam, mu))
    return failures
