"""Operator identities, homomorphisms and exponent sets.

Identities between explicit operators are compared exactly after
composition.  Where one side is only known through its solution space (the
fifth-order summands M, the order-two partner of O_2), that operator is
rebuilt as the minimal annihilator of the intertwiner's image and the
identity is then checked as an exact right division.
"""
from __future__ import annotations

from fractions import Fraction

from .diffops import (
    DiffOp,
    indicial_exponents,
    minimal_annihilator_of_image,
    op_conjugate,
    op_divmod_right,
    op_normalize,
    symmetric_power,
    symmetric_product,
)
from .exact import LogSeries, RatFunc
from .hyper import u1_series, u2_logseries, w2_series
from .odes import Finding
from .operators import (
    G3_0,
    G3_2,
    I1,
    J3_0,
    J3_2,
    J4_0,
    J4_0_poly,
    J4_1,
    J4_2,
    L2,
    L4,
    O2,
    Q,
    R,
    Omega2,
    Omega3_3,
    first_order_factor,
)

O2_INTERTWINER_N = (2, 3, 4, 5)


def _same(a: DiffOp, b: DiffOp) -> bool:
    return op_normalize(a) == op_normalize(b)


def _times_t_power(op: DiffOp, k: int) -> DiffOp:
    return op @ DiffOp.t_power(k)


# ---------------------------------------------------------------------------
# explicit identities
# ---------------------------------------------------------------------------


def sym2_check(N: int) -> Finding:
    return Finding("Sym2(O2)=Omega2_2", N, _same(symmetric_power(O2(N), 2), Omega2(N, 2)))


def l4q_check(N: int) -> Finding:
    residual = L4(N) @ Q(N) - R(N) @ symmetric_power(L2(N), 3)
    return Finding("L4 Q = R Sym3(L2)", N, residual.is_zero())


def o2l2_check(N: int) -> Finding:
    """t^(-(N/2+1)) O_2 t^(N/2+1) = L_2.  Odd N uses the rational shift D -> D + k/t."""
    conj = op_conjugate(O2(N), Fraction(N, 2) + 1)
    return Finding("O2 t^(N/2+1) = t^(N/2+1) L2", N, conj == L2(N), note="half-integer shift" if N % 2 else "")


def i1_check(N: int, order: int = 14) -> Finding:
    """The partner of O_2 under I_1 is second order, and I_1 intertwines.

    The partner is the minimal annihilator of I_1 applied to solutions of
    O_2; the order-one J_1 is the quotient of partner o I_1 by O_2.  The
    analytic w_2 must satisfy partner(O_2 w_2) = 0.
    """
    partner = op_normalize(minimal_annihilator_of_image([O2(N)], I1(N)))
    q, r = op_divmod_right(partner @ I1(N), op_normalize(O2(N)))
    ok = partner.order == 2 and r.is_zero() and q.order == 1
    w = partner(O2(N)(w2_series(N, order)))
    ok = ok and w.is_zero()
    return Finding("O2~ I1 = J1 O2", N, ok, (partner.order, q.order, r.is_zero()))


def decomposition_check(N: int) -> Finding:
    """Sym(O_2(N), O_2(N+1)) t has right factors Omega2_1 and D - (N+1)/t."""
    S = symmetric_product([O2(N), O2(N + 1)]) @ DiffOp.t_power(1)
    _, r1 = op_divmod_right(S, Omega2(N, 1))
    _, r2 = op_divmod_right(S, first_order_factor(N))
    return Finding("Sym(O2(N),O2(N+1)) t = Omega2_1 + (D-(N+1)/t)", N, r1.is_zero() and r2.is_zero(),
                   (r1.is_zero(), r2.is_zero()))


def omega33_sym4_check(N: int) -> Finding:
    """Omega3_3 equals Sym^4(O_2(N)) t^(N+1) up to a left factor."""
    return Finding("Omega3_3 = Sym4(O2) t^(N+1)", N, _same(Omega3_3(N), symmetric_power(O2(N), 4) @ DiffOp.t_power(N + 1)))


def omega33_kernel_check(N: int, order: int = 16) -> Finding:
    """Omega3_3 kills t^-(N+1) u^a v^(4-a) for all a, log channels included."""
    u1 = LogSeries([u1_series(N, order)])
    u2 = u2_logseries(N, order)
    op = Omega3_3(N)
    for a in range(5):
        y = (u1 ** a * u2 ** (4 - a)).shift(-(N + 1)) if a < 4 else (u1 ** 4).shift(-(N + 1))
        if not op(y).is_zero():
            return Finding("Omega3_3 kernel", N, False, (a,))
    return Finding("Omega3_3 kernel", N, True)


# ---------------------------------------------------------------------------
# exponent sets
# ---------------------------------------------------------------------------


def listed_exponents(name: str, N: int) -> list[int]:
    sets = {
        "Omega2_2": [2, N + 2, 2 * N + 2],
        "Omega2_1": [1, N + 1, 2 * N + 2],
        "Omega3_3": [-N + 3, 3, N + 3, 2 * N + 3, 3 * N + 3],
        "Omega3_2": [-N + 2, 2, 3, N + 2, N + 3, 2 * N + 2, 2 * N + 3, 3 * N + 3],
        "Omega3_0": [-N, 0, 1, N + 1, N + 2, 2 * N + 2, 2 * N + 3, 3 * N + 3],
        "Omega3_1+": [-N + 1, 1, 2, N + 1, N + 2, N + 3, 2 * N + 2, 2 * N + 3, 3 * N + 3],
        "M3_0": [-N, 0, N + 1, 2 * N + 2, 3 * N + 3],
        "M3_2": [-N + 2, 2, N + 2, 2 * N + 2, 3 * N + 2],
    }
    return sorted(sets[name])


def operator_for_exponents(name: str, N: int) -> DiffOp:
    if name == "Omega2_2":
        return Omega2(N, 2)
    if name == "Omega2_1":
        return Omega2(N, 1)
    if name == "Omega3_3":
        return Omega3_3(N)
    if name == "Omega3_2":
        return symmetric_product([O2(N)] * 3 + [O2(N + 1)]) @ DiffOp.t_power(N + 2)
    if name == "Omega3_0":
        return symmetric_product([O2(N)] + [O2(N + 1)] * 3) @ DiffOp.t_power(N + 4)
    if name == "Omega3_1+":
        return symmetric_product([O2(N)] * 2 + [O2(N + 1)] * 2) @ DiffOp.t_power(N + 3)
    if name == "M3_0":
        return minimal_annihilator_of_image([L2(N + 1)] * 4, J3_0(N))
    if name == "M3_2":
        return minimal_annihilator_of_image([L2(N)] * 4, J3_2(N))
    raise KeyError(name)


def exponents_check(name: str, N: int) -> Finding:
    got = sorted(int(e) if e.denominator == 1 else e for e in indicial_exponents(operator_for_exponents(name, N)))
    want = listed_exponents(name, N)
    return Finding(f"exponents {name}", N, got == want, (tuple(got), tuple(want)))


# ---------------------------------------------------------------------------
# homomorphisms of the fifth-order summands (C^(3)_0 and C^(3)_2)
# ---------------------------------------------------------------------------


def _homomorphism(base: DiffOp, k: int, J: DiffOp, G: DiffOp | None):
    """Rebuild M from J's image, then divide M J by Sym^k(base) on the right.

    Sym^k is kept monic: a left factor on it would change the quotient.
    Returns (M, quotient, remainder-is-zero, quotient-matches-G).
    """
    S = symmetric_power(base, k)
    M = op_normalize(minimal_annihilator_of_image([base] * k, J))
    q, r = op_divmod_right(M @ J, S)
    match = None
    if G is not None and q.order == G.order:
        g = q.leading() / G.leading()
        match = (q - G.left_mul(g)).is_zero()
    return M, q, r.is_zero(), match


def sym4_intertwiner_check(N: int, m: int, base_shift: int | None = None, j_form: int = 1) -> Finding:
    """M^(3)_m J^(3)_m = G^(3)_m Sym^4(L_2(N + base_shift)).

    The display uses base_shift = 1 for both m; that is the default.
    """
    shift = 1 if base_shift is None else base_shift
    if m == 0:
        J, G = J3_0(N, j_form), G3_0(N)
    elif m == 2:
        J, G = J3_2(N), G3_2(N)
    else:
        raise ValueError("homomorphisms are listed for m = 0 and 2")
    M, q, rem0, match = _homomorphism(L2(N + shift), 4, J, G)
    ok = M.order == 5 and rem0 and bool(match)
    label = f"M3_{m} J = G Sym4(L2(N+{shift}))" + (f" [J form {j_form}]" if j_form != 1 else "")
    return Finding(label, N, ok, (M.order, rem0, match))


def o2_intertwiner_check(N: int, m: int) -> Finding:
    """M J^(4)_m = G Sym^(2m+2)(O_2(N)) with G of order m."""
    J = {0: J4_0, 1: J4_1, 2: J4_2}[m](N)
    k = 2 * m + 2
    M, q, rem0, _ = _homomorphism(O2(N), k, J, None)
    ok = M.order == k + 1 and rem0 and q.order == m
    return Finding(f"M J4_{m} = G Sym{k}(O2)", N, ok, (M.order, rem0, q.order))


def j40_is_c22_check(N: int) -> Finding:
    """The zeroth-order intertwiner J^(4)_0(N) is a constant multiple of C^(2)_2(N)."""
    from .formfactors import C2_poly

    r = RatFunc(C2_poly(N, 2).poly, J4_0_poly(N))
    ok = r.is_polynomial() and r.num.degree == 0
    return Finding("J4_0 proportional to C2_2", N, ok, (str(r),))


# ---------------------------------------------------------------------------
# suites
# ---------------------------------------------------------------------------


def operator_identity_suite(Ns=range(1, 6), o2l2_N=range(1, 7)) -> list[Finding]:
    out = [sym2_check(N) for N in Ns]
    out += [l4q_check(N) for N in Ns]
    out += [o2l2_check(N) for N in o2l2_N]
    return out


def homomorphism_suite(Ns=range(1, 4)) -> list[Finding]:
    """Intertwiners exactly as displayed."""
    out = []
    for N in Ns:
        out.append(sym4_intertwiner_check(N, 0))
        out.append(sym4_intertwiner_check(N, 2))
    for N in O2_INTERTWINER_N:
        out.append(o2_intertwiner_check(N, 0))
        out.append(o2_intertwiner_check(N, 1))
    out.append(o2_intertwiner_check(2, 2))
    return out


def structure_suite(Ns=range(1, 5)) -> list[Finding]:
    out = []
    for N in Ns:
        out += [i1_check(N), decomposition_check(N), omega33_sym4_check(N), omega33_kernel_check(N)]
    return out


def exponent_suite(Ns=range(1, 4)) -> list[Finding]:
    names = ["Omega2_2", "Omega2_1", "Omega3_3", "Omega3_2", "Omega3_0", "Omega3_1+", "M3_0", "M3_2"]
    return [exponents_check(name, N) for N in Ns for name in names]


def homomorphism_suite_corrected(Ns=range(1, 4)) -> list[Finding]:
    """The fifth-order homomorphisms in the form that holds.

    m = 2 needs Sym^4(L_2(N)); m = 0 uses the logarithmic-derivative form of J.
    """
    out = []
    for N in Ns:
        out.append(sym4_intertwiner_check(N, 0))
        out.append(sym4_intertwiner_check(N, 2, base_shift=0))
    return out


# ---------------------------------------------------------------------------
# open questions on the scalar sequences
# ---------------------------------------------------------------------------


def a_coeff_forms_check(N: int) -> Finding:
    """Both closed forms of a_n(N) for 0 <= n < N."""
    from .sequences import a_coeff, a_coeff_second_form

    for n in range(N):
        a, b = a_coeff(N, n), a_coeff_second_form(N, n)
        if a != b:
            return Finding("a_n(N) second form", N, False, (n, str(a), str(b)))
    return Finding("a_n(N) second form", N, True)


def harmonic_middle_check(N: int) -> Finding:
    """c^(2)_{2;N-1} from the convolution against lam_N^2 2N H_N(1/2)."""
    from .formfactors import c2_coefficients, c2_middle_closed_form

    got, want = c2_coefficients(N, 2)[N - 1], c2_middle_closed_form(N)
    return Finding("c2_{2;N-1} = lam^2 2N H_N(1/2)", N, got == want, (str(got), str(want)))


def open_question_suite(Ns=range(1, 7)) -> list[Finding]:
    return [a_coeff_forms_check(N) for N in Ns] + [harmonic_middle_check(N) for N in Ns]
