"""Verification suites as lists of independent tasks.

A task is a module-level function plus arguments, so it can run in a worker
process.  Every task returns a list of :class:`Result`; results are gathered
in task order, which keeps reports identical for any number of workers.

A result is *gating* when its failure should fail the run.  Displays that
are known not to hold as printed are reported with ``gating=False`` next to
the corrected form, which is gating.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .exact import LogSeries, Series, rational_to_str
from .odes import Finding


@dataclass(frozen=True)
class Result:
    suite: str
    finding: Finding
    gating: bool = True

    @property
    def failed(self) -> bool:
        return self.gating and not self.finding.holds

    def line(self) -> str:
        tag = "" if self.gating else "  [display as printed]"
        return f"[{self.suite}] {self.finding.line()}{tag}"

    def to_json_obj(self) -> dict:
        f = self.finding
        return {
            "suite": self.suite,
            "name": f.name,
            "N": f.N,
            "holds": f.holds,
            "gating": self.gating,
            "witness": [str(w) for w in f.witness],
            "note": f.note,
        }


@dataclass(frozen=True)
class Task:
    func: Callable
    args: tuple = ()

    def run(self) -> list[Result]:
        return self.func(*self.args)


@dataclass
class SuiteOptions:
    Ns: tuple[int, ...] | None = None
    powers: tuple[int, ...] = (2, 3, 4)
    order: int | None = None


def _wrap(suite: str, findings, gating: bool = True) -> list[Result]:
    return [Result(suite, f, gating) for f in findings]


# ---------------------------------------------------------------------------
# task bodies
# ---------------------------------------------------------------------------


def wronskian_task(N: int, powers: tuple[int, ...], order: int | None) -> list[Result]:
    from .hyper import wronskian_power, wronskian_residual

    o = order or N + 10
    out = [Finding("u1 u2' - beta u2 u1' = t^(N+2)", N, wronskian_residual(N, o).is_zero(), note=f"through t^{o - 1}")]
    one = LogSeries([Series.one(o)])
    for n in powers:
        r = wronskian_power(N, n, o) - one
        out.append(Finding(f"Wronskian power n={n}", N, r.is_zero(), (r.valuation,)))
    return _wrap("wronskian", out)


def fixtures_task() -> list[Result]:
    from .fixtures import fixtures_check

    rep = fixtures_check()
    bad = {(m.n, m.N): m for m in rep.mismatches}
    out = []
    for n, N, how in rep.compared:
        m = bad.get((n, N))
        pal = [x for x in rep.palindromy_failures if x[:2] == (n, N)]
        ok = m is None and not pal
        witness = (m,) if m else tuple(pal)
        out.append(Finding(f"table f^({n}) [{how}]", N, ok, witness))
    return _wrap("fixtures", out)


def ode_task(N: int) -> list[Result]:
    from .odes import ode_residual_suite

    out = _wrap("ode", ode_residual_suite(N, corrected=True))
    out += _wrap("ode", [f for f in ode_residual_suite(N, corrected=False) if not f.holds], gating=False)
    return out


def operators_task(Ns: tuple[int, ...], o2l2_Ns: tuple[int, ...]) -> list[Result]:
    from .verify import operator_identity_suite

    return _wrap("operators", operator_identity_suite(Ns, o2l2_Ns))


def structure_task(N: int) -> list[Result]:
    from .verify import structure_suite

    return _wrap("structure", structure_suite((N,)))


def homomorphism_e_task(N: int) -> list[Result]:
    from .verify import sym4_intertwiner_check

    out = _wrap("homomorphisms", [sym4_intertwiner_check(N, 0), sym4_intertwiner_check(N, 2, base_shift=0)])
    printed = [sym4_intertwiner_check(N, 2), sym4_intertwiner_check(N, 0, j_form=2)]
    return out + _wrap("homomorphisms", printed, gating=False)


def homomorphism_f_task(N: int, ms: tuple[int, ...]) -> list[Result]:
    from .verify import o2_intertwiner_check, j40_is_c22_check

    out = [o2_intertwiner_check(N, m) for m in ms]
    if 0 in ms:
        out.append(j40_is_c22_check(N))
    return _wrap("homomorphisms", out)


def exponents_task(N: int) -> list[Result]:
    from .verify import exponents_check

    out = []
    for name in ["Omega2_2", "Omega2_1", "Omega3_3", "Omega3_2", "Omega3_0", "Omega3_1+", "M3_0", "M3_2"]:
        f = exponents_check(name, N)
        # N = 1 merges exponents of the symmetric products; the M3_2 list ends in 3N+2
        gating = not (name == "M3_2" or (N == 1 and name in ("Omega3_2", "Omega3_1+")))
        out.append(Result("exponents", f, gating))
    return out


def cancellation_task(n: int, N: int) -> list[Result]:
    from .formfactors import cancellation_report

    r = cancellation_report(n, N)
    witness = (r.vanishes_through, r.required_through, str(r.first_exponent), rational_to_str(r.first_coefficient),
               rational_to_str(r.expected_coefficient))
    note = f"zero through t^{r.vanishes_through}, leading {rational_to_str(r.first_coefficient)} t^{r.first_exponent}"
    return _wrap("cancellation", [Finding(f"f^({n}) cancellation", N, r.ok, witness, note)])


def oracle_task(n: int, N: int, order: int) -> list[Result]:
    from .formfactors import assemble
    from .fixtures import fixture_series
    from .oracle import oracle_f

    built = fixture_series(n, N, order) if N == 0 else assemble(n, N, order)
    ref = oracle_f(n, N, order)
    diff = built - ref
    first = diff.valuation
    return _wrap("oracle", [Finding(f"f^({n}) construction = integral", N, diff.is_zero(), (first,), f"through t^{order - 1}")])


def leading_task(n: int, N: int) -> list[Result]:
    from .oracle import oracle_f
    from .sequences import f2_leading, f3_leading, selberg_leading

    sel = selberg_leading(n, N)
    shift = Fraction(N, 2) if n % 2 else Fraction(0)
    exp = sel.exponent - shift
    s = oracle_f(n, N, int(exp) + 1)
    ok = s.valuation == exp and s[int(exp)] == sel.coefficient
    closed = {2: f2_leading, 3: f3_leading}.get(n)
    if closed is not None:
        ok = ok and closed(N) == sel.coefficient
    w = (str(exp), rational_to_str(sel.coefficient), s.valuation, rational_to_str(s[int(exp)]))
    return _wrap("leading", [Finding(f"f^({n}) leading term", N, ok, w, f"{rational_to_str(sel.coefficient)} t^{exp}")])


def scaleup_task(N: int) -> list[Result]:
    from .formfactors import C4_construction, cancellation_report

    c = C4_construction(N)
    r = cancellation_report(4, N)
    ok = c.consistent and c.log_free and r.ok
    note = f"Kbar={rational_to_str(c.Kbar)} K0={rational_to_str(c.K0)} K1={rational_to_str(c.K1)}"
    return _wrap("scaleup", [Finding("f^(4) by linear solve", N, ok, (c.consistent, c.log_free, r.vanishes_through), note)])


def open_questions_task(Ns: tuple[int, ...]) -> list[Result]:
    from .verify import open_question_suite

    return _wrap("open-questions", open_question_suite(Ns), gating=False)


# ---------------------------------------------------------------------------
# suite registry
# ---------------------------------------------------------------------------


def _Ns(opts: SuiteOptions, default) -> tuple[int, ...]:
    return tuple(opts.Ns) if opts.Ns is not None else tuple(default)


def _wronskian(o):
    return [Task(wronskian_task, (N, tuple(o.powers), o.order)) for N in _Ns(o, range(1, 7))]


def _fixtures(o):
    return [Task(fixtures_task)]


def _ode(o):
    return [Task(ode_task, (N,)) for N in _Ns(o, range(1, 5))]


def _operators(o):
    Ns = _Ns(o, range(1, 6))
    return [Task(operators_task, (Ns, tuple(range(1, max(Ns) + 2))))]


def _structure(o):
    return [Task(structure_task, (N,)) for N in _Ns(o, range(1, 5))]


def _homomorphisms(o):
    tasks = [Task(homomorphism_e_task, (N,)) for N in _Ns(o, range(1, 4))]
    tasks += [Task(homomorphism_f_task, (N, (0, 1))) for N in (2, 3, 4, 5)]
    tasks.append(Task(homomorphism_f_task, (2, (2,))))
    return tasks


def _exponents(o):
    return [Task(exponents_task, (N,)) for N in _Ns(o, range(1, 4))]


def _cancellation(o):
    tasks = [Task(cancellation_task, (n, N)) for n in (2, 3) for N in _Ns(o, range(1, 7))]
    return tasks + [Task(cancellation_task, (4, N)) for N in _Ns(o, range(1, 5))]


def _oracle(o):
    tasks = [Task(oracle_task, (n, N, o.order or 2 * N + 8)) for n in (2, 3) for N in _Ns(o, range(0, 5))]
    return tasks + [Task(oracle_task, (4, 1, o.order or 8))]


def _leading(o):
    tasks = [Task(leading_task, (n, N)) for n in (2, 3) for N in _Ns(o, range(0, 7))]
    return tasks + [Task(leading_task, (4, N)) for N in (1, 2)]


def _scaleup(o):
    return [Task(scaleup_task, (N,)) for N in _Ns(o, range(1, 11))]


def _open(o):
    return [Task(open_questions_task, (_Ns(o, range(1, 7)),))]


SUITES: dict[str, Callable[[SuiteOptions], list[Task]]] = {
    "wronskian": _wronskian,
    "fixtures": _fixtures,
    "ode": _ode,
    "operators": _operators,
    "structure": _structure,
    "homomorphisms": _homomorphisms,
    "exponents": _exponents,
    "cancellation": _cancellation,
    "oracle": _oracle,
    "leading": _leading,
    "scaleup": _scaleup,
    "open-questions": _open,
}

ALL = list(SUITES)


def tasks_for(names: list[str], opts: SuiteOptions) -> list[Task]:
    out = []
    for name in names:
        if name == "all":
            for s in ALL:
                out += SUITES[s](opts)
        else:
            out += SUITES[name](opts)
    return out


def run_tasks(tasks: list[Task], jobs: int = 1) -> list[Result]:
    if jobs <= 1:
        results = [t.run() for t in tasks]
    else:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(Task.run, tasks))
    return [r for rs in results for r in rs]
