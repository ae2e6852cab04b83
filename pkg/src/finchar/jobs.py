"""Jobs, reports and the verification pipeline behind the command line.

A job is a JSON object naming a group, a torsion element, a dominant weight
and a list of tasks.  Running it produces a report dictionary whose content
depends only on the job (and its seed), so that serialising it with sorted
keys is byte-stable.

Job fields::

    group       "GL_3" | {"type": "A", "rank": 1, "isogeny": "adjoint"}
                | {"simple_roots": [...], "simple_coroots": [...], "lattice_rank": L}
    t           {"order": r, "numerators": [k_1, ..., k_L]}   (default: identity)
    lambda      dominant weight in character coordinates
    parabolic   "auto" (P_lambda), "borel", or a list of 1-based Levi simple indices
    tasks       subset of components, counting, character, asymptotics, verify
    n_range     [lo, hi], inclusive range of n for the character table (default [0, 3])
    residues    residue classes mod r used by asymptotics and verify (default all)
    seed        integer seed for the perturbed cocharacter h (default 0)
    caps        {"max_weyl": int, "max_weights": int}
"""
from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Sequence

from .exactnum import CycNum, NPoly
from .fixedlocus import fixed_components, orbit_partition_crosscheck, verify_counting
from .lefschetz import (check_pole_cancellation, component_polynomial, degree_integral,
                        degree_report, leading_coefficient, localized_series, perturbed_h,
                        resolve_h, resolve_parabolic, total_polynomial)
from .oracle import DEFAULT_MAX_WEIGHTS, char_at
from .rootdata import (DEFAULT_MAX_WEYL, ParabolicSpec, RootDatum, RootDatumError,
                       build_root_datum, enumerate_weyl, explicit_root_datum, group,
                       parabolic_for_lambda)
from .torus import TorsionElement, TorsionError, invert

TASKS = ("components", "counting", "character", "asymptotics", "verify")


class JobError(ValueError):
    """A job that does not parse or validate.  Carries a 1-based source position."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = f"line {line}, column {column}: " if line is not None else ""
        super().__init__(where + message)

    def __reduce__(self):
        return (JobError, (self.args[0], None, None))


# ---------------------------------------------------------------------------
# parsing


def _locate(text: str | None, key: str) -> tuple[int | None, int | None]:
    """Position of the first occurrence of ``"key"`` in the source text."""
    if not text:
        return None, None
    idx = text.find(f'"{key}"')
    if idx < 0:
        return None, None
    line = text.count("\n", 0, idx) + 1
    col = idx - (text.rfind("\n", 0, idx) + 1) + 1
    return line, col


def _int_list(value, what: str) -> list[int]:
    if not isinstance(value, list) or not all(isinstance(x, int) and not isinstance(x, bool)
                                              for x in value):
        raise ValueError(f"{what} must be a list of integers")
    return list(value)


def _build_group(spec) -> RootDatum:
    if isinstance(spec, str):
        return group(spec)
    if isinstance(spec, dict):
        if "simple_roots" in spec:
            return explicit_root_datum(spec["simple_roots"], spec.get("simple_coroots", []),
                                       spec.get("lattice_rank"))
        if "type" in spec:
            return build_root_datum(str(spec["type"]), int(spec["rank"]),
                                    str(spec.get("isogeny", "simply-connected")))
    raise RootDatumError("group must be a name such as \"SL_2\" or a descriptor object")


@dataclass
class Job:
    group: Any
    lam: tuple[int, ...]
    order: int = 1
    numerators: tuple[int, ...] | None = None
    parabolic: Any = "auto"
    tasks: tuple[str, ...] = ("components", "character")
    n_range: tuple[int, int] = (0, 3)
    residues: tuple[int, ...] | None = None
    seed: int = 0
    max_weyl: int = DEFAULT_MAX_WEYL
    max_weights: int = DEFAULT_MAX_WEIGHTS
    datum: RootDatum = field(default=None, repr=False, compare=False)
    t: TorsionElement = field(default=None, repr=False, compare=False)
    P: ParabolicSpec = field(default=None, repr=False, compare=False)

    def to_json(self) -> dict:
        return {"group": self.group, "lambda": list(self.lam),
                "t": {"order": self.order, "numerators": list(self.numerators)},
                "parabolic": self.parabolic, "tasks": list(self.tasks),
                "n_range": list(self.n_range), "residues": list(self.residues),
                "seed": self.seed,
                "caps": {"max_weyl": self.max_weyl, "max_weights": self.max_weights}}


def parse_job(data: dict, text: str | None = None) -> Job:
    """Validate a decoded job object; errors point at the offending key in ``text``."""
    if not isinstance(data, dict):
        raise JobError("a job must be a JSON object", 1, 1)
    known = {"group", "t", "lambda", "parabolic", "tasks", "n_range", "residues", "seed", "caps"}
    for key in data:
        if key not in known:
            raise JobError(f"unknown field {key!r}", *_locate(text, key))
    key = "group"
    try:
        if "group" not in data:
            raise ValueError("missing required field 'group'")
        d = _build_group(data["group"])

        key = "lambda"
        if "lambda" not in data:
            raise ValueError("missing required field 'lambda'")
        lam = tuple(_int_list(data["lambda"], "lambda"))
        if len(lam) != d.lattice_rank:
            raise ValueError(f"lambda has {len(lam)} entries, the character lattice has rank "
                             f"{d.lattice_rank}")
        if not d.is_dominant(lam):
            raise ValueError(f"lambda {list(lam)} is not dominant "
                             f"(labels {list(d.dynkin_labels(lam))})")

        key = "t"
        tspec = data.get("t", {"order": 1, "numerators": [0] * d.lattice_rank})
        if not isinstance(tspec, dict) or "order" not in tspec or "numerators" not in tspec:
            raise ValueError("t must be an object {\"order\": r, \"numerators\": [...]}")
        order = tspec["order"]
        if not isinstance(order, int) or order < 1:
            raise ValueError("t.order must be a positive integer")
        nums = _int_list(tspec["numerators"], "t.numerators")
        if len(nums) != d.lattice_rank:
            raise ValueError(f"t.numerators has {len(nums)} entries, the cocharacter lattice "
                             f"has rank {d.lattice_rank}")
        t = TorsionElement.from_numerators(d, order, nums)

        key = "parabolic"
        par = data.get("parabolic", "auto")
        if par == "auto":
            P = parabolic_for_lambda(d, lam)
        elif par == "borel":
            P = ParabolicSpec.borel()
        else:
            levi = _int_list(par, "parabolic")
            if any(not 1 <= i <= d.rank for i in levi):
                raise ValueError(f"Levi simple indices must lie in 1..{d.rank}")
            P = resolve_parabolic(d, lam, ParabolicSpec(frozenset(i - 1 for i in levi)))
            par = sorted(set(levi))

        key = "tasks"
        tasks = data.get("tasks", list(Job.tasks))
        if not isinstance(tasks, list) or not tasks or any(x not in TASKS for x in tasks):
            raise ValueError(f"tasks must be a non-empty list drawn from {list(TASKS)}")
        tasks = tuple(x for x in TASKS if x in tasks)

        key = "n_range"
        n_range = _int_list(data.get("n_range", [0, 3]), "n_range")
        if len(n_range) != 2 or not 0 <= n_range[0] <= n_range[1]:
            raise ValueError("n_range must be [lo, hi] with 0 <= lo <= hi")

        key = "residues"
        r = t.order
        residues = data.get("residues")
        if residues is None:
            residues = list(range(r))
        residues = _int_list(residues, "residues")
        if not residues or any(not 0 <= p < r for p in residues):
            raise ValueError(f"residues must be a non-empty subset of [0, {r})")

        key = "seed"
        seed = data.get("seed", 0)
        if not isinstance(seed, int):
            raise ValueError("seed must be an integer")

        key = "caps"
        caps = data.get("caps", {})
        if not isinstance(caps, dict) or any(k not in ("max_weyl", "max_weights") for k in caps):
            raise ValueError("caps may only set max_weyl and max_weights")
        max_weyl = int(caps.get("max_weyl", DEFAULT_MAX_WEYL))
        max_weights = int(caps.get("max_weights", DEFAULT_MAX_WEIGHTS))
    except (ValueError, TypeError, KeyError, RootDatumError, TorsionError) as exc:
        if isinstance(exc, JobError):
            raise
        raise JobError(f"{key}: {exc}", *_locate(text, key)) from None
    return Job(data["group"], lam, t.order, t.numerators, par, tasks, tuple(n_range),
               tuple(sorted(set(residues))), seed, max_weyl, max_weights, d, t, P)


def load_job(text: str) -> Job:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise JobError(exc.msg, exc.lineno, exc.colno) from None
    return parse_job(data, text)


def with_overrides(job: Job, *, tasks=None, seed=None, max_weyl=None, max_weights=None) -> Job:
    """Re-validate a job after replacing some of its fields."""
    data = job.to_json()
    if tasks is not None:
        data["tasks"] = list(tasks)
    if seed is not None:
        data["seed"] = seed
    if max_weyl is not None:
        data["caps"]["max_weyl"] = max_weyl
    if max_weights is not None:
        data["caps"]["max_weights"] = max_weights
    return parse_job(data)


# ---------------------------------------------------------------------------
# interpolation


def fit_polynomial(samples: Sequence[tuple[int, Any]], r: int, p: int) -> NPoly:
    """Interpolating polynomial in n through samples taken on the class n = p mod r.

    Newton divided differences are taken in m = (n - p) / r and the result is
    rewritten in n.  Vanishing top differences simply give a lower degree.
    """
    if len(samples) < 2:
        raise ValueError("at least two samples are needed")
    ns = [int(n) for n, _ in samples]
    if len(set(ns)) != len(ns):
        raise ValueError("duplicate sample points")
    if any(n % r != p % r for n in ns):
        raise ValueError(f"samples mix residue classes modulo {r}")
    ms = [Fraction(n - p, r) for n in ns]
    coef = [CycNum.rational(v) if not isinstance(v, CycNum) else v for _, v in samples]
    # divided-difference table, in place
    for k in range(1, len(ms)):
        for i in range(len(ms) - 1, k - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (ms[i] - ms[i - k])
    poly = NPoly()
    for k in range(len(ms) - 1, -1, -1):
        poly = poly * NPoly([-ms[k], 1]) + NPoly([coef[k]])
    return poly.compose_affine(Fraction(1, r), Fraction(-p, r))


def default_samples(p: int, r: int, d: int) -> list[int]:
    """n = p, p + r, ..., p + (d + 2) r: d + 1 points fix the fit, two more check it."""
    return [p + j * r for j in range(d + 3)]


# ---------------------------------------------------------------------------
# report pieces


def _verdict(check: str, inputs: dict, lhs, rhs, passed: bool) -> dict:
    return {"check": check, "inputs": inputs, "lhs": lhs, "rhs": rhs, "passed": bool(passed)}


def _poly_json(poly: NPoly) -> list:
    return poly.to_json()


def residue_section(job: Job, p: int) -> dict:
    """Everything computed on one residue class: polynomials, degree row and verdicts."""
    t, lam, P, d = job.t, job.lam, job.P, job.datum
    r = t.order
    h = resolve_h(d, None, job.seed)
    h2 = perturbed_h(d, job.seed)
    comps = fixed_components(d, P, t)
    top = max(c.dim for c in comps)
    want_verify = "verify" in job.tasks
    out: dict = {"residue": p}
    verdicts = []

    polys = [component_polynomial(c, t, lam, p, h, job.seed) for c in comps]
    total = total_polynomial(t, lam, p, P, h, job.seed)
    if "asymptotics" in job.tasks:
        out["components"] = [c.to_json() for c in polys]
        out["total"] = total.to_json()
        out["degree"] = degree_report(t, lam, P, h, job.seed, residues=[p]).residues[0].to_json()

    if want_verify:
        for c, cp in zip(comps, polys):
            inputs = {"v_word": list(c.v.word), "residue": p}
            bad = check_pole_cancellation(localized_series(c, t, lam, p, h, job.seed))
            verdicts.append(_verdict("pole_cancellation", inputs, bad, [], not bad))
            closed = leading_coefficient(c, t, lam, p)
            series = cp.poly.coefficient(c.dim)
            verdicts.append(_verdict("leading_coefficient", inputs, closed.to_json(),
                                     series.to_json(), closed == series))
        alt = [component_polynomial(c, t, lam, p, h2, job.seed) for c in comps]
        same = all(a.poly == b.poly for a, b in zip(polys, alt))
        verdicts.append(_verdict("h_independence",
                                 {"residue": p, "h": [str(x) for x in h],
                                  "h_perturbed": [str(x) for x in h2]},
                                 [_poly_json(c.poly) for c in polys],
                                 [_poly_json(c.poly) for c in alt], same))
        samples = []
        tinv = invert(t)
        for n in default_samples(p, r, top):
            lef = total(n)
            orc = char_at(tinv, tuple(n * x for x in lam), job.max_weights)
            samples.append((n, orc))
            verdicts.append(_verdict("oracle_equivalence", {"n": n}, lef.to_json(),
                                     orc.to_json(), lef == orc))
        fit = fit_polynomial(samples, r, p)
        verdicts.append(_verdict("degree_fit",
                                 {"residue": p, "samples": [n for n, _ in samples],
                                  "max_dim": top, "fitted_degree": fit.degree},
                                 _poly_json(fit), _poly_json(total.poly),
                                 fit == total.poly and fit.degree <= top))
        row = degree_report(t, lam, P, h, job.seed, residues=[p]).residues[0]
        verdicts.append(_verdict("degree_exactness",
                                 {"residue": p, "max_dim": top,
                                  "exact_degree_expected": row.exact_degree_expected},
                                 row.degree, top, row.passed))
        out["verdicts"] = verdicts
    return out


def _residue_worker(args) -> dict:
    data, p = args
    return residue_section(parse_job(data), p)


def run_job(job: Job, workers: int = 1) -> dict:
    """Execute the job's tasks and return the report dictionary."""
    d, t, lam, P = job.datum, job.t, job.lam, job.P
    enumerate_weyl(d, job.max_weyl)
    h = resolve_h(d, None, job.seed)
    report: dict = {"job": job.to_json(), "group": str(d.label),
                    "t": {"order": t.order, "numerators": list(t.numerators),
                          "x": [str(c) for c in t.x]},
                    "parabolic_levi": sorted(i + 1 for i in P.levi_simples),
                    "h": [str(x) for x in h]}
    verdicts: list = []
    comps = fixed_components(d, P, t)

    if "components" in job.tasks:
        report["components"] = [c.to_json() for c in comps]

    if "counting" in job.tasks or "verify" in job.tasks:
        cnt = verify_counting(d, P, t)
        orb = orbit_partition_crosscheck(d, P, t)
        if "counting" in job.tasks:
            report["counting"] = dict(cnt.to_json(), orbit_crosscheck=orb.to_json())
        verdicts.append(_verdict("counting_orbit_sum", {}, cnt.orbit_sum[0], cnt.orbit_sum[1],
                                 cnt.orbit_sum[0] == cnt.orbit_sum[1]))
        verdicts.append(_verdict("counting_lower_bound", {}, cnt.lower_bound[0], str(cnt.lower_bound[1]),
                                 cnt.lower_bound[0] >= cnt.lower_bound[1]))
        if cnt.borel_quotient is not None:
            verdicts.append(_verdict("counting_borel_quotient", {}, cnt.borel_quotient[0], cnt.borel_quotient[1],
                                     cnt.borel_quotient[0] == cnt.borel_quotient[1]))
        verdicts.append(_verdict("orbit_partition", {}, orb.mismatches, [], orb.passed))

    if "character" in job.tasks:
        lo, hi = job.n_range
        tinv = invert(t)
        report["character"] = {
            "t_inverse": {str(n): total_polynomial(t, lam, n % t.order, P, h, job.seed)(n).to_json()
                          for n in range(lo, hi + 1)},
            "t": {str(n): total_polynomial(tinv, lam, n % t.order, P, h, job.seed)(n).to_json()
                  for n in range(lo, hi + 1)}}
        if "verify" in job.tasks:
            for n in range(lo, hi + 1):
                lef = total_polynomial(t, lam, n % t.order, P, h, job.seed)(n)
                orc = char_at(tinv, tuple(n * x for x in lam), job.max_weights)
                verdicts.append(_verdict("oracle_equivalence", {"n": n}, lef.to_json(),
                                         orc.to_json(), lef == orc))

    if "verify" in job.tasks and P == parabolic_for_lambda(d, lam):
        for c in comps:
            val = degree_integral(c, t, lam)
            verdicts.append(_verdict("integral_positivity", {"v_word": list(c.v.word)},
                                     str(val), "0", val > 0))

    if "asymptotics" in job.tasks or "verify" in job.tasks:
        residues = list(job.residues)
        if workers > 1 and len(residues) > 1:
            data = job.to_json()
            with ProcessPoolExecutor(max_workers=workers) as pool:
                sections = list(pool.map(_residue_worker, [(data, p) for p in residues]))
        else:
            sections = [residue_section(job, p) for p in residues]
        for sec in sections:
            verdicts.extend(sec.pop("verdicts", []))
        if "asymptotics" in job.tasks:
            rep = degree_report(t, lam, P, h, job.seed, residues=[])
            head = rep.to_json()
            head.pop("residues")
            head.pop("passed")
            report["asymptotics"] = dict(head, residues=sections)

    if "verify" in job.tasks or "counting" in job.tasks:
        report["verify"] = {"verdicts": verdicts,
                            "passed": all(v["passed"] for v in verdicts)}
    return report


def report_passed(report: dict) -> bool:
    ok = report.get("verify", {}).get("passed", True)
    asym = report.get("asymptotics")
    if asym is not None:
        ok = ok and all(sec["degree"]["passed"] for sec in asym["residues"])
    return ok


def dumps_report(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def summarize(report: dict) -> list[str]:
    """Short human-readable lines for stdout."""
    lines = [f"group {report['group']}, t of order {report['t']['order']} "
             f"(numerators {report['t']['numerators']}), lambda {report['job']['lambda']}, "
             f"Levi {report['parabolic_levi']}"]
    if "components" in report:
        dims = [c["dim"] for c in report["components"]]
        lines.append(f"components: {len(dims)}, dims {dims}")
    if "counting" in report:
        lines.append(f"counting: {'pass' if report['counting']['passed'] else 'FAIL'}; "
                     f"orbit sizes {report['counting']['orbit_sizes']}")
    if "character" in report:
        for n, val in report["character"]["t_inverse"].items():
            lines.append(f"ch(t^-1, V({n} lambda)) = {CycNum.from_json(val)!r}")
    if "asymptotics" in report:
        for sec in report["asymptotics"]["residues"]:
            lines.append(f"residue {sec['residue']}: degree {sec['degree']['degree']} "
                         f"(max dim {report['asymptotics']['max_dim']})")
    if "verify" in report:
        vs = report["verify"]["verdicts"]
        bad = [v for v in vs if not v["passed"]]
        lines.append(f"verify: {len(vs) - len(bad)}/{len(vs)} checks pass")
        for v in bad:
            lines.append(f"  FAIL {v['check']} {v['inputs']}")
    return lines
