"""Command-line front end.

Exit codes: 0 unique / success, 10 non-unique, 1 a check or selftest failed, 2 input error,
3 resource limit, 70 internal inconsistency (fast and oracle paths disagree).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import List, Optional, Sequence

from .constructions import EXAMPLE_IDS, lemma31_blocks, leth_geometric, paper_example, truncation_depth
from .errors import InvalidInputError, LevelSetError, LogicError, ResourceLimitError
from .limits import DIRECT_RELATION_MAX_N, ORACLE_MAX_N, STRATEGIES, max_n
from .measures import (
    AtomicMeasure,
    CandidateMeasure,
    SignedAtomicMeasure,
    absolute_measure,
    absolute_order,
    candidate_from_json,
    format_rational,
    hahn_decompose,
    measure_from_json,
    parse_rational,
    transform_nu,
)
from .ranges import (
    RangeSummary,
    bullies,
    is_arithmetic_progression,
    is_interval,
    measure_range,
    range_summary,
    signed_range,
)
from .relations import (
    AugmentedRelation,
    SignVector,
    brute_force_relations,
    relation_basis,
)
from .selftest import run_selftest
from .uniqueness import (
    UniquenessCertificate,
    check_L_oracle,
    decide_L_unique,
    find_L_violation,
    find_O_violation,
    solution_space_dimension,
    system_relations,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_LIMIT = 3
EXIT_NON_UNIQUE = 10
EXIT_INCONSISTENT = 70


class Inconsistency(Exception):
    """Fast path and brute-force oracle disagree."""


@dataclass
class LoadedMeasure:
    """A measure as the user wrote it plus the permutation onto the sorted positive measure.

    ``order[k]`` is the input index of the atom at sorted position k.
    """

    source: object  # AtomicMeasure or SignedAtomicMeasure
    positive: AtomicMeasure
    order: List[int]
    input_atoms: List[Fraction]
    label: Optional[str] = None
    depth: Optional[int] = None

    @property
    def signed(self) -> bool:
        return isinstance(self.source, SignedAtomicMeasure)

    def to_input(self, sorted_values: Sequence) -> list:
        out = [None] * len(self.order)
        for k, i in enumerate(self.order):
            out[i] = sorted_values[k]
        return out

    def to_sorted(self, input_values: Sequence) -> list:
        return [input_values[i] for i in self.order]

    def echo(self) -> dict:
        if self.signed:
            out = {"signed_atoms": [format_rational(a) for a in self.input_atoms]}
        else:
            out = {"atoms": [format_rational(a) for a in self.input_atoms],
                   "kappa": format_rational(self.positive.kappa)}
        if self.label:
            out["label"] = self.label
        if self.depth is not None:
            out["truncation_depth"] = self.depth
        return out


def load_measure(source: Optional[str], example: Optional[str]) -> LoadedMeasure:
    if example:
        if source:
            raise InvalidInputError("give either a measure or --example, not both")
        m = paper_example(example)
        label, depth = example, truncation_depth(example)
    else:
        if not source:
            raise InvalidInputError("no measure given (inline JSON, a file path, '-' or --example)")
        if source.lstrip().startswith("{"):
            text = source
        elif source == "-":
            text = sys.stdin.read()
        else:
            try:
                text = Path(source).read_text()
            except OSError as err:
                raise InvalidInputError(f"cannot read {source}: {err.strerror}") from None
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as err:
            raise InvalidInputError(f"malformed JSON at line {err.lineno} column {err.colno}: {err.msg}") from None
        m = measure_from_json(obj)
        raw = obj.get("atoms", obj.get("signed_atoms"))
        label, depth = None, None
        if isinstance(m, AtomicMeasure):
            inputs = [parse_rational(a) for a in raw]
            order = sorted(range(len(inputs)), key=lambda i: -inputs[i])
            return LoadedMeasure(m, m, order, inputs)
    if isinstance(m, SignedAtomicMeasure):
        return LoadedMeasure(m, absolute_measure(m), absolute_order(m), list(m.atoms), label, depth)
    # built-in positive fixtures are echoed in ascending order, the way they are usually written
    inputs = {
        "ex1": [1, 2, 5, 6, 7, 8, 9, 10, 11],
        "ex2-mu": [1, 2, 2, 2, 5],
        "ex2-mu-prime": [1, 2, 4, 5],
        "ex3-mu": [2, 2, 2, 5],
        "ex3-mu-prime": [2, 4, 5],
    }[example.strip().lower().replace("_", "-")]
    inputs = [Fraction(a) for a in inputs]
    order = sorted(range(len(inputs)), key=lambda i: -inputs[i])
    return LoadedMeasure(m, m, order, inputs, label, depth)


# --- report ----------------------------------------------------------------------------------------


def _vector_to_input(lm: LoadedMeasure, v):
    if isinstance(v, AugmentedRelation):
        entries = lm.to_input(v.sign_part.entries)
        sv = SignVector.canonical(entries)
        t = v.kappa_component if sv.entries == tuple(entries) else -v.kappa_component
        return AugmentedRelation(sv, t)
    return SignVector.canonical(lm.to_input(v.entries))


def certificate_in_input_order(lm: LoadedMeasure, cert: UniquenessCertificate) -> UniquenessCertificate:
    basis = type(cert.basis)(tuple(_vector_to_input(lm, v) for v in cert.basis.vectors), cert.basis.rank)
    wit = None
    if cert.witness is not None:
        values = lm.to_input(cert.witness.atom_values)
        if lm.signed:
            _, neg = hahn_decompose(lm.source)
            wit = transform_nu(CandidateMeasure(tuple(values), cert.witness.continuous_slope), neg)
        else:
            wit = CandidateMeasure(tuple(values), cert.witness.continuous_slope)
    return UniquenessCertificate(cert.verdict, basis, cert.threshold, cert.criterion, cert.relation_count,
                                 wit, cert.witness_satisfies_O, cert.witness_positive)


@dataclass
class AnalysisReport:
    measure: dict
    range: RangeSummary
    bullies: List[int]
    no_bullies: bool
    certificate: UniquenessCertificate
    hahn: Optional[dict] = None
    signed_range: Optional[RangeSummary] = None
    metadata: dict = field(default_factory=dict)
    notes: List[str] = field(default_factory=list)

    def to_json(self) -> dict:
        out = {
            "measure": self.measure,
            "range": self.range.to_json(),
            "range_is_single_interval": self.range.is_single_interval,
            "bullies": self.bullies,
            "no_bullies": self.no_bullies,
            "certificate": self.certificate.to_json(),
            "metadata": self.metadata,
            "notes": self.notes,
        }
        if self.hahn is not None:
            out["hahn"] = self.hahn
        if self.signed_range is not None:
            out["signed_range"] = self.signed_range.to_json()
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "AnalysisReport":
        signed = obj.get("signed_range")
        return cls(
            measure=obj["measure"],
            range=RangeSummary.from_json(obj["range"]),
            bullies=list(obj["bullies"]),
            no_bullies=obj["no_bullies"],
            certificate=UniquenessCertificate.from_json(obj["certificate"]),
            hahn=obj.get("hahn"),
            signed_range=RangeSummary.from_json(signed) if signed else None,
            metadata=obj["metadata"],
            notes=list(obj["notes"]),
        )


def _engine(n: int, strategy: str, limit: Optional[int]) -> str:
    if strategy == "auto":
        return "direct" if n <= 8 else "mitm"
    return strategy


def _oracle_crosscheck(m: AtomicMeasure, cert: UniquenessCertificate, strategy: str, limit) -> None:
    if m.n > ORACLE_MAX_N:
        raise ResourceLimitError("--oracle brute force", m.n, ORACLE_MAX_N)
    fast = system_relations(m, strategy=strategy, limit=limit)
    slow = brute_force_relations(m.atoms, m.kappa)
    fast_signs = [r.sign_part if isinstance(r, AugmentedRelation) else r for r in fast]
    if fast_signs != slow:
        raise Inconsistency("relation enumeration differs from the 3^n brute force")
    if m.n:
        dim = solution_space_dimension(m, fast)
        if (dim == 1) != cert.is_unique:
            raise Inconsistency("verdict differs from the solution-space dimension oracle")
    if cert.witness is not None and m.kappa == 0:
        if not check_L_oracle(m, cert.witness):
            raise Inconsistency("witness fails the exhaustive (L) check")


def analyze(lm: LoadedMeasure, strategy: str = "auto", limit: Optional[int] = None,
            oracle: bool = False, timing: bool = False) -> AnalysisReport:
    t0 = time.perf_counter()
    m = lm.positive
    rng = range_summary(m, limit=limit, strategy=strategy)
    cert = decide_L_unique(m, strategy=strategy, limit=limit)
    if oracle:
        _oracle_crosscheck(m, cert, strategy, limit)
    notes = []
    hahn = sr = None
    if lm.signed:
        pos, neg = hahn_decompose(lm.source)
        hahn = {"positive": list(pos), "negative": list(neg)}
        sr = range_summary(lm.source, limit=limit, strategy=strategy)
        notes.append("signed measure analysed through |mu|; verdict is truncation-level only")
    if lm.depth is not None:
        notes.append(f"finite truncation at depth {lm.depth}")
    if m.kappa == 0 and m.n:
        notes.append("kappa = 0: the range is a finite point set, so the no-bullies criterion and "
                     "topological interval-ness are reported separately")
    meta = {"strategy": strategy, "engine": _engine(m.n, strategy, limit), "limit_n": max_n(limit),
            "oracle": oracle}
    if timing:
        meta["seconds"] = round(time.perf_counter() - t0, 6)
    return AnalysisReport(
        measure=lm.echo(),
        range=rng,
        bullies=sorted(lm.order[i] for i in bullies(m)),
        no_bullies=is_interval(m),
        certificate=certificate_in_input_order(lm, cert),
        hahn=hahn,
        signed_range=sr,
        metadata=meta,
        notes=notes,
    )


# --- human-readable output -----------------------------------------------------------------------


def _fmt_list(values) -> str:
    return "(" + ", ".join(format_rational(Fraction(v)) for v in values) + ")"


def render_report(rep: AnalysisReport) -> str:
    cert = rep.certificate
    lines = [f"measure: {json.dumps(rep.measure)}"]
    if rep.hahn is not None:
        lines.append(f"hahn partition: positive {rep.hahn['positive']}, negative {rep.hahn['negative']}")
        sr = rep.signed_range
        lines.append(f"signed range: {sr.components} points from {format_rational(sr.lo)} to {format_rational(sr.hi)}")
    rng = rep.range
    lines.append(f"range: {rng}" if rng.components <= 40 else
                 f"range: {rng.components} components spanning [{format_rational(rng.lo)}, {format_rational(rng.hi)}]")
    lines.append(f"range is a single interval: {rng.is_single_interval}")
    if rng.is_arithmetic_progression is not None:
        lines.append(f"range is an arithmetic progression: {rng.is_arithmetic_progression}")
    lines.append(f"bullies (input indices): {rep.bullies}")
    lines.append(f"no-bullies criterion: {rep.no_bullies}")
    lines.append(f"verdict: {cert.verdict} ({cert.criterion}: rank {cert.rank}, needs {cert.threshold}; "
                 f"{cert.relation_count} relations)")
    for v in cert.basis.vectors:
        lines.append(f"  basis {v.to_json() if isinstance(v, AugmentedRelation) else v}")
    if cert.witness is not None:
        w = cert.witness
        slope = f", slope {format_rational(w.continuous_slope)}" if rep.measure.get("kappa", "0") != "0" else ""
        lines.append(f"witness nu: {_fmt_list(w.atom_values)}{slope}")
        lines.append(f"witness satisfies (O): {cert.witness_satisfies_O}")
    for note in rep.notes:
        lines.append(f"note: {note}")
    if "seconds" in rep.metadata:
        lines.append(f"time: {rep.metadata['seconds']:.3f}s ({rep.metadata['engine']})")
    return "\n".join(lines)


def _emit(args, payload: dict, text: str) -> None:
    out = json.dumps(payload, indent=2, sort_keys=True) if args.json else text
    if args.out:
        Path(args.out).write_text(out + "\n")
    else:
        print(out)


def _jsonable(d: dict) -> dict:
    return {k: (format_rational(v) if isinstance(v, Fraction) else v) for k, v in d.items()}


# --- commands ------------------------------------------------------------------------------------


def cmd_analyze(args) -> int:
    lm = load_measure(args.measure, args.example)
    rep = analyze(lm, args.strategy, args.limit_n, args.oracle, args.timing)
    _emit(args, rep.to_json(), render_report(rep))
    return EXIT_OK if rep.certificate.is_unique else EXIT_NON_UNIQUE


def cmd_check(args) -> int:
    lm = load_measure(args.measure, args.example)
    try:
        nu_obj = json.loads(args.nu)
    except json.JSONDecodeError as err:
        raise InvalidInputError(f"--nu: malformed JSON ({err.msg})") from None
    nu_in = candidate_from_json(nu_obj)
    if nu_in.n != len(lm.input_atoms):
        raise InvalidInputError(f"--nu has {nu_in.n} values but the measure has {len(lm.input_atoms)} atoms")
    if lm.signed:
        _, neg = hahn_decompose(lm.source)
        moved = transform_nu(nu_in, neg)
    else:
        moved = nu_in
    nu = CandidateMeasure(tuple(lm.to_sorted(moved.atom_values)), moved.continuous_slope)
    m = lm.positive
    if args.mode == "O":
        if m.kappa != 0:
            raise InvalidInputError("mode O is only checkable for kappa = 0")
        violation = find_O_violation(m, nu)
    else:
        violation = find_L_violation(m, nu, strategy=args.strategy, limit=args.limit_n)
        if args.oracle and m.kappa == 0:
            if m.n > ORACLE_MAX_N:
                raise ResourceLimitError("--oracle brute force", m.n, ORACLE_MAX_N)
            if check_L_oracle(m, nu) != (violation is None):
                raise Inconsistency("(L) fast path disagrees with the exhaustive check")
    payload = {"mode": args.mode, "measure": lm.echo(), "nu": nu_in.to_json(), "pass": violation is None}
    lines = [f"condition ({args.mode}): {'pass' if violation is None else 'FAIL'}"]
    if violation is not None:
        v = dict(violation)
        v["subset_a"] = sorted(lm.order[i] for i in v["subset_a"])
        v["subset_b"] = sorted(lm.order[i] for i in v["subset_b"])
        payload["violation"] = _jsonable(v)
        masses_a = [format_rational(lm.input_atoms[i]) for i in v["subset_a"]]
        masses_b = [format_rational(lm.input_atoms[i]) for i in v["subset_b"]]
        lines.append(f"  A = atoms {v['subset_a']} (masses {masses_a}), B = atoms {v['subset_b']} "
                     f"(masses {masses_b})")
        shown = [(k, val) for k, val in v.items() if isinstance(val, Fraction)
                 and not (k.startswith("continuous") and m.kappa == 0)]
        lines.append("  " + ", ".join(f"{k} = {format_rational(val)}" for k, val in shown))
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK if violation is None else EXIT_FAIL


def _part(lm: LoadedMeasure, part: str):
    if not lm.signed:
        if part not in ("auto", "absolute"):
            raise InvalidInputError(f"--part {part} needs a signed measure")
        return lm.positive, lm.order
    src = lm.source
    if part == "positive":
        pos, _ = hahn_decompose(src)
        return src.positive_part(), [pos[i] for i in sorted(range(len(pos)), key=lambda k: -src.atoms[pos[k]])]
    if part == "negative":
        _, neg = hahn_decompose(src)
        return src.negative_part(), [neg[i] for i in sorted(range(len(neg)), key=lambda k: src.atoms[neg[k]])]
    if part in ("absolute", "auto"):
        return lm.positive, lm.order
    raise InvalidInputError(f"unknown --part {part}")


def cmd_range(args) -> int:
    lm = load_measure(args.measure, args.example)
    if lm.signed and args.part in ("auto", "signed"):
        pts = signed_range(lm.source, limit=args.limit_n, strategy=args.strategy)
        payload = {"measure": lm.echo(), "part": "signed", "points": [format_rational(p) for p in pts],
                   "is_arithmetic_progression": is_arithmetic_progression(pts)}
        text = f"signed range: {len(pts)} points\n" + ", ".join(format_rational(p) for p in pts)
        _emit(args, payload, text)
        return EXIT_OK
    m, _ = _part(lm, args.part)
    rng = measure_range(m, limit=args.limit_n, strategy=args.strategy)
    payload = {"measure": lm.echo(), "part": args.part, "range": rng.to_json(),
               "is_single_interval": rng.is_single_interval}
    if rng.is_point_set:
        payload["is_arithmetic_progression"] = is_arithmetic_progression(rng.points())
    _emit(args, payload, f"range: {rng}")
    return EXIT_OK


def cmd_bullies(args) -> int:
    lm = load_measure(args.measure, args.example)
    m, order = _part(lm, args.part)
    idx = sorted(order[i] for i in bullies(m))
    payload = {"measure": lm.echo(), "part": args.part, "bullies": idx, "no_bullies": is_interval(m),
               "atoms": [format_rational(lm.input_atoms[i]) for i in idx]}
    text = (f"bullies ({args.part}): {idx}\n"
            f"masses: {[format_rational(lm.input_atoms[i]) for i in idx]}\n"
            f"no-bullies criterion: {is_interval(m)}")
    _emit(args, payload, text)
    return EXIT_OK


def cmd_relations(args) -> int:
    lm = load_measure(args.measure, args.example)
    m = lm.positive
    rels = system_relations(m, strategy=args.strategy, limit=args.limit_n)
    if args.oracle:
        if m.n > ORACLE_MAX_N:
            raise ResourceLimitError("--oracle brute force", m.n, ORACLE_MAX_N)
        slow = brute_force_relations(m.atoms, m.kappa)
        if [r.sign_part if isinstance(r, AugmentedRelation) else r for r in rels] != slow:
            raise Inconsistency("relation enumeration differs from the 3^n brute force")
    mapped = [_vector_to_input(lm, r) for r in rels]
    mapped.sort(key=lambda r: tuple(-x for x in (r.sign_part if isinstance(r, AugmentedRelation) else r)))
    basis = relation_basis(mapped, cap=m.n if m.kappa > 0 else m.n - 1)
    payload = {"measure": lm.echo(), "count": len(mapped),
               "relations": [r.to_json() if isinstance(r, AugmentedRelation) else str(r) for r in mapped],
               "basis": basis.to_json()}
    lines = [f"{len(mapped)} relations, rank {basis.rank}"]
    lines += [str(r.to_json()) if isinstance(r, AugmentedRelation) else str(r) for r in mapped[:200]]
    if len(mapped) > 200:
        lines.append(f"... ({len(mapped) - 200} more; use --json for all)")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_example(args) -> int:
    lm = load_measure(None, args.id)
    _emit(args, lm.echo(), json.dumps(lm.echo()))
    return EXIT_OK


def cmd_construct(args) -> int:
    if args.kind == "geometric":
        if args.ratio is None or args.count is None:
            raise InvalidInputError("construct geometric needs --ratio and --count")
        m = leth_geometric(parse_rational(args.ratio, "--ratio"), args.count, parse_rational(args.scale, "--scale"))
        payload = dict(m.to_json(), truncation_depth=args.count)
        _emit(args, payload, json.dumps(payload))
        return EXIT_OK
    if args.masses is None and args.harmonic is None:
        raise InvalidInputError("construct lemma31 needs --masses FILE or --harmonic N")
    if args.masses is not None:
        try:
            obj = json.loads(Path(args.masses).read_text())
        except OSError as err:
            raise InvalidInputError(f"cannot read {args.masses}: {err.strerror}") from None
        except json.JSONDecodeError as err:
            raise InvalidInputError(f"{args.masses}: malformed JSON ({err.msg})") from None
        masses = obj["atoms"] if isinstance(obj, dict) else obj
    else:
        masses = [Fraction(1, k) for k in range(1, args.harmonic + 1)]
    sel = lemma31_blocks(masses, parse_rational(args.target, "--target"))
    flat = sel.flattened()
    flat_bullies = bullies(flat)
    payload = {
        "blocks": [list(b) for b in sel.blocks],
        "block_sums": [format_rational(sel.block_sum(j)) for j in range(len(sel.blocks))],
        "discarded": list(sel.discarded),
        "invariant_violations": sel.audit(),
        "flattened_bullies": flat_bullies,
        "audited_blocks": max(0, len(sel.blocks) - 2),
    }
    lines = [f"E_0 = indices 0..{len(sel.blocks[0]) - 1} (sum > {format_rational(sel.target)})"]
    for j, b in enumerate(sel.blocks[1:], start=1):
        lines.append(f"E_{j}: {len(b)} indices {b[0]}..{b[-1]}, sum {float(sel.block_sum(j)):.6g}")
    lines.append(f"invariant violations: {sel.audit() or 'none'}")
    lines.append(f"bullies of the flattened blocks (positions): {flat_bullies}")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_selftest(args) -> int:
    results = run_selftest()
    payload = {"results": [{"name": n, "pass": ok, "detail": d} for n, ok, d in results]}
    text = "\n".join(f"{'PASS' if ok else 'FAIL'} {n}: {d}" for n, ok, d in results)
    _emit(args, payload, text)
    return EXIT_OK if all(ok for _, ok, _ in results) else EXIT_FAIL


# --- parser --------------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")
    common.add_argument("--out", help="write the report to this file instead of stdout")
    common.add_argument("--strategy", choices=STRATEGIES, default="auto",
                        help=f"enumeration engine (direct scan allowed up to n = {DIRECT_RELATION_MAX_N})")
    common.add_argument("--limit-n", type=int, default=None,
                        help="atom bound for enumerations (default: LEVELSET_MAX_N or 30)")
    common.add_argument("--oracle", action="store_true",
                        help="cross-check against brute force; exit 70 on disagreement")

    def measure_args(p):
        p.add_argument("measure", nargs="?", help="inline JSON, a JSON file, or '-' for stdin")
        p.add_argument("--example", help=f"built-in fixture: {', '.join(EXAMPLE_IDS)}")

    parser = argparse.ArgumentParser(prog="levelset", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="full report and uniqueness certificate")
    measure_args(p)
    p.add_argument("--timing", action="store_true", help="include wall-clock time in the report")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("check", parents=[common], help="check (L) or (O) for a candidate nu")
    measure_args(p)
    p.add_argument("--nu", required=True, help='JSON list ["1","2",...] or {"atoms": [...], "slope": "..."}')
    p.add_argument("--mode", choices=("L", "O"), default="L")
    p.set_defaults(func=cmd_check)

    for name, func, help_ in (("range", cmd_range, "range of the measure"),
                              ("bullies", cmd_bullies, "bully atoms")):
        p = sub.add_parser(name, parents=[common], help=help_)
        measure_args(p)
        p.add_argument("--part", choices=("auto", "signed", "positive", "negative", "absolute"), default="auto")
        p.set_defaults(func=func)

    p = sub.add_parser("relations", parents=[common], help="enumerate the sign-vector relations")
    measure_args(p)
    p.set_defaults(func=cmd_relations)

    p = sub.add_parser("example", parents=[common], help="print a built-in fixture as JSON")
    p.add_argument("id", help=", ".join(EXAMPLE_IDS))
    p.set_defaults(func=cmd_example)

    p = sub.add_parser("construct", parents=[common], help="build a geometric measure or a bully-free block selection")
    p.add_argument("kind", choices=("geometric", "lemma31"))
    p.add_argument("--ratio")
    p.add_argument("--count", type=int)
    p.add_argument("--scale", default="1")
    p.add_argument("--masses", help="JSON file with a non-increasing list of masses")
    p.add_argument("--harmonic", type=int, help="use the masses 1/1, ..., 1/N")
    p.add_argument("--target", default="0")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("selftest", parents=[common], help="run the built-in regression suite")
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ResourceLimitError as err:
        print(f"resource limit: {err}", file=sys.stderr)
        return EXIT_LIMIT
    except InvalidInputError as err:
        print(f"input error: {err}", file=sys.stderr)
        return EXIT_INPUT
    except (Inconsistency, LogicError) as err:
        print(f"internal inconsistency: {err}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except LevelSetError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
