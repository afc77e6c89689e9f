"""Command-line interface: ``admrank <subcommand> ...``.

Exit codes: 0 success, 2 unparsable input, 3 domain error, 4 real rank
only bracketed by an interval (the result is still printed).
"""

import argparse
import json
import sys
from fractions import Fraction

from .exceptions import AdmrankError, ParseError, ZeroFormError
from .forms import parse_form
from .labels import IntervalUndecided, label_set, real_rank_search
from .rank import rank_profile
from .realroots import STANDARD, RealStructure

EXIT_OK, EXIT_PARSE, EXIT_DOMAIN, EXIT_UNDECIDED = 0, 2, 3, 4


class InputError(Exception):
    pass


def read_forms(arg):
    """Forms from a literal ``d:c0,...`` or from ``@path`` (one per line, ``#`` comments)."""
    if arg.startswith("@"):
        try:
            with open(arg[1:]) as fh:
                lines = [ln.strip() for ln in fh]
        except OSError as exc:
            raise InputError(str(exc)) from None
        texts = [ln for ln in lines if ln and not ln.startswith("#")]
    else:
        texts = [arg]
    forms = []
    for t in texts:
        try:
            forms.append(parse_form(t))
        except (ParseError, ZeroFormError) as exc:
            raise InputError(f"{t!r}: {exc}") from None
    if not forms:
        raise InputError("no forms in input")
    return forms


def witness_json(lab, w):
    out = {"a": lab.a, "b": lab.b, "witness": str(w.form)}
    if w.imag is not None:
        out["witness_imag"] = str(w.imag)
    if w.lam is not None:
        out["lambda"] = str(w.lam)
    return out


def profile_json(f, structure, seed=0):
    prof = rank_profile(f)
    ls = label_set(f, structure, seed=seed)
    return {
        "form": str(f),
        "degree": f.degree,
        "border_rank": prof.border_rank,
        "cactus_rank": prof.cactus_rank,
        "complex_rank": prof.complex_rank,
        "admissible_rank": ls.rank,
        "generic_rank": prof.generic_rank,
        "certificate": str(prof.certificate),
        "scheme_label": None if prof.scheme_label is None else str(prof.scheme_label),
        "labels": [witness_json(lab, ls.witnesses[lab]) for lab in ls.sorted_labels()],
        "label_set": ls.key,
        "exact": ls.exact,
        "mode": ls.mode,
        "structure": ls.structure.value,
    }


def realrank_json(f):
    value, witness = real_rank_search(f)
    out = {"form": str(f), "degree": f.degree, "witness": None if witness is None else str(witness)}
    if isinstance(value, IntervalUndecided):
        out.update(real_rank=None, interval={"lo": value.lo, "hi": value.hi}, exact=False)
        return out, True
    out.update(real_rank=value, exact=True)
    return out, False


def _emit(payload, out_path, text=None):
    text = text if text is not None else json.dumps(payload, indent=2) + "\n"
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _single_or_list(items):
    return items[0] if len(items) == 1 else items


def cmd_rank(args):
    structure = RealStructure.parse(args.structure)
    _emit(_single_or_list([profile_json(f, structure, args.seed) for f in read_forms(args.form)]), args.out)
    return EXIT_OK


def cmd_labels(args):
    structure = RealStructure.parse(args.structure)
    results = [profile_json(f, structure, args.seed) for f in read_forms(args.form)]
    for r in results:
        if not r["exact"]:
            print(f"warning: label set of {r['form']} was sampled, not certified complete", file=sys.stderr)
    _emit(_single_or_list(results), args.out)
    return EXIT_OK


def cmd_realrank(args):
    if RealStructure.parse(args.structure) is not STANDARD:
        raise AdmrankError("real rank is defined for the standard real structure only")
    results, undecided = [], False
    for f in read_forms(args.form):
        payload, und = realrank_json(f)
        results.append(payload)
        undecided |= und
    _emit(_single_or_list(results), args.out)
    return EXIT_UNDECIDED if undecided else EXIT_OK


def cmd_sample(args):
    from .regions import sample_labels

    report = sample_labels(args.degree, args.structure, n=args.n, seed=args.seed, coeff_bound=args.bound,
                           threshold=args.threshold)
    _emit(None, args.out, report.to_csv() if args.format == "csv" else report.to_json() + "\n")
    return EXIT_OK


def cmd_boundary(args):
    from .regions import boundary_tracks

    try:
        eps = [Fraction(e) for e in args.eps.split(",")] if args.eps else None
    except ValueError:
        raise InputError(f"bad epsilon list {args.eps!r}") from None
    seq = boundary_tracks(args.r, args.u, args.v, args.w, eps)
    _emit(None, args.out, seq.to_json() + "\n")
    return EXIT_OK


def cmd_partition_svg(args):
    from .svg import partition_svg

    forms = read_forms(args.form)
    svg = partition_svg(forms[0])
    _emit(None, args.out, svg)
    return EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(prog="admrank", description="Admissible rank and labels of real binary forms.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, form=True):
        if form:
            sp.add_argument("form", help="form as d:c0,...,cd or @file with one form per line")
        sp.add_argument("--structure", default="standard", choices=["standard", "fpf"])
        sp.add_argument("--out", default=None, help="write output here instead of stdout")
        sp.add_argument("--seed", type=int, default=0)

    common(sub.add_parser("rank", help="border, cactus, complex and admissible rank"))
    common(sub.add_parser("labels", help="labels of minimal admissible decompositions"))
    common(sub.add_parser("realrank", help="real rank (standard structure)"))

    sp = sub.add_parser("sample", help="Monte Carlo label statistics for random forms")
    sp.add_argument("degree", type=int)
    common(sp, form=False)
    sp.add_argument("--n", type=int, default=1000)
    sp.add_argument("--bound", type=int, default=100)
    sp.add_argument("--threshold", type=float, default=0.01)
    sp.add_argument("--format", choices=["json", "csv"], default="json")

    sp = sub.add_parser("boundary", help="boundary witness sequences for odd degree r")
    sp.add_argument("r", type=int)
    sp.add_argument("--u", type=Fraction, default=Fraction(1))
    sp.add_argument("--v", type=Fraction, default=Fraction(-2))
    sp.add_argument("--w", type=Fraction, default=Fraction(3))
    sp.add_argument("--eps", default=None, help="comma-separated decreasing rationals")
    sp.add_argument("--out", default=None)

    common(sub.add_parser("partition-svg", help="SVG of the pencil label partition"))
    return p


COMMANDS = {
    "rank": cmd_rank,
    "labels": cmd_labels,
    "realrank": cmd_realrank,
    "sample": cmd_sample,
    "boundary": cmd_boundary,
    "partition-svg": cmd_partition_svg,
}


def run(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_PARSE
    try:
        return COMMANDS[args.command](args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (AdmrankError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
