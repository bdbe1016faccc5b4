"""Command-line interface.

Verbs: normalize, mul, inv, pow, order, commutes, centralizer, center,
member, classify, verify, ball.  Results go to stdout, diagnostics to
stderr; exit status is 0 on success, 1 on domain errors (bad words, group
mismatches, invalid signatures), 2 on usage errors.  Output is plain text
by default; --json switches to JSON lines, one object per result with the
fixed fields {group, n1, n2, point, extra}.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .centralizers import Subgroup, SubgroupKind, center, centralizer, commutes
from .classify import Kind, Signature, classify
from .elements import GroupElement, GroupId
from .oracle import ball, verify_centralizer
from .words import Alphabet, WordSyntaxError, format_element, parse_element


def _group_id(text: str) -> GroupId:
    try:
        return GroupId[text]
    except KeyError:
        raise argparse.ArgumentTypeError(
            f"unknown group {text!r} (expected G0..G6)"
        ) from None


def _alphabet(text: str) -> Alphabet:
    try:
        return Alphabet(text)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"unknown alphabet {text!r} (expected 'new' or 'original')"
        ) from None


def _alphas(text: str) -> tuple[int, ...]:
    if not text.strip():
        return ()
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected a comma-separated list of integers, got {text!r}"
        ) from None


def _word_options(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--group", required=True, type=_group_id, metavar="GROUP")
    sub.add_argument(
        "--alphabet",
        type=_alphabet,
        choices=list(Alphabet),
        default=Alphabet.NEW,
        metavar="{new,original}",
        help="alphabet for input words (default: new)",
    )
    sub.add_argument("--json", action="store_true", help="emit JSON lines")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="planegroups",
        description="exact computations in the seven reflection-free plane"
        " crystallographic groups",
    )
    subs = parser.add_subparsers(dest="verb", required=True, metavar="VERB")

    p = subs.add_parser("normalize", help="normal form of a word")
    _word_options(p)
    p.add_argument("word")

    p = subs.add_parser("mul", help="product of two words")
    _word_options(p)
    p.add_argument("left")
    p.add_argument("right")

    p = subs.add_parser("inv", help="inverse of a word")
    _word_options(p)
    p.add_argument("word")

    p = subs.add_parser("pow", help="integer power of a word")
    _word_options(p)
    p.add_argument("word")
    p.add_argument("exponent", type=int)

    p = subs.add_parser("order", help="order of an element, or Infinite")
    _word_options(p)
    p.add_argument("word")

    p = subs.add_parser("commutes", help="whether two elements commute")
    _word_options(p)
    p.add_argument("left")
    p.add_argument("right")

    p = subs.add_parser("centralizer", help="centralizer of an element")
    _word_options(p)
    p.add_argument("word")

    p = subs.add_parser("center", help="center of a group")
    p.add_argument("--group", required=True, type=_group_id, metavar="GROUP")
    p.add_argument("--json", action="store_true")

    p = subs.add_parser("member", help="membership in a described subgroup")
    _word_options(p)
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--centralizer-of", metavar="WORD")
    which.add_argument("--center", action="store_true")
    which.add_argument("--lattice", action="store_true")
    p.add_argument("word")

    p = subs.add_parser("classify", help="classify a presentation signature")
    orient = p.add_mutually_exclusive_group(required=True)
    orient.add_argument("--orientable", action="store_true")
    orient.add_argument("--non-orientable", action="store_true")
    p.add_argument("--genus", required=True, type=int)
    p.add_argument("--alphas", type=_alphas, default=())
    p.add_argument("--boundary", type=int, default=0)
    p.add_argument("--json", action="store_true")

    p = subs.add_parser("verify", help="brute-force check of a centralizer")
    _word_options(p)
    p.add_argument("word")
    p.add_argument("--radius", required=True, type=int)

    p = subs.add_parser("ball", help="enumerate a coordinate ball")
    p.add_argument("--group", required=True, type=_group_id, metavar="GROUP")
    p.add_argument("--radius", required=True, type=int)
    p.add_argument("--json", action="store_true")

    return parser


def _json_line(
    group: str | None,
    n1: int | None,
    n2: int | None,
    point: str | None,
    extra: object,
) -> None:
    print(json.dumps({"group": group, "n1": n1, "n2": n2, "point": point, "extra": extra}))


def _emit_element(x: GroupElement, json_mode: bool, extra: object = None) -> None:
    if json_mode:
        _json_line(x.group.name, x.v[0], x.v[1], x.group.point_label(x.w) or "1", extra)
    else:
        print(format_element(x))


def _emit_scalar(group: GroupId, extra: dict, json_mode: bool, text: str) -> None:
    if json_mode:
        _json_line(group.name, None, None, None, extra)
    else:
        print(text)


def _descriptor_text(sub: Subgroup) -> str:
    if sub.kind is SubgroupKind.CYCLIC:
        return f"Cyclic: {format_element(sub.generators[0])}"
    if sub.kind is SubgroupKind.KLEIN_BOTTLE:
        x, y = sub.generators
        return f"KleinBottle: {format_element(x)}, {format_element(y)}"
    return sub.kind.value


def _emit_descriptor(sub: Subgroup, json_mode: bool) -> None:
    if not json_mode:
        print(_descriptor_text(sub))
        return
    if not sub.generators:
        _json_line(sub.group.name, None, None, None, {"variant": sub.kind.value})
        return
    for i, gen in enumerate(sub.generators):
        _emit_element(gen, True, {"variant": sub.kind.value, "generator_index": i})


def _run(args: argparse.Namespace) -> int:
    verb = args.verb

    if verb == "classify":
        sig = Signature(
            orientable=args.orientable,
            genus=args.genus,
            cone_orders=args.alphas,
            boundary=args.boundary,
        )
        result = classify(sig)
        if args.json:
            extra = {
                "kind": result.kind.value,
                "finite_name": str(result.finite_name) if result.finite_name else None,
                "euclidean_group": result.euclidean_group.name
                if result.euclidean_group
                else None,
                "chi_factor": str(result.chi_factor)
                if result.chi_factor is not None
                else None,
            }
            _json_line(None, None, None, None, extra)
        else:
            print(result.describe())
        return 0

    if verb == "center":
        _emit_descriptor(center(args.group), args.json)
        return 0

    if verb == "ball":
        for x in ball(args.group, args.radius):
            _emit_element(x, args.json)
        return 0

    word = parse_element(args.word, args.group, args.alphabet) if hasattr(args, "word") else None

    if verb == "normalize":
        _emit_element(word, args.json)
    elif verb == "mul":
        left = parse_element(args.left, args.group, args.alphabet)
        right = parse_element(args.right, args.group, args.alphabet)
        _emit_element(left * right, args.json)
    elif verb == "inv":
        _emit_element(word.inverse(), args.json)
    elif verb == "pow":
        _emit_element(word ** args.exponent, args.json)
    elif verb == "order":
        k = word.order()
        text = "Infinite" if k is None else str(k)
        _emit_scalar(args.group, {"order": k if k is not None else "Infinite"}, args.json, text)
    elif verb == "commutes":
        left = parse_element(args.left, args.group, args.alphabet)
        right = parse_element(args.right, args.group, args.alphabet)
        result = commutes(left, right)
        _emit_scalar(args.group, {"commutes": result}, args.json, "true" if result else "false")
    elif verb == "centralizer":
        _emit_descriptor(centralizer(word), args.json)
    elif verb == "member":
        if args.centralizer_of is not None:
            sub = centralizer(parse_element(args.centralizer_of, args.group, args.alphabet))
        elif args.center:
            sub = center(args.group)
        else:
            sub = Subgroup.lattice(args.group)
        result = sub.contains(word)
        _emit_scalar(args.group, {"member": result}, args.json, "true" if result else "false")
    elif verb == "verify":
        if args.radius < 0:
            raise ValueError("radius must be nonnegative")
        report = verify_centralizer(word, args.radius)
        if args.json:
            _emit_element(
                report.subject,
                True,
                {
                    "agree": report.agree,
                    "radius": report.box_radius,
                    "witness_count": len(report.witnesses),
                },
            )
            for witness in report.witnesses:
                _emit_element(witness, True, {"role": "witness"})
        else:
            flag = "true" if report.agree else "false"
            print(
                f"group={report.group.name} subject={format_element(report.subject)}"
                f" radius={report.box_radius} agree={flag}"
            )
            for witness in report.witnesses:
                print(f"witness: {format_element(witness)}")
    else:  # mul/inv/... covered above; defensive
        raise ValueError(f"unknown verb {verb!r}")
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _run(args)
    except (WordSyntaxError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
