"""Command-line interface: ``sturmian {gen,morphism,singular,decompose,table,verify}``."""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from .cf import SturmCF, classify, parse_rho, surd_value
from .errors import CapExceeded, DirectiveTooShort, ParseError, SturmianError
from .generator import (
    DirectiveSequence,
    build_sigma,
    build_sigma_hat,
    characteristic_word,
    complement_word,
    mechanical_word,
    standard_words,
)
from .morphism import (
    BinaryMorphism,
    apply,
    fixed_point,
    generates_infinite_word,
    power,
    right_conjugate,
)
from .singular import (
    adjoining_singular,
    conjugate_decomposition,
    conjugate_decomposition_hat,
    singular_word,
)
from .verify import SUITES, run_suites
from .words import parse_word, show

DEFAULT_CAP = 10**6


def output_cap() -> int:
    raw = os.environ.get("STURMIAN_CAP")
    if raw is None:
        return DEFAULT_CAP
    try:
        return int(raw)
    except ValueError:
        raise ParseError(f"STURMIAN_CAP must be an integer, got {raw!r}") from None


def _check_cap(n: int, what: str) -> None:
    cap = output_cap()
    if n > cap:
        raise CapExceeded(f"{what} of {n} letters exceeds the cap of {cap} (set STURMIAN_CAP)")


def _cf(args) -> SturmCF:
    if not getattr(args, "cf", None):
        raise ParseError("--cf is required")
    return SturmCF.parse(args.cf)


def _parse_directive(text: str) -> DirectiveSequence:
    try:
        entries = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise ParseError(f"bad directive list {text!r}") from None
    try:
        return DirectiveSequence.from_list(entries)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def _emit(args, text_lines: list[str], payload) -> None:
    if args.format == "json":
        print(json.dumps(payload, ensure_ascii=False))
    else:
        for line in text_lines:
            print(line)


# ---------------------------------------------------------------------------
# commands


def cmd_gen(args) -> int:
    _check_cap(args.length, "requested length")
    machine = args.format == "json"
    if args.mechanical:
        cf = _cf(args)
        rho = parse_rho(args.rho) if args.rho else 0
        variant = "ceiling" if args.ceiling else "floor"
        word = mechanical_word(surd_value(cf), rho, variant).prefix(args.length)
        source = str(cf)
    elif args.directive:
        dirseq = _parse_directive(args.directive)
        # the longest standard word the list determines; d_1 = 0 is allowed here
        s = standard_words(dirseq, len(dirseq))[-1]
        if len(s) < args.length:
            raise DirectiveTooShort(f"s_{len(dirseq)} has only {len(s)} letters")
        word = s[: args.length]
        source = args.directive
    else:
        cf = _cf(args)
        stream = complement_word(cf) if args.complement else characteristic_word(cf)
        word = stream.prefix(args.length)
        source = str(cf)
    _emit(args, [show(word, machine)], {"source": source, "length": args.length, "word": word})
    return 0


def cmd_morphism(args) -> int:
    machine = args.format == "json"
    if args.cf:
        cf = _cf(args)
        psi = build_sigma_hat(cf) if args.hat else build_sigma(cf)
    elif args.cert is not None:
        psi = BinaryMorphism.from_certificate(args.cert)
    elif args.morphism:
        psi = BinaryMorphism.parse(args.morphism)
    else:
        raise ParseError("give one of --cf, --cert, --morphism")
    if args.power is not None:
        psi = power(psi, args.power)
    if args.conjugate is not None:
        psi = right_conjugate(psi, args.conjugate)
    _check_cap(len(psi.image_a) + len(psi.image_b), "morphism images")
    payload = {
        "morphism": str(psi),
        "image_a": psi.image_a,
        "image_b": psi.image_b,
        "certificate": psi.certificate,
    }
    lines = [str(psi)]
    if psi.certificate is not None:
        lines.append(f"certificate: {psi.certificate or 'ε'}")
        gen = generates_infinite_word(psi)
        lines.append(f"generates an infinite word: {'yes' if gen else 'no'}")
        payload["generates"] = gen
    if args.apply is not None:
        image = apply(psi, parse_word(args.apply))
        _check_cap(len(image), "image")
        lines.append(f"image: {show(image, machine)}")
        payload["image"] = image
    if args.fixed_point:
        _check_cap(args.length, "requested length")
        word = fixed_point(psi, args.fixed_point).prefix(args.length)
        lines.append(f"fixed point: {word}")
        payload["fixed_point"] = word
    _emit(args, lines, payload)
    return 0


def cmd_singular(args) -> int:
    cf = _cf(args)
    machine = args.format == "json"
    rows = []
    for n in range(-2, args.depth + 1):
        s_n = standard_words(cf, n)[-1] if n >= -1 else ""
        rows.append({"n": n, "s": s_n, "w": singular_word(cf, n), "v": adjoining_singular(cf, n)})
    _check_cap(sum(len(r["s"]) + len(r["w"]) + len(r["v"]) for r in rows), "output")
    lines = [
        f"n={r['n']}: s={show(r['s'], machine)} w={show(r['w'], machine)} v={show(r['v'], machine)}"
        for r in rows
    ]
    _emit(args, lines, {"alpha": str(cf), "rows": rows})
    return 0


def _verify_decomposition(dec, max_len: Optional[int]) -> int:
    total = sum(len(f.word) for f in dec.factors)
    n = total if max_len is None else min(total, max_len)
    got = dec.stream().prefix(n)
    want = dec.target().prefix(n)
    if got != want:
        raise SturmianError(f"decomposition of shift k={dec.k} disagrees with the word itself")
    return n


def cmd_decompose(args) -> int:
    cf = _cf(args)
    build = conjugate_decomposition_hat if args.hat else conjugate_decomposition
    dec = build(cf, args.k, args.depth)
    _check_cap(sum(len(f.word) for f in dec.factors), "factor output")
    verified = _verify_decomposition(dec, args.max_len)
    machine = args.format == "json"
    lines = [f"k={dec.k} m={dec.m} p={dec.p} conj_index={dec.conj_index}"]
    lines += [f"{f.label(args.unicode)} = {show(f.word, machine)}" for f in dec.factors]
    lines.append(f"verified: {verified} letters")
    payload = {
        "alpha": args.cf,
        "k": dec.k,
        "m": dec.m,
        "p": dec.p,
        "conj_index": dec.conj_index,
        "factors": [{"j": f.j, "word": f.word} for f in dec.factors],
        "verified_prefix_len": verified,
    }
    _emit(args, lines, payload)
    return 0


def cmd_table(args) -> int:
    cf = _cf(args)
    base = characteristic_word(cf)
    prefix = base.prefix(args.k_max)
    lines, rows = [], []
    for k in range(args.k_max + 1):
        dec = conjugate_decomposition(cf, k, args.depth)
        verified = _verify_decomposition(dec, args.max_len)
        removed = prefix[:k]
        head = f"({removed})^{{-1}}c = " if k else "c = "
        labels = " ".join(f.label(args.unicode) for f in dec.factors)
        lines.append(f"k={k:<3} m={dec.m:<2} t={dec.conj_index:<3} {head}{labels} ...")
        rows.append(
            {
                "k": k,
                "m": dec.m,
                "p": dec.p,
                "conj_index": dec.conj_index,
                "removed": removed,
                "factors": [{"j": f.j, "word": f.word} for f in dec.factors],
                "verified_prefix_len": verified,
            }
        )
    _emit(args, lines, {"alpha": args.cf, "rows": rows})
    return 0


def cmd_verify(args) -> int:
    cf = _cf(args)
    _check_cap(args.max_len, "verification length")
    if args.suite == "all":
        names = list(SUITES)
    else:
        names = [s.strip() for s in args.suite.split(",")]
        unknown = [s for s in names if s not in SUITES]
        if unknown:
            raise ParseError(f"unknown suite(s) {', '.join(unknown)}; choose from {', '.join(SUITES)}")
    results = run_suites(cf, names, args.max_len)
    failures = sum(r.failures for r in results)
    lines = [r.summary() for r in results]
    lines.append(f"total: {sum(r.checked for r in results)} checks, {failures} failures")
    payload = {
        "alpha": str(cf),
        "type": classify(cf),
        "suites": [
            {
                "name": r.name,
                "checked": r.checked,
                "failures": r.failures,
                "first_failure": r.first_failure,
                "skipped": r.skipped,
            }
            for r in results
        ],
    }
    _emit(args, lines, payload)
    return 1 if failures else 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sturmian",
        description="Characteristic Sturmian words, standard morphisms and "
        "singular decompositions of their conjugates.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, cf_required=False):
        p.add_argument("--cf", required=cf_required, help="continued fraction, e.g. '0;2,(3)'")
        p.add_argument("--format", choices=("text", "json"), default="text")
        return p

    p = common(sub.add_parser("gen", help="prefix of c_α, a standard word, or a mechanical word"))
    p.add_argument("--directive", help="finite directive sequence d1,d2,...")
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--mechanical", action="store_true", help="use the floor/ceiling definition")
    p.add_argument("--ceiling", action="store_true", help="ceiling variant of --mechanical")
    p.add_argument("--rho", help="rational intercept p/q for --mechanical")
    p.add_argument("--complement", action="store_true", help="generate c_{1-α} instead")
    p.set_defaults(func=cmd_gen)

    p = common(sub.add_parser("morphism", help="σ, σ̂ or a given morphism"))
    p.add_argument("--hat", action="store_true", help="with --cf: σ̂ instead of σ")
    p.add_argument("--cert", help="certificate over {E,p}")
    p.add_argument("--morphism", help="images 'a->W1;b->W2'")
    p.add_argument("--power", type=int)
    p.add_argument("--conjugate", type=int, help="right conjugate index k")
    p.add_argument("--apply", help="word to map")
    p.add_argument("--fixed-point", dest="fixed_point", choices=("a", "b"))
    p.add_argument("--length", type=int, default=50)
    p.set_defaults(func=cmd_morphism)

    p = common(sub.add_parser("singular", help="s_n, w_n and v_n"), cf_required=True)
    p.add_argument("--depth", type=int, default=4)
    p.set_defaults(func=cmd_singular)

    for name, func, helptext in (
        ("decompose", cmd_decompose, "decompose the k-th conjugate of c_α"),
        ("table", cmd_table, "conjugate table for k = 0..k_max"),
    ):
        p = common(sub.add_parser(name, help=helptext), cf_required=True)
        p.add_argument("--depth", type=int, default=4)
        p.add_argument("--unicode", action="store_true")
        if name == "decompose":
            p.add_argument("--k", type=int, required=True)
            p.add_argument("--hat", action="store_true", help="decompose c_{1-α} instead")
            p.add_argument("--max-len", dest="max_len", type=int, default=None)
        else:
            p.add_argument("--k_max", "--k-max", dest="k_max", type=int, default=11)
            p.add_argument("--max-len", dest="max_len", type=int, default=1000)
        p.set_defaults(func=func)

    p = common(sub.add_parser("verify", help="run verification suites"), cf_required=True)
    p.add_argument("--suite", default="all", help=f"all, or comma-separated from: {', '.join(SUITES)}")
    p.add_argument("--max-len", dest="max_len", type=int, default=2000)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SturmianError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
