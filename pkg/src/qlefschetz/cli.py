"""
Command-line front end.

Subcommands: verify, compute, obstruct, move, twist, catalog. Fibration
data travels in the JSON interchange format of the serialize module; every
command is deterministic, so identical inputs give byte-identical output.
Exit codes: 0 on success, 1 when a file fails validation, 2 for usage or
parse errors. Indices on the command line (move positions, twist letters,
target objects) are 1-based; the library itself is 0-based.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from .catalog import induced_total_space, milnor_ar, mirror_p2, xab
from .lefschetz import ConsistencyError, LefschetzAlgebra
from .matrix import KClass, LaurentMatrix
from .moves import (
    TwistWord,
    apply_twist_word,
    hurwitz_inverse_move,
    hurwitz_move,
    rescale_object,
    shift_object,
)
from .obstructions import (
    betti_lower_bound,
    kernel_classes,
    self_pairing,
    sphere_test,
)
from .serialize import (
    FileFormatError,
    class_specs_from_obj,
    classes_to_obj,
    dumps_canonical,
    fibration_from_obj,
    fibration_to_obj,
    kclass_from_obj,
    kclass_to_obj,
    matrix_to_obj,
    poly_to_obj,
)


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except ConsistencyError as exc:
        print(f"validation failed: {exc}", file=sys.stderr)
        return 1
    except FileFormatError as exc:
        print(f"bad input: {exc}", file=sys.stderr)
        return 2
    except json.JSONDecodeError as exc:
        print(
            f"parse error at line {exc.lineno}, column {exc.colno}: {exc.msg}",
            file=sys.stderr,
        )
        return 2
    except OSError as exc:
        print(f"cannot read or write: {exc}", file=sys.stderr)
        return 2
    except (IndexError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qlef",
        description="Exact q-deformed intersection calculus for Lefschetz fibrations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--n", type=int, default=None, help="override the file's n")
        p.add_argument(
            "--format", choices=("json", "table"), default="json", help="report style"
        )
        p.add_argument("--output", default=None, help="also write the result file here")

    p = sub.add_parser("verify", help="load a fibration file and validate it")
    p.add_argument("file")
    common(p)
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("compute", help="derive an invariant from a fibration file")
    p.add_argument(
        "what",
        choices=("det", "nullspace", "monodromy", "givental", "classical", "double-cover"),
    )
    p.add_argument("file")
    common(p)
    p.set_defaults(handler=_cmd_compute)

    p = sub.add_parser("obstruct", help="run the Lagrangian sphere obstruction report")
    p.add_argument("file")
    common(p)
    p.set_defaults(handler=_cmd_obstruct)

    p = sub.add_parser("move", help="apply a basis move and write the moved file")
    p.add_argument("file")
    p.add_argument("kind", choices=("hurwitz", "hurwitz-inverse", "rescale", "shift"))
    p.add_argument("--k", type=int, required=True, help="1-based position or object")
    p.add_argument("--amount", type=int, default=1, help="weight shift for rescale")
    common(p)
    p.set_defaults(handler=_cmd_move)

    p = sub.add_parser("twist", help="apply a Dehn twist word to a K-theory class")
    p.add_argument("file")
    p.add_argument("word", help='e.g. "t2 t1^-1 t4", rightmost letter first, 1-based')
    p.add_argument("--target-index", type=int, default=None, help="1-based basis class")
    p.add_argument("--target-file", default=None, help="JSON file with a class vector")
    p.add_argument(
        "--generators-file",
        default=None,
        help="classes file whose generators the twist letters refer to",
    )
    common(p)
    p.set_defaults(handler=_cmd_twist)

    p = sub.add_parser("catalog", help="emit a fibration file from the built-in families")
    cat = p.add_subparsers(dest="family", required=True)

    c = cat.add_parser("milnor", help="type-A sphere chain data")
    c.add_argument("--r", type=int, required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--format", choices=("json", "table"), default="json")
    c.add_argument("--output", default=None)
    c.add_argument("--classes-output", default=None, help="write the sphere classes here")
    c.set_defaults(handler=_cmd_catalog_milnor)

    c = cat.add_parser("xab", help="cyclic band family for coprime 0 < a < b")
    c.add_argument("--a", type=int, required=True)
    c.add_argument("--b", type=int, required=True)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--format", choices=("json", "table"), default="json")
    c.add_argument("--output", default=None)
    c.set_defaults(handler=_cmd_catalog_xab)

    c = cat.add_parser("mirror-p2", help="the mirror of the projective plane")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--format", choices=("json", "table"), default="json")
    c.add_argument("--output", default=None)
    c.set_defaults(handler=_cmd_catalog_mirror)

    c = cat.add_parser("induce", help="induce a total space from fibre classes")
    c.add_argument("--fibre", required=True, help="fibration file of the fibre")
    c.add_argument("--classes", required=True, help="classes file for the new cycles")
    c.add_argument("--n", type=int, required=True, help="dimension of the new total space")
    c.add_argument("--format", choices=("json", "table"), default="json")
    c.add_argument("--output", default=None)
    c.set_defaults(handler=_cmd_catalog_induce)

    return parser


# -- helpers --------------------------------------------------------------


def _load_fibration(path: str, n_override: int | None) -> tuple[LefschetzAlgebra, list[str] | None]:
    with open(path, encoding="utf-8") as handle:
        obj = json.load(handle)
    return fibration_from_obj(obj, n_override)


def _emit(
    args: argparse.Namespace,
    report: dict[str, Any],
    table_lines: list[str],
    artifact: dict[str, Any] | None = None,
) -> int:
    if getattr(args, "format", "json") == "json":
        sys.stdout.write(dumps_canonical(report))
    else:
        sys.stdout.write("\n".join(table_lines) + "\n")
    output = getattr(args, "output", None)
    if output is not None:
        with open(output, "w", encoding="utf-8") as handle:
            handle.write(dumps_canonical(artifact if artifact is not None else report))
    return 0


def _matrix_lines(title: str, m: LaurentMatrix) -> list[str]:
    return [f"{title}:"] + ["  " + line for line in str(m).splitlines()]


def _int_matrix_lines(title: str, rows: list[list[int]]) -> list[str]:
    if not rows:
        return [f"{title}: (empty)"]
    widths = [max(len(str(r[j])) for r in rows) for j in range(len(rows[0]))]
    return [f"{title}:"] + [
        "  [ " + "  ".join(str(x).rjust(w) for x, w in zip(row, widths)) + " ]"
        for row in rows
    ]


# -- commands ------------------------------------------------------------


def _cmd_verify(args: argparse.Namespace) -> int:
    alg, labels = _load_fibration(args.file, args.n)
    report: dict[str, Any] = {
        "consistent": True,
        "n": alg.dim,
        "m": alg.size,
        "seifert": matrix_to_obj(alg.seifert),
        "intersection": matrix_to_obj(alg.intersection),
    }
    if labels is not None:
        report["labels"] = labels
    lines = [
        f"consistent fibration datum: n = {alg.dim}, m = {alg.size}",
        *_matrix_lines("Seifert matrix", alg.seifert),
        *_matrix_lines("intersection matrix", alg.intersection),
    ]
    return _emit(args, report, lines)


def _cmd_compute(args: argparse.Namespace) -> int:
    alg, _ = _load_fibration(args.file, args.n)
    what = args.what
    if what == "det":
        value = alg.intersection.det()
        return _emit(args, {"det": poly_to_obj(value)}, [f"det = {value}"])
    if what == "nullspace":
        basis = alg.intersection.nullspace()
        return _emit(
            args,
            {"nullspace": [kclass_to_obj(v) for v in basis]},
            [f"nullspace rank {len(basis)}"] + [f"  {v}" for v in basis],
        )
    if what == "monodromy":
        n_q = alg.monodromy()
        return _emit(
            args, {"monodromy": matrix_to_obj(n_q)}, _matrix_lines("q-monodromy", n_q)
        )
    if what == "givental":
        g = alg.charpoly_matrix()
        return _emit(
            args,
            {"givental": matrix_to_obj(g)},
            _matrix_lines("constant-Seifert deformation", g),
        )
    if what == "classical":
        seifert1, intersection1, monodromy1 = alg.specialize_classical()
        report = {
            "seifert": seifert1,
            "intersection": intersection1,
            "monodromy": monodromy1,
        }
        lines = (
            _int_matrix_lines("classical Seifert matrix", seifert1)
            + _int_matrix_lines("classical intersection matrix", intersection1)
            + _int_matrix_lines("classical monodromy", monodromy1)
        )
        return _emit(args, report, lines)
    cover, matching = alg.double_cover()
    artifact = fibration_to_obj(cover)
    report = {
        "fibration": artifact,
        "matching_classes": [kclass_to_obj(s) for s in matching],
    }
    lines = _matrix_lines("double cover Seifert matrix", cover.seifert) + [
        "matching classes:"
    ] + [f"  {s}" for s in matching]
    return _emit(args, report, lines, artifact=artifact)


def _cmd_obstruct(args: argparse.Namespace) -> int:
    alg, _ = _load_fibration(args.file, args.n)
    kernel = kernel_classes(alg)
    result = sphere_test(alg)
    generators = [
        {
            "class": kclass_to_obj(h),
            "self_pairing": poly_to_obj(self_pairing(alg, h)),
            "betti_lower_bound": betti_lower_bound(self_pairing(alg, h)),
        }
        for h in kernel
    ]
    report: dict[str, Any] = {
        "kernel_rank": len(kernel),
        "kernel": [kclass_to_obj(h) for h in kernel],
        "generators": generators,
        "verdict": result.verdict.value,
        "branch": result.branch,
        "witness": None if result.witness is None else poly_to_obj(result.witness),
        "reason": result.reason,
    }
    lines = [f"verdict: {result.verdict.value} ({result.branch})"]
    if result.witness is not None:
        lines.append(f"witness: {result.witness}")
    if result.reason is not None:
        lines.append(f"reason: {result.reason}")
    lines.append(f"kernel rank: {len(kernel)}")
    for h in kernel:
        p = self_pairing(alg, h)
        lines.append(f"  generator {h}")
        lines.append(f"    self-pairing {p}")
        lines.append(f"    betti lower bound {betti_lower_bound(p)}")
    return _emit(args, report, lines)


def _cmd_move(args: argparse.Namespace) -> int:
    alg, labels = _load_fibration(args.file, args.n)
    k = args.k - 1
    transition: LaurentMatrix | None = None
    if args.kind == "hurwitz":
        moved, transition = hurwitz_move(alg, k)
    elif args.kind == "hurwitz-inverse":
        moved, transition = hurwitz_inverse_move(alg, k)
    elif args.kind == "rescale":
        moved = rescale_object(alg, k, args.amount)
    else:
        moved = shift_object(alg, k)
    artifact = fibration_to_obj(moved, labels)
    report: dict[str, Any] = {"move": args.kind, "k": args.k, "fibration": artifact}
    lines = [f"applied {args.kind} at position {args.k}"]
    if args.kind == "rescale":
        report["amount"] = args.amount
        lines[0] += f" with weight shift {args.amount}"
    if transition is not None:
        report["transition"] = matrix_to_obj(transition)
        lines += _matrix_lines("transition matrix", transition)
    lines += _matrix_lines("new intersection matrix", moved.intersection)
    return _emit(args, report, lines, artifact=artifact)


def _cmd_twist(args: argparse.Namespace) -> int:
    alg, _ = _load_fibration(args.file, args.n)
    word = TwistWord.parse(args.word)
    generators = [KClass.basis_vector(alg.size, i) for i in range(alg.size)]
    if args.generators_file is not None:
        with open(args.generators_file, encoding="utf-8") as handle:
            parsed, _specs = class_specs_from_obj(json.load(handle))
        if parsed is None:
            raise FileFormatError("classes.generators: missing from generators file")
        generators = parsed
    if (args.target_index is None) == (args.target_file is None):
        raise FileFormatError("twist needs exactly one of --target-index/--target-file")
    if args.target_index is not None:
        if not 1 <= args.target_index <= alg.size:
            raise IndexError(f"target index {args.target_index} out of range")
        target = KClass.basis_vector(alg.size, args.target_index - 1)
    else:
        with open(args.target_file, encoding="utf-8") as handle:
            obj = json.load(handle)
        target = kclass_from_obj(obj["vector"] if isinstance(obj, dict) else obj)
    result = apply_twist_word(alg.dim, alg.seifert, generators, word, target)
    report = {"word": str(word), "class": kclass_to_obj(result)}
    return _emit(args, report, [f"word: {word}", f"class: {result}"])


def _cmd_catalog_milnor(args: argparse.Namespace) -> int:
    data = milnor_ar(args.r, args.n)
    fibre = LefschetzAlgebra.from_seifert(args.n - 1, data.mukai)
    artifact = fibration_to_obj(fibre)
    report = {
        "fibration": artifact,
        "sphere_classes": [kclass_to_obj(s) for s in data.sphere_classes],
    }
    if args.classes_output is not None:
        with open(args.classes_output, "w", encoding="utf-8") as handle:
            handle.write(dumps_canonical(classes_to_obj(list(data.sphere_classes), [])))
    lines = _matrix_lines("Mukai pairing matrix", data.mukai) + ["sphere classes:"] + [
        f"  {s}" for s in data.sphere_classes
    ]
    return _emit(args, report, lines, artifact=artifact)


def _cmd_catalog_xab(args: argparse.Namespace) -> int:
    alg = xab(args.a, args.b, args.n)
    artifact = fibration_to_obj(alg)
    lines = _matrix_lines(
        f"intersection matrix of the ({args.a}, {args.b}) family", alg.intersection
    )
    return _emit(args, artifact, lines, artifact=artifact)


def _cmd_catalog_mirror(args: argparse.Namespace) -> int:
    alg = mirror_p2(args.n)
    artifact = fibration_to_obj(alg)
    lines = _matrix_lines("intersection matrix of the mirror plane", alg.intersection)
    return _emit(args, artifact, lines, artifact=artifact)


def _cmd_catalog_induce(args: argparse.Namespace) -> int:
    with open(args.fibre, encoding="utf-8") as handle:
        fibre, _ = fibration_from_obj(json.load(handle))
    with open(args.classes, encoding="utf-8") as handle:
        generators, raw_specs = class_specs_from_obj(json.load(handle))
    if generators is None:
        generators = [KClass.basis_vector(fibre.size, i) for i in range(fibre.size)]
    resolved: list[KClass] = []
    for spec in raw_specs:
        if isinstance(spec, KClass):
            resolved.append(spec)
        else:
            word_text, seed = spec
            if seed >= len(generators):
                raise IndexError(f"seed {seed + 1} exceeds the generator count")
            resolved.append(
                apply_twist_word(
                    args.n - 1,
                    fibre.seifert,
                    generators,
                    TwistWord.parse(word_text),
                    generators[seed],
                )
            )
    alg = induced_total_space(fibre, args.n, resolved)
    artifact = fibration_to_obj(alg)
    lines = _matrix_lines("induced intersection matrix", alg.intersection)
    return _emit(args, artifact, lines, artifact=artifact)


if __name__ == "__main__":
    raise SystemExit(main())
