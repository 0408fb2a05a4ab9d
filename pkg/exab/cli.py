"""Command-line interface for exab."""

import argparse
import json
import logging
import sys
from enum import IntEnum
from pathlib import Path
from typing import Any, List, Optional, Tuple

from pydantic import ValidationError

from .arrangement import (
    Arrangement,
    check_pullback,
    covectors,
    face_poset,
    flats_lattice,
    supp_fibers,
)
from .checks import SUITES, CheckContext, run_checks
from .config import Settings
from .errors import ExabError, LabelingError, RankGuardError
from .extab import (
    cd_index,
    extab_by_chains,
    extab_by_labeling,
    num_from_extab,
    num_poly,
)
from .models import (
    ArrangementFile,
    ComputeReport,
    FibersReport,
    PolyModel,
    PosetFile,
    VerifyReport,
    YPolyModel,
    YTPolyModel,
)
from .ncpoly import eval_y, iota
from .poset import GradedPoset, chains_in, from_file, poincare, to_file
from .rlabel import CoverLabeling, min_atom_labeling

logger = logging.getLogger(__name__)

COMPUTE_OPS = ["poincare", "ab", "extab", "pullback", "num", "cd", "iota-extab"]
ARRANGEMENT_OPS = ["flats", "faces", "check-pullback", "fibers"]
LABELING_SOURCES = ["file", "min-atom", "none"]


class ExitCode(IntEnum):
    OK = 0
    FAIL = 1
    INPUT_ERROR = 2
    LABELING_ERROR = 3


def _read_json(path: str) -> Any:
    with Path(path).open(encoding="utf-8") as handle:
        return json.load(handle)


def load_poset(path: str) -> Tuple[GradedPoset, PosetFile]:
    document = PosetFile.model_validate(_read_json(path))
    return from_file(document), document


def load_arrangement(path: str) -> Arrangement:
    return Arrangement.from_file(ArrangementFile.model_validate(_read_json(path)))


def _settings(args: Any) -> Settings:
    return getattr(args, "settings", None) or Settings.from_env()


def _guard_rank(rank: int, args: Any) -> None:
    settings = _settings(args)
    if rank > settings.max_rank and not args.force:
        raise RankGuardError(rank, settings.max_rank)


def resolve_labeling(
    P: GradedPoset, document: PosetFile, source: str
) -> Optional[CoverLabeling]:
    """Labeling from the file (None when it has no labels), the minimal-atom
    construction, or none."""
    if source == "none":
        return None
    if source == "min-atom":
        labeling, verdict = min_atom_labeling(P)
        if not verdict.ok:
            logger.warning(
                "Minimal-atom labeling is not an R-labeling on [%s, %s]",
                verdict.lower,
                verdict.upper,
            )
        return labeling
    if document.labels is None:
        logger.debug("No labels in file, using the chain route")
        return None
    return CoverLabeling.from_file_labels(P, document.labels)


def _evaluate(
    op: str, P: GradedPoset, labeling: Optional[CoverLabeling]
) -> Tuple[str, Any]:
    if op == "poincare":
        p = poincare(P)
        return str(p), YPolyModel.from_poly(p)
    if op == "num":
        q = num_poly(P) if labeling is None else num_from_extab(P, labeling)
        return str(q), YTPolyModel.from_poly(q)
    if op == "cd":
        if labeling is None:
            raise LabelingError("The cd operation needs a labeling")
        cd = cd_index(P, labeling)
        return str(cd), PolyModel.from_cd(cd)
    ex = extab_by_chains(P) if labeling is None else extab_by_labeling(P, labeling)
    if op == "ab":
        result = eval_y(ex, 0)
    elif op == "pullback":
        result = eval_y(ex, 1)
    elif op == "iota-extab":
        result = iota(ex)
    else:
        result = ex
    return str(result), PolyModel.from_ab(result)


def compute(args: Any) -> int:
    """Compute one invariant of a poset."""
    P, document = load_poset(args.input)
    _guard_rank(P.n, args)
    labeling = resolve_labeling(P, document, args.labeling)
    text, value = _evaluate(args.op, P, labeling)
    if args.format == "json":
        route = "none" if labeling is None else args.labeling
        report = ComputeReport(op=args.op, route=route, text=text, value=value)
        print(report.model_dump_json())
    else:
        print(text)
    return ExitCode.OK


def _print_poset_file(document: PosetFile) -> None:
    print(document.model_dump_json(indent=2, exclude_none=True))


def arrangement(args: Any) -> int:
    """Lattice of flats, face poset and the pullback checks of an arrangement."""
    A = load_arrangement(args.input)
    _guard_rank(A.rank(range(A.m)), args)
    if args.op == "flats":
        lattice = flats_lattice(A)
        labeling, verdict = min_atom_labeling(lattice.poset, lattice.atom_order)
        labels = labeling.to_file_labels() if verdict.ok else None
        _print_poset_file(to_file(lattice.poset, labels))
        return ExitCode.OK
    if args.op == "faces":
        _print_poset_file(to_file(face_poset(A)))
        return ExitCode.OK
    if args.op == "check-pullback":
        check = check_pullback(A)
        if args.format == "json":
            print(check.model_dump_json())
        else:
            print(f"Psi(faces) = {check.face_side}")
            print(f"a * Psi_pull(flats) = {check.flats_side}")
            print("PASS" if check.ok else "FAIL")
        return ExitCode.OK if check.ok else ExitCode.FAIL

    lattice = flats_lattice(A)
    faces = covectors(A)
    report = FibersReport(
        fibers=[supp_fibers(A, chain, lattice, faces) for chain in chains_in(lattice.poset)]
    )
    if args.format == "json":
        print(report.model_dump_json())
    else:
        for fiber in report.fibers:
            status = "PASS" if fiber.ok else "FAIL"
            chain = ", ".join(fiber.chain)
            print(f"{status} [{chain}]: {fiber.faces} faces, Poin_C(1) = {fiber.expected}")
    return ExitCode.OK if report.ok else ExitCode.FAIL


def verify(args: Any) -> int:
    """Run verification suites on a poset."""
    P, document = load_poset(args.input)
    _guard_rank(P.n, args)
    labeling = resolve_labeling(P, document, args.labeling)
    ctx = CheckContext(poset=P, labeling=labeling, settings=_settings(args))
    report = VerifyReport(results=run_checks(ctx, args.checks))
    if args.format == "json":
        print(report.model_dump_json())
    else:
        for result in report.results:
            print(result.render())
    return ExitCode.OK if report.ok else ExitCode.FAIL


def run(args: argparse.Namespace) -> int:
    """Run a subcommand, turning exab errors into exit codes."""
    try:
        return int(args.func(args))
    except LabelingError as err:
        print(f"error: {err}", file=sys.stderr)
        return ExitCode.LABELING_ERROR
    except (ExabError, ValidationError, json.JSONDecodeError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return ExitCode.INPUT_ERROR


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description="exab - Poincare-extended ab-index of graded posets"
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="Debug logging")
    subparsers = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("input", help="Path to the JSON input file")
    common.add_argument("--format", choices=["text", "json"], default="text")
    common.add_argument(
        "--force", action="store_true", help="Ignore the EXAB_MAX_RANK guard"
    )

    # Compute command
    compute_parser = subparsers.add_parser(
        "compute", parents=[common], help="Compute an invariant of a poset file"
    )
    compute_parser.add_argument("--op", choices=COMPUTE_OPS, default="extab")
    compute_parser.add_argument(
        "--labeling", choices=LABELING_SOURCES, default="file", help="Labeling source"
    )
    compute_parser.set_defaults(func=compute)

    # Arrangement command
    arrangement_parser = subparsers.add_parser(
        "arrangement", parents=[common], help="Work on an arrangement file"
    )
    arrangement_parser.add_argument("--op", choices=ARRANGEMENT_OPS, default="flats")
    arrangement_parser.set_defaults(func=arrangement)

    # Verify command
    verify_parser = subparsers.add_parser(
        "verify", parents=[common], help="Run verification suites on a poset file"
    )
    verify_parser.add_argument(
        "--checks",
        nargs="+",
        choices=["all"] + list(SUITES),
        default=["all"],
    )
    verify_parser.add_argument(
        "--labeling", choices=LABELING_SOURCES, default="file", help="Labeling source"
    )
    verify_parser.set_defaults(func=verify)
    return parser


def main(argv: Optional[List[str]] = None) -> None:
    """Main CLI entry point."""
    args = build_parser().parse_args(argv)
    try:
        settings = Settings.from_env()
    except ValidationError as err:
        print(f"error: {err}", file=sys.stderr)
        sys.exit(ExitCode.INPUT_ERROR)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else settings.log_level,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    args.settings = settings
    sys.exit(run(args))


if __name__ == "__main__":
    main()
