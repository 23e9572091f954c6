"""
Γ-semigroup command-line application.

Commands: validate, classify, check, verify, generate, catalog, cache, artifacts, hom.
Exit codes: 0 success, 1 false verdict / violation / counterexample,
2 input or usage error.
"""

import argparse
import json
import logging
import sys
from dataclasses import replace
from pathlib import Path
from typing import List, Optional, Sequence, TextIO

from cli.file_formats import (
    emit_instance,
    emit_witness,
    parse_subset,
    read_fuzzy,
    read_hom,
    read_instance,
)
from tools.core_algebra import GammaSemigroup, IdealKind, classify, find_crisp_violation, validate
from tools.errors import GammaAlgebraError
from tools.fuzzy_engine import GradeGrid, find_fuzzy_violation
from tools.instance_factory import (
    CorpusInstance,
    enumerate_corpus,
    left_zero,
    modular,
    named,
    right_zero,
)
from tools.morphisms import validate_hom
from util.artifact_service import FileArtifactService
from util.result_cache import get_cache
from util.settings import get_settings
from verifier.catalog import get_catalog
from verifier.orchestrator import verify_corpus

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_ERROR = 2


def _validated(path: str) -> GammaSemigroup:
    """Read an instance file and refuse non-associative tables."""
    structure = read_instance(path)
    result = validate(structure.table)
    if not result.ok:
        raise GammaAlgebraError(f"{path}: table is not associative ({len(result.violations)} violations); run validate")
    return result.value


# ===== validate =====
def cmd_validate(args, out: TextIO) -> int:
    structure = read_instance(args.instance)
    result = validate(structure.table)
    if result.ok:
        print(f"✅ associative Γ-semigroup (n={structure.n}, m={structure.m})", file=out)
        return EXIT_OK
    for violation in result.violations:
        print(violation.to_line(), file=out)
    print(f"❌ {len(result.violations)} associativity violations", file=out)
    return EXIT_FALSE


# ===== classify =====
def cmd_classify(args, out: TextIO) -> int:
    profile = classify(_validated(args.instance))
    if args.json:
        print(json.dumps(profile.to_dict(), indent=2), file=out)
        return EXIT_OK
    for name, value in profile.flags().items():
        print(f"{name}: {str(value).lower()}", file=out)
    print(f"idempotents: {profile.idempotents}", file=out)
    return EXIT_OK


# ===== check =====
def cmd_check(args, out: TextIO) -> int:
    kind = IdealKind.parse(args.kind)
    structure = _validated(args.instance)
    if args.subset is not None:
        subset = parse_subset(args.subset, structure)
        missing = find_crisp_violation(kind, subset)
        if missing is None:
            print("true", file=out)
            return EXIT_OK
        print(f"false: element {missing} is required in {subset} but missing", file=out)
        return EXIT_FALSE

    mu = read_fuzzy(args.fuzzy, structure)
    violation = find_fuzzy_violation(kind, mu)
    if violation is None:
        print("true", file=out)
        return EXIT_OK
    print(f"false: violated at ({', '.join(str(v) for v in violation)})", file=out)
    return EXIT_FALSE


# ===== verify =====
def _write_witnesses(documents: List[dict], directory: Path) -> List[Path]:
    directory.mkdir(parents=True, exist_ok=True)
    paths = []
    for document in documents:
        path = directory / f"witness_{document['theorem']}_{document['instance']}.txt"
        path.write_text(emit_witness(document), encoding="utf-8")
        paths.append(path)
    return paths


def cmd_verify(args, out: TextIO) -> int:
    settings = get_settings()
    overrides = {}
    if args.workers is not None:
        overrides["workers"] = args.workers
    if args.cache_dir is not None:
        overrides["cache_dir"] = args.cache_dir
    if args.seed is not None:
        overrides["seed"] = args.seed
    settings = replace(settings, **overrides)

    corpus: List[CorpusInstance] = enumerate_corpus(
        args.n,
        args.m,
        extra=() if args.no_extra else ((3, 1),),
        unique=args.unique,
        budget=settings.exhaustive_budget,
        seed=settings.seed,
    )
    grid = GradeGrid.uniform(args.grid if args.grid is not None else settings.grid_levels)
    theorem_ids = args.theorems.split(",") if args.theorems else None

    report = verify_corpus(corpus, grid, theorem_ids, settings, complete=args.complete)
    print(report.render_text(), file=out, end="")

    documents = report.witness_documents()
    if args.json:
        json_path = Path(args.json)
        json_path.parent.mkdir(parents=True, exist_ok=True)
        json_path.write_text(report.to_json(), encoding="utf-8")
        print(f"📄 JSON report: {json_path}", file=out)
        if documents:
            for path in _write_witnesses(documents, json_path.parent):
                print(f"🧾 witness: {path}", file=out)

    if args.out:
        artifacts = FileArtifactService(base_dir=args.out)
        metadata = {"instances": len(report.corpus), "checks": len(report.results), "ok": report.ok}
        artifacts.save_artifact("report_verify.md", report.render_text(), metadata)
        artifacts.save_artifact("report_verify.json", report.to_json(), metadata)
        for document in documents:
            artifacts.save_artifact(
                f"witness_{document['theorem']}_{document['instance']}.txt",
                emit_witness(document),
                {"theorem": document["theorem"], "instance": document["instance"]},
            )
        print(f"📁 artifacts: {artifacts.base_dir}", file=out)

    return EXIT_OK if report.ok else EXIT_FALSE


# ===== generate =====
def cmd_generate(args, out: TextIO) -> int:
    if args.named:
        instances = [CorpusInstance(args.named.upper(), named(args.named))]
    elif args.left_zero:
        n, m = args.left_zero
        instances = [CorpusInstance(f"left_zero-n{n}m{m}", left_zero(n, m))]
    elif args.right_zero:
        n, m = args.right_zero
        instances = [CorpusInstance(f"right_zero-n{n}m{m}", right_zero(n, m))]
    elif args.modular:
        n, gammas = int(args.modular[0]), [int(g) for g in args.modular[1].split(",")]
        instances = [CorpusInstance(f"modular-n{n}-{'_'.join(str(g) for g in gammas)}", modular(n, gammas))]
    else:
        n, m = args.enumerate
        instances = enumerate_corpus(n, m, extra=(), unique=args.unique)
        instances = [item for item in instances if item.structure.n == n and item.structure.m == m]

    if args.out:
        artifacts = FileArtifactService(base_dir=args.out)
        for item in instances:
            artifacts.save_artifact(f"instance_{item.id}.txt", emit_instance(item.structure), {"n": item.structure.n, "m": item.structure.m})
        print(f"✅ wrote {len(instances)} instance files under {artifacts.base_dir}", file=out)
        return EXIT_OK

    for index, item in enumerate(instances):
        if index:
            print(file=out)
        print(emit_instance(item.structure, (item.id,)), file=out, end="")
    return EXIT_OK


# ===== catalog =====
def cmd_catalog(args, out: TextIO) -> int:
    for entry in get_catalog():
        print(f"{entry.statement()}\n", file=out)
    return EXIT_OK


# ===== cache =====
def cmd_cache(args, out: TextIO) -> int:
    settings = get_settings()
    cache_dir = args.cache_dir or settings.cache_dir
    if not cache_dir:
        raise GammaAlgebraError("no cache directory: pass --cache-dir or set GAMMA_CACHE_DIR")
    cache = get_cache(cache_dir, settings.cache_ttl_seconds)
    if args.all:
        deleted = cache.clear_all()
        print(f"🧹 removed {deleted} cached reports from {cache.cache_dir}", file=out)
    else:
        deleted = cache.clear_expired()
        print(f"🧹 removed {deleted} expired cached reports from {cache.cache_dir}", file=out)
    return EXIT_OK


# ===== artifacts =====
def cmd_artifacts(args, out: TextIO) -> int:
    if not Path(args.directory).is_dir():
        raise FileNotFoundError(f"artifact directory not found: {args.directory}")
    artifacts = FileArtifactService(base_dir=args.directory)
    if args.show:
        content = artifacts.load_artifact(args.show)
        if content is None:
            raise FileNotFoundError(f"no artifact named {args.show} under {args.directory}")
        print(content, file=out, end="")
        return EXIT_OK
    for key in artifacts.list_artifact_keys():
        metadata = artifacts.get_artifact_metadata(Path(key).name) or {}
        custom = ", ".join(f"{k}={v}" for k, v in metadata.get("custom", {}).items())
        print(f"{key}  {metadata.get('created_at', '-')}  {custom}".rstrip(), file=out)
    return EXIT_OK


# ===== hom =====
def cmd_hom(args, out: TextIO) -> int:
    source = _validated(args.source)
    target = _validated(args.target)
    result = validate_hom(source, target, read_hom(args.map))
    if result.ok:
        f = result.value
        print(
            f"✅ homomorphism (injective: {str(f.injective).lower()}, surjective: {str(f.surjective).lower()})",
            file=out,
        )
        return EXIT_OK
    for x, gamma, y in result.violations:
        print(f"{x} {gamma} {y}", file=out)
    print(f"❌ {len(result.violations)} homomorphism violations", file=out)
    return EXIT_FALSE


def _pair(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be ≥ 1")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gamma-fuzzy", description="Finite Γ-semigroups and their fuzzy ideals")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v info, -vv debug logging")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a table for associativity")
    p.add_argument("instance")
    p.set_defaults(handler=cmd_validate)

    p = sub.add_parser("classify", help="structural properties of an instance")
    p.add_argument("instance")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=cmd_classify)

    p = sub.add_parser("check", help="test a subset or fuzzy subset against an ideal kind")
    p.add_argument("instance")
    p.add_argument("--kind", required=True, help=", ".join(k.value for k in IdealKind))
    target = p.add_mutually_exclusive_group(required=True)
    target.add_argument("--subset", help="comma-separated element indices, e.g. 0,2")
    target.add_argument("--fuzzy", help="fuzzy subset file")
    p.set_defaults(handler=cmd_check)

    p = sub.add_parser("verify", help="run the theorem catalog over an enumerated corpus")
    p.add_argument("--n", type=_pair, default=2, help="largest |S| enumerated")
    p.add_argument("--m", type=_pair, default=2, help="largest |Γ| enumerated")
    p.add_argument("--no-extra", action="store_true", help="skip the additional n=3, m=1 shape")
    p.add_argument("--grid", type=int, help="grade levels (default: settings grid_levels)")
    p.add_argument("--theorems", help="comma-separated theorem ids")
    p.add_argument("--seed", type=int)
    p.add_argument("--json", help="write the machine-readable report here")
    p.add_argument("--complete", action="store_true", help="use n+1 grade levels per instance")
    p.add_argument("--unique", action="store_true", help="one instance per isomorphism class")
    p.add_argument("--workers", type=_pair)
    p.add_argument("--cache-dir")
    p.add_argument("--out", help="artifact directory for the report and witness files")
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("generate", help="write instance files")
    source = p.add_mutually_exclusive_group(required=True)
    source.add_argument("--named", help="LZ2, RZ2, MOD3, Z2GROUP or LIFT_RZ2")
    source.add_argument("--left-zero", nargs=2, type=_pair, metavar=("N", "M"))
    source.add_argument("--right-zero", nargs=2, type=_pair, metavar=("N", "M"))
    source.add_argument("--modular", nargs=2, metavar=("N", "GAMMAS"))
    source.add_argument("--enumerate", nargs=2, type=_pair, metavar=("N", "M"))
    p.add_argument("--unique", action="store_true")
    p.add_argument("--out")
    p.set_defaults(handler=cmd_generate)

    p = sub.add_parser("catalog", help="list the theorem catalog")
    p.set_defaults(handler=cmd_catalog)

    p = sub.add_parser("cache", help="drop expired (or all) cached check reports")
    p.add_argument("--cache-dir", help="default: settings cache_dir")
    p.add_argument("--all", action="store_true", help="drop every entry, not only expired ones")
    p.set_defaults(handler=cmd_cache)

    p = sub.add_parser("artifacts", help="list or print files written by verify --out and generate --out")
    p.add_argument("directory")
    p.add_argument("--show", metavar="NAME", help="print one artifact, e.g. report_verify.md")
    p.set_defaults(handler=cmd_artifacts)

    p = sub.add_parser("hom", help="validate a homomorphism file")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("map")
    p.set_defaults(handler=cmd_hom)
    return parser


def _configure_logging(verbosity: int) -> None:
    if verbosity >= 2:
        level = logging.DEBUG
    elif verbosity == 1:
        level = logging.INFO
    else:
        level = getattr(logging, get_settings().log_level.upper(), logging.WARNING)
    logging.basicConfig(level=level, format="%(asctime)s %(levelname)s %(name)s: %(message)s")


def main(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None, err: Optional[TextIO] = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _configure_logging(args.verbose)
        return args.handler(args, out)
    except (GammaAlgebraError, ValueError, FileNotFoundError) as e:
        logger.debug(f"[cli] {type(e).__name__}: {e}")
        print(f"❌ {e}", file=err)
        return EXIT_ERROR
