"""
Command line entry point.

Every subcommand maps to one library operation, reads JSON documents
(``-`` for standard input) and writes one canonical JSON document to
standard output. Exit codes: 0 success, 1 a checked claim does not
hold, 2 malformed input or usage, 3 a configured cap was exceeded.
"""

import argparse
import sys
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional, Sequence, TextIO, Tuple

from nit_partitions.basis import (
    basis_refines,
    diagonal_bases,
    measurement_probabilities,
    overlap_sq,
)
from nit_partitions.cli import codec
from nit_partitions.cli.demo import run_demo
from nit_partitions.core.config import NitConfig
from nit_partitions.core.exceptions import (
    CapacityError,
    CodecError,
    ConfigurationError,
    DomainError,
    NitError,
    UnsupportedError,
    VerificationError,
)
from nit_partitions.operators import (
    context_operator,
    has_distinct_spectrum,
    operator_from_partition,
)
from nit_partitions.partitions import (
    Permutation,
    apply_permutation,
    canonical_frame,
    classify_partition,
    enumerate_separating_frames,
    is_separating,
    meet_all,
)
from nit_partitions.search import compare, evaluate, optimal_strategy, plan_canonical
from nit_partitions.utils.canonical import canonical_json, encode_fraction
from nit_partitions.utils.logging import get_logger, set_level

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_USAGE = 2
EXIT_CAPACITY = 3


@dataclass
class CommandContext:
    """What a handler needs besides its parsed arguments."""

    config: NitConfig
    stdin: TextIO
    seed: int = 0
    samples: int = 10_000

    def load(self, path: str) -> Any:
        return codec.load_document(path, stdin=self.stdin)


# A handler returns the document to print and, when a checked claim
# fails, the failure message.
Result = Tuple[Any, Optional[str]]
Handler = Callable[[argparse.Namespace, CommandContext], Result]


def _int_list(text: str) -> List[int]:
    try:
        return [int(item) for item in text.split(",") if item.strip()]
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got {text!r}") from e


# ============================================================================
# FRAME COMMANDS
# ============================================================================

def cmd_frame_gen(args: argparse.Namespace, ctx: CommandContext) -> Result:
    return codec.encode_frame(canonical_frame(args.n, args.k, config=ctx.config)), None


def cmd_frame_verify(args: argparse.Namespace, ctx: CommandContext) -> Result:
    verdict = is_separating(codec.decode_frame(ctx.load(args.file)))
    failure = None
    if not verdict:
        failure = (
            f"Frame is not separating: blocks {list(verdict.witness_blocks)} "
            f"meet in {sorted(verdict.witness_states)}"
        )
    return codec.encode_verdict(verdict), failure


def cmd_frame_meet(args: argparse.Namespace, ctx: CommandContext) -> Result:
    partitions = codec.decode_partitions(ctx.load(args.file))
    if not partitions:
        raise DomainError("Meet of no partitions needs a ground size", field="partitions")
    return codec.encode_partition(meet_all(partitions)), None


def cmd_frame_permute(args: argparse.Namespace, ctx: CommandContext) -> Result:
    frame = codec.decode_frame(ctx.load(args.file))
    if args.images is not None:
        permutation = Permutation(frame.ground_size, tuple(args.images))
    else:
        permutation = Permutation.from_cycles(args.cycles, frame.ground_size)
    return codec.encode_frame(apply_permutation(frame, permutation)), None


def cmd_frame_classify(args: argparse.Namespace, ctx: CommandContext) -> Result:
    document = ctx.load(args.file)
    if isinstance(document, dict):
        frame = codec.decode_frame(document)
        n, k, partitions = frame.n, frame.k, list(frame.partitions)
    else:
        if args.n is None or args.k is None:
            raise DomainError(
                "Classifying a bare partition needs --n and --k", field="n", value=None
            )
        n, k, partitions = args.n, args.k, [codec.decode_partition(document)]
    return [codec.encode_locality(classify_partition(p, n, k)) for p in partitions], None


def cmd_frame_enumerate(args: argparse.Namespace, ctx: CommandContext) -> Result:
    enumeration = enumerate_separating_frames(
        args.n, args.k, balanced_only=not args.unbalanced, config=ctx.config
    )
    return codec.encode_enumeration(enumeration), None


# ============================================================================
# OPERATOR COMMANDS
# ============================================================================

def cmd_op_build(args: argparse.Namespace, ctx: CommandContext) -> Result:
    partition = codec.decode_partition(ctx.load(args.file))
    return codec.encode_operator(operator_from_partition(partition, args.labels)), None


def cmd_op_context(args: argparse.Namespace, ctx: CommandContext) -> Result:
    operators = [op for path in args.files for op in codec.decode_operators(ctx.load(path))]
    return codec.encode_operator(context_operator(operators)), None


def cmd_op_spectrum(args: argparse.Namespace, ctx: CommandContext) -> Result:
    verdict = has_distinct_spectrum(codec.decode_operator(ctx.load(args.file)))
    failure = None
    if not verdict:
        failure = f"Spectrum repeats at positions {verdict.collision}"
    return codec.encode_spectrum(verdict), failure


# ============================================================================
# BASIS COMMANDS
# ============================================================================

def cmd_basis_diag(args: argparse.Namespace, ctx: CommandContext) -> Result:
    families = diagonal_bases(args.n, config=ctx.config)
    return {"n": args.n, "families": [codec.encode_vectors(list(f)) for f in families]}, None


def cmd_basis_overlap(args: argparse.Namespace, ctx: CommandContext) -> Result:
    vectors = codec.decode_vectors(ctx.load(args.file))
    for name, index in (("i", args.i), ("j", args.j)):
        if not 0 <= index < len(vectors):
            raise DomainError(
                f"Vector index {index} outside 0..{len(vectors) - 1}", field=name, value=index
            )
    return encode_fraction(overlap_sq(vectors[args.i], vectors[args.j])), None


def cmd_basis_probs(args: argparse.Namespace, ctx: CommandContext) -> Result:
    state = codec.decode_vector(ctx.load(args.state))
    partition = codec.decode_partition(ctx.load(args.partition))
    return codec.encode_fractions(measurement_probabilities(state, partition)), None


def cmd_basis_refines(args: argparse.Namespace, ctx: CommandContext) -> Result:
    vectors = codec.decode_vectors(ctx.load(args.vectors))
    partition = codec.decode_partition(ctx.load(args.partition))
    verdict = basis_refines(vectors, partition)
    failure = None
    if not verdict:
        failure = f"Vector {verdict.straddling} meets more than one block"
    return codec.encode_refinement(verdict), failure


# ============================================================================
# SEARCH COMMANDS
# ============================================================================

def cmd_search_plan(args: argparse.Namespace, ctx: CommandContext) -> Result:
    frame = codec.decode_frame(ctx.load(args.file))
    return codec.encode_strategy(plan_canonical(frame)), None


def cmd_search_optimal(args: argparse.Namespace, ctx: CommandContext) -> Result:
    repertoire = codec.decode_repertoire(ctx.load(args.file))
    strategy, report = optimal_strategy(repertoire, config=ctx.config)
    return {
        "strategy": codec.encode_strategy(strategy),
        "report": codec.encode_report(report),
    }, None


def cmd_search_eval(args: argparse.Namespace, ctx: CommandContext) -> Result:
    strategy = codec.decode_strategy(ctx.load(args.file))
    return codec.encode_evaluation(evaluate(strategy, args.hidden)), None


def cmd_search_compare(args: argparse.Namespace, ctx: CommandContext) -> Result:
    baseline = codec.decode_repertoire(ctx.load(args.baseline))
    other = codec.decode_repertoire(ctx.load(args.other))
    return codec.encode_comparison(compare(baseline, other, config=ctx.config)), None


# ============================================================================
# WORKED EXAMPLES
# ============================================================================

def cmd_demo(args: argparse.Namespace, ctx: CommandContext) -> Result:
    checks = run_demo(seed=ctx.seed, samples=ctx.samples, config=ctx.config)
    failed = [c.name for c in checks if not c.passed]
    document: Dict[str, Any] = {
        "checks": [c.model_dump() for c in checks],
        "passed": len(checks) - len(failed),
        "failed": len(failed),
    }
    return document, (f"Checks failed: {', '.join(failed)}" if failed else None)


# ============================================================================
# PARSER
# ============================================================================

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nits",
        description="Exact state partitions, nit operators, diagonal bases and n-ary search",
    )
    parser.add_argument("--config", help="YAML configuration file (default: environment)")
    parser.add_argument("--log-level", help="DEBUG, INFO, WARNING or ERROR")
    parser.add_argument("--seed", type=int, default=0, help="Seed for sampled checks (default: 0)")
    parser.add_argument(
        "--samples", type=int, default=10_000, help="Sampled permutations (default: 10000)"
    )
    groups = parser.add_subparsers(dest="group", required=True, metavar="GROUP")

    # Frames
    frame = groups.add_parser("frame", help="Partitions and frames").add_subparsers(
        dest="command", required=True, metavar="COMMAND"
    )
    s = frame.add_parser("gen", help="Canonical frame of k particles with n outcomes")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.set_defaults(func=cmd_frame_gen)

    s = frame.add_parser("verify", help="Check the separating property")
    s.add_argument("file", help="Frame JSON ('-' for stdin)")
    s.set_defaults(func=cmd_frame_verify)

    s = frame.add_parser("meet", help="Meet of all partitions of a frame")
    s.add_argument("file", help="Frame JSON or array of partitions")
    s.set_defaults(func=cmd_frame_meet)

    s = frame.add_parser("permute", help="Apply a state permutation to a frame")
    s.add_argument("file", help="Frame JSON")
    how = s.add_mutually_exclusive_group(required=True)
    how.add_argument("--cycles", help='Cycle notation, e.g. "(1)(2,9,3,5)(4,6,7,8)"')
    how.add_argument("--images", type=_int_list, help="One-line form, e.g. 2,1,3,4")
    s.set_defaults(func=cmd_frame_permute)

    s = frame.add_parser("classify", help="Local or nonlocal partitions")
    s.add_argument("file", help="Frame JSON, or a partition with --n and --k")
    s.add_argument("--n", type=int)
    s.add_argument("--k", type=int)
    s.set_defaults(func=cmd_frame_classify)

    s = frame.add_parser("enumerate", help="All separating frames of a small state set")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--unbalanced", action="store_true", help="Also try unbalanced partitions")
    s.set_defaults(func=cmd_frame_enumerate)

    # Operators
    op = groups.add_parser("op", help="Diagonal nit operators").add_subparsers(
        dest="command", required=True, metavar="COMMAND"
    )
    s = op.add_parser("build", help="Nit operator of a partition")
    s.add_argument("file", help="Partition JSON")
    s.add_argument("--labels", type=_int_list, required=True, help="One label per block")
    s.set_defaults(func=cmd_op_build)

    s = op.add_parser("context", help="Componentwise product of operators")
    s.add_argument("files", nargs="+", help="Operator JSON documents or arrays")
    s.set_defaults(func=cmd_op_context)

    s = op.add_parser("spectrum", help="Check that all eigenvalues are distinct")
    s.add_argument("file", help="Operator JSON")
    s.set_defaults(func=cmd_op_spectrum)

    # Bases
    basis = groups.add_parser("basis", help="Exact vectors and diagonal bases").add_subparsers(
        dest="command", required=True, metavar="COMMAND"
    )
    s = basis.add_parser("diag", help="Diagonal bases of two particles")
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(func=cmd_basis_diag)

    s = basis.add_parser("overlap", help="Squared overlap of two vectors")
    s.add_argument("file", help="Vector array or diagonal bases document")
    s.add_argument("--i", type=int, required=True)
    s.add_argument("--j", type=int, required=True)
    s.set_defaults(func=cmd_basis_overlap)

    s = basis.add_parser("probs", help="Outcome probabilities of a partition")
    s.add_argument("state", help="Vector JSON")
    s.add_argument("partition", help="Partition JSON")
    s.set_defaults(func=cmd_basis_probs)

    s = basis.add_parser("refines", help="Check every vector lies inside one block")
    s.add_argument("vectors", help="Vector array or diagonal bases document")
    s.add_argument("partition", help="Partition JSON")
    s.set_defaults(func=cmd_basis_refines)

    # Search
    search = groups.add_parser("search", help="n-ary search strategies").add_subparsers(
        dest="command", required=True, metavar="COMMAND"
    )
    s = search.add_parser("plan", help="Ask the partitions of a separating frame in order")
    s.add_argument("file", help="Frame JSON")
    s.set_defaults(func=cmd_search_plan)

    s = search.add_parser("optimal", help="Optimal adaptive strategy for a repertoire")
    s.add_argument("file", help="Repertoire or frame JSON")
    s.set_defaults(func=cmd_search_optimal)

    s = search.add_parser("eval", help="Run a strategy against a hidden state")
    s.add_argument("file", help="Strategy JSON")
    s.add_argument("--hidden", type=int, required=True)
    s.set_defaults(func=cmd_search_eval)

    s = search.add_parser("compare", help="Compare two repertoires")
    s.add_argument("baseline", help="Baseline repertoire or frame JSON")
    s.add_argument("other", help="Other repertoire or frame JSON")
    s.set_defaults(func=cmd_search_compare)

    # Worked examples
    examples = groups.add_parser(
        "paper", aliases=["examples"], help="Worked examples"
    ).add_subparsers(dest="command", required=True, metavar="COMMAND")
    s = examples.add_parser("demo", help="Reproduce every worked example")
    s.set_defaults(func=cmd_demo)

    return parser


def _load_config(path: Optional[str]) -> NitConfig:
    return NitConfig.from_yaml(path) if path else NitConfig.from_env()


def run(
    argv: Sequence[str],
    stdout: Optional[TextIO] = None,
    stdin: Optional[TextIO] = None,
) -> int:
    """Parse ``argv``, dispatch and return the exit code."""
    stdout = stdout or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    try:
        config = _load_config(args.config)
        set_level(args.log_level or config.log_level)
        ctx = CommandContext(
            config=config, stdin=stdin or sys.stdin, seed=args.seed, samples=args.samples
        )
        handler: Handler = args.func
        document, failure = handler(args, ctx)
        stdout.write(canonical_json(document) + "\n")
        if failure is not None:
            raise VerificationError(failure, claim=f"{args.group} {args.command}")
    except VerificationError as e:
        logger.error(e.message)
        return EXIT_VERIFICATION
    except CapacityError as e:
        logger.error(str(e))
        return EXIT_CAPACITY
    except (DomainError, UnsupportedError, CodecError, ConfigurationError) as e:
        logger.error(str(e))
        return EXIT_USAGE
    except NitError as e:
        logger.error(f"{args.group} {args.command} failed: {e}")
        return EXIT_USAGE
    except Exception as e:
        logger.error(f"{args.group} {args.command} rejected its input: {type(e).__name__}: {e}")
        logger.debug("Traceback", exc_info=True)
        return EXIT_USAGE
    return EXIT_OK


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
