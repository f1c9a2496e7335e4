"""
Command-line front end.

Commands:
    sat     decide satisfiability, optionally exporting DOT graphs, the
            elimination trace, a witness model and its Hintikka structure
    valid   decide validity (satisfiability of the negation)
    check   evaluate a formula at a world of a JSON model
    oracle  search small models by brute force

Exit codes: 0 for SAT / valid / true, 1 for UNSAT / not valid / false /
no model within the bound, 2 for usage and input errors, 3 for internal
consistency failures.
"""
import argparse
import sys
from pathlib import Path
from typing import List, Optional

from epitab import __version__, config
from epitab.errors import FormulaSyntaxError, InvariantBreach
from epitab.factory import create_solver
from epitab.formula.parser import parse
from epitab.formula.syntax import AgentSet, Formula
from epitab.model.checker import satisfies
from epitab.model.enumeration import Witness, brute_force_sat
from epitab.model.frames import check_frame_conditions
from epitab.model.structure import PseudoModel
from epitab.solver import SolverWitness, resolve_agents
from epitab.tableau.dot import export_dot
from epitab.utils.logging_config import get_logger, setup_logging

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


def _write_text(path: Path, text: str):
    with open(path, 'w') as f:
        f.write(text)
    logger.info(f"Wrote {path}")


def _agents(run: config.RunConfig) -> Optional[AgentSet]:
    return AgentSet(run.agents) if run.agents is not None else None


def _save_witness(witness: SolverWitness, path: Path, theta: Formula):
    """Write the witness model and re-check theta against the written file."""
    witness.model.save(path)
    reloaded = PseudoModel.load(path)
    if not satisfies(reloaded, witness.world, theta):
        raise InvariantBreach(f"Witness written to {path} does not satisfy {theta}")


# ============================================================================
# Commands
# ============================================================================

def cmd_sat(args: argparse.Namespace, run: config.RunConfig) -> int:
    solver = create_solver(_agents(run), run.strict_rank, run.decision_scope)
    theta = parse(args.formula, solver.agents)
    result = solver.solve(theta)

    if run.dot_pretableau:
        _write_text(run.dot_pretableau, export_dot(result.pretableau, 'pretableau'))
    if run.dot_initial:
        _write_text(run.dot_initial, export_dot(result.initial, 'initial'))
    if run.dot_final:
        _write_text(run.dot_final, export_dot(result.final, 'final'))
    if run.trace:
        _write_text(run.trace, result.trace.to_text())

    if result.satisfiable:
        # No SAT report without a witness that checks out
        witness = solver.extract_witness(result)
        if run.witness:
            _save_witness(witness, run.witness, theta)
        if run.hintikka:
            witness.structure.save(run.hintikka)
        print("SAT")
        print(f"witness: {len(witness.model.worlds)} world(s), "
              f"{'genuine' if witness.model.genuine else 'pseudo'} model")
    else:
        print("UNSAT")

    if args.stats:
        for line in result.statistics().lines():
            print(line)
    if args.compare_ranks:
        comparison = solver.compare_rank_modes(theta)
        print(f"ranks: min={comparison.min_verdict.value} "
              f"strict={comparison.strict_verdict.value}")
        for state, eventuality in comparison.only_min:
            print(f"  removed only under min ranks: node {state} for {eventuality}")
        for state, eventuality in comparison.only_strict:
            print(f"  removed only under strict ranks: node {state} for {eventuality}")

    return EXIT_OK if result.satisfiable else EXIT_NEGATIVE


def cmd_valid(args: argparse.Namespace, run: config.RunConfig) -> int:
    solver = create_solver(_agents(run), run.strict_rank, run.decision_scope)
    theta = parse(args.formula, solver.agents)
    result = solver.is_valid(theta)

    if not result.satisfiable:
        print("VALID")
        return EXIT_OK

    witness = solver.extract_witness(result)
    if run.witness:
        _save_witness(witness, run.witness, result.theta)
    print("NOT VALID")
    print(f"counter-witness: {len(witness.model.worlds)} world(s)")
    return EXIT_NEGATIVE


def cmd_check(args: argparse.Namespace, run: config.RunConfig) -> int:
    model = PseudoModel.load(args.model)
    frames = check_frame_conditions(model)
    if not frames.ok:
        for violation in frames.violations:
            print(f"frame violation: {violation}", file=sys.stderr)
        logger.error(f"Model {args.model} violates the frame conditions")
        return EXIT_USAGE
    if run.agents is not None:
        declared = AgentSet(run.agents)
        if declared != model.agents:
            raise ValueError(
                f"Agents {{{declared}}} do not match the model's agents {{{model.agents}}}"
            )

    theta = parse(args.formula, model.agents)
    model.require_world(args.state)
    value = satisfies(model, args.state, theta)
    print(f"model: {frames.kind}")
    print("true" if value else "false")
    return EXIT_OK if value else EXIT_NEGATIVE


def cmd_oracle(args: argparse.Namespace, run: config.RunConfig) -> int:
    theta = parse(args.formula, _agents(run))
    agents = resolve_agents(theta, _agents(run))
    outcome = brute_force_sat(theta, agents, run.oracle_max_states)

    if isinstance(outcome, Witness):
        if run.witness:
            outcome.model.save(run.witness)
        print("SAT")
        line = f"witness: {outcome.size} state(s) at {outcome.world}"
        if outcome.size > 1:
            line += f"; none with at most {outcome.size - 1}"
        print(line)
        return EXIT_OK

    print("UNKNOWN")
    print(f"no model with at most {outcome.bound} state(s)")
    return EXIT_NEGATIVE


# ============================================================================
# Argument parsing
# ============================================================================

def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--log-level', default=argparse.SUPPRESS,
                        choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'],
                        type=str.upper, help='Logging level (default: %s)' % config.LOG_LEVEL)
    common.add_argument('--decision-scope', default=argparse.SUPPRESS,
                        choices=config.DECISION_SCOPES,
                        help='Scope of the decision clause for K/D formulas')
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog='epitab',
        description='Tableau decision procedure for epistemic logic with '
                    'distributed and common knowledge',
        parents=[common],
    )
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    subparsers = parser.add_subparsers(dest='command', metavar='COMMAND')
    subparsers.required = True

    agents_help = 'Comma-separated agent names (default: agents occurring in the formula)'

    sat = subparsers.add_parser('sat', parents=[common], help='Decide satisfiability')
    sat.add_argument('formula', help='Formula, e.g. "K{a} p & ~D C p"')
    sat.add_argument('--agents', help=agents_help)
    sat.add_argument('--strict-rank', action='store_true', default=None,
                     help='Use strict ranks for eventuality elimination')
    sat.add_argument('--dot-pretableau', metavar='FILE', help='Write the pretableau as DOT')
    sat.add_argument('--dot-initial', metavar='FILE', help='Write the initial tableau as DOT')
    sat.add_argument('--dot-final', metavar='FILE', help='Write the final tableau as DOT')
    sat.add_argument('--witness', metavar='FILE', help='Write the witness model as JSON')
    sat.add_argument('--hintikka', metavar='FILE',
                     help='Write the witness Hintikka structure as JSON')
    sat.add_argument('--trace', metavar='FILE', help='Write the elimination trace')
    sat.add_argument('--stats', action='store_true', help='Print tableau statistics')
    sat.add_argument('--compare-ranks', action='store_true',
                     help='Run both rank modes and report divergences')
    sat.set_defaults(handler=cmd_sat)

    valid = subparsers.add_parser('valid', parents=[common], help='Decide validity')
    valid.add_argument('formula')
    valid.add_argument('--agents', help=agents_help)
    valid.add_argument('--strict-rank', action='store_true', default=None,
                       help='Use strict ranks for eventuality elimination')
    valid.add_argument('--witness', metavar='FILE', help='Write a counter-witness as JSON')
    valid.set_defaults(handler=cmd_valid)

    check = subparsers.add_parser('check', parents=[common], help='Evaluate a formula on a model')
    check.add_argument('formula')
    check.add_argument('--model', metavar='FILE', required=True, help='JSON model file')
    check.add_argument('--state', metavar='ID', required=True, help='World to evaluate at')
    check.add_argument('--agents', help='Agent names the model must declare')
    check.set_defaults(handler=cmd_check)

    oracle = subparsers.add_parser('oracle', parents=[common], help='Brute-force model search')
    oracle.add_argument('formula')
    oracle.add_argument('--agents', help=agents_help)
    oracle.add_argument('--max-states', type=int, metavar='N',
                        help=f'Largest model size (default: {config.ORACLE_MAX_STATES})')
    oracle.add_argument('--witness', metavar='FILE', help='Write the witness model as JSON')
    oracle.set_defaults(handler=cmd_oracle)

    return parser


def _report_error(error: Exception):
    print(f"error: {error}", file=sys.stderr)
    if isinstance(error, FormulaSyntaxError):
        print(f"  {error.text}", file=sys.stderr)
        print(f"  {' ' * error.position}^", file=sys.stderr)


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point for the epitab CLI."""
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging(log_level=getattr(args, 'log_level', None) or str(config.LOG_LEVEL))

    try:
        run = config.load_run_config(
            agents=getattr(args, 'agents', None),
            strict_rank=getattr(args, 'strict_rank', None),
            decision_scope=getattr(args, 'decision_scope', None),
            oracle_max_states=getattr(args, 'max_states', None),
            dot_pretableau=getattr(args, 'dot_pretableau', None),
            dot_initial=getattr(args, 'dot_initial', None),
            dot_final=getattr(args, 'dot_final', None),
            witness=getattr(args, 'witness', None),
            hintikka=getattr(args, 'hintikka', None),
            trace=getattr(args, 'trace', None),
        )
        return args.handler(args, run)
    except InvariantBreach as e:
        logger.error(f"Internal consistency failure: {e}")
        _report_error(e)
        return EXIT_INTERNAL
    except ValueError as e:
        logger.error(f"{args.command} failed: {e}")
        _report_error(e)
        return EXIT_USAGE


if __name__ == '__main__':
    sys.exit(main())
