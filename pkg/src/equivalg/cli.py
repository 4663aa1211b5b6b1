"""``equiv-alg``: batch verification commands over JSON files.

Exit status is 0 when every check passes, 1 when a mathematical check fails
(the report says which), and 2 for usage or input errors. Reports are
written as sorted, indented JSON so identical inputs give identical bytes.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys
from pathlib import Path

from .action import (CompatiblePair, CrossedProduct, ModuleCategoryAction, WeakAction, coherence_suite,
                     compatible_pair_from_action, cyclic_round_trip, induced_cyclic_action, is_d_compatible,
                     root_hypotheses, weak_action_k0)
from .algebra import Algebra, AlgebraMap, ModuleRep, hom_space
from .corpus import dumps, resolve
from .decompose import BlockData
from .duality import DualAction, orbit_census, verify_monad_isomorphism, verify_theta_equivalence
from .equivariant import (equivariant_probes, from_crossed_module, hom_equivariant, to_crossed_module,
                          verify_adjunctions, verify_monad_laws)
from .obstruction import (CommutingFunctorDatum, ObstructionUndefined, exhaustive_coboundary_search, kernel_check,
                          obstruction_cocycle, obstruction_report)
from .report import Report
from .scalar import FieldError, Matrix, parse_field
from . import tubular


class InputError(Exception):
    """Bad arguments or malformed input files (exit status 2)."""


class Session:
    """Parsed arguments plus the bookkeeping shared by all commands."""

    def __init__(self, args: argparse.Namespace):
        self.args = args
        self.inputs: dict[str, str] = {}
        self.reports: list[Report] = []
        self.data: dict = {}
        self.outputs: list[str] = []

    @property
    def seed(self) -> int:
        return self.args.seed

    def load(self, name: str | None) -> dict:
        if name is None:
            raise InputError("--in is required")
        try:
            path = resolve(name)
            text = path.read_text()
            obj = json.loads(text)
        except (OSError, json.JSONDecodeError) as exc:
            raise InputError(f"cannot read {name}: {exc}") from None
        self.inputs[name] = hashlib.sha256(text.encode()).hexdigest()
        return obj

    def parse(self, what: str, fn, *args):
        try:
            value = fn(*args)
        except (KeyError, TypeError, ValueError, IndexError, FieldError) as exc:
            raise InputError(f"malformed {what}: {exc!r}") from None
        self.check_field(getattr(value, "field", None))
        return value

    def check_field(self, F) -> None:
        want = self.args.field
        if want and F is not None and parse_field(want) != F:
            raise InputError(f"input is over {F}, not {want}")

    def action(self, obj: dict) -> WeakAction:
        return self.parse("weak action", WeakAction.from_json, obj)

    def probes(self, act: ModuleCategoryAction) -> list[ModuleRep]:
        if self.args.probe_set == "regular":
            base = ModuleRep.regular(act.algebra)
            out = []
            for g in act.group.elements:
                Y = act.F(g)(base)
                if Y not in out:
                    out.append(Y)
            return out
        return act.default_probes(seed=self.seed)

    def write(self, obj, path: str | None) -> None:
        if path is None:
            return
        p = Path(path)
        p.parent.mkdir(parents=True, exist_ok=True)
        p.write_text(dumps(obj))
        self.outputs.append(str(p))

    def report(self) -> dict:
        return {
            "command": self.args.command,
            "inputs": self.inputs,
            "ok": all(r.ok for r in self.reports),
            "reports": [r.to_json() for r in self.reports],
            "data": self.data,
            "outputs": self.outputs,
        }


# ---------------------------------------------------------------------------
# commands


def cmd_validate_algebra(s: Session) -> None:
    obj = s.load(s.args.inp)
    A = s.parse("algebra", Algebra.from_json, obj)
    s.reports.append(A.validate())
    s.data.update({"dim": A.dim, "center_dim": len(A.center())})


def cmd_validate_action(s: Session) -> None:
    w = s.action(s.load(s.args.inp))
    s.reports.append(w.validate())
    s.data.update({"group": list(w.group.cyclic_orders), "algebra_dim": w.algebra.dim})


def cmd_crossed_product(s: Session) -> None:
    w = s.action(s.load(s.args.inp))
    cp = CrossedProduct(w)
    s.reports.append(cp.verify())
    B = cp.algebra
    blocks = BlockData(B, seed=s.seed, bound=s.args.bound)
    s.data.update({"dim": B.dim, "center_dim": len(B.center()),
                   "simple_dims": sorted(S.dim for S in blocks.simples)})
    s.write(B.to_json(), s.args.out)


def cmd_equivariantize(s: Session) -> None:
    w = s.action(s.load(s.args.inp))
    act = w.module_action()
    probes = s.probes(act)
    eqs = equivariant_probes(act, probes, seed=s.seed)
    cp = CrossedProduct(w)
    rep = Report("equivariant-objects")
    rep.add("objects_valid", all(E.validate().ok for E in eqs))
    rep.add("crossed_round_trip", all(from_crossed_module(act, to_crossed_module(E, cp), cp) == E for E in eqs))
    lifted = [to_crossed_module(E, cp) for E in eqs]
    bad = [[i, j] for i, E1 in enumerate(eqs) for j, E2 in enumerate(eqs)
           if len(hom_equivariant(E1, E2)) != len(hom_space(lifted[i], lifted[j]))]
    rep.add("hom_dimensions_agree", not bad, {"pairs": bad} if bad else None)
    s.reports += [rep, verify_adjunctions(act, probes, eqs), verify_monad_laws(act, probes, eqs)]
    s.data.update({"probes": len(probes), "equivariant_objects": [E.dim for E in eqs]})
    s.write({"action": w.to_json(), "objects": [E.to_json() for E in eqs]}, s.args.out)


def cmd_dualize(s: Session) -> None:
    w = s.action(s.load(s.args.inp))
    act = w.module_action()
    dual = DualAction(act)
    s.reports.append(dual.weak.validate())
    eqs = equivariant_probes(act, s.probes(act), seed=s.seed)
    rep = Report("dual-action")
    rep.add("strict_on_probes", dual.check_strictness(eqs))
    s.reports.append(rep)
    s.data.update({"dual_group": list(dual.dual_group.cyclic_orders), "algebra_dim": dual.weak.algebra.dim})
    s.write(dual.weak.to_json(), s.args.out)


def cmd_verify_duality(s: Session) -> None:
    w = s.action(s.load(s.args.inp))
    act = w.module_action()
    dual = DualAction(act)
    probes = s.probes(act)
    s.reports.append(verify_theta_equivalence(dual, probes, seed=s.seed))
    s.reports.append(verify_monad_isomorphism(dual, equivariant_probes(act, probes, seed=s.seed)))


def cmd_cyclic_classify(s: Session) -> None:
    obj = s.load(s.args.inp)
    if "sigma" in obj:
        # a compatible pair: emit the cyclic action it determines
        A = s.parse("algebra", Algebra.from_json, obj["algebra"])
        F = A.field
        try:
            sigma = AlgebraMap(A, A, Matrix.from_json(F, obj["sigma"]))
            a = Matrix(F, [[F.from_json(v)] for v in obj["a"]], A.dim, 1)
            pair = CompatiblePair(sigma, a, int(obj["d"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed compatible pair: {exc!r}") from None
        rep = pair.validate()
        s.reports.append(rep)
        s.data["root_hypotheses"] = root_hypotheses(F, pair.d).data
        if rep.ok:
            w = induced_cyclic_action(pair)
            s.reports.append(w.validate())
            s.write(w.to_json(), s.args.out)
        return
    w = s.action(obj)
    act = w.module_action()
    if act.group.cyclic_generator() is None:
        raise InputError("the group is not cyclic")
    probes = s.probes(act)
    pair, rep = compatible_pair_from_action(act, probes=probes)
    s.reports.append(rep)
    s.reports.append(pair.validate())
    g = act.group.cyclic_generator()
    check = Report("cyclic-round-trip")
    check.add("induced_action_recovers_input", cyclic_round_trip(act, pair, g, probes))
    s.reports.append(check)
    F = w.field
    s.data.update({"d": pair.d, "a": [F.to_json(v) for v in pair.a.flat()],
                   "root_hypotheses": root_hypotheses(F, pair.d).data})
    s.write({"algebra": w.algebra.to_json(), **pair.to_json()}, s.args.out)


def cmd_d_compatible(s: Session) -> None:
    obj = s.load(s.args.inp)
    A = s.parse("algebra", Algebra.from_json, obj["algebra"] if "algebra" in obj else obj)
    try:
        sigma = AlgebraMap(A, A, Matrix.from_json(A.field, obj["sigma"]))
        d = int(obj["d"])
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed automorphism: {exc!r}") from None
    if d <= 0:
        raise InputError("d must be positive")
    rep = Report("d-compatible")
    rep.add("sigma_automorphism", sigma.is_automorphism())
    witness = is_d_compatible(A, sigma, d, seed=s.seed, bound=s.args.bound) if rep.ok else None
    rep.add("witness_found", witness is not None)
    s.reports.append(rep)
    s.data["root_hypotheses"] = root_hypotheses(A.field, d).data
    if witness is not None:
        F = A.field
        s.data["witness"] = [F.to_json(v) for v in witness.flat()]
        # the pair stores the unit whose conjugation is sigma^d
        pair = CompatiblePair(sigma, A.inverse(witness), d)
        s.reports.append(pair.validate())
        w = induced_cyclic_action(pair)
        s.reports.append(w.validate())
        s.write(w.to_json(), s.args.out)


def cmd_obstruction(s: Session) -> None:
    obj = s.load(s.args.inp)
    src = obj.get("action")
    if isinstance(src, str):
        src = s.load(src)
    if src is None:
        raise InputError("obstruction file needs an 'action'")
    w = s.action(src)
    act = w.module_action()
    datum = s.parse("commuting functor datum", CommutingFunctorDatum.from_json, act, obj)
    probes = s.probes(act)
    try:
        rep = obstruction_report(datum, probes, seed=s.seed)
    except ObstructionUndefined as exc:
        failed = Report("obstruction")
        failed.add("scalar_obstruction_defined", False, {"error": str(exc)})
        s.reports.append(failed)
        return
    s.reports.append(rep)
    s.data["class"] = rep.data["class"]
    F = w.field
    if F.is_finite and (F.size - 1) ** w.group.order <= 100_000:
        count, found = exhaustive_coboundary_search(obstruction_cocycle(datum, probes))
        ex = Report("exhaustive-coboundary-search")
        ex.add("agrees_with_class", bool(found) == (rep.data["class"] == "trivial"),
               {"candidates": count, "witnesses": len(found)})
        s.reports.append(ex)
    if s.args.kernel_check:
        s.reports.append(kernel_check(act, seed=s.seed))


def cmd_k0_action(s: Session) -> None:
    w = s.action(s.load(s.args.inp))
    perms = weak_action_k0(w, seed=s.seed, bound=s.args.bound)
    G = w.group
    rep = Report("k0-action")
    rep.add("permutation_matrices", all(sum(map(sum, m.to_ints())) == m.nrows for m in perms.values()))
    s.reports.append(rep)
    s.data["permutations"] = {G.key(g): m.to_ints() for g, m in perms.items()}


def cmd_orbit_census(s: Session) -> None:
    w = s.action(s.load(s.args.inp))
    act = w.module_action()
    blocks = BlockData(w.algebra, seed=s.seed, bound=s.args.bound)
    indec = []
    for M in blocks.simples + blocks.indecomposable_projectives:
        if M not in indec:
            indec.append(M)
    s.reports.append(orbit_census(DualAction(act), indec, seed=s.seed))


def cmd_tubular(s: Session) -> None:
    args = s.args
    if args.type is None:
        raise InputError("--type is required")
    try:
        F = parse_field(args.field) if args.field else tubular.default_field()
        weights = tuple(int(x) for x in args.type.split(","))
        lam = args.lam if args.lam is not None else -1
        S = tubular.coordinate_algebra(args.type, F, lam if weights == (2, 2, 2, 2) else None)
    except (ValueError, FieldError) as exc:
        raise InputError(str(exc)) from None
    L = S.group
    s.data["grading_group"] = {"weights": list(L.weights), "invariants": list(L.invariants),
                               "c": list(L.c), "omega": list(L.omega), "omega_order": L.order(L.omega)}
    steps = args.bound if args.bound is not None else 8
    T = tubular.coordinate_algebra_truncation(S, steps)
    s.reports.append(T.check())
    if args.check_table1:
        try:
            rep, actions = tubular.table1_compatible_pairs(F, steps)
        except FieldError as exc:
            raise InputError(str(exc)) from None
        s.reports.append(rep)
        s.data["table1"] = {k: v for k, v in rep.data.items()}
        if args.out:
            for name, weak in actions.items():
                s.write(weak.to_json(), str(Path(args.out) / f"{name}.json"))


def cmd_appendix_a_suite(s: Session) -> None:
    names = [s.args.inp] if s.args.inp else ["swap_c2.json", "twisted_c2.json", "shift_c3.json"]
    max_n = s.args.bound if s.args.bound is not None else 4
    for name in names:
        w = s.action(s.load(name))
        act = w.module_action()
        rep = coherence_suite(act, s.probes(act), max_n=max_n)
        rep.title = f"coherence-identities {Path(name).name}"
        s.reports.append(rep)


COMMANDS = {
    "validate-algebra": (cmd_validate_algebra, "check associativity and the unit of an algebra file"),
    "validate-action": (cmd_validate_action, "check the weak action identities of an action file"),
    "crossed-product": (cmd_crossed_product, "build and verify the crossed product"),
    "equivariantize": (cmd_equivariantize, "equivariant objects, adjunctions and monads on probes"),
    "dualize": (cmd_dualize, "the dual action of the character group on the crossed product"),
    "verify-duality": (cmd_verify_duality, "the duality functor and the monad isomorphism on probes"),
    "cyclic-classify": (cmd_cyclic_classify, "compatible pair of a cyclic action, or the action of a pair"),
    "d-compatible": (cmd_d_compatible, "search for a d-compatibility witness of an automorphism"),
    "obstruction": (cmd_obstruction, "obstruction cocycle and class of a commuting functor datum"),
    "k0-action": (cmd_k0_action, "permutation action on indecomposable projective classes"),
    "orbit-census": (cmd_orbit_census, "orbit counts on both sides of the duality"),
    "tubular": (cmd_tubular, "grading groups, coordinate algebras and graded automorphisms"),
    "appendix-a-suite": (cmd_appendix_a_suite, "coherence identities of the module-category action"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="equiv-alg", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--in", dest="inp", help="input JSON file (bundled corpus names also work)")
        p.add_argument("--out", help="output file, or directory for tubular")
        p.add_argument("--field", help="field such as prime:13 or cyclotomic:12")
        p.add_argument("--seed", type=int, default=0, help="seed for randomized searches (default 0)")
        p.add_argument("--probe-set", choices=["default", "regular"], default="default",
                       help="regular: the regular module and its twists only")
        p.add_argument("--bound", type=int, default=None,
                       help="search budget; truncation steps for tubular; max word length for appendix-a-suite")
        if name == "tubular":
            p.add_argument("--type", help="one of " + ", ".join(tubular.TYPES))
            p.add_argument("--lambda", dest="lam", type=int, help="parameter for type 2,2,2,2 (default -1)")
            p.add_argument("--check-table1", action="store_true", help="validate g1, g2, g3 and emit their actions")
        if name == "obstruction":
            p.add_argument("--kernel-check", action="store_true", help="also test distinct characters")
    return parser


def dispatch(argv: list[str] | None = None) -> tuple[int, dict | None]:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0), None
    if args.bound is None and args.command not in ("tubular", "appendix-a-suite"):
        from .algebra import DEFAULT_BOUND
        args.bound = DEFAULT_BOUND
    s = Session(args)
    try:
        if args.field:
            parse_field(args.field)
        COMMANDS[args.command][0](s)
    except (InputError, FieldError) as exc:
        print(f"equiv-alg: error: {exc}", file=sys.stderr)
        return 2, None
    report = s.report()
    return (0 if report["ok"] else 1), report


def main(argv: list[str] | None = None) -> int:
    code, report = dispatch(argv)
    if report is not None:
        sys.stdout.write(dumps(report))
    return code


if __name__ == "__main__":
    sys.exit(main())
