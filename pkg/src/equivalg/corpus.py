"""The bundled example files and the code that generates them."""
from __future__ import annotations

import json
from pathlib import Path

from .action import ModuleCategoryAction
from .algebra import AlgebraMap
from .duality import central_twist_data
from .instances import permutation_map, scaling_automorphism, swap_action, twisted_c2_action, cyclic_shift_action, \
    trivial_group_algebra_action
from .scalar import Matrix

CORPUS_DIR = Path(__file__).parent / "corpus"


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _datum(weak, tau: AlgebraMap, delta: dict) -> dict:
    G, F = weak.group, weak.field
    return {
        "action": weak.to_json(),
        "F": tau.matrix.to_json(),
        "delta": {G.key(g): [F.to_json(v) for v in d.flat()] for g, d in delta.items()},
    }


def build_corpus() -> dict[str, dict]:
    out = {
        "swap_c2.json": swap_action(13).to_json(),
        "twisted_c2.json": twisted_c2_action(5, 2).to_json(),
        "shift_c3.json": cyclic_shift_action(13, 3).to_json(),
        "trivial_kc2.json": trivial_group_algebra_action(5).to_json(),
    }
    # swap over F_5 with delta_s = (2, 1): the square of delta_s is 2, a non-square
    w = swap_action(5)
    A = w.algebra
    swap = permutation_map(A, [1, 0])
    out["proj_comm_f5.json"] = _datum(w, swap, {(0,): A.unit, (1,): Matrix.column(A.field, [2, 1])})
    # the central twist by the generator of the twisted datum
    w = twisted_c2_action(5, 2)
    fd = central_twist_data(ModuleCategoryAction(w), (1,))
    out["central_twist_f5.json"] = _datum(w, fd.tau, fd.delta)
    sigma = scaling_automorphism(13, 12)
    out["scaling_d2_f13.json"] = {"algebra": sigma.source.to_json(), "sigma": sigma.matrix.to_json(), "d": 2}
    sigma = scaling_automorphism(13, 5)
    out["scaling_d2_fails_f13.json"] = {"algebra": sigma.source.to_json(), "sigma": sigma.matrix.to_json(), "d": 2}
    return out


def write_corpus(directory: Path = CORPUS_DIR) -> list[Path]:
    directory.mkdir(parents=True, exist_ok=True)
    paths = []
    for name, obj in build_corpus().items():
        path = directory / name
        path.write_text(dumps(obj))
        paths.append(path)
    return paths


def resolve(name: str) -> Path:
    """A path as given, or else the bundled file of that name."""
    p = Path(name)
    if p.exists():
        return p
    bundled = CORPUS_DIR / p.name
    if bundled.exists():
        return bundled
    raise FileNotFoundError(f"no such file: {name}")


if __name__ == "__main__":
    for p in write_corpus():
        print(p)
