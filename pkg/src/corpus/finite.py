"""
Grupos finitos embutidos (ordem ≤ 16) cobrindo as duas classes de nilpotência.
"""

from functools import lru_cache
from typing import Dict

from sympy.algebras.quaternion import Quaternion
from sympy.combinatorics.named_groups import AlternatingGroup, DihedralGroup, SymmetricGroup

from ..core.finite_groups import cyclic_group, direct_product, from_elements, from_permutation_group
from ..entity import CayleyGroup, UnknownBuiltinError

QUATERNION_LABELS = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]


def quaternion_group() -> CayleyGroup:
    """Q8 com a ordem de índices 1, -1, i, -i, j, -j, k, -k."""
    units = [
        Quaternion(1, 0, 0, 0),
        Quaternion(-1, 0, 0, 0),
        Quaternion(0, 1, 0, 0),
        Quaternion(0, -1, 0, 0),
        Quaternion(0, 0, 1, 0),
        Quaternion(0, 0, -1, 0),
        Quaternion(0, 0, 0, 1),
        Quaternion(0, 0, 0, -1),
    ]
    return from_elements(
        units,
        lambda p, q: p * q,
        QUATERNION_LABELS,
        "Q8",
        key=lambda q: (int(q.a), int(q.b), int(q.c), int(q.d)),
    )


def _renamed(group: CayleyGroup, name: str) -> CayleyGroup:
    return CayleyGroup(group.table, group.labels, name)


@lru_cache(maxsize=1)
def _build_corpus() -> Dict[str, CayleyGroup]:
    corpus: Dict[str, CayleyGroup] = {f"Z{n}": cyclic_group(n) for n in range(1, 9)}
    corpus["Z2xZ2"] = _renamed(direct_product(cyclic_group(2), cyclic_group(2)), "Z2xZ2")
    corpus["Z2xZ4"] = _renamed(direct_product(cyclic_group(2), cyclic_group(4)), "Z2xZ4")
    corpus["S3"] = from_permutation_group(SymmetricGroup(3), "S3")
    d4 = from_permutation_group(DihedralGroup(4), "D4")
    corpus["D4"] = d4
    corpus["Q8"] = quaternion_group()
    corpus["D4xZ2"] = _renamed(direct_product(d4, cyclic_group(2)), "D4xZ2")
    corpus["A4"] = from_permutation_group(AlternatingGroup(4), "A4")
    return corpus


def finite_corpus() -> Dict[str, CayleyGroup]:
    """Z1..Z8, Z2×Z2, Z2×Z4, S3, D4, Q8, D4×Z2 e A4, por nome."""
    return dict(_build_corpus())


def finite_group(name: str) -> CayleyGroup:
    corpus = finite_corpus()
    if name not in corpus:
        raise UnknownBuiltinError(name, sorted(corpus))
    return corpus[name]
