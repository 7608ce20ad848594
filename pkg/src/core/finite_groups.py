"""
Grupos finitos como tabelas de Cayley: ações por automorfismos, produto torcido,
a condição de núcleos que o caracteriza, o inverso em forma fechada e a
verificação exaustiva dos axiomas.

Convenções: elementos são índices 0-based com a identidade em 0; o par (g, h)
do produto é achatado no índice g·|H| + h.
"""

import logging
from collections import deque
from typing import Callable, Dict, FrozenSet, Hashable, List, Optional, Sequence, Tuple

import numpy as np

from ..entity import (
    CayleyGroup,
    ConditionResult,
    DimensionMismatchError,
    Failure,
    GroupAction,
    IngestionError,
    NilpotencyResult,
    OrderCapError,
    StructuralError,
    TwistCandidate,
    TwistedInverse,
    TwistOutcome,
    ValidationReport,
)
from ..utils.config import get_settings

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


# ---------------------------------------------------------------------------
# construção de grupos
# ---------------------------------------------------------------------------


def cyclic_group(n: int) -> CayleyGroup:
    """Z_n aditivo."""
    if n < 1:
        raise IngestionError(f"Ordem deve ser positiva, recebido {n}")
    r = np.arange(n)
    return CayleyGroup(np.add.outer(r, r) % n, [str(i) for i in range(n)], f"Z{n}")


def from_elements(
    elements: Sequence,
    multiply: Callable,
    labels: Optional[Sequence[str]] = None,
    name: str = "",
    key: Callable[[object], Hashable] = lambda x: x,
) -> CayleyGroup:
    """
    Tabela de Cayley a partir de uma lista de elementos e da sua multiplicação.

    O primeiro elemento precisa ser a identidade; `key` converte elementos em
    chaves hasheáveis para a busca de índices.
    """
    index = {key(x): i for i, x in enumerate(elements)}
    if len(index) != len(elements):
        raise IngestionError("Elementos repetidos na lista do grupo")
    n = len(elements)
    table = np.zeros((n, n), dtype=np.int64)
    for i, a in enumerate(elements):
        for j, b in enumerate(elements):
            product = key(multiply(a, b))
            if product not in index:
                raise IngestionError(f"Produto fora do conjunto: {elements[i]} · {elements[j]}")
            table[i, j] = index[product]
    return CayleyGroup(table, list(labels) if labels else [], name)


def from_permutation_group(pgroup, name: str = "") -> CayleyGroup:
    """Tabela de Cayley de um `sympy.combinatorics.PermutationGroup`, identidade primeiro."""
    elements = sorted(pgroup.generate_dimino(af=False), key=lambda p: (not p.is_Identity, p.array_form))

    def label(p) -> str:
        if p.is_Identity:
            return "e"
        return "".join("(" + " ".join(str(v) for v in cycle) + ")" for cycle in p.cyclic_form)

    return from_elements(
        elements,
        lambda a, b: a * b,
        [label(p) for p in elements],
        name,
        key=lambda p: tuple(p.array_form),
    )


def direct_product(g: CayleyGroup, h: CayleyGroup) -> CayleyGroup:
    """G × H com o par (a, b) no índice a·|H| + b."""
    m = h.order
    pairs = np.arange(g.order * m)
    ga, ha = pairs // m, pairs % m
    table = g.table[np.ix_(ga, ga)] * m + h.table[np.ix_(ha, ha)]
    labels = [f"({g.labels[a]},{h.labels[b]})" for a, b in zip(ga, ha)]
    return CayleyGroup(table, labels, f"{g.name}×{h.name}")


def semidirect_product(g: CayleyGroup, h: CayleyGroup, lam: GroupAction) -> CayleyGroup:
    """
    G ⋊_λ H por definição: (g1, h1)(g2, h2) = (g1·λ(h1)(g2), h1·h2).

    Construído elemento a elemento, independente de `twisted_table`.
    """
    n, m = g.order, h.order
    table = np.zeros((n * m, n * m), dtype=np.int64)
    for g1 in range(n):
        for h1 in range(m):
            for g2 in range(n):
                for h2 in range(m):
                    g_out = g.mul(g1, lam.apply(h1, g2))
                    h_out = h.mul(h1, h2)
                    table[g1 * m + h1, g2 * m + h2] = g_out * m + h_out
    labels = [f"({g.labels[a]},{h.labels[b]})" for a in range(n) for b in range(m)]
    return CayleyGroup(table, labels, f"{g.name}⋊{h.name}")


def inverse_table(group: CayleyGroup) -> np.ndarray:
    """inv[a] com a·inv[a] = 0."""
    return np.argmax(group.table == 0, axis=1)


def element_orders(group: CayleyGroup) -> np.ndarray:
    orders = np.ones(group.order, dtype=np.int64)
    for a in range(group.order):
        x = a
        while x != 0:
            x = group.mul(x, a)
            orders[a] += 1
    return orders


def commutator_table(group: CayleyGroup) -> np.ndarray:
    """C[g, h] = g·h·g⁻¹·h⁻¹."""
    T = group.table
    inv = inverse_table(group)
    return T[T[T, inv[:, None]], inv[None, :]]


def center(group: CayleyGroup) -> FrozenSet[int]:
    T = group.table
    return frozenset(int(z) for z in np.flatnonzero(np.all(T == T.T, axis=1)))


# ---------------------------------------------------------------------------
# axiomas
# ---------------------------------------------------------------------------


def first_associativity_violation(table: np.ndarray) -> Optional[Tuple[int, int, int]]:
    """Primeira tripla (a, b, c) em ordem lexicográfica com (ab)c ≠ a(bc)."""
    for a in range(table.shape[0]):
        left = table[table[a]]
        right = table[a][table]
        bad = np.argwhere(left != right)
        if bad.size:
            b, c = bad[0]
            return (a, int(b), int(c))
    return None


def validate_group(table, order_cap: Optional[int] = None) -> ValidationReport:
    """
    Verifica quadrado latino, identidade em 0, inversos bilaterais e associatividade.

    Cada axioma contribui no máximo com a sua primeira falha, nessa ordem.

    Args:
        table: Tabela de multiplicação (CayleyGroup ou matriz de índices)
        order_cap: Ordem máxima aceita pela varredura O(n³)

    Returns:
        ValidationReport
    """
    if isinstance(table, CayleyGroup):
        table = table.table
    T = np.asarray(table)
    if T.ndim != 2 or T.shape[0] != T.shape[1]:
        raise IngestionError(f"Tabela não quadrada: formato {T.shape}")
    n = T.shape[0]
    cap = get_settings().order_cap if order_cap is None else order_cap
    if n > cap:
        raise OrderCapError(n, cap)

    failures: List[Failure] = []
    if T.min() < 0 or T.max() >= n:
        bad = np.argwhere((T < 0) | (T >= n))[0]
        failures.append(Failure((int(bad[0]), int(bad[1])), 1.0, "entrada fora dos elementos"))
        return ValidationReport("group", failures)

    expected = np.arange(n)
    rows = np.flatnonzero(np.any(np.sort(T, axis=1) != expected, axis=1))
    if rows.size:
        failures.append(Failure((int(rows[0]),), 1.0, "linha não é permutação"))
    cols = np.flatnonzero(np.any(np.sort(T, axis=0) != expected[:, None], axis=0))
    if cols.size:
        failures.append(Failure((int(cols[0]),), 1.0, "coluna não é permutação"))

    identity = np.flatnonzero((T[0] != expected) | (T[:, 0] != expected))
    if identity.size:
        failures.append(Failure((int(identity[0]),), 1.0, "0 não é identidade"))

    two_sided = (T == 0) & (T.T == 0)
    missing = np.flatnonzero(~two_sided.any(axis=1))
    if missing.size:
        failures.append(Failure((int(missing[0]),), 1.0, "sem inverso bilateral"))

    violation = first_associativity_violation(T)
    if violation is not None:
        failures.append(Failure(violation, 1.0, "associatividade"))
    return ValidationReport("group", failures)


# ---------------------------------------------------------------------------
# ações
# ---------------------------------------------------------------------------


def trivial_action(source: CayleyGroup, target: CayleyGroup) -> GroupAction:
    maps = np.tile(np.arange(target.order), (source.order, 1))
    return GroupAction(source, target, maps)


def inner_action(m: CayleyGroup) -> GroupAction:
    """maps[h][g] = h·g·h⁻¹."""
    T = m.table
    inv = inverse_table(m)
    return GroupAction(m, m, T[T, inv[:, None]])


def validate_action(action: GroupAction) -> ValidationReport:
    """Cada maps[h] é automorfismo do alvo, maps[0] é a identidade e h ↦ maps[h] é homomorfismo."""
    G = action.target.table
    H = action.source.table
    P = action.maps
    failures: List[Failure] = []

    not_perm = np.flatnonzero(np.any(np.sort(P, axis=1) != np.arange(action.target.order), axis=1))
    if not_perm.size:
        failures.append(Failure((int(not_perm[0]),), 1.0, "imagem não é permutação"))

    # P[h][x·y] contra P[h][x]·P[h][y]
    lhs = P[:, G]
    rhs = G[P[:, :, None], P[:, None, :]]
    bad = np.argwhere(lhs != rhs)
    if bad.size:
        failures.append(Failure(tuple(int(v) for v in bad[0]), 1.0, "não é automorfismo"))

    if not np.array_equal(P[0], np.arange(action.target.order)):
        failures.append(Failure((0,), 1.0, "identidade não age trivialmente"))

    # P[h1·h2] contra P[h1] ∘ P[h2]
    composed = P[np.arange(P.shape[0])[:, None, None], P[None, :, :]]
    bad = np.argwhere(P[H] != composed)
    if bad.size:
        failures.append(Failure(tuple(int(v) for v in bad[0]), 1.0, "não é homomorfismo em Aut"))
    return ValidationReport("action", failures)


def action_kernel(action: GroupAction) -> FrozenSet[int]:
    """{h : maps[h] = identidade}; afirma que é subgrupo normal."""
    identity = np.arange(action.target.order)
    members = np.flatnonzero(np.all(action.maps == identity, axis=1))
    kernel = frozenset(int(h) for h in members)
    if 0 not in kernel:
        raise StructuralError("Núcleo da ação não contém a identidade")

    H = action.source.table
    inv = inverse_table(action.source)
    mask = np.zeros(action.source.order, dtype=bool)
    mask[members] = True
    closed = mask[H[np.ix_(members, members)]].all()
    conjugates = H[H[:, members], inv[:, None]]
    if not (closed and mask[conjugates].all()):
        raise StructuralError("Núcleo da ação não é subgrupo normal")
    return kernel


def _kernel_mask(action: GroupAction) -> np.ndarray:
    return np.all(action.maps == np.arange(action.target.order), axis=1)


def _check_compatible(lam: GroupAction, mu: GroupAction) -> None:
    if lam.source.order != mu.target.order:
        raise DimensionMismatchError("|H| entre λ e μ", lam.source.order, mu.target.order)
    if lam.target.order != mu.source.order:
        raise DimensionMismatchError("|G| entre λ e μ", lam.target.order, mu.source.order)


def check_twist_condition(lam: GroupAction, mu: GroupAction) -> ConditionResult:
    """
    Para todo g, h: μ(g)(h)·h⁻¹ ∈ ker λ e λ(h)(g)·g⁻¹ ∈ ker μ.

    Varre g por fora e h por dentro; devolve o primeiro (g, h) violador e qual
    das cláusulas falhou ("lambda" ou "mu").
    """
    _check_compatible(lam, mu)
    G, H = lam.target, lam.source
    inv_g, inv_h = inverse_table(G), inverse_table(H)

    h_defect = H.table[mu.maps, inv_h[None, :]]
    g_defect = G.table[lam.maps.T, inv_g[:, None]]
    in_ker_lam = _kernel_mask(lam)[h_defect]
    in_ker_mu = _kernel_mask(mu)[g_defect]

    bad = np.argwhere(~(in_ker_lam & in_ker_mu))
    if bad.size == 0:
        return ConditionResult(True)
    g, h = (int(v) for v in bad[0])
    clause = "lambda" if not in_ker_lam[g, h] else "mu"
    return ConditionResult(False, (g, h), clause)


# ---------------------------------------------------------------------------
# produto torcido
# ---------------------------------------------------------------------------


def twisted_table(g: CayleyGroup, h: CayleyGroup, lam: GroupAction, mu: GroupAction) -> np.ndarray:
    """(g1, h1)(g2, h2) = (g1·λ(h1)(g2), h1·μ(g1)(h2)) sobre índices achatados."""
    m = h.order
    pairs = np.arange(g.order * m)
    ga, ha = pairs // m, pairs % m
    g_out = g.table[ga[:, None], lam.maps[ha[:, None], ga[None, :]]]
    h_out = h.table[ha[:, None], mu.maps[ga[:, None], ha[None, :]]]
    return g_out * m + h_out


def twisted_multiply(p: Pair, q: Pair, lam: GroupAction, mu: GroupAction) -> Pair:
    g1, h1 = p
    g2, h2 = q
    G, H = lam.target, lam.source
    return (G.mul(g1, lam.apply(h1, g2)), H.mul(h1, mu.apply(g1, h2)))


def twisted_product(
    g: CayleyGroup,
    h: CayleyGroup,
    lam: GroupAction,
    mu: GroupAction,
    order_cap: Optional[int] = None,
) -> TwistOutcome:
    """
    Monta a tabela do produto torcido, verifica os axiomas e confronta o
    resultado com a condição de núcleos.

    Args:
        g: Grupo G
        h: Grupo H
        lam: Ação de H sobre G
        mu: Ação de G sobre H
        order_cap: Ordem máxima do produto

    Returns:
        TwistOutcome com a tabela ou a primeira tripla não associativa
    """
    for what, expected, got in (
        ("|H| como fonte de λ", h.order, lam.source.order),
        ("|G| como alvo de λ", g.order, lam.target.order),
        ("|G| como fonte de μ", g.order, mu.source.order),
        ("|H| como alvo de μ", h.order, mu.target.order),
    ):
        if expected != got:
            raise DimensionMismatchError(what, expected, got)
    cap = get_settings().order_cap if order_cap is None else order_cap
    order = g.order * h.order
    if order > cap:
        raise OrderCapError(order, cap)

    table = twisted_table(g, h, lam, mu)
    report = validate_group(table, order_cap=cap)
    condition = check_twist_condition(lam, mu)
    if report.passed != condition.holds:
        raise StructuralError(
            f"Axiomas ({report.passed}) e condição de núcleos ({condition.holds}) divergem para {g.name} * {h.name}"
        )

    name = f"{g.name}*{h.name}"
    if report.passed:
        labels = [f"({g.labels[a]},{h.labels[b]})" for a in range(g.order) for b in range(h.order)]
        logger.info(f"Produto torcido {name} é grupo de ordem {order}")
        return TwistOutcome(True, order, CayleyGroup(table, labels, name), None, report, condition)

    witness = next((f.where for f in report.failures if f.message == "associatividade"), None)
    if witness is None:
        raise StructuralError(f"Produto torcido {name} falhou sem violar a associatividade")
    logger.info(f"Produto torcido {name} não é grupo; tripla {witness}")
    return TwistOutcome(False, order, None, witness, report, condition)


def twisted_inverse(g1: int, h1: int, lam: GroupAction, mu: GroupAction) -> TwistedInverse:
    """(g1, h1)⁻¹ = (λ(h1⁻¹)(g1⁻¹), μ(g1⁻¹)(h1⁻¹)), com verificação dos dois lados."""
    _check_compatible(lam, mu)
    G, H = lam.target, lam.source
    g_inv = int(inverse_table(G)[g1])
    h_inv = int(inverse_table(H)[h1])
    pair = (lam.apply(h_inv, g_inv), mu.apply(g_inv, h_inv))
    left_ok = twisted_multiply(pair, (g1, h1), lam, mu) == (0, 0)
    right_ok = twisted_multiply((g1, h1), pair, lam, mu) == (0, 0)
    if not (left_ok and right_ok):
        logger.warning(f"Inverso de ({g1}, {h1}) não é bilateral; a condição de núcleos deve falhar")
    return TwistedInverse(pair, left_ok, right_ok)


def is_two_step_nilpotent_group(m: CayleyGroup) -> NilpotencyResult:
    """Verdadeiro sse [[g, h], x] = e para toda tripla; senão a primeira tripla lexicográfica."""
    C = commutator_table(m)
    nested = C[C]
    bad = np.argwhere(nested != 0)
    if bad.size == 0:
        return NilpotencyResult(True)
    return NilpotencyResult(False, tuple(int(v) for v in bad[0]), 1.0)


# ---------------------------------------------------------------------------
# automorfismos e ações aleatórias
# ---------------------------------------------------------------------------


def generating_set(group: CayleyGroup) -> List[int]:
    """Geradores escolhidos gulosamente por ordem decrescente do elemento."""
    orders = element_orders(group)
    candidates = sorted(range(1, group.order), key=lambda a: (-orders[a], a))
    generators: List[int] = []
    subgroup = {0}
    for a in candidates:
        if len(subgroup) == group.order:
            break
        if a in subgroup:
            continue
        generators.append(a)
        subgroup = _closure(group, generators)
    return generators


def _closure(group: CayleyGroup, generators: Sequence[int]) -> set:
    seen = {0}
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for s in generators:
            y = group.mul(x, s)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def _extend(
    group: CayleyGroup,
    generators: Sequence[int],
    images: Sequence,
    identity,
    multiply: Callable,
    equal: Callable,
) -> Optional[list]:
    """Estende imagens dos geradores a um homomorfismo por busca em largura; None se incoerente."""
    phi: list = [None] * group.order
    phi[0] = identity
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for s, image in zip(generators, images):
            y = group.mul(x, s)
            value = multiply(phi[x], image)
            if phi[y] is None:
                phi[y] = value
                queue.append(y)
            elif not equal(phi[y], value):
                return None
    return phi


def automorphisms(group: CayleyGroup) -> List[np.ndarray]:
    """Aut(G) como permutações dos elementos; a identidade vem primeiro."""
    generators = generating_set(group)
    orders = element_orders(group)
    options = [np.flatnonzero(orders == orders[s]) for s in generators]
    result: List[np.ndarray] = []
    for images in _product(options):
        phi = _extend(group, generators, images, 0, group.mul, lambda a, b: a == b)
        if phi is None or len(set(phi)) != group.order:
            continue
        result.append(np.array(phi, dtype=np.int64))
    result.sort(key=lambda p: (not np.array_equal(p, np.arange(group.order)), p.tolist()))
    return result


def _product(options: Sequence[Sequence[int]]):
    if not options:
        yield ()
        return
    for first in options[0]:
        for rest in _product(options[1:]):
            yield (int(first),) + rest


def _permutation_order(p: np.ndarray) -> int:
    identity = np.arange(p.size)
    q = p.copy()
    k = 1
    while not np.array_equal(q, identity):
        q = p[q]
        k += 1
    return k


def homomorphisms_to_aut(source: CayleyGroup, target: CayleyGroup) -> List[GroupAction]:
    """Todas as ações source → Aut(target), a trivial primeiro."""
    auts = automorphisms(target)
    generators = generating_set(source)
    orders = element_orders(source)
    aut_orders = [_permutation_order(p) for p in auts]
    options = [[i for i, o in enumerate(aut_orders) if orders[s] % o == 0] for s in generators]
    identity = np.arange(target.order)
    actions: List[GroupAction] = []
    seen = set()
    for choice in _product(options):
        images = [auts[i] for i in choice]
        phi = _extend(source, generators, images, identity, lambda p, q: p[q], np.array_equal)
        if phi is None:
            continue
        maps = np.stack(phi)
        fingerprint = maps.tobytes()
        if fingerprint in seen:
            continue
        seen.add(fingerprint)
        actions.append(GroupAction(source, target, maps))
    return actions


def random_action_pair(
    g: CayleyGroup,
    h: CayleyGroup,
    rng: np.random.Generator,
    cache: Optional[Dict[Tuple[str, str], List[GroupAction]]] = None,
) -> Tuple[GroupAction, GroupAction]:
    """Escolha semeada de λ: H → Aut(G) e μ: G → Aut(H) entre todos os homomorfismos."""
    cache = {} if cache is None else cache
    if (h.name, g.name) not in cache:
        cache[(h.name, g.name)] = homomorphisms_to_aut(h, g)
    if (g.name, h.name) not in cache:
        cache[(g.name, h.name)] = homomorphisms_to_aut(g, h)
    lams = cache[(h.name, g.name)]
    mus = cache[(g.name, h.name)]
    return lams[int(rng.integers(len(lams)))], mus[int(rng.integers(len(mus)))]


def search_non_inner_twists(
    m: CayleyGroup,
    limit: Optional[int] = None,
    order_cap: Optional[int] = None,
) -> List[TwistCandidate]:
    """
    Pares de ações M → Aut(M), não ambas internas, avaliados pela condição de
    núcleos e pela verificação exaustiva do produto torcido.

    Args:
        m: Grupo M
        limit: Número máximo de pares avaliados
        order_cap: Ordem máxima do produto (padrão TWISTPROD_ORDER_CAP)

    Returns:
        Lista de TwistCandidate na ordem de enumeração
    """
    actions = homomorphisms_to_aut(m, m)
    inner = inner_action(m).maps
    is_inner = [np.array_equal(a.maps, inner) for a in actions]
    candidates: List[TwistCandidate] = []
    for i, lam in enumerate(actions):
        for j, mu in enumerate(actions):
            if is_inner[i] and is_inner[j]:
                continue
            if limit is not None and len(candidates) >= limit:
                return candidates
            condition = check_twist_condition(lam, mu)
            outcome = twisted_product(m, m, lam, mu, order_cap)
            candidates.append(TwistCandidate(lam, mu, condition, is_inner[i], is_inner[j], outcome.is_group))
    logger.info(
        f"{len(candidates)} pares não internos em {m.name}; "
        f"{sum(c.condition.holds for c in candidates)} satisfazem a condição, "
        f"{sum(c.is_group for c in candidates)} são grupos"
    )
    return candidates
