"""
Hierarquia de exceções do twistprod.

Falhas de verificação (Jacobi, condição do produto torcido, axiomas de grupo)
são valores (relatórios), nunca exceções. As exceções abaixo sinalizam entradas
inválidas ou estados estruturalmente inconsistentes.
"""

from typing import Any, Optional, Tuple


class TwistProdError(Exception):
    """Erro base do twistprod."""


class IngestionError(TwistProdError):
    """Entrada malformada: JSON inválido, esquema violado ou metades antissimétricas inconsistentes."""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"{message} (linha {line}, coluna {column})"
        super().__init__(message)


class DimensionMismatchError(TwistProdError):
    """Dimensões incompatíveis entre dois objetos."""

    def __init__(self, what: str, expected: int, got: int):
        self.what = what
        self.expected = expected
        self.got = got
        super().__init__(f"Dimensão incompatível em {what}: esperado {expected}, recebido {got}")


class PreconditionError(TwistProdError):
    """Pré-condição de uma operação violada; carrega a testemunha da violação."""

    def __init__(self, message: str, witness: Optional[Tuple[Any, ...]] = None):
        self.witness = witness
        if witness is not None:
            message = f"{message} (testemunha: {witness})"
        super().__init__(message)


class StructuralError(TwistProdError):
    """Inconsistência interna detectada durante uma construção."""


class OrderCapError(TwistProdError):
    """Ordem do produto acima do limite da verificação exaustiva."""

    def __init__(self, order: int, cap: int):
        self.order = order
        self.cap = cap
        super().__init__(f"Ordem {order} excede o limite de {cap} elementos da verificação exaustiva")


class UnknownBuiltinError(TwistProdError):
    """Nome de exemplo embutido desconhecido."""

    def __init__(self, name: str, known):
        self.name = name
        super().__init__(f"Exemplo embutido desconhecido: {name!r}. Disponíveis: {', '.join(known)}")
