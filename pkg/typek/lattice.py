"""
Lattices given by integral symmetric Gram matrices, their named constructors
and a parser for expressions such as ``U + U(2) + E8(-2)`` or ``2*<-4>``.
"""
import re
from typing import List, Optional, Tuple, Sequence
from typek.errors import LatticeError, LatticeParseError
from typek.exact_linalg import (
    IntMatrix, Matrix, block_diagonal, determinant, inertia, is_symmetric, matmul, transpose,
    rational_rank, saturated_kernel)
from typek.utils import get_logger

logger = get_logger(__name__)

Signature = Tuple[int, int]


def hyperbolic_plane() -> IntMatrix:
    return [[0, 1], [1, 0]]


def cartan_a(m: int) -> IntMatrix:
    if m < 1:
        raise LatticeError(f"A_{m} needs m >= 1")
    return [[2 if i == j else -1 if abs(i - j) == 1 else 0 for j in range(m)] for i in range(m)]


def _cartan_from_edges(size: int, edges: Sequence[Tuple[int, int]]) -> IntMatrix:
    gram = [[2 if i == j else 0 for j in range(size)] for i in range(size)]
    for i, j in edges:
        gram[i][j] = gram[j][i] = -1
    return gram


def cartan_d(n: int) -> IntMatrix:
    """
    Positive definite D_n: a chain of n - 1 nodes with the last node
    attached to the third node from the end of the chain.
    """
    if n < 4:
        raise LatticeError(f"D_{n} needs n >= 4")
    edges = [(i, i + 1) for i in range(n - 2)] + [(n - 3, n - 1)]
    return _cartan_from_edges(n, edges)


def cartan_e(rank: int) -> IntMatrix:
    if rank not in (6, 7, 8):
        raise LatticeError(f"E_{rank} is only defined for 6, 7 and 8")
    edges = [(i, i + 1) for i in range(rank - 2)] + [(2, rank - 1)]
    return _cartan_from_edges(rank, edges)


class Summand:
    """
    One orthogonal summand of a lattice expression: a named block and a scale.

    ``kind`` is one of "U", "A", "D", "E" or "<>" (rank one lattice <index>).
    """

    def __init__(self, kind: str, index: int = 0, scale: int = 1):
        if scale == 0:
            raise LatticeError("rescaling by 0 is not allowed")
        self.kind = kind
        self.index = index
        self.scale = scale

    def rescale(self, n: int) -> 'Summand':
        return Summand(self.kind, self.index, self.scale * n)

    def base_gram(self) -> IntMatrix:
        if self.kind == "U":
            return hyperbolic_plane()
        elif self.kind == "A":
            return cartan_a(self.index)
        elif self.kind == "D":
            return cartan_d(self.index)
        elif self.kind == "E":
            return cartan_e(self.index)
        elif self.kind == "<>":
            return [[self.index]]
        raise ValueError(self.kind)

    def gram(self) -> IntMatrix:
        return [[self.scale * x for x in row] for row in self.base_gram()]

    def __str__(self):
        if self.kind == "<>":
            return f"<{self.index * self.scale}>"
        name = "U" if self.kind == "U" else f"{self.kind}{self.index}"
        if self.scale == 1:
            return name
        return f"{name}({self.scale})"

    def __eq__(self, other):
        return isinstance(other, Summand) and str(self) == str(other)

    def __repr__(self):
        return f"<Summand {self}>"


_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z]\d*)|(?P<op>[-+*()<>]))")


def _normalize(expression: str) -> str:
    # unicode minus and direct sum sign, both one character wide
    return expression.replace("−", "-").replace("⊕", "+")


def _tokenize(expression: str) -> List[Tuple[str, str, int]]:
    text = _normalize(expression)
    tokens = []
    position = 0
    while position < len(text):
        if text[position:].strip() == "":
            break
        match = _TOKEN.match(text, position)
        if not match:
            offset = len(text[position:]) - len(text[position:].lstrip())
            raise LatticeParseError(f"unexpected character {text[position + offset]!r}", expression, position + offset)
        kind = match.lastgroup
        start = match.start(kind)
        tokens.append((kind, match.group(kind), start))
        position = match.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, expression: str):
        self.expression = expression
        self.tokens = _tokenize(expression)
        self.index = 0

    @property
    def current(self) -> Tuple[str, str, int]:
        return self.tokens[self.index]

    def error(self, message: str) -> LatticeParseError:
        return LatticeParseError(message, self.expression, self.current[2])

    def accept(self, value: str) -> bool:
        kind, text, _ = self.current
        if kind == "op" and text == value:
            self.index += 1
            return True
        return False

    def expect(self, value: str):
        if not self.accept(value):
            raise self.error(f"expected {value!r}")

    def signed_int(self) -> int:
        sign = -1 if self.accept("-") else 1
        kind, text, _ = self.current
        if kind != "int":
            raise self.error("expected an integer")
        self.index += 1
        return sign * int(text)

    def expression_(self) -> List[Summand]:
        summands = self.term()
        while self.accept("+"):
            summands += self.term()
        if self.current[0] != "end":
            raise self.error("unexpected input")
        return summands

    def term(self) -> List[Summand]:
        kind, text, position = self.current
        if kind == "int":
            self.index += 1
            copies = int(text)
            if copies < 1:
                raise LatticeParseError("multiplicity must be positive", self.expression, position)
            self.expect("*")
            return self.term() * copies
        if kind == "op" and text == "<":
            self.index += 1
            value = self.signed_int()
            self.expect(">")
            return [Summand("<>", value)]
        if kind == "name":
            self.index += 1
            summands = self.named(text, position)
            if self.accept("("):
                scale_position = self.current[2]
                scale = self.signed_int()
                if scale == 0:
                    raise LatticeParseError("rescaling by 0 is not allowed", self.expression, scale_position)
                self.expect(")")
                summands = [s.rescale(scale) for s in summands]
            return summands
        raise self.error("expected a lattice name, <a> or k*term")

    def named(self, name: str, position: int) -> List[Summand]:
        letter, digits = name[0], name[1:]
        if name == "K3":
            return [Summand("U")] * 3 + [Summand("E", 8, -1)] * 2
        if letter == "U" and not digits:
            return [Summand("U")]
        if letter in "ADE" and digits:
            index = int(digits)
            if letter == "A" and index < 1:
                raise LatticeParseError(f"A_{index} needs m >= 1", self.expression, position)
            if letter == "D" and index < 4:
                raise LatticeParseError(f"D_{index} needs n >= 4", self.expression, position)
            if letter == "E" and index not in (6, 7, 8):
                raise LatticeParseError(f"E_{index} needs l in 6, 7, 8", self.expression, position)
            return [Summand(letter, index)]
        raise LatticeParseError(f"unknown lattice {name!r}", self.expression, position)


def parse_terms(expression: str) -> List[Summand]:
    """
    Parse an expression into its flat list of orthogonal summands.
    """
    return _Parser(expression).expression_()


def format_terms(summands: Sequence[Summand]) -> str:
    """
    Canonical text of a summand list; runs of equal summands become ``k*X``.
    """
    parts = []
    i = 0
    while i < len(summands):
        j = i
        while j < len(summands) and summands[j] == summands[i]:
            j += 1
        count = j - i
        parts.append(str(summands[i]) if count == 1 else f"{count}*{summands[i]}")
        i = j
    return "+".join(parts)


class Lattice:
    """
    A lattice given by its Gram matrix.

    args:
        gram: symmetric integer matrix
        label: the expression the lattice was built from, if any
        summands: orthogonal summands in the order of the Gram blocks
        embedding: basis rows in ambient coordinates, for sublattices
    """

    def __init__(self,
                 gram: Matrix,
                 label: Optional[str] = None,
                 summands: Optional[List[Summand]] = None,
                 embedding: Optional[IntMatrix] = None):
        gram = [[int(x) for x in row] for row in gram]
        if not is_symmetric(gram):
            raise LatticeError("Gram matrix is not symmetric")
        self.gram: IntMatrix = gram
        self.label = label
        self.summands = summands
        self.embedding = embedding
        self._disc: Optional[int] = None
        self._inertia: Optional[Tuple[int, int, int]] = None

    @classmethod
    def from_summands(cls, summands: List[Summand]) -> 'Lattice':
        return cls(block_diagonal(*[s.gram() for s in summands]), format_terms(summands), list(summands))

    @property
    def rank(self) -> int:
        return len(self.gram)

    def disc(self) -> int:
        if self._disc is None:
            self._disc = int(determinant(self.gram))
        return self._disc

    def _get_inertia(self) -> Tuple[int, int, int]:
        if self._inertia is None:
            self._inertia = inertia(self.gram)
        return self._inertia

    def signature(self) -> Signature:
        """
        returns:
            (t+, t-); a degenerate lattice reports its nullity separately
        """
        positive, negative, _ = self._get_inertia()
        return positive, negative

    def nullity(self) -> int:
        return self._get_inertia()[2]

    def is_nondegenerate(self) -> bool:
        return self.disc() != 0

    def is_even(self) -> bool:
        return all(self.gram[i][i] % 2 == 0 for i in range(self.rank))

    def is_unimodular(self) -> bool:
        return abs(self.disc()) == 1

    def pairing(self, x: Sequence[int], y: Sequence[int]) -> int:
        return sum(x[i] * self.gram[i][j] * y[j] for i in range(self.rank) for j in range(self.rank))

    def __str__(self):
        return self.label if self.label is not None else f"Lattice(rank={self.rank})"

    def __repr__(self):
        return f"<Lattice {str(self)!r} rank={self.rank}>"

    def __eq__(self, other):
        return isinstance(other, Lattice) and self.gram == other.gram

    def __hash__(self):
        return hash(tuple(map(tuple, self.gram)))

    def to_json(self) -> dict:
        data: dict = {"gram": self.gram}
        if self.label is not None:
            data["expr"] = self.label
        return data

    @classmethod
    def from_json(cls, data: dict) -> 'Lattice':
        if "expr" in data:
            lattice = parse_lattice(data["expr"])
            if "gram" in data and [list(row) for row in data["gram"]] != lattice.gram:
                raise LatticeError(f"gram does not match expression {data['expr']!r}")
            return lattice
        if "gram" in data:
            return cls(data["gram"])
        raise LatticeError("lattice JSON needs 'expr' or 'gram'")


def parse_lattice(expression: str) -> Lattice:
    """
    Build the block diagonal lattice described by ``expression``.
    """
    return Lattice.from_summands(parse_terms(expression))


def direct_sum(first: Lattice, second: Lattice) -> Lattice:
    label = None
    summands = None
    if first.label is not None and second.label is not None:
        label = f"{first.label}+{second.label}"
    if first.summands is not None and second.summands is not None:
        summands = first.summands + second.summands
        label = format_terms(summands)
    return Lattice(block_diagonal(first.gram, second.gram), label, summands)


def rescale(lattice: Lattice, n: int) -> Lattice:
    if n == 0:
        raise LatticeError("rescaling by 0 is not allowed")
    summands = None
    label = None
    if lattice.summands is not None:
        summands = [s.rescale(n) for s in lattice.summands]
        label = format_terms(summands)
    return Lattice([[n * x for x in row] for row in lattice.gram], label, summands)


def sublattice(ambient: Lattice, basis: Matrix, label: Optional[str] = None) -> Lattice:
    """
    The lattice spanned by the rows of ``basis`` with the restricted form.
    """
    basis = [[int(x) for x in row] for row in basis]
    gram = matmul(matmul(basis, ambient.gram), transpose(basis)) if basis else []
    return Lattice(gram, label, embedding=basis)


def orthogonal_complement(ambient: Lattice, sub_basis: Matrix) -> Lattice:
    """
    The primitive sublattice of vectors orthogonal to every row of ``sub_basis``.
    """
    if sub_basis and rational_rank(sub_basis) != len(sub_basis):
        raise LatticeError("rows of the sub basis are linearly dependent")
    constraints = matmul(sub_basis, ambient.gram) if sub_basis else []
    kernel = saturated_kernel(constraints, ambient.rank)
    logger.debug(f"complement of rank {len(kernel)} inside {ambient}")
    return sublattice(ambient, kernel)


def summand_basis(lattice: Lattice, position: int) -> IntMatrix:
    """
    Basis rows of the ``position``-th summand inside a lattice built from summands.
    """
    if lattice.summands is None:
        raise LatticeError(f"{lattice} has no summand structure")
    offset = sum(len(s.base_gram()) for s in lattice.summands[:position])
    size = len(lattice.summands[position].base_gram())
    return [[int(j == offset + i) for j in range(lattice.rank)] for i in range(size)]
