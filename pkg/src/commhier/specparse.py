"""Parser for the group-spec mini-language.

Grammar (whitespace insignificant):

    spec       := name "(" args ")" | "quaternion8"
    name       := cyclic | abelian | dihedral | symmetric | heisenberg
                | product | semidirect
    abelian    := "abelian" "(" ( int | "[" int ("," int)* "]" ) ")"
    product    := "product" "(" spec "," spec ")"
    semidirect := "semidirect" "(" spec ";" spec ";" action ")"
    action     := "inversion" | matrix ("," matrix)*
    matrix     := "[" row ("," row)* "]"
    row        := "[" int ("," int)* "]"

The first spec of a semidirect (the normal part A) and the second (the
acting part K) must both be cyclic or abelian.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from . import groups
from .errors import InvalidSpec, ParseError
from .groups import FiniteGroup, SemidirectProduct

_TOKEN_RE = re.compile(r"\s*(?:(?P<int>-?\d+)|(?P<name>[A-Za-z_]\w*)"
                       r"|(?P<punct>[()\[\],;]))")


@dataclass(frozen=True)
class GroupSpec:
    """Parsed constructor descriptor."""

    kind: str
    args: tuple = ()

    def __str__(self) -> str:
        if self.kind == "quaternion8":
            return "quaternion8"
        if self.kind in ("cyclic", "dihedral", "symmetric", "heisenberg"):
            return f"{self.kind}({self.args[0]})"
        if self.kind == "abelian":
            return f"abelian([{','.join(map(str, self.args[0]))}])"
        if self.kind == "product":
            return f"product({self.args[0]}, {self.args[1]})"
        if self.kind == "semidirect":
            mats = ",".join(
                "[" + ",".join("[" + ",".join(map(str, row)) + "]"
                               for row in matrix) + "]"
                for matrix in self.args[2])
            return f"semidirect({self.args[0]}; {self.args[1]}; {mats})"
        raise InvalidSpec(f"unknown spec kind {self.kind!r}")


class _Tokens:
    def __init__(self, text: str):
        self.text = text
        self.items: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            match = _TOKEN_RE.match(text, pos)
            if match is None or match.end() == match.start():
                stripped = text[pos:].lstrip()
                if not stripped:
                    break
                raise ParseError(
                    f"unexpected character {stripped[0]!r}",
                    len(text) - len(stripped))
            kind = match.lastgroup
            self.items.append((kind, match.group(kind), match.start(kind)))
            pos = match.end()
        self.index = 0

    def peek(self):
        if self.index < len(self.items):
            return self.items[self.index]
        return ("eof", "", len(self.text))

    def next(self, expect_kind=None, expect_value=None):
        kind, value, pos = self.peek()
        if expect_kind is not None and kind != expect_kind:
            raise ParseError(f"expected {expect_kind}, got {value or 'end'}",
                             pos, expected=(expect_kind,))
        if expect_value is not None and value != expect_value:
            raise ParseError(f"expected {expect_value!r}, got "
                             f"{value or 'end'!r}", pos,
                             expected=(expect_value,))
        self.index += 1
        return kind, value, pos


def parse_spec(text: str) -> GroupSpec:
    if not text or not text.strip():
        raise ParseError("empty spec", 0)
    tokens = _Tokens(text)
    spec = _parse_spec(tokens)
    kind, value, pos = tokens.peek()
    if kind != "eof":
        raise ParseError(f"trailing input {value!r}", pos)
    return spec


def _parse_spec(tokens: _Tokens) -> GroupSpec:
    kind, name, pos = tokens.next("name")
    if name == "quaternion8":
        return GroupSpec("quaternion8")
    if name not in ("cyclic", "abelian", "dihedral", "symmetric",
                    "heisenberg", "product", "semidirect"):
        raise ParseError(f"unknown constructor {name!r}", pos,
                         expected=("cyclic", "abelian", "dihedral",
                                   "symmetric", "heisenberg", "product",
                                   "semidirect", "quaternion8"))
    tokens.next("punct", "(")
    if name in ("cyclic", "dihedral", "symmetric", "heisenberg"):
        value = int(tokens.next("int")[1])
        tokens.next("punct", ")")
        return GroupSpec(name, (value,))
    if name == "abelian":
        if tokens.peek()[0] == "int":
            factors = (int(tokens.next("int")[1]),)
        else:
            factors = tuple(_parse_int_list(tokens))
        tokens.next("punct", ")")
        return GroupSpec("abelian", (factors,))
    if name == "product":
        left = _parse_spec(tokens)
        tokens.next("punct", ",")
        right = _parse_spec(tokens)
        tokens.next("punct", ")")
        return GroupSpec("product", (left, right))
    # semidirect
    a_spec = _parse_spec(tokens)
    tokens.next("punct", ";")
    k_spec = _parse_spec(tokens)
    tokens.next("punct", ";")
    matrices = _parse_action(tokens, a_spec, k_spec)
    tokens.next("punct", ")")
    return GroupSpec("semidirect", (a_spec, k_spec, matrices))


def _parse_int_list(tokens: _Tokens) -> list[int]:
    tokens.next("punct", "[")
    values = [int(tokens.next("int")[1])]
    while tokens.peek()[1] == ",":
        tokens.next()
        values.append(int(tokens.next("int")[1]))
    tokens.next("punct", "]")
    return values


def _parse_action(tokens: _Tokens, a_spec: GroupSpec,
                  k_spec: GroupSpec) -> tuple:
    kind, value, pos = tokens.peek()
    if kind == "name" and value == "inversion":
        tokens.next()
        rank = len(_abelian_factors(a_spec))
        gens = len(_abelian_factors(k_spec))
        negation = tuple(tuple(-1 if i == j else 0 for j in range(rank))
                         for i in range(rank))
        return (negation,) * gens
    matrices = [_parse_matrix(tokens)]
    while tokens.peek()[1] == ",":
        tokens.next()
        matrices.append(_parse_matrix(tokens))
    return tuple(matrices)


def _parse_matrix(tokens: _Tokens) -> tuple:
    tokens.next("punct", "[")
    rows = [tuple(_parse_int_list(tokens))]
    while tokens.peek()[1] == ",":
        tokens.next()
        rows.append(tuple(_parse_int_list(tokens)))
    tokens.next("punct", "]")
    return tuple(rows)


def _abelian_factors(spec: GroupSpec) -> list[int]:
    if spec.kind == "cyclic":
        return [spec.args[0]]
    if spec.kind == "abelian":
        return list(spec.args[0])
    raise InvalidSpec(
        f"semidirect factors must be cyclic or abelian, got {spec.kind}")


def build_extension(spec: GroupSpec) -> SemidirectProduct:
    if spec.kind != "semidirect":
        raise InvalidSpec(f"not a semidirect spec: {spec}")
    a_spec, k_spec, matrices = spec.args
    return groups.semidirect(_abelian_factors(a_spec),
                             _abelian_factors(k_spec), matrices)


def make_group(spec: GroupSpec) -> FiniteGroup:
    """Construct the FiniteGroup described by a parsed spec."""
    if spec.kind == "cyclic":
        return groups.cyclic(spec.args[0])
    if spec.kind == "abelian":
        return groups.abelian(spec.args[0])
    if spec.kind == "dihedral":
        return groups.dihedral(spec.args[0])
    if spec.kind == "symmetric":
        return groups.symmetric(spec.args[0])
    if spec.kind == "heisenberg":
        return groups.heisenberg(spec.args[0])
    if spec.kind == "quaternion8":
        return groups.quaternion8()
    if spec.kind == "product":
        return groups.product(make_group(spec.args[0]),
                              make_group(spec.args[1]))
    if spec.kind == "semidirect":
        return build_extension(spec).group
    raise InvalidSpec(f"unknown spec kind {spec.kind!r}")
