"""Abelian extensions of a table by a cyclic group through a 2-cocycle, the
machine check that an extension inherits an inner identity exactly when the
cocycle kills the attached 2-cycles, and the type-preservation survey.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .chains import identity_cycle
from .core import QuandleTable, inner_representation, is_connected, \
    make_table, quandle_type
from .errors import BaseDoesNotSatisfy, InvalidCocycle
from .homology import CocycleTable, cocycle_condition_holds, evaluate_cocycle
from .identities import Assignment, Word, satisfies, satisfies_cached


@dataclass(frozen=True)
class ExtensionSpec:
    """Base table, cyclic modulus, and the cocycle defining the extension."""

    base: QuandleTable
    modulus: int
    cocycle: CocycleTable

    def __post_init__(self):
        if self.modulus < 2:
            raise InvalidCocycle("modulus must be >= 2")
        if self.cocycle.modulus != self.modulus:
            raise InvalidCocycle("cocycle modulus does not match the spec")
        if self.cocycle.order != self.base.order:
            raise InvalidCocycle("cocycle size does not match the base table")
        if not cocycle_condition_holds(self.base, self.cocycle, mode="rack"):
            raise InvalidCocycle("cocycle condition fails on the base table")


def pair_index(x: int, a: int, modulus: int) -> int:
    """(x, a) -> x*d + a, the documented element order of extensions."""
    return x * modulus + a


def extend(spec: ExtensionSpec) -> QuandleTable:
    """Table on base x Z_d with (x,a)*(y,b) = (x*y, a + phi(x,y)).

    The result is a quandle exactly when the base is one and the cocycle
    diagonal vanishes; otherwise it is still a rack.
    """
    n = spec.base.order
    d = spec.modulus
    T = spec.base.np_table
    phi = np.array(spec.cocycle.values, dtype=np.int64)
    # block structure over (x, a) rows and (y, b) cols; b never matters
    big = np.zeros((n * d, n * d), dtype=np.int64)
    a = np.arange(d, dtype=np.int64)
    for x in range(n):
        for y in range(n):
            vals = T[x, y] * d + (a + phi[x, y]) % d
            big[x * d:(x + 1) * d, y * d:(y + 1) * d] = vals[:, None]
    return make_table(big.tolist(), require="rack")


@dataclass(frozen=True)
class ExtensionIdentityReport:
    """Both sides of the inheritance equivalence for one extension and word."""

    word: Word
    extension_satisfies: bool
    cocycle_vanishes: bool
    failing_assignment: Optional[Assignment]
    nonzero_value_at: Optional[Assignment]

    @property
    def agree(self) -> bool:
        return self.extension_satisfies == self.cocycle_vanishes


def check_extension_identity(spec: ExtensionSpec, w: Word) -> ExtensionIdentityReport:
    """Compare satisfaction of x*w = x on the extension against vanishing of
    the cocycle on every attached 2-cycle of the base; the two must agree."""
    X = spec.base
    if not satisfies_cached(X, w):
        raise BaseDoesNotSatisfy(w)
    E = extend(spec)
    rep = satisfies(E, w)
    vanishes = True
    nonzero_at = None
    n = X.order
    for ys in itertools.product(range(n), repeat=w.letters):
        for x in range(n):
            assignment = Assignment(x, ys)
            cyc = identity_cycle(X, w, assignment)
            if evaluate_cocycle(spec.cocycle, cyc) != 0:
                vanishes = False
                nonzero_at = assignment
                break
        if not vanishes:
            break
    return ExtensionIdentityReport(
        word=w,
        extension_satisfies=rep.satisfied,
        cocycle_vanishes=vanishes,
        failing_assignment=rep.witness,
        nonzero_value_at=nonzero_at,
    )


@dataclass(frozen=True)
class TypeSurveyRow:
    label: str
    extension_connected: Optional[bool]
    type_base: int
    type_other: int
    match: bool


@dataclass(frozen=True)
class TypeSurveyReport:
    """Observed type comparisons; reported, never asserted."""

    connected_rows: tuple[TypeSurveyRow, ...]
    skipped_rows: tuple[TypeSurveyRow, ...]     # non-connected extensions
    inner_row: TypeSurveyRow

    @property
    def mismatches(self) -> list[TypeSurveyRow]:
        out = [r for r in self.connected_rows if not r.match]
        if not self.inner_row.match:
            out.append(self.inner_row)
        return out


def extension_type_survey(X: QuandleTable,
                          specs: Sequence[ExtensionSpec]) -> TypeSurveyReport:
    """type(E) vs type(X) for each connected extension, plus type(X) vs the
    type of the translation-image quandle."""
    t_base = quandle_type(X)
    connected_rows = []
    skipped = []
    for idx, spec in enumerate(specs):
        if spec.base != X:
            raise ValueError("survey specs must extend the surveyed table")
        E = extend(spec)
        conn = is_connected(E)
        row = TypeSurveyRow(
            label=f"extension[{idx}] d={spec.modulus}",
            extension_connected=conn,
            type_base=t_base,
            type_other=quandle_type(E),
            match=quandle_type(E) == t_base,
        )
        (connected_rows if conn else skipped).append(row)
    img, _ = inner_representation(X)
    inner_row = TypeSurveyRow(
        label="translation image",
        extension_connected=None,
        type_base=t_base,
        type_other=quandle_type(img),
        match=quandle_type(img) == t_base,
    )
    return TypeSurveyReport(connected_rows=tuple(connected_rows),
                            skipped_rows=tuple(skipped),
                            inner_row=inner_row)
