"""Witness records: the unit stored in the cache and printed by the CLI."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .graph import Graph, decode_graph6
from .interval import ValueInterval
from .solvers import chromatic_number, clique_number, independence_number


class Kind(str, Enum):
    OMEGA_NK = "omega_nk"
    QNC = "qnc"
    RAMSEY_WITNESS = "ramsey_witness"


class Method(str, Enum):
    BRUTE_FORCE = "brute_force"
    TABLE = "table"
    CONSTRUCTION = "construction"
    LOCAL_SEARCH = "local_search"


class CertificationError(AssertionError):
    pass


@dataclass(frozen=True)
class WitnessRecord:
    kind: Kind
    params: tuple[int, ...]
    value: ValueInterval
    witness_g6: str | None = None
    method: Method = Method.BRUTE_FORCE
    extra: dict = field(default_factory=dict, compare=False)

    @property
    def key(self) -> tuple[str, tuple[int, ...]]:
        return (self.kind.value, self.params)

    def witness(self) -> Graph | None:
        return None if self.witness_g6 is None else decode_graph6(self.witness_g6)

    def certify(self) -> None:
        """Recompute the witness invariants and check the claim they support.

        * ``omega_nk`` (n, k): n vertices, alpha <= k, omega == value.hi.
        * ``qnc`` (n, c): n vertices, chi == c, omega == value.hi.
        * ``ramsey_witness`` (n, k, target): n vertices, alpha <= k,
          omega == value.hi <= target.
        """
        g = self.witness()
        if g is None:
            return
        n = self.params[0]
        if g.n != n:
            raise CertificationError(f"{self.key}: witness has {g.n} vertices, expected {n}")
        omega = clique_number(g)
        if self.value.hi is None or omega != self.value.hi:
            raise CertificationError(f"{self.key}: witness omega={omega} does not match {self.value}")
        if self.kind is Kind.QNC:
            chi = chromatic_number(g)
            if chi != self.params[1]:
                raise CertificationError(f"{self.key}: witness chi={chi}")
        else:
            alpha = independence_number(g)
            if alpha > self.params[1]:
                raise CertificationError(f"{self.key}: witness alpha={alpha} > {self.params[1]}")
            if self.kind is Kind.RAMSEY_WITNESS and omega > self.params[2]:
                raise CertificationError(f"{self.key}: witness omega={omega} > {self.params[2]}")

    def to_json(self) -> dict:
        out = {
            "kind": self.kind.value,
            "params": list(self.params),
            "value": self.value.to_json(),
            "witness_g6": self.witness_g6,
            "method": self.method.value,
        }
        if self.extra:
            out["extra"] = self.extra
        return out

    @classmethod
    def from_json(cls, data: dict) -> WitnessRecord:
        return cls(
            kind=Kind(data["kind"]),
            params=tuple(int(x) for x in data["params"]),
            value=ValueInterval.from_json(data["value"]),
            witness_g6=data.get("witness_g6"),
            method=Method(data["method"]),
            extra=data.get("extra", {}),
        )
