"""Certificate types emitted by the cutset constructions.

A certificate carries everything needed to re-check the claim against the
graph alone: the vertex data plus the exact bounds that were promised.
Average-degree bounds are strict and kept as integer fractions.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import GraphError


@dataclass(frozen=True)
class GoodCutset:
    """A cutset with promised size / internal-degree / average bounds."""

    cutset: tuple[int, ...]
    size_bound: int | None = None
    degree_bound: int | None = None
    avg_bound_strict: tuple[int, int] | None = None
    require_minimal: bool = False


@dataclass(frozen=True)
class IndependentCutset:
    """A cutset inducing no edges at all."""

    cutset: tuple[int, ...]
    size_bound: int | None = None


@dataclass(frozen=True)
class KrrWitness:
    """A complete bipartite K_{r,r} subgraph: every side_a/side_b pair adjacent."""

    r: int
    side_a: tuple[int, ...]
    side_b: tuple[int, ...]


@dataclass(frozen=True)
class SquaredCycleIso:
    """An isomorphism onto a squared cycle, as the vertex order around it.

    order[i] is the vertex at cyclic position i; adjacency must match
    cyclic distance 1 or 2 exactly.
    """

    order: tuple[int, ...]


@dataclass(frozen=True)
class IsIcosahedron:
    """The graph is the icosahedron: order 12 and every neighborhood induces C5."""


Certificate = GoodCutset | IndependentCutset | KrrWitness | SquaredCycleIso | IsIcosahedron

_KINDS = {
    "good-cutset": GoodCutset,
    "independent-cutset": IndependentCutset,
    "krr-witness": KrrWitness,
    "squared-cycle-iso": SquaredCycleIso,
    "is-icosahedron": IsIcosahedron,
}


def certificate_kind(cert: Certificate) -> str:
    for kind, cls in _KINDS.items():
        if isinstance(cert, cls):
            return kind
    raise GraphError(f"unknown certificate type {type(cert).__name__}")


def certificate_to_dict(cert: Certificate) -> dict:
    """Stable JSON-ready form with a 'kind' tag and sorted-field payload."""
    out: dict = {"kind": certificate_kind(cert)}
    if isinstance(cert, GoodCutset):
        out["cutset"] = list(cert.cutset)
        out["size_bound"] = cert.size_bound
        out["degree_bound"] = cert.degree_bound
        out["avg_bound_strict"] = (
            list(cert.avg_bound_strict) if cert.avg_bound_strict else None
        )
        out["require_minimal"] = cert.require_minimal
    elif isinstance(cert, IndependentCutset):
        out["cutset"] = list(cert.cutset)
        out["size_bound"] = cert.size_bound
    elif isinstance(cert, KrrWitness):
        out["r"] = cert.r
        out["side_a"] = list(cert.side_a)
        out["side_b"] = list(cert.side_b)
    elif isinstance(cert, SquaredCycleIso):
        out["order"] = list(cert.order)
    return out


def certificate_from_dict(data: dict) -> Certificate:
    try:
        kind = data["kind"]
    except (TypeError, KeyError):
        raise GraphError("certificate payload must be an object with a 'kind' tag")
    if kind not in _KINDS:
        raise GraphError(f"unknown certificate kind {kind!r}")
    try:
        if kind == "good-cutset":
            avg = data.get("avg_bound_strict")
            return GoodCutset(
                cutset=tuple(data["cutset"]),
                size_bound=data.get("size_bound"),
                degree_bound=data.get("degree_bound"),
                avg_bound_strict=tuple(avg) if avg else None,
                require_minimal=bool(data.get("require_minimal", False)),
            )
        if kind == "independent-cutset":
            return IndependentCutset(
                cutset=tuple(data["cutset"]), size_bound=data.get("size_bound")
            )
        if kind == "krr-witness":
            return KrrWitness(
                r=int(data["r"]),
                side_a=tuple(data["side_a"]),
                side_b=tuple(data["side_b"]),
            )
        if kind == "squared-cycle-iso":
            return SquaredCycleIso(order=tuple(data["order"]))
        return IsIcosahedron()
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphError(f"malformed {kind} certificate: {exc}") from None
