"""Named ambients and subalgebras used by the CLI and the test-suite.

Ambient shorthands (``<G>`` is a group name such as ``S3``, ``D4``, ``Q8``,
``C2xC2``):

    group:<G>        kG                      subs: subgroup:<gens>, identity
    dual:<G>         (kG)*                   subs: identity
    double:<G>       D(kG) = (kG)*^cop >< kG subs: group-side, dual-side
    heisenberg:<G>   (kG)* # kG              subs: group-side
    tensor:<G>       kG^cop >< kG, trivial actions (trivially paired double)
                                             subs: second (= group-side), first
    paired:<G>       double from the canonical pairing of kG with (kG)*
                                             subs: second, first
    sweedler         Sweedler's 4-dimensional Hopf algebra
    double:sweedler  its Drinfeld double
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .algebra import AlgebraError, StructureAlgebra, SubalgebraEmbedding
from .depth import DepthProblem
from .groups import FiniteGroup, builtin_group, generated_subgroup
from .hopf import (HopfEmbedding, HopfStructure, dual_hopf, group_hopf, induced_hopf_embedding,
                   sweedler)
from .products import (DoubleCrossProduct, SmashProduct, canonical_pairing, drinfeld_double,
                       heisenberg_double, paired_dcp, trivial_pairing)


class CatalogError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class Ambient:
    key: str
    kind: str
    algebra: StructureAlgebra
    hopf: HopfStructure | None = None
    dcp: DoubleCrossProduct | None = None
    smash: SmashProduct | None = None
    group: FiniteGroup | None = None


@lru_cache(maxsize=None)
def ambient(key: str) -> Ambient:
    kind, _, arg = key.partition(":")
    if kind == "sweedler" and not arg:
        H = sweedler()
        return Ambient(key, "hopf", H.alg, hopf=H)
    if kind == "double" and arg == "sweedler":
        D = drinfeld_double(sweedler())
        return Ambient(key, "double", D.hopf.alg, hopf=D.hopf, dcp=D)
    if not arg:
        raise CatalogError(f"ambient {key!r} needs a group, e.g. {kind}:S3")
    try:
        G = builtin_group(arg)
    except ValueError as exc:
        raise CatalogError(str(exc)) from None
    H = group_hopf(G)
    if kind == "group":
        return Ambient(key, "group", H.alg, hopf=H, group=G)
    if kind == "dual":
        Hd = dual_hopf(H)
        return Ambient(key, "dual", Hd.alg, hopf=Hd, group=G)
    if kind == "double":
        D = drinfeld_double(H)
        return Ambient(key, "double", D.hopf.alg, hopf=D.hopf, dcp=D, group=G)
    if kind == "heisenberg":
        S = heisenberg_double(H)
        return Ambient(key, "heisenberg", S.algebra, smash=S, group=G)
    if kind == "tensor":
        D = paired_dcp(trivial_pairing(H, H), f"k{G.name}^cop><k{G.name}")
        return Ambient(key, "paired-trivial", D.hopf.alg, hopf=D.hopf, dcp=D, group=G)
    if kind == "paired":
        D = paired_dcp(canonical_pairing(H))
        return Ambient(key, "paired", D.hopf.alg, hopf=D.hopf, dcp=D, group=G)
    raise CatalogError(f"unknown ambient kind {kind!r}")


def problem(amb_spec: str, sub_spec: str) -> DepthProblem:
    amb = ambient(amb_spec)
    label = f"{sub_spec} < {amb_spec}"
    if amb.dcp is not None:
        D = amb.dcp
        side = {"group-side": "second", "dual-side": "first",
                "second": "second", "first": "first"}.get(sub_spec)
        if side is None:
            raise CatalogError(f"{amb_spec} admits subs group-side/dual-side (or first/second)")
        pe = D.second_embedding if side == "second" else D.first_embedding
        return DepthProblem(label, pe.emb, pair=pe, dcp=D, side=side,
                            factorization=D.factorization if side == "second" else None,
                            sub_hopf=D.second if side == "second" else None,
                            kind="double" if amb.kind == "double" else amb.kind)
    if amb.smash is not None:
        if sub_spec not in ("group-side", "second"):
            raise CatalogError(f"{amb_spec} admits the sub group-side")
        S = amb.smash
        return DepthProblem(label, S.embed_hopf, factorization=S.factorization,
                            sub_hopf=S.hopf, kind="heisenberg")
    H = amb.hopf
    if sub_spec == "identity":
        pe = induced_hopf_embedding(H, [{i: 1} for i in range(H.dim)], H.labels, H.name)
        return DepthProblem(label, pe.emb, pair=pe)
    if sub_spec.startswith("subgroup:") and amb.kind == "group":
        G = amb.group
        names = [x for x in sub_spec[len("subgroup:"):].split(",") if x]
        try:
            els = generated_subgroup(G, [G.index(x) for x in names])
        except ValueError as exc:
            raise CatalogError(str(exc)) from None
        pe = induced_hopf_embedding(H, [{e: 1} for e in els], [G.names[e] for e in els],
                                    f"k<{','.join(names)}>")
        return DepthProblem(label, pe.emb, pair=pe)
    raise CatalogError(f"unknown sub {sub_spec!r} for {amb_spec}")


# ambient, sub, expected minimum depth (None: not pinned here)
CATALOG = (
    ("double:C2", "group-side"), ("double:C2", "dual-side"),
    ("double:C3", "group-side"), ("double:C3", "dual-side"),
    ("double:C4", "group-side"), ("double:C4", "dual-side"),
    ("double:C2xC2", "group-side"), ("double:C2xC2", "dual-side"),
    ("double:S3", "group-side"), ("double:S3", "dual-side"),
    ("double:D4", "group-side"), ("double:D4", "dual-side"),
    ("double:Q8", "group-side"), ("double:Q8", "dual-side"),
    ("heisenberg:C2", "group-side"), ("heisenberg:C3", "group-side"),
    ("heisenberg:S3", "group-side"),
    ("tensor:C2", "second"), ("tensor:C2", "first"),
    ("tensor:S3", "second"), ("tensor:S3", "first"),
    ("paired:S3", "second"), ("paired:S3", "first"),
    ("group:S3", "subgroup:(12)"), ("group:S3", "subgroup:(123)"),
    ("group:S4", "subgroup:(12),(123)"), ("group:D4", "subgroup:r"),
    ("group:Q8", "subgroup:i"), ("group:C4", "subgroup:g2"),
    ("group:S3", "identity"),
)


def catalog_problems() -> list:
    return [problem(a, s) for a, s in CATALOG]
