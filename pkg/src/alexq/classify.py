"""End-to-end classification of Alexander quandles of a given order.

For every abelian carrier of the order and every conjugacy class of its
automorphism group, the pipeline computes the image module of 1 - t and
merges structures whose images are isomorphic; each merged class is one
isomorphism class of quandles. Images are bucketed by cheap invariants
(order, carrier factors, action cycle type, size of the iterated image)
so the pairwise isomorphism test only runs within small buckets.

Per-carrier results (conjugacy representatives and their images) are cached
on disk as JSON keyed by carrier and code version; ALEXQ_CACHE overrides
the default ./.alexq-cache directory and entries are safe to delete.
"""

from __future__ import annotations

import json
import os
import tempfile
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from ._version import __version__
from .abelian import AbelianGroup, enumerate_groups
from .autgroup import (
    DEFAULT_ENUMERATION_BUDGET,
    Automorphism,
    conjugacy_representatives,
    enumerate_automorphisms,
    parse_phi_spec,
)
from .errors import ConsistencyError
from .lambda_modules import (
    LambdaModule,
    _image_set,
    canonical_label,
    image_one_minus_t,
    is_lambda_isomorphic,
    parse_module_spec,
)
from . import polymod
from .quandle import alexander_table, brute_force_isomorphic, orbits

Member = tuple[AbelianGroup, Automorphism]


@dataclass(frozen=True)
class QuandleClass:
    """One isomorphism class, named by its image module."""

    id: int
    image_label: str
    image: LambdaModule
    connected: bool
    members: tuple[Member, ...]

    @property
    def representative(self) -> Member:
        return self.members[0]


@dataclass(frozen=True)
class ClassificationReport:
    order: int
    classes: tuple[QuandleClass, ...]
    per_group_counts: dict[str, int]
    totals: tuple[int, int]  # (classes, connected)


# --- per-carrier work and its cache --------------------------------------


def _cache_path(cache_dir: Path, carrier: AbelianGroup) -> Path:
    name = carrier.spec().replace(",", "-")
    return cache_dir / f"carrier-{name}-v{__version__}.json"


def _load_cached(path: Path, carrier: AbelianGroup) -> dict | None:
    try:
        payload = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, ValueError):
        return None
    if (
        not isinstance(payload, dict)
        or payload.get("carrier") != carrier.spec()
        or payload.get("version") != __version__
        or not isinstance(payload.get("reps"), list)
        or not isinstance(payload.get("images"), list)
        or len(payload["reps"]) != len(payload["images"])
    ):
        return None
    return payload


def _store_cached(path: Path, payload: dict) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            json.dump(payload, fh)
        os.replace(tmp, path)
    except OSError:
        # caching is best effort; recomputation is always possible
        try:
            os.unlink(tmp)
        except OSError:
            pass


def _payload_parses(carrier: AbelianGroup, payload: dict) -> bool:
    try:
        for rep_spec, image_spec in zip(payload["reps"], payload["images"]):
            parse_phi_spec(carrier, rep_spec)
            parse_module_spec(image_spec)
    except (ValueError, KeyError, TypeError):
        return False
    return True


def _carrier_payload(
    factors: tuple[int, ...], budget: int, cache_dir: str | None
) -> dict:
    """Conjugacy representatives and their images for one carrier.

    Returns plain strings so the payload survives process boundaries and
    the JSON cache identically.
    """
    carrier = AbelianGroup(factors)
    path = _cache_path(resolve_cache_dir(cache_dir), carrier)
    cached = _load_cached(path, carrier)
    if cached is not None and _payload_parses(carrier, cached):
        return cached
    reps = conjugacy_representatives(carrier, budget)
    images = [
        image_one_minus_t(LambdaModule(carrier, rep)).spec() for rep in reps
    ]
    payload = {
        "carrier": carrier.spec(),
        "version": __version__,
        "reps": [rep.spec() for rep in reps],
        "images": images,
    }
    _store_cached(path, payload)
    return payload


def resolve_cache_dir(cache_dir: str | None) -> Path:
    return Path(cache_dir or os.environ.get("ALEXQ_CACHE") or ".alexq-cache")


# --- merging --------------------------------------------------------------


def _member_sort_key(member: Member):
    group, phi = member
    return (len(group.factors), group.factors, phi.images)


def classify_order(
    order: int,
    *,
    jobs: int = 1,
    budget: int = DEFAULT_ENUMERATION_BUDGET,
    cache_dir: str | None = None,
) -> ClassificationReport:
    """Classify every Alexander quandle structure of the given order.

    `jobs` > 1 distributes carriers over worker processes; the merge is a
    deterministic reduction, so reports are identical for any job count.
    """
    if order < 1:
        raise ValueError(f"order must be positive, got {order}")
    carriers = enumerate_groups(order)
    payloads: dict[tuple[int, ...], dict] = {}
    if jobs <= 1:
        for G in carriers:
            payloads[G.factors] = _carrier_payload(G.factors, budget, cache_dir)
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = {
                G.factors: pool.submit(_carrier_payload, G.factors, budget, cache_dir)
                for G in carriers
            }
            for factors, future in futures.items():
                payloads[factors] = future.result()

    classes: list[dict] = []
    buckets: dict[tuple, list[int]] = {}
    for G in carriers:
        payload = payloads[G.factors]
        for rep_spec, image_spec in zip(payload["reps"], payload["images"]):
            rep = parse_phi_spec(G, rep_spec)
            image = parse_module_spec(image_spec)
            key = (
                image.order,
                image.group.factors,
                image.t.cycle_type(),
                len(_image_set(image)),
            )
            for ci in buckets.get(key, ()):
                if is_lambda_isomorphic(classes[ci]["image"], image) is not None:
                    classes[ci]["members"].append((G, rep))
                    break
            else:
                buckets.setdefault(key, []).append(len(classes))
                classes.append({"image": image, "members": [(G, rep)]})

    labeled = []
    for entry in classes:
        image = entry["image"]
        labeled.append(
            {
                "image": image,
                "label": canonical_label(image),
                "members": tuple(sorted(entry["members"], key=_member_sort_key)),
            }
        )
    seen_labels = {}
    for entry in labeled:
        dup = seen_labels.get(entry["label"])
        if dup is not None:
            raise ConsistencyError(
                f"two non-isomorphic classes share label {entry['label']!r}"
            )
        seen_labels[entry["label"]] = entry

    labeled.sort(key=lambda e: (e["image"].order, e["label"]))
    quandle_classes = tuple(
        QuandleClass(
            id=i + 1,
            image_label=entry["label"],
            image=entry["image"],
            connected=entry["image"].order == order,
            members=entry["members"],
        )
        for i, entry in enumerate(labeled)
    )
    per_group_counts = {
        G.spec(): sum(
            1
            for qc in quandle_classes
            if any(member[0] == G for member in qc.members)
        )
        for G in carriers
    }
    totals = (len(quandle_classes), sum(1 for qc in quandle_classes if qc.connected))
    return ClassificationReport(
        order=order,
        classes=quandle_classes,
        per_group_counts=per_group_counts,
        totals=totals,
    )


# --- route cross-validation ----------------------------------------------


@dataclass(frozen=True)
class CrossValidation:
    order: int
    p: int
    k: int
    spec_count: int
    class_count: int
    ok: bool
    detail: str
    matching: tuple[tuple[str, str], ...]  # (polynomial chain, representative)


def _prime_power(order: int) -> tuple[int, int] | None:
    if order < 2:
        return None
    p = 2
    n = order
    while p * p <= n:
        if n % p == 0:
            k = 0
            while n % p == 0:
                n //= p
                k += 1
            return (p, k) if n == 1 else None
        p += 1
    return (n, 1)


def cross_validate(
    order: int, *, budget: int = DEFAULT_ENUMERATION_BUDGET
) -> CrossValidation:
    """Check the two routes agree on the elementary abelian carrier.

    The polynomial divisor chains and the conjugacy-class representatives
    each enumerate all module structures on (Z_p)^k up to isomorphism; this
    matches them one-to-one and reports any structure either side misses.
    """
    pk = _prime_power(order)
    if pk is None:
        raise ValueError(f"cross-validation needs a prime power order, got {order}")
    p, k = pk
    G = AbelianGroup((p,) * k)
    reps = conjugacy_representatives(G, budget)
    rep_modules = [LambdaModule(G, rep) for rep in reps]
    specs = polymod.enumerate_specs(p, k)

    matching = []
    matched_reps = set()
    for spec in specs:
        built = polymod.build(spec)
        hits = [
            i
            for i, M in enumerate(rep_modules)
            if is_lambda_isomorphic(built, M) is not None
        ]
        if len(hits) != 1:
            return CrossValidation(
                order, p, k, len(specs), len(rep_modules), False,
                f"chain {spec} matched {len(hits)} representative classes",
                tuple(matching),
            )
        matched_reps.add(hits[0])
        matching.append((str(spec), reps[hits[0]].spec()))
    if len(matched_reps) != len(rep_modules):
        missing = sorted(set(range(len(rep_modules))) - matched_reps)
        return CrossValidation(
            order, p, k, len(specs), len(rep_modules), False,
            f"{len(missing)} representative classes matched no chain "
            f"(first: {reps[missing[0]].spec()})",
            tuple(matching),
        )
    return CrossValidation(
        order, p, k, len(specs), len(rep_modules), True,
        f"{len(specs)} chains matched {len(rep_modules)} classes one-to-one",
        tuple(matching),
    )


# --- small-order sweep with oracle validation ------------------------------

ORACLE_VALIDATION_MAX_ORDER = 8


def oracle_class_counts(
    order: int, budget: int = DEFAULT_ENUMERATION_BUDGET
) -> tuple[int, int]:
    """(classes, connected) by partitioning all Cayley tables of the order.

    Independent of the image criterion: every structure's table is compared
    against the class representatives with the brute-force oracle.
    """
    reps = []
    connected = []
    for G in enumerate_groups(order):
        for phi in enumerate_automorphisms(G, budget):
            Q = alexander_table(LambdaModule(G, phi))
            for R in reps:
                if brute_force_isomorphic(Q, R) is not None:
                    break
            else:
                reps.append(Q)
                connected.append(len(orbits(Q)) == 1)
    return len(reps), sum(connected)


def classify_range(
    lo: int,
    hi: int,
    *,
    jobs: int = 1,
    budget: int = DEFAULT_ENUMERATION_BUDGET,
    cache_dir: str | None = None,
    oracle_validate: bool = True,
) -> tuple[tuple[int, int, int], ...]:
    """(order, classes, connected) for each order in [lo, hi].

    Orders up to 8 are additionally re-counted with the table-level oracle;
    a disagreement raises ConsistencyError.
    """
    if lo < 1 or hi < lo:
        raise ValueError(f"bad range [{lo}, {hi}]")
    results = []
    for order in range(lo, hi + 1):
        report = classify_order(order, jobs=jobs, budget=budget, cache_dir=cache_dir)
        n_classes, n_connected = report.totals
        if oracle_validate and order <= ORACLE_VALIDATION_MAX_ORDER:
            oracle_counts = oracle_class_counts(order, budget)
            if oracle_counts != (n_classes, n_connected):
                raise ConsistencyError(
                    f"order {order}: classifier found {report.totals}, "
                    f"oracle found {oracle_counts}"
                )
        results.append((order, n_classes, n_connected))
    return tuple(results)
