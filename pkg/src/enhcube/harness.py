"""Sweep runner, verification report and graph export."""

from __future__ import annotations

import json
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Optional, Sequence

from . import oracle
from .embedder import admissible_lengths, embed_cycle
from .errors import ConfigurationError, EnhcubeError, ResourceError
from .oracle import validate_cycle
from .topology import Edge, Params, edges, is_bipartite, make_edge

log = logging.getLogger(__name__)

REPORT_SCHEMA = "enhcube.verification-report/1"
ORACLE_LEVELS = ("none", "bounds", "exhaustive")
# largest n each oracle level may be asked to sweep
LEVEL_MAX_N = {"none": 8, "bounds": oracle.BFS_MAX_N, "exhaustive": oracle.EXHAUSTIVE_MAX_N}
VERTEX_COVERAGE_MAX_N = 5
EXPORT_MAX_N = 10


@dataclass
class SweepConfig:
    n_min: int = 3
    n_max: int = 6
    k_values: Optional[Sequence[int]] = None  # None = every k in [1, n]
    lengths: Optional[Sequence[int]] = None  # None = every admissible length
    oracle_level: str = "bounds"
    parallelism: int = 1
    edge: Optional[tuple[int, int]] = None  # restrict to one edge (single-instance verify)

    def validate(self) -> None:
        if self.oracle_level not in ORACLE_LEVELS:
            raise ConfigurationError(f"unknown oracle level {self.oracle_level!r}")
        if self.n_min < 2 or self.n_max < self.n_min:
            raise ConfigurationError(f"bad n range [{self.n_min}, {self.n_max}]")
        limit = LEVEL_MAX_N[self.oracle_level]
        if self.n_max > limit:
            raise ConfigurationError(
                f"oracle level {self.oracle_level!r} supports n <= {limit}, asked for {self.n_max}"
            )
        if self.parallelism < 1:
            raise ConfigurationError("parallelism must be positive")
        if self.k_values is not None and any(k < 1 for k in self.k_values):
            raise ConfigurationError("k values must be positive")

    def instances(self) -> list[Params]:
        out = []
        for n in range(self.n_min, self.n_max + 1):
            ks = range(1, n + 1) if self.k_values is None else sorted(set(self.k_values))
            out.extend(Params(n, k) for k in ks if k <= n)
        return out


@dataclass
class Failure:
    kind: str
    detail: str
    reproduce: str


@dataclass
class InstanceRecord:
    n: int
    k: int
    bipartite: dict = field(default_factory=dict)
    odd_girth: dict = field(default_factory=dict)
    shortest_odd: list = field(default_factory=list)
    constructions: dict = field(default_factory=dict)
    spectra: dict = field(default_factory=dict)
    vertex_coverage: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)
    mismatches: int = 0


@dataclass
class VerificationReport:
    config: dict
    instances: list[InstanceRecord]
    schema: str = REPORT_SCHEMA

    @property
    def failure_count(self) -> int:
        return sum(len(r.failures) for r in self.instances)

    @property
    def mismatch_count(self) -> int:
        return sum(r.mismatches for r in self.instances)

    @property
    def verdict(self) -> str:
        return "pass" if self.failure_count == 0 and self.mismatch_count == 0 else "fail"

    def to_dict(self) -> dict:
        return {
            "schema": self.schema,
            "config": self.config,
            "instances": [asdict(r) for r in self.instances],
            "totals": {
                "instances": len(self.instances),
                "constructions_attempted": sum(
                    r.constructions.get("attempted", 0) for r in self.instances
                ),
                "constructions_validated": sum(
                    r.constructions.get("validated", 0) for r in self.instances
                ),
                "failures": self.failure_count,
                "mismatches": self.mismatch_count,
            },
            "verdict": self.verdict,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"


def _construct_cmd(p: Params, u: int, v: int, l: int) -> str:
    return f"enhcube construct --n {p.n} --k {p.k} --edge {p.label(u)},{p.label(v)} --length {l}"


def _verify_cmd(p: Params, u: int, v: int, level: str) -> str:
    return f"enhcube verify --n {p.n} --k {p.k} --edge {p.label(u)},{p.label(v)} --oracle {level}"


def _edge_task(args):
    """Build and validate every requested cycle through one edge.

    Returns (edge, attempted, succeeded, validated, failures, lengths_seen_by_vertex).
    """
    n, k, u, v, lengths, track_vertices = args
    p = Params(n, k)
    spec = admissible_lengths(p, (u, v))
    wanted = spec.lengths() if lengths is None else [l for l in lengths if l in spec]
    attempted = succeeded = validated = 0
    failures = []
    coverage = {}
    for l in wanted:
        attempted += 1
        try:
            c = embed_cycle(p, (u, v), l)
        except EnhcubeError as exc:
            failures.append(Failure("construction", str(exc), _construct_cmd(p, u, v, l)))
            continue
        succeeded += 1
        problems = validate_cycle(p, c, require_edge=(u, v), require_length=l)
        if problems:
            failures.append(Failure("validation", "; ".join(problems), _construct_cmd(p, u, v, l)))
            continue
        validated += 1
        if track_vertices:
            for w in c.vertices:
                coverage.setdefault(w, set()).add(l)
    return (u, v), attempted, succeeded, validated, failures, coverage


def _predicted_floor(p: Params, e: Edge) -> Optional[int]:
    return admissible_lengths(p, e).odd_floor


def _check_instance(p: Params, cfg: SweepConfig, pool) -> InstanceRecord:
    rec = InstanceRecord(p.n, p.k)
    level = cfg.oracle_level
    if cfg.edge is not None:
        edge_list = [make_edge(p, *cfg.edge)]
    else:
        edge_list = list(edges(p))

    # bipartiteness and odd girth
    closed = is_bipartite(p)
    rec.bipartite = {"closed_form": closed}
    predicted_girth = None if closed else p.k + 1
    rec.odd_girth = {"predicted": predicted_girth}
    if level != "none":
        bfs = oracle.check_bipartite_bfs(p)
        rec.bipartite.update(bfs=bfs, match=bfs == closed)
        if bfs != closed:
            rec.mismatches += 1
        measured = oracle.odd_girth(p)
        rec.odd_girth.update(measured=measured, match=measured == predicted_girth)
        if measured != predicted_girth:
            rec.mismatches += 1

    # constructions
    track = cfg.edge is None and p.n <= VERTEX_COVERAGE_MAX_N
    tasks = [(p.n, p.k, e.u, e.v, cfg.lengths, track) for e in edge_list]
    results = list(pool.map(_edge_task, tasks)) if pool else [_edge_task(t) for t in tasks]
    results.sort(key=lambda r: r[0])
    attempted = sum(r[1] for r in results)
    rec.constructions = {
        "edges": len(edge_list),
        "attempted": attempted,
        "succeeded": sum(r[2] for r in results),
        "validated": sum(r[3] for r in results),
    }
    for r in results:
        rec.failures.extend(asdict(f) for f in r[4])

    # vertex corollary
    if track:
        wanted = set(range(4, p.order + 1, 2))
        if not closed:
            wanted |= set(range(p.k + 1, p.order, 2))
        if cfg.lengths is not None:
            wanted &= set(cfg.lengths)
        seen: dict[int, set] = {}
        for r in results:
            for w, ls in r[5].items():
                seen.setdefault(w, set()).update(ls)
        uncovered = [w for w in range(p.order) if not wanted <= seen.get(w, set())]
        rec.vertex_coverage = {
            "vertices": p.order,
            "covered": p.order - len(uncovered),
            "lengths": sorted(wanted),
        }
        for w in uncovered[:5]:
            missing = sorted(wanted - seen.get(w, set()))
            rec.failures.append(
                asdict(
                    Failure(
                        "vertex-coverage",
                        f"vertex {p.label(w)} misses lengths {missing}",
                        _verify_cmd(p, w, w ^ 1, level),
                    )
                )
            )

    # shortest odd cycles per edge class
    if level != "none" and not closed:
        by_class: dict[str, dict] = {}
        for e in edge_list:
            bound = oracle.odd_cycle_lower_bound(p, e)
            if level == "exhaustive":
                measured = oracle.min_odd_cycle_through_edge(p, e)
            else:
                measured = _certify_by_witness(p, e, bound)
                if measured is None and p.n <= oracle.EXACT_MAX_N:
                    measured = oracle.min_odd_cycle_through_edge(p, e)
            predicted = _predicted_floor(p, e)
            entry = by_class.setdefault(
                str(e.cls),
                {"edge_class": str(e.cls), "edges": 0, "predicted": predicted,
                 "measured": [], "match": True},
            )
            entry["edges"] += 1
            if measured not in entry["measured"]:
                entry["measured"].append(measured)
            if measured != predicted:
                entry["match"] = False
                rec.mismatches += 1
                rec.failures.append(
                    asdict(
                        Failure(
                            "shortest-odd",
                            f"edge {e.render(p)}: measured {measured} (bound {bound}), predicted {predicted}",
                            _verify_cmd(p, e.u, e.v, level),
                        )
                    )
                )
        rec.shortest_odd = [by_class[c] for c in sorted(by_class, key=_class_key)]
        for entry in rec.shortest_odd:
            entry["measured"].sort(key=lambda x: -1 if x is None else x)

    # exhaustive spectra
    if level == "exhaustive":
        mism = 0
        for e in edge_list:
            got = oracle.cycle_length_spectrum_through_edge(p, e).achievable
            predicted = set(admissible_lengths(p, e).lengths())
            if got != predicted:
                mism += 1
                rec.failures.append(
                    asdict(
                        Failure(
                            "spectrum",
                            f"edge {e.render(p)}: missing {sorted(predicted - got)}, "
                            f"unpredicted {sorted(got - predicted)}",
                            _verify_cmd(p, e.u, e.v, level),
                        )
                    )
                )
        rec.spectra = {"edges_checked": len(edge_list), "mismatches": mism}
        rec.mismatches += mism
    return rec


def _certify_by_witness(p: Params, e: Edge, bound: Optional[int]) -> Optional[int]:
    """The walk lower bound is the exact minimum once a cycle of that length exists."""
    if bound is None or bound not in admissible_lengths(p, e):
        return None
    try:
        c = embed_cycle(p, e, bound)
    except EnhcubeError:
        return None
    return bound if not validate_cycle(p, c, require_edge=e, require_length=bound) else None


def _class_key(name: str):
    return (1, 0) if name == "skip" else (0, int(name[1:]))


def run_sweep(cfg: SweepConfig) -> VerificationReport:
    cfg.validate()
    instances = cfg.instances()
    pool = ProcessPoolExecutor(cfg.parallelism) if cfg.parallelism > 1 else None
    try:
        records = []
        for p in instances:
            log.info("checking Q_{%d,%d}", p.n, p.k)
            records.append(_check_instance(p, cfg, pool))
    finally:
        if pool:
            pool.shutdown()
    config = {
        "n_range": [cfg.n_min, cfg.n_max],
        "k_values": None if cfg.k_values is None else sorted(set(cfg.k_values)),
        "lengths": None if cfg.lengths is None else sorted(set(cfg.lengths)),
        "oracle_level": cfg.oracle_level,
        "edge": None if cfg.edge is None else list(cfg.edge),
    }
    return VerificationReport(config, records)


# --- export -----------------------------------------------------------------


def export_graph(p: Params, fmt: str = "dot") -> bytes:
    if p.n > EXPORT_MAX_N:
        raise ResourceError(f"graph export is limited to n <= {EXPORT_MAX_N}")
    es = list(edges(p))
    if fmt == "dot":
        lines = [f"graph Q_{p.n}_{p.k} {{"]
        lines += [f'  "{p.label(u)}";' for u in range(p.order)]
        for e in es:
            attrs = "class=skip, style=dashed" if e.cls.is_skip else f"dim={e.cls.dimension}, style=solid"
            lines.append(f'  "{p.label(e.u)}" -- "{p.label(e.v)}" [{attrs}];')
        lines.append("}")
        return ("\n".join(lines) + "\n").encode()
    if fmt in ("json", "edge-list-json"):
        doc = {
            "n": p.n,
            "k": p.k,
            "vertices": [p.label(u) for u in range(p.order)],
            "edges": [
                {"u": p.label(e.u), "v": p.label(e.v), "class": str(e.cls), "dim": e.cls.dimension}
                for e in es
            ],
        }
        return (json.dumps(doc, indent=1) + "\n").encode()
    raise ConfigurationError(f"unknown export format {fmt!r}")
