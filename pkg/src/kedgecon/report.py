"""Pass/fail tallies with counterexample payloads."""

from __future__ import annotations

from dataclasses import dataclass, field

from .multigraph import Multigraph, format_mgraph


@dataclass
class VerificationReport:
    spec: dict = field(default_factory=dict)
    graphs_examined: int = 0
    claims: dict[str, list[int]] = field(default_factory=dict)
    counterexamples: list[dict] = field(default_factory=list)
    elapsed_ms: float = 0.0

    def record(self, claim: str, ok: bool, graph: Multigraph | None = None, detail: str = "") -> bool:
        tally = self.claims.setdefault(claim, [0, 0])
        if ok:
            tally[0] += 1
        else:
            tally[1] += 1
            self.counterexamples.append(
                {
                    "graph_mgraph": format_mgraph(graph) if graph is not None else None,
                    "claim": claim,
                    "detail": detail,
                }
            )
        return ok

    def passes(self, claim: str) -> int:
        return self.claims.get(claim, [0, 0])[0]

    def failures(self, claim: str) -> int:
        return self.claims.get(claim, [0, 0])[1]

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def merge(self, other: "VerificationReport") -> "VerificationReport":
        out = VerificationReport(
            spec=dict(self.spec or other.spec),
            graphs_examined=self.graphs_examined + other.graphs_examined,
            claims={k: list(v) for k, v in self.claims.items()},
            counterexamples=self.counterexamples + other.counterexamples,
            elapsed_ms=self.elapsed_ms + other.elapsed_ms,
        )
        for k, (p, f) in other.claims.items():
            t = out.claims.setdefault(k, [0, 0])
            t[0] += p
            t[1] += f
        return out

    def to_json(self) -> dict:
        return {
            "spec": self.spec,
            "graphs_examined": self.graphs_examined,
            "claims": [
                {"id": k, "passes": p, "failures": f} for k, (p, f) in sorted(self.claims.items())
            ],
            "counterexamples": self.counterexamples,
            "elapsed_ms": round(self.elapsed_ms, 3),
        }
