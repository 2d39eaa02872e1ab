"""Partial injective vertex maps and the translation property predicates.

A mapping sends each vertex of its domain either to a vertex of its codomain
or to bottom (no image, encoded as None). Bottom absorbs under composition.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .graph import INF

#: Explicit "no image" element.
BOTTOM = None


class Mapping:
    """Injective partial map between two vertex subsets, with explicit bottom."""

    def __init__(self, domain, codomain, image):
        domain = frozenset(domain)
        codomain = frozenset(codomain)
        image = dict(image)
        if set(image) != set(domain):
            raise ValueError("image must be defined on exactly the domain")
        seen = set()
        for v, w in image.items():
            if w is BOTTOM:
                continue
            if w not in codomain:
                raise ValueError(f"image {w} of {v} outside codomain")
            if w in seen:
                raise ValueError(f"duplicate image {w}: mapping not injective")
            seen.add(w)
        self.domain = domain
        self.codomain = codomain
        self._image = image

    def __call__(self, v):
        """Image of v; vertices outside the domain and bottom map to bottom."""
        if v is BOTTOM or v not in self._image:
            return BOTTOM
        return self._image[v]

    @property
    def mapped(self):
        """Domain vertices with a non-bottom image."""
        return {v for v, w in self._image.items() if w is not BOTTOM}

    @property
    def image_set(self):
        """Set of non-bottom images."""
        return {w for w in self._image.values() if w is not BOTTOM}

    def items(self):
        return self._image.items()

    def loss(self):
        """Number of domain vertices sent to bottom."""
        return sum(1 for w in self._image.values() if w is BOTTOM)

    def is_lossless(self):
        return self.loss() == 0

    def image_tuple(self):
        """Images ordered by domain vertex; canonical identity of the mapping."""
        return tuple(self._image[v] for v in sorted(self.domain))

    def __eq__(self, other):
        if not isinstance(other, Mapping):
            return NotImplemented
        return (
            self.domain == other.domain
            and self.codomain == other.codomain
            and self._image == other._image
        )

    def __hash__(self):
        return hash((self.domain, self.codomain, tuple(sorted(self._image.items(), key=lambda kv: kv[0]))))

    def __repr__(self):
        pairs = ", ".join(
            f"{v}->{'⊥' if w is BOTTOM else w}" for v, w in sorted(self._image.items())
        )
        return f"Mapping({pairs})"

    def to_json_dict(self):
        return {
            "domain": sorted(self.domain),
            "codomain": sorted(self.codomain),
            "image": [[v, self._image[v]] for v in sorted(self.domain)],
        }

    @classmethod
    def from_json_dict(cls, data):
        return cls(data["domain"], data["codomain"], {v: w for v, w in data["image"]})

    def save(self, path):
        with open(path, "w") as fh:
            json.dump(self.to_json_dict(), fh, sort_keys=True)

    @classmethod
    def load(cls, path):
        with open(path) as fh:
            return cls.from_json_dict(json.load(fh))


def full_mapping(g, image):
    """Mapping on the full vertex set of g from a {vertex: image} dict."""
    return Mapping(g.vertices, g.vertices, image)


def bottom_map(g):
    """The all-bottom mapping; a translation of loss n on any graph."""
    return full_mapping(g, {v: BOTTOM for v in g.vertices})


def identity_map(g):
    return full_mapping(g, {v: v for v in g.vertices})


def check_ec(g, m):
    """Edge-constrained check: every non-bottom image is a neighbor of its source.

    Returns (is_ec, violation_count).
    """
    bad = sum(1 for v in m.mapped if not g.has_edge(v, m(v)))
    return bad == 0, bad


def check_wnp(g, m):
    """Weak preservation: edges between mapped vertices map to edges."""
    mapped = sorted(m.mapped)
    for i, u in enumerate(mapped):
        for v in mapped[i + 1 :]:
            if g.has_edge(u, v) and not g.has_edge(m(u), m(v)):
                return False
    return True


def check_snp(g, m):
    """Strong preservation: edge iff image-edge, over pairs of mapped vertices."""
    mapped = sorted(m.mapped)
    for i, u in enumerate(mapped):
        for v in mapped[i + 1 :]:
            if g.has_edge(u, v) != g.has_edge(m(u), m(v)):
                return False
    return True


def check_isometry(g, m):
    """Exact geodesic-distance preservation over pairs of mapped vertices."""
    mapped = sorted(m.mapped)
    for i, u in enumerate(mapped):
        for v in mapped[i + 1 :]:
            if g.geodesic(u, v) != g.geodesic(m(u), m(v)):
                return False
    return True


def is_translation(g, m):
    return check_ec(g, m)[0] and check_snp(g, m)


def snp_violations(g, m):
    """Count of mapped vertex pairs whose edge/non-edge status flips."""
    mapped = sorted(m.mapped)
    count = 0
    for i, u in enumerate(mapped):
        for v in mapped[i + 1 :]:
            if g.has_edge(u, v) != g.has_edge(m(u), m(v)):
                count += 1
    return count


def deformation(g, m):
    """Summed absolute change of pairwise geodesic distances over mapped pairs.

    Two infinite distances count as 0; finite vs infinite is capped at n.
    """
    mapped = sorted(m.mapped)
    total = 0
    for i, u in enumerate(mapped):
        for v in mapped[i + 1 :]:
            total += distance_gap(g.geodesic(u, v), g.geodesic(m(u), m(v)), g.n)
    return total


def distance_gap(d1, d2, cap):
    if d1 == INF and d2 == INF:
        return 0
    if d1 == INF or d2 == INF:
        return cap
    return abs(d1 - d2)


@dataclass(frozen=True)
class PropertyReport:
    loss: int
    is_ec: bool
    is_wnp: bool
    is_snp: bool
    is_translation: bool
    is_isometry: bool
    ec_violations: int
    snp_violations: int
    deformation: float

    def to_json_dict(self):
        return {
            "loss": self.loss,
            "is_ec": self.is_ec,
            "is_wnp": self.is_wnp,
            "is_snp": self.is_snp,
            "is_translation": self.is_translation,
            "is_isometry": self.is_isometry,
            "ec_violations": self.ec_violations,
            "snp_violations": self.snp_violations,
            "deformation": self.deformation,
        }


def property_report(g, m):
    ec, ec_bad = check_ec(g, m)
    snp = check_snp(g, m)
    return PropertyReport(
        loss=m.loss(),
        is_ec=ec,
        is_wnp=check_wnp(g, m),
        is_snp=snp,
        is_translation=ec and snp,
        is_isometry=check_isometry(g, m),
        ec_violations=ec_bad,
        snp_violations=snp_violations(g, m),
        deformation=deformation(g, m),
    )


def to_digraph(m):
    """Arcs (v, image(v)) for the non-bottom part, ordered by source."""
    return [(v, m(v)) for v in sorted(m.mapped)]


def decompose(m):
    """Partition the domain into directed cycles and bottom-terminated paths."""
    succ = {v: m(v) for v in m.domain}
    has_pred = set(m.image_set)
    remaining = set(m.domain)
    cycles, paths = [], []

    # Paths start at vertices with no inverse image inside the domain.
    for start in sorted(m.domain):
        if start in has_pred or start not in remaining:
            continue
        path = [start]
        remaining.discard(start)
        v = succ.get(start, BOTTOM)
        while v is not BOTTOM and v in remaining:
            path.append(v)
            remaining.discard(v)
            v = succ.get(v, BOTTOM)
        paths.append(path)

    while remaining:
        start = min(remaining)
        cycle = [start]
        remaining.discard(start)
        v = succ[start]
        while v != start and v in remaining:
            cycle.append(v)
            remaining.discard(v)
            v = succ.get(v, BOTTOM)
        cycles.append(cycle)
    return cycles, paths


def inverse(m):
    """Arc-reversed mapping; domain and codomain swap."""
    image = {w: BOTTOM for w in m.codomain}
    for v in m.mapped:
        image[m(v)] = v
    return Mapping(m.codomain, m.domain, image)


def compose(m2, m1):
    """(m2 after m1); any hand-off outside m2's reach becomes bottom."""
    image = {}
    for v in m1.domain:
        w = m1(v)
        image[v] = m2(w) if w is not BOTTOM else BOTTOM
    return Mapping(m1.domain, m2.codomain, image)


def apply_to_signal(m, x):
    """Move signal entries along the mapping; lost and untouched entries are 0."""
    y = [0.0] * len(x)
    for v in m.mapped:
        y[m(v) - 1] = x[v - 1]
    return y


def precedes(m1, m2):
    """The well-founded comparison: strictly larger loss and a shared assignment."""
    if m1.loss() <= m2.loss():
        return False
    return any(m1(v) == m2(v) for v in m1.domain & m2.domain)
