"""Input documents, the presentation text format and machine-readable records.

Input document (JSON)::

    {"kind": "artin",
     "generators": ["a", "b"],
     "labels": [["a", "b", 3]],
     "phi": [["a", "b"]]}

Presentation text::

    gens a b
    rel a b a b^-1 a^-1 b^-1  # artin
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .errors import InputParseError
from .presentations import TAGS, Homomorphism, Presentation
from .systems import INF, KINDS, ArtinSystem, LabelPreservingBijection, validate_bijection, validate_system
from .words import format_word, parse_word

RECORD_VERSION = 1


@dataclass(frozen=True)
class InputDocument:
    kind: str
    generators: tuple[str, ...]
    labels: tuple[tuple[str, str, object], ...]
    phi: tuple[tuple[str, str], ...]

    def system(self) -> ArtinSystem:
        return validate_system(self.generators, self.labels, self.kind)

    def bijection(self, system: ArtinSystem, check_labels: bool = True) -> LabelPreservingBijection:
        return validate_bijection(system, self.phi, check_labels)

    def validated(self) -> tuple[ArtinSystem, LabelPreservingBijection]:
        sys_ = self.system()
        return sys_, self.bijection(sys_)


def _locate(text: str, key: str) -> tuple[int | None, int | None]:
    pos = text.find(f'"{key}"')
    if pos < 0:
        return None, None
    line = text.count("\n", 0, pos) + 1
    col = pos - (text.rfind("\n", 0, pos) + 1) + 1
    return line, col


def parse_input(text: str) -> InputDocument:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputParseError(exc.msg, exc.lineno, exc.colno) from None

    def fail(key: str, msg: str):
        raise InputParseError(f"{key}: {msg}", *_locate(text, key))

    if not isinstance(raw, dict):
        raise InputParseError("top level must be an object", 1, 1)
    unknown = set(raw) - {"kind", "generators", "labels", "phi"}
    if unknown:
        fail(sorted(unknown)[0], "unknown field")
    kind = raw.get("kind", "artin")
    if kind not in KINDS:
        fail("kind", f"must be one of {list(KINDS)}")
    gens = raw.get("generators")
    if not isinstance(gens, list) or not all(isinstance(g, str) for g in gens):
        fail("generators", "must be a list of names")
    labels = raw.get("labels", [])
    if not isinstance(labels, list):
        fail("labels", "must be a list of [s, t, m] triples")
    for n, entry in enumerate(labels):
        if not (isinstance(entry, list) and len(entry) == 3):
            fail("labels", f"entry {n} is not a [s, t, m] triple")
        if not (isinstance(entry[2], int) or entry[2] == "inf"):
            fail("labels", f"entry {n}: label must be an integer or \"inf\"")
    phi = raw.get("phi", [])
    if not isinstance(phi, list) or not all(isinstance(p, list) and len(p) == 2 for p in phi):
        fail("phi", "must be a list of [source, target] pairs")
    return InputDocument(
        kind,
        tuple(gens),
        tuple(tuple(e) for e in labels),
        tuple(tuple(p) for p in phi),
    )


def load_input(path: str | Path) -> InputDocument:
    return parse_input(Path(path).read_text(encoding="utf-8"))


def input_to_json(system: ArtinSystem, phi: LabelPreservingBijection | None = None) -> dict:
    return {
        "kind": system.kind,
        "generators": list(system.generators),
        "labels": [[s, t, m] for s, t, m in system.finite_pairs()],
        "phi": [list(p) for p in (phi.pairs if phi else ())],
    }


# -- presentation text ----------------------------------------------------------


def format_presentation(pres: Presentation, header: str | None = None, tags: bool = True) -> str:
    lines = []
    if header:
        lines.extend(f"# {h}" for h in header.splitlines())
    lines.append("gens " + " ".join(pres.generators))
    for r, tag in zip(pres.relators, pres.tags):
        line = "rel " + format_word(r)
        if tags:
            line += f"  # {tag}"
        lines.append(line)
    return "\n".join(lines) + "\n"


def parse_presentation(text: str) -> Presentation:
    gens = None
    rels, tags = [], []
    for n, raw in enumerate(text.splitlines(), 1):
        body, _, comment = raw.partition("#")
        body = body.strip()
        if not body:
            continue
        head, _, rest = body.partition(" ")
        if head == "gens":
            if gens is not None:
                raise InputParseError("second gens line", n, 1)
            gens = tuple(rest.split())
        elif head == "rel":
            try:
                rels.append(parse_word(rest))
            except ValueError as exc:
                raise InputParseError(str(exc), n, 5) from None
            tag = comment.strip()
            tags.append(tag if tag in TAGS else "artin")
        else:
            raise InputParseError(f"expected 'gens' or 'rel', got {head!r}", n, 1)
    if gens is None:
        raise InputParseError("missing gens line")
    return Presentation(gens, tuple(rels), tuple(tags))


# -- records ---------------------------------------------------------------------


def _lab(v):
    return "inf" if v == INF else v


def presentation_record(pres: Presentation) -> dict:
    return {
        "generators": list(pres.generators),
        "relators": [format_word(r) for r in pres.relators],
        "tags": list(pres.tags),
    }


def presentation_from_record(rec: dict) -> Presentation:
    return Presentation(
        tuple(rec["generators"]),
        tuple(parse_word(r) for r in rec["relators"]),
        tuple(rec["tags"]),
    )


def system_record(system: ArtinSystem) -> dict:
    rec = input_to_json(system)
    del rec["phi"]
    return rec


def system_from_record(rec: dict) -> ArtinSystem:
    return validate_system(rec["generators"], rec["labels"], rec["kind"])


def homomorphism_record(hom: Homomorphism) -> dict:
    return {"name": hom.name, "images": {g: format_word(w) for g, w in hom.images.items()}}


def build_record(cert) -> dict:
    """What ``build --format record`` prints."""
    cover = cert.cover
    return {
        "version": RECORD_VERSION,
        "input": input_to_json(cert.system, cert.phi),
        "k": cert.k,
        "loops": [list(c) for c in cert.coupling.loops],
        "paths": [list(p) for p in cert.coupling.paths],
        "classes": {name: [[i, s] for i, s in cover.members[name]] for name in cover.classes},
        "psi": [dict(table) for table in cover.psi],
        "mbar": [[x, y, _lab(cert.mbar.m(x, y))] for x, y in _pairs(cover.classes)],
        "target_system": system_record(cert.target_system),
        "target": presentation_record(cert.target),
    }


def parse_build_record(rec: dict) -> dict:
    """Inverse of :func:`build_record`, rebuilding the typed pieces."""
    sys_ = validate_system(rec["input"]["generators"], rec["input"]["labels"], rec["input"]["kind"])
    return {
        "system": sys_,
        "phi": validate_bijection(sys_, rec["input"]["phi"]),
        "k": rec["k"],
        "loops": [tuple(c) for c in rec["loops"]],
        "paths": [tuple(p) for p in rec["paths"]],
        "classes": {name: tuple((i, s) for i, s in m) for name, m in rec["classes"].items()},
        "psi": tuple(rec["psi"]),
        "mbar": validate_system(list(rec["classes"]), rec["mbar"]),
        "target_system": system_from_record(rec["target_system"]),
        "target": presentation_from_record(rec["target"]),
    }


def certificate_record(cert) -> dict:
    rec = build_record(cert)
    kernel = cert.kernel
    rec.update(
        {
            "kind": cert.kind,
            "ambient": presentation_record(kernel.ambient),
            "kernel": {
                "stable": kernel.stable,
                "transversal": [format_word(w) for w in kernel.transversal],
                "generator_words": {g: format_word(w) for g, w in kernel.generator_words.items()},
                "presentation": presentation_record(kernel.subgroup_presentation),
            },
            "gstar": presentation_record(cert.gstar),
            "eta": homomorphism_record(cert.eta),
            "theta_doubling": homomorphism_record(cert.theta_doubling) if cert.theta_doubling else None,
            "label_claim": _label_claim(cert),
            "report": cert.report.to_dict() if cert.report is not None else None,
        }
    )
    return rec


def _label_claim(cert) -> dict:
    holds, got, allowed = cert.label_claim()
    key = lambda v: (v == "inf", 0 if v == "inf" else v)  # noqa: E731
    return {
        "holds": holds,
        "target_labels": sorted((_lab(v) for v in got), key=key),
        "allowed": sorted((_lab(v) for v in allowed), key=key),
    }


def _pairs(items):
    for n, x in enumerate(items):
        for y in items[n + 1 :]:
            yield x, y


def dumps(rec: dict) -> str:
    return json.dumps(rec, indent=2, ensure_ascii=False) + "\n"
