"""Full analysis pipeline and its machine-readable report.

The report is a plain dict with deterministic key and list ordering, so
identical input bytes and flags always serialize to identical report bytes.
"""
from __future__ import annotations

import hashlib
import json
import time
from fractions import Fraction

from . import lefschetz
from .cohomology import (canonical_classes, kirwan_reduce,
                         localization_pairing_invertible)
from .exact import format_rational
from .model import (betti, check_hypothesis, restrict_to_circle,
                    self_indexing_normalizer)

SCHEMA_VERSION = 1


def _rat(x):
    return None if x is None else format_rational(x)


def analyze(graph, xi, *, name=None, source_bytes=None, shift_min=False,
            with_timings=False):
    """Run the whole pipeline; returns (report_dict, exit_code)."""
    t0 = time.monotonic()
    profile = restrict_to_circle(graph, xi)
    hyp = check_hypothesis(profile)
    n = profile.n

    min_shift = profile.min_value() if shift_min else Fraction(0)
    normalizer = None
    if hyp["constant_on_levels"]:
        normalizer = self_indexing_normalizer(profile)

    basis = canonical_classes(graph, profile)
    ring = kirwan_reduce(basis)
    hl = lefschetz.hard_lefschetz_check(ring)

    lemmas = [lefschetz.verify_symp_expansion(profile, basis)]
    for k in range(1, n + 1):
        lemmas.append(lefschetz.verify_vanish(profile, k))
    lemmas.append(lefschetz.verify_distinct(profile))
    for k in range(n + 1):
        for side in ("low", "high"):
            lemmas.append(lefschetz.verify_zeroclass(basis, k, side))
    certificates = lefschetz.delta_certificates(basis, profile) \
        if hyp["constant_on_levels"] else []
    semifree = lefschetz.semifree_monotone_analysis(profile)

    digest = hashlib.sha256(source_bytes).hexdigest() if source_bytes else None
    report = {
        "schema": SCHEMA_VERSION,
        "input": {
            "name": name,
            "digest": digest,
            "xi": list(xi),
            "shift_min": bool(shift_min),
        },
        "profile": {
            "rank": graph.rank,
            "dimension": graph.dimension,
            "vertices": [
                {
                    "id": v.id,
                    "position": [format_rational(x) for x in v.position],
                    "mu": _rat(profile.mu[v.id] - min_shift),
                    "index": profile.index[v.id],
                    "circle_weights": list(profile.weights[v.id]),
                }
                for v in sorted(graph.vertices, key=lambda v: v.id)
            ],
            "levels": {str(2 * k): list(profile.level(k)) for k in range(n + 1)},
            "betti": betti(profile),
            "level_constants": [
                _rat(c - min_shift if c is not None else None)
                for c in profile.level_constants()
            ],
            "min_shift": _rat(min_shift),
            "warnings": list(profile.warnings),
        },
        "hypothesis": {
            "constant_on_levels": hyp["constant_on_levels"],
            "all_distinct": hyp["all_distinct"],
            "theorem_applicability": "applicable" if hyp["constant_on_levels"]
                                     else "not applicable",
        },
        "self_indexing_normalizer":
            None if normalizer is None else [_rat(normalizer[0]), _rat(normalizer[1])],
        "canonical_basis": {
            "order": list(basis.order),
            "classes": {
                fid: {
                    "degree": profile.index[fid],
                    "alpha": {
                        vid: basis.alpha[fid].at(vid).to_strings()
                        for vid in sorted(profile.mu)
                    },
                    "beta": {
                        vid: basis.beta[fid].at(vid).to_strings()
                        for vid in sorted(profile.mu)
                    },
                }
                for fid in basis.order
            },
        },
        "hard_lefschetz": {
            "holds": hl.holds,
            "degrees": [
                {
                    "degree": d.degree,
                    "source_dim": d.source_dim,
                    "target_dim": d.target_dim,
                    "rank": d.rank,
                    "vacuous": d.vacuous,
                    "holds": d.holds,
                }
                for d in hl.degrees
            ],
        },
        "lemmas": lemmas,
        "delta_certificates": certificates,
        "semifree": {
            "semifree": semifree["semifree"],
            "monotone_mu": None if semifree["monotone_mu"] is None else {
                vid: _rat(val) for vid, val in sorted(semifree["monotone_mu"].items())
            },
            "self_indexing": semifree["self_indexing"],
        },
        "localization": {
            "pairing_invertible": {
                str(2 * k): localization_pairing_invertible(basis, 2 * k)
                for k in range(n + 1)
            },
        },
    }
    if with_timings:
        report["timings"] = {"total_seconds": round(time.monotonic() - t0, 6)}
    exit_code = 0 if hyp["constant_on_levels"] else 2
    return report, exit_code


def report_to_json(report):
    return json.dumps(report, indent=2) + "\n"


def report_to_text(report):
    """Human-readable projection of the JSON report."""
    lines = []
    prof = report["profile"]
    lines.append("input: %s (xi = %s)"
                 % (report["input"]["name"] or report["input"]["digest"],
                    tuple(report["input"]["xi"])))
    lines.append("dimension %d, rank %d, %d fixed points"
                 % (prof["dimension"], prof["rank"], len(prof["vertices"])))
    lines.append("betti: %s" % (tuple(prof["betti"]),))
    lines.append("levels:")
    for k, ids in sorted(prof["levels"].items(), key=lambda kv: int(kv[0])):
        c = prof["level_constants"][int(k) // 2]
        lines.append("  index %s: %s  (mu = %s)"
                     % (k, ", ".join(ids), c if c is not None else "non-constant"))
    for w in prof["warnings"]:
        lines.append("warning: %s" % w)
    hyp = report["hypothesis"]
    lines.append("moment map constant on levels: %s (theorem %s)"
                 % (hyp["constant_on_levels"], hyp["theorem_applicability"]))
    norm = report["self_indexing_normalizer"]
    lines.append("self-indexing normalizer: %s"
                 % ("none" if norm is None else "mu -> %s*mu + %s" % tuple(norm)))
    hl = report["hard_lefschetz"]
    lines.append("hard Lefschetz: %s" % ("holds" if hl["holds"] else "FAILS"))
    for d in hl["degrees"]:
        if d["vacuous"]:
            lines.append("  degree %d: vacuous (odd degrees are empty)" % d["degree"])
        else:
            lines.append("  degree %d: %dx%d matrix, rank %d -> %s"
                         % (d["degree"], d["source_dim"], d["target_dim"], d["rank"],
                            "ok" if d["holds"] else "FAIL"))
    lines.append("lemma checks:")
    for entry in report["lemmas"]:
        status = "n/a" if not entry["applicable"] else \
                 ("pass" if entry["pass"] else "FAIL")
        lines.append("  %-32s %s  %s" % (entry["name"], status, entry["detail"]))
    for entry in report["delta_certificates"]:
        status = "pass" if entry["pass"] else "FAIL"
        lines.append("  %-32s %s  candidate %s"
                     % (entry["name"], status, entry["candidate"]))
    sf = report["semifree"]
    if sf["semifree"]:
        lines.append("semifree action: yes; mu + n self-indexing: %s"
                     % sf["self_indexing"])
    else:
        lines.append("semifree action: no")
    return "\n".join(lines) + "\n"
