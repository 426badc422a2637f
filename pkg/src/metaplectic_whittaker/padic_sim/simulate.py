"""Pointwise checks of the Iwasawa algorithm on random lower unitriangular matrices."""
import random
from dataclasses import dataclass, field

from ..roots import gt_word, root_order
from .iwasawa import (classify_cell_sl3, det, expected_diagonal, iwasawa, kappa, psi_lambda,
                      psi_product_formula, random_laurent, unipotent_from_coordinates)


@dataclass
class SimulationReport:
    r: int
    p: int
    lam: tuple
    samples: int
    seed: int
    failures: dict = field(default_factory=dict)
    cells: dict = field(default_factory=dict)
    rows: dict = field(default_factory=dict)
    first_failure: dict = None

    @property
    def ok(self):
        return not any(self.failures.values())

    def to_json(self):
        return {
            "r": self.r,
            "p": self.p,
            "lambda": list(self.lam),
            "samples": self.samples,
            "seed": self.seed,
            "failures": dict(sorted(self.failures.items())),
            "cells": [{"m": list(m), "count": c} for m, c in sorted(self.cells.items())],
            "sl3_rows": {str(k): v for k, v in sorted(self.rows.items())},
            "first_failure": self.first_failure,
            "verdict": "ok" if self.ok else "failed",
        }


def _fail(report, name, coords):
    report.failures[name] += 1
    if report.first_failure is None:
        report.first_failure = {"check": name, "coordinates": [repr(c) for c in coords]}


def run_checks(r, p, samples, seed=0, lam=None, low=-3, high=3):
    """Reconstruction, det kappa = 1, diagonal, SL3 table and psi product formula on random samples."""
    word = gt_word(r)
    lam = tuple(lam) if lam is not None else (0,) * r
    rng = random.Random(seed)
    report = SimulationReport(r, p, lam, samples, seed)
    names = ["reconstruction", "det_kappa", "diagonal", "psi_product"]
    if r == 2:
        names.append("sl3_table")
    report.failures = {k: 0 for k in names}
    for _ in range(samples):
        coords = [random_laurent(rng, p, low, high) for _ in range(len(word))]
        res = iwasawa(coords, word)
        m = tuple(res.m)
        report.cells[m] = report.cells.get(m, 0) + 1
        K = kappa(coords, res)
        if not all(e.is_integral() for row in K for e in row):
            _fail(report, "reconstruction", coords)
        if det(K) != K[0][0].one_like():
            _fail(report, "det_kappa", coords)
        diag = expected_diagonal(res)
        if any(res.p1[i][i] != diag[i] for i in range(r + 1)):
            _fail(report, "diagonal", coords)
        if psi_lambda(unipotent_from_coordinates(coords, word), lam, p) != psi_product_formula(res, lam, p):
            _fail(report, "psi_product", coords)
        if r == 2:
            cell, row = classify_cell_sl3(*coords)
            report.rows[row] = report.rows.get(row, 0) + 1
            if cell != m:
                _fail(report, "sl3_table", coords)
    return report


def _in_crystal(lam, m_by_root, r, shift):
    """m in B(lam + shift * rho) by the row inequalities (s >= -1 after shifting lam)."""
    from ..crystal import decorate
    lam_shifted = tuple(v - 1 + shift for v in lam)
    d = decorate(lam_shifted, m_by_root, r)
    return all(s >= -1 for s in d.s_vals.values())


def containment_report(lam, p, samples, seed=0, low=-3, high=3):
    """Probe t^{-mu} C_m t^{mu} inside K against membership of m in B(lam) and in B(lam + rho).

    mu is lam in partition form.  For each variant the report counts samples
    whose cell label lies in the crystal but whose conjugate is not integral;
    the containment statement predicts zero such samples for the right shift.
    """
    r = len(lam)
    word = gt_word(r)
    roots = root_order(word)
    rng = random.Random(seed)
    mu = [sum(lam[k] for k in range(j, r)) for j in range(r + 1)]
    counts = {"samples": samples, "integral": 0,
              "B(lam)": {"members": 0, "violations": 0},
              "B(lam+rho)": {"members": 0, "violations": 0}}
    for _ in range(samples):
        coords = [random_laurent(rng, p, low, high) for _ in range(len(word))]
        res = iwasawa(coords, word)
        u = unipotent_from_coordinates(coords, word)
        integral = all(u[j][i].t_shift(mu[i] - mu[j]).is_integral()
                       for i in range(r + 1) for j in range(i + 1, r + 1))
        counts["integral"] += integral
        m = dict(zip(roots, res.m))
        for name, shift in (("B(lam)", 0), ("B(lam+rho)", 1)):
            if _in_crystal(lam, m, r, shift):
                counts[name]["members"] += 1
                if not integral:
                    counts[name]["violations"] += 1
    return counts
