"""JSON codecs for the wire formats: multivectors, Dirac spinors, bilinear
sets, Majorana-16 spinors, and flux data.  Encoding is deterministic (sorted
terms, shortest round-trip floats) and decoding validates shapes.
"""

from __future__ import annotations

import numpy as np

from .algebra import Multivector, Signature
from .errors import InvalidInput
from .m8 import FluxData
from .minkowski import BilinearSet, DiracSpinor


def _mask_to_indices(mask: int) -> list:
    return [i + 1 for i in range(16) if mask >> i & 1]


def _indices_to_mask(indices, n: int) -> int:
    idx = [int(i) for i in indices]
    if any(not 1 <= i <= n for i in idx):
        raise InvalidInput(f"indices {idx} outside 1..{n}")
    if sorted(set(idx)) != idx:
        raise InvalidInput(f"indices {idx} not strictly ascending")
    return sum(1 << (i - 1) for i in idx)


def multivector_to_json(mv: Multivector) -> dict:
    terms = []
    for mask in sorted(mv.terms, key=lambda m: (bin(m).count("1"), m)):
        c = complex(mv.terms[mask])
        entry = {"indices": _mask_to_indices(mask), "re": c.real}
        if mv.field == "complex":
            entry["im"] = c.imag
        terms.append(entry)
    return {"p": mv.sig.p, "q": mv.sig.q, "field": mv.field, "terms": terms}


def multivector_from_json(doc: dict, sig: Signature | None = None) -> Multivector:
    if not isinstance(doc, dict):
        raise InvalidInput("multivector document must be an object")
    try:
        p, q = int(doc["p"]), int(doc["q"])
        field = doc.get("field", "real")
        raw_terms = doc.get("terms", [])
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidInput(f"malformed multivector document: {exc}") from None
    parsed = Signature(p, q)
    if sig is not None and parsed != sig:
        raise InvalidInput(f"document signature {parsed} does not match expected {sig}")
    terms = {}
    for entry in raw_terms:
        mask = _indices_to_mask(entry.get("indices", []), parsed.n)
        re = float(entry.get("re", 0.0))
        im = float(entry.get("im", 0.0))
        if field == "real":
            if im:
                raise InvalidInput("real multivector with imaginary part")
            terms[mask] = terms.get(mask, 0.0) + re
        else:
            terms[mask] = terms.get(mask, 0j) + complex(re, im)
    return Multivector(parsed, terms, field)


def spinor_to_json(psi: DiracSpinor) -> dict:
    return {
        "rep": psi.rep,
        "components": [[c.real, c.imag] for c in psi.components],
    }


def spinor_from_json(doc: dict) -> DiracSpinor:
    try:
        rep = doc["rep"]
        comps = doc["components"]
    except (KeyError, TypeError) as exc:
        raise InvalidInput(f"malformed spinor document: {exc}") from None
    if len(comps) != 4:
        raise InvalidInput("spinor needs 4 components")
    values = []
    for pair in comps:
        if not isinstance(pair, (list, tuple)) or len(pair) != 2:
            raise InvalidInput("components are [re, im] pairs")
        values.append(complex(float(pair[0]), float(pair[1])))
    return DiracSpinor(rep, tuple(values))


def bilinears_to_json(B: BilinearSet) -> dict:
    return {
        "sigma": B.sigma,
        "J": list(B.J),
        "S": list(B.S),
        "K": list(B.K),
        "omega": B.omega,
    }


def bilinears_from_json(doc: dict) -> BilinearSet:
    try:
        return BilinearSet(
            float(doc["sigma"]),
            tuple(float(x) for x in doc["J"]),
            tuple(float(x) for x in doc["S"]),
            tuple(float(x) for x in doc["K"]),
            float(doc["omega"]),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidInput(f"malformed bilinear document: {exc}") from None


def m8_spinor_from_json(doc: dict) -> tuple:
    try:
        real = np.array([float(x) for x in doc["real"]])
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidInput(f"malformed m8 spinor document: {exc}") from None
    imag_raw = doc.get("imag")
    imag = np.zeros(16) if imag_raw is None else np.array([float(x) for x in imag_raw])
    if real.shape != (16,) or imag.shape != (16,):
        raise InvalidInput("m8 spinor components must have 16 entries")
    return real, imag


def flux_from_json(doc: dict) -> FluxData:
    try:
        f = tuple(float(x) for x in doc.get("f", [0.0] * 8))
        dDelta = tuple(float(x) for x in doc.get("dDelta", [0.0] * 8))
        kappa = float(doc.get("kappa", 0.0))
        F = {}
        for entry in doc.get("F", []):
            F[tuple(int(i) for i in entry["indices"])] = float(entry["value"])
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidInput(f"malformed flux document: {exc}") from None
    return FluxData(f=f, F=F, dDelta=dDelta, kappa=kappa)


def matrix_to_json(M: np.ndarray) -> dict:
    M = np.asarray(M)
    out = {"rows": M.shape[0], "cols": M.shape[1], "re": [float(x) for x in M.real.ravel()]}
    if np.iscomplexobj(M) and np.abs(M.imag).max() > 0:
        out["im"] = [float(x) for x in M.imag.ravel()]
    return out
