"""Text, JSON and LaTeX renderings of components, transforms and identities.

Fractions are always serialized as strings ("p/q", or "p" for integers) so
JSON output stays exact.  Components are listed by descending ell and
coefficients by descending n.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from angdecomp.fourier import DerivativeIdentity, FourierResult, RadialTerm
from angdecomp.tensor import XCombo, enumerate_x_terms, x_term_count

EXPAND_MAX_RANK = 4


def fraction_str(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _dump(payload: object) -> str:
    return json.dumps(payload, separators=(",", ":"), ensure_ascii=False)


@dataclass(frozen=True)
class RenderedComponent:
    rank: int
    ell: int
    x_coefficients: dict[str, str]
    term_counts: dict[str, int] = field(default_factory=dict)
    latex: str | None = None

    @classmethod
    def from_combo(cls, ell: int, combo: XCombo, latex: str | None = None) -> RenderedComponent:
        return cls(
            combo.rank,
            ell,
            {str(n): fraction_str(c) for n, c in combo.items()},
            {str(n): x_term_count(combo.rank, n) for n, _ in combo.items()},
            latex,
        )

    def to_combo(self) -> XCombo:
        return XCombo(self.rank, {int(n): Fraction(c) for n, c in self.x_coefficients.items()})

    def to_json(self, with_counts: bool = False) -> dict:
        out: dict = {"ell": self.ell, "x_coefficients": dict(self.x_coefficients)}
        if with_counts:
            out["term_counts"] = dict(self.term_counts)
        return out


def decompose_json(rank: int, components: list[RenderedComponent], with_counts: bool = False) -> str:
    return _dump({"rank": rank,
                  "components": [c.to_json(with_counts) for c in components]})


def parse_decompose_json(text: str) -> tuple[int, list[RenderedComponent]]:
    """Inverse of :func:`decompose_json`; term counts are recomputed."""
    data = json.loads(text)
    rank = int(data["rank"])
    comps = []
    for entry in data["components"]:
        combo = XCombo(rank, {int(n): Fraction(c) for n, c in entry["x_coefficients"].items()})
        comps.append(RenderedComponent.from_combo(int(entry["ell"]), combo))
    return rank, comps


# -- plain text -----------------------------------------------------------

def _signed_terms(pieces: list[tuple[Fraction, str]]) -> str:
    out = []
    for k, (coeff, body) in enumerate(pieces):
        mag = abs(coeff)
        head = body if mag == 1 else f"{fraction_str(mag)} {body}"
        if k == 0:
            out.append(("-" if coeff < 0 else "") + head)
        else:
            out.append(("- " if coeff < 0 else "+ ") + head)
    return " ".join(out) if out else "0"


def combo_text(combo: XCombo, counts: bool = False) -> str:
    pieces = []
    for n, c in combo.items():
        body = f"X[{combo.rank},{n}]"
        if counts:
            m = x_term_count(combo.rank, n)
            body += f" ({m} term{'s' if m != 1 else ''})"
        pieces.append((c, body))
    return _signed_terms(pieces)


def component_text(ell: int, combo: XCombo) -> str:
    return f"(p^{combo.rank})_{ell} = {combo_text(combo, counts=True)}"


def radial_text(term: RadialTerm) -> str:
    return str(term)


def transform_text(result: FourierResult) -> str:
    lines = [f"FT[p^{result.n} p^_(i1..i{result.rank})] = sum over {len(result.channels)} channel(s):"]
    for ch in result.channels:
        lines.append(f"  ell={ch.ell}: {radial_text(ch.radial)} * [{combo_text(ch.angular)}](x^)")
    return "\n".join(lines)


def transform_json(result: FourierResult) -> str:
    channels = []
    for ch in result.channels:
        c = ch.radial.coefficient
        channels.append({
            "ell": ch.ell,
            "radial": {
                "kind": ch.radial.kind,
                "text": radial_text(ch.radial),
                "coefficient": fraction_str(c.value),
                "pi_power": c.pi_power,
                "i_power": c.i_power,
                "r_power": ch.radial.r_power,
            },
            "x_coefficients": {str(n): fraction_str(q) for n, q in ch.angular.items()},
        })
    return _dump({"power": result.n, "rank": result.rank, "channels": channels})


def identity_text(ident: DerivativeIdentity) -> str:
    lines = [str(ident), f"  with (x^{ident.k})_{ident.k} = {combo_text(ident.angular)}"]
    if ident.source == "onebyr":
        lines.append("  valid for r != 0")
        if ident.k == 2:
            lines.append("  note: including the origin, d_i d_j (1/r) = -(4 pi/3) delta_ij delta3(r)"
                         " + 3/r^3 (x^_i x^_j - delta_ij/3)")
    return "\n".join(lines)


def identity_json(ident: DerivativeIdentity) -> str:
    return _dump({
        "kind": ident.source,
        "k": ident.k,
        "coefficient": fraction_str(ident.coefficient),
        "r_power": ident.r_power,
        "delta": ident.delta,
        "x_coefficients": {str(n): fraction_str(q) for n, q in ident.angular.items()},
    })


# -- LaTeX ----------------------------------------------------------------

def _frac_latex(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else rf"\frac{{{q.numerator}}}{{{q.denominator}}}"


def _index(i: int) -> str:
    return f"i_{{{i}}}"


def _term_latex(positions: list[int], pairs: list[tuple[int, int]], vec: str) -> str:
    parts = [rf"\hat {vec}_{{{_index(p)}}}" for p in positions]
    parts += [rf"\delta_{{{_index(a)} {_index(b)}}}" for a, b in pairs]
    return " ".join(parts) if parts else "1"


def _x_latex(L: int, n: int, vec: str, expand: bool) -> str:
    if expand:
        terms = [_term_latex([p + 1 for p in mom], [(a + 1, b + 1) for a, b in pairs], vec)
                 for mom, pairs in enumerate_x_terms(L, n)]
        return terms[0] if len(terms) == 1 else r"\left( " + " + ".join(terms) + r" \right)"
    rep = _term_latex(list(range(1, n + 1)),
                      [(k, k + 1) for k in range(n + 1, L, 2)], vec)
    m = x_term_count(L, n)
    if m == 1:
        return rep
    return rf"\left( {rep} + {{\rm perms}} \right)_{{{m} \; {{\rm terms}}}}"


def combo_latex(combo: XCombo, vec: str = "p", expand: bool = False) -> str:
    out = ""
    for k, (n, c) in enumerate(combo.items()):
        body = _x_latex(combo.rank, n, vec, expand)
        if abs(c) != 1:
            body = f"{_frac_latex(abs(c))} {body}"
        if k == 0:
            out = ("-" if c < 0 else "") + body
        else:
            out += (" - " if c < 0 else " + ") + body
    return out or "0"


def _monomial_latex(L: int, vec: str) -> str:
    if L == 0:
        return "1"
    return " ".join(rf"\hat {vec}_{{{_index(i)}}}" for i in range(1, L + 1))


def component_latex(ell: int, combo: XCombo, expand: bool = False) -> str:
    L = combo.rank
    return (rf"\left( {_monomial_latex(L, 'p')} \right)^{{{L}}}_{{{ell}}} = "
            + combo_latex(combo, "p", expand))


def _radial_latex(term: RadialTerm) -> str:
    value, pi_power, imag = term.coefficient.canonical()
    sign = "-" if value < 0 else ""
    value = abs(value)
    num = [str(value.numerator)] if value.numerator != 1 or not (imag or pi_power > 0) else []
    if imag:
        num.insert(0, "i")
    if pi_power > 0:
        num.append(r"\pi" if pi_power == 1 else rf"\pi^{{{pi_power}}}")
    den = [str(value.denominator)] if value.denominator != 1 else []
    if pi_power < 0:
        den.append(r"\pi" if pi_power == -1 else rf"\pi^{{{-pi_power}}}")
    if term.r_power:
        den.append("r" if term.r_power == 1 else f"r^{{{term.r_power}}}")
    top = " ".join(num) or "1"
    text = rf"\frac{{{top}}}{{{' '.join(den)}}}" if den else top
    if term.kind == "delta":
        text = ("" if text == "1" else text + " ") + r"\delta(\vec r\,)"
    return sign + text


def transform_latex(result: FourierResult) -> str:
    lhs = (rf"I_{{{result.n}; {' '.join(_index(i) for i in range(1, result.rank + 1))}}}(\vec r\,)"
           if result.rank else rf"I_{{{result.n}}}(\vec r\,)")
    pieces = [rf"{_radial_latex(ch.radial)} \left( {combo_latex(ch.angular, 'x')} \right)"
              for ch in result.channels]
    return lhs + " = " + " + ".join(pieces)


def identity_latex(ident: DerivativeIdentity) -> str:
    k = ident.k
    derivs = " ".join(rf"\partial_{{{_index(i)}}}" for i in range(1, k + 1))
    src = r"\frac{1}{r}" if ident.source == "onebyr" else r"\delta(\vec r\,)"
    c = ident.coefficient
    sign = "-" if c < 0 else ""
    rp = "r" if ident.r_power == 1 else f"r^{{{ident.r_power}}}"
    tail = r" \delta(\vec r\,)" if ident.delta else ""
    return (rf"\left( {derivs} \right)^{{{k}}}_{{{k}}} {src} = {sign}\frac{{{abs(c)}}}{{{rp}}} "
            rf"\left( {combo_latex(ident.angular, 'x')} \right){tail}")


__all__ = [
    "RenderedComponent",
    "fraction_str",
    "decompose_json",
    "parse_decompose_json",
    "component_text",
    "component_latex",
    "combo_text",
    "combo_latex",
    "transform_text",
    "transform_json",
    "transform_latex",
    "identity_text",
    "identity_json",
    "identity_latex",
    "EXPAND_MAX_RANK",
]
