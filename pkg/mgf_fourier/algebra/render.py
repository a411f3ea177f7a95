"""
Text, LaTeX and JSON serialization of SymbolicConstant and LaurentPolynomial.

Output order is canonical: descending power, then the monomial order of
SymbolicConstant, so equal objects always render to identical strings.
"""

import json
from fractions import Fraction
from typing import Any, Dict, List

from .laurent import LaurentPolynomial, Variable
from .symbols import UNIT, SymbolicConstant, ZetaMonomial

FORMATS = ("text", "json", "latex")


def _power_factors(values, fmt: str) -> List[str]:
    """zeta(3), zeta(3) -> ['zeta(3)^2'] preserving sorted order"""
    out: List[str] = []
    for value in sorted(set(values)):
        count = values.count(value)
        arg = ",".join(map(str, value)) if isinstance(value, tuple) else str(value)
        if fmt == "latex":
            base = rf"\zeta({arg})"
            out.append(base if count == 1 else f"{base}^{{{count}}}")
        else:
            base = f"zeta({arg})"
            out.append(base if count == 1 else f"{base}^{count}")
    return out


def monomial_text(m: ZetaMonomial, fmt: str = "text") -> str:
    parts: List[str] = []
    if m.pi_power:
        if fmt == "latex":
            parts.append(r"\pi" if m.pi_power == 1 else rf"\pi^{{{m.pi_power}}}")
        else:
            parts.append("pi" if m.pi_power == 1 else f"pi^{m.pi_power}")
    parts.extend(_power_factors(list(m.odd), fmt))
    parts.extend(_power_factors(list(m.double), fmt))
    return " ".join(parts)


def _fraction_text(q: Fraction, fmt: str) -> str:
    if fmt == "latex" and q.denominator != 1:
        return rf"\frac{{{q.numerator}}}{{{q.denominator}}}"
    return str(q)


def _signed_terms(c: SymbolicConstant, fmt: str):
    """Yield (negative, magnitude string) per term of c"""
    for mono, coeff in c.items():
        mag = abs(coeff)
        label = monomial_text(mono, fmt)
        if mono.is_unit:
            body = _fraction_text(mag, fmt)
        elif mag == 1:
            body = label
        else:
            body = f"{_fraction_text(mag, fmt)} {label}"
        yield coeff < 0, body


def _join(terms, leading_sign: bool = True) -> str:
    out = ""
    for i, (negative, body) in enumerate(terms):
        if i == 0:
            out = f"-{body}" if negative and leading_sign else body
        else:
            out += f" - {body}" if negative else f" + {body}"
    return out


def constant_text(c: SymbolicConstant, fmt: str = "text") -> str:
    if c.is_zero:
        return "0"
    return _join(list(_signed_terms(c, fmt)))


def _variable_text(var: Variable, power: int, fmt: str) -> str:
    name = {"u": "u", "y": "y", "tau2": "tau2"}[var.value]
    if fmt == "latex":
        name = r"\tau_2" if var == Variable.TAU2 else name
        return name if power == 1 else f"{name}^{{{power}}}"
    return name if power == 1 else f"{name}^{power}"


def _render_polynomial(p: LaurentPolynomial, fmt: str) -> str:
    if p.is_zero:
        return "0"
    terms = []
    for power, c in p.items():
        var = _variable_text(p.variable, power, fmt) if power != 0 else ""
        if len(c) == 1:
            negative, body = next(_signed_terms(c, fmt))
            mono, coeff = next(c.items())
            if var and mono.is_unit and abs(coeff) == 1:
                body = var
            elif var:
                body = f"{body} {var}"
            terms.append((negative, body))
        else:
            inner = constant_text(c, fmt)
            if fmt == "latex":
                group = rf"\left({inner}\right)"
            else:
                group = f"({inner})"
            terms.append((False, f"{group} {var}" if var else group))
    return _join(terms)


def render_text(p: LaurentPolynomial) -> str:
    return _render_polynomial(p, "text")


def render_latex(p: LaurentPolynomial) -> str:
    return _render_polynomial(p, "latex")


def constant_to_dict(c: SymbolicConstant) -> Dict[str, Any]:
    monomials = []
    for mono, coeff in c.items():
        if mono.is_unit:
            continue
        monomials.append({
            "odd": list(mono.odd),
            "pi_pow": mono.pi_power,
            "double": [list(pair) for pair in mono.double],
            "coeff": str(coeff),
        })
    return {"rational": str(c.rational_part), "monomials": monomials}


def constant_from_dict(data: Dict[str, Any]) -> SymbolicConstant:
    terms = {UNIT: Fraction(data.get("rational", "0"))}
    for entry in data.get("monomials", []):
        mono = ZetaMonomial(
            pi_power=int(entry.get("pi_pow", 0)),
            odd=tuple(entry.get("odd", [])),
            double=tuple(tuple(pair) for pair in entry.get("double", [])),
        )
        terms[mono] = terms.get(mono, Fraction(0)) + Fraction(entry["coeff"])
    return SymbolicConstant(terms)


def polynomial_to_dict(p: LaurentPolynomial) -> Dict[str, Any]:
    return {
        "w": p.weight,
        "variable": p.variable.value,
        "terms": [
            {"power": power, "coeff": constant_to_dict(c)} for power, c in p.items()
        ],
    }


def render_json(p: LaurentPolynomial) -> str:
    return json.dumps(polynomial_to_dict(p), sort_keys=False)


def parse_json(text: str) -> LaurentPolynomial:
    """Inverse of render_json"""
    data = json.loads(text)
    coeffs = {int(t["power"]): constant_from_dict(t["coeff"]) for t in data["terms"]}
    return LaurentPolynomial(coeffs, Variable(data["variable"]), data.get("w"))


def render(p: LaurentPolynomial, fmt: str = "text") -> str:
    """Serialize p in one of text, latex or json"""
    if fmt == "text":
        return render_text(p)
    if fmt == "latex":
        return render_latex(p)
    if fmt == "json":
        return render_json(p)
    raise ValueError(f"unknown format {fmt!r}, expected one of {FORMATS}")
