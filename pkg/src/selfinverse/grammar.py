"""Text form of catalog specs.

Grammar (EBNF; whitespace is ignored between tokens)::

    spec        = joint | dist ;
    joint       = "discrete-table" ":" name
                | "region-uniform" ":" name
                | "product" "(" dist "," dist ")"
                | "bivariate-normal" "(" arg ")"
                | "constructed" "(" [ "z" "=" ] dist [ "," [ "w" "=" ] dist ] ")" ;
    dist        = name [ "(" [ arg { "," arg } ] ")" ] ;
    arg         = [ name "=" ] number ;
    name        = letter { letter | digit | "-" | "_" } ;
    number      = [ "+" | "-" ] digits [ "." digits ] [ ( "e" | "E" ) [ "+" | "-" ] digits ] ;

Distribution names: ``cauchy`` (no arguments: standard Cauchy; otherwise
``cauchy(mu, sigma)``), ``standard-cauchy``, ``corr-normal-ratio(rho)``,
``f-ratio(n)``, ``laha``, ``log-uniform``, ``log-rademacher``,
``exponential[(rate)]``, ``constant(c)``, ``normal[(mu, sigma)]``.
Underscores and hyphens are interchangeable.  The only named tables are
``discrete-table:paper`` and ``region-uniform:paper``.

:func:`to_text` produces a string that :func:`parse_spec` maps back to an
equal spec.
"""
from __future__ import annotations

import re

from . import catalog as C
from .errors import SpecSyntaxError

__all__ = ["parse_spec", "to_text", "DIST_NAMES", "JOINT_NAMES"]

_DIST_PARAMS = {
    "cauchy": ("mu", "sigma"),
    "standard-cauchy": (),
    "corr-normal-ratio": ("rho",),
    "f-ratio": ("n",),
    "laha": (),
    "log-uniform": (),
    "log-rademacher": (),
    "exponential": ("rate",),
    "constant": ("c",),
    "normal": ("mu", "sigma"),
}
# argument lists that may be omitted entirely
_DEFAULTS = {
    "cauchy": None,
    "exponential": {"rate": 1.0},
    "normal": {"mu": 0.0, "sigma": 1.0},
}
DIST_NAMES = tuple(_DIST_PARAMS)
JOINT_NAMES = ("discrete-table", "region-uniform", "product", "bivariate-normal", "constructed")
_NAMED = {
    "discrete-table": {"paper": C.PAPER_TABLE},
    "region-uniform": {"paper": C.PAPER_REGIONS},
}

_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_-]*")
_NUM_RE = re.compile(r"[+-]?(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, *expected):
        raise SpecSyntaxError(self.text, self.pos, expected)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            self.error(repr(ch))
        self.pos += 1

    def name(self, *expected) -> tuple[str, int]:
        self.skip_ws()
        m = _NAME_RE.match(self.text, self.pos)
        if not m:
            self.error(*(expected or ("a name",)))
        start = self.pos
        self.pos = m.end()
        return m.group().lower().replace("_", "-"), start

    def number(self) -> float:
        self.skip_ws()
        m = _NUM_RE.match(self.text, self.pos)
        if not m:
            self.error("a number")
        self.pos = m.end()
        return float(m.group())

    def at_end(self):
        if self.peek() != "":
            self.error("end of input")

    # -- productions -------------------------------------------------------

    def spec(self):
        self.skip_ws()
        m = _NAME_RE.match(self.text, self.pos)
        if m and m.group().lower().replace("_", "-") in JOINT_NAMES:
            out = self.joint()
        else:
            out = self.dist()
        self.at_end()
        return out

    def joint(self):
        kind, start = self.name()
        if kind in _NAMED:
            self.expect(":")
            label, lpos = self.name("a table name")
            if label not in _NAMED[kind]:
                self.pos = lpos
                self.error(*(repr(k) for k in _NAMED[kind]))
            return _NAMED[kind][label]
        self.expect("(")
        if kind == "product":
            x = self.dist()
            self.expect(",")
            y = self.dist()
            self.expect(")")
            return C.ProductJoint(x, y)
        if kind == "bivariate-normal":
            (rho,) = self.args(("rho",), start)
            self.expect(")")
            return C.BivariateNormalJoint(rho)
        # constructed
        z = self.keyword_dist("z")
        w = C.constant(1.0)
        if self.peek() == ",":
            self.pos += 1
            w = self.keyword_dist("w")
        self.expect(")")
        from .construction import build_pair
        return build_pair(z, w)

    def keyword_dist(self, key):
        save = self.pos
        self.skip_ws()
        m = re.compile(r"([A-Za-z]+)\s*=").match(self.text, self.pos)
        if m:
            if m.group(1) != key:
                self.error(f"'{key}='")
            self.pos = m.end()
        else:
            self.pos = save
        return self.dist()

    def args(self, names, start):
        """Parse ``arg {, arg}`` (the opening paren already consumed)."""
        values = {}
        i = 0
        while True:
            self.skip_ws()
            m = re.compile(r"([A-Za-z_]+)\s*=").match(self.text, self.pos)
            if m:
                key = m.group(1)
                if key not in names or key in values:
                    self.error(*(f"'{n}='" for n in names if n not in values))
                self.pos = m.end()
            else:
                if i >= len(names):
                    self.error("')'")
                key = names[i]
            values[key] = self.number()
            i += 1
            if self.peek() == "," and len(values) < len(names):
                self.pos += 1
                continue
            break
        if len(values) != len(names):
            self.error("','")
        return tuple(values[n] for n in names)

    def dist(self):
        name, start = self.name(*(repr(n) for n in DIST_NAMES))
        if name not in _DIST_PARAMS:
            self.pos = start
            self.error(*(repr(n) for n in DIST_NAMES))
        names = _DIST_PARAMS[name]
        if self.peek() == "(" and names:
            self.pos += 1
            values = self.args(names, start)
            self.expect(")")
        elif name in _DEFAULTS or not names:
            if self.peek() == "(":
                # empty parens allowed for parameterless names
                self.pos += 1
                self.expect(")")
            dflt = _DEFAULTS.get(name)
            if name == "cauchy" or name == "standard-cauchy":
                return C.standard_cauchy()
            values = tuple(dflt[n] for n in names) if names else ()
        else:
            self.error("'('")
        return _build_dist(name, values)


def _build_dist(name, values):
    if name == "cauchy":
        return C.cauchy(*values)
    if name == "f-ratio":
        return C.f_ratio(values[0])
    return C.DistSpec(name.replace("-", "_"), tuple(values))


def parse_spec(text: str):
    """Parse spec text into a :class:`DistSpec` or :class:`JointSpec`.

    Raises
    ------
    SpecSyntaxError
        Text does not match the grammar; carries position and expected tokens.
    SpecDomainError
        A parameter is out of range (e.g. ``corr-normal-ratio(1.5)``).
    AdmissionError
        A ``constructed`` pair uses a law with an atom at zero.
    """
    if not text or not text.strip():
        raise SpecSyntaxError(text or "", 0, ("a spec",))
    return _Parser(text).spec()


def _fmt(v) -> str:
    if isinstance(v, int):
        return str(v)
    return repr(float(v))


def to_text(spec) -> str:
    """Canonical text of a spec."""
    if isinstance(spec, C.DistSpec):
        k = spec.kind
        if k == "standard_cauchy":
            return "cauchy"
        name = k.replace("_", "-")
        if not spec.params:
            return name
        return f"{name}({', '.join(_fmt(v) for v in spec.params)})"
    if isinstance(spec, (C.DiscreteTable, C.RegionUniform)):
        kind = spec.kind.replace("_", "-")
        return f"{kind}:{spec.name or '<custom>'}"
    if isinstance(spec, C.ProductJoint):
        return f"product({to_text(spec.x)}, {to_text(spec.y)})"
    if isinstance(spec, C.BivariateNormalJoint):
        return f"bivariate-normal({_fmt(spec.rho)})"
    if isinstance(spec, C.ConstructedPair):
        return f"constructed(z={to_text(spec.z)}, w={to_text(spec.w)})"
    raise TypeError(f"not a spec: {spec!r}")
