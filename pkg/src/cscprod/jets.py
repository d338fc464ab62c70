"""Second-order forward-mode differentiation.

A :class:`Jet2` carries a value together with its gradient and Hessian with
respect to the chart parameters. Elementary functions in this module accept
either plain floats or jets, so a chart map written once with them can be
evaluated both ways (jets for the geometry, floats for finite-difference
oracles).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np


class DomainError(ValueError):
    """An elementary function was evaluated outside its domain."""

    def __init__(self, func: str, value: float):
        super().__init__(f"{func}: argument {value!r} outside domain")
        self.func = func
        self.value = value


class OutsideDomainError(ValueError):
    pass


class Jet2:
    """Truncated second-order Taylor expansion in ``n`` variables."""

    __slots__ = ("val", "grad", "hess")

    def __init__(self, val: float, grad: np.ndarray, hess: np.ndarray):
        self.val = float(val)
        self.grad = grad
        self.hess = hess

    @property
    def n(self) -> int:
        return self.grad.shape[0]

    def __repr__(self):
        return f"Jet2(val={self.val!r}, grad={self.grad!r})"

    def chain(self, f0: float, f1: float, f2: float) -> "Jet2":
        g = self.grad
        return Jet2(f0, f1 * g, f1 * self.hess + f2 * np.outer(g, g))

    def __add__(self, other):
        if isinstance(other, Jet2):
            return Jet2(self.val + other.val, self.grad + other.grad, self.hess + other.hess)
        return Jet2(self.val + other, self.grad, self.hess)

    __radd__ = __add__

    def __neg__(self):
        return Jet2(-self.val, -self.grad, -self.hess)

    def __pos__(self):
        return self

    def __sub__(self, other):
        if isinstance(other, Jet2):
            return Jet2(self.val - other.val, self.grad - other.grad, self.hess - other.hess)
        return Jet2(self.val - other, self.grad, self.hess)

    def __rsub__(self, other):
        return Jet2(other - self.val, -self.grad, -self.hess)

    def __mul__(self, other):
        if isinstance(other, Jet2):
            a, b = self, other
            cross = np.outer(a.grad, b.grad)
            return Jet2(
                a.val * b.val,
                a.grad * b.val + a.val * b.grad,
                a.hess * b.val + a.val * b.hess + cross + cross.T,
            )
        return Jet2(self.val * other, self.grad * other, self.hess * other)

    __rmul__ = __mul__

    def reciprocal(self) -> "Jet2":
        v = self.val
        if v == 0.0:
            raise DomainError("reciprocal", v)
        return self.chain(1.0 / v, -1.0 / v**2, 2.0 / v**3)

    def __truediv__(self, other):
        if isinstance(other, Jet2):
            return self * other.reciprocal()
        return Jet2(self.val / other, self.grad / other, self.hess / other)

    def __rtruediv__(self, other):
        return other * self.reciprocal()

    def __pow__(self, p):
        if isinstance(p, Jet2):
            return exp(p * log(self))
        v = self.val
        if p == 2:
            return self * self
        if v <= 0.0 and not float(p).is_integer():
            raise DomainError("power", v)
        return self.chain(v**p, p * v ** (p - 1), p * (p - 1) * v ** (p - 2))

    def __rpow__(self, base):
        return exp(self * math.log(base))


def is_jet(x) -> bool:
    return isinstance(x, Jet2)


def constant(c: float, n: int) -> Jet2:
    return Jet2(c, np.zeros(n), np.zeros((n, n)))


def seed(u, i: int) -> Jet2:
    """Jet of the i-th coordinate function at the point ``u``."""
    u = np.asarray(u, dtype=float)
    n = u.shape[0]
    if not 0 <= i < n:
        raise IndexError(f"seed index {i} out of range for {n} parameters")
    grad = np.zeros(n)
    grad[i] = 1.0
    return Jet2(u[i], grad, np.zeros((n, n)))


def seed_all(u) -> list[Jet2]:
    return [seed(u, i) for i in range(len(u))]


def value(x) -> float:
    return x.val if isinstance(x, Jet2) else float(x)


# -- elementary functions -------------------------------------------------


def sin(x):
    if isinstance(x, Jet2):
        s, c = math.sin(x.val), math.cos(x.val)
        return x.chain(s, c, -s)
    return math.sin(x)


def cos(x):
    if isinstance(x, Jet2):
        s, c = math.sin(x.val), math.cos(x.val)
        return x.chain(c, -s, -c)
    return math.cos(x)


def sinh(x):
    if isinstance(x, Jet2):
        s, c = math.sinh(x.val), math.cosh(x.val)
        return x.chain(s, c, s)
    return math.sinh(x)


def cosh(x):
    if isinstance(x, Jet2):
        s, c = math.sinh(x.val), math.cosh(x.val)
        return x.chain(c, s, c)
    return math.cosh(x)


def exp(x):
    if isinstance(x, Jet2):
        e = math.exp(x.val)
        return x.chain(e, e, e)
    return math.exp(x)


def log(x):
    v = value(x)
    if v <= 0.0:
        raise DomainError("log", v)
    if isinstance(x, Jet2):
        return x.chain(math.log(v), 1.0 / v, -1.0 / v**2)
    return math.log(v)


def sqrt(x):
    v = value(x)
    if isinstance(x, Jet2):
        if v <= 0.0:
            raise DomainError("sqrt", v)
        r = math.sqrt(v)
        return x.chain(r, 0.5 / r, -0.25 / (r * v))
    if v < 0.0:
        raise DomainError("sqrt", v)
    return math.sqrt(v)


def arccos(x):
    v = value(x)
    if isinstance(x, Jet2):
        if abs(v) >= 1.0:
            raise DomainError("arccos", v)
        w = 1.0 - v * v
        return x.chain(math.acos(v), -1.0 / math.sqrt(w), -v / w**1.5)
    if abs(v) > 1.0:
        raise DomainError("arccos", v)
    return math.acos(v)


def arcsinh(x):
    if isinstance(x, Jet2):
        v = x.val
        w = 1.0 + v * v
        return x.chain(math.asinh(v), 1.0 / math.sqrt(w), -v / w**1.5)
    return math.asinh(x)


def arccosh(x):
    v = value(x)
    if isinstance(x, Jet2):
        if v <= 1.0:
            raise DomainError("arccosh", v)
        w = v * v - 1.0
        return x.chain(math.acosh(v), 1.0 / math.sqrt(w), -v / w**1.5)
    if v < 1.0:
        raise DomainError("arccosh", v)
    return math.acosh(v)


def arctan(x):
    if isinstance(x, Jet2):
        v = x.val
        w = 1.0 + v * v
        return x.chain(math.atan(v), 1.0 / w, -2.0 * v / w**2)
    return math.atan(x)


_UNARY = {
    "sin": sin,
    "cos": cos,
    "sinh": sinh,
    "cosh": cosh,
    "exp": exp,
    "ln": log,
    "log": log,
    "sqrt": sqrt,
    "arccos": arccos,
    "arcsinh": arcsinh,
    "arccosh": arccosh,
    "arctan": arctan,
    "neg": lambda x: -x,
}

_BINARY = {
    "+": lambda x, y: x + y,
    "-": lambda x, y: x - y,
    "*": lambda x, y: x * y,
    "/": lambda x, y: x / y,
    "pow": lambda x, y: x**y,
}


def elementary(tag: str, x, y=None):
    """Apply an elementary operation by name (``"sin"``, ``"*"``, ``"pow"``, ...)."""
    if tag in _UNARY:
        if y is not None:
            raise TypeError(f"{tag} takes one argument")
        return _UNARY[tag](x)
    if tag in _BINARY:
        if y is None:
            raise TypeError(f"{tag} takes two arguments")
        return _BINARY[tag](x, y)
    raise KeyError(f"unknown elementary operation {tag!r}")


# -- points ---------------------------------------------------------------


@dataclass(frozen=True)
class Jet2Point:
    """Value, first and second partials of an ambient-valued map.

    ``first[i]`` is d f / d u_i and ``second[i, j]`` is d^2 f / du_i du_j,
    both as ambient vectors.
    """

    value: np.ndarray
    first: np.ndarray
    second: np.ndarray

    @property
    def n(self) -> int:
        return self.first.shape[0]

    @property
    def dim(self) -> int:
        return self.value.shape[0]


def lift(components, n: int) -> Jet2Point:
    dim = len(components)
    val = np.empty(dim)
    first = np.zeros((n, dim))
    second = np.zeros((n, n, dim))
    for a, comp in enumerate(components):
        if isinstance(comp, Jet2):
            val[a] = comp.val
            first[:, a] = comp.grad
            second[:, :, a] = comp.hess
        else:
            val[a] = comp
    return Jet2Point(val, first, second)


def evaluate_chart(chart, u) -> Jet2Point:
    """Exact value, first and second partials of ``chart`` at ``u``."""
    u = np.asarray(u, dtype=float)
    chart.require_inside(u)
    return lift(chart.func(seed_all(u)), u.shape[0])


def central_differences(func, u, h=None):
    """Finite-difference first and second partials of a float-valued map.

    Used as an independent oracle; ``h`` defaults to cbrt(machine eps)
    scaled by max(1, |u_i|).
    """
    u = np.asarray(u, dtype=float)
    n = u.shape[0]
    if h is None:
        h = np.cbrt(np.finfo(float).eps) * np.maximum(1.0, np.abs(u))
    h = np.broadcast_to(np.asarray(h, dtype=float), (n,))

    def f(p):
        return np.asarray(func(list(p)), dtype=float)

    f0 = f(u)
    dim = f0.shape[0]
    first = np.zeros((n, dim))
    second = np.zeros((n, n, dim))
    E = np.eye(n) * h
    for i in range(n):
        fp, fm = f(u + E[i]), f(u - E[i])
        first[i] = (fp - fm) / (2 * h[i])
        second[i, i] = (fp - 2 * f0 + fm) / h[i] ** 2
        for j in range(i):
            d = (
                f(u + E[i] + E[j])
                - f(u + E[i] - E[j])
                - f(u - E[i] + E[j])
                + f(u - E[i] - E[j])
            ) / (4 * h[i] * h[j])
            second[i, j] = second[j, i] = d
    return first, second
