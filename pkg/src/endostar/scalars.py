"""Exact Gaussian-rational scalars backed by sympy's ``QQ_I`` domain."""

from math import isqrt

from sympy.polys.domains import QQ, QQ_I

Scalar = type(QQ_I(0))

ZERO = QQ_I(0)
ONE = QQ_I(1)
IMAG = QQ_I(0, 1)


def scalar(value, imag=0) -> Scalar:
    """Coerce ints, ``QQ`` values, ``"p/q"`` strings or scalars into ``QQ_I``."""

    if isinstance(value, Scalar) and not imag:
        return value
    return QQ_I(rational(value), rational(imag))


def rational(value):
    """Coerce an int, ``QQ`` value or ``"p/q"`` string into ``QQ``."""

    if isinstance(value, str):
        text = value.strip()
        try:
            if "/" in text:
                num, den = text.split("/")
                return QQ(int(num), int(den))
            return QQ(int(text))
        except (ValueError, ZeroDivisionError) as e:
            raise ValueError(f"not an exact rational: {value!r}") from e
    if isinstance(value, Scalar):
        if value.y:
            raise ValueError(f"{value} is not real")
        return value.x
    return QQ.convert(value)


def format_rational(q) -> str:
    return str(QQ.convert(q))


def conjugate(z: Scalar) -> Scalar:
    return QQ_I(z.x, -z.y)


def abs_squared(z: Scalar):
    return z.x * z.x + z.y * z.y


def rational_sqrt(q):
    """Exact square root of a nonnegative rational, or ``None`` when irrational."""

    q = QQ.convert(q)
    num, den = int(QQ.numer(q)), int(QQ.denom(q))
    rn, rd = _isqrt(num), _isqrt(den)
    if rn is None or rd is None:
        return None
    return QQ(rn, rd)


def _isqrt(k: int) -> int | None:
    if k < 0:
        return None
    r = isqrt(k)
    return r if r * r == k else None


def to_json(z: Scalar) -> dict[str, str]:
    return {"re": format_rational(z.x), "im": format_rational(z.y)}


def from_json(data) -> Scalar:
    return QQ_I(rational(data["re"]), rational(data.get("im", "0")))
