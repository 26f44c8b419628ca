"""Closed-form parameters of the code families built by extension.

Each family names a base code ``[n, k, d]_q`` with known maximum weight and
evaluates what the extension produces: length ``n + n'``, the same ``k`` and
``d``, and maximum weight ``w_max + n'`` with ``n' = ceil(q d / (q-1)) - w_max``.
Families whose base is itself a simplex complement go through
:func:`complement_parameters` first.

Family keys follow the numbering used by the fixtures (``P4.1`` ... ``P6.2``,
``C6.1``); :data:`FAMILIES` lists them with their parameter names.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Callable, Mapping, Sequence

from mincode.codes import WeightDistribution
from mincode.constructions import complement_threshold, extension_length
from mincode.errors import ConstraintViolated, UnknownFamily


@dataclass(frozen=True)
class BaseParams:
    q: int
    n: int
    k: int
    d: int
    w_max: int


@dataclass(frozen=True)
class ExpectedParams:
    family: str
    q: int
    n: int
    k: int
    d: int
    w_max: int
    n_prime: int
    pad: int = 0
    distribution: WeightDistribution | None = None
    minimality_condition: str | None = None
    base: BaseParams | None = None
    notes: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if min(self.n, self.k, self.d, self.w_max, self.n_prime, self.pad) < 0:
            raise ValueError(f"negative parameter in {self}")
        if not self.d <= self.w_max <= self.n:
            raise ValueError(f"need d <= w_max <= n, got {self.d}, {self.w_max}, {self.n}")

    @property
    def nkd(self) -> tuple[int, int, int]:
        return self.n, self.k, self.d


def _require(ok: bool, message: str) -> None:
    if not ok:
        raise ConstraintViolated(message)


def _odd(x: int) -> bool:
    return x % 2 == 1


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % i for i in range(2, math.isqrt(p) + 1))


def _is_prime_power(q: int) -> bool:
    if q < 2:
        return False
    p = next(i for i in range(2, q + 1) if q % i == 0)
    while q % p == 0:
        q //= p
    return q == 1


def complement_parameters(base: BaseParams, h: int, w_min: int) -> BaseParams:
    """Parameters of the simplex complement of a projective code.

    With ``K = k + h`` the complement has length ``(q^K-1)/(q-1) - n`` and
    minimum weight ``q^(K-1) - w_max``.  Its maximum weight is ``q^(K-1)``
    when ``h >= 1`` (messages living only in the padded coordinates) and
    ``q^(K-1) - w_min`` when ``h = 0``.
    """
    q, K = base.q, base.k + h
    top = q ** (K - 1)
    return BaseParams(
        q=q,
        n=(q**K - 1) // (q - 1) - base.n,
        k=K,
        d=top - base.w_max,
        w_max=top if h >= 1 else top - w_min,
    )


def _extend(
    family: str,
    base: BaseParams,
    *,
    distribution: Mapping[int, int] | None = None,
    condition: str | None = None,
    notes: Sequence[str] = (),
    pad: int = 0,
) -> ExpectedParams:
    n_prime = extension_length(base.q, base.d, base.w_max)
    _require(n_prime >= 1, f"n' = {n_prime} < 1: the base code does not satisfy the AB condition")
    return ExpectedParams(
        family=family,
        q=base.q,
        n=base.n + n_prime + pad,
        k=base.k,
        d=base.d,
        w_max=base.w_max + n_prime + pad,
        n_prime=n_prime,
        pad=pad,
        distribution=WeightDistribution(distribution) if distribution is not None else None,
        minimality_condition=condition,
        base=base,
        notes=tuple(notes),
    )


def _solomon_stiffler_base(k: int, u: Sequence[int]) -> BaseParams:
    return BaseParams(
        q=2,
        n=2**k - 1 - sum(2**x - 1 for x in u),
        k=k,
        d=2 ** (k - 1) - sum(2 ** (x - 1) for x in u),
        w_max=2 ** (k - 1),
    )


def _check_profile(k: int, u: Sequence[int], least: int) -> None:
    _require(len(u) >= 1, "u must be nonempty")
    _require(all(a < b for a, b in zip(u, u[1:])), f"u must be strictly increasing, got {list(u)}")
    _require(u[0] >= least, f"u_1 >= {least} violated (u_1 = {u[0]})")
    _require(u[-1] < k - 1, f"k - 1 > u_t violated (k = {k}, u_t = {u[-1]})")
    _require(sum(u) < k, f"sum(u) < k violated ({sum(u)} >= {k})")


def _p41(p):
    k, u = int(p["k"]), [int(x) for x in p["u"]]
    _check_profile(k, u, 1)
    return _extend("P4.1", _solomon_stiffler_base(k, u))


def _p50(p):
    k, u = int(p["k"]), [int(x) for x in p["u"]]
    _require(k >= 5, f"k >= 5 violated (k = {k})")
    _check_profile(k, u, 3)
    return _extend("P5.0", _solomon_stiffler_base(k, u), notes=("self-orthogonal, pad 0",))


def _p42(p):
    m = int(p["m"])
    _require(m >= 2, f"m >= 2 violated (m = {m})")
    base = BaseParams(2, 2 ** (2 * m) - 1, 3 * m, 2 ** (2 * m - 1) - 2 ** (m - 1), 2 ** (2 * m - 1) + 2 ** (m - 1))
    return _extend("P4.2", base)


def _p43(p):
    m, h = int(p["m"]), int(p["h"])
    _require(m >= 2, f"m >= 2 violated (m = {m})")
    _require(h >= 1, f"h >= 1 violated (h = {h})")
    K = 3 * m + h
    base = BaseParams(2, 2**K - 2 ** (2 * m), K, 2 ** (K - 1) - 2 ** (2 * m - 1) - 2 ** (m - 1), 2 ** (K - 1))
    return _extend("P4.3", base)


def _p44(p):
    m, l = int(p["m"]), int(p["l"])
    _require(l >= 1 and m % l == 0 and _odd(m // l), f"m/l odd violated (m = {m}, l = {l})")
    _require(m + l >= 4, f"m + l >= 4 violated (m + l = {m + l})")
    e = (m + l - 4) // 2
    base = BaseParams(2, 2 ** (m - 1) - 1, m, 2 ** (m - 2) - 2**e, 2 ** (m - 2) + 2**e)
    return _extend("P4.4", base)


def _p45(p):
    m, h = int(p["m"]), int(p["h"])
    _require(m >= 5 and _odd(m), f"m >= 5 odd violated (m = {m})")
    _require(h >= 1, f"h >= 1 violated (h = {h})")
    K = m + h - 1
    base = BaseParams(2, 2**K - 2 ** (m - 2) - 1, K, 2 ** (K - 1) - 2 ** (m - 3) - 2 ** ((m - 3) // 2), 2 ** (K - 1))
    return _extend("P4.5", base, notes=("maximum weight of C' is 2^(m+h-2) + n'",))


def _p47(p):
    m = int(p["m"])
    h = int(p.get("h", p.get("t", 0)))
    _require(m >= 3, f"m >= 3 violated (m = {m})")
    _require(h >= 1, f"h >= 1 violated (h = {h})")
    K = 2 * m + h - 2
    base = BaseParams(
        2, 2**K - 2 ** (2 * m - 3) - 2 ** (m - 2), K,
        2 ** (K - 1) - 2 ** (2 * m - 4) - 2 ** (m - 2), 2 ** (K - 1),
    )
    return _extend("P4.7", base, notes=("n' = 2^(2m+h-3) - 2^(2m-3) - 2^(m-1), reading t as h",))


def _ding_base(m: int, n1: int) -> tuple[BaseParams, int]:
    _require(m >= 3 and _odd(m), f"m odd >= 3 violated (m = {m})")
    s = 2 ** ((m - 1) // 2)
    _require(n1 in (2 ** (m - 1), 2 ** (m - 1) + s), f"n1 must be 2^(m-1) or 2^(m-1) + 2^((m-1)/2), got {n1}")
    return BaseParams(2, n1, m, (n1 - s) // 2, (n1 + s) // 2), s


def _p48(p):
    m = int(p["m"])
    n1 = int(p.get("n1", 2 ** (m - 1)))
    base, _ = _ding_base(m, n1)
    return _extend("P4.8", base)


def _p49(p):
    m = int(p["m"])
    t = int(p.get("t", p.get("h", 1)))
    n1 = int(p.get("n1", 2 ** (m - 1)))
    _require(t >= 1, f"t >= 1 violated (t = {t})")
    base, s = _ding_base(m, n1)
    comp = complement_parameters(base, t, (n1 - s) // 2)
    return _extend("P4.9", comp, condition="complement of a projective code, h = t")


def _p410(p):
    q, m = int(p["q"]), int(p["m"])
    _require(_is_prime(q) and q % 2 == 1, f"q odd prime violated (q = {q})")
    _require(m >= 3 and _odd(m), f"m odd >= 3 violated (m = {m})")
    e = q ** ((m - 3) // 2)
    base = BaseParams(q, q ** (m - 1), m, q ** (m - 1) - q ** (m - 2) - e, q ** (m - 1) - q ** (m - 2) + e)
    return _extend("P4.10", base)


def _p411(p):
    n, h = int(p["n"]), int(p["h"])
    _require(n >= 3, f"n >= 3 violated (n = {n})")
    _require(h >= 0, f"h >= 0 violated (h = {h})")
    w0 = n if n % 2 == 0 else n - 1
    c0 = BaseParams(2, n, n - 1, 2, w0)
    comp = complement_parameters(c0, h, 2)
    ok = complement_threshold(2, n - 1, h, w0)
    _require(ok, f"h > log2({w0}) - {n} + 3 violated (h = {h})")
    notes = ("h = 0: the complement's maximum weight is 2^(n-2) - 2",) if h == 0 else ()
    cond = f"h > log2({w0}) - n + 3"
    return _extend("P4.11", comp, condition=cond, notes=notes)


def _p51(p):
    m = int(p["m"])
    _require(m >= 3, f"m >= 3 violated (m = {m})")
    return _extend("P5.1", BaseParams(2, 2**m - 1, m, 2 ** (m - 1), 2 ** (m - 1)))


def _p52(p):
    m = int(p["m"])
    _require(m >= 3, f"m >= 3 violated (m = {m})")
    base = BaseParams(2, 2 ** (2 * m - 2) + 2 ** (m - 1) - 1, 2 * m - 1, 2 ** (2 * m - 3), 2 ** (2 * m - 3) + 2 ** (m - 1))
    return _extend("P5.2", base)


def _p54(p):
    m = int(p["m"])
    _require(m >= 3, f"m >= 3 violated (m = {m})")
    base = BaseParams(2, 2 ** (2 * m - 3) + 2 ** (m - 2) - 1, 2 * m - 2, 2 ** (2 * m - 4), 2 ** (2 * m - 4) + 2 ** (m - 2))
    return _extend("P5.4", base)


def _simplex_base(q: int, m: int) -> BaseParams:
    return BaseParams(q, (q**m - 1) // (q - 1), m, q ** (m - 1), q ** (m - 1))


def _p61(p):
    q, m = int(p["q"]), int(p["m"])
    _require(_is_prime_power(q), f"q must be a prime power, got {q}")
    _require(m >= 2, f"m >= 2 violated (m = {m})")
    base = _simplex_base(q, m)
    n_prime = extension_length(q, base.d, base.w_max)
    top = q ** (m - 1)
    dist = {0: 1, top: top - 1, top + n_prime: (q - 1) * top}
    return _extend("P6.1", base, distribution=dist)


def _c61(p):
    q, m = int(p.get("q", 3)), int(p["m"])
    _require(q == 3, f"q = 3 required, got {q}")
    _require(m >= 2, f"m >= 2 violated (m = {m})")
    base = _simplex_base(3, m)
    n_prime = extension_length(3, base.d, base.w_max)
    top = 3 ** (m - 1)
    dist = {0: 1, top: top - 1, top + n_prime + 1: 2 * top}
    return _extend("C6.1", base, distribution=dist, pad=1, notes=("self-orthogonal after one padding column",))


def _p62(p):
    m = int(p["m"])
    _require(m >= 5 and _odd(m), f"m >= 5 odd violated (m = {m})")
    s, r = 2 ** ((m - 1) // 2), 2 ** ((m - 3) // 2)
    half = 2 ** (m - 1)
    base = BaseParams(2, 2**m - 1, 2 * m, half - s, half + s)
    rows = [
        (half - s, (half + s - 1) * (2 ** (m - 2) + r)),
        (half, (half - 1) * (half + 1)),
        (half + s, (half - s - 1) * (2 ** (m - 2) - r)),
        (2**m - 4 * s, (half - s) * (2 ** (m - 2) + r)),
        (2**m - 3 * s, half * (half + 1)),
        (2**m - 2 * s, (half + s) * (2 ** (m - 2) - r)),
    ]
    dist: dict[int, int] = {0: 1}
    for w, c in rows:
        dist[w] = dist.get(w, 0) + c
    notes = ("weight 2^m - 2^((m+3)/2) coincides with 2^(m-1); counts merged",) if m == 5 else ()
    return _extend("P6.2", base, distribution=dist, notes=notes)


FAMILIES: dict[str, tuple[Callable[[Mapping[str, Any]], ExpectedParams], tuple[str, ...]]] = {
    "P4.1": (_p41, ("k", "u")),
    "P4.2": (_p42, ("m",)),
    "P4.3": (_p43, ("m", "h")),
    "P4.4": (_p44, ("m", "l")),
    "P4.5": (_p45, ("m", "h")),
    "P4.7": (_p47, ("m", "h")),
    "P4.8": (_p48, ("m", "n1")),
    "P4.9": (_p49, ("m", "t", "n1")),
    "P4.10": (_p410, ("q", "m")),
    "P4.11": (_p411, ("n", "h")),
    "P5.0": (_p50, ("k", "u")),
    "P5.1": (_p51, ("m",)),
    "P5.2": (_p52, ("m",)),
    "P5.4": (_p54, ("m",)),
    "P6.1": (_p61, ("q", "m")),
    "P6.2": (_p62, ("m",)),
    "C6.1": (_c61, ("m",)),
}


def family_parameters(family: str, params: Mapping[str, Any]) -> ExpectedParams:
    """Predicted parameters of the extended code of ``family``.

    Raises :class:`UnknownFamily` for unlisted keys and
    :class:`ConstraintViolated` when ``params`` break the family's constraints.
    """
    key = family.strip().upper()
    if key not in FAMILIES:
        raise UnknownFamily(family)
    fn, _ = FAMILIES[key]
    try:
        return fn(params)
    except KeyError as exc:
        raise ConstraintViolated(f"{key} needs parameter {exc.args[0]}") from None
