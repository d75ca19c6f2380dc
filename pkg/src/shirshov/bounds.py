"""Closed-form bounds, evaluated exactly with Python integers.

Bounds whose exponent involves ``log_3`` are exact only when the argument is
a power of three; otherwise the exponent is rounded *up* so the reported
number is never below the real bound, and the report says so.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Tuple


@dataclass(frozen=True)
class BoundReport:
    name: str
    params: Dict[str, int]
    value: int
    exact: bool = True
    note: str = ""

    @property
    def digits(self) -> int:
        return len(str(abs(self.value)))

    def to_record(self) -> dict:
        return {"name": self.name, "params": dict(self.params), "value": str(self.value),
                "digits": self.digits, "exact": self.exact, "note": self.note}


def _need(cond: bool, msg: str):
    if not cond:
        raise ValueError(msg)


def beth2(l: int, n: int) -> int:
    """(2l-1)(n-1)(n-2)/2: selective height over primitive 2-letter periods."""
    _need(l >= 1, "l must be >= 1")
    _need(n >= 3, "n must be >= 3")
    return (2 * l - 1) * (n - 1) * (n - 2) // 2


def beth3(l: int, n: int) -> int:
    _need(l >= 1, "l must be >= 1")
    _need(n >= 3, "n must be >= 3")
    return (2 * l - 1) * (n - 1) * (n - 2)


def beth_nminus1(l: int, n: int) -> int:
    _need(l >= 2, "l must be >= 2")
    _need(n >= 3, "n must be >= 3")
    return (l - 2) * (n - 1)


def psi_lower(n: int, l: int) -> int:
    """(l - 2^(n-1))(n-2)(n-3)/2, the stated lower-bound count."""
    _need(n >= 3, "n must be >= 3")
    _need(l > 2 ** (n - 1), "needs l > 2^(n-1)")
    return (l - 2 ** (n - 1)) * (n - 2) * (n - 3) // 2


def upsilon(n: int, l: int) -> int:
    """8 (l+1)^n n^6 l, as in the theorem statement."""
    _need(n >= 1 and l >= 1, "parameters must be positive")
    return 8 * (l + 1) ** n * n ** 6 * l


def upsilon_proof(n: int, l: int) -> int:
    """8 (l+1)^n n^6, the value reached at the end of the proof (no factor l)."""
    _need(n >= 1 and l >= 1, "parameters must be positive")
    return 8 * (l + 1) ** n * n ** 6


def phi(n: int, l: int) -> int:
    _need(n >= 1 and l >= 1, "parameters must be positive")
    return 8 * (l + 1) ** (n + 1) * n ** 6


def height_lower_exact(l: int, m: int) -> Fraction:
    _need(l >= 1 and m >= 1, "parameters must be positive")
    return Fraction((l - 1) * m * m, 4) + 1


def height_lower(l: int, m: int) -> int:
    """floor((l-1) m^2 / 4 + 1)."""
    v = height_lower_exact(l, m)
    return v.numerator // v.denominator


def _log3_ceiling_of_power(x: int, p: int) -> Tuple[int, bool]:
    """Smallest c with 3^c >= x^p, i.e. ceil(p * log3 x), and whether it is exact."""
    target = x ** p
    c, v = 0, 1
    while v < target:
        v *= 3
        c += 1
    return c, v == target


def bk_height_report(l: int, n: int) -> BoundReport:
    """2^87 l n^(12 log3 n + 48)."""
    _need(l >= 1 and n >= 1, "parameters must be positive")
    c, exact = _log3_ceiling_of_power(n, 12)
    value = 2 ** 87 * l * n ** (c + 48)
    note = "" if exact else f"over-approximated exponent: 12*log3({n}) rounded up to {c}"
    return BoundReport("bk_height", {"l": l, "n": n}, value, exact, note)


def bk_height(l: int, n: int) -> int:
    return bk_height_report(l, n).value


def bk_psi_report(n: int, d: int, l: int) -> BoundReport:
    """2^18 l (nd)^(3 log3(nd) + 13) d^2."""
    _need(n >= 1 and d >= 1 and l >= 1, "parameters must be positive")
    x = n * d
    c, exact = _log3_ceiling_of_power(x, 3)
    value = 2 ** 18 * l * x ** (c + 13) * d * d
    note = "" if exact else f"over-approximated exponent: 3*log3({x}) rounded up to {c}"
    return BoundReport("bk_psi", {"n": n, "d": d, "l": l}, value, exact, note)


def bk_psi(n: int, d: int, l: int) -> int:
    return bk_psi_report(n, d, l).value


def ess_l4_bound(t: int, l: int, n: int) -> int:
    """4 (l+1)^n n^4, an upper bound on the size of any n-good family (t is not used)."""
    _need(t >= 1 and l >= 1 and n >= 1, "parameters must be positive")
    return 4 * (l + 1) ** n * n ** 4


def co1_bound(k: int, l: int, n: int) -> int:
    """2(n-1) * beth(k, l, n) for the period lengths with a known beth: 2, 3, n-1."""
    if k == 2:
        b = beth2(l, n)
    elif k == 3:
        b = beth3(l, n)
    elif k == n - 1:
        b = beth_nminus1(l, n)
    else:
        raise ValueError(f"no closed form for period length {k} (use 2, 3 or n-1)")
    return 2 * (n - 1) * b


def bound_table(l: int, n: int) -> List[BoundReport]:
    """Every bound that is defined at (l, n), in a fixed order."""
    rows: List[BoundReport] = []

    def add(name, fn, params, **kw):
        try:
            rows.append(BoundReport(name, params, fn(), **kw))
        except ValueError:
            pass

    add("beth2", lambda: beth2(l, n), {"l": l, "n": n})
    add("beth3", lambda: beth3(l, n), {"l": l, "n": n})
    add("beth_nminus1", lambda: beth_nminus1(l, n), {"l": l, "n": n})
    add("psi_lower", lambda: psi_lower(n, l), {"n": n, "l": l})
    add("upsilon", lambda: upsilon(n, l), {"n": n, "l": l}, note="statement form, with factor l")
    add("upsilon_proof", lambda: upsilon_proof(n, l), {"n": n, "l": l}, note="proof form, without factor l")
    add("phi", lambda: phi(n, l), {"n": n, "l": l})
    hl = height_lower_exact(l, n)
    rows.append(BoundReport("height_lower", {"l": l, "m": n}, height_lower(l, n),
                            exact=hl.denominator == 1,
                            note="" if hl.denominator == 1 else f"floored from {hl}"))
    add("ess_l4_bound", lambda: ess_l4_bound(n - 1, l, n), {"t": n - 1, "l": l, "n": n})
    for k in (2, 3, n - 1):
        add(f"co1_bound[k={k}]", lambda k=k: co1_bound(k, l, n), {"k": k, "l": l, "n": n})
    rows.append(bk_height_report(l, n))
    rows.append(bk_psi_report(n, 4 * n, l))
    # co1 rows can repeat when n-1 is 2 or 3
    seen, out = set(), []
    for r in rows:
        key = (r.name, tuple(sorted(r.params.items())))
        if key not in seen:
            seen.add(key)
            out.append(r)
    return out
