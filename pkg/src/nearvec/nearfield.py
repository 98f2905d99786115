"""Finite Dickson nearfields DN(q, n).

A Dickson nearfield of order q^n is the Galois field GF(q^n) with its
multiplication replaced by a twisted product

    a o b = a * b^(q^j(a))        (field product on the right),

where the automorphism exponent j(a) is read off the discrete logarithm
of the left operand: writing a = g^k for a fixed primitive element g,
j(a) is the unique j in 0..n-1 with k = (q^j - 1)/(q - 1) (mod n).
Addition is untouched, so the twisted structure keeps the left
distributive law a o (b + c) = a o b + a o c while (for n >= 2) losing
the right one.

For (q, n) = (3, 2) this reduces to the classical rule "a * b when a is
a square, a * b^3 otherwise".  Note that the widely printed 9x9 table of
that operation is the transpose of the rule as stated (row label acting
on the right); this module implements the stated rule and the table
fidelity test pins the orientation.

Elements are integer codes 0 .. q^n - 1.  The base-p digits c_0..c_{d-1}
of a code are the coefficients of the residue polynomial
c_0 + c_1 x + ... + c_{d-1} x^{d-1} over GF(p), reduced modulo a fixed
monic irreducible polynomial of degree d = l*n (where q = p^l).  The
modulus is the lexicographically smallest irreducible candidate with
coefficients compared low-degree-first, and the generator is the
smallest primitive code, so every table is reproducible.
"""

from __future__ import annotations

import functools
import itertools
import re
from dataclasses import dataclass

TABLE_LIMIT = 1 << 12   # largest order for which full operation tables are materialized
ORDER_LIMIT = 1 << 20   # largest order for which log/exp tables are built at all

_ADD_TABLE_LIMIT = 256  # eager addition table below this order

_TERM_RE = re.compile(r"^(\d*)x(?:\^(\d+))?$")


# ---------------------------------------------------------------------------
# small number theory helpers (desk-scale inputs, trial division is plenty)

def _prime_factors(n: int) -> list[int]:
    """Sorted distinct prime factors of n >= 1."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out.append(n)
    return out


def _prime_power(q: int) -> tuple[int, int] | None:
    """(p, l) with q = p**l, or None if q is not a prime power."""
    fs = _prime_factors(q)
    if len(fs) != 1:
        return None
    p = fs[0]
    l = 0
    while q % p == 0:
        q //= p
        l += 1
    return (p, l) if q == 1 else None


# ---------------------------------------------------------------------------
# polynomial arithmetic over GF(p): little-endian coefficient lists, trimmed

def _ptrim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _ptrim(out)


def _pmod(a, m, p):
    """Remainder of a modulo the monic polynomial m."""
    a = list(a)
    dm = len(m) - 1
    while len(a) - 1 >= dm:
        c = a[-1]
        if c:
            k = len(a) - 1 - dm
            for i, mi in enumerate(m):
                a[k + i] = (a[k + i] - c * mi) % p
        a.pop()
    return _ptrim(a)


def _psub(a, b, p):
    out = [0] * max(len(a), len(b))
    for i, ai in enumerate(a):
        out[i] = ai
    for i, bi in enumerate(b):
        out[i] = (out[i] - bi) % p
    return _ptrim(out)


def _ppowmod(a, e, m, p):
    r = [1]
    a = _pmod(a, m, p)
    while e:
        if e & 1:
            r = _pmod(_pmul(r, a, p), m, p)
        a = _pmod(_pmul(a, a, p), m, p)
        e >>= 1
    return r


def _pgcd(a, b, p):
    a, b = _ptrim(list(a)), _ptrim(list(b))
    while b:
        inv = pow(b[-1], -1, p)
        bm = [(c * inv) % p for c in b]
        a, b = b, _pmod(a, bm, p)
    return a


def _is_irreducible(f, p):
    """Rabin irreducibility test for a monic polynomial f over GF(p)."""
    d = len(f) - 1
    x = [0, 1]
    xq = _ppowmod(x, p ** d, f, p)
    if _pmod(_psub(xq, x, p), f, p):
        return False
    for r in _prime_factors(d):
        h = _ppowmod(x, p ** (d // r), f, p)
        if len(_pgcd(_psub(h, x, p), f, p)) > 1:
            return False
    return True


def _digits_of(code, p, d):
    out = [0] * d
    for i in range(d):
        code, out[i] = divmod(code, p)[0], code % p
    return out


def _code_of(digits, p):
    code = 0
    for c in reversed(digits):
        code = code * p + c
    return code


# ---------------------------------------------------------------------------
# public data types

@dataclass(frozen=True)
class PairVerdict:
    """Outcome of the Dickson pair test; reason is set when invalid."""
    valid: bool
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.valid


@dataclass(frozen=True)
class DicksonPair:
    q: int
    n: int
    p: int
    l: int


@dataclass(frozen=True)
class Witness:
    """Triple violating right distributivity: (alpha+beta) o lam != alpha o lam + beta o lam."""
    alpha: int
    beta: int
    lam: int


def validate_dickson_pair(q: int, n: int) -> PairVerdict:
    """Check the three Dickson pair conditions for (q, n).

    Returns a verdict carrying the failed condition; raises on
    non-integer or out-of-range inputs.
    """
    if isinstance(q, bool) or isinstance(n, bool) or not isinstance(q, int) or not isinstance(n, int):
        raise TypeError("q and n must be integers")
    if q < 2 or n < 1:
        raise ValueError("need q >= 2 and n >= 1")
    if _prime_power(q) is None:
        return PairVerdict(False, f"q = {q} is not a prime power")
    for r in _prime_factors(n):
        if (q - 1) % r:
            return PairVerdict(False, f"{r} does not divide q-1 = {q - 1}")
    if q % 4 == 3 and n % 4 == 0:
        return PairVerdict(False, "q = 3 (mod 4) and 4 divides n")
    return PairVerdict(True, None)


_UNSET = object()


class Nearfield:
    """Immutable arithmetic context for DN(q, n).

    All operations are pure table lookups after construction; instances
    are safe to share between threads.  Obtain instances through
    build_nearfield(), which caches them.
    """

    def __init__(self, q: int, n: int):
        verdict = validate_dickson_pair(q, n)
        if not verdict:
            raise ValueError(f"({q},{n}) is not a Dickson pair: {verdict.reason}")
        p, l = _prime_power(q)
        self.q = q
        self.n = n
        self.p = p
        self.l = l
        self.d = l * n
        self.order = q ** n
        self.pair = DicksonPair(q, n, p, l)
        if self.order > ORDER_LIMIT:
            raise ValueError(f"order {self.order} exceeds the hard limit {ORDER_LIMIT}")

        self.modulus = self._find_modulus()
        self.generator = self._find_generator()
        self._build_log_tables()
        self._build_coset_table()

        self._qpow = tuple(q ** j for j in range(n))
        self._negt = tuple(
            _code_of([(-c) % p for c in _digits_of(a, p, self.d)], p)
            for a in range(self.order)
        )
        if self.order <= _ADD_TABLE_LIMIT:
            self._addt = [
                [self._add_digits(a, b) for b in range(self.order)]
                for a in range(self.order)
            ]
        else:
            self._addt = None
        self._mul_table = None
        self._add_table_full = None
        self._witness = _UNSET

    # -- construction ------------------------------------------------------

    def _find_modulus(self):
        p, d = self.p, self.d
        # candidates in lexicographic order, constant coefficient compared first
        for tail in itertools.product(range(p), repeat=d):
            f = list(tail) + [1]
            if _is_irreducible(f, p):
                return tuple(f)
        raise RuntimeError(f"no irreducible polynomial of degree {d} over GF({p})")

    def _find_generator(self):
        p, d, order = self.p, self.d, self.order
        f = list(self.modulus)
        exponents = [(order - 1) // r for r in _prime_factors(order - 1)]
        for a in range(1, order):
            digits = _digits_of(a, p, d)
            if all(_ppowmod(digits, e, f, p) != [1] for e in exponents):
                return a
        raise RuntimeError("no primitive element found")

    def _build_log_tables(self):
        p, order = self.p, self.order
        f = list(self.modulus)
        g = _digits_of(self.generator, p, self.d)
        exp = [0] * (order - 1)
        cur = [1]
        for k in range(order - 1):
            exp[k] = _code_of(cur + [0] * (self.d - len(cur)), p)
            cur = _pmod(_pmul(cur, g, p), f, p)
        if _ptrim(cur) != [1]:
            raise RuntimeError("generator order mismatch: g^(order-1) != 1")
        log = [-1] * order
        for k, a in enumerate(exp):
            if log[a] != -1:
                raise RuntimeError("log table is not a bijection")
            log[a] = k
        if log.count(-1) != 1:
            raise RuntimeError("log table does not cover all nonzero elements")
        self._exp = tuple(exp)
        self._log = tuple(log)

    def _build_coset_table(self):
        q, n = self.q, self.n
        table = [-1] * n
        acc = 0  # (q^j - 1)/(q - 1) = 1 + q + ... + q^(j-1)
        for j in range(n):
            r = acc % n
            if table[r] != -1:
                raise RuntimeError("coupling residues are not a complete residue system")
            table[r] = j
            acc += q ** j
        self.coset_table = tuple(table)

    # -- additive structure --------------------------------------------------

    def _add_digits(self, a, b):
        p = self.p
        out, mult = 0, 1
        while a or b:
            out += ((a + b) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def add(self, a: int, b: int) -> int:
        """Coefficientwise sum mod p."""
        if self._addt is not None:
            return self._addt[a][b]
        return self._add_digits(a, b)

    def neg(self, a: int) -> int:
        return self._negt[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self._negt[b])

    # -- multiplicative structure --------------------------------------------

    def field_mul(self, a: int, b: int) -> int:
        """Untwisted Galois field product (reference operation)."""
        if a == 0 or b == 0:
            return 0
        lg = self._log
        return self._exp[(lg[a] + lg[b]) % (self.order - 1)]

    def field_pow(self, a: int, e: int) -> int:
        if e < 0:
            raise ValueError("negative exponent")
        if a == 0:
            return 0 if e else 1
        return self._exp[(self._log[a] * e) % (self.order - 1)]

    def mul(self, a: int, b: int) -> int:
        """The twisted product a o b."""
        if a == 0 or b == 0:
            return 0
        lg = self._log
        ka = lg[a]
        j = self.coset_table[ka % self.n]
        return self._exp[(ka + lg[b] * self._qpow[j]) % (self.order - 1)]

    def inv(self, a: int) -> int:
        """Two-sided inverse for o."""
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        o1 = self.order - 1
        ka = self._log[a]
        j = self.coset_table[ka % self.n]
        b = self._exp[((-ka % o1) * self._qpow[(self.n - j) % self.n]) % o1]
        assert self.mul(a, b) == 1 and self.mul(b, a) == 1
        return b

    def coset_index(self, a: int) -> int:
        """The automorphism exponent j(a); for n = 2 it is 0 iff a is a square."""
        if a == 0:
            raise ValueError("coset index undefined for 0")
        return self.coset_table[self._log[a] % self.n]

    def log(self, a: int) -> int:
        """Discrete logarithm to base generator."""
        if a == 0:
            raise ValueError("log of 0 undefined")
        return self._log[a]

    # -- derived data ----------------------------------------------------------

    @property
    def elements(self) -> range:
        return range(self.order)

    @property
    def is_field(self) -> bool:
        return self.n == 1

    def find_witness(self) -> Witness | None:
        """First (alpha, beta, lam) in lexicographic code order violating
        right distributivity, or None for a field (n = 1).  Cached."""
        if self._witness is not _UNSET:
            return self._witness
        w = None
        if self.n > 1:  # fields are two-sided distributive, nothing to scan
            order, add, mul = self.order, self.add, self.mul
            for alpha in range(order):
                for beta in range(order):
                    s = add(alpha, beta)
                    for lam in range(order):
                        if mul(s, lam) != add(mul(alpha, lam), mul(beta, lam)):
                            w = Witness(alpha, beta, lam)
                            break
                    if w:
                        break
                if w:
                    break
        self._witness = w
        return w

    def mul_table(self) -> list[list[int]]:
        """Full o table, row index = left operand.  Order-limited."""
        if self.order > TABLE_LIMIT:
            raise ValueError(f"order {self.order} too large for a full table (limit {TABLE_LIMIT})")
        if self._mul_table is None:
            mul = self.mul
            self._mul_table = [[mul(a, b) for b in range(self.order)] for a in range(self.order)]
        return self._mul_table

    def add_table(self) -> list[list[int]]:
        if self.order > TABLE_LIMIT:
            raise ValueError(f"order {self.order} too large for a full table (limit {TABLE_LIMIT})")
        if self._add_table_full is None:
            add = self.add
            self._add_table_full = [[add(a, b) for b in range(self.order)] for a in range(self.order)]
        return self._add_table_full

    # -- text codec -------------------------------------------------------------

    def parse_element(self, text: str) -> int:
        """Parse either style: bare decimal code, or polynomial like '2+2x', '1+x^2'."""
        t = text.strip()
        if not t:
            raise ValueError("empty element token")
        if t.isdigit():
            code = int(t)
            if code >= self.order:
                raise ValueError(f"code {code} out of range for order {self.order}")
            return code
        code = 0
        last_pow = -1
        for term in t.split("+"):
            term = term.strip()
            if term.isdigit():
                c, i = int(term), 0
            else:
                mt = _TERM_RE.match(term)
                if not mt:
                    raise ValueError(f"malformed element term {term!r}")
                cs, ks = mt.groups()
                c = int(cs) if cs else 1
                i = int(ks) if ks else 1
                if ks is not None and i < 1:
                    raise ValueError(f"malformed element term {term!r}")
            if not 0 < c < self.p:
                raise ValueError(f"coefficient {c} out of range for GF({self.p})")
            if i >= self.d:
                raise ValueError(f"power {i} out of range for degree {self.d}")
            if i <= last_pow:
                raise ValueError(f"powers not ascending in {text!r}")
            last_pow = i
            code += c * self.p ** i
        return code

    def format_element(self, a: int, style: str = "poly") -> str:
        if not 0 <= a < self.order:
            raise ValueError(f"code {a} out of range for order {self.order}")
        if style == "code":
            return str(a)
        if style != "poly":
            raise ValueError("style must be 'poly' or 'code'")
        terms = []
        for i, c in enumerate(_digits_of(a, self.p, self.d)):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                terms.append(("" if c == 1 else str(c)) + ("x" if i == 1 else f"x^{i}"))
        return "+".join(terms) if terms else "0"

    def __repr__(self):
        return f"DN({self.q},{self.n})"


@functools.lru_cache(maxsize=None)
def _cached_nearfield(q: int, n: int) -> Nearfield:
    return Nearfield(q, n)


def build_nearfield(q: int, n: int, max_order: int = ORDER_LIMIT) -> Nearfield:
    """Construct (or fetch the cached) DN(q, n).

    Raises ValueError for invalid pairs or when q^n exceeds max_order.
    """
    verdict = validate_dickson_pair(q, n)
    if not verdict:
        raise ValueError(f"({q},{n}) is not a Dickson pair: {verdict.reason}")
    order = q ** n
    if order > max_order:
        raise ValueError(f"order {order} exceeds max_order {max_order}")
    if order > ORDER_LIMIT:
        raise ValueError(f"order {order} exceeds the hard limit {ORDER_LIMIT}")
    return _cached_nearfield(q, n)
