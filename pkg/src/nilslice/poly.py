"""Exact multivariate polynomials with rational (or cyclotomic) coefficients.

Canonical form: no zero coefficients, exponent tuples keyed per variable
order fixed at construction.  No tolerance parameters exist anywhere here.
"""

from fractions import Fraction


class Cyclotomic3:
    """a + b*omega with omega^2 + omega + 1 = 0 (exact)."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        self.a, self.b = Fraction(a), Fraction(b)

    @classmethod
    def omega(cls):
        return cls(0, 1)

    def _c(self, o):
        return o if isinstance(o, Cyclotomic3) else Cyclotomic3(o)

    def __add__(self, o):
        o = self._c(o)
        return Cyclotomic3(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic3(-self.a, -self.b)

    def __sub__(self, o):
        return self + (-self._c(o))

    def __rsub__(self, o):
        return self._c(o) - self

    def __mul__(self, o):
        o = self._c(o)
        # (a + b w)(c + d w) = ac + (ad + bc) w + bd w^2, w^2 = -1 - w
        ac, ad, bc, bd = self.a * o.a, self.a * o.b, self.b * o.a, self.b * o.b
        return Cyclotomic3(ac - bd, ad + bc - bd)

    __rmul__ = __mul__

    def __truediv__(self, o):
        o = self._c(o)
        # inverse of c + d w: conjugate (c + d w^2) over norm c^2 - cd + d^2
        c, d = o.a, o.b
        nrm = c * c - c * d + d * d
        inv = Cyclotomic3(c - d, -d) * Cyclotomic3(Fraction(1, 1) / nrm)
        return self * inv

    def __eq__(self, o):
        o = self._c(o)
        return self.a == o.a and self.b == o.b

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __hash__(self):
        return hash((self.a, self.b))

    def __repr__(self):
        return f"({self.a}+{self.b}w)"


class Poly:
    """Sparse multivariate polynomial over an exact coefficient field."""

    __slots__ = ("vars", "terms")

    def __init__(self, vars, terms=None):
        self.vars = tuple(vars)
        self.terms = {}
        for expo, c in (terms or {}).items():
            if c:
                self.terms[tuple(expo)] = c

    @classmethod
    def variable(cls, vars, name):
        i = tuple(vars).index(name)
        e = tuple(1 if j == i else 0 for j in range(len(vars)))
        return cls(vars, {e: Fraction(1)})

    @classmethod
    def const(cls, vars, c):
        return cls(vars, {tuple(0 for _ in vars): c})

    def _c(self, o):
        if isinstance(o, Poly):
            if o.vars != self.vars:
                raise ValueError("mixed variable sets")
            return o
        return Poly.const(self.vars, o if not isinstance(o, int) else Fraction(o))

    def __add__(self, o):
        o = self._c(o)
        out = dict(self.terms)
        for e, c in o.terms.items():
            w = out.get(e, 0) + c
            if w:
                out[e] = w
            else:
                out.pop(e, None)
        return Poly(self.vars, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, o):
        return self + (-self._c(o))

    def __rsub__(self, o):
        return self._c(o) - self

    def __mul__(self, o):
        o = self._c(o)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                w = out.get(e, 0) + c1 * c2
                if w:
                    out[e] = w
                else:
                    out.pop(e, None)
        return Poly(self.vars, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        out = Poly.const(self.vars, Fraction(1))
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, o):
        o = self._c(o)
        return self.terms == o.terms

    def __bool__(self):
        return bool(self.terms)

    def substitute(self, assignment):
        """Map variable name -> replacement (Poly over the same vars or
        scalar); returns a Poly over the same variable tuple."""
        out = Poly.const(self.vars, Fraction(0))
        for e, c in self.terms.items():
            term = Poly.const(self.vars, c)
            for i, k in enumerate(e):
                if not k:
                    continue
                name = self.vars[i]
                rep = assignment.get(name)
                if rep is None:
                    rep = Poly.variable(self.vars, name)
                elif not isinstance(rep, Poly):
                    rep = Poly.const(self.vars, rep)
                term = term * rep ** k
            out = out + term
        return out

    def evaluate(self, values):
        """values: name -> scalar; full evaluation to a scalar."""
        tot = 0
        for e, c in self.terms.items():
            acc = c
            for i, k in enumerate(e):
                if k:
                    acc = acc * values[self.vars[i]] ** k
            tot = tot + acc
        return tot

    def coefficient_ring_map(self, fn):
        return Poly(self.vars, {e: fn(c) for e, c in self.terms.items()})

    def divides_exactly(self, divisor):
        """Exact division self / divisor (single divisor, lex order);
        returns the quotient or None if not exact."""
        if not divisor:
            raise ZeroDivisionError
        rem = Poly(self.vars, dict(self.terms))
        lead = max(divisor.terms)
        lc = divisor.terms[lead]
        q = {}
        while rem.terms:
            e = max(rem.terms)
            diff = tuple(a - b for a, b in zip(e, lead))
            if any(d < 0 for d in diff):
                return None
            c = rem.terms[e] / lc
            q[diff] = q.get(diff, 0) + c
            sub = Poly(self.vars, {diff: c}) * divisor
            rem = rem - sub
        return Poly(self.vars, q)

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for e, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(f"{v}^{k}" if k > 1 else v
                            for v, k in zip(self.vars, e) if k)
            bits.append(f"{c}" + (f"*{mono}" if mono else ""))
        return " + ".join(bits)


class PolyMatrix:
    """Rectangular matrix of Polys."""

    def __init__(self, rows):
        self.rows = [list(r) for r in rows]
        self.shape = (len(self.rows), len(self.rows[0]) if self.rows else 0)
        for r in self.rows:
            if len(r) != self.shape[1]:
                raise ValueError("ragged matrix")

    def __matmul__(self, o):
        n, m = self.shape
        m2, k = o.shape
        if m != m2:
            raise ValueError("shape mismatch")
        out = []
        for i in range(n):
            row = []
            for j in range(k):
                acc = None
                for l in range(m):
                    t = self.rows[i][l] * o.rows[l][j]
                    acc = t if acc is None else acc + t
                row.append(acc)
            out.append(row)
        return PolyMatrix(out)

    def __add__(self, o):
        return PolyMatrix([[a + b for a, b in zip(r1, r2)]
                           for r1, r2 in zip(self.rows, o.rows)])

    def __sub__(self, o):
        return PolyMatrix([[a - b for a, b in zip(r1, r2)]
                           for r1, r2 in zip(self.rows, o.rows)])

    def scale(self, c):
        return PolyMatrix([[c * x for x in r] for r in self.rows])

    def trace(self):
        acc = None
        for i in range(self.shape[0]):
            acc = self.rows[i][i] if acc is None else acc + self.rows[i][i]
        return acc

    def det(self):
        """Laplace expansion (fine for the small matrices used here)."""
        n, m = self.shape
        assert n == m
        if n == 1:
            return self.rows[0][0]
        acc = None
        for j in range(n):
            entry = self.rows[0][j]
            if not entry:
                continue
            minor = PolyMatrix([r[:j] + r[j + 1:] for r in self.rows[1:]])
            t = entry * minor.det()
            if j % 2:
                t = -t
            acc = t if acc is None else acc + t
        if acc is None:
            zerov = self.rows[0][0]
            return Poly(zerov.vars, {})
        return acc

    def is_zero(self):
        return all(not x for r in self.rows for x in r)
