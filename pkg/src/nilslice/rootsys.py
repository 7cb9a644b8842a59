"""Root systems, Weyl reflections on weights, and Cartan-type detection.

Roots are integer tuples in simple-root coordinates.  The positive roots are
kept in a frozen total order (height, then lexicographic); the Chevalley
structure constants downstream depend on this order, so do not change it.

Weighted-diagram vectors ("h" data) are stored as the values of the simple
roots on h, which is the paper-facing convention for weighted Dynkin
diagrams.
"""

from fractions import Fraction


DEGREES = {
    "A": lambda n: list(range(2, n + 2)),
    "B": lambda n: [2 * i for i in range(1, n + 1)],
    "C": lambda n: [2 * i for i in range(1, n + 1)],
    "D": lambda n: [2 * i for i in range(1, n)] + [n],
    "G": lambda n: [2, 6],
    "F": lambda n: [2, 6, 8, 12],
    "E": lambda n: {6: [2, 5, 6, 8, 9, 12],
                    7: [2, 6, 8, 10, 12, 14, 18],
                    8: [2, 8, 12, 14, 18, 20, 24, 30]}[n],
}

POSITIVE_ROOT_COUNTS = {"A": lambda n: n * (n + 1) // 2,
                        "B": lambda n: n * n,
                        "C": lambda n: n * n,
                        "D": lambda n: n * (n - 1),
                        "G": lambda n: 6,
                        "F": lambda n: 24,
                        "E": lambda n: {6: 36, 7: 63, 8: 120}[n]}


def parse_type(cartan_type):
    if isinstance(cartan_type, (tuple, list)):
        letter, rank = cartan_type
    else:
        letter, rank = cartan_type[0].upper(), int(cartan_type[1:])
    letter = letter.upper()
    valid = (letter in "ABCD" and 1 <= rank <= 8) or \
            (letter == "G" and rank == 2) or (letter == "F" and rank == 4) or \
            (letter == "E" and rank in (6, 7, 8))
    if not valid:
        raise ValueError(f"unsupported Cartan type {letter}{rank}")
    if letter == "D" and rank < 3:
        raise ValueError(f"unsupported Cartan type {letter}{rank} (use A1 x A1 or A3)")
    return letter, rank


def cartan_matrix(letter, n):
    """a[i][j] = <alpha_j, alpha_i^vee>, Bourbaki numbering."""
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def join(i, j, aij=-1, aji=-1):
        a[i][j], a[j][i] = aij, aji

    if letter in "ABC":
        for i in range(n - 1):
            join(i, i + 1)
        if letter == "B" and n >= 2:
            # alpha_n short: <alpha_{n-1}, alpha_n^vee> = -2
            a[n - 1][n - 2] = -2
        if letter == "C" and n >= 2:
            # alpha_n long: <alpha_n, alpha_{n-1}^vee> = -2
            a[n - 2][n - 1] = -2
    elif letter == "D":
        for i in range(n - 2):
            join(i, i + 1)
        join(n - 3, n - 1)
    elif letter == "G":
        # alpha_1 short, alpha_2 long
        join(0, 1, -3, -1)
    elif letter == "F":
        # alpha_1, alpha_2 long; alpha_3, alpha_4 short
        join(0, 1)
        join(1, 2, -1, -2)
        join(2, 3)
    elif letter == "E":
        # chain 1-3-4-5-6(-7-8), node 2 hangs off 4
        chain = [0] + list(range(2, n))
        for x, y in zip(chain, chain[1:]):
            join(x, y)
        join(1, 3)
    return a


def symmetrizers(letter, n, a):
    """d_i with d_i * a[i][j] symmetric; d_i = 1 on short roots."""
    d = [None] * n
    d[0] = Fraction(1)
    todo = [0]
    while todo:
        i = todo.pop()
        for j in range(n):
            if i != j and a[i][j] and d[j] is None:
                d[j] = d[i] * Fraction(a[i][j], a[j][i])
                todo.append(j)
    if any(x is None for x in d):  # disconnected (not for simple types)
        for i in range(n):
            if d[i] is None:
                d[i] = Fraction(1)
    m = min(d)
    d = [x / m for x in d]
    assert all(x.denominator == 1 for x in d)
    return [int(x) for x in d]


class RootSystem:
    """Immutable root-system data for one simple type of rank <= 8."""

    def __init__(self, cartan_type):
        letter, rank = parse_type(cartan_type)
        self.letter, self.rank = letter, rank
        self.cartan_type = f"{letter}{rank}"
        self.cartan_matrix = cartan_matrix(letter, rank)
        self.symmetrizer = symmetrizers(letter, rank, self.cartan_matrix)
        self.simple_roots = [tuple(1 if j == i else 0 for j in range(rank))
                             for i in range(rank)]
        self.positive_roots = self._close_positive_roots()
        self.root_index = {r: i for i, r in enumerate(self.positive_roots)}
        self.fundamental_degrees = DEGREES[letter](rank)
        expected = POSITIVE_ROOT_COUNTS[letter](rank)
        if len(self.positive_roots) != expected:
            raise AssertionError(
                f"{self.cartan_type}: got {len(self.positive_roots)} positive roots,"
                f" expected {expected}")

    # -- basic pairings ----------------------------------------------------

    def eval_coroot(self, root, i):
        """<root, alpha_i^vee> for root in simple-root coordinates."""
        a = self.cartan_matrix
        return sum(c * a[i][j] for j, c in enumerate(root) if c)

    def inner(self, x, y):
        """Symmetric bilinear form, short roots of squared length 2."""
        a, d = self.cartan_matrix, self.symmetrizer
        tot = 0
        for i, xi in enumerate(x):
            if xi:
                for j, yj in enumerate(y):
                    if yj:
                        tot += xi * yj * d[i] * a[i][j]
        return tot

    def height(self, root):
        return sum(root)

    def is_root(self, vec):
        v = tuple(vec)
        if v in self.root_index:
            return True
        return tuple(-c for c in v) in self.root_index

    def _close_positive_roots(self):
        roots = set(self.simple_roots)
        frontier = list(self.simple_roots)
        while frontier:
            new = []
            for g in frontier:
                for i, s in enumerate(self.simple_roots):
                    p = 0
                    cand = tuple(c - sc for c, sc in zip(g, s))
                    while cand in roots:
                        p += 1
                        cand = tuple(c - sc for c, sc in zip(cand, s))
                    if p - self.eval_coroot(g, i) >= 1:
                        up = tuple(c + sc for c, sc in zip(g, s))
                        if up not in roots:
                            roots.add(up)
                            new.append(up)
            frontier = new
        return sorted(roots, key=lambda r: (sum(r), r))

    # -- reflections on roots and diagram vectors --------------------------

    def reflect_root(self, root, i):
        c = self.eval_coroot(root, i)
        out = list(root)
        out[i] -= c
        return tuple(out)

    def simple_reflection_permutation(self, i):
        """s_i as a permutation of [positive roots] + [negative roots].

        Index k < N is the k-th positive root, k >= N the (k-N)-th negative.
        """
        n = len(self.positive_roots)
        perm = [0] * (2 * n)
        for k, r in enumerate(self.positive_roots):
            img = self.reflect_root(r, i)
            if img in self.root_index:
                j = self.root_index[img]
            else:
                j = self.root_index[tuple(-c for c in img)] + n
            perm[k] = j
            perm[k + n] = j + n if j < n else j - n
        return perm

    def coroot_coords(self, root):
        """root^vee as an integer vector in the simple-coroot basis."""
        d = self.symmetrizer
        dr = self.inner(root, root) // 2
        out = []
        for j, m in enumerate(root):
            c = Fraction(m * d[j], dr)
            assert c.denominator == 1
            out.append(int(c))
        return tuple(out)

    def diagram_of_coroot_vec(self, h):
        """Values alpha_j(h) for h = sum h_i alpha_i^vee."""
        a = self.cartan_matrix
        return tuple(sum(h[i] * a[i][j] for i in range(self.rank))
                     for j in range(self.rank))


def build_root_system(cartan_type):
    return RootSystem(cartan_type)


# ---------------------------------------------------------------------------
# Weighted-diagram vectors and dominance.

def reflect_diagram(rs, values, i):
    """s_i on a vector of simple-root values alpha_j(h)."""
    a = rs.cartan_matrix
    vi = values[i]
    return tuple(v - a[i][j] * vi for j, v in enumerate(values))


def apply_word(rs, values, word):
    for i in word:
        values = reflect_diagram(rs, values, i)
    return values


def dominantize(rs, values):
    """Dominant representative of `values` plus the reflection word used.

    Applying the returned word in reverse order to the result reproduces the
    input.  Terminates because each reflection strictly increases the height
    pairing with the positive-root sum.
    """
    values = tuple(values)
    word = []
    while True:
        neg = next((i for i, v in enumerate(values) if v < 0), None)
        if neg is None:
            return values, word
        values = reflect_diagram(rs, values, neg)
        word.append(neg)


def weyl_orbit_diagrams(rs, values):
    """Full Weyl orbit of a diagram vector (brute force; small ranks only)."""
    seen = {tuple(values)}
    frontier = [tuple(values)]
    while frontier:
        new = []
        for v in frontier:
            for i in range(rs.rank):
                w = reflect_diagram(rs, v, i)
                if w not in seen:
                    seen.add(w)
                    new.append(w)
        frontier = new
    return seen


# ---------------------------------------------------------------------------
# Cartan-type detection.

class NotARootSystem(ValueError):
    pass


def _scale_to_int(vectors):
    den = 1
    for v in vectors:
        for c in v:
            den = den * Fraction(c).denominator // _gcd(den, Fraction(c).denominator)
    return [tuple(int(Fraction(c) * den) for c in v) for v in vectors]


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def root_structure(vectors, inner):
    """Components of a finite root set: names, simple systems, positives.

    vectors: the full set of (nonzero) roots, closed under negation, as
    coordinate tuples.  inner(x, y): exact symmetric form.  Returns a list
    of dicts {name, simples, positives, highest}.

    Raises NotARootSystem naming the failed axiom.
    """
    vecs = [tuple(v) for v in vectors]
    if not vecs:
        return []
    vset = set(vecs)
    for v in vecs:
        if tuple(-c for c in v) not in vset:
            raise NotARootSystem(f"set not closed under negation at {v}")
        if inner(v, v) == 0:
            raise NotARootSystem(f"isotropic vector {v}")
    # deterministic functional that kills no root: base-M evaluation
    ivecs = _scale_to_int(vecs)
    M = 2 * max(abs(c) for v in ivecs for c in v) + 1
    fval = {v: sum(c * M ** i for i, c in enumerate(iv))
            for v, iv in zip(vecs, ivecs)}
    if any(f == 0 for f in fval.values()):
        raise NotARootSystem("zero vector in root set")
    pos = [v for v in vecs if fval[v] > 0]
    possums = set()
    pset = set(pos)
    for x in pos:
        for y in pos:
            s = tuple(a + b for a, b in zip(x, y))
            if s in pset:
                possums.add(s)
    simples = [v for v in pos if v not in possums]
    # Cartan pairings of the simple system
    n = len(simples)
    pair = [[2 * inner(simples[i], simples[j]) / inner(simples[i], simples[i])
             for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(n):
            if i != j:
                c = pair[i][j]
                if Fraction(c).denominator != 1 or c > 0:
                    raise NotARootSystem(
                        f"simple pairing <{simples[j]},{simples[i]}^vee> = {c}"
                        " is not a nonpositive integer")
    comps = _components(n, pair)
    out = []
    for comp in comps:
        name = _classify_component(simples, comp, pair, inner)
        csimples = [simples[i] for i in comp]
        cpos = _component_positives(csimples, pos)
        heights = {}
        for r in cpos:
            hvec = _express(csimples, r)
            if hvec is None or any(Fraction(c).denominator != 1 or c < 0
                                   for c in hvec):
                raise NotARootSystem(
                    f"positive root {r} is not a nonnegative integer "
                    "combination of the simple system")
            heights[r] = sum(hvec)
        highest = max(cpos, key=lambda r: heights[r])
        out.append({"name": name, "simples": csimples, "positives": cpos,
                    "highest": highest})
    return out


def _component_positives(csimples, pos):
    out = []
    for r in pos:
        if _express(csimples, r) is not None:
            out.append(r)
    return out


def _express(basis, target):
    """Coefficients of target in `basis`, or None (exact, small systems)."""
    from .linalg import solve
    rows = {}
    for k, b in enumerate(basis):
        for i, c in enumerate(b):
            if c:
                rows.setdefault(i, {})[k] = Fraction(c)
    n = max(rows) + 1 if rows else 0
    rowlist = [rows.get(i, {}) for i in range(n)]
    rhs = {i: Fraction(c) for i, c in enumerate(target) if c}
    if any(i >= n for i in rhs):
        return None
    sol = solve(rowlist, rhs, len(basis))
    if sol is None:
        return None
    res = list(target)
    for k, c in sol.items():
        for i, bc in enumerate(basis[k]):
            res[i] -= c * bc
    if any(res):
        return None
    return [sol.get(k, Fraction(0)) for k in range(len(basis))]


def detect_cartan_type(vectors, inner, ambient_rank=None):
    """Decompose a finite root set into simple types.

    Returns (sorted list of type strings, torus_rank or None).
    """
    comps = root_structure(vectors, inner)
    names = sorted(c["name"] for c in comps)
    torus = None
    if ambient_rank is not None:
        torus = ambient_rank - _span_rank([tuple(v) for v in vectors])
    return names, torus


def _span_rank(vecs):
    from .linalg import Echelon
    ech = Echelon()
    for v in vecs:
        ech.add({i: Fraction(c) for i, c in enumerate(v) if c})
    return ech.rank


def _components(n, pair):
    seen, comps = set(), []
    for i in range(n):
        if i in seen:
            continue
        comp, todo = [], [i]
        seen.add(i)
        while todo:
            x = todo.pop()
            comp.append(x)
            for j in range(n):
                if j not in seen and pair[x][j]:
                    seen.add(j)
                    todo.append(j)
        comps.append(sorted(comp))
    return comps


def _classify_component(simples, comp, pair, inner):
    n = len(comp)
    if n == 1:
        return "A1"
    prods = {}
    degs = {i: 0 for i in comp}
    for i in comp:
        for j in comp:
            if i < j and pair[i][j]:
                prods[(i, j)] = int(pair[i][j] * pair[j][i])
                degs[i] += 1
                degs[j] += 1
    maxdeg = max(degs.values())
    edgemults = sorted(prods.values())
    norms = [inner(simples[i], simples[i]) for i in comp]
    nshort = sum(1 for x in norms if x == min(norms)) if len(set(norms)) > 1 else 0
    if 3 in edgemults:
        if n != 2:
            raise NotARootSystem("triple bond in component of rank > 2")
        return "G2"
    if 2 in edgemults:
        if edgemults.count(2) > 1 or maxdeg > 2:
            raise NotARootSystem("multiple double bonds / branched multiedge")
        if n == 2:
            return "B2"
        # position of the double bond along the line
        i, j = next(k for k, v in prods.items() if v == 2)
        if n == 4 and degs[i] == 2 and degs[j] == 2:
            return "F4"
        if nshort == 1:
            return f"B{n}"
        if nshort == n - 1:
            return f"C{n}"
        raise NotARootSystem("double bond not at the end of the line")
    if maxdeg <= 2:
        return f"A{n}"
    if maxdeg > 3 or sum(1 for d in degs.values() if d == 3) > 1:
        raise NotARootSystem("branch structure not of simple type")
    # one trivalent node: D or E by arm lengths
    center = next(i for i in comp if degs[i] == 3)
    arms = []
    for j in comp:
        if pair[center][j] and j != center:
            length, prev, cur = 1, center, j
            while True:
                nxt = [k for k in comp if k not in (prev, cur) and pair[cur][k]]
                if not nxt:
                    break
                prev, cur = cur, nxt[0]
                length += 1
            arms.append(length)
    arms.sort()
    if arms[0] == 1 and arms[1] == 1:
        return f"D{n}"
    if arms[:2] == [1, 2] and n in (6, 7, 8):
        return f"E{n}"
    raise NotARootSystem(f"arm lengths {arms} do not match a simple type")


def levi_roots(rs, base_roots):
    """All roots of rs that are integer combinations of `base_roots`.

    base_roots: root vectors (tuples).  Returns the sub-root-set as tuples.
    """
    from .linalg import solve
    rows = {}
    for k, b in enumerate(base_roots):
        for i, c in enumerate(b):
            if c:
                rows.setdefault(i, {})[k] = Fraction(c)
    rowlist = [rows.get(i, {}) for i in range(rs.rank)]
    out = []
    allroots = list(rs.positive_roots) + \
        [tuple(-c for c in r) for r in rs.positive_roots]
    for r in allroots:
        sol = solve(rowlist, {i: Fraction(c) for i, c in enumerate(r) if c},
                    len(base_roots))
        if sol is None:
            continue
        # solve() gives one solution; base roots are independent so exact
        residual = list(r)
        ok = True
        for k, coef in sol.items():
            if coef.denominator != 1:
                ok = False
                break
        if not ok:
            continue
        for k, coef in sol.items():
            for i, c in enumerate(base_roots[k]):
                residual[i] -= coef * c
        if any(residual):
            continue
        out.append(r)
    return out
