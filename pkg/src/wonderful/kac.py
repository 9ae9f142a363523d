"""Kac diagrams of the catalog families and their marked-diagram spaces.

A Kac diagram is a generalized affine Dynkin diagram with black and
white nodes; edges store both Cartan pairings.  Marking one white node
determines a flag variety of the black subdiagram: its factors are the
black components, crossed at the neighbors of the marked node.
"""

from dataclasses import dataclass

from .linalg import nullspace_line
from .rootsystem import build_root_system, identify_cartan, positive_roots


@dataclass(frozen=True)
class KacDiagram:
    colors: tuple
    edges: tuple

    @property
    def size(self):
        return len(self.colors)

    @property
    def whites(self):
        return tuple(i for i, c in enumerate(self.colors) if c == "w")

    @property
    def blacks(self):
        return tuple(i for i, c in enumerate(self.colors) if c == "b")

    def cartan(self):
        n = self.size
        mat = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
        for i, j, aij, aji in self.edges:
            mat[i][j] = aij
            mat[j][i] = aji
        return mat

    def neighbors(self, i):
        out = set()
        for a, b, _, _ in self.edges:
            if a == i:
                out.add(b)
            if b == i:
                out.add(a)
        return out


@dataclass(frozen=True)
class Factor:
    type: str
    rank: int
    crossed: tuple
    name: str
    dual: bool


@dataclass(frozen=True)
class HomogeneousSpaceDescriptor:
    white: int
    factors: tuple
    name: str
    dim: int


def diagram_marks(kd):
    """Primitive positive integer null vector of the affine Cartan matrix."""
    marks = nullspace_line(kd.cartan())
    if marks is None or any(m <= 0 for m in marks):
        raise ValueError("diagram is not affine")
    return tuple(marks)


def validate_diagram(kd, inner):
    """Affineness and the order-two condition on the white marks."""
    marks = diagram_marks(kd)
    total = sum(marks[i] for i in kd.whites)
    expected = 2 if inner else 1
    if total != expected:
        raise ValueError(f"white marks sum to {total}, expected {expected}")
    if len(kd.whites) not in (1, 2):
        raise ValueError("expected one or two white nodes")
    return marks


def _black_components(kd):
    blacks = set(kd.blacks)
    seen = set()
    comps = []
    for start in sorted(blacks):
        if start in seen:
            continue
        comp = {start}
        queue = [start]
        while queue:
            i = queue.pop()
            for j in kd.neighbors(i):
                if j in blacks and j not in comp:
                    comp.add(j)
                    queue.append(j)
        seen |= comp
        comps.append(sorted(comp))
    return comps


def _factor_dim(typ, rank, crossed):
    rs = build_root_system(((typ, rank),))
    avoid = {c - 1 for c in crossed}
    total = len(positive_roots(rs))
    kept = sum(1 for b in positive_roots(rs)
               if all(b[j] == 0 for j in avoid))
    return total - kept


def _name_factor(typ, rank, crossed):
    """(name, dual flag) for a crossed Dynkin diagram, 1-based crossing."""
    crossed = tuple(sorted(crossed))
    if typ == "A":
        m = rank
        if len(crossed) == 1:
            k = crossed[0]
            kk = min(k, m + 1 - k)
            dual = k > m + 1 - k
            name = f"P{m}" if kk == 1 else f"Gr({kk},{m + 1})"
            return name, dual
        if crossed == (1, m):
            return f"Flag(1,{m})", False
    if typ == "B" and len(crossed) == 1:
        k = crossed[0]
        return (f"Q{2 * rank - 1}" if k == 1 else f"OG({k},{2 * rank + 1})"), False
    if typ == "C" and len(crossed) == 1:
        k = crossed[0]
        if k == 1:
            return f"P{2 * rank - 1}", False
        return (f"LG({rank},{2 * rank})" if k == rank
                else f"IG({k},{2 * rank})"), False
    if typ == "D" and len(crossed) == 1:
        k = crossed[0]
        if k == 1:
            return f"Q{2 * rank - 2}", False
        if k <= rank - 2:
            return f"OG({k},{2 * rank})", False
        return f"OG({rank},{2 * rank})", k == rank
    if typ in ("E", "F", "G") and len(crossed) == 1:
        return f"{typ}{rank}/P{crossed[0]}", False
    tags = "-".join(str(c) for c in crossed)
    return f"{typ}{rank}/P{tags}", False


def component_descriptor(kd, white):
    """Descriptor of the flag variety attached to one marked white node."""
    if kd.colors[white] != "w":
        raise ValueError(f"node {white} is not white")
    crossed_nodes = kd.neighbors(white) & set(kd.blacks)
    cartan = kd.cartan()
    factors = []
    dim = 0
    for comp in _black_components(kd):
        sub = [[cartan[i][j] for j in comp] for i in comp]
        ident = identify_cartan(sub)
        if ident is None:
            raise ValueError("black component has no Cartan type")
        typ, rank, mapping = ident
        crossed = tuple(sorted(std + 1 for std, local in enumerate(mapping)
                               if comp[local] in crossed_nodes))
        if not crossed:
            continue
        name, dual = _name_factor(typ, rank, crossed)
        factors.append(Factor(typ, rank, crossed, name, dual))
        dim += _factor_dim(typ, rank, crossed)
    name = " x ".join(f.name for f in factors) if factors else "pt"
    return HomogeneousSpaceDescriptor(
        white=white, factors=tuple(factors), name=name, dim=dim)


def marked_diagrams(kd):
    """One descriptor per white node, in node order."""
    return tuple(component_descriptor(kd, w) for w in kd.whites)


# name normalization ----------------------------------------------------

def _canonical_factor(f):
    f = f.replace("*", "").replace("∨", "")
    if f.startswith("(") and f.endswith(")"):
        f = f[1:-1]
    if f in ("pt", "P0"):
        return []
    if f.startswith("Gr(") or f.startswith("IG(") or f.startswith("OG(") \
            or f.startswith("LG("):
        head = f[:2]
        a, b = f[3:-1].split(",")
        a, b = int(a), int(b)
        if head == "Gr":
            a = min(a, b - a)
            if a == 1:
                return [f"P{b - 1}"]
            if (a, b) == (2, 4):
                return ["Q4"]
            return [f"Gr({a},{b})"]
        if head == "IG":
            if a == 1:
                return [f"P{b - 1}"]
            if 2 * a != b:
                return [f"IG({a},{b})"]
            head = "LG"
        if head == "OG":
            if a == 1:
                return [f"Q{b - 2}"]
            if (a, b) == (2, 5):
                return ["P3"]
            return [f"OG({a},{b})"]
        if (a, b) == (2, 4):
            return ["Q3"]
        return [f"LG({a},{b})"]
    if f == "Q1":
        return ["P1"]
    if f == "Q2":
        return ["P1", "P1"]
    if f == "Q4":
        return ["Q4"]
    if f == "Q3":
        return ["Q3"]
    if f.startswith("Q") and f[1:].isdigit():
        return [f]
    return [f]


def normalize_name(name):
    """Canonical sorted factor tuple of a product name."""
    out = []
    for part in name.split(" x "):
        out.extend(_canonical_factor(part.strip()))
    return tuple(sorted(out))


def name_dimension(name):
    """Dimension of a named generalized flag variety."""
    total = 0
    for part in normalize_name(name):
        total += _one_name_dimension(part)
    return total


def _one_name_dimension(f):
    if f == "pt":
        return 0
    if f.startswith("P") and f[1:].isdigit():
        return int(f[1:])
    if f.startswith("Q") and f[1:].isdigit():
        return int(f[1:])
    if f.startswith("Flag(1,"):
        m = int(f[:-1].split(",")[1])
        return 2 * m - 1
    if "(" in f:
        head = f[: f.index("(")]
        a, b = (int(x) for x in f[f.index("(") + 1:-1].split(","))
        if head == "Gr":
            return _factor_dim("A", b - 1, (a,))
        if head == "IG":
            return _factor_dim("C", b // 2, (a,))
        if head == "LG":
            return _factor_dim("C", a, (a,))
        if head == "OG":
            if b % 2:
                return _factor_dim("B", (b - 1) // 2, (a,))
            if 2 * a == b:
                return _factor_dim("D", a, (a,))
            return _factor_dim("D", b // 2, (a,))
    if "/P" in f:
        base, tag = f.split("/P")
        typ, rank = base[0], int(base[1:])
        crossed = tuple(int(x) for x in tag.split("-"))
        return _factor_dim(typ, rank, crossed)
    raise ValueError(f"unrecognized space name {f!r}")


# diagram builders -------------------------------------------------------

class _Builder:
    def __init__(self):
        self.colors = []
        self.edges = []

    def node(self, color):
        self.colors.append(color)
        return len(self.colors) - 1

    def edge(self, i, j, aij=-1, aji=-1):
        self.edges.append((i, j, aij, aji))

    def chain(self, ids, last=None):
        for k in range(len(ids) - 1):
            self.edges.append((ids[k], ids[k + 1], -1, -1))
        if last is not None and len(ids) >= 2:
            self.edges[-1] = (ids[-2], ids[-1]) + last

    def done(self):
        return KacDiagram(tuple(self.colors), tuple(self.edges))

    def so_arm(self, m, white, wedge):
        """Attach the Dynkin diagram of so_m at its vector node(s)."""
        if m == 3:
            b = self.node("b")
            self.edge(white, b, wedge[0], wedge[1] * 2)
        elif m == 4:
            for _ in range(2):
                b = self.node("b")
                self.edge(white, b, *wedge)
        elif m % 2:
            k = (m - 1) // 2
            ids = [self.node("b") for _ in range(k)]
            self.chain(ids, last=(-1, -2))
            self.edge(white, ids[0], *wedge)
        else:
            k = m // 2
            ids = [self.node("b") for _ in range(k)]
            self.chain(ids[: k - 1])
            self.edge(ids[k - 3], ids[k - 1], -1, -1)
            self.edge(white, ids[0], *wedge)

    def sp_arm(self, m, white):
        """Attach the Dynkin diagram of sp_m at its first node."""
        k = m // 2
        ids = [self.node("b") for _ in range(k)]
        if k == 1:
            self.edge(white, ids[0], -2, -1)
        else:
            self.chain(ids, last=(-2, -1))
            self.edge(white, ids[0], -1, -1)


def affine_diagram(typ, rank):
    """Untwisted affine diagram with the extending node white."""
    b = _Builder()
    w = b.node("w")
    ids = [b.node("b") for _ in range(rank)]
    if typ == "A":
        if rank == 1:
            b.edge(w, ids[0], -2, -2)
        else:
            b.chain(ids)
            b.edge(w, ids[0])
            b.edge(w, ids[-1])
    elif typ == "B":
        b.chain(ids, last=(-1, -2))
        if rank == 2:
            b.edge(w, ids[1], -1, -2)
        else:
            b.edge(w, ids[1])
    elif typ == "C":
        b.chain(ids, last=(-2, -1))
        b.edge(w, ids[0], -1, -2)
    elif typ == "D":
        b.chain(ids[: rank - 1])
        b.edge(ids[rank - 3], ids[rank - 1])
        b.edge(w, ids[1])
    elif typ == "E":
        chain = [ids[0], ids[2], ids[3], ids[4], ids[5]] + \
            ([ids[6]] if rank >= 7 else []) + ([ids[7]] if rank == 8 else [])
        b.chain(chain)
        b.edge(ids[1], ids[3])
        b.edge(w, ids[1] if rank == 6 else ids[0] if rank == 7 else ids[7])
    elif typ == "F":
        b.chain(ids)
        b.edges[1] = (ids[1], ids[2], -1, -2)
        b.edge(w, ids[0])
    elif typ == "G":
        b.edge(ids[0], ids[1], -3, -1)
        b.edge(w, ids[1])
    else:
        raise ValueError(f"unknown type {typ!r}")
    return b.done()


def kac_hermitian_rank1():
    b = _Builder()
    w1, w2 = b.node("w"), b.node("w")
    b.edge(w1, w2, -2, -2)
    return b.done()


def kac_sym2(r):
    """White node against so_{r+1}."""
    b = _Builder()
    w = b.node("w")
    if r + 1 == 3:
        blk = b.node("b")
        b.edge(w, blk, -1, -4)
    else:
        b.so_arm(r + 1, w, (-1, -2))
    return b.done()


def kac_wedge2(r):
    """White node against sp_{2r+2} at its second node."""
    b = _Builder()
    w = b.node("w")
    k = r + 1
    ids = [b.node("b") for _ in range(k)]
    b.chain(ids, last=(-2, -1))
    b.edge(w, ids[1])
    return b.done()


def kac_cycle(n, k):
    """Affine cycle of length n with whites at positions 0 and k."""
    b = _Builder()
    ids = [b.node("w" if i in (0, k) else "b") for i in range(n)]
    b.chain(ids)
    b.edge(ids[-1], ids[0])
    return b.done()


def kac_tensor(n, r):
    """White node against so_r x so_{n-r} at the vector nodes."""
    b = _Builder()
    w = b.node("w")
    if r == 1:
        b.so_arm(n - 1, w, (-2, -1))
    else:
        b.so_arm(r, w, (-1, -1))
        b.so_arm(n - r, w, (-1, -1))
    return b.done()


def kac_tensor2(n):
    """Two white nodes against so_{n-2} at the vector nodes."""
    b = _Builder()
    w1, w2 = b.node("w"), b.node("w")
    if n - 2 == 3:
        blk = b.node("b")
        b.edge(w1, blk, -1, -2)
        b.edge(w2, blk, -1, -2)
    elif n - 2 == 4:
        for _ in range(2):
            blk = b.node("b")
            b.edge(w1, blk)
            b.edge(w2, blk)
    else:
        m = n - 2
        if m % 2:
            k = (m - 1) // 2
            ids = [b.node("b") for _ in range(k)]
            b.chain(ids, last=(-1, -2))
        else:
            k = m // 2
            ids = [b.node("b") for _ in range(k)]
            b.chain(ids[: k - 1])
            b.edge(ids[k - 3], ids[k - 1])
        b.edge(w1, ids[0])
        b.edge(w2, ids[0])
    return b.done()


def kac_lagr(r):
    """Two white nodes at the ends of a black A_{r-1} chain."""
    b = _Builder()
    w1 = b.node("w")
    ids = [b.node("b") for _ in range(r - 1)]
    w2 = b.node("w")
    b.chain(ids)
    b.edge(w1, ids[0], -1, -2)
    b.edge(w2, ids[-1], -1, -2)
    return b.done()


def kac_sp_tensor(n, r):
    """White node against sp_{2r} x sp_{2n-2r} at the first nodes."""
    b = _Builder()
    w = b.node("w")
    b.sp_arm(2 * r, w)
    b.sp_arm(2 * (n - r), w)
    return b.done()


def kac_gl_half(m):
    """Two white nodes against gl_m inside so_{2m}."""
    if m == 3:
        return kac_cycle(4, 1)
    b = _Builder()
    w1, w2 = b.node("w"), b.node("w")
    ids = [b.node("b") for _ in range(m - 1)]
    b.chain(ids)
    b.edge(w1, ids[1])
    b.edge(w2, ids[m - 3])
    return b.done()


def kac_ei():
    b = _Builder()
    w = b.node("w")
    ids = [b.node("b") for _ in range(4)]
    b.chain(ids, last=(-2, -1))
    b.edge(w, ids[3])
    return b.done()


def kac_eii():
    b = _Builder()
    w = b.node("w")
    a = [b.node("b") for _ in range(5)]
    extra = b.node("b")
    b.chain(a)
    b.edge(w, a[2])
    b.edge(w, extra)
    return b.done()


def kac_eiii():
    b = _Builder()
    w1, w2 = b.node("w"), b.node("w")
    d = [b.node("b") for _ in range(5)]
    b.chain(d[:4])
    b.edge(d[2], d[4])
    b.edge(w1, d[3])
    b.edge(w2, d[4])
    return b.done()


def kac_eiv():
    b = _Builder()
    w = b.node("w")
    f = [b.node("b") for _ in range(4)]
    b.chain(f)
    b.edges[1] = (f[1], f[2], -1, -2)
    b.edge(w, f[3])
    return b.done()


def kac_ev():
    b = _Builder()
    w = b.node("w")
    a = [b.node("b") for _ in range(7)]
    b.chain(a)
    b.edge(w, a[3])
    return b.done()


def kac_evi():
    b = _Builder()
    w = b.node("w")
    d = [b.node("b") for _ in range(6)]
    b.chain(d[:5])
    b.edge(d[3], d[5])
    extra = b.node("b")
    b.edge(w, d[4])
    b.edge(w, extra)
    return b.done()


def kac_evii():
    b = _Builder()
    w1, w2 = b.node("w"), b.node("w")
    e = [b.node("b") for _ in range(6)]
    b.chain([e[0], e[2], e[3], e[4], e[5]])
    b.edge(e[1], e[3])
    b.edge(w1, e[0])
    b.edge(w2, e[5])
    return b.done()


def kac_eviii():
    b = _Builder()
    w = b.node("w")
    d = [b.node("b") for _ in range(8)]
    b.chain(d[:7])
    b.edge(d[5], d[7])
    b.edge(w, d[6])
    return b.done()


def kac_eix():
    b = _Builder()
    w = b.node("w")
    e = [b.node("b") for _ in range(7)]
    b.chain([e[0], e[2], e[3], e[4], e[5], e[6]])
    b.edge(e[1], e[3])
    extra = b.node("b")
    b.edge(w, e[6])
    b.edge(w, extra)
    return b.done()


def kac_fi():
    b = _Builder()
    w = b.node("w")
    c = [b.node("b") for _ in range(3)]
    b.chain(c, last=(-2, -1))
    extra = b.node("b")
    b.edge(w, c[2])
    b.edge(w, extra)
    return b.done()


def kac_fii():
    b = _Builder()
    w = b.node("w")
    ids = [b.node("b") for _ in range(4)]
    b.chain(ids, last=(-1, -2))
    b.edge(w, ids[3])
    return b.done()


def kac_g():
    b = _Builder()
    w = b.node("w")
    long_b = b.node("b")
    short_b = b.node("b")
    b.edge(w, long_b, -1, -1)
    b.edge(w, short_b, -1, -3)
    return b.done()


KAC_BUILDERS = {
    "affine_diagram": affine_diagram,
    "kac_hermitian_rank1": kac_hermitian_rank1,
    "kac_sym2": kac_sym2,
    "kac_wedge2": kac_wedge2,
    "kac_cycle": kac_cycle,
    "kac_tensor": kac_tensor,
    "kac_tensor2": kac_tensor2,
    "kac_lagr": kac_lagr,
    "kac_sp_tensor": kac_sp_tensor,
    "kac_gl_half": kac_gl_half,
    "kac_ei": kac_ei,
    "kac_eii": kac_eii,
    "kac_eiii": kac_eiii,
    "kac_eiv": kac_eiv,
    "kac_ev": kac_ev,
    "kac_evi": kac_evi,
    "kac_evii": kac_evii,
    "kac_eviii": kac_eviii,
    "kac_eix": kac_eix,
    "kac_fi": kac_fi,
    "kac_fii": kac_fii,
    "kac_g": kac_g,
}
