"""Todd-Coxeter coset enumeration over a finite presentation.

Two strategies share one table and one coincidence routine:

  - "hlt": relator-driven scanning with filling, plus a deterministic
    lookahead pass every `lookahead_interval` definitions (scan without
    definitions to collapse the table before continuing);
  - "felsch": definition-driven, closing all consequences of each new table
    entry through a deduction stack before defining the next coset.

The table is a flat list of ints with two columns per generator (column
2*i is generator i, column 2*i+1 its inverse; x ^ 1 flips orientation).
Cosets are merged through a union-find array; exceeding the row limit is a
status on the returned table, not an exception.  The enumeration is
deterministic for a fixed presentation, subgroup, limit and strategy.
"""

from collections import deque

from .words import Word

EMPTY = -1


class _LimitHit(Exception):
    pass


def _word_to_cols(word, gen_index):
    cols = []
    for name, exp in word.syllables:
        base = 2 * gen_index[name]
        col = base if exp > 0 else base + 1
        cols.extend([col] * abs(exp))
    return tuple(cols)


def _cyclically_reduce(cols):
    cols = list(cols)
    while len(cols) >= 2 and cols[0] == cols[-1] ^ 1:
        cols = cols[1:-1]
    return tuple(cols)


def _invert_cols(cols):
    return tuple(c ^ 1 for c in reversed(cols))


class CosetTable:
    """A completed (or abandoned) coset table.

    rows[i][x] is the target coset of coset i under column x.  status is
    "complete" or "exceeded-limit"; in the latter case rows is empty and
    only `defined` (total cosets ever defined) is meaningful.
    """

    def __init__(self, generators, rows, status, defined, strategy):
        self.generators = tuple(generators)
        self.rows = rows
        self.status = status
        self.defined = defined
        self.strategy = strategy
        self._gen_index = {g: i for i, g in enumerate(self.generators)}

    def n_cosets(self):
        return len(self.rows)

    def follow(self, coset, word):
        for name, exp in word.syllables:
            base = 2 * self._gen_index[name]
            col = base if exp > 0 else base + 1
            for _ in range(abs(exp)):
                coset = self.rows[coset][col]
        return coset

    def column_names(self):
        out = []
        for g in self.generators:
            out.extend([g, f"{g}^-1"])
        return out

    def to_csv(self):
        lines = ["coset," + ",".join(self.column_names())]
        for i, row in enumerate(self.rows):
            lines.append(str(i) + "," + ",".join(str(v) for v in row))
        return "\n".join(lines) + "\n"


class _Enumeration:
    def __init__(self, ncols, relators, subgroup, limit):
        self.nc = ncols
        self.relators = relators
        self.subgroup = subgroup
        self.limit = limit
        self.tab = [EMPTY] * ncols
        self.p = [0]
        self.defined = 1
        self.dead = 0
        self.deductions = []
        self.save_deductions = False

    def rep(self, k):
        p = self.p
        while p[k] != k:
            p[k] = p[p[k]]
            k = p[k]
        return k

    def define(self, alpha, x):
        if self.defined >= self.limit:
            raise _LimitHit
        n = len(self.p)
        self.p.append(n)
        self.tab.extend([EMPTY] * self.nc)
        self.tab[alpha * self.nc + x] = n
        self.tab[n * self.nc + (x ^ 1)] = alpha
        self.defined += 1
        return n

    def _merge(self, k, l, queue):
        k = self.rep(k)
        l = self.rep(l)
        if k != l:
            mu, nu = (k, l) if k < l else (l, k)
            self.p[nu] = mu
            self.dead += 1
            queue.append(nu)

    def coincidence(self, a, b):
        tab = self.tab
        nc = self.nc
        queue = deque()
        self._merge(a, b, queue)
        while queue:
            g = queue.popleft()
            base = g * nc
            for x in range(nc):
                d = tab[base + x]
                if d < 0:
                    continue
                tab[d * nc + (x ^ 1)] = EMPTY
                mu = self.rep(g)
                nu = self.rep(d)
                t = tab[mu * nc + x]
                if t >= 0:
                    self._merge(nu, t, queue)
                else:
                    t = tab[nu * nc + (x ^ 1)]
                    if t >= 0:
                        self._merge(mu, t, queue)
                    else:
                        tab[mu * nc + x] = nu
                        tab[nu * nc + (x ^ 1)] = mu
                        if self.save_deductions:
                            self.deductions.append((mu, x))

    def scan(self, alpha, w, fill):
        tab = self.tab
        nc = self.nc
        f = alpha
        i = 0
        b = alpha
        j = len(w) - 1
        while True:
            while i <= j:
                n = tab[f * nc + w[i]]
                if n < 0:
                    break
                f = n
                i += 1
            if i > j:
                if f != b:
                    self.coincidence(f, b)
                return
            while j >= i:
                n = tab[b * nc + (w[j] ^ 1)]
                if n < 0:
                    break
                b = n
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if j == i:
                tab[f * nc + w[i]] = b
                tab[b * nc + (w[i] ^ 1)] = f
                if self.save_deductions:
                    self.deductions.append((f, w[i]))
                    self.deductions.append((b, w[i] ^ 1))
                return
            if not fill:
                return
            f = self.define(f, w[i])
            i += 1

    def lookahead(self):
        for gamma in range(len(self.p)):
            if self.p[gamma] != gamma:
                continue
            for w in self.relators:
                self.scan(gamma, w, fill=False)
                if self.p[gamma] != gamma:
                    break

    def run_hlt(self, lookahead_interval):
        for w in self.subgroup:
            self.scan(0, w, fill=True)
        next_look = lookahead_interval
        alpha = 0
        while alpha < len(self.p):
            if self.p[alpha] != alpha:
                alpha += 1
                continue
            if self.defined >= next_look:
                self.lookahead()
                next_look += lookahead_interval
                if self.p[alpha] != alpha:
                    alpha += 1
                    continue
            died = False
            for w in self.relators:
                self.scan(alpha, w, fill=True)
                if self.p[alpha] != alpha:
                    died = True
                    break
            if not died:
                base = alpha * self.nc
                for x in range(self.nc):
                    if self.tab[base + x] < 0:
                        self.define(alpha, x)
            alpha += 1

    def run_felsch(self, ded_rels):
        self.save_deductions = True
        for w in self.subgroup:
            self.scan(0, w, fill=True)
            self.process_deductions(ded_rels)
        alpha = 0
        while alpha < len(self.p):
            if self.p[alpha] != alpha:
                alpha += 1
                continue
            base = alpha * self.nc
            x = 0
            while x < self.nc:
                if self.tab[base + x] < 0:
                    self.define(alpha, x)
                    self.deductions.append((alpha, x))
                    self.process_deductions(ded_rels)
                    if self.p[alpha] != alpha:
                        break
                x += 1
            if self.p[alpha] == alpha:
                alpha += 1

    def process_deductions(self, ded_rels):
        while self.deductions:
            a, x = self.deductions.pop()
            a = self.rep(a)
            for w in ded_rels[x]:
                self.scan(a, w, fill=False)
                a = self.rep(a)

    def live_rows(self):
        tab = self.tab
        nc = self.nc
        live = [g for g in range(len(self.p)) if self.p[g] == g]
        renumber = {g: i for i, g in enumerate(live)}
        rows = []
        for g in live:
            base = g * nc
            row = []
            for x in range(nc):
                t = tab[base + x]
                assert t >= 0, "incomplete table after enumeration"
                row.append(renumber[self.rep(t)])
            rows.append(row)
        return rows


def _prepare(presentation, subgroup_words):
    gen_index = {g: i for i, g in enumerate(presentation.generators)}
    relators = []
    seen = set()
    for rel in presentation.relators:
        cols = _cyclically_reduce(_word_to_cols(rel, gen_index))
        if cols and cols not in seen:
            seen.add(cols)
            relators.append(cols)
    subgroup = []
    for w in subgroup_words:
        if isinstance(w, str):
            raise TypeError("subgroup generators must be Words")
        cols = _word_to_cols(w, gen_index)
        if cols:
            subgroup.append(cols)
    return relators, subgroup


def _deduction_relators(relators, ncols):
    """For each column, the rotations of every relator and its inverse that
    begin with that column."""
    by_col = [[] for _ in range(ncols)]
    seen = [set() for _ in range(ncols)]
    for rel in relators:
        for base in (rel, _invert_cols(rel)):
            for k in range(len(base)):
                rot = base[k:] + base[:k]
                c = rot[0]
                if rot not in seen[c]:
                    seen[c].add(rot)
                    by_col[c].append(rot)
    return by_col


def todd_coxeter(
    presentation,
    subgroup=(),
    limit=1_000_000,
    strategy="hlt",
    lookahead_interval=100_000,
):
    """Enumerate cosets of <subgroup> in the presented group.

    Returns a CosetTable; an empty subgroup enumerates the elements of the
    group itself.  On success the table is complete and closed under all
    relators; if more than `limit` cosets get defined the returned table
    has status "exceeded-limit" and no rows.
    """
    if strategy not in ("hlt", "felsch"):
        raise ValueError(f"unknown strategy {strategy!r}")
    relators, subgroup_cols = _prepare(presentation, subgroup)
    nc = 2 * len(presentation.generators)
    enum = _Enumeration(nc, relators, subgroup_cols, limit)
    try:
        if strategy == "hlt":
            enum.run_hlt(lookahead_interval)
        else:
            enum.run_felsch(_deduction_relators(relators, nc))
    except _LimitHit:
        return CosetTable(
            presentation.generators, [], "exceeded-limit", enum.defined, strategy
        )
    return CosetTable(
        presentation.generators, enum.live_rows(), "complete", enum.defined, strategy
    )


def coset_table_from_action(generators, rows):
    """Wrap an externally built complete table (e.g. a group action)."""
    table = CosetTable(generators, [list(r) for r in rows], "complete", len(rows), "action")
    return table


def schreier_representatives(table):
    """BFS coset representatives as column tuples, in table order."""
    nrows = table.n_cosets()
    reps = {0: ()}
    order = [0]
    queue = deque([0])
    while queue:
        a = queue.popleft()
        for x in range(2 * len(table.generators)):
            b = table.rows[a][x]
            if b not in reps:
                reps[b] = reps[a] + (x,)
                order.append(b)
                queue.append(b)
    assert len(reps) == nrows, "coset table is not connected"
    return reps


def schreier_rewrite_matrix(table, relators):
    """Abelianized Reidemeister-Schreier rewriting over a coset table.

    The subgroup whose cosets the table enumerates is generated by the
    Schreier generators u(c, g) = rep(c) g rep(c.g)^-1; those along the
    BFS tree are trivial and get no column.  Returns (rows, ncols) where
    each row is the exponent-sum vector of one relator rewritten at one
    coset; the cokernel is the subgroup's abelianization.

    Every relator must act trivially on the cosets (true for any table of
    the same presentation, or any action factoring through the group).
    """
    reps = schreier_representatives(table)
    path_to = {path: c for c, path in reps.items()}
    tree = set()
    for c, path in reps.items():
        if not path:
            continue
        x = path[-1]
        a = path_to[path[:-1]]
        tree.add((a, x))
        tree.add((c, x ^ 1))
    ngens = len(table.generators)
    col_index = {}
    for a in range(table.n_cosets()):
        for i in range(ngens):
            if (a, 2 * i) not in tree:
                col_index[(a, i)] = len(col_index)
    gen_pos = {g: i for i, g in enumerate(table.generators)}
    rows = []
    for rel in relators:
        letters = rel.letters()
        for start in range(table.n_cosets()):
            vec = [0] * len(col_index)
            c = start
            for name, sign in letters:
                i = gen_pos[name]
                if sign > 0:
                    key = (c, i)
                    c = table.rows[c][2 * i]
                else:
                    c = table.rows[c][2 * i + 1]
                    key = (c, i)
                k = col_index.get(key)
                if k is not None:
                    vec[k] += sign
            assert c == start, "relator does not stabilize the cosets"
            if any(vec):
                rows.append(vec)
    return rows, len(col_index)
