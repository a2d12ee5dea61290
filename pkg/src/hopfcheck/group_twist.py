"""Function algebras of finite matrix groups, order-2 actions, and twists.

The pipeline: a finite group of 2x2 unitaries, its function algebra as a
commutative Hopf *-algebra, an order-2 conjugation action, the crossed
product by Z/2, and inside that crossed product the twisted algebra spanned
by even functions together with odd functions times the group-like of the
acting Z/2.  Every constructed Hopf structure is re-verified from scratch;
nothing is trusted from the construction itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .cyclotomic import Cyc, HALF, IM, ONE, ZERO
from .linalg import NoSolution, Vector, exact_rank, solve_unique
from .hopf_core import (AxiomReport, HopfAlgebra, check_hopf_morphism,
                        solve_counit_antipode, verify_hopf_axioms)
from .multimatrix import (AlgElement, LinearMap, MultiMatrixAlgebra, Scalar,
                          _cyc, tensor_algebra)


class GroupClosureError(Exception):
    pass


class ActionError(Exception):
    pass


class GradingError(Exception):
    pass


class SubalgebraError(Exception):
    pass


class AxiomFailure(Exception):
    def __init__(self, what: str, report: AxiomReport):
        super().__init__(f"{what}: failed {sorted(k for k, v in report.checks.items() if not v)}")
        self.report = report


class Mat2:
    """A 2x2 matrix over Q(z), hashable so it can be a group element."""

    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence[Scalar]]):
        if len(rows) != 2 or any(len(r) != 2 for r in rows):
            raise ValueError("need a 2x2 matrix")
        self.rows = tuple(tuple(_cyc(v) for v in r) for r in rows)

    @classmethod
    def identity(cls) -> Mat2:
        return cls(((1, 0), (0, 1)))

    def __getitem__(self, ij: tuple[int, int]) -> Cyc:
        return self.rows[ij[0]][ij[1]]

    def __mul__(self, other: Mat2) -> Mat2:
        a, b = self.rows, other.rows
        return Mat2([[a[i][0] * b[0][j] + a[i][1] * b[1][j] for j in range(2)]
                     for i in range(2)])

    def __neg__(self) -> Mat2:
        return Mat2([[-v for v in r] for r in self.rows])

    def star(self) -> Mat2:
        a = self.rows
        return Mat2([[a[0][0].conj(), a[1][0].conj()],
                     [a[0][1].conj(), a[1][1].conj()]])

    def conj_entries(self) -> Mat2:
        return Mat2([[v.conj() for v in r] for r in self.rows])

    def det(self) -> Cyc:
        a = self.rows
        return a[0][0] * a[1][1] - a[0][1] * a[1][0]

    def is_unitary(self) -> bool:
        return self * self.star() == Mat2.identity()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Mat2):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        r = self.rows
        return f"[[{r[0][0]}, {r[0][1]}], [{r[1][0]}, {r[1][1]}]]"

    def to_strings(self) -> list[list[list[str]]]:
        return [[v.to_strings() for v in r] for r in self.rows]

    @classmethod
    def from_strings(cls, data: Sequence[Sequence[Sequence[str]]]) -> Mat2:
        return cls([[Cyc.from_strings(c) for c in r] for r in data])


class FiniteMatrixGroup:
    """Finite group of 2x2 unitaries with a precomputed multiplication table."""

    def __init__(self, elements: list[Mat2], names: list[str] | None = None):
        self.elements = elements
        self.index = {m: k for k, m in enumerate(elements)}
        if len(self.index) != len(elements):
            raise GroupClosureError("duplicate elements")
        n = len(elements)
        self.table = [[self.index[elements[a] * elements[b]] for b in range(n)]
                      for a in range(n)]
        try:
            self.identity_index = elements.index(Mat2.identity())
        except ValueError:
            raise GroupClosureError("identity missing") from None
        # Latin square: rows and columns are permutations
        full = set(range(n))
        for r in self.table:
            if set(r) != full:
                raise GroupClosureError("multiplication table is not a Latin square")
        for b in range(n):
            if {self.table[a][b] for a in range(n)} != full:
                raise GroupClosureError("multiplication table is not a Latin square")
        self.inverse = [next(b for b in range(n)
                             if self.table[a][b] == self.identity_index)
                        for a in range(n)]
        self.names = names or [f"g{k}" for k in range(n)]

    @property
    def order(self) -> int:
        return len(self.elements)


def generate_group(generators: Sequence[Mat2], cap: int = 64) -> FiniteMatrixGroup:
    """Close a set of 2x2 unitaries under multiplication, up to cap elements."""
    for g in generators:
        if not g.is_unitary():
            raise GroupClosureError(f"generator {g!r} is not unitary")
    elements = [Mat2.identity()]
    seen = {elements[0]}
    frontier = list(elements)
    while frontier:
        nxt = []
        for h in frontier:
            for g in generators:
                m = h * g
                if m not in seen:
                    if len(seen) >= cap:
                        raise GroupClosureError(f"group not closed within {cap} elements")
                    seen.add(m)
                    elements.append(m)
                    nxt.append(m)
        frontier = nxt
    return FiniteMatrixGroup(elements)


@dataclass
class ConjugationAction:
    group: FiniteMatrixGroup
    unitary: Mat2
    perm: list[int]

    @property
    def order(self) -> int:
        n = len(self.perm)
        return 1 if self.perm == list(range(n)) else 2


def conjugation_action(group: FiniteMatrixGroup, u: Mat2) -> ConjugationAction:
    """The action h -> u h u*; must stabilize the group and square to one."""
    if not u.is_unitary():
        raise ActionError("conjugating matrix is not unitary")
    ustar = u.star()
    perm = []
    for h in group.elements:
        m = u * h * ustar
        k = group.index.get(m)
        if k is None:
            raise ActionError(f"conjugation does not stabilize the group at {h!r}")
        perm.append(k)
    n = group.order
    if [perm[perm[k]] for k in range(n)] != list(range(n)):
        raise ActionError("conjugation action is not an involution")
    for a in range(n):
        for b in range(n):
            if perm[group.table[a][b]] != group.table[perm[a]][perm[b]]:
                raise ActionError("conjugation action is not an automorphism")
    return ConjugationAction(group, u, perm)


@dataclass
class FunctionHopf:
    group: FiniteMatrixGroup
    hopf: HopfAlgebra

    def delta(self, k: int) -> AlgElement:
        return self.hopf.algebra.basis_element(k, 0, 0)


def function_algebra(group: FiniteMatrixGroup) -> FunctionHopf:
    """C(G) with pointwise product; coproduct dual to group multiplication."""
    n = group.order
    alg = MultiMatrixAlgebra((1,) * n,
                             labels=tuple(f"d{nm}" for nm in group.names))
    ta, tidx = tensor_algebra(alg, alg)
    cols: list[Vector] = [{} for _ in range(n)]
    for a in range(n):
        for b in range(n):
            cols[group.table[a][b]][tidx[a][b]] = ONE
    delta = LinearMap(alg, ta, cols)
    counit, antipode = solve_counit_antipode(alg, delta)
    hopf = HopfAlgebra(alg, delta, counit, antipode)
    return FunctionHopf(group, hopf)


def action_hopf_map(fa: FunctionHopf, action: ConjugationAction) -> LinearMap:
    """The action on functions, delta_h -> delta_{u h u*}, as a linear map."""
    alg = fa.hopf.algebra
    return LinearMap(alg, alg, [{action.perm[k]: ONE} for k in range(alg.dim)])


class SmashProduct:
    """Crossed product of a function algebra by an order-2 action.

    Basis elements delta_h * lam**k with lam the order-2 group-like of the
    acting Z/2 and lam * f == theta(f) * lam.  Fixed points h contribute two
    1x1 blocks spanned by (delta_h +- delta_h lam)/2; a 2-orbit {h, h'}
    contributes a full 2x2 block with delta_h lam and delta_h' lam as the
    off-diagonal matrix units.
    """

    def __init__(self, fa: FunctionHopf, action: ConjugationAction):
        if action.group is not fa.group and action.group.elements != fa.group.elements:
            raise ActionError("action group does not match the function algebra")
        theta = action_hopf_map(fa, action)
        rep = check_hopf_morphism(theta, fa.hopf, fa.hopf, require="iso")
        if not rep.passed:
            raise ActionError("action is not a Hopf *-automorphism")
        self.fa = fa
        self.action = action
        group = fa.group
        n = group.order
        perm = action.perm

        sizes: list[int] = []
        labels: list[str] = []
        fixed = [k for k in range(n) if perm[k] == k]
        pairs = [(k, perm[k]) for k in range(n) if k < perm[k]]
        for k in fixed:
            sizes += [1, 1]
            labels += [f"p+({group.names[k]})", f"p-({group.names[k]})"]
        for a, b in pairs:
            sizes.append(2)
            labels.append(f"m({group.names[a]},{group.names[b]})")
        alg = MultiMatrixAlgebra(tuple(sizes), labels=tuple(labels))
        self.algebra_blocks = (fixed, pairs)

        # delta_h lam**k in block coordinates
        dl: dict[tuple[int, int], AlgElement] = {}
        blk = 0
        for k in fixed:
            p_plus = alg.basis_element(blk, 0, 0)
            p_minus = alg.basis_element(blk + 1, 0, 0)
            dl[(k, 0)] = p_plus + p_minus
            dl[(k, 1)] = p_plus - p_minus
            blk += 2
        for a, b in pairs:
            dl[(a, 0)] = alg.basis_element(blk, 0, 0)
            dl[(b, 0)] = alg.basis_element(blk, 1, 1)
            dl[(a, 1)] = alg.basis_element(blk, 0, 1)
            dl[(b, 1)] = alg.basis_element(blk, 1, 0)
            blk += 1
        self._dl = dl

        # the block model must reproduce the crossed product's structure
        for (a, k), x in dl.items():
            for (b, l), y in dl.items():
                bb = b if k == 0 else perm[b]
                want = dl[(a, (k + l) % 2)] if a == bb else alg.zero()
                if x * y != want:
                    raise SubalgebraError("block model breaks the crossed product")
            want = dl[(perm[a], k)] if k else dl[(a, 0)]
            if x.star() != want:
                raise SubalgebraError("block model breaks the *-structure")

        ta, _ = tensor_algebra(alg, alg)
        cols: list[Vector] = [{} for _ in range(alg.dim)]
        unit_expansion: list[list[tuple[int, int, Cyc]]] = [[] for _ in range(alg.dim)]
        blk = 0
        for k in fixed:
            base = alg.index(blk, 0, 0)
            unit_expansion[base] = [(k, 0, HALF), (k, 1, HALF)]
            unit_expansion[alg.index(blk + 1, 0, 0)] = [(k, 0, HALF), (k, 1, -HALF)]
            blk += 2
        for a, b in pairs:
            unit_expansion[alg.index(blk, 0, 0)] = [(a, 0, ONE)]
            unit_expansion[alg.index(blk, 1, 1)] = [(b, 0, ONE)]
            unit_expansion[alg.index(blk, 0, 1)] = [(a, 1, ONE)]
            unit_expansion[alg.index(blk, 1, 0)] = [(b, 1, ONE)]
            blk += 1
        for t, combo in enumerate(unit_expansion):
            acc = ta.zero()
            for h, k, c in combo:
                for a in range(n):
                    for b in range(n):
                        if group.table[a][b] == h:
                            acc = acc + (dl[(a, k)].tensor(dl[(b, k)])).scale(c)
            cols[t] = acc.coords
        delta = LinearMap(alg, ta, cols)
        counit, antipode = solve_counit_antipode(alg, delta)
        self.hopf = HopfAlgebra(alg, delta, counit, antipode)
        report = verify_hopf_axioms(self.hopf)
        if not report.passed:
            raise AxiomFailure("crossed product", report)
        self.axiom_report = report

    def delta_lambda(self, element_index: int, lam_power: int) -> AlgElement:
        return self._dl[(element_index, lam_power % 2)]

    def embed_function(self, x: AlgElement) -> AlgElement:
        out = self.hopf.algebra.zero()
        for k, v in x.coords.items():
            out = out + self._dl[(k, 0)].scale(v)
        return out


@dataclass
class CentralGrading:
    group: FiniteMatrixGroup
    z_index: int

    def __post_init__(self) -> None:
        g, z = self.group, self.z_index
        if g.table[z][z] != g.identity_index:
            raise GradingError("grading element does not square to the identity")
        for a in range(g.order):
            if g.table[z][a] != g.table[a][z]:
                raise GradingError("grading element is not central")

    @property
    def is_trivial(self) -> bool:
        return self.z_index == self.group.identity_index

    def partner(self, k: int) -> int:
        return self.group.table[self.z_index][k]

    def cosets(self) -> list[tuple[int, int]]:
        return [(k, self.partner(k)) for k in range(self.group.order)
                if k < self.partner(k)]


class GradedTwist:
    """The twisted Hopf *-algebra inside the crossed product.

    Spanned by even functions e_C = delta_h + delta_zh and odd multiples
    o_C lam = (delta_h - delta_zh) lam.  Coset fixed pointwise by the action:
    two 1x1 blocks (e_C +- o_C lam)/2.  Coset fixed with swapped members:
    two 1x1 blocks (e_C -+ i o_C lam)/2.  A 2-orbit of cosets: one 2x2 block
    with e-parts on the diagonal and o_C lam off it.
    """

    def __init__(self, fa: FunctionHopf, grading: CentralGrading,
                 action: ConjugationAction, smash: SmashProduct | None = None):
        if grading.group is not fa.group:
            raise GradingError("grading group does not match")
        if action.perm[grading.z_index] != grading.z_index:
            raise GradingError("action does not fix the grading element")
        self.fa = fa
        self.grading = grading
        self.action = action
        if grading.is_trivial:
            self.smash = smash
            self.hopf = fa.hopf
            self.trivial = True
            self.basis_in_ambient = fa.hopf.algebra.basis()
            self.ambient = fa.hopf
            self._solver = lambda x: x
            self.coset_kinds = {}
            self.cosets = []
            return
        self.trivial = False
        self.smash = smash if smash is not None else SmashProduct(fa, action)
        self.ambient = self.smash.hopf
        group = fa.group
        perm = action.perm
        names = group.names

        cosets = grading.cosets()
        rep_of = {}
        for idx, (a, b) in enumerate(cosets):
            rep_of[a] = idx
            rep_of[b] = idx

        dl = self.smash.delta_lambda
        def e_part(ci: int) -> AlgElement:
            a, b = cosets[ci]
            return dl(a, 0) + dl(b, 0)

        def o_lam(ci: int) -> AlgElement:
            a, b = cosets[ci]
            return dl(a, 1) - dl(b, 1)

        sizes: list[int] = []
        labels: list[str] = []
        basis_els: list[AlgElement] = []
        coset_kinds: dict[int, str] = {}
        seen: set[int] = set()
        for ci, (a, b) in enumerate(cosets):
            if ci in seen:
                continue
            seen.add(ci)
            image = rep_of[perm[a]]
            if image == ci:
                if perm[a] == a:
                    kind = "fixed"
                    plus = (e_part(ci) + o_lam(ci)).scale(HALF)
                    minus = (e_part(ci) - o_lam(ci)).scale(HALF)
                else:
                    kind = "swapped"
                    plus = (e_part(ci) - o_lam(ci).scale(IM)).scale(HALF)
                    minus = (e_part(ci) + o_lam(ci).scale(IM)).scale(HALF)
                coset_kinds[ci] = kind
                sizes += [1, 1]
                labels += [f"{kind}+({names[a]})", f"{kind}-({names[a]})"]
                basis_els += [plus, minus]
            else:
                seen.add(image)
                coset_kinds[ci] = coset_kinds[image] = "orbit"
                sizes.append(2)
                labels.append(f"m({names[a]},{names[cosets[image][0]]})")
                x = o_lam(ci)
                basis_els += [e_part(ci), x, x.star(), e_part(image)]

        target = MultiMatrixAlgebra(tuple(sizes), labels=tuple(labels))
        self.hopf, self._solver = subalgebra_hopf(self.ambient, basis_els, target)
        self.basis_in_ambient = basis_els
        self.coset_kinds = coset_kinds
        self.cosets = cosets

    def to_twist(self, x: AlgElement) -> AlgElement:
        """Coordinates of an ambient element in the twist, if it lies there."""
        return self._solver(x)


def subalgebra_hopf(ambient: HopfAlgebra, basis_els: list[AlgElement],
                    target: MultiMatrixAlgebra):
    """Transport the ambient Hopf structure onto a multimatrix basis.

    basis_els[t] plays the role of target basis vector t.  Verifies that the
    span is a *-subalgebra matching target's structure constants, that the
    ambient coproduct restricts, and that the result satisfies every Hopf
    axiom.  Returns (hopf, solver) with solver expressing ambient elements
    in the chosen basis.
    """
    n = target.dim
    if len(basis_els) != n:
        raise SubalgebraError("basis length does not match the target algebra")
    amb = ambient.algebra
    if exact_rank([x.coords for x in basis_els]) != n:
        raise SubalgebraError("chosen elements are not linearly independent")

    unit = target.unit()
    amb_unit = amb.unit()
    acc = amb.zero()
    for t, c in unit.coords.items():
        acc = acc + basis_els[t].scale(c)
    if acc != amb_unit:
        raise SubalgebraError("units do not match")
    for p in range(n):
        if basis_els[p].star() != basis_els[target.star_index(p)]:
            raise SubalgebraError(f"*-structure mismatch at {target.basis_name(p)}")
        for q in range(n):
            r = target.mul_basis(p, q)
            want = basis_els[r] if r is not None else amb.zero()
            if basis_els[p] * basis_els[q] != want:
                raise SubalgebraError(
                    f"product mismatch at {target.basis_name(p)} * {target.basis_name(q)}")

    # solver: coordinates in the chosen basis
    eq_rows: dict[int, Vector] = {}
    for t, x in enumerate(basis_els):
        for c, v in x.coords.items():
            eq_rows.setdefault(c, {})[t] = v
    support = sorted(eq_rows)

    def solve_in_basis(x: AlgElement, space: int = n,
                       rows: dict[int, Vector] = eq_rows) -> list[Cyc]:
        lhs, rhs = [], []
        todo = dict(x.coords)
        for c in support:
            lhs.append(rows[c])
            rhs.append(todo.pop(c, ZERO))
        if todo:
            raise SubalgebraError("element does not lie in the span")
        try:
            return solve_unique(lhs, rhs, space)
        except NoSolution as exc:
            raise SubalgebraError("element does not lie in the span") from exc

    def solver(x: AlgElement) -> AlgElement:
        sol = solve_in_basis(x)
        return target.element({t: v for t, v in enumerate(sol) if v})

    # transported coproduct: solve in the tensor-square basis
    ta_t, tidx_t = tensor_algebra(target, target)
    pair_rows: dict[int, Vector] = {}
    for p in range(n):
        for q in range(n):
            col = tidx_t[p][q]
            for c, v in (basis_els[p].tensor(basis_els[q])).coords.items():
                pair_rows.setdefault(c, {})[col] = v
    pair_support = sorted(pair_rows)
    cols: list[Vector] = []
    for t in range(n):
        img = ambient.coproduct(basis_els[t])
        lhs, rhs = [], []
        todo = dict(img.coords)
        for c in pair_support:
            lhs.append(pair_rows[c])
            rhs.append(todo.pop(c, ZERO))
        if todo:
            raise SubalgebraError("coproduct does not restrict to the span")
        try:
            sol = solve_unique(lhs, rhs, ta_t.dim)
        except NoSolution as exc:
            raise SubalgebraError("coproduct does not restrict to the span") from exc
        cols.append({c: v for c, v in enumerate(sol) if v})
    delta = LinearMap(target, ta_t, cols)
    counit, antipode = solve_counit_antipode(target, delta)
    hopf = HopfAlgebra(target, delta, counit, antipode)
    report = verify_hopf_axioms(hopf)
    if not report.passed:
        raise AxiomFailure("transported subalgebra", report)
    return hopf, solver


# user model files ------------------------------------------------------------

def twist_from_model_dict(data: dict) -> GradedTwist:
    """Build a graded twist from a JSON-style model description.

    Expected keys: generators (list of 2x2 matrices, entries as 4-string
    coordinate arrays), action_unitary, central_element, optional cap.
    """
    try:
        gens = [Mat2.from_strings(g) for g in data["generators"]]
        u = Mat2.from_strings(data["action_unitary"])
        z = Mat2.from_strings(data["central_element"])
    except (KeyError, ValueError, TypeError) as exc:
        raise ValueError(f"malformed model description: {exc}") from exc
    cap = int(data.get("cap", 64))
    group = generate_group(gens, cap=cap)
    zi = group.index.get(z)
    if zi is None:
        raise GradingError("central element is not in the generated group")
    fa = function_algebra(group)
    action = conjugation_action(group, u)
    grading = CentralGrading(group, zi)
    return GradedTwist(fa, grading, action)
