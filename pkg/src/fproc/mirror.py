"""Cox polynomials of a framed complete intersection and its f-mirror.

Each defining equation is the generic polynomial whose Newton polytope is a
part polytope of the framing: monomial exponents are read off lattice points
through the fan matrix and shifted by the weight vector.  The same data,
divided by the weight monomial, is a Laurent superpotential; regrouping its
summands around one fibration coordinate per part gives the Givental form.
"""

from .fprocess import CaseWF
from .lattice import dot, rank, smith_normal_form, solve_integer, transpose
from . import polytope as pt


class EmptyNewton(ValueError):
    """The would-be Newton polytope has no lattice points."""


class NotHomogeneous(ValueError):
    """Two monomials differ by a vector outside the row space of the fan."""


def _grlex(e):
    return (sum(e), e)


class CoxPolynomial:
    """A generic polynomial in one variable per fan ray.

    monomials   deduplicated exponent vectors in graded lexicographic order
    coeffs      one symbolic label per monomial; "psi" marks the slot whose
                exponent equals the weight vector (the distinguished modulus),
                the rest are "c1", "c2", ... in monomial order
    """

    def __init__(self, num_vars, monomials, psi_exponent=None):
        mons = sorted(set(tuple(e) for e in monomials), key=_grlex)
        if not mons:
            raise EmptyNewton("a polynomial needs at least one monomial")
        for e in mons:
            if len(e) != num_vars:
                raise pt.DimensionMismatch(f"{len(e)} exponents vs {num_vars} variables")
            if any(x < 0 for x in e):
                raise ValueError(f"negative exponent in {e}")
        self.num_vars = num_vars
        self.monomials = tuple(mons)
        psi = tuple(psi_exponent) if psi_exponent is not None else None
        coeffs = []
        j = 0
        for e in mons:
            if e == psi:
                coeffs.append("psi")
            else:
                j += 1
                coeffs.append(f"c{j}")
        self.coeffs = tuple(coeffs)

    def __len__(self):
        return len(self.monomials)

    def __repr__(self):
        return f"CoxPolynomial({self.num_vars} vars, {len(self.monomials)} monomials)"

    def exponent_set(self):
        return frozenset(self.monomials)

    def to_dict(self):
        return {
            "vars": self.num_vars,
            "monomials": [list(e) for e in self.monomials],
            "coeffs": list(self.coeffs),
        }


def _shifted_exponents(points, A, w):
    """Exponent vectors A^T·u + w over the given lattice points u."""
    cols = tuple(zip(*A))
    return [tuple(dot(c, u) + wi for c, wi in zip(cols, w)) for u in points]


def primal_polynomial(V, a_k):
    """The generic member of the linear system of the part weight a_k.

    Monomials correspond to lattice points u of the part polytope: the
    exponent vector is V^T·u + a_k, one coordinate per ray of V.
    """
    P = pt.from_framing(V, a_k)
    pts = P.lattice_points()
    if not pts:
        raise EmptyNewton(f"no lattice points for weight {tuple(a_k)}")
    return CoxPolynomial(len(V[0]), _shifted_exponents(pts, V, a_k), psi_exponent=a_k)


def mirror_polynomial_f(Lambda, b_k):
    """The dual-part polynomial when the dual framing is strict.

    Monomials correspond to lattice points of the dual part polytope
    {n : Λ^T n ≥ −b_k}; the exponent vector is Λ^T·u + b_k.  When that
    polytope is unbounded the framing is only weak and the variant taking
    the ray-hull part applies instead.
    """
    P = pt.from_framing(Lambda, b_k)
    try:
        pts = P.lattice_points()
    except pt.Unbounded:
        raise CaseWF("dual part polytope is unbounded; use the wf variant") from None
    if not pts:
        raise EmptyNewton(f"no lattice points for weight {tuple(b_k)}")
    return CoxPolynomial(len(Lambda[0]), _shifted_exponents(pts, Lambda, b_k), psi_exponent=b_k)


def mirror_polynomial_wf(V, block, Lambda, b_k):
    """The dual-part polynomial of a weak framing.

    Monomials correspond to lattice points of conv(V_I | 0), the hull of the
    primal rays of the part together with the origin; exponents are read
    through the dual fan matrix as Λ^T·u + b_k.
    """
    rays = [tuple(row[i] for row in V) for i in block]
    rays.append((0,) * len(V))
    P = pt.Polytope.from_points(rays, n=len(V))
    pts = P.lattice_points()
    return CoxPolynomial(len(Lambda[0]), _shifted_exponents(pts, Lambda, b_k), psi_exponent=b_k)


def check_homogeneous(f, Lambda):
    """Verify all monomials of f share a class and return that class.

    Exponent differences must lie in the integer row space of Λ^T.  The class
    is reported in Smith coordinates of coker(Λ^T): free coordinates first,
    then residues modulo each nontrivial invariant factor — independent of
    any choice of basis for the class group.
    """
    m = len(Lambda[0])
    if f.num_vars != m:
        raise pt.DimensionMismatch(f"{f.num_vars} variables vs {m} fan columns")
    A = transpose(Lambda)
    base = f.monomials[0]
    for e in f.monomials[1:]:
        diff = tuple(x - y for x, y in zip(e, base))
        if solve_integer(A, diff) is None:
            raise NotHomogeneous(f"monomials {e} and {base} differ off the fan rows")
    U, D, _ = smith_normal_form(A)
    r = sum(1 for i in range(min(len(D), len(D[0]))) if D[i][i] != 0)
    z = [dot(row, base) for row in U]
    free = tuple(z[r:])
    torsion = tuple(
        z[i] % D[i][i] for i in range(r) if abs(D[i][i]) != 1
    )
    return free, torsion


class LGModel:
    """Laurent superpotential of a mirror family, in Givental form.

    laurent     per part: monomial exponents divided by the weight monomial
    q           per part: the product of the part's summands (exponent sum)
    psi_slots   per part: index of the constant summand, if present
    N           total number of superpotential summands
    """

    def __init__(self, polys, weights):
        if len(polys) != len(weights):
            raise pt.DimensionMismatch(f"{len(polys)} polynomials vs {len(weights)} weights")
        num_vars = {f.num_vars for f in polys}
        if len(num_vars) != 1:
            raise pt.DimensionMismatch("polynomials must share one variable set")
        self.num_vars = num_vars.pop()
        laurent = []
        q = []
        psis = []
        for f, b in zip(polys, weights):
            if len(b) != self.num_vars:
                raise pt.DimensionMismatch(f"weight length {len(b)} vs {self.num_vars} variables")
            part = tuple(
                tuple(x - y for x, y in zip(e, b)) for e in f.monomials
            )
            laurent.append(part)
            q.append(tuple(sum(c) for c in zip(*part)))
            zero = (0,) * self.num_vars
            psis.append(part.index(zero) if zero in part else None)
        self.laurent = tuple(laurent)
        self.q = tuple(q)
        self.psi_slots = tuple(psis)
        self.N = sum(len(p) for p in laurent)

    @property
    def q_total(self):
        """Exponent of Π_k q_k; zero exactly when the q_k multiply to ψ."""
        return tuple(sum(c) for c in zip(*self.q))

    def to_dict(self):
        return {
            "vars": self.num_vars,
            "laurent": [[list(e) for e in part] for part in self.laurent],
            "u": [
                [
                    {"coeff": "psi" if j == s else f"c{j + 1}", "exponent": list(e)}
                    for j, e in enumerate(part)
                ]
                for part, s in zip(self.laurent, self.psi_slots)
            ],
            "q": [list(e) for e in self.q],
            "q_total": list(self.q_total),
            "F_terms": self.N,
        }


def lg_model(polys, weights):
    """Assemble the Givental-form Landau-Ginzburg model of the mirror parts."""
    return LGModel(polys, weights)


def modulus_count(polys):
    """Coefficients left after rescaling all variables and all equations.

    The rescaling torus acts on the coefficient of a monomial through its
    exponent vector extended by the indicator of its part; the count is the
    number of coefficients minus the rank of those joint vectors.
    """
    l = len(polys)
    vecs = []
    for k, f in enumerate(polys):
        ind = tuple(1 if i == k else 0 for i in range(l))
        for e in f.monomials:
            vecs.append(tuple(e) + ind)
    return len(vecs) - rank(vecs)
