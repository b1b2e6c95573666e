"""The free abelian category over finitely generated projectives, presented
by three-term chains of free modules.

An object is a pair of composable matrices ring^n1 -> ring^n2 -> ring^n3;
the two maps need not compose to zero.  A morphism is a strictly commuting
triple of matrices, and two triples represent the same arrow exactly when
their difference has null-homotopic middle: a2 = dst.m1 @ s + t @ src.m2
for some s, t.  Kernels and cokernels are given by explicit block formulas,
which is what makes the whole category computable.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionMismatch, InternalInvariantError, InvariantViolation, RingMismatch
from .fpmodules import FpModule, present_quotient
from .linalg import (
    Matrix,
    RingSpec,
    block,
    block_diagonal,
    hstack,
    kernel_gens,
    kron,
    solve_linear,
    unvec_row,
    vec_row,
    vstack,
)


@dataclass(frozen=True)
class ChainObject:
    """ring^n1 --m1--> ring^n2 --m2--> ring^n3 (no composability-to-zero
    requirement; m1 is n2 x n1 and m2 is n3 x n2)."""

    ring: RingSpec
    m1: Matrix
    m2: Matrix

    def __post_init__(self):
        if self.m1.ring != self.ring or self.m2.ring != self.ring:
            raise RingMismatch("chain matrices over the wrong ring")
        if self.m2.cols != self.m1.rows:
            raise DimensionMismatch(
                f"m2 has {self.m2.cols} columns but m1 has {self.m1.rows} rows"
            )

    @property
    def n1(self) -> int:
        return self.m1.cols

    @property
    def n2(self) -> int:
        return self.m1.rows

    @property
    def n3(self) -> int:
        return self.m2.rows

    @property
    def ranks(self) -> tuple[int, int, int]:
        return (self.n1, self.n2, self.n3)


def embed_rank(ring: RingSpec, rank: int) -> ChainObject:
    """Embedding of a rank-`rank` free module: the chain 0 -> ring^rank -> 0."""
    return ChainObject(ring, Matrix.zeros(ring, rank, 0), Matrix.zeros(ring, 0, rank))


def zero_chain(ring: RingSpec) -> ChainObject:
    return embed_rank(ring, 0)


@dataclass(frozen=True)
class ChainMorphism:
    """Strictly commuting triple src -> dst; validated on construction."""

    src: ChainObject
    dst: ChainObject
    a1: Matrix
    a2: Matrix
    a3: Matrix

    def __post_init__(self):
        if self.src.ring != self.dst.ring:
            raise RingMismatch("morphism between chains over different rings")
        shapes = (
            (self.a1, self.dst.n1, self.src.n1),
            (self.a2, self.dst.n2, self.src.n2),
            (self.a3, self.dst.n3, self.src.n3),
        )
        for mat, r, c in shapes:
            if mat.ring != self.src.ring:
                raise RingMismatch("morphism component over the wrong ring")
            if (mat.rows, mat.cols) != (r, c):
                raise DimensionMismatch(
                    f"component is {mat.rows}x{mat.cols}, expected {r}x{c}"
                )
        if self.a2 @ self.src.m1 != self.dst.m1 @ self.a1:
            raise InvariantViolation("first square does not commute strictly")
        if self.a3 @ self.src.m2 != self.dst.m2 @ self.a2:
            raise InvariantViolation("second square does not commute strictly")

    def __sub__(self, other: "ChainMorphism") -> "ChainMorphism":
        if self.src != other.src or self.dst != other.dst:
            raise DimensionMismatch("difference of morphisms with different ends")
        return ChainMorphism(self.src, self.dst,
                             self.a1 - other.a1, self.a2 - other.a2, self.a3 - other.a3)


def identity_morphism(x: ChainObject) -> ChainMorphism:
    eye = Matrix.identity
    return ChainMorphism(x, x, eye(x.ring, x.n1), eye(x.ring, x.n2), eye(x.ring, x.n3))


def zero_morphism(src: ChainObject, dst: ChainObject) -> ChainMorphism:
    z = Matrix.zeros
    return ChainMorphism(src, dst,
                         z(src.ring, dst.n1, src.n1),
                         z(src.ring, dst.n2, src.n2),
                         z(src.ring, dst.n3, src.n3))


def compose(u: ChainMorphism, v: ChainMorphism) -> ChainMorphism:
    """u followed by v."""
    if u.dst != v.src:
        raise DimensionMismatch("composition ends do not meet")
    return ChainMorphism(u.src, v.dst, v.a1 @ u.a1, v.a2 @ u.a2, v.a3 @ u.a3)


def direct_sum_objects(x: ChainObject, y: ChainObject) -> ChainObject:
    if x.ring != y.ring:
        raise RingMismatch("direct sum over mixed rings")
    return ChainObject(x.ring, block_diagonal(x.m1, y.m1), block_diagonal(x.m2, y.m2))


def direct_sum_morphisms(u: ChainMorphism, v: ChainMorphism) -> ChainMorphism:
    return ChainMorphism(
        direct_sum_objects(u.src, v.src),
        direct_sum_objects(u.dst, v.dst),
        block_diagonal(u.a1, v.a1),
        block_diagonal(u.a2, v.a2),
        block_diagonal(u.a3, v.a3),
    )


# -- the homotopy ideal ----------------------------------------------------


def _homotopy_matrix(src: ChainObject, dst: ChainObject) -> Matrix:
    """Coefficients of (s, t) |-> dst.m1 @ s + t @ src.m2 on row-major vecs.

    s is dst.n1 x src.n2 and t is dst.n2 x src.n3.
    """
    ring = src.ring
    return hstack(
        kron(dst.m1, Matrix.identity(ring, src.n2)),
        kron(Matrix.identity(ring, dst.n2), src.m2.transpose()),
    )


def homotopy_witness(u: ChainMorphism) -> tuple[Matrix, Matrix] | None:
    """(s, t) with u.a2 = dst.m1 @ s + t @ src.m2, if one exists."""
    src, dst = u.src, u.dst
    sol = solve_linear(_homotopy_matrix(src, dst), vec_row(u.a2))
    if sol is None:
        return None
    cut = dst.n1 * src.n2
    s = unvec_row(sol.submatrix(0, cut, 0, 1), dst.n1, src.n2)
    t = unvec_row(sol.submatrix(cut, sol.rows, 0, 1), dst.n2, src.n3)
    return s, t


def is_null_homotopic(u: ChainMorphism) -> bool:
    return homotopy_witness(u) is not None


def morphisms_equal(u: ChainMorphism, v: ChainMorphism) -> bool:
    """Equality in the category: the difference is null-homotopic."""
    return is_null_homotopic(u - v)


def is_zero_object(x: ChainObject) -> bool:
    """A chain is the zero object exactly when its identity is null-homotopic."""
    return is_null_homotopic(identity_morphism(x))


# -- kernels, cokernels, images -------------------------------------------


@dataclass(frozen=True)
class ChainWithMap:
    object: ChainObject
    morphism: ChainMorphism


def kernel(u: ChainMorphism) -> ChainWithMap:
    """Kernel by the block formula; the structure map projects onto the
    source summands componentwise."""
    x, y = u.src, u.dst
    ring = x.ring
    eye, zeros = Matrix.identity, Matrix.zeros
    k1 = block([
        [x.m1, zeros(ring, x.n2, y.n1)],
        [u.a1, -eye(ring, y.n1)],
    ])
    k2 = block([
        [x.m2, zeros(ring, x.n3, y.n1)],
        [u.a2, -y.m1],
    ])
    obj = ChainObject(ring, k1, k2)
    mor = ChainMorphism(
        obj, x,
        hstack(eye(ring, x.n1), zeros(ring, x.n1, y.n1)),
        hstack(eye(ring, x.n2), zeros(ring, x.n2, y.n1)),
        hstack(eye(ring, x.n3), zeros(ring, x.n3, y.n2)),
    )
    return ChainWithMap(obj, mor)


def cokernel(u: ChainMorphism) -> ChainWithMap:
    """Cokernel by the block formula; the structure map includes the target
    summands componentwise."""
    x, y = u.src, u.dst
    ring = x.ring
    eye, zeros = Matrix.identity, Matrix.zeros
    c1 = block([
        [y.m1, u.a2],
        [zeros(ring, x.n3, y.n1), -x.m2],
    ])
    c2 = block([
        [y.m2, u.a3],
        [zeros(ring, x.n3, y.n2), -eye(ring, x.n3)],
    ])
    obj = ChainObject(ring, c1, c2)
    mor = ChainMorphism(
        y, obj,
        vstack(eye(ring, y.n1), zeros(ring, x.n2, y.n1)),
        vstack(eye(ring, y.n2), zeros(ring, x.n3, y.n2)),
        vstack(eye(ring, y.n3), zeros(ring, x.n3, y.n3)),
    )
    return ChainWithMap(obj, mor)


def is_isomorphism(u: ChainMorphism) -> bool:
    """Mono plus epi, decided exactly through zero kernel and zero cokernel."""
    return is_zero_object(kernel(u).object) and is_zero_object(cokernel(u).object)


@dataclass(frozen=True)
class ImageFactorization:
    object: ChainObject
    mono: ChainMorphism   # image -> dst
    epi: ChainMorphism    # src -> image


def image_factorization(u: ChainMorphism) -> ImageFactorization:
    """Factor u as (src --epi--> image --mono--> dst), with mono the kernel
    of the cokernel of u and epi found by one homotopy-level linear solve."""
    src, dst = u.src, u.dst
    ring = src.ring
    im = kernel(cokernel(u).morphism)
    obj, mono = im.object, im.morphism

    eye = Matrix.identity
    zeros = Matrix.zeros
    n_e1 = obj.n1 * src.n1
    n_e2 = obj.n2 * src.n2
    n_e3 = obj.n3 * src.n3
    n_s = dst.n1 * src.n2
    n_t = dst.n2 * src.n3

    # unknown column: [vec e1 | vec e2 | vec e3 | vec s | vec t]
    row1 = hstack(
        -kron(obj.m1, eye(ring, src.n1)),
        kron(eye(ring, obj.n2), src.m1.transpose()),
        zeros(ring, obj.n2 * src.n1, n_e3 + n_s + n_t),
    )
    row2 = hstack(
        zeros(ring, obj.n3 * src.n2, n_e1),
        -kron(obj.m2, eye(ring, src.n2)),
        kron(eye(ring, obj.n3), src.m2.transpose()),
        zeros(ring, obj.n3 * src.n2, n_s + n_t),
    )
    row3 = hstack(
        zeros(ring, dst.n2 * src.n2, n_e1),
        kron(mono.a2, eye(ring, src.n2)),
        zeros(ring, dst.n2 * src.n2, n_e3),
        -kron(dst.m1, eye(ring, src.n2)),
        -kron(eye(ring, dst.n2), src.m2.transpose()),
    )
    system = vstack(row1, row2, row3)
    rhs = vstack(
        zeros(ring, obj.n2 * src.n1, 1),
        zeros(ring, obj.n3 * src.n2, 1),
        vec_row(u.a2),
    )
    sol = solve_linear(system, rhs)
    if sol is None:
        raise InternalInvariantError("image factorization solve failed")
    o = 0
    e1 = unvec_row(sol.submatrix(o, o + n_e1, 0, 1), obj.n1, src.n1); o += n_e1
    e2 = unvec_row(sol.submatrix(o, o + n_e2, 0, 1), obj.n2, src.n2); o += n_e2
    e3 = unvec_row(sol.submatrix(o, o + n_e3, 0, 1), obj.n3, src.n3)
    epi = ChainMorphism(src, obj, e1, e2, e3)
    return ImageFactorization(obj, mono, epi)


@dataclass(frozen=True)
class MiddleFactorization:
    """X presented as the image of a map between chains concentrated in two
    spots, with the embedded middle free module in between."""

    kernel_side: ChainMorphism      # (0 -> X2 -> X3) -> embed(X2)
    cokernel_side: ChainMorphism    # embed(X2) -> (X1 -> X2 -> 0)
    connecting: ChainMorphism       # their composite


def middle_factorization(x: ChainObject) -> MiddleFactorization:
    ring = x.ring
    zeros = Matrix.zeros
    eye = Matrix.identity(ring, x.n2)
    left = ChainObject(ring, zeros(ring, x.n2, 0), x.m2)
    mid = embed_rank(ring, x.n2)
    right = ChainObject(ring, x.m1, zeros(ring, 0, x.n2))
    k = ChainMorphism(left, mid, zeros(ring, 0, 0), eye, zeros(ring, 0, x.n3))
    c = ChainMorphism(mid, right, zeros(ring, x.n1, 0), eye, zeros(ring, 0, 0))
    return MiddleFactorization(k, c, compose(k, c))


# -- hom groups ------------------------------------------------------------


def hom_group(x: ChainObject, y: ChainObject) -> FpModule:
    """Hom(x, y) as a finitely presented module: strictly commuting triples
    modulo the ones with null-homotopic middle."""
    if x.ring != y.ring:
        raise RingMismatch("hom over mixed rings")
    ring = x.ring
    eye, zeros = Matrix.identity, Matrix.zeros
    d1, d2, d3 = y.n1 * x.n1, y.n2 * x.n2, y.n3 * x.n3

    commute = vstack(
        hstack(
            -kron(y.m1, eye(ring, x.n1)),
            kron(eye(ring, y.n2), x.m1.transpose()),
            zeros(ring, y.n2 * x.n1, d3),
        ),
        hstack(
            zeros(ring, y.n3 * x.n2, d1),
            -kron(y.m2, eye(ring, x.n2)),
            kron(eye(ring, y.n3), x.m2.transpose()),
        ),
    )
    triples = kernel_gens(commute)

    mid_rows = triples.submatrix(d1, d1 + d2, 0, triples.cols)
    null_coeffs = kernel_gens(hstack(mid_rows, _homotopy_matrix(x, y)))
    null_coeffs = null_coeffs.submatrix(0, triples.cols, 0, null_coeffs.cols)
    null_triples = triples @ null_coeffs
    return present_quotient(triples, null_triples)


def triple_from_vector(x: ChainObject, y: ChainObject, v: Matrix) -> ChainMorphism:
    """Unpack a stacked coefficient vector into a morphism x -> y."""
    d1, d2, d3 = y.n1 * x.n1, y.n2 * x.n2, y.n3 * x.n3
    if v.rows != d1 + d2 + d3 or v.cols != 1:
        raise DimensionMismatch("triple vector has the wrong length")
    return ChainMorphism(
        x, y,
        unvec_row(v.submatrix(0, d1, 0, 1), y.n1, x.n1),
        unvec_row(v.submatrix(d1, d1 + d2, 0, 1), y.n2, x.n2),
        unvec_row(v.submatrix(d1 + d2, d1 + d2 + d3, 0, 1), y.n3, x.n3),
    )


def hom_triple_gens(x: ChainObject, y: ChainObject) -> Matrix:
    """Stacked generating vectors for the strictly commuting triples."""
    ring = x.ring
    eye, zeros = Matrix.identity, Matrix.zeros
    d1, d3 = y.n1 * x.n1, y.n3 * x.n3
    commute = vstack(
        hstack(
            -kron(y.m1, eye(ring, x.n1)),
            kron(eye(ring, y.n2), x.m1.transpose()),
            zeros(ring, y.n2 * x.n1, d3),
        ),
        hstack(
            zeros(ring, y.n3 * x.n2, d1),
            -kron(y.m2, eye(ring, x.n2)),
            kron(eye(ring, y.n3), x.m2.transpose()),
        ),
    )
    return kernel_gens(commute)
