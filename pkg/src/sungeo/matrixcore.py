"""Dense complex matrix core for SU(n).

Validated group and algebra element types, the Frobenius inner product, a
unitary eigendecomposition built entirely from Hermitian solves, the
skew-Hermitian matrix exponential, and Haar-distributed random sampling.

All functions are pure and all types are immutable after construction, so
everything here is safe to call concurrently. The only randomness is the
caller-owned generator passed to the samplers.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    DeterminantError,
    EigenFailedError,
    NotFiniteError,
    NotSkewHermitianError,
    NotUnitaryError,
    ResidualExceededError,
    ShapeError,
    TraceNotZeroError,
)
from .tolerances import alg_tol, eig_tol, group_tol

__all__ = [
    "SpecialUnitary",
    "SkewHermitianTraceless",
    "UnitaryEigenDecomposition",
    "as_complex_matrix",
    "adjoint",
    "frobenius_inner",
    "frobenius_norm",
    "validate_special_unitary",
    "validate_skew_traceless",
    "unitary_eig",
    "expm_skew",
    "random_special_unitary",
    "random_unitary",
    "unitary_product",
]

# Gap threshold for splitting the spectrum of Q + Q^*: far above the
# eigensolver jitter on a degenerate eigenvalue (~n*eps*||.||), far below any
# genuinely separate eigenvalue pair at desk scale. Over-grouping is harmless
# (the second Hermitian solve still produces an eigenbasis within the group);
# under-grouping a true eigenspace is what must be avoided.
_HERM_GAP_TOL = 1e-11


def _readonly(arr: np.ndarray) -> np.ndarray:
    out = np.array(arr, order="C")
    out.setflags(write=False)
    return out


def as_complex_matrix(a) -> np.ndarray:
    """Coerce to a square complex128 matrix with finite entries."""
    arr = np.asarray(a, dtype=np.complex128)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] < 1:
        raise ShapeError(f"expected a square matrix, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise NotFiniteError("matrix entries must be finite")
    return arr


def adjoint(a: np.ndarray) -> np.ndarray:
    """Conjugate transpose."""
    return np.conj(np.asarray(a)).T


def frobenius_inner(a, b) -> float:
    """Real scalar product Re(tr(A B^*)) of two square matrices."""
    am = as_complex_matrix(a)
    bm = as_complex_matrix(b)
    if am.shape != bm.shape:
        raise ShapeError(f"order mismatch: {am.shape[0]} vs {bm.shape[0]}")
    # Re tr(A B^*) equals the elementwise sum Re(sum A_jk conj(B_jk)).
    return float(np.vdot(bm, am).real)


def frobenius_norm(a) -> float:
    """Frobenius norm sqrt(sum |a_jk|^2)."""
    am = as_complex_matrix(a)
    return float(np.sqrt(max(np.vdot(am, am).real, 0.0)))


@dataclass(frozen=True, eq=False)
class SpecialUnitary:
    """Validated element of SU(n).

    ``unitarity_residual`` is ||QQ^* - I||_F and ``det_residual`` is
    |det(Q) - 1|, both recorded at validation time.
    """

    entries: np.ndarray
    unitarity_residual: float
    det_residual: float

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    def adjoint(self) -> "SpecialUnitary":
        # Q^* inherits the residuals: ||Q^*Q - I||_F = ||QQ^* - I||_F
        # (same singular values) and |conj(det) - 1| = |det - 1|.
        return SpecialUnitary(_readonly(self.entries.conj().T),
                              self.unitarity_residual, self.det_residual)


@dataclass(frozen=True, eq=False)
class SkewHermitianTraceless:
    """Element of the Lie algebra su(n): skew-Hermitian with zero trace."""

    entries: np.ndarray

    @property
    def n(self) -> int:
        return self.entries.shape[0]

    def __neg__(self) -> "SkewHermitianTraceless":
        return SkewHermitianTraceless(_readonly(-self.entries))

    def scaled(self, t: float) -> "SkewHermitianTraceless":
        """Real scalar multiple; stays in the algebra."""
        return SkewHermitianTraceless(_readonly(self.entries * float(t)))

    def norm(self) -> float:
        return frobenius_norm(self.entries)


@dataclass(frozen=True, eq=False)
class UnitaryEigenDecomposition:
    """Q = U diag(eigenvalues) U^* with U unitary and unit-modulus
    eigenvalues (projected onto the circle after the raw solve)."""

    eigenvalues: np.ndarray
    basis: np.ndarray
    residual: float

    @property
    def n(self) -> int:
        return self.basis.shape[0]


def validate_special_unitary(a, tol: float | None = None) -> SpecialUnitary:
    """Check unitarity and unit determinant, returning the wrapped matrix.

    Raises ``NotUnitaryError`` or ``DeterminantError`` with the offending
    residual when the matrix is farther than ``tol`` from SU(n).
    """
    arr = as_complex_matrix(a)
    n = arr.shape[0]
    tol = group_tol(n) if tol is None else float(tol)
    gram = arr @ arr.conj().T
    u_res = float(np.linalg.norm(gram - np.eye(n)))
    if u_res > tol:
        raise NotUnitaryError("matrix is not unitary",
                              residual=u_res, tolerance=tol)
    d_res = float(abs(np.linalg.det(arr) - 1.0))
    if d_res > tol:
        raise DeterminantError("determinant is not one",
                               residual=d_res, tolerance=tol)
    return SpecialUnitary(_readonly(arr), u_res, d_res)


def validate_skew_traceless(x, tol: float | None = None) -> SkewHermitianTraceless:
    """Check membership in su(n): X + X^* = 0 and tr(X) = 0.

    A matrix passing both checks automatically has purely imaginary
    eigenvalues up to the same tolerance.
    """
    arr = as_complex_matrix(x)
    n = arr.shape[0]
    tol = alg_tol(n) if tol is None else float(tol)
    skew_res = float(np.linalg.norm(arr + arr.conj().T))
    if skew_res > tol:
        raise NotSkewHermitianError("matrix is not skew-Hermitian",
                                    residual=skew_res, tolerance=tol)
    tr_res = float(abs(np.trace(arr)))
    if tr_res > tol:
        raise TraceNotZeroError("trace is not zero",
                                residual=tr_res, tolerance=tol)
    return SkewHermitianTraceless(_readonly(arr))


def unitary_eig(q: SpecialUnitary, tol: float | None = None) -> UnitaryEigenDecomposition:
    """Eigendecomposition of a special unitary matrix via Hermitian solves.

    Diagonalizes the Hermitian part Q + Q^* first, then diagonalizes the
    projected skew part (Q - Q^*)/i inside each eigenspace. Because Q is
    normal the two commute, so this produces a simultaneous unitary
    eigenbasis using only Hermitian eigensolvers. Raw eigenvalues are read
    off the diagonal of U^* Q U and rescaled to modulus one.
    """
    a = q.entries
    n = q.n
    tol = eig_tol(n) if tol is None else float(tol)
    try:
        w, basis = np.linalg.eigh(a + a.conj().T)
    except np.linalg.LinAlgError as exc:
        raise EigenFailedError(f"hermitian eigensolver failed: {exc}") from exc
    basis = np.array(basis)
    skew = (a - a.conj().T) / 1j
    splits = np.nonzero(np.diff(w) > _HERM_GAP_TOL * max(n, 2))[0] + 1
    for block in np.split(np.arange(n), splits):
        if block.size < 2:
            continue
        cols = basis[:, block]
        proj = cols.conj().T @ skew @ cols
        proj = (proj + proj.conj().T) / 2.0
        try:
            _, rot = np.linalg.eigh(proj)
        except np.linalg.LinAlgError as exc:
            raise EigenFailedError(f"hermitian eigensolver failed: {exc}") from exc
        basis[:, block] = cols @ rot
    raw = np.einsum("ji,jk,ki->i", basis.conj(), a, basis)
    mags = np.abs(raw)
    if np.any(mags < 0.5):
        raise EigenFailedError("eigenvalue collapsed away from the unit circle")
    evals = raw / mags
    recon = (basis * evals) @ basis.conj().T
    residual = float(np.linalg.norm(recon - a))
    if residual > tol:
        raise ResidualExceededError("eigendecomposition reconstruction failed",
                                    residual=residual, tolerance=tol)
    return UnitaryEigenDecomposition(_readonly(evals), _readonly(basis), residual)


def expm_skew(x: SkewHermitianTraceless, tol: float | None = None) -> SpecialUnitary:
    """Matrix exponential su(n) -> SU(n).

    Diagonalizes the Hermitian matrix -iX and exponentiates its (real)
    eigenvalues on the unit circle: exp(X) = V diag(e^{i theta_j}) V^*.
    The result is revalidated as special unitary.
    """
    herm = -1j * x.entries
    herm = (herm + herm.conj().T) / 2.0
    try:
        w, v = np.linalg.eigh(herm)
    except np.linalg.LinAlgError as exc:
        raise EigenFailedError(f"hermitian eigensolver failed: {exc}") from exc
    e = (v * np.exp(1j * w)) @ v.conj().T
    return validate_special_unitary(e, tol=tol)


def _haar_unitary(n: int, rng: np.random.Generator) -> np.ndarray:
    z = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n)))
    z /= np.sqrt(2.0)
    qmat, r = np.linalg.qr(z)
    diag = np.diagonal(r)
    # Phase fix: dividing column j by the phase of r_jj makes the factor
    # a deterministic equivariant function of the Gaussian draw, so its
    # law is exactly Haar on U(n).
    qmat = qmat / (diag / np.abs(diag))
    return qmat


def _as_rng(seed) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def random_unitary(n: int, seed) -> np.ndarray:
    """Haar-distributed U(n) matrix, deterministic per seed."""
    if n < 1:
        raise ShapeError("order must be at least 1")
    return _haar_unitary(n, _as_rng(seed))


def random_special_unitary(n: int, seed) -> SpecialUnitary:
    """Haar-distributed SU(n) matrix, deterministic per seed.

    Samples Haar on U(n) by phase-fixed QR of a complex Gaussian matrix,
    then divides the first column by the determinant to land in SU(n).
    """
    if n < 1:
        raise ShapeError("order must be at least 1")
    qmat = _haar_unitary(n, _as_rng(seed)).copy()
    qmat[:, 0] /= np.linalg.det(qmat)
    return validate_special_unitary(qmat)


def unitary_product(p: SpecialUnitary, q: SpecialUnitary,
                    tol: float | None = None) -> SpecialUnitary:
    """Group product P Q as a validated element.

    Default tolerance is 10x the group tolerance: residuals of the factors
    accumulate, so an exact-group-tolerance check could spuriously reject
    products of matrices that each barely pass validation.
    """
    if p.n != q.n:
        raise ShapeError(f"order mismatch: {p.n} vs {q.n}")
    tol = 10.0 * group_tol(p.n) if tol is None else float(tol)
    return validate_special_unitary(p.entries @ q.entries, tol=tol)
