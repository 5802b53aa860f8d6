//! Dense complex-matrix foundation: Hermitian operators, quantum states,
//! spectral decompositions with degeneracy grouping, and thermal states.

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::{C64, CMatrix, CVector};

/// Relative tolerance for the Hermiticity contract of [`HermitianOperator`].
pub const HERMITICITY_TOL: f64 = 1e-12;
/// Most negative eigenvalue accepted for a density matrix.
pub const DENSITY_EIGENVALUE_FLOOR: f64 = -1e-10;
/// Coupling above which a degenerate pair of eigenvalue groups makes the
/// counterdiabatic construction ill-defined.
pub const DEGENERATE_COUPLING_TOL: f64 = 1e-8;

/// Frobenius norm `sqrt(Tr[A^H A])` of an arbitrary complex matrix.
pub fn frobenius_norm(a: &CMatrix) -> f64 {
    a.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Commutator `AB - BA`; anti-Hermitian whenever both arguments are Hermitian.
pub fn commutator(a: &CMatrix, b: &CMatrix) -> Result<CMatrix> {
    if a.nrows() != b.nrows() || !a.is_square() || !b.is_square() {
        return Err(Error::DimMismatch(a.nrows(), b.nrows()));
    }
    Ok(a * b - b * a)
}

fn check_finite(m: &CMatrix) -> Result<()> {
    for col in 0..m.ncols() {
        for row in 0..m.nrows() {
            let z = m[(row, col)];
            if !z.re.is_finite() || !z.im.is_finite() {
                return Err(Error::NonFinite { row, col });
            }
        }
    }
    Ok(())
}

/// A dense complex square matrix with an enforced Hermiticity contract.
///
/// Hosts Hamiltonians, driving fields, and observables. Entries carry units
/// of energy unless a model states otherwise.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianOperator {
    entries: CMatrix,
}

impl HermitianOperator {
    /// Validates finiteness and `A = A^H` within `1e-12 * max|entry|`.
    pub fn new(entries: CMatrix) -> Result<Self> {
        if !entries.is_square() || entries.nrows() == 0 {
            return Err(Error::InvalidInput(format!(
                "operator must be square and non-empty, got {}x{}",
                entries.nrows(),
                entries.ncols()
            )));
        }
        check_finite(&entries)?;
        let scale = entries.iter().map(|z| z.norm()).fold(0.0, f64::max);
        let tol = HERMITICITY_TOL * scale.max(f64::MIN_POSITIVE);
        let mut defect = 0.0f64;
        for i in 0..entries.nrows() {
            for j in i..entries.ncols() {
                let d = (entries[(i, j)] - entries[(j, i)].conj()).norm();
                defect = defect.max(d);
            }
        }
        if defect > tol {
            return Err(Error::NotHermitian { defect, tol });
        }
        Ok(Self { entries })
    }

    /// Builds from `(A + A^H) / 2`, absorbing round-off from matrix products.
    /// The input must already be Hermitian up to numerical noise; large
    /// defects still fail.
    pub fn hermitized(entries: CMatrix) -> Result<Self> {
        check_finite(&entries)?;
        let sym = (&entries + entries.adjoint()) * C64::new(0.5, 0.0);
        Ok(Self { entries: sym })
    }

    /// Real symmetric input (every paper model is real in its natural basis).
    pub fn from_real(m: DMatrix<f64>) -> Result<Self> {
        Self::new(m.map(|x| C64::new(x, 0.0)))
    }

    pub fn zero(dim: usize) -> Self {
        Self { entries: CMatrix::zeros(dim, dim) }
    }

    pub fn identity(dim: usize) -> Self {
        Self { entries: CMatrix::identity(dim, dim) }
    }

    pub fn dim(&self) -> usize {
        self.entries.nrows()
    }

    pub fn entries(&self) -> &CMatrix {
        &self.entries
    }

    pub fn into_entries(self) -> CMatrix {
        self.entries
    }

    /// `sqrt(Tr[A^H A])`; zero iff the operator is zero.
    pub fn frobenius_norm(&self) -> f64 {
        frobenius_norm(&self.entries)
    }

    pub fn trace(&self) -> f64 {
        self.entries.diagonal().iter().map(|z| z.re).sum()
    }

    pub fn scale(&self, factor: f64) -> Self {
        Self { entries: &self.entries * C64::new(factor, 0.0) }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.dim() != other.dim() {
            return Err(Error::DimMismatch(self.dim(), other.dim()));
        }
        Ok(Self { entries: &self.entries + &other.entries })
    }

    /// Commutator with another operator (anti-Hermitian result).
    pub fn commutator(&self, other: &Self) -> Result<CMatrix> {
        commutator(&self.entries, &other.entries)
    }

    /// Eigendecomposition with eigenvalues grouped by the transitive closure
    /// of `|E_a - E_b| <= degeneracy_tol`.
    pub fn eigendecompose(&self, degeneracy_tol: f64) -> Result<SpectralDecomposition> {
        SpectralDecomposition::new(self, degeneracy_tol)
    }

    /// Eigendecomposition with the default relative degeneracy tolerance
    /// `1e-9 * (E_max - E_min)`.
    pub fn eigendecompose_auto(&self) -> Result<SpectralDecomposition> {
        let (vals, vecs) = hermitian_eigen(&self.entries)?;
        let spread = vals[vals.len() - 1] - vals[0];
        let scale = vals.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        // Floor keeps exact multiples of the identity in a single group.
        let tol = (1e-9 * spread).max(1e-13 * scale);
        SpectralDecomposition::from_parts(vals, vecs, tol, None)
    }

    /// Gibbs state `exp(-beta H) / Tr[exp(-beta H)]`, computed spectrally
    /// with a max-shift so that large `beta` cannot overflow. `beta = +inf`
    /// yields the normalized projector onto the ground group.
    pub fn thermal_state(&self, beta: f64) -> Result<QuantumState> {
        if beta < 0.0 || beta.is_nan() {
            return Err(Error::InvalidInput(format!(
                "inverse temperature must be nonnegative, got {beta}"
            )));
        }
        let decomp = self.eigendecompose_auto()?;
        let e0 = decomp.groups()[0].eigenvalue;
        let mut weights = vec![0.0; self.dim()];
        if beta.is_infinite() {
            let ground = &decomp.groups()[0];
            let w = 1.0 / ground.multiplicity as f64;
            for c in ground.column_range() {
                weights[c] = w;
            }
        } else {
            let mut z = 0.0;
            for g in decomp.groups() {
                let w = (-beta * (g.eigenvalue - e0)).exp();
                z += w * g.multiplicity as f64;
                for c in g.column_range() {
                    weights[c] = w;
                }
            }
            for w in &mut weights {
                *w /= z;
            }
        }
        // rho = V diag(weights) V^H is positive semidefinite by construction.
        let v = decomp.eigenvectors();
        let mut scaled = v.clone();
        for (c, w) in weights.iter().enumerate() {
            let mut col = scaled.column_mut(c);
            col *= C64::new(*w, 0.0);
        }
        let rho = &scaled * v.adjoint();
        let rho = (&rho + rho.adjoint()) * C64::new(0.5, 0.0);
        Ok(QuantumState::density_unchecked(rho))
    }
}

/// Hermitian eigensolver (LAPACK-backed): ascending real eigenvalues and
/// orthonormal eigenvector columns. Real-valued matrices take the faster
/// real-symmetric path.
pub(crate) fn hermitian_eigen(m: &CMatrix) -> Result<(Vec<f64>, CMatrix)> {
    use ndarray_linalg::{Eigh, UPLO};

    let dim = m.nrows();
    let scale = m.iter().map(|z| z.norm()).fold(0.0, f64::max);
    let fail = |_| Error::Eigensolver { dim, scale };

    let (vals, vecs): (Vec<f64>, CMatrix) = if m.iter().all(|z| z.im == 0.0) {
        let a = ndarray::Array2::from_shape_fn((dim, dim), |(i, j)| m[(i, j)].re);
        let (w, v) = a.eigh(UPLO::Lower).map_err(fail)?;
        (w.to_vec(), CMatrix::from_fn(dim, dim, |i, j| C64::new(v[(i, j)], 0.0)))
    } else {
        let a = ndarray::Array2::from_shape_fn((dim, dim), |(i, j)| m[(i, j)]);
        let (w, v) = a.eigh(UPLO::Lower).map_err(fail)?;
        (w.to_vec(), CMatrix::from_fn(dim, dim, |i, j| v[(i, j)]))
    };

    if vals.iter().any(|v| !v.is_finite()) {
        return Err(Error::Eigensolver { dim, scale });
    }
    debug_assert!(vals.windows(2).all(|w| w[0] <= w[1]), "LAPACK eigenvalues ascend");
    Ok((vals, vecs))
}

/// One group of (near-)degenerate eigenvalues with its eigenspace.
#[derive(Debug, Clone)]
pub struct EigenGroup {
    /// Representative eigenvalue (mean of the group).
    pub eigenvalue: f64,
    pub multiplicity: usize,
    /// Symmetry sector this group lives in; 0 when no sectors are declared.
    pub sector: usize,
    /// Index of the group's first eigenvector column.
    pub(crate) first_index: usize,
    /// Orthonormal basis of the group's eigenspace (dim x multiplicity).
    vectors: CMatrix,
}

impl EigenGroup {
    /// Orthogonal projector `P_j` onto the group's eigenspace, built on
    /// demand (forming every projector eagerly dominates the eigensolve
    /// itself at a few hundred dimensions).
    pub fn projector(&self) -> HermitianOperator {
        let p = &self.vectors * self.vectors.adjoint();
        let sym = (&p + p.adjoint()) * C64::new(0.5, 0.0);
        HermitianOperator { entries: sym }
    }

    /// Orthonormal eigenspace basis (dim x multiplicity).
    pub fn basis(&self) -> &CMatrix {
        &self.vectors
    }

    pub(crate) fn column_range(&self) -> std::ops::Range<usize> {
        self.first_index..self.first_index + self.multiplicity
    }

    /// `Tr[rho P_j]` without forming the projector.
    pub fn population(&self, state: &QuantumState) -> Result<f64> {
        if state.dim() != self.vectors.nrows() {
            return Err(Error::DimMismatch(state.dim(), self.vectors.nrows()));
        }
        let pop = match state {
            QuantumState::Pure(psi) => self
                .vectors
                .column_iter()
                .map(|v| v.dotc(psi).norm_sqr())
                .sum::<f64>(),
            QuantumState::Density(rho) => self
                .vectors
                .column_iter()
                .map(|v| {
                    let rv = rho * v;
                    v.dotc(&rv).re
                })
                .sum::<f64>(),
        };
        Ok(pop.clamp(0.0, 1.0))
    }
}

/// Grouped eigendecomposition of a Hermitian operator.
///
/// Groups are sorted by eigenvalue. Without sectors, consecutive groups are
/// separated by more than `degeneracy_tol`; with sectors, that separation is
/// guaranteed only within each sector (groups from different sectors may be
/// exactly degenerate, which is harmless because the Hamiltonian never
/// couples them).
#[derive(Debug, Clone)]
pub struct SpectralDecomposition {
    groups: Vec<EigenGroup>,
    eigenvalues: Vec<f64>,
    eigenvectors: CMatrix,
    degeneracy_tol: f64,
}

impl SpectralDecomposition {
    pub fn new(op: &HermitianOperator, degeneracy_tol: f64) -> Result<Self> {
        if degeneracy_tol < 0.0 || !degeneracy_tol.is_finite() {
            return Err(Error::InvalidInput(format!(
                "degeneracy tolerance must be finite and nonnegative, got {degeneracy_tol}"
            )));
        }
        let (vals, vecs) = hermitian_eigen(op.entries())?;
        Self::from_parts(vals, vecs, degeneracy_tol, None)
    }

    /// Sector-aware decomposition: the operator is diagonalized inside each
    /// symmetry sector separately, so exact cross-sector degeneracies never
    /// merge and level tracking can stay within a sector. `sectors[i]` labels
    /// computational basis state `i`; the operator must be block diagonal
    /// with respect to the labels.
    pub fn new_sectored(
        op: &HermitianOperator,
        degeneracy_tol: f64,
        sectors: &[usize],
    ) -> Result<Self> {
        let dim = op.dim();
        if sectors.len() != dim {
            return Err(Error::DimMismatch(sectors.len(), dim));
        }
        let mut labels: Vec<usize> = sectors.to_vec();
        labels.sort_unstable();
        labels.dedup();
        if labels.len() == 1 {
            let (vals, vecs) = hermitian_eigen(op.entries())?;
            return Self::from_parts(vals, vecs, degeneracy_tol, Some(labels[0]));
        }

        let scale = frobenius_norm(op.entries());
        let mut all: Vec<(f64, CVector, usize)> = Vec::with_capacity(dim);
        for &label in &labels {
            let idx: Vec<usize> = (0..dim).filter(|&i| sectors[i] == label).collect();
            let mut sub = CMatrix::zeros(idx.len(), idx.len());
            for (a, &ia) in idx.iter().enumerate() {
                for (b, &ib) in idx.iter().enumerate() {
                    sub[(a, b)] = op.entries()[(ia, ib)];
                }
            }
            // Off-sector couplings would make the labels meaningless.
            let mut off = 0.0f64;
            for &ia in &idx {
                for ib in 0..dim {
                    if sectors[ib] != label {
                        off = off.max(op.entries()[(ia, ib)].norm());
                    }
                }
            }
            if off > 1e-10 * scale.max(f64::MIN_POSITIVE) {
                return Err(Error::InvalidInput(format!(
                    "sector labels are not conserved: off-sector coupling {off:.3e}"
                )));
            }
            let (vals, vecs) = hermitian_eigen(&sub)?;
            for (j, &v) in vals.iter().enumerate() {
                let mut full = CVector::zeros(dim);
                for (a, &ia) in idx.iter().enumerate() {
                    full[ia] = vecs[(a, j)];
                }
                all.push((v, full, label));
            }
        }
        all.sort_by(|x, y| {
            x.0.partial_cmp(&y.0).unwrap().then_with(|| x.2.cmp(&y.2))
        });
        let vals: Vec<f64> = all.iter().map(|e| e.0).collect();
        let mut vecs = CMatrix::zeros(dim, dim);
        let secs: Vec<usize> = all.iter().map(|e| e.2).collect();
        for (j, e) in all.iter().enumerate() {
            vecs.set_column(j, &e.1);
        }
        Self::from_parts_sectored(vals, vecs, degeneracy_tol, &secs)
    }

    fn from_parts(
        vals: Vec<f64>,
        vecs: CMatrix,
        tol: f64,
        sector: Option<usize>,
    ) -> Result<Self> {
        let secs = vec![sector.unwrap_or(0); vals.len()];
        Self::from_parts_sectored(vals, vecs, tol, &secs)
    }

    /// Chains eigenvalues into groups transitively, never merging across
    /// sector labels.
    fn from_parts_sectored(
        vals: Vec<f64>,
        vecs: CMatrix,
        tol: f64,
        sectors: &[usize],
    ) -> Result<Self> {
        let dim = vals.len();
        let mut groups = Vec::new();
        let mut start = 0;
        for i in 1..=dim {
            let boundary = i == dim
                || vals[i] - vals[i - 1] > tol
                || sectors[i] != sectors[start];
            if boundary {
                let mean = vals[start..i].iter().sum::<f64>() / (i - start) as f64;
                groups.push(EigenGroup {
                    eigenvalue: mean,
                    multiplicity: i - start,
                    sector: sectors[start],
                    first_index: start,
                    vectors: vecs.columns(start, i - start).into_owned(),
                });
                if i < dim {
                    start = i;
                }
            }
        }
        Ok(Self { groups, eigenvalues: vals, eigenvectors: vecs, degeneracy_tol: tol })
    }

    pub fn groups(&self) -> &[EigenGroup] {
        &self.groups
    }

    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    /// Raw sorted eigenvalues (one per state, degeneracies repeated).
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    /// Orthonormal eigenvector columns matching [`Self::eigenvalues`].
    pub fn eigenvectors(&self) -> &CMatrix {
        &self.eigenvectors
    }

    pub fn degeneracy_tol(&self) -> f64 {
        self.degeneracy_tol
    }

    /// Group index owning eigenvector column `col`.
    pub(crate) fn group_of_column(&self, col: usize) -> usize {
        self.groups
            .iter()
            .position(|g| col >= g.first_index && col < g.first_index + g.multiplicity)
            .expect("column within decomposition")
    }

    /// `Sum_j E_j P_j`; reconstructs the decomposed operator.
    pub fn reconstruct(&self) -> CMatrix {
        let dim = self.dim();
        let mut m = CMatrix::zeros(dim, dim);
        for g in &self.groups {
            m += g.projector.entries() * C64::new(g.eigenvalue, 0.0);
        }
        m
    }

    /// Occupation `Tr[rho P_j]` of every group for the given state.
    pub fn populations(&self, state: &QuantumState) -> Result<Vec<f64>> {
        self.groups.iter().map(|g| state.population(&g.projector)).collect()
    }
}

/// A pure state vector or a density matrix.
#[derive(Debug, Clone)]
pub enum QuantumState {
    Pure(CVector),
    Density(CMatrix),
}

impl QuantumState {
    /// A pure state; the vector must already have unit norm within `1e-12`.
    pub fn pure(vector: CVector) -> Result<Self> {
        if vector.is_empty() {
            return Err(Error::InvalidState("empty state vector".into()));
        }
        if vector.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::InvalidState("non-finite amplitude".into()));
        }
        let n = vector.norm();
        if (n - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidState(format!("state norm {n} is not 1")));
        }
        Ok(Self::Pure(vector))
    }

    /// A pure state normalized from any nonzero vector.
    pub fn pure_normalized(vector: CVector) -> Result<Self> {
        let n = vector.norm();
        if n == 0.0 || !n.is_finite() {
            return Err(Error::InvalidState(format!("cannot normalize vector with norm {n}")));
        }
        Ok(Self::Pure(vector / C64::new(n, 0.0)))
    }

    /// A density matrix: Hermitian, unit trace within `1e-12`, and no
    /// eigenvalue below `-1e-10` (tiny negatives from integrator round-off
    /// are tolerated and clamped wherever populations are read off).
    pub fn density(matrix: CMatrix) -> Result<Self> {
        let op = HermitianOperator::new(matrix)?;
        let tr = op.trace();
        if (tr - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidState(format!("density trace {tr} is not 1")));
        }
        let (vals, _) = hermitian_eigen(op.entries())?;
        if vals[0] < DENSITY_EIGENVALUE_FLOOR {
            return Err(Error::InvalidState(format!(
                "density matrix has eigenvalue {} below {DENSITY_EIGENVALUE_FLOOR}",
                vals[0]
            )));
        }
        Ok(Self::Density(op.into_entries()))
    }

    /// Wraps integrator output without the eigenvalue check; trace and
    /// Hermiticity are still asserted cheaply.
    pub(crate) fn density_unchecked(matrix: CMatrix) -> Self {
        Self::Density(matrix)
    }

    pub fn dim(&self) -> usize {
        match self {
            Self::Pure(v) => v.len(),
            Self::Density(m) => m.nrows(),
        }
    }

    pub fn is_pure(&self) -> bool {
        matches!(self, Self::Pure(_))
    }

    /// The state as a density matrix (`|psi><psi|` for pure states).
    pub fn density_matrix(&self) -> CMatrix {
        match self {
            Self::Pure(v) => v * v.adjoint(),
            Self::Density(m) => m.clone(),
        }
    }

    /// `Tr[rho^2]`; 1 for pure states.
    pub fn purity(&self) -> f64 {
        match self {
            Self::Pure(_) => 1.0,
            Self::Density(m) => m.iter().map(|z| z.norm_sqr()).sum(),
        }
    }

    /// `Tr[rho P]`, clamped into `[0, 1]` against round-off.
    pub fn population(&self, projector: &HermitianOperator) -> Result<f64> {
        let raw = self.expectation(projector)?;
        Ok(raw.clamp(0.0, 1.0))
    }

    /// `<A> = Tr[rho A]`.
    pub fn expectation(&self, a: &HermitianOperator) -> Result<f64> {
        if self.dim() != a.dim() {
            return Err(Error::DimMismatch(self.dim(), a.dim()));
        }
        Ok(match self {
            Self::Pure(v) => {
                let av = a.entries() * v;
                v.dotc(&av).re
            }
            Self::Density(m) => (a.entries() * m).diagonal().iter().map(|z| z.re).sum(),
        })
    }

    /// `(<A>, Var A)` with the variance clamped at zero.
    pub fn expectation_and_variance(&self, a: &HermitianOperator) -> Result<(f64, f64)> {
        if self.dim() != a.dim() {
            return Err(Error::DimMismatch(self.dim(), a.dim()));
        }
        Ok(match self {
            Self::Pure(v) => {
                let av = a.entries() * v;
                let mean = v.dotc(&av).re;
                let second = av.norm_squared();
                (mean, (second - mean * mean).max(0.0))
            }
            Self::Density(m) => {
                let am = a.entries() * m;
                let mean: f64 = am.diagonal().iter().map(|z| z.re).sum();
                let second: f64 = (a.entries() * &am).diagonal().iter().map(|z| z.re).sum();
                (mean, (second - mean * mean).max(0.0))
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn pauli_x() -> HermitianOperator {
        HermitianOperator::new(CMatrix::from_row_slice(
            2,
            2,
            &[C64::new(0.0, 0.0), C64::new(1.0, 0.0), C64::new(1.0, 0.0), C64::new(0.0, 0.0)],
        ))
        .unwrap()
    }

    pub(crate) fn pauli_y() -> HermitianOperator {
        HermitianOperator::new(CMatrix::from_row_slice(
            2,
            2,
            &[C64::new(0.0, 0.0), C64::new(0.0, -1.0), C64::new(0.0, 1.0), C64::new(0.0, 0.0)],
        ))
        .unwrap()
    }

    pub(crate) fn pauli_z() -> HermitianOperator {
        HermitianOperator::new(CMatrix::from_row_slice(
            2,
            2,
            &[C64::new(1.0, 0.0), C64::new(0.0, 0.0), C64::new(0.0, 0.0), C64::new(-1.0, 0.0)],
        ))
        .unwrap()
    }

    #[test]
    fn frobenius_norm_of_pauli_y_is_sqrt2() {
        assert!((pauli_y().frobenius_norm() - 2.0f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn frobenius_norm_of_zero_is_zero() {
        for dim in [1, 3, 7] {
            assert_eq!(HermitianOperator::zero(dim).frobenius_norm(), 0.0);
        }
    }

    #[test]
    fn frobenius_norm_of_lz_cd_field_at_crossing() {
        // Landau-Zener counterdiabatic field at g = 0, gdot = 1, delta = 1:
        // -(1/2) sigma_y, norm sqrt(2)/2.
        let field = pauli_y().scale(-0.5);
        assert!((field.frobenius_norm() - 2.0f64.sqrt() / 2.0).abs() < 1e-12);
    }

    #[test]
    fn non_hermitian_rejected() {
        let m = CMatrix::from_row_slice(
            2,
            2,
            &[C64::new(0.0, 0.0), C64::new(1.0, 0.0), C64::new(0.5, 0.0), C64::new(0.0, 0.0)],
        );
        assert!(matches!(HermitianOperator::new(m), Err(Error::NotHermitian { .. })));
    }

    #[test]
    fn non_finite_rejected() {
        let m = CMatrix::from_row_slice(
            2,
            2,
            &[
                C64::new(f64::NAN, 0.0),
                C64::new(0.0, 0.0),
                C64::new(0.0, 0.0),
                C64::new(0.0, 0.0),
            ],
        );
        assert!(matches!(HermitianOperator::new(m), Err(Error::NonFinite { .. })));
    }

    #[test]
    fn commutator_with_identity_vanishes() {
        let c = pauli_z().commutator(&HermitianOperator::identity(2).scale(0.5)).unwrap();
        assert!(frobenius_norm(&c) < 1e-15);
    }

    #[test]
    fn commutator_of_sz_sx_is_2i_sy() {
        let c = pauli_z().commutator(&pauli_x()).unwrap();
        let expect = pauli_y().entries() * C64::new(0.0, 2.0);
        assert!(frobenius_norm(&(c - expect)) < 1e-15);
    }

    #[test]
    fn diagonal_matrices_commute() {
        let a = HermitianOperator::from_real(DMatrix::from_diagonal(
            &nalgebra::DVector::from_vec(vec![1.0, 2.0]),
        ))
        .unwrap();
        let b = HermitianOperator::from_real(DMatrix::from_diagonal(
            &nalgebra::DVector::from_vec(vec![3.0, 4.0]),
        ))
        .unwrap();
        assert_eq!(frobenius_norm(&a.commutator(&b).unwrap()), 0.0);
    }

    #[test]
    fn commutator_dim_mismatch() {
        let a = HermitianOperator::identity(2);
        let b = HermitianOperator::identity(3);
        assert!(matches!(a.commutator(&b), Err(Error::DimMismatch(2, 3))));
    }

    #[test]
    fn eigendecompose_groups_degenerate_levels() {
        let h = HermitianOperator::from_real(DMatrix::from_diagonal(
            &nalgebra::DVector::from_vec(vec![1.0, 1.0, 2.0]),
        ))
        .unwrap();
        let d = h.eigendecompose(1e-8).unwrap();
        assert_eq!(d.groups().len(), 2);
        assert_eq!(d.groups()[0].multiplicity, 2);
        assert_eq!(d.groups()[1].multiplicity, 1);
    }

    #[test]
    fn eigendecompose_pauli_x() {
        let d = pauli_x().eigendecompose(1e-10).unwrap();
        assert_eq!(d.groups().len(), 2);
        assert!((d.groups()[0].eigenvalue + 1.0).abs() < 1e-12);
        assert!((d.groups()[1].eigenvalue - 1.0).abs() < 1e-12);
        // projectors (I -+ sigma_x)/2
        let pm = (CMatrix::identity(2, 2) - pauli_x().entries()) * C64::new(0.5, 0.0);
        let pp = (CMatrix::identity(2, 2) + pauli_x().entries()) * C64::new(0.5, 0.0);
        assert!(frobenius_norm(&(d.groups()[0].projector.entries() - pm)) < 1e-12);
        assert!(frobenius_norm(&(d.groups()[1].projector.entries() - pp)) < 1e-12);
    }

    #[test]
    fn decomposition_reconstructs_and_resolves_identity() {
        // fixed non-trivial Hermitian matrix
        let h = HermitianOperator::hermitized(CMatrix::from_fn(5, 5, |i, j| {
            C64::new(
                ((i * 7 + j * 3) % 11) as f64 / 11.0,
                if i == j { 0.0 } else { ((i as f64) - (j as f64)) / 9.0 },
            )
        }))
        .unwrap();
        let d = h.eigendecompose_auto().unwrap();
        let mut sum = CMatrix::zeros(5, 5);
        for g in d.groups() {
            // idempotent
            let p = g.projector.entries();
            assert!(frobenius_norm(&(p * p - p)) < 1e-10);
            sum += p;
        }
        assert!(frobenius_norm(&(sum - CMatrix::identity(5, 5))) < 1e-10);
        let defect = frobenius_norm(&(d.reconstruct() - h.entries()));
        assert!(defect < 1e-10 * h.frobenius_norm().max(1.0));
    }

    #[test]
    fn thermal_state_infinite_temperature_is_maximally_mixed() {
        let h = pauli_x();
        let rho = h.thermal_state(0.0).unwrap().density_matrix();
        assert!(frobenius_norm(&(rho - CMatrix::identity(2, 2) * C64::new(0.5, 0.0))) < 1e-12);
    }

    #[test]
    fn thermal_state_zero_temperature_is_ground_projector() {
        let rho = pauli_z().thermal_state(f64::INFINITY).unwrap().density_matrix();
        // ground of sigma_z is |down> (second basis state)
        let mut expect = CMatrix::zeros(2, 2);
        expect[(1, 1)] = C64::new(1.0, 0.0);
        assert!(frobenius_norm(&(rho - expect)) < 1e-12);
    }

    #[test]
    fn thermal_state_sz_beta_one() {
        let rho = pauli_z().thermal_state(1.0).unwrap().density_matrix();
        let z = (-1.0f64).exp() + 1.0f64.exp();
        assert!((rho[(0, 0)].re - (-1.0f64).exp() / z).abs() < 1e-12);
        assert!((rho[(1, 1)].re - 1.0f64.exp() / z).abs() < 1e-12);
        assert!((rho[(0, 0)].re - 0.1192).abs() < 1e-4);
        assert!((rho[(1, 1)].re - 0.8808).abs() < 1e-4);
    }

    #[test]
    fn negative_beta_rejected() {
        assert!(pauli_z().thermal_state(-0.5).is_err());
    }

    #[test]
    fn thermal_state_commutes_with_hamiltonian() {
        let h = HermitianOperator::hermitized(CMatrix::from_fn(6, 6, |i, j| {
            C64::new(((i + 2 * j) % 5) as f64, (i as f64 - j as f64) * 0.3)
        }))
        .unwrap();
        let rho = h.thermal_state(0.7).unwrap().density_matrix();
        let c = commutator(h.entries(), &rho).unwrap();
        assert!(frobenius_norm(&c) <= 1e-10 * h.frobenius_norm());
    }

    #[test]
    fn eigenstate_has_zero_variance() {
        let d = pauli_z();
        let up = QuantumState::pure(CVector::from_vec(vec![C64::new(1.0, 0.0), C64::new(0.0, 0.0)]))
            .unwrap();
        let (mean, var) = up.expectation_and_variance(&d).unwrap();
        assert!((mean - 1.0).abs() < 1e-15);
        assert_eq!(var, 0.0);
    }

    #[test]
    fn superposition_variance_of_sz_is_one() {
        let s = 1.0 / 2.0f64.sqrt();
        let psi = QuantumState::pure(CVector::from_vec(vec![C64::new(s, 0.0), C64::new(s, 0.0)]))
            .unwrap();
        let (mean, var) = psi.expectation_and_variance(&pauli_z()).unwrap();
        assert!(mean.abs() < 1e-15);
        assert!((var - 1.0).abs() < 1e-15);
    }

    #[test]
    fn density_validation() {
        // valid: maximally mixed
        assert!(QuantumState::density(CMatrix::identity(2, 2) * C64::new(0.5, 0.0)).is_ok());
        // invalid trace
        assert!(QuantumState::density(CMatrix::identity(2, 2)).is_err());
        // negative eigenvalue
        let m = CMatrix::from_row_slice(
            2,
            2,
            &[C64::new(1.1, 0.0), C64::new(0.0, 0.0), C64::new(0.0, 0.0), C64::new(-0.1, 0.0)],
        );
        assert!(QuantumState::density(m).is_err());
    }

    #[test]
    fn pure_norm_enforced() {
        let v = CVector::from_vec(vec![C64::new(0.9, 0.0), C64::new(0.0, 0.0)]);
        assert!(QuantumState::pure(v.clone()).is_err());
        assert!(QuantumState::pure_normalized(v).is_ok());
    }
}
