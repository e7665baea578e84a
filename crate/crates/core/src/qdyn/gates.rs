//! Gate constructions: the NOT Hamiltonian, Toffoli and the involution recipe.

use nalgebra::DMatrix;
use num_complex::Complex;

use super::{cabs, real, to_f64, HamiltonianMatrix, Real, UnitaryMatrix};
use crate::error::{LimitsError, Result};

/// `(E1/2)·[[1, −1], [−1, 1]]`, eigenvalues 0 and `E1`. Flips `|0⟩ ↔ |1⟩` in
/// time `π/E1`.
pub fn not_hamiltonian<R: Real>(e1: R) -> Result<HamiltonianMatrix<R>> {
    if !(e1 > R::zero()) || !e1.is_finite() {
        return Err(LimitsError::Domain {
            quantity: "E1",
            requirement: "> 0",
            value: to_f64(e1),
        });
    }
    let h: R = e1 * real(0.5);
    let p = Complex::new(h, R::zero());
    HamiltonianMatrix::new(DMatrix::from_row_slice(2, 2, &[p, -p, -p, p]))
}

fn permutation<R: Real>(dim: usize, map: impl Fn(usize) -> usize) -> UnitaryMatrix<R> {
    let mut m = DMatrix::zeros(dim, dim);
    for i in 0..dim {
        m[(map(i), i)] = Complex::new(R::one(), R::zero());
    }
    UnitaryMatrix::new(m).expect("permutation matrices are unitary")
}

/// Toffoli on basis index `4X + 2Y + Z`: `Z ← Z ⊕ (X ∧ Y)`.
pub fn toffoli_unitary<R: Real>() -> UnitaryMatrix<R> {
    permutation(8, |i| if i & 0b110 == 0b110 { i ^ 1 } else { i })
}

/// Controlled NOT on index `2·control + target`.
pub fn cnot_unitary<R: Real>() -> UnitaryMatrix<R> {
    permutation(4, |i| if i & 0b10 != 0 { i ^ 1 } else { i })
}

/// `H = π/(2Δt)·(I − U)` for a Hermitian involution `U`; `e^{−iHΔt} = U`.
pub fn hamiltonian_for_involution<R: Real>(u: &UnitaryMatrix<R>, dt: R) -> Result<HamiltonianMatrix<R>> {
    if !(dt > R::zero()) || !dt.is_finite() {
        return Err(LimitsError::Domain {
            quantity: "dt",
            requirement: "> 0",
            value: to_f64(dt),
        });
    }
    let m = u.entries();
    let n = m.nrows();
    let id = DMatrix::<Complex<R>>::identity(n, n);
    let max_abs = |d: DMatrix<Complex<R>>| d.iter().fold(R::zero(), |a, z| a.max(cabs(z)));
    let tol = 1e-10;
    if to_f64(max_abs(m - m.adjoint())) > tol || to_f64(max_abs(m * m - &id)) > tol {
        return Err(LimitsError::InvalidArgument(
            "unitary is not a Hermitian involution (U = U†, U² = I)".into(),
        ));
    }
    let scale: R = R::pi() / (real::<R>(2.0) * dt);
    HamiltonianMatrix::new((id - m).scale(scale))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruthRow {
    pub gate: &'static str,
    pub inputs: Vec<u8>,
    pub expected: Vec<u8>,
    pub actual: Option<Vec<u8>>,
}

impl TruthRow {
    pub fn ok(&self) -> bool {
        self.actual.as_ref() == Some(&self.expected)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddingReport {
    pub and: bool,
    pub not: bool,
    pub fanout: bool,
    pub rows: Vec<TruthRow>,
}

impl EmbeddingReport {
    pub fn all_pass(&self) -> bool {
        self.and && self.not && self.fanout
    }
}

fn bits(i: usize) -> [u8; 3] {
    [(i >> 2 & 1) as u8, (i >> 1 & 1) as u8, (i & 1) as u8]
}

/// Checks AND, NOT and FANOUT through Toffoli on exact basis states.
///
/// AND: `Z = 0`, output `Z = X ∧ Y`. NOT: `X = Y = 1`, output `Z = ¬Z`.
/// FANOUT: `Y = 1, Z = 0`, output `Z = X` (alongside `X`).
pub fn boolean_embeddings_check() -> EmbeddingReport {
    let u = toffoli_unitary::<f64>();
    let run = |x: u8, y: u8, z: u8| u.basis_image(4 * x as usize + 2 * y as usize + z as usize).map(bits);
    let mut rows = Vec::new();
    for x in 0..2u8 {
        for y in 0..2u8 {
            let out = run(x, y, 0);
            rows.push(TruthRow {
                gate: "AND",
                inputs: vec![x, y],
                expected: vec![x & y],
                actual: out.map(|o| vec![o[2]]),
            });
        }
    }
    for z in 0..2u8 {
        let out = run(1, 1, z);
        rows.push(TruthRow {
            gate: "NOT",
            inputs: vec![z],
            expected: vec![1 - z],
            actual: out.map(|o| vec![o[2]]),
        });
    }
    for x in 0..2u8 {
        let out = run(x, 1, 0);
        rows.push(TruthRow {
            gate: "FANOUT",
            inputs: vec![x],
            expected: vec![x, x],
            actual: out.map(|o| vec![o[0], o[2]]),
        });
    }
    let pass = |g: &str| rows.iter().filter(|r| r.gate == g).all(TruthRow::ok);
    EmbeddingReport {
        and: pass("AND"),
        not: pass("NOT"),
        fanout: pass("FANOUT"),
        rows,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qdyn::{evolve, StateVector};
    use std::f64::consts::PI;

    #[test]
    fn not_hamiltonian_spectrum_and_flip() {
        let h = not_hamiltonian(2.0f64).unwrap();
        let s = h.spectrum();
        assert!(s.energies[0].abs() < 1e-14 && (s.energies[1] - 2.0).abs() < 1e-14);
        let out = evolve(&h, &StateVector::basis(2, 0).unwrap(), PI / 2.0).unwrap();
        assert!((out.amplitudes()[1].norm() - 1.0).abs() < 1e-12);
        assert!(not_hamiltonian(0.0f64).is_err());
    }

    #[test]
    fn toffoli_truth_table() {
        let u = toffoli_unitary::<f64>();
        let expect = [0, 1, 2, 3, 4, 5, 7, 6];
        for (i, &j) in expect.iter().enumerate() {
            assert_eq!(u.basis_image(i), Some(j));
        }
        let rep = boolean_embeddings_check();
        assert!(rep.all_pass(), "{rep:?}");
        assert_eq!(rep.rows.len(), 8);
    }

    #[test]
    fn involution_recipe_reproduces_gate() {
        let u = toffoli_unitary::<f64>();
        let dt = 0.7;
        let h = hamiltonian_for_involution(&u, dt).unwrap();
        for i in 0..8 {
            let out = evolve(&h, &StateVector::basis(8, i).unwrap(), dt).unwrap();
            let want = u.basis_image(i).unwrap();
            assert!((out.amplitudes()[want].norm() - 1.0).abs() < 1e-10);
        }
        let c = cnot_unitary::<f64>();
        let hc = hamiltonian_for_involution(&c, 1.0).unwrap();
        let out = evolve(&hc, &StateVector::basis(4, 3).unwrap(), 1.0).unwrap();
        assert!((out.amplitudes()[2].norm() - 1.0).abs() < 1e-10);
    }

    #[test]
    fn involution_rejects_non_involutions() {
        let i = Complex::new(0.0, 1.0);
        let z = Complex::new(0.0, 0.0);
        let s = UnitaryMatrix::new(DMatrix::from_row_slice(2, 2, &[Complex::new(1.0, 0.0), z, z, i])).unwrap();
        assert!(hamiltonian_for_involution(&s, 1.0).is_err());
        assert!(hamiltonian_for_involution(&cnot_unitary::<f64>(), 0.0).is_err());
    }
}
