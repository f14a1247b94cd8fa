//! Generalized Pauli operators on d levels: the cyclic shift and clock
//! matrices, the d+1 commuting classes they generate, and the diagonal
//! transition/inversion operators.
//!
//! All index arithmetic is mod d, with explicit reduction. Class labels
//! run 0..=d: label 0 is the clock operator Z, label k >= 1 is X*Z^(k-1).
//! An off-by-one in this labeling corrupts every MUB table downstream,
//! so the generator order is fixed here and nowhere else.

use num_complex::Complex64;

use crate::error::Error;
use crate::linalg::{roots_of_unity, ComplexMatrix, MAX_DIM};
use crate::report::Check;
use crate::tol;
use crate::Result;

/// A dimension checked to be prime and within the supported range.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeDim(usize);

impl PrimeDim {
    pub fn new(d: usize) -> Result<Self> {
        if !(2..=MAX_DIM).contains(&d) {
            return Err(Error::DimensionOutOfRange(d));
        }
        if !is_prime(d) {
            return Err(Error::NotPrime(d));
        }
        Ok(Self(d))
    }

    pub fn get(self) -> usize {
        self.0
    }

    /// Every prime dimension in the supported range.
    pub fn all() -> Vec<PrimeDim> {
        (2..=MAX_DIM)
            .filter(|&d| is_prime(d))
            .map(PrimeDim)
            .collect()
    }
}

fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut k = 2;
    while k * k <= n {
        if n.is_multiple_of(k) {
            return false;
        }
        k += 1;
    }
    true
}

/// Clock operator: diag(1, w, ..., w^(d-1)).
pub fn clock(d: PrimeDim) -> ComplexMatrix {
    let omega = roots_of_unity(d.get());
    ComplexMatrix::diagonal(&omega)
}

/// Cyclic shift operator: |n> -> |n+1 mod d>.
pub fn shift(d: PrimeDim) -> ComplexMatrix {
    let n = d.get();
    let mut m = ComplexMatrix::zeros(n);
    for col in 0..n {
        m.set((col + 1) % n, col, Complex64::new(1.0, 0.0));
    }
    m
}

/// Generator of class `k`: the clock for k = 0, shift * clock^(k-1) for
/// k = 1..=d.
pub fn generator(d: PrimeDim, k: usize) -> Result<ComplexMatrix> {
    if k > d.get() {
        return Err(Error::IndexOutOfRange {
            index: k,
            bound: d.get() + 1,
        });
    }
    if k == 0 {
        return Ok(clock(d));
    }
    shift(d).mat_mul(&clock(d).pow(k - 1))
}

/// The d-1 commuting powers of one class generator.
#[derive(Debug, Clone)]
pub struct OperatorClass {
    label: usize,
    members: Vec<ComplexMatrix>,
}

impl OperatorClass {
    pub fn label(&self) -> usize {
        self.label
    }

    /// Members in power order: generator^1, ..., generator^(d-1).
    pub fn members(&self) -> &[ComplexMatrix] {
        &self.members
    }

    /// Largest commutator residual over all member pairs.
    pub fn commutation_residual(&self) -> f64 {
        let mut worst = 0.0f64;
        for a in &self.members {
            for b in &self.members {
                let ab = a.mat_mul(b).expect("same dimension");
                let ba = b.mat_mul(a).expect("same dimension");
                worst = worst.max(ab.max_abs_diff(&ba));
            }
        }
        worst
    }

    /// Largest trace modulus over all members.
    pub fn trace_residual(&self) -> f64 {
        self.members
            .iter()
            .map(|m| m.trace().norm())
            .fold(0.0, f64::max)
    }
}

/// Ordered powers 1..=d-1 of the class-k generator.
pub fn commuting_class(d: PrimeDim, k: usize) -> Result<OperatorClass> {
    let gen = generator(d, k)?;
    let mut members = Vec::with_capacity(d.get() - 1);
    let mut current = gen.clone();
    for _ in 1..d.get() {
        members.push(current.clone());
        current = current.mat_mul(&gen)?;
    }
    Ok(OperatorClass { label: k, members })
}

/// The d+1 class generators in canonical order: clock, shift,
/// shift*clock, ..., shift*clock^(d-1).
#[derive(Debug, Clone)]
pub struct MulticomplementarySet {
    dim: usize,
    operators: Vec<ComplexMatrix>,
}

impl MulticomplementarySet {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn operators(&self) -> &[ComplexMatrix] {
        &self.operators
    }

    pub fn generator(&self, k: usize) -> &ComplexMatrix {
        &self.operators[k]
    }

    pub fn len(&self) -> usize {
        self.operators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.operators.is_empty()
    }
}

pub fn multicomplementary_set(d: PrimeDim) -> MulticomplementarySet {
    let operators = (0..=d.get())
        .map(|k| generator(d, k).expect("k in range"))
        .collect();
    MulticomplementarySet {
        dim: d.get(),
        operators,
    }
}

/// Transition operator |i><j|.
pub fn transition(d: PrimeDim, i: usize, j: usize) -> Result<ComplexMatrix> {
    let n = d.get();
    if i >= n {
        return Err(Error::IndexOutOfRange { index: i, bound: n });
    }
    if j >= n {
        return Err(Error::IndexOutOfRange { index: j, bound: n });
    }
    let mut m = ComplexMatrix::zeros(n);
    m.set(i, j, Complex64::new(1.0, 0.0));
    Ok(m)
}

/// Population inversion between adjacent levels: +1 at (j, j), -1 at
/// (j+1, j+1). Valid for j in 0..=d-2.
pub fn inversion(d: PrimeDim, j: usize) -> Result<ComplexMatrix> {
    let n = d.get();
    if j + 1 >= n {
        return Err(Error::IndexOutOfRange {
            index: j,
            bound: n - 1,
        });
    }
    let mut m = ComplexMatrix::zeros(n);
    m.set(j, j, Complex64::new(1.0, 0.0));
    m.set(j + 1, j + 1, Complex64::new(-1.0, 0.0));
    Ok(m)
}

/// Diagonal weight of level `s` under inversion `j`: +1, -1, or 0.
pub fn inversion_weight(d: PrimeDim, j: usize, s: usize) -> f64 {
    debug_assert!(j + 1 < d.get() && s < d.get());
    if s == j {
        1.0
    } else if s == j + 1 {
        -1.0
    } else {
        0.0
    }
}

/// Residual of the Weyl commutation relation clock*shift = w*shift*clock.
pub fn weyl_check(d: PrimeDim) -> Check {
    let z = clock(d);
    let x = shift(d);
    let omega = roots_of_unity(d.get())[1 % d.get()];
    let zx = z.mat_mul(&x).expect("same dimension");
    let xz = x.mat_mul(&z).expect("same dimension").scale(omega);
    Check::new("weyl-relation", zx.max_abs_diff(&xz), tol::ALGEBRAIC)
}

/// How far a traceless diagonal matrix falls outside the span of the
/// d-1 inversion operators. Zero (to round-off) for every clock power.
pub fn inversion_span_residual(d: PrimeDim, m: &ComplexMatrix) -> f64 {
    let n = d.get();
    assert_eq!(m.dim(), n, "dimension mismatch");
    // Coefficients from partial sums of the diagonal: with basis vectors
    // e_j - e_{j+1}, coefficient j is sum of diagonal entries 0..=j.
    let mean = m.trace() / n as f64;
    let mut coeffs = Vec::with_capacity(n - 1);
    let mut acc = Complex64::new(0.0, 0.0);
    for j in 0..n - 1 {
        acc += m.get(j, j) - mean;
        coeffs.push(acc);
    }
    let mut rebuilt = ComplexMatrix::zeros(n);
    for (j, coeff) in coeffs.iter().enumerate() {
        let h = inversion(d, j).expect("j in range");
        rebuilt = rebuilt.add(&h.scale(*coeff)).expect("same dimension");
    }
    let mut off_diag = 0.0f64;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                off_diag = off_diag.max(m.get(i, j).norm());
            }
        }
    }
    let diag_shift = ComplexMatrix::identity(n).scale(mean);
    let target = m.sub(&diag_shift).expect("same dimension");
    rebuilt.max_abs_diff(&target).max(off_diag).max(mean.norm())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn p(d: usize) -> PrimeDim {
        PrimeDim::new(d).unwrap()
    }

    #[test]
    fn prime_gate() {
        assert!(PrimeDim::new(4).is_err());
        assert!(PrimeDim::new(1).is_err());
        assert!(PrimeDim::new(33).is_err());
        assert!(PrimeDim::new(37).is_err());
        assert_eq!(
            PrimeDim::all().iter().map(|d| d.get()).collect::<Vec<_>>(),
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31]
        );
    }

    #[test]
    fn clock_d2_is_sigma_z() {
        let z = clock(p(2));
        let expected = ComplexMatrix::diagonal(&[c(1.0, 0.0), c(-1.0, 0.0)]);
        assert_eq!(z.max_abs_diff(&expected), 0.0);
    }

    #[test]
    fn clock_d3_matches_roots() {
        let z = clock(p(3));
        let omega = roots_of_unity(3);
        for n in 0..3 {
            assert_eq!(z.get(n, n), omega[n]);
        }
    }

    #[test]
    fn clock_power_d_is_identity() {
        for d in [2usize, 3, 5, 7] {
            let z = clock(p(d));
            assert!(z.pow(d).max_abs_diff(&ComplexMatrix::identity(d)) < tol::ALGEBRAIC);
        }
    }

    #[test]
    fn shift_d2_is_sigma_x() {
        let x = shift(p(2));
        let expected = ComplexMatrix::from_rows(&[
            vec![c(0.0, 0.0), c(1.0, 0.0)],
            vec![c(1.0, 0.0), c(0.0, 0.0)],
        ]);
        assert_eq!(x.max_abs_diff(&expected), 0.0);
    }

    #[test]
    fn shift_d3_matches_cycle() {
        let x = shift(p(3));
        let expected = ComplexMatrix::from_rows(&[
            vec![c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)],
            vec![c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)],
            vec![c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0)],
        ]);
        assert_eq!(x.max_abs_diff(&expected), 0.0);
    }

    #[test]
    fn shift_power_d_is_identity() {
        for d in [2usize, 3, 5, 11] {
            let x = shift(p(d));
            assert!(x.pow(d).max_abs_diff(&ComplexMatrix::identity(d)) < tol::ALGEBRAIC);
        }
    }

    #[test]
    fn generator_labels() {
        let d = p(3);
        assert!(generator(d, 1).unwrap().max_abs_diff(&shift(d)) < tol::ALGEBRAIC);
        let xz2 = shift(d).mat_mul(&clock(d).pow(2)).unwrap();
        assert!(generator(d, 3).unwrap().max_abs_diff(&xz2) < tol::ALGEBRAIC);
        assert!(generator(d, 4).is_err());
    }

    #[test]
    fn generator_d2_label2() {
        // shift * clock = [[0, -1], [1, 0]]
        let g = generator(p(2), 2).unwrap();
        let expected = ComplexMatrix::from_rows(&[
            vec![c(0.0, 0.0), c(-1.0, 0.0)],
            vec![c(1.0, 0.0), c(0.0, 0.0)],
        ]);
        assert_eq!(g.max_abs_diff(&expected), 0.0);
    }

    #[test]
    fn class_d3_label0_is_clock_powers() {
        let class = commuting_class(p(3), 0).unwrap();
        assert_eq!(class.members().len(), 2);
        assert!(class.members()[0].max_abs_diff(&clock(p(3))) < tol::ALGEBRAIC);
        assert!(class.members()[1].max_abs_diff(&clock(p(3)).pow(2)) < tol::ALGEBRAIC);
    }

    #[test]
    fn class_d3_label2() {
        let class = commuting_class(p(3), 2).unwrap();
        let xz = generator(p(3), 2).unwrap();
        assert!(class.members()[0].max_abs_diff(&xz) < tol::ALGEBRAIC);
        assert!(class.members()[1].max_abs_diff(&xz.pow(2)) < tol::ALGEBRAIC);
    }

    #[test]
    fn class_d2_single_member() {
        let class = commuting_class(p(2), 1).unwrap();
        assert_eq!(class.members().len(), 1);
        assert!(class.members()[0].max_abs_diff(&shift(p(2))) < tol::ALGEBRAIC);
    }

    #[test]
    fn class_members_are_generator_powers() {
        for d in [3usize, 5] {
            for k in 0..=d {
                let class = commuting_class(p(d), k).unwrap();
                let gen = generator(p(d), k).unwrap();
                for (j, member) in class.members().iter().enumerate() {
                    assert!(member.max_abs_diff(&gen.pow(j + 1)) < tol::ALGEBRAIC);
                }
            }
        }
    }

    #[test]
    fn classes_commute_all_primes() {
        for d in PrimeDim::all() {
            for k in 0..=d.get() {
                let class = commuting_class(d, k).unwrap();
                assert!(
                    class.commutation_residual() < tol::ALGEBRAIC,
                    "d={} k={k}",
                    d.get()
                );
            }
        }
    }

    #[test]
    fn classes_traceless_and_unitary() {
        for d in [2usize, 3, 5, 7, 11] {
            for k in 0..=d {
                let class = commuting_class(p(d), k).unwrap();
                assert!(class.trace_residual() < tol::ALGEBRAIC, "d={d} k={k}");
                for member in class.members() {
                    assert!(member.unitarity_residual() < tol::ALGEBRAIC, "d={d} k={k}");
                }
            }
        }
    }

    #[test]
    fn classes_disjoint() {
        for d in [2usize, 3, 5, 7] {
            let classes: Vec<_> = (0..=d).map(|k| commuting_class(p(d), k).unwrap()).collect();
            for (ka, a) in classes.iter().enumerate() {
                for (kb, b) in classes.iter().enumerate() {
                    if ka == kb {
                        continue;
                    }
                    for ma in a.members() {
                        for mb in b.members() {
                            assert!(ma.max_abs_diff(mb) > 0.5, "d={d} {ka} vs {kb}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn set_sizes() {
        assert_eq!(multicomplementary_set(p(2)).len(), 3);
        assert_eq!(multicomplementary_set(p(3)).len(), 4);
        let s5 = multicomplementary_set(p(5));
        assert_eq!(s5.len(), 6);
        for op in s5.operators() {
            assert!(op.trace().norm() < tol::ALGEBRAIC);
            assert!(op.unitarity_residual() < tol::ALGEBRAIC);
        }
    }

    #[test]
    fn set_d3_order() {
        let d = p(3);
        let s = multicomplementary_set(d);
        assert!(s.generator(0).max_abs_diff(&clock(d)) < tol::ALGEBRAIC);
        assert!(s.generator(1).max_abs_diff(&shift(d)) < tol::ALGEBRAIC);
        let xz = shift(d).mat_mul(&clock(d)).unwrap();
        assert!(s.generator(2).max_abs_diff(&xz) < tol::ALGEBRAIC);
    }

    #[test]
    fn transition_product_rule() {
        let d = p(3);
        // |i><j| * |k><l| = delta_jk |i><l|
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    for l in 0..3 {
                        let prod = transition(d, i, j)
                            .unwrap()
                            .mat_mul(&transition(d, k, l).unwrap())
                            .unwrap();
                        let expected = if j == k {
                            transition(d, i, l).unwrap()
                        } else {
                            ComplexMatrix::zeros(3)
                        };
                        assert_eq!(prod.max_abs_diff(&expected), 0.0);
                    }
                }
            }
        }
        let p01 = transition(d, 0, 1).unwrap();
        let p10 = transition(d, 1, 0).unwrap();
        let diag = ComplexMatrix::diagonal(&[c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]);
        assert_eq!(p01.mat_mul(&p10).unwrap().max_abs_diff(&diag), 0.0);
        assert!(transition(d, 3, 0).is_err());
    }

    #[test]
    fn inversion_matrices() {
        let d = p(3);
        let h0 = inversion(d, 0).unwrap();
        let h1 = inversion(d, 1).unwrap();
        assert_eq!(
            h0.max_abs_diff(&ComplexMatrix::diagonal(&[
                c(1.0, 0.0),
                c(-1.0, 0.0),
                c(0.0, 0.0)
            ])),
            0.0
        );
        assert_eq!(
            h1.max_abs_diff(&ComplexMatrix::diagonal(&[
                c(0.0, 0.0),
                c(1.0, 0.0),
                c(-1.0, 0.0)
            ])),
            0.0
        );
        assert!(inversion(d, 2).is_err());
        // d=2 reduces to the clock operator
        assert_eq!(inversion(p(2), 0).unwrap().max_abs_diff(&clock(p(2))), 0.0);
    }

    #[test]
    fn weyl_residuals() {
        assert_eq!(weyl_check(p(2)).residual, 0.0);
        assert!(weyl_check(p(3)).passed);
        assert!(weyl_check(p(31)).passed);
    }

    #[test]
    fn clock_powers_lie_in_inversion_span() {
        for d in [2usize, 3, 5, 7] {
            let dim = p(d);
            for k in 1..d {
                let zk = clock(dim).pow(k);
                assert!(
                    inversion_span_residual(dim, &zk) < tol::ALGEBRAIC,
                    "d={d} k={k}"
                );
            }
        }
    }

    #[test]
    fn class_power_traces_vanish() {
        for d in [2usize, 3, 5, 7] {
            let dim = p(d);
            for k in 0..=d {
                let gen = generator(dim, k).unwrap();
                for m in 1..d {
                    assert!(
                        gen.pow(m).trace().norm() < tol::ALGEBRAIC,
                        "d={d} k={k} m={m}"
                    );
                }
            }
        }
    }
}
