//! The Grassmannian of k-dimensional subspaces of F_q^n.
//!
//! A [`Subspace`] is stored as its reduced row echelon basis, which is a
//! canonical form: two subspaces are equal iff their RREF matrices are
//! identical. Enumeration walks pivot-column sets in colexicographic order
//! and fills the free entries in odometer order, so the stream order is
//! deterministic and the count equals the Gaussian binomial.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::gf::{FieldElement, FieldSpec};
use crate::mat;
use crate::{Error, Result};

/// A k-dimensional subspace of F_q^n in canonical (RREF) form.
///
/// The zero subspace (k = 0) is a first-class value with an empty basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    spec: Arc<FieldSpec>,
    n: usize,
    basis: Vec<Vec<FieldElement>>,
}

impl Subspace {
    /// Canonicalize the row space of the given generators. Zero rows are
    /// fine; all-zero input yields the zero subspace.
    pub fn from_generators(
        spec: &Arc<FieldSpec>,
        n: usize,
        rows: &[Vec<FieldElement>],
    ) -> Result<Subspace> {
        for row in rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch);
            }
            if row.iter().any(|x| !x.spec().same_field(spec)) {
                return Err(Error::SpecMismatch);
            }
        }
        let mut basis = rows.to_vec();
        mat::rref(&mut basis);
        Ok(Subspace { spec: Arc::clone(spec), n, basis })
    }

    /// Row vectors given as element indexes in `[0, q)`; for prime fields
    /// the index is the residue itself.
    pub fn from_index_rows(spec: &Arc<FieldSpec>, n: usize, rows: &[Vec<u64>]) -> Result<Subspace> {
        let rows: Vec<Vec<FieldElement>> = rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&i| {
                        if i < spec.q() {
                            Ok(spec.element_from_index(i))
                        } else {
                            Err(Error::BadParameters("vector entry is not an element index"))
                        }
                    })
                    .collect()
            })
            .collect::<Result<_>>()?;
        Subspace::from_generators(spec, n, &rows)
    }

    /// The zero subspace of F_q^n.
    pub fn zero(spec: &Arc<FieldSpec>, n: usize) -> Subspace {
        Subspace { spec: Arc::clone(spec), n, basis: Vec::new() }
    }

    /// The full space F_q^n.
    pub fn full(spec: &Arc<FieldSpec>, n: usize) -> Subspace {
        Subspace { spec: Arc::clone(spec), n, basis: mat::identity(spec, n) }
    }

    pub fn spec(&self) -> &Arc<FieldSpec> {
        &self.spec
    }

    /// Ambient dimension.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Subspace dimension.
    pub fn k(&self) -> usize {
        self.basis.len()
    }

    /// Canonical RREF basis rows.
    pub fn basis(&self) -> &[Vec<FieldElement>] {
        &self.basis
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.n == other.n && self.spec.same_field(&other.spec) {
            Ok(())
        } else {
            Err(Error::AmbientMismatch)
        }
    }

    /// Whether `other` is contained in `self`.
    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(other.basis.iter().all(|v| self.contains_vector(v)))
    }

    fn contains_vector(&self, v: &[FieldElement]) -> bool {
        // Reduce v against the RREF basis and test for zero.
        let mut v = v.to_vec();
        for row in &self.basis {
            let pivot = row
                .iter()
                .position(|x| !x.is_zero())
                .expect("canonical basis has no zero rows");
            let c = v[pivot].clone();
            if !c.is_zero() {
                for (vi, ri) in v.iter_mut().zip(row) {
                    *vi = &*vi - &(&c * ri);
                }
            }
        }
        v.iter().all(FieldElement::is_zero)
    }

    /// Canonical intersection.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        if self.k() == 0 || other.k() == 0 {
            return Ok(Subspace::zero(&self.spec, self.n));
        }
        // Left-kernel of the stacked matrix [self; other]: coefficients
        // (x, y) with x*self + y*other = 0 give intersection vectors x*self.
        let stacked: Vec<Vec<FieldElement>> = self
            .basis
            .iter()
            .chain(&other.basis)
            .cloned()
            .collect();
        let kernel = mat::left_kernel(&stacked);
        let vectors: Vec<Vec<FieldElement>> = kernel
            .iter()
            .map(|coeff| {
                (0..self.n)
                    .map(|j| {
                        let mut acc = self.spec.zero();
                        for (i, row) in self.basis.iter().enumerate() {
                            acc = &acc + &(&coeff[i] * &row[j]);
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        Subspace::from_generators(&self.spec, self.n, &vectors)
    }

    /// Canonical sum U + V.
    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let stacked: Vec<Vec<FieldElement>> = self
            .basis
            .iter()
            .chain(&other.basis)
            .cloned()
            .collect();
        Subspace::from_generators(&self.spec, self.n, &stacked)
    }

    /// Subspace distance `dim U + dim V - 2 dim(U meet V)`.
    pub fn distance(&self, other: &Subspace) -> Result<usize> {
        self.check_ambient(other)?;
        let sum_dim = self.sum(other)?.k();
        let meet_dim = self.k() + other.k() - sum_dim;
        Ok(self.k() + other.k() - 2 * meet_dim)
    }

    /// Parse the `;`-separated row serialization produced by `Display`.
    /// The zero subspace is the single token `-`.
    pub fn parse(spec: &Arc<FieldSpec>, n: usize, s: &str) -> Result<Subspace> {
        let s = s.trim();
        if s == "-" {
            return Ok(Subspace::zero(spec, n));
        }
        let rows: Vec<Vec<FieldElement>> = s
            .split(';')
            .map(|row| {
                row.split_whitespace()
                    .map(|tok| spec.parse_element(tok))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        Subspace::from_generators(spec, n, &rows)
    }
}

impl PartialOrd for Subspace {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Subspace {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.n, self.k(), &self.basis).cmp(&(other.n, other.k(), &other.basis))
    }
}

impl fmt::Display for Subspace {
    /// Rows separated by `;`, element tokens separated by single spaces,
    /// e.g. `1,0 0,1;0,0 1,1` over GF(4). The zero subspace renders as `-`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.basis.is_empty() {
            return f.write_str("-");
        }
        for (i, row) in self.basis.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{x}")?;
            }
        }
        Ok(())
    }
}

/// Gaussian binomial: the number of k-dimensional subspaces of F_q^n,
/// `prod_{i=0}^{k-1} (q^{n-i} - 1)/(q^{k-i} - 1)`. Zero when `k < 0` or
/// `k > n`.
pub fn gaussian_binomial(n: i64, k: i64, q: u64) -> BigUint {
    if k < 0 || k > n {
        return BigUint::zero();
    }
    let (n, k) = (n as u64, k as u64);
    let q = BigUint::from(q);
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..k {
        num *= q.pow((n - i) as u32) - BigUint::one();
        den *= q.pow((k - i) as u32) - BigUint::one();
    }
    debug_assert!((&num % &den).is_zero());
    num / den
}

/// Deterministic stream over all k-subspaces of F_q^n.
///
/// Pivot-column sets are visited in colexicographic order; for each set the
/// free entries run through GF(q) in odometer order (last free position
/// fastest). Every subspace produced is already in RREF.
pub struct GrassmannianIter {
    spec: Arc<FieldSpec>,
    n: usize,
    k: usize,
    pivot_sets: Vec<Vec<usize>>,
    set_idx: usize,
    /// (row, col) of each free entry for the current pivot set.
    free_pos: Vec<(usize, usize)>,
    /// Element indexes at the free positions; `None` before initialization.
    odometer: Option<Vec<u64>>,
}

/// All k-subsets of {0, ..., n-1} in colexicographic order.
fn subsets_colex(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = Vec::new();
    let mut current: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(current.clone());
        // Next subset in colex: increment the smallest position possible.
        let mut i = 0;
        loop {
            if i == k {
                return out;
            }
            let limit = if i + 1 < k { current[i + 1] } else { n };
            if current[i] + 1 < limit {
                current[i] += 1;
                for j in 0..i {
                    current[j] = j;
                }
                break;
            }
            i += 1;
        }
    }
}

/// Stream all k-subspaces of F_q^n; errors when the Grassmannian size
/// exceeds `cap`.
pub fn enumerate_subspaces(
    spec: &Arc<FieldSpec>,
    n: usize,
    k: usize,
    cap: u64,
) -> Result<GrassmannianIter> {
    let count = gaussian_binomial(n as i64, k as i64, spec.q());
    if count > BigUint::from(cap) {
        return Err(Error::CapExceeded { what: "Grassmannian enumeration", cap });
    }
    Ok(GrassmannianIter {
        spec: Arc::clone(spec),
        n,
        k,
        pivot_sets: subsets_colex(n, k),
        set_idx: 0,
        free_pos: Vec::new(),
        odometer: None,
    })
}

impl GrassmannianIter {
    fn load_pivot_set(&mut self) {
        let pivots = &self.pivot_sets[self.set_idx];
        self.free_pos.clear();
        for (row, &p) in pivots.iter().enumerate() {
            for col in p + 1..self.n {
                if !pivots.contains(&col) {
                    self.free_pos.push((row, col));
                }
            }
        }
        self.odometer = Some(vec![0; self.free_pos.len()]);
    }

    fn materialize(&self) -> Subspace {
        let pivots = &self.pivot_sets[self.set_idx];
        let odo = self.odometer.as_ref().unwrap();
        let mut basis = vec![vec![self.spec.zero(); self.n]; self.k];
        for (row, &p) in pivots.iter().enumerate() {
            basis[row][p] = self.spec.one();
        }
        for (&(row, col), &idx) in self.free_pos.iter().zip(odo) {
            basis[row][col] = self.spec.element_from_index(idx);
        }
        Subspace { spec: Arc::clone(&self.spec), n: self.n, basis }
    }

    /// Advance the odometer; false when the current pivot set is exhausted.
    fn bump(&mut self) -> bool {
        let odo = self.odometer.as_mut().unwrap();
        for d in odo.iter_mut().rev() {
            *d += 1;
            if *d < self.spec.q() {
                return true;
            }
            *d = 0;
        }
        false
    }
}

impl Iterator for GrassmannianIter {
    type Item = Subspace;

    fn next(&mut self) -> Option<Subspace> {
        if self.set_idx >= self.pivot_sets.len() {
            return None;
        }
        if self.odometer.is_none() {
            self.load_pivot_set();
        } else if !self.bump() {
            self.set_idx += 1;
            if self.set_idx >= self.pivot_sets.len() {
                return None;
            }
            self.load_pivot_set();
        }
        Some(self.materialize())
    }
}
