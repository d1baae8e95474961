//! Finite matrix groups acting on the Grassmannian.
//!
//! Vectors are rows and the action is right multiplication, so a group
//! element sends a subspace basis `U` to the canonical form of `U * A`.
//! Groups are given by generators; [`MatrixGroup::closure`] enumerates the
//! generated subgroup by breadth-first products (every element of GL(n, q)
//! has finite order, so products of generators already reach the inverses).

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::gf::{FieldElement, FieldSpec};
use crate::grassmann::{enumerate_subspaces, Subspace};
use crate::mat;
use crate::poly::{canonical_irreducible, Poly};
use crate::{Error, Result};

/// An invertible n by n matrix over GF(q).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupElement {
    spec: Arc<FieldSpec>,
    n: usize,
    mat: Vec<Vec<FieldElement>>,
}

impl GroupElement {
    /// Validates shape and invertibility.
    pub fn new(spec: &Arc<FieldSpec>, rows: &[Vec<FieldElement>]) -> Result<GroupElement> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch);
        }
        if rows
            .iter()
            .any(|r| r.iter().any(|x| !x.spec().same_field(spec)))
        {
            return Err(Error::SpecMismatch);
        }
        let mat = rows.to_vec();
        if mat::rank(&mat) != n {
            return Err(Error::NotInvertible);
        }
        Ok(GroupElement { spec: Arc::clone(spec), n, mat })
    }

    /// Matrix entries given as element indexes in `[0, q)`.
    pub fn from_index_rows(spec: &Arc<FieldSpec>, rows: &[Vec<u64>]) -> Result<GroupElement> {
        let rows: Vec<Vec<FieldElement>> = rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&i| {
                        if i < spec.q() {
                            Ok(spec.element_from_index(i))
                        } else {
                            Err(Error::BadParameters("matrix entry is not an element index"))
                        }
                    })
                    .collect()
            })
            .collect::<Result<_>>()?;
        GroupElement::new(spec, &rows)
    }

    pub fn identity(spec: &Arc<FieldSpec>, n: usize) -> GroupElement {
        GroupElement { spec: Arc::clone(spec), n, mat: mat::identity(spec, n) }
    }

    pub fn spec(&self) -> &Arc<FieldSpec> {
        &self.spec
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> &[Vec<FieldElement>] {
        &self.mat
    }

    pub fn is_identity(&self) -> bool {
        mat::is_identity(&self.mat)
    }

    pub fn checked_mul(&self, other: &GroupElement) -> Result<GroupElement> {
        if self.n != other.n || !self.spec.same_field(&other.spec) {
            return Err(Error::DimensionMismatch);
        }
        Ok(GroupElement {
            spec: Arc::clone(&self.spec),
            n: self.n,
            mat: mat::mat_mul(&self.mat, &other.mat),
        })
    }

    pub fn inverse(&self) -> GroupElement {
        let inv = mat::inverse(&self.mat).expect("group elements are invertible");
        GroupElement { spec: Arc::clone(&self.spec), n: self.n, mat: inv }
    }

    pub fn pow(&self, e: u64) -> GroupElement {
        let mut acc = GroupElement::identity(&self.spec, self.n);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Multiplicative order, by repeated multiplication.
    pub fn order(&self) -> u64 {
        let mut acc = self.clone();
        let mut e = 1;
        while !acc.is_identity() {
            acc = &acc * self;
            e += 1;
        }
        e
    }

    /// Parse the same `;`/whitespace serialization `Display` produces.
    pub fn parse(spec: &Arc<FieldSpec>, s: &str) -> Result<GroupElement> {
        let rows: Vec<Vec<FieldElement>> = s
            .trim()
            .split(';')
            .map(|row| {
                row.split_whitespace()
                    .map(|tok| spec.parse_element(tok))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        GroupElement::new(spec, &rows)
    }
}

impl core::ops::Mul for &GroupElement {
    type Output = GroupElement;
    fn mul(self, rhs: &GroupElement) -> GroupElement {
        self.checked_mul(rhs).expect("group elements of matching dimension")
    }
}

impl PartialOrd for GroupElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GroupElement {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.n, &self.mat).cmp(&(other.n, &other.mat))
    }
}

impl fmt::Display for GroupElement {
    /// Same row serialization as subspaces: rows `;`-separated, element
    /// tokens space-separated, row-major.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.mat.iter().enumerate() {
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

/// A subgroup of GL(n, q) given by generators, with an optional enumerated
/// element list after closure.
#[derive(Debug, Clone)]
pub struct MatrixGroup {
    spec: Arc<FieldSpec>,
    n: usize,
    generators: Vec<GroupElement>,
    elements: Option<Vec<GroupElement>>,
}

impl MatrixGroup {
    pub fn from_generators(generators: Vec<GroupElement>) -> Result<MatrixGroup> {
        let Some(first) = generators.first() else {
            return Err(Error::BadParameters("generator list must be nonempty"));
        };
        let (spec, n) = (Arc::clone(&first.spec), first.n);
        if generators
            .iter()
            .any(|g| g.n != n || !g.spec.same_field(&spec))
        {
            return Err(Error::DimensionMismatch);
        }
        Ok(MatrixGroup { spec, n, generators, elements: None })
    }

    /// The trivial group in GL(n, q).
    pub fn trivial(spec: &Arc<FieldSpec>, n: usize) -> MatrixGroup {
        let id = GroupElement::identity(spec, n);
        MatrixGroup {
            spec: Arc::clone(spec),
            n,
            generators: vec![id.clone()],
            elements: Some(vec![id]),
        }
    }

    pub fn spec(&self) -> &Arc<FieldSpec> {
        &self.spec
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[GroupElement] {
        &self.generators
    }

    pub fn is_closed(&self) -> bool {
        self.elements.is_some()
    }

    /// Elements after closure, sorted by the matrix encoding.
    pub fn elements(&self) -> Result<&[GroupElement]> {
        self.elements.as_deref().ok_or(Error::GroupNotClosed)
    }

    pub fn order(&self) -> Result<usize> {
        Ok(self.elements()?.len())
    }

    /// Enumerate the generated subgroup by breadth-first multiplication,
    /// failing once more than `cap` elements appear.
    pub fn closure(mut self, cap: u64) -> Result<MatrixGroup> {
        use alloc::collections::BTreeSet;
        let mut seen: BTreeSet<GroupElement> = BTreeSet::new();
        let mut frontier = vec![GroupElement::identity(&self.spec, self.n)];
        seen.insert(frontier[0].clone());
        while let Some(u) = frontier.pop() {
            for g in &self.generators {
                let v = &u * g;
                if seen.len() as u64 >= cap && !seen.contains(&v) {
                    return Err(Error::CapExceeded { what: "group closure", cap });
                }
                if seen.insert(v.clone()) {
                    frontier.push(v);
                }
            }
        }
        self.elements = Some(seen.into_iter().collect());
        Ok(self)
    }
}

/// Closure of a generator list: the generated subgroup with its elements
/// enumerated and sorted deterministically.
pub fn group_closure(generators: &[GroupElement], cap: u64) -> Result<MatrixGroup> {
    MatrixGroup::from_generators(generators.to_vec())?.closure(cap)
}

/// The matrix of multiplication by the canonical generator of
/// GF(q^ext_n) over GF(q) (q = p^base_m), in the power basis: the
/// companion matrix of the canonical degree-ext_n irreducible over GF(q).
///
/// For `ext_n = 1` the companion convention degenerates, so the matrix is
/// multiplication by the least primitive element of GF(q).
pub fn singer_matrix(p: u64, base_m: usize, ext_n: usize) -> Result<GroupElement> {
    let base = FieldSpec::new(p, base_m)?;
    if ext_n == 0 {
        return Err(Error::BadParameters("extension degree must be >= 1"));
    }
    if ext_n == 1 {
        let g = base.primitive_element();
        return GroupElement::new(&base, &[vec![g]]);
    }
    // Guard the implied field GF(q^ext_n) against the same construction cap.
    FieldSpec::with_cap(p, base_m * ext_n, crate::DEFAULT_FIELD_CAP)?;
    let modulus = canonical_irreducible(&base, ext_n)?;
    companion_matrix(&modulus)
}

/// Companion matrix (row convention) of a monic polynomial: row i is the
/// image of basis element alpha^i under multiplication by alpha.
pub fn companion_matrix(modulus: &Poly) -> Result<GroupElement> {
    let spec = modulus.spec();
    let Some(deg) = modulus.degree() else {
        return Err(Error::BadParameters("modulus must be nonzero"));
    };
    if deg < 1 || !modulus.is_monic() {
        return Err(Error::BadParameters("modulus must be monic of degree >= 1"));
    }
    let mut rows = vec![vec![spec.zero(); deg]; deg];
    for i in 0..deg - 1 {
        rows[i][i + 1] = spec.one();
    }
    for j in 0..deg {
        rows[deg - 1][j] = modulus.coeffs()[j].neg();
    }
    GroupElement::new(spec, &rows)
}

/// Matrix of the degree-`deg` symmetric power of a 2x2 element, acting on
/// the right of Veronese coordinate rows in the monomial basis
/// `x0^deg, x0^(deg-1) x1, ..., x1^deg`: if `ver(v)` is the coordinate row
/// `(a^deg, a^(deg-1) b, ..., b^deg)` of `v = (a, b)`, then
/// `ver(v g) = ver(v) * sym(g)`. Multiplicative: `sym(g h) = sym(g) sym(h)`.
pub fn sym_power_rep(g: &GroupElement, deg: usize) -> Result<GroupElement> {
    if g.n != 2 {
        return Err(Error::WrongDimension);
    }
    if deg == 0 {
        return Err(Error::BadParameters("symmetric power degree must be >= 1"));
    }
    let spec = &g.spec;
    // v g = (g00 a + g10 b, g01 a + g11 b), so column f of the matrix is the
    // expansion of (g00 a + g10 b)^(deg-f) (g01 a + g11 b)^f in the
    // monomials a^(deg-e) b^e. Forms are coefficient vectors over the
    // b-power.
    let first = vec![g.mat[0][0].clone(), g.mat[1][0].clone()];
    let second = vec![g.mat[0][1].clone(), g.mat[1][1].clone()];
    let mul_forms = |a: &[FieldElement], b: &[FieldElement]| -> Vec<FieldElement> {
        let mut out = vec![spec.zero(); a.len() + b.len() - 1];
        for (i, ai) in a.iter().enumerate() {
            for (j, bj) in b.iter().enumerate() {
                out[i + j] = &out[i + j] + &(ai * bj);
            }
        }
        out
    };
    let mut rows = vec![vec![spec.zero(); deg + 1]; deg + 1];
    for f in 0..=deg {
        let mut form = vec![spec.one()];
        for _ in 0..deg - f {
            form = mul_forms(&form, &first);
        }
        for _ in 0..f {
            form = mul_forms(&form, &second);
        }
        debug_assert_eq!(form.len(), deg + 1);
        for (e, c) in form.into_iter().enumerate() {
            rows[e][f] = c;
        }
    }
    GroupElement::new(spec, &rows)
}

/// Right action of a group element on a subspace: the canonical form of
/// `basis(U) * A`. Dimension is preserved.
pub fn act(u: &Subspace, g: &GroupElement) -> Result<Subspace> {
    if u.n() != g.n || !u.spec().same_field(&g.spec) {
        return Err(Error::DimensionMismatch);
    }
    if u.k() == 0 {
        return Ok(u.clone());
    }
    let moved = mat::mat_mul(&u.basis().to_vec(), &g.mat);
    let image = Subspace::from_generators(u.spec(), u.n(), &moved)?;
    debug_assert_eq!(image.k(), u.k());
    Ok(image)
}

/// The orbit of a subspace under a closed group, sorted and deduplicated.
pub fn orbit(u: &Subspace, group: &MatrixGroup) -> Result<Vec<Subspace>> {
    use alloc::collections::BTreeSet;
    let elements = group.elements()?;
    let mut out = BTreeSet::new();
    for g in elements {
        out.insert(act(u, g)?);
    }
    Ok(out.into_iter().collect())
}

/// All k-subspaces fixed (setwise) by every generator, equivalently by the
/// whole generated group. Sorted canonically.
pub fn invariant_subspaces(group: &MatrixGroup, k: usize, cap: u64) -> Result<Vec<Subspace>> {
    let mut out = Vec::new();
    for u in enumerate_subspaces(group.spec(), group.n, k, cap)? {
        let mut fixed = true;
        for g in &group.generators {
            if act(&u, g)? != u {
                fixed = false;
                break;
            }
        }
        if fixed {
            out.push(u);
        }
    }
    out.sort();
    Ok(out)
}

/// Witnesses for the relations `x^r = y^m = z^w = xyz = 1`.
#[derive(Debug, Clone)]
pub struct TrianglePresentation {
    pub r: u64,
    pub m: u64,
    pub w: u64,
    pub x: GroupElement,
    pub y: GroupElement,
    pub z: GroupElement,
}

/// Check all four triangle relations as matrix identities.
pub fn check_triangle_relations(t: &TrianglePresentation) -> Result<bool> {
    let n = t.x.n;
    if t.y.n != n || t.z.n != n
        || !t.x.spec.same_field(&t.y.spec)
        || !t.x.spec.same_field(&t.z.spec)
    {
        return Err(Error::DimensionMismatch);
    }
    let xyz = &(&t.x * &t.y) * &t.z;
    Ok(t.x.pow(t.r).is_identity()
        && t.y.pow(t.m).is_identity()
        && t.z.pow(t.w).is_identity()
        && xyz.is_identity())
}

/// Parse one matrix per line in the `Display` serialization; blank lines are
/// skipped.
pub fn parse_generator_file(spec: &Arc<FieldSpec>, text: &str) -> Result<Vec<GroupElement>> {
    let mut out = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        out.push(GroupElement::parse(spec, line)?);
    }
    if out.is_empty() {
        return Err(Error::BadParameters("generator file holds no matrices"));
    }
    Ok(out)
}

/// Builtin dihedral subgroup of GL(2, q) of order 2m: the first
/// rotation/reflection pair, in the matrix encoding order, satisfying
/// `r^m = s^2 = 1` and `s^{-1} r s = r^{-1}` with `s` outside `<r>`.
///
/// Not every order-m element is conjugate to its inverse (for example
/// diag(2, 1) in GL(2, 5)), so the search walks rotations until one pairs
/// with an involution.
pub fn dihedral_generators(spec: &Arc<FieldSpec>, m: u64) -> Result<Vec<GroupElement>> {
    if m < 2 {
        return Err(Error::BadParameters("dihedral order parameter must be >= 2"));
    }
    let q = spec.q();
    if q > 16 {
        return Err(Error::CapExceeded { what: "dihedral generator search in GL(2, q)", cap: 16 });
    }
    let matrices: Vec<GroupElement> = (0..q * q * q * q)
        .filter_map(|code| {
            let entries = [
                code / (q * q * q),
                code / (q * q) % q,
                code / q % q,
                code % q,
            ];
            let rows = vec![
                vec![
                    spec.element_from_index(entries[0]),
                    spec.element_from_index(entries[1]),
                ],
                vec![
                    spec.element_from_index(entries[2]),
                    spec.element_from_index(entries[3]),
                ],
            ];
            GroupElement::new(spec, &rows).ok()
        })
        .collect();
    for rotation in matrices.iter().filter(|g| g.order() == m) {
        let rot_inv = rotation.inverse();
        let reflection = matrices.iter().find(|s| {
            s.order() == 2 && *s != rotation && (&(&s.inverse() * rotation) * *s) == rot_inv
        });
        if let Some(s) = reflection {
            return Ok(vec![rotation.clone(), s.clone()]);
        }
    }
    Err(Error::BadParameters("GL(2, q) holds no dihedral group of order 2m"))
}
