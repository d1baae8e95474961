//! Finite fields GF(p^m) with exact polynomial-basis arithmetic.
//!
//! A field is described by a [`FieldSpec`]: characteristic `p`, extension
//! degree `m`, and the canonical modulus: the monic irreducible of degree
//! `m` over GF(p) whose coefficient tuple `(c_0, ..., c_{m-1})` is
//! lexicographically least. Two specs with equal `(p, m)` are therefore
//! identical, and every element has exactly one representation: a coordinate
//! vector in the basis `1, x, ..., x^{m-1}`.
//!
//! Elements are ordered lexicographically by their coefficient tuples; that
//! order is what "least element", enumeration order, and
//! [`FieldSpec::primitive_element`] refer to throughout the crate.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::fmt::Write as _;

use crate::{Error, Result, DEFAULT_FIELD_CAP};

/// Description of a finite field GF(p^m).
///
/// Construct via [`FieldSpec::new`] (or [`FieldSpec::with_cap`]) and share
/// as `Arc<FieldSpec>`; elements keep a handle to their spec.
#[derive(Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct FieldSpec {
    p: u64,
    m: usize,
    q: u64,
    /// Monic irreducible of degree `m` over GF(p), ascending coefficients,
    /// length `m + 1`. For `m = 1` the sentinel `x` (no reduction needed).
    modulus: Vec<u64>,
}

/// An element of GF(p^m): `m` coordinates in the basis `1, x, ..., x^{m-1}`.
#[derive(Debug, Clone)]
pub struct FieldElement {
    spec: Arc<FieldSpec>,
    coeffs: Vec<u64>,
}

impl FieldSpec {
    /// Build the canonical GF(p^m) under the default size cap.
    pub fn new(p: u64, m: usize) -> Result<Arc<FieldSpec>> {
        Self::with_cap(p, m, DEFAULT_FIELD_CAP)
    }

    /// Build the canonical GF(p^m), requiring `p^m <= cap`.
    pub fn with_cap(p: u64, m: usize, cap: u64) -> Result<Arc<FieldSpec>> {
        if m == 0 {
            return Err(Error::BadParameters("extension degree must be >= 1"));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let mut q: u64 = 1;
        for _ in 0..m {
            q = q
                .checked_mul(p)
                .filter(|&v| v <= cap)
                .ok_or(Error::CapExceeded { what: "field size p^m", cap })?;
        }
        let modulus = if m == 1 {
            vec![0, 1]
        } else {
            canonical_irreducible_mod_p(p, m)
        };
        Ok(Arc::new(FieldSpec { p, m, q, modulus }))
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Field size q = p^m.
    pub fn q(&self) -> u64 {
        self.q
    }

    /// Ascending coefficients of the modulus, length `m + 1`.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// Modulus rendered in descending powers, e.g. `x^2+x+1`.
    pub fn modulus_string(&self) -> String {
        render_prime_poly(&self.modulus)
    }

    /// Whether two specs describe the same field.
    pub fn same_field(&self, other: &FieldSpec) -> bool {
        self.p == other.p && self.m == other.m
    }

    /// The zero element.
    pub fn zero(self: &Arc<Self>) -> FieldElement {
        FieldElement { spec: Arc::clone(self), coeffs: vec![0; self.m] }
    }

    /// The multiplicative identity.
    pub fn one(self: &Arc<Self>) -> FieldElement {
        self.from_int(1)
    }

    /// The prime-subfield element `c mod p` (the image of the integer `c`).
    pub fn from_int(self: &Arc<Self>, c: u64) -> FieldElement {
        let mut coeffs = vec![0; self.m];
        coeffs[0] = c % self.p;
        FieldElement { spec: Arc::clone(self), coeffs }
    }

    /// Element from explicit coordinates (must be length `m`, entries `< p`).
    pub fn element(self: &Arc<Self>, coeffs: &[u64]) -> Result<FieldElement> {
        if coeffs.len() != self.m {
            return Err(Error::BadParameters("element needs exactly m coordinates"));
        }
        if coeffs.iter().any(|&c| c >= self.p) {
            return Err(Error::BadParameters("element coordinate not reduced mod p"));
        }
        Ok(FieldElement { spec: Arc::clone(self), coeffs: coeffs.to_vec() })
    }

    /// Parse the `c0,c1,...,c{m-1}` element rendering.
    pub fn parse_element(self: &Arc<Self>, s: &str) -> Result<FieldElement> {
        let coeffs: Vec<u64> = s
            .split(',')
            .map(|t| t.trim().parse::<u64>())
            .collect::<core::result::Result<_, _>>()
            .map_err(|_| Error::BadParameters("element token must be comma-separated integers"))?;
        self.element(&coeffs)
    }

    /// The canonical root of the modulus: the class of `x`.
    ///
    /// For `m >= 2` this generates GF(p^m) over GF(p). For `m = 1` the
    /// sentinel modulus makes it the zero element.
    pub fn canonical_root(self: &Arc<Self>) -> FieldElement {
        if self.m == 1 {
            return self.zero();
        }
        let mut coeffs = vec![0; self.m];
        coeffs[1] = 1;
        FieldElement { spec: Arc::clone(self), coeffs }
    }

    /// Position of an element in the field's lexicographic element order.
    pub fn index_of(&self, e: &FieldElement) -> u64 {
        debug_assert!(self.same_field(&e.spec));
        e.coeffs.iter().fold(0, |acc, &c| acc * self.p + c)
    }

    /// Inverse of [`FieldSpec::index_of`].
    pub fn element_from_index(self: &Arc<Self>, mut idx: u64) -> FieldElement {
        let mut coeffs = vec![0; self.m];
        for i in (0..self.m).rev() {
            coeffs[i] = idx % self.p;
            idx /= self.p;
        }
        FieldElement { spec: Arc::clone(self), coeffs }
    }

    /// All q elements in ascending element order.
    pub fn elements(self: &Arc<Self>) -> impl Iterator<Item = FieldElement> + '_ {
        let spec = Arc::clone(self);
        (0..self.q).map(move |i| spec.element_from_index(i))
    }

    /// The element of multiplicative order q-1 that is least in the element
    /// order.
    pub fn primitive_element(self: &Arc<Self>) -> FieldElement {
        let factors = prime_factors(self.q - 1);
        self.elements()
            .skip(1)
            .find(|e| has_full_order(e, self.q - 1, &factors))
            .expect("every finite field has a primitive element")
    }
}

fn has_full_order(e: &FieldElement, group_order: u64, prime_factors: &[u64]) -> bool {
    prime_factors.iter().all(|&r| !e.pow(group_order / r).is_one())
}

impl FieldElement {
    pub fn spec(&self) -> &Arc<FieldSpec> {
        &self.spec
    }

    /// Coordinates in the basis `1, x, ..., x^{m-1}`, ascending.
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0] == 1 && self.coeffs[1..].iter().all(|&c| c == 0)
    }

    fn check_spec(&self, other: &FieldElement) -> Result<()> {
        if Arc::ptr_eq(&self.spec, &other.spec) || self.spec.same_field(&other.spec) {
            Ok(())
        } else {
            Err(Error::SpecMismatch)
        }
    }

    pub fn checked_add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check_spec(other)?;
        let p = self.spec.p;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| (a + b) % p)
            .collect();
        Ok(FieldElement { spec: Arc::clone(&self.spec), coeffs })
    }

    pub fn checked_sub(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check_spec(other)?;
        let p = self.spec.p;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| (a + p - b) % p)
            .collect();
        Ok(FieldElement { spec: Arc::clone(&self.spec), coeffs })
    }

    pub fn checked_mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check_spec(other)?;
        let spec = &self.spec;
        let p = spec.p;
        // Schoolbook product, then reduction by the monic modulus.
        let mut prod = vec![0u64; 2 * spec.m - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                prod[i + j] = (prod[i + j] + a * b) % p;
            }
        }
        for i in (spec.m..prod.len()).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            prod[i] = 0;
            for (k, &mk) in spec.modulus.iter().enumerate().take(spec.m) {
                let idx = i - spec.m + k;
                prod[idx] = (prod[idx] + c * (p - mk) % p) % p;
            }
        }
        prod.truncate(spec.m);
        Ok(FieldElement { spec: Arc::clone(spec), coeffs: prod })
    }

    pub fn neg(&self) -> FieldElement {
        let p = self.spec.p;
        let coeffs = self.coeffs.iter().map(|&c| (p - c) % p).collect();
        FieldElement { spec: Arc::clone(&self.spec), coeffs }
    }

    /// Exponentiation by squaring; `e = 0` gives 1 (including for zero).
    pub fn pow(&self, mut e: u64) -> FieldElement {
        let mut base = self.clone();
        let mut acc = self.spec.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; fails on zero.
    pub fn inverse(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(self.spec.q - 2))
    }

    /// Least e >= 1 with `self^e = 1`; fails on zero.
    pub fn order(&self) -> Result<u64> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut e = self.spec.q - 1;
        for r in prime_factors(e) {
            while e.is_multiple_of(r) && self.pow(e / r).is_one() {
                e /= r;
            }
        }
        Ok(e)
    }

    /// `self^(p^i)`, the i-fold Frobenius. Fixes the prime field and is a
    /// field automorphism.
    pub fn frobenius(&self, i: usize) -> FieldElement {
        if self.is_zero() {
            return self.clone();
        }
        let group = self.spec.q - 1;
        // p^i mod (q-1), with exponent 0 meaning q-1 (both give 1).
        let mut e: u64 = 1 % group.max(1);
        for _ in 0..i {
            e = mulmod(e, self.spec.p, group.max(1));
        }
        if group > 0 && e == 0 {
            e = group;
        }
        self.pow(e.max(1))
    }

    /// Monic minimal polynomial over the subfield GF(p^d), where `d` must
    /// divide `m`. The result is a polynomial over the canonical GF(p^d).
    pub fn minimal_polynomial(&self, subfield_degree: usize) -> Result<crate::poly::Poly> {
        let m = self.spec.m;
        if subfield_degree == 0 || !m.is_multiple_of(subfield_degree) {
            return Err(Error::NotASubfield);
        }
        // Frobenius orbit over GF(p^d).
        let mut orbit = vec![self.clone()];
        loop {
            let next = orbit.last().unwrap().frobenius(subfield_degree);
            if next == *self {
                break;
            }
            orbit.push(next);
        }
        // Expand prod (x - o) with coefficients in the big field.
        let mut coeffs = vec![self.spec.one()];
        for o in &orbit {
            let neg_o = o.neg();
            let mut next = vec![self.spec.zero(); coeffs.len() + 1];
            for (i, c) in coeffs.iter().enumerate() {
                next[i + 1] = &next[i + 1] + c;
                next[i] = &next[i] + &(c * &neg_o);
            }
            coeffs = next;
        }
        let embed = SubfieldEmbedding::new(&self.spec, subfield_degree)?;
        let lowered: Vec<FieldElement> = coeffs
            .iter()
            .map(|c| {
                embed
                    .lower(c)
                    .expect("minimal-polynomial coefficients are Frobenius-fixed")
            })
            .collect();
        crate::poly::Poly::from_coeffs(embed.small(), lowered)
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.spec.same_field(&other.spec) && self.coeffs == other.coeffs
    }
}

impl Eq for FieldElement {}

impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FieldElement {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.spec.p, self.spec.m, &self.coeffs).cmp(&(other.spec.p, other.spec.m, &other.coeffs))
    }
}

macro_rules! element_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl core::ops::$trait for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                self.$checked(rhs).expect("field elements from different fields")
            }
        }
    };
}

element_binop!(Add, add, checked_add);
element_binop!(Sub, sub, checked_sub);
element_binop!(Mul, mul, checked_mul);

impl fmt::Display for FieldElement {
    /// `c0,c1,...,c{m-1}`: ascending powers, always `m` entries.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_char(',')?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Explicit embedding GF(p^d) -> GF(p^m) for `d | m`.
///
/// The image of the small field's canonical root is the least root (in the
/// element order) of the small modulus inside the big field, so the
/// embedding is deterministic. [`SubfieldEmbedding::lower`] inverts it and
/// reports `None` for elements outside the subfield.
#[derive(Debug, Clone)]
pub struct SubfieldEmbedding {
    big: Arc<FieldSpec>,
    small: Arc<FieldSpec>,
    /// gamma^0, ..., gamma^{d-1} in the big field.
    gamma_pows: Vec<FieldElement>,
}

impl SubfieldEmbedding {
    pub fn new(big: &Arc<FieldSpec>, subfield_degree: usize) -> Result<SubfieldEmbedding> {
        let (p, m) = (big.p, big.m);
        if subfield_degree == 0 || m % subfield_degree != 0 {
            return Err(Error::NotASubfield);
        }
        let d = subfield_degree;
        let small = FieldSpec::with_cap(p, d, big.q)?;
        if d == m {
            let gamma = big.canonical_root();
            let gamma_pows = (0..d as u64).map(|i| gamma.pow(i)).collect();
            return Ok(SubfieldEmbedding { big: Arc::clone(big), small, gamma_pows });
        }
        // Subfield elements are 0 and the powers of delta, where delta
        // generates the unique multiplicative subgroup of order p^d - 1.
        let theta = big.primitive_element();
        let delta = theta.pow((big.q - 1) / (small.q - 1));
        let mut candidates = vec![big.zero()];
        let mut pw = big.one();
        for _ in 0..small.q - 1 {
            candidates.push(pw.clone());
            pw = &pw * &delta;
        }
        let mut roots: Vec<FieldElement> = candidates
            .into_iter()
            .filter(|u| eval_prime_poly_in(big, &small.modulus, u).is_zero())
            .collect();
        roots.sort();
        let gamma = roots.into_iter().next().expect("small modulus splits in the big field");
        let gamma_pows = (0..d as u64).map(|i| gamma.pow(i)).collect();
        Ok(SubfieldEmbedding { big: Arc::clone(big), small, gamma_pows })
    }

    pub fn big(&self) -> &Arc<FieldSpec> {
        &self.big
    }

    pub fn small(&self) -> &Arc<FieldSpec> {
        &self.small
    }

    /// Image of a small-field element in the big field.
    pub fn lift(&self, e: &FieldElement) -> FieldElement {
        assert!(e.spec.same_field(&self.small), "lift: element not in the small field");
        let mut acc = self.big.zero();
        for (&c, gp) in e.coeffs.iter().zip(&self.gamma_pows) {
            acc = &acc + &(&self.big.from_int(c) * gp);
        }
        acc
    }

    /// Express a big-field element in small-field coordinates, if it lies in
    /// the embedded subfield.
    pub fn lower(&self, e: &FieldElement) -> Option<FieldElement> {
        assert!(e.spec.same_field(&self.big), "lower: element not in the big field");
        let p = self.big.p;
        let m = self.big.m;
        let d = self.small.m;
        // Solve sum c_i gamma^i = e over GF(p): m equations, d unknowns.
        let mut aug = vec![vec![0u64; d + 1]; m];
        for (i, row) in aug.iter_mut().enumerate() {
            for (j, gp) in self.gamma_pows.iter().enumerate() {
                row[j] = gp.coeffs[i];
            }
            row[d] = e.coeffs[i];
        }
        let mut coords = vec![0u64; d];
        let mut pivot_row = 0;
        for col in 0..d {
            let Some(r) = (pivot_row..m).find(|&r| aug[r][col] != 0) else {
                continue;
            };
            aug.swap(pivot_row, r);
            let inv = invmod(aug[pivot_row][col], p);
            for x in aug[pivot_row][col..].iter_mut() {
                *x = *x * inv % p;
            }
            for r in 0..m {
                if r != pivot_row && aug[r][col] != 0 {
                    let f = aug[r][col];
                    for c in col..=d {
                        aug[r][c] = (aug[r][c] + (p - f) * aug[pivot_row][c]) % p;
                    }
                }
            }
            pivot_row += 1;
        }
        // Back-substitute and check consistency.
        let mut pivot_row = 0;
        for col in 0..d {
            if pivot_row < m && aug[pivot_row][col] == 1 && aug[pivot_row][..col].iter().all(|&x| x == 0) {
                coords[col] = aug[pivot_row][d];
                pivot_row += 1;
            }
        }
        for row in aug[pivot_row..].iter() {
            if row[..d].iter().all(|&x| x == 0) && row[d] != 0 {
                return None;
            }
        }
        let candidate = self.small.element(&coords).ok()?;
        (self.lift(&candidate) == *e).then_some(candidate)
    }
}

/// Evaluate a prime-field-coefficient polynomial at a point of `spec`.
fn eval_prime_poly_in(spec: &Arc<FieldSpec>, coeffs: &[u64], x: &FieldElement) -> FieldElement {
    let mut acc = spec.zero();
    for &c in coeffs.iter().rev() {
        acc = &(&acc * x) + &spec.from_int(c);
    }
    acc
}

// ---------------------------------------------------------------------------
// Integer and prime-field polynomial helpers.
// ---------------------------------------------------------------------------

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime factors by trial division.
pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub(crate) fn mulmod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

fn invmod(a: u64, p: u64) -> u64 {
    // p prime, a != 0 mod p.
    let mut e = p - 2;
    let mut base = a % p;
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, base, p);
        }
        base = mulmod(base, base, p);
        e >>= 1;
    }
    acc
}

// Dense polynomials over GF(p) as ascending coefficient vectors. Used only
// for modulus selection, before any FieldSpec exists.
mod zp {
    use super::{invmod, Vec};

    pub fn trim(v: &mut Vec<u64>) {
        while v.last() == Some(&0) {
            v.pop();
        }
    }

    pub fn mul(p: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = super::vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % p;
            }
        }
        trim(&mut out);
        out
    }

    /// Remainder of `a` modulo nonzero `b`.
    pub fn rem(p: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
        let mut r = a.to_vec();
        trim(&mut r);
        let db = b.len() - 1;
        let lead_inv = invmod(b[db], p);
        while r.len() > db {
            let c = (r[r.len() - 1] * lead_inv) % p;
            let shift = r.len() - 1 - db;
            for (k, &bk) in b.iter().enumerate() {
                r[shift + k] = (r[shift + k] + p - c * bk % p) % p;
            }
            trim(&mut r);
        }
        r
    }

    pub fn gcd(p: u64, a: &[u64], b: &[u64]) -> Vec<u64> {
        let mut x = a.to_vec();
        let mut y = b.to_vec();
        trim(&mut x);
        trim(&mut y);
        while !y.is_empty() {
            let r = rem(p, &x, &y);
            x = y;
            y = r;
        }
        x
    }

    /// `base^e mod f`.
    pub fn powmod(p: u64, base: &[u64], mut e: u64, f: &[u64]) -> Vec<u64> {
        let mut b = rem(p, base, f);
        let mut acc = super::vec![1u64];
        while e > 0 {
            if e & 1 == 1 {
                acc = rem(p, &mul(p, &acc, &b), f);
            }
            b = rem(p, &mul(p, &b, &b), f);
            e >>= 1;
        }
        acc
    }
}

/// A monic degree-m polynomial over GF(p) is irreducible iff it shares no
/// factor with x^(p^i) - x for i = 1..=m/2.
fn is_irreducible_mod_p(p: u64, f: &[u64]) -> bool {
    let m = f.len() - 1;
    // x^(p^i) mod f, advanced one Frobenius step at a time.
    let mut xp = vec![0u64, 1];
    for _ in 1..=m / 2 {
        xp = zp::powmod(p, &xp, p, f);
        // xp - x
        let mut diff = xp.clone();
        if diff.len() < 2 {
            diff.resize(2, 0);
        }
        diff[1] = (diff[1] + p - 1) % p;
        zp::trim(&mut diff);
        if diff.is_empty() {
            return false; // f divides x^(p^i) - x, so it splits into small factors
        }
        let g = zp::gcd(p, f, &diff);
        if g.len() > 1 {
            return false;
        }
    }
    true
}

/// Lexicographically least (on `(c_0, ..., c_{m-1})`) monic irreducible of
/// degree m over GF(p). Polynomials with zero constant term are divisible
/// by x, so the search starts at c_0 = 1.
fn canonical_irreducible_mod_p(p: u64, m: usize) -> Vec<u64> {
    let mut coeffs = vec![0u64; m + 1];
    coeffs[0] = 1;
    coeffs[m] = 1;
    loop {
        if is_irreducible_mod_p(p, &coeffs) {
            return coeffs;
        }
        // Advance (c_0, ..., c_{m-1}) in lex order: last coordinate fastest.
        for i in (0..m).rev() {
            coeffs[i] += 1;
            if coeffs[i] < p {
                break;
            }
            coeffs[i] = 0;
            assert!(i > 0, "no irreducible of degree {m} over GF({p})");
        }
    }
}

/// Render a prime-field-coefficient polynomial (ascending input) in
/// descending powers: `x^2+2x+1`, zero polynomial as `0`.
pub(crate) fn render_prime_poly(coeffs: &[u64]) -> String {
    let mut s = String::new();
    for (e, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        if !s.is_empty() {
            s.push('+');
        }
        match e {
            0 => {
                let _ = write!(s, "{c}");
            }
            _ => {
                if c != 1 {
                    let _ = write!(s, "{c}");
                }
                s.push('x');
                if e > 1 {
                    let _ = write!(s, "^{e}");
                }
            }
        }
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

/// Lookup-table arithmetic over a small field, used by brute-force
/// enumerations where element codes (indexes) stand in for elements.
#[derive(Debug)]
pub(crate) struct DenseField {
    pub q: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
}

impl DenseField {
    /// Build tables when q is small enough to pay off.
    pub fn build(spec: &Arc<FieldSpec>) -> Option<DenseField> {
        let q = spec.q as usize;
        if q > 512 {
            return None;
        }
        let elems: Vec<FieldElement> = spec.elements().collect();
        let mut add = vec![0u32; q * q];
        let mut mul = vec![0u32; q * q];
        for (i, a) in elems.iter().enumerate() {
            for (j, b) in elems.iter().enumerate() {
                add[i * q + j] = spec.index_of(&(a + b)) as u32;
                mul[i * q + j] = spec.index_of(&(a * b)) as u32;
            }
        }
        Some(DenseField { q, add, mul })
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        self.add[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[a as usize * self.q + b as usize]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_moduli_for_small_fields() {
        let f2 = FieldSpec::new(2, 1).unwrap();
        assert_eq!(f2.modulus(), &[0, 1]);
        assert_eq!(f2.q(), 2);

        let f4 = FieldSpec::new(2, 2).unwrap();
        assert_eq!(f4.modulus_string(), "x^2+x+1");

        let f9 = FieldSpec::new(3, 2).unwrap();
        assert_eq!(f9.modulus_string(), "x^2+1");
    }

    #[test]
    fn gf9_modulus_is_lex_least_by_enumeration() {
        // Independent check: every monic quadratic over GF(3) that precedes
        // x^2+1 in the (c0, c1) lex order has a root mod 3.
        let before: [[u64; 2]; 3] = [[0, 0], [0, 1], [0, 2]];
        for c in before {
            let has_root = (0..3).any(|x| (c[0] + c[1] * x + x * x) % 3 == 0);
            assert!(has_root, "{c:?} should be reducible");
        }
        assert!((0..3).all(|x| (1 + x * x) % 3 != 0), "x^2+1 has no root mod 3");
    }

    #[test]
    fn construction_errors() {
        assert_eq!(FieldSpec::new(4, 1).unwrap_err(), Error::NotPrime(4));
        assert_eq!(FieldSpec::new(1, 1).unwrap_err(), Error::NotPrime(1));
        assert!(matches!(
            FieldSpec::new(2, 21).unwrap_err(),
            Error::CapExceeded { .. }
        ));
    }

    #[test]
    fn gf4_arithmetic() {
        let f4 = FieldSpec::new(2, 2).unwrap();
        let alpha = f4.canonical_root();
        let alpha_plus_one = f4.element(&[1, 1]).unwrap();
        assert_eq!(&alpha * &alpha, alpha_plus_one);
        assert_eq!(&alpha + &f4.zero(), alpha);
        assert_eq!(alpha.inverse().unwrap(), f4.element(&[1, 1]).unwrap());

        let f2 = FieldSpec::new(2, 1).unwrap();
        assert!((&f2.one() + &f2.one()).is_zero());
        assert_eq!(f2.zero().inverse().unwrap_err(), Error::DivisionByZero);
        assert_eq!(f2.one().inverse().unwrap(), f2.one());
    }

    #[test]
    fn spec_mismatch_is_reported() {
        let f2 = FieldSpec::new(2, 1).unwrap();
        let f3 = FieldSpec::new(3, 1).unwrap();
        assert_eq!(
            f2.one().checked_add(&f3.one()).unwrap_err(),
            Error::SpecMismatch
        );
    }

    #[test]
    fn element_orders() {
        let f4 = FieldSpec::new(2, 2).unwrap();
        assert_eq!(f4.one().order().unwrap(), 1);
        assert_eq!(f4.canonical_root().order().unwrap(), 3);
        assert_eq!(f4.zero().order().unwrap_err(), Error::DivisionByZero);

        // GF(8): the multiplicative group has prime order 7.
        let f8 = FieldSpec::new(2, 3).unwrap();
        for e in f8.elements().skip(1) {
            let expect = if e.is_one() { 1 } else { 7 };
            assert_eq!(e.order().unwrap(), expect);
        }
    }

    #[test]
    fn primitive_elements() {
        let f2 = FieldSpec::new(2, 1).unwrap();
        assert!(f2.primitive_element().is_one());

        let f4 = FieldSpec::new(2, 2).unwrap();
        assert_eq!(f4.primitive_element().coeffs(), &[0, 1]);

        let f5 = FieldSpec::new(5, 1).unwrap();
        assert_eq!(f5.primitive_element().coeffs(), &[2]);
    }

    #[test]
    fn frobenius_examples() {
        let f4 = FieldSpec::new(2, 2).unwrap();
        assert!(f4.zero().frobenius(3).is_zero());
        let alpha = f4.canonical_root();
        assert_eq!(alpha.frobenius(1), f4.element(&[1, 1]).unwrap());
        for e in f4.elements() {
            assert_eq!(e.frobenius(f4.m()), e);
        }
    }

    #[test]
    fn minimal_polynomials() {
        let f2 = FieldSpec::new(2, 1).unwrap();
        let mp = f2.one().minimal_polynomial(1).unwrap();
        assert_eq!(alloc::format!("{mp}"), "x+1");

        let f4 = FieldSpec::new(2, 2).unwrap();
        let mp = f4.canonical_root().minimal_polynomial(1).unwrap();
        assert_eq!(alloc::format!("{mp}"), "x^2+x+1");

        let f8 = FieldSpec::new(2, 3).unwrap();
        let alpha = f8.canonical_root();
        let mp = alpha.minimal_polynomial(1).unwrap();
        assert_eq!(alloc::format!("{mp}"), f8.modulus_string());
    }

    #[test]
    fn subfield_embedding_round_trip() {
        let f16 = FieldSpec::new(2, 4).unwrap();
        let embed = SubfieldEmbedding::new(&f16, 2).unwrap();
        for e in embed.small().elements() {
            let up = embed.lift(&e);
            assert_eq!(embed.lower(&up), Some(e));
        }
        // Elements outside GF(4) must not lower.
        let alpha = f16.canonical_root();
        assert_eq!(embed.lower(&alpha), None);
        assert_eq!(
            SubfieldEmbedding::new(&f16, 3).unwrap_err(),
            Error::NotASubfield
        );
    }

    #[test]
    fn element_rendering_and_parsing() {
        let f9 = FieldSpec::new(3, 2).unwrap();
        let e = f9.element(&[2, 1]).unwrap();
        assert_eq!(alloc::format!("{e}"), "2,1");
        assert_eq!(f9.parse_element("2,1").unwrap(), e);
        assert!(f9.parse_element("3,0").is_err());
        assert!(f9.parse_element("1").is_err());
    }
}
