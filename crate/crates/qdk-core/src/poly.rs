//! Univariate polynomials over a finite field.
//!
//! Besides ring arithmetic and gcd, this module carries the cyclotomic-coset
//! machinery: `x^n - 1` is factored by building each irreducible factor as a
//! product of `(x - beta^j)` over one coset, computed inside the splitting
//! field GF(q^l) and then verified to land back in GF(q). Counting helpers
//! (falling factorials, Stirling numbers of the first kind, and the
//! split-polynomial counts) return exact big integers or rationals.

use alloc::string::String;
use alloc::string::ToString;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::gf::{FieldElement, FieldSpec, SubfieldEmbedding};
use crate::{Error, Result};

/// Dense univariate polynomial, ascending coefficients, no trailing zeros.
/// The zero polynomial has an empty coefficient list.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Poly {
    spec: Arc<FieldSpec>,
    coeffs: Vec<FieldElement>,
}

impl Poly {
    pub fn zero(spec: &Arc<FieldSpec>) -> Poly {
        Poly { spec: Arc::clone(spec), coeffs: Vec::new() }
    }

    pub fn one(spec: &Arc<FieldSpec>) -> Poly {
        Poly { spec: Arc::clone(spec), coeffs: vec![spec.one()] }
    }

    pub fn x(spec: &Arc<FieldSpec>) -> Poly {
        Poly { spec: Arc::clone(spec), coeffs: vec![spec.zero(), spec.one()] }
    }

    /// `x - a`.
    pub fn x_minus(a: &FieldElement) -> Poly {
        let spec = Arc::clone(a.spec());
        Poly { spec: Arc::clone(&spec), coeffs: vec![a.neg(), spec.one()] }
    }

    /// Polynomial from ascending coefficients (trailing zeros are trimmed).
    pub fn from_coeffs(spec: &Arc<FieldSpec>, coeffs: Vec<FieldElement>) -> Result<Poly> {
        if coeffs.iter().any(|c| !c.spec().same_field(spec)) {
            return Err(Error::SpecMismatch);
        }
        let mut p = Poly { spec: Arc::clone(spec), coeffs };
        p.trim();
        Ok(p)
    }

    /// Polynomial with prime-subfield coefficients given as integers.
    pub fn from_int_coeffs(spec: &Arc<FieldSpec>, coeffs: &[u64]) -> Poly {
        let coeffs = coeffs.iter().map(|&c| spec.from_int(c)).collect();
        let mut p = Poly { spec: Arc::clone(spec), coeffs };
        p.trim();
        p
    }

    /// `x^n - 1`.
    pub fn xn_minus_one(spec: &Arc<FieldSpec>, n: usize) -> Poly {
        let mut coeffs = vec![spec.zero(); n + 1];
        coeffs[0] = spec.one().neg();
        coeffs[n] = spec.one();
        let mut p = Poly { spec: Arc::clone(spec), coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(FieldElement::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn spec(&self) -> &Arc<FieldSpec> {
        &self.spec
    }

    /// Ascending coefficients without trailing zeros.
    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` marks the zero polynomial (degree "minus infinity").
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&FieldElement> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(FieldElement::is_one)
    }

    fn check_spec(&self, other: &Poly) -> Result<()> {
        if self.spec.same_field(&other.spec) {
            Ok(())
        } else {
            Err(Error::SpecMismatch)
        }
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly> {
        self.check_spec(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).cloned().unwrap_or_else(|| self.spec.zero());
            let b = other.coeffs.get(i).cloned().unwrap_or_else(|| self.spec.zero());
            coeffs.push(&a + &b);
        }
        let mut p = Poly { spec: Arc::clone(&self.spec), coeffs };
        p.trim();
        Ok(p)
    }

    pub fn checked_sub(&self, other: &Poly) -> Result<Poly> {
        self.checked_add(&other.scale(&self.spec.one().neg()))
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly> {
        self.check_spec(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(&self.spec));
        }
        let mut coeffs = vec![self.spec.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        let mut p = Poly { spec: Arc::clone(&self.spec), coeffs };
        p.trim();
        Ok(p)
    }

    /// Multiply every coefficient by `c`.
    pub fn scale(&self, c: &FieldElement) -> Poly {
        let coeffs = self.coeffs.iter().map(|a| a * c).collect();
        let mut p = Poly { spec: Arc::clone(&self.spec), coeffs };
        p.trim();
        p
    }

    /// Quotient and remainder with `deg(rem) < deg(divisor)`.
    pub fn divmod(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        self.check_spec(divisor)?;
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let db = divisor.degree().unwrap();
        let lead_inv = divisor.leading_coeff().unwrap().inverse()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![self.spec.zero(); self.coeffs.len().saturating_sub(db)];
        while rem.len() > db {
            let c = rem.last().unwrap() * &lead_inv;
            let shift = rem.len() - 1 - db;
            quot[shift] = c.clone();
            for (k, bk) in divisor.coeffs.iter().enumerate().take(db) {
                rem[shift + k] = &rem[shift + k] - &(&c * bk);
            }
            rem.pop(); // leading term cancels exactly
            while rem.last().is_some_and(FieldElement::is_zero) {
                rem.pop();
            }
        }
        let mut q = Poly { spec: Arc::clone(&self.spec), coeffs: quot };
        q.trim();
        let mut r = Poly { spec: Arc::clone(&self.spec), coeffs: rem };
        r.trim();
        Ok((q, r))
    }

    /// Scalar multiple with leading coefficient 1; zero stays zero.
    pub fn monic(&self) -> Poly {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) => self.scale(&lc.inverse().expect("leading coefficient is nonzero")),
        }
    }

    pub fn eval(&self, x: &FieldElement) -> FieldElement {
        let mut acc = self.spec.zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// `self^e mod m`.
    pub fn powmod(&self, mut e: u64, m: &Poly) -> Result<Poly> {
        let mut base = self.divmod(m)?.1;
        let mut acc = Poly::one(&self.spec);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.checked_mul(&base)?.divmod(m)?.1;
            }
            base = base.checked_mul(&base)?.divmod(m)?.1;
            e >>= 1;
        }
        Ok(acc)
    }
}

macro_rules! poly_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl core::ops::$trait for &Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                self.$checked(rhs).expect("polynomials over different fields")
            }
        }
    };
}

poly_binop!(Add, add, checked_add);
poly_binop!(Sub, sub, checked_sub);
poly_binop!(Mul, mul, checked_mul);

impl fmt::Display for Poly {
    /// Descending powers. Prime-field coefficients render as integers
    /// (`x^3+2x+1`); extension-field coefficients render as parenthesized
    /// coordinate tuples (`x^2+(1,1)x+(0,1)`), with coefficient 1 omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_char('0');
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_char('+')?;
            }
            first = false;
            let coeff_token = if c.is_one() && e > 0 {
                None
            } else if self.spec.m() == 1 {
                Some(c.coeffs()[0].to_string())
            } else {
                let mut s = String::new();
                let _ = write!(s, "({c})");
                Some(s)
            };
            if let Some(tok) = coeff_token {
                f.write_str(&tok)?;
            }
            if e > 0 {
                f.write_char('x')?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

/// Monic greatest common divisor; errors when both inputs are zero.
pub fn poly_gcd(a: &Poly, b: &Poly) -> Result<Poly> {
    a.check_spec(b)?;
    if a.is_zero() && b.is_zero() {
        return Err(Error::BothZero);
    }
    let mut x = a.clone();
    let mut y = b.clone();
    while !y.is_zero() {
        let r = x.divmod(&y)?.1;
        x = y;
        y = r;
    }
    Ok(x.monic())
}

/// Partition of Z_n into orbits under multiplication by q.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetPartition {
    n: usize,
    q: u64,
    cosets: Vec<Vec<usize>>,
}

impl CosetPartition {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Cosets ordered by least element; each coset sorted ascending.
    pub fn cosets(&self) -> &[Vec<usize>] {
        &self.cosets
    }
}

fn gcd_u64(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

/// Cyclotomic cosets of q modulo n. Requires `gcd(n, q) = 1`.
pub fn cyclotomic_cosets(n: usize, q: u64) -> Result<CosetPartition> {
    if n == 0 {
        return Err(Error::BadParameters("n must be positive"));
    }
    if n as u64 > crate::DEFAULT_SEARCH_CAP {
        return Err(Error::CapExceeded { what: "coset modulus n", cap: crate::DEFAULT_SEARCH_CAP });
    }
    if gcd_u64(n as u64, q) != 1 {
        return Err(Error::NotCoprime { n: n as u64, q });
    }
    let mut seen = vec![false; n];
    let mut cosets = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut coset = Vec::new();
        let mut j = start;
        while !seen[j] {
            seen[j] = true;
            coset.push(j);
            j = (crate::gf::mulmod(j as u64, q, n as u64)) as usize;
        }
        coset.sort_unstable();
        cosets.push(coset);
    }
    Ok(CosetPartition { n, q, cosets })
}

/// Multiplicative order of q modulo n (requires coprimality).
pub fn multiplicative_order(q: u64, n: usize) -> Result<usize> {
    if n == 0 {
        return Err(Error::BadParameters("n must be positive"));
    }
    if gcd_u64(n as u64, q) != 1 {
        return Err(Error::NotCoprime { n: n as u64, q });
    }
    if n == 1 {
        return Ok(1);
    }
    let n = n as u64;
    let mut acc = q % n;
    for l in 1..=n {
        if acc == 1 {
            return Ok(l as usize);
        }
        acc = crate::gf::mulmod(acc, q, n);
    }
    unreachable!("order of a unit divides the group order")
}

/// Cap on splitting-field size; factoring x^n - 1 may legitimately need
/// fields far above the public construction default.
const SPLITTING_FIELD_CAP: u64 = 1 << 62;

/// The splitting field GF(q^l) of x^n - 1 over GF(q), with the subfield
/// embedding and the canonical primitive n-th root of unity beta.
#[derive(Debug, Clone)]
pub struct SplittingField {
    base: Arc<FieldSpec>,
    big: Arc<FieldSpec>,
    embed: SubfieldEmbedding,
    beta: FieldElement,
    ext_degree: usize,
    n: usize,
}

impl SplittingField {
    /// Requires `gcd(n, q) = 1`. `beta = alpha^((q^l - 1)/n)` for the
    /// canonical primitive element alpha of GF(q^l).
    pub fn new(base: &Arc<FieldSpec>, n: usize) -> Result<SplittingField> {
        let q = base.q();
        let l = multiplicative_order(q, n)?;
        let big_m = base
            .m()
            .checked_mul(l)
            .ok_or(Error::CapExceeded { what: "splitting field size", cap: SPLITTING_FIELD_CAP })?;
        let big = FieldSpec::with_cap(base.p(), big_m, SPLITTING_FIELD_CAP)?;
        let alpha = big.primitive_element();
        let beta = alpha.pow((big.q() - 1) / n as u64);
        let embed = SubfieldEmbedding::new(&big, base.m())?;
        Ok(SplittingField {
            base: Arc::clone(base),
            big,
            embed,
            beta,
            ext_degree: l,
            n,
        })
    }

    pub fn base(&self) -> &Arc<FieldSpec> {
        &self.base
    }

    pub fn big(&self) -> &Arc<FieldSpec> {
        &self.big
    }

    pub fn embed(&self) -> &SubfieldEmbedding {
        &self.embed
    }

    /// Primitive n-th root of unity in the big field.
    pub fn beta(&self) -> &FieldElement {
        &self.beta
    }

    /// l = ord_n(q).
    pub fn ext_degree(&self) -> usize {
        self.ext_degree
    }

    /// Expand prod_{j in exponents} (x - beta^j) in the big field and lower
    /// the coefficients to GF(q). Fails with `NotCosetClosed` when the
    /// product does not have base-field coefficients.
    pub fn product_over_exponents(&self, exponents: &[usize]) -> Result<Poly> {
        let mut prod = Poly::one(&self.big);
        for &j in exponents {
            let root = self.beta.pow(j as u64 % self.n as u64);
            prod = &prod * &Poly::x_minus(&root);
        }
        let mut lowered = Vec::with_capacity(prod.coeffs().len());
        for c in prod.coeffs() {
            match self.embed.lower(c) {
                Some(small) => lowered.push(small),
                None => return Err(Error::NotCosetClosed),
            }
        }
        Poly::from_coeffs(&self.base, lowered)
    }
}

/// Monic irreducible factors of x^n - 1 over GF(q), one per cyclotomic
/// coset, sorted by their rendering. Requires `gcd(n, q) = 1`.
pub fn factor_xn_minus_1(n: usize, spec: &Arc<FieldSpec>) -> Result<Vec<Poly>> {
    let cosets = cyclotomic_cosets(n, spec.q())?;
    let sf = SplittingField::new(spec, n)?;
    let mut factors = Vec::with_capacity(cosets.cosets().len());
    for coset in cosets.cosets() {
        let f = sf.product_over_exponents(coset)?;
        debug_assert!(f.is_monic());
        debug_assert_eq!(f.degree(), Some(coset.len()));
        factors.push(f);
    }
    factors.sort_by_key(|f| f.to_string());
    Ok(factors)
}

/// Lexicographically least monic irreducible of the given degree over GF(q),
/// coefficients compared in the field's element order.
pub fn canonical_irreducible(spec: &Arc<FieldSpec>, degree: usize) -> Result<Poly> {
    if degree == 0 {
        return Err(Error::BadParameters("irreducible degree must be >= 1"));
    }
    let q = spec.q();
    let mut indices = vec![0u64; degree];
    if degree >= 2 {
        // A zero constant term means divisibility by x.
        indices[0] = 1;
    }
    loop {
        let mut coeffs: Vec<FieldElement> =
            indices.iter().map(|&i| spec.element_from_index(i)).collect();
        coeffs.push(spec.one());
        let f = Poly::from_coeffs(spec, coeffs)?;
        if is_irreducible(&f)? {
            return Ok(f);
        }
        let mut pos = degree;
        loop {
            assert!(pos > 0, "no monic irreducible of degree {degree} found");
            pos -= 1;
            indices[pos] += 1;
            if indices[pos] < q {
                break;
            }
            indices[pos] = 0;
        }
    }
}

/// Irreducibility over GF(q) by the x^(q^i) - x gcd sieve: a monic f of
/// degree d is irreducible iff it shares no factor with x^(q^i) - x for
/// i = 1..=d/2.
pub fn is_irreducible(f: &Poly) -> Result<bool> {
    let Some(d) = f.degree() else {
        return Ok(false);
    };
    if d == 0 {
        return Ok(false);
    }
    if d == 1 {
        return Ok(true);
    }
    let spec = f.spec();
    let q = spec.q();
    let x = Poly::x(spec);
    let mut xq = x.clone();
    for _ in 1..=d / 2 {
        xq = xq.powmod(q, f)?;
        let diff = &xq - &x;
        if diff.is_zero() {
            return Ok(false);
        }
        if poly_gcd(f, &diff)?.degree() != Some(0) {
            return Ok(false);
        }
    }
    Ok(true)
}

// ---------------------------------------------------------------------------
// Counting: falling factorials, Stirling numbers, split polynomials.
// ---------------------------------------------------------------------------

/// Falling factorial `(q)_k = q (q-1) ... (q-k+1)`, with `(q)_0 = 1`.
pub fn falling_factorial(q: i64, k: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= BigInt::from(q - i as i64);
    }
    acc
}

/// Signed Stirling number of the first kind `s(n, k)`, satisfying
/// `sum_k s(n, k) q^k = (q)_n`. Requires `k <= n`.
pub fn stirling_first(n: usize, k: usize) -> Result<BigInt> {
    if k > n {
        return Err(Error::IndexOutOfRange);
    }
    // s(n+1, k) = s(n, k-1) - n * s(n, k), s(0, 0) = 1.
    let mut row = vec![BigInt::one()];
    for m in 0..n {
        let mut next = vec![BigInt::zero(); m + 2];
        for (j, v) in row.iter().enumerate() {
            next[j + 1] += v;
            next[j] -= BigInt::from(m as i64) * v;
        }
        row = next;
    }
    Ok(row[k].clone())
}

/// The quotient `(sum_{k=1}^{n} (q)_k) / (q^2 - q)` as an exact rational;
/// no rounding is applied.
pub fn count_split_polys_formula(n: usize, q: u64) -> BigRational {
    let mut total = BigInt::zero();
    for k in 1..=n {
        total += falling_factorial(q as i64, k);
    }
    let denom = BigInt::from(q) * BigInt::from(q) - BigInt::from(q);
    BigRational::new(total, denom)
}

/// What [`brute_count_split_polys`] counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SplitPolyMode {
    /// Monic degree-n polynomials with n distinct roots in GF(q).
    MonicDistinctRoots,
    /// Orbits of that set under `x -> ax + b` (a nonzero) followed by
    /// re-normalization to monic.
    AffineOrbits,
}

/// Brute-force count over all monic degree-n polynomials. The enumeration
/// touches q^(n+1) (poly, evaluation point) pairs, which must stay within
/// `cap`.
pub fn brute_count_split_polys(
    n: usize,
    spec: &Arc<FieldSpec>,
    mode: SplitPolyMode,
    cap: u64,
) -> Result<u64> {
    if n == 0 {
        return Err(Error::BadParameters("degree must be >= 1"));
    }
    let q = spec.q();
    let mut work: u64 = 1;
    for _ in 0..=n {
        work = work
            .checked_mul(q)
            .filter(|&w| w <= cap)
            .ok_or(Error::CapExceeded { what: "q^(n+1) enumeration", cap })?;
    }
    let split_set = enumerate_split_polys(n, spec);
    match mode {
        SplitPolyMode::MonicDistinctRoots => Ok(split_set.len() as u64),
        SplitPolyMode::AffineOrbits => Ok(count_affine_orbits(n, spec, &split_set)),
    }
}

/// All monic degree-n polynomials over GF(q) with n distinct roots, as
/// ascending coefficient-index vectors (excluding the monic leading 1),
/// in lexicographic order.
fn enumerate_split_polys(n: usize, spec: &Arc<FieldSpec>) -> Vec<Vec<u64>> {
    let q = spec.q();
    let mut out = Vec::new();
    if let Some(table) = crate::gf::DenseField::build(spec) {
        // Table-driven Horner over element codes.
        let qs = q as usize;
        let mut codes = vec![0u32; n];
        let total = (qs as u128).pow(n as u32) as u64;
        for idx in 0..total {
            let mut v = idx;
            for c in codes.iter_mut().rev() {
                *c = (v % q) as u32;
                v /= q;
            }
            let mut roots = 0usize;
            for x in 0..qs as u32 {
                // f = x^n + c_{n-1} x^{n-1} + ... + c_0, coefficients stored
                // ascending in `codes`.
                let mut acc = 1u32; // leading 1
                for &c in codes.iter().rev() {
                    acc = table.add(table.mul(acc, x), c);
                }
                if acc == 0 {
                    roots += 1;
                }
            }
            if roots == n {
                out.push(codes.iter().map(|&c| c as u64).collect());
            }
        }
    } else {
        let elems: Vec<FieldElement> = spec.elements().collect();
        let total = (q as u128).pow(n as u32) as u64;
        let mut codes = vec![0u64; n];
        for idx in 0..total {
            let mut v = idx;
            for c in codes.iter_mut().rev() {
                *c = v % q;
                v /= q;
            }
            let mut roots = 0usize;
            for x in &elems {
                let mut acc = spec.one();
                for &c in codes.iter().rev() {
                    acc = &(&acc * x) + &elems[c as usize];
                }
                if acc.is_zero() {
                    roots += 1;
                }
            }
            if roots == n {
                out.push(codes.clone());
            }
        }
    }
    out
}

/// Partition the split set into orbits of the monic-renormalized affine
/// substitution action and count the classes.
fn count_affine_orbits(n: usize, spec: &Arc<FieldSpec>, split_set: &[Vec<u64>]) -> u64 {
    use alloc::collections::BTreeSet;

    let to_poly = |codes: &[u64]| -> Poly {
        let mut coeffs: Vec<FieldElement> =
            codes.iter().map(|&c| spec.element_from_index(c)).collect();
        coeffs.push(spec.one());
        Poly::from_coeffs(spec, coeffs).expect("coefficients share the spec")
    };
    let to_key = |p: &Poly| -> Vec<u64> {
        (0..n).map(|i| spec.index_of(&p.coeffs()[i])).collect()
    };

    let members: BTreeSet<Vec<u64>> = split_set.iter().cloned().collect();
    let mut unvisited = members.clone();
    let mut orbits = 0u64;
    while let Some(seed) = unvisited.iter().next().cloned() {
        orbits += 1;
        let mut frontier = vec![seed.clone()];
        unvisited.remove(&seed);
        while let Some(key) = frontier.pop() {
            let f = to_poly(&key);
            for a in spec.elements().skip(1) {
                for b in spec.elements() {
                    // x -> a x + b, then renormalize to monic.
                    let sub = Poly::from_coeffs(
                        spec,
                        vec![b.clone(), a.clone()],
                    )
                    .expect("same spec");
                    let mut image = Poly::zero(spec);
                    let mut pw = Poly::one(spec);
                    for c in f.coeffs() {
                        image = &image + &pw.scale(c);
                        pw = &pw * &sub;
                    }
                    let image = image.monic();
                    let ikey = to_key(&image);
                    debug_assert!(members.contains(&ikey), "affine action preserves the set");
                    if unvisited.remove(&ikey) {
                        frontier.push(ikey);
                    }
                }
            }
        }
    }
    orbits
}
