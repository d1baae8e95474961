//! Cyclic and Reed-Solomon codes over GF(q).
//!
//! A cyclic code of length n (with `gcd(n, q) = 1`) is the ideal generated
//! by `g(x) = prod_{j in J} (x - beta^j)` in `F_q[x]/(x^n - 1)`, where J is
//! a union of cyclotomic cosets and beta is the canonical primitive n-th
//! root of unity in the splitting field. The parity-check polynomial is the
//! complementary factor `(x^n - 1)/g(x)`.
//!
//! Reed-Solomon codes are built by evaluating `1, x, ..., x^{k-1}` on the
//! points of the normal rational curve; the point at infinity contributes
//! the leading-coefficient coordinate. Minimum distance is found by
//! exhaustive codeword enumeration, so the Singleton bound and MDS flag are
//! verified facts rather than assumptions.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_rational::BigRational;

use crate::gf::{FieldElement, FieldSpec};
use crate::grassmann::Subspace;
use crate::mat;
use crate::poly::{
    cyclotomic_cosets, factor_xn_minus_1, falling_factorial, Poly, SplittingField,
};
use crate::{Error, Result};

/// A cyclic code described by its generator-polynomial root exponents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicCode {
    spec: Arc<FieldSpec>,
    n: usize,
    root_exponents: Vec<usize>,
    gen_poly: Poly,
    k: usize,
}

impl CyclicCode {
    pub fn spec(&self) -> &Arc<FieldSpec> {
        &self.spec
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Sorted exponent set J.
    pub fn root_exponents(&self) -> &[usize] {
        &self.root_exponents
    }

    /// Generator polynomial g(x), monic of degree |J|.
    pub fn gen_poly(&self) -> &Poly {
        &self.gen_poly
    }

    /// Parity-check polynomial h(x) = (x^n - 1)/g(x).
    pub fn parity_check_poly(&self) -> Poly {
        let (h, r) = Poly::xn_minus_one(&self.spec, self.n)
            .divmod(&self.gen_poly)
            .expect("generator divides x^n - 1");
        debug_assert!(r.is_zero());
        h
    }
}

/// Build the cyclic code with root set `J = exponents` (mod n). J must be a
/// union of cyclotomic cosets of q mod n and a proper subset of Z_n.
pub fn cyclic_code_from_roots(
    spec: &Arc<FieldSpec>,
    n: usize,
    exponents: &[usize],
) -> Result<CyclicCode> {
    let q = spec.q();
    let cosets = cyclotomic_cosets(n, q)?; // also checks gcd(n, q) = 1
    let mut j: Vec<usize> = exponents.iter().map(|&e| e % n).collect();
    j.sort_unstable();
    j.dedup();
    if j.len() != exponents.len() {
        return Err(Error::BadParameters("root exponents must be distinct mod n"));
    }
    if j.len() >= n {
        return Err(Error::BadParameters("root set must be a proper subset of Z_n"));
    }
    // Closure under multiplication by q: J must be a union of cosets.
    for coset in cosets.cosets() {
        let hits = coset.iter().filter(|e| j.binary_search(e).is_ok()).count();
        if hits != 0 && hits != coset.len() {
            return Err(Error::NotCosetClosed);
        }
    }
    let sf = SplittingField::new(spec, n)?;
    let gen_poly = sf.product_over_exponents(&j)?;
    debug_assert!(gen_poly.is_monic());
    // g divides x^n - 1 by construction; keep the check as a cheap witness.
    let (_, rem) = Poly::xn_minus_one(spec, n).divmod(&gen_poly)?;
    assert!(rem.is_zero(), "generator must divide x^n - 1");
    let k = n - j.len();
    Ok(CyclicCode {
        spec: Arc::clone(spec),
        n,
        root_exponents: j,
        gen_poly,
        k,
    })
}

/// A linear [n, k] code held as a canonical (RREF) generator matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearCode {
    spec: Arc<FieldSpec>,
    n: usize,
    k: usize,
    gen_matrix: Vec<Vec<FieldElement>>,
}

impl LinearCode {
    /// Canonicalize the row space of the given spanning rows; `k` is the
    /// resulting rank.
    pub fn from_rows(
        spec: &Arc<FieldSpec>,
        n: usize,
        rows: &[Vec<FieldElement>],
    ) -> Result<LinearCode> {
        for row in rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch);
            }
            if row.iter().any(|x| !x.spec().same_field(spec)) {
                return Err(Error::SpecMismatch);
            }
        }
        let mut gen_matrix = rows.to_vec();
        mat::rref(&mut gen_matrix);
        if gen_matrix.is_empty() {
            return Err(Error::BadParameters("code must contain a nonzero word"));
        }
        let k = gen_matrix.len();
        Ok(LinearCode { spec: Arc::clone(spec), n, k, gen_matrix })
    }

    pub fn spec(&self) -> &Arc<FieldSpec> {
        &self.spec
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn gen_matrix(&self) -> &[Vec<FieldElement>] {
        &self.gen_matrix
    }

    /// The code as a point of the Grassmannian G_{k,n}(F_q).
    pub fn row_space(&self) -> Subspace {
        Subspace::from_generators(&self.spec, self.n, &self.gen_matrix)
            .expect("generator rows are well-formed")
    }
}

/// The shift-register generator matrix of a cyclic code: rows are
/// `x^i g(x)` for i = 0..k-1, then RREF-canonicalized.
pub fn code_to_linear(c: &CyclicCode) -> LinearCode {
    let g = c.gen_poly.coeffs();
    let mut rows = Vec::with_capacity(c.k);
    for i in 0..c.k {
        let mut row = vec![c.spec.zero(); c.n];
        for (d, coeff) in g.iter().enumerate() {
            row[i + d] = coeff.clone();
        }
        rows.push(row);
    }
    LinearCode::from_rows(&c.spec, c.n, &rows).expect("shift rows have full rank")
}

/// Exact code parameters; the Singleton bound is asserted on construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CodeParams {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    /// d = n - k + 1.
    pub mds: bool,
}

impl CodeParams {
    pub fn new(n: usize, k: usize, d: usize) -> CodeParams {
        assert!(d >= 1 && d <= n - k + 1, "Singleton bound violated: [{n},{k},{d}]");
        CodeParams { n, k, d, mds: d == n - k + 1 }
    }
}

/// Exact minimum Hamming distance by enumerating all q^k codewords
/// (requires `q^k <= cap`).
pub fn min_distance(code: &LinearCode, cap: u64) -> Result<CodeParams> {
    let q = code.spec.q();
    let mut total: u64 = 1;
    for _ in 0..code.k {
        total = total
            .checked_mul(q)
            .filter(|&t| t <= cap)
            .ok_or(Error::CapExceeded { what: "codeword enumeration", cap })?;
    }
    let mut best = usize::MAX;
    for msg_code in 1..total {
        let mut msg = Vec::with_capacity(code.k);
        let mut c = msg_code;
        for _ in 0..code.k {
            msg.push(code.spec.element_from_index(c % q));
            c /= q;
        }
        let mut weight = 0usize;
        for j in 0..code.n {
            let mut acc = code.spec.zero();
            for (i, m) in msg.iter().enumerate() {
                if !m.is_zero() {
                    acc = &acc + &(m * &code.gen_matrix[i][j]);
                }
            }
            if !acc.is_zero() {
                weight += 1;
            }
        }
        best = best.min(weight);
    }
    Ok(CodeParams::new(code.n, code.k, best))
}

/// The q+1 points of the normal rational curve in PG(deg, q): the
/// evaluations `(1, x, ..., x^deg)` in element order, then the point at
/// infinity `(0, ..., 0, 1)`.
pub fn nrc_points(deg: usize, spec: &Arc<FieldSpec>) -> Vec<Subspace> {
    let n = deg + 1;
    let mut out = Vec::with_capacity(spec.q() as usize + 1);
    for x in spec.elements() {
        let mut row = Vec::with_capacity(n);
        let mut pw = spec.one();
        for _ in 0..n {
            row.push(pw.clone());
            pw = &pw * &x;
        }
        out.push(Subspace::from_generators(spec, n, &[row]).expect("nonzero row"));
    }
    let mut infinity = vec![spec.zero(); n];
    infinity[n - 1] = spec.one();
    out.push(Subspace::from_generators(spec, n, &[infinity]).expect("nonzero row"));
    out
}

/// Whether every r-subset of the points' representative vectors has rank r.
/// The number of subsets C(len, r) must stay within `cap`.
pub fn arc_check(points: &[Subspace], r: usize, cap: u64) -> Result<bool> {
    let Some(first) = points.first() else {
        return Err(Error::BadParameters("point list must be nonempty"));
    };
    let n = first.n();
    if r > n {
        return Err(Error::BadParameters("rank r cannot exceed the ambient dimension"));
    }
    for p in points {
        if p.n() != n || !p.spec().same_field(first.spec()) {
            return Err(Error::AmbientMismatch);
        }
        if p.k() != 1 {
            return Err(Error::BadParameters("arc points must be 1-dimensional"));
        }
    }
    if r > points.len() {
        return Ok(true);
    }
    let mut subsets: u64 = 1;
    for i in 0..r as u64 {
        subsets = subsets
            .checked_mul(points.len() as u64 - i)
            .filter(|&s| s / (i + 1) <= cap)
            .ok_or(Error::CapExceeded { what: "r-subset enumeration", cap })?
            / (i + 1);
    }
    // Walk r-subsets with a simple index odometer.
    let mut idx: Vec<usize> = (0..r).collect();
    loop {
        let rows: Vec<Vec<FieldElement>> = idx
            .iter()
            .map(|&i| points[i].basis()[0].clone())
            .collect();
        if mat::rank(&rows) != r {
            return Ok(false);
        }
        // Next combination in lexicographic order.
        let mut i = r;
        loop {
            if i == 0 {
                return Ok(true);
            }
            i -= 1;
            if idx[i] < points.len() - (r - i) {
                idx[i] += 1;
                for j in i + 1..r {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Reed-Solomon evaluation code: rows evaluate `1, x, ..., x^{k-1}` at the
/// first `len` NRC points (the infinity point, used only when
/// `len = q + 1`, extracts the coefficient of `x^{k-1}`).
pub fn rs_code(spec: &Arc<FieldSpec>, k: usize, len: usize) -> Result<LinearCode> {
    let q = spec.q() as usize;
    if k < 1 || k > len || len > q + 1 {
        return Err(Error::BadParameters("need 1 <= k <= len <= q + 1"));
    }
    let points: Vec<FieldElement> = spec.elements().take(len).collect();
    let with_infinity = len == q + 1;
    let mut rows = Vec::with_capacity(k);
    for i in 0..k {
        let mut row = Vec::with_capacity(len);
        for x in points.iter().take(if with_infinity { len - 1 } else { len }) {
            row.push(x.pow(i as u64));
        }
        if with_infinity {
            row.push(if i == k - 1 { spec.one() } else { spec.zero() });
        }
        rows.push(row);
    }
    let code = LinearCode::from_rows(spec, len, &rows)?;
    assert_eq!(code.k(), k, "evaluation rows are linearly independent");
    Ok(code)
}

/// Oracle count of cyclic codes of length n (monic divisors of x^n - 1,
/// enumerated subset by subset) next to the per-dimension formula values
/// `(q)_k / (q^2 - q)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicCodeCount {
    /// Number of distinct monic divisors of x^n - 1 over GF(q), including 1
    /// and x^n - 1 (the full and zero codes).
    pub oracle: u64,
    pub num_cosets: usize,
    /// Index k = 0..=n.
    pub formula_values: Vec<BigRational>,
}

/// Count cyclic codes of length n over GF(q) by enumerating divisor subsets
/// of the irreducible factor list, and report the formula values alongside.
pub fn count_cyclic_codes(n: usize, spec: &Arc<FieldSpec>) -> Result<CyclicCodeCount> {
    use alloc::collections::BTreeSet;
    use alloc::string::ToString;

    let factors = factor_xn_minus_1(n, spec)?;
    let f = factors.len();
    if f > 24 {
        return Err(Error::CapExceeded { what: "divisor-subset enumeration", cap: 1 << 24 });
    }
    let mut divisors: BTreeSet<alloc::string::String> = BTreeSet::new();
    for mask in 0u64..(1 << f) {
        let mut prod = Poly::one(spec);
        for (i, factor) in factors.iter().enumerate() {
            if mask >> i & 1 == 1 {
                prod = &prod * factor;
            }
        }
        divisors.insert(prod.to_string());
    }
    let q = spec.q();
    let denom = num_bigint::BigInt::from(q) * num_bigint::BigInt::from(q)
        - num_bigint::BigInt::from(q);
    let formula_values = (0..=n)
        .map(|k| BigRational::new(falling_factorial(q as i64, k), denom.clone()))
        .collect();
    Ok(CyclicCodeCount {
        oracle: divisors.len() as u64,
        num_cosets: f,
        formula_values,
    })
}
