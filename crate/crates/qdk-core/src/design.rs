//! q-ary t-designs: containment counting over block sets of k-subspaces,
//! splitting-subspace block sets, the projective-line Steiner system, and
//! design reports for group-invariant subgrassmannians.
//!
//! A block set is a t-(n, k, lambda; q) design when every t-subspace of
//! F_q^n lies in exactly lambda blocks. [`verify_design`] counts every
//! containment exactly and also asserts the double-counting identity
//! `sum of counts = #blocks * [k, t]_q` on each run.

use alloc::collections::BTreeMap;
use alloc::collections::BTreeSet;
use alloc::sync::Arc;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::gf::FieldSpec;
use crate::grassmann::{enumerate_subspaces, gaussian_binomial, Subspace};
use crate::group::{act, invariant_subspaces, singer_matrix, GroupElement, MatrixGroup};
use crate::mat;
use crate::{Error, Result};

/// A candidate block set: sorted, deduplicated k-subspaces of F_q^n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DesignCandidate {
    spec: Arc<FieldSpec>,
    n: usize,
    k: usize,
    blocks: Vec<Subspace>,
}

impl DesignCandidate {
    /// Block dimension `k` is explicit so the empty block set stays typed.
    pub fn new(
        spec: &Arc<FieldSpec>,
        n: usize,
        k: usize,
        blocks: Vec<Subspace>,
    ) -> Result<DesignCandidate> {
        for b in &blocks {
            if b.n() != n || !b.spec().same_field(spec) {
                return Err(Error::AmbientMismatch);
            }
            if b.k() != k {
                return Err(Error::DimensionMismatch);
            }
        }
        let set: BTreeSet<Subspace> = blocks.into_iter().collect();
        Ok(DesignCandidate {
            spec: Arc::clone(spec),
            n,
            k,
            blocks: set.into_iter().collect(),
        })
    }

    /// The complete design: every k-subspace of F_q^n.
    pub fn complete(spec: &Arc<FieldSpec>, n: usize, k: usize, cap: u64) -> Result<DesignCandidate> {
        let blocks: Vec<Subspace> = enumerate_subspaces(spec, n, k, cap)?.collect();
        DesignCandidate::new(spec, n, k, blocks)
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

    pub fn blocks(&self) -> &[Subspace] {
        &self.blocks
    }
}

/// Exact containment statistics of a block set at one strength t.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DesignReport {
    pub t: usize,
    pub lambda_min: u64,
    pub lambda_max: u64,
    /// Present iff the count is constant.
    pub lambda: Option<u64>,
    pub is_design: bool,
    pub num_t_subspaces: u64,
    /// containment count -> number of t-subspaces with that count.
    pub histogram: BTreeMap<u64, u64>,
    pub num_blocks: u64,
}

/// Count, for every t-subspace of the ambient space, how many blocks contain
/// it. `is_design` iff the count is constant.
pub fn verify_design(cand: &DesignCandidate, t: usize, cap: u64) -> Result<DesignReport> {
    if cand.n == 0 {
        return Err(Error::EmptyAmbient);
    }
    if t > cand.k {
        return Err(Error::BadParameters("strength t must satisfy t <= k"));
    }
    let mut histogram: BTreeMap<u64, u64> = BTreeMap::new();
    let mut num_t_subspaces = 0u64;
    let mut total = BigUint::zero();
    let mut lambda_min = u64::MAX;
    let mut lambda_max = 0u64;
    for tsub in enumerate_subspaces(&cand.spec, cand.n, t, cap)? {
        let mut count = 0u64;
        for b in &cand.blocks {
            if b.contains(&tsub)? {
                count += 1;
            }
        }
        num_t_subspaces += 1;
        total += count;
        lambda_min = lambda_min.min(count);
        lambda_max = lambda_max.max(count);
        *histogram.entry(count).or_insert(0) += 1;
    }
    // Double counting: each block holds exactly [k, t]_q t-subspaces.
    let expected = BigUint::from(cand.blocks.len())
        * gaussian_binomial(cand.k as i64, t as i64, cand.spec.q());
    assert_eq!(total, expected, "double-counting identity must hold");
    let is_design = lambda_min == lambda_max;
    Ok(DesignReport {
        t,
        lambda_min,
        lambda_max,
        lambda: is_design.then_some(lambda_min),
        is_design,
        num_t_subspaces,
        histogram,
        num_blocks: cand.blocks.len() as u64,
    })
}

/// One report per strength t = 0..=k.
pub fn lambda_profile(cand: &DesignCandidate, cap: u64) -> Result<Vec<DesignReport>> {
    (0..=cand.k).map(|t| verify_design(cand, t, cap)).collect()
}

/// An r-dimensional subspace W whose translates W, T(W), ..., T^{s-1}(W)
/// sum directly to the whole space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplittingWitness {
    pub subspace: Subspace,
    /// translates[i] = T^i(W); translates[0] = W.
    pub translates: Vec<Subspace>,
    pub direct_sum_ok: bool,
}

/// All T-splitting r-subspaces for an explicit invertible operator T on
/// F_q^n with n = r * s, sorted canonically.
pub fn splitting_subspaces_for(
    t_op: &GroupElement,
    r: usize,
    s: usize,
    cap: u64,
) -> Result<Vec<SplittingWitness>> {
    if r == 0 || s == 0 || t_op.n() != r * s {
        return Err(Error::BadFactorization);
    }
    let n = t_op.n();
    let spec = t_op.spec();
    let mut powers = Vec::with_capacity(s);
    let mut acc = GroupElement::identity(spec, n);
    for _ in 0..s {
        powers.push(acc.clone());
        acc = &acc * t_op;
    }
    let mut out = Vec::new();
    for w in enumerate_subspaces(spec, n, r, cap)? {
        let translates: Vec<Subspace> = powers
            .iter()
            .map(|g| act(&w, g))
            .collect::<Result<_>>()?;
        let stacked: Vec<_> = translates
            .iter()
            .flat_map(|t| t.basis().iter().cloned())
            .collect();
        if mat::rank(&stacked) == n {
            out.push(SplittingWitness { subspace: w, translates, direct_sum_ok: true });
        }
    }
    out.sort_by(|a, b| a.subspace.cmp(&b.subspace));
    Ok(out)
}

/// T-splitting subspaces for T = multiplication by the canonical generator
/// of GF(q^{rs}) over GF(q), q = p^base_m, in the power basis.
pub fn splitting_subspaces(
    p: u64,
    base_m: usize,
    r: usize,
    s: usize,
    cap: u64,
) -> Result<Vec<SplittingWitness>> {
    let n = splitting_dimension(r, s)?;
    let t_op = singer_matrix(p, base_m, n)?;
    splitting_subspaces_for(&t_op, r, s, cap)
}

fn splitting_dimension(r: usize, s: usize) -> Result<usize> {
    if r == 0 || s == 0 {
        return Err(Error::BadFactorization);
    }
    r.checked_mul(s).ok_or(Error::BadFactorization)
}

/// Subspace count S, ordered-basis count N, and the quotient identity
/// `N = S * |GL(r, q)|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplittingCount {
    /// Number of splitting r-subspaces.
    pub s_count: u64,
    /// Number of ordered r-tuples of vectors spanning a splitting subspace,
    /// counted by independent enumeration of all tuples.
    pub n_count: u64,
    /// |GL(r, q)| = prod_{i=0}^{r-1} (q^r - q^i).
    pub gl_order: BigUint,
    /// Whether N = S * |GL(r, q)| held.
    pub quotient_check: bool,
}

/// Count splitting subspaces two ways: directly (S) and through ordered
/// spanning tuples (N), then check the quotient identity.
pub fn count_splitting(
    p: u64,
    base_m: usize,
    r: usize,
    s: usize,
    cap: u64,
) -> Result<SplittingCount> {
    let n = splitting_dimension(r, s)?;
    let t_op = singer_matrix(p, base_m, n)?;
    count_splitting_for(&t_op, r, s, cap)
}

/// As [`count_splitting`] but for an explicit operator.
pub fn count_splitting_for(
    t_op: &GroupElement,
    r: usize,
    s: usize,
    cap: u64,
) -> Result<SplittingCount> {
    let witnesses = splitting_subspaces_for(t_op, r, s, cap)?;
    let spec = t_op.spec();
    let n = t_op.n();
    let q = spec.q();
    let splitting: BTreeSet<&Subspace> = witnesses.iter().map(|w| &w.subspace).collect();

    // Brute-force N: all (q^n)^r ordered tuples of vectors.
    let overflow = Error::CapExceeded { what: "ordered-tuple enumeration", cap };
    let vectors_per_slot = q
        .checked_pow(n as u32)
        .filter(|&v| v <= cap)
        .ok_or(overflow.clone())?;
    let mut tuples: u64 = 1;
    for _ in 0..r {
        tuples = tuples
            .checked_mul(vectors_per_slot)
            .filter(|&t| t <= cap)
            .ok_or(overflow.clone())?;
    }
    let all_vectors: Vec<Vec<_>> = (0..vectors_per_slot)
        .map(|code| {
            let mut v = Vec::with_capacity(n);
            let mut c = code;
            for _ in 0..n {
                v.push(spec.element_from_index(c % q));
                c /= q;
            }
            v
        })
        .collect();
    let mut n_count = 0u64;
    for tuple_code in 0..tuples {
        let mut rows = Vec::with_capacity(r);
        let mut c = tuple_code;
        for _ in 0..r {
            rows.push(all_vectors[(c % vectors_per_slot) as usize].clone());
            c /= vectors_per_slot;
        }
        let span = Subspace::from_generators(spec, n, &rows)?;
        if span.k() == r && splitting.contains(&span) {
            n_count += 1;
        }
    }

    let mut gl_order = BigUint::one();
    let qr = BigUint::from(q).pow(r as u32);
    for i in 0..r {
        gl_order *= &qr - BigUint::from(q).pow(i as u32);
    }
    let quotient_check = BigUint::from(n_count) == BigUint::from(witnesses.len()) * &gl_order;
    Ok(SplittingCount {
        s_count: witnesses.len() as u64,
        n_count,
        gl_order,
        quotient_check,
    })
}

/// Run [`verify_design`] on the splitting-subspace block set at strength t.
pub fn splitting_design_report(
    p: u64,
    base_m: usize,
    r: usize,
    s: usize,
    t: usize,
    cap: u64,
) -> Result<DesignReport> {
    let witnesses = splitting_subspaces(p, base_m, r, s, cap)?;
    let spec = FieldSpec::new(p, base_m)?;
    let blocks = witnesses.into_iter().map(|w| w.subspace).collect();
    let cand = DesignCandidate::new(&spec, r * s, r, blocks)?;
    verify_design(&cand, t, cap)
}

/// Point/line incidence report for the projective space PG(m-1, 2).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PgLinesReport {
    /// Number of points: 2^m - 1.
    pub v: u64,
    /// Number of lines: [m, 2]_2.
    pub b: u64,
    /// Whether every point pair lies on exactly one line.
    pub is_steiner: bool,
}

/// The classical (set-theoretic) design of points and lines of PG(m-1, 2):
/// points are the 1-subspaces of F_2^m, blocks the point triples inside a
/// common 2-subspace. Verifies the Steiner property pair by pair.
pub fn pg_lines_design(m: usize) -> Result<PgLinesReport> {
    if m < 2 {
        return Err(Error::BadParameters("need m >= 2 for lines to exist"));
    }
    if m > 6 {
        return Err(Error::CapExceeded { what: "pg-lines point count 2^m - 1", cap: 63 });
    }
    let f2 = FieldSpec::new(2, 1)?;
    let points: Vec<Subspace> = enumerate_subspaces(&f2, m, 1, crate::DEFAULT_ENUM_CAP)?.collect();
    let v = points.len();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for plane in enumerate_subspaces(&f2, m, 2, crate::DEFAULT_ENUM_CAP)? {
        let mut triple: Vec<usize> = Vec::with_capacity(3);
        for (i, pt) in points.iter().enumerate() {
            if plane.contains(pt)? {
                triple.push(i);
            }
        }
        assert_eq!(triple.len(), 3, "a 2-subspace of F_2^m holds exactly 3 points");
        blocks.push(triple);
    }
    let mut is_steiner = true;
    for i in 0..v {
        for j in i + 1..v {
            let onlines = blocks
                .iter()
                .filter(|b| b.contains(&i) && b.contains(&j))
                .count();
            if onlines != 1 {
                is_steiner = false;
            }
        }
    }
    Ok(PgLinesReport {
        v: v as u64,
        b: blocks.len() as u64,
        is_steiner,
    })
}

/// Design report for the subgrassmannian fixed by a group: blocks are the
/// invariant k-subspaces, verified at strength t.
pub fn triangle_invariant_design(
    group: &MatrixGroup,
    k: usize,
    t: usize,
    cap: u64,
) -> Result<DesignReport> {
    if !group.is_closed() {
        return Err(Error::GroupNotClosed);
    }
    let blocks = invariant_subspaces(group, k, cap)?;
    let cand = DesignCandidate::new(group.spec(), group.n(), k, blocks)?;
    verify_design(&cand, t, cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::group_closure;
    use crate::{DEFAULT_CLOSURE_CAP, DEFAULT_ENUM_CAP};
    use alloc::vec;

    fn gf(p: u64, m: usize) -> Arc<FieldSpec> {
        FieldSpec::new(p, m).unwrap()
    }

    #[test]
    fn complete_design_of_planes() {
        let f2 = gf(2, 1);
        let cand = DesignCandidate::complete(&f2, 3, 2, DEFAULT_ENUM_CAP).unwrap();
        let report = verify_design(&cand, 1, DEFAULT_ENUM_CAP).unwrap();
        assert!(report.is_design);
        assert_eq!(report.lambda, Some(3));
        assert_eq!(report.num_t_subspaces, 7);
    }

    #[test]
    fn empty_block_set_is_degenerate_design() {
        let f2 = gf(2, 1);
        let cand = DesignCandidate::new(&f2, 3, 2, Vec::new()).unwrap();
        for t in 0..=2 {
            let report = verify_design(&cand, t, DEFAULT_ENUM_CAP).unwrap();
            assert!(report.is_design);
            assert_eq!(report.lambda, Some(0));
            assert_eq!(report.num_blocks, 0);
        }
    }

    #[test]
    fn single_block_is_not_a_design() {
        let f2 = gf(2, 1);
        let block = Subspace::from_index_rows(&f2, 3, &[vec![1, 0, 0], vec![0, 1, 0]]).unwrap();
        let cand = DesignCandidate::new(&f2, 3, 2, vec![block]).unwrap();
        let report = verify_design(&cand, 1, DEFAULT_ENUM_CAP).unwrap();
        assert!(!report.is_design);
        assert_eq!(report.lambda, None);
        assert_eq!(report.lambda_min, 0);
        assert_eq!(report.lambda_max, 1);
        assert_eq!(report.histogram.get(&0), Some(&4));
        assert_eq!(report.histogram.get(&1), Some(&3));

        // At t = 0 a singleton block set is trivially a design with lambda 1.
        let report = verify_design(&cand, 0, DEFAULT_ENUM_CAP).unwrap();
        assert!(report.is_design);
        assert_eq!(report.lambda, Some(1));
    }

    #[test]
    fn profile_of_complete_design() {
        let f2 = gf(2, 1);
        let cand = DesignCandidate::complete(&f2, 4, 2, DEFAULT_ENUM_CAP).unwrap();
        let reports = lambda_profile(&cand, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(reports.len(), 3);
        assert_eq!(reports[0].lambda, Some(35)); // all blocks contain the zero space
        assert_eq!(reports[1].lambda, Some(7)); // [3, 1]_2
        assert_eq!(reports[2].lambda, Some(1));
        assert!(reports.iter().all(|r| r.is_design));
    }

    #[test]
    fn splitting_examples() {
        // GF(4) over GF(2): every 1-subspace splits.
        let wits = splitting_subspaces(2, 1, 1, 2, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(wits.len(), 3);
        for w in &wits {
            assert_eq!(w.translates.len(), 2);
            assert_eq!(w.translates[0], w.subspace);
        }

        // s = 1: only the full space.
        let wits = splitting_subspaces(2, 1, 2, 1, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(wits.len(), 1);
        assert_eq!(wits[0].subspace.k(), 2);

        assert_eq!(
            splitting_subspaces(2, 1, 0, 2, DEFAULT_ENUM_CAP).unwrap_err(),
            Error::BadFactorization
        );
    }

    #[test]
    fn count_splitting_examples() {
        let c = count_splitting(2, 1, 1, 2, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!((c.s_count, c.n_count), (3, 3));
        assert_eq!(c.gl_order, BigUint::one());
        assert!(c.quotient_check);

        let c = count_splitting(2, 1, 2, 1, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!((c.s_count, c.n_count), (1, 6));
        assert_eq!(c.gl_order, BigUint::from(6u32));
        assert!(c.quotient_check);

        let c = count_splitting(3, 1, 1, 2, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(c.s_count, 4);
        assert_eq!(c.gl_order, BigUint::from(2u32));
        assert!(c.quotient_check);
    }

    #[test]
    fn splitting_design_small() {
        let report = splitting_design_report(2, 1, 1, 2, 1, DEFAULT_ENUM_CAP).unwrap();
        assert!(report.is_design);
        assert_eq!(report.lambda, Some(1));
        assert_eq!(report.num_blocks, 3);

        let report = splitting_design_report(2, 1, 1, 2, 0, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(report.lambda, Some(3));
    }

    #[test]
    fn splitting_design_gf16_golden() {
        // Frozen from the exhaustive run over all 35 2-subspaces of F_2^4:
        // the 20 splitting subspaces form a 1-design with lambda 4.
        let report = splitting_design_report(2, 1, 2, 2, 1, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(report.num_blocks, 20);
        assert_eq!(report.num_t_subspaces, 15);
        assert!(report.is_design);
        assert_eq!(report.lambda, Some(4));
    }

    #[test]
    fn pg_lines_examples() {
        let r = pg_lines_design(3).unwrap();
        assert_eq!((r.v, r.b, r.is_steiner), (7, 7, true));

        let r = pg_lines_design(2).unwrap();
        assert_eq!((r.v, r.b, r.is_steiner), (3, 1, true));

        let r = pg_lines_design(4).unwrap();
        assert_eq!((r.v, r.b, r.is_steiner), (15, 35, true));

        assert!(pg_lines_design(1).is_err());
        assert!(matches!(pg_lines_design(7), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn triangle_design_on_trivial_and_singer_groups() {
        let f2 = gf(2, 1);
        let trivial = MatrixGroup::trivial(&f2, 3);
        let report = triangle_invariant_design(&trivial, 2, 1, DEFAULT_ENUM_CAP).unwrap();
        assert!(report.is_design);
        assert_eq!(report.lambda, Some(3)); // [n-t, k-t]_q = [2, 1]_2

        let singer = group_closure(
            &[crate::group::singer_matrix(2, 1, 2).unwrap()],
            DEFAULT_CLOSURE_CAP,
        )
        .unwrap();
        let report = triangle_invariant_design(&singer, 1, 1, DEFAULT_ENUM_CAP).unwrap();
        assert!(report.is_design);
        assert_eq!(report.lambda, Some(0));
        assert_eq!(report.num_blocks, 0);
    }
}
