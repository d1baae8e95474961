//! Structural invariants checked exhaustively at desk scale, or on seeded
//! random samples where the state space is too large.

use std::collections::BTreeSet;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qdk_core::design::{
    count_splitting, count_splitting_for, splitting_subspaces, verify_design, DesignCandidate,
};
use qdk_core::gf::{FieldElement, FieldSpec};
use qdk_core::grassmann::{enumerate_subspaces, gaussian_binomial, Subspace};
use qdk_core::group::{
    act, group_closure, invariant_subspaces, orbit, singer_matrix, sym_power_rep, GroupElement,
    MatrixGroup,
};
use qdk_core::poly::{
    brute_count_split_polys, cyclotomic_cosets, factor_xn_minus_1, falling_factorial,
    poly_gcd, stirling_first, Poly, SplitPolyMode,
};
use qdk_core::{DEFAULT_CLOSURE_CAP, DEFAULT_ENUM_CAP, DEFAULT_SEARCH_CAP};

/// Prime powers up to the bound, as (p, m) pairs.
fn prime_powers(bound: u64) -> Vec<(u64, usize)> {
    let mut out = Vec::new();
    for p in 2..=bound {
        if !(2..p).take_while(|d| d * d <= p).any(|d| p % d == 0) {
            let mut q = p;
            let mut m = 1;
            while q <= bound {
                out.push((p, m));
                match q.checked_mul(p) {
                    Some(next) if next <= bound => {
                        q = next;
                        m += 1;
                    }
                    _ => break,
                }
            }
        }
    }
    out
}

fn rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0x5eed)
}

fn random_element(spec: &Arc<FieldSpec>, rng: &mut ChaCha8Rng) -> FieldElement {
    spec.element_from_index(rng.gen_range(0..spec.q()))
}

fn random_subspace(spec: &Arc<FieldSpec>, n: usize, k: usize, rng: &mut ChaCha8Rng) -> Subspace {
    loop {
        let rows: Vec<Vec<FieldElement>> = (0..k)
            .map(|_| (0..n).map(|_| random_element(spec, rng)).collect())
            .collect();
        let s = Subspace::from_generators(spec, n, &rows).unwrap();
        if s.k() == k {
            return s;
        }
    }
}

fn random_gl(spec: &Arc<FieldSpec>, n: usize, rng: &mut ChaCha8Rng) -> GroupElement {
    loop {
        let rows: Vec<Vec<FieldElement>> = (0..n)
            .map(|_| (0..n).map(|_| random_element(spec, rng)).collect())
            .collect();
        if let Ok(g) = GroupElement::new(spec, &rows) {
            return g;
        }
    }
}

// --------------------------------------------------------------------------
// gf
// --------------------------------------------------------------------------

#[test]
fn field_axioms_small_fields() {
    let mut rng = rng();
    for (p, m) in prime_powers(64) {
        let spec = FieldSpec::new(p, m).unwrap();
        // Exhaustive: every nonzero element has a working inverse.
        for e in spec.elements().skip(1) {
            assert!(
                (&e * &e.inverse().unwrap()).is_one(),
                "a * a^-1 = 1 in GF({})",
                spec.q()
            );
        }
        // Random samples: associativity, commutativity, distributivity.
        for _ in 0..40 {
            let a = random_element(&spec, &mut rng);
            let b = random_element(&spec, &mut rng);
            let c = random_element(&spec, &mut rng);
            assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            assert_eq!(&a + &b, &b + &a);
            assert_eq!(&a * &b, &b * &a);
            assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }
    }
}

#[test]
fn frobenius_is_a_ring_map() {
    for (p, m) in prime_powers(64) {
        let spec = FieldSpec::new(p, m).unwrap();
        let elems: Vec<FieldElement> = spec.elements().collect();
        for a in &elems {
            for b in &elems {
                let sum = a + b;
                assert_eq!(sum.frobenius(1), &a.frobenius(1) + &b.frobenius(1));
                let prod = a * b;
                assert_eq!(prod.frobenius(1), &a.frobenius(1) * &b.frobenius(1));
            }
        }
    }
}

#[test]
fn primitive_elements_up_to_1024() {
    for (p, m) in prime_powers(1024) {
        let spec = FieldSpec::new(p, m).unwrap();
        let g = spec.primitive_element();
        assert_eq!(g.order().unwrap(), spec.q() - 1, "GF({})", spec.q());
    }
}

#[test]
fn minimal_polynomials_vanish_and_are_irreducible() {
    for (p, m) in prime_powers(64) {
        let spec = FieldSpec::new(p, m).unwrap();
        let divisors: Vec<usize> = (1..=m).filter(|d| m % d == 0).collect();
        for e in spec.elements() {
            for &d in &divisors {
                let mp = e.minimal_polynomial(d).unwrap();
                assert!(mp.is_monic());
                assert!(qdk_core::poly::is_irreducible(&mp).unwrap());
                assert_eq!((m / d) % mp.degree().unwrap(), 0);
                // Lift the polynomial back up and evaluate at e.
                let embed = qdk_core::gf::SubfieldEmbedding::new(&spec, d).unwrap();
                let lifted: Vec<FieldElement> =
                    mp.coeffs().iter().map(|c| embed.lift(c)).collect();
                let back = Poly::from_coeffs(&spec, lifted).unwrap();
                assert!(back.eval(&e).is_zero());
            }
        }
    }
}

// --------------------------------------------------------------------------
// poly
// --------------------------------------------------------------------------

#[test]
fn xn_minus_1_factors_multiply_back() {
    for (label_q, spec) in [
        (2u64, FieldSpec::new(2, 1).unwrap()),
        (3, FieldSpec::new(3, 1).unwrap()),
        (4, FieldSpec::new(2, 2).unwrap()),
        (5, FieldSpec::new(5, 1).unwrap()),
    ] {
        for n in 1..=30usize {
            if num_integer::gcd(n as u64, label_q) != 1 {
                continue;
            }
            let factors = factor_xn_minus_1(n, &spec).unwrap();
            let cosets = cyclotomic_cosets(n, spec.q()).unwrap();
            assert_eq!(factors.len(), cosets.cosets().len(), "q={label_q} n={n}");
            let mut coset_sizes: Vec<usize> = cosets.cosets().iter().map(Vec::len).collect();
            let mut factor_degrees: Vec<usize> =
                factors.iter().map(|f| f.degree().unwrap()).collect();
            coset_sizes.sort_unstable();
            factor_degrees.sort_unstable();
            assert_eq!(coset_sizes, factor_degrees, "q={label_q} n={n}");
            let prod = factors.iter().fold(Poly::one(&spec), |acc, f| &acc * f);
            assert_eq!(prod, Poly::xn_minus_one(&spec, n), "q={label_q} n={n}");
        }
    }
}

#[test]
fn stirling_expands_falling_factorial() {
    for n in 0..=10usize {
        for q in 2..=16i64 {
            let mut total = BigInt::zero();
            for k in 0..=n {
                total += stirling_first(n, k).unwrap() * BigInt::from(q).pow(k as u32);
            }
            assert_eq!(total, falling_factorial(q, n), "n={n} q={q}");
        }
    }
}

#[test]
fn split_poly_count_matches_binomial() {
    // The brute-force count and C(q, n), computed independently.
    fn binomial(n: u64, k: u64) -> BigUint {
        let mut num = BigUint::one();
        let mut den = BigUint::one();
        for i in 0..k {
            num *= BigUint::from(n - i);
            den *= BigUint::from(i + 1);
        }
        num / den
    }
    for (p, m) in prime_powers(7) {
        let spec = FieldSpec::new(p, m).unwrap();
        let q = spec.q();
        for n in 1..=q as usize {
            let got = brute_count_split_polys(
                n,
                &spec,
                SplitPolyMode::MonicDistinctRoots,
                DEFAULT_SEARCH_CAP,
            )
            .unwrap();
            assert_eq!(BigUint::from(got), binomial(q, n as u64), "q={q} n={n}");
        }
    }
}

#[test]
fn divmod_round_trip_seeded() {
    let mut rng = rng();
    for (p, m) in [(2, 1), (3, 1), (2, 2), (5, 1)] {
        let spec = FieldSpec::new(p, m).unwrap();
        for _ in 0..50 {
            let da = rng.gen_range(0..8usize);
            let db = rng.gen_range(0..5usize);
            let a = Poly::from_coeffs(
                &spec,
                (0..=da).map(|_| random_element(&spec, &mut rng)).collect(),
            )
            .unwrap();
            let b = Poly::from_coeffs(
                &spec,
                (0..=db).map(|_| random_element(&spec, &mut rng)).collect(),
            )
            .unwrap();
            if b.is_zero() {
                continue;
            }
            let (q, r) = a.divmod(&b).unwrap();
            assert_eq!(&(&q * &b) + &r, a);
            if !r.is_zero() {
                assert!(r.degree().unwrap() < b.degree().unwrap());
            }
            if !a.is_zero() {
                let g = poly_gcd(&a, &b).unwrap();
                assert!(a.divmod(&g).unwrap().1.is_zero());
                assert!(b.divmod(&g).unwrap().1.is_zero());
            }
        }
    }
}

// --------------------------------------------------------------------------
// grassmann
// --------------------------------------------------------------------------

#[test]
fn rref_canonical_under_row_operations() {
    let mut rng = rng();
    for (p, m) in [(2u64, 1usize), (3, 1), (2, 2)] {
        let spec = FieldSpec::new(p, m).unwrap();
        for _ in 0..60 {
            let n = rng.gen_range(1..=6usize);
            let k = rng.gen_range(0..=n);
            let s = random_subspace(&spec, n, k, &mut rng);
            // Scramble: random invertible combinations of the basis rows.
            if k == 0 {
                continue;
            }
            let mut rows = s.basis().to_vec();
            for _ in 0..8 {
                let i = rng.gen_range(0..k);
                let j = rng.gen_range(0..k);
                if i != j {
                    let c = random_element(&spec, &mut rng);
                    let scaled: Vec<FieldElement> =
                        rows[j].iter().map(|x| &c * x).collect();
                    rows[i] = rows[i]
                        .iter()
                        .zip(&scaled)
                        .map(|(a, b)| a + b)
                        .collect();
                } else {
                    loop {
                        let c = random_element(&spec, &mut rng);
                        if !c.is_zero() {
                            rows[i] = rows[i].iter().map(|x| &c * x).collect();
                            break;
                        }
                    }
                }
            }
            rows.reverse();
            let again = Subspace::from_generators(&spec, n, &rows).unwrap();
            assert_eq!(s, again);
        }
    }
}

#[test]
fn q_pascal_and_duality() {
    for q in [2u64, 3, 4, 5] {
        for n in 1..=12i64 {
            for k in 0..=n {
                let lhs = gaussian_binomial(n, k, q);
                let rhs = BigUint::from(q).pow(k as u32) * gaussian_binomial(n - 1, k, q)
                    + gaussian_binomial(n - 1, k - 1, q);
                assert_eq!(lhs, rhs, "Pascal at n={n} k={k} q={q}");
                assert_eq!(lhs, gaussian_binomial(n, n - k, q), "duality");
            }
        }
    }
}

#[test]
fn subspace_metric_axioms_exhaustive_f2_cubed() {
    let f2 = FieldSpec::new(2, 1).unwrap();
    let mut all: Vec<Subspace> = Vec::new();
    for k in 0..=3 {
        all.extend(enumerate_subspaces(&f2, 3, k, DEFAULT_ENUM_CAP).unwrap());
    }
    assert_eq!(all.len(), 16);
    for u in &all {
        for v in &all {
            let duv = u.distance(v).unwrap();
            assert_eq!(duv, v.distance(u).unwrap());
            assert_eq!(duv == 0, u == v);
            for w in &all {
                assert!(duv <= u.distance(w).unwrap() + w.distance(v).unwrap());
            }
        }
    }
}

#[test]
fn modular_law_on_random_pairs() {
    let mut rng = rng();
    for (p, m) in [(2u64, 1usize), (3, 1)] {
        let spec = FieldSpec::new(p, m).unwrap();
        for _ in 0..80 {
            let n = rng.gen_range(1..=5usize);
            let u = random_subspace(&spec, n, rng.gen_range(0..=n), &mut rng);
            let v = random_subspace(&spec, n, rng.gen_range(0..=n), &mut rng);
            let sum = u.sum(&v).unwrap().k();
            let meet = u.intersect(&v).unwrap().k();
            assert_eq!(sum + meet, u.k() + v.k());
        }
    }
}

// --------------------------------------------------------------------------
// group
// --------------------------------------------------------------------------

#[test]
fn orbits_partition_the_grassmannian() {
    let f2 = FieldSpec::new(2, 1).unwrap();
    let singer = group_closure(&[singer_matrix(2, 1, 3).unwrap()], DEFAULT_CLOSURE_CAP).unwrap();
    let points: Vec<Subspace> = enumerate_subspaces(&f2, 3, 1, DEFAULT_ENUM_CAP)
        .unwrap()
        .collect();
    let mut seen: BTreeSet<Subspace> = BTreeSet::new();
    let mut orbit_count = 0;
    for u in &points {
        let orb = orbit(u, &singer).unwrap();
        // Each element of the orbit generates the same orbit.
        for v in &orb {
            assert_eq!(orbit(v, &singer).unwrap(), orb);
        }
        assert_eq!(singer.order().unwrap() % orb.len(), 0, "orbit divides group order");
        if !seen.contains(u) {
            orbit_count += 1;
            seen.extend(orb);
        }
    }
    assert_eq!(seen.len(), points.len());
    assert_eq!(orbit_count, 1, "the Singer cycle is transitive on points");
}

#[test]
fn invariant_subspaces_are_the_singleton_orbits() {
    let f3 = FieldSpec::new(3, 1).unwrap();
    let rot = GroupElement::from_index_rows(&f3, &[vec![0, 2], vec![1, 2]]).unwrap();
    let refl = GroupElement::from_index_rows(&f3, &[vec![0, 1], vec![1, 0]]).unwrap();
    let d3 = group_closure(&[rot, refl], DEFAULT_CLOSURE_CAP).unwrap();
    for k in 0..=2usize {
        let inv = invariant_subspaces(&d3, k, DEFAULT_ENUM_CAP).unwrap();
        let by_orbit: Vec<Subspace> = enumerate_subspaces(&f3, 2, k, DEFAULT_ENUM_CAP)
            .unwrap()
            .filter(|u| orbit(u, &d3).unwrap().len() == 1)
            .collect();
        assert_eq!(inv, by_orbit, "k={k}");
    }
}

#[test]
fn action_axiom_on_random_triples() {
    let mut rng = rng();
    for (p, m) in [(2u64, 1usize), (3, 1)] {
        let spec = FieldSpec::new(p, m).unwrap();
        for _ in 0..150 {
            let n = rng.gen_range(2..=4usize);
            let k = rng.gen_range(0..=n);
            let u = random_subspace(&spec, n, k, &mut rng);
            let g = random_gl(&spec, n, &mut rng);
            let h = random_gl(&spec, n, &mut rng);
            let lhs = act(&act(&u, &g).unwrap(), &h).unwrap();
            let rhs = act(&u, &g.checked_mul(&h).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
            assert_eq!(act(&u, &g).unwrap().k(), u.k());
        }
    }
}

#[test]
fn sym_power_is_a_homomorphism() {
    let mut rng = rng();
    for (p, m) in [(2u64, 1usize), (3, 1)] {
        let spec = FieldSpec::new(p, m).unwrap();
        for deg in 1..=4usize {
            for _ in 0..50 {
                let g = random_gl(&spec, 2, &mut rng);
                let h = random_gl(&spec, 2, &mut rng);
                let lhs = sym_power_rep(&g.checked_mul(&h).unwrap(), deg).unwrap();
                let rhs = sym_power_rep(&g, deg)
                    .unwrap()
                    .checked_mul(&sym_power_rep(&h, deg).unwrap())
                    .unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }
}

// --------------------------------------------------------------------------
// design
// --------------------------------------------------------------------------

#[test]
fn complete_design_law() {
    for n in 1..=5usize {
        for k in 0..=n {
            let f2 = FieldSpec::new(2, 1).unwrap();
            let cand = DesignCandidate::complete(&f2, n, k, DEFAULT_ENUM_CAP).unwrap();
            for t in 0..=k {
                let report = verify_design(&cand, t, DEFAULT_ENUM_CAP).unwrap();
                assert!(report.is_design, "n={n} k={k} t={t}");
                let expect = gaussian_binomial((n - t) as i64, (k - t) as i64, 2);
                assert_eq!(BigUint::from(report.lambda.unwrap()), expect);
            }
        }
    }
}

#[test]
fn splitting_witnesses_reverify_independently() {
    for (p, base_m, r, s) in [(2u64, 1usize, 1usize, 2usize), (2, 1, 2, 2), (3, 1, 1, 2)] {
        let spec = FieldSpec::new(p, base_m).unwrap();
        let n = r * s;
        for w in splitting_subspaces(p, base_m, r, s, DEFAULT_ENUM_CAP).unwrap() {
            assert!(w.direct_sum_ok);
            assert_eq!(w.translates[0], w.subspace);
            assert_eq!(w.translates.len(), s);
            // Independent check: sum of the translates has full dimension.
            let mut total = Subspace::zero(&spec, n);
            for t in &w.translates {
                assert_eq!(t.k(), r);
                total = total.sum(t).unwrap();
            }
            assert_eq!(total.k(), n);
        }
    }
}

#[test]
fn splitting_count_invariant_under_galois_conjugation() {
    for (p, base_m, r, s) in [(2u64, 1usize, 1usize, 2usize), (2, 1, 2, 2), (3, 1, 1, 2)] {
        let base = count_splitting(p, base_m, r, s, DEFAULT_ENUM_CAP).unwrap();
        let t_op = singer_matrix(p, base_m, r * s).unwrap();
        let q = FieldSpec::new(p, base_m).unwrap().q();
        let conjugate = t_op.pow(q); // multiplication by alpha^q
        let conj = count_splitting_for(&conjugate, r, s, DEFAULT_ENUM_CAP).unwrap();
        assert_eq!(base.s_count, conj.s_count, "(q,r,s)=({q},{r},{s})");
        assert!(conj.quotient_check);
    }
}

#[test]
fn design_reports_invariant_under_relabeling() {
    let mut rng = rng();
    let f2 = FieldSpec::new(2, 1).unwrap();
    let blocks: Vec<Subspace> =
        splitting_subspaces(2, 1, 2, 2, DEFAULT_ENUM_CAP)
            .unwrap()
            .into_iter()
            .map(|w| w.subspace)
            .collect();
    let cand = DesignCandidate::new(&f2, 4, 2, blocks.clone()).unwrap();
    let g = random_gl(&f2, 4, &mut rng);
    let moved: Vec<Subspace> = blocks.iter().map(|b| act(b, &g).unwrap()).collect();
    let moved_cand = DesignCandidate::new(&f2, 4, 2, moved).unwrap();
    for t in 0..=2 {
        assert_eq!(
            verify_design(&cand, t, DEFAULT_ENUM_CAP).unwrap(),
            verify_design(&moved_cand, t, DEFAULT_ENUM_CAP).unwrap()
        );
    }
}

// --------------------------------------------------------------------------
// code
// --------------------------------------------------------------------------

#[test]
fn cyclic_codes_are_shift_closed() {
    use qdk_core::code::{code_to_linear, cyclic_code_from_roots};
    let f2 = FieldSpec::new(2, 1).unwrap();
    let f3 = FieldSpec::new(3, 1).unwrap();
    let cases: Vec<(Arc<FieldSpec>, usize, Vec<usize>)> = vec![
        (f2.clone(), 7, vec![1, 2, 4]),
        (f2.clone(), 7, vec![0]),
        (f2.clone(), 15, vec![1, 2, 4, 8, 3, 6, 12, 9]),
        (f3.clone(), 4, vec![1, 3]),
        (f3.clone(), 8, vec![1, 3, 2, 6]),
    ];
    for (spec, n, roots) in cases {
        let code = cyclic_code_from_roots(&spec, n, &roots).unwrap();
        let lin = code_to_linear(&code);
        let q = spec.q();
        let words = q.pow(lin.k() as u32);
        assert!(words <= 1 << 12);
        let space = lin.row_space();
        for msg_code in 0..words {
            let mut msg = Vec::with_capacity(lin.k());
            let mut c = msg_code;
            for _ in 0..lin.k() {
                msg.push(spec.element_from_index(c % q));
                c /= q;
            }
            let mut word = vec![spec.zero(); n];
            for (i, m) in msg.iter().enumerate() {
                for (j, x) in lin.gen_matrix()[i].iter().enumerate() {
                    word[j] = &word[j] + &(m * x);
                }
            }
            let mut shifted = word.clone();
            shifted.rotate_right(1);
            if shifted.iter().all(FieldElement::is_zero) {
                continue;
            }
            let shifted_line = Subspace::from_generators(&spec, n, &[shifted]).unwrap();
            assert!(space.contains(&shifted_line).unwrap(), "n={n} q={q}");
        }
    }
}

#[test]
fn cyclic_code_count_oracle_matches_coset_count() {
    use qdk_core::code::count_cyclic_codes;
    for (label_q, spec) in [
        (2u64, FieldSpec::new(2, 1).unwrap()),
        (3, FieldSpec::new(3, 1).unwrap()),
    ] {
        for n in 1..=20usize {
            if num_integer::gcd(n as u64, label_q) != 1 {
                continue;
            }
            let count = count_cyclic_codes(n, &spec).unwrap();
            let cosets = cyclotomic_cosets(n, label_q).unwrap();
            assert_eq!(
                count.oracle,
                1u64 << cosets.cosets().len(),
                "q={label_q} n={n}"
            );
            assert_eq!(count.num_cosets, cosets.cosets().len());
        }
    }
}

#[test]
fn group_membership_consistency_for_trivial_group() {
    // The trivial group fixes everything; cross-check against the generic path.
    let f2 = FieldSpec::new(2, 1).unwrap();
    let trivial = MatrixGroup::trivial(&f2, 4);
    for k in 0..=4usize {
        let inv = invariant_subspaces(&trivial, k, DEFAULT_ENUM_CAP).unwrap();
        let expect = gaussian_binomial(4, k as i64, 2);
        assert_eq!(BigUint::from(inv.len() as u64), expect);
    }
}
