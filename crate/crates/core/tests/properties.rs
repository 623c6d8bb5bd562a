//! Property suites: field laws, exact linear algebra, Hopf axioms on random elements, and
//! the module-category identities on every catalog algebra.

use hopf_blocks::catalog::{self, CATALOG_NAMES};
use hopf_blocks::hopf::HopfData;
use hopf_blocks::linalg::{operator_order, Matrix, OrderVerdict};
use hopf_blocks::repcat::*;
use hopf_blocks::scalar::{FieldElement, FieldSpec};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = BigRational> {
    (-20i64..=20, 1i64..=7).prop_map(|(a, b)| BigRational::new(BigInt::from(a), BigInt::from(b)))
}

fn spec_strategy() -> impl Strategy<Value = FieldSpec> {
    prop_oneof![
        Just(FieldSpec::Rational),
        Just(FieldSpec::Cyclotomic(3)),
        Just(FieldSpec::Cyclotomic(4)),
        Just(FieldSpec::Cyclotomic(5)),
        Just(FieldSpec::Cyclotomic(12)),
        Just(FieldSpec::Prime(7)),
        Just(FieldSpec::Prime(101)),
    ]
}

fn element(spec: FieldSpec) -> BoxedStrategy<FieldElement> {
    match spec {
        FieldSpec::Rational => rational().prop_map(|q| FieldElement::from_rational(FieldSpec::Rational, &q).unwrap()).boxed(),
        FieldSpec::Cyclotomic(n) => prop::collection::vec(rational(), spec.degree())
            .prop_map(move |c| FieldElement::cyclotomic_from_coeffs(n, &c))
            .boxed(),
        FieldSpec::Prime(p) => (0..p as i64).prop_map(move |v| FieldElement::from_i64(spec, v)).boxed(),
    }
}

fn triple() -> impl Strategy<Value = (FieldElement, FieldElement, FieldElement)> {
    spec_strategy().prop_flat_map(|s| (element(s), element(s), element(s)))
}

fn matrix(spec: FieldSpec, rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(prop::collection::vec(-2i64..=2, cols), rows).prop_map(move |rs| {
        Matrix::from_dense(spec, rs.into_iter().map(|r| r.into_iter().map(|x| FieldElement::from_i64(spec, x)).collect()).collect())
            .unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn field_ring_laws((a, b, c) in triple()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &FieldElement::one(a.spec()), a.clone());
    }

    #[test]
    fn field_inverses((a, b, _c) in triple()) {
        if a.is_zero() {
            prop_assert!(a.inv().is_err());
        } else {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
            prop_assert_eq!(&(&b / &a) * &a, b.clone());
        }
    }

    #[test]
    fn galois_maps_are_ring_maps(n in prop::sample::select(vec![3u32, 4, 5, 8, 12]), k in 1u32..24) {
        let spec = FieldSpec::Cyclotomic(n);
        let k = k % n;
        prop_assume!(num_integer::gcd(k, n) == 1);
        let z = FieldElement::zeta(n);
        let a = &(&z * &z) + &FieldElement::from_i64(spec, 3);
        let b = &z - &FieldElement::from_i64(spec, 2);
        prop_assert_eq!((&a * &b).galois(k), &a.galois(k) * &b.galois(k));
        prop_assert_eq!((&a + &b).galois(k), &a.galois(k) + &b.galois(k));
        prop_assert!(z.pow(n as u64).is_one());
    }

    #[test]
    fn rank_plus_nullity(m in (1usize..6, 1usize..6).prop_flat_map(|(r, c)| matrix(FieldSpec::Rational, r, c))) {
        let kernel = m.kernel();
        prop_assert_eq!(m.rank() + kernel.len(), m.cols());
        for v in &kernel {
            prop_assert!(m.mul_vec(v).iter().all(FieldElement::is_zero));
        }
    }

    #[test]
    fn kronecker_mixed_product(
        (a, b, c, d) in (1usize..4, 1usize..4, 1usize..4, 1usize..4, 1usize..4, 1usize..4).prop_flat_map(|(p, q, r, s, t, u)| {
            let sp = FieldSpec::Prime(11);
            (matrix(sp, p, q), matrix(sp, r, s), matrix(sp, q, t), matrix(sp, s, u))
        })
    ) {
        prop_assert_eq!(a.kron(&b).mul(&c.kron(&d)), a.mul(&c).kron(&b.mul(&d)));
        prop_assert_eq!(a.kron(&b).transpose(), a.transpose().kron(&b.transpose()));
    }

    #[test]
    fn inverse_round_trip(m in matrix(FieldSpec::Cyclotomic(4), 3, 3)) {
        match m.inverse() {
            Ok(inv) => prop_assert!(m.mul(&inv).is_identity()),
            Err(_) => prop_assert!(m.rank() < 3),
        }
    }

    /// Signed permutation matrices have finite order; the certificate must be attained.
    #[test]
    fn certified_orders_are_attained(perm in Just((0..5usize).collect::<Vec<_>>()).prop_shuffle(), signs in prop::collection::vec(any::<bool>(), 5)) {
        let q = FieldSpec::Rational;
        let t = Matrix::from_triplets(q, 5, 5, (0..5).map(|i| (perm[i], i, FieldElement::from_i64(q, if signs[i] { -1 } else { 1 }))));
        let cert = operator_order(&t).unwrap();
        let n = cert.gl_order.finite().unwrap();
        prop_assert!(t.pow(n).is_identity());
        for d in hopf_blocks::scalar::divisors(n) {
            if d < n {
                prop_assert!(!t.pow(d).is_identity());
            }
        }
        let p = cert.pgl_order.finite().unwrap();
        prop_assert_eq!(n % p, 0);
        prop_assert!(t.pow(p).as_scalar().is_some());
    }

    #[test]
    fn unipotent_blocks_are_infinite(k in 1i64..5) {
        let q = FieldSpec::Rational;
        let t = Matrix::from_i64(q, &[&[1, k, 0], &[0, 1, 0], &[0, 0, -1]]);
        let cert = operator_order(&t).unwrap();
        prop_assert!(cert.gl_order.is_infinite());
        prop_assert!(!matches!(cert.pgl_order, OrderVerdict::Finite(_)));
    }

    #[test]
    fn hopf_axioms_on_random_elements(
        name in prop::sample::select(vec!["double:Z3", "sweedler", "double:sweedler", "group:S3"]),
        ca in prop::collection::vec(-3i64..=3, 16),
        cb in prop::collection::vec(-3i64..=3, 16),
    ) {
        let h = catalog::get(name).unwrap();
        let a = coeffs(&h, &ca);
        let b = coeffs(&h, &cb);
        let ab = h.mul(&a, &b);
        // Δ(ab) = Δ(a)Δ(b)
        prop_assert_eq!(h.comult_of(&ab), h.tensor_mul(2, &h.comult_of(&a), &h.comult_of(&b)));
        // S(ab) = S(b)S(a)
        prop_assert_eq!(h.antipode_of(&ab), h.mul(&h.antipode_of(&b), &h.antipode_of(&a)));
        prop_assert_eq!(h.counit_of(&ab), &h.counit_of(&a) * &h.counit_of(&b));
        if let Some(r) = h.r_matrix() {
            // Δ^op(a) R = R Δ(a)
            let op = h.permute_legs(&h.comult_of(&a), &[1, 0]);
            prop_assert_eq!(h.tensor_mul(2, &op, r), h.tensor_mul(2, r, &h.comult_of(&a)));
        }
    }
}

fn coeffs(h: &HopfData, c: &[i64]) -> Vec<FieldElement> {
    (0..h.dim()).map(|i| FieldElement::from_i64(h.spec(), c[i % c.len()])).collect()
}

fn ribbon_algebras() -> Vec<std::sync::Arc<HopfData>> {
    CATALOG_NAMES.iter().map(|n| catalog::get(n).unwrap()).filter(|h| h.ribbon().is_some()).collect()
}

/// Small modules for the identities, including every computed character.
fn sample_modules(h: &std::sync::Arc<HopfData>) -> Vec<Module> {
    let mut ms = vec![trivial_module(h), adjoint_module(h)];
    if h.dim() <= 9 {
        ms.push(regular_module(h));
    }
    ms.extend(h.characters().iter().take(2).map(|c| character_module(h, c)));
    ms
}

#[test]
fn balancing_law() {
    for h in ribbon_algebras() {
        let ms = sample_modules(&h);
        for m in &ms {
            for n in &ms {
                let mn = tensor_module(m, n).unwrap();
                let lhs = twist(&mn).unwrap();
                let rhs = monodromy(m, n).unwrap().mul(&twist(m).unwrap().kron(&twist(n).unwrap()));
                assert_eq!(lhs, rhs, "{}: balancing", h.name());
            }
        }
    }
}

#[test]
fn twist_and_braiding_are_natural() {
    for h in ribbon_algebras() {
        let ms = sample_modules(&h);
        for m in &ms {
            for n in &ms {
                let hom = hom_space(m, n).unwrap();
                assert!(twist_is_natural(m, n, &hom).unwrap(), "{}", h.name());
                // c_{N,W} (F ⊗ id) = (id ⊗ F) c_{M,W} for W = adjoint
                let w = adjoint_module(&h);
                let (cm, cn) = (braiding(m, &w).unwrap(), braiding(n, &w).unwrap());
                let spec = h.spec();
                for f in hom.basis().into_iter().take(3) {
                    let lhs = cn.mul(&f.kron(&Matrix::identity(spec, w.dim())));
                    let rhs = Matrix::identity(spec, w.dim()).kron(&f).mul(&cm);
                    assert_eq!(lhs, rhs, "{}: braiding naturality", h.name());
                }
            }
        }
    }
}

#[test]
fn twist_of_dual_is_transpose() {
    for h in ribbon_algebras() {
        for m in sample_modules(&h) {
            assert_eq!(twist(&dual_module(&m)).unwrap(), twist(&m).unwrap().transpose());
        }
    }
}

#[test]
fn monodromy_is_an_intertwiner() {
    for name in CATALOG_NAMES {
        let h = catalog::get(name).unwrap();
        if h.r_matrix().is_none() {
            continue;
        }
        let a = adjoint_module(&h);
        let ms = [trivial_module(&h), a.clone()];
        for m in &ms {
            for n in &ms {
                let q = monodromy(m, n).unwrap();
                let mn = tensor_module(m, n).unwrap();
                for g in h.generators() {
                    assert_eq!(q.mul(mn.action(g)), mn.action(g).mul(&q), "{name}");
                }
                // the braiding intertwines M ⊗ N with N ⊗ M
                let c = braiding(m, n).unwrap();
                let nm = tensor_module(n, m).unwrap();
                for g in h.generators() {
                    assert_eq!(c.mul(mn.action(g)), nm.action(g).mul(&c), "{name}");
                }
            }
        }
    }
}

#[test]
fn invariants_of_the_square_of_the_end() {
    for name in CATALOG_NAMES {
        let h = catalog::get(name).unwrap();
        let a = adjoint_module(&h);
        let one = invariants_dim(&a).unwrap();
        let two = invariants_dim(&tensor_power(&a, 2)).unwrap();
        assert!(two >= one * one, "{name}: {two} < {one}²");
    }
}

#[test]
fn evaluation_is_injective_on_the_regular_module() {
    for name in ["group:S3", "double:Z3", "sweedler"] {
        let h = catalog::get(name).unwrap();
        let reg = regular_module(&h);
        let hom = hom_space(&trivial_module(&h), &reg).unwrap();
        assert_eq!(evaluation_rank(&hom), hom.dim(), "{name}");
    }
}
