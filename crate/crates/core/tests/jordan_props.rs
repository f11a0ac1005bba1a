use hypmat::jordan::{frame_verify, rank_one_from_vector, Algebra, CDElement, H3Element};
use hypmat::Rational;
use num::{BigInt, One, Zero};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=3).prop_map(|(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)))
}

fn algebra() -> impl Strategy<Value = Algebra> {
    prop_oneof![
        Just(Algebra::R),
        Just(Algebra::C),
        Just(Algebra::H),
        Just(Algebra::O)
    ]
}

fn element(alg: Algebra) -> impl Strategy<Value = CDElement> {
    proptest::collection::vec(rational(), alg.dim()).prop_map(|c| CDElement::new(c).unwrap())
}

fn h3(alg: Algebra) -> impl Strategy<Value = H3Element> {
    (
        [rational(), rational(), rational()],
        [element(alg), element(alg), element(alg)],
    )
        .prop_map(|(d, o)| H3Element::new(d, o).unwrap())
}

/// Elements of `alg` whose coordinates lie in an associative subalgebra:
/// for the octonions, the quaternions spanned by `1, e1, e2, e3`.
fn associative_element(alg: Algebra) -> impl Strategy<Value = CDElement> {
    let used = alg.dim().min(4);
    proptest::collection::vec(-3i64..=3, used).prop_map(move |c| {
        let mut coords = vec![Rational::zero(); alg.dim()];
        for (slot, v) in coords.iter_mut().zip(c) {
            *slot = Rational::from_integer(v.into());
        }
        CDElement::new(coords).unwrap()
    })
}

type Vector = [CDElement; 3];

/// `Σ ū_i w_i`.
fn inner(u: &Vector, w: &Vector) -> CDElement {
    let alg = u[0].algebra();
    (0..3).fold(CDElement::zero(alg), |acc, i| {
        &acc + &(&u[i].conj() * &w[i])
    })
}

/// Gram–Schmidt with scalars acting on the right; valid over an associative
/// algebra.
fn orthogonalize(vs: [Vector; 3]) -> Option<[Vector; 3]> {
    let mut out: Vec<Vector> = Vec::new();
    for mut w in vs {
        for u in &out {
            let s = inner(u, &w).scale(&inner(u, u).re().recip());
            w = std::array::from_fn(|i| &w[i] - &(&u[i] * &s));
        }
        if w.iter().all(CDElement::is_zero) {
            return None;
        }
        out.push(w);
    }
    out.try_into().ok()
}

fn frame() -> impl Strategy<Value = (Algebra, [H3Element; 3])> {
    algebra().prop_flat_map(|alg| {
        let v = || {
            [
                associative_element(alg),
                associative_element(alg),
                associative_element(alg),
            ]
        };
        [v(), v(), v()].prop_filter_map("dependent vectors", move |vs| {
            let basis = orthogonalize(vs)?;
            let c = basis.map(|b| rank_one_from_vector(&b).unwrap());
            Some((alg, c))
        })
    })
}

fn combine(lambdas: &[Rational; 3], c: &[H3Element; 3]) -> H3Element {
    (0..3).fold(H3Element::zero(c[0].algebra()), |acc, i| {
        acc.try_add(&c[i].scale(&lambdas[i])).unwrap()
    })
}

fn cayley_hamilton_holds(alg: Algebra) {
    let mut runner = proptest::test_runner::TestRunner::new(ProptestConfig::with_cases(500));
    runner
        .run(&h3(alg), |x| {
            prop_assert!(x.cayley_hamilton_residual().is_zero(), "{:?}", x);
            Ok(())
        })
        .unwrap();
}

#[test]
fn cayley_hamilton_real() {
    cayley_hamilton_holds(Algebra::R);
}

#[test]
fn cayley_hamilton_complex() {
    cayley_hamilton_holds(Algebra::C);
}

#[test]
fn cayley_hamilton_quaternion() {
    cayley_hamilton_holds(Algebra::H);
}

#[test]
fn cayley_hamilton_octonion() {
    cayley_hamilton_holds(Algebra::O);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn conjugation_and_norm((a, b) in algebra().prop_flat_map(|g| (element(g), element(g)))) {
        prop_assert_eq!(a.conj().conj(), a.clone());
        prop_assert_eq!((&a * &b).norm(), a.norm() * b.norm());
        prop_assert_eq!(a.norm().is_zero(), a.is_zero());
        // Alternativity: (aa)b = a(ab).
        prop_assert_eq!(&(&a * &a) * &b, &a * &(&a * &b));
    }

    #[test]
    fn frame_reconstruction(
        (_alg, c) in frame(),
        l in [rational(), rational(), rational()],
    ) {
        prop_assert!(frame_verify(&c));
        let x = combine(&l, &c);
        let f = x.freudenthal();
        prop_assert_eq!(&f.det, &(&l[0] * &l[1] * &l[2]));
        prop_assert_eq!(&f.trace, &(&l[0] + &l[1] + &l[2]));

        let mut want = l.to_vec();
        want.sort_by(|a, b| b.cmp(a));
        let got: Vec<Rational> = x
            .spectral()
            .unwrap()
            .eigenvalues
            .values
            .iter()
            .map(|v| v.as_rational().cloned().unwrap())
            .collect();
        prop_assert_eq!(&got, &want);

        if want[0] != want[1] && want[1] != want[2] {
            let parts = x.spectral_decomposition().unwrap().unwrap();
            let idem: [H3Element; 3] = parts.clone().map(|(_, p)| p);
            prop_assert!(frame_verify(&idem));
            let lam: [Rational; 3] = parts.map(|(v, _)| v);
            prop_assert_eq!(combine(&lam, &idem), x);
            // The decomposition returns the original frame.
            for (v, p) in lam.iter().zip(&idem) {
                let i = l.iter().position(|li| li == v).unwrap();
                prop_assert_eq!(p, &c[i]);
            }
        }
    }

    #[test]
    fn invariants_match_eigenvalues(x in algebra().prop_flat_map(h3)) {
        let f = x.freudenthal();
        let vals: Vec<f64> = x.spectral().unwrap().eigenvalues.values.iter().map(|v| v.approx()).collect();
        prop_assert_eq!(vals.len(), 3);
        let det: f64 = vals.iter().product();
        let tr: f64 = vals.iter().sum();
        let scale = 1.0 + vals.iter().map(|v| v.abs()).fold(0.0, f64::max).powi(3);
        prop_assert!((det - ratio(&f.det)).abs() <= 1e-9 * scale);
        prop_assert!((tr - ratio(&f.trace)).abs() <= 1e-9 * scale);
    }
}

fn ratio(r: &Rational) -> f64 {
    use num::ToPrimitive;
    r.to_f64().unwrap()
}

#[test]
fn identity_is_its_own_frame() {
    for alg in Algebra::ALL {
        let one = Rational::one();
        let z = Rational::zero();
        let c = [
            H3Element::diagonal(alg, [one.clone(), z.clone(), z.clone()]),
            H3Element::diagonal(alg, [z.clone(), one.clone(), z.clone()]),
            H3Element::diagonal(alg, [z.clone(), z, one]),
        ];
        assert!(frame_verify(&c));
        assert_eq!(
            combine(&[Rational::one(), Rational::one(), Rational::one()], &c),
            H3Element::identity(alg)
        );
    }
}
