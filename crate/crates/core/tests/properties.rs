//! Property tests: field laws, Hopf structure maps on random elements,
//! representations as algebra maps, braid words, the diagram parser, and the
//! exact inertia against a numeric eigensolver.

use nalgebra::DMatrix;
use proptest::prelude::*;

use qtop_core::hopf::{AlgElem, Mono, QuantumGroup, TensorElem};
use qtop_core::rep::{projective_module, simple_module};
use qtop_core::tangle::{inertia, parse_diagram, BlueEvaluator};
use qtop_core::{field_init, CycScalar};

fn config() -> ProptestConfig {
    ProptestConfig { cases: 48, ..ProptestConfig::default() }
}

fn scalar(r: u32, coords: &[i64], den: i64) -> CycScalar {
    let fl = field_init(r).unwrap();
    fl.from_ints(&coords[..fl.degree()], den).unwrap()
}

fn coords() -> impl Strategy<Value = (Vec<i64>, i64)> {
    (prop::collection::vec(-5i64..=5, 8), 1i64..=4)
}

/// A random element with a few PBW terms and small integer coefficients.
fn element(r: u32) -> impl Strategy<Value = Vec<(usize, i64)>> {
    prop::collection::vec((0..(r * r * r) as usize, -3i64..=3), 1..4)
}

fn build(h: &QuantumGroup, terms: &[(usize, i64)]) -> AlgElem {
    let mut x = AlgElem::zero();
    for &(i, c) in terms {
        x = x.add(&h.basis_elem(Mono::from_index(i, h.r())).scale(&h.field().int(c)));
    }
    x
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn field_laws((a, da) in coords(), (b, db) in coords(), (c, dc) in coords(), r in prop::sample::select(vec![3u32, 5])) {
        let (x, y, z) = (scalar(r, &a, da), scalar(r, &b, db), scalar(r, &c, dc));
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        if !x.is_zero() {
            prop_assert!((&x * &x.inv().unwrap()).is_one());
        }
        // the complex embedding is a ring map
        let (p, q) = ((&x * &y).approx(), x.approx() * y.approx());
        prop_assert!((p - q).norm() < 1e-8 * (1.0 + q.norm()));
    }

    #[test]
    fn structure_maps_respect_products(x in element(3), y in element(3)) {
        let h = QuantumGroup::new(3).unwrap();
        let (x, y) = (build(h, &x), build(h, &y));
        let xy = h.mul(&x, &y);
        prop_assert_eq!(h.coproduct(&xy), h.mul_tensor(&h.coproduct(&x), &h.coproduct(&y)));
        prop_assert_eq!(h.antipode(&xy), h.mul(&h.antipode(&y), &h.antipode(&x)));
        prop_assert_eq!(h.counit(&xy), &h.counit(&x) * &h.counit(&y));
        prop_assert_eq!(h.antipode_inv(&h.antipode(&x)), x.clone());
        // the ribbon element is central
        prop_assert_eq!(h.mul(h.ribbon(), &x), h.mul(&x, h.ribbon()));
        // Δ^op R = R Δ
        let d = h.coproduct(&x);
        prop_assert_eq!(h.mul_tensor(&d.flip(), h.r_matrix()), h.mul_tensor(h.r_matrix(), &d));
    }

    #[test]
    fn modules_are_algebra_maps(x in element(5), y in element(5), n in 0u32..4) {
        let h = QuantumGroup::new(5).unwrap();
        let (x, y) = (build(h, &x), build(h, &y));
        for m in [simple_module(h, n).unwrap(), projective_module(h, n).unwrap()] {
            prop_assert_eq!(m.act(&h.mul(&x, &y)), m.act(&x).mul(&m.act(&y)));
        }
    }

    #[test]
    fn braid_words_cancel_against_their_inverse(word in prop::collection::vec((0usize..2, any::<bool>()), 1..6)) {
        // three V1 strands; the word followed by its reversed inverse is the identity
        let h = QuantumGroup::new(3).unwrap();
        let slice = |i: usize, pos: bool| {
            let x = if pos { "x+(V1,V1)" } else { "x-(V1,V1)" };
            if i == 0 { format!("{x}, id(V1)") } else { format!("id(V1), {x}") }
        };
        let mut slices: Vec<String> = word.iter().map(|&(i, s)| slice(i, s)).collect();
        slices.extend(word.iter().rev().map(|&(i, s)| slice(i, !s)));
        let d = parse_diagram(&slices.join("; ")).unwrap();
        prop_assert!(BlueEvaluator::new(h).evaluate(&d).unwrap().is_identity());
    }

    #[test]
    fn parser_round_trips(word in prop::collection::vec((0usize..4, 0usize..2), 1..8)) {
        let gens = ["x+(V1,P0)", "x-(V1,P0)", "tw+(V1), id(P0)", "id(V1), tw-(P0)"];
        // keep boundaries consistent by swapping the labels after each crossing
        let mut labels = ("V1", "P0");
        let mut slices = Vec::new();
        for (g, _) in word {
            let text = gens[g].replace("V1", "A").replace("P0", "B").replace('A', labels.0).replace('B', labels.1);
            if g < 2 {
                labels = (labels.1, labels.0);
            }
            slices.push(text);
        }
        let d = parse_diagram(&slices.join(";\n")).unwrap();
        let again = parse_diagram(&d.to_text()).unwrap();
        prop_assert_eq!(again.to_text(), d.to_text());
        let gens_of = |d: &qtop_core::tangle::Diagram| d.slices.iter().map(|s| s.gens.clone()).collect::<Vec<_>>();
        prop_assert_eq!(gens_of(&again), gens_of(&d));
    }

    #[test]
    fn inertia_matches_eigenvalue_signs(n in 1usize..5, entries in prop::collection::vec(-4i64..=4, 16)) {
        let mut m = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in i..n {
                m[i][j] = entries[i * 4 + j];
                m[j][i] = entries[i * 4 + j];
            }
        }
        let (pos, neg, zero) = inertia(&m);
        prop_assert_eq!(pos + neg + zero, n);
        let num = DMatrix::from_fn(n, n, |i, j| m[i][j] as f64);
        let eig = num.symmetric_eigenvalues();
        // integer matrices this small have eigenvalues well away from zero or exactly zero
        let count = |f: &dyn Fn(f64) -> bool| eig.iter().filter(|&&e| f(e)).count();
        prop_assert_eq!(pos, count(&|e| e > 1e-9));
        prop_assert_eq!(neg, count(&|e| e < -1e-9));
    }
}

#[test]
fn tensor_units_are_neutral() {
    let h = QuantumGroup::new(3).unwrap();
    let one = TensorElem::unit(2, h.field().one());
    assert_eq!(h.mul_tensor(&one, h.r_matrix()), *h.r_matrix());
}
