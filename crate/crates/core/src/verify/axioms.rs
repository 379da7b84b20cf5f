//! Exact Hopf, quasitriangular and ribbon identities, checked per basis
//! element or once for the universal elements.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::hopf::{AlgElem, IntegralSide, Mono, QuantumGroup, TensorElem};

/// The whole PBW basis when `samples` is `None`, otherwise a seeded random
/// sample of that size.
pub fn basis_sample(r: u32, samples: Option<usize>, seed: u64) -> Vec<Mono> {
    let mut all: Vec<Mono> = Mono::all(r).collect();
    if let Some(n) = samples {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        all.shuffle(&mut rng);
        all.truncate(n);
    }
    all
}

/// `(Δ ⊗ id)Δ = (id ⊗ Δ)Δ` on a basis element.
pub fn coassociative(h: &QuantumGroup, m: &Mono) -> bool {
    let d = h.coproduct_mono(m);
    h.coproduct_leg(d, 0) == h.coproduct_leg(d, 1)
}

/// `(ε ⊗ id)Δ = id = (id ⊗ ε)Δ` on a basis element.
pub fn counital(h: &QuantumGroup, m: &Mono) -> bool {
    let d = h.coproduct_mono(m);
    let x = h.basis_elem(*m);
    d.contract(0, |a| h.counit_mono(a)).to_alg() == x && d.contract(1, |a| h.counit_mono(a)).to_alg() == x
}

/// `μ(S ⊗ id)Δ = ηε = μ(id ⊗ S)Δ` on a basis element.
pub fn antipodal(h: &QuantumGroup, m: &Mono) -> bool {
    let d = h.coproduct_mono(m);
    let eps = h.scalar(h.counit(&h.basis_elem(*m)));
    let left = h.map_legs(d, |j, a| if j == 0 { h.antipode_mono(a).clone() } else { h.basis_elem(*a) });
    let right = h.map_legs(d, |j, a| if j == 1 { h.antipode_mono(a).clone() } else { h.basis_elem(*a) });
    h.multiply_legs(&left, &[0, 1]) == eps && h.multiply_legs(&right, &[0, 1]) == eps
}

/// `Δ^op(x) R = R Δ(x)` on a basis element.
pub fn quasi_cocommutative(h: &QuantumGroup, m: &Mono) -> bool {
    let d = h.coproduct_mono(m);
    let r = h.r_matrix();
    h.mul_tensor(&d.flip(), r) == h.mul_tensor(r, d)
}

/// `(Δ ⊗ id)R = R₁₃R₂₃` and `(id ⊗ Δ)R = R₁₃R₁₂`.
pub fn r_coproduct_identities(h: &QuantumGroup) -> bool {
    let r = h.r_matrix();
    let r12 = r.embed(3, &[0, 1]);
    let r13 = r.embed(3, &[0, 2]);
    let r23 = r.embed(3, &[1, 2]);
    h.coproduct_leg(r, 0) == h.mul_tensor(&r13, &r23) && h.coproduct_leg(r, 1) == h.mul_tensor(&r13, &r12)
}

/// `R₁₂R₁₃R₂₃ = R₂₃R₁₃R₁₂` in `H^{⊗3}`.
pub fn yang_baxter(h: &QuantumGroup) -> bool {
    let r = h.r_matrix();
    let r12 = r.embed(3, &[0, 1]);
    let r13 = r.embed(3, &[0, 2]);
    let r23 = r.embed(3, &[1, 2]);
    h.mul_tensor(&h.mul_tensor(&r12, &r13), &r23) == h.mul_tensor(&h.mul_tensor(&r23, &r13), &r12)
}

/// `S(v) = v`, `ε(v) = 1`, `v² = u S(u)`, `v` central, and
/// `Δ(v) = M⁻¹(v ⊗ v)` with `M = R₂₁R₁₂`.
pub fn ribbon_identities(h: &QuantumGroup) -> bool {
    let v = h.ribbon();
    let u = h.drinfeld_u();
    let central = [h.e(), h.f(), h.k()].iter().all(|g| h.mul(v, g) == h.mul(g, v));
    let vv = TensorElem::pure(&[v, v]);
    central
        && h.antipode(v) == *v
        && h.counit(v).is_one()
        && h.mul(v, v) == h.mul(u, &h.antipode(u))
        && h.mul_tensor(h.m_matrix(), &h.coproduct(v)) == vv
        && *h.m_matrix() == h.m_matrix_from_r()
}

/// `R R⁻¹ = 1 ⊗ 1` and `v v⁻¹ = 1`.
pub fn inverses(h: &QuantumGroup) -> bool {
    let one2 = TensorElem::unit(2, h.field().one());
    h.mul_tensor(h.r_matrix(), h.r_matrix_inv()) == one2 && h.mul(h.ribbon(), h.ribbon_inv()) == h.one()
}

/// `λ` is a left-leg integral, `(λ ⊗ id)Δ(x) = λ(x)·1`, and not a right-leg one.
pub fn integral_is_left_leg(h: &QuantumGroup) -> bool {
    h.integral_side() == IntegralSide::LeftLeg
}

/// Non-degeneracy of the pairing agrees with factorizability (both full rank).
pub fn factorizable(h: &QuantumGroup) -> bool {
    h.is_factorizable() && h.pairing_rank() == h.drinfeld_rank()
}

/// Both expressions for the transmuted coproduct agree, and both for the
/// transmuted antipode, on a basis element.
pub fn transmutation_agrees(h: &QuantumGroup, m: &Mono) -> bool {
    let x: AlgElem = h.basis_elem(*m);
    h.transmutation_coproduct(&x).is_ok() && h.transmutation_antipode(&x).is_ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_basis_r3() {
        let h = QuantumGroup::new(3).unwrap();
        for m in basis_sample(3, None, 0) {
            assert!(coassociative(h, &m), "{}", m);
            assert!(counital(h, &m), "{}", m);
            assert!(antipodal(h, &m), "{}", m);
            assert!(quasi_cocommutative(h, &m), "{}", m);
            assert!(transmutation_agrees(h, &m), "{}", m);
        }
        assert!(r_coproduct_identities(h));
        assert!(yang_baxter(h));
        assert!(ribbon_identities(h));
        assert!(inverses(h));
        assert!(integral_is_left_leg(h));
        assert!(factorizable(h));
    }

    #[test]
    fn samples_are_deterministic() {
        assert_eq!(basis_sample(5, Some(10), 7), basis_sample(5, Some(10), 7));
        assert_eq!(basis_sample(5, Some(200), 7).len(), 125);
    }
}
