//! The renormalized non-semisimple theory: the modified trace, stabilization
//! constants from the integral, the Hennings-type invariant of surgery
//! presentations, the renormalized invariant of admissible decorations, and
//! genus-one dimensions.

mod center;
mod trace;

pub use center::{center_dim, hh0_dim};
pub use trace::{modified_trace, ModifiedTrace};

use crate::error::{Error, Result};
use crate::hopf::QuantumGroup;
use crate::scalar::{CycScalar, FieldContext};
use crate::semisimple::Normalization;
use crate::tangle::{
    cut_candidates, cut_diagram, evaluate_bichrome, linking_matrix, BlueEvaluator, CutRef, Diagram, RedFunctional,
};

/// `Δ₋ = λ(v)`, `Δ₊ = λ(v⁻¹)`, `𝒟 = r^{3/2}` and `δ = 𝒟/Δ₋`.
pub fn nss_normalization(h: &QuantumGroup) -> Result<Normalization> {
    let fl = h.field();
    let delta_minus = h.integral_lambda(h.ribbon());
    let delta_plus = h.integral_lambda(h.ribbon_inv());
    let d = &fl.int(h.r() as i64) * &fl.gauss_sqrt_r();
    let delta = &d / &delta_minus;
    let n = Normalization { delta_plus, delta_minus, d, delta };
    if !n.is_consistent() {
        return Err(Error::Consistency("non-semisimple normalization: 𝒟² ≠ Δ₊Δ₋".into()));
    }
    Ok(n)
}

/// The published closed forms
/// `Δ₋ = i^{(r−1)/2} r^{3/2} q^{(r+3)/2}`, `Δ₊ = i^{−(r−1)/2} r^{3/2} q^{(r−3)/2}`,
/// `𝒟 = r^{3/2}`, `δ = i^{−(r−1)/2} q^{(r−3)/2}`.
pub fn nss_closed_forms(fl: FieldContext) -> Normalization {
    let r = fl.r() as i64;
    let half = (r - 1) / 2;
    let d = &fl.int(r) * &fl.gauss_sqrt_r();
    Normalization {
        delta_minus: &(&fl.i_pow(half) * &d) * &fl.q_pow((r + 3) / 2),
        delta_plus: &(&fl.i_pow(-half) * &d) * &fl.q_pow((r - 3) / 2),
        delta: &fl.i_pow(-half) * &fl.q_pow((r - 3) / 2),
        d,
    }
}

/// `L(M) = 𝒟^{−1−ℓ} δ^{−σ} λ^{⊗ℓ}(beads)` for an all-red closed diagram.
pub fn hennings_invariant(h: &'static QuantumGroup, d: &Diagram) -> Result<CycScalar> {
    if !d.is_closed()? {
        return Err(Error::OpenDiagram);
    }
    if d.slices.iter().any(|s| s.gens.iter().any(|g| !g.touches_red())) {
        return Err(Error::Invalid("the surgery presentation must be all red".into()));
    }
    let sd = linking_matrix(d)?;
    let n = nss_normalization(h)?;
    let f = evaluate_bichrome(&mut BlueEvaluator::new(h), d, &RedFunctional::Lambda)?;
    Ok(&n.factor(sd.ell, sd.signature)? * &f[(0, 0)])
}

/// `L′(M, T) = 𝒟^{−1−ℓ} δ^{−σ} t_P(F_Λ(cut diagram))`, where the diagram
/// holds the red surgery link and the blue decoration together and `cut`
/// selects a projective blue edge.
pub fn renormalized_invariant(h: &'static QuantumGroup, d: &Diagram, cut: CutRef) -> Result<CycScalar> {
    let mt = ModifiedTrace::new(h)?;
    renormalized_with(&mt, d, cut)
}

fn renormalized_with(mt: &ModifiedTrace, d: &Diagram, cut: CutRef) -> Result<CycScalar> {
    let h = mt.group();
    let (t, x) = cut_diagram(d, cut, h.r())?;
    let sd = linking_matrix(d)?;
    let n = nss_normalization(h)?;
    let mut ev = BlueEvaluator::new(h);
    let f = evaluate_bichrome(&mut ev, &t, &RedFunctional::Lambda)?;
    let p = ev.module(&x)?;
    Ok(&n.factor(sd.ell, sd.signature)? * &mt.trace(&p, &f)?)
}

/// `L′` at every projective edge of the decoration.
pub fn renormalized_all_cuts(h: &'static QuantumGroup, d: &Diagram) -> Result<Vec<(CutRef, CycScalar)>> {
    if !d.is_admissible(h.r()) {
        return Err(Error::InadmissibleGraph);
    }
    let mt = ModifiedTrace::new(h)?;
    cut_candidates(d, h.r())?.into_iter().map(|c| Ok((c, renormalized_with(&mt, d, c)?))).collect()
}

/// True iff `L′` takes the same value at every projective edge.
pub fn cutting_independence_check(h: &'static QuantumGroup, d: &Diagram) -> Result<bool> {
    let vals = renormalized_all_cuts(h, d)?;
    Ok(vals.windows(2).all(|w| w[0].1 == w[1].1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::{hom_space, projective_module, simple_module, tensor};
    use crate::fixtures::framed_unknot;
    use crate::tangle::parse_diagram;

    #[test]
    fn trace_values() {
        for r in [3, 5] {
            let h = QuantumGroup::new(r).unwrap();
            let fl = h.field();
            let mt = ModifiedTrace::new(h).unwrap();
            for n in 0..r - 1 {
                let p = projective_module(h, n).unwrap();
                assert_eq!(mt.trace(&p, &p.identity()).unwrap(), fl.qbrace_prime(n as i64 + 1), "r={} n={}", r, n);
            }
            let st = simple_module(h, r - 1).unwrap();
            assert!(mt.trace(&st, &st.identity()).unwrap().is_one());
            let v1 = simple_module(h, 1).unwrap();
            assert_eq!(mt.trace(&v1, &v1.identity()).unwrap_err(), Error::NotProjective);
            // t_{P ⊗ V_0}(f ⊗ id) = t_P(f)
            let p0 = projective_module(h, 0).unwrap();
            let pv = tensor(&p0, &simple_module(h, 0).unwrap());
            for f in hom_space(&p0, &p0) {
                assert_eq!(mt.trace(&pv, &f).unwrap(), mt.trace(&p0, &f).unwrap());
            }
        }
    }

    #[test]
    fn constants() {
        for r in [3, 5, 7] {
            let h = QuantumGroup::new(r).unwrap();
            let n = nss_normalization(h).unwrap();
            assert_eq!(n, nss_closed_forms(h.field()));
        }
    }

    #[test]
    fn hennings_small_manifolds() {
        let h = QuantumGroup::new(3).unwrap();
        let n = nss_normalization(h).unwrap();
        let s3 = parse_diagram("").unwrap();
        assert_eq!(hennings_invariant(h, &s3).unwrap(), n.d.inv().unwrap());
        let s2s1 = parse_diagram(&framed_unknot(0)).unwrap();
        assert!(hennings_invariant(h, &s2s1).unwrap().is_zero());
        // ±1 surgery on the unknot is S³ again
        for p in [1, -1] {
            let d = parse_diagram(&framed_unknot(p)).unwrap();
            assert_eq!(hennings_invariant(h, &d).unwrap(), n.d.inv().unwrap());
        }
    }

    #[test]
    fn renormalized_unknots() {
        let h = QuantumGroup::new(3).unwrap();
        let fl = h.field();
        let dinv = nss_normalization(h).unwrap().d.inv().unwrap();
        for (label, expect) in [("P0", fl.qbrace_prime(1)), ("P1", fl.qbrace_prime(2)), ("V2", fl.one())] {
            let d = parse_diagram(&format!("lcoev({label}); rev({label})")).unwrap();
            let cut = CutRef { boundary: 1, position: 0 };
            assert_eq!(renormalized_invariant(h, &d, cut).unwrap(), &dinv * &expect, "{}", label);
        }
        let d = parse_diagram("lcoev(V1); rev(V1)").unwrap();
        assert_eq!(renormalized_invariant(h, &d, CutRef { boundary: 1, position: 0 }).unwrap_err(), Error::InadmissibleGraph);
    }
}
