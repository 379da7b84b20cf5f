//! Braided Hopf structure on the adjoint representation (transmutation).
//!
//! Both the coproduct and the antipode come with two expressions; each is
//! computed separately so they can be compared.

use super::{AlgElem, QuantumGroup, TensorElem};
use crate::error::{Error, Result};

impl QuantumGroup {
    /// `Δ̄(x) = ad_{R''}(x_(2)) ⊗ R' x_(1)`.
    pub fn transmutation_coproduct_first(&self, x: &AlgElem) -> TensorElem {
        let dx = self.coproduct(x);
        let mut out = TensorElem::zero(2);
        for (rk, rc) in self.r_matrix().terms() {
            let r1 = self.basis_elem(rk[0]);
            let r2 = self.basis_elem(rk[1]);
            for (xk, xc) in dx.terms() {
                let left = self.adjoint(&r2, &self.basis_elem(xk[1]));
                let right = self.mul(&r1, &self.basis_elem(xk[0]));
                out = out.add(&TensorElem::pure(&[&left, &right]).scale(&(rc * xc)));
            }
        }
        out
    }

    /// `Δ̄(x) = x_(1) S(R'') ⊗ ad_{R'}(x_(2))`.
    pub fn transmutation_coproduct_second(&self, x: &AlgElem) -> TensorElem {
        let dx = self.coproduct(x);
        let mut out = TensorElem::zero(2);
        for (rk, rc) in self.r_matrix().terms() {
            let r1 = self.basis_elem(rk[0]);
            let s_r2 = self.antipode_mono(&rk[1]);
            for (xk, xc) in dx.terms() {
                let left = self.mul(&self.basis_elem(xk[0]), s_r2);
                let right = self.adjoint(&r1, &self.basis_elem(xk[1]));
                out = out.add(&TensorElem::pure(&[&left, &right]).scale(&(rc * xc)));
            }
        }
        out
    }

    /// `S̄(x) = R'' u^{-1} S(x) S(R')`.
    pub fn transmutation_antipode_first(&self, x: &AlgElem) -> AlgElem {
        let uinv = self.drinfeld_u_inv();
        let sx = self.antipode(x);
        let mid = self.mul(&uinv, &sx);
        let mut out = AlgElem::zero();
        for (rk, rc) in self.r_matrix().terms() {
            let t = self.mul_all(&[&self.basis_elem(rk[1]), &mid, self.antipode_mono(&rk[0])]);
            out = out.add(&t.scale(rc));
        }
        out
    }

    /// `S̄(x) = u^{-1} S(R'') S(x) R'`.
    pub fn transmutation_antipode_second(&self, x: &AlgElem) -> AlgElem {
        let uinv = self.drinfeld_u_inv();
        let sx = self.antipode(x);
        let mut out = AlgElem::zero();
        for (rk, rc) in self.r_matrix().terms() {
            let t = self.mul_all(&[&uinv, self.antipode_mono(&rk[1]), &sx, &self.basis_elem(rk[0])]);
            out = out.add(&t.scale(rc));
        }
        out
    }

    /// Transmuted coproduct; fails if the two expressions disagree on `x`.
    pub fn transmutation_coproduct(&self, x: &AlgElem) -> Result<TensorElem> {
        let a = self.transmutation_coproduct_first(x);
        let b = self.transmutation_coproduct_second(x);
        if a != b {
            return Err(Error::Consistency(format!("transmuted coproduct expressions disagree on {:?}", x)));
        }
        Ok(a)
    }

    /// Transmuted antipode; fails if the two expressions disagree on `x`.
    pub fn transmutation_antipode(&self, x: &AlgElem) -> Result<AlgElem> {
        let a = self.transmutation_antipode_first(x);
        let b = self.transmutation_antipode_second(x);
        if a != b {
            return Err(Error::Consistency(format!("transmuted antipode expressions disagree on {:?}", x)));
        }
        Ok(a)
    }

    /// Transmuted counit (equal to the ordinary counit).
    pub fn transmutation_counit(&self, x: &AlgElem) -> crate::scalar::CycScalar {
        self.counit(x)
    }
}
