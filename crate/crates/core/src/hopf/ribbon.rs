//! R-matrix, ribbon and pivotal elements, the integral and the Drinfeld map.

use smallvec::SmallVec;

use super::{AlgElem, LinearForm, Mono, QuantumGroup, TensorElem};
use crate::linalg::{Echelon, Matrix};
use crate::scalar::CycScalar;

/// Which one-sided integral identity a linear form satisfies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IntegralSide {
    /// `(λ ⊗ id)Δ(x) = λ(x)·1` for all `x`.
    LeftLeg,
    /// `(id ⊗ λ)Δ(x) = λ(x)·1` for all `x`.
    RightLeg,
    Both,
    Neither,
}

impl QuantumGroup {
    fn tri(&self, a: i64) -> i64 {
        a * (a - 1) / 2
    }

    /// `{1}^a / [a]!`.
    fn divided_power_coeff(&self, a: i64, sign: i64) -> CycScalar {
        let fl = self.field;
        let base = fl.qbrace(sign).pow(a).expect("nonnegative power");
        &base * &fl.qfact_inv(a as usize)
    }

    /// `R = (1/r) Σ {1}^a/[a]! q^{a(a-1)/2 - 2bc} K^b E^a ⊗ K^c F^a`,
    /// stored in normal form `E^a K^b ⊗ F^a K^c`.
    pub fn r_matrix(&self) -> &TensorElem {
        self.r_matrix.get_or_init(|| {
            let r = self.r as i64;
            let inv_r = self.field.ratio(1, r);
            let mut out = TensorElem::zero(2);
            for a in 0..r {
                let base = &self.divided_power_coeff(a, 1) * &inv_r;
                for b in 0..r {
                    for c in 0..r {
                        // K^b E^a = q^{2ab} E^a K^b and K^c F^a = q^{-2ac} F^a K^c
                        let e = self.tri(a) - 2 * b * c + 2 * a * b - 2 * a * c;
                        let key = SmallVec::from_slice(&[Mono::new(a as u32, 0, b as u32), Mono::new(0, a as u32, c as u32)]);
                        out.add_term(key, base.mul_q_pow(e));
                    }
                }
            }
            out
        })
    }

    /// `R^{-1} = (1/r) Σ {-1}^a/[a]! q^{-a(a-1)/2 + 2bc} E^a K^b ⊗ F^a K^c`.
    pub fn r_matrix_inv(&self) -> &TensorElem {
        self.r_matrix_inv.get_or_init(|| {
            let r = self.r as i64;
            let inv_r = self.field.ratio(1, r);
            let mut out = TensorElem::zero(2);
            for a in 0..r {
                let base = &self.divided_power_coeff(a, -1) * &inv_r;
                for b in 0..r {
                    for c in 0..r {
                        let e = -self.tri(a) + 2 * b * c;
                        let key = SmallVec::from_slice(&[Mono::new(a as u32, 0, b as u32), Mono::new(0, a as u32, c as u32)]);
                        out.add_term(key, base.mul_q_pow(e));
                    }
                }
            }
            out
        })
    }

    /// The monodromy matrix from its closed formula
    /// `(1/r) Σ {1}^{a+b}/([a]![b]!) q^{(a(a-1)+b(b-1))/2 - 2cd - (b+c)(b-d)} F^b K^c E^a ⊗ E^b K^d F^a`.
    pub fn m_matrix(&self) -> &TensorElem {
        self.m_matrix.get_or_init(|| {
            let r = self.r as i64;
            let inv_r = self.field.ratio(1, r);
            let mut out = TensorElem::zero(2);
            for a in 0..r {
                for b in 0..r {
                    let base = &(&self.divided_power_coeff(a, 1) * &self.divided_power_coeff(b, 1)) * &inv_r;
                    let left_parts: Vec<AlgElem> = (0..r)
                        .map(|c| {
                            self.mul_all(&[
                                &self.basis_elem(Mono::new(0, b as u32, 0)),
                                &self.k_pow(c),
                                &self.basis_elem(Mono::new(a as u32, 0, 0)),
                            ])
                        })
                        .collect();
                    let right_parts: Vec<AlgElem> = (0..r)
                        .map(|d| {
                            self.mul_all(&[
                                &self.basis_elem(Mono::new(b as u32, 0, 0)),
                                &self.k_pow(d),
                                &self.basis_elem(Mono::new(0, a as u32, 0)),
                            ])
                        })
                        .collect();
                    for c in 0..r {
                        for d in 0..r {
                            let e = self.tri(a) + self.tri(b) - 2 * c * d - (b + c) * (b - d);
                            let coeff = base.mul_q_pow(e);
                            let t = TensorElem::pure(&[&left_parts[c as usize], &right_parts[d as usize]]);
                            out = out.add(&t.scale(&coeff));
                        }
                    }
                }
            }
            out
        })
    }

    /// `R_{21} R_{12}` by direct multiplication.
    pub fn m_matrix_from_r(&self) -> TensorElem {
        let r = self.r_matrix();
        self.mul_tensor(&r.flip(), r)
    }

    fn ribbon_formula(&self, inverse: bool) -> AlgElem {
        let fl = self.field;
        let r = self.r as i64;
        let half = (r - 1) / 2;
        let pre = if inverse { fl.i_pow(-half) } else { fl.i_pow(half) };
        let pre = &pre * &fl.gauss_sqrt_r().inv().expect("sqrt r is nonzero");
        let mut out = AlgElem::zero();
        for a in 0..r {
            let base = if inverse { self.divided_power_coeff(a, 1) } else { self.divided_power_coeff(a, -1) };
            let base = &base * &pre;
            for b in 0..r {
                let e = if inverse {
                    self.tri(a) + (r - 1) * (a + b - 1) * (a + b - 1) / 2
                } else {
                    -self.tri(a) + (r + 1) * (a - b - 1) * (a - b - 1) / 2
                };
                let m = self.mul_all(&[
                    &self.basis_elem(Mono::new(0, a as u32, 0)),
                    &self.k_pow(b),
                    &self.basis_elem(Mono::new(a as u32, 0, 0)),
                ]);
                out = out.add(&m.scale(&base.mul_q_pow(e)));
            }
        }
        out
    }

    /// The ribbon element `v`.
    pub fn ribbon(&self) -> &AlgElem {
        self.ribbon.get_or_init(|| self.ribbon_formula(false))
    }

    /// `v^{-1}` from its own closed formula.
    pub fn ribbon_inv(&self) -> &AlgElem {
        self.ribbon_inv.get_or_init(|| self.ribbon_formula(true))
    }

    /// The pivotal element `g = K`.
    pub fn pivotal(&self) -> AlgElem {
        self.k()
    }

    /// The Drinfeld element `u = S(R'')R'`.
    pub fn drinfeld_u(&self) -> &AlgElem {
        self.drinfeld_u.get_or_init(|| {
            let mut out = AlgElem::zero();
            for (key, c) in self.r_matrix().terms() {
                let t = self.mul(self.antipode_mono(&key[1]), &self.basis_elem(key[0]));
                out = out.add(&t.scale(c));
            }
            out
        })
    }

    /// `u^{-1} = g^{-1} v^{-1}`.
    pub fn drinfeld_u_inv(&self) -> AlgElem {
        self.mul(&self.k_pow(-1), self.ribbon_inv())
    }

    /// `λ(E^a F^b K^c) = r³/{1}^{2r-2} δ_{a,r-1} δ_{b,r-1} δ_{c,1}`.
    pub fn integral_lambda(&self, x: &AlgElem) -> CycScalar {
        let top = Mono::new(self.r - 1, self.r - 1, 1);
        match x.coeff(&top) {
            Some(c) => c * &self.lambda_constant(),
            None => self.field.zero(),
        }
    }

    pub fn lambda_constant(&self) -> CycScalar {
        let fl = self.field;
        let r = self.r as i64;
        &fl.int(r * r * r) * &fl.qbrace(1).pow(-(2 * r - 2)).expect("{1} is nonzero")
    }

    pub fn lambda_form(&self) -> LinearForm {
        let mut f = LinearForm::zero();
        f.set(Mono::new(self.r - 1, self.r - 1, 1), self.lambda_constant());
        f
    }

    /// Evaluates a linear form on an element.
    pub fn pair(&self, phi: &LinearForm, x: &AlgElem) -> CycScalar {
        phi.apply(x).unwrap_or_else(|| self.field.zero())
    }

    /// Checks both one-sided integral identities for `λ` over `basis`.
    pub fn integral_side_on(&self, basis: impl Iterator<Item = Mono>) -> IntegralSide {
        let (mut left, mut right) = (true, true);
        for m in basis {
            let x = self.basis_elem(m);
            let lx = self.integral_lambda(&x);
            let d = self.coproduct(&x);
            let lam = |mm: &Mono| {
                if *mm == Mono::new(self.r - 1, self.r - 1, 1) {
                    Some(self.lambda_constant())
                } else {
                    None
                }
            };
            let l = d.contract(0, lam).to_alg();
            let rr = d.contract(1, lam).to_alg();
            let target = self.scalar(lx);
            left &= l == target;
            right &= rr == target;
        }
        match (left, right) {
            (true, true) => IntegralSide::Both,
            (true, false) => IntegralSide::LeftLeg,
            (false, true) => IntegralSide::RightLeg,
            (false, false) => IntegralSide::Neither,
        }
    }

    pub fn integral_side(&self) -> IntegralSide {
        self.integral_side_on(Mono::all(self.r))
    }

    /// Matrix of the Drinfeld map `φ ↦ (φ ⊗ id)(M)` from the dual PBW basis
    /// (columns) to the PBW basis (rows).
    pub fn drinfeld_matrix(&self) -> &Matrix {
        self.drinfeld_matrix.get_or_init(|| {
            let n = self.dim();
            let mut mat = Matrix::zeros(self.field, n, n);
            for (key, c) in self.m_matrix().terms() {
                mat[(key[1].index(self.r), key[0].index(self.r))] = c.clone();
            }
            mat
        })
    }

    pub fn drinfeld_map(&self, phi: &LinearForm) -> AlgElem {
        let mut out = AlgElem::zero();
        for (key, c) in self.m_matrix().terms() {
            if let Some(v) = phi.value(&key[0]) {
                out.add_term(key[1], c * v);
            }
        }
        out
    }

    /// `ω(φ, ψ) = (φ ⊗ ψ)(M)`.
    pub fn hopf_pairing(&self, phi: &LinearForm, psi: &LinearForm) -> CycScalar {
        let mut acc = self.field.zero();
        for (key, c) in self.m_matrix().terms() {
            if let (Some(a), Some(b)) = (phi.value(&key[0]), psi.value(&key[1])) {
                acc += &(&(c * a) * b);
            }
        }
        acc
    }

    pub fn drinfeld_rank(&self) -> usize {
        let n = self.dim();
        let mut ech = Echelon::new(self.field, n);
        // rows of the matrix: one per second-leg monomial
        let mut rows: Vec<Vec<(usize, CycScalar)>> = vec![Vec::new(); n];
        for (key, c) in self.m_matrix().terms() {
            rows[key[1].index(self.r)].push((key[0].index(self.r), c.clone()));
        }
        for row in rows {
            ech.insert(row);
        }
        ech.rank()
    }

    /// Rank of the pairing matrix `ω(φ_m, ψ_n)`, which is the transpose of
    /// the Drinfeld matrix.
    pub fn pairing_rank(&self) -> usize {
        let n = self.dim();
        let mut ech = Echelon::new(self.field, n);
        let mut rows: Vec<Vec<(usize, CycScalar)>> = vec![Vec::new(); n];
        for (key, c) in self.m_matrix().terms() {
            rows[key[0].index(self.r)].push((key[1].index(self.r), c.clone()));
        }
        for row in rows {
            ech.insert(row);
        }
        ech.rank()
    }

    pub fn is_factorizable(&self) -> bool {
        self.drinfeld_rank() == self.dim()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn r_times_r_inverse() {
        for r in [3u32, 5] {
            let h = QuantumGroup::new(r).unwrap();
            let one = TensorElem::unit(2, h.field().one());
            assert_eq!(h.mul_tensor(h.r_matrix(), h.r_matrix_inv()), one);
            assert_eq!(h.mul_tensor(h.r_matrix_inv(), h.r_matrix()), one);
        }
    }

    #[test]
    fn ribbon_basics() {
        let h = QuantumGroup::new(3).unwrap();
        assert_eq!(h.mul(h.ribbon(), h.ribbon_inv()), h.one());
        assert_eq!(h.mul(h.drinfeld_u(), &h.k_pow(-1)), *h.ribbon());
        for g in [h.e(), h.f(), h.k()] {
            assert_eq!(h.mul(h.ribbon(), &g), h.mul(&g, h.ribbon()));
        }
    }

    #[test]
    fn lambda_values() {
        let h = QuantumGroup::new(3).unwrap();
        assert!(h.integral_lambda(&h.one()).is_zero());
        let top = h.basis_elem(Mono::new(2, 2, 1));
        assert_eq!(h.integral_lambda(&top), h.lambda_constant());
    }
}
