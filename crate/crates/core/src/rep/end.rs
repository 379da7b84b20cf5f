//! The adjoint representation and the end structure morphisms `j_X`.

use super::{ModLabel, Representation};
use crate::hopf::{AlgElem, Mono, QuantumGroup};
use crate::linalg::Matrix;

/// The algebra acting on itself by `ad_x(y) = x_(1) y S(x_(2))`, on the PBW
/// basis (each monomial `E^a F^b K^c` is a `K`-eigenvector of weight
/// `2(a-b)`).
pub fn adjoint_representation(group: &'static QuantumGroup) -> Representation {
    let fl = group.field();
    let n = group.dim();
    let r = group.r();
    let mut e = Matrix::zeros(fl, n, n);
    let mut f = Matrix::zeros(fl, n, n);
    let mut weights = Vec::with_capacity(n);
    for m in Mono::all(r) {
        let y = group.basis_elem(m);
        let j = m.index(r);
        for (m2, c) in group.adjoint(&group.e(), &y).terms() {
            e[(m2.index(r), j)] = c.clone();
        }
        for (m2, c) in group.adjoint(&group.f(), &y).terms() {
            f[(m2.index(r), j)] = c.clone();
        }
        weights.push(m.weight());
    }
    Representation::from_parts(group, weights, e, f, ModLabel::Other("ad".into()))
}

/// The algebra acting on itself by left multiplication, on the PBW basis.
///
/// PBW monomials are not `K`-eigenvectors for this action, so the module is
/// returned in an eigenbasis together with the change of basis `B` whose
/// columns express the eigenvectors in PBW coordinates.
pub fn regular_representation(group: &'static QuantumGroup) -> (Representation, Matrix) {
    let fl = group.field();
    let r = group.r() as i64;
    let n = group.dim();
    // K^c-isotypic projectors: e_w = (1/r) Σ_c q^{-wc} K^c, and e_w·E^aF^b
    // spans the weight-(w + 2(a-b)) part; use x_{a,b,w} = E^a F^b e_w.
    let mut cols = Vec::with_capacity(n);
    let mut weights = Vec::with_capacity(n);
    let inv_r = fl.ratio(1, r);
    for m in Mono::all(group.r()) {
        let w = m.k as i64;
        let mut idem = AlgElem::zero();
        for c in 0..r {
            idem.add_term(Mono { e: 0, f: 0, k: c as u8 }, inv_r.mul_q_pow(-w * c));
        }
        let x = group.mul(&group.basis_elem(Mono { e: m.e, f: m.f, k: 0 }), &idem);
        let mut v = vec![fl.zero(); n];
        for (mm, c) in x.terms() {
            v[mm.index(group.r())] = c.clone();
        }
        cols.push(v);
        weights.push(w + 2 * (m.e as i64 - m.f as i64));
    }
    let b = Matrix::from_columns(fl, n, &cols);
    let b_inv = b.inverse().expect("eigenvectors form a basis");
    let e = b_inv.mul(&group.left_mult_matrix(&group.e())).mul(&b);
    let f = b_inv.mul(&group.left_mult_matrix(&group.f())).mul(&b);
    let rep = Representation::from_parts(group, weights, e, f, ModLabel::Other("H".into()));
    (rep, b)
}

/// Matrix of `j_X : ad → X ⊗ X*`, `j_X(x) = Σ_a (x·v_a) ⊗ φ^a`, with rows
/// indexed by `i·dim X + a` (the basis `v_i ⊗ φ^a`) and columns by PBW
/// monomials.
pub fn end_structure_j(x: &Representation) -> Matrix {
    let group = x.group();
    let fl = x.field();
    let d = x.dim();
    let mut out = Matrix::zeros(fl, d * d, group.dim());
    for m in Mono::all(group.r()) {
        let rho = x.act_mono(&m);
        let col = m.index(group.r());
        for i in 0..d {
            for a in 0..d {
                if !rho[(i, a)].is_zero() {
                    out[(i * d + a, col)] = rho[(i, a)].clone();
                }
            }
        }
    }
    out
}

/// `e_U = (id_H ⊗ η*) ∘ d_H` for a dinatural family of the form
/// `d_X(u) = ρ_X(θ(u))`, given `θ` as an `r³ × dim U` matrix in PBW
/// coordinates; `d_H` is evaluated on the regular representation, where
/// `(id ⊗ η*)` reads off the image of the unit.
pub fn universal_morphism_e(group: &'static QuantumGroup, theta: &Matrix) -> Matrix {
    let fl = group.field();
    let n = group.dim();
    let mut out = Matrix::zeros(fl, n, theta.cols());
    let unit = Mono::ONE.index(group.r());
    for u in 0..theta.cols() {
        let mut z = AlgElem::zero();
        for m in Mono::all(group.r()) {
            let c = &theta[(m.index(group.r()), u)];
            if !c.is_zero() {
                z.add_term(m, c.clone());
            }
        }
        // d_H(u) = left multiplication by z, as an element of H ⊗ H*;
        // pairing the second leg with the unit gives z·1.
        let lm = group.left_mult_matrix(&z);
        for i in 0..n {
            out[(i, u)] = lm[(i, unit)].clone();
        }
    }
    out
}
