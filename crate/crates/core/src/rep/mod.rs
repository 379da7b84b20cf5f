//! Finite-dimensional modules: the catalogue `V_n`, `P_n`, tensor products,
//! duals, intertwiners, Krull–Schmidt splitting and (modified) traces.
//!
//! Every module is stored in a basis of `K`-eigenvectors, so `K` is kept as a
//! list of exponents `w` (acting by `q^w`) and only `E`, `F` are full matrices.

mod decompose;
mod end;
mod hom;

use std::fmt;
use std::sync::OnceLock;

pub use decompose::{catalogue, decompose, fusion_rule, Decomposition, Summand};
pub use end::{adjoint_representation, end_structure_j, regular_representation, universal_morphism_e};
pub use hom::{hom_space, is_isomorphic};

use crate::error::{Error, Result};
use crate::hopf::{AlgElem, QuantumGroup, TensorElem};
use crate::linalg::Matrix;
use crate::scalar::{CycScalar, FieldContext};

/// Catalogue tag of a module built from `V_n`, `P_n` by tensor products and
/// duals.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ModLabel {
    V(u32),
    P(u32),
    Dual(Box<ModLabel>),
    Tensor(Box<ModLabel>, Box<ModLabel>),
    Other(String),
}

impl ModLabel {
    pub fn dual(&self) -> ModLabel {
        ModLabel::Dual(Box::new(self.clone()))
    }

    pub fn tensor(&self, other: &ModLabel) -> ModLabel {
        ModLabel::Tensor(Box::new(self.clone()), Box::new(other.clone()))
    }

    /// True for `V_{r-1}`, `P_n`, and any tensor product with a projective
    /// factor (projectives form a tensor ideal); duals of projectives are
    /// projective.
    pub fn is_projective(&self, r: u32) -> bool {
        match self {
            ModLabel::V(n) => *n == r - 1,
            ModLabel::P(_) => true,
            ModLabel::Dual(x) => x.is_projective(r),
            ModLabel::Tensor(a, b) => a.is_projective(r) || b.is_projective(r),
            ModLabel::Other(_) => false,
        }
    }
}

impl fmt::Display for ModLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModLabel::V(n) => write!(f, "V{}", n),
            ModLabel::P(n) => write!(f, "P{}", n),
            ModLabel::Dual(x) => match **x {
                ModLabel::Tensor(..) => write!(f, "({})*", x),
                _ => write!(f, "{}*", x),
            },
            ModLabel::Tensor(a, b) => write!(f, "{}(x){}", a, b),
            ModLabel::Other(s) => write!(f, "{}", s),
        }
    }
}

/// A module given by the action of the generators.
#[derive(Clone)]
pub struct Representation {
    group: &'static QuantumGroup,
    weights: Vec<i64>,
    act_e: Matrix,
    act_f: Matrix,
    label: ModLabel,
    e_pows: OnceLock<Vec<Matrix>>,
    f_pows: OnceLock<Vec<Matrix>>,
}

impl fmt::Debug for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Representation({}, dim {})", self.label, self.dim())
    }
}

/// A module map, stored as a `target.dim × source.dim` matrix.
#[derive(Clone, Debug)]
pub struct Intertwiner {
    pub source: Representation,
    pub target: Representation,
    pub matrix: Matrix,
}

impl Representation {
    /// Builds a module from `K`-exponents and `E`, `F` matrices.
    pub fn from_parts(group: &'static QuantumGroup, weights: Vec<i64>, act_e: Matrix, act_f: Matrix, label: ModLabel) -> Self {
        let r = group.r() as i64;
        let weights = weights.into_iter().map(|w| w.rem_euclid(r)).collect();
        Representation { group, weights, act_e, act_f, label, e_pows: OnceLock::new(), f_pows: OnceLock::new() }
    }

    pub fn group(&self) -> &'static QuantumGroup {
        self.group
    }

    pub fn field(&self) -> FieldContext {
        self.group.field()
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn label(&self) -> &ModLabel {
        &self.label
    }

    pub fn with_label(mut self, label: ModLabel) -> Self {
        self.label = label;
        self
    }

    /// `K`-exponents of the basis vectors, reduced mod `r`.
    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn act_e(&self) -> &Matrix {
        &self.act_e
    }

    pub fn act_f(&self) -> &Matrix {
        &self.act_f
    }

    /// `K^c` as a diagonal matrix.
    pub fn act_k_pow(&self, c: i64) -> Matrix {
        let fl = self.field();
        let d: Vec<CycScalar> = self.weights.iter().map(|&w| fl.q_pow(w * c)).collect();
        Matrix::diagonal(fl, &d)
    }

    pub fn act_k(&self) -> Matrix {
        self.act_k_pow(1)
    }

    fn e_pows(&self) -> &Vec<Matrix> {
        self.e_pows.get_or_init(|| powers(&self.act_e, self.group.r()))
    }

    fn f_pows(&self) -> &Vec<Matrix> {
        self.f_pows.get_or_init(|| powers(&self.act_f, self.group.r()))
    }

    /// Action of the PBW monomial `E^e F^f K^k`.
    pub fn act_mono(&self, m: &crate::hopf::Mono) -> Matrix {
        let ef = self.e_pows()[m.e as usize].mul(&self.f_pows()[m.f as usize]);
        scale_columns_by_k(&ef, &self.weights, m.k as i64, self.field())
    }

    /// Action of an arbitrary algebra element.
    pub fn act(&self, x: &AlgElem) -> Matrix {
        let mut out = Matrix::zeros(self.field(), self.dim(), self.dim());
        for (m, c) in x.terms() {
            out = out.add(&self.act_mono(m).scale(c));
        }
        out
    }

    /// Checks the defining relations as matrix identities.
    pub fn check_relations(&self) -> bool {
        let fl = self.field();
        let r = self.group.r();
        let e = &self.act_e;
        let f = &self.act_f;
        let k = self.act_k();
        let kinv = self.act_k_pow(-1);
        let ke = k.mul(e).mul(&kinv);
        let kf = k.mul(f).mul(&kinv);
        let comm = e.mul(f).sub(&f.mul(e));
        let rhs = k.sub(&kinv).scale(&fl.qbrace(1).inv().expect("nonzero"));
        ke == e.scale(&fl.q_pow(2))
            && kf == f.scale(&fl.q_pow(-2))
            && comm == rhs
            && e.pow(r).is_zero()
            && f.pow(r).is_zero()
    }

    /// Quantum dimension `tr(K)`.
    pub fn qdim(&self) -> CycScalar {
        let fl = self.field();
        let mut acc = fl.zero();
        for &w in &self.weights {
            acc += &fl.q_pow(w);
        }
        acc
    }

    /// Pivotal trace `tr(K f)` of an endomorphism.
    pub fn qtrace(&self, f: &Matrix) -> CycScalar {
        assert_eq!(f.rows(), self.dim());
        assert_eq!(f.cols(), self.dim());
        let fl = self.field();
        let mut acc = fl.zero();
        for (i, &w) in self.weights.iter().enumerate() {
            if !f[(i, i)].is_zero() {
                acc += &f[(i, i)].mul_q_pow(w);
            }
        }
        acc
    }

    /// Checks that `m` (a `target.dim × self.dim` matrix) commutes with the
    /// generator actions.
    pub fn is_intertwiner_to(&self, target: &Representation, m: &Matrix) -> bool {
        if m.rows() != target.dim() || m.cols() != self.dim() {
            return false;
        }
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                if !m[(i, j)].is_zero() && target.weights[i] != self.weights[j] {
                    return false;
                }
            }
        }
        m.mul(&self.act_e) == target.act_e.mul(m) && m.mul(&self.act_f) == target.act_f.mul(m)
    }

    pub fn identity(&self) -> Matrix {
        Matrix::identity(self.field(), self.dim())
    }
}

fn powers(m: &Matrix, r: u32) -> Vec<Matrix> {
    let mut out = vec![Matrix::identity(m.field(), m.rows())];
    for j in 1..r as usize {
        let next = out[j - 1].mul(m);
        out.push(next);
    }
    out
}

/// `M · diag(q^{c·w})`.
fn scale_columns_by_k(m: &Matrix, weights: &[i64], c: i64, fl: FieldContext) -> Matrix {
    if c == 0 {
        return m.clone();
    }
    let mut out = m.clone();
    for j in 0..m.cols() {
        let s = c * weights[j];
        for i in 0..m.rows() {
            if !out[(i, j)].is_zero() {
                out[(i, j)] = out[(i, j)].mul_q_pow(s);
            }
        }
    }
    let _ = fl;
    out
}

fn check_index(group: &QuantumGroup, n: u32, max: u32) -> Result<()> {
    if n > max {
        return Err(Error::ModuleIndex { index: n, r: group.r() });
    }
    Ok(())
}

/// The simple module `V_n`, `0 ≤ n ≤ r-1`, with basis `a_0..a_n`.
pub fn simple_module(group: &'static QuantumGroup, n: u32) -> Result<Representation> {
    check_index(group, n, group.r() - 1)?;
    let fl = group.field();
    let d = n as usize + 1;
    let mut e = Matrix::zeros(fl, d, d);
    let mut f = Matrix::zeros(fl, d, d);
    let ni = n as i64;
    for i in 0..d {
        let ii = i as i64;
        if i > 0 {
            e[(i - 1, i)] = &fl.qint(ii) * &fl.qint(ni - ii + 1);
        }
        if i + 1 < d {
            f[(i + 1, i)] = fl.one();
        }
    }
    let weights = (0..d as i64).map(|i| ni - 2 * i).collect();
    Ok(Representation::from_parts(group, weights, e, f, ModLabel::V(n)))
}

/// The projective cover `P_n`, `0 ≤ n ≤ r-2`, on the basis
/// `a_0..a_n, x_0..x_{r-n-2}, y_0..y_{r-n-2}, b_0..b_n` (in that order).
pub fn projective_module(group: &'static QuantumGroup, n: u32) -> Result<Representation> {
    let r = group.r();
    check_index(group, n, r - 2)?;
    let fl = group.field();
    let na = n as usize + 1;
    let nx = (r - n - 1) as usize;
    let d = 2 * na + 2 * nx;
    let ai = |i: usize| i;
    let xi = |j: usize| na + j;
    let yi = |j: usize| na + nx + j;
    let bi = |i: usize| na + 2 * nx + i;
    let ni = n as i64;
    let mut e = Matrix::zeros(fl, d, d);
    let mut f = Matrix::zeros(fl, d, d);
    let mut weights = vec![0i64; d];
    for i in 0..na {
        let ii = i as i64;
        weights[ai(i)] = ni - 2 * ii;
        weights[bi(i)] = ni - 2 * ii;
        let coef = &fl.qint(ii) * &fl.qint(ni - ii + 1);
        if i > 0 {
            e[(ai(i - 1), ai(i))] = coef.clone();
            e[(ai(i - 1), bi(i))] = fl.one();
            e[(bi(i - 1), bi(i))] = coef;
        } else {
            e[(xi(nx - 1), bi(0))] = fl.one();
        }
        if i + 1 < na {
            f[(ai(i + 1), ai(i))] = fl.one();
            f[(bi(i + 1), bi(i))] = fl.one();
        } else {
            f[(yi(0), bi(i))] = fl.one();
        }
    }
    for j in 0..nx {
        let jj = j as i64;
        weights[xi(j)] = -ni - 2 * jj - 2;
        weights[yi(j)] = -ni - 2 * jj - 2;
        let coef = -(&fl.qint(jj) * &fl.qint(ni + jj + 1));
        if j > 0 {
            e[(xi(j - 1), xi(j))] = coef.clone();
            e[(yi(j - 1), yi(j))] = coef;
        } else {
            e[(ai(na - 1), yi(0))] = fl.one();
        }
        if j + 1 < nx {
            f[(xi(j + 1), xi(j))] = fl.one();
            f[(yi(j + 1), yi(j))] = fl.one();
        } else {
            f[(ai(0), xi(j))] = fl.one();
        }
    }
    Ok(Representation::from_parts(group, weights, e, f, ModLabel::P(n)))
}

/// Catalogue module by label (`P_{r-1}` is accepted as `V_{r-1}`).
pub fn catalogue_module(group: &'static QuantumGroup, label: &ModLabel) -> Result<Representation> {
    match label {
        ModLabel::V(n) => simple_module(group, *n),
        ModLabel::P(n) if *n == group.r() - 1 => Ok(simple_module(group, *n)?.with_label(ModLabel::P(*n))),
        ModLabel::P(n) => projective_module(group, *n),
        ModLabel::Dual(x) => Ok(dual(&catalogue_module(group, x)?)),
        ModLabel::Tensor(a, b) => Ok(tensor(&catalogue_module(group, a)?, &catalogue_module(group, b)?)),
        ModLabel::Other(s) => Err(Error::LabelOutOfRange(s.clone())),
    }
}

/// The trivial module `V_0`.
pub fn unit_module(group: &'static QuantumGroup) -> Representation {
    simple_module(group, 0).expect("V0 exists")
}

/// `A ⊗ B` via `Δ(E) = E⊗K + 1⊗E`, `Δ(F) = K^{-1}⊗F + F⊗1`; the basis
/// vector `a_i ⊗ b_j` has index `i·dim B + j`.
pub fn tensor(a: &Representation, b: &Representation) -> Representation {
    let fl = a.field();
    let ia = Matrix::identity(fl, a.dim());
    let ib = Matrix::identity(fl, b.dim());
    let e = a.act_e.kron(&b.act_k()).add(&ia.kron(&b.act_e));
    let f = a.act_k_pow(-1).kron(&b.act_f).add(&a.act_f.kron(&ib));
    let mut weights = Vec::with_capacity(a.dim() * b.dim());
    for &wa in &a.weights {
        for &wb in &b.weights {
            weights.push(wa + wb);
        }
    }
    Representation::from_parts(a.group, weights, e, f, a.label.tensor(&b.label))
}

/// Tensor product of several modules, associated to the left.
pub fn tensor_all(mods: &[&Representation]) -> Representation {
    let mut acc = mods[0].clone();
    for m in &mods[1..] {
        acc = tensor(&acc, m);
    }
    acc
}

/// Dual module on the dual basis: `x·φ = φ(S(x) ·)`.
pub fn dual(a: &Representation) -> Representation {
    let kinv = a.act_k_pow(-1);
    let k = a.act_k();
    let minus = -a.field().one();
    // S(E) = -E K^{-1}, S(F) = -K F
    let e = a.act_e.mul(&kinv).scale(&minus).transpose();
    let f = k.mul(&a.act_f).scale(&minus).transpose();
    let weights = a.weights.iter().map(|w| -w).collect();
    Representation::from_parts(a.group, weights, e, f, a.label.dual())
}

/// Action of a two-fold tensor `Σ c x ⊗ y` on `A ⊗ B`.
pub fn act_tensor2(t: &TensorElem, a: &Representation, b: &Representation) -> Matrix {
    use std::collections::BTreeMap;
    let fl = a.field();
    let mut grouped: BTreeMap<crate::hopf::Mono, AlgElem> = BTreeMap::new();
    for (key, c) in t.terms() {
        grouped.entry(key[0]).or_default().add_term(key[1], c.clone());
    }
    let mut out = Matrix::zeros(fl, a.dim() * b.dim(), a.dim() * b.dim());
    for (m, y) in grouped {
        let ma = a.act_mono(&m);
        if ma.is_zero() {
            continue;
        }
        let mb = b.act(&y);
        if mb.is_zero() {
            continue;
        }
        out = out.add(&ma.kron(&mb));
    }
    out
}

/// The flip `A ⊗ B → B ⊗ A` as a permutation matrix.
pub fn flip_matrix(fl: FieldContext, da: usize, db: usize) -> Matrix {
    let mut p = Matrix::zeros(fl, da * db, da * db);
    for i in 0..da {
        for j in 0..db {
            p[(j * da + i, i * db + j)] = fl.one();
        }
    }
    p
}

/// Braiding `c_{A,B} = τ ∘ R` from `A ⊗ B` to `B ⊗ A`.
pub fn braiding(a: &Representation, b: &Representation) -> Matrix {
    let g = a.group();
    flip_matrix(a.field(), a.dim(), b.dim()).mul(&act_tensor2(g.r_matrix(), a, b))
}

/// Inverse braiding `c_{A,B}^{-1}` from `B ⊗ A` to `A ⊗ B`.
pub fn braiding_inv(a: &Representation, b: &Representation) -> Matrix {
    let g = a.group();
    act_tensor2(g.r_matrix_inv(), a, b).mul(&flip_matrix(a.field(), b.dim(), a.dim()))
}

/// Right partial trace over the second factor of `X ⊗ Y`:
/// `(id ⊗ rev_Y)(f ⊗ id)(id ⊗ lcoev_Y)`.
pub fn partial_trace_right(f: &Matrix, dx: usize, y: &Representation) -> Matrix {
    let dy = y.dim();
    let fl = y.field();
    let mut out = Matrix::zeros(fl, dx, dx);
    for a in 0..dx {
        for b in 0..dx {
            let mut acc = fl.zero();
            for (i, &w) in y.weights().iter().enumerate() {
                let v = &f[(a * dy + i, b * dy + i)];
                if !v.is_zero() {
                    acc += &v.mul_q_pow(w);
                }
            }
            out[(a, b)] = acc;
        }
    }
    out
}

/// Left partial trace over the first factor of `X ⊗ Y`:
/// `(lev_X ⊗ id)(id ⊗ f)(rcoev_X ⊗ id)`.
pub fn partial_trace_left(f: &Matrix, x: &Representation, dy: usize) -> Matrix {
    let fl = x.field();
    let mut out = Matrix::zeros(fl, dy, dy);
    for a in 0..dy {
        for b in 0..dy {
            let mut acc = fl.zero();
            for (i, &w) in x.weights().iter().enumerate() {
                let v = &f[(i * dy + a, i * dy + b)];
                if !v.is_zero() {
                    acc += &v.mul_q_pow(-w);
                }
            }
            out[(a, b)] = acc;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalogue_relations() {
        for r in [3u32, 5] {
            let g = QuantumGroup::new(r).unwrap();
            for n in 0..r {
                let v = simple_module(g, n).unwrap();
                assert!(v.check_relations(), "V{} at r={}", n, r);
                assert_eq!(v.qdim(), g.field().qint(n as i64 + 1));
            }
            for n in 0..r - 1 {
                let p = projective_module(g, n).unwrap();
                assert_eq!(p.dim(), 2 * r as usize);
                assert!(p.check_relations(), "P{} at r={}", n, r);
                assert!(p.qdim().is_zero());
            }
            assert!(simple_module(g, r).is_err());
            assert!(projective_module(g, r - 1).is_err());
        }
    }

    #[test]
    fn tensor_and_dual_relations() {
        let g = QuantumGroup::new(5).unwrap();
        let v1 = simple_module(g, 1).unwrap();
        let v2 = simple_module(g, 2).unwrap();
        let p0 = projective_module(g, 0).unwrap();
        assert!(tensor(&v1, &v2).check_relations());
        assert!(dual(&p0).check_relations());
        assert!(tensor(&dual(&v2), &p0).check_relations());
        assert_eq!(tensor(&v1, &v1).dim(), 4);
    }

    #[test]
    fn generic_action_matches_generators() {
        let g = QuantumGroup::new(3).unwrap();
        let p = projective_module(g, 1).unwrap();
        assert_eq!(&p.act(&g.e()), p.act_e());
        assert_eq!(&p.act(&g.f()), p.act_f());
        assert_eq!(p.act(&g.k()), p.act_k());
        let x = g.mul(&g.e(), &g.f());
        assert_eq!(p.act(&x), p.act_e().mul(p.act_f()));
    }

    #[test]
    fn double_braiding_is_monodromy() {
        let g = QuantumGroup::new(3).unwrap();
        let v1 = simple_module(g, 1).unwrap();
        let p0 = projective_module(g, 0).unwrap();
        let c1 = braiding(&v1, &p0);
        let c2 = braiding(&p0, &v1);
        let m = act_tensor2(g.m_matrix(), &v1, &p0);
        assert_eq!(c2.mul(&c1), m);
        assert!(braiding_inv(&v1, &p0).mul(&c1).is_identity());
    }
}
