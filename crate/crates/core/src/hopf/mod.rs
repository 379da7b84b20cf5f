//! The small quantum group `Ū_q(sl2)` at an odd root of unity, as a concrete
//! ribbon Hopf algebra over the cyclotomic field.

mod elem;
mod ribbon;
mod transmutation;

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use smallvec::SmallVec;

pub use elem::{AlgElem, LinearForm, Mono, MonoTuple, TensorElem};
pub use ribbon::IntegralSide;

use crate::error::ScalarError;
use crate::linalg::Matrix;
use crate::scalar::{field_init, CycScalar, FieldContext};

type Terms = Vec<(Mono, CycScalar)>;

/// `Ū_q(sl2)` for a fixed odd `r`, with lazily built structure tables.
///
/// Instances are interned per `r` (see [`QuantumGroup::new`]); every cache is
/// filled once and then read-only, so a `&'static QuantumGroup` can be shared
/// freely between threads.
pub struct QuantumGroup {
    r: u32,
    field: FieldContext,
    /// `fe[b][a]`: normal form of `F^b E^a`.
    fe: Vec<Vec<Terms>>,
    coproduct_cache: Vec<OnceLock<TensorElem>>,
    antipode_cache: Vec<OnceLock<AlgElem>>,
    delta_e_pows: OnceLock<Vec<TensorElem>>,
    delta_f_pows: OnceLock<Vec<TensorElem>>,
    pub(crate) r_matrix: OnceLock<TensorElem>,
    pub(crate) r_matrix_inv: OnceLock<TensorElem>,
    pub(crate) m_matrix: OnceLock<TensorElem>,
    pub(crate) ribbon: OnceLock<AlgElem>,
    pub(crate) ribbon_inv: OnceLock<AlgElem>,
    pub(crate) drinfeld_u: OnceLock<AlgElem>,
    pub(crate) drinfeld_matrix: OnceLock<Matrix>,
}

static GROUPS: OnceLock<Mutex<HashMap<u32, &'static QuantumGroup>>> = OnceLock::new();

impl std::fmt::Debug for QuantumGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "QuantumGroup(r={})", self.r)
    }
}

impl QuantumGroup {
    /// The algebra for an odd `r ≥ 3`.
    pub fn new(r: u32) -> Result<&'static QuantumGroup, ScalarError> {
        let field = field_init(r)?;
        let map = GROUPS.get_or_init(|| Mutex::new(HashMap::new()));
        let mut guard = map.lock().expect("group registry poisoned");
        if let Some(g) = guard.get(&r) {
            return Ok(g);
        }
        let g: &'static QuantumGroup = Box::leak(Box::new(QuantumGroup::build(r, field)));
        guard.insert(r, g);
        Ok(g)
    }

    fn build(r: u32, field: FieldContext) -> Self {
        let n = (r * r * r) as usize;
        let mut g = QuantumGroup {
            r,
            field,
            fe: Vec::new(),
            coproduct_cache: (0..n).map(|_| OnceLock::new()).collect(),
            antipode_cache: (0..n).map(|_| OnceLock::new()).collect(),
            delta_e_pows: OnceLock::new(),
            delta_f_pows: OnceLock::new(),
            r_matrix: OnceLock::new(),
            r_matrix_inv: OnceLock::new(),
            m_matrix: OnceLock::new(),
            ribbon: OnceLock::new(),
            ribbon_inv: OnceLock::new(),
            drinfeld_u: OnceLock::new(),
            drinfeld_matrix: OnceLock::new(),
        };
        g.fe = g.build_fe_table();
        g
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn field(&self) -> FieldContext {
        self.field
    }

    /// Dimension `r³` of the algebra.
    pub fn dim(&self) -> usize {
        (self.r * self.r * self.r) as usize
    }

    fn wrap(&self, k: i64) -> u8 {
        k.rem_euclid(self.r as i64) as u8
    }

    pub fn one(&self) -> AlgElem {
        AlgElem::mono(Mono::ONE, self.field.one())
    }

    pub fn e(&self) -> AlgElem {
        AlgElem::mono(Mono::new(1, 0, 0), self.field.one())
    }

    pub fn f(&self) -> AlgElem {
        AlgElem::mono(Mono::new(0, 1, 0), self.field.one())
    }

    /// `K^c` for any integer `c`.
    pub fn k_pow(&self, c: i64) -> AlgElem {
        AlgElem::mono(Mono { e: 0, f: 0, k: self.wrap(c) }, self.field.one())
    }

    pub fn k(&self) -> AlgElem {
        self.k_pow(1)
    }

    pub fn scalar(&self, s: CycScalar) -> AlgElem {
        AlgElem::mono(Mono::ONE, s)
    }

    pub fn basis_elem(&self, m: Mono) -> AlgElem {
        AlgElem::mono(m, self.field.one())
    }

    /// `F · E^a F^b K^c` in normal form.
    fn left_mul_f(&self, m: Mono) -> Terms {
        let fl = self.field;
        let (a, b, c) = (m.e as i64, m.f as i64, m.k as i64);
        let mut out = Vec::new();
        if b + 1 < self.r as i64 {
            out.push((Mono { e: m.e, f: m.f + 1, k: m.k }, fl.one()));
        }
        if a > 0 {
            // - [a]/{1} E^{a-1} F^b (q^{a-1-2b} K^{c+1} - q^{1-a+2b} K^{c-1})
            let base = -(&fl.qint(a) / &fl.qbrace(1));
            out.push((Mono { e: m.e - 1, f: m.f, k: self.wrap(c + 1) }, base.mul_q_pow(a - 1 - 2 * b)));
            out.push((Mono { e: m.e - 1, f: m.f, k: self.wrap(c - 1) }, (-&base).mul_q_pow(1 - a + 2 * b)));
        }
        out
    }

    fn build_fe_table(&self) -> Vec<Vec<Terms>> {
        let r = self.r as usize;
        let mut table = vec![vec![Vec::new(); r]; r];
        for a in 0..r {
            let mut cur: AlgElem = AlgElem::mono(Mono::new(a as u32, 0, 0), self.field.one());
            for b in 0..r {
                table[b][a] = cur.terms().map(|(m, c)| (*m, c.clone())).collect();
                let mut next = AlgElem::zero();
                for (m, c) in cur.terms() {
                    for (m2, c2) in self.left_mul_f(*m) {
                        next.add_term(m2, c * &c2);
                    }
                }
                cur = next;
            }
        }
        table
    }

    /// Product of two PBW monomials in normal form.
    pub fn mul_mono(&self, x: Mono, y: Mono) -> Terms {
        let r = self.r as i64;
        let (a, b, c) = (x.e as i64, x.f as i64, x.k as i64);
        let (a2, b2, c2) = (y.e as i64, y.f as i64, y.k as i64);
        let pre = 2 * c * (a2 - b2);
        let mut out = Vec::new();
        for (m, t) in &self.fe[b as usize][a2 as usize] {
            let (i, j, k) = (m.e as i64, m.f as i64, m.k as i64);
            if a + i >= r || j + b2 >= r {
                continue;
            }
            let coeff = t.mul_q_pow(pre - 2 * k * b2);
            out.push((Mono { e: (a + i) as u8, f: (j + b2) as u8, k: self.wrap(k + c + c2) }, coeff));
        }
        out
    }

    pub fn mul(&self, x: &AlgElem, y: &AlgElem) -> AlgElem {
        let mut out = AlgElem::zero();
        for (m1, c1) in x.terms() {
            for (m2, c2) in y.terms() {
                let c12 = c1 * c2;
                for (m, c) in self.mul_mono(*m1, *m2) {
                    out.add_term(m, &c12 * &c);
                }
            }
        }
        out
    }

    /// Product of several elements, left to right.
    pub fn mul_all(&self, xs: &[&AlgElem]) -> AlgElem {
        let mut acc = self.one();
        for x in xs {
            acc = self.mul(&acc, x);
        }
        acc
    }

    pub fn pow(&self, x: &AlgElem, n: u32) -> AlgElem {
        let mut acc = self.one();
        for _ in 0..n {
            acc = self.mul(&acc, x);
        }
        acc
    }

    pub fn commutator(&self, x: &AlgElem, y: &AlgElem) -> AlgElem {
        self.mul(x, y).sub(&self.mul(y, x))
    }

    /// Factorwise product in a tensor power.
    pub fn mul_tensor(&self, x: &TensorElem, y: &TensorElem) -> TensorElem {
        assert_eq!(x.degree(), y.degree());
        let n = x.degree();
        let mut out = TensorElem::zero(n);
        for (k1, c1) in x.terms() {
            for (k2, c2) in y.terms() {
                let mut acc: Vec<(MonoTuple, CycScalar)> = vec![(SmallVec::new(), c1 * c2)];
                for j in 0..n {
                    let prod = self.mul_mono(k1[j], k2[j]);
                    if prod.is_empty() {
                        acc.clear();
                        break;
                    }
                    let mut next = Vec::with_capacity(acc.len() * prod.len());
                    for (key, c) in &acc {
                        for (m, d) in &prod {
                            let mut kk = key.clone();
                            kk.push(*m);
                            next.push((kk, c * d));
                        }
                    }
                    acc = next;
                }
                for (key, c) in acc {
                    out.add_term(key, c);
                }
            }
        }
        out
    }

    pub fn counit_mono(&self, m: &Mono) -> Option<CycScalar> {
        if m.e == 0 && m.f == 0 {
            Some(self.field.one())
        } else {
            None
        }
    }

    pub fn counit(&self, x: &AlgElem) -> CycScalar {
        let mut acc = self.field.zero();
        for (m, c) in x.terms() {
            if m.e == 0 && m.f == 0 {
                acc += c;
            }
        }
        acc
    }

    fn delta_e_pows(&self) -> &Vec<TensorElem> {
        self.delta_e_pows.get_or_init(|| {
            let one = self.field.one();
            let mut de = TensorElem::zero(2);
            de.add_term(SmallVec::from_slice(&[Mono::new(1, 0, 0), Mono::new(0, 0, 1)]), one.clone());
            de.add_term(SmallVec::from_slice(&[Mono::ONE, Mono::new(1, 0, 0)]), one.clone());
            let mut out = vec![TensorElem::unit(2, one)];
            for a in 1..self.r as usize {
                let next = self.mul_tensor(&out[a - 1], &de);
                out.push(next);
            }
            out
        })
    }

    fn delta_f_pows(&self) -> &Vec<TensorElem> {
        self.delta_f_pows.get_or_init(|| {
            let one = self.field.one();
            let kinv = Mono { e: 0, f: 0, k: self.wrap(-1) };
            let mut df = TensorElem::zero(2);
            df.add_term(SmallVec::from_slice(&[kinv, Mono::new(0, 1, 0)]), one.clone());
            df.add_term(SmallVec::from_slice(&[Mono::new(0, 1, 0), Mono::ONE]), one.clone());
            let mut out = vec![TensorElem::unit(2, one)];
            for b in 1..self.r as usize {
                let next = self.mul_tensor(&out[b - 1], &df);
                out.push(next);
            }
            out
        })
    }

    /// `Δ(E^a F^b K^c)`, cached.
    pub fn coproduct_mono(&self, m: &Mono) -> &TensorElem {
        self.coproduct_cache[m.index(self.r)].get_or_init(|| {
            let de = &self.delta_e_pows()[m.e as usize];
            let df = &self.delta_f_pows()[m.f as usize];
            let kk = Mono { e: 0, f: 0, k: m.k };
            let mut dk = TensorElem::zero(2);
            dk.add_term(SmallVec::from_slice(&[kk, kk]), self.field.one());
            self.mul_tensor(&self.mul_tensor(de, df), &dk)
        })
    }

    pub fn coproduct(&self, x: &AlgElem) -> TensorElem {
        let mut out = TensorElem::zero(2);
        for (m, c) in x.terms() {
            for (key, d) in self.coproduct_mono(m).terms() {
                out.add_term(key.clone(), c * d);
            }
        }
        out
    }

    /// Applies `Δ` to tensor factor `slot`, producing a tensor of one higher
    /// degree with the two new factors at `slot` and `slot + 1`.
    pub fn coproduct_leg(&self, t: &TensorElem, slot: usize) -> TensorElem {
        let mut out = TensorElem::zero(t.degree() + 1);
        for (key, c) in t.terms() {
            for (dk, d) in self.coproduct_mono(&key[slot]).terms() {
                let mut k: MonoTuple = SmallVec::new();
                k.extend_from_slice(&key[..slot]);
                k.extend_from_slice(dk);
                k.extend_from_slice(&key[slot + 1..]);
                out.add_term(k, c * d);
            }
        }
        out
    }

    /// `S(E^a F^b K^c) = K^{-c} S(F)^b S(E)^a`, cached.
    pub fn antipode_mono(&self, m: &Mono) -> &AlgElem {
        self.antipode_cache[m.index(self.r)].get_or_init(|| {
            let one = self.field.one();
            let minus = -&one;
            let s_e = AlgElem::mono(Mono { e: 1, f: 0, k: self.wrap(-1) }, minus.clone());
            let s_f = self.mul(&self.k(), &AlgElem::mono(Mono::new(0, 1, 0), minus));
            let mut acc = self.k_pow(-(m.k as i64));
            for _ in 0..m.f {
                acc = self.mul(&acc, &s_f);
            }
            for _ in 0..m.e {
                acc = self.mul(&acc, &s_e);
            }
            acc
        })
    }

    pub fn antipode(&self, x: &AlgElem) -> AlgElem {
        let mut out = AlgElem::zero();
        for (m, c) in x.terms() {
            for (m2, d) in self.antipode_mono(m).terms() {
                out.add_term(*m2, c * d);
            }
        }
        out
    }

    /// Inverse antipode, obtained from `S^{-1}(x) = K^{-1} S(x) K` (since
    /// `S²(x) = K x K^{-1}`).
    pub fn antipode_inv(&self, x: &AlgElem) -> AlgElem {
        self.mul_all(&[&self.k_pow(-1), &self.antipode(x), &self.k()])
    }

    /// Adjoint action `ad_x(y) = x_(1) y S(x_(2))`.
    pub fn adjoint(&self, x: &AlgElem, y: &AlgElem) -> AlgElem {
        let mut out = AlgElem::zero();
        for (key, c) in self.coproduct(x).terms() {
            let left = self.mul(&AlgElem::mono(key[0], c.clone()), y);
            out = out.add(&self.mul(&left, self.antipode_mono(&key[1])));
        }
        out
    }

    /// Applies `f` to each tensor factor (a tensor of `f`'s images).
    pub fn map_legs(&self, t: &TensorElem, f: impl Fn(usize, &Mono) -> AlgElem) -> TensorElem {
        let mut out = TensorElem::zero(t.degree());
        for (key, c) in t.terms() {
            let images: Vec<AlgElem> = key.iter().enumerate().map(|(j, m)| f(j, m)).collect();
            let refs: Vec<&AlgElem> = images.iter().collect();
            out = out.add(&TensorElem::pure(&refs).scale(c));
        }
        out
    }

    /// Multiplies the legs of a tensor together in the given order
    /// (`order[0]` leftmost).
    pub fn multiply_legs(&self, t: &TensorElem, order: &[usize]) -> AlgElem {
        let mut out = AlgElem::zero();
        for (key, c) in t.terms() {
            let mut acc = AlgElem::mono(key[order[0]], c.clone());
            for &j in &order[1..] {
                acc = self.mul(&acc, &self.basis_elem(key[j]));
            }
            out = out.add(&acc);
        }
        out
    }

    /// Dense `r³ × r³` matrix of left multiplication by `x`.
    pub fn left_mult_matrix(&self, x: &AlgElem) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(self.field, n, n);
        for b in Mono::all(self.r) {
            for (m2, c) in self.mul(x, &self.basis_elem(b)).terms() {
                m[(m2.index(self.r), b.index(self.r))] = c.clone();
            }
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_relations() {
        let h = QuantumGroup::new(5).unwrap();
        let fl = h.field();
        assert_eq!(h.mul(&h.k(), &h.k_pow(4)), h.one());
        let ef = h.mul(&h.e(), &h.f());
        let fe = h.mul(&h.f(), &h.e());
        let comm = h.k().sub(&h.k_pow(-1)).scale(&fl.qbrace(1).inv().unwrap());
        assert_eq!(ef, fe.add(&comm));
        assert!(h.mul(&h.e(), &h.basis_elem(Mono::new(4, 0, 0))).is_zero());
        assert!(h.pow(&h.f(), 5).is_zero());
        let kek = h.mul_all(&[&h.k(), &h.e(), &h.k_pow(-1)]);
        assert_eq!(kek, h.e().scale(&fl.q_pow(2)));
        let kfk = h.mul_all(&[&h.k(), &h.f(), &h.k_pow(-1)]);
        assert_eq!(kfk, h.f().scale(&fl.q_pow(-2)));
    }

    #[test]
    fn associativity_on_basis_r3() {
        let h = QuantumGroup::new(3).unwrap();
        let basis: Vec<AlgElem> = Mono::all(3).map(|m| h.basis_elem(m)).collect();
        for x in basis.iter().step_by(2) {
            for y in basis.iter().step_by(3) {
                for z in basis.iter().step_by(5) {
                    assert_eq!(h.mul(&h.mul(x, y), z), h.mul(x, &h.mul(y, z)));
                }
            }
        }
    }

    #[test]
    fn generator_tables() {
        let h = QuantumGroup::new(3).unwrap();
        let one = h.field().one();
        let dk = h.coproduct(&h.k());
        assert_eq!(dk, TensorElem::pure(&[&h.k(), &h.k()]));
        assert_eq!(h.antipode(&h.e()), h.mul(&h.e(), &h.k_pow(-1)).scale(&-&one));
        assert_eq!(h.antipode(&h.f()), h.mul(&h.k(), &h.f()).scale(&-&one));
        assert_eq!(h.coproduct(&h.one()), TensorElem::unit(2, one.clone()));
        assert_eq!(h.counit(&h.one()), one);
        assert_eq!(h.antipode(&h.one()), h.one());
        let de = TensorElem::pure(&[&h.e(), &h.k()]).add(&TensorElem::pure(&[&h.one(), &h.e()]));
        assert_eq!(h.coproduct(&h.e()), de);
    }
}
