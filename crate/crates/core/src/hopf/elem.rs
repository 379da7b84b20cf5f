//! Sparse elements of the algebra, its tensor powers and its dual.

use std::collections::BTreeMap;
use std::fmt;

use serde::ser::{Serialize, SerializeSeq, Serializer};
use smallvec::SmallVec;

use crate::scalar::CycScalar;

/// PBW monomial `E^e F^f K^k`, exponents in `0..r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mono {
    pub e: u8,
    pub f: u8,
    pub k: u8,
}

impl Mono {
    pub const ONE: Mono = Mono { e: 0, f: 0, k: 0 };

    pub fn new(e: u32, f: u32, k: u32) -> Self {
        Mono { e: e as u8, f: f as u8, k: k as u8 }
    }

    /// Position in the dense ordering used by matrices over the PBW basis.
    pub fn index(&self, r: u32) -> usize {
        (self.e as usize * r as usize + self.f as usize) * r as usize + self.k as usize
    }

    pub fn from_index(idx: usize, r: u32) -> Self {
        let r = r as usize;
        Mono { e: (idx / (r * r)) as u8, f: ((idx / r) % r) as u8, k: (idx % r) as u8 }
    }

    pub fn all(r: u32) -> impl Iterator<Item = Mono> {
        (0..(r * r * r) as usize).map(move |i| Mono::from_index(i, r))
    }

    /// Weight of the monomial under conjugation by `K`, i.e. `2(e - f)`.
    pub fn weight(&self) -> i64 {
        2 * (self.e as i64 - self.f as i64)
    }
}

impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.e > 0 {
            parts.push(if self.e == 1 { "E".to_string() } else { format!("E^{}", self.e) });
        }
        if self.f > 0 {
            parts.push(if self.f == 1 { "F".to_string() } else { format!("F^{}", self.f) });
        }
        if self.k > 0 {
            parts.push(if self.k == 1 { "K".to_string() } else { format!("K^{}", self.k) });
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(""))
        }
    }
}

fn accumulate<K: Ord>(map: &mut BTreeMap<K, CycScalar>, key: K, value: CycScalar) {
    if value.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match map.entry(key) {
        Entry::Vacant(v) => {
            v.insert(value);
        }
        Entry::Occupied(mut o) => {
            let s = o.get() + &value;
            if s.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = s;
            }
        }
    }
}

/// Sparse linear combination of PBW monomials.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct AlgElem {
    terms: BTreeMap<Mono, CycScalar>,
}

impl AlgElem {
    pub fn zero() -> Self {
        AlgElem { terms: BTreeMap::new() }
    }

    pub fn mono(m: Mono, c: CycScalar) -> Self {
        let mut x = Self::zero();
        x.add_term(m, c);
        x
    }

    pub fn add_term(&mut self, m: Mono, c: CycScalar) {
        accumulate(&mut self.terms, m, c);
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &CycScalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Mono) -> Option<&CycScalar> {
        self.terms.get(m)
    }

    pub fn add(&self, other: &AlgElem) -> AlgElem {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &AlgElem) -> AlgElem {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, -c);
        }
        out
    }

    pub fn scale(&self, s: &CycScalar) -> AlgElem {
        let mut out = AlgElem::zero();
        for (m, c) in &self.terms {
            out.add_term(*m, c * s);
        }
        out
    }
}

impl fmt::Debug for AlgElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(m, c)| format!("({})·{}", c, m)).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl Serialize for AlgElem {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (m, c) in &self.terms {
            seq.serialize_element(&(vec![m.e, m.f, m.k], c))?;
        }
        seq.end()
    }
}

pub type MonoTuple = SmallVec<[Mono; 4]>;

/// Sparse element of a tensor power of the algebra.
#[derive(Clone, PartialEq, Eq)]
pub struct TensorElem {
    degree: usize,
    terms: BTreeMap<MonoTuple, CycScalar>,
}

impl TensorElem {
    pub fn zero(degree: usize) -> Self {
        TensorElem { degree, terms: BTreeMap::new() }
    }

    pub fn unit(degree: usize, one: CycScalar) -> Self {
        let mut t = Self::zero(degree);
        t.add_term(SmallVec::from_elem(Mono::ONE, degree), one);
        t
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn add_term(&mut self, key: MonoTuple, c: CycScalar) {
        debug_assert_eq!(key.len(), self.degree);
        accumulate(&mut self.terms, key, c);
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MonoTuple, &CycScalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, key: &[Mono]) -> Option<&CycScalar> {
        self.terms.get(&MonoTuple::from_slice(key))
    }

    pub fn add(&self, other: &TensorElem) -> TensorElem {
        assert_eq!(self.degree, other.degree);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &TensorElem) -> TensorElem {
        assert_eq!(self.degree, other.degree);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    pub fn scale(&self, s: &CycScalar) -> TensorElem {
        let mut out = Self::zero(self.degree);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c * s);
        }
        out
    }

    /// Pure tensor `x_1 ⊗ ... ⊗ x_n`.
    pub fn pure(factors: &[&AlgElem]) -> TensorElem {
        let mut out = TensorElem::zero(factors.len());
        let mut acc: Vec<(MonoTuple, CycScalar)> = Vec::new();
        if let Some(first) = factors.first() {
            acc = first.terms().map(|(m, c)| (MonoTuple::from_slice(&[*m]), c.clone())).collect();
        }
        for f in &factors[1.min(factors.len())..] {
            let mut next = Vec::new();
            for (key, c) in &acc {
                for (m, d) in f.terms() {
                    let mut k = key.clone();
                    k.push(*m);
                    next.push((k, c * d));
                }
            }
            acc = next;
        }
        for (k, c) in acc {
            out.add_term(k, c);
        }
        out
    }

    /// Reorders tensor factors: factor `j` of the result is factor `perm[j]`
    /// of `self`.
    pub fn permute(&self, perm: &[usize]) -> TensorElem {
        assert_eq!(perm.len(), self.degree);
        let mut out = Self::zero(self.degree);
        for (m, c) in &self.terms {
            let key: MonoTuple = perm.iter().map(|&p| m[p]).collect();
            out.add_term(key, c.clone());
        }
        out
    }

    /// `R_{21}` from `R_{12}`.
    pub fn flip(&self) -> TensorElem {
        assert_eq!(self.degree, 2);
        self.permute(&[1, 0])
    }

    /// Embeds into a higher tensor power, placing factor `j` at slot
    /// `slots[j]` and units elsewhere (e.g. `R_{13}` from `R`).
    pub fn embed(&self, degree: usize, slots: &[usize]) -> TensorElem {
        assert_eq!(slots.len(), self.degree);
        let mut out = Self::zero(degree);
        for (m, c) in &self.terms {
            let mut key: MonoTuple = SmallVec::from_elem(Mono::ONE, degree);
            for (j, &s) in slots.iter().enumerate() {
                key[s] = m[j];
            }
            out.add_term(key, c.clone());
        }
        out
    }

    /// Applies a linear functional to one factor, keeping the others.
    pub fn contract(&self, slot: usize, f: impl Fn(&Mono) -> Option<CycScalar>) -> TensorElem {
        let mut out = Self::zero(self.degree - 1);
        for (m, c) in &self.terms {
            if let Some(v) = f(&m[slot]) {
                let mut key = m.clone();
                key.remove(slot);
                out.add_term(key, c * &v);
            }
        }
        out
    }

    /// Views a degree-1 tensor as an algebra element.
    pub fn to_alg(&self) -> AlgElem {
        assert_eq!(self.degree, 1);
        let mut out = AlgElem::zero();
        for (m, c) in &self.terms {
            out.add_term(m[0], c.clone());
        }
        out
    }
}

impl fmt::Debug for TensorElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let legs: Vec<String> = m.iter().map(|x| x.to_string()).collect();
                format!("({})·{}", c, legs.join("⊗"))
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl Serialize for TensorElem {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (m, c) in &self.terms {
            let key: Vec<[u8; 3]> = m.iter().map(|x| [x.e, x.f, x.k]).collect();
            seq.serialize_element(&(key, c))?;
        }
        seq.end()
    }
}

/// Linear form on the algebra, stored by its values on the PBW basis
/// (absent monomials evaluate to zero).
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LinearForm {
    values: BTreeMap<Mono, CycScalar>,
}

impl LinearForm {
    pub fn zero() -> Self {
        LinearForm { values: BTreeMap::new() }
    }

    /// Dual basis vector `(E^e F^f K^k)^*`.
    pub fn dual_basis(m: Mono, one: CycScalar) -> Self {
        let mut v = BTreeMap::new();
        v.insert(m, one);
        LinearForm { values: v }
    }

    pub fn set(&mut self, m: Mono, c: CycScalar) {
        if c.is_zero() {
            self.values.remove(&m);
        } else {
            self.values.insert(m, c);
        }
    }

    pub fn value(&self, m: &Mono) -> Option<&CycScalar> {
        self.values.get(m)
    }

    pub fn values(&self) -> impl Iterator<Item = (&Mono, &CycScalar)> {
        self.values.iter()
    }

    pub fn apply(&self, x: &AlgElem) -> Option<CycScalar> {
        let mut acc: Option<CycScalar> = None;
        for (m, c) in x.terms() {
            if let Some(v) = self.values.get(m) {
                let t = c * v;
                acc = Some(match acc {
                    Some(a) => &a + &t,
                    None => t,
                });
            }
        }
        acc
    }
}

impl fmt::Debug for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(|(m, c)| format!("{}* ↦ {}", m, c)).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}
