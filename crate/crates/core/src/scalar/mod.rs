//! Exact arithmetic in the cyclotomic field `Q(ζ)`, `ζ = e^{2πi/(4r)}`.
//!
//! This field contains `q = ζ^4`, `i = ζ^r` and `√r`, which covers every
//! constant that appears in the ribbon structure and in the normalizations of
//! the invariants.

mod coeffs;
mod field;

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::ser::{Serialize, SerializeStruct, Serializer};

use coeffs::Coeffs;
pub use field::{cyclotomic_polynomial, field_init, CyclotomicField, FieldContext};

use crate::error::ScalarError;

/// An exact element of the cyclotomic field of order `4r`.
#[derive(Clone)]
pub struct CycScalar {
    field: &'static CyclotomicField,
    coeffs: Coeffs,
}

impl CycScalar {
    pub(crate) fn from_coeffs(field: &'static CyclotomicField, coeffs: Coeffs) -> Self {
        debug_assert_eq!(coeffs.len(), field.degree());
        CycScalar { field, coeffs }
    }

    pub fn field(&self) -> FieldContext {
        self.field
    }

    /// Order of the root of unity generating the field (always `4r`).
    pub fn order(&self) -> u32 {
        self.field.order()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_zero()
    }

    pub fn is_one(&self) -> bool {
        match &self.coeffs {
            Coeffs::Small { num, den } => *den == 1 && num[0] == 1 && num[1..].iter().all(|&x| x == 0),
            Coeffs::Big { .. } => false,
        }
    }

    /// Power-basis coordinates as exact rationals.
    pub fn coordinates(&self) -> Vec<BigRational> {
        let (num, den) = self.coeffs.to_big();
        num.into_iter().map(|n| BigRational::new(n, den.clone())).collect()
    }

    /// The rational value, if the scalar lies in `Q`.
    pub fn to_rational(&self) -> Option<BigRational> {
        let coords = self.coordinates();
        if coords[1..].iter().all(|c| c.is_zero()) {
            Some(coords[0].clone())
        } else {
            None
        }
    }

    /// Double-precision value at `ζ = e^{2πi/(4r)}`; for reporting only.
    pub fn approx(&self) -> Complex64 {
        let order = self.field.order() as f64;
        let (num, den) = match &self.coeffs {
            Coeffs::Small { num, den } => (num.iter().map(|&x| x as f64).collect::<Vec<_>>(), *den as f64),
            Coeffs::Big { num, den } => (
                num.iter().map(|x| x.to_f64().unwrap_or(f64::NAN)).collect(),
                den.to_f64().unwrap_or(f64::NAN),
            ),
        };
        let mut acc = Complex64::new(0.0, 0.0);
        for (k, c) in num.iter().enumerate() {
            if *c != 0.0 {
                let theta = 2.0 * std::f64::consts::PI * k as f64 / order;
                acc += Complex64::from_polar(*c, theta);
            }
        }
        acc / den
    }

    /// Multiplicative inverse, via the extended Euclidean algorithm against
    /// the cyclotomic polynomial.
    pub fn inv(&self) -> Result<CycScalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        // Rational scalars invert directly.
        if let Coeffs::Small { num, den } = &self.coeffs {
            if num[1..].iter().all(|&x| x == 0) {
                let n = num[0];
                let mut v = vec![0i128; num.len()];
                v[0] = *den as i128;
                return Ok(CycScalar::from_coeffs(self.field, Coeffs::from_i128(&v, n as i128)));
            }
        }
        let coords = self.coordinates();
        let s = field::rational_poly_inverse(&coords, self.field.modulus()).ok_or(ScalarError::DivisionByZero)?;
        let out = self.field.from_coordinates(&s)?;
        debug_assert!((&out * self).is_one());
        Ok(out)
    }

    /// `self^k` for any integer `k` (negative powers need a nonzero base).
    pub fn pow(&self, k: i64) -> Result<CycScalar, ScalarError> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = self.field.one();
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &b;
            }
            e >>= 1;
            if e > 0 {
                b = &b * &b;
            }
        }
        Ok(acc)
    }

    pub fn scale_int(&self, k: i64) -> CycScalar {
        CycScalar::from_coeffs(self.field, self.coeffs.scale_int(k))
    }

    pub fn scale_ratio(&self, n: i64, d: i64) -> CycScalar {
        CycScalar::from_coeffs(self.field, self.coeffs.mul_ratio(n, d))
    }

    /// Multiplication by `ζ^k`, cheaper than a general product.
    pub fn mul_zeta_pow(&self, k: i64) -> CycScalar {
        let order = self.field.order() as i64;
        let shift = k.rem_euclid(order) as usize;
        if shift == 0 || self.is_zero() {
            return self.clone();
        }
        let table = self.field.reduce_table();
        let n = self.field.degree();
        match &self.coeffs {
            Coeffs::Small { num, den } => {
                let mut out = vec![0i128; n];
                for (j, &c) in num.iter().enumerate() {
                    if c == 0 {
                        continue;
                    }
                    let row = &table[(j + shift) % order as usize];
                    for (t, &rv) in row.iter().enumerate() {
                        if rv != 0 {
                            out[t] += c as i128 * rv as i128;
                        }
                    }
                }
                CycScalar::from_coeffs(self.field, Coeffs::from_i128(&out, *den as i128))
            }
            Coeffs::Big { num, den } => {
                let mut out = vec![BigInt::zero(); n];
                for (j, c) in num.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let row = &table[(j + shift) % order as usize];
                    for (t, &rv) in row.iter().enumerate() {
                        if rv != 0 {
                            out[t] += c * rv;
                        }
                    }
                }
                CycScalar::from_coeffs(self.field, Coeffs::from_big(out, den.clone()))
            }
        }
    }

    /// Multiplication by `q^k`.
    pub fn mul_q_pow(&self, k: i64) -> CycScalar {
        let r = self.field.r() as i64;
        self.mul_zeta_pow(4 * k.rem_euclid(r))
    }

    /// Complex conjugate (the Galois automorphism `ζ ↦ ζ^{-1}`).
    pub fn conj(&self) -> CycScalar {
        let mut acc = self.field.zero();
        for (k, c) in self.coordinates().iter().enumerate() {
            if !c.is_zero() {
                acc += &(&self.field.zeta_pow(-(k as i64)) * &self.field.from_rational(c));
            }
        }
        acc
    }
}

impl PartialEq for CycScalar {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.field, other.field) && self.coeffs == other.coeffs
    }
}

impl Eq for CycScalar {}

impl Hash for CycScalar {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.order().hash(state);
        self.coeffs.hash(state);
    }
}

impl<'a> Add<&'a CycScalar> for &'a CycScalar {
    type Output = CycScalar;
    fn add(self, rhs: &CycScalar) -> CycScalar {
        self.field.check_same(rhs.field);
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        CycScalar::from_coeffs(self.field, self.coeffs.add(&rhs.coeffs))
    }
}

impl<'a> Sub<&'a CycScalar> for &'a CycScalar {
    type Output = CycScalar;
    fn sub(self, rhs: &CycScalar) -> CycScalar {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a CycScalar> for &'a CycScalar {
    type Output = CycScalar;
    fn mul(self, rhs: &CycScalar) -> CycScalar {
        self.field.check_same(rhs.field);
        if self.is_zero() || rhs.is_zero() {
            return self.field.zero();
        }
        if self.is_one() {
            return rhs.clone();
        }
        if rhs.is_one() {
            return self.clone();
        }
        CycScalar::from_coeffs(self.field, self.coeffs.mul(&rhs.coeffs, self.field.reduce_table()))
    }
}

impl<'a> Div<&'a CycScalar> for &'a CycScalar {
    type Output = CycScalar;
    /// Panics on division by zero; use [`CycScalar::inv`] to handle it.
    fn div(self, rhs: &CycScalar) -> CycScalar {
        self * &rhs.inv().expect("division by zero")
    }
}

impl Neg for &CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        CycScalar::from_coeffs(self.field, self.coeffs.neg())
    }
}

impl Neg for CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        -&self
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<CycScalar> for CycScalar {
            type Output = CycScalar;
            fn $m(self, rhs: CycScalar) -> CycScalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a CycScalar> for CycScalar {
            type Output = CycScalar;
            fn $m(self, rhs: &CycScalar) -> CycScalar {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<CycScalar> for &'a CycScalar {
            type Output = CycScalar;
            fn $m(self, rhs: CycScalar) -> CycScalar {
                self.$m(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
owned_binop!(Div, div);

impl AddAssign<&CycScalar> for CycScalar {
    fn add_assign(&mut self, rhs: &CycScalar) {
        *self = &*self + rhs;
    }
}

impl AddAssign<CycScalar> for CycScalar {
    fn add_assign(&mut self, rhs: CycScalar) {
        *self = &*self + &rhs;
    }
}

impl SubAssign<&CycScalar> for CycScalar {
    fn sub_assign(&mut self, rhs: &CycScalar) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&CycScalar> for CycScalar {
    fn mul_assign(&mut self, rhs: &CycScalar) {
        *self = &*self * rhs;
    }
}

impl fmt::Debug for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for CycScalar {
    /// Polynomial in `z = e^{2πi/(4r)}` with rational coefficients.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coords = self.coordinates();
        let mut first = true;
        for (k, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c < &BigRational::zero();
            let a = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = a == BigRational::from_integer(1.into());
            match (k, unit) {
                (0, _) => write!(f, "{}", a)?,
                (_, true) => write!(f, "z^{}", k)?,
                (_, false) => write!(f, "{}*z^{}", a, k)?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

fn json_int(x: &BigInt) -> serde_json::Value {
    match x.to_i64() {
        Some(v) => serde_json::Value::from(v),
        None => serde_json::Value::from(x.to_string()),
    }
}

impl CycScalar {
    /// `{"order", "coeffs": [[num, den], ...], "approx": [re, im]}`.
    pub fn to_json(&self) -> serde_json::Value {
        let coeffs: Vec<serde_json::Value> = self
            .coordinates()
            .iter()
            .map(|c| serde_json::Value::Array(vec![json_int(c.numer()), json_int(c.denom())]))
            .collect();
        let a = self.approx();
        serde_json::json!({
            "order": self.order(),
            "coeffs": coeffs,
            "approx": [a.re, a.im],
        })
    }
}

impl Serialize for CycScalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let v = self.to_json();
        let mut s = serializer.serialize_struct("CycScalar", 3)?;
        s.serialize_field("order", &v["order"])?;
        s.serialize_field("coeffs", &v["coeffs"])?;
        s.serialize_field("approx", &v["approx"])?;
        s.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn slot_counts() {
        assert_eq!(field_init(3).unwrap().degree(), 4);
        assert_eq!(field_init(5).unwrap().degree(), 8);
        assert_eq!(field_init(7).unwrap().degree(), 12);
        assert!(field_init(4).unwrap_err().to_string().contains("r must be odd ≥ 3"));
        assert!(field_init(1).is_err());
    }

    #[test]
    fn cyclotomic_small_cases() {
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(3), vec![1, 1, 1]);
    }

    #[test]
    fn roots_of_unity() {
        for r in [3u32, 5, 7] {
            let f = field_init(r).unwrap();
            assert!(f.zeta_pow(4 * r as i64).is_one());
            assert!(f.q_pow(r as i64).is_one());
            for k in 1..r as i64 {
                assert!(!f.q_pow(k).is_one());
            }
            assert_eq!(&f.i_unit() * &f.i_unit(), f.int(-1));
            assert_eq!(f.zeta().pow(4).unwrap(), f.q());
        }
    }

    #[test]
    fn quantum_integers() {
        let f = field_init(5).unwrap();
        assert!(f.qint(0).is_zero());
        assert!(f.qint(1).is_one());
        assert_eq!(f.qbrace_prime(0), f.int(2));
        assert_eq!(f.qint(9), f.int(-1));
        let oracle = (2.0 * std::f64::consts::PI * 9.0 / 5.0).sin() / (2.0 * std::f64::consts::PI / 5.0).sin();
        assert!((f.qint(9).approx().re - oracle).abs() < 1e-12);
        assert_eq!(f.qint(7), &f.qbrace(7) / &f.qbrace(1));
        assert_eq!(f.qint(-3), -f.qint(3));
        assert!(f.qfact(-1).is_err());
        assert_eq!(f.qfact(3).unwrap(), &f.qint(2) * &f.qint(3));
    }

    #[test]
    fn gauss_sqrt() {
        for r in [3u32, 5, 7, 9, 11] {
            let f = field_init(r).unwrap();
            let s = f.gauss_sqrt_r();
            assert_eq!(&s * &s, f.int(r as i64));
            assert!((s.approx().re - (r as f64).sqrt()).abs() < 1e-12);
            assert!(s.approx().im.abs() < 1e-12);
        }
    }

    #[test]
    fn approx_values() {
        let f = field_init(5).unwrap();
        assert_eq!(f.zero().approx(), Complex64::new(0.0, 0.0));
        let q = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 5.0);
        assert!((f.q().approx() - q).norm() < 1e-12);
        let two = (q * q - q.inv() * q.inv()) / (q - q.inv());
        assert!((f.qint(2).approx() - two).norm() < 1e-12);
    }

    #[test]
    fn inverse_and_json() {
        let f = field_init(7).unwrap();
        let x = &f.q() + &f.int(3);
        let y = x.inv().unwrap();
        assert!((&x * &y).is_one());
        assert_eq!(f.ratio(2, 6).inv().unwrap(), f.int(3));
        assert!(f.zero().inv().is_err());
        let v = f.ratio(1, 2).to_json();
        assert_eq!(v["order"], 28);
        assert_eq!(v["coeffs"][0], serde_json::json!([1, 2]));
    }

    #[test]
    fn conj_and_zeta_shift() {
        let f = field_init(5).unwrap();
        assert_eq!(f.q().conj(), f.q_pow(-1));
        let x = &f.qint(3) + &f.ratio(1, 3);
        assert_eq!(x.mul_zeta_pow(7), &x * &f.zeta_pow(7));
        assert_eq!(x.mul_q_pow(-2), &x * &f.q_pow(-2));
    }
}
