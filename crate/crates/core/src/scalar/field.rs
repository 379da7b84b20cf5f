use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::coeffs::Coeffs;
use super::CycScalar;
use crate::error::ScalarError;

/// The cyclotomic field of order `4r`, which contains `q = e^{2πi/r}`, the
/// imaginary unit and `√r`.
///
/// Fields are interned: there is one instance per `r` for the lifetime of the
/// process, so scalars can carry a plain `&'static` reference to theirs.
#[derive(Debug)]
pub struct CyclotomicField {
    r: u32,
    order: u32,
    degree: usize,
    modulus: Vec<i64>,
    reduce: Vec<Vec<i64>>,
    zeta_pows: OnceLock<Vec<CycScalar>>,
    sqrt_r: OnceLock<CycScalar>,
    qint_inv: OnceLock<Vec<CycScalar>>,
}

/// Handle returned by [`field_init`]; all scalar constructors go through it.
pub type FieldContext = &'static CyclotomicField;

static FIELDS: OnceLock<Mutex<HashMap<u32, &'static CyclotomicField>>> = OnceLock::new();

/// Initializes (or fetches) the field context for an odd `r ≥ 3`.
pub fn field_init(r: u32) -> Result<FieldContext, ScalarError> {
    if r < 3 || r.is_multiple_of(2) {
        return Err(ScalarError::InvalidOrder(r));
    }
    let map = FIELDS.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = map.lock().expect("field registry poisoned");
    if let Some(f) = guard.get(&r) {
        return Ok(f);
    }
    let field: &'static CyclotomicField = Box::leak(Box::new(CyclotomicField::build(r)));
    guard.insert(r, field);
    Ok(field)
}

/// Integer polynomial division by a monic divisor (exact).
fn div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dn = den.len() - 1;
    assert_eq!(*den.last().unwrap(), 1);
    let qlen = rem.len() - dn;
    let mut quot = vec![0i64; qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dn];
        quot[i] = c;
        if c != 0 {
            for (j, &d) in den.iter().enumerate() {
                rem[i + j] -= c * d;
            }
        }
    }
    debug_assert!(rem.iter().all(|&x| x == 0), "inexact cyclotomic division");
    quot
}

/// Coefficients (low degree first) of the `n`-th cyclotomic polynomial,
/// obtained by dividing `x^n - 1` by the cyclotomic polynomials of all
/// proper divisors of `n`.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    let mut cache: HashMap<u32, Vec<i64>> = HashMap::new();
    cyclotomic_rec(n, &mut cache)
}

fn cyclotomic_rec(n: u32, cache: &mut HashMap<u32, Vec<i64>>) -> Vec<i64> {
    if let Some(p) = cache.get(&n) {
        return p.clone();
    }
    let mut p = vec![0i64; n as usize + 1];
    p[0] = -1;
    p[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            let phi_d = cyclotomic_rec(d, cache);
            p = div_exact(&p, &phi_d);
        }
    }
    cache.insert(n, p.clone());
    p
}

impl CyclotomicField {
    fn build(r: u32) -> Self {
        let order = 4 * r;
        let modulus = cyclotomic_polynomial(order);
        let degree = modulus.len() - 1;
        // reduce[k] = coordinates of ζ^k in the power basis, for 0 ≤ k < order.
        let mut reduce = Vec::with_capacity(order as usize);
        let mut cur = vec![0i64; degree];
        cur[0] = 1;
        for _ in 0..order {
            reduce.push(cur.clone());
            // multiply by ζ
            let top = cur[degree - 1];
            for j in (1..degree).rev() {
                cur[j] = cur[j - 1];
            }
            cur[0] = 0;
            if top != 0 {
                for j in 0..degree {
                    cur[j] -= top * modulus[j];
                }
            }
        }
        debug_assert_eq!(cur[0], 1);
        CyclotomicField {
            r,
            order,
            degree,
            modulus,
            reduce,
            zeta_pows: OnceLock::new(),
            sqrt_r: OnceLock::new(),
            qint_inv: OnceLock::new(),
        }
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    /// The order `4r` of the root of unity generating the field.
    pub fn order(&self) -> u32 {
        self.order
    }

    /// `φ(4r)`, the number of coefficient slots.
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Coefficients of the defining cyclotomic polynomial, low degree first.
    pub fn modulus(&self) -> &[i64] {
        &self.modulus
    }

    pub(crate) fn reduce_table(&self) -> &[Vec<i64>] {
        &self.reduce
    }

    pub fn zero(&'static self) -> CycScalar {
        CycScalar::from_coeffs(self, Coeffs::zero(self.degree))
    }

    pub fn one(&'static self) -> CycScalar {
        self.int(1)
    }

    pub fn int(&'static self, k: i64) -> CycScalar {
        self.ratio(k, 1)
    }

    pub fn ratio(&'static self, num: i64, den: i64) -> CycScalar {
        assert!(den != 0, "zero denominator");
        let mut v = vec![0i128; self.degree];
        v[0] = num as i128;
        CycScalar::from_coeffs(self, Coeffs::from_i128(&v, den as i128))
    }

    pub fn from_rational(&'static self, x: &BigRational) -> CycScalar {
        let mut v = vec![BigInt::zero(); self.degree];
        v[0] = x.numer().clone();
        CycScalar::from_coeffs(self, Coeffs::from_big(v, x.denom().clone()))
    }

    /// Builds a scalar from rational power-basis coordinates.
    pub fn from_coordinates(&'static self, coords: &[BigRational]) -> Result<CycScalar, ScalarError> {
        if coords.len() != self.degree {
            return Err(ScalarError::CoefficientCount { expected: self.degree, found: coords.len() });
        }
        let mut den = BigInt::one();
        for c in coords {
            den = num_integer::Integer::lcm(&den, c.denom());
        }
        let num = coords.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        Ok(CycScalar::from_coeffs(self, Coeffs::from_big(num, den)))
    }

    fn zeta_table(&'static self) -> &'static [CycScalar] {
        self.zeta_pows.get_or_init(|| {
            self.reduce
                .iter()
                .map(|row| {
                    let v: Vec<i128> = row.iter().map(|&x| x as i128).collect();
                    CycScalar::from_coeffs(self, Coeffs::from_i128(&v, 1))
                })
                .collect()
        })
    }

    /// `ζ^k` for the primitive `4r`-th root of unity `ζ = e^{2πi/(4r)}`.
    pub fn zeta_pow(&'static self, k: i64) -> CycScalar {
        let idx = k.rem_euclid(self.order as i64) as usize;
        self.zeta_table()[idx].clone()
    }

    pub fn zeta(&'static self) -> CycScalar {
        self.zeta_pow(1)
    }

    /// `q^k` with `q = ζ^4 = e^{2πi/r}`.
    pub fn q_pow(&'static self, k: i64) -> CycScalar {
        self.zeta_pow(4 * k.rem_euclid(self.r as i64))
    }

    pub fn q(&'static self) -> CycScalar {
        self.q_pow(1)
    }

    /// The imaginary unit `i = ζ^r`.
    pub fn i_unit(&'static self) -> CycScalar {
        self.zeta_pow(self.r as i64)
    }

    /// `i^k`.
    pub fn i_pow(&'static self, k: i64) -> CycScalar {
        self.zeta_pow(self.r as i64 * k.rem_euclid(4))
    }

    /// `{k} = q^k - q^{-k}`.
    pub fn qbrace(&'static self, k: i64) -> CycScalar {
        &self.q_pow(k) - &self.q_pow(-k)
    }

    /// `{k}' = q^k + q^{-k}`.
    pub fn qbrace_prime(&'static self, k: i64) -> CycScalar {
        &self.q_pow(k) + &self.q_pow(-k)
    }

    /// The quantum integer `[k] = {k}/{1}`.
    pub fn qint(&'static self, k: i64) -> CycScalar {
        // [k] = q^{k-1} + q^{k-3} + ... + q^{1-k}; avoids a division.
        let n = k.unsigned_abs() as i64;
        let mut acc = self.zero();
        for j in 0..n {
            acc += &self.q_pow(n - 1 - 2 * j);
        }
        if k < 0 {
            -acc
        } else {
            acc
        }
    }

    /// The quantum factorial `[k]! = [1][2]...[k]`.
    pub fn qfact(&'static self, k: i64) -> Result<CycScalar, ScalarError> {
        if k < 0 {
            return Err(ScalarError::NegativeFactorial(k));
        }
        let mut acc = self.one();
        for j in 1..=k {
            acc = &acc * &self.qint(j);
        }
        Ok(acc)
    }

    /// `1/[k]!` for `0 ≤ k < r`, cached.
    pub fn qfact_inv(&'static self, k: usize) -> CycScalar {
        let table = self.qint_inv.get_or_init(|| {
            (0..self.r as i64)
                .map(|k| self.qfact(k).expect("non-negative").inv().expect("[k]! is nonzero for k < r"))
                .collect()
        });
        table[k].clone()
    }

    /// The positive square root of `r`, built from the quadratic Gauss sum
    /// `Σ_k q^{k²}` and corrected by a power of `i` depending on `r mod 4`.
    pub fn gauss_sqrt_r(&'static self) -> CycScalar {
        self.sqrt_r
            .get_or_init(|| {
                let r = self.r as i64;
                let mut g = self.zero();
                for k in 0..r {
                    g += &self.q_pow(k * k);
                }
                // Σ q^{k²} = √r for r ≡ 1 (mod 4) and i√r for r ≡ 3 (mod 4).
                let s = if r % 4 == 1 { g } else { &g * &self.i_pow(-1) };
                let s = if s.approx().re < 0.0 { -s } else { s };
                assert_eq!(&s * &s, self.int(r), "Gauss sum does not square to r");
                s
            })
            .clone()
    }

    /// Builds `x` from a small integer numerator vector and denominator.
    pub fn from_ints(&'static self, num: &[i64], den: i64) -> Result<CycScalar, ScalarError> {
        if num.len() != self.degree {
            return Err(ScalarError::CoefficientCount { expected: self.degree, found: num.len() });
        }
        if den == 0 {
            return Err(ScalarError::ZeroDenominator);
        }
        let v: Vec<i128> = num.iter().map(|&x| x as i128).collect();
        Ok(CycScalar::from_coeffs(self, Coeffs::from_i128(&v, den as i128)))
    }

    pub(crate) fn check_same(&self, other: &CyclotomicField) {
        assert!(std::ptr::eq(self, other), "scalars from different fields (r={} vs r={})", self.r, other.r);
    }
}

pub(crate) fn rational_poly_inverse(a: &[BigRational], modulus: &[i64]) -> Option<Vec<BigRational>> {
    // Extended Euclid in Q[x]: find s with s·a ≡ 1 (mod m).
    fn trim(p: &mut Vec<BigRational>) {
        while p.last().is_some_and(|c| c.is_zero()) {
            p.pop();
        }
    }
    fn divmod(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
        let mut rem = a.to_vec();
        trim(&mut rem);
        let db = b.len() - 1;
        let lead = b[db].clone();
        if rem.len() < b.len() {
            return (vec![], rem);
        }
        let mut quot = vec![BigRational::zero(); rem.len() - db];
        while rem.len() >= b.len() {
            let shift = rem.len() - b.len();
            let c = rem.last().unwrap() / &lead;
            for (j, bj) in b.iter().enumerate() {
                rem[shift + j] = &rem[shift + j] - &c * bj;
            }
            quot[shift] = c;
            rem.pop();
            trim(&mut rem);
        }
        (quot, rem)
    }
    fn sub_mul(a: &[BigRational], q: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
        let mut out = a.to_vec();
        let need = if q.is_empty() || b.is_empty() { 0 } else { q.len() + b.len() - 1 };
        if out.len() < need {
            out.resize(need, BigRational::zero());
        }
        for (i, qi) in q.iter().enumerate() {
            if qi.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                out[i + j] = &out[i + j] - qi * bj;
            }
        }
        let mut out = out;
        trim(&mut out);
        out
    }
    let m: Vec<BigRational> = modulus.iter().map(|&c| BigRational::from_integer(BigInt::from(c))).collect();
    let mut r0 = m.clone();
    let mut r1 = a.to_vec();
    trim(&mut r1);
    if r1.is_empty() {
        return None;
    }
    let mut s0: Vec<BigRational> = vec![];
    let mut s1: Vec<BigRational> = vec![BigRational::one()];
    while !r1.is_empty() {
        let (q, rem) = divmod(&r0, &r1);
        let s2 = sub_mul(&s0, &q, &s1);
        r0 = r1;
        r1 = rem;
        s0 = s1;
        s1 = s2;
    }
    // r0 is the gcd (a nonzero constant when a is invertible)
    if r0.len() != 1 {
        return None;
    }
    let c = r0[0].clone();
    let mut s: Vec<BigRational> = s0.iter().map(|x| x / &c).collect();
    let n = modulus.len() - 1;
    if s.len() > n {
        let (_, rem) = divmod(&s, &m);
        s = rem;
    }
    s.resize(n, BigRational::zero());
    Some(s)
}

impl PartialEq for CyclotomicField {
    fn eq(&self, other: &Self) -> bool {
        self.r == other.r
    }
}

impl Eq for CyclotomicField {}
