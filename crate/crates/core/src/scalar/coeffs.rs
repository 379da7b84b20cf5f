//! Coefficient vectors with a common denominator.
//!
//! Values are kept as `num / den` with an integer numerator vector. The small
//! representation uses `i64` and falls back to arbitrary precision whenever an
//! intermediate overflows. Both representations are normalized so that
//! `den > 0` and `gcd(num..., den) == 1`, and a value that fits in `i64` is
//! always stored small; structural equality is therefore value equality.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use smallvec::SmallVec;

pub(crate) type SmallNum = SmallVec<[i64; 16]>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) enum Coeffs {
    Small { num: SmallNum, den: i64 },
    Big { num: Vec<BigInt>, den: BigInt },
}

fn gcd_i128(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl Coeffs {
    pub fn zero(len: usize) -> Self {
        Coeffs::Small { num: SmallVec::from_elem(0, len), den: 1 }
    }

    pub fn len(&self) -> usize {
        match self {
            Coeffs::Small { num, .. } => num.len(),
            Coeffs::Big { num, .. } => num.len(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Coeffs::Small { num, .. } => num.iter().all(|&x| x == 0),
            Coeffs::Big { num, .. } => num.iter().all(|x| x.is_zero()),
        }
    }

    pub fn from_i128(num: &[i128], den: i128) -> Self {
        Self::normalize_i128(num, den)
            .unwrap_or_else(|| Self::normalize_big(num.iter().map(|&x| BigInt::from(x)).collect(), BigInt::from(den)))
    }

    /// Normalizes an `i128` numerator/denominator pair, returning `None` when
    /// the reduced value does not fit the small representation.
    fn normalize_i128(num: &[i128], den: i128) -> Option<Self> {
        debug_assert!(den != 0);
        let mut g = den;
        for &x in num {
            if x != 0 {
                g = gcd_i128(g, x);
                if g == 1 {
                    break;
                }
            }
        }
        let mut g = g.abs();
        if num.iter().all(|&x| x == 0) {
            return Some(Coeffs::Small { num: SmallVec::from_elem(0, num.len()), den: 1 });
        }
        if den < 0 {
            g = -g;
        }
        let den = i64::try_from(den / g).ok()?;
        let mut out = SmallNum::with_capacity(num.len());
        for &x in num {
            out.push(i64::try_from(x / g).ok()?);
        }
        Some(Coeffs::Small { num: out, den })
    }

    fn normalize_big(mut num: Vec<BigInt>, mut den: BigInt) -> Self {
        if num.iter().all(|x| x.is_zero()) {
            return Coeffs::zero(num.len());
        }
        let mut g = den.abs();
        for x in &num {
            if !x.is_zero() {
                g = g.gcd(x);
                if g.is_one() {
                    break;
                }
            }
        }
        if den.is_negative() {
            g = -g;
        }
        if !g.is_one() {
            for x in num.iter_mut() {
                *x = &*x / &g;
            }
            den = &den / &g;
        }
        if let Some(d) = den.to_i64() {
            let small: Option<SmallNum> = num.iter().map(|x| x.to_i64()).collect();
            if let Some(n) = small {
                return Coeffs::Small { num: n, den: d };
            }
        }
        Coeffs::Big { num, den }
    }

    pub fn to_big(&self) -> (Vec<BigInt>, BigInt) {
        match self {
            Coeffs::Small { num, den } => (num.iter().map(|&x| BigInt::from(x)).collect(), BigInt::from(*den)),
            Coeffs::Big { num, den } => (num.clone(), den.clone()),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        if let (Coeffs::Small { num: a, den: da }, Coeffs::Small { num: b, den: db }) = (self, other) {
            if let Some(c) = Self::add_small(a, *da, b, *db) {
                return c;
            }
        }
        let (a, da) = self.to_big();
        let (b, db) = other.to_big();
        if da == db {
            let num = a.iter().zip(&b).map(|(x, y)| x + y).collect();
            return Self::normalize_big(num, da);
        }
        let num = a.iter().zip(&b).map(|(x, y)| x * &db + y * &da).collect();
        Self::normalize_big(num, da * db)
    }

    fn add_small(a: &[i64], da: i64, b: &[i64], db: i64) -> Option<Self> {
        if da == db {
            let num: SmallVec<[i128; 16]> = a.iter().zip(b).map(|(&x, &y)| x as i128 + y as i128).collect();
            return Self::normalize_i128(&num, da as i128);
        }
        let (da, db) = (da as i128, db as i128);
        let g = gcd_i128(da, db);
        let (fa, fb) = (db / g, da / g);
        let den = da.checked_mul(fa)?;
        let mut num: SmallVec<[i128; 16]> = SmallVec::with_capacity(a.len());
        for (&x, &y) in a.iter().zip(b) {
            num.push((x as i128).checked_mul(fa)?.checked_add((y as i128).checked_mul(fb)?)?);
        }
        Self::normalize_i128(&num, den)
    }

    pub fn neg(&self) -> Self {
        match self {
            Coeffs::Small { num, den } => {
                if num.contains(&i64::MIN) {
                    let (n, d) = self.to_big();
                    return Self::normalize_big(n.into_iter().map(|x| -x).collect(), d);
                }
                Coeffs::Small { num: num.iter().map(|&x| -x).collect(), den: *den }
            }
            Coeffs::Big { num, den } => Coeffs::Big { num: num.iter().map(|x| -x).collect(), den: den.clone() },
        }
    }

    pub fn scale_int(&self, k: i64) -> Self {
        self.mul_ratio(k, 1)
    }

    pub fn mul_ratio(&self, n: i64, d: i64) -> Self {
        assert!(d != 0, "zero denominator");
        if let Coeffs::Small { num, den } = self {
            let mut out: SmallVec<[i128; 16]> = SmallVec::with_capacity(num.len());
            let mut ok = true;
            for &x in num.iter() {
                match (x as i128).checked_mul(n as i128) {
                    Some(v) => out.push(v),
                    None => {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                if let Some(dd) = (*den as i128).checked_mul(d as i128) {
                    if let Some(c) = Self::normalize_i128(&out, dd) {
                        return c;
                    }
                }
            }
        }
        let (num, den) = self.to_big();
        let n = BigInt::from(n);
        Self::normalize_big(num.into_iter().map(|x| x * &n).collect(), den * BigInt::from(d))
    }

    /// Product modulo the monic integer polynomial whose reduction table is
    /// `reduce` (row `k` holds the coordinates of `x^k`).
    pub fn mul(&self, other: &Self, reduce: &[Vec<i64>]) -> Self {
        if let (Coeffs::Small { num: a, den: da }, Coeffs::Small { num: b, den: db }) = (self, other) {
            if let Some(c) = Self::mul_small(a, *da, b, *db, reduce) {
                return c;
            }
        }
        let (a, da) = self.to_big();
        let (b, db) = other.to_big();
        let n = a.len();
        let mut prod = vec![BigInt::zero(); 2 * n];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        let mut out: Vec<BigInt> = prod[..n].to_vec();
        for (k, c) in prod.iter().enumerate().skip(n) {
            if c.is_zero() {
                continue;
            }
            for (j, &rk) in reduce[k].iter().enumerate() {
                if rk != 0 {
                    out[j] += c * rk;
                }
            }
        }
        Self::normalize_big(out, da * db)
    }

    fn mul_small(a: &[i64], da: i64, b: &[i64], db: i64, reduce: &[Vec<i64>]) -> Option<Self> {
        let n = a.len();
        let mut prod: SmallVec<[i128; 32]> = SmallVec::from_elem(0, 2 * n);
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            let x = x as i128;
            for (j, &y) in b.iter().enumerate() {
                if y != 0 {
                    let t = x.checked_mul(y as i128)?;
                    prod[i + j] = prod[i + j].checked_add(t)?;
                }
            }
        }
        let mut out: SmallVec<[i128; 16]> = SmallVec::from_slice(&prod[..n]);
        for k in n..2 * n {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            for (j, &rk) in reduce[k].iter().enumerate() {
                if rk != 0 {
                    out[j] = out[j].checked_add(c.checked_mul(rk as i128)?)?;
                }
            }
        }
        let den = (da as i128).checked_mul(db as i128)?;
        Self::normalize_i128(&out, den)
    }

    pub fn from_big(num: Vec<BigInt>, den: BigInt) -> Self {
        Self::normalize_big(num, den)
    }
}
