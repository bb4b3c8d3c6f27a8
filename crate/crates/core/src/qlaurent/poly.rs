use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use serde::de::{self, MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Laurent polynomial in `v = q^{1/2}` with integer coefficients.
///
/// Terms are kept sorted by ascending exponent and no stored coefficient
/// is zero, so structural equality is polynomial equality.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: Vec<(i32, i64)>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(0, c)
    }

    /// `c · v^e`.
    pub fn monomial(e: i32, c: i64) -> Self {
        if c == 0 {
            Self::zero()
        } else {
            Self { terms: vec![(e, c)] }
        }
    }

    /// The variable `v = q^{1/2}`.
    pub fn v() -> Self {
        Self::monomial(1, 1)
    }

    /// `q = v^2`.
    pub fn q() -> Self {
        Self::monomial(2, 1)
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i32, i64)>,
    {
        let mut acc: BTreeMap<i32, i64> = BTreeMap::new();
        for (e, c) in terms {
            *acc.entry(e).or_insert(0) += c;
        }
        Self {
            terms: acc.into_iter().filter(|&(_, c)| c != 0).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms == [(0, 1)]
    }

    /// Nonzero terms `(exponent of v, coefficient)` in ascending exponent order.
    pub fn terms(&self) -> &[(i32, i64)] {
        &self.terms
    }

    pub fn coeff(&self, e: i32) -> i64 {
        match self.terms.binary_search_by_key(&e, |&(x, _)| x) {
            Ok(i) => self.terms[i].1,
            Err(_) => 0,
        }
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.first().map(|&(e, _)| e)
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.last().map(|&(e, _)| e)
    }

    /// Multiply by the unit `v^k`.
    pub fn shift(&self, k: i32) -> Self {
        Self {
            terms: self.terms.iter().map(|&(e, c)| (e + k, c)).collect(),
        }
    }

    /// The bar involution `v ↦ v^{-1}`.
    pub fn bar(&self) -> Self {
        Self {
            terms: self.terms.iter().rev().map(|&(e, c)| (-e, c)).collect(),
        }
    }

    pub fn scale(&self, k: i64) -> Self {
        if k == 0 {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|&(e, c)| (e, c * k)).collect(),
        }
    }

    /// Substitute `v = 1` (equivalently `q = 1`).
    pub fn eval_at_one(&self) -> i64 {
        self.terms.iter().map(|&(_, c)| c).sum()
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Replace every coefficient by its representative in `[0, p)`.
    pub fn reduce_coeffs_mod(&self, p: u64) -> Self {
        assert!(p >= 2, "modulus must be at least 2");
        let p = p as i64;
        Self {
            terms: self
                .terms
                .iter()
                .map(|&(e, c)| (e, c.rem_euclid(p)))
                .filter(|&(_, c)| c != 0)
                .collect(),
        }
    }

    /// Exact division; `None` when `divisor` does not divide `self` in
    /// `Z[v, v^{-1}]` (or the divisor is zero).
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let &(dlo, _) = divisor.terms.first()?;
        let &(dhi, dlead) = divisor.terms.last()?;
        let floor = self.terms[0].0 - dlo;
        let mut rem: BTreeMap<i32, i64> = self.terms.iter().copied().collect();
        let mut quotient = Vec::new();
        while let Some((&top, &c)) = rem.iter().next_back() {
            let qe = top - dhi;
            if qe < floor {
                return None;
            }
            if c % dlead != 0 {
                return None;
            }
            let qc = c / dlead;
            quotient.push((qe, qc));
            for &(e, dc) in &divisor.terms {
                let slot = rem.entry(qe + e).or_insert(0);
                *slot -= qc * dc;
                if *slot == 0 {
                    rem.remove(&(qe + e));
                }
            }
        }
        quotient.reverse();
        Some(Self { terms: quotient })
    }

    fn add_terms(a: &[(i32, i64)], b: &[(i32, i64)], sign: i64) -> Vec<(i32, i64)> {
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            let (ea, ca) = a[i];
            let (eb, cb) = b[j];
            if ea < eb {
                out.push((ea, ca));
                i += 1;
            } else if eb < ea {
                out.push((eb, sign * cb));
                j += 1;
            } else {
                let c = ca + sign * cb;
                if c != 0 {
                    out.push((ea, c));
                }
                i += 1;
                j += 1;
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend(b[j..].iter().map(|&(e, c)| (e, sign * c)));
        out
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for LaurentPoly {
    /// Highest power first, e.g. `v^2 + 2 - v^-2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, &(e, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.unsigned_abs();
            if i == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match e {
                0 => write!(f, "{}", mag)?,
                _ => {
                    if mag != 1 {
                        write!(f, "{}", mag)?;
                    }
                    if e == 1 {
                        write!(f, "v")?;
                    } else {
                        write!(f, "v^{}", e)?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly {
            terms: LaurentPoly::add_terms(&self.terms, &rhs.terms, 1),
        }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly {
            terms: LaurentPoly::add_terms(&self.terms, &rhs.terms, -1),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let lo = self.terms[0].0 + rhs.terms[0].0;
        let hi = self.terms.last().unwrap().0 + rhs.terms.last().unwrap().0;
        let mut dense = vec![0i64; (hi - lo + 1) as usize];
        for &(ea, ca) in &self.terms {
            for &(eb, cb) in &rhs.terms {
                dense[(ea + eb - lo) as usize] += ca * cb;
            }
        }
        LaurentPoly {
            terms: dense
                .into_iter()
                .enumerate()
                .filter(|&(_, c)| c != 0)
                .map(|(i, c)| (lo + i as i32, c))
                .collect(),
        }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|&(e, c)| (e, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
        impl $tr<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        self.terms = LaurentPoly::add_terms(&self.terms, &rhs.terms, 1);
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        self.terms = LaurentPoly::add_terms(&self.terms, &rhs.terms, -1);
    }
}

impl AddAssign for LaurentPoly {
    fn add_assign(&mut self, rhs: LaurentPoly) {
        *self += &rhs;
    }
}

impl SubAssign for LaurentPoly {
    fn sub_assign(&mut self, rhs: LaurentPoly) {
        *self -= &rhs;
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |mut acc, x| {
            acc += &x;
            acc
        })
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

// JSON form: {"<exponent of v>": coefficient, ...}, highest exponent first.
impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.terms.len()))?;
        for &(e, c) in self.terms.iter().rev() {
            map.serialize_entry(&e.to_string(), &c)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct PolyVisitor;

        impl<'de> Visitor<'de> for PolyVisitor {
            type Value = LaurentPoly;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a map from integer exponents to integer coefficients")
            }

            fn visit_map<A: MapAccess<'de>>(self, mut access: A) -> Result<LaurentPoly, A::Error> {
                let mut acc: BTreeMap<i32, i64> = BTreeMap::new();
                while let Some((k, c)) = access.next_entry::<String, i64>()? {
                    let e: i32 = k
                        .trim()
                        .parse()
                        .map_err(|_| de::Error::custom(format!("bad exponent `{}`", k)))?;
                    if acc.insert(e, c).is_some() {
                        return Err(de::Error::custom(format!("duplicate exponent {}", e)));
                    }
                }
                Ok(LaurentPoly::from_terms(acc))
            }
        }

        deserializer.deserialize_map(PolyVisitor)
    }
}
