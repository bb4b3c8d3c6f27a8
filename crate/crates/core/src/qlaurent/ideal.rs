use serde::{Deserialize, Serialize};

use super::{quantum_binomial, LaurentPoly};
use crate::error::{Error, Result};

/// The ideal `I_n ⊂ Z[q^{±1/2}]` generated by `p` and `[n;i]^p − [n;i]`, `1 ≤ i ≤ ⌊n/2⌋`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealSpec {
    pub n: u32,
    pub p: u64,
}

impl IdealSpec {
    pub fn new(n: u32, p: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::BadParameter("ideal level n must be at least 1".into()));
        }
        if !is_prime(p) {
            return Err(Error::CompositeModulus(p));
        }
        Ok(Self { n, p })
    }

    /// The non-constant generators `[n;i]^p − [n;i]`.
    pub fn generators(&self) -> Vec<LaurentPoly> {
        (1..=(self.n / 2) as i64)
            .map(|i| {
                let b = quantum_binomial(self.n as i64, i).expect("i ≤ n/2");
                &b.pow(self.p as u32) - &b
            })
            .collect()
    }

    /// The generators with coefficients reduced mod `p`, computed without
    /// forming the integer powers (which overflow for large `p`).
    pub fn generator_residues(&self) -> Vec<LaurentPoly> {
        let p = self.p;
        (1..=(self.n / 2) as i64)
            .map(|i| {
                let b = quantum_binomial(self.n as i64, i).expect("i ≤ n/2").reduce_coeffs_mod(p);
                let mut acc = LaurentPoly::one();
                let mut base = b.clone();
                let mut k = p;
                while k > 0 {
                    if k & 1 == 1 {
                        acc = (&acc * &base).reduce_coeffs_mod(p);
                    }
                    k >>= 1;
                    if k > 0 {
                        base = (&base * &base).reduce_coeffs_mod(p);
                    }
                }
                (&acc - &b).reduce_coeffs_mod(p)
            })
            .collect()
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Dense polynomial over `F_p`, ascending coefficients, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpPoly {
    p: u64,
    coeffs: Vec<u64>,
}

impl FpPoly {
    pub fn zero(p: u64) -> Self {
        Self { p, coeffs: vec![] }
    }

    /// Image of a Laurent polynomial in `F_p[v]` after multiplying by the unit
    /// `v^{-min_exp}` and stripping any remaining factor of `v` (also a unit).
    pub fn from_laurent_unit_normalized(f: &LaurentPoly, p: u64) -> Self {
        let r = f.reduce_coeffs_mod(p);
        let lo = match r.min_exp() {
            Some(lo) => lo,
            None => return Self::zero(p),
        };
        let hi = r.max_exp().unwrap();
        let mut coeffs = vec![0u64; (hi - lo + 1) as usize];
        for &(e, c) in r.terms() {
            coeffs[(e - lo) as usize] = c as u64;
        }
        Self { p, coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    fn inv(&self, a: u64) -> u64 {
        pow_mod(a, self.p - 2, self.p)
    }

    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            None => self.clone(),
            Some(&lead) => {
                let inv = self.inv(lead);
                Self {
                    p: self.p,
                    coeffs: self.coeffs.iter().map(|&c| c * inv % self.p).collect(),
                }
            }
        }
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let p = self.p;
        let mut r = self.coeffs.clone();
        let dd = divisor.coeffs.len() - 1;
        let inv = self.inv(divisor.coeffs[dd]);
        while r.len() > dd {
            let lead = *r.last().unwrap();
            if lead != 0 {
                let factor = lead * inv % p;
                let shift = r.len() - 1 - dd;
                for (k, &c) in divisor.coeffs.iter().enumerate() {
                    r[shift + k] = (r[shift + k] + p - factor * c % p) % p;
                }
            }
            r.pop();
        }
        let mut out = Self { p, coeffs: r };
        out.trim();
        out
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn to_laurent(&self) -> LaurentPoly {
        LaurentPoly::from_terms(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, &c)| (i as i32, c as i64)),
        )
    }
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

/// Outcome of the membership test together with the data that decided it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Membership {
    pub member: bool,
    /// `f − g` reduced mod p and normalized by a unit power of `v`.
    pub difference: FpPoly,
    /// Monic generator of the image of `I_n` in `F_p[v^{±1}]` (zero if the image is trivial).
    pub gcd: FpPoly,
}

/// Decide `f − g ∈ I_n`.
pub fn membership(f: &LaurentPoly, g: &LaurentPoly, spec: IdealSpec) -> Result<Membership> {
    if !is_prime(spec.p) {
        return Err(Error::CompositeModulus(spec.p));
    }
    if spec.n == 0 {
        return Err(Error::BadParameter("ideal level n must be at least 1".into()));
    }
    let d = FpPoly::from_laurent_unit_normalized(&(f - g), spec.p);
    let gcd = spec
        .generator_residues()
        .iter()
        .map(|gen| FpPoly::from_laurent_unit_normalized(gen, spec.p))
        .fold(FpPoly::zero(spec.p), |acc, x| acc.gcd(&x));
    let member = if gcd.is_zero() {
        d.is_zero()
    } else {
        d.rem(&gcd).is_zero()
    };
    Ok(Membership {
        member,
        difference: d,
        gcd,
    })
}

pub fn congruent_mod_ideal(f: &LaurentPoly, g: &LaurentPoly, spec: IdealSpec) -> Result<bool> {
    membership(f, g, spec).map(|m| m.member)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qlaurent::quantum_integer;

    #[test]
    fn residues_match_exact_generators() {
        for (n, p) in [(2, 3), (3, 5), (4, 7), (5, 3)] {
            let spec = IdealSpec::new(n, p).unwrap();
            let exact: Vec<LaurentPoly> = spec.generators().iter().map(|g| g.reduce_coeffs_mod(p)).collect();
            assert_eq!(exact, spec.generator_residues());
        }
    }

    #[test]
    fn primes() {
        let ps: Vec<u64> = (0..30).filter(|&p| is_prime(p)).collect();
        assert_eq!(ps, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }

    #[test]
    fn composite_modulus_rejected() {
        let one = LaurentPoly::one();
        let spec = IdealSpec { n: 2, p: 4 };
        assert!(matches!(
            congruent_mod_ideal(&one, &one, spec),
            Err(Error::CompositeModulus(4))
        ));
        assert!(matches!(IdealSpec::new(2, 1), Err(Error::CompositeModulus(1))));
    }

    #[test]
    fn equal_inputs() {
        let f = LaurentPoly::from_terms([(3, 2), (-1, -5)]);
        for (n, p) in [(1, 2), (2, 3), (4, 7)] {
            assert!(congruent_mod_ideal(&f, &f, IdealSpec::new(n, p).unwrap()).unwrap());
        }
    }

    #[test]
    fn generator_difference() {
        let two = quantum_integer(2);
        let spec = IdealSpec::new(2, 3).unwrap();
        assert!(congruent_mod_ideal(&two.pow(3), &two, spec).unwrap());
        let three = quantum_integer(3);
        let f = &three.pow(5) + &LaurentPoly::monomial(2, 5);
        assert!(congruent_mod_ideal(&f, &three, IdealSpec::new(3, 5).unwrap()).unwrap());
    }

    #[test]
    fn level_one_is_coefficientwise() {
        let spec = IdealSpec::new(1, 3).unwrap();
        let f = LaurentPoly::from_terms([(1, 3), (0, 1)]);
        assert!(congruent_mod_ideal(&f, &LaurentPoly::one(), spec).unwrap());
        assert!(!congruent_mod_ideal(&f, &LaurentPoly::zero(), spec).unwrap());
    }

    #[test]
    fn non_member() {
        // [2]^3 - [2] ≡ v^3 + 2v + 2v^-1 + v^-3 (mod 3) has degree 6 after
        // normalization; a nonzero constant is not a multiple of it.
        let spec = IdealSpec::new(2, 3).unwrap();
        let m = membership(&LaurentPoly::one(), &LaurentPoly::zero(), spec).unwrap();
        assert!(!m.member);
        assert_eq!(m.gcd.degree(), Some(6));
    }
}
