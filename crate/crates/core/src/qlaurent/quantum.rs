use super::LaurentPoly;
use crate::error::{Error, Result};

/// Balanced quantum integer `[n] = v^{n-1} + v^{n-3} + ... + v^{1-n}`.
pub fn quantum_integer(n: u32) -> LaurentPoly {
    let n = n as i32;
    LaurentPoly::from_terms((0..n).map(|k| (n - 1 - 2 * k, 1)))
}

/// Balanced Gaussian binomial `∏_{j=1..i} [n-j+1] / [j]`, invariant under `v ↦ v^{-1}`.
///
/// The one-sided convention differs by the unit `q^{i(n-i)/2}`, so ideals built
/// from either convention coincide up to units and membership answers agree.
pub fn quantum_binomial(n: i64, i: i64) -> Result<LaurentPoly> {
    if n < 0 || i < 0 {
        return Err(Error::IndexOutOfRange {
            index: n.min(i),
            bound: 0,
        });
    }
    if i > n {
        return Err(Error::IndexOutOfRange { index: i, bound: n });
    }
    let (n, i) = (n as u32, i.min(n - i) as u32);
    let mut acc = LaurentPoly::one();
    for j in 1..=i {
        acc = &acc * &quantum_integer(n - j + 1);
        acc = acc
            .div_exact(&quantum_integer(j))
            .expect("partial q-binomial products divide exactly");
    }
    Ok(acc)
}
