use serde::{Deserialize, Serialize};

use super::diagram::{Crossing, LinkDiagram, Sign};
use crate::error::{Error, Result};

/// Signed Gauss code: one sequence per component of crossing numbers (from 1),
/// positive when passing over and negative when passing under, plus the sign
/// of each crossing. An empty sequence is a crossingless circle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GaussCode {
    pub gauss: Vec<Vec<i64>>,
    pub signs: Vec<i8>,
}

impl LinkDiagram {
    /// Components follow [`LinkDiagram::strand_cycles`]; crossings keep their indices.
    pub fn to_gauss(&self) -> GaussCode {
        let ends = self.arc_ends_valid();
        let mut gauss: Vec<Vec<i64>> = self
            .strand_cycles()
            .into_iter()
            .map(|cyc| {
                cyc.iter()
                    .map(|a| {
                        let (k, slot) = ends[a].head;
                        let n = k as i64 + 1;
                        if slot == 0 {
                            -n
                        } else {
                            n
                        }
                    })
                    .collect()
            })
            .collect();
        gauss.extend(std::iter::repeat_n(Vec::new(), self.unknots()));
        GaussCode {
            gauss,
            signs: self.crossings().iter().map(|c| c.sign.to_i8()).collect(),
        }
    }

    /// Inverse of [`LinkDiagram::to_gauss`]: arc `j` of a component ends at its
    /// `j`-th entry. The local rotation at each crossing follows from the
    /// over/under data and the sign; planarity is then checked.
    pub fn from_gauss(code: &GaussCode) -> Result<LinkDiagram> {
        let nc = code.signs.len();
        let signs: Vec<Sign> = code
            .signs
            .iter()
            .map(|&s| Sign::from_i64(s as i64).ok_or_else(|| Error::InvalidDiagram(format!("sign {} is not ±1", s))))
            .collect::<Result<_>>()?;
        // per crossing: (under in, under out, over in, over out)
        let mut slots: Vec<[Option<usize>; 4]> = vec![[None; 4]; nc];
        let mut label = 0;
        let mut unknots = 0;
        let mut put = |k: usize, which: usize, l: usize| -> Result<()> {
            if slots[k][which].replace(l).is_some() {
                return Err(Error::InvalidDiagram(format!("crossing {} is visited too often", k + 1)));
            }
            Ok(())
        };
        for comp in &code.gauss {
            if comp.is_empty() {
                unknots += 1;
                continue;
            }
            let first = label + 1;
            let len = comp.len();
            for (j, &e) in comp.iter().enumerate() {
                let k = e.unsigned_abs() as usize;
                if e == 0 || k > nc {
                    return Err(Error::InvalidDiagram(format!("entry {} names no crossing", e)));
                }
                let arc_in = first + j;
                let arc_out = first + (j + 1) % len;
                let base = if e > 0 { 2 } else { 0 };
                put(k - 1, base, arc_in)?;
                put(k - 1, base + 1, arc_out)?;
            }
            label += len;
        }
        let crossings = slots
            .iter()
            .zip(&signs)
            .enumerate()
            .map(|(k, (s, &sign))| {
                let [ui, uo, oi, oo] = s.map(|x| x.ok_or_else(|| Error::InvalidDiagram(format!("crossing {} is incomplete", k + 1))));
                let (ui, uo, oi, oo) = (ui?, uo?, oi?, oo?);
                Ok(match sign {
                    Sign::Positive => Crossing::new([ui, oo, uo, oi], sign),
                    Sign::Negative => Crossing::new([ui, oi, uo, oo], sign),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        LinkDiagram::new(crossings, unknots)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linkdiag::{canonical_code, BraidWord};

    #[test]
    fn round_trip() {
        for (k, w) in [(2, &[1, 1, 1][..]), (3, &[1, -2, 1, -2]), (3, &[1, 1]), (2, &[1, 1])] {
            let d = BraidWord::new(k, w.to_vec()).unwrap().closure();
            let back = LinkDiagram::from_gauss(&d.to_gauss()).unwrap();
            assert_eq!(canonical_code(&back), canonical_code(&d));
        }
    }

    #[test]
    fn trefoil_code() {
        let g = GaussCode {
            gauss: vec![vec![1, -2, 3, -1, 2, -3]],
            signs: vec![1, 1, 1],
        };
        let d = LinkDiagram::from_gauss(&g).unwrap();
        assert_eq!((d.num_crossings(), d.components(), d.writhe()), (3, 1, 3));
        let bad = GaussCode {
            gauss: vec![vec![1, -2, 1]],
            signs: vec![1, 1],
        };
        assert!(LinkDiagram::from_gauss(&bad).is_err());
    }
}
