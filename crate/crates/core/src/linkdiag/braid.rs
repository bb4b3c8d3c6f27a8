use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::diagram::{Crossing, LinkDiagram, Sign, UnionFind};
use crate::error::{Error, Result};

/// Word in the Artin generators: letter `i > 0` is `σ_i`, `i < 0` is `σ_{|i|}^{-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands < 1 {
            return Err(Error::InvalidBraid("at least one strand is required".into()));
        }
        for &l in &letters {
            if l == 0 || l.unsigned_abs() as usize >= strands {
                return Err(Error::InvalidBraid(format!(
                    "letter {} is outside 1..{} for {} strands",
                    l,
                    strands - 1,
                    strands
                )));
            }
        }
        Ok(Self { strands, letters })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn repeat(&self, n: usize) -> BraidWord {
        Self {
            strands: self.strands,
            letters: self.letters.repeat(n),
        }
    }

    /// Closure with all strands oriented upward. Crossings follow the word
    /// order; arcs are numbered from 1 in order of first appearance.
    pub fn closure(&self) -> LinkDiagram {
        let k = self.strands;
        let bottom: Vec<usize> = (0..k).collect();
        let mut current = bottom.clone();
        let mut fresh = k;
        let mut next = || {
            fresh += 1;
            fresh - 1
        };
        let mut crossings = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            let (left, right) = (current[i], current[i + 1]);
            let (out_left, out_right) = (next(), next());
            if l > 0 {
                // over strand runs left-bottom to right-top
                crossings.push(Crossing::new([right, out_right, out_left, left], Sign::Positive));
            } else {
                // over strand runs right-bottom to left-top
                crossings.push(Crossing::new([left, right, out_right, out_left], Sign::Negative));
            }
            current[i] = out_left;
            current[i + 1] = out_right;
        }
        let mut uf = UnionFind::default();
        for j in 0..k {
            uf.union(current[j], bottom[j]);
        }
        let mut rename: HashMap<usize, usize> = HashMap::new();
        let crossings: Vec<Crossing> = crossings
            .into_iter()
            .map(|c| {
                let arcs = c.arcs.map(|a| {
                    let r = uf.find(a);
                    let n = rename.len() + 1;
                    *rename.entry(r).or_insert(n)
                });
                Crossing::new(arcs, c.sign)
            })
            .collect();
        let mut loops: Vec<usize> = (0..k).map(|j| uf.find(j)).collect();
        loops.sort_unstable();
        loops.dedup();
        let unknots = loops.iter().filter(|r| !rename.contains_key(r)).count();
        LinkDiagram::new(crossings, unknots).expect("braid closures are planar")
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        write!(f, "{}:{}", self.strands, s.join(","))
    }
}

/// Parse a comma- or whitespace-separated list of nonzero integers; the strand
/// count defaults to one more than the largest generator index.
impl FromStr for BraidWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let letters = parse_letters(s)?;
        let strands = letters.iter().map(|l| l.unsigned_abs() as usize).max().unwrap_or(0) + 1;
        BraidWord::new(strands, letters)
    }
}

pub fn parse_letters(s: &str) -> Result<Vec<i32>> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<i32>()
                .map_err(|_| Error::InvalidBraid(format!("bad letter `{}`", t)))
        })
        .collect()
}

pub fn closure(b: &BraidWord) -> LinkDiagram {
    b.closure()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cl(strands: usize, letters: &[i32]) -> LinkDiagram {
        BraidWord::new(strands, letters.to_vec()).unwrap().closure()
    }

    #[test]
    fn torus_closures() {
        let hopf = cl(2, &[1, 1]);
        assert_eq!((hopf.num_crossings(), hopf.components()), (2, 2));
        let trefoil = cl(2, &[1, 1, 1]);
        assert_eq!((trefoil.components(), trefoil.writhe()), (1, 3));
        assert_eq!(cl(2, &[1]).components(), 1);
    }

    #[test]
    fn figure_eight_word() {
        let f8 = cl(3, &[1, -2, 1, -2]);
        assert_eq!((f8.num_crossings(), f8.components(), f8.writhe()), (4, 1, 0));
        assert_eq!(cl(3, &[1, -2, 1, -2, 1, -2]).components(), 3);
    }

    #[test]
    fn idle_strands_are_unknots() {
        let u = cl(2, &[]);
        assert_eq!((u.num_crossings(), u.unknots(), u.components()), (0, 2, 2));
        let t = cl(3, &[1, 1, 1]);
        assert_eq!((t.unknots(), t.components()), (1, 2));
    }

    #[test]
    fn parse_and_validate() {
        let b: BraidWord = "1, -2 1 -2".parse().unwrap();
        assert_eq!((b.strands(), b.letters()), (3, &[1, -2, 1, -2][..]));
        assert!(BraidWord::new(2, vec![2]).is_err());
        assert!(BraidWord::new(2, vec![0]).is_err());
        assert!("1,x".parse::<BraidWord>().is_err());
    }
}
