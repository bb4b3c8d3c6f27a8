use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::planarmap::CombinatorialMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn to_i8(self) -> i8 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn from_i64(s: i64) -> Option<Sign> {
        match s {
            1 => Some(Sign::Positive),
            -1 => Some(Sign::Negative),
            _ => None,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

/// One crossing: four arc labels counterclockwise from the incoming
/// under-strand. The under-strand runs slot 0 → slot 2; the over-strand runs
/// slot 3 → slot 1 when positive and slot 1 → slot 3 when negative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Crossing {
    pub arcs: [usize; 4],
    pub sign: Sign,
}

impl Crossing {
    pub fn new(arcs: [usize; 4], sign: Sign) -> Self {
        Self { arcs, sign }
    }

    pub fn over_in_slot(&self) -> usize {
        match self.sign {
            Sign::Positive => 3,
            Sign::Negative => 1,
        }
    }

    pub fn over_out_slot(&self) -> usize {
        match self.sign {
            Sign::Positive => 1,
            Sign::Negative => 3,
        }
    }

    pub fn is_incoming_slot(&self, slot: usize) -> bool {
        slot == 0 || slot == self.over_in_slot()
    }

    /// The slot a strand leaves through after entering at `slot`.
    pub fn exit_slot(&self, slot: usize) -> usize {
        (slot + 2) % 4
    }

    /// Same strands with the over/under roles exchanged.
    pub fn switched(&self) -> Crossing {
        let [a, b, c, d] = self.arcs;
        match self.sign {
            Sign::Positive => Crossing::new([d, a, b, c], Sign::Negative),
            Sign::Negative => Crossing::new([b, c, d, a], Sign::Positive),
        }
    }
}

/// Oriented link diagram in PD form, plus a count of crossingless unknotted
/// circles (which a PD code cannot otherwise express).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "PdRepr", into = "PdRepr")]
pub struct LinkDiagram {
    crossings: Vec<Crossing>,
    unknots: usize,
}

#[derive(Serialize, Deserialize)]
struct PdRepr {
    crossings: Vec<[i64; 5]>,
    #[serde(default, skip_serializing_if = "is_zero")]
    unknots: usize,
}

fn is_zero(n: &usize) -> bool {
    *n == 0
}

impl TryFrom<PdRepr> for LinkDiagram {
    type Error = Error;
    fn try_from(r: PdRepr) -> Result<Self> {
        let crossings = r
            .crossings
            .iter()
            .map(|c| {
                let sign = Sign::from_i64(c[4])
                    .ok_or_else(|| Error::InvalidDiagram(format!("crossing sign {} is not ±1", c[4])))?;
                let mut arcs = [0usize; 4];
                for i in 0..4 {
                    arcs[i] = usize::try_from(c[i])
                        .map_err(|_| Error::InvalidDiagram(format!("negative arc label {}", c[i])))?;
                }
                Ok(Crossing::new(arcs, sign))
            })
            .collect::<Result<Vec<_>>>()?;
        LinkDiagram::new(crossings, r.unknots)
    }
}

impl From<LinkDiagram> for PdRepr {
    fn from(d: LinkDiagram) -> Self {
        PdRepr {
            crossings: d
                .crossings
                .iter()
                .map(|c| {
                    let [a, b, cc, dd] = c.arcs;
                    [a as i64, b as i64, cc as i64, dd as i64, c.sign.to_i8() as i64]
                })
                .collect(),
            unknots: d.unknots,
        }
    }
}

/// Where an arc starts (tail) and ends (head): `(crossing, slot)`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct ArcEnds {
    pub tail: (usize, usize),
    pub head: (usize, usize),
}

impl LinkDiagram {
    pub fn new(crossings: Vec<Crossing>, unknots: usize) -> Result<Self> {
        let d = Self { crossings, unknots };
        d.arc_ends()?;
        let m = d.underlying_map();
        if !m.is_spherical() {
            return Err(Error::InvalidDiagram(format!(
                "crossing graph is not planar (V - E + F = {} over {} pieces)",
                m.euler_characteristic(),
                m.num_connected_components()
            )));
        }
        Ok(d)
    }

    pub(crate) fn new_unchecked(crossings: Vec<Crossing>, unknots: usize) -> Self {
        Self { crossings, unknots }
    }

    /// `k` disjoint crossingless circles.
    pub fn unlink(k: usize) -> Self {
        Self::new_unchecked(Vec::new(), k)
    }

    pub fn empty() -> Self {
        Self::unlink(0)
    }

    pub fn unknot() -> Self {
        Self::unlink(1)
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn num_crossings(&self) -> usize {
        self.crossings.len()
    }

    pub fn unknots(&self) -> usize {
        self.unknots
    }

    pub(crate) fn arc_ends(&self) -> Result<HashMap<usize, ArcEnds>> {
        let mut tails: HashMap<usize, (usize, usize)> = HashMap::new();
        let mut heads: HashMap<usize, (usize, usize)> = HashMap::new();
        for (k, c) in self.crossings.iter().enumerate() {
            for slot in 0..4 {
                let label = c.arcs[slot];
                let slot_map = if c.is_incoming_slot(slot) { &mut heads } else { &mut tails };
                if slot_map.insert(label, (k, slot)).is_some() {
                    return Err(Error::InvalidDiagram(format!(
                        "arc {} has two {} ends",
                        label,
                        if c.is_incoming_slot(slot) { "head" } else { "tail" }
                    )));
                }
            }
        }
        let mut out = HashMap::with_capacity(tails.len());
        for (label, tail) in tails {
            let head = heads
                .remove(&label)
                .ok_or_else(|| Error::InvalidDiagram(format!("arc {} has no head", label)))?;
            out.insert(label, ArcEnds { tail, head });
        }
        if let Some(label) = heads.keys().next() {
            return Err(Error::InvalidDiagram(format!("arc {} has no tail", label)));
        }
        Ok(out)
    }

    pub(crate) fn arc_ends_valid(&self) -> HashMap<usize, ArcEnds> {
        self.arc_ends().expect("diagram invariants hold")
    }

    /// Arc labels in ascending order.
    pub fn arcs(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.crossings.iter().flat_map(|c| c.arcs).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// The arc a strand continues on after traversing arc `label`.
    pub(crate) fn successor(&self, ends: &HashMap<usize, ArcEnds>, label: usize) -> usize {
        let (k, slot) = ends[&label].head;
        let c = &self.crossings[k];
        c.arcs[c.exit_slot(slot)]
    }

    /// Strand cycles as arc-label sequences, each starting at its smallest label.
    pub fn strand_cycles(&self) -> Vec<Vec<usize>> {
        let ends = self.arc_ends_valid();
        let mut seen = std::collections::HashSet::new();
        let mut out = Vec::new();
        for label in self.arcs() {
            if seen.contains(&label) {
                continue;
            }
            let mut cyc = Vec::new();
            let mut x = label;
            while seen.insert(x) {
                cyc.push(x);
                x = self.successor(&ends, x);
            }
            out.push(cyc);
        }
        out
    }

    pub fn components(&self) -> usize {
        self.strand_cycles().len() + self.unknots
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign.to_i8() as i64).sum()
    }

    /// Every crossing switched; the projection is unchanged.
    pub fn mirror(&self) -> LinkDiagram {
        Self::new_unchecked(self.crossings.iter().map(Crossing::switched).collect(), self.unknots)
    }

    pub fn with_crossing_switched(&self, k: usize) -> Result<LinkDiagram> {
        self.check_site(k)?;
        let mut crossings = self.crossings.clone();
        crossings[k] = crossings[k].switched();
        Ok(Self::new_unchecked(crossings, self.unknots))
    }

    /// Oriented smoothing at crossing `k`. Arcs merged by the smoothing keep
    /// the smallest of their labels; closed curves left without crossings
    /// become unknots.
    pub fn with_crossing_smoothed(&self, k: usize) -> Result<LinkDiagram> {
        self.check_site(k)?;
        let c = self.crossings[k];
        let (a, cc) = (c.arcs[0], c.arcs[2]);
        let (oi, oo) = (c.arcs[c.over_in_slot()], c.arcs[c.over_out_slot()]);
        let mut uf = UnionFind::default();
        uf.union(a, oo);
        uf.union(oi, cc);
        let crossings: Vec<Crossing> = self
            .crossings
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != k)
            .map(|(_, x)| Crossing::new(x.arcs.map(|l| uf.find(l)), x.sign))
            .collect();
        let mut closed: Vec<usize> = c.arcs.iter().map(|&l| uf.find(l)).collect();
        closed.sort_unstable();
        closed.dedup();
        let freed = closed
            .iter()
            .filter(|&&l| !crossings.iter().any(|x| x.arcs.contains(&l)))
            .count();
        Ok(Self::new_unchecked(crossings, self.unknots + freed))
    }

    pub(crate) fn check_site(&self, k: usize) -> Result<()> {
        if k >= self.crossings.len() {
            return Err(Error::IndexOutOfRange {
                index: k as i64,
                bound: self.crossings.len() as i64,
            });
        }
        Ok(())
    }

    /// Apply a label substitution (must be injective on the labels in use).
    pub fn relabel(&self, f: impl Fn(usize) -> usize) -> LinkDiagram {
        Self::new_unchecked(
            self.crossings.iter().map(|c| Crossing::new(c.arcs.map(&f), c.sign)).collect(),
            self.unknots,
        )
    }

    /// Disjoint union (labels of `other` are shifted past those of `self`).
    pub fn split_union(&self, other: &LinkDiagram) -> LinkDiagram {
        let shift = self.arcs().last().map_or(0, |&m| m + 1);
        let mut crossings = self.crossings.clone();
        crossings.extend(other.relabel(|l| l + shift).crossings);
        Self::new_unchecked(crossings, self.unknots + other.unknots)
    }

    /// Crossing graph with darts `4k + slot`, rotating counterclockwise
    /// through the slots of each crossing.
    pub fn underlying_map(&self) -> CombinatorialMap {
        let n = 4 * self.crossings.len();
        let mut first: HashMap<usize, usize> = HashMap::new();
        let mut alpha = vec![usize::MAX; n];
        for (k, c) in self.crossings.iter().enumerate() {
            for slot in 0..4 {
                let dart = 4 * k + slot;
                if let Some(other) = first.remove(&c.arcs[slot]) {
                    alpha[dart] = other;
                    alpha[other] = dart;
                } else {
                    first.insert(c.arcs[slot], dart);
                }
            }
        }
        let sigma = (0..n).map(|d| 4 * (d / 4) + (d + 1) % 4).collect();
        CombinatorialMap::new(alpha, sigma).expect("arc labels pair the darts")
    }

    /// Whether dart `4k + slot` of [`Self::underlying_map`] lies on an over-strand.
    pub fn is_over_dart(dart: usize) -> bool {
        dart % 2 == 1
    }
}

#[derive(Default)]
pub(crate) struct UnionFind {
    parent: HashMap<usize, usize>,
}

impl UnionFind {
    pub fn find(&mut self, x: usize) -> usize {
        let p = *self.parent.get(&x).unwrap_or(&x);
        if p == x {
            return x;
        }
        let r = self.find(p);
        self.parent.insert(x, r);
        r
    }

    /// Merge, keeping the smaller representative.
    pub fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            self.parent.insert(hi, lo);
        }
    }
}
