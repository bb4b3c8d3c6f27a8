use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::linkdiag::{canonical_form, LinkDiagram, Sign};
use crate::qlaurent::{quantum_integer, LaurentPoly};

pub const DEFAULT_CROSSING_BUDGET: usize = 16;

/// Three diagrams that agree away from one site.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkeinTriple {
    pub plus: LinkDiagram,
    pub minus: LinkDiagram,
    pub zero: LinkDiagram,
}

/// The site made positive, made negative, and smoothed.
pub fn resolve_crossing(d: &LinkDiagram, site: usize) -> Result<SkeinTriple> {
    let switched = d.with_crossing_switched(site)?;
    let (plus, minus) = match d.crossings()[site].sign {
        Sign::Positive => (d.clone(), switched),
        Sign::Negative => (switched, d.clone()),
    };
    Ok(SkeinTriple {
        zero: d.with_crossing_smoothed(site)?,
        plus,
        minus,
    })
}

/// Order in which crossings are examined when looking for the next one to
/// switch.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Traversal {
    /// Components by smallest canonical arc label, each followed along its
    /// orientation from that arc.
    #[default]
    Forward,
    /// Components in the opposite order, each followed backwards.
    Reverse,
}

/// Memoizing evaluator of `P_n` for a fixed `n`.
///
/// A diagram is put in canonical form and followed from fixed basepoints.
/// Every crossing first met from below is switched in turn, each switch
/// contributing the smoothed diagram through the skein relation, until the
/// diagram is descending and hence an unlink.
pub struct SkeinEngine {
    n: u32,
    budget: usize,
    traversal: Traversal,
    memo: HashMap<String, LaurentPoly>,
    unknot: LaurentPoly,
    /// `v^{-n}(v - v^{-1})` and `v^{n}(v - v^{-1})`
    plus_step: LaurentPoly,
    minus_step: LaurentPoly,
}

impl SkeinEngine {
    pub fn new(n: u32) -> Self {
        let delta = &LaurentPoly::v() - &LaurentPoly::monomial(-1, 1);
        Self {
            n,
            budget: DEFAULT_CROSSING_BUDGET,
            traversal: Traversal::Forward,
            memo: HashMap::new(),
            unknot: quantum_integer(n),
            plus_step: delta.shift(-(n as i32)),
            minus_step: delta.shift(n as i32),
        }
    }

    pub fn with_budget(mut self, crossings: usize) -> Self {
        self.budget = crossings;
        self
    }

    pub fn with_traversal(mut self, t: Traversal) -> Self {
        self.traversal = t;
        self
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    pub fn evaluate(&mut self, d: &LinkDiagram) -> Result<LaurentPoly> {
        if d.num_crossings() > self.budget {
            return Err(Error::BudgetExceeded {
                what: "crossing count",
                size: d.num_crossings(),
                limit: self.budget,
            });
        }
        self.eval(d)
    }

    fn eval(&mut self, d: &LinkDiagram) -> Result<LaurentPoly> {
        if d.num_crossings() == 0 {
            return Ok(self.unknot.pow(d.unknots() as u32));
        }
        let form = canonical_form(d);
        if let Some(p) = self.memo.get(&form.code) {
            return Ok(p.clone());
        }
        let mut cur = form.diagram;
        let n = self.n as i32;
        let mut coeff = LaurentPoly::one();
        let mut total = LaurentPoly::zero();
        for k in self.bad_crossings(&cur) {
            let smoothed = self.eval(&cur.with_crossing_smoothed(k)?)?;
            match cur.crossings()[k].sign {
                Sign::Positive => {
                    total += &(&coeff * &self.plus_step) * &smoothed;
                    coeff = coeff.shift(-2 * n);
                }
                Sign::Negative => {
                    total -= &(&coeff * &self.minus_step) * &smoothed;
                    coeff = coeff.shift(2 * n);
                }
            }
            cur = cur.with_crossing_switched(k)?;
        }
        total += &coeff * &self.unknot.pow(cur.components() as u32);
        self.memo.insert(form.code, total.clone());
        Ok(total)
    }

    /// Crossings first met as an under-pass, in traversal order.
    fn bad_crossings(&self, d: &LinkDiagram) -> Vec<usize> {
        let ends = d.arc_ends_valid();
        let mut cycles = d.strand_cycles();
        let mut seen = vec![false; d.num_crossings()];
        let mut bad = Vec::new();
        let mut meet = |k: usize, under: bool| {
            if !seen[k] {
                seen[k] = true;
                if under {
                    bad.push(k);
                }
            }
        };
        match self.traversal {
            Traversal::Forward => {
                for cyc in &cycles {
                    for a in cyc {
                        let (k, slot) = ends[a].head;
                        meet(k, slot == 0);
                    }
                }
            }
            Traversal::Reverse => {
                cycles.reverse();
                for cyc in &cycles {
                    let walk = std::iter::once(&cyc[0]).chain(cyc[1..].iter().rev());
                    for a in walk {
                        let (k, slot) = ends[a].tail;
                        meet(k, slot == 2);
                    }
                }
            }
        }
        bad
    }
}

/// `P_n(d)` with the default crossing budget.
pub fn homfly_pn(d: &LinkDiagram, n: u32) -> Result<LaurentPoly> {
    SkeinEngine::new(n).evaluate(d)
}
