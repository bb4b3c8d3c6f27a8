//! Necessary-condition screens for periodic and transitive links: compare
//! `P_n` values modulo the ideal `I_n`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linkdiag::LinkDiagram;
use crate::qlaurent::{is_prime, membership, quantum_integer, IdealSpec, LaurentPoly};
use crate::skein::{SkeinEngine, DEFAULT_CROSSING_BUDGET};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ScreenKind {
    Periodicity,
    Transitivity,
}

/// The data that decided a verdict: `lhs − rhs` reduced mod `p` and shifted
/// to a polynomial, and the monic gcd of the generator images.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub difference: LaurentPoly,
    pub gcd: LaurentPoly,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CongruenceReport {
    pub kind: ScreenKind,
    pub n: u32,
    pub p: u64,
    pub lhs: LaurentPoly,
    pub rhs: LaurentPoly,
    pub verdict: Verdict,
    pub witness: Witness,
}

fn check_modulus(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::CompositeModulus(p))
    }
}

fn report(kind: ScreenKind, n: u32, p: u64, lhs: LaurentPoly, rhs: LaurentPoly) -> Result<CongruenceReport> {
    let spec = IdealSpec::new(n, p)?;
    let m = membership(&lhs, &rhs, spec)?;
    Ok(CongruenceReport {
        kind,
        n,
        p,
        verdict: if m.member { Verdict::Pass } else { Verdict::Fail },
        witness: Witness {
            difference: m.difference.to_laurent(),
            gcd: m.gcd.to_laurent(),
        },
        lhs,
        rhs,
    })
}

/// `P_n(L) ≡ P_n(factor)^p mod I_n`. A failure rules out `L` being
/// `p`-periodic with that factor link.
pub fn periodicity_screen(l: &LinkDiagram, factor: &LinkDiagram, p: u64, n: u32) -> Result<CongruenceReport> {
    periodicity_screen_with_budget(l, factor, p, n, DEFAULT_CROSSING_BUDGET)
}

pub fn periodicity_screen_with_budget(
    l: &LinkDiagram,
    factor: &LinkDiagram,
    p: u64,
    n: u32,
    budget: usize,
) -> Result<CongruenceReport> {
    check_modulus(p)?;
    let mut engine = SkeinEngine::new(n).with_budget(budget);
    let lhs = engine.evaluate(l)?;
    let rhs = engine.evaluate(factor)?.pow(p as u32);
    report(ScreenKind::Periodicity, n, p, lhs, rhs)
}

/// `P_n(L) ≡ [n]^m mod I_n` with the ideal taken at modulus `m`. A failure
/// rules out a transitive diagram of `L` with `m` crossings.
pub fn transitivity_screen(l: &LinkDiagram, m: u64, n: u32) -> Result<CongruenceReport> {
    transitivity_screen_with_budget(l, m, n, DEFAULT_CROSSING_BUDGET)
}

pub fn transitivity_screen_with_budget(l: &LinkDiagram, m: u64, n: u32, budget: usize) -> Result<CongruenceReport> {
    check_modulus(m)?;
    let lhs = SkeinEngine::new(n).with_budget(budget).evaluate(l)?;
    let rhs = quantum_integer(n).pow(m as u32);
    report(ScreenKind::Transitivity, n, m, lhs, rhs)
}

/// One batch job: a periodicity screen when `factor` is given, otherwise a
/// transitivity screen with `m = p`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ScreenJob {
    pub diagram: LinkDiagram,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub factor: Option<LinkDiagram>,
    pub p: u64,
    pub n: u32,
}

#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum JobOutcome {
    Report(CongruenceReport),
    Error { error: &'static str, message: String },
}

pub fn run_job(job: &ScreenJob) -> Result<CongruenceReport> {
    match &job.factor {
        Some(f) => periodicity_screen(&job.diagram, f, job.p, job.n),
        None => transitivity_screen(&job.diagram, job.p, job.n),
    }
}

impl From<Result<CongruenceReport>> for JobOutcome {
    fn from(r: Result<CongruenceReport>) -> Self {
        match r {
            Ok(r) => JobOutcome::Report(r),
            Err(e) => JobOutcome::Error {
                error: e.name(),
                message: e.to_string(),
            },
        }
    }
}

/// Outcomes in job order.
pub fn run_batch(jobs: &[ScreenJob]) -> Vec<JobOutcome> {
    jobs.iter().map(|j| run_job(j).into()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linkdiag::BraidWord;

    fn torus(k: usize) -> LinkDiagram {
        BraidWord::new(2, vec![1; k]).unwrap().closure()
    }

    #[test]
    fn trefoil_is_three_periodic() {
        let r = periodicity_screen(&torus(3), &LinkDiagram::unknot(), 3, 2).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(r.rhs, quantum_integer(2).pow(3));
    }

    #[test]
    fn unknot_against_itself() {
        let u = LinkDiagram::unknot();
        assert_eq!(periodicity_screen(&u, &u, 3, 2).unwrap().verdict, Verdict::Pass);
    }

    #[test]
    fn torus_knots_pass_transitivity() {
        for (k, n) in [(3, 2), (3, 3), (5, 2), (5, 3)] {
            assert_eq!(transitivity_screen(&torus(k), k as u64, n).unwrap().verdict, Verdict::Pass);
        }
    }

    #[test]
    fn trefoil_with_five() {
        // mod 5 the ideal image is generated by (v^6 - 1)(v^4 - 1), and
        // v^9 (P_2 - [2]^5) = -(v^8 - 1)(v^6 - 1), so the screen cannot refute
        let r = transitivity_screen(&torus(3), 5, 2).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        let gcd = LaurentPoly::from_terms([(10, 1), (6, 4), (4, 4), (0, 1)]);
        assert_eq!(r.witness.gcd, gcd);
        // level 3 does refute it
        assert_eq!(transitivity_screen(&torus(3), 5, 3).unwrap().verdict, Verdict::Fail);
        assert_eq!(r, transitivity_screen(&torus(3), 5, 2).unwrap());
    }

    #[test]
    fn a_refutation() {
        let f8 = BraidWord::new(3, vec![1, -2, 1, -2]).unwrap().closure();
        assert_eq!(transitivity_screen(&f8, 7, 2).unwrap().verdict, Verdict::Fail);
        assert_eq!(transitivity_screen(&torus(2), 3, 2).unwrap().verdict, Verdict::Fail);
        assert_eq!(transitivity_screen(&torus(2), 2, 2).unwrap().verdict, Verdict::Pass);
    }

    #[test]
    fn composite_moduli() {
        let t = torus(3);
        assert!(matches!(periodicity_screen(&t, &t, 1, 2), Err(Error::CompositeModulus(1))));
        assert!(matches!(transitivity_screen(&t, 4, 2), Err(Error::CompositeModulus(4))));
    }

    #[test]
    fn batch_mixes_kinds() {
        let jobs: Vec<ScreenJob> = serde_json::from_str(
            r#"[{"diagram":{"crossings":[[1,2,3,4,1],[2,5,6,3,1],[5,1,4,6,1]]},"p":3,"n":2},
                {"diagram":{"crossings":[],"unknots":1},"factor":{"crossings":[],"unknots":1},"p":4,"n":2}]"#,
        )
        .unwrap();
        let out = serde_json::to_value(run_batch(&jobs)).unwrap();
        assert_eq!(out[0]["verdict"], "pass");
        assert_eq!(out[0]["kind"], "transitivity");
        assert_eq!(out[1]["error"], "CompositeModulus");
    }
}
