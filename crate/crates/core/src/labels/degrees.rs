use serde::Serialize;

use crate::arith::{rat, Rational, UniPoly};
use crate::error::Result;
use crate::hecke::f4_generic_degree;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum DegreeCase {
    /// Unipotent characters of ²E6(q²) in the F4 series.
    TwistedE6,
    /// The series of E8(q) above the cuspidal character of D4.
    E8D4,
}

impl DegreeCase {
    /// The assignment stated with the claim, then the one obtained by
    /// letting `d, a` carry the other parameter.
    pub fn assignments(self) -> [(i32, i32); 2] {
        match self {
            Self::TwistedE6 => [(1, 2), (2, 1)],
            Self::E8D4 => [(1, 4), (4, 1)],
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClaimStatus {
    Confirmed,
    CoefficientDiscrepancy,
    AssignmentDependent,
    Unmatched,
}

#[derive(Clone, Debug, Serialize)]
pub struct Evaluation {
    pub rep: String,
    /// `(a, b)` in `(u, v) ↦ (q^a, q^b)`.
    pub spec: (i32, i32),
    #[serde(serialize_with = "crate::arith::ser_rational")]
    pub coefficient: Rational,
    pub exponent: i32,
    pub lowest_term: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Claim {
    pub subject: String,
    pub claimed: String,
    pub computed: String,
    pub computed_alternate: String,
    pub status: ClaimStatus,
}

#[derive(Clone, Debug, Serialize)]
pub struct DegreeReport {
    pub case: DegreeCase,
    pub evaluations: Vec<Evaluation>,
    pub claims: Vec<Claim>,
    pub note: &'static str,
}

fn term(c: &Rational, e: i32) -> String {
    UniPoly::monomial(c.clone(), e).to_string()
}

pub fn evaluate(rep: &str, spec: (i32, i32)) -> Result<Evaluation> {
    let gd = f4_generic_degree(rep)?;
    let (c, e) = gd.value.specialize(spec.0, spec.1)?.lowest_term()?;
    Ok(Evaluation {
        rep: rep.to_string(),
        spec,
        lowest_term: term(&c, e),
        coefficient: c,
        exponent: e,
    })
}

fn status(claim: (&Rational, i32), primary: &Evaluation, alternate: &Evaluation) -> ClaimStatus {
    let hit = |ev: &Evaluation| ev.exponent == claim.1 && &ev.coefficient == claim.0;
    if hit(primary) {
        ClaimStatus::Confirmed
    } else if primary.exponent == claim.1 {
        ClaimStatus::CoefficientDiscrepancy
    } else if hit(alternate) {
        ClaimStatus::AssignmentDependent
    } else {
        ClaimStatus::Unmatched
    }
}

/// Lowest terms of `D_σ` and `D_σ′` under both parameter assignments,
/// against the leading terms claimed for the corresponding unipotent
/// characters.
pub fn degree_report(case: DegreeCase) -> Result<DegreeReport> {
    let [p, a] = case.assignments();
    let mut evaluations = Vec::new();
    for spec in [p, a] {
        for rep in ["2_1", "2_3"] {
            evaluations.push(evaluate(rep, spec)?);
        }
    }
    let (s_p, t_p, s_a, t_a) = (
        &evaluations[0],
        &evaluations[1],
        &evaluations[2],
        &evaluations[3],
    );
    let half = rat(1, 2);
    let claims = match case {
        DegreeCase::TwistedE6 => vec![
            Claim {
                subject: "[2_1]".into(),
                claimed: term(&half, 3),
                computed: s_p.lowest_term.clone(),
                computed_alternate: s_a.lowest_term.clone(),
                status: status((&half, 3), s_p, s_a),
            },
            Claim {
                subject: "[2_3]".into(),
                claimed: term(&half, 1),
                computed: t_p.lowest_term.clone(),
                computed_alternate: t_a.lowest_term.clone(),
                status: status((&half, 1), t_p, t_a),
            },
        ],
        DegreeCase::E8D4 => {
            // only the exponent gap is comparable: the E8 degrees carry the
            // extra factor coming from the cuspidal character of D4
            let gap = s_p.exponent - t_p.exponent;
            let alt = s_a.exponent - t_a.exponent;
            let claimed = 12 - 4;
            let st = if gap == claimed {
                ClaimStatus::Confirmed
            } else if alt == claimed {
                ClaimStatus::AssignmentDependent
            } else {
                ClaimStatus::Unmatched
            };
            vec![Claim {
                subject: "D4[2_1] vs D4[2_3]".into(),
                claimed: format!(
                    "exponent gap {claimed} ({} vs {})",
                    term(&half, 12),
                    term(&half, 4)
                ),
                computed: format!(
                    "exponent gap {gap} ({} vs {})",
                    s_p.lowest_term, t_p.lowest_term
                ),
                computed_alternate: format!(
                    "exponent gap {alt} ({} vs {})",
                    s_a.lowest_term, t_a.lowest_term
                ),
                status: st,
            }]
        }
    };
    let note = match case {
        DegreeCase::TwistedE6 => {
            "(u,v) -> (q,q^2) with u on d, a; the alternate column lets d, a carry q^2"
        }
        DegreeCase::E8D4 => {
            "(u,v) -> (q,q^4) with u on d, a; the alternate column is the reading in which d, a carry weight 4"
        }
    };
    Ok(DegreeReport {
        case,
        evaluations,
        claims,
        note,
    })
}

/// Claims whose status is anything but confirmed.
pub fn discrepancies(reports: &[DegreeReport]) -> Vec<(DegreeCase, Claim)> {
    reports
        .iter()
        .flat_map(|r| {
            r.claims
                .iter()
                .filter(|c| c.status != ClaimStatus::Confirmed)
                .map(move |c| (r.case, c.clone()))
        })
        .collect()
}
