//! Reproduction of the worked examples: the polarized cycle ideal and the
//! three counterexamples.

use serde::{Deserialize, Serialize};

use crate::betti::BettiEngine;
use crate::error::{Error, Result};
use crate::fixtures;
use crate::formulas::verify_formula;
use crate::monomial::polarize;
use crate::syntax::parse_monomial;

pub const EXAMPLE_IDS: [&str; 4] = ["2.9", "3.4", "3.6", "3.7"];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub ok: bool,
}

impl Check {
    fn new(name: impl Into<String>, expected: impl ToString, actual: impl ToString) -> Self {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        Check {
            name: name.into(),
            ok: expected == actual,
            expected,
            actual,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReproOutcome {
    pub id: String,
    pub graph: String,
    pub pass: bool,
    pub checks: Vec<Check>,
}

impl ReproOutcome {
    pub fn to_markdown(&self) -> String {
        let mut s = format!(
            "### Example {}: {}\n\n`{}`\n\n| check | expected | actual | ok |\n|---|---|---|---|\n",
            self.id,
            if self.pass { "pass" } else { "FAIL" },
            self.graph
        );
        for c in &self.checks {
            s.push_str(&format!("| {} | {} | {} | {} |\n", c.name, c.expected, c.actual, c.ok));
        }
        s
    }
}

fn finish(id: &str, graph: String, checks: Vec<Check>) -> ReproOutcome {
    ReproOutcome {
        id: id.to_string(),
        graph,
        pass: checks.iter().all(|c| c.ok),
        checks,
    }
}

pub fn repro(id: &str, engine: &BettiEngine) -> Result<ReproOutcome> {
    if id == "2.9" {
        let d = fixtures::example_2_9();
        let polar = polarize(&d.edge_ideal())?;
        let mut checks = vec![Check::new(
            "generator count",
            fixtures::EXAMPLE_2_9_POLARIZED.len(),
            polar.len(),
        )];
        for (k, text) in fixtures::EXAMPLE_2_9_POLARIZED.iter().enumerate() {
            let want = parse_monomial(text)?;
            let got = polar.generators().get(k);
            checks.push(Check::new(
                format!("generator {}", k + 1),
                &want,
                got.map_or("(missing)".to_string(), ToString::to_string),
            ));
        }
        let degrees: Vec<String> = polar.generators().iter().map(|g| g.degree().to_string()).collect();
        checks.push(Check::new("degrees", "4/3/5/6", degrees.join("/")));
        checks.push(Check::new("squarefree", true, polar.is_squarefree()));
        return Ok(finish(id, d.to_json(), checks));
    }

    let ex = fixtures::counterexamples()
        .into_iter()
        .find(|e| e.id == id)
        .ok_or_else(|| {
            Error::Unsatisfiable(format!(
                "unknown example `{id}` (expected one of {})",
                EXAMPLE_IDS.join(", ")
            ))
        })?;
    let report = verify_formula(engine, &ex.graph)?;
    let computed = report
        .computed
        .as_ref()
        .map_or("(skipped)".to_string(), |c| format!("({}, {})", c.reg, c.pd));
    let checks = vec![
        Check::new(
            "computed (reg, pd)",
            format!("({}, {})", ex.computed.0, ex.computed.1),
            computed,
        ),
        Check::new(
            "formula (reg, pd)",
            format!("({}, {})", ex.formula.0, ex.formula.1),
            format!("({}, {})", report.predicted.reg, report.predicted.pd),
        ),
        Check::new("formula applicable", false, report.predicted.applicable),
    ];
    Ok(finish(id, ex.graph.to_json(), checks))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polarization_example() {
        let r = repro("2.9", &BettiEngine::default()).unwrap();
        assert!(r.pass, "{r:?}");
    }

    #[test]
    fn unknown_id() {
        assert!(repro("9.9", &BettiEngine::default()).is_err());
    }
}
