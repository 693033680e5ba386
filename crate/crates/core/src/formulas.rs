//! Closed-form predictions `reg = Σw - |E| + 1`, `pd = |E| - 1` and their
//! comparison with engine-computed values.

use serde::{Deserialize, Serialize};

use crate::betti::{BettiEngine, BettiTable, InvariantSummary};
use crate::classify::{check_hypotheses, classify, ClassTag, GraphClass, HypothesisReport};
use crate::digraph::WeightedDigraph;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormulaPrediction {
    pub reg_pred: i64,
    pub pd_pred: i64,
    /// Number of components with an edge; only set when applicable.
    pub depth_pred: Option<i64>,
    pub applicable: bool,
    pub class_used: ClassTag,
    pub violations: Vec<String>,
}

/// Formula values for `d` (source weights normalized first). The numbers
/// are reported even when the class or weight hypotheses do not hold.
pub fn predict(d: &WeightedDigraph) -> Result<FormulaPrediction> {
    if d.edge_count() == 0 {
        return Err(Error::EmptyEdgeSet);
    }
    let d = d.normalize_source_weights();
    let cls = classify(&d);
    let hyp = check_hypotheses(&d, &cls);
    Ok(prediction_for(&d, &cls, &hyp))
}

fn prediction_for(d: &WeightedDigraph, cls: &GraphClass, hyp: &HypothesisReport) -> FormulaPrediction {
    let edges = d.edge_count() as i64;
    let applicable = cls.tag().is_supported() && hyp.satisfied;
    let m = d
        .components()
        .iter()
        .filter(|c| c.edge_count() > 0)
        .count() as i64;
    FormulaPrediction {
        reg_pred: d.incident_weight_sum() as i64 - edges + 1,
        pd_pred: edges - 1,
        depth_pred: applicable.then_some(m),
        applicable,
        class_used: cls.tag(),
        violations: hyp.violations.clone(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    /// Hypotheses hold and the engine agrees with the formulas.
    Pass,
    /// Hypotheses hold but the engine disagrees.
    Failure,
    /// Hypotheses unmet and the values differ, as expected of a
    /// counterexample.
    Counterexample,
    /// Hypotheses unmet yet the values happen to agree.
    InapplicableAgrees,
    /// The engine guard was exceeded; only the prediction is available.
    EngineSkipped,
}

impl Verdict {
    pub fn describe(self) -> &'static str {
        match self {
            Verdict::Pass => "pass: computed values match the formulas",
            Verdict::Failure => "FAILURE: hypotheses hold but computed values differ from the formulas",
            Verdict::Counterexample => {
                "hypotheses unmet: counterexample reproduced (computed values differ from the formulas)"
            }
            Verdict::InapplicableAgrees => "hypotheses unmet: computed values nevertheless match",
            Verdict::EngineSkipped => "engine skipped (sizing guard); prediction only",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Computed {
    pub reg: i64,
    pub pd: i64,
    pub depth: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Predicted {
    pub reg: i64,
    pub pd: i64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub depth: Option<i64>,
    pub applicable: bool,
}

/// Engine-vs-formula comparison for one graph.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub graph: WeightedDigraph,
    pub class: GraphClass,
    pub hypotheses: HypothesisReport,
    pub computed: Option<Computed>,
    pub predicted: Predicted,
    pub verdict: Verdict,
    #[serde(skip)]
    pub betti: Option<BettiTable>,
}

impl InvariantReport {
    pub fn reg_agrees(&self) -> Option<bool> {
        self.computed.as_ref().map(|c| c.reg == self.predicted.reg)
    }

    pub fn pd_agrees(&self) -> Option<bool> {
        self.computed.as_ref().map(|c| c.pd == self.predicted.pd)
    }

    /// Markdown rendering for humans.
    pub fn to_markdown(&self) -> String {
        let mut s = String::new();
        s.push_str(&format!("### Graph ({})\n\n", self.class.tag()));
        s.push_str(&format!("`{}`\n\n", self.graph.to_json()));
        if self.hypotheses.satisfied {
            s.push_str("Weight hypotheses: satisfied\n\n");
        } else {
            s.push_str(&format!(
                "Weight hypotheses: violated at {}\n\n",
                self.hypotheses.violations.join(", ")
            ));
        }
        s.push_str("| invariant | computed | formula |\n|---|---|---|\n");
        let c = self.computed.as_ref();
        let show = |v: Option<i64>| v.map_or("-".to_string(), |x| x.to_string());
        s.push_str(&format!(
            "| reg | {} | {} |\n",
            show(c.map(|c| c.reg)),
            self.predicted.reg
        ));
        s.push_str(&format!(
            "| pd | {} | {} |\n",
            show(c.map(|c| c.pd)),
            self.predicted.pd
        ));
        s.push_str(&format!(
            "| depth(S/I) | {} | {} |\n\n",
            show(c.map(|c| c.depth)),
            show(self.predicted.depth)
        ));
        s.push_str(&format!("Verdict: {}\n", self.verdict.describe()));
        s
    }
}

/// Computes the Betti table of `I(D)` and compares reg/pd with the formulas.
/// When the guard is exceeded, the report carries only the prediction.
pub fn verify_formula(engine: &BettiEngine, d: &WeightedDigraph) -> Result<InvariantReport> {
    if d.edge_count() == 0 {
        return Err(Error::EmptyEdgeSet);
    }
    let d = d.normalize_source_weights();
    let cls = classify(&d);
    let hyp = check_hypotheses(&d, &cls);
    let pred = prediction_for(&d, &cls, &hyp);
    let ideal = d.edge_ideal();

    let (computed, betti) = match engine.betti_table(&ideal) {
        Ok(t) => {
            let s: InvariantSummary = crate::betti::summarize(&t, ideal.ambient().len());
            (
                Some(Computed {
                    reg: s.reg,
                    pd: s.pd,
                    depth: s.depth_of_quotient,
                }),
                Some(t),
            )
        }
        Err(e) if e.is_guard() => {
            log::warn!("engine skipped: {e}");
            (None, None)
        }
        Err(e) => return Err(e),
    };

    let verdict = match &computed {
        None => Verdict::EngineSkipped,
        Some(c) => {
            let agree = c.reg == pred.reg_pred && c.pd == pred.pd_pred;
            match (pred.applicable, agree) {
                (true, true) => Verdict::Pass,
                (true, false) => Verdict::Failure,
                (false, false) => Verdict::Counterexample,
                (false, true) => Verdict::InapplicableAgrees,
            }
        }
    };

    Ok(InvariantReport {
        graph: d,
        class: cls,
        hypotheses: hyp,
        computed,
        predicted: Predicted {
            reg: pred.reg_pred,
            pd: pred.pd_pred,
            depth: pred.depth_pred,
            applicable: pred.applicable,
        },
        verdict,
        betti,
    })
}
