//! Seeded verification campaigns over random graphs of one class.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::betti::{BettiEngine, Guard};
use crate::classify::ClassTag;
use crate::error::{Error, Result};
use crate::formulas::{verify_formula, InvariantReport, Verdict};
use crate::generate::{random_instance, InstanceParams};

/// Inclusive integer range, written `lo..hi` on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Span {
    pub lo: u64,
    pub hi: u64,
}

impl Span {
    pub fn new(lo: u64, hi: u64) -> Self {
        Span { lo, hi }
    }

    fn draw(&self, rng: &mut ChaCha8Rng) -> u64 {
        rng.gen_range(self.lo..=self.hi)
    }
}

impl fmt::Display for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

impl FromStr for Span {
    type Err = String;

    /// Accepts `lo..hi`, `lo..=hi`, `lo-hi` or a single number.
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let s = s.trim();
        let (lo, hi) = if let Some((a, b)) = s.split_once("..=") {
            (a, b)
        } else if let Some((a, b)) = s.split_once("..") {
            (a, b)
        } else if let Some((a, b)) = s.split_once('-') {
            (a, b)
        } else {
            (s, s)
        };
        let num = |x: &str| {
            x.trim()
                .parse::<u64>()
                .map_err(|_| format!("`{s}` is not a range like 2..4"))
        };
        let (lo, hi) = (num(lo)?, num(hi)?);
        if lo > hi {
            return Err(format!("empty range `{s}`"));
        }
        Ok(Span { lo, hi })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CampaignConfig {
    pub class: ClassTag,
    pub count: usize,
    pub cycle: Span,
    pub extra: Span,
    pub weights: Span,
    pub seed: u64,
    pub guard: Guard,
}

impl CampaignConfig {
    pub fn new(class: ClassTag, count: usize, seed: u64) -> Self {
        CampaignConfig {
            class,
            count,
            cycle: Span::new(3, 5),
            extra: Span::new(0, 3),
            weights: Span::new(2, 4),
            seed,
            guard: Guard::default(),
        }
    }

    /// Rejects configurations that cannot produce a single instance.
    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::Unsatisfiable(m));
        if self.count == 0 {
            return bad("instance count must be at least 1".into());
        }
        for (name, s) in [("cycle", self.cycle), ("extra", self.extra), ("weights", self.weights)] {
            if s.lo > s.hi {
                return bad(format!("{name} range {s} is empty"));
            }
        }
        if self.weights.lo == 0 || self.weights.hi > u64::from(u32::MAX) {
            return bad(format!("weights {} must be positive 32-bit integers", self.weights));
        }
        match self.class {
            ClassTag::Other => bad("cannot generate graphs of class Other".into()),
            ClassTag::RootedForest if self.cycle.lo + self.extra.lo < 2 => {
                bad("rooted forests need at least 2 vertices (cycle + extra)".into())
            }
            ClassTag::OrientedCycle | ClassTag::UnicyclicAttached if self.cycle.lo < 3 => {
                bad(format!("cycle range {} must start at 3 or more", self.cycle))
            }
            ClassTag::UnicyclicGeneral if self.cycle.lo < 3 || self.extra.lo < 2 => bad(format!(
                "general unicyclic instances need cycle >= 3 and extra >= 2 (got {} / {})",
                self.cycle, self.extra
            )),
            _ => Ok(()),
        }
    }

    /// Per-instance generation parameters, drawn sequentially from `seed`.
    pub fn instance_params(&self) -> Vec<InstanceParams> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        (0..self.count)
            .map(|_| InstanceParams {
                cycle_len: self.cycle.draw(&mut rng) as usize,
                extra_vertices: self.extra.draw(&mut rng) as usize,
                weight_range: self.weights.lo as u32..=self.weights.hi as u32,
                seed: rng.gen(),
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InstanceOutcome {
    pub index: usize,
    pub seed: u64,
    pub report: InvariantReport,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CampaignReport {
    pub config: CampaignConfig,
    pub instances: Vec<InstanceOutcome>,
    pub pass_count: usize,
    /// Applicable instances that disagree or could not be computed.
    pub fail_count: usize,
    pub inapplicable_count: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub elapsed_ms: Option<u64>,
}

impl CampaignReport {
    pub fn all_passed(&self) -> bool {
        self.fail_count == 0
    }

    pub fn to_csv(&self) -> String {
        let c = &self.config;
        format!(
            "class,count,seed,cycle,extra,weights,pass,fail,inapplicable\n{},{},{},{},{},{},{},{},{}\n",
            c.class, c.count, c.seed, c.cycle, c.extra, c.weights, self.pass_count, self.fail_count,
            self.inapplicable_count
        )
    }

    pub fn to_markdown(&self) -> String {
        let c = &self.config;
        let mut s = format!(
            "## Campaign: {} x{} (seed {})\n\ncycle {}, extra {}, weights {}\n\n",
            c.class, c.count, c.seed, c.cycle, c.extra, c.weights
        );
        s.push_str(&format!(
            "pass {} / fail {} / inapplicable {}\n\n",
            self.pass_count, self.fail_count, self.inapplicable_count
        ));
        s.push_str("| # | V | E | reg (computed / formula) | pd (computed / formula) | verdict |\n|---|---|---|---|---|---|\n");
        for o in &self.instances {
            let r = &o.report;
            let (cr, cp) = r
                .computed
                .as_ref()
                .map_or(("-".into(), "-".into()), |c| (c.reg.to_string(), c.pd.to_string()));
            s.push_str(&format!(
                "| {} | {} | {} | {} / {} | {} / {} | {:?} |\n",
                o.index,
                r.graph.vertex_count(),
                r.graph.edge_count(),
                cr,
                r.predicted.reg,
                cp,
                r.predicted.pd,
                r.verdict
            ));
        }
        if let Some(ms) = self.elapsed_ms {
            s.push_str(&format!("\nelapsed: {ms} ms\n"));
        }
        s
    }
}

/// Generates every instance, verifies the formulas on each, and tallies
/// the verdicts. Output order is the instance order.
pub fn run_campaign(config: &CampaignConfig, timing: bool) -> Result<CampaignReport> {
    config.validate()?;
    let start = Instant::now();
    let engine = BettiEngine::new(config.guard);
    let params = config.instance_params();
    let graphs = params
        .iter()
        .map(|p| random_instance(config.class, p))
        .collect::<Result<Vec<_>>>()?;
    let instances = graphs
        .par_iter()
        .zip(params.par_iter())
        .enumerate()
        .map(|(index, (g, p))| {
            verify_formula(&engine, g).map(|report| InstanceOutcome {
                index,
                seed: p.seed,
                report,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let mut pass_count = 0;
    let mut fail_count = 0;
    let mut inapplicable_count = 0;
    for o in &instances {
        match (o.report.predicted.applicable, o.report.verdict) {
            (false, _) => inapplicable_count += 1,
            (true, Verdict::Pass) => pass_count += 1,
            (true, _) => fail_count += 1,
        }
    }
    Ok(CampaignReport {
        config: config.clone(),
        instances,
        pass_count,
        fail_count,
        inapplicable_count,
        elapsed_ms: timing.then(|| start.elapsed().as_millis() as u64),
    })
}
