use std::str::FromStr;

use anyhow::{bail, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pass {
    Corner,
    Refine,
    Frontier,
    Sk2,
    Interval,
    SourceSink,
}

impl Pass {
    pub fn name(self) -> &'static str {
        match self {
            Pass::Corner => "corner",
            Pass::Refine => "refine",
            Pass::Frontier => "frontier",
            Pass::Sk2 => "sk2",
            Pass::Interval => "interval",
            Pass::SourceSink => "source-sink",
        }
    }

    pub fn is_cubical(self) -> bool {
        matches!(self, Pass::Corner | Pass::Refine | Pass::Frontier)
    }
}

impl FromStr for Pass {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.trim() {
            "corner" => Pass::Corner,
            "refine" => Pass::Refine,
            "frontier" => Pass::Frontier,
            "sk2" => Pass::Sk2,
            "interval" => Pass::Interval,
            "source-sink" => Pass::SourceSink,
            other => bail!("unknown pass {other:?}"),
        })
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Pipeline {
    passes: Vec<Pass>,
}

impl Pipeline {
    /// Cubical passes come first, frontier ends the pipeline, and no pass
    /// repeats.
    pub fn parse(spec: &str) -> Result<Self> {
        let passes =
            spec.split(',').filter(|s| !s.trim().is_empty()).map(Pass::from_str).collect::<Result<Vec<_>>>()?;
        for (i, p) in passes.iter().enumerate() {
            if passes[..i].contains(p) {
                bail!("pass {} appears twice", p.name());
            }
            if p.is_cubical() && passes[..i].iter().any(|q| !q.is_cubical()) {
                bail!("cubical pass {} must come before the simplicial passes", p.name());
            }
            if *p == Pass::Frontier && i + 1 != passes.len() {
                bail!("frontier must be the last pass");
            }
        }
        Ok(Pipeline { passes })
    }

    pub fn has(&self, p: Pass) -> bool {
        self.passes.contains(&p)
    }

    pub fn has_cubical(&self) -> bool {
        self.passes.iter().any(|p| p.is_cubical())
    }
}
