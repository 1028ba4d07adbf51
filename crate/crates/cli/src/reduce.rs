//! `reduce`: run the pipeline and print the resulting complex.

use anyhow::{bail, Result};
use pathcat_core::json::emit_complex;
use pathcat_core::reduction::{interval_restriction, minimal_path_subcomplex};
use pathcat_core::{sk2, triangulate_sk2, Complex, SimplicialComplex, Vertex};
use serde_json::{json, Value};

use crate::args::{Global, ReduceArgs};
use crate::compute::{cubical_passes, report_json, Settings};
use crate::input::{cubical_vertex, load_complex, simplicial_vertex};
use crate::pipeline::{Pass, Pipeline};

pub fn run(args: &ReduceArgs, global: &Global) -> Result<Value> {
    let settings = Settings {
        pipeline: Pipeline::parse(&global.pipeline)?,
        count_only: false,
        report: global.report,
        options: &args.options,
    };
    let p = &settings.pipeline;
    if p.has(Pass::Frontier) {
        bail!("frontier splits a computation and does not produce a complex");
    }
    let needs_pair = p.has(Pass::Interval) || p.has(Pass::SourceSink);
    let query = match (&args.query.from, &args.query.to) {
        (Some(a), Some(b)) => Some((a.as_str(), b.as_str())),
        (None, None) if !needs_pair => None,
        _ => bail!("interval and source-sink need --from and --to"),
    };
    let simplicial_stage = needs_pair || p.has(Pass::Sk2);

    let mut reports = Vec::new();
    let (l, pair) = match load_complex(&args.input)? {
        Complex::Cubical(k) => {
            let pairs = match query {
                Some((a, b)) => vec![(cubical_vertex(a, &k)?, cubical_vertex(b, &k)?)],
                None => Vec::new(),
            };
            let (k, pairs, r) = cubical_passes(&k, &pairs, &settings)?;
            reports.extend(r);
            if !simplicial_stage {
                return Ok(finish(&Complex::Cubical(k), reports, settings.report));
            }
            let t = triangulate_sk2(&k);
            let labels: Vec<Value> = t.labels().iter().map(|f| json!(f)).collect();
            reports.push(json!({"pass": "sk2", "labels": labels}));
            let pair = pairs.first().map(|&(u, v)| (t.label(u).unwrap(), t.label(v).unwrap()));
            (t.complex, pair)
        }
        Complex::Simplicial(l) => {
            if p.has_cubical() {
                bail!("cubical passes need a cubical complex");
            }
            let pair = match query {
                Some((a, b)) => Some((simplicial_vertex(a, &l)?, simplicial_vertex(b, &l)?)),
                None => None,
            };
            (if p.has(Pass::Sk2) { sk2(&l) } else { l }, pair)
        }
    };
    let l = simplicial_passes(l, pair, &settings, &mut reports)?;
    Ok(finish(&Complex::Simplicial(l), reports, settings.report))
}

fn simplicial_passes(
    mut l: SimplicialComplex,
    pair: Option<(Vertex, Vertex)>,
    settings: &Settings,
    reports: &mut Vec<Value>,
) -> Result<SimplicialComplex> {
    let Some((v, w)) = pair else { return Ok(l) };
    if settings.pipeline.has(Pass::Interval) {
        if v > w {
            return Ok(SimplicialComplex::default());
        }
        l = interval_restriction(&l, v, w)?;
    }
    if settings.pipeline.has(Pass::SourceSink) {
        let (reduced, report) = minimal_path_subcomplex(&l, v, w)?;
        reports.push(report_json(&report));
        l = reduced;
    }
    Ok(l)
}

fn finish(c: &Complex, reports: Vec<Value>, report: bool) -> Value {
    let mut v: Value = serde_json::from_str(&emit_complex(c)).expect("emitted JSON parses");
    if report {
        v["report"] = Value::Array(reports);
    }
    v
}
