//! `compute`: hom sets after the configured pipeline.

use std::borrow::Cow;
use std::collections::BTreeSet;

use anyhow::{bail, Context, Result};
use pathcat_core::frontier::best_cut;
use pathcat_core::json::{DecompositionJson, HomJson};
use pathcat_core::reduction::{corner_reduce, interval_restriction, minimal_path_subcomplex, ReductionReport};
use pathcat_core::refinement::refine;
use pathcat_core::{
    frontier_hom, sk2, triangulate_sk2, Complex, CubicalComplex, Error, PathEngine, SimplicialComplex, Vertex,
    VertexSet,
};
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::args::{ComputeArgs, Global, PassOptions, Query};
use crate::input::{cubical_vertex, load_alpha, load_complex, set_name, simplicial_vertex};
use crate::pipeline::{Pass, Pipeline};

pub struct Settings<'a> {
    pub pipeline: Pipeline,
    pub count_only: bool,
    pub report: bool,
    pub options: &'a PassOptions,
}

/// Result of one query.
struct Hom {
    json: HomJson<Value>,
    reports: Vec<Value>,
}

pub fn run(args: &ComputeArgs, global: &Global) -> Result<Value> {
    let settings = Settings {
        pipeline: Pipeline::parse(&global.pipeline)?,
        count_only: global.count_only,
        report: global.report,
        options: &args.options,
    };
    let complex = load_complex(&args.input)?;
    let single = !global.all;
    if single && (args.query.from.is_none() || args.query.to.is_none()) {
        bail!("give --from and --to, or --all");
    }
    let (objects, homs, reports) = match &complex {
        Complex::Cubical(k) => cubical(k, &args.query, global.all, &settings)?,
        Complex::Simplicial(l) => {
            if settings.pipeline.has_cubical() {
                bail!("cubical passes need a cubical complex");
            }
            let pairs = if global.all {
                all_pairs(l)
            } else {
                let v = simplicial_vertex(args.query.from.as_deref().unwrap(), l)?;
                let w = simplicial_vertex(args.query.to.as_deref().unwrap(), l)?;
                vec![(v, w)]
            };
            let (homs, reports) = simplicial(l, &pairs, &settings, &|x| json!(x))?;
            (l.vertices().iter().map(|&v| json!(v)).collect(), homs, reports)
        }
    };

    let mut out = Map::new();
    if single && settings.count_only {
        out.insert("count".into(), json!(homs[0].count));
    } else {
        out.insert("objects".into(), Value::Array(objects));
        out.insert("homs".into(), serde_json::to_value(&homs)?);
    }
    if settings.report {
        out.insert("report".into(), Value::Array(reports));
    }
    Ok(Value::Object(out))
}

fn all_pairs(l: &SimplicialComplex) -> Vec<(Vertex, Vertex)> {
    let vs: Vec<Vertex> = l.vertices().iter().copied().collect();
    let mut out = Vec::new();
    for (i, &v) in vs.iter().enumerate() {
        out.extend(vs[i..].iter().map(|&w| (v, w)));
    }
    out
}

pub fn report_json<V: serde::Serialize>(r: &ReductionReport<V>) -> Value {
    serde_json::to_value(r).expect("report serializes")
}

fn with_pair(mut v: Value, from: &Value, to: &Value) -> Value {
    if let Value::Object(m) = &mut v {
        m.insert("from".into(), from.clone());
        m.insert("to".into(), to.clone());
    }
    v
}

/// Hom sets of `l` for each pair, after the per-pair simplicial passes.
/// Pairs run concurrently; results keep the input order.
pub fn simplicial(
    l: &SimplicialComplex,
    pairs: &[(Vertex, Vertex)],
    settings: &Settings,
    name: &(dyn Fn(Vertex) -> Value + Sync),
) -> Result<(Vec<HomJson<Value>>, Vec<Value>)> {
    let l = if settings.pipeline.has(Pass::Sk2) { sk2(l) } else { l.clone() };
    let shared = PathEngine::new(&l);
    let per_pair = settings.pipeline.has(Pass::Interval) || settings.pipeline.has(Pass::SourceSink);

    let results: Vec<Result<Hom>> = pairs
        .par_iter()
        .map(|&(v, w)| {
            let (from, to) = (name(v), name(w));
            let mut reports = Vec::new();
            let mut cur = Cow::Borrowed(&l);
            if settings.pipeline.has(Pass::Interval) {
                let before = cur.vertices().len();
                let restricted = if v <= w { interval_restriction(&cur, v, w)? } else { SimplicialComplex::default() };
                let removed: Vec<Vertex> = cur.vertices().difference(restricted.vertices()).copied().collect();
                reports.push(with_pair(
                    report_json(&ReductionReport {
                        pass: "interval".into(),
                        removed,
                        iterations: 1,
                        input_size: before,
                        output_size: restricted.vertices().len(),
                    }),
                    &from,
                    &to,
                ));
                cur = Cow::Owned(restricted);
            }
            if settings.pipeline.has(Pass::SourceSink) && cur.has_vertex(v) && cur.has_vertex(w) {
                let (reduced, report) = minimal_path_subcomplex(&cur, v, w)?;
                reports.push(with_pair(report_json(&report), &from, &to));
                cur = Cow::Owned(reduced);
            }
            let json = if !cur.has_vertex(v) || !cur.has_vertex(w) {
                HomJson { from, to, count: 0, representatives: (!settings.count_only).then(Vec::new) }
            } else {
                let own;
                let engine = if per_pair {
                    own = PathEngine::new(&cur);
                    &own
                } else {
                    &shared
                };
                if settings.count_only {
                    HomJson { from, to, count: engine.hom_count(v, w)?, representatives: None }
                } else {
                    HomJson::from_hom(&engine.hom_set(v, w)?, name)
                }
            };
            Ok(Hom { json, reports })
        })
        .collect();

    let mut homs = Vec::with_capacity(results.len());
    let mut reports = Vec::new();
    for r in results {
        let h = r?;
        homs.push(h.json);
        reports.extend(h.reports);
    }
    Ok((homs, reports))
}

type Output = (Vec<Value>, Vec<HomJson<Value>>, Vec<Value>);

/// A cubical complex after its passes, the queried pairs in its
/// coordinates, and the pass reports.
type Reduced = (CubicalComplex, Vec<(VertexSet, VertexSet)>, Vec<Value>);

fn cubical(k: &CubicalComplex, query: &Query, all: bool, settings: &Settings) -> Result<Output> {
    let objects: Vec<Value> = k.vertices().into_iter().map(set_name).collect();
    let pairs: Vec<(VertexSet, VertexSet)> = if all {
        let vs = k.vertices();
        vs.iter().flat_map(|&u| vs.iter().filter(move |v| u.is_subset(**v)).map(move |&v| (u, v))).collect()
    } else {
        vec![(cubical_vertex(query.from.as_deref().unwrap(), k)?, cubical_vertex(query.to.as_deref().unwrap(), k)?)]
    };
    let names: Vec<(Value, Value)> = pairs.iter().map(|&(u, v)| (set_name(u), set_name(v))).collect();
    let (k, pairs, mut reports) = cubical_passes(k, &pairs, settings)?;

    if settings.pipeline.has(Pass::Frontier) {
        let mut homs = Vec::with_capacity(pairs.len());
        for (&(u, v), (from, to)) in pairs.iter().zip(&names) {
            let (hom, report) = frontier_pair(&k, u, v, settings)?;
            homs.push(HomJson { from: from.clone(), to: to.clone(), ..hom });
            reports.extend(report);
        }
        return Ok((objects, homs, reports));
    }

    let t = triangulate_sk2(&k);
    let labelled: Vec<(Vertex, Vertex)> =
        pairs.iter().map(|&(u, v)| (t.label(u).unwrap(), t.label(v).unwrap())).collect();
    let (mut homs, more) = simplicial(&t.complex, &labelled, settings, &|x| set_name(t.vertex_set(x).unwrap()))?;
    for (h, (from, to)) in homs.iter_mut().zip(names) {
        h.from = from;
        h.to = to;
    }
    reports.extend(more);
    Ok((objects, homs, reports))
}

/// Corner removal (keeping every queried endpoint) and refinement.
pub fn cubical_passes(
    k: &CubicalComplex,
    pairs: &[(VertexSet, VertexSet)],
    settings: &Settings,
) -> Result<Reduced> {
    let mut reports = Vec::new();
    let mut k = k.clone();
    let mut pairs = pairs.to_vec();
    if settings.pipeline.has(Pass::Corner) {
        let mut protected: BTreeSet<VertexSet> = pairs.iter().flat_map(|&(u, v)| [u, v]).collect();
        if let Some(list) = &settings.options.protect {
            protected.extend(crate::input::cubical_list(list, &k)?);
        }
        let (reduced, report) = corner_reduce(&k, &protected);
        reports.push(report_json(&report));
        k = reduced;
    }
    if settings.pipeline.has(Pass::Refine) {
        let path = settings.options.alpha.as_ref().context("the refine pass needs --alpha")?;
        let alpha = load_alpha(path)?;
        if alpha.source_dim != k.ambient() {
            bail!("--alpha maps P({}) but the complex lives in P({})", alpha.source_dim, k.ambient());
        }
        let refined = refine(&k, &alpha)?;
        reports.push(report_json(&ReductionReport::<VertexSet> {
            pass: "refine".into(),
            removed: Vec::new(),
            iterations: 1,
            input_size: k.vertices().len(),
            output_size: refined.vertices().len(),
        }));
        pairs = pairs.iter().map(|&(u, v)| (alpha.apply(u), alpha.apply(v))).collect();
        k = refined;
    }
    Ok((k, pairs, reports))
}

/// One frontier query. A pair the cut does not separate is an error
/// unless `--fallback-direct` is given.
pub fn frontier_pair(
    k: &CubicalComplex,
    u: VertexSet,
    v: VertexSet,
    settings: &Settings,
) -> Result<(HomJson<Value>, Option<Value>)> {
    let cut = settings.options.cut.or_else(|| best_cut(k, u, v));
    let separated = cut.is_some_and(|m| u.len() <= m && m < v.len());
    if !separated {
        if !settings.options.fallback_direct {
            bail!(Error::CutDoesNotSeparate { cut: cut.unwrap_or(u.len()), from: u.to_string(), to: v.to_string() });
        }
        let t = triangulate_sk2(k);
        let engine = PathEngine::new(&t.complex);
        let (a, b) = (t.label(u).unwrap(), t.label(v).unwrap());
        let hom = if settings.count_only {
            HomJson { from: set_name(u), to: set_name(v), count: engine.hom_count(a, b)?, representatives: None }
        } else {
            HomJson::from_hom(&engine.hom_set(a, b)?, |x| set_name(t.vertex_set(x).unwrap()))
        };
        return Ok((hom, Some(json!({"pass": "frontier", "from": u, "to": v, "fallback": "direct"}))));
    }
    let f = frontier_hom(k, cut.unwrap(), u, v)?;
    let t = &f.decomposition.triangulation;
    let mut hom = HomJson::from_hom(&f.hom, |x| set_name(t.vertex_set(x).unwrap()));
    if settings.count_only {
        hom.representatives = None;
    }
    let report = json!({
        "pass": "frontier",
        "from": u,
        "to": v,
        "decomposition": DecompositionJson::from(&f),
        "lower_ms": f.lower_time.as_secs_f64() * 1e3,
        "upper_ms": f.upper_time.as_secs_f64() * 1e3,
    });
    Ok((hom, Some(report)))
}
