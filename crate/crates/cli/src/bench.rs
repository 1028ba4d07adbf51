//! `bench`: wall-clock comparison of the direct, reduced and frontier
//! strategies on one family.

use std::collections::BTreeSet;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use pathcat_core::frontier::best_cut;
use pathcat_core::generators::{grid, hypercube, necklace};
use pathcat_core::reduction::{corner_reduce, interval_restriction, minimal_path_subcomplex};
use pathcat_core::{frontier_hom, triangulate_sk2, CubicalComplex, PathEngine, SimplicialComplex, Vertex};

use crate::args::{BenchArgs, Global};

enum Instance {
    Simplicial(String, SimplicialComplex, Vertex, Vertex),
    Cubical(String, CubicalComplex),
}

fn range(text: &str) -> Result<std::ops::RangeInclusive<usize>> {
    let parse = |s: &str| s.trim().parse::<usize>().map_err(|_| anyhow!("bad size {s:?}"));
    match text.split_once("..") {
        Some((a, b)) => Ok(parse(a)?..=parse(b.trim_start_matches('='))?),
        None => {
            let n = parse(text)?;
            Ok(n..=n)
        }
    }
}

fn instances(args: &BenchArgs) -> Result<Vec<Instance>> {
    let p = &args.params;
    Ok(match args.family.as_str() {
        "necklace" => {
            range(&p[0])?.map(|k| Instance::Simplicial(format!("necklace-{k}"), necklace(k), 0, 2 * k)).collect()
        }
        "hypercube" => range(&p[0])?
            .map(|n| {
                if n > 16 {
                    bail!("hypercube dimension {n} is too large to triangulate");
                }
                Ok(Instance::Cubical(format!("hypercube-{n}"), hypercube(n)))
            })
            .collect::<Result<_>>()?,
        "grid" => {
            if p.len() != 2 {
                bail!("grid takes a width and a height");
            }
            let (w, h) = (range(&p[0])?, range(&p[1])?);
            let mut out = Vec::new();
            for wi in w {
                for hi in h.clone() {
                    out.push(Instance::Cubical(format!("grid-{wi}x{hi}"), grid(wi, hi)));
                }
            }
            out
        }
        f => bail!("unknown family {f:?}; expected necklace, hypercube or grid"),
    })
}

fn timed(f: impl FnOnce() -> Result<u64>) -> Result<(u64, f64)> {
    let start = Instant::now();
    let count = f()?;
    Ok((count, start.elapsed().as_secs_f64() * 1e3))
}

fn simplicial_count(l: &SimplicialComplex, v: Vertex, w: Vertex, count_only: bool) -> Result<u64> {
    let engine = PathEngine::new(l);
    Ok(if count_only { engine.hom_count(v, w)? } else { engine.hom_set(v, w)?.len() as u64 })
}

fn reduced_count(l: &SimplicialComplex, v: Vertex, w: Vertex, count_only: bool) -> Result<u64> {
    let l = interval_restriction(l, v, w)?;
    let (l, _) = minimal_path_subcomplex(&l, v, w)?;
    if l.is_empty() {
        return Ok(0);
    }
    simplicial_count(&l, v, w, count_only)
}

pub fn run(args: &BenchArgs, global: &Global) -> Result<String> {
    let mut out = csv::Writer::from_writer(Vec::new());
    out.write_record(["instance", "pipeline", "count", "wall_ms"])?;
    let count_only = global.count_only;
    for inst in instances(args)? {
        let mut rows: Vec<(&str, (u64, f64))> = Vec::new();
        let name = match &inst {
            Instance::Simplicial(name, l, v, w) => {
                rows.push(("direct", timed(|| simplicial_count(l, *v, *w, count_only))?));
                rows.push(("reduced", timed(|| reduced_count(l, *v, *w, count_only))?));
                name
            }
            Instance::Cubical(name, k) => {
                let vs = k.vertices();
                let (init, term) = (vs[0], *vs.last().unwrap());
                rows.push((
                    "direct",
                    timed(|| {
                        let t = triangulate_sk2(k);
                        simplicial_count(&t.complex, t.label(init).unwrap(), t.label(term).unwrap(), count_only)
                    })?,
                ));
                rows.push((
                    "reduced",
                    timed(|| {
                        let (small, _) = corner_reduce(k, &BTreeSet::from([init, term]));
                        let t = triangulate_sk2(&small);
                        reduced_count(&t.complex, t.label(init).unwrap(), t.label(term).unwrap(), count_only)
                    })?,
                ));
                if init != term {
                    rows.push((
                        "frontier",
                        timed(|| {
                            let cut = best_cut(k, init, term).context("no admissible cut")?;
                            Ok(frontier_hom(k, cut, init, term)?.hom.len() as u64)
                        })?,
                    ));
                }
                name
            }
        };
        let first = rows[0].1 .0;
        for (pipeline, (count, ms)) in &rows {
            if *count != first {
                bail!("{name}: {pipeline} counted {count} but direct counted {first}");
            }
            out.write_record([name.as_str(), pipeline, &count.to_string(), &format!("{ms:.3}")])?;
        }
    }
    Ok(String::from_utf8(out.into_inner()?)?)
}
