//! `verify`: brute-force comparison of a pass on one file or on seeded
//! random complexes.

use std::collections::BTreeSet;
use std::str::FromStr;

use anyhow::{bail, Context, Result};
use pathcat_core::check::{
    check_corner_reduce, check_corners, check_frontier, check_interval_restriction, check_levels, check_refinement,
    check_simplicial_skeleton, check_skeleton, check_source_sink, CheckReport,
};
use pathcat_core::frontier::best_cut;
use pathcat_core::generators::{random_cubical, random_mono, random_simplicial};
use pathcat_core::{triangulate_sk2, Complex, CubicalComplex, PosetMono, SimplicialComplex};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::args::{Global, VerifyArgs};
use crate::input::{cubical_list, cubical_vertex, load_alpha, load_complex};
use crate::pipeline::Pass;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Target {
    Pass(Pass),
    Levels,
}

/// Returns the report and whether every pair passed.
pub fn run(args: &VerifyArgs, global: &Global) -> Result<(Value, bool)> {
    let target = match args.pass.as_str() {
        "levels" => Target::Levels,
        p => Target::Pass(Pass::from_str(p)?),
    };
    let instances: Vec<Complex> = match (&args.input, args.random) {
        (Some(_), Some(_)) => bail!("give an input file or --random, not both"),
        (None, None) => bail!("give an input file or --random N"),
        (Some(path), None) => vec![load_complex(path)?],
        (None, Some(n)) => random_instances(target, n, global.seed),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(global.seed);

    let mut total = CheckReport::default();
    let mut failures = Vec::new();
    let mut passed = 0;
    for (i, c) in instances.iter().enumerate() {
        let r = check_one(target, c, args, &mut rng)?;
        if r.ok() {
            passed += 1;
        }
        for m in &r.mismatches {
            eprintln!(
                "instance {i}: {} {} -> {}: {} after the pass, {} direct",
                m.context, m.from, m.to, m.reduced, m.direct
            );
            failures.push(json!({"instance": i, "mismatch": m}));
        }
        total.merge(r);
    }
    let ok = total.ok();
    let mut out = json!({
        "pass": args.pass,
        "instances": instances.len(),
        "passed": passed,
        "pairs_checked": total.pairs_checked,
        "ok": ok,
        "mismatches": failures,
    });
    if args.random.is_some() {
        out["seed"] = json!(global.seed);
    }
    eprintln!("{passed}/{} {}", instances.len(), if ok { "OK" } else { "FAILED" });
    Ok((out, ok))
}

/// Simplicial passes get complexes on at most 8 vertices; cubical ones
/// ambient dimension at most 4, or 5 for frontier and levels, and 3 for
/// refine so that the target stays within 5.
fn random_instances(target: Target, n: usize, seed: u64) -> Vec<Complex> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| match target {
            Target::Pass(Pass::Interval | Pass::SourceSink) => Complex::Simplicial(random_simplicial(&mut rng, 8)),
            Target::Pass(Pass::Refine | Pass::Sk2) => Complex::Cubical(random_cubical(&mut rng, 3)),
            Target::Pass(Pass::Corner) => Complex::Cubical(random_cubical(&mut rng, 4)),
            Target::Pass(Pass::Frontier) | Target::Levels => Complex::Cubical(random_cubical(&mut rng, 5)),
        })
        .collect()
}

fn as_simplicial(c: &Complex) -> SimplicialComplex {
    match c {
        Complex::Simplicial(l) => l.clone(),
        Complex::Cubical(k) => triangulate_sk2(k).complex,
    }
}

fn as_cubical<'a>(c: &'a Complex, pass: &str) -> Result<&'a CubicalComplex> {
    match c {
        Complex::Cubical(k) => Ok(k),
        Complex::Simplicial(_) => bail!("the {pass} pass needs a cubical complex"),
    }
}

fn check_one(target: Target, c: &Complex, args: &VerifyArgs, rng: &mut ChaCha8Rng) -> Result<CheckReport> {
    let opts = &args.options;
    Ok(match target {
        Target::Levels => check_levels(as_cubical(c, "levels")?),
        Target::Pass(Pass::Interval) => check_interval_restriction(&as_simplicial(c))?,
        Target::Pass(Pass::SourceSink) => check_source_sink(&as_simplicial(c))?,
        Target::Pass(Pass::Sk2) => match c {
            Complex::Cubical(k) => check_skeleton(k)?,
            Complex::Simplicial(l) => check_simplicial_skeleton(l)?,
        },
        Target::Pass(Pass::Corner) => {
            let k = as_cubical(c, "corner")?;
            match &opts.protect {
                Some(list) => check_corner_reduce(k, &cubical_list(list, k)?)?,
                None => {
                    let mut r = check_corners(k)?;
                    r.merge(check_corner_reduce(k, &BTreeSet::new())?);
                    r
                }
            }
        }
        Target::Pass(Pass::Refine) => {
            let k = as_cubical(c, "refine")?;
            let alpha: PosetMono = match &opts.alpha {
                Some(path) => load_alpha(path)?,
                None if args.random.is_some() => {
                    let n = rng.gen_range(k.ambient()..=5.max(k.ambient()));
                    random_mono(rng, k.ambient(), n)
                }
                None => bail!("the refine pass needs --alpha"),
            };
            if alpha.source_dim != k.ambient() {
                bail!("--alpha maps P({}) but the complex lives in P({})", alpha.source_dim, k.ambient());
            }
            check_refinement(k, &alpha)?
        }
        Target::Pass(Pass::Frontier) => {
            let k = as_cubical(c, "frontier")?;
            let pair = match (&args.query.from, &args.query.to) {
                (Some(a), Some(b)) => Some((cubical_vertex(a, k)?, cubical_vertex(b, k)?)),
                (None, None) => None,
                _ => bail!("give both --from and --to"),
            };
            let cut = match (opts.cut, pair) {
                (Some(m), _) => Some(m),
                (None, Some((u, v))) => Some(best_cut(k, u, v).context("no cut lies between the two vertices")?),
                (None, None) => None,
            };
            let cuts = cut.map(|m| vec![m]);
            check_frontier(k, cuts.as_deref(), pair)?
        }
    })
}
