use anyhow::{anyhow, bail, Result};
use pathcat_core::generators::{hypercube, necklace, swiss_flag, Direction, GridEdge, GridSpec};
use pathcat_core::Complex;

use crate::args::Family;

pub fn run(family: &Family) -> Result<Complex> {
    Ok(match family {
        Family::Necklace { k } => Complex::Simplicial(necklace(*k)),
        Family::Hypercube { n } => {
            if *n > pathcat_core::vertex_set::MAX_AMBIENT {
                bail!("hypercube dimension {n} exceeds {}", pathcat_core::vertex_set::MAX_AMBIENT);
            }
            Complex::Cubical(hypercube(*n))
        }
        Family::Grid { width, height, holes, missing_edges } => {
            let mut spec = GridSpec::new(*width, *height);
            spec.holes = parse_items(holes, 2)?.into_iter().map(|v| (v[0].0, v[1].0)).collect();
            spec.missing_edges = parse_items(missing_edges, 3)?
                .into_iter()
                .map(|v| {
                    let dir = match v[2].1.as_str() {
                        "h" => Direction::Horizontal,
                        "v" => Direction::Vertical,
                        d => bail!("edge direction must be h or v, got {d:?}"),
                    };
                    Ok(GridEdge { i: v[0].0, j: v[1].0, dir })
                })
                .collect::<Result<_>>()?;
            if width + height > pathcat_core::vertex_set::MAX_AMBIENT {
                bail!("grid needs {} coordinates", width + height);
            }
            Complex::Cubical(spec.build()?)
        }
        Family::SwissFlag => Complex::Cubical(swiss_flag()),
    })
}

/// `a:b,c:d` into fields; numeric fields parsed, the raw text kept.
fn parse_items(text: &str, fields: usize) -> Result<Vec<Vec<(usize, String)>>> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|item| {
            let parts: Vec<&str> = item.split(':').collect();
            if parts.len() != fields {
                bail!("expected {fields} fields separated by ':' in {item:?}");
            }
            parts
                .iter()
                .enumerate()
                .map(|(i, p)| {
                    let n = if i < 2 { p.parse().map_err(|_| anyhow!("bad number {p:?} in {item:?}"))? } else { 0 };
                    Ok((n, p.to_string()))
                })
                .collect()
        })
        .collect()
}
