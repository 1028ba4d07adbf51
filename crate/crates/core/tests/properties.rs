mod common;

use std::collections::BTreeSet;

use pathcat_core::check::{
    check_corners, check_interval_restriction, check_levels, check_refinement, check_skeleton, check_source_sink,
};
use pathcat_core::engine::path_category;
use pathcat_core::frontier::{frontier_hom_with, Schedule};
use pathcat_core::generators::{hypercube, necklace, random_cubical, random_mono, random_simplicial};
use pathcat_core::json::{emit_complex, parse_complex, CategoryJson, HomJson};
use pathcat_core::reduction::{corner_reduce, corners};
use pathcat_core::refinement::{apply_mono, is_refinement, refine, validate_mono};
use pathcat_core::{
    interval_members, triangulate_sk2, Complex, CubicalComplex, Interval, PathEngine, SimplicialComplex, VertexSet,
};
use proptest::prelude::*;
use rand::Rng;

use common::{rng, Oracle};

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig { cases, ..ProptestConfig::default() }
}

fn pairs(l: &SimplicialComplex) -> Vec<(usize, usize)> {
    let vs: Vec<usize> = l.vertices().iter().copied().collect();
    vs.iter().flat_map(|&a| vs.iter().filter(move |&&b| a <= b).map(move |&b| (a, b))).collect()
}

proptest! {
    #![proptest_config(config(96))]

    #[test]
    fn engine_matches_oracle(seed in any::<u64>()) {
        let l = random_simplicial(&mut rng(seed), 7);
        let engine = PathEngine::new(&l);
        let oracle = Oracle::new(&l);
        for (v, w) in pairs(&l) {
            let h = engine.hom_set(v, w).unwrap();
            let classes = oracle.classes(v, w);
            prop_assert_eq!(h.len(), classes.len());
            for (m, class) in h.classes.iter().zip(&classes) {
                prop_assert_eq!(m.representative.vertices(), class[0].as_slice());
                for p in class {
                    prop_assert_eq!(h.class_of(&p.clone().into()), Some(m.class_id));
                }
            }
            prop_assert_eq!(engine.hom_count(v, w).unwrap(), h.len() as u64);
        }
    }

    #[test]
    fn every_path_has_exactly_one_class(seed in any::<u64>()) {
        let l = random_simplicial(&mut rng(seed), 7);
        let engine = PathEngine::new(&l);
        for (v, w) in pairs(&l) {
            let h = engine.hom_set(v, w).unwrap();
            let paths = engine.enumerate_paths(v, w).unwrap();
            prop_assert_eq!(h.indexed_paths(), paths.len());
            let mut hit = BTreeSet::new();
            for p in &paths {
                let c = h.class_of(p).unwrap();
                prop_assert!(c < h.len());
                hit.insert(c);
            }
            prop_assert_eq!(hit.len(), h.len());
        }
    }

    #[test]
    fn composition_is_associative_and_unital(seed in any::<u64>()) {
        let l = random_simplicial(&mut rng(seed), 6);
        let c = path_category(&l);
        let morphisms: Vec<_> = c.morphisms().cloned().collect();
        for f in &morphisms {
            let left = c.compose(c.identity(f.source).unwrap(), f).unwrap();
            let right = c.compose(f, c.identity(f.target).unwrap()).unwrap();
            prop_assert_eq!(&left, f);
            prop_assert_eq!(&right, f);
            for g in morphisms.iter().filter(|g| g.source == f.target) {
                let fg = c.compose(f, g).unwrap();
                for h in morphisms.iter().filter(|h| h.source == g.target) {
                    let a = c.compose(&fg, h).unwrap();
                    let b = c.compose(f, &c.compose(g, h).unwrap()).unwrap();
                    prop_assert_eq!(a, b);
                }
            }
        }
    }

    #[test]
    fn simplicial_passes_are_fully_faithful(seed in any::<u64>()) {
        let l = random_simplicial(&mut rng(seed), 7);
        prop_assert!(check_interval_restriction(&l).unwrap().ok());
        prop_assert!(check_source_sink(&l).unwrap().ok());
    }

    #[test]
    fn corner_passes_are_fully_faithful(seed in any::<u64>()) {
        let k = random_cubical(&mut rng(seed), 4);
        prop_assert!(check_corners(&k).unwrap().ok());
    }

    #[test]
    fn corner_reduce_keeps_protected_vertices(seed in any::<u64>(), pick in any::<u64>()) {
        let k = random_cubical(&mut rng(seed), 4);
        let vs = k.vertices();
        let protected: BTreeSet<VertexSet> =
            vs.iter().enumerate().filter(|(i, _)| pick >> (i % 64) & 1 == 1).map(|(_, &f)| f).collect();
        let (reduced, report) = corner_reduce(&k, &protected);
        prop_assert!(report.removed.iter().all(|x| !protected.contains(x)));
        prop_assert!(protected.iter().all(|&x| reduced.contains_vertex(x)));
        prop_assert!(corners(&reduced).iter().all(|x| protected.contains(x)));
        prop_assert_eq!(report.output_size + report.removed.len(), report.input_size);
    }

    #[test]
    fn refinement_is_fully_faithful(seed in any::<u64>()) {
        let mut r = rng(seed);
        let k = random_cubical(&mut r, 3);
        let n = r.gen_range(k.ambient()..=5);
        let alpha = random_mono(&mut r, k.ambient(), n);
        prop_assert!(validate_mono(&alpha).is_empty());
        let ka = refine(&k, &alpha).unwrap();
        prop_assert!(is_refinement(&k, &alpha, &ka).unwrap());
        prop_assert!(check_refinement(&k, &alpha).unwrap().ok());
    }

    #[test]
    fn mono_preserves_containment(seed in any::<u64>(), a in 0u64..16, b in 0u64..16) {
        let mut r = rng(seed);
        let n = r.gen_range(4..=7);
        let alpha = random_mono(&mut r, 4, n);
        let (a, b) = (VertexSet::from_bits(a), VertexSet::from_bits(b));
        prop_assert_eq!(a.is_subset(b), alpha.apply(a).is_subset(alpha.apply(b)));
        prop_assert_eq!(a == b, alpha.apply(a) == alpha.apply(b));
        prop_assert_eq!(alpha.apply(a.union(b)), alpha.apply(a).union(alpha.apply(b)));
        prop_assert_eq!(alpha.apply(a.intersection(b)), alpha.apply(a).intersection(alpha.apply(b)));
        if a.is_subset(b) {
            let cell = apply_mono(&alpha, &Interval::new(a, b).unwrap()).unwrap();
            prop_assert_eq!((cell.lower, cell.upper), (alpha.apply(a), alpha.apply(b)));
            prop_assert!(cell.dimension() >= b.len() - a.len());
        }
    }

    #[test]
    fn refinement_is_functorial(seed in any::<u64>()) {
        let mut r = rng(seed);
        let k = random_cubical(&mut r, 3);
        let m = k.ambient();
        let n1 = r.gen_range(m..=4);
        let n2 = r.gen_range(n1..=5);
        let alpha = random_mono(&mut r, m, n1);
        let beta = random_mono(&mut r, n1, n2);
        let step = refine(&refine(&k, &alpha).unwrap(), &beta).unwrap();
        prop_assert_eq!(step, refine(&k, &alpha.then(&beta).unwrap()).unwrap());
    }

    #[test]
    fn interval_members_and_containment(lower in 0u64..64, extra in 0u64..64, drop in 0u64..64) {
        let a = VertexSet::from_bits(lower);
        let b = a.union(VertexSet::from_bits(extra));
        let cell = Interval::new(a, b).unwrap();
        let members = interval_members(&cell);
        prop_assert_eq!(members.len(), 1usize << cell.dimension());
        prop_assert!(members.iter().all(|&f| a.is_subset(f) && f.is_subset(b)));

        let k = CubicalComplex::new(6, [cell]).unwrap();
        let shrink = VertexSet::from_bits(drop).intersection(cell.free());
        let sub = Interval::new(a, b.difference(shrink)).unwrap();
        prop_assert!(k.contains(&sub).unwrap());
    }

    #[test]
    fn triangulation_labels_extend_inclusion(seed in any::<u64>()) {
        let k = random_cubical(&mut rng(seed), 5);
        let t = triangulate_sk2(&k);
        for (a, b) in t.complex.edges() {
            prop_assert!(a < b);
            prop_assert!(t.vertex_set(a).unwrap().is_proper_subset(t.vertex_set(b).unwrap()));
        }
        let vs = k.vertices();
        for &f in &vs {
            for &g in &vs {
                if f.is_proper_subset(g) {
                    prop_assert!(t.label(f).unwrap() < t.label(g).unwrap());
                }
            }
        }
    }

    #[test]
    fn complex_json_round_trips(seed in any::<u64>()) {
        let mut r = rng(seed);
        for c in [Complex::Cubical(random_cubical(&mut r, 5)), Complex::Simplicial(random_simplicial(&mut r, 8))] {
            let text = emit_complex(&c);
            prop_assert_eq!(parse_complex(&text).unwrap(), c);
        }
    }

    #[test]
    fn category_json_round_trips(seed in any::<u64>()) {
        let l = random_simplicial(&mut rng(seed), 6);
        let c = path_category(&l);
        let json = CategoryJson {
            objects: l.vertices().iter().copied().collect(),
            homs: c.homs().map(|h| HomJson::from_hom(h, |x| x)).collect(),
        };
        let text = serde_json::to_string(&json).unwrap();
        prop_assert_eq!(serde_json::from_str::<CategoryJson<usize>>(&text).unwrap(), json);
    }

    #[test]
    fn frontier_schedules_agree(seed in any::<u64>()) {
        let k = random_cubical(&mut rng(seed), 4);
        let vs = k.vertices();
        for m in 0..k.ambient() {
            for &u in vs.iter().filter(|u| u.len() <= m) {
                for &v in vs.iter().filter(|v| v.len() > m && u.is_subset(**v)) {
                    let reps = |s| {
                        let f = frontier_hom_with(&k, m, u, v, s).unwrap();
                        f.hom.representatives().cloned().collect::<Vec<_>>()
                    };
                    let par = reps(Schedule::Parallel);
                    prop_assert_eq!(&par, &reps(Schedule::LowerFirst));
                    prop_assert_eq!(&par, &reps(Schedule::UpperFirst));
                }
            }
        }
    }

    #[test]
    fn cubical_triangulation_checks(seed in any::<u64>()) {
        let k = random_cubical(&mut rng(seed), 3);
        prop_assert!(check_skeleton(&k).unwrap().ok());
        prop_assert!(check_levels(&k).ok());
    }
}

proptest! {
    #![proptest_config(config(12))]

    #[test]
    fn simplex_homs_are_singletons(n in 0usize..=5) {
        let l = SimplicialComplex::simplex(n);
        let engine = PathEngine::new(&l);
        for (v, w) in pairs(&l) {
            prop_assert_eq!(engine.hom_set(v, w).unwrap().len(), 1);
        }
    }

    #[test]
    fn necklace_has_two_to_the_k(k in 1usize..=10) {
        let l = necklace(k);
        let engine = PathEngine::new(&l);
        prop_assert_eq!(engine.hom_set(0, 2 * k).unwrap().len(), 1 << k);
        prop_assert_eq!(Oracle::new(&l).count(0, 2 * k), 1 << k);
    }

    #[test]
    fn every_cube_vertex_is_a_removable_corner(n in 1usize..=3) {
        let k = hypercube(n);
        prop_assert_eq!(corners(&k).len(), 1 << n);
        prop_assert!(check_corners(&k).unwrap().ok());
    }
}
