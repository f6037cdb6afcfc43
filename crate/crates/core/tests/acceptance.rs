//! Acceptance suite: one line per criterion, non-zero exit if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use fourcolor::claims::{corpus, run_claim, ClaimConfig, ClaimId, Verdict};
use fourcolor::coloring::{
    check_precoloring_extension, exact_chromatic, greedy_extend, induction_color, verify_coloring,
    Chromatic, ExtensionOutcome,
};
use fourcolor::embedding::VefCounts;
use fourcolor::generators::{
    add_edge_mn, base_map_5, base_map_plus_face, build_figure1, complete_multipartite,
    flower_counterexample, letter_class_coloring, random_planar_map, EXTENSION_CLASSES,
};
use fourcolor::hyperdim::{adjacency_graph, neighborly_boxes, test_conjecture, ConjectureVerdict};
use fourcolor::planarity::{
    edge_bound_filter, euler_check, find_kuratowski, find_subdivision, is_planar, verify_theorem_3_2,
    KuratowskiKind,
};
use fourcolor::{Color, MapGraph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, Duration);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn graph(n: usize, edges: &[(usize, usize)]) -> MapGraph {
    MapGraph::from_indexed((0..n).map(|i| format!("v{i}")).collect(), edges).unwrap()
}

fn figure1_euler() -> Outcome {
    let fix = build_figure1();
    let r = euler_check(&fix.embedding);
    ensure((r.v, r.e, r.f, r.characteristic) == (8, 12, 5, 1), || format!("figure 1 gave {r:?}"))?;
    let mn = add_edge_mn(&fix);
    ensure(mn.tally == VefCounts { v: 10, e: 13, f: 5 }, || format!("tally {:?}", mn.tally))?;
    let r = mn.euler_report();
    ensure(r.characteristic == 2 && !r.consistent, || format!("MN report {r:?}"))?;
    ensure(mn.claimed_dual.is_complete() && mn.claimed_dual.len() == 5, || "claimed dual is not K5".into())?;
    Ok("(8,12,5) -> 1; with MN (10,13,5) -> 2, inconsistent".into())
}

fn theorem_by_exhaustion() -> Outcome {
    let r = verify_theorem_3_2();
    ensure(r.graphs_examined == 1024, || format!("{} graphs", r.graphs_examined))?;
    ensure(r.planar_five_chromatic == 0, || format!("{} planar 5-chromatic", r.planar_five_chromatic))?;
    ensure(r.five_chromatic == 1 && !r.k5_planar, || format!("{r:?}"))?;
    ensure(r.holds, || "report does not hold".into())?;
    Ok(format!("1024 graphs, {} planar, one 5-chromatic (K5, non-planar)", r.planar_graphs))
}

fn extension_classes() -> Outcome {
    for (class, nbrs) in EXTENSION_CLASSES.iter().enumerate() {
        let (map, col, f) = base_map_plus_face(nbrs).map_err(|e| e.to_string())?;
        let got = greedy_extend(&map, &col, f).map_err(|e| e.to_string())?;
        ensure(got == ExtensionOutcome::Colored(Color(class)), || {
            format!("neighbors {nbrs:?} gave {got:?}, want {}", Color(class))
        })?;
    }
    let (map, col, f) = base_map_plus_face(&["A", "B", "C", "D", "E"]).map_err(|e| e.to_string())?;
    match greedy_extend(&map, &col, f).map_err(|e| e.to_string())? {
        ExtensionOutcome::Blocked { witness: Some(w), .. } if w.kind == KuratowskiKind::K5 => {
            w.validate(&map)?;
            ensure(w.branch.contains(&f), || "witness misses the new face".into())?;
        }
        other => return Err(format!("all-five neighborhood gave {other:?}")),
    }
    Ok("a, b, c, d, then Blocked with a K5 witness".into())
}

fn flower_falsification() -> Outcome {
    let fl = flower_counterexample();
    let verdict = check_precoloring_extension(&fl.map, &fl.sub, &fl.precol).map_err(|e| e.to_string())?;
    ensure(!verdict.is_extendable(), || "flower precoloring extends".into())?;
    let chi = exact_chromatic(&fl.map, 4).chi;
    ensure(matches!(chi, Chromatic::Exact(k) if k <= 4), || format!("flower chi {chi:?}"))?;
    Ok(format!("NotExtendable, chi = {}", chi.value().unwrap()))
}

fn desk_scale_corpus() -> Outcome {
    let params = corpus(&ClaimConfig::with_seed(0));
    ensure(params.entries.len() == 200, || format!("{} maps", params.entries.len()))?;
    let mut max_chi = 0;
    for entry in &params.entries {
        ensure((6..=30).contains(&entry.faces), || format!("{} faces", entry.faces))?;
        let map = random_planar_map(entry.faces, entry.seed).map_err(|e| e.to_string())?;
        let res = exact_chromatic(&map, 4);
        let chi = res.chi.value().ok_or_else(|| format!("{entry:?} needs more than 4 colors"))?;
        max_chi = max_chi.max(chi);
        let col = induction_color(&map, None)
            .map_err(|e| e.to_string())?
            .ok_or_else(|| format!("induction failed on {entry:?}"))?;
        ensure(verify_coloring(&map, &col).unwrap_or(false), || format!("improper coloring on {entry:?}"))?;
    }
    Ok(format!("200/200 maps 4-colored, max chi {max_chi}"))
}

fn kuratowski_witnesses() -> Outcome {
    let limit = Duration::from_secs(1);
    let timed = |name: &str, g: &MapGraph| -> Result<Option<KuratowskiKind>, String> {
        let start = Instant::now();
        let w = find_kuratowski(g);
        if let Some(w) = &w {
            w.validate(g).map_err(|e| format!("{name}: {e}"))?;
        }
        let took = start.elapsed();
        ensure(took < limit, || format!("{name} took {took:?}"))?;
        Ok(w.map(|w| w.kind))
    };
    let k5 = graph(5, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]);
    ensure(timed("K5", &k5)? == Some(KuratowskiKind::K5), || "K5 witness".into())?;
    let k33: Vec<(usize, usize)> = (0..3).flat_map(|a| (3..6).map(move |b| (a, b))).collect();
    ensure(timed("K3,3", &graph(6, &k33))? == Some(KuratowskiKind::K33), || "K3,3 witness".into())?;
    let mut petersen_edges = Vec::new();
    for i in 0..5 {
        petersen_edges.extend([(i, (i + 1) % 5), (i, i + 5), (5 + i, 5 + (i + 2) % 5)]);
    }
    let petersen = graph(10, &petersen_edges);
    ensure(timed("Petersen", &petersen)? == Some(KuratowskiKind::K33), || "Petersen witness".into())?;
    let start = Instant::now();
    ensure(find_subdivision(&petersen, KuratowskiKind::K5).is_none(), || "Petersen K5 witness".into())?;
    ensure(start.elapsed() < limit, || "Petersen K5 search too slow".into())?;
    let k4 = graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
    ensure(timed("K4", &k4)?.is_none(), || "K4 has a witness".into())?;
    ensure(timed("base5", &base_map_5().0)?.is_none(), || "base map has a witness".into())?;
    Ok("K5, K3,3, Petersen (K33 only) witnessed; K4 and base map clean".into())
}

fn dimension_sweep() -> Outcome {
    let n1 = run_claim(ClaimId::Conjecture6_1_n1, &ClaimConfig::default()).map_err(|e| e.to_string())?;
    ensure(n1.verdict == Verdict::Verified, || format!("n=1 verdict {:?}", n1.verdict))?;
    let k6 = adjacency_graph(&neighborly_boxes(6).map_err(|e| e.to_string())?);
    ensure(k6.len() == 6 && k6.is_complete(), || "boxes(6) is not K6".into())?;
    let report = test_conjecture(3, "neighborly_boxes(6)", &k6).map_err(|e| e.to_string())?;
    ensure(report.chi == 6 && report.bound == 5, || format!("{report:?}"))?;
    ensure(report.verdict == ConjectureVerdict::Falsified, || format!("{report:?}"))?;
    let n3 = run_claim(ClaimId::Conjecture6_1_n3, &ClaimConfig::default()).map_err(|e| e.to_string())?;
    ensure(n3.verdict == Verdict::Falsified, || format!("n=3 verdict {:?}", n3.verdict))?;
    Ok("n=1 Verified; n=3 K6 with chi 6 > 5, Falsified".into())
}

fn multipartite_family() -> Outcome {
    let small = complete_multipartite(1, 1, 1, 2).map_err(|e| e.to_string())?;
    ensure(is_planar(&small), || "(1,1,1,2) non-planar".into())?;
    ensure(exact_chromatic(&small, 5).chi == Chromatic::Exact(4), || "(1,1,1,2) chi".into())?;
    let big = complete_multipartite(2, 2, 2, 2).map_err(|e| e.to_string())?;
    ensure(big.edge_count() == 24, || format!("(2,2,2,2) has {} edges", big.edge_count()))?;
    ensure(matches!(edge_bound_filter(&big), Ok(false)), || "(2,2,2,2) passes the edge bound".into())?;
    ensure(!is_planar(&big), || "(2,2,2,2) planar".into())?;
    let mut tested = 0;
    for i in 0..=12 {
        for j in 0..=12 - i {
            for k in 0..=12 - i - j {
                for l in 0..=12 - i - j - k {
                    if i + j + k + l == 0 {
                        continue;
                    }
                    let map = complete_multipartite(i, j, k, l).map_err(|e| e.to_string())?;
                    let col = letter_class_coloring(i, j, k, l).map_err(|e| e.to_string())?;
                    ensure(matches!(verify_coloring(&map, &col), Ok(true)), || format!("({i},{j},{k},{l})"))?;
                    tested += 1;
                }
            }
        }
    }
    Ok(format!("(1,1,1,2) planar chi 4; (2,2,2,2) 24 > 18 edges; {tested} letter colorings proper"))
}

fn naive_chromatic(n: usize, edges: &[(usize, usize)]) -> usize {
    let mut colors = vec![0usize; n];
    for k in 1..=n.max(1) {
        let total = k.pow(n as u32);
        for code in 0..total {
            let mut c = code;
            for slot in colors.iter_mut() {
                *slot = c % k;
                c /= k;
            }
            if edges.iter().all(|&(u, v)| colors[u] != colors[v]) {
                return k;
            }
        }
    }
    unreachable!("n colors always suffice")
}

fn oracle_equivalence() -> Outcome {
    for seed in 0..500u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(1..=8);
        let p: f64 = rng.gen();
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let got = exact_chromatic(&graph(n, &edges), n).chi;
        let want = naive_chromatic(n, &edges);
        ensure(got == Chromatic::Exact(want), || format!("seed {seed}: {got:?} vs naive {want}"))?;
    }
    Ok("500/500 random graphs agree".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("figure-1 Euler reproduction", figure1_euler, Duration::from_secs(1)),
        ("five-face exhaustion", theorem_by_exhaustion, Duration::from_secs(10)),
        ("extension classes", extension_classes, Duration::from_secs(1)),
        ("precoloring counterexample", flower_falsification, Duration::from_secs(1)),
        ("desk-scale corpus", desk_scale_corpus, Duration::from_secs(60)),
        ("Kuratowski witnesses", kuratowski_witnesses, Duration::from_secs(6)),
        ("dimension sweep", dimension_sweep, Duration::from_secs(5)),
        ("multipartite family", multipartite_family, Duration::from_secs(5)),
        ("oracle equivalence", oracle_equivalence, Duration::from_secs(30)),
    ];
    let mut failures = 0;
    for (n, (name, check, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let took = start.elapsed();
        let outcome = outcome.and_then(|msg| {
            if took < *limit {
                Ok(msg)
            } else {
                Err(format!("took {took:.2?}, limit {limit:?}"))
            }
        });
        match outcome {
            Ok(msg) => println!("PASS {} {name}: {msg} [{took:.2?}]", n + 1),
            Err(msg) => {
                failures += 1;
                println!("FAIL {} {name}: {msg} [{took:.2?}]", n + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
