//! Cross-checks against brute-force oracles that share no code with the
//! implementations they check.

use fourcolor::coloring::{exact_chromatic, Chromatic};
use fourcolor::generators::flower_counterexample;
use fourcolor::hyperdim::{adjacency_graph, neighborly_boxes};
use fourcolor::planarity::{find_kuratowski, is_planar, verify_theorem_3_2, KuratowskiKind};
use fourcolor::MapGraph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn graph(n: usize, edges: &[(usize, usize)]) -> MapGraph {
    MapGraph::from_indexed((0..n).map(|i| format!("v{i}")).collect(), edges).unwrap()
}

fn matrix(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<bool>> {
    let mut m = vec![vec![false; n]; n];
    for &(u, v) in edges {
        m[u][v] = true;
        m[v][u] = true;
    }
    m
}

/// Smallest k admitting a proper coloring, by trying all k^n assignments.
fn naive_chromatic(n: usize, edges: &[(usize, usize)]) -> usize {
    for k in 1..=n.max(1) {
        let total = (k as u64).pow(n as u32);
        for code in 0..total {
            let mut c = code;
            let colors: Vec<u64> = (0..n)
                .map(|_| {
                    let d = c % k as u64;
                    c /= k as u64;
                    d
                })
                .collect();
            if edges.iter().all(|&(u, v)| colors[u] != colors[v]) {
                return k;
            }
        }
    }
    unreachable!()
}

/// Whether the graph on at most 7 vertices contains a K5 or K3,3
/// subdivision, found by assigning every spare vertex to a branch pair.
fn brute_force_nonplanar(n: usize, edges: &[(usize, usize)]) -> bool {
    assert!(n <= 7);
    let adj = matrix(n, edges);
    let subsets = |k: usize| -> Vec<Vec<usize>> {
        (0u32..1 << n)
            .filter(|m| m.count_ones() as usize == k)
            .map(|m| (0..n).filter(|&i| m & (1 << i) != 0).collect())
            .collect()
    };
    let realizes = |pairs: &[(usize, usize)], spare: &[usize]| -> bool {
        // each spare vertex goes to one pair (or nowhere); a pair with
        // several spares tries them in every order
        let choices = pairs.len() + 1;
        let total = (choices as u32).pow(spare.len() as u32);
        for code in 0..total {
            let mut c = code;
            let mut on_pair: Vec<Vec<usize>> = vec![Vec::new(); pairs.len()];
            for &s in spare {
                let slot = (c % choices as u32) as usize;
                c /= choices as u32;
                if slot < pairs.len() {
                    on_pair[slot].push(s);
                }
            }
            let ok = pairs.iter().zip(&on_pair).all(|(&(a, b), mids)| {
                let mut perms = vec![mids.clone()];
                if mids.len() == 2 {
                    perms.push(vec![mids[1], mids[0]]);
                }
                perms.into_iter().any(|mids| {
                    let mut walk = vec![a];
                    walk.extend(mids);
                    walk.push(b);
                    walk.windows(2).all(|w| adj[w[0]][w[1]])
                })
            });
            if ok {
                return true;
            }
        }
        false
    };
    if n >= 5 {
        for branch in subsets(5) {
            let spare: Vec<usize> = (0..n).filter(|v| !branch.contains(v)).collect();
            let mut pairs = Vec::new();
            for i in 0..5 {
                for j in i + 1..5 {
                    pairs.push((branch[i], branch[j]));
                }
            }
            if realizes(&pairs, &spare) {
                return true;
            }
        }
    }
    if n >= 6 {
        for branch in subsets(6) {
            let spare: Vec<usize> = (0..n).filter(|v| !branch.contains(v)).collect();
            for a in 1..6 {
                for b in a + 1..6 {
                    let left = [branch[0], branch[a], branch[b]];
                    let right: Vec<usize> =
                        (1..6).filter(|&i| i != a && i != b).map(|i| branch[i]).collect();
                    let pairs: Vec<(usize, usize)> =
                        left.iter().flat_map(|&l| right.iter().map(move |&r| (l, r))).collect();
                    if realizes(&pairs, &spare) {
                        return true;
                    }
                }
            }
        }
    }
    false
}

fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            out.push((i, j));
        }
    }
    out
}

fn check_planarity_against_oracle(n: usize, edges: &[(usize, usize)]) {
    let g = graph(n, edges);
    let oracle_nonplanar = brute_force_nonplanar(n, edges);
    assert_eq!(is_planar(&g), !oracle_nonplanar, "n={n} edges={edges:?}");
    match find_kuratowski(&g) {
        Some(w) => {
            assert!(oracle_nonplanar);
            w.validate(&g).unwrap();
        }
        None => assert!(!oracle_nonplanar),
    }
}

#[test]
fn planarity_matches_subdivision_oracle_on_six_vertices() {
    let slots = all_pairs(6);
    // fewer than 9 edges cannot hold a K5 or K3,3 subdivision
    for mask in 0u32..1 << slots.len() {
        if mask.count_ones() < 9 {
            continue;
        }
        let edges: Vec<(usize, usize)> =
            (0..slots.len()).filter(|b| mask & (1 << b) != 0).map(|b| slots[b]).collect();
        check_planarity_against_oracle(6, &edges);
    }
}

#[test]
fn planarity_matches_subdivision_oracle_on_random_seven_vertex_graphs() {
    let slots = all_pairs(7);
    let mut rng = ChaCha8Rng::seed_from_u64(0x7e57);
    for _ in 0..1500 {
        let p: f64 = rng.gen_range(0.35..0.85);
        let edges: Vec<(usize, usize)> = slots.iter().copied().filter(|_| rng.gen_bool(p)).collect();
        check_planarity_against_oracle(7, &edges);
    }
}

#[test]
fn exact_chromatic_matches_naive_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..150 {
        let n = rng.gen_range(1..=7);
        let p: f64 = rng.gen();
        let edges: Vec<(usize, usize)> = all_pairs(n).into_iter().filter(|_| rng.gen_bool(p)).collect();
        let g = graph(n, &edges);
        let result = exact_chromatic(&g, n);
        assert_eq!(result.chi, Chromatic::Exact(naive_chromatic(n, &edges)), "{edges:?}");
    }
}

#[test]
fn octahedron_is_three_chromatic() {
    // K_{2,2,2}: the three antipodal pairs are the only non-edges
    let edges: Vec<(usize, usize)> =
        all_pairs(6).into_iter().filter(|&(u, v)| !(u % 3 == v % 3)).collect();
    assert_eq!(edges.len(), 12);
    assert_eq!(naive_chromatic(6, &edges), 3);
    assert_eq!(exact_chromatic(&graph(6, &edges), 4).chi, Chromatic::Exact(3));
}

#[test]
fn five_face_census_matches_enumeration() {
    let slots = all_pairs(5);
    let mut counts = std::collections::BTreeMap::new();
    for mask in 0u32..1 << slots.len() {
        let edges: Vec<(usize, usize)> =
            (0..slots.len()).filter(|b| mask & (1 << b) != 0).map(|b| slots[b]).collect();
        *counts.entry(naive_chromatic(5, &edges)).or_insert(0usize) += 1;
        assert_eq!(brute_force_nonplanar(5, &edges), edges.len() == 10);
    }
    let report = verify_theorem_3_2();
    assert_eq!(report.chromatic_counts, counts);
    assert_eq!(counts[&5], 1);
    assert_eq!(report.planar_graphs, 1023);
}

#[test]
fn flower_center_has_no_free_color() {
    let fl = flower_counterexample();
    let center = fl.map.id("C").unwrap();
    for c in 0..4 {
        let clash = fl
            .map
            .neighbors(center)
            .iter()
            .any(|&g| fl.precol.get(g).map(|x| x.0) == Some(c));
        assert!(clash, "color {c} is free for the center");
    }
    let edges: Vec<(usize, usize)> = fl.map.edges().into_iter().map(|(a, b)| (a.0, b.0)).collect();
    assert!(!brute_force_nonplanar(7, &edges));
    assert!(naive_chromatic(7, &edges) <= 4);
}

#[test]
fn neighborly_boxes_by_pairwise_voxel_scan() {
    for m in 2..=8 {
        let cx = neighborly_boxes(m).unwrap();
        let regions: Vec<&Vec<[i64; 3]>> = cx.regions().values().collect();
        for a in 0..m {
            for b in a + 1..m {
                let touching = regions[a].iter().any(|p| {
                    regions[b].iter().any(|q| {
                        (0..3).map(|k| (p[k] - q[k]).abs()).sum::<i64>() == 1
                    })
                });
                assert!(touching, "m={m}: regions {a} and {b} share no voxel face");
            }
        }
        assert!(adjacency_graph(&cx).is_complete());
    }
}

#[test]
fn petersen_has_no_k5_subdivision() {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    let g = graph(10, &edges);
    // five branch vertices of a K5 subdivision need degree at least 4
    assert!(g.faces().all(|f| g.degree(f) == 3));
    let w = find_kuratowski(&g).unwrap();
    assert_eq!(w.kind, KuratowskiKind::K33);
}
