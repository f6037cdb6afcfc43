//! Euler characteristic checks, planarity testing and Kuratowski witnesses.
//!
//! Planarity is decided per biconnected block with the
//! Demoucron–Malgrange–Pertuiset path-addition algorithm. Witnesses for
//! non-planar graphs are extracted by deleting every edge whose removal keeps
//! the graph non-planar; what remains is a subdivision of K5 or K3,3.

use std::collections::{BTreeMap, HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::coloring::{exact_chromatic, Chromatic};
use crate::embedding::{PlanarEmbedding, VefCounts};
use crate::error::{Error, Result};
use crate::graph::{FaceId, MapGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EulerReport {
    pub v: usize,
    pub e: usize,
    pub f: usize,
    pub characteristic: i64,
    pub expected: i64,
    pub consistent: bool,
}

impl EulerReport {
    /// Report for explicit counts; `expected` is 1 once the outer face is cut off.
    pub fn from_counts(counts: VefCounts, outer_face_removed: bool) -> Self {
        let characteristic = counts.characteristic();
        let expected = if outer_face_removed { 1 } else { 2 };
        Self {
            v: counts.v,
            e: counts.e,
            f: counts.f,
            characteristic,
            expected,
            consistent: characteristic == expected,
        }
    }
}

pub fn euler_check(emb: &PlanarEmbedding) -> EulerReport {
    EulerReport::from_counts(emb.count_vef(), emb.outer_face_removed())
}

/// `e <= 3v - 6`. A `false` answer certifies non-planarity.
pub fn edge_bound_filter(g: &MapGraph) -> Result<bool> {
    let v = g.len();
    if v < 3 {
        return Err(Error::TooFewVertices(v));
    }
    Ok(g.edge_count() <= 3 * v - 6)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum KuratowskiKind {
    K5,
    K33,
}

impl fmt::Display for KuratowskiKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::K5 => f.write_str("K5"),
            Self::K33 => f.write_str("K33"),
        }
    }
}

/// Branch vertices plus internally disjoint paths forming a K5 or K3,3
/// subdivision. For K3,3 the first three branch vertices form one side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KuratowskiWitness {
    pub kind: KuratowskiKind,
    pub branch: Vec<FaceId>,
    pub paths: Vec<Vec<FaceId>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessJson {
    pub kind: KuratowskiKind,
    pub branch: Vec<String>,
    pub paths: Vec<Vec<String>>,
}

impl KuratowskiWitness {
    fn required_pairs(&self) -> Vec<(FaceId, FaceId)> {
        let b = &self.branch;
        let mut pairs = Vec::new();
        match self.kind {
            KuratowskiKind::K5 => {
                for i in 0..5 {
                    for j in i + 1..5 {
                        pairs.push((b[i], b[j]));
                    }
                }
            }
            KuratowskiKind::K33 => {
                for i in 0..3 {
                    for j in 3..6 {
                        pairs.push((b[i], b[j]));
                    }
                }
            }
        }
        pairs
    }

    /// Checks the witness against `host`. Returns the first violation found.
    pub fn validate(&self, host: &MapGraph) -> std::result::Result<(), String> {
        let need = match self.kind {
            KuratowskiKind::K5 => 5,
            KuratowskiKind::K33 => 6,
        };
        if self.branch.len() != need {
            return Err(format!("{} needs {need} branch vertices", self.kind));
        }
        if self.branch.iter().any(|f| f.0 >= host.len()) {
            return Err("branch vertex outside host".into());
        }
        let branch: HashSet<FaceId> = self.branch.iter().copied().collect();
        if branch.len() != need {
            return Err("repeated branch vertex".into());
        }
        let mut wanted: HashSet<(FaceId, FaceId)> = self
            .required_pairs()
            .into_iter()
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        if self.paths.len() != wanted.len() {
            return Err(format!("expected {} paths, found {}", wanted.len(), self.paths.len()));
        }
        let mut interior = HashSet::new();
        for path in &self.paths {
            if path.len() < 2 {
                return Err("path shorter than one edge".into());
            }
            let (s, t) = (path[0], path[path.len() - 1]);
            if !wanted.remove(&(s.min(t), s.max(t))) {
                return Err(format!("path {}..{} does not join a required branch pair", s.0, t.0));
            }
            for w in path.windows(2) {
                if w[0].0 >= host.len() || w[1].0 >= host.len() || !host.has_edge(w[0], w[1]) {
                    return Err(format!("edge {}-{} missing from host", w[0].0, w[1].0));
                }
            }
            for &x in &path[1..path.len() - 1] {
                if branch.contains(&x) {
                    return Err("path passes through a branch vertex".into());
                }
                if !interior.insert(x) {
                    return Err("paths are not internally disjoint".into());
                }
            }
        }
        Ok(())
    }

    pub fn to_json(&self, map: &MapGraph) -> WitnessJson {
        let name = |f: &FaceId| map.label(*f).to_string();
        WitnessJson {
            kind: self.kind,
            branch: self.branch.iter().map(name).collect(),
            paths: self.paths.iter().map(|p| p.iter().map(name).collect()).collect(),
        }
    }

    pub fn from_json(map: &MapGraph, json: &WitnessJson) -> Result<Self> {
        let ids = |names: &[String]| names.iter().map(|n| map.id(n)).collect::<Result<Vec<_>>>();
        Ok(Self {
            kind: json.kind,
            branch: ids(&json.branch)?,
            paths: json.paths.iter().map(|p| ids(p)).collect::<Result<_>>()?,
        })
    }
}

/// True iff `g` has a planar embedding.
pub fn is_planar(g: &MapGraph) -> bool {
    let edges: Vec<(usize, usize)> = g.edges().into_iter().map(|(a, b)| (a.0, b.0)).collect();
    planar_edges(g.len(), &edges)
}

/// A witness exactly when `g` is non-planar. The witness is validated
/// against `g` before it is returned.
pub fn find_kuratowski(g: &MapGraph) -> Option<KuratowskiWitness> {
    let n = g.len();
    let mut edges: Vec<(usize, usize)> = g.edges().into_iter().map(|(a, b)| (a.0, b.0)).collect();
    if planar_edges(n, &edges) {
        return None;
    }
    let mut i = 0;
    while i < edges.len() {
        let removed = edges.remove(i);
        if planar_edges(n, &edges) {
            edges.insert(i, removed);
            i += 1;
        }
    }
    let witness = witness_from_minimal(n, &edges)
        .expect("edge-minimal non-planar graph is a Kuratowski subdivision");
    debug_assert!(witness.validate(g).is_ok());
    witness.validate(g).ok().map(|_| witness)
}

/// Reads branch vertices and paths off an edge-minimal non-planar graph.
fn witness_from_minimal(n: usize, edges: &[(usize, usize)]) -> Option<KuratowskiWitness> {
    let adj = adjacency(n, edges);
    let branch: Vec<usize> = (0..n).filter(|&v| adj[v].len() >= 3).collect();
    let kind = match (branch.len(), adj[*branch.first()?].len()) {
        (5, 4) if branch.iter().all(|&v| adj[v].len() == 4) => KuratowskiKind::K5,
        (6, 3) if branch.iter().all(|&v| adj[v].len() == 3) => KuratowskiKind::K33,
        _ => return None,
    };
    let is_branch: Vec<bool> = (0..n).map(|v| adj[v].len() >= 3).collect();
    let mut paths = Vec::new();
    for &b in &branch {
        for &first in &adj[b] {
            let mut path = vec![b, first];
            let (mut prev, mut cur) = (b, first);
            while !is_branch[cur] {
                let next = *adj[cur].iter().find(|&&x| x != prev)?;
                path.push(next);
                prev = cur;
                cur = next;
            }
            if b < cur {
                paths.push(path);
            }
        }
    }
    let mut branch_order = branch.clone();
    if kind == KuratowskiKind::K33 {
        // side of each branch vertex: two-color the branch-level graph
        let mut side: BTreeMap<usize, bool> = BTreeMap::new();
        side.insert(branch[0], false);
        let mut queue = VecDeque::from([branch[0]]);
        while let Some(b) = queue.pop_front() {
            for p in &paths {
                let (s, t) = (p[0], p[p.len() - 1]);
                let other = if s == b { t } else if t == b { s } else { continue };
                if !side.contains_key(&other) {
                    side.insert(other, !side[&b]);
                    queue.push_back(other);
                }
            }
        }
        branch_order.sort_by_key(|b| (side[b], *b));
    }
    Some(KuratowskiWitness {
        kind,
        branch: branch_order.into_iter().map(FaceId).collect(),
        paths: paths.into_iter().map(|p| p.into_iter().map(FaceId).collect()).collect(),
    })
}

/// Exhaustive search for a subdivision of one specific Kuratowski graph.
///
/// Branch candidates are tried by descending degree, paths shortest first
/// with backtracking. Exponential; intended for graphs of a dozen vertices.
pub fn find_subdivision(g: &MapGraph, kind: KuratowskiKind) -> Option<KuratowskiWitness> {
    let (count, min_degree) = match kind {
        KuratowskiKind::K5 => (5, 4),
        KuratowskiKind::K33 => (6, 3),
    };
    let mut candidates: Vec<FaceId> = g.faces().filter(|&f| g.degree(f) >= min_degree).collect();
    if candidates.len() < count {
        return None;
    }
    candidates.sort_by_key(|&f| (std::cmp::Reverse(g.degree(f)), f));
    let mut found = None;
    for_each_combination(candidates.len(), count, &mut |pick| {
        let chosen: Vec<FaceId> = pick.iter().map(|&i| candidates[i]).collect();
        let layouts: Vec<Vec<FaceId>> = match kind {
            KuratowskiKind::K5 => vec![chosen.clone()],
            KuratowskiKind::K33 => {
                let mut out = Vec::new();
                for a in 1..6 {
                    for b in a + 1..6 {
                        let left = [chosen[0], chosen[a], chosen[b]];
                        let right: Vec<FaceId> = (1..6)
                            .filter(|&i| i != a && i != b)
                            .map(|i| chosen[i])
                            .collect();
                        out.push(left.iter().copied().chain(right).collect());
                    }
                }
                out
            }
        };
        for branch in layouts {
            let mut witness = KuratowskiWitness { kind, branch, paths: Vec::new() };
            let pairs = witness.required_pairs();
            let mut used = vec![false; g.len()];
            for b in &witness.branch {
                used[b.0] = true;
            }
            if route(g, &pairs, &mut used, &mut witness.paths) {
                found = Some(witness);
                return true;
            }
        }
        false
    });
    found
}

fn route(g: &MapGraph, pairs: &[(FaceId, FaceId)], used: &mut [bool], paths: &mut Vec<Vec<FaceId>>) -> bool {
    let Some(&(s, t)) = pairs.first() else {
        return true;
    };
    let free = used.iter().filter(|&&u| !u).count();
    for internal in 0..=free {
        let mut path = vec![s];
        if route_with_length(g, t, internal, &mut path, used, &pairs[1..], paths) {
            return true;
        }
    }
    false
}

/// Extends `path` by exactly `remaining` unused internal vertices, then `t`.
fn route_with_length(
    g: &MapGraph,
    t: FaceId,
    remaining: usize,
    path: &mut Vec<FaceId>,
    used: &mut [bool],
    rest: &[(FaceId, FaceId)],
    paths: &mut Vec<Vec<FaceId>>,
) -> bool {
    let cur = *path.last().unwrap();
    if remaining == 0 {
        if !g.has_edge(cur, t) {
            return false;
        }
        path.push(t);
        paths.push(path.clone());
        if route(g, rest, used, paths) {
            return true;
        }
        paths.pop();
        path.pop();
        return false;
    }
    for &next in g.neighbors(cur) {
        if used[next.0] {
            continue;
        }
        used[next.0] = true;
        path.push(next);
        if route_with_length(g, t, remaining - 1, path, used, rest, paths) {
            return true;
        }
        path.pop();
        used[next.0] = false;
    }
    false
}

/// Calls `visit` with each k-subset of 0..n in lexicographic order until it
/// returns true.
fn for_each_combination(n: usize, k: usize, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    fn go(start: usize, n: usize, k: usize, pick: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if pick.len() == k {
            return visit(pick);
        }
        for i in start..n {
            if n - i < k - pick.len() {
                break;
            }
            pick.push(i);
            if go(i + 1, n, k, pick, visit) {
                return true;
            }
            pick.pop();
        }
        false
    }
    go(0, n, k, &mut Vec::with_capacity(k), visit)
}

fn adjacency(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    for row in &mut adj {
        row.sort_unstable();
    }
    adj
}

fn planar_edges(n: usize, edges: &[(usize, usize)]) -> bool {
    if n >= 3 && edges.len() > 3 * n - 6 {
        return false;
    }
    let adj = adjacency(n, edges);
    biconnected_blocks(&adj).into_iter().all(|block| block_is_planar(&block))
}

/// Edge sets of the biconnected components.
fn biconnected_blocks(adj: &[Vec<usize>]) -> Vec<Vec<(usize, usize)>> {
    let n = adj.len();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut blocks = Vec::new();

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        // frames: (vertex, parent, next neighbor position)
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        while let Some(&mut (u, parent, ref mut pos)) = stack.last_mut() {
            if *pos < adj[u].len() {
                let v = adj[u][*pos];
                *pos += 1;
                if disc[v] == usize::MAX {
                    edge_stack.push((u, v));
                    disc[v] = time;
                    low[v] = time;
                    time += 1;
                    stack.push((v, u, 0));
                } else if v != parent && disc[v] < disc[u] {
                    edge_stack.push((u, v));
                    low[u] = low[u].min(disc[v]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[u]);
                    if low[u] >= disc[p] {
                        let mut block = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            block.push(e);
                            if e == (p, u) {
                                break;
                            }
                        }
                        blocks.push(block);
                    }
                }
            }
        }
    }
    blocks
}

/// Demoucron–Malgrange–Pertuiset on one biconnected block.
fn block_is_planar(block: &[(usize, usize)]) -> bool {
    let mut ids: BTreeMap<usize, usize> = BTreeMap::new();
    for &(u, v) in block {
        let next = ids.len();
        ids.entry(u).or_insert(next);
        let next = ids.len();
        ids.entry(v).or_insert(next);
    }
    let n = ids.len();
    if n <= 4 {
        return true;
    }
    if block.len() > 3 * n - 6 {
        return false;
    }
    let edges: Vec<(usize, usize)> = block.iter().map(|(u, v)| (ids[u], ids[v])).collect();
    let adj = adjacency(n, &edges);

    let cycle = find_cycle(&adj);
    let mut in_h = vec![false; n];
    let mut h_edge = vec![false; n * n];
    for (i, &v) in cycle.iter().enumerate() {
        in_h[v] = true;
        let w = cycle[(i + 1) % cycle.len()];
        h_edge[v * n + w] = true;
        h_edge[w * n + v] = true;
    }
    let mut faces: Vec<Vec<usize>> = vec![cycle.clone(), cycle];

    loop {
        let fragments = fragments(&adj, &in_h, &h_edge);
        if fragments.is_empty() {
            return true;
        }
        let membership: Vec<Vec<bool>> = faces
            .iter()
            .map(|f| {
                let mut m = vec![false; n];
                for &v in f {
                    m[v] = true;
                }
                m
            })
            .collect();
        let mut choice: Option<(usize, usize)> = None;
        for (fi, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = (0..faces.len())
                .filter(|&k| frag.attachments.iter().all(|&a| membership[k][a]))
                .collect();
            match admissible.len() {
                0 => return false,
                1 => {
                    choice = Some((fi, admissible[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((fi, admissible[0]));
                    }
                }
            }
        }
        let (fi, face_index) = choice.expect("at least one fragment");
        let path = fragment_path(&adj, &in_h, &fragments[fi]);

        for w in path.windows(2) {
            h_edge[w[0] * n + w[1]] = true;
            h_edge[w[1] * n + w[0]] = true;
        }
        for &v in &path {
            in_h[v] = true;
        }
        let face = faces.swap_remove(face_index);
        let (a, b) = (path[0], path[path.len() - 1]);
        let ia = face.iter().position(|&x| x == a).unwrap();
        let ib = face.iter().position(|&x| x == b).unwrap();
        let len = face.len();
        let arc = |from: usize, to: usize| {
            let mut out = vec![face[from]];
            let mut k = from;
            while k != to {
                k = (k + 1) % len;
                out.push(face[k]);
            }
            out
        };
        let interior = &path[1..path.len() - 1];
        let mut first = arc(ia, ib);
        first.extend(interior.iter().rev());
        let mut second = arc(ib, ia);
        second.extend(interior.iter());
        faces.push(first);
        faces.push(second);
    }
}

struct Fragment {
    attachments: Vec<usize>,
    /// Non-embedded vertices of the fragment; empty for a chord.
    inner: Vec<usize>,
}

fn fragments(adj: &[Vec<usize>], in_h: &[bool], h_edge: &[bool]) -> Vec<Fragment> {
    let n = adj.len();
    let mut out = Vec::new();
    for u in 0..n {
        if !in_h[u] {
            continue;
        }
        for &v in &adj[u] {
            if u < v && in_h[v] && !h_edge[u * n + v] {
                out.push(Fragment { attachments: vec![u, v], inner: Vec::new() });
            }
        }
    }
    let mut seen = vec![false; n];
    for s in 0..n {
        if in_h[s] || seen[s] {
            continue;
        }
        seen[s] = true;
        let mut inner = vec![s];
        let mut attach = Vec::new();
        let mut attached = vec![false; n];
        let mut k = 0;
        while k < inner.len() {
            let u = inner[k];
            k += 1;
            for &v in &adj[u] {
                if in_h[v] {
                    if !attached[v] {
                        attached[v] = true;
                        attach.push(v);
                    }
                } else if !seen[v] {
                    seen[v] = true;
                    inner.push(v);
                }
            }
        }
        attach.sort_unstable();
        out.push(Fragment { attachments: attach, inner });
    }
    out
}

/// A path through the fragment joining two distinct attachment vertices.
fn fragment_path(adj: &[Vec<usize>], in_h: &[bool], frag: &Fragment) -> Vec<usize> {
    if frag.inner.is_empty() {
        return frag.attachments.clone();
    }
    let n = adj.len();
    let mut in_frag = vec![false; n];
    for &v in &frag.inner {
        in_frag[v] = true;
    }
    let start = frag.attachments[0];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for &v in &adj[start] {
        if in_frag[v] && parent[v] == usize::MAX {
            parent[v] = start;
            queue.push_back(v);
        }
    }
    while let Some(u) = queue.pop_front() {
        for &v in &adj[u] {
            if in_h[v] && v != start {
                let mut path = vec![v, u];
                let mut cur = u;
                while parent[cur] != start {
                    cur = parent[cur];
                    path.push(cur);
                }
                path.push(start);
                path.reverse();
                return path;
            }
            if in_frag[v] && parent[v] == usize::MAX {
                parent[v] = u;
                queue.push_back(v);
            }
        }
    }
    unreachable!("fragment of a biconnected block has two attachments")
}

/// Any cycle of a graph with minimum degree two (true of every block).
fn find_cycle(adj: &[Vec<usize>]) -> Vec<usize> {
    let n = adj.len();
    let mut depth = vec![usize::MAX; n];
    let mut stack: Vec<usize> = Vec::new();
    let mut frames: Vec<(usize, usize, usize)> = vec![(0, usize::MAX, 0)];
    depth[0] = 0;
    stack.push(0);
    while let Some(&mut (u, parent, ref mut pos)) = frames.last_mut() {
        if *pos < adj[u].len() {
            let v = adj[u][*pos];
            *pos += 1;
            if v == parent {
                continue;
            }
            if depth[v] != usize::MAX {
                return stack[depth[v]..].to_vec();
            }
            depth[v] = stack.len();
            stack.push(v);
            frames.push((v, u, 0));
        } else {
            frames.pop();
            stack.pop();
        }
    }
    unreachable!("block contains a cycle")
}

/// Outcome of the exhaustive check over every labelled graph on five faces.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem32Report {
    pub graphs_examined: usize,
    /// Number of labelled graphs with each chromatic number.
    pub chromatic_counts: BTreeMap<usize, usize>,
    pub planar_graphs: usize,
    pub five_chromatic: usize,
    pub planar_five_chromatic: usize,
    pub max_planar_chromatic: usize,
    pub k5_planar: bool,
    pub holds: bool,
}

/// Enumerates all 2^10 labelled simple graphs on faces A..E and checks that
/// no planar one needs five colors.
pub fn verify_theorem_3_2() -> Theorem32Report {
    let faces = ["A", "B", "C", "D", "E"];
    let mut slots = Vec::new();
    for i in 0..5 {
        for j in i + 1..5 {
            slots.push((i, j));
        }
    }
    let labels: Vec<String> = faces.iter().map(|s| s.to_string()).collect();
    let mut report = Theorem32Report {
        graphs_examined: 0,
        chromatic_counts: BTreeMap::new(),
        planar_graphs: 0,
        five_chromatic: 0,
        planar_five_chromatic: 0,
        max_planar_chromatic: 0,
        k5_planar: true,
        holds: false,
    };
    for mask in 0u32..(1 << slots.len()) {
        let edges: Vec<(usize, usize)> = slots
            .iter()
            .enumerate()
            .filter(|(bit, _)| mask & (1 << bit) != 0)
            .map(|(_, &e)| e)
            .collect();
        let g = MapGraph::from_indexed(labels.clone(), &edges).expect("valid labelled graph");
        let chi = match exact_chromatic(&g, 5).chi {
            Chromatic::Exact(k) => k,
            Chromatic::ExceedsMax => unreachable!("five faces are always 5-colorable"),
        };
        let planar = is_planar(&g);
        report.graphs_examined += 1;
        *report.chromatic_counts.entry(chi).or_default() += 1;
        if planar {
            report.planar_graphs += 1;
            report.max_planar_chromatic = report.max_planar_chromatic.max(chi);
        }
        if chi == 5 {
            report.five_chromatic += 1;
            if planar {
                report.planar_five_chromatic += 1;
            }
            if g.is_complete() {
                report.k5_planar = planar;
            }
        }
    }
    report.holds = report.planar_five_chromatic == 0 && report.five_chromatic == 1 && !report.k5_planar;
    report
}
