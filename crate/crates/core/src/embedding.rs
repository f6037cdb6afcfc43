//! Combinatorial embeddings given by rotation systems.
//!
//! A rotation lists, for each vertex, its neighbors in cyclic order. Faces are
//! traced by following darts: the dart `u -> v` is followed by `v -> w`, where
//! `w` comes right after `u` in the rotation at `v`.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanarEmbedding {
    labels: Vec<String>,
    rotation: Vec<Vec<usize>>,
    outer_face_removed: bool,
}

/// Vertex, edge and face counts of an embedding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct VefCounts {
    pub v: usize,
    pub e: usize,
    pub f: usize,
}

impl VefCounts {
    pub fn characteristic(&self) -> i64 {
        self.v as i64 - self.e as i64 + self.f as i64
    }
}

/// `(face, u, v)`: a face crossing an edge along the dart `u -> v`.
type FaceSide = (usize, usize, usize);

impl PlanarEmbedding {
    /// Validates a rotation system given as `(vertex, neighbors in cyclic order)`.
    ///
    /// Every edge must be listed at both endpoints; loops, repeated neighbors
    /// and disconnected graphs are rejected.
    pub fn build<I, S, N>(rotation: I, outer_face_removed: bool) -> Result<Self>
    where
        I: IntoIterator<Item = (S, N)>,
        S: Into<String>,
        N: IntoIterator,
        N::Item: Into<String>,
    {
        let named: Vec<(String, Vec<String>)> = rotation
            .into_iter()
            .map(|(v, ns)| (v.into(), ns.into_iter().map(Into::into).collect()))
            .collect();
        if named.is_empty() {
            return Err(Error::EmptyEmbedding);
        }
        let mut index = HashMap::new();
        for (i, (v, _)) in named.iter().enumerate() {
            if index.insert(v.clone(), i).is_some() {
                return Err(Error::InvalidFaces(format!("vertex `{v}` listed twice")));
            }
        }
        let labels: Vec<String> = named.iter().map(|(v, _)| v.clone()).collect();
        let mut rotation = Vec::with_capacity(named.len());
        for (v, ns) in &named {
            let mut seen = BTreeSet::new();
            let mut row = Vec::with_capacity(ns.len());
            for n in ns {
                if n == v {
                    return Err(Error::Loop(v.clone()));
                }
                let &j = index
                    .get(n)
                    .ok_or_else(|| Error::DanglingEdge(v.clone(), n.clone()))?;
                if !seen.insert(j) {
                    return Err(Error::ParallelEdge(v.clone(), n.clone()));
                }
                row.push(j);
            }
            rotation.push(row);
        }
        for (u, row) in rotation.iter().enumerate() {
            for &v in row {
                if !rotation[v].contains(&u) {
                    return Err(Error::DanglingEdge(labels[u].clone(), labels[v].clone()));
                }
            }
        }
        let emb = Self { labels, rotation, outer_face_removed };
        if !emb.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(emb)
    }

    /// Derives a rotation system from the complete list of face boundary
    /// cycles, outer face included.
    ///
    /// Cycles may be given in either direction; they are oriented
    /// consistently before the rotation is read off. Each vertex's rotation
    /// starts at its alphabetically smallest neighbor and vertices are stored
    /// in alphabetical order.
    pub fn from_face_cycles(cycles: &[Vec<&str>], outer_face_removed: bool) -> Result<Self> {
        let names: BTreeSet<&str> = cycles.iter().flatten().copied().collect();
        let index: HashMap<&str, usize> = names.iter().enumerate().map(|(i, &n)| (n, i)).collect();
        let faces: Vec<Vec<usize>> = cycles
            .iter()
            .map(|c| c.iter().map(|n| index[n]).collect())
            .collect();

        // undirected edge -> list of (face, forward dart u->v as it appears)
        let mut sides: BTreeMap<(usize, usize), Vec<FaceSide>> = BTreeMap::new();
        for (fi, face) in faces.iter().enumerate() {
            if face.len() < 3 {
                return Err(Error::InvalidFaces(format!("face {fi} has fewer than 3 vertices")));
            }
            for k in 0..face.len() {
                let (u, v) = (face[k], face[(k + 1) % face.len()]);
                sides.entry((u.min(v), u.max(v))).or_default().push((fi, u, v));
            }
        }
        for (&(u, v), uses) in &sides {
            if uses.len() != 2 {
                let (a, b) = (names.iter().nth(u).unwrap(), names.iter().nth(v).unwrap());
                return Err(Error::InvalidFaces(format!(
                    "edge {a}-{b} bounds {} face sides instead of 2",
                    uses.len()
                )));
            }
        }

        // orientation[f] = true keeps the cycle as given, false reverses it
        let mut orientation: Vec<Option<bool>> = vec![None; faces.len()];
        for start in 0..faces.len() {
            if orientation[start].is_some() {
                continue;
            }
            orientation[start] = Some(true);
            let mut queue = VecDeque::from([start]);
            while let Some(f) = queue.pop_front() {
                let keep = orientation[f].unwrap();
                let face = &faces[f];
                for k in 0..face.len() {
                    let (mut u, mut v) = (face[k], face[(k + 1) % face.len()]);
                    if !keep {
                        std::mem::swap(&mut u, &mut v);
                    }
                    for &(g, a, b) in &sides[&(u.min(v), u.max(v))] {
                        if g == f {
                            continue;
                        }
                        // g must traverse this edge as v -> u
                        let want = (a, b) == (v, u);
                        match orientation[g] {
                            None => {
                                orientation[g] = Some(want);
                                queue.push_back(g);
                            }
                            Some(o) if o != want => {
                                return Err(Error::InvalidFaces("non-orientable face set".into()));
                            }
                            _ => {}
                        }
                    }
                }
            }
        }

        let mut successor: Vec<BTreeMap<usize, usize>> = vec![BTreeMap::new(); names.len()];
        for (f, face) in faces.iter().enumerate() {
            let mut cycle = face.clone();
            if !orientation[f].unwrap() {
                cycle.reverse();
            }
            let len = cycle.len();
            for k in 0..len {
                let (u, v, w) = (cycle[k], cycle[(k + 1) % len], cycle[(k + 2) % len]);
                if successor[v].insert(u, w).is_some() {
                    return Err(Error::InvalidFaces("vertex corner used twice".into()));
                }
            }
        }

        let labels: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        let mut rotation = Vec::with_capacity(labels.len());
        for (v, succ) in successor.iter().enumerate() {
            let first = *succ.keys().next().ok_or(Error::EmptyEmbedding)?;
            let mut row = vec![first];
            let mut cur = succ[&first];
            while cur != first {
                row.push(cur);
                cur = succ[&cur];
                if row.len() > succ.len() {
                    break;
                }
            }
            if row.len() != succ.len() {
                return Err(Error::InvalidFaces(format!(
                    "faces around `{}` do not form a single disc",
                    labels[v]
                )));
            }
            rotation.push(row);
        }
        let named: Vec<(String, Vec<String>)> = rotation
            .iter()
            .enumerate()
            .map(|(v, row)| (labels[v].clone(), row.iter().map(|&n| labels[n].clone()).collect()))
            .collect();
        Self::build(named, outer_face_removed)
    }

    fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.labels.len()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for &v in &self.rotation[u] {
                if !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.rotation.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn outer_face_removed(&self) -> bool {
        self.outer_face_removed
    }

    /// All face boundary walks as vertex index sequences, outer face included.
    pub fn trace_faces(&self) -> Vec<Vec<usize>> {
        if self.edge_count() == 0 {
            return vec![vec![0]];
        }
        let position: Vec<HashMap<usize, usize>> = self
            .rotation
            .iter()
            .map(|row| row.iter().enumerate().map(|(i, &n)| (n, i)).collect())
            .collect();
        let mut used: Vec<Vec<bool>> = self.rotation.iter().map(|r| vec![false; r.len()]).collect();
        let mut faces = Vec::new();
        for u in 0..self.rotation.len() {
            for i in 0..self.rotation[u].len() {
                if used[u][i] {
                    continue;
                }
                let mut walk = Vec::new();
                let (mut a, mut k) = (u, i);
                while !used[a][k] {
                    used[a][k] = true;
                    walk.push(a);
                    let b = self.rotation[a][k];
                    let row = &self.rotation[b];
                    let next = (position[b][&a] + 1) % row.len();
                    a = b;
                    k = next;
                }
                faces.push(walk);
            }
        }
        faces
    }

    /// Traced face walks as label sequences.
    pub fn face_labels(&self) -> Vec<Vec<String>> {
        self.trace_faces()
            .into_iter()
            .map(|w| w.into_iter().map(|v| self.labels[v].clone()).collect())
            .collect()
    }

    /// `(v, e, f)`, where `f` drops the outer face when it has been cut off.
    pub fn count_vef(&self) -> VefCounts {
        let traced = self.trace_faces().len();
        VefCounts {
            v: self.vertex_count(),
            e: self.edge_count(),
            f: traced - usize::from(self.outer_face_removed),
        }
    }

    pub fn to_json(&self) -> EmbeddingJson {
        EmbeddingJson {
            rotation: self
                .rotation
                .iter()
                .enumerate()
                .map(|(v, row)| {
                    (self.labels[v].clone(), row.iter().map(|&n| self.labels[n].clone()).collect())
                })
                .collect(),
            outer_face_removed: self.outer_face_removed,
        }
    }

    pub fn from_json(json: &EmbeddingJson) -> Result<Self> {
        Self::build(json.rotation.clone(), json.outer_face_removed)
    }
}

/// On-disk embedding format:
/// `{"rotation": {"A": ["B","E","D"], ...}, "outer_face_removed": true}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingJson {
    pub rotation: IndexMap<String, Vec<String>>,
    #[serde(default)]
    pub outer_face_removed: bool,
}
