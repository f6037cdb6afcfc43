//! Maps stored as dual graphs: one node per face, one link per shared edge.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Dense index of a face inside one [`MapGraph`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FaceId(pub usize);

impl FaceId {
    pub fn index(self) -> usize {
        self.0
    }
}

/// A palette entry. Indices 0..4 display as `a`..`d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Color(pub usize);

impl Color {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 < 26 {
            write!(f, "{}", (b'a' + self.0 as u8) as char)
        } else {
            write!(f, "c{}", self.0)
        }
    }
}

/// Simple undirected graph over labelled faces.
///
/// Adjacency is symmetric and irreflexive; neighbor lists are kept sorted so
/// that every traversal is deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapGraph {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    neighbors: Vec<Vec<FaceId>>,
}

impl MapGraph {
    /// Builds a map from face labels and unordered adjacent pairs.
    ///
    /// Pair order and duplicate pairs are normalized away.
    pub fn build<S, P, A, B>(faces: impl IntoIterator<Item = S>, pairs: P) -> Result<Self>
    where
        S: Into<String>,
        P: IntoIterator<Item = (A, B)>,
        A: AsRef<str>,
        B: AsRef<str>,
    {
        let labels: Vec<String> = faces.into_iter().map(Into::into).collect();
        let mut graph = Self::with_labels(labels)?;
        for (a, b) in pairs {
            let f = graph.id(a.as_ref())?;
            let g = graph.id(b.as_ref())?;
            if f == g {
                return Err(Error::SelfPair(a.as_ref().to_string()));
            }
            graph.link(f, g);
        }
        Ok(graph)
    }

    /// Builds a map from labels and index pairs. Used by generators, which
    /// already work with dense indices.
    pub fn from_indexed(labels: Vec<String>, edges: &[(usize, usize)]) -> Result<Self> {
        let mut graph = Self::with_labels(labels)?;
        for &(u, v) in edges {
            if u >= graph.len() {
                return Err(Error::FaceOutOfRange(u));
            }
            if v >= graph.len() {
                return Err(Error::FaceOutOfRange(v));
            }
            if u == v {
                return Err(Error::SelfPair(graph.labels[u].clone()));
            }
            graph.link(FaceId(u), FaceId(v));
        }
        Ok(graph)
    }

    fn with_labels(labels: Vec<String>) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::EmptyMap);
        }
        let mut index = HashMap::with_capacity(labels.len());
        for (i, label) in labels.iter().enumerate() {
            if index.insert(label.clone(), i).is_some() {
                return Err(Error::DuplicateFace(label.clone()));
            }
        }
        let neighbors = vec![Vec::new(); labels.len()];
        Ok(Self { labels, index, neighbors })
    }

    fn link(&mut self, f: FaceId, g: FaceId) {
        if let Err(pos) = self.neighbors[f.0].binary_search(&g) {
            self.neighbors[f.0].insert(pos, g);
        }
        if let Err(pos) = self.neighbors[g.0].binary_search(&f) {
            self.neighbors[g.0].insert(pos, f);
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    /// Always false; a map has at least one face.
    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn faces(&self) -> impl Iterator<Item = FaceId> + '_ {
        (0..self.labels.len()).map(FaceId)
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, f: FaceId) -> &str {
        &self.labels[f.0]
    }

    pub fn id(&self, label: &str) -> Result<FaceId> {
        self.index
            .get(label)
            .map(|&i| FaceId(i))
            .ok_or_else(|| Error::UnknownFace(label.to_string()))
    }

    fn check(&self, f: FaceId) -> Result<()> {
        if f.0 < self.len() {
            Ok(())
        } else {
            Err(Error::FaceOutOfRange(f.0))
        }
    }

    /// `f ↔ g`: the two faces share a boundary edge.
    pub fn adjacent(&self, f: FaceId, g: FaceId) -> Result<bool> {
        self.check(f)?;
        self.check(g)?;
        Ok(self.has_edge(f, g))
    }

    pub fn adjacent_labels(&self, f: &str, g: &str) -> Result<bool> {
        Ok(self.has_edge(self.id(f)?, self.id(g)?))
    }

    /// Unchecked adjacency test for in-range ids.
    pub fn has_edge(&self, f: FaceId, g: FaceId) -> bool {
        self.neighbors[f.0].binary_search(&g).is_ok()
    }

    pub fn neighbors(&self, f: FaceId) -> &[FaceId] {
        &self.neighbors[f.0]
    }

    pub fn degree(&self, f: FaceId) -> usize {
        self.neighbors[f.0].len()
    }

    pub fn edge_count(&self) -> usize {
        self.neighbors.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges as `(f, g)` with `f < g`, in lexicographic index order.
    pub fn edges(&self) -> Vec<(FaceId, FaceId)> {
        self.faces()
            .flat_map(|f| {
                self.neighbors[f.0]
                    .iter()
                    .filter(move |&&g| g > f)
                    .map(move |&g| (f, g))
            })
            .collect()
    }

    pub fn pairs(&self) -> Vec<(String, String)> {
        self.edges()
            .into_iter()
            .map(|(f, g)| (self.labels[f.0].clone(), self.labels[g.0].clone()))
            .collect()
    }

    /// Subgraph induced on `keep`, preserving the order given.
    pub fn induced(&self, keep: &[FaceId]) -> Result<Self> {
        let mut position = vec![usize::MAX; self.len()];
        for (i, &f) in keep.iter().enumerate() {
            self.check(f)?;
            position[f.0] = i;
        }
        let labels = keep.iter().map(|&f| self.labels[f.0].clone()).collect();
        let edges: Vec<(usize, usize)> = self
            .edges()
            .into_iter()
            .filter(|(f, g)| position[f.0] != usize::MAX && position[g.0] != usize::MAX)
            .map(|(f, g)| (position[f.0], position[g.0]))
            .collect();
        Self::from_indexed(labels, &edges)
    }

    pub fn without_face(&self, removed: FaceId) -> Result<Self> {
        let keep: Vec<FaceId> = self.faces().filter(|&f| f != removed).collect();
        self.induced(&keep)
    }

    /// Adds one face adjacent to the listed existing faces. The new face gets
    /// the next dense index.
    pub fn with_face(&self, label: &str, adjacent_to: &[&str]) -> Result<Self> {
        let mut labels = self.labels.clone();
        labels.push(label.to_string());
        let mut pairs = self.pairs();
        for &other in adjacent_to {
            pairs.push((label.to_string(), other.to_string()));
        }
        Self::build(labels, pairs)
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.len()];
        let mut queue = VecDeque::from([FaceId(0)]);
        seen[0] = true;
        let mut count = 1;
        while let Some(f) = queue.pop_front() {
            for &g in &self.neighbors[f.0] {
                if !seen[g.0] {
                    seen[g.0] = true;
                    count += 1;
                    queue.push_back(g);
                }
            }
        }
        count == self.len()
    }

    /// Whether every two faces are adjacent.
    pub fn is_complete(&self) -> bool {
        self.neighbors.iter().all(|n| n.len() + 1 == self.len())
    }

    pub fn to_json(&self) -> MapJson {
        MapJson {
            faces: self.labels.clone(),
            adjacent: self.pairs().into_iter().map(|(a, b)| [a, b]).collect(),
        }
    }

    pub fn from_json(json: &MapJson) -> Result<Self> {
        Self::build(
            json.faces.iter().cloned(),
            json.adjacent.iter().map(|[a, b]| (a, b)),
        )
    }
}

/// On-disk map format: `{"faces": [...], "adjacent": [["A","B"], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapJson {
    pub faces: Vec<String>,
    pub adjacent: Vec<[String; 2]>,
}

/// Partial assignment of faces to palette colors, sized to one map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    palette: usize,
    assignment: Vec<Option<Color>>,
}

impl Coloring {
    pub fn new(palette: usize, faces: usize) -> Result<Self> {
        if palette == 0 {
            return Err(Error::EmptyPalette);
        }
        Ok(Self { palette, assignment: vec![None; faces] })
    }

    /// Empty coloring for `map`.
    pub fn empty(map: &MapGraph, palette: usize) -> Result<Self> {
        Self::new(palette, map.len())
    }

    /// Coloring of `map` from `(label, color index)` pairs.
    pub fn from_labels(map: &MapGraph, palette: usize, pairs: &[(&str, usize)]) -> Result<Self> {
        let mut col = Self::empty(map, palette)?;
        for &(label, c) in pairs {
            col.assign(map.id(label)?, Color(c))?;
        }
        Ok(col)
    }

    pub fn palette(&self) -> usize {
        self.palette
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    pub fn assign(&mut self, face: FaceId, color: Color) -> Result<()> {
        if color.0 >= self.palette {
            return Err(Error::ColorOutOfRange { color: color.0, palette: self.palette });
        }
        let slot = self
            .assignment
            .get_mut(face.0)
            .ok_or(Error::FaceOutOfRange(face.0))?;
        *slot = Some(color);
        Ok(())
    }

    pub fn unassign(&mut self, face: FaceId) {
        if let Some(slot) = self.assignment.get_mut(face.0) {
            *slot = None;
        }
    }

    pub fn get(&self, face: FaceId) -> Option<Color> {
        self.assignment.get(face.0).copied().flatten()
    }

    pub fn is_total(&self) -> bool {
        self.assignment.iter().all(Option::is_some)
    }

    pub fn assigned(&self) -> impl Iterator<Item = (FaceId, Color)> + '_ {
        self.assignment
            .iter()
            .enumerate()
            .filter_map(|(i, c)| c.map(|c| (FaceId(i), c)))
    }

    /// Number of distinct colors actually used.
    pub fn colors_used(&self) -> usize {
        let mut used = vec![false; self.palette];
        for (_, c) in self.assigned() {
            used[c.0] = true;
        }
        used.into_iter().filter(|&u| u).count()
    }

    pub fn to_json(&self, map: &MapGraph) -> ColoringJson {
        ColoringJson {
            palette: self.palette,
            assignment: self
                .assigned()
                .map(|(f, c)| (map.label(f).to_string(), c.0))
                .collect(),
        }
    }

    pub fn from_json(map: &MapGraph, json: &ColoringJson) -> Result<Self> {
        let mut col = Self::empty(map, json.palette)?;
        for (label, &c) in &json.assignment {
            col.assign(map.id(label)?, Color(c))?;
        }
        Ok(col)
    }
}

/// On-disk coloring format: `{"palette": 4, "assignment": {"A": 0, ...}}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringJson {
    pub palette: usize,
    pub assignment: IndexMap<String, usize>,
}
