//! Maps in dimension one (curves cut into segments) and three (voxel
//! regions), and the `(n + 2)`-color bound checked against them.

use std::collections::{HashMap, HashSet, VecDeque};

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::coloring::{exact_chromatic, Chromatic};
use crate::error::{Error, Result};
use crate::graph::MapGraph;

pub type Voxel = [i64; 3];

const NEIGHBOR_OFFSETS: [Voxel; 6] = [
    [1, 0, 0],
    [-1, 0, 0],
    [0, 1, 0],
    [0, -1, 0],
    [0, 0, 1],
    [0, 0, -1],
];

fn shift(v: Voxel, d: Voxel) -> Voxel {
    [v[0] + d[0], v[1] + d[1], v[2] + d[2]]
}

/// Curve cut into `n_segments` pieces: a path, or a cycle when `closed`.
pub fn curve_map(n_segments: usize, closed: bool) -> Result<MapGraph> {
    if n_segments == 0 {
        return Err(Error::InvalidParameter("a curve needs at least one segment".into()));
    }
    if closed && n_segments < 3 {
        return Err(Error::InvalidParameter(format!(
            "a closed curve needs at least 3 segments, got {n_segments}"
        )));
    }
    let labels = (1..=n_segments).map(|i| format!("S{i}")).collect();
    let mut edges: Vec<(usize, usize)> = (1..n_segments).map(|i| (i - 1, i)).collect();
    if closed {
        edges.push((n_segments - 1, 0));
    }
    MapGraph::from_indexed(labels, &edges)
}

/// A 3-D map: named regions made of unit voxels inside `[0, grid)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VoxelComplex {
    grid: [i64; 3],
    regions: IndexMap<String, Vec<Voxel>>,
}

/// `{"grid":[mx,my,mz], "regions":{"R1":[[x,y,z],...],...}}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VoxelJson {
    pub grid: [i64; 3],
    pub regions: IndexMap<String, Vec<Voxel>>,
}

impl VoxelComplex {
    /// Checks bounds, disjointness and face-connectivity of every region.
    pub fn new(grid: [i64; 3], regions: IndexMap<String, Vec<Voxel>>) -> Result<Self> {
        if grid.iter().any(|&g| g <= 0) {
            return Err(Error::InvalidParameter(format!("grid {grid:?} must be positive")));
        }
        let mut owner: HashMap<Voxel, &str> = HashMap::new();
        for (name, voxels) in &regions {
            if voxels.is_empty() {
                return Err(Error::EmptyRegion(name.clone()));
            }
            for &v in voxels {
                if (0..3).any(|a| v[a] < 0 || v[a] >= grid[a]) {
                    return Err(Error::VoxelOutOfBounds { region: name.clone(), voxel: v });
                }
                if let Some(other) = owner.insert(v, name) {
                    return Err(Error::OverlappingRegions(other.to_string(), name.clone()));
                }
            }
            if !face_connected(voxels) {
                return Err(Error::DisconnectedRegion(name.clone()));
            }
        }
        if regions.is_empty() {
            return Err(Error::EmptyMap);
        }
        Ok(Self { grid, regions })
    }

    pub fn grid(&self) -> [i64; 3] {
        self.grid
    }

    pub fn regions(&self) -> &IndexMap<String, Vec<Voxel>> {
        &self.regions
    }

    pub fn to_json(&self) -> VoxelJson {
        VoxelJson { grid: self.grid, regions: self.regions.clone() }
    }

    pub fn from_json(json: &VoxelJson) -> Result<Self> {
        Self::new(json.grid, json.regions.clone())
    }
}

/// Flood fill over the 6-neighborhood.
fn face_connected(voxels: &[Voxel]) -> bool {
    let cells: HashSet<Voxel> = voxels.iter().copied().collect();
    let mut seen = HashSet::from([voxels[0]]);
    let mut queue = VecDeque::from([voxels[0]]);
    while let Some(v) = queue.pop_front() {
        for d in NEIGHBOR_OFFSETS {
            let w = shift(v, d);
            if cells.contains(&w) && seen.insert(w) {
                queue.push_back(w);
            }
        }
    }
    seen.len() == cells.len()
}

/// `m` regions on an `m × 2 × m` grid, every two of which share a voxel face.
///
/// Region `i` fills layer `z = i - 1` except the tower cells of lower
/// regions, and owns the tower column `(i - 1, 0, z)` for `z ≥ i`. The tower
/// of region `i` meets region `j > i` at `(i - 1, 1, j - 1)`.
pub fn neighborly_boxes(m: usize) -> Result<VoxelComplex> {
    if !(2..=32).contains(&m) {
        return Err(Error::InvalidParameter(format!("m must lie in 2..=32, got {m}")));
    }
    let side = m as i64;
    let mut regions = IndexMap::new();
    for i in 1..=side {
        let layer = i - 1;
        let mut cells = Vec::new();
        for x in 0..side {
            for y in 0..2 {
                // lower region j owns (j - 1, 0, z) for every z >= j
                let tower_of_lower = y == 0 && x < layer;
                if !tower_of_lower {
                    cells.push([x, y, layer]);
                }
            }
        }
        cells.extend((i..side).map(|z| [i - 1, 0, z]));
        regions.insert(format!("R{i}"), cells);
    }
    VoxelComplex::new([side, 2, side], regions)
}

/// One face per region; two regions are adjacent when some pair of their
/// voxels shares a unit face. Edge or corner contact does not count.
pub fn adjacency_graph(cx: &VoxelComplex) -> MapGraph {
    let mut owner: HashMap<Voxel, usize> = HashMap::new();
    for (r, voxels) in cx.regions.values().enumerate() {
        for &v in voxels {
            owner.insert(v, r);
        }
    }
    let mut edges = Vec::new();
    for (r, voxels) in cx.regions.values().enumerate() {
        for &v in voxels {
            for d in [[1, 0, 0], [0, 1, 0], [0, 0, 1]] {
                if let Some(&s) = owner.get(&shift(v, d)) {
                    if s != r {
                        edges.push((r, s));
                    }
                }
            }
        }
    }
    MapGraph::from_indexed(cx.regions.keys().cloned().collect(), &edges)
        .expect("validated complex has distinct region names")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ConjectureVerdict {
    Consistent,
    Falsified,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureReport {
    pub dimension: usize,
    pub instance: String,
    pub chi: usize,
    pub bound: usize,
    pub verdict: ConjectureVerdict,
}

/// Compares the chromatic number of `map` with `dimension + 2`.
pub fn test_conjecture(dimension: usize, instance: impl Into<String>, map: &MapGraph) -> Result<ConjectureReport> {
    if !(1..=3).contains(&dimension) {
        return Err(Error::InvalidParameter(format!("dimension must be 1, 2 or 3, got {dimension}")));
    }
    let chi = match exact_chromatic(map, map.len()).chi {
        Chromatic::Exact(k) => k,
        Chromatic::ExceedsMax => unreachable!("one color per face always suffices"),
    };
    let bound = dimension + 2;
    let verdict = if chi > bound { ConjectureVerdict::Falsified } else { ConjectureVerdict::Consistent };
    Ok(ConjectureReport { dimension, instance: instance.into(), chi, bound, verdict })
}
