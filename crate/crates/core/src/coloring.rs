//! Coloring verification, the single-face extension rule, the inductive
//! face-by-face colorer, and exact search oracles.

use std::collections::VecDeque;

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::graph::{Color, Coloring, FaceId, MapGraph};
use crate::planarity::{find_subdivision, KuratowskiKind, KuratowskiWitness};

pub const FOUR: usize = 4;

/// Largest neighborhood handed to the K5 subdivision search when diagnosing
/// a blocked extension.
const WITNESS_SEARCH_LIMIT: usize = 12;

fn check_size(map: &MapGraph, col: &Coloring) -> Result<()> {
    if col.len() != map.len() {
        return Err(Error::ColoringSizeMismatch { expected: map.len(), found: col.len() });
    }
    Ok(())
}

/// True iff no two adjacent assigned faces share a color.
pub fn verify_coloring(map: &MapGraph, col: &Coloring) -> Result<bool> {
    check_size(map, col)?;
    for (f, c) in col.assigned() {
        if c.0 >= col.palette() {
            return Err(Error::ColorOutOfRange { color: c.0, palette: col.palette() });
        }
        if map.neighbors(f).iter().any(|&g| col.get(g) == Some(c)) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExtensionOutcome {
    Colored(Color),
    /// Every palette color already sits on a neighbor.
    Blocked {
        /// Assigned neighbors grouped by color, indexed by color.
        census: Vec<Vec<FaceId>>,
        /// A K5 subdivision through the new face, when its neighborhood holds one.
        witness: Option<KuratowskiWitness>,
    },
}

impl ExtensionOutcome {
    pub fn color(&self) -> Option<Color> {
        match self {
            Self::Colored(c) => Some(*c),
            Self::Blocked { .. } => None,
        }
    }

    pub fn to_json(&self, map: &MapGraph) -> Value {
        match self {
            Self::Colored(c) => json!({ "result": "colored", "color": c.0, "name": c.to_string() }),
            Self::Blocked { census, witness } => {
                let census: serde_json::Map<String, Value> = census
                    .iter()
                    .enumerate()
                    .map(|(c, faces)| {
                        let names: Vec<&str> = faces.iter().map(|&f| map.label(f)).collect();
                        (Color(c).to_string(), json!(names))
                    })
                    .collect();
                json!({
                    "result": "blocked",
                    "census": census,
                    "witness": witness.as_ref().map(|w| w.to_json(map)),
                })
            }
        }
    }
}

/// Lowest color ≥ `from` (and ≤ `limit`) missing from the assigned neighbors.
fn lowest_free(map: &MapGraph, col: &Coloring, face: FaceId, from: usize, limit: usize) -> Option<Color> {
    let mut taken = vec![false; col.palette()];
    for &g in map.neighbors(face) {
        if let Some(c) = col.get(g) {
            taken[c.0] = true;
        }
    }
    (from..col.palette().min(limit + 1)).find(|&c| !taken[c]).map(Color)
}

/// Colors one new face with the lowest palette color absent from its
/// assigned neighbors.
///
/// With a four-color palette this realizes the four extension classes: a
/// face not touching the `a` face takes `a`, and so on. When all colors are
/// present the outcome is blocked, and the diagnosis looks for a K5 made of
/// the new face and its neighbors.
pub fn greedy_extend(map: &MapGraph, col: &Coloring, face: FaceId) -> Result<ExtensionOutcome> {
    check_size(map, col)?;
    if face.0 >= map.len() {
        return Err(Error::FaceOutOfRange(face.0));
    }
    if col.get(face).is_some() {
        return Err(Error::AlreadyAssigned(map.label(face).to_string()));
    }
    if let Some(c) = lowest_free(map, col, face, 0, usize::MAX - 1) {
        return Ok(ExtensionOutcome::Colored(c));
    }
    let mut census = vec![Vec::new(); col.palette()];
    for &g in map.neighbors(face) {
        if let Some(c) = col.get(g) {
            census[c.0].push(g);
        }
    }
    let witness = blocked_witness(map, col, face);
    Ok(ExtensionOutcome::Blocked { census, witness })
}

fn blocked_witness(map: &MapGraph, col: &Coloring, face: FaceId) -> Option<KuratowskiWitness> {
    let colored: Vec<FaceId> = map
        .neighbors(face)
        .iter()
        .copied()
        .filter(|&g| col.get(g).is_some())
        .collect();
    // direct K5: the face plus four pairwise adjacent neighbors
    let n = colored.len();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let quad = [colored[a], colored[b], colored[c], colored[d]];
                    let clique = (0..4).all(|i| (i + 1..4).all(|j| map.has_edge(quad[i], quad[j])));
                    if clique {
                        let branch: Vec<FaceId> = std::iter::once(face).chain(quad).collect();
                        let mut paths = Vec::new();
                        for i in 0..5 {
                            for j in i + 1..5 {
                                paths.push(vec![branch[i], branch[j]]);
                            }
                        }
                        return Some(KuratowskiWitness { kind: KuratowskiKind::K5, branch, paths });
                    }
                }
            }
        }
    }
    if n + 1 > WITNESS_SEARCH_LIMIT {
        return None;
    }
    let mut keep = vec![face];
    keep.extend(&colored);
    let local = map.induced(&keep).ok()?;
    let w = find_subdivision(&local, KuratowskiKind::K5)?;
    let lift = |f: &FaceId| keep[f.0];
    Some(KuratowskiWitness {
        kind: w.kind,
        branch: w.branch.iter().map(lift).collect(),
        paths: w.paths.iter().map(|p| p.iter().map(lift).collect()).collect(),
    })
}

/// Breadth-first face order, restarting from the lowest unvisited face.
pub fn bfs_order(map: &MapGraph) -> Vec<FaceId> {
    let mut seen = vec![false; map.len()];
    let mut order = Vec::with_capacity(map.len());
    for start in map.faces() {
        if seen[start.0] {
            continue;
        }
        seen[start.0] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(f) = queue.pop_front() {
            order.push(f);
            for &g in map.neighbors(f) {
                if !seen[g.0] {
                    seen[g.0] = true;
                    queue.push_back(g);
                }
            }
        }
    }
    order
}

fn check_permutation(map: &MapGraph, order: &[FaceId]) -> Result<()> {
    let mut seen = vec![false; map.len()];
    if order.len() != map.len() {
        return Err(Error::InvalidOrder);
    }
    for f in order {
        if f.0 >= map.len() || std::mem::replace(&mut seen[f.0], true) {
            return Err(Error::InvalidOrder);
        }
    }
    Ok(())
}

/// Four-colors the map one face at a time with [`greedy_extend`], backing up
/// chronologically whenever a face is blocked.
///
/// `None` means the search space is exhausted: the map is not 4-colorable.
pub fn induction_color(map: &MapGraph, order: Option<&[FaceId]>) -> Result<Option<Coloring>> {
    induction_color_with_palette(map, order, FOUR)
}

pub fn induction_color_with_palette(
    map: &MapGraph,
    order: Option<&[FaceId]>,
    palette: usize,
) -> Result<Option<Coloring>> {
    let order = match order {
        Some(o) => {
            check_permutation(map, o)?;
            o.to_vec()
        }
        None => bfs_order(map),
    };
    let n = order.len();
    let mut col = Coloring::new(palette, map.len())?;
    // next color to try at each position, and highest color used before it
    let mut next_try = vec![0usize; n + 1];
    let mut max_before = vec![0usize; n + 1];
    let mut pos = 0;
    while pos < n {
        let face = order[pos];
        // new colors are only opened in increasing order
        let limit = if pos == 0 { 0 } else { max_before[pos] + 1 };
        let pick = if next_try[pos] == 0 {
            greedy_extend(map, &col, face)?.color().filter(|c| c.0 <= limit)
        } else {
            lowest_free(map, &col, face, next_try[pos], limit)
        };
        match pick {
            Some(c) => {
                col.assign(face, c)?;
                next_try[pos] = c.0 + 1;
                max_before[pos + 1] = if pos == 0 { c.0 } else { max_before[pos].max(c.0) };
                pos += 1;
                next_try[pos] = 0;
            }
            None => {
                next_try[pos] = 0;
                if pos == 0 {
                    return Ok(None);
                }
                pos -= 1;
                col.unassign(order[pos]);
            }
        }
    }
    Ok(Some(col))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Chromatic {
    Exact(usize),
    ExceedsMax,
}

impl Chromatic {
    pub fn value(self) -> Option<usize> {
        match self {
            Self::Exact(k) => Some(k),
            Self::ExceedsMax => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChromaticResult {
    pub chi: Chromatic,
    pub witness: Option<Coloring>,
}

/// Chromatic number up to `k_max`, with a proper coloring using that many colors.
pub fn exact_chromatic(map: &MapGraph, k_max: usize) -> ChromaticResult {
    for k in 1..=k_max {
        if let Some(col) = color_with(map, k) {
            return ChromaticResult { chi: Chromatic::Exact(k), witness: Some(col) };
        }
    }
    ChromaticResult { chi: Chromatic::ExceedsMax, witness: None }
}

/// Some proper `k`-coloring, or `None`. Backtracking picks the most saturated
/// uncolored face next; colors are opened in increasing order, so the first
/// face always gets color 0.
pub fn color_with(map: &MapGraph, k: usize) -> Option<Coloring> {
    let n = map.len();
    let mut colors: Vec<Option<usize>> = vec![None; n];
    // forbid[f * k + c] = number of neighbors of f colored c
    let mut forbid = vec![0u32; n * k];
    let mut search = Dsatur { map, k, colors: &mut colors, forbid: &mut forbid };
    if !search.run(0) {
        return None;
    }
    let mut col = Coloring::new(k, n).ok()?;
    for (i, c) in colors.iter().enumerate() {
        col.assign(FaceId(i), Color(c.expect("total")))
            .expect("color below palette");
    }
    Some(col)
}

struct Dsatur<'a> {
    map: &'a MapGraph,
    k: usize,
    colors: &'a mut Vec<Option<usize>>,
    forbid: &'a mut Vec<u32>,
}

impl Dsatur<'_> {
    fn saturation(&self, f: usize) -> usize {
        self.forbid[f * self.k..(f + 1) * self.k].iter().filter(|&&x| x > 0).count()
    }

    fn pick(&self) -> Option<usize> {
        (0..self.map.len())
            .filter(|&f| self.colors[f].is_none())
            .max_by_key(|&f| (self.saturation(f), self.map.degree(FaceId(f)), std::cmp::Reverse(f)))
    }

    fn set(&mut self, f: usize, c: Option<usize>) {
        let (old, k) = (self.colors[f], self.k);
        for &g in self.map.neighbors(FaceId(f)) {
            if let Some(o) = old {
                self.forbid[g.0 * k + o] -= 1;
            }
            if let Some(c) = c {
                self.forbid[g.0 * k + c] += 1;
            }
        }
        self.colors[f] = c;
    }

    fn run(&mut self, opened: usize) -> bool {
        let Some(f) = self.pick() else {
            return true;
        };
        let top = (opened + 1).min(self.k);
        for c in 0..top {
            if self.forbid[f * self.k + c] > 0 {
                continue;
            }
            self.set(f, Some(c));
            if self.run(opened.max(c + 1)) {
                return true;
            }
            self.set(f, None);
        }
        false
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PrecoloringExtension {
    Extendable(Coloring),
    NotExtendable,
}

impl PrecoloringExtension {
    pub fn is_extendable(&self) -> bool {
        matches!(self, Self::Extendable(_))
    }
}

/// Exhaustively tries to complete a fixed proper coloring of `sub` to the
/// whole map without recoloring any face of `sub`.
pub fn check_precoloring_extension(
    map: &MapGraph,
    sub: &[FaceId],
    precol: &Coloring,
) -> Result<PrecoloringExtension> {
    let free: Vec<FaceId> = {
        let mut in_sub = vec![false; map.len()];
        for f in sub {
            if f.0 >= map.len() {
                return Err(Error::FaceOutOfRange(f.0));
            }
            in_sub[f.0] = true;
        }
        map.faces().filter(|f| !in_sub[f.0]).collect()
    };
    check_precoloring_extension_ordered(map, sub, precol, &free)
}

/// As [`check_precoloring_extension`], assigning the free faces in `free_order`.
pub fn check_precoloring_extension_ordered(
    map: &MapGraph,
    sub: &[FaceId],
    precol: &Coloring,
    free_order: &[FaceId],
) -> Result<PrecoloringExtension> {
    check_size(map, precol)?;
    let mut in_sub = vec![false; map.len()];
    for &f in sub {
        if f.0 >= map.len() {
            return Err(Error::FaceOutOfRange(f.0));
        }
        in_sub[f.0] = true;
        if precol.get(f).is_none() {
            return Err(Error::PrecoloringDomain(map.label(f).to_string()));
        }
    }
    for (f, c) in precol.assigned() {
        if !in_sub[f.0] {
            return Err(Error::PrecoloringDomain(map.label(f).to_string()));
        }
        if let Some(&g) = map.neighbors(f).iter().find(|&&g| precol.get(g) == Some(c)) {
            return Err(Error::ImproperPrecoloring(
                map.label(f).to_string(),
                map.label(g).to_string(),
            ));
        }
    }
    let expected_free = in_sub.iter().filter(|&&s| !s).count();
    if free_order.len() != expected_free || free_order.iter().any(|f| f.0 >= map.len() || in_sub[f.0]) {
        return Err(Error::InvalidOrder);
    }
    let mut col = precol.clone();
    Ok(match extend_in_order(map, &mut col, free_order, None) {
        true => PrecoloringExtension::Extendable(col),
        false => PrecoloringExtension::NotExtendable,
    })
}

/// Backtracking over `order`, trying colors in index order or in the given
/// per-position color orders. Leaves `col` total on success.
pub(crate) fn extend_in_order(
    map: &MapGraph,
    col: &mut Coloring,
    order: &[FaceId],
    color_orders: Option<&[Vec<usize>]>,
) -> bool {
    let Some((&face, rest)) = order.split_first() else {
        return true;
    };
    let palette = col.palette();
    let default: Vec<usize> = (0..palette).collect();
    let tries = color_orders.map_or(&default, |o| &o[0]);
    for &c in tries {
        if map.neighbors(face).iter().any(|&g| col.get(g) == Some(Color(c))) {
            continue;
        }
        col.assign(face, Color(c)).expect("palette color");
        if extend_in_order(map, col, rest, color_orders.map(|o| &o[1..])) {
            return true;
        }
        col.unassign(face);
    }
    false
}
