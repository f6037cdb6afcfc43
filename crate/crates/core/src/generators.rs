//! Named instances and random corpora.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::embedding::{PlanarEmbedding, VefCounts};
use crate::error::{Error, Result};
use crate::graph::{Color, Coloring, ColoringJson, FaceId, MapGraph, MapJson};
use crate::planarity::EulerReport;

/// Builds the dual of a set of named face cycles: two faces are adjacent when
/// their boundaries share an edge.
pub fn face_dual(faces: &[(&str, Vec<&str>)]) -> Result<MapGraph> {
    let mut owners: BTreeMap<(&str, &str), Vec<usize>> = BTreeMap::new();
    for (i, (_, cycle)) in faces.iter().enumerate() {
        for k in 0..cycle.len() {
            let (u, v) = (cycle[k], cycle[(k + 1) % cycle.len()]);
            owners.entry((u.min(v), u.max(v))).or_default().push(i);
        }
    }
    let mut pairs = Vec::new();
    for list in owners.values() {
        for (x, &a) in list.iter().enumerate() {
            for &b in &list[x + 1..] {
                if a != b {
                    pairs.push((faces[a].0, faces[b].0));
                }
            }
        }
    }
    MapGraph::build(faces.iter().map(|(name, _)| *name), pairs)
}

const FIGURE1_FACES: [(&str, &[&str]); 5] = [
    ("AEGHD", &["A", "E", "G", "H", "D"]),
    ("BFGHC", &["B", "F", "G", "H", "C"]),
    ("ABCD", &["A", "B", "C", "D"]),
    ("ABFE", &["A", "B", "F", "E"]),
    ("CDH", &["C", "D", "H"]),
];

/// The unfolded polyhedron left after cutting away the undersurface `EGF`.
const FIGURE1_OUTER: [&str; 3] = ["E", "G", "F"];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Figure1Fixture {
    /// Vertices A..H, twelve edges, outer face removed.
    pub embedding: PlanarEmbedding,
    /// The five named faces with their boundary cycles.
    pub faces: Vec<(String, Vec<String>)>,
}

impl Figure1Fixture {
    pub fn dual(&self) -> MapGraph {
        let faces: Vec<(&str, Vec<&str>)> = self
            .faces
            .iter()
            .map(|(n, c)| (n.as_str(), c.iter().map(String::as_str).collect()))
            .collect();
        face_dual(&faces).expect("fixture faces are valid")
    }
}

pub fn build_figure1() -> Figure1Fixture {
    let mut cycles: Vec<Vec<&str>> = FIGURE1_FACES.iter().map(|(_, c)| c.to_vec()).collect();
    cycles.push(FIGURE1_OUTER.to_vec());
    let embedding = PlanarEmbedding::from_face_cycles(&cycles, true).expect("fixture faces close up");
    let faces = FIGURE1_FACES
        .iter()
        .map(|(n, c)| (n.to_string(), c.iter().map(|s| s.to_string()).collect()))
        .collect();
    Figure1Fixture { embedding, faces }
}

/// The boundary line `MN` added to make the triangle `CDH` touch the
/// tetragon `ABFE`.
///
/// `tally` keeps the construction's own bookkeeping: two new vertices, one
/// new edge, the five faces unchanged, and all five faces now pairwise
/// adjacent (`claimed_dual`). `realized` is an actual drawing of the new
/// line: M subdivides `CD`, N subdivides `AB`, and `MN` crosses `ABCD`,
/// which splits that face in two and leaves `CDH` and `ABFE` apart.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MnConstruction {
    pub tally: VefCounts,
    pub claimed_dual: MapGraph,
    pub realized: PlanarEmbedding,
    pub realized_faces: Vec<(String, Vec<String>)>,
}

impl MnConstruction {
    /// Euler report of the tallied counts (outer face removed).
    pub fn euler_report(&self) -> EulerReport {
        EulerReport::from_counts(self.tally, true)
    }

    pub fn realized_dual(&self) -> MapGraph {
        let faces: Vec<(&str, Vec<&str>)> = self
            .realized_faces
            .iter()
            .map(|(n, c)| (n.as_str(), c.iter().map(String::as_str).collect()))
            .collect();
        face_dual(&faces).expect("realized faces are valid")
    }
}

pub fn add_edge_mn(fix: &Figure1Fixture) -> MnConstruction {
    let base = fix.embedding.count_vef();
    let tally = VefCounts { v: base.v + 2, e: base.e + 1, f: base.f };

    let dual = fix.dual();
    let cdh = dual.id("CDH").expect("fixture face");
    let abfe = dual.id("ABFE").expect("fixture face");
    let mut pairs = dual.pairs();
    pairs.push((dual.label(cdh).to_string(), dual.label(abfe).to_string()));
    let claimed_dual = MapGraph::build(dual.labels().to_vec(), pairs).expect("fixture labels");

    let realized_faces: Vec<(&str, Vec<&str>)> = vec![
        ("AEGHD", vec!["A", "E", "G", "H", "D"]),
        ("BFGHC", vec!["B", "F", "G", "H", "C"]),
        ("NBCM", vec!["N", "B", "C", "M"]),
        ("ANMD", vec!["A", "N", "M", "D"]),
        ("ANBFE", vec!["A", "N", "B", "F", "E"]),
        ("CMDH", vec!["C", "M", "D", "H"]),
    ];
    let mut cycles: Vec<Vec<&str>> = realized_faces.iter().map(|(_, c)| c.clone()).collect();
    cycles.push(FIGURE1_OUTER.to_vec());
    let realized = PlanarEmbedding::from_face_cycles(&cycles, true).expect("realized faces close up");
    MnConstruction {
        tally,
        claimed_dual,
        realized,
        realized_faces: realized_faces
            .into_iter()
            .map(|(n, c)| (n.to_string(), c.into_iter().map(String::from).collect()))
            .collect(),
    }
}

/// Five faces A..E, all adjacent except D and E, colored a, b, c, d, d.
pub fn base_map_5() -> (MapGraph, Coloring) {
    let map = complete_multipartite_labelled(&[vec!["A"], vec!["B"], vec!["C"], vec!["D", "E"]]);
    let col = Coloring::from_labels(&map, 4, &[("A", 0), ("B", 1), ("C", 2), ("D", 3), ("E", 3)])
        .expect("base coloring");
    (map, col)
}

/// The base map plus a sixth face `F` adjacent to `neighbors`, with the base
/// coloring carried over and `F` left uncolored.
pub fn base_map_plus_face(neighbors: &[&str]) -> Result<(MapGraph, Coloring, FaceId)> {
    let (base, col) = base_map_5();
    let map = base.with_face("F", neighbors)?;
    let mut grown = Coloring::empty(&map, col.palette())?;
    for (f, c) in col.assigned() {
        grown.assign(f, c)?;
    }
    let f = map.id("F")?;
    Ok((map, grown, f))
}

/// Neighborhoods of a new face for the four extension classes: the face
/// avoids `A`, `B`, `C`, and both `D` and `E`, respectively.
pub const EXTENSION_CLASSES: [&[&str]; 4] = [
    &["B", "C", "D", "E"],
    &["A", "C", "D", "E"],
    &["A", "B", "D", "E"],
    &["A", "B", "C"],
];

fn complete_multipartite_labelled(parts: &[Vec<&str>]) -> MapGraph {
    let labels: Vec<String> = parts.iter().flatten().map(|s| s.to_string()).collect();
    let class: Vec<usize> = parts
        .iter()
        .enumerate()
        .flat_map(|(c, p)| std::iter::repeat_n(c, p.len()))
        .collect();
    let mut edges = Vec::new();
    for u in 0..labels.len() {
        for v in u + 1..labels.len() {
            if class[u] != class[v] {
                edges.push((u, v));
            }
        }
    }
    MapGraph::from_indexed(labels, &edges).expect("distinct labels")
}

const LETTERS: [char; 4] = ['A', 'B', 'C', 'D'];

/// Faces A1..Ai, B1..Bj, C1..Ck, D1..Dl; faces with different letters are
/// adjacent, faces sharing a letter are not.
pub fn complete_multipartite(i: usize, j: usize, k: usize, l: usize) -> Result<MapGraph> {
    let sizes = [i, j, k, l];
    if sizes.iter().sum::<usize>() == 0 {
        return Err(Error::InvalidParameter("at least one part must be non-empty".into()));
    }
    let names: Vec<Vec<String>> = sizes
        .iter()
        .zip(LETTERS)
        .map(|(&n, letter)| (1..=n).map(|x| format!("{letter}{x}")).collect())
        .collect();
    let parts: Vec<Vec<&str>> = names.iter().map(|p| p.iter().map(String::as_str).collect()).collect();
    Ok(complete_multipartite_labelled(&parts))
}

/// Colors every face of `complete_multipartite(i, j, k, l)` by its letter.
pub fn letter_class_coloring(i: usize, j: usize, k: usize, l: usize) -> Result<Coloring> {
    let sizes = [i, j, k, l];
    let mut col = Coloring::new(4, sizes.iter().sum())?;
    let mut next = 0;
    for (c, &n) in sizes.iter().enumerate() {
        for _ in 0..n {
            col.assign(FaceId(next), Color(c))?;
            next += 1;
        }
    }
    Ok(col)
}

/// A random maximal planar graph grown from K4.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RandomTriangulation {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
    /// Triangular faces, outer face included.
    pub triangles: Vec<[usize; 3]>,
}

/// Grows a triangulation by inserting each new vertex into a uniformly chosen
/// triangle. Randomness comes from ChaCha8 seeded with `seed`.
pub fn random_triangulation(n: usize, seed: u64) -> Result<RandomTriangulation> {
    if n < 4 {
        return Err(Error::InvalidParameter(format!("need at least 4 faces, got {n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut triangles = vec![[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]];
    let mut edges = vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    for v in 4..n {
        let t = rng.gen_range(0..triangles.len());
        let [a, b, c] = triangles[t];
        triangles[t] = [a, b, v];
        triangles.push([b, c, v]);
        triangles.push([a, c, v]);
        edges.extend([(a, v), (b, v), (c, v)]);
    }
    Ok(RandomTriangulation { vertices: n, edges, triangles })
}

fn random_label(i: usize) -> String {
    format!("R{i}")
}

impl RandomTriangulation {
    pub fn embedding(&self) -> PlanarEmbedding {
        let labels: Vec<String> = (0..self.vertices).map(random_label).collect();
        let cycles: Vec<Vec<&str>> = self
            .triangles
            .iter()
            .map(|t| t.iter().map(|&v| labels[v].as_str()).collect())
            .collect();
        PlanarEmbedding::from_face_cycles(&cycles, false).expect("triangulation closes up")
    }
}

/// Map whose dual is a random maximal planar triangulation on `n_faces`
/// faces, named `R0..`. Identical `(n_faces, seed)` give identical maps.
pub fn random_planar_map(n_faces: usize, seed: u64) -> Result<MapGraph> {
    let tri = random_triangulation(n_faces, seed)?;
    MapGraph::from_indexed((0..n_faces).map(random_label).collect(), &tri.edges)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlowerFixture {
    pub map: MapGraph,
    pub sub: Vec<FaceId>,
    pub precol: Coloring,
}

/// On-disk form of the flower fixture: the map format plus the fixed subset
/// and its precoloring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlowerJson {
    #[serde(flatten)]
    pub map: MapJson,
    pub subset: Vec<String>,
    pub precoloring: ColoringJson,
}

impl FlowerFixture {
    pub fn to_json(&self) -> FlowerJson {
        FlowerJson {
            map: self.map.to_json(),
            subset: self.sub.iter().map(|&f| self.map.label(f).to_string()).collect(),
            precoloring: self.precol.to_json(&self.map),
        }
    }

    pub fn from_json(json: &FlowerJson) -> Result<Self> {
        let map = MapGraph::from_json(&json.map)?;
        let sub = json.subset.iter().map(|l| map.id(l)).collect::<Result<_>>()?;
        let precol = Coloring::from_json(&map, &json.precoloring)?;
        Ok(Self { map, sub, precol })
    }
}

/// Center face `C` ringed by five pairwise separate petals, all inside an
/// outer face `O`. The petals and `O` are precolored so that `C` sees all
/// four colors.
pub fn flower_counterexample() -> FlowerFixture {
    let petals = ["P1", "P2", "P3", "P4", "P5"];
    let mut faces = vec!["C", "O"];
    faces.extend(petals);
    let mut pairs = vec![("C", "O")];
    for p in petals {
        pairs.push(("C", p));
        pairs.push(("O", p));
    }
    let map = MapGraph::build(faces, pairs).expect("flower labels");
    let sub: Vec<FaceId> = ["O", "P1", "P2", "P3", "P4", "P5"]
        .iter()
        .map(|l| map.id(l).expect("flower face"))
        .collect();
    let precol = Coloring::from_labels(
        &map,
        4,
        &[("O", 0), ("P1", 1), ("P2", 2), ("P3", 3), ("P4", 1), ("P5", 2)],
    )
    .expect("flower precoloring");
    FlowerFixture { map, sub, precol }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planarity::euler_check;

    #[test]
    fn figure1_counts_and_faces() {
        let fix = build_figure1();
        assert_eq!(fix.embedding.count_vef(), VefCounts { v: 8, e: 12, f: 5 });
        assert!(euler_check(&fix.embedding).consistent);
        // traced faces are the five named cycles plus the cut-away EGF
        let mut traced: Vec<Vec<String>> = fix
            .embedding
            .face_labels()
            .into_iter()
            .map(|mut c| {
                c.sort();
                c
            })
            .collect();
        traced.sort();
        let mut expected: Vec<Vec<String>> = FIGURE1_FACES
            .iter()
            .map(|(_, c)| c.to_vec())
            .chain([FIGURE1_OUTER.to_vec()])
            .map(|c| {
                let mut c: Vec<String> = c.into_iter().map(String::from).collect();
                c.sort();
                c
            })
            .collect();
        expected.sort();
        assert_eq!(traced, expected);
    }

    #[test]
    fn figure1_dual_is_k5_minus_edge() {
        let dual = build_figure1().dual();
        assert_eq!(dual.edge_count(), 9);
        assert!(!dual.adjacent_labels("CDH", "ABFE").unwrap());
    }

    #[test]
    fn mn_tally_and_realization() {
        let mn = add_edge_mn(&build_figure1());
        assert_eq!(mn.tally, VefCounts { v: 10, e: 13, f: 5 });
        let r = mn.euler_report();
        assert_eq!((r.characteristic, r.consistent), (2, false));
        assert!(mn.claimed_dual.is_complete());
        assert_eq!(mn.claimed_dual.len(), 5);

        assert_eq!(mn.realized.count_vef(), VefCounts { v: 10, e: 15, f: 6 });
        assert!(euler_check(&mn.realized).consistent);
        let real = mn.realized_dual();
        assert!(!real.adjacent_labels("CMDH", "ANBFE").unwrap());
    }

    #[test]
    fn base_map() {
        let (map, col) = base_map_5();
        assert!(!map.adjacent_labels("D", "E").unwrap());
        assert_eq!(map.edge_count(), 9);
        assert!(crate::coloring::verify_coloring(&map, &col).unwrap());
    }

    #[test]
    fn multipartite_shapes() {
        let m = complete_multipartite(2, 2, 2, 2).unwrap();
        assert_eq!((m.len(), m.edge_count()), (8, 24));
        let single = complete_multipartite(1, 0, 0, 0).unwrap();
        assert_eq!((single.len(), single.edge_count()), (1, 0));
        assert!(complete_multipartite(0, 0, 0, 0).is_err());
        assert_eq!(complete_multipartite(1, 1, 1, 2).unwrap().edge_count(), 9);
    }

    #[test]
    fn random_maps() {
        let k4 = random_planar_map(4, 99).unwrap();
        assert!(k4.is_complete());
        assert_eq!(random_planar_map(17, 3).unwrap(), random_planar_map(17, 3).unwrap());
        let m = random_planar_map(20, 5).unwrap();
        assert_eq!(m.edge_count(), 3 * 20 - 6);
        assert!(random_planar_map(3, 0).is_err());
        let tri = random_triangulation(15, 8).unwrap();
        assert!(euler_check(&tri.embedding()).consistent);
    }

    #[test]
    fn flower_shape() {
        let fl = flower_counterexample();
        assert_eq!(fl.map.len(), 7);
        assert_eq!(fl.sub.len(), 6);
        assert_eq!(fl.map.degree(fl.map.id("C").unwrap()), 6);
        for p in ["P1", "P2", "P3", "P4", "P5"] {
            assert_eq!(fl.map.degree(fl.map.id(p).unwrap()), 2);
        }
        let json = serde_json::to_string(&fl.to_json()).unwrap();
        let back = FlowerFixture::from_json(&serde_json::from_str(&json).unwrap()).unwrap();
        assert_eq!(back, fl);
    }
}
