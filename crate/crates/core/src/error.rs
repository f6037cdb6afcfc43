use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("map has no faces")]
    EmptyMap,
    #[error("duplicate face id `{0}`")]
    DuplicateFace(String),
    #[error("face `{0}` cannot be adjacent to itself")]
    SelfPair(String),
    #[error("unknown face `{0}`")]
    UnknownFace(String),
    #[error("face index {0} is out of range")]
    FaceOutOfRange(usize),

    #[error("palette must contain at least one color")]
    EmptyPalette,
    #[error("color index {color} is outside a palette of {palette}")]
    ColorOutOfRange { color: usize, palette: usize },
    #[error("coloring covers {found} faces but the map has {expected}")]
    ColoringSizeMismatch { expected: usize, found: usize },
    #[error("face `{0}` is already colored")]
    AlreadyAssigned(String),
    #[error("precoloring is improper: `{0}` and `{1}` are adjacent and share a color")]
    ImproperPrecoloring(String, String),
    #[error("precoloring must assign exactly the faces of the fixed subset (offending face `{0}`)")]
    PrecoloringDomain(String),
    #[error("face order is not a permutation of the map's faces")]
    InvalidOrder,

    #[error("embedding has no vertices")]
    EmptyEmbedding,
    #[error("edge {0}-{1} is listed at only one endpoint")]
    DanglingEdge(String, String),
    #[error("loop at vertex `{0}`")]
    Loop(String),
    #[error("parallel edge {0}-{1}")]
    ParallelEdge(String, String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("face cycles do not describe a closed surface: {0}")]
    InvalidFaces(String),

    #[error("edge bound needs at least 3 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("voxel {voxel:?} of region `{region}` lies outside the grid")]
    VoxelOutOfBounds { region: String, voxel: [i64; 3] },
    #[error("regions `{0}` and `{1}` overlap")]
    OverlappingRegions(String, String),
    #[error("region `{0}` is empty")]
    EmptyRegion(String),
    #[error("region `{0}` is not face-connected")]
    DisconnectedRegion(String),

    #[error("unknown claim `{0}`")]
    UnknownClaim(String),

    #[error("cannot read {path}: {source}")]
    ReadFile { path: String, source: std::io::Error },
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
