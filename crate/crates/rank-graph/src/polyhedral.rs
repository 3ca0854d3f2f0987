//! Polyhedral graphs: connected plane multigraphs given by points, arcs,
//! and either a rotation system or an explicit face side map.
//!
//! An arc is a directed edge between points with a range `r(a)` and a source
//! `s(a)`. An embedding assigns every arc a left face `L(a)` and a right
//! face `R(a)`, where left is taken walking from `r(a)` to `s(a)` with
//! rotations listed counter-clockwise. Faces can be supplied directly or
//! traced from a rotation system; a face's boundary points are the
//! endpoints of its incident arcs. Parallel arcs are allowed (the lune
//! graphs consist of nothing else); loops are not.

use std::collections::{BTreeSet, HashMap};

use crate::util::UnionFind;

/// Index of a point inside a [`PolyhedralGraph`].
pub type PointIx = usize;

/// Index of an arc inside a [`PolyhedralGraph`].
pub type ArcIx = usize;

/// Index of a face inside an [`Embedding`].
pub type FaceIx = usize;

/// A directed arc between points.
#[derive(Clone, Debug)]
pub struct Arc {
    pub id: String,
    pub range: PointIx,
    pub source: PointIx,
}

/// The two faces of an arc: `left` walking from range to source, and `right`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Side {
    pub left: FaceIx,
    pub right: FaceIx,
}

/// Face data for a polyhedral graph: face ids plus a side map per arc.
#[derive(Clone, Debug)]
pub struct Embedding {
    face_ids: Vec<String>,
    face_lookup: HashMap<String, FaceIx>,
    side: Vec<Side>,
}

impl Embedding {
    pub fn face_count(&self) -> usize {
        self.face_ids.len()
    }

    pub fn face_id(&self, f: FaceIx) -> &str {
        &self.face_ids[f]
    }

    pub fn face_ids(&self) -> impl Iterator<Item = &str> {
        self.face_ids.iter().map(String::as_str)
    }

    pub fn face_ix(&self, id: &str) -> Option<FaceIx> {
        self.face_lookup.get(id).copied()
    }

    /// The left and right faces of an arc.
    pub fn side(&self, arc: ArcIx) -> Side {
        self.side[arc]
    }
}

/// Construction-time problems: unresolved or duplicate ids, absent data.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyhedralError {
    #[error("duplicate point id {id}")]
    DuplicatePoint { id: String },
    #[error("duplicate arc id {id}")]
    DuplicateArc { id: String },
    #[error("duplicate face id {id}")]
    DuplicateFace { id: String },
    #[error("arc {arc} references unknown point {point}")]
    UnknownPoint { arc: String, point: String },
    #[error("rotation entry references unknown point {point}")]
    UnknownRotationPoint { point: String },
    #[error("rotation at point {point} references unknown arc {arc}")]
    UnknownRotationArc { point: String, arc: String },
    #[error("side map references unknown arc {arc}")]
    UnknownSideArc { arc: String },
    #[error("side map for arc {arc} references unknown face {face}")]
    UnknownFace { arc: String, face: String },
    #[error("side map is missing arc {arc}")]
    SideMissingArc { arc: String },
    #[error("no rotation system present; faces cannot be traced")]
    RotationRequired,
    #[error("no face data present; supply a side map or trace a rotation system")]
    EmbeddingRequired,
    #[error("face tracing does not support the loop arc {arc}")]
    LoopUnsupported { arc: String },
    #[error("rotation at point {point} does not list its incident arc ends exactly once")]
    RotationNotIncidence { point: String },
}

/// A single failed validity invariant; an empty report means a valid graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// An arc with equal endpoints.
    LoopArc { arc: String },
    /// The underlying graph is not connected.
    Disconnected,
    /// A point meeting fewer than two arc ends.
    LowValency { point: String, valency: usize },
    /// Face count differs from `|A| - |P| + 2`.
    FaceCountMismatch {
        points: usize,
        arcs: usize,
        faces: usize,
    },
    /// An arc with the same face on both sides.
    EqualSides { arc: String },
    /// A declared face with no incident arc.
    IsolatedFace { face: String },
    /// A rotation entry that is not a permutation of the incident arc ends.
    RotationNotIncidence { point: String },
    /// Rotation system and side map describe different embeddings.
    EmbeddingMismatch { arc: String },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::LoopArc { arc } => write!(f, "arc {arc} is a loop"),
            Violation::Disconnected => write!(f, "the graph is not connected"),
            Violation::LowValency { point, valency } => {
                write!(f, "point {point} has valency {valency}, below 2")
            }
            Violation::FaceCountMismatch {
                points,
                arcs,
                faces,
            } => write!(
                f,
                "face count {faces} differs from |A| - |P| + 2 = {}",
                *arcs as isize - *points as isize + 2
            ),
            Violation::EqualSides { arc } => {
                write!(f, "arc {arc} has the same face on both sides")
            }
            Violation::IsolatedFace { face } => {
                write!(f, "face {face} has no incident arc")
            }
            Violation::RotationNotIncidence { point } => {
                write!(
                    f,
                    "rotation at point {point} does not list its incident arc ends exactly once"
                )
            }
            Violation::EmbeddingMismatch { arc } => {
                write!(
                    f,
                    "rotation system and side map disagree about the faces of arc {arc}"
                )
            }
        }
    }
}

/// All invariant failures found by [`PolyhedralGraph::validate`].
#[derive(Debug, Clone, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl std::fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_valid() {
            return write!(f, "valid");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// The dual graph: one vertex per face, one edge per arc joining its two
/// sides. Parallel dual edges are kept, one per arc.
#[derive(Clone, Debug)]
pub struct DualGraph {
    pub face_ids: Vec<String>,
    /// One entry per arc: `(left face, right face, arc index)`.
    pub edges: Vec<(FaceIx, FaceIx, ArcIx)>,
}

/// A connected plane multigraph with optional rotation and face data.
#[derive(Clone, Debug, Default)]
pub struct PolyhedralGraph {
    point_ids: Vec<String>,
    point_lookup: HashMap<String, PointIx>,
    arcs: Vec<Arc>,
    arc_lookup: HashMap<String, ArcIx>,
    rotation: Option<Vec<Vec<ArcIx>>>,
    embedding: Option<Embedding>,
}

impl PolyhedralGraph {
    /// Builds the bare graph from point ids and `(arc id, range, source)` rows.
    pub fn new(
        points: Vec<String>,
        arcs: Vec<(String, String, String)>,
    ) -> Result<Self, PolyhedralError> {
        let mut graph = PolyhedralGraph::default();
        for id in points {
            if graph.point_lookup.contains_key(&id) {
                return Err(PolyhedralError::DuplicatePoint { id });
            }
            graph.point_lookup.insert(id.clone(), graph.point_ids.len());
            graph.point_ids.push(id);
        }
        for (id, range, source) in arcs {
            if graph.arc_lookup.contains_key(&id) {
                return Err(PolyhedralError::DuplicateArc { id });
            }
            let range =
                *graph
                    .point_lookup
                    .get(&range)
                    .ok_or_else(|| PolyhedralError::UnknownPoint {
                        arc: id.clone(),
                        point: range.clone(),
                    })?;
            let source =
                *graph
                    .point_lookup
                    .get(&source)
                    .ok_or_else(|| PolyhedralError::UnknownPoint {
                        arc: id.clone(),
                        point: source.clone(),
                    })?;
            graph.arc_lookup.insert(id.clone(), graph.arcs.len());
            graph.arcs.push(Arc { id, range, source });
        }
        Ok(graph)
    }

    /// Attaches a rotation system: per point, its incident arcs in
    /// counter-clockwise order.
    pub fn with_rotation(
        mut self,
        rotation: Vec<(String, Vec<String>)>,
    ) -> Result<Self, PolyhedralError> {
        let mut table = vec![Vec::new(); self.point_ids.len()];
        for (point, arcs) in rotation {
            let p = *self
                .point_lookup
                .get(&point)
                .ok_or(PolyhedralError::UnknownRotationPoint { point: point.clone() })?;
            let mut list = Vec::with_capacity(arcs.len());
            for arc in arcs {
                let ix = *self
                    .arc_lookup
                    .get(&arc)
                    .ok_or_else(|| PolyhedralError::UnknownRotationArc {
                        point: point.clone(),
                        arc: arc.clone(),
                    })?;
                list.push(ix);
            }
            table[p] = list;
        }
        self.rotation = Some(table);
        Ok(self)
    }

    /// Attaches explicit face data: face ids plus `(arc, left, right)` rows
    /// covering every arc.
    pub fn with_sides(
        mut self,
        faces: Vec<String>,
        sides: Vec<(String, String, String)>,
    ) -> Result<Self, PolyhedralError> {
        let mut face_ids = Vec::new();
        let mut face_lookup = HashMap::new();
        for id in faces {
            if face_lookup.contains_key(&id) {
                return Err(PolyhedralError::DuplicateFace { id });
            }
            face_lookup.insert(id.clone(), face_ids.len());
            face_ids.push(id);
        }
        let mut side: Vec<Option<Side>> = vec![None; self.arcs.len()];
        for (arc, left, right) in sides {
            let a = *self
                .arc_lookup
                .get(&arc)
                .ok_or_else(|| PolyhedralError::UnknownSideArc { arc: arc.clone() })?;
            let left = *face_lookup
                .get(&left)
                .ok_or_else(|| PolyhedralError::UnknownFace {
                    arc: arc.clone(),
                    face: left.clone(),
                })?;
            let right = *face_lookup
                .get(&right)
                .ok_or_else(|| PolyhedralError::UnknownFace {
                    arc: arc.clone(),
                    face: right.clone(),
                })?;
            side[a] = Some(Side { left, right });
        }
        let side = side
            .into_iter()
            .enumerate()
            .map(|(a, s)| {
                s.ok_or_else(|| PolyhedralError::SideMissingArc {
                    arc: self.arcs[a].id.clone(),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        self.embedding = Some(Embedding {
            face_ids,
            face_lookup,
            side,
        });
        Ok(self)
    }

    pub fn point_count(&self) -> usize {
        self.point_ids.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn point_id(&self, p: PointIx) -> &str {
        &self.point_ids[p]
    }

    pub fn point_ids(&self) -> impl Iterator<Item = &str> {
        self.point_ids.iter().map(String::as_str)
    }

    pub fn point_ix(&self, id: &str) -> Option<PointIx> {
        self.point_lookup.get(id).copied()
    }

    pub fn arc(&self, a: ArcIx) -> &Arc {
        &self.arcs[a]
    }

    pub fn arcs(&self) -> impl Iterator<Item = &Arc> {
        self.arcs.iter()
    }

    pub fn arc_ix(&self, id: &str) -> Option<ArcIx> {
        self.arc_lookup.get(id).copied()
    }

    pub fn rotation(&self) -> Option<&Vec<Vec<ArcIx>>> {
        self.rotation.as_ref()
    }

    pub fn embedding(&self) -> Option<&Embedding> {
        self.embedding.as_ref()
    }

    /// Number of arc ends meeting a point; a loop contributes two.
    pub fn valency(&self, p: PointIx) -> usize {
        self.arcs
            .iter()
            .map(|a| usize::from(a.range == p) + usize::from(a.source == p))
            .sum()
    }

    /// Arcs incident to a face, ascending by arc index; an arc with the face
    /// on both sides appears once.
    pub fn face_arcs(&self, face: FaceIx) -> Vec<ArcIx> {
        let embedding = self.embedding.as_ref().expect("face data present");
        (0..self.arcs.len())
            .filter(|&a| {
                let side = embedding.side(a);
                side.left == face || side.right == face
            })
            .collect()
    }

    /// Boundary points of a face: the endpoints of its incident arcs.
    pub fn boundary_points(&self, face: FaceIx) -> BTreeSet<PointIx> {
        self.face_arcs(face)
            .into_iter()
            .flat_map(|a| [self.arcs[a].range, self.arcs[a].source])
            .collect()
    }

    /// Checks every validity invariant and reports all failures.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        for arc in &self.arcs {
            if arc.range == arc.source {
                violations.push(Violation::LoopArc {
                    arc: arc.id.clone(),
                });
            }
        }
        for p in 0..self.point_count() {
            let valency = self.valency(p);
            if valency < 2 {
                violations.push(Violation::LowValency {
                    point: self.point_ids[p].clone(),
                    valency,
                });
            }
        }
        if self.point_count() > 0 {
            let mut uf = UnionFind::new(self.point_count());
            for arc in &self.arcs {
                uf.unite(arc.range, arc.source);
            }
            let root = uf.find(0);
            if (1..self.point_count()).any(|p| uf.find(p) != root) {
                violations.push(Violation::Disconnected);
            }
        }
        if let Some(rotation) = &self.rotation {
            for p in 0..self.point_count() {
                let mut expected: Vec<ArcIx> = (0..self.arcs.len())
                    .filter(|&a| self.arcs[a].range == p || self.arcs[a].source == p)
                    .collect();
                let mut got = rotation[p].clone();
                expected.sort_unstable();
                got.sort_unstable();
                if expected != got {
                    violations.push(Violation::RotationNotIncidence {
                        point: self.point_ids[p].clone(),
                    });
                }
            }
        }
        if let Some(embedding) = &self.embedding {
            for (a, arc) in self.arcs.iter().enumerate() {
                let side = embedding.side(a);
                if side.left == side.right {
                    violations.push(Violation::EqualSides {
                        arc: arc.id.clone(),
                    });
                }
            }
            let mut touched = vec![false; embedding.face_count()];
            for a in 0..self.arcs.len() {
                touched[embedding.side(a).left] = true;
                touched[embedding.side(a).right] = true;
            }
            for (f, seen) in touched.iter().enumerate() {
                if !seen {
                    violations.push(Violation::IsolatedFace {
                        face: embedding.face_id(f).to_owned(),
                    });
                }
            }
            let expected = self.arcs.len() as isize - self.point_count() as isize + 2;
            if embedding.face_count() as isize != expected {
                violations.push(Violation::FaceCountMismatch {
                    points: self.point_count(),
                    arcs: self.arcs.len(),
                    faces: embedding.face_count(),
                });
            }
            if self.rotation.is_some()
                && violations
                    .iter()
                    .all(|v| !matches!(v, Violation::RotationNotIncidence { .. } | Violation::LoopArc { .. }))
            {
                if let Ok(traced) = self.trace_faces() {
                    violations.extend(self.compare_embeddings(&traced));
                }
            }
        }
        ValidationReport { violations }
    }

    /// Checks that the traced embedding matches the supplied one, up to a
    /// renaming of faces.
    fn compare_embeddings(&self, traced: &PolyhedralGraph) -> Vec<Violation> {
        let supplied = self.embedding.as_ref().expect("side map present");
        let derived = traced.embedding.as_ref().expect("tracing filled faces");
        if supplied.face_count() != derived.face_count() {
            return vec![Violation::EmbeddingMismatch {
                arc: self.arcs.first().map(|a| a.id.clone()).unwrap_or_default(),
            }];
        }
        let mut map: Vec<Option<FaceIx>> = vec![None; derived.face_count()];
        let mut image: Vec<bool> = vec![false; supplied.face_count()];
        for a in 0..self.arcs.len() {
            let d = derived.side(a);
            let s = supplied.side(a);
            for (from, to) in [(d.left, s.left), (d.right, s.right)] {
                match map[from] {
                    None => {
                        if image[to] {
                            return vec![Violation::EmbeddingMismatch {
                                arc: self.arcs[a].id.clone(),
                            }];
                        }
                        map[from] = Some(to);
                        image[to] = true;
                    }
                    Some(existing) if existing == to => {}
                    Some(_) => {
                        return vec![Violation::EmbeddingMismatch {
                            arc: self.arcs[a].id.clone(),
                        }];
                    }
                }
            }
        }
        Vec::new()
    }

    /// Traces faces from the rotation system and returns a copy of the
    /// graph carrying the derived embedding.
    ///
    /// Faces are numbered `r0, r1, ...` in order of their smallest incident
    /// arc, walks starting at that arc. The face left of the walk from
    /// `r(a)` to `s(a)` becomes `L(a)`.
    pub fn trace_faces(&self) -> Result<Self, PolyhedralError> {
        let rotation = self
            .rotation
            .as_ref()
            .ok_or(PolyhedralError::RotationRequired)?;
        for arc in &self.arcs {
            if arc.range == arc.source {
                return Err(PolyhedralError::LoopUnsupported {
                    arc: arc.id.clone(),
                });
            }
        }
        for p in 0..self.point_count() {
            let mut expected: Vec<ArcIx> = (0..self.arcs.len())
                .filter(|&a| self.arcs[a].range == p || self.arcs[a].source == p)
                .collect();
            let mut got = rotation[p].clone();
            expected.sort_unstable();
            got.sort_unstable();
            if expected != got {
                return Err(PolyhedralError::RotationNotIncidence {
                    point: self.point_ids[p].clone(),
                });
            }
        }
        // A dart is (arc, forward); forward darts run r(a) -> s(a). The face
        // left of a dart continues along the predecessor of the arrival arc
        // in the counter-clockwise rotation at the arrival point.
        let dart_count = 2 * self.arcs.len();
        let dart_of = |arc: ArcIx, forward: bool| -> usize { 2 * arc + usize::from(forward) };
        let next_dart = |arc: ArcIx, forward: bool| -> (ArcIx, bool) {
            let arrival = if forward {
                self.arcs[arc].source
            } else {
                self.arcs[arc].range
            };
            let ring = &rotation[arrival];
            let pos = ring
                .iter()
                .position(|&b| b == arc)
                .expect("rotation covers incident arcs");
            let next = ring[(pos + ring.len() - 1) % ring.len()];
            // The next dart departs from `arrival`.
            let forward_next = self.arcs[next].range == arrival;
            (next, forward_next)
        };
        let mut face_of_dart = vec![usize::MAX; dart_count];
        let mut face_count = 0usize;
        for arc in 0..self.arcs.len() {
            for forward in [true, false] {
                if face_of_dart[dart_of(arc, forward)] != usize::MAX {
                    continue;
                }
                let face = face_count;
                face_count += 1;
                let (mut a, mut fwd) = (arc, forward);
                loop {
                    let d = dart_of(a, fwd);
                    if face_of_dart[d] != usize::MAX {
                        break;
                    }
                    face_of_dart[d] = face;
                    let (na, nf) = next_dart(a, fwd);
                    (a, fwd) = (na, nf);
                }
            }
        }
        let face_ids: Vec<String> = (0..face_count).map(|i| format!("r{i}")).collect();
        let mut face_lookup = HashMap::new();
        for (ix, id) in face_ids.iter().enumerate() {
            face_lookup.insert(id.clone(), ix);
        }
        let side: Vec<Side> = (0..self.arcs.len())
            .map(|a| Side {
                left: face_of_dart[dart_of(a, true)],
                right: face_of_dart[dart_of(a, false)],
            })
            .collect();
        let mut traced = self.clone();
        traced.embedding = Some(Embedding {
            face_ids,
            face_lookup,
            side,
        });
        Ok(traced)
    }

    /// The dual graph over the faces, one dual edge per arc.
    pub fn dual(&self) -> Result<DualGraph, PolyhedralError> {
        let embedding = self
            .embedding
            .as_ref()
            .ok_or(PolyhedralError::EmbeddingRequired)?;
        Ok(DualGraph {
            face_ids: embedding.face_ids.clone(),
            edges: (0..self.arcs.len())
                .map(|a| {
                    let side = embedding.side(a);
                    (side.left, side.right, a)
                })
                .collect(),
        })
    }
}
