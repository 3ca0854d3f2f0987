//! The quadrangle club of a polyhedral graph.
//!
//! The club of a polyhedral graph has one vertex per point, per arc, and
//! per face. Each arc `a` with faces `L` and `R` contributes an edge from
//! each side face into `a`, and each face receives an edge from every
//! point on its boundary. An edge into an arc is coloured by the opposite
//! side's face colour; an edge into a face is coloured by that face's own
//! colour. Around every arc the two length-2 paths through `L` and through
//! `R` to a common endpoint commute, giving two squares per arc: one
//! through the arc's range point and one through its source point.

use std::collections::HashMap;

use crate::facecolour::FaceColouring;
use crate::polyhedral::{PolyhedralGraph, Side};
use crate::skeleton::{
    check_associative, check_complete, ColouredGraph, EdgeIx, Square, SquareSet,
};

/// Which side face of an arc a club edge comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FaceSide {
    Left,
    Right,
}

/// Which endpoint of an arc a half-arc square runs through.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArcEnd {
    Range,
    Source,
}

/// Where a club edge comes from in the polyhedral graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClubEdge {
    /// Edge from a side face into its arc.
    ArcToFace {
        arc: String,
        face: String,
        side: FaceSide,
    },
    /// Edge from a boundary point into a face.
    FaceToPoint { face: String, point: String },
}

/// The half-arc a club square encodes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfArc {
    pub arc: String,
    pub end: ArcEnd,
}

/// Problems while constructing a club.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ClubError {
    #[error("the graph carries no face data; trace or supply an embedding first")]
    EmbeddingRequired,
    #[error("arc {arc} is a loop; clubs are defined for loop-free graphs")]
    LoopArc { arc: String },
    #[error("colouring covers {assigned} faces but the graph has {faces}")]
    ColouringMismatch { assigned: usize, faces: usize },
    #[error("arc {arc} has the same colour on both sides")]
    ColourClash { arc: String },
    #[error("generated id {id} names two different club items")]
    NameCollision { id: String },
    #[error("face colouring failed: {0}")]
    Colouring(#[from] crate::facecolour::ColouringError),
}

/// A coloured graph with complete squares built from a polyhedral graph.
#[derive(Clone, Debug)]
pub struct QuadrangleClub {
    graph: ColouredGraph,
    squares: SquareSet,
    edge_kinds: Vec<ClubEdge>,
    square_kinds: Vec<HalfArc>,
    weights: Vec<u32>,
}

impl QuadrangleClub {
    pub fn graph(&self) -> &ColouredGraph {
        &self.graph
    }

    pub fn squares(&self) -> &SquareSet {
        &self.squares
    }

    /// Provenance of each club edge, indexed like the edges.
    pub fn edge_kinds(&self) -> &[ClubEdge] {
        &self.edge_kinds
    }

    /// Provenance of each square, indexed like the squares.
    pub fn square_kinds(&self) -> &[HalfArc] {
        &self.square_kinds
    }

    /// Spanning-tree weights, indexed like the edges.
    ///
    /// Weight 2 goes to edges into an arc from its right face and to edges
    /// into a face `f` from a point `p` such that some arc has right face
    /// `f` and endpoint `p`; every other edge has weight 1.
    pub fn weights(&self) -> &[u32] {
        &self.weights
    }
}

/// Builds the quadrangle club of a face-coloured polyhedral graph.
///
/// Vertices are namespaced `p:`, `a:`, and `f:`; edge ids are `(x,y)`
/// pairs of raw names. Edges are emitted arc by arc in declaration order:
/// right-face edge, right face to range point, right face to source point,
/// then the same through the left face, deduplicating face-to-point edges
/// on repeat visits. Each arc then yields its two half-arc squares, the
/// one through the range point first.
pub fn build_club(
    poly: &PolyhedralGraph,
    colouring: &FaceColouring,
) -> Result<QuadrangleClub, ClubError> {
    let embedding = poly.embedding().ok_or(ClubError::EmbeddingRequired)?;
    let face_count = embedding.face_count();
    let assigned = colouring.assignments().count();
    if assigned != face_count {
        return Err(ClubError::ColouringMismatch {
            assigned,
            faces: face_count,
        });
    }
    for a in 0..poly.arc_count() {
        let arc = poly.arc(a);
        if arc.range == arc.source {
            return Err(ClubError::LoopArc {
                arc: arc.id.clone(),
            });
        }
        let Side { left, right } = embedding.side(a);
        if colouring.colour_of(left) == colouring.colour_of(right) {
            return Err(ClubError::ColourClash {
                arc: arc.id.clone(),
            });
        }
    }

    let mut graph = ColouredGraph::default();
    let collide = |id: String| ClubError::NameCollision { id };
    for p in 0..poly.point_count() {
        graph
            .add_vertex(format!("p:{}", poly.point_id(p)))
            .map_err(|_| collide(format!("p:{}", poly.point_id(p))))?;
    }
    for a in 0..poly.arc_count() {
        graph
            .add_vertex(format!("a:{}", poly.arc(a).id))
            .map_err(|_| collide(format!("a:{}", poly.arc(a).id)))?;
    }
    for f in 0..face_count {
        graph
            .add_vertex(format!("f:{}", embedding.face_id(f)))
            .map_err(|_| collide(format!("f:{}", embedding.face_id(f))))?;
    }

    let mut edge_kinds = Vec::new();
    let mut face_point_edges: HashMap<(usize, usize), EdgeIx> = HashMap::new();
    let mut squares = Vec::new();
    let mut square_kinds = Vec::new();

    for a in 0..poly.arc_count() {
        let arc = poly.arc(a);
        let Side { left, right } = embedding.side(a);
        let mut side_edges = [0 as EdgeIx; 2];
        let mut end_edges = [[0 as EdgeIx; 2]; 2];
        for (slot, (face, opposite, side)) in [
            (right, left, FaceSide::Right),
            (left, right, FaceSide::Left),
        ]
        .into_iter()
        .enumerate()
        {
            let face_id = embedding.face_id(face);
            let arc_edge_id = format!("({},{})", arc.id, face_id);
            let ix = graph
                .add_edge(
                    arc_edge_id.clone(),
                    &format!("a:{}", arc.id),
                    &format!("f:{face_id}"),
                    colouring.colour_of(opposite).value(),
                )
                .map_err(|_| collide(arc_edge_id))?;
            edge_kinds.push(ClubEdge::ArcToFace {
                arc: arc.id.clone(),
                face: face_id.to_owned(),
                side,
            });
            side_edges[slot] = ix;
            for (end_slot, point) in [arc.range, arc.source].into_iter().enumerate() {
                let ix = match face_point_edges.get(&(face, point)) {
                    Some(&ix) => ix,
                    None => {
                        let point_id = poly.point_id(point);
                        let edge_id = format!("({face_id},{point_id})");
                        let ix = graph
                            .add_edge(
                                edge_id.clone(),
                                &format!("f:{face_id}"),
                                &format!("p:{point_id}"),
                                colouring.colour_of(face).value(),
                            )
                            .map_err(|_| collide(edge_id))?;
                        edge_kinds.push(ClubEdge::FaceToPoint {
                            face: face_id.to_owned(),
                            point: point_id.to_owned(),
                        });
                        face_point_edges.insert((face, point), ix);
                        ix
                    }
                };
                end_edges[slot][end_slot] = ix;
            }
        }
        for (end_slot, end) in [ArcEnd::Range, ArcEnd::Source].into_iter().enumerate() {
            squares.push(Square {
                top: [side_edges[0], end_edges[0][end_slot]],
                bottom: [side_edges[1], end_edges[1][end_slot]],
            });
            square_kinds.push(HalfArc {
                arc: arc.id.clone(),
                end,
            });
        }
    }

    let mut weights = Vec::with_capacity(graph.edge_count());
    for kind in &edge_kinds {
        let heavy = match kind {
            ClubEdge::ArcToFace { side, .. } => *side == FaceSide::Right,
            ClubEdge::FaceToPoint { face, point } => (0..poly.arc_count()).any(|b| {
                let arc = poly.arc(b);
                let side = embedding.side(b);
                embedding.face_id(side.right) == face
                    && [arc.range, arc.source]
                        .iter()
                        .any(|&p| poly.point_id(p) == point)
            }),
        };
        weights.push(if heavy { 2 } else { 1 });
    }

    let squares =
        SquareSet::new(&graph, squares).expect("club squares commute by construction");
    Ok(QuadrangleClub {
        graph,
        squares,
        edge_kinds,
        square_kinds,
        weights,
    })
}

/// Verification outcome for the club of a polyhedral graph.
///
/// Collects the checks under which a coloured graph with squares presents
/// a higher-rank graph, plus the structural facts specific to clubs.
#[derive(Clone, Debug)]
pub struct ClubCertificate {
    pub completeness: crate::skeleton::CompletenessReport,
    pub associativity: crate::skeleton::AssociativityReport,
    pub connected: bool,
    pub singly_connected: crate::skeleton::SinglyConnectedReport,
    pub square_count_is_twice_arcs: bool,
    pub euler_identity: bool,
}

impl ClubCertificate {
    /// True when every check holds.
    pub fn all_pass(&self) -> bool {
        self.completeness.is_complete()
            && self.associativity.is_associative()
            && self.connected
            && self.singly_connected.holds()
            && self.square_count_is_twice_arcs
            && self.euler_identity
    }
}

/// Runs the full battery of club checks.
pub fn verify_club(poly: &PolyhedralGraph, club: &QuadrangleClub) -> ClubCertificate {
    let graph = club.graph();
    let squares = club.squares();
    ClubCertificate {
        completeness: check_complete(graph, squares),
        associativity: check_associative(graph, squares),
        connected: graph.is_connected(),
        singly_connected: crate::skeleton::is_singly_connected(graph, squares)
            .expect("club edges point from faces into arcs and from points into faces"),
        square_count_is_twice_arcs: squares.len() == 2 * poly.arc_count(),
        euler_identity: euler_identity(graph),
    }
}

/// Colours the faces with at most four colours and builds the club.
///
/// Convenience composition of [`crate::facecolour::colour_faces`] and
/// [`build_club`] for graphs that already carry an embedding.
pub fn standard_club(poly: &PolyhedralGraph) -> Result<QuadrangleClub, ClubError> {
    let colouring = crate::facecolour::colour_faces(poly, 4)?;
    build_club(poly, &colouring)
}

/// The counting identity |E¹| − 2|E⁰| + 4 = 0.
///
/// Holds for every club: with |A| arcs the club has |P| + |A| + |F|
/// vertices and 2|A| + Σ|∂f| edges, and both Euler's relation and the
/// boundary sum telescope to the same quantity.
pub fn euler_identity(graph: &ColouredGraph) -> bool {
    let e = graph.edge_count() as i64;
    let v = graph.vertex_count() as i64;
    e - 2 * v + 4 == 0
}
