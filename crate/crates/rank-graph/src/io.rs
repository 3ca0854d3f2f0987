//! JSON serialization for the three on-disk formats.
//!
//! `polyhedral.v1` holds points, arcs and an embedding given as a rotation
//! table, a side table, or both. `colouredgraph.v1` holds vertices, edges
//! and squares; club files add a `provenance` block naming the arc and
//! half each square came from. `facecolouring.v1` is a plain face-to-index
//! object. All emitters order map keys, so output is deterministic.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::club::{ArcEnd, QuadrangleClub};
use crate::facecolour::FaceColouring;
use crate::polyhedral::{PolyhedralError, PolyhedralGraph};
use crate::skeleton::{ColouredGraph, SkeletonError, Square, SquareSet};

/// Failures while reading or writing the on-disk formats.
#[derive(Debug, Error)]
pub enum IoError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Graph(#[from] SkeletonError),
    #[error(transparent)]
    Polyhedral(#[from] PolyhedralError),
    #[error("the file carries neither a rotation nor a side table")]
    EmbeddingMissing,
    #[error("arc {arc} is missing from the side table")]
    MissingSide { arc: String },
    #[error("square {index} references unknown edge {edge}")]
    UnknownSquareEdge { index: usize, edge: String },
}

#[derive(Serialize, Deserialize)]
struct PolyhedralFile {
    points: Vec<String>,
    arcs: Vec<ArcRow>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    rotation: Option<BTreeMap<String, Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    side: Option<BTreeMap<String, SideRow>>,
}

#[derive(Serialize, Deserialize)]
struct ArcRow {
    id: String,
    r: String,
    s: String,
}

#[derive(Serialize, Deserialize)]
struct SideRow {
    #[serde(rename = "L")]
    left: String,
    #[serde(rename = "R")]
    right: String,
}

#[derive(Serialize, Deserialize)]
struct ColouredGraphFile {
    vertices: Vec<String>,
    edges: Vec<EdgeRow>,
    squares: Vec<SquareRow>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    provenance: Option<Vec<ProvenanceRow>>,
}

#[derive(Serialize, Deserialize)]
struct EdgeRow {
    id: String,
    r: String,
    s: String,
    colour: u8,
}

#[derive(Serialize, Deserialize)]
struct SquareRow {
    top: [String; 2],
    bottom: [String; 2],
}

#[derive(Serialize, Deserialize)]
struct ProvenanceRow {
    arc: String,
    side: String,
}

/// Serializes a polyhedral graph as `polyhedral.v1`, emitting whichever
/// of the rotation and side tables the graph carries.
pub fn polyhedral_to_json(graph: &PolyhedralGraph) -> String {
    let points: Vec<String> = (0..graph.point_count())
        .map(|p| graph.point_id(p).to_owned())
        .collect();
    let arcs: Vec<ArcRow> = (0..graph.arc_count())
        .map(|a| {
            let arc = graph.arc(a);
            ArcRow {
                id: arc.id.clone(),
                r: graph.point_id(arc.range).to_owned(),
                s: graph.point_id(arc.source).to_owned(),
            }
        })
        .collect();
    let rotation = graph.rotation().map(|rings| {
        (0..graph.point_count())
            .map(|p| {
                (
                    graph.point_id(p).to_owned(),
                    rings[p]
                        .iter()
                        .map(|&a| graph.arc(a).id.clone())
                        .collect(),
                )
            })
            .collect()
    });
    let side = graph.embedding().map(|embedding| {
        (0..graph.arc_count())
            .map(|a| {
                let side = embedding.side(a);
                (
                    graph.arc(a).id.clone(),
                    SideRow {
                        left: embedding.face_id(side.left).to_owned(),
                        right: embedding.face_id(side.right).to_owned(),
                    },
                )
            })
            .collect()
    });
    let file = PolyhedralFile {
        points,
        arcs,
        rotation,
        side,
    };
    serde_json::to_string_pretty(&file).expect("polyhedral files serialize")
}

/// Parses a `polyhedral.v1` document. The file must carry a rotation
/// table, a side table, or both.
pub fn polyhedral_from_json(text: &str) -> Result<PolyhedralGraph, IoError> {
    let file: PolyhedralFile = serde_json::from_str(text)?;
    if file.rotation.is_none() && file.side.is_none() {
        return Err(IoError::EmbeddingMissing);
    }
    let arcs: Vec<(String, String, String)> = file
        .arcs
        .iter()
        .map(|row| (row.id.clone(), row.r.clone(), row.s.clone()))
        .collect();
    let mut graph = PolyhedralGraph::new(file.points, arcs)?;
    if let Some(side) = &file.side {
        // Face ids are collected in first-appearance order, scanning the
        // arcs as declared and each arc's left face before its right.
        let mut faces: Vec<String> = Vec::new();
        let mut rows = Vec::new();
        for arc in &file.arcs {
            let row = side
                .get(&arc.id)
                .ok_or_else(|| IoError::MissingSide { arc: arc.id.clone() })?;
            for face in [&row.left, &row.right] {
                if !faces.iter().any(|f| f == face) {
                    faces.push(face.clone());
                }
            }
            rows.push((arc.id.clone(), row.left.clone(), row.right.clone()));
        }
        graph = graph.with_sides(faces, rows)?;
    }
    if let Some(rotation) = file.rotation {
        graph = graph.with_rotation(rotation.into_iter().collect())?;
    }
    Ok(graph)
}

/// Serializes a coloured graph and its squares as `colouredgraph.v1`.
pub fn coloured_graph_to_json(graph: &ColouredGraph, squares: &SquareSet) -> String {
    serde_json::to_string_pretty(&coloured_graph_file(graph, squares, None))
        .expect("coloured graph files serialize")
}

/// Serializes a club as `colouredgraph.v1` with a `provenance` block
/// recording, for each square, the arc it belongs to and which half of
/// the arc it closes: `left` for the range end, `right` for the source.
pub fn club_to_json(club: &QuadrangleClub) -> String {
    let provenance = club
        .square_kinds()
        .iter()
        .map(|half| ProvenanceRow {
            arc: half.arc.clone(),
            side: match half.end {
                ArcEnd::Range => "left".to_owned(),
                ArcEnd::Source => "right".to_owned(),
            },
        })
        .collect();
    serde_json::to_string_pretty(&coloured_graph_file(
        club.graph(),
        club.squares(),
        Some(provenance),
    ))
    .expect("club files serialize")
}

fn coloured_graph_file(
    graph: &ColouredGraph,
    squares: &SquareSet,
    provenance: Option<Vec<ProvenanceRow>>,
) -> ColouredGraphFile {
    let vertices = (0..graph.vertex_count())
        .map(|v| graph.vertex_id(v).to_owned())
        .collect();
    let edges = graph
        .edges()
        .map(|e| EdgeRow {
            id: e.id.clone(),
            r: graph.vertex_id(e.range).to_owned(),
            s: graph.vertex_id(e.source).to_owned(),
            colour: e.colour.value(),
        })
        .collect();
    let square_rows = squares
        .squares()
        .iter()
        .map(|sq| {
            let id = |e| graph.edge(e).id.clone();
            SquareRow {
                top: [id(sq.top[0]), id(sq.top[1])],
                bottom: [id(sq.bottom[0]), id(sq.bottom[1])],
            }
        })
        .collect();
    ColouredGraphFile {
        vertices,
        edges,
        squares: square_rows,
        provenance,
    }
}

/// Parses a `colouredgraph.v1` document. A club's `provenance` block is
/// accepted and ignored; the squares carry the same information.
pub fn coloured_graph_from_json(text: &str) -> Result<(ColouredGraph, SquareSet), IoError> {
    let file: ColouredGraphFile = serde_json::from_str(text)?;
    let edges = file
        .edges
        .iter()
        .map(|row| (row.id.clone(), row.r.clone(), row.s.clone(), row.colour))
        .collect();
    let graph = ColouredGraph::new(file.vertices, edges)?;
    let mut squares = Vec::new();
    for (index, row) in file.squares.iter().enumerate() {
        let resolve = |id: &String| {
            graph.edge_ix(id).ok_or_else(|| IoError::UnknownSquareEdge {
                index,
                edge: id.clone(),
            })
        };
        squares.push(Square {
            top: [resolve(&row.top[0])?, resolve(&row.top[1])?],
            bottom: [resolve(&row.bottom[0])?, resolve(&row.bottom[1])?],
        });
    }
    let squares = SquareSet::new(&graph, squares)?;
    Ok((graph, squares))
}

/// Serializes a face colouring as `facecolouring.v1`: an object from face
/// id to colour index.
pub fn colouring_to_json(graph: &PolyhedralGraph, colouring: &FaceColouring) -> String {
    let embedding = graph.embedding().expect("a colouring implies faces");
    let map: BTreeMap<String, u8> = colouring
        .assignments()
        .map(|(f, colour)| (embedding.face_id(f).to_owned(), colour.value()))
        .collect();
    serde_json::to_string_pretty(&map).expect("colouring files serialize")
}

/// Parses a `facecolouring.v1` document into a face-to-index map, ready
/// for [`crate::facecolour::validate_colouring`].
pub fn colouring_from_json(text: &str) -> Result<HashMap<String, u8>, IoError> {
    Ok(serde_json::from_str(text)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::club::standard_club;
    use crate::facecolour::{colour_faces, validate_colouring};
    use crate::fixtures::{pizza, random_apollonian, triangle};

    #[test]
    fn polyhedral_files_round_trip() {
        let poly = pizza(3);
        let text = polyhedral_to_json(&poly);
        let loaded = polyhedral_from_json(&text).unwrap();
        assert_eq!(loaded.point_count(), poly.point_count());
        assert_eq!(loaded.arc_count(), poly.arc_count());
        assert!(loaded.validate().is_valid());
        assert_eq!(polyhedral_to_json(&loaded), text);
    }

    #[test]
    fn rotation_only_files_round_trip() {
        let traced = random_apollonian(6, 5);
        let text = polyhedral_to_json(&traced);
        assert!(text.contains("\"rotation\""));
        assert!(text.contains("\"side\""));
        let loaded = polyhedral_from_json(&text).unwrap();
        assert!(loaded.validate().is_valid());
        assert_eq!(polyhedral_to_json(&loaded), text);
    }

    #[test]
    fn files_without_an_embedding_are_rejected() {
        let text = r#"{ "points": ["v1", "v2"], "arcs": [{"id": "a", "r": "v1", "s": "v2"}] }"#;
        assert!(matches!(
            polyhedral_from_json(text),
            Err(IoError::EmbeddingMissing)
        ));
    }

    #[test]
    fn coloured_graph_files_round_trip() {
        let (graph, squares) = triangle();
        let text = coloured_graph_to_json(&graph, &squares);
        let (loaded, loaded_squares) = coloured_graph_from_json(&text).unwrap();
        assert_eq!(loaded.vertex_count(), graph.vertex_count());
        assert_eq!(loaded_squares.len(), squares.len());
        assert_eq!(coloured_graph_to_json(&loaded, &loaded_squares), text);
    }

    #[test]
    fn club_files_carry_provenance_and_still_load() {
        let poly = pizza(2);
        let club = standard_club(&poly).unwrap();
        let text = club_to_json(&club);
        assert!(text.contains("\"provenance\""));
        assert!(text.contains("\"left\""));
        let (graph, squares) = coloured_graph_from_json(&text).unwrap();
        assert_eq!(graph.edge_count(), club.graph().edge_count());
        assert_eq!(squares.len(), club.squares().len());
    }

    #[test]
    fn unknown_square_edges_are_reported() {
        let text = r#"{
            "vertices": ["x", "y"],
            "edges": [{"id": "e", "r": "x", "s": "y", "colour": 1}],
            "squares": [{"top": ["e", "ghost"], "bottom": ["e", "e"]}]
        }"#;
        assert!(matches!(
            coloured_graph_from_json(text),
            Err(IoError::UnknownSquareEdge { index: 0, .. })
        ));
    }

    #[test]
    fn colourings_round_trip() {
        let poly = pizza(3);
        let colouring = colour_faces(&poly, 4).unwrap();
        let text = colouring_to_json(&poly, &colouring);
        let map = colouring_from_json(&text).unwrap();
        let validated = validate_colouring(&poly, &map).unwrap();
        assert_eq!(validated.palette_size(), colouring.palette_size());
    }
}
