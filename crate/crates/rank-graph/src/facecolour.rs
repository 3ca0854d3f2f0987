//! Proper face colourings of polyhedral graphs.
//!
//! Faces are coloured so that the two sides of every arc receive different
//! colours; equivalently, a colouring is a proper vertex colouring of the
//! dual graph. Two faces can share a colour exactly when the dual is
//! bipartite, which for plane graphs happens exactly when every point has
//! even valency. Four colours always suffice for a planar dual, so the
//! search never needs a larger palette.

use std::collections::HashMap;
use std::collections::VecDeque;

use crate::polyhedral::{FaceIx, PolyhedralGraph};
use crate::skeleton::Colour;

/// Problems while colouring faces or checking a supplied colouring.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ColouringError {
    #[error("the graph carries no face data; trace or supply an embedding first")]
    EmbeddingRequired,
    #[error("arc {arc} has the same face on both sides; no proper colouring exists")]
    SelfAdjacentFace { arc: String },
    #[error("point {point} has odd valency {valency}, so no two-colouring exists")]
    OddValencyPoint { point: String, valency: usize },
    #[error("the dual contains an odd cycle through faces {}", faces.join(", "))]
    OddDualCycle { faces: Vec<String> },
    #[error("no proper colouring with at most {max_colours} colours")]
    Infeasible { max_colours: u8 },
    #[error("colouring misses face {face}")]
    MissingFace { face: String },
    #[error("colouring names unknown face {face}")]
    UnknownFace { face: String },
    #[error("face {face} is assigned colour {value}, outside 1..=4")]
    ColourOutOfRange { face: String, value: u8 },
    #[error("faces {first} and {second} share arc {arc} but carry the same colour")]
    ImproperColouring {
        first: String,
        second: String,
        arc: String,
    },
}

/// A proper assignment of colours to the faces of one graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceColouring {
    assignment: Vec<Colour>,
}

impl FaceColouring {
    pub fn colour_of(&self, face: FaceIx) -> Colour {
        self.assignment[face]
    }

    /// Number of distinct colours used.
    pub fn palette_size(&self) -> usize {
        let mut seen = [false; 4];
        for c in &self.assignment {
            seen[c.index()] = true;
        }
        seen.iter().filter(|&&s| s).count()
    }

    pub fn assignments(&self) -> impl Iterator<Item = (FaceIx, Colour)> + '_ {
        self.assignment.iter().copied().enumerate()
    }
}

/// Dual adjacency (face, face, arc), failing fast on degenerate sides.
fn dual_adjacency(graph: &PolyhedralGraph) -> Result<Vec<(FaceIx, FaceIx, usize)>, ColouringError> {
    let embedding = graph
        .embedding()
        .ok_or(ColouringError::EmbeddingRequired)?;
    let mut edges = Vec::with_capacity(graph.arc_count());
    for a in 0..graph.arc_count() {
        let side = embedding.side(a);
        if side.left == side.right {
            return Err(ColouringError::SelfAdjacentFace {
                arc: graph.arc(a).id.clone(),
            });
        }
        edges.push((side.left, side.right, a));
    }
    Ok(edges)
}

/// Two-colours the faces, or names the obstruction: an odd-valency point or
/// an odd dual cycle.
pub fn two_colour(graph: &PolyhedralGraph) -> Result<FaceColouring, ColouringError> {
    let adjacency = dual_adjacency(graph)?;
    let embedding = graph.embedding().expect("adjacency construction checked");
    for p in 0..graph.point_count() {
        let valency = graph.valency(p);
        if valency % 2 != 0 {
            return Err(ColouringError::OddValencyPoint {
                point: graph.point_id(p).to_owned(),
                valency,
            });
        }
    }
    let face_count = embedding.face_count();
    let mut neighbours = vec![Vec::new(); face_count];
    for &(l, r, _) in &adjacency {
        neighbours[l].push(r);
        neighbours[r].push(l);
    }
    let mut colour = vec![0u8; face_count];
    let mut parent = vec![usize::MAX; face_count];
    for start in 0..face_count {
        if colour[start] != 0 {
            continue;
        }
        colour[start] = 1;
        let mut queue = VecDeque::from([start]);
        while let Some(f) = queue.pop_front() {
            for &g in &neighbours[f] {
                if colour[g] == 0 {
                    colour[g] = 3 - colour[f];
                    parent[g] = f;
                    queue.push_back(g);
                } else if colour[g] == colour[f] {
                    return Err(ColouringError::OddDualCycle {
                        faces: odd_cycle(embedding, &parent, f, g),
                    });
                }
            }
        }
    }
    let assignment = colour
        .into_iter()
        .map(|c| Colour::new(c).expect("BFS assigns colours 1 and 2"))
        .collect();
    Ok(FaceColouring { assignment })
}

/// Reconstructs the odd cycle witnessed by a BFS conflict edge `(f, g)`.
fn odd_cycle(
    embedding: &crate::polyhedral::Embedding,
    parent: &[usize],
    f: FaceIx,
    g: FaceIx,
) -> Vec<String> {
    let ancestors = |mut x: FaceIx| {
        let mut chain = vec![x];
        while parent[x] != usize::MAX {
            x = parent[x];
            chain.push(x);
        }
        chain
    };
    let up_f = ancestors(f);
    let up_g = ancestors(g);
    let mut common = None;
    for x in &up_f {
        if up_g.contains(x) {
            common = Some(*x);
            break;
        }
    }
    let meet = common.unwrap_or(f);
    let mut cycle: Vec<FaceIx> = up_f.iter().copied().take_while(|&x| x != meet).collect();
    cycle.push(meet);
    let mut tail: Vec<FaceIx> = up_g.iter().copied().take_while(|&x| x != meet).collect();
    tail.reverse();
    cycle.extend(tail);
    cycle
        .into_iter()
        .map(|x| embedding.face_id(x).to_owned())
        .collect()
}

/// Colours the faces with at most `max_colours` colours.
///
/// Tries a two-colouring first, then backtracking over palettes of three
/// and four colours, assigning faces in id-sorted order and preferring the
/// lowest feasible colour. Deterministic for fixed input.
pub fn colour_faces(
    graph: &PolyhedralGraph,
    max_colours: u8,
) -> Result<FaceColouring, ColouringError> {
    let adjacency = dual_adjacency(graph)?;
    let embedding = graph.embedding().expect("adjacency construction checked");
    let limit = max_colours.min(4);
    if limit >= 2 {
        if let Ok(colouring) = two_colour(graph) {
            return Ok(colouring);
        }
    }
    let face_count = embedding.face_count();
    let mut order: Vec<FaceIx> = (0..face_count).collect();
    order.sort_by(|&a, &b| embedding.face_id(a).cmp(embedding.face_id(b)));
    let mut neighbours = vec![Vec::new(); face_count];
    for &(l, r, _) in &adjacency {
        neighbours[l].push(r);
        neighbours[r].push(l);
    }
    for palette in 3..=limit {
        let mut assignment = vec![0u8; face_count];
        if backtrack(&order, &neighbours, &mut assignment, 0, palette) {
            let assignment = assignment
                .into_iter()
                .map(|c| Colour::new(c).expect("backtracking stays within the palette"))
                .collect();
            return Ok(FaceColouring { assignment });
        }
    }
    Err(ColouringError::Infeasible { max_colours })
}

fn backtrack(
    order: &[FaceIx],
    neighbours: &[Vec<FaceIx>],
    assignment: &mut [u8],
    position: usize,
    palette: u8,
) -> bool {
    let Some(&face) = order.get(position) else {
        return true;
    };
    for colour in 1..=palette {
        if neighbours[face].iter().any(|&n| assignment[n] == colour) {
            continue;
        }
        assignment[face] = colour;
        if backtrack(order, neighbours, assignment, position + 1, palette) {
            return true;
        }
        assignment[face] = 0;
    }
    false
}

/// Checks a user-supplied face colouring for coverage and properness.
pub fn validate_colouring(
    graph: &PolyhedralGraph,
    supplied: &HashMap<String, u8>,
) -> Result<FaceColouring, ColouringError> {
    let adjacency = dual_adjacency(graph)?;
    let embedding = graph.embedding().expect("adjacency construction checked");
    for face in supplied.keys() {
        if embedding.face_ix(face).is_none() {
            return Err(ColouringError::UnknownFace { face: face.clone() });
        }
    }
    let mut assignment = Vec::with_capacity(embedding.face_count());
    for f in 0..embedding.face_count() {
        let id = embedding.face_id(f);
        let value = *supplied
            .get(id)
            .ok_or_else(|| ColouringError::MissingFace {
                face: id.to_owned(),
            })?;
        let colour = Colour::new(value).map_err(|_| ColouringError::ColourOutOfRange {
            face: id.to_owned(),
            value,
        })?;
        assignment.push(colour);
    }
    for &(l, r, a) in &adjacency {
        if assignment[l] == assignment[r] {
            return Err(ColouringError::ImproperColouring {
                first: embedding.face_id(l).to_owned(),
                second: embedding.face_id(r).to_owned(),
                arc: graph.arc(a).id.clone(),
            });
        }
    }
    Ok(FaceColouring { assignment })
}

/// Smallest palette admitting a proper colouring, by exhaustive search.
///
/// Independent of [`colour_faces`]; intended as a test oracle for graphs
/// with few faces (the search is exponential in the face count).
pub fn brute_force_minimal_palette(graph: &PolyhedralGraph) -> Result<u8, ColouringError> {
    let adjacency = dual_adjacency(graph)?;
    let embedding = graph.embedding().expect("adjacency construction checked");
    let face_count = embedding.face_count();
    for palette in 1..=4u8 {
        let mut assignment = vec![1u8; face_count];
        loop {
            let proper = adjacency
                .iter()
                .all(|&(l, r, _)| assignment[l] != assignment[r]);
            if proper {
                return Ok(palette);
            }
            let mut pos = 0;
            loop {
                if pos == face_count {
                    break;
                }
                if assignment[pos] < palette {
                    assignment[pos] += 1;
                    break;
                }
                assignment[pos] = 1;
                pos += 1;
            }
            if pos == face_count {
                break;
            }
        }
    }
    Err(ColouringError::Infeasible { max_colours: 4 })
}
