//! Surgery on coloured graphs with squares: quotient, glue, and cut.
//!
//! A quotient identifies vertices and edges along a user relation, closing
//! under the forced identifications: identified edges must agree in colour
//! and their endpoints are identified with them. Gluing joins two graphs
//! along isomorphic marked subgraphs; cutting keeps one side of a mark.
//! Hereditary marks (no edge leaves the mark once its source is inside)
//! and co-hereditary marks (no edge re-enters once its source is outside)
//! are the two shapes under which cutting and gluing preserve squares.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::skeleton::{
    ColouredGraph, EdgeIx, Square, SquareSet, VertexIx,
};
use crate::util::UnionFind;

/// Problems while quotienting, gluing, or cutting.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SurgeryError {
    #[error("unknown vertex {id}")]
    UnknownVertex { id: String },
    #[error("unknown edge {id}")]
    UnknownEdge { id: String },
    #[error("marked edge {edge} has an endpoint outside the marked vertices")]
    MarkEdgeOutsideVertices { edge: String },
    #[error(
        "edges {first} and {second} are identified but coloured {first_colour} and {second_colour}"
    )]
    CompatibilityError {
        first: String,
        second: String,
        first_colour: u8,
        second_colour: u8,
    },
    #[error("the mark in the {side} graph is not hereditary: edge {edge} leaves it")]
    NotHereditary { side: GraphSide, edge: String },
    #[error("one mark is hereditary and the other only co-hereditary; gluing needs matching kinds")]
    MixedHeredity,
    #[error("the iso is not a bijection of the marks: {detail}")]
    IsoNotBijection { detail: String },
    #[error("the iso maps edge {first} to {second}, which has a different colour")]
    IsoColourMismatch { first: String, second: String },
    #[error("the iso does not commute with endpoints on edge {edge}")]
    IsoNotEquivariant { edge: String },
    #[error("the iso does not preserve squares: {square} has no counterpart")]
    IsoNotSquarePreserving { square: String },
    #[error("square at a kept source uses edge {edge}, which the cut removes")]
    CutNotClosed { edge: String },
}

/// Which input graph an error refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphSide {
    First,
    Second,
}

impl std::fmt::Display for GraphSide {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GraphSide::First => write!(f, "first"),
            GraphSide::Second => write!(f, "second"),
        }
    }
}

/// Pairs of vertices and edges to identify.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Relation {
    pub vertex_pairs: Vec<(String, String)>,
    pub edge_pairs: Vec<(String, String)>,
}

/// A subgraph given by vertex and edge subsets; every marked edge must
/// have both endpoints marked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgraphMark {
    vertices: BTreeSet<VertexIx>,
    edges: BTreeSet<EdgeIx>,
}

impl SubgraphMark {
    pub fn new(
        graph: &ColouredGraph,
        vertices: &[String],
        edges: &[String],
    ) -> Result<Self, SurgeryError> {
        let mut vertex_set = BTreeSet::new();
        for id in vertices {
            let ix = graph
                .vertex_ix(id)
                .ok_or_else(|| SurgeryError::UnknownVertex { id: id.clone() })?;
            vertex_set.insert(ix);
        }
        let mut edge_set = BTreeSet::new();
        for id in edges {
            let ix = graph
                .edge_ix(id)
                .ok_or_else(|| SurgeryError::UnknownEdge { id: id.clone() })?;
            edge_set.insert(ix);
        }
        for &e in &edge_set {
            let edge = graph.edge(e);
            if !vertex_set.contains(&edge.range) || !vertex_set.contains(&edge.source) {
                return Err(SurgeryError::MarkEdgeOutsideVertices {
                    edge: edge.id.clone(),
                });
            }
        }
        Ok(SubgraphMark {
            vertices: vertex_set,
            edges: edge_set,
        })
    }

    /// The whole graph as a mark.
    pub fn full(graph: &ColouredGraph) -> Self {
        SubgraphMark {
            vertices: (0..graph.vertex_count()).collect(),
            edges: (0..graph.edge_count()).collect(),
        }
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexIx> + '_ {
        self.vertices.iter().copied()
    }

    pub fn edges(&self) -> impl Iterator<Item = EdgeIx> + '_ {
        self.edges.iter().copied()
    }

    pub fn contains_vertex(&self, v: VertexIx) -> bool {
        self.vertices.contains(&v)
    }

    pub fn contains_edge(&self, e: EdgeIx) -> bool {
        self.edges.contains(&e)
    }
}

/// First edge whose source is marked but which is not itself marked.
fn hereditary_violation(graph: &ColouredGraph, mark: &SubgraphMark) -> Option<EdgeIx> {
    (0..graph.edge_count()).find(|&e| {
        mark.contains_vertex(graph.edge(e).source) && !mark.contains_edge(e)
    })
}

/// No path leaves the mark: every edge with a marked source is marked.
pub fn is_hereditary(graph: &ColouredGraph, mark: &SubgraphMark) -> bool {
    hereditary_violation(graph, mark).is_none()
}

/// No path re-enters the mark: an edge with an unmarked source is unmarked
/// and does not point at a marked vertex.
pub fn is_cohereditary(graph: &ColouredGraph, mark: &SubgraphMark) -> bool {
    (0..graph.edge_count()).all(|e| {
        let edge = graph.edge(e);
        mark.contains_vertex(edge.source)
            || (!mark.contains_edge(e) && !mark.contains_vertex(edge.range))
    })
}

/// Quotients a graph by a relation, closing under forced identifications.
///
/// Identified edges must carry the same colour and drag their endpoints
/// together. Class representatives keep the lowest-index member's id.
/// Squares are mapped through; squares whose two sides become equal are
/// dropped, and duplicates are merged.
pub fn quotient(
    graph: &ColouredGraph,
    squares: &SquareSet,
    relation: &Relation,
) -> Result<(ColouredGraph, SquareSet), SurgeryError> {
    let mut vertex_uf = UnionFind::new(graph.vertex_count());
    let mut edge_uf = UnionFind::new(graph.edge_count());
    let mut queue = VecDeque::new();
    for (a, b) in &relation.vertex_pairs {
        let a = graph
            .vertex_ix(a)
            .ok_or_else(|| SurgeryError::UnknownVertex { id: a.clone() })?;
        let b = graph
            .vertex_ix(b)
            .ok_or_else(|| SurgeryError::UnknownVertex { id: b.clone() })?;
        vertex_uf.unite(a, b);
    }
    for (a, b) in &relation.edge_pairs {
        let a = graph
            .edge_ix(a)
            .ok_or_else(|| SurgeryError::UnknownEdge { id: a.clone() })?;
        let b = graph
            .edge_ix(b)
            .ok_or_else(|| SurgeryError::UnknownEdge { id: b.clone() })?;
        queue.push_back((a, b));
    }
    while let Some((a, b)) = queue.pop_front() {
        if !edge_uf.unite(a, b) {
            continue;
        }
        let first = graph.edge(a);
        let second = graph.edge(b);
        if first.colour != second.colour {
            return Err(SurgeryError::CompatibilityError {
                first: first.id.clone(),
                second: second.id.clone(),
                first_colour: first.colour.value(),
                second_colour: second.colour.value(),
            });
        }
        vertex_uf.unite(first.range, second.range);
        vertex_uf.unite(first.source, second.source);
    }

    let mut vertex_map = vec![usize::MAX; graph.vertex_count()];
    let mut new_graph = ColouredGraph::default();
    for v in 0..graph.vertex_count() {
        if vertex_uf.find(v) == v {
            let ix = new_graph
                .add_vertex(graph.vertex_id(v).to_owned())
                .expect("class representatives keep their unique ids");
            vertex_map[v] = ix;
        }
    }
    let resolve_vertex =
        |uf: &mut UnionFind, map: &[usize], v: VertexIx| -> VertexIx { map[uf.find(v)] };
    let mut edge_map = vec![usize::MAX; graph.edge_count()];
    for e in 0..graph.edge_count() {
        if edge_uf.find(e) != e {
            continue;
        }
        let edge = graph.edge(e);
        let range = resolve_vertex(&mut vertex_uf, &vertex_map, edge.range);
        let source = resolve_vertex(&mut vertex_uf, &vertex_map, edge.source);
        let range_id = new_graph.vertex_id(range).to_owned();
        let source_id = new_graph.vertex_id(source).to_owned();
        let ix = new_graph
            .add_edge(edge.id.clone(), &range_id, &source_id, edge.colour.value())
            .expect("class representatives keep their unique ids");
        edge_map[e] = ix;
    }
    let resolve_edge = |uf: &mut UnionFind, e: EdgeIx| -> EdgeIx { edge_map[uf.find(e)] };

    let mut mapped = Vec::new();
    for square in squares.squares() {
        let top = [
            resolve_edge(&mut edge_uf, square.top[0]),
            resolve_edge(&mut edge_uf, square.top[1]),
        ];
        let bottom = [
            resolve_edge(&mut edge_uf, square.bottom[0]),
            resolve_edge(&mut edge_uf, square.bottom[1]),
        ];
        if top == bottom {
            continue;
        }
        mapped.push(Square { top, bottom });
    }
    let mapped = crate::skeleton::dedup_squares(mapped);
    let squares = SquareSet::new(&new_graph, mapped)
        .expect("quotients preserve colours, composability, and shared endpoints");
    Ok((new_graph, squares))
}

/// One side of a gluing: a graph with squares and a marked subgraph.
#[derive(Clone, Copy)]
pub struct GluePiece<'a> {
    pub graph: &'a ColouredGraph,
    pub squares: &'a SquareSet,
    pub mark: &'a SubgraphMark,
}

/// An isomorphism between two marked subgraphs, by id.
#[derive(Clone, Debug, Default)]
pub struct Iso {
    pub vertex_map: HashMap<String, String>,
    pub edge_map: HashMap<String, String>,
}

impl Iso {
    /// The identity map on a mark, for gluing a piece back in place.
    pub fn identity(graph: &ColouredGraph, mark: &SubgraphMark) -> Self {
        Iso {
            vertex_map: mark
                .vertices()
                .map(|v| (graph.vertex_id(v).to_owned(), graph.vertex_id(v).to_owned()))
                .collect(),
            edge_map: mark
                .edges()
                .map(|e| (graph.edge(e).id.clone(), graph.edge(e).id.clone()))
                .collect(),
        }
    }
}

fn render_square(graph: &ColouredGraph, square: &Square) -> String {
    let id = |e: EdgeIx| graph.edge(e).id.clone();
    format!(
        "[{} · {} | {} · {}]",
        id(square.top[0]),
        id(square.top[1]),
        id(square.bottom[0]),
        id(square.bottom[1])
    )
}

/// Checks that `iso` is a colour- and endpoint-preserving bijection of the
/// marks that matches their squares both ways.
fn check_iso(
    first: &GluePiece<'_>,
    second: &GluePiece<'_>,
    iso: &Iso,
) -> Result<(HashMap<VertexIx, VertexIx>, HashMap<EdgeIx, EdgeIx>), SurgeryError> {
    let mut vertex_map = HashMap::new();
    let mut hit_vertices = BTreeSet::new();
    for (from, to) in &iso.vertex_map {
        let from_ix = first
            .graph
            .vertex_ix(from)
            .filter(|&v| first.mark.contains_vertex(v))
            .ok_or_else(|| SurgeryError::IsoNotBijection {
                detail: format!("{from} is not a marked vertex of the first graph"),
            })?;
        let to_ix = second
            .graph
            .vertex_ix(to)
            .filter(|&v| second.mark.contains_vertex(v))
            .ok_or_else(|| SurgeryError::IsoNotBijection {
                detail: format!("{to} is not a marked vertex of the second graph"),
            })?;
        if !hit_vertices.insert(to_ix) {
            return Err(SurgeryError::IsoNotBijection {
                detail: format!("two vertices map to {to}"),
            });
        }
        vertex_map.insert(from_ix, to_ix);
    }
    if vertex_map.len() != first.mark.vertices().count()
        || hit_vertices.len() != second.mark.vertices().count()
    {
        return Err(SurgeryError::IsoNotBijection {
            detail: "the vertex map does not cover both marks".to_owned(),
        });
    }
    let mut edge_map = HashMap::new();
    let mut hit_edges = BTreeSet::new();
    for (from, to) in &iso.edge_map {
        let from_ix = first
            .graph
            .edge_ix(from)
            .filter(|&e| first.mark.contains_edge(e))
            .ok_or_else(|| SurgeryError::IsoNotBijection {
                detail: format!("{from} is not a marked edge of the first graph"),
            })?;
        let to_ix = second
            .graph
            .edge_ix(to)
            .filter(|&e| second.mark.contains_edge(e))
            .ok_or_else(|| SurgeryError::IsoNotBijection {
                detail: format!("{to} is not a marked edge of the second graph"),
            })?;
        if !hit_edges.insert(to_ix) {
            return Err(SurgeryError::IsoNotBijection {
                detail: format!("two edges map to {to}"),
            });
        }
        let from_edge = first.graph.edge(from_ix);
        let to_edge = second.graph.edge(to_ix);
        if from_edge.colour != to_edge.colour {
            return Err(SurgeryError::IsoColourMismatch {
                first: from.clone(),
                second: to.clone(),
            });
        }
        if vertex_map.get(&from_edge.range) != Some(&to_edge.range)
            || vertex_map.get(&from_edge.source) != Some(&to_edge.source)
        {
            return Err(SurgeryError::IsoNotEquivariant { edge: from.clone() });
        }
        edge_map.insert(from_ix, to_ix);
    }
    if edge_map.len() != first.mark.edges().count()
        || hit_edges.len() != second.mark.edges().count()
    {
        return Err(SurgeryError::IsoNotBijection {
            detail: "the edge map does not cover both marks".to_owned(),
        });
    }

    let in_mark = |mark: &SubgraphMark, square: &Square| {
        square
            .top
            .iter()
            .chain(square.bottom.iter())
            .all(|&e| mark.contains_edge(e))
    };
    for square in first.squares.squares() {
        if !in_mark(first.mark, square) {
            continue;
        }
        let mapped = Square {
            top: [edge_map[&square.top[0]], edge_map[&square.top[1]]],
            bottom: [edge_map[&square.bottom[0]], edge_map[&square.bottom[1]]],
        };
        if !second.squares.contains(&mapped) {
            return Err(SurgeryError::IsoNotSquarePreserving {
                square: render_square(first.graph, square),
            });
        }
    }
    let reverse: HashMap<EdgeIx, EdgeIx> = edge_map.iter().map(|(&a, &b)| (b, a)).collect();
    for square in second.squares.squares() {
        if !in_mark(second.mark, square) {
            continue;
        }
        let mapped = Square {
            top: [reverse[&square.top[0]], reverse[&square.top[1]]],
            bottom: [reverse[&square.bottom[0]], reverse[&square.bottom[1]]],
        };
        if !first.squares.contains(&mapped) {
            return Err(SurgeryError::IsoNotSquarePreserving {
                square: render_square(second.graph, square),
            });
        }
    }
    Ok((vertex_map, edge_map))
}

/// Glues two graphs along isomorphic marks.
///
/// Both marks must be hereditary or both co-hereditary. The result is the
/// disjoint union identified along the iso; merged items keep the first
/// graph's ids, and clashing unmerged ids from the second graph get a
/// numeric suffix.
pub fn glue(
    first: GluePiece<'_>,
    second: GluePiece<'_>,
    iso: &Iso,
) -> Result<(ColouredGraph, SquareSet), SurgeryError> {
    let hereditary = (
        is_hereditary(first.graph, first.mark),
        is_hereditary(second.graph, second.mark),
    );
    let cohereditary = (
        is_cohereditary(first.graph, first.mark),
        is_cohereditary(second.graph, second.mark),
    );
    let matched = (hereditary.0 && hereditary.1) || (cohereditary.0 && cohereditary.1);
    if !matched {
        for (side, graph, mark, h, c) in [
            (GraphSide::First, first.graph, first.mark, hereditary.0, cohereditary.0),
            (
                GraphSide::Second,
                second.graph,
                second.mark,
                hereditary.1,
                cohereditary.1,
            ),
        ] {
            if !h && !c {
                let witness = hereditary_violation(graph, mark)
                    .expect("a mark failing both kinds has a hereditary violation");
                return Err(SurgeryError::NotHereditary {
                    side,
                    edge: graph.edge(witness).id.clone(),
                });
            }
        }
        return Err(SurgeryError::MixedHeredity);
    }
    let (vertex_map, edge_map) = check_iso(&first, &second, iso)?;

    let mut union = ColouredGraph::default();
    for v in 0..first.graph.vertex_count() {
        union
            .add_vertex(first.graph.vertex_id(v).to_owned())
            .expect("first graph ids are unique");
    }
    let mut second_vertex_ids = Vec::with_capacity(second.graph.vertex_count());
    for v in 0..second.graph.vertex_count() {
        let id = fresh_id(second.graph.vertex_id(v), |id| union.vertex_ix(id).is_some());
        union.add_vertex(id.clone()).expect("fresh ids are unique");
        second_vertex_ids.push(id);
    }
    let offset_vertex = first.graph.vertex_count();
    for e in 0..first.graph.edge_count() {
        let edge = first.graph.edge(e);
        union
            .add_edge(
                edge.id.clone(),
                &first.graph.vertex_id(edge.range).to_owned(),
                &first.graph.vertex_id(edge.source).to_owned(),
                edge.colour.value(),
            )
            .expect("first graph ids are unique");
    }
    let mut second_edge_ids = Vec::with_capacity(second.graph.edge_count());
    for e in 0..second.graph.edge_count() {
        let edge = second.graph.edge(e);
        let id = fresh_id(&edge.id, |id| union.edge_ix(id).is_some());
        let range_id = second_vertex_ids[edge.range].clone();
        let source_id = second_vertex_ids[edge.source].clone();
        union
            .add_edge(id.clone(), &range_id, &source_id, edge.colour.value())
            .expect("fresh ids are unique");
        second_edge_ids.push(id);
    }
    let offset_edge = first.graph.edge_count();
    let mut all_squares: Vec<Square> = first.squares.squares().to_vec();
    all_squares.extend(second.squares.squares().iter().map(|sq| Square {
        top: [sq.top[0] + offset_edge, sq.top[1] + offset_edge],
        bottom: [sq.bottom[0] + offset_edge, sq.bottom[1] + offset_edge],
    }));
    let union_squares =
        SquareSet::new(&union, all_squares).expect("a disjoint union keeps both square sets");

    let relation = Relation {
        vertex_pairs: vertex_map
            .iter()
            .map(|(&from, &to)| {
                (
                    first.graph.vertex_id(from).to_owned(),
                    union.vertex_id(to + offset_vertex).to_owned(),
                )
            })
            .collect(),
        edge_pairs: edge_map
            .iter()
            .map(|(&from, &to)| {
                (
                    first.graph.edge(from).id.clone(),
                    union.edge(to + offset_edge).id.clone(),
                )
            })
            .collect(),
    };
    quotient(&union, &union_squares, &relation)
}

fn fresh_id(base: &str, taken: impl Fn(&str) -> bool) -> String {
    if !taken(base) {
        return base.to_owned();
    }
    let mut n = 2;
    loop {
        let candidate = format!("{base}#{n}");
        if !taken(&candidate) {
            return candidate;
        }
        n += 1;
    }
}

/// Which side of a mark a cut keeps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CutSide {
    /// Keep the marked subgraph and the squares rooted at marked sources.
    Inside,
    /// Keep the complement, dropping every edge that touches the marked
    /// vertices, and the squares rooted at unmarked sources.
    Outside,
}

/// Cuts a graph along a mark, keeping one side.
///
/// A square is kept when its shared source vertex lands on the kept side;
/// if a kept square uses a removed edge the cut is rejected, naming the
/// edge. Hereditary marks cut cleanly on the inside, co-hereditary marks
/// on the outside.
pub fn cut(
    graph: &ColouredGraph,
    squares: &SquareSet,
    mark: &SubgraphMark,
    side: CutSide,
) -> Result<(ColouredGraph, SquareSet), SurgeryError> {
    let keep_vertex = |v: VertexIx| match side {
        CutSide::Inside => mark.contains_vertex(v),
        CutSide::Outside => !mark.contains_vertex(v),
    };
    let keep_edge = |e: EdgeIx| {
        let edge = graph.edge(e);
        match side {
            CutSide::Inside => mark.contains_edge(e),
            CutSide::Outside => !mark.contains_vertex(edge.range) && !mark.contains_vertex(edge.source),
        }
    };
    let mut new_graph = ColouredGraph::default();
    let mut vertex_map = vec![usize::MAX; graph.vertex_count()];
    for v in 0..graph.vertex_count() {
        if keep_vertex(v) {
            vertex_map[v] = new_graph
                .add_vertex(graph.vertex_id(v).to_owned())
                .expect("kept ids are unique");
        }
    }
    let mut edge_map = vec![usize::MAX; graph.edge_count()];
    for e in 0..graph.edge_count() {
        if !keep_edge(e) {
            continue;
        }
        let edge = graph.edge(e);
        edge_map[e] = new_graph
            .add_edge(
                edge.id.clone(),
                graph.vertex_id(edge.range),
                graph.vertex_id(edge.source),
                edge.colour.value(),
            )
            .expect("kept ids are unique and marks contain their endpoints");
    }
    let mut kept_squares = Vec::new();
    for square in squares.squares() {
        let source = graph.edge(square.top[1]).source;
        if !keep_vertex(source) {
            continue;
        }
        let map_edge = |e: EdgeIx| -> Result<EdgeIx, SurgeryError> {
            if edge_map[e] == usize::MAX {
                Err(SurgeryError::CutNotClosed {
                    edge: graph.edge(e).id.clone(),
                })
            } else {
                Ok(edge_map[e])
            }
        };
        kept_squares.push(Square {
            top: [map_edge(square.top[0])?, map_edge(square.top[1])?],
            bottom: [map_edge(square.bottom[0])?, map_edge(square.bottom[1])?],
        });
    }
    let squares =
        SquareSet::new(&new_graph, kept_squares).expect("cutting preserves square validity");
    Ok((new_graph, squares))
}
