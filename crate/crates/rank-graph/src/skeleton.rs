//! Coloured directed graphs and complete square sets: the 1-skeleton data
//! from which higher-rank graphs are assembled.
//!
//! A `k`-coloured graph has edges painted with colours `1..=k`. A path is a
//! sequence `[e1, e2, ..., en]` with `s(e_i) = r(e_{i+1})`; it is traversed
//! from `s(e_n)` to `r(e_1)`, matching composition notation where `fg` means
//! "`g` first, then `f`". A square declares two bicoloured length-2 paths
//! equal: `fg = g'f'` with `c(f) = c(f')`, `c(g) = c(g')`, `c(f) != c(g)`,
//! and both sides sharing range and source. A square set is complete when
//! every bicoloured length-2 path lies in exactly one square, and
//! associative when flipping a tricoloured path through its squares in the
//! two canonical orders lands on the same path. Complete associative square
//! sets are exactly the data of a rank-`k` graph on the skeleton.

use std::collections::{HashMap, HashSet};

use crate::util::UnionFind;

/// Largest number of colours the library supports.
pub const MAX_COLOURS: u8 = 4;

/// Index of a vertex inside a [`ColouredGraph`].
pub type VertexIx = usize;

/// Index of an edge inside a [`ColouredGraph`].
pub type EdgeIx = usize;

/// An edge colour in `1..=MAX_COLOURS`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Colour(u8);

impl Colour {
    /// Builds a colour, rejecting values outside `1..=MAX_COLOURS`.
    pub fn new(value: u8) -> Result<Self, SkeletonError> {
        if (1..=MAX_COLOURS).contains(&value) {
            Ok(Colour(value))
        } else {
            Err(SkeletonError::ColourOutOfRange { value })
        }
    }

    /// The numeric colour value, `1`-based.
    pub fn value(self) -> u8 {
        self.0
    }

    /// The colour as a `0`-based index into per-colour tables.
    pub fn index(self) -> usize {
        usize::from(self.0) - 1
    }
}

impl std::fmt::Display for Colour {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A directed coloured edge from `source` to `range`.
#[derive(Clone, Debug)]
pub struct Edge {
    pub id: String,
    pub range: VertexIx,
    pub source: VertexIx,
    pub colour: Colour,
}

/// Problems constructing or operating on coloured graphs and square sets.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SkeletonError {
    #[error("colour {value} is outside the supported palette 1..={MAX_COLOURS}")]
    ColourOutOfRange { value: u8 },
    #[error("duplicate vertex id {id}")]
    DuplicateVertex { id: String },
    #[error("duplicate edge id {id}")]
    DuplicateEdge { id: String },
    #[error("edge {edge} references unknown vertex {vertex}")]
    UnknownVertex { edge: String, vertex: String },
    #[error("square {index} references unknown edge {edge}")]
    UnknownSquareEdge { index: usize, edge: String },
    #[error("square {index} side [{first}, {second}] is not composable: s({first}) != r({second})")]
    NotComposable {
        index: usize,
        first: String,
        second: String,
    },
    #[error("square {index} breaks the colour pattern: sides must swap two distinct colours")]
    BadColourPattern { index: usize },
    #[error("square {index} sides do not share range and source")]
    EndpointMismatch { index: usize },
    #[error("the skeleton has a directed cycle through vertex {vertex}")]
    CyclicSkeleton { vertex: String },
    #[error("cannot flip at {first}{second}: adjacent edges share colour {colour}")]
    SameColourAdjacent {
        first: String,
        second: String,
        colour: Colour,
    },
    #[error("no square covers the bicoloured path {first}{second}")]
    MissingSquare { first: String, second: String },
    #[error("flip position {position} is out of bounds for a path of length {length}")]
    FlipOutOfBounds { position: usize, length: usize },
}

/// A directed graph with coloured edges and stable string ids.
#[derive(Clone, Debug, Default)]
pub struct ColouredGraph {
    vertex_ids: Vec<String>,
    vertex_lookup: HashMap<String, VertexIx>,
    edges: Vec<Edge>,
    edge_lookup: HashMap<String, EdgeIx>,
}

impl ColouredGraph {
    /// Builds a graph from vertex ids and `(edge id, range id, source id, colour)` rows.
    ///
    /// Edge order is preserved; several algorithms scan edges in insertion
    /// order to stay deterministic.
    pub fn new(
        vertices: Vec<String>,
        edges: Vec<(String, String, String, u8)>,
    ) -> Result<Self, SkeletonError> {
        let mut graph = ColouredGraph::default();
        for id in vertices {
            graph.add_vertex(id)?;
        }
        for (id, range, source, colour) in edges {
            graph.add_edge(id, &range, &source, colour)?;
        }
        Ok(graph)
    }

    /// Adds a vertex and returns its index.
    pub fn add_vertex(&mut self, id: String) -> Result<VertexIx, SkeletonError> {
        if self.vertex_lookup.contains_key(&id) {
            return Err(SkeletonError::DuplicateVertex { id });
        }
        let ix = self.vertex_ids.len();
        self.vertex_lookup.insert(id.clone(), ix);
        self.vertex_ids.push(id);
        Ok(ix)
    }

    /// Adds an edge by vertex ids and returns its index.
    pub fn add_edge(
        &mut self,
        id: String,
        range: &str,
        source: &str,
        colour: u8,
    ) -> Result<EdgeIx, SkeletonError> {
        let colour = Colour::new(colour)?;
        let range = *self
            .vertex_lookup
            .get(range)
            .ok_or_else(|| SkeletonError::UnknownVertex {
                edge: id.clone(),
                vertex: range.to_owned(),
            })?;
        let source = *self
            .vertex_lookup
            .get(source)
            .ok_or_else(|| SkeletonError::UnknownVertex {
                edge: id.clone(),
                vertex: source.to_owned(),
            })?;
        if self.edge_lookup.contains_key(&id) {
            return Err(SkeletonError::DuplicateEdge { id });
        }
        let ix = self.edges.len();
        self.edge_lookup.insert(id.clone(), ix);
        self.edges.push(Edge {
            id,
            range,
            source,
            colour,
        });
        Ok(ix)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_ids.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_id(&self, v: VertexIx) -> &str {
        &self.vertex_ids[v]
    }

    pub fn vertex_ids(&self) -> impl Iterator<Item = &str> {
        self.vertex_ids.iter().map(String::as_str)
    }

    pub fn vertex_ix(&self, id: &str) -> Option<VertexIx> {
        self.vertex_lookup.get(id).copied()
    }

    pub fn edge(&self, e: EdgeIx) -> &Edge {
        &self.edges[e]
    }

    pub fn edges(&self) -> impl Iterator<Item = &Edge> {
        self.edges.iter()
    }

    pub fn edge_ix(&self, id: &str) -> Option<EdgeIx> {
        self.edge_lookup.get(id).copied()
    }

    /// The distinct colours used, ascending.
    pub fn colours_used(&self) -> Vec<Colour> {
        let mut seen = [false; MAX_COLOURS as usize];
        for e in &self.edges {
            seen[e.colour.index()] = true;
        }
        (1..=MAX_COLOURS)
            .filter(|&c| seen[usize::from(c) - 1])
            .map(Colour)
            .collect()
    }

    /// The rank `k`: the number of distinct colours present.
    pub fn rank(&self) -> usize {
        self.colours_used().len()
    }

    /// Edges indexed by range vertex, in insertion order.
    pub fn edges_by_range(&self) -> Vec<Vec<EdgeIx>> {
        let mut by_range = vec![Vec::new(); self.vertex_count()];
        for (ix, e) in self.edges.iter().enumerate() {
            by_range[e.range].push(ix);
        }
        by_range
    }

    /// Edges indexed by source vertex, in insertion order.
    pub fn edges_by_source(&self) -> Vec<Vec<EdgeIx>> {
        let mut by_source = vec![Vec::new(); self.vertex_count()];
        for (ix, e) in self.edges.iter().enumerate() {
            by_source[e.source].push(ix);
        }
        by_source
    }

    /// True when the underlying undirected graph is connected.
    ///
    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        if self.vertex_count() == 0 {
            return true;
        }
        let mut uf = UnionFind::new(self.vertex_count());
        for e in &self.edges {
            uf.unite(e.range, e.source);
        }
        let root = uf.find(0);
        (1..self.vertex_count()).all(|v| uf.find(v) == root)
    }

    /// Fails with the offending vertex if the skeleton has a directed cycle.
    pub fn check_acyclic(&self) -> Result<(), SkeletonError> {
        // Edges are traversed source -> range.
        let by_source = self.edges_by_source();
        let mut state = vec![0u8; self.vertex_count()];
        let mut stack = Vec::new();
        for start in 0..self.vertex_count() {
            if state[start] != 0 {
                continue;
            }
            stack.push((start, 0usize));
            state[start] = 1;
            while let Some(&(v, next)) = stack.last() {
                if next < by_source[v].len() {
                    stack.last_mut().expect("stack is nonempty").1 += 1;
                    let e = by_source[v][next];
                    let to = self.edges[e].range;
                    match state[to] {
                        0 => {
                            state[to] = 1;
                            stack.push((to, 0));
                        }
                        1 => {
                            return Err(SkeletonError::CyclicSkeleton {
                                vertex: self.vertex_ids[to].clone(),
                            });
                        }
                        _ => {}
                    }
                } else {
                    state[v] = 2;
                    stack.pop();
                }
            }
        }
        Ok(())
    }
}

/// One commuting square: `top` and `bottom` are composable bicoloured
/// length-2 paths with shared range and source, written later-edge first.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Square {
    pub top: [EdgeIx; 2],
    pub bottom: [EdgeIx; 2],
}

impl Square {
    /// A colour- and endpoint-independent key identifying the unordered square.
    fn canonical(&self) -> ([EdgeIx; 2], [EdgeIx; 2]) {
        if self.top <= self.bottom {
            (self.top, self.bottom)
        } else {
            (self.bottom, self.top)
        }
    }
}

/// A set of squares over a fixed graph, indexed for partner lookups.
#[derive(Clone, Debug)]
pub struct SquareSet {
    squares: Vec<Square>,
    /// Every square side registered under its ordered edge pair.
    by_pair: HashMap<[EdgeIx; 2], Vec<usize>>,
}

impl SquareSet {
    /// Validates each square against the graph and builds the pair index.
    pub fn new(graph: &ColouredGraph, squares: Vec<Square>) -> Result<Self, SkeletonError> {
        for (index, sq) in squares.iter().enumerate() {
            for &e in sq.top.iter().chain(sq.bottom.iter()) {
                if e >= graph.edge_count() {
                    return Err(SkeletonError::UnknownSquareEdge {
                        index,
                        edge: format!("#{e}"),
                    });
                }
            }
            for side in [sq.top, sq.bottom] {
                let first = graph.edge(side[0]);
                let second = graph.edge(side[1]);
                if first.source != second.range {
                    return Err(SkeletonError::NotComposable {
                        index,
                        first: first.id.clone(),
                        second: second.id.clone(),
                    });
                }
            }
            let (t0, t1) = (graph.edge(sq.top[0]).colour, graph.edge(sq.top[1]).colour);
            let (b0, b1) = (
                graph.edge(sq.bottom[0]).colour,
                graph.edge(sq.bottom[1]).colour,
            );
            if t0 == t1 || t0 != b1 || t1 != b0 {
                return Err(SkeletonError::BadColourPattern { index });
            }
            let range_ok = graph.edge(sq.top[0]).range == graph.edge(sq.bottom[0]).range;
            let source_ok = graph.edge(sq.top[1]).source == graph.edge(sq.bottom[1]).source;
            if !range_ok || !source_ok {
                return Err(SkeletonError::EndpointMismatch { index });
            }
        }
        let mut by_pair: HashMap<[EdgeIx; 2], Vec<usize>> = HashMap::new();
        for (ix, sq) in squares.iter().enumerate() {
            by_pair.entry(sq.top).or_default().push(ix);
            by_pair.entry(sq.bottom).or_default().push(ix);
        }
        Ok(SquareSet { squares, by_pair })
    }

    pub fn squares(&self) -> &[Square] {
        &self.squares
    }

    pub fn len(&self) -> usize {
        self.squares.len()
    }

    pub fn is_empty(&self) -> bool {
        self.squares.is_empty()
    }

    /// Indices of squares having `pair` as top or bottom.
    pub fn covering(&self, pair: [EdgeIx; 2]) -> &[usize] {
        self.by_pair.get(&pair).map(Vec::as_slice).unwrap_or(&[])
    }

    /// The unique partner side of `pair`, if exactly one square covers it.
    pub fn partner(&self, pair: [EdgeIx; 2]) -> Option<[EdgeIx; 2]> {
        match self.covering(pair) {
            [only] => {
                let sq = &self.squares[*only];
                Some(if sq.top == pair { sq.bottom } else { sq.top })
            }
            _ => None,
        }
    }

    /// True if an unordered square with these sides is present.
    pub fn contains(&self, square: &Square) -> bool {
        self.covering(square.top).iter().any(|&ix| {
            self.squares[ix].canonical() == square.canonical()
        })
    }
}

/// Outcome of the completeness check: which bicoloured length-2 paths are
/// covered by no square, and which by more than one.
#[derive(Clone, Debug, Default)]
pub struct CompletenessReport {
    pub missing: Vec<[EdgeIx; 2]>,
    pub duplicated: Vec<([EdgeIx; 2], Vec<usize>)>,
}

impl CompletenessReport {
    pub fn is_complete(&self) -> bool {
        self.missing.is_empty() && self.duplicated.is_empty()
    }

    /// Total number of offending paths.
    pub fn violation_count(&self) -> usize {
        self.missing.len() + self.duplicated.len()
    }
}

/// Checks that every bicoloured length-2 path lies in exactly one square.
pub fn check_complete(graph: &ColouredGraph, squares: &SquareSet) -> CompletenessReport {
    let by_range = graph.edges_by_range();
    let mut report = CompletenessReport::default();
    for (first, e) in graph.edges().enumerate() {
        for &second in &by_range[e.source] {
            let f = graph.edge(second);
            if f.colour == e.colour {
                continue;
            }
            let pair = [first, second];
            match squares.covering(pair) {
                [] => report.missing.push(pair),
                [_] => {}
                many => report.duplicated.push((pair, many.to_vec())),
            }
        }
    }
    report
}

/// One failed instance of the associativity (cube) condition.
#[derive(Clone, Debug)]
pub struct AssociativityFailure {
    pub path: Vec<EdgeIx>,
    /// Results of flipping positions 0,1,0 and 1,0,1; `None` marks a flip
    /// that could not be performed because a square was missing or ambiguous.
    pub first_route: Option<Vec<EdgeIx>>,
    pub second_route: Option<Vec<EdgeIx>>,
}

/// Outcome of the associativity check over all tricoloured length-3 paths.
#[derive(Clone, Debug, Default)]
pub struct AssociativityReport {
    pub failures: Vec<AssociativityFailure>,
    pub paths_checked: usize,
}

impl AssociativityReport {
    pub fn is_associative(&self) -> bool {
        self.failures.is_empty()
    }

    /// True when there were no tricoloured paths to check.
    pub fn is_vacuous(&self) -> bool {
        self.paths_checked == 0
    }
}

/// Checks the cube condition: flipping a tricoloured path at positions
/// `0,1,0` and at `1,0,1` must produce the same path.
///
/// Meaningful on complete square sets; with missing or duplicated squares
/// the affected paths are reported as failures.
pub fn check_associative(graph: &ColouredGraph, squares: &SquareSet) -> AssociativityReport {
    let by_range = graph.edges_by_range();
    let mut report = AssociativityReport::default();
    for (e1, first) in graph.edges().enumerate() {
        for &e2 in &by_range[first.source] {
            let second = graph.edge(e2);
            if second.colour == first.colour {
                continue;
            }
            for &e3 in &by_range[second.source] {
                let third = graph.edge(e3);
                if third.colour == first.colour || third.colour == second.colour {
                    continue;
                }
                report.paths_checked += 1;
                let path = vec![e1, e2, e3];
                let first_route = flip_sequence(squares, &path, &[0, 1, 0]);
                let second_route = flip_sequence(squares, &path, &[1, 0, 1]);
                let agree = matches!((&first_route, &second_route), (Some(a), Some(b)) if a == b);
                if !agree {
                    report.failures.push(AssociativityFailure {
                        path,
                        first_route,
                        second_route,
                    });
                }
            }
        }
    }
    report
}

fn flip_sequence(squares: &SquareSet, path: &[EdgeIx], positions: &[usize]) -> Option<Vec<EdgeIx>> {
    let mut current = path.to_vec();
    for &pos in positions {
        let pair = [current[pos], current[pos + 1]];
        let partner = squares.partner(pair)?;
        current[pos] = partner[0];
        current[pos + 1] = partner[1];
    }
    Some(current)
}

/// Replaces the bicoloured pair at `position` with its square partner.
pub fn flip(
    graph: &ColouredGraph,
    squares: &SquareSet,
    path: &[EdgeIx],
    position: usize,
) -> Result<Vec<EdgeIx>, SkeletonError> {
    if position + 1 >= path.len() {
        return Err(SkeletonError::FlipOutOfBounds {
            position,
            length: path.len(),
        });
    }
    let first = graph.edge(path[position]);
    let second = graph.edge(path[position + 1]);
    if first.colour == second.colour {
        return Err(SkeletonError::SameColourAdjacent {
            first: first.id.clone(),
            second: second.id.clone(),
            colour: first.colour,
        });
    }
    let pair = [path[position], path[position + 1]];
    let partner = squares
        .partner(pair)
        .ok_or_else(|| SkeletonError::MissingSquare {
            first: first.id.clone(),
            second: second.id.clone(),
        })?;
    let mut flipped = path.to_vec();
    flipped[position] = partner[0];
    flipped[position + 1] = partner[1];
    Ok(flipped)
}

/// A flip-equivalence class of paths in one hom-set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathClass {
    /// Lexicographically smallest member, as edge indices, later edge first.
    pub representative: Vec<EdgeIx>,
    /// Number of edges of each colour, indexed by `Colour::index`.
    pub degree: [usize; MAX_COLOURS as usize],
    /// Number of paths in the class.
    pub size: usize,
}

/// All morphisms with range `u` and source `v`: flip-equivalence classes of
/// directed paths from `v` to `u`.
///
/// Requires an acyclic skeleton. Meaningful as a morphism count only when
/// the square set is complete and associative.
pub fn enumerate_morphisms(
    graph: &ColouredGraph,
    squares: &SquareSet,
    range: VertexIx,
    source: VertexIx,
) -> Result<Vec<PathClass>, SkeletonError> {
    graph.check_acyclic()?;
    Ok(morphism_classes(graph, squares, range, source))
}

/// Class enumeration without the acyclicity re-check, for internal callers
/// that have already established it.
fn morphism_classes(
    graph: &ColouredGraph,
    squares: &SquareSet,
    range: VertexIx,
    source: VertexIx,
) -> Vec<PathClass> {
    let by_range = graph.edges_by_range();
    let mut memo: HashMap<VertexIx, Vec<Vec<EdgeIx>>> = HashMap::new();
    let paths = paths_down(graph, &by_range, range, source, &mut memo);
    if paths.is_empty() {
        return Vec::new();
    }
    let index_of: HashMap<&[EdgeIx], usize> = paths
        .iter()
        .enumerate()
        .map(|(i, p)| (p.as_slice(), i))
        .collect();
    let mut uf = UnionFind::new(paths.len());
    for (i, path) in paths.iter().enumerate() {
        for pos in 0..path.len().saturating_sub(1) {
            let pair = [path[pos], path[pos + 1]];
            for &sq_ix in squares.covering(pair) {
                let sq = &squares.squares()[sq_ix];
                let partner = if sq.top == pair { sq.bottom } else { sq.top };
                let mut flipped = path.clone();
                flipped[pos] = partner[0];
                flipped[pos + 1] = partner[1];
                if let Some(&j) = index_of.get(flipped.as_slice()) {
                    uf.unite(i, j);
                }
            }
        }
    }
    let mut classes: HashMap<usize, (Vec<EdgeIx>, usize)> = HashMap::new();
    for (i, path) in paths.iter().enumerate() {
        let root = uf.find(i);
        let entry = classes
            .entry(root)
            .or_insert_with(|| (path.clone(), 0));
        if *path < entry.0 {
            entry.0 = path.clone();
        }
        entry.1 += 1;
    }
    let mut out: Vec<PathClass> = classes
        .into_values()
        .map(|(representative, size)| {
            let mut degree = [0usize; MAX_COLOURS as usize];
            for &e in &representative {
                degree[graph.edge(e).colour.index()] += 1;
            }
            PathClass {
                representative,
                degree,
                size,
            }
        })
        .collect();
    out.sort_by(|a, b| a.representative.cmp(&b.representative));
    out
}

/// All paths from `source` up to `range`, including the empty path when the
/// two coincide. Assumes an acyclic skeleton.
fn paths_down(
    graph: &ColouredGraph,
    by_range: &[Vec<EdgeIx>],
    range: VertexIx,
    source: VertexIx,
    memo: &mut HashMap<VertexIx, Vec<Vec<EdgeIx>>>,
) -> Vec<Vec<EdgeIx>> {
    if let Some(done) = memo.get(&range) {
        return done.clone();
    }
    let mut found = Vec::new();
    if range == source {
        found.push(Vec::new());
    }
    for &e in &by_range[range] {
        let below = paths_down(graph, by_range, graph.edge(e).source, source, memo);
        for mut path in below {
            path.insert(0, e);
            found.push(path);
        }
    }
    memo.insert(range, found.clone());
    found
}

/// Witness that some hom-set contains at least two distinct morphisms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomSetWitness {
    pub range: VertexIx,
    pub source: VertexIx,
    pub class_count: usize,
}

/// Result of the single-connectedness check.
#[derive(Clone, Debug, Default)]
pub struct SinglyConnectedReport {
    pub witness: Option<HomSetWitness>,
}

impl SinglyConnectedReport {
    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }
}

/// True when every hom-set holds at most one morphism.
///
/// Requires an acyclic skeleton; returns the first offending vertex pair in
/// vertex-index order otherwise.
pub fn is_singly_connected(
    graph: &ColouredGraph,
    squares: &SquareSet,
) -> Result<SinglyConnectedReport, SkeletonError> {
    graph.check_acyclic()?;
    for range in 0..graph.vertex_count() {
        for source in 0..graph.vertex_count() {
            if range == source {
                continue;
            }
            let classes = morphism_classes(graph, squares, range, source);
            if classes.len() > 1 {
                return Ok(SinglyConnectedReport {
                    witness: Some(HomSetWitness {
                        range,
                        source,
                        class_count: classes.len(),
                    }),
                });
            }
        }
    }
    Ok(SinglyConnectedReport::default())
}

/// The opposite skeleton: every edge reversed, every square side reversed.
///
/// Reversal preserves completeness and associativity, which callers can
/// re-verify with [`check_complete`] and [`check_associative`].
pub fn opposite(graph: &ColouredGraph, squares: &SquareSet) -> (ColouredGraph, SquareSet) {
    let mut reversed = ColouredGraph::default();
    for id in graph.vertex_ids() {
        reversed
            .add_vertex(id.to_owned())
            .expect("vertex ids were unique in the input graph");
    }
    for e in graph.edges() {
        reversed
            .add_edge(
                e.id.clone(),
                graph.vertex_id(e.source),
                graph.vertex_id(e.range),
                e.colour.value(),
            )
            .expect("edge data was valid in the input graph");
    }
    let flipped = squares
        .squares()
        .iter()
        .map(|sq| Square {
            top: [sq.top[1], sq.top[0]],
            bottom: [sq.bottom[1], sq.bottom[0]],
        })
        .collect();
    let squares = SquareSet::new(&reversed, flipped)
        .expect("reversing valid squares yields valid squares");
    (reversed, squares)
}

/// Renders a path as edge ids, later edge first, for reports and errors.
pub fn path_ids(graph: &ColouredGraph, path: &[EdgeIx]) -> String {
    if path.is_empty() {
        return "(identity)".to_owned();
    }
    let names: Vec<&str> = path.iter().map(|&e| graph.edge(e).id.as_str()).collect();
    names.join("·")
}

/// Deduplicates squares up to top/bottom swap, preserving first occurrence order.
pub fn dedup_squares(squares: Vec<Square>) -> Vec<Square> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for sq in squares {
        if seen.insert(sq.canonical()) {
            out.push(sq);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    /// One commuting square on four vertices: paths w <- u <- v in two colours.
    fn single_square() -> (ColouredGraph, SquareSet) {
        let graph = ColouredGraph::new(
            vec!["w".into(), "u1".into(), "u2".into(), "v".into()],
            vec![
                ("f".into(), "w".into(), "u1".into(), 1),
                ("g".into(), "u1".into(), "v".into(), 2),
                ("g2".into(), "w".into(), "u2".into(), 2),
                ("f2".into(), "u2".into(), "v".into(), 1),
            ],
        )
        .unwrap();
        let squares = SquareSet::new(
            &graph,
            vec![Square {
                top: [0, 1],
                bottom: [2, 3],
            }],
        )
        .unwrap();
        (graph, squares)
    }

    #[test]
    fn square_validation_rejects_colour_clash() {
        let graph = ColouredGraph::new(
            vec!["w".into(), "u".into(), "v".into()],
            vec![
                ("f".into(), "w".into(), "u".into(), 1),
                ("g".into(), "u".into(), "v".into(), 1),
            ],
        )
        .unwrap();
        let err = SquareSet::new(
            &graph,
            vec![Square {
                top: [0, 1],
                bottom: [0, 1],
            }],
        )
        .unwrap_err();
        assert_eq!(err, SkeletonError::BadColourPattern { index: 0 });
    }

    #[test]
    fn single_square_is_complete_and_flips() {
        let (graph, squares) = single_square();
        let report = check_complete(&graph, &squares);
        assert!(report.is_complete());
        let flipped = flip(&graph, &squares, &[0, 1], 0).unwrap();
        assert_eq!(flipped, vec![2, 3]);
        let back = flip(&graph, &squares, &flipped, 0).unwrap();
        assert_eq!(back, vec![0, 1]);
    }

    #[test]
    fn missing_square_is_reported() {
        let (graph, _) = single_square();
        let squares = SquareSet::new(&graph, Vec::new()).unwrap();
        let report = check_complete(&graph, &squares);
        assert_eq!(report.missing.len(), 2);
        assert!(!report.is_complete());
    }

    #[test]
    fn morphism_classes_join_flipped_paths() {
        let (graph, squares) = single_square();
        let w = graph.vertex_ix("w").unwrap();
        let v = graph.vertex_ix("v").unwrap();
        let classes = enumerate_morphisms(&graph, &squares, w, v).unwrap();
        assert_eq!(classes.len(), 1);
        assert_eq!(classes[0].size, 2);
        assert_eq!(classes[0].degree[0], 1);
        assert_eq!(classes[0].degree[1], 1);
        let report = is_singly_connected(&graph, &squares).unwrap();
        assert!(report.holds());
    }

    #[test]
    fn without_the_square_the_hom_set_splits() {
        let (graph, _) = single_square();
        let squares = SquareSet::new(&graph, Vec::new()).unwrap();
        let report = is_singly_connected(&graph, &squares).unwrap();
        let witness = report.witness.expect("two parallel path classes");
        assert_eq!(witness.class_count, 2);
    }

    #[test]
    fn cyclic_skeleton_is_detected() {
        let graph = ColouredGraph::new(
            vec!["u".into(), "v".into()],
            vec![
                ("f".into(), "u".into(), "v".into(), 1),
                ("g".into(), "v".into(), "u".into(), 2),
            ],
        )
        .unwrap();
        let squares = SquareSet::new(&graph, Vec::new()).unwrap();
        let err = enumerate_morphisms(&graph, &squares, 0, 1).unwrap_err();
        assert!(matches!(err, SkeletonError::CyclicSkeleton { .. }));
    }

    #[test]
    fn opposite_is_an_involution_and_preserves_completeness() {
        let (graph, squares) = single_square();
        let (rev, rev_squares) = opposite(&graph, &squares);
        assert!(check_complete(&rev, &rev_squares).is_complete());
        let (back, back_squares) = opposite(&rev, &rev_squares);
        assert_eq!(back.edge(0).range, graph.edge(0).range);
        assert_eq!(back.edge(0).source, graph.edge(0).source);
        assert!(check_complete(&back, &back_squares).is_complete());
    }

    #[test]
    fn flip_rejects_same_colour_pair() {
        let graph = ColouredGraph::new(
            vec!["w".into(), "u".into(), "v".into()],
            vec![
                ("f".into(), "w".into(), "u".into(), 1),
                ("g".into(), "u".into(), "v".into(), 1),
            ],
        )
        .unwrap();
        let squares = SquareSet::new(&graph, Vec::new()).unwrap();
        let err = flip(&graph, &squares, &[0, 1], 0).unwrap_err();
        assert!(matches!(err, SkeletonError::SameColourAdjacent { .. }));
    }

    #[test]
    fn empty_graph_is_connected_by_convention() {
        let graph = ColouredGraph::default();
        assert!(graph.is_connected());
    }
}
