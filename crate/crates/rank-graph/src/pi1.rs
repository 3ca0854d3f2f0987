//! Fundamental groups of coloured graphs with squares.
//!
//! The fundamental group is presented by one generator per edge, one
//! relation per square equating its two length-2 paths, and one killing
//! relation per edge of a spanning tree. The reducer eliminates
//! generators by substitution and free reduction: a relation whose sides
//! shrink to one letter against nothing kills a generator, one letter per
//! side merges two generators (possibly inverted), and two letters
//! against nothing identifies a generator with an inverse. Everything is
//! replayed to a fixpoint. A presentation that empties out proves the
//! group trivial; anything left over is reported verbatim, with no claim
//! about whether the remainder is trivial.

use crate::club::QuadrangleClub;
use crate::skeleton::{
    enumerate_morphisms, ColouredGraph, EdgeIx, SkeletonError, SquareSet,
};
use crate::util::{SignedUnionFind, UnionFind};

/// Problems while building a spanning tree or reducing a presentation.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Pi1Error {
    #[error("the graph is not connected, so no spanning tree exists")]
    Disconnected,
    #[error("tree refers to edge index {index}, but the graph has {edges} edges")]
    TreeEdgeOutOfRange { index: usize, edges: usize },
    #[error("tree has {actual} edges but a spanning tree here needs {expected}")]
    TreeSizeMismatch { expected: usize, actual: usize },
    #[error("tree edge {edge} closes a cycle")]
    TreeCyclic { edge: String },
    #[error(
        "the presentation did not reduce to the trivial group; \
         {generators} generators and {relations} relations remain"
    )]
    ReducedUndecided { generators: usize, relations: usize },
}

/// A spanning tree, in the order edges were accepted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanningTree {
    edges: Vec<EdgeIx>,
    weights: Vec<u32>,
}

impl SpanningTree {
    pub fn edges(&self) -> &[EdgeIx] {
        &self.edges
    }

    /// Weight of each tree edge, parallel to [`Self::edges`].
    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, edge: EdgeIx) -> bool {
        self.edges.contains(&edge)
    }
}

/// Kruskal scan by descending weight, ties broken by edge index.
fn kruskal(graph: &ColouredGraph, weights: &[u32]) -> Result<SpanningTree, Pi1Error> {
    let mut order: Vec<EdgeIx> = (0..graph.edge_count()).collect();
    order.sort_by_key(|&e| std::cmp::Reverse(weights[e]));
    let mut uf = UnionFind::new(graph.vertex_count());
    let mut edges = Vec::new();
    let target = graph.vertex_count().saturating_sub(1);
    for e in order {
        if edges.len() == target {
            break;
        }
        let edge = graph.edge(e);
        if uf.unite(edge.range, edge.source) {
            edges.push(e);
        }
    }
    if edges.len() != target {
        return Err(Pi1Error::Disconnected);
    }
    let tree_weights = edges.iter().map(|&e| weights[e]).collect();
    Ok(SpanningTree {
        edges,
        weights: tree_weights,
    })
}

/// The left-greedy maximum-weight spanning tree of a club.
///
/// Weight-2 edges (the right-face side of the construction) are scanned
/// first, in emission order, then the weight-1 edges; an edge is accepted
/// whenever it joins two components.
pub fn left_greedy_tree(club: &QuadrangleClub) -> Result<SpanningTree, Pi1Error> {
    kruskal(club.graph(), club.weights())
}

/// A spanning tree with all weights equal, scanned in edge order.
pub fn plain_tree(graph: &ColouredGraph) -> Result<SpanningTree, Pi1Error> {
    kruskal(graph, &vec![1; graph.edge_count()])
}

/// One reduction event, in the order the reducer found them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TraceStep {
    /// A square relation proved this generator trivial.
    Kill { edge: String },
    /// A square relation identified two generators.
    Merge {
        first: String,
        second: String,
        inverted: bool,
    },
    /// A square relation identified a generator with its own inverse.
    Involution { edge: String },
}

impl std::fmt::Display for TraceStep {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TraceStep::Kill { edge } => write!(f, "kill {edge}"),
            TraceStep::Merge {
                first,
                second,
                inverted,
            } => {
                if *inverted {
                    write!(f, "merge {first} = {second}^-1")
                } else {
                    write!(f, "merge {first} = {second}")
                }
            }
            TraceStep::Involution { edge } => write!(f, "involution {edge}^2 = 1"),
        }
    }
}

/// Outcome of the reduction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pi1Verdict {
    /// Every generator reduced to the identity; the group is trivial.
    Trivial,
    /// Reduction stalled; the residual presentation is reported as-is.
    Reduced,
}

/// Full record of one reduction run.
#[derive(Clone, Debug)]
pub struct Pi1Report {
    pub tree: SpanningTree,
    pub trace: Vec<TraceStep>,
    pub verdict: Pi1Verdict,
    /// Representatives of the generator classes that survived.
    pub residual_generators: Vec<String>,
    /// Relations that would not reduce, rendered over the survivors.
    pub residual_relations: Vec<String>,
}

impl Pi1Report {
    /// Edge ids killed by square relations, in elimination order.
    pub fn eliminations(&self) -> Vec<&str> {
        self.trace
            .iter()
            .filter_map(|step| match step {
                TraceStep::Kill { edge } => Some(edge.as_str()),
                _ => None,
            })
            .collect()
    }
}

type Letter = (usize, bool);

/// Rewrites a word over class representatives and freely reduces it.
fn normal_form(uf: &mut SignedUnionFind, one: usize, word: &[Letter]) -> Vec<Letter> {
    let one_root = uf.find(one).0;
    let mut out: Vec<Letter> = Vec::with_capacity(word.len());
    for &(g, inverted) in word {
        let (root, sign) = uf.find(g);
        if root == one_root {
            continue;
        }
        let exponent = sign ^ inverted;
        match out.last() {
            Some(&(top, top_exp)) if top == root && (top_exp != exponent || uf.is_torsion(root)) =>
            {
                out.pop();
            }
            _ => out.push((root, exponent)),
        }
    }
    out
}

fn strip_common_ends(lhs: &mut Vec<Letter>, rhs: &mut Vec<Letter>) {
    let mut head = 0;
    while head < lhs.len() && head < rhs.len() && lhs[head] == rhs[head] {
        head += 1;
    }
    lhs.drain(..head);
    rhs.drain(..head);
    while let (Some(&l), Some(&r)) = (lhs.last(), rhs.last()) {
        if l != r {
            break;
        }
        lhs.pop();
        rhs.pop();
    }
}

fn render_word(graph: &ColouredGraph, word: &[Letter]) -> String {
    if word.is_empty() {
        return "1".to_owned();
    }
    word.iter()
        .map(|&(g, inverted)| {
            let id = &graph.edge(g).id;
            if inverted {
                format!("{id}^-1")
            } else {
                id.clone()
            }
        })
        .collect::<Vec<_>>()
        .join(" · ")
}

/// Reduces the presentation of the fundamental group given a spanning tree.
///
/// Square relations are processed eagerly in square order and replayed to
/// a fixpoint. Tree kills are setup, not trace entries.
pub fn reduce(
    graph: &ColouredGraph,
    squares: &SquareSet,
    tree: &SpanningTree,
) -> Result<Pi1Report, Pi1Error> {
    let n = graph.edge_count();
    for &e in tree.edges() {
        if e >= n {
            return Err(Pi1Error::TreeEdgeOutOfRange { index: e, edges: n });
        }
    }
    let expected = graph.vertex_count().saturating_sub(1);
    if tree.len() != expected {
        return Err(Pi1Error::TreeSizeMismatch {
            expected,
            actual: tree.len(),
        });
    }
    let mut cycle_check = UnionFind::new(graph.vertex_count());
    for &e in tree.edges() {
        let edge = graph.edge(e);
        if !cycle_check.unite(edge.range, edge.source) {
            return Err(Pi1Error::TreeCyclic {
                edge: edge.id.clone(),
            });
        }
    }

    let one = n;
    let mut uf = SignedUnionFind::new(n + 1);
    for &e in tree.edges() {
        uf.unite(e, one, false);
    }

    struct Relation {
        lhs: Vec<Letter>,
        rhs: Vec<Letter>,
        resolved: bool,
    }
    let mut relations: Vec<Relation> = squares
        .squares()
        .iter()
        .map(|sq| Relation {
            lhs: vec![(sq.top[0], false), (sq.top[1], false)],
            rhs: vec![(sq.bottom[0], false), (sq.bottom[1], false)],
            resolved: false,
        })
        .collect();

    let mut trace = Vec::new();
    loop {
        let mut changed = false;
        for relation in relations.iter_mut().filter(|r| !r.resolved) {
            let mut lhs = normal_form(&mut uf, one, &relation.lhs);
            let mut rhs = normal_form(&mut uf, one, &relation.rhs);
            strip_common_ends(&mut lhs, &mut rhs);
            match (lhs.as_slice(), rhs.as_slice()) {
                ([], []) => {
                    relation.resolved = true;
                    changed = true;
                }
                ([(g, _)], []) | ([], [(g, _)]) => {
                    uf.unite(*g, one, false);
                    trace.push(TraceStep::Kill {
                        edge: graph.edge(*g).id.clone(),
                    });
                    relation.resolved = true;
                    changed = true;
                }
                ([(g1, s1)], [(g2, s2)]) => {
                    let inverted = s1 ^ s2;
                    if uf.unite(*g1, *g2, inverted) {
                        trace.push(if g1 == g2 {
                            TraceStep::Involution {
                                edge: graph.edge(*g1).id.clone(),
                            }
                        } else {
                            TraceStep::Merge {
                                first: graph.edge(*g1).id.clone(),
                                second: graph.edge(*g2).id.clone(),
                                inverted,
                            }
                        });
                    }
                    relation.resolved = true;
                    changed = true;
                }
                ([(g1, s1), (g2, s2)], []) | ([], [(g1, s1), (g2, s2)]) => {
                    let inverted = !(s1 ^ s2);
                    if uf.unite(*g1, *g2, inverted) {
                        trace.push(if g1 == g2 {
                            TraceStep::Involution {
                                edge: graph.edge(*g1).id.clone(),
                            }
                        } else {
                            TraceStep::Merge {
                                first: graph.edge(*g1).id.clone(),
                                second: graph.edge(*g2).id.clone(),
                                inverted,
                            }
                        });
                    }
                    relation.resolved = true;
                    changed = true;
                }
                _ => {}
            }
        }
        if !changed {
            break;
        }
    }

    let one_root = uf.find(one).0;
    let mut residual_generators = Vec::new();
    for g in 0..n {
        let (root, _) = uf.find(g);
        if root != one_root && root == g {
            residual_generators.push(graph.edge(g).id.clone());
        }
    }
    let mut residual_relations = Vec::new();
    for relation in relations.iter().filter(|r| !r.resolved) {
        let mut lhs = normal_form(&mut uf, one, &relation.lhs);
        let mut rhs = normal_form(&mut uf, one, &relation.rhs);
        strip_common_ends(&mut lhs, &mut rhs);
        residual_relations.push(format!(
            "{} = {}",
            render_word(graph, &lhs),
            render_word(graph, &rhs)
        ));
    }
    for g in 0..n {
        let (root, _) = uf.find(g);
        if root != one_root && root == g && uf.is_torsion(g) {
            let id = &graph.edge(g).id;
            residual_relations.push(format!("{id} · {id} = 1"));
        }
    }
    let verdict = if residual_generators.is_empty() {
        Pi1Verdict::Trivial
    } else {
        Pi1Verdict::Reduced
    };
    Ok(Pi1Report {
        tree: tree.clone(),
        trace,
        verdict,
        residual_generators,
        residual_relations,
    })
}

/// Whether the reducer proves the fundamental group trivial.
///
/// `Ok(true)` on a trivial verdict; a stalled reduction is an error, not
/// a negative answer, because the residual may still present the trivial
/// group.
pub fn is_tree(
    graph: &ColouredGraph,
    squares: &SquareSet,
    tree: &SpanningTree,
) -> Result<bool, Pi1Error> {
    let report = reduce(graph, squares, tree)?;
    match report.verdict {
        Pi1Verdict::Trivial => Ok(true),
        Pi1Verdict::Reduced => Err(Pi1Error::ReducedUndecided {
            generators: report.residual_generators.len(),
            relations: report.residual_relations.len(),
        }),
    }
}

/// A pair of distinct parallel morphisms with equal degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeCollision {
    pub range: String,
    pub source: String,
    pub first: String,
    pub second: String,
    pub degree: [usize; 4],
}

/// Report on injectivity of the degree functor on every hom-set.
#[derive(Clone, Debug)]
pub struct EssentialReport {
    pub collision: Option<DegreeCollision>,
}

impl EssentialReport {
    pub fn holds(&self) -> bool {
        self.collision.is_none()
    }
}

/// Whether the degree functor embeds the category into its fundamental
/// groupoid: injective on every hom-set.
///
/// Two distinct morphism classes between the same vertices with the same
/// degree vector defeat the embedding; the first collision found (in
/// vertex-index order) is reported.
pub fn degree_cocycle_essential(
    graph: &ColouredGraph,
    squares: &SquareSet,
) -> Result<EssentialReport, SkeletonError> {
    for range in 0..graph.vertex_count() {
        for source in 0..graph.vertex_count() {
            if range == source {
                continue;
            }
            let classes = enumerate_morphisms(graph, squares, range, source)?;
            for (i, first) in classes.iter().enumerate() {
                for second in &classes[i + 1..] {
                    if first.degree == second.degree {
                        return Ok(EssentialReport {
                            collision: Some(DegreeCollision {
                                range: graph.vertex_id(range).to_owned(),
                                source: graph.vertex_id(source).to_owned(),
                                first: crate::skeleton::path_ids(graph, &first.representative),
                                second: crate::skeleton::path_ids(graph, &second.representative),
                                degree: first.degree,
                            }),
                        });
                    }
                }
            }
        }
    }
    Ok(EssentialReport { collision: None })
}
