//! Planarity and symmetry analysis of coloured graphs.
//!
//! Planarity is decided on the underlying simple undirected graph, one
//! biconnected block at a time, by Demoucron's incremental embedding:
//! grow an embedded subgraph from a cycle, and at each step place a
//! fragment into a face containing all of its attachment vertices,
//! preferring fragments with only one admissible face. A fragment with no
//! admissible face certifies non-planarity. An exhaustive search for
//! subdivided K₅ or K₃,₃ serves as an independent oracle on small graphs.
//!
//! Automorphisms are colour-, direction-, and square-preserving vertex
//! bijections, found by backtracking over degree signatures. Between a
//! fixed pair of endpoints, parallel edges of one colour are paired off in
//! id order, so symmetries that only swap such edges are not searched;
//! none of the graphs this crate builds have same-coloured parallel edges
//! between equal endpoints.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use crate::skeleton::{ColouredGraph, EdgeIx, Square, SquareSet, VertexIx};

/// Undirected simple edges (loops dropped, directions and multiplicities
/// collapsed), as index pairs with the smaller index first.
fn simple_undirected(graph: &ColouredGraph) -> BTreeSet<(usize, usize)> {
    let mut edges = BTreeSet::new();
    for edge in graph.edges() {
        let (u, v) = (edge.range.min(edge.source), edge.range.max(edge.source));
        if u != v {
            edges.insert((u, v));
        }
    }
    edges
}

/// Splits an undirected graph into biconnected blocks of edges.
fn biconnected_blocks(n: usize, edges: &BTreeSet<(usize, usize)>) -> Vec<Vec<(usize, usize)>> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut timer = 0;
    let mut blocks = Vec::new();
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    for start in 0..n {
        if disc[start] != usize::MAX {
            continue;
        }
        // Iterative DFS: (vertex, parent, next neighbour position).
        let mut stack = vec![(start, usize::MAX, 0usize)];
        disc[start] = timer;
        low[start] = timer;
        timer += 1;
        while let Some(&(u, parent, i)) = stack.last() {
            if i < adj[u].len() {
                stack.last_mut().expect("stack is nonempty").2 += 1;
                let v = adj[u][i];
                if v == parent {
                    continue;
                }
                if disc[v] == usize::MAX {
                    edge_stack.push((u, v));
                    disc[v] = timer;
                    low[v] = timer;
                    timer += 1;
                    stack.push((v, u, 0));
                } else if disc[v] < disc[u] {
                    edge_stack.push((u, v));
                    low[u] = low[u].min(disc[v]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[u]);
                    if low[u] >= disc[p] {
                        let mut block = Vec::new();
                        while let Some(&top) = edge_stack.last() {
                            if top == (p, u) {
                                break;
                            }
                            block.push(edge_stack.pop().expect("checked nonempty"));
                        }
                        block.push(edge_stack.pop().expect("tree edge is on the stack"));
                        blocks.push(block);
                    }
                }
            }
        }
    }
    blocks
}

/// One connected piece of the graph outside the embedded subgraph.
struct Fragment {
    /// Embedded vertices the fragment touches.
    attachments: BTreeSet<usize>,
    /// Interior vertices (empty for a chord between embedded vertices).
    interior: BTreeSet<usize>,
    /// A chord, when the fragment is a single unembedded edge.
    chord: Option<(usize, usize)>,
}

/// Demoucron's planarity test on one biconnected block.
fn demoucron(block: &[(usize, usize)]) -> bool {
    let vertices: BTreeSet<usize> = block.iter().flat_map(|&(u, v)| [u, v]).collect();
    let m = vertices.len();
    if m < 5 {
        return true;
    }
    if block.len() > 3 * m - 6 {
        return false;
    }
    let mut adj: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
    for &(u, v) in block {
        adj.entry(u).or_default().insert(v);
        adj.entry(v).or_default().insert(u);
    }

    // Find an initial cycle by walking forward until a vertex repeats; in
    // a biconnected block with at least three vertices one always exists.
    let start = *vertices.iter().next().expect("block is nonempty");
    let mut seen_at = BTreeMap::new();
    let mut walk = vec![start];
    seen_at.insert(start, 0usize);
    let cycle = loop {
        let u = *walk.last().expect("walk is nonempty");
        let prev = if walk.len() >= 2 {
            Some(walk[walk.len() - 2])
        } else {
            None
        };
        let next = *adj[&u]
            .iter()
            .find(|&&v| Some(v) != prev)
            .expect("biconnected vertices have at least two neighbours");
        if let Some(&at) = seen_at.get(&next) {
            break walk[at..].to_vec();
        }
        seen_at.insert(next, walk.len());
        walk.push(next);
    };

    let mut embedded_vertices: BTreeSet<usize> = cycle.iter().copied().collect();
    let mut embedded_edges: BTreeSet<(usize, usize)> = BTreeSet::new();
    for i in 0..cycle.len() {
        let (u, v) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        embedded_edges.insert((u.min(v), u.max(v)));
    }
    let mut faces: Vec<Vec<usize>> = vec![cycle.clone(), cycle];

    loop {
        // Collect fragments: components outside the embedding, plus chords.
        let mut fragments = Vec::new();
        let mut visited = BTreeSet::new();
        for &v in &vertices {
            if embedded_vertices.contains(&v) || visited.contains(&v) {
                continue;
            }
            let mut interior = BTreeSet::new();
            let mut attachments = BTreeSet::new();
            let mut queue = VecDeque::from([v]);
            visited.insert(v);
            interior.insert(v);
            while let Some(u) = queue.pop_front() {
                for &w in &adj[&u] {
                    if embedded_vertices.contains(&w) {
                        attachments.insert(w);
                    } else if visited.insert(w) {
                        interior.insert(w);
                        queue.push_back(w);
                    }
                }
            }
            fragments.push(Fragment {
                attachments,
                interior,
                chord: None,
            });
        }
        for &(u, v) in block {
            let key = (u.min(v), u.max(v));
            if !embedded_edges.contains(&key)
                && embedded_vertices.contains(&u)
                && embedded_vertices.contains(&v)
            {
                fragments.push(Fragment {
                    attachments: BTreeSet::from([u, v]),
                    interior: BTreeSet::new(),
                    chord: Some(key),
                });
            }
        }
        if fragments.is_empty() {
            return true;
        }

        let admissible: Vec<Vec<usize>> = fragments
            .iter()
            .map(|fragment| {
                faces
                    .iter()
                    .enumerate()
                    .filter(|(_, face)| {
                        let face_set: BTreeSet<usize> = face.iter().copied().collect();
                        fragment.attachments.is_subset(&face_set)
                    })
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect();
        if admissible.iter().any(|faces| faces.is_empty()) {
            return false;
        }
        let pick = admissible
            .iter()
            .position(|faces| faces.len() == 1)
            .unwrap_or(0);
        let fragment = &fragments[pick];
        let face_ix = admissible[pick][0];

        // A path through the fragment between two attachment vertices.
        let path = match fragment.chord {
            Some((u, v)) => vec![u, v],
            None => {
                let from = *fragment
                    .attachments
                    .iter()
                    .next()
                    .expect("fragments in a biconnected block attach somewhere");
                let goal: BTreeSet<usize> =
                    fragment.attachments.iter().copied().skip(1).collect();
                let mut parent: BTreeMap<usize, usize> = BTreeMap::new();
                let mut queue: VecDeque<usize> = adj[&from]
                    .iter()
                    .copied()
                    .filter(|w| fragment.interior.contains(w))
                    .collect();
                for &w in &queue {
                    parent.entry(w).or_insert(from);
                }
                let mut reached = None;
                'bfs: while let Some(u) = queue.pop_front() {
                    for &w in &adj[&u] {
                        if goal.contains(&w) {
                            parent.insert(w, u);
                            reached = Some(w);
                            break 'bfs;
                        }
                        if fragment.interior.contains(&w) && !parent.contains_key(&w) {
                            parent.insert(w, u);
                            queue.push_back(w);
                        }
                    }
                }
                let end = reached.expect("biconnected fragments reach a second attachment");
                let mut path = vec![end];
                let mut cur = end;
                while cur != from {
                    cur = parent[&cur];
                    path.push(cur);
                }
                path.reverse();
                path
            }
        };

        for window in path.windows(2) {
            embedded_edges.insert((window[0].min(window[1]), window[0].max(window[1])));
        }
        for &v in &path[1..path.len() - 1] {
            embedded_vertices.insert(v);
        }

        let face = faces.swap_remove(face_ix);
        let pu = face
            .iter()
            .position(|&v| v == path[0])
            .expect("face admits the path's endpoints");
        let pv = face
            .iter()
            .position(|&v| v == *path.last().expect("paths are nonempty"))
            .expect("face admits the path's endpoints");
        let len = face.len();
        let arc = |from: usize, to: usize| {
            let mut out = Vec::new();
            let mut i = from;
            loop {
                out.push(face[i]);
                if i == to {
                    break;
                }
                i = (i + 1) % len;
            }
            out
        };
        let interior_forward: Vec<usize> = path[1..path.len() - 1].to_vec();
        let mut first_face = arc(pu, pv);
        first_face.extend(interior_forward.iter().rev());
        let mut second_face = arc(pv, pu);
        second_face.extend(interior_forward.iter());
        faces.push(first_face);
        faces.push(second_face);
    }
}

/// Whether the underlying undirected simple graph is planar.
pub fn is_planar(graph: &ColouredGraph) -> bool {
    let edges = simple_undirected(graph);
    biconnected_blocks(graph.vertex_count(), &edges)
        .iter()
        .all(|block| demoucron(block))
}

/// Exhaustive search for a subdivided K₅ or K₃,₃.
///
/// Independent planarity oracle: exponential, intended for graphs with at
/// most a dozen vertices.
pub fn has_kuratowski_subdivision(graph: &ColouredGraph) -> bool {
    let n = graph.vertex_count();
    let edges = simple_undirected(graph);
    let mut adj = vec![BTreeSet::new(); n];
    for &(u, v) in &edges {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    has_k5(n, &adj) || has_k33(n, &adj)
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for v in start..n {
            current.push(v);
            rec(v + 1, n, k, current, out);
            current.pop();
        }
    }
    rec(0, n, k, &mut current, &mut out);
    out
}

/// Routes the listed vertex pairs through internally disjoint paths that
/// avoid the branch vertices.
fn route_pairs(
    pairs: &[(usize, usize)],
    branch: &BTreeSet<usize>,
    adj: &[BTreeSet<usize>],
    used: &mut Vec<bool>,
) -> bool {
    let Some(&(from, to)) = pairs.first() else {
        return true;
    };
    let rest = &pairs[1..];
    fn extend(
        cur: usize,
        to: usize,
        rest: &[(usize, usize)],
        branch: &BTreeSet<usize>,
        adj: &[BTreeSet<usize>],
        used: &mut Vec<bool>,
    ) -> bool {
        for &next in &adj[cur] {
            if next == to {
                if route_pairs(rest, branch, adj, used) {
                    return true;
                }
                continue;
            }
            if branch.contains(&next) || used[next] {
                continue;
            }
            used[next] = true;
            if extend(next, to, rest, branch, adj, used) {
                return true;
            }
            used[next] = false;
        }
        false
    }
    extend(from, to, rest, branch, adj, used)
}

fn has_k5(n: usize, adj: &[BTreeSet<usize>]) -> bool {
    if n < 5 {
        return false;
    }
    for branch in combinations(n, 5) {
        let branch_set: BTreeSet<usize> = branch.iter().copied().collect();
        let mut pairs = Vec::new();
        for i in 0..5 {
            for j in i + 1..5 {
                pairs.push((branch[i], branch[j]));
            }
        }
        let mut used = vec![false; n];
        if route_pairs(&pairs, &branch_set, adj, &mut used) {
            return true;
        }
    }
    false
}

fn has_k33(n: usize, adj: &[BTreeSet<usize>]) -> bool {
    if n < 6 {
        return false;
    }
    for six in combinations(n, 6) {
        // Partitions into two triples; fixing the first vertex's part
        // kills the swap symmetry.
        for split in combinations(5, 2) {
            let mut left = vec![six[0]];
            let mut right = Vec::new();
            for i in 0..5 {
                if split.contains(&i) {
                    left.push(six[i + 1]);
                } else {
                    right.push(six[i + 1]);
                }
            }
            let branch_set: BTreeSet<usize> = six.iter().copied().collect();
            let mut pairs = Vec::new();
            for &l in &left {
                for &r in &right {
                    pairs.push((l, r));
                }
            }
            let mut used = vec![false; n];
            if route_pairs(&pairs, &branch_set, adj, &mut used) {
                return true;
            }
        }
    }
    false
}

/// A colour-, direction-, and square-preserving symmetry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Automorphism {
    vertex_map: Vec<VertexIx>,
    edge_map: Vec<EdgeIx>,
}

impl Automorphism {
    pub fn vertex_map(&self) -> &[VertexIx] {
        &self.vertex_map
    }

    pub fn edge_map(&self) -> &[EdgeIx] {
        &self.edge_map
    }

    pub fn is_identity(&self) -> bool {
        self.vertex_map.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn has_fixed_vertex(&self) -> bool {
        self.vertex_map.iter().enumerate().any(|(i, &v)| i == v)
    }

    /// Order of the permutation: least common multiple of cycle lengths.
    pub fn order(&self) -> usize {
        let n = self.vertex_map.len();
        let mut seen = vec![false; n];
        let mut order = 1usize;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut v = start;
            while !seen[v] {
                seen[v] = true;
                v = self.vertex_map[v];
                len += 1;
            }
            order = order / gcd(order, len) * len;
        }
        order
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// All square-preserving automorphisms, in lexicographic vertex-map order.
pub fn automorphisms(graph: &ColouredGraph, squares: &SquareSet) -> Vec<Automorphism> {
    let n = graph.vertex_count();
    let mut signature: Vec<([usize; 4], [usize; 4])> = vec![([0; 4], [0; 4]); n];
    for edge in graph.edges() {
        signature[edge.range].0[edge.colour.index()] += 1;
        signature[edge.source].1[edge.colour.index()] += 1;
    }
    let mut groups: HashMap<(VertexIx, VertexIx, u8), Vec<EdgeIx>> = HashMap::new();
    for (e, edge) in graph.edges().enumerate() {
        groups
            .entry((edge.range, edge.source, edge.colour.value()))
            .or_default()
            .push(e);
    }

    let mut found = Vec::new();
    let mut assignment: Vec<Option<VertexIx>> = vec![None; n];
    let mut taken = vec![false; n];
    backtrack_vertices(
        graph,
        squares,
        &signature,
        &groups,
        &mut assignment,
        &mut taken,
        0,
        &mut found,
    );
    found
}

#[allow(clippy::too_many_arguments)]
fn backtrack_vertices(
    graph: &ColouredGraph,
    squares: &SquareSet,
    signature: &[([usize; 4], [usize; 4])],
    groups: &HashMap<(VertexIx, VertexIx, u8), Vec<EdgeIx>>,
    assignment: &mut Vec<Option<VertexIx>>,
    taken: &mut Vec<bool>,
    position: usize,
    found: &mut Vec<Automorphism>,
) {
    let n = graph.vertex_count();
    if position == n {
        if let Some(auto) = finish_automorphism(graph, squares, groups, assignment) {
            found.push(auto);
        }
        return;
    }
    'candidates: for candidate in 0..n {
        if taken[candidate] || signature[position] != signature[candidate] {
            continue;
        }
        for (other, image) in assignment.iter().enumerate().take(position) {
            let image = image.expect("earlier positions are assigned");
            for colour in 1..=crate::skeleton::MAX_COLOURS {
                let forward = |a: VertexIx, b: VertexIx| {
                    groups.get(&(a, b, colour)).map_or(0, Vec::len)
                };
                if forward(position, other) != forward(candidate, image)
                    || forward(other, position) != forward(image, candidate)
                {
                    continue 'candidates;
                }
            }
        }
        assignment[position] = Some(candidate);
        taken[candidate] = true;
        backtrack_vertices(
            graph,
            squares,
            signature,
            groups,
            assignment,
            taken,
            position + 1,
            found,
        );
        assignment[position] = None;
        taken[candidate] = false;
    }
}

/// Builds the edge bijection for a full vertex assignment and checks that
/// it maps squares onto squares.
fn finish_automorphism(
    graph: &ColouredGraph,
    squares: &SquareSet,
    groups: &HashMap<(VertexIx, VertexIx, u8), Vec<EdgeIx>>,
    assignment: &[Option<VertexIx>],
) -> Option<Automorphism> {
    let vertex_map: Vec<VertexIx> = assignment
        .iter()
        .map(|v| v.expect("assignment is complete"))
        .collect();
    let mut edge_map = vec![usize::MAX; graph.edge_count()];
    for ((range, source, colour), members) in groups {
        let image = groups.get(&(vertex_map[*range], vertex_map[*source], *colour))?;
        if image.len() != members.len() {
            return None;
        }
        for (&from, &to) in members.iter().zip(image.iter()) {
            edge_map[from] = to;
        }
    }
    for square in squares.squares() {
        let mapped = Square {
            top: [edge_map[square.top[0]], edge_map[square.top[1]]],
            bottom: [edge_map[square.bottom[0]], edge_map[square.bottom[1]]],
        };
        if !squares.contains(&mapped) {
            return None;
        }
    }
    Some(Automorphism {
        vertex_map,
        edge_map,
    })
}

/// Whether some automorphism of order exactly `n` moves every vertex.
pub fn has_fixed_point_free_of_order(
    graph: &ColouredGraph,
    squares: &SquareSet,
    n: usize,
) -> bool {
    automorphisms(graph, squares)
        .iter()
        .any(|auto| !auto.is_identity() && auto.order() == n && !auto.has_fixed_vertex())
}
