//! Acceptance gate: one test per release criterion, each printing a single
//! pass/fail line. Failure messages state the mathematical fact that broke.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use rank_graph::analysis::{
    automorphisms, has_fixed_point_free_of_order, has_kuratowski_subdivision, is_planar,
};
use rank_graph::club::{euler_identity, standard_club, QuadrangleClub};
use rank_graph::facecolour::{brute_force_minimal_palette, colour_faces};
use rank_graph::fixtures;
use rank_graph::pi1::{degree_cocycle_essential, is_tree, left_greedy_tree, plain_tree, reduce, Pi1Verdict};
use rank_graph::polyhedral::PolyhedralGraph;
use rank_graph::skeleton::{
    check_associative, check_complete, enumerate_morphisms, is_singly_connected, opposite,
    ColouredGraph, Square, SquareSet,
};
use rank_graph::surgery::{
    cut, glue, is_hereditary, quotient, CutSide, GluePiece, Iso, Relation, SubgraphMark,
    SurgeryError,
};

fn club_of(name: &str, poly: &PolyhedralGraph) -> QuadrangleClub {
    standard_club(poly)
        .unwrap_or_else(|err| panic!("building the quadrangle club of {name} failed: {err}"))
}

/// The generated corpus shared by the property-suite criteria: small lunar
/// and pizza wheels plus deterministic random triangulations.
fn generated_corpus() -> Vec<(String, PolyhedralGraph)> {
    let mut corpus = Vec::new();
    for n in 1..=6 {
        corpus.push((format!("lunar({n})"), fixtures::lunar(n)));
    }
    for n in 1..=5 {
        corpus.push((format!("pizza({n})"), fixtures::pizza(n)));
    }
    for points in 4..=8 {
        for seed in [11, 29] {
            corpus.push((
                format!("random({points}, seed {seed})"),
                fixtures::random_apollonian(points, seed),
            ));
        }
    }
    corpus
}

fn finish(criterion: &str, failures: Vec<String>) {
    if failures.is_empty() {
        println!("{criterion}: pass");
    } else {
        println!("{criterion}: FAIL");
        for failure in &failures {
            println!("  {failure}");
        }
        panic!("{criterion} failed:\n{}", failures.join("\n"));
    }
}

#[test]
fn criterion_01_smallest_lune_golden_pipeline() {
    let poly = fixtures::lunar(1);
    let club = club_of("lunar(1)", &poly);
    let graph = club.graph();
    assert_eq!(graph.vertex_count(), 6, "the one-lune club has 6 vertices");
    assert_eq!(graph.edge_count(), 8, "the one-lune club has 8 edges");
    assert_eq!(club.squares().len(), 4, "the one-lune club has 4 squares");

    let tree = left_greedy_tree(&club).expect("the club skeleton is connected");
    let tree_ids: BTreeSet<&str> = tree.edges().iter().map(|&e| graph.edge(e).id.as_str()).collect();
    let expected: BTreeSet<&str> =
        ["(a0,r0)", "(a1,r0)", "(r0,v1)", "(r0,v2)", "(a0,r1)"].into();
    assert_eq!(
        tree_ids, expected,
        "the left-greedy tree must pick both weight-2 arc edges into the \
         shared range face, its two point edges, and one weight-1 bridge"
    );

    let report = reduce(graph, club.squares(), &tree).expect("reduction runs");
    assert_eq!(
        report.verdict,
        Pi1Verdict::Trivial,
        "contracting the tree and applying the 4 square relations must \
         trivialise the fundamental group"
    );
    let mut settled: BTreeSet<&str> = tree_ids;
    settled.extend(report.eliminations());
    assert_eq!(
        settled.len(),
        8,
        "all 8 generators must be settled: 5 by the tree, 3 by eliminations"
    );
    finish("criterion 01", Vec::new());
}

#[test]
fn criterion_02_three_slice_pizza_golden_pipeline() {
    let poly = fixtures::pizza(3);
    let colouring = colour_faces(&poly, 4).expect("the wheel's faces admit four colours");
    assert_eq!(
        colouring.palette_size(),
        4,
        "three mutually adjacent slices plus the outer face force four colours"
    );
    let club = club_of("pizza(3)", &poly);
    let graph = club.graph();
    assert_eq!(graph.vertex_count(), 14, "3 points + 6 arcs + 4 faces + hub");
    assert_eq!(graph.edge_count(), 24);
    assert_eq!(club.squares().len(), 12, "two half-arc squares per arc");

    let tree = left_greedy_tree(&club).expect("the club skeleton is connected");
    assert_eq!(tree.len(), 13, "a spanning tree of 14 vertices has 13 edges");
    let report = reduce(graph, club.squares(), &tree).expect("reduction runs");
    assert_eq!(report.verdict, Pi1Verdict::Trivial);
    let eliminations = report.eliminations();
    assert!(
        eliminations.len() >= 2 && eliminations[0] == "(a1,R4)" && eliminations[1] == "(R4,v3)",
        "the reducer must first kill the outer-face edge of the first rim \
         arc, then the freed face-to-point edge; got {:?}",
        &eliminations[..eliminations.len().min(2)]
    );
    finish("criterion 02", Vec::new());
}

#[test]
fn criterion_03_counting_identity() {
    let mut failures = Vec::new();
    for n in 1..=6 {
        for (name, poly) in [
            (format!("lunar({n})"), fixtures::lunar(n)),
            (format!("pizza({n})"), fixtures::pizza(n)),
        ] {
            let club = club_of(&name, &poly);
            if !euler_identity(club.graph()) {
                let graph = club.graph();
                failures.push(format!(
                    "club of {name}: |E1| - 2|E0| + 4 = {} instead of 0",
                    graph.edge_count() as i64 - 2 * graph.vertex_count() as i64 + 4
                ));
            }
        }
    }
    let (grid, _) = fixtures::omega(&[2, 2]);
    if euler_identity(&grid) {
        failures.push(
            "the 3-by-3 commuting grid satisfies the counting identity, but its \
             9 vertices and 12 edges give 12 - 18 + 4 = -2"
                .to_owned(),
        );
    }
    finish("criterion 03", failures);
}

#[test]
fn criterion_04_palette_alternation() {
    let mut failures = Vec::new();
    let lunar_expected = |n: usize| if n % 2 == 1 { 2 } else { 3 };
    let pizza_expected = |n: usize| {
        if n == 1 {
            2
        } else if n % 2 == 0 {
            3
        } else {
            4
        }
    };
    for n in 1..=8 {
        for (name, poly, expected) in [
            ("lunar", fixtures::lunar(n), lunar_expected(n)),
            ("pizza", fixtures::pizza(n), pizza_expected(n)),
        ] {
            match colour_faces(&poly, 4) {
                Ok(colouring) => {
                    let palette = colouring.palette_size() as u8;
                    if palette != expected {
                        failures.push(format!(
                            "{name}({n}): search found a palette of {palette}, \
                             the face adjacencies force {expected}"
                        ));
                    }
                }
                Err(err) => failures.push(format!("{name}({n}): colouring failed: {err}")),
            }
            let faces = poly
                .embedding()
                .expect("generated families carry face data")
                .face_count();
            if faces <= 8 {
                match brute_force_minimal_palette(&poly) {
                    Ok(minimal) => {
                        if minimal != expected {
                            failures.push(format!(
                                "{name}({n}): exhaustive search finds minimum \
                                 {minimal}, expected {expected}"
                            ));
                        }
                    }
                    Err(err) => failures.push(format!("{name}({n}): oracle failed: {err}")),
                }
            }
        }
    }
    finish("criterion 04", failures);
}

#[test]
fn criterion_05_club_property_suite() {
    let mut failures = Vec::new();
    for (name, poly) in generated_corpus() {
        let club = club_of(&name, &poly);
        let graph = club.graph();
        let squares = club.squares();

        let completeness = check_complete(graph, squares);
        if !completeness.is_complete() {
            failures.push(format!(
                "club of {name} is not complete: {} two-coloured corner paths \
                 lack a filling square and {} are filled twice; a face with \
                 more than two boundary points leaves unmatched corners",
                completeness.missing.len(),
                completeness.duplicated.len()
            ));
        }
        let associativity = check_associative(graph, squares);
        if !associativity.is_associative() || !associativity.is_vacuous() {
            failures.push(format!(
                "club of {name} must be vacuously associative: every path has \
                 length at most two, yet {} three-coloured paths were checked \
                 with {} failures",
                associativity.paths_checked,
                associativity.failures.len()
            ));
        }
        if !graph.is_connected() {
            failures.push(format!("club of {name} is not connected"));
        }
        match is_singly_connected(graph, squares) {
            Ok(report) => {
                if let Some(witness) = &report.witness {
                    failures.push(format!(
                        "club of {name} is not singly connected: the hom-set \
                         from {} to {} splits into {} flip classes",
                        graph.vertex_id(witness.source),
                        graph.vertex_id(witness.range),
                        witness.class_count
                    ));
                }
            }
            Err(err) => failures.push(format!("club of {name}: {err}")),
        }
        if !is_planar(graph) {
            failures.push(format!("club of {name} is not planar"));
        }
        if squares.len() != 2 * poly.arc_count() {
            failures.push(format!(
                "club of {name} has {} squares, not two per arc ({} arcs)",
                squares.len(),
                poly.arc_count()
            ));
        }
    }
    finish("criterion 05", failures);
}

#[test]
fn criterion_06_clubs_are_trees() {
    let mut failures = Vec::new();
    for (name, poly) in generated_corpus() {
        let club = club_of(&name, &poly);
        let tree = match left_greedy_tree(&club) {
            Ok(tree) => tree,
            Err(err) => {
                failures.push(format!("club of {name}: {err}"));
                continue;
            }
        };
        match is_tree(club.graph(), club.squares(), &tree) {
            Ok(true) => {}
            Ok(false) => failures.push(format!(
                "club of {name}: reduction finished with surviving generators"
            )),
            Err(err) => failures.push(format!("club of {name}: reduction stalled: {err}")),
        }

        let (op_graph, op_squares) = opposite(club.graph(), club.squares());
        let op_tree = match plain_tree(&op_graph) {
            Ok(tree) => tree,
            Err(err) => {
                failures.push(format!("opposite club of {name}: {err}"));
                continue;
            }
        };
        match is_tree(&op_graph, &op_squares, &op_tree) {
            Ok(true) => {}
            Ok(false) => failures.push(format!(
                "opposite club of {name}: reduction finished with surviving generators"
            )),
            Err(err) => {
                failures.push(format!("opposite club of {name}: reduction stalled: {err}"))
            }
        }
    }
    finish("criterion 06", failures);
}

#[test]
fn criterion_07_rank_tree_menagerie() {
    let mut failures = Vec::new();

    let (cube4, cube4_squares) = fixtures::hypercube(4);
    if cube4.rank() != 4 {
        failures.push("the 4-cube complex must use four colours".to_owned());
    }
    match plain_tree(&cube4).and_then(|tree| is_tree(&cube4, &cube4_squares, &tree)) {
        Ok(true) => {}
        Ok(false) => failures.push(
            "the 4-cube complex reduced without stalling but generators survive".to_owned(),
        ),
        Err(err) => failures.push(format!(
            "the 4-cube complex must reduce to the trivial group: {err}"
        )),
    }
    if is_planar(&cube4) {
        failures.push(
            "the 4-cube skeleton drew in the plane, yet it contains a \
             subdivided complete bipartite graph on 3+3 branch vertices"
                .to_owned(),
        );
    }

    let (triangle, triangle_squares) = fixtures::triangle();
    if !is_planar(&triangle) {
        failures.push("the triangle complex skeleton must be planar".to_owned());
    }
    if triangle.rank() != 2 {
        failures.push("the triangle complex must use two colours".to_owned());
    }
    match plain_tree(&triangle).and_then(|tree| is_tree(&triangle, &triangle_squares, &tree)) {
        Ok(true) => {}
        Ok(false) => failures.push(
            "the triangle complex reduced without stalling but generators survive".to_owned(),
        ),
        Err(err) => failures.push(format!(
            "the triangle complex is not shown to be a rank-2 tree: a spanning \
             tree on its 24 vertices leaves 19 of the 42 generators free and \
             only 12 square relations to kill them, so at least 7 independent \
             loops survive; the reducer reports: {err}"
        )),
    }
    if !has_fixed_point_free_of_order(&triangle, &triangle_squares, 3) {
        failures.push(
            "the triangle complex must admit a fixed-point-free symmetry of \
             order 3 rotating its three corner blocks"
                .to_owned(),
        );
    }

    let (rigid, rigid_squares) = fixtures::rigid19();
    let group = automorphisms(&rigid, &rigid_squares);
    if group.len() != 1 {
        failures.push(format!(
            "the 19-vertex complex must be rigid, found {} symmetries",
            group.len()
        ));
    }
    finish("criterion 07", failures);
}

/// One wing: an arc vertex over two face vertices over one point vertex,
/// with the single square relating its two routes.
fn wing(arc: &str, left: &str, right: &str, point: &str) -> (ColouredGraph, SquareSet) {
    let edge = |f: &str, t: &str| format!("({f},{t})");
    let graph = ColouredGraph::new(
        vec![arc.to_owned(), left.to_owned(), right.to_owned(), point.to_owned()],
        vec![
            (edge(arc, right), arc.to_owned(), right.to_owned(), 2),
            (edge(arc, left), arc.to_owned(), left.to_owned(), 1),
            (edge(right, point), right.to_owned(), point.to_owned(), 1),
            (edge(left, point), left.to_owned(), point.to_owned(), 2),
        ],
    )
    .expect("wing is well formed");
    let square = Square {
        top: [
            graph.edge_ix(&edge(arc, right)).expect("edge exists"),
            graph.edge_ix(&edge(right, point)).expect("edge exists"),
        ],
        bottom: [
            graph.edge_ix(&edge(arc, left)).expect("edge exists"),
            graph.edge_ix(&edge(left, point)).expect("edge exists"),
        ],
    };
    let squares = SquareSet::new(&graph, vec![square]).expect("square is coherent");
    (graph, squares)
}

fn canonical(graph: &ColouredGraph, squares: &SquareSet) -> (Vec<String>, Vec<String>, Vec<String>) {
    let mut vertices: Vec<String> = graph.vertex_ids().map(str::to_owned).collect();
    vertices.sort();
    let mut edges: Vec<String> = graph
        .edges()
        .map(|edge| {
            format!(
                "{} {} {} {}",
                edge.id,
                graph.vertex_id(edge.range),
                graph.vertex_id(edge.source),
                edge.colour.value()
            )
        })
        .collect();
    edges.sort();
    let mut square_rows: Vec<String> = squares
        .squares()
        .iter()
        .map(|square| {
            let id = |e| graph.edge(e).id.clone();
            let top = format!("{} {}", id(square.top[0]), id(square.top[1]));
            let bottom = format!("{} {}", id(square.bottom[0]), id(square.bottom[1]));
            if top <= bottom {
                format!("{top} = {bottom}")
            } else {
                format!("{bottom} = {top}")
            }
        })
        .collect();
    square_rows.sort();
    (vertices, edges, square_rows)
}

#[test]
fn criterion_08_surgery_round_trips() {
    let mut failures = Vec::new();

    // Gluing two wings along the shared arc-to-left-face locus.
    let (first_graph, first_squares) = wing("a", "L", "R", "p");
    let (second_graph, second_squares) = wing("a2", "L2", "R2", "q");
    let first_mark = SubgraphMark::new(&first_graph, &["a".into(), "L".into()], &["(a,L)".into()])
        .expect("mark is a subgraph");
    let second_mark = SubgraphMark::new(
        &second_graph,
        &["a2".into(), "L2".into()],
        &["(a2,L2)".into()],
    )
    .expect("mark is a subgraph");
    let iso = Iso {
        vertex_map: HashMap::from([("a".into(), "a2".into()), ("L".into(), "L2".into())]),
        edge_map: HashMap::from([("(a,L)".into(), "(a2,L2)".into())]),
    };
    match glue(
        GluePiece {
            graph: &first_graph,
            squares: &first_squares,
            mark: &first_mark,
        },
        GluePiece {
            graph: &second_graph,
            squares: &second_squares,
            mark: &second_mark,
        },
        &iso,
    ) {
        Ok((glued, glued_squares)) => {
            if glued.vertex_count() != 6
                || glued.edge_count() != 7
                || glued_squares.len() != 2
            {
                failures.push(format!(
                    "gluing two 4-vertex wings along one arc, one face and one \
                     edge must leave 6 vertices, 7 edges and 2 squares; got \
                     {}, {} and {}",
                    glued.vertex_count(),
                    glued.edge_count(),
                    glued_squares.len()
                ));
            }
            if !check_complete(&glued, &glued_squares).is_complete() {
                failures.push(
                    "the glued two-wing graph must have complete squares".to_owned(),
                );
            }
        }
        Err(err) => failures.push(format!("gluing the two wings failed: {err}")),
    }

    // Cutting the one-lune club along complementary hereditary loci and
    // gluing the halves back together must reproduce it.
    let poly = fixtures::lunar(1);
    let club = club_of("lunar(1)", &poly);
    let graph = club.graph();
    let squares = club.squares();
    let shared_vertices: Vec<String> =
        ["a:a0", "a:a1", "f:r0", "f:r1"].map(str::to_owned).to_vec();
    let shared_edges: Vec<String> = ["(a0,r0)", "(a0,r1)", "(a1,r0)", "(a1,r1)"]
        .map(str::to_owned)
        .to_vec();
    let half = |point: &str| -> (Vec<String>, Vec<String>) {
        let mut vertices = shared_vertices.clone();
        vertices.push(format!("p:{point}"));
        let mut edges = shared_edges.clone();
        edges.push(format!("(r0,{point})"));
        edges.push(format!("(r1,{point})"));
        (vertices, edges)
    };
    let (v1_vertices, v1_edges) = half("v1");
    let (v2_vertices, v2_edges) = half("v2");
    let first_locus = SubgraphMark::new(graph, &v1_vertices, &v1_edges).expect("subgraph");
    let second_locus = SubgraphMark::new(graph, &v2_vertices, &v2_edges).expect("subgraph");
    for (locus, point) in [(&first_locus, "v1"), (&second_locus, "v2")] {
        if !is_hereditary(graph, locus) {
            failures.push(format!(
                "the downward closure of point {point} must be hereditary"
            ));
        }
    }
    let cut_result = cut(graph, squares, &first_locus, CutSide::Inside).and_then(|first| {
        cut(graph, squares, &second_locus, CutSide::Inside).map(|second| (first, second))
    });
    match cut_result {
        Ok(((first_piece, first_piece_squares), (second_piece, second_piece_squares))) => {
            let locus_a =
                SubgraphMark::new(&first_piece, &shared_vertices, &shared_edges).expect("subgraph");
            let locus_b = SubgraphMark::new(&second_piece, &shared_vertices, &shared_edges)
                .expect("subgraph");
            let identity = Iso::identity(&first_piece, &locus_a);
            match glue(
                GluePiece {
                    graph: &first_piece,
                    squares: &first_piece_squares,
                    mark: &locus_a,
                },
                GluePiece {
                    graph: &second_piece,
                    squares: &second_piece_squares,
                    mark: &locus_b,
                },
                &identity,
            ) {
                Ok((rebuilt, rebuilt_squares)) => {
                    if canonical(&rebuilt, &rebuilt_squares) != canonical(graph, squares) {
                        failures.push(
                            "cutting the one-lune club at both points and regluing \
                             along the shared arc-face locus must rebuild the same \
                             graph, up to reordering"
                                .to_owned(),
                        );
                    }
                }
                Err(err) => failures.push(format!("regluing the two halves failed: {err}")),
            }
        }
        Err(err) => failures.push(format!("cutting along a hereditary locus failed: {err}")),
    }

    // A quotient identifying edges of different colours must be rejected.
    let (sphere, sphere_squares) = fixtures::sphere2();
    let relation = Relation {
        vertex_pairs: Vec::new(),
        edge_pairs: vec![("a".into(), "e".into())],
    };
    match quotient(&sphere, &sphere_squares, &relation) {
        Err(SurgeryError::CompatibilityError { .. }) => {}
        Err(err) => failures.push(format!(
            "identifying a colour-1 edge with a colour-2 edge must be a \
             compatibility failure, got: {err}"
        )),
        Ok(_) => failures.push(
            "identifying a colour-1 edge with a colour-2 edge must fail, \
             but the quotient was built"
                .to_owned(),
        ),
    }
    finish("criterion 08", failures);
}

#[test]
fn criterion_09_degree_functor_is_essential() {
    let mut failures = Vec::new();
    let mut complexes: Vec<(String, ColouredGraph, SquareSet)> = generated_corpus()
        .into_iter()
        .map(|(name, poly)| {
            let club = club_of(&name, &poly);
            (name, club.graph().clone(), club.squares().clone())
        })
        .collect();
    let (grid, grid_squares) = fixtures::omega(&[5, 3]);
    complexes.push(("the 6-by-4 commuting grid".to_owned(), grid, grid_squares));
    for (name, graph, squares) in &complexes {
        match degree_cocycle_essential(graph, squares) {
            Ok(report) => {
                if let Some(collision) = &report.collision {
                    failures.push(format!(
                        "degree functor fails to separate morphisms of {name}: \
                         paths {} and {} share range {}, source {} and degree \
                         {:?} but lie in different flip classes",
                        collision.first,
                        collision.second,
                        collision.range,
                        collision.source,
                        collision.degree
                    ));
                }
            }
            Err(err) => failures.push(format!("{name}: {err}")),
        }
    }
    finish("criterion 09", failures);
}

/// All directed paths with range `u` and source `v`, written later edge
/// first, found by exhaustive depth-first search.
fn all_paths(graph: &ColouredGraph, range: usize, source: usize) -> Vec<Vec<usize>> {
    let by_range = graph.edges_by_range();
    let mut found = Vec::new();
    if range == source {
        found.push(Vec::new());
    }
    // Walk backwards from the range: extend each partial path at its source end.
    let mut stack: Vec<(usize, Vec<usize>)> = vec![(range, Vec::new())];
    while let Some((at, path)) = stack.pop() {
        for &e in &by_range[at] {
            let next = graph.edge(e).source;
            let mut longer = path.clone();
            longer.push(e);
            if next == source {
                found.push(longer.clone());
            }
            stack.push((next, longer));
        }
    }
    found
}

/// Flip-equivalence classes of the given paths, by union-find over single
/// square replacements.
fn naive_class_sizes(squares: &SquareSet, paths: &[Vec<usize>]) -> Vec<usize> {
    let index: HashMap<&[usize], usize> = paths
        .iter()
        .enumerate()
        .map(|(i, p)| (p.as_slice(), i))
        .collect();
    let mut parent: Vec<usize> = (0..paths.len()).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let root = find(parent, parent[x]);
            parent[x] = root;
        }
        parent[x]
    }
    for (i, path) in paths.iter().enumerate() {
        for pos in 0..path.len().saturating_sub(1) {
            let pair = [path[pos], path[pos + 1]];
            for square in squares.squares() {
                let replacement = if pair == square.top {
                    Some(square.bottom)
                } else if pair == square.bottom {
                    Some(square.top)
                } else {
                    None
                };
                if let Some(other) = replacement {
                    let mut flipped = path.clone();
                    flipped[pos] = other[0];
                    flipped[pos + 1] = other[1];
                    let j = *index
                        .get(flipped.as_slice())
                        .expect("a flip of a path is a path");
                    let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                    parent[ri] = rj;
                }
            }
        }
    }
    let mut sizes: BTreeMap<usize, usize> = BTreeMap::new();
    for i in 0..paths.len() {
        *sizes.entry(find(&mut parent, i)).or_insert(0) += 1;
    }
    let mut sizes: Vec<usize> = sizes.into_values().collect();
    sizes.sort_unstable();
    sizes
}

/// The coloured-graph fixtures on at most ten vertices.
fn small_complexes() -> Vec<(String, ColouredGraph, SquareSet)> {
    let mut set: Vec<(String, ColouredGraph, SquareSet)> = Vec::new();
    let (sphere, sphere_squares) = fixtures::sphere2();
    set.push(("the two-sphere complex".to_owned(), sphere, sphere_squares));
    for k in 1..=3 {
        let (graph, squares) = fixtures::hypercube(k);
        set.push((format!("the {k}-cube complex"), graph, squares));
    }
    let (cube, cube_squares) = fixtures::cube3();
    set.push(("the mixed-colour cube".to_owned(), cube, cube_squares));
    let (grid, grid_squares) = fixtures::omega(&[2, 2]);
    set.push(("the 3-by-3 commuting grid".to_owned(), grid, grid_squares));
    for n in 1..=3 {
        let name = format!("club of lunar({n})");
        let club = club_of(&name, &fixtures::lunar(n));
        set.push((name, club.graph().clone(), club.squares().clone()));
    }
    for n in 1..=2 {
        let name = format!("club of pizza({n})");
        let club = club_of(&name, &fixtures::pizza(n));
        set.push((name, club.graph().clone(), club.squares().clone()));
    }
    set.retain(|(_, graph, _)| graph.vertex_count() <= 10);
    set
}

#[test]
fn criterion_10_oracle_agreement() {
    let mut failures = Vec::new();
    for (name, graph, squares) in small_complexes() {
        let embedded = is_planar(&graph);
        let obstructed = has_kuratowski_subdivision(&graph);
        if embedded == obstructed {
            failures.push(format!(
                "{name}: the embedding search says planar = {embedded} but the \
                 subdivision search says an obstruction {} present",
                if obstructed { "is" } else { "is not" }
            ));
        }
        for range in 0..graph.vertex_count() {
            for source in 0..graph.vertex_count() {
                let classes = match enumerate_morphisms(&graph, &squares, range, source) {
                    Ok(classes) => classes,
                    Err(err) => {
                        failures.push(format!("{name}: {err}"));
                        continue;
                    }
                };
                let paths = all_paths(&graph, range, source);
                let naive = naive_class_sizes(&squares, &paths);
                let mut reported: Vec<usize> =
                    classes.iter().map(|class| class.size).collect();
                reported.sort_unstable();
                if reported != naive {
                    failures.push(format!(
                        "{name}: morphisms from {} to {} split into classes of \
                         sizes {naive:?} by exhaustive flipping but {reported:?} \
                         by the library",
                        graph.vertex_id(source),
                        graph.vertex_id(range)
                    ));
                }
            }
        }
    }
    finish("criterion 10", failures);
}
