//! Named example complexes and family generators: lunes and pizzas on the
//! two-point and wheel spheres, commuting lattice boxes, hypercubes, the
//! two-sphere complex, a rank-4 complex glued from two cubes, a subdivided
//! triangle with a free rotational symmetry, a rigid 19-vertex complex,
//! and seeded random triangulations of the sphere.

use std::collections::HashMap;

use crate::polyhedral::PolyhedralGraph;
use crate::skeleton::{ColouredGraph, Square, SquareSet};
use crate::surgery::{glue, GluePiece, Iso, SubgraphMark};

/// The lune with `n + 1` meridian arcs between poles `v1` and `v2`.
///
/// Arcs `a0 ..= a<n>` all have range `v1` and source `v2`. The sectors are
/// `r0 ..= r<n>`, with `ri` to the right of `ai` and `r(i+1)` to its left;
/// the last arc closes the cycle with `r0` on its right. `lunar(1)` is the
/// quadrangle: two arcs bounding two faces.
///
/// # Panics
///
/// Panics if `n` is zero; a single sector would bound itself.
pub fn lunar(n: usize) -> PolyhedralGraph {
    assert!(n >= 1, "a lune needs at least two sectors");
    let arcs = (0..=n)
        .map(|i| (format!("a{i}"), "v1".to_owned(), "v2".to_owned()))
        .collect();
    let faces = (0..=n).map(|i| format!("r{i}")).collect();
    let sides = (0..=n)
        .map(|i| {
            let (left, right) = if i < n {
                (format!("r{}", i + 1), format!("r{i}"))
            } else {
                (format!("r{n}"), "r0".to_owned())
            };
            (format!("a{i}"), left, right)
        })
        .collect();
    PolyhedralGraph::new(vec!["v1".into(), "v2".into()], arcs)
        .expect("lune ids are distinct")
        .with_sides(faces, sides)
        .expect("lune sides are consistent")
}

/// The pizza with `n` slices: a rim cycle around a hub.
///
/// For `n == 1` the graph degenerates to a lune: the rim arc `a1` and the
/// spoke `I1` run side by side between `v1` and `v2`, bounding `R1` and
/// `R2`. For `n >= 2` the rim points `v1 .. v<n>` circle the hub
/// `v<n+1>`; rim arcs `a1 .. a<n>` close the outer cycle and each spoke
/// `I<j>` joins `v<j>` to the hub. The slices are `R1 .. R<n>` and the
/// outer face is `R<n+1>`.
///
/// # Panics
///
/// Panics if `n` is zero.
pub fn pizza(n: usize) -> PolyhedralGraph {
    assert!(n >= 1, "a pizza needs at least one slice");
    if n == 1 {
        return PolyhedralGraph::new(
            vec!["v1".into(), "v2".into()],
            vec![
                ("a1".into(), "v1".into(), "v2".into()),
                ("I1".into(), "v1".into(), "v2".into()),
            ],
        )
        .expect("pizza ids are distinct")
        .with_sides(
            vec!["R1".into(), "R2".into()],
            vec![
                ("a1".into(), "R2".into(), "R1".into()),
                ("I1".into(), "R2".into(), "R1".into()),
            ],
        )
        .expect("pizza sides are consistent");
    }
    // The rim is walked in this point order; three slices walk 1, 3, 2 so
    // the slice opposite each point keeps its conventional number.
    let seq: Vec<usize> = if n == 3 { vec![1, 3, 2] } else { (1..=n).collect() };
    let hub = n + 1;
    let points: Vec<String> = (1..=hub).map(|j| format!("v{j}")).collect();
    let outer = format!("R{}", n + 1);
    let mut arcs = Vec::new();
    let mut sides = Vec::new();
    for k in 1..=n {
        let (range, source) = if k < n {
            (seq[k - 1], seq[k])
        } else {
            (seq[0], seq[n - 1])
        };
        arcs.push((format!("a{k}"), format!("v{range}"), format!("v{source}")));
        let (left, right) = if k < n {
            (outer.clone(), format!("R{k}"))
        } else {
            (format!("R{n}"), outer.clone())
        };
        sides.push((format!("a{k}"), left, right));
    }
    for j in 1..=n {
        arcs.push((format!("I{j}"), format!("v{j}"), format!("v{hub}")));
        let idx = seq.iter().position(|&p| p == j).expect("rim point walked");
        let (left, right) = if idx == 0 {
            ("R1".to_owned(), format!("R{n}"))
        } else {
            (format!("R{}", idx + 1), format!("R{idx}"))
        };
        sides.push((format!("I{j}"), left, right));
    }
    let faces = (1..=n + 1).map(|f| format!("R{f}")).collect();
    PolyhedralGraph::new(points, arcs)
        .expect("pizza ids are distinct")
        .with_sides(faces, sides)
        .expect("pizza sides are consistent")
}

/// The commuting lattice box over `0..=shape[i]` in each coordinate.
///
/// Vertices are the integer points, named by comma-joined coordinates.
/// The edge `e<i+1>:<p>` of colour `i + 1` has range `p` and source
/// `p + e_i`, so morphisms flow from larger points to smaller ones, and
/// every pair of directions spans a square wherever both fit.
///
/// # Panics
///
/// Panics unless `1 <= shape.len() <= 4`.
pub fn omega(shape: &[usize]) -> (ColouredGraph, SquareSet) {
    let k = shape.len();
    assert!((1..=4).contains(&k), "boxes exist in ranks one to four");
    let mut points: Vec<Vec<usize>> = vec![vec![]];
    for &m in shape {
        points = points
            .iter()
            .flat_map(|p| {
                (0..=m).map(move |c| {
                    let mut q = p.clone();
                    q.push(c);
                    q
                })
            })
            .collect();
    }
    let id = |p: &[usize]| {
        p.iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    };
    let vertices: Vec<String> = points.iter().map(|p| id(p)).collect();
    let mut edges = Vec::new();
    for p in &points {
        for i in 0..k {
            if p[i] < shape[i] {
                let mut q = p.clone();
                q[i] += 1;
                edges.push((
                    format!("e{}:{}", i + 1, id(p)),
                    id(p),
                    id(&q),
                    (i + 1) as u8,
                ));
            }
        }
    }
    let graph = ColouredGraph::new(vertices, edges).expect("box ids are distinct");
    let edge_ix = |i: usize, p: &[usize]| {
        graph
            .edge_ix(&format!("e{}:{}", i + 1, id(p)))
            .expect("box edge exists")
    };
    let mut squares = Vec::new();
    for p in &points {
        for i in 0..k {
            for j in i + 1..k {
                if p[i] < shape[i] && p[j] < shape[j] {
                    let mut pi = p.clone();
                    pi[i] += 1;
                    let mut pj = p.clone();
                    pj[j] += 1;
                    squares.push(Square {
                        top: [edge_ix(i, p), edge_ix(j, &pi)],
                        bottom: [edge_ix(j, p), edge_ix(i, &pj)],
                    });
                }
            }
        }
    }
    let squares = SquareSet::new(&graph, squares).expect("box squares commute");
    (graph, squares)
}

/// The rank-`k` hypercube: vertices are length-`k` bitstrings, each set
/// bit can be cleared along an edge of the matching colour, and every
/// pair of set bits spans a square.
///
/// # Panics
///
/// Panics unless `1 <= k <= 4`.
pub fn hypercube(k: usize) -> (ColouredGraph, SquareSet) {
    assert!((1..=4).contains(&k), "hypercubes exist in ranks one to four");
    let colours: Vec<u8> = (1..=k as u8).collect();
    cube_complex(&colours, "")
}

/// The three-dimensional cube, `hypercube(3)` under its usual name.
pub fn cube3() -> (ColouredGraph, SquareSet) {
    hypercube(3)
}

/// A hypercube over an arbitrary colour list, with ids prefixed.
fn cube_complex(colours: &[u8], prefix: &str) -> (ColouredGraph, SquareSet) {
    let k = colours.len();
    let id = |v: usize| format!("{prefix}{v:0width$b}", width = k);
    let vertices: Vec<String> = (0..1usize << k).map(id).collect();
    let mut edges = Vec::new();
    for v in 0..1usize << k {
        for (i, &colour) in colours.iter().enumerate() {
            if v & (1 << i) != 0 {
                edges.push((
                    format!("d{colour}:{}", id(v)),
                    id(v & !(1 << i)),
                    id(v),
                    colour,
                ));
            }
        }
    }
    let graph = ColouredGraph::new(vertices, edges).expect("cube ids are distinct");
    let edge_ix = |i: usize, v: usize| {
        graph
            .edge_ix(&format!("d{}:{}", colours[i], id(v)))
            .expect("cube edge exists")
    };
    let mut squares = Vec::new();
    for v in 0..1usize << k {
        for i in 0..k {
            for j in i + 1..k {
                if v & (1 << i) != 0 && v & (1 << j) != 0 {
                    squares.push(Square {
                        top: [edge_ix(i, v & !(1 << j)), edge_ix(j, v)],
                        bottom: [edge_ix(j, v & !(1 << i)), edge_ix(i, v)],
                    });
                }
            }
        }
    }
    let squares = SquareSet::new(&graph, squares).expect("cube squares commute");
    (graph, squares)
}

/// Two cubes sharing a sink: colours 1, 2, 3 on the left cube and
/// 1, 2, 4 on the right, glued at their terminal vertices. The result
/// has rank four, yet every square lives entirely in one cube.
pub fn degenerate4() -> (ColouredGraph, SquareSet) {
    let (left, left_squares) = cube_complex(&[1, 2, 3], "l");
    let (right, right_squares) = cube_complex(&[1, 2, 4], "r");
    let left_mark =
        SubgraphMark::new(&left, &["l000".to_owned()], &[]).expect("sink is a vertex");
    let right_mark =
        SubgraphMark::new(&right, &["r000".to_owned()], &[]).expect("sink is a vertex");
    let iso = Iso {
        vertex_map: HashMap::from([("l000".to_owned(), "r000".to_owned())]),
        edge_map: HashMap::new(),
    };
    glue(
        GluePiece {
            graph: &left,
            squares: &left_squares,
            mark: &left_mark,
        },
        GluePiece {
            graph: &right,
            squares: &right_squares,
            mark: &right_mark,
        },
        &iso,
    )
    .expect("sinks glue cleanly")
}

/// The two-sphere complex: six vertices, eight edges in two colours and
/// four squares. Complete and connected with |E¹| − 2|E⁰| + 4 = 0, yet
/// not the club of any polyhedral graph.
pub fn sphere2() -> (ColouredGraph, SquareSet) {
    let graph = ColouredGraph::new(
        ["u", "v", "w", "x", "y", "z"].map(String::from).to_vec(),
        vec![
            ("a".into(), "w".into(), "u".into(), 1),
            ("b".into(), "w".into(), "v".into(), 1),
            ("c".into(), "y".into(), "x".into(), 1),
            ("d".into(), "z".into(), "x".into(), 1),
            ("e".into(), "x".into(), "u".into(), 2),
            ("f".into(), "x".into(), "v".into(), 2),
            ("g".into(), "y".into(), "w".into(), 2),
            ("h".into(), "z".into(), "w".into(), 2),
        ],
    )
    .expect("sphere ids are distinct");
    let ix = |id: &str| graph.edge_ix(id).expect("sphere edge exists");
    let squares = SquareSet::new(
        &graph,
        vec![
            Square {
                top: [ix("c"), ix("e")],
                bottom: [ix("g"), ix("a")],
            },
            Square {
                top: [ix("c"), ix("f")],
                bottom: [ix("g"), ix("b")],
            },
            Square {
                top: [ix("d"), ix("e")],
                bottom: [ix("h"), ix("a")],
            },
            Square {
                top: [ix("d"), ix("f")],
                bottom: [ix("h"), ix("b")],
            },
        ],
    )
    .expect("sphere squares commute");
    (graph, squares)
}

/// The subdivided triangle: corners `A`, `B`, `C`, side midpoints `P`,
/// `Q`, `R`, outer waypoints `2`, `3`, `4`, a tripled centre `1a`, `1b`,
/// `1c`, and six two-edge lanes. Rotating the corners A to C to B is a
/// colour-preserving automorphism with no fixed vertex. 24 vertices, 42
/// two-coloured edges and 12 squares; complete, but the count
/// 24 − 42 + 12 = −6 obstructs a trivial fundamental group.
pub fn triangle() -> (ColouredGraph, SquareSet) {
    let vertices = [
        "A", "B", "C", "P", "Q", "R", "2", "3", "4", "1a", "1b", "1c", "CP", "CP1", "AP",
        "AP1", "AQ", "AQ1", "BQ", "BQ1", "CR", "CR1", "BR", "BR1",
    ];
    // (source, range, colour): blue is 1, red is 2; each edge id is "s>r".
    let spec: [(&str, &str, u8); 42] = [
        // The outer ring through the waypoints and the tripled centre.
        ("A", "2", 2),
        ("2", "P", 1),
        ("1a", "P", 2),
        ("A", "1a", 1),
        ("C", "2", 2),
        ("C", "1c", 1),
        ("1c", "R", 2),
        ("4", "R", 1),
        ("C", "4", 2),
        ("B", "4", 2),
        ("B", "1b", 1),
        ("1b", "Q", 2),
        ("3", "Q", 1),
        ("A", "3", 2),
        ("B", "3", 2),
        // Six double lanes from corners to midpoints.
        ("C", "CP", 2),
        ("C", "CP1", 1),
        ("CP", "P", 1),
        ("CP1", "P", 2),
        ("A", "AP", 1),
        ("A", "AP1", 2),
        ("AP", "P", 2),
        ("AP1", "P", 1),
        ("B", "BQ", 1),
        ("B", "BQ1", 2),
        ("BQ", "Q", 2),
        ("BQ1", "Q", 1),
        ("A", "AQ", 2),
        ("A", "AQ1", 1),
        ("AQ", "Q", 1),
        ("AQ1", "Q", 2),
        ("C", "CR", 1),
        ("C", "CR1", 2),
        ("CR", "R", 2),
        ("CR1", "R", 1),
        ("B", "BR", 2),
        ("B", "BR1", 1),
        ("BR", "R", 1),
        ("BR1", "R", 2),
        // Centre spokes.
        ("C", "1a", 1),
        ("A", "1b", 1),
        ("B", "1c", 1),
    ];
    let edges = spec
        .iter()
        .map(|&(s, r, colour)| (format!("{s}>{r}"), r.to_owned(), s.to_owned(), colour))
        .collect();
    let graph = ColouredGraph::new(vertices.map(String::from).to_vec(), edges)
        .expect("triangle ids are distinct");
    let ix = |id: &str| graph.edge_ix(id).expect("triangle edge exists");
    let quad = |t0: &str, t1: &str, b0: &str, b1: &str| Square {
        top: [ix(t0), ix(t1)],
        bottom: [ix(b0), ix(b1)],
    };
    let squares = SquareSet::new(
        &graph,
        vec![
            // One square per lane pair.
            quad("CP>P", "C>CP", "CP1>P", "C>CP1"),
            quad("AP>P", "A>AP", "AP1>P", "A>AP1"),
            quad("BQ>Q", "B>BQ", "BQ1>Q", "B>BQ1"),
            quad("AQ>Q", "A>AQ", "AQ1>Q", "A>AQ1"),
            quad("CR>R", "C>CR", "CR1>R", "C>CR1"),
            quad("BR>R", "B>BR", "BR1>R", "B>BR1"),
            // One square per corner reaching a midpoint through its
            // waypoint and through the centre.
            quad("2>P", "C>2", "1a>P", "C>1a"),
            quad("2>P", "A>2", "1a>P", "A>1a"),
            quad("3>Q", "A>3", "1b>Q", "A>1b"),
            quad("3>Q", "B>3", "1b>Q", "B>1b"),
            quad("4>R", "C>4", "1c>R", "C>1c"),
            quad("4>R", "B>4", "1c>R", "B>1c"),
        ],
    )
    .expect("triangle squares commute");
    (graph, squares)
}

/// A chain of five commuting squares with a sixth hung below the second:
/// 19 vertices named by grid coordinates, 24 two-coloured edges, six
/// squares. Complete, and its only automorphism is the identity.
pub fn rigid19() -> (ColouredGraph, SquareSet) {
    fn push_unique(vertices: &mut Vec<String>, id: &str) {
        if !vertices.iter().any(|v| v == id) {
            vertices.push(id.to_owned());
        }
    }
    let name = |x: i64, y: i64| format!("{x},{y}");
    let mut vertices: Vec<String> = Vec::new();
    let mut edges: Vec<(String, String, String, u8)> = Vec::new();
    let mut square_ids: Vec<[String; 4]> = Vec::new();
    for t in [0i64, 2, 4, 6, 8] {
        let left = name(t, 1);
        let top = name(t + 1, 2);
        let bottom = name(t + 1, 0);
        let right = name(t + 2, 1);
        for v in [&left, &top, &bottom, &right] {
            push_unique(&mut vertices, v);
        }
        let e1 = format!("{top}>{left}");
        let e2 = format!("{right}>{bottom}");
        let e3 = format!("{top}>{right}");
        let e4 = format!("{left}>{bottom}");
        edges.push((e1.clone(), left.clone(), top.clone(), 2));
        edges.push((e2.clone(), bottom.clone(), right.clone(), 2));
        edges.push((e3.clone(), right.clone(), top.clone(), 1));
        edges.push((e4.clone(), bottom.clone(), left.clone(), 1));
        square_ids.push([e4, e1, e2, e3]);
    }
    // The hanging square shares the second scope's bottom vertex (3,0).
    let hl = name(2, -1);
    let ht = name(3, 0);
    let hb = name(3, -2);
    let hr = name(4, -1);
    for v in [&hl, &hb, &hr] {
        push_unique(&mut vertices, v);
    }
    let h1 = format!("{hl}>{ht}");
    let h2 = format!("{hb}>{hr}");
    let h3 = format!("{hb}>{hl}");
    let h4 = format!("{hr}>{ht}");
    edges.push((h1.clone(), ht.clone(), hl.clone(), 2));
    edges.push((h2.clone(), hr.clone(), hb.clone(), 2));
    edges.push((h3.clone(), hl.clone(), hb.clone(), 1));
    edges.push((h4.clone(), ht.clone(), hr.clone(), 1));
    square_ids.push([h4, h2, h1, h3]);
    let graph = ColouredGraph::new(vertices, edges).expect("grid ids are distinct");
    let squares = square_ids
        .iter()
        .map(|[t0, t1, b0, b1]| Square {
            top: [
                graph.edge_ix(t0).expect("grid edge exists"),
                graph.edge_ix(t1).expect("grid edge exists"),
            ],
            bottom: [
                graph.edge_ix(b0).expect("grid edge exists"),
                graph.edge_ix(b1).expect("grid edge exists"),
            ],
        })
        .collect();
    let squares = SquareSet::new(&graph, squares).expect("grid squares commute");
    (graph, squares)
}

/// A random triangulation of the sphere grown by repeated point insertion.
///
/// Starts from the tetrahedron and repeatedly picks a face, driven by a
/// splitmix64 stream seeded with `seed`, placing a new point inside it
/// joined to the three corners. The rotation system is maintained locally
/// at every step, so the result always embeds in the sphere; the returned
/// graph carries its traced faces. Deterministic for a fixed seed.
///
/// # Panics
///
/// Panics if `points < 4`.
pub fn random_apollonian(points: usize, seed: u64) -> PolyhedralGraph {
    assert!(points >= 4, "growth starts from the tetrahedron");
    let mut point_ids: Vec<String> = (1..=4).map(|j| format!("p{j}")).collect();
    let mut arcs: Vec<(String, String, String)> = vec![
        ("a1".into(), "p1".into(), "p2".into()),
        ("a2".into(), "p2".into(), "p3".into()),
        ("a3".into(), "p3".into(), "p1".into()),
        ("a4".into(), "p1".into(), "p4".into()),
        ("a5".into(), "p2".into(), "p4".into()),
        ("a6".into(), "p3".into(), "p4".into()),
    ];
    let mut rotation: HashMap<String, Vec<String>> = HashMap::from([
        ("p1".into(), vec!["a1".into(), "a4".into(), "a3".into()]),
        ("p2".into(), vec!["a2".into(), "a5".into(), "a1".into()]),
        ("p3".into(), vec!["a3".into(), "a6".into(), "a2".into()]),
        ("p4".into(), vec!["a6".into(), "a4".into(), "a5".into()]),
    ]);
    // Each face keeps its corners with the arc joining each consecutive pair.
    let mut faces: Vec<([String; 3], [String; 3])> = vec![
        (
            ["p1".into(), "p2".into(), "p3".into()],
            ["a1".into(), "a2".into(), "a3".into()],
        ),
        (
            ["p1".into(), "p2".into(), "p4".into()],
            ["a1".into(), "a5".into(), "a4".into()],
        ),
        (
            ["p2".into(), "p3".into(), "p4".into()],
            ["a2".into(), "a6".into(), "a5".into()],
        ),
        (
            ["p3".into(), "p1".into(), "p4".into()],
            ["a3".into(), "a4".into(), "a6".into()],
        ),
    ];
    let mut state = seed;
    for next_point in 5..=points {
        let pick = (split_next(&mut state) % faces.len() as u64) as usize;
        let (corners, boundary) = faces.swap_remove(pick);
        let w = format!("p{next_point}");
        let base = arcs.len();
        let new_arc_ids: Vec<String> = (0..3).map(|o| format!("a{}", base + o + 1)).collect();
        for (arc_id, corner) in new_arc_ids.iter().zip(corners.iter()) {
            arcs.push((arc_id.clone(), corner.clone(), w.clone()));
        }
        // Wedge-split the rotation at each corner between that corner's
        // two boundary arcs; the pair is cyclically adjacent exactly once.
        for (i, corner) in corners.iter().enumerate() {
            let here = &boundary[i];
            let back = &boundary[(i + 2) % 3];
            let ring = rotation.get_mut(corner).expect("corner has a rotation");
            let slot = wedge_slot(ring, here, back);
            ring.insert(slot, new_arc_ids[i].clone());
        }
        rotation.insert(w.clone(), new_arc_ids.clone());
        faces.push((
            [corners[0].clone(), corners[1].clone(), w.clone()],
            [
                boundary[0].clone(),
                new_arc_ids[1].clone(),
                new_arc_ids[0].clone(),
            ],
        ));
        faces.push((
            [corners[1].clone(), corners[2].clone(), w.clone()],
            [
                boundary[1].clone(),
                new_arc_ids[2].clone(),
                new_arc_ids[1].clone(),
            ],
        ));
        faces.push((
            [corners[2].clone(), corners[0].clone(), w.clone()],
            [
                boundary[2].clone(),
                new_arc_ids[0].clone(),
                new_arc_ids[2].clone(),
            ],
        ));
        point_ids.push(w.clone());
        // Orient the new fan: if this cyclic order traces to the wrong
        // face count, the reverse order is the coherent one.
        if !rotation_is_spherical(&point_ids, &arcs, &rotation) {
            rotation.get_mut(&w).expect("fresh point").reverse();
        }
    }
    assemble(&point_ids, &arcs, &rotation)
        .trace_faces()
        .expect("grown rotations trace")
}

/// The insertion slot strictly between two cyclically adjacent ring arcs.
fn wedge_slot(ring: &[String], first: &str, second: &str) -> usize {
    let len = ring.len();
    for i in 0..len {
        let here = ring[i].as_str();
        let next = ring[(i + 1) % len].as_str();
        if (here == first && next == second) || (here == second && next == first) {
            return i + 1;
        }
    }
    unreachable!("face arcs are cyclically adjacent at their corner")
}

fn rotation_is_spherical(
    points: &[String],
    arcs: &[(String, String, String)],
    rotation: &HashMap<String, Vec<String>>,
) -> bool {
    match assemble(points, arcs, rotation).trace_faces() {
        Ok(traced) => {
            let faces = traced.embedding().map_or(0, |e| e.face_count());
            faces + points.len() == arcs.len() + 2
        }
        Err(_) => false,
    }
}

fn assemble(
    points: &[String],
    arcs: &[(String, String, String)],
    rotation: &HashMap<String, Vec<String>>,
) -> PolyhedralGraph {
    PolyhedralGraph::new(points.to_vec(), arcs.to_vec())
        .expect("grown ids are distinct")
        .with_rotation(
            points
                .iter()
                .map(|p| (p.clone(), rotation[p].clone()))
                .collect(),
        )
        .expect("grown rotation lists incident arcs")
}

fn split_next(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::club::{build_club, euler_identity, standard_club, verify_club};
    use crate::facecolour::colour_faces;
    use crate::pi1::{left_greedy_tree, plain_tree, reduce, Pi1Verdict};
    use crate::skeleton::{check_associative, check_complete};

    fn canonical_dump(graph: &ColouredGraph, squares: &SquareSet) -> String {
        let mut out = String::new();
        for v in 0..graph.vertex_count() {
            out.push_str("v ");
            out.push_str(graph.vertex_id(v));
            out.push('\n');
        }
        for e in graph.edges() {
            out.push_str(&format!(
                "e {} {} {} {}\n",
                e.id,
                graph.vertex_id(e.range),
                graph.vertex_id(e.source),
                e.colour.value()
            ));
        }
        for sq in squares.squares() {
            let id = |e: crate::skeleton::EdgeIx| graph.edge(e).id.as_str();
            out.push_str(&format!(
                "q {} {} {} {}\n",
                id(sq.top[0]),
                id(sq.top[1]),
                id(sq.bottom[0]),
                id(sq.bottom[1])
            ));
        }
        out
    }

    fn fnv64(text: &str) -> u64 {
        let mut hash = 0xcbf2_9ce4_8422_2325u64;
        for byte in text.bytes() {
            hash ^= u64::from(byte);
            hash = hash.wrapping_mul(0x0000_0100_0000_01B3);
        }
        hash
    }

    #[test]
    fn the_smallest_lune_is_the_quadrangle() {
        let poly = lunar(1);
        assert!(poly.validate().is_valid());
        let club = standard_club(&poly).unwrap();
        assert_eq!(club.graph().vertex_count(), 6);
        assert_eq!(club.graph().edge_count(), 8);
        assert_eq!(club.squares().len(), 4);
        let cert = verify_club(&poly, &club);
        assert!(cert.all_pass(), "lunar(1) certificate: {cert:?}");
    }

    #[test]
    fn lune_palettes_alternate_with_parity() {
        for n in 1..=6 {
            let poly = lunar(n);
            assert!(poly.validate().is_valid(), "lunar({n}) invalid");
            let palette = colour_faces(&poly, 4).unwrap().palette_size();
            let expected = if n % 2 == 1 { 2 } else { 3 };
            assert_eq!(palette, expected, "lunar({n}) palette");
        }
    }

    #[test]
    fn pizza_three_matches_the_hand_reduction() {
        let poly = pizza(3);
        assert!(poly.validate().is_valid());
        let colouring = colour_faces(&poly, 4).unwrap();
        assert_eq!(colouring.palette_size(), 4);
        let club = build_club(&poly, &colouring).unwrap();
        assert_eq!(club.graph().vertex_count(), 14);
        assert_eq!(club.graph().edge_count(), 24);
        assert_eq!(club.squares().len(), 12);

        let tree = left_greedy_tree(&club).unwrap();
        let ids: Vec<&str> = tree
            .edges()
            .iter()
            .map(|&e| club.graph().edge(e).id.as_str())
            .collect();
        assert_eq!(
            ids,
            [
                "(a1,R1)",
                "(R1,v1)",
                "(R1,v3)",
                "(R4,v1)",
                "(a2,R2)",
                "(R2,v3)",
                "(R2,v2)",
                "(a3,R4)",
                "(R3,v1)",
                "(I1,R3)",
                "(R3,v4)",
                "(I2,R2)",
                "(I3,R1)",
            ]
        );
        assert!(tree.weights().iter().all(|&w| w == 2));

        let report = reduce(club.graph(), club.squares(), &tree).unwrap();
        assert_eq!(report.verdict, Pi1Verdict::Trivial);
        assert_eq!(
            report.eliminations(),
            [
                "(a1,R4)",
                "(R4,v3)",
                "(a2,R4)",
                "(R4,v2)",
                "(a3,R3)",
                "(R3,v2)",
                "(I1,R1)",
                "(R1,v4)",
                "(I2,R3)",
                "(R2,v4)",
                "(I3,R2)",
            ]
        );
    }

    #[test]
    fn pizza_family_counts_and_palettes() {
        let one = pizza(1);
        assert!(one.validate().is_valid());
        assert_eq!(one.point_count(), 2);
        assert_eq!(one.arc_count(), 2);
        assert_eq!(colour_faces(&one, 4).unwrap().palette_size(), 2);

        for (n, expected) in [(2, 3), (3, 4), (4, 3), (5, 4)] {
            let poly = pizza(n);
            assert!(poly.validate().is_valid(), "pizza({n}) invalid");
            assert_eq!(poly.point_count(), n + 1);
            assert_eq!(poly.arc_count(), 2 * n);
            let palette = colour_faces(&poly, 4).unwrap().palette_size();
            assert_eq!(palette, expected, "pizza({n}) palette");
        }
    }

    #[test]
    fn boxes_commute_but_fail_the_counting_identity() {
        let (graph, squares) = omega(&[2, 2]);
        assert_eq!(graph.vertex_count(), 9);
        assert_eq!(graph.edge_count(), 12);
        assert_eq!(squares.len(), 4);
        assert!(check_complete(&graph, &squares).is_complete());
        assert!(!euler_identity(&graph));

        let (cube, cube_squares) = omega(&[1, 1, 1]);
        assert_eq!(cube.vertex_count(), 8);
        assert_eq!(cube.edge_count(), 12);
        assert_eq!(cube_squares.len(), 6);
        let assoc = check_associative(&cube, &cube_squares);
        assert!(assoc.is_associative() && !assoc.is_vacuous());
    }

    #[test]
    fn hypercubes_collapse_to_a_point() {
        for k in [3, 4] {
            let (graph, squares) = hypercube(k);
            assert_eq!(graph.vertex_count(), 1 << k);
            assert_eq!(graph.edge_count(), k << (k - 1));
            assert!(check_complete(&graph, &squares).is_complete());
            assert!(check_associative(&graph, &squares).is_associative());
            let tree = plain_tree(&graph).unwrap();
            let report = reduce(&graph, &squares, &tree).unwrap();
            assert_eq!(
                report.verdict,
                Pi1Verdict::Trivial,
                "hypercube({k}) residual: {:?}",
                report.residual_relations
            );
        }
    }

    #[test]
    fn the_two_sphere_complex_is_complete_but_not_a_club() {
        let (graph, squares) = sphere2();
        assert_eq!(graph.vertex_count(), 6);
        assert_eq!(graph.edge_count(), 8);
        assert_eq!(squares.len(), 4);
        assert!(check_complete(&graph, &squares).is_complete());
        assert!(euler_identity(&graph));
    }

    #[test]
    fn the_glued_rank_four_complex_keeps_both_cubes() {
        let (graph, squares) = degenerate4();
        assert_eq!(graph.vertex_count(), 15);
        assert_eq!(graph.edge_count(), 24);
        assert_eq!(squares.len(), 12);
        assert_eq!(graph.rank(), 4);
        assert!(check_complete(&graph, &squares).is_complete());
    }

    #[test]
    fn the_triangle_is_complete_and_locked() {
        let (graph, squares) = triangle();
        assert_eq!(graph.vertex_count(), 24);
        assert_eq!(graph.edge_count(), 42);
        assert_eq!(squares.len(), 12);
        assert!(check_complete(&graph, &squares).is_complete());
        let hash = fnv64(&canonical_dump(&graph, &squares));
        assert_eq!(format!("{hash:016x}"), "09ce91b7e30779f3");
    }

    #[test]
    fn the_rigid_complex_is_complete_and_locked() {
        let (graph, squares) = rigid19();
        assert_eq!(graph.vertex_count(), 19);
        assert_eq!(graph.edge_count(), 24);
        assert_eq!(squares.len(), 6);
        assert!(check_complete(&graph, &squares).is_complete());
        let hash = fnv64(&canonical_dump(&graph, &squares));
        assert_eq!(format!("{hash:016x}"), "1c497798900fb22c");
    }

    #[test]
    fn grown_triangulations_stay_spherical() {
        for seed in [1u64, 7, 1234] {
            for points in 4..=8 {
                let poly = random_apollonian(points, seed);
                let report = poly.validate();
                assert!(report.is_valid(), "seed {seed} points {points}: {report}");
                let faces = poly.embedding().unwrap().face_count();
                assert_eq!(faces, poly.arc_count() - points + 2);
            }
        }
        let first = random_apollonian(8, 99);
        let second = random_apollonian(8, 99);
        assert_eq!(first.arc_count(), second.arc_count());
        let arcs = |g: &PolyhedralGraph| {
            (0..g.arc_count())
                .map(|a| g.arc(a).id.clone())
                .collect::<Vec<_>>()
        };
        assert_eq!(arcs(&first), arcs(&second));
    }
}
