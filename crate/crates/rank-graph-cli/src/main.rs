//! Command line front end: build, check, reduce and transform
//! higher-rank graphs stored in the crate's JSON formats.

use std::error::Error;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::json;

use rank_graph::analysis::{automorphisms, is_planar};
use rank_graph::club::{build_club, euler_identity, verify_club, ClubCertificate};
use rank_graph::export;
use rank_graph::facecolour::{colour_faces, validate_colouring, ColouringError, FaceColouring};
use rank_graph::fixtures;
use rank_graph::io;
use rank_graph::pi1::{
    degree_cocycle_essential, left_greedy_tree, plain_tree, reduce, Pi1Report, Pi1Verdict,
};
use rank_graph::polyhedral::PolyhedralGraph;
use rank_graph::skeleton::{
    check_associative, check_complete, is_singly_connected, ColouredGraph, SquareSet,
};
use rank_graph::surgery::{cut, glue, quotient, CutSide, GluePiece, Iso, Relation, SubgraphMark};

#[derive(Parser)]
#[command(
    name = "rank-graph",
    version,
    about = "Build, check, reduce and transform higher-rank graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
    Tikz,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SideArg {
    Inside,
    Outside,
}

#[derive(Subcommand)]
enum Command {
    /// Check a polyhedral graph file for structural violations.
    Validate {
        /// A polyhedral.v1 file.
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Colour the faces of a polyhedral graph.
    Colour {
        /// A polyhedral.v1 file.
        input: PathBuf,
        /// Largest palette to try.
        #[arg(long, default_value_t = 4)]
        colours: u8,
        /// Validate this facecolouring.v1 file instead of searching.
        #[arg(long)]
        colouring: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Write here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Build the quadrangle club of a polyhedral graph and verify it.
    Club {
        /// A polyhedral.v1 file.
        input: PathBuf,
        #[arg(long, default_value_t = 4)]
        colours: u8,
        #[arg(long)]
        colouring: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Reduce the fundamental group along a spanning tree.
    Pi1 {
        /// A polyhedral.v1 file (its club is built first, and the tree is
        /// left-greedy) or a colouredgraph.v1 file (plain spanning tree).
        input: PathBuf,
        #[arg(long, default_value_t = 4)]
        colours: u8,
        #[arg(long)]
        colouring: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run the full pipeline: validate, colour, club, verify, reduce,
    /// then the counting identity and planarity.
    TreeCheck {
        /// A polyhedral.v1 file.
        input: PathBuf,
        #[arg(long, default_value_t = 4)]
        colours: u8,
        #[arg(long)]
        colouring: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Glue two complexes along isomorphic marked subgraphs.
    Glue {
        /// The first colouredgraph.v1 file; merged items keep its ids.
        first: PathBuf,
        /// The second colouredgraph.v1 file.
        second: PathBuf,
        /// A JSON iso map {"vertexMap": {...}, "edgeMap": {...}}; its
        /// domain marks the first graph and its image the second.
        #[arg(long)]
        iso: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Cut a complex along a marked subgraph.
    Cut {
        /// A colouredgraph.v1 file.
        input: PathBuf,
        /// A JSON mark {"vertices": [...], "edges": [...]}.
        #[arg(long)]
        mark: PathBuf,
        #[arg(long, value_enum, default_value_t = SideArg::Inside)]
        side: SideArg,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Identify vertices and edges of a complex along a relation.
    Quotient {
        /// A colouredgraph.v1 file.
        input: PathBuf,
        /// A JSON relation {"vertexPairs": [["u","v"], ...],
        /// "edgePairs": [["e","f"], ...]}.
        #[arg(long)]
        relation: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Report the structural properties of a graph file.
    Analyse {
        /// A polyhedral.v1 or colouredgraph.v1 file.
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Generate a named example or family member.
    Generate {
        /// One of: lunar N, pizza N, omega M1,M2[,...], hypercube K,
        /// cube3, sphere2, degenerate4, triangle, rigid19, random P SEED.
        family: String,
        params: Vec<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Re-emit a graph file as JSON, DOT, TikZ or text.
    Export {
        /// A polyhedral.v1 or colouredgraph.v1 file.
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

type CliResult = Result<ExitCode, Box<dyn Error>>;

const VERDICT_NEGATIVE: ExitCode = ExitCode::FAILURE;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> CliResult {
    match command {
        Command::Validate { input, format } => cmd_validate(&input, format),
        Command::Colour {
            input,
            colours,
            colouring,
            format,
            output,
        } => cmd_colour(&input, colours, colouring.as_deref(), format, output.as_deref()),
        Command::Club {
            input,
            colours,
            colouring,
            format,
            output,
        } => cmd_club(&input, colours, colouring.as_deref(), format, output.as_deref()),
        Command::Pi1 {
            input,
            colours,
            colouring,
            format,
        } => cmd_pi1(&input, colours, colouring.as_deref(), format),
        Command::TreeCheck {
            input,
            colours,
            colouring,
            format,
        } => cmd_tree_check(&input, colours, colouring.as_deref(), format),
        Command::Glue {
            first,
            second,
            iso,
            output,
        } => cmd_glue(&first, &second, &iso, output.as_deref()),
        Command::Cut {
            input,
            mark,
            side,
            output,
        } => cmd_cut(&input, &mark, side, output.as_deref()),
        Command::Quotient {
            input,
            relation,
            output,
        } => cmd_quotient(&input, &relation, output.as_deref()),
        Command::Analyse { input, format } => cmd_analyse(&input, format),
        Command::Generate {
            family,
            params,
            output,
        } => cmd_generate(&family, &params, output.as_deref()),
        Command::Export {
            input,
            format,
            output,
        } => cmd_export(&input, format, output.as_deref()),
    }
}

fn read(path: &Path) -> Result<String, Box<dyn Error>> {
    fs::read_to_string(path).map_err(|err| format!("{}: {err}", path.display()).into())
}

fn emit(output: Option<&Path>, content: &str) -> Result<(), Box<dyn Error>> {
    match output {
        Some(path) => {
            fs::write(path, content).map_err(|err| format!("{}: {err}", path.display()))?
        }
        None => print!("{content}"),
    }
    Ok(())
}

enum Loaded {
    Polyhedral(PolyhedralGraph),
    Coloured(ColouredGraph, SquareSet),
}

fn load_any(path: &Path) -> Result<Loaded, Box<dyn Error>> {
    let text = read(path)?;
    let value: serde_json::Value = serde_json::from_str(&text)?;
    if value.get("points").is_some() {
        Ok(Loaded::Polyhedral(io::polyhedral_from_json(&text)?))
    } else {
        let (graph, squares) = io::coloured_graph_from_json(&text)?;
        Ok(Loaded::Coloured(graph, squares))
    }
}

fn load_polyhedral(path: &Path) -> Result<PolyhedralGraph, Box<dyn Error>> {
    Ok(io::polyhedral_from_json(&read(path)?)?)
}

fn load_coloured(path: &Path) -> Result<(ColouredGraph, SquareSet), Box<dyn Error>> {
    Ok(io::coloured_graph_from_json(&read(path)?)?)
}

/// Traces the faces of a rotation-only graph so face data is available.
fn ensure_embedded(poly: PolyhedralGraph) -> Result<PolyhedralGraph, Box<dyn Error>> {
    if poly.embedding().is_some() {
        Ok(poly)
    } else {
        Ok(poly.trace_faces()?)
    }
}

/// Searches for a colouring, or validates a supplied one.
fn pick_colouring(
    poly: &PolyhedralGraph,
    colours: u8,
    colouring: Option<&Path>,
) -> Result<Result<FaceColouring, ColouringError>, Box<dyn Error>> {
    match colouring {
        Some(path) => {
            let map = io::colouring_from_json(&read(path)?)?;
            Ok(validate_colouring(poly, &map))
        }
        None => Ok(colour_faces(poly, colours)),
    }
}

fn cmd_validate(input: &Path, format: Format) -> CliResult {
    let poly = load_polyhedral(input)?;
    let report = poly.validate();
    match format {
        Format::Json => {
            let doc = json!({
                "valid": report.is_valid(),
                "violations": report
                    .violations
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>(),
            });
            println!("{}", serde_json::to_string_pretty(&doc)?);
        }
        _ => println!("{report}"),
    }
    Ok(if report.is_valid() {
        ExitCode::SUCCESS
    } else {
        VERDICT_NEGATIVE
    })
}

fn cmd_colour(
    input: &Path,
    colours: u8,
    colouring: Option<&Path>,
    format: Format,
    output: Option<&Path>,
) -> CliResult {
    let poly = ensure_embedded(load_polyhedral(input)?)?;
    let found = match pick_colouring(&poly, colours, colouring)? {
        Ok(found) => found,
        Err(err) => {
            eprintln!("{err}");
            return Ok(VERDICT_NEGATIVE);
        }
    };
    let content = match format {
        Format::Json => io::colouring_to_json(&poly, &found),
        Format::Text => {
            let embedding = poly.embedding().expect("embedded above");
            let mut lines = String::new();
            for (face, colour) in found.assignments() {
                lines.push_str(&format!(
                    "face {}: colour {}\n",
                    embedding.face_id(face),
                    colour.value()
                ));
            }
            lines.push_str(&format!("palette: {}\n", found.palette_size()));
            lines
        }
        _ => return Err("colourings export as json or text".into()),
    };
    emit(output, &content)?;
    Ok(ExitCode::SUCCESS)
}

fn certificate_lines(cert: &ClubCertificate) -> Vec<(&'static str, bool)> {
    vec![
        ("complete", cert.completeness.is_complete()),
        ("associative", cert.associativity.is_associative()),
        ("connected", cert.connected),
        ("singly connected", cert.singly_connected.holds()),
        ("two squares per arc", cert.square_count_is_twice_arcs),
        ("counting identity", cert.euler_identity),
    ]
}

fn cmd_club(
    input: &Path,
    colours: u8,
    colouring: Option<&Path>,
    format: Format,
    output: Option<&Path>,
) -> CliResult {
    let poly = ensure_embedded(load_polyhedral(input)?)?;
    let found = match pick_colouring(&poly, colours, colouring)? {
        Ok(found) => found,
        Err(err) => {
            eprintln!("{err}");
            return Ok(VERDICT_NEGATIVE);
        }
    };
    let club = build_club(&poly, &found)?;
    let cert = verify_club(&poly, &club);
    let content = match format {
        Format::Json => io::club_to_json(&club),
        Format::Dot => export::coloured_graph_to_dot(club.graph()),
        Format::Tikz => export::coloured_graph_to_tikz(club.graph()),
        Format::Text => {
            let mut lines = export::coloured_graph_to_text(club.graph(), club.squares());
            for (name, pass) in certificate_lines(&cert) {
                lines.push_str(&format!("{name}: {}\n", if pass { "pass" } else { "fail" }));
            }
            lines
        }
    };
    emit(output, &content)?;
    if !cert.all_pass() {
        for (name, pass) in certificate_lines(&cert) {
            if !pass {
                eprintln!("club check failed: {name}");
            }
        }
        return Ok(VERDICT_NEGATIVE);
    }
    Ok(ExitCode::SUCCESS)
}

/// Builds the graph, squares and tree for `pi1`, from either file kind.
fn pi1_input(
    input: &Path,
    colours: u8,
    colouring: Option<&Path>,
) -> Result<Result<(ColouredGraph, SquareSet, rank_graph::pi1::SpanningTree), ColouringError>, Box<dyn Error>>
{
    match load_any(input)? {
        Loaded::Polyhedral(poly) => {
            let poly = ensure_embedded(poly)?;
            let found = match pick_colouring(&poly, colours, colouring)? {
                Ok(found) => found,
                Err(err) => return Ok(Err(err)),
            };
            let club = build_club(&poly, &found)?;
            let tree = left_greedy_tree(&club)?;
            Ok(Ok((
                club.graph().clone(),
                club.squares().clone(),
                tree,
            )))
        }
        Loaded::Coloured(graph, squares) => {
            let tree = plain_tree(&graph)?;
            Ok(Ok((graph, squares, tree)))
        }
    }
}

fn pi1_json(graph: &ColouredGraph, report: &Pi1Report) -> serde_json::Value {
    let tree: Vec<_> = report
        .tree
        .edges()
        .iter()
        .zip(report.tree.weights())
        .map(|(&e, &w)| json!({"id": graph.edge(e).id, "weight": w}))
        .collect();
    json!({
        "tree": tree,
        "killed": report.eliminations(),
        "trace": report.trace.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
        "status": match report.verdict {
            Pi1Verdict::Trivial => "trivial",
            Pi1Verdict::Reduced => "reduced",
        },
        "residual": {
            "generators": report.residual_generators,
            "relations": report.residual_relations,
        },
    })
}

fn cmd_pi1(input: &Path, colours: u8, colouring: Option<&Path>, format: Format) -> CliResult {
    let (graph, squares, tree) = match pi1_input(input, colours, colouring)? {
        Ok(parts) => parts,
        Err(err) => {
            eprintln!("{err}");
            return Ok(VERDICT_NEGATIVE);
        }
    };
    let report = reduce(&graph, &squares, &tree)?;
    match format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(&pi1_json(&graph, &report))?
        ),
        _ => {
            println!("tree ({} edges):", report.tree.len());
            for (&e, &w) in report.tree.edges().iter().zip(report.tree.weights()) {
                println!("  {}  weight {w}", graph.edge(e).id);
            }
            println!("killed ({}):", report.eliminations().len());
            for id in report.eliminations() {
                println!("  {id}");
            }
            println!("trace:");
            for step in &report.trace {
                println!("  {step}");
            }
            match report.verdict {
                Pi1Verdict::Trivial => println!("verdict: trivial"),
                Pi1Verdict::Reduced => {
                    println!("verdict: reduced");
                    println!("residual generators: {}", report.residual_generators.join(" "));
                    for relation in &report.residual_relations {
                        println!("residual relation: {relation}");
                    }
                }
            }
        }
    }
    Ok(match report.verdict {
        Pi1Verdict::Trivial => ExitCode::SUCCESS,
        Pi1Verdict::Reduced => VERDICT_NEGATIVE,
    })
}

fn cmd_tree_check(
    input: &Path,
    colours: u8,
    colouring: Option<&Path>,
    format: Format,
) -> CliResult {
    let mut stages: Vec<(&'static str, bool, String)> = Vec::new();
    let poly = ensure_embedded(load_polyhedral(input)?)?;

    let report = poly.validate();
    stages.push(("validate", report.is_valid(), report.to_string()));

    let colouring_result = pick_colouring(&poly, colours, colouring)?;
    let club = match colouring_result {
        Ok(found) => {
            stages.push(("colour", true, format!("palette {}", found.palette_size())));
            match build_club(&poly, &found) {
                Ok(club) => {
                    stages.push((
                        "club",
                        true,
                        format!(
                            "{} vertices, {} edges, {} squares",
                            club.graph().vertex_count(),
                            club.graph().edge_count(),
                            club.squares().len()
                        ),
                    ));
                    Some(club)
                }
                Err(err) => {
                    stages.push(("club", false, err.to_string()));
                    None
                }
            }
        }
        Err(err) => {
            stages.push(("colour", false, err.to_string()));
            None
        }
    };

    if let Some(club) = &club {
        let cert = verify_club(&poly, club);
        let failed: Vec<&str> = certificate_lines(&cert)
            .into_iter()
            .filter_map(|(name, pass)| (!pass).then_some(name))
            .collect();
        stages.push((
            "verify",
            cert.all_pass(),
            if failed.is_empty() {
                "all checks pass".to_owned()
            } else {
                format!("failed: {}", failed.join(", "))
            },
        ));

        match left_greedy_tree(club) {
            Ok(tree) => {
                stages.push(("tree", true, format!("{} edges", tree.len())));
                match reduce(club.graph(), club.squares(), &tree) {
                    Ok(report) => {
                        let trivial = report.verdict == Pi1Verdict::Trivial;
                        stages.push((
                            "pi1",
                            trivial,
                            format!(
                                "{} killed, verdict {}",
                                report.eliminations().len(),
                                if trivial { "trivial" } else { "reduced" }
                            ),
                        ));
                    }
                    Err(err) => stages.push(("pi1", false, err.to_string())),
                }
            }
            Err(err) => stages.push(("tree", false, err.to_string())),
        }

        let euler = euler_identity(club.graph());
        stages.push(("euler", euler, "|E1| - 2|E0| + 4 = 0".to_owned()));
        let planar = is_planar(club.graph());
        stages.push(("planar", planar, "by face embedding search".to_owned()));
    }

    let all_pass = stages.iter().all(|(_, pass, _)| *pass);
    match format {
        Format::Json => {
            let doc = json!({
                "stages": stages
                    .iter()
                    .map(|(name, pass, detail)| json!({
                        "name": name, "pass": pass, "detail": detail,
                    }))
                    .collect::<Vec<_>>(),
                "pass": all_pass,
            });
            println!("{}", serde_json::to_string_pretty(&doc)?);
        }
        _ => {
            for (name, pass, detail) in &stages {
                println!(
                    "{name}: {} ({detail})",
                    if *pass { "pass" } else { "fail" }
                );
            }
            println!("overall: {}", if all_pass { "pass" } else { "fail" });
        }
    }
    Ok(if all_pass {
        ExitCode::SUCCESS
    } else {
        VERDICT_NEGATIVE
    })
}

#[derive(Deserialize, Default)]
#[serde(rename_all = "camelCase", default)]
struct IsoFile {
    vertex_map: std::collections::HashMap<String, String>,
    edge_map: std::collections::HashMap<String, String>,
}

fn cmd_glue(first: &Path, second: &Path, iso: &Path, output: Option<&Path>) -> CliResult {
    let (first_graph, first_squares) = load_coloured(first)?;
    let (second_graph, second_squares) = load_coloured(second)?;
    let file: IsoFile = serde_json::from_str(&read(iso)?)?;

    let first_vertices: Vec<String> = file.vertex_map.keys().cloned().collect();
    let first_edges: Vec<String> = file.edge_map.keys().cloned().collect();
    let second_vertices: Vec<String> = file.vertex_map.values().cloned().collect();
    let second_edges: Vec<String> = file.edge_map.values().cloned().collect();
    let first_mark = match SubgraphMark::new(&first_graph, &first_vertices, &first_edges) {
        Ok(mark) => mark,
        Err(err) => return Err(err.into()),
    };
    let second_mark = match SubgraphMark::new(&second_graph, &second_vertices, &second_edges) {
        Ok(mark) => mark,
        Err(err) => return Err(err.into()),
    };
    let iso = Iso {
        vertex_map: file.vertex_map,
        edge_map: file.edge_map,
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
        Ok((graph, squares)) => {
            emit(output, &io::coloured_graph_to_json(&graph, &squares))?;
            Ok(ExitCode::SUCCESS)
        }
        Err(err) => {
            eprintln!("{err}");
            Ok(VERDICT_NEGATIVE)
        }
    }
}

#[derive(Deserialize, Default)]
#[serde(default)]
struct MarkFile {
    vertices: Vec<String>,
    edges: Vec<String>,
}

fn cmd_cut(input: &Path, mark: &Path, side: SideArg, output: Option<&Path>) -> CliResult {
    let (graph, squares) = load_coloured(input)?;
    let file: MarkFile = serde_json::from_str(&read(mark)?)?;
    let mark = SubgraphMark::new(&graph, &file.vertices, &file.edges)?;
    let cut_side = match side {
        SideArg::Inside => CutSide::Inside,
        SideArg::Outside => CutSide::Outside,
    };
    match cut(&graph, &squares, &mark, cut_side) {
        Ok((piece, piece_squares)) => {
            emit(output, &io::coloured_graph_to_json(&piece, &piece_squares))?;
            Ok(ExitCode::SUCCESS)
        }
        Err(err) => {
            eprintln!("{err}");
            Ok(VERDICT_NEGATIVE)
        }
    }
}

#[derive(Deserialize, Default)]
#[serde(rename_all = "camelCase", default)]
struct RelationFile {
    vertex_pairs: Vec<(String, String)>,
    edge_pairs: Vec<(String, String)>,
}

fn cmd_quotient(input: &Path, relation: &Path, output: Option<&Path>) -> CliResult {
    let (graph, squares) = load_coloured(input)?;
    let file: RelationFile = serde_json::from_str(&read(relation)?)?;
    let relation = Relation {
        vertex_pairs: file.vertex_pairs,
        edge_pairs: file.edge_pairs,
    };
    match quotient(&graph, &squares, &relation) {
        Ok((image, image_squares)) => {
            emit(output, &io::coloured_graph_to_json(&image, &image_squares))?;
            Ok(ExitCode::SUCCESS)
        }
        Err(err) => {
            eprintln!("{err}");
            Ok(VERDICT_NEGATIVE)
        }
    }
}

fn cmd_analyse(input: &Path, format: Format) -> CliResult {
    match load_any(input)? {
        Loaded::Polyhedral(poly) => {
            let report = poly.validate();
            let faces = poly.embedding().map(|e| e.face_count());
            match format {
                Format::Json => {
                    let doc = json!({
                        "kind": "polyhedral",
                        "points": poly.point_count(),
                        "arcs": poly.arc_count(),
                        "faces": faces,
                        "valid": report.is_valid(),
                        "violations": report
                            .violations
                            .iter()
                            .map(|v| v.to_string())
                            .collect::<Vec<_>>(),
                    });
                    println!("{}", serde_json::to_string_pretty(&doc)?);
                }
                _ => {
                    println!("kind: polyhedral");
                    println!("points: {}", poly.point_count());
                    println!("arcs: {}", poly.arc_count());
                    match faces {
                        Some(count) => println!("faces: {count}"),
                        None => println!("faces: untraced"),
                    }
                    println!("valid: {}", report.is_valid());
                }
            }
        }
        Loaded::Coloured(graph, squares) => {
            let complete = check_complete(&graph, &squares).is_complete();
            let associative = check_associative(&graph, &squares).is_associative();
            let connected = graph.is_connected();
            let planar = is_planar(&graph);
            let euler = euler_identity(&graph);
            let group_order = automorphisms(&graph, &squares).len();
            let singly = is_singly_connected(&graph, &squares)
                .map(|report| report.holds())
                .ok();
            let essential = degree_cocycle_essential(&graph, &squares)
                .map(|report| report.holds())
                .ok();
            match format {
                Format::Json => {
                    let doc = json!({
                        "kind": "coloured",
                        "vertices": graph.vertex_count(),
                        "edges": graph.edge_count(),
                        "squares": squares.len(),
                        "rank": graph.rank(),
                        "complete": complete,
                        "associative": associative,
                        "connected": connected,
                        "planar": planar,
                        "countingIdentity": euler,
                        "automorphisms": group_order,
                        "singlyConnected": singly,
                        "essential": essential,
                    });
                    println!("{}", serde_json::to_string_pretty(&doc)?);
                }
                _ => {
                    println!("kind: coloured graph");
                    println!("vertices: {}", graph.vertex_count());
                    println!("edges: {}", graph.edge_count());
                    println!("squares: {}", squares.len());
                    println!("rank: {}", graph.rank());
                    println!("complete: {complete}");
                    println!("associative: {associative}");
                    println!("connected: {connected}");
                    println!("planar: {planar}");
                    println!("counting identity: {euler}");
                    println!("automorphisms: {group_order}");
                    match singly {
                        Some(holds) => println!("singly connected: {holds}"),
                        None => println!("singly connected: not applicable (cyclic)"),
                    }
                    match essential {
                        Some(holds) => println!("essential degree map: {holds}"),
                        None => println!("essential degree map: not applicable (cyclic)"),
                    }
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_param<T: std::str::FromStr>(params: &[String], index: usize, what: &str) -> Result<T, Box<dyn Error>> {
    params
        .get(index)
        .ok_or_else(|| format!("missing parameter: {what}"))?
        .parse()
        .map_err(|_| format!("parameter {what} must be a number").into())
}

fn cmd_generate(family: &str, params: &[String], output: Option<&Path>) -> CliResult {
    let content = match family {
        "lunar" => io::polyhedral_to_json(&fixtures::lunar(parse_param(params, 0, "sectors")?)),
        "pizza" => io::polyhedral_to_json(&fixtures::pizza(parse_param(params, 0, "slices")?)),
        "random" => {
            let points = parse_param(params, 0, "points")?;
            let seed = parse_param(params, 1, "seed")?;
            io::polyhedral_to_json(&fixtures::random_apollonian(points, seed))
        }
        "omega" => {
            let joined = params.join(",");
            let shape: Result<Vec<usize>, _> =
                joined.split(',').map(|part| part.trim().parse()).collect();
            let shape = shape.map_err(|_| "omega takes a comma-separated shape")?;
            if shape.is_empty() || shape.len() > 4 {
                return Err("omega shapes have one to four entries".into());
            }
            let (graph, squares) = fixtures::omega(&shape);
            io::coloured_graph_to_json(&graph, &squares)
        }
        "hypercube" => {
            let k: usize = parse_param(params, 0, "rank")?;
            if !(1..=4).contains(&k) {
                return Err("hypercube ranks run from one to four".into());
            }
            let (graph, squares) = fixtures::hypercube(k);
            io::coloured_graph_to_json(&graph, &squares)
        }
        "cube3" => {
            let (graph, squares) = fixtures::cube3();
            io::coloured_graph_to_json(&graph, &squares)
        }
        "sphere2" => {
            let (graph, squares) = fixtures::sphere2();
            io::coloured_graph_to_json(&graph, &squares)
        }
        "degenerate4" => {
            let (graph, squares) = fixtures::degenerate4();
            io::coloured_graph_to_json(&graph, &squares)
        }
        "triangle" => {
            let (graph, squares) = fixtures::triangle();
            io::coloured_graph_to_json(&graph, &squares)
        }
        "rigid19" => {
            let (graph, squares) = fixtures::rigid19();
            io::coloured_graph_to_json(&graph, &squares)
        }
        other => {
            return Err(format!(
                "unknown family {other}; expected lunar, pizza, omega, hypercube, \
                 cube3, sphere2, degenerate4, triangle, rigid19 or random"
            )
            .into())
        }
    };
    emit(output, &content)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_export(input: &Path, format: Format, output: Option<&Path>) -> CliResult {
    let content = match load_any(input)? {
        Loaded::Polyhedral(poly) => match format {
            Format::Json => io::polyhedral_to_json(&poly),
            Format::Dot => export::polyhedral_to_dot(&poly),
            Format::Tikz => export::polyhedral_to_tikz(&poly),
            Format::Text => export::polyhedral_to_text(&poly),
        },
        Loaded::Coloured(graph, squares) => match format {
            Format::Json => io::coloured_graph_to_json(&graph, &squares),
            Format::Dot => export::coloured_graph_to_dot(&graph),
            Format::Tikz => export::coloured_graph_to_tikz(&graph),
            Format::Text => export::coloured_graph_to_text(&graph, &squares),
        },
    };
    emit(output, &content)?;
    Ok(ExitCode::SUCCESS)
}
