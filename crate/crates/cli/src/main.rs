use std::fs;
use std::io::{Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use abelrep::autgrp::{aut_equals, automorphism_generators};
use abelrep::cgraph::io::{from_json, to_dot, to_json};
use abelrep::cgraph::ColouredGraph;
use abelrep::closure::{is_2_closed, is_2_orbit_closed, two_closure, two_orbit_closure, two_star_closure};
use abelrep::spec::parse_group_spec;
use abelrep::structure::{classify, orbit_structure};
use abelrep::synth::{
    catalogue, catalogue_entry, classify_with_witnesses, colour_merge_search, min_colour_count, synthesize_digraph,
    synthesize_graph, CatalogueEntry,
};
use abelrep::{limits, Error, PermGroup};

/// Graphical representations of abelian permutation groups.
///
/// GROUP arguments are group specs such as `gens: (1 2 3 4)` or
/// `regular: [3, 3]`; `@path` reads the spec from a file and `-` from
/// stdin. GRAPH arguments are colour-matrix JSON files, `-` for stdin, or
/// `catalogue:<name>`.
#[derive(Parser)]
#[command(name = "abelrep", version, about)]
struct Cli {
    /// Cap on the number of elements any group may have.
    #[arg(long, global = true, value_name = "N")]
    limit_elements: Option<usize>,

    /// Cap on the number of vertices the automorphism engine accepts.
    #[arg(long, global = true, value_name = "N")]
    limit_vertices: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Orbits, constituents, kernels and adjacency of a group.
    Analyze { group: String },
    /// A closure of a group and whether the group is closed.
    Closure {
        #[arg(long, value_enum)]
        kind: ClosureKind,
        group: String,
    },
    /// GR and DGR verdicts.
    Classify {
        group: String,
        /// Attach verified witness graphs to the positive verdicts.
        #[arg(long)]
        witness: bool,
        /// Also compute the verdicts from the closures and compare.
        #[arg(long)]
        check_oracle: bool,
    },
    /// A coloured graph or digraph whose automorphism group is the group.
    Synth {
        group: String,
        #[arg(long)]
        directed: bool,
        /// Exhaustive merge search for a witness with the fewest colours.
        #[arg(long)]
        min_colours: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        out: Format,
    },
    /// Whether the automorphism group of a graph equals a group.
    Verify { graph: String, group: String },
    /// Built-in graphs with their verification results.
    Catalogue { name: Option<String> },
    /// Generators and order of the automorphism group of a graph.
    Aut { graph: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum ClosureKind {
    #[value(name = "2")]
    Two,
    #[value(name = "2star")]
    TwoStar,
    #[value(name = "2orbit")]
    TwoOrbit,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Dot,
    Json,
}

/// Why a command stopped.
enum Failure {
    Negative(String),
    Lib(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Negative(_) => 1,
            Failure::Io(_) => 2,
            Failure::Lib(e) if e.is_limit() => 3,
            Failure::Lib(Error::Verification(_)) => 4,
            Failure::Lib(_) => 2,
        }
    }

    fn line(&self) -> String {
        match self {
            Failure::Negative(m) => format!("negative: {m}"),
            Failure::Io(m) => format!("input: {m}"),
            Failure::Lib(e) if e.is_limit() => format!("limit: {e}"),
            Failure::Lib(e @ Error::Verification(_)) => format!("internal: {}", single_line(&e.to_string())),
            Failure::Lib(e) => format!("input: {}", single_line(&e.to_string())),
        }
    }
}

fn single_line(s: &str) -> String {
    s.split_whitespace().collect::<Vec<_>>().join(" ")
}

type Outcome = Result<(), Failure>;

fn read_source(arg: &str) -> Result<String, Failure> {
    if arg == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Io(format!("stdin: {e}")))?;
        return Ok(s);
    }
    fs::read_to_string(arg).map_err(|e| Failure::Io(format!("{arg}: {e}")))
}

fn load_group(arg: &str) -> Result<PermGroup, Failure> {
    let text = match arg.strip_prefix('@') {
        Some(path) => read_source(path)?,
        None if arg == "-" => read_source(arg)?,
        None => arg.to_string(),
    };
    Ok(parse_group_spec(&text)?)
}

fn load_graph(arg: &str) -> Result<ColouredGraph, Failure> {
    if let Some(name) = arg.strip_prefix("catalogue:") {
        return Ok(catalogue_entry(name)?.graph);
    }
    Ok(from_json(&read_source(arg)?)?)
}

fn cycles(g: &PermGroup) -> Vec<String> {
    g.generators().iter().map(|p| p.to_string()).collect()
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn print_json(v: &impl Serialize) {
    emit(&format!("{}\n", serde_json::to_string_pretty(v).expect("output serializes")));
}

fn one_based(points: &[usize]) -> Vec<usize> {
    points.iter().map(|p| p + 1).collect()
}

fn analyze(group: &str) -> Outcome {
    let a = load_group(group)?;
    let s = orbit_structure(&a)?;
    let r = s.orbit_count();
    let orbits: Vec<_> = (0..r)
        .map(|i| {
            json!({
                "points": one_based(&s.orbits[i]),
                "constituent_order": s.constituents[i].order(),
                "star_kernel_order": s.star_kernels[i].order(),
                "factor_invariants": s.factor_invariants[i],
                "isolated": s.isolated[i],
            })
        })
        .collect();
    let pairs: Vec<_> = (0..r)
        .flat_map(|i| (0..r).filter(move |&j| j != i).map(move |j| (i, j)))
        .map(|(i, j)| {
            json!({
                "orbit": i + 1,
                "other": j + 1,
                "kernel_order": s.pair_kernels[i][j].order(),
                "factor_invariants": s.pair_factor_invariants[i][j],
                "adjacent": s.adjacency[i][j],
            })
        })
        .collect();
    print_json(&json!({
        "degree": a.degree(),
        "order": a.order(),
        "is_abelian": a.is_abelian(),
        "orbits": orbits,
        "pairs": pairs,
    }));
    Ok(())
}

fn closure(kind: ClosureKind, group: &str) -> Outcome {
    let a = load_group(group)?;
    let (name, c) = match kind {
        ClosureKind::Two => ("2", two_closure(&a)?),
        ClosureKind::TwoStar => ("2star", two_star_closure(&a)?),
        ClosureKind::TwoOrbit => ("2orbit", two_orbit_closure(&a)?),
    };
    print_json(&json!({
        "kind": name,
        "degree": a.degree(),
        "group_order": a.order(),
        "closure_order": c.order(),
        "closure_generators": cycles(&c),
        "closed": c.equals(&a),
    }));
    Ok(())
}

fn classify_cmd(group: &str, witness: bool, check_oracle: bool) -> Outcome {
    let a = load_group(group)?;
    let report = if witness { classify_with_witnesses(&a)? } else { classify(&a)? };
    let mut out = serde_json::to_value(&report).expect("report serializes");
    if check_oracle {
        let gr = two_star_closure(&a)?.equals(&a);
        let dgr = two_closure(&a)?.equals(&a);
        let orbit_closed = is_2_orbit_closed(&a)?;
        let closed = is_2_closed(&a)?;
        let agrees = gr == report.verdict_gr && dgr == report.verdict_dgr && orbit_closed == closed;
        out["oracle"] = json!({
            "verdict_GR": gr,
            "verdict_DGR": dgr,
            "is_2_closed": closed,
            "agrees": agrees,
        });
        if !agrees {
            print_json(&out);
            return Err(Failure::Lib(Error::Verification("classification disagrees with the closure oracle".into())));
        }
    }
    print_json(&out);
    Ok(())
}

fn synth(group: &str, directed: bool, min_colours: bool, out: Format) -> Outcome {
    let a = load_group(group)?;
    let report = classify(&a)?;
    let (member, class) = if directed { (report.verdict_dgr, "DGR") } else { (report.verdict_gr, "GR") };
    if !member {
        return Err(Failure::Negative(format!("group of order {} is not in {class}", a.order())));
    }
    let g = if min_colours {
        let k = min_colour_count(&a, directed)?
            .ok_or_else(|| Failure::Negative("no merge of the orbitals represents the group".into()))?;
        colour_merge_search(&a, directed, k)?.expect("search repeats the count")
    } else if directed {
        synthesize_digraph(&a)?
    } else {
        synthesize_graph(&a)?
    };
    let aut = automorphism_generators(&g)?;
    let equal = aut_equals(&g, &a)?;
    match out {
        Format::Json => emit(&format!("{}\n", to_json(&g))),
        Format::Dot => emit(&to_dot(&g, None)),
    }
    eprintln!("Aut order {}, equal: {equal}", aut.order());
    if !equal {
        return Err(Failure::Lib(Error::Verification("witness does not represent the group".into())));
    }
    Ok(())
}

fn verify(graph: &str, group: &str) -> Outcome {
    let g = load_graph(graph)?;
    let a = load_group(group)?;
    if g.n() != a.degree() {
        return Err(Failure::Io(format!("graph has {} vertices but the group has degree {}", g.n(), a.degree())));
    }
    let aut = automorphism_generators(&g)?;
    let equal = aut_equals(&g, &a)?;
    print_json(&json!({
        "equal": equal,
        "aut_order": aut.order().to_string(),
        "group_order": a.order(),
    }));
    if equal {
        Ok(())
    } else {
        Err(Failure::Negative("automorphism group differs from the group".into()))
    }
}

fn entry_json(e: &CatalogueEntry, with_graph: bool) -> Result<serde_json::Value, Failure> {
    let aut = automorphism_generators(&e.graph)?;
    let mut v = json!({
        "name": e.name,
        "aliases": e.aliases,
        "construction": e.construction,
        "directed": e.graph.is_directed(),
        "vertices": e.graph.n(),
        "colours": e.graph.colour_count(),
        "expected_order": e.expected_group.order(),
        "aut_order": aut.order().to_string(),
        "verified": e.verify()?,
    });
    if with_graph {
        v["graph"] = serde_json::to_value(&e.graph).expect("graph serializes");
    }
    Ok(v)
}

fn catalogue_cmd(name: Option<&str>) -> Outcome {
    let entries = match name {
        Some(n) => vec![catalogue_entry(n)?],
        None => catalogue()?,
    };
    let out = entries
        .iter()
        .map(|e| entry_json(e, name.is_some()))
        .collect::<Result<Vec<_>, _>>()?;
    let all_verified = out.iter().all(|v| v["verified"] == json!(true));
    match name {
        Some(_) => print_json(&out[0]),
        None => print_json(&out),
    }
    if all_verified {
        Ok(())
    } else {
        Err(Failure::Lib(Error::Verification("a catalogue graph failed verification".into())))
    }
}

fn aut(graph: &str) -> Outcome {
    let g = load_graph(graph)?;
    let r = automorphism_generators(&g)?;
    let gens: Vec<String> = r.generators.iter().map(|p| p.to_string()).collect();
    print_json(&json!({
        "vertices": g.n(),
        "order": r.order().to_string(),
        "generators": gens,
        "base": one_based(&r.base),
        "orbit_sizes": r.orbit_sizes,
    }));
    Ok(())
}

fn run(cli: Cli) -> Outcome {
    if let Some(n) = cli.limit_elements {
        limits::set_element_cap(n);
    }
    if let Some(n) = cli.limit_vertices {
        limits::set_vertex_limit(n);
    }
    match cli.command {
        Command::Analyze { group } => analyze(&group),
        Command::Closure { kind, group } => closure(kind, &group),
        Command::Classify {
            group,
            witness,
            check_oracle,
        } => classify_cmd(&group, witness, check_oracle),
        Command::Synth {
            group,
            directed,
            min_colours,
            out,
        } => synth(&group, directed, min_colours, out),
        Command::Verify { graph, group } => verify(&graph, &group),
        Command::Catalogue { name } => catalogue_cmd(name.as_deref()),
        Command::Aut { graph } => aut(&graph),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.line());
            ExitCode::from(f.exit_code())
        }
    }
}
