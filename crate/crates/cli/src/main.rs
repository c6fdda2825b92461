//! `hkey`: basis changes, RSK, Kohnert closures, snake tabloids and the
//! verification suites from the command line.

use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use hkey_core::bases::{expand_h_into_atoms, expand_h_into_keys, expand_homogeneous, Basis, BasisExpansion};
use hkey_core::diagram::{key_diagram, Cell, Diagram};
use hkey_core::frsk::{
    frsk, frsk_biword, frsk_inverse, rsk, rsk_biword, rsk_inverse, Biword, LowerTriangularMatrix, NMatrix, TableauPair,
};
use hkey_core::kohnert::{build_da, kohnert_closure, kohnert_polynomial};
use hkey_core::render;
use hkey_core::schubert::h_schubert_expansion;
use hkey_core::snakes::{enumerate_special_snake_tabloids, expand_key_into_h, SnakeTabloid};
use hkey_core::verify::{run_suite, Bounds, SUITES};
use hkey_core::{Error, Filling, WeakComposition};

#[derive(Parser)]
#[command(name = "hkey", version, about = "Flagged h polynomials, keys, flagged RSK and snake tabloids")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Ambient number of variables (default: length of the given composition).
    #[arg(long, global = true)]
    n: Option<usize>,
    /// Degree bound for `verify`.
    #[arg(long, global = true)]
    deg: Option<u32>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Expand a basis element: FROM and TO among monomial, h, key, atom, schubert.
    Expand { from: String, to: String, index: WeakComposition },
    /// Classical or flagged RSK of a matrix or biword, or the inverse of a pair.
    Rsk {
        /// Rows separated by `;`, entries by `,`.
        #[arg(long, conflicts_with_all = ["biword", "pair"])]
        matrix: Option<NMatrix>,
        /// Top and bottom lines, each comma separated.
        #[arg(long, num_args = 2, value_names = ["TOP", "BOTTOM"], conflicts_with = "pair")]
        biword: Option<Vec<String>>,
        #[arg(long)]
        flagged: bool,
        #[arg(long, requires = "pair")]
        inverse: bool,
        /// JSON `{"insertion": ..., "recording": ...}`.
        #[arg(long)]
        pair: Option<String>,
    },
    /// Kohnert closure of the diagram D_a.
    Kohnert { index: WeakComposition },
    /// Special snake tabloids of shape b and the resulting key-to-h expansion.
    Snakes { index: WeakComposition },
    /// Run a verification suite, or `all`.
    Verify { suite: String },
    /// Draw a filling, diagram, tabloid or key diagram.
    Render {
        #[arg(long, group = "object")]
        filling: Option<String>,
        /// `[[col,row],...]` or `{"cells": [[col,row],...]}`.
        #[arg(long, group = "object")]
        diagram: Option<String>,
        #[arg(long, group = "object")]
        tabloid: Option<String>,
        /// Composition whose key diagram is drawn.
        #[arg(long, group = "object")]
        shape: Option<WeakComposition>,
    },
}

struct Output {
    text: String,
    json: Value,
    passed: bool,
}

impl Output {
    fn ok(text: String, json: Value) -> Self {
        Output { text, json, passed: true }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("serializable"));
            } else {
                print!("{}", out.text);
            }
            if out.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<Output, Error> {
    match &cli.command {
        Command::Expand { from, to, index } => expand(from, to, index, cli.n.unwrap_or(index.len())),
        Command::Rsk { matrix, biword, flagged, inverse, pair } => match (matrix, biword, pair) {
            (_, _, Some(p)) if *inverse => rsk_back(p, *flagged, cli.n),
            (Some(m), None, None) => rsk_forward(&Input::Matrix(m.clone()), *flagged),
            (None, Some(lines), None) => {
                let top: WeakComposition = lines[0].parse()?;
                let bottom: WeakComposition = lines[1].parse()?;
                rsk_forward(&Input::Biword(Biword::new(top.parts(), bottom.parts())?), *flagged)
            }
            _ => Err(Error::Parse("give one of --matrix, --biword, or --inverse --pair".into())),
        },
        Command::Kohnert { index } => kohnert(index, cli.n.unwrap_or(index.len())),
        Command::Snakes { index } => snakes(index, cli.n.unwrap_or(index.len())),
        Command::Verify { suite } => verify(suite, cli.n, cli.deg),
        Command::Render { filling, diagram, tabloid, shape } => {
            if let Some(s) = filling {
                let f = Filling::from_json(&parse_json(s)?)?;
                Ok(Output::ok(render::render_filling(&f), f.to_json()))
            } else if let Some(s) = diagram {
                let d = parse_diagram(&parse_json(s)?)?;
                Ok(Output::ok(render::render_diagram(&d), diagram_json(&d)))
            } else if let Some(s) = tabloid {
                let t = SnakeTabloid::from_json(&parse_json(s)?)?;
                Ok(Output::ok(render::render_tabloid(&t), t.to_json()))
            } else if let Some(a) = shape {
                let d = key_diagram(a);
                Ok(Output::ok(render::render_diagram(&d), diagram_json(&d)))
            } else {
                Err(Error::Parse("give one of --filling, --diagram, --tabloid, --shape".into()))
            }
        }
    }
}

fn parse_json(s: &str) -> Result<Value, Error> {
    serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
}

fn parse_diagram(v: &Value) -> Result<Diagram, Error> {
    let cells = if v.is_object() { &v["cells"] } else { v };
    let pairs: Vec<(u32, u32)> = serde_json::from_value(cells.clone()).map_err(|e| Error::Parse(e.to_string()))?;
    Ok(pairs.into_iter().map(Cell::from).collect())
}

fn diagram_json(d: &Diagram) -> Value {
    let cells: Vec<(u32, u32)> = d.iter().map(|&c| c.into()).collect();
    json!({ "cells": cells })
}

fn expansion_output(e: &BasisExpansion, n: usize) -> Output {
    Output::ok(render::render_expansion(e, n), e.to_json(n))
}

fn expand(from: &str, to: &str, index: &WeakComposition, n: usize) -> Result<Output, Error> {
    if index.support_len() > n {
        return Err(Error::AmbientTooSmall { n, len: index.support_len() });
    }
    if to.eq_ignore_ascii_case("schubert") {
        if from.parse::<Basis>()? != Basis::HFlagged {
            return Err(Error::Parse(format!("no expansion from {from} into Schubert polynomials")));
        }
        let e = h_schubert_expansion(index);
        return Ok(Output::ok(render::render_schubert(&e), json!({"basis": "schubert", "terms": e.to_json()})));
    }
    let (from, to) = (from.parse::<Basis>()?, to.parse::<Basis>()?);
    let e = match (from, to) {
        (Basis::HFlagged, Basis::Key) => expand_h_into_keys(index),
        (Basis::HFlagged, Basis::Atom) => expand_h_into_atoms(index, n)?,
        (Basis::Key, Basis::HFlagged) => expand_key_into_h(index),
        _ => expand_homogeneous(&from.element(index, n)?, to, index.size(), n)?,
    };
    Ok(expansion_output(&e, n))
}

enum Input {
    Matrix(NMatrix),
    Biword(Biword),
}

fn rsk_forward(input: &Input, flagged: bool) -> Result<Output, Error> {
    let pair: TableauPair = match (input, flagged) {
        (Input::Matrix(m), false) => rsk(m),
        (Input::Biword(w), false) => rsk_biword(w),
        (Input::Matrix(m), true) => frsk(&LowerTriangularMatrix::try_from(m.clone())?),
        (Input::Biword(w), true) => frsk_biword(w)?,
    };
    Ok(Output::ok(render::render_pair(&pair, flagged), pair.to_json()))
}

fn rsk_back(pair: &str, flagged: bool, n: Option<usize>) -> Result<Output, Error> {
    let pair = TableauPair::from_json(&parse_json(pair)?)?;
    let m = if flagged {
        let n = n.unwrap_or_else(|| pair.insertion.num_rows().max(pair.recording.num_rows()));
        frsk_inverse(&pair, n)?.into_matrix()
    } else {
        rsk_inverse(&pair)?
    };
    Ok(Output::ok(m.to_string(), m.to_json()))
}

fn kohnert(a: &WeakComposition, n: usize) -> Result<Output, Error> {
    let da = build_da(a, n)?;
    let closure = kohnert_closure(&da);
    let poly = kohnert_polynomial(&da).with_nvars(n);
    let text = format!("D_{a}:\n{}closure: {} diagrams\n{poly}\n", render::render_diagram(&da), closure.len());
    let json = json!({
        "shape": a.parts(),
        "diagram": diagram_json(&da),
        "closure_size": closure.len(),
        "polynomial": poly.to_json(),
    });
    Ok(Output::ok(text, json))
}

fn snakes(b: &WeakComposition, n: usize) -> Result<Output, Error> {
    if b.support_len() > n {
        return Err(Error::AmbientTooSmall { n, len: b.support_len() });
    }
    let tabloids = enumerate_special_snake_tabloids(b);
    let e = expand_key_into_h(b);
    let mut text = String::new();
    for t in &tabloids {
        text.push_str(&render::render_tabloid(t));
        text.push('\n');
    }
    text.push_str(&render::render_expansion(&e, n));
    let json = json!({
        "tabloids": tabloids.iter().map(SnakeTabloid::to_json).collect::<Vec<_>>(),
        "expansion": e.to_json(n),
    });
    Ok(Output::ok(text, json))
}

fn verify(suite: &str, n: Option<usize>, deg: Option<u32>) -> Result<Output, Error> {
    let d = Bounds::default();
    let bounds = Bounds { n: n.unwrap_or(d.n), deg: deg.unwrap_or(d.deg) };
    let names: Vec<&str> = if suite == "all" { SUITES.to_vec() } else { vec![suite] };
    let reports = names.into_iter().map(|s| run_suite(s, bounds)).collect::<Result<Vec<_>, _>>()?;
    let mut text = String::new();
    for r in &reports {
        text.push_str(&r.summary());
        text.push('\n');
        for f in &r.failures {
            text.push_str(&format!("  {}: expected {}, got {}\n", f.case, f.expected, f.got));
        }
    }
    let passed = reports.iter().all(|r| r.passed());
    let json = if reports.len() == 1 {
        reports[0].to_json()
    } else {
        Value::Array(reports.iter().map(|r| r.to_json()).collect())
    };
    Ok(Output { text, json, passed })
}
