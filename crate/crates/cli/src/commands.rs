//! Implementations of the CLI subcommands; each returns the report as a
//! string in the requested format plus the exit status.

use std::fmt::Write as _;

use anyhow::{anyhow, bail, Context, Result};
use serde_json::{json, Value};

use gvcalc_core::blocks::{
    acting_group_label, block_space, boundary_braiding_signed, dimension_oracle, excision_check,
    handle_twist, rbr_action, BlockOperator, CoendF,
};
use gvcalc_core::braid::{check_cyclic_structure, check_rbr_relations, FramedBraid};
use gvcalc_core::pointed::PointedGVCategory;
use gvcalc_core::report::SuiteReport;

use crate::braid_text::{braid_to_text, parse_braid};
use crate::category_file::{parse_category, parse_category_unchecked, parse_labels};
use crate::graph_file::{graph_to_text, parse_graph};
use crate::json::{
    category_json, operator_json, scalar_json, space_json, spectrum_csv, suite_json,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

impl Format {
    pub fn from_flag(flag: Option<&str>) -> Result<Format> {
        let chosen = match flag {
            Some(f) => f.to_string(),
            None => std::env::var("GVCALC_FORMAT").unwrap_or_else(|_| "json".into()),
        };
        match chosen.as_str() {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "text" => Ok(Format::Text),
            other => bail!("unknown format `{}` (expected json, csv or text)", other),
        }
    }
}

pub struct Outcome {
    pub body: String,
    pub failures: u64,
}

fn render_suites(
    suites: &[(SuiteReport, Option<std::time::Duration>)],
    format: Format,
) -> Result<Outcome> {
    let failures: u64 = suites.iter().map(|(s, _)| s.failures.len() as u64).sum();
    let body = match format {
        // JSON reports are deterministic, so timings stay out of them
        Format::Json => serde_json::to_string_pretty(&Value::Array(
            suites.iter().map(|(s, _)| suite_json(s)).collect(),
        ))?,
        Format::Text | Format::Csv => {
            let mut out = String::new();
            for (s, elapsed) in suites {
                let timing = match elapsed {
                    Some(d) => format!(", {:.1} ms", d.as_secs_f64() * 1e3),
                    None => String::new(),
                };
                writeln!(
                    out,
                    "{}: {} ({} instances, {} failures{})",
                    s.suite,
                    if s.passed() { "pass" } else { "FAIL" },
                    s.instances,
                    s.failures.len(),
                    timing
                )?;
                for f in s.failures.iter().take(20) {
                    writeln!(out, "  {} at witness {:?} {}", f.axiom, f.witness, f.detail)?;
                }
            }
            out
        }
    };
    Ok(Outcome { body, failures })
}

/// `check`: run every coherence suite of a category file.
pub fn cmd_check(file_text: &str, format: Format) -> Result<Outcome> {
    let cat = parse_category_unchecked(file_text).map_err(|e| anyhow!("{}", e))?;
    let mut suites = Vec::new();
    for run in [
        PointedGVCategory::validate_cocycle,
        PointedGVCategory::check_pivotal_axioms,
        PointedGVCategory::check_hexagon_h,
        PointedGVCategory::check_balanced_braided_axioms,
    ] {
        let start = std::time::Instant::now();
        let rep = run(&cat);
        suites.push((rep, Some(start.elapsed())));
    }
    render_suites(&suites, format)
}

/// `blocks`: dimensions and bases of `V_{g,n}(a⃗)`.
pub fn cmd_blocks(file_text: &str, genus: usize, labels: &str, format: Format) -> Result<Outcome> {
    let cat = parse_category(file_text).map_err(|e| anyhow!("{}", e))?;
    let labels = parse_labels(&cat, labels).map_err(|e| anyhow!("{}", e))?;
    let space = block_space(&cat, genus, &labels);
    let oracle = dimension_oracle(&cat, genus, &labels);
    let coend = CoendF::new(&cat);
    let body = match format {
        Format::Json => serde_json::to_string_pretty(&json!({
            "category": category_json(&cat),
            "space": space_json(&space),
            "oracle_dim": oracle,
            "coend_dim": coend.dimension(),
            "acting_group": acting_group_label(genus, labels.len()),
        }))?,
        Format::Text | Format::Csv => format!(
            "V_{{{},{}}} dim = {} (oracle {}), coend dim = {}, acting group {}\n",
            genus,
            labels.len(),
            space.dimension(),
            oracle,
            coend.dimension(),
            acting_group_label(genus, labels.len()),
        ),
    };
    let failures = u64::from(space.dimension() != oracle);
    Ok(Outcome { body, failures })
}

/// `twist-spectrum`: eigenvalues of a handle Dehn twist.
pub fn cmd_twist_spectrum(
    file_text: &str,
    genus: usize,
    labels: &str,
    handle: usize,
    format: Format,
) -> Result<Outcome> {
    let cat = parse_category(file_text).map_err(|e| anyhow!("{}", e))?;
    let labels = parse_labels(&cat, labels).map_err(|e| anyhow!("{}", e))?;
    let space = block_space(&cat, genus, &labels);
    let op = handle_twist(&cat, &space, handle).map_err(|e| anyhow!("{}", e))?;
    let body = match format {
        Format::Json => {
            let eigen: Vec<Value> = (0..space.dimension())
                .map(|i| scalar_json(op.entry(i, i).expect("diagonal")))
                .collect();
            serde_json::to_string_pretty(&json!({
                "space": space_json(&space),
                "handle": handle,
                "acting_group": acting_group_label(genus, labels.len()),
                "eigenvalues": eigen,
            }))?
        }
        Format::Csv => spectrum_csv(&op),
        Format::Text => {
            let mut out = format!(
                "handle {} twist on V_{{{},{}}} (acting group {}):\n",
                handle,
                genus,
                labels.len(),
                acting_group_label(genus, labels.len())
            );
            for i in 0..space.dimension() {
                writeln!(out, "  {} -> {}", i, op.entry(i, i).expect("diagonal"))?;
            }
            out
        }
    };
    Ok(Outcome { body, failures: 0 })
}

/// `excise`: excision and sewing dimension identities.
pub fn cmd_excise(file_text: &str, genus: usize, labels: &str, format: Format) -> Result<Outcome> {
    let cat = parse_category(file_text).map_err(|e| anyhow!("{}", e))?;
    let labels = parse_labels(&cat, labels).map_err(|e| anyhow!("{}", e))?;
    let rep = excision_check(&cat, genus, &labels);
    let failures = rep.failures.len() as u64;
    let body = match format {
        Format::Json => serde_json::to_string_pretty(&json!({
            "report": suite_json(&rep),
            "acting_group_glued": acting_group_label(genus + 1, labels.len()),
        }))?,
        Format::Text | Format::Csv => {
            let out = render_suites(&[(rep.clone(), None)], Format::Text)?;
            format!(
                "{}acting group on the glued side: {}\n",
                out.body,
                acting_group_label(genus + 1, labels.len())
            )
        }
    };
    Ok(Outcome { body, failures })
}

/// `act`: apply a braid word to a genus-zero block space.
pub fn cmd_act(file_text: &str, labels: &str, word: &str, format: Format) -> Result<Outcome> {
    let cat = parse_category(file_text).map_err(|e| anyhow!("{}", e))?;
    let labels = parse_labels(&cat, labels).map_err(|e| anyhow!("{}", e))?;
    let braid = parse_braid(labels.len(), word).map_err(|e| anyhow!("{}", e))?;
    let space = block_space(&cat, 0, &labels);
    let op = rbr_action(&cat, &space, &braid).map_err(|e| anyhow!("{}", e))?;
    let body = match format {
        Format::Json => serde_json::to_string_pretty(&json!({
            "braid": braid_to_text(&braid),
            "operator": operator_json(&op),
        }))?,
        Format::Text | Format::Csv => {
            let mut out = format!(
                "braid {} : dim {} -> dim {}\n",
                braid_to_text(&braid),
                op.source().dimension(),
                op.target().dimension()
            );
            for (&(r, c), v) in op.entries() {
                writeln!(out, "  [{},{}] = {}", r, c, v)?;
            }
            out
        }
    };
    Ok(Outcome { body, failures: 0 })
}

/// `braid`: multiply/compare/cable braid words without a category.
pub fn cmd_braid(
    strands: usize,
    words: &[String],
    operation: &str,
    widths: Option<&str>,
    format: Format,
) -> Result<Outcome> {
    let parsed: Vec<FramedBraid> = words
        .iter()
        .map(|w| parse_braid(strands, w).map_err(|e| anyhow!("{}", e)))
        .collect::<Result<_>>()?;
    let (result, extra): (Value, u64) = match operation {
        "multiply" => {
            let mut acc = FramedBraid::identity(strands);
            for b in &parsed {
                acc = acc.then(b).expect("same strand count");
            }
            (
                json!({
                    "product": braid_to_text(&acc),
                    "twists": acc.twists(),
                    "permutation": acc.permutation().0,
                }),
                0,
            )
        }
        "equals" => {
            if parsed.len() != 2 {
                bail!("equals needs exactly two words");
            }
            let eq = parsed[0].equals(&parsed[1]);
            (json!({ "equal": eq }), 0)
        }
        "equals-check" => {
            if parsed.len() != 2 {
                bail!("equals-check needs exactly two words");
            }
            let eq = parsed[0].equals(&parsed[1]);
            (json!({ "equal": eq }), u64::from(!eq))
        }
        "cable" => {
            let widths: Vec<usize> = widths
                .context("cable needs --widths")?
                .split(',')
                .map(|w| w.trim().parse::<usize>().context("width must be an integer"))
                .collect::<Result<_>>()?;
            if widths.len() != strands {
                bail!("need one width per strand");
            }
            let mut out = Vec::new();
            for b in &parsed {
                out.push(braid_to_text(&b.cable(&widths)));
            }
            (json!({ "cabled": out }), 0)
        }
        "relations" => {
            let rep = check_rbr_relations(strands.min(6));
            let cyc = check_cyclic_structure(strands.min(4), 25);
            let f = (rep.failures.len() + cyc.failures.len()) as u64;
            (json!([suite_json(&rep), suite_json(&cyc)]), f)
        }
        other => bail!("unknown braid operation `{}`", other),
    };
    let body = match format {
        Format::Json => serde_json::to_string_pretty(&result)?,
        Format::Text | Format::Csv => format!("{}\n", result),
    };
    Ok(Outcome { body, failures: extra })
}

/// `graph`: read a half-edge graph and report its invariants as JSON.
pub fn cmd_graph(file_text: &str, format: Format) -> Result<Outcome> {
    let g = parse_graph(file_text).map_err(|e| anyhow!("{}", e))?;
    let nu = g.nu();
    let pi0 = g.pi0();
    let result = json!({
        "vertices": g.n_vertices(),
        "half_edges": g.n_half_edges(),
        "legs": g.legs(),
        "internal_edges": g.internal_edges(),
        "components": g.n_components(),
        "loop_count": g.loop_count(),
        "is_forest": g.is_forest(),
        "nu": { "vertices": nu.n_vertices(), "legs": nu.legs().len() },
        "pi0": { "vertices": pi0.n_vertices(), "legs": pi0.legs().len() },
        "text": graph_to_text(&g),
    });
    let body = match format {
        Format::Json => serde_json::to_string_pretty(&result)?,
        Format::Text | Format::Csv => format!("{}\n", result),
    };
    Ok(Outcome { body, failures: 0 })
}

/// Used by tests: applies a signed boundary braiding directly.
pub fn braiding_for_tests(
    cat: &PointedGVCategory,
    genus: usize,
    labels: &str,
    index: usize,
    positive: bool,
) -> Result<BlockOperator> {
    let labels = parse_labels(cat, labels).map_err(|e| anyhow!("{}", e))?;
    let space = block_space(cat, genus, &labels);
    boundary_braiding_signed(cat, &space, index, positive).map_err(|e| anyhow!("{}", e))
}
