use std::fs;
use std::io::{self, Read, Write};
use std::path::Path;

use chirality_core::catalog::{mmic_catalog, named, CatalogName};
use chirality_core::certificates::{classify_embeddability, validate_catalog, CheckStatus, Verdict};
use chirality_core::format::{parse_graphs, to_dot, to_graph6, to_mg};
use chirality_core::minor_search::has_minor;
use chirality_core::pipeline::{
    classify_all, generate, h_route_check, report, ClassificationRecord, ClassifyOptions, GenerationSpec,
};
use chirality_core::planarity::{is_planar, PlanarityWitness};
use chirality_core::{automorphism_group, MinorModel, Multigraph};

use crate::args::{GraphFormat, Input};
use crate::error::{CliError, CliResult};

/// Whether the command succeeded; false maps to exit status 1.
pub type Outcome = bool;

fn read_text(path: &Path) -> CliResult<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|source| CliError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn read_graphs(input: &Input) -> CliResult<Vec<Multigraph>> {
    let text = read_text(&input.file)?;
    let format = input.format.unwrap_or_else(|| {
        if input.file.extension().is_some_and(|e| e == "mg") {
            GraphFormat::Mg
        } else {
            GraphFormat::Graph6
        }
    });
    let mg = match format {
        GraphFormat::Mg => true,
        GraphFormat::Graph6 => false,
        GraphFormat::Dot => return Err(CliError::Usage("DOT is an output format only".into())),
    };
    parse_graphs(&text, mg).map_err(|e| CliError::Input {
        path: input.file.clone(),
        message: e.to_string(),
    })
}

fn json_line(out: &mut dyn Write, value: &impl serde::Serialize) -> CliResult<()> {
    let s = serde_json::to_string(value).expect("records serialize");
    writeln!(out, "{s}")?;
    Ok(())
}

fn write_graph(out: &mut dyn Write, g: &Multigraph, format: GraphFormat, name: &str) -> CliResult<()> {
    match format {
        GraphFormat::Graph6 => writeln!(out, "{}", to_graph6(g)?)?,
        GraphFormat::Mg => write!(out, "{}", to_mg(g))?,
        GraphFormat::Dot => write!(out, "{}", to_dot(g, name))?,
    }
    Ok(())
}

pub fn gen(
    out: &mut dyn Write,
    vertices: usize,
    min_vertices: Option<usize>,
    edges: usize,
    connected: bool,
    nonplanar: bool,
    format: GraphFormat,
) -> CliResult<Outcome> {
    let mut spec = GenerationSpec::new(vertices, edges).orders(min_vertices.unwrap_or(vertices), vertices);
    spec.connected = connected;
    spec.nonplanar = nonplanar;
    for (i, g) in generate(&spec)?.iter().enumerate() {
        write_graph(out, g, format, &format!("g{i}"))?;
    }
    Ok(true)
}

pub fn planar(out: &mut dyn Write, input: &Input) -> CliResult<Outcome> {
    for g in read_graphs(input)? {
        let v = is_planar(&g);
        if input.json {
            json_line(out, &v)?;
            continue;
        }
        match &v.witness {
            PlanarityWitness::Embedding(rot) => {
                writeln!(out, "planar")?;
                for (x, r) in rot.rotations.iter().enumerate() {
                    writeln!(out, "  {x}: {r:?}")?;
                }
            }
            PlanarityWitness::Obstruction(w) => {
                writeln!(out, "non-planar")?;
                let edges: Vec<String> = w.edges.iter().map(|e| format!("{}-{}", e.u, e.v)).collect();
                writeln!(out, "  {:?} subdivision: {}", w.kind, edges.join(" "))?;
            }
        }
    }
    Ok(true)
}

pub fn aut(out: &mut dyn Write, input: &Input) -> CliResult<Outcome> {
    for g in read_graphs(input)? {
        let group = automorphism_group(&g)?;
        if input.json {
            let gens: Vec<Vec<usize>> = group.generators().iter().map(|p| p.images().to_vec()).collect();
            json_line(
                out,
                &serde_json::json!({ "order": group.order().to_string(), "generators": gens }),
            )?;
            continue;
        }
        writeln!(out, "order {}", group.order())?;
        for p in group.generators() {
            writeln!(out, "  {p}")?;
        }
    }
    Ok(true)
}

pub fn minor(out: &mut dyn Write, input: &Input, target: &str, replay: Option<&Path>) -> CliResult<Outcome> {
    let name: CatalogName = target
        .parse()
        .map_err(|e: chirality_core::Error| CliError::Usage(e.to_string()))?;
    let target = named(name).graph;
    let model: Option<MinorModel> = match replay {
        Some(path) => Some(serde_json::from_str(&read_text(path)?).map_err(|e| CliError::Input {
            path: path.to_path_buf(),
            message: e.to_string(),
        })?),
        None => None,
    };
    let mut ok = true;
    for g in read_graphs(input)? {
        match &model {
            Some(m) => {
                let valid = m.verify(&g)
                    && m.replay(&g).is_ok_and(|h| chirality_core::is_isomorphic(&h.without_isolated(), &target).is_some());
                writeln!(out, "{}", if valid { "valid" } else { "invalid" })?;
                ok &= valid;
            }
            None => match has_minor(&g, &target) {
                Some(m) if input.json => json_line(out, &m)?,
                Some(m) => {
                    writeln!(out, "{name} minor: {} deletions, {} contractions", m.deletions(), m.contractions())?;
                    for s in &m.steps {
                        writeln!(out, "  {s}")?;
                    }
                }
                None if input.json => writeln!(out, "null")?,
                None => writeln!(out, "no {name} minor")?,
            },
        }
    }
    Ok(ok)
}

pub fn certify(out: &mut dyn Write, input: &Input) -> CliResult<Outcome> {
    for g in read_graphs(input)? {
        let v = classify_embeddability(&g);
        if input.json {
            json_line(out, &v)?;
            continue;
        }
        let detail = match &v {
            Verdict::Achiral(c) => c.kind().to_string(),
            Verdict::Chiral(c) => format!("Möbius core M{}, deleted edges: {}", c.n, c.deleted.len()),
            Verdict::Unresolved(notes) => notes.join("; "),
        };
        writeln!(out, "{} ({detail})", v.label())?;
        writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("verdicts serialize"))?;
    }
    Ok(true)
}

pub fn classify(
    out: &mut dyn Write,
    max_size: usize,
    audit: bool,
    records_path: Option<&Path>,
) -> CliResult<Outcome> {
    let records = classify_all(ClassifyOptions { max_size, audit })?;
    let mut lines = Vec::new();
    for r in &records {
        json_line(&mut lines, r)?;
    }
    let summary = summarize(&records);
    match records_path {
        Some(path) => {
            fs::write(path, &lines).map_err(|source| CliError::Io {
                path: path.to_path_buf(),
                source,
            })?;
            writeln!(out, "{summary}")?;
        }
        None => {
            out.write_all(&lines)?;
            eprintln!("{summary}");
        }
    }
    let rep = report(&records);
    Ok(!audit || (rep.unresolved.is_empty() && rep.audit_unresolved_minors == 0))
}

fn summarize(records: &[ClassificationRecord]) -> String {
    let mut s = report(records).to_string();
    if records.iter().any(|r| r.size == 12) {
        let h = h_route_check(records);
        s = format!(
            "{s}\norder-7 size-12 candidates: {} routed through H1 or H2, {} with only a K5 minor, {} unexplained",
            h.routed,
            h.k5_only.len(),
            h.unexplained.len()
        );
    }
    s
}

pub fn catalog(out: &mut dyn Write, validate: bool, format: GraphFormat) -> CliResult<Outcome> {
    for ng in mmic_catalog() {
        writeln!(out, "# {}", ng.name)?;
        if let Some(labels) = ng.graph.labels() {
            writeln!(out, "# vertices {}", labels.join(" "))?;
        }
        write_graph(out, &ng.graph, format, &ng.name.to_string())?;
    }
    if !validate {
        return Ok(true);
    }
    let rep = validate_catalog();
    writeln!(out)?;
    for c in &rep.checks {
        let tag = match c.status {
            CheckStatus::Pass => "PASS",
            CheckStatus::Fail => "FAIL",
            CheckStatus::Note => "NOTE",
        };
        if c.detail.is_empty() {
            writeln!(out, "{tag} {}: {}", c.graph, c.fact)?;
        } else {
            writeln!(out, "{tag} {}: {} ({})", c.graph, c.fact, c.detail)?;
        }
    }
    let failed = rep.failures().len();
    writeln!(out, "{} checks, {failed} failed", rep.checks.len())?;
    Ok(rep.passed())
}

pub fn report_cmd(out: &mut dyn Write, path: &Path, json: bool) -> CliResult<Outcome> {
    let text = read_text(path)?;
    let mut records = Vec::new();
    for (i, line) in text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty()) {
        let r: ClassificationRecord = serde_json::from_str(line).map_err(|e| CliError::Input {
            path: path.to_path_buf(),
            message: format!("line {}: {e}", i + 1),
        })?;
        records.push(r);
    }
    if json {
        json_line(out, &report(&records))?;
    } else {
        writeln!(out, "{}", summarize(&records))?;
    }
    Ok(true)
}
