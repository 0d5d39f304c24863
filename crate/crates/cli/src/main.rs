mod args;
mod report;

use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::Parser;
use serde_json::{json, Value};

use args::{Cli, Command, ComplexInput, CoverCommand, GraphInput, WordArgs, WordCommand};
use cubist_core::complex::{
    check_flag, identify_surface, reduced_config_space_with_budget, CubeComplex, CubeLabel,
};
use cubist_core::graph::{
    delta_graph, is_planar, line_graph, opposite_graph, parse_builtin, subdivide, validate_cover,
    GraphMorphism, PlanarityVerdict, SimplicialGraph,
};
use cubist_core::maps::{
    check_cover_homomorphism, cover_homomorphism, fundamental_group_presentation,
    induced_homomorphism, phi_map_from_space, salvetti,
};
use cubist_core::raag::{
    conjugate, cyclic_delta_reduce, delta_reduce, identity_certificate, normal_form,
    search_square_relation_with_budget, words_equal, IdentityVerdict, Move, MoveCertificate,
    RaagPresentation,
};
use cubist_core::{ComplexError, RaagError};
use report::{emit, Failure, Inputs, Outcome};

const WARN_EDGES: usize = 40;
const WARN_POINTS: usize = 4;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    if let Err(e) = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs as usize)
        .build_global()
    {
        eprintln!("error: {e}");
        return ExitCode::from(1);
    }
    let command_line = command_line(std::env::args().skip(1));
    let mut inputs = Inputs::default();
    let (out, report) = destinations(&cli.command);
    let result = run(cli.command, &mut inputs).and_then(|o| {
        emit(
            &o,
            &command_line,
            &inputs,
            out.as_deref(),
            report.as_deref(),
        )
        .map(|_| o.violations)
    });
    match result {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(2),
        Err(f) => {
            match &f {
                Failure::Input(m) => eprintln!("error: {m}"),
                Failure::Budget(m) => eprintln!("budget exceeded: {m}"),
            }
            ExitCode::from(f.code())
        }
    }
}

/// The invocation minus output locations and thread count, so reports
/// written to different places by different pool sizes stay identical.
fn command_line(mut args: impl Iterator<Item = String>) -> String {
    const SKIP: [&str; 3] = ["--out", "--report", "--jobs"];
    let mut kept = Vec::new();
    while let Some(a) = args.next() {
        if SKIP.contains(&a.as_str()) {
            args.next();
        } else if !SKIP.iter().any(|s| a.starts_with(&format!("{s}="))) {
            kept.push(a);
        }
    }
    kept.join(" ")
}

type Dest = (Option<std::path::PathBuf>, Option<std::path::PathBuf>);

fn destinations(c: &Command) -> Dest {
    use Command::*;
    match c {
        ConfigSpace { output, .. }
        | DeltaGraph { output, .. }
        | Opposite { output, .. }
        | LineGraph { output, .. }
        | Subdivide { output, .. }
        | Salvetti { output, .. } => (output.out.clone(), output.report.report.clone()),
        Planar { report, .. }
        | CheckFlag { report, .. }
        | SurfaceId { report, .. }
        | Phi { report, .. }
        | Presentation { report, .. }
        | CoverHom { report, .. }
        | SearchSquare { report, .. }
        | Cover {
            command: CoverCommand::Validate { report, .. },
        } => (None, report.report.clone()),
        Word { command } => {
            let args = match command {
                WordCommand::Reduce { args, .. }
                | WordCommand::Nf { args, .. }
                | WordCommand::Cyclic { args, .. }
                | WordCommand::Equal { args, .. }
                | WordCommand::Conj { args, .. }
                | WordCommand::Certify { args, .. } => args,
            };
            (None, args.report.report.clone())
        }
    }
}

fn load_graph(g: &GraphInput, inputs: &mut Inputs) -> Result<SimplicialGraph, Failure> {
    if let Some(spec) = &g.builtin {
        inputs.record(format!("builtin:{spec}"), spec.as_bytes());
        return Ok(parse_builtin(spec)?);
    }
    let path = g.graph.as_ref().or(g.path.as_ref()).ok_or_else(|| {
        Failure::Input("no graph given (use a file path, --graph or --builtin)".into())
    })?;
    let text = inputs.read(path)?;
    Ok(SimplicialGraph::from_json_str(&text)?)
}

fn config_space(g: &SimplicialGraph, n: usize, max_cubes: u64) -> Result<CubeComplex, Failure> {
    if g.edge_count() > WARN_EDGES || n > WARN_POINTS {
        eprintln!(
            "warning: {} edges and {n} points is beyond the comfortable range ({WARN_EDGES} edges, {WARN_POINTS} points)",
            g.edge_count()
        );
    }
    reduced_config_space_with_budget(g, n, max_cubes as usize).map_err(|e| match e {
        ComplexError::BudgetExceeded(_) => Failure::Budget(e.to_string()),
        other => Failure::Input(other.to_string()),
    })
}

fn load_complex(c: &ComplexInput, inputs: &mut Inputs) -> Result<CubeComplex, Failure> {
    if let Some(path) = &c.complex {
        let text = inputs.read(path)?;
        return Ok(CubeComplex::from_json_str(&text)?);
    }
    let g = load_graph(&c.graph, inputs)?;
    let n =
        c.n.ok_or_else(|| Failure::Input("--n is required when building from a graph".into()))?;
    config_space(&g, n, c.budget.max_cubes)
}

/// A vertex label, or `v<k>` for the k-th vertex when no vertex has that label.
fn basepoint_label(x: &CubeComplex, text: &str) -> Result<CubeLabel, Failure> {
    let label =
        CubeLabel::parse(text).ok_or_else(|| Failure::Input(format!("bad basepoint {text:?}")))?;
    if x.find(0, &label).is_some() {
        return Ok(label);
    }
    match text.strip_prefix('v').and_then(|k| k.parse::<usize>().ok()) {
        Some(k) if k < x.count(0) => Ok(x.cube(0, k).label.clone()),
        _ => Ok(label),
    }
}

fn graph_summary(g: &SimplicialGraph) -> Value {
    json!({ "vertices": g.vertex_count(), "edges": g.edge_count() })
}

fn derived(g: &SimplicialGraph, what: &str) -> Outcome {
    Outcome::new(
        format!(
            "{what}: {} vertices, {} edges",
            g.vertex_count(),
            g.edge_count()
        ),
        graph_summary(g),
    )
    .with_artifact(g.to_json_string())
}

fn run(command: Command, inputs: &mut Inputs) -> Result<Outcome, Failure> {
    match command {
        Command::ConfigSpace {
            graph,
            n,
            surface,
            flag,
            budget,
            ..
        } => {
            let g = load_graph(&graph, inputs)?;
            let x = config_space(&g, n, budget.max_cubes)?;
            let mut body = json!({
                "n": n,
                "f_vector": x.f_vector(),
                "euler_characteristic": x.euler_characteristic(),
            });
            let mut summary = format!(
                "f-vector {:?}, chi = {}",
                x.f_vector(),
                x.euler_characteristic()
            );
            let mut violations = false;
            if surface {
                let s = identify_surface(&x)?;
                summary += &match (s.is_closed_surface, s.orientable) {
                    (true, Some(true)) => ", closed orientable surface".to_string(),
                    (true, _) => ", closed nonorientable surface".to_string(),
                    (false, _) => ", not a closed surface".to_string(),
                };
                body["surface"] = serde_json::to_value(s)?;
            }
            if flag {
                let r = check_flag(&x);
                summary += if r.passed {
                    ", links flag"
                } else {
                    ", flag violations"
                };
                violations = !r.passed;
                body["flag"] = serde_json::to_value(r)?;
            }
            Ok(Outcome::new(summary, body)
                .with_artifact(x.to_json_string())
                .with_violations(violations))
        }
        Command::DeltaGraph { graph, .. } => Ok(derived(
            &delta_graph(&load_graph(&graph, inputs)?),
            "delta graph",
        )),
        Command::Opposite { graph, .. } => Ok(derived(
            &opposite_graph(&load_graph(&graph, inputs)?),
            "opposite graph",
        )),
        Command::LineGraph { graph, .. } => Ok(derived(
            &line_graph(&load_graph(&graph, inputs)?),
            "line graph",
        )),
        Command::Subdivide { graph, k, .. } => Ok(derived(
            &subdivide(&load_graph(&graph, inputs)?, k as usize)?,
            "subdivision",
        )),
        Command::Planar { graph, .. } => {
            let g = load_graph(&graph, inputs)?;
            let name = |v: usize| g.name(v).to_string();
            let (summary, body) = match is_planar(&g) {
                PlanarityVerdict::Planar(rot) => {
                    let rotation: BTreeMap<String, Vec<String>> = rot
                        .order
                        .iter()
                        .enumerate()
                        .map(|(v, nbrs)| (name(v), nbrs.iter().map(|&w| name(w)).collect()))
                        .collect();
                    (
                        "planar".to_string(),
                        json!({ "planar": true, "rotation_system": rotation }),
                    )
                }
                PlanarityVerdict::NonPlanar(w) => (
                    format!("nonplanar ({:?} subdivision)", w.kind),
                    json!({
                        "planar": false,
                        "kuratowski": {
                            "kind": w.kind,
                            "branch_vertices": w.branch_vertices.iter().map(|&v| name(v)).collect::<Vec<_>>(),
                            "edges": w.edges.iter().map(|&(a, b)| [name(a), name(b)]).collect::<Vec<_>>(),
                        }
                    }),
                ),
            };
            Ok(Outcome::new(summary, body))
        }
        Command::Cover {
            command: CoverCommand::Validate { cover, sheets, .. },
        } => {
            let text = inputs.read(&cover)?;
            let p = GraphMorphism::from_json_str(&text)?;
            let verdict = validate_cover(&p, sheets as usize);
            let summary = match &verdict.failure {
                None => format!("valid {sheets}-sheeted cover"),
                Some(f) => format!("not a {sheets}-sheeted cover: {} ({})", f.reason, f.vertex),
            };
            let invalid = !verdict.valid;
            Ok(Outcome::new(summary, verdict).with_violations(invalid))
        }
        Command::CheckFlag { input, .. } => {
            let x = load_complex(&input, inputs)?;
            let r = check_flag(&x);
            let summary = if r.passed {
                format!("all {} vertex links are flag", r.vertices_checked)
            } else {
                format!("{} flag violations", r.violations.len())
            };
            let failed = !r.passed;
            Ok(Outcome::new(summary, r).with_violations(failed))
        }
        Command::SurfaceId { input, .. } => {
            let x = load_complex(&input, inputs)?;
            let s = identify_surface(&x)?;
            let summary = match (s.is_closed_surface, s.orientable) {
                (true, Some(true)) => format!(
                    "closed orientable surface, chi = {}",
                    s.euler_characteristic
                ),
                (true, _) => format!(
                    "closed nonorientable surface, chi = {}",
                    s.euler_characteristic
                ),
                (false, _) => format!("not a closed surface, chi = {}", s.euler_characteristic),
            };
            Ok(Outcome::new(summary, s))
        }
        Command::Salvetti { graph, max_dim, .. } => {
            let d = load_graph(&graph, inputs)?;
            let t = salvetti(&d, max_dim as usize);
            let flag = t.check_flag();
            let summary = format!(
                "f-vector {:?}, link {}",
                t.f_vector(),
                if flag.passed { "flag" } else { "not flag" }
            );
            let failed = !flag.passed;
            Ok(
                Outcome::new(summary, json!({ "f_vector": t.f_vector(), "flag": flag }))
                    .with_artifact(t.to_cube_complex().to_json_string())
                    .with_violations(failed),
            )
        }
        Command::Phi {
            graph,
            n,
            certify,
            relators,
            budget,
            ..
        } => {
            let g = load_graph(&graph, inputs)?;
            let x = config_space(&g, n, budget.max_cubes)?;
            let f = phi_map_from_space(&g, x, n)?;
            let target = f.target();
            let used: std::collections::BTreeSet<usize> =
                f.assignment().iter().map(|s| s.gen).collect();
            let mut body = json!({
                "source_f_vector": f.source().f_vector(),
                "target_f_vector": target.f_vector(),
                "generators_used": used.iter().map(|&g| target.graph().name(g)).collect::<Vec<_>>(),
            });
            let mut summary = format!(
                "cubical map from {:?} cubes onto {} of {} generators",
                f.source().f_vector(),
                used.len(),
                target.graph().vertex_count()
            );
            let mut violations = false;
            if certify {
                let r = f.check_local_isometry();
                summary += &if r.passed {
                    format!(
                        "; local isometry certified at {} vertices",
                        r.vertices_checked
                    )
                } else {
                    format!("; {} local isometry violations", r.violation_count)
                };
                violations |= !r.passed;
                body["local_isometry"] = serde_json::to_value(r)?;
            }
            if relators {
                let pres = fundamental_group_presentation(f.source(), None)?;
                let r = induced_homomorphism(&f, &pres)?;
                summary += &format!(
                    "; {} generators, {} relator images {}",
                    r.generator_count,
                    r.relator_count,
                    if r.all_relators_trivial {
                        "trivial"
                    } else {
                        "NOT all trivial"
                    }
                );
                violations |= !r.all_relators_trivial;
                body["induced_homomorphism"] = serde_json::to_value(r)?;
            }
            Ok(Outcome::new(summary, body).with_violations(violations))
        }
        Command::Presentation {
            input, basepoint, ..
        } => {
            let x = load_complex(&input, inputs)?;
            let base = basepoint.map(|b| basepoint_label(&x, &b)).transpose()?;
            let pres = fundamental_group_presentation(&x, base.as_ref())?;
            let body = json!({
                "basepoint": x.cube(0, pres.basepoint).label.to_string(),
                "generators": pres.generator_names(&x),
                "relators": pres.relators.iter().map(|r| pres.format_word(&x, r)).collect::<Vec<_>>(),
            });
            Ok(Outcome::new(
                format!(
                    "{} generators, {} relators",
                    pres.generators.len(),
                    pres.relators.len()
                ),
                body,
            ))
        }
        Command::CoverHom {
            graph,
            cover,
            sheets,
            max_len,
            ..
        } => {
            let d = load_graph(&graph, inputs)?;
            let text = inputs.read(&cover)?;
            let p = GraphMorphism::from_json_str(&text)?;
            let j = cover_homomorphism(&RaagPresentation::new(d), &p, sheets as usize)?;
            let r = check_cover_homomorphism(&j, max_len);
            let summary = format!(
                "{} test words: lifts {}, images {}, normal forms {}",
                r.corpus_size,
                if r.lifts_commute {
                    "commute"
                } else {
                    "DO NOT commute"
                },
                if r.all_images_reduced {
                    "reduced"
                } else {
                    "NOT all reduced"
                },
                if r.distinct_normal_forms {
                    "distinct"
                } else {
                    "collide"
                },
            );
            let failed = !r.passed();
            Ok(Outcome::new(summary, r).with_violations(failed))
        }
        Command::Word { command } => word(command, inputs),
        Command::SearchSquare {
            graph,
            max_len,
            budget,
            ..
        } => {
            let p = RaagPresentation::new(load_graph(&graph, inputs)?);
            let sols = search_square_relation_with_budget(&p, max_len, budget as u128).map_err(
                |e| match e {
                    RaagError::BudgetExceeded { .. } => Failure::Budget(e.to_string()),
                    other => Failure::Input(other.to_string()),
                },
            )?;
            let bad = sols.iter().filter(|s| !s.pairwise_commuting()).count();
            let body: Vec<Value> = sols
                .iter()
                .map(|s| {
                    json!({
                        "x": p.format_word(&s.x),
                        "y": p.format_word(&s.y),
                        "z": p.format_word(&s.z),
                        "pairwise_commuting": s.pairwise_commuting(),
                    })
                })
                .collect();
            let summary = format!("{} solutions, {} not pairwise commuting", sols.len(), bad);
            Ok(
                Outcome::new(summary, json!({ "max_len": max_len, "solutions": body }))
                    .with_violations(bad > 0),
            )
        }
    }
}

fn word_presentation(args: &WordArgs, inputs: &mut Inputs) -> Result<RaagPresentation, Failure> {
    let g = GraphInput {
        path: None,
        graph: args.graph.clone(),
        builtin: args.builtin.clone(),
    };
    Ok(RaagPresentation::new(load_graph(&g, inputs)?))
}

fn certificate_json(p: &RaagPresentation, c: &MoveCertificate) -> Value {
    let moves: Vec<Value> = c
        .moves
        .iter()
        .map(|m| match *m {
            Move::Insertion { position, letter } => {
                json!({ "move": "insertion", "position": position, "letter": p.format_letter(letter) })
            }
            Move::Deletion { position } => json!({ "move": "deletion", "position": position }),
            Move::Commutation { position } => json!({ "move": "commutation", "position": position }),
        })
        .collect();
    json!({ "start": p.format_word(&c.start), "end": p.format_word(&c.end), "moves": moves })
}

fn word(command: WordCommand, inputs: &mut Inputs) -> Result<Outcome, Failure> {
    match command {
        WordCommand::Reduce { args, word } => {
            let p = word_presentation(&args, inputs)?;
            let w = p.parse_word(&word)?;
            let (r, cert) = delta_reduce(&p, &w);
            cert.replay(&p)?;
            let summary = p.display(&r).to_string();
            Ok(Outcome::new(
                summary,
                json!({ "word": p.format_word(&w), "reduced": p.format_word(&r), "certificate": certificate_json(&p, &cert) }),
            ))
        }
        WordCommand::Nf { args, word } => {
            let p = word_presentation(&args, inputs)?;
            let w = p.parse_word(&word)?;
            let nf = normal_form(&p, &w);
            let summary = p.display(&nf).to_string();
            Ok(Outcome::new(
                summary,
                json!({ "word": p.format_word(&w), "normal_form": p.format_word(&nf) }),
            ))
        }
        WordCommand::Cyclic { args, word } => {
            let p = word_presentation(&args, inputs)?;
            let w = p.parse_word(&word)?;
            let c = cyclic_delta_reduce(&p, &w);
            let summary = p.display(&c).to_string();
            Ok(Outcome::new(
                summary,
                json!({ "word": p.format_word(&w), "cyclically_reduced": p.format_word(&c) }),
            ))
        }
        WordCommand::Equal {
            args,
            first,
            second,
        } => {
            let p = word_presentation(&args, inputs)?;
            let (a, b) = (p.parse_word(&first)?, p.parse_word(&second)?);
            let eq = words_equal(&p, &a, &b);
            Ok(Outcome::new(
                if eq { "equal" } else { "not equal" },
                json!({
                    "first": p.format_word(&a),
                    "second": p.format_word(&b),
                    "equal": eq,
                    "normal_forms": [p.format_word(&normal_form(&p, &a)), p.format_word(&normal_form(&p, &b))],
                }),
            ))
        }
        WordCommand::Conj {
            args,
            first,
            second,
        } => {
            let p = word_presentation(&args, inputs)?;
            let (a, b) = (p.parse_word(&first)?, p.parse_word(&second)?);
            let c = conjugate(&p, &a, &b);
            Ok(Outcome::new(
                if c { "conjugate" } else { "not conjugate" },
                json!({
                    "first": p.format_word(&a),
                    "second": p.format_word(&b),
                    "conjugate": c,
                    "cyclically_reduced": [
                        p.format_word(&cyclic_delta_reduce(&p, &a)),
                        p.format_word(&cyclic_delta_reduce(&p, &b)),
                    ],
                }),
            ))
        }
        WordCommand::Certify { args, word } => {
            let p = word_presentation(&args, inputs)?;
            let w = p.parse_word(&word)?;
            Ok(match identity_certificate(&p, &w) {
                IdentityVerdict::Trivial(cert) => Outcome::new(
                    format!("identity: certificate of {} moves", cert.len()),
                    json!({ "trivial": true, "certificate": certificate_json(&p, &cert) }),
                ),
                IdentityVerdict::NonTrivial(nf) => Outcome::new(
                    format!("not the identity; normal form {}", p.display(&nf)),
                    json!({ "trivial": false, "normal_form": p.format_word(&nf) }),
                )
                .with_violations(true),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::command_line;

    #[test]
    fn output_locations_and_jobs_are_dropped() {
        let args = [
            "phi",
            "--jobs",
            "4",
            "-n",
            "2",
            "--report=r.json",
            "--out",
            "x.json",
            "--certify",
        ];
        assert_eq!(
            command_line(args.iter().map(|s| s.to_string())),
            "phi -n 2 --certify"
        );
    }
}
