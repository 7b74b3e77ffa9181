mod args;
mod output;

use std::io::{self, Read, Write};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::Parser;
use cspkit::actions::{ActionId, ActionSpec, ACTION_IDS};
use cspkit::bijections::{BijectionId, BIJECTION_IDS};
use cspkit::csp::{self, Sweep, VerificationReport, NEGATIVE_CONTROLS, TRIPLES};
use cspkit::families::{CombObject, FamilySpec, FAMILY_IDS};
use cspkit::qpoly::{named_polynomial, NamedPoly};
use cspkit::stats::{distribution, StatId, STAT_IDS};
use cspkit::Params;
use serde_json::json;

use args::{Cli, Command, Format, ListKind};
use output::Out;

/// Verification outcome, separate from usage errors.
enum Status {
    Ok,
    Mismatch,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::Mismatch) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<Status> {
    if let Some(t) = cli.threads.filter(|&t| t > 0) {
        rayon::ThreadPoolBuilder::new().num_threads(t).build_global().context("starting worker pool")?;
    }
    let mut out = Out::open(cli.output.as_deref(), cli.format)?;
    let status = match &cli.command {
        Command::Poly { id, params } => poly(&mut out, id, &params.params()),
        Command::Enumerate { family, params } => enumerate(&mut out, family, &params.params()),
        Command::Stat { family, stat, params, shift } => stat_cmd(&mut out, family, stat, &params.params(), *shift),
        Command::Biject { id, inverse, period, vertices } => biject(&mut out, id, *inverse, *period, *vertices),
        Command::Orbits { family, action, order, params } => orbits(&mut out, family, action, *order, &params.params()),
        Command::Verify { triple, n_range, params, full_sweep } => {
            let info = csp::triple_info(triple).ok_or_else(|| anyhow!("unknown triple `{triple}`"))?;
            let jobs: Vec<(&'static str, Params)> = n_range
                .clone()
                .flat_map(|n| csp::parameter_grid(info.id, n))
                .filter(|p| params.admits(p))
                .map(|p| (info.id, p))
                .collect();
            if jobs.is_empty() {
                bail!("{} has no in-domain parameters for n in {:?}", info.id, n_range);
            }
            verify(&mut out, cli, &jobs, sweep(*full_sweep))
        }
        Command::VerifyAll { max_n, full_sweep } => verify(&mut out, cli, &csp::manifest_jobs(*max_n), sweep(*full_sweep)),
        Command::List { what } => list(&mut out, *what),
    }?;
    out.finish()?;
    Ok(status)
}

fn sweep(full: bool) -> Sweep {
    if full {
        Sweep::Full
    } else {
        Sweep::Divisors
    }
}

fn family(id: &str, p: &Params) -> Result<FamilySpec> {
    Ok(FamilySpec::from_id(id, p)?)
}

fn poly(out: &mut Out, id: &str, p: &Params) -> Result<Status> {
    let f = named_polynomial(&NamedPoly::from_id(id, p)?)?;
    let coeffs: Vec<String> = f.coeffs().iter().map(ToString::to_string).collect();
    match out.format {
        Format::Text => writeln!(out, "{f}")?,
        Format::Json => out.json(&json!({
            "schema": 1,
            "id": id.to_ascii_uppercase(),
            "params": p.to_string(),
            "polynomial": f.to_string(),
            "coefficients": coeffs,
        }))?,
        Format::Csv => out.csv(["degree", "coefficient"], coeffs.iter().enumerate().map(|(i, c)| [i.to_string(), c.clone()]))?,
    }
    Ok(Status::Ok)
}

fn object_json(obj: &CombObject) -> Result<String> {
    Ok(serde_json::to_string(obj)?)
}

fn enumerate(out: &mut Out, id: &str, p: &Params) -> Result<Status> {
    let objects = family(id, p)?.enumerate()?;
    match out.format {
        Format::Text | Format::Json => {
            for obj in &objects {
                writeln!(out, "{}", object_json(obj)?)?;
            }
        }
        Format::Csv => {
            let rows = objects.iter().enumerate().map(|(i, o)| Ok([i.to_string(), object_json(o)?])).collect::<Result<Vec<_>>>()?;
            out.csv(["index", "object"], rows)?;
        }
    }
    Ok(Status::Ok)
}

fn stat_cmd(out: &mut Out, fam: &str, stat: &str, p: &Params, shift: i64) -> Result<Status> {
    let spec = family(fam, p)?;
    let id: StatId = stat.parse()?;
    let dist = distribution(&spec, id, shift)?;
    let counts: Vec<String> = dist.coeffs().iter().map(ToString::to_string).collect();
    match out.format {
        Format::Text => writeln!(out, "{dist}")?,
        Format::Json => out.json(&json!({
            "schema": 1,
            "family": spec.to_string(),
            "stat": id.name(),
            "shift": shift,
            "polynomial": dist.to_string(),
            "counts": counts,
        }))?,
        Format::Csv => out.csv(
            ["value", "count"],
            counts.iter().enumerate().filter(|(_, c)| c.as_str() != "0").map(|(i, c)| [i.to_string(), c.clone()]),
        )?,
    }
    Ok(Status::Ok)
}

fn biject(out: &mut Out, id: &str, inverse: bool, period: Option<usize>, vertices: Option<usize>) -> Result<Status> {
    let mut bij: BijectionId = id.parse()?;
    if let BijectionId::BwToNcmSym { .. } = bij {
        let period = period.ok_or_else(|| anyhow!("BW_TO_NCM_SYM needs --period"))?;
        bij = BijectionId::BwToNcmSym { period, vertices: vertices.unwrap_or(2 * period) };
    }
    let mut input = String::new();
    io::stdin().read_to_string(&mut input).context("reading standard input")?;
    let mut rows = Vec::new();
    for (i, item) in serde_json::Deserializer::from_str(&input).into_iter::<CombObject>().enumerate() {
        let obj = item.with_context(|| format!("object {} on standard input", i + 1))?;
        let img = if inverse { bij.inverse(&obj)? } else { bij.apply(&obj)? };
        rows.push((obj, img));
    }
    match out.format {
        Format::Text | Format::Json => {
            for (_, img) in &rows {
                writeln!(out, "{}", object_json(img)?)?;
            }
        }
        Format::Csv => {
            let cells = rows.iter().map(|(a, b)| Ok([object_json(a)?, object_json(b)?])).collect::<Result<Vec<_>>>()?;
            out.csv(["input", "output"], cells)?;
        }
    }
    Ok(Status::Ok)
}

fn orbits(out: &mut Out, fam: &str, action: &str, order: usize, p: &Params) -> Result<Status> {
    let spec = family(fam, p)?;
    let a = ActionSpec::new(action.parse::<ActionId>()?, order);
    let profile = csp::orbit_profile(&spec, &a)?;
    let total: usize = profile.iter().map(|(s, c)| s * c).sum();
    match out.format {
        Format::Text => {
            writeln!(out, "{spec} under {a}: {total} objects")?;
            for (size, count) in &profile {
                writeln!(out, "  size {size}: {count}")?;
            }
        }
        Format::Json => out.json(&json!({
            "schema": 1,
            "family": spec.to_string(),
            "action": a.to_string(),
            "total": total,
            "profile": profile.iter().map(|(s, c)| json!({"size": s, "count": c})).collect::<Vec<_>>(),
        }))?,
        Format::Csv => out.csv(["size", "count"], profile.iter().map(|(s, c)| [s.to_string(), c.to_string()]))?,
    }
    Ok(Status::Ok)
}

fn is_control(id: &str) -> bool {
    NEGATIVE_CONTROLS.iter().any(|c| c.id == id)
}

fn verify(out: &mut Out, cli: &Cli, jobs: &[(&'static str, Params)], sweep: Sweep) -> Result<Status> {
    let start = Instant::now();
    let results = csp::verify_batch_with(jobs, sweep);
    let total_millis = start.elapsed().as_millis();
    let mut reports: Vec<VerificationReport> = Vec::with_capacity(results.len());
    for ((id, p), r) in jobs.iter().zip(results) {
        reports.push(r.with_context(|| format!("{id} [{p}]"))?);
    }
    let failed: Vec<&VerificationReport> = reports.iter().filter(|r| !r.pass).collect();
    let counted = failed.iter().filter(|r| cli.strict || !is_control(&r.triple)).count();
    match out.format {
        Format::Text => {
            for r in &reports {
                write!(out, "{r}")?;
                if cli.timings {
                    writeln!(out, "  time {} ms", r.millis)?;
                }
            }
            writeln!(out, "{} instances, {} passed, {} failed", reports.len(), reports.len() - failed.len(), failed.len())?;
            if cli.timings {
                writeln!(out, "total {total_millis} ms on {} threads", rayon::current_num_threads())?;
            }
        }
        Format::Json => {
            let mut doc = json!({
                "schema": 1,
                "reports": reports,
                "summary": {
                    "instances": reports.len(),
                    "passed": reports.len() - failed.len(),
                    "failed": failed.len(),
                },
            });
            if cli.timings {
                doc["metadata"] = json!({
                    "threads": rayon::current_num_threads(),
                    "total_millis": total_millis,
                    "millis": reports.iter().map(|r| r.millis).collect::<Vec<_>>(),
                });
            }
            out.json(&doc)?;
        }
        Format::Csv => {
            let mut rows = Vec::new();
            for r in &reports {
                let tagged = r.rows.iter().map(|row| ("divisor", row)).chain(r.spot_check.iter().map(|row| ("spot", row)));
                for (kind, row) in tagged {
                    rows.push([
                        r.triple.clone(),
                        r.params.clone(),
                        kind.to_string(),
                        row.d.to_string(),
                        row.order.to_string(),
                        row.fixed.to_string(),
                        row.eval.clone(),
                        row.ok.to_string(),
                        r.pass.to_string(),
                    ]);
                }
            }
            out.csv(["triple", "params", "kind", "d", "order", "fixed", "eval", "ok", "pass"], rows)?;
            if cli.timings {
                eprintln!("total {total_millis} ms on {} threads", rayon::current_num_threads());
            }
        }
    }
    Ok(if counted > 0 { Status::Mismatch } else { Status::Ok })
}

fn list(out: &mut Out, what: ListKind) -> Result<Status> {
    let items: Vec<String> = match what {
        ListKind::Triples => TRIPLES
            .iter()
            .chain(NEGATIVE_CONTROLS)
            .map(|t| format!("{}\t{}\t{}\t{}", t.id, t.family, t.action, t.polynomial))
            .collect(),
        ListKind::Families => FAMILY_IDS.iter().map(|s| s.to_string()).collect(),
        ListKind::Stats => STAT_IDS.iter().map(|s| s.name().to_string()).collect(),
        ListKind::Actions => ACTION_IDS.iter().map(|a| a.name().to_string()).collect(),
        ListKind::Bijections => BIJECTION_IDS.iter().map(|s| s.to_string()).collect(),
    };
    match out.format {
        Format::Text => {
            for i in &items {
                writeln!(out, "{i}")?;
            }
        }
        Format::Json => out.json(&json!({ "schema": 1, "items": items }))?,
        Format::Csv => out.csv(["id"], items.iter().map(|i| [i.split('\t').next().unwrap_or_default().to_string()]))?,
    }
    Ok(Status::Ok)
}
