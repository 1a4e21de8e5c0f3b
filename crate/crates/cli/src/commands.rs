use std::fmt::Write as _;
use std::time::Instant;

use turanlab::counting::{count_copies, count_report};
use turanlab::extremal::{envelope, ex_exact, ex_multipartite, stability_profile, Ceilings};
use turanlab::graph::graph6_encode;
use turanlab::partition::{nearest_complete_multipartite, nearest_turan, SearchConfig};
use turanlab::symmetrization::{
    bipartization_run, default_max_steps, is_complete_multipartite, nice_check, zykov_run, SymmetrizationTrace,
    Termination,
};

use crate::input::{load_family, load_graph};
use crate::output::{csv_text, rational, OutputDir, RunManifest};
use crate::{Cli, CliError, Command, Mode, Target, CEILING_ENV};

macro_rules! out {
    ($buf:expr, $($arg:tt)*) => {
        writeln!($buf, $($arg)*).expect("writing to a String")
    };
}

/// Explicit flag, then the environment, then the library defaults.
fn ceilings(flag: Option<usize>) -> Result<Ceilings, CliError> {
    if let Some(c) = flag {
        return Ok(Ceilings::uniform(c));
    }
    match std::env::var(CEILING_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map(Ceilings::uniform)
            .map_err(|_| CliError::parse(format!("{CEILING_ENV}={v} is not a vertex count"))),
        Err(_) => Ok(Ceilings::default()),
    }
}

fn record_ceilings(m: &mut RunManifest, c: Ceilings) {
    m.ceiling("general", c.general).ceiling("hard_pruning", c.hard_pruning);
}

/// Runs the command and returns the exit status for a clean finish.
pub fn run(cli: &Cli) -> Result<u8, CliError> {
    let started = Instant::now();
    let dir = OutputDir::new(cli.out.as_deref())?;
    let mut report = String::new();
    let mut status = 0;
    let manifest = match &cli.command {
        Command::Count { pattern, host } => {
            let (h, g) = (load_graph(pattern)?, load_graph(host)?);
            out!(report, "{}", count_report(&h, &g));
            let mut m = RunManifest::new("count");
            m.param("pattern", pattern).param("host", host);
            m
        }
        Command::Ex { n, pattern, forbidden, multipartite_only, ceiling } => {
            let h = load_graph(pattern)?;
            let mut m = RunManifest::new("ex");
            m.param("n", n).param("pattern", pattern).param("pattern_graph6", graph6_encode(&h));
            if let Some(r) = multipartite_only {
                m.param("multipartite_only", r);
                let table = ex_multipartite(*n, &h, *r)?;
                out!(report, "value={}", table.value);
                out!(report, "composition={}", table.best);
                let rows = table.table.iter().map(|(p, c)| vec![p.to_string(), c.to_string()]);
                dir.write("table.csv", &csv_text(&["composition", "copies"], rows)?)?;
            } else {
                let family = load_family(forbidden)?;
                let limits = ceilings(*ceiling)?;
                m.param("forbidden", forbidden.join(" "));
                m.param("forbidden_graph6", family.members().iter().map(graph6_encode).collect::<Vec<_>>().join(" "));
                record_ceilings(&mut m, limits);
                let found = ex_exact(*n, &h, &family, limits)?;
                out!(report, "value={}", found.value);
                out!(report, "graphs_scanned={}", found.graphs_scanned);
                let mut list = String::new();
                for f in &found.extremal_graphs {
                    out!(report, "extremal={f}");
                    out!(list, "{f}");
                }
                dir.write("extremal.g6", &list)?;
            }
            m
        }
        Command::Symmetrize { host, pattern, r, mode, k, max_steps } => {
            let (g, h) = (load_graph(host)?, load_graph(pattern)?);
            let steps = max_steps.unwrap_or_else(|| default_max_steps(g.n()));
            let mut m = RunManifest::new("symmetrize");
            m.param("host", host).param("pattern", pattern).param("max_steps", steps);
            let trace = match mode {
                Mode::Zykov => {
                    let r = r.ok_or_else(|| CliError {
                        code: CliError::PRECONDITION,
                        message: "zykov mode needs the part bound r".into(),
                    })?;
                    m.param("mode", "zykov").param("r", r);
                    zykov_run(&g, &h, r, steps)?
                }
                Mode::Bipartize => {
                    m.param("mode", "bipartize").param("k", k);
                    let run = bipartization_run(&g, &h, *k, steps)?;
                    let removed: Vec<String> = run.removed.iter().map(|(a, b)| format!("{a}-{b}")).collect();
                    out!(report, "removed={}", removed.join(" "));
                    run.trace
                }
            };
            write_trace(&trace, &h, &mut report, &dir)?;
            if trace.status != Termination::Reached {
                status = CliError::NON_TERMINATION;
            }
            m
        }
        Command::Distance { host, r, target, exact_ceiling, allow_heuristic } => {
            let g = load_graph(host)?;
            let config = SearchConfig { exact_ceiling: *exact_ceiling, allow_heuristic: *allow_heuristic };
            let found = match target {
                Target::Turan => nearest_turan(&g, *r, &config)?,
                Target::Multipartite => nearest_complete_multipartite(&g, *r, &config)?,
            };
            out!(report, "distance={}", found.distance);
            out!(report, "deletions={}", found.deletions);
            out!(report, "additions={}", found.additions);
            out!(report, "partition={}", found.assignment.rgs_string());
            out!(report, "mode={}", found.mode.as_str());
            let mut m = RunManifest::new("distance");
            m.param("host", host).param("r", r).param("allow_heuristic", allow_heuristic);
            m.param("target", if *target == Target::Turan { "turan" } else { "multipartite" });
            m.ceiling("exact", *exact_ceiling);
            m
        }
        Command::Profile { n, pattern, forbidden, r, ceiling } => {
            let h = load_graph(pattern)?;
            let family = load_family(std::slice::from_ref(forbidden))?;
            let limits = ceilings(*ceiling)?;
            let profile = stability_profile(*n, &h, &family, *r, limits)?;
            let rows = profile.rows.iter().map(|row| {
                vec![
                    row.form.to_string(),
                    row.copies.to_string(),
                    row.deficiency.to_string(),
                    row.dist_turan.to_string(),
                    row.dist_multipartite.to_string(),
                    rational(&profile.delta(row)),
                    rational(&profile.epsilon(row.dist_turan)),
                    rational(&profile.epsilon(row.dist_multipartite)),
                ]
            });
            let header = [
                "graph6",
                "copies",
                "deficiency",
                "dist_turan",
                "dist_multipartite",
                "delta",
                "epsilon_turan",
                "epsilon_multipartite",
            ];
            dir.write("profile.csv", &csv_text(&header, rows)?)?;
            let points = envelope(&profile).into_iter().map(|p| {
                vec![p.deficiency.to_string(), p.max_dist_turan.to_string(), p.max_dist_multipartite.to_string()]
            });
            let env_csv = csv_text(&["deficiency", "max_dist_turan", "max_dist_multipartite"], points)?;
            dir.write("envelope.csv", &env_csv)?;
            out!(report, "ex={}", profile.ex);
            out!(report, "graphs={}", profile.rows.len());
            out!(report, "turan_uniquely_extremal={}", profile.turan_uniquely_extremal());
            report.push_str(&env_csv);
            let mut m = RunManifest::new("profile");
            m.param("n", n).param("pattern", pattern).param("forbidden", forbidden).param("r", r);
            record_ceilings(&mut m, limits);
            m
        }
        Command::Nice { family } => {
            let f = load_family(family)?;
            let check = nice_check(&f);
            out!(report, "verdict={}", if check.is_nice() { "nice" } else { "not-nice" });
            for w in &check.witnesses {
                out!(report, "witness member={} u={} v={} closure={}", w.member, w.u, w.v, graph6_encode(&w.closure));
            }
            let mut m = RunManifest::new("nice");
            m.param("family", family.join(" "));
            m
        }
    };
    print!("{report}");
    if dir.enabled() {
        let name = format!("{}.txt", manifest.command);
        dir.write(&name, &report)?;
        dir.manifest(&manifest, started.elapsed())?;
    }
    Ok(status)
}

fn write_trace(
    trace: &SymmetrizationTrace,
    h: &turanlab::Graph,
    report: &mut String,
    dir: &OutputDir,
) -> Result<(), CliError> {
    let log = trace.to_log();
    report.push_str(&log);
    out!(report, "initial_copies={}", count_copies(h, &trace.initial));
    out!(report, "final_copies={}", count_copies(h, &trace.result));
    out!(report, "steps={}", trace.steps.len());
    if let Some(parts) = is_complete_multipartite(&trace.result) {
        out!(report, "composition={parts}");
    }
    out!(report, "final={}", graph6_encode(&trace.result));
    out!(report, "status={}", trace.status.as_str());
    dir.write("trace.log", &log)?;
    dir.write("final.g6", &format!("{}\n", graph6_encode(&trace.result)))
}
