//! Result files and the run manifest.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Duration;

use num_rational::Ratio;

use crate::CliError;

/// Always `p/q`, also for integers.
pub fn rational(r: &Ratio<i128>) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Key-value lines sufficient to re-run a command. `wall_time_ms` is the
/// only entry that differs between identical runs.
#[derive(Debug, Default)]
pub struct RunManifest {
    pub command: String,
    pub parameters: Vec<(String, String)>,
    pub seed: u64,
    pub ceilings: Vec<(String, usize)>,
}

impl RunManifest {
    pub fn new(command: &str) -> Self {
        RunManifest { command: command.into(), ..Default::default() }
    }

    pub fn param(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.parameters.push((key.into(), value.to_string()));
        self
    }

    pub fn ceiling(&mut self, key: &str, value: usize) -> &mut Self {
        self.ceilings.push((key.into(), value));
        self
    }

    pub fn render(&self, wall_time: Duration) -> String {
        let mut out = String::new();
        let mut line = |k: &str, v: &dyn std::fmt::Display| writeln!(out, "{k}={v}").expect("writing to a String");
        line("command", &self.command);
        for (k, v) in &self.parameters {
            line(&format!("param.{k}"), v);
        }
        line("seed", &self.seed);
        for (k, v) in &self.ceilings {
            line(&format!("ceiling.{k}"), v);
        }
        line("tool_version", &env!("CARGO_PKG_VERSION"));
        line("wall_time_ms", &wall_time.as_millis());
        out
    }
}

/// Files for one command, written only when an output directory is given.
pub struct OutputDir {
    root: Option<PathBuf>,
}

impl OutputDir {
    pub fn new(root: Option<&Path>) -> Result<Self, CliError> {
        if let Some(r) = root {
            fs::create_dir_all(r).map_err(|e| CliError::io(r, e))?;
        }
        Ok(OutputDir { root: root.map(Path::to_path_buf) })
    }

    pub fn enabled(&self) -> bool {
        self.root.is_some()
    }

    pub fn write(&self, name: &str, contents: &str) -> Result<(), CliError> {
        match &self.root {
            Some(root) => {
                let p = root.join(name);
                fs::write(&p, contents).map_err(|e| CliError::io(&p, e))
            }
            None => Ok(()),
        }
    }

    pub fn manifest(&self, manifest: &RunManifest, wall_time: Duration) -> Result<(), CliError> {
        self.write("manifest.txt", &manifest.render(wall_time))
    }
}

/// CSV text from a header and rows of already formatted fields.
pub fn csv_text(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let fail = |e: csv::Error| CliError::other(format!("csv: {e}"));
    w.write_record(header).map_err(fail)?;
    for row in rows {
        w.write_record(&row).map_err(fail)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::other(format!("csv: {e}")))?;
    Ok(String::from_utf8(bytes).expect("fields are UTF-8"))
}
