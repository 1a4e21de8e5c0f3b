//! Graph arguments: a file in graph6 or edge-list form, or a named shortcut.

use std::path::Path;

use turanlab::graph::{complete, complete_multipartite, cycle, parse_graphs, path, turan_graph};
use turanlab::{Graph, GraphFamily, PartComposition};

use crate::CliError;

/// Expands `K<n>`, `K<a>,<b>[,...]`, `C<n>`, `P<n>` and `T<n>:<r>`.
pub fn shortcut(spec: &str) -> Option<turanlab::Result<Graph>> {
    let (head, rest) = spec.split_at(spec.char_indices().nth(1).map_or(spec.len(), |(i, _)| i));
    let num = |s: &str| s.parse::<usize>().ok();
    match head {
        "K" => {
            let parts: Option<Vec<usize>> = rest.split(',').map(num).collect();
            match parts?.as_slice() {
                [n] => Some(complete(*n)),
                many => Some(PartComposition::new(many.to_vec()).and_then(|p| complete_multipartite(&p))),
            }
        }
        "C" => Some(cycle(num(rest)?)),
        "P" => Some(path(num(rest)?)),
        "T" => {
            let (n, r) = rest.split_once(':')?;
            Some(turan_graph(num(n)?, num(r)?))
        }
        _ => None,
    }
}

/// Every graph named by `arg`. An existing file wins over a shortcut of the
/// same name; `+` joins several arguments into one list.
pub fn load_graphs(arg: &str) -> Result<Vec<Graph>, CliError> {
    if Path::new(arg).is_file() {
        let text = std::fs::read_to_string(arg).map_err(|e| CliError::parse(format!("{arg}: {e}")))?;
        let graphs = parse_graphs(&text).map_err(|e| CliError::parse(format!("{arg}: {e}")))?;
        if graphs.is_empty() {
            return Err(CliError::parse(format!("{arg}: no graph found")));
        }
        return Ok(graphs);
    }
    if arg.contains('+') {
        let mut out = Vec::new();
        for piece in arg.split('+') {
            out.extend(load_graphs(piece)?);
        }
        return Ok(out);
    }
    match shortcut(arg) {
        Some(g) => g.map(|g| vec![g]).map_err(|e| CliError::parse(format!("{arg}: {e}"))),
        None => Err(CliError::parse(format!("{arg}: no such file and not a graph shortcut"))),
    }
}

/// Exactly one graph.
pub fn load_graph(arg: &str) -> Result<Graph, CliError> {
    let mut graphs = load_graphs(arg)?;
    if graphs.len() != 1 {
        return Err(CliError::parse(format!("{arg}: expected one graph, found {}", graphs.len())));
    }
    Ok(graphs.remove(0))
}

pub fn load_family(args: &[String]) -> Result<GraphFamily, CliError> {
    let mut members = Vec::new();
    for a in args {
        members.extend(load_graphs(a)?);
    }
    Ok(GraphFamily::new(members))
}
