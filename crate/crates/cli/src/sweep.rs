//! Parallel sweeps over integer parameters with an optional checkpoint file.
//!
//! Items are processed in chunks on the rayon pool. After each chunk the
//! finished outcomes are written to the state file (via a temporary file and
//! a rename), and a rerun with the same file skips them. Results always come
//! back in the order of `items`, whatever order the workers finished in.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::report::SCHEMA;
use crate::CliError;

const CHUNK: usize = 64;

#[derive(Clone, Debug, Default, Serialize, Deserialize, PartialEq)]
pub struct Outcome {
    pub row: Vec<Value>,
    pub violations: Vec<Value>,
    pub checked: u64,
}

#[derive(Serialize, Deserialize)]
struct State {
    schema: String,
    command: String,
    params: String,
    done: BTreeMap<i64, Outcome>,
}

fn load(path: &Path, command: &str, params: &str) -> Result<BTreeMap<i64, Outcome>, CliError> {
    if !path.exists() {
        return Ok(BTreeMap::new());
    }
    let text = fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    let state: State =
        serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("{}: not a state file: {e}", path.display())))?;
    if state.schema != SCHEMA || state.command != command || state.params != params {
        return Err(CliError::Usage(format!(
            "{} belongs to `{} {}`, not `{command} {params}`",
            path.display(),
            state.command,
            state.params
        )));
    }
    Ok(state.done)
}

fn save(path: &Path, command: &str, params: &str, done: &BTreeMap<i64, Outcome>) -> Result<(), CliError> {
    let state = State { schema: SCHEMA.into(), command: command.into(), params: params.into(), done: done.clone() };
    let tmp = path.with_extension("tmp");
    let text = serde_json::to_string(&state).expect("state serializes");
    fs::write(&tmp, text)
        .and_then(|_| fs::rename(&tmp, path))
        .map_err(|e| CliError::Failure(format!("{}: {e}", path.display())))
}

pub fn run<F>(command: &str, params: &str, items: &[i64], resume: Option<&Path>, f: F) -> Result<Vec<Outcome>, CliError>
where
    F: Fn(i64) -> Result<Outcome, CliError> + Sync,
{
    let mut done = match resume {
        Some(p) => load(p, command, params)?,
        None => BTreeMap::new(),
    };
    let todo: Vec<i64> = items.iter().copied().filter(|i| !done.contains_key(i)).collect();
    for chunk in todo.chunks(CHUNK) {
        let results: Vec<(i64, Outcome)> =
            chunk.par_iter().map(|&i| f(i).map(|o| (i, o))).collect::<Result<_, _>>()?;
        done.extend(results);
        if let Some(p) = resume {
            save(p, command, params, &done)?;
        }
    }
    Ok(items.iter().map(|i| done[i].clone()).collect())
}
